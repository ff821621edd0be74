//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use orbit_atlas::checks::{self, CheckOptions};
use orbit_atlas::classifier::{self, SphericalPairTable};
use orbit_atlas::duality;
use orbit_atlas::exec::Execution;
use orbit_atlas::lie;
use orbit_atlas::orbit::{self, Factor, OrbitDatum, ReductionMode, ReductiveFactorList};
use orbit_atlas::partitions::{Family, GroupType, Partition};
use orbit_atlas::report::{self, Config};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn candidates_match(family: Family, max_dim: usize) -> Outcome {
    let res = classifier::enumerate_candidates(family, max_dim, true).map_err(|e| e.to_string())?;
    let mut wrong = Vec::new();
    let mut dims = BTreeSet::new();
    for (o, v) in &res {
        dims.insert(o.group.dim);
        if classifier::reference_list(o.group).contains(&o.lambda) != v.is_candidate() {
            wrong.push(format!("{o}: {v}"));
        }
    }
    for &n in &dims {
        let group = GroupType::new(family, n).map_err(|e| e.to_string())?;
        let found = res.iter().filter(|(o, _)| o.group == group).count();
        if classifier::reference_list(group).len() > found {
            wrong.push(format!("{group}: reference list has orbits missing from the enumeration"));
        }
    }
    if wrong.is_empty() {
        Ok(format!("{family:?} up to {max_dim}: {} even orbits", res.len()))
    } else {
        Err(wrong.join("; "))
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let t = Instant::now();
    let out = f()?;
    let took = t.elapsed();
    if took > limit {
        return Err(format!("{out}, but took {took:.1?} (limit {limit:?})"));
    }
    Ok(format!("{out} in {took:.1?}"))
}

fn criterion_1() -> Outcome {
    timed(Duration::from_secs(60), || {
        let d = candidates_match(Family::D, 16)?;
        let b = candidates_match(Family::B, 15)?;
        Ok(format!("{d}; {b}"))
    })
}

fn criterion_2() -> Outcome {
    timed(Duration::from_secs(60), || candidates_match(Family::C, 16))
}

fn suite_outcome(s: orbit_atlas::checks::SuiteResult) -> Outcome {
    if s.passed() {
        Ok(format!("{} cases", s.cases))
    } else {
        Err(format!("{} of {} cases fail: {}", s.failures.len(), s.cases, s.failures.join("; ")))
    }
}

fn options(max_dim: usize, oracle_bound: usize) -> CheckOptions {
    CheckOptions { max_dim, oracle_bound, trials: 8, seed: 0, exec: Execution::default() }
}

fn criterion_3() -> Outcome {
    suite_outcome(checks::non_even_suite(&options(12, 6), SphericalPairTable::embedded()).map_err(|e| e.to_string())?)
}

fn criterion_4() -> Outcome {
    let mut n = 0;
    for k in 2..=8usize {
        for a in 1..k {
            let r = 2 * k - 2 * a + 1;
            let o = OrbitDatum::new(GroupType::d(2 * k), Partition::hook(2 * a - 1, r)).map_err(|e| e.to_string())?;
            let h = ReductiveFactorList::new(vec![Factor::o(r)]);
            let dim = orbit::whittaker_induction_dim(&o, &h, 0).map_err(|e| e.to_string())?;
            let reduced = orbit::reduction_dims(4 * k * a, GroupType::c(2 * a), ReductionMode::Whittaker)
                .map_err(|e| e.to_string())?;
            let want = 4 * k * a - 2 * a * a;
            if dim != want || reduced != want {
                return Err(format!("k={k}, a={a}: induction {dim}, reduction {reduced}, expected {want}"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} (k, a) pairs"))
}

fn criterion_5() -> Outcome {
    let got = duality::bv_dual(GroupType::b(7), &"3,1,1,1,1".parse().unwrap()).map_err(|e| e.to_string())?;
    let want = (GroupType::c(6), "4,2".parse::<Partition>().unwrap());
    if got != want {
        return Err(format!("B:7 [3,1,1,1,1] maps to {} {}", got.0, got.1));
    }
    let s = suite_outcome(checks::bv_suite(12, 10).map_err(|e| e.to_string())?)?;
    Ok(format!("B:7 [3,1^4] -> C:6 [4,2]; range and order laws: {s}"))
}

fn criterion_6() -> Outcome {
    timed(Duration::from_secs(300), || {
        let suites = checks::oracle_suites(&options(10, 10)).map_err(|e| e.to_string())?;
        let mut parts = Vec::new();
        for s in suites {
            let name = s.name.clone();
            parts.push(format!("{name}: {}", suite_outcome(s)?));
        }
        Ok(parts.join(", "))
    })
}

fn expect_transfer(source: &OrbitDatum, target: GroupType, want: Partition) -> Result<(), String> {
    let got = duality::moment_transfer(source, target).map_err(|e| format!("{source} -> {target}: {e}"))?;
    if got.lambda == want {
        Ok(())
    } else {
        Err(format!("{source} -> {target}: got {}, expected {want}", got.lambda))
    }
}

fn ones_after(head: usize, ones: usize) -> Partition {
    Partition::from_unsorted(std::iter::once(head).filter(|&p| p > 0).chain(std::iter::repeat_n(1, ones)).collect())
}

fn criterion_7() -> Outcome {
    let mut figures = 0;
    for k in 1..=8usize {
        for a in 1..=k {
            if a < k {
                let src = OrbitDatum::new(GroupType::c(2 * k - 2 * a), Partition::rectangle(2 * k - 2 * a, 1)).unwrap();
                expect_transfer(&src, GroupType::d(2 * k), ones_after(2 * k - 2 * a - 1, 2 * a + 1))?;
                figures += 1;
            }
            let src = OrbitDatum::new(GroupType::c(2 * a), Partition::rectangle(2 * a, 1)).unwrap();
            expect_transfer(&src, GroupType::d(2 * k), ones_after(2 * a - 1, 2 * k - 2 * a + 1))?;
            let src = OrbitDatum::new(GroupType::d(2 * a), Partition::hook(2 * a - 1, 1)).unwrap();
            expect_transfer(&src, GroupType::c(2 * k), ones_after(2 * a - 2, 2 * k - 2 * a + 2))?;
            figures += 2;
        }
    }
    let mut outputs = 0;
    for family in [Family::B, Family::C, Family::D] {
        for src in classifier::family_orbits(family, 10, false) {
            let targets: Vec<GroupType> = (1..=14)
                .flat_map(|n| match family {
                    Family::C => vec![GroupType::new(Family::B, n), GroupType::new(Family::D, n)],
                    _ => vec![GroupType::new(Family::C, n)],
                })
                .filter_map(Result::ok)
                .collect();
            for t in targets {
                match duality::moment_transfer(&src, t) {
                    Ok(_) => outputs += 1,
                    Err(orbit_atlas::Error::Precondition(_)) => {}
                    Err(e) => return Err(format!("{src} -> {t}: {e}")),
                }
            }
        }
    }
    Ok(format!("{figures} figure instances, {outputs} transfers all type-valid"))
}

fn criterion_8() -> Outcome {
    let err = |e: orbit_atlas::Error| e.to_string();
    for n in 1..=6 {
        let (l, h) = lie::orthogonal_pair(n, 1).map_err(err)?;
        if !lie::spherical_certify(&l, &h, 8, 0).map_err(err)?.is_certified() {
            return Err(format!("so_{n} in so_{} not certified", n + 1));
        }
    }
    let gl2 = lie::build_algebra(GroupType::a(2)).map_err(err)?;
    let sp2 = lie::build_algebra(GroupType::c(2)).map_err(err)?;
    if !lie::spherical_certify(&gl2, &sp2.basis, 8, 0).map_err(err)?.is_certified() {
        return Err("sp_2 in gl_2 not certified".into());
    }
    for n in 1..=5 {
        let (l, h) = lie::orthogonal_pair(n, 2).map_err(err)?;
        if let lie::Certificate::Certified { trial } = lie::spherical_certify(&l, &h, 64, 0).map_err(err)? {
            return Err(format!("so_{n} in so_{} certified at trial {trial}", n + 2));
        }
    }
    Ok("so_n < so_(n+1) for n <= 6 and sp_2 < gl_2 certified; so_n < so_(n+2) for n <= 5 never certified in 64 trials".into())
}

fn criterion_9() -> Outcome {
    suite_outcome(checks::collapse_suite(12).map_err(|e| e.to_string())?)
}

fn criterion_10() -> Outcome {
    let render = |jobs| report::cmd_atlas(&Config { jobs, ..Config::default() }).map_err(|e| e.to_string());
    let first = render(Some(1))?;
    let again = render(Some(1))?;
    let wide = render(Some(4))?;
    let auto = render(None)?;
    if first != again || first != wide || first != auto {
        return Err("atlas output differs between runs or worker counts".into());
    }
    Ok(format!("{} bytes, identical for 1, 4 and default workers", first.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("orthogonal classification reproduction", criterion_1),
        ("symplectic classification reproduction", criterion_2),
        ("non-even consistency", criterion_3),
        ("dimension identity grid", criterion_4),
        ("Barbasch-Vogan check", criterion_5),
        ("formula vs oracle", criterion_6),
        ("moment-transfer figures", criterion_7),
        ("sphericity oracle sanity", criterion_8),
        ("collapse correctness", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
