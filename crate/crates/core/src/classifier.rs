//! The hypersphericality candidate test: dimension lemma plus a lookup of the
//! embedding graph in a table of spherical pairs.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::orbit::{self, EmbeddingGraph, Factor, FactorFamily, OrbitDatum, ReductiveFactorList};
use crate::partitions::{self, Family, GroupType, Partition};

const EMBEDDED_TABLE: &str = include_str!("../data/pair_table.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairVerdict {
    Spherical,
    NotSpherical,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PairRule {
    AbelianLevi,
    TorusInRankOne,
    BareSemisimpleLevi,
    Identity,
    StdInGl { h_family: FactorFamily },
    OrthogonalCodim { codim: usize },
    DiagonalInGlCopies { h: Factor, copies: Vec<usize> },
    DiagonalInSelfAndGl { h: Factor, gl_copies: Vec<usize> },
    SymplecticWithGl { h: Factor, gl_copies: Vec<usize> },
    SymplecticComplement { partner: Factor },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub id: String,
    pub h_factors: String,
    pub l_factors: String,
    pub edge_pattern: String,
    pub rule: PairRule,
    pub verdict: PairVerdict,
    pub provenance: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<OrbitDatum>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphericalPairTable {
    pub version: u32,
    pub entries: Vec<TableEntry>,
}

impl SphericalPairTable {
    pub fn embedded() -> &'static SphericalPairTable {
        static TABLE: OnceLock<SphericalPairTable> = OnceLock::new();
        TABLE.get_or_init(|| Self::from_json(EMBEDDED_TABLE).expect("embedded pair table is well formed"))
    }

    pub fn embedded_json() -> &'static str {
        EMBEDDED_TABLE
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let table: SphericalPairTable =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("pair table: {e}")))?;
        table.validate()?;
        Ok(table)
    }

    /// Rejects empty provenance, duplicate ids, and conflicting verdicts for one pattern.
    pub fn validate(&self) -> Result<()> {
        let mut ids = BTreeSet::new();
        for (i, e) in self.entries.iter().enumerate() {
            if e.provenance.trim().is_empty() {
                return Err(Error::Parse(format!("pair table entry {} has no provenance", e.id)));
            }
            if !ids.insert(e.id.as_str()) {
                return Err(Error::Parse(format!("duplicate pair table id {}", e.id)));
            }
            let key = (&e.h_factors, &e.l_factors, &e.edge_pattern, &e.rule);
            for other in &self.entries[..i] {
                let okey = (&other.h_factors, &other.l_factors, &other.edge_pattern, &other.rule);
                if (key == okey || e.rule == other.rule) && e.verdict != other.verdict {
                    return Err(Error::Parse(format!(
                        "pair table entries {} and {} disagree on the same pattern",
                        other.id, e.id
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn entry(&self, id: &str) -> Option<&TableEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    fn lookup(&self, situation: &Situation) -> Option<&TableEntry> {
        self.entries.iter().find(|e| situation.matches(&e.rule))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CandidateKind {
    Trivial,
    Regular,
    Shalika,
    Hook,
    Exceptional(String),
    MixedParity(Vec<CandidateKind>),
}

impl fmt::Display for CandidateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CandidateKind::Trivial => f.write_str("Trivial"),
            CandidateKind::Regular => f.write_str("Regular"),
            CandidateKind::Shalika => f.write_str("Shalika"),
            CandidateKind::Hook => f.write_str("Hook"),
            CandidateKind::Exceptional(tag) => write!(f, "Exceptional {tag}"),
            CandidateKind::MixedParity(parts) => {
                let inner: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "MixedParity({})", inner.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RejectReason {
    FailsDimensionLemma { deficit: usize },
    NonSphericalPair(String),
    NotInTables,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectReason::FailsDimensionLemma { deficit } => write!(f, "FailsDimensionLemma(deficit {deficit})"),
            RejectReason::NonSphericalPair(id) => write!(f, "NonSphericalPair({id})"),
            RejectReason::NotInTables => f.write_str("NotInTables"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Candidate,
    NotCandidate,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassificationVerdict {
    pub status: Status,
    pub kind: Option<CandidateKind>,
    pub reason: Option<RejectReason>,
    /// Table entries consulted, in order.
    pub evidence: Vec<String>,
}

impl ClassificationVerdict {
    fn candidate(kind: CandidateKind, evidence: Vec<String>) -> Self {
        ClassificationVerdict { status: Status::Candidate, kind: Some(kind), reason: None, evidence }
    }

    fn rejected(reason: RejectReason, evidence: Vec<String>) -> Self {
        ClassificationVerdict { status: Status::NotCandidate, kind: None, reason: Some(reason), evidence }
    }

    pub fn is_candidate(&self) -> bool {
        self.status == Status::Candidate
    }
}

impl fmt::Display for ClassificationVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.kind, &self.reason) {
            (Some(k), _) => write!(f, "Candidate({k})"),
            (None, Some(r)) => write!(f, "NotCandidate({r})"),
            (None, None) => write!(f, "{:?}", self.status),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub dim_l: usize,
    pub dim_h: usize,
    pub dim_borel_l: usize,
    pub passes: bool,
}

impl LemmaReport {
    pub fn deficit(&self) -> usize {
        self.dim_l.saturating_sub(self.dim_h + self.dim_borel_l)
    }
}

pub fn dimension_lemma(orbit: &OrbitDatum) -> Result<LemmaReport> {
    dimension_lemma_with_h(orbit, &orbit::centralizer_reductive(orbit))
}

pub fn dimension_lemma_with_h(orbit: &OrbitDatum, h: &ReductiveFactorList) -> Result<LemmaReport> {
    let l = orbit::levi(orbit)?;
    let (dim_l, dim_h, dim_borel_l) = (l.dim(), h.dim(), l.borel_dim());
    Ok(LemmaReport { dim_l, dim_h, dim_borel_l, passes: dim_l <= dim_h + dim_borel_l })
}

/// Local configuration of the graph around one non-abelian factor of H.
#[derive(Debug, Clone)]
struct Star {
    h: Factor,
    /// Each adjacent L factor, with the other non-abelian H factors adjacent to it.
    neighbors: Vec<(Factor, Vec<Factor>)>,
}

#[derive(Debug, Clone)]
enum Situation {
    AbelianLevi,
    TorusInRankOne,
    BareSemisimpleLevi,
    Star(Star),
}

fn same_kind(a: Factor, b: Factor) -> bool {
    let norm = |f: FactorFamily| if f == FactorFamily::SO { FactorFamily::O } else { f };
    norm(a.family) == norm(b.family) && a.size == b.size
}

impl Situation {
    fn matches(&self, rule: &PairRule) -> bool {
        let star = match (self, rule) {
            (Situation::AbelianLevi, PairRule::AbelianLevi)
            | (Situation::TorusInRankOne, PairRule::TorusInRankOne)
            | (Situation::BareSemisimpleLevi, PairRule::BareSemisimpleLevi) => return true,
            (Situation::Star(s), _) => s,
            _ => return false,
        };
        let h = star.h;
        let nb: Vec<Factor> = star.neighbors.iter().map(|n| n.0).collect();
        let gl_h = Factor::gl(h.size);
        match rule {
            PairRule::Identity => nb.len() == 1 && same_kind(nb[0], h),
            PairRule::StdInGl { h_family } => same_family(h.family, *h_family) && nb == [gl_h],
            PairRule::OrthogonalCodim { codim } => {
                same_family(h.family, FactorFamily::O) && nb.len() == 1 && same_kind(nb[0], Factor::o(h.size + codim))
            }
            PairRule::DiagonalInGlCopies { h: want, copies } => {
                same_kind(h, *want) && nb.iter().all(|&f| f == gl_h) && copies.contains(&nb.len())
            }
            PairRule::DiagonalInSelfAndGl { h: want, gl_copies } => {
                same_kind(h, *want)
                    && nb.iter().filter(|&&f| same_kind(f, h)).count() == 1
                    && gl_copies.contains(&nb.iter().filter(|&&f| f == gl_h).count())
                    && nb.len() == 1 + nb.iter().filter(|&&f| f == gl_h).count()
            }
            PairRule::SymplecticWithGl { h: want, gl_copies } => {
                if !same_kind(h, *want) {
                    return false;
                }
                let sp: Vec<&(Factor, Vec<Factor>)> =
                    star.neighbors.iter().filter(|n| n.0.family == FactorFamily::Sp).collect();
                let gls = nb.iter().filter(|&&f| f == gl_h).count();
                let [(big, others)] = sp.as_slice() else { return false };
                let rest = big.size.checked_sub(h.size);
                let others_ok = match rest {
                    Some(0) => others.is_empty(),
                    Some(b) => others.len() == 1 && same_kind(others[0], Factor::sp(b)),
                    None => false,
                };
                others_ok && gl_copies.contains(&gls) && nb.len() == 1 + gls
            }
            PairRule::SymplecticComplement { partner } => {
                let [(big, others)] = star.neighbors.as_slice() else { return false };
                h.family == FactorFamily::Sp
                    && big.family == FactorFamily::Sp
                    && big.size == h.size + partner.size
                    && others.len() == 1
                    && same_kind(others[0], *partner)
            }
            PairRule::AbelianLevi | PairRule::TorusInRankOne | PairRule::BareSemisimpleLevi => false,
        }
    }
}

fn same_family(a: FactorFamily, b: FactorFamily) -> bool {
    same_kind(Factor { family: a, size: 0 }, Factor { family: b, size: 0 })
}

/// H, L and the graph between them, with H possibly a subgroup of `M_gamma`.
struct PairShape {
    h: Vec<Factor>,
    l: Vec<Factor>,
    edges: Vec<(usize, usize)>,
}

impl PairShape {
    fn from_graph(graph: &EmbeddingGraph, h: Option<&ReductiveFactorList>) -> Result<Self> {
        let Some(h) = h else {
            return Ok(PairShape {
                h: graph.h_vertices.clone(),
                l: graph.l_vertices.clone(),
                edges: graph.edges.clone(),
            });
        };
        let m = ReductiveFactorList::new(graph.h_vertices.clone());
        let host = m
            .assign_factorwise(h)
            .ok_or_else(|| Error::Precondition(format!("{h} does not embed in {m}")))?;
        let edges = graph
            .edges
            .iter()
            .flat_map(|&(hv, lv)| host.iter().enumerate().filter(move |(_, &k)| k == hv).map(move |(i, _)| (i, lv)))
            .collect();
        Ok(PairShape { h: h.factors.clone(), l: graph.l_vertices.clone(), edges })
    }

    fn l_adjacent(&self, hv: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter(move |e| e.0 == hv).map(|e| e.1)
    }

    fn h_adjacent(&self, lv: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter(move |e| e.1 == lv).map(|e| e.0)
    }

    fn star(&self, hv: usize) -> Star {
        let neighbors = self
            .l_adjacent(hv)
            .map(|lv| {
                let others = self
                    .h_adjacent(lv)
                    .filter(|&o| o != hv && !self.h[o].is_abelian())
                    .map(|o| self.h[o])
                    .collect();
                (self.l[lv], others)
            })
            .collect();
        Star { h: self.h[hv], neighbors }
    }

    /// Situation for L factors that no non-abelian factor of H reaches.
    fn uncovered(&self, lvs: &[usize]) -> Situation {
        if lvs.is_empty() {
            return Situation::AbelianLevi;
        }
        if let [lv] = *lvs {
            let torus_adjacent = self.h_adjacent(lv).any(|hv| self.h[hv].is_torus());
            if self.l[lv].semisimple_rank() == 1 && torus_adjacent {
                return Situation::TorusInRankOne;
            }
        }
        Situation::BareSemisimpleLevi
    }

    fn situations(&self) -> Vec<Situation> {
        let semisimple_h: Vec<usize> = (0..self.h.len()).filter(|&i| !self.h[i].is_abelian()).collect();
        let mut out: Vec<Situation> = semisimple_h.iter().map(|&hv| Situation::Star(self.star(hv))).collect();
        let uncovered: Vec<usize> = (0..self.l.len())
            .filter(|&lv| !self.l[lv].is_abelian())
            .filter(|&lv| self.h_adjacent(lv).all(|hv| self.h[hv].is_abelian()))
            .collect();
        if out.is_empty() || !uncovered.is_empty() {
            out.push(self.uncovered(&uncovered));
        }
        out
    }
}

fn is_regular(group: GroupType, lambda: &Partition) -> bool {
    let n = group.dim;
    match group.family {
        Family::D => n >= 2 && lambda.parts() == [n - 1, 1],
        _ => lambda.parts() == [n],
    }
}

/// Name of a same-parity candidate, from the shape of its partition.
pub fn kind_of(orbit: &OrbitDatum) -> CandidateKind {
    let lambda = &orbit.lambda;
    if lambda.parts().iter().all(|&p| p == 1) {
        CandidateKind::Trivial
    } else if is_regular(orbit.group, lambda) {
        CandidateKind::Regular
    } else if lambda.parts().iter().all(|&p| p == 2) {
        CandidateKind::Shalika
    } else if orbit.group.is_orthogonal() && lambda.hook_form().is_some_and(|h| h.arm % 2 == 1) {
        CandidateKind::Hook
    } else {
        CandidateKind::Exceptional(lambda.to_string())
    }
}

fn mixed_kind(orbit: &OrbitDatum) -> CandidateKind {
    if orbit.is_even() {
        return kind_of(orbit);
    }
    let (even, odd) = orbit.parity_blocks();
    CandidateKind::MixedParity([even, odd].iter().flatten().map(kind_of).collect())
}

pub fn classify(orbit: &OrbitDatum) -> Result<ClassificationVerdict> {
    classify_with(orbit, None, SphericalPairTable::embedded())
}

/// Runs the decision procedure with an optional subgroup `H` of `M_gamma` and a
/// given pair table.
pub fn classify_with(
    orbit: &OrbitDatum,
    h: Option<&ReductiveFactorList>,
    table: &SphericalPairTable,
) -> Result<ClassificationVerdict> {
    let graph = orbit::embedding_graph(orbit)?;
    let shape = PairShape::from_graph(&graph, h)?;
    let h_list = ReductiveFactorList::new(shape.h.clone());
    let lemma = dimension_lemma_with_h(orbit, &h_list)?;
    if !lemma.passes {
        return Ok(ClassificationVerdict::rejected(
            RejectReason::FailsDimensionLemma { deficit: lemma.deficit() },
            Vec::new(),
        ));
    }
    let mut evidence = Vec::new();
    for situation in shape.situations() {
        let Some(entry) = table.lookup(&situation) else {
            return Ok(ClassificationVerdict::rejected(RejectReason::NotInTables, evidence));
        };
        evidence.push(entry.id.clone());
        if entry.verdict == PairVerdict::NotSpherical {
            return Ok(ClassificationVerdict::rejected(RejectReason::NonSphericalPair(entry.id.clone()), evidence));
        }
    }
    Ok(ClassificationVerdict::candidate(mixed_kind(orbit), evidence))
}

/// Closed-form list of same-parity candidates for a group.
pub fn reference_list(group: GroupType) -> BTreeSet<Partition> {
    let n = group.dim;
    let mut out = BTreeSet::new();
    match group.family {
        Family::B | Family::D => {
            for m in (1..=n).step_by(2) {
                out.insert(Partition::hook(m, n - m));
            }
            if n.is_multiple_of(4) {
                out.insert(Partition::rectangle(2, n / 2));
            }
            match n {
                6 => drop(out.insert(Partition::rectangle(3, 2))),
                8 => drop(out.insert(Partition::rectangle(4, 2))),
                12 => drop(out.insert(Partition::rectangle(6, 2))),
                _ => {}
            }
        }
        Family::C => {
            out.insert(Partition::rectangle(1, n));
            out.insert(Partition::rectangle(n, 1));
            out.insert(Partition::rectangle(2, n / 2));
            if n >= 6 {
                out.insert(Partition::rectangle(3, 2).union(&Partition::rectangle(1, n - 6)));
            }
            if n >= 10 {
                out.insert(Partition::rectangle(5, 2).union(&Partition::rectangle(1, n - 10)));
            }
        }
        Family::A => {}
    }
    out
}

fn family_dims(family: Family, max_dim: usize) -> Vec<usize> {
    match family {
        Family::B => (1..=max_dim).step_by(2).collect(),
        Family::C | Family::D => (2..=max_dim).step_by(2).collect(),
        Family::A => (1..=max_dim).collect(),
    }
}

/// Every orbit of the family up to `max_dim`, ordered by dimension and then by
/// decreasing partition.
pub fn family_orbits(family: Family, max_dim: usize, even_only: bool) -> Vec<OrbitDatum> {
    family_dims(family, max_dim)
        .into_iter()
        .filter_map(|n| GroupType::new(family, n).ok())
        .flat_map(|g| {
            partitions::valid_partitions(g)
                .into_iter()
                .map(move |l| OrbitDatum::new(g, l).expect("enumerated partitions are valid"))
        })
        .filter(|o| !even_only || o.is_even())
        .collect()
}

pub fn enumerate_candidates(
    family: Family,
    max_dim: usize,
    even_only: bool,
) -> Result<Vec<(OrbitDatum, ClassificationVerdict)>> {
    enumerate_candidates_with(family, max_dim, even_only, Execution::default())
}

pub fn enumerate_candidates_with(
    family: Family,
    max_dim: usize,
    even_only: bool,
    exec: Execution,
) -> Result<Vec<(OrbitDatum, ClassificationVerdict)>> {
    if family == Family::A {
        return Err(Error::Unsupported("candidate enumeration covers types B, C, D".into()));
    }
    let orbits = family_orbits(family, max_dim, even_only);
    let verdicts = classify_orbits(&orbits, SphericalPairTable::embedded(), exec)?;
    Ok(orbits.into_iter().zip(verdicts).collect())
}

/// Classifies each orbit against `table`, keeping input order.
pub fn classify_orbits(
    orbits: &[OrbitDatum],
    table: &SphericalPairTable,
    exec: Execution,
) -> Result<Vec<ClassificationVerdict>> {
    exec::map(exec, orbits, |o| classify_with(o, None, table)).into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orbit(g: &str, l: &str) -> OrbitDatum {
        OrbitDatum::parse(g, l).unwrap()
    }

    fn verdict(g: &str, l: &str) -> ClassificationVerdict {
        classify(&orbit(g, l)).unwrap()
    }

    #[test]
    fn lemma_examples() {
        let r = dimension_lemma(&orbit("D:12", "4,4,2,2")).unwrap();
        assert_eq!((r.dim_l, r.dim_h, r.dim_borel_l, r.passes), (20, 6, 13, false));
        let r = dimension_lemma(&orbit("D:8", "5,1,1,1")).unwrap();
        assert_eq!((r.dim_l, r.dim_h, r.dim_borel_l, r.passes), (8, 3, 6, true));
        let r = dimension_lemma(&orbit("B:9", "1^9")).unwrap();
        assert_eq!(r.dim_l, r.dim_h);
        assert!(r.passes);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(verdict("D:12", "6,6").kind, Some(CandidateKind::Exceptional("[6,6]".into())));
        for a in 0..3 {
            let l = format!("3,3{}", ",1".repeat(2 * a));
            let v = verdict(&format!("C:{}", 6 + 2 * a), &l);
            assert!(matches!(v.kind, Some(CandidateKind::Exceptional(_))), "{l}: {v}");
        }
        assert!(matches!(verdict("D:12", "4,4,2,2").reason, Some(RejectReason::FailsDimensionLemma { .. })));
        assert_eq!(verdict("D:8", "5,1,1,1").kind, Some(CandidateKind::Hook));
        assert_eq!(verdict("D:8", "7,1").kind, Some(CandidateKind::Regular));
        assert_eq!(verdict("C:8", "2,2,2,2").kind, Some(CandidateKind::Shalika));
        assert_eq!(verdict("B:7", "1^7").kind, Some(CandidateKind::Trivial));
    }

    #[test]
    fn codim_two_rejections_cite_the_table() {
        let v = verdict("D:10", "3,3,1,1,1,1");
        assert_eq!(v.reason, Some(RejectReason::NonSphericalPair("so-codim-two".into())));
        let v = verdict("C:12", "3,3,3,3");
        assert_eq!(v.reason, Some(RejectReason::NotInTables));
    }

    #[test]
    fn enumerate_examples() {
        let got: BTreeSet<Partition> = enumerate_candidates(Family::D, 8, true)
            .unwrap()
            .into_iter()
            .filter(|(o, v)| o.group.dim == 8 && v.is_candidate())
            .map(|(o, _)| o.lambda)
            .collect();
        let want: BTreeSet<Partition> =
            ["1^8", "7,1", "5,1,1,1", "3,1^5", "2^4", "4,4"].iter().map(|s| s.parse().unwrap()).collect();
        assert_eq!(got, want);

        let got: BTreeSet<Partition> = enumerate_candidates(Family::C, 6, true)
            .unwrap()
            .into_iter()
            .filter(|(o, v)| o.group.dim == 6 && v.is_candidate())
            .map(|(o, _)| o.lambda)
            .collect();
        let want: BTreeSet<Partition> = ["1^6", "6", "2,2,2", "3,3"].iter().map(|s| s.parse().unwrap()).collect();
        assert_eq!(got, want);

        assert_eq!(enumerate_candidates(Family::B, 3, false).unwrap().len(), 3);
    }

    #[test]
    fn enumeration_order() {
        let orbits = family_orbits(Family::C, 6, false);
        let listed: Vec<String> = orbits.iter().map(ToString::to_string).collect();
        assert_eq!(listed[..3], ["C:2 [2]", "C:2 [1,1]", "C:4 [4]"]);
    }

    #[test]
    fn embedded_table_is_consistent() {
        let t = SphericalPairTable::embedded();
        assert!(t.validate().is_ok());
        assert!(t.entries.iter().all(|e| !e.provenance.is_empty()));
    }

    #[test]
    fn witnesses_reach_their_entries() {
        for e in &SphericalPairTable::embedded().entries {
            let v = classify(e.witness.as_ref().unwrap()).unwrap();
            assert!(v.evidence.contains(&e.id), "{}: {v}", e.id);
            assert_eq!(v.is_candidate(), e.verdict == PairVerdict::Spherical, "{}", e.id);
        }
    }

    #[test]
    fn conflicting_table_is_rejected() {
        let mut t = SphericalPairTable::embedded().clone();
        let mut dup = t.entry("so-codim-one").unwrap().clone();
        dup.id = "flipped".into();
        dup.verdict = PairVerdict::NotSpherical;
        t.entries.push(dup);
        assert!(t.validate().is_err());
    }

    #[test]
    fn h_override() {
        let o = orbit("D:8", "5,1,1,1");
        let h: ReductiveFactorList = "O3".parse().unwrap();
        assert!(classify_with(&o, Some(&h), SphericalPairTable::embedded()).unwrap().is_candidate());
        let bad: ReductiveFactorList = "Sp2".parse().unwrap();
        assert!(classify_with(&o, Some(&bad), SphericalPairTable::embedded()).is_err());
    }

    #[test]
    fn mixed_parity_kinds() {
        let v = verdict("D:8", "2,2,1,1,1,1");
        assert_eq!(v.kind, Some(CandidateKind::MixedParity(vec![CandidateKind::Shalika, CandidateKind::Trivial])));
    }
}
