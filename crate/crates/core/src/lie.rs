//! Exact-rational matrix Lie algebras, explicit sl2-triples, and brute-force checks.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::linalg::{q, q_frac, rank_of, span_rank, QMatrix, Q};
use crate::orbit::{FormKind, OrbitDatum};
use crate::partitions::{Family, GroupType, Partition};

pub const DEFAULT_BOUND: usize = 14;

/// A Lie subalgebra of `gl_n`, optionally the isometry algebra of a Gram matrix.
#[derive(Debug, Clone)]
pub struct MatrixLieAlgebra {
    pub n: usize,
    pub gram: Option<QMatrix>,
    pub basis: Vec<QMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Triple {
    pub e: QMatrix,
    pub h: QMatrix,
    pub f: QMatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CentralizerMode {
    E,
    FullTriple,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Certificate {
    /// Open Borel orbit found at this trial index.
    Certified { trial: usize },
    Inconclusive { trials: usize },
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        matches!(self, Certificate::Certified { .. })
    }
}

/// Antidiagonal split form: all ones for orthogonal, `+1` then `-1` for symplectic.
pub fn standard_gram(group: GroupType) -> Option<QMatrix> {
    let n = group.dim;
    let mut g = QMatrix::zeros(n, n);
    match group.family {
        Family::A => return None,
        Family::B | Family::D => (0..n).for_each(|p| g.set(p, n - 1 - p, Q::one())),
        Family::C => (0..n).for_each(|p| g.set(p, n - 1 - p, if p < n / 2 { q(1) } else { q(-1) })),
    }
    Some(g)
}

fn preserves(gram: &QMatrix, x: &QMatrix) -> bool {
    (&(gram * x) + &(&x.transpose() * gram)).is_zero()
}

pub fn build_algebra(group: GroupType) -> Result<MatrixLieAlgebra> {
    build_algebra_bounded(group, DEFAULT_BOUND)
}

pub fn build_algebra_bounded(group: GroupType, bound: usize) -> Result<MatrixLieAlgebra> {
    let n = group.dim;
    if n > bound {
        return Err(Error::BoundExceeded { dim: n, bound });
    }
    let gl = MatrixLieAlgebra {
        n,
        gram: None,
        basis: (0..n).flat_map(|i| (0..n).map(move |j| QMatrix::unit(n, i, j))).collect(),
    };
    let Some(gram) = standard_gram(group) else {
        return Ok(gl);
    };
    let mut alg = gl.subspace(|x| (&(&gram * x) + &(&x.transpose() * &gram)).as_vector().to_vec());
    alg.gram = Some(gram);
    Ok(alg)
}

impl MatrixLieAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `{X in self : phi(X) = 0}` for a linear map `phi`.
    pub fn subspace<F>(&self, phi: F) -> MatrixLieAlgebra
    where
        F: Fn(&QMatrix) -> Vec<Q>,
    {
        let images: Vec<Vec<Q>> = self.basis.iter().map(&phi).collect();
        let basis = if images.first().is_none_or(Vec::is_empty) {
            self.basis.clone()
        } else {
            let coeffs = QMatrix::from_rows(images).transpose().nullspace();
            coeffs.iter().map(|c| self.combine(c)).collect()
        };
        MatrixLieAlgebra { n: self.n, gram: self.gram.clone(), basis }
    }

    fn combine(&self, coeffs: &[Q]) -> QMatrix {
        let mut acc = QMatrix::zeros(self.n, self.n);
        for (c, x) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = &acc + &x.scale(c);
            }
        }
        acc
    }

    pub fn contains(&self, x: &QMatrix) -> bool {
        let base = span_rank(&self.basis);
        span_rank(self.basis.iter().chain(std::iter::once(x))) == base
    }

    pub fn contains_all(&self, xs: &[QMatrix]) -> bool {
        let base = span_rank(&self.basis);
        span_rank(self.basis.iter().chain(xs)) == base
    }

    /// Centralizer of a family of elements.
    pub fn centralizer(&self, of: &[&QMatrix]) -> MatrixLieAlgebra {
        self.subspace(|x| of.iter().flat_map(|y| x.commutator(y).as_vector().to_vec()).collect())
    }

    /// Upper-triangular elements.
    pub fn upper_triangular(&self) -> MatrixLieAlgebra {
        self.subspace(|x| below_diagonal(x, false))
    }

    /// Strictly lower-triangular elements.
    pub fn strictly_lower(&self) -> MatrixLieAlgebra {
        self.subspace(|x| below_diagonal(&x.transpose(), true))
    }

    pub fn diagonal(&self) -> MatrixLieAlgebra {
        self.subspace(|x| {
            let mut v = below_diagonal(x, false);
            v.extend(below_diagonal(&x.transpose(), false));
            v
        })
    }
}

fn below_diagonal(x: &QMatrix, with_diagonal: bool) -> Vec<Q> {
    let n = x.rows();
    let mut v = Vec::new();
    for i in 0..n {
        let upto = if with_diagonal { i + 1 } else { i };
        v.extend((0..upto).map(|j| x.get(i, j).clone()));
    }
    v
}

struct TensorBasis {
    /// `(j, a, offset)` per distinct part, largest first.
    blocks: Vec<(usize, usize, usize)>,
    n: usize,
}

impl TensorBasis {
    fn new(lambda: &Partition) -> Self {
        let mut off = 0;
        let blocks = lambda
            .distinct_parts()
            .into_iter()
            .map(|(j, a)| {
                let b = (j, a, off);
                off += j * a;
                b
            })
            .collect();
        TensorBasis { blocks, n: off }
    }

    fn index(&self, block: usize, i: usize, s: usize) -> usize {
        let (_, a, off) = self.blocks[block];
        off + i * a + s
    }

    fn weight(&self, block: usize, i: usize) -> i64 {
        self.blocks[block].0 as i64 - 1 - 2 * i as i64
    }

    fn partner(&self, block: usize, i: usize, s: usize) -> (usize, usize) {
        let (j, a, _) = self.blocks[block];
        (j - 1 - i, a - 1 - s)
    }

    fn all(&self) -> Vec<(usize, usize, usize)> {
        let mut v = Vec::new();
        for (b, &(j, a, _)) in self.blocks.iter().enumerate() {
            for i in 0..j {
                for s in 0..a {
                    v.push((b, i, s));
                }
            }
        }
        v
    }
}

fn triple_in_tensor_basis(tb: &TensorBasis) -> Sl2Triple {
    let n = tb.n;
    let (mut e, mut h, mut f) = (QMatrix::zeros(n, n), QMatrix::zeros(n, n), QMatrix::zeros(n, n));
    for (b, i, s) in tb.all() {
        let j = tb.blocks[b].0;
        let col = tb.index(b, i, s);
        h.set(col, col, q(tb.weight(b, i)));
        if i + 1 < j {
            f.set(tb.index(b, i + 1, s), col, Q::one());
        }
        if i > 0 {
            e.set(tb.index(b, i - 1, s), col, q((i * (j - i)) as i64));
        }
    }
    Sl2Triple { e, h, f }
}

/// Invariant form on `(+) W_j (x) V_j`, with signs chosen so that the weight-zero
/// anisotropic vectors alternate between norm `+1` and `-1`.
fn tensor_gram(orbit: &OrbitDatum, tb: &TensorBasis) -> QMatrix {
    let n = tb.n;
    let mut eps = vec![1i64; tb.blocks.len()];
    let mut next = 1i64;
    for (b, &(j, a, _)) in tb.blocks.iter().enumerate() {
        if orbit.group.is_orthogonal() && j % 2 == 1 && a % 2 == 1 {
            eps[b] = next * if (j - 1) / 2 % 2 == 0 { 1 } else { -1 };
            next = -next;
        }
    }
    let mut g = QMatrix::zeros(n, n);
    for (b, i, s) in tb.all() {
        let (j, a, _) = tb.blocks[b];
        let (pi, ps) = tb.partner(b, i, s);
        let beta = match orbit.multiplicity_forms[&j].kind {
            FormKind::Symplectic if s >= a / 2 => -1,
            _ => 1,
        };
        let alpha = eps[b] * if i % 2 == 0 { 1 } else { -1 };
        g.set(tb.index(b, i, s), tb.index(b, pi, ps), q(alpha * beta));
    }
    g
}

type Sparse = Vec<(usize, Q)>;

fn pair_value(g: &QMatrix, x: &Sparse, y: &Sparse) -> Q {
    let mut acc = Q::zero();
    for (i, a) in x {
        for (j, b) in y {
            acc += a * b * g.get(*i, *j);
        }
    }
    acc
}

/// Change of basis to weight-ordered vectors in which the form becomes the standard one.
fn split_basis(orbit: &OrbitDatum, tb: &TensorBasis, g0: &QMatrix) -> QMatrix {
    let n = tb.n;
    let mut by_weight: BTreeMap<i64, Vec<(usize, usize, usize)>> = BTreeMap::new();
    for t in tb.all() {
        by_weight.entry(tb.weight(t.0, t.1)).or_default().push(t);
    }
    let mut columns: Vec<Sparse> = Vec::with_capacity(n);
    if orbit.group.family == Family::A {
        for (_, ts) in by_weight.iter().rev() {
            columns.extend(ts.iter().map(|&(b, i, s)| vec![(tb.index(b, i, s), Q::one())]));
        }
    } else {
        let mut first: Vec<Sparse> = Vec::new();
        let mut second: Vec<Sparse> = Vec::new();
        let mut anisotropic: Vec<usize> = Vec::new();
        for (&w, ts) in by_weight.iter().rev() {
            if w < 0 {
                break;
            }
            for &(b, i, s) in ts {
                let x = tb.index(b, i, s);
                let (pi, ps) = tb.partner(b, i, s);
                let y = tb.index(b, pi, ps);
                if w == 0 && x == y {
                    anisotropic.push(x);
                    continue;
                }
                if w == 0 && y < x {
                    continue;
                }
                let val = g0.get(x, y).clone();
                first.push(vec![(x, val.recip())]);
                second.push(vec![(y, Q::one())]);
            }
        }
        for pair in anisotropic.chunks(2) {
            if let [z1, z2] = *pair {
                first.push(vec![(z1, q_frac(1, 2)), (z2, q_frac(1, 2))]);
                second.push(vec![(z1, q(1)), (z2, q(-1))]);
            }
        }
        columns.extend(first);
        if anisotropic.len() % 2 == 1 {
            columns.push(vec![(*anisotropic.last().expect("odd count"), Q::one())]);
        }
        columns.extend(second.into_iter().rev());
    }
    let mut p = QMatrix::zeros(n, n);
    for (c, col) in columns.iter().enumerate() {
        for (r, v) in col {
            p.set(*r, c, v.clone());
        }
    }
    debug_assert!(orbit.group.family == Family::A || {
        let cols: Vec<Sparse> = columns.clone();
        (0..n).all(|a| (0..n).all(|b| &pair_value(g0, &cols[a], &cols[b]) == standard_gram(orbit.group).unwrap().get(a, b)))
    });
    p
}

/// sl2-triple for the orbit, in the standard split realization, with `h` diagonal
/// and its eigenvalues weakly decreasing along the basis.
pub fn build_triple(orbit: &OrbitDatum) -> Result<Sl2Triple> {
    build_triple_bounded(orbit, DEFAULT_BOUND)
}

pub fn build_triple_bounded(orbit: &OrbitDatum, bound: usize) -> Result<Sl2Triple> {
    let n = orbit.group.dim;
    if n > bound {
        return Err(Error::BoundExceeded { dim: n, bound });
    }
    let tb = TensorBasis::new(&orbit.lambda);
    let old = triple_in_tensor_basis(&tb);
    let g0 = tensor_gram(orbit, &tb);
    let p = split_basis(orbit, &tb, &g0);
    let p_inv = p.inverse().ok_or_else(|| Error::Internal("singular change of basis".into()))?;
    let conj = |x: &QMatrix| &(&p_inv * x) * &p;
    let triple = Sl2Triple { e: conj(&old.e), h: conj(&old.h), f: conj(&old.f) };
    if let Some(gram) = standard_gram(orbit.group) {
        if &(&p.transpose() * &g0) * &p != gram {
            return Err(Error::Internal(format!("{orbit}: form is not split in the chosen basis")));
        }
        if ![&triple.e, &triple.h, &triple.f].iter().all(|x| preserves(&gram, x)) {
            return Err(Error::Internal(format!("{orbit}: triple does not preserve the form")));
        }
    }
    check_triple(&triple)?;
    Ok(triple)
}

pub fn check_triple(t: &Sl2Triple) -> Result<()> {
    let ok = t.h.commutator(&t.e) == t.e.scale(&q(2))
        && t.h.commutator(&t.f) == t.f.scale(&q(-2))
        && t.e.commutator(&t.f) == t.h;
    if ok {
        Ok(())
    } else {
        Err(Error::Internal("sl2 relations fail".into()))
    }
}

pub fn centralizer_dim(alg: &MatrixLieAlgebra, triple: &Sl2Triple, which: CentralizerMode) -> usize {
    let targets: Vec<&QMatrix> = match which {
        CentralizerMode::E => vec![&triple.e],
        CentralizerMode::FullTriple => vec![&triple.e, &triple.h, &triple.f],
    };
    let images: Vec<Vec<Q>> = alg
        .basis
        .iter()
        .map(|x| targets.iter().flat_map(|t| x.commutator(t).as_vector().to_vec()).collect())
        .collect();
    alg.dim() - rank_of(&images)
}

/// Eigenspace dimensions of `ad(h)` on the algebra.
pub fn graded_dims_oracle(alg: &MatrixLieAlgebra, triple: &Sl2Triple) -> Result<BTreeMap<i64, usize>> {
    let bound = 2 * alg.n as i64;
    let mut dims = BTreeMap::new();
    let mut total = 0;
    for k in -bound..=bound {
        let images: Vec<Vec<Q>> = alg
            .basis
            .iter()
            .map(|x| (&triple.h.commutator(x) - &x.scale(&q(k))).as_vector().to_vec())
            .collect();
        let d = alg.dim() - rank_of(&images);
        if d > 0 {
            dims.insert(k, d);
            total += d;
        }
    }
    if total != alg.dim() {
        return Err(Error::Internal(format!(
            "ad(h) has non-integer eigenvalues: integer eigenspaces span {total} of {}",
            alg.dim()
        )));
    }
    Ok(dims)
}

/// Jordan type of a nilpotent matrix, from the ranks of its powers.
pub fn jordan_type(e: &QMatrix) -> Result<Partition> {
    let n = e.rows();
    let mut ranks = vec![n];
    let mut pw = QMatrix::identity(n);
    while *ranks.last().expect("nonempty") > 0 {
        if ranks.len() > n + 1 {
            return Err(Error::Internal("matrix is not nilpotent".into()));
        }
        pw = &pw * e;
        ranks.push(pw.rank());
    }
    let columns: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    Ok(Partition::new(columns)?.transpose())
}

/// Tries to exhibit an open Borel orbit on `H \ L`.
pub fn spherical_certify(l: &MatrixLieAlgebra, h: &[QMatrix], trials: usize, seed: u64) -> Result<Certificate> {
    spherical_certify_with(l, h, trials, seed, Execution::default())
}

pub fn spherical_certify_with(
    l: &MatrixLieAlgebra,
    h: &[QMatrix],
    trials: usize,
    seed: u64,
    exec: Execution,
) -> Result<Certificate> {
    if trials == 0 {
        return Err(Error::Precondition("at least one trial is needed".into()));
    }
    if !l.contains_all(h) {
        return Err(Error::Precondition("h is not contained in l".into()));
    }
    let h_rank = span_rank(h);
    let brackets: Vec<QMatrix> =
        h.iter().enumerate().flat_map(|(i, x)| h[i + 1..].iter().map(move |y| x.commutator(y))).collect();
    if span_rank(h.iter().chain(&brackets)) != h_rank {
        return Err(Error::Precondition("h is not closed under the bracket".into()));
    }
    let borel = l.upper_triangular();
    let cartan = l.diagonal();
    if 2 * borel.dim() != l.dim() + cartan.dim() {
        return Err(Error::Internal("upper-triangular part of l is not a Borel subalgebra".into()));
    }
    let lower = l.strictly_lower();
    let target = l.dim();
    let hit = exec::find_first(exec, trials, |trial| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial as u64);
        let coeffs: Vec<i64> = lower.basis.iter().map(|_| rng.gen_range(-5..=5)).collect();
        let mut g = QMatrix::identity(l.n);
        let mut g_inv = QMatrix::identity(l.n);
        for (y, &c) in lower.basis.iter().zip(&coeffs) {
            if c == 0 {
                continue;
            }
            g = &g * &y.scale(&q(c)).exp_nilpotent();
            g_inv = &y.scale(&q(-c)).exp_nilpotent() * &g_inv;
        }
        let moved: Vec<QMatrix> = h.iter().map(|x| &(&g * x) * &g_inv).collect();
        (span_rank(borel.basis.iter().chain(&moved)) == target).then_some(trial)
    });
    Ok(match hit {
        Some(trial) => Certificate::Certified { trial },
        None => Certificate::Inconclusive { trials },
    })
}

/// Levi `l = g_0` and reductive centralizer `m` of the orbit, realized inside `g`.
pub fn levi_and_centralizer(orbit: &OrbitDatum, bound: usize) -> Result<(MatrixLieAlgebra, Vec<QMatrix>)> {
    let alg = build_algebra_bounded(orbit.group, bound)?;
    let t = build_triple_bounded(orbit, bound)?;
    let l = alg.centralizer(&[&t.h]);
    let m = alg.centralizer(&[&t.e, &t.h, &t.f]);
    Ok((l, m.basis))
}

/// `{X in alg : X v = 0}` for each of the given vectors.
pub fn stabilizer(alg: &MatrixLieAlgebra, vectors: &[Vec<Q>]) -> MatrixLieAlgebra {
    alg.subspace(|x| {
        vectors
            .iter()
            .flat_map(|v| {
                let col = QMatrix::from_vector(v.len(), 1, v.clone());
                (x * &col).as_vector().to_vec()
            })
            .collect()
    })
}

/// `so_n` inside `so_{n+c}` as the pointwise stabilizer of a nondegenerate
/// `c`-dimensional subspace (`c` = 1 or 2).
pub fn orthogonal_pair(n: usize, c: usize) -> Result<(MatrixLieAlgebra, Vec<QMatrix>)> {
    let big = n + c;
    let l = build_algebra(GroupType::orthogonal(big)?)?;
    let unit = |i: usize| -> Vec<Q> { (0..big).map(|k| if k == i { q(1) } else { q(0) }).collect() };
    let vectors = match c {
        1 if big % 2 == 1 => vec![unit(big / 2)],
        1 => vec![(0..big).map(|k| if k == 0 || k == big - 1 { q(1) } else { q(0) }).collect()],
        2 => vec![unit(0), unit(big - 1)],
        _ => return Err(Error::Unsupported(format!("codimension {c}"))),
    };
    let h = stabilizer(&l, &vectors).basis;
    Ok((l, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::{dim_centralizer, graded_dims};

    fn orbit(g: &str, l: &str) -> OrbitDatum {
        OrbitDatum::parse(g, l).unwrap()
    }

    #[test]
    fn algebra_dimensions() {
        assert_eq!(build_algebra(GroupType::c(2)).unwrap().dim(), 3);
        assert_eq!(build_algebra(GroupType::d(8)).unwrap().dim(), 28);
        assert_eq!(build_algebra(GroupType::b(7)).unwrap().dim(), 21);
        assert_eq!(build_algebra(GroupType::a(3)).unwrap().dim(), 9);
        assert!(matches!(build_algebra(GroupType::d(16)), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn basis_satisfies_gram_condition() {
        for g in [GroupType::b(5), GroupType::c(6), GroupType::d(6)] {
            let alg = build_algebra(g).unwrap();
            let gram = alg.gram.as_ref().unwrap();
            assert!(alg.basis.iter().all(|x| preserves(gram, x)));
            assert_eq!(span_rank(&alg.basis), alg.dim());
        }
    }

    #[test]
    fn triple_examples() {
        let t = build_triple(&orbit("C:2", "2")).unwrap();
        assert_eq!(t.h, QMatrix::from_i64(&[vec![1, 0], vec![0, -1]]));

        let t = build_triple(&orbit("D:8", "5,1,1,1")).unwrap();
        let diag: Vec<Q> = (0..8).map(|i| t.h.get(i, i).clone()).collect();
        assert_eq!(diag, [4, 2, 0, 0, 0, 0, -2, -4].map(q).to_vec());
        assert!(t.h.is_diagonal());

        let t = build_triple(&orbit("C:6", "3,3")).unwrap();
        let diag: Vec<Q> = (0..6).map(|i| t.h.get(i, i).clone()).collect();
        assert_eq!(diag, [2, 2, 0, 0, -2, -2].map(q).to_vec());
    }

    #[test]
    fn several_anisotropic_vectors() {
        for (g, l) in [("B:9", "5,3,1"), ("D:10", "5,3,1,1"), ("B:15", "7,5,3"), ("D:12", "5,3,3,1")] {
            let o = orbit(g, l);
            let t = build_triple_bounded(&o, 16).unwrap();
            assert_eq!(jordan_type(&t.e).unwrap(), o.lambda, "{o}");
        }
    }

    #[test]
    fn centralizer_examples() {
        let o = orbit("D:8", "5,1,1,1");
        let alg = build_algebra(o.group).unwrap();
        let t = build_triple(&o).unwrap();
        assert_eq!(centralizer_dim(&alg, &t, CentralizerMode::E), 8);
        assert_eq!(centralizer_dim(&alg, &t, CentralizerMode::FullTriple), 3);
        assert_eq!(centralizer_dim(&alg, &t, CentralizerMode::E), dim_centralizer(&o));

        let o = orbit("C:8", "8");
        let alg = build_algebra(o.group).unwrap();
        let t = build_triple(&o).unwrap();
        assert_eq!(centralizer_dim(&alg, &t, CentralizerMode::E), 4);
    }

    #[test]
    fn graded_oracle_examples() {
        let o = orbit("C:2", "2");
        let alg = build_algebra(o.group).unwrap();
        let t = build_triple(&o).unwrap();
        assert_eq!(graded_dims_oracle(&alg, &t).unwrap(), BTreeMap::from([(-2, 1), (0, 1), (2, 1)]));

        let o = orbit("D:8", "5,1,1,1");
        let alg = build_algebra(o.group).unwrap();
        let t = build_triple(&o).unwrap();
        assert_eq!(graded_dims_oracle(&alg, &t).unwrap(), graded_dims(&o));

        let o = orbit("D:12", "4,4,2,2");
        let alg = build_algebra(o.group).unwrap();
        let t = build_triple(&o).unwrap();
        assert_eq!(graded_dims_oracle(&alg, &t).unwrap().get(&1), None);
    }

    #[test]
    fn borel_of_levi_is_upper_triangular_part() {
        for (g, l) in [("D:8", "5,1,1,1"), ("C:8", "3,3,1,1"), ("B:7", "3,1^4"), ("D:8", "4,4")] {
            let (lev, _) = levi_and_centralizer(&orbit(g, l), DEFAULT_BOUND).unwrap();
            let b = lev.upper_triangular();
            let t = lev.diagonal();
            assert_eq!(2 * b.dim(), lev.dim() + t.dim(), "{g} {l}");
        }
    }

    #[test]
    fn certify_examples() {
        let (l, h) = orthogonal_pair(7, 1).unwrap();
        assert!(spherical_certify(&l, &h, 8, 0).unwrap().is_certified());

        let (l, h) = orthogonal_pair(3, 2).unwrap();
        assert_eq!(spherical_certify(&l, &h, 8, 0).unwrap(), Certificate::Inconclusive { trials: 8 });

        let gl2 = build_algebra(GroupType::a(2)).unwrap();
        let sp2 = build_algebra(GroupType::c(2)).unwrap();
        assert!(spherical_certify(&gl2, &sp2.basis, 8, 0).unwrap().is_certified());
    }

    #[test]
    fn certify_rejects_foreign_subalgebra() {
        let so4 = build_algebra(GroupType::d(4)).unwrap();
        let gl4 = build_algebra(GroupType::a(4)).unwrap();
        assert!(spherical_certify(&so4, &gl4.basis, 1, 0).is_err());
        assert!(spherical_certify(&so4, &so4.basis, 0, 0).is_err());
    }

    #[test]
    fn certify_is_monotone_in_trials() {
        let (l, h) = orthogonal_pair(4, 1).unwrap();
        let first = spherical_certify(&l, &h, 8, 3).unwrap();
        let Certificate::Certified { trial } = first else { panic!("expected certificate") };
        for more in [trial + 1, trial + 5, 20] {
            assert_eq!(spherical_certify(&l, &h, more, 3).unwrap(), first);
        }
    }
}
