//! Structural invariants of a nilpotent orbit: multiplicity forms, the reductive
//! centralizer, the Jacobson-Morozov Levi, the embedding graph, graded dimensions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{self, Family, GroupType, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FormKind {
    Orthogonal,
    Symplectic,
    /// Placeholder for type A, where multiplicity spaces carry no form.
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FormLabel {
    pub kind: FormKind,
    pub dim: usize,
}

/// A nilpotent orbit, given by its group and partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawOrbit", into = "RawOrbit")]
pub struct OrbitDatum {
    pub group: GroupType,
    pub lambda: Partition,
    pub multiplicity_forms: BTreeMap<usize, FormLabel>,
}

#[derive(Serialize, Deserialize)]
struct RawOrbit {
    group: GroupType,
    lambda: Partition,
}

impl TryFrom<RawOrbit> for OrbitDatum {
    type Error = Error;

    fn try_from(raw: RawOrbit) -> Result<Self> {
        OrbitDatum::new(raw.group, raw.lambda)
    }
}

impl From<OrbitDatum> for RawOrbit {
    fn from(o: OrbitDatum) -> Self {
        RawOrbit { group: o.group, lambda: o.lambda }
    }
}

fn form_kind(group: GroupType, part: usize) -> FormKind {
    let even = part.is_multiple_of(2);
    match group.family {
        Family::A => FormKind::General,
        Family::B | Family::D if even => FormKind::Symplectic,
        Family::B | Family::D => FormKind::Orthogonal,
        Family::C if even => FormKind::Orthogonal,
        Family::C => FormKind::Symplectic,
    }
}

impl OrbitDatum {
    pub fn new(group: GroupType, lambda: Partition) -> Result<Self> {
        partitions::validate(group, &lambda)?;
        let multiplicity_forms = lambda
            .multiplicities()
            .into_iter()
            .map(|(j, a)| (j, FormLabel { kind: form_kind(group, j), dim: a }))
            .collect();
        Ok(OrbitDatum { group, lambda, multiplicity_forms })
    }

    pub fn parse(group: &str, lambda: &str) -> Result<Self> {
        Self::new(group.parse()?, lambda.parse()?)
    }

    pub fn is_even(&self) -> bool {
        let prof = self.lambda.parity_profile();
        prof.all_even || prof.all_odd
    }

    /// Trivial, if `[1^n]`.
    pub fn is_trivial(&self) -> bool {
        self.lambda.parts().iter().all(|&p| p == 1)
    }

    /// The parity blocks of a mixed orbit, each as an orbit of its own group.
    /// Returns (even block, odd block); a block is absent when empty.
    pub fn parity_blocks(&self) -> (Option<OrbitDatum>, Option<OrbitDatum>) {
        let prof = self.lambda.parity_profile();
        let block = |lambda: Partition| -> Option<OrbitDatum> {
            if lambda.is_empty() {
                return None;
            }
            let group = match self.group.family {
                Family::A => GroupType::a(lambda.size()),
                Family::C => GroupType::c(lambda.size()),
                Family::B | Family::D => GroupType::orthogonal(lambda.size()).ok()?,
            };
            OrbitDatum::new(group, lambda).ok()
        };
        (block(prof.even_subpartition), block(prof.odd_subpartition))
    }
}

impl fmt::Display for OrbitDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.group, self.lambda)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FactorFamily {
    O,
    SO,
    Sp,
    GL,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Factor {
    pub family: FactorFamily,
    pub size: usize,
}

impl Factor {
    pub fn o(size: usize) -> Self {
        Factor { family: FactorFamily::O, size }
    }

    pub fn sp(size: usize) -> Self {
        Factor { family: FactorFamily::Sp, size }
    }

    pub fn gl(size: usize) -> Self {
        Factor { family: FactorFamily::GL, size }
    }

    pub fn dim(&self) -> usize {
        let m = self.size;
        match self.family {
            FactorFamily::O | FactorFamily::SO => m * m.saturating_sub(1) / 2,
            FactorFamily::Sp => m * (m + 1) / 2,
            FactorFamily::GL => m * m,
        }
    }

    pub fn rank(&self) -> usize {
        match self.family {
            FactorFamily::O | FactorFamily::SO | FactorFamily::Sp => self.size / 2,
            FactorFamily::GL => self.size,
        }
    }

    pub fn borel_dim(&self) -> usize {
        (self.dim() + self.rank()) / 2
    }

    /// Whether the Lie algebra of the factor is abelian.
    pub fn is_abelian(&self) -> bool {
        match self.family {
            FactorFamily::O | FactorFamily::SO => self.size <= 2,
            FactorFamily::Sp => self.size == 0,
            FactorFamily::GL => self.size <= 1,
        }
    }

    /// Whether the factor has a positive-dimensional torus as identity component.
    pub fn is_torus(&self) -> bool {
        match self.family {
            FactorFamily::O | FactorFamily::SO => self.size == 2,
            FactorFamily::GL => self.size == 1,
            FactorFamily::Sp => false,
        }
    }

    /// Semisimple rank of the derived algebra.
    pub fn semisimple_rank(&self) -> usize {
        match self.family {
            FactorFamily::GL => self.size.saturating_sub(1),
            _ if self.is_abelian() => 0,
            _ => self.rank(),
        }
    }

    fn contains(&self, other: &Factor) -> bool {
        let same = match (self.family, other.family) {
            (FactorFamily::O, FactorFamily::O | FactorFamily::SO) => true,
            (FactorFamily::SO, FactorFamily::SO) => true,
            (a, b) => a == b,
        };
        same && other.size <= self.size
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            FactorFamily::O => "O",
            FactorFamily::SO => "SO",
            FactorFamily::Sp => "Sp",
            FactorFamily::GL => "GL",
        };
        write!(f, "{fam}{}", self.size)
    }
}

impl FromStr for Factor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let split = s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len());
        let (fam, size) = s.split_at(split);
        let family = match fam.trim_end_matches('_') {
            "O" => FactorFamily::O,
            "SO" => FactorFamily::SO,
            "Sp" => FactorFamily::Sp,
            "GL" => FactorFamily::GL,
            other => return Err(Error::Parse(format!("unknown factor family {other:?}"))),
        };
        let size = size.parse().map_err(|e| Error::Parse(format!("bad factor {s:?}: {e}")))?;
        if family == FactorFamily::Sp && size % 2 == 1 {
            return Err(Error::Parse(format!("{s}: Sp factors have even size")));
        }
        Ok(Factor { family, size })
    }
}

/// A formal product of classical groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReductiveFactorList {
    pub factors: Vec<Factor>,
}

impl ReductiveFactorList {
    pub fn new(factors: Vec<Factor>) -> Self {
        ReductiveFactorList { factors }
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(Factor::dim).sum()
    }

    pub fn borel_dim(&self) -> usize {
        self.factors.iter().map(Factor::borel_dim).sum()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Sorted copy, for comparisons up to permutation.
    pub fn normalized(&self) -> Self {
        let mut f = self.factors.clone();
        f.sort();
        ReductiveFactorList { factors: f }
    }

    pub fn same_up_to_order(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// Whether `sub` embeds factorwise: each factor of `sub` sits inside a distinct
    /// factor of `self` of the same kind.
    pub fn contains_factorwise(&self, sub: &ReductiveFactorList) -> bool {
        self.assign_factorwise(sub).is_some()
    }

    /// For each factor of `sub`, the index of the factor of `self` hosting it.
    pub fn assign_factorwise(&self, sub: &ReductiveFactorList) -> Option<Vec<usize>> {
        let mut order: Vec<usize> = (0..sub.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(sub.factors[i].size));
        let mut used = vec![false; self.len()];
        let mut host = vec![0; sub.len()];
        for i in order {
            let need = sub.factors[i];
            let slot = (0..self.len())
                .filter(|&k| !used[k] && self.factors[k].contains(&need))
                .min_by_key(|&k| self.factors[k].size)?;
            used[slot] = true;
            host[i] = slot;
        }
        Some(host)
    }

    /// Drops `O_1` and `SO_1` factors.
    pub fn without_orthogonal_ones(&self) -> Self {
        let factors = self
            .factors
            .iter()
            .copied()
            .filter(|f| !(matches!(f.family, FactorFamily::O | FactorFamily::SO) && f.size == 1))
            .collect();
        ReductiveFactorList { factors }
    }
}

impl fmt::Display for ReductiveFactorList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, fac) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "{fac}")?;
        }
        Ok(())
    }
}

/// Parses `O3,GL1` or `O3 x GL1`; `1` or the empty string is the trivial group.
impl FromStr for ReductiveFactorList {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(ReductiveFactorList::default());
        }
        let factors = s
            .split([',', 'x', '*'])
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<_>>()?;
        Ok(ReductiveFactorList { factors })
    }
}

/// Bipartite graph between the factors of `M_gamma` (row groups of the Young diagram)
/// and the factors of `L` (column groups).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingGraph {
    pub h_vertices: Vec<Factor>,
    pub l_vertices: Vec<Factor>,
    pub edges: Vec<(usize, usize)>,
}

impl EmbeddingGraph {
    pub fn l_neighbors(&self, h: usize) -> Vec<usize> {
        self.edges.iter().filter(|e| e.0 == h).map(|e| e.1).collect()
    }

    pub fn h_neighbors(&self, l: usize) -> Vec<usize> {
        self.edges.iter().filter(|e| e.1 == l).map(|e| e.0).collect()
    }
}

/// One Levi factor, with the block of columns it comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct ColumnGroup {
    factor: Factor,
    /// 1-based index of the first column of the group within its parity block.
    first_column: usize,
    odd_block: bool,
}

fn require_classical(group: GroupType) -> Result<()> {
    if group.family == Family::A {
        return Err(Error::Unsupported(format!("{group}: Levi and graph need types B, C, D")));
    }
    Ok(())
}

fn column_groups(orbit: &OrbitDatum) -> Vec<ColumnGroup> {
    let prof = orbit.lambda.parity_profile();
    let mut out = Vec::new();
    let even_cols = prof.even_subpartition.transpose();
    for i in (0..even_cols.len()).step_by(2) {
        out.push(ColumnGroup {
            factor: Factor::gl(even_cols.part(i)),
            first_column: i + 1,
            odd_block: false,
        });
    }
    let odd_cols = prof.odd_subpartition.transpose();
    if !odd_cols.is_empty() {
        let n = odd_cols.part(0);
        let first = if orbit.group.is_symplectic() { Factor::sp(n) } else { Factor::o(n) };
        out.push(ColumnGroup { factor: first, first_column: 1, odd_block: true });
        for i in (1..odd_cols.len()).step_by(2) {
            out.push(ColumnGroup {
                factor: Factor::gl(odd_cols.part(i)),
                first_column: i + 1,
                odd_block: true,
            });
        }
    }
    out
}

/// `M_gamma`: one factor per distinct part, in decreasing order of part size.
pub fn centralizer_reductive(orbit: &OrbitDatum) -> ReductiveFactorList {
    let factors = orbit
        .lambda
        .distinct_parts()
        .into_iter()
        .map(|(j, a)| match orbit.multiplicity_forms[&j].kind {
            FormKind::Orthogonal => Factor::o(a),
            FormKind::Symplectic => Factor::sp(a),
            FormKind::General => Factor::gl(a),
        })
        .collect();
    ReductiveFactorList { factors }
}

pub fn levi(orbit: &OrbitDatum) -> Result<ReductiveFactorList> {
    require_classical(orbit.group)?;
    Ok(ReductiveFactorList {
        factors: column_groups(orbit).into_iter().map(|c| c.factor).collect(),
    })
}

pub fn embedding_graph(orbit: &OrbitDatum) -> Result<EmbeddingGraph> {
    require_classical(orbit.group)?;
    let rows = orbit.lambda.distinct_parts();
    let cols = column_groups(orbit);
    let mut edges = Vec::new();
    for (hi, &(j, _)) in rows.iter().enumerate() {
        for (li, c) in cols.iter().enumerate() {
            if c.odd_block == (j % 2 == 1) && c.first_column <= j {
                edges.push((hi, li));
            }
        }
    }
    Ok(EmbeddingGraph {
        h_vertices: centralizer_reductive(orbit).factors,
        l_vertices: cols.into_iter().map(|c| c.factor).collect(),
        edges,
    })
}

/// h-weights on the standard module.
pub fn standard_weights(lambda: &Partition) -> Vec<i64> {
    let mut w = Vec::with_capacity(lambda.size());
    for &j in lambda.parts() {
        let j = j as i64;
        w.extend((0..j).map(|i| j - 1 - 2 * i));
    }
    w
}

pub fn graded_dims(orbit: &OrbitDatum) -> BTreeMap<i64, usize> {
    let w = standard_weights(&orbit.lambda);
    let mut dims = BTreeMap::new();
    let mut bump = |k: i64| *dims.entry(k).or_insert(0) += 1;
    for a in 0..w.len() {
        match orbit.group.family {
            Family::A => (0..w.len()).for_each(|b| bump(w[a] - w[b])),
            Family::B | Family::D => (a + 1..w.len()).for_each(|b| bump(w[a] + w[b])),
            Family::C => (a..w.len()).for_each(|b| bump(w[a] + w[b])),
        }
    }
    dims
}

pub fn dim_group(group: GroupType) -> usize {
    let m = group.dim;
    match group.family {
        Family::A => m * m,
        Family::B | Family::D => m * (m - 1) / 2,
        Family::C => m * (m + 1) / 2,
    }
}

pub fn dim_maximal_unipotent(group: GroupType) -> usize {
    (dim_group(group) - group.rank()) / 2
}

pub fn dim_centralizer(orbit: &OrbitDatum) -> usize {
    let cols = orbit.lambda.transpose();
    let squares: usize = cols.parts().iter().map(|c| c * c).sum();
    let odd = orbit.lambda.parts().iter().filter(|&&p| p % 2 == 1).count();
    match orbit.group.family {
        Family::A => squares,
        Family::B | Family::D => (squares - odd) / 2,
        Family::C => (squares + odd) / 2,
    }
}

pub fn dim_orbit(orbit: &OrbitDatum) -> usize {
    dim_group(orbit.group) - dim_centralizer(orbit)
}

pub fn whittaker_induction_dim(orbit: &OrbitDatum, h: &ReductiveFactorList, s_dim: usize) -> Result<usize> {
    if s_dim % 2 == 1 {
        return Err(Error::Precondition(format!("symplectic dimension {s_dim} is odd")));
    }
    if !centralizer_reductive(orbit).contains_factorwise(h) {
        return Err(Error::Precondition(format!(
            "{h} does not embed in the reductive centralizer {} of {orbit}",
            centralizer_reductive(orbit)
        )));
    }
    let dh = h.dim();
    Ok(s_dim + (dim_centralizer(orbit) - dh) + (dim_group(orbit.group) - dh))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReductionMode {
    Plain,
    Whittaker,
}

pub fn reduction_dims(ambient_dim: usize, reducer: GroupType, mode: ReductionMode) -> Result<usize> {
    let cut = match mode {
        ReductionMode::Plain => 2 * dim_group(reducer),
        ReductionMode::Whittaker => 2 * dim_maximal_unipotent(reducer),
    };
    ambient_dim
        .checked_sub(cut)
        .ok_or(Error::NegativeReduction { ambient: ambient_dim, reducer })
}
