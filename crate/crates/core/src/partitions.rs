//! Partitions, group types, and the combinatorics of Young diagrams.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn is_orthogonal(self) -> bool {
        matches!(self, Family::B | Family::D)
    }

    pub fn is_symplectic(self) -> bool {
        self == Family::C
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// A classical group, given by its family and the dimension of its standard module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawGroupType")]
pub struct GroupType {
    pub family: Family,
    pub dim: usize,
}

#[derive(Deserialize)]
struct RawGroupType {
    family: Family,
    dim: usize,
}

impl TryFrom<RawGroupType> for GroupType {
    type Error = Error;

    fn try_from(raw: RawGroupType) -> Result<Self> {
        GroupType::new(raw.family, raw.dim)
    }
}

impl GroupType {
    pub fn new(family: Family, dim: usize) -> Result<Self> {
        let reason = match family {
            _ if dim == 0 => Some("standard dimension must be positive"),
            Family::B if dim.is_multiple_of(2) => Some("type B needs odd standard dimension"),
            Family::C | Family::D if dim % 2 == 1 => Some("types C and D need even standard dimension"),
            _ => None,
        };
        match reason {
            Some(reason) => Err(Error::InvalidGroup { family, dim, reason }),
            None => Ok(GroupType { family, dim }),
        }
    }

    pub fn a(n: usize) -> Self {
        Self::new(Family::A, n).expect("valid type A")
    }

    pub fn b(dim: usize) -> Self {
        Self::new(Family::B, dim).expect("valid type B")
    }

    pub fn c(dim: usize) -> Self {
        Self::new(Family::C, dim).expect("valid type C")
    }

    pub fn d(dim: usize) -> Self {
        Self::new(Family::D, dim).expect("valid type D")
    }

    /// The orthogonal family of a given standard dimension.
    pub fn orthogonal(dim: usize) -> Result<Self> {
        if dim % 2 == 1 {
            Self::new(Family::B, dim)
        } else {
            Self::new(Family::D, dim)
        }
    }

    pub fn is_orthogonal(&self) -> bool {
        self.family.is_orthogonal()
    }

    pub fn is_symplectic(&self) -> bool {
        self.family.is_symplectic()
    }

    pub fn rank(&self) -> usize {
        match self.family {
            Family::A => self.dim,
            Family::B | Family::C | Family::D => self.dim / 2,
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family, self.dim)
    }
}

impl FromStr for GroupType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (fam, dim) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected FAMILY:DIM, got {s:?}")))?;
        let dim = dim
            .trim()
            .parse::<usize>()
            .map_err(|e| Error::Parse(format!("bad dimension in {s:?}: {e}")))?;
        GroupType::new(fam.parse()?, dim)
    }
}

/// A weakly decreasing list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        let size = parts.iter().sum();
        Ok(Partition { parts, size })
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `[m^k]`
    pub fn rectangle(m: usize, k: usize) -> Self {
        Self::from_unsorted(vec![m; k])
    }

    /// `[m, 1^r]`
    pub fn hook(m: usize, r: usize) -> Self {
        let mut parts = vec![m];
        parts.extend(std::iter::repeat_n(1, r));
        Self::from_unsorted(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Multiplicity of each distinct part.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Distinct parts in decreasing order, with multiplicities.
    pub fn distinct_parts(&self) -> Vec<(usize, usize)> {
        self.multiplicities().into_iter().rev().collect()
    }

    pub fn multiplicity(&self, j: usize) -> usize {
        self.parts.iter().filter(|&&p| p == j).count()
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition::new(parts).expect("column lengths are weakly decreasing")
    }

    fn prefix_sums(&self, len: usize) -> Vec<usize> {
        let mut acc = 0;
        (0..len)
            .map(|i| {
                acc += self.part(i);
                acc
            })
            .collect()
    }

    pub fn dominates(&self, rhs: &Partition) -> Result<bool> {
        if self.size != rhs.size {
            return Err(Error::SizesDiffer { lhs: self.clone(), rhs: rhs.clone() });
        }
        let len = self.len().max(rhs.len());
        let (l, r) = (self.prefix_sums(len), rhs.prefix_sums(len));
        Ok(l.iter().zip(&r).all(|(a, b)| a >= b))
    }

    pub fn parity_profile(&self) -> ParityProfile {
        let (even, odd): (Vec<usize>, Vec<usize>) = self.parts.iter().partition(|&&p| p % 2 == 0);
        ParityProfile {
            all_even: odd.is_empty(),
            all_odd: even.is_empty(),
            even_subpartition: Partition::from_unsorted(even),
            odd_subpartition: Partition::from_unsorted(odd),
        }
    }

    /// `(m, r)` when the partition is `[m, 1^r]`.
    pub fn hook_form(&self) -> Option<HookForm> {
        let (&arm, rest) = self.parts.split_first()?;
        rest.iter().all(|&p| p == 1).then_some(HookForm { arm, leg_count: rest.len() })
    }

    /// Concatenation of two partitions, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// All partitions of `n`, lexicographically decreasing.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition::new(cur.clone()).expect("generated decreasing"));
                return;
            }
            for p in (1..=max.min(rem)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Accepts `5,1,1,1`, `[5,1,1,1]` and exponent shorthand such as `5,1^3`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in body.split(',') {
            let tok = tok.trim();
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b, e),
                None => (tok, "1"),
            };
            let bad = |e: std::num::ParseIntError| Error::Parse(format!("bad part {tok:?}: {e}"));
            let base: usize = base.trim().parse().map_err(bad)?;
            let exp: usize = exp.trim().parse().map_err(bad)?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityProfile {
    pub all_even: bool,
    pub all_odd: bool,
    pub even_subpartition: Partition,
    pub odd_subpartition: Partition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookForm {
    pub arm: usize,
    pub leg_count: usize,
}

fn check_size(group: GroupType, lambda: &Partition) -> Result<()> {
    if lambda.size() != group.dim {
        return Err(Error::SizeMismatch {
            group,
            lambda: lambda.clone(),
            expected: group.dim,
            got: lambda.size(),
        });
    }
    Ok(())
}

pub const ORTHOGONAL_RULE: &str = "even parts must occur with even multiplicity";
pub const SYMPLECTIC_RULE: &str = "odd parts must occur with even multiplicity";

/// The parity of parts whose multiplicity must be even, if any.
fn constrained_parity(family: Family) -> Option<usize> {
    match family {
        Family::A => None,
        Family::B | Family::D => Some(0),
        Family::C => Some(1),
    }
}

fn first_violation(family: Family, lambda: &Partition) -> Option<usize> {
    let parity = constrained_parity(family)?;
    lambda
        .distinct_parts()
        .into_iter()
        .find(|&(j, a)| j % 2 == parity && a % 2 == 1)
        .map(|(j, _)| j)
}

pub fn is_valid(group: GroupType, lambda: &Partition) -> Result<bool> {
    check_size(group, lambda)?;
    Ok(first_violation(group.family, lambda).is_none())
}

/// Like [`is_valid`] but reports the violated rule.
pub fn validate(group: GroupType, lambda: &Partition) -> Result<()> {
    if is_valid(group, lambda)? {
        return Ok(());
    }
    let rule = if group.is_symplectic() { SYMPLECTIC_RULE } else { ORTHOGONAL_RULE };
    Err(Error::InvalidOrbit { group, lambda: lambda.clone(), rule })
}

/// The largest partition valid for `group` that is dominated by `lambda`.
pub fn collapse(group: GroupType, lambda: &Partition) -> Result<Partition> {
    check_size(group, lambda)?;
    if group.family == Family::A {
        return Err(Error::Unsupported("collapse is defined for types B, C, D".into()));
    }
    let mut parts = lambda.parts().to_vec();
    while let Some(q) = first_violation(group.family, &Partition::from_unsorted(parts.clone())) {
        let last = parts.iter().rposition(|&p| p == q).expect("violating part present");
        parts[last] -= 1;
        match parts[last + 1..].iter().position(|&p| p + 1 < q) {
            Some(off) => parts[last + 1 + off] += 1,
            None => parts.push(1),
        }
        parts.retain(|&p| p > 0);
    }
    Ok(Partition::new(parts).expect("collapse keeps parts decreasing"))
}

pub fn is_even_orbit(group: GroupType, lambda: &Partition) -> Result<bool> {
    validate(group, lambda)?;
    let prof = lambda.parity_profile();
    Ok(prof.all_even || prof.all_odd)
}

/// All partitions of `group.dim` valid for `group`, lexicographically decreasing.
pub fn valid_partitions(group: GroupType) -> Vec<Partition> {
    Partition::all(group.dim)
        .into_iter()
        .filter(|p| first_violation(group.family, p).is_none())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn validity_examples() {
        assert!(is_valid(GroupType::d(8), &p("4,4")).unwrap());
        assert!(!is_valid(GroupType::d(4), &p("2,1,1")).unwrap());
        assert!(is_valid(GroupType::c(6), &p("3,3")).unwrap());
        assert!(matches!(
            is_valid(GroupType::d(8), &p("3,3")),
            Err(Error::SizeMismatch { expected: 8, got: 6, .. })
        ));
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p("5,1,1,1").transpose(), p("4,1,1,1,1"));
        assert_eq!(p("2,2").transpose(), p("2,2"));
        assert_eq!(p("6,6").transpose(), p("2^6"));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
    }

    #[test]
    fn dominance_examples() {
        assert!(p("4,2").dominates(&p("3,3")).unwrap());
        assert!(p("3,1^4").dominates(&p("3,1^4")).unwrap());
        assert!(!p("3,1,1,1,1").dominates(&p("2,2,2,1")).unwrap());
        assert!(p("4,2").dominates(&p("3,1")).is_err());
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(collapse(GroupType::c(6), &p("5,1")).unwrap(), p("4,2"));
        assert_eq!(collapse(GroupType::b(7), &p("3,2,1,1")).unwrap(), p("3,1,1,1,1"));
        assert_eq!(collapse(GroupType::c(6), &p("4,2")).unwrap(), p("4,2"));
    }

    #[test]
    fn parity_and_hooks() {
        let prof = p("4,1,1").parity_profile();
        assert_eq!(prof.even_subpartition, p("4"));
        assert_eq!(prof.odd_subpartition, p("1,1"));
        assert!(p("5,1,1,1").parity_profile().all_odd);
        assert!(p("4,4,2,2").parity_profile().all_even);

        assert_eq!(p("5,1,1,1").hook_form(), Some(HookForm { arm: 5, leg_count: 3 }));
        assert_eq!(p("4,4").hook_form(), None);
        assert_eq!(p("7").hook_form(), Some(HookForm { arm: 7, leg_count: 0 }));
        assert_eq!(p("1^5").hook_form(), Some(HookForm { arm: 1, leg_count: 4 }));
    }

    #[test]
    fn even_orbits() {
        assert!(is_even_orbit(GroupType::d(8), &p("5,1,1,1")).unwrap());
        assert!(!is_even_orbit(GroupType::c(8), &p("4,1,1,1,1")).unwrap());
        assert!(is_even_orbit(GroupType::d(8), &p("1^8")).unwrap());
    }

    #[test]
    fn parsing() {
        assert_eq!(p("[5,1^3]"), p("5,1,1,1"));
        assert!("3,4".parse::<Partition>().is_err());
        assert_eq!("D:8".parse::<GroupType>().unwrap(), GroupType::d(8));
        assert!("C:7".parse::<GroupType>().is_err());
        assert!("B:8".parse::<GroupType>().is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn json_shapes() {
        assert_eq!(serde_json::to_string(&p("5,1,1,1")).unwrap(), "[5,1,1,1]");
        assert_eq!(
            serde_json::to_string(&GroupType::d(8)).unwrap(),
            r#"{"family":"D","dim":8}"#
        );
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
        assert!(serde_json::from_str::<GroupType>(r#"{"family":"C","dim":3}"#).is_err());
    }
}
