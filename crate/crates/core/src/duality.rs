//! Moment-map transfer of orbits, the hook-type dualities, Barbasch-Vogan
//! duality, and the static atlas of exceptional dual pairs.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::classifier::{self, ClassificationVerdict};
use crate::error::{Error, Result};
use crate::orbit::{self, Factor, OrbitDatum, ReductiveFactorList};
use crate::partitions::{self, Family, GroupType, Partition};

const EMBEDDED_ATLAS: &str = include_str!("../data/atlas.json");

/// The symplectic representation `S` of a datum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SDescriptor {
    Zero,
    StandardSymplectic(usize),
    StdPlusDual(usize),
    DualOfU1,
    Named(String),
}

impl SDescriptor {
    pub fn dim(&self) -> Option<usize> {
        match self {
            SDescriptor::Zero => Some(0),
            SDescriptor::StandardSymplectic(d) | SDescriptor::StdPlusDual(d) => Some(*d),
            SDescriptor::DualOfU1 | SDescriptor::Named(_) => None,
        }
    }
}

impl fmt::Display for SDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SDescriptor::Zero => f.write_str("0"),
            SDescriptor::StandardSymplectic(d) => write!(f, "std_{d}"),
            SDescriptor::StdPlusDual(d) => write!(f, "std+std*_{d}"),
            SDescriptor::DualOfU1 => f.write_str("dual(u1)"),
            SDescriptor::Named(tag) => f.write_str(tag),
        }
    }
}

/// Parses the [`Display`](fmt::Display) forms; anything else becomes `Named`.
impl std::str::FromStr for SDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let dim = |t: &str| t.parse::<usize>().map_err(|e| Error::Parse(format!("S descriptor {s:?}: {e}")));
        Ok(match s {
            "" => return Err(Error::Parse("empty S descriptor".into())),
            "0" | "zero" => SDescriptor::Zero,
            "dual(u1)" => SDescriptor::DualOfU1,
            _ if s.starts_with("std+std*_") => SDescriptor::StdPlusDual(dim(&s[9..])?),
            _ if s.starts_with("std_") => SDescriptor::StandardSymplectic(dim(&s[4..])?),
            _ => SDescriptor::Named(s.to_string()),
        })
    }
}

/// `(iota: H x SL2 -> G, S)`, with `iota` given by `H` and the sl2 partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDatum", into = "RawDatum")]
pub struct HypersphericalDatum {
    pub group: GroupType,
    pub h: ReductiveFactorList,
    pub sl2_partition: Partition,
    pub s: SDescriptor,
    /// Isogeny tag such as `PGSO_8`; ignored by comparisons with atlas rows.
    pub isogeny: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct RawDatum {
    group: GroupType,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    isogeny: Option<String>,
    h: ReductiveFactorList,
    sl2_partition: Partition,
    s: SDescriptor,
}

impl TryFrom<RawDatum> for HypersphericalDatum {
    type Error = Error;

    fn try_from(r: RawDatum) -> Result<Self> {
        let mut d = HypersphericalDatum::new(r.group, r.h, r.sl2_partition, r.s)?;
        d.isogeny = r.isogeny;
        Ok(d)
    }
}

impl From<HypersphericalDatum> for RawDatum {
    fn from(d: HypersphericalDatum) -> Self {
        RawDatum { group: d.group, isogeny: d.isogeny, h: d.h, sl2_partition: d.sl2_partition, s: d.s }
    }
}

impl HypersphericalDatum {
    pub fn new(group: GroupType, h: ReductiveFactorList, sl2_partition: Partition, s: SDescriptor) -> Result<Self> {
        let orbit = OrbitDatum::new(group, sl2_partition.clone())?;
        let m = orbit::centralizer_reductive(&orbit);
        if !m.contains_factorwise(&h) {
            return Err(Error::Precondition(format!("{h} does not embed in the reductive centralizer {m} of {orbit}")));
        }
        if s.dim().is_some_and(|d| d % 2 == 1) {
            return Err(Error::Precondition(format!("S = {s} has odd dimension")));
        }
        Ok(HypersphericalDatum { group, h, sl2_partition, s, isogeny: None })
    }

    /// The datum with `H = M_gamma`, dropping orthogonal factors of size one.
    pub fn from_orbit(orbit: &OrbitDatum, s: SDescriptor) -> Result<Self> {
        let h = orbit::centralizer_reductive(orbit).without_orthogonal_ones();
        Self::new(orbit.group, h, orbit.lambda.clone(), s)
    }

    pub fn orbit(&self) -> OrbitDatum {
        OrbitDatum::new(self.group, self.sl2_partition.clone()).expect("validated on construction")
    }

    /// `dim M`, when `S` has a known dimension.
    pub fn dim(&self) -> Result<usize> {
        let s = self.s.dim().ok_or_else(|| Error::Unsupported(format!("S = {} has no fixed dimension", self.s)))?;
        orbit::whittaker_induction_dim(&self.orbit(), &self.h, s)
    }

    fn same_as(&self, other: &HypersphericalDatum) -> bool {
        self.group == other.group
            && self.sl2_partition == other.sl2_partition
            && self.h.without_orthogonal_ones().same_up_to_order(&other.h.without_orthogonal_ones())
    }
}

impl fmt::Display for HypersphericalDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, H={}, {}, S={})", self.group, self.h, self.sl2_partition, self.s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DualSide {
    Datum(HypersphericalDatum),
    SphericalCotangent { group: String, subgroup: String },
    VectorSpace { group: String, description: String },
}

impl fmt::Display for DualSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualSide::Datum(d) => d.fmt(f),
            DualSide::SphericalCotangent { group, subgroup } => write!(f, "T*({subgroup} \\ {group})"),
            DualSide::VectorSpace { group, description } => write!(f, "{group}, {description}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DualStatus {
    Proven,
    Expected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualPairRecord {
    pub side_a: DualSide,
    pub side_b: DualSide,
    pub status: DualStatus,
    pub citation: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl DualPairRecord {
    fn flipped(self) -> Self {
        DualPairRecord { side_a: self.side_b, side_b: self.side_a, ..self }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Atlas {
    pub version: u32,
    /// Citations for the rule-based duals, keyed by rule.
    pub rule_citations: BTreeMap<String, String>,
    pub rows: Vec<DualPairRecord>,
}

impl Atlas {
    pub fn embedded() -> &'static Atlas {
        static ATLAS: OnceLock<Atlas> = OnceLock::new();
        ATLAS.get_or_init(|| Self::from_json(EMBEDDED_ATLAS).expect("embedded atlas is well formed"))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let atlas: Atlas = serde_json::from_str(text).map_err(|e| Error::Parse(format!("atlas: {e}")))?;
        if let Some(row) = atlas.rows.iter().find(|r| r.citation.trim().is_empty()) {
            return Err(Error::Parse(format!("atlas row {} has no citation", row.side_a)));
        }
        if let Some(key) = RULES.iter().find(|k| atlas.rule_citations.get(**k).is_none_or(|c| c.trim().is_empty())) {
            return Err(Error::Parse(format!("atlas has no citation for rule {key}")));
        }
        Ok(atlas)
    }

    fn rule(&self, key: &str) -> String {
        self.rule_citations[key].clone()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum DualOutcome {
    Known(DualPairRecord),
    Unknown { verdict: Option<ClassificationVerdict> },
}

/// Removes the first column of the Young diagram and pads with rows of length one.
pub fn moment_transfer(source: &OrbitDatum, target: GroupType) -> Result<OrbitDatum> {
    let compatible = match source.group.family {
        Family::C => target.is_orthogonal(),
        Family::B | Family::D => target.family == Family::C,
        Family::A => false,
    };
    if !compatible {
        return Err(Error::Unsupported(format!("no moment transfer from {} to {target}", source.group)));
    }
    let core: Vec<usize> = source.lambda.parts().iter().filter(|&&p| p > 1).map(|p| p - 1).collect();
    let used: usize = core.iter().sum();
    let pad = target.dim.checked_sub(used).ok_or_else(|| {
        Error::Precondition(format!("{target} is too small for the transfer of {source} (needs {used})"))
    })?;
    let lambda = Partition::new(core.into_iter().chain(std::iter::repeat_n(1, pad)).collect())?;
    OrbitDatum::new(target, lambda).map_err(|e| Error::Internal(format!("transfer produced an invalid orbit: {e}")))
}

/// Transfer with `H` the isometry group of the padding space, which carries
/// `S` when the target is symplectic.
pub fn transfer_datum(source: &OrbitDatum, target: GroupType) -> Result<HypersphericalDatum> {
    let orbit = moment_transfer(source, target)?;
    let used: usize = source.lambda.parts().iter().map(|p| p - 1).sum();
    let pad = target.dim - used;
    let (h, s) = match (pad, target.family) {
        (0, _) => (ReductiveFactorList::default(), SDescriptor::Zero),
        (p, Family::C) => (ReductiveFactorList::new(vec![Factor::sp(p)]), SDescriptor::StandardSymplectic(p)),
        (p, _) => (ReductiveFactorList::new(vec![Factor::o(p)]), SDescriptor::Zero),
    };
    HypersphericalDatum::new(target, h, orbit.lambda, s)
}

fn single_factor(h: &ReductiveFactorList) -> Option<Factor> {
    match h.without_orthogonal_ones().factors.as_slice() {
        [f] => Some(*f),
        _ => None,
    }
}

fn is_orthogonal_factor(f: Factor) -> bool {
    matches!(f.family, orbit::FactorFamily::O | orbit::FactorFamily::SO)
}

fn datum(group: GroupType, h: Factor, lambda: Partition, s: SDescriptor) -> HypersphericalDatum {
    HypersphericalDatum::new(group, ReductiveFactorList::new(vec![h]), lambda, s).expect("hook data are valid")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum HookFamily {
    /// `(D_k, O_{2a+1}, [2k-2a-1, 1^{2a+1}])`.
    EvenOrthogonal { k: usize, a: usize },
    /// `(B_k, O_{2a}, [2k-2a+1, 1^{2a}])`.
    OddOrthogonal { k: usize, a: usize },
    /// `(C_k, Sp_{2k-2a+2}, [2a-2, 1^{2k-2a+2}], std)`.
    Symplectic { k: usize, a: usize },
}

fn hook_family(d: &HypersphericalDatum) -> Option<HookFamily> {
    let f = single_factor(&d.h)?;
    let n = d.group.dim;
    let r = f.size;
    let matches = |lambda: Partition| lambda == d.sl2_partition;
    match d.group.family {
        Family::D if is_orthogonal_factor(f) && d.s == SDescriptor::Zero && r % 2 == 1 && r < n => {
            let (k, a) = (n / 2, (r - 1) / 2);
            (a >= 1 && matches(Partition::hook(n - r, r))).then_some(HookFamily::EvenOrthogonal { k, a })
        }
        Family::B if is_orthogonal_factor(f) && d.s == SDescriptor::Zero && r % 2 == 0 && r < n => {
            let (k, a) = (n / 2, r / 2);
            (a >= 2 && matches(Partition::hook(n - r, r))).then_some(HookFamily::OddOrthogonal { k, a })
        }
        Family::C if f.family == orbit::FactorFamily::Sp && d.s == SDescriptor::StandardSymplectic(r) && r < n => {
            let k = n / 2;
            let a = k + 1 - r / 2;
            (a >= 2 && matches(Partition::hook(n - r, r))).then_some(HookFamily::Symplectic { k, a })
        }
        _ => None,
    }
}

pub fn hook_dual(d: &HypersphericalDatum) -> Result<HypersphericalDatum> {
    match hook_family(d).ok_or(Error::NotHookFamily)? {
        HookFamily::EvenOrthogonal { k, a } => {
            let r = 2 * (k - a) + 1;
            Ok(datum(d.group, Factor::o(r), Partition::hook(2 * k - r, r), SDescriptor::Zero))
        }
        HookFamily::OddOrthogonal { k, a } => {
            let r = 2 * k - 2 * a + 2;
            let lambda = Partition::hook(2 * a - 2, r);
            Ok(datum(GroupType::c(2 * k), Factor::sp(r), lambda, SDescriptor::StandardSymplectic(r)))
        }
        HookFamily::Symplectic { k, a } => {
            let r = 2 * a;
            Ok(datum(GroupType::b(2 * k + 1), Factor::o(r), Partition::hook(2 * k + 1 - r, r), SDescriptor::Zero))
        }
    }
}

/// Barbasch-Vogan duality between types B and C, and within type D.
pub fn bv_dual(group: GroupType, lambda: &Partition) -> Result<(GroupType, Partition)> {
    partitions::validate(group, lambda)?;
    let mut t = lambda.transpose().parts().to_vec();
    let target = match group.family {
        Family::B if group.dim == 1 => return Err(Error::Unsupported("B_0 has no dual group".into())),
        Family::B => {
            let last = t.len() - 1;
            t[last] -= 1;
            GroupType::c(group.dim - 1)
        }
        Family::C => {
            t[0] += 1;
            GroupType::b(group.dim + 1)
        }
        Family::D => group,
        Family::A => return Err(Error::Unsupported("Barbasch-Vogan duality for type A".into())),
    };
    t.retain(|&p| p > 0);
    let collapsed = partitions::collapse(target, &Partition::new(t)?)?;
    Ok((target, collapsed))
}

pub fn atlas_lookup(d: &HypersphericalDatum) -> Option<DualPairRecord> {
    let hit = |side: &DualSide| {
        matches!(side, DualSide::Datum(x) if x.group == d.group && x.sl2_partition == d.sl2_partition)
    };
    Atlas::embedded().rows.iter().find_map(|row| {
        if hit(&row.side_a) {
            Some(row.clone())
        } else if hit(&row.side_b) {
            Some(row.clone().flipped())
        } else {
            None
        }
    })
}

const RULES: [&str; 5] = [HOOK_EVEN, HOOK_ODD, GL_RULE, GROUP_CASE, DISCRIMINANT_NOTE];
const HOOK_EVEN: &str = "hook_even";
const HOOK_ODD: &str = "hook_odd";
const GL_RULE: &str = "gl";
const GROUP_CASE: &str = "group_case";
const DISCRIMINANT_NOTE: &str = "discriminant_note";

fn gl_dual(d: &HypersphericalDatum) -> Option<HypersphericalDatum> {
    let n = d.group.dim;
    if d.group.family != Family::A || n < 2 {
        return None;
    }
    let hook = Partition::hook(n - 1, 1);
    let trivial = Partition::rectangle(1, n);
    let h = single_factor(&d.h)?;
    let gl = |m: usize| ReductiveFactorList::new(vec![Factor::gl(m)]);
    if d.sl2_partition == hook && h == Factor::gl(1) && d.s == SDescriptor::Zero {
        HypersphericalDatum::new(d.group, gl(n), trivial, SDescriptor::StdPlusDual(2 * n)).ok()
    } else if d.sl2_partition == trivial && h == Factor::gl(n) && d.s == SDescriptor::StdPlusDual(2 * n) {
        HypersphericalDatum::new(d.group, gl(1), hook, SDescriptor::Zero).ok()
    } else {
        None
    }
}

fn regular_partition(group: GroupType) -> Partition {
    match group.family {
        Family::D => Partition::hook(group.dim - 1, 1),
        _ => Partition::rectangle(group.dim, 1),
    }
}

fn dual_group(group: GroupType) -> Option<GroupType> {
    match group.family {
        Family::B => GroupType::new(Family::C, group.dim - 1).ok(),
        Family::C => Some(GroupType::b(group.dim + 1)),
        Family::D => Some(group),
        Family::A => None,
    }
}

fn full_group_factor(group: GroupType) -> Factor {
    if group.is_symplectic() { Factor::sp(group.dim) } else { Factor::o(group.dim) }
}

/// `(G, H = G, trivial)` against `(G^dual, H = 1, regular)`.
fn group_case_dual(d: &HypersphericalDatum) -> Option<HypersphericalDatum> {
    if d.s != SDescriptor::Zero {
        return None;
    }
    let dual = dual_group(d.group)?;
    let h = d.h.without_orthogonal_ones();
    let trivial = Partition::rectangle(1, d.group.dim);
    let full = ReductiveFactorList::new(vec![full_group_factor(d.group)]);
    if d.sl2_partition == trivial && h.same_up_to_order(&full) {
        let lambda = regular_partition(dual);
        return HypersphericalDatum::new(dual, ReductiveFactorList::default(), lambda, SDescriptor::Zero).ok();
    }
    if d.sl2_partition == regular_partition(d.group) && h.is_empty() {
        let full = ReductiveFactorList::new(vec![full_group_factor(dual)]);
        return HypersphericalDatum::new(dual, full, Partition::rectangle(1, dual.dim), SDescriptor::Zero).ok();
    }
    None
}

fn record(a: &HypersphericalDatum, b: HypersphericalDatum, status: DualStatus, rule: &str) -> DualPairRecord {
    DualPairRecord {
        side_a: DualSide::Datum(a.clone()),
        side_b: DualSide::Datum(b),
        status,
        citation: Atlas::embedded().rule(rule),
        notes: Vec::new(),
    }
}

pub fn dual_of(d: &HypersphericalDatum) -> DualOutcome {
    if let Some(family) = hook_family(d) {
        let dual = hook_dual(d).expect("hook family detected");
        let rec = match family {
            HookFamily::EvenOrthogonal { .. } => record(d, dual, DualStatus::Proven, HOOK_EVEN),
            _ => DualPairRecord {
                notes: vec![Atlas::embedded().rule(DISCRIMINANT_NOTE)],
                ..record(d, dual, DualStatus::Proven, HOOK_ODD)
            },
        };
        return DualOutcome::Known(rec);
    }
    if let Some(dual) = gl_dual(d) {
        return DualOutcome::Known(record(d, dual, DualStatus::Proven, GL_RULE));
    }
    if let Some(dual) = group_case_dual(d) {
        return DualOutcome::Known(record(d, dual, DualStatus::Expected, GROUP_CASE));
    }
    if let Some(row) = atlas_lookup(d) {
        return DualOutcome::Known(row);
    }
    DualOutcome::Unknown { verdict: classifier::classify(&d.orbit()).ok() }
}

/// Whether two data agree up to isogeny tags, order of factors of `H`, and `O_1` factors.
pub fn same_datum(a: &HypersphericalDatum, b: &HypersphericalDatum) -> bool {
    a.same_as(b) && a.s == b.s
}
