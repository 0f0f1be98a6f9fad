//! Springer maps `γ` from classes to irreducible Weyl characters, their
//! images `Λ`, and the partial-sum profiles used to compare the two orders.
//!
//! Only the forward direction `(α, β) ↦ class` is given by closed formulas;
//! [`gamma`] inverts it through a lookup table built once per datum.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::classes::{
    epsilon_at_zero, sp_to_so_odd, validate_class, Characteristic, ChiMap, ClassLabel, DegTag, Eps,
    EpsilonMap, GroupDatum, LieType, Variety,
};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_bipartitions, BiPartition, Partition};

/// An irreducible character of the Weyl group of type `B_n`, `C_n` or
/// `D_n`, labeled by a pair of partitions. In type `D` the pair is taken
/// with `β_1 ≤ α_1`, and a pair `(α, α)` carries a tag choosing one of the
/// two characters it stands for.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylCharacter {
    pub pair: BiPartition,
    pub deg: Option<DegTag>,
}

impl WeylCharacter {
    pub fn new(pair: BiPartition) -> Self {
        WeylCharacter { pair, deg: None }
    }

    pub fn tagged(pair: BiPartition, deg: DegTag) -> Self {
        WeylCharacter { pair, deg: Some(deg) }
    }

    /// Convenience constructor from raw part lists, untagged.
    pub fn from_parts(alpha: Vec<u32>, beta: Vec<u32>) -> Result<Self> {
        Ok(WeylCharacter::new(BiPartition::from_parts(alpha, beta)?))
    }

    pub fn alpha(&self) -> &Partition {
        &self.pair.alpha
    }

    pub fn beta(&self) -> &Partition {
        &self.pair.beta
    }

    pub fn rank(&self) -> u32 {
        self.pair.total()
    }

    /// `α = β`, i.e. one of a degenerate pair in type `D`.
    pub fn is_degenerate(&self) -> bool {
        self.pair.alpha == self.pair.beta
    }

    pub fn with_deg(&self, deg: Option<DegTag>) -> WeylCharacter {
        WeylCharacter { pair: self.pair.clone(), deg }
    }

    /// Is this a legal character label for the Weyl group of `t`?
    pub fn is_well_formed(&self, t: LieType) -> bool {
        match t {
            LieType::B | LieType::C => self.deg.is_none(),
            LieType::D => {
                self.pair.beta.part(0) <= self.pair.alpha.part(0)
                    && self.deg.is_some() == self.is_degenerate()
            }
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("characters always serialize")
    }
}

impl fmt::Display for WeylCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pair)?;
        if let Some(tag) = self.deg {
            write!(f, "~{tag}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct WeylCharacterJson {
    alpha: Vec<u32>,
    beta: Vec<u32>,
    #[serde(default)]
    deg: Option<DegTag>,
}

impl Serialize for WeylCharacter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WeylCharacterJson {
            alpha: self.pair.alpha.parts().to_vec(),
            beta: self.pair.beta.parts().to_vec(),
            deg: self.deg,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeylCharacter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let json = WeylCharacterJson::deserialize(d)?;
        let pair = BiPartition::from_parts(json.alpha, json.beta).map_err(D::Error::custom)?;
        Ok(WeylCharacter { pair, deg: json.deg })
    }
}

/// Every irreducible character of the Weyl group of type `t` and rank `n`,
/// in the enumeration order of pairs, tag `I` before `II`.
pub fn weyl_characters(t: LieType, n: u32) -> Vec<WeylCharacter> {
    let mut out = Vec::new();
    for pair in enumerate_bipartitions(n) {
        push_tagged(t, pair, &mut out);
    }
    out
}

fn push_tagged(t: LieType, pair: BiPartition, out: &mut Vec<WeylCharacter>) {
    let w = WeylCharacter::new(pair);
    match t {
        LieType::D if w.is_degenerate() => {
            for tag in DegTag::BOTH {
                out.push(w.with_deg(Some(tag)));
            }
        }
        LieType::D if !w.is_well_formed(t) => {}
        _ => out.push(w),
    }
}

/// Which inequality system to use: the image for characteristic one, for
/// the characteristic-two group, or for the characteristic-two Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LambdaKind {
    One,
    TwoGroup,
    TwoLie,
}

impl LambdaKind {
    pub fn of(d: &GroupDatum) -> LambdaKind {
        match (d.characteristic, d.variety) {
            (Characteristic::One, _) => LambdaKind::One,
            (Characteristic::Two, Variety::Group) => LambdaKind::TwoGroup,
            (Characteristic::Two, Variety::LieAlgebra) => LambdaKind::TwoLie,
        }
    }
}

/// `(lo, hi)` such that the set is `{α_{i+1} + lo ≤ β_i ≤ α_i + hi}`;
/// `None` drops that side.
fn bounds(kind: LambdaKind, t: LieType) -> (Option<i64>, Option<i64>) {
    use LambdaKind::*;
    use LieType::*;
    match (kind, t) {
        (One, B) => (Some(0), Some(2)),
        (One, C) => (Some(-1), Some(1)),
        (One, D) => (Some(-2), Some(0)),
        (TwoGroup, B | C) => (Some(-2), Some(2)),
        (TwoGroup, D) => (Some(-4), Some(0)),
        (TwoLie, B) => (None, Some(2)),
        (TwoLie, C) => (None, None),
        (TwoLie, D) => (None, Some(0)),
    }
}

/// Membership of a pair in the inequality system, ignoring tags.
pub fn in_lambda(kind: LambdaKind, t: LieType, pair: &BiPartition) -> bool {
    let (lo, hi) = bounds(kind, t);
    (1..=pair.span()).all(|i| {
        let b = pair.b(i);
        lo.is_none_or(|lo| b >= pair.a(i + 1) + lo) && hi.is_none_or(|hi| b <= pair.a(i) + hi)
    })
}

/// Is `w` in the image `Λ(d)` of the Springer map of `d`?
pub fn lambda_set_contains(d: &GroupDatum, w: &WeylCharacter) -> bool {
    w.rank() == d.rank && w.is_well_formed(d.lie_type) && in_lambda(LambdaKind::of(d), d.lie_type, &w.pair)
}

/// `Λ(d)` as a list, in the order of [`weyl_characters`].
pub fn lambda_set(d: &GroupDatum) -> Vec<WeylCharacter> {
    weyl_characters(d.lie_type, d.rank)
        .into_iter()
        .filter(|w| in_lambda(LambdaKind::of(d), d.lie_type, &w.pair))
        .collect()
}

/// Is `w` in `Λ^1` for its type, i.e. the label of a characteristic-one
/// class?
pub fn in_lambda_one(t: LieType, w: &WeylCharacter) -> bool {
    in_lambda(LambdaKind::One, t, &w.pair)
}

/// `ε` attached to a correction term: `0` for `±2`, `ω` for `±1`, `1`
/// otherwise.
fn eps_of(x: i64) -> Eps {
    match x {
        2 | -2 => Eps::Zero,
        1 | -1 => Eps::Omega,
        _ => Eps::One,
    }
}

/// The correction terms `(δ_i, θ_i)` of the forward formula, for the cases
/// given by them (characteristic one, and characteristic-two groups of
/// type `C` and `D`).
fn corrections(d: &GroupDatum, w: &BiPartition, i: usize) -> (i64, i64) {
    let (a, b, a1) = (w.a(i), w.b(i), w.a(i + 1));
    let bp = w.b(i - 1);
    let later = i >= 2;
    match (d.characteristic, d.lie_type) {
        (Characteristic::One, LieType::B) => {
            let delta = if b == a + 2 {
                1
            } else if later && a == bp {
                -1
            } else {
                0
            };
            let theta = if b == a1 {
                1
            } else if b == a + 2 {
                -1
            } else {
                0
            };
            (delta, theta)
        }
        (Characteristic::One, LieType::C) => {
            let delta = if b == a + 1 {
                1
            } else if later && a == bp + 1 {
                -1
            } else {
                0
            };
            let theta = if b == a1 - 1 {
                1
            } else if b == a + 1 {
                -1
            } else {
                0
            };
            (delta, theta)
        }
        (Characteristic::One, LieType::D) => {
            let delta = if b == a {
                1
            } else if later && a == bp + 2 {
                -1
            } else {
                0
            };
            let theta = if b == a1 - 2 {
                1
            } else if b == a {
                -1
            } else {
                0
            };
            (delta, theta)
        }
        (Characteristic::Two, LieType::C | LieType::B) => {
            let delta = if b == a + 2 {
                2
            } else if b == a + 1 {
                1
            } else if later && a == bp + 2 {
                -2
            } else if later && a == bp + 1 {
                -1
            } else {
                0
            };
            let theta = if b == a1 - 2 {
                2
            } else if b == a1 - 1 {
                1
            } else if b == a + 2 {
                -2
            } else if b == a + 1 {
                -1
            } else {
                0
            };
            (delta, theta)
        }
        (Characteristic::Two, LieType::D) => {
            let delta = if b == a {
                2
            } else if b == a - 1 {
                1
            } else if later && a == bp + 4 {
                -2
            } else if later && a == bp + 3 {
                -1
            } else {
                0
            };
            let theta = if b == a1 - 4 {
                2
            } else if b == a1 - 3 {
                1
            } else if b == a {
                -2
            } else if b == a - 1 {
                -1
            } else {
                0
            };
            (delta, theta)
        }
    }
}

/// How many non-default branches of the `δ_i` and `θ_i` tables hold at
/// index `i`. The tables are read top to bottom; this counts every branch
/// whose condition is true, so a value above one means the reading order
/// matters.
pub fn branches_firing(d: &GroupDatum, w: &WeylCharacter, i: usize) -> (usize, usize) {
    let p = &w.pair;
    let (a, b, a1, bp) = (p.a(i), p.b(i), p.a(i + 1), p.b(i - 1));
    let later = i >= 2;
    let count = |conds: &[bool]| conds.iter().filter(|&&c| c).count();
    match (d.characteristic, d.lie_type) {
        (Characteristic::One, LieType::B) => {
            (count(&[b == a + 2, later && a == bp]), count(&[b == a1, b == a + 2]))
        }
        (Characteristic::One, LieType::C) => {
            (count(&[b == a + 1, later && a == bp + 1]), count(&[b == a1 - 1, b == a + 1]))
        }
        (Characteristic::One, LieType::D) => {
            (count(&[b == a, later && a == bp + 2]), count(&[b == a1 - 2, b == a]))
        }
        (Characteristic::Two, LieType::B | LieType::C) => (
            count(&[b == a + 2, b == a + 1, later && a == bp + 2, later && a == bp + 1]),
            count(&[b == a1 - 2, b == a1 - 1, b == a + 2, b == a + 1]),
        ),
        (Characteristic::Two, LieType::D) => (
            count(&[b == a, b == a - 1, later && a == bp + 4, later && a == bp + 3]),
            count(&[b == a1 - 4, b == a1 - 3, b == a, b == a - 1]),
        ),
    }
}

fn to_u32(v: i64, what: &str) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::Inconsistent(format!("negative part {v} in {what}")))
}

fn partition_from(parts: Vec<u32>, what: &str) -> Result<Partition> {
    Partition::new(parts).map_err(|e| Error::Inconsistent(format!("{what}: {e}")))
}

/// Characteristic-one forward map.
fn forward_char_one(d: &GroupDatum, w: &BiPartition) -> Result<ClassLabel> {
    let (odd_base, even_base) = match d.lie_type {
        LieType::B => (1, -1),
        LieType::C => (0, 0),
        LieType::D => (-1, 1),
    };
    let mut parts = Vec::new();
    for i in 1..=w.span() + 1 {
        let (delta, theta) = corrections(d, w, i);
        parts.push(to_u32(2 * w.a(i) + odd_base + delta, "λ_{2i-1}")?);
        parts.push(to_u32(2 * w.b(i) + even_base + theta, "λ_{2i}")?);
    }
    Ok(ClassLabel::char_one(partition_from(parts, "forward map")?))
}

/// Collects `(part, ε)` pairs into a map, checking that repeated parts
/// agree and that the values are legal for their parity.
fn collect_eps(t: LieType, entries: &[(u32, Eps)]) -> Result<EpsilonMap> {
    let zero = epsilon_at_zero(t);
    let mut values = BTreeMap::new();
    for &(p, e) in entries {
        let legal = if p == 0 {
            e == zero
        } else if p % 2 == 1 {
            e == Eps::Omega
        } else {
            e != Eps::Omega
        };
        if !legal {
            return Err(Error::Inconsistent(format!("ε({p}) = {e} is not admissible")));
        }
        if p == 0 || p % 2 == 1 {
            continue;
        }
        if let Some(prev) = values.insert(p, e) {
            if prev != e {
                return Err(Error::Inconsistent(format!("ε({p}) is both {prev} and {e}")));
            }
        }
    }
    Ok(EpsilonMap::new(zero, values))
}

/// Characteristic-two forward map for `Sp(2n)` and `SO(2n)`.
fn forward_unip(d: &GroupDatum, w: &BiPartition) -> Result<ClassLabel> {
    let (odd_base, even_base) = match d.lie_type {
        LieType::D => (-2, 2),
        _ => (0, 0),
    };
    let mut entries = Vec::new();
    for i in 1..=w.span() + 1 {
        let (delta, theta) = corrections(d, w, i);
        entries.push((to_u32(2 * w.a(i) + odd_base + delta, "λ_{2i-1}")?, eps_of(delta)));
        entries.push((to_u32(2 * w.b(i) + even_base + theta, "λ_{2i}")?, eps_of(theta)));
    }
    let eps = collect_eps(d.lie_type, &entries)?;
    let lambda = partition_from(entries.iter().map(|e| e.0).collect(), "forward map")?;
    Ok(ClassLabel::unip(lambda, eps))
}

fn collect_chi(entries: &[(i64, i64)]) -> Result<ClassLabel> {
    let mut chi = BTreeMap::new();
    let mut parts = Vec::with_capacity(entries.len());
    for &(p, x) in entries {
        let (p, x) = (to_u32(p, "λ")?, to_u32(x, "χ")?);
        parts.push(p);
        if p == 0 {
            if x != 0 {
                return Err(Error::Inconsistent(format!("χ(0) = {x}")));
            }
            continue;
        }
        if let Some(prev) = chi.insert(p, x) {
            if prev != x {
                return Err(Error::Inconsistent(format!("χ({p}) is both {prev} and {x}")));
            }
        }
    }
    Ok(ClassLabel::nilp(partition_from(parts, "forward map")?, ChiMap::new(chi)))
}

/// Characteristic-two forward map for the Lie algebras.
fn forward_nilp(d: &GroupDatum, w: &BiPartition) -> Result<ClassLabel> {
    let top = w.span() + 1;
    let (a, b) = (|i| w.a(i), |i| w.b(i));
    let mut entries = Vec::new();
    match d.lie_type {
        LieType::C => {
            let l1 = if a(1) < b(1) { a(1) + b(1) } else { 2 * a(1) };
            entries.push((l1, a(1)));
            for i in 1..=top {
                let even = if b(i) < a(i + 1) {
                    a(i + 1) + b(i)
                } else if b(i) > a(i) {
                    a(i) + b(i)
                } else {
                    2 * b(i)
                };
                let chi_even = if b(i) > a(i) { a(i) } else { b(i) };
                entries.push((even, chi_even));
                let odd = if a(i + 1) > b(i) {
                    a(i + 1) + b(i)
                } else if a(i + 1) < b(i + 1) {
                    a(i + 1) + b(i + 1)
                } else {
                    2 * a(i + 1)
                };
                // When α_{i+1} > β_i this part equals λ_{2i} = α_{i+1} + β_i,
                // whose χ is β_i.
                let chi_odd = if a(i + 1) <= b(i) { a(i + 1) } else { b(i) };
                entries.push((odd, chi_odd));
            }
        }
        LieType::B => {
            let k = w.beta.len();
            for i in 1..=top {
                let odd = if i < k + 1 {
                    a(i) + b(i)
                } else if i == k + 1 {
                    a(i) + 1
                } else {
                    a(i)
                };
                let chi_odd = if i <= k + 1 { a(i) + 1 } else { a(i) };
                entries.push((odd, chi_odd));
                let even = if i < k + 1 { a(i) + b(i) } else { a(i) };
                let chi_even = if i < k + 1 { a(i) + 1 } else { a(i) };
                entries.push((even, chi_even));
            }
        }
        LieType::D => {
            for i in 1..=top {
                entries.push((a(i) + b(i), a(i)));
                entries.push((a(i) + b(i), a(i)));
            }
        }
    }
    collect_chi(&entries)
}

/// The class with Springer label `w`: evaluates the forward formulas of
/// the case selected by `d`.
///
/// ```
/// use unipotent_pieces::classes::{GroupDatum, LieType};
/// use unipotent_pieces::springer::{gamma_inverse, WeylCharacter};
///
/// let sp4 = GroupDatum::char_one(LieType::C, 2);
/// let w = WeylCharacter::from_parts(vec![2], vec![]).unwrap();
/// assert_eq!(gamma_inverse(&sp4, &w).unwrap().lambda().parts(), &[4]);
/// ```
pub fn gamma_inverse(d: &GroupDatum, w: &WeylCharacter) -> Result<ClassLabel> {
    if !lambda_set_contains(d, w) {
        return Err(Error::NotInImage(format!("{w} for {d}")));
    }
    let class = match (d.characteristic, d.variety, d.lie_type) {
        (Characteristic::One, _, _) => forward_char_one(d, &w.pair)?,
        (Characteristic::Two, Variety::Group, LieType::B) => {
            let sp = GroupDatum::char_two_group(LieType::C, d.rank);
            sp_to_so_odd(&forward_unip(&sp, &w.pair)?)?
        }
        (Characteristic::Two, Variety::Group, _) => forward_unip(d, &w.pair)?,
        (Characteristic::Two, Variety::LieAlgebra, _) => forward_nilp(d, &w.pair)?,
    };
    let class = class.with_deg(w.deg);
    if !validate_class(d, &class)? {
        return Err(Error::Inconsistent(format!("{w} evaluates to {class}, which is not a class of {d}")));
    }
    Ok(class)
}

/// `γ` for one datum, as a table in both directions.
#[derive(Debug)]
pub struct GammaTable {
    by_class: HashMap<ClassLabel, WeylCharacter>,
    /// `(γ(c), c)` in the order of `Λ(d)`.
    entries: Vec<(WeylCharacter, ClassLabel)>,
}

impl GammaTable {
    fn build(d: &GroupDatum) -> Result<Self> {
        let mut by_class = HashMap::new();
        let mut entries = Vec::new();
        for w in lambda_set(d) {
            let c = gamma_inverse(d, &w)?;
            if let Some(prev) = by_class.insert(c.clone(), w.clone()) {
                return Err(Error::Inconsistent(format!("{prev} and {w} both evaluate to {c} for {d}")));
            }
            entries.push((w, c));
        }
        Ok(GammaTable { by_class, entries })
    }

    pub fn get(&self, c: &ClassLabel) -> Option<&WeylCharacter> {
        self.by_class.get(c)
    }

    pub fn entries(&self) -> &[(WeylCharacter, ClassLabel)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

type TableCache = RwLock<HashMap<GroupDatum, Result<Arc<GammaTable>>>>;

fn cache() -> &'static TableCache {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The table of `γ` for `d`, built on first use and shared afterwards.
/// Build failures are cached as well.
pub fn gamma_table(d: &GroupDatum) -> Result<Arc<GammaTable>> {
    if let Some(hit) = cache().read().expect("cache lock").get(d) {
        return hit.clone();
    }
    let built = GammaTable::build(d).map(Arc::new);
    cache().write().expect("cache lock").entry(*d).or_insert(built).clone()
}

/// The Springer label of a class.
///
/// ```
/// use unipotent_pieces::classes::{ClassLabel, GroupDatum, LieType};
/// use unipotent_pieces::partitions::Partition;
/// use unipotent_pieces::springer::gamma;
///
/// let sp4 = GroupDatum::char_one(LieType::C, 2);
/// let c = ClassLabel::char_one(Partition::new(vec![1, 1, 1, 1]).unwrap());
/// let w = gamma(&sp4, &c).unwrap();
/// assert_eq!(w.to_json_string(), r#"{"alpha":[],"beta":[1,1],"deg":null}"#);
/// ```
pub fn gamma(d: &GroupDatum, c: &ClassLabel) -> Result<WeylCharacter> {
    let table = gamma_table(d)?;
    table.get(c).cloned().ok_or_else(|| Error::InvalidClass(format!("{c} is not a class of {d}")))
}

/// The partial sums `Δ_i = Σ_{j≤i}(δ_j + θ_j)` and `Θ_i = Δ_{i-1} + δ_i`
/// for `i = 1..=span`, where the span covers every nonzero entry of `w`
/// plus one. Only defined for characteristic-one `SO(2n+1)` and
/// characteristic-two `Sp(2n)`.
pub fn delta_theta_profile(d: &GroupDatum, w: &WeylCharacter) -> Result<(Vec<i64>, Vec<i64>)> {
    let supported = matches!(
        (d.characteristic, d.variety, d.lie_type),
        (Characteristic::One, Variety::Group, LieType::B) | (Characteristic::Two, Variety::Group, LieType::C)
    );
    if !supported {
        return Err(Error::UnsupportedCase(format!("Δ/Θ profile for {d}")));
    }
    if !lambda_set_contains(d, w) {
        return Err(Error::NotInImage(format!("{w} for {d}")));
    }
    let mut deltas = Vec::new();
    let mut thetas = Vec::new();
    let mut acc = 0;
    for i in 1..=w.pair.span() {
        let (delta, theta) = corrections(d, &w.pair, i);
        thetas.push(acc + delta);
        acc += delta + theta;
        deltas.push(acc);
    }
    Ok((deltas, thetas))
}

/// The values `Δ_i`, `Θ_i` predicted from the pair alone.
pub fn delta_theta_closed_form(d: &GroupDatum, w: &WeylCharacter, i: usize) -> (i64, i64) {
    let p = &w.pair;
    let (a, b, a1) = (p.a(i), p.b(i), p.a(i + 1));
    match d.characteristic {
        Characteristic::One => (if b == a1 { 1 } else { 0 }, if b == a + 2 { 1 } else { 0 }),
        Characteristic::Two => (
            if b == a1 - 2 {
                2
            } else if b == a1 - 1 {
                1
            } else {
                0
            },
            if b == a + 2 {
                2
            } else if b == a + 1 {
                1
            } else {
                0
            },
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: &[u32], b: &[u32]) -> WeylCharacter {
        WeylCharacter::from_parts(a.to_vec(), b.to_vec()).unwrap()
    }

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn lambda_membership_examples() {
        let sp4_lie = GroupDatum::char_two_lie(LieType::C, 2);
        assert_eq!(lambda_set(&sp4_lie).len(), enumerate_bipartitions(2).len());
        assert!(lambda_set_contains(&GroupDatum::char_one(LieType::C, 2), &w(&[1], &[1])));
        assert!(!lambda_set_contains(&GroupDatum::char_two_lie(LieType::D, 2), &w(&[], &[2])));
    }

    #[test]
    fn containments_small_rank() {
        for n in 1..=5 {
            for t in LieType::ALL {
                for x in weyl_characters(t, n) {
                    let one = in_lambda(LambdaKind::One, t, &x.pair);
                    let grp = in_lambda(LambdaKind::TwoGroup, t, &x.pair);
                    let lie = in_lambda(LambdaKind::TwoLie, t, &x.pair);
                    assert!(!one || grp, "{t} {x}");
                    assert!(!grp || lie, "{t} {x}");
                }
            }
        }
    }

    #[test]
    fn gamma_examples() {
        let sp4 = GroupDatum::char_one(LieType::C, 2);
        assert_eq!(gamma(&sp4, &ClassLabel::char_one(p(&[1, 1, 1, 1]))).unwrap(), w(&[], &[1, 1]));

        let sp4_2 = GroupDatum::char_two_group(LieType::C, 2);
        let e = |v| EpsilonMap::from_pairs(Eps::One, [(2, v)]);
        assert_eq!(gamma(&sp4_2, &ClassLabel::unip(p(&[2, 2]), e(Eps::Zero))).unwrap(), w(&[], &[2]));
        assert_eq!(gamma(&sp4_2, &ClassLabel::unip(p(&[2, 2]), e(Eps::One))).unwrap(), w(&[1], &[1]));

        let sp4_lie = GroupDatum::char_two_lie(LieType::C, 2);
        let c = ClassLabel::nilp(p(&[4]), ChiMap::from_pairs([(4, 2)]));
        assert_eq!(gamma(&sp4_lie, &c).unwrap(), w(&[2], &[]));
        let c = ClassLabel::nilp(p(&[2, 2]), ChiMap::from_pairs([(2, 0)]));
        assert_eq!(gamma(&sp4_lie, &c).unwrap(), w(&[], &[2]));
    }

    #[test]
    fn gamma_inverse_examples() {
        let sp4 = GroupDatum::char_one(LieType::C, 2);
        assert_eq!(gamma_inverse(&sp4, &w(&[2], &[])).unwrap(), ClassLabel::char_one(p(&[4])));

        let so5 = GroupDatum::char_two_group(LieType::B, 2);
        let sp4 = GroupDatum::char_two_group(LieType::C, 2);
        for x in lambda_set(&so5) {
            let direct = gamma_inverse(&so5, &x).unwrap();
            let via = sp_to_so_odd(&gamma_inverse(&sp4, &x).unwrap()).unwrap();
            assert_eq!(direct, via);
        }

        let so8 = GroupDatum::char_two_lie(LieType::D, 4);
        let x = w(&[2], &[2]).with_deg(Some(DegTag::I));
        let c = gamma_inverse(&so8, &x).unwrap();
        assert_eq!(c, ClassLabel::nilp(p(&[4, 4]), ChiMap::from_pairs([(4, 2)])).with_deg(Some(DegTag::I)));
    }

    #[test]
    fn not_in_image() {
        let so4 = GroupDatum::char_two_lie(LieType::D, 2);
        assert!(matches!(gamma_inverse(&so4, &w(&[], &[2])), Err(Error::NotInImage(_))));
    }

    #[test]
    fn gamma_is_a_bijection_small_rank() {
        for d in GroupDatum::all_up_to(4) {
            let table = gamma_table(&d).unwrap();
            let classes = crate::classes::enumerate_classes(&d);
            assert_eq!(classes.len(), table.len(), "{d}");
            for c in &classes {
                let x = gamma(&d, c).unwrap();
                assert_eq!(&gamma_inverse(&d, &x).unwrap(), c, "{d}");
            }
        }
    }

    #[test]
    fn profile_examples() {
        let sp4 = GroupDatum::char_two_group(LieType::C, 2);
        let (_, thetas) = delta_theta_profile(&sp4, &w(&[], &[2])).unwrap();
        assert_eq!(thetas[0], 2);

        let so5 = GroupDatum::char_one(LieType::B, 2);
        let x = w(&[1], &[1]);
        assert!(lambda_set_contains(&so5, &x));
        let (deltas, _) = delta_theta_profile(&so5, &x).unwrap();
        // β_1 ≠ α_2, β_2 = α_3 = 0
        assert_eq!(deltas, vec![0, 1]);

        let sp4_1 = GroupDatum::char_one(LieType::C, 2);
        assert!(matches!(delta_theta_profile(&sp4_1, &w(&[2], &[])), Err(Error::UnsupportedCase(_))));
    }

    #[test]
    fn json_form() {
        let x = w(&[1], &[1]).with_deg(Some(DegTag::II));
        assert_eq!(x.to_json_string(), r#"{"alpha":[1],"beta":[1],"deg":"II"}"#);
        let back: WeylCharacter = serde_json::from_str(&x.to_json_string()).unwrap();
        assert_eq!(back, x);
    }
}
