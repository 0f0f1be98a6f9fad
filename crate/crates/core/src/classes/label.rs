use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Which of the two `SO(2n)`-classes (or Weyl characters) sharing the same
/// combinatorial data is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DegTag {
    I,
    II,
}

impl DegTag {
    pub const BOTH: [DegTag; 2] = [DegTag::I, DegTag::II];
}

impl fmt::Display for DegTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DegTag::I => "I",
            DegTag::II => "II",
        })
    }
}

/// Value of the map `ε`, ordered `ω < 0 < 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Eps {
    Omega,
    Zero,
    One,
}

impl Eps {
    /// `max(ε, 0)` read as an integer: only `1` contributes.
    pub fn weight(self) -> u32 {
        match self {
            Eps::One => 1,
            Eps::Zero | Eps::Omega => 0,
        }
    }
}

impl fmt::Display for Eps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Eps::Omega => "w",
            Eps::Zero => "0",
            Eps::One => "1",
        })
    }
}

impl Serialize for Eps {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Eps::Omega => s.serialize_str("omega"),
            Eps::Zero => s.serialize_u8(0),
            Eps::One => s.serialize_u8(1),
        }
    }
}

impl<'de> Deserialize<'de> for Eps {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::Number(n) if n.as_u64() == Some(0) => Ok(Eps::Zero),
            serde_json::Value::Number(n) if n.as_u64() == Some(1) => Ok(Eps::One),
            serde_json::Value::String(s) if s == "omega" || s == "w" => Ok(Eps::Omega),
            other => Err(serde::de::Error::custom(format!("bad epsilon value {other}"))),
        }
    }
}

/// The map `ε : ℕ → {ω, 0, 1}` attached to a unipotent class in
/// characteristic 2. Only `ε(0)` and the values on even parts that occur
/// are stored; every other argument maps to `ω`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EpsilonMap {
    zero: Eps,
    values: BTreeMap<u32, Eps>,
}

impl EpsilonMap {
    pub fn new(zero: Eps, values: BTreeMap<u32, Eps>) -> Self {
        EpsilonMap { zero, values }
    }

    /// Builds the map from `(part, value)` pairs.
    pub fn from_pairs<I: IntoIterator<Item = (u32, Eps)>>(zero: Eps, pairs: I) -> Self {
        EpsilonMap::new(zero, pairs.into_iter().collect())
    }

    pub fn get(&self, i: u32) -> Eps {
        if i == 0 {
            return self.zero;
        }
        self.values.get(&i).copied().unwrap_or(Eps::Omega)
    }

    pub fn zero(&self) -> Eps {
        self.zero
    }

    /// The explicitly stored positive arguments and their values.
    pub fn stored(&self) -> &BTreeMap<u32, Eps> {
        &self.values
    }

    /// Returns a copy with `ε(i) = v`; `v = ω` removes the entry.
    pub fn with(&self, i: u32, v: Eps) -> EpsilonMap {
        let mut out = self.clone();
        if i == 0 {
            out.zero = v;
        } else if v == Eps::Omega {
            out.values.remove(&i);
        } else {
            out.values.insert(i, v);
        }
        out
    }

    fn to_json_map(&self) -> BTreeMap<String, Eps> {
        let mut m: BTreeMap<String, Eps> = self.values.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        m.insert("0".into(), self.zero);
        m
    }

    fn from_json_map(m: BTreeMap<String, Eps>) -> Result<Self> {
        let mut zero = None;
        let mut values = BTreeMap::new();
        for (k, v) in m {
            let key: u32 = k.parse().map_err(|_| Error::InvalidInput(format!("bad epsilon key {k:?}")))?;
            if key == 0 {
                zero = Some(v);
            } else if v != Eps::Omega {
                values.insert(key, v);
            }
        }
        let zero = zero.ok_or_else(|| Error::InvalidInput("epsilon needs a value at 0".into()))?;
        Ok(EpsilonMap { zero, values })
    }
}

/// The map `χ` from the distinct parts of `λ` to `ℕ` attached to a
/// nilpotent class in characteristic 2. `χ(0) = 0`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChiMap(BTreeMap<u32, u32>);

impl ChiMap {
    pub fn new(values: BTreeMap<u32, u32>) -> Self {
        ChiMap(values)
    }

    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        ChiMap(pairs.into_iter().filter(|&(k, _)| k > 0).collect())
    }

    /// `χ(part)`; `None` for a positive argument that was never assigned.
    pub fn get(&self, part: u32) -> Option<u32> {
        if part == 0 {
            return Some(0);
        }
        self.0.get(&part).copied()
    }

    pub fn stored(&self) -> &BTreeMap<u32, u32> {
        &self.0
    }
}

/// A unipotent or nilpotent class, given by its combinatorial data.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    /// Characteristic other than 2: the Jordan type alone.
    CharOne { lambda: Partition, deg: Option<DegTag> },
    /// Unipotent class in characteristic 2: `(λ, ε)`.
    UnipChar2 { lambda: Partition, eps: EpsilonMap, deg: Option<DegTag> },
    /// Nilpotent class in characteristic 2: `(λ, χ)`.
    NilpChar2 { lambda: Partition, chi: ChiMap, deg: Option<DegTag> },
}

impl ClassLabel {
    pub fn char_one(lambda: Partition) -> Self {
        ClassLabel::CharOne { lambda, deg: None }
    }

    pub fn unip(lambda: Partition, eps: EpsilonMap) -> Self {
        ClassLabel::UnipChar2 { lambda, eps, deg: None }
    }

    pub fn nilp(lambda: Partition, chi: ChiMap) -> Self {
        ClassLabel::NilpChar2 { lambda, chi, deg: None }
    }

    pub fn lambda(&self) -> &Partition {
        match self {
            ClassLabel::CharOne { lambda, .. }
            | ClassLabel::UnipChar2 { lambda, .. }
            | ClassLabel::NilpChar2 { lambda, .. } => lambda,
        }
    }

    pub fn deg(&self) -> Option<DegTag> {
        match self {
            ClassLabel::CharOne { deg, .. }
            | ClassLabel::UnipChar2 { deg, .. }
            | ClassLabel::NilpChar2 { deg, .. } => *deg,
        }
    }

    pub fn with_deg(&self, tag: Option<DegTag>) -> ClassLabel {
        let mut out = self.clone();
        match &mut out {
            ClassLabel::CharOne { deg, .. }
            | ClassLabel::UnipChar2 { deg, .. }
            | ClassLabel::NilpChar2 { deg, .. } => *deg = tag,
        }
        out
    }

    pub fn eps(&self) -> Option<&EpsilonMap> {
        match self {
            ClassLabel::UnipChar2 { eps, .. } => Some(eps),
            _ => None,
        }
    }

    pub fn chi(&self) -> Option<&ChiMap> {
        match self {
            ClassLabel::NilpChar2 { chi, .. } => Some(chi),
            _ => None,
        }
    }

    /// True for the two members of a degenerate pair: same data, both
    /// tagged, different tags.
    pub fn is_degenerate_twin_of(&self, other: &ClassLabel) -> bool {
        match (self.deg(), other.deg()) {
            (Some(a), Some(b)) if a != b => self.with_deg(None) == other.with_deg(None),
            _ => false,
        }
    }

    /// Canonical JSON string, used as a stable sort key.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("class labels always serialize")
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lambda())?;
        match self {
            ClassLabel::CharOne { .. } => {}
            ClassLabel::UnipChar2 { eps, .. } => {
                if !eps.stored().is_empty() {
                    f.write_str(" [eps")?;
                    for (k, v) in eps.stored().iter().rev() {
                        write!(f, " {k}:{v}")?;
                    }
                    f.write_str("]")?;
                }
            }
            ClassLabel::NilpChar2 { chi, .. } => {
                if !chi.stored().is_empty() {
                    f.write_str(" [chi")?;
                    for (k, v) in chi.stored().iter().rev() {
                        write!(f, " {k}:{v}")?;
                    }
                    f.write_str("]")?;
                }
            }
        }
        if let Some(tag) = self.deg() {
            write!(f, "~{tag}")?;
        }
        Ok(())
    }
}

/// Wire form: `{"chi"?, "deg", "epsilon"?, "lambda"}`, keys sorted.
#[derive(Serialize, Deserialize)]
struct ClassLabelJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    chi: Option<BTreeMap<String, u32>>,
    #[serde(default)]
    deg: Option<DegTag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    epsilon: Option<BTreeMap<String, Eps>>,
    lambda: Vec<u32>,
}

impl Serialize for ClassLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let json = ClassLabelJson {
            chi: self.chi().map(|c| c.stored().iter().map(|(k, v)| (k.to_string(), *v)).collect()),
            deg: self.deg(),
            epsilon: self.eps().map(EpsilonMap::to_json_map),
            lambda: self.lambda().parts().to_vec(),
        };
        json.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ClassLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let json = ClassLabelJson::deserialize(d)?;
        let lambda = Partition::new(json.lambda).map_err(D::Error::custom)?;
        let deg = json.deg;
        match (json.epsilon, json.chi) {
            (None, None) => Ok(ClassLabel::CharOne { lambda, deg }),
            (Some(e), None) => Ok(ClassLabel::UnipChar2 {
                lambda,
                eps: EpsilonMap::from_json_map(e).map_err(D::Error::custom)?,
                deg,
            }),
            (None, Some(c)) => {
                let mut chi = BTreeMap::new();
                for (k, v) in c {
                    let key: u32 = k.parse().map_err(|_| D::Error::custom(format!("bad chi key {k:?}")))?;
                    if key > 0 {
                        chi.insert(key, v);
                    }
                }
                Ok(ClassLabel::NilpChar2 { lambda, chi: ChiMap(chi), deg })
            }
            (Some(_), Some(_)) => Err(D::Error::custom("a class has either epsilon or chi, not both")),
        }
    }
}
