use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Cartan type of the classical group: `B` is `SO(2n+1)`, `C` is `Sp(2n)`,
/// `D` is `SO(2n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    B,
    C,
    D,
}

impl LieType {
    pub const ALL: [LieType; 3] = [LieType::B, LieType::C, LieType::D];

    pub fn is_orthogonal(self) -> bool {
        matches!(self, LieType::B | LieType::D)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LieType::B => "B",
            LieType::C => "C",
            LieType::D => "D",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" | "b" => Ok(LieType::B),
            "C" | "c" => Ok(LieType::C),
            "D" | "d" => Ok(LieType::D),
            _ => Err(Error::InvalidDatum(format!("unknown type {s:?}"))),
        }
    }
}

/// Characteristic exponent. Every odd characteristic (and zero) behaves
/// like `One`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Characteristic {
    One,
    Two,
}

impl From<Characteristic> for u8 {
    fn from(c: Characteristic) -> u8 {
        match c {
            Characteristic::One => 1,
            Characteristic::Two => 2,
        }
    }
}

impl TryFrom<u8> for Characteristic {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            1 => Ok(Characteristic::One),
            2 => Ok(Characteristic::Two),
            _ => Err(Error::InvalidDatum(format!("characteristic must be 1 or 2, got {v}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variety {
    /// Unipotent classes of the group.
    Group,
    /// Nilpotent classes of the Lie algebra.
    #[serde(rename = "lie")]
    LieAlgebra,
}

/// Selects one of the eight parametrization cases.
///
/// Field order matches the sorted JSON key order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupDatum {
    #[serde(rename = "char")]
    pub characteristic: Characteristic,
    pub rank: u32,
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub variety: Variety,
}

impl GroupDatum {
    /// Nilpotent classes in good characteristic are identified with
    /// unipotent classes, so `LieAlgebra` is only accepted together with
    /// characteristic 2. Rank starts at 1, and at 2 for type `D`.
    pub fn new(
        lie_type: LieType,
        rank: u32,
        characteristic: Characteristic,
        variety: Variety,
    ) -> Result<Self> {
        if variety == Variety::LieAlgebra && characteristic == Characteristic::One {
            return Err(Error::InvalidDatum(
                "nilpotent classes in characteristic != 2 are the unipotent classes; \
                 use --variety group with --char 1"
                    .into(),
            ));
        }
        let least = if lie_type == LieType::D { 2 } else { 1 };
        if rank < least {
            return Err(Error::InvalidDatum(format!("type {lie_type} needs rank at least {least}")));
        }
        Ok(GroupDatum { characteristic, rank, lie_type, variety })
    }

    pub fn char_one(lie_type: LieType, rank: u32) -> Self {
        GroupDatum { characteristic: Characteristic::One, rank, lie_type, variety: Variety::Group }
    }

    pub fn char_two_group(lie_type: LieType, rank: u32) -> Self {
        GroupDatum { characteristic: Characteristic::Two, rank, lie_type, variety: Variety::Group }
    }

    pub fn char_two_lie(lie_type: LieType, rank: u32) -> Self {
        GroupDatum { characteristic: Characteristic::Two, rank, lie_type, variety: Variety::LieAlgebra }
    }

    /// The three data of a given type and rank: characteristic one,
    /// characteristic-two group, characteristic-two Lie algebra.
    pub fn all_of(lie_type: LieType, rank: u32) -> [GroupDatum; 3] {
        [
            GroupDatum::char_one(lie_type, rank),
            GroupDatum::char_two_group(lie_type, rank),
            GroupDatum::char_two_lie(lie_type, rank),
        ]
    }

    /// Every datum with rank in `1..=max_rank` (type `D` from rank 2).
    pub fn all_up_to(max_rank: u32) -> Vec<GroupDatum> {
        let mut out = Vec::new();
        for rank in 1..=max_rank {
            for t in LieType::ALL {
                if t == LieType::D && rank < 2 {
                    continue;
                }
                out.extend(GroupDatum::all_of(t, rank));
            }
        }
        out
    }

    /// Dimension `N` of the natural representation.
    pub fn dimension(&self) -> u32 {
        match self.lie_type {
            LieType::B => 2 * self.rank + 1,
            LieType::C | LieType::D => 2 * self.rank,
        }
    }

    /// The characteristic-one group of the same type and rank.
    pub fn to_char_one(&self) -> GroupDatum {
        GroupDatum::char_one(self.lie_type, self.rank)
    }

    pub fn is_char_one(&self) -> bool {
        self.characteristic == Characteristic::One
    }

    pub fn is_lie(&self) -> bool {
        self.variety == Variety::LieAlgebra
    }
}

impl fmt::Display for GroupDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dimension();
        let name = match (self.lie_type, self.variety) {
            (LieType::C, Variety::Group) => "Sp",
            (LieType::C, Variety::LieAlgebra) => "sp",
            (_, Variety::Group) => "SO",
            (_, Variety::LieAlgebra) => "so",
        };
        let p = u8::from(self.characteristic);
        write!(f, "{name}({n}) char {p}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lie_algebra_needs_char_two() {
        assert!(GroupDatum::new(LieType::C, 2, Characteristic::One, Variety::LieAlgebra).is_err());
        assert!(GroupDatum::new(LieType::C, 2, Characteristic::Two, Variety::LieAlgebra).is_ok());
        assert!(GroupDatum::new(LieType::D, 1, Characteristic::One, Variety::Group).is_err());
        assert!(GroupDatum::new(LieType::B, 0, Characteristic::One, Variety::Group).is_err());
    }

    #[test]
    fn dimensions_and_names() {
        assert_eq!(GroupDatum::char_one(LieType::B, 2).dimension(), 5);
        assert_eq!(GroupDatum::char_one(LieType::D, 3).dimension(), 6);
        assert_eq!(GroupDatum::char_two_lie(LieType::C, 2).to_string(), "sp(4) char 2");
    }

    #[test]
    fn json_keys_are_sorted() {
        let d = GroupDatum::char_two_group(LieType::D, 3);
        assert_eq!(serde_json::to_string(&d).unwrap(), r#"{"char":2,"rank":3,"type":"D","variety":"group"}"#);
        let back: GroupDatum =
            serde_json::from_str(r#"{"char":2,"rank":2,"type":"C","variety":"lie"}"#).unwrap();
        assert_eq!(back, GroupDatum::char_two_lie(LieType::C, 2));
    }
}
