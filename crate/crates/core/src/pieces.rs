//! The projection `Φ` of Springer labels onto characteristic-one labels,
//! the map `Ψ` of classes onto characteristic-one classes, and the
//! partitions of the class set they induce: pieces `Σ`, `Ψ`-fibers and
//! special pieces.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classes::{
    enumerate_classes, so_odd_to_sp, validate_class, ChiMap, ClassLabel, ClassPoset, Eps, EpsilonMap,
    GroupDatum, LieType, Variety,
};
use crate::error::{Error, Result};
use crate::partitions::{BiPartition, Partition};
use crate::springer::{gamma, gamma_inverse, in_lambda_one, lambda_set_contains, WeylCharacter};

fn floor_half(x: i64) -> i64 {
    x.div_euclid(2)
}

fn pair_from(alpha: Vec<i64>, beta: Vec<i64>) -> Result<BiPartition> {
    let conv = |v: Vec<i64>| -> Result<Partition> {
        let parts = v
            .into_iter()
            .map(|x| u32::try_from(x).map_err(|_| Error::Inconsistent(format!("negative entry {x}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Inconsistent(e.to_string()))
    };
    Ok(BiPartition::new(conv(alpha)?, conv(beta)?))
}

/// The characteristic-two formula for `Φ` in type `t`, on any pair of the
/// Lie-algebra image (which contains the group image).
fn phi_pair(t: LieType, w: &BiPartition) -> Result<BiPartition> {
    let top = w.span();
    let (a, b) = (|i: usize| w.a(i), |i: usize| w.b(i));
    let mut alpha = Vec::with_capacity(top);
    let mut beta = Vec::with_capacity(top);
    for i in 1..=top {
        let (ai, bi, a1, bp) = (a(i), b(i), a(i + 1), b(i - 1));
        let (x, y) = match t {
            LieType::B => {
                let x = if i >= 2 && ai > bp { floor_half(ai + bp) } else { ai };
                let y = if bi < a1 { floor_half(a1 + bi + 1) } else { bi };
                (x, y)
            }
            LieType::C => {
                if i == 1 {
                    let x = if bi > ai + 1 { floor_half(ai + bi) } else { ai };
                    let y = if bi > ai + 1 {
                        floor_half(ai + bi + 1)
                    } else if bi < a1 - 1 {
                        floor_half(a1 + bi)
                    } else {
                        bi
                    };
                    (x, y)
                } else {
                    let x = if bi > ai + 1 {
                        floor_half(ai + bi)
                    } else if bp < ai - 1 {
                        floor_half(ai + bp + 1)
                    } else {
                        ai
                    };
                    let y = if bi > ai + 1 {
                        floor_half(ai + bi + 1)
                    } else if bi < a1 - 1 {
                        floor_half(a1 + bi)
                    } else {
                        bi
                    };
                    (x, y)
                }
            }
            LieType::D => {
                let x = if i >= 2 && ai > bp + 2 { floor_half(ai + bp + 2) } else { ai };
                let y = if bi < a1 - 2 { floor_half(a1 + bi - 1) } else { bi };
                (x, y)
            }
        };
        alpha.push(x);
        beta.push(y);
    }
    pair_from(alpha, beta)
}

/// `Φ`: the least characteristic-one label above `w`.
///
/// The identity in characteristic one and on degenerate characters.
///
/// ```
/// use unipotent_pieces::classes::{GroupDatum, LieType};
/// use unipotent_pieces::pieces::phi;
/// use unipotent_pieces::springer::WeylCharacter;
///
/// let sp4 = GroupDatum::char_two_group(LieType::C, 2);
/// let w = WeylCharacter::from_parts(vec![], vec![2]).unwrap();
/// assert_eq!(phi(&sp4, &w).unwrap(), WeylCharacter::from_parts(vec![1], vec![1]).unwrap());
/// ```
pub fn phi(d: &GroupDatum, w: &WeylCharacter) -> Result<WeylCharacter> {
    if !lambda_set_contains(d, w) {
        return Err(Error::NotInDomain(format!("{w} for {d}")));
    }
    if d.is_char_one() || w.deg.is_some() {
        return Ok(w.clone());
    }
    let out = WeylCharacter::new(phi_pair(d.lie_type, &w.pair)?);
    if !in_lambda_one(d.lie_type, &out) || !out.is_well_formed(d.lie_type) {
        return Err(Error::Inconsistent(format!("Φ({w}) = {out} is not a characteristic-one label")));
    }
    Ok(out)
}

/// `Ψ` for the orthogonal groups in characteristic 2: even parts with
/// `ε = 1` move by one, all decided from the original `λ`.
///
/// The scan runs one slot past the last part, where `λ_j = 0` is an even
/// value with `ε(0)`. For `SO(2n)` this never fires since `ε(0) = 0`; for
/// `SO(2n+1)` the rule is applied to the `Sp(2n)` data, where `ε(0) = 1`
/// supplies the extra part.
fn psi_so_group(lambda: &Partition, eps: &EpsilonMap) -> Result<Partition> {
    let l = |j: usize| if j == 0 { u32::MAX } else { lambda.part(j - 1) };
    let mut out = Vec::with_capacity(lambda.len() + 1);
    for j in 1..=lambda.len() + 1 {
        let v = l(j);
        let candidate = v % 2 == 0 && eps.get(v) == Eps::One;
        let shifted = if candidate && j % 2 == 1 && v < l(j - 1) {
            v + 1
        } else if candidate && j % 2 == 0 && v > l(j + 1) {
            v - 1
        } else {
            v
        };
        out.push(shifted);
    }
    Partition::new(out).map_err(|e| Error::Inconsistent(format!("Ψ: {e}")))
}

/// `Ψ` for the orthogonal Lie algebras in characteristic 2.
fn psi_so_lie(d: &GroupDatum, lambda: &Partition, chi: &ChiMap) -> Result<Partition> {
    let l = |j: usize| lambda.part(j - 1) as i64;
    let x = |j: usize| chi.get(lambda.part(j - 1)).unwrap_or(0) as i64;
    let len = lambda.len() + 2;
    let k = if d.lie_type == LieType::B {
        (0..len).find(|&k| l(2 * k + 2) == l(2 * k + 1) - 1).ok_or_else(|| {
            Error::InvalidClass(format!("{lambda}: no index with λ_{{2k+2}} = λ_{{2k+1}} - 1"))
        })?
    } else {
        usize::MAX
    };
    let mut out = Vec::with_capacity(len);
    out.push(if 2 * x(1) >= l(1) + 2 { 2 * x(1) - 1 } else { l(1) });
    let mut i = 1;
    while 2 * i <= len {
        let (le, lo) = (l(2 * i), l(2 * i + 1));
        let (xe, xo) = (x(2 * i), x(2 * i + 1));
        let even = if i > k {
            lo
        } else if xe > le - xo {
            le - xe + xo
        } else if 2 * xe >= le + 2 && xe <= le - xo {
            2 * (le - xe) + 1
        } else {
            le
        };
        let odd = if i <= k && xo > le - xe {
            le - xe + xo
        } else if i <= k && 2 * xo >= lo + 2 && xo <= le - xe {
            2 * xo - 1
        } else {
            lo
        };
        out.push(even);
        out.push(odd);
        i += 1;
    }
    let parts = out
        .into_iter()
        .map(|v| u32::try_from(v).map_err(|_| Error::Inconsistent(format!("Ψ: negative part {v}"))))
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts).map_err(|e| Error::Inconsistent(format!("Ψ: {e}")))
}

/// `Ψ`: the characteristic-one class labeling the piece that contains `c`.
///
/// ```
/// use unipotent_pieces::classes::{ClassLabel, Eps, EpsilonMap, GroupDatum, LieType};
/// use unipotent_pieces::partitions::Partition;
/// use unipotent_pieces::pieces::psi;
///
/// let so6 = GroupDatum::char_two_group(LieType::D, 3);
/// let eps = EpsilonMap::from_pairs(Eps::Zero, [(4, Eps::One), (2, Eps::One)]);
/// let c = ClassLabel::unip(Partition::new(vec![4, 2]).unwrap(), eps);
/// assert_eq!(psi(&so6, &c).unwrap().lambda().parts(), &[5, 1]);
/// ```
pub fn psi(d: &GroupDatum, c: &ClassLabel) -> Result<ClassLabel> {
    // `γ` rejects anything that is not a class of `d`.
    let w = gamma(d, c)?;
    if d.is_char_one() {
        return Ok(c.clone());
    }
    let one = d.to_char_one();
    if c.deg().is_some() {
        return gamma_inverse(&one, &w);
    }
    let lambda = match (d.lie_type, d.variety, c) {
        (LieType::C, _, _) => c.lambda().clone(),
        (LieType::B, Variety::Group, _) => match so_odd_to_sp(c)? {
            ClassLabel::UnipChar2 { lambda, eps, .. } => psi_so_group(&lambda, &eps)?,
            _ => unreachable!("the isogeny keeps ε"),
        },
        (_, Variety::Group, ClassLabel::UnipChar2 { lambda, eps, .. }) => psi_so_group(lambda, eps)?,
        (_, Variety::LieAlgebra, ClassLabel::NilpChar2 { lambda, chi, .. }) => psi_so_lie(d, lambda, chi)?,
        _ => return Err(Error::InvalidClass(format!("{c} for {d}"))),
    };
    let out = ClassLabel::char_one(lambda);
    if !validate_class(&one, &out)? {
        return Err(Error::Inconsistent(format!("Ψ({c}) = {out} is not a class of {one}")));
    }
    Ok(out)
}

/// One block of a partition of the class set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Piece {
    /// A characteristic-one class naming the block.
    pub label: ClassLabel,
    /// Members, in enumeration order.
    pub members: Vec<ClassLabel>,
}

/// A partition of the classes of a datum into labeled blocks, sorted by
/// the serialized label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiecePartition {
    pub datum: GroupDatum,
    pub pieces: Vec<Piece>,
}

impl PiecePartition {
    fn from_blocks(datum: GroupDatum, blocks: Vec<(ClassLabel, Vec<ClassLabel>)>) -> Self {
        let mut pieces: Vec<Piece> =
            blocks.into_iter().map(|(label, members)| Piece { label, members }).collect();
        pieces.sort_by_cached_key(|p| p.label.to_json_string());
        PiecePartition { datum, pieces }
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    /// The label of the block containing `c`.
    pub fn block_of(&self, c: &ClassLabel) -> Option<&ClassLabel> {
        self.pieces.iter().find(|p| p.members.contains(c)).map(|p| &p.label)
    }

    /// Whether the blocks are disjoint and cover `all` exactly.
    pub fn partitions(&self, all: &[ClassLabel]) -> bool {
        let mut seen: Vec<&ClassLabel> = self.pieces.iter().flat_map(|p| &p.members).collect();
        let total = seen.len();
        seen.sort();
        seen.dedup();
        let mut expected: Vec<&ClassLabel> = all.iter().collect();
        expected.sort();
        seen.len() == total && seen == expected
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("piece partitions always serialize")
    }
}

/// For each characteristic-one class `c̃`, the index in `poset` of the
/// class with the same Springer label.
fn char_one_tops(poset: &ClassPoset) -> Result<Vec<(ClassLabel, usize)>> {
    let d = poset.datum;
    let one = d.to_char_one();
    let mut out = Vec::new();
    for c1 in enumerate_classes(&one) {
        let w = gamma(&one, &c1)?;
        let top = gamma_inverse(&d, &w)?;
        let idx = poset
            .index_of(&top)
            .ok_or_else(|| Error::Inconsistent(format!("{top} missing from the classes of {d}")))?;
        out.push((c1, idx));
    }
    Ok(out)
}

fn blocks_below<F: Fn(usize) -> bool + Copy>(
    poset: &ClassPoset,
    tops: Vec<(ClassLabel, usize)>,
    bounds: F,
) -> Vec<(ClassLabel, Vec<ClassLabel>)> {
    tops.into_iter()
        .map(|(label, top)| {
            let members =
                poset.block_below(top, bounds).into_iter().map(|i| poset.classes()[i].clone()).collect();
            (label, members)
        })
        .collect()
}

/// The pieces `Σ`: for each characteristic-one class, the classes below
/// its counterpart `c` that lie below no smaller class whose Springer
/// label is a characteristic-one label.
pub fn sigma_pieces(d: &GroupDatum) -> Result<PiecePartition> {
    let poset = ClassPoset::new(d)?;
    sigma_pieces_of(&poset)
}

/// [`sigma_pieces`] on a precomputed poset.
pub fn sigma_pieces_of(poset: &ClassPoset) -> Result<PiecePartition> {
    let d = poset.datum;
    let in_one = poset
        .classes()
        .iter()
        .map(|c| Ok(in_lambda_one(d.lie_type, &gamma(&d, c)?)))
        .collect::<Result<Vec<bool>>>()?;
    let tops = char_one_tops(poset)?;
    Ok(PiecePartition::from_blocks(d, blocks_below(poset, tops, |k| in_one[k])))
}

/// The fibers of `Ψ`, labeled by their image.
pub fn psi_fibers(d: &GroupDatum) -> Result<PiecePartition> {
    let mut blocks: BTreeMap<ClassLabel, Vec<ClassLabel>> = BTreeMap::new();
    for c in enumerate_classes(d) {
        blocks.entry(psi(d, &c)?).or_default().push(c);
    }
    Ok(PiecePartition::from_blocks(*d, blocks.into_iter().collect()))
}

/// Special characters: the inequalities `α_{i+1} ≤ β_i ≤ α_i + 1`
/// in types `B`, `C` and `α_{i+1} − 1 ≤ β_i ≤ α_i` in type `D`, where every
/// degenerate character is special.
pub fn is_special(t: LieType, w: &WeylCharacter) -> bool {
    let p = &w.pair;
    let (lo, hi) = match t {
        LieType::B | LieType::C => (0, 1),
        LieType::D => {
            if w.is_degenerate() {
                return true;
            }
            (-1, 0)
        }
    };
    (1..=p.span()).all(|i| p.b(i) >= p.a(i + 1) + lo && p.b(i) <= p.a(i) + hi)
}

/// Special pieces: for each special class `c`, the classes below `c` lying
/// below no smaller special class. Blocks are labeled by the
/// characteristic-one class with the same Springer label as `c`.
pub fn special_pieces(d: &GroupDatum) -> Result<PiecePartition> {
    let poset = ClassPoset::new(d)?;
    special_pieces_of(&poset)
}

/// [`special_pieces`] on a precomputed poset.
pub fn special_pieces_of(poset: &ClassPoset) -> Result<PiecePartition> {
    let d = poset.datum;
    let special = poset
        .classes()
        .iter()
        .map(|c| Ok(is_special(d.lie_type, &gamma(&d, c)?)))
        .collect::<Result<Vec<bool>>>()?;
    let tops: Vec<(ClassLabel, usize)> =
        char_one_tops(poset)?.into_iter().filter(|&(_, top)| special[top]).collect();
    Ok(PiecePartition::from_blocks(d, blocks_below(poset, tops, |k| special[k])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::DegTag;
    use crate::springer::lambda_set;

    fn w(a: &[u32], b: &[u32]) -> WeylCharacter {
        WeylCharacter::from_parts(a.to_vec(), b.to_vec()).unwrap()
    }

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn phi_examples() {
        let sp4 = GroupDatum::char_two_group(LieType::C, 2);
        assert_eq!(phi(&sp4, &w(&[], &[2])).unwrap(), w(&[1], &[1]));
        let so8 = GroupDatum::char_two_lie(LieType::D, 4);
        let x = w(&[1, 1], &[1, 1]).with_deg(Some(DegTag::I));
        assert_eq!(phi(&so8, &x).unwrap(), x);
        let so4 = GroupDatum::char_two_lie(LieType::D, 2);
        assert!(matches!(phi(&so4, &w(&[], &[2])), Err(Error::NotInDomain(_))));
    }

    #[test]
    fn phi_fixes_char_one_labels() {
        for d in GroupDatum::all_up_to(4) {
            for x in lambda_set(&d) {
                if in_lambda_one(d.lie_type, &x) {
                    assert_eq!(phi(&d, &x).unwrap(), x, "{d}");
                }
            }
        }
    }

    #[test]
    fn psi_examples() {
        let sp4 = GroupDatum::char_two_group(LieType::C, 2);
        let c = ClassLabel::unip(p(&[2, 2]), EpsilonMap::from_pairs(Eps::One, [(2, Eps::Zero)]));
        assert_eq!(psi(&sp4, &c).unwrap(), ClassLabel::char_one(p(&[2, 2])));

        let sp4_lie = GroupDatum::char_two_lie(LieType::C, 2);
        let c = ClassLabel::nilp(p(&[2, 1, 1]), ChiMap::from_pairs([(2, 1), (1, 0)]));
        assert_eq!(psi(&sp4_lie, &c).unwrap(), ClassLabel::char_one(p(&[2, 1, 1])));
    }

    #[test]
    fn sigma_examples() {
        let sp4 = GroupDatum::char_two_group(LieType::C, 2);
        let pieces = sigma_pieces(&sp4).unwrap();
        let label = ClassLabel::char_one(p(&[2, 2]));
        let block = pieces.pieces.iter().find(|b| b.label == label).unwrap();
        assert_eq!(block.members.len(), 2);
        assert!(block.members.iter().all(|m| m.lambda() == &p(&[2, 2])));

        let sp4_lie = GroupDatum::char_two_lie(LieType::C, 2);
        let pieces = sigma_pieces(&sp4_lie).unwrap();
        let mut sizes: Vec<usize> = pieces.pieces.iter().map(|b| b.members.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 1, 2]);
        assert_eq!(pieces, psi_fibers(&sp4_lie).unwrap());

        let sp6 = GroupDatum::char_one(LieType::C, 3);
        assert!(sigma_pieces(&sp6).unwrap().pieces.iter().all(|b| b.members.len() == 1));
    }

    #[test]
    fn special_examples() {
        assert!(is_special(LieType::C, &w(&[1], &[1])));
        assert!(!is_special(LieType::C, &w(&[], &[2])));
        assert!(is_special(LieType::D, &w(&[2], &[2]).with_deg(Some(DegTag::II))));

        for d in GroupDatum::all_of(LieType::C, 2) {
            let sp = special_pieces(&d).unwrap();
            assert!(sp.partitions(&enumerate_classes(&d)), "{d}");
        }
    }

    #[test]
    fn json_shape() {
        let d = GroupDatum::char_one(LieType::C, 1);
        let json = sigma_pieces(&d).unwrap().to_json_string();
        assert_eq!(
            json,
            r#"{"datum":{"char":1,"rank":1,"type":"C","variety":"group"},"pieces":[{"label":{"deg":null,"lambda":[1,1]},"members":[{"deg":null,"lambda":[1,1]}]},{"label":{"deg":null,"lambda":[2]},"members":[{"deg":null,"lambda":[2]}]}]}"#
        );
    }
}
