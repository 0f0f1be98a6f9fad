//! The invariant `Υ`: graded dimensions `(f_a)_{a ∈ [-m, m]}` of the
//! canonical filtration attached to a class of `SO(N)` or `so(N)`.
//!
//! In characteristic one it is read off the Jordan type. In
//! characteristic 2 it is computed by peeling off the top graded piece,
//! which leaves a class of a smaller orthogonal group.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classes::{
    data_valid, epsilon_at_zero, Characteristic, ChiMap, ClassLabel, Eps, EpsilonMap, GroupDatum, LieType,
    Variety,
};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Graded dimensions `f_{-m}, …, f_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Upsilon {
    pub m: u32,
    pub f: Vec<u32>,
}

impl Upsilon {
    pub fn new(m: u32, f: Vec<u32>) -> Result<Self> {
        if f.len() != 2 * m as usize + 1 {
            return Err(Error::InvalidInput(format!(
                "Υ with m = {m} needs {} entries, got {}",
                2 * m + 1,
                f.len()
            )));
        }
        Ok(Upsilon { m, f })
    }

    /// `f_a`, zero outside `[-m, m]`.
    pub fn at(&self, a: i64) -> u32 {
        let m = self.m as i64;
        if a < -m || a > m {
            return 0;
        }
        self.f[(a + m) as usize]
    }

    /// `Σ_a f_a`, the dimension of the underlying space.
    pub fn total(&self) -> u32 {
        self.f.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.f.iter().eq(self.f.iter().rev())
    }
}

impl fmt::Display for Upsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={} f=[", self.m)?;
        for (i, v) in self.f.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// `Υ` of the characteristic-one class with Jordan type `λ`:
/// `m = λ_1 − 1` and `f_a` counts the parts `λ_i > |a|` with
/// `λ_i ≡ |a| + 1 (mod 2)`.
///
/// ```
/// use unipotent_pieces::filtration::upsilon_char1;
/// use unipotent_pieces::partitions::Partition;
///
/// let u = upsilon_char1(&Partition::new(vec![2, 2]).unwrap());
/// assert_eq!((u.m, u.f), (1, vec![2, 0, 2]));
/// ```
pub fn upsilon_char1(lambda: &Partition) -> Upsilon {
    let m = lambda.largest().saturating_sub(1);
    let f = (-(m as i64)..=m as i64)
        .map(|a| {
            let a = a.unsigned_abs() as u32;
            lambda.parts().iter().filter(|&&p| p > a && p % 2 == (a + 1) % 2).count() as u32
        })
        .collect();
    Upsilon { m, f }
}

/// `χ` extended to every natural number: `χ(i) = max_j [λ_j; χ(λ_j)](i)`
/// with `[p; l](i) = max(0, min(i − p + l, l))`.
pub fn chi_extend(lambda: &Partition, chi: &ChiMap, i: u32) -> u32 {
    lambda
        .distinct_parts()
        .into_iter()
        .map(|p| {
            let l = chi.get(p).unwrap_or(0) as i64;
            (i as i64 - p as i64 + l).min(l).max(0) as u32
        })
        .max()
        .unwrap_or(0)
}

/// [`chi_extend`] for a class label.
pub fn chi_extend_class(c: &ClassLabel, i: u32) -> Result<u32> {
    match c {
        ClassLabel::NilpChar2 { lambda, chi, .. } => Ok(chi_extend(lambda, chi, i)),
        _ => Err(Error::InvalidClass(format!("{c} carries no χ"))),
    }
}

/// One step of the recursion: the top graded piece and what is left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Descent {
    /// Which line of the case table applied, e.g. `"IV(iii)"`.
    pub case: &'static str,
    /// The smaller orthogonal group or Lie algebra.
    pub datum: GroupDatum,
    /// The class left after removing the top piece.
    pub next: ClassLabel,
    pub m: u32,
    pub f_m: u32,
}

type Mults = BTreeMap<u32, u32>;

fn mults_of(lambda: &Partition) -> Mults {
    lambda.distinct_parts().into_iter().map(|p| (p, lambda.multiplicity(p))).collect()
}

fn add(m: &mut Mults, part: u32, by: u32) {
    if part > 0 && by > 0 {
        *m.entry(part).or_insert(0) += by;
    }
}

fn sub(m: &mut Mults, part: u32, by: u32) -> Result<()> {
    let have = m.get(&part).copied().unwrap_or(0);
    if have < by {
        return Err(Error::Inconsistent(format!("cannot remove {by} parts {part}, only {have}")));
    }
    if have == by {
        m.remove(&part);
    } else {
        m.insert(part, have - by);
    }
    Ok(())
}

fn take_all(m: &mut Mults, part: u32) -> u32 {
    m.remove(&part).unwrap_or(0)
}

fn smaller_datum(d: &GroupDatum, size: u32) -> GroupDatum {
    GroupDatum { rank: size / 2, ..*d }
}

/// Applies the ε overrides; every other even part keeps its old value.
fn rebuild_unip(t: LieType, old: &EpsilonMap, mults: &Mults, set: &[(u32, Eps)]) -> ClassLabel {
    let lambda = Partition::from_multiplicities(mults.iter().map(|(&p, &k)| (p, k)));
    let overrides: BTreeMap<u32, Eps> = set.iter().copied().collect();
    let values = mults
        .keys()
        .filter(|p| *p % 2 == 0)
        .map(|&p| (p, overrides.get(&p).copied().unwrap_or_else(|| old.get(p))))
        .collect();
    ClassLabel::unip(lambda, EpsilonMap::new(epsilon_at_zero(t), values))
}

fn rebuild_nilp(old: &ChiMap, mults: &Mults, set: &[(u32, u32)]) -> ClassLabel {
    let lambda = Partition::from_multiplicities(mults.iter().map(|(&p, &k)| (p, k)));
    let overrides: BTreeMap<u32, u32> = set.iter().copied().collect();
    let values =
        mults.keys().map(|&p| (p, overrides.get(&p).copied().or_else(|| old.get(p)).unwrap_or(0))).collect();
    ClassLabel::nilp(lambda, ChiMap::new(values))
}

/// The case analysis for characteristic-2 unipotent classes of `SO(N)`.
fn descent_unip(
    t: LieType,
    lambda: &Partition,
    eps: &EpsilonMap,
) -> Result<(&'static str, ClassLabel, u32, u32)> {
    let l1 = lambda.largest();
    let mut mu = mults_of(lambda);
    let k1 = lambda.multiplicity(l1);
    let e1 = eps.get(l1);
    if l1.is_multiple_of(2) {
        if k1 % 2 == 1 {
            // III
            sub(&mut mu, l1, 1)?;
            add(&mut mu, l1 - 2, 1);
            let next = rebuild_unip(t, eps, &mu, &[(l1, Eps::Zero), (l1 - 2, Eps::One)]);
            return Ok(("III", next, l1, 1));
        }
        return match e1 {
            Eps::One => {
                sub(&mut mu, l1, 2)?;
                add(&mut mu, l1 - 1, 2);
                let next = rebuild_unip(t, eps, &mu, &[(l1, Eps::Zero)]);
                Ok(("I", next, l1, 1))
            }
            Eps::Zero => {
                let k = take_all(&mut mu, l1);
                add(&mut mu, l1 - 2, k);
                let e = if eps.get(l1 - 2) == Eps::One { Eps::One } else { Eps::Zero };
                let case = if e == Eps::One { "II(ii)" } else { "II(i)" };
                let next = rebuild_unip(t, eps, &mu, &[(l1 - 2, e)]);
                Ok((case, next, l1 - 1, k))
            }
            Eps::Omega => Err(Error::CaseNotMatched(format!("{lambda}: ε({l1}) = ω"))),
        };
    }
    // IV: λ_1 odd, so it occurs an even number of times.
    let below = lambda.multiplicity(l1 - 1);
    let e_below = eps.get(l1 - 1);
    if below.is_multiple_of(2) && e_below == Eps::One {
        let k = take_all(&mut mu, l1);
        sub(&mut mu, l1 - 1, 2)?;
        add(&mut mu, l1 - 2, k + 2);
        let next = rebuild_unip(t, eps, &mu, &[(l1 - 1, Eps::Zero)]);
        Ok(("IV(i)", next, l1 - 1, k + 1))
    } else if below.is_multiple_of(2) {
        let k = take_all(&mut mu, l1);
        add(&mut mu, l1 - 2, k);
        let next = rebuild_unip(t, eps, &mu, &[]);
        Ok(("IV(ii)", next, l1 - 1, k))
    } else {
        let k = take_all(&mut mu, l1);
        sub(&mut mu, l1 - 1, 1)?;
        add(&mut mu, l1 - 2, k);
        add(&mut mu, l1 - 3, 1);
        let mut set = vec![(l1 - 1, Eps::Zero)];
        if l1 > 3 {
            set.push((l1 - 3, Eps::One));
        }
        let next = rebuild_unip(t, eps, &mu, &set);
        Ok(("IV(iii)", next, l1 - 1, k + 1))
    }
}

/// Largest `t` with `χ(λ_1 − t) = c`, for the extended `χ`.
fn plateau(lambda: &Partition, chi: &ChiMap, c: u32) -> u32 {
    let l1 = lambda.largest();
    let mut j = 0;
    while j < l1 && chi_extend(lambda, chi, l1 - j - 1) == c {
        j += 1;
    }
    j
}

/// The case analysis for characteristic-2 nilpotent classes of `so(N)`.
fn descent_nilp(lambda: &Partition, chi: &ChiMap) -> Result<(&'static str, ClassLabel, u32, u32)> {
    let l1 = lambda.largest();
    let c = chi.get(l1).ok_or_else(|| Error::InvalidClass(format!("{lambda}: χ({l1}) unset")))?;
    let mut mu = mults_of(lambda);
    let k1 = lambda.multiplicity(l1);
    if 2 * c == l1 {
        let k = take_all(&mut mu, l1);
        if l1 == 2 {
            let next = rebuild_nilp(chi, &mu, &[]);
            return Ok(("I", next, 1, k));
        }
        add(&mut mu, l1 - 2, k);
        let (case, x) = if chi_extend(lambda, chi, l1 - 2) == l1 / 2 {
            ("II(i)", l1 / 2)
        } else {
            ("II(ii)", l1 / 2 - 1)
        };
        let next = rebuild_nilp(chi, &mu, &[(l1 - 1, l1 / 2), (l1 - 2, x)]);
        return Ok((case, next, l1 - 1, k));
    }
    if 2 * c == l1 + 1 {
        let j = plateau(lambda, chi, c);
        let k = take_all(&mut mu, l1);
        let x = (l1 - 1) / 2;
        if j == 0 {
            add(&mut mu, l1 - 2, k);
            let next = rebuild_nilp(chi, &mu, &[(l1 - 1, x), (l1 - 2, x)]);
            return Ok(("III(i)", next, l1 - 1, k));
        }
        add(&mut mu, l1 - 2, k);
        let mut set: Vec<(u32, u32)> = (1..=j + 1).filter(|&s| s <= l1).map(|s| (l1 - s, x)).collect();
        if lambda.multiplicity(l1 - j).is_multiple_of(2) {
            sub(&mut mu, l1 - j, 2)?;
            add(&mut mu, l1 - j - 1, 2);
            let next = rebuild_nilp(chi, &mu, &set);
            return Ok(("III(even)", next, l1 - 1, k + 1));
        }
        sub(&mut mu, l1 - j, 1)?;
        if l1 >= j + 2 {
            add(&mut mu, l1 - j - 2, 1);
            set.push((l1 - j - 2, (l1 - 3) / 2));
        }
        let next = rebuild_nilp(chi, &mu, &set);
        return Ok(("III(odd)", next, l1 - 1, k + 1));
    }
    if 2 * c > l1 + 1 {
        let j = plateau(lambda, chi, c);
        let mut set: Vec<(u32, u32)> = (0..=j + 1).filter(|&s| s <= l1).map(|s| (l1 - s, c - 1)).collect();
        let case = if k1 % 2 == 1 { "V" } else { "IV" };
        if lambda.multiplicity(l1 - j).is_multiple_of(2) {
            sub(&mut mu, l1 - j, 2)?;
            add(&mut mu, l1 - j - 1, 2);
        } else {
            sub(&mut mu, l1 - j, 1)?;
            if l1 >= j + 2 {
                add(&mut mu, l1 - j - 2, 1);
                set.push((l1 - j - 2, c - 2));
            }
        }
        let next = rebuild_nilp(chi, &mu, &set);
        return Ok((case, next, 2 * c - 2, 1));
    }
    Err(Error::CaseNotMatched(format!("{lambda} with χ({l1}) = {c}")))
}

fn require_orthogonal_char_two(d: &GroupDatum) -> Result<()> {
    if d.characteristic != Characteristic::Two || !d.lie_type.is_orthogonal() {
        return Err(Error::UnsupportedCase(format!(
            "the Υ recursion is for orthogonal groups in characteristic 2, not {d}"
        )));
    }
    Ok(())
}

/// Is `c` the zero (identity) class, i.e. are all parts at most 1?
pub fn is_zero_class(c: &ClassLabel) -> bool {
    c.lambda().largest() <= 1
}

/// Classifies `c` into one line of the case table and returns the class of
/// the smaller group it leads to, together with `m` and `f_m`.
///
/// Degeneracy tags are ignored; the returned class is untagged.
pub fn descent_step(d: &GroupDatum, c: &ClassLabel) -> Result<Descent> {
    require_orthogonal_char_two(d)?;
    if is_zero_class(c) {
        return Err(Error::CaseNotMatched(format!("{c} is the zero class")));
    }
    let (case, next, m, f_m) = match (d.variety, c) {
        (Variety::Group, ClassLabel::UnipChar2 { lambda, eps, .. }) => descent_unip(d.lie_type, lambda, eps)?,
        (Variety::LieAlgebra, ClassLabel::NilpChar2 { lambda, chi, .. }) => descent_nilp(lambda, chi)?,
        _ => return Err(Error::InvalidClass(format!("{c} for {d}"))),
    };
    let size = next.lambda().size();
    if size + 2 * f_m != d.dimension() {
        return Err(Error::Inconsistent(format!(
            "case {case} on {c}: |λ′| = {size} but N − 2f_m = {}",
            d.dimension() as i64 - 2 * f_m as i64
        )));
    }
    let datum = smaller_datum(d, size);
    if !data_valid(&datum, &next) {
        return Err(Error::Inconsistent(format!("case {case} on {c} gives {next}, not a class of {datum}")));
    }
    Ok(Descent { case, datum, next, m, f_m })
}

/// `Υ` of a characteristic-2 class of `SO(N)` or `so(N)`, by recursion.
pub fn upsilon_char2(d: &GroupDatum, c: &ClassLabel) -> Result<Upsilon> {
    require_orthogonal_char_two(d)?;
    if is_zero_class(c) {
        return Ok(Upsilon { m: 0, f: vec![c.lambda().size()] });
    }
    let step = descent_step(d, c)?;
    let inner = upsilon_char2(&step.datum, &step.next)?;
    if inner.m >= step.m && inner.total() > 0 {
        return Err(Error::Inconsistent(format!(
            "step {} on {c}: inner m = {} is not below m = {}",
            step.case, inner.m, step.m
        )));
    }
    let m = step.m as i64;
    let f = (-m..=m).map(|a| if a.abs() == m { step.f_m } else { inner.at(a) }).collect();
    Ok(Upsilon { m: step.m, f })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::enumerate_classes;
    use crate::pieces::psi;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn char_one_examples() {
        assert_eq!(upsilon_char1(&p(&[1, 1, 1])), Upsilon { m: 0, f: vec![3] });
        assert_eq!(upsilon_char1(&p(&[2, 2])), Upsilon { m: 1, f: vec![2, 0, 2] });
        assert_eq!(upsilon_char1(&p(&[3, 1])), Upsilon { m: 2, f: vec![1, 0, 2, 0, 1] });
    }

    #[test]
    fn chi_extension() {
        let l = p(&[4]);
        let chi = ChiMap::from_pairs([(4, 2)]);
        assert_eq!(chi_extend(&l, &chi, 4), 2);
        assert_eq!(chi_extend(&l, &chi, 0), 0);
        assert_eq!(chi_extend(&l, &chi, 3), 1);
    }

    #[test]
    fn zero_class() {
        let so5 = GroupDatum::char_two_lie(LieType::B, 2);
        let c = ClassLabel::nilp(p(&[1, 1, 1, 1, 1]), ChiMap::from_pairs([(1, 1)]));
        assert_eq!(upsilon_char2(&so5, &c).unwrap(), Upsilon { m: 0, f: vec![5] });
        assert!(matches!(descent_step(&so5, &c), Err(Error::CaseNotMatched(_))));
    }

    #[test]
    fn descent_examples() {
        let so8 = GroupDatum::char_two_group(LieType::D, 4);
        let eps = EpsilonMap::from_pairs(Eps::Zero, [(2, Eps::One)]);
        let c = ClassLabel::unip(p(&[2, 2, 2, 2]), eps);
        let step = descent_step(&so8, &c).unwrap();
        assert_eq!((step.case, step.m, step.f_m), ("I", 2, 1));
        assert_eq!(step.next.lambda(), &p(&[2, 2, 1, 1]));

        let so4 = GroupDatum::char_two_lie(LieType::D, 2);
        let c = ClassLabel::nilp(p(&[2, 2]), ChiMap::from_pairs([(2, 1)]));
        let step = descent_step(&so4, &c).unwrap();
        assert_eq!((step.case, step.m, step.f_m), ("I", 1, 2));
        assert!(step.next.lambda().is_empty());
    }

    #[test]
    fn so6_example() {
        let so6 = GroupDatum::char_two_group(LieType::D, 3);
        let eps = EpsilonMap::from_pairs(Eps::Zero, [(4, Eps::One), (2, Eps::One)]);
        let c = ClassLabel::unip(p(&[4, 2]), eps);
        assert_eq!(upsilon_char2(&so6, &c).unwrap(), upsilon_char1(&p(&[5, 1])));
    }

    #[test]
    fn matches_psi_small_rank() {
        for rank in 1..=3 {
            for t in [LieType::B, LieType::D] {
                if t == LieType::D && rank < 2 {
                    continue;
                }
                for d in [GroupDatum::char_two_group(t, rank), GroupDatum::char_two_lie(t, rank)] {
                    for c in enumerate_classes(&d) {
                        let got = upsilon_char2(&d, &c).unwrap();
                        let want = upsilon_char1(psi(&d, &c).unwrap().lambda());
                        assert_eq!(got, want, "{d} {c}");
                    }
                }
            }
        }
    }
}
