//! Unipotent and nilpotent classes of `Sp(2n)`, `SO(2n+1)` and `SO(2n)`:
//! validation of their combinatorial labels, enumeration, the bijection
//! induced by the special isogeny `SO(2n+1) → Sp(2n)` in characteristic 2,
//! and the closure order.

mod datum;
mod label;
mod poset;

use std::collections::BTreeMap;

pub use datum::{Characteristic, GroupDatum, LieType, Variety};
pub use label::{ChiMap, ClassLabel, DegTag, Eps, EpsilonMap};
pub use poset::ClassPoset;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::springer;

/// `ε(0)` for characteristic-2 unipotent classes. `SO(2n+1)` inherits the
/// symplectic value through the isogeny bijection.
pub fn epsilon_at_zero(lie_type: LieType) -> Eps {
    match lie_type {
        LieType::B | LieType::C => Eps::One,
        LieType::D => Eps::Zero,
    }
}

/// Checks `c` against every condition identifying it with a class for `d`,
/// including legality of the degeneracy tag.
pub fn validate_class(d: &GroupDatum, c: &ClassLabel) -> Result<bool> {
    let n = c.lambda().size();
    if n != d.dimension() {
        return Err(Error::SizeMismatch { left: n, right: d.dimension() });
    }
    Ok(data_valid(d, c) && c.deg().is_some() == is_degenerate_data(d, c))
}

/// Validity of the data ignoring the degeneracy tag. Does not check the
/// size of `λ` against `d`.
pub(crate) fn data_valid(d: &GroupDatum, c: &ClassLabel) -> bool {
    match (d.characteristic, d.variety, c) {
        (Characteristic::One, Variety::Group, ClassLabel::CharOne { lambda, .. }) => {
            char_one_valid(d.lie_type, lambda)
        }
        (Characteristic::Two, Variety::Group, ClassLabel::UnipChar2 { lambda, eps, .. }) => {
            unip_valid(d.lie_type, lambda, eps)
        }
        (Characteristic::Two, Variety::LieAlgebra, ClassLabel::NilpChar2 { lambda, chi, .. }) => {
            nilp_valid(d.lie_type, lambda, chi)
        }
        _ => false,
    }
}

/// Whether the data of `c` belongs to a pair of degenerate classes. Only
/// type `D` has them.
pub(crate) fn is_degenerate_data(d: &GroupDatum, c: &ClassLabel) -> bool {
    if d.lie_type != LieType::D {
        return false;
    }
    let lambda = c.lambda();
    match c {
        ClassLabel::CharOne { .. } => lambda.parts().iter().all(|p| p % 2 == 0),
        ClassLabel::UnipChar2 { eps, .. } => lambda.parts().iter().all(|&p| eps.get(p) == Eps::Zero),
        ClassLabel::NilpChar2 { chi, .. } => {
            lambda.parts().iter().all(|&p| chi.get(p).map(|x| 2 * x) == Some(p))
        }
    }
}

fn char_one_valid(t: LieType, lambda: &Partition) -> bool {
    lambda.distinct_parts().into_iter().all(|p| {
        let even_mult = lambda.multiplicity(p).is_multiple_of(2);
        match t {
            LieType::C => p % 2 == 0 || even_mult,
            LieType::B | LieType::D => p % 2 == 1 || even_mult,
        }
    })
}

/// Symplectic-type conditions shared by `Sp(2n)` and `SO(2n)`: odd parts
/// have even multiplicity and `ε` is legal on every even part.
fn unip_core_valid(lambda: &Partition, eps: &EpsilonMap) -> bool {
    let parts = lambda.distinct_parts();
    let odd_ok = parts.iter().all(|&p| p % 2 == 0 || lambda.multiplicity(p).is_multiple_of(2));
    let stored_ok = eps.stored().keys().all(|&k| k % 2 == 0 && lambda.multiplicity(k) > 0);
    let values_ok = parts.iter().filter(|&&p| p % 2 == 0).all(|&p| match eps.get(p) {
        Eps::Omega => false,
        Eps::Zero => lambda.multiplicity(p).is_multiple_of(2),
        Eps::One => true,
    });
    odd_ok && stored_ok && values_ok
}

fn unip_valid(t: LieType, lambda: &Partition, eps: &EpsilonMap) -> bool {
    if eps.zero() != epsilon_at_zero(t) {
        return false;
    }
    match t {
        LieType::C => unip_core_valid(lambda, eps),
        LieType::D => unip_core_valid(lambda, eps) && lambda.len().is_multiple_of(2),
        LieType::B => match remove_one_part_one(lambda) {
            Some(reduced) => unip_core_valid(&reduced, eps),
            None => false,
        },
    }
}

/// `λ` with a single trailing part `1` removed, if `λ` ends in `1`.
fn remove_one_part_one(lambda: &Partition) -> Option<Partition> {
    if lambda.parts().last() != Some(&1) {
        return None;
    }
    let mut parts = lambda.parts().to_vec();
    parts.pop();
    Some(Partition::new(parts).expect("still decreasing"))
}

fn nilp_valid(t: LieType, lambda: &Partition, chi: &ChiMap) -> bool {
    let parts = lambda.distinct_parts();
    if chi.stored().len() != parts.len() || parts.iter().any(|p| chi.get(*p).is_none()) {
        return false;
    }
    let x = |p: u32| chi.get(p).unwrap_or(0);
    let orthogonal = t.is_orthogonal();
    // (a) range and (c) odd multiplicity
    for &p in &parts {
        let v = x(p);
        let in_range = if orthogonal { 2 * v >= p && v <= p } else { 2 * v <= p };
        if !in_range {
            return false;
        }
        if lambda.multiplicity(p) % 2 == 1 {
            let forced = if orthogonal { v == p } else { 2 * v == p };
            if !forced {
                return false;
            }
        }
    }
    // (b) monotonicity of χ and of λ - χ along consecutive parts
    for w in parts.windows(2) {
        let (hi, lo) = (w[0], w[1]);
        if x(hi) < x(lo) || hi - x(hi) < lo - x(lo) {
            return false;
        }
    }
    if orthogonal {
        let odd: Vec<u32> = parts.iter().copied().filter(|&p| lambda.multiplicity(p) % 2 == 1).collect();
        let shape_ok = match odd.as_slice() {
            [] => true,
            [1] => true,
            [a, b] => *b >= 1 && a - b == 1,
            _ => false,
        };
        if !shape_ok {
            return false;
        }
    }
    true
}

/// Every class of `d` in a fixed order: partitions in reverse
/// lexicographic order, then decorations in increasing order, then tag `I`
/// before `II` for degenerate data.
pub fn enumerate_classes(d: &GroupDatum) -> Vec<ClassLabel> {
    let mut out = Vec::new();
    for lambda in enumerate_partitions(d.dimension()) {
        for c in decorations(d, &lambda) {
            if !data_valid(d, &c) {
                continue;
            }
            if is_degenerate_data(d, &c) {
                for tag in DegTag::BOTH {
                    out.push(c.with_deg(Some(tag)));
                }
            } else {
                out.push(c);
            }
        }
    }
    out
}

/// Candidate decorations of `λ` for `d`; filtered by the caller.
fn decorations(d: &GroupDatum, lambda: &Partition) -> Vec<ClassLabel> {
    match (d.characteristic, d.variety) {
        (Characteristic::One, _) => vec![ClassLabel::char_one(lambda.clone())],
        (Characteristic::Two, Variety::Group) => {
            let choices: Vec<(u32, Vec<Eps>)> = lambda
                .distinct_parts()
                .into_iter()
                .filter(|p| p % 2 == 0)
                .map(|p| {
                    let opts = if lambda.multiplicity(p) % 2 == 1 {
                        vec![Eps::One]
                    } else {
                        vec![Eps::Zero, Eps::One]
                    };
                    (p, opts)
                })
                .collect();
            product(&choices)
                .into_iter()
                .map(|assign| {
                    ClassLabel::unip(lambda.clone(), EpsilonMap::new(epsilon_at_zero(d.lie_type), assign))
                })
                .collect()
        }
        (Characteristic::Two, Variety::LieAlgebra) => {
            let choices: Vec<(u32, Vec<u32>)> = lambda
                .distinct_parts()
                .into_iter()
                .map(|p| {
                    let range: Vec<u32> = if d.lie_type.is_orthogonal() {
                        (p.div_ceil(2)..=p).collect()
                    } else {
                        (0..=p / 2).collect()
                    };
                    (p, range)
                })
                .collect();
            product(&choices)
                .into_iter()
                .map(|assign| ClassLabel::nilp(lambda.clone(), ChiMap::new(assign)))
                .collect()
        }
    }
}

/// Cartesian product of per-key choices, in lexicographic order over the
/// keys as given.
fn product<K: Ord + Copy, V: Copy>(choices: &[(K, Vec<V>)]) -> Vec<BTreeMap<K, V>> {
    let mut acc = vec![BTreeMap::new()];
    for (k, opts) in choices {
        let mut next = Vec::with_capacity(acc.len() * opts.len());
        for m in &acc {
            for v in opts {
                let mut m2 = m.clone();
                m2.insert(*k, *v);
                next.push(m2);
            }
        }
        acc = next;
    }
    acc
}

/// The bijection from characteristic-2 unipotent classes of `Sp(2n)` to
/// those of `SO(2n+1)`: a single part `1` is appended, `ε` is unchanged.
pub fn sp_to_so_odd(c: &ClassLabel) -> Result<ClassLabel> {
    let n = c.lambda().size();
    let sp = GroupDatum::char_two_group(LieType::C, n / 2);
    if !n.is_multiple_of(2) || !validate_class(&sp, c)? {
        return Err(Error::InvalidInput(format!("{c} is not a characteristic-2 unipotent class of Sp({n})")));
    }
    let (lambda, eps) = match c {
        ClassLabel::UnipChar2 { lambda, eps, .. } => (lambda, eps),
        _ => unreachable!("validated above"),
    };
    let mut parts = lambda.parts().to_vec();
    parts.push(1);
    Ok(ClassLabel::unip(Partition::new(parts)?, eps.clone()))
}

/// Inverse of [`sp_to_so_odd`].
pub fn so_odd_to_sp(c: &ClassLabel) -> Result<ClassLabel> {
    let n = c.lambda().size();
    let so = GroupDatum::char_two_group(LieType::B, n.saturating_sub(1) / 2);
    if n % 2 != 1 || !validate_class(&so, c)? {
        return Err(Error::InvalidInput(format!("{c} is not a characteristic-2 unipotent class of SO({n})")));
    }
    let (lambda, eps) = match c {
        ClassLabel::UnipChar2 { lambda, eps, .. } => (lambda, eps),
        _ => unreachable!("validated above"),
    };
    let reduced = remove_one_part_one(lambda).expect("validated above");
    Ok(ClassLabel::unip(reduced, eps.clone()))
}

/// Closure order: `c1 ≤ c2` iff `c1` lies in the closure of `c2`.
///
/// The two members of a degenerate pair are incomparable; otherwise tags
/// are ignored and the comparison goes through the data.
pub fn closure_le(d: &GroupDatum, c1: &ClassLabel, c2: &ClassLabel) -> Result<bool> {
    let (n1, n2) = (c1.lambda().size(), c2.lambda().size());
    if n1 != n2 {
        return Err(Error::SizeMismatch { left: n1, right: n2 });
    }
    if n1 != d.dimension() {
        return Err(Error::SizeMismatch { left: n1, right: d.dimension() });
    }
    if c1.is_degenerate_twin_of(c2) {
        return Ok(false);
    }
    match (d.characteristic, d.variety, c1, c2) {
        (
            Characteristic::One,
            _,
            ClassLabel::CharOne { lambda: l, .. },
            ClassLabel::CharOne { lambda: m, .. },
        ) => l.dominance_le(m),
        (
            Characteristic::Two,
            Variety::Group,
            ClassLabel::UnipChar2 { lambda: l, eps: e, .. },
            ClassLabel::UnipChar2 { lambda: m, eps: f, .. },
        ) => Ok(epsilon_order_le(l, e, m, f)),
        (
            Characteristic::Two,
            Variety::LieAlgebra,
            ClassLabel::NilpChar2 { .. },
            ClassLabel::NilpChar2 { .. },
        ) => {
            let w1 = springer::gamma(d, c1)?;
            let w2 = springer::gamma(d, c2)?;
            w1.pair.ab_le(&w2.pair)
        }
        _ => Err(Error::InvalidClass(format!("{c1} / {c2} do not match {d}"))),
    }
}

/// The order on pairs `(λ, ε)`: dominance, the `ε`-corrected conjugate
/// prefix sums, and the parity condition.
pub fn epsilon_order_le(l: &Partition, e: &EpsilonMap, m: &Partition, f: &EpsilonMap) -> bool {
    if !l.dominance_le(m).unwrap_or(false) {
        return false;
    }
    let (lc, mc) = (l.conjugate(), m.conjugate());
    let top = l.largest().max(m.largest()) as usize + 1;
    let (mut sl, mut sm) = (0u32, 0u32);
    for i in 1..=top {
        sl += lc.part(i - 1);
        sm += mc.part(i - 1);
        let iv = i as u32;
        if sl + f.get(iv).weight() < sm + e.get(iv).weight() {
            return false;
        }
        let diff = lc.part(i) as i64 - mc.part(i) as i64;
        if sl == sm && diff % 2 != 0 && f.get(iv) == Eps::Zero {
            return false;
        }
    }
    true
}
