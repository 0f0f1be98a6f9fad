mod oracle;

use proptest::prelude::*;
use unipotent_pieces::classes::{enumerate_classes, GroupDatum, LieType};
use unipotent_pieces::filtration::{upsilon_char1, upsilon_char2};
use unipotent_pieces::partitions::{BiPartition, Partition};
use unipotent_pieces::pieces::{phi, psi};
use unipotent_pieces::springer::{gamma, gamma_inverse, lambda_set};
use unipotent_pieces::verify::find;

fn run(name: &str, n: u32) {
    if let Err(e) = find(name).unwrap().run(n) {
        panic!("{e}");
    }
}

#[test]
fn partition_invariants_at_full_bounds() {
    run("conjugate-involution", 12);
    run("dominance-conjugates", 10);
    run("partial-orders", 8);
    run("bipartition-count", 10);
}

#[test]
fn class_count_to_rank_seven() {
    run("class-count", 7);
    run("isogeny", 6);
}

#[test]
fn oracle_small_cases() {
    assert_eq!(oracle::graded_dimensions(&[1, 1, 1]), (0, vec![3]));
    assert_eq!(oracle::graded_dimensions(&[2, 2]), (1, vec![2, 0, 2]));
    assert_eq!(oracle::graded_dimensions(&[3, 1]), (2, vec![1, 0, 2, 0, 1]));
    assert!(oracle::orthogonal_admissible(&[2, 2, 1]));
    assert!(!oracle::orthogonal_admissible(&[2, 1, 1]));
}

#[test]
fn so6_example_through_both_routes() {
    let d = GroupDatum::char_two_group(LieType::D, 3);
    let c = serde_json::from_str(r#"{"lambda":[4,2],"epsilon":{"0":0,"2":1,"4":1}}"#).unwrap();
    let five_one = Partition::new(vec![5, 1]).unwrap();
    assert_eq!(psi(&d, &c).unwrap().lambda(), &five_one);
    assert_eq!(upsilon_char2(&d, &c).unwrap(), upsilon_char1(&five_one));
}

fn datum() -> impl Strategy<Value = GroupDatum> {
    (0usize..3, 1u32..=6, 0usize..3).prop_map(|(t, rank, kind)| {
        let t = LieType::ALL[t];
        let rank = if t == LieType::D { rank.max(2) } else { rank };
        GroupDatum::all_of(t, rank)[kind]
    })
}

fn partition(max: u32) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0..=max, 0..8).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn conjugation_preserves_size(p in partition(9)) {
        prop_assert_eq!(p.conjugate().size(), p.size());
        prop_assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn ab_order_refines_equality(a in partition(4), b in partition(4)) {
        let w = BiPartition::new(a, b);
        prop_assert!(w.ab_le(&w).unwrap());
    }

    #[test]
    fn gamma_round_trips(d in datum(), seed in any::<prop::sample::Index>()) {
        let classes = enumerate_classes(&d);
        let c = &classes[seed.index(classes.len())];
        let w = gamma(&d, c).unwrap();
        prop_assert_eq!(&gamma_inverse(&d, &w).unwrap(), c);
    }

    #[test]
    fn phi_is_idempotent(d in datum(), seed in any::<prop::sample::Index>()) {
        let ws = lambda_set(&d);
        let w = &ws[seed.index(ws.len())];
        let v = phi(&d, w).unwrap();
        prop_assert_eq!(phi(&d.to_char_one(), &v).unwrap(), v.clone());
        if !d.is_char_one() {
            prop_assert_eq!(phi(&d, &v).unwrap(), v);
        }
    }

    #[test]
    fn psi_preserves_size(d in datum(), seed in any::<prop::sample::Index>()) {
        let classes = enumerate_classes(&d);
        let c = &classes[seed.index(classes.len())];
        prop_assert_eq!(psi(&d, c).unwrap().lambda().size(), d.dimension());
    }
}
