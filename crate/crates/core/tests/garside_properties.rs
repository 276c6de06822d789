mod common;

use std::sync::Arc;

use braidrep::coxeter::artin_relations;
use braidrep::reprmap::{build_bn, build_d4, build_i2};
use braidrep::{
    type_a_realization, BraidElement, BraidWord, CayleyRealization, CoxeterType, Realization,
};
use common::{all_positive_words, random_signed_word, to_braid_word, RewriteOracle};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn cayley(t: &str) -> Arc<CayleyRealization> {
    let ctype: CoxeterType = t.parse().unwrap();
    let map = match t {
        "D4" => build_d4().unwrap(),
        _ if t.starts_with('B') => build_bn(ctype.param()).unwrap(),
        _ => build_i2(ctype.param()).unwrap(),
    };
    Arc::clone(map.source())
}

fn check_laws<R: Realization>(r: &Arc<R>, seed: u64, count: usize, max_len: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let la = rng.gen_range(0..=max_len);
        let lb = rng.gen_range(0..=max_len);
        let wa = random_signed_word(&mut rng, r.rank(), la);
        let wb = random_signed_word(&mut rng, r.rank(), lb);
        let a = BraidElement::from_word(r, &wa).unwrap();
        let b = BraidElement::from_word(r, &wb).unwrap();
        assert!(a.is_normal_form(), "{wa} -> {a}");
        let ab = a.multiply(&b).unwrap();
        assert_eq!(ab, BraidElement::from_word(r, &wa.concat(&wb)).unwrap());
        assert!(a.multiply(&a.invert()).unwrap().is_identity());
        assert!(a.invert().multiply(&a).unwrap().is_identity());
        assert_eq!(ab.invert(), b.invert().multiply(&a.invert()).unwrap());
        assert_eq!(a.invert(), BraidElement::from_word(r, &wa.inverse()).unwrap());
        assert_eq!(
            ab.underlying_permutation(),
            r.mul(&a.underlying_permutation(), &b.underlying_permutation())
        );
        assert_eq!(BraidElement::from_word(r, &a.to_word()).unwrap(), a);
    }
}

#[test]
fn group_laws_type_a() {
    for m in 2..=7 {
        let r = Arc::new(type_a_realization(m).unwrap());
        check_laws(&r, m as u64, 200, 40);
    }
}

#[test]
fn group_laws_cayley_types() {
    for (i, t) in ["I2(2)", "I2(5)", "I2(8)", "B2", "B3", "B4", "D4"].iter().enumerate() {
        check_laws(&cayley(t), i as u64, 200, 40);
    }
}

#[test]
fn defining_relations_hold_in_every_realization() {
    let mut realizations: Vec<Arc<CayleyRealization>> = ["I2(2)", "I2(3)", "I2(7)", "I2(12)", "B2", "B5", "D4"]
        .iter()
        .map(|t| cayley(t))
        .collect();
    realizations.push(Arc::clone(braidrep::reprmap::build_an(4).unwrap().source()));
    for r in realizations {
        for rel in artin_relations(r.matrix()) {
            let lhs = BraidWord::positive(&rel.lhs.iter().map(|s| s + 1).collect::<Vec<_>>());
            let rhs = BraidWord::positive(&rel.rhs.iter().map(|s| s + 1).collect::<Vec<_>>());
            assert_eq!(
                BraidElement::from_word(&r, &lhs).unwrap(),
                BraidElement::from_word(&r, &rhs).unwrap(),
                "{rel} in {}",
                r.coxeter_type()
            );
        }
    }
    for m in 2..=6 {
        let r = Arc::new(type_a_realization(m).unwrap());
        for i in 1..m as i32 - 1 {
            let a = BraidElement::from_word(&r, &BraidWord::new(vec![i, i + 1, i])).unwrap();
            let b = BraidElement::from_word(&r, &BraidWord::new(vec![i + 1, i, i + 1])).unwrap();
            assert_eq!(a, b);
        }
    }
}

#[test]
fn positive_words_agree_with_rewriting_oracle() {
    let r = Arc::new(type_a_realization(4).unwrap());
    let mut oracle = RewriteOracle::new();
    for len in 0..=5 {
        let words = all_positive_words(3, len);
        let keyed: Vec<(usize, BraidElement<_>)> = words
            .iter()
            .map(|w| (oracle.class(w), BraidElement::from_word(&r, &to_braid_word(w)).unwrap()))
            .collect();
        for (ca, a) in &keyed {
            for (cb, b) in &keyed {
                assert_eq!(ca == cb, a == b);
            }
        }
    }
}

#[test]
fn delta_is_central_up_to_tau_and_squares_are_central() {
    let r = Arc::new(type_a_realization(5).unwrap());
    let d2 = BraidElement::delta(&r, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let w = random_signed_word(&mut rng, 4, 15);
        let x = BraidElement::from_word(&r, &w).unwrap();
        assert_eq!(x.multiply(&d2).unwrap(), d2.multiply(&x).unwrap());
        assert!(d2.is_pure());
    }
}

#[test]
fn b_type_tau_is_trivial() {
    // w0 is central in B_n, so Δ commutes with every simple
    let r = cayley("B3");
    let d = BraidElement::delta(&r, 1);
    for x in r.elements() {
        assert_eq!(braidrep::garside::tau(&*r, &x), x);
        let lift = BraidElement::simple_lift(&r, x);
        assert_eq!(d.multiply(&lift).unwrap(), lift.multiply(&d).unwrap());
    }
}

fn arb_word(rank: i32, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..=rank, any::<bool>()), 0..max_len)
        .prop_map(|v| BraidWord::new(v.into_iter().map(|(g, pos)| if pos { g } else { -g }).collect()))
}

proptest! {
    #[test]
    fn normal_form_is_canonical(w in arb_word(5, 60)) {
        let r = Arc::new(type_a_realization(6).unwrap());
        let a = BraidElement::from_word(&r, &w).unwrap();
        prop_assert!(a.is_normal_form());
        let again = BraidElement::from_word(&r, &a.to_word()).unwrap();
        prop_assert_eq!(again.key(), a.key());
    }

    #[test]
    fn multiplication_is_associative(a in arb_word(3, 25), b in arb_word(3, 25), c in arb_word(3, 25)) {
        let r = Arc::new(type_a_realization(4).unwrap());
        let [x, y, z] = [a, b, c].map(|w| BraidElement::from_word(&r, &w).unwrap());
        let l = x.multiply(&y).unwrap().multiply(&z).unwrap();
        let rr = x.multiply(&y.multiply(&z).unwrap()).unwrap();
        prop_assert_eq!(l, rr);
    }
}
