//! Property tests for the algebraic plumbing: divisor-class arithmetic is a
//! Q-vector space, root tokens round-trip, and permutation structure is sane.

use proptest::prelude::*;

use kanev::divisors::{DivisorClass, Symbol};
use kanev::lattice::{all_roots, Root};
use kanev::linalg::q;
use kanev::weyl::{reflection, Perm};

fn arb_symbol() -> impl Strategy<Value = Symbol> {
    prop_oneof![
        Just(Symbol::Lambda),
        Just(Symbol::LambdaMinus),
        Just(Symbol::Gamma),
        Just(Symbol::Kappa1),
        Just(Symbol::DE6),
        Just(Symbol::DSyz),
        Just(Symbol::FrakN),
        (2u8..=12).prop_map(Symbol::B),
    ]
}

fn arb_class() -> impl Strategy<Value = DivisorClass> {
    proptest::collection::vec((arb_symbol(), -40i64..=40, 1i64..=12), 0..6).prop_map(|terms| {
        let mut d = DivisorClass::zero();
        for (s, n, den) in terms {
            d.add_term(q(n, den), s);
        }
        d
    })
}

proptest! {
    #[test]
    fn class_addition_commutes(a in arb_class(), b in arb_class()) {
        prop_assert_eq!(a.clone() + b.clone(), b + a);
    }

    #[test]
    fn class_addition_associates(a in arb_class(), b in arb_class(), c in arb_class()) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a + (b + c));
    }

    #[test]
    fn scaling_distributes(a in arb_class(), b in arb_class(), n in -15i64..=15, d in 1i64..=9) {
        let c = q(n, d);
        prop_assert_eq!((a.clone() + b.clone()).scale(&c), a.scale(&c) + b.scale(&c));
    }

    #[test]
    fn subtraction_cancels(a in arb_class()) {
        prop_assert!((a.clone() - a).is_zero());
    }

    #[test]
    fn root_tokens_round_trip(idx in 0usize..72) {
        let r = all_roots()[idx];
        let token = r.to_string();
        let back: Root = token.parse().unwrap();
        prop_assert_eq!(back.vec, r.vec);
        // raw tuple form parses to the same vector
        let tuple: Root = r.vec.to_string().parse().unwrap();
        prop_assert_eq!(tuple.vec, r.vec);
    }

    #[test]
    fn reflections_compose_to_incidence_preserving_perms(i in 0usize..72, j in 0usize..72) {
        let ri = all_roots()[i];
        let rj = all_roots()[j];
        let p = reflection(&ri).unwrap().compose(&reflection(&rj).unwrap());
        // permutation inverse really inverts
        prop_assert_eq!(p.compose(&p.inverse()), Perm::identity());
        // cycle type is a partition of 27
        let total: u32 = p.cycle_type().iter().map(|&c| c as u32).sum();
        prop_assert_eq!(total, 27);
        // incidence is preserved
        let d = kanev::incidence::build_incidence();
        prop_assert!(d.commutes_with(&p));
    }
}
