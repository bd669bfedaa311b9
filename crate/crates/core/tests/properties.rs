//! Property tests on random permutation groups, Hilbert symbols and
//! cyclotomic arithmetic.

use negk_core::group::DEFAULT_ORDER_CAP;
use negk_core::schur::{hilbert_symbol, Place};
use negk_core::{k_minus_one, r_of_group, verify_group, Cyclotomic, FiniteGroup, Perm};
use proptest::prelude::*;

fn perm(degree: u32) -> impl Strategy<Value = Perm> {
    Just((0..degree).collect::<Vec<u32>>()).prop_shuffle().prop_map(Perm)
}

/// 1 to 3 random permutations of a common degree at most 5.
fn generators() -> impl Strategy<Value = Vec<Perm>> {
    (1u32..=5).prop_flat_map(|d| prop::collection::vec(perm(d), 1..=3))
}

fn group(gens: &[Perm]) -> FiniteGroup {
    FiniteGroup::from_generators(gens, DEFAULT_ORDER_CAP).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_groups_pass_verification(gens in generators()) {
        let g = group(&gens);
        let rep = verify_group(&g, "random");
        prop_assert!(rep.passed(), "{:?}", rep.failures);
    }

    #[test]
    fn rank_is_nonnegative_and_s_needs_four(gens in generators()) {
        let g = group(&gens);
        let res = k_minus_one(&g).unwrap();
        prop_assert!(res.rank_breakdown.r >= 0);
        if g.order() % 4 != 0 {
            prop_assert_eq!(res.s, 0);
        }
    }

    #[test]
    fn generator_order_does_not_matter(gens in generators(), seed in any::<u64>()) {
        let mut shuffled = gens.clone();
        let k = shuffled.len();
        shuffled.rotate_left((seed as usize) % k);
        shuffled.push(gens[0].compose(&gens[k - 1]));
        let (a, b) = (group(&gens), group(&shuffled));
        prop_assume!(a.order() == b.order());
        prop_assert_eq!(r_of_group(&a).unwrap(), r_of_group(&b).unwrap());
        prop_assert_eq!(k_minus_one(&a).unwrap().s, k_minus_one(&b).unwrap().s);
    }
}

fn nonzero() -> impl Strategy<Value = i64> {
    (-60i64..=60).prop_filter("nonzero", |&a| a != 0)
}

fn places_of(a: i64, b: i64) -> Vec<Place> {
    let mut m = 2 * a.unsigned_abs() * b.unsigned_abs();
    let mut out = vec![Place::Infinite];
    let mut p = 2;
    while m > 1 {
        if m % p == 0 {
            out.push(Place::Prime(p));
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    out
}

proptest! {
    #[test]
    fn hilbert_symbol_is_symmetric_and_bilinear(a in nonzero(), b in nonzero(), c in nonzero()) {
        for v in places_of(a, b * c) {
            prop_assert_eq!(hilbert_symbol(a, b, v), hilbert_symbol(b, a, v));
            prop_assert_eq!(hilbert_symbol(a, b * c, v), hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v));
            prop_assert_eq!(hilbert_symbol(a, -a, v), 1);
        }
    }

    #[test]
    fn hilbert_reciprocity(a in nonzero(), b in nonzero()) {
        let product: i32 = places_of(a, b).into_iter().map(|v| hilbert_symbol(a, b, v)).product();
        prop_assert_eq!(product, 1);
    }
}

/// Conductors dividing 120, so products stay small.
fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    prop::sample::select(vec![1u64, 2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24]).prop_flat_map(|n| {
        prop::collection::vec(-3i64..=3, n as usize).prop_map(move |w| Cyclotomic::from_int_exponent_sum(n, &w))
    })
}

proptest! {
    #[test]
    fn cyclotomic_ring_laws(x in cyclotomic(), y in cyclotomic(), z in cyclotomic()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x - &y) + &y, x.clone());
        prop_assert_eq!(&x * &Cyclotomic::one(), x.clone());
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
    }

    #[test]
    fn galois_action_is_a_ring_map(x in cyclotomic(), y in cyclotomic(), t in 1i64..120) {
        let n = num_integer::lcm(x.stored_conductor(), y.stored_conductor());
        prop_assume!(num_integer::gcd(t as u64, n) == 1);
        let (x, y) = (x.lift(n), y.lift(n));
        let s = |v: &Cyclotomic| v.galois_apply(t).unwrap();
        prop_assert_eq!(s(&(&x + &y)), &s(&x) + &s(&y));
        prop_assert_eq!(s(&(&x * &y)), &s(&x) * &s(&y));
    }
}
