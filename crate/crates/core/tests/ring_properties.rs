//! Randomized invariants for ideal arithmetic: canonical-form stability,
//! semiring laws of the ideal sum, the distributivity identities that
//! characterize the base rings where every labeled graph is well-behaved,
//! and oracle cross-checks for the CRT and decomposition routines.

use graph_splines::ring::{
    crt_solve, decompose_into_sum, CrtOutcome, Ideal, RingDescriptor, RingValue,
};
use proptest::prelude::*;

fn int_ideal() -> impl Strategy<Value = Ideal> {
    (-1000i64..=1000).prop_map(|g| Ideal::principal(RingValue::integer(g)))
}

fn modular_triple() -> impl Strategy<Value = (u64, u64, u64, u64)> {
    (2u64..=12).prop_flat_map(|m| (Just(m), 0..m, 0..m, 0..m))
}

fn residue_ideal(m: u64, g: u64) -> Ideal {
    Ideal::principal(RingValue::residue(m, g).unwrap())
}

fn poly_value() -> impl Strategy<Value = RingValue> {
    proptest::collection::vec(-9i64..=9, 0..=3)
        .prop_map(|coeffs| RingValue::polynomial_i64("x", &coeffs))
}

proptest! {
    #[test]
    fn normalization_is_idempotent_over_z(gens in proptest::collection::vec(-1000i64..=1000, 1..=4)) {
        let values: Vec<RingValue> = gens.into_iter().map(RingValue::integer).collect();
        let ideal = Ideal::new(RingDescriptor::Integers, values).unwrap();
        let again = Ideal::new(RingDescriptor::Integers, ideal.generators().to_vec()).unwrap();
        prop_assert_eq!(again, ideal);
    }

    #[test]
    fn normalization_is_idempotent_over_z_mod((m, g1, g2, _) in modular_triple()) {
        let ring = RingDescriptor::integers_mod(m).unwrap();
        let values = vec![
            RingValue::residue(m, g1).unwrap(),
            RingValue::residue(m, g2).unwrap(),
        ];
        let ideal = Ideal::new(ring.clone(), values).unwrap();
        let again = Ideal::new(ring, ideal.generators().to_vec()).unwrap();
        prop_assert_eq!(again, ideal);
    }

    #[test]
    fn normalization_is_idempotent_over_z_x(gens in proptest::collection::vec(poly_value(), 1..=3)) {
        let ring = RingDescriptor::integer_polynomials("x");
        let ideal = Ideal::new(ring.clone(), gens).unwrap();
        let again = Ideal::new(ring, ideal.generators().to_vec()).unwrap();
        prop_assert_eq!(again, ideal);
    }

    #[test]
    fn sum_laws_over_z(a in int_ideal(), b in int_ideal(), c in int_ideal()) {
        let zero = Ideal::zero(RingDescriptor::Integers).unwrap();
        prop_assert_eq!(a.sum(&b).unwrap(), b.sum(&a).unwrap());
        prop_assert_eq!(
            a.sum(&b).unwrap().sum(&c).unwrap(),
            a.sum(&b.sum(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.sum(&zero).unwrap(), a);
    }

    #[test]
    fn sum_laws_over_z_mod((m, g1, g2, g3) in modular_triple()) {
        let a = residue_ideal(m, g1);
        let b = residue_ideal(m, g2);
        let c = residue_ideal(m, g3);
        let zero = residue_ideal(m, 0);
        prop_assert_eq!(a.sum(&b).unwrap(), b.sum(&a).unwrap());
        prop_assert_eq!(
            a.sum(&b).unwrap().sum(&c).unwrap(),
            a.sum(&b.sum(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.sum(&zero).unwrap(), a);
    }

    /// Sums and intersections distribute over each other in Z (the
    /// divisor lattice): both identities hold for every ideal triple.
    #[test]
    fn distributivity_over_z(a in int_ideal(), b in int_ideal(), c in int_ideal()) {
        let lhs = a.sum(&b.intersect(&c).unwrap()).unwrap();
        let rhs = a.sum(&b).unwrap().intersect(&a.sum(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);

        let lhs = a.intersect(&b.sum(&c).unwrap()).unwrap();
        let rhs = a.intersect(&b).unwrap().sum(&a.intersect(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn distributivity_over_z_mod((m, g1, g2, g3) in modular_triple()) {
        let a = residue_ideal(m, g1);
        let b = residue_ideal(m, g2);
        let c = residue_ideal(m, g3);
        let lhs = a.sum(&b.intersect(&c).unwrap()).unwrap();
        let rhs = a.sum(&b).unwrap().intersect(&a.sum(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);

        let lhs = a.intersect(&b.sum(&c).unwrap()).unwrap();
        let rhs = a.intersect(&b).unwrap().sum(&a.intersect(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// crt_solve agrees with exhaustive search over Z/mZ.
    #[test]
    fn crt_matches_exhaustive_search(
        (m, system) in (2u64..=12).prop_flat_map(|m| {
            let congruence = (0..m, 0..m);
            (Just(m), proptest::collection::vec(congruence, 1..=4))
        })
    ) {
        let congruences: Vec<(RingValue, Ideal)> = system
            .iter()
            .map(|&(x, d)| {
                (RingValue::residue(m, x).unwrap(), residue_ideal(m, d))
            })
            .collect();
        let solutions: Vec<u64> = (0..m)
            .filter(|&r| {
                congruences.iter().all(|(x, ideal)| {
                    let diff = RingValue::residue(m, r).unwrap().sub(x).unwrap();
                    ideal.contains(&diff).unwrap().is_yes()
                })
            })
            .collect();
        match crt_solve(&congruences).unwrap() {
            CrtOutcome::Solved(value) => {
                let r = value.as_residue().unwrap();
                prop_assert!(solutions.contains(&r), "returned {r}, valid: {solutions:?}");
            }
            CrtOutcome::Infeasible(j, k) => {
                prop_assert!(solutions.is_empty(), "infeasible but {solutions:?} solve it");
                // the reported pair really is incompatible
                let sum = congruences[j].1.sum(&congruences[k].1).unwrap();
                let diff = congruences[j].0.sub(&congruences[k].0).unwrap();
                prop_assert!(sum.contains(&diff).unwrap().is_no());
            }
        }
    }

    /// Every successful decomposition satisfies its contract: parts sum
    /// to the target and each lies in its ideal.
    #[test]
    fn decomposition_contract_over_z(
        gens in proptest::collection::vec(0i64..=30, 1..=5),
        factor in -20i64..=20,
    ) {
        let g = gens.iter().fold(0i64, |acc, &v| gcd_i64(acc, v));
        let x = RingValue::integer(g * factor);
        let ideals: Vec<Ideal> = gens
            .iter()
            .map(|&v| Ideal::principal(RingValue::integer(v)))
            .collect();
        let parts = decompose_into_sum(&x, &ideals).unwrap();
        let sum = parts
            .iter()
            .fold(RingValue::integer(0), |acc, v| acc.add(v).unwrap());
        prop_assert_eq!(sum, x);
        for (part, ideal) in parts.iter().zip(&ideals) {
            let verdict = ideal.contains(part).unwrap();
            prop_assert!(verdict.is_yes());
            prop_assert!(verdict.recheck(ideal, part).unwrap());
        }
    }

    /// Planted combinations are always found within the default bound,
    /// and the returned cofactors re-verify exactly.
    #[test]
    fn planted_polynomial_memberships_are_found(
        gens in proptest::collection::vec(poly_value(), 1..=3),
        cofactors in proptest::collection::vec(poly_value(), 3),
    ) {
        let ring = RingDescriptor::integer_polynomials("x");
        let ideal = Ideal::new(ring.clone(), gens.clone()).unwrap();
        let mut target = RingValue::zero(&ring);
        for (f, g) in cofactors.iter().zip(&gens) {
            target = target.add(&f.mul(g).unwrap()).unwrap();
        }
        if ideal.is_zero() && !target.is_zero() {
            return Ok(());
        }
        let verdict = ideal.contains(&target).unwrap();
        prop_assert!(verdict.is_yes(), "{ideal} should contain {target}");
        prop_assert!(verdict.recheck(&ideal, &target).unwrap());
    }
}

fn gcd_i64(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// Z[x] genuinely breaks the distributivity that Z satisfies: with
/// I = <x>, J = <2>, K = <x + 2>, the element 2 lies in both I + J and
/// I + K but certifiably not in I + (J intersect K). Every membership is
/// certificate-backed, so the failure is confirmed, not assumed.
#[test]
fn polynomial_triple_breaks_distributivity() {
    let px = |coeffs: &[i64]| RingValue::polynomial_i64("x", coeffs);
    let i = Ideal::principal(px(&[0, 1]));
    let j = Ideal::principal(px(&[2]));
    let k = Ideal::principal(px(&[2, 1]));
    let two = px(&[2]);

    // 2 is in (I + J) and in (I + K), hence in their intersection.
    for side in [i.sum(&j).unwrap(), i.sum(&k).unwrap()] {
        let verdict = side.contains(&two).unwrap();
        assert!(verdict.is_yes(), "2 should be in {side}");
        assert!(verdict.recheck(&side, &two).unwrap());
    }

    // J intersect K is the principal ideal <2x + 4>.
    let jk = j.intersect(&k).unwrap();
    assert_eq!(jk, Ideal::principal(px(&[4, 2])));

    // 2 is certifiably outside I + (J intersect K) = <x, 2x + 4>.
    let rhs = i.sum(&jk).unwrap();
    let verdict = rhs.contains(&two).unwrap();
    assert!(verdict.is_no(), "2 must be certified outside {rhs}");

    // So I + (J intersect K) differs from (I + J) intersect (I + K):
    // the right-hand side contains 2 and the left-hand side does not.
    assert!(!rhs.equal(&i.sum(&j).unwrap()).unwrap().is_true());
}
