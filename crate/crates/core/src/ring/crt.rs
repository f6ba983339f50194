//! Elementwise Chinese Remainder solver for `Z` and `Z/mZ`, including
//! non-coprime and zero moduli.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::Error;
use crate::ring::ideal::{divides, Ideal};
use crate::ring::{RingDescriptor, RingValue};
use crate::Result;

/// Outcome of [`crt_solve`]: either one simultaneous solution or the
/// indices of a pair whose compatibility condition fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrtOutcome {
    Solved(RingValue),
    /// `x_j - x_k` is not in `I_j + I_k` for this pair of indices.
    Infeasible(usize, usize),
}

/// Solves `x = x_i mod I_i` for all `i` by merging congruences left to
/// right with the extended Euclidean algorithm.
///
/// The system is solvable exactly when every pairwise condition
/// `x_j - x_k in I_j + I_k` holds; the first violated pair (in index
/// order) is reported otherwise. A congruence modulo the zero ideal is an
/// exact equality constraint. With two or more congruences the returned
/// representative is reduced to the least nonnegative residue modulo the
/// combined ideal; a single congruence returns its representative as
/// given.
pub fn crt_solve(congruences: &[(RingValue, Ideal)]) -> Result<CrtOutcome> {
    let Some(((first_value, _), _rest)) = congruences.split_first() else {
        return Err(Error::Internal(
            "crt_solve requires at least one congruence".into(),
        ));
    };
    let ring = first_value.ring().clone();
    for (value, ideal) in congruences {
        ring.expect_same(value.ring())?;
        ring.expect_same(ideal.ring())?;
    }

    // Lift to plain integer congruences: modulus 0 means exact equality.
    let lifted: Vec<(BigInt, BigInt)> = match &ring {
        RingDescriptor::Integers => congruences
            .iter()
            .map(|(v, i)| {
                (
                    v.as_integer().unwrap().clone(),
                    i.single_generator_int().unwrap(),
                )
            })
            .collect(),
        RingDescriptor::IntegersMod { modulus } => congruences
            .iter()
            .map(|(v, i)| {
                let d = i.single_generator_int().unwrap();
                // The zero ideal of Z/mZ constrains the value exactly,
                // which over the integers is a congruence mod m.
                let d = if d.is_zero() { BigInt::from(*modulus) } else { d };
                (BigInt::from(v.as_residue().unwrap()), d)
            })
            .collect(),
        RingDescriptor::IntegerPolynomials { .. } => {
            return Err(Error::UnsupportedRing {
                ring,
                operation: "crt_solve",
            })
        }
    };

    // Pairwise feasibility first: over these rings the pairwise condition
    // is also sufficient, so a later merge failure would be a bug.
    for j in 0..congruences.len() {
        for k in (j + 1)..congruences.len() {
            let sum = congruences[j].1.sum(&congruences[k].1)?;
            let difference = congruences[j].0.sub(&congruences[k].0)?;
            if !sum.contains(&difference)?.is_yes() {
                return Ok(CrtOutcome::Infeasible(j, k));
            }
        }
    }

    let (mut value, mut modulus) = lifted[0].clone();
    for (next_value, next_modulus) in lifted.iter().skip(1) {
        let eg = modulus.extended_gcd(next_modulus);
        let g = eg.gcd;
        let difference = next_value - &value;
        if g.is_zero() {
            // Both constraints are exact; feasibility made them agree.
            continue;
        }
        if !divides(&g, &difference) {
            return Err(Error::Internal(
                "pairwise-feasible CRT system failed to merge".into(),
            ));
        }
        value += &modulus * eg.x * (&difference / &g);
        modulus = modulus.lcm(next_modulus);
        if !modulus.is_zero() {
            value = value.mod_floor(&modulus);
        }
    }

    let solution = match &ring {
        RingDescriptor::Integers => RingValue::integer(value),
        RingDescriptor::IntegersMod { .. } => RingValue::from_integer(&ring, value),
        _ => unreachable!(),
    };
    debug_assert!(congruences.iter().all(|(v, i)| {
        let difference = solution.sub(v).unwrap();
        i.contains(&difference).unwrap().is_yes()
    }));
    Ok(CrtOutcome::Solved(solution))
}
