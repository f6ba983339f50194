//! Finitely generated ideals with per-ring canonical forms.
//!
//! Over `Z` and `Z/mZ` every ideal normalizes to a single generator (the
//! gcd, folded into the divisor lattice of `m` for the modular ring, with
//! generator `0` denoting the zero ideal). Over `Z[x]` the generator list
//! is kept as-is apart from sign normalization, deduplication, and a
//! deterministic order; no canonical basis is computed.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::ring::membership::{self, MembershipVerdict, NonMembershipCertificate};
use crate::ring::{poly, RingDescriptor, RingValue, Trivalent};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    ring: RingDescriptor,
    generators: Vec<RingValue>,
}

impl Ideal {
    /// Builds the ideal generated by `generators`, normalized per ring.
    pub fn new(ring: RingDescriptor, generators: Vec<RingValue>) -> Result<Self> {
        ring.validate()?;
        for g in &generators {
            ring.expect_same(g.ring())?;
        }
        let generators = match &ring {
            RingDescriptor::Integers => {
                let g = generators
                    .iter()
                    .fold(BigInt::zero(), |acc, v| acc.gcd(v.as_integer().unwrap()));
                vec![RingValue::integer(g)]
            }
            RingDescriptor::IntegersMod { modulus } => {
                let g = generators
                    .iter()
                    .fold(BigInt::from(*modulus), |acc, v| {
                        acc.gcd(&BigInt::from(v.as_residue().unwrap()))
                    });
                let g = u64::try_from(g).expect("gcd of divisors of m fits");
                // gcd(gens, m) = m collapses to the zero ideal.
                let g = if g == *modulus { 0 } else { g };
                vec![RingValue::residue(*modulus, g)?]
            }
            RingDescriptor::IntegerPolynomials { variable } => {
                let mut gens: Vec<Vec<BigInt>> = generators
                    .iter()
                    .map(|v| poly::normalize_sign(v.as_poly().unwrap()))
                    .filter(|p| !p.is_empty())
                    .collect();
                gens.sort_by(compare_polys);
                gens.dedup();
                if gens.is_empty() {
                    gens.push(Vec::new());
                }
                gens.into_iter()
                    .map(|p| RingValue::polynomial(variable.clone(), p))
                    .collect()
            }
        };
        Ok(Ideal { ring, generators })
    }

    /// The principal ideal generated by one element.
    pub fn principal(generator: RingValue) -> Self {
        let ring = generator.ring().clone();
        Ideal::new(ring, vec![generator]).expect("single generator always normalizes")
    }

    pub fn zero(ring: RingDescriptor) -> Result<Self> {
        let z = RingValue::zero(&ring);
        Ideal::new(ring, vec![z])
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn generators(&self) -> &[RingValue] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(RingValue::is_zero)
    }

    pub fn is_principal(&self) -> bool {
        self.generators.len() == 1
    }

    /// The integer generator over `Z`, or the lifted generator over `Z/mZ`
    /// (`0` for the zero ideal in both cases).
    pub(crate) fn single_generator_int(&self) -> Option<BigInt> {
        match &self.ring {
            RingDescriptor::Integers => self.generators[0].as_integer().cloned(),
            RingDescriptor::IntegersMod { .. } => {
                self.generators[0].as_residue().map(BigInt::from)
            }
            RingDescriptor::IntegerPolynomials { .. } => None,
        }
    }

    /// Sum of ideals: generated by the union of the generator lists.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.expect_same(&other.ring)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(self.ring.clone(), gens)
    }

    /// Intersection. Over `Z` and `Z/mZ` this is the lcm of the generators;
    /// over `Z[x]` both ideals must be principal and the result is the
    /// unique-factorization lcm.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.expect_same(&other.ring)?;
        match &self.ring {
            RingDescriptor::Integers | RingDescriptor::IntegersMod { .. } => {
                let a = self.single_generator_int().unwrap();
                let b = other.single_generator_int().unwrap();
                let l = a.lcm(&b);
                Ideal::new(self.ring.clone(), vec![RingValue::from_integer(&self.ring, l)])
            }
            RingDescriptor::IntegerPolynomials { variable } => {
                if !self.is_principal() || !other.is_principal() {
                    return Err(Error::NonPrincipalIntersection);
                }
                let a = self.generators[0].as_poly().unwrap();
                let b = other.generators[0].as_poly().unwrap();
                let l = poly::lcm(a, b);
                Ok(Ideal::principal(RingValue::polynomial(variable.clone(), l)))
            }
        }
    }

    /// Membership of `target` with the default polynomial degree bound
    /// `max(deg target, max deg generator) + 4`.
    pub fn contains(&self, target: &RingValue) -> Result<MembershipVerdict> {
        self.contains_bounded(target, self.default_degree_bound(target))
    }

    pub fn default_degree_bound(&self, target: &RingValue) -> usize {
        let gen_deg = self
            .generators
            .iter()
            .filter_map(|g| g.as_poly().and_then(poly::degree))
            .max()
            .unwrap_or(0);
        let target_deg = target.as_poly().and_then(poly::degree).unwrap_or(0);
        gen_deg.max(target_deg) + 4
    }

    /// Membership with an explicit cofactor degree bound (only meaningful
    /// over `Z[x]`; the PID-like rings always decide).
    pub fn contains_bounded(
        &self,
        target: &RingValue,
        degree_bound: usize,
    ) -> Result<MembershipVerdict> {
        self.ring.expect_same(target.ring())?;
        match &self.ring {
            RingDescriptor::Integers | RingDescriptor::IntegersMod { .. } => {
                let g = self.single_generator_int().unwrap();
                let t = match &self.ring {
                    RingDescriptor::Integers => target.as_integer().unwrap().clone(),
                    _ => BigInt::from(target.as_residue().unwrap()),
                };
                let verdict = if g.is_zero() {
                    if t.is_zero() {
                        MembershipVerdict::Yes {
                            cofactors: vec![RingValue::zero(&self.ring)],
                        }
                    } else {
                        MembershipVerdict::No {
                            certificate: NonMembershipCertificate::Divisibility {
                                generator: self.generators[0].clone(),
                                remainder: target.clone(),
                            },
                        }
                    }
                } else {
                    let (q, r) = t.div_rem(&g);
                    if r.is_zero() {
                        MembershipVerdict::Yes {
                            cofactors: vec![RingValue::from_integer(&self.ring, q)],
                        }
                    } else {
                        MembershipVerdict::No {
                            certificate: NonMembershipCertificate::Divisibility {
                                generator: self.generators[0].clone(),
                                remainder: RingValue::from_integer(&self.ring, r),
                            },
                        }
                    }
                };
                Ok(verdict)
            }
            RingDescriptor::IntegerPolynomials { .. } => {
                membership::decide_poly(self, target, degree_bound)
            }
        }
    }

    /// Whether every generator of `other` belongs to `self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<Trivalent> {
        self.ring.expect_same(&other.ring)?;
        let mut acc = Trivalent::True;
        for g in &other.generators {
            let v = match self.contains(g)? {
                MembershipVerdict::Yes { .. } => Trivalent::True,
                MembershipVerdict::No { .. } => Trivalent::False,
                MembershipVerdict::Unknown => Trivalent::Unknown,
            };
            acc = acc.and(v);
            if acc.is_false() {
                break;
            }
        }
        Ok(acc)
    }

    /// Ideal equality: canonical-generator comparison over `Z` and `Z/mZ`,
    /// mutual containment over `Z[x]` (which may be `Unknown`).
    pub fn equal(&self, other: &Ideal) -> Result<Trivalent> {
        self.ring.expect_same(&other.ring)?;
        if self == other {
            return Ok(Trivalent::True);
        }
        match &self.ring {
            RingDescriptor::Integers | RingDescriptor::IntegersMod { .. } => {
                Ok(Trivalent::False)
            }
            RingDescriptor::IntegerPolynomials { .. } => {
                Ok(self.contains_ideal(other)?.and(other.contains_ideal(self)?))
            }
        }
    }

    /// The members of the ideal as residues, sorted ascending. Only
    /// available over `Z/mZ`.
    pub fn residues(&self) -> Result<Vec<u64>> {
        match &self.ring {
            RingDescriptor::IntegersMod { modulus } => {
                let d = self.generators[0].as_residue().unwrap();
                if d == 0 {
                    Ok(vec![0])
                } else {
                    Ok((0..*modulus / d).map(|k| k * d).collect())
                }
            }
            _ => Err(Error::UnsupportedRing {
                ring: self.ring.clone(),
                operation: "residues",
            }),
        }
    }
}

fn compare_polys(a: &Vec<BigInt>, b: &Vec<BigInt>) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\u{27e8}")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "\u{27e9}")
    }
}

/// Writes `x` as a sum `a_1 + ... + a_k` with `a_i` in `ideals[i]`,
/// peeling one ideal at a time with the extended Euclidean algorithm.
/// Only `Z` and `Z/mZ` are supported.
pub fn decompose_into_sum(x: &RingValue, ideals: &[Ideal]) -> Result<Vec<RingValue>> {
    let ring = x.ring().clone();
    for ideal in ideals {
        ring.expect_same(ideal.ring())?;
    }
    let (mut remaining, wrap): (BigInt, Option<BigInt>) = match &ring {
        RingDescriptor::Integers => (x.as_integer().unwrap().clone(), None),
        RingDescriptor::IntegersMod { modulus } => (
            BigInt::from(x.as_residue().unwrap()),
            Some(BigInt::from(*modulus)),
        ),
        RingDescriptor::IntegerPolynomials { .. } => {
            return Err(Error::UnsupportedRing {
                ring,
                operation: "decompose_into_sum",
            })
        }
    };

    // Lift to integer generators. Over Z/mZ the zero ideal {0} lifts to
    // multiples of m, and a trailing virtual ideal <m> absorbs the wrap.
    let mut gens: Vec<BigInt> = ideals
        .iter()
        .map(|i| {
            let g = i.single_generator_int().unwrap();
            match (&wrap, g.is_zero()) {
                (Some(m), true) => m.clone(),
                _ => g,
            }
        })
        .collect();
    if let Some(m) = &wrap {
        gens.push(m.clone());
    }

    let mut suffix_gcd = vec![BigInt::zero(); gens.len() + 1];
    for i in (0..gens.len()).rev() {
        suffix_gcd[i] = gens[i].gcd(&suffix_gcd[i + 1]);
    }
    if !divides(&suffix_gcd[0], &remaining) {
        return Err(Error::NotInSum {
            target: x.to_string(),
            gcd: suffix_gcd[0].to_string(),
        });
    }

    let mut parts: Vec<BigInt> = Vec::with_capacity(gens.len());
    for i in 0..gens.len() {
        if i + 1 == gens.len() {
            parts.push(remaining.clone());
            break;
        }
        let d = &gens[i];
        let rest = &suffix_gcd[i + 1];
        let eg = d.extended_gcd(rest);
        if eg.gcd.is_zero() {
            // All remaining generators are zero, so remaining must be 0.
            parts.push(BigInt::zero());
            continue;
        }
        let mut part = (&remaining / &eg.gcd) * &eg.x * d;
        let l = d.lcm(rest);
        if !l.is_zero() {
            part = part.mod_floor(&l);
        }
        remaining -= &part;
        parts.push(part);
    }

    if wrap.is_some() {
        parts.pop();
    }
    let values: Vec<RingValue> = parts
        .into_iter()
        .map(|p| RingValue::from_integer(&ring, p))
        .collect();

    debug_assert!({
        let sum = values
            .iter()
            .fold(RingValue::zero(&ring), |acc, v| acc.add(v).unwrap());
        sum == *x
    });
    Ok(values)
}

pub(crate) fn divides(d: &BigInt, v: &BigInt) -> bool {
    if d.is_zero() {
        v.is_zero()
    } else {
        v.mod_floor(&d.abs()).is_zero()
    }
}
