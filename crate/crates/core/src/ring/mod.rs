//! Exact arithmetic for the three supported base rings and their finitely
//! generated ideals: `Z`, `Z/mZ`, and `Z[x]`.

mod crt;
mod ideal;
mod membership;
pub mod poly;
pub mod text;

pub use crt::{crt_solve, CrtOutcome};
pub use ideal::{decompose_into_sum, Ideal};
pub use membership::{MembershipVerdict, NonMembershipCertificate};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

/// Identifies one of the supported base rings. Values and ideals carry
/// their descriptor; mixing descriptors in any operation is an error.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RingDescriptor {
    Integers,
    IntegersMod { modulus: u64 },
    IntegerPolynomials { variable: String },
}

impl RingDescriptor {
    pub fn integers() -> Self {
        RingDescriptor::Integers
    }

    pub fn integers_mod(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModulus(modulus));
        }
        Ok(RingDescriptor::IntegersMod { modulus })
    }

    pub fn integer_polynomials(variable: impl Into<String>) -> Self {
        RingDescriptor::IntegerPolynomials {
            variable: variable.into(),
        }
    }

    /// Checks the descriptor's own invariants (used after deserialization,
    /// which bypasses the constructors).
    pub fn validate(&self) -> Result<()> {
        match self {
            RingDescriptor::IntegersMod { modulus } if *modulus < 2 => {
                Err(Error::InvalidModulus(*modulus))
            }
            RingDescriptor::IntegerPolynomials { variable }
                if !is_valid_variable_name(variable) =>
            {
                Err(Error::Parse(format!("invalid variable name `{variable}`")))
            }
            _ => Ok(()),
        }
    }

    pub fn expect_same(&self, other: &RingDescriptor) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                expected: self.clone(),
                found: other.clone(),
            })
        }
    }

    pub fn is_polynomial(&self) -> bool {
        matches!(self, RingDescriptor::IntegerPolynomials { .. })
    }
}

fn is_valid_variable_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric())
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => write!(f, "Z"),
            RingDescriptor::IntegersMod { modulus } => write!(f, "Z/{modulus}"),
            RingDescriptor::IntegerPolynomials { variable } => write!(f, "Z[{variable}]"),
        }
    }
}

impl FromStr for RingDescriptor {
    type Err = Error;

    /// Parses the compact forms `Z`, `Z/<m>`, and `Z[<var>]`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Z" {
            return Ok(RingDescriptor::Integers);
        }
        if let Some(m) = s.strip_prefix("Z/") {
            let modulus: u64 = m
                .parse()
                .map_err(|_| Error::Parse(format!("invalid modulus `{m}`")))?;
            return RingDescriptor::integers_mod(modulus);
        }
        if let Some(var) = s.strip_prefix("Z[").and_then(|r| r.strip_suffix(']')) {
            if !is_valid_variable_name(var) {
                return Err(Error::Parse(format!("invalid variable name `{var}`")));
            }
            return Ok(RingDescriptor::integer_polynomials(var));
        }
        Err(Error::Parse(format!(
            "invalid ring `{s}` (expected Z, Z/<m>, or Z[<var>])"
        )))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Payload {
    Int(BigInt),
    /// Residue reduced into `[0, m)`.
    Residue(u64),
    /// Ascending coefficients, no trailing zero; zero is the empty vector.
    Poly(Vec<BigInt>),
}

/// An exact element of one of the supported rings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingValue {
    ring: RingDescriptor,
    payload: Payload,
}

impl RingValue {
    pub fn integer(value: impl Into<BigInt>) -> Self {
        RingValue {
            ring: RingDescriptor::Integers,
            payload: Payload::Int(value.into()),
        }
    }

    pub fn residue(modulus: u64, value: impl Into<BigInt>) -> Result<Self> {
        let ring = RingDescriptor::integers_mod(modulus)?;
        let value = value.into().mod_floor(&BigInt::from(modulus));
        Ok(RingValue {
            ring,
            payload: Payload::Residue(u64::try_from(value).expect("reduced residue fits")),
        })
    }

    pub fn polynomial(variable: impl Into<String>, coeffs: Vec<BigInt>) -> Self {
        RingValue {
            ring: RingDescriptor::integer_polynomials(variable),
            payload: Payload::Poly(poly::canonical(coeffs)),
        }
    }

    pub fn polynomial_i64(variable: impl Into<String>, coeffs: &[i64]) -> Self {
        Self::polynomial(variable, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds an element of `ring` from an arbitrary integer, reducing
    /// residues and embedding constants into the polynomial ring.
    pub fn from_integer(ring: &RingDescriptor, value: impl Into<BigInt>) -> Self {
        let value = value.into();
        match ring {
            RingDescriptor::Integers => RingValue::integer(value),
            RingDescriptor::IntegersMod { modulus } => {
                RingValue::residue(*modulus, value).expect("descriptor already validated")
            }
            RingDescriptor::IntegerPolynomials { variable } => {
                RingValue::polynomial(variable.clone(), vec![value])
            }
        }
    }

    pub fn zero(ring: &RingDescriptor) -> Self {
        Self::from_integer(ring, 0)
    }

    pub fn one(ring: &RingDescriptor) -> Self {
        Self::from_integer(ring, 1)
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        match &self.payload {
            Payload::Int(v) => v.is_zero(),
            Payload::Residue(v) => *v == 0,
            Payload::Poly(p) => p.is_empty(),
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match &self.payload {
            Payload::Int(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match &self.payload {
            Payload::Residue(v) => Some(*v),
            _ => None,
        }
    }

    pub fn as_poly(&self) -> Option<&[BigInt]> {
        match &self.payload {
            Payload::Poly(p) => Some(p),
            _ => None,
        }
    }

    fn binary(&self, other: &RingValue, op: BinaryOp) -> Result<RingValue> {
        self.ring.expect_same(&other.ring)?;
        let payload = match (&self.payload, &other.payload) {
            (Payload::Int(a), Payload::Int(b)) => Payload::Int(match op {
                BinaryOp::Add => a + b,
                BinaryOp::Sub => a - b,
                BinaryOp::Mul => a * b,
            }),
            (Payload::Residue(a), Payload::Residue(b)) => {
                let m = match &self.ring {
                    RingDescriptor::IntegersMod { modulus } => *modulus,
                    _ => unreachable!("residue payload implies modular ring"),
                };
                let (a, b) = (*a as u128, *b as u128);
                let m128 = m as u128;
                let v = match op {
                    BinaryOp::Add => (a + b) % m128,
                    BinaryOp::Sub => (a + m128 - b) % m128,
                    BinaryOp::Mul => a * b % m128,
                };
                Payload::Residue(v as u64)
            }
            (Payload::Poly(a), Payload::Poly(b)) => Payload::Poly(match op {
                BinaryOp::Add => poly::add(a, b),
                BinaryOp::Sub => poly::sub(a, b),
                BinaryOp::Mul => poly::mul(a, b),
            }),
            _ => unreachable!("equal descriptors imply equal payload kinds"),
        };
        Ok(RingValue {
            ring: self.ring.clone(),
            payload,
        })
    }

    pub fn add(&self, other: &RingValue) -> Result<RingValue> {
        self.binary(other, BinaryOp::Add)
    }

    pub fn sub(&self, other: &RingValue) -> Result<RingValue> {
        self.binary(other, BinaryOp::Sub)
    }

    pub fn mul(&self, other: &RingValue) -> Result<RingValue> {
        self.binary(other, BinaryOp::Mul)
    }

    pub fn neg(&self) -> RingValue {
        let payload = match &self.payload {
            Payload::Int(v) => Payload::Int(-v),
            Payload::Residue(v) => {
                let m = match &self.ring {
                    RingDescriptor::IntegersMod { modulus } => *modulus,
                    _ => unreachable!(),
                };
                Payload::Residue(if *v == 0 { 0 } else { m - v })
            }
            Payload::Poly(p) => Payload::Poly(poly::neg(p)),
        };
        RingValue {
            ring: self.ring.clone(),
            payload,
        }
    }
}

#[derive(Clone, Copy)]
enum BinaryOp {
    Add,
    Sub,
    Mul,
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.payload {
            Payload::Int(v) => write!(f, "{v}"),
            Payload::Residue(v) => write!(f, "{v}"),
            Payload::Poly(p) => {
                let var = match &self.ring {
                    RingDescriptor::IntegerPolynomials { variable } => variable.as_str(),
                    _ => unreachable!(),
                };
                write!(f, "{}", text::render_poly(p, var))
            }
        }
    }
}

/// A ring automorphism of the base ring. `Z` and `Z/mZ` admit only the
/// identity; `Z[x]` admits exactly the affine substitutions
/// `x -> epsilon*x + shift` with `epsilon` a unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Automorphism {
    Identity,
    PolyAffine { negate: bool, shift: BigInt },
}

impl Automorphism {
    pub fn validate_for(&self, ring: &RingDescriptor) -> Result<()> {
        match (self, ring) {
            (Automorphism::Identity, _) => Ok(()),
            (Automorphism::PolyAffine { .. }, RingDescriptor::IntegerPolynomials { .. }) => Ok(()),
            (Automorphism::PolyAffine { .. }, _) => Err(Error::InvalidAutomorphism {
                ring: ring.clone(),
                reason: "only the identity automorphism exists for this ring".into(),
            }),
        }
    }

    /// Applies the automorphism to a value (`apply_automorphism`).
    pub fn apply(&self, value: &RingValue) -> Result<RingValue> {
        self.validate_for(value.ring())?;
        match self {
            Automorphism::Identity => Ok(value.clone()),
            Automorphism::PolyAffine { negate, shift } => {
                let coeffs = value.as_poly().expect("validated polynomial ring");
                let image = poly::substitute_affine(coeffs, *negate, shift);
                Ok(RingValue {
                    ring: value.ring().clone(),
                    payload: Payload::Poly(image),
                })
            }
        }
    }

    /// Applies the automorphism generator-wise and re-normalizes.
    pub fn apply_ideal(&self, ideal: &Ideal) -> Result<Ideal> {
        let images = ideal
            .generators()
            .iter()
            .map(|g| self.apply(g))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ideal.ring().clone(), images)
    }

    pub fn inverse(&self) -> Automorphism {
        match self {
            Automorphism::Identity => Automorphism::Identity,
            // x -> ex + c inverts to x -> e(x - c) = ex - ec.
            Automorphism::PolyAffine { negate, shift } => Automorphism::PolyAffine {
                negate: *negate,
                shift: if *negate {
                    shift.clone()
                } else {
                    -shift.clone()
                },
            },
        }
    }

    /// `self.compose(other)` applies `other` first, then `self`.
    ///
    /// Substituting `x -> e1*x + c1` into a value already carrying the
    /// substitution `x -> e2*x + c2` rewrites its variable as
    /// `e2*(e1*x + c1) + c2`, so the composite is `x -> (e1*e2)*x +
    /// (e2*c1 + c2)`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        match (self, other) {
            (Automorphism::Identity, a) | (a, Automorphism::Identity) => a.clone(),
            (
                Automorphism::PolyAffine { negate: n1, shift: c1 },
                Automorphism::PolyAffine { negate: n2, shift: c2 },
            ) => Automorphism::PolyAffine {
                negate: n1 ^ n2,
                shift: if *n2 { c2 - c1 } else { c1 + c2 },
            },
        }
    }
}

/// Applies `phi2` to `v`; the operation form of [`Automorphism::apply`].
pub fn apply_automorphism(phi2: &Automorphism, v: &RingValue) -> Result<RingValue> {
    phi2.apply(v)
}

/// Outcome of a decision that may be undecidable over `Z[x]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trivalent {
    True,
    False,
    Unknown,
}

impl Trivalent {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Trivalent::True
        } else {
            Trivalent::False
        }
    }

    pub fn is_true(self) -> bool {
        self == Trivalent::True
    }

    pub fn is_false(self) -> bool {
        self == Trivalent::False
    }

    /// Three-valued conjunction: any False wins, else any Unknown.
    pub fn and(self, other: Trivalent) -> Trivalent {
        match (self, other) {
            (Trivalent::False, _) | (_, Trivalent::False) => Trivalent::False,
            (Trivalent::Unknown, _) | (_, Trivalent::Unknown) => Trivalent::Unknown,
            _ => Trivalent::True,
        }
    }
}

impl fmt::Display for Trivalent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Trivalent::True => write!(f, "true"),
            Trivalent::False => write!(f, "false"),
            Trivalent::Unknown => write!(f, "unknown"),
        }
    }
}
