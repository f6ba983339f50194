//! Raw arithmetic on integer polynomials.
//!
//! Polynomials are coefficient vectors in ascending power order with no
//! trailing zero; the zero polynomial is the empty vector. Everything here
//! works on that canonical form and returns it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Drops trailing zero coefficients in place.
pub fn trim(coeffs: &mut Vec<BigInt>) {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
}

pub fn canonical(mut coeffs: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut coeffs);
    coeffs
}

pub fn is_zero(p: &[BigInt]) -> bool {
    p.is_empty()
}

/// Degree of a nonzero polynomial; `None` for the zero polynomial.
pub fn degree(p: &[BigInt]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn leading(p: &[BigInt]) -> Option<&BigInt> {
    p.last()
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    canonical(out)
}

pub fn neg(a: &[BigInt]) -> Vec<BigInt> {
    a.iter().map(|c| -c).collect()
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    add(a, &neg(b))
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    canonical(out)
}

pub fn scale(a: &[BigInt], k: &BigInt) -> Vec<BigInt> {
    canonical(a.iter().map(|c| c * k).collect())
}

pub fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Nonnegative gcd of all coefficients; zero for the zero polynomial.
pub fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

pub fn primitive_part(p: &[BigInt]) -> Vec<BigInt> {
    let c = content(p);
    if c.is_zero() || c.is_one() {
        return p.to_vec();
    }
    p.iter().map(|x| x / &c).collect()
}

/// Flips the sign so the leading coefficient is positive.
pub fn normalize_sign(p: &[BigInt]) -> Vec<BigInt> {
    match leading(p) {
        Some(l) if l.is_negative() => neg(p),
        _ => p.to_vec(),
    }
}

/// Pseudo-remainder of `a` by nonzero `b`: repeatedly kills the leading
/// term of `lc(b)·a` until the degree drops below `deg b`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = degree(b).expect("pseudo_rem by zero polynomial");
    let lb = leading(b).unwrap().clone();
    let mut r = a.to_vec();
    while degree(&r).is_some_and(|dr| dr >= db) {
        let dr = degree(&r).unwrap();
        let lr = leading(&r).unwrap().clone();
        r = scale(&r, &lb);
        let mut shifted = vec![BigInt::zero(); dr - db];
        shifted.extend(scale(b, &lr));
        r = sub(&r, &shifted);
    }
    r
}

/// Gcd in `Z[x]` (unique-factorization sense): gcd of contents times the
/// primitive gcd, with positive leading coefficient.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if is_zero(a) {
        return normalize_sign(b);
    }
    if is_zero(b) {
        return normalize_sign(a);
    }
    let c = content(a).gcd(&content(b));
    let mut p = primitive_part(a);
    let mut q = primitive_part(b);
    while !is_zero(&q) {
        let r = primitive_part(&pseudo_rem(&p, &q));
        p = q;
        q = r;
    }
    normalize_sign(&scale(&p, &c))
}

/// Exact division in `Z[x]`; `None` if `b` does not divide `a` exactly.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if is_zero(b) {
        return is_zero(a).then(Vec::new);
    }
    if is_zero(a) {
        return Some(Vec::new());
    }
    let db = degree(b).unwrap();
    let lb = leading(b).unwrap();
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len()];
    while let Some(dr) = degree(&r) {
        if dr < db {
            return None;
        }
        let (coeff, rem) = leading(&r).unwrap().div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        q[dr - db] = coeff.clone();
        let mut shifted = vec![BigInt::zero(); dr - db];
        shifted.extend(scale(b, &coeff));
        r = sub(&r, &shifted);
    }
    Some(canonical(q))
}

/// Least common multiple with positive leading coefficient.
pub fn lcm(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if is_zero(a) || is_zero(b) {
        return Vec::new();
    }
    let g = gcd(a, b);
    let quotient = div_exact(a, &g).expect("gcd divides its arguments");
    normalize_sign(&mul(&quotient, b))
}

/// Substitutes `x -> epsilon*x + shift` (`epsilon` is +1 or -1) via Horner.
pub fn substitute_affine(p: &[BigInt], negate: bool, shift: &BigInt) -> Vec<BigInt> {
    let image = vec![
        shift.clone(),
        if negate { -BigInt::one() } else { BigInt::one() },
    ];
    let mut acc: Vec<BigInt> = Vec::new();
    for c in p.iter().rev() {
        acc = mul(&acc, &image);
        acc = add(&acc, std::slice::from_ref(c));
    }
    acc
}

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x] for small primes, used by non-membership certificates.
// Coefficients are residues in [0, p).

pub fn reduce_mod_p(p: &[BigInt], prime: u64) -> Vec<u64> {
    let q = BigInt::from(prime);
    let mut out: Vec<u64> = p
        .iter()
        .map(|c| {
            let r = c.mod_floor(&q);
            u64::try_from(r).expect("residue fits in u64")
        })
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn fp_inv(a: u64, prime: u64) -> u64 {
    // Fermat: prime is prime and a != 0 mod prime.
    let mut base = a % prime;
    let mut exp = prime - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % prime;
        }
        base = base * base % prime;
        exp >>= 1;
    }
    acc
}

fn fp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Remainder of `a` by nonzero `b` in F_p[x].
fn fp_rem(a: &[u64], b: &[u64], prime: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let inv_lb = fp_inv(b[db], prime);
    let mut r = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = r[dr] * inv_lb % prime;
        if factor != 0 {
            for (i, &bc) in b.iter().enumerate() {
                let idx = dr - db + i;
                r[idx] = (r[idx] + prime - factor * bc % prime) % prime;
            }
        }
        r.pop();
        fp_trim(&mut r);
        if r.len() <= db {
            break;
        }
    }
    fp_trim(&mut r);
    r
}

/// Monic gcd in F_p[x]; empty vector for gcd(0, 0).
pub fn fp_gcd(a: &[u64], b: &[u64], prime: u64) -> Vec<u64> {
    let mut p = a.to_vec();
    let mut q = b.to_vec();
    fp_trim(&mut p);
    fp_trim(&mut q);
    while !q.is_empty() {
        let r = fp_rem(&p, &q, prime);
        p = q;
        q = r;
    }
    if let Some(&lead) = p.last() {
        let inv = fp_inv(lead, prime);
        for c in &mut p {
            *c = *c * inv % prime;
        }
    }
    p
}

pub fn fp_divides(divisor: &[u64], target: &[u64], prime: u64) -> bool {
    let mut t = target.to_vec();
    fp_trim(&mut t);
    if t.is_empty() {
        return true;
    }
    if divisor.is_empty() {
        return false;
    }
    fp_rem(&t, divisor, prime).is_empty()
}
