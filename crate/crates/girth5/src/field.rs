//! Exact arithmetic in GF(p^m) for the small field orders the constructions
//! need (q <= a few thousand).
//!
//! Elements are canonical codes `0..q`: the code of a polynomial
//! `c_0 + c_1 x + ... + c_{m-1} x^{m-1}` is `sum p^i * c_i`, which for `p = 2`
//! is the usual bit packing. The reduction modulus is chosen deterministically
//! (lexicographically smallest monic irreducible, constant coefficient
//! compared first), so element enumeration, primitive elements and discrete
//! logs are identical across runs.

use crate::group::Group;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NonPrime(u64),
    #[error("extension degree must be at least 1")]
    BadDegree,
    #[error("field order {p}^{m} exceeds the supported range")]
    TooLarge { p: u64, m: u32 },
    #[error("zero has no multiplicative inverse")]
    InverseOfZero,
    #[error("discrete log of zero is undefined")]
    DlogOfZero,
    #[error("element {0} is not a primitive element")]
    NotPrimitive(u64),
}

const MAX_ORDER: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    p: u64,
    m: u32,
    q: u64,
    /// Monic modulus, coefficients low degree first, length m+1. Unused for m = 1.
    modulus: Vec<u64>,
    primitive: u64,
    /// dlog_table[a] = e with primitive^e = a, for a in 1..q.
    dlog_table: Vec<u64>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns (p, m) with n = p^m when n is a prime power, else None.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut m = 0;
            let mut rest = n;
            while rest.is_multiple_of(p) {
                rest /= p;
                m += 1;
            }
            return if rest == 1 { Some((p, m)) } else { None };
        }
        p += 1;
    }
    Some((n, 1))
}

impl Field {
    /// Builds GF(p^m) with the canonical modulus.
    pub fn new(p: u64, m: u32) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrime(p));
        }
        if m < 1 {
            return Err(FieldError::BadDegree);
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(FieldError::TooLarge { p, m })?;
        let modulus = smallest_irreducible(p, m);
        let mut field = Field {
            p,
            m,
            q,
            modulus,
            primitive: 0,
            dlog_table: Vec::new(),
        };
        field.primitive = field.find_primitive();
        field.dlog_table = field.build_dlog_table();
        Ok(field)
    }

    /// Builds the field of order q (any prime power).
    pub fn of_order(q: u64) -> Result<Field, FieldError> {
        let (p, m) = prime_power(q).ok_or(FieldError::NonPrime(q))?;
        Field::new(p, m)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The additive group (F_q, +) on canonical codes.
    pub fn additive_group(&self) -> Group {
        Group::elem_abelian(self.p, self.m)
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.q
    }

    pub fn coeffs(&self, a: u64) -> Vec<u64> {
        debug_assert!(a < self.q);
        let mut out = Vec::with_capacity(self.m as usize);
        let mut x = a;
        for _ in 0..self.m {
            out.push(x % self.p);
            x /= self.p;
        }
        out
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> u64 {
        let mut out = 0;
        for &c in coeffs.iter().rev() {
            out = out * self.p + c % self.p;
        }
        out
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.m == 1 {
            (a + b) % self.p
        } else {
            self.additive_group().add(a, b)
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.m == 1 {
            (self.p - a % self.p) % self.p
        } else {
            self.additive_group().neg(a)
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.q && b < self.q);
        if self.m == 1 {
            return a * b % self.p;
        }
        let x = self.coeffs(a);
        let y = self.coeffs(b);
        let mut prod = vec![0u64; 2 * self.m as usize - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi * yj) % self.p;
            }
        }
        poly_rem(&mut prod, &self.modulus, self.p);
        self.from_coeffs(&prod)
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        let mut result = 1 % self.q;
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn inv(&self, a: u64) -> Result<u64, FieldError> {
        if a == 0 {
            return Err(FieldError::InverseOfZero);
        }
        // q is tiny, so Fermat is plenty.
        Ok(self.pow(a, self.q - 2))
    }

    pub fn div(&self, a: u64, b: u64) -> Result<u64, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    fn multiplicative_order(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        let mut x = a;
        let mut ord = 1;
        while x != 1 {
            x = self.mul(x, a);
            ord += 1;
        }
        ord
    }

    fn find_primitive(&self) -> u64 {
        for a in 1..self.q {
            if self.multiplicative_order(a) == self.q - 1 {
                return a;
            }
        }
        unreachable!("GF(q)* is cyclic, a generator always exists");
    }

    fn build_dlog_table(&self) -> Vec<u64> {
        let mut table = vec![0u64; self.q as usize];
        let mut x = 1;
        for e in 0..self.q - 1 {
            table[x as usize] = e;
            x = self.mul(x, self.primitive);
        }
        table
    }

    /// First element in canonical enumeration order whose multiplicative
    /// order is q - 1. For GF(2) this is 1 (the trivial group's generator).
    pub fn primitive_element(&self) -> u64 {
        self.primitive
    }

    /// Discrete log base the canonical primitive element (table lookup).
    pub fn dlog(&self, a: u64) -> Result<u64, FieldError> {
        if a == 0 {
            return Err(FieldError::DlogOfZero);
        }
        Ok(self.dlog_table[a as usize])
    }

    /// Discrete log to an arbitrary primitive base: smallest e >= 0 with
    /// base^e = a.
    pub fn dlog_base(&self, base: u64, a: u64) -> Result<u64, FieldError> {
        if a == 0 {
            return Err(FieldError::DlogOfZero);
        }
        if base == 0 || self.multiplicative_order(base) != self.q - 1 {
            return Err(FieldError::NotPrimitive(base));
        }
        let mut x = 1;
        for e in 0..self.q - 1 {
            if x == a {
                return Ok(e);
            }
            x = self.mul(x, base);
        }
        unreachable!("powers of a primitive element cover GF(q)*");
    }
}

/// Remainder of `poly` (low degree first) modulo the monic `modulus`, in place;
/// truncates to deg(modulus) coefficients.
fn poly_rem(poly: &mut Vec<u64>, modulus: &[u64], p: u64) {
    let m = modulus.len() - 1;
    while poly.len() > m {
        let lead = *poly.last().unwrap() % p;
        let shift = poly.len() - 1 - m;
        if lead != 0 {
            for (i, &c) in modulus.iter().enumerate() {
                let idx = shift + i;
                poly[idx] = (poly[idx] + (p - lead % p) * c) % p;
            }
        }
        poly.pop();
    }
    poly.resize(m, 0);
}

/// Polynomial codes: a monic degree-d polynomial is stored as its coefficient
/// vector (c_0..c_{d-1}) plus implicit leading 1.
fn poly_is_divisible(poly: &[u64], divisor: &[u64], p: u64) -> bool {
    let mut rem: Vec<u64> = poly.to_vec();
    poly_rem(&mut rem, divisor, p);
    rem.iter().all(|&c| c == 0)
}

fn irreducible(coeffs: &[u64], m: u32, p: u64) -> bool {
    // Constant term zero means divisible by x.
    if coeffs[0] == 0 {
        return false;
    }
    let mut full: Vec<u64> = coeffs.to_vec();
    full.push(1);
    // Trial division by every monic polynomial of degree 1..=m/2.
    for d in 1..=(m / 2).max(1).min(m - 1) {
        let count = p.pow(d);
        for code in 0..count {
            let mut divisor = Vec::with_capacity(d as usize + 1);
            let mut x = code;
            for _ in 0..d {
                divisor.push(x % p);
                x /= p;
            }
            divisor.push(1);
            if poly_is_divisible(&full, &divisor, p) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree m over Z_p, with
/// coefficient vectors compared constant term first.
fn smallest_irreducible(p: u64, m: u32) -> Vec<u64> {
    if m == 1 {
        // x; arithmetic never consults it for prime fields.
        return vec![0, 1];
    }
    let mut coeffs = vec![0u64; m as usize];
    loop {
        if irreducible(&coeffs, m, p) {
            let mut out = coeffs.clone();
            out.push(1);
            return out;
        }
        // Increment the coefficient vector in lexicographic order: the
        // constant term is the most significant position.
        let mut i = m as usize - 1;
        loop {
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            assert!(i > 0, "no irreducible polynomial found, impossible");
            i -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli() {
        // x^2 + x + 1 is the unique monic irreducible quadratic over GF(2).
        assert_eq!(Field::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        // Root exhaustion: x^2 + 1 has no root mod 7, and nothing smaller works.
        let f72 = Field::new(7, 2).unwrap();
        assert_eq!(f72.modulus(), &[1, 0, 1]);
        for a in 0..7 {
            assert_ne!((a * a + 1) % 7, 0, "x^2+1 must have no root in Z_7");
        }
        assert_eq!(Field::new(2, 4).unwrap().modulus(), &[1, 0, 0, 1, 1]);
        assert_eq!(Field::new(2, 5).unwrap().modulus(), &[1, 0, 0, 1, 0, 1]);
        assert_eq!(Field::new(2, 6).unwrap().modulus(), &[1, 0, 0, 0, 0, 1, 1]);
    }

    #[test]
    fn make_field_is_deterministic() {
        for &(p, m) in &[(2, 4), (7, 2), (3, 2), (19, 1)] {
            assert_eq!(Field::new(p, m).unwrap(), Field::new(p, m).unwrap());
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(Field::new(6, 1).unwrap_err(), FieldError::NonPrime(6));
        assert_eq!(Field::new(7, 0).unwrap_err(), FieldError::BadDegree);
    }

    #[test]
    fn gf7_inverse_by_exhaustion() {
        let f = Field::new(7, 1).unwrap();
        assert_eq!(f.inv(3).unwrap(), 5);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(0).unwrap_err(), FieldError::InverseOfZero);
    }

    #[test]
    fn gf4_multiplication() {
        // With modulus x^2 + x + 1: x * x = x + 1, i.e. code 2 * 2 = 3.
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.mul(2, 2), 3);
    }

    #[test]
    fn additive_inverse_law() {
        for &(p, m) in &[(2, 4), (7, 2), (17, 1)] {
            let f = Field::new(p, m).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
            }
        }
    }

    #[test]
    fn primitive_elements() {
        // Orders of 1..6 mod 7 by exhaustion; 3 is the first of order 6.
        assert_eq!(Field::new(7, 1).unwrap().primitive_element(), 3);
        // x (code 2) has order 3 in GF(4)*.
        assert_eq!(Field::new(2, 2).unwrap().primitive_element(), 2);
        // GF(2): the trivial multiplicative group is generated by 1.
        assert_eq!(Field::new(2, 1).unwrap().primitive_element(), 1);
    }

    #[test]
    fn dlog_gf7() {
        let f = Field::new(7, 1).unwrap();
        assert_eq!(f.dlog(1).unwrap(), 0);
        assert_eq!(f.dlog(2).unwrap(), 2); // 3^2 = 9 = 2 mod 7
        assert_eq!(f.dlog(3).unwrap(), 1);
        assert_eq!(f.dlog(0).unwrap_err(), FieldError::DlogOfZero);
        assert_eq!(f.dlog_base(2, 5).unwrap_err(), FieldError::NotPrimitive(2));
        assert_eq!(f.dlog_base(3, 2).unwrap(), 2);
    }

    #[test]
    fn field_axioms_on_catalog_orders() {
        for q in [
            16u64, 17, 19, 29, 31, 32, 37, 41, 43, 47, 49, 53, 59, 61, 64, 67, 71, 73, 79,
        ] {
            let f = Field::of_order(q).unwrap();
            assert_eq!(f.order(), q);
            for a in f.elements() {
                // Frobenius/Fermat: a^q = a.
                assert_eq!(f.pow(a, q), a, "a^q != a for a={a} in GF({q})");
                if a != 0 {
                    let inv = f.inv(a).unwrap();
                    assert_eq!(f.mul(a, inv), 1, "a*a^-1 != 1 for a={a} in GF({q})");
                }
            }
            // dlog of exponentiation is the identity on Z_{q-1}.
            let g = f.primitive_element();
            for e in 0..q - 1 {
                assert_eq!(f.dlog(f.pow(g, e)).unwrap(), e);
            }
        }
    }

    #[test]
    fn coeff_roundtrip() {
        let f = Field::new(7, 2).unwrap();
        for a in f.elements() {
            assert_eq!(f.from_coeffs(&f.coeffs(a)), a);
        }
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(64), Some((2, 6)));
        assert_eq!(prime_power(53), Some((53, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
