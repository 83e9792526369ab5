//! Exact coefficient fields: arbitrary-precision rationals and prime fields.
//!
//! Every algorithm in this crate is generic over [`Field`]. A field value is a
//! descriptor (the rationals carry no data, a prime field carries its modulus)
//! and elements are plain data manipulated through the descriptor. No floating
//! point is used anywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use serde::Serialize;
use std::fmt;

/// Runtime description of a coefficient field, as written in input files.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldSpec {
    Rationals,
    PrimeField { characteristic: u64 },
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField { characteristic } => *characteristic,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField { characteristic } => write!(f, "F{characteristic}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("denominator vanishes in characteristic {0}")]
    ZeroDenominator(u64),
    #[error("invalid integer literal `{0}`")]
    BadLiteral(String),
}

/// An exact field of scalars. Implementations are small descriptor values;
/// all arithmetic goes through the descriptor so the prime-field modulus can
/// be runtime data.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn characteristic(&self) -> u64 {
        self.spec().characteristic()
    }

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse. Panics on zero; callers guard.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn from_int(&self, n: i64) -> Self::Elem;

    /// Parse a decimal digit string (no sign).
    fn from_decimal(&self, digits: &str) -> Result<Self::Elem, FieldError>;

    /// `num / den` from digit strings; fails when the denominator vanishes
    /// (zero over Q, divisible by p over F_p).
    fn from_decimal_ratio(&self, num: &str, den: &str) -> Result<Self::Elem, FieldError> {
        let n = self.from_decimal(num)?;
        let d = self.from_decimal(den)?;
        if self.is_zero(&d) {
            return Err(FieldError::ZeroDenominator(self.characteristic()));
        }
        Ok(self.div(&n, &d))
    }

    /// True when the scalar, rendered, needs a leading minus sign.
    fn is_negative(&self, a: &Self::Elem) -> bool;

    fn render(&self, a: &Self::Elem) -> String;

    /// Rescale a nonempty coefficient vector to its canonical representative:
    /// primitive integers with positive first entry over Q, monic (first entry
    /// one) over F_p. Used to keep Buchberger intermediates small.
    fn normalize_content(&self, coeffs: &mut [Self::Elem]);
}

/// The field of rational numbers with arbitrary-precision arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }

    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_decimal(&self, digits: &str) -> Result<BigRational, FieldError> {
        let n: BigInt = digits
            .parse()
            .map_err(|_| FieldError::BadLiteral(digits.to_string()))?;
        Ok(BigRational::from_integer(n))
    }

    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }

    fn render(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn normalize_content(&self, coeffs: &mut [BigRational]) {
        if coeffs.is_empty() {
            return;
        }
        let mut den_lcm = BigInt::one();
        for c in coeffs.iter() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in coeffs.iter() {
            num_gcd = num_gcd.gcd(&(c.numer() * &den_lcm / c.denom()));
        }
        if num_gcd.is_zero() {
            return;
        }
        let mut scale = BigRational::new(den_lcm, num_gcd);
        if (coeffs[0].clone() * &scale).is_negative() {
            scale = -scale;
        }
        for c in coeffs.iter_mut() {
            *c *= &scale;
        }
    }
}

/// The prime field F_p for a machine-word prime p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_i64(&self, n: i64) -> u64 {
        let p = self.p as i64;
        (n.rem_euclid(p)) as u64
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::PrimeField {
            characteristic: self.p,
        }
    }

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u64) -> bool {
        *a == 1 % self.p
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (*a as i128, self.p as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        (s0.rem_euclid(self.p as i128)) as u64
    }

    fn from_int(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }

    fn from_decimal(&self, digits: &str) -> Result<u64, FieldError> {
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(FieldError::BadLiteral(digits.to_string()));
        }
        let mut acc: u64 = 0;
        for b in digits.bytes() {
            acc = self.add(
                &self.mul(&acc, &(10 % self.p)),
                &((b - b'0') as u64 % self.p),
            );
        }
        Ok(acc)
    }

    fn is_negative(&self, _a: &u64) -> bool {
        false
    }

    fn render(&self, a: &u64) -> String {
        a.to_string()
    }

    fn normalize_content(&self, coeffs: &mut [u64]) {
        if let Some(lead) = coeffs.first().copied() {
            if lead == 0 || lead == 1 {
                return;
            }
            let inv = self.inv(&lead);
            for c in coeffs.iter_mut() {
                *c = self.mul(c, &inv);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_construction() {
        assert!(PrimeField::new(7).is_ok());
        assert!(PrimeField::new(2).is_ok());
        assert_eq!(PrimeField::new(6), Err(FieldError::NotPrime(6)));
        assert_eq!(PrimeField::new(1), Err(FieldError::NotPrime(1)));
        assert_eq!(PrimeField::new(0), Err(FieldError::NotPrime(0)));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.add(&5, &4), 2);
        assert_eq!(f7.sub(&2, &5), 4);
        assert_eq!(f7.neg(&3), 4);
        assert_eq!(f7.mul(&4, &5), 6);
        for a in 1..7 {
            assert_eq!(f7.mul(&a, &f7.inv(&a)), 1);
        }
        assert_eq!(f7.from_int(-1), 6);
        assert_eq!(f7.from_decimal("100").unwrap(), 2);
    }

    #[test]
    fn rationals_arithmetic_and_render() {
        let q = Rationals;
        let half = q.from_decimal_ratio("1", "2").unwrap();
        let third = q.from_decimal_ratio("1", "3").unwrap();
        let sum = q.add(&half, &third);
        assert_eq!(q.render(&sum), "5/6");
        assert_eq!(q.render(&q.from_int(-4)), "-4");
        assert!(q.is_negative(&q.from_int(-4)));
    }

    #[test]
    fn characteristic_invalid_literal() {
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(
            f2.from_decimal_ratio("1", "2"),
            Err(FieldError::ZeroDenominator(2))
        );
        let q = Rationals;
        assert_eq!(
            q.from_decimal_ratio("1", "0"),
            Err(FieldError::ZeroDenominator(0))
        );
    }

    #[test]
    fn content_normalization_over_q() {
        let q = Rationals;
        let mut v = vec![
            q.from_decimal_ratio("4", "3").unwrap(),
            q.from_int(-2),
            q.from_decimal_ratio("2", "9").unwrap(),
        ];
        q.normalize_content(&mut v);
        // scaled by 9/2: [6, -9, 1]
        assert_eq!(q.render(&v[0]), "6");
        assert_eq!(q.render(&v[1]), "-9");
        assert_eq!(q.render(&v[2]), "1");
        // sign flips so the first entry is positive
        let mut w = vec![q.from_int(-2), q.from_int(4)];
        q.normalize_content(&mut w);
        assert_eq!(q.render(&w[0]), "1");
        assert_eq!(q.render(&w[1]), "-2");
    }

    #[test]
    fn content_normalization_over_fp() {
        let f7 = PrimeField::new(7).unwrap();
        let mut v = vec![3u64, 5, 1];
        f7.normalize_content(&mut v);
        assert_eq!(v[0], 1);
        assert_eq!(v, vec![1, 4, 5]);
    }
}
