//! Exact coefficient arithmetic: prime fields F_p and the rationals.
//!
//! The field is a value-level object (`CoeffField`); elements are plain data
//! (`Coeff`) and every operation goes through the field so a single engine
//! serves both coefficient domains.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u64 = 32003;

/// Coefficient domain: a prime field F_p (default p = 32003) or Q.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoeffField {
    Prime { p: u64 },
    Rationals,
}

/// A field element. Prime-field values are reduced representatives in [0, p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coeff {
    Fp(u64),
    Rat(BigRational),
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl CoeffField {
    /// Prime field with modulus `p`. The modulus must be prime and small
    /// enough that products fit in a u64 via u128 intermediates.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 32 {
            return Err(Error::DomainError(format!(
                "modulus {p} too large for overflow-free multiplication"
            )));
        }
        if !is_prime_u64(p) {
            return Err(Error::DomainError(format!("{p} is not prime")));
        }
        Ok(CoeffField::Prime { p })
    }

    pub fn default_prime() -> Self {
        CoeffField::Prime { p: DEFAULT_PRIME }
    }

    pub fn rationals() -> Self {
        CoeffField::Rationals
    }

    pub fn zero(&self) -> Coeff {
        match self {
            CoeffField::Prime { .. } => Coeff::Fp(0),
            CoeffField::Rationals => Coeff::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            CoeffField::Prime { .. } => Coeff::Fp(1),
            CoeffField::Rationals => Coeff::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            CoeffField::Prime { p } => {
                let r = n.rem_euclid(*p as i64) as u64;
                Coeff::Fp(r)
            }
            CoeffField::Rationals => Coeff::Rat(BigRational::from(BigInt::from(n))),
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Fp(x) => *x == 0,
            Coeff::Rat(r) => r.is_zero(),
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoeffField::Prime { p }, Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp((x + y) % p),
            (CoeffField::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            _ => panic!("coefficient kind does not match field"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (CoeffField::Prime { p }, Coeff::Fp(x)) => Coeff::Fp(if *x == 0 { 0 } else { p - x }),
            (CoeffField::Rationals, Coeff::Rat(x)) => Coeff::Rat(-x),
            _ => panic!("coefficient kind does not match field"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoeffField::Prime { p }, Coeff::Fp(x), Coeff::Fp(y)) => {
                Coeff::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (CoeffField::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            _ => panic!("coefficient kind does not match field"),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Result<Coeff> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        match (self, a) {
            (CoeffField::Prime { p }, Coeff::Fp(x)) => {
                // extended Euclid on (x, p)
                let (mut r0, mut r1) = (*x as i128, *p as i128);
                let (mut s0, mut s1) = (1i128, 0i128);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (s0, s1) = (s1, s0 - q * s1);
                }
                debug_assert_eq!(r0, 1, "modulus must be prime");
                Ok(Coeff::Fp(s0.rem_euclid(*p as i128) as u64))
            }
            (CoeffField::Rationals, Coeff::Rat(x)) => Ok(Coeff::Rat(x.recip())),
            _ => panic!("coefficient kind does not match field"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Canonical total order on elements, used only for deterministic sorting.
    pub fn cmp_elems(&self, a: &Coeff, b: &Coeff) -> std::cmp::Ordering {
        match (a, b) {
            (Coeff::Fp(x), Coeff::Fp(y)) => x.cmp(y),
            (Coeff::Rat(x), Coeff::Rat(y)) => x.cmp(y),
            _ => panic!("coefficient kind does not match field"),
        }
    }

    /// Render a coefficient in the instance-file syntax (integers, or a
    /// rational `a/b`).
    pub fn render(&self, a: &Coeff) -> String {
        match a {
            Coeff::Fp(x) => x.to_string(),
            Coeff::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
        }
    }

    /// True when the coefficient prints as a plain negative integer; used by
    /// the canonical printer to fold signs into `-` separators.
    pub fn is_display_negative(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Fp(_) => false,
            Coeff::Rat(r) => r.is_negative(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inv_one_is_one() {
        let f = CoeffField::default_prime();
        assert_eq!(f.inv(&f.one()).unwrap(), f.one());
    }

    #[test]
    fn inv_two_in_f7_matches_brute_force() {
        let f = CoeffField::prime(7).unwrap();
        let two = f.from_i64(2);
        // independent oracle: scan all 7 residues for 2*r = 1
        let mut expected = None;
        for r in 0..7u64 {
            if (2 * r) % 7 == 1 {
                expected = Some(r);
            }
        }
        assert_eq!(expected, Some(4));
        assert_eq!(f.inv(&two).unwrap(), Coeff::Fp(4));
    }

    #[test]
    fn add_neg_is_zero() {
        let f = CoeffField::default_prime();
        for n in [0i64, 1, 2, 17, -5, 31999, 123456] {
            let a = f.from_i64(n);
            assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
        }
        let q = CoeffField::rationals();
        let a = q.from_i64(-37);
        assert!(q.is_zero(&q.add(&a, &q.neg(&a))));
    }

    #[test]
    fn inv_involutive_on_random_elements() {
        let f = CoeffField::default_prime();
        for n in 1..200i64 {
            let a = f.from_i64(n * 977 + 3);
            if f.is_zero(&a) {
                continue;
            }
            let inv = f.inv(&a).unwrap();
            assert_eq!(f.inv(&inv).unwrap(), a);
            assert_eq!(f.mul(&a, &inv), f.one());
        }
    }

    #[test]
    fn inversion_of_zero_fails() {
        let f = CoeffField::default_prime();
        assert!(matches!(f.inv(&f.zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(CoeffField::prime(32001).is_err());
        assert!(CoeffField::prime(32003).is_ok());
    }
}
