//! Exact coefficient arithmetic: prime fields F_p and arbitrary-precision
//! rationals, plus univariate polynomials in a formal parameter t.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Coefficient field descriptor. The default prime is 32003.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(u64),
    Rational,
}

pub const DEFAULT_PRIME: u64 = 32003;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut f = 3u64;
    while f * f <= n {
        if n % f == 0 {
            return false;
        }
        f += 2;
    }
    true
}

/// An element of the coefficient field. F_p elements are canonical
/// representatives in [0, p); rationals are kept in lowest terms with a
/// positive denominator (num-rational maintains this).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Fp(u64),
    Rat(BigRational),
}

impl FieldSpec {
    /// Validated prime-field constructor.
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::InvalidField(p))
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            FieldSpec::Prime(_) => Coeff::Fp(0),
            FieldSpec::Rational => Coeff::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            FieldSpec::Prime(_) => Coeff::Fp(1),
            FieldSpec::Rational => Coeff::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            FieldSpec::Prime(p) => {
                let r = n.rem_euclid(*p as i64);
                Coeff::Fp(r as u64)
            }
            FieldSpec::Rational => Coeff::Rat(BigRational::from_integer(BigInt::from(n))),
        }
    }

    pub fn from_fraction(&self, num: i64, den: i64) -> Result<Coeff> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        match self {
            FieldSpec::Prime(_) => {
                let d = self.from_i64(den);
                let inv = self.inv(&d)?;
                Ok(self.mul(&self.from_i64(num), &inv))
            }
            FieldSpec::Rational => Ok(Coeff::Rat(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldSpec::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => {
                Coeff::Fp(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            (FieldSpec::Rational, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            _ => panic!("coefficient does not match field descriptor"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (FieldSpec::Prime(p), Coeff::Fp(x)) => Coeff::Fp(if *x == 0 { 0 } else { p - x }),
            (FieldSpec::Rational, Coeff::Rat(x)) => Coeff::Rat(-x),
            _ => panic!("coefficient does not match field descriptor"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldSpec::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => {
                Coeff::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (FieldSpec::Rational, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            _ => panic!("coefficient does not match field descriptor"),
        }
    }

    /// Multiplicative inverse by extended Euclid (F_p) or reciprocal (Q).
    pub fn inv(&self, a: &Coeff) -> Result<Coeff> {
        match (self, a) {
            (FieldSpec::Prime(p), Coeff::Fp(x)) => {
                if *x == 0 {
                    return Err(Error::DivisionByZero);
                }
                let (g, s, _) = ext_gcd(*x as i128, *p as i128);
                if g != 1 {
                    return Err(Error::InvalidField(*p));
                }
                Ok(Coeff::Fp(s.rem_euclid(*p as i128) as u64))
            }
            (FieldSpec::Rational, Coeff::Rat(x)) => {
                if x.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Coeff::Rat(x.recip()))
            }
            _ => panic!("coefficient does not match field descriptor"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Fp(x) => *x == 0,
            Coeff::Rat(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Fp(x) => *x == 1,
            Coeff::Rat(x) => x.is_one(),
        }
    }

    /// Uniform random element (zero allowed).
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Coeff {
        match self {
            FieldSpec::Prime(p) => Coeff::Fp(rng.gen_range(0..*p)),
            // small integers keep rational runs tractable
            FieldSpec::Rational => Coeff::Rat(BigRational::from_integer(BigInt::from(
                rng.gen_range(-50i64..=50),
            ))),
        }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Coeff {
        loop {
            let c = self.random(rng);
            if !self.is_zero(&c) {
                return c;
            }
        }
    }

    /// Canonical text form: decimal integer for F_p, `n` or `n/d` for Q.
    pub fn format(&self, a: &Coeff) -> String {
        match a {
            Coeff::Fp(x) => x.to_string(),
            Coeff::Rat(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
        }
    }

    /// True when the canonical sign is negative (only meaningful over Q).
    pub fn is_negative(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Fp(_) => false,
            Coeff::Rat(x) => x.is_negative(),
        }
    }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, s, t) = ext_gcd(b, a % b);
        (g, t, s - (a / b) * t)
    }
}

/// Univariate polynomial in a formal parameter t over the coefficient field.
/// Trailing zero coefficients are stripped; zero is the empty sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TParamPoly {
    field: FieldSpec,
    coeffs: Vec<Coeff>,
}

impl TParamPoly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Coeff>) -> TParamPoly {
        while coeffs.last().map_or(false, |c| field.is_zero(c)) {
            coeffs.pop();
        }
        TParamPoly { field, coeffs }
    }

    pub fn zero(field: FieldSpec) -> TParamPoly {
        TParamPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(field: FieldSpec, c: Coeff) -> TParamPoly {
        TParamPoly::new(field, vec![c])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Coeff {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn add(&self, other: &TParamPoly) -> Result<TParamPoly> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.field.add(&self.coeff(i), &other.coeff(i)));
        }
        Ok(TParamPoly::new(self.field, out))
    }

    /// Convolution product.
    pub fn mul(&self, other: &TParamPoly) -> Result<TParamPoly> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(TParamPoly::zero(self.field));
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let p = self.field.mul(a, b);
                out[i + j] = self.field.add(&out[i + j], &p);
            }
        }
        Ok(TParamPoly::new(self.field, out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_examples() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.inv(&Coeff::Fp(1)).unwrap(), Coeff::Fp(1));
        assert_eq!(f5.inv(&Coeff::Fp(2)).unwrap(), Coeff::Fp(3));
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.inv(&Coeff::Fp(3)).unwrap(), Coeff::Fp(5));
        let q = FieldSpec::Rational;
        assert_eq!(q.inv(&q.one()).unwrap(), q.one());
    }

    #[test]
    fn inverse_of_zero_fails() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert!(matches!(
            f5.inv(&Coeff::Fp(0)),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(matches!(FieldSpec::prime(6), Err(Error::InvalidField(6))));
        assert!(matches!(FieldSpec::prime(1), Err(Error::InvalidField(1))));
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(DEFAULT_PRIME).is_ok());
    }

    #[test]
    fn tpoly_mul_examples() {
        let q = FieldSpec::Rational;
        // (1 + t)(1 - t) = 1 - t^2
        let a = TParamPoly::new(q, vec![q.one(), q.one()]);
        let b = TParamPoly::new(q, vec![q.one(), q.from_i64(-1)]);
        let prod = a.mul(&b).unwrap();
        assert_eq!(
            prod,
            TParamPoly::new(q, vec![q.one(), q.zero(), q.from_i64(-1)])
        );
        // f * 0 = 0
        assert!(a.mul(&TParamPoly::zero(q)).unwrap().is_zero());
        // (2 + t)(3 + t) = 1 + t^2 in F_5
        let f5 = FieldSpec::prime(5).unwrap();
        let a = TParamPoly::new(f5, vec![Coeff::Fp(2), Coeff::Fp(1)]);
        let b = TParamPoly::new(f5, vec![Coeff::Fp(3), Coeff::Fp(1)]);
        assert_eq!(
            a.mul(&b).unwrap(),
            TParamPoly::new(f5, vec![Coeff::Fp(1), Coeff::Fp(0), Coeff::Fp(1)])
        );
    }

    #[test]
    fn tpoly_field_mismatch() {
        let a = TParamPoly::constant(FieldSpec::Rational, FieldSpec::Rational.one());
        let f5 = FieldSpec::prime(5).unwrap();
        let b = TParamPoly::constant(f5, f5.one());
        assert!(matches!(a.mul(&b), Err(Error::FieldMismatch)));
    }

    #[test]
    fn trailing_zeros_stripped() {
        let f5 = FieldSpec::prime(5).unwrap();
        let p = TParamPoly::new(f5, vec![Coeff::Fp(0), Coeff::Fp(0)]);
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
    }
}
