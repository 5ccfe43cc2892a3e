//! Coefficients of the form `num / (1+y)^k`.
//!
//! The `td_{(1+y)}` normalization divides the homology degree-k part of a
//! class by `(1+y)^k`. Tracking the denominator exponent structurally (rather
//! than computing in a localized ring) turns polynomiality of the final
//! classes into a checkable postcondition: `clear_denominator` either
//! certifies that the denominator cancelled or reports `NotPolynomial`.
//!
//! Canonical form: either `denom_pow = 0` or `(1+y)` does not divide `num`.
//! Canonical forms are unique, so structural equality is value equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::{rat_int, Rat};
use crate::ypoly::YPoly;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormCoeff {
    num: YPoly,
    denom_pow: u32,
}

impl NormCoeff {
    pub fn new(num: YPoly, denom_pow: u32) -> Self {
        let mut c = NormCoeff { num, denom_pow };
        c.canonicalize();
        c
    }

    pub fn zero() -> Self {
        NormCoeff { num: YPoly::zero(), denom_pow: 0 }
    }

    pub fn one() -> Self {
        NormCoeff { num: YPoly::one(), denom_pow: 0 }
    }

    pub fn from_poly(num: YPoly) -> Self {
        NormCoeff { num, denom_pow: 0 }
    }

    pub fn from_rat(c: Rat) -> Self {
        Self::from_poly(YPoly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_rat(rat_int(c))
    }

    /// `1 / (1+y)^k`.
    pub fn one_plus_y_inv_pow(k: u32) -> Self {
        NormCoeff { num: YPoly::one(), denom_pow: k }
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.denom_pow = 0;
            return;
        }
        while self.denom_pow > 0 {
            match self.num.div_one_plus_y() {
                Some(q) => {
                    self.num = q;
                    self.denom_pow -= 1;
                }
                None => break,
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &YPoly {
        &self.num
    }

    pub fn denom_pow(&self) -> u32 {
        self.denom_pow
    }

    /// Multiply by `(1+y)^k` for a signed `k` (negative k deepens the
    /// denominator).
    pub fn mul_one_plus_y_pow(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        if k >= 0 {
            let k = k as u32;
            if k <= self.denom_pow {
                // still canonical: num stays untouched
                NormCoeff { num: self.num.clone(), denom_pow: self.denom_pow - k }
            } else {
                let extra = (k - self.denom_pow) as usize;
                NormCoeff {
                    num: &self.num * &YPoly::one_plus_y_pow(extra),
                    denom_pow: 0,
                }
            }
        } else {
            Self::new(self.num.clone(), self.denom_pow + (-k) as u32)
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.num.scale(c), self.denom_pow)
    }

    pub fn mul_poly(&self, p: &YPoly) -> Self {
        Self::new(&self.num * p, self.denom_pow)
    }

    /// Certify that the value is an honest polynomial and return it.
    pub fn clear_denominator(&self) -> Result<YPoly> {
        if self.denom_pow == 0 {
            Ok(self.num.clone())
        } else {
            Err(Error::NotPolynomial {
                num: self.num.clone(),
                denom_pow: self.denom_pow,
            })
        }
    }

    /// Inverse of a unit. Units here are exactly `c * (1+y)^j / (1+y)^k`
    /// with `c` a nonzero rational.
    pub fn inv_unit(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NonUnit("zero".into()));
        }
        let mut body = self.num.clone();
        let mut j: i64 = 0;
        while let Some(q) = body.div_one_plus_y() {
            body = q;
            j += 1;
        }
        let c = body
            .as_constant()
            .ok_or_else(|| Error::NonUnit(self.to_string()))?;
        // self = c (1+y)^j / (1+y)^denom_pow, inverse = c^{-1} (1+y)^{denom_pow - j}
        let inv_const = NormCoeff::from_rat(Rat::one() / c);
        Ok(inv_const.mul_one_plus_y_pow(self.denom_pow as i64 - j))
    }

    /// Integer power, allowing negative exponents for units.
    pub fn pow_i(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv_unit()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Substitute a numeric value for `y`. Requires the denominator to have
    /// cleared first when evaluating at `y = -1`.
    pub fn eval(&self, y: &Rat) -> Result<Rat> {
        let denom = (Rat::one() + y).pow(self.denom_pow as i32);
        if denom.is_zero() {
            return Err(Error::NotPolynomial {
                num: self.num.clone(),
                denom_pow: self.denom_pow,
            });
        }
        Ok(self.num.eval(y) / denom)
    }

    pub fn as_rat(&self) -> Option<Rat> {
        if self.denom_pow == 0 {
            self.num.as_constant()
        } else {
            None
        }
    }
}

impl Add for &NormCoeff {
    type Output = NormCoeff;
    fn add(self, rhs: &NormCoeff) -> NormCoeff {
        let k = self.denom_pow.max(rhs.denom_pow);
        let a = &self.num * &YPoly::one_plus_y_pow((k - self.denom_pow) as usize);
        let b = &rhs.num * &YPoly::one_plus_y_pow((k - rhs.denom_pow) as usize);
        NormCoeff::new(&a + &b, k)
    }
}

impl Sub for &NormCoeff {
    type Output = NormCoeff;
    fn sub(self, rhs: &NormCoeff) -> NormCoeff {
        self + &(-rhs)
    }
}

impl Mul for &NormCoeff {
    type Output = NormCoeff;
    fn mul(self, rhs: &NormCoeff) -> NormCoeff {
        NormCoeff::new(&self.num * &rhs.num, self.denom_pow + rhs.denom_pow)
    }
}

impl Neg for &NormCoeff {
    type Output = NormCoeff;
    fn neg(self) -> NormCoeff {
        NormCoeff { num: -&self.num, denom_pow: self.denom_pow }
    }
}

macro_rules! owned_ops {
    ($($trait:ident :: $m:ident),*) => {$(
        impl $trait for NormCoeff {
            type Output = NormCoeff;
            fn $m(self, rhs: NormCoeff) -> NormCoeff { $trait::$m(&self, &rhs) }
        }
        impl $trait<&NormCoeff> for NormCoeff {
            type Output = NormCoeff;
            fn $m(self, rhs: &NormCoeff) -> NormCoeff { $trait::$m(&self, rhs) }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for NormCoeff {
    type Output = NormCoeff;
    fn neg(self) -> NormCoeff {
        -&self
    }
}

impl fmt::Display for NormCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom_pow == 0 {
            write!(f, "{}", self.num)
        } else if self.denom_pow == 1 {
            write!(f, "({})/(1+y)", self.num)
        } else {
            write!(f, "({})/(1+y)^{}", self.num, self.denom_pow)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nc(ints: &[i64], k: u32) -> NormCoeff {
        NormCoeff::new(YPoly::from_ints(ints), k)
    }

    #[test]
    fn canonical_form() {
        // (1+y)^2 / (1+y) -> (1+y)
        assert_eq!(nc(&[1, 2, 1], 1), nc(&[1, 1], 0));
        // (y^2 - 1)/(1+y) -> y - 1
        assert_eq!(nc(&[-1, 0, 1], 1), nc(&[-1, 1], 0));
        // y/(1+y) stays put
        let c = nc(&[0, 1], 1);
        assert_eq!(c.denom_pow(), 1);
        assert!(c.clear_denominator().is_err());
    }

    #[test]
    fn clear_denominator_examples() {
        assert_eq!(nc(&[1, 2, 1], 1).clear_denominator().unwrap(), YPoly::from_ints(&[1, 1]));
        assert_eq!(nc(&[-1, 0, 1], 1).clear_denominator().unwrap(), YPoly::from_ints(&[-1, 1]));
        assert!(matches!(
            nc(&[0, 1], 1).clear_denominator(),
            Err(Error::NotPolynomial { .. })
        ));
    }

    #[test]
    fn addition_recanonicalizes() {
        // y/(1+y) + 1/(1+y) = 1
        let s = &nc(&[0, 1], 1) + &nc(&[1], 1);
        assert_eq!(s, NormCoeff::one());
    }

    #[test]
    fn unit_inverse() {
        let u = nc(&[2, 2], 1); // 2(1+y)/(1+y) = 2
        assert_eq!(u, NormCoeff::from_int(2));
        let i = u.inv_unit().unwrap();
        assert_eq!(&u * &i, NormCoeff::one());

        let v = nc(&[1, 1], 0); // 1+y
        let vi = v.inv_unit().unwrap();
        assert_eq!(vi, NormCoeff::one_plus_y_inv_pow(1));
        assert_eq!(&v * &vi, NormCoeff::one());

        assert!(nc(&[0, 1], 0).inv_unit().is_err()); // y is not a unit
        assert!(nc(&[1, 2], 0).inv_unit().is_err()); // 1+2y is not a unit here
    }

    #[test]
    fn eval_with_denominator() {
        let c = nc(&[0, 1], 1); // y/(1+y)
        assert_eq!(c.eval(&rat_int(1)).unwrap(), crate::rat::rat(1, 2));
        assert!(c.eval(&rat_int(-1)).is_err());
    }
}
