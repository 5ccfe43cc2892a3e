//! Polynomials in the genus parameter `y` over exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rat::{binomial, rat_int, Rat};

/// Dense polynomial in `y`, coefficients ascending, trailing zeros stripped.
/// The zero polynomial has an empty coefficient vector and its degree is
/// `None`, which orders below every actual degree.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct YPoly {
    coeffs: Vec<Rat>,
}

impl YPoly {
    pub fn zero() -> Self {
        YPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn constant_int(c: i64) -> Self {
        Self::constant(rat_int(c))
    }

    /// The monomial `c * y^k`.
    pub fn monomial(k: usize, c: Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        YPoly { coeffs }
    }

    pub fn y() -> Self {
        Self::monomial(1, Rat::one())
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = YPoly { coeffs };
        p.strip();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    fn strip(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial (below every `Some`).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn eval(&self, y: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * y + c;
        }
        acc
    }

    pub fn eval_int(&self, y: i64) -> Rat {
        self.eval(&rat_int(y))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        YPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `(1+y)^k` expanded by binomials.
    pub fn one_plus_y_pow(k: usize) -> Self {
        let coeffs = (0..=k)
            .map(|i| Rat::from_integer(binomial(k as u64, i as u64)))
            .collect();
        YPoly { coeffs }
    }

    /// `(-y)^k`.
    pub fn neg_y_pow(k: usize) -> Self {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        Self::monomial(k, rat_int(sign))
    }

    pub fn mul_one_plus_y(&self) -> Self {
        self * &Self::one_plus_y_pow(1)
    }

    /// Exact division by `(1+y)`; `None` when `(1+y)` does not divide self.
    pub fn div_one_plus_y(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Synthetic division at the root y = -1.
        let d = self.coeffs.len() - 1;
        if d == 0 {
            return None;
        }
        let mut q = vec![Rat::zero(); d];
        q[d - 1] = self.coeffs[d].clone();
        for i in (1..d).rev() {
            q[i - 1] = &self.coeffs[i] - &q[i];
        }
        if self.coeffs[0] != q[0] {
            return None; // remainder p(-1) != 0
        }
        Some(Self::from_coeffs(q))
    }

    /// Euclidean division, returning `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / &lead;
            quot[i - dd] = q.clone();
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let t = dc * &q;
                rem[i - dd + j] = &rem[i - dd + j] - &t;
            }
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Only the constant term survives, if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.degree() {
            None => Some(Rat::zero()),
            Some(0) => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }
}

impl Add for &YPoly {
    type Output = YPoly;
    fn add(self, rhs: &YPoly) -> YPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coeff(i) + rhs.coeff(i))
            .collect();
        YPoly::from_coeffs(coeffs)
    }
}

impl Sub for &YPoly {
    type Output = YPoly;
    fn sub(self, rhs: &YPoly) -> YPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coeff(i) - rhs.coeff(i))
            .collect();
        YPoly::from_coeffs(coeffs)
    }
}

impl Mul for &YPoly {
    type Output = YPoly;
    fn mul(self, rhs: &YPoly) -> YPoly {
        if self.is_zero() || rhs.is_zero() {
            return YPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        YPoly::from_coeffs(coeffs)
    }
}

impl Neg for &YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        YPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($trait:ident :: $m:ident),*) => {$(
        impl $trait for YPoly {
            type Output = YPoly;
            fn $m(self, rhs: YPoly) -> YPoly { $trait::$m(&self, &rhs) }
        }
        impl $trait<&YPoly> for YPoly {
            type Output = YPoly;
            fn $m(self, rhs: &YPoly) -> YPoly { $trait::$m(&self, rhs) }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        -&self
    }
}

/// Ascending powers with explicit signs: `1 - 7y + y^2`, `-y`, `100y - 100y^2`.
/// A non-integral coefficient on a `y` power is parenthesized: `(3/2)y^2`.
impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                if k > 0 && !mag.denom().is_one() {
                    write!(f, "({mag})")?;
                } else {
                    write!(f, "{mag}")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "y")?,
                _ => write!(f, "y^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn degree_sentinel_orders_below_everything() {
        assert!(YPoly::zero().degree() < YPoly::one().degree());
        assert!(YPoly::zero().degree() < YPoly::y().degree());
        assert_eq!(YPoly::zero().degree(), None);
    }

    #[test]
    fn display_grammar() {
        assert_eq!(YPoly::from_ints(&[1, -7, 1]).to_string(), "1 - 7y + y^2");
        assert_eq!(YPoly::from_ints(&[0, -1]).to_string(), "-y");
        assert_eq!(YPoly::from_ints(&[0, 100, -100]).to_string(), "100y - 100y^2");
        assert_eq!(YPoly::zero().to_string(), "0");
        assert_eq!(
            YPoly::from_coeffs(vec![rat(1, 2), rat(3, 2)]).to_string(),
            "1/2 + (3/2)y"
        );
    }

    #[test]
    fn division_by_one_plus_y() {
        let p = YPoly::one_plus_y_pow(2);
        assert_eq!(p.div_one_plus_y().unwrap(), YPoly::one_plus_y_pow(1));
        let q = YPoly::from_ints(&[-1, 0, 1]); // y^2 - 1 = (1+y)(y-1)
        assert_eq!(q.div_one_plus_y().unwrap(), YPoly::from_ints(&[-1, 1]));
        assert_eq!(YPoly::y().div_one_plus_y(), None);
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = YPoly::from_ints(&[3, 0, -2, 5, 1]);
        let b = YPoly::from_ints(&[1, 2, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn eval_horner() {
        let p = YPoly::from_ints(&[2, -20, 2]);
        assert_eq!(p.eval_int(-1), rat_int(24));
        assert_eq!(p.eval_int(0), rat_int(2));
        assert_eq!(p.eval_int(1), rat_int(-16));
    }
}
