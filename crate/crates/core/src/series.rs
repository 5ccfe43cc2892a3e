//! Truncated one-variable power series over [`NormCoeff`].
//!
//! The variable is the formal Chern-root variable; `order` is the highest
//! retained exponent. All genus series (`Q_y`, `Q~_y`, Todd, Chern, L) and
//! the log/exp manipulations of the splitting-principle algorithm live here.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use crate::error::{Error, Result};
use crate::norm::NormCoeff;
use crate::rat::{rat_int, Rat};
use crate::ypoly::YPoly;

#[derive(Clone, PartialEq, Debug)]
pub struct PowerSeries {
    /// `coeffs[k]` is the coefficient of the k-th power; len = order + 1.
    coeffs: Vec<NormCoeff>,
}

impl PowerSeries {
    pub fn from_coeffs(mut coeffs: Vec<NormCoeff>, order: usize) -> Self {
        coeffs.resize(order + 1, NormCoeff::zero());
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::from_coeffs(vec![NormCoeff::one()], order)
    }

    /// The identity series `alpha`.
    pub fn alpha(order: usize) -> Self {
        Self::from_coeffs(vec![NormCoeff::zero(), NormCoeff::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> NormCoeff {
        self.coeffs.get(k).cloned().unwrap_or_else(NormCoeff::zero)
    }

    pub fn coeffs(&self) -> &[NormCoeff] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        Self::from_coeffs(coeffs, order)
    }

    pub fn scale(&self, c: &NormCoeff) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Substitute `alpha -> alpha * (1+y)`: the k-th coefficient picks up
    /// `(1+y)^k`.
    pub fn scale_alpha_one_plus_y(&self) -> Self {
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.mul_one_plus_y_pow(k as i64))
                .collect(),
        }
    }

    /// Inverse of a series with unit constant term.
    pub fn inv(&self) -> Result<Self> {
        let order = self.order();
        let c0_inv = self.coeff(0).inv_unit()?;
        let mut inv = vec![NormCoeff::zero(); order + 1];
        inv[0] = c0_inv.clone();
        for k in 1..=order {
            // sum_{j=0..k-1} inv[j] * self[k-j] must cancel against self[0]*inv[k]
            let mut acc = NormCoeff::zero();
            for j in 0..k {
                acc = &acc + &(&inv[j] * &self.coeffs[k - j]);
            }
            inv[k] = -&(&c0_inv * &acc);
        }
        Ok(PowerSeries { coeffs: inv })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// `exp` of a series with zero constant term (finite sum up to order).
    pub fn exp(&self) -> Result<Self> {
        if !self.coeff(0).is_zero() {
            return Err(Error::SeriesDomain(
                "exp needs a zero constant term".into(),
            ));
        }
        let order = self.order();
        let mut acc = Self::one(order);
        let mut pow = Self::one(order);
        let mut factorial = Rat::one();
        for k in 1..=order {
            pow = &pow * self;
            factorial *= rat_int(k as i64);
            acc = &acc + &pow.scale(&NormCoeff::from_rat(Rat::one() / &factorial));
        }
        Ok(acc)
    }

    /// `log` of a series with constant term 1 (Mercator expansion of the
    /// nilpotent part).
    pub fn log(&self) -> Result<Self> {
        if self.coeff(0) != NormCoeff::one() {
            return Err(Error::SeriesDomain(
                "log needs constant term 1".into(),
            ));
        }
        let order = self.order();
        let u = self - &Self::one(order);
        let mut acc = Self::zero(order);
        let mut pow = Self::one(order);
        for k in 1..=order {
            pow = &pow * &u;
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc = &acc + &pow.scale(&NormCoeff::from_rat(crate::rat::rat(sign, k as i64)));
        }
        Ok(acc)
    }

    /// Substitute a numeric `y` into every coefficient. Fails on uncleared
    /// `(1+y)` denominators at `y = -1`.
    pub fn specialize_y(&self, y: &Rat) -> Result<Vec<Rat>> {
        self.coeffs.iter().map(|c| c.eval(y)).collect()
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![NormCoeff::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
            }
        }
        PowerSeries { coeffs }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})a")?,
                _ => write!(f, "({c})a^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `e^{-alpha}` truncated: coefficients `(-1)^k / k!`.
pub fn exp_neg_alpha(order: usize) -> PowerSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut factorial = Rat::one();
    for k in 0..=order {
        if k > 0 {
            factorial *= rat_int(k as i64);
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        coeffs.push(NormCoeff::from_rat(rat_int(sign) / &factorial));
    }
    PowerSeries::from_coeffs(coeffs, order)
}

/// Multiply every coefficient by a polynomial in y.
pub fn scale_poly(s: &PowerSeries, p: &YPoly) -> PowerSeries {
    s.scale(&NormCoeff::from_poly(p.clone()))
}
