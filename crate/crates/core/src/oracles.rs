//! Independent verification oracles.
//!
//! Nothing in this module touches the class engine: `sheaf_euler_omega`
//! works by pure binomial arithmetic through the Euler-sequence and conormal
//! recursions, and `scissor_chi_y` evaluates cut-and-paste expressions over
//! a dictionary of standard pieces. Agreement between these oracles and the
//! class routes is the backbone of the acceptance suite.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::geometry::CompleteIntersection;
use crate::rat::{binomial, binomial_shifted, Rat};
use crate::ypoly::YPoly;

/// Compactly-supported `chi_y` genera of standard pieces. Provenance: the
/// compactly-supported cohomology of affine and torus cells is pure Tate,
/// so `chi_c(A^k) = (-y)^k`, and projective space stacks one Tate class per
/// dimension.
pub mod pieces {
    use super::*;

    /// `chi_c(P^n) = 1 - y + ... + (-y)^n`.
    pub fn proj(n: usize) -> YPoly {
        let mut acc = YPoly::zero();
        for k in 0..=n {
            acc = &acc + &YPoly::neg_y_pow(k);
        }
        acc
    }

    /// `chi_c(A^n) = (-y)^n`.
    pub fn affine(n: usize) -> YPoly {
        YPoly::neg_y_pow(n)
    }

    /// `chi_c(C^*) = -y - 1`.
    pub fn torus() -> YPoly {
        &affine(1) - &point()
    }

    pub fn point() -> YPoly {
        YPoly::one()
    }
}

/// `chi(Omega^p_X)` for a smooth complete intersection in a single `P^n`,
/// by finite signed sums of binomials.
///
/// Base case: `chi(O_{P^n}(k)) = C(n+k, n)` as a polynomial in `k`, and the
/// Euler sequence gives
/// `chi(Omega^p_{P^n}(k)) = C(n+1, p) chi(O(k-p)) - chi(Omega^{p-1}(k))`.
/// Each hypersurface section of degree `a` is handled by the restriction
/// sequence `chi(F|_X'(k)) = chi(F(k)) - chi(F(k-a))` and the conormal
/// sequence `chi(Omega^p_{X'}(k)) = chi(Omega^p_X|_{X'}(k)) -
/// chi(Omega^{p-1}_{X'}(k-a))`. Only Euler characteristics appear, so no
/// vanishing theorems are needed.
pub fn sheaf_euler_omega(ci: &CompleteIntersection, p: usize) -> Result<BigInt> {
    let n = single_projective_dim(ci)?;
    if p > ci.dim_x() {
        return Err(Error::InvalidDimension(format!(
            "p = {p} exceeds dim X = {}",
            ci.dim_x()
        )));
    }
    let degrees: Vec<i64> = ci
        .multidegrees()
        .iter()
        .map(|a| a[0] as i64)
        .collect();
    let mut memo = HashMap::new();
    Ok(chi_omega(n as i64, &degrees, degrees.len(), p as i64, 0, &mut memo))
}

fn single_projective_dim(ci: &CompleteIntersection) -> Result<u32> {
    if ci.ambient().num_factors() != 1 {
        return Err(Error::InvalidInput(
            "the sheaf-Euler oracle is restricted to a single projective space".into(),
        ));
    }
    Ok(ci.ambient().factors()[0])
}

/// `chi(Omega^p_{X_level}(k))` where `X_0 = P^n` and `X_j` cuts `X_{j-1}` by
/// a hypersurface of degree `degrees[j-1]`.
fn chi_omega(
    n: i64,
    degrees: &[i64],
    level: usize,
    p: i64,
    k: i64,
    memo: &mut HashMap<(usize, i64, i64), BigInt>,
) -> BigInt {
    if p < 0 || p > n - level as i64 {
        return BigInt::from(0);
    }
    if let Some(v) = memo.get(&(level, p, k)) {
        return v.clone();
    }
    let result = if level == 0 {
        if p == 0 {
            binomial_shifted(k, n as u64)
        } else {
            // Euler sequence on P^n
            let free = binomial((n + 1) as u64, p as u64)
                * chi_omega(n, degrees, 0, 0, k - p, memo);
            free - chi_omega(n, degrees, 0, p - 1, k, memo)
        }
    } else {
        let a = degrees[level - 1];
        // restriction of Omega^p from the previous level, then the conormal
        // correction
        let restricted = chi_omega(n, degrees, level - 1, p, k, memo)
            - chi_omega(n, degrees, level - 1, p, k - a, memo);
        restricted - chi_omega(n, degrees, level, p - 1, k - a, memo)
    };
    memo.insert((level, p, k), result.clone());
    result
}

/// `chi_y(X) = sum_p chi(Omega^p_X) y^p` for a smooth complete intersection
/// in a single `P^n`.
pub fn chi_y_smooth_oracle(ci: &CompleteIntersection) -> Result<YPoly> {
    let mut coeffs = Vec::with_capacity(ci.dim_x() + 1);
    for p in 0..=ci.dim_x() {
        let v = sheaf_euler_omega(ci, p)?;
        coeffs.push(Rat::from_integer(v));
    }
    Ok(YPoly::from_coeffs(coeffs))
}

/// Cut-and-paste description of a variety with known `chi_c` genus.
///
/// The geometric claims behind an expression (which blow-ups, which
/// contractions) are the author's responsibility; the oracle only does the
/// additive arithmetic.
#[derive(Clone, PartialEq, Debug)]
pub enum ScissorExpr {
    Proj(usize),
    Affine(usize),
    Torus,
    Point,
    DisjointUnion(Box<ScissorExpr>, Box<ScissorExpr>),
    /// `A \ B` for closed `B` inside `A`.
    Complement(Box<ScissorExpr>, Box<ScissorExpr>),
    Product(Box<ScissorExpr>, Box<ScissorExpr>),
    /// Blow up the given number of points.
    BlowupPoints(Box<ScissorExpr>, usize),
    /// Replace an embedded `P^1` by a point.
    ContractCurveToPoint(Box<ScissorExpr>),
}

impl ScissorExpr {
    pub fn union(a: ScissorExpr, b: ScissorExpr) -> Self {
        ScissorExpr::DisjointUnion(Box::new(a), Box::new(b))
    }

    pub fn complement(a: ScissorExpr, b: ScissorExpr) -> Self {
        ScissorExpr::Complement(Box::new(a), Box::new(b))
    }

    pub fn product(a: ScissorExpr, b: ScissorExpr) -> Self {
        ScissorExpr::Product(Box::new(a), Box::new(b))
    }

    pub fn blowup_points(a: ScissorExpr, count: usize) -> Self {
        ScissorExpr::BlowupPoints(Box::new(a), count)
    }

    pub fn contract_curve(a: ScissorExpr) -> Self {
        ScissorExpr::ContractCurveToPoint(Box::new(a))
    }
}

/// Evaluate the compactly-supported `chi_y` genus of a scissor expression.
pub fn scissor_chi_y(e: &ScissorExpr) -> Result<YPoly> {
    Ok(eval_scissor(e)?.0)
}

/// `(chi_c, dimension)`.
fn eval_scissor(e: &ScissorExpr) -> Result<(YPoly, usize)> {
    match e {
        ScissorExpr::Proj(n) => Ok((pieces::proj(*n), *n)),
        ScissorExpr::Affine(n) => Ok((pieces::affine(*n), *n)),
        ScissorExpr::Torus => Ok((pieces::torus(), 1)),
        ScissorExpr::Point => Ok((pieces::point(), 0)),
        ScissorExpr::DisjointUnion(a, b) => {
            let (ca, da) = eval_scissor(a)?;
            let (cb, db) = eval_scissor(b)?;
            Ok((&ca + &cb, da.max(db)))
        }
        ScissorExpr::Complement(a, b) => {
            let (ca, da) = eval_scissor(a)?;
            let (cb, db) = eval_scissor(b)?;
            if db > da {
                return Err(Error::InvalidDimension(
                    "complement of a higher-dimensional piece".into(),
                ));
            }
            Ok((&ca - &cb, da))
        }
        ScissorExpr::Product(a, b) => {
            let (ca, da) = eval_scissor(a)?;
            let (cb, db) = eval_scissor(b)?;
            Ok((&ca * &cb, da + db))
        }
        ScissorExpr::BlowupPoints(a, count) => {
            let (ca, da) = eval_scissor(a)?;
            if da == 0 {
                return Err(Error::InvalidDimension(
                    "cannot blow up points on a zero-dimensional piece".into(),
                ));
            }
            // each point is replaced by P^{dim-1}
            let per_point = &pieces::proj(da - 1) - &pieces::point();
            let add = per_point.scale(&Rat::from_integer((*count).into()));
            Ok((&ca + &add, da))
        }
        ScissorExpr::ContractCurveToPoint(a) => {
            let (ca, da) = eval_scissor(a)?;
            if da == 0 {
                return Err(Error::InvalidDimension(
                    "cannot contract a curve in a zero-dimensional piece".into(),
                ));
            }
            // P^1 becomes a point: chi gains 1 - chi(P^1) = y
            Ok((&ca + &YPoly::y(), da))
        }
    }
}
