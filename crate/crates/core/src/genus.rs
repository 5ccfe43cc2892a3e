//! Genus power series and the multiplicative-sequence machinery.
//!
//! A genus is determined by a power series `Q(alpha)` with unit constant
//! term; its value on a virtual bundle `E` is `prod_i Q(alpha_i) / prod_j
//! Q(beta_j)` over the formal Chern roots of the positive and negative parts.
//! Chern roots are never materialized: we take `log Q`, convert root sums
//! into power sums of the roots via Newton's identities on the total Chern
//! class, and exponentiate back inside the truncated ring, so every step
//! stays in exact rational arithmetic.

use num_traits::One;

use crate::error::{Error, Result};
use crate::geometry::{KClass, RingDesc};
use crate::graded::GradedClass;
use crate::norm::NormCoeff;
use crate::rat::{rat_int, Rat};
use crate::series::{exp_neg_alpha, PowerSeries};
use crate::ypoly::YPoly;

/// The named genus series.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeriesKind {
    /// Normalized Hirzebruch series `Q_y(a) = a(1+y)/(1 - e^{-a(1+y)}) - a y`.
    Ty,
    /// Unnormalized series `Q~_y(a) = a(1 + y e^{-a})/(1 - e^{-a})`.
    TyTilde,
    /// `a / (1 - e^{-a})`.
    Todd,
    /// `1 + a`.
    Chern,
    /// `a / tanh a`.
    L,
}

/// `a / (1 - e^{-a})` to the given order: the inverse of
/// `sum_k (-1)^k a^k / (k+1)!`.
fn todd_series(order: usize) -> PowerSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut factorial = Rat::one(); // (k+1)! running
    for k in 0..=order {
        factorial *= rat_int(k as i64 + 1);
        let sign = if k % 2 == 0 { 1 } else { -1 };
        coeffs.push(NormCoeff::from_rat(rat_int(sign) / &factorial));
    }
    PowerSeries::from_coeffs(coeffs, order)
        .inv()
        .expect("unit constant term")
}

/// `a / tanh a = cosh a / (sinh a / a)`.
fn l_series(order: usize) -> PowerSeries {
    let mut cosh = vec![NormCoeff::zero(); order + 1];
    let mut sinh_over = vec![NormCoeff::zero(); order + 1];
    let mut factorial = Rat::one();
    for k in 0..=order {
        if k > 0 {
            factorial *= rat_int(k as i64);
        }
        if k % 2 == 0 {
            cosh[k] = NormCoeff::from_rat(Rat::one() / &factorial);
            // sinh(a)/a has 1/(k+1)! at even k
            sinh_over[k] = NormCoeff::from_rat(Rat::one() / (&factorial * rat_int(k as i64 + 1)));
        }
    }
    let cosh = PowerSeries::from_coeffs(cosh, order);
    let sinh_over = PowerSeries::from_coeffs(sinh_over, order);
    cosh.div(&sinh_over).expect("unit constant term")
}

/// Build one of the standard genus series truncated at `order`.
pub fn standard_series(kind: SeriesKind, order: usize) -> PowerSeries {
    match kind {
        SeriesKind::Todd => todd_series(order),
        SeriesKind::Chern => &PowerSeries::one(order) + &PowerSeries::alpha(order),
        SeriesKind::L => l_series(order),
        SeriesKind::Ty => {
            // Todd(a(1+y)) - a y, assembled coefficientwise so that the
            // y = -1 specialization is the limit series 1 + a.
            let scaled = todd_series(order).scale_alpha_one_plus_y();
            let ay = PowerSeries::alpha(order).scale(&NormCoeff::from_poly(YPoly::y()));
            &scaled - &ay
        }
        SeriesKind::TyTilde => {
            // Todd(a) * (1 + y e^{-a})
            let lam = &PowerSeries::one(order)
                + &exp_neg_alpha(order).scale(&NormCoeff::from_poly(YPoly::y()));
            &todd_series(order) * &lam
        }
    }
}

/// Residual of the relation `Q_y(a) = (1+y)^{-1} Q~_y(a(1+y))`; identically
/// zero when the series machinery is right.
pub fn verify_series_relation(order: usize) -> PowerSeries {
    let q = standard_series(SeriesKind::Ty, order);
    let rhs = standard_series(SeriesKind::TyTilde, order)
        .scale_alpha_one_plus_y()
        .scale(&NormCoeff::one_plus_y_inv_pow(1));
    &q - &rhs
}

/// Power sums `p_1, ..., p_n` of the formal Chern roots, from the total
/// Chern class by Newton's identities. Works for virtual classes because
/// the log-derivative of the total Chern class is additive.
pub(crate) fn power_sums(total_chern: &GradedClass, up_to: usize) -> Vec<GradedClass> {
    let ring = total_chern.ring().clone();
    let e: Vec<GradedClass> = (0..=up_to)
        .map(|d| total_chern.total_degree_component(d))
        .collect();
    let mut p: Vec<GradedClass> = Vec::with_capacity(up_to + 1);
    p.push(GradedClass::zero(&ring)); // p_0 unused
    for k in 1..=up_to {
        // p_k = (-1)^{k-1} [ k e_k - sum_{i=1}^{k-1} (-1)^{i-1} e_{k-i} p_i ]
        let mut acc = e[k].scale_rat(&rat_int(k as i64));
        for i in 1..k {
            let term = &e[k - i] * &p[i];
            let signed = if i % 2 == 1 { term } else { -&term };
            acc = &acc - &signed;
        }
        let pk = if k % 2 == 1 { acc } else { -&acc };
        p.push(pk);
    }
    p
}

/// Evaluate the multiplicative sequence of `q` on the virtual bundle `e`:
/// `prod Q(alpha_i) / prod Q(beta_j)` computed as
/// `c0^{rank} * exp( sum_m log(Q/c0)_m * p_m )`.
pub fn multiplicative_class(
    q: &PowerSeries,
    e: &KClass,
    ring: &RingDesc,
) -> Result<GradedClass> {
    let n = ring.total_dim();
    if q.order() < n {
        return Err(Error::SeriesDomain(format!(
            "series order {} is below the ring dimension {n}",
            q.order()
        )));
    }
    let c0 = q.coeff(0);
    let c0_inv = c0
        .inv_unit()
        .map_err(|_| Error::NonUnit(format!("constant term {c0} of the genus series")))?;
    let log_q = q.scale(&c0_inv).log()?;

    let chern = e.total_chern(ring)?;
    let p = power_sums(&chern, n);
    let mut exponent = GradedClass::zero(ring);
    for m in 1..=n {
        let lm = log_q.coeff(m);
        if lm.is_zero() {
            continue;
        }
        exponent = &exponent + &p[m].scale(&lm);
    }
    let body = exponent.exp_nilpotent()?;
    let rank_factor = c0.pow_i(e.virtual_rank())?;
    Ok(body.scale(&rank_factor))
}

/// Chern character `rank + sum_m p_m / m!`, additive in `e`.
pub fn chern_character(e: &KClass, ring: &RingDesc) -> Result<GradedClass> {
    let n = ring.total_dim();
    let chern = e.total_chern(ring)?;
    let p = power_sums(&chern, n);
    let mut acc = GradedClass::constant(ring, NormCoeff::from_int(e.virtual_rank()));
    let mut factorial = Rat::one();
    for m in 1..=n {
        factorial *= rat_int(m as i64);
        acc = &acc + &p[m].scale_rat(&(Rat::one() / &factorial));
    }
    Ok(acc)
}

/// `ch(Lambda_y E^*) = prod_i (1 + y e^{-alpha_i})` over the roots of `e`,
/// inverted on the negative part; the constant factor is `(1+y)^{rank}`.
pub fn lambda_y_character(e: &KClass, ring: &RingDesc) -> Result<GradedClass> {
    let n = ring.total_dim();
    let series = &PowerSeries::one(n)
        + &exp_neg_alpha(n).scale(&NormCoeff::from_poly(YPoly::y()));
    multiplicative_class(&series, e, ring)
}
