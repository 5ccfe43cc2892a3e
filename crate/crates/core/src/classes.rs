//! Homology Hirzebruch classes of complete intersections: the smooth class,
//! the two virtual-class routes, the `td_{(1+y)}` normalization and the
//! classical specializations.
//!
//! A `HomologyClass` wraps the ambient-ring representation of a class already
//! capped with `[X]`. The homology degree-k part corresponds to ambient
//! cohomological degree `n - k` (with `n` the ambient dimension); that
//! translation lives here and nowhere else, so the `(1+y)^{-k}` exponent of
//! the normalization cannot drift.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::genus::{lambda_y_character, multiplicative_class, standard_series, SeriesKind};
use crate::geometry::{fundamental_class, virtual_tangent, CompleteIntersection};
use crate::graded::{GradedClass, Multidegree};
use crate::norm::NormCoeff;
use crate::rat::{rat_int, Rat};
use crate::ypoly::YPoly;

#[derive(Clone, PartialEq, Debug)]
pub struct HomologyClass {
    underlying: GradedClass,
    dim_x: usize,
}

impl HomologyClass {
    pub fn new(underlying: GradedClass, dim_x: usize) -> Self {
        HomologyClass { underlying, dim_x }
    }

    pub fn underlying(&self) -> &GradedClass {
        &self.underlying
    }

    pub fn dim_x(&self) -> usize {
        self.dim_x
    }

    fn ambient_dim(&self) -> usize {
        self.underlying.ring().total_dim()
    }

    /// Homology degree of an ambient multidegree.
    fn homology_degree(&self, md: &[u32]) -> usize {
        let e: usize = md.iter().map(|&x| x as usize).sum();
        self.ambient_dim() - e
    }

    /// The degree-0 (genus) part: coefficient of the ambient top monomial.
    pub fn degree_part(&self) -> NormCoeff {
        self.underlying.top_coeff()
    }

    /// Degree-0 part as an honest polynomial.
    pub fn degree_poly(&self) -> Result<YPoly> {
        self.degree_part().clear_denominator()
    }

    /// The homology degree-k component, still as an ambient class.
    pub fn component(&self, k: usize) -> GradedClass {
        let n = self.ambient_dim();
        if k > n {
            return GradedClass::zero(self.underlying.ring());
        }
        self.underlying.total_degree_component(n - k)
    }

    /// Certify every coefficient is a polynomial in y.
    pub fn clear_denominators(&self) -> Result<BTreeMap<Multidegree, YPoly>> {
        self.underlying.clear_denominators()
    }

    /// Multiply every coefficient by a polynomial in y (Tate-twist style
    /// scaling commutes with all the transformations here).
    pub fn scale_poly(&self, p: &YPoly) -> Self {
        HomologyClass {
            underlying: self.underlying.scale_poly(p),
            dim_x: self.dim_x,
        }
    }
}

/// Multiply the homology degree-k part by `(1+y)^{-k}` (the normalization
/// turning `td_*` into `td_{(1+y)*}`).
pub fn normalize_1py(c: &HomologyClass) -> HomologyClass {
    let ring = c.underlying.ring().clone();
    let mut out = GradedClass::zero(&ring);
    for (md, coeff) in c.underlying.parts() {
        let k = c.homology_degree(md);
        out = &out + &GradedClass::monomial(&ring, md, coeff.mul_one_plus_y_pow(-(k as i64)));
    }
    HomologyClass::new(out, c.dim_x)
}

/// Hirzebruch class `T_y*(X)` of a smooth member: the `Q_y` multiplicative
/// class of the virtual tangent bundle capped with `[X]`. Smoothness of the
/// particular member is the caller's assertion (it is not decidable from
/// multidegrees); for a singular member this computes the class of a smooth
/// member of the same linear system.
pub fn hirzebruch_class_smooth(ci: &CompleteIntersection) -> Result<HomologyClass> {
    virtual_class_via_ty(ci)
}

/// Virtual class through the `Lambda_y`/Todd route:
/// `td_{(1+y)*}( ch(Lambda_y T*_vir) . td(T_vir) . [X] )`, with the
/// denominator cleared at the end. A `NotPolynomial` error here means an
/// engine bug, never a legitimate outcome.
pub fn virtual_class_via_dr(ci: &CompleteIntersection) -> Result<HomologyClass> {
    let ring = ci.ambient();
    let n = ring.total_dim();
    let t_vir = virtual_tangent(ci);
    let lambda = lambda_y_character(&t_vir, ring)?;
    let todd = multiplicative_class(&standard_series(SeriesKind::Todd, n), &t_vir, ring)?;
    let raw = &(&lambda * &todd) * &fundamental_class(ci);
    let normalized = normalize_1py(&HomologyClass::new(raw, ci.dim_x()));
    normalized.clear_denominators()?; // certify polynomiality
    Ok(normalized)
}

/// Virtual class through the cohomological route:
/// `T_y^*(T_vir X) cap [X]`.
pub fn virtual_class_via_ty(ci: &CompleteIntersection) -> Result<HomologyClass> {
    let ring = ci.ambient();
    let n = ring.total_dim();
    let t_vir = virtual_tangent(ci);
    let ty = multiplicative_class(&standard_series(SeriesKind::Ty, n), &t_vir, ring)?;
    let class = &ty * &fundamental_class(ci);
    Ok(HomologyClass::new(class, ci.dim_x()))
}

/// Substitute `y = y0` (one of -1, 0, 1) into every coefficient. At
/// `y0 = -1` every `(1+y)` denominator must have cleared first; an
/// uncleared one propagates as `NotPolynomial` rather than being evaluated.
pub fn specialize(c: &HomologyClass, y0: i64) -> Result<HomologyClass> {
    assert!(
        y0 == -1 || y0 == 0 || y0 == 1,
        "specialization point must be -1, 0 or 1"
    );
    let ring = c.underlying.ring().clone();
    let y = rat_int(y0);
    let mut out = GradedClass::zero(&ring);
    for (md, coeff) in c.underlying.parts() {
        out = &out + &GradedClass::monomial(&ring, md, NormCoeff::from_rat(coeff.eval(&y)?));
    }
    Ok(HomologyClass::new(out, c.dim_x))
}

/// Convenience: the genus-level specializations chi (y = -1), chi_a (y = 0)
/// and signature (y = 1) of a class with polynomial coefficients.
pub fn genus_specializations(c: &HomologyClass) -> Result<[Rat; 3]> {
    let p = c.degree_poly()?;
    Ok([p.eval_int(-1), p.eval_int(0), p.eval_int(1)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::projective_ring;
    use crate::graded::GradedClass;

    fn ci(n: u32, degrees: &[u32]) -> CompleteIntersection {
        CompleteIntersection::in_projective_space(n, degrees).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let ring = projective_ring(&[1]).unwrap();
        // class concentrated in homology degree 0 is unchanged
        let top = GradedClass::monomial(&ring, &[1], NormCoeff::from_int(5));
        let c = HomologyClass::new(top.clone(), 1);
        assert_eq!(normalize_1py(&c).underlying(), &top);

        // (1+y) . [P^1] in homology degree 1 cancels exactly
        let part = GradedClass::monomial(
            &ring,
            &[0],
            NormCoeff::from_poly(YPoly::one_plus_y_pow(1)),
        );
        let c = HomologyClass::new(part, 1);
        assert_eq!(
            normalize_1py(&c).underlying().coeff(&[0]),
            NormCoeff::one()
        );

        // y . [P^1] in homology degree 1 keeps a denominator
        let part = GradedClass::monomial(&ring, &[0], NormCoeff::from_poly(YPoly::y()));
        let c = HomologyClass::new(part, 1);
        let norm = normalize_1py(&c);
        assert_eq!(norm.underlying().coeff(&[0]).denom_pow(), 1);
    }

    #[test]
    fn smooth_degrees() {
        // line in P^2 is P^1: chi_y = 1 - y
        let line = hirzebruch_class_smooth(&ci(2, &[1])).unwrap();
        assert_eq!(line.degree_poly().unwrap(), YPoly::from_ints(&[1, -1]));

        // elliptic curve: 0
        let cubic = hirzebruch_class_smooth(&ci(2, &[3])).unwrap();
        assert!(cubic.degree_poly().unwrap().is_zero());

        // K3 quartic: 2 - 20y + 2y^2
        let k3 = hirzebruch_class_smooth(&ci(3, &[4])).unwrap();
        assert_eq!(k3.degree_poly().unwrap(), YPoly::from_ints(&[2, -20, 2]));
    }

    #[test]
    fn via_dr_degrees() {
        let cubic = virtual_class_via_dr(&ci(3, &[3])).unwrap();
        assert_eq!(cubic.degree_poly().unwrap(), YPoly::from_ints(&[1, -7, 1]));

        let quintic = virtual_class_via_dr(&ci(4, &[5])).unwrap();
        assert_eq!(
            quintic.degree_poly().unwrap(),
            YPoly::from_ints(&[0, 100, -100])
        );
        assert_eq!(
            quintic.degree_poly().unwrap().eval_int(-1),
            rat_int(-200)
        );
    }

    #[test]
    fn via_ty_degrees() {
        // P^2 itself (r = 0)
        let p2 = virtual_class_via_ty(&ci(2, &[])).unwrap();
        assert_eq!(p2.degree_poly().unwrap(), YPoly::from_ints(&[1, -1, 1]));

        // hyperplane in P^3 is P^2
        let hyp = virtual_class_via_ty(&ci(3, &[1])).unwrap();
        assert_eq!(hyp.degree_poly().unwrap(), YPoly::from_ints(&[1, -1, 1]));
    }

    #[test]
    fn routes_agree_on_a_sample() {
        for (n, degrees) in [(3u32, vec![4u32]), (4, vec![2, 3]), (2, vec![2])] {
            let ci = ci(n, &degrees);
            let dr = virtual_class_via_dr(&ci).unwrap();
            let ty = virtual_class_via_ty(&ci).unwrap();
            assert_eq!(dr, ty, "routes disagree on {ci}");
        }
    }

    #[test]
    fn specializations_of_p2() {
        let p2 = virtual_class_via_ty(&ci(2, &[])).unwrap();
        let chi = specialize(&p2, -1).unwrap();
        assert_eq!(chi.degree_part(), NormCoeff::from_int(3));
        let chi_a = specialize(&p2, 0).unwrap();
        assert_eq!(chi_a.degree_part(), NormCoeff::one());
        let sig = specialize(&p2, 1).unwrap();
        assert_eq!(sig.degree_part(), NormCoeff::one());
    }

    #[test]
    fn tate_twist_scaling_commutes() {
        // multiplying the DR-side input by (-y)^m scales the output by (-y)^m
        let ci = ci(3, &[2]);
        let base = virtual_class_via_dr(&ci).unwrap();
        for m in 0..3 {
            let twist = YPoly::neg_y_pow(m);
            let ring = ci.ambient();
            let n = ring.total_dim();
            let t_vir = virtual_tangent(&ci);
            let lambda = lambda_y_character(&t_vir, ring).unwrap().scale_poly(&twist);
            let todd =
                multiplicative_class(&standard_series(SeriesKind::Todd, n), &t_vir, ring).unwrap();
            let raw = &(&lambda * &todd) * &fundamental_class(&ci);
            let twisted = normalize_1py(&HomologyClass::new(raw, ci.dim_x()));
            assert_eq!(twisted, base.scale_poly(&twist));
        }
    }
}
