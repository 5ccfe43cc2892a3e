//! Ambient rings, bundle bookkeeping and complete-intersection descriptors.
//!
//! The ambient spaces are finite products `P^{n_1} x ... x P^{n_m}`. Every
//! class "on X" is represented by an ambient-ring element; capping with the
//! fundamental class of X is multiplication by [`fundamental_class`] followed
//! by the ambient degree map. All bundles in play are restrictions of ambient
//! bundles, which is exactly the setting of the virtual-class calculus.

use std::fmt;

use crate::error::{Error, Result};
use crate::graded::GradedClass;
use crate::norm::NormCoeff;

/// Cohomology ring of `P^{n_1} x ... x P^{n_m}`, truncated by the relations
/// `h_i^{n_i + 1} = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingDesc {
    factors: Vec<u32>,
}

impl RingDesc {
    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    /// Total dimension `n = sum n_i`.
    pub fn total_dim(&self) -> usize {
        self.factors.iter().map(|&n| n as usize).sum()
    }

    pub fn top_multidegree(&self) -> Vec<u32> {
        self.factors.clone()
    }

    pub fn in_range(&self, multidegree: &[u32]) -> bool {
        multidegree.iter().zip(&self.factors).all(|(e, n)| e <= n)
    }
}

impl fmt::Display for RingDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|n| format!("P^{n}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

pub fn projective_ring(factors: &[u32]) -> Result<RingDesc> {
    if factors.is_empty() {
        return Err(Error::EmptyFactorList);
    }
    if factors.iter().any(|&n| n < 1) {
        return Err(Error::InvalidDimension(
            "every projective factor must have dimension >= 1".into(),
        ));
    }
    Ok(RingDesc { factors: factors.to_vec() })
}

/// A bundle presented by its rank and total Chern class.
#[derive(Clone, PartialEq, Debug)]
pub struct BundleDesc {
    rank: u32,
    total_chern: GradedClass,
}

impl BundleDesc {
    pub fn new(rank: u32, total_chern: GradedClass) -> Self {
        debug_assert!(
            total_chern
                .parts()
                .all(|(md, _)| md.iter().sum::<u32>() <= rank),
            "Chern components above the rank"
        );
        BundleDesc { rank, total_chern }
    }

    /// Trivial bundle of the given rank.
    pub fn trivial(ring: &RingDesc, rank: u32) -> Self {
        BundleDesc { rank, total_chern: GradedClass::one(ring) }
    }

    /// Line bundle `O(a . h)`.
    pub fn line(ring: &RingDesc, a: &[u32]) -> Self {
        let c = &GradedClass::one(ring) + &GradedClass::linear_form(ring, a);
        BundleDesc { rank: 1, total_chern: c }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn total_chern(&self) -> &GradedClass {
        &self.total_chern
    }
}

/// Virtual bundle: a formal difference of bundle lists.
#[derive(Clone, PartialEq, Debug)]
pub struct KClass {
    plus: Vec<BundleDesc>,
    minus: Vec<BundleDesc>,
}

impl KClass {
    pub fn new(plus: Vec<BundleDesc>, minus: Vec<BundleDesc>) -> Self {
        KClass { plus, minus }
    }

    pub fn zero() -> Self {
        KClass { plus: Vec::new(), minus: Vec::new() }
    }

    pub fn from_bundle(b: BundleDesc) -> Self {
        KClass { plus: vec![b], minus: Vec::new() }
    }

    pub fn plus(&self) -> &[BundleDesc] {
        &self.plus
    }

    pub fn minus(&self) -> &[BundleDesc] {
        &self.minus
    }

    pub fn virtual_rank(&self) -> i64 {
        let p: i64 = self.plus.iter().map(|b| b.rank() as i64).sum();
        let m: i64 = self.minus.iter().map(|b| b.rank() as i64).sum();
        p - m
    }

    /// Formal sum of two virtual bundles.
    pub fn sum(&self, other: &KClass) -> KClass {
        let mut plus = self.plus.clone();
        plus.extend(other.plus.iter().cloned());
        let mut minus = self.minus.clone();
        minus.extend(other.minus.iter().cloned());
        KClass { plus, minus }
    }

    /// Subtract a bundle.
    pub fn minus_bundle(mut self, b: BundleDesc) -> KClass {
        self.minus.push(b);
        self
    }

    /// Total Chern class: product over the plus part divided by the product
    /// over the minus part, a unit in the truncated ring.
    pub fn total_chern(&self, ring: &RingDesc) -> Result<GradedClass> {
        let mut acc = GradedClass::one(ring);
        for b in &self.plus {
            acc = &acc * b.total_chern();
        }
        for b in &self.minus {
            acc = &acc * &b.total_chern().inv_unit()?;
        }
        Ok(acc)
    }
}

/// A global complete intersection of `r` multidegree hypersurfaces in a
/// product of projective spaces.
#[derive(Clone, PartialEq, Debug)]
pub struct CompleteIntersection {
    ambient: RingDesc,
    multidegrees: Vec<Vec<u32>>,
}

impl CompleteIntersection {
    /// `r = 0` (empty degree list) gives the ambient space itself; `r` may go
    /// up to the ambient dimension, in which case X is a finite set of points.
    pub fn new(ambient: RingDesc, multidegrees: Vec<Vec<u32>>) -> Result<Self> {
        let n = ambient.total_dim();
        if multidegrees.len() > n {
            return Err(Error::InvalidDimension(format!(
                "codimension {} exceeds ambient dimension {n}",
                multidegrees.len()
            )));
        }
        for a in &multidegrees {
            if a.len() != ambient.num_factors() {
                return Err(Error::InvalidDimension(format!(
                    "multidegree {a:?} has arity {} but the ambient ring has {} factors",
                    a.len(),
                    ambient.num_factors()
                )));
            }
            if a.contains(&0) {
                return Err(Error::InvalidDimension(format!(
                    "multidegree {a:?} must be positive in every factor"
                )));
            }
        }
        Ok(CompleteIntersection { ambient, multidegrees })
    }

    /// Hypersurfaces of plain degrees `a_j` in a single `P^n`.
    pub fn in_projective_space(n: u32, degrees: &[u32]) -> Result<Self> {
        let ring = projective_ring(&[n])?;
        Self::new(ring, degrees.iter().map(|&d| vec![d]).collect())
    }

    pub fn ambient(&self) -> &RingDesc {
        &self.ambient
    }

    pub fn multidegrees(&self) -> &[Vec<u32>] {
        &self.multidegrees
    }

    pub fn codim(&self) -> usize {
        self.multidegrees.len()
    }

    pub fn dim_x(&self) -> usize {
        self.ambient.total_dim() - self.codim()
    }
}

impl fmt::Display for CompleteIntersection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multidegrees.is_empty() {
            return write!(f, "{}", self.ambient);
        }
        let degs: Vec<String> = self
            .multidegrees
            .iter()
            .map(|a| {
                if a.len() == 1 {
                    format!("{}", a[0])
                } else {
                    format!("({})", a.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","))
                }
            })
            .collect();
        write!(f, "X({}) in {}", degs.join(","), self.ambient)
    }
}

/// Tangent K-class of the ambient space via the Euler sequence: per factor,
/// `O(h_i)^{n_i + 1}` minus a trivial line bundle.
pub fn tangent_kclass(ring: &RingDesc) -> KClass {
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for (i, &n) in ring.factors().iter().enumerate() {
        let mut a = vec![0; ring.num_factors()];
        a[i] = 1;
        let line = BundleDesc::line(ring, &a);
        let mut euler = line.total_chern().clone();
        // (1 + h_i)^{n_i + 1}
        euler = euler.pow((n + 1) as usize);
        plus.push(BundleDesc::new(n + 1, euler));
        minus.push(BundleDesc::trivial(ring, 1));
    }
    KClass::new(plus, minus)
}

/// Virtual tangent bundle `[T_ambient|_X] - [N_{X/ambient}]` with the normal
/// bundle the sum of the `O(a_j . h)`.
pub fn virtual_tangent(ci: &CompleteIntersection) -> KClass {
    let ring = ci.ambient();
    let mut k = tangent_kclass(ring);
    for a in ci.multidegrees() {
        k = k.minus_bundle(BundleDesc::line(ring, a));
    }
    k
}

/// The ambient class Poincare-dual to `[X]`: the product of the hypersurface
/// classes `a_j . h`, of pure degree `r`.
pub fn fundamental_class(ci: &CompleteIntersection) -> GradedClass {
    let ring = ci.ambient();
    let mut acc = GradedClass::one(ring);
    for a in ci.multidegrees() {
        acc = &acc * &GradedClass::linear_form(ring, a);
    }
    acc
}

/// Degree map: coefficient of the top monomial.
pub fn degree(c: &GradedClass) -> NormCoeff {
    c.top_coeff()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norm::NormCoeff;

    #[test]
    fn ring_construction() {
        assert!(projective_ring(&[]).is_err());
        assert!(projective_ring(&[0]).is_err());
        let r = projective_ring(&[1, 1]).unwrap();
        assert_eq!(r.total_dim(), 2);
        let p3 = projective_ring(&[3]).unwrap();
        let h = GradedClass::hyperplane(&p3, 0);
        assert_eq!(degree(&h.pow(3)), NormCoeff::one());
    }

    #[test]
    fn tangent_chern_classes() {
        let p2 = projective_ring(&[2]).unwrap();
        let t = tangent_kclass(&p2);
        assert_eq!(t.virtual_rank(), 2);
        let c = t.total_chern(&p2).unwrap();
        assert_eq!(c.to_string(), "1 + 3h + 3h^2");

        let p1 = projective_ring(&[1]).unwrap();
        let c = tangent_kclass(&p1).total_chern(&p1).unwrap();
        assert_eq!(c.to_string(), "1 + 2h");

        let p1p1 = projective_ring(&[1, 1]).unwrap();
        let c = tangent_kclass(&p1p1).total_chern(&p1p1).unwrap();
        let c1 = c.total_degree_component(1);
        assert_eq!(c1.coeff(&[1, 0]), NormCoeff::from_int(2));
        assert_eq!(c1.coeff(&[0, 1]), NormCoeff::from_int(2));
    }

    #[test]
    fn virtual_tangent_first_chern() {
        // quadric surface in P^3: c1 = (4 - 2) h
        let ci = CompleteIntersection::in_projective_space(3, &[2]).unwrap();
        let c = virtual_tangent(&ci).total_chern(ci.ambient()).unwrap();
        assert_eq!(c.total_degree_component(1).coeff(&[1]), NormCoeff::from_int(2));
        assert_eq!(virtual_tangent(&ci).virtual_rank(), 2);

        // quartic in P^3 is Calabi-Yau: c1 = 0
        let k3 = CompleteIntersection::in_projective_space(3, &[4]).unwrap();
        let c = virtual_tangent(&k3).total_chern(k3.ambient()).unwrap();
        assert!(c.total_degree_component(1).is_zero());

        // r = 0 gives the ambient tangent class back
        let p2 = CompleteIntersection::in_projective_space(2, &[]).unwrap();
        assert_eq!(virtual_tangent(&p2), tangent_kclass(p2.ambient()));
    }

    #[test]
    fn fundamental_class_and_bezout() {
        let cubic = CompleteIntersection::in_projective_space(3, &[3]).unwrap();
        let f = fundamental_class(&cubic);
        assert_eq!(f.coeff(&[1]), NormCoeff::from_int(3));

        let ci = CompleteIntersection::in_projective_space(4, &[2, 3]).unwrap();
        let f = fundamental_class(&ci);
        assert_eq!(f.coeff(&[2]), NormCoeff::from_int(6));

        // Bezout: degree(fund . h^{dim X}) = prod a_j
        let h = GradedClass::hyperplane(ci.ambient(), 0);
        let top = &f * &h.pow(ci.dim_x());
        assert_eq!(degree(&top), NormCoeff::from_int(6));
    }

    #[test]
    fn euler_characteristic_of_projective_space() {
        // degree of c_n(T P^n) = n + 1
        for n in 1..=5u32 {
            let ring = projective_ring(&[n]).unwrap();
            let c = tangent_kclass(&ring).total_chern(&ring).unwrap();
            assert_eq!(degree(&c), NormCoeff::from_int(n as i64 + 1));
        }
    }

    #[test]
    fn invalid_complete_intersections() {
        assert!(CompleteIntersection::in_projective_space(2, &[1, 1, 1]).is_err());
        let ring = projective_ring(&[1, 1]).unwrap();
        assert!(CompleteIntersection::new(ring.clone(), vec![vec![1]]).is_err());
        assert!(CompleteIntersection::new(ring, vec![vec![1, 0]]).is_err());
    }
}
