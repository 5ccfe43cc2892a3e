//! Steenbrink spectra of weighted-homogeneous isolated singularities and the
//! point-supported Hirzebruch-Milnor class they determine.
//!
//! Conventions, pinned by three independent checks (spectrum symmetry, the
//! reduced Euler characteristic at `y = -1`, and the nodal-cubic acceptance
//! value):
//!
//! * spectrum entries lie in the open interval `(0, n)` and come from
//!   expanding `prod_i (t^{w_i} - t) / (1 - t^{w_i})` exactly;
//! * the Hodge level of an entry `alpha` is `floor(n - alpha)` for
//!   non-integral `alpha` and `n - alpha` for integral `alpha`;
//! * `chi_y` of the reduced Milnor-fiber cohomology (concentrated in degree
//!   `n - 1`) is `(-1)^{n-1} sum_alpha (-y)^{level(alpha)}`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::classes::virtual_class_via_ty;
use crate::error::{Error, Result};
use crate::geometry::CompleteIntersection;
use crate::rat::{is_integer, Rat};
use crate::ypoly::YPoly;

/// Weights of a weighted-homogeneous polynomial, each in `(0, 1)`.
#[derive(Clone, PartialEq, Debug)]
pub struct Weights {
    w: Vec<Rat>,
}

impl Weights {
    pub fn new(w: Vec<Rat>) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::InvalidWeights("at least one weight is required".into()));
        }
        for wi in &w {
            if !(wi > &Rat::zero() && wi < &Rat::one()) {
                return Err(Error::InvalidWeights(format!(
                    "weight {wi} is outside the open interval (0, 1)"
                )));
            }
        }
        Ok(Weights { w })
    }

    pub fn weights(&self) -> &[Rat] {
        &self.w
    }

    /// Number of variables.
    pub fn num_variables(&self) -> usize {
        self.w.len()
    }

    /// `prod (1/w_i - 1)`, the expected Milnor number.
    pub fn milnor_product(&self) -> Rat {
        self.w
            .iter()
            .map(|w| Rat::one() / w - Rat::one())
            .product()
    }
}

/// Finite multiset of rational spectral numbers in `(0, n)`.
#[derive(Clone, PartialEq, Debug)]
pub struct SpectrumData {
    entries: BTreeMap<Rat, u64>,
    n: usize,
}

impl SpectrumData {
    pub fn new(entries: BTreeMap<Rat, u64>, n: usize) -> Result<Self> {
        let s = SpectrumData { entries, n };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<()> {
        let n_rat = Rat::from_integer(self.n.into());
        for (alpha, &mult) in &self.entries {
            if mult == 0 {
                return Err(Error::InvalidSpectrum(format!(
                    "zero multiplicity at {alpha}"
                )));
            }
            if !(alpha > &Rat::zero() && alpha < &n_rat) {
                return Err(Error::InvalidSpectrum(format!(
                    "entry {alpha} is outside the open interval (0, {})",
                    self.n
                )));
            }
            let mirror = &n_rat - alpha;
            if self.entries.get(&mirror) != Some(&mult) {
                return Err(Error::InvalidSpectrum(format!(
                    "multiset is not symmetric under a -> n - a at {alpha}"
                )));
            }
        }
        Ok(())
    }

    pub fn entries(&self) -> &BTreeMap<Rat, u64> {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Total multiplicity.
    pub fn mu(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Shift every entry by `1/2` into one more variable (adding a square).
    pub fn suspend(&self) -> Result<SpectrumData> {
        let half = crate::rat::rat(1, 2);
        let entries = self
            .entries
            .iter()
            .map(|(a, &m)| (a + &half, m))
            .collect();
        SpectrumData::new(entries, self.n + 1)
    }
}

impl fmt::Display for SpectrumData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for (alpha, &mult) in &self.entries {
            for _ in 0..mult {
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "{alpha}")?;
            }
        }
        write!(f, "}}")
    }
}

/// Expand `prod_i (t^{w_i} - t) / (1 - t^{w_i})` exactly. With `Q` the common
/// denominator of the weights this is a quotient of polynomials in `s =
/// t^{1/Q}`; the division must be exact for weights that arise from a
/// weighted-homogeneous isolated singularity, and a nonzero remainder is
/// reported as `InvalidWeights`.
pub fn spectrum_wh(weights: &Weights) -> Result<SpectrumData> {
    let n = weights.num_variables();
    let mut q_common: num_bigint::BigInt = One::one();
    for w in weights.weights() {
        q_common = q_common.lcm(w.denom());
    }
    let q = q_common
        .to_usize()
        .filter(|&q| q > 0 && q <= 1 << 20)
        .ok_or_else(|| {
            Error::InvalidWeights("weight denominators are too large".into())
        })?;

    let mut num = YPoly::one();
    let mut den = YPoly::one();
    for w in weights.weights() {
        let p = (w * Rat::from_integer(q.into()))
            .to_integer()
            .to_usize()
            .expect("weight in (0,1) scaled by the common denominator");
        // s^p (1 - s^{q-p})  /  (1 - s^p)
        let factor_num =
            &YPoly::monomial(p, Rat::one()) - &YPoly::monomial(q, Rat::one());
        let factor_den = &YPoly::one() - &YPoly::monomial(p, Rat::one());
        num = &num * &factor_num;
        den = &den * &factor_den;
    }
    let (quot, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::InvalidWeights(format!(
            "the spectrum product of {:?} is not a polynomial (no weighted-homogeneous \
             isolated singularity has these weights)",
            weights
                .weights()
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
        )));
    }

    let mut entries = BTreeMap::new();
    for (e, c) in quot.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !is_integer(c) || c.is_negative() {
            return Err(Error::InvalidWeights(format!(
                "spectrum multiplicity {c} at exponent {e}/{q} is not a positive integer"
            )));
        }
        let mult = c.to_integer().to_u64().ok_or_else(|| {
            Error::InvalidWeights("spectrum multiplicity overflow".into())
        })?;
        entries.insert(Rat::new(e.into(), q.into()), mult);
    }
    let spectrum = SpectrumData::new(entries, n)?;

    // Cross-check against the classical Milnor number product.
    let expected = weights.milnor_product();
    if Rat::from_integer(spectrum.mu().into()) != expected {
        return Err(Error::InvalidWeights(format!(
            "spectrum cardinality {} disagrees with prod(1/w - 1) = {expected}",
            spectrum.mu()
        )));
    }
    Ok(spectrum)
}

/// Cardinality of the spectrum (the Milnor number).
pub fn milnor_number(s: &SpectrumData) -> u64 {
    s.mu()
}

/// Hodge level of a spectral number.
fn hodge_level(alpha: &Rat, n: usize) -> usize {
    let n_rat = Rat::from_integer(n.into());
    let diff = &n_rat - alpha;
    if is_integer(alpha) {
        diff.to_integer().to_usize().expect("level in range")
    } else {
        crate::rat::floor_int(&diff).to_usize().expect("level in range")
    }
}

/// `chi_y` of the reduced cohomology of the Milnor fiber (concentrated in
/// degree `n - 1` for an isolated singularity).
pub fn chi_y_milnor_fiber(s: &SpectrumData) -> YPoly {
    let sign = if (s.n() + 1) % 2 == 0 { 1i64 } else { -1 }; // (-1)^{n-1}
    let mut acc = YPoly::zero();
    for (alpha, &mult) in s.entries() {
        let p = hodge_level(alpha, s.n());
        let term = YPoly::neg_y_pow(p).scale(&crate::rat::rat_int(sign * mult as i64));
        acc = &acc + &term;
    }
    acc
}

/// An isolated singular point, given either by weights (the spectrum is
/// computed) or by an explicit spectrum.
#[derive(Clone, PartialEq, Debug)]
pub struct IsolatedSingularPoint {
    pub label: String,
    pub data: SingularityData,
}

#[derive(Clone, PartialEq, Debug)]
pub enum SingularityData {
    Weights(Weights),
    Spectrum(SpectrumData),
}

impl IsolatedSingularPoint {
    pub fn from_weights(label: impl Into<String>, w: Weights) -> Self {
        IsolatedSingularPoint { label: label.into(), data: SingularityData::Weights(w) }
    }

    pub fn from_spectrum(label: impl Into<String>, s: SpectrumData) -> Self {
        IsolatedSingularPoint { label: label.into(), data: SingularityData::Spectrum(s) }
    }

    pub fn spectrum(&self) -> Result<SpectrumData> {
        match &self.data {
            SingularityData::Weights(w) => spectrum_wh(w),
            SingularityData::Spectrum(s) => Ok(s.clone()),
        }
    }
}

/// Degree-0 Hirzebruch-Milnor class of a complete intersection with isolated
/// singularities: the sum over singular points of `chi_y` of the reduced
/// Milnor-fiber cohomology. Each point's local variable count must be
/// `dim X + 1` (the Milnor fibration lives on a smooth space one dimension
/// up).
pub fn milnor_class_isolated(
    ci: &CompleteIntersection,
    sings: &[IsolatedSingularPoint],
) -> Result<YPoly> {
    let mut acc = YPoly::zero();
    for s in sings {
        let spectrum = s.spectrum()?;
        if spectrum.n() != ci.dim_x() + 1 {
            return Err(Error::InvalidDimension(format!(
                "singular point {:?} has {} local variables but dim X + 1 = {}",
                s.label,
                spectrum.n(),
                ci.dim_x() + 1
            )));
        }
        acc = &acc + &chi_y_milnor_fiber(&spectrum);
    }
    Ok(acc)
}

/// Degree-0 residual of the Milnor-class identity:
/// `degree(T_y^vir) - chi_y(X) - M_y(X)`, identically zero when the supplied
/// `chi_y` of the actual (singular) member and the singularity data are
/// consistent.
pub fn verify_cor2_degree0(
    ci: &CompleteIntersection,
    sings: &[IsolatedSingularPoint],
    chi_y_of_x: &YPoly,
) -> Result<YPoly> {
    let virtual_genus = virtual_class_via_ty(ci)?.degree_poly()?;
    let milnor = milnor_class_isolated(ci, sings)?;
    Ok(&(&virtual_genus - chi_y_of_x) - &milnor)
}

/// Genus-level driver for the inductive Milnor-class recursion: the total
/// class is the sum of the per-level contributions; a single level is the
/// isolated / hypersurface case where the recursion terminates immediately.
/// An empty list (smooth input) sums to zero.
pub fn hm_recursion_degree0(levels: &[YPoly]) -> YPoly {
    levels.iter().fold(YPoly::zero(), |acc, l| &acc + l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn weights(ws: &[(i64, i64)]) -> Weights {
        Weights::new(ws.iter().map(|&(p, q)| rat(p, q)).collect()).unwrap()
    }

    #[test]
    fn node_spectrum() {
        let s = spectrum_wh(&weights(&[(1, 2), (1, 2), (1, 2)])).unwrap();
        assert_eq!(s.mu(), 1);
        assert_eq!(s.entries().get(&rat(3, 2)), Some(&1));
        assert_eq!(chi_y_milnor_fiber(&s), YPoly::from_ints(&[0, -1]));
    }

    #[test]
    fn cusp_spectrum() {
        let s = spectrum_wh(&weights(&[(1, 3)])).unwrap();
        assert_eq!(s.mu(), 2);
        assert_eq!(s.entries().get(&rat(1, 3)), Some(&1));
        assert_eq!(s.entries().get(&rat(2, 3)), Some(&1));
        // Milnor fiber of x^3 is 3 points: reduced H^0 has rank 2, level 0.
        assert_eq!(chi_y_milnor_fiber(&s), YPoly::from_ints(&[2]));
    }

    #[test]
    fn e8_spectrum() {
        let s = spectrum_wh(&weights(&[(1, 3), (1, 5)])).unwrap();
        assert_eq!(s.mu(), 8);
        assert_eq!(s.entries().get(&rat(8, 15)), Some(&1));
        assert_eq!(s.entries().get(&rat(22, 15)), Some(&1));
    }

    #[test]
    fn e7_needs_nontrivial_division() {
        // x^3 + x y^3: weights (1/3, 2/9); single factors are not polynomials
        // but the product is.
        let s = spectrum_wh(&weights(&[(1, 3), (2, 9)])).unwrap();
        assert_eq!(s.mu(), 7);
    }

    #[test]
    fn integral_spectral_number() {
        // x^2 + y^2: spectrum {1}, Milnor fiber C^*, H^1 is Tate of level 1.
        let s = spectrum_wh(&weights(&[(1, 2), (1, 2)])).unwrap();
        assert_eq!(s.mu(), 1);
        assert_eq!(s.entries().get(&rat(1, 1)), Some(&1));
        assert_eq!(chi_y_milnor_fiber(&s), YPoly::from_ints(&[0, 1]));
    }

    #[test]
    fn inconsistent_weights_are_rejected() {
        // prod(1/w - 1) = 3/2: no weighted-homogeneous isolated singularity
        let w = weights(&[(2, 5), (1, 2)]);
        assert!(matches!(spectrum_wh(&w), Err(Error::InvalidWeights(_))));
    }

    #[test]
    fn euler_characteristic_shadow() {
        for ws in [
            vec![(1, 2), (1, 2), (1, 2)],
            vec![(1, 3)],
            vec![(1, 3), (1, 5)],
            vec![(1, 3), (2, 9)],
        ] {
            let s = spectrum_wh(&weights(&ws)).unwrap();
            let chi = chi_y_milnor_fiber(&s);
            let sign = if (s.n() + 1) % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                chi.eval_int(-1),
                rat(sign * s.mu() as i64, 1),
                "(-1)^(n-1) mu for {ws:?}"
            );
        }
    }

    #[test]
    fn suspension_shifts_by_one_half() {
        let base = spectrum_wh(&weights(&[(1, 3), (1, 5)])).unwrap();
        let suspended = spectrum_wh(&weights(&[(1, 3), (1, 5), (1, 2)])).unwrap();
        assert_eq!(base.suspend().unwrap(), suspended);
    }

    #[test]
    fn milnor_class_additivity_and_dimension_check() {
        let ci = CompleteIntersection::in_projective_space(3, &[3]).unwrap();
        let node = IsolatedSingularPoint::from_weights(
            "node",
            weights(&[(1, 2), (1, 2), (1, 2)]),
        );
        assert_eq!(
            milnor_class_isolated(&ci, &[]).unwrap(),
            YPoly::zero()
        );
        assert_eq!(
            milnor_class_isolated(&ci, std::slice::from_ref(&node)).unwrap(),
            YPoly::from_ints(&[0, -1])
        );
        assert_eq!(
            milnor_class_isolated(&ci, &[node.clone(), node.clone(), node.clone()]).unwrap(),
            YPoly::from_ints(&[0, -3])
        );

        // wrong local dimension is refused
        let curve_node = IsolatedSingularPoint::from_weights(
            "plane node",
            weights(&[(1, 2), (1, 2)]),
        );
        assert!(milnor_class_isolated(&ci, &[curve_node]).is_err());
    }

    #[test]
    fn recursion_driver() {
        assert_eq!(hm_recursion_degree0(&[]), YPoly::zero());
        let single = YPoly::from_ints(&[0, -1]);
        assert_eq!(hm_recursion_degree0(std::slice::from_ref(&single)), single);
        let a = YPoly::from_ints(&[1, 2]);
        let b = YPoly::from_ints(&[0, 0, 5]);
        assert_eq!(hm_recursion_degree0(&[a.clone(), b.clone()]), &a + &b);
    }

    #[test]
    fn explicit_spectrum_is_validated() {
        let mut entries = BTreeMap::new();
        entries.insert(rat(1, 3), 1);
        // not symmetric in (0, 1): 2/3 missing
        assert!(SpectrumData::new(entries, 1).is_err());
    }
}
