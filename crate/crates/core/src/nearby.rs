//! Genus-level nearby-cycle calculus on simple-normal-crossing resolution
//! data: stratification additivity, the motivic nearby fiber with its
//! `(1+y)^{|I|-1}` cover weights, inclusion-exclusion over compactification
//! boundaries, and the logarithmic-de-Rham route for trivial coefficients.
//!
//! The covers of the open strata are not constructed here; their
//! compactified genus tables are input data. The engine supplies the
//! structural bookkeeping: GCD multiplicities, the `(1+y)^{|I|-1}` factor,
//! the `(-1)^{|J|}` boundary signs, the Lambda' restriction and the Sigma
//! correction terms.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::classes::{normalize_1py, HomologyClass};
use crate::error::{Error, Result};
use crate::genus::{lambda_y_character, multiplicative_class, standard_series, SeriesKind};
use crate::geometry::{fundamental_class, virtual_tangent, CompleteIntersection, RingDesc};
use crate::graded::GradedClass;
use crate::ypoly::YPoly;

/// One stratum of a stratification, with its compactly-supported genus and
/// the genus of the (constant-rank) stalk data living on it.
#[derive(Clone, PartialEq, Debug)]
pub struct StratumGenus {
    pub label: String,
    pub chi_c: YPoly,
    pub local_factor: YPoly,
}

impl StratumGenus {
    pub fn new(label: impl Into<String>, chi_c: YPoly, local_factor: YPoly) -> Self {
        StratumGenus { label: label.into(), chi_c, local_factor }
    }
}

/// Genus shadow of stratification additivity: each stratum contributes its
/// compactly-supported genus weighted by the genus of its stalk data.
pub fn strat_additivity(strata: &[StratumGenus]) -> YPoly {
    strata.iter().fold(YPoly::zero(), |acc, s| {
        &acc + &(&s.chi_c * &s.local_factor)
    })
}

/// Inclusion-exclusion over the boundary pieces of a smooth
/// compactification: `sum_J (-1)^{|J|} chi_y(E~_{I,J})`. The table lists
/// `(|J|, chi_y)` pairs and must contain the `|J| = 0` entry (the
/// compactification itself).
pub fn incl_excl_open(table: &[(usize, YPoly)]) -> Result<YPoly> {
    if !table.iter().any(|(j, _)| *j == 0) {
        return Err(Error::MissingCompactification);
    }
    let mut acc = YPoly::zero();
    for (j, chi) in table {
        let term = if j % 2 == 0 { chi.clone() } else { -chi };
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Combinatorial record of one stratum `E_I` of an embedded SNC resolution.
#[derive(Clone, PartialEq, Debug)]
pub struct SncStratum {
    /// Component ids in `I` (nonempty).
    pub components: BTreeSet<usize>,
    /// Whether `E_I` lies over the singular locus (`I` in Lambda').
    pub over_sigma: bool,
    /// Genus table `(|J|, chi_y(E~_{I,J}))` for the compactified cover of
    /// the open stratum and its boundary intersections.
    pub cover_pieces: Vec<(usize, YPoly)>,
}

/// Embedded SNC resolution data, reduced to what the genus-level formula
/// consumes.
#[derive(Clone, PartialEq, Debug)]
pub struct SncResolution {
    /// `(component id, multiplicity m_i >= 1)`.
    components: Vec<(usize, u64)>,
    strata: Vec<SncStratum>,
    /// `chi_y` of the singular locus Sigma (the correction term subtracted
    /// in the phi-variant).
    sigma_chi: YPoly,
    /// `chi_y` of Sigma intersected with the auxiliary hyperplane section.
    sigma_cap_xprime_chi: YPoly,
}

impl SncResolution {
    pub fn new(
        components: Vec<(usize, u64)>,
        strata: Vec<SncStratum>,
        sigma_chi: YPoly,
        sigma_cap_xprime_chi: YPoly,
    ) -> Result<Self> {
        let ids: BTreeSet<usize> = components.iter().map(|&(id, _)| id).collect();
        if ids.len() != components.len() {
            return Err(Error::InvalidInput("duplicate component id".into()));
        }
        for &(id, m) in &components {
            if m < 1 {
                return Err(Error::InvalidInput(format!(
                    "component {id} has multiplicity 0"
                )));
            }
        }
        for s in &strata {
            if s.components.is_empty() {
                return Err(Error::MissingStratumData("empty component set".into()));
            }
            for c in &s.components {
                if !ids.contains(c) {
                    return Err(Error::MissingStratumData(format!(
                        "stratum references unknown component {c}"
                    )));
                }
            }
            if s.cover_pieces.is_empty() {
                return Err(Error::MissingStratumData(format!(
                    "stratum {:?} has no cover genus data",
                    s.components
                )));
            }
        }
        Ok(SncResolution { components, strata, sigma_chi, sigma_cap_xprime_chi })
    }

    pub fn components(&self) -> &[(usize, u64)] {
        &self.components
    }

    pub fn strata(&self) -> &[SncStratum] {
        &self.strata
    }

    /// Cover degree `m_I = gcd(m_i : i in I)`, computed on demand.
    pub fn cover_multiplicity(&self, stratum: &SncStratum) -> u64 {
        self.components
            .iter()
            .filter(|(id, _)| stratum.components.contains(id))
            .map(|&(_, m)| m)
            .fold(0u64, |acc, m| acc.gcd(&m))
    }
}

/// Degree-0 motivic nearby and vanishing genera from SNC resolution data.
///
/// `psi` sums every stratum's inclusion-exclusion genus weighted by
/// `(1+y)^{|I|-1}`; `phi_on_sigma` restricts to the strata over Sigma and
/// applies the two Sigma correction terms. The binomial stalk multiplicities
/// `C(|I|-1, i)` of the underlying local computation are resummed here into
/// the single `(1+y)^{|I|-1}` factor (see the `binomial_resummation` test).
pub fn motivic_nearby_degree0(r: &SncResolution) -> Result<(YPoly, YPoly)> {
    let mut psi = YPoly::zero();
    let mut phi = YPoly::zero();
    for s in r.strata() {
        let open_genus = incl_excl_open(&s.cover_pieces)?;
        let weight = YPoly::one_plus_y_pow(s.components.len() - 1);
        let contribution = &open_genus * &weight;
        psi = &psi + &contribution;
        if s.over_sigma {
            phi = &phi + &contribution;
        }
    }
    phi = &(&phi - &r.sigma_chi) + &r.sigma_cap_xprime_chi;
    Ok((psi, phi))
}

/// A smooth ambient space with an SNC divisor given by component
/// multidegrees.
#[derive(Clone, PartialEq, Debug)]
pub struct LogPair {
    ring: RingDesc,
    divisors: Vec<Vec<u32>>,
}

impl LogPair {
    pub fn new(ring: RingDesc, divisors: Vec<Vec<u32>>) -> Result<Self> {
        for a in &divisors {
            if a.len() != ring.num_factors() {
                return Err(Error::InvalidDimension(format!(
                    "divisor multidegree {a:?} has arity {} but the ring has {} factors",
                    a.len(),
                    ring.num_factors()
                )));
            }
            if a.contains(&0) {
                return Err(Error::InvalidDimension(
                    "divisor multidegrees must be positive in every factor".into(),
                ));
            }
        }
        Ok(LogPair { ring, divisors })
    }

    pub fn ring(&self) -> &RingDesc {
        &self.ring
    }

    pub fn divisors(&self) -> &[Vec<u32>] {
        &self.divisors
    }
}

/// Class of the open complement through logarithmic forms, for the trivial
/// local system: `sum_q (-1)^q td_{(1+y)*}[ O(-D) (x) Omega^q_Z(log D) ] (-y)^q`.
///
/// The twist by `O(-D)` is the Deligne extension with residue eigenvalues in
/// `(0, 1]`, which is what makes this the class of the extension by zero.
/// The residue filtration turns `Omega^q_Z(log D)` into the pushforwards of
/// plain form bundles on the intersection strata `D_J`, so the whole sum
/// regroups as `sum_J y^{|J|} td_{(1+y)*}[ Lambda_y T*D_J (x) O(-D)|_{D_J} ]`
/// with every `D_J` a smooth complete intersection in `Z`.
pub fn log_dr_trivial(pair: &LogPair) -> Result<HomologyClass> {
    let ring = pair.ring();
    let n = ring.total_dim();
    let m = ring.num_factors();
    let k = pair.divisors.len();

    // total divisor class for the O(-D) twist
    let mut d_total = vec![0u32; m];
    for a in &pair.divisors {
        for (t, &ai) in d_total.iter_mut().zip(a) {
            *t += ai;
        }
    }
    let twist_ch = line_chern_character_negative(ring, &d_total)?;

    let todd_series = standard_series(SeriesKind::Todd, n);
    let mut total = GradedClass::zero(ring);
    for mask in 0u32..(1 << k) {
        let subset: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        if subset.len() > n {
            continue; // empty intersection
        }
        let degrees: Vec<Vec<u32>> = subset.iter().map(|&i| pair.divisors[i].clone()).collect();
        let ci = CompleteIntersection::new(ring.clone(), degrees)?;
        let t_vir = virtual_tangent(&ci);
        let lambda = lambda_y_character(&t_vir, ring)?;
        let todd = multiplicative_class(&todd_series, &t_vir, ring)?;
        let term = &(&(&lambda * &todd) * &twist_ch) * &fundamental_class(&ci);
        total = &total + &term.scale_poly(&YPoly::monomial(subset.len(), num_traits::One::one()));
    }
    let class = normalize_1py(&HomologyClass::new(total, n));
    class.clear_denominators()?; // the total is an honest polynomial class
    Ok(class)
}

/// `ch(O(-a.h)) = exp(-sum a_i h_i)`.
fn line_chern_character_negative(ring: &RingDesc, a: &[u32]) -> Result<GradedClass> {
    let lin = GradedClass::linear_form(ring, a);
    (-&lin).exp_nilpotent()
}
