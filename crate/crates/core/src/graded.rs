//! Elements of the truncated cohomology ring of a product of projective
//! spaces, with [`NormCoeff`] coefficients.
//!
//! A multidegree `(e_1, ..., e_m)` indexes the monomial `h_1^{e_1} ... h_m^{e_m}`;
//! the ring relations `h_i^{n_i + 1} = 0` are enforced by silently dropping
//! any product term whose exponents exceed the factor dimensions. Everything
//! lives in even cohomological degree, so multiplication is plainly
//! commutative.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use crate::error::Result;
use crate::geometry::RingDesc;
use crate::norm::NormCoeff;
use crate::rat::{rat_int, Rat};
use crate::ypoly::YPoly;

pub type Multidegree = Vec<u32>;

#[derive(Clone, PartialEq, Debug)]
pub struct GradedClass {
    ring: RingDesc,
    parts: BTreeMap<Multidegree, NormCoeff>,
}

impl GradedClass {
    pub fn zero(ring: &RingDesc) -> Self {
        GradedClass { ring: ring.clone(), parts: BTreeMap::new() }
    }

    pub fn one(ring: &RingDesc) -> Self {
        Self::monomial(ring, &vec![0; ring.num_factors()], NormCoeff::one())
    }

    pub fn constant(ring: &RingDesc, c: NormCoeff) -> Self {
        Self::monomial(ring, &vec![0; ring.num_factors()], c)
    }

    /// `c * h_1^{e_1} ... h_m^{e_m}`, truncated away if out of range.
    pub fn monomial(ring: &RingDesc, multidegree: &[u32], c: NormCoeff) -> Self {
        assert_eq!(multidegree.len(), ring.num_factors(), "multidegree arity");
        let mut parts = BTreeMap::new();
        if !c.is_zero() && ring.in_range(multidegree) {
            parts.insert(multidegree.to_vec(), c);
        }
        GradedClass { ring: ring.clone(), parts }
    }

    /// The hyperplane class of the i-th factor.
    pub fn hyperplane(ring: &RingDesc, i: usize) -> Self {
        let mut md = vec![0; ring.num_factors()];
        md[i] = 1;
        Self::monomial(ring, &md, NormCoeff::one())
    }

    /// `sum_i a_i h_i` for a multidegree vector `a` (degree-1 part of a line
    /// bundle O(a.h)).
    pub fn linear_form(ring: &RingDesc, a: &[u32]) -> Self {
        assert_eq!(a.len(), ring.num_factors());
        let mut acc = Self::zero(ring);
        for (i, &ai) in a.iter().enumerate() {
            if ai > 0 {
                acc = &acc + &Self::hyperplane(ring, i).scale_rat(&rat_int(ai as i64));
            }
        }
        acc
    }

    pub fn ring(&self) -> &RingDesc {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> impl Iterator<Item = (&Multidegree, &NormCoeff)> {
        self.parts.iter()
    }

    pub fn coeff(&self, multidegree: &[u32]) -> NormCoeff {
        self.parts
            .get(multidegree)
            .cloned()
            .unwrap_or_else(NormCoeff::zero)
    }

    fn insert(&mut self, md: Multidegree, c: NormCoeff) {
        if c.is_zero() || !self.ring.in_range(&md) {
            return;
        }
        self.parts.insert(md, c);
    }

    fn add_to(&mut self, md: &[u32], c: &NormCoeff) {
        if c.is_zero() || !self.ring.in_range(md) {
            return;
        }
        let entry = self.parts.entry(md.to_vec()).or_insert_with(NormCoeff::zero);
        *entry = &*entry + c;
        if entry.is_zero() {
            self.parts.remove(md);
        }
    }

    /// The component of total cohomological degree `d`.
    pub fn total_degree_component(&self, d: usize) -> Self {
        let mut out = Self::zero(&self.ring);
        for (md, c) in &self.parts {
            if md.iter().map(|&e| e as usize).sum::<usize>() == d {
                out.insert(md.clone(), c.clone());
            }
        }
        out
    }

    /// Coefficient of the top monomial `h_1^{n_1} ... h_m^{n_m}` (the degree
    /// map, i.e. pushforward to a point).
    pub fn top_coeff(&self) -> NormCoeff {
        self.coeff(&self.ring.top_multidegree())
    }

    pub fn scale(&self, c: &NormCoeff) -> Self {
        let mut out = Self::zero(&self.ring);
        for (md, a) in &self.parts {
            out.insert(md.clone(), a * c);
        }
        out
    }

    pub fn scale_rat(&self, c: &Rat) -> Self {
        self.scale(&NormCoeff::from_rat(c.clone()))
    }

    pub fn scale_poly(&self, p: &YPoly) -> Self {
        self.scale(&NormCoeff::from_poly(p.clone()))
    }

    /// `exp` of a class with no degree-0 part: a finite sum because the
    /// positive-degree part is nilpotent in the truncated ring.
    pub fn exp_nilpotent(&self) -> Result<Self> {
        if !self.coeff(&vec![0; self.ring.num_factors()]).is_zero() {
            return Err(crate::error::Error::SeriesDomain(
                "exp of a graded class needs vanishing degree-0 part".into(),
            ));
        }
        let n = self.ring.total_dim();
        let mut acc = Self::one(&self.ring);
        let mut pow = Self::one(&self.ring);
        let mut factorial = Rat::one();
        for k in 1..=n {
            pow = &pow * self;
            if pow.is_zero() {
                break;
            }
            factorial *= rat_int(k as i64);
            acc = &acc + &pow.scale_rat(&(Rat::one() / &factorial));
        }
        Ok(acc)
    }

    /// Inverse of a class whose degree-0 part is a unit coefficient, by a
    /// finite geometric series on the nilpotent remainder.
    pub fn inv_unit(&self) -> Result<Self> {
        let zero_md = vec![0; self.ring.num_factors()];
        let c0 = self.coeff(&zero_md);
        let c0_inv = c0.inv_unit()?;
        // self = c0 (1 + u) with u nilpotent
        let u = &self.scale(&c0_inv) - &Self::one(&self.ring);
        let n = self.ring.total_dim();
        let mut acc = Self::one(&self.ring);
        let mut pow = Self::one(&self.ring);
        for k in 1..=n {
            pow = &pow * &u;
            if pow.is_zero() {
                break;
            }
            let term = if k % 2 == 0 { pow.clone() } else { -&pow };
            acc = &acc + &term;
        }
        Ok(acc.scale(&c0_inv))
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Apply `clear_denominator` to every coefficient.
    pub fn clear_denominators(&self) -> Result<BTreeMap<Multidegree, YPoly>> {
        self.parts
            .iter()
            .map(|(md, c)| Ok((md.clone(), c.clear_denominator()?)))
            .collect()
    }
}

impl Add for &GradedClass {
    type Output = GradedClass;
    fn add(self, rhs: &GradedClass) -> GradedClass {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        let mut out = self.clone();
        for (md, c) in &rhs.parts {
            out.add_to(md, c);
        }
        out
    }
}

impl Sub for &GradedClass {
    type Output = GradedClass;
    fn sub(self, rhs: &GradedClass) -> GradedClass {
        self + &(-rhs)
    }
}

impl Mul for &GradedClass {
    type Output = GradedClass;
    fn mul(self, rhs: &GradedClass) -> GradedClass {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        let mut out = GradedClass::zero(&self.ring);
        for (a_md, a) in &self.parts {
            for (b_md, b) in &rhs.parts {
                let md: Multidegree = a_md.iter().zip(b_md).map(|(x, y)| x + y).collect();
                if !self.ring.in_range(&md) {
                    continue; // truncated above the dimension bound
                }
                out.add_to(&md, &(a * b));
            }
        }
        out
    }
}

impl Neg for &GradedClass {
    type Output = GradedClass;
    fn neg(self) -> GradedClass {
        GradedClass {
            ring: self.ring.clone(),
            parts: self.parts.iter().map(|(md, c)| (md.clone(), -c)).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($trait:ident :: $m:ident),*) => {$(
        impl $trait for GradedClass {
            type Output = GradedClass;
            fn $m(self, rhs: GradedClass) -> GradedClass { $trait::$m(&self, &rhs) }
        }
        impl $trait<&GradedClass> for GradedClass {
            type Output = GradedClass;
            fn $m(self, rhs: &GradedClass) -> GradedClass { $trait::$m(&self, rhs) }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul);

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        // order by total degree, then lexicographically
        let mut entries: Vec<_> = self.parts.iter().collect();
        entries.sort_by_key(|(md, _)| (md.iter().sum::<u32>(), md.to_vec()));
        let single = self.ring.num_factors() == 1;
        let mut first = true;
        for (md, c) in entries {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = ring_monomial(md, single);
            let coeff = format!("{c}");
            let needs_parens = coeff.contains(' ') && !mono.is_empty();
            match (mono.is_empty(), needs_parens) {
                (true, _) => write!(f, "{coeff}")?,
                (false, true) => write!(f, "({coeff}){mono}")?,
                (false, false) => {
                    if coeff == "1" {
                        write!(f, "{mono}")?;
                    } else if coeff == "-1" {
                        write!(f, "-{mono}")?;
                    } else {
                        write!(f, "{coeff}{mono}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn ring_monomial(md: &[u32], single: bool) -> String {
    let mut s = String::new();
    for (i, &e) in md.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push(' ');
        }
        if single {
            s.push('h');
        } else {
            s.push_str(&format!("h{}", i + 1));
        }
        if e > 1 {
            s.push_str(&format!("^{e}"));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::projective_ring;

    #[test]
    fn truncation_kills_high_powers() {
        let ring = projective_ring(&[2]).unwrap();
        let h = GradedClass::hyperplane(&ring, 0);
        assert!(h.pow(3).is_zero());
        assert!(!h.pow(2).is_zero());
    }

    #[test]
    fn binomial_cube_on_p2() {
        let ring = projective_ring(&[2]).unwrap();
        let one_plus_h = &GradedClass::one(&ring) + &GradedClass::hyperplane(&ring, 0);
        let cube = one_plus_h.pow(3);
        assert_eq!(cube.coeff(&[0]), NormCoeff::one());
        assert_eq!(cube.coeff(&[1]), NormCoeff::from_int(3));
        assert_eq!(cube.coeff(&[2]), NormCoeff::from_int(3));
        assert_eq!(cube.to_string(), "1 + 3h + 3h^2");
    }

    #[test]
    fn top_coefficient_is_the_degree_map() {
        let ring = projective_ring(&[1, 1]).unwrap();
        let h1 = GradedClass::hyperplane(&ring, 0);
        let h2 = GradedClass::hyperplane(&ring, 1);
        assert_eq!((&h1 * &h2).top_coeff(), NormCoeff::one());
        assert!((&h1 * &h1).is_zero());
    }

    #[test]
    fn inverse_of_unit_class() {
        let ring = projective_ring(&[3]).unwrap();
        let h = GradedClass::hyperplane(&ring, 0);
        let u = &GradedClass::one(&ring) + &h.scale_rat(&rat_int(4));
        let inv = u.inv_unit().unwrap();
        assert_eq!(&u * &inv, GradedClass::one(&ring));
    }

    #[test]
    fn exp_of_nilpotent() {
        let ring = projective_ring(&[2]).unwrap();
        let h = GradedClass::hyperplane(&ring, 0);
        let e = h.exp_nilpotent().unwrap();
        assert_eq!(e.coeff(&[0]), NormCoeff::one());
        assert_eq!(e.coeff(&[1]), NormCoeff::one());
        assert_eq!(e.coeff(&[2]), NormCoeff::from_rat(crate::rat::rat(1, 2)));
        assert!(GradedClass::one(&ring).exp_nilpotent().is_err());
    }
}
