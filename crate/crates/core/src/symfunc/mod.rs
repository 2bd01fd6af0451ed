//! Symmetric-function engine: Schur/power-sum coordinates, symmetric-group
//! character values, the Hall inner product, plethysm with power sums, the
//! substitution `X/(1-t)`, principal specializations, and Schur expansion of
//! symmetric polynomials in finitely many variables.
//!
//! All basis conversions route through power sums with exact rational
//! coefficients; character values come from one memoized Murnaghan-Nakayama
//! kernel.

mod characters;
mod multipoly;
mod plethysm;
mod specialize;

pub use characters::mn_character;
pub use multipoly::{h_poly, schur_expand_poly, schur_poly, MultiPoly};
pub use plethysm::{pleth_sub_coeff, plethysm_coeffs};
pub use specialize::{for_each_ssyt, glr_dim, principal_spec, principal_spec_tableaux, ssyt_count};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::exactalg::{Rat, QExpPoly, QRatFun};
use crate::partitions::{partitions_of, Partition};
use crate::{Error, Result};

/// Coefficient ring for symmetric functions; implemented by [`Rat`],
/// [`QExpPoly`] and [`QRatFun`].
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn coeff_zero() -> Self;
    fn coeff_is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn mul_rat(&self, r: &Rat) -> Self;
    fn coeff_json(&self) -> Value;
}

impl Coeff for Rat {
    fn coeff_zero() -> Self {
        Zero::zero()
    }
    fn coeff_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn mul_rat(&self, r: &Rat) -> Self {
        self * r
    }
    fn coeff_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl Coeff for QExpPoly {
    fn coeff_zero() -> Self {
        QExpPoly::zero()
    }
    fn coeff_is_zero(&self) -> bool {
        QExpPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn mul_rat(&self, r: &Rat) -> Self {
        self.scale(r)
    }
    fn coeff_json(&self) -> Value {
        self.to_json()
    }
}

impl Coeff for QRatFun {
    fn coeff_zero() -> Self {
        QRatFun::zero()
    }
    fn coeff_is_zero(&self) -> bool {
        QRatFun::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn mul_rat(&self, r: &Rat) -> Self {
        self.scale(r)
    }
    fn coeff_json(&self) -> Value {
        self.to_json()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    Schur,
    PowerSum,
}

impl Basis {
    fn name(self) -> &'static str {
        match self {
            Basis::Schur => "schur",
            Basis::PowerSum => "powersum",
        }
    }
}

/// Homogeneous symmetric function: a finite linear combination of
/// basis-labeled partitions of a fixed size.
#[derive(Clone, PartialEq, Debug)]
pub struct SymFunc<C: Coeff> {
    basis: Basis,
    degree: u32,
    terms: BTreeMap<Partition, C>,
}

impl<C: Coeff> SymFunc<C> {
    pub fn zero(basis: Basis, degree: u32) -> Self {
        Self {
            basis,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// A single basis element with coefficient 1... scaled by `c`.
    pub fn single(basis: Basis, label: Partition, c: C) -> Self {
        let degree = label.size();
        let mut f = Self::zero(basis, degree);
        f.add_term(label, c);
        f
    }

    pub fn from_terms<I>(basis: Basis, degree: u32, iter: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, C)>,
    {
        let mut f = Self::zero(basis, degree);
        for (p, c) in iter {
            if p.size() != degree {
                return Err(Error::Domain(format!(
                    "inhomogeneous term {p} in degree-{degree} symmetric function"
                )));
            }
            f.add_term(p, c);
        }
        Ok(f)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, label: &Partition) -> C {
        self.terms.get(label).cloned().unwrap_or_else(C::coeff_zero)
    }

    pub fn add_term(&mut self, label: Partition, c: C) {
        if c.coeff_is_zero() {
            return;
        }
        debug_assert_eq!(label.size(), self.degree);
        match self.terms.get_mut(&label) {
            Some(existing) => {
                *existing = existing.add(&c);
                if existing.coeff_is_zero() {
                    self.terms.remove(&label);
                }
            }
            None => {
                self.terms.insert(label, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis || self.degree != other.degree {
            return Err(Error::Domain("cannot add symmetric functions of mixed basis or degree".into()));
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.coeff_is_zero() {
            return Self::zero(self.basis, self.degree);
        }
        let mut out = Self::zero(self.basis, self.degree);
        for (p, a) in &self.terms {
            out.add_term(p.clone(), a.mul(c));
        }
        out
    }

    /// JSON form `{"basis": "schur", "terms": [...]}` with terms sorted in
    /// descending-lex partition order.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .rev()
            .map(|(p, c)| json!({"partition": p.to_json(), "coef": c.coeff_json()}))
            .collect();
        json!({"basis": self.basis.name(), "degree": self.degree, "terms": terms})
    }
}

impl SymFunc<Rat> {
    /// The Schur function `s_lambda` as a basis vector.
    pub fn schur(label: Partition) -> Self {
        Self::single(Basis::Schur, label, Rat::one())
    }

    /// The power sum `p_rho` as a basis vector.
    pub fn power_sum(label: Partition) -> Self {
        Self::single(Basis::PowerSum, label, Rat::one())
    }

    /// Exact change of basis `s_lambda = sum_rho chi^lambda_rho / z_rho p_rho`.
    pub fn to_powersum(&self) -> Result<Self> {
        match self.basis {
            Basis::PowerSum => Ok(self.clone()),
            Basis::Schur => {
                let mut out = Self::zero(Basis::PowerSum, self.degree);
                for rho in partitions_of(self.degree) {
                    let z = big_to_rat(rho.z_class());
                    let mut acc = Rat::zero();
                    for (lam, c) in &self.terms {
                        let chi = mn_character(lam, &rho)?;
                        acc += c * Rat::from_integer(chi.into());
                    }
                    out.add_term(rho, acc / z);
                }
                Ok(out)
            }
        }
    }

    /// Inverse change of basis `p_rho = sum_lambda chi^lambda_rho s_lambda`.
    pub fn to_schur(&self) -> Result<Self> {
        match self.basis {
            Basis::Schur => Ok(self.clone()),
            Basis::PowerSum => {
                let mut out = Self::zero(Basis::Schur, self.degree);
                for lam in partitions_of(self.degree) {
                    let mut acc = Rat::zero();
                    for (rho, c) in &self.terms {
                        let chi = mn_character(&lam, rho)?;
                        acc += c * Rat::from_integer(chi.into());
                    }
                    out.add_term(lam, acc);
                }
                Ok(out)
            }
        }
    }

    /// Ring product, computed in power-sum coordinates where
    /// `p_rho p_sigma = p_{rho union sigma}`; the result is converted back to
    /// the basis of `self`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let a = self.to_powersum()?;
        let b = other.to_powersum()?;
        let mut out = Self::zero(Basis::PowerSum, self.degree + other.degree);
        for (rho, c1) in &a.terms {
            for (sig, c2) in &b.terms {
                let mut parts = rho.parts().to_vec();
                parts.extend_from_slice(sig.parts());
                parts.sort_unstable_by(|x, y| y.cmp(x));
                out.add_term(Partition::new(parts)?, c1 * c2);
            }
        }
        match self.basis {
            Basis::PowerSum => Ok(out),
            Basis::Schur => out.to_schur(),
        }
    }
}

/// Hall inner product; Schur functions are orthonormal and
/// `<p_rho, p_sigma> = delta z_rho`. Computed in power-sum coordinates.
pub fn hall_inner(f: &SymFunc<Rat>, g: &SymFunc<Rat>) -> Result<Rat> {
    if f.degree() != g.degree() {
        return Err(Error::Domain(format!(
            "Hall pairing needs equal degrees, got {} and {}",
            f.degree(),
            g.degree()
        )));
    }
    let fp = f.to_powersum()?;
    let gp = g.to_powersum()?;
    let mut acc = Rat::zero();
    for (rho, a) in fp.terms() {
        let b = gp.coeff(rho);
        if !b.coeff_is_zero() {
            acc += a * b * big_to_rat(rho.z_class());
        }
    }
    Ok(acc)
}

/// Complete homogeneous symmetric function `h_a` in Schur coordinates
/// (`h_a = s_(a)`); `h_0 = 1`.
pub fn complete_homog(a: u32) -> SymFunc<Rat> {
    SymFunc::schur(Partition::row(a))
}

/// Class function on `S_m`: one rational value per cycle type.
#[derive(Clone, PartialEq, Debug)]
pub struct ClassFunction {
    degree: u32,
    values: BTreeMap<Partition, Rat>,
}

impl ClassFunction {
    /// Requires one value for every cycle type of `S_m`.
    pub fn new(degree: u32, values: BTreeMap<Partition, Rat>) -> Result<Self> {
        for rho in partitions_of(degree) {
            if !values.contains_key(&rho) {
                return Err(Error::Domain(format!("missing class {rho} in class function")));
            }
        }
        if values.len() != partitions_of(degree).len() {
            return Err(Error::Domain("class function has extraneous classes".into()));
        }
        Ok(Self { degree, values })
    }

    /// Build from a rule assigning a value to each cycle type.
    pub fn from_fn(degree: u32, mut f: impl FnMut(&Partition) -> Rat) -> Self {
        let values = partitions_of(degree)
            .into_iter()
            .map(|rho| {
                let v = f(&rho);
                (rho, v)
            })
            .collect();
        Self { degree, values }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn value(&self, rho: &Partition) -> Rat {
        self.values.get(rho).cloned().unwrap_or_else(Rat::zero)
    }

    /// The character of the irreducible module labeled by `lambda`.
    pub fn irreducible(lambda: &Partition) -> Self {
        Self::from_fn(lambda.size(), |rho| {
            Rat::from_integer(mn_character(lambda, rho).expect("equal sizes").into())
        })
    }
}

/// Frobenius characteristic `sum_rho chi(rho)/z_rho p_rho` converted to the
/// Schur basis; irreducible characters map to single Schur functions.
pub fn frobenius_char(chi: &ClassFunction) -> Result<SymFunc<Rat>> {
    let mut f = SymFunc::zero(Basis::PowerSum, chi.degree());
    for rho in partitions_of(chi.degree()) {
        let z = big_to_rat(rho.z_class());
        let v = chi.value(&rho);
        f.add_term(rho, v / z);
    }
    f.to_schur()
}

pub(crate) fn big_to_rat(b: num_bigint::BigInt) -> Rat {
    Rat::from_integer(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::factorial;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn schur_to_powersum_small() {
        let s1 = SymFunc::schur(p(&[1])).to_powersum().unwrap();
        assert_eq!(s1, SymFunc::power_sum(p(&[1])));
        let s2 = SymFunc::schur(p(&[2])).to_powersum().unwrap();
        assert_eq!(s2.coeff(&p(&[1, 1])), crate::exactalg::rat_frac(1, 2));
        assert_eq!(s2.coeff(&p(&[2])), crate::exactalg::rat_frac(1, 2));
    }

    #[test]
    fn basis_round_trip() {
        for m in 0..=8u32 {
            for lam in partitions_of(m) {
                let f = SymFunc::schur(lam.clone());
                assert_eq!(f.to_powersum().unwrap().to_schur().unwrap(), f);
            }
        }
    }

    #[test]
    fn hall_orthonormality() {
        for m in 1..=6u32 {
            for a in partitions_of(m) {
                for b in partitions_of(m) {
                    let v = hall_inner(&SymFunc::schur(a.clone()), &SymFunc::schur(b.clone())).unwrap();
                    let expect = if a == b { crate::exactalg::rat(1) } else { Rat::zero() };
                    assert_eq!(v, expect, "<s_{a}, s_{b}>");
                }
            }
        }
    }

    #[test]
    fn hall_power_sum_norms() {
        let v = hall_inner(&SymFunc::power_sum(p(&[2])), &SymFunc::power_sum(p(&[2]))).unwrap();
        assert_eq!(v, crate::exactalg::rat(2));
        let v = hall_inner(&SymFunc::power_sum(p(&[1, 1])), &SymFunc::schur(p(&[2]))).unwrap();
        assert_eq!(v, crate::exactalg::rat(1));
        assert!(hall_inner(&SymFunc::schur(p(&[2])), &SymFunc::schur(p(&[3]))).is_err());
    }

    #[test]
    fn frobenius_of_standard_characters() {
        let triv = frobenius_char(&ClassFunction::irreducible(&p(&[3]))).unwrap();
        assert_eq!(triv, SymFunc::schur(p(&[3])));
        let sign = frobenius_char(&ClassFunction::irreducible(&p(&[1, 1, 1]))).unwrap();
        assert_eq!(sign, SymFunc::schur(p(&[1, 1, 1])));

        // Regular representation: m! on the identity, 0 elsewhere.
        let regular = ClassFunction::from_fn(3, |rho| {
            if rho.num_rows() == 3 {
                big_to_rat(factorial(3))
            } else {
                Rat::zero()
            }
        });
        let f = frobenius_char(&regular).unwrap();
        let mut expect = SymFunc::zero(Basis::Schur, 3);
        expect.add_term(p(&[3]), crate::exactalg::rat(1));
        expect.add_term(p(&[2, 1]), crate::exactalg::rat(2));
        expect.add_term(p(&[1, 1, 1]), crate::exactalg::rat(1));
        assert_eq!(f, expect);
    }

    #[test]
    fn complete_homog_products() {
        assert_eq!(complete_homog(0), SymFunc::schur(Partition::empty()));
        let h2h1 = complete_homog(2).mul(&complete_homog(1)).unwrap();
        let mut expect = SymFunc::zero(Basis::Schur, 3);
        expect.add_term(p(&[3]), crate::exactalg::rat(1));
        expect.add_term(p(&[2, 1]), crate::exactalg::rat(1));
        assert_eq!(h2h1, expect);

        let h1cubed = complete_homog(1)
            .mul(&complete_homog(1))
            .unwrap()
            .mul(&complete_homog(1))
            .unwrap();
        let mut expect = SymFunc::zero(Basis::Schur, 3);
        expect.add_term(p(&[3]), crate::exactalg::rat(1));
        expect.add_term(p(&[2, 1]), crate::exactalg::rat(2));
        expect.add_term(p(&[1, 1, 1]), crate::exactalg::rat(1));
        assert_eq!(h1cubed, expect);
    }

    #[test]
    fn class_function_validation() {
        let values: BTreeMap<Partition, Rat> =
            [(p(&[2]), Rat::zero())].into_iter().collect();
        assert!(ClassFunction::new(2, values).is_err());
    }
}
