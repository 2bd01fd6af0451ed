//! Canonically reduced rational functions of `q`.
//!
//! The canonical form clears both parts to a common exponent lattice, divides
//! out the polynomial gcd in the lattice variable, and normalizes the
//! denominator so that its lowest-exponent term is `1` at exponent `0` (any
//! monomial shift moves into the numerator). Equality is then structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::Zero;
use serde_json::{json, Value};

use super::qexp::{poly_div_rem, poly_gcd};
use super::{QExpPoly, Rat};
use crate::exactalg::Exp;
use crate::{Error, Result};

/// Reduced fraction of two Laurent polynomials in `q`.
#[derive(Clone, PartialEq, Eq)]
pub struct QRatFun {
    num: QExpPoly,
    den: QExpPoly,
}

impl QRatFun {
    /// Canonical reduced form of `num / den`. This is the only constructor,
    /// so every held value is canonical.
    pub fn new(num: QExpPoly, den: QExpPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("rational function with zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self {
                num: QExpPoly::zero(),
                den: QExpPoly::one(),
            });
        }
        let lattice = num.exp_lattice().lcm(&den.exp_lattice());
        let (ns, mut nv) = int_parts(&num, lattice);
        let (ds, mut dv) = int_parts(&den, lattice);
        let g = poly_gcd(&nv, &dv);
        if g.len() > 1 {
            nv = exact_quot(&nv, &g);
            dv = exact_quot(&dv, &g);
        }
        // dv[0] != 0: a vanishing constant term would mean u divides the
        // original denominator part, which int_parts already factored out.
        let c = dv[0].clone();
        let num = from_scaled(ns - ds, &nv, &c, lattice);
        let den = from_scaled(0, &dv, &c, lattice);
        Ok(Self { num, den })
    }

    pub fn from_poly(p: QExpPoly) -> Self {
        Self {
            num: p,
            den: QExpPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(QExpPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(QExpPoly::one())
    }

    pub fn num(&self) -> &QExpPoly {
        &self.num
    }

    pub fn den(&self) -> &QExpPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True iff the canonical denominator is exactly 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&QExpPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("inverse of zero".into()));
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self {
            num: self.num.scale(c),
            den: if c.is_zero() { QExpPoly::one() } else { self.den.clone() },
        }
    }

    pub fn mul_poly(&self, p: &QExpPoly) -> Self {
        Self::new(&self.num * p, self.den.clone()).expect("denominator unchanged")
    }

    /// Laurent expansion in descending powers of `q`, truncated to exponents
    /// `>= cutoff`. When the denominator divides exactly, the full
    /// polynomial quotient is returned regardless of the cutoff.
    pub fn expand_desc(&self, cutoff: Exp) -> QExpPoly {
        if self.is_polynomial() {
            return self.num.clone();
        }
        let mut out = QExpPoly::zero();
        let mut rest = self.num.clone();
        let lead_exp = match self.den.max_exp() {
            Some(e) => e,
            None => unreachable!("denominator is nonzero"),
        };
        let lead_coeff = self.den.leading_coeff();
        while let Some(top) = rest.max_exp() {
            let e = top - lead_exp;
            if e < cutoff {
                break;
            }
            let t = QExpPoly::monomial(e, rest.leading_coeff() / lead_coeff.clone());
            out = &out + &t;
            rest = &rest - &(&t * &self.den);
        }
        out
    }

    /// JSON form `{"num": {...}, "den": {...}}` with both parts in the
    /// canonical QExpPoly encoding.
    pub fn to_json(&self) -> Value {
        json!({ "num": self.num.to_json(), "den": self.den.to_json() })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let num = v
            .get("num")
            .ok_or_else(|| Error::Domain("QRatFun JSON must have \"num\"".into()))?;
        let den = v
            .get("den")
            .ok_or_else(|| Error::Domain("QRatFun JSON must have \"den\"".into()))?;
        Self::new(QExpPoly::from_json(num)?, QExpPoly::from_json(den)?)
    }

    /// Numerator and denominator with the sign arranged so the denominator's
    /// leading (highest-power) coefficient is positive; display only, the
    /// canonical form is unchanged.
    fn display_parts(&self) -> (QExpPoly, QExpPoly) {
        if self.den.leading_coeff() < num_traits::Zero::zero() {
            (-&self.num, -&self.den)
        } else {
            (self.num.clone(), self.den.clone())
        }
    }

    pub fn latex(&self) -> String {
        if self.is_polynomial() {
            self.num.latex()
        } else {
            let (num, den) = self.display_parts();
            format!("\\frac{{{}}}{{{}}}", num.latex(), den.latex())
        }
    }
}

impl fmt::Display for QRatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            let (num, den) = self.display_parts();
            write!(f, "({num}) / ({den})")
        }
    }
}

impl fmt::Debug for QRatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRatFun({self})")
    }
}

impl Add for &QRatFun {
    type Output = QRatFun;
    fn add(self, rhs: &QRatFun) -> QRatFun {
        QRatFun::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominators")
    }
}

impl Sub for &QRatFun {
    type Output = QRatFun;
    fn sub(self, rhs: &QRatFun) -> QRatFun {
        self + &(-rhs)
    }
}

impl Mul for &QRatFun {
    type Output = QRatFun;
    fn mul(self, rhs: &QRatFun) -> QRatFun {
        QRatFun::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominators")
    }
}

impl Neg for &QRatFun {
    type Output = QRatFun;
    fn neg(self) -> QRatFun {
        QRatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for QRatFun {
    type Output = QRatFun;
    fn add(self, rhs: QRatFun) -> QRatFun {
        &self + &rhs
    }
}

impl Sub for QRatFun {
    type Output = QRatFun;
    fn sub(self, rhs: QRatFun) -> QRatFun {
        &self - &rhs
    }
}

impl Mul for QRatFun {
    type Output = QRatFun;
    fn mul(self, rhs: QRatFun) -> QRatFun {
        &self * &rhs
    }
}

impl Neg for QRatFun {
    type Output = QRatFun;
    fn neg(self) -> QRatFun {
        -&self
    }
}

/// `p = q^{shift/lattice} * sum v[i] u^i` with `v[0] != 0`.
fn int_parts(p: &QExpPoly, lattice: i64) -> (i64, Vec<Rat>) {
    let min = (p.min_exp().expect("nonzero") * Exp::from_integer(lattice)).to_integer();
    let max = (p.max_exp().unwrap() * Exp::from_integer(lattice)).to_integer();
    let mut v = vec![Rat::zero(); (max - min + 1) as usize];
    for (e, c) in p.terms() {
        v[((e * Exp::from_integer(lattice)).to_integer() - min) as usize] = c.clone();
    }
    (min, v)
}

fn exact_quot(num: &[Rat], den: &[Rat]) -> Vec<Rat> {
    let (q, r) = poly_div_rem(num, den);
    debug_assert!(r.iter().all(Rat::is_zero), "gcd division must be exact");
    q
}

fn from_scaled(shift: i64, v: &[Rat], c: &Rat, lattice: i64) -> QExpPoly {
    QExpPoly::from_terms(
        v.iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| (Exp::new(shift + i as i64, lattice), a / c)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{exp_int, qint, rat};

    fn qpow(e: i64) -> QExpPoly {
        QExpPoly::monomial(exp_int(e), rat(1))
    }

    #[test]
    fn normalize_cancels_common_factor() {
        // (1 - q^{-2}) / (1 - q^{-1}) = 1 + q^{-1}
        let num = &QExpPoly::one() - &qpow(-2);
        let den = &QExpPoly::one() - &qpow(-1);
        let f = QRatFun::new(num, den).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(*f.num(), &QExpPoly::one() + &qpow(-1));
    }

    #[test]
    fn normalize_q_over_q() {
        let f = QRatFun::new(QExpPoly::q(), QExpPoly::q()).unwrap();
        assert_eq!(f, QRatFun::one());
    }

    #[test]
    fn normalize_denominator_lowest_term_is_one() {
        // 1 / (1 - q^{-2}) has canonical form -q^2 / (1 - q^2).
        let f = QRatFun::new(QExpPoly::one(), &QExpPoly::one() - &qpow(-2)).unwrap();
        assert_eq!(*f.den(), &QExpPoly::one() - &qpow(2));
        assert_eq!(*f.num(), -&qpow(2));
        assert_eq!(f.den().min_exp(), Some(exp_int(0)));
        assert_eq!(f.den().coeff(&exp_int(0)), rat(1));
    }

    #[test]
    fn normalization_is_idempotent() {
        let f = QRatFun::new(qint(4).unwrap(), &QExpPoly::one() - &qpow(-3)).unwrap();
        let again = QRatFun::new(f.num().clone(), f.den().clone()).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn expand_desc_geometric() {
        // 1/(1-q^{-1}) = 1 + q^{-1} + q^{-2} + ...
        let f = QRatFun::new(QExpPoly::one(), &QExpPoly::one() - &qpow(-1)).unwrap();
        let s = f.expand_desc(exp_int(-3));
        let expect = QExpPoly::from_terms((-3..=0).map(|e| (exp_int(e), rat(1))));
        assert_eq!(s, expect);
    }

    #[test]
    fn expand_desc_exact_quotient() {
        let f = QRatFun::new(&qint(2).unwrap() * &qint(3).unwrap(), qint(3).unwrap()).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.expand_desc(exp_int(0)), qint(2).unwrap());
    }

    #[test]
    fn arithmetic_reduces() {
        // q/(q-1) - 1/(q-1) = 1
        let den = &QExpPoly::q() - &QExpPoly::one();
        let a = QRatFun::new(QExpPoly::q(), den.clone()).unwrap();
        let b = QRatFun::new(QExpPoly::one(), den).unwrap();
        assert_eq!(&a - &b, QRatFun::one());
    }

    #[test]
    fn json_round_trip() {
        let f = QRatFun::new(qint(3).unwrap(), &QExpPoly::one() - &qpow(-2)).unwrap();
        assert_eq!(QRatFun::from_json(&f.to_json()).unwrap(), f);
    }
}
