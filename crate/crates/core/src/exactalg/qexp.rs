//! Laurent polynomials in `q` with exact rational exponents.
//!
//! The term map is the canonical form: no zero coefficients are stored and
//! exponents are reduced rationals, so two values are equal iff their maps
//! are equal. Arithmetic between terms with different exponent denominators
//! implicitly rescales to the common exponent lattice.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::{exp_int, parse_exp, parse_rat, rat, Exp, Rat};
use crate::{Error, Result};

/// Laurent polynomial `sum c_e q^e` with `e` rational and `c_e` rational.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QExpPoly {
    terms: BTreeMap<Exp, Rat>,
}

impl QExpPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(exp_int(0), rat(1))
    }

    /// The variable `q` itself.
    pub fn q() -> Self {
        Self::monomial(exp_int(1), rat(1))
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(exp_int(0), c)
    }

    /// Single term `c * q^e`; the zero polynomial if `c = 0`.
    pub fn monomial(e: Exp, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// Build from `(exponent, coefficient)` pairs, merging duplicates and
    /// dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Exp, Rat)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(&exp_int(0)).is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exp) -> Rat {
        self.terms.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn min_exp(&self) -> Option<Exp> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<Exp> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest-exponent term; zero for the zero polynomial.
    pub fn leading_coeff(&self) -> Rat {
        self.terms
            .values()
            .next_back()
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, e: Exp, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (*e, a * c))
                .collect(),
        }
    }

    /// Substitute `q -> q^k` for a nonzero rational `k`, i.e. multiply all
    /// exponents by `k`.
    pub fn subst_pow(&self, k: Exp) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::Domain("substitution q -> q^0 collapses the variable".into()));
        }
        Ok(Self {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        })
    }

    /// Substitute `q -> q^{-1}`.
    pub fn invert_q(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Evaluate at `q = 1` (the sum of all coefficients).
    pub fn eval_one(&self) -> Rat {
        self.terms.values().fold(Rat::zero(), |acc, c| acc + c)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// True iff all coefficients are nonnegative integers.
    pub fn has_nonneg_integer_coeffs(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Least common multiple of the exponent denominators (1 for the zero
    /// polynomial); exponents times this are integers.
    pub fn exp_lattice(&self) -> i64 {
        self.terms
            .keys()
            .fold(1i64, |l, e| l.lcm(e.denom()))
    }

    /// Write `self = q^{shift/lattice} * sum_i v[i] u^i` with `u = q^{1/lattice}`
    /// and `v[0] != 0`. Returns `(shift, v)`. Must not be called on zero.
    fn to_int_poly(&self, lattice: i64) -> (i64, Vec<Rat>) {
        let lat = exp_int(lattice);
        let min = (self.min_exp().expect("nonzero polynomial") * lat).to_integer();
        let max = (self.max_exp().unwrap() * lat).to_integer();
        let mut v = vec![Rat::zero(); (max - min + 1) as usize];
        for (e, c) in &self.terms {
            let idx = ((e * lat).to_integer() - min) as usize;
            v[idx] = c.clone();
        }
        (min, v)
    }

    fn from_int_poly(shift: i64, v: &[Rat], lattice: i64) -> Self {
        Self::from_terms(
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (Exp::new(shift + i as i64, lattice), c.clone())),
        )
    }

    /// JSON form `{"terms": [{"exp": "p/q", "coef": "a/b"}, ...]}`, terms
    /// sorted by increasing exponent.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| json!({"exp": e.to_string(), "coef": c.to_string()}))
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Domain("QExpPoly JSON must have a \"terms\" array".into()))?;
        let mut p = Self::zero();
        for t in terms {
            let e = t
                .get("exp")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Domain("term missing \"exp\"".into()))?;
            let c = t
                .get("coef")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Domain("term missing \"coef\"".into()))?;
            p.add_term(parse_exp(e)?, parse_rat(c)?);
        }
        Ok(p)
    }

    /// LaTeX rendering in descending powers, e.g. `q^{2}+q+2+q^{-1}+q^{-2}`
    /// or `q^{1/2}`.
    pub fn latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if latex {
                out.push(if neg { '-' } else { '+' });
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&Self::render_term(&abs, e, latex));
        }
        out
    }

    fn render_term(abs: &Rat, e: &Exp, latex: bool) -> String {
        let qpart = if e.is_zero() {
            String::new()
        } else if e.is_one() {
            "q".into()
        } else if latex {
            format!("q^{{{e}}}")
        } else if e.is_integer() {
            format!("q^{e}")
        } else {
            format!("q^({e})")
        };
        if qpart.is_empty() {
            return Self::render_rat(abs, latex);
        }
        if abs.is_one() {
            return qpart;
        }
        format!("{}{}", Self::render_rat(abs, latex), qpart)
    }

    fn render_rat(r: &Rat, latex: bool) -> String {
        if r.is_integer() {
            r.to_string()
        } else if latex {
            format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
        } else {
            format!("({r})")
        }
    }
}

impl fmt::Display for QExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl fmt::Debug for QExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QExpPoly({self})")
    }
}

impl Add for &QExpPoly {
    type Output = QExpPoly;
    fn add(self, rhs: &QExpPoly) -> QExpPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &QExpPoly {
    type Output = QExpPoly;
    fn sub(self, rhs: &QExpPoly) -> QExpPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &QExpPoly {
    type Output = QExpPoly;
    fn neg(self) -> QExpPoly {
        QExpPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &QExpPoly {
    type Output = QExpPoly;
    fn mul(self, rhs: &QExpPoly) -> QExpPoly {
        let mut out = QExpPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait for QExpPoly {
            type Output = QExpPoly;
            fn $method(self, rhs: QExpPoly) -> QExpPoly {
                (&self).$method(&rhs)
            }
        }
        impl $assign_trait<&QExpPoly> for QExpPoly {
            fn $assign_method(&mut self, rhs: &QExpPoly) {
                *self = (&*self).$method(rhs);
            }
        }
    };
}

forward_owned_binop!(Add, add, AddAssign, add_assign);
forward_owned_binop!(Sub, sub, SubAssign, sub_assign);
forward_owned_binop!(Mul, mul, MulAssign, mul_assign);

impl Neg for QExpPoly {
    type Output = QExpPoly;
    fn neg(self) -> QExpPoly {
        -&self
    }
}

/// The balanced q-integer `[n]_q = q^{(1-n)/2} + q^{(3-n)/2} + ... + q^{(n-1)/2}`.
pub fn qint(n: u32) -> Result<QExpPoly> {
    if n == 0 {
        return Err(Error::Domain("qint requires n >= 1".into()));
    }
    let n = n as i64;
    Ok(QExpPoly::from_terms(
        (0..n).map(|j| (Exp::new(1 - n + 2 * j, 2), rat(1))),
    ))
}

/// The q-factorial `[n]_q! = [1]_q [2]_q ... [n]_q` (empty product for n = 0).
pub fn qfact(n: u32) -> QExpPoly {
    let mut acc = QExpPoly::one();
    for j in 1..=n {
        acc = &acc * &qint(j).expect("j >= 1");
    }
    acc
}

/// The balanced q-binomial `[a choose b]_q = [a]_q! / ([b]_q! [a-b]_q!)`,
/// always a Laurent polynomial, palindromic under `q <-> q^{-1}`.
pub fn qbinom(a: u32, b: u32) -> Result<QExpPoly> {
    if b > a {
        return Err(Error::Domain(format!("qbinom requires b <= a, got ({a}, {b})")));
    }
    exact_div(&qfact(a), &(&qfact(b) * &qfact(a - b)))
}

/// Exact quotient `p / d`; fails with [`Error::Indivisible`] unless
/// `p = quotient * d` holds exactly.
pub fn exact_div(p: &QExpPoly, d: &QExpPoly) -> Result<QExpPoly> {
    if d.is_zero() {
        return Err(Error::Domain("division by the zero polynomial".into()));
    }
    if p.is_zero() {
        return Ok(QExpPoly::zero());
    }
    let lattice = p.exp_lattice().lcm(&d.exp_lattice());
    let (ps, pv) = p.to_int_poly(lattice);
    let (ds, dv) = d.to_int_poly(lattice);
    let (quot, rem) = poly_div_rem(&pv, &dv);
    if !rem.iter().all(Rat::is_zero) {
        return Err(Error::Indivisible(format!("({p}) is not divisible by ({d})")));
    }
    Ok(QExpPoly::from_int_poly(ps - ds, &quot, lattice))
}

/// True iff `p` is fixed by `q -> q^{-1}`.
pub fn is_palindromic(p: &QExpPoly) -> bool {
    *p == p.invert_q()
}

/// Long division of dense rational-coefficient polynomials; returns
/// `(quotient, remainder)` with `deg(remainder) < deg(divisor)`.
pub(crate) fn poly_div_rem(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let dd = deg(den).expect("nonzero divisor");
    let mut rem = num.to_vec();
    let mut quot = vec![Rat::zero(); num.len().saturating_sub(dd)];
    while let Some(dr) = deg(&rem) {
        if dr < dd {
            break;
        }
        let t = &rem[dr] / &den[dd];
        let shift = dr - dd;
        for (i, dc) in den.iter().enumerate().take(dd + 1) {
            rem[shift + i] = &rem[shift + i] - &(&t * dc);
        }
        quot[shift] = t;
    }
    trim(&mut rem);
    (quot, rem)
}

/// Monic gcd of two dense rational-coefficient polynomials.
pub(crate) fn poly_gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, r) = poly_div_rem(&a, &b);
        a = b;
        b = r;
    }
    make_monic(&mut a);
    a
}

fn deg(v: &[Rat]) -> Option<usize> {
    v.iter().rposition(|c| !c.is_zero())
}

fn trim(v: &mut Vec<Rat>) {
    while v.last().is_some_and(Rat::is_zero) {
        v.pop();
    }
}

fn make_monic(v: &mut [Rat]) {
    if let Some(d) = deg(v) {
        let lead = v[d].clone();
        for c in v.iter_mut() {
            *c = &*c / &lead;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::exp_frac;

    #[test]
    fn qint_small_values() {
        assert_eq!(qint(1).unwrap(), QExpPoly::one());
        let q2 = qint(2).unwrap();
        assert_eq!(
            q2,
            QExpPoly::from_terms(vec![(exp_frac(-1, 2), rat(1)), (exp_frac(1, 2), rat(1))])
        );
        // [3]_q = q^{-1} + 1 + q, the symbolic expansion of the defining quotient.
        let q3 = qint(3).unwrap();
        let num = &QExpPoly::monomial(exp_frac(3, 2), rat(1)) - &QExpPoly::monomial(exp_frac(-3, 2), rat(1));
        let den = &QExpPoly::monomial(exp_frac(1, 2), rat(1)) - &QExpPoly::monomial(exp_frac(-1, 2), rat(1));
        assert_eq!(q3, exact_div(&num, &den).unwrap());
        assert_eq!(q3.num_terms(), 3);
        assert!(qint(0).is_err());
    }

    #[test]
    fn qbinom_values() {
        assert_eq!(qbinom(4, 0).unwrap(), QExpPoly::one());
        let b42 = qbinom(4, 2).unwrap();
        let expected = QExpPoly::from_terms(vec![
            (exp_int(-2), rat(1)),
            (exp_int(-1), rat(1)),
            (exp_int(0), rat(2)),
            (exp_int(1), rat(1)),
            (exp_int(2), rat(1)),
        ]);
        assert_eq!(b42, expected);
        assert!(is_palindromic(&b42));
        assert!(b42.has_nonneg_integer_coeffs());
        assert!(qbinom(2, 3).is_err());
    }

    #[test]
    fn qbinom_specializes_to_binomial() {
        let binom = |a: u64, b: u64| {
            let mut v = 1u64;
            for i in 0..b {
                v = v * (a - i) / (i + 1);
            }
            v
        };
        for a in 0..=8u32 {
            for b in 0..=a {
                assert_eq!(
                    qbinom(a, b).unwrap().eval_one(),
                    rat(binom(a as u64, b as u64) as i64)
                );
            }
        }
    }

    #[test]
    fn exact_div_examples() {
        let q2 = qint(2).unwrap();
        // (q + 2 + q^{-1}) / [2]_q = [2]_q
        let p = QExpPoly::from_terms(vec![
            (exp_int(1), rat(1)),
            (exp_int(0), rat(2)),
            (exp_int(-1), rat(1)),
        ]);
        assert_eq!(exact_div(&p, &q2).unwrap(), q2);
        // [4]_q [3]_q / [2]_q = [3]_q (q + q^{-1})
        let prod = &qint(4).unwrap() * &qint(3).unwrap();
        let expect = &qint(3).unwrap()
            * &QExpPoly::from_terms(vec![(exp_int(1), rat(1)), (exp_int(-1), rat(1))]);
        assert_eq!(exact_div(&prod, &q2).unwrap(), expect);
        // q + 2 leaves a remainder
        let bad = QExpPoly::from_terms(vec![(exp_int(1), rat(1)), (exp_int(0), rat(2))]);
        assert!(matches!(exact_div(&bad, &q2), Err(Error::Indivisible(_))));
    }

    #[test]
    fn palindromic_examples() {
        assert!(is_palindromic(&qint(5).unwrap()));
        assert!(!is_palindromic(&QExpPoly::q()));
    }

    #[test]
    fn display_renders_compactly() {
        assert_eq!(qbinom(4, 2).unwrap().latex(), "q^{2}+q+2+q^{-1}+q^{-2}");
        assert_eq!(qint(2).unwrap().to_string(), "q^(1/2) + q^(-1/2)");
        assert_eq!(QExpPoly::zero().to_string(), "0");
        let p = &QExpPoly::one() - &QExpPoly::q();
        assert_eq!(p.to_string(), "-q + 1");
        assert_eq!(p.latex(), "-q+1");
    }

    #[test]
    fn json_round_trip() {
        let p = qbinom(5, 2).unwrap();
        let v = p.to_json();
        assert_eq!(QExpPoly::from_json(&v).unwrap(), p);
        let half = QExpPoly::monomial(exp_frac(1, 2), rat_frac_local(3, 4));
        assert_eq!(QExpPoly::from_json(&half.to_json()).unwrap(), half);
    }

    fn rat_frac_local(n: i64, d: i64) -> Rat {
        crate::exactalg::rat_frac(n, d)
    }
}
