//! Graded characters and dimensions of the finite-dimensional and minimally
//! supported modules over the quantized Gieseker algebras, together with the
//! generating function `D(z)`, the symmetry report, and the q-Catalan family
//! `C^d`.
//!
//! Conventions: `[W_r(mu)*]` denotes the class of the dual irreducible, so a
//! torus expansion evaluates `s_mu(q_1^{-1}, ..., q_r^{-1})` and all torus
//! exponents are nonpositive. Fractional `q`-exponents such as
//! `(n/m) kappa(beta)` are kept exact.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::exactalg::{
    exact_div, exp_int, is_palindromic, parse_exp, parse_rat, qbinom, qint, rat, Exp, QExpPoly,
    QRatFun, Rat,
};
use crate::partitions::{binomial, gcd, partitions_of, Partition};
use crate::symfunc::{
    big_to_rat, for_each_ssyt, glr_dim, pleth_sub_coeff, plethysm_coeffs, principal_spec, Basis,
    SymFunc,
};
use crate::{Error, Result};

/// Virtual graded `GL_r`-character: a finite sum of classes `[W_r(mu)*]`
/// with rational-function multiplicities. For the finite-dimensional module
/// every multiplicity reduces to a Laurent polynomial.
#[derive(Clone, PartialEq, Debug)]
pub struct GLChar {
    r: u32,
    coeffs: BTreeMap<Partition, QRatFun>,
}

impl GLChar {
    pub fn new(r: u32, coeffs: BTreeMap<Partition, QRatFun>) -> Result<Self> {
        for mu in coeffs.keys() {
            if mu.num_rows() > r as usize {
                return Err(Error::Domain(format!(
                    "partition {mu} has more than r = {r} rows"
                )));
            }
        }
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Self { r, coeffs })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Partition, &QRatFun)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, mu: &Partition) -> QRatFun {
        self.coeffs.get(mu).cloned().unwrap_or_else(QRatFun::zero)
    }

    /// True iff every multiplicity is a Laurent polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.coeffs.values().all(QRatFun::is_polynomial)
    }

    /// JSON form `{"r": r, "terms": [{"partition": [...], "coef": {...}}]}`,
    /// terms in descending-lex partition order.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .coeffs
            .iter()
            .rev()
            .map(|(p, c)| json!({"partition": p.to_json(), "coef": c.to_json()}))
            .collect();
        json!({"r": self.r, "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let r = v
            .get("r")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Domain("GLChar JSON must have \"r\"".into()))? as u32;
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Domain("GLChar JSON must have \"terms\"".into()))?;
        let mut coeffs = BTreeMap::new();
        for t in terms {
            let p = Partition::from_json(
                t.get("partition")
                    .ok_or_else(|| Error::Domain("term missing \"partition\"".into()))?,
            )?;
            let c = QRatFun::from_json(
                t.get("coef")
                    .ok_or_else(|| Error::Domain("term missing \"coef\"".into()))?,
            )?;
            coeffs.insert(p, c);
        }
        Self::new(r, coeffs)
    }

    /// LaTeX in the display style `W^{*}_{(2,1)} + (q+q^{-1})W^{*}_{(3)}`,
    /// terms in ascending-lex partition order.
    pub fn latex(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|(p, c)| {
                let w = format!("W^{{*}}_{{{}}}", p.latex());
                if c.is_polynomial() && c.num().is_one() {
                    w
                } else if c.is_polynomial() && c.num().num_terms() == 1 {
                    format!("{}{}", c.latex(), w)
                } else {
                    format!("({}){}", c.latex(), w)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for GLChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in &self.coeffs {
            if !first {
                writeln!(f)?;
            }
            write!(f, "{p}: {c}")?;
            first = false;
        }
        Ok(())
    }
}

/// A monomial `q^{q_exp} q_1^{t_exps[0]} ... q_r^{t_exps[r-1]}` of the full
/// torus `C* x T_0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TorusMono {
    pub q_exp: Exp,
    pub t_exps: Vec<i64>,
}

/// Exact character of the full torus: finitely many monomials with rational
/// coefficients, symmetric under permuting the `q_i`.
#[derive(Clone, PartialEq, Debug)]
pub struct TorusChar {
    r: u32,
    terms: BTreeMap<TorusMono, Rat>,
}

impl TorusChar {
    pub fn zero(r: u32) -> Self {
        Self {
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TorusMono, &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, mono: TorusMono, c: Rat) {
        debug_assert_eq!(mono.t_exps.len(), self.r as usize);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Total value at `q = q_1 = ... = q_r = 1`: the graded dimension.
    pub fn eval_all_one(&self) -> Rat {
        self.terms.values().fold(Rat::zero(), |acc, c| acc + c)
    }

    /// Erase the `q`-grading (set `q = 1`), keeping the `T_0`-character.
    pub fn forget_q(&self) -> TorusChar {
        let mut out = TorusChar::zero(self.r);
        for (mono, c) in &self.terms {
            out.add_term(
                TorusMono {
                    q_exp: exp_int(0),
                    t_exps: mono.t_exps.clone(),
                },
                c.clone(),
            );
        }
        out
    }

    /// Project to the `C*`-character (set all `q_i = 1`).
    pub fn cx_project(&self) -> QExpPoly {
        let mut out = QExpPoly::zero();
        for (mono, c) in &self.terms {
            out.add_term(mono.q_exp, c.clone());
        }
        out
    }

    /// True iff the term multiset is invariant under permuting the torus
    /// exponents (checked on adjacent transpositions).
    pub fn is_symmetric(&self) -> bool {
        for k in 0..(self.r as usize).saturating_sub(1) {
            for (mono, c) in &self.terms {
                let mut swapped = mono.clone();
                swapped.t_exps.swap(k, k + 1);
                if self.terms.get(&swapped) != Some(c) {
                    return false;
                }
            }
        }
        true
    }

    /// JSON form with exponent tuples:
    /// `{"r": r, "terms": [{"q_exp": "1/2", "t_exps": [-3, 0], "coef": "2"}]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                json!({
                    "q_exp": m.q_exp.to_string(),
                    "t_exps": m.t_exps,
                    "coef": c.to_string(),
                })
            })
            .collect();
        json!({"r": self.r, "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let r = v
            .get("r")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Domain("TorusChar JSON must have \"r\"".into()))? as u32;
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Domain("TorusChar JSON must have \"terms\"".into()))?;
        let mut out = Self::zero(r);
        for t in terms {
            let q_exp = parse_exp(
                t.get("q_exp")
                    .and_then(Value::as_str)
                    .ok_or_else(|| Error::Domain("term missing \"q_exp\"".into()))?,
            )?;
            let t_exps = t
                .get("t_exps")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Domain("term missing \"t_exps\"".into()))?
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| Error::Domain("bad torus exponent".into())))
                .collect::<Result<Vec<i64>>>()?;
            let c = parse_rat(
                t.get("coef")
                    .and_then(Value::as_str)
                    .ok_or_else(|| Error::Domain("term missing \"coef\"".into()))?,
            )?;
            if t_exps.len() != r as usize {
                return Err(Error::Domain("torus exponent tuple has wrong length".into()));
            }
            out.add_term(TorusMono { q_exp, t_exps }, c);
        }
        Ok(out)
    }

    fn render(&self, latex: bool) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (mono, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if latex {
                out.push(if neg { '-' } else { '+' });
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            let mut body = String::new();
            if !mono.q_exp.is_zero() {
                body.push_str(&render_var("q", &mono.q_exp, latex));
            }
            for (j, &e) in mono.t_exps.iter().enumerate() {
                if e != 0 {
                    let name = if latex {
                        format!("q_{{{}}}", j + 1)
                    } else {
                        format!("q{}", j + 1)
                    };
                    body.push_str(&render_var(&name, &exp_int(e), latex));
                }
            }
            if body.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&body);
            } else {
                out.push_str(&format!("{abs}{body}"));
            }
        }
        out
    }

    pub fn latex(&self) -> String {
        self.render(true)
    }
}

fn render_var(name: &str, e: &Exp, latex: bool) -> String {
    if e.is_one() {
        name.to_string()
    } else if latex {
        format!("{name}^{{{e}}}")
    } else if e.is_integer() {
        format!("{name}^{e}")
    } else {
        format!("{name}^({e})")
    }
}

impl fmt::Display for TorusChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// Graded decomposition of a module over the rational Cherednik algebra as a
/// virtual sum of irreducible `S_n`-modules `[V_lambda]` with Laurent
/// polynomial multiplicities.
#[derive(Clone, PartialEq, Debug)]
pub struct GradedSnChar {
    n: u32,
    coeffs: BTreeMap<Partition, QExpPoly>,
}

impl GradedSnChar {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Partition, &QExpPoly)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, lam: &Partition) -> QExpPoly {
        self.coeffs.get(lam).cloned().unwrap_or_else(QExpPoly::zero)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .coeffs
            .iter()
            .rev()
            .map(|(p, c)| json!({"partition": p.to_json(), "coef": c.to_json()}))
            .collect();
        json!({"n": self.n, "terms": terms})
    }

    pub fn latex(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|(p, c)| {
                let v = format!("V_{{{}}}", p.latex());
                if c.is_one() {
                    v
                } else if c.num_terms() == 1 {
                    format!("{}{}", c.latex(), v)
                } else {
                    format!("({}){}", c.latex(), v)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for GradedSnChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in &self.coeffs {
            if !first {
                writeln!(f)?;
            }
            write!(f, "{p}: {c}")?;
            first = false;
        }
        Ok(())
    }
}

/// Coefficient of `z^m` in the generating function `D(z)`: an honest torus
/// character when the division by `[n]_q` is exact, and a flagged
/// rational-function expansion otherwise.
#[derive(Clone, PartialEq, Debug)]
pub enum GenFunCoeff {
    Exact(TorusChar),
    /// Non-coprime parameters can leave genuine denominators; the value is
    /// recorded per torus weight.
    NonIntegral { r: u32, terms: BTreeMap<Vec<i64>, QRatFun> },
}

impl GenFunCoeff {
    pub fn nonintegral(&self) -> bool {
        matches!(self, GenFunCoeff::NonIntegral { .. })
    }

    pub fn to_json(&self) -> Value {
        match self {
            GenFunCoeff::Exact(t) => {
                let mut v = t.to_json();
                v.as_object_mut()
                    .expect("object")
                    .insert("nonintegral".into(), Value::Bool(false));
                v
            }
            GenFunCoeff::NonIntegral { r, terms } => {
                let terms: Vec<Value> = terms
                    .iter()
                    .map(|(t, c)| json!({"t_exps": t, "coef": c.to_json()}))
                    .collect();
                json!({"r": r, "nonintegral": true, "terms": terms})
            }
        }
    }
}

impl fmt::Display for GenFunCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenFunCoeff::Exact(t) => write!(f, "{t}"),
            GenFunCoeff::NonIntegral { terms, .. } => {
                writeln!(f, "nonintegral: true")?;
                let mut first = true;
                for (t, c) in terms {
                    if !first {
                        writeln!(f)?;
                    }
                    write!(f, "{t:?}: {c}")?;
                    first = false;
                }
                Ok(())
            }
        }
    }
}

/// Symmetry data of a finite-dimensional `C*`-character.
#[derive(Clone, PartialEq, Debug)]
pub struct SymmetryReport {
    pub palindromic: bool,
    pub degree: Exp,
    pub leading: Rat,
}

fn check_coprime(n: u32, m: u32) -> Result<()> {
    if gcd(m, n) != 1 {
        return Err(Error::NonCoprime { m, n });
    }
    Ok(())
}

fn check_positive_m(m: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::NonpositiveM(0));
    }
    Ok(())
}

/// Dimension of the finite-dimensional module:
/// `(1/n) binomial(nr + m - 1, m)`, always an integer for coprime `(m, n)`.
pub fn dim_fd(n: u32, m: u32, r: u32) -> Result<BigInt> {
    check_positive_m(m)?;
    check_coprime(n, m)?;
    if n == 0 || r == 0 {
        return Err(Error::Domain("n and r must be >= 1".into()));
    }
    let b = binomial((n * r + m - 1) as u64, m as u64);
    let (q, rem) = num_integer::Integer::div_rem(&b, &BigInt::from(n));
    if !rem.is_zero() {
        return Err(Error::Indivisible(format!(
            "binomial({}, {m}) is not divisible by {n}",
            n * r + m - 1
        )));
    }
    Ok(q)
}

/// Graded `GL_r`-character of the finite-dimensional module: the multiplicity
/// of `[W_r(lambda)*]` is the principal specialization of `s_lambda` in `n`
/// variables divided exactly by `[n]_q`.
pub fn char_fd(n: u32, m: u32, r: u32) -> Result<GLChar> {
    check_positive_m(m)?;
    check_coprime(n, m)?;
    if n == 0 || r == 0 {
        return Err(Error::Domain("n and r must be >= 1".into()));
    }
    let bound = (n.min(r)) as usize;
    let qn = qint(n)?;
    let mut coeffs = BTreeMap::new();
    for lam in partitions_of(m) {
        if lam.num_rows() > bound {
            continue;
        }
        let spec = principal_spec(&lam, n)?;
        if spec.is_zero() {
            continue;
        }
        let c = exact_div(&spec, &qn)?;
        debug_assert!(c.has_nonneg_integer_coeffs());
        coeffs.insert(lam, QRatFun::from_poly(c));
    }
    GLChar::new(r, coeffs)
}

/// Expand a `GLChar` with polynomial multiplicities into the full torus
/// character, each `[W_r(mu)*]` contributing `s_mu(q_1^{-1}, ..., q_r^{-1})`.
pub fn glchar_to_torus(c: &GLChar) -> Result<TorusChar> {
    let r = c.r();
    let mut out = TorusChar::zero(r);
    for (mu, coeff) in c.coeffs() {
        let poly = coeff
            .as_polynomial()
            .ok_or_else(|| Error::Domain("torus expansion needs polynomial multiplicities".into()))?
            .clone();
        for_each_ssyt(mu, r, |entries| {
            let mut t_exps = vec![0i64; r as usize];
            for &t in entries {
                t_exps[(t - 1) as usize] -= 1;
            }
            for (e, a) in poly.terms() {
                out.add_term(
                    TorusMono {
                        q_exp: *e,
                        t_exps: t_exps.clone(),
                    },
                    a.clone(),
                );
            }
        });
    }
    Ok(out)
}

/// Full `C* x T_0`-character of the finite-dimensional module.
pub fn char_fd_torus(n: u32, m: u32, r: u32) -> Result<TorusChar> {
    glchar_to_torus(&char_fd(n, m, r)?)
}

/// The `C*`-character `Tr(q^h)` of a finite-dimensional `GLChar`.
pub fn cx_character(c: &GLChar) -> Result<QExpPoly> {
    let mut out = QExpPoly::zero();
    for (mu, coeff) in c.coeffs() {
        let poly = coeff
            .as_polynomial()
            .ok_or_else(|| Error::Domain("C*-character needs polynomial multiplicities".into()))?;
        let dim = big_to_rat(glr_dim(mu, c.r()));
        out = &out + &poly.scale(&dim);
    }
    Ok(out)
}

/// Coefficient of `z^m` in
/// `D(z) = (1/[n]_q) prod_{i<=n, j<=r} 1/(1 - z q^{(n+1-2i)/2} q_j^{-1})`,
/// computed by exact truncated product expansion followed by exact division
/// by `[n]_q` (flagged as non-integral when the division fails, which can
/// only happen for non-coprime `(m, n)`).
pub fn gen_function_coeff(n: u32, r: u32, m: u32) -> Result<GenFunCoeff> {
    if n == 0 || r == 0 {
        return Err(Error::Domain("n and r must be >= 1".into()));
    }
    // Truncated series in z whose coefficients are torus-weight maps.
    let mut series: Vec<BTreeMap<Vec<i64>, QExpPoly>> = vec![BTreeMap::new(); m as usize + 1];
    series[0].insert(vec![0i64; r as usize], QExpPoly::one());
    for i in 1..=n {
        for j in 1..=r {
            // Factor 1/(1 - z q^{(n+1-2i)/2} q_j^{-1}): convolve with the
            // geometric series, truncated at z^m.
            let e = Exp::new(n as i64 + 1 - 2 * i as i64, 2);
            let mut next: Vec<BTreeMap<Vec<i64>, QExpPoly>> =
                vec![BTreeMap::new(); m as usize + 1];
            for (deg, coeff) in series.iter().enumerate() {
                for (weight, poly) in coeff {
                    for k in 0..=(m as usize - deg) {
                        let mut w = weight.clone();
                        w[(j - 1) as usize] -= k as i64;
                        let entry = next[deg + k].entry(w).or_insert_with(QExpPoly::zero);
                        for (ex, c) in poly.terms() {
                            entry.add_term(ex + e * exp_int(k as i64), c.clone());
                        }
                    }
                }
            }
            for coeff in &mut next {
                coeff.retain(|_, p| !p.is_zero());
            }
            series = next;
        }
    }
    let top = std::mem::take(&mut series[m as usize]);
    let qn = qint(n)?;
    let mut exact = TorusChar::zero(r);
    let mut all_exact = true;
    for (weight, poly) in &top {
        match exact_div(poly, &qn) {
            Ok(quot) => {
                for (e, c) in quot.terms() {
                    exact.add_term(
                        TorusMono {
                            q_exp: *e,
                            t_exps: weight.clone(),
                        },
                        c.clone(),
                    );
                }
            }
            Err(_) => {
                all_exact = false;
                break;
            }
        }
    }
    if all_exact {
        return Ok(GenFunCoeff::Exact(exact));
    }
    if gcd(m, n) == 1 {
        return Err(Error::Indivisible(
            "generating-function coefficient must divide exactly for coprime (m, n)".into(),
        ));
    }
    let terms = top
        .into_iter()
        .map(|(w, poly)| Ok((w, QRatFun::new(poly, qn.clone())?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(GenFunCoeff::NonIntegral { r, terms })
}

/// Graded decomposition of the finite-dimensional Cherednik module as an
/// `S_n`-module: the multiplicity of `[V_lambda]` is the principal
/// specialization of `s_lambda` in `m` variables divided exactly by `[m]_q`.
pub fn char_cherednik_fd(n: u32, m: u32) -> Result<GradedSnChar> {
    check_positive_m(m)?;
    check_coprime(n, m)?;
    if n == 0 {
        return Err(Error::Domain("n must be >= 1".into()));
    }
    let qm = qint(m)?;
    let mut coeffs = BTreeMap::new();
    for lam in partitions_of(n) {
        let spec = principal_spec(&lam, m)?;
        if spec.is_zero() {
            continue;
        }
        coeffs.insert(lam, exact_div(&spec, &qm)?);
    }
    Ok(GradedSnChar { n, coeffs })
}

/// Palindromicity, top degree and leading coefficient of the
/// `C*`-character of a finite-dimensional `GLChar`.
pub fn symmetry_report(c: &GLChar) -> Result<SymmetryReport> {
    let ch = cx_character(c)?;
    if ch.is_zero() {
        return Err(Error::Domain("symmetry report of the zero character".into()));
    }
    Ok(SymmetryReport {
        palindromic: is_palindromic(&ch),
        degree: ch.max_exp().expect("nonzero"),
        leading: ch.leading_coeff(),
    })
}

fn check_divisor(d: u32, r: u32) -> Result<()> {
    if d == 0 || r % d != 0 {
        return Err(Error::Domain(format!("{d} does not divide r = {r}")));
    }
    Ok(())
}

/// Closed form of the q-Catalan family:
/// `C^d(q) = ([d]_q / [nd]_q) [nr + m - 1 choose m]_q`, a Laurent polynomial
/// with nonnegative integer coefficients for every divisor `d` of `r`.
pub fn chd_closed(n: u32, m: u32, r: u32, d: u32) -> Result<QExpPoly> {
    check_positive_m(m)?;
    check_coprime(n, m)?;
    check_divisor(d, r)?;
    let num = &qint(d)? * &qbinom(n * r + m - 1, m)?;
    exact_div(&num, &qint(n * d)?)
}

/// The same q-number evaluated as a trace: substitute the `N_d` torus element
/// into the full torus character. In the output variable (the `d`-th root of
/// the grading variable), the grading substitutes `q -> q^d` and the torus
/// entries take the exponents `(dn(k+1-2l) + d + 1 - 2s)/2`.
pub fn chd_substitute(n: u32, m: u32, r: u32, d: u32) -> Result<QExpPoly> {
    check_positive_m(m)?;
    check_coprime(n, m)?;
    check_divisor(d, r)?;
    let k = r / d;
    let mut entry_exps = Vec::with_capacity(r as usize);
    for l in 1..=k as i64 {
        for s in 1..=d as i64 {
            entry_exps.push(Exp::new(
                (d as i64) * (n as i64) * (k as i64 + 1 - 2 * l) + d as i64 + 1 - 2 * s,
                2,
            ));
        }
    }
    let torus = char_fd_torus(n, m, r)?;
    let mut out = QExpPoly::zero();
    for (mono, c) in torus.terms() {
        let mut e = mono.q_exp * exp_int(d as i64);
        for (a, w) in mono.t_exps.iter().zip(&entry_exps) {
            e += *w * exp_int(*a);
        }
        out.add_term(e, c.clone());
    }
    Ok(out)
}

/// Graded Frobenius character of the standard module with highest weight
/// `beta` over the rank-one Cherednik algebra at parameter `n/m`:
/// `(1 - q^{-1}) q^{-(m-1)/2 + (n/m) kappa(beta)} s_beta[X/(1-q^{-1})]`,
/// expanded in the Schur basis with rational-function coefficients.
pub fn char_standard(beta: &Partition, n: u32, m: u32) -> Result<SymFunc<QRatFun>> {
    check_positive_m(m)?;
    if beta.size() != m {
        return Err(Error::Domain(format!(
            "highest weight {beta} must be a partition of m = {m}"
        )));
    }
    let prefactor_exp = Exp::new(-(m as i64 - 1), 2) + Exp::new(n as i64 * beta.kappa(), m as i64);
    // (1 - q^{-1}) q^{prefactor}
    let prefactor = &QExpPoly::monomial(prefactor_exp, rat(1))
        - &QExpPoly::monomial(prefactor_exp - exp_int(1), rat(1));
    let mut out = SymFunc::zero(Basis::Schur, m);
    for mu in partitions_of(m) {
        let pairing = pleth_sub_coeff(beta, &mu)?;
        out.add_term(mu, pairing.mul_poly(&prefactor));
    }
    Ok(out)
}

/// Graded `S_m`-character of the minimally supported irreducible over the
/// rank-one Cherednik algebra: the `c^beta_{lambda,m0}`-weighted sum of
/// standard-module characters. Requires `|lambda| = gcd(m, n)`.
pub fn char_s_module(lambda: &Partition, n: u32, m: u32) -> Result<SymFunc<QRatFun>> {
    check_positive_m(m)?;
    let d = gcd(m, n);
    if lambda.size() != d {
        return Err(Error::Domain(format!(
            "expected |lambda| = gcd(m, n) = {d}, got {lambda}"
        )));
    }
    let m0 = m / d;
    let cs = plethysm_coeffs(lambda, m0)?;
    let mut out = SymFunc::zero(Basis::Schur, m);
    for (beta, c) in cs {
        let term = char_standard(&beta, n, m)?
            .scale(&QRatFun::from_poly(QExpPoly::constant(rat(c))));
        out = out.add(&term)?;
    }
    Ok(out)
}

/// Graded `GL_r`-character of the minimally supported module labeled by
/// `n_0 lambda`: the double sum over `beta, mu |- m` of
/// `c^beta_{lambda,m0} (1-q^{-1}) q^{-(m-1)/2 + (n/m)kappa(beta)}
///  <s_beta[X/(1-q^{-1})], s_mu> [W_r(mu)*]`, restricted to
/// `rows(mu) <= min(n, r)`. For coprime `(m, n)` every coefficient reduces
/// to a Laurent polynomial and the result equals [`char_fd`].
pub fn char_minsupp(n: u32, m: u32, r: u32, lambda: &Partition) -> Result<GLChar> {
    check_positive_m(m)?;
    if n == 0 || r == 0 {
        return Err(Error::Domain("n and r must be >= 1".into()));
    }
    let d = gcd(m, n);
    if lambda.size() != d {
        return Err(Error::Domain(format!(
            "expected |lambda| = gcd(m, n) = {d}, got {lambda}"
        )));
    }
    let m0 = m / d;
    let cs = plethysm_coeffs(lambda, m0)?;
    let bound = (n.min(r)) as usize;
    let one_minus = &QExpPoly::one() - &QExpPoly::monomial(exp_int(-1), rat(1));
    let mut coeffs = BTreeMap::new();
    for mu in partitions_of(m) {
        if mu.num_rows() > bound {
            continue;
        }
        let mut acc = QRatFun::zero();
        for (beta, c) in &cs {
            let pre_exp =
                Exp::new(-(m as i64 - 1), 2) + Exp::new(n as i64 * beta.kappa(), m as i64);
            let weight = QExpPoly::monomial(pre_exp, rat(*c));
            let term = pleth_sub_coeff(beta, &mu)?
                .mul_poly(&weight)
                .mul_poly(&one_minus);
            acc = &acc + &term;
        }
        if !acc.is_zero() {
            coeffs.insert(mu, acc);
        }
    }
    GLChar::new(r, coeffs)
}

/// Check that `(1/n) binomial(nr + m - 1, m)`, interpolated exactly as a
/// polynomial of degree `nr - 1` in `m`, vanishes at `m = -1, ..., -(nr-1)`.
pub fn dim_poly_roots_check(n: u32, r: u32) -> bool {
    let deg = (n * r - 1) as usize;
    // Sample the dimension polynomial at m = 0..=deg and interpolate.
    let points: Vec<(Rat, Rat)> = (0..=deg as u64)
        .map(|m| {
            let v = big_to_rat(binomial((n * r) as u64 + m - 1, m)) / rat(n as i64);
            (rat(m as i64), v)
        })
        .collect();
    let poly = lagrange_interpolate(&points);
    (1..=deg as i64).all(|t| eval_poly(&poly, &rat(-t)).is_zero())
}

/// Exact Lagrange interpolation through the given points, returning dense
/// coefficients in ascending degree.
fn lagrange_interpolate(points: &[(Rat, Rat)]) -> Vec<Rat> {
    let n = points.len();
    let mut out = vec![Rat::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // Basis numerator prod_{j != i} (x - x_j), built coefficient-wise.
        let mut basis = vec![Rat::zero(); n];
        basis[0] = rat(1);
        let mut cur_deg = 0;
        let mut denom = rat(1);
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![Rat::zero(); n];
            for k in 0..=cur_deg {
                next[k + 1] += &basis[k];
                next[k] -= xj * &basis[k];
            }
            basis = next;
            cur_deg += 1;
            denom *= xi - xj;
        }
        let scale = yi / &denom;
        for (o, b) in out.iter_mut().zip(&basis) {
            *o += b * &scale;
        }
    }
    out
}

fn eval_poly(coeffs: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn qpoly(pairs: &[(i64, i64)]) -> QExpPoly {
        QExpPoly::from_terms(pairs.iter().map(|&(e, c)| (exp_int(e), rat(c))))
    }

    #[test]
    fn dim_fd_worked_examples() {
        assert_eq!(dim_fd(2, 3, 2).unwrap(), BigInt::from(10));
        for (m, r) in [(1u32, 1u32), (2, 3), (4, 2)] {
            assert_eq!(
                dim_fd(1, m, r).unwrap(),
                binomial((r + m - 1) as u64, m as u64)
            );
        }
        for (n, r) in [(2u32, 1u32), (3, 2), (5, 4)] {
            assert_eq!(dim_fd(n, 1, r).unwrap(), BigInt::from(r));
        }
        assert!(matches!(dim_fd(2, 2, 1), Err(Error::NonCoprime { .. })));
        assert!(matches!(dim_fd(2, 0, 1), Err(Error::NonpositiveM(_))));
    }

    #[test]
    fn char_fd_worked_examples() {
        let c = char_fd(2, 3, 2).unwrap();
        assert_eq!(c.coeff(&p(&[2, 1])), QRatFun::one());
        assert_eq!(
            c.coeff(&p(&[3])),
            QRatFun::from_poly(qpoly(&[(-1, 1), (1, 1)]))
        );
        assert_eq!(c.coeffs().count(), 2);

        for r in 2..=4 {
            let c = char_fd(3, 2, r).unwrap();
            assert_eq!(c.coeff(&p(&[1, 1])), QRatFun::one());
            assert_eq!(
                c.coeff(&p(&[2])),
                QRatFun::from_poly(qpoly(&[(-1, 1), (1, 1)]))
            );
        }

        for (m, r) in [(1u32, 2u32), (4, 3), (5, 2)] {
            let c = char_fd(1, m, r).unwrap();
            assert_eq!(c.coeffs().count(), 1);
            assert_eq!(c.coeff(&p(&[m])), QRatFun::one());
        }
    }

    #[test]
    fn torus_character_examples() {
        // Figure-caption value: T_0-character of the (n, m, r) = (2, 3, 2)
        // module is 2q1^-3 + 3q1^-2 q2^-1 + 3q1^-1 q2^-2 + 2q2^-3.
        let t = char_fd_torus(2, 3, 2).unwrap().forget_q();
        let mut expect = TorusChar::zero(2);
        expect.add_term(TorusMono { q_exp: exp_int(0), t_exps: vec![-3, 0] }, rat(2));
        expect.add_term(TorusMono { q_exp: exp_int(0), t_exps: vec![-2, -1] }, rat(3));
        expect.add_term(TorusMono { q_exp: exp_int(0), t_exps: vec![-1, -2] }, rat(3));
        expect.add_term(TorusMono { q_exp: exp_int(0), t_exps: vec![0, -3] }, rat(2));
        assert_eq!(t, expect);

        // Dual vector representation.
        let t = char_fd_torus(1, 1, 3).unwrap();
        let mut expect = TorusChar::zero(3);
        for j in 0..3 {
            let mut e = vec![0i64; 3];
            e[j] = -1;
            expect.add_term(TorusMono { q_exp: exp_int(0), t_exps: e }, rat(1));
        }
        assert_eq!(t, expect);

        // The q_i = 1 projection of the (2, 3, 2) character.
        let cx = cx_character(&char_fd(2, 3, 2).unwrap()).unwrap();
        assert_eq!(cx, qpoly(&[(-1, 4), (0, 2), (1, 4)]));
        assert!(is_palindromic(&cx));
        assert_eq!(
            char_fd_torus(2, 3, 2).unwrap().cx_project(),
            qpoly(&[(-1, 4), (0, 2), (1, 4)])
        );
        assert_eq!(char_fd_torus(2, 3, 2).unwrap().eval_all_one(), rat(10));
    }

    #[test]
    fn genfun_matches_torus_character() {
        match gen_function_coeff(2, 2, 3).unwrap() {
            GenFunCoeff::Exact(t) => assert_eq!(t, char_fd_torus(2, 3, 2).unwrap()),
            other => panic!("expected exact coefficient, got {other:?}"),
        }
        // Single box: sum of dual torus weights.
        match gen_function_coeff(1, 3, 1).unwrap() {
            GenFunCoeff::Exact(t) => assert_eq!(t, char_fd_torus(1, 1, 3).unwrap()),
            other => panic!("expected exact coefficient, got {other:?}"),
        }
    }

    #[test]
    fn genfun_m_zero_and_nonintegral_flag() {
        match gen_function_coeff(1, 2, 0).unwrap() {
            GenFunCoeff::Exact(t) => {
                assert_eq!(t.eval_all_one(), rat(1));
                assert_eq!(t.terms().count(), 1);
            }
            other => panic!("expected exact unit, got {other:?}"),
        }
        // m = 0, n = 2: the coefficient is 1/[2]_q, a genuine denominator.
        let g = gen_function_coeff(2, 1, 0).unwrap();
        assert!(g.nonintegral());
    }

    #[test]
    fn cherednik_examples() {
        let c = char_cherednik_fd(4, 1).unwrap();
        assert_eq!(c.coeffs().count(), 1);
        assert_eq!(c.coeff(&p(&[4])), QExpPoly::one());

        // n = 2, m = 3: trivial isotype is qbinom(4, 2)/[3]_q = q + q^{-1}.
        let c = char_cherednik_fd(2, 3).unwrap();
        assert_eq!(c.coeff(&p(&[2])), qpoly(&[(-1, 1), (1, 1)]));
        assert_eq!(c.coeff(&p(&[1, 1])), QExpPoly::one());

        // n = 3, m = 2 at q = 1: multiplicities 2 and 1.
        let c = char_cherednik_fd(3, 2).unwrap();
        assert_eq!(c.coeff(&p(&[3])).eval_one(), rat(2));
        assert_eq!(c.coeff(&p(&[2, 1])).eval_one(), rat(1));
        assert!(c.coeff(&p(&[1, 1, 1])).is_zero());
    }

    #[test]
    fn symmetry_report_examples() {
        let rep = symmetry_report(&char_fd(2, 3, 2).unwrap()).unwrap();
        assert!(rep.palindromic);
        assert_eq!(rep.degree, exp_int(1));
        assert_eq!(rep.leading, rat(4));

        let rep = symmetry_report(&char_fd(1, 4, 3).unwrap()).unwrap();
        assert_eq!(rep.degree, exp_int(0));

        let rep = symmetry_report(&char_fd(3, 2, 5).unwrap()).unwrap();
        assert_eq!(rep.degree, exp_int(1));
        assert_eq!(rep.leading, rat(15));
    }

    #[test]
    fn qcatalan_closed_and_substitution() {
        let c = chd_closed(3, 2, 1, 1).unwrap();
        assert_eq!(c, qpoly(&[(-1, 1), (1, 1)]));
        assert_eq!(chd_substitute(3, 2, 1, 1).unwrap(), c);
        for d in [1u32, 2] {
            let closed = chd_closed(2, 3, 2, d).unwrap();
            assert_eq!(chd_substitute(2, 3, 2, d).unwrap(), closed);
            assert!(closed.has_nonneg_integer_coeffs());
            assert_eq!(closed.eval_one(), big_to_rat(dim_fd(2, 3, 2).unwrap()));
        }
        // n = 1, d = r: C^r = qbinom(r + m - 1, m).
        assert_eq!(chd_closed(1, 3, 2, 2).unwrap(), qbinom(4, 3).unwrap());
        assert!(chd_closed(2, 3, 2, 4).is_err());
    }

    #[test]
    fn char_standard_rank_one_reflection() {
        // beta = (1), m = 1: the reflection representation is
        // zero-dimensional and the standard module is one-dimensional.
        let c = char_standard(&p(&[1]), 5, 1).unwrap();
        assert_eq!(c.coeff(&p(&[1])), QRatFun::one());
    }

    #[test]
    fn char_standard_sign_graded_polynomial_ring() {
        // m = 2: C[h] is a polynomial ring in one variable where even degrees
        // carry the trivial representation and odd degrees the sign.
        for n in [2u32, 4] {
            let c = char_standard(&p(&[2]), n, 2).unwrap();
            let e = Exp::new(n as i64 - 1, 2);
            let den = &QExpPoly::one() - &QExpPoly::monomial(exp_int(-2), rat(1));
            let triv = QRatFun::new(QExpPoly::monomial(e, rat(1)), den.clone()).unwrap();
            let sign = QRatFun::new(QExpPoly::monomial(e - exp_int(1), rat(1)), den).unwrap();
            assert_eq!(c.coeff(&p(&[2])), triv);
            assert_eq!(c.coeff(&p(&[1, 1])), sign);
        }
    }

    #[test]
    fn char_s_module_gcd_equals_m() {
        // m0 = 1 makes the plethysm trivial, so the module is standard.
        for lam in [p(&[2]), p(&[1, 1])] {
            let a = char_s_module(&lam, 2, 2).unwrap();
            let b = char_standard(&lam, 2, 2).unwrap();
            assert_eq!(a, b);
        }
        assert!(char_s_module(&p(&[1]), 2, 2).is_err());
    }

    #[test]
    fn char_minsupp_frozen_values() {
        // (n, m, r, lambda) = (2, 2, 2, (2)).
        let c = char_minsupp(2, 2, 2, &p(&[2])).unwrap();
        let den = &QExpPoly::one() - &QExpPoly::monomial(exp_int(-2), rat(1));
        let half = Exp::new(1, 2);
        assert_eq!(
            c.coeff(&p(&[2])),
            QRatFun::new(QExpPoly::monomial(half, rat(1)), den.clone()).unwrap()
        );
        assert_eq!(
            c.coeff(&p(&[1, 1])),
            QRatFun::new(QExpPoly::monomial(-half, rat(1)), den.clone()).unwrap()
        );

        // r = 1 drops the two-row partition.
        let c = char_minsupp(2, 2, 1, &p(&[2])).unwrap();
        assert_eq!(
            c.coeff(&p(&[2])),
            QRatFun::new(QExpPoly::monomial(half, rat(1)), den).unwrap()
        );
        assert!(c.coeff(&p(&[1, 1])).is_zero());

        assert!(char_minsupp(2, 2, 2, &p(&[1])).is_err());
    }

    #[test]
    fn char_minsupp_degenerates_to_char_fd() {
        for (n, m) in [(2u32, 3u32), (3, 2), (2, 1), (3, 4)] {
            for r in 1..=3 {
                let ms = char_minsupp(n, m, r, &p(&[1])).unwrap();
                let fd = char_fd(n, m, r).unwrap();
                assert_eq!(ms, fd, "n={n} m={m} r={r}");
            }
        }
    }

    #[test]
    fn dim_poly_roots() {
        for n in 1..=3u32 {
            for r in 1..=3u32 {
                assert!(dim_poly_roots_check(n, r), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn glchar_json_round_trip() {
        let c = char_fd(2, 3, 2).unwrap();
        assert_eq!(GLChar::from_json(&c.to_json()).unwrap(), c);
        let t = char_fd_torus(2, 3, 2).unwrap();
        assert_eq!(TorusChar::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn glchar_latex_display() {
        let c = char_fd(2, 3, 2).unwrap();
        assert_eq!(c.latex(), "W^{*}_{(2,1)} + (q+q^{-1})W^{*}_{(3)}");
    }

    #[test]
    fn torus_symmetry() {
        for (n, m, r) in [(2u32, 3u32, 2u32), (3, 2, 3), (1, 4, 2)] {
            assert!(char_fd_torus(n, m, r).unwrap().is_symmetric());
        }
    }
}
