//! Sparse multivariate polynomials in finitely many variables, and the Schur
//! expansion of symmetric polynomials by lex-leading-term elimination.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exactalg::{rat, Rat};
use crate::partitions::Partition;
use crate::symfunc::for_each_ssyt;
use crate::{Error, Result};

/// Polynomial in `nvars` variables with exact rational coefficients, keyed by
/// exponent vectors.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], rat(1))
    }

    pub fn monomial(exps: Vec<u32>, c: Rat) -> Self {
        let nvars = exps.len();
        let mut p = Self::zero(nvars);
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Replace every variable by its `m0`-th power.
    pub fn subst_powers(&self, m0: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| x * m0).collect(), c.clone()))
                .collect(),
        }
    }

    /// Invariance under all adjacent variable transpositions (which generate
    /// the full symmetric group).
    pub fn is_symmetric(&self) -> bool {
        for k in 0..self.nvars.saturating_sub(1) {
            for (e, c) in &self.terms {
                let mut swapped = e.clone();
                swapped.swap(k, k + 1);
                if self.terms.get(&swapped) != Some(c) {
                    return false;
                }
            }
        }
        true
    }
}

/// Complete homogeneous polynomial `h_a(x_1..x_nvars)`: every monomial of
/// total degree `a` with coefficient 1.
pub fn h_poly(a: u32, nvars: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(nvars);
    let mut exps = vec![0u32; nvars];
    fn rec(out: &mut MultiPoly, exps: &mut Vec<u32>, var: usize, left: u32) {
        if var + 1 == exps.len() {
            exps[var] = left;
            out.add_term(exps.clone(), rat(1));
            exps[var] = 0;
            return;
        }
        for take in 0..=left {
            exps[var] = take;
            rec(out, exps, var + 1, left - take);
        }
        exps[var] = 0;
    }
    if nvars == 0 {
        if a == 0 {
            return MultiPoly {
                nvars: 0,
                terms: [(vec![], rat(1))].into_iter().collect(),
            };
        }
        return out;
    }
    rec(&mut out, &mut exps, 0, a);
    out
}

/// Schur polynomial `s_lambda(x_1..x_nvars)` as a sum over semistandard
/// tableaux; zero when the shape has more than `nvars` rows.
pub fn schur_poly(lambda: &Partition, nvars: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(nvars);
    if lambda.num_rows() > nvars {
        return out;
    }
    for_each_ssyt(lambda, nvars as u32, |entries| {
        let mut exps = vec![0u32; nvars];
        for &t in entries {
            exps[(t - 1) as usize] += 1;
        }
        out.add_term(exps, rat(1));
    });
    out
}

/// Expand a symmetric polynomial in the Schur polynomial basis by repeatedly
/// subtracting the lex-leading Schur polynomial. Fails on non-symmetric
/// input; terminates because the lex-leading exponent vector strictly
/// decreases.
pub fn schur_expand_poly(p: &MultiPoly) -> Result<BTreeMap<Partition, Rat>> {
    if !p.is_symmetric() {
        return Err(Error::Domain("schur expansion requires a symmetric polynomial".into()));
    }
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while !rest.is_zero() {
        let (lead, c) = rest
            .terms
            .iter()
            .next_back()
            .map(|(e, c)| (e.clone(), c.clone()))
            .expect("nonzero polynomial");
        // For a symmetric polynomial the lex-greatest exponent vector is
        // weakly decreasing, hence a partition.
        let parts: Vec<u32> = lead.iter().copied().filter(|&x| x > 0).collect();
        let mu = Partition::new(parts).map_err(|_| {
            Error::Domain("lex-leading exponent is not a partition; input not symmetric".into())
        })?;
        rest = rest.sub(&schur_poly(&mu, p.nvars()).scale(&c));
        out.insert(mu, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn schur_polys_expand_to_themselves() {
        for parts in [vec![2u32], vec![1, 1], vec![3, 1], vec![2, 2, 1]] {
            let mu = Partition::new(parts).unwrap();
            for nvars in mu.num_rows()..=4 {
                let ex = schur_expand_poly(&schur_poly(&mu, nvars)).unwrap();
                assert_eq!(ex, [(mu.clone(), rat(1))].into_iter().collect());
            }
        }
    }

    #[test]
    fn h2_h1_in_two_variables() {
        let prod = h_poly(2, 2).mul(&h_poly(1, 2));
        let ex = schur_expand_poly(&prod).unwrap();
        assert_eq!(
            ex,
            [(p(&[3]), rat(1)), (p(&[2, 1]), rat(1))].into_iter().collect()
        );
    }

    #[test]
    fn elementary_e2_is_schur_11() {
        // e_2(x, y) = xy
        let e2 = MultiPoly::monomial(vec![1, 1], rat(1));
        let ex = schur_expand_poly(&e2).unwrap();
        assert_eq!(ex, [(p(&[1, 1]), rat(1))].into_iter().collect());
    }

    #[test]
    fn rejects_non_symmetric() {
        let x = MultiPoly::monomial(vec![1, 0], rat(1));
        assert!(schur_expand_poly(&x).is_err());
    }
}
