//! Exact truncated power series in one variable, used by the series-expansion
//! oracles that cross-check the closed character formulas.
//!
//! A series carries its truncation order explicitly; arithmetic keeps the
//! minimum of the operands' orders, so a cutoff can never be silently
//! exceeded.

use num_traits::Zero;

use crate::exactalg::{rat, Rat};
use crate::{Error, Result};

/// Power series `sum_{k=0}^{order} c_k t^k + O(t^{order+1})` with exact
/// rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries {
    order: usize,
    coeffs: Vec<Rat>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = rat(1);
        s
    }

    /// The monomial `c t^k` (zero if `k` exceeds the order).
    pub fn monomial(order: usize, k: usize, c: Rat) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn set_coeff(&mut self, k: usize, c: Rat) {
        if k <= self.order {
            self.coeffs[k] = c;
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let coeffs = (0..=order).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self { order, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let coeffs = (0..=order).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Self { order, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut coeffs = vec![Rat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self { order, coeffs }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::Domain("series inverse requires nonzero constant term".into()));
        }
        let c0 = self.coeffs[0].clone();
        let mut inv = vec![Rat::zero(); self.order + 1];
        inv[0] = rat(1) / c0.clone();
        for k in 1..=self.order {
            let mut acc = Rat::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &inv[k - j];
            }
            inv[k] = -acc / c0.clone();
        }
        Ok(Self {
            order: self.order,
            coeffs: inv,
        })
    }

    /// `1 / (1 - t^k)` truncated, the geometric series on multiples of `k`.
    pub fn geometric(order: usize, k: usize) -> Self {
        let mut s = Self::zero(order);
        let mut e = 0;
        while e <= order {
            s.coeffs[e] = rat(1);
            e += k;
        }
        s
    }
}
