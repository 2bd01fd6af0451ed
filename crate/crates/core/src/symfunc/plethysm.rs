//! Plethysm with power sums and the alphabet substitution `X/(1-q^{-1})`.
//!
//! Only the two plethystic operations the character formulas need are
//! implemented: the variable-power substitution
//! `s_lambda(x^{m0}) = sum_beta c^beta_{lambda,m0} s_beta(x)` and the
//! power-sum rescaling `p_k -> p_k/(1 - q^{-k})`, realized directly on
//! power-sum coordinates with rational-function coefficients.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exactalg::{exp_int, QExpPoly, QRatFun, Rat};
use crate::partitions::{partitions_of, Partition};
use crate::symfunc::{big_to_rat, mn_character};
use crate::{Error, Result};

/// Coefficients `c^beta_{lambda,m0}` of
/// `s_lambda(x_1^{m0}, x_2^{m0}, ...) = sum_beta c^beta s_beta(x_1, x_2, ...)`,
/// computed as `c^beta = sum_rho chi^lambda_rho / z_rho chi^beta_{m0 rho}`.
/// The coefficients are integers, possibly negative.
pub fn plethysm_coeffs(lambda: &Partition, m0: u32) -> Result<BTreeMap<Partition, i64>> {
    if m0 == 0 {
        return Err(Error::Domain("plethysm power m0 must be >= 1".into()));
    }
    let m = lambda.size();
    let mut out = BTreeMap::new();
    for beta in partitions_of(m0 * m) {
        let mut acc = Rat::zero();
        for rho in partitions_of(m) {
            let chi_lam = mn_character(lambda, &rho)?;
            let scaled = rho.scale(m0)?;
            let chi_beta = mn_character(&beta, &scaled)?;
            acc += Rat::from_integer((chi_lam * chi_beta).into()) / big_to_rat(rho.z_class());
        }
        if !acc.is_zero() {
            debug_assert!(acc.is_integer(), "plethysm coefficient must be integral");
            let v = acc.to_integer();
            out.insert(beta, i64::try_from(v).expect("desk-scale coefficient"));
        }
    }
    Ok(out)
}

/// The Hall pairing `< s_beta[X/(1-q^{-1})], s_mu >` as a canonical rational
/// function of `q`:
/// `sum_rho chi^beta_rho chi^mu_rho / z_rho prod_i 1/(1 - q^{-rho_i})`.
pub fn pleth_sub_coeff(beta: &Partition, mu: &Partition) -> Result<QRatFun> {
    if beta.size() != mu.size() {
        return Err(Error::Domain(format!(
            "plethystic pairing needs equal sizes, got |{beta}| and |{mu}|"
        )));
    }
    let mut acc = QRatFun::zero();
    for rho in partitions_of(beta.size()) {
        let chi_b = mn_character(beta, &rho)?;
        let chi_m = mn_character(mu, &rho)?;
        if chi_b == 0 || chi_m == 0 {
            continue;
        }
        let c = Rat::from_integer((chi_b * chi_m).into()) / big_to_rat(rho.z_class());
        let mut den = QExpPoly::one();
        for &part in rho.parts() {
            den = &den * &(&QExpPoly::one() - &QExpPoly::monomial(exp_int(-(part as i64)), crate::exactalg::rat(1)));
        }
        acc = &acc + &QRatFun::new(QExpPoly::constant(c), den)?;
    }
    Ok(acc)
}
