//! Principal specializations and semistandard-tableau enumeration.
//!
//! `principal_spec` evaluates `s_lambda(q^{(1-n)/2}, ..., q^{(n-1)/2})` by the
//! hook-content product; `principal_spec_tableaux` evaluates the same number
//! as a sum over semistandard tableaux. The two routes are independent and
//! the verification suite requires them to agree.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactalg::{exact_div, qint, rat, Exp, QExpPoly, Rat};
use crate::partitions::Partition;
use crate::{Error, Result};

/// Centered principal specialization of `s_lambda` in `n` variables via the
/// hook-content product `prod [n + content]_q / [hook]_q`; zero when the
/// diagram has more than `n` rows.
pub fn principal_spec(lambda: &Partition, n: u32) -> Result<QExpPoly> {
    if n == 0 {
        return Err(Error::Domain("principal specialization needs n >= 1".into()));
    }
    if lambda.num_rows() > n as usize {
        return Ok(QExpPoly::zero());
    }
    let mut num = QExpPoly::one();
    let mut den = QExpPoly::one();
    for (i, j) in lambda.boxes() {
        let c = lambda.content(i, j)?;
        num = &num * &qint((n as i64 + c) as u32)?;
        den = &den * &qint(lambda.hook(i, j)?)?;
    }
    exact_div(&num, &den)
}

/// The same specialization as a sum of `q^{sum of entry weights}` over all
/// semistandard tableaux of shape `lambda` with entries in `1..=n`, where the
/// entry `t` carries weight `(2t - 1 - n)/2`.
pub fn principal_spec_tableaux(lambda: &Partition, n: u32) -> Result<QExpPoly> {
    if n == 0 {
        return Err(Error::Domain("principal specialization needs n >= 1".into()));
    }
    let mut out = QExpPoly::zero();
    for_each_ssyt(lambda, n, |entries| {
        let e: Exp = entries
            .iter()
            .map(|&t| Exp::new(2 * t as i64 - 1 - n as i64, 2))
            .sum();
        out.add_term(e, rat(1));
    });
    Ok(out)
}

/// Dimension of the irreducible `GL_r`-module labeled by `lambda`: the
/// integer hook-content product, zero when `lambda` has more than `r` rows.
pub fn glr_dim(lambda: &Partition, r: u32) -> BigInt {
    if lambda.num_rows() > r as usize {
        return BigInt::zero();
    }
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for (i, j) in lambda.boxes() {
        num *= BigInt::from(r as i64 + j as i64 - i as i64);
        den *= BigInt::from(lambda.hook(i, j).expect("box in diagram"));
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Visit every semistandard tableau of the given shape with entries in
/// `1..=max`, passing the entries in row-major box order.
pub fn for_each_ssyt(shape: &Partition, max: u32, mut visit: impl FnMut(&[u32])) {
    let rows = shape.num_rows();
    if rows == 0 {
        visit(&[]);
        return;
    }
    let parts = shape.parts();
    // Flat row-major cell list with references to left/up neighbors.
    let mut offsets = Vec::with_capacity(rows);
    let mut total = 0usize;
    for &p in parts {
        offsets.push(total);
        total += p as usize;
    }
    let mut entries = vec![0u32; total];
    fill(parts, &offsets, &mut entries, 0, 0, max, &mut visit);
}

fn fill(
    parts: &[u32],
    offsets: &[usize],
    entries: &mut Vec<u32>,
    row: usize,
    col: usize,
    max: u32,
    visit: &mut impl FnMut(&[u32]),
) {
    if row == parts.len() {
        visit(entries);
        return;
    }
    let (next_row, next_col) = if col + 1 < parts[row] as usize {
        (row, col + 1)
    } else {
        (row + 1, 0)
    };
    let idx = offsets[row] + col;
    let mut lo = 1u32;
    if col > 0 {
        lo = lo.max(entries[idx - 1]); // weakly increasing along rows
    }
    if row > 0 && (col as u32) < parts[row - 1] {
        lo = lo.max(entries[offsets[row - 1] + col] + 1); // strictly increasing down columns
    }
    for t in lo..=max {
        entries[idx] = t;
        fill(parts, offsets, entries, next_row, next_col, max, visit);
    }
    entries[idx] = 0;
}

/// Number of semistandard tableaux of the given shape with entries `<= max`.
pub fn ssyt_count(shape: &Partition, max: u32) -> Rat {
    crate::symfunc::big_to_rat(glr_dim(shape, max))
}
