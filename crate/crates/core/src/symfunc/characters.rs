//! Irreducible symmetric-group character values by the Murnaghan-Nakayama
//! rule, evaluated on beta-numbers (first-column hook lengths) with a global
//! memo table.
//!
//! Removing a border strip of length `k` moves a single beta number down by
//! `k`; the sign is `(-1)^{number of beta numbers jumped over}`, which equals
//! the leg length of the removed strip.

use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

use crate::partitions::Partition;
use crate::{Error, Result};

/// Value of the irreducible character `chi^lambda` on the conjugacy class of
/// cycle type `rho`; requires `|lambda| = |rho|`.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.size() != rho.size() {
        return Err(Error::Domain(format!(
            "character size mismatch: |{lambda}| = {} but |{rho}| = {}",
            lambda.size(),
            rho.size()
        )));
    }
    Ok(mn_memo(lambda.parts(), rho.parts()))
}

fn memo_table() -> &'static Mutex<HashMap<(Vec<u32>, Vec<u32>), i64>> {
    static TABLE: OnceLock<Mutex<HashMap<(Vec<u32>, Vec<u32>), i64>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn mn_memo(lambda: &[u32], rho: &[u32]) -> i64 {
    if rho.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(&v) = memo_table().lock().unwrap().get(&key) {
        return v;
    }
    let v = mn_recurse(lambda, rho);
    memo_table().lock().unwrap().insert(key, v);
    v
}

fn mn_recurse(lambda: &[u32], rho: &[u32]) -> i64 {
    let k = rho[0] as i64;
    let rest = &rho[1..];
    let l = lambda.len();
    // Strictly decreasing beta numbers b_i = lambda_i + (l - i), 1-indexed rows.
    let beta: Vec<i64> = lambda
        .iter()
        .enumerate()
        .map(|(idx, &p)| p as i64 + (l - 1 - idx) as i64)
        .collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        let target = b - k;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| target < x && x < b).count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        // Back to a partition: lambda'_i = b_i - (l - i), dropping zero parts.
        let next: Vec<u32> = nb
            .iter()
            .enumerate()
            .map(|(idx, &x)| (x - (l - 1 - idx) as i64) as u32)
            .filter(|&p| p > 0)
            .collect();
        total += sign * mn_memo(&next, rest);
    }
    total
}
