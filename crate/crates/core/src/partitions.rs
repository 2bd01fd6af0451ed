//! Partitions and Young-diagram statistics: generation, hooks, contents,
//! conjugation, scaling, and conjugacy-class centralizer orders.
//!
//! Boxes are addressed 1-indexed as `(row, column)` and the content of a box
//! is `column - row`. With that convention the hook-content product
//! reproduces the principal specializations checked in `symfunc`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use serde_json::Value;

use crate::{Error, Result};

/// Weakly decreasing sequence of positive integers; the empty sequence is
/// the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::Domain(format!(
                    "parts must be weakly decreasing, got {parts:?}"
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Domain(format!("parts must be positive, got {parts:?}")));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Single-row partition `(m)`; empty for `m = 0`.
    pub fn row(m: u32) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Self { parts: vec![m] }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Self { parts }
    }

    /// True iff `(i, j)` (1-indexed) is a box of the diagram.
    pub fn contains_box(&self, i: u32, j: u32) -> bool {
        i >= 1 && j >= 1 && (i as usize) <= self.parts.len() && j <= self.parts[i as usize - 1]
    }

    /// Hook length `arm + leg + 1` of box `(i, j)`.
    pub fn hook(&self, i: u32, j: u32) -> Result<u32> {
        if !self.contains_box(i, j) {
            return Err(Error::Domain(format!("box ({i}, {j}) is outside {self}")));
        }
        let arm = self.parts[i as usize - 1] - j;
        let leg = self.parts[i as usize..].iter().filter(|&&p| p >= j).count() as u32;
        Ok(arm + leg + 1)
    }

    /// Content `j - i` of box `(i, j)`.
    pub fn content(&self, i: u32, j: u32) -> Result<i64> {
        if !self.contains_box(i, j) {
            return Err(Error::Domain(format!("box ({i}, {j}) is outside {self}")));
        }
        Ok(j as i64 - i as i64)
    }

    /// Sum of contents over all boxes.
    pub fn kappa(&self) -> i64 {
        self.boxes().map(|(i, j)| j as i64 - i as i64).sum()
    }

    /// Multiply every part by `k >= 1`.
    pub fn scale(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::Domain("scale factor must be positive".into()));
        }
        Ok(Self {
            parts: self.parts.iter().map(|p| p * k).collect(),
        })
    }

    /// Centralizer order `z_rho = prod_i i^{k_i} k_i!` where `k_i` is the
    /// multiplicity of the part `i`.
    pub fn z_class(&self) -> BigInt {
        let mut z = BigInt::from(1);
        let mut mult = 0u32;
        let mut prev = 0u32;
        for &p in self.parts.iter().chain(std::iter::once(&0)) {
            if p == prev {
                mult += 1;
            } else {
                for k in 1..=mult {
                    z *= BigInt::from(prev) * BigInt::from(k);
                }
                prev = p;
                mult = 1;
            }
        }
        z
    }

    /// All boxes in row-major order, 1-indexed `(row, column)`.
    pub fn boxes(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i as u32 + 1, j)))
    }

    /// Multiplicities of each part value as `(part, multiplicity)` pairs in
    /// decreasing part order.
    pub fn part_multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, k)) if *v == p => *k += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// JSON array of parts, e.g. `[3, 1]`.
    pub fn to_json(&self) -> Value {
        Value::Array(self.parts.iter().map(|&p| Value::from(p)).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Domain("partition JSON must be an array".into()))?;
        let parts = arr
            .iter()
            .map(|x| {
                x.as_u64()
                    .and_then(|n| u32::try_from(n).ok())
                    .ok_or_else(|| Error::Domain(format!("invalid part {x}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    /// Parse comma-separated parts, e.g. `"3,1"`; the empty string is the
    /// empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Domain(format!("invalid part {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    /// LaTeX subscript form, e.g. `(2,1)`; `\varnothing` for the empty
    /// partition.
    pub fn latex(&self) -> String {
        if self.is_empty() {
            "\\varnothing".into()
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Lexicographic order on the part sequences. Among partitions of equal
/// size, iterating a `BTreeMap` in reverse yields descending-lex order.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All partitions of `m` in descending lexicographic order.
pub fn partitions_of(m: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_partitions(m, m, &mut stack, &mut out);
    out
}

fn gen_partitions(m: u32, max: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if m == 0 {
        out.push(Partition { parts: stack.clone() });
        return;
    }
    for first in (1..=max.min(m)).rev() {
        stack.push(first);
        gen_partitions(m - first, first, stack, out);
        stack.pop();
    }
}

/// Number of partitions of `m`.
pub fn partition_count(m: u32) -> usize {
    partitions_of(m).len()
}

pub fn gcd(a: u32, b: u32) -> u32 {
    num_integer::gcd(a, b)
}

/// Exact binomial coefficient.
pub fn binomial(a: u64, b: u64) -> BigInt {
    if b > a {
        return BigInt::from(0);
    }
    let mut v = BigInt::from(1);
    for i in 0..b.min(a - b) {
        v = v * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    v
}

/// `m!` as a big integer.
pub fn factorial(m: u32) -> BigInt {
    (1..=m).fold(BigInt::from(1), |acc, k| acc * BigInt::from(k))
}
