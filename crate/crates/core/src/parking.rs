//! Rational Dyck paths, vertical runs, semistandard parking functions, and
//! the Dyck-path forms of the graded characters.
//!
//! An `m/n`-Dyck path runs from `(0, 0)` to `(n, m)` and stays weakly above
//! the diagonal `y = (m/n) x`; validity is checked with the cross-multiplied
//! integer inequality `n y >= m x`, so points on the line are allowed. A
//! rank-`r` semistandard parking function labels the up-steps with values in
//! `{1..r}` weakly increasing down each vertical run.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::chars::{TorusChar, TorusMono};
use crate::exactalg::{exp_int, rat};
use crate::partitions::{binomial, gcd, Partition};
use crate::symfunc::{
    complete_homog, h_poly, schur_expand_poly, Basis, MultiPoly, SymFunc,
};
use crate::{Error, Rat, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Step {
    Up,
    Right,
}

/// Lattice path from `(0, 0)` to `(n, m)` staying weakly above the diagonal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DyckPath {
    steps: Vec<Step>,
    m: u32,
    n: u32,
}

impl DyckPath {
    /// Validate the step sequence: counts determine `(m, n)` and every
    /// prefix point must satisfy `n y >= m x`.
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let m = steps.iter().filter(|&&s| s == Step::Up).count() as u32;
        let n = steps.len() as u32 - m;
        let (mut x, mut y) = (0u64, 0u64);
        for s in &steps {
            match s {
                Step::Up => y += 1,
                Step::Right => x += 1,
            }
            if (n as u64) * y < (m as u64) * x {
                return Err(Error::Domain(format!(
                    "path dips below the diagonal at ({x}, {y})"
                )));
            }
        }
        Ok(Self { steps, m, n })
    }

    /// Parse a string over `U`/`R`.
    pub fn parse(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'U' => Ok(Step::Up),
                'R' => Ok(Step::Right),
                other => Err(Error::Domain(format!("invalid step character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn steps_string(&self) -> String {
        self.steps
            .iter()
            .map(|s| match s {
                Step::Up => 'U',
                Step::Right => 'R',
            })
            .collect()
    }

    /// Lengths of the maximal blocks of consecutive up-steps, in path order;
    /// they sum to `m`.
    pub fn vertical_runs(&self) -> Vec<u32> {
        let mut runs = Vec::new();
        let mut current = 0u32;
        for s in &self.steps {
            match s {
                Step::Up => current += 1,
                Step::Right => {
                    if current > 0 {
                        runs.push(current);
                        current = 0;
                    }
                }
            }
        }
        if current > 0 {
            runs.push(current);
        }
        runs
    }

    /// Index ranges of the up-steps of each vertical run, in path order.
    fn run_up_indices(&self) -> Vec<Vec<usize>> {
        let mut runs = Vec::new();
        let mut current = Vec::new();
        let mut up_idx = 0usize;
        for s in &self.steps {
            match s {
                Step::Up => {
                    current.push(up_idx);
                    up_idx += 1;
                }
                Step::Right => {
                    if !current.is_empty() {
                        runs.push(std::mem::take(&mut current));
                    }
                }
            }
        }
        if !current.is_empty() {
            runs.push(current);
        }
        runs
    }

    /// Column (number of preceding right-steps) of each up-step.
    fn up_columns(&self) -> Vec<u32> {
        let mut cols = Vec::new();
        let mut x = 0u32;
        for s in &self.steps {
            match s {
                Step::Up => cols.push(x),
                Step::Right => x += 1,
            }
        }
        cols
    }

    pub fn to_json(&self) -> Value {
        json!({"steps": self.steps_string()})
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.steps_string())
    }
}

/// All `m/n`-Dyck paths in lexicographic order on step strings with
/// `Up < Right`.
pub fn dyck_paths(m: u32, n: u32) -> Result<Vec<DyckPath>> {
    if m == 0 || n == 0 {
        return Err(Error::Domain("dyck_paths requires m, n >= 1".into()));
    }
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity((m + n) as usize);
    gen_paths(m, n, 0, 0, &mut steps, &mut out);
    Ok(out)
}

fn gen_paths(m: u32, n: u32, x: u32, y: u32, steps: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
    if y == m && x == n {
        out.push(DyckPath {
            steps: steps.clone(),
            m,
            n,
        });
        return;
    }
    // Up first: 'U' sorts before 'R'.
    if y < m {
        steps.push(Step::Up);
        gen_paths(m, n, x, y + 1, steps, out);
        steps.pop();
    }
    if x < n && (n as u64) * (y as u64) >= (m as u64) * (x as u64 + 1) {
        steps.push(Step::Right);
        gen_paths(m, n, x + 1, y, steps, out);
        steps.pop();
    }
}

/// Dyck path with up-steps labeled by `{1..r}`, weakly increasing down each
/// vertical run. `labels[i]` belongs to the `i`-th up-step in path order,
/// so within a run the label sequence is weakly decreasing in path order
/// (the path is read bottom-to-top).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParkingFunction {
    path: DyckPath,
    labels: Vec<u32>,
}

impl ParkingFunction {
    pub fn new(path: DyckPath, labels: Vec<u32>) -> Result<Self> {
        if labels.len() != path.m() as usize {
            return Err(Error::Domain(format!(
                "expected {} labels, got {}",
                path.m(),
                labels.len()
            )));
        }
        if labels.iter().any(|&l| l == 0) {
            return Err(Error::Domain("labels are 1-based".into()));
        }
        for run in path.run_up_indices() {
            // Top-to-bottom is decreasing height, i.e. reverse path order.
            for w in run.windows(2) {
                if labels[w[0]] < labels[w[1]] {
                    return Err(Error::Domain(
                        "labels must weakly increase down each vertical run".into(),
                    ));
                }
            }
        }
        Ok(Self { path, labels })
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Number of up-steps carrying each label `1..=r`.
    pub fn label_counts(&self, r: u32) -> Vec<u32> {
        let mut counts = vec![0u32; r as usize];
        for &l in &self.labels {
            counts[(l - 1) as usize] += 1;
        }
        counts
    }

    /// JSON form `{"steps": "UURUR", "labels": [1, 2, 1]}`.
    pub fn to_json(&self) -> Value {
        json!({"steps": self.path.steps_string(), "labels": self.labels})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let steps = v
            .get("steps")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Domain("parking function JSON must have \"steps\"".into()))?;
        let labels = v
            .get("labels")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Domain("parking function JSON must have \"labels\"".into()))?
            .iter()
            .map(|x| {
                x.as_u64()
                    .and_then(|n| u32::try_from(n).ok())
                    .ok_or_else(|| Error::Domain("invalid label".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(DyckPath::parse(steps)?, labels)
    }

    /// ASCII grid with one row per unit of height (top row first); each row
    /// shows the label of its up-step in the step's column, other cells are
    /// dots.
    pub fn ascii(&self) -> String {
        let cols = self.path.up_columns();
        let n = self.path.n() as usize;
        let mut lines = Vec::new();
        for row in (0..self.path.m() as usize).rev() {
            let mut cells = vec![".".to_string(); n];
            let col = cols[row] as usize;
            cells[col.min(n.saturating_sub(1))] = self.labels[row].to_string();
            lines.push(cells.join(" "));
        }
        lines.join("\n")
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", self.path.steps_string(), self.labels)
    }
}

/// All rank-`r` semistandard `m/n`-parking functions, ordered by path (lex)
/// and then by label vector (lex).
pub fn parking_enumerate(m: u32, n: u32, r: u32) -> Result<Vec<ParkingFunction>> {
    if r == 0 {
        return Err(Error::Domain("rank r must be >= 1".into()));
    }
    let mut out = Vec::new();
    for path in dyck_paths(m, n)? {
        let runs = path.run_up_indices();
        let mut labels = vec![0u32; m as usize];
        label_runs(&path, &runs, 0, r, &mut labels, &mut out);
    }
    Ok(out)
}

fn label_runs(
    path: &DyckPath,
    runs: &[Vec<usize>],
    run_idx: usize,
    r: u32,
    labels: &mut Vec<u32>,
    out: &mut Vec<ParkingFunction>,
) {
    if run_idx == runs.len() {
        out.push(ParkingFunction {
            path: path.clone(),
            labels: labels.clone(),
        });
        return;
    }
    // Enumerate weakly decreasing label sequences in path order; recursion
    // keeps the overall output sorted by the label vector in step order.
    fn fill(
        path: &DyckPath,
        runs: &[Vec<usize>],
        run_idx: usize,
        pos: usize,
        r: u32,
        labels: &mut Vec<u32>,
        out: &mut Vec<ParkingFunction>,
    ) {
        let run = &runs[run_idx];
        if pos == run.len() {
            label_runs(path, runs, run_idx + 1, r, labels, out);
            return;
        }
        let hi = if pos == 0 { r } else { labels[run[pos - 1]] };
        for l in 1..=hi {
            labels[run[pos]] = l;
            fill(path, runs, run_idx, pos + 1, r, labels, out);
        }
        labels[run[pos]] = 0;
    }
    fill(path, runs, run_idx, 0, r, labels, out);
}

/// `|PF^r_{m/n}|` by the closed product form: each path contributes
/// `prod_i binomial(r + a_i - 1, a_i)` over its vertical run lengths. Equals
/// the length of the explicit enumeration for all `m, n` (coprime or not).
pub fn parking_count(m: u32, n: u32, r: u32) -> Result<BigInt> {
    if r == 0 {
        return Err(Error::Domain("rank r must be >= 1".into()));
    }
    let mut total = BigInt::from(0);
    for path in dyck_paths(m, n)? {
        let mut ways = BigInt::from(1);
        for a in path.vertical_runs() {
            ways *= binomial((r + a - 1) as u64, a as u64);
        }
        total += ways;
    }
    Ok(total)
}

/// `T_0`-character from parking functions:
/// `sum_{(D, phi)} prod_i q_i^{-|phi^{-1}(i)|}`, with zero `q`-grading.
pub fn t0_char_from_pf(m: u32, n: u32, r: u32) -> Result<TorusChar> {
    let mut out = TorusChar::zero(r);
    for pf in parking_enumerate(m, n, r)? {
        let t_exps = pf
            .label_counts(r)
            .into_iter()
            .map(|c| -(c as i64))
            .collect();
        out.add_term(
            TorusMono {
                q_exp: exp_int(0),
                t_exps,
            },
            rat(1),
        );
    }
    Ok(out)
}

/// Frobenius character of the finite-dimensional Cherednik module as a sum
/// over Dyck paths of products of complete homogeneous functions, in Schur
/// coordinates. The coefficient of `s_lambda` equals
/// `dim W_n(lambda) / n`.
pub fn frobenius_from_dyck(m: u32, n: u32) -> Result<SymFunc<Rat>> {
    if gcd(m, n) != 1 {
        return Err(Error::NonCoprime { m, n });
    }
    // Accumulate in power-sum coordinates and convert once.
    let mut acc = SymFunc::zero(Basis::PowerSum, m);
    for path in dyck_paths(m, n)? {
        let mut prod = complete_homog(0).to_powersum()?;
        for a in path.vertical_runs() {
            prod = prod.mul(&complete_homog(a).to_powersum()?)?;
        }
        acc = acc.add(&prod)?;
    }
    acc.to_schur()
}

/// `GL_r`-character of the finite-dimensional module at `q = 1` from the
/// Dyck-path decomposition: the Schur expansion of
/// `sum_D prod_i h_{a_i}(x_1..x_r)`.
pub fn glr_char_from_dyck(m: u32, n: u32, r: u32) -> Result<BTreeMap<Partition, i64>> {
    if gcd(m, n) != 1 {
        return Err(Error::NonCoprime { m, n });
    }
    if r == 0 {
        return Err(Error::Domain("rank r must be >= 1".into()));
    }
    let mut total = MultiPoly::zero(r as usize);
    for path in dyck_paths(m, n)? {
        let mut prod = MultiPoly::one(r as usize);
        for a in path.vertical_runs() {
            prod = prod.mul(&h_poly(a, r as usize));
        }
        total = total.add(&prod);
    }
    let expansion = schur_expand_poly(&total)?;
    let mut out = BTreeMap::new();
    for (mu, c) in expansion {
        debug_assert!(c.is_integer());
        out.insert(mu, i64::try_from(c.to_integer()).expect("desk-scale multiplicity"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::char_fd_torus;
    use crate::symfunc::principal_spec;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn dyck_path_counts() {
        assert_eq!(dyck_paths(1, 1).unwrap().len(), 1);
        assert_eq!(dyck_paths(3, 2).unwrap().len(), 2);
        assert_eq!(dyck_paths(2, 3).unwrap().len(), 2);
        // Classical Catalan for the non-coprime square case.
        assert_eq!(dyck_paths(2, 2).unwrap().len(), 2);
        assert_eq!(dyck_paths(3, 3).unwrap().len(), 5);
    }

    #[test]
    fn dyck_paths_are_lex_sorted_and_valid() {
        let paths = dyck_paths(3, 2).unwrap();
        let strings: Vec<String> = paths.iter().map(DyckPath::steps_string).collect();
        assert_eq!(strings, vec!["UUURR", "UURUR"]);
        for s in &strings {
            assert!(DyckPath::parse(s).is_ok());
        }
        assert!(DyckPath::parse("URUUR").is_err());
    }

    #[test]
    fn vertical_run_examples() {
        let single = dyck_paths(1, 1).unwrap();
        assert_eq!(single[0].vertical_runs(), vec![1]);
        assert_eq!(DyckPath::parse("UUURR").unwrap().vertical_runs(), vec![3]);
        assert_eq!(DyckPath::parse("UURUR").unwrap().vertical_runs(), vec![2, 1]);
    }

    #[test]
    fn run_length_statistic() {
        for (m, n) in [(3u32, 2u32), (2, 3), (4, 3), (5, 2)] {
            let paths = dyck_paths(m, n).unwrap();
            let total: u32 = paths.iter().map(|p| p.vertical_runs().iter().sum::<u32>()).sum();
            assert_eq!(total, m * paths.len() as u32);
        }
    }

    #[test]
    fn figure_one_enumeration() {
        let pfs = parking_enumerate(3, 2, 2).unwrap();
        assert_eq!(pfs.len(), 10);
        let listed: Vec<(String, Vec<u32>)> = pfs
            .iter()
            .map(|pf| (pf.path().steps_string(), pf.labels().to_vec()))
            .collect();
        // Labels are stored in path order (bottom to top); weakly increasing
        // top-to-bottom means weakly decreasing here.
        let expect: Vec<(String, Vec<u32>)> = vec![
            ("UUURR".into(), vec![1, 1, 1]),
            ("UUURR".into(), vec![2, 1, 1]),
            ("UUURR".into(), vec![2, 2, 1]),
            ("UUURR".into(), vec![2, 2, 2]),
            ("UURUR".into(), vec![1, 1, 1]),
            ("UURUR".into(), vec![1, 1, 2]),
            ("UURUR".into(), vec![2, 1, 1]),
            ("UURUR".into(), vec![2, 1, 2]),
            ("UURUR".into(), vec![2, 2, 1]),
            ("UURUR".into(), vec![2, 2, 2]),
        ];
        assert_eq!(listed, expect);
    }

    #[test]
    fn enumeration_edge_cases() {
        // Single up-step: r choices.
        for n in 1..=3u32 {
            assert_eq!(parking_enumerate(1, n, 4).unwrap().len(), 4);
        }
        // Rank one: unique labeling per path.
        for (m, n) in [(3u32, 2u32), (4, 3)] {
            assert_eq!(
                parking_enumerate(m, n, 1).unwrap().len(),
                dyck_paths(m, n).unwrap().len()
            );
        }
    }

    #[test]
    fn counts_match_enumeration_and_dimension() {
        assert_eq!(parking_count(3, 2, 2).unwrap(), BigInt::from(10));
        // dim of the (n, m, r) = (3, 2, 2) module is (1/3) C(7, 2) = 7.
        assert_eq!(parking_count(2, 3, 2).unwrap(), BigInt::from(7));
        for (m, n) in [(3u32, 2u32), (2, 3), (4, 3), (5, 3)] {
            for r in 1..=3u32 {
                let count = parking_count(m, n, r).unwrap();
                assert_eq!(
                    count,
                    BigInt::from(parking_enumerate(m, n, r).unwrap().len())
                );
            }
            // Classical rational Catalan at rank one.
            let classical = binomial((n + m) as u64, m as u64) / BigInt::from(n + m);
            assert_eq!(parking_count(m, n, 1).unwrap(), classical);
        }
    }

    #[test]
    fn noncoprime_enumeration_is_permitted() {
        let pfs = parking_enumerate(2, 2, 2).unwrap();
        assert_eq!(parking_count(2, 2, 2).unwrap(), BigInt::from(pfs.len()));
        assert!(frobenius_from_dyck(2, 2).is_err());
        assert!(glr_char_from_dyck(2, 2, 2).is_err());
    }

    #[test]
    fn t0_character_examples() {
        let t = t0_char_from_pf(3, 2, 2).unwrap();
        let mut expect = TorusChar::zero(2);
        expect.add_term(TorusMono { q_exp: exp_int(0), t_exps: vec![-3, 0] }, rat(2));
        expect.add_term(TorusMono { q_exp: exp_int(0), t_exps: vec![-2, -1] }, rat(3));
        expect.add_term(TorusMono { q_exp: exp_int(0), t_exps: vec![-1, -2] }, rat(3));
        expect.add_term(TorusMono { q_exp: exp_int(0), t_exps: vec![0, -3] }, rat(2));
        assert_eq!(t, expect);
        assert!(t.is_symmetric());
        assert_eq!(t.eval_all_one(), rat(10));

        // Cross-module consistency with the graded torus character.
        assert_eq!(t, char_fd_torus(2, 3, 2).unwrap().forget_q());

        let t = t0_char_from_pf(1, 2, 3).unwrap();
        assert_eq!(t, char_fd_torus(2, 1, 3).unwrap().forget_q());
    }

    #[test]
    fn frobenius_from_dyck_examples() {
        let f = frobenius_from_dyck(3, 2).unwrap();
        let mut expect = SymFunc::zero(Basis::Schur, 3);
        expect.add_term(p(&[3]), rat(2));
        expect.add_term(p(&[2, 1]), rat(1));
        assert_eq!(f, expect);

        let f = frobenius_from_dyck(1, 4).unwrap();
        assert_eq!(f, SymFunc::schur(p(&[1])));

        let f = frobenius_from_dyck(2, 3).unwrap();
        let mut expect = SymFunc::zero(Basis::Schur, 2);
        expect.add_term(p(&[2]), rat(2));
        expect.add_term(p(&[1, 1]), rat(1));
        assert_eq!(f, expect);
    }

    #[test]
    fn frobenius_coefficients_are_glr_dims_over_n() {
        for (m, n) in [(3u32, 2u32), (2, 3), (4, 3), (3, 4), (5, 2)] {
            let f = frobenius_from_dyck(m, n).unwrap();
            for lam in crate::partitions::partitions_of(m) {
                let expected =
                    principal_spec(&lam, n).unwrap().eval_one() / rat(n as i64);
                assert_eq!(f.coeff(&lam), expected, "m={m} n={n} lambda={lam}");
            }
        }
    }

    #[test]
    fn glr_char_from_dyck_examples() {
        let g = glr_char_from_dyck(3, 2, 2).unwrap();
        assert_eq!(g, [(p(&[3]), 2), (p(&[2, 1]), 1)].into_iter().collect());

        let g = glr_char_from_dyck(1, 3, 2).unwrap();
        assert_eq!(g, [(p(&[1]), 1)].into_iter().collect());

        for r in 2..=3u32 {
            let g = glr_char_from_dyck(2, 3, r).unwrap();
            assert_eq!(g, [(p(&[2]), 2), (p(&[1, 1]), 1)].into_iter().collect());
        }
    }

    #[test]
    fn parking_function_validation_and_json() {
        let path = DyckPath::parse("UURUR").unwrap();
        assert!(ParkingFunction::new(path.clone(), vec![1, 2, 1]).is_err());
        let pf = ParkingFunction::new(path, vec![2, 1, 1]).unwrap();
        let v = pf.to_json();
        assert_eq!(v.to_string(), r#"{"steps":"UURUR","labels":[2,1,1]}"#);
        assert_eq!(ParkingFunction::from_json(&v).unwrap(), pf);
    }

    #[test]
    fn ascii_rendering() {
        let pf = ParkingFunction::new(DyckPath::parse("UURUR").unwrap(), vec![2, 1, 1]).unwrap();
        assert_eq!(pf.ascii(), ". 1\n1 .\n2 .");
    }
}
