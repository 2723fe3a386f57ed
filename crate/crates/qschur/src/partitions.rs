//! Integer partitions and the index bookkeeping used by the determinant formulas.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers; part `i` beyond the
/// length reads as zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition(Vec<u64>);

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Partition> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Vec<u64> {
        p.0
    }
}

impl Partition {
    /// Validates weak decrease; trailing zeros are dropped, other zeros rejected.
    pub fn new(mut parts: Vec<u64>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// The one-row partition `(r)` (empty for `r = 0`).
    pub fn row(r: u64) -> Partition {
        if r == 0 {
            Partition::empty()
        } else {
            Partition(vec![r])
        }
    }

    /// The one-column partition `(1^r)`.
    pub fn column(r: usize) -> Partition {
        Partition(vec![1; r])
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    /// Part `i` counted from zero, zero beyond the length.
    pub fn part(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((1..=width).map(|c| self.0.iter().filter(|&&p| p >= c).count() as u64).collect())
    }

    /// `self ⊇ other` as Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    /// `self / other` is a vertical strip: `other ⊆ self` and every row of
    /// `self` exceeds the matching row of `other` by at most one.
    pub fn is_vertical_strip_over(&self, other: &Partition) -> bool {
        self.contains(other) && (0..self.len()).all(|i| self.part(i) <= other.part(i) + 1)
    }

    /// `(λ_1 - 1, ..., λ_n - 1)` for a partition with exactly `n` parts.
    pub fn decrement_all(&self, n: usize) -> Result<Partition> {
        if self.len() != n {
            return Err(Error::NotFullColumn { n });
        }
        Partition::new(self.0.iter().map(|p| p - 1).collect())
    }

    /// All `ν` such that `self / ν` is a vertical strip, by descending `|ν|`
    /// and then ascending lexicographic order.
    pub fn vertical_strip_subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = self.0.clone();
        strip_rec(&self.0, self.0.len(), &mut current, &mut out);
        out.sort_by(|a, b| b.size().cmp(&a.size()).then_with(|| a.0.cmp(&b.0)));
        out
    }

    /// All partitions `ν` with `self ⊆ ν ⊆ outer`, in descending size then
    /// ascending lexicographic order.
    pub fn interval_to(&self, outer: &Partition) -> Vec<Partition> {
        if !outer.contains(self) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(outer.len());
        interval_rec(self, outer, 0, u64::MAX, &mut cur, &mut out);
        out.sort_by(|a, b| b.size().cmp(&a.size()).then_with(|| a.0.cmp(&b.0)));
        out
    }

    /// All partitions of size at most `max_size` with at most `max_len` parts,
    /// in ascending size then descending lexicographic order.
    pub fn all_up_to(max_size: u64, max_len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for n in 0..=max_size {
            let mut cur = Vec::new();
            partitions_of(n, n, max_len, &mut cur, &mut out);
        }
        out
    }
}

/// Decides rows from the bottom up so that the row below is already fixed
/// when row `i` considers losing its last cell.
fn strip_rec(lam: &[u64], i: usize, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if i == 0 {
        out.push(Partition::new(cur.clone()).expect("strip removal keeps a partition"));
        return;
    }
    let row = i - 1;
    strip_rec(lam, row, cur, out);
    if cur.get(row + 1).copied().unwrap_or(0) < lam[row] {
        cur[row] = lam[row] - 1;
        strip_rec(lam, row, cur, out);
        cur[row] = lam[row];
    }
}

fn interval_rec(
    inner: &Partition,
    outer: &Partition,
    i: usize,
    cap: u64,
    cur: &mut Vec<u64>,
    out: &mut Vec<Partition>,
) {
    if i == outer.len() {
        out.push(Partition::new(cur.clone()).expect("weakly decreasing by construction"));
        return;
    }
    let hi = outer.part(i).min(cap);
    let lo = inner.part(i);
    if lo > hi {
        return;
    }
    for v in lo..=hi {
        cur.push(v);
        interval_rec(inner, outer, i + 1, v, cur, out);
        cur.pop();
    }
}

fn partitions_of(n: u64, max_part: u64, max_len: usize, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if cur.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(n)).rev() {
        cur.push(p);
        partitions_of(n - p, p, max_len, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts, `[]` for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "[]");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Partition> {
        let t = s.trim();
        let t = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(t);
        if t.is_empty() || t == "[]" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| p.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad partition part '{p}' in '{s}'"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// `δ = (n-1, n-2, ..., 0)`.
pub fn delta(n: usize) -> Vec<u64> {
    (0..n).rev().map(|i| i as u64).collect()
}

/// `λ + δ` after padding `λ` with zeros to length `n`.
pub fn pad_and_add(lambda: &Partition, n: usize) -> Result<Vec<u64>> {
    if lambda.len() > n {
        return Err(Error::LengthExceeded { len: lambda.len(), n });
    }
    Ok(delta(n).iter().enumerate().map(|(i, d)| d + lambda.part(i)).collect())
}

/// The exponent `(q-1) * sum_{i: λ_i > ν_i} q^{λ_i + n - 1 - i}` (rows
/// counted from one), defined when `λ/ν` is a vertical strip.
pub fn q_exponent(lambda: &Partition, nu: &Partition, n: usize, q: u32) -> Result<u64> {
    if !lambda.is_vertical_strip_over(nu) {
        return Err(Error::NotVerticalStrip(format!("{lambda}/{nu}")));
    }
    if lambda.len() >= n {
        return Err(Error::LengthTooLong { len: lambda.len(), dim: n });
    }
    let q = q as u64;
    let mut total: u64 = 0;
    for i in 0..lambda.len() {
        if lambda.part(i) > nu.part(i) {
            // Row i+1 in one-based terms: exponent λ_i + n - 1 - (i+1).
            let e = lambda.part(i) + n as u64 - 2 - i as u64;
            let term = q.checked_pow(e as u32).ok_or(Error::ExponentOverflow)?;
            total = total.checked_add(term).ok_or(Error::ExponentOverflow)?;
        }
    }
    total.checked_mul(q - 1).ok_or(Error::ExponentOverflow)
}

/// Given strictly decreasing `alpha`, `beta` with `alpha_i - beta_i ∈ {0, 1}`
/// and a permutation `sigma` (as images of `0..n`), returns the first index
/// `i` with `alpha_i - beta_{sigma(i)} ∉ {0, 1}`, or `None` when `sigma` is
/// the identity.
pub fn perm_witness(alpha: &[i64], beta: &[i64], sigma: &[usize]) -> Result<Option<usize>> {
    let n = alpha.len();
    let strictly_decreasing = |v: &[i64]| v.windows(2).all(|w| w[0] > w[1]);
    if beta.len() != n || sigma.len() != n {
        return Err(Error::HypothesisViolated("alpha, beta and sigma must have equal length".into()));
    }
    if !strictly_decreasing(alpha) || !strictly_decreasing(beta) {
        return Err(Error::HypothesisViolated("alpha and beta must be strictly decreasing".into()));
    }
    if alpha.iter().zip(beta).any(|(a, b)| !(0..=1).contains(&(a - b))) {
        return Err(Error::HypothesisViolated("alpha_i - beta_i must lie in {0, 1}".into()));
    }
    let mut seen = vec![false; n];
    for &s in sigma {
        if s >= n || std::mem::replace(&mut seen[s], true) {
            return Err(Error::HypothesisViolated("sigma is not a permutation".into()));
        }
    }
    if sigma.iter().enumerate().all(|(i, &s)| i == s) {
        return Ok(None);
    }
    let witness = (0..n).find(|&i| !(0..=1).contains(&(alpha[i] - beta[sigma[i]])));
    match witness {
        Some(i) => Ok(Some(i)),
        None => Err(Error::HypothesisViolated(format!(
            "no witness for alpha={alpha:?}, beta={beta:?}, sigma={sigma:?}"
        ))),
    }
}
