//! Multiplicity vectors of integer partitions.
//!
//! A partition of `n` with exactly `k` parts is stored by multiplicities:
//! entry `j` (1-based) counts the parts equal to `j`, so `sum k_j = k` and
//! `sum j * k_j = n`. Two layouts of the same data appear throughout:
//!
//! * the compact layout of length `n - k + 1` (no part can exceed
//!   `n - k + 1` when there are `k` parts), and
//! * the padded layout of length `n`, which is the compact layout followed
//!   by `k - 1` zeros.
//!
//! Enumeration is a direct recursive scan over admissible multiplicities and
//! yields vectors in ascending lexicographic order. The recurrence-based
//! constructions are independent routes to the same sets and exist to be
//! checked against the direct scan.

use std::fmt;

use crate::error::{Error, Result};

/// A single multiplicity vector together with its `(n, k)` indices.
///
/// The derived order compares `n`, then `k`, then the entries
/// lexicographically; within one partition set this is plain lexicographic
/// order of the vectors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionVector {
    n: u32,
    k: u32,
    parts: Vec<u32>,
}

impl PartitionVector {
    /// Compact layout: length `n - k + 1`.
    pub fn lambda(n: u32, k: u32, parts: Vec<u32>) -> Result<Self> {
        check_indices(n, k)?;
        let want = (n - k + 1) as usize;
        if parts.len() != want {
            return Err(Error::InvalidPartition(format!(
                "expected length {want} for the compact layout of (n={n}, k={k}), got {}",
                parts.len()
            )));
        }
        check_sums(n, k, &parts)?;
        Ok(PartitionVector { n, k, parts })
    }

    /// Padded layout: length `n`.
    pub fn theta(n: u32, k: u32, parts: Vec<u32>) -> Result<Self> {
        check_indices(n, k)?;
        if parts.len() != n as usize {
            return Err(Error::InvalidPartition(format!(
                "expected length {n} for the padded layout of (n={n}, k={k}), got {}",
                parts.len()
            )));
        }
        check_sums(n, k, &parts)?;
        Ok(PartitionVector { n, k, parts })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Multiplicities, entry `j - 1` counting parts equal to `j`.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// True when stored in the compact layout.
    pub fn is_compact(&self) -> bool {
        self.parts.len() == (self.n - self.k + 1) as usize
    }
}

impl fmt::Display for PartitionVector {
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

fn check_indices(n: u32, k: u32) -> Result<()> {
    if k < 1 || k > n {
        return Err(Error::OutOfRange(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(())
}

fn check_sums(n: u32, k: u32, parts: &[u32]) -> Result<()> {
    let count: u64 = parts.iter().map(|&p| p as u64).sum();
    let weight: u64 = parts
        .iter()
        .enumerate()
        .map(|(i, &p)| (i as u64 + 1) * p as u64)
        .sum();
    if count != k as u64 || weight != n as u64 {
        return Err(Error::InvalidPartition(format!(
            "multiplicities sum to {count} (want {k}) with weight {weight} (want {n})"
        )));
    }
    Ok(())
}

/// All vectors of the given length with `sum v_j = count` and
/// `sum j * v_j = weight`, ascending lexicographic.
fn scan(len: usize, count: u32, weight: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(len);
    scan_rec(len, 1, count, weight, &mut prefix, &mut out);
    out
}

fn scan_rec(
    len: usize,
    j: u32,
    count: u32,
    weight: u32,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if prefix.len() == len {
        if count == 0 && weight == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    // Every remaining part weighs at least j and at most len.
    if weight < count * j || weight > count * len as u32 {
        return;
    }
    let max_here = (weight / j).min(count);
    for e in 0..=max_here {
        prefix.push(e);
        scan_rec(len, j + 1, count - e, weight - e * j, prefix, out);
        prefix.pop();
    }
}

fn wrap(n: u32, k: u32, raw: Vec<Vec<u32>>) -> Vec<PartitionVector> {
    raw.into_iter()
        .map(|parts| PartitionVector { n, k, parts })
        .collect()
}

/// The compact partition set of `(n, k)`, sorted lexicographically.
pub fn enum_lambda(n: u32, k: u32) -> Result<Vec<PartitionVector>> {
    check_indices(n, k)?;
    Ok(wrap(n, k, scan((n - k + 1) as usize, k, n)))
}

/// The padded partition set of `(n, k)`, sorted lexicographically.
pub fn enum_theta(n: u32, k: u32) -> Result<Vec<PartitionVector>> {
    check_indices(n, k)?;
    Ok(wrap(n, k, scan(n as usize, k, n)))
}

/// Pads a compact vector with `k - 1` trailing zeros.
pub fn embed_lambda_in_theta(v: &PartitionVector) -> Result<PartitionVector> {
    if !v.is_compact() {
        return Err(Error::InvalidPartition(format!(
            "{v} is not in the compact layout for (n={}, k={})",
            v.n, v.k
        )));
    }
    let mut parts = v.parts.clone();
    parts.resize(v.n as usize, 0);
    Ok(PartitionVector { n: v.n, k: v.k, parts })
}

/// Compact set built by the two-branch recurrence instead of the direct scan:
/// increment the first entry of every `(n-1, k-1)` vector, and (when
/// `2 <= k <= n/2`) reframe every `(n-k, k)` vector with a leading zero and
/// `k - 1` trailing zeros.
pub fn lambda_via_recurrence(n: u32, k: u32) -> Result<Vec<PartitionVector>> {
    check_indices(n, k)?;
    if k == 1 {
        let mut parts = vec![0; n as usize];
        parts[n as usize - 1] = 1;
        return Ok(vec![PartitionVector { n, k, parts }]);
    }
    if k == n {
        return Ok(vec![PartitionVector { n, k, parts: vec![n] }]);
    }
    let mut out = Vec::new();
    for v in lambda_via_recurrence(n - 1, k - 1)? {
        let mut parts = v.parts;
        parts[0] += 1;
        out.push(PartitionVector { n, k, parts });
    }
    if k <= n / 2 {
        for v in lambda_via_recurrence(n - k, k)? {
            let mut parts = Vec::with_capacity((n - k + 1) as usize);
            parts.push(0);
            parts.extend_from_slice(&v.parts);
            parts.resize((n - k + 1) as usize, 0);
            out.push(PartitionVector { n, k, parts });
        }
    }
    out.sort();
    Ok(out)
}

/// Padded set built by the two-branch recurrence: increment the first entry
/// and append a trailing zero to every `(n-1, k-1)` vector, and (when
/// `2 <= k <= n/2`) reframe every `(n-k, k)` vector with a leading zero and
/// `k - 1` trailing zeros.
pub fn theta_via_recurrence(n: u32, k: u32) -> Result<Vec<PartitionVector>> {
    check_indices(n, k)?;
    if k == 1 {
        let mut parts = vec![0; n as usize];
        parts[n as usize - 1] = 1;
        return Ok(vec![PartitionVector { n, k, parts }]);
    }
    if k == n {
        let mut parts = vec![0; n as usize];
        parts[0] = n;
        return Ok(vec![PartitionVector { n, k, parts }]);
    }
    let mut out = Vec::new();
    for v in theta_via_recurrence(n - 1, k - 1)? {
        let mut parts = v.parts;
        parts[0] += 1;
        parts.push(0);
        out.push(PartitionVector { n, k, parts });
    }
    if k <= n / 2 {
        for v in theta_via_recurrence(n - k, k)? {
            let mut parts = Vec::with_capacity(n as usize);
            parts.push(0);
            parts.extend_from_slice(&v.parts);
            parts.resize(n as usize, 0);
            out.push(PartitionVector { n, k, parts });
        }
    }
    out.sort();
    Ok(out)
}

/// Number of partitions of `n` into exactly `k` parts, by the classic
/// `p(n, k) = p(n-1, k-1) + p(n-k, k)` table. Cardinality oracle for the
/// enumerators.
pub fn partition_count(n: u32, k: u32) -> Result<u64> {
    check_indices(n, k)?;
    let (n, k) = (n as usize, k as usize);
    let mut table = vec![vec![0u64; k + 1]; n + 1];
    table[0][0] = 1;
    for i in 1..=n {
        for j in 1..=k.min(i) {
            table[i][j] = table[i - 1][j - 1] + table[i - j][j];
        }
    }
    Ok(table[n][k])
}
