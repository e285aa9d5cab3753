//! Partial and complete Bell polynomials, exponential and ordinary, with
//! several independent construction routes.
//!
//! The direct constructions expand over the compact partition sets from
//! [`crate::partitions`]. The recursion routes (a partition-sum recursion,
//! a convolution recursion, and a derivative recursion) rebuild the same
//! polynomials without enumerating partitions; the test suites hold all
//! routes equal. Recursions operate on the factorially scaled variant
//! `B_{n,k}(1! u1, 2! u2, ...)`, which is the form the Adomian layer
//! consumes, and plain arguments for the ordinary kind.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::partitions::{enum_lambda, PartitionVector};
use crate::poly::{MultiPoly, Var};
use crate::rational::{factorial, falling_factorial_int, rat, Rational};

/// A linear combination of partition vectors, the intermediate form of the
/// partition-sum recursion. Expanding each vector `v` to the monomial
/// `prod u_j^(v_j)` with its coefficient yields the polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionSum {
    n: u32,
    k: u32,
    coeffs: BTreeMap<PartitionVector, Rational>,
}

impl PartitionSum {
    fn new(n: u32, k: u32) -> Self {
        PartitionSum { n, k, coeffs: BTreeMap::new() }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PartitionVector, &Rational)> + '_ {
        self.coeffs.iter()
    }

    fn insert_new(&mut self, v: PartitionVector, c: Rational) {
        let clash = self.coeffs.insert(v, c);
        debug_assert!(clash.is_none(), "recursion branches must not overlap");
    }

    /// Expands the vectors into monomials.
    pub fn to_poly(&self) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (v, c) in &self.coeffs {
            let pairs: Vec<(Var, u32)> = v
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &e)| (Var::U(i as u32 + 1), e))
                .collect();
            out.add_term(crate::poly::Monomial::from_pairs(&pairs), c.clone());
        }
        out
    }
}

/// First-entry increment: maps every vector of a `(n-1, k-1)` sum into the
/// `(n, k)` set by bumping its first entry, rescaling each coefficient by
/// `outer / (v_1 + 1)`. Only defined on partition sums; the corresponding
/// polynomial substitution does not exist.
fn increment_first(src: &PartitionSum, n: u32, k: u32, outer: &Rational) -> Result<PartitionSum> {
    let mut out = PartitionSum::new(n, k);
    for (v, c) in src.iter() {
        let mut parts = v.parts().to_vec();
        let old = parts[0];
        parts[0] += 1;
        let w = PartitionVector::lambda(n, k, parts)?;
        out.insert_new(w, c * outer / rat(old as i64 + 1));
    }
    Ok(out)
}

/// Reframe: maps every vector of a `(n-k, k)` sum into the `(n, k)` set by
/// prepending a zero and padding with trailing zeros, scaling by `outer`.
fn reframe(src: &PartitionSum, n: u32, k: u32, outer: &Rational) -> Result<Vec<(PartitionVector, Rational)>> {
    let len = (n - k + 1) as usize;
    let mut out = Vec::new();
    for (v, c) in src.iter() {
        let mut parts = Vec::with_capacity(len);
        parts.push(0);
        parts.extend_from_slice(v.parts());
        parts.resize(len, 0);
        out.push((PartitionVector::lambda(n, k, parts)?, c * outer));
    }
    Ok(out)
}

fn check_nk(n: u32, k: u32) -> Result<()> {
    if k < 1 || k > n {
        return Err(Error::OutOfRange(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(())
}

/// Partial exponential Bell polynomial `B_{n,k}(u1, ..., u_{n-k+1})` by
/// direct expansion over the compact partition set.
pub fn partial_exp(n: u32, k: u32) -> Result<MultiPoly> {
    check_nk(n, k)?;
    let nfac = factorial(n);
    let mut out = MultiPoly::zero();
    for v in enum_lambda(n, k)? {
        let mut denom = Rational::one();
        let mut pairs = Vec::new();
        for (i, &e) in v.parts().iter().enumerate() {
            let j = i as u32 + 1;
            if e > 0 {
                denom *= factorial(e) * factorial(j).pow(e as i32);
                pairs.push((Var::U(j), e));
            }
        }
        out.add_term(crate::poly::Monomial::from_pairs(&pairs), &nfac / denom);
    }
    Ok(out)
}

/// Factorially scaled variant `B_{n,k}(1! u1, 2! u2, ...)`, produced by the
/// substitution `u_j -> j! u_j` on the plain polynomial.
pub fn partial_exp_scaled(n: u32, k: u32) -> Result<MultiPoly> {
    let plain = partial_exp(n, k)?;
    let mut bind = BTreeMap::new();
    for j in 1..=(n - k + 1) {
        bind.insert(Var::U(j), MultiPoly::term(factorial(j), &[(Var::U(j), 1)]));
    }
    Ok(plain.subst(&bind))
}

/// Partial ordinary Bell polynomial by direct expansion.
pub fn partial_ord(n: u32, k: u32) -> Result<MultiPoly> {
    check_nk(n, k)?;
    let kfac = factorial(k);
    let mut out = MultiPoly::zero();
    for v in enum_lambda(n, k)? {
        let mut denom = Rational::one();
        let mut pairs = Vec::new();
        for (i, &e) in v.parts().iter().enumerate() {
            if e > 0 {
                denom *= factorial(e);
                pairs.push((Var::U(i as u32 + 1), e));
            }
        }
        out.add_term(crate::poly::Monomial::from_pairs(&pairs), &kfac / denom);
    }
    Ok(out)
}

/// Complete exponential Bell polynomial, plain arguments. `n = 0` gives 1.
pub fn complete_exp(n: u32) -> Result<MultiPoly> {
    let mut out = MultiPoly::zero();
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    for k in 1..=n {
        out += partial_exp(n, k)?;
    }
    Ok(out)
}

/// Complete ordinary Bell polynomial `sum_k B^ord_{n,k} / k!`. `n = 0` gives 1.
pub fn complete_ord(n: u32) -> Result<MultiPoly> {
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    let mut out = MultiPoly::zero();
    for k in 1..=n {
        out += partial_ord(n, k)?.scale(&(Rational::one() / factorial(k)));
    }
    Ok(out)
}

/// Scaled partial exponential Bell polynomial as a partition sum, built by
/// the two-branch recursion: the first-entry increment of the `(n-1, k-1)`
/// sum scaled by `n`, plus (when `2 <= k <= n/2`) the reframed `(n-k, k)`
/// sum scaled by the falling factorial `(n)_k`.
pub fn partial_exp_duan(n: u32, k: u32) -> Result<PartitionSum> {
    check_nk(n, k)?;
    if k == 1 {
        let mut parts = vec![0; n as usize];
        parts[n as usize - 1] = 1;
        let mut out = PartitionSum::new(n, k);
        out.insert_new(PartitionVector::lambda(n, k, parts)?, factorial(n));
        return Ok(out);
    }
    if k == n {
        let mut out = PartitionSum::new(n, k);
        out.insert_new(PartitionVector::lambda(n, k, vec![n])?, Rational::one());
        return Ok(out);
    }
    let mut out = increment_first(&partial_exp_duan(n - 1, k - 1)?, n, k, &rat(n as i64))?;
    if k <= n / 2 {
        let outer = falling_factorial_int(n as i64, k);
        for (v, c) in reframe(&partial_exp_duan(n - k, k)?, n, k, &outer)? {
            out.insert_new(v, c);
        }
    }
    Ok(out)
}

/// Partial ordinary Bell polynomial as a partition sum: first-entry
/// increment scaled by `k`, plus the unscaled reframed `(n-k, k)` sum.
pub fn partial_ord_duan(n: u32, k: u32) -> Result<PartitionSum> {
    check_nk(n, k)?;
    if k == 1 || k == n {
        let parts = if k == n {
            vec![n]
        } else {
            let mut p = vec![0; n as usize];
            p[n as usize - 1] = 1;
            p
        };
        let mut out = PartitionSum::new(n, k);
        out.insert_new(PartitionVector::lambda(n, k, parts)?, Rational::one());
        return Ok(out);
    }
    let mut out = increment_first(&partial_ord_duan(n - 1, k - 1)?, n, k, &rat(k as i64))?;
    if k <= n / 2 {
        for (v, c) in reframe(&partial_ord_duan(n - k, k)?, n, k, &Rational::one())? {
            out.insert_new(v, c);
        }
    }
    Ok(out)
}

/// Scaled partial exponential Bell polynomial by the convolution recursion
/// over the first index.
pub fn partial_exp_conv(n: u32, k: u32) -> Result<MultiPoly> {
    check_nk(n, k)?;
    if k == 1 {
        return Ok(MultiPoly::term(factorial(n), &[(Var::U(n), 1)]));
    }
    let mut out = MultiPoly::zero();
    for j in 0..=(n - k) {
        let w = rat(j as i64 + 1) * falling_factorial_int(n as i64 - 1, j);
        let term = MultiPoly::term(w, &[(Var::U(j + 1), 1)]);
        out += &term * &partial_exp_conv(n - j - 1, k - 1)?;
    }
    Ok(out)
}

/// Scaled partial exponential Bell polynomial by the derivative recursion.
pub fn partial_exp_diff(n: u32, k: u32) -> Result<MultiPoly> {
    check_nk(n, k)?;
    if k == 1 {
        return Ok(MultiPoly::term(factorial(n), &[(Var::U(n), 1)]));
    }
    if k == n {
        return Ok(MultiPoly::var(Var::U(1)).pow(n));
    }
    let mut out = &MultiPoly::var(Var::U(1)) * &partial_exp_diff(n - 1, k - 1)?;
    let prev = partial_exp_diff(n - 1, k)?;
    for j in 1..=(n - k) {
        let term = MultiPoly::term(rat(j as i64 + 1), &[(Var::U(j + 1), 1)]);
        out += &term * &prev.partial(Var::U(j));
    }
    Ok(out)
}

/// Partial ordinary Bell polynomial by the convolution recursion.
pub fn partial_ord_conv(n: u32, k: u32) -> Result<MultiPoly> {
    check_nk(n, k)?;
    if k == 1 {
        return Ok(MultiPoly::var(Var::U(n)));
    }
    let mut out = MultiPoly::zero();
    for j in 0..=(n - k) {
        let term = MultiPoly::term(rat(j as i64 + 1), &[(Var::U(j + 1), 1)]);
        out += &term * &partial_ord_conv(n - j - 1, k - 1)?;
    }
    Ok(out.scale(&(rat(k as i64) / rat(n as i64))))
}

/// Partial ordinary Bell polynomial by the derivative recursion.
pub fn partial_ord_diff(n: u32, k: u32) -> Result<MultiPoly> {
    check_nk(n, k)?;
    if k == 1 {
        return Ok(MultiPoly::var(Var::U(n)));
    }
    if k == n {
        return Ok(MultiPoly::var(Var::U(1)).pow(n));
    }
    let first = (&MultiPoly::var(Var::U(1)) * &partial_ord_diff(n - 1, k - 1)?)
        .scale(&(rat(k as i64) / rat(n as i64)));
    let prev = partial_ord_diff(n - 1, k)?;
    let mut rest = MultiPoly::zero();
    for j in 1..=(n - k) {
        let term = MultiPoly::term(rat(j as i64 + 1), &[(Var::U(j + 1), 1)]);
        rest += &term * &prev.partial(Var::U(j));
    }
    Ok(first + rest.scale(&(Rational::one() / rat(n as i64))))
}

fn complete_exp_scaled_table(n: u32) -> Vec<MultiPoly> {
    let mut table: Vec<MultiPoly> = vec![MultiPoly::one()];
    for m in 1..=n {
        let mut acc = MultiPoly::zero();
        for k in 0..m {
            let w = rat(k as i64 + 1) * falling_factorial_int(m as i64 - 1, k);
            let term = MultiPoly::term(w, &[(Var::U(k + 1), 1)]);
            acc += &term * &table[(m - k - 1) as usize];
        }
        table.push(acc);
    }
    table
}

/// Scaled complete exponential Bell polynomial `B_n(1! u1, ..., n! un)` by
/// the convolution recursion. Equals the sum of [`partial_exp_scaled`] over k.
pub fn complete_exp_rec1(n: u32) -> Result<MultiPoly> {
    Ok(complete_exp_scaled_table(n).pop().expect("table is nonempty"))
}

/// Scaled complete exponential Bell polynomial by the derivative recursion.
pub fn complete_exp_rec2(n: u32) -> Result<MultiPoly> {
    let mut cur = MultiPoly::one();
    for m in 1..=n {
        let mut next = &MultiPoly::var(Var::U(1)) * &cur;
        for k in 1..m {
            let term = MultiPoly::term(rat(k as i64 + 1), &[(Var::U(k + 1), 1)]);
            next += &term * &cur.partial(Var::U(k));
        }
        cur = next;
    }
    Ok(cur)
}

/// Complete ordinary Bell polynomial by the convolution recursion
/// `n B^ord_n = sum_k (k+1) u_{k+1} B^ord_{n-k-1}`.
pub fn complete_ord_rec1(n: u32) -> Result<MultiPoly> {
    let mut table: Vec<MultiPoly> = vec![MultiPoly::one()];
    for m in 1..=n {
        let mut acc = MultiPoly::zero();
        for k in 0..m {
            let term = MultiPoly::term(rat(k as i64 + 1), &[(Var::U(k + 1), 1)]);
            acc += &term * &table[(m - k - 1) as usize];
        }
        table.push(acc.scale(&(Rational::one() / rat(m as i64))));
    }
    Ok(table.pop().expect("table is nonempty"))
}

/// Complete ordinary Bell polynomial by the derivative recursion. The
/// derivative acts on the ordinary polynomial of the previous order.
pub fn complete_ord_rec2(n: u32) -> Result<MultiPoly> {
    let mut cur = MultiPoly::one();
    for m in 1..=n {
        let mut next = &MultiPoly::var(Var::U(1)) * &cur;
        for k in 1..m {
            let term = MultiPoly::term(rat(k as i64 + 1), &[(Var::U(k + 1), 1)]);
            next += &term * &cur.partial(Var::U(k));
        }
        cur = next.scale(&(Rational::one() / rat(m as i64)));
    }
    Ok(cur)
}

/// Unsigned Stirling number of the first kind, by the additive recurrence
/// `c(n, k) = c(n-1, k-1) + (n-1) c(n-1, k)`.
pub fn stirling_first_unsigned(n: u32, k: u32) -> Result<Rational> {
    if k > n {
        return Err(Error::OutOfRange(format!("need k <= n, got n={n}, k={k}")));
    }
    let n = n as usize;
    let k = k as usize;
    let mut row: Vec<BigInt> = vec![BigInt::one()];
    for i in 1..=n {
        let mut next = vec![BigInt::from(0); i + 1];
        for j in 0..i {
            next[j + 1] += &row[j];
            next[j] += &row[j] * BigInt::from(i as u64 - 1);
        }
        row = next;
    }
    Ok(Rational::from_integer(row[k].clone()))
}
