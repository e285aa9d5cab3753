//! Symbolic verification of the Bell polynomial identity family.
//!
//! Every verifier builds both sides of an identity as canonical polynomials
//! in the parameters and compares them exactly. Nothing is assumed: a report
//! holds precisely when the two polynomials are equal. Identities whose
//! natural statement involves `1/alpha` are cleared by `alpha^n` first, so
//! both sides stay inside the ring.

use std::collections::BTreeMap;

use num_traits::One;

use crate::bell::{complete_exp, partial_exp, partial_ord, stirling_first_unsigned};
use crate::error::{Error, Result};
use crate::poly::{cleared_falling_inv_alpha, falling_factorial_poly, MultiPoly, Var};
use crate::rational::{binomial, factorial, falling_factorial, rat, ratio, Rational};

/// Outcome of one identity check. `holds` is true exactly when `lhs == rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub n: u32,
    pub m: Option<u32>,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
    pub holds: bool,
}

impl IdentityReport {
    fn new(name: impl Into<String>, n: u32, m: Option<u32>, lhs: MultiPoly, rhs: MultiPoly) -> Self {
        let holds = lhs == rhs;
        IdentityReport { name: name.into(), n, m, lhs, rhs, holds }
    }
}

fn require_positive(n: u32) -> Result<()> {
    if n < 1 {
        return Err(Error::OutOfRange("identity checks need n >= 1".to_string()));
    }
    Ok(())
}

/// Argument list `u_j -> (-1)^(j-1) (j-1)! alpha^j beta^(j-1)`.
fn exp_identity_args(max_j: u32) -> BTreeMap<Var, MultiPoly> {
    (1..=max_j)
        .map(|j| {
            let sign = if (j - 1).is_multiple_of(2) { rat(1) } else { rat(-1) };
            let coeff = sign * factorial(j - 1);
            (Var::U(j), MultiPoly::term(coeff, &[(Var::Alpha, j), (Var::Beta, j - 1)]))
        })
        .collect()
}

/// Argument list `u_j -> (-1)^(j-1) alpha^j beta^(j-1) / j`.
fn ord_identity_args(max_j: u32) -> BTreeMap<Var, MultiPoly> {
    (1..=max_j)
        .map(|j| {
            let sign = if (j - 1).is_multiple_of(2) { rat(1) } else { rat(-1) };
            let coeff = sign / rat(j as i64);
            (Var::U(j), MultiPoly::term(coeff, &[(Var::Alpha, j), (Var::Beta, j - 1)]))
        })
        .collect()
}

/// `sum_k (-beta)^k B_{n,k}` at the exponential argument list equals
/// `n! (-alpha beta)^n`, verified symbolically in `alpha` and `beta`.
pub fn verify_exp_identity(n: u32) -> Result<IdentityReport> {
    require_positive(n)?;
    let args = exp_identity_args(n);
    let mut lhs = MultiPoly::zero();
    for k in 1..=n {
        let weight = MultiPoly::term(
            if k.is_multiple_of(2) { rat(1) } else { rat(-1) },
            &[(Var::Beta, k)],
        );
        lhs += &weight * &partial_exp(n, k)?.subst(&args);
    }
    let sign = if n.is_multiple_of(2) { rat(1) } else { rat(-1) };
    let rhs = MultiPoly::term(sign * factorial(n), &[(Var::Alpha, n), (Var::Beta, n)]);
    Ok(IdentityReport::new("exp", n, None, lhs, rhs))
}

/// The four sign specializations `(alpha, beta) in {-1,1} x {1,-1}` of the
/// exponential identity, obtained by substituting into the symbolic sides.
pub fn verify_exp_specializations(n: u32) -> Result<Vec<IdentityReport>> {
    let symbolic = verify_exp_identity(n)?;
    specialize_both_sides("exp", n, &symbolic)
}

/// `sum_k ((-beta)^k / k!) B^ord_{n,k}` at the ordinary argument list equals
/// `(-alpha beta)^n`.
pub fn verify_ord_identity(n: u32) -> Result<IdentityReport> {
    require_positive(n)?;
    let args = ord_identity_args(n);
    let mut lhs = MultiPoly::zero();
    for k in 1..=n {
        let sign = if k.is_multiple_of(2) { rat(1) } else { rat(-1) };
        let weight = MultiPoly::term(sign / factorial(k), &[(Var::Beta, k)]);
        lhs += &weight * &partial_ord(n, k)?.subst(&args);
    }
    let sign = if n.is_multiple_of(2) { rat(1) } else { rat(-1) };
    let rhs = MultiPoly::term(sign, &[(Var::Alpha, n), (Var::Beta, n)]);
    Ok(IdentityReport::new("ord", n, None, lhs, rhs))
}

/// Sign specializations of the ordinary identity.
pub fn verify_ord_specializations(n: u32) -> Result<Vec<IdentityReport>> {
    let symbolic = verify_ord_identity(n)?;
    specialize_both_sides("ord", n, &symbolic)
}

fn specialize_both_sides(
    tag: &str,
    n: u32,
    symbolic: &IdentityReport,
) -> Result<Vec<IdentityReport>> {
    let pairs = [(-1i64, 1i64), (1, 1), (-1, -1), (1, -1)];
    let mut out = Vec::with_capacity(pairs.len());
    for (a, b) in pairs {
        let mut bind = BTreeMap::new();
        bind.insert(Var::Alpha, MultiPoly::int(a));
        bind.insert(Var::Beta, MultiPoly::int(b));
        out.push(IdentityReport::new(
            format!("{tag}[alpha={a},beta={b}]"),
            n,
            None,
            symbolic.lhs.subst(&bind),
            symbolic.rhs.subst(&bind),
        ));
    }
    Ok(out)
}

/// `sum_k (1 - 1/alpha)_k B_{n,k}((alpha)_1, ..., (alpha)_{n-k+1})` equals
/// `(alpha - 1)_n`. Both sides are cleared by `alpha^n`, which turns every
/// coefficient into a polynomial; the cleared sides are compared.
pub fn verify_falling_factorial_identity(n: u32) -> Result<IdentityReport> {
    require_positive(n)?;
    let alpha = MultiPoly::var(Var::Alpha);
    let args: BTreeMap<Var, MultiPoly> = (1..=n)
        .map(|j| (Var::U(j), falling_factorial_poly(&alpha, j)))
        .collect();
    let mut lhs = MultiPoly::zero();
    for k in 1..=n {
        let lift = MultiPoly::term(Rational::one(), &[(Var::Alpha, n - k)]);
        lhs += &(&cleared_falling_inv_alpha(k) * &lift) * &partial_exp(n, k)?.subst(&args);
    }
    let alpha_minus_one = &alpha - &MultiPoly::one();
    let rhs = &alpha.pow(n) * &falling_factorial_poly(&alpha_minus_one, n);
    Ok(IdentityReport::new("falling", n, None, lhs, rhs))
}

/// `sum_k (1/k!) (1 - 1/m)_k B^ord_{n,k}(C(m,1), ..., C(m,n-k+1))` equals
/// `C(m-1, n)` for integers `m > n >= 1`. Fully numeric.
pub fn verify_binomial_identity(m: u32, n: u32) -> Result<IdentityReport> {
    require_positive(n)?;
    if m <= n {
        return Err(Error::OutOfRange(format!("need m > n, got m={m}, n={n}")));
    }
    let args: BTreeMap<Var, MultiPoly> = (1..=n)
        .map(|j| (Var::U(j), MultiPoly::constant(binomial(m, j))))
        .collect();
    let inv_m = Rational::one() - ratio(1, m as i64);
    let mut lhs = MultiPoly::zero();
    for k in 1..=n {
        let w = falling_factorial(&inv_m, k) / factorial(k);
        lhs += partial_ord(n, k)?.subst(&args).scale(&w);
    }
    let rhs = MultiPoly::constant(binomial(m - 1, n));
    Ok(IdentityReport::new("binomial", n, Some(m), lhs, rhs))
}

/// The two factorial evaluations of the complete exponential Bell
/// polynomial: at `u_j = (-1)^j (j-1)!` it equals `(-1)^n n!`, and at
/// `u_j = (j-1)!` it equals `n!`.
pub fn verify_complete_bell_remark(n: u32) -> Result<Vec<IdentityReport>> {
    require_positive(n)?;
    let complete = complete_exp(n)?;
    let signed_args: BTreeMap<Var, MultiPoly> = (1..=n)
        .map(|j| {
            let sign = if j.is_multiple_of(2) { rat(1) } else { rat(-1) };
            (Var::U(j), MultiPoly::constant(sign * factorial(j - 1)))
        })
        .collect();
    let plain_args: BTreeMap<Var, MultiPoly> = (1..=n)
        .map(|j| (Var::U(j), MultiPoly::constant(factorial(j - 1))))
        .collect();
    let sign = if n.is_multiple_of(2) { rat(1) } else { rat(-1) };
    Ok(vec![
        IdentityReport::new(
            "complete[signed]",
            n,
            None,
            complete.subst(&signed_args),
            MultiPoly::constant(sign * factorial(n)),
        ),
        IdentityReport::new(
            "complete[plain]",
            n,
            None,
            complete.subst(&plain_args),
            MultiPoly::constant(factorial(n)),
        ),
    ])
}

/// Per-k evaluation `B_{n,k}(0!, 1!, ..., (n-k)!) = c(n, k)` against the
/// recurrence-built unsigned Stirling numbers of the first kind, plus the
/// row-sum check `sum_k c(n, k) = n!`.
pub fn verify_stirling_connection(n: u32) -> Result<Vec<IdentityReport>> {
    require_positive(n)?;
    let args: BTreeMap<Var, MultiPoly> = (1..=n)
        .map(|j| (Var::U(j), MultiPoly::constant(factorial(j - 1))))
        .collect();
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut row_sum = Rational::from_integer(0.into());
    for k in 1..=n {
        let value = partial_exp(n, k)?.subst(&args);
        let stirling = stirling_first_unsigned(n, k)?;
        row_sum += &stirling;
        out.push(IdentityReport::new(
            format!("stirling[k={k}]"),
            n,
            None,
            value,
            MultiPoly::constant(stirling),
        ));
    }
    out.push(IdentityReport::new(
        "stirling[row-sum]",
        n,
        None,
        MultiPoly::constant(row_sum),
        MultiPoly::constant(factorial(n)),
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_identity_small_orders() {
        let r = verify_exp_identity(2).unwrap();
        assert!(r.holds);
        // 2 alpha^2 beta^2.
        assert_eq!(r.lhs.to_string(), "2*alpha^2*beta^2");
        for n in 1..=8 {
            assert!(verify_exp_identity(n).unwrap().holds, "n={n}");
        }
        assert!(verify_exp_identity(0).is_err());
    }

    #[test]
    fn exp_specializations_match_direct_numeric_route() {
        for n in 1..=8u32 {
            let reports = verify_exp_specializations(n).unwrap();
            assert_eq!(reports.len(), 4);
            for r in &reports {
                assert!(r.holds, "{} at n={n}", r.name);
            }
            // Independent route: evaluate the Bell polynomials at numeric
            // arguments instead of substituting into the symbolic sides.
            for (a, b) in [(-1i64, 1i64), (1, 1), (-1, -1), (1, -1)] {
                let args: BTreeMap<Var, MultiPoly> = (1..=n)
                    .map(|j| {
                        let v = (if (j - 1).is_multiple_of(2) { rat(1) } else { rat(-1) })
                            * factorial(j - 1)
                            * crate::rational::rational_pow(&rat(a), j as i64).unwrap()
                            * crate::rational::rational_pow(&rat(b), j as i64 - 1).unwrap();
                        (Var::U(j), MultiPoly::constant(v))
                    })
                    .collect();
                let mut direct = MultiPoly::zero();
                for k in 1..=n {
                    let w = (if k.is_multiple_of(2) { rat(1) } else { rat(-1) })
                        * crate::rational::rational_pow(&rat(b), k as i64).unwrap();
                    direct += partial_exp(n, k).unwrap().subst(&args).scale(&w);
                }
                let expected = (if n.is_multiple_of(2) { rat(1) } else { rat(-1) })
                    * factorial(n)
                    * crate::rational::rational_pow(&rat(a * b), n as i64).unwrap();
                assert_eq!(direct, MultiPoly::constant(expected), "a={a} b={b} n={n}");
            }
        }
    }

    #[test]
    fn ord_identity_small_orders() {
        let r = verify_ord_identity(2).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs.to_string(), "alpha^2*beta^2");
        for n in 1..=8 {
            assert!(verify_ord_identity(n).unwrap().holds, "n={n}");
            for s in verify_ord_specializations(n).unwrap() {
                assert!(s.holds, "{} at n={n}", s.name);
            }
        }
    }

    #[test]
    fn falling_factorial_identity_cleared_degree() {
        for n in 1..=8u32 {
            let r = verify_falling_factorial_identity(n).unwrap();
            assert!(r.holds, "n={n}");
            // After clearing by alpha^n both sides have degree 2n in alpha.
            assert_eq!(r.lhs.max_power(Var::Alpha), 2 * n, "degree at n={n}");
        }
    }

    #[test]
    fn falling_factorial_identity_n2_by_hand() {
        // (1-1/alpha) B_{2,1}((a)_1,(a)_2) + (1-1/alpha)(-1/alpha) B_{2,2}((a)_1)
        // = (alpha-1)^2 - (alpha-1) = (alpha-1)(alpha-2), cleared by alpha^2.
        let r = verify_falling_factorial_identity(2).unwrap();
        let alpha = MultiPoly::var(Var::Alpha);
        let want = &alpha.pow(2)
            * &(&(&alpha - &MultiPoly::one()) * &(&alpha - &MultiPoly::int(2)));
        assert_eq!(r.rhs, want);
        assert!(r.holds);
    }

    #[test]
    fn binomial_identity_values() {
        let r = verify_binomial_identity(3, 2).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, MultiPoly::int(1), "C(2, 2) = 1");
        for m in 2..=10u32 {
            for n in 1..m {
                assert!(verify_binomial_identity(m, n).unwrap().holds, "m={m} n={n}");
            }
        }
        assert!(verify_binomial_identity(3, 3).is_err());
    }

    #[test]
    fn complete_bell_remark_values() {
        for n in 1..=8 {
            let rs = verify_complete_bell_remark(n).unwrap();
            assert_eq!(rs.len(), 2);
            for r in &rs {
                assert!(r.holds, "{} at n={n}", r.name);
            }
        }
        let rs = verify_complete_bell_remark(3).unwrap();
        assert_eq!(rs[0].rhs, MultiPoly::int(-6));
        assert_eq!(rs[1].rhs, MultiPoly::int(6));
    }

    #[test]
    fn stirling_connection_values() {
        let rs = verify_stirling_connection(4).unwrap();
        // k = 1..4 plus the row sum.
        assert_eq!(rs.len(), 5);
        for r in &rs {
            assert!(r.holds, "{}", r.name);
        }
        assert_eq!(rs[1].rhs, MultiPoly::int(11), "c(4, 2)");
        for n in 1..=9 {
            assert!(verify_stirling_connection(n).unwrap().iter().all(|r| r.holds));
        }
    }
}
