//! Bulk cross-checks over index ranges.
//!
//! Each suite expands a range of indices into independent cells, runs one
//! check per cell, and collects human-readable failure descriptions. Cells
//! never share state, so with the `parallel` feature enabled they run on the
//! rayon thread pool when asked to; without the feature the flag is ignored
//! and everything runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::adm::{
    closed_form_exp_series, closed_form_linear_series, closed_form_power_series, compare_series,
    solve, AlphaParam,
};
use crate::adomian::{self, Nonlinearity};
use crate::bell;
use crate::error::Result;
use crate::identities;
use crate::partitions::{
    embed_lambda_in_theta, enum_lambda, enum_theta, lambda_via_recurrence, partition_count,
    theta_via_recurrence,
};
use crate::poly::{MultiPoly, Var};
use crate::rational::{factorial, rat};

/// Result of one suite: how many cells ran and which ones failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs `check` over all cells, parallel when requested and compiled in.
/// A cell contributes a failure string when the check returns one.
fn run_cells<T, F>(cells: Vec<T>, parallel: bool, check: F) -> Vec<String>
where
    T: Send + Sync,
    F: Fn(&T) -> Option<String> + Sync,
{
    #[cfg(feature = "parallel")]
    {
        if parallel {
            let mut failures: Vec<String> = cells.par_iter().filter_map(&check).collect();
            failures.sort();
            return failures;
        }
    }
    let _ = parallel;
    cells.iter().filter_map(check).collect()
}

/// Turns an error or a false condition into a failure description.
fn expect_true(label: &str, what: Result<bool>) -> Option<String> {
    match what {
        Ok(true) => None,
        Ok(false) => Some(format!("{label}: mismatch")),
        Err(e) => Some(format!("{label}: {e}")),
    }
}

/// Partition-set checks: both recurrences against the direct scans for all
/// `1 <= k <= n <= max_recur`, the padding embedding, and enumerated sizes
/// against the counting recurrence for all `1 <= k <= n <= max_count`.
pub fn partition_suite(max_recur: u32, max_count: u32, parallel: bool) -> SuiteOutcome {
    let mut cells = Vec::new();
    for n in 1..=max_recur.max(max_count) {
        for k in 1..=n {
            cells.push((n, k));
        }
    }
    let cases = cells.len();
    let failures = run_cells(cells, parallel, |&(n, k)| {
        if n <= max_recur {
            let direct = match enum_lambda(n, k) {
                Ok(v) => v,
                Err(e) => return Some(format!("compact scan ({n},{k}): {e}")),
            };
            if let Some(f) = expect_true(
                &format!("compact recurrence ({n},{k})"),
                lambda_via_recurrence(n, k).map(|v| v == direct),
            ) {
                return Some(f);
            }
            let padded = match enum_theta(n, k) {
                Ok(v) => v,
                Err(e) => return Some(format!("padded scan ({n},{k}): {e}")),
            };
            if let Some(f) = expect_true(
                &format!("padded recurrence ({n},{k})"),
                theta_via_recurrence(n, k).map(|v| v == padded),
            ) {
                return Some(f);
            }
            let embedded: Result<Vec<_>> = direct.iter().map(embed_lambda_in_theta).collect();
            if let Some(f) = expect_true(
                &format!("padding embedding ({n},{k})"),
                embedded.map(|v| v == padded),
            ) {
                return Some(f);
            }
        }
        if n <= max_count {
            let size = match enum_lambda(n, k) {
                Ok(v) => v.len() as u64,
                Err(e) => return Some(format!("count scan ({n},{k}): {e}")),
            };
            if let Some(f) = expect_true(
                &format!("cardinality ({n},{k})"),
                partition_count(n, k).map(|c| c == size),
            ) {
                return Some(f);
            }
        }
        None
    });
    SuiteOutcome { name: "partitions".to_string(), cases, failures }
}

enum BellCell {
    Partial(u32, u32),
    Complete(u32),
}

/// Bell-route checks: the partition-sum, convolution and derivative
/// recursions against the direct expansions (exponential and ordinary), the
/// scaled/ordinary conversion, and the complete recursions against the
/// summed partial polynomials, for all indices up to `max_n`.
pub fn bell_suite(max_n: u32, parallel: bool) -> SuiteOutcome {
    let mut cells = Vec::new();
    for n in 1..=max_n {
        for k in 1..=n {
            cells.push(BellCell::Partial(n, k));
        }
        cells.push(BellCell::Complete(n));
    }
    let cases = cells.len();
    let failures = run_cells(cells, parallel, |cell| match *cell {
        BellCell::Partial(n, k) => {
            let scaled = match bell::partial_exp_scaled(n, k) {
                Ok(p) => p,
                Err(e) => return Some(format!("scaled expansion ({n},{k}): {e}")),
            };
            let ord = match bell::partial_ord(n, k) {
                Ok(p) => p,
                Err(e) => return Some(format!("ordinary expansion ({n},{k}): {e}")),
            };
            let checks: [(&str, Result<MultiPoly>); 6] = [
                ("partition-sum recursion", bell::partial_exp_duan(n, k).map(|s| s.to_poly())),
                ("convolution recursion", bell::partial_exp_conv(n, k)),
                ("derivative recursion", bell::partial_exp_diff(n, k)),
                (
                    "ordinary partition-sum recursion",
                    bell::partial_ord_duan(n, k).map(|s| s.to_poly()),
                ),
                ("ordinary convolution recursion", bell::partial_ord_conv(n, k)),
                ("ordinary derivative recursion", bell::partial_ord_diff(n, k)),
            ];
            for (label, got) in checks {
                let want = if label.starts_with("ordinary") { &ord } else { &scaled };
                if let Some(f) =
                    expect_true(&format!("{label} ({n},{k})"), got.map(|p| &p == want))
                {
                    return Some(f);
                }
            }
            let converted = scaled.scale(&(factorial(k) / factorial(n)));
            if converted != ord {
                return Some(format!("scaled/ordinary conversion ({n},{k}): mismatch"));
            }
            None
        }
        BellCell::Complete(n) => {
            let mut scaled_sum = MultiPoly::zero();
            let mut plain_sum = MultiPoly::zero();
            for k in 1..=n {
                match bell::partial_exp_scaled(n, k) {
                    Ok(p) => scaled_sum += p,
                    Err(e) => return Some(format!("scaled sum ({n}): {e}")),
                }
                match bell::partial_exp(n, k) {
                    Ok(p) => plain_sum += p,
                    Err(e) => return Some(format!("plain sum ({n}): {e}")),
                }
            }
            let ord = match bell::complete_ord(n) {
                Ok(p) => p,
                Err(e) => return Some(format!("ordinary complete ({n}): {e}")),
            };
            let checks: [(&str, Result<MultiPoly>, &MultiPoly); 5] = [
                ("complete convolution recursion", bell::complete_exp_rec1(n), &scaled_sum),
                ("complete derivative recursion", bell::complete_exp_rec2(n), &scaled_sum),
                ("complete expansion", bell::complete_exp(n), &plain_sum),
                ("complete ordinary convolution recursion", bell::complete_ord_rec1(n), &ord),
                ("complete ordinary derivative recursion", bell::complete_ord_rec2(n), &ord),
            ];
            for (label, got, want) in checks {
                if let Some(f) =
                    expect_true(&format!("{label} ({n})"), got.map(|p| &p == want))
                {
                    return Some(f);
                }
            }
            None
        }
    });
    SuiteOutcome { name: "bell-routes".to_string(), cases, failures }
}

/// Adomian-route checks: all six construction routes agree for
/// `0 <= n <= max_n`, and every part is degree/weight homogeneous.
pub fn adomian_suite(max_n: u32, parallel: bool) -> SuiteOutcome {
    let cells: Vec<u32> = (0..=max_n).collect();
    let cases = cells.len();
    let failures = run_cells(cells, parallel, |&n| {
        let base = match adomian::rach(n) {
            Ok(a) => a,
            Err(e) => return Some(format!("closed form ({n}): {e}")),
        };
        let routes: [(&str, Result<adomian::AdomianPoly>); 5] = [
            ("scaled Bell route", adomian::from_bell(n)),
            ("ordinary Bell route", adomian::from_ord_bell(n)),
            ("shift recursion", adomian::duan_rec1(n)),
            ("derivative recursion", adomian::duan_rec2(n)),
            ("series oracle", adomian::param_oracle(n)),
        ];
        for (label, got) in routes {
            if let Some(f) = expect_true(&format!("{label} ({n})"), got.map(|a| a == base)) {
                return Some(f);
            }
        }
        for (k, p) in base.parts() {
            for (m, _) in p.terms() {
                let mut deg = 0u64;
                let mut weight = 0u64;
                for (v, e) in m.iter() {
                    if let Var::U(j) = v {
                        deg += e as u64;
                        weight += j as u64 * e as u64;
                    } else {
                        return Some(format!("foreign variable {v} in A_{n}"));
                    }
                }
                if deg != k as u64 || weight != n as u64 {
                    return Some(format!("inhomogeneous part {k} of A_{n}"));
                }
            }
        }
        None
    });
    SuiteOutcome { name: "adomian-routes".to_string(), cases, failures }
}

enum IdentityCell {
    Exp(u32),
    ExpSpec(u32),
    Ord(u32),
    OrdSpec(u32),
    Falling(u32),
    Complete(u32),
    Stirling(u32),
    Binomial(u32, u32),
}

/// Identity checks: the exponential and ordinary identities with their sign
/// specializations, the falling-factorial identity, the complete-Bell
/// evaluations and the Stirling connection for `1 <= n <= max_n`, plus the
/// binomial identity for all `1 <= n < m <= max_m`.
pub fn identity_suite(max_n: u32, max_m: u32, parallel: bool) -> SuiteOutcome {
    let mut cells = Vec::new();
    for n in 1..=max_n {
        cells.push(IdentityCell::Exp(n));
        cells.push(IdentityCell::ExpSpec(n));
        cells.push(IdentityCell::Ord(n));
        cells.push(IdentityCell::OrdSpec(n));
        cells.push(IdentityCell::Falling(n));
        cells.push(IdentityCell::Complete(n));
        cells.push(IdentityCell::Stirling(n));
    }
    for m in 2..=max_m {
        for n in 1..m {
            cells.push(IdentityCell::Binomial(m, n));
        }
    }
    let cases = cells.len();
    let failures = run_cells(cells, parallel, |cell| {
        let reports = match cell {
            IdentityCell::Exp(n) => identities::verify_exp_identity(*n).map(|r| vec![r]),
            IdentityCell::ExpSpec(n) => identities::verify_exp_specializations(*n),
            IdentityCell::Ord(n) => identities::verify_ord_identity(*n).map(|r| vec![r]),
            IdentityCell::OrdSpec(n) => identities::verify_ord_specializations(*n),
            IdentityCell::Falling(n) => {
                identities::verify_falling_factorial_identity(*n).map(|r| vec![r])
            }
            IdentityCell::Complete(n) => identities::verify_complete_bell_remark(*n),
            IdentityCell::Stirling(n) => identities::verify_stirling_connection(*n),
            IdentityCell::Binomial(m, n) => {
                identities::verify_binomial_identity(*m, *n).map(|r| vec![r])
            }
        };
        match reports {
            Err(e) => Some(format!("identity check failed to run: {e}")),
            Ok(reports) => {
                for r in reports {
                    if !r.holds {
                        let m = r.m.map(|m| format!(", m={m}")).unwrap_or_default();
                        return Some(format!(
                            "{} (n={}{}): {} != {}",
                            r.name, r.n, m, r.lhs, r.rhs
                        ));
                    }
                }
                None
            }
        }
    });
    SuiteOutcome { name: "identities".to_string(), cases, failures }
}

enum AdmCell {
    Exp,
    Power,
    Linear,
    Bracket(u32),
}

/// Solver checks at the given order: the exponential and power-law runs
/// against their closed forms, the linear sanity run, and the per-order
/// bracket of the exponential run against the exponential identity.
pub fn adm_suite(order: usize, parallel: bool) -> SuiteOutcome {
    let mut cells = vec![AdmCell::Exp, AdmCell::Power, AdmCell::Linear];
    for n in 1..order.max(1) {
        cells.push(AdmCell::Bracket(n as u32));
    }
    let cases = cells.len();
    let exp_law = Nonlinearity::Exp { rate: MultiPoly::term(rat(-1), &[(Var::Beta, 1)]) };
    let failures = run_cells(cells, parallel, |cell| match cell {
        AdmCell::Exp => expect_true(
            "exponential decomposition vs closed form",
            solve(&exp_law, &AlphaParam::Symbolic, &rat(1), order)
                .and_then(|s| compare_series(&s, &closed_form_exp_series(order)))
                .map(|c| c.equal),
        ),
        AdmCell::Power => expect_true(
            "power-law decomposition vs closed form",
            solve(
                &Nonlinearity::PowerInvAlpha,
                &AlphaParam::Symbolic,
                &rat(1),
                order,
            )
            .and_then(|s| compare_series(&s, &closed_form_power_series(order)))
            .map(|c| c.equal),
        ),
        AdmCell::Linear => expect_true(
            "linear decomposition vs closed form",
            solve(
                &Nonlinearity::Linear,
                &AlphaParam::Value(rat(1)),
                &rat(1),
                order,
            )
            .and_then(|s| compare_series(&s, &closed_form_linear_series(order)))
            .map(|c| c.equal),
        ),
        AdmCell::Bracket(n) => expect_true(
            &format!("exponential bracket vs identity (n={n})"),
            (|| {
                let solved =
                    solve(&exp_law, &AlphaParam::Symbolic, &rat(1), *n as usize + 1)?;
                let divisor = crate::poly::Monomial::from_pairs(&[
                    (Var::Alpha, 1),
                    (Var::E, n + 1),
                    (Var::X, n + 1),
                ]);
                let bracket = solved.components()[*n as usize + 1]
                    .exact_div_monomial(&divisor)?
                    .scale(&(rat(*n as i64 + 1) * factorial(*n)));
                let report = identities::verify_exp_identity(*n)?;
                Ok(report.holds && bracket == report.rhs)
            })(),
        ),
    });
    SuiteOutcome { name: "adm".to_string(), cases, failures }
}

/// Every suite with one set of bounds: partition checks and Bell routes up
/// to `max_n`, Adomian routes up to `max_n`, identities up to
/// `(max_n, max_m)`, and the solver comparisons at `order`.
pub fn run_all(max_n: u32, max_m: u32, order: usize, parallel: bool) -> Vec<SuiteOutcome> {
    vec![
        partition_suite(max_n, max_n, parallel),
        bell_suite(max_n, parallel),
        adomian_suite(max_n.min(10), parallel),
        identity_suite(max_n, max_m, parallel),
        adm_suite(order, parallel),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_small_bounds() {
        for parallel in [false, true] {
            for outcome in run_all(7, 8, 5, parallel) {
                assert!(
                    outcome.passed(),
                    "suite {} (parallel={parallel}): {:?}",
                    outcome.name,
                    outcome.failures
                );
                assert!(outcome.cases > 0);
            }
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let seq = partition_suite(8, 8, false);
        let par = partition_suite(8, 8, true);
        assert_eq!(seq.cases, par.cases);
        assert_eq!(seq.failures, par.failures);
    }
}
