//! Adomian polynomials in abstract and evaluated form.
//!
//! The abstract form of `A_n` is a map from derivative order `k` to the
//! polynomial coefficient of `N^(k)(u0)`: the closed form reads
//! `A_n = sum_k C(k, n) N^(k)(u0)` with `C(k, n)` a sum over the padded
//! partition set. Several independent routes build the same object:
//!
//! * [`rach`]: direct expansion of the `C(k, n)` sums,
//! * [`from_bell`] and [`from_ord_bell`]: rescaled partial Bell polynomials,
//! * [`duan_rec1`] and [`duan_rec2`]: one-order recursions that never touch
//!   partitions or Bell polynomials,
//! * [`param_oracle`]: brute-force extraction from a truncated power series,
//!   kept deliberately naive to serve as the reference oracle.
//!
//! [`evaluate`] then turns the abstract form into a concrete polynomial for
//! a chosen nonlinearity, tracking the symbolic factors (`e^{c u0}`, powers
//! of `1/alpha`) that live outside the polynomial ring.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::bell::{partial_exp_scaled, partial_ord};
use crate::error::{Error, Result};
use crate::partitions::enum_theta;
use crate::poly::{cleared_falling_inv_alpha, Monomial, MultiPoly, Var};
use crate::rational::{factorial, falling_factorial, rat, rational_pow, Rational};

/// Abstract Adomian polynomial: `parts[k]` multiplies `N^(k)(u0)`.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdomianPoly {
    n: u32,
    parts: BTreeMap<u32, MultiPoly>,
}

impl AdomianPoly {
    fn order_zero() -> Self {
        let mut parts = BTreeMap::new();
        parts.insert(0, MultiPoly::one());
        AdomianPoly { n: 0, parts }
    }

    fn from_parts(n: u32, mut parts: BTreeMap<u32, MultiPoly>) -> Self {
        parts.retain(|_, p| !p.is_zero());
        AdomianPoly { n, parts }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Nonzero coefficients by derivative order, ascending.
    pub fn parts(&self) -> impl Iterator<Item = (u32, &MultiPoly)> + '_ {
        self.parts.iter().map(|(&k, p)| (k, p))
    }

    pub fn part(&self, k: u32) -> Option<&MultiPoly> {
        self.parts.get(&k)
    }
}

impl fmt::Display for AdomianPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, p) in &self.parts {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let deriv = if *k == 0 {
                "N(u0)".to_string()
            } else {
                format!("N^({k})(u0)")
            };
            if p.is_one() {
                write!(f, "{deriv}")?;
            } else if p.num_terms() > 1 {
                write!(f, "({p})*{deriv}")?;
            } else {
                write!(f, "{p}*{deriv}")?;
            }
        }
        Ok(())
    }
}

/// Coefficient `C(k, n)`: sum over the padded partition set of
/// `prod u_j^(k_j) / k_j!`.
pub fn c_kn(k: u32, n: u32) -> Result<MultiPoly> {
    let mut out = MultiPoly::zero();
    for v in enum_theta(n, k)? {
        let mut denom = Rational::one();
        let mut pairs = Vec::new();
        for (i, &e) in v.parts().iter().enumerate() {
            if e > 0 {
                denom *= factorial(e);
                pairs.push((Var::U(i as u32 + 1), e));
            }
        }
        out.add_term(Monomial::from_pairs(&pairs), Rational::one() / denom);
    }
    Ok(out)
}

/// Closed-form route: `A_0 = N(u0)`, and for `n >= 1` the coefficient of
/// `N^(k)(u0)` is `C(k, n)`.
pub fn rach(n: u32) -> Result<AdomianPoly> {
    if n == 0 {
        return Ok(AdomianPoly::order_zero());
    }
    let mut parts = BTreeMap::new();
    for k in 1..=n {
        parts.insert(k, c_kn(k, n)?);
    }
    Ok(AdomianPoly::from_parts(n, parts))
}

/// Bell route: the coefficient of `N^(k)(u0)` is the scaled partial
/// exponential Bell polynomial divided by `n!`.
pub fn from_bell(n: u32) -> Result<AdomianPoly> {
    if n == 0 {
        return Ok(AdomianPoly::order_zero());
    }
    let inv_nfac = Rational::one() / factorial(n);
    let mut parts = BTreeMap::new();
    for k in 1..=n {
        parts.insert(k, partial_exp_scaled(n, k)?.scale(&inv_nfac));
    }
    Ok(AdomianPoly::from_parts(n, parts))
}

/// Ordinary Bell route: the coefficient of `N^(k)(u0)` is the partial
/// ordinary Bell polynomial divided by `k!`.
pub fn from_ord_bell(n: u32) -> Result<AdomianPoly> {
    if n == 0 {
        return Ok(AdomianPoly::order_zero());
    }
    let mut parts = BTreeMap::new();
    for k in 1..=n {
        parts.insert(k, partial_ord(n, k)?.scale(&(Rational::one() / factorial(k))));
    }
    Ok(AdomianPoly::from_parts(n, parts))
}

/// Derivative-index shift: the image of `sum_j P_j N^(j)` under d/du0,
/// namely `sum_j P_j N^(j+1)`.
fn shift_orders(a: &AdomianPoly) -> BTreeMap<u32, MultiPoly> {
    a.parts.iter().map(|(&j, p)| (j + 1, p.clone())).collect()
}

fn add_into(acc: &mut BTreeMap<u32, MultiPoly>, order: u32, p: MultiPoly) {
    if p.is_zero() {
        return;
    }
    let slot = acc.entry(order).or_insert_with(MultiPoly::zero);
    *slot += p;
}

/// One-order recursion driven by the index shift:
/// `n A_n = sum_{k=0}^{n-1} (k+1) u_{k+1} * dA_{n-k-1}/du0`.
pub fn duan_rec1(n: u32) -> Result<AdomianPoly> {
    let mut table = vec![AdomianPoly::order_zero()];
    for m in 1..=n {
        let mut acc: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for k in 0..m {
            let term = MultiPoly::term(rat(k as i64 + 1), &[(Var::U(k + 1), 1)]);
            for (j, p) in shift_orders(&table[(m - k - 1) as usize]) {
                add_into(&mut acc, j, &term * &p);
            }
        }
        let inv_m = Rational::one() / rat(m as i64);
        let parts = acc.into_iter().map(|(j, p)| (j, p.scale(&inv_m))).collect();
        table.push(AdomianPoly::from_parts(m, parts));
    }
    Ok(table.pop().expect("table is nonempty"))
}

/// One-order recursion that differentiates only the previous polynomial:
/// `n A_n = u1 * dA_{n-1}/du0 + sum_{k=1}^{n-1} (k+1) u_{k+1} dA_{n-1}/du_k`.
pub fn duan_rec2(n: u32) -> Result<AdomianPoly> {
    let mut cur = AdomianPoly::order_zero();
    for m in 1..=n {
        let mut acc: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        let u1 = MultiPoly::var(Var::U(1));
        for (j, p) in shift_orders(&cur) {
            add_into(&mut acc, j, &u1 * &p);
        }
        for k in 1..m {
            let term = MultiPoly::term(rat(k as i64 + 1), &[(Var::U(k + 1), 1)]);
            for (j, p) in cur.parts() {
                add_into(&mut acc, j, &term * &p.partial(Var::U(k)));
            }
        }
        let inv_m = Rational::one() / rat(m as i64);
        let parts = acc.into_iter().map(|(j, p)| (j, p.scale(&inv_m))).collect();
        cur = AdomianPoly::from_parts(m, parts);
    }
    Ok(cur)
}

/// Brute-force oracle: expand `N(u0 + u1 t + ... + un t^n)` as a Taylor
/// series in the bookkeeping parameter and read off the `t^n` coefficient.
/// The parameter is represented by the series variable internally and never
/// appears in the result.
pub fn param_oracle(n: u32) -> Result<AdomianPoly> {
    if n == 0 {
        return Ok(AdomianPoly::order_zero());
    }
    let mut w = MultiPoly::zero();
    for k in 1..=n {
        w += MultiPoly::term(Rational::one(), &[(Var::U(k), 1), (Var::X, k)]);
    }
    let mut parts = BTreeMap::new();
    let mut power = MultiPoly::one();
    for j in 1..=n {
        power = (&power * &w).truncate_power(Var::X, n);
        let cj = power
            .coeff_of_power(Var::X, n)
            .scale(&(Rational::one() / factorial(j)));
        if !cj.is_zero() {
            parts.insert(j, cj);
        }
    }
    Ok(AdomianPoly::from_parts(n, parts))
}

/// The polynomial factor of `A_n` for `N(u) = e^u`: all derivative orders
/// collapse and the common `e^{u0}` is stripped. Equals `(1/n!)` times the
/// scaled complete exponential Bell polynomial.
pub fn complete_exp(n: u32) -> Result<MultiPoly> {
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    let mut acc = MultiPoly::zero();
    for k in 1..=n {
        acc += partial_exp_scaled(n, k)?;
    }
    Ok(acc.scale(&(Rational::one() / factorial(n))))
}

/// Value of the solution at the expansion point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum U0 {
    Symbolic,
    Value(Rational),
}

/// The nonlinearities the evaluator understands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Nonlinearity {
    /// N(u) = u.
    Linear,
    /// N(u) = e^(rate * u). The rate must be a constant or a constant
    /// multiple of `beta`, so derivative values stay in the ring.
    Exp { rate: MultiPoly },
    /// N(u) = u^p for an exact rational exponent.
    Power { exponent: Rational },
    /// N(u) = u^(1 - 1/alpha) with `alpha` symbolic.
    PowerInvAlpha,
    /// N(u) = sum_i coeffs[i] * u^i.
    Poly { coeffs: Vec<Rational> },
    /// N given by its derivative values at u0: derivs[j] = N^(j)(u0).
    Taylor { derivs: Vec<MultiPoly> },
}

/// Result of substituting concrete derivative values into an abstract
/// Adomian polynomial. The mathematical value is
/// `poly * e^(exp_rate * u0) / alpha^alpha_denom`, with missing factors
/// treated as 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub poly: MultiPoly,
    /// Present when the result carries a symbolic factor `e^(rate * u0)`.
    pub exp_rate: Option<MultiPoly>,
    /// Power of `alpha` dividing the result.
    pub alpha_denom: u32,
}

impl Evaluation {
    fn plain(poly: MultiPoly) -> Self {
        Evaluation { poly, exp_rate: None, alpha_denom: 0 }
    }
}

impl fmt::Display for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let has_factor = self.exp_rate.is_some() || self.alpha_denom > 0;
        let wrapped = if self.poly.num_terms() > 1 && has_factor {
            format!("({})", self.poly)
        } else {
            self.poly.to_string()
        };
        match &self.exp_rate {
            None => write!(f, "{wrapped}")?,
            Some(rate) => {
                let factor = if rate.is_one() {
                    "exp(u0)".to_string()
                } else if rate.num_terms() > 1 {
                    format!("exp(({rate})*u0)")
                } else {
                    format!("exp({rate}*u0)")
                };
                if self.poly.is_one() {
                    write!(f, "{factor}")?;
                } else {
                    write!(f, "{wrapped}*{factor}")?;
                }
            }
        }
        match self.alpha_denom {
            0 => Ok(()),
            1 => write!(f, "/alpha"),
            s => write!(f, "/alpha^{s}"),
        }
    }
}

/// Folds `e^t` for a constant exponent into a monomial: 1 when `t = 0`,
/// a power of the formal constant `E` when `t = -m beta`.
fn fold_exp_constant(t: &MultiPoly) -> Result<MultiPoly> {
    if t.is_zero() {
        return Ok(MultiPoly::one());
    }
    if t.num_terms() == 1 {
        let m = -t.coeff(&Monomial::from_pairs(&[(Var::Beta, 1)]));
        if m.is_integer() && m.is_positive() {
            let m = u32::try_from(m.to_integer())
                .map_err(|_| Error::OutOfRange("exponential fold overflowed".to_string()))?;
            return Ok(MultiPoly::term(Rational::one(), &[(Var::E, m)]));
        }
    }
    Err(Error::NotRepresentable(format!(
        "e^({t}) is not a power of the formal constant E"
    )))
}

/// Substitutes derivative values of `nl` at `u0` into the abstract
/// polynomial. Factors that cannot live in the polynomial ring are carried
/// symbolically on the [`Evaluation`].
pub fn evaluate(a: &AdomianPoly, nl: &Nonlinearity, u0: &U0) -> Result<Evaluation> {
    match nl {
        Nonlinearity::Linear => {
            let mut poly = MultiPoly::zero();
            for (k, p) in a.parts() {
                match k {
                    0 => match u0 {
                        U0::Value(r) => poly += p.scale(r),
                        U0::Symbolic => {
                            return Err(Error::NotRepresentable(
                                "symbolic u0 has no image in the ring".to_string(),
                            ))
                        }
                    },
                    1 => poly += p.clone(),
                    _ => {}
                }
            }
            Ok(Evaluation::plain(poly))
        }
        Nonlinearity::Exp { rate } => {
            let mut poly = MultiPoly::zero();
            for (k, p) in a.parts() {
                poly += p * &rate.pow(k);
            }
            match u0 {
                U0::Symbolic => Ok(Evaluation {
                    poly,
                    exp_rate: Some(rate.clone()),
                    alpha_denom: 0,
                }),
                U0::Value(r) => {
                    let factor = fold_exp_constant(&rate.scale(r))?;
                    Ok(Evaluation::plain(&poly * &factor))
                }
            }
        }
        Nonlinearity::Power { exponent } => {
            let r = match u0 {
                U0::Value(r) => r,
                U0::Symbolic => {
                    return Err(Error::NotRepresentable(
                        "rational-power derivatives need a concrete u0".to_string(),
                    ))
                }
            };
            let mut poly = MultiPoly::zero();
            for (k, p) in a.parts() {
                let fall = falling_factorial(exponent, k);
                if fall.is_zero() {
                    continue;
                }
                let base_pow = if r.is_one() {
                    Rational::one()
                } else if exponent.is_integer() {
                    let e = exponent - rat(k as i64);
                    rational_pow(r, i64::try_from(e.to_integer()).map_err(|_| {
                        Error::OutOfRange("power exponent overflowed".to_string())
                    })?)?
                } else {
                    return Err(Error::NotRepresentable(format!(
                        "{r}^({}) is irrational",
                        exponent - rat(k as i64)
                    )));
                };
                poly += p.scale(&(fall * base_pow));
            }
            Ok(Evaluation::plain(poly))
        }
        Nonlinearity::PowerInvAlpha => {
            match u0 {
                U0::Value(r) if r.is_one() => {}
                _ => {
                    return Err(Error::NotRepresentable(
                        "the inverse-alpha power law is evaluated at u0 = 1".to_string(),
                    ))
                }
            }
            let denom = a.n();
            let mut poly = MultiPoly::zero();
            for (k, p) in a.parts() {
                let cleared = cleared_falling_inv_alpha(k);
                let lift = MultiPoly::term(Rational::one(), &[(Var::Alpha, denom - k)]);
                poly += &(p * &cleared) * &lift;
            }
            Ok(Evaluation { poly, exp_rate: None, alpha_denom: denom })
        }
        Nonlinearity::Poly { coeffs } => {
            let r = match u0 {
                U0::Value(r) => r,
                U0::Symbolic => {
                    return Err(Error::NotRepresentable(
                        "polynomial-law derivatives need a concrete u0".to_string(),
                    ))
                }
            };
            let mut poly = MultiPoly::zero();
            for (k, p) in a.parts() {
                let mut dk = Rational::zero();
                for (i, c) in coeffs.iter().enumerate() {
                    let i = i as u32;
                    if c.is_zero() || i < k {
                        continue;
                    }
                    dk += c * falling_factorial(&rat(i as i64), k)
                        * rational_pow(r, (i - k) as i64)?;
                }
                poly += p.scale(&dk);
            }
            Ok(Evaluation::plain(poly))
        }
        Nonlinearity::Taylor { derivs } => {
            let mut poly = MultiPoly::zero();
            for (k, p) in a.parts() {
                let d = derivs.get(k as usize).ok_or_else(|| {
                    Error::OutOfRange(format!(
                        "derivative order {k} not provided (have {})",
                        derivs.len()
                    ))
                })?;
                poly += p * d;
            }
            Ok(Evaluation::plain(poly))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn u(i: u32) -> MultiPoly {
        MultiPoly::var(Var::U(i))
    }

    fn t(c: Rational, vars: &[(u32, u32)]) -> MultiPoly {
        let pairs: Vec<(Var, u32)> = vars.iter().map(|&(i, e)| (Var::U(i), e)).collect();
        MultiPoly::term(c, &pairs)
    }

    #[test]
    fn c_kn_small_values() {
        assert_eq!(c_kn(2, 4).unwrap(), t(ratio(1, 2), &[(2, 2)]) + t(rat(1), &[(1, 1), (3, 1)]));
        for n in 1..=6 {
            assert_eq!(c_kn(1, n).unwrap(), u(n), "C(1, n) collapses to u_n");
            assert_eq!(
                c_kn(n, n).unwrap(),
                u(1).pow(n).scale(&(Rational::one() / factorial(n))),
                "C(n, n)"
            );
        }
    }

    #[test]
    fn rach_small_orders() {
        let a0 = rach(0).unwrap();
        assert_eq!(a0.part(0), Some(&MultiPoly::one()));

        let a2 = rach(2).unwrap();
        assert_eq!(a2.part(1), Some(&u(2)));
        assert_eq!(a2.part(2), Some(&t(ratio(1, 2), &[(1, 2)])));

        let a3 = rach(3).unwrap();
        assert_eq!(a3.part(1), Some(&u(3)));
        assert_eq!(a3.part(2), Some(&t(rat(1), &[(1, 1), (2, 1)])));
        assert_eq!(a3.part(3), Some(&t(ratio(1, 6), &[(1, 3)])));
    }

    #[test]
    fn all_routes_agree() {
        for n in 0..=8 {
            let base = rach(n).unwrap();
            assert_eq!(from_bell(n).unwrap(), base, "bell route n={n}");
            assert_eq!(from_ord_bell(n).unwrap(), base, "ordinary bell route n={n}");
            assert_eq!(duan_rec1(n).unwrap(), base, "shift recursion n={n}");
            assert_eq!(duan_rec2(n).unwrap(), base, "derivative recursion n={n}");
            assert_eq!(param_oracle(n).unwrap(), base, "series oracle n={n}");
        }
    }

    #[test]
    fn parts_are_degree_and_weight_homogeneous() {
        for n in 1..=8 {
            for (k, p) in rach(n).unwrap().parts() {
                for (m, _) in p.terms() {
                    let mut deg = 0u64;
                    let mut weight = 0u64;
                    for (v, e) in m.iter() {
                        match v {
                            Var::U(j) => {
                                deg += e as u64;
                                weight += j as u64 * e as u64;
                            }
                            other => panic!("unexpected variable {other}"),
                        }
                    }
                    assert_eq!(deg, k as u64);
                    assert_eq!(weight, n as u64);
                }
            }
        }
    }

    #[test]
    fn display_of_abstract_form() {
        assert_eq!(rach(0).unwrap().to_string(), "N(u0)");
        assert_eq!(rach(1).unwrap().to_string(), "u1*N^(1)(u0)");
        assert_eq!(
            rach(3).unwrap().to_string(),
            "u3*N^(1)(u0) + u1*u2*N^(2)(u0) + 1/6*u1^3*N^(3)(u0)"
        );
    }

    #[test]
    fn exp_rate_one_evaluation() {
        let e2 = evaluate(&rach(2).unwrap(), &Nonlinearity::Exp { rate: MultiPoly::one() }, &U0::Symbolic)
            .unwrap();
        assert_eq!(e2.poly, u(2) + t(ratio(1, 2), &[(1, 2)]));
        assert_eq!(e2.to_string(), "(u2 + 1/2*u1^2)*exp(u0)");

        let e3 = evaluate(&rach(3).unwrap(), &Nonlinearity::Exp { rate: MultiPoly::one() }, &U0::Symbolic)
            .unwrap();
        assert_eq!(e3.to_string(), "(u3 + u1*u2 + 1/6*u1^3)*exp(u0)");
    }

    #[test]
    fn exp_negative_beta_at_one_folds_to_formal_constant() {
        let rate = MultiPoly::term(rat(-1), &[(Var::Beta, 1)]);
        let ev = evaluate(
            &rach(2).unwrap(),
            &Nonlinearity::Exp { rate },
            &U0::Value(Rational::one()),
        )
        .unwrap();
        // (1/2)(beta^2 u1^2 - 2 beta u2) E, a single power of E.
        let want = MultiPoly::term(rat(-1), &[(Var::U(2), 1), (Var::Beta, 1), (Var::E, 1)])
            + MultiPoly::term(ratio(1, 2), &[(Var::U(1), 2), (Var::Beta, 2), (Var::E, 1)]);
        assert_eq!(ev.poly, want);
        assert_eq!(ev.exp_rate, None);
    }

    #[test]
    fn exp_fold_rejects_irrational_factors() {
        let ev = evaluate(
            &rach(1).unwrap(),
            &Nonlinearity::Exp { rate: MultiPoly::one() },
            &U0::Value(Rational::one()),
        );
        assert!(matches!(ev, Err(Error::NotRepresentable(_))));
    }

    #[test]
    fn linear_collapses_to_component() {
        for n in 1..=6 {
            let ev = evaluate(&rach(n).unwrap(), &Nonlinearity::Linear, &U0::Symbolic).unwrap();
            assert_eq!(ev.poly, u(n), "A_n under the identity law is u_n");
        }
    }

    #[test]
    fn integer_power_matches_polynomial_law() {
        let square = Nonlinearity::Power { exponent: rat(2) };
        let square_poly = Nonlinearity::Poly { coeffs: vec![rat(0), rat(0), rat(1)] };
        for u0 in [rat(2), ratio(3, 2)] {
            for n in 0..=6 {
                let a = rach(n).unwrap();
                let via_power = evaluate(&a, &square, &U0::Value(u0.clone())).unwrap();
                let via_poly = evaluate(&a, &square_poly, &U0::Value(u0.clone())).unwrap();
                assert_eq!(via_power, via_poly, "n={n} u0={u0}");
            }
        }
        // A_2 for N(u) = u^2 at u0 = 2: 2 u0 u2 + u1^2.
        let ev = evaluate(&rach(2).unwrap(), &square, &U0::Value(rat(2))).unwrap();
        assert_eq!(ev.poly, u(2).scale(&rat(4)) + u(1).pow(2));
    }

    #[test]
    fn fractional_power_needs_unit_base() {
        let sqrt = Nonlinearity::Power { exponent: ratio(1, 2) };
        assert!(evaluate(&rach(2).unwrap(), &sqrt, &U0::Value(rat(1))).is_ok());
        assert!(evaluate(&rach(2).unwrap(), &sqrt, &U0::Value(rat(4))).is_err());
        assert!(evaluate(&rach(2).unwrap(), &sqrt, &U0::Symbolic).is_err());
    }

    #[test]
    fn inverse_alpha_power_law() {
        let a1 = evaluate(&rach(1).unwrap(), &Nonlinearity::PowerInvAlpha, &U0::Value(rat(1)))
            .unwrap();
        // u1 (alpha - 1) / alpha.
        assert_eq!(
            a1.poly,
            MultiPoly::term(rat(-1), &[(Var::U(1), 1)])
                + MultiPoly::term(rat(1), &[(Var::U(1), 1), (Var::Alpha, 1)])
        );
        assert_eq!(a1.alpha_denom, 1);
        assert!(
            evaluate(&rach(1).unwrap(), &Nonlinearity::PowerInvAlpha, &U0::Value(rat(2))).is_err()
        );
    }

    #[test]
    fn taylor_route_replicates_exponential() {
        let rate = MultiPoly::term(rat(-1), &[(Var::Beta, 1)]);
        for n in 0..=5 {
            let derivs: Vec<MultiPoly> = (0..=n)
                .map(|j| {
                    &rate.pow(j) * &MultiPoly::term(Rational::one(), &[(Var::E, 1)])
                })
                .collect();
            let a = rach(n).unwrap();
            let via_taylor = evaluate(&a, &Nonlinearity::Taylor { derivs }, &U0::Symbolic).unwrap();
            let via_exp = evaluate(
                &a,
                &Nonlinearity::Exp { rate: rate.clone() },
                &U0::Value(Rational::one()),
            )
            .unwrap();
            assert_eq!(via_taylor, via_exp, "n={n}");
        }
        let short = Nonlinearity::Taylor { derivs: vec![MultiPoly::one()] };
        assert!(matches!(
            evaluate(&rach(2).unwrap(), &short, &U0::Symbolic),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn complete_exp_equals_evaluated_rate_one() {
        for n in 0..=7 {
            let direct = complete_exp(n).unwrap();
            let ev = evaluate(
                &rach(n).unwrap(),
                &Nonlinearity::Exp { rate: MultiPoly::one() },
                &U0::Symbolic,
            )
            .unwrap();
            assert_eq!(direct, ev.poly, "n={n}");
        }
    }
}
