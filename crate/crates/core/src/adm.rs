//! Decomposition solver for `u' = alpha N(u)`, `u(0) = u0`, as a formal
//! series: `u_{n+1}(x) = alpha * integral of A_n`, with the integral taken
//! term by term in `x`. Everything stays exact; the exponential case carries
//! the formal constant `E` (standing for `e^(-beta)`) and the power-law case
//! runs through cleared `alpha` denominators with an exact division at the
//! end of every step, which doubles as a consistency check.

use std::collections::BTreeMap;

use num_traits::One;

use crate::adomian::{evaluate, rach, Nonlinearity, U0};
use crate::error::{Error, Result};
use crate::poly::{falling_factorial_poly, MultiPoly, Var};
use crate::rational::{factorial, rat, Rational};

/// Coefficient `alpha` of the right-hand side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphaParam {
    Symbolic,
    Value(Rational),
}

/// Series solution: `components[i]` is `u_i(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesSolution {
    components: Vec<MultiPoly>,
}

impl SeriesSolution {
    pub fn new(components: Vec<MultiPoly>) -> Self {
        SeriesSolution { components }
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    /// Index of the highest computed component.
    pub fn order(&self) -> usize {
        self.components.len() - 1
    }

    /// Sum of all computed components, the truncated solution.
    pub fn partial_sum(&self) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for c in &self.components {
            acc += c;
        }
        acc
    }
}

/// A component pair that differs between two series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: usize,
    pub left: MultiPoly,
    pub right: MultiPoly,
}

/// Component-wise comparison result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesComparison {
    pub equal: bool,
    pub first_mismatch: Option<Mismatch>,
}

/// Compares two series of equal order component by component.
pub fn compare_series(a: &SeriesSolution, b: &SeriesSolution) -> Result<SeriesComparison> {
    if a.components.len() != b.components.len() {
        return Err(Error::OrderMismatch(a.components.len(), b.components.len()));
    }
    for (i, (l, r)) in a.components.iter().zip(&b.components).enumerate() {
        if l != r {
            return Ok(SeriesComparison {
                equal: false,
                first_mismatch: Some(Mismatch { index: i, left: l.clone(), right: r.clone() }),
            });
        }
    }
    Ok(SeriesComparison { equal: true, first_mismatch: None })
}

/// Runs the decomposition through `u_order`. At every step the Adomian
/// polynomial is evaluated for `nl` at `u0`, the solved components are
/// substituted for the argument variables, and the result is integrated and
/// scaled by `alpha`. Power laws with a cleared `alpha` denominator are
/// divided back exactly.
pub fn solve(
    nl: &Nonlinearity,
    alpha: &AlphaParam,
    u0: &Rational,
    order: usize,
) -> Result<SeriesSolution> {
    if matches!(nl, Nonlinearity::PowerInvAlpha) && *alpha != AlphaParam::Symbolic {
        return Err(Error::NotRepresentable(
            "the inverse-alpha power law refers to the symbolic alpha".to_string(),
        ));
    }
    let mut components = vec![MultiPoly::constant(u0.clone())];
    for n in 0..order {
        let a = rach(n as u32)?;
        let ev = evaluate(&a, nl, &U0::Value(u0.clone()))?;
        if ev.exp_rate.is_some() {
            return Err(Error::NotRepresentable(
                "cannot integrate a symbolic exponential factor".to_string(),
            ));
        }
        let bindings: BTreeMap<Var, MultiPoly> = (1..=n)
            .map(|i| (Var::U(i as u32), components[i].clone()))
            .collect();
        let integrand = ev.poly.subst(&bindings);
        let mut next = integrand.integrate(Var::X);
        next = match alpha {
            AlphaParam::Symbolic => &next * &MultiPoly::var(Var::Alpha),
            AlphaParam::Value(a) => next.scale(a),
        };
        if ev.alpha_denom > 0 {
            next = next.exact_div_var_pow(Var::Alpha, ev.alpha_denom)?;
        }
        components.push(next);
    }
    Ok(SeriesSolution::new(components))
}

/// Closed-form components of `u' = alpha e^(-beta u)`, `u(0) = 1`:
/// `u_n = (-1)^(n+1) alpha^n beta^(n-1) E^n x^n / n` for `n >= 1`.
pub fn closed_form_exp_series(order: usize) -> SeriesSolution {
    let mut components = vec![MultiPoly::one()];
    for n in 1..=order {
        let n32 = n as u32;
        let sign = if n.is_multiple_of(2) { rat(-1) } else { rat(1) };
        components.push(MultiPoly::term(
            sign / rat(n as i64),
            &[(Var::Alpha, n32), (Var::Beta, n32 - 1), (Var::E, n32), (Var::X, n32)],
        ));
    }
    SeriesSolution::new(components)
}

/// Closed-form components of `u' = alpha u^(1 - 1/alpha)`, `u(0) = 1`:
/// `u_n = (alpha)_n x^n / n!`.
pub fn closed_form_power_series(order: usize) -> SeriesSolution {
    let alpha = MultiPoly::var(Var::Alpha);
    let mut components = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let falling = falling_factorial_poly(&alpha, n as u32);
        let x_pow = MultiPoly::term(
            Rational::one() / factorial(n as u32),
            &[(Var::X, n as u32)],
        );
        components.push(&falling * &x_pow);
    }
    SeriesSolution::new(components)
}

/// Closed-form components of `u' = u`, `u(0) = 1`: `u_n = x^n / n!`.
pub fn closed_form_linear_series(order: usize) -> SeriesSolution {
    let components = (0..=order)
        .map(|n| {
            MultiPoly::term(Rational::one() / factorial(n as u32), &[(Var::X, n as u32)])
        })
        .collect();
    SeriesSolution::new(components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::verify_exp_identity;
    use crate::poly::Monomial;
    use crate::rational::ratio;

    fn exp_law() -> Nonlinearity {
        Nonlinearity::Exp { rate: MultiPoly::term(rat(-1), &[(Var::Beta, 1)]) }
    }

    #[test]
    fn exponential_ode_matches_closed_form() {
        let solved = solve(&exp_law(), &AlphaParam::Symbolic, &Rational::one(), 10).unwrap();
        let closed = closed_form_exp_series(10);
        let cmp = compare_series(&solved, &closed).unwrap();
        assert!(cmp.equal, "first mismatch: {:?}", cmp.first_mismatch);
    }

    #[test]
    fn exponential_ode_early_components() {
        let solved = solve(&exp_law(), &AlphaParam::Symbolic, &Rational::one(), 4).unwrap();
        let c = solved.components();
        assert_eq!(c[0], MultiPoly::one());
        assert_eq!(
            c[1],
            MultiPoly::term(rat(1), &[(Var::Alpha, 1), (Var::E, 1), (Var::X, 1)])
        );
        assert_eq!(
            c[2],
            MultiPoly::term(
                ratio(-1, 2),
                &[(Var::Alpha, 2), (Var::Beta, 1), (Var::E, 2), (Var::X, 2)]
            )
        );
        assert_eq!(
            c[3],
            MultiPoly::term(
                ratio(1, 3),
                &[(Var::Alpha, 3), (Var::Beta, 2), (Var::E, 3), (Var::X, 3)]
            )
        );
    }

    #[test]
    fn power_ode_matches_closed_form() {
        let solved = solve(
            &Nonlinearity::PowerInvAlpha,
            &AlphaParam::Symbolic,
            &Rational::one(),
            10,
        )
        .unwrap();
        let closed = closed_form_power_series(10);
        let cmp = compare_series(&solved, &closed).unwrap();
        assert!(cmp.equal, "first mismatch: {:?}", cmp.first_mismatch);
    }

    #[test]
    fn power_ode_rejects_concrete_alpha() {
        assert!(solve(
            &Nonlinearity::PowerInvAlpha,
            &AlphaParam::Value(rat(2)),
            &Rational::one(),
            3,
        )
        .is_err());
    }

    #[test]
    fn linear_ode_is_the_exponential_series() {
        let solved = solve(
            &Nonlinearity::Linear,
            &AlphaParam::Value(Rational::one()),
            &Rational::one(),
            8,
        )
        .unwrap();
        let cmp = compare_series(&solved, &closed_form_linear_series(8)).unwrap();
        assert!(cmp.equal, "first mismatch: {:?}", cmp.first_mismatch);
    }

    #[test]
    fn concrete_alpha_specializes_the_symbolic_run() {
        let solved = solve(&exp_law(), &AlphaParam::Value(rat(2)), &Rational::one(), 5).unwrap();
        let symbolic = closed_form_exp_series(5);
        let mut bind = BTreeMap::new();
        bind.insert(Var::Alpha, MultiPoly::int(2));
        for (i, c) in solved.components().iter().enumerate() {
            assert_eq!(c, &symbolic.components()[i].subst(&bind), "component {i}");
        }
    }

    #[test]
    fn comparison_reports_first_mismatch() {
        let a = closed_form_linear_series(3);
        let mut parts = a.components().to_vec();
        parts[2] = MultiPoly::zero();
        let b = SeriesSolution::new(parts);
        let cmp = compare_series(&a, &b).unwrap();
        assert!(!cmp.equal);
        assert_eq!(cmp.first_mismatch.as_ref().unwrap().index, 2);
        assert!(compare_series(&a, &closed_form_linear_series(4)).is_err());
    }

    #[test]
    fn exponential_bracket_reproduces_identity_sides() {
        // (n+1) n! u_{n+1} / (alpha E^{n+1} x^{n+1}) equals both sides of the
        // exponential Bell identity at order n.
        let solved = solve(&exp_law(), &AlphaParam::Symbolic, &Rational::one(), 9).unwrap();
        for n in 1..=8u32 {
            let u_next = &solved.components()[n as usize + 1];
            let divisor = Monomial::from_pairs(&[
                (Var::Alpha, 1),
                (Var::E, n + 1),
                (Var::X, n + 1),
            ]);
            let bracket = u_next
                .exact_div_monomial(&divisor)
                .unwrap()
                .scale(&(rat(n as i64 + 1) * factorial(n)));
            let report = verify_exp_identity(n).unwrap();
            assert!(report.holds);
            assert_eq!(bracket, report.rhs, "n={n}");
        }
    }
}
