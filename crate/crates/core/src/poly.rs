//! Sparse multivariate polynomials over the rationals.
//!
//! The variable universe is fixed: the argument variables `u1, u2, ...`, the
//! series variable `x`, the parameters `alpha` and `beta`, and the formal
//! exponential constant `E`. Terms are kept in a canonical graded
//! lexicographic order (total degree first, then the exponent vector over
//! `u1 < u2 < ... < x < alpha < beta < E`, ascending), so structural equality
//! of values is mathematical equality and rendering is deterministic.
//!
//! # Example
//!
//! ```
//! use bellomian::poly::{MultiPoly, Var};
//! use bellomian::rational::rat;
//!
//! let p = MultiPoly::term(rat(3), &[(Var::U(2), 2)])
//!     + MultiPoly::term(rat(4), &[(Var::U(1), 1), (Var::U(3), 1)]);
//! assert_eq!(p.to_string(), "3*u2^2 + 4*u1*u3");
//! assert_eq!(p.partial(Var::U(1)).to_string(), "4*u3");
//! ```

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, rat, Rational};

/// A variable of the polynomial ring.
///
/// The derived order is the canonical variable order used by the monomial
/// order and by every renderer: `u1 < u2 < ... < x < alpha < beta < E`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// Argument variable `u{i}`, `i >= 1`.
    U(u32),
    /// Series variable `x`.
    X,
    /// Parameter `alpha`.
    Alpha,
    /// Parameter `beta`.
    Beta,
    /// Formal exponential constant `E`.
    E,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::U(i) => write!(f, "u{i}"),
            Var::X => write!(f, "x"),
            Var::Alpha => write!(f, "alpha"),
            Var::Beta => write!(f, "beta"),
            Var::E => write!(f, "E"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" => Ok(Var::X),
            "alpha" => Ok(Var::Alpha),
            "beta" => Ok(Var::Beta),
            "E" => Ok(Var::E),
            _ => {
                let idx = s
                    .strip_prefix('u')
                    .and_then(|t| t.parse::<u32>().ok())
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {s:?}")))?;
                Ok(Var::U(idx))
            }
        }
    }
}

impl Serialize for Var {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Var {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// A power product of variables. Zero exponents are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Monomial {
    exps: BTreeMap<Var, u32>,
}

impl Monomial {
    /// The empty product (the constant monomial).
    pub fn one() -> Self {
        Monomial::default()
    }

    /// Builds a monomial from variable/exponent pairs; zero exponents are dropped
    /// and repeated variables accumulate.
    pub fn from_pairs(pairs: &[(Var, u32)]) -> Self {
        let mut exps = BTreeMap::new();
        for &(v, e) in pairs {
            if e > 0 {
                *exps.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Exponent of `v`, zero when absent.
    pub fn exp(&self, v: Var) -> u32 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    /// Total degree.
    pub fn degree(&self) -> u64 {
        self.exps.values().map(|&e| e as u64).sum()
    }

    /// Variables with nonzero exponent, in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.exps.iter().map(|(&v, &e)| (v, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            *exps.entry(v).or_insert(0) += e;
        }
        Monomial { exps }
    }

    /// Quotient monomial, or None when some exponent of `other` exceeds ours.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            let cur = exps.get_mut(&v)?;
            if *cur < e {
                return None;
            }
            *cur -= e;
            if *cur == 0 {
                exps.remove(&v);
            }
        }
        Some(Monomial { exps })
    }

    fn with_exp(&self, v: Var, e: u32) -> Monomial {
        let mut exps = self.exps.clone();
        if e == 0 {
            exps.remove(&v);
        } else {
            exps.insert(v, e);
        }
        Monomial { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let mut a = self.exps.iter().peekable();
            let mut b = other.exps.iter().peekable();
            loop {
                match (a.peek(), b.peek()) {
                    (None, None) => return Ordering::Equal,
                    (Some((&va, &ea)), Some((&vb, &eb))) => match va.cmp(&vb) {
                        // The side missing the earlier variable has exponent 0
                        // there, and the stored exponent is positive.
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {
                            if ea != eb {
                                return ea.cmp(&eb);
                            }
                            a.next();
                            b.next();
                        }
                    },
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.iter() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with rational coefficients in canonical form: terms are
/// ordered by the monomial order and no coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    /// Constant polynomial from an integer.
    pub fn int(n: i64) -> Self {
        MultiPoly::constant(rat(n))
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::term(Rational::one(), &[(v, 1)])
    }

    /// Single term `coeff * prod v^e`.
    pub fn term(coeff: Rational, vars: &[(Var, u32)]) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::from_pairs(vars), coeff);
        p
    }

    /// Adds `coeff * mono` in place, keeping the canonical form.
    pub fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    /// Some(c) when the polynomial is the constant c (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        let mut out = MultiPoly::zero();
        for (m, a) in &self.terms {
            out.terms.insert(m.clone(), a * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Partial derivative with respect to `v`.
    pub fn partial(&self, v: Var) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e > 0 {
                out.add_term(m.with_exp(v, e - 1), c * rat(e as i64));
            }
        }
        out
    }

    /// Simultaneous substitution of variables by polynomials. Unbound
    /// variables stay themselves.
    pub fn subst(&self, bindings: &BTreeMap<Var, MultiPoly>) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut acc = MultiPoly::constant(c.clone());
            for (v, e) in m.iter() {
                let factor = match bindings.get(&v) {
                    Some(p) => p.pow(e),
                    None => MultiPoly::term(Rational::one(), &[(v, e)]),
                };
                acc = &acc * &factor;
            }
            out += acc;
        }
        out
    }

    /// Substitution of a single variable.
    pub fn subst_var(&self, v: Var, p: &MultiPoly) -> MultiPoly {
        let mut b = BTreeMap::new();
        b.insert(v, p.clone());
        self.subst(&b)
    }

    /// Largest exponent of `v` appearing in any term.
    pub fn max_power(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    /// The polynomial `q` with `self = sum_e q_e * v^e`, returning `q_e`.
    pub fn coeff_of_power(&self, v: Var, e: u32) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            if m.exp(v) == e {
                out.add_term(m.with_exp(v, 0), c.clone());
            }
        }
        out
    }

    /// Drops every term whose exponent of `v` exceeds `max`.
    pub fn truncate_power(&self, v: Var, max: u32) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            if m.exp(v) <= max {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Divides every term by `mono` exactly. Errors when some term is not
    /// divisible.
    pub fn exact_div_monomial(&self, mono: &Monomial) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let q = m.try_div(mono).ok_or_else(|| {
                Error::NotDivisible(format!("{m} is not divisible by {mono}"))
            })?;
            out.terms.insert(q, c.clone());
        }
        Ok(out)
    }

    /// Divides every term by `v^e` exactly.
    pub fn exact_div_var_pow(&self, v: Var, e: u32) -> Result<MultiPoly> {
        self.exact_div_monomial(&Monomial::from_pairs(&[(v, e)]))
    }

    /// Formal antiderivative in `v` with zero constant term: `v^j` maps to
    /// `v^(j+1) / (j+1)`.
    pub fn integrate(&self, v: Var) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            out.add_term(m.with_exp(v, e + 1), c / rat(e as i64 + 1));
        }
        out
    }

    /// Serializes to the canonical JSON term list.
    pub fn to_json_string(&self) -> String {
        let reprs: Vec<TermRepr> = self.term_reprs();
        // Serialization of this shape cannot fail.
        let mut buf = Vec::new();
        let mut ser = serde_json::Serializer::new(&mut buf);
        reprs.serialize(&mut ser).expect("term list serializes");
        String::from_utf8(buf).expect("serializer emits utf8")
    }

    /// Parses the canonical JSON term list.
    pub fn from_json_str(s: &str) -> Result<MultiPoly> {
        let reprs: Vec<TermRepr> =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("invalid poly JSON: {e}")))?;
        MultiPoly::from_term_reprs(reprs)
    }

    fn term_reprs(&self) -> Vec<TermRepr> {
        self.terms
            .iter()
            .map(|(m, c)| TermRepr {
                coeff: format_rational(c),
                monomial: m.exps.clone(),
            })
            .collect()
    }

    fn from_term_reprs(reprs: Vec<TermRepr>) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero();
        for r in reprs {
            let c = parse_rational(&r.coeff)?;
            let mono = Monomial {
                exps: r.monomial.into_iter().filter(|&(_, e)| e > 0).collect(),
            };
            out.add_term(mono, c);
        }
        Ok(out)
    }
}

/// Interchange form of one term.
#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: String,
    monomial: BTreeMap<Var, u32>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.term_reprs().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let reprs = Vec::<TermRepr>::deserialize(deserializer)?;
        MultiPoly::from_term_reprs(reprs).map_err(D::Error::custom)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign<MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: MultiPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self += rhs;
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

/// Product form of the falling factorial `(base)_k = base (base-1) ... (base-k+1)`.
pub fn falling_factorial_poly(base: &MultiPoly, k: u32) -> MultiPoly {
    let mut acc = MultiPoly::one();
    for i in 0..k as i64 {
        acc = &acc * &(base - &MultiPoly::int(i));
    }
    acc
}

/// `alpha^k * (1 - 1/alpha)_k` expanded as the polynomial
/// `prod_{i=0}^{k-1} ((1-i) * alpha - 1)`, which clears every denominator.
pub fn cleared_falling_inv_alpha(k: u32) -> MultiPoly {
    let alpha = MultiPoly::var(Var::Alpha);
    let mut acc = MultiPoly::one();
    for i in 0..k as i64 {
        acc = &acc * &(alpha.scale(&rat(1 - i)) - MultiPoly::one());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn u(i: u32) -> MultiPoly {
        MultiPoly::var(Var::U(i))
    }

    #[test]
    fn variable_order_is_canonical() {
        assert!(Var::U(1) < Var::U(2));
        assert!(Var::U(99) < Var::X);
        assert!(Var::X < Var::Alpha);
        assert!(Var::Alpha < Var::Beta);
        assert!(Var::Beta < Var::E);
    }

    #[test]
    fn monomial_order_is_graded_then_lex_ascending() {
        let u2sq = Monomial::from_pairs(&[(Var::U(2), 2)]);
        let u1u3 = Monomial::from_pairs(&[(Var::U(1), 1), (Var::U(3), 1)]);
        let u1 = Monomial::from_pairs(&[(Var::U(1), 1)]);
        assert!(u1 < u2sq, "degree dominates");
        assert!(u2sq < u1u3, "lower exponent on u1 comes first");
    }

    #[test]
    fn display_matches_conventions() {
        let p = MultiPoly::term(rat(3), &[(Var::U(2), 2)])
            + MultiPoly::term(rat(4), &[(Var::U(1), 1), (Var::U(3), 1)]);
        assert_eq!(p.to_string(), "3*u2^2 + 4*u1*u3");

        let q = u(2) + MultiPoly::term(ratio(1, 2), &[(Var::U(1), 2)]);
        assert_eq!(q.to_string(), "u2 + 1/2*u1^2");

        let r = MultiPoly::term(rat(-1), &[(Var::Beta, 1), (Var::U(2), 1)])
            + MultiPoly::term(ratio(-1, 3), &[(Var::E, 2)])
            + MultiPoly::int(5);
        // Same degree: E^2 has exponent 0 on u2, which sorts first.
        assert_eq!(r.to_string(), "5 - 1/3*E^2 - u2*beta");

        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(MultiPoly::int(-7).to_string(), "-7");
    }

    #[test]
    fn arithmetic_cancels_to_canonical_zero() {
        let p = &u(1) * &u(2);
        let q = &u(2) * &u(1);
        assert_eq!(p, q);
        assert!((&p - &q).is_zero());
    }

    #[test]
    fn pow_and_scale() {
        let p = u(1) + MultiPoly::int(1);
        let cube = p.pow(3);
        assert_eq!(
            cube.to_string(),
            "1 + 3*u1 + 3*u1^2 + u1^3"
        );
        assert_eq!(p.pow(0), MultiPoly::one());
        assert_eq!(cube.scale(&rat(0)), MultiPoly::zero());
    }

    #[test]
    fn partial_derivative_basics() {
        let p = MultiPoly::term(rat(3), &[(Var::U(2), 2)])
            + MultiPoly::term(rat(4), &[(Var::U(1), 1), (Var::U(3), 1)]);
        assert_eq!(p.partial(Var::U(1)).to_string(), "4*u3");
        assert_eq!(p.partial(Var::U(2)).to_string(), "6*u2");
        assert_eq!(p.partial(Var::X), MultiPoly::zero());
    }

    #[test]
    fn subst_is_simultaneous() {
        // u1 -> u2, u2 -> u1 twice is the identity.
        let p = &u(1).pow(2) * &u(2) + u(2).pow(3);
        let mut swap = BTreeMap::new();
        swap.insert(Var::U(1), u(2));
        swap.insert(Var::U(2), u(1));
        let once = p.subst(&swap);
        assert_ne!(once, p);
        assert_eq!(once.subst(&swap), p);
    }

    #[test]
    fn subst_numeric_example() {
        // 3! * (-alpha*beta)^3 at alpha = -1, beta = 1 is 6.
        let p = MultiPoly::term(rat(-6), &[(Var::Alpha, 3), (Var::Beta, 3)]);
        let mut b = BTreeMap::new();
        b.insert(Var::Alpha, MultiPoly::int(-1));
        b.insert(Var::Beta, MultiPoly::int(1));
        assert_eq!(p.subst(&b), MultiPoly::int(6));
    }

    #[test]
    fn integration_in_x() {
        let p = MultiPoly::term(rat(2), &[(Var::X, 1)]) + MultiPoly::int(3);
        assert_eq!(p.integrate(Var::X).to_string(), "3*x + x^2");
    }

    #[test]
    fn exact_division() {
        let p = MultiPoly::term(rat(4), &[(Var::Alpha, 3), (Var::X, 1)])
            + MultiPoly::term(rat(-2), &[(Var::Alpha, 2)]);
        let q = p.exact_div_var_pow(Var::Alpha, 2).unwrap();
        assert_eq!(q.to_string(), "-2 + 4*x*alpha");
        assert!(p.exact_div_var_pow(Var::Alpha, 3).is_err());
    }

    #[test]
    fn coefficient_extraction() {
        let p = MultiPoly::term(rat(5), &[(Var::X, 2), (Var::U(1), 1)])
            + MultiPoly::term(rat(7), &[(Var::X, 2)])
            + u(2);
        let c2 = p.coeff_of_power(Var::X, 2);
        assert_eq!(c2.to_string(), "7 + 5*u1");
        assert_eq!(p.coeff_of_power(Var::X, 0), u(2));
        assert_eq!(p.max_power(Var::X), 2);
        assert_eq!(p.truncate_power(Var::X, 1), u(2));
    }

    #[test]
    fn json_round_trip_matches_schema() {
        let p = MultiPoly::term(rat(3), &[(Var::U(2), 2)])
            + MultiPoly::term(rat(4), &[(Var::U(1), 1), (Var::U(3), 1)]);
        let s = p.to_json_string();
        assert_eq!(
            s,
            r#"[{"coeff":"3","monomial":{"u2":2}},{"coeff":"4","monomial":{"u1":1,"u3":1}}]"#
        );
        assert_eq!(MultiPoly::from_json_str(&s).unwrap(), p);

        let neg = MultiPoly::term(ratio(-1, 2), &[(Var::Beta, 1), (Var::E, 2)]);
        assert_eq!(MultiPoly::from_json_str(&neg.to_json_string()).unwrap(), neg);
        assert!(MultiPoly::from_json_str("[{\"coeff\":\"1\",\"monomial\":{\"q\":1}}]").is_err());
    }

    #[test]
    fn falling_factorial_poly_of_alpha() {
        let alpha = MultiPoly::var(Var::Alpha);
        assert_eq!(falling_factorial_poly(&alpha, 0), MultiPoly::one());
        assert_eq!(
            falling_factorial_poly(&alpha, 2).to_string(),
            "-alpha + alpha^2"
        );
    }

    #[test]
    fn cleared_inverse_falling_factorial() {
        // alpha^2 (1 - 1/alpha)_2 = (alpha - 1)(-1) = 1 - alpha.
        assert_eq!(cleared_falling_inv_alpha(0), MultiPoly::one());
        assert_eq!(cleared_falling_inv_alpha(1).to_string(), "-1 + alpha");
        assert_eq!(cleared_falling_inv_alpha(2).to_string(), "1 - alpha");
    }
}
