//! Exact multivariate polynomial arithmetic over the rationals.
//!
//! Polynomials are stored as term maps keyed by exponent vectors; the
//! storage order is structural while Gröbner computations take an explicit
//! [`Order`]. Serialization uses a fixed canonical term order so identical
//! polynomials always print identically.

mod groebner;
mod split;

pub use groebner::{groebner, buchberger, contains_one, ideal_equal, reduce, GroebnerBasis};
pub use split::{
    case_split, empty_with_assumptions, ideal_intersection, in_radical, saturate, CaseComponent,
    ComponentStatus,
};

use crate::error::{BudgetExhausted, Error};
use crate::exact::{format_rat, parse_rat, Rat};
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Step budget shared by the Gröbner engine and everything built on it.
#[derive(Debug, Clone)]
pub struct Budget {
    remaining: u64,
    consumed: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            remaining: limit,
            consumed: 0,
        }
    }

    pub fn consume(&mut self, n: u64) -> Result<(), BudgetExhausted> {
        if n > self.remaining {
            self.remaining = 0;
            Err(BudgetExhausted)
        } else {
            self.remaining -= n;
            self.consumed += n;
            Ok(())
        }
    }

    pub fn remaining(&self) -> u64 {
        self.remaining
    }

    pub fn consumed(&self) -> u64 {
        self.consumed
    }

    /// Run a sub-computation under a cap; its consumption is charged here
    /// whether or not it finishes.
    pub fn with_cap<T>(
        &mut self,
        cap: u64,
        f: impl FnOnce(&mut Budget) -> Result<T, BudgetExhausted>,
    ) -> Result<T, BudgetExhausted> {
        let mut sub = Budget::new(cap.min(self.remaining));
        let out = f(&mut sub);
        self.remaining -= sub.consumed;
        self.consumed += sub.consumed;
        out
    }
}

/// Monomial term order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Order {
    /// Pure lexicographic; variable 0 dominates.
    #[serde(rename = "lex")]
    Lex,
    /// Graded reverse lexicographic.
    #[serde(rename = "grevlex")]
    GrevLex,
}

impl Order {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            Order::Lex => a.0.cmp(&b.0),
            Order::GrevLex => {
                let (da, db) = (a.total_degree(), b.total_degree());
                if da != db {
                    return da.cmp(&db);
                }
                for (x, y) in a.0.iter().zip(&b.0).rev() {
                    match x.cmp(y) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {}
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Exponent vector; length is fixed by the ambient variable set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }
}

/// Multivariate polynomial with rational coefficients.
///
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Polynomial::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, Rat::one())
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        assert!(i < nvars);
        let mut p = Polynomial::zero(nvars);
        p.terms.insert(Monomial::var(i, nvars), Rat::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            p.add_term(&m, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<&Rat> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms
            .iter()
            .next()
            .filter(|(m, _)| m.is_one())
            .map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn variables(&self) -> Vec<usize> {
        let mut seen = vec![false; self.nvars];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    seen[i] = true;
                }
            }
        }
        seen.iter().enumerate().filter(|(_, &s)| s).map(|(i, _)| i).collect()
    }

    fn add_term(&mut self, m: &Monomial, c: &Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(m) {
            Some(cur) => {
                *cur += c;
                if cur.is_zero() {
                    self.terms.remove(m);
                }
            }
            None => {
                self.terms.insert(m.clone(), c.clone());
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(&m.mul(m2), &(c * c2));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Leading term with respect to `order`.
    pub fn leading(&self, order: Order) -> Option<(&Monomial, &Rat)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    pub fn monic(&self, order: Order) -> Polynomial {
        match self.leading(order) {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitute `value` for variable `var` (same ambient ring).
    pub fn substitute_var(&self, var: usize, value: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, value.nvars);
        let max_pow = self.degree_in(var);
        let mut powers = Vec::with_capacity(max_pow as usize + 1);
        powers.push(Polynomial::one(self.nvars));
        for k in 1..=max_pow {
            let prev = &powers[(k - 1) as usize];
            powers.push(prev.mul(value));
        }
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            let mut rest = m.clone();
            rest.0[var] = 0;
            let contrib = powers[e as usize].mul_term(&rest, c);
            out = out.add(&contrib);
        }
        out
    }

    /// Map every variable to the given image polynomial (all in one ring of
    /// `new_nvars` variables).
    pub fn compose(&self, images: &[Polynomial], new_nvars: usize) -> Polynomial {
        assert_eq!(images.len(), self.nvars);
        let mut out = Polynomial::zero(new_nvars);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(new_nvars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e));
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Re-embed with `extra` fresh variables appended.
    pub fn extend_vars(&self, extra: usize) -> Polynomial {
        let nvars = self.nvars + extra;
        Polynomial {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.resize(nvars, 0);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Re-embed with `offset` fresh variables prepended.
    pub fn shift_vars(&self, offset: usize) -> Polynomial {
        let nvars = self.nvars + offset;
        Polynomial {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0; offset];
                    e.extend_from_slice(&m.0);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Drop the first `count` variables; `None` if any of them occurs.
    pub fn unshift_vars(&self, count: usize) -> Option<Polynomial> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.0[..count].iter().any(|&e| e > 0) {
                return None;
            }
            terms.insert(Monomial(m.0[count..].to_vec()), c.clone());
        }
        Some(Polynomial {
            nvars: self.nvars - count,
            terms,
        })
    }

    /// For an affine polynomial (total degree ≤ 1): per-variable coefficients
    /// and the constant.
    pub fn as_affine(&self) -> Option<(Vec<Rat>, Rat)> {
        if self.total_degree() > 1 {
            return None;
        }
        let mut coeffs = vec![Rat::zero(); self.nvars];
        let mut constant = Rat::zero();
        for (m, c) in &self.terms {
            if m.is_one() {
                constant = c.clone();
            } else {
                let i = m.0.iter().position(|&e| e == 1).unwrap();
                coeffs[i] = c.clone();
            }
        }
        Some((coeffs, constant))
    }

    /// Degree-one homogeneous part.
    pub fn linear_part(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == 1)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Deterministic structural comparison used for canonical listings.
    pub fn cmp_canonical(&self, other: &Polynomial, order: Order) -> Ordering {
        match (self.leading(order), other.leading(order)) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some((ma, _)), Some((mb, _))) => order
                .cmp(ma, mb)
                .then_with(|| self.num_terms().cmp(&other.num_terms()))
                .then_with(|| {
                    let ta: Vec<_> = self.terms.iter().collect();
                    let tb: Vec<_> = other.terms.iter().collect();
                    ta.cmp(&tb)
                }),
        }
    }
}

/// A named variable set; polynomials themselves carry only indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    vars: Vec<String>,
}

impl PolyRing {
    pub fn new(vars: Vec<String>) -> Self {
        PolyRing { vars }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn var(&self, name: &str) -> Polynomial {
        let i = self
            .var_index(name)
            .unwrap_or_else(|| panic!("no variable `{name}`"));
        Polynomial::var(i, self.nvars())
    }

    /// Canonical string form, e.g. `3/2*a1^2*b3 - c2`.
    pub fn poly_to_string(&self, p: &Polynomial) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<(&Monomial, &Rat)> = p.terms().collect();
        terms.sort_by(|(a, _), (b, _)| Order::Lex.cmp(b, a));
        let mut out = String::new();
        for (idx, (m, c)) in terms.iter().enumerate() {
            let neg = c < &&Rat::zero();
            let abs = if neg { -*c } else { (*c).clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(format_rat(&abs));
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(self.vars[i].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.vars[i], e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parse sums of terms like `a^2 + 3/2*b*c - 2`.
    pub fn parse(&self, input: &str) -> Result<Polynomial, Error> {
        let mut out = Polynomial::zero(self.nvars());
        let mut rest = input.trim();
        let mut sign = Rat::one();
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        }
        if rest.is_empty() {
            return Err(Error::Parse(format!("empty polynomial in `{input}`")));
        }
        while !rest.is_empty() {
            let end = rest
                .char_indices()
                .find(|&(_, ch)| ch == '+' || ch == '-')
                .map_or(rest.len(), |(i, _)| i);
            let term_str = rest[..end].trim();
            out = out.add(&self.parse_term(term_str)?.scale(&sign));
            if end == rest.len() {
                break;
            }
            sign = if rest[end..].starts_with('-') {
                -Rat::one()
            } else {
                Rat::one()
            };
            rest = rest[end + 1..].trim_start();
        }
        Ok(out)
    }

    fn parse_term(&self, term: &str) -> Result<Polynomial, Error> {
        let mut coeff = Rat::one();
        let mut mono = Monomial::one(self.nvars());
        for factor in term.split('*') {
            let factor = factor.trim();
            if factor.is_empty() {
                return Err(Error::Parse(format!("empty factor in `{term}`")));
            }
            if factor.chars().next().unwrap().is_ascii_digit() {
                coeff *= parse_rat(factor)?;
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                ),
                None => (factor, 1),
            };
            let i = self
                .var_index(name)
                .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
            mono.0[i] += exp;
        }
        Ok(Polynomial::from_terms(self.nvars(), [(mono, coeff)]))
    }
}

/// A polynomial ideal given by generators and a term order.
#[derive(Debug, Clone)]
pub struct Ideal {
    pub generators: Vec<Polynomial>,
    pub order: Order,
}

impl Ideal {
    pub fn new(generators: Vec<Polynomial>, order: Order) -> Self {
        Ideal {
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            order,
        }
    }

    pub fn nvars(&self) -> usize {
        self.generators.first().map_or(0, Polynomial::nvars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn ring2() -> PolyRing {
        PolyRing::new(vec!["x".into(), "y".into()])
    }

    #[test]
    fn parse_and_print_round_trip() {
        let r = ring2();
        let p = r.parse("3/2*x^2*y - y + 1").unwrap();
        assert_eq!(r.poly_to_string(&p), "3/2*x^2*y - y + 1");
        let q = r.parse("-x + x").unwrap();
        assert!(q.is_zero());
        assert_eq!(r.poly_to_string(&q), "0");
    }

    #[test]
    fn arithmetic_basics() {
        let r = ring2();
        let p = r.parse("x + y").unwrap();
        let q = r.parse("x - y").unwrap();
        assert_eq!(p.mul(&q), r.parse("x^2 - y^2").unwrap());
        assert_eq!(p.pow(2), r.parse("x^2 + 2*x*y + y^2").unwrap());
    }

    #[test]
    fn orders_disagree_where_expected() {
        let r = ring2();
        // x vs y^2: lex prefers x, grevlex prefers y^2.
        let x = r.parse("x").unwrap();
        let y2 = r.parse("y^2").unwrap();
        let (mx, _) = x.leading(Order::Lex).unwrap();
        let (my2, _) = y2.leading(Order::Lex).unwrap();
        assert_eq!(Order::Lex.cmp(mx, my2), std::cmp::Ordering::Greater);
        assert_eq!(Order::GrevLex.cmp(mx, my2), std::cmp::Ordering::Less);
    }

    #[test]
    fn grevlex_tie_break() {
        let r = PolyRing::new(vec!["x".into(), "y".into(), "z".into()]);
        // same degree: x*z vs y^2 — grevlex compares from the last variable,
        // smaller exponent there wins.
        let a = r.parse("x*z").unwrap();
        let b = r.parse("y^2").unwrap();
        let (ma, _) = a.leading(Order::GrevLex).unwrap();
        let (mb, _) = b.leading(Order::GrevLex).unwrap();
        assert_eq!(Order::GrevLex.cmp(ma, mb), std::cmp::Ordering::Less);
    }

    #[test]
    fn substitution() {
        let r = ring2();
        let p = r.parse("x^2 + y").unwrap();
        let sub = r.parse("y + 1").unwrap();
        assert_eq!(
            p.substitute_var(0, &sub),
            r.parse("y^2 + 3*y + 1").unwrap()
        );
    }

    #[test]
    fn affine_decomposition() {
        let r = ring2();
        let (coeffs, c) = r.parse("2*x - y + 3").unwrap().as_affine().unwrap();
        assert_eq!(coeffs, vec![rat(2), rat(-1)]);
        assert_eq!(c, rat(3));
        assert!(r.parse("x*y").unwrap().as_affine().is_none());
    }

    #[test]
    fn eval_matches_compose() {
        let r = ring2();
        let p = r.parse("x^2*y - 2*y + 1").unwrap();
        let point = vec![rat(3), rat(-2)];
        let images = vec![
            Polynomial::constant(0, rat(3)),
            Polynomial::constant(0, rat(-2)),
        ];
        let composed = p.compose(&images, 0);
        let value = composed
            .constant_value()
            .cloned()
            .unwrap_or_else(|| rat(0));
        assert_eq!(value, p.eval(&point));
    }
}
