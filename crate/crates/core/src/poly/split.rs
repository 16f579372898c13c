//! Bounded case-split decomposition of polynomial systems.
//!
//! A component is a triangular set of linear substitutions plus a residual
//! ideal and a list of polynomials assumed nonzero. Branching is always of
//! the form `x = 0` versus `x ≠ 0`; the nonzero branch is saturated via the
//! Rabinowitsch trick, so pure powers collapse and inconsistent branches are
//! certified empty. The union of the component solution sets is exactly the
//! variety of the input ideal.

use super::groebner::{buchberger, contains_one, groebner, GroebnerBasis};
use super::{Budget, Ideal, Order, Polynomial};
use crate::error::BudgetExhausted;
use num_traits::Zero;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentStatus {
    /// Every constraint was absorbed into the triangular substitutions.
    Solved,
    /// Nonlinear residual remained within the depth budget.
    Unresolved,
}

/// One branch of a case analysis.
#[derive(Debug, Clone)]
pub struct CaseComponent {
    /// Triangular, fully back-substituted: each value is free of every
    /// substituted variable.
    pub substitutions: BTreeMap<usize, Polynomial>,
    /// Remaining constraints, reduced with respect to the substitutions.
    pub residual: Vec<Polynomial>,
    /// Polynomials assumed nonzero on this component.
    pub nonvanishing: Vec<Polynomial>,
    pub status: ComponentStatus,
}

impl CaseComponent {
    /// Apply the substitutions to an arbitrary polynomial.
    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        let mut out = p.clone();
        for (&v, e) in &self.substitutions {
            out = out.substitute_var(v, e);
        }
        out
    }

    /// Variables that remain free parameters of this component.
    pub fn free_vars(&self, nvars: usize) -> Vec<usize> {
        (0..nvars)
            .filter(|v| !self.substitutions.contains_key(v))
            .collect()
    }

    /// The component's closure ideal: substitution equations plus residual.
    pub fn closure_generators(&self, nvars: usize) -> Vec<Polynomial> {
        let mut gens: Vec<Polynomial> = self
            .substitutions
            .iter()
            .map(|(&v, e)| Polynomial::var(v, nvars).sub(e))
            .collect();
        gens.extend(self.residual.iter().cloned());
        gens
    }
}

/// Generators of the saturation `I : (∏ by)^∞`, computed with a fresh
/// Rabinowitsch variable and lex elimination.
pub fn saturate(
    gens: &[Polynomial],
    by: &[Polynomial],
    nvars: usize,
    budget: &mut Budget,
) -> Result<Vec<Polynomial>, BudgetExhausted> {
    if by.is_empty() {
        return Ok(gens.to_vec());
    }
    let mut product = Polynomial::one(nvars);
    for u in by {
        product = product.mul(u);
    }
    let shifted: Vec<Polynomial> = gens.iter().map(|g| g.shift_vars(1)).collect();
    let mut extended = shifted;
    let t = Polynomial::var(0, nvars + 1);
    extended.push(t.mul(&product.shift_vars(1)).sub(&Polynomial::one(nvars + 1)));
    let gb = buchberger(&extended, Order::Lex, budget)?;
    Ok(gb.iter().filter_map(|p| p.unshift_vars(1)).collect())
}

struct Splitter<'a> {
    nvars: usize,
    order: Order,
    budget: &'a mut Budget,
    out: Vec<CaseComponent>,
}

enum Extraction {
    Empty,
    Reduced {
        substitutions: BTreeMap<usize, Polynomial>,
        residual: Vec<Polynomial>,
        nonvanishing: Vec<Polynomial>,
    },
}

impl<'a> Splitter<'a> {
    /// Fold every affine generator into the substitution map, keeping the
    /// substitutions triangular and fully back-substituted.
    fn extract_linear(
        &mut self,
        gens: Vec<Polynomial>,
        mut substitutions: BTreeMap<usize, Polynomial>,
        mut nonvanishing: Vec<Polynomial>,
    ) -> Result<Extraction, BudgetExhausted> {
        let mut work: Vec<Polynomial> = gens;
        loop {
            work.retain(|p| !p.is_zero());
            if work
                .iter()
                .any(|p| p.constant_value().is_some_and(|c| !c.is_zero()))
            {
                return Ok(Extraction::Empty);
            }
            if nonvanishing.iter().any(Polynomial::is_zero) {
                return Ok(Extraction::Empty);
            }
            nonvanishing.retain(|p| p.constant_value().is_none());
            work.sort_by(|a, b| a.cmp_canonical(b, self.order));
            work.dedup();
            let linear = work.iter().position(|p| {
                p.total_degree() == 1 && p.as_affine().is_some()
            });
            let Some(idx) = linear else {
                // re-run the basis once in case reductions expose new
                // affine generators
                let gb = buchberger(&work, self.order, self.budget)?;
                let has_affine = gb
                    .iter()
                    .any(|p| p.total_degree() == 1 || p.constant_value().is_some());
                if gb.iter().any(|p| p.constant_value().is_some_and(|c| !c.is_zero())) {
                    return Ok(Extraction::Empty);
                }
                if has_affine && gb != work {
                    work = gb;
                    continue;
                }
                return Ok(Extraction::Reduced {
                    substitutions,
                    residual: gb,
                    nonvanishing,
                });
            };
            let eq = work.swap_remove(idx);
            let (coeffs, constant) = eq.as_affine().unwrap();
            // solve for the lex-greatest variable present
            let var = coeffs.iter().position(|c| !c.is_zero()).unwrap();
            let inv = -coeffs[var].recip();
            let mut expr = Polynomial::constant(self.nvars, constant);
            for (i, c) in coeffs.iter().enumerate() {
                if i != var && !c.is_zero() {
                    expr = expr.add(&Polynomial::var(i, self.nvars).scale(c));
                }
            }
            let expr = expr.scale(&inv);
            self.budget.consume(1)?;
            for p in &mut work {
                *p = p.substitute_var(var, &expr);
            }
            for e in substitutions.values_mut() {
                *e = e.substitute_var(var, &expr);
            }
            for u in &mut nonvanishing {
                *u = u.substitute_var(var, &expr);
            }
            substitutions.insert(var, expr);
        }
    }

    fn branch_variable(
        &self,
        residual: &[Polynomial],
        substitutions: &BTreeMap<usize, Polynomial>,
        nonvanishing: &[Polynomial],
    ) -> Option<usize> {
        let excluded: Vec<usize> = (0..self.nvars)
            .filter(|&v| {
                substitutions.contains_key(&v)
                    || nonvanishing.contains(&Polynomial::var(v, self.nvars))
            })
            .collect();
        let mut sorted: Vec<&Polynomial> = residual.iter().collect();
        sorted.sort_by(|a, b| a.cmp_canonical(b, self.order));
        for p in sorted {
            if p.num_terms() > 2 {
                continue;
            }
            if let Some(v) = p.variables().into_iter().find(|v| !excluded.contains(v)) {
                return Some(v);
            }
        }
        None
    }

    fn split(
        &mut self,
        gens: Vec<Polynomial>,
        substitutions: BTreeMap<usize, Polynomial>,
        nonvanishing: Vec<Polynomial>,
        depth: u32,
    ) -> Result<(), BudgetExhausted> {
        let nontrivial: Vec<Polynomial> = nonvanishing
            .iter()
            .filter(|p| p.constant_value().is_none())
            .cloned()
            .collect();
        let sat = saturate(&gens, &nontrivial, self.nvars, self.budget)?;
        let extraction = self.extract_linear(sat, substitutions, nonvanishing)?;
        let Extraction::Reduced {
            substitutions,
            residual,
            nonvanishing,
        } = extraction
        else {
            return Ok(());
        };
        if residual.is_empty() {
            self.out.push(CaseComponent {
                substitutions,
                residual,
                nonvanishing,
                status: ComponentStatus::Solved,
            });
            return Ok(());
        }
        if depth == 0 {
            self.out.push(CaseComponent {
                substitutions,
                residual,
                nonvanishing,
                status: ComponentStatus::Unresolved,
            });
            return Ok(());
        }
        let Some(var) = self.branch_variable(&residual, &substitutions, &nonvanishing) else {
            self.out.push(CaseComponent {
                substitutions,
                residual,
                nonvanishing,
                status: ComponentStatus::Unresolved,
            });
            return Ok(());
        };
        // x = 0 branch
        let mut zero_gens = residual.clone();
        zero_gens.push(Polynomial::var(var, self.nvars));
        self.split(
            zero_gens,
            substitutions.clone(),
            nonvanishing.clone(),
            depth - 1,
        )?;
        // x ≠ 0 branch
        let mut nz = nonvanishing;
        nz.push(Polynomial::var(var, self.nvars));
        self.split(residual, substitutions, nz, depth - 1)
    }
}

/// Decompose the variety of `ideal` into case components.
pub fn case_split(
    ideal: &Ideal,
    depth: u32,
    budget: &mut Budget,
) -> Result<Vec<CaseComponent>, BudgetExhausted> {
    let nvars = if ideal.generators.is_empty() {
        0
    } else {
        ideal.nvars()
    };
    let mut splitter = Splitter {
        nvars,
        order: ideal.order,
        budget,
        out: Vec::new(),
    };
    splitter.split(ideal.generators.clone(), BTreeMap::new(), Vec::new(), depth)?;
    Ok(splitter.out)
}

/// Check emptiness of an ideal together with nonvanishing assumptions.
pub fn empty_with_assumptions(
    gens: &[Polynomial],
    nonvanishing: &[Polynomial],
    nvars: usize,
    order: Order,
    budget: &mut Budget,
) -> Result<bool, BudgetExhausted> {
    let sat = saturate(gens, nonvanishing, nvars, budget)?;
    let gb = groebner(&Ideal::new(sat, order), budget)?;
    Ok(contains_one(&gb))
}

/// Generators of the intersection `⟨a⟩ ∩ ⟨b⟩`, via the elimination of a
/// fresh variable from `t·a + (1−t)·b`.
pub fn ideal_intersection(
    a: &[Polynomial],
    b: &[Polynomial],
    nvars: usize,
    budget: &mut Budget,
) -> Result<Vec<Polynomial>, BudgetExhausted> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let t = Polynomial::var(0, nvars + 1);
    let one_minus_t = Polynomial::one(nvars + 1).sub(&t);
    let mut extended: Vec<Polynomial> = a
        .iter()
        .map(|p| t.mul(&p.shift_vars(1)))
        .collect();
    extended.extend(b.iter().map(|p| one_minus_t.mul(&p.shift_vars(1))));
    let gb = buchberger(&extended, Order::Lex, budget)?;
    Ok(gb.iter().filter_map(|p| p.unshift_vars(1)).collect())
}

/// Radical membership via Rabinowitsch: `p` vanishes on the variety of
/// `gens` iff `1 ∈ ⟨gens, t·p − 1⟩`.
pub fn in_radical(
    p: &Polynomial,
    gens: &[Polynomial],
    nvars: usize,
    budget: &mut Budget,
) -> Result<bool, BudgetExhausted> {
    if p.is_zero() {
        return Ok(true);
    }
    let mut extended: Vec<Polynomial> = gens.iter().map(|g| g.shift_vars(1)).collect();
    let t = Polynomial::var(0, nvars + 1);
    extended.push(t.mul(&p.shift_vars(1)).sub(&Polynomial::one(nvars + 1)));
    let gb = buchberger(&extended, Order::Lex, budget)?;
    let gb = GroebnerBasis {
        polys: gb,
        order: Order::Lex,
    };
    Ok(contains_one(&gb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::poly::PolyRing;

    fn ring_xy() -> PolyRing {
        PolyRing::new(vec!["x".into(), "y".into()])
    }

    fn split(ring: &PolyRing, gens: &[&str], depth: u32) -> Vec<CaseComponent> {
        let ideal = Ideal::new(
            gens.iter().map(|s| ring.parse(s).unwrap()).collect(),
            Order::Lex,
        );
        case_split(&ideal, depth, &mut Budget::new(200_000)).unwrap()
    }

    #[test]
    fn product_splits_into_two_components() {
        let r = ring_xy();
        let comps = split(&r, &["x*y"], 1);
        assert_eq!(comps.len(), 2);
        // first branch: x = 0, y free
        assert_eq!(comps[0].substitutions.len(), 1);
        assert!(comps[0].substitutions[&0].is_zero());
        assert!(comps[0].nonvanishing.is_empty());
        assert_eq!(comps[0].status, ComponentStatus::Solved);
        // second branch: y = 0 under x ≠ 0
        assert!(comps[1].substitutions[&1].is_zero());
        assert_eq!(comps[1].nonvanishing, vec![r.parse("x").unwrap()]);
    }

    #[test]
    fn pure_power_collapses_to_single_component() {
        let r = ring_xy();
        let comps = split(&r, &["x^2"], 3);
        assert_eq!(comps.len(), 1);
        assert!(comps[0].substitutions[&0].is_zero());
        assert_eq!(comps[0].status, ComponentStatus::Solved);
    }

    #[test]
    fn soundness_on_sample_points() {
        let r = ring_xy();
        let gens = ["x*y - y", "x^2 - x"];
        let comps = split(&r, &gens, 4);
        assert!(!comps.is_empty());
        for comp in &comps {
            assert_eq!(comp.status, ComponentStatus::Solved);
            // substitute arbitrary values for the free variables; the
            // original generators must vanish
            for seed in [rat(0), rat(1), rat(-2), rat(7)] {
                let mut point = vec![seed.clone(), seed.clone() + rat(1)];
                for (&v, e) in &comp.substitutions {
                    let free_eval = e.eval(&point);
                    point[v] = free_eval;
                }
                if comp
                    .nonvanishing
                    .iter()
                    .any(|u| u.eval(&point).is_zero())
                {
                    continue;
                }
                for g in &gens {
                    let g = r.parse(g).unwrap();
                    assert!(g.eval(&point).is_zero(), "component not a solution");
                }
            }
        }
    }

    #[test]
    fn inconsistent_system_yields_no_components() {
        let r = ring_xy();
        let comps = split(&r, &["x", "x - 1"], 2);
        assert!(comps.is_empty());
    }

    #[test]
    fn radical_membership() {
        let r = ring_xy();
        let mut budget = Budget::new(200_000);
        let gens = vec![r.parse("x^2").unwrap()];
        assert!(in_radical(&r.parse("x").unwrap(), &gens, 2, &mut budget).unwrap());
        assert!(!in_radical(&r.parse("y").unwrap(), &gens, 2, &mut budget).unwrap());
    }

    #[test]
    fn soundness_property_on_random_products_of_linear_forms() {
        use proptest::prelude::*;
        use proptest::test_runner::{Config, TestRunner};
        // random ideals generated by products of small affine forms stay
        // within easy reach of the splitter; every component must consist
        // of solutions of the original generators
        let linear = || {
            (-2i64..3, -2i64..3, -2i64..3)
                .prop_map(|(a, b, c)| (a, b, c))
        };
        let gen_strategy = proptest::collection::vec((linear(), linear()), 1..3);
        let mut runner = TestRunner::new(Config {
            cases: 24,
            ..Config::default()
        });
        runner
            .run(&gen_strategy, |factor_pairs| {
                let mk = |(a, b, c): (i64, i64, i64)| {
                    Polynomial::from_terms(
                        2,
                        [
                            (crate::poly::Monomial(vec![1, 0]), rat(a)),
                            (crate::poly::Monomial(vec![0, 1]), rat(b)),
                            (crate::poly::Monomial(vec![0, 0]), rat(c)),
                        ],
                    )
                };
                let gens: Vec<Polynomial> = factor_pairs
                    .iter()
                    .map(|&(f, g)| mk(f).mul(&mk(g)))
                    .filter(|p| !p.is_zero())
                    .collect();
                if gens.is_empty() {
                    return Ok(());
                }
                let ideal = Ideal::new(gens.clone(), Order::Lex);
                let comps = case_split(&ideal, 4, &mut Budget::new(200_000)).unwrap();
                for comp in &comps {
                    for seed in [rat(0), rat(2), rat(-3)] {
                        let mut point = vec![seed.clone(), seed.clone() + rat(1)];
                        for (&v, e) in &comp.substitutions {
                            point[v] = e.eval(&point);
                        }
                        if comp.status != ComponentStatus::Solved
                            || comp
                                .nonvanishing
                                .iter()
                                .any(|u| u.eval(&point).is_zero())
                        {
                            continue;
                        }
                        for g in &gens {
                            prop_assert!(
                                g.eval(&point).is_zero(),
                                "component point violates a generator"
                            );
                        }
                    }
                }
                Ok(())
            })
            .unwrap();
    }

    #[test]
    fn deterministic_component_order() {
        let r = ring_xy();
        let a = split(&r, &["x*y", "x^2 - x"], 3);
        let b = split(&r, &["x*y", "x^2 - x"], 3);
        assert_eq!(a.len(), b.len());
        for (c1, c2) in a.iter().zip(&b) {
            assert_eq!(c1.substitutions, c2.substitutions);
            assert_eq!(c1.residual, c2.residual);
            assert_eq!(c1.nonvanishing, c2.nonvanishing);
        }
    }
}
