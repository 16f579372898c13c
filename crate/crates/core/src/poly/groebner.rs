//! Budgeted Buchberger engine producing reduced Gröbner bases.
//!
//! S-pairs are processed by the normal strategy: minimal lcm total degree
//! first, ties broken by pair index. Every single reduction step consumes one
//! unit of budget, so identical inputs always consume identical budgets and
//! produce identical bases.

use super::{Budget, Ideal, Monomial, Order, Polynomial};
use crate::error::BudgetExhausted;
use num_traits::Zero;
use std::cmp::Reverse;
use std::collections::BinaryHeap;

/// A reduced Gröbner basis: minimal, inter-reduced, monic, canonically sorted.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub polys: Vec<Polynomial>,
    pub order: Order,
}

impl GroebnerBasis {
    pub fn reduce(&self, p: &Polynomial, budget: &mut Budget) -> Result<Polynomial, BudgetExhausted> {
        reduce(p, &self.polys, self.order, budget)
    }
}

/// Full normal form of `p` modulo `set`.
pub fn reduce(
    p: &Polynomial,
    set: &[Polynomial],
    order: Order,
    budget: &mut Budget,
) -> Result<Polynomial, BudgetExhausted> {
    let mut work = p.clone();
    let mut remainder = Polynomial::zero(p.nvars());
    'outer: while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = work.leading(order).unwrap();
            (m.clone(), c.clone())
        };
        for g in set {
            if g.is_zero() {
                continue;
            }
            let (gm, gc) = g.leading(order).unwrap();
            if gm.divides(&lm) {
                budget.consume(1)?;
                let factor_m = gm.div_into(&lm);
                let factor_c = &lc / gc;
                work = work.sub(&g.mul_term(&factor_m, &factor_c));
                continue 'outer;
            }
        }
        // leading term is irreducible: move it to the remainder
        remainder = remainder.add(&Polynomial::from_terms(p.nvars(), [(lm.clone(), lc.clone())]));
        work = work.sub(&Polynomial::from_terms(p.nvars(), [(lm, lc)]));
    }
    Ok(remainder)
}

fn spoly(f: &Polynomial, g: &Polynomial, order: Order) -> Polynomial {
    let (fm, fc) = f.leading(order).unwrap();
    let (gm, gc) = g.leading(order).unwrap();
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.div_into(&l), &fc.recip());
    let b = g.mul_term(&gm.div_into(&l), &gc.recip());
    a.sub(&b)
}

type PairKey = (u32, usize, usize);

fn pair_key(basis: &[Polynomial], order: Order, i: usize, j: usize) -> (PairKey, Monomial) {
    let (mi, _) = basis[i].leading(order).unwrap();
    let (mj, _) = basis[j].leading(order).unwrap();
    let l = mi.lcm(mj);
    ((l.total_degree(), i, j), l)
}

/// Buchberger's algorithm on raw generators.
pub fn buchberger(
    gens: &[Polynomial],
    order: Order,
    budget: &mut Budget,
) -> Result<Vec<Polynomial>, BudgetExhausted> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.monic(order));
        }
    }
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let mut queue: BinaryHeap<Reverse<PairKey>> = BinaryHeap::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (key, _) = pair_key(&basis, order, i, j);
            queue.push(Reverse(key));
        }
    }
    while let Some(Reverse((_, i, j))) = queue.pop() {
        let (fm, _) = basis[i].leading(order).unwrap();
        let (gm, _) = basis[j].leading(order).unwrap();
        // product criterion: coprime leading monomials reduce to zero
        if fm.lcm(gm) == fm.mul(gm) {
            continue;
        }
        budget.consume(1)?;
        let s = spoly(&basis[i], &basis[j], order);
        let r = reduce(&s, &basis, order, budget)?;
        if !r.is_zero() {
            let r = r.monic(order);
            basis.push(r);
            let new = basis.len() - 1;
            for k in 0..new {
                let (key, _) = pair_key(&basis, order, k, new);
                queue.push(Reverse(key));
            }
        }
    }
    reduce_basis(basis, order, budget)
}

/// Minimalize, inter-reduce, normalize and sort a Gröbner basis.
fn reduce_basis(
    mut basis: Vec<Polynomial>,
    order: Order,
    budget: &mut Budget,
) -> Result<Vec<Polynomial>, BudgetExhausted> {
    // minimal: drop g when some other leading term divides lt(g)
    basis.sort_by(|a, b| a.cmp_canonical(b, order));
    let mut keep: Vec<Polynomial> = Vec::new();
    'next: for (idx, g) in basis.iter().enumerate() {
        let (gm, _) = g.leading(order).unwrap();
        for (idx2, h) in basis.iter().enumerate() {
            if idx == idx2 {
                continue;
            }
            let (hm, _) = h.leading(order).unwrap();
            if hm.divides(gm) && (hm != gm || idx2 < idx) {
                continue 'next;
            }
        }
        keep.push(g.clone());
    }
    // inter-reduce tails
    let mut reduced = keep.clone();
    loop {
        let mut changed = false;
        for i in 0..reduced.len() {
            let others: Vec<Polynomial> = reduced
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, p)| p.clone())
                .collect();
            let nf = reduce(&reduced[i], &others, order, budget)?.monic(order);
            if nf != reduced[i] {
                reduced[i] = nf;
                changed = true;
            }
        }
        reduced.retain(|p| !p.is_zero());
        if !changed {
            break;
        }
    }
    reduced.sort_by(|a, b| b.cmp_canonical(a, order));
    Ok(reduced)
}

/// Reduced Gröbner basis of an ideal.
pub fn groebner(ideal: &Ideal, budget: &mut Budget) -> Result<GroebnerBasis, BudgetExhausted> {
    let polys = buchberger(&ideal.generators, ideal.order, budget)?;
    Ok(GroebnerBasis {
        polys,
        order: ideal.order,
    })
}

/// Emptiness certificate: the (complete) basis contains a nonzero constant,
/// so the variety over the algebraic closure is empty.
pub fn contains_one(gb: &GroebnerBasis) -> bool {
    gb.polys
        .iter()
        .any(|p| p.constant_value().is_some_and(|c| !c.is_zero()))
}

/// Two ideals over the same variable set are equal iff each generator of one
/// reduces to zero modulo the Gröbner basis of the other.
pub fn ideal_equal(a: &Ideal, b: &Ideal, budget: &mut Budget) -> Result<bool, BudgetExhausted> {
    let gb_a = groebner(a, budget)?;
    let gb_b = groebner(b, budget)?;
    for g in &a.generators {
        if !gb_b.reduce(g, budget)?.is_zero() {
            return Ok(false);
        }
    }
    for g in &b.generators {
        if !gb_a.reduce(g, budget)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;

    fn ring_xy() -> PolyRing {
        PolyRing::new(vec!["x".into(), "y".into()])
    }

    fn gb_of(ring: &PolyRing, gens: &[&str], order: Order) -> GroebnerBasis {
        let ideal = Ideal::new(
            gens.iter().map(|s| ring.parse(s).unwrap()).collect(),
            order,
        );
        groebner(&ideal, &mut Budget::new(200_000)).unwrap()
    }

    #[test]
    fn containment_collapses() {
        let r = ring_xy();
        let gb = gb_of(&r, &["x^2 - 1", "x - 1"], Order::Lex);
        assert_eq!(gb.polys.len(), 1);
        assert_eq!(r.poly_to_string(&gb.polys[0]), "x - 1");
    }

    #[test]
    fn inconsistent_ideal_gives_one() {
        let r = ring_xy();
        let gb = gb_of(&r, &["x*y - 1", "x"], Order::Lex);
        assert_eq!(gb.polys.len(), 1);
        assert!(contains_one(&gb));
    }

    #[test]
    fn variety_over_c_nonempty_for_x_squared_plus_one() {
        let r = PolyRing::new(vec!["x".into()]);
        let gb = gb_of(&r, &["x^2 + 1"], Order::Lex);
        assert!(!contains_one(&gb));
        let gb2 = gb_of(&r, &["x"], Order::Lex);
        assert!(!contains_one(&gb2));
    }

    // Manual Buchberger trace for {x^2 + x*y, y^2} under lex:
    // the single S-pair y^2*(x^2 + x*y) - x^2*y^2 = x*y^3 reduces to zero by
    // y^2, and neither tail is reducible, so the set is already its own
    // reduced basis.
    #[test]
    fn hand_traced_basis_is_fixed_point() {
        let r = ring_xy();
        let gb = gb_of(&r, &["x^2 + x*y", "y^2"], Order::Lex);
        let strings: Vec<String> = gb.polys.iter().map(|p| r.poly_to_string(p)).collect();
        assert_eq!(strings, vec!["x^2 + x*y", "y^2"]);
    }

    #[test]
    fn ideal_equality_examples() {
        let r = ring_xy();
        let mut budget = Budget::new(200_000);
        let i1 = Ideal::new(vec![r.parse("x").unwrap()], Order::Lex);
        let i2 = Ideal::new(vec![r.parse("2*x").unwrap()], Order::Lex);
        assert!(ideal_equal(&i1, &i2, &mut budget).unwrap());
        let i3 = Ideal::new(vec![r.parse("x").unwrap(), r.parse("y").unwrap()], Order::Lex);
        assert!(!ideal_equal(&i1, &i3, &mut budget).unwrap());
        // product vs intersection: reducing x - 1 by {x^2 - 1} leaves x - 1
        let i4 = Ideal::new(vec![r.parse("x^2 - 1").unwrap()], Order::Lex);
        let i5 = Ideal::new(
            vec![r.parse("x - 1").unwrap(), r.parse("x + 1").unwrap()],
            Order::Lex,
        );
        assert!(!ideal_equal(&i4, &i5, &mut budget).unwrap());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let r = ring_xy();
        let ideal = Ideal::new(
            vec![r.parse("x^2*y - 1").unwrap(), r.parse("x*y^2 - x").unwrap()],
            Order::Lex,
        );
        let mut tiny = Budget::new(1);
        assert!(groebner(&ideal, &mut tiny).is_err());
        // the same computation finishes under a real budget
        let mut ok = Budget::new(200_000);
        assert!(groebner(&ideal, &mut ok).is_ok());
        assert!(ok.consumed() > 1);
    }

    #[test]
    fn input_generators_reduce_to_zero() {
        let r = ring_xy();
        let gens = ["x^2 + y^2 - 1", "x*y - 1", "x^3 - y"];
        let gb = gb_of(&r, &gens, Order::GrevLex);
        let mut budget = Budget::new(200_000);
        for g in gens {
            let nf = gb.reduce(&r.parse(g).unwrap(), &mut budget).unwrap();
            assert!(nf.is_zero());
        }
    }

    #[test]
    fn deterministic_for_fixed_input() {
        let r = ring_xy();
        let gens = ["x^2*y - 1", "x*y^2 - x"];
        let a = gb_of(&r, &gens, Order::Lex);
        let b = gb_of(&r, &gens, Order::Lex);
        assert_eq!(a.polys, b.polys);
    }
}
