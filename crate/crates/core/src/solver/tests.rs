use super::*;
use crate::exact::{rat, ratio};
use crate::liealg::catalog;

fn opts() -> SolveOptions {
    SolveOptions::default()
}

fn neg_bracket(g: &LieAlgebra) -> LieAlgebra {
    LieAlgebra::from_constants(
        g.dim(),
        g.basis_names().to_vec(),
        g.constants().iter().map(|c| -c.clone()).collect(),
    )
    .unwrap()
}

#[test]
fn commutative_on_sl2_is_exactly_the_zero_product() {
    let sys = setup_commutative(&catalog::sl2());
    match solve(&sys, &opts()) {
        SolveOutcome::Witness { values, solution } => {
            assert!(values.iter().all(Rat::is_zero));
            assert_eq!(solution.product, BilinearProduct::zero(3));
        }
        other => panic!("expected the unique zero point, got {}", other.status()),
    }
}

#[test]
fn commutative_on_r2_covers_three_orbits() {
    let r2 = catalog::r2();
    let sys = setup_commutative(&r2);
    let SolveOutcome::Families(families) = solve(&sys, &opts()) else {
        panic!("expected families");
    };
    assert_eq!(families.len(), 2);
    for family in &families {
        assert_eq!(family.status, crate::poly::ComponentStatus::Solved);
        assert!(!family.samples.is_empty());
        for sample in &family.samples {
            let product = sys.build_solution(sample).unwrap().product;
            assert!(verify_commutative(&r2, &product).unwrap().pass);
        }
    }
    // the two components are e1·e2 = 0 and e1·e2 = −e1 (c = 0 and c = −1)
    let c_index = sys.unknown_index(0, 1, 0);
    let values: Vec<Rat> = families
        .iter()
        .map(|f| {
            f.exprs[c_index]
                .constant_value()
                .cloned()
                .unwrap_or_else(Rat::zero)
        })
        .collect();
    assert!(values.contains(&rat(0)));
    assert!(values.contains(&rat(-1)));
}

#[test]
fn reduced_system_on_r2_shape() {
    // after reduction: unknowns e1·e1 = a e1, e1·e2 = c e1, e2·e2 = f e1
    // with a = 0 folded in and the single constraint c² + c
    let r2 = catalog::r2();
    let sys = setup_commutative(&r2);
    let mut budget = Budget::new(200_000);
    let ReductionOutcome::Reduced(red) = reduce_system(&sys, &opts(), &mut budget).unwrap()
    else {
        panic!("nonempty");
    };
    let a = sys.unknown_index(0, 0, 0);
    let c = sys.unknown_index(0, 1, 0);
    let f = sys.unknown_index(1, 1, 0);
    assert!(red.exprs[a].is_zero());
    assert!(red.free.contains(&c));
    assert!(red.free.contains(&f));
    assert_eq!(red.residual.len(), 1);
    let expect = Polynomial::var(c, sys.ring.nvars())
        .mul(&Polynomial::var(c, sys.ring.nvars()))
        .add(&Polynomial::var(c, sys.ring.nvars()));
    assert_eq!(red.residual[0], expect);
    // all products lie on the e1 line: every e2/…-coordinate expression is 0
    for (u, &(_, _, k)) in sys.product_unknowns.iter().enumerate() {
        if k == 1 {
            assert!(red.exprs[u].is_zero());
        }
    }
}

#[test]
fn phi_on_identical_sl2_pair_gives_zero() {
    let sl2 = catalog::sl2();
    let pair = PairOnSameSpace::new(sl2.clone(), sl2).unwrap();
    let sys = setup_phi(&pair).unwrap();
    match solve(&sys, &opts()) {
        SolveOutcome::Witness { values, solution } => {
            assert!(values.iter().all(Rat::is_zero));
            assert_eq!(solution.product, BilinearProduct::zero(3));
        }
        other => panic!("expected unique zero phi, got {}", other.status()),
    }
}

#[test]
fn phi_on_negated_sl2_pair_gives_minus_identity() {
    let sl2 = catalog::sl2();
    let pair = PairOnSameSpace::new(sl2.clone(), neg_bracket(&sl2)).unwrap();
    let sys = setup_phi(&pair).unwrap();
    match solve(&sys, &opts()) {
        SolveOutcome::Witness { solution, .. } => {
            let phi = solution.phi.unwrap();
            assert_eq!(phi, Matrix::identity(3).neg());
            // the product is x·y = [x,y]
            for i in 0..3 {
                for j in 0..3 {
                    assert_eq!(
                        solution.product.apply_basis(i, j),
                        pair.g.bracket_basis(i, j)
                    );
                }
            }
        }
        other => panic!("expected the second structure, got {}", other.status()),
    }
}

#[test]
fn general_system_matches_phi_route_on_sl2_pairs() {
    let sl2 = catalog::sl2();
    for n in [sl2.clone(), neg_bracket(&sl2)] {
        let pair = PairOnSameSpace::new(sl2.clone(), n).unwrap();
        let sys = setup_general(&pair);
        match solve(&sys, &opts()) {
            SolveOutcome::Witness { solution, .. } => {
                let report = crate::postlie::verify_pair(&pair, &solution.product).unwrap();
                assert!(report.pass);
            }
            other => panic!("expected a unique point, got {}", other.status()),
        }
    }
}

#[test]
fn no_structure_on_heisenberg_sl2_pair() {
    let pair = PairOnSameSpace::new(catalog::heisenberg(), catalog::sl2()).unwrap();
    let sys = setup_phi(&pair).unwrap();
    match solve(&sys, &opts()) {
        SolveOutcome::Empty { certificate, .. } => {
            let mut budget = Budget::new(200_000);
            assert!(verify_certificate(&sys, &certificate, Order::Lex, &mut budget).unwrap());
        }
        other => panic!("expected empty, got {}", other.status()),
    }
}

#[test]
fn no_structure_on_abelian_sl2_pair() {
    let pair = PairOnSameSpace::new(catalog::abelian(3), catalog::sl2()).unwrap();
    let sys = setup_phi(&pair).unwrap();
    match solve(&sys, &opts()) {
        SolveOutcome::Empty { certificate, .. } => {
            let mut budget = Budget::new(200_000);
            assert!(verify_certificate(&sys, &certificate, Order::Lex, &mut budget).unwrap());
        }
        other => panic!("expected empty, got {}", other.status()),
    }
}

#[test]
fn witness_on_r3_diag_sl2_pair() {
    let g = catalog::r3_diag(&rat(1)).unwrap();
    let pair = PairOnSameSpace::new(g, catalog::sl2()).unwrap();
    let sys = setup_phi(&pair).unwrap();
    match solve(&sys, &opts()) {
        SolveOutcome::Witness { solution, .. } => {
            let phi = solution.phi.clone().unwrap();
            // the unique solution: φ = diag(-1/2, 0, -1)
            let mut expected = Matrix::zeros(3, 3);
            expected.set(0, 0, ratio(-1, 2));
            expected.set(2, 2, rat(-1));
            assert_eq!(phi, expected);
            assert!(sys.verify_solution(&solution).unwrap());
            assert!(crate::postlie::verify_pair(&pair, &solution.product)
                .unwrap()
                .pass);
        }
        other => panic!("expected witness, got {}", other.status()),
    }
}

#[test]
fn commutative_on_abelian_plane_is_associative_family() {
    let g = catalog::abelian(2);
    let sys = setup_commutative(&g);
    let SolveOutcome::Families(families) = solve(&sys, &opts()) else {
        panic!("expected families");
    };
    assert!(!families.is_empty());
    let mut verified_samples = 0;
    for family in &families {
        for sample in &family.samples {
            let product = sys.build_solution(sample).unwrap().product;
            assert!(verify_commutative(&g, &product).unwrap().pass);
            // commutative plus the representation law on an abelian algebra
            // means associativity
            for i in 0..2 {
                for j in 0..2 {
                    for k in 0..2 {
                        let ej_ek = product.apply_basis(j, k);
                        let ei = [rat(if i == 0 { 1 } else { 0 }), rat(if i == 1 { 1 } else { 0 })];
                        let lhs = product.apply(&ei, &ej_ek);
                        let ei_ej = product.apply_basis(i, j);
                        let ek = [rat(if k == 0 { 1 } else { 0 }), rat(if k == 1 { 1 } else { 0 })];
                        let rhs = product.apply(&ei_ej, &ek);
                        assert_eq!(lhs, rhs);
                    }
                }
            }
            verified_samples += 1;
        }
    }
    assert!(verified_samples >= 5);
}

#[test]
fn heisenberg_reduction_hits_the_seven_parameter_form() {
    let h = catalog::heisenberg();
    let sys = setup_commutative(&h);
    let mut budget = Budget::new(200_000);
    let ReductionOutcome::Reduced(red) = reduce_system(&sys, &opts(), &mut budget).unwrap()
    else {
        panic!("nonempty");
    };
    // seven free parameters; the reduction solves the diagonal entries of
    // the left operators, leaving (β, γ, −α, ε, κ, −δ, λ)
    let expected_free: Vec<usize> = [
        (0, 0, 1),
        (0, 0, 2),
        (0, 1, 1),
        (0, 1, 2),
        (1, 1, 0),
        (1, 1, 1),
        (1, 1, 2),
    ]
    .iter()
    .map(|&(i, j, k)| sys.unknown_index(i, j, k))
    .collect();
    let mut sorted = expected_free.clone();
    sorted.sort_unstable();
    assert_eq!(red.free, sorted);
    // forced trace relations: s1_1_1 = −s1_2_2 and s1_2_1 = −s2_2_2
    let nv = sys.ring.nvars();
    let s122 = Polynomial::var(sys.unknown_index(0, 1, 1), nv);
    let s222 = Polynomial::var(sys.unknown_index(1, 1, 1), nv);
    assert_eq!(red.exprs[sys.unknown_index(0, 0, 0)], s122.neg());
    assert_eq!(red.exprs[sys.unknown_index(0, 1, 0)], s222.neg());
    // products with e3 all vanish
    for j in 0..3 {
        for k in 0..3 {
            assert!(red.exprs[sys.unknown_index(2, j, k)].is_zero());
        }
    }
    // the residual is ideal-equal to the five displayed conditions,
    // rewritten through the identification α = s1_1_1, β = s1_1_2,
    // γ = s1_1_3, δ = s1_2_1, ε = s1_2_3, κ = s2_2_1, λ = s2_2_3
    let v = |i: usize, j: usize, k: usize| Polynomial::var(sys.unknown_index(i, j, k), nv);
    let (alpha, beta, gamma) = (v(0, 0, 0), v(0, 0, 1), v(0, 0, 2));
    let (delta, eps) = (v(0, 1, 0), v(0, 1, 2));
    let (kappa, lambda) = (v(1, 1, 0), v(1, 1, 2));
    let two = |p: Polynomial| p.scale(&rat(2));
    let paper = vec![
        alpha.mul(&delta).add(&beta.mul(&kappa)),
        alpha.mul(&kappa).sub(&delta.mul(&delta)),
        alpha.mul(&alpha).add(&beta.mul(&delta)),
        gamma
            .mul(&delta)
            .sub(&two(alpha.mul(&eps)))
            .sub(&beta.mul(&lambda)),
        alpha
            .mul(&lambda)
            .add(&gamma.mul(&kappa))
            .sub(&two(delta.mul(&eps))),
    ];
    let paper_reduced: Vec<Polynomial> = paper.iter().map(|p| red.rewrite(p)).collect();
    let ia = crate::poly::Ideal::new(red.residual.clone(), Order::Lex);
    let ib = crate::poly::Ideal::new(paper_reduced, Order::Lex);
    assert!(crate::poly::ideal_equal(&ia, &ib, &mut budget).unwrap());
}

#[test]
fn heisenberg_families_are_symbolically_nilpotent() {
    let h = catalog::heisenberg();
    let sys = setup_commutative(&h);
    let SolveOutcome::Families(families) = solve(&sys, &opts()) else {
        panic!("expected families");
    };
    let mut budget = Budget::new(400_000);
    for family in &families {
        let verdict = family_all_left_nilpotent(&h, &sys, family, &mut budget).unwrap();
        match verdict {
            Some(nilpotent) => assert!(nilpotent),
            None => {
                // nonlinear family: all samples must still be nilpotent
                for sample in &family.samples {
                    let product = sys.build_solution(sample).unwrap().product;
                    assert!(crate::postlie::all_left_nilpotent(&product).nilpotent);
                }
            }
        }
    }
}

#[test]
fn solve_is_deterministic() {
    let sys = setup_commutative(&catalog::heisenberg());
    let (a, b) = (solve(&sys, &opts()), solve(&sys, &opts()));
    let (SolveOutcome::Families(fa), SolveOutcome::Families(fb)) = (a, b) else {
        panic!("expected families twice");
    };
    assert_eq!(fa.len(), fb.len());
    for (x, y) in fa.iter().zip(&fb) {
        assert_eq!(x.params, y.params);
        assert_eq!(x.exprs, y.exprs);
        assert_eq!(x.residual, y.residual);
        assert_eq!(x.samples, y.samples);
    }
}

#[test]
fn tiny_budget_is_inconclusive_not_wrong() {
    let sys = setup_commutative(&catalog::heisenberg());
    let tight = SolveOptions {
        budget: 10,
        ..opts()
    };
    match solve(&sys, &tight) {
        SolveOutcome::Inconclusive { consumed } => assert!(consumed <= 10),
        other => panic!("expected inconclusive, got {}", other.status()),
    }
}

#[test]
fn completeness_families_cover_the_full_variety() {
    // the intersection of the component closure ideals equals the reduced
    // system's residual ideal
    for g in [
        catalog::r2(),
        catalog::r3_jordan(),
        catalog::heisenberg(),
        catalog::sl2(),
    ] {
        let sys = setup_commutative(&g);
        let mut budget = Budget::new(1_000_000);
        let ReductionOutcome::Reduced(red) =
            reduce_system(&sys, &opts(), &mut budget).unwrap()
        else {
            panic!("commutative systems are never empty");
        };
        let outcome = solve(&sys, &opts());
        let families = match outcome {
            SolveOutcome::Families(f) => f,
            SolveOutcome::Witness { .. } => {
                assert!(red.residual.is_empty());
                continue;
            }
            other => panic!("unexpected outcome {}", other.status()),
        };
        let nv = sys.ring.nvars();
        let mut intersection: Option<Vec<Polynomial>> = None;
        for family in &families {
            // closure ideal of the family relative to the reduced
            // parametrization: bound parameters plus residual constraints
            let mut gens: Vec<Polynomial> = red
                .free
                .iter()
                .filter(|f| !family.params.contains(f))
                .map(|&f| {
                    // the family fixed this parameter: recover its value from
                    // the expression of the corresponding unknown
                    Polynomial::var(f, nv).sub(&family.exprs[f])
                })
                .collect();
            gens.extend(family.residual.iter().cloned());
            gens.retain(|p| !p.is_zero());
            if gens.is_empty() {
                // the family covers the whole reduced variety
                intersection = Some(Vec::new());
                break;
            }
            intersection = Some(match intersection {
                None => crate::poly::buchberger(&gens, Order::Lex, &mut budget).unwrap(),
                Some(acc) => {
                    crate::poly::ideal_intersection(&acc, &gens, nv, &mut budget).unwrap()
                }
            });
        }
        let intersection = intersection.expect("at least one family");
        let lhs = crate::poly::Ideal::new(red.residual.clone(), Order::Lex);
        let rhs = crate::poly::Ideal::new(intersection, Order::Lex);
        if lhs.generators.is_empty() && rhs.generators.is_empty() {
            continue;
        }
        assert!(
            crate::poly::ideal_equal(&lhs, &rhs, &mut budget).unwrap(),
            "family union differs from the variety on {:?}",
            g.basis_names()
        );
    }
}

#[test]
fn image_in_radical_on_solver_output() {
    // every commutative solution family member lands in the radical
    let r2 = catalog::r2();
    let sys = setup_commutative(&r2);
    let SolveOutcome::Families(families) = solve(&sys, &opts()) else {
        panic!("expected families");
    };
    for family in &families {
        for sample in &family.samples {
            let product = sys.build_solution(sample).unwrap().product;
            assert!(crate::postlie::image_in_radical(&r2, &product));
        }
    }
}
