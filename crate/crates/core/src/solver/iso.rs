//! Isomorphism decisions for commutative structures via parametrized
//! automorphism groups.
//!
//! Two structures on the same algebra are isomorphic when some Lie
//! automorphism intertwines the products. With the automorphism group given
//! as a matrix with polynomial entries, the decision becomes feasibility of
//! a polynomial system: infeasibility is certified by a Gröbner basis
//! containing 1 (after saturating the invertibility constraint), and
//! feasibility produces a rational witness map that is then verified.

use super::{sample_component, SolveOptions};
use crate::error::{BudgetExhausted, Error};
use crate::exact::{rat, Matrix, Rat};
use crate::liealg::{catalog, LieAlgebra};
use crate::poly::{
    buchberger, case_split, Budget, Ideal, Order, PolyRing, Polynomial,
};
use crate::postlie::{invariants, verify_commutative, BilinearProduct, Fingerprint};
use num_traits::Zero;

/// A parametrized subgroup description of `Aut(g)`: a matrix with
/// polynomial entries plus one invertibility constraint assumed nonzero.
#[derive(Debug, Clone)]
pub struct AutGroupParam {
    pub dim: usize,
    pub ring: PolyRing,
    /// Row-major `dim × dim` entries over the parameter ring.
    pub matrix: Vec<Polynomial>,
    /// The sampled matrix is invertible iff this does not vanish.
    pub invertibility: Polynomial,
}

impl AutGroupParam {
    pub fn entry(&self, r: usize, c: usize) -> &Polynomial {
        &self.matrix[r * self.dim + c]
    }

    pub fn matrix_at(&self, point: &[Rat]) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |r, c| self.entry(r, c).eval(point))
    }

    /// Spot-check on deterministic parameter points: every sampled member
    /// with nonvanishing constraint is a Lie automorphism.
    pub fn validate(&self, g: &LieAlgebra) -> bool {
        let k = self.ring.nvars();
        let points: Vec<Vec<Rat>> = (0..5)
            .map(|t| {
                (0..k)
                    .map(|i| rat([1, 2, -1, 3, 1][(t + i) % 5]))
                    .collect()
            })
            .collect();
        for point in points {
            if self.invertibility.eval(&point).is_zero() {
                continue;
            }
            let m = self.matrix_at(&point);
            if m.inverse().is_none() || !is_lie_automorphism(g, &m) {
                return false;
            }
        }
        true
    }
}

pub fn is_lie_automorphism(g: &LieAlgebra, m: &Matrix) -> bool {
    if m.inverse().is_none() {
        return false;
    }
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let lhs = m.mul_vec(&g.bracket_basis(i, j));
            let rhs = g.bracket(&m.col(i), &m.col(j));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// The automorphism-group parametrizations shipped with the catalog,
/// keyed by structure constants.
pub fn catalog_aut(g: &LieAlgebra) -> Option<AutGroupParam> {
    if g == &catalog::r2() {
        let ring = PolyRing::new(vec!["t".into(), "s".into()]);
        let t = ring.var("t");
        let s = ring.var("s");
        let zero = Polynomial::zero(2);
        let one = Polynomial::one(2);
        return Some(AutGroupParam {
            dim: 2,
            ring,
            matrix: vec![t.clone(), s, zero, one],
            invertibility: t,
        });
    }
    if g == &catalog::r3_jordan() {
        let ring = PolyRing::new(vec!["p2".into(), "p3".into(), "p5".into(), "p8".into()]);
        let (p2, p3, p5, p8) = (
            ring.var("p2"),
            ring.var("p3"),
            ring.var("p5"),
            ring.var("p8"),
        );
        let zero = Polynomial::zero(4);
        let one = Polynomial::one(4);
        return Some(AutGroupParam {
            dim: 3,
            ring,
            matrix: vec![
                one,
                zero.clone(),
                zero.clone(),
                p2,
                p5.clone(),
                p8,
                p3,
                zero,
                p5.clone(),
            ],
            invertibility: p5,
        });
    }
    if g == &catalog::heisenberg() {
        let names: Vec<String> = (1..=6).map(|i| format!("p{i}")).collect();
        let ring = PolyRing::new(names);
        let p = |i: usize| Polynomial::var(i - 1, 6);
        let det = p(1).mul(&p(5)).sub(&p(2).mul(&p(4)));
        let zero = Polynomial::zero(6);
        return Some(AutGroupParam {
            dim: 3,
            ring,
            matrix: vec![
                p(1),
                p(4),
                zero.clone(),
                p(2),
                p(5),
                zero.clone(),
                p(3),
                p(6),
                det.clone(),
            ],
            invertibility: det,
        });
    }
    None
}

/// A product whose coefficients are polynomials in one parameter.
#[derive(Debug, Clone)]
pub struct ParamProduct {
    pub dim: usize,
    pub ring: PolyRing,
    /// Flattened `[i][j][k]` coefficients over the one-variable ring.
    pub coeffs: Vec<Polynomial>,
}

impl ParamProduct {
    pub fn at(&self, value: &Rat) -> BilinearProduct {
        let n = self.dim;
        let entries: Vec<((usize, usize, usize), Rat)> = (0..n * n * n)
            .filter_map(|idx| {
                let v = self.coeffs[idx].eval(std::slice::from_ref(value));
                if v.is_zero() {
                    None
                } else {
                    Some(((idx / (n * n), (idx / n) % n, idx % n), v))
                }
            })
            .collect();
        BilinearProduct::from_entries(n, &entries)
    }
}

/// Outcome of an isomorphism query.
#[derive(Debug)]
pub enum IsoOutcome {
    Yes(Matrix),
    No(NoEvidence),
    Inconclusive,
}

#[derive(Debug)]
pub enum NoEvidence {
    /// The invariant fingerprints differ.
    FingerprintMismatch(Box<(Fingerprint, Fingerprint)>),
    /// The saturated compatibility ideal contains 1.
    Certificate {
        basis: Vec<Polynomial>,
        ring: PolyRing,
    },
}

impl IsoOutcome {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoOutcome::Yes(_))
    }
    pub fn is_no(&self) -> bool {
        matches!(self, IsoOutcome::No(_))
    }
}

/// Compatibility equations `φ(p(e_i, e_j)) = q(φ e_i, φ e_j)` over the
/// given ring, with `φ` entries given by `entry`.
fn compat_equations(
    dim: usize,
    nv: usize,
    entry: &dyn Fn(usize, usize) -> Polynomial,
    p: &BilinearProduct,
    q_coeff: &dyn Fn(usize, usize, usize) -> Polynomial,
) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in i..dim {
            let pij = p.apply_basis(i, j);
            for k in 0..dim {
                let mut eq = Polynomial::zero(nv);
                for (m, c) in pij.iter().enumerate() {
                    if !c.is_zero() {
                        eq = eq.add(&entry(k, m).scale(c));
                    }
                }
                for a in 0..dim {
                    for b in 0..dim {
                        let qc = q_coeff(a, b, k);
                        if !qc.is_zero() {
                            eq = eq.sub(&entry(a, i).mul(&entry(b, j)).mul(&qc));
                        }
                    }
                }
                if !eq.is_zero() {
                    out.push(eq);
                }
            }
        }
    }
    out
}

fn find_witness(
    gens: &[Polynomial],
    inv: &Polynomial,
    ring: &PolyRing,
    opts: &SolveOptions,
    budget: &mut Budget,
) -> Result<Option<Vec<Rat>>, BudgetExhausted> {
    let nv = ring.nvars();
    let sat = crate::poly::saturate(gens, std::slice::from_ref(inv), nv, budget)?;
    let gb = buchberger(&sat, Order::Lex, budget)?;
    if gb
        .iter()
        .any(|p| p.constant_value().is_some_and(|c| !c.is_zero()))
    {
        return Ok(None);
    }
    let components = case_split(&Ideal::new(gb, Order::Lex), opts.depth, budget)?;
    for comp in &components {
        let free = comp.free_vars(nv);
        let mut nz = comp.nonvanishing.clone();
        nz.push(comp.apply(inv));
        for t in 0..8 {
            if let Some(assignment) = sample_component(ring, &free, &comp.residual, &nz, t) {
                let mut point = vec![Rat::zero(); nv];
                for (&v, val) in &assignment {
                    point[v] = val.clone();
                }
                for (&v, e) in &comp.substitutions {
                    point[v] = e.eval(&point);
                }
                if gens.iter().all(|g| g.eval(&point).is_zero())
                    && !inv.eval(&point).is_zero()
                {
                    return Ok(Some(point));
                }
            }
        }
    }
    Ok(None)
}

/// Decide whether two verified commutative structures on `g` are isomorphic
/// under the parametrized automorphism group.
pub fn isomorphic(
    g: &LieAlgebra,
    p: &BilinearProduct,
    q: &BilinearProduct,
    aut: &AutGroupParam,
    opts: &SolveOptions,
) -> Result<IsoOutcome, Error> {
    if !verify_commutative(g, p)?.pass || !verify_commutative(g, q)?.pass {
        return Err(Error::InvalidParameter(
            "isomorphism queries need verified structures".to_string(),
        ));
    }
    let fp = invariants(g, p);
    let fq = invariants(g, q);
    if fp != fq {
        return Ok(IsoOutcome::No(NoEvidence::FingerprintMismatch(Box::new((
            fp, fq,
        )))));
    }
    let mut budget = Budget::new(opts.budget);
    let nv = aut.ring.nvars();
    let entry = |r: usize, c: usize| aut.entry(r, c).clone();
    let q_coeff = |a: usize, b: usize, k: usize| {
        Polynomial::constant(nv, q.coeff(a, b, k).clone())
    };
    let gens = compat_equations(g.dim(), nv, &entry, p, &q_coeff);
    match solve_iso_system(g, p, q, aut, &gens, opts, &mut budget) {
        Ok(out) => Ok(out),
        Err(BudgetExhausted) => Ok(IsoOutcome::Inconclusive),
    }
}

fn solve_iso_system(
    g: &LieAlgebra,
    p: &BilinearProduct,
    q: &BilinearProduct,
    aut: &AutGroupParam,
    gens: &[Polynomial],
    opts: &SolveOptions,
    budget: &mut Budget,
) -> Result<IsoOutcome, BudgetExhausted> {
    match find_witness(gens, &aut.invertibility, &aut.ring, opts, budget)? {
        Some(point) => {
            let phi = aut.matrix_at(&point);
            debug_assert!(witness_checks(g, p, q, &phi));
            if witness_checks(g, p, q, &phi) {
                Ok(IsoOutcome::Yes(phi))
            } else {
                Ok(IsoOutcome::Inconclusive)
            }
        }
        None => {
            // recompute the saturated basis for the certificate
            let nv = aut.ring.nvars();
            let sat = crate::poly::saturate(
                gens,
                std::slice::from_ref(&aut.invertibility),
                nv,
                budget,
            )?;
            let gb = buchberger(&sat, Order::Lex, budget)?;
            if gb
                .iter()
                .any(|p| p.constant_value().is_some_and(|c| !c.is_zero()))
            {
                Ok(IsoOutcome::No(NoEvidence::Certificate {
                    basis: gb,
                    ring: aut.ring.clone(),
                }))
            } else {
                // solutions exist over the closure but none was sampled
                Ok(IsoOutcome::Inconclusive)
            }
        }
    }
}

/// `φ` maps the structure `p` to `q`: automorphism plus product
/// compatibility.
pub fn witness_checks(
    g: &LieAlgebra,
    p: &BilinearProduct,
    q: &BilinearProduct,
    phi: &Matrix,
) -> bool {
    if !is_lie_automorphism(g, phi) {
        return false;
    }
    for i in 0..g.dim() {
        for j in i..g.dim() {
            let lhs = phi.mul_vec(&p.apply_basis(i, j));
            let rhs = q.apply(&phi.col(i), &phi.col(j));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Result of matching a concrete structure against a one-parameter family.
#[derive(Debug)]
pub enum FamilyMatch {
    Yes { phi: Matrix, parameter: Rat },
    No(NoEvidence),
    Inconclusive,
}

/// Decide whether `p` is isomorphic to some member `q(μ)` of a
/// one-parameter family, solving for the automorphism and `μ` together.
pub fn match_to_family(
    g: &LieAlgebra,
    p: &BilinearProduct,
    family: &ParamProduct,
    aut: &AutGroupParam,
    opts: &SolveOptions,
) -> Result<FamilyMatch, Error> {
    if !verify_commutative(g, p)?.pass {
        return Err(Error::InvalidParameter(
            "family matching needs a verified structure".to_string(),
        ));
    }
    let mut budget = Budget::new(opts.budget);
    let k = aut.ring.nvars();
    let nv = k + 1; // family parameter appended last
    let mut names = aut.ring.vars().to_vec();
    names.push("mu".to_string());
    let ring = PolyRing::new(names);
    let entry = |r: usize, c: usize| aut.entry(r, c).extend_vars(1);
    let mu_image: Vec<Polynomial> = vec![Polynomial::var(k, nv)];
    let q_coeff = |a: usize, b: usize, kk: usize| {
        family.coeffs[(a * family.dim + b) * family.dim + kk].compose(&mu_image, nv)
    };
    let gens = compat_equations(g.dim(), nv, &entry, p, &q_coeff);
    let inv = aut.invertibility.extend_vars(1);
    let result = (|| -> Result<FamilyMatch, BudgetExhausted> {
        match find_witness(&gens, &inv, &ring, opts, &mut budget)? {
            Some(point) => {
                let aut_point = &point[..k];
                let phi = aut.matrix_at(aut_point);
                let mu = point[k].clone();
                let q = family.at(&mu);
                if witness_checks(g, p, &q, &phi) {
                    Ok(FamilyMatch::Yes {
                        phi,
                        parameter: mu,
                    })
                } else {
                    Ok(FamilyMatch::Inconclusive)
                }
            }
            None => {
                let sat = crate::poly::saturate(
                    &gens,
                    std::slice::from_ref(&inv),
                    nv,
                    &mut budget,
                )?;
                let gb = buchberger(&sat, Order::Lex, &mut budget)?;
                if gb
                    .iter()
                    .any(|p| p.constant_value().is_some_and(|c| !c.is_zero()))
                {
                    Ok(FamilyMatch::No(NoEvidence::Certificate { basis: gb, ring }))
                } else {
                    Ok(FamilyMatch::Inconclusive)
                }
            }
        }
    })();
    Ok(result.unwrap_or(FamilyMatch::Inconclusive))
}
