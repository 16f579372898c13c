//! Candidate post-Lie products: axiom verification with exact residuals,
//! left-multiplication analysis, φ-form structures, symbolic nilpotency and
//! isomorphism-invariant fingerprints.

use crate::error::Error;
use crate::exact::{vec_is_zero, vec_zero, Matrix, Rat, Subspace};
use crate::liealg::{is_derivation_of, LieAlgebra, PairOnSameSpace};
use crate::poly::Polynomial;
use num_traits::Zero;

/// A bilinear product `x·y = Σ_k a[i][j][k] e_k` on a space of fixed
/// dimension. No axioms are assumed; verification reports violations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearProduct {
    dim: usize,
    a: Vec<Rat>, // flattened [i][j][k]
}

impl BilinearProduct {
    pub fn zero(dim: usize) -> Self {
        BilinearProduct {
            dim,
            a: vec![Rat::zero(); dim * dim * dim],
        }
    }

    pub fn from_entries(dim: usize, entries: &[((usize, usize, usize), Rat)]) -> Self {
        let mut p = BilinearProduct::zero(dim);
        for ((i, j, k), v) in entries {
            p.a[(i * dim + j) * dim + k] = v.clone();
        }
        p
    }

    /// Build from left-multiplication matrices: `L_i[k][j] = a[i][j][k]`.
    pub fn from_left_ops(ops: &[Matrix]) -> Self {
        let dim = ops.len();
        let mut p = BilinearProduct::zero(dim);
        for (i, l) in ops.iter().enumerate() {
            assert_eq!(l.rows(), dim);
            assert_eq!(l.cols(), dim);
            for j in 0..dim {
                for k in 0..dim {
                    p.a[(i * dim + j) * dim + k] = l.get(k, j).clone();
                }
            }
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.a[(i * self.dim + j) * self.dim + k]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.a
    }

    /// `e_i · e_j` as a coordinate vector.
    pub fn apply_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        (0..self.dim)
            .map(|k| self.coeff(i, j, k).clone())
            .collect()
    }

    pub fn apply(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = vec_zero(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for k in 0..self.dim {
                    let a = self.coeff(i, j, k);
                    if !a.is_zero() {
                        out[k] += &c * a;
                    }
                }
            }
        }
        out
    }

    /// Left multiplication by `e_i`.
    pub fn left_op(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.coeff(i, j, k).clone())
    }

    /// Left multiplication by an arbitrary vector.
    pub fn left_op_vec(&self, x: &[Rat]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                m = m.add(&self.left_op(i).scale(xi));
            }
        }
        m
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if self.apply_basis(i, j) != self.apply_basis(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Span of all products `e_i · e_j`.
    pub fn product_span(&self) -> Subspace {
        let mut vectors = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                vectors.push(self.apply_basis(i, j));
            }
        }
        Subspace::from_spanning(self.dim, vectors)
    }

    /// Two-sided annihilator `{x : x·V = V·x = 0}`.
    pub fn annihilator(&self) -> Subspace {
        let mut rows = Vec::new();
        for j in 0..self.dim {
            for k in 0..self.dim {
                rows.push(
                    (0..self.dim)
                        .map(|i| self.coeff(i, j, k).clone())
                        .collect::<Vec<Rat>>(),
                );
                rows.push(
                    (0..self.dim)
                        .map(|i| self.coeff(j, i, k).clone())
                        .collect::<Vec<Rat>>(),
                );
            }
        }
        Matrix::from_rows(rows).kernel_basis()
    }

    /// Rank of the flattened product tensor `(i,j) × k`.
    pub fn tensor_rank(&self) -> usize {
        Matrix::from_fn(self.dim * self.dim, self.dim, |ij, k| {
            self.a[ij * self.dim + k].clone()
        })
        .rank()
    }
}

/// One violated identity instance: the basis indices and the exact defect.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Violation {
    pub indices: Vec<usize>,
    pub defect: Vec<String>,
}

fn violation(indices: Vec<usize>, defect: &[Rat]) -> Violation {
    Violation {
        indices,
        defect: defect.iter().map(crate::exact::format_rat).collect(),
    }
}

/// Which axiom family a report refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AxiomMode {
    Pair,
    Commutative,
}

/// Residuals of the three defining identities on all basis tuples.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct AxiomReport {
    pub mode: AxiomMode,
    /// Pair: `x·y − y·x − [x,y] + {x,y}`; commutative: `x·y − y·x`.
    pub axiom1: Vec<Violation>,
    /// `[x,y]·z − x·(y·z) + y·(x·z)`.
    pub axiom2: Vec<Violation>,
    /// `x·{y,z} − {x·y,z} − {y,x·z}` (with `[,]` in the commutative case).
    pub axiom3: Vec<Violation>,
    pub pass: bool,
}

/// Check the pair axioms for a candidate product on `(g, n)`.
pub fn verify_pair(pair: &PairOnSameSpace, p: &BilinearProduct) -> Result<AxiomReport, Error> {
    if p.dim() != pair.dim() {
        return Err(Error::DimensionMismatch(format!(
            "product dimension {} does not match the pair dimension {}",
            p.dim(),
            pair.dim()
        )));
    }
    let n = pair.dim();
    let mut axiom1 = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut defect = crate::exact::vec_sub(&p.apply_basis(i, j), &p.apply_basis(j, i));
            defect = crate::exact::vec_sub(&defect, &pair.g.bracket_basis(i, j));
            defect = crate::exact::vec_add(&defect, &pair.n.bracket_basis(i, j));
            if !vec_is_zero(&defect) {
                axiom1.push(violation(vec![i, j], &defect));
            }
        }
    }
    let axiom2 = representation_residuals(&pair.g, p);
    let axiom3 = derivation_residuals(&pair.n, p);
    let pass = axiom1.is_empty() && axiom2.is_empty() && axiom3.is_empty();
    Ok(AxiomReport {
        mode: AxiomMode::Pair,
        axiom1,
        axiom2,
        axiom3,
        pass,
    })
}

/// Check the commutative axioms (symmetry, representation law, derivation
/// law) for a candidate product on a single algebra.
pub fn verify_commutative(g: &LieAlgebra, p: &BilinearProduct) -> Result<AxiomReport, Error> {
    if p.dim() != g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "product dimension {} does not match the algebra dimension {}",
            p.dim(),
            g.dim()
        )));
    }
    let n = g.dim();
    let mut axiom1 = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let defect = crate::exact::vec_sub(&p.apply_basis(i, j), &p.apply_basis(j, i));
            if !vec_is_zero(&defect) {
                axiom1.push(violation(vec![i, j], &defect));
            }
        }
    }
    let axiom2 = representation_residuals(g, p);
    let axiom3 = derivation_residuals(g, p);
    let pass = axiom1.is_empty() && axiom2.is_empty() && axiom3.is_empty();
    Ok(AxiomReport {
        mode: AxiomMode::Commutative,
        axiom1,
        axiom2,
        axiom3,
        pass,
    })
}

/// Residuals of `[x,y]·z = x·(y·z) − y·(x·z)` over basis triples.
fn representation_residuals(g: &LieAlgebra, p: &BilinearProduct) -> Vec<Violation> {
    let n = g.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let bracket = g.bracket_basis(i, j);
            for k in 0..n {
                let ek: Vec<Rat> = unit(n, k);
                let lhs = p.apply(&bracket, &ek);
                let rhs = crate::exact::vec_sub(
                    &p.apply(&unit(n, i), &p.apply_basis(j, k)),
                    &p.apply(&unit(n, j), &p.apply_basis(i, k)),
                );
                let defect = crate::exact::vec_sub(&lhs, &rhs);
                if !vec_is_zero(&defect) {
                    out.push(violation(vec![i, j, k], &defect));
                }
            }
        }
    }
    out
}

/// Residuals of `x·{y,z} = {x·y,z} + {y,x·z}` over basis triples.
fn derivation_residuals(n_alg: &LieAlgebra, p: &BilinearProduct) -> Vec<Violation> {
    let n = n_alg.dim();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in y + 1..n {
                let lhs = p.apply(&unit(n, x), &n_alg.bracket_basis(y, z));
                let rhs = crate::exact::vec_add(
                    &n_alg.bracket(&p.apply_basis(x, y), &unit(n, z)),
                    &n_alg.bracket(&unit(n, y), &p.apply_basis(x, z)),
                );
                let defect = crate::exact::vec_sub(&lhs, &rhs);
                if !vec_is_zero(&defect) {
                    out.push(violation(vec![x, y, z], &defect));
                }
            }
        }
    }
    out
}

fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec_zero(n);
    v[i] = crate::exact::rat(1);
    v
}

/// Per-generator analysis of the left-multiplication representation.
#[derive(Debug, Clone, serde::Serialize)]
pub struct LeftOpsReport {
    #[serde(skip)]
    pub matrices: Vec<Matrix>,
    /// `L(e_i) ∈ Der(n)` per generator.
    pub derivation_ok: Vec<bool>,
    /// `L([e_i,e_j]) = [L(e_i), L(e_j)]` per pair `i < j`.
    pub representation_ok: Vec<(usize, usize, bool)>,
    pub pass: bool,
}

pub fn left_ops(pair: &PairOnSameSpace, p: &BilinearProduct) -> Result<LeftOpsReport, Error> {
    if p.dim() != pair.dim() {
        return Err(Error::DimensionMismatch(
            "product and pair dimensions differ".to_string(),
        ));
    }
    let n = pair.dim();
    let matrices: Vec<Matrix> = (0..n).map(|i| p.left_op(i)).collect();
    let derivation_ok: Vec<bool> = matrices
        .iter()
        .map(|m| is_derivation_of(&pair.n, m))
        .collect();
    let mut representation_ok = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = p.left_op_vec(&pair.g.bracket_basis(i, j));
            let rhs = matrices[i].commutator(&matrices[j]);
            representation_ok.push((i, j, lhs == rhs));
        }
    }
    let pass = derivation_ok.iter().all(|&b| b)
        && representation_ok.iter().all(|&(_, _, b)| b);
    Ok(LeftOpsReport {
        matrices,
        derivation_ok,
        representation_ok,
        pass,
    })
}

/// Report for the φ-form conditions on a semisimple second bracket.
#[derive(Debug, Clone, serde::Serialize)]
pub struct PhiReport {
    /// `{φx, y} + {x, φy} = [x,y] − {x,y}` residuals.
    pub linear_condition: Vec<Violation>,
    /// `φ([x,y]) = {φx, φy}` residuals.
    pub homomorphism_condition: Vec<Violation>,
    pub pass: bool,
}

/// The induced product `x·y = {φ(x), y}` together with the two φ-form
/// conditions. Requires `n` semisimple.
pub fn phi_to_product(
    phi: &Matrix,
    pair: &PairOnSameSpace,
) -> Result<(BilinearProduct, PhiReport), Error> {
    let n = pair.dim();
    if phi.rows() != n || phi.cols() != n {
        return Err(Error::DimensionMismatch(
            "φ must be an endomorphism of the pair's space".to_string(),
        ));
    }
    if !pair.n.is_semisimple() {
        return Err(Error::NotSemisimple);
    }
    let mut product = BilinearProduct::zero(n);
    for i in 0..n {
        let phi_ei = phi.col(i);
        for j in 0..n {
            let v = pair.n.bracket(&phi_ei, &unit(n, j));
            for k in 0..n {
                product.a[(i * n + j) * n + k] = v[k].clone();
            }
        }
    }
    let mut linear_condition = Vec::new();
    let mut homomorphism_condition = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = crate::exact::vec_add(
                &pair.n.bracket(&phi.col(i), &unit(n, j)),
                &pair.n.bracket(&unit(n, i), &phi.col(j)),
            );
            let rhs = crate::exact::vec_sub(
                &pair.g.bracket_basis(i, j),
                &pair.n.bracket_basis(i, j),
            );
            let defect = crate::exact::vec_sub(&lhs, &rhs);
            if !vec_is_zero(&defect) {
                linear_condition.push(violation(vec![i, j], &defect));
            }
            let lhs = phi.mul_vec(&pair.g.bracket_basis(i, j));
            let rhs = pair.n.bracket(&phi.col(i), &phi.col(j));
            let defect = crate::exact::vec_sub(&lhs, &rhs);
            if !vec_is_zero(&defect) {
                homomorphism_condition.push(violation(vec![i, j], &defect));
            }
        }
    }
    let pass = linear_condition.is_empty() && homomorphism_condition.is_empty();
    Ok((
        product,
        PhiReport {
            linear_condition,
            homomorphism_condition,
            pass,
        },
    ))
}

/// Trace of each power `M, M², …, M^upto` of a polynomial matrix.
pub fn trace_powers(m: &[Vec<Polynomial>], upto: usize) -> Vec<Polynomial> {
    let n = m.len();
    let nvars = m[0][0].nvars();
    let mut power: Vec<Vec<Polynomial>> = m.to_vec();
    let mut traces = Vec::with_capacity(upto);
    for step in 0..upto {
        let tr = (0..n).fold(Polynomial::zero(nvars), |acc, i| acc.add(&power[i][i]));
        traces.push(tr);
        if step + 1 < upto {
            power = poly_mat_mul(&power, m);
        }
    }
    traces
}

fn poly_mat_mul(a: &[Vec<Polynomial>], b: &[Vec<Polynomial>]) -> Vec<Vec<Polynomial>> {
    let n = a.len();
    let nvars = a[0][0].nvars();
    let mut out = vec![vec![Polynomial::zero(nvars); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j]));
                }
            }
        }
    }
    out
}

/// The generic left operator `L(x) = Σ_i x_i L(e_i)` as a polynomial matrix
/// in the coordinate variables of `x`.
pub fn generic_left_op(p: &BilinearProduct) -> Vec<Vec<Polynomial>> {
    let n = p.dim();
    let mut m = vec![vec![Polynomial::zero(n); n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let a = p.coeff(i, j, k);
                if !a.is_zero() {
                    let term = Polynomial::var(i, n).scale(a);
                    m[k][j] = m[k][j].add(&term);
                }
            }
        }
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct NilpotencyReport {
    pub nilpotent: bool,
    /// A rational point with non-nilpotent left operator, when one exists.
    pub witness: Option<Vec<String>>,
}

/// Decide whether every left operator `L(x)` is nilpotent, by exact
/// symbolic expansion: `tr(L(x)^m)` must vanish identically for
/// `m = 1 … dim`. Sampling cannot certify the universally quantified claim,
/// so this is the authoritative route.
pub fn all_left_nilpotent(p: &BilinearProduct) -> NilpotencyReport {
    let traces = trace_powers(&generic_left_op(p), p.dim());
    match traces.iter().find(|t| !t.is_zero()) {
        None => NilpotencyReport {
            nilpotent: true,
            witness: None,
        },
        Some(t) => {
            let point = nonzero_point(t);
            debug_assert!(!t.eval(&point).is_zero());
            NilpotencyReport {
                nilpotent: false,
                witness: Some(point.iter().map(crate::exact::format_rat).collect()),
            }
        }
    }
}

/// Deterministically find a rational point where a nonzero polynomial does
/// not vanish, by specializing variables one at a time.
pub fn nonzero_point(p: &Polynomial) -> Vec<Rat> {
    let nvars = p.nvars();
    let mut point = vec![Rat::zero(); nvars];
    let mut work = p.clone();
    for v in (0..nvars).rev() {
        if work.degree_in(v) == 0 {
            continue;
        }
        // try small values until the remaining polynomial stays nonzero
        for cand in 0.. {
            let value = crate::exact::rat(candidate_value(cand));
            let specialized =
                work.substitute_var(v, &Polynomial::constant(nvars, value.clone()));
            if !specialized.is_zero() {
                point[v] = value;
                work = specialized;
                break;
            }
        }
    }
    point
}

fn candidate_value(i: i64) -> i64 {
    // 0, 1, -1, 2, -2, ...
    if i == 0 {
        0
    } else if i % 2 == 1 {
        (i + 1) / 2
    } else {
        -(i / 2)
    }
}

/// Does the span of all products lie in the solvable radical?
pub fn image_in_radical(g: &LieAlgebra, p: &BilinearProduct) -> bool {
    g.killing_radical().contains(&p.product_span())
}

/// Isomorphism-invariant fingerprint of a product on an algebra.
///
/// Distinct fingerprints certify non-isomorphism; equal fingerprints decide
/// nothing.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Fingerprint {
    pub dim_product_span: usize,
    pub dim_annihilator: usize,
    pub tensor_rank: usize,
    pub all_left_nilpotent: bool,
    /// Dimension of `{x : L(x) = 0}`.
    pub dim_left_kernel: usize,
    /// Rank of the trace form `tr(L(e_i) L(e_j))`.
    pub trace_form_rank: usize,
}

pub fn invariants(_g: &LieAlgebra, p: &BilinearProduct) -> Fingerprint {
    let n = p.dim();
    let left_kernel = {
        let mut rows = Vec::new();
        for j in 0..n {
            for k in 0..n {
                rows.push(
                    (0..n)
                        .map(|i| p.coeff(i, j, k).clone())
                        .collect::<Vec<Rat>>(),
                );
            }
        }
        Matrix::from_rows(rows).kernel_basis().dim()
    };
    let ops: Vec<Matrix> = (0..n).map(|i| p.left_op(i)).collect();
    let trace_form =
        Matrix::from_fn(n, n, |i, j| ops[i].mul(&ops[j]).trace());
    Fingerprint {
        dim_product_span: p.product_span().dim(),
        dim_annihilator: p.annihilator().dim(),
        tensor_rank: p.tensor_rank(),
        all_left_nilpotent: all_left_nilpotent(p).nilpotent,
        dim_left_kernel: left_kernel,
        trace_form_rank: trace_form.rank(),
    }
}
