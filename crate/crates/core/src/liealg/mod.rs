//! Lie algebras as exact structure constants, structural predicates,
//! semidirect products, and quotients.

pub mod catalog;

use crate::error::Error;
use crate::exact::{rat, vec_is_zero, vec_zero, Matrix, Rat, Subspace};
use num_traits::Zero;

/// A finite-dimensional Lie algebra over the rationals, given by structure
/// constants `c[i][j][k]` with `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
///
/// Antisymmetry and the Jacobi identity are enforced on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    basis_names: Vec<String>,
    c: Vec<Rat>, // flattened [i][j][k]
}

/// One sparse bracket: `((i, j), [(k, coefficient), …])` with `i < j`.
pub type BracketEntry = ((usize, usize), Vec<(usize, Rat)>);

/// Violations of the Jacobi identity for candidate constants, reported as
/// basis triples `(i, j, k)` with `i < j < k`.
pub fn jacobi_defect(dim: usize, c: &[Rat]) -> Vec<(usize, usize, usize)> {
    let idx = |i: usize, j: usize, k: usize| (i * dim + j) * dim + k;
    let bracket_basis = |i: usize, j: usize| -> Vec<Rat> {
        (0..dim).map(|k| c[idx(i, j, k)].clone()).collect()
    };
    let bracket_vec = |i: usize, v: &[Rat]| -> Vec<Rat> {
        let mut out = vec_zero(dim);
        for (l, coeff) in v.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(bracket_basis(i, l)) {
                *o += coeff * &b;
            }
        }
        out
    };
    let mut defects = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            for k in j + 1..dim {
                // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
                let mut total = vec_zero(dim);
                for (a, b, cc) in [(i, j, k), (j, k, i), (k, i, j)] {
                    let inner = bracket_basis(a, b);
                    let outer = bracket_vec(cc, &inner);
                    // [v, e_c] = -[e_c, v]
                    for (t, o) in total.iter_mut().zip(outer) {
                        *t -= o;
                    }
                }
                if !vec_is_zero(&total) {
                    defects.push((i, j, k));
                }
            }
        }
    }
    defects
}

impl LieAlgebra {
    /// Build from the upper-triangular bracket table `[e_i, e_j]` for
    /// `i < j`; antisymmetry is filled in and Jacobi checked.
    pub fn new(
        dim: usize,
        basis_names: Vec<String>,
        brackets: &[BracketEntry],
    ) -> Result<Self, Error> {
        assert_eq!(basis_names.len(), dim);
        let mut c = vec![Rat::zero(); dim * dim * dim];
        let idx = |i: usize, j: usize, k: usize| (i * dim + j) * dim + k;
        for ((i, j), coeffs) in brackets {
            if i >= j {
                return Err(Error::Antisymmetry(*i, *j));
            }
            for (k, v) in coeffs {
                c[idx(*i, *j, *k)] = v.clone();
                c[idx(*j, *i, *k)] = -v.clone();
            }
        }
        let defects = jacobi_defect(dim, &c);
        if !defects.is_empty() {
            return Err(Error::JacobiFailure(defects));
        }
        Ok(LieAlgebra {
            dim,
            basis_names,
            c,
        })
    }

    /// Build from a full constants tensor; validates antisymmetry and Jacobi.
    pub fn from_constants(
        dim: usize,
        basis_names: Vec<String>,
        c: Vec<Rat>,
    ) -> Result<Self, Error> {
        assert_eq!(c.len(), dim * dim * dim);
        let idx = |i: usize, j: usize, k: usize| (i * dim + j) * dim + k;
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    if c[idx(i, j, k)] != -c[idx(j, i, k)].clone() {
                        return Err(Error::Antisymmetry(i, j));
                    }
                }
            }
        }
        let defects = jacobi_defect(dim, &c);
        if !defects.is_empty() {
            return Err(Error::JacobiFailure(defects));
        }
        Ok(LieAlgebra {
            dim,
            basis_names,
            c,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn constants(&self) -> &[Rat] {
        &self.c
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        (0..self.dim)
            .map(|k| self.constant(i, j, k).clone())
            .collect()
    }

    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec_zero(self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let coeff = &x[i] * &y[j];
                for k in 0..self.dim {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        out[k] += &coeff * c;
                    }
                }
            }
        }
        out
    }

    /// Adjoint operator of a basis element.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.constant(i, j, k).clone())
    }

    pub fn ad(&self, x: &[Rat]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, coeff) in x.iter().enumerate() {
            if !coeff.is_zero() {
                m = m.add(&self.ad_basis(i).scale(coeff));
            }
        }
        m
    }

    /// Killing form matrix `κ(e_i, e_j) = tr(ad e_i ∘ ad e_j)`.
    pub fn killing_form(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        Matrix::from_fn(self.dim, self.dim, |i, j| ads[i].mul(&ads[j]).trace())
    }

    /// Span of `[u, v]` for u in `a`, v in `b`.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vectors = Vec::new();
        for u in a.basis() {
            for v in b.basis() {
                vectors.push(self.bracket(u, v));
            }
        }
        Subspace::from_spanning(self.dim, vectors)
    }

    /// Lower central or derived series, starting at the full algebra,
    /// listed until stabilization.
    pub fn series(&self, kind: SeriesKind) -> Vec<Subspace> {
        let full = Subspace::full(self.dim);
        let mut out = vec![full.clone()];
        loop {
            let prev = out.last().unwrap();
            let next = match kind {
                SeriesKind::LowerCentral => self.bracket_span(&full, prev),
                SeriesKind::Derived => self.bracket_span(prev, prev),
            };
            if &next == prev {
                break;
            }
            let stop = next.dim() == 0;
            out.push(next);
            if stop {
                break;
            }
        }
        out
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.bracket_span(&full, &full)
    }

    pub fn center(&self) -> Subspace {
        // x central ⇔ ad(x) = 0; stack the maps e_i ↦ column blocks
        let mut rows = Vec::with_capacity(self.dim * self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                // coefficient of e_k in [x, e_j] as a function of x_i
                rows.push(
                    (0..self.dim)
                        .map(|i| self.constant(i, j, k).clone())
                        .collect::<Vec<Rat>>(),
                );
            }
        }
        Matrix::from_rows(rows).kernel_basis()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.series(SeriesKind::LowerCentral)
            .last()
            .unwrap()
            .dim()
            == 0
    }

    pub fn is_solvable(&self) -> bool {
        self.series(SeriesKind::Derived).last().unwrap().dim() == 0
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subalgebra().dim() == self.dim
    }

    pub fn is_semisimple(&self) -> bool {
        self.dim > 0 && self.killing_form().rank() == self.dim
    }

    pub fn is_unimodular(&self) -> bool {
        (0..self.dim).all(|i| self.ad_basis(i).trace().is_zero())
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Rat::is_zero)
    }

    pub fn predicates(&self) -> Predicates {
        Predicates {
            is_nilpotent: self.is_nilpotent(),
            is_solvable: self.is_solvable(),
            is_perfect: self.is_perfect(),
            is_semisimple: self.is_semisimple(),
            is_unimodular: self.is_unimodular(),
            is_abelian: self.is_abelian(),
            center_dim: self.center().dim(),
        }
    }

    /// The solvable radical: the Killing-orthogonal complement of `[g, g]`
    /// (valid in characteristic zero).
    pub fn killing_radical(&self) -> Subspace {
        let derived = self.derived_subalgebra();
        if derived.dim() == 0 {
            return Subspace::full(self.dim);
        }
        let killing = self.killing_form();
        // v ∈ rad ⇔ κ(v, w) = 0 for all w ∈ [g,g]
        let constraints = derived.basis_matrix().mul(&killing);
        constraints.kernel_basis()
    }

    /// Quotient by an ideal, with the canonical complement from echelon
    /// coordinates as the induced basis.
    pub fn quotient(&self, ideal: &Subspace) -> Result<LieAlgebra, Error> {
        // check it is an ideal
        let full = Subspace::full(self.dim);
        let image = self.bracket_span(&full, ideal);
        if !ideal.contains(&image) {
            return Err(Error::InvalidParameter(
                "subspace is not an ideal".to_string(),
            ));
        }
        let coords = ideal.complement_coords();
        let qdim = coords.len();
        let names: Vec<String> = coords
            .iter()
            .map(|&c| self.basis_names[c].clone())
            .collect();
        let mut c = vec![Rat::zero(); qdim * qdim * qdim];
        let idx = |i: usize, j: usize, k: usize| (i * qdim + j) * qdim + k;
        for (qi, &bi) in coords.iter().enumerate() {
            for (qj, &bj) in coords.iter().enumerate() {
                let reduced = ideal.reduce_vec(&self.bracket_basis(bi, bj));
                for (qk, &bk) in coords.iter().enumerate() {
                    c[idx(qi, qj, qk)] = reduced[bk].clone();
                }
            }
        }
        LieAlgebra::from_constants(qdim, names, c)
    }

    /// Restrict the bracket to a subalgebra spanned by the subspace basis.
    pub fn restrict(&self, sub: &Subspace) -> Result<LieAlgebra, Error> {
        let k = sub.dim();
        let mut c = vec![Rat::zero(); k * k * k];
        let idx = |i: usize, j: usize, l: usize| (i * k + j) * k + l;
        for i in 0..k {
            for j in 0..k {
                let br = self.bracket(&sub.basis()[i], &sub.basis()[j]);
                // express in the echelon basis of `sub`
                let mut v = br.clone();
                for (l, row) in sub.basis().iter().enumerate() {
                    let pivot = row.iter().position(|x| !x.is_zero()).unwrap();
                    let coeff = v[pivot].clone();
                    if !coeff.is_zero() {
                        for (x, r) in v.iter_mut().zip(row) {
                            *x -= &coeff * r;
                        }
                    }
                    c[idx(i, j, l)] = coeff;
                }
                if !vec_is_zero(&v) {
                    return Err(Error::InvalidParameter(
                        "subspace is not a subalgebra".to_string(),
                    ));
                }
            }
        }
        let names = (0..k).map(|i| format!("b{}", i + 1)).collect();
        LieAlgebra::from_constants(k, names, c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    LowerCentral,
    Derived,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Predicates {
    pub is_nilpotent: bool,
    pub is_solvable: bool,
    pub is_perfect: bool,
    pub is_semisimple: bool,
    pub is_unimodular: bool,
    pub is_abelian: bool,
    pub center_dim: usize,
}

/// A representation of a Lie algebra by matrices on a module.
#[derive(Debug, Clone)]
pub struct Representation {
    pub algebra: LieAlgebra,
    pub module_dim: usize,
    pub action: Vec<Matrix>,
}

impl Representation {
    pub fn new(algebra: LieAlgebra, action: Vec<Matrix>) -> Result<Self, Error> {
        if action.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(
                "one action matrix per basis element required".to_string(),
            ));
        }
        let module_dim = action.first().map_or(0, Matrix::rows);
        for m in &action {
            if m.rows() != module_dim || m.cols() != module_dim {
                return Err(Error::DimensionMismatch(
                    "action matrices must be square of equal size".to_string(),
                ));
            }
        }
        let rep = Representation {
            algebra,
            module_dim,
            action,
        };
        for i in 0..rep.algebra.dim() {
            for j in i + 1..rep.algebra.dim() {
                let lhs = rep.act_vec(&rep.algebra.bracket_basis(i, j));
                let rhs = rep.action[i].commutator(&rep.action[j]);
                if lhs != rhs {
                    return Err(Error::NotRepresentation);
                }
            }
        }
        Ok(rep)
    }

    fn act_vec(&self, x: &[Rat]) -> Matrix {
        let mut m = Matrix::zeros(self.module_dim, self.module_dim);
        for (i, coeff) in x.iter().enumerate() {
            if !coeff.is_zero() {
                m = m.add(&self.action[i].scale(coeff));
            }
        }
        m
    }

    /// Direct sum of two representations of the same algebra.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation, Error> {
        if self.algebra != other.algebra {
            return Err(Error::DimensionMismatch(
                "direct sum requires the same acting algebra".to_string(),
            ));
        }
        let n = self.module_dim + other.module_dim;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                Matrix::from_fn(n, n, |i, j| {
                    if i < self.module_dim && j < self.module_dim {
                        a.get(i, j).clone()
                    } else if i >= self.module_dim && j >= self.module_dim {
                        b.get(i - self.module_dim, j - self.module_dim).clone()
                    } else {
                        Rat::zero()
                    }
                })
            })
            .collect();
        Representation::new(self.algebra.clone(), action)
    }

    /// The zero action on a module of the given dimension.
    pub fn zero(algebra: LieAlgebra, module_dim: usize) -> Representation {
        let action = (0..algebra.dim())
            .map(|_| Matrix::zeros(module_dim, module_dim))
            .collect();
        Representation {
            algebra,
            module_dim,
            action,
        }
    }
}

/// Two Lie brackets sharing one underlying vector space.
#[derive(Debug, Clone)]
pub struct PairOnSameSpace {
    pub g: LieAlgebra,
    pub n: LieAlgebra,
}

impl PairOnSameSpace {
    pub fn new(g: LieAlgebra, n: LieAlgebra) -> Result<Self, Error> {
        if g.dim() != n.dim() {
            return Err(Error::DimensionMismatch(format!(
                "pair must share the vector space: dims {} and {}",
                g.dim(),
                n.dim()
            )));
        }
        Ok(PairOnSameSpace { g, n })
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }
}

/// A semidirect product `r ⋊ s` with its split recorded, r-part first.
#[derive(Debug, Clone)]
pub struct Semidirect {
    pub algebra: LieAlgebra,
    pub r: LieAlgebra,
    pub s: LieAlgebra,
    pub rep: Representation,
}

impl Semidirect {
    pub fn r_dim(&self) -> usize {
        self.r.dim()
    }

    pub fn s_dim(&self) -> usize {
        self.s.dim()
    }
}

/// Semidirect product with bracket
/// `[(a,x),(b,y)] = ([a,b] + φ(x)b − φ(y)a, [x,y])`.
///
/// Each `φ(x)` must act on `r` by derivations.
pub fn semidirect(
    r: &LieAlgebra,
    s: &LieAlgebra,
    phi: &Representation,
) -> Result<Semidirect, Error> {
    if phi.algebra != *s {
        return Err(Error::DimensionMismatch(
            "representation must act for the subalgebra s".to_string(),
        ));
    }
    if phi.module_dim != r.dim() {
        return Err(Error::DimensionMismatch(
            "representation module must be r".to_string(),
        ));
    }
    for (i, m) in phi.action.iter().enumerate() {
        if !is_derivation_of(r, m) {
            return Err(Error::NotDerivation(i));
        }
    }
    let rd = r.dim();
    let dim = rd + s.dim();
    let mut names: Vec<String> = (0..dim).map(|i| format!("e{}", i + 1)).collect();
    for (i, n) in r.basis_names().iter().enumerate() {
        names[i] = n.clone();
    }
    for (i, n) in s.basis_names().iter().enumerate() {
        names[rd + i] = format!("{n}'");
    }
    let mut c = vec![Rat::zero(); dim * dim * dim];
    let idx = |i: usize, j: usize, k: usize| (i * dim + j) * dim + k;
    // [r, r]
    for i in 0..rd {
        for j in 0..rd {
            for k in 0..rd {
                c[idx(i, j, k)] = r.constant(i, j, k).clone();
            }
        }
    }
    // [s, s]
    for i in 0..s.dim() {
        for j in 0..s.dim() {
            for k in 0..s.dim() {
                c[idx(rd + i, rd + j, rd + k)] = s.constant(i, j, k).clone();
            }
        }
    }
    // [x, b] = φ(x) b for x ∈ s, b ∈ r
    for i in 0..s.dim() {
        for j in 0..rd {
            for k in 0..rd {
                let v = phi.action[i].get(k, j).clone();
                c[idx(rd + i, j, k)] = v.clone();
                c[idx(j, rd + i, k)] = -v;
            }
        }
    }
    let algebra = LieAlgebra::from_constants(dim, names, c)?;
    Ok(Semidirect {
        algebra,
        r: r.clone(),
        s: s.clone(),
        rep: phi.clone(),
    })
}

/// Does `d` satisfy `d[x,y] = [dx,y] + [x,dy]` on `g`?
pub fn is_derivation_of(g: &LieAlgebra, d: &Matrix) -> bool {
    if d.rows() != g.dim() || d.cols() != g.dim() {
        return false;
    }
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let lhs = d.mul_vec(&g.bracket_basis(i, j));
            let dx = d.col(i);
            let dy = d.col(j);
            let ei: Vec<Rat> = (0..g.dim()).map(|k| if k == i { rat(1) } else { rat(0) }).collect();
            let ej: Vec<Rat> = (0..g.dim()).map(|k| if k == j { rat(1) } else { rat(0) }).collect();
            let rhs = crate::exact::vec_add(&g.bracket(&dx, &ej), &g.bracket(&ei, &dy));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::catalog;
    use super::*;
    use crate::exact::rat;

    #[test]
    fn jacobi_defect_detects_a_break() {
        // [e1,e2] = e1, [e1,e3] = e2, [e2,e3] = 0: expanding the Jacobi sum
        // J(e1,e2,e3) by hand leaves [e1,e3] = e2 uncancelled.
        let dim = 3;
        let mut c = vec![rat(0); 27];
        let idx = |i: usize, j: usize, k: usize| (i * dim + j) * dim + k;
        c[idx(0, 1, 0)] = rat(1);
        c[idx(1, 0, 0)] = rat(-1);
        c[idx(0, 2, 1)] = rat(1);
        c[idx(2, 0, 1)] = rat(-1);
        let defects = jacobi_defect(dim, &c);
        assert_eq!(defects, vec![(0, 1, 2)]);
    }

    #[test]
    fn jacobi_holds_for_heisenberg_and_abelian() {
        assert!(jacobi_defect(3, catalog::heisenberg().constants()).is_empty());
        assert!(jacobi_defect(4, catalog::abelian(4).constants()).is_empty());
    }

    #[test]
    fn f23_lower_central_series() {
        let f23 = catalog::f23();
        let dims: Vec<usize> = f23
            .series(SeriesKind::LowerCentral)
            .iter()
            .map(Subspace::dim)
            .collect();
        assert_eq!(dims, vec![5, 3, 2, 0]);
    }

    #[test]
    fn sl2_derived_series_is_constant() {
        let sl2 = catalog::sl2();
        let dims: Vec<usize> = sl2
            .series(SeriesKind::Derived)
            .iter()
            .map(Subspace::dim)
            .collect();
        assert_eq!(dims, vec![3]);
        assert!(sl2.is_perfect());
        assert!(sl2.is_semisimple());
    }

    #[test]
    fn abelian_series() {
        let a = catalog::abelian(3);
        let dims: Vec<usize> = a
            .series(SeriesKind::LowerCentral)
            .iter()
            .map(Subspace::dim)
            .collect();
        assert_eq!(dims, vec![3, 0]);
    }

    #[test]
    fn r2_is_not_unimodular() {
        // tr ad(e2) = -1 from [e2, e1] = -e1
        let r2 = catalog::r2();
        assert_eq!(r2.ad_basis(1).trace(), rat(-1));
        assert!(!r2.is_unimodular());
        assert!(r2.is_solvable());
    }

    #[test]
    fn r3_diag_unimodular_iff_lambda_is_minus_one() {
        assert!(!catalog::r3_diag(&rat(1)).unwrap().is_unimodular());
        assert!(catalog::r3_diag(&rat(-1)).unwrap().is_unimodular());
        // tr ad(e1) = 1 + λ
        let g = catalog::r3_diag(&rat(2)).unwrap();
        assert_eq!(g.ad_basis(0).trace(), rat(3));
    }

    #[test]
    fn sl2_ltimes_v2_structure() {
        let g = catalog::sl2_ltimes_v(2).unwrap();
        assert!(g.is_perfect());
        assert!(!g.is_semisimple());
        let radical = g.killing_radical();
        assert_eq!(radical.dim(), 2);
        // radical is the span of e4, e5
        assert!(radical.contains_vec(&[rat(0), rat(0), rat(0), rat(1), rat(0)]));
        assert!(radical.contains_vec(&[rat(0), rat(0), rat(0), rat(0), rat(1)]));
        assert!(catalog::sl2_ltimes_v(3).unwrap().is_perfect());
        assert!(catalog::sl2_ltimes_v(4).unwrap().is_perfect());
    }

    #[test]
    fn killing_radical_trivial_cases() {
        assert_eq!(catalog::sl2().killing_radical().dim(), 0);
        assert_eq!(catalog::r2().killing_radical().dim(), 2);
        assert_eq!(catalog::heisenberg().killing_radical().dim(), 3);
    }

    #[test]
    fn radical_is_solvable_ideal_and_quotient_semisimple() {
        for name in ["sl2_ltimes_V2", "sl2", "r2", "f23", "h1_plus_C"] {
            let g = catalog::get(name, None).unwrap();
            let rad = g.killing_radical();
            if rad.dim() > 0 {
                let restricted = g.restrict(&rad).unwrap();
                assert!(restricted.is_solvable(), "{name}: radical not solvable");
            }
            if rad.dim() < g.dim() {
                let q = g.quotient(&rad).unwrap();
                assert!(q.is_semisimple(), "{name}: quotient not semisimple");
            }
        }
    }

    #[test]
    fn semidirect_reproduces_catalog_sl2_ltimes_v2() {
        // r = C², s = sl2 acting through V(2); reorder (v0,v1,h,e,f) to the
        // catalog's (E,F,H,v0,v1) and compare constants.
        let built = semidirect(
            &catalog::abelian(2),
            &catalog::sl2(),
            &catalog::v_rep(2).unwrap(),
        )
        .unwrap();
        let target = catalog::sl2_ltimes_v(2).unwrap();
        // built order: (v0, v1, h, e, f); target order: (e, f, h, v0, v1)
        let perm = [3usize, 4, 2, 0, 1]; // target index -> built index
        for i in 0..5 {
            for j in 0..5 {
                for k in 0..5 {
                    assert_eq!(
                        target.constant(i, j, k),
                        built.algebra.constant(perm[i], perm[j], perm[k]),
                        "constants differ at ({i},{j},{k})"
                    );
                }
            }
        }
    }

    #[test]
    fn semidirect_with_zero_action_is_direct_sum() {
        let r = catalog::abelian(2);
        let s = catalog::abelian(1);
        let phi = Representation::zero(s.clone(), 2);
        let g = semidirect(&r, &s, &phi).unwrap();
        assert!(g.algebra.is_abelian());

        let c1 = catalog::abelian(1);
        let zero = Representation::zero(catalog::sl2(), 1);
        let g2 = semidirect(&c1, &catalog::sl2(), &zero).unwrap();
        assert_eq!(g2.algebra.killing_radical().dim(), 1);
        assert!(!g2.algebra.is_perfect());
    }

    #[test]
    fn semidirect_rejects_non_derivations() {
        // heisenberg has non-derivation endomorphisms, e.g. e3 ↦ e1
        let r = catalog::heisenberg();
        let mut m = Matrix::zeros(3, 3);
        m.set(0, 2, rat(1));
        let s = catalog::abelian(1);
        let phi = Representation {
            algebra: s.clone(),
            module_dim: 3,
            action: vec![m],
        };
        assert!(semidirect(&r, &s, &phi).is_err());
    }

    #[test]
    fn semidirect_restriction_and_projection() {
        let sd = semidirect(
            &catalog::abelian(2),
            &catalog::sl2(),
            &catalog::v_rep(2).unwrap(),
        )
        .unwrap();
        // restricted to r: abelian
        for i in 0..2 {
            for j in 0..2 {
                assert!(vec_is_zero(&sd.algebra.bracket_basis(i, j)));
            }
        }
        // projection to s is a homomorphism: the s-block matches s
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert_eq!(
                        sd.algebra.constant(2 + i, 2 + j, 2 + k),
                        sd.s.constant(i, j, k)
                    );
                }
            }
        }
    }
}
