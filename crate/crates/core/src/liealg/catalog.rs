//! Built-in algebras and representations used throughout the toolkit.

use super::{LieAlgebra, Representation};
use crate::error::Error;
use crate::exact::{rat, Matrix, Rat};
use num_traits::Zero;

fn names(prefix: &str, dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("{prefix}{i}")).collect()
}

/// The abelian algebra `C^n`.
pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::new(n, names("e", n), &[]).unwrap()
}

/// The 2-dimensional non-abelian algebra: `[e1,e2] = e1`.
pub fn r2() -> LieAlgebra {
    LieAlgebra::new(2, names("e", 2), &[((0, 1), vec![(0, rat(1))])]).unwrap()
}

/// Solvable family: `[e1,e2] = e2`, `[e1,e3] = λ e3`.
pub fn r3_diag(lambda: &Rat) -> Result<LieAlgebra, Error> {
    LieAlgebra::new(
        3,
        names("e", 3),
        &[
            ((0, 1), vec![(1, rat(1))]),
            ((0, 2), vec![(2, lambda.clone())]),
        ],
    )
}

/// The solvable algebra with a Jordan block: `[e1,e2] = e2`,
/// `[e1,e3] = e2 + e3`.
pub fn r3_jordan() -> LieAlgebra {
    LieAlgebra::new(
        3,
        names("e", 3),
        &[
            ((0, 1), vec![(1, rat(1))]),
            ((0, 2), vec![(1, rat(1)), (2, rat(1))]),
        ],
    )
    .unwrap()
}

/// The 3-dimensional Heisenberg algebra: `[e1,e2] = e3`.
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::new(3, names("e", 3), &[((0, 1), vec![(2, rat(1))])]).unwrap()
}

/// The free 3-step nilpotent algebra on two generators (dimension 5).
pub fn f23() -> LieAlgebra {
    LieAlgebra::new(
        5,
        names("e", 5),
        &[
            ((0, 1), vec![(2, rat(1))]),
            ((0, 2), vec![(3, rat(1))]),
            ((1, 2), vec![(4, rat(1))]),
        ],
    )
    .unwrap()
}

/// `sl2` in the Chevalley ordering `(h, e, f)`:
/// `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::new(
        3,
        vec!["h".into(), "e".into(), "f".into()],
        &[
            ((0, 1), vec![(1, rat(2))]),
            ((0, 2), vec![(2, rat(-2))]),
            ((1, 2), vec![(0, rat(1))]),
        ],
    )
    .unwrap()
}

/// Heisenberg plus a central line: `[e1,e2] = e3` in dimension 4.
pub fn h1_plus_c() -> LieAlgebra {
    LieAlgebra::new(4, names("e", 4), &[((0, 1), vec![(2, rat(1))])]).unwrap()
}

/// The irreducible `sl2`-module of dimension `m` on binary forms, with
/// integer matrices in the `(h, e, f)` ordering of [`sl2`].
pub fn v_rep(m: usize) -> Result<Representation, Error> {
    if m < 1 {
        return Err(Error::InvalidParameter(
            "module dimension must be at least 1".to_string(),
        ));
    }
    let n = (m - 1) as i64;
    let mut h = Matrix::zeros(m, m);
    let mut e = Matrix::zeros(m, m);
    let mut f = Matrix::zeros(m, m);
    for i in 0..m {
        let iw = i as i64;
        h.set(i, i, rat(n - 2 * iw));
        if i + 1 < m {
            // e · v_{i+1} = (i+1)(n-i) v_i ; f · v_i = v_{i+1}
            e.set(i, i + 1, rat((iw + 1) * (n - iw)));
            f.set(i + 1, i, rat(1));
        }
    }
    Representation::new(sl2(), vec![h, e, f])
}

/// The perfect algebra `sl2 ⋉ V(m)` in the basis `(E, F, H, v_0, …)`, so
/// that for `m = 2` the constants are exactly
/// `[e1,e2]=e3, [e1,e3]=-2e1, [e2,e3]=2e2, [e1,e5]=e4, [e2,e4]=e5,
/// [e3,e4]=e4, [e3,e5]=-e5`.
pub fn sl2_ltimes_v(m: usize) -> Result<LieAlgebra, Error> {
    if m < 2 {
        return Err(Error::InvalidParameter(
            "sl2_ltimes_V needs module dimension at least 2".to_string(),
        ));
    }
    let rep = v_rep(m)?;
    let (h, e, f) = (&rep.action[0], &rep.action[1], &rep.action[2]);
    let dim = 3 + m;
    let mut brackets: Vec<super::BracketEntry> = vec![
        ((0, 1), vec![(2, rat(1))]),  // [E,F] = H
        ((0, 2), vec![(0, rat(-2))]), // [E,H] = -2E
        ((1, 2), vec![(1, rat(2))]),  // [F,H] = 2F
    ];
    let action = [e, f, h]; // in basis order E, F, H
    for (si, mat) in action.iter().enumerate() {
        for j in 0..m {
            let col: Vec<(usize, Rat)> = (0..m)
                .filter(|&k| !mat.get(k, j).is_zero())
                .map(|k| (3 + k, mat.get(k, j).clone()))
                .collect();
            if !col.is_empty() {
                brackets.push(((si, 3 + j), col));
            }
        }
    }
    let mut basis = vec!["e1".to_string(), "e2".to_string(), "e3".to_string()];
    basis.extend((4..=dim).map(|i| format!("e{i}")));
    LieAlgebra::new(dim, basis, &brackets)
}

/// `sl3` in the standard Chevalley basis, realized by traceless 3×3
/// matrices `(h1, h2, x12, x23, x13, y12, y23, y13)`.
pub fn sl3_chevalley() -> LieAlgebra {
    let unit = |i: usize, j: usize| {
        let mut m = Matrix::zeros(3, 3);
        m.set(i, j, rat(1));
        m
    };
    let basis_mats = [
        unit(0, 0).sub(&unit(1, 1)), // h1
        unit(1, 1).sub(&unit(2, 2)), // h2
        unit(0, 1),                  // x12
        unit(1, 2),                  // x23
        unit(0, 2),                  // x13
        unit(1, 0),                  // y12
        unit(2, 1),                  // y23
        unit(2, 0),                  // y13
    ];
    let basis_names: Vec<String> = ["h1", "h2", "x12", "x23", "x13", "y12", "y23", "y13"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    // coordinates of a traceless matrix in this basis
    let coords = |m: &Matrix| -> Vec<Rat> {
        vec![
            m.get(0, 0).clone(),
            m.get(0, 0) + m.get(1, 1),
            m.get(0, 1).clone(),
            m.get(1, 2).clone(),
            m.get(0, 2).clone(),
            m.get(1, 0).clone(),
            m.get(2, 1).clone(),
            m.get(2, 0).clone(),
        ]
    };
    let dim = 8;
    let mut c = vec![Rat::zero(); dim * dim * dim];
    let idx = |i: usize, j: usize, k: usize| (i * dim + j) * dim + k;
    for i in 0..dim {
        for j in 0..dim {
            let comm = basis_mats[i].commutator(&basis_mats[j]);
            for (k, v) in coords(&comm).into_iter().enumerate() {
                c[idx(i, j, k)] = v;
            }
        }
    }
    LieAlgebra::from_constants(dim, basis_names, c).unwrap()
}

/// Canonical catalog names, with a short description each.
pub fn entries() -> Vec<(&'static str, &'static str)> {
    vec![
        ("abelian", "abelian C^n (parameter: dimension n)"),
        ("r2", "2-dimensional non-abelian, [e1,e2]=e1"),
        ("r3_diag", "[e1,e2]=e2, [e1,e3]=λe3 (parameter: λ)"),
        ("r3_jordan", "[e1,e2]=e2, [e1,e3]=e2+e3"),
        ("heisenberg", "Heisenberg h1, [e1,e2]=e3"),
        ("n3", "alias of heisenberg"),
        ("f23", "free 3-step nilpotent on 2 generators, dim 5"),
        ("sl2", "sl2 in the (h,e,f) Chevalley ordering"),
        ("sl3_chevalley", "sl3 in the standard Chevalley basis"),
        ("sl2_ltimes_V", "perfect sl2 ⋉ V(m) (parameter: m ≥ 2)"),
        ("h1_plus_C", "Heisenberg plus a central line, dim 4"),
    ]
}

fn int_param(name: &str, param: Option<&Rat>) -> Result<usize, Error> {
    let p = param.ok_or_else(|| {
        Error::InvalidParameter(format!("catalog entry `{name}` needs --param"))
    })?;
    if !p.is_integer() || p < &rat(1) {
        return Err(Error::InvalidParameter(format!(
            "catalog entry `{name}` needs a positive integer parameter"
        )));
    }
    Ok(p.to_integer().try_into().unwrap())
}

/// Look up a catalog algebra, applying the parameter where one is needed.
pub fn get(name: &str, param: Option<&Rat>) -> Result<LieAlgebra, Error> {
    match name {
        "abelian" => Ok(abelian(int_param(name, param)?)),
        "r2" => Ok(r2()),
        "r3_diag" => {
            let lambda = param.ok_or_else(|| {
                Error::InvalidParameter("catalog entry `r3_diag` needs --param λ".to_string())
            })?;
            r3_diag(lambda)
        }
        "r3_jordan" => Ok(r3_jordan()),
        "heisenberg" | "n3" | "h1" => Ok(heisenberg()),
        "f23" => Ok(f23()),
        "sl2" => Ok(sl2()),
        "sl3_chevalley" => Ok(sl3_chevalley()),
        "sl2_ltimes_V" => sl2_ltimes_v(int_param(name, param)?),
        "h1_plus_C" => Ok(h1_plus_c()),
        other => {
            // accept the compact forms abelian3, sl2_ltimes_V2, ...
            if let Some(rest) = other.strip_prefix("sl2_ltimes_V") {
                if let Ok(m) = rest.parse::<usize>() {
                    return sl2_ltimes_v(m);
                }
            }
            if let Some(rest) = other.strip_prefix("abelian") {
                if let Ok(n) = rest.parse::<usize>() {
                    return Ok(abelian(n));
                }
            }
            Err(Error::UnknownCatalog(other.to_string()))
        }
    }
}
