//! Constant-coefficient differential operators.
//!
//! `apply_diffop(f, g)` is the pairing `f(D) g` obtained by substituting
//! `D_i = ∂/∂z_i` for `z_i` in `f`. Restricted to two homogeneous
//! polynomials of the same degree `m` it yields a scalar, the apolar form
//! `B_m`, whose Gram matrix on monomials is `diag(α!)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::GaussianRational;
use crate::matrix::PolyMatrix;
use crate::poly::{monomials_of_degree, Polynomial};

/// `f(D) g`.
pub fn apply_diffop(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.n() != g.n() {
        return Err(Error::VariableCountMismatch {
            left: f.n(),
            right: g.n(),
        });
    }
    let mut acc = Polynomial::zero(g.n());
    let g_deg = g.degree();
    for (s, c) in f.terms() {
        // Operators of order above deg g annihilate it.
        if g_deg.is_none_or(|d| s.degree() > d) {
            continue;
        }
        let t = g.partial_multi(s)?;
        if !t.is_zero() {
            acc = &acc + &t.scale(c);
        }
    }
    Ok(acc)
}

/// `Δ g = Σ ∂²g/∂z_i²`.
pub fn laplacian(g: &Polynomial) -> Polynomial {
    let mut acc = Polynomial::zero(g.n());
    for i in 0..g.n() {
        acc = &acc + &g.partial_unchecked(i).partial_unchecked(i);
    }
    acc
}

/// `Δ^m g`; `m = 0` is the identity.
pub fn laplacian_power(g: &Polynomial, m: u32) -> Polynomial {
    let mut acc = g.clone();
    for _ in 0..m {
        if acc.is_zero() {
            break;
        }
        acc = laplacian(&acc);
    }
    acc
}

pub fn gradient(p: &Polynomial) -> Vec<Polynomial> {
    (0..p.n()).map(|i| p.partial_unchecked(i)).collect()
}

/// `Hes p = (∂²p/∂z_i∂z_j)`.
pub fn hessian(p: &Polynomial) -> PolyMatrix {
    let n = p.n();
    let grad = gradient(p);
    let mut h = PolyMatrix::zeros(n, n, n);
    for (i, gi) in grad.iter().enumerate() {
        for j in i..n {
            let e = gi.partial_unchecked(j);
            if i != j {
                h.set(j, i, e.clone());
            }
            h.set(i, j, e);
        }
    }
    h
}

/// True iff `m^k` is the zero matrix.
pub fn matrix_power_is_zero(m: &PolyMatrix, k: u32) -> Result<bool> {
    m.power_is_zero(k)
}

/// Value of the apolar form `B_m(f, g)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApolarValue {
    pub degree: u32,
    pub value: GaussianRational,
}

fn check_slice(p: &Polynomial, m: u32, what: &str) -> Result<()> {
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous { what: what.into() });
    }
    match p.homogeneous_degree() {
        Some(d) if d != m => Err(Error::DegreeMismatch {
            expected: m,
            found: d.to_string(),
        }),
        _ => Ok(()),
    }
}

/// `B_m(f, g) = f(D) g` for `f, g ∈ V_m`; rejects anything outside `V_m`.
pub fn apolar_form(f: &Polynomial, g: &Polynomial, m: u32) -> Result<ApolarValue> {
    check_slice(f, m, "first argument")?;
    check_slice(g, m, "second argument")?;
    let v = apply_diffop(f, g)?;
    let value = v.constant_value().ok_or_else(|| {
        Error::Inconsistent("apolar pairing of equal degrees is not a constant".into())
    })?;
    Ok(ApolarValue { degree: m, value })
}

/// Gram matrix of `B_m` on the graded-lex monomial basis of `V_m`, computed
/// by pairing basis monomials.
pub fn apolar_gram(m: u32, n: usize) -> Vec<Vec<GaussianRational>> {
    let basis = monomials_of_degree(n, m);
    let polys: Vec<Polynomial> = basis
        .iter()
        .map(|b| Polynomial::term(b.clone(), GaussianRational::one()))
        .collect();
    polys
        .iter()
        .map(|a| {
            polys
                .iter()
                .map(|b| {
                    apolar_form(a, b, m)
                        .expect("basis monomials lie in V_m")
                        .value
                })
                .collect()
        })
        .collect()
}
