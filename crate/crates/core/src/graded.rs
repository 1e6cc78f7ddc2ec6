//! Graded pieces of homogeneous ideals and of the polynomial solution space
//! of a constant-coefficient PDE system.
//!
//! For homogeneous generators `g_1, ..., g_k` write `I_m` for the degree-`m`
//! part of the ideal they generate and `S_m` for the degree-`m` polynomials
//! `u` with `g_i(D) u = 0` for every `i`. Both are computed here as exact
//! subspaces of `V_m` in canonical reduced row-echelon form, with coordinates
//! taken on the graded-lex descending monomial basis, so two subspaces are
//! equal iff their [`SubspaceBasis`] values are equal.
//!
//! The two are computed by independent routes (`S_m` as a joint kernel of
//! the operators, `I_m^⊥` through the apolar Gram matrix) so the identity
//! `S_m = I_m^⊥` can be checked rather than assumed.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::diffop::apply_diffop;
use crate::error::{Error, Result};
use crate::field::GaussianRational;
use crate::linalg::{self, Row};
use crate::poly::{homogeneous_dimension, monomials_of_degree, Monomial, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    m: u32,
    n: usize,
    rows: Vec<Row>,
}

struct MonomialIndex {
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialIndex {
    fn new(n: usize, m: u32) -> Self {
        let basis = monomials_of_degree(n, m);
        let index = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, b)| (b, i))
            .collect();
        Self { basis, index }
    }

    fn coordinates(&self, p: &Polynomial) -> Row {
        let mut v = vec![GaussianRational::zero(); self.basis.len()];
        for (mono, c) in p.terms() {
            v[self.index[mono]] = c.clone();
        }
        v
    }
}

impl SubspaceBasis {
    /// Span of the given coordinate vectors in `V_m`.
    pub fn from_vectors(m: u32, n: usize, vectors: Vec<Row>) -> Self {
        let dim = homogeneous_dimension(n, m);
        let rows = linalg::rref(vectors, dim).0;
        Self { m, n, rows }
    }

    /// Span of homogeneous degree-`m` polynomials (zero allowed).
    pub fn from_polynomials(m: u32, n: usize, polys: &[Polynomial]) -> Result<Self> {
        let idx = MonomialIndex::new(n, m);
        let mut vecs = Vec::with_capacity(polys.len());
        for (k, p) in polys.iter().enumerate() {
            if p.n() != n {
                return Err(Error::VariableCountMismatch {
                    left: n,
                    right: p.n(),
                });
            }
            if !p.is_zero() && p.homogeneous_degree() != Some(m) {
                return Err(Error::NotHomogeneous {
                    what: format!("polynomial {k} as an element of V_{m}"),
                });
            }
            vecs.push(idx.coordinates(p));
        }
        Ok(Self::from_vectors(m, n, vecs))
    }

    pub fn full(m: u32, n: usize) -> Self {
        let dim = homogeneous_dimension(n, m);
        let rows = (0..dim)
            .map(|i| {
                let mut r = vec![GaussianRational::zero(); dim];
                r[i] = GaussianRational::one();
                r
            })
            .collect();
        Self { m, n, rows }
    }

    pub fn zero(m: u32, n: usize) -> Self {
        Self {
            m,
            n,
            rows: Vec::new(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        homogeneous_dimension(self.n, self.m)
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    /// Basis vectors as polynomials.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        let basis = monomials_of_degree(self.n, self.m);
        self.rows
            .iter()
            .map(|r| {
                let mut p = Polynomial::zero(self.n);
                for (mono, c) in basis.iter().zip(r) {
                    if !c.is_zero() {
                        p = &p + &Polynomial::term(mono.clone(), c.clone());
                    }
                }
                p
            })
            .collect()
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        let mut polys = self.polynomials();
        polys.push(p.clone());
        Ok(SubspaceBasis::from_polynomials(self.m, self.n, &polys)?.dim() == self.dim())
    }
}

fn check_generators(n: usize, generators: &[Polynomial]) -> Result<Vec<u32>> {
    generators
        .iter()
        .enumerate()
        .map(|(k, g)| {
            if g.n() != n {
                return Err(Error::VariableCountMismatch {
                    left: n,
                    right: g.n(),
                });
            }
            match g.homogeneous_degree() {
                Some(d) if d >= 1 => Ok(d),
                Some(_) => Err(Error::NotHomogeneous {
                    what: format!("generator {} (`{g}`, a constant)", k + 1),
                }),
                None => Err(Error::NotHomogeneous {
                    what: format!("generator {} (`{g}`)", k + 1),
                }),
            }
        })
        .collect()
}

/// `I_m`: span of `z^β g_i` over `|β| = m - d_i`.
pub fn ideal_graded_piece(n: usize, generators: &[Polynomial], m: u32) -> Result<SubspaceBasis> {
    let degrees = check_generators(n, generators)?;
    let idx = MonomialIndex::new(n, m);
    let mut vecs = Vec::new();
    for (g, &d) in generators.iter().zip(&degrees) {
        if d > m {
            continue;
        }
        for beta in monomials_of_degree(n, m - d) {
            vecs.push(idx.coordinates(&g.mul_monomial(&beta, &GaussianRational::one())));
        }
    }
    Ok(SubspaceBasis::from_vectors(m, n, vecs))
}

/// Complement of `basis` in `V_m` under the apolar form.
///
/// The Gram matrix is `diag(α!)`, so this is the kernel of the basis matrix
/// with column `α` scaled by `α!`.
pub fn orthogonal_complement(basis: &SubspaceBasis) -> SubspaceBasis {
    let weights: Vec<GaussianRational> = apolar_weights(basis.n, basis.m)
        .into_iter()
        .map(GaussianRational::from_bigint)
        .collect();
    let scaled: Vec<Row> = basis
        .rows
        .iter()
        .map(|r| r.iter().zip(&weights).map(|(x, w)| x * w).collect())
        .collect();
    let rows = linalg::kernel(scaled, weights.len());
    SubspaceBasis {
        m: basis.m,
        n: basis.n,
        rows,
    }
}

/// `S_m = { u ∈ V_m : g_i(D) u = 0 for all i }` as the joint kernel of the
/// linear maps `V_m → V_{m-d_i}`.
pub fn pde_solution_slice(n: usize, generators: &[Polynomial], m: u32) -> Result<SubspaceBasis> {
    let degrees = check_generators(n, generators)?;
    let source = monomials_of_degree(n, m);
    let mut stacked: Vec<Row> = Vec::new();
    for (g, &d) in generators.iter().zip(&degrees) {
        if d > m {
            continue;
        }
        let target = MonomialIndex::new(n, m - d);
        let mut block = vec![vec![GaussianRational::zero(); source.len()]; target.basis.len()];
        for (col, alpha) in source.iter().enumerate() {
            let image = apply_diffop(g, &Polynomial::term(alpha.clone(), GaussianRational::one()))?;
            for (mono, c) in image.terms() {
                block[target.index[mono]][col] = c.clone();
            }
        }
        stacked.extend(block);
    }
    let rows = linalg::kernel(stacked, source.len());
    Ok(SubspaceBasis { m, n, rows })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CertificateStatus {
    NoCommonZero,
    CommonZeroExistsLikely,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertValue {
    pub m: u32,
    pub dim_ideal: usize,
    pub dim_slice: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub status: CertificateStatus,
    /// First `M` with `I_M = V_M`.
    pub saturation_degree: Option<u32>,
    pub probe_degree_reached: u32,
    pub default_bound: u32,
    /// `(m, dim I_m, dim V_m)` for every probed degree, including `M + 1`
    /// when saturation was found.
    pub hilbert_values: Vec<HilbertValue>,
}

/// `1 + Σ (d_i - 1)` over the `min(k, n)` largest generator degrees.
pub fn default_probe_bound(n: usize, degrees: &[u32]) -> u32 {
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    1 + sorted
        .iter()
        .take(n.min(sorted.len()))
        .map(|d| d - 1)
        .sum::<u32>()
}

/// Probes `dim I_m` upward from `m = 0` until `I_M = V_M` or the bound.
///
/// On saturation the next degree is probed as well and must also be
/// saturated. Without saturation the status is `COMMON_ZERO_EXISTS_LIKELY`
/// when the default bound was reached, `INCONCLUSIVE` otherwise.
pub fn common_zero_certificate(
    n: usize,
    generators: &[Polynomial],
    max_degree: Option<u32>,
) -> Result<Certificate> {
    let degrees = check_generators(n, generators)?;
    let default_bound = default_probe_bound(n, &degrees);
    let bound = max_degree.unwrap_or(default_bound);
    let mut hilbert_values = Vec::new();
    for m in 0..=bound {
        let dim_ideal = ideal_graded_piece(n, generators, m)?.dim();
        let dim_slice = homogeneous_dimension(n, m);
        hilbert_values.push(HilbertValue {
            m,
            dim_ideal,
            dim_slice,
        });
        if dim_ideal == dim_slice {
            let next = ideal_graded_piece(n, generators, m + 1)?.dim();
            let next_slice = homogeneous_dimension(n, m + 1);
            hilbert_values.push(HilbertValue {
                m: m + 1,
                dim_ideal: next,
                dim_slice: next_slice,
            });
            if next != next_slice {
                return Err(Error::Inconsistent(format!(
                    "I_{m} = V_{m} but dim I_{} = {next} < {next_slice}",
                    m + 1
                )));
            }
            return Ok(Certificate {
                status: CertificateStatus::NoCommonZero,
                saturation_degree: Some(m),
                probe_degree_reached: m + 1,
                default_bound,
                hilbert_values,
            });
        }
    }
    let status = if bound >= default_bound {
        CertificateStatus::CommonZeroExistsLikely
    } else {
        CertificateStatus::Inconclusive
    };
    Ok(Certificate {
        status,
        saturation_degree: None,
        probe_degree_reached: bound,
        default_bound,
        hilbert_values,
    })
}

/// True iff `w ≠ 0` and every generator vanishes at `w`.
pub fn confirm_common_zero(generators: &[Polynomial], w: &[GaussianRational]) -> Result<bool> {
    if w.iter().all(GaussianRational::is_zero) {
        return Err(Error::ZeroWitness);
    }
    for g in generators {
        if !g.evaluate(w)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `α!` weights of the monomial basis of `V_m`, in basis order.
pub fn apolar_weights(n: usize, m: u32) -> Vec<BigInt> {
    monomials_of_degree(n, m)
        .iter()
        .map(Monomial::factorial)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_polynomial;

    fn gens(src: &[&str], n: usize) -> Vec<Polynomial> {
        src.iter()
            .map(|s| parse_polynomial(s, Some(n)).unwrap())
            .collect()
    }

    fn span(m: u32, n: usize, src: &[&str]) -> SubspaceBasis {
        SubspaceBasis::from_polynomials(m, n, &gens(src, n)).unwrap()
    }

    #[test]
    fn ideal_piece_examples() {
        let g = gens(&["z1^2", "z2^2"], 2);
        let i3 = ideal_graded_piece(2, &g, 3).unwrap();
        assert_eq!(i3, SubspaceBasis::full(3, 2));
        let i2 = ideal_graded_piece(2, &g, 2).unwrap();
        assert_eq!((i2.dim(), i2.ambient_dim()), (2, 3));
        assert_eq!(i2, span(2, 2, &["z1^2", "z2^2"]));
        assert_eq!(ideal_graded_piece(2, &g, 1).unwrap().dim(), 0);
        assert_eq!(ideal_graded_piece(2, &g, 0).unwrap().dim(), 0);
    }

    #[test]
    fn complement_examples() {
        for m in 0..4 {
            assert_eq!(orthogonal_complement(&SubspaceBasis::full(m, 3)).dim(), 0);
            assert_eq!(
                orthogonal_complement(&SubspaceBasis::zero(m, 3)),
                SubspaceBasis::full(m, 3)
            );
        }
        let i2 = ideal_graded_piece(2, &gens(&["z1^2", "z2^2"], 2), 2).unwrap();
        assert_eq!(orthogonal_complement(&i2), span(2, 2, &["z1*z2"]));
    }

    #[test]
    fn complement_uses_factorial_weights() {
        // B_2(z1^2 + z1*z2, u) = 2·u_20 + u_11.
        let b = span(2, 2, &["z1^2 + z1*z2"]);
        let c = orthogonal_complement(&b);
        assert_eq!(c, span(2, 2, &["z1^2 - 2*z1*z2", "z2^2"]));
    }

    #[test]
    fn solution_slice_examples() {
        let s = pde_solution_slice(2, &[Polynomial::sigma2(2)], 2).unwrap();
        assert_eq!(s, span(2, 2, &["z1^2 - z2^2", "z1*z2"]));

        let z1 = gens(&["z1"], 3);
        for m in 0..5 {
            let s = pde_solution_slice(3, &z1, m).unwrap();
            assert_eq!(s.dim(), homogeneous_dimension(2, m));
            for p in s.polynomials() {
                assert!(p.partial(0).unwrap().is_zero());
            }
        }

        let s = pde_solution_slice(2, &gens(&["z1^2", "z1*z2"], 2), 3).unwrap();
        assert_eq!(s, span(3, 2, &["z2^3"]));
    }

    #[test]
    fn claim_on_examples() {
        let g = gens(&["z1^2 + i*z2*z3", "z1*z2 - z3^2"], 3);
        for m in 0..6 {
            let i = ideal_graded_piece(3, &g, m).unwrap();
            let s = pde_solution_slice(3, &g, m).unwrap();
            assert_eq!(orthogonal_complement(&i), s, "m = {m}");
            assert_eq!(i.dim() + s.dim(), homogeneous_dimension(3, m));
        }
    }

    #[test]
    fn certificate_examples() {
        let c = common_zero_certificate(2, &gens(&["z1^2", "z2^2"], 2), None).unwrap();
        assert_eq!(c.status, CertificateStatus::NoCommonZero);
        assert_eq!(c.saturation_degree, Some(3));
        assert_eq!(c.default_bound, 3);
        let last = c.hilbert_values.last().unwrap();
        assert_eq!((last.m, last.dim_ideal, last.dim_slice), (4, 5, 5));

        let g = gens(&["z1^2", "z1*z2"], 2);
        let c = common_zero_certificate(2, &g, None).unwrap();
        assert_eq!(c.status, CertificateStatus::CommonZeroExistsLikely);
        assert_eq!(c.saturation_degree, None);
        let w = [GaussianRational::zero(), GaussianRational::one()];
        assert!(confirm_common_zero(&g, &w).unwrap());
        let c = common_zero_certificate(2, &g, Some(1)).unwrap();
        assert_eq!(c.status, CertificateStatus::Inconclusive);
        let c = common_zero_certificate(2, &g, Some(8)).unwrap();
        assert_eq!(c.status, CertificateStatus::CommonZeroExistsLikely);

        let fermat = gens(&["3*z1^2", "3*z2^2", "3*z3^2"], 3);
        let c = common_zero_certificate(3, &fermat, None).unwrap();
        assert_eq!(c.status, CertificateStatus::NoCommonZero);
        assert_eq!(c.saturation_degree, Some(4));
    }

    #[test]
    fn certificate_without_generators() {
        let c = common_zero_certificate(2, &[], None).unwrap();
        assert_eq!(c.status, CertificateStatus::CommonZeroExistsLikely);
        assert_eq!(
            pde_solution_slice(2, &[], 3).unwrap(),
            SubspaceBasis::full(3, 2)
        );
    }

    #[test]
    fn rejects_bad_generators() {
        let bad = gens(&["z1^2 + z2"], 2);
        assert!(matches!(
            ideal_graded_piece(2, &bad, 2),
            Err(Error::NotHomogeneous { .. })
        ));
        assert!(matches!(
            pde_solution_slice(2, &bad, 2),
            Err(Error::NotHomogeneous { .. })
        ));
        assert!(matches!(
            common_zero_certificate(2, &bad, None),
            Err(Error::NotHomogeneous { .. })
        ));
        assert!(ideal_graded_piece(2, &gens(&["3"], 2), 1).is_err());
        assert_eq!(
            confirm_common_zero(
                &gens(&["z1"], 2),
                &[GaussianRational::zero(), GaussianRational::zero()]
            ),
            Err(Error::ZeroWitness)
        );
    }

    #[test]
    fn membership() {
        let b = span(2, 2, &["z1^2 - z2^2", "z1*z2"]);
        assert!(b
            .contains(&parse_polynomial("3*z1*z2 + z1^2 - z2^2", Some(2)).unwrap())
            .unwrap());
        assert!(!b
            .contains(&parse_polynomial("z1^2", Some(2)).unwrap())
            .unwrap());
    }
}
