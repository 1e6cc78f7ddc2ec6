//! Concrete polynomial families for test corpora.
//!
//! * `ISOTROPIC_POWER`: `(a·z)^d` with `Σ a_i² = 0`. Its Hessian is
//!   `d(d-1)(a·z)^{d-2} a aᵀ`, rank one with zero trace.
//! * `ORTHO_ISOTROPIC_SUM`: `Σ c_j (a_j·z)^d` with `a_j·a_k = 0` for all
//!   `j, k` (the dot product is bilinear, no conjugation).
//! * `RANDOM_HOMOGENEOUS`: negative controls, see [`random_homogeneous`].
//!
//! Nothing here is trusted to be HN; callers verify with
//! [`crate::hn::is_hn_checked`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::GaussianRational;
use crate::poly::{monomials_of_degree, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FamilyKind {
    IsotropicPower,
    OrthoIsotropicSum,
    RandomHomogeneous,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: usize,
    pub d: u32,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub directions: Vec<Vec<GaussianRational>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub coefficients: Vec<GaussianRational>,
    #[serde(default)]
    pub seed: u64,
}

impl FamilySpec {
    pub fn isotropic(direction: Vec<GaussianRational>, d: u32) -> Self {
        Self {
            kind: FamilyKind::IsotropicPower,
            n: direction.len(),
            d,
            directions: vec![direction],
            coefficients: Vec::new(),
            seed: 0,
        }
    }

    pub fn ortho_sum(
        directions: Vec<Vec<GaussianRational>>,
        coefficients: Vec<GaussianRational>,
        d: u32,
    ) -> Self {
        Self {
            kind: FamilyKind::OrthoIsotropicSum,
            n: directions.first().map_or(0, Vec::len),
            d,
            directions,
            coefficients,
            seed: 0,
        }
    }

    pub fn random(n: usize, d: u32, seed: u64) -> Self {
        Self {
            kind: FamilyKind::RandomHomogeneous,
            n,
            d,
            directions: Vec::new(),
            coefficients: Vec::new(),
            seed,
        }
    }

    /// Whether the family is constructed to be HN.
    pub fn intended_hn(&self) -> bool {
        self.kind != FamilyKind::RandomHomogeneous
    }

    pub fn build(&self) -> Result<Polynomial> {
        for (k, a) in self.directions.iter().enumerate() {
            if a.len() != self.n {
                return Err(Error::InvalidFamily(format!(
                    "direction {k} has {} entries, expected n = {}",
                    a.len(),
                    self.n
                )));
            }
        }
        match self.kind {
            FamilyKind::IsotropicPower => {
                let [a] = self.directions.as_slice() else {
                    return Err(Error::InvalidFamily(
                        "ISOTROPIC_POWER takes exactly one direction".into(),
                    ));
                };
                let p = isotropic_power(a, self.d)?;
                Ok(match self.coefficients.as_slice() {
                    [] => p,
                    [c] => p.scale(c),
                    _ => return Err(Error::InvalidFamily("at most one coefficient".into())),
                })
            }
            FamilyKind::OrthoIsotropicSum => {
                let coeffs = if self.coefficients.is_empty() {
                    vec![GaussianRational::one(); self.directions.len()]
                } else {
                    self.coefficients.clone()
                };
                ortho_isotropic_sum(&self.directions, &coeffs, self.d)
            }
            FamilyKind::RandomHomogeneous => {
                if self.n == 0 {
                    return Err(Error::InvalidFamily("n must be at least 1".into()));
                }
                Ok(random_homogeneous(self.n, self.d, self.seed))
            }
        }
    }
}

/// Bilinear dot product `Σ a_i b_i`.
pub fn dot(a: &[GaussianRational], b: &[GaussianRational]) -> GaussianRational {
    a.iter()
        .zip(b)
        .fold(GaussianRational::zero(), |acc, (x, y)| &acc + &(x * y))
}

/// `(a·z)^d` for an isotropic `a`.
pub fn isotropic_power(a: &[GaussianRational], d: u32) -> Result<Polynomial> {
    if a.is_empty() || a.iter().all(GaussianRational::is_zero) {
        return Err(Error::InvalidFamily("direction must be nonzero".into()));
    }
    if d < 2 {
        return Err(Error::InvalidFamily(format!("degree {d} < 2")));
    }
    let q = dot(a, a);
    if !q.is_zero() {
        return Err(Error::NotIsotropic(q.to_string()));
    }
    Ok(Polynomial::linear_form(a).pow(d))
}

/// `Σ c_j (a_j·z)^d` over pairwise orthogonal isotropic directions.
pub fn ortho_isotropic_sum(
    directions: &[Vec<GaussianRational>],
    coefficients: &[GaussianRational],
    d: u32,
) -> Result<Polynomial> {
    if directions.is_empty() {
        return Err(Error::InvalidFamily(
            "at least one direction required".into(),
        ));
    }
    if directions.len() != coefficients.len() {
        return Err(Error::InvalidFamily(format!(
            "{} directions but {} coefficients",
            directions.len(),
            coefficients.len()
        )));
    }
    let n = directions[0].len();
    if directions.iter().any(|a| a.len() != n) {
        return Err(Error::InvalidFamily("directions differ in length".into()));
    }
    for j in 0..directions.len() {
        for k in j..directions.len() {
            if dot(&directions[j], &directions[k]).is_zero() {
                continue;
            }
            return Err(if j == k {
                Error::NotIsotropic(dot(&directions[j], &directions[j]).to_string())
            } else {
                Error::NotOrthogonal(j, k)
            });
        }
    }
    let mut acc = Polynomial::zero(n);
    for (a, c) in directions.iter().zip(coefficients) {
        acc = &acc + &isotropic_power(a, d)?.scale(c);
    }
    Ok(acc)
}

/// SplitMix64 finaliser.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic pseudo-random homogeneous polynomial of degree `d`.
///
/// For the `j`-th monomial of `V_d` (graded-lex descending, `j` from 0) let
/// `h = splitmix64(seed ^ splitmix64(j))`; the coefficient is
/// `(h mod 7 - 3) + (⌊h / 2³²⌋ mod 7 - 3)·i`.
pub fn random_homogeneous(n: usize, d: u32, seed: u64) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for (j, mono) in monomials_of_degree(n, d).into_iter().enumerate() {
        let h = splitmix64(seed ^ splitmix64(j as u64));
        let re = (h % 7) as i64 - 3;
        let im = ((h >> 32) % 7) as i64 - 3;
        p = &p + &Polynomial::term(mono, GaussianRational::from_ints(re, im));
    }
    p
}

fn v(entries: &[(i64, i64)]) -> Vec<GaussianRational> {
    entries
        .iter()
        .map(|&(re, im)| GaussianRational::from_ints(re, im))
        .collect()
}

/// Directions, coefficients and degree, as integer pairs `(re, im)`.
type SumSpec = (Vec<Vec<(i64, i64)>>, Vec<(i64, i64)>, u32);

/// The built-in HN corpus: isotropic powers and orthogonal isotropic sums
/// with `n ≤ 6` and `2 ≤ d ≤ 5`.
pub fn standard_corpus() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    // (direction, max degree); wider supports get lower degrees to keep the
    // Laplacian cross-check fast.
    let directions: Vec<(Vec<(i64, i64)>, u32)> = vec![
        (vec![(1, 0), (0, 1)], 5),
        (vec![(1, 0), (0, -1)], 5),
        (vec![(2, 1), (-1, 2)], 5),
        (vec![(3, 0), (4, 0), (0, 5)], 5),
        (vec![(1, 1), (1, -1), (0, 0)], 5),
        (vec![(5, 0), (12, 0), (0, 13)], 4),
        (vec![(0, 0), (1, 0), (0, -1)], 5),
        (vec![(1, 0), (2, 0), (2, 0), (0, 3)], 4),
        (vec![(1, 0), (0, 1), (1, 0), (0, 1)], 4),
        (vec![(1, 1), (1, -1), (1, 0), (0, 1)], 3),
        (vec![(1, 0), (1, 0), (3, 0), (5, 0), (0, 6)], 3),
        (vec![(0, 0), (1, 0), (0, 0), (0, 1), (0, 0)], 5),
        (vec![(1, 0), (1, 0), (1, 0), (1, 0), (0, 2), (0, 0)], 3),
        (vec![(0, 0), (0, 0), (3, 0), (0, 0), (4, 0), (0, 5)], 4),
    ];
    for (a, max_d) in directions {
        for d in 2..=max_d {
            out.push(FamilySpec::isotropic(v(&a), d));
        }
    }
    let sums: Vec<SumSpec> = vec![
        (
            vec![
                vec![(1, 0), (0, 1), (0, 0), (0, 0)],
                vec![(0, 0), (0, 0), (1, 0), (0, 1)],
            ],
            vec![(1, 0), (2, -1)],
            5,
        ),
        (
            vec![
                vec![(1, 0), (0, 1), (1, 0), (0, 1)],
                vec![(1, 0), (0, 1), (-1, 0), (0, -1)],
            ],
            vec![(1, 0), (-3, 0)],
            4,
        ),
        (
            vec![
                vec![(1, 0), (0, 1), (0, 0), (0, 0), (0, 0), (0, 0)],
                vec![(0, 0), (0, 0), (1, 0), (0, 1), (0, 0), (0, 0)],
                vec![(0, 0), (0, 0), (0, 0), (0, 0), (1, 0), (0, -1)],
            ],
            vec![(1, 0), (1, 0), (0, 1)],
            3,
        ),
        (
            vec![
                vec![(3, 0), (4, 0), (0, 5), (0, 0), (0, 0)],
                vec![(0, 0), (0, 0), (0, 0), (1, 0), (0, 1)],
            ],
            vec![(1, 0), (1, 1)],
            3,
        ),
    ];
    for (dirs, coeffs, max_d) in sums {
        for d in 2..=max_d {
            out.push(FamilySpec::ortho_sum(
                dirs.iter().map(|a| v(a)).collect(),
                v(&coeffs),
                d,
            ));
        }
    }
    out
}
