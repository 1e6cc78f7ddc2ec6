//! Hessian nilpotency and the vanishing experiments built on it.
//!
//! A polynomial `P` in `n` variables is Hessian nilpotent (HN) when its
//! Hessian matrix is nilpotent. The default decision route computes
//! `(Hes P)^n` exactly; the Laplacian route checks `Δ^m P^m = 0` for
//! `1 ≤ m ≤ n` and is used as an independent cross-check.
//!
//! Every "for all large m" statement here is turned into an explicit cap
//! chosen by the caller. Nothing in this module concludes non-vanishing
//! from a finite prefix.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::diffop::{apply_diffop, gradient, hessian, laplacian, laplacian_power};
use crate::error::{Error, Result};
use crate::field::GaussianRational;
use crate::graded::{common_zero_certificate, Certificate, CertificateStatus, SubspaceBasis};
use crate::matrix::PolyMatrix;
use crate::poly::{factorial, monomials_of_degree, Monomial, Polynomial};

/// `(Hes P)^n == 0`.
pub fn is_hn(p: &Polynomial) -> bool {
    let n = p.n();
    if n == 0 {
        return true;
    }
    hessian(p)
        .power_is_zero(n as u32)
        .expect("Hessian is square")
}

/// Outcome of the Laplacian route: `Δ^m P^m` for `m = 1..=n`, stopping at
/// the first order that does not vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LaplacianRoute {
    pub all_vanish: bool,
    pub orders_checked: u32,
    pub first_nonvanishing_order: Option<u32>,
}

pub fn laplacian_route(p: &Polynomial) -> LaplacianRoute {
    let n = p.n() as u32;
    let mut power = Polynomial::one(p.n());
    for m in 1..=n {
        power = &power * p;
        if !laplacian_power(&power, m).is_zero() {
            return LaplacianRoute {
                all_vanish: false,
                orders_checked: m,
                first_nonvanishing_order: Some(m),
            };
        }
    }
    LaplacianRoute {
        all_vanish: true,
        orders_checked: n,
        first_nonvanishing_order: None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HnCheck {
    pub hn: bool,
    pub matrix_route: bool,
    pub laplacian_route: LaplacianRoute,
}

/// HN decision by both routes; disagreement is reported as an error since it
/// can only come from a bug.
pub fn is_hn_checked(p: &Polynomial) -> Result<HnCheck> {
    let matrix_route = is_hn(p);
    let lap = laplacian_route(p);
    if matrix_route != lap.all_vanish {
        return Err(Error::Inconsistent(format!(
            "HN routes disagree on `{p}`: matrix {matrix_route}, laplacian {}",
            lap.all_vanish
        )));
    }
    Ok(HnCheck {
        hn: matrix_route,
        matrix_route,
        laplacian_route: lap,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishRow {
    pub m: u32,
    /// Degree of `Δ^m(f·P^m)`, absent when it is zero.
    pub degree: Option<u32>,
    pub is_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishReport {
    pub p: Polynomial,
    pub f: Polynomial,
    /// True when `f` was defaulted to `P`, so rows are `Δ^m P^{m+1}`.
    pub f_is_p: bool,
    pub rows: Vec<VanishRow>,
    /// Least `m*` such that every probed row `m ≥ m*` is zero.
    pub first_all_zero_from: Option<u32>,
    /// Least `N ≥ 0` such that every probed row `m > N` is zero.
    pub threshold_n: Option<u32>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum VanishMode {
    /// Each row computes `f·P^m` from scratch; rows run in parallel.
    #[default]
    Fresh,
    /// Reuses `P^m = P^{m-1}·P` across rows, sequentially.
    Incremental,
}

fn vanish_row(m: u32, product: &Polynomial) -> VanishRow {
    let v = laplacian_power(product, m);
    VanishRow {
        m,
        degree: v.degree(),
        is_zero: v.is_zero(),
    }
}

/// `Δ^m(f·P^m)` for `0 ≤ m ≤ m_max`; `f` defaults to `P`.
pub fn vanish_experiment(
    p: &Polynomial,
    f: Option<&Polynomial>,
    m_max: u32,
    mode: VanishMode,
) -> Result<VanishReport> {
    let f_is_p = f.is_none();
    let f = f.unwrap_or(p).clone();
    if f.n() != p.n() {
        return Err(Error::VariableCountMismatch {
            left: p.n(),
            right: f.n(),
        });
    }
    let rows: Vec<VanishRow> = match mode {
        VanishMode::Fresh => (0..=m_max)
            .into_par_iter()
            .map(|m| vanish_row(m, &(&f * &p.pow(m))))
            .collect(),
        VanishMode::Incremental => {
            let mut product = f.clone();
            let mut rows = Vec::with_capacity(m_max as usize + 1);
            for m in 0..=m_max {
                if m > 0 {
                    product = &product * p;
                }
                rows.push(vanish_row(m, &product));
            }
            rows
        }
    };
    let first_all_zero_from = rows
        .iter()
        .rposition(|r| !r.is_zero)
        .map_or(Some(0), |last| {
            let next = last as u32 + 1;
            (next <= m_max).then_some(next)
        });
    Ok(VanishReport {
        p: p.clone(),
        f,
        f_is_p,
        rows,
        first_all_zero_from,
        threshold_n: first_all_zero_from.map(|m| m.saturating_sub(1)),
    })
}

/// `m! / (k1! k2! k3!)`.
fn multinomial(parts: &[u32]) -> BigInt {
    let total: u32 = parts.iter().sum();
    parts
        .iter()
        .fold(factorial(total), |acc, &k| acc / factorial(k))
}

/// Right-hand side of the expansion of `Δ^m(f·P^m)`:
///
/// `Σ_{k1+k2+k3=m} 2^{k2} C(m; k1,k2,k3) Σ_{|s|=k2} C(k2; s)
///   ∂^s Δ^{k1} f · ∂^s Δ^{k3} P^m`.
pub fn expansion_rhs(f: &Polynomial, p: &Polynomial, m: u32) -> Result<Polynomial> {
    if f.n() != p.n() {
        return Err(Error::VariableCountMismatch {
            left: f.n(),
            right: p.n(),
        });
    }
    let n = p.n();
    let pm = p.pow(m);
    let mut lap_f = vec![f.clone()];
    let mut lap_p = vec![pm];
    for k in 1..=m as usize {
        lap_f.push(laplacian(&lap_f[k - 1]));
        lap_p.push(laplacian(&lap_p[k - 1]));
    }
    let multi_indices: Vec<Vec<Monomial>> = (0..=m).map(|k| monomials_of_degree(n, k)).collect();
    let mut acc = Polynomial::zero(n);
    for k1 in 0..=m {
        for k2 in 0..=(m - k1) {
            let k3 = m - k1 - k2;
            let (a, b) = (&lap_f[k1 as usize], &lap_p[k3 as usize]);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let outer = multinomial(&[k1, k2, k3]) << k2;
            for s in &multi_indices[k2 as usize] {
                let da = a.partial_multi(s)?;
                if da.is_zero() {
                    continue;
                }
                let db = b.partial_multi(s)?;
                if db.is_zero() {
                    continue;
                }
                let coeff = &outer * multinomial(s.exps());
                acc = &acc + &(&da * &db).scale(&GaussianRational::from_bigint(coeff));
            }
        }
    }
    Ok(acc)
}

/// Compares [`expansion_rhs`] with `Δ^m(f·P^m)` computed directly.
pub fn expansion_identity_check(f: &Polynomial, p: &Polynomial, m: u32) -> Result<bool> {
    if m == 0 {
        return Err(Error::InvalidArgument("expansion needs m ≥ 1".into()));
    }
    let direct = laplacian_power(&f.try_mul(&p.pow(m))?, m);
    Ok(expansion_rhs(f, p, m)? == direct)
}

fn require_homogeneous_hn(p: &Polynomial) -> Result<u32> {
    let d = p
        .homogeneous_degree()
        .ok_or_else(|| Error::NotHomogeneous {
            what: format!("`{p}`"),
        })?;
    if !is_hn(p) {
        return Err(Error::NotHessianNilpotent);
    }
    Ok(d)
}

/// Generators of the ideal `(∂P/∂z_1, ..., ∂P/∂z_n, σ₂)`.
///
/// Generators of equal degree are replaced by a reduced basis of their span,
/// which leaves the ideal unchanged but keeps the saturation probe small
/// when the partials are highly dependent (isotropic powers have a single
/// independent partial). Degrees are listed in descending order.
pub fn theorem1_generators(p: &Polynomial) -> Vec<Polynomial> {
    let n = p.n();
    let mut raw: Vec<Polynomial> = gradient(p).into_iter().filter(|g| !g.is_zero()).collect();
    raw.push(Polynomial::sigma2(n));
    if raw.iter().any(|g| !g.is_homogeneous()) {
        return raw;
    }
    let mut degrees: Vec<u32> = raw
        .iter()
        .filter_map(Polynomial::homogeneous_degree)
        .collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    degrees.dedup();
    let mut gens = Vec::new();
    for d in degrees {
        let group: Vec<Polynomial> = raw
            .iter()
            .filter(|g| g.homogeneous_degree() == Some(d))
            .cloned()
            .collect();
        let basis = SubspaceBasis::from_polynomials(d, n, &group)
            .expect("group is homogeneous of degree d");
        gens.extend(basis.polynomials());
    }
    gens
}

/// Checks that `u = Δ^m P^{m+1}` solves `∂P/∂z_i(D) u = 0` for all `i` and
/// `Δ u = 0`.
pub fn membership_in_s(p: &Polynomial, m: u32) -> Result<bool> {
    require_homogeneous_hn(p)?;
    let u = laplacian_power(&p.pow(m + 1), m);
    if u.is_zero() {
        return Ok(true);
    }
    for g in theorem1_generators(p) {
        if !apply_diffop(&g, &u)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem1Certificate {
    pub degree: u32,
    pub generators: Vec<Polynomial>,
    pub base: Certificate,
    /// Least `m₀` with `(d-2)m₀ + d ≥ M`, present iff the base certificate
    /// is `NO_COMMON_ZERO`.
    pub vanishing_bound: Option<u32>,
    /// Orders at which `Δ^m P^{m+1} = 0` was confirmed directly.
    pub verified_vanishing: Vec<u32>,
}

/// Runs the saturation certificate on `{∂P/∂z_i} ∪ {σ₂}`; when it saturates
/// at `M`, derives the order beyond which `Δ^m P^{m+1}` has degree at least
/// `M` and must therefore vanish, and confirms three orders directly.
pub fn certify_theorem1(p: &Polynomial, max_degree: Option<u32>) -> Result<Theorem1Certificate> {
    let d = require_homogeneous_hn(p)?;
    if d < 2 {
        return Err(Error::DegreeOutOfRange(d));
    }
    let generators = theorem1_generators(p);
    let base = common_zero_certificate(p.n(), &generators, max_degree)?;
    let mut vanishing_bound = None;
    let mut verified_vanishing = Vec::new();
    if base.status == CertificateStatus::NoCommonZero {
        let sat = base
            .saturation_degree
            .expect("NO_COMMON_ZERO carries a degree");
        let m0 = if d == 2 {
            if sat > 2 {
                return Err(Error::Inconsistent(
                    "quadratic P saturated above degree 2; degrees never reach it".into(),
                ));
            }
            0
        } else {
            sat.saturating_sub(d).div_ceil(d - 2)
        };
        for m in m0..m0 + 3 {
            if !laplacian_power(&p.pow(m + 1), m).is_zero() {
                return Err(Error::Inconsistent(format!(
                    "Δ^{m} P^{} is nonzero beyond the certified bound {m0}",
                    m + 1
                )));
            }
            verified_vanishing.push(m);
        }
        vanishing_bound = Some(m0);
    }
    Ok(Theorem1Certificate {
        degree: d,
        generators,
        base,
        vanishing_bound,
        verified_vanishing,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdReport {
    /// Least `N` such that `Δ^m P^{m+b} = 0` for `0 ≤ b ≤ deg f` and every
    /// probed `m ∈ (N, N + slack]`.
    pub threshold_n: u32,
    pub f_degree: u32,
    /// Orders `m ∈ (deg f + N, deg f + N + 3]` at which `Δ^m(f·P^m) = 0`
    /// was confirmed.
    pub verified: Vec<u32>,
}

/// Searches for the threshold `N` with `m ≤ cap` and confirms that
/// `Δ^m(f·P^m)` vanishes on a sample beyond `deg f + N`.
pub fn theorem2_threshold(
    p: &Polynomial,
    f: &Polynomial,
    cap: u32,
    slack: u32,
) -> Result<ThresholdReport> {
    if f.n() != p.n() {
        return Err(Error::VariableCountMismatch {
            left: p.n(),
            right: f.n(),
        });
    }
    if slack == 0 {
        return Err(Error::InvalidArgument("slack must be positive".into()));
    }
    if !is_hn(p) {
        return Err(Error::NotHessianNilpotent);
    }
    let d = f.degree().unwrap_or(0);
    // zero[b][m] <=> Δ^m P^{m+b} = 0
    let zero: Vec<Vec<bool>> = (0..=d)
        .into_par_iter()
        .map(|b| {
            (0..=cap)
                .map(|m| laplacian_power(&p.pow(m + b), m).is_zero())
                .collect()
        })
        .collect();
    let window_ok =
        |n_thr: u32| (n_thr + 1..=n_thr + slack).all(|m| zero.iter().all(|row| row[m as usize]));
    let threshold_n = (0..)
        .take_while(|&n_thr| n_thr + slack <= cap)
        .find(|&n_thr| window_ok(n_thr))
        .ok_or_else(|| Error::SearchCapExhausted {
            cap: cap as usize,
            detail: format!("no run of {slack} vanishing orders for Δ^m P^(m+b), 0 ≤ b ≤ {d}"),
        })?;
    let mut verified = Vec::new();
    for m in d + threshold_n + 1..=d + threshold_n + 3 {
        if !laplacian_power(&(f * &p.pow(m)), m).is_zero() {
            return Err(Error::Inconsistent(format!(
                "Δ^{m}(f·P^{m}) is nonzero beyond deg f + N = {}",
                d + threshold_n
            )));
        }
        verified.push(m);
    }
    Ok(ThresholdReport {
        threshold_n,
        f_degree: d,
        verified,
    })
}

/// The map `F = z - ∇P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetricMap {
    pub p: Polynomial,
    pub components: Vec<Polynomial>,
}

impl SymmetricMap {
    pub fn n(&self) -> usize {
        self.p.n()
    }

    /// `(∂F_i/∂z_j)`, which equals `I - Hes P`.
    pub fn jacobian(&self) -> PolyMatrix {
        let n = self.n();
        let mut j = PolyMatrix::zeros(n, n, n);
        for (i, c) in self.components.iter().enumerate() {
            for k in 0..n {
                j.set(i, k, c.partial_unchecked(k));
            }
        }
        j
    }

    pub fn apply(&self, w: &[GaussianRational]) -> Result<Vec<GaussianRational>> {
        self.components.iter().map(|c| c.evaluate(w)).collect()
    }
}

pub fn symmetric_map(p: &Polynomial) -> SymmetricMap {
    let n = p.n();
    let components = gradient(p)
        .into_iter()
        .enumerate()
        .map(|(i, g)| &Polynomial::var(n, i).expect("index in range") - &g)
        .collect();
    SymmetricMap {
        p: p.clone(),
        components,
    }
}

/// `det (∂F_i/∂z_j)`.
pub fn jacobian_det(map: &SymmetricMap) -> Result<Polynomial> {
    if map.n() == 0 {
        return Ok(Polynomial::one(0));
    }
    map.jacobian().determinant()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointReport {
    pub fixed: bool,
    /// `σ₂(w) = 0`, i.e. `w` lies on the isotropic cone.
    pub on_isotropic_cone: bool,
    pub image: Vec<GaussianRational>,
}

/// Whether `F(w) = w` (equivalently `∇P(w) = 0`) for a nonzero `w`.
pub fn fixed_point_check(map: &SymmetricMap, w: &[GaussianRational]) -> Result<FixedPointReport> {
    if w.len() != map.n() {
        return Err(Error::PointLengthMismatch {
            expected: map.n(),
            got: w.len(),
        });
    }
    if w.iter().all(GaussianRational::is_zero) {
        return Err(Error::ZeroWitness);
    }
    let image = map.apply(w)?;
    let fixed = image == w;
    let on_isotropic_cone = Polynomial::sigma2(map.n()).evaluate(w)?.is_zero();
    Ok(FixedPointReport {
        fixed,
        on_isotropic_cone,
        image,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_polynomial;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, Some(n)).unwrap()
    }

    fn c(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    #[test]
    fn hn_examples() {
        assert!(is_hn_checked(&p("(z1+i*z2)^2", 2)).unwrap().hn);
        let s = is_hn_checked(&Polynomial::sigma2(2)).unwrap();
        assert!(!s.hn);
        assert_eq!(s.laplacian_route.first_nonvanishing_order, Some(1));
        assert!(is_hn_checked(&p("(z1+i*z2)^4", 2)).unwrap().hn);
        assert!(is_hn(&Polynomial::zero(3)));
        assert!(is_hn(&p("z1 + 3*z2", 2)));
    }

    #[test]
    fn vanish_isotropic_power() {
        let q = p("(z1+i*z2)^4", 2);
        let r = vanish_experiment(&q, None, 5, VanishMode::Fresh).unwrap();
        assert_eq!(r.rows.len(), 6);
        assert!(!r.rows[0].is_zero);
        assert!(r.rows[1..].iter().all(|row| row.is_zero));
        assert_eq!(r.first_all_zero_from, Some(1));
        assert_eq!(r.threshold_n, Some(0));
        assert!(r.f_is_p);
        let inc = vanish_experiment(&q, None, 5, VanishMode::Incremental).unwrap();
        assert_eq!(inc.rows, r.rows);
    }

    #[test]
    fn vanish_sigma2_never_vanishes() {
        for n in 1..4 {
            let s = Polynomial::sigma2(n);
            let r = vanish_experiment(&s, None, 3, VanishMode::Fresh).unwrap();
            assert!(r
                .rows
                .iter()
                .all(|row| !row.is_zero && row.degree == Some(2)));
            assert_eq!(r.first_all_zero_from, None);
            let once = laplacian(&s.pow(2));
            assert_eq!(once, s.scale(&GaussianRational::from(8 + 4 * n as i64)));
        }
    }

    #[test]
    fn vanish_mmax_zero_is_p() {
        let q = p("z1^3 + z2", 2);
        let r = vanish_experiment(&q, None, 0, VanishMode::Fresh).unwrap();
        assert_eq!(
            r.rows,
            vec![VanishRow {
                m: 0,
                degree: Some(3),
                is_zero: false
            }]
        );
        assert!(vanish_experiment(&q, Some(&p("z1", 1)), 2, VanishMode::Fresh).is_err());
    }

    #[test]
    fn expansion_small_cases() {
        let f = p("z1^2*z2 - i*z2 + 3", 2);
        let q = p("z1*z2 + (1-i)*z2^2 + z1", 2);
        for m in 1..=3 {
            assert!(expansion_identity_check(&f, &q, m).unwrap());
            assert!(expansion_identity_check(&Polynomial::one(2), &q, m).unwrap());
        }
        assert!(expansion_identity_check(&f, &q, 0).is_err());
        // Product rule written out for m = 1.
        let grad_dot = gradient(&f)
            .iter()
            .zip(gradient(&q))
            .fold(Polynomial::zero(2), |acc, (a, b)| &acc + &(a * &b));
        let m1 = &(&(&laplacian(&f) * &q) + &grad_dot.scale(&c(2, 0))) + &(&f * &laplacian(&q));
        assert_eq!(expansion_rhs(&f, &q, 1).unwrap(), m1);
    }

    #[test]
    fn membership_examples() {
        let q = p("(z1+i*z2)^4", 2);
        for m in 0..4 {
            assert!(membership_in_s(&q, m).unwrap());
        }
        assert_eq!(
            membership_in_s(&Polynomial::sigma2(2), 0),
            Err(Error::NotHessianNilpotent)
        );
        assert!(matches!(
            membership_in_s(&p("(z1+i*z2)^2 + z1", 2), 0),
            Err(Error::NotHomogeneous { .. })
        ));
    }

    #[test]
    fn generators_are_reduced_per_degree() {
        let gens = theorem1_generators(&p("(z1+i*z2)^4", 2));
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[0], p("z1^3 + 3i*z1^2*z2 - 3*z1*z2^2 - i*z2^3", 2));
        assert_eq!(gens[1], Polynomial::sigma2(2));
        // d = 3: partials and σ₂ share degree 2 and are reduced together.
        let gens = theorem1_generators(&p("z1^3 + z2^3 + z3^3", 3));
        assert_eq!(gens.len(), 3);
        assert!(gens.iter().all(|g| g.homogeneous_degree() == Some(2)));
    }

    #[test]
    fn certify_isotropic_power_hypothesis_fails() {
        let q = p("(z1+i*z2)^4", 2);
        let cert = certify_theorem1(&q, None).unwrap();
        assert_ne!(cert.base.status, CertificateStatus::NoCommonZero);
        assert_eq!(cert.vanishing_bound, None);
        let w = [c(1, 0), c(0, 1)];
        for g in &cert.generators {
            assert!(g.evaluate(&w).unwrap().is_zero());
        }
        assert!(certify_theorem1(&Polynomial::sigma2(2), None).is_err());
        assert!(certify_theorem1(&p("z1^3 + z2", 2), None).is_err());
    }

    #[test]
    fn threshold_examples() {
        let q = p("(z1+i*z2)^4", 2);
        let r = theorem2_threshold(&q, &p("z1", 2), 6, 3).unwrap();
        assert_eq!(r.threshold_n, 0);
        assert_eq!(r.f_degree, 1);
        assert_eq!(r.verified, vec![2, 3, 4]);
        let r = theorem2_threshold(&q, &p("5", 2), 6, 3).unwrap();
        assert_eq!((r.threshold_n, r.f_degree), (0, 0));
        assert_eq!(
            theorem2_threshold(&Polynomial::sigma2(2), &p("z1", 2), 6, 3),
            Err(Error::NotHessianNilpotent)
        );
        assert!(matches!(
            theorem2_threshold(&q, &p("z1", 2), 2, 3),
            Err(Error::SearchCapExhausted { .. })
        ));
    }

    #[test]
    fn symmetric_map_examples() {
        let id = symmetric_map(&Polynomial::zero(3));
        assert_eq!(id.components, vec![p("z1", 3), p("z2", 3), p("z3", 3)]);
        assert!(jacobian_det(&id).unwrap().is_one());

        let half = Polynomial::sigma2(3).scale(&GaussianRational::from_ratio(1, 2));
        let zero_map = symmetric_map(&half);
        assert!(zero_map.components.iter().all(Polynomial::is_zero));
        let fp = fixed_point_check(&zero_map, &[c(1, 0), c(0, 0), c(0, 0)]).unwrap();
        assert!(!fp.fixed);

        let q = p("(z1+i*z2)^2", 2);
        let f = symmetric_map(&q);
        assert_eq!(
            f.components,
            vec![p("z1 - 2*(z1+i*z2)", 2), p("z2 - 2i*(z1+i*z2)", 2)]
        );
        assert!(jacobian_det(&f).unwrap().is_one());
        assert_eq!(
            f.jacobian(),
            PolyMatrix::identity(2, 2).try_sub(&hessian(&q)).unwrap()
        );
    }

    #[test]
    fn sigma2_jacobian() {
        for n in 1..5 {
            let det = jacobian_det(&symmetric_map(&Polynomial::sigma2(n))).unwrap();
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(det, Polynomial::constant(n, c(sign, 0)));
        }
    }

    #[test]
    fn fixed_points() {
        let f = symmetric_map(&p("(z1+i*z2)^4", 2));
        let r = fixed_point_check(&f, &[c(1, 0), c(0, 1)]).unwrap();
        assert!(r.fixed && r.on_isotropic_cone);
        let r = fixed_point_check(&f, &[c(1, 0), c(0, 0)]).unwrap();
        assert!(!r.fixed && !r.on_isotropic_cone);
        assert_eq!(
            fixed_point_check(&f, &[c(0, 0), c(0, 0)]),
            Err(Error::ZeroWitness)
        );
    }
}
