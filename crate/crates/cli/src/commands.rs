use std::fmt::Write as _;
use std::ops::RangeInclusive;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use hnkit::families::{standard_corpus, FamilySpec};
use hnkit::graded::{
    common_zero_certificate, ideal_graded_piece, orthogonal_complement, pde_solution_slice,
    Certificate, CertificateStatus,
};
use hnkit::hn::{
    certify_theorem1, fixed_point_check, is_hn_checked, jacobian_det, symmetric_map,
    vanish_experiment, VanishMode,
};
use hnkit::poly::homogeneous_dimension;
use hnkit::text::{format_point, parse_point};
use hnkit::{parse_polynomial, Polynomial};

/// Bases larger than this are reported by dimension only.
const MAX_LISTED_BASIS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Success,
    Inconclusive,
}

pub struct Outcome {
    pub payload: Value,
    pub human: String,
    pub verdict: Verdict,
}

/// Parses every input with a shared variable count.
fn parse_all(inputs: &[&str], n: Option<usize>) -> Result<Vec<Polynomial>> {
    let n = match n {
        Some(n) => n,
        None => inputs
            .iter()
            .map(|s| parse_polynomial(s, None).map(|p| p.n()))
            .collect::<hnkit::Result<Vec<_>>>()?
            .into_iter()
            .max()
            .unwrap_or(1),
    };
    Ok(inputs
        .iter()
        .map(|s| parse_polynomial(s, Some(n)))
        .collect::<hnkit::Result<_>>()?)
}

fn parse_one(input: &str, n: Option<usize>) -> Result<Polynomial> {
    Ok(parse_all(&[input], n)?.remove(0))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("payload serialises")
}

pub fn check(input: &str, n: Option<usize>) -> Result<Outcome> {
    let p = parse_one(input, n)?;
    let chk = is_hn_checked(&p)?;
    let payload = json!({
        "polynomial": p.to_string(),
        "n": p.n(),
        "degree": p.degree(),
        "homogeneous": p.is_homogeneous(),
        "hn": chk.hn,
        "matrix_route": chk.matrix_route,
        "laplacian_route": to_value(&chk.laplacian_route),
    });
    let mut human = String::new();
    writeln!(human, "polynomial   {p}")?;
    writeln!(human, "n            {}", p.n())?;
    writeln!(
        human,
        "degree       {}",
        p.degree().map_or("-".into(), |d| d.to_string())
    )?;
    writeln!(human, "homogeneous  {}", p.is_homogeneous())?;
    writeln!(
        human,
        "matrix route (Hes P)^n = 0      {}",
        chk.matrix_route
    )?;
    writeln!(
        human,
        "laplacian route Δ^m P^m = 0     {} (orders checked: {})",
        chk.laplacian_route.all_vanish, chk.laplacian_route.orders_checked
    )?;
    writeln!(human, "hn           {}", chk.hn)?;
    Ok(Outcome {
        payload,
        human,
        verdict: Verdict::Success,
    })
}

pub fn vanish(input: &str, f: Option<&str>, mmax: u32, n: Option<usize>) -> Result<Outcome> {
    let polys = match f {
        Some(f) => parse_all(&[input, f], n)?,
        None => parse_all(&[input], n)?,
    };
    let report = vanish_experiment(&polys[0], polys.get(1), mmax, VanishMode::Fresh)?;
    let mut human = String::new();
    writeln!(human, "P = {}", report.p)?;
    writeln!(
        human,
        "f = {}{}",
        report.f,
        if report.f_is_p { " (P)" } else { "" }
    )?;
    writeln!(human, "{:>4}  {:>6}  zero", "m", "degree")?;
    for row in &report.rows {
        let deg = row.degree.map_or("-".into(), |d| d.to_string());
        writeln!(human, "{:>4}  {:>6}  {}", row.m, deg, row.is_zero)?;
    }
    match report.threshold_n {
        Some(t) => writeln!(human, "all probed rows with m > {t} vanish")?,
        None => writeln!(human, "no vanishing observed up to m = {mmax}")?,
    }
    let verdict = if report.first_all_zero_from.is_some() {
        Verdict::Success
    } else {
        Verdict::Inconclusive
    };
    Ok(Outcome {
        payload: to_value(&report),
        human,
        verdict,
    })
}

fn hilbert_table(out: &mut String, cert: &Certificate) -> std::fmt::Result {
    writeln!(out, "{:>4}  {:>8}  {:>8}", "m", "dim I_m", "dim V_m")?;
    for h in &cert.hilbert_values {
        writeln!(out, "{:>4}  {:>8}  {:>8}", h.m, h.dim_ideal, h.dim_slice)?;
    }
    Ok(())
}

fn status_name(s: CertificateStatus) -> String {
    to_value(&s).as_str().unwrap_or_default().to_string()
}

pub fn certify(input: &str, max_degree: Option<u32>, n: Option<usize>) -> Result<Outcome> {
    let p = parse_one(input, n)?;
    let cert = certify_theorem1(&p, max_degree).with_context(|| format!("cannot certify `{p}`"))?;
    let mut human = String::new();
    writeln!(human, "P = {p}  (degree {})", cert.degree)?;
    writeln!(human, "generators:")?;
    for g in &cert.generators {
        writeln!(human, "  {g}")?;
    }
    hilbert_table(&mut human, &cert.base)?;
    writeln!(
        human,
        "status {} (default bound {}, probed to {})",
        status_name(cert.base.status),
        cert.base.default_bound,
        cert.base.probe_degree_reached
    )?;
    if let Some(m0) = cert.vanishing_bound {
        writeln!(
            human,
            "Δ^m P^(m+1) = 0 for m ≥ {m0}; confirmed at {:?}",
            cert.verified_vanishing
        )?;
    }
    let verdict = if cert.base.status == CertificateStatus::NoCommonZero {
        Verdict::Success
    } else {
        Verdict::Inconclusive
    };
    Ok(Outcome {
        payload: to_value(&cert),
        human,
        verdict,
    })
}

/// `"3"` or `"2..5"` (inclusive).
pub fn parse_degree_range(s: &str) -> Result<RangeInclusive<u32>> {
    let parse = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| anyhow!("bad degree `{t}` in `{s}`"))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse(a)?, parse(b.trim_start_matches('='))?);
            if a > b {
                bail!("empty degree range `{s}`");
            }
            Ok(a..=b)
        }
        None => {
            let m = parse(s)?;
            Ok(m..=m)
        }
    }
}

/// One polynomial per line; `#` starts a comment.
pub fn parse_generator_file(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty())
        .collect()
}

#[derive(Serialize)]
struct IdealRow {
    m: u32,
    dim_ideal: usize,
    dim_solutions: usize,
    dim_ambient: usize,
    complement_matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    solution_basis: Option<Vec<Polynomial>>,
}

pub fn ideal(
    text: &str,
    degrees: RangeInclusive<u32>,
    certify: Option<Option<u32>>,
    n: Option<usize>,
) -> Result<Outcome> {
    let lines = parse_generator_file(text);
    let n = match n {
        Some(n) => n,
        None if lines.is_empty() => bail!("an empty generator list needs --n"),
        None => lines
            .iter()
            .map(|(k, s)| {
                parse_polynomial(s, None)
                    .map(|p| p.n())
                    .with_context(|| format!("line {k}"))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .max()
            .unwrap_or(1),
    };
    let gens = lines
        .iter()
        .map(|(k, s)| parse_polynomial(s, Some(n)).with_context(|| format!("line {k}")))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    for m in degrees {
        let ideal = ideal_graded_piece(n, &gens, m)?;
        let slice = pde_solution_slice(n, &gens, m)?;
        let complement_matches = orthogonal_complement(&ideal) == slice;
        if !complement_matches {
            bail!("internal inconsistency: S_{m} differs from the apolar complement of I_{m}");
        }
        rows.push(IdealRow {
            m,
            dim_ideal: ideal.dim(),
            dim_solutions: slice.dim(),
            dim_ambient: homogeneous_dimension(n, m),
            complement_matches,
            solution_basis: (slice.dim() <= MAX_LISTED_BASIS).then(|| slice.polynomials()),
        });
    }
    let cert = certify
        .map(|max_degree| common_zero_certificate(n, &gens, max_degree))
        .transpose()?;

    let mut human = String::new();
    writeln!(human, "n = {n}, {} generator(s)", gens.len())?;
    for g in &gens {
        writeln!(human, "  {g}")?;
    }
    writeln!(
        human,
        "{:>4}  {:>8}  {:>8}  {:>8}  S_m = I_m^⊥",
        "m", "dim I_m", "dim S_m", "dim V_m"
    )?;
    for r in &rows {
        writeln!(
            human,
            "{:>4}  {:>8}  {:>8}  {:>8}  {}",
            r.m, r.dim_ideal, r.dim_solutions, r.dim_ambient, r.complement_matches
        )?;
        if let Some(basis) = r.solution_basis.as_ref().filter(|b| !b.is_empty()) {
            let listed: Vec<String> = basis.iter().map(|b| b.to_string()).collect();
            writeln!(human, "      S_{} = span{{{}}}", r.m, listed.join(", "))?;
        }
    }
    let mut verdict = Verdict::Success;
    if let Some(c) = &cert {
        writeln!(human, "certificate:")?;
        hilbert_table(&mut human, c)?;
        let sat = c.saturation_degree.map_or("-".into(), |s| s.to_string());
        writeln!(
            human,
            "status {} (saturation degree {sat})",
            status_name(c.status)
        )?;
        if c.status != CertificateStatus::NoCommonZero {
            verdict = Verdict::Inconclusive;
        }
    }
    let payload = json!({
        "n": n,
        "generators": to_value(&gens),
        "degrees": to_value(&rows),
        "certificate": cert.as_ref().map(to_value),
    });
    Ok(Outcome {
        payload,
        human,
        verdict,
    })
}

pub fn map(input: &str, fixed_point: Option<&str>, n: Option<usize>) -> Result<Outcome> {
    let p = parse_one(input, n)?;
    let f = symmetric_map(&p);
    let det = jacobian_det(&f)?;
    let fixed = fixed_point
        .map(|w| -> Result<_> {
            let w = parse_point(w).context("fixed-point witness")?;
            Ok(fixed_point_check(&f, &w)?)
        })
        .transpose()?;
    let mut human = String::new();
    writeln!(human, "P = {p}")?;
    for (i, c) in f.components.iter().enumerate() {
        writeln!(human, "F{} = {c}", i + 1)?;
    }
    writeln!(human, "det JF = {det}")?;
    if let (Some(w), Some(r)) = (fixed_point, &fixed) {
        writeln!(human, "F({w}) = ({})", format_point(&r.image))?;
        writeln!(human, "fixed              {}", r.fixed)?;
        writeln!(human, "on isotropic cone  {}", r.on_isotropic_cone)?;
    }
    let payload = json!({
        "polynomial": p.to_string(),
        "components": to_value(&f.components),
        "jacobian_det": det.to_string(),
        "jacobian_det_is_one": det.is_one(),
        "fixed_point": fixed.as_ref().map(to_value),
    });
    Ok(Outcome {
        payload,
        human,
        verdict: Verdict::Success,
    })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SpecFile {
    One(FamilySpec),
    Many(Vec<FamilySpec>),
}

#[derive(Serialize)]
struct Member {
    spec: FamilySpec,
    polynomial: Polynomial,
    intended_hn: bool,
    hn: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Value>,
}

pub fn family(spec_text: Option<&str>, certify: bool) -> Result<Outcome> {
    let specs = match spec_text {
        None => standard_corpus(),
        Some(text) => {
            match serde_json::from_str::<SpecFile>(text).context("invalid FamilySpec JSON")? {
                SpecFile::One(s) => vec![s],
                SpecFile::Many(v) => v,
            }
        }
    };
    let mut members = Vec::with_capacity(specs.len());
    for (k, spec) in specs.into_iter().enumerate() {
        let polynomial = spec.build().with_context(|| format!("spec {k}"))?;
        let hn = is_hn_checked(&polynomial)?.hn;
        let certificate = if certify && hn && polynomial.is_homogeneous() {
            let c = certify_theorem1(&polynomial, None)?;
            Some(json!({
                "status": c.base.status,
                "saturation_degree": c.base.saturation_degree,
                "vanishing_bound": c.vanishing_bound,
            }))
        } else {
            None
        };
        members.push(Member {
            intended_hn: spec.intended_hn(),
            spec,
            polynomial,
            hn,
            certificate,
        });
    }
    let mismatched = members.iter().filter(|m| m.intended_hn && !m.hn).count();
    let certified = members
        .iter()
        .filter(|m| {
            m.certificate
                .as_ref()
                .is_some_and(|c| c["status"] == json!(CertificateStatus::NoCommonZero))
        })
        .count();
    let mut human = String::new();
    writeln!(
        human,
        "{:>4}  {:<20} {:>2} {:>2}  {:<5}  polynomial",
        "#", "kind", "n", "d", "hn"
    )?;
    for (k, m) in members.iter().enumerate() {
        let kind = to_value(&m.spec.kind);
        writeln!(
            human,
            "{k:>4}  {:<20} {:>2} {:>2}  {:<5}  {}",
            kind.as_str().unwrap_or_default(),
            m.spec.n,
            m.spec.d,
            m.hn,
            m.polynomial
        )?;
        if let Some(c) = &m.certificate {
            writeln!(
                human,
                "      certificate {}",
                c["status"].as_str().unwrap_or_default()
            )?;
        }
    }
    writeln!(
        human,
        "{} member(s), {mismatched} failed HN verification",
        members.len()
    )?;
    if certify {
        writeln!(human, "{certified} certified NO_COMMON_ZERO")?;
    }
    let payload = json!({
        "members": to_value(&members),
        "hn_verification_failures": mismatched,
        "certified": certify.then_some(certified),
    });
    let verdict = if mismatched == 0 {
        Verdict::Success
    } else {
        Verdict::Inconclusive
    };
    Ok(Outcome {
        payload,
        human,
        verdict,
    })
}
