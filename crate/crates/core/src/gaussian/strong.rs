//! Strong-interference schemes: common messages only, DPC tuned to one
//! receiver's MAC, the other receiver suffering the mismatch.
//!
//! `S1`/`S2` spend all power on the messages; `S3(g1, g2)`/`S4(g1, g2)`
//! additionally spend `gamma_j^2 K` on state cancellation and must equal
//! `S1`/`S2` at `gamma = 0`. The two flavours are transcribed from their
//! separate closed forms on purpose; their agreement at zero is a checked
//! identity, not a code path.

use super::{collapse_to_empty, half_log2, lgr, state_ratio, GaussianError, Pentagon};
use crate::channel::{classify, InterferenceCase, StdChannel};
use crate::geometry::RateRegion;

/// Scheme variants for the strong regime.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum StrongVariant {
    /// DPC optimal for the MAC at receiver 1, no cancellation.
    S1,
    /// DPC optimal for the MAC at receiver 2, no cancellation.
    S2,
    /// DPC optimal for receiver 1 plus active cancellation.
    S3 { gamma1: f64, gamma2: f64 },
    /// DPC optimal for receiver 2 plus active cancellation.
    S4 { gamma1: f64, gamma2: f64 },
}

fn require_strong(ch: &StdChannel) -> Result<(), GaussianError> {
    let found = classify(ch);
    if found == InterferenceCase::Strong {
        Ok(())
    } else {
        Err(GaussianError::CaseMismatch {
            expected: "strong",
            found,
        })
    }
}

/// `gamma^2 K < P` (zero spend always allowed).
pub(super) fn check_gamma(
    name: &'static str,
    gamma: f64,
    k: f64,
    budget: f64,
) -> Result<(), GaussianError> {
    let spend = gamma * gamma * k;
    if spend == 0.0 || spend < budget {
        Ok(())
    } else {
        Err(GaussianError::ParameterRange {
            name,
            value: gamma,
            constraint: format!("gamma^2 * K < {budget}"),
        })
    }
}

/// Pentagon bounds of the chosen strong variant.
pub fn strong_bounds(ch: &StdChannel, v: StrongVariant) -> Result<Pentagon, GaussianError> {
    require_strong(ch)?;
    match v {
        StrongVariant::S1 => s1(ch),
        StrongVariant::S2 => s2(ch),
        StrongVariant::S3 { gamma1, gamma2 } => s3(ch, gamma1, gamma2),
        StrongVariant::S4 { gamma1, gamma2 } => s4(ch, gamma1, gamma2),
    }
}

/// Region of the chosen strong variant (empty on a collapsed bound).
pub fn strong_region(ch: &StdChannel, v: StrongVariant) -> Result<RateRegion, GaussianError> {
    collapse_to_empty(strong_bounds(ch, v))
}

fn s1(ch: &StdChannel) -> Result<Pentagon, GaussianError> {
    let (p1, p2, k) = (ch.p1, ch.p2, ch.k);
    let s21 = ch.g21.sqrt();
    let t = 1.0 + p1 + ch.g12 * p2;
    let a10 = p1 / (ch.n1.sqrt() * t);
    let a20 = ch.g12.sqrt() * p2 / (ch.n1.sqrt() * t);
    let inv_n2 = 1.0 / ch.n2.sqrt();
    let den = 1.0
        + state_ratio(a20, k, p2)
        + state_ratio(a10, k, p1)
        + k * (a20 + a10 * s21 - inv_n2).powi(2);
    let r1 = half_log2(1.0 + p1).min(lgr(
        "s1.r1",
        (1.0 + ch.g21 * p1) * (1.0 + state_ratio(a20, k, p2)) + k * (a20 - inv_n2).powi(2),
        den,
    )?);
    let r2 = lgr(
        "s1.r2",
        (1.0 + p2) * (1.0 + state_ratio(a10, k, p1)) + k * (a10 * s21 - inv_n2).powi(2),
        den,
    )?;
    let sum = half_log2(1.0 + p1 + ch.g12 * p2).min(lgr(
        "s1.sum",
        1.0 + p2 + ch.g21 * p1 + k / ch.n2,
        den,
    )?);
    Ok(Pentagon { r1, r2, sum })
}

fn s2(ch: &StdChannel) -> Result<Pentagon, GaussianError> {
    let (p1, p2, k) = (ch.p1, ch.p2, ch.k);
    let s12 = ch.g12.sqrt();
    let t = 1.0 + p2 + ch.g21 * p1;
    let a10 = ch.g21.sqrt() * p1 / (ch.n2.sqrt() * t);
    let a20 = p2 / (ch.n2.sqrt() * t);
    let inv_n1 = 1.0 / ch.n1.sqrt();
    let den = 1.0
        + state_ratio(a10, k, p1)
        + state_ratio(a20, k, p2)
        + k * (a10 + a20 * s12 - inv_n1).powi(2);
    let r1 = lgr(
        "s2.r1",
        (1.0 + p1) * (1.0 + state_ratio(a20, k, p2)) + k * (a20 * s12 - inv_n1).powi(2),
        den,
    )?;
    let r2 = half_log2(1.0 + p2).min(lgr(
        "s2.r2",
        (1.0 + ch.g12 * p2) * (1.0 + state_ratio(a10, k, p1)) + k * (a10 - inv_n1).powi(2),
        den,
    )?);
    let sum = half_log2(1.0 + p2 + ch.g21 * p1).min(lgr(
        "s2.sum",
        1.0 + p1 + ch.g12 * p2 + k / ch.n1,
        den,
    )?);
    Ok(Pentagon { r1, r2, sum })
}

fn s3(ch: &StdChannel, gamma1: f64, gamma2: f64) -> Result<Pentagon, GaussianError> {
    check_gamma("gamma1", gamma1, ch.k, ch.p1)?;
    check_gamma("gamma2", gamma2, ch.k, ch.p2)?;
    let k = ch.k;
    let e1 = ch.p1 - gamma1 * gamma1 * k;
    let e2 = ch.p2 - gamma2 * gamma2 * k;
    let s12 = ch.g12.sqrt();
    let s21 = ch.g21.sqrt();
    let mu1 = 1.0 / ch.n1.sqrt() - gamma1 - gamma2 * s12;
    let mu2 = 1.0 / ch.n2.sqrt() - gamma2 - gamma1 * s21;
    let t = 1.0 + e1 + ch.g12 * e2;
    let a10 = mu1 * e1 / t;
    let a20 = mu1 * s12 * e2 / t;
    let den = 1.0
        + state_ratio(a20, k, e2)
        + state_ratio(a10, k, e1)
        + k * (a20 + a10 * s21 - mu2).powi(2);
    let r1 = half_log2(1.0 + e1).min(lgr(
        "s3.r1",
        (1.0 + ch.g21 * e1) * (1.0 + state_ratio(a20, k, e2)) + k * (a20 - mu2).powi(2),
        den,
    )?);
    let r2 = lgr(
        "s3.r2",
        (1.0 + e2) * (1.0 + state_ratio(a10, k, e1)) + k * (a10 * s21 - mu2).powi(2),
        den,
    )?;
    let sum = half_log2(1.0 + e1 + ch.g12 * e2).min(lgr(
        "s3.sum",
        1.0 + e2 + ch.g21 * e1 + mu2 * mu2 * k,
        den,
    )?);
    Ok(Pentagon { r1, r2, sum })
}

fn s4(ch: &StdChannel, gamma1: f64, gamma2: f64) -> Result<Pentagon, GaussianError> {
    check_gamma("gamma1", gamma1, ch.k, ch.p1)?;
    check_gamma("gamma2", gamma2, ch.k, ch.p2)?;
    let k = ch.k;
    let e1 = ch.p1 - gamma1 * gamma1 * k;
    let e2 = ch.p2 - gamma2 * gamma2 * k;
    let s12 = ch.g12.sqrt();
    let s21 = ch.g21.sqrt();
    let mu1 = 1.0 / ch.n1.sqrt() - gamma1 - gamma2 * s12;
    let mu2 = 1.0 / ch.n2.sqrt() - gamma2 - gamma1 * s21;
    let t = 1.0 + e2 + ch.g21 * e1;
    let a10 = mu2 * s21 * e1 / t;
    let a20 = mu2 * e2 / t;
    let den = 1.0
        + state_ratio(a10, k, e1)
        + state_ratio(a20, k, e2)
        + k * (a10 + a20 * s12 - mu1).powi(2);
    let r1 = lgr(
        "s4.r1",
        (1.0 + e1) * (1.0 + state_ratio(a20, k, e2)) + k * (a20 * s12 - mu1).powi(2),
        den,
    )?;
    let r2 = half_log2(1.0 + e2).min(lgr(
        "s4.r2",
        (1.0 + ch.g12 * e2) * (1.0 + state_ratio(a10, k, e1)) + k * (a10 - mu1).powi(2),
        den,
    )?);
    let sum = half_log2(1.0 + e2 + ch.g21 * e1).min(lgr(
        "s4.sum",
        1.0 + e1 + ch.g12 * e2 + mu1 * mu1 * k,
        den,
    )?);
    Ok(Pentagon { r1, r2, sum })
}
