//! Weak-interference schemes (both cross gains below 1).
//!
//! All variants rate-split at both transmitters and decode sequentially:
//! common messages first (a MAC at each receiver with both private signals
//! as noise), then the intended private message with the interfering
//! private signal as noise. `W1`/`W2` fix the private powers so the
//! interfered private SNR is 1 (`P_Bj = min(P_j, 1/g_ij)`) and tune the
//! common DPC pair to one receiver. `W3`/`W4` add cancellation paid from
//! the common budget; `W5`/`W6` instead free the power split
//! (`P_Bj = beta_j P_j`) and share the `W1`/`W2` closed forms.

use super::strong::check_gamma;
use super::{collapse_to_empty, half_log2, lgr, state_ratio, GaussianError, Pentagon};
use crate::channel::{classify, InterferenceCase, StdChannel};
use crate::geometry::RateRegion;

/// Scheme variants for the weak regime.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum WeakVariant {
    /// Unit interfered-private-SNR split, common DPC tuned to receiver 1.
    W1,
    /// Unit interfered-private-SNR split, common DPC tuned to receiver 2.
    W2,
    /// `W1` plus active cancellation from the common budget.
    W3 { gamma1: f64, gamma2: f64 },
    /// `W2` plus active cancellation from the common budget.
    W4 { gamma1: f64, gamma2: f64 },
    /// Free power split, common DPC tuned to receiver 1.
    W5 { beta1: f64, beta2: f64 },
    /// Free power split, common DPC tuned to receiver 2.
    W6 { beta1: f64, beta2: f64 },
}

fn require_weak(ch: &StdChannel) -> Result<(), GaussianError> {
    let found = classify(ch);
    if found == InterferenceCase::Weak {
        Ok(())
    } else {
        Err(GaussianError::CaseMismatch {
            expected: "weak",
            found,
        })
    }
}

/// Private powers of the unit-interfered-SNR split.
fn fixed_split(ch: &StdChannel) -> (f64, f64) {
    (ch.p1.min(1.0 / ch.g21), ch.p2.min(1.0 / ch.g12))
}

fn check_beta(name: &'static str, beta: f64) -> Result<(), GaussianError> {
    if beta > 0.0 && beta < 1.0 {
        Ok(())
    } else {
        Err(GaussianError::ParameterRange {
            name,
            value: beta,
            constraint: "beta in (0, 1)".to_string(),
        })
    }
}

/// Pentagon bounds of the chosen weak variant.
pub fn weak_bounds(ch: &StdChannel, v: WeakVariant) -> Result<Pentagon, GaussianError> {
    require_weak(ch)?;
    match v {
        WeakVariant::W1 => {
            let (pb1, pb2) = fixed_split(ch);
            w1_template(ch, pb1, pb2)
        }
        WeakVariant::W2 => {
            let (pb1, pb2) = fixed_split(ch);
            w2_template(ch, pb1, pb2)
        }
        WeakVariant::W3 { gamma1, gamma2 } => w3(ch, gamma1, gamma2),
        WeakVariant::W4 { gamma1, gamma2 } => w4(ch, gamma1, gamma2),
        WeakVariant::W5 { beta1, beta2 } => {
            check_beta("beta1", beta1)?;
            check_beta("beta2", beta2)?;
            w1_template(ch, beta1 * ch.p1, beta2 * ch.p2)
        }
        WeakVariant::W6 { beta1, beta2 } => {
            check_beta("beta1", beta1)?;
            check_beta("beta2", beta2)?;
            w2_template(ch, beta1 * ch.p1, beta2 * ch.p2)
        }
    }
}

/// Region of the chosen weak variant (empty on a collapsed bound).
pub fn weak_region(ch: &StdChannel, v: WeakVariant) -> Result<RateRegion, GaussianError> {
    collapse_to_empty(weak_bounds(ch, v))
}

/// Private-rate addends shared by every variant.
fn private_rates(ch: &StdChannel, pb1: f64, pb2: f64) -> (f64, f64) {
    (
        half_log2(1.0 + pb1 / (1.0 + ch.g12 * pb2)),
        half_log2(1.0 + pb2 / (1.0 + ch.g21 * pb1)),
    )
}

/// Common DPC tuned to receiver 1 at the given private powers.
fn w1_template(ch: &StdChannel, pb1: f64, pb2: f64) -> Result<Pentagon, GaussianError> {
    let (p1, p2, k) = (ch.p1, ch.p2, ch.k);
    let (pa1, pa2) = (p1 - pb1, p2 - pb2);
    let s12 = ch.g12.sqrt();
    let s21 = ch.g21.sqrt();
    let t = 1.0 + p1 + ch.g12 * p2;
    let a10 = pa1 / (ch.n1.sqrt() * t);
    let a20 = s12 * pa2 / (ch.n1.sqrt() * t);
    let inv_n2 = 1.0 / ch.n2.sqrt();
    let (priv1, priv2) = private_rates(ch, pb1, pb2);
    let noise1 = 1.0 + pb1 + ch.g12 * pb2;
    let den = (1.0 + pb2 + ch.g21 * pb1)
        * (1.0 + state_ratio(a20, k, pa2) + state_ratio(a10, k, pa1))
        + k * (a20 + a10 * s21 - inv_n2).powi(2);
    let r1 = half_log2(1.0 + pa1 / noise1).min(lgr(
        "w1.r1",
        (1.0 + pb2 + ch.g21 * p1) * (1.0 + state_ratio(a20, k, pa2)) + k * (a20 - inv_n2).powi(2),
        den,
    )?) + priv1;
    let r2 = half_log2(1.0 + ch.g12 * pa2 / noise1).min(lgr(
        "w1.r2",
        (1.0 + ch.g21 * pb1 + p2) * (1.0 + state_ratio(a10, k, pa1))
            + k * (a10 * s21 - inv_n2).powi(2),
        den,
    )?) + priv2;
    let sum = half_log2(1.0 + (pa1 + ch.g12 * pa2) / noise1).min(lgr(
        "w1.sum",
        1.0 + p2 + ch.g21 * p1 + k / ch.n2,
        den,
    )?) + priv1
        + priv2;
    Ok(Pentagon { r1, r2, sum })
}

/// Common DPC tuned to receiver 2 at the given private powers.
fn w2_template(ch: &StdChannel, pb1: f64, pb2: f64) -> Result<Pentagon, GaussianError> {
    let (p1, p2, k) = (ch.p1, ch.p2, ch.k);
    let (pa1, pa2) = (p1 - pb1, p2 - pb2);
    let s12 = ch.g12.sqrt();
    let s21 = ch.g21.sqrt();
    let t = 1.0 + p2 + ch.g21 * p1;
    let a10 = s21 * pa1 / (ch.n2.sqrt() * t);
    let a20 = pa2 / (ch.n2.sqrt() * t);
    let inv_n1 = 1.0 / ch.n1.sqrt();
    let (priv1, priv2) = private_rates(ch, pb1, pb2);
    let noise2 = 1.0 + pb2 + ch.g21 * pb1;
    let den = (1.0 + pb1 + ch.g12 * pb2)
        * (1.0 + state_ratio(a10, k, pa1) + state_ratio(a20, k, pa2))
        + k * (a10 + a20 * s12 - inv_n1).powi(2);
    let r1 = half_log2(1.0 + ch.g21 * pa1 / noise2).min(lgr(
        "w2.r1",
        (1.0 + ch.g12 * pb2 + p1) * (1.0 + state_ratio(a20, k, pa2))
            + k * (a20 * s12 - inv_n1).powi(2),
        den,
    )?) + priv1;
    let r2 = half_log2(1.0 + pa2 / noise2).min(lgr(
        "w2.r2",
        (1.0 + pb1 + ch.g12 * p2) * (1.0 + state_ratio(a10, k, pa1)) + k * (a10 - inv_n1).powi(2),
        den,
    )?) + priv2;
    let sum = half_log2(1.0 + (pa2 + ch.g21 * pa1) / noise2).min(lgr(
        "w2.sum",
        1.0 + p1 + ch.g12 * p2 + k / ch.n1,
        den,
    )?) + priv2
        + priv1;
    Ok(Pentagon { r1, r2, sum })
}

fn w3(ch: &StdChannel, gamma1: f64, gamma2: f64) -> Result<Pentagon, GaussianError> {
    let (p1, p2, k) = (ch.p1, ch.p2, ch.k);
    let (pb1, pb2) = fixed_split(ch);
    let (pa1, pa2) = (p1 - pb1, p2 - pb2);
    check_gamma("gamma1", gamma1, k, pa1)?;
    check_gamma("gamma2", gamma2, k, pa2)?;
    let ea1 = pa1 - gamma1 * gamma1 * k;
    let ea2 = pa2 - gamma2 * gamma2 * k;
    let e1 = p1 - gamma1 * gamma1 * k;
    let e2 = p2 - gamma2 * gamma2 * k;
    let s12 = ch.g12.sqrt();
    let s21 = ch.g21.sqrt();
    let mu1 = 1.0 / ch.n1.sqrt() - gamma1 - gamma2 * s12;
    let mu2 = 1.0 / ch.n2.sqrt() - gamma2 - gamma1 * s21;
    let t = 1.0 + e1 + ch.g12 * e2;
    let a10 = mu1 * ea1 / t;
    let a20 = mu1 * s12 * ea2 / t;
    let (priv1, priv2) = private_rates(ch, pb1, pb2);
    let noise1 = 1.0 + pb1 + ch.g12 * pb2;
    let den = (1.0 + pb2 + ch.g21 * pb1)
        * (1.0 + state_ratio(a20, k, ea2) + state_ratio(a10, k, ea1))
        + k * (a20 + a10 * s21 - mu2).powi(2);
    let r1 = half_log2(1.0 + ea1 / noise1).min(lgr(
        "w3.r1",
        (1.0 + pb2 + ch.g21 * e1) * (1.0 + state_ratio(a20, k, ea2)) + k * (a20 - mu2).powi(2),
        den,
    )?) + priv1;
    let r2 = half_log2(1.0 + ch.g12 * ea2 / noise1).min(lgr(
        "w3.r2",
        (1.0 + ch.g21 * pb1 + e2) * (1.0 + state_ratio(a10, k, ea1))
            + k * (a10 * s21 - mu2).powi(2),
        den,
    )?) + priv2;
    let sum = half_log2(1.0 + (ea1 + ch.g12 * ea2) / noise1).min(lgr(
        "w3.sum",
        1.0 + e2 + ch.g21 * e1 + mu2 * mu2 * k,
        den,
    )?) + priv1
        + priv2;
    Ok(Pentagon { r1, r2, sum })
}

fn w4(ch: &StdChannel, gamma1: f64, gamma2: f64) -> Result<Pentagon, GaussianError> {
    let (p1, p2, k) = (ch.p1, ch.p2, ch.k);
    let (pb1, pb2) = fixed_split(ch);
    let (pa1, pa2) = (p1 - pb1, p2 - pb2);
    check_gamma("gamma1", gamma1, k, pa1)?;
    check_gamma("gamma2", gamma2, k, pa2)?;
    let ea1 = pa1 - gamma1 * gamma1 * k;
    let ea2 = pa2 - gamma2 * gamma2 * k;
    let e1 = p1 - gamma1 * gamma1 * k;
    let e2 = p2 - gamma2 * gamma2 * k;
    let s12 = ch.g12.sqrt();
    let s21 = ch.g21.sqrt();
    let mu1 = 1.0 / ch.n1.sqrt() - gamma1 - gamma2 * s12;
    let mu2 = 1.0 / ch.n2.sqrt() - gamma2 - gamma1 * s21;
    let t = 1.0 + e2 + ch.g21 * e1;
    let a10 = mu2 * s21 * ea1 / t;
    let a20 = mu2 * ea2 / t;
    let (priv1, priv2) = private_rates(ch, pb1, pb2);
    let noise2 = 1.0 + pb2 + ch.g21 * pb1;
    let den = (1.0 + pb1 + ch.g12 * pb2)
        * (1.0 + state_ratio(a10, k, ea1) + state_ratio(a20, k, ea2))
        + k * (a10 + a20 * s12 - mu1).powi(2);
    let r1 = half_log2(1.0 + ch.g21 * ea1 / noise2).min(lgr(
        "w4.r1",
        (1.0 + ch.g12 * pb2 + e1) * (1.0 + state_ratio(a20, k, ea2))
            + k * (a20 * s12 - mu1).powi(2),
        den,
    )?) + priv1;
    let r2 = half_log2(1.0 + ea2 / noise2).min(lgr(
        "w4.r2",
        (1.0 + pb1 + ch.g12 * e2) * (1.0 + state_ratio(a10, k, ea1)) + k * (a10 - mu1).powi(2),
        den,
    )?) + priv2;
    let sum = half_log2(1.0 + (ea2 + ch.g21 * ea1) / noise2).min(lgr(
        "w4.sum",
        1.0 + e1 + ch.g12 * e2 + mu1 * mu1 * k,
        den,
    )?) + priv2
        + priv1;
    Ok(Pentagon { r1, r2, sum })
}
