//! Mixed-interference schemes (one cross gain above 1, one below).
//!
//! Canonical orientation is `g21 > 1 > g12`: transmitter 1 sends a common
//! message decoded by both receivers, transmitter 2 a private one; receiver
//! 1 treats the private signal as noise. Inputs in the mirrored orientation
//! are swapped into canonical form and the resulting region transposed
//! back, so the `alpha22` parameter always refers to the private-sending
//! user's DPC coefficient. Degraded channels (`g12 * g21 = 1`) use the same
//! code path.

use super::strong::check_gamma;
use super::{collapse_to_empty, half_log2, lgr, state_ratio, GaussianError, Pentagon};
use crate::channel::{classify, InterferenceCase, StdChannel};
use crate::geometry::RateRegion;

/// Scheme variants for the mixed regime.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MixedVariant {
    /// DPC optimal for the direct link at the weak-interference receiver;
    /// the private user's coefficient `alpha22` is free.
    M1 { alpha22: f64 },
    /// DPC optimal for the MAC at the strong-interference receiver.
    M2,
    /// `M1` plus active cancellation.
    M3 {
        alpha22: f64,
        gamma1: f64,
        gamma2: f64,
    },
    /// `M2` plus active cancellation.
    M4 { gamma1: f64, gamma2: f64 },
}

fn require_mixed(ch: &StdChannel) -> Result<(), GaussianError> {
    match classify(ch) {
        InterferenceCase::Mixed | InterferenceCase::Degraded => Ok(()),
        found => Err(GaussianError::CaseMismatch {
            expected: "mixed",
            found,
        }),
    }
}

/// Pentagon bounds in the input orientation.
pub fn mixed_bounds(ch: &StdChannel, v: MixedVariant) -> Result<Pentagon, GaussianError> {
    require_mixed(ch)?;
    if ch.g21 >= ch.g12 {
        mixed_bounds_canonical(ch, v)
    } else {
        // Mirrored orientation: swap users, compute, transpose back. The
        // variant's gamma parameters follow their users.
        let swapped = match v {
            MixedVariant::M1 { alpha22 } => MixedVariant::M1 { alpha22 },
            MixedVariant::M2 => MixedVariant::M2,
            MixedVariant::M3 {
                alpha22,
                gamma1,
                gamma2,
            } => MixedVariant::M3 {
                alpha22,
                gamma1: gamma2,
                gamma2: gamma1,
            },
            MixedVariant::M4 { gamma1, gamma2 } => MixedVariant::M4 {
                gamma1: gamma2,
                gamma2: gamma1,
            },
        };
        Ok(mixed_bounds_canonical(&ch.swapped(), swapped)?.transposed())
    }
}

/// Region of the chosen mixed variant (empty on a collapsed bound).
pub fn mixed_region(ch: &StdChannel, v: MixedVariant) -> Result<RateRegion, GaussianError> {
    collapse_to_empty(mixed_bounds(ch, v))
}

fn mixed_bounds_canonical(ch: &StdChannel, v: MixedVariant) -> Result<Pentagon, GaussianError> {
    match v {
        MixedVariant::M1 { alpha22 } => m1(ch, alpha22),
        MixedVariant::M2 => m2(ch),
        MixedVariant::M3 {
            alpha22,
            gamma1,
            gamma2,
        } => m3(ch, alpha22, gamma1, gamma2),
        MixedVariant::M4 { gamma1, gamma2 } => m4(ch, gamma1, gamma2),
    }
}

fn m1(ch: &StdChannel, a22: f64) -> Result<Pentagon, GaussianError> {
    let (p1, p2, k) = (ch.p1, ch.p2, ch.k);
    let s21 = ch.g21.sqrt();
    let a10 = p1 / (ch.n1.sqrt() * (1.0 + p1 + ch.g12 * p2));
    let inv_n2 = 1.0 / ch.n2.sqrt();
    let den = 1.0
        + state_ratio(a10, k, p1)
        + state_ratio(a22, k, p2)
        + k * (a10 * s21 + a22 - inv_n2).powi(2);
    let r1 = half_log2(1.0 + p1 / (1.0 + ch.g12 * p2)).min(lgr(
        "m1.r1",
        (1.0 + ch.g21 * p1) * (1.0 + state_ratio(a22, k, p2)) + k * (a22 - inv_n2).powi(2),
        den,
    )?);
    let r2 = lgr(
        "m1.r2",
        (1.0 + p2) * (1.0 + state_ratio(a10, k, p1)) + k * (a10 * s21 - inv_n2).powi(2),
        den,
    )?;
    let sum = lgr("m1.sum", 1.0 + p2 + ch.g21 * p1 + k / ch.n2, den)?;
    Ok(Pentagon { r1, r2, sum })
}

fn m2(ch: &StdChannel) -> Result<Pentagon, GaussianError> {
    let (p1, p2, k) = (ch.p1, ch.p2, ch.k);
    let a10 = ch.g21.sqrt() * p1 / (ch.n2.sqrt() * (1.0 + p2 + ch.g21 * p1));
    let inv_n1 = 1.0 / ch.n1.sqrt();
    let r1 = lgr(
        "m2.r1",
        1.0 + p1 + ch.g12 * p2 + k / ch.n1,
        (1.0 + ch.g12 * p2) * (1.0 + state_ratio(a10, k, p1)) + k * (a10 - inv_n1).powi(2),
    )?;
    let r2 = half_log2(1.0 + p2);
    let sum = half_log2(1.0 + p2 + ch.g21 * p1);
    Ok(Pentagon { r1, r2, sum })
}

fn m3(ch: &StdChannel, a22: f64, gamma1: f64, gamma2: f64) -> Result<Pentagon, GaussianError> {
    check_gamma("gamma1", gamma1, ch.k, ch.p1)?;
    check_gamma("gamma2", gamma2, ch.k, ch.p2)?;
    let k = ch.k;
    let e1 = ch.p1 - gamma1 * gamma1 * k;
    let e2 = ch.p2 - gamma2 * gamma2 * k;
    let s12 = ch.g12.sqrt();
    let s21 = ch.g21.sqrt();
    let mu1 = 1.0 / ch.n1.sqrt() - gamma1 - gamma2 * s12;
    let mu2 = 1.0 / ch.n2.sqrt() - gamma2 - gamma1 * s21;
    let a10 = mu1 * e1 / (1.0 + e1 + ch.g12 * e2);
    let den = 1.0
        + state_ratio(a10, k, e1)
        + state_ratio(a22, k, e2)
        + k * (a10 * s21 + a22 - mu2).powi(2);
    let r1 = half_log2(1.0 + e1 / (1.0 + ch.g12 * e2)).min(lgr(
        "m3.r1",
        (1.0 + ch.g21 * e1) * (1.0 + state_ratio(a22, k, e2)) + k * (a22 - mu2).powi(2),
        den,
    )?);
    let r2 = lgr(
        "m3.r2",
        (1.0 + e2) * (1.0 + state_ratio(a10, k, e1)) + k * (a10 * s21 - mu2).powi(2),
        den,
    )?;
    let sum = lgr("m3.sum", 1.0 + e2 + ch.g21 * e1 + k * mu2 * mu2, den)?;
    Ok(Pentagon { r1, r2, sum })
}

fn m4(ch: &StdChannel, gamma1: f64, gamma2: f64) -> Result<Pentagon, GaussianError> {
    check_gamma("gamma1", gamma1, ch.k, ch.p1)?;
    check_gamma("gamma2", gamma2, ch.k, ch.p2)?;
    let k = ch.k;
    let e1 = ch.p1 - gamma1 * gamma1 * k;
    let e2 = ch.p2 - gamma2 * gamma2 * k;
    let s12 = ch.g12.sqrt();
    let s21 = ch.g21.sqrt();
    let mu1 = 1.0 / ch.n1.sqrt() - gamma1 - gamma2 * s12;
    let mu2 = 1.0 / ch.n2.sqrt() - gamma2 - gamma1 * s21;
    let a10 = mu2 * s21 * e1 / (1.0 + e2 + ch.g21 * e1);
    let r1 = lgr(
        "m4.r1",
        1.0 + e1 + ch.g12 * e2 + k * mu1 * mu1,
        (1.0 + ch.g12 * e2) * (1.0 + state_ratio(a10, k, e1)) + k * (a10 - mu1).powi(2),
    )?;
    let r2 = half_log2(1.0 + e2);
    let sum = half_log2(1.0 + e2 + ch.g21 * e1);
    Ok(Pentagon { r1, r2, sum })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig5() -> StdChannel {
        StdChannel::new(0.2, 2.0, 1.0, 1.0, 10.0, 10.0, 10.0).unwrap()
    }

    #[test]
    fn rejects_strong_channels() {
        let ch = StdChannel::new(10.0, 10.0, 1.0, 1.0, 10.0, 10.0, 10.0).unwrap();
        assert!(matches!(
            mixed_region(&ch, MixedVariant::M2),
            Err(GaussianError::CaseMismatch {
                expected: "mixed",
                ..
            })
        ));
    }

    #[test]
    fn m2_bounds_at_fig5() {
        let p = mixed_bounds(&fig5(), MixedVariant::M2).unwrap();
        assert!((p.r2 - 0.5 * 11f64.log2()).abs() < 1e-12);
        assert!((p.sum - 0.5 * 31f64.log2()).abs() < 1e-12);
    }

    #[test]
    fn degraded_uses_same_path() {
        let ch = StdChannel::new(0.2, 5.0, 1.0, 1.0, 10.0, 10.0, 10.0).unwrap();
        assert_eq!(classify(&ch), InterferenceCase::Degraded);
        let r = mixed_region(&ch, MixedVariant::M1 { alpha22: 0.0 }).unwrap();
        assert!(!r.is_empty());
    }

    #[test]
    fn mirrored_orientation_transposes() {
        let ch = fig5();
        let mirrored = ch.swapped();
        for v in [
            MixedVariant::M1 { alpha22: 0.3 },
            MixedVariant::M2,
            MixedVariant::M3 {
                alpha22: 0.3,
                gamma1: 0.2,
                gamma2: -0.1,
            },
            MixedVariant::M4 {
                gamma1: 0.1,
                gamma2: 0.2,
            },
        ] {
            let canonical = mixed_region(&ch, v).unwrap();
            let mv = match v {
                MixedVariant::M3 {
                    alpha22,
                    gamma1,
                    gamma2,
                } => MixedVariant::M3 {
                    alpha22,
                    gamma1: gamma2,
                    gamma2: gamma1,
                },
                MixedVariant::M4 { gamma1, gamma2 } => MixedVariant::M4 {
                    gamma1: gamma2,
                    gamma2: gamma1,
                },
                other => other,
            };
            let swapped = mixed_region(&mirrored, mv).unwrap();
            assert!(canonical.transposed().hausdorff(&swapped) < 1e-12);
        }
    }
}
