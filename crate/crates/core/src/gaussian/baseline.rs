//! Comparator regions: the state-oblivious inner bound and the classical
//! outer bounds for the state-free channel.
//!
//! # Outer-bound formula ledger (version 1)
//!
//! The outer bounds below are transcriptions of classical results for the
//! traditional (state-free) Gaussian interference channel, which upper
//! bounds this channel since receivers knowing the state could subtract it.
//! With `SNR1 = P1`, `SNR2 = P2`, `INR1 = g12 P2`, `INR2 = g21 P1` and all
//! rates in bits:
//!
//! * Strong (`g12 >= 1`, `g21 >= 1`) — capacity region, Sato (1981):
//!   intersection of the two MAC pentagons,
//!   `R1 <= C(P1)`, `R2 <= C(g12 P2)`, `R1+R2 <= C(P1 + g12 P2)` and
//!   `R1 <= C(g21 P1)`, `R2 <= C(P2)`, `R1+R2 <= C(P2 + g21 P1)`,
//!   where `C(x) = 1/2 log2(1 + x)`.
//! * Mixed / degraded (canonically `g21 > 1 > g12`): single-user bounds
//!   `R1 <= C(SNR1)`, `R2 <= C(SNR2)` plus the strong-receiver MAC sum
//!   bound `R1 + R2 <= C(SNR2 + INR2)`, valid whenever `g21 >= 1`. The
//!   degraded case (`g12 g21 = 1`) admits a known sum-capacity tightening
//!   (Sason, 2004) that is deliberately not transcribed here; the set above
//!   remains a valid outer bound.
//! * Weak (`g12 < 1`, `g21 < 1`) — genie-aided outer bound, Etkin, Tse and
//!   Wang (2008), Theorem 3:
//!   `R1 <= C(SNR1)`,
//!   `R2 <= C(SNR2)`,
//!   `R1+R2 <= C(SNR1 + INR1) + C(SNR2 / (1 + INR2))`,
//!   `R1+R2 <= C(SNR2 + INR2) + C(SNR1 / (1 + INR1))`,
//!   `R1+R2 <= C(INR1 + SNR1/(1 + INR2)) + C(INR2 + SNR2/(1 + INR1))`,
//!   `2R1+R2 <= C(SNR1 + INR1) + C(SNR1/(1 + INR1)) + C(INR2 + SNR2/(1 + INR1))`,
//!   `R1+2R2 <= C(SNR2 + INR2) + C(SNR2/(1 + INR2)) + C(INR1 + SNR1/(1 + INR2))`.
//!
//! The inner bound keeps each regime's no-cancellation decoding
//! architecture, sets every DPC and cancellation coefficient to zero, and
//! folds the state into the noise (variance `K/N_i` on top of the unit
//! noise at receiver `i`).

use super::half_log2;
use crate::channel::{classify, InterferenceCase, StdChannel};
use crate::geometry::{HalfPlane, RateRegion};

/// Version tag of the transcribed outer-bound formulas above.
pub const OUTER_LEDGER_VERSION: u32 = 1;

/// Comparator selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Baseline {
    /// Transmitters ignore the state; it becomes extra receiver noise.
    InnerIgnoreState,
    /// Classical outer bound for the state-free channel (ledger above).
    Outer,
}

/// Case-matched comparator region. Never fails: every channel has a
/// well-defined inner and outer comparator.
pub fn baseline_region(ch: &StdChannel, kind: Baseline) -> RateRegion {
    match kind {
        Baseline::InnerIgnoreState => inner(ch),
        Baseline::Outer => outer(ch),
    }
}

fn c(x: f64) -> f64 {
    half_log2(1.0 + x)
}

fn inner(ch: &StdChannel) -> RateRegion {
    match classify(ch) {
        InterferenceCase::Strong => inner_strong(ch),
        InterferenceCase::Mixed | InterferenceCase::Degraded => {
            if ch.g21 >= ch.g12 {
                inner_mixed(ch)
            } else {
                inner_mixed(&ch.swapped()).transposed()
            }
        }
        InterferenceCase::Weak => inner_weak(ch),
    }
}

fn inner_strong(ch: &StdChannel) -> RateRegion {
    let s1 = 1.0 + ch.k / ch.n1;
    let s2 = 1.0 + ch.k / ch.n2;
    RateRegion::intersect_halfplanes(&[
        HalfPlane::new(1.0, 0.0, c(ch.p1 / s1)),
        HalfPlane::new(0.0, 1.0, c(ch.g12 * ch.p2 / s1)),
        HalfPlane::new(1.0, 1.0, c((ch.p1 + ch.g12 * ch.p2) / s1)),
        HalfPlane::new(1.0, 0.0, c(ch.g21 * ch.p1 / s2)),
        HalfPlane::new(0.0, 1.0, c(ch.p2 / s2)),
        HalfPlane::new(1.0, 1.0, c((ch.p2 + ch.g21 * ch.p1) / s2)),
    ])
}

/// Canonical orientation `g21 > 1 > g12`.
fn inner_mixed(ch: &StdChannel) -> RateRegion {
    let s1 = 1.0 + ch.k / ch.n1;
    let s2 = 1.0 + ch.k / ch.n2;
    RateRegion::intersect_halfplanes(&[
        HalfPlane::new(1.0, 0.0, c(ch.p1 / (s1 + ch.g12 * ch.p2))),
        HalfPlane::new(1.0, 0.0, c(ch.g21 * ch.p1 / s2)),
        HalfPlane::new(0.0, 1.0, c(ch.p2 / s2)),
        HalfPlane::new(1.0, 1.0, c((ch.p2 + ch.g21 * ch.p1) / s2)),
    ])
}

fn inner_weak(ch: &StdChannel) -> RateRegion {
    let pb1 = ch.p1.min(1.0 / ch.g21);
    let pb2 = ch.p2.min(1.0 / ch.g12);
    let pa1 = ch.p1 - pb1;
    let pa2 = ch.p2 - pb2;
    let s1 = ch.k / ch.n1;
    let s2 = ch.k / ch.n2;
    let priv1 = c(pb1 / (1.0 + ch.g12 * pb2 + s1));
    let priv2 = c(pb2 / (1.0 + ch.g21 * pb1 + s2));
    let nb1 = 1.0 + pb1 + ch.g12 * pb2 + s1;
    let nb2 = 1.0 + pb2 + ch.g21 * pb1 + s2;
    let r1 = c(pa1 / nb1).min(c(ch.g21 * pa1 / nb2)) + priv1;
    let r2 = c(ch.g12 * pa2 / nb1).min(c(pa2 / nb2)) + priv2;
    let sum = c((pa1 + ch.g12 * pa2) / nb1).min(c((pa2 + ch.g21 * pa1) / nb2)) + priv1 + priv2;
    RateRegion::intersect_halfplanes(&[
        HalfPlane::new(1.0, 0.0, r1),
        HalfPlane::new(0.0, 1.0, r2),
        HalfPlane::new(1.0, 1.0, sum),
    ])
}

fn outer(ch: &StdChannel) -> RateRegion {
    match classify(ch) {
        InterferenceCase::Strong => RateRegion::intersect_halfplanes(&[
            HalfPlane::new(1.0, 0.0, c(ch.p1)),
            HalfPlane::new(0.0, 1.0, c(ch.g12 * ch.p2)),
            HalfPlane::new(1.0, 1.0, c(ch.p1 + ch.g12 * ch.p2)),
            HalfPlane::new(1.0, 0.0, c(ch.g21 * ch.p1)),
            HalfPlane::new(0.0, 1.0, c(ch.p2)),
            HalfPlane::new(1.0, 1.0, c(ch.p2 + ch.g21 * ch.p1)),
        ]),
        InterferenceCase::Mixed | InterferenceCase::Degraded => {
            if ch.g21 >= ch.g12 {
                outer_mixed(ch)
            } else {
                outer_mixed(&ch.swapped()).transposed()
            }
        }
        InterferenceCase::Weak => outer_weak(ch),
    }
}

fn outer_mixed(ch: &StdChannel) -> RateRegion {
    RateRegion::intersect_halfplanes(&[
        HalfPlane::new(1.0, 0.0, c(ch.p1)),
        HalfPlane::new(0.0, 1.0, c(ch.p2)),
        HalfPlane::new(1.0, 1.0, c(ch.p2 + ch.g21 * ch.p1)),
    ])
}

fn outer_weak(ch: &StdChannel) -> RateRegion {
    let snr1 = ch.p1;
    let snr2 = ch.p2;
    let inr1 = ch.g12 * ch.p2;
    let inr2 = ch.g21 * ch.p1;
    RateRegion::intersect_halfplanes(&[
        HalfPlane::new(1.0, 0.0, c(snr1)),
        HalfPlane::new(0.0, 1.0, c(snr2)),
        HalfPlane::new(1.0, 1.0, c(snr1 + inr1) + c(snr2 / (1.0 + inr2))),
        HalfPlane::new(1.0, 1.0, c(snr2 + inr2) + c(snr1 / (1.0 + inr1))),
        HalfPlane::new(
            1.0,
            1.0,
            c(inr1 + snr1 / (1.0 + inr2)) + c(inr2 + snr2 / (1.0 + inr1)),
        ),
        HalfPlane::new(
            2.0,
            1.0,
            c(snr1 + inr1) + c(snr1 / (1.0 + inr1)) + c(inr2 + snr2 / (1.0 + inr1)),
        ),
        HalfPlane::new(
            1.0,
            2.0,
            c(snr2 + inr2) + c(snr2 / (1.0 + inr2)) + c(inr1 + snr1 / (1.0 + inr2)),
        ),
    ])
}
