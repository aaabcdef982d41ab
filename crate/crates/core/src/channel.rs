//! Channel parameters, scheme parameters, and the deterministic arithmetic
//! between them.
//!
//! A raw two-user Gaussian channel with a common additive state of variance
//! `K` is normalised to standard form: unit direct gains, unit noise, cross
//! power gains `g12`, `g21`, and state coupling `1/sqrt(N_i)` at receiver
//! `i`. Coding schemes are parameterised by power splits `beta_j` (common
//! fraction), active-cancellation coefficients `gamma_j`, and dirty-paper
//! coefficients `alpha_*`; [`derive()`] turns those into allocated powers,
//! state-to-signal ratios and residual state coefficients
//! `mu_i = 1/sqrt(N_i) - gamma_i - gamma_j*sqrt(g_ij)`.
//!
//! All values are linear (decibel conversion happens at the CLI boundary)
//! and all rates downstream are base-2 logarithms.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ChannelError {
    #[error("degenerate channel: direct gain {0} is zero")]
    DegenerateChannel(&'static str),
    #[error("invalid parameter {name}: {value}")]
    InvalidParameter { name: &'static str, value: f64 },
    #[error("infeasible cancellation: gamma{user}^2 * K = {spent} exceeds P{user} = {budget}")]
    InfeasibleCancellation { user: u8, spent: f64, budget: f64 },
}

/// Link amplitude gains, noise variances and power limits before
/// normalisation.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct RawChannel {
    pub h11: f64,
    pub h12: f64,
    pub h21: f64,
    pub h22: f64,
    pub n1: f64,
    pub n2: f64,
    pub p1_raw: f64,
    pub p2_raw: f64,
    pub k: f64,
}

/// Standard-form channel: unit direct gains and unit noise, cross power
/// gains `g12`, `g21`. Noise variances are retained because the common
/// state enters receiver `i` with coefficient `1/sqrt(N_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct StdChannel {
    pub g12: f64,
    pub g21: f64,
    pub n1: f64,
    pub n2: f64,
    pub p1: f64,
    pub p2: f64,
    pub k: f64,
}

impl StdChannel {
    pub fn new(
        g12: f64,
        g21: f64,
        n1: f64,
        n2: f64,
        p1: f64,
        p2: f64,
        k: f64,
    ) -> Result<Self, ChannelError> {
        let check_nonneg = |name, value: f64| {
            if value.is_finite() && value >= 0.0 {
                Ok(())
            } else {
                Err(ChannelError::InvalidParameter { name, value })
            }
        };
        check_nonneg("g12", g12)?;
        check_nonneg("g21", g21)?;
        check_nonneg("p1", p1)?;
        check_nonneg("p2", p2)?;
        check_nonneg("k", k)?;
        for (name, value) in [("n1", n1), ("n2", n2)] {
            if !(value.is_finite() && value > 0.0) {
                return Err(ChannelError::InvalidParameter { name, value });
            }
        }
        Ok(Self {
            g12,
            g21,
            n1,
            n2,
            p1,
            p2,
            k,
        })
    }

    /// Channel with both users swapped: `(P1, g12, N1) <-> (P2, g21, N2)`.
    pub fn swapped(&self) -> Self {
        Self {
            g12: self.g21,
            g21: self.g12,
            n1: self.n2,
            n2: self.n1,
            p1: self.p2,
            p2: self.p1,
            k: self.k,
        }
    }
}

/// Per-scheme free parameters: power splits, cancellation coefficients, and
/// dirty-paper coefficients for the four auxiliaries.
#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize)]
pub struct SchemeParams {
    pub beta1: f64,
    pub beta2: f64,
    pub gamma1: f64,
    pub gamma2: f64,
    pub alpha10: f64,
    pub alpha11: f64,
    pub alpha20: f64,
    pub alpha22: f64,
}

/// State-to-signal power ratio `alpha^2 K / P` of one auxiliary.
///
/// `Infinite` marks a zero allocated power: the auxiliary carries no signal
/// and is treated as disabled (its coefficient is ignored downstream).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum StateRatio {
    Finite(f64),
    Infinite,
}

impl StateRatio {
    /// Ratio value with disabled auxiliaries contributing nothing.
    pub fn or_disabled(self) -> f64 {
        match self {
            StateRatio::Finite(v) => v,
            StateRatio::Infinite => 0.0,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, StateRatio::Infinite)
    }
}

/// Powers and ratios derived from a channel and scheme parameters.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct DerivedParams {
    pub p_a1: f64,
    pub p_b1: f64,
    pub p_a2: f64,
    pub p_b2: f64,
    pub g_u1: StateRatio,
    pub g_v1: StateRatio,
    pub g_u2: StateRatio,
    pub g_v2: StateRatio,
    pub mu1: f64,
    pub mu2: f64,
}

/// Interference regime by cross-gain magnitudes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InterferenceCase {
    Strong,
    Mixed,
    Degraded,
    Weak,
}

impl std::fmt::Display for InterferenceCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            InterferenceCase::Strong => "strong",
            InterferenceCase::Mixed => "mixed",
            InterferenceCase::Degraded => "degraded",
            InterferenceCase::Weak => "weak",
        };
        f.write_str(s)
    }
}

/// Normalise a raw channel to standard form.
pub fn standardize(raw: &RawChannel) -> Result<StdChannel, ChannelError> {
    if raw.h11 == 0.0 {
        return Err(ChannelError::DegenerateChannel("h11"));
    }
    if raw.h22 == 0.0 {
        return Err(ChannelError::DegenerateChannel("h22"));
    }
    StdChannel::new(
        raw.h12 * raw.h12 * raw.n2 / (raw.h22 * raw.h22 * raw.n1),
        raw.h21 * raw.h21 * raw.n1 / (raw.h11 * raw.h11 * raw.n2),
        raw.n1,
        raw.n2,
        raw.h11 * raw.h11 * raw.p1_raw / raw.n1,
        raw.h22 * raw.h22 * raw.p2_raw / raw.n2,
        raw.k,
    )
}

/// Derive allocated powers, state ratios and residual state coefficients.
pub fn derive(ch: &StdChannel, sp: &SchemeParams) -> Result<DerivedParams, ChannelError> {
    for (name, beta) in [("beta1", sp.beta1), ("beta2", sp.beta2)] {
        if !(0.0..=1.0).contains(&beta) {
            return Err(ChannelError::InvalidParameter { name, value: beta });
        }
    }
    let spend1 = sp.gamma1 * sp.gamma1 * ch.k;
    let spend2 = sp.gamma2 * sp.gamma2 * ch.k;
    if spend1 > ch.p1 {
        return Err(ChannelError::InfeasibleCancellation {
            user: 1,
            spent: spend1,
            budget: ch.p1,
        });
    }
    if spend2 > ch.p2 {
        return Err(ChannelError::InfeasibleCancellation {
            user: 2,
            spent: spend2,
            budget: ch.p2,
        });
    }
    let rem1 = ch.p1 - spend1;
    let rem2 = ch.p2 - spend2;
    let p_a1 = sp.beta1 * rem1;
    let p_b1 = (1.0 - sp.beta1) * rem1;
    let p_a2 = sp.beta2 * rem2;
    let p_b2 = (1.0 - sp.beta2) * rem2;
    let ratio = |alpha: f64, power: f64| {
        if power == 0.0 {
            StateRatio::Infinite
        } else {
            StateRatio::Finite(alpha * alpha * ch.k / power)
        }
    };
    Ok(DerivedParams {
        p_a1,
        p_b1,
        p_a2,
        p_b2,
        g_u1: ratio(sp.alpha10, p_a1),
        g_v1: ratio(sp.alpha11, p_b1),
        g_u2: ratio(sp.alpha20, p_a2),
        g_v2: ratio(sp.alpha22, p_b2),
        mu1: 1.0 / ch.n1.sqrt() - sp.gamma1 - sp.gamma2 * ch.g12.sqrt(),
        mu2: 1.0 / ch.n2.sqrt() - sp.gamma2 - sp.gamma1 * ch.g21.sqrt(),
    })
}

/// Tolerance for the degraded test `g12 * g21 = 1`.
pub const DEGRADED_TOL: f64 = 1e-12;

/// Classify the interference regime.
///
/// Precedence: strong (both gains >= 1), then degraded (`g12*g21 = 1`
/// within [`DEGRADED_TOL`]), then mixed (exactly one gain > 1). Anything
/// else — both gains < 1, or the measure-zero boundary where one gain is
/// exactly 1 and the other below — is classified weak.
pub fn classify(ch: &StdChannel) -> InterferenceCase {
    if ch.g12 >= 1.0 && ch.g21 >= 1.0 {
        InterferenceCase::Strong
    } else if (ch.g12 * ch.g21 - 1.0).abs() <= DEGRADED_TOL {
        InterferenceCase::Degraded
    } else if (ch.g12 > 1.0) != (ch.g21 > 1.0) {
        InterferenceCase::Mixed
    } else {
        InterferenceCase::Weak
    }
}

/// Decibels to linear power. Used at the CLI/config boundary only.
pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}
