//! Closed-form Gaussian achievable rate regions.
//!
//! The general scheme ([`general_region`]) splits each user's message into
//! common and private parts, dirty-paper codes all four auxiliaries against
//! the known state, and optionally spends power `gamma_j^2 K` on
//! counter-phase cancellation of the state at the receivers. Its twelve
//! sub-rate bounds project to an `(R1, R2)` polygon through the
//! Fourier–Motzkin machinery.
//!
//! The per-regime families (strong / mixed / weak) are simpler pentagon
//! regions with the dirty-paper coefficients fixed in closed form for one
//! receiver, the other receiver absorbing the mismatch. Each family comes
//! in a no-cancellation flavour and a cancellation flavour that must agree
//! at `gamma = 0`; both are transcribed independently so that identity is a
//! real check. Sweeping the free parameters and hulling the results with
//! the single-user corner points yields the time-sharing regions.

mod baseline;
mod general;
mod mixed;
mod strong;
mod sweep;
mod weak;

pub use baseline::{baseline_region, Baseline, OUTER_LEDGER_VERSION};
pub use general::{
    asymptotic_bounds, asymptotic_region, general_bounds, general_region, optimal_dpc, BoundEntry,
    GaussianBoundSet, Receiver,
};
pub use mixed::{mixed_bounds, mixed_region, MixedVariant};
pub use strong::{strong_bounds, strong_region, StrongVariant};
pub use sweep::{
    corner_points, enlarged_region, enlarged_weak_region, variant_hull, AxisGrid, SweepGrid,
    VariantFamily, WeakSweep, DEFAULT_GRID_POINTS,
};
pub use weak::{weak_bounds, weak_region, WeakVariant};

use crate::channel::{ChannelError, InterferenceCase};
use crate::geometry::{HalfPlane, RateRegion};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GaussianError {
    #[error(transparent)]
    Channel(#[from] ChannelError),
    #[error("channel regime mismatch: expected {expected}, classified {found}")]
    CaseMismatch {
        expected: &'static str,
        found: InterferenceCase,
    },
    #[error("undefined ratio: allocated power {0} is zero")]
    UndefinedRatio(&'static str),
    #[error("parameter {name} = {value} violates {constraint}")]
    ParameterRange {
        name: &'static str,
        value: f64,
        constraint: String,
    },
    #[error("bound {bound} collapsed: non-positive log argument")]
    Collapsed { bound: String },
}

impl GaussianError {
    pub fn is_collapse(&self) -> bool {
        matches!(self, GaussianError::Collapsed { .. })
    }
}

/// `0.5 * log2(x)` for a guaranteed-positive argument.
#[inline]
pub(crate) fn half_log2(x: f64) -> f64 {
    0.5 * x.log2()
}

/// `0.5 * log2(num/den)` guarding both sides.
pub(crate) fn lgr(bound: &str, num: f64, den: f64) -> Result<f64, GaussianError> {
    if num > 0.0 && den > 0.0 && num.is_finite() && den.is_finite() {
        Ok(half_log2(num / den))
    } else {
        Err(GaussianError::Collapsed {
            bound: bound.to_string(),
        })
    }
}

/// State-to-signal ratio `alpha^2 K / P` treating a zero power as a
/// disabled auxiliary (zero contribution).
#[inline]
pub(crate) fn state_ratio(alpha: f64, k: f64, power: f64) -> f64 {
    if power == 0.0 {
        0.0
    } else {
        alpha * alpha * k / power
    }
}

/// Three-bound pentagon: `R1 <= r1`, `R2 <= r2`, `R1 + R2 <= sum`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Pentagon {
    pub r1: f64,
    pub r2: f64,
    pub sum: f64,
}

impl Pentagon {
    pub fn region(&self) -> RateRegion {
        RateRegion::intersect_halfplanes(&[
            HalfPlane::new(1.0, 0.0, self.r1),
            HalfPlane::new(0.0, 1.0, self.r2),
            HalfPlane::new(1.0, 1.0, self.sum),
        ])
    }

    pub fn transposed(&self) -> Pentagon {
        Pentagon {
            r1: self.r2,
            r2: self.r1,
            sum: self.sum,
        }
    }
}

/// Map a collapsed-bound error to the empty region, pass others through.
pub(crate) fn collapse_to_empty(
    res: Result<Pentagon, GaussianError>,
) -> Result<RateRegion, GaussianError> {
    match res {
        Ok(p) => Ok(p.region()),
        Err(e) if e.is_collapse() => Ok(RateRegion::empty()),
        Err(e) => Err(e),
    }
}
