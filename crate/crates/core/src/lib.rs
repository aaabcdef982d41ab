//! Achievable rate regions for the two-user Gaussian interference channel
//! with an additive state known non-causally at both transmitters.
//!
//! The crate computes:
//!
//! * exact finite-alphabet regions of the two discrete-memoryless coding
//!   schemes (simultaneous and superposition encoding of split messages
//!   with Gel'fand–Pinsker binning) — [`dm`];
//! * their explicit `(R1, R2)` projections through Fourier–Motzkin
//!   elimination over the sub-rates — [`fme`];
//! * closed-form Gaussian scheme regions with dirty-paper coding, active
//!   interference cancellation and flexible power splitting, per
//!   interference regime, plus state-oblivious inner and classical outer
//!   comparators — [`gaussian`];
//! * scenario reports reproducing the reference boundary data — [`scenario`].
//!
//! All rates are in bits per channel use; all geometry lives in the
//! non-negative `(R1, R2)` quadrant — [`geometry`].

pub mod channel;
pub mod dm;
pub mod fme;
pub mod gaussian;
pub mod geometry;
pub mod scenario;

pub use channel::{
    classify, db_to_linear, derive, standardize, ChannelError, DerivedParams, InterferenceCase,
    RawChannel, SchemeParams, StateRatio, StdChannel,
};
pub use geometry::{HalfPlane, RatePair, RateRegion};
