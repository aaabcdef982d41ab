//! The general Gaussian scheme: rate splitting, dirty-paper coding on all
//! four auxiliaries, and active interference cancellation.
//!
//! [`general_bounds`] evaluates the twelve sub-rate bounds (six per
//! receiver, over `R10, R11, R20, R22`); [`general_region`] projects them
//! onto `(R1, R2)`. [`asymptotic_bounds`] is the state-power limit
//! `K -> infinity`, where only the eight combination bounds survive and the
//! state ratios reduce to `alpha^2 / P`.

use super::{lgr, GaussianError};
use crate::channel::{derive, SchemeParams, StateRatio, StdChannel};
use crate::fme::{project_to_rate_pair, IneqSystem};
use crate::geometry::RateRegion;

/// Which receiver's multiple-access channel the DPC pair is tuned for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Receiver {
    One,
    Two,
}

/// One labelled sub-rate bound `coeffs . (R10, R11, R20, R22) <= value`.
#[derive(Clone, Debug)]
pub struct BoundEntry {
    pub label: String,
    pub coeffs: [f64; 4],
    pub value: f64,
}

/// The full labelled bound list of one scheme evaluation.
#[derive(Clone, Debug, Default)]
pub struct GaussianBoundSet {
    pub entries: Vec<BoundEntry>,
}

impl GaussianBoundSet {
    fn push(&mut self, label: &str, coeffs: [f64; 4], value: f64) {
        self.entries.push(BoundEntry {
            label: label.to_string(),
            coeffs,
            value,
        });
    }

    /// Value of the entry with the given label, if present.
    pub fn value(&self, label: &str) -> Option<f64> {
        self.entries
            .iter()
            .find(|e| e.label == label)
            .map(|e| e.value)
    }

    /// Sub-rate inequality system over `R10, R11, R20, R22` with
    /// non-negativity rows included.
    pub fn to_system(&self) -> IneqSystem {
        let mut sys = IneqSystem::with_nonnegativity(&["R10", "R11", "R20", "R22"]);
        for e in &self.entries {
            sys.push_row(e.coeffs.to_vec(), e.value)
                .expect("fixed four-variable rows");
        }
        sys
    }

    pub fn project(&self) -> RateRegion {
        project_to_rate_pair(&self.to_system()).expect("bound sets are well-formed systems")
    }
}

/// Ratio and coefficient of one auxiliary, with disabled auxiliaries
/// (zero allocated power) contributing nothing.
fn gate(ratio: StateRatio, alpha: f64) -> (f64, f64) {
    match ratio {
        StateRatio::Finite(v) => (v, alpha),
        StateRatio::Infinite => (0.0, 0.0),
    }
}

/// Twelve sub-rate bounds of the general scheme.
pub fn general_bounds(
    ch: &StdChannel,
    sp: &SchemeParams,
) -> Result<GaussianBoundSet, GaussianError> {
    let d = derive(ch, sp)?;
    let (gu1, a10) = gate(d.g_u1, sp.alpha10);
    let (gv1, a11) = gate(d.g_v1, sp.alpha11);
    let (gu2, a20) = gate(d.g_u2, sp.alpha20);
    let (gv2, a22) = gate(d.g_v2, sp.alpha22);
    let k = ch.k;
    let g12 = ch.g12;
    let g21 = ch.g21;
    let s12 = g12.sqrt();
    let s21 = g21.sqrt();
    let (pa1, pb1, pa2, pb2) = (d.p_a1, d.p_b1, d.p_a2, d.p_b2);

    let den1 =
        (1.0 + g12 * pb2) * (1.0 + gu1 + gu2 + gv1) + k * (a10 + a20 * s12 + a11 - d.mu1).powi(2);
    let den2 =
        (1.0 + g21 * pb1) * (1.0 + gu2 + gu1 + gv2) + k * (a20 + a10 * s21 + a22 - d.mu2).powi(2);

    let mut set = GaussianBoundSet::default();
    // Receiver 1.
    set.push(
        "Y1 R11",
        [0.0, 1.0, 0.0, 0.0],
        lgr(
            "Y1 R11",
            (1.0 + pb1 + g12 * pb2) * (1.0 + gu1 + gu2 + gu1 * gu2)
                + k * (a10 + a20 * s12 - d.mu1).powi(2) * (1.0 + gu1 * gu2 / (1.0 + gu1 + gu2)),
            den1,
        )?,
    );
    set.push(
        "Y1 R10",
        [1.0, 0.0, 0.0, 0.0],
        lgr(
            "Y1 R10",
            (1.0 + pa1 + g12 * pb2) * (1.0 + gv1 + gu2 + gv1 * gu2)
                + k * (a11 + a20 * s12 - d.mu1).powi(2) * (1.0 + gv1 * gu2 / (1.0 + gv1 + gu2)),
            den1,
        )?,
    );
    set.push(
        "Y1 R10+R11",
        [1.0, 1.0, 0.0, 0.0],
        lgr(
            "Y1 R10+R11",
            (1.0 + pa1 + pb1 + g12 * pb2) * (1.0 + gu2) + k * (a20 * s12 - d.mu1).powi(2),
            den1,
        )?,
    );
    set.push(
        "Y1 R11+R20",
        [0.0, 1.0, 1.0, 0.0],
        lgr(
            "Y1 R11+R20",
            (1.0 + pb1 + g12 * pa2 + g12 * pb2) * (1.0 + gu1) + k * (a10 - d.mu1).powi(2),
            den1,
        )?,
    );
    set.push(
        "Y1 R10+R20",
        [1.0, 0.0, 1.0, 0.0],
        lgr(
            "Y1 R10+R20",
            (1.0 + pa1 + g12 * pa2 + g12 * pb2) * (1.0 + gv1) + k * (a11 - d.mu1).powi(2),
            den1,
        )?,
    );
    set.push(
        "Y1 R10+R11+R20",
        [1.0, 1.0, 1.0, 0.0],
        lgr(
            "Y1 R10+R11+R20",
            1.0 + pa1 + pb1 + g12 * pa2 + g12 * pb2 + d.mu1 * d.mu1 * k,
            den1,
        )?,
    );
    // Receiver 2 (mirror).
    set.push(
        "Y2 R22",
        [0.0, 0.0, 0.0, 1.0],
        lgr(
            "Y2 R22",
            (1.0 + pb2 + g21 * pb1) * (1.0 + gu2 + gu1 + gu2 * gu1)
                + k * (a20 + a10 * s21 - d.mu2).powi(2) * (1.0 + gu2 * gu1 / (1.0 + gu2 + gu1)),
            den2,
        )?,
    );
    set.push(
        "Y2 R20",
        [0.0, 0.0, 1.0, 0.0],
        lgr(
            "Y2 R20",
            (1.0 + pa2 + g21 * pb1) * (1.0 + gv2 + gu1 + gv2 * gu1)
                + k * (a22 + a10 * s21 - d.mu2).powi(2) * (1.0 + gv2 * gu1 / (1.0 + gv2 + gu1)),
            den2,
        )?,
    );
    set.push(
        "Y2 R20+R22",
        [0.0, 0.0, 1.0, 1.0],
        lgr(
            "Y2 R20+R22",
            (1.0 + pa2 + pb2 + g21 * pb1) * (1.0 + gu1) + k * (a10 * s21 - d.mu2).powi(2),
            den2,
        )?,
    );
    set.push(
        "Y2 R10+R22",
        [1.0, 0.0, 0.0, 1.0],
        lgr(
            "Y2 R10+R22",
            (1.0 + pb2 + g21 * pa1 + g21 * pb1) * (1.0 + gu2) + k * (a20 - d.mu2).powi(2),
            den2,
        )?,
    );
    set.push(
        "Y2 R10+R20",
        [1.0, 0.0, 1.0, 0.0],
        lgr(
            "Y2 R10+R20",
            (1.0 + pa2 + g21 * pa1 + g21 * pb1) * (1.0 + gv2) + k * (a22 - d.mu2).powi(2),
            den2,
        )?,
    );
    set.push(
        "Y2 R10+R20+R22",
        [1.0, 0.0, 1.0, 1.0],
        lgr(
            "Y2 R10+R20+R22",
            1.0 + pa2 + pb2 + g21 * pa1 + g21 * pb1 + d.mu2 * d.mu2 * k,
            den2,
        )?,
    );
    Ok(set)
}

/// Projected `(R1, R2)` region of the general scheme. A collapsed bound
/// yields the empty region; infeasible cancellation is an error.
pub fn general_region(ch: &StdChannel, sp: &SchemeParams) -> Result<RateRegion, GaussianError> {
    match general_bounds(ch, sp) {
        Ok(set) => Ok(set.project()),
        Err(e) if e.is_collapse() => Ok(RateRegion::empty()),
        Err(e) => Err(e),
    }
}

/// Eight surviving bounds in the `K -> infinity` limit.
///
/// Requires all four allocated powers strictly positive so that the
/// limiting ratios `alpha^2 / P` are defined; the four single-sub-rate
/// bounds grow without bound and drop out.
pub fn asymptotic_bounds(
    ch: &StdChannel,
    sp: &SchemeParams,
) -> Result<GaussianBoundSet, GaussianError> {
    let d = derive(ch, sp)?;
    for (name, p) in [
        ("P_A1", d.p_a1),
        ("P_B1", d.p_b1),
        ("P_A2", d.p_a2),
        ("P_B2", d.p_b2),
    ] {
        if p <= 0.0 {
            return Err(GaussianError::UndefinedRatio(name));
        }
    }
    let (a10, a11, a20, a22) = (sp.alpha10, sp.alpha11, sp.alpha20, sp.alpha22);
    let g12 = ch.g12;
    let g21 = ch.g21;
    let s12 = g12.sqrt();
    let s21 = g21.sqrt();
    let (pa1, pb1, pa2, pb2) = (d.p_a1, d.p_b1, d.p_a2, d.p_b2);
    let r10 = a10 * a10 / pa1;
    let r11 = a11 * a11 / pb1;
    let r20 = a20 * a20 / pa2;
    let r22 = a22 * a22 / pb2;

    let den1 = (1.0 + g12 * pb2) * (r10 + r20 + r11) + (a10 + a20 * s12 + a11 - d.mu1).powi(2);
    let den2 = (1.0 + g21 * pb1) * (r20 + r10 + r22) + (a20 + a10 * s21 + a22 - d.mu2).powi(2);

    let mut set = GaussianBoundSet::default();
    set.push(
        "Y1 R10+R11",
        [1.0, 1.0, 0.0, 0.0],
        lgr(
            "Y1 R10+R11",
            (1.0 + pa1 + pb1 + g12 * pb2) * r20 + (a20 * s12 - d.mu1).powi(2),
            den1,
        )?,
    );
    set.push(
        "Y1 R11+R20",
        [0.0, 1.0, 1.0, 0.0],
        lgr(
            "Y1 R11+R20",
            (1.0 + pb1 + g12 * pa2 + g12 * pb2) * r10 + (a10 - d.mu1).powi(2),
            den1,
        )?,
    );
    set.push(
        "Y1 R10+R20",
        [1.0, 0.0, 1.0, 0.0],
        lgr(
            "Y1 R10+R20",
            (1.0 + pa1 + g12 * pa2 + g12 * pb2) * r11 + (a11 - d.mu1).powi(2),
            den1,
        )?,
    );
    set.push(
        "Y1 R10+R11+R20",
        [1.0, 1.0, 1.0, 0.0],
        lgr("Y1 R10+R11+R20", d.mu1 * d.mu1, den1)?,
    );
    set.push(
        "Y2 R20+R22",
        [0.0, 0.0, 1.0, 1.0],
        lgr(
            "Y2 R20+R22",
            (1.0 + pa2 + pb2 + g21 * pb1) * r10 + (a10 * s21 - d.mu2).powi(2),
            den2,
        )?,
    );
    set.push(
        "Y2 R10+R22",
        [1.0, 0.0, 0.0, 1.0],
        lgr(
            "Y2 R10+R22",
            (1.0 + pb2 + g21 * pa1 + g21 * pb1) * r20 + (a20 - d.mu2).powi(2),
            den2,
        )?,
    );
    set.push(
        "Y2 R10+R20",
        [1.0, 0.0, 1.0, 0.0],
        lgr(
            "Y2 R10+R20",
            (1.0 + pa2 + g21 * pa1 + g21 * pb1) * r22 + (a22 - d.mu2).powi(2),
            den2,
        )?,
    );
    set.push(
        "Y2 R10+R20+R22",
        [1.0, 0.0, 1.0, 1.0],
        lgr("Y2 R10+R20+R22", d.mu2 * d.mu2, den2)?,
    );
    Ok(set)
}

/// Projected region of the `K -> infinity` limit.
pub fn asymptotic_region(ch: &StdChannel, sp: &SchemeParams) -> Result<RateRegion, GaussianError> {
    match asymptotic_bounds(ch, sp) {
        Ok(set) => Ok(set.project()),
        Err(e) if e.is_collapse() => Ok(RateRegion::empty()),
        Err(e) => Err(e),
    }
}

/// Closed-form DPC pair optimal for one receiver's multiple-access channel.
///
/// `eff_p1`, `eff_p2` are the effective transmit powers after cancellation
/// and `mu` the residual state coefficient at the target receiver. Returns
/// `(alpha_own, alpha_cross)` in user order, i.e. `(alpha_10, alpha_20)`.
pub fn optimal_dpc(
    ch: &StdChannel,
    eff_p1: f64,
    eff_p2: f64,
    target: Receiver,
    mu: f64,
) -> (f64, f64) {
    match target {
        Receiver::One => {
            let t = 1.0 + eff_p1 + ch.g12 * eff_p2;
            (mu * eff_p1 / t, mu * ch.g12.sqrt() * eff_p2 / t)
        }
        Receiver::Two => {
            let t = 1.0 + eff_p2 + ch.g21 * eff_p1;
            (mu * ch.g21.sqrt() * eff_p1 / t, mu * eff_p2 / t)
        }
    }
}
