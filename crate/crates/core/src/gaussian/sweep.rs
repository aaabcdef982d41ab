//! Parameter sweeps and time-sharing hulls.
//!
//! The cancellation schemes are achievable at every admissible `gamma`
//! (and the flexible-split schemes at every `beta`), so time sharing
//! achieves the convex hull over the whole family together with the two
//! single-user corner points. Sweeps discretise those free parameters on
//! regular grids; refining a grid only adds points, so hulls grow
//! monotonically toward the ideal region.

use super::{
    mixed_region, strong_region, weak_region, GaussianError, MixedVariant, StrongVariant,
    WeakVariant,
};
use crate::channel::{classify, InterferenceCase, StdChannel};
use crate::geometry::{RatePair, RateRegion};

/// Default points per swept axis; matches the published boundary resolution.
pub const DEFAULT_GRID_POINTS: usize = 41;

/// Fraction of the power budget a swept `gamma^2 K` may reach.
const GAMMA_SAFETY: f64 = 0.999;

/// One swept axis: `points` values evenly spaced on `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AxisGrid {
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
}

impl AxisGrid {
    pub fn new(lo: f64, hi: f64, points: usize) -> Self {
        assert!(points >= 1, "axis needs at least one point");
        assert!(lo <= hi, "axis range is inverted");
        Self { lo, hi, points }
    }

    pub fn single(v: f64) -> Self {
        Self {
            lo: v,
            hi: v,
            points: 1,
        }
    }

    pub fn values(&self) -> Vec<f64> {
        if self.points == 1 {
            return vec![0.5 * (self.lo + self.hi)];
        }
        let step = (self.hi - self.lo) / (self.points - 1) as f64;
        (0..self.points)
            .map(|i| self.lo + step * i as f64)
            .collect()
    }
}

/// Grids for all sweepable parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepGrid {
    pub gamma1: AxisGrid,
    pub gamma2: AxisGrid,
    pub alpha22: AxisGrid,
    pub beta1: AxisGrid,
    pub beta2: AxisGrid,
}

impl SweepGrid {
    /// Case-aware defaults: symmetric `gamma` ranges capped just inside the
    /// admissible budget (the common-message budget in the weak regime),
    /// `alpha22` on `[-1, 1]`, `beta` on the open grid `{0.025..0.975}`.
    pub fn default_for(ch: &StdChannel) -> Self {
        let (budget1, budget2) = match classify(ch) {
            InterferenceCase::Weak => {
                let pb1 = ch.p1.min(1.0 / ch.g21);
                let pb2 = ch.p2.min(1.0 / ch.g12);
                (ch.p1 - pb1, ch.p2 - pb2)
            }
            _ => (ch.p1, ch.p2),
        };
        let gamma_axis = |budget: f64| {
            if ch.k <= 0.0 || budget <= 0.0 {
                AxisGrid::single(0.0)
            } else {
                let cap = (GAMMA_SAFETY * budget / ch.k).sqrt();
                AxisGrid::new(-cap, cap, DEFAULT_GRID_POINTS)
            }
        };
        Self {
            gamma1: gamma_axis(budget1),
            gamma2: gamma_axis(budget2),
            alpha22: AxisGrid::new(-1.0, 1.0, DEFAULT_GRID_POINTS),
            beta1: AxisGrid::new(0.025, 0.975, DEFAULT_GRID_POINTS),
            beta2: AxisGrid::new(0.025, 0.975, DEFAULT_GRID_POINTS),
        }
    }

    /// Same ranges with every multi-point axis resampled to `n` points.
    pub fn with_points(mut self, n: usize) -> Self {
        for axis in [
            &mut self.gamma1,
            &mut self.gamma2,
            &mut self.alpha22,
            &mut self.beta1,
            &mut self.beta2,
        ] {
            if axis.points > 1 {
                axis.points = n.max(1);
            }
        }
        self
    }
}

/// Single-user corner points `(0, C(P2))` and `(C(P1), 0)`.
pub fn corner_points(ch: &StdChannel) -> [RatePair; 2] {
    [
        RatePair::new(0.0, 0.5 * (1.0 + ch.p2).log2()),
        RatePair::new(0.5 * (1.0 + ch.p1).log2(), 0.0),
    ]
}

/// A sweepable scheme family (hull over its grid, without corner points).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VariantFamily {
    S3,
    S4,
    M1,
    M3,
    M4,
    W3,
    W4,
    W5,
    W6,
}

/// Which weak-regime families an enlarged region sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeakSweep {
    /// Cancellation sweep over the `W3`/`W4` families.
    Gamma,
    /// Power-split sweep over the `W5`/`W6` families.
    Beta,
    /// Both of the above.
    Both,
}

fn push_region(acc: &mut Vec<RatePair>, region: Result<RateRegion, GaussianError>) {
    if let Ok(r) = region {
        acc.extend_from_slice(r.vertices());
    }
}

/// Convex hull over one family's parameter grid.
pub fn variant_hull(
    ch: &StdChannel,
    family: VariantFamily,
    grid: &SweepGrid,
) -> Result<RateRegion, GaussianError> {
    let mut pts: Vec<RatePair> = Vec::new();
    match family {
        VariantFamily::S3 | VariantFamily::S4 => {
            for &g1 in &grid.gamma1.values() {
                for &g2 in &grid.gamma2.values() {
                    let v = if family == VariantFamily::S3 {
                        StrongVariant::S3 {
                            gamma1: g1,
                            gamma2: g2,
                        }
                    } else {
                        StrongVariant::S4 {
                            gamma1: g1,
                            gamma2: g2,
                        }
                    };
                    push_region(&mut pts, strong_region(ch, v));
                }
            }
            // Surface systematic errors (wrong regime) instead of an
            // empty hull.
            strong_region(ch, StrongVariant::S1)?;
        }
        VariantFamily::M1 => {
            for &a in &grid.alpha22.values() {
                push_region(&mut pts, mixed_region(ch, MixedVariant::M1 { alpha22: a }));
            }
            mixed_region(ch, MixedVariant::M2)?;
        }
        VariantFamily::M3 => {
            for &a in &grid.alpha22.values() {
                for &g1 in &grid.gamma1.values() {
                    for &g2 in &grid.gamma2.values() {
                        push_region(
                            &mut pts,
                            mixed_region(
                                ch,
                                MixedVariant::M3 {
                                    alpha22: a,
                                    gamma1: g1,
                                    gamma2: g2,
                                },
                            ),
                        );
                    }
                }
            }
            mixed_region(ch, MixedVariant::M2)?;
        }
        VariantFamily::M4 => {
            for &g1 in &grid.gamma1.values() {
                for &g2 in &grid.gamma2.values() {
                    push_region(
                        &mut pts,
                        mixed_region(
                            ch,
                            MixedVariant::M4 {
                                gamma1: g1,
                                gamma2: g2,
                            },
                        ),
                    );
                }
            }
            mixed_region(ch, MixedVariant::M2)?;
        }
        VariantFamily::W3 | VariantFamily::W4 => {
            for &g1 in &grid.gamma1.values() {
                for &g2 in &grid.gamma2.values() {
                    let v = if family == VariantFamily::W3 {
                        WeakVariant::W3 {
                            gamma1: g1,
                            gamma2: g2,
                        }
                    } else {
                        WeakVariant::W4 {
                            gamma1: g1,
                            gamma2: g2,
                        }
                    };
                    push_region(&mut pts, weak_region(ch, v));
                }
            }
            weak_region(ch, WeakVariant::W1)?;
        }
        VariantFamily::W5 | VariantFamily::W6 => {
            for &b1 in &grid.beta1.values() {
                for &b2 in &grid.beta2.values() {
                    let v = if family == VariantFamily::W5 {
                        WeakVariant::W5 {
                            beta1: b1,
                            beta2: b2,
                        }
                    } else {
                        WeakVariant::W6 {
                            beta1: b1,
                            beta2: b2,
                        }
                    };
                    push_region(&mut pts, weak_region(ch, v));
                }
            }
            weak_region(ch, WeakVariant::W1)?;
        }
    }
    Ok(RateRegion::from_points(&pts))
}

/// Case-matched time-sharing region: hull of the swept families plus the
/// single-user corner points.
pub fn enlarged_region(ch: &StdChannel, grid: &SweepGrid) -> Result<RateRegion, GaussianError> {
    match classify(ch) {
        InterferenceCase::Strong => {
            hull_families(ch, grid, &[VariantFamily::S3, VariantFamily::S4])
        }
        InterferenceCase::Mixed | InterferenceCase::Degraded => {
            hull_families(ch, grid, &[VariantFamily::M3, VariantFamily::M4])
        }
        InterferenceCase::Weak => enlarged_weak_region(ch, grid, WeakSweep::Both),
    }
}

/// Weak-regime time-sharing region restricted to one kind of sweep.
pub fn enlarged_weak_region(
    ch: &StdChannel,
    grid: &SweepGrid,
    sweep: WeakSweep,
) -> Result<RateRegion, GaussianError> {
    let families: &[VariantFamily] = match sweep {
        WeakSweep::Gamma => &[VariantFamily::W3, VariantFamily::W4],
        WeakSweep::Beta => &[VariantFamily::W5, VariantFamily::W6],
        WeakSweep::Both => &[
            VariantFamily::W3,
            VariantFamily::W4,
            VariantFamily::W5,
            VariantFamily::W6,
        ],
    };
    hull_families(ch, grid, families)
}

fn hull_families(
    ch: &StdChannel,
    grid: &SweepGrid,
    families: &[VariantFamily],
) -> Result<RateRegion, GaussianError> {
    let mut pts: Vec<RatePair> = corner_points(ch).to_vec();
    for &f in families {
        pts.extend_from_slice(variant_hull(ch, f, grid)?.vertices());
    }
    Ok(RateRegion::from_points(&pts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::strong_bounds;

    fn fig4() -> StdChannel {
        StdChannel::new(10.0, 10.0, 1.0, 1.0, 10.0, 10.0, 10.0).unwrap()
    }

    #[test]
    fn axis_grid_midpoint_for_single_point() {
        assert_eq!(AxisGrid::new(-2.0, 2.0, 1).values(), vec![0.0]);
        assert_eq!(AxisGrid::new(0.0, 1.0, 3).values(), vec![0.0, 0.5, 1.0]);
    }

    #[test]
    fn default_grid_respects_budgets() {
        let ch = fig4();
        let grid = SweepGrid::default_for(&ch);
        let cap = (0.999f64 * 10.0 / 10.0).sqrt();
        assert!((grid.gamma1.hi - cap).abs() < 1e-12);
        for g in grid.gamma1.values() {
            assert!(g * g * ch.k < ch.p1);
        }
        // Weak channels budget from the common part only.
        let weak = StdChannel::new(0.2, 0.2, 1.0, 1.0, 10.0, 10.0, 10.0).unwrap();
        let wgrid = SweepGrid::default_for(&weak);
        let wcap = (0.999f64 * 5.0 / 10.0).sqrt();
        assert!((wgrid.gamma1.hi - wcap).abs() < 1e-12);
    }

    #[test]
    fn zero_state_collapses_gamma_axis() {
        let ch = StdChannel::new(10.0, 10.0, 1.0, 1.0, 10.0, 10.0, 0.0).unwrap();
        let grid = SweepGrid::default_for(&ch);
        assert_eq!(grid.gamma1.values(), vec![0.0]);
    }

    #[test]
    fn single_point_sweep_equals_no_cancellation_hull() {
        let ch = fig4();
        let grid = SweepGrid {
            gamma1: AxisGrid::single(0.0),
            gamma2: AxisGrid::single(0.0),
            ..SweepGrid::default_for(&ch)
        };
        let enlarged = enlarged_region(&ch, &grid).unwrap();
        let s1 = strong_bounds(&ch, StrongVariant::S1).unwrap().region();
        let s2 = strong_bounds(&ch, StrongVariant::S2).unwrap().region();
        let expect = RateRegion::hull_of(&corner_points(&ch), &[&s1, &s2]);
        assert!(enlarged.hausdorff(&expect) < 1e-12);
    }

    #[test]
    fn finer_grid_grows_the_hull() {
        let ch = fig4();
        let coarse = SweepGrid::default_for(&ch).with_points(5);
        let fine = SweepGrid::default_for(&ch).with_points(9);
        let a = enlarged_region(&ch, &coarse).unwrap();
        let b = enlarged_region(&ch, &fine).unwrap();
        // 5-point grids are a subset of 9-point grids on the same range.
        assert!(b.contains(&a, 1e-9));
    }
}
