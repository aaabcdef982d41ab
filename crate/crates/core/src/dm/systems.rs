//! Sub-rate inequality systems of the two coding schemes.

use super::joint::{MiEvaluator, Var, VarSet};
use super::scheme::{DmError, DmScheme, EncodingMode};
use crate::fme::{project_to_rate_pair, IneqSystem};
use crate::geometry::RateRegion;

const Q: [Var; 1] = [Var::Q];
const S: [Var; 1] = [Var::S];

fn vs(vars: &[Var]) -> VarSet {
    VarSet::of(vars)
}

/// Twelve-row system of the simultaneous-encoding scheme over
/// `(R10, R11, R20, R22)`. Right-hand sides may be negative; projection
/// reports emptiness in that case.
pub fn simultaneous_system(scheme: &DmScheme) -> Result<IneqSystem, DmError> {
    scheme.expect_mode(EncodingMode::Simultaneous)?;
    let joint = scheme.build_joint()?;
    let mut e = MiEvaluator::new(&joint);
    let q = vs(&Q);
    let s = vs(&S);

    let mut sys = IneqSystem::with_nonnegativity(&["R10", "R11", "R20", "R22"]);
    let mut push = |coeffs: [f64; 4], rhs: f64| {
        sys.push_row(coeffs.to_vec(), rhs).expect("fixed shape");
    };

    // Per-user rows: the common prefix I(U_a;U_b|Q) + I(U_a,U_b;V_a|Q)
    // plus one decoding term, minus the binning penalties of the
    // auxiliaries being decoded.
    {
        let (u1, v1, u2, y1) = (
            vs(&[Var::U1]),
            vs(&[Var::V1]),
            vs(&[Var::U2]),
            vs(&[Var::Y1]),
        );
        let u1u2 = u1.union(u2);
        let prefix = e.mi(u1, u2, q) + e.mi(u1u2, v1, q);
        let pen_u1 = e.mi(u1, s, q);
        let pen_v1 = e.mi(v1, s, q);
        let pen_u2 = e.mi(u2, s, q);
        push(
            [0.0, 1.0, 0.0, 0.0],
            prefix + e.mi(v1, y1, u1u2.union(q)) - pen_v1,
        );
        push(
            [1.0, 0.0, 0.0, 0.0],
            prefix + e.mi(u1, y1, v1.union(u2).union(q)) - pen_u1,
        );
        push(
            [1.0, 1.0, 0.0, 0.0],
            prefix + e.mi(u1.union(v1), y1, u2.union(q)) - pen_u1 - pen_v1,
        );
        push(
            [0.0, 1.0, 1.0, 0.0],
            prefix + e.mi(v1.union(u2), y1, u1.union(q)) - pen_v1 - pen_u2,
        );
        push(
            [1.0, 0.0, 1.0, 0.0],
            prefix + e.mi(u1u2, y1, v1.union(q)) - pen_u1 - pen_u2,
        );
        push(
            [1.0, 1.0, 1.0, 0.0],
            prefix + e.mi(u1u2.union(v1), y1, q) - pen_u1 - pen_v1 - pen_u2,
        );
    }
    {
        let (u2, v2, u1, y2) = (
            vs(&[Var::U2]),
            vs(&[Var::V2]),
            vs(&[Var::U1]),
            vs(&[Var::Y2]),
        );
        let u2u1 = u2.union(u1);
        let prefix = e.mi(u2, u1, q) + e.mi(u2u1, v2, q);
        let pen_u2 = e.mi(u2, s, q);
        let pen_v2 = e.mi(v2, s, q);
        let pen_u1 = e.mi(u1, s, q);
        push(
            [0.0, 0.0, 0.0, 1.0],
            prefix + e.mi(v2, y2, u2u1.union(q)) - pen_v2,
        );
        push(
            [0.0, 0.0, 1.0, 0.0],
            prefix + e.mi(u2, y2, v2.union(u1).union(q)) - pen_u2,
        );
        push(
            [0.0, 0.0, 1.0, 1.0],
            prefix + e.mi(u2.union(v2), y2, u1.union(q)) - pen_u2 - pen_v2,
        );
        push(
            [1.0, 0.0, 0.0, 1.0],
            prefix + e.mi(v2.union(u1), y2, u2.union(q)) - pen_v2 - pen_u1,
        );
        push(
            [1.0, 0.0, 1.0, 0.0],
            prefix + e.mi(u2u1, y2, v2.union(q)) - pen_u2 - pen_u1,
        );
        push(
            [1.0, 0.0, 1.0, 1.0],
            prefix + e.mi(u2u1.union(v2), y2, q) - pen_u2 - pen_v2 - pen_u1,
        );
    }
    Ok(sys)
}

/// Eight-row system of the superposition-encoding scheme.
pub fn superposition_system(scheme: &DmScheme) -> Result<IneqSystem, DmError> {
    scheme.expect_mode(EncodingMode::Superposition)?;
    let joint = scheme.build_joint()?;
    let mut e = MiEvaluator::new(&joint);
    let q = vs(&Q);
    let s = vs(&S);

    let mut sys = IneqSystem::with_nonnegativity(&["R10", "R11", "R20", "R22"]);
    let mut push = |coeffs: [f64; 4], rhs: f64| {
        sys.push_row(coeffs.to_vec(), rhs).expect("fixed shape");
    };

    {
        let (u1, v1, u2, y1) = (
            vs(&[Var::U1]),
            vs(&[Var::V1]),
            vs(&[Var::U2]),
            vs(&[Var::Y1]),
        );
        let u1v1 = u1.union(v1);
        let prefix = e.mi(u1v1, u2, q);
        let pen_v1_given_u1 = e.mi(v1, s, u1.union(q));
        let pen_u1v1 = e.mi(u1v1, s, q);
        let pen_u2 = e.mi(u2, s, q);
        push(
            [0.0, 1.0, 0.0, 0.0],
            prefix + e.mi(v1, y1, u1.union(u2).union(q)) - pen_v1_given_u1,
        );
        push(
            [1.0, 1.0, 0.0, 0.0],
            prefix + e.mi(u1v1, y1, u2.union(q)) - pen_u1v1,
        );
        push(
            [0.0, 1.0, 1.0, 0.0],
            prefix + e.mi(v1.union(u2), y1, u1.union(q)) - pen_v1_given_u1 - pen_u2,
        );
        push(
            [1.0, 1.0, 1.0, 0.0],
            prefix + e.mi(u1v1.union(u2), y1, q) - pen_u1v1 - pen_u2,
        );
    }
    {
        let (u2, v2, u1, y2) = (
            vs(&[Var::U2]),
            vs(&[Var::V2]),
            vs(&[Var::U1]),
            vs(&[Var::Y2]),
        );
        let u2v2 = u2.union(v2);
        let prefix = e.mi(u2v2, u1, q);
        let pen_v2_given_u2 = e.mi(v2, s, u2.union(q));
        let pen_u2v2 = e.mi(u2v2, s, q);
        let pen_u1 = e.mi(u1, s, q);
        push(
            [0.0, 0.0, 0.0, 1.0],
            prefix + e.mi(v2, y2, u2.union(u1).union(q)) - pen_v2_given_u2,
        );
        push(
            [0.0, 0.0, 1.0, 1.0],
            prefix + e.mi(u2v2, y2, u1.union(q)) - pen_u2v2,
        );
        push(
            [1.0, 0.0, 0.0, 1.0],
            prefix + e.mi(v2.union(u1), y2, u2.union(q)) - pen_v2_given_u2 - pen_u1,
        );
        push(
            [1.0, 0.0, 1.0, 1.0],
            prefix + e.mi(u2v2.union(u1), y2, q) - pen_u2v2 - pen_u1,
        );
    }
    Ok(sys)
}

/// Re-express a simultaneous scheme in superposition form:
/// `p(v_j | u_j, s, q) := p(v_j | s, q)`. The induced joint pmf is
/// identical.
pub fn embed_simultaneous(scheme: &DmScheme) -> Result<DmScheme, DmError> {
    scheme.expect_mode(EncodingMode::Simultaneous)?;
    let a = &scheme.sizes;
    let mut out = scheme.clone();
    out.mode = EncodingMode::Superposition;
    let widen = |table: &[f64], u_size: usize, v_size: usize| -> Vec<f64> {
        let mut wide = Vec::with_capacity(a.q * a.s * u_size * v_size);
        for qs in 0..a.q * a.s {
            let row = &table[qs * v_size..(qs + 1) * v_size];
            for _u in 0..u_size {
                wide.extend_from_slice(row);
            }
        }
        wide
    };
    out.cond_v1 = widen(&scheme.cond_v1, a.u1, a.v1);
    out.cond_v2 = widen(&scheme.cond_v2, a.u2, a.v2);
    Ok(out)
}

/// Projected `(R1, R2)` region of a scheme, using whichever system matches
/// its encoding mode.
pub fn dm_region(scheme: &DmScheme) -> Result<RateRegion, DmError> {
    let sys = match scheme.mode {
        EncodingMode::Simultaneous => simultaneous_system(scheme)?,
        EncodingMode::Superposition => superposition_system(scheme)?,
    };
    Ok(project_to_rate_pair(&sys).expect("system has the projection shape"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dm::scheme::{Alphabets, DmScheme, EncodingMode};
    use crate::geometry::RatePair;

    fn constant_scheme() -> DmScheme {
        // Everything deterministic: all auxiliaries constant, outputs fixed.
        DmScheme {
            mode: EncodingMode::Simultaneous,
            sizes: Alphabets {
                q: 1,
                s: 2,
                u1: 1,
                v1: 1,
                u2: 1,
                v2: 1,
                x1: 1,
                x2: 1,
                y1: 1,
                y2: 1,
            },
            p_q: vec![1.0],
            p_s: vec![0.5, 0.5],
            cond_u1: vec![1.0, 1.0],
            cond_v1: vec![1.0, 1.0],
            cond_u2: vec![1.0, 1.0],
            cond_v2: vec![1.0, 1.0],
            f1: vec![0, 0],
            f2: vec![0, 0],
            channel: vec![1.0, 1.0],
        }
    }

    /// Noiseless orthogonal bit pipes with the bits on the private
    /// auxiliaries (each receiver only ever decodes its own private
    /// message; a common message over orthogonal pipes would have to be
    /// decoded by the interfered receiver too, forcing its rate to zero).
    fn bit_pipe_scheme() -> DmScheme {
        DmScheme {
            mode: EncodingMode::Simultaneous,
            sizes: Alphabets {
                q: 1,
                s: 1,
                u1: 1,
                v1: 2,
                u2: 1,
                v2: 2,
                x1: 2,
                x2: 2,
                y1: 2,
                y2: 2,
            },
            p_q: vec![1.0],
            p_s: vec![1.0],
            cond_u1: vec![1.0],
            cond_v1: vec![0.5, 0.5],
            cond_u2: vec![1.0],
            cond_v2: vec![0.5, 0.5],
            f1: vec![0, 1],
            f2: vec![0, 1],
            channel: vec![
                1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0,
            ],
        }
    }

    #[test]
    fn constant_scheme_projects_to_origin() {
        let region = dm_region(&constant_scheme()).unwrap();
        assert_eq!(region.vertices().len(), 1);
        assert_eq!(region.vertices()[0], RatePair::new(0.0, 0.0));
    }

    #[test]
    fn bit_pipes_reach_one_bit_each() {
        let region = dm_region(&bit_pipe_scheme()).unwrap();
        assert!(region.distance_to_point(RatePair::new(1.0, 1.0)) < 1e-9);
        assert!((region.area() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn embedding_preserves_the_joint() {
        let s = bit_pipe_scheme();
        let e = embed_simultaneous(&s).unwrap();
        assert_eq!(e.mode, EncodingMode::Superposition);
        let j1 = s.build_joint().unwrap();
        let j2 = e.build_joint().unwrap();
        for (a, b) in j1.weights().iter().zip(j2.weights()) {
            assert!((a - b).abs() < 1e-15);
        }
        // Degenerate scheme embeds to a degenerate scheme.
        let c = embed_simultaneous(&constant_scheme()).unwrap();
        let region = dm_region(&c).unwrap();
        assert_eq!(region.vertices().len(), 1);
    }

    #[test]
    fn mode_mismatch_is_an_error() {
        let s = bit_pipe_scheme();
        assert!(superposition_system(&s).is_err());
        let e = embed_simultaneous(&s).unwrap();
        assert!(simultaneous_system(&e).is_err());
        assert!(embed_simultaneous(&e).is_err());
    }
}
