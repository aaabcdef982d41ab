//! Shared oracles and generators for the integration and acceptance tests.
//!
//! Everything here is deliberately independent of the library's own
//! evaluation paths: the explicit projected region is evaluated from its
//! closed-form min-lists (not through elimination), and mutual
//! informations are recomputed by direct summation over hash-map
//! marginals (not through the library's entropy combination).

#![allow(dead_code)]

use icstate::dm::{Alphabets, DmScheme, EncodingMode, JointPmf, Var, VarSet};
use icstate::fme::IneqSystem;
use icstate::geometry::{HalfPlane, RateRegion};
use icstate::StdChannel;
use rand::{Rng, SeedableRng};

/// Seed-stable generator for every randomised test in this crate.
pub type TestRng = rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    TestRng::seed_from_u64(seed)
}

/// The twelve right-hand sides of the simultaneous-encoding system, in the
/// explicit region's naming.
#[derive(Clone, Copy, Debug)]
pub struct SubRateRhs {
    pub a1: f64,
    pub b1: f64,
    pub d1: f64,
    pub e1: f64,
    pub f1: f64,
    pub g1: f64,
    pub a2: f64,
    pub b2: f64,
    pub d2: f64,
    pub e2: f64,
    pub f2: f64,
    pub g2: f64,
}

impl SubRateRhs {
    pub fn constant(c: f64) -> Self {
        SubRateRhs {
            a1: c,
            b1: c,
            d1: c,
            e1: c,
            f1: c,
            g1: c,
            a2: c,
            b2: c,
            d2: c,
            e2: c,
            f2: c,
            g2: c,
        }
    }

    pub fn random_nonnegative(rng: &mut TestRng, max: f64) -> Self {
        let mut v = || rng.random_range(0.0..max);
        SubRateRhs {
            a1: v(),
            b1: v(),
            d1: v(),
            e1: v(),
            f1: v(),
            g1: v(),
            a2: v(),
            b2: v(),
            d2: v(),
            e2: v(),
            f2: v(),
            g2: v(),
        }
    }

    /// The twelve-row sub-rate system these values instantiate.
    pub fn to_system(self) -> IneqSystem {
        let mut sys = IneqSystem::with_nonnegativity(&["R10", "R11", "R20", "R22"]);
        let rows: [([f64; 4], f64); 12] = [
            ([0.0, 1.0, 0.0, 0.0], self.a1),
            ([1.0, 0.0, 0.0, 0.0], self.b1),
            ([1.0, 1.0, 0.0, 0.0], self.d1),
            ([0.0, 1.0, 1.0, 0.0], self.e1),
            ([1.0, 0.0, 1.0, 0.0], self.f1),
            ([1.0, 1.0, 1.0, 0.0], self.g1),
            ([0.0, 0.0, 0.0, 1.0], self.a2),
            ([0.0, 0.0, 1.0, 0.0], self.b2),
            ([0.0, 0.0, 1.0, 1.0], self.d2),
            ([1.0, 0.0, 0.0, 1.0], self.e2),
            ([1.0, 0.0, 1.0, 0.0], self.f2),
            ([1.0, 0.0, 1.0, 1.0], self.g2),
        ];
        for (coeffs, rhs) in rows {
            sys.push_row(coeffs.to_vec(), rhs).unwrap();
        }
        sys
    }

    /// Direct evaluation of the explicit projected region: the five
    /// min-list bounds over `(R1, R2)`. This is the oracle the elimination
    /// pipeline is checked against.
    pub fn explicit_region(&self) -> RateRegion {
        let &SubRateRhs {
            a1,
            b1,
            d1,
            e1,
            f1,
            g1,
            a2,
            b2,
            d2,
            e2,
            f2,
            g2,
        } = self;
        let min = |xs: &[f64]| xs.iter().copied().fold(f64::INFINITY, f64::min);
        let r1 = min(&[
            d1,
            g1,
            a1 + b1,
            a1 + f1,
            a1 + e2,
            a1 + f2,
            b1 + e1,
            e1 + f1,
            e1 + f2,
        ]);
        let r2 = min(&[
            d2,
            g2,
            a2 + b2,
            a2 + f2,
            a2 + e1,
            a2 + f1,
            b2 + e2,
            e2 + f2,
            e2 + f1,
        ]);
        let sum = min(&[
            a1 + g2,
            a2 + g1,
            e1 + g2,
            e2 + g1,
            e1 + e2,
            a1 + a2 + f1,
            a1 + a2 + f2,
            a1 + b2 + e2,
            a2 + b1 + e1,
        ]);
        let r1_2r2 = min(&[e1 + f1 + 2.0 * a2, e1 + 2.0 * a2 + f2, e1 + a2 + g2]);
        let r2_2r1 = min(&[e2 + f2 + 2.0 * a1, e2 + 2.0 * a1 + f1, e2 + a1 + g1]);
        RateRegion::intersect_halfplanes(&[
            HalfPlane::new(1.0, 0.0, r1),
            HalfPlane::new(0.0, 1.0, r2),
            HalfPlane::new(1.0, 1.0, sum),
            HalfPlane::new(1.0, 2.0, r1_2r2),
            HalfPlane::new(2.0, 1.0, r2_2r1),
        ])
    }
}

/// Extract the twelve right-hand sides from a system built by
/// `simultaneous_system`, matching rows by coefficient pattern.
pub fn rhs_from_system(sys: &IneqSystem) -> SubRateRhs {
    let find = |pattern: [f64; 4], skip: usize| -> f64 {
        sys.rows()
            .iter()
            .filter(|r| r.coeffs == pattern)
            .nth(skip)
            .unwrap_or_else(|| panic!("row {pattern:?} missing"))
            .rhs
    };
    SubRateRhs {
        a1: find([0.0, 1.0, 0.0, 0.0], 0),
        b1: find([1.0, 0.0, 0.0, 0.0], 0),
        d1: find([1.0, 1.0, 0.0, 0.0], 0),
        e1: find([0.0, 1.0, 1.0, 0.0], 0),
        f1: find([1.0, 0.0, 1.0, 0.0], 0),
        g1: find([1.0, 1.0, 1.0, 0.0], 0),
        a2: find([0.0, 0.0, 0.0, 1.0], 0),
        b2: find([0.0, 0.0, 1.0, 0.0], 0),
        d2: find([0.0, 0.0, 1.0, 1.0], 0),
        e2: find([1.0, 0.0, 0.0, 1.0], 0),
        f2: find([1.0, 0.0, 1.0, 0.0], 1),
        g2: find([1.0, 0.0, 1.0, 1.0], 0),
    }
}

// ---------------------------------------------------------------------------
// Independent information measures
// ---------------------------------------------------------------------------

/// Marginal of a raw 10-dimensional weight array as a map from projected
/// coordinates to mass. Independent of the library's marginalisation.
fn map_marginal(
    shape: &[usize; 10],
    weights: &[f64],
    keep: &[Var],
) -> std::collections::HashMap<Vec<usize>, f64> {
    let keep_idx: Vec<usize> = keep.iter().map(|&v| v as usize).collect();
    let mut out: std::collections::HashMap<Vec<usize>, f64> = std::collections::HashMap::new();
    for (lin, &w) in weights.iter().enumerate() {
        if w == 0.0 {
            continue;
        }
        // Decode the linear index (row-major).
        let mut digits = [0usize; 10];
        let mut rest = lin;
        for v in (0..10).rev() {
            digits[v] = rest % shape[v];
            rest /= shape[v];
        }
        let key: Vec<usize> = keep_idx.iter().map(|&i| digits[i]).collect();
        *out.entry(key).or_insert(0.0) += w;
    }
    out
}

/// `I(A; B | C)` in bits by direct summation of
/// `p(abc) log2( p(c) p(abc) / (p(ac) p(bc)) )`.
pub fn direct_cmi(joint: &JointPmf, a: &[Var], b: &[Var], c: &[Var]) -> f64 {
    let shape = joint.shape();
    let weights = joint.weights();
    let mut abc: Vec<Var> = a.to_vec();
    abc.extend_from_slice(b);
    abc.extend_from_slice(c);
    let mut ac: Vec<Var> = a.to_vec();
    ac.extend_from_slice(c);
    let mut bc: Vec<Var> = b.to_vec();
    bc.extend_from_slice(c);

    let m_abc = map_marginal(shape, weights, &abc);
    let m_ac = map_marginal(shape, weights, &ac);
    let m_bc = map_marginal(shape, weights, &bc);
    let m_c = map_marginal(shape, weights, c);

    let na = a.len();
    let nb = b.len();
    let mut total = 0.0;
    for (key, &p_abc) in &m_abc {
        if p_abc <= 0.0 {
            continue;
        }
        let key_ac: Vec<usize> = key[..na].iter().chain(&key[na + nb..]).copied().collect();
        let key_bc: Vec<usize> = key[na..].to_vec();
        let key_c: Vec<usize> = key[na + nb..].to_vec();
        let p_ac = m_ac[&key_ac];
        let p_bc = m_bc[&key_bc];
        let p_c = m_c[&key_c];
        total += p_abc * ((p_c * p_abc) / (p_ac * p_bc)).log2();
    }
    total
}

// ---------------------------------------------------------------------------
// Random scheme and channel generators (fixed seeds live in the tests)
// ---------------------------------------------------------------------------

fn random_rows(rng: &mut TestRng, rows: usize, width: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(rows * width);
    for _ in 0..rows {
        let raw: Vec<f64> = (0..width).map(|_| rng.random_range(0.05..1.0)).collect();
        let sum: f64 = raw.iter().sum();
        out.extend(raw.iter().map(|w| w / sum));
    }
    out
}

/// Random scheme on all-binary alphabets (singleton Q optional).
pub fn random_binary_scheme(rng: &mut TestRng, mode: EncodingMode, binary_q: bool) -> DmScheme {
    let sizes = Alphabets {
        q: if binary_q { 2 } else { 1 },
        ..Alphabets::binary()
    };
    let qs = sizes.q * sizes.s;
    let v_rows = |u: usize| match mode {
        EncodingMode::Simultaneous => qs,
        EncodingMode::Superposition => qs * u,
    };
    DmScheme {
        mode,
        sizes,
        p_q: random_rows(rng, 1, sizes.q),
        p_s: random_rows(rng, 1, sizes.s),
        cond_u1: random_rows(rng, qs, 2),
        cond_v1: random_rows(rng, v_rows(2), 2),
        cond_u2: random_rows(rng, qs, 2),
        cond_v2: random_rows(rng, v_rows(2), 2),
        f1: (0..8).map(|_| rng.random_range(0..2)).collect(),
        f2: (0..8).map(|_| rng.random_range(0..2)).collect(),
        channel: random_rows(rng, 8, 4),
    }
}

/// Random binary scheme whose auxiliaries depend only mildly on the state,
/// keeping the binning penalties small so that most inequality bounds come
/// out non-negative (the regime the coding schemes are meant for).
pub fn random_mild_state_scheme(rng: &mut TestRng, strength: f64) -> DmScheme {
    let sizes = Alphabets {
        q: 2,
        ..Alphabets::binary()
    };
    let qs = sizes.q * sizes.s;
    let mild_rows = |rng: &mut TestRng| -> Vec<f64> {
        // One base row per q, perturbed per s.
        let mut out = Vec::with_capacity(qs * 2);
        for _q in 0..sizes.q {
            let base: f64 = rng.random_range(0.2..0.8);
            for _s in 0..sizes.s {
                let p = (base + rng.random_range(-strength..strength)).clamp(0.02, 0.98);
                out.push(p);
                out.push(1.0 - p);
            }
        }
        out
    };
    DmScheme {
        mode: EncodingMode::Simultaneous,
        sizes,
        p_q: random_rows(rng, 1, sizes.q),
        p_s: random_rows(rng, 1, sizes.s),
        cond_u1: mild_rows(rng),
        cond_v1: mild_rows(rng),
        cond_u2: mild_rows(rng),
        cond_v2: mild_rows(rng),
        f1: (0..8).map(|_| rng.random_range(0..2)).collect(),
        f2: (0..8).map(|_| rng.random_range(0..2)).collect(),
        // A mostly-clean channel keeps the decoding terms large.
        channel: {
            let mut rows = Vec::with_capacity(8 * 4);
            for x1 in 0..2 {
                for x2 in 0..2 {
                    for _s in 0..2 {
                        let flip: f64 = rng.random_range(0.01..0.12);
                        for y1 in 0..2 {
                            for y2 in 0..2 {
                                let p1 = if y1 == x1 { 1.0 - flip } else { flip };
                                let p2 = if y2 == x2 { 1.0 - flip } else { flip };
                                rows.push(p1 * p2);
                            }
                        }
                    }
                }
            }
            rows
        },
    }
}

/// Swap the user roles of a scheme: `(U1, V1, X1, Y1) <-> (U2, V2, X2, Y2)`.
pub fn swap_users(s: &DmScheme) -> DmScheme {
    let a = s.sizes;
    let sizes = Alphabets {
        q: a.q,
        s: a.s,
        u1: a.u2,
        v1: a.v2,
        u2: a.u1,
        v2: a.v1,
        x1: a.x2,
        x2: a.x1,
        y1: a.y2,
        y2: a.y1,
    };
    // channel'[x1'][x2'][s][y1'][y2'] = channel[x2'][x1'][s][y2'][y1']
    let mut channel = vec![0.0; s.channel.len()];
    for x1p in 0..sizes.x1 {
        for x2p in 0..sizes.x2 {
            for st in 0..a.s {
                for y1p in 0..sizes.y1 {
                    for y2p in 0..sizes.y2 {
                        let dst =
                            (((x1p * sizes.x2 + x2p) * a.s + st) * sizes.y1 + y1p) * sizes.y2 + y2p;
                        let src = (((x2p * a.x2 + x1p) * a.s + st) * a.y1 + y2p) * a.y2 + y1p;
                        channel[dst] = s.channel[src];
                    }
                }
            }
        }
    }
    DmScheme {
        mode: s.mode,
        sizes,
        p_q: s.p_q.clone(),
        p_s: s.p_s.clone(),
        cond_u1: s.cond_u2.clone(),
        cond_v1: s.cond_v2.clone(),
        cond_u2: s.cond_u1.clone(),
        cond_v2: s.cond_v1.clone(),
        f1: s.f2.clone(),
        f2: s.f1.clone(),
        channel,
    }
}

/// Random valid channel of the requested regime.
pub fn random_channel(rng: &mut TestRng, case: icstate::InterferenceCase) -> StdChannel {
    use icstate::InterferenceCase::*;
    let p1 = rng.random_range(0.5..20.0);
    let p2 = rng.random_range(0.5..20.0);
    let n1 = rng.random_range(0.5..2.0);
    let n2 = rng.random_range(0.5..2.0);
    let k = rng.random_range(0.1..20.0);
    let (g12, g21) = match case {
        Strong => (rng.random_range(1.0..15.0), rng.random_range(1.0..15.0)),
        Mixed => {
            let strong_gain = rng.random_range(1.1..10.0);
            let weak_gain = rng.random_range(0.05..0.95);
            if rng.random_bool(0.5) {
                (weak_gain, strong_gain)
            } else {
                (strong_gain, weak_gain)
            }
        }
        Degraded => {
            let strong_gain: f64 = rng.random_range(1.1..10.0);
            if rng.random_bool(0.5) {
                (1.0 / strong_gain, strong_gain)
            } else {
                (strong_gain, 1.0 / strong_gain)
            }
        }
        Weak => (rng.random_range(0.05..0.95), rng.random_range(0.05..0.95)),
    };
    let ch = StdChannel::new(g12, g21, n1, n2, p1, p2, k).unwrap();
    assert_eq!(
        icstate::classify(&ch),
        case,
        "generator produced wrong regime"
    );
    ch
}

/// Admissible random cancellation pair for budgets `(b1, b2)`.
pub fn random_gamma(rng: &mut TestRng, k: f64, b1: f64, b2: f64) -> (f64, f64) {
    if k <= 0.0 {
        return (0.0, 0.0);
    }
    let cap1 = (0.9 * b1 / k).sqrt();
    let cap2 = (0.9 * b2 / k).sqrt();
    (rng.random_range(-cap1..cap1), rng.random_range(-cap2..cap2))
}

/// Hausdorff-style region match.
pub fn regions_close(a: &RateRegion, b: &RateRegion, tol: f64) -> bool {
    a.hausdorff(b) <= tol
}

/// Largest vertex coordinate sum (the achieved sum rate).
pub fn max_sum_rate(r: &RateRegion) -> f64 {
    r.vertices()
        .iter()
        .map(|v| v.r1 + v.r2)
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Mutual-information variable-set shorthands.
pub fn vars(list: &[Var]) -> VarSet {
    VarSet::of(list)
}
