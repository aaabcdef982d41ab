//! Convex polygon algebra on the non-negative rate quadrant.
//!
//! Every rate region in this crate is a (possibly empty, possibly degenerate)
//! bounded convex polygon in the closed quadrant `R1 >= 0, R2 >= 0`, with
//! coordinates in bits per channel use. Regions are built either by
//! intersecting half-planes (scheme inequality sets) or by convex hulls
//! (time sharing), and compared by half-plane containment.
//!
//! Two tolerance tiers are used throughout: `GEOM_TOL = 1e-9` for vertex
//! dedup/collinearity during construction, and a caller-supplied tolerance
//! (typically `1e-6`) for containment queries.

use serde::{Deserialize, Serialize};

/// Vertex dedup / collinearity tolerance, in bits.
pub const GEOM_TOL: f64 = 1e-9;

/// Unbounded directions of a half-plane intersection are clipped at this
/// many bits. No scenario in this crate produces bounds anywhere near it.
pub const CLIP_BITS: f64 = 64.0;

/// A point in the (R1, R2) rate plane, bits per channel use.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatePair {
    pub r1: f64,
    pub r2: f64,
}

impl RatePair {
    pub fn new(r1: f64, r2: f64) -> Self {
        Self { r1, r2 }
    }

    fn dist(self, other: RatePair) -> f64 {
        ((self.r1 - other.r1).powi(2) + (self.r2 - other.r2).powi(2)).sqrt()
    }
}

/// Closed half-plane `a*R1 + b*R2 <= c`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HalfPlane {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl HalfPlane {
    /// Panics if the normal is the zero vector.
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        assert!(a != 0.0 || b != 0.0, "half-plane normal must be non-zero");
        Self { a, b, c }
    }

    /// Signed violation of the constraint at `p`, normalised so positive
    /// values are Euclidean distances outside the half-plane.
    pub fn violation(&self, p: RatePair) -> f64 {
        let norm = (self.a * self.a + self.b * self.b).sqrt();
        (self.a * p.r1 + self.b * p.r2 - self.c) / norm
    }
}

/// Convex polygon in the non-negative quadrant.
///
/// Vertices are stored counter-clockwise starting from the lexicographically
/// smallest vertex (by R1, then R2), with consecutive duplicates and interior
/// collinear vertices removed at `GEOM_TOL`. The empty region has no
/// vertices; single points and segments are valid degenerate regions.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RateRegion {
    vertices: Vec<RatePair>,
}

/// Orientation of the triple (p, q, r): positive for a left turn.
fn cross(p: RatePair, q: RatePair, r: RatePair) -> f64 {
    (q.r1 - p.r1) * (r.r2 - p.r2) - (q.r2 - p.r2) * (r.r1 - p.r1)
}

fn lex_less(p: RatePair, q: RatePair) -> std::cmp::Ordering {
    p.r1.partial_cmp(&q.r1)
        .unwrap()
        .then(p.r2.partial_cmp(&q.r2).unwrap())
}

impl RateRegion {
    pub fn empty() -> Self {
        Self {
            vertices: Vec::new(),
        }
    }

    /// Convex hull of an arbitrary point soup (monotone chain, ties broken
    /// lexicographically). Collinear and duplicate points are dropped.
    pub fn from_points(points: &[RatePair]) -> Self {
        let mut pts: Vec<RatePair> = points
            .iter()
            .copied()
            .filter(|p| p.r1.is_finite() && p.r2.is_finite())
            .collect();
        if pts.is_empty() {
            return Self::empty();
        }
        pts.sort_by(|a, b| lex_less(*a, *b));
        pts.dedup_by(|a, b| a.dist(*b) <= GEOM_TOL);
        if pts.len() == 1 {
            return Self { vertices: pts };
        }

        // Lower then upper chain; strict left turns only.
        let mut lower: Vec<RatePair> = Vec::with_capacity(pts.len());
        for &p in &pts {
            while lower.len() >= 2
                && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0
            {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<RatePair> = Vec::with_capacity(pts.len());
        for &p in pts.iter().rev() {
            while upper.len() >= 2
                && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0
            {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        Self { vertices: lower }.canonicalised()
    }

    /// Convex hull of loose points together with existing regions.
    pub fn hull_of(points: &[RatePair], regions: &[&RateRegion]) -> Self {
        let mut pts: Vec<RatePair> = points.to_vec();
        for r in regions {
            pts.extend_from_slice(&r.vertices);
        }
        Self::from_points(&pts)
    }

    /// Intersection of half-planes, clipped to `[0, CLIP_BITS]^2`.
    ///
    /// The quadrant constraints `R1 >= 0`, `R2 >= 0` are implied by the clip
    /// box and need not be passed. An infeasible set yields the empty region.
    pub fn intersect_halfplanes(planes: &[HalfPlane]) -> Self {
        let mut poly = vec![
            RatePair::new(0.0, 0.0),
            RatePair::new(CLIP_BITS, 0.0),
            RatePair::new(CLIP_BITS, CLIP_BITS),
            RatePair::new(0.0, CLIP_BITS),
        ];
        for hp in planes {
            poly = clip(&poly, hp);
            if poly.is_empty() {
                return Self::empty();
            }
        }
        Self { vertices: poly }.canonicalised()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[RatePair] {
        &self.vertices
    }

    /// Shoelace area; zero for empty and degenerate regions.
    pub fn area(&self) -> f64 {
        if self.vertices.len() < 3 {
            return 0.0;
        }
        let n = self.vertices.len();
        let mut acc = 0.0;
        for i in 0..n {
            let p = self.vertices[i];
            let q = self.vertices[(i + 1) % n];
            acc += p.r1 * q.r2 - q.r1 * p.r2;
        }
        (acc / 2.0).abs()
    }

    /// True iff every vertex of `inner` violates no supporting half-plane of
    /// `self` by more than `tol`. The empty region is contained in anything.
    pub fn contains(&self, inner: &RateRegion, tol: f64) -> bool {
        if inner.is_empty() {
            return true;
        }
        if self.is_empty() {
            return false;
        }
        inner
            .vertices
            .iter()
            .all(|&p| self.distance_to_point(p) <= tol)
    }

    /// Euclidean distance from `p` to the region as a set (zero inside).
    pub fn distance_to_point(&self, p: RatePair) -> f64 {
        match self.vertices.len() {
            0 => f64::INFINITY,
            1 => p.dist(self.vertices[0]),
            2 => segment_distance(self.vertices[0], self.vertices[1], p),
            n => {
                let mut inside = true;
                let mut best = f64::INFINITY;
                for i in 0..n {
                    let a = self.vertices[i];
                    let b = self.vertices[(i + 1) % n];
                    if cross(a, b, p) < 0.0 {
                        inside = false;
                    }
                    best = best.min(segment_distance(a, b, p));
                }
                if inside {
                    0.0
                } else {
                    best
                }
            }
        }
    }

    /// Hausdorff distance between the two convex sets (infinite if exactly
    /// one is empty, zero if both are).
    pub fn hausdorff(&self, other: &RateRegion) -> f64 {
        match (self.is_empty(), other.is_empty()) {
            (true, true) => 0.0,
            (true, false) | (false, true) => f64::INFINITY,
            (false, false) => {
                let d1 = self
                    .vertices
                    .iter()
                    .map(|&p| other.distance_to_point(p))
                    .fold(0.0, f64::max);
                let d2 = other
                    .vertices
                    .iter()
                    .map(|&p| self.distance_to_point(p))
                    .fold(0.0, f64::max);
                d1.max(d2)
            }
        }
    }

    /// Mirror across the R1 = R2 diagonal (user swap).
    pub fn transposed(&self) -> Self {
        let pts: Vec<RatePair> = self
            .vertices
            .iter()
            .map(|p| RatePair::new(p.r2, p.r1))
            .collect();
        Self::from_points(&pts)
    }

    /// Enforce the vertex-list invariants: clamp tiny negatives, drop
    /// duplicates and collinear runs, rotate to the lexicographic minimum.
    fn canonicalised(mut self) -> Self {
        for v in &mut self.vertices {
            if v.r1 < 0.0 && v.r1 > -GEOM_TOL {
                v.r1 = 0.0;
            }
            if v.r2 < 0.0 && v.r2 > -GEOM_TOL {
                v.r2 = 0.0;
            }
        }
        // Consecutive duplicates (cyclically).
        let mut pts: Vec<RatePair> = Vec::with_capacity(self.vertices.len());
        for &p in &self.vertices {
            if pts.last().is_none_or(|&q| p.dist(q) > GEOM_TOL) {
                pts.push(p);
            }
        }
        while pts.len() >= 2 && pts[0].dist(*pts.last().unwrap()) <= GEOM_TOL {
            pts.pop();
        }
        // Collinear interior vertices (cyclically, until stable).
        loop {
            let n = pts.len();
            if n < 3 {
                break;
            }
            let mut removed = false;
            let mut kept: Vec<RatePair> = Vec::with_capacity(n);
            for i in 0..n {
                let prev = pts[(i + n - 1) % n];
                let cur = pts[i];
                let next = pts[(i + 1) % n];
                if cross(prev, cur, next).abs() <= GEOM_TOL {
                    removed = true;
                } else {
                    kept.push(cur);
                }
            }
            pts = kept;
            if !removed {
                break;
            }
        }
        if pts.len() >= 3 {
            // Ensure counter-clockwise orientation.
            let mut acc = 0.0;
            for i in 0..pts.len() {
                let p = pts[i];
                let q = pts[(i + 1) % pts.len()];
                acc += p.r1 * q.r2 - q.r1 * p.r2;
            }
            if acc < 0.0 {
                pts.reverse();
            }
        }
        if !pts.is_empty() {
            let start = (0..pts.len())
                .min_by(|&i, &j| lex_less(pts[i], pts[j]))
                .unwrap();
            pts.rotate_left(start);
        }
        Self { vertices: pts }
    }
}

/// Sutherland–Hodgman clip of a convex polygon against one half-plane.
fn clip(poly: &[RatePair], hp: &HalfPlane) -> Vec<RatePair> {
    if poly.is_empty() {
        return Vec::new();
    }
    let inside = |p: RatePair| hp.c - (hp.a * p.r1 + hp.b * p.r2);
    let mut out = Vec::with_capacity(poly.len() + 2);
    for i in 0..poly.len() {
        let p = poly[i];
        let q = poly[(i + 1) % poly.len()];
        let dp = inside(p);
        let dq = inside(q);
        if dp >= 0.0 {
            out.push(p);
        }
        if (dp > 0.0 && dq < 0.0) || (dp < 0.0 && dq > 0.0) {
            let t = dp / (dp - dq);
            out.push(RatePair::new(
                p.r1 + t * (q.r1 - p.r1),
                p.r2 + t * (q.r2 - p.r2),
            ));
        }
    }
    out
}

fn segment_distance(a: RatePair, b: RatePair, p: RatePair) -> f64 {
    let dx = b.r1 - a.r1;
    let dy = b.r2 - a.r2;
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        return p.dist(a);
    }
    let t = (((p.r1 - a.r1) * dx + (p.r2 - a.r2) * dy) / len2).clamp(0.0, 1.0);
    p.dist(RatePair::new(a.r1 + t * dx, a.r2 + t * dy))
}
