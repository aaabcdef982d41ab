//! Fourier–Motzkin elimination over small linear inequality systems.
//!
//! Systems here have at most a handful of variables (the four sub-rates
//! `R10, R11, R20, R22`) and small-integer coefficients by construction, so
//! elimination is exact modulo f64 addition of right-hand sides. Redundancy
//! removal after each step keeps row growth bounded; the exact per-row test
//! maximises the row's left-hand side over the remaining system by
//! enumerating its feasible basic points inside a huge bounding box, which
//! makes the test exact for any system whose interesting geometry fits the
//! box (rate systems live within tens of bits).

use crate::geometry::{HalfPlane, RateRegion};
use thiserror::Error;

/// Coefficient magnitudes below this are treated as zero when classifying
/// rows during elimination and when combining pairs.
pub const COEFF_TOL: f64 = 1e-12;

/// Slack tolerance for redundancy and feasibility decisions.
const REDUNDANCY_TOL: f64 = 1e-9;

/// Bounding box half-width for the exact redundancy pass.
const BOX_BOUND: f64 = 1e12;

#[derive(Debug, Error, PartialEq)]
pub enum FmeError {
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("row has {got} coefficients, system has {expected} variables")]
    RowShape { got: usize, expected: usize },
    #[error("missing non-negativity row for variable '{0}'")]
    MissingNonNegativity(String),
    #[error("non-finite right-hand side in row {0}")]
    NonFiniteRhs(usize),
}

/// One inequality `coeffs . vars <= rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub coeffs: Vec<f64>,
    pub rhs: f64,
}

/// A system of linear inequalities over named variables.
#[derive(Clone, Debug, Default)]
pub struct IneqSystem {
    vars: Vec<String>,
    rows: Vec<Row>,
}

impl IneqSystem {
    pub fn new(vars: &[&str]) -> Self {
        Self {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    /// System pre-loaded with `-x_i <= 0` for every variable.
    pub fn with_nonnegativity(vars: &[&str]) -> Self {
        let mut sys = Self::new(vars);
        for i in 0..sys.vars.len() {
            let mut coeffs = vec![0.0; sys.vars.len()];
            coeffs[i] = -1.0;
            sys.rows.push(Row { coeffs, rhs: 0.0 });
        }
        sys
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn var_index(&self, var: &str) -> Result<usize, FmeError> {
        self.vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| FmeError::UnknownVariable(var.to_string()))
    }

    pub fn push_row(&mut self, coeffs: Vec<f64>, rhs: f64) -> Result<(), FmeError> {
        if coeffs.len() != self.vars.len() {
            return Err(FmeError::RowShape {
                got: coeffs.len(),
                expected: self.vars.len(),
            });
        }
        self.rows.push(Row { coeffs, rhs });
        Ok(())
    }

    /// Convenience: add `sum of named vars <= rhs` with unit coefficients.
    pub fn push_sum_row(&mut self, vars: &[&str], rhs: f64) -> Result<(), FmeError> {
        let mut coeffs = vec![0.0; self.vars.len()];
        for v in vars {
            coeffs[self.var_index(v)?] = 1.0;
        }
        self.rows.push(Row { coeffs, rhs });
        Ok(())
    }

    /// Exact projection of the feasible set onto the remaining variables.
    ///
    /// Every positive/negative coefficient row pair is combined so that the
    /// eliminated coefficient cancels exactly; zero-coefficient rows carry
    /// over. No redundancy removal is performed here.
    pub fn eliminate(&self, var: &str) -> Result<IneqSystem, FmeError> {
        let idx = self.var_index(var)?;
        let mut pos: Vec<&Row> = Vec::new();
        let mut neg: Vec<&Row> = Vec::new();
        let mut zero: Vec<&Row> = Vec::new();
        for row in &self.rows {
            let c = row.coeffs[idx];
            if c > COEFF_TOL {
                pos.push(row);
            } else if c < -COEFF_TOL {
                neg.push(row);
            } else {
                zero.push(row);
            }
        }
        let drop_col = |row: &Row, scale: f64, other: &Row, other_scale: f64| -> Row {
            let coeffs = row
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .enumerate()
                .filter(|&(i, _)| i != idx)
                .map(|(_, (a, b))| a * scale + b * other_scale)
                .collect();
            Row {
                coeffs,
                rhs: row.rhs * scale + other.rhs * other_scale,
            }
        };
        let mut vars = self.vars.clone();
        vars.remove(idx);
        let mut out = IneqSystem {
            vars,
            rows: Vec::new(),
        };
        for p in &pos {
            for n in &neg {
                // p scaled by |c_n|, n scaled by c_p: the eliminated column
                // cancels exactly.
                out.rows.push(drop_col(p, -n.coeffs[idx], n, p.coeffs[idx]));
            }
        }
        for z in &zero {
            let coeffs = z
                .coeffs
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != idx)
                .map(|(_, &a)| a)
                .collect();
            out.rows.push(Row { coeffs, rhs: z.rhs });
        }
        Ok(out)
    }

    /// Remove redundant rows without changing the feasible set.
    ///
    /// Duplicates and pairwise-dominated rows go first; each surviving row
    /// is then tested exactly by maximising its left-hand side over the
    /// system without it. The maximisation runs inside a `|x_i| <= 1e12`
    /// bounding box so that basic-point enumeration is exact; rate systems
    /// never approach that scale.
    pub fn remove_redundant(&self) -> IneqSystem {
        let mut rows: Vec<Row> = Vec::new();
        'outer: for row in &self.rows {
            let scale = row.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
            if scale <= COEFF_TOL {
                // Constant row: vacuous if rhs >= 0, otherwise the system is
                // infeasible and the single row is its minimal description.
                if row.rhs < 0.0 {
                    return IneqSystem {
                        vars: self.vars.clone(),
                        rows: vec![row.clone()],
                    };
                }
                continue;
            }
            let normalised: Vec<f64> = row.coeffs.iter().map(|c| c / scale).collect();
            let nrhs = row.rhs / scale;
            for kept in &mut rows {
                let kscale = kept.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
                let same_direction = kept
                    .coeffs
                    .iter()
                    .zip(&normalised)
                    .all(|(k, n)| (k / kscale - n).abs() <= COEFF_TOL);
                if same_direction {
                    // Parallel rows: keep the tighter bound.
                    if nrhs < kept.rhs / kscale {
                        *kept = Row {
                            coeffs: normalised.clone(),
                            rhs: nrhs,
                        };
                    }
                    continue 'outer;
                }
            }
            rows.push(Row {
                coeffs: normalised,
                rhs: nrhs,
            });
        }

        // Exact pass: drop a row when its maximum over the others stays at
        // or below its own bound. A row over an infeasible remainder is
        // also redundant (the set is empty either way).
        let d = self.vars.len();
        let mut bounding_box: Vec<Row> = Vec::with_capacity(2 * d);
        for i in 0..d {
            for sign in [1.0, -1.0] {
                let mut coeffs = vec![0.0; d];
                coeffs[i] = sign;
                bounding_box.push(Row {
                    coeffs,
                    rhs: BOX_BOUND,
                });
            }
        }
        let mut i = 0;
        while i < rows.len() {
            let mut rest: Vec<Row> = Vec::with_capacity(rows.len() - 1 + bounding_box.len());
            rest.extend_from_slice(&rows[..i]);
            rest.extend_from_slice(&rows[i + 1..]);
            rest.extend_from_slice(&bounding_box);
            match max_over(&rest, &rows[i].coeffs) {
                Some(max) if max > rows[i].rhs + REDUNDANCY_TOL * (1.0 + rows[i].rhs.abs()) => {
                    i += 1;
                }
                _ => {
                    rows.remove(i);
                }
            }
        }
        IneqSystem {
            vars: self.vars.clone(),
            rows,
        }
    }

    /// Feasibility of a fully assigned point, with slack `tol` per row.
    pub fn satisfied_by(&self, point: &[f64], tol: f64) -> bool {
        self.rows.iter().all(|row| {
            let lhs: f64 = row.coeffs.iter().zip(point).map(|(c, x)| c * x).sum();
            lhs <= row.rhs + tol
        })
    }
}

/// Maximum of `objective . x` over the feasible basic points of `rows`.
///
/// Exact when the feasible set is bounded (callers append a bounding box).
/// Returns `None` when no feasible basic point exists, i.e. the system is
/// infeasible.
fn max_over(rows: &[Row], objective: &[f64]) -> Option<f64> {
    let d = objective.len();
    if d == 0 {
        return Some(0.0);
    }
    let n = rows.len();
    if n < d {
        return None;
    }
    let mut best: Option<f64> = None;
    let mut subset: Vec<usize> = (0..d).collect();
    loop {
        if let Some(x) = solve_square(rows, &subset, d) {
            let feasible = rows.iter().all(|row| {
                let lhs: f64 = row.coeffs.iter().zip(&x).map(|(c, v)| c * v).sum();
                lhs <= row.rhs + REDUNDANCY_TOL * (1.0 + row.rhs.abs())
            });
            if feasible {
                let val: f64 = objective.iter().zip(&x).map(|(c, v)| c * v).sum();
                best = Some(best.map_or(val, |b: f64| b.max(val)));
            }
        }
        // Next d-subset of {0..n} in lexicographic order.
        let mut k = d;
        loop {
            if k == 0 {
                return best;
            }
            k -= 1;
            if subset[k] < n - (d - k) {
                subset[k] += 1;
                for j in k + 1..d {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Solve the d x d system given by the selected rows' boundaries.
fn solve_square(rows: &[Row], subset: &[usize], d: usize) -> Option<Vec<f64>> {
    let mut a: Vec<Vec<f64>> = subset.iter().map(|&i| rows[i].coeffs.clone()).collect();
    let mut b: Vec<f64> = subset.iter().map(|&i| rows[i].rhs).collect();
    for col in 0..d {
        let pivot =
            (col..d).max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())?;
        if a[pivot][col].abs() < 1e-9 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in 0..d {
            if r != col {
                let f = a[r][col] / a[col][col];
                let (head, tail) = a.split_at_mut(r.max(col));
                let (row_r, row_col) = if r > col {
                    (&mut tail[0], &head[col])
                } else {
                    (&mut head[r], &tail[0])
                };
                for c in col..d {
                    row_r[c] -= f * row_col[c];
                }
                b[r] -= f * b[col];
            }
        }
    }
    Some((0..d).map(|i| b[i] / a[i][i]).collect())
}

/// Project a sub-rate system onto the total-rate pair `(R1, R2)`.
///
/// Expects variables `R10, R11, R20, R22` with non-negativity rows present.
/// The change of variables `R1 = R10 + R11`, `R2 = R20 + R22` keeps the
/// split rates `R10, R20` free; they are then eliminated and the remaining
/// two-variable system is intersected in the non-negative quadrant.
pub fn project_to_rate_pair(sys: &IneqSystem) -> Result<RateRegion, FmeError> {
    let i10 = sys.var_index("R10")?;
    let i11 = sys.var_index("R11")?;
    let i20 = sys.var_index("R20")?;
    let i22 = sys.var_index("R22")?;
    for (idx, name) in [(i10, "R10"), (i11, "R11"), (i20, "R20"), (i22, "R22")] {
        let has_nonneg = sys.rows.iter().any(|row| {
            row.coeffs[idx] < -COEFF_TOL
                && row.rhs == 0.0
                && row
                    .coeffs
                    .iter()
                    .enumerate()
                    .all(|(j, &c)| j == idx || c.abs() <= COEFF_TOL)
        });
        if !has_nonneg {
            return Err(FmeError::MissingNonNegativity(name.to_string()));
        }
    }
    for (i, row) in sys.rows.iter().enumerate() {
        if !row.rhs.is_finite() {
            return Err(FmeError::NonFiniteRhs(i));
        }
    }

    // Rewrite over (R1, R2, R10, R20): R11 = R1 - R10, R22 = R2 - R20.
    let mut work = IneqSystem::new(&["R1", "R2", "R10", "R20"]);
    for row in &sys.rows {
        let c10 = row.coeffs[i10];
        let c11 = row.coeffs[i11];
        let c20 = row.coeffs[i20];
        let c22 = row.coeffs[i22];
        work.rows.push(Row {
            coeffs: vec![c11, c22, c10 - c11, c20 - c22],
            rhs: row.rhs,
        });
    }
    let work = work.eliminate("R10")?.remove_redundant();
    let work = work.eliminate("R20")?.remove_redundant();

    let mut planes = Vec::with_capacity(work.rows.len());
    for row in &work.rows {
        let a = row.coeffs[0];
        let b = row.coeffs[1];
        if a.abs() <= COEFF_TOL && b.abs() <= COEFF_TOL {
            if row.rhs < 0.0 {
                return Ok(RateRegion::empty());
            }
            continue;
        }
        planes.push(HalfPlane::new(a, b, row.rhs));
    }
    Ok(RateRegion::intersect_halfplanes(&planes))
}
