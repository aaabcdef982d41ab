//! The materialised joint pmf and information measures over it.

use std::collections::HashMap;

/// The ten scheme variables, in storage order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(usize)]
pub enum Var {
    Q = 0,
    S = 1,
    U1 = 2,
    V1 = 3,
    U2 = 4,
    V2 = 5,
    X1 = 6,
    X2 = 7,
    Y1 = 8,
    Y2 = 9,
}

pub const VAR_COUNT: usize = 10;

/// A set of variables as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct VarSet(pub u16);

impl VarSet {
    pub fn of(vars: &[Var]) -> Self {
        let mut mask = 0u16;
        for &v in vars {
            mask |= 1 << v as usize;
        }
        VarSet(mask)
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn intersects(self, other: VarSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 & (1 << v as usize) != 0
    }
}

/// Full joint pmf over `(Q, S, U1, V1, U2, V2, X1, X2, Y1, Y2)`, stored
/// row-major in the [`Var`] order.
#[derive(Clone, Debug)]
pub struct JointPmf {
    shape: [usize; VAR_COUNT],
    weights: Vec<f64>,
}

impl JointPmf {
    pub(crate) fn new(shape: [usize; VAR_COUNT], weights: Vec<f64>) -> Self {
        debug_assert_eq!(shape.iter().product::<usize>(), weights.len());
        Self { shape, weights }
    }

    pub fn shape(&self) -> &[usize; VAR_COUNT] {
        &self.shape
    }

    pub fn total(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Marginal pmf over the variables in `keep`, flattened row-major in
    /// the same variable order.
    pub fn marginal(&self, keep: VarSet) -> Vec<f64> {
        let mut mult = [0usize; VAR_COUNT];
        let mut size = 1usize;
        // Row-major: the last variable is fastest.
        for v in (0..VAR_COUNT).rev() {
            if keep.0 & (1 << v) != 0 {
                mult[v] = size;
                size *= self.shape[v];
            }
        }
        let mut out = vec![0.0; size];
        let mut digits = [0usize; VAR_COUNT];
        let mut reduced = 0usize;
        for &w in &self.weights {
            out[reduced] += w;
            // Odometer increment with incremental reduced index.
            for v in (0..VAR_COUNT).rev() {
                digits[v] += 1;
                reduced += mult[v];
                if digits[v] < self.shape[v] {
                    break;
                }
                reduced -= mult[v] * self.shape[v];
                digits[v] = 0;
            }
        }
        out
    }

    /// Entropy in bits of the marginal over `vars` (`0 log 0 = 0`).
    pub fn entropy(&self, vars: VarSet) -> f64 {
        let marg = self.marginal(vars);
        -marg
            .iter()
            .filter(|&&p| p > 0.0)
            .map(|&p| p * p.log2())
            .sum::<f64>()
    }
}

/// Conditional mutual information `I(A; B | C)` in bits by direct
/// summation over the joint support.
///
/// Panics if the variable sets overlap.
pub fn cond_mutual_info(joint: &JointPmf, a: VarSet, b: VarSet, c: VarSet) -> f64 {
    assert!(
        !a.intersects(b) && !a.intersects(c) && !b.intersects(c),
        "variable sets must be disjoint"
    );
    joint.entropy(a.union(c)) + joint.entropy(b.union(c))
        - joint.entropy(a.union(b).union(c))
        - joint.entropy(c)
}

/// Entropy evaluator with memoised marginals, for assembling many
/// information terms over one joint.
pub(crate) struct MiEvaluator<'a> {
    joint: &'a JointPmf,
    cache: HashMap<VarSet, f64>,
}

impl<'a> MiEvaluator<'a> {
    pub fn new(joint: &'a JointPmf) -> Self {
        Self {
            joint,
            cache: HashMap::new(),
        }
    }

    fn h(&mut self, vars: VarSet) -> f64 {
        if let Some(&v) = self.cache.get(&vars) {
            return v;
        }
        let v = self.joint.entropy(vars);
        self.cache.insert(vars, v);
        v
    }

    pub fn mi(&mut self, a: VarSet, b: VarSet, c: VarSet) -> f64 {
        self.h(a.union(c)) + self.h(b.union(c)) - self.h(a.union(b).union(c)) - self.h(c)
    }
}
