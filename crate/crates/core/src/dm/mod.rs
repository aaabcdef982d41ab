//! Exact finite-alphabet evaluation of the discrete-memoryless schemes.
//!
//! A [`DmScheme`] fixes the alphabets and distributions of the
//! time-sharing variable `Q`, the state `S`, the per-user public/private
//! auxiliaries `U_j`, `V_j`, deterministic encoder maps
//! `x_j = F_j(u_j, v_j, s)` and the channel `p(y1, y2 | x1, x2, s)`.
//! [`DmScheme::build_joint`] materialises the full ten-variable joint pmf,
//! from which conditional mutual informations are evaluated by direct
//! summation and assembled into the sub-rate inequality systems of the
//! two coding schemes.

mod joint;
mod scheme;
mod systems;

pub use joint::{cond_mutual_info, JointPmf, Var, VarSet};
pub use scheme::{parse_scheme, Alphabets, DmError, DmScheme, EncodingMode};
pub use systems::{dm_region, embed_simultaneous, simultaneous_system, superposition_system};
