//! Scheme description, validation, joint construction, and the text format.
//!
//! # Scheme file format
//!
//! Whitespace-separated tokens; `#` starts a comment to end of line.
//! Sections appear in order, each a keyword followed by its numbers:
//!
//! ```text
//! mode simultaneous            # or: superposition
//! alphabets q=1 s=2 u1=2 v1=2 u2=2 v2=2 x1=2 x2=2 y1=2 y2=2
//! p_q   <q floats>
//! p_s   <s floats>
//! cond_u1 <q*s rows of u1 floats, row-major over (q, s)>
//! cond_v1 <q*s rows of v1 floats; superposition: q*s*u1 rows over (q, s, u1)>
//! cond_u2 <q*s rows of u2 floats>
//! cond_v2 <q*s rows of v2 floats; superposition: q*s*u2 rows>
//! f1 <u1*v1*s integers in 0..x1, row-major over (u1, v1, s)>
//! f2 <u2*v2*s integers in 0..x2, row-major over (u2, v2, s)>
//! channel <x1*x2*s rows of y1*y2 floats, row-major over (x1, x2, s)>
//! ```
//!
//! Every count is fixed by the header, so truncated or oversized tables
//! are hard errors.

use super::joint::{JointPmf, VAR_COUNT};
use thiserror::Error;

/// Probability rows must sum to one within this tolerance.
pub const ROW_SUM_TOL: f64 = 1e-12;

/// Default cap on any single alphabet size; exact enumeration over the
/// ten-variable joint stays comfortably in memory below it. Larger
/// alphabets need [`DmScheme::validate_with_cap`].
pub const DEFAULT_ALPHABET_CAP: usize = 4;

#[derive(Debug, Error, PartialEq)]
pub enum DmError {
    #[error("table {table}: row {row} sums to {sum}, expected 1")]
    RowNotNormalised {
        table: &'static str,
        row: usize,
        sum: f64,
    },
    #[error("table {table}: negative weight in row {row}")]
    NegativeWeight { table: &'static str, row: usize },
    #[error("table {table} has {got} entries, expected {expected}")]
    TableShape {
        table: &'static str,
        got: usize,
        expected: usize,
    },
    #[error("encoder {table}: output {value} at index {index} outside alphabet of size {size}")]
    EncoderRange {
        table: &'static str,
        index: usize,
        value: usize,
        size: usize,
    },
    #[error("alphabet {name} has size {size}, cap is {cap} (raise the cap explicitly)")]
    AlphabetTooLarge {
        name: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("alphabet {0} must be non-empty")]
    EmptyAlphabet(&'static str),
    #[error("scheme is in {found} mode, operation needs {expected}")]
    ModeMismatch {
        expected: &'static str,
        found: &'static str,
    },
    #[error("parse error: {0}")]
    Parse(String),
}

/// Alphabet sizes of the ten variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Alphabets {
    pub q: usize,
    pub s: usize,
    pub u1: usize,
    pub v1: usize,
    pub u2: usize,
    pub v2: usize,
    pub x1: usize,
    pub x2: usize,
    pub y1: usize,
    pub y2: usize,
}

impl Alphabets {
    /// Uniform binary everywhere except a singleton time-share variable.
    pub fn binary() -> Self {
        Alphabets {
            q: 1,
            s: 2,
            u1: 2,
            v1: 2,
            u2: 2,
            v2: 2,
            x1: 2,
            x2: 2,
            y1: 2,
            y2: 2,
        }
    }

    pub fn shape(&self) -> [usize; VAR_COUNT] {
        [
            self.q, self.s, self.u1, self.v1, self.u2, self.v2, self.x1, self.x2, self.y1, self.y2,
        ]
    }
}

/// How the private auxiliary is generated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EncodingMode {
    /// `p(v_j | q, s)`: public and private codewords drawn independently
    /// given `(Q, S)`.
    Simultaneous,
    /// `p(v_j | u_j, q, s)`: private codewords superimposed on public ones.
    Superposition,
}

impl EncodingMode {
    fn name(self) -> &'static str {
        match self {
            EncodingMode::Simultaneous => "simultaneous",
            EncodingMode::Superposition => "superposition",
        }
    }
}

/// A complete scheme description.
///
/// Conditional tables are flattened row-major with the conditioned
/// variable fastest: `cond_u1[q][s][u1]`, and in superposition mode
/// `cond_v1[q][s][u1][v1]` (the `u` axis is absent in simultaneous mode).
/// Encoders are `f1[u1][v1][s] -> x1`. The channel is
/// `channel[x1][x2][s][y1][y2]`.
#[derive(Clone, Debug, PartialEq)]
pub struct DmScheme {
    pub mode: EncodingMode,
    pub sizes: Alphabets,
    pub p_q: Vec<f64>,
    pub p_s: Vec<f64>,
    pub cond_u1: Vec<f64>,
    pub cond_v1: Vec<f64>,
    pub cond_u2: Vec<f64>,
    pub cond_v2: Vec<f64>,
    pub f1: Vec<usize>,
    pub f2: Vec<usize>,
    pub channel: Vec<f64>,
}

fn check_rows(table: &'static str, data: &[f64], rows: usize, width: usize) -> Result<(), DmError> {
    if data.len() != rows * width {
        return Err(DmError::TableShape {
            table,
            got: data.len(),
            expected: rows * width,
        });
    }
    for r in 0..rows {
        let row = &data[r * width..(r + 1) * width];
        if row.iter().any(|&w| w < 0.0) {
            return Err(DmError::NegativeWeight { table, row: r });
        }
        let sum: f64 = row.iter().sum();
        if (sum - 1.0).abs() > ROW_SUM_TOL {
            return Err(DmError::RowNotNormalised { table, row: r, sum });
        }
    }
    Ok(())
}

impl DmScheme {
    fn v_rows(&self, user: u8) -> usize {
        let base = self.sizes.q * self.sizes.s;
        match self.mode {
            EncodingMode::Simultaneous => base,
            EncodingMode::Superposition => {
                base * if user == 1 {
                    self.sizes.u1
                } else {
                    self.sizes.u2
                }
            }
        }
    }

    pub fn validate(&self) -> Result<(), DmError> {
        self.validate_with_cap(DEFAULT_ALPHABET_CAP)
    }

    pub fn validate_with_cap(&self, cap: usize) -> Result<(), DmError> {
        let a = &self.sizes;
        for (name, size) in [
            ("q", a.q),
            ("s", a.s),
            ("u1", a.u1),
            ("v1", a.v1),
            ("u2", a.u2),
            ("v2", a.v2),
            ("x1", a.x1),
            ("x2", a.x2),
            ("y1", a.y1),
            ("y2", a.y2),
        ] {
            if size == 0 {
                return Err(DmError::EmptyAlphabet(name));
            }
            if size > cap {
                return Err(DmError::AlphabetTooLarge { name, size, cap });
            }
        }
        check_rows("p_q", &self.p_q, 1, a.q)?;
        check_rows("p_s", &self.p_s, 1, a.s)?;
        let qs = a.q * a.s;
        check_rows("cond_u1", &self.cond_u1, qs, a.u1)?;
        check_rows("cond_u2", &self.cond_u2, qs, a.u2)?;
        check_rows("cond_v1", &self.cond_v1, self.v_rows(1), a.v1)?;
        check_rows("cond_v2", &self.cond_v2, self.v_rows(2), a.v2)?;
        for (table, f, len, size) in [
            ("f1", &self.f1, a.u1 * a.v1 * a.s, a.x1),
            ("f2", &self.f2, a.u2 * a.v2 * a.s, a.x2),
        ] {
            if f.len() != len {
                return Err(DmError::TableShape {
                    table,
                    got: f.len(),
                    expected: len,
                });
            }
            for (index, &value) in f.iter().enumerate() {
                if value >= size {
                    return Err(DmError::EncoderRange {
                        table,
                        index,
                        value,
                        size,
                    });
                }
            }
        }
        check_rows("channel", &self.channel, a.x1 * a.x2 * a.s, a.y1 * a.y2)?;
        Ok(())
    }

    fn v_prob(&self, user: u8, q: usize, s: usize, u: usize, v: usize) -> f64 {
        let a = &self.sizes;
        let (table, v_size, u_size) = if user == 1 {
            (&self.cond_v1, a.v1, a.u1)
        } else {
            (&self.cond_v2, a.v2, a.u2)
        };
        match self.mode {
            EncodingMode::Simultaneous => table[(q * a.s + s) * v_size + v],
            EncodingMode::Superposition => table[((q * a.s + s) * u_size + u) * v_size + v],
        }
    }

    /// Materialise the joint pmf
    /// `p(q) p(s) p(u1|.) p(v1|.) p(u2|.) p(v2|.) 1[x_j = F_j] p(y1,y2|x1,x2,s)`.
    pub fn build_joint(&self) -> Result<JointPmf, DmError> {
        self.build_joint_with_cap(DEFAULT_ALPHABET_CAP)
    }

    pub fn build_joint_with_cap(&self, cap: usize) -> Result<JointPmf, DmError> {
        self.validate_with_cap(cap)?;
        let a = &self.sizes;
        let shape = a.shape();
        let mut weights = vec![0.0f64; shape.iter().product()];
        // Strides for the row-major layout.
        let mut stride = [0usize; VAR_COUNT];
        let mut acc = 1usize;
        for v in (0..VAR_COUNT).rev() {
            stride[v] = acc;
            acc *= shape[v];
        }
        let ys = a.y1 * a.y2;
        for q in 0..a.q {
            let pq = self.p_q[q];
            for s in 0..a.s {
                let ps = self.p_s[s];
                for u1 in 0..a.u1 {
                    let pu1 = self.cond_u1[(q * a.s + s) * a.u1 + u1];
                    for v1 in 0..a.v1 {
                        let pv1 = self.v_prob(1, q, s, u1, v1);
                        let x1 = self.f1[(u1 * a.v1 + v1) * a.s + s];
                        for u2 in 0..a.u2 {
                            let pu2 = self.cond_u2[(q * a.s + s) * a.u2 + u2];
                            for v2 in 0..a.v2 {
                                let pv2 = self.v_prob(2, q, s, u2, v2);
                                let x2 = self.f2[(u2 * a.v2 + v2) * a.s + s];
                                let base = pq * ps * pu1 * pv1 * pu2 * pv2;
                                if base == 0.0 {
                                    continue;
                                }
                                let ch_row = ((x1 * a.x2 + x2) * a.s + s) * ys;
                                let cell = q * stride[0]
                                    + s * stride[1]
                                    + u1 * stride[2]
                                    + v1 * stride[3]
                                    + u2 * stride[4]
                                    + v2 * stride[5]
                                    + x1 * stride[6]
                                    + x2 * stride[7];
                                for y1 in 0..a.y1 {
                                    for y2 in 0..a.y2 {
                                        let w = base * self.channel[ch_row + y1 * a.y2 + y2];
                                        if w > 0.0 {
                                            weights[cell + y1 * stride[8] + y2 * stride[9]] += w;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(JointPmf::new(shape, weights))
    }

    pub(crate) fn expect_mode(&self, expected: EncodingMode) -> Result<(), DmError> {
        if self.mode == expected {
            Ok(())
        } else {
            Err(DmError::ModeMismatch {
                expected: expected.name(),
                found: self.mode.name(),
            })
        }
    }
}

struct Tokens<'a> {
    toks: Vec<&'a str>,
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str) -> Self {
        let toks = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(|l| l.split_whitespace())
            .collect();
        Self { toks, pos: 0 }
    }

    fn next(&mut self) -> Option<&'a str> {
        let t = self.toks.get(self.pos).copied();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, kw: &str) -> Result<(), DmError> {
        match self.next() {
            Some(t) if t == kw => Ok(()),
            Some(t) => Err(DmError::Parse(format!("expected '{kw}', found '{t}'"))),
            None => Err(DmError::Parse(format!(
                "expected '{kw}', found end of input"
            ))),
        }
    }

    fn floats(&mut self, kw: &'static str, count: usize) -> Result<Vec<f64>, DmError> {
        self.expect(kw)?;
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            let tok = self
                .next()
                .ok_or_else(|| DmError::Parse(format!("{kw}: missing value")))?;
            out.push(
                tok.parse::<f64>()
                    .map_err(|_| DmError::Parse(format!("{kw}: bad float '{tok}'")))?,
            );
        }
        Ok(out)
    }

    fn ints(&mut self, kw: &'static str, count: usize) -> Result<Vec<usize>, DmError> {
        self.expect(kw)?;
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            let tok = self
                .next()
                .ok_or_else(|| DmError::Parse(format!("{kw}: missing value")))?;
            out.push(
                tok.parse::<usize>()
                    .map_err(|_| DmError::Parse(format!("{kw}: bad integer '{tok}'")))?,
            );
        }
        Ok(out)
    }
}

/// Parse the text format described in the module docs.
pub fn parse_scheme(text: &str) -> Result<DmScheme, DmError> {
    let mut tokens = Tokens::new(text);

    tokens.expect("mode")?;
    let mode = match tokens.next() {
        Some("simultaneous") => EncodingMode::Simultaneous,
        Some("superposition") => EncodingMode::Superposition,
        Some(t) => return Err(DmError::Parse(format!("unknown mode '{t}'"))),
        None => return Err(DmError::Parse("missing mode".into())),
    };

    tokens.expect("alphabets")?;
    let mut sizes_map = std::collections::HashMap::new();
    for _ in 0..VAR_COUNT {
        let tok = tokens
            .next()
            .ok_or_else(|| DmError::Parse("missing alphabet entry".into()))?;
        let (name, val) = tok
            .split_once('=')
            .ok_or_else(|| DmError::Parse(format!("bad alphabet entry '{tok}'")))?;
        let size: usize = val
            .parse()
            .map_err(|_| DmError::Parse(format!("bad alphabet size '{val}'")))?;
        sizes_map.insert(name.to_string(), size);
    }
    let get = |name: &str| -> Result<usize, DmError> {
        sizes_map
            .get(name)
            .copied()
            .ok_or_else(|| DmError::Parse(format!("alphabet '{name}' missing")))
    };
    let sizes = Alphabets {
        q: get("q")?,
        s: get("s")?,
        u1: get("u1")?,
        v1: get("v1")?,
        u2: get("u2")?,
        v2: get("v2")?,
        x1: get("x1")?,
        x2: get("x2")?,
        y1: get("y1")?,
        y2: get("y2")?,
    };

    let v_rows = |user: u8| {
        let base = sizes.q * sizes.s;
        match mode {
            EncodingMode::Simultaneous => base,
            EncodingMode::Superposition => base * if user == 1 { sizes.u1 } else { sizes.u2 },
        }
    };

    let p_q = tokens.floats("p_q", sizes.q)?;
    let p_s = tokens.floats("p_s", sizes.s)?;
    let cond_u1 = tokens.floats("cond_u1", sizes.q * sizes.s * sizes.u1)?;
    let cond_v1 = tokens.floats("cond_v1", v_rows(1) * sizes.v1)?;
    let cond_u2 = tokens.floats("cond_u2", sizes.q * sizes.s * sizes.u2)?;
    let cond_v2 = tokens.floats("cond_v2", v_rows(2) * sizes.v2)?;
    let f1 = tokens.ints("f1", sizes.u1 * sizes.v1 * sizes.s)?;
    let f2 = tokens.ints("f2", sizes.u2 * sizes.v2 * sizes.s)?;
    let channel = tokens.floats(
        "channel",
        sizes.x1 * sizes.x2 * sizes.s * sizes.y1 * sizes.y2,
    )?;

    if let Some(t) = tokens.next() {
        return Err(DmError::Parse(format!("unexpected trailing token '{t}'")));
    }
    let scheme = DmScheme {
        mode,
        sizes,
        p_q,
        p_s,
        cond_u1,
        cond_v1,
        cond_u2,
        cond_v2,
        f1,
        f2,
        channel,
    };
    scheme.validate()?;
    Ok(scheme)
}
