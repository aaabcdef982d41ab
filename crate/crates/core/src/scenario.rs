//! Scenario configs, figure presets, region reports and file emission.
//!
//! A [`ScenarioConfig`] names a channel (raw or standard form, powers
//! optionally in dB), a list of regions to compute, and output options.
//! [`run_scenario`] evaluates every requested region — mapping per-region
//! infeasibilities to empty results rather than failures — and assembles a
//! [`RegionReport`] with full provenance and the pairwise inclusion
//! matrix. Reports can be written as CSV (one vertex per row), JSON, and a
//! self-contained gnuplot script; repeated runs with the same config
//! produce byte-identical files. Scheme files for [`run_dm_scheme`] use
//! the text format documented in [`crate::dm::scheme`].

use crate::channel::{
    classify, db_to_linear, standardize, InterferenceCase, RawChannel, SchemeParams, StdChannel,
};
use crate::dm::{dm_region, DmScheme};
use crate::gaussian::{
    baseline_region, enlarged_region, enlarged_weak_region, general_region, mixed_region,
    strong_region, variant_hull, weak_region, Baseline, GaussianError, MixedVariant, StrongVariant,
    SweepGrid, VariantFamily, WeakSweep, WeakVariant, OUTER_LEDGER_VERSION,
};
use crate::geometry::RateRegion;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::io::Write;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("config error: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Output encodings for [`write_report`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
    Gnuplot,
}

impl std::str::FromStr for OutputFormat {
    type Err = ScenarioError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            "gnuplot" => Ok(OutputFormat::Gnuplot),
            other => Err(ScenarioError::Config(format!(
                "formats: unknown format '{other}'"
            ))),
        }
    }
}

/// Output rate unit. Core arithmetic is always base-2; nats only rescale
/// emitted values.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum LogBase {
    #[default]
    #[serde(rename = "2")]
    Two,
    #[serde(rename = "e")]
    Nat,
}

impl LogBase {
    pub fn scale(self) -> f64 {
        match self {
            LogBase::Two => 1.0,
            LogBase::Nat => std::f64::consts::LN_2,
        }
    }

    fn unit(self) -> &'static str {
        match self {
            LogBase::Two => "bits",
            LogBase::Nat => "nats",
        }
    }
}

impl std::str::FromStr for LogBase {
    type Err = ScenarioError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "2" => Ok(LogBase::Two),
            "e" => Ok(LogBase::Nat),
            other => Err(ScenarioError::Config(format!(
                "log_base: expected '2' or 'e', got '{other}'"
            ))),
        }
    }
}

/// A computable region selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RegionRequest {
    /// State-oblivious inner comparator.
    Inner,
    /// Classical state-free outer bound.
    Outer,
    /// Case-matched time-sharing hull over every swept family.
    Enlarged,
    /// Weak regime: time-sharing hull of the cancellation sweep only.
    EnlargedGamma,
    /// Weak regime: time-sharing hull of the power-split sweep only.
    EnlargedBeta,
    /// General scheme at explicit `scheme_params`.
    General,
    S1,
    S2,
    S3Hull,
    S4Hull,
    M1Hull,
    M2,
    M3Hull,
    M4Hull,
    W1,
    W2,
    W3Hull,
    W4Hull,
    W5Hull,
    W6Hull,
}

impl RegionRequest {
    pub const ALL: [RegionRequest; 20] = [
        RegionRequest::Inner,
        RegionRequest::Outer,
        RegionRequest::Enlarged,
        RegionRequest::EnlargedGamma,
        RegionRequest::EnlargedBeta,
        RegionRequest::General,
        RegionRequest::S1,
        RegionRequest::S2,
        RegionRequest::S3Hull,
        RegionRequest::S4Hull,
        RegionRequest::M1Hull,
        RegionRequest::M2,
        RegionRequest::M3Hull,
        RegionRequest::M4Hull,
        RegionRequest::W1,
        RegionRequest::W2,
        RegionRequest::W3Hull,
        RegionRequest::W4Hull,
        RegionRequest::W5Hull,
        RegionRequest::W6Hull,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RegionRequest::Inner => "inner",
            RegionRequest::Outer => "outer",
            RegionRequest::Enlarged => "enlarged",
            RegionRequest::EnlargedGamma => "enlarged_gamma",
            RegionRequest::EnlargedBeta => "enlarged_beta",
            RegionRequest::General => "general",
            RegionRequest::S1 => "s1",
            RegionRequest::S2 => "s2",
            RegionRequest::S3Hull => "s3_hull",
            RegionRequest::S4Hull => "s4_hull",
            RegionRequest::M1Hull => "m1_hull",
            RegionRequest::M2 => "m2",
            RegionRequest::M3Hull => "m3_hull",
            RegionRequest::M4Hull => "m4_hull",
            RegionRequest::W1 => "w1",
            RegionRequest::W2 => "w2",
            RegionRequest::W3Hull => "w3_hull",
            RegionRequest::W4Hull => "w4_hull",
            RegionRequest::W5Hull => "w5_hull",
            RegionRequest::W6Hull => "w6_hull",
        }
    }
}

impl std::str::FromStr for RegionRequest {
    type Err = ScenarioError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RegionRequest::ALL
            .iter()
            .copied()
            .find(|r| r.name() == s)
            .ok_or_else(|| ScenarioError::Config(format!("regions: unknown region '{s}'")))
    }
}

impl fmt::Display for RegionRequest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Channel description as found in config files: standard form (`g12`,
/// `g21`) or raw gains (`h11..h22`), powers linear or `_db`-suffixed.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelSpec {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g12: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g21: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h11: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h12: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h21: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h22: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n2: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p2: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p1_db: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p2_db: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_db: Option<f64>,
}

impl ChannelSpec {
    fn power(field: &str, linear: Option<f64>, db: Option<f64>) -> Result<f64, ScenarioError> {
        match (linear, db) {
            (Some(v), None) => Ok(v),
            (None, Some(d)) => Ok(db_to_linear(d)),
            (Some(_), Some(_)) => Err(ScenarioError::Config(format!(
                "channel.{field}: both linear and dB values given"
            ))),
            (None, None) => Err(ScenarioError::Config(format!("channel.{field}: missing"))),
        }
    }

    /// Resolve to standard form (dB conversion happens here, once).
    pub fn resolve(&self) -> Result<StdChannel, ScenarioError> {
        let n1 = self.n1.unwrap_or(1.0);
        let n2 = self.n2.unwrap_or(1.0);
        let p1 = Self::power("p1", self.p1, self.p1_db)?;
        let p2 = Self::power("p2", self.p2, self.p2_db)?;
        let k = Self::power("k", self.k, self.k_db)?;
        let raw_given = [self.h11, self.h12, self.h21, self.h22];
        if raw_given.iter().all(Option::is_some) {
            if self.g12.is_some() || self.g21.is_some() {
                return Err(ScenarioError::Config(
                    "channel: give either raw gains (h11..h22) or cross gains (g12, g21), not both"
                        .into(),
                ));
            }
            let raw = RawChannel {
                h11: self.h11.unwrap(),
                h12: self.h12.unwrap(),
                h21: self.h21.unwrap(),
                h22: self.h22.unwrap(),
                n1,
                n2,
                p1_raw: p1,
                p2_raw: p2,
                k,
            };
            return standardize(&raw).map_err(|e| ScenarioError::Config(format!("channel: {e}")));
        }
        if raw_given.iter().any(Option::is_some) {
            return Err(ScenarioError::Config(
                "channel: raw form needs all of h11, h12, h21, h22".into(),
            ));
        }
        match (self.g12, self.g21) {
            (Some(g12), Some(g21)) => StdChannel::new(g12, g21, n1, n2, p1, p2, k)
                .map_err(|e| ScenarioError::Config(format!("channel: {e}"))),
            _ => Err(ScenarioError::Config(
                "channel: standard form needs g12 and g21".into(),
            )),
        }
    }
}

/// A full scenario: channel, regions, sweep resolution, tolerances and
/// output options. Mirrors the JSON config format one to one.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub channel: ChannelSpec,
    pub regions: Vec<RegionRequest>,
    #[serde(default = "default_grid_points")]
    pub grid_points: usize,
    #[serde(default = "default_tol")]
    pub tol: f64,
    #[serde(default = "default_formats")]
    pub formats: Vec<OutputFormat>,
    #[serde(default)]
    pub log_base: LogBase,
    /// Parameters for the `general` region.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scheme_params: Option<SchemeParams>,
    /// Set when the config came from a named preset.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
}

fn default_grid_points() -> usize {
    crate::gaussian::DEFAULT_GRID_POINTS
}

fn default_tol() -> f64 {
    1e-6
}

fn default_formats() -> Vec<OutputFormat> {
    vec![OutputFormat::Csv, OutputFormat::Json]
}

impl ScenarioConfig {
    pub fn from_json(text: &str) -> Result<Self, ScenarioError> {
        let cfg: ScenarioConfig =
            serde_json::from_str(text).map_err(|e| ScenarioError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ScenarioError> {
        if self.regions.is_empty() {
            return Err(ScenarioError::Config(
                "regions: at least one region required".into(),
            ));
        }
        if self.grid_points == 0 {
            return Err(ScenarioError::Config(
                "grid_points: must be at least 1".into(),
            ));
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(ScenarioError::Config("tol: must be positive".into()));
        }
        if self.formats.is_empty() {
            return Err(ScenarioError::Config(
                "formats: at least one format required".into(),
            ));
        }
        if self.regions.contains(&RegionRequest::General) && self.scheme_params.is_none() {
            return Err(ScenarioError::Config(
                "scheme_params: required by the 'general' region".into(),
            ));
        }
        self.channel.resolve().map(|_| ())
    }
}

/// Named figure presets with the published channel parameters.
pub fn preset(name: &str) -> Option<ScenarioConfig> {
    let channel = |g12: f64, g21: f64| ChannelSpec {
        g12: Some(g12),
        g21: Some(g21),
        n1: Some(1.0),
        n2: Some(1.0),
        p1_db: Some(10.0),
        p2_db: Some(10.0),
        k_db: Some(10.0),
        ..Default::default()
    };
    let (spec, regions): (ChannelSpec, Vec<RegionRequest>) = match name {
        "fig4" => (
            channel(10.0, 10.0),
            vec![
                RegionRequest::Inner,
                RegionRequest::S1,
                RegionRequest::S2,
                RegionRequest::S3Hull,
                RegionRequest::S4Hull,
                RegionRequest::Enlarged,
                RegionRequest::Outer,
            ],
        ),
        "fig5" | "fig6" => (
            channel(0.2, if name == "fig5" { 2.0 } else { 5.0 }),
            vec![
                RegionRequest::Inner,
                RegionRequest::M1Hull,
                RegionRequest::M2,
                RegionRequest::M3Hull,
                RegionRequest::M4Hull,
                RegionRequest::Enlarged,
                RegionRequest::Outer,
            ],
        ),
        "fig7" => (
            channel(0.2, 0.2),
            vec![
                RegionRequest::Inner,
                RegionRequest::W1,
                RegionRequest::W2,
                RegionRequest::W3Hull,
                RegionRequest::W4Hull,
                RegionRequest::EnlargedGamma,
                RegionRequest::Outer,
            ],
        ),
        "fig8" => (
            channel(0.2, 0.2),
            vec![
                RegionRequest::Inner,
                RegionRequest::W1,
                RegionRequest::W2,
                RegionRequest::W5Hull,
                RegionRequest::W6Hull,
                RegionRequest::EnlargedBeta,
                RegionRequest::Outer,
            ],
        ),
        _ => return None,
    };
    Some(ScenarioConfig {
        channel: spec,
        regions,
        grid_points: default_grid_points(),
        tol: default_tol(),
        formats: default_formats(),
        log_base: LogBase::Two,
        scheme_params: None,
        preset: Some(name.to_string()),
    })
}

pub const PRESET_NAMES: [&str; 5] = ["fig4", "fig5", "fig6", "fig7", "fig8"];

/// One computed region in a report.
#[derive(Clone, Debug, Serialize)]
pub struct RegionEntry {
    pub name: String,
    /// Counter-clockwise vertices, `[R1, R2]` in the report's rate unit.
    pub vertices: Vec<[f64; 2]>,
    pub area: f64,
    /// Populated when the region came out empty for a reportable reason.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip)]
    pub region: RateRegion,
}

/// Run provenance echoed into every report.
#[derive(Clone, Debug, Serialize)]
pub struct Provenance {
    pub tool_version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    /// Absent for scheme-file runs, which carry no Gaussian channel.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub channel: Option<StdChannel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<InterferenceCase>,
    pub grid_points: usize,
    pub tol: f64,
    pub rate_unit: &'static str,
    pub outer_ledger_version: u32,
}

/// Full scenario output: provenance, regions sorted by name, and the
/// inclusion matrix `inclusion[i][j] = regions[i] contains regions[j]`.
#[derive(Clone, Debug, Serialize)]
pub struct RegionReport {
    pub provenance: Provenance,
    pub regions: Vec<RegionEntry>,
    pub inclusion: Vec<Vec<bool>>,
}

impl RegionReport {
    pub fn entry(&self, name: &str) -> Option<&RegionEntry> {
        self.regions.iter().find(|e| e.name == name)
    }
}

/// Pairwise containment matrix at tolerance `tol`.
pub fn compare(regions: &[(&str, &RateRegion)], tol: f64) -> Vec<Vec<bool>> {
    regions
        .iter()
        .map(|(_, outer)| {
            regions
                .iter()
                .map(|(_, inner)| outer.contains(inner, tol))
                .collect()
        })
        .collect()
}

fn compute_region(
    ch: &StdChannel,
    grid: &SweepGrid,
    sp: Option<&SchemeParams>,
    req: RegionRequest,
) -> Result<RateRegion, GaussianError> {
    match req {
        RegionRequest::Inner => Ok(baseline_region(ch, Baseline::InnerIgnoreState)),
        RegionRequest::Outer => Ok(baseline_region(ch, Baseline::Outer)),
        RegionRequest::Enlarged => enlarged_region(ch, grid),
        RegionRequest::EnlargedGamma => enlarged_weak_region(ch, grid, WeakSweep::Gamma),
        RegionRequest::EnlargedBeta => enlarged_weak_region(ch, grid, WeakSweep::Beta),
        RegionRequest::General => general_region(ch, sp.expect("validated: scheme_params present")),
        RegionRequest::S1 => strong_region(ch, StrongVariant::S1),
        RegionRequest::S2 => strong_region(ch, StrongVariant::S2),
        RegionRequest::S3Hull => variant_hull(ch, VariantFamily::S3, grid),
        RegionRequest::S4Hull => variant_hull(ch, VariantFamily::S4, grid),
        RegionRequest::M1Hull => variant_hull(ch, VariantFamily::M1, grid),
        RegionRequest::M2 => mixed_region(ch, MixedVariant::M2),
        RegionRequest::M3Hull => variant_hull(ch, VariantFamily::M3, grid),
        RegionRequest::M4Hull => variant_hull(ch, VariantFamily::M4, grid),
        RegionRequest::W1 => weak_region(ch, WeakVariant::W1),
        RegionRequest::W2 => weak_region(ch, WeakVariant::W2),
        RegionRequest::W3Hull => variant_hull(ch, VariantFamily::W3, grid),
        RegionRequest::W4Hull => variant_hull(ch, VariantFamily::W4, grid),
        RegionRequest::W5Hull => variant_hull(ch, VariantFamily::W5, grid),
        RegionRequest::W6Hull => variant_hull(ch, VariantFamily::W6, grid),
    }
}

/// Evaluate a scenario. Per-region infeasibilities (regime mismatch,
/// collapsed bounds, infeasible parameters) yield empty entries with a
/// note; only configuration problems fail the run.
pub fn run_scenario(cfg: &ScenarioConfig) -> Result<RegionReport, ScenarioError> {
    cfg.validate()?;
    let ch = cfg.channel.resolve()?;
    let grid = SweepGrid::default_for(&ch).with_points(cfg.grid_points);

    let mut names: Vec<RegionRequest> = cfg.regions.clone();
    names.sort_by_key(|r| r.name());
    names.dedup();

    let mut entries: Vec<RegionEntry> = Vec::with_capacity(names.len());
    for req in names {
        let (region, note) = match compute_region(&ch, &grid, cfg.scheme_params.as_ref(), req) {
            Ok(r) => (r, None),
            Err(e) => (RateRegion::empty(), Some(e.to_string())),
        };
        let scale = cfg.log_base.scale();
        entries.push(RegionEntry {
            name: req.name().to_string(),
            vertices: region
                .vertices()
                .iter()
                .map(|v| [v.r1 * scale, v.r2 * scale])
                .collect(),
            area: region.area() * scale * scale,
            note,
            region,
        });
    }

    let named: Vec<(&str, &RateRegion)> = entries
        .iter()
        .map(|e| (e.name.as_str(), &e.region))
        .collect();
    let inclusion = compare(&named, cfg.tol);

    Ok(RegionReport {
        provenance: Provenance {
            tool_version: env!("CARGO_PKG_VERSION"),
            preset: cfg.preset.clone(),
            channel: Some(ch),
            case: Some(classify(&ch)),
            grid_points: cfg.grid_points,
            tol: cfg.tol,
            rate_unit: cfg.log_base.unit(),
            outer_ledger_version: OUTER_LEDGER_VERSION,
        },
        regions: entries,
        inclusion,
    })
}

/// Region of a parsed scheme file, reported under the single name `dm`.
pub fn run_dm_scheme(scheme: &DmScheme, tol: f64) -> Result<RegionReport, ScenarioError> {
    let region = dm_region(scheme).map_err(|e| ScenarioError::Config(e.to_string()))?;
    let entry = RegionEntry {
        name: "dm".to_string(),
        vertices: region.vertices().iter().map(|v| [v.r1, v.r2]).collect(),
        area: region.area(),
        note: None,
        region,
    };
    let inclusion = vec![vec![true]];
    Ok(RegionReport {
        provenance: Provenance {
            tool_version: env!("CARGO_PKG_VERSION"),
            preset: None,
            channel: None,
            case: None,
            grid_points: 1,
            tol,
            rate_unit: "bits",
            outer_ledger_version: OUTER_LEDGER_VERSION,
        },
        regions: vec![entry],
        inclusion,
    })
}

/// Write the report in every requested format. Files are written to a
/// temporary sibling and renamed into place.
pub fn write_report(
    report: &RegionReport,
    out_dir: &Path,
    formats: &[OutputFormat],
) -> Result<Vec<std::path::PathBuf>, ScenarioError> {
    std::fs::create_dir_all(out_dir)?;
    let mut written = Vec::new();
    for fmt in formats {
        let (name, body) = match fmt {
            OutputFormat::Csv => ("regions.csv", render_csv(report)),
            OutputFormat::Json => ("report.json", render_json(report)),
            OutputFormat::Gnuplot => ("plot.gp", render_gnuplot(report)),
        };
        let path = out_dir.join(name);
        let tmp = out_dir.join(format!("{name}.tmp"));
        {
            let mut f = std::fs::File::create(&tmp)?;
            f.write_all(body.as_bytes())?;
            f.sync_all()?;
        }
        std::fs::rename(&tmp, &path)?;
        written.push(path);
    }
    Ok(written)
}

fn render_csv(report: &RegionReport) -> String {
    let unit = report.provenance.rate_unit;
    let mut out = format!("region,vertex_index,R1_{unit},R2_{unit}\n");
    for entry in &report.regions {
        for (i, v) in entry.vertices.iter().enumerate() {
            out.push_str(&format!("{},{},{:.12},{:.12}\n", entry.name, i, v[0], v[1]));
        }
    }
    out
}

fn render_json(report: &RegionReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serialises");
    s.push('\n');
    s
}

fn render_gnuplot(report: &RegionReport) -> String {
    let unit = report.provenance.rate_unit;
    let mut out = String::new();
    out.push_str("# region boundaries; run: gnuplot -persist plot.gp\n");
    out.push_str(&format!("set xlabel 'R1 ({unit}/use)'\n"));
    out.push_str(&format!("set ylabel 'R2 ({unit}/use)'\n"));
    out.push_str("set key outside\nset grid\n");
    let plotted: Vec<&RegionEntry> = report
        .regions
        .iter()
        .filter(|e| !e.vertices.is_empty())
        .collect();
    if plotted.is_empty() {
        out.push_str("# all regions empty\n");
        return out;
    }
    let spec: Vec<String> = plotted
        .iter()
        .map(|e| format!("'-' with lines title '{}'", e.name))
        .collect();
    out.push_str(&format!("plot {}\n", spec.join(", \\\n     ")));
    for entry in &plotted {
        for v in &entry.vertices {
            out.push_str(&format!("{:.12} {:.12}\n", v[0], v[1]));
        }
        // Close the polygon.
        if let Some(first) = entry.vertices.first() {
            out.push_str(&format!("{:.12} {:.12}\n", first[0], first[1]));
        }
        out.push_str("e\n");
    }
    out
}
