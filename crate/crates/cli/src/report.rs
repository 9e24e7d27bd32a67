//! Analysis reports and their text / JSON renderings.

use std::fmt::Write;

use serde::Serialize;
use stabdim::config::{Configuration, ConfigurationKind};

/// One configuration as reported: kind, pair and the Lie generator it induces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigurationEntry {
    pub kind: ConfigurationKind,
    pub a: usize,
    pub b: usize,
    pub generator: String,
}

impl From<&Configuration> for ConfigurationEntry {
    fn from(c: &Configuration) -> Self {
        ConfigurationEntry { kind: c.kind, a: c.a, b: c.b, generator: c.lie_generator().to_string() }
    }
}

/// Field order here is the key order of the JSON record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub dimension: usize,
    pub g2: usize,
    pub theorem_holds: bool,
    pub configurations: Vec<ConfigurationEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_nullity: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
    /// Set when the component-sum extension produced the numbers.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extension: Option<&'static str>,
    #[serde(skip)]
    pub input_format: String,
    #[serde(skip)]
    pub source: String,
}

impl AnalysisReport {
    /// `3n + 1 - dimension`: the dimension of the local-unitary orbit.
    pub fn orbit_dimension(&self) -> usize {
        3 * self.n + 1 - self.dimension
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputMode {
    #[default]
    Text,
    /// Single-line JSON record.
    Json,
}

pub fn format_report(r: &AnalysisReport, mode: OutputMode) -> String {
    match mode {
        OutputMode::Json => serde_json::to_string(r).expect("report serializes") + "\n",
        OutputMode::Text => text(r),
    }
}

fn text(r: &AnalysisReport) -> String {
    let mut s = String::new();
    writeln!(s, "source: {} {}", r.input_format, r.source).unwrap();
    writeln!(s, "n: {}", r.n).unwrap();
    writeln!(s, "m: {}", r.m).unwrap();
    writeln!(s, "connected: {}", r.connected).unwrap();
    if let Some(ext) = r.extension {
        writeln!(s, "extension: {ext} (summed over connected components)").unwrap();
    }
    if r.configurations.is_empty() {
        writeln!(s, "configurations: none").unwrap();
    } else {
        writeln!(s, "configurations:").unwrap();
        let width = r
            .configurations
            .iter()
            .map(|c| c.kind.name().len() + c.a.to_string().len() + c.b.to_string().len() + 3)
            .max()
            .unwrap_or(0);
        for c in &r.configurations {
            let label = format!("{}({},{})", c.kind, c.a, c.b);
            writeln!(s, "  {label:<width$}  {}", c.generator).unwrap();
        }
    }
    writeln!(s, "dimension: {}", r.dimension).unwrap();
    writeln!(s, "g2: {}", r.g2).unwrap();
    let note = if r.n == 2 && r.connected && !r.theorem_holds {
        " (n = 2: dimension = g2 is only expected for n >= 3)"
    } else {
        ""
    };
    writeln!(s, "theorem_holds: {}{note}", r.theorem_holds).unwrap();
    writeln!(s, "orbit_dimension: {}", r.orbit_dimension()).unwrap();
    if let Some(k) = r.oracle_nullity {
        writeln!(s, "oracle_nullity: {k}").unwrap();
    }
    if let Some(ok) = r.oracle_agrees {
        writeln!(s, "oracle_agrees: {ok}").unwrap();
    }
    s
}
