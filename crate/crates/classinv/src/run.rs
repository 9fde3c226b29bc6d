//! One `series` invocation: engine, optional oracle, optional golden check.

use std::fmt::Write as _;
use std::str::FromStr;

use classinv_core::branching::trivial_multiplicity_via_branching;
use classinv_core::hilbert::{expand_character, invariants_from_table, symmetric_algebra_characters, MultiplicityTable};
use classinv_core::oracle::hilbert_series_weyl;
use classinv_core::rational::expand_rational;
use classinv_core::{Error as CoreError, GroupId, GroupKind, ModuleSpec, TruncatedSeries};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::catalog::{lookup, normalize_key};
use crate::spec_text::{format_module_spec, parse_module_spec};

pub const DEFAULT_MAX_DEGREE: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleChoice {
    None,
    Weyl,
    Branching,
}

impl FromStr for OracleChoice {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "none" => Ok(OracleChoice::None),
            "weyl" => Ok(OracleChoice::Weyl),
            "branching" => Ok(OracleChoice::Branching),
            _ => Err(format!("unknown oracle {s:?} (none|weyl|branching)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            _ => Err(format!("unknown format {s:?} (text|json)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub group: GroupId,
    pub spec_text: String,
    pub maxdeg: usize,
    pub oracle: OracleChoice,
    pub format: OutputFormat,
    pub golden_key: Option<String>,
    pub max_degree_cap: usize,
}

impl RunConfig {
    pub fn new(group: GroupId, spec_text: impl Into<String>, maxdeg: usize) -> Self {
        RunConfig {
            group,
            spec_text: spec_text.into(),
            maxdeg,
            oracle: OracleChoice::None,
            format: OutputFormat::Text,
            golden_key: None,
            max_degree_cap: DEFAULT_MAX_DEGREE,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RunError {
    #[error("{0}")]
    Usage(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Usage(_) => 3,
            RunError::Inconsistent(_) => 4,
        }
    }
}

impl From<CoreError> for RunError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Inconsistent(msg) => RunError::Inconsistent(msg),
            other => RunError::Usage(other.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Match => "MATCH",
            Verdict::Mismatch => "MISMATCH",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeDiff {
    pub degree: usize,
    pub engine: BigInt,
    pub other: BigInt,
}

/// Degrees where the two series differ, up to the shorter truncation.
pub fn degree_diffs(engine: &TruncatedSeries, other: &TruncatedSeries) -> Vec<DegreeDiff> {
    engine
        .coeffs()
        .iter()
        .zip(other.coeffs())
        .enumerate()
        .filter(|(_, (a, b))| a != b)
        .map(|(degree, (a, b))| DegreeDiff { degree, engine: a.clone(), other: b.clone() })
        .collect()
}

#[derive(Clone, Debug)]
pub struct Comparison {
    pub label: String,
    pub series: TruncatedSeries,
    pub diffs: Vec<DegreeDiff>,
}

impl Comparison {
    pub fn verdict(&self) -> Verdict {
        if self.diffs.is_empty() {
            Verdict::Match
        } else {
            Verdict::Mismatch
        }
    }

    pub fn first_difference(&self) -> Option<usize> {
        self.diffs.first().map(|d| d.degree)
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub group: GroupId,
    pub spec: ModuleSpec,
    pub maxdeg: usize,
    pub series: TruncatedSeries,
    pub oracle: Option<Comparison>,
    /// `label` is the catalog key.
    pub golden: Option<(Comparison, String)>,
}

impl Report {
    pub fn is_match(&self) -> bool {
        self.oracle.iter().chain(self.golden.iter().map(|(c, _)| c)).all(|c| c.verdict() == Verdict::Match)
    }

    pub fn exit_code(&self) -> i32 {
        if self.is_match() {
            0
        } else {
            2
        }
    }

    pub fn to_json(&self) -> Value {
        let mut out = json!({
            "group": self.group.kind().name(),
            "n": self.group.n(),
            "spec": format_module_spec(&self.spec),
            "maxdeg": self.maxdeg,
            "coeffs": coeffs_json(&self.series),
        });
        if let Some(c) = &self.oracle {
            out["oracle"] = comparison_json(c);
        }
        if let Some((c, printed)) = &self.golden {
            let mut g = comparison_json(c);
            g["form"] = Value::String(printed.clone());
            out["golden"] = g;
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let spec = format_module_spec(&self.spec);
        let spec = if spec.is_empty() { "0".to_string() } else { spec };
        let _ = writeln!(out, "H(C[{spec}]^{}, t) = {}", self.group, self.series);
        let _ = writeln!(out, "coeffs: {}", coeffs_text(&self.series));
        if let Some(c) = &self.oracle {
            comparison_text(&mut out, "oracle", c);
        }
        if let Some((c, printed)) = &self.golden {
            let _ = writeln!(out, "golden {}: {printed}", c.label);
            comparison_text(&mut out, "golden", c);
        }
        out
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.to_text(),
            OutputFormat::Json => format!("{}\n", serde_json::to_string_pretty(&self.to_json()).expect("json")),
        }
    }
}

fn comparison_text(out: &mut String, what: &str, c: &Comparison) {
    let _ = writeln!(out, "{what} {}: {}", c.label, c.verdict().name());
    for d in &c.diffs {
        let _ = writeln!(out, "  t^{}: engine {} vs {}", d.degree, d.engine, d.other);
    }
}

pub fn bigint_json(c: &BigInt) -> Value {
    Value::Number(c.to_string().parse().expect("integers are valid JSON numbers"))
}

pub fn coeffs_json(s: &TruncatedSeries) -> Value {
    Value::Array(s.coeffs().iter().map(bigint_json).collect())
}

pub fn coeffs_text(s: &TruncatedSeries) -> String {
    let parts: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn comparison_json(c: &Comparison) -> Value {
    let diffs: Vec<Value> = c
        .diffs
        .iter()
        .map(|d| json!({"degree": d.degree, "engine": bigint_json(&d.engine), "other": bigint_json(&d.other)}))
        .collect();
    json!({
        "label": c.label,
        "coeffs": coeffs_json(&c.series),
        "diffs": diffs,
        "verdict": c.verdict().name(),
    })
}

/// [`classinv_core::hilbert::multiplicity_table`] with the Schur extraction
/// of each degree run in parallel.
pub fn multiplicity_table_parallel(spec: &ModuleSpec, maxdeg: usize) -> Result<MultiplicityTable, CoreError> {
    let chars = symmetric_algebra_characters(spec, maxdeg)?;
    let rows = chars.par_iter().map(expand_character).collect::<Result<Vec<_>, _>>()?;
    Ok(MultiplicityTable::from_rows(spec.n(), rows))
}

/// Hilbert series from the full branching decomposition of every table entry.
pub fn branching_series(table: &MultiplicityTable, g: GroupId) -> Result<TruncatedSeries, CoreError> {
    let mut out = TruncatedSeries::zero(table.maxdeg());
    for (l, row) in table.rows().iter().enumerate() {
        let mut c = BigInt::default();
        for (lambda, m) in row.iter() {
            let t = trivial_multiplicity_via_branching(lambda, g)?;
            if t < 0 {
                return Err(CoreError::Inconsistent(format!("negative trivial multiplicity {t} for {lambda} in {g}")));
            }
            c += m * t;
        }
        out.set(l, c);
    }
    Ok(out)
}

pub fn run(config: &RunConfig) -> Result<Report, RunError> {
    if config.maxdeg > config.max_degree_cap {
        return Err(RunError::Usage(format!("maxdeg {} exceeds the cap {}", config.maxdeg, config.max_degree_cap)));
    }
    let g = config.group;
    let spec = parse_module_spec(&config.spec_text, g.n()).map_err(|e| RunError::Usage(e.to_string()))?;
    if config.oracle != OracleChoice::None && g.kind() == GroupKind::O {
        return Err(RunError::Usage(format!("oracle {:?} needs a connected group, got {g}", config.oracle)));
    }
    let golden = match &config.golden_key {
        None => None,
        Some(key) => {
            let canonical = normalize_key(key).ok_or_else(|| RunError::Usage(format!("malformed golden key {key:?}")))?;
            let entry = lookup(&canonical).ok_or_else(|| RunError::Usage(format!("no golden entry {canonical}")))?;
            if entry.group != g {
                return Err(RunError::Usage(format!("golden entry {canonical} is for {}, not {g}", entry.group)));
            }
            Some(entry)
        }
    };

    let table = multiplicity_table_parallel(&spec, config.maxdeg)?;
    let series = invariants_from_table(&table, g)?;

    let oracle = match config.oracle {
        OracleChoice::None => None,
        OracleChoice::Weyl => Some(("weyl", hilbert_series_weyl(&spec, g, config.maxdeg)?)),
        OracleChoice::Branching => Some(("branching", branching_series(&table, g)?)),
    }
    .map(|(label, s)| Comparison { label: label.into(), diffs: degree_diffs(&series, &s), series: s });

    let golden = golden.map(|entry| {
        let expansion = expand_rational(&entry.form, config.maxdeg);
        let c = Comparison { label: entry.key.clone(), diffs: degree_diffs(&series, &expansion), series: expansion };
        (c, entry.printed.clone())
    });

    Ok(Report { group: g, spec, maxdeg: config.maxdeg, series, oracle, golden })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_examples() {
        let mut c = RunConfig::new(GroupId::sp(2).unwrap(), "S3(V)", 8);
        c.golden_key = Some("5.4,SP,2".into());
        let r = run(&c).unwrap();
        assert_eq!(r.golden.as_ref().unwrap().0.verdict(), Verdict::Match);
        assert_eq!(r.exit_code(), 0);

        let mut c = RunConfig::new(GroupId::so(2).unwrap(), "S4(V)", 10);
        c.golden_key = Some("5.5/so/2".into());
        let r = run(&c).unwrap();
        assert!(r.is_match());
        assert_eq!(r.series.coeffs()[..4], TruncatedSeries::from_i64(&[1, 1, 3, 5]).coeffs()[..]);
    }

    #[test]
    fn empty_module() {
        let r = run(&RunConfig::new(GroupId::sp(2).unwrap(), "", 3)).unwrap();
        assert_eq!(r.series, TruncatedSeries::from_i64(&[1, 0, 0, 0]));
    }

    #[test]
    fn mismatch_is_reported() {
        let mut c = RunConfig::new(GroupId::so(2).unwrap(), "S3(V)", 6);
        c.golden_key = Some("5.4/so/2".into());
        assert!(run(&c).unwrap().is_match());
        let mut c = RunConfig::new(GroupId::so(2).unwrap(), "S4(V)", 6);
        c.golden_key = Some("5.4/so/2".into());
        let r = run(&c).unwrap();
        assert_eq!(r.exit_code(), 2);
        assert_eq!(r.golden.unwrap().0.first_difference(), Some(1));
    }

    #[test]
    fn oracles() {
        for oracle in [OracleChoice::Weyl, OracleChoice::Branching] {
            let mut c = RunConfig::new(GroupId::so(3).unwrap(), "V + L2(V)", 6);
            c.oracle = oracle;
            assert!(run(&c).unwrap().is_match(), "{oracle:?}");
            c.group = GroupId::o(3).unwrap();
            assert!(matches!(run(&c), Err(RunError::Usage(_))));
        }
    }

    #[test]
    fn usage_errors() {
        let c = RunConfig::new(GroupId::sp(2).unwrap(), "S2(V)", 33);
        assert_eq!(run(&c).unwrap_err().exit_code(), 3);
        let c = RunConfig::new(GroupId::sp(2).unwrap(), "L3(V)", 3);
        assert_eq!(run(&c).unwrap_err().exit_code(), 3);
        let mut c = RunConfig::new(GroupId::sp(2).unwrap(), "S3(V)", 3);
        c.golden_key = Some("5.4/so/2".into());
        assert_eq!(run(&c).unwrap_err().exit_code(), 3);
    }

    #[test]
    fn json_is_deterministic() {
        let mut c = RunConfig::new(GroupId::sp(4).unwrap(), "V + L2(V)", 5);
        c.oracle = OracleChoice::Weyl;
        let a = run(&c).unwrap().render(OutputFormat::Json);
        let b = run(&c).unwrap().render(OutputFormat::Json);
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["coeffs"], json!([1, 1, 2, 2, 3, 3]));
        assert_eq!(v["oracle"]["verdict"], "MATCH");
    }
}
