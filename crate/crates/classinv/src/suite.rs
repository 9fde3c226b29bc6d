//! Whole-catalog check and the small reports behind `exterior` and `branch`.

use classinv_core::branching::{branch_to_o, branch_to_sp, BranchTerm, OrthogonalView};
use classinv_core::exterior::{closed_form_exterior, exterior_invariant_poly, known_generator_degrees, ExteriorKind};
use classinv_core::{GroupId, GroupKind, Partition};
use serde_json::{json, Value};

use crate::catalog::GoldenEntry;
use crate::run::{run, Comparison, Report, RunConfig, RunError};

/// Runs one catalog entry at `maxdeg` (its own check degree if `None`).
pub fn check_entry(entry: &GoldenEntry, maxdeg: Option<usize>) -> Result<Report, RunError> {
    let mut config = RunConfig::new(entry.group, entry.spec_text.clone(), maxdeg.unwrap_or(entry.check_degree));
    config.golden_key = Some(entry.key.clone());
    run(&config)
}

pub fn golden_comparison(report: &Report) -> &Comparison {
    &report.golden.as_ref().expect("catalog runs carry a golden comparison").0
}

#[derive(Clone, Debug)]
pub struct ExteriorReport {
    pub kind: ExteriorKind,
    pub group: GroupId,
    /// Coefficients of `H(Λ(W)^G, t)` from the representation-theoretic filter.
    pub coeffs: Vec<u64>,
    pub closed_form_agrees: bool,
    pub generator_degrees: Option<Vec<usize>>,
}

pub fn exterior_report(kind: ExteriorKind, group: GroupId) -> Result<ExteriorReport, RunError> {
    let filter = exterior_invariant_poly(kind, group)?;
    let closed = closed_form_exterior(kind, group);
    Ok(ExteriorReport {
        kind,
        group,
        closed_form_agrees: filter == closed,
        coeffs: filter.coeffs().to_vec(),
        generator_degrees: known_generator_degrees(kind, group),
    })
}

impl ExteriorReport {
    pub fn to_json(&self) -> Value {
        let mut out = json!({
            "kind": self.kind.name(),
            "group": self.group.kind().name(),
            "n": self.group.n(),
            "coeffs": self.coeffs,
        });
        if let Some(d) = &self.generator_degrees {
            out["generator_degrees"] = json!(d);
        }
        out
    }

    pub fn to_text(&self) -> String {
        let poly = classinv_core::exterior::HilbertPolynomial::from_coeffs(self.coeffs.clone());
        let module = match self.kind {
            ExteriorKind::Sym2 => "S^2 V",
            ExteriorKind::Alt2 => "Λ^2 V",
        };
        let mut out = format!("H(Λ({module})^{}, t) = {poly}\n", self.group);
        if let Some(d) = &self.generator_degrees {
            let d: Vec<String> = d.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("exterior algebra on generators of degrees {}\n", d.join(", ")));
        }
        out
    }
}

/// Decomposition of `V^n_λ` restricted to `group`. `O(n)` uses the full view
/// with `ε` powers.
pub fn branch_terms(lambda: &Partition, group: GroupId) -> Result<Vec<BranchTerm>, RunError> {
    Ok(match group.kind() {
        GroupKind::Sp => branch_to_sp(lambda, group.rank())?,
        GroupKind::O => branch_to_o(lambda, group.n(), OrthogonalView::Full)?,
        GroupKind::SO => branch_to_o(lambda, group.n(), OrthogonalView::Special)?,
    })
}

pub fn branch_json(lambda: &Partition, group: GroupId, terms: &[BranchTerm]) -> Value {
    let terms: Vec<Value> = terms
        .iter()
        .map(|t| json!({"mu": t.mu.parts(), "multiplicity": t.multiplicity, "epsilon": t.epsilon_power}))
        .collect();
    json!({
        "lambda": lambda.parts(),
        "group": group.kind().name(),
        "n": group.n(),
        "terms": terms,
    })
}

pub fn branch_text(lambda: &Partition, group: GroupId, terms: &[BranchTerm]) -> String {
    let body: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
    let body = if body.is_empty() { "0".to_string() } else { body.join(" + ") };
    format!("{lambda} restricted to {group} = {body}\n")
}
