//! Report shapes shared by the text and JSON output paths.

use serde::Serialize;
use solvlie::classify::{GroupModel, Verdict};
use solvlie::lie::{ValidationReport, Violation};
use solvlie::scalar::format_rational;
use solvlie::TriState;

#[derive(Debug, Serialize)]
pub struct ViolationReport {
    pub identity: &'static str,
    pub indices: Vec<usize>,
    pub defect: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ValidateReport {
    pub kind: &'static str,
    pub ok: bool,
    pub violations: Vec<ViolationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derivation_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derivation_defect: Option<ViolationReport>,
}

pub fn validation_to_report(r: &ValidationReport) -> Vec<ViolationReport> {
    r.violations
        .iter()
        .map(|v| match v {
            Violation::Antisymmetry { i, j, defect } => ViolationReport {
                identity: "antisymmetry",
                indices: vec![*i, *j],
                defect: defect.iter().map(format_rational).collect(),
            },
            Violation::Jacobi { i, j, k, defect } => ViolationReport {
                identity: "jacobi",
                indices: vec![*i, *j, *k],
                defect: defect.iter().map(format_rational).collect(),
            },
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct AnalysisField {
    pub name: &'static str,
    pub value: serde_json::Value,
    pub operation: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub citation: Option<&'static str>,
}

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub kind: &'static str,
    pub fields: Vec<AnalysisField>,
}

impl AnalyzeReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for f in &self.fields {
            let cite = f.citation.map(|c| format!("  [{c}]")).unwrap_or_default();
            out.push_str(&format!(
                "{:<28} {}  (via {}){}\n",
                f.name, f.value, f.operation, cite
            ));
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct ModelSummary {
    pub dim: usize,
    pub nilradical_dim: usize,
    pub provenance: String,
    pub exponential: bool,
}

pub fn model_summary(m: &GroupModel) -> ModelSummary {
    ModelSummary {
        dim: m.dim(),
        nilradical_dim: m.nilradical_part().dim(),
        provenance: format!("{:?}", m.provenance())
            .split(' ')
            .next()
            .unwrap_or("Custom")
            .trim_end_matches('{')
            .to_string(),
        exponential: m.is_exponential(),
    }
}

#[derive(Debug, Serialize)]
pub struct ClassifyReport {
    pub kind: &'static str,
    pub model: ModelSummary,
    pub verdict: Verdict,
}

fn tri(t: TriState) -> &'static str {
    match t {
        TriState::Yes => "yes",
        TriState::No => "no",
        TriState::Unknown => "unknown",
    }
}

pub fn render_verdict_text(r: &ClassifyReport) -> String {
    let v = &r.verdict;
    let mut out = String::new();
    out.push_str(&format!(
        "model: dim {} = nilradical {} + R, provenance {}, exponential: {}\n",
        r.model.dim, r.model.nilradical_dim, r.model.provenance, r.model.exponential
    ));
    out.push_str(&format!(
        "  stably finite          {}\n",
        tri(v.stably_finite)
    ));
    out.push_str(&format!(
        "  stably projectionless  {}\n",
        tri(v.stably_projectionless)
    ));
    out.push_str(&format!(
        "  AF-embeddable          {}\n",
        tri(v.af_embeddable)
    ));
    out.push_str(&format!(
        "  quasi-compact opens    {}\n",
        tri(v.has_quasi_compact_open)
    ));
    let opp = match v.open_prim_point_count {
        Some(c) => format!("{} (count {c})", tri(v.open_prim_points)),
        None => tri(v.open_prim_points).to_string(),
    };
    out.push_str(&format!("  open points in Prim    {opp}\n"));
    if let Some(qd) = v.quasidiagonal {
        out.push_str(&format!("  quasidiagonal          {}\n", tri(qd)));
    }
    let kg = |k: solvlie::classify::KGroup| match k {
        solvlie::classify::KGroup::Z => "Z",
        solvlie::classify::KGroup::Zero => "0",
    };
    out.push_str(&format!(
        "  K-theory               K0 = {}, K1 = {}, sign {:+} (dim mod 4 = {})\n",
        kg(v.k_theory.k0),
        kg(v.k_theory.k1),
        v.k_theory.conjugation_sign,
        v.k_theory.dim_mod_4
    ));
    out.push_str("  rules fired:\n");
    for f in &v.rules_fired {
        out.push_str(&format!(
            "    {:<8} [{}] {}\n",
            f.rule,
            f.citation,
            f.effects.join(", ")
        ));
        for i in &f.inputs {
            out.push_str(&format!("             - {i}\n"));
        }
    }
    out
}
