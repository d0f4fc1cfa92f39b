//! Command-line surface: validate structure-constant files, analyze algebra
//! structure, classify semidirect products with theorem citations, generate
//! family instances, and run bracket deformations.
//!
//! Exit codes: 0 success, 1 validation failure or invalid model, 2 parse or
//! usage error. An `unknown` verdict is a success, not an error.

mod input;
mod report;

use clap::{Parser, Subcommand};
use input::{
    emit_document, parse_document, resolve, resolve_family, resolved_to_doc, InputDocument,
    Resolved,
};
use report::{
    model_summary, render_verdict_text, validation_to_report, AnalysisField, AnalyzeReport,
    ClassifyReport, ValidateReport, ViolationReport,
};
use solvlie::classify::{classify, GroupModel};
use solvlie::coadjoint::{self, RankMode};
use solvlie::exec::ExecMode;
use solvlie::scalar::{format_rational, parse_rational};
use solvlie::spectral::restrict;
use solvlie::LieAlgebra;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "solvlie",
    version,
    about = "Exact analysis and C*-classification of solvable Lie algebras n x| RD"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the Lie-algebra identities (and Leibniz, when a derivation is
    /// present) of an input document.
    Validate {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Structural report: centre, series, orbit dimensions, flags.
    Analyze {
        path: PathBuf,
        #[arg(long)]
        json: bool,
        /// Certify generic ranks exactly instead of the fixed-seed sampler.
        #[arg(long)]
        exact_rank: bool,
        /// Seed for the randomized rank mode.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Classify the group C*-algebra of a semidirect-product input.
    /// Verdict-affecting ranks are always recomputed exactly; --seed only
    /// influences diagnostics.
    Classify {
        paths: Vec<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        exact_rank: bool,
        #[arg(long)]
        seed: Option<u64>,
        /// Classify several input files (in parallel when built with the
        /// default `parallel` feature); output keeps the input order.
        #[arg(long)]
        batch: bool,
    },
    /// Generate a built-in family instance and emit its input document.
    Family {
        /// heisenberg | free_two_step | n6n15 | hk | axb | abelian
        name: String,
        /// Parameters as a JSON object, e.g. '{"n":1,"diag_xyz":["2","-1","1"]}'
        #[arg(long)]
        params: Option<String>,
        /// Convenience: size parameter n.
        #[arg(long)]
        n: Option<usize>,
        /// Convenience: division algebra name R|C|H|O (hk family).
        #[arg(long)]
        k: Option<String>,
        /// Convenience: comma-separated rationals, e.g. "1,1,-2".
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        b: Option<String>,
        #[arg(long)]
        c: Option<String>,
        /// Convenience: matrix rows separated by ';', entries by ','.
        #[arg(long)]
        d: Option<String>,
        /// Convenience: diagonal on (X1..Xn, Y1..Yn, Z) for heisenberg.
        #[arg(long)]
        diag_xyz: Option<String>,
        /// Write the document here instead of stdout.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Deform the bracket of an algebra input: `[x,y]_h = phi^-1 [phi x, phi y]`.
    Deform {
        path: PathBuf,
        /// Family: "scaling" or "diag:k1,k2,..." (Laurent powers of h).
        #[arg(long)]
        phi: String,
        /// Evaluate at this rational h.
        #[arg(long)]
        h: Option<String>,
        /// Take the h -> 0 contraction limit instead.
        #[arg(long)]
        limit: bool,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_doc(path: &Path) -> Result<InputDocument, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_document(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_out(emit: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match emit {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Validate { path, json } => cmd_validate(&path, json),
        Cmd::Analyze {
            path,
            json,
            exact_rank,
            seed,
        } => cmd_analyze(&path, json, exact_rank, seed),
        Cmd::Classify {
            paths, json, batch, ..
        } => cmd_classify(&paths, json, batch),
        Cmd::Family {
            name,
            params,
            n,
            k,
            a,
            b,
            c,
            d,
            diag_xyz,
            emit,
        } => cmd_family(&name, params, n, k, a, b, c, d, diag_xyz, &emit),
        Cmd::Deform {
            path,
            phi,
            h,
            limit,
            emit,
        } => cmd_deform(&path, &phi, h, limit, &emit),
    }
}

fn cmd_validate(path: &Path, json: bool) -> Result<ExitCode, String> {
    let doc = read_doc(path)?;
    let resolved = resolve(&doc).map_err(|e| e.to_string())?;
    let (algebra, derivation) = match &resolved {
        Resolved::Algebra(a) => (a, None),
        Resolved::Semidirect {
            nilradical,
            derivation,
            ..
        } => (nilradical, Some(derivation)),
    };
    let vr = algebra.validate();
    let deriv_defect = derivation.and_then(|d| algebra.derivation_defect(d));
    let ok = vr.ok() && deriv_defect.is_none();
    let rep = ValidateReport {
        kind: "validate",
        ok,
        violations: validation_to_report(&vr),
        derivation_ok: derivation.map(|_| deriv_defect.is_none()),
        derivation_defect: deriv_defect.map(|(i, j, defect)| ViolationReport {
            identity: "leibniz",
            indices: vec![i, j],
            defect: defect.iter().map(format_rational).collect(),
        }),
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&rep).unwrap());
    } else if ok {
        println!(
            "ok: {} identities hold (dim {})",
            path.display(),
            algebra.dim()
        );
    } else {
        for v in &rep.violations {
            println!(
                "violation: {} at indices {:?}, defect ({})",
                v.identity,
                v.indices,
                v.defect.join(", ")
            );
        }
        if let Some(d) = &rep.derivation_defect {
            println!(
                "violation: {} at basis pair {:?}, defect ({})",
                d.identity,
                d.indices,
                d.defect.join(", ")
            );
        }
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn analysis_fields(
    algebra: &LieAlgebra,
    model: Option<&GroupModel>,
    rank_mode: RankMode,
) -> Vec<AnalysisField> {
    let mut fields = Vec::new();
    let push = |fields: &mut Vec<AnalysisField>,
                name: &'static str,
                value: serde_json::Value,
                operation: &'static str,
                citation: Option<&'static str>| {
        fields.push(AnalysisField {
            name,
            value,
            operation,
            citation,
        });
    };
    let target = model.map_or(algebra, |m| m.full_algebra());
    push(&mut fields, "dim", target.dim().into(), "dim", None);
    push(
        &mut fields,
        "center_dim",
        target.center().dim().into(),
        "center",
        None,
    );
    let derived_dims: Vec<usize> = target.derived_series().iter().map(|s| s.dim()).collect();
    push(
        &mut fields,
        "derived_series_dims",
        derived_dims.into(),
        "derived_series",
        None,
    );
    push(
        &mut fields,
        "nilpotency_class",
        target
            .nilpotency_class()
            .map(|c| c.into())
            .unwrap_or(serde_json::Value::Null),
        "lower_central_series",
        None,
    );
    push(
        &mut fields,
        "is_nilpotent",
        target.is_nilpotent().into(),
        "lower_central_series",
        None,
    );
    push(
        &mut fields,
        "is_solvable",
        target.is_solvable().into(),
        "derived_series",
        None,
    );
    let rank = coadjoint::generic_orbit_dim(target, rank_mode);
    push(
        &mut fields,
        "generic_orbit_dim",
        rank.value.into(),
        "generic_orbit_dim",
        None,
    );
    push(
        &mut fields,
        "generic_orbit_dim_certified",
        rank.certified.into(),
        "generic_orbit_dim",
        None,
    );
    if target.is_nilpotent() {
        push(
            &mut fields,
            "has_generic_flat_orbits",
            coadjoint::has_generic_flat_orbits(target).unwrap().into(),
            "has_generic_flat_orbits",
            Some("Lemma extra"),
        );
    }
    if let Some(m) = model {
        let diag = coadjoint::is_exact_symplectic_semidirect(m.nilradical_part(), m.derivation())
            .expect("model derivation validated");
        push(
            &mut fields,
            "is_exact_symplectic",
            diag.holds().into(),
            "is_exact_symplectic_semidirect",
            Some("Definition exactsympl"),
        );
        push(
            &mut fields,
            "is_exponential",
            m.is_exponential().into(),
            "spectrum_summary",
            None,
        );
        let z = m.nilradical_part().center();
        if z.dim() == 1 {
            let dz = restrict(m.derivation(), &z).expect("centre invariant");
            push(
                &mut fields,
                "d_z",
                format_rational(dz.get(0, 0)).into(),
                "restrict",
                None,
            );
        }
    }
    let kt = solvlie::classify::k_theory_summary(target.dim());
    push(
        &mut fields,
        "k_theory",
        serde_json::to_value(kt).unwrap(),
        "k_theory_summary",
        Some("Cor. signs_solvable"),
    );
    fields
}

fn cmd_analyze(
    path: &Path,
    json: bool,
    exact_rank: bool,
    seed: Option<u64>,
) -> Result<ExitCode, String> {
    let doc = read_doc(path)?;
    let resolved = resolve(&doc).map_err(|e| e.to_string())?;
    let rank_mode = if exact_rank {
        RankMode::Exact
    } else {
        RankMode::Randomized {
            seed: seed.unwrap_or(coadjoint::DEFAULT_SEED),
            samples: coadjoint::DEFAULT_RANK_SAMPLES,
        }
    };
    let report = match &resolved {
        Resolved::Algebra(a) => AnalyzeReport {
            kind: "analyze",
            fields: analysis_fields(a, None, rank_mode),
        },
        Resolved::Semidirect {
            nilradical,
            derivation,
            provenance,
        } => {
            let model = GroupModel::with_provenance(
                nilradical.clone(),
                derivation.clone(),
                provenance.clone(),
            )
            .map_err(|e| e.to_string())?;
            AnalyzeReport {
                kind: "analyze",
                fields: analysis_fields(nilradical, Some(&model), rank_mode),
            }
        }
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        print!("{}", report.render_text());
    }
    Ok(ExitCode::SUCCESS)
}

fn classify_one(path: &Path) -> Result<ClassifyReport, String> {
    let doc = read_doc(path)?;
    let resolved = resolve(&doc).map_err(|e| e.to_string())?;
    let (nilradical, derivation, provenance) = match resolved {
        Resolved::Algebra(_) => {
            return Err(format!(
                "{}: classification needs a semidirect or family-with-derivation input",
                path.display()
            ))
        }
        Resolved::Semidirect {
            nilradical,
            derivation,
            provenance,
        } => (nilradical, derivation, provenance),
    };
    let model = GroupModel::with_provenance(nilradical, derivation, provenance)
        .map_err(|e| format!("{}: invalid model: {e}", path.display()))?;
    let verdict = classify(&model).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(ClassifyReport {
        kind: "classify",
        model: model_summary(&model),
        verdict,
    })
}

fn cmd_classify(paths: &[PathBuf], json: bool, batch: bool) -> Result<ExitCode, String> {
    if paths.is_empty() {
        return Err("classify needs at least one input file".into());
    }
    if !batch && paths.len() > 1 {
        return Err("multiple inputs require --batch".into());
    }
    if batch {
        let results =
            solvlie::exec::map_collect(ExecMode::default(), paths.to_vec(), |p| classify_one(&p));
        let mut reports = Vec::new();
        for r in results {
            reports.push(r.map_err(|e| e.to_string())?);
        }
        if json {
            let wrapped = serde_json::json!({
                "kind": "classify_batch",
                "reports": reports,
            });
            println!("{}", serde_json::to_string_pretty(&wrapped).unwrap());
        } else {
            for (p, r) in paths.iter().zip(&reports) {
                println!("== {}", p.display());
                print!("{}", render_verdict_text(r));
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    match classify_one(&paths[0]) {
        Ok(rep) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&rep).unwrap());
            } else {
                print!("{}", render_verdict_text(&rep));
            }
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            eprintln!("error: {e}");
            Ok(ExitCode::from(1))
        }
    }
}

fn parse_rat_list(s: &str) -> Result<Vec<serde_json::Value>, String> {
    s.split(',')
        .map(|t| {
            parse_rational(t.trim())
                .map(|r| serde_json::Value::String(format_rational(&r)))
                .map_err(|e| e.to_string())
        })
        .collect()
}

fn parse_matrix_arg(s: &str) -> Result<serde_json::Value, String> {
    let rows: Result<Vec<serde_json::Value>, String> = s
        .split(';')
        .map(|row| parse_rat_list(row).map(serde_json::Value::Array))
        .collect();
    Ok(serde_json::Value::Array(rows?))
}

#[allow(clippy::too_many_arguments)]
fn cmd_family(
    name: &str,
    params: Option<String>,
    n: Option<usize>,
    k: Option<String>,
    a: Option<String>,
    b: Option<String>,
    c: Option<String>,
    d: Option<String>,
    diag_xyz: Option<String>,
    emit: &Option<PathBuf>,
) -> Result<ExitCode, String> {
    let mut p: serde_json::Map<String, serde_json::Value> = match params {
        Some(s) => serde_json::from_str(&s).map_err(|e| format!("--params: {e}"))?,
        None => serde_json::Map::new(),
    };
    if let Some(n) = n {
        p.insert("n".into(), n.into());
    }
    if let Some(k) = k {
        p.insert("k".into(), k.into());
    }
    if let Some(a) = a {
        p.insert("a".into(), serde_json::Value::Array(parse_rat_list(&a)?));
    }
    if let Some(b) = b {
        p.insert("b".into(), serde_json::Value::Array(parse_rat_list(&b)?));
    }
    if let Some(c) = c {
        let r = parse_rational(&c).map_err(|e| e.to_string())?;
        p.insert("c".into(), format_rational(&r).into());
    }
    if let Some(d) = d {
        p.insert("d".into(), parse_matrix_arg(&d)?);
    }
    if let Some(diag) = diag_xyz {
        p.insert(
            "diag_xyz".into(),
            serde_json::Value::Array(parse_rat_list(&diag)?),
        );
    }
    let params = serde_json::Value::Object(p);
    let resolved = resolve_family(name, &params).map_err(|e| e.to_string())?;
    let doc = resolved_to_doc(&resolved);
    write_out(emit, &emit_document(&doc))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_deform(
    path: &Path,
    phi: &str,
    h: Option<String>,
    limit: bool,
    emit: &Option<PathBuf>,
) -> Result<ExitCode, String> {
    use solvlie::deform::DeformationFamily;
    let doc = read_doc(path)?;
    let algebra = match resolve(&doc).map_err(|e| e.to_string())? {
        Resolved::Algebra(a) => a,
        Resolved::Semidirect { .. } => return Err("deform expects a bare algebra input".into()),
    };
    let fam = if phi == "scaling" {
        DeformationFamily::scaling(algebra.dim())
    } else if let Some(rest) = phi.strip_prefix("diag:") {
        let powers: Result<Vec<i64>, _> = rest.split(',').map(|t| t.trim().parse()).collect();
        let powers = powers.map_err(|e| format!("--phi diag: {e}"))?;
        if powers.len() != algebra.dim() {
            return Err(format!(
                "--phi diag: expected {} powers, got {}",
                algebra.dim(),
                powers.len()
            ));
        }
        DeformationFamily::diag_powers(&powers)
    } else {
        return Err("--phi must be \"scaling\" or \"diag:k1,k2,...\"".into());
    };
    let result = if limit {
        fam.limit_algebra(&algebra)
    } else {
        let h = h.ok_or("either --h p/q or --limit is required")?;
        let h = parse_rational(&h).map_err(|e| e.to_string())?;
        fam.deform(&algebra, &h)
    };
    match result {
        Ok(out) => {
            debug_assert!(out.validate().ok());
            let doc = resolved_to_doc(&Resolved::Algebra(out));
            write_out(emit, &emit_document(&doc))?;
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            eprintln!("error: {e}");
            Ok(ExitCode::from(1))
        }
    }
}
