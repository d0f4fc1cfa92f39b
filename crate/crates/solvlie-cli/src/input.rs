//! The JSON input document format and its canonical serialization.
//!
//! Three kinds of documents exist: a bare algebra (structure constants with
//! `i < j` and implied antisymmetric completion), a semidirect product
//! (algebra plus derivation matrix), and a family reference (generator name
//! plus parameters). Rationals cross the boundary as exact strings `"p/q"`;
//! floats are rejected. Serialization is canonical: fixed field order,
//! sorted coefficient maps, two-space indentation, trailing newline, so
//! emit → parse → emit is byte-identical.

use serde::{Deserialize, Serialize};
use solvlie::classify::Provenance;
use solvlie::families::{self, DivisionAlgebraName};
use solvlie::lie::SparseVec;
use solvlie::matrix::Matrix;
use solvlie::scalar::{format_rational, parse_rational, Rational};
use solvlie::LieAlgebra;
use std::collections::BTreeMap;

#[derive(Debug)]
pub struct InputError {
    pub message: String,
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for InputError {}

fn err<T>(message: impl Into<String>) -> Result<T, InputError> {
    Err(InputError {
        message: message.into(),
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    /// target index (as a string key, JSON objects key on strings) -> "p/q"
    pub coeffs: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InputDocument {
    Algebra(AlgebraDoc),
    Semidirect {
        algebra: AlgebraDoc,
        derivation: Vec<Vec<String>>,
    },
    Family {
        family: String,
        params: serde_json::Value,
    },
}

/// What a document denotes after validation: either a bare algebra or a
/// semidirect model `N ⋊ ℝD` with its provenance.
pub enum Resolved {
    Algebra(LieAlgebra),
    Semidirect {
        nilradical: LieAlgebra,
        derivation: Matrix,
        provenance: Provenance,
    },
}

pub fn parse_document(text: &str) -> Result<InputDocument, InputError> {
    serde_json::from_str(text).or_else(|e| err(format!("invalid input document: {e}")))
}

/// Canonical serialization: pretty JSON with two-space indent and a trailing
/// newline. Field order is fixed by the struct definitions and coefficient
/// maps are sorted, so the output is unique for a given document.
pub fn emit_document(doc: &InputDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serializable");
    s.push('\n');
    s
}

pub fn algebra_to_doc(a: &LieAlgebra) -> AlgebraDoc {
    let mut brackets = Vec::new();
    for ((i, j), v) in a.bracket_entries() {
        let coeffs = v
            .iter()
            .map(|(k, c)| (k.to_string(), format_rational(c)))
            .collect();
        brackets.push(BracketEntry {
            i: *i,
            j: *j,
            coeffs,
        });
    }
    AlgebraDoc {
        dim: a.dim(),
        basis: a.labels().to_vec(),
        brackets,
    }
}

pub fn doc_to_algebra(doc: &AlgebraDoc) -> Result<LieAlgebra, InputError> {
    if doc.dim == 0 {
        return err("field `dim` must be at least 1");
    }
    if doc.basis.len() != doc.dim {
        return err(format!(
            "field `basis`: expected {} labels, got {}",
            doc.dim,
            doc.basis.len()
        ));
    }
    let mut entries = Vec::new();
    for (n, b) in doc.brackets.iter().enumerate() {
        if b.i >= b.j {
            return err(format!(
                "brackets[{n}]: bracket entries require i < j (antisymmetric completion is implied), got i={}, j={}",
                b.i, b.j
            ));
        }
        if b.j >= doc.dim {
            return err(format!("brackets[{n}]: index j={} out of range", b.j));
        }
        let mut sv: SparseVec = Vec::new();
        for (k, val) in &b.coeffs {
            let k: usize = k
                .parse()
                .or_else(|_| err(format!("brackets[{n}]: bad coefficient index `{k}`")))?;
            if k >= doc.dim {
                return err(format!("brackets[{n}]: coefficient index {k} out of range"));
            }
            let r = parse_rational(val).map_err(|e| InputError {
                message: format!("brackets[{n}].coeffs[{k}]: {e}"),
            })?;
            sv.push((k, r));
        }
        entries.push(((b.i, b.j), sv));
    }
    LieAlgebra::from_brackets(doc.dim, doc.basis.clone(), entries)
        .or_else(|e| err(format!("invalid algebra: {e}")))
}

pub fn parse_matrix(rows: &[Vec<String>], expect: usize) -> Result<Matrix, InputError> {
    if rows.len() != expect || rows.iter().any(|r| r.len() != expect) {
        return err(format!(
            "field `derivation`: expected a {expect}x{expect} matrix"
        ));
    }
    let mut m = Matrix::zero(expect, expect);
    for (i, row) in rows.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            let r = parse_rational(s).map_err(|e| InputError {
                message: format!("derivation[{i}][{j}]: {e}"),
            })?;
            m.set(i, j, r);
        }
    }
    Ok(m)
}

pub fn resolve(doc: &InputDocument) -> Result<Resolved, InputError> {
    match doc {
        InputDocument::Algebra(a) => Ok(Resolved::Algebra(doc_to_algebra(a)?)),
        InputDocument::Semidirect {
            algebra,
            derivation,
        } => {
            let a = doc_to_algebra(algebra)?;
            let d = parse_matrix(derivation, a.dim())?;
            Ok(Resolved::Semidirect {
                nilradical: a,
                derivation: d,
                provenance: Provenance::Custom,
            })
        }
        InputDocument::Family { family, params } => resolve_family(family, params),
    }
}

fn get_usize(params: &serde_json::Value, key: &str) -> Result<usize, InputError> {
    params
        .get(key)
        .and_then(|v| v.as_u64())
        .map(|v| v as usize)
        .ok_or(InputError {
            message: format!("family parameter `{key}` (positive integer) is required"),
        })
}

fn get_rational_list(
    params: &serde_json::Value,
    key: &str,
    expect: Option<usize>,
) -> Result<Vec<Rational>, InputError> {
    let arr = params
        .get(key)
        .and_then(|v| v.as_array())
        .ok_or(InputError {
            message: format!("family parameter `{key}` (array of rational strings) is required"),
        })?;
    if let Some(n) = expect {
        if arr.len() != n {
            return err(format!("family parameter `{key}` must have {n} entries"));
        }
    }
    arr.iter()
        .map(|v| {
            v.as_str()
                .ok_or(InputError {
                    message: format!("family parameter `{key}`: entries must be strings"),
                })
                .and_then(|s| {
                    parse_rational(s).map_err(|e| InputError {
                        message: format!("family parameter `{key}`: {e}"),
                    })
                })
        })
        .collect()
}

fn get_matrix(
    params: &serde_json::Value,
    key: &str,
) -> Result<Option<Vec<Vec<String>>>, InputError> {
    match params.get(key) {
        None => Ok(None),
        Some(v) => serde_json::from_value(v.clone())
            .map(Some)
            .or_else(|e| err(format!("family parameter `{key}`: {e}"))),
    }
}

/// Expand a family reference into an algebra or a semidirect model; family
/// preconditions surface as errors carrying the defining condition.
pub fn resolve_family(family: &str, params: &serde_json::Value) -> Result<Resolved, InputError> {
    match family {
        "heisenberg" => {
            let n = get_usize(params, "n")?;
            if n < 1 {
                return err("family parameter `n` must be at least 1");
            }
            let h = families::heisenberg(n);
            let d = if params.get("diag_xyz").is_some() {
                let diag = get_rational_list(params, "diag_xyz", Some(2 * n + 1))?;
                // given on (X1..Xn, Y1..Yn, Z); algebra basis is (Z, Y.., X..)
                let mut reordered = vec![diag[2 * n].clone()];
                reordered.extend_from_slice(&diag[n..2 * n]);
                reordered.extend_from_slice(&diag[..n]);
                Some(Matrix::diagonal(&reordered))
            } else if let Some(rows) = get_matrix(params, "derivation")? {
                Some(parse_matrix(&rows, 2 * n + 1)?)
            } else {
                None
            };
            match d {
                None => Ok(Resolved::Algebra(h)),
                Some(d) => Ok(Resolved::Semidirect {
                    nilradical: h,
                    derivation: d,
                    provenance: Provenance::Heisenberg { n },
                }),
            }
        }
        "free_two_step" => Ok(Resolved::Algebra(families::free_two_step_3gen())),
        "n6n15" => {
            let a = get_rational_list(params, "a", Some(3))?;
            let a = [a[0].clone(), a[1].clone(), a[2].clone()];
            let alg = families::n6n15_algebra(&a).or_else(|e| err(e.to_string()))?;
            match params.get("b") {
                None => Ok(Resolved::Algebra(alg)),
                Some(_) => {
                    let b = get_rational_list(params, "b", Some(3))?;
                    let b = [b[0].clone(), b[1].clone(), b[2].clone()];
                    let d = families::n6n15_derivation(&alg, &b);
                    Ok(Resolved::Semidirect {
                        nilradical: alg,
                        derivation: d,
                        provenance: Provenance::N6n15 { a, b },
                    })
                }
            }
        }
        "hk" => {
            let name = params
                .get("k")
                .and_then(|v| v.as_str())
                .and_then(DivisionAlgebraName::parse)
                .ok_or(InputError {
                    message: "family parameter `k` must be one of R, C, H, O".into(),
                })?;
            let n = get_usize(params, "n")?;
            if n < 1 {
                return err("family parameter `n` must be at least 1");
            }
            let table = families::division_algebra(name);
            let alg = families::hk_algebra(&table, n);
            if params.get("a").is_none() && params.get("b").is_none() {
                return Ok(Resolved::Algebra(alg));
            }
            let a = get_rational_list(params, "a", Some(n))?;
            let b = get_rational_list(params, "b", Some(n))?;
            let c = params
                .get("c")
                .and_then(|v| v.as_str())
                .ok_or(InputError {
                    message: "family parameter `c` (rational string) is required".into(),
                })
                .and_then(|s| {
                    parse_rational(s).map_err(|e| InputError {
                        message: format!("family parameter `c`: {e}"),
                    })
                })?;
            let d = families::hk_derivation(&table, n, &a, &b, &c)
                .or_else(|e| err(e.to_string()))?;
            Ok(Resolved::Semidirect {
                nilradical: alg,
                derivation: d,
                provenance: Provenance::Hk { name, n, c },
            })
        }
        "axb" => {
            let rows = get_matrix(params, "d")?.ok_or(InputError {
                message: "family parameter `d` (square matrix of rational strings) is required"
                    .into(),
            })?;
            let n = rows.len();
            if n == 0 {
                return err("family parameter `d` must be a nonempty square matrix");
            }
            let d = parse_matrix(&rows, n)?;
            Ok(Resolved::Semidirect {
                nilradical: LieAlgebra::abelian(n),
                derivation: d,
                provenance: Provenance::Axb,
            })
        }
        "abelian" => {
            let n = get_usize(params, "n")?;
            if n < 1 {
                return err("family parameter `n` must be at least 1");
            }
            Ok(Resolved::Algebra(LieAlgebra::abelian(n)))
        }
        other => err(format!(
            "unknown family `{other}`; available: heisenberg, free_two_step, n6n15, hk, axb, abelian"
        )),
    }
}

/// Expand a resolved model back into a self-contained document (families are
/// materialized, so emitted files round-trip through validation).
pub fn resolved_to_doc(r: &Resolved) -> InputDocument {
    match r {
        Resolved::Algebra(a) => InputDocument::Algebra(algebra_to_doc(a)),
        Resolved::Semidirect {
            nilradical,
            derivation,
            ..
        } => InputDocument::Semidirect {
            algebra: algebra_to_doc(nilradical),
            derivation: (0..derivation.rows())
                .map(|i| {
                    (0..derivation.cols())
                        .map(|j| format_rational(derivation.get(i, j)))
                        .collect()
                })
                .collect(),
        },
    }
}
