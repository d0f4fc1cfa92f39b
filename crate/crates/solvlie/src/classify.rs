//! Tri-state classification of group C*-algebras of semidirect products
//! `N ⋊_D ℝ` with nilpotent `N`.
//!
//! The engine is a sound, citation-carrying rule system: every rule is a
//! one-directional implication applied exactly under its hypotheses, verdicts
//! are merged by a commutative meet with conflict detection, and `Unknown`
//! is a legal output. A non-empty contradiction list can only arise from an
//! implementation bug and is surfaced as an error, never as a verdict.
//!
//! Rules evaluate in the fixed order R2..R11; R1 (the dimension-mod-4
//! binding) and the downward consequences run afterwards to a fixpoint. The
//! meet is commutative, so the firing order affects only the trace, never
//! the verdict.

use crate::coadjoint::{
    constant_orbit_dim_off_center_annihilator, generic_orbit_dim, has_open_coadjoint_orbit,
    is_exact_symplectic_semidirect, ConstOrbitDim, RankMode,
};
use crate::exec::ExecMode;
use crate::families::DivisionAlgebraName;
use crate::lie::{LieAlgebra, LieError};
use crate::matrix::Matrix;
use crate::poly::RatPoly;
use crate::scalar::{format_rational, Rational};
use crate::spectral::{
    all_roots_strict_half_plane, induced_on_quotient, is_diagonalizable, mixed_real_part_exists,
    restrict, spectrum_summary,
};
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

impl TriState {
    pub fn is_definite(self) -> bool {
        self != TriState::Unknown
    }
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TriState::Yes => "yes",
            TriState::No => "no",
            TriState::Unknown => "unknown",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KGroup {
    #[serde(rename = "Z")]
    Z,
    #[serde(rename = "0")]
    Zero,
}

/// K-theory of the group C*-algebra from the dimension alone, including the
/// sign with which the canonical "real" structure acts on the generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KTheorySummary {
    pub dim_mod_4: u8,
    pub k0: KGroup,
    pub k1: KGroup,
    pub conjugation_sign: i8,
}

/// Lookup table: even dimension gives `K_0 = Z, K_1 = 0`, odd the reverse;
/// the conjugation sign is `+1` exactly for `dim mod 4` in `{0, 1}`.
pub fn k_theory_summary(dim: usize) -> KTheorySummary {
    assert!(dim >= 1);
    let m = (dim % 4) as u8;
    let (k0, k1) = if dim % 2 == 0 {
        (KGroup::Z, KGroup::Zero)
    } else {
        (KGroup::Zero, KGroup::Z)
    };
    KTheorySummary {
        dim_mod_4: m,
        k0,
        k1,
        conjugation_sign: if m == 0 || m == 1 { 1 } else { -1 },
    }
}

/// How the model was built; family constructors tag their output so the
/// family-specific rules can fire without isomorphism testing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Heisenberg {
        n: usize,
    },
    N6n15 {
        a: [Rational; 3],
        b: [Rational; 3],
    },
    Hk {
        name: DivisionAlgebraName,
        n: usize,
        c: Rational,
    },
    Axb,
    Custom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelError {
    NilradicalNotNilpotent,
    NilradicalInvalid(usize),
    Lie(LieError),
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::NilradicalNotNilpotent => {
                write!(f, "the nilradical part must be nilpotent")
            }
            ModelError::NilradicalInvalid(k) => {
                write!(f, "the nilradical part violates {k} Lie identities")
            }
            ModelError::Lie(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ModelError {}

impl From<LieError> for ModelError {
    fn from(e: LieError) -> Self {
        ModelError::Lie(e)
    }
}

/// A semidirect product `N ⋊_D ℝ` ready for classification: `N` validated
/// nilpotent, `D` a validated derivation, the product cached, and
/// exponentiality decided from the exact spectrum of `D`.
#[derive(Debug, Clone)]
pub struct GroupModel {
    nilradical_part: LieAlgebra,
    derivation: Matrix,
    full_algebra: LieAlgebra,
    provenance: Provenance,
    char_poly_d: RatPoly,
    is_exponential: bool,
}

impl GroupModel {
    pub fn new(nilradical_part: LieAlgebra, derivation: Matrix) -> Result<Self, ModelError> {
        Self::with_provenance(nilradical_part, derivation, Provenance::Custom)
    }

    pub fn with_provenance(
        nilradical_part: LieAlgebra,
        derivation: Matrix,
        provenance: Provenance,
    ) -> Result<Self, ModelError> {
        let report = nilradical_part.validate();
        if !report.ok() {
            return Err(ModelError::NilradicalInvalid(report.violations.len()));
        }
        if !nilradical_part.is_nilpotent() {
            return Err(ModelError::NilradicalNotNilpotent);
        }
        let full_algebra = nilradical_part.semidirect(&derivation)?;
        debug_assert!(full_algebra.validate().ok());
        let char_poly_d = derivation.char_poly();
        let is_exponential = spectrum_summary(&char_poly_d).spectrum_meets_axis_only_at_zero();
        Ok(GroupModel {
            nilradical_part,
            derivation,
            full_algebra,
            provenance,
            char_poly_d,
            is_exponential,
        })
    }

    pub fn nilradical_part(&self) -> &LieAlgebra {
        &self.nilradical_part
    }

    pub fn derivation(&self) -> &Matrix {
        &self.derivation
    }

    pub fn full_algebra(&self) -> &LieAlgebra {
        &self.full_algebra
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn dim(&self) -> usize {
        self.nilradical_part.dim() + 1
    }

    /// Exponentiality of the group: for `n ⋊ ℝD` this reduces to the
    /// derivation spectrum avoiding `i ℝ \ {0}`.
    pub fn is_exponential(&self) -> bool {
        self.is_exponential
    }

    pub fn char_poly_of_derivation(&self) -> &RatPoly {
        &self.char_poly_d
    }
}

/// Structural Heisenberg recognition: a nilpotent algebra whose derived
/// subalgebra equals its one-dimensional centre is isomorphic to `h_n` (the
/// induced form on the quotient is symplectic), so the table itself need not
/// match the canonical basis. Returns `n`.
pub fn recognize_heisenberg(a: &LieAlgebra) -> Option<usize> {
    if a.dim() < 3 || a.dim() % 2 == 0 || !a.is_nilpotent() {
        return None;
    }
    let z = a.center();
    if z.dim() != 1 || a.derived_subalgebra() != z {
        return None;
    }
    Some((a.dim() - 1) / 2)
}

/// One fired rule: stable identifier, the theorem citation string, the
/// hypotheses that were checked, and the flag assignments it produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleFiring {
    pub rule: String,
    pub citation: String,
    pub inputs: Vec<String>,
    pub effects: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub stably_finite: TriState,
    pub stably_projectionless: TriState,
    pub af_embeddable: TriState,
    pub has_quasi_compact_open: TriState,
    pub open_prim_points: TriState,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub open_prim_point_count: Option<u32>,
    /// Only decided by the generalized ax+b equivalence.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quasidiagonal: Option<TriState>,
    pub k_theory: KTheorySummary,
    pub rules_fired: Vec<RuleFiring>,
    /// Engine-soundness assertion: must be empty on every input.
    pub contradictions: Vec<String>,
}

impl Verdict {
    /// The logical-closure invariants that every emitted verdict satisfies.
    pub fn closure_invariants_hold(&self) -> bool {
        let imp = |a: TriState, b: TriState| !(a == TriState::Yes && b == TriState::No);
        imp(self.af_embeddable, self.stably_finite)
            && imp(self.stably_projectionless, self.stably_finite)
            && !(self.has_quasi_compact_open == TriState::No
                && self.stably_projectionless == TriState::No)
            && !(self.stably_finite == TriState::No
                && (self.af_embeddable == TriState::Yes
                    || self.stably_projectionless == TriState::Yes))
    }
}

#[derive(Debug, Clone)]
pub enum ClassifyError {
    Model(ModelError),
    /// Two rules assigned conflicting definite values; this signals a bug in
    /// the rule set, never a legal verdict.
    Contradiction {
        details: Vec<String>,
    },
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::Model(e) => write!(f, "{e}"),
            ClassifyError::Contradiction { details } => {
                write!(f, "internal contradiction: {}", details.join("; "))
            }
        }
    }
}

impl std::error::Error for ClassifyError {}

impl From<ModelError> for ClassifyError {
    fn from(e: ModelError) -> Self {
        ClassifyError::Model(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Flag {
    StablyFinite,
    StablyProjectionless,
    AfEmbeddable,
    QuasiCompactOpen,
    OpenPrimPoints,
}

impl Flag {
    fn name(self) -> &'static str {
        match self {
            Flag::StablyFinite => "stably_finite",
            Flag::StablyProjectionless => "stably_projectionless",
            Flag::AfEmbeddable => "af_embeddable",
            Flag::QuasiCompactOpen => "has_quasi_compact_open",
            Flag::OpenPrimPoints => "open_prim_points",
        }
    }
}

struct Engine {
    sf: TriState,
    sp: TriState,
    af: TriState,
    qco: TriState,
    opp: TriState,
    opp_count: Option<u32>,
    quasidiagonal: Option<TriState>,
    firings: Vec<RuleFiring>,
    contradictions: Vec<String>,
}

impl Engine {
    fn new() -> Self {
        Engine {
            sf: TriState::Unknown,
            sp: TriState::Unknown,
            af: TriState::Unknown,
            qco: TriState::Unknown,
            opp: TriState::Unknown,
            opp_count: None,
            quasidiagonal: None,
            firings: Vec::new(),
            contradictions: Vec::new(),
        }
    }

    fn get(&self, flag: Flag) -> TriState {
        match flag {
            Flag::StablyFinite => self.sf,
            Flag::StablyProjectionless => self.sp,
            Flag::AfEmbeddable => self.af,
            Flag::QuasiCompactOpen => self.qco,
            Flag::OpenPrimPoints => self.opp,
        }
    }

    /// Commutative meet on tri-states: setting an Unknown flag records the
    /// value, re-setting the same value is a no-op, a conflicting definite
    /// value records a contradiction.
    fn set(&mut self, flag: Flag, value: TriState, by: &str) -> bool {
        debug_assert!(value.is_definite());
        let slot = match flag {
            Flag::StablyFinite => &mut self.sf,
            Flag::StablyProjectionless => &mut self.sp,
            Flag::AfEmbeddable => &mut self.af,
            Flag::QuasiCompactOpen => &mut self.qco,
            Flag::OpenPrimPoints => &mut self.opp,
        };
        match (*slot, value) {
            (TriState::Unknown, v) => {
                *slot = v;
                true
            }
            (a, b) if a == b => false,
            (a, b) => {
                self.contradictions.push(format!(
                    "{}: {} (already) vs {} (from {})",
                    flag.name(),
                    a,
                    b,
                    by
                ));
                false
            }
        }
    }

    fn fire(
        &mut self,
        rule: &str,
        citation: &str,
        inputs: Vec<String>,
        effects: Vec<(Flag, TriState)>,
    ) {
        let mut applied = Vec::new();
        for (flag, value) in effects {
            self.set(flag, value, rule);
            applied.push(format!("{} := {}", flag.name(), value));
        }
        self.firings.push(RuleFiring {
            rule: rule.to_string(),
            citation: citation.to_string(),
            inputs,
            effects: applied,
        });
    }

    /// Logical closure under the one-directional consequences plus, outside
    /// dimensions divisible by four, the stably-finite/stably-projectionless
    /// binding. Runs to a fixpoint.
    fn close(&mut self, dim: usize) {
        loop {
            let mut changed = false;
            let infer = |eng: &mut Engine,
                         from: Flag,
                         fv: TriState,
                         to: Flag,
                         tv: TriState,
                         rule: &str,
                         citation: &str| {
                if eng.get(from) == fv && eng.get(to) == TriState::Unknown {
                    eng.set(to, tv, rule);
                    eng.firings.push(RuleFiring {
                        rule: rule.to_string(),
                        citation: citation.to_string(),
                        inputs: vec![format!("{} = {}", from.name(), fv)],
                        effects: vec![format!("{} := {}", to.name(), tv)],
                    });
                    true
                } else {
                    false
                }
            };
            let closure = "closure";
            let c15 = "Cor. rem-1.5";
            changed |= infer(
                self,
                Flag::AfEmbeddable,
                TriState::Yes,
                Flag::StablyFinite,
                TriState::Yes,
                closure,
                c15,
            );
            changed |= infer(
                self,
                Flag::StablyProjectionless,
                TriState::Yes,
                Flag::StablyFinite,
                TriState::Yes,
                closure,
                c15,
            );
            changed |= infer(
                self,
                Flag::QuasiCompactOpen,
                TriState::No,
                Flag::StablyProjectionless,
                TriState::Yes,
                closure,
                c15,
            );
            changed |= infer(
                self,
                Flag::StablyFinite,
                TriState::No,
                Flag::AfEmbeddable,
                TriState::No,
                closure,
                c15,
            );
            changed |= infer(
                self,
                Flag::StablyFinite,
                TriState::No,
                Flag::StablyProjectionless,
                TriState::No,
                closure,
                c15,
            );
            if dim % 4 != 0 {
                let r1 = "R1";
                let c1 = "Thm. 4n+2";
                let sf = self.sf;
                if sf.is_definite() {
                    changed |= infer(
                        self,
                        Flag::StablyFinite,
                        sf,
                        Flag::StablyProjectionless,
                        sf,
                        r1,
                        c1,
                    );
                }
                let sp = self.sp;
                if sp.is_definite() {
                    changed |= infer(
                        self,
                        Flag::StablyProjectionless,
                        sp,
                        Flag::StablyFinite,
                        sp,
                        r1,
                        c1,
                    );
                }
            }
            // conflicts between already-definite flags that closure would
            // re-derive differently
            self.detect_latent_conflicts(dim);
            if !changed {
                return;
            }
        }
    }

    fn detect_latent_conflicts(&mut self, dim: usize) {
        let check = |cond: bool, msg: &str, list: &mut Vec<String>| {
            if cond && !list.iter().any(|m| m == msg) {
                list.push(msg.to_string());
            }
        };
        let mut extra = std::mem::take(&mut self.contradictions);
        check(
            self.af == TriState::Yes && self.sf == TriState::No,
            "af_embeddable = yes conflicts with stably_finite = no",
            &mut extra,
        );
        check(
            self.sp == TriState::Yes && self.sf == TriState::No,
            "stably_projectionless = yes conflicts with stably_finite = no",
            &mut extra,
        );
        check(
            self.qco == TriState::No && self.sp == TriState::No,
            "has_quasi_compact_open = no conflicts with stably_projectionless = no",
            &mut extra,
        );
        check(
            dim % 4 != 0 && self.sf.is_definite() && self.sp.is_definite() && self.sf != self.sp,
            "stably_finite and stably_projectionless differ although dim is not divisible by 4",
            &mut extra,
        );
        self.contradictions = extra;
    }

    fn into_verdict(self, dim: usize) -> Result<Verdict, ClassifyError> {
        let v = Verdict {
            stably_finite: self.sf,
            stably_projectionless: self.sp,
            af_embeddable: self.af,
            has_quasi_compact_open: self.qco,
            open_prim_points: self.opp,
            open_prim_point_count: self.opp_count,
            quasidiagonal: self.quasidiagonal,
            k_theory: k_theory_summary(dim),
            rules_fired: self.firings,
            contradictions: Vec::new(),
        };
        if !self.contradictions.is_empty() {
            return Err(ClassifyError::Contradiction {
                details: self.contradictions,
            });
        }
        debug_assert!(v.closure_invariants_hold());
        Ok(v)
    }
}

fn one_sided(p: &RatPoly) -> bool {
    all_roots_strict_half_plane(p, 1) || all_roots_strict_half_plane(p, -1)
}

fn fmt_signs(b: &[Rational]) -> String {
    let parts: Vec<String> = b.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

/// Apply every applicable rule to the model and merge the consequences.
pub fn classify(model: &GroupModel) -> Result<Verdict, ClassifyError> {
    classify_inner(model, 0)
}

fn classify_inner(model: &GroupModel, depth: usize) -> Result<Verdict, ClassifyError> {
    assert!(depth <= model.dim(), "quotient recursion failed to shrink");
    let mut eng = Engine::new();
    let dim = model.dim();
    let n_alg = model.nilradical_part();
    let d = model.derivation();
    let char_d = model.char_poly_of_derivation();
    let exponential = model.is_exponential();
    let center_n = n_alg.center();

    // R2: exponential, dim in 4Z+2, open coadjoint orbit => not stably
    // finite. The open-orbit test runs in exact mode.
    if exponential && dim % 4 == 2 && has_open_coadjoint_orbit(model.full_algebra()) {
        eng.fire(
            "R2",
            "Cor. solv-4n+2",
            vec![
                format!("dim = {dim} in 4Z+2"),
                "exponential".into(),
                "open coadjoint orbit (exact mode)".into(),
            ],
            vec![(Flag::StablyFinite, TriState::No)],
        );
    }

    // R3: derivation spectrum strictly inside one open half-plane => not
    // stably finite. An empty spectrum (zero-dimensional nilradical part,
    // the group is just R) does not count as one-sided: there is no
    // expanding direction at all.
    if n_alg.dim() > 0 && one_sided(char_d) {
        eng.fire(
            "R3",
            "Thm. prop-cf4",
            vec!["sigma(D) strictly inside one open half-plane".into()],
            vec![(Flag::StablyFinite, TriState::No)],
        );
    }

    // R4: exponential and mixed real parts on the centre restriction =>
    // no quasi-compact opens, AF-embeddable.
    if exponential && center_n.dim() > 0 {
        let d_on_z = restrict(d, &center_n).expect("centre is derivation-invariant");
        if d_on_z.rows() > 0 && mixed_real_part_exists(&d_on_z.char_poly()) {
            eng.fire(
                "R4",
                "Prop. NC + Cor. NC_cor1",
                vec![
                    "sigma(D) meets iR only in 0".into(),
                    "sigma(D|_z) has real parts on both sides of 0".into(),
                ],
                vec![
                    (Flag::QuasiCompactOpen, TriState::No),
                    (Flag::AfEmbeddable, TriState::Yes),
                ],
            );
        }
    }

    // Exact-symplectic diagnostic, shared by R5 and R6.
    let exact_sympl =
        is_exact_symplectic_semidirect(n_alg, d).expect("model derivation already validated");

    // R5: exponential, codimension-1 nilradical, exact symplectic =>
    // two open points, hence quasi-compact opens.
    if exponential && exact_sympl.holds() && !model.full_algebra().is_nilpotent() {
        eng.fire(
            "R5",
            "Lemma extra + Cor. extra-cor",
            vec![
                "exponential".into(),
                "nilradical of codimension 1".into(),
                "exact symplectic".into(),
            ],
            vec![
                (Flag::OpenPrimPoints, TriState::Yes),
                (Flag::QuasiCompactOpen, TriState::Yes),
            ],
        );
        eng.opp_count = Some(2);
    }

    // R6: exact-symplectic codimension-1 case: classify the quotient by the
    // centre of N and transfer stable finiteness. The downward direction of
    // the equivalence holds in every dimension; the upward copies require
    // the trivial K_0 pairing, which holds exactly when dim is divisible by
    // 4 (the informational dichotomy below).
    if exact_sympl.holds() && depth < 64 {
        let (quot_n, _) = n_alg.quotient(&center_n).expect("the centre is an ideal");
        let d_quot = induced_on_quotient(d, &center_n).expect("centre invariant");
        if let Ok(quot_model) = GroupModel::new(quot_n, d_quot) {
            let sub = classify_inner(&quot_model, depth + 1)?;
            let dichotomy = dim % 4 == 0;
            let mut effects = Vec::new();
            if sub.stably_finite == TriState::No {
                effects.push((Flag::StablyFinite, TriState::No));
            }
            if dichotomy {
                if sub.stably_finite == TriState::Yes {
                    effects.push((Flag::StablyFinite, TriState::Yes));
                }
                if sub.af_embeddable == TriState::Yes {
                    effects.push((Flag::AfEmbeddable, TriState::Yes));
                }
            }
            eng.fire(
                "R6",
                "Cor. cf-cor8",
                vec![
                    "exact symplectic, nilradical of codimension 1".into(),
                    format!(
                        "quotient (N/Z) x| R: stably_finite = {}, af_embeddable = {}",
                        sub.stably_finite, sub.af_embeddable
                    ),
                    format!(
                        "K_0 pairing dichotomy [Thm. cf-prop7(ii)]: trivial intersection = {dichotomy} (dim = {dim})"
                    ),
                ],
                effects,
            );
        }
    }

    // R7: abelian nilradical: the generalized ax+b equivalence decides
    // everything at once. With V = 0 the group degenerates to R and the
    // empty spectrum lands on the not-one-sided side of the dichotomy.
    if n_alg.is_abelian() {
        let os = n_alg.dim() > 0 && one_sided(char_d);
        eng.quasidiagonal = Some(if os { TriState::No } else { TriState::Yes });
        let effects = if os {
            vec![
                (Flag::StablyFinite, TriState::No),
                (Flag::AfEmbeddable, TriState::No),
                (Flag::QuasiCompactOpen, TriState::Yes),
                (Flag::StablyProjectionless, TriState::No),
            ]
        } else {
            vec![
                (Flag::AfEmbeddable, TriState::Yes),
                (Flag::StablyFinite, TriState::Yes),
                (Flag::StablyProjectionless, TriState::Yes),
                (Flag::QuasiCompactOpen, TriState::No),
            ]
        };
        eng.fire(
            "R7",
            "Example ax+b",
            vec![
                "nilradical abelian".into(),
                format!(
                    "sigma(D) {} one open half-plane",
                    if os { "inside" } else { "not inside" }
                ),
            ],
            effects,
        );
    }

    // R8: 2-step nilradical with constant orbit dimension, odd quotient,
    // diagonalizable derivation with mixed spectrum avoiding iR \ {0}.
    if !n_alg.is_abelian()
        && n_alg.derived_subalgebra() == center_n
        && (n_alg.dim() - center_n.dim()) % 2 == 1
        && exponential
        && mixed_real_part_exists(char_d)
        && is_diagonalizable(d)
    {
        let d_generic = generic_orbit_dim(n_alg, RankMode::Exact);
        if d_generic.certified {
            if let Ok(ConstOrbitDim::Yes) = constant_orbit_dim_off_center_annihilator(
                n_alg,
                d_generic.value,
                ExecMode::default(),
            ) {
                eng.fire(
                    "R8",
                    "Lemma special",
                    vec![
                        "[h, h] = z(h), dim(h/z) odd".into(),
                        format!(
                            "constant orbit dimension {} off z-annihilator",
                            d_generic.value
                        ),
                        "D diagonalizable".into(),
                        "sigma(D) meets iR only in 0".into(),
                        "sigma(D) has real parts on both sides of 0".into(),
                    ],
                    vec![(Flag::AfEmbeddable, TriState::Yes)],
                );
            }
        }
    }

    // R9: Heisenberg nilradical under the standing exponentiality
    // hypothesis.
    if exponential {
        let heis_n = match model.provenance() {
            Provenance::Heisenberg { n } => Some(*n),
            _ => recognize_heisenberg(n_alg),
        };
        if let Some(hn) = heis_n {
            let d_on_z = restrict(d, &center_n).expect("centre invariant");
            let d_z = d_on_z.get(0, 0).clone();
            let d_tilde = induced_on_quotient(d, &center_n).expect("centre invariant");
            let char_tilde = d_tilde.char_poly();
            if d_z.is_zero() {
                eng.fire(
                    "R9",
                    "Prop. Heis(i)",
                    vec![format!("Heisenberg nilradical h_{hn}"), "d_z = 0".into()],
                    vec![
                        (Flag::AfEmbeddable, TriState::Yes),
                        (Flag::QuasiCompactOpen, TriState::No),
                    ],
                );
            } else {
                if one_sided(&char_tilde) {
                    eng.fire(
                        "R9",
                        "Prop. Heis(ii)",
                        vec![
                            format!("Heisenberg nilradical h_{hn}"),
                            "d_z != 0".into(),
                            "sigma(D~) inside one open half-plane".into(),
                        ],
                        vec![(Flag::StablyFinite, TriState::No)],
                    );
                }
                if hn % 2 == 0 {
                    eng.fire(
                        "R9",
                        "Prop. Heis(iii)",
                        vec![
                            format!("Heisenberg nilradical h_{hn}, n even"),
                            "d_z != 0".into(),
                        ],
                        vec![(Flag::StablyFinite, TriState::No)],
                    );
                }
                if hn % 2 == 1 && mixed_real_part_exists(&char_tilde) {
                    eng.fire(
                        "R9",
                        "Prop. Heis(iv)",
                        vec![
                            format!("Heisenberg nilradical h_{hn}, n odd"),
                            "d_z != 0".into(),
                            "sigma(D~) has real parts on both sides of 0".into(),
                        ],
                        vec![(Flag::AfEmbeddable, TriState::Yes)],
                    );
                }
            }
        }
    }

    // R10: central extensions of the free 2-step algebra: the sign pattern
    // of (b_1, b_2, b_3) decides stable finiteness and AF-embeddability.
    if let Provenance::N6n15 { b, .. } = model.provenance() {
        let tr: Rational = b.iter().sum();
        if !tr.is_zero() {
            let all_pos = b.iter().all(|x| x.is_positive());
            let all_neg = b.iter().all(|x| x.is_negative());
            if all_pos || all_neg {
                eng.fire(
                    "R10",
                    "Thm. N6N15",
                    vec![format!("b = {} one-sided", fmt_signs(b))],
                    vec![
                        (Flag::StablyFinite, TriState::No),
                        (Flag::AfEmbeddable, TriState::No),
                    ],
                );
            } else {
                eng.fire(
                    "R10",
                    "Thm. N6N15",
                    vec![format!("b = {} mixed", fmt_signs(b))],
                    vec![(Flag::AfEmbeddable, TriState::Yes)],
                );
            }
        }
    }

    // R11: division-algebra Heisenberg models with c != 0: never stably
    // projectionless; for K != R not even stably finite.
    if let Provenance::Hk { name, c, .. } = model.provenance() {
        if !c.is_zero() {
            let mut effects = vec![(Flag::StablyProjectionless, TriState::No)];
            let mut inputs = vec![format!("K = {name}, c = {} != 0", format_rational(c))];
            if *name != DivisionAlgebraName::R {
                effects.push((Flag::StablyFinite, TriState::No));
                inputs.push("K != R".into());
            }
            eng.fire("R11", "Thm. N6N17", inputs, effects);
        }
    }

    eng.close(dim);
    eng.into_verdict(dim)
}

/// Generalized ax+b classification: `V = R^n` abelian, any square rational
/// derivation. The equivalence list makes five flags definitive, including
/// quasidiagonality.
pub fn classify_axb(d: &Matrix) -> Result<Verdict, ClassifyError> {
    let model =
        GroupModel::with_provenance(LieAlgebra::abelian(d.rows()), d.clone(), Provenance::Axb)?;
    classify(&model)
}

/// Division-algebra family entry point: `h_K` with the diagonal derivation
/// `(a, b, c)`, requiring `a_k + b_k = c != 0`.
pub fn classify_division(
    name: DivisionAlgebraName,
    n: usize,
    a: &[Rational],
    b: &[Rational],
    c: &Rational,
) -> Result<Verdict, ClassifyError> {
    let table = crate::families::division_algebra(name);
    let alg = crate::families::hk_algebra(&table, n);
    let d = crate::families::hk_derivation(&table, n, a, b, c).map_err(|e| {
        ClassifyError::Model(ModelError::Lie(LieError::BadConstruction(e.to_string())))
    })?;
    if c.is_zero() {
        return Err(ClassifyError::Model(ModelError::Lie(
            LieError::BadConstruction("the division family requires c != 0".into()),
        )));
    }
    let model = GroupModel::with_provenance(
        alg,
        d,
        Provenance::Hk {
            name,
            n,
            c: c.clone(),
        },
    )?;
    classify(&model)
}

/// Classify a batch of models; results keep the input order.
pub fn batch_classify(
    models: Vec<GroupModel>,
    mode: ExecMode,
) -> Vec<Result<Verdict, ClassifyError>> {
    crate::exec::map_collect(mode, models, |m| classify(&m))
}
