//! The end-to-end check pipeline: validate, classify, compute curvature, run
//! every applicable identity and evaluate the implications among them.
//!
//! Identities come in two kinds. *Required* identities must hold on every
//! input they apply to; a failure makes the run fail. *Properties* describe
//! the model (is it locally symmetric, η-Einstein, …) and never fail a run by
//! themselves. Implications tie properties together and are verified as
//! `hypothesis ⇒ conclusion` (or `⇔`); a violated implication fails the run.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{format_rational, rat, signature, Rational};
use crate::catalog::ModelSpec;
use crate::connection::{covariant_derivative, levi_civita};
use crate::curvature::{curvature_bundle, nabla_curvature};
use crate::error::{Error, Result};
use crate::identities::{self as id, structural, IdentityReport, Witness};
use crate::paracontact::{check_axioms, classify};

/// Every identity name [`run_check`] can report, in report order.
pub const IDENTITY_NAMES: &[&str] = &[
    "torsion_free",
    "metric_compatible",
    "nabla_metric_zero",
    "bianchi_first",
    "bianchi_second",
    "curvature_symmetries",
    "ricci_symmetric",
    "ricci_operator",
    "weyl_trace_free",
    "three_dim_curvature",
    "nabla_xi_is_phi",
    "normal",
    "k_paracontact",
    "not_para_sasakian",
    "nabla_eta",
    "lie_xi_g",
    "lie_xi_phi",
    "lie_xi_eta",
    "d_eta_phi",
    "curvature_xi",
    "curvature_xi_slot",
    "ricci_xi",
    "xi_sectional_curvature",
    "nabla_curvature_xi",
    "curvature_phi_commutator",
    "curvature_phi_pair",
    "three_dim_ricci",
    "three_dim_curvature_qps",
    "eta_einstein_sum",
    "phps_coefficients",
    "constant_curvature",
    "eta_einstein",
    "constant_phps",
    "pc_bochner_zero",
    "conformally_flat",
    "locally_symmetric",
    "locally_phi_symmetric",
    "ricci_semisymmetric",
    "semisymmetric",
    "eta_parallel_ricci",
    "cyclic_parallel_ricci",
];

/// Every implication name [`run_check`] can report, in report order.
pub const IMPLICATION_NAMES: &[&str] = &[
    "symmetric_implies_curvature_minus1",
    "semisymmetric_implies_curvature_minus1",
    "phps_implies_eta_einstein",
    "phps_minus1_implies_constant_curvature",
    "phps_iff_eta_einstein_bochner_flat",
    "conformally_flat_implies_curvature_minus1",
    "scal_minus6_iff_constant_curvature",
    "ricci_semisymmetric_implies_curvature_minus1",
    "phi_symmetric_iff_constant_scal",
    "ricci_semisymmetric_implies_symmetric",
    "eta_parallel_implies_phi_symmetric",
    "eta_parallel_implies_cyclic_parallel",
];

/// Which identities and implications to run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum Selection {
    #[default]
    All,
    Only(BTreeSet<String>),
}

impl Selection {
    /// Parses `all` or a comma-separated list of identity and implication
    /// names.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim() == "all" {
            return Ok(Selection::All);
        }
        let mut names = BTreeSet::new();
        for name in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if !IDENTITY_NAMES.contains(&name) && !IMPLICATION_NAMES.contains(&name) {
                return Err(Error::UnknownIdentity(name.to_string()));
            }
            names.insert(name.to_string());
        }
        Ok(Selection::Only(names))
    }

    fn includes(&self, name: &str) -> bool {
        match self {
            Selection::All => true,
            Selection::Only(names) => names.contains(name),
        }
    }
}

/// Options for [`run_check`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckOptions {
    pub selection: Selection,
    /// Classification flags the user asserts, e.g. `("para_sasakian", false)`.
    pub expectations: Vec<(String, bool)>,
}

impl CheckOptions {
    /// Parses a comma-separated list of classification flags; a leading `!`
    /// asserts that the flag is false.
    pub fn parse_expectations(text: &str) -> Result<Vec<(String, bool)>> {
        text.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|item| {
                let (name, value) = match item.strip_prefix('!') {
                    Some(rest) => (rest, false),
                    None => (item, true),
                };
                if CLASSIFICATION_FLAGS.contains(&name) {
                    Ok((name.to_string(), value))
                } else {
                    Err(Error::UnknownIdentity(name.to_string()))
                }
            })
            .collect()
    }
}

/// Classification flag names accepted by `--expect`.
pub const CLASSIFICATION_FLAGS: &[&str] = &[
    "almost_paracontact",
    "compatible_metric",
    "signature_ok",
    "paracontact_metric_pos",
    "paracontact_metric_neg",
    "k_paracontact",
    "para_sasakian",
    "quasi_para_sasakian",
    "nabla_xi_is_phi",
    "normal",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Required,
    Property,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// Failed, with the first witness when the check is componentwise.
    Fail(Option<Witness>),
    Skipped(String),
}

/// One identity line of the report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityEntry {
    pub name: String,
    pub kind: Kind,
    pub status: Status,
}

impl IdentityEntry {
    pub fn holds(&self) -> Option<bool> {
        match self.status {
            Status::Pass => Some(true),
            Status::Fail(_) => Some(false),
            Status::Skipped(_) => None,
        }
    }

    /// A required identity that was evaluated and failed.
    pub fn is_failure(&self) -> bool {
        self.kind == Kind::Required && matches!(self.status, Status::Fail(_))
    }
}

/// `hypothesis ⇒ conclusion`, or `⇔` when `biconditional`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Implication {
    pub name: String,
    pub hypothesis: bool,
    pub conclusion: bool,
    pub biconditional: bool,
    pub verified: bool,
}

/// Classification flag asserted by the user and what was found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub flag: String,
    pub expected: bool,
    pub actual: bool,
}

/// Curvature invariants of the model.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub dim: usize,
    pub signature: Option<(usize, usize)>,
    pub scal: Rational,
    pub constant_curvature: Option<Rational>,
    /// φ-para-holomorphic sectional curvature when the curvature matches the
    /// constant-`H` model.
    pub h: Option<Rational>,
    /// `(a, b)` with `Ric = a·g + b·η⊗η`, when exact.
    pub eta_einstein: Option<(Rational, Rational)>,
    /// The PC-Bochner constant `k`.
    pub bochner_k: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunReport {
    pub model: String,
    pub classification: Vec<(&'static str, bool)>,
    pub expectations: Vec<Expectation>,
    pub summary: Summary,
    pub identities: Vec<IdentityEntry>,
    pub implications: Vec<Implication>,
}

impl RunReport {
    pub fn classification_flag(&self, name: &str) -> Option<bool> {
        self.classification.iter().find(|(n, _)| *n == name).map(|(_, v)| *v)
    }

    pub fn identity(&self, name: &str) -> Option<&IdentityEntry> {
        self.identities.iter().find(|e| e.name == name)
    }

    pub fn implication(&self, name: &str) -> Option<&Implication> {
        self.implications.iter().find(|i| i.name == name)
    }

    /// Every required identity passed, every implication verified and every
    /// expectation was met.
    pub fn overall(&self) -> bool {
        !self.identities.iter().any(IdentityEntry::is_failure)
            && self.implications.iter().all(|i| i.verified)
            && self.expectations.iter().all(|e| e.expected == e.actual)
    }

    /// Process exit code: `0` when [`RunReport::overall`] holds, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.overall() {
            0
        } else {
            1
        }
    }
}

struct Collector<'a> {
    selection: &'a Selection,
    entries: Vec<IdentityEntry>,
    implications: Vec<Implication>,
}

impl Collector<'_> {
    fn push(&mut self, kind: Kind, report: IdentityReport) {
        if !self.selection.includes(&report.name) {
            return;
        }
        let name = report.name.clone();
        let status = if report.pass {
            Status::Pass
        } else {
            Status::Fail(report.witness)
        };
        self.entries.push(IdentityEntry { name, kind, status });
    }

    /// A yes/no check without a componentwise witness.
    fn push_flag(&mut self, kind: Kind, name: &str, pass: bool) {
        self.push(
            kind,
            IdentityReport {
                name: name.to_string(),
                pass,
                witness: None,
            },
        );
    }

    fn skip(&mut self, kind: Kind, names: &[&str], reason: &str) {
        for name in names {
            if self.selection.includes(name) {
                self.entries.push(IdentityEntry {
                    name: name.to_string(),
                    kind,
                    status: Status::Skipped(reason.to_string()),
                });
            }
        }
    }

    fn implies(&mut self, name: &str, hypothesis: bool, conclusion: bool, biconditional: bool) {
        if !self.selection.includes(name) {
            return;
        }
        let verified = if biconditional {
            hypothesis == conclusion
        } else {
            !hypothesis || conclusion
        };
        self.implications.push(Implication {
            name: name.to_string(),
            hypothesis,
            conclusion,
            biconditional,
            verified,
        });
    }
}

fn scalar_report(name: &str, residual: Rational) -> IdentityReport {
    let witness = (!residual.is_zero()).then(|| Witness {
        indices: vec![],
        component: None,
        residual,
    });
    IdentityReport::from_witness(name, witness)
}

/// Runs the full check on a parsed model.
///
/// Input problems (invalid frame, even dimension, missing curvature data)
/// are returned as errors; identity failures are recorded in the report.
pub fn run_check(spec: &ModelSpec, options: &CheckOptions) -> Result<RunReport> {
    spec.validate()?;
    let s = spec.structure()?;
    check_axioms(&s)?;
    let frame = s.base();
    let conn = levi_civita(frame)?;
    let cb = curvature_bundle(frame, &conn)?;
    let nabla_r = nabla_curvature(frame, &conn, &cb)?;
    let nabla_ric = covariant_derivative(&conn, &cb.ricci)?;
    let class = classify(&s, &conn);
    let qps = class.is_quasi_para_sasakian();
    let d = s.dim();

    let mut out = Collector {
        selection: &options.selection,
        entries: Vec::new(),
        implications: Vec::new(),
    };
    use Kind::{Property, Required};

    out.push(Required, structural::torsion_free(frame, &conn));
    out.push(Required, structural::metric_compatible(frame, &conn));
    out.push(Required, structural::nabla_metric_zero(frame, &conn)?);
    out.push(Required, structural::bianchi_first(&cb));
    out.push(Required, structural::bianchi_second(&nabla_r));
    out.push(Required, structural::curvature_symmetries(&cb));
    out.push(Required, structural::ricci_symmetric(&cb));
    out.push(Required, structural::ricci_operator_consistent(&cb));

    let weyl = if d > 3 { Some(id::weyl_tensor(&cb)?) } else { None };
    match &weyl {
        Some(c) => out.push(Required, id::weyl_traces_vanish(&cb, c)),
        None => out.skip(Required, &["weyl_trace_free"], "dimension at most 3"),
    }
    let three_dim = if d == 3 { Some(id::three_d_reconstruct(&cb, &s)?) } else { None };
    match &three_dim {
        Some(t) => out.push(Required, t.generic.clone()),
        None => out.skip(Required, &["three_dim_curvature"], "dimension is not 3"),
    }

    let eta_fit = id::eta_einstein_fit(&s, &cb).ok();
    let constant_curvature = id::constant_curvature_test(&cb);
    let locally_symmetric = id::local_symmetry_test(&nabla_r);
    let locally_phi_symmetric = id::local_phi_symmetry_test(&s, &nabla_r);
    let ricci_semisymmetric = id::check_ricci_semisymmetry(&cb)?;
    let semisymmetric = id::check_semisymmetry(&cb)?;
    let eta_parallel = id::eta_parallel_check(&s, &nabla_ric);
    let cyclic_parallel = id::cyclic_parallel_check(&nabla_ric);

    let mut summary = Summary {
        dim: d,
        signature: signature(frame.metric()).ok(),
        scal: cb.scal.clone(),
        constant_curvature: constant_curvature.clone(),
        h: None,
        eta_einstein: eta_fit.as_ref().filter(|f| f.exact).map(|f| (f.a.clone(), f.b.clone())),
        bochner_k: None,
    };

    let qps_required = [
        "nabla_xi_is_phi",
        "normal",
        "k_paracontact",
        "not_para_sasakian",
        "nabla_eta",
        "lie_xi_g",
        "lie_xi_phi",
        "lie_xi_eta",
        "d_eta_phi",
        "curvature_xi",
        "curvature_xi_slot",
        "ricci_xi",
        "xi_sectional_curvature",
        "nabla_curvature_xi",
        "curvature_phi_commutator",
        "curvature_phi_pair",
        "three_dim_ricci",
        "three_dim_curvature_qps",
        "eta_einstein_sum",
        "phps_coefficients",
    ];
    let mut hol = None;
    let mut bochner = None;
    if qps {
        out.push(Required, class.nabla_xi_is_phi.clone());
        out.push(Required, class.normal.clone());
        out.push(Required, class.k_paracontact.clone());
        out.push_flag(Required, "not_para_sasakian", !class.para_sasakian.pass);
        for r in id::verify_structure_consequences(&s)? {
            out.push(Required, r);
        }
        for r in id::verify_xi_curvature(&s, &cb, &nabla_r)? {
            out.push(Required, r);
        }
        for r in id::verify_phi_curvature(&s, &cb)? {
            out.push(Required, r);
        }
        match three_dim.as_ref().and_then(|t| t.ricci_form.clone().zip(t.curvature_form.clone())) {
            Some((ricci, curvature)) => {
                out.push(Required, ricci);
                out.push(Required, curvature);
            }
            None => out.skip(Required, &["three_dim_ricci", "three_dim_curvature_qps"], "dimension is not 3"),
        }
        match eta_fit.as_ref().filter(|f| f.exact).and_then(|f| f.sum_rule.clone()) {
            Some(r) => out.push(Required, r),
            None => out.skip(Required, &["eta_einstein_sum"], "not η-Einstein"),
        }
        hol = id::detect_h(&s, &cb).ok();
        bochner = Some(id::pc_bochner(&s, &cb)?);
        match (&hol, &eta_fit) {
            (Some(h), Some(fit)) if h.matches_model => {
                let n = Rational::from_integer((s.n() as i64).into());
                let a = (&n * (&h.h - rat(3)) + &h.h + rat(1)) / rat(2);
                let b = -(&n + rat(1)) * (&h.h + rat(1)) / rat(2);
                let da = &fit.a - a;
                let residual = if da.is_zero() { &fit.b - b } else { da };
                out.push(Required, scalar_report("phps_coefficients", residual));
            }
            _ => out.skip(Required, &["phps_coefficients"], "no constant φ-para-holomorphic curvature"),
        }
    } else {
        out.skip(Required, &qps_required, "not quasi-para-Sasakian");
    }

    out.push_flag(Property, "constant_curvature", constant_curvature.is_some());
    match &eta_fit {
        Some(fit) => out.push(Property, fit.residual.clone()),
        None => out.skip(Property, &["eta_einstein"], "no non-null horizontal direction"),
    }
    match &hol {
        Some(h) => {
            out.push(Property, h.comparison.clone());
            if h.matches_model {
                summary.h = Some(h.h.clone());
            }
        }
        None => out.skip(Property, &["constant_phps"], "not quasi-para-Sasakian"),
    }
    match &bochner {
        Some(b) => {
            out.push(Property, b.zero.clone());
            summary.bochner_k = Some(b.k.clone());
        }
        None => out.skip(Property, &["pc_bochner_zero"], "not quasi-para-Sasakian"),
    }
    match &weyl {
        Some(c) => out.push(Property, id::check_tensor_zero("conformally_flat", c)),
        None => out.skip(Property, &["conformally_flat"], "dimension at most 3"),
    }
    out.push(Property, locally_symmetric.clone());
    out.push(Property, locally_phi_symmetric.clone());
    out.push(Property, ricci_semisymmetric.clone());
    out.push(Property, semisymmetric.clone());
    out.push(Property, eta_parallel.clone());
    out.push(Property, cyclic_parallel.clone());

    if qps {
        let minus_one = constant_curvature == Some(rat(-1));
        let eta_exact = eta_fit.as_ref().is_some_and(|f| f.exact);
        let phps = hol.as_ref().is_some_and(|h| h.matches_model);
        let bochner_flat = bochner.as_ref().is_some_and(|b| b.zero.pass);
        out.implies("symmetric_implies_curvature_minus1", locally_symmetric.pass, minus_one, false);
        out.implies("semisymmetric_implies_curvature_minus1", semisymmetric.pass, minus_one, false);
        out.implies("phps_implies_eta_einstein", phps, eta_exact, false);
        let phps_minus1 = phps && hol.as_ref().is_some_and(|h| h.h == rat(-1));
        out.implies("phps_minus1_implies_constant_curvature", phps_minus1, constant_curvature.is_some(), false);
        out.implies("phps_iff_eta_einstein_bochner_flat", phps, eta_exact && bochner_flat, true);
        if let Some(c) = &weyl {
            out.implies("conformally_flat_implies_curvature_minus1", c.is_zero(), minus_one, false);
        }
        if d == 3 {
            let scal_minus6 = cb.scal == rat(-6);
            out.implies("scal_minus6_iff_constant_curvature", scal_minus6, minus_one, true);
            out.implies("ricci_semisymmetric_implies_curvature_minus1", ricci_semisymmetric.pass, minus_one, false);
            // the scalar curvature of a left-invariant metric is constant
            out.implies("phi_symmetric_iff_constant_scal", locally_phi_symmetric.pass, true, true);
            out.implies(
                "ricci_semisymmetric_implies_symmetric",
                ricci_semisymmetric.pass,
                locally_symmetric.pass,
                false,
            );
            out.implies(
                "eta_parallel_implies_phi_symmetric",
                eta_parallel.pass,
                locally_phi_symmetric.pass,
                false,
            );
            out.implies("eta_parallel_implies_cyclic_parallel", eta_parallel.pass, cyclic_parallel.pass, false);
        }
    }

    let classification = class.flags();
    let expectations = options
        .expectations
        .iter()
        .map(|(flag, expected)| {
            let actual = classification
                .iter()
                .find(|(n, _)| n == flag)
                .map(|(_, v)| *v)
                .ok_or_else(|| Error::UnknownIdentity(flag.clone()))?;
            Ok(Expectation {
                flag: flag.clone(),
                expected: *expected,
                actual,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(RunReport {
        model: spec.name.clone(),
        classification,
        expectations,
        summary,
        identities: out.entries,
        implications: out.implications,
    })
}

fn with_witness(label: &str, w: &Option<Witness>) -> String {
    match w {
        Some(w) => format!("{label} {w}"),
        None => label.to_string(),
    }
}

fn opt(r: &Option<Rational>) -> String {
    r.as_ref().map_or_else(|| "absent".to_string(), format_rational)
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.summary;
        writeln!(f, "model: {}", self.model)?;
        writeln!(f, "dimension: {}", s.dim)?;
        if let Some((p, q)) = s.signature {
            writeln!(f, "signature: ({p},{q})")?;
        }
        writeln!(f)?;
        writeln!(f, "classification")?;
        for (name, value) in &self.classification {
            writeln!(f, "  {name:<28} {value}")?;
        }
        if !self.expectations.is_empty() {
            writeln!(f)?;
            writeln!(f, "expectations")?;
            for e in &self.expectations {
                let mark = if e.expected == e.actual { "ok" } else { "MISMATCH" };
                writeln!(f, "  {:<28} expected {} found {} {mark}", e.flag, e.expected, e.actual)?;
            }
        }
        writeln!(f)?;
        writeln!(f, "curvature")?;
        writeln!(f, "  scal                         {}", format_rational(&s.scal))?;
        writeln!(f, "  constant curvature c         {}", opt(&s.constant_curvature))?;
        writeln!(f, "  φ-para-holomorphic H         {}", opt(&s.h))?;
        let ab = s
            .eta_einstein
            .as_ref()
            .map_or_else(|| "absent".to_string(), |(a, b)| format!("({}, {})", format_rational(a), format_rational(b)));
        writeln!(f, "  η-Einstein (a, b)            {ab}")?;
        writeln!(f, "  PC-Bochner k                 {}", opt(&s.bochner_k))?;
        writeln!(f)?;
        writeln!(f, "identities")?;
        for e in &self.identities {
            let status = match (&e.status, e.kind) {
                (Status::Pass, Kind::Required) => "pass".to_string(),
                (Status::Fail(w), Kind::Required) => with_witness("FAIL", w),
                (Status::Pass, Kind::Property) => "holds".to_string(),
                (Status::Fail(w), Kind::Property) => with_witness("does not hold", w),
                (Status::Skipped(reason), _) => format!("skipped ({reason})"),
            };
            let kind = match e.kind {
                Kind::Required => "required",
                Kind::Property => "property",
            };
            writeln!(f, "  {:<28} {kind:<9} {status}", e.name)?;
        }
        if !self.implications.is_empty() {
            writeln!(f)?;
            writeln!(f, "implications")?;
            for i in &self.implications {
                let arrow = if i.biconditional { "<=>" } else { "=>" };
                let mark = if i.verified { "verified" } else { "VIOLATED" };
                writeln!(
                    f,
                    "  {:<44} {} {arrow} {}  {mark}",
                    i.name, i.hypothesis, i.conclusion
                )?;
            }
        }
        writeln!(f)?;
        write!(f, "overall: {}", if self.overall() { "pass" } else { "fail" })
    }
}

#[derive(Serialize)]
struct MachineWitness {
    indices: Vec<usize>,
    component: Option<usize>,
    residual: String,
}

#[derive(Serialize)]
struct MachineIdentity<'a> {
    name: &'a str,
    kind: Kind,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'a str>,
    witness: Option<MachineWitness>,
}

#[derive(Serialize)]
struct MachineSummary {
    dim: usize,
    signature: Option<[usize; 2]>,
    scal: String,
    constant_curvature: Option<String>,
    h: Option<String>,
    eta_einstein: Option<[String; 2]>,
    bochner_k: Option<String>,
}

#[derive(Serialize)]
struct MachineReport<'a> {
    model: &'a str,
    overall: &'static str,
    classification: BTreeMap<&'static str, bool>,
    expectations: &'a [Expectation],
    summary: MachineSummary,
    identities: Vec<MachineIdentity<'a>>,
    implications: &'a [Implication],
}

impl RunReport {
    /// Deterministic JSON rendering: fixed key order, rationals as canonical
    /// `"p/q"` strings.
    pub fn to_machine(&self) -> String {
        let s = &self.summary;
        let fr = |r: &Rational| format_rational(r);
        let identities = self
            .identities
            .iter()
            .map(|e| {
                let (status, reason, witness) = match (&e.status, e.kind) {
                    (Status::Pass, Kind::Required) => ("pass", None, None),
                    (Status::Fail(w), Kind::Required) => ("fail", None, w.as_ref()),
                    (Status::Pass, Kind::Property) => ("holds", None, None),
                    (Status::Fail(w), Kind::Property) => ("does_not_hold", None, w.as_ref()),
                    (Status::Skipped(r), _) => ("skipped", Some(r.as_str()), None),
                };
                MachineIdentity {
                    name: &e.name,
                    kind: e.kind,
                    status,
                    reason,
                    witness: witness.map(|w| MachineWitness {
                        indices: w.indices.clone(),
                        component: w.component,
                        residual: fr(&w.residual),
                    }),
                }
            })
            .collect();
        let report = MachineReport {
            model: &self.model,
            overall: if self.overall() { "pass" } else { "fail" },
            classification: self.classification.iter().copied().collect(),
            expectations: &self.expectations,
            summary: MachineSummary {
                dim: s.dim,
                signature: s.signature.map(|(p, q)| [p, q]),
                scal: fr(&s.scal),
                constant_curvature: s.constant_curvature.as_ref().map(fr),
                h: s.h.as_ref().map(fr),
                eta_einstein: s.eta_einstein.as_ref().map(|(a, b)| [fr(a), fr(b)]),
                bochner_k: s.bochner_k.as_ref().map(fr),
            },
            identities,
            implications: &self.implications,
        };
        let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
        let _ = writeln!(text);
        text
    }
}
