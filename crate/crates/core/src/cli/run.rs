use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::commensurability::{obstruction_check, witness_search, WitnessError};
use crate::covers::{
    chi_rho_cover, enumerate_covers, enumerate_covers_up_to, kurosh, verify_index_identity,
    verify_multiplicativity, verify_obs_sum, verify_symbolic_cover, Cover, CoverError, Equality,
    KuroshForm,
};
use crate::free_product::Presentation;
use crate::iso::IsoClassifier;
use crate::perm::{FinitePermGroup, PermError, Permutation};
use crate::rational::Rational;
use crate::Limits;

use super::schema::{parse_input, resolve_group, InputDocument, ResolvedGroup, TaskDef};
use super::{exit, ErrorKind, TaskError};

pub const REPORT_SCHEMA: &str = "gog-kit-report/1";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Failed,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaskResult {
    pub index: usize,
    pub task: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<TaskError>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub tasks: usize,
    pub tasks_ok: usize,
    pub tasks_failed: usize,
    pub tasks_errored: usize,
    pub identities_checked: u64,
    pub identities_passed: u64,
    pub identities_failed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: String,
    pub version: String,
    /// The input as parsed; absent for self-test runs and unparsable input.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<InputDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    /// Document-level problems; when present no task was run.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<TaskError>,
    pub results: Vec<TaskResult>,
    pub summary: Summary,
}

impl ReportDocument {
    pub(super) fn new(input: Option<InputDocument>, suite: Option<String>) -> Self {
        ReportDocument {
            schema: REPORT_SCHEMA.to_owned(),
            version: VERSION.to_owned(),
            input,
            suite,
            errors: Vec::new(),
            results: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub(super) fn push(&mut self, task: &str, outcome: Result<(Value, Tally), TaskError>) {
        let index = self.results.len();
        let s = &mut self.summary;
        s.tasks += 1;
        let result = match outcome {
            Ok((output, tally)) => {
                s.identities_checked += tally.checked;
                s.identities_passed += tally.passed;
                s.identities_failed += tally.checked - tally.passed;
                let status = if tally.all_passed() {
                    s.tasks_ok += 1;
                    Status::Ok
                } else {
                    s.tasks_failed += 1;
                    Status::Failed
                };
                TaskResult {
                    index,
                    task: task.to_owned(),
                    status,
                    output: Some(output),
                    error: None,
                }
            }
            Err(e) => {
                s.tasks_errored += 1;
                TaskResult {
                    index,
                    task: task.to_owned(),
                    status: Status::Error,
                    output: None,
                    error: Some(e),
                }
            }
        };
        self.results.push(result);
    }
}

/// `0` when every identity passed and nothing errored; otherwise the most
/// severe of bound (3), input or hypothesis (2), verification (1).
pub fn exit_code(report: &ReportDocument) -> i32 {
    let errors = report
        .errors
        .iter()
        .chain(report.results.iter().filter_map(|r| r.error.as_ref()));
    let worst = errors.map(TaskError::exit_code).max();
    match worst {
        Some(code) => code,
        None if report.results.iter().any(|r| r.status == Status::Failed) => {
            exit::VERIFICATION_FAILED
        }
        None => exit::OK,
    }
}

/// Counts of exact identities checked by one task.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub(super) struct Tally {
    pub checked: u64,
    pub passed: u64,
}

impl Tally {
    pub fn record(&mut self, ok: bool) {
        self.checked += 1;
        self.passed += ok as u64;
    }

    pub fn absorb(&mut self, other: Tally) {
        self.checked += other.checked;
        self.passed += other.passed;
    }

    pub fn all_passed(&self) -> bool {
        self.checked == self.passed
    }
}

pub(super) fn cover_error(e: CoverError) -> TaskError {
    let kind = match &e {
        CoverError::Perm(PermError::OrderBound(_) | PermError::DegreeBound { .. }) => {
            ErrorKind::Bound
        }
        CoverError::AbstractFactor(_)
        | CoverError::DegenerateBase { .. }
        | CoverError::ZeroRho(_) => ErrorKind::Hypothesis,
        _ => ErrorKind::Input,
    };
    TaskError::new(kind, e.to_string())
}

/// The three identities every cover must satisfy, plus the two internal
/// consistency checks (Kurosh reduction and connectivity).
pub(super) struct CoverChecks {
    pub obs_sum: Vec<crate::covers::FactorSumCheck>,
    pub multiplicativity: Equality<Rational>,
    pub index_identity: Option<crate::covers::IndexIdentity>,
    pub kurosh_reduction: Equality<Rational>,
    pub connectivity: Equality<bool>,
}

impl CoverChecks {
    pub fn new(c: &Cover, kf: &KuroshForm) -> Self {
        CoverChecks {
            obs_sum: verify_obs_sum(c),
            multiplicativity: verify_multiplicativity(c),
            index_identity: verify_index_identity(c).ok(),
            kurosh_reduction: Equality::new(kf.chi_rho(), chi_rho_cover(c)),
            connectivity: Equality::new(
                c.cover_graph.is_connected().unwrap_or(false),
                c.datum.is_transitive(),
            ),
        }
    }

    pub fn tally(&self) -> Tally {
        let mut t = Tally::default();
        for o in &self.obs_sum {
            t.record(o.check.passed);
        }
        t.record(self.multiplicativity.passed);
        if let Some(i) = &self.index_identity {
            t.record(i.check.passed);
        }
        t.record(self.kurosh_reduction.passed);
        t.record(self.connectivity.passed);
        t
    }

    /// `(identity name, detail)` for every failed check.
    pub fn failures(&self) -> Vec<(&'static str, Value)> {
        let mut out = Vec::new();
        for o in self.obs_sum.iter().filter(|o| !o.check.passed) {
            out.push(("obs_sum", json!(o)));
        }
        if !self.multiplicativity.passed {
            out.push(("multiplicativity", json!(self.multiplicativity)));
        }
        if let Some(i) = self.index_identity.as_ref().filter(|i| !i.check.passed) {
            out.push(("index_identity", json!(i)));
        }
        if !self.kurosh_reduction.passed {
            out.push(("kurosh_reduction", json!(self.kurosh_reduction)));
        }
        if !self.connectivity.passed {
            out.push(("connectivity", json!(self.connectivity)));
        }
        out
    }
}

fn group_json(g: &FinitePermGroup) -> Value {
    let gens: Vec<Vec<usize>> = g
        .generators()
        .iter()
        .filter(|p| !p.is_identity())
        .map(Permutation::to_one_based)
        .collect();
    json!({ "order": g.order(), "generators": gens })
}

fn kurosh_json(base: &Presentation, kf: &KuroshForm) -> Value {
    let factors: Vec<Value> = kf
        .factors
        .iter()
        .map(|f| {
            json!({
                "base_factor": base.factors()[f.base_factor].name,
                "group": f.label.short_name(),
                "label": f.label.to_string(),
                "index": f.index,
            })
        })
        .collect();
    json!({ "form": kf.describe(), "factors": factors, "free_rank": kf.free_rank })
}

fn cover_json(c: &Cover, kf: &KuroshForm, checks: &CoverChecks) -> Value {
    let fibers: Vec<Value> = c
        .fibers
        .iter()
        .map(|f| {
            let orbits: Vec<Value> = f
                .orbits
                .iter()
                .map(|o| {
                    let points: Vec<usize> = o.points.iter().map(|x| x + 1).collect();
                    json!({ "points": points, "stabilizer": group_json(&o.stabilizer) })
                })
                .collect();
            json!({ "factor": f.factor, "orbits": orbits })
        })
        .collect();
    json!({
        "datum": c.datum,
        "fibers": fibers,
        "fiber_count": c.fiber_count,
        "cover_rank": c.cover_rank,
        "cover_graph": {
            "vertices": c.cover_graph.vertex_count(),
            "edges": c.cover_graph.oriented_edge_count() / 2,
        },
        "chi_rho": chi_rho_cover(c),
        "kurosh": kurosh_json(&c.base, kf),
        "checks": {
            "obs_sum": checks.obs_sum,
            "multiplicativity": checks.multiplicativity,
            "index_identity": checks.index_identity,
            "kurosh_reduction": checks.kurosh_reduction,
            "connectivity": checks.connectivity,
        },
    })
}

/// Per-identity pass counts over a batch of covers of one index.
#[derive(Debug, Clone, Default, Serialize)]
pub(super) struct IndexAggregate {
    pub k: usize,
    pub covers: usize,
    pub obs_sum: Tally,
    pub multiplicativity: Tally,
    /// Absent when the base has fewer than two factors and letters.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index_identity: Option<Tally>,
    pub kurosh_reduction: Tally,
    pub connectivity: Tally,
    /// Distinct Kurosh forms with multiplicities.
    pub kurosh_forms: BTreeMap<String, usize>,
}

const MAX_FAILURES: usize = 20;

/// Checks every cover of every index in `by_k`; returns per-index
/// aggregates, the overall tally, and up to [`MAX_FAILURES`] failure records.
pub(super) fn aggregate(
    by_k: &BTreeMap<usize, Vec<Cover>>,
    classifier: &mut IsoClassifier,
) -> (Vec<IndexAggregate>, Tally, Vec<Value>) {
    let mut rows = Vec::new();
    let mut tally = Tally::default();
    let mut failures = Vec::new();
    for (&k, covers) in by_k {
        let mut row = IndexAggregate {
            k,
            covers: covers.len(),
            ..Default::default()
        };
        for c in covers {
            let kf = kurosh(c, classifier);
            let checks = CoverChecks::new(c, &kf);
            for o in &checks.obs_sum {
                row.obs_sum.record(o.check.passed);
            }
            row.multiplicativity.record(checks.multiplicativity.passed);
            if let Some(i) = &checks.index_identity {
                row.index_identity
                    .get_or_insert_with(Tally::default)
                    .record(i.check.passed);
            }
            row.kurosh_reduction.record(checks.kurosh_reduction.passed);
            row.connectivity.record(checks.connectivity.passed);
            *row.kurosh_forms.entry(kf.describe()).or_default() += 1;
            tally.absorb(checks.tally());
            for (identity, detail) in checks.failures() {
                if failures.len() < MAX_FAILURES {
                    failures.push(
                        json!({ "k": k, "datum": c.datum, "identity": identity, "detail": detail }),
                    );
                }
            }
        }
        rows.push(row);
    }
    (rows, tally, failures)
}

fn presentation_json(p: &Presentation) -> Value {
    let factors: Vec<Value> = p
        .factors()
        .iter()
        .map(|f| {
            let mut v = json!({ "name": f.name, "rho": f.rho() });
            if let Some(g) = f.group() {
                v["order"] = json!(g.order());
            }
            v
        })
        .collect();
    json!({ "form": p.describe(), "factors": factors, "free_rank": p.free_rank() })
}

type Outcome = Result<(Value, Tally), TaskError>;

fn chi_task(name: &str, g: &ResolvedGroup) -> Outcome {
    let p = &g.presentation;
    let mut out = json!({
        "group": name,
        "presentation": presentation_json(p),
        "chi_rho": p.chi_rho(),
    });
    let mut tally = Tally::default();
    if let Some(gog) = &g.graph_of_groups {
        let graph = gog.graph();
        let direct = gog
            .chi_rho()
            .map_err(|e| TaskError::new(ErrorKind::Input, e.to_string()))?;
        let check = Equality::new(direct, p.chi_rho());
        tally.record(check.passed);
        out["graph_of_groups"] = json!({
            "vertices": graph.vertex_count(),
            "edges": graph.oriented_edge_count() / 2,
            "euler_characteristic": graph.euler_characteristic().ok(),
            "normal_form_round_trip": check,
        });
    }
    Ok((out, tally))
}

fn covers_task(name: &str, g: &ResolvedGroup, k: usize, limits: &Limits) -> Outcome {
    let p = &g.presentation;
    let covers = enumerate_covers(p, k, limits).map_err(cover_error)?;
    let mut classifier = IsoClassifier::new();
    let mut tally = Tally::default();
    let listed: Vec<Value> = covers
        .iter()
        .map(|c| {
            let kf = kurosh(c, &mut classifier);
            let checks = CoverChecks::new(c, &kf);
            tally.absorb(checks.tally());
            cover_json(c, &kf, &checks)
        })
        .collect();
    let out = json!({
        "group": name,
        "base": presentation_json(p),
        "chi_rho": p.chi_rho(),
        "k": k,
        "count": listed.len(),
        "covers": listed,
    });
    Ok((out, tally))
}

fn verify_task(name: &str, g: &ResolvedGroup, k_max: usize, limits: &Limits) -> Outcome {
    let p = &g.presentation;
    if k_max == 0 {
        return Err(TaskError::new(ErrorKind::Input, "k_max must be positive"));
    }
    let by_k = enumerate_covers_up_to(p, k_max, limits).map_err(cover_error)?;
    let mut classifier = IsoClassifier::new();
    let (rows, tally, failures) = aggregate(&by_k, &mut classifier);
    let out = json!({
        "group": name,
        "base": presentation_json(p),
        "chi_rho": p.chi_rho(),
        "k_max": k_max,
        "per_index": rows,
        "identities": tally,
        "failures": failures,
    });
    Ok((out, tally))
}

fn obstruct_task(
    g_name: &str,
    h_name: &str,
    g: &Presentation,
    h: &Presentation,
    mode: crate::Mode,
) -> Outcome {
    let report = obstruction_check(g, h, mode)
        .map_err(|e| TaskError::new(ErrorKind::Hypothesis, e.to_string()))?;
    let mut out = json!({
        "g": { "name": g_name, "form": g.describe() },
        "h": { "name": h_name, "form": h.describe() },
    });
    if let (Value::Object(dst), Value::Object(src)) = (&mut out, json!(report)) {
        dst.extend(src);
    }
    Ok((out, Tally::default()))
}

fn witness_task(
    g_name: &str,
    h_name: &str,
    g: &Presentation,
    h: &Presentation,
    k_max: usize,
    limits: &Limits,
) -> Outcome {
    let found = witness_search(g, h, k_max, limits).map_err(|e| match e {
        WitnessError::Cover(c) => cover_error(c),
        other => TaskError::new(ErrorKind::Input, other.to_string()),
    })?;
    let mut tally = Tally::default();
    let witness = found.map(|w| {
        for c in &w.consistency {
            tally.record(c.passed);
        }
        let mut v = json!(w);
        v["g"]["form"] = json!(w.g.kurosh.describe());
        v["h"]["form"] = json!(w.h.kurosh.describe());
        let mut parts: Vec<String> = w.common.labels.iter().map(|l| l.short_name()).collect();
        if w.common.free_rank > 0 || parts.is_empty() {
            parts.push(format!("F{}", w.common.free_rank));
        }
        v["common_form"] = json!(parts.join(" * "));
        v
    });
    let out = json!({
        "g": { "name": g_name, "form": g.describe(), "chi_rho": g.chi_rho() },
        "h": { "name": h_name, "form": h.describe(), "chi_rho": h.chi_rho() },
        "k_max": k_max,
        "found": witness.is_some(),
        "witness": witness,
    });
    Ok((out, tally))
}

fn symbolic_task(name: &str, g: &Presentation, k: u64, claimed: &[Vec<u64>]) -> Outcome {
    let s = verify_symbolic_cover(g, claimed, k).map_err(cover_error)?;
    let mut tally = Tally::default();
    tally.record(s.multiplicativity.passed);
    let pieces: Vec<Vec<Value>> = s
        .pieces
        .iter()
        .map(|row| {
            row.iter()
                .map(|(d, rho)| json!({ "index": d, "rho": rho }))
                .collect()
        })
        .collect();
    let out = json!({
        "group": name,
        "base": presentation_json(g),
        "k": k,
        "pieces": pieces,
        "fiber_count": s.fiber_count,
        "cover_rank": s.cover_rank,
        "cover": presentation_json(&s.presentation),
        "chi_rho": s.presentation.chi_rho(),
        "multiplicativity": s.multiplicativity,
        "extended": g.free_rank() > 0,
    });
    Ok((out, tally))
}

fn referenced(task: &TaskDef) -> Vec<(&'static str, &str)> {
    match task {
        TaskDef::Chi { group }
        | TaskDef::Covers { group, .. }
        | TaskDef::Verify { group, .. }
        | TaskDef::Symbolic { group, .. } => {
            vec![("group", group)]
        }
        TaskDef::Obstruct { g, h, .. } | TaskDef::Witness { g, h, .. } => vec![("g", g), ("h", h)],
    }
}

/// Resolves every group, then runs the tasks in order. Resolution problems
/// and dangling references are document-level errors and stop the run.
pub fn run(input: &InputDocument, limits: &Limits) -> ReportDocument {
    let mut report = ReportDocument::new(Some(input.clone()), None);
    let mut groups = BTreeMap::new();
    for (name, def) in &input.groups {
        match resolve_group(name, def, limits) {
            Ok(g) => {
                groups.insert(name.as_str(), g);
            }
            Err(e) => report.errors.push(e),
        }
    }
    for (i, task) in input.tasks.iter().enumerate() {
        for (field, name) in referenced(task) {
            if !input.groups.contains_key(name) {
                report.errors.push(TaskError::at(
                    ErrorKind::Input,
                    format!("tasks[{i}].{field}"),
                    format!("unknown group {name:?}"),
                ));
            }
        }
    }
    if !report.errors.is_empty() {
        return report;
    }

    for task in &input.tasks {
        let outcome = match task {
            TaskDef::Chi { group } => chi_task(group, &groups[group.as_str()]),
            TaskDef::Covers { group, k } => covers_task(group, &groups[group.as_str()], *k, limits),
            TaskDef::Verify { group, k_max } => {
                verify_task(group, &groups[group.as_str()], *k_max, limits)
            }
            TaskDef::Obstruct { g, h, mode } => obstruct_task(
                g,
                h,
                &groups[g.as_str()].presentation,
                &groups[h.as_str()].presentation,
                *mode,
            ),
            TaskDef::Witness { g, h, k_max } => witness_task(
                g,
                h,
                &groups[g.as_str()].presentation,
                &groups[h.as_str()].presentation,
                *k_max,
                limits,
            ),
            TaskDef::Symbolic { group, k, claimed } => {
                symbolic_task(group, &groups[group.as_str()].presentation, *k, claimed)
            }
        };
        report.push(task.name(), outcome);
    }
    report
}

/// Parses and runs a document; a parse failure yields a report carrying the
/// error and no input echo.
pub fn run_text(text: &str, limits: &Limits) -> ReportDocument {
    match parse_input(text) {
        Ok(doc) => run(&doc, limits),
        Err(e) => {
            let mut report = ReportDocument::new(None, None);
            report.errors.push(e);
            report
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::schema::group_def;
    use crate::notation::parse_presentation;

    fn doc(groups: &[(&str, &str)], tasks: Value) -> InputDocument {
        let groups: BTreeMap<String, _> = groups
            .iter()
            .map(|(n, t)| {
                (
                    n.to_string(),
                    group_def(&parse_presentation(t, 1000).unwrap()),
                )
            })
            .collect();
        let v = json!({ "schema": "gog-kit/1", "groups": groups, "tasks": tasks });
        serde_json::from_value(v).unwrap()
    }

    #[test]
    fn chi_of_c2_c3() {
        let d = doc(&[("G", "C2*C3")], json!([{ "task": "chi", "group": "G" }]));
        let r = run(&d, &Limits::default());
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"-1/6\""));
        assert_eq!(exit_code(&r), 0);
    }

    #[test]
    fn covers_of_c2_c2() {
        let d = doc(
            &[("G", "C2*C2")],
            json!([{ "task": "covers", "group": "G", "k": 2 }]),
        );
        let r = run(&d, &Limits::default());
        let out = r.results[0].output.as_ref().unwrap();
        assert_eq!(out["count"], 3);
        assert_eq!(r.results[0].status, Status::Ok);
        // 2 obs sums + multiplicativity + index identity + Kurosh + connectivity, per cover
        assert_eq!(r.summary.identities_checked, 3 * 6);
        assert_eq!(r.summary.identities_failed, 0);
        let mut forms: Vec<&str> = out["covers"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["kurosh"]["form"].as_str().unwrap())
            .collect();
        forms.sort();
        assert_eq!(forms, ["C2 * C2", "C2 * C2", "F1"]);
    }

    #[test]
    fn obstruct_theorem_mode() {
        let d = doc(
            &[("G", "[S2:-2]*[S2:-2]"), ("H", "[S3:-4]*[S3:-4]")],
            json!([{ "task": "obstruct", "g": "G", "h": "H", "mode": "theorem" }]),
        );
        let r = run(&d, &Limits::default());
        let out = r.results[0].output.as_ref().unwrap();
        assert_eq!(out["verdict"], "obstructed");
        assert_eq!(out["chi_g"], "-5");
        assert_eq!(out["chi_h"], "-9");
        assert_eq!(exit_code(&r), 0);
    }

    #[test]
    fn exit_codes() {
        let lim = Limits::default();
        let zero = doc(
            &[("G", "[A:0]*[A:0]")],
            json!([{ "task": "obstruct", "g": "G", "h": "G", "mode": "theorem" }]),
        );
        let r = run(&zero, &lim);
        assert_eq!(
            r.results[0].error.as_ref().unwrap().kind,
            ErrorKind::Hypothesis
        );
        assert_eq!(exit_code(&r), exit::INPUT_ERROR);

        let big = doc(
            &[("G", "C2*C2")],
            json!([{ "task": "covers", "group": "G", "k": 9 }]),
        );
        assert_eq!(exit_code(&run(&big, &lim)), exit::BOUND_EXCEEDED);

        let dangling = doc(&[("G", "C2*C2")], json!([{ "task": "chi", "group": "X" }]));
        let r = run(&dangling, &lim);
        assert_eq!(r.errors[0].path.as_deref(), Some("tasks[0].group"));
        assert!(r.results.is_empty());
        assert_eq!(exit_code(&r), exit::INPUT_ERROR);

        let r = run_text("{\"schema\": \"gog-kit/1\", \"tasks\": 3}", &lim);
        assert_eq!(r.errors[0].path.as_deref(), Some("tasks"));
        assert_eq!(exit_code(&r), exit::INPUT_ERROR);

        // bound beats input error
        let mixed = doc(
            &[("G", "C2*C2")],
            json!([{ "task": "covers", "group": "G", "k": 9 }, { "task": "verify", "group": "G", "k_max": 0 }]),
        );
        assert_eq!(exit_code(&run(&mixed, &lim)), exit::BOUND_EXCEEDED);
    }

    #[test]
    fn failed_identity_gives_exit_one() {
        let mut r = ReportDocument::new(None, None);
        r.push(
            "x",
            Ok((
                json!({}),
                Tally {
                    checked: 2,
                    passed: 1,
                },
            )),
        );
        assert_eq!(r.results[0].status, Status::Failed);
        assert_eq!(r.summary.identities_failed, 1);
        assert_eq!(exit_code(&r), exit::VERIFICATION_FAILED);
    }

    #[test]
    fn report_echo_round_trips() {
        let d = doc(
            &[("G", "C2*C3*F1"), ("H", "[S:-2]*[T:-1/2]")],
            json!([
                { "task": "verify", "group": "G", "k_max": 3 },
                { "task": "symbolic", "group": "H", "k": 2, "claimed": [[2], [1, 1]] },
                { "task": "witness", "g": "G", "h": "G", "k_max": 1 }
            ]),
        );
        let r = run(&d, &Limits::default());
        assert_eq!(exit_code(&r), 0, "{r:#?}");
        let text = serde_json::to_string_pretty(&r).unwrap();
        let back: ReportDocument = serde_json::from_str(&text).unwrap();
        let echoed = serde_json::to_string(&back.input.unwrap()).unwrap();
        assert_eq!(parse_input(&echoed).unwrap(), d);
    }

    #[test]
    fn deterministic_across_workers() {
        let d = doc(
            &[("G", "S3*C2"), ("H", "C2*C3")],
            json!([
                { "task": "covers", "group": "G", "k": 4 },
                { "task": "witness", "g": "G", "h": "H", "k_max": 3 }
            ]),
        );
        let a = run(
            &d,
            &Limits {
                workers: 1,
                ..Limits::default()
            },
        );
        let b = run(
            &d,
            &Limits {
                workers: 4,
                ..Limits::default()
            },
        );
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}
