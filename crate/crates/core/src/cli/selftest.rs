use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::covers::enumerate_covers_up_to;
use crate::free_product::random_graph_of_groups;
use crate::iso::IsoClassifier;
use crate::notation::parse_presentation;
use crate::Limits;

use super::run::{aggregate, cover_error, ReportDocument, Tally};
use super::{ErrorKind, TaskError};

/// Built-in bases, in notation form.
pub const SELFTEST_BASES: [&str; 6] = ["C2*C2", "C2*C3", "C3*C3", "C2*C2*C2", "C2*C3*F1", "S3*C2"];

const ROUND_TRIP_SEED: u64 = 0x9e37_79b9_7f4a_7c15;
const ROUND_TRIPS: usize = 128;
const ROUND_TRIP_VERTICES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Standard,
    Extended,
}

impl Suite {
    pub fn k_max(self) -> usize {
        match self {
            Suite::Standard => 5,
            Suite::Extended => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Standard => "standard",
            Suite::Extended => "extended",
        }
    }
}

fn base_check(text: &str, k_max: usize, limits: &Limits) -> Result<(Value, Tally), TaskError> {
    let base = parse_presentation(text, limits.max_order)
        .map_err(|e| TaskError::new(ErrorKind::Bound, e.to_string()))?;
    let by_k = enumerate_covers_up_to(&base, k_max, limits).map_err(cover_error)?;
    let mut classifier = IsoClassifier::new();
    let (rows, tally, failures) = aggregate(&by_k, &mut classifier);
    let out = json!({
        "base": base.describe(),
        "chi_rho": base.chi_rho(),
        "k_max": k_max,
        "covers": rows.iter().map(|r| r.covers).sum::<usize>(),
        "per_index": rows,
        "identities": tally,
        "failures": failures,
    });
    Ok((out, tally))
}

/// Random graphs of groups must have the same `χ_ρ` as their normal forms,
/// and subdividing an edge must not change either.
fn round_trips() -> (Value, Tally) {
    let mut rng = ChaCha8Rng::seed_from_u64(ROUND_TRIP_SEED);
    let mut tally = Tally::default();
    let mut subdivision = Tally::default();
    let mut failures = Vec::new();
    for i in 0..ROUND_TRIPS {
        let gog = random_graph_of_groups(&mut rng, ROUND_TRIP_VERTICES);
        let direct = gog.chi_rho().ok();
        let normal = gog.normal_form().ok().map(|p| p.chi_rho());
        let ok = direct.is_some() && direct == normal;
        tally.record(ok);
        if !ok {
            failures.push(json!({ "sample": i, "direct": direct, "normal_form": normal }));
        }
        let first_edge = gog.graph().edges().next().map(|e| e.id.clone());
        if let Some(e) = first_edge {
            let sub = gog
                .subdivide(&e, "_mid")
                .ok()
                .and_then(|s| s.chi_rho().ok());
            subdivision.record(sub.is_some() && sub == direct);
        }
    }
    let mut all = tally;
    all.absorb(subdivision);
    let out = json!({
        "seed": ROUND_TRIP_SEED,
        "samples": ROUND_TRIPS,
        "max_vertices": ROUND_TRIP_VERTICES,
        "normal_form": tally,
        "subdivision": subdivision,
        "failures": failures,
    });
    (out, all)
}

/// Runs every identity over every cover of the built-in bases up to the
/// suite's index bound, then the random normal-form round trips.
pub fn selftest(suite: Suite, limits: &Limits) -> ReportDocument {
    let mut report = ReportDocument::new(None, Some(suite.name().to_owned()));
    for base in SELFTEST_BASES {
        report.push("base", base_check(base, suite.k_max(), limits));
    }
    report.push("normal_form_round_trip", Ok(round_trips()));
    report
}
