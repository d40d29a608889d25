//! The `gog-kit/1` input document and its resolution into library values.
//!
//! The document types mirror the JSON exactly (rationals stay strings,
//! permutations stay 1-based arrays) so a report can echo its input
//! verbatim.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::commensurability::Mode;
use crate::free_product::{Factor, FactorKind, GraphOfGroups, Presentation, VertexGroup};
use crate::graph::{Edge, Graph};
use crate::perm::{FinitePermGroup, PermError, Permutation};
use crate::rational::Rational;
use crate::Limits;

use super::{ErrorKind, TaskError};

pub const INPUT_SCHEMA: &str = "gog-kit/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub schema: String,
    #[serde(default)]
    pub groups: BTreeMap<String, GroupDef>,
    #[serde(default)]
    pub tasks: Vec<TaskDef>,
}

/// Either a presentation (`factors` + `free_rank`) or a graph of groups
/// (`graph` + `vertex_groups`).
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDef {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<FactorDef>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub free_rank: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphDef>,
    /// `null` marks a trivial vertex group.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_groups: Option<BTreeMap<String, Option<FactorDef>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDef {
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorKindDef {
    Abstract,
    Finite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorDef {
    pub kind: FactorKindDef,
    pub name: String,
    /// `"numerator/denominator"`; abstract factors only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    /// 1-based image sequences; finite factors only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one_ended_asserted: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "task", rename_all = "snake_case", deny_unknown_fields)]
pub enum TaskDef {
    Chi {
        group: String,
    },
    Covers {
        group: String,
        k: usize,
    },
    Verify {
        group: String,
        k_max: usize,
    },
    Obstruct {
        g: String,
        h: String,
        mode: Mode,
    },
    Witness {
        g: String,
        h: String,
        k_max: usize,
    },
    Symbolic {
        group: String,
        k: u64,
        claimed: Vec<Vec<u64>>,
    },
}

impl TaskDef {
    pub fn name(&self) -> &'static str {
        match self {
            TaskDef::Chi { .. } => "chi",
            TaskDef::Covers { .. } => "covers",
            TaskDef::Verify { .. } => "verify",
            TaskDef::Obstruct { .. } => "obstruct",
            TaskDef::Witness { .. } => "witness",
            TaskDef::Symbolic { .. } => "symbolic",
        }
    }
}

/// Parses a document, reporting the JSON path of the first schema violation.
pub fn parse_input(text: &str) -> Result<InputDocument, TaskError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let doc: InputDocument = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        TaskError::at(ErrorKind::Input, path, e.into_inner().to_string())
    })?;
    if doc.schema != INPUT_SCHEMA {
        return Err(TaskError::at(
            ErrorKind::Input,
            "schema",
            format!(
                "unsupported schema {:?}, expected {INPUT_SCHEMA:?}",
                doc.schema
            ),
        ));
    }
    Ok(doc)
}

/// A group definition turned into library values.
#[derive(Debug, Clone)]
pub struct ResolvedGroup {
    pub presentation: Presentation,
    pub graph_of_groups: Option<GraphOfGroups>,
}

fn perm_kind(e: &PermError) -> ErrorKind {
    match e {
        PermError::OrderBound(_) | PermError::DegreeBound { .. } => ErrorKind::Bound,
        _ => ErrorKind::Input,
    }
}

pub fn resolve_factor(def: &FactorDef, path: &str, limits: &Limits) -> Result<Factor, TaskError> {
    let input =
        |field: &str, msg: String| TaskError::at(ErrorKind::Input, format!("{path}.{field}"), msg);
    match def.kind {
        FactorKindDef::Abstract => {
            if def.generators.is_some() || def.degree.is_some() {
                return Err(input(
                    "generators",
                    "abstract factors take no generators".into(),
                ));
            }
            let rho = def
                .rho
                .as_deref()
                .ok_or_else(|| input("rho", "abstract factors need rho".into()))?;
            let rho: Rational = rho
                .parse()
                .map_err(|e: crate::rational::ParseRationalError| input("rho", e.to_string()))?;
            Ok(Factor::new_abstract(
                &def.name,
                rho,
                def.one_ended_asserted.unwrap_or(false),
            ))
        }
        FactorKindDef::Finite => {
            if def.rho.is_some() || def.one_ended_asserted.is_some() {
                return Err(input(
                    "rho",
                    "finite factors take ρ = 1/|G| and no one-endedness".into(),
                ));
            }
            let gens = def
                .generators
                .as_ref()
                .filter(|g| !g.is_empty())
                .ok_or_else(|| {
                    input(
                        "generators",
                        "finite factors need at least one generator".into(),
                    )
                })?;
            let mut perms = Vec::with_capacity(gens.len());
            for (i, images) in gens.iter().enumerate() {
                if let Some(d) = def.degree {
                    if images.len() != d {
                        return Err(input(
                            &format!("generators[{i}]"),
                            format!("has {} images, degree is {d}", images.len()),
                        ));
                    }
                }
                let p = Permutation::from_one_based(images)
                    .map_err(|e| input(&format!("generators[{i}]"), e.to_string()))?;
                perms.push(p);
            }
            let group = FinitePermGroup::closure(perms, limits.max_order).map_err(|e| {
                TaskError::at(perm_kind(&e), format!("{path}.generators"), e.to_string())
            })?;
            Ok(Factor::finite(&def.name, group))
        }
    }
}

pub fn resolve_group(
    name: &str,
    def: &GroupDef,
    limits: &Limits,
) -> Result<ResolvedGroup, TaskError> {
    let path = format!("groups.{name}");
    let input =
        |field: &str, msg: String| TaskError::at(ErrorKind::Input, format!("{path}{field}"), msg);
    match (&def.factors, &def.graph) {
        (Some(factors), None) => {
            if def.vertex_groups.is_some() {
                return Err(input(
                    ".vertex_groups",
                    "only allowed together with graph".into(),
                ));
            }
            let factors = factors
                .iter()
                .enumerate()
                .map(|(i, f)| resolve_factor(f, &format!("{path}.factors[{i}]"), limits))
                .collect::<Result<Vec<_>, _>>()?;
            let presentation = Presentation::new(factors, def.free_rank.unwrap_or(0))
                .map_err(|e| input(".factors", e.to_string()))?;
            Ok(ResolvedGroup {
                presentation,
                graph_of_groups: None,
            })
        }
        (None, Some(graph)) => {
            if def.free_rank.is_some() {
                return Err(input(".free_rank", "free rank comes from the graph".into()));
            }
            let g = Graph::from_parts(graph.vertices.iter().cloned(), graph.edges.iter().cloned());
            g.validate().map_err(|v| input(".graph", v.to_string()))?;
            let mut assignment = BTreeMap::new();
            for (v, f) in def.vertex_groups.iter().flatten() {
                let group = match f {
                    None => VertexGroup::Trivial,
                    Some(f) => VertexGroup::Factor(resolve_factor(
                        f,
                        &format!("{path}.vertex_groups.{v}"),
                        limits,
                    )?),
                };
                assignment.insert(v.clone(), group);
            }
            let gog = GraphOfGroups::new(g, assignment)
                .map_err(|e| input(".vertex_groups", e.to_string()))?;
            let presentation = gog
                .normal_form()
                .map_err(|e| input(".graph", e.to_string()))?;
            Ok(ResolvedGroup {
                presentation,
                graph_of_groups: Some(gog),
            })
        }
        _ => Err(input(
            "",
            "give either factors/free_rank or graph/vertex_groups".into(),
        )),
    }
}

/// The document form of a presentation.
pub fn group_def(p: &Presentation) -> GroupDef {
    let factors = p
        .factors()
        .iter()
        .map(|f| match &f.kind {
            FactorKind::Abstract {
                rho,
                one_ended_asserted,
            } => FactorDef {
                kind: FactorKindDef::Abstract,
                name: f.name.clone(),
                rho: Some(rho.to_string()),
                degree: None,
                generators: None,
                one_ended_asserted: Some(*one_ended_asserted),
            },
            FactorKind::Finite(g) => FactorDef {
                kind: FactorKindDef::Finite,
                name: f.name.clone(),
                rho: None,
                degree: Some(g.degree()),
                generators: Some(
                    g.generators()
                        .iter()
                        .map(Permutation::to_one_based)
                        .collect(),
                ),
                one_ended_asserted: None,
            },
        })
        .collect();
    GroupDef {
        factors: Some(factors),
        free_rank: Some(p.free_rank()),
        graph: None,
        vertex_groups: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const DOC: &str = r#"{
        "schema": "gog-kit/1",
        "groups": {
            "G": {"factors": [
                {"kind": "finite", "name": "C2", "degree": 2, "generators": [[2, 1]]},
                {"kind": "finite", "name": "C3", "generators": [[2, 3, 1]]}
            ], "free_rank": 0},
            "S": {"factors": [
                {"kind": "abstract", "name": "Sigma2", "rho": "-2", "one_ended_asserted": true},
                {"kind": "abstract", "name": "Sigma2", "rho": "-2", "one_ended_asserted": true}
            ]},
            "T": {"graph": {"vertices": ["a"], "edges": [
                    {"id": "l", "initial": "a", "terminal": "a", "partner": "m"},
                    {"id": "m", "initial": "a", "terminal": "a", "partner": "l"}
                 ]},
                 "vertex_groups": {"a": {"kind": "finite", "name": "C2", "generators": [[2, 1]]}}}
        },
        "tasks": [
            {"task": "chi", "group": "G"},
            {"task": "obstruct", "g": "S", "h": "S", "mode": "theorem"},
            {"task": "symbolic", "group": "S", "k": 3, "claimed": [[1, 2], [3]]}
        ]
    }"#;

    #[test]
    fn parses_and_resolves() {
        let doc = parse_input(DOC).unwrap();
        assert_eq!(doc.tasks.len(), 3);
        let lim = Limits::default();
        let g = resolve_group("G", &doc.groups["G"], &lim).unwrap();
        assert_eq!(g.presentation.chi_rho(), Rational::new(-1, 6));
        let t = resolve_group("T", &doc.groups["T"], &lim).unwrap();
        assert_eq!(t.presentation.free_rank(), 1);
        assert!(t.graph_of_groups.is_some());
    }

    #[test]
    fn echo_round_trips() {
        let doc = parse_input(DOC).unwrap();
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(parse_input(&text).unwrap(), doc);
    }

    #[test]
    fn schema_errors_carry_paths() {
        let bad = DOC.replace(
            r#""rho": "-2", "one_ended_asserted": true},"#,
            r#""rho": -2},"#,
        );
        let err = parse_input(&bad).unwrap_err();
        assert_eq!(err.kind, ErrorKind::Input);
        assert_eq!(err.path.as_deref(), Some("groups.S.factors[0].rho"));

        let err = parse_input(&DOC.replace("gog-kit/1", "gog-kit/9")).unwrap_err();
        assert_eq!(err.path.as_deref(), Some("schema"));

        let err = parse_input(&DOC.replace(r#""task": "chi""#, r#""task": "chai""#)).unwrap_err();
        assert_eq!(err.kind, ErrorKind::Input);
    }

    #[test]
    fn resolution_errors_carry_paths() {
        let lim = Limits::default();
        let doc = parse_input(&DOC.replace("[2, 3, 1]", "[2, 2, 1]")).unwrap();
        let err = resolve_group("G", &doc.groups["G"], &lim).unwrap_err();
        assert_eq!(
            err.path.as_deref(),
            Some("groups.G.factors[1].generators[0]")
        );

        let doc = parse_input(&DOC.replace(
            r#""degree": 2, "generators": [[2, 1]]"#,
            r#""degree": 3, "generators": [[2, 1]]"#,
        ))
        .unwrap();
        assert!(resolve_group("G", &doc.groups["G"], &lim).is_err());

        let tight = Limits {
            max_order: 2,
            ..lim
        };
        let doc = parse_input(DOC).unwrap();
        let err = resolve_group("G", &doc.groups["G"], &tight).unwrap_err();
        assert_eq!(err.kind, ErrorKind::Bound);

        let clash = DOC.replacen(r#""rho": "-2""#, r#""rho": "-3""#, 1);
        let doc = parse_input(&clash).unwrap();
        assert!(resolve_group("S", &doc.groups["S"], &lim)
            .unwrap_err()
            .message
            .contains("two different groups"));
    }

    #[test]
    fn group_def_round_trip() {
        let lim = Limits::default();
        let doc = parse_input(DOC).unwrap();
        for name in ["G", "S"] {
            let p = resolve_group(name, &doc.groups[name], &lim)
                .unwrap()
                .presentation;
            let again = resolve_group(name, &group_def(&p), &lim)
                .unwrap()
                .presentation;
            assert_eq!(again, p);
        }
    }
}
