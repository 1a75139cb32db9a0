//! Executable checks over instance sweeps: build instances, predict, solve,
//! compare, and report. Conjecture hunts reuse the same machinery but treat
//! violations as findings (results to publish), not failures.
//!
//! Sweeps fan instances out over the current rayon pool; records are merged
//! by instance index, so the output is identical regardless of worker count.

mod catalog;
mod report;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use rayon::prelude::*;

use crate::graph::Graph;
use crate::solver::{bnb_solve, edge_cover_number, SolverError, DEFAULT_BUDGET};
use crate::transform::{line_graph, middle_graph};

pub use catalog::{
    connected_instances, plan, predict, stated_witness, CheckCase, CheckTask, HarnessError,
    Instance, Planned, Prediction, Quantity, TheoremId, WitnessCheck, WitnessInstance,
};
pub use report::{
    Certificate, ComputedValue, PredictionValue, Record, Relation, Report, Status, Summary,
};

#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    /// Cap on the source-graph order for every default range.
    pub max_n: usize,
    /// Per-instance solver budget.
    pub budget: Duration,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 6,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Runs one check's sweep and aggregates the records.
pub fn verify(theorem: TheoremId, cfg: &SweepConfig) -> Result<Report, HarnessError> {
    let planned = plan(theorem, cfg.max_n)?;
    let budget = cfg.budget;
    let outcomes: Vec<(Record, Option<Certificate>)> = planned
        .par_iter()
        .map(|item| match item {
            Planned::Skip { label, reason } => (Record::skip(label.clone(), reason.clone()), None),
            Planned::Case(case) => run_case(case, budget),
        })
        .collect();
    let mut records = Vec::with_capacity(outcomes.len());
    let mut certificates = Vec::new();
    for (record, certificate) in outcomes {
        records.push(record);
        certificates.extend(certificate);
    }
    Ok(Report::new(
        format!("{} {}", theorem.id(), theorem.title()),
        records,
        certificates,
    ))
}

fn eval_quantity(g: &Graph, q: Quantity, budget: Duration) -> Result<(usize, u64), SolverError> {
    match q.invariant() {
        Some(kind) => {
            let r = bnb_solve(g, kind, budget)?;
            Ok((r.value, r.stats.nodes))
        }
        None => Ok((edge_cover_number(g)?, 0)),
    }
}

fn run_case(case: &CheckCase, budget: Duration) -> (Record, Option<Certificate>) {
    let computed = match &case.task {
        CheckTask::Single { graph, quantity } => eval_quantity(graph, *quantity, budget)
            .map(|(v, nodes)| (ComputedValue::Value { value: v }, nodes)),
        CheckTask::Sum { graph, a, b } => eval_quantity(graph, *a, budget).and_then(|(x, nx)| {
            eval_quantity(graph, *b, budget)
                .map(|(y, ny)| (ComputedValue::Value { value: x + y }, nx + ny))
        }),
        CheckTask::Product { graph, a, b } => {
            eval_quantity(graph, *a, budget).and_then(|(x, nx)| {
                eval_quantity(graph, *b, budget)
                    .map(|(y, ny)| (ComputedValue::Value { value: x * y }, nx + ny))
            })
        }
        CheckTask::Pair { left, right } => {
            eval_quantity(&left.0, left.1, budget).and_then(|(x, nx)| {
                eval_quantity(&right.0, right.1, budget)
                    .map(|(y, ny)| (ComputedValue::Pair { left: x, right: y }, nx + ny))
            })
        }
    };
    let predicted = case.prediction.value;
    match computed {
        Err(SolverError::Timeout { lower, upper }) => (
            Record {
                label: case.label.clone(),
                predicted: Some(predicted),
                computed: None,
                status: Status::Timeout,
                nodes: 0,
                note: Some(format!("budget exhausted; bounds {lower}..={upper}")),
            },
            None,
        ),
        Err(e) => (
            Record {
                label: case.label.clone(),
                predicted: Some(predicted),
                computed: None,
                status: Status::Fail,
                nodes: 0,
                note: Some(e.to_string()),
            },
            None,
        ),
        Ok((value, nodes)) => {
            let mut pass = predicted.admits(&value);
            let mut notes = Vec::new();
            if let Some(w) = &case.witness {
                if w.holds() {
                    notes.push(format!("stated witness ok ({} vertices)", w.claimed));
                } else {
                    pass = false;
                    notes.push(format!(
                        "stated witness {{{}}} fails its predicate on {}",
                        w.describe_set(),
                        w.label
                    ));
                }
            }
            let status = if pass { Status::Pass } else { Status::Fail };
            let certificate = (!pass).then(|| Certificate {
                kind: "mismatch".into(),
                label: case.label.clone(),
                graph: case.source.clone(),
                witness: case.witness.as_ref().map(|w| w.set.to_vec()),
                note: format!("predicted {predicted}, computed {value}"),
            });
            (
                Record {
                    label: case.label.clone(),
                    predicted: Some(predicted),
                    computed: Some(value),
                    status,
                    nodes,
                    note: (!notes.is_empty()).then(|| notes.join("; ")),
                },
                certificate,
            )
        }
    }
}

/// The open questions the hunter sweeps for counterexamples.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConjectureId {
    /// gamma_tilde_c(G) < gamma_tilde_c(M(G)) for every graph of order >= 2.
    OuterStrictlyBelowMiddle,
    /// gamma_tilde_c(L(G)) <= gamma_tilde_c(M(G)).
    LineAtMostMiddle,
    /// Inventory of the equality cases gamma_tilde_c(L(G)) = gamma_tilde_c(M(G)).
    EqualityInventory,
}

impl ConjectureId {
    pub const ALL: [ConjectureId; 3] = [
        ConjectureId::OuterStrictlyBelowMiddle,
        ConjectureId::LineAtMostMiddle,
        ConjectureId::EqualityInventory,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            ConjectureId::OuterStrictlyBelowMiddle => "7.1",
            ConjectureId::LineAtMostMiddle => "7.6",
            ConjectureId::EqualityInventory => "7.5-inventory",
        }
    }

    pub fn title(&self) -> &'static str {
        match self {
            ConjectureId::OuterStrictlyBelowMiddle => "gamma_tilde_c(G) < gamma_tilde_c(M(G))",
            ConjectureId::LineAtMostMiddle => "gamma_tilde_c(L(G)) <= gamma_tilde_c(M(G))",
            ConjectureId::EqualityInventory => {
                "equality cases of gamma_tilde_c(L(G)) = gamma_tilde_c(M(G))"
            }
        }
    }
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ConjectureId {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, HarnessError> {
        ConjectureId::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| HarnessError::UnknownId(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct HuntConfig {
    /// Sweep every connected graph on 2..=exhaustive_n vertices.
    pub exhaustive_n: usize,
    pub budget: Duration,
}

impl Default for HuntConfig {
    fn default() -> Self {
        HuntConfig {
            exhaustive_n: 6,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Sweeps for counterexamples. Violations become findings with serialized
/// certificates; for the inventory, equality cases are certified instead.
pub fn hunt(conjecture: ConjectureId, cfg: &HuntConfig) -> Result<Report, HarnessError> {
    let mut instances = Vec::new();
    for n in 2..=cfg.exhaustive_n.min(crate::families::MAX_ENUMERATION_ORDER) {
        for (i, g) in connected_instances(n)?.iter().enumerate() {
            instances.push((format!("all_connected:{n}#{i}"), g.clone()));
        }
    }
    let budget = cfg.budget;
    let outcomes: Vec<(Record, Option<Certificate>)> = instances
        .par_iter()
        .map(|(label, g)| hunt_one(conjecture, label, g, budget))
        .collect();
    let mut records = Vec::with_capacity(outcomes.len());
    let mut certificates = Vec::new();
    for (record, certificate) in outcomes {
        records.push(record);
        certificates.extend(certificate);
    }
    Ok(Report::new(
        format!(
            "conjecture {} {} (n=2..{})",
            conjecture.id(),
            conjecture.title(),
            cfg.exhaustive_n
        ),
        records,
        certificates,
    ))
}

fn hunt_one(
    conjecture: ConjectureId,
    label: &str,
    g: &Graph,
    budget: Duration,
) -> (Record, Option<Certificate>) {
    let outcome = (|| -> Result<(usize, usize, u64), SolverError> {
        let mid = middle_graph(g)
            .expect("connected graph of order >= 2 has an edge")
            .graph;
        let (right, n1) = eval_quantity(&mid, Quantity::GammaTildeC, budget)?;
        let (left, n2) = match conjecture {
            ConjectureId::OuterStrictlyBelowMiddle => {
                eval_quantity(g, Quantity::GammaTildeC, budget)?
            }
            _ => {
                let line = line_graph(g)
                    .expect("connected graph of order >= 2 has an edge")
                    .graph;
                eval_quantity(&line, Quantity::GammaTildeC, budget)?
            }
        };
        Ok((left, right, n1 + n2))
    })();
    match outcome {
        Err(SolverError::Timeout { lower, upper }) => (
            Record {
                label: label.to_string(),
                predicted: None,
                computed: None,
                status: Status::Timeout,
                nodes: 0,
                note: Some(format!("budget exhausted; bounds {lower}..={upper}")),
            },
            None,
        ),
        Err(e) => (
            Record {
                label: label.to_string(),
                predicted: None,
                computed: None,
                status: Status::Fail,
                nodes: 0,
                note: Some(e.to_string()),
            },
            None,
        ),
        Ok((left, right, nodes)) => {
            let computed = ComputedValue::Pair { left, right };
            let (violated, note) = match conjecture {
                ConjectureId::OuterStrictlyBelowMiddle => (
                    left >= right,
                    format!("gamma_tilde_c(G) = {left}, gamma_tilde_c(M(G)) = {right}"),
                ),
                ConjectureId::LineAtMostMiddle | ConjectureId::EqualityInventory => (
                    left > right && conjecture == ConjectureId::LineAtMostMiddle,
                    format!("gamma_tilde_c(L(G)) = {left}, gamma_tilde_c(M(G)) = {right}"),
                ),
            };
            let equality = left == right && conjecture != ConjectureId::OuterStrictlyBelowMiddle;
            let certificate = if violated {
                Some(Certificate {
                    kind: "violation".into(),
                    label: label.to_string(),
                    graph: g.clone(),
                    witness: None,
                    note: note.clone(),
                })
            } else if equality {
                Some(Certificate {
                    kind: "equality".into(),
                    label: label.to_string(),
                    graph: g.clone(),
                    witness: None,
                    note: note.clone(),
                })
            } else {
                None
            };
            (
                Record {
                    label: label.to_string(),
                    predicted: None,
                    computed: Some(computed),
                    status: if violated {
                        Status::Finding
                    } else {
                        Status::Pass
                    },
                    nodes,
                    note: Some(note),
                },
                certificate,
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(max_n: usize) -> SweepConfig {
        SweepConfig {
            max_n,
            ..SweepConfig::default()
        }
    }

    #[test]
    fn verify_cycles_passes() {
        let report = verify(TheoremId::T4_8, &quick(7)).unwrap();
        assert!(report.all_passed(), "{}", report.to_markdown());
        assert_eq!(report.summary.instances, 5); // cycle:3..7
    }

    #[test]
    fn verify_characterization_small() {
        let report = verify(TheoremId::T4_6, &quick(5)).unwrap();
        assert!(report.all_passed(), "{}", report.to_markdown());
        assert_eq!(report.summary.instances, 6 + 21);
    }

    #[test]
    fn verify_wheel_equality_instance() {
        let report = verify(TheoremId::P7_4, &quick(6)).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.summary.instances, 2);
    }

    #[test]
    fn remaining_catalog_checks_pass_on_small_ranges() {
        // Everything not already pinned by a dedicated test or by the
        // acceptance suite; the friendship baseline is out of range at this
        // cap, so a clean pass is the expected outcome.
        let ids = [
            TheoremId::T2_1,
            TheoremId::T2_2,
            TheoremId::T2_3,
            TheoremId::T4_1,
            TheoremId::C4_2,
            TheoremId::C4_4,
            TheoremId::C4_5,
            TheoremId::T5_4,
            TheoremId::P7_2,
            TheoremId::P7_3,
            TheoremId::X7_OCDS,
        ];
        for id in ids {
            let max_n = if id == TheoremId::P7_3 { 6 } else { 4 };
            let report = verify(id, &quick(max_n)).unwrap();
            assert!(report.all_passed(), "{}:\n{}", id, report.to_markdown());
            assert!(report.summary.passed > 0, "{id} swept nothing");
        }
    }

    #[test]
    fn verify_bipartite_reports_the_known_mismatch() {
        // The catalogued value for complete_bipartite:2,2 contradicts the
        // cycle formula on the same graph; the computation settles it.
        let report = verify(TheoremId::T4_10, &quick(4)).unwrap();
        let bad: Vec<_> = report
            .records
            .iter()
            .filter(|r| r.status == Status::Fail)
            .map(|r| r.label.clone())
            .collect();
        assert_eq!(bad, vec!["complete_bipartite:2,2".to_string()]);
        assert!(!report.certificates.is_empty());
    }

    #[test]
    fn neither_inequality_between_connected_and_outer_holds_globally() {
        use crate::families::{make, random_tree, FamilySpec};
        use crate::solver::{bnb_solve, InvariantKind, DEFAULT_BUDGET};

        let both = |g: &Graph| {
            let m = middle_graph(g).unwrap().graph;
            (
                bnb_solve(&m, InvariantKind::ConnectedDomination, DEFAULT_BUDGET)
                    .unwrap()
                    .value,
                bnb_solve(&m, InvariantKind::OuterConnectedDomination, DEFAULT_BUDGET)
                    .unwrap()
                    .value,
            )
        };
        // Trees: connected domination of the middle graph sits strictly
        // below the outer-connected value.
        for n in [3usize, 5, 7] {
            let (c, o) = both(&random_tree(n, 11));
            assert!(c < o, "tree n={n}: {c} vs {o}");
        }
        // Cycles: the two agree.
        for n in 4..=7 {
            let (c, o) = both(&make(&FamilySpec::Cycle(n)).unwrap());
            assert_eq!(c, o, "cycle n={n}");
        }
        // Complete graphs from order 4 on: the outer value drops below.
        for n in 4..=6 {
            let (c, o) = both(&make(&FamilySpec::Complete(n)).unwrap());
            assert!(o < c, "complete n={n}: {o} vs {c}");
        }
    }

    #[test]
    fn hunt_small_sweeps_are_clean() {
        let cfg = HuntConfig {
            exhaustive_n: 4,
            ..HuntConfig::default()
        };
        let strict = hunt(ConjectureId::OuterStrictlyBelowMiddle, &cfg).unwrap();
        assert_eq!(strict.summary.findings, 0, "{}", strict.to_markdown());

        let line = hunt(ConjectureId::LineAtMostMiddle, &cfg).unwrap();
        assert_eq!(line.summary.findings, 0);
        // The order-4 wheel (the complete graph on four vertices) is an
        // equality case and must be inventoried.
        assert!(line.certificates.iter().any(|c| c.kind == "equality"));

        let inventory = hunt(ConjectureId::EqualityInventory, &cfg).unwrap();
        assert_eq!(inventory.summary.findings, 0);
        assert_eq!(
            inventory
                .certificates
                .iter()
                .filter(|c| c.kind == "equality")
                .count(),
            1
        );
    }
}
