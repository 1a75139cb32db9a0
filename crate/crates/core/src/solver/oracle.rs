//! Ground-truth engine: enumerate vertex subsets by increasing cardinality,
//! lexicographic within a cardinality, and return the first feasible one.
//! Optimality and the lexicographically minimal witness both fall out of the
//! enumeration order.

use std::time::Instant;

use crate::graph::{Graph, VertexSet};

use super::{Engine, InvariantKind, SearchStats, SolverError, SolverResult};

/// The oracle refuses anything larger; subset enumeration past this order is
/// not a sensible way to spend time.
pub const ORACLE_MAX_VERTICES: usize = 24;

pub fn oracle_solve(g: &Graph, kind: InvariantKind) -> Result<SolverResult, SolverError> {
    let n = g.order();
    if n > ORACLE_MAX_VERTICES {
        return Err(SolverError::OracleTooLarge {
            n,
            cap: ORACLE_MAX_VERTICES,
        });
    }
    let start = Instant::now();
    let mut nodes = 0u64;
    for k in 0..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            nodes += 1;
            let s: VertexSet = combo.iter().copied().collect();
            if kind.is_satisfied(g, s) {
                return Ok(SolverResult {
                    value: k,
                    witness: s,
                    stats: SearchStats {
                        nodes,
                        elapsed_ms: start.elapsed().as_millis() as u64,
                    },
                    engine: Engine::Oracle,
                });
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    // Only reachable for connected-domination on a disconnected graph; the
    // other invariants always accept the full vertex set.
    Err(SolverError::Infeasible { kind })
}

/// Advances `combo` to the next k-subset of `0..n` in lexicographic order;
/// false when exhausted.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] != i + n - k {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
