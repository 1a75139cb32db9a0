//! Branch-and-bound engine.
//!
//! The search keeps three vertex pools: `chosen` (in the solution),
//! `excluded` (never in the solution), `undecided` (everything else). It
//! branches on an undominated vertex with the fewest remaining dominators,
//! trying each candidate in ascending order and excluding it for later
//! branches, so no subset is visited twice.
//!
//! Pruning:
//! - size bound: `|chosen| + max(ceil(uncovered / maxN), packing) >= limit`,
//!   where `packing` greedily counts uncovered vertices whose remaining
//!   dominator pools are pairwise disjoint; each needs its own new vertex.
//! - connected domination: prune when the chosen components cannot all meet
//!   inside `chosen ∪ undecided`; once dominated but disconnected, branch on
//!   undecided neighbors of one component;
//! - outer-connected domination: prune when two excluded vertices sit in
//!   different components of the graph on `excluded ∪ undecided` (removing
//!   vertices never reconnects them). Once dominated, the cheapest feasible
//!   completion is computed directly: keep the component of the outside
//!   region that contains all excluded vertices (the largest component when
//!   nothing is excluded yet) and absorb the rest.
//!
//! After the optimal value is proved, the lexicographically minimal witness
//! is rebuilt by prefix-feasibility probes: include each vertex in turn if a
//! feasible optimum extending the prefix still exists.

use std::time::{Duration, Instant};

use crate::graph::{Graph, VertexSet};

use super::{Engine, InvariantKind, SearchStats, SolverError, SolverResult};

struct TimedOut;

struct Search<'g> {
    g: &'g Graph,
    kind: InvariantKind,
    deadline: Instant,
    full: VertexSet,
    closed: Vec<VertexSet>,
    max_closed: usize,
    nodes: u64,
    best_value: usize,
    best_witness: Option<VertexSet>,
    /// Decision mode: accept any feasible set of at most this size and stop.
    target: Option<usize>,
    found: Option<VertexSet>,
    scratch: Vec<(usize, usize)>,
}

pub fn bnb_solve(
    g: &Graph,
    kind: InvariantKind,
    budget: Duration,
) -> Result<SolverResult, SolverError> {
    assert!(budget > Duration::ZERO, "budget must be positive");
    let start = Instant::now();
    let n = g.order();
    let closed: Vec<VertexSet> = (0..n).map(|v| g.closed_neighborhood(v)).collect();
    let max_closed = closed.iter().map(VertexSet::len).max().unwrap_or(1);
    let mut search = Search {
        g,
        kind,
        deadline: start + budget,
        full: g.vertex_set(),
        closed,
        max_closed,
        nodes: 0,
        best_value: usize::MAX,
        best_witness: None,
        target: None,
        found: None,
        scratch: Vec::with_capacity(n),
    };
    if let Some(seed) = greedy_seed(g, kind) {
        debug_assert!(kind.is_satisfied(g, seed));
        search.best_value = seed.len();
        search.best_witness = Some(seed);
    }
    let root_lb = search.root_lower_bound();
    if search
        .dfs(VertexSet::EMPTY, VertexSet::EMPTY, VertexSet::EMPTY)
        .is_err()
    {
        return Err(SolverError::Timeout {
            lower: root_lb,
            upper: search.best_value.min(n),
        });
    }
    if search.best_witness.is_none() {
        return Err(SolverError::Infeasible { kind });
    }
    let value = search.best_value;
    let witness = match search.lexmin_witness(value) {
        Ok(w) => w,
        Err(TimedOut) => {
            return Err(SolverError::Timeout {
                lower: value,
                upper: value,
            })
        }
    };
    debug_assert!(kind.is_satisfied(g, witness));
    Ok(SolverResult {
        value,
        witness,
        stats: SearchStats {
            nodes: search.nodes,
            elapsed_ms: start.elapsed().as_millis() as u64,
        },
        engine: Engine::BranchAndBound,
    })
}

impl<'g> Search<'g> {
    /// Completions must be strictly better than the incumbent, or within the
    /// decision target.
    fn limit(&self) -> usize {
        match self.target {
            Some(t) => t + 1,
            None => self.best_value,
        }
    }

    fn offer(&mut self, s: VertexSet) {
        match self.target {
            Some(t) => {
                if s.len() <= t && self.found.is_none() {
                    self.found = Some(s);
                }
            }
            None => {
                if s.len() < self.best_value {
                    self.best_value = s.len();
                    self.best_witness = Some(s);
                }
            }
        }
    }

    fn reachable(&self, start: usize, allowed: VertexSet) -> VertexSet {
        let mut visited = VertexSet::singleton(start);
        let mut frontier = visited;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next |= self.g.neighbors(v);
            }
            frontier = (next & allowed) - visited;
            visited |= frontier;
        }
        visited
    }

    fn dfs(
        &mut self,
        chosen: VertexSet,
        excluded: VertexSet,
        dominated: VertexSet,
    ) -> Result<(), TimedOut> {
        self.nodes += 1;
        if self.nodes & 0xFF == 0 && Instant::now() >= self.deadline {
            return Err(TimedOut);
        }
        if self.found.is_some() || chosen.len() >= self.limit() {
            return Ok(());
        }
        let undecided = self.full - chosen - excluded;
        let uncovered = self.full - dominated;

        match self.kind {
            InvariantKind::ConnectedDomination => {
                if let Some(v) = chosen.min_vertex() {
                    let reach = self.reachable(v, chosen | undecided);
                    if !chosen.is_subset_of(&reach) {
                        return Ok(());
                    }
                }
            }
            InvariantKind::OuterConnectedDomination => {
                if excluded.len() >= 2 {
                    let outside = excluded | undecided;
                    for x in excluded.iter() {
                        if !self
                            .g
                            .neighbors(x)
                            .intersects(&(outside - VertexSet::singleton(x)))
                        {
                            return Ok(());
                        }
                    }
                    let reach = self.reachable(excluded.min_vertex().unwrap(), outside);
                    if !excluded.is_subset_of(&reach) {
                        return Ok(());
                    }
                }
            }
            InvariantKind::Domination => {}
        }

        if uncovered.is_empty() {
            match self.kind {
                InvariantKind::Domination => self.offer(chosen),
                InvariantKind::ConnectedDomination => {
                    if self.g.is_connected_within(chosen) {
                        self.offer(chosen);
                    } else {
                        return self.branch_to_merge(chosen, excluded, dominated, undecided);
                    }
                }
                InvariantKind::OuterConnectedDomination => {
                    self.close_outer(chosen, excluded, undecided);
                }
            }
            return Ok(());
        }

        // Branch vertex and lower bounds in one pass over uncovered vertices.
        self.scratch.clear();
        let mut branch_on = usize::MAX;
        let mut fewest = usize::MAX;
        for u in uncovered.iter() {
            let options = (self.closed[u] & undecided).len();
            if options == 0 {
                return Ok(());
            }
            if options < fewest {
                fewest = options;
                branch_on = u;
            }
            self.scratch.push((options, u));
        }
        self.scratch.sort_unstable();
        let mut packing = 0usize;
        let mut taken = VertexSet::EMPTY;
        for i in 0..self.scratch.len() {
            let u = self.scratch[i].1;
            let pool = self.closed[u] & undecided;
            if !pool.intersects(&taken) {
                packing += 1;
                taken |= pool;
            }
        }
        let extra = packing.max(uncovered.len().div_ceil(self.max_closed));
        if chosen.len() + extra >= self.limit() {
            return Ok(());
        }
        let cands = self.closed[branch_on] & undecided;
        self.branch(cands, chosen, excluded, dominated)
    }

    /// Dominated but disconnected: any feasible extension must pick up an
    /// undecided neighbor of the component holding the smallest chosen
    /// vertex.
    fn branch_to_merge(
        &mut self,
        chosen: VertexSet,
        excluded: VertexSet,
        dominated: VertexSet,
        undecided: VertexSet,
    ) -> Result<(), TimedOut> {
        let comp = self.reachable(chosen.min_vertex().unwrap(), chosen);
        let mut around = VertexSet::EMPTY;
        for v in comp.iter() {
            around |= self.g.neighbors(v);
        }
        let cands = (around - comp) & undecided;
        self.branch(cands, chosen, excluded, dominated)
    }

    /// Dominated: the optimal outer-connected completion keeps exactly one
    /// component of the outside region and absorbs every other undecided
    /// vertex into the solution.
    fn close_outer(&mut self, chosen: VertexSet, excluded: VertexSet, undecided: VertexSet) {
        let outside = excluded | undecided;
        if outside.is_empty() {
            self.offer(chosen);
            return;
        }
        let keep = if let Some(x) = excluded.min_vertex() {
            let comp = self.reachable(x, outside);
            if !excluded.is_subset_of(&comp) {
                return;
            }
            comp
        } else {
            let mut rest = outside;
            let mut largest = VertexSet::EMPTY;
            while let Some(v) = rest.min_vertex() {
                let comp = self.reachable(v, outside);
                if comp.len() > largest.len() {
                    largest = comp;
                }
                rest = rest - comp;
            }
            largest
        };
        self.offer(chosen | (undecided - keep));
    }

    fn branch(
        &mut self,
        cands: VertexSet,
        chosen: VertexSet,
        excluded: VertexSet,
        dominated: VertexSet,
    ) -> Result<(), TimedOut> {
        let mut exc = excluded;
        for u in cands.iter() {
            self.dfs(chosen.with(u), exc, dominated | self.closed[u])?;
            if self.found.is_some() {
                return Ok(());
            }
            exc.insert(u);
        }
        Ok(())
    }

    fn root_lower_bound(&mut self) -> usize {
        let n = self.g.order();
        self.scratch.clear();
        for u in 0..n {
            self.scratch.push((self.closed[u].len(), u));
        }
        self.scratch.sort_unstable();
        let mut packing = 0usize;
        let mut taken = VertexSet::EMPTY;
        for i in 0..self.scratch.len() {
            let pool = self.closed[self.scratch[i].1];
            if !pool.intersects(&taken) {
                packing += 1;
                taken |= pool;
            }
        }
        packing.max(n.div_ceil(self.max_closed))
    }

    /// Any feasible set of size at most `target` extending the prefix?
    fn decision(
        &mut self,
        forced_in: VertexSet,
        forced_out: VertexSet,
        target: usize,
    ) -> Result<bool, TimedOut> {
        self.target = Some(target);
        self.found = None;
        let mut dominated = VertexSet::EMPTY;
        for v in forced_in.iter() {
            dominated |= self.closed[v];
        }
        self.dfs(forced_in, forced_out, dominated)?;
        Ok(self.found.is_some())
    }

    /// Greedy prefix construction of the lexicographically minimal optimum:
    /// vertex u joins exactly when some optimum extends the prefix with it.
    fn lexmin_witness(&mut self, target: usize) -> Result<VertexSet, TimedOut> {
        let mut chosen = VertexSet::EMPTY;
        let mut excluded = VertexSet::EMPTY;
        for u in 0..self.g.order() {
            if chosen.len() == target {
                break;
            }
            if self.decision(chosen.with(u), excluded, target)? {
                chosen.insert(u);
            } else {
                excluded.insert(u);
            }
        }
        assert_eq!(chosen.len(), target, "optimal value admits a witness");
        Ok(chosen)
    }
}

fn greedy_dominating(g: &Graph) -> VertexSet {
    let full = g.vertex_set();
    let mut chosen = VertexSet::EMPTY;
    let mut covered = VertexSet::EMPTY;
    while covered != full {
        let mut pick = 0;
        let mut gain = 0;
        for u in 0..g.order() {
            let new = (g.closed_neighborhood(u) - covered).len();
            if new > gain {
                gain = new;
                pick = u;
            }
        }
        chosen.insert(pick);
        covered |= g.closed_neighborhood(pick);
    }
    chosen
}

/// A cheap feasible set to open the search with; `None` when none exists
/// (connected domination of a disconnected graph).
fn greedy_seed(g: &Graph, kind: InvariantKind) -> Option<VertexSet> {
    let n = g.order();
    match kind {
        InvariantKind::Domination => Some(greedy_dominating(g)),
        InvariantKind::ConnectedDomination => {
            if n == 1 {
                return Some(VertexSet::singleton(0));
            }
            if !g.is_connected() {
                return None;
            }
            // Internal vertices of the breadth-first tree from vertex 0:
            // connected (parents of internal vertices are internal) and
            // dominating (every leaf hangs off its parent).
            let mut parent = vec![usize::MAX; n];
            let mut queue = std::collections::VecDeque::from([0usize]);
            let mut seen = VertexSet::singleton(0);
            while let Some(v) = queue.pop_front() {
                for u in g.neighbors(v).iter() {
                    if !seen.contains(u) {
                        seen.insert(u);
                        parent[u] = v;
                        queue.push_back(u);
                    }
                }
            }
            let internal: VertexSet = (1..n).map(|v| parent[v]).collect();
            Some(internal)
        }
        InvariantKind::OuterConnectedDomination => {
            let greedy = greedy_dominating(g);
            if g.is_outer_connected_dominating(greedy) {
                return Some(greedy);
            }
            let full = g.vertex_set();
            for v in 0..n {
                let s = full - VertexSet::singleton(v);
                if g.is_outer_connected_dominating(s) {
                    return Some(s);
                }
            }
            Some(full)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make, FamilySpec};
    use crate::solver::DEFAULT_BUDGET;
    use crate::transform::middle_graph;

    fn middle(spec: FamilySpec) -> Graph {
        middle_graph(&make(&spec).unwrap()).unwrap().graph
    }

    #[test]
    fn middle_of_c9_outer_connected() {
        let m = middle(FamilySpec::Cycle(9));
        let r = bnb_solve(&m, InvariantKind::OuterConnectedDomination, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.value, 8);
    }

    #[test]
    fn middle_of_k6_outer_connected() {
        let m = middle(FamilySpec::Complete(6));
        let r = bnb_solve(&m, InvariantKind::OuterConnectedDomination, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.value, 3);
    }

    #[test]
    fn middle_of_k6_connected_domination() {
        let m = middle(FamilySpec::Complete(6));
        let r = bnb_solve(&m, InvariantKind::ConnectedDomination, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.value, 5);
    }

    #[test]
    fn witness_is_lexicographically_minimal() {
        // On C5 every single vertex pair of adjacent vertices attains the
        // domination number 2; the witness must be the first one.
        let g = make(&FamilySpec::Cycle(5)).unwrap();
        let r = bnb_solve(&g, InvariantKind::Domination, DEFAULT_BUDGET).unwrap();
        let oracle = crate::solver::oracle_solve(&g, InvariantKind::Domination).unwrap();
        assert_eq!(r.witness, oracle.witness);
    }

    #[test]
    fn disconnected_connected_domination_reports_infeasible() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            bnb_solve(&g, InvariantKind::ConnectedDomination, DEFAULT_BUDGET),
            Err(SolverError::Infeasible {
                kind: InvariantKind::ConnectedDomination
            })
        );
    }

    #[test]
    fn tiny_budget_times_out_with_bounds() {
        let m = middle(FamilySpec::Complete(8));
        let r = bnb_solve(
            &m,
            InvariantKind::OuterConnectedDomination,
            Duration::from_nanos(1),
        );
        match r {
            Err(SolverError::Timeout { lower, upper }) => {
                assert!(lower <= upper);
                assert!(upper <= m.order());
            }
            other => panic!("expected timeout, got {other:?}"),
        }
    }

    #[test]
    fn greedy_seeds_are_feasible() {
        for spec in [
            FamilySpec::Path(7),
            FamilySpec::Cycle(6),
            FamilySpec::Wheel(6),
            FamilySpec::Complete(5),
            FamilySpec::Friendship(3),
        ] {
            let g = make(&spec).unwrap();
            for kind in InvariantKind::ALL {
                let seed = greedy_seed(&g, kind).unwrap();
                assert!(kind.is_satisfied(&g, seed), "{kind} seed on {spec}");
            }
        }
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new(1, &[]).unwrap();
        for kind in InvariantKind::ALL {
            let r = bnb_solve(&g, kind, DEFAULT_BUDGET).unwrap();
            assert_eq!((r.value, r.witness), (1, VertexSet::singleton(0)));
        }
    }
}
