//! Maximum matching in general graphs via augmenting search with blossom
//! contraction, and the edge cover number derived from it: for a graph with
//! no isolated vertex, minimum edge cover size = n - maximum matching size
//! (grow each unmatched vertex's cover edge from a matched neighbor).

use std::collections::VecDeque;

use crate::graph::Graph;

use super::SolverError;

/// Maximum-cardinality matching, as canonical `(i, j)` pairs with `i < j`,
/// sorted. The result is certified: after the search, no augmenting path
/// remains from any unmatched vertex.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut base: Vec<usize> = (0..n).collect();
    for v in 0..n {
        if mate[v].is_none() {
            if let Some(end) = find_augmenting_path(g, &mate, &mut parent, &mut base, v) {
                augment(&mut mate, &parent, end);
            }
        }
    }
    for v in 0..n {
        assert!(
            mate[v].is_some()
                || find_augmenting_path(g, &mate, &mut parent, &mut base, v).is_none(),
            "matching left an augmenting path"
        );
    }
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .filter_map(|v| mate[v].filter(|&u| v < u).map(|u| (v, u)))
        .collect();
    pairs.sort_unstable();
    pairs
}

/// Minimum number of edges touching every vertex.
pub fn edge_cover_number(g: &Graph) -> Result<usize, SolverError> {
    if g.order() < 2 {
        return Err(SolverError::TooSmallForCover);
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(SolverError::IsolatedVertex(v));
    }
    Ok(g.order() - maximum_matching(g).len())
}

/// BFS for an augmenting path from `start`, contracting blossoms in place
/// through the `base` array. Returns the free endpoint when one is found.
fn find_augmenting_path(
    g: &Graph,
    mate: &[Option<usize>],
    parent: &mut [Option<usize>],
    base: &mut [usize],
    start: usize,
) -> Option<usize> {
    let n = g.order();
    parent.fill(None);
    for (v, b) in base.iter_mut().enumerate() {
        *b = v;
    }
    let mut used = vec![false; n];
    used[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for to in g.neighbors(v).iter() {
            if base[v] == base[to] || mate[v] == Some(to) {
                continue;
            }
            if to == start || mate[to].is_some_and(|m| parent[m].is_some()) {
                // Odd cycle: contract the blossom rooted at the common base.
                let root = blossom_base(v, to, mate, parent, base);
                let mut in_blossom = vec![false; n];
                mark_path(v, root, Some(to), mate, parent, base, &mut in_blossom);
                mark_path(to, root, Some(v), mate, parent, base, &mut in_blossom);
                for i in 0..n {
                    if in_blossom[base[i]] {
                        base[i] = root;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to].is_none() {
                parent[to] = Some(v);
                match mate[to] {
                    None => return Some(to),
                    Some(m) => {
                        used[m] = true;
                        queue.push_back(m);
                    }
                }
            }
        }
    }
    None
}

/// Common base of the alternating-tree paths through `v` and `w`.
fn blossom_base(
    v: usize,
    w: usize,
    mate: &[Option<usize>],
    parent: &[Option<usize>],
    base: &[usize],
) -> usize {
    let mut on_path = vec![false; base.len()];
    let mut x = v;
    loop {
        x = base[x];
        on_path[x] = true;
        match mate[x] {
            None => break,
            Some(m) => match parent[m] {
                None => break,
                Some(p) => x = p,
            },
        }
    }
    let mut y = w;
    loop {
        y = base[y];
        if on_path[y] {
            return y;
        }
        y = parent[mate[y].expect("tree vertex is matched")].expect("tree vertex has a parent");
    }
}

fn mark_path(
    mut v: usize,
    root: usize,
    mut child: Option<usize>,
    mate: &[Option<usize>],
    parent: &mut [Option<usize>],
    base: &[usize],
    in_blossom: &mut [bool],
) {
    while base[v] != root {
        let m = mate[v].expect("blossom vertex is matched");
        in_blossom[base[v]] = true;
        in_blossom[base[m]] = true;
        parent[v] = child;
        child = Some(m);
        v = parent[m].expect("blossom vertex has a parent");
    }
}

fn augment(mate: &mut [Option<usize>], parent: &[Option<usize>], end: usize) {
    let mut cur = end;
    while let Some(prev) = parent[cur] {
        let next = mate[prev];
        mate[cur] = Some(prev);
        mate[prev] = Some(cur);
        match next {
            None => break,
            Some(nx) => cur = nx,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make, random_connected, FamilySpec};
    use crate::transform::middle_graph;
    use proptest::prelude::*;

    /// Brute-force maximum matching over all edge subsets; only usable for
    /// small edge counts, which is the point.
    fn matching_by_brute_force(g: &Graph) -> usize {
        let edges = g.edges();
        assert!(edges.len() <= 16);
        let mut best = 0;
        for mask in 0u32..1 << edges.len() {
            let mut seen = crate::graph::VertexSet::EMPTY;
            let mut ok = true;
            let mut size = 0;
            for (b, &(i, j)) in edges.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    if seen.contains(i) || seen.contains(j) {
                        ok = false;
                        break;
                    }
                    seen.insert(i);
                    seen.insert(j);
                    size += 1;
                }
            }
            if ok {
                best = best.max(size);
            }
        }
        best
    }

    fn petersen() -> Graph {
        Graph::new(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (0, 4), // outer cycle
                (5, 7),
                (7, 9),
                (6, 9),
                (6, 8),
                (5, 8), // inner pentagram
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9), // spokes
            ],
        )
        .unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(
            maximum_matching(&make(&FamilySpec::Cycle(4)).unwrap()).len(),
            2
        );
        assert_eq!(
            maximum_matching(&make(&FamilySpec::Complete(3)).unwrap()).len(),
            1
        );
    }

    #[test]
    fn petersen_has_a_perfect_matching() {
        let g = petersen();
        assert_eq!(matching_by_brute_force(&g), 5);
        assert_eq!(maximum_matching(&g).len(), 5);
    }

    #[test]
    fn blossom_with_chord() {
        // 5-cycle plus a chord: the classic contraction case.
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]).unwrap();
        assert_eq!(maximum_matching(&g).len(), 2);
    }

    /// Brute-force minimum edge cover; subsets of the edge list.
    fn cover_by_brute_force(g: &Graph) -> usize {
        let edges = g.edges();
        assert!(edges.len() <= 12);
        let mut best = usize::MAX;
        for mask in 0u32..1 << edges.len() {
            let mut seen = crate::graph::VertexSet::EMPTY;
            for (b, &(i, j)) in edges.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    seen.insert(i);
                    seen.insert(j);
                }
            }
            if seen == g.vertex_set() {
                best = best.min(mask.count_ones() as usize);
            }
        }
        best
    }

    #[test]
    fn edge_cover_examples() {
        assert_eq!(
            edge_cover_number(&make(&FamilySpec::Path(2)).unwrap()).unwrap(),
            1
        );
        let c5 = make(&FamilySpec::Cycle(5)).unwrap();
        assert_eq!(cover_by_brute_force(&c5), 3);
        assert_eq!(edge_cover_number(&c5).unwrap(), 3);
        for spec in [
            FamilySpec::Star(5),
            FamilySpec::Wheel(6),
            FamilySpec::Friendship(2),
        ] {
            let g = make(&spec).unwrap();
            assert_eq!(
                edge_cover_number(&g).unwrap(),
                cover_by_brute_force(&g),
                "{spec}"
            );
        }
    }

    #[test]
    fn edge_cover_rejections() {
        let lonely = Graph::new(1, &[]).unwrap();
        assert_eq!(
            edge_cover_number(&lonely),
            Err(SolverError::TooSmallForCover)
        );
        let with_isolated = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(
            edge_cover_number(&with_isolated),
            Err(SolverError::IsolatedVertex(2))
        );
    }

    #[test]
    fn middle_graph_domination_equals_edge_cover_spot_checks() {
        for spec in [
            FamilySpec::Cycle(5),
            FamilySpec::Complete(4),
            FamilySpec::Star(5),
        ] {
            let g = make(&spec).unwrap();
            let m = middle_graph(&g).unwrap();
            let gamma =
                crate::solver::oracle_solve(&m.graph, crate::solver::InvariantKind::Domination)
                    .unwrap()
                    .value;
            assert_eq!(gamma, edge_cover_number(&g).unwrap(), "{spec}");
        }
    }

    #[test]
    fn middle_graph_domination_equals_edge_cover_exhaustively() {
        for n in 2..=7 {
            for g in crate::families::enumerate_connected(n).unwrap() {
                let m = middle_graph(&g).unwrap();
                let gamma = crate::solver::bnb_solve(
                    &m.graph,
                    crate::solver::InvariantKind::Domination,
                    crate::solver::DEFAULT_BUDGET,
                )
                .unwrap()
                .value;
                assert_eq!(gamma, edge_cover_number(&g).unwrap(), "{g:?}");
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn matching_matches_brute_force(n in 2usize..=7, seed in proptest::num::u64::ANY) {
            let g = random_connected(n, seed);
            prop_assume!(g.size() <= 16);
            prop_assert_eq!(maximum_matching(&g).len(), matching_by_brute_force(&g));
        }

        #[test]
        fn gallai_identity(n in 2usize..=8, seed in proptest::num::u64::ANY) {
            let g = random_connected(n, seed);
            let mu = maximum_matching(&g).len();
            prop_assert_eq!(mu + edge_cover_number(&g).unwrap(), g.order());
        }
    }
}
