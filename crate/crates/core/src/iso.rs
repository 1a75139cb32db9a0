//! Canonical forms and isomorphism checks for small graphs.
//!
//! A canonical code is the lexicographically smallest upper-triangle
//! adjacency encoding over all vertex relabelings that respect an
//! isomorphism-invariant coloring (degrees refined to a fixpoint). The
//! refinement prunes the permutation search enough to make exhaustive
//! minimization practical at the orders handled here; the search is capped
//! at [`MAX_ISO_VERTICES`] vertices. Larger graphs get an invariant
//! fingerprint only, which can refute isomorphism but never certify it.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Exhaustive canonicalization is only attempted up to this order.
pub const MAX_ISO_VERTICES: usize = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IsoError {
    #[error("canonical form capped at {cap} vertices; graph has {n}")]
    TooLarge { n: usize, cap: usize },
}

/// Order plus the minimized upper-triangle bits; equal codes mean
/// isomorphic graphs (and conversely, within the supported order range).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalCode {
    n: u8,
    bits: u128,
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Rebuilds the graph in canonical labeling.
    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let total = n * (n - 1) / 2;
        let mut edges = Vec::new();
        let mut p = 0;
        for k in 1..n {
            for j in 0..k {
                if self.bits >> (total - 1 - p) & 1 == 1 {
                    edges.push((j, k));
                }
                p += 1;
            }
        }
        Graph::new(n, &edges).expect("canonical code decodes to a valid graph")
    }
}

/// Degree-based color refinement to a fixpoint. The resulting colors are
/// isomorphism-invariant, so cells may safely constrain the label search.
fn refined_colors(g: &Graph) -> Vec<u32> {
    let n = g.order();
    let mut colors: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    for _ in 0..n {
        let keys: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut around: Vec<u32> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        // Ranks are assigned by sorted key order so they stay invariant
        // under relabeling.
        let mut ordered: Vec<&(u32, Vec<u32>)> = keys.iter().collect();
        ordered.sort();
        ordered.dedup();
        let by_key: BTreeMap<&(u32, Vec<u32>), u32> = ordered
            .into_iter()
            .enumerate()
            .map(|(i, k)| (k, i as u32))
            .collect();
        let new_colors: Vec<u32> = keys.iter().map(|k| by_key[k]).collect();
        if new_colors == colors {
            break;
        }
        colors = new_colors;
    }
    colors
}

struct Canonizer<'a> {
    g: &'a Graph,
    n: usize,
    total: u32,
    cell_of_label: Vec<usize>,
    cells: Vec<Vec<usize>>,
    perm: Vec<usize>,
    assigned: VertexSet,
    best: u128,
}

impl<'a> Canonizer<'a> {
    fn run(g: &'a Graph) -> u128 {
        let n = g.order();
        let colors = refined_colors(g);
        let mut by_color: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (v, &color) in colors.iter().enumerate() {
            by_color.entry(color).or_default().push(v);
        }
        let cells: Vec<Vec<usize>> = by_color.into_values().collect();
        let mut cell_of_label = Vec::with_capacity(n);
        for (i, cell) in cells.iter().enumerate() {
            cell_of_label.extend(std::iter::repeat_n(i, cell.len()));
        }
        let mut c = Canonizer {
            g,
            n,
            total: (n * (n - 1) / 2) as u32,
            cell_of_label,
            cells,
            perm: vec![0; n],
            assigned: VertexSet::EMPTY,
            best: u128::MAX,
        };
        c.dfs(0, 0);
        c.best
    }

    fn dfs(&mut self, pos: usize, acc: u128) {
        if pos == self.n {
            if acc < self.best {
                self.best = acc;
            }
            return;
        }
        let cell = self.cell_of_label[pos];
        let prefix_len = (pos * (pos + 1) / 2) as u32;
        let shift = self.total - prefix_len;
        for idx in 0..self.cells[cell].len() {
            let v = self.cells[cell][idx];
            if self.assigned.contains(v) {
                continue;
            }
            let mut next = acc;
            let row = self.g.neighbors(v);
            for j in 0..pos {
                if row.contains(self.perm[j]) {
                    let p = (pos * (pos - 1) / 2 + j) as u32;
                    next |= 1u128 << (self.total - 1 - p);
                }
            }
            // Earlier pairs sit in higher bits, so the numeric comparison of
            // prefixes is the lexicographic comparison of the encoding.
            if next >> shift > self.best >> shift {
                continue;
            }
            self.perm[pos] = v;
            self.assigned.insert(v);
            self.dfs(pos + 1, next);
            self.assigned.remove(v);
        }
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalCode, IsoError> {
    let n = g.order();
    if n > MAX_ISO_VERTICES {
        return Err(IsoError::TooLarge {
            n,
            cap: MAX_ISO_VERTICES,
        });
    }
    if n == 1 {
        return Ok(CanonicalCode { n: 1, bits: 0 });
    }
    Ok(CanonicalCode {
        n: n as u8,
        bits: Canonizer::run(g),
    })
}

pub fn isomorphic(a: &Graph, b: &Graph) -> Result<bool, IsoError> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    if fingerprint(a) != fingerprint(b) {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Cheap isomorphism invariant: order, size, and the refined color
/// histogram. Distinct fingerprints refute isomorphism at any order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fingerprint {
    order: usize,
    size: usize,
    color_histogram: Vec<(u32, u32)>,
}

pub fn fingerprint(g: &Graph) -> Fingerprint {
    let colors = refined_colors(g);
    let mut hist: BTreeMap<u32, u32> = BTreeMap::new();
    for c in colors {
        *hist.entry(c).or_insert(0) += 1;
    }
    Fingerprint {
        order: g.order(),
        size: g.size(),
        color_histogram: hist.into_iter().collect(),
    }
}
