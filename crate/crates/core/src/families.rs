//! Generators for the named graph families used throughout the harness, and
//! exhaustive enumeration of connected graphs up to isomorphism.
//!
//! Conventions that the rest of the crate relies on:
//! - `Wheel(n)` has `n` vertices total: hub `0` joined to the cycle
//!   `1..n`. Getting this wrong silently shifts every wheel check.
//! - `Friendship(n)` has `2n + 1` vertices: hub `0` plus the triangle pairs
//!   `(2i-1, 2i)`.
//! - `Star(n)` has `n` vertices: hub `0` plus `n - 1` leaves.
//! - `CompleteBipartite(n1, n2)` puts the first class on `0..n1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::iso::{canonical_form, CanonicalCode};

/// Exhaustive enumeration is supported up to this order.
pub const MAX_ENUMERATION_ORDER: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family} requires {requirement}; got {given}")]
    BadParameter {
        family: &'static str,
        requirement: &'static str,
        given: String,
    },
    #[error("cannot parse family spec '{0}'")]
    Parse(String),
    #[error("connected-graph enumeration supports 1..={MAX_ENUMERATION_ORDER} vertices; got {0}")]
    UnsupportedOrder(usize),
    #[error("'{0}' denotes an instance stream, not a single graph")]
    NotSingleton(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A named family instance, parsed from specs like `cycle:9`,
/// `complete_bipartite:2,5`, `random_tree:10:seed=42`, `all_connected:6`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Wheel(usize),
    Friendship(usize),
    RandomTree { n: usize, seed: u64 },
    RandomConnected { n: usize, seed: u64 },
    AllConnected(usize),
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            FamilySpec::Wheel(n) => write!(f, "wheel:{n}"),
            FamilySpec::Friendship(n) => write!(f, "friendship:{n}"),
            FamilySpec::RandomTree { n, seed } => write!(f, "random_tree:{n}:seed={seed}"),
            FamilySpec::RandomConnected { n, seed } => {
                write!(f, "random_connected:{n}:seed={seed}")
            }
            FamilySpec::AllConnected(n) => write!(f, "all_connected:{n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let bad = || FamilyError::Parse(s.to_string());
        let mut parts = s.split(':');
        let family = parts.next().ok_or_else(bad)?;
        let params = parts.next().ok_or_else(bad)?;
        let seed = match parts.next() {
            None => 0,
            Some(tail) => tail
                .strip_prefix("seed=")
                .ok_or_else(bad)?
                .parse()
                .map_err(|_| bad())?,
        };
        if parts.next().is_some() {
            return Err(bad());
        }
        let one = |p: &str| p.parse::<usize>().map_err(|_| bad());
        Ok(match family {
            "path" => FamilySpec::Path(one(params)?),
            "cycle" => FamilySpec::Cycle(one(params)?),
            "star" => FamilySpec::Star(one(params)?),
            "complete" => FamilySpec::Complete(one(params)?),
            "complete_bipartite" => {
                let (a, b) = params.split_once(',').ok_or_else(bad)?;
                FamilySpec::CompleteBipartite(one(a.trim())?, one(b.trim())?)
            }
            "wheel" => FamilySpec::Wheel(one(params)?),
            "friendship" => FamilySpec::Friendship(one(params)?),
            "random_tree" => FamilySpec::RandomTree {
                n: one(params)?,
                seed,
            },
            "random_connected" => FamilySpec::RandomConnected {
                n: one(params)?,
                seed,
            },
            "all_connected" => FamilySpec::AllConnected(one(params)?),
            _ => return Err(bad()),
        })
    }
}

fn require(
    ok: bool,
    family: &'static str,
    requirement: &'static str,
    given: String,
) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(FamilyError::BadParameter {
            family,
            requirement,
            given,
        })
    }
}

/// Builds the single graph described by `spec`.
pub fn make(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    match *spec {
        FamilySpec::Path(n) => {
            require(n >= 1, "path", "n >= 1", n.to_string())?;
            let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Ok(Graph::new(n, &edges)?)
        }
        FamilySpec::Cycle(n) => {
            require(n >= 3, "cycle", "n >= 3", n.to_string())?;
            let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            edges.push((0, n - 1));
            Ok(Graph::new(n, &edges)?)
        }
        FamilySpec::Star(n) => {
            require(n >= 2, "star", "n >= 2", n.to_string())?;
            let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
            Ok(Graph::new(n, &edges)?)
        }
        FamilySpec::Complete(n) => {
            require(n >= 1, "complete", "n >= 1", n.to_string())?;
            let edges: Vec<_> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect();
            Ok(Graph::new(n, &edges)?)
        }
        FamilySpec::CompleteBipartite(n1, n2) => {
            require(
                n1 >= 1 && n2 >= n1,
                "complete_bipartite",
                "n2 >= n1 >= 1",
                format!("{n1},{n2}"),
            )?;
            let edges: Vec<_> = (0..n1)
                .flat_map(|i| (0..n2).map(move |j| (i, n1 + j)))
                .collect();
            Ok(Graph::new(n1 + n2, &edges)?)
        }
        FamilySpec::Wheel(n) => {
            require(n >= 4, "wheel", "n >= 4", n.to_string())?;
            let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
            edges.extend((1..n - 1).map(|i| (i, i + 1)));
            edges.push((1, n - 1));
            Ok(Graph::new(n, &edges)?)
        }
        FamilySpec::Friendship(n) => {
            require(n >= 1, "friendship", "n >= 1", n.to_string())?;
            let mut edges: Vec<_> = (1..=2 * n).map(|i| (0, i)).collect();
            edges.extend((1..=n).map(|i| (2 * i - 1, 2 * i)));
            Ok(Graph::new(2 * n + 1, &edges)?)
        }
        FamilySpec::RandomTree { n, seed } => {
            require(n >= 1, "random_tree", "n >= 1", n.to_string())?;
            Ok(random_tree(n, seed))
        }
        FamilySpec::RandomConnected { n, seed } => {
            require(n >= 1, "random_connected", "n >= 1", n.to_string())?;
            Ok(random_connected(n, seed))
        }
        FamilySpec::AllConnected(_) => Err(FamilyError::NotSingleton(spec.to_string())),
    }
}

/// Expands a spec into labeled instances: one for singleton families, the
/// whole enumeration for `all_connected:n`.
pub fn instances(spec: &FamilySpec) -> Result<Vec<(String, Graph)>, FamilyError> {
    match *spec {
        FamilySpec::AllConnected(n) => Ok(enumerate_connected(n)?
            .into_iter()
            .enumerate()
            .map(|(i, g)| (format!("all_connected:{n}#{i}"), g))
            .collect()),
        _ => Ok(vec![(spec.to_string(), make(spec)?)]),
    }
}

/// Every connected simple graph on `n` unlabeled vertices, exactly once, in
/// ascending canonical-code order. Counts for n = 1..8:
/// 1, 1, 2, 6, 21, 112, 853, 11117.
///
/// Generation extends each connected (k)-vertex representative by a new
/// vertex attached to every non-empty neighbor subset; every connected
/// (k+1)-vertex graph arises this way because some vertex is removable
/// without disconnecting it.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, FamilyError> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(FamilyError::UnsupportedOrder(n));
    }
    let k1 = Graph::new(1, &[]).unwrap();
    let mut level: BTreeSet<CanonicalCode> = BTreeSet::new();
    level.insert(canonical_form(&k1).unwrap());
    for k in 1..n {
        let mut next = BTreeSet::new();
        for code in &level {
            let g = code.to_graph();
            let base_edges = g.edges().to_vec();
            for subset in 1u32..1 << k {
                let mut edges = base_edges.clone();
                edges.extend((0..k).filter(|j| subset >> j & 1 == 1).map(|j| (j, k)));
                let h = Graph::new(k + 1, &edges).unwrap();
                next.insert(canonical_form(&h).unwrap());
            }
        }
        level = next;
    }
    Ok(level.iter().map(CanonicalCode::to_graph).collect())
}

/// Splitmix64; deterministic across platforms, which makes every seeded
/// family reproducible byte-for-byte.
struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Uniform random labeled tree on `n` vertices via a seeded sequence
/// decode; identical `(n, seed)` always yields the identical edge list.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "random_tree requires n >= 1");
    if n == 1 {
        return Graph::new(1, &[]).unwrap();
    }
    if n == 2 {
        return Graph::new(2, &[(0, 1)]).unwrap();
    }
    let mut rng = SplitMix64::new(seed ^ (n as u64).wrapping_mul(0xA076_1D64_78BD_642F));
    let sequence: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();
    decode_pruefer(n, &sequence)
}

fn decode_pruefer(n: usize, sequence: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &s in sequence {
        degree[s] += 1;
    }
    let mut used = vec![false; n];
    let mut edges = Vec::with_capacity(n - 1);
    for &s in sequence {
        let leaf = (0..n)
            .find(|&v| !used[v] && degree[v] == 1)
            .expect("sequence decode always has a pending leaf");
        edges.push((leaf, s));
        used[leaf] = true;
        degree[s] -= 1;
    }
    let mut rest = (0..n).filter(|&v| !used[v] && degree[v] == 1);
    let a = rest.next().expect("two vertices remain");
    let b = rest.next().expect("two vertices remain");
    edges.push((a, b));
    Graph::new(n, &edges).expect("decoded tree is a valid graph")
}

/// Seeded random connected graph: edge probability one half, re-drawn until
/// connected. Deterministic for a given `(n, seed)`.
pub fn random_connected(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "random_connected requires n >= 1");
    let mut rng = SplitMix64::new(seed ^ (n as u64).wrapping_mul(0xE703_7ED1_A0B4_28DB));
    loop {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.next_u64() & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}
