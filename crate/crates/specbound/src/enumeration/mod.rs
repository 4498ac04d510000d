//! Isomorphism-free generation of connected graphs, the exact
//! independence number, and the bound-comparison survey.
//!
//! Generation uses canonical augmentation: each connected graph on k
//! vertices is extended by one new vertex with every neighborhood chosen
//! up to the parent's automorphisms, and an extension survives only if
//! the new vertex lies in the canonical-deletion orbit of the child.
//! Every isomorphism class of connected graphs is produced exactly once,
//! without ever storing a full level of graphs.

mod canon;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{compare_bounds, Winner};
use crate::{Error, Graph, Result};

const MAX_ENUMERATION_ORDER: usize = 10;
const SURVEY_BATCH: usize = 512;

/// Lazily streams one representative per isomorphism class of connected
/// graphs on exactly `n` vertices, in a deterministic order; `1 ≤ n ≤ 10`.
pub fn enumerate_connected(n: usize) -> Result<ConnectedGraphs> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::OrderOutOfRange {
            order: n,
            reason: "enumeration covers orders 1..=10",
        });
    }
    let root_adj = vec![0u64];
    let root_auts = vec![vec![0usize]];
    Ok(ConnectedGraphs {
        target: n,
        emit_k1: n == 1,
        stack: vec![Frame::new(root_adj, &root_auts)],
    })
}

/// Depth-first generator state.
pub struct ConnectedGraphs {
    target: usize,
    emit_k1: bool,
    stack: Vec<Frame>,
}

struct Frame {
    adj: Vec<u64>,
    /// Candidate neighborhoods for the next vertex: one representative
    /// (the numerically smallest mask) per parent-automorphism orbit.
    reps: Vec<u64>,
    idx: usize,
}

impl Frame {
    fn new(adj: Vec<u64>, automorphisms: &[Vec<usize>]) -> Frame {
        let reps = subset_orbit_reps(adj.len(), automorphisms);
        Frame { adj, reps, idx: 0 }
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.target == 1 {
            return self.emit_k1.then(|| {
                self.emit_k1 = false;
                Graph::from_masks(&[0])
            });
        }
        while let Some(top) = self.stack.last_mut() {
            if top.idx == top.reps.len() {
                self.stack.pop();
                continue;
            }
            let neighborhood = top.reps[top.idx];
            top.idx += 1;
            let child = extend(&top.adj, neighborhood);
            if let Some(automorphisms) = accept(&child) {
                if child.len() == self.target {
                    return Some(Graph::from_masks(&child));
                }
                self.stack.push(Frame::new(child, &automorphisms));
            }
        }
        None
    }
}

/// Adds a vertex adjacent to `neighborhood` (nonempty, so connectivity
/// is preserved).
fn extend(adj: &[u64], neighborhood: u64) -> Vec<u64> {
    let k = adj.len();
    let mut child = adj.to_vec();
    child.push(neighborhood);
    let mut rest = neighborhood;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        child[v] |= 1 << k;
    }
    child
}

/// Canonical-deletion test. The child is kept iff its new vertex (the
/// last one) lies in the same automorphism orbit as the canonically
/// chosen deletion vertex: the non-cut vertex with the largest canonical
/// label. Returns the child's automorphism group on success so the
/// caller can reuse it.
fn accept(child: &[u64]) -> Option<Vec<Vec<usize>>> {
    let k = child.len();
    let new_vertex = k - 1;
    let full: u64 = (1 << k) - 1;
    let c = canon::canonical(child);
    let chosen = (0..k)
        .filter(|&u| connected_masked(child, full & !(1 << u)))
        .max_by_key(|&u| c.labeling[u])
        .expect("every connected graph has a non-cut vertex");
    let ok = chosen == new_vertex
        || c.automorphisms.iter().any(|p| p[new_vertex] == chosen);
    ok.then_some(c.automorphisms)
}

/// One representative (smallest mask) per orbit of the automorphism
/// group acting on the nonempty vertex subsets, ascending.
fn subset_orbit_reps(k: usize, automorphisms: &[Vec<usize>]) -> Vec<u64> {
    let mut reps = Vec::new();
    's: for s in 1..(1u64 << k) {
        for p in automorphisms {
            if apply_perm(p, s) < s {
                continue 's;
            }
        }
        reps.push(s);
    }
    reps
}

fn apply_perm(p: &[usize], s: u64) -> u64 {
    let mut out = 0u64;
    let mut rest = s;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= 1 << p[v];
    }
    out
}

/// BFS over the vertices of `mask` only.
fn connected_masked(adj: &[u64], mask: u64) -> bool {
    debug_assert!(mask != 0);
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut rest = frontier;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            next |= adj[v];
        }
        next &= mask & !seen;
        seen |= next;
        frontier = next;
    }
    seen == mask
}

/// Exact maximum size of a pairwise non-adjacent vertex set, by
/// branch-and-bound over bitsets: branch on a maximum-degree candidate
/// vertex, prune with a greedy clique cover. Supports n ≤ 62.
pub fn independence_number(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > 62 {
        return Err(Error::OrderOutOfRange {
            order: n,
            reason: "independence search supports at most 62 vertices",
        });
    }
    let adj: Vec<u64> = (0..n).map(|v| g.row_word(v)).collect();
    let mut best = 0usize;
    let full: u64 = if n == 64 { !0 } else { (1 << n) - 1 };
    expand(&adj, full, 0, &mut best);
    Ok(best)
}

fn expand(adj: &[u64], candidates: u64, size: usize, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + clique_cover_bound(adj, candidates) <= *best {
        return;
    }
    let v = max_degree_in(adj, candidates);
    // Take v first: large sets found early tighten the bound.
    expand(adj, candidates & !(adj[v] | 1 << v), size + 1, best);
    expand(adj, candidates & !(1 << v), size, best);
}

fn max_degree_in(adj: &[u64], candidates: u64) -> usize {
    let mut best_v = candidates.trailing_zeros() as usize;
    let mut best_deg = (adj[best_v] & candidates).count_ones();
    let mut rest = candidates & (candidates - 1);
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let deg = (adj[v] & candidates).count_ones();
        if deg > best_deg {
            best_deg = deg;
            best_v = v;
        }
    }
    best_v
}

/// Greedily covers the candidate set with cliques; the clique count
/// bounds the independence number of the candidate subgraph from above.
fn clique_cover_bound(adj: &[u64], candidates: u64) -> usize {
    let mut remaining = candidates;
    let mut cliques = 0usize;
    while remaining != 0 {
        let v = remaining.trailing_zeros() as usize;
        remaining &= !(1u64 << v);
        let mut extend = remaining & adj[v];
        while extend != 0 {
            let u = extend.trailing_zeros() as usize;
            remaining &= !(1u64 << u);
            extend &= adj[u] & !(1u64 << u);
        }
        cliques += 1;
    }
    cliques
}

/// One row of the bound-comparison survey: over all irregular connected
/// graphs of order `n`, how often each bound wins strictly.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurveyRow {
    pub n: usize,
    /// Number of irregular connected graphs of order `n`.
    pub count: usize,
    pub new_wins: usize,
    pub haemers_wins: usize,
    pub ties: usize,
    /// `new_wins / count`.
    pub proportion: f64,
}

/// Runs the survey for one order with the built-in generator; `4 ≤ n ≤ 8`.
pub fn survey(n: usize, tol: f64) -> Result<SurveyRow> {
    if !(4..=8).contains(&n) {
        return Err(Error::OrderOutOfRange {
            order: n,
            reason: "the survey covers orders 4..=8",
        });
    }
    survey_stream(n, enumerate_connected(n)?, tol)
}

/// Runs the survey over an explicit stream of connected order-`n` graphs
/// (e.g. an externally generated universe). Regular graphs are skipped;
/// per-graph work fans out over the current rayon pool, and the tallies
/// are order-independent, so the row does not depend on scheduling.
pub fn survey_stream<I>(n: usize, graphs: I, tol: f64) -> Result<SurveyRow>
where
    I: IntoIterator<Item = Graph>,
{
    let mut iter = graphs.into_iter();
    let (mut count, mut new_wins, mut haemers_wins, mut ties) = (0usize, 0usize, 0usize, 0usize);
    loop {
        let batch: Vec<Graph> = iter.by_ref().take(SURVEY_BATCH).collect();
        if batch.is_empty() {
            break;
        }
        let outcomes: Result<Vec<Option<Winner>>> =
            batch.par_iter().map(|g| classify(n, g, tol)).collect();
        for outcome in outcomes?.into_iter().flatten() {
            count += 1;
            match outcome {
                Winner::New => new_wins += 1,
                Winner::Haemers => haemers_wins += 1,
                Winner::Tie => ties += 1,
            }
        }
    }
    Ok(SurveyRow {
        n,
        count,
        new_wins,
        haemers_wins,
        ties,
        proportion: if count == 0 { 0.0 } else { new_wins as f64 / count as f64 },
    })
}

fn classify(n: usize, g: &Graph, tol: f64) -> Result<Option<Winner>> {
    if g.order() != n {
        return Err(Error::Input(format!(
            "survey stream for order {n} contains a graph of order {}",
            g.order()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let profile = g.profile();
    if profile.regular_degree.is_some() {
        return Ok(None);
    }
    let alpha = independence_number(g)?;
    Ok(Some(compare_bounds(g, alpha, tol)?.winner))
}
