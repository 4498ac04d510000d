//! Immutable simple undirected graphs over vertices `0..n-1`, plus the
//! named families used by the bound checks (paths, cycles, wheels,
//! hypercubes, Kneser graphs, ...) and the cone operation.
//!
//! Adjacency is stored as a dense symmetric bitset: one row of `u64`
//! words per vertex. Orders stay small (a few hundred at most), and the
//! bitset rows double as the working representation for the exact
//! independence-number search.

use std::fmt;

use serde::Serialize;

use crate::{Error, Result};

const WORD_BITS: usize = 64;

/// Hard cap on the order of constructed family graphs; keeps parameter
/// typos from allocating gigabyte bitsets.
const FAMILY_ORDER_CAP: usize = 4096;

/// A simple undirected graph on vertices `0..n-1`.
///
/// Immutable after construction; equality and hashing are *labeled*
/// (vertex-for-vertex), never up to isomorphism.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    fn blank(n: usize) -> Graph {
        let words = n.div_ceil(WORD_BITS);
        Graph {
            n,
            words,
            bits: vec![0u64; n * words],
        }
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
        self.bits[v * self.words + u / WORD_BITS] |= 1u64 << (u % WORD_BITS);
    }

    /// Builds a graph from an explicit edge list. Duplicate edges collapse;
    /// endpoints out of `0..n-1` and self-loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut g = Graph::blank(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from per-vertex neighbor masks (single-word rows).
    /// Caller guarantees symmetry and an empty diagonal.
    pub(crate) fn from_masks(masks: &[u64]) -> Graph {
        debug_assert!(!masks.is_empty() && masks.len() <= WORD_BITS);
        let mut g = Graph::blank(masks.len());
        g.bits.copy_from_slice(masks);
        for (v, &row) in masks.iter().enumerate() {
            debug_assert_eq!(row >> masks.len(), 0);
            debug_assert_eq!(row >> v & 1, 0, "self-loop at {v}");
        }
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.vertices().map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Neighbor mask of `v` as a single word; only valid for `n ≤ 64`.
    pub(crate) fn row_word(&self, v: usize) -> u64 {
        debug_assert_eq!(self.words, 1);
        self.bits[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &w)| {
            let base = wi * WORD_BITS;
            BitIter(w).map(move |b| base + b)
        })
    }

    /// All edges as ordered pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The cone over this graph: one new vertex, adjacent to everything.
    /// The new vertex gets the largest label `n`, so the original graph is
    /// the induced subgraph on `0..n-1`.
    pub fn cone(&self) -> Graph {
        let n = self.n + 1;
        let mut g = Graph::blank(n);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for v in 0..self.n {
            g.set_edge(v, self.n);
        }
        g
    }

    /// Induced subgraph on `keep`, relabeled `0..keep.len()-1` in ascending
    /// order of the original labels (duplicates in `keep` collapse).
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        let mut sorted = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if let Some(&v) = sorted.last() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
            }
        }
        let mut g = Graph::blank(sorted.len());
        for (i, &u) in sorted.iter().enumerate() {
            for (j, &v) in sorted.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Induced subgraph on everything except `v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
        }
        let keep: Vec<usize> = self.vertices().filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Dense adjacency matrix as rows of `f64`, for the eigensolver.
    pub fn adjacency_rows(&self) -> Vec<Vec<f64>> {
        self.vertices()
            .map(|u| {
                self.vertices()
                    .map(|v| if self.has_edge(u, v) { 1.0 } else { 0.0 })
                    .collect()
            })
            .collect()
    }

    /// Degree data, connectivity, regularity, and the bipartition (when one
    /// exists). The bipartition is found by two-coloring every connected
    /// component; it is present iff the graph has no odd cycle.
    pub fn profile(&self) -> StructuralProfile {
        let degrees = self.degrees();
        let max_degree = *degrees.iter().max().expect("n >= 1");
        let min_degree = *degrees.iter().min().expect("n >= 1");

        let mut color = vec![None::<bool>; self.n];
        let mut bipartite = true;
        let mut components = 0usize;
        for root in self.vertices() {
            if color[root].is_some() {
                continue;
            }
            components += 1;
            color[root] = Some(false);
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                let cu = color[u].expect("colored before push");
                for v in self.neighbors(u) {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            stack.push(v);
                        }
                        Some(cv) if cv == cu => bipartite = false,
                        Some(_) => {}
                    }
                }
            }
        }

        let bipartition = if bipartite {
            let part0: Vec<usize> = self.vertices().filter(|&v| color[v] == Some(false)).collect();
            let part1: Vec<usize> = self.vertices().filter(|&v| color[v] == Some(true)).collect();
            if part0.len() >= part1.len() {
                Some((part0, part1))
            } else {
                Some((part1, part0))
            }
        } else {
            None
        };

        StructuralProfile {
            degrees,
            max_degree,
            min_degree,
            is_connected: components == 1,
            regular_degree: (max_degree == min_degree).then_some(max_degree),
            bipartition,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

/// Degree and partition data computed once per graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
    pub is_connected: bool,
    /// Present iff the graph is regular.
    pub regular_degree: Option<usize>,
    /// Present iff the graph has no odd cycle; the first part is the
    /// larger one.
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
}

/// A named graph family with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// `K_n`, n ≥ 1.
    Complete(usize),
    /// n isolated vertices, n ≥ 1.
    Empty(usize),
    /// Path on n vertices `0-1-…-(n-1)`, n ≥ 1.
    Path(usize),
    /// Cycle `0-1-…-(n-1)-0`, n ≥ 3.
    Cycle(usize),
    /// Star `S_k` = `K_{1,k}`: leaves `0..k-1`, hub `k`; k ≥ 1.
    Star(usize),
    /// Wheel `W_k`: rim cycle `0..k-1`, hub `k`; k ≥ 3.
    Wheel(usize),
    /// `K_{a,b}`: part `0..a-1` joined to part `a..a+b-1`; a, b ≥ 1.
    CompleteBipartite(usize, usize),
    /// k-cube: vertices are k-bit strings (vertex id = integer value),
    /// adjacency = Hamming distance 1; k ≥ 1.
    Hypercube(usize),
    /// Kneser graph K(m, t): vertices are the t-subsets of `{1..m}` in
    /// lexicographic order, adjacency = disjointness; m ≥ 2t, t ≥ 1.
    Kneser(usize, usize),
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Star(k) => write!(f, "star:{k}"),
            FamilySpec::Wheel(k) => write!(f, "wheel:{k}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "complete-bipartite:{a}:{b}"),
            FamilySpec::Hypercube(k) => write!(f, "hypercube:{k}"),
            FamilySpec::Kneser(m, t) => write!(f, "kneser:{m}:{t}"),
        }
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All t-subsets of `{0..m-1}` in lexicographic order, as sorted vectors.
fn subsets(m: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(m, t));
    let mut cur = Vec::with_capacity(t);
    fn rec(m: usize, t: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for v in start..m {
            cur.push(v);
            rec(m, t, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(m, t, 0, &mut cur, &mut out);
    out
}

fn check_order(spec: &FamilySpec, n: usize) -> Result<usize> {
    if n > FAMILY_ORDER_CAP {
        return Err(Error::FamilyParameter(format!(
            "{spec} has {n} vertices, above the supported cap of {FAMILY_ORDER_CAP}"
        )));
    }
    Ok(n)
}

/// Constructs the named family member with the documented labeling.
pub fn make_family(spec: FamilySpec) -> Result<Graph> {
    let bad = |msg: &str| Err(Error::FamilyParameter(format!("{spec}: {msg}")));
    match spec {
        FamilySpec::Complete(n) => {
            if n < 1 {
                return bad("need n >= 1");
            }
            check_order(&spec, n)?;
            let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Empty(n) => {
            if n < 1 {
                return bad("need n >= 1");
            }
            check_order(&spec, n)?;
            Graph::from_edges(n, &[])
        }
        FamilySpec::Path(n) => {
            if n < 1 {
                return bad("need n >= 1");
            }
            check_order(&spec, n)?;
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return bad("need n >= 3");
            }
            check_order(&spec, n)?;
            let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            edges.push((n - 1, 0));
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Star(k) => {
            if k < 1 {
                return bad("need k >= 1");
            }
            check_order(&spec, k + 1)?;
            Ok(make_family(FamilySpec::Empty(k))?.cone())
        }
        FamilySpec::Wheel(k) => {
            if k < 3 {
                return bad("need k >= 3");
            }
            check_order(&spec, k + 1)?;
            Ok(make_family(FamilySpec::Cycle(k))?.cone())
        }
        FamilySpec::CompleteBipartite(a, b) => {
            if a < 1 || b < 1 {
                return bad("need a, b >= 1");
            }
            check_order(&spec, a + b)?;
            let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
            Graph::from_edges(a + b, &edges)
        }
        FamilySpec::Hypercube(k) => {
            if k < 1 {
                return bad("need k >= 1");
            }
            if k >= usize::BITS as usize {
                return bad("dimension too large");
            }
            let n = check_order(&spec, 1usize << k)?;
            let mut edges = Vec::with_capacity(n * k / 2);
            for u in 0..n {
                for bit in 0..k {
                    let v = u ^ (1 << bit);
                    if u < v {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Kneser(m, t) => {
            if t < 1 || m < 2 * t {
                return bad("need t >= 1 and m >= 2t");
            }
            let n = check_order(&spec, binomial(m, t))?;
            let verts = subsets(m, t);
            let masks: Vec<u128> = verts
                .iter()
                .map(|s| s.iter().fold(0u128, |acc, &v| acc | 1 << v))
                .collect();
            if m > 127 {
                return bad("ground set too large");
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if masks[u] & masks[v] == 0 {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges)
        }
    }
}
