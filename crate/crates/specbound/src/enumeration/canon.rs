//! Canonical labeling of small graphs (order ≤ 11) by ordered-partition
//! refinement with individualization backtracking.
//!
//! The search explores every individualization choice and keeps every
//! leaf that attains the minimal relabeled adjacency bitstring, so the
//! returned automorphism list is the full group. That is all the
//! generator needs: orders stay tiny and the group doubles as the orbit
//! oracle for both new-vertex and neighborhood-subset checks.

/// Outcome of a canonical search.
pub(crate) struct CanonResult {
    /// Upper-triangle adjacency bits of the canonically relabeled graph.
    #[cfg_attr(not(test), allow(dead_code))]
    pub form: u64,
    /// vertex -> canonical position, for the canonical leaf.
    pub labeling: Vec<usize>,
    /// The full automorphism group (identity included).
    pub automorphisms: Vec<Vec<usize>>,
}

/// Adjacency bitstring of the graph relabeled by `lab` (big-endian over
/// column-major upper-triangle positions).
fn relabeled_bits(adj: &[u64], lab: &[usize]) -> u64 {
    let n = adj.len();
    let mut inverse = vec![0usize; n];
    for (v, &pos) in lab.iter().enumerate() {
        inverse[pos] = v;
    }
    let mut form = 0u64;
    for col in 1..n {
        for row in 0..col {
            form = form << 1 | (adj[inverse[col]] >> inverse[row] & 1);
        }
    }
    form
}

/// Splits cells by neighbor counts against every cell until stable.
/// Cells stay sorted internally; subcells are ordered by count ascending.
fn refine(adj: &[u64], cells: &mut Vec<Vec<usize>>) {
    'restart: loop {
        for si in 0..cells.len() {
            let splitter: u64 = cells[si].iter().fold(0u64, |m, &v| m | 1 << v);
            for ci in 0..cells.len() {
                if cells[ci].len() < 2 {
                    continue;
                }
                let counts: Vec<u32> = cells[ci]
                    .iter()
                    .map(|&v| (adj[v] & splitter).count_ones())
                    .collect();
                if counts.iter().all(|&c| c == counts[0]) {
                    continue;
                }
                let mut keys: Vec<u32> = counts.clone();
                keys.sort_unstable();
                keys.dedup();
                let cell = cells.remove(ci);
                for (offset, key) in keys.iter().enumerate() {
                    let bucket: Vec<usize> = cell
                        .iter()
                        .zip(&counts)
                        .filter(|&(_, c)| c == key)
                        .map(|(&v, _)| v)
                        .collect();
                    cells.insert(ci + offset, bucket);
                }
                continue 'restart;
            }
        }
        break;
    }
}

fn search(
    adj: &[u64],
    cells: Vec<Vec<usize>>,
    best: &mut Option<u64>,
    leaves: &mut Vec<Vec<usize>>,
) {
    let mut cells = cells;
    refine(adj, &mut cells);

    if let Some(ci) = cells.iter().position(|c| c.len() > 1) {
        for i in 0..cells[ci].len() {
            let mut child = cells.clone();
            let v = child[ci][i];
            child[ci].retain(|&u| u != v);
            child.insert(ci, vec![v]);
            search(adj, child, best, leaves);
        }
        return;
    }

    let mut lab = vec![0usize; adj.len()];
    for (pos, cell) in cells.iter().enumerate() {
        lab[cell[0]] = pos;
    }
    let form = relabeled_bits(adj, &lab);
    match *best {
        None => {
            *best = Some(form);
            leaves.push(lab);
        }
        Some(b) if form < b => {
            *best = Some(form);
            leaves.clear();
            leaves.push(lab);
        }
        Some(b) if form == b => leaves.push(lab),
        Some(_) => {}
    }
}

/// Canonical form, a canonical labeling, and the full automorphism group
/// of a graph given as single-word neighbor masks.
pub(crate) fn canonical(adj: &[u64]) -> CanonResult {
    let n = adj.len();
    assert!((1..=11).contains(&n), "canonical labeling supports orders 1..=11");
    let mut best = None;
    let mut leaves = Vec::new();
    search(adj, vec![(0..n).collect()], &mut best, &mut leaves);

    let labeling = leaves[0].clone();
    let mut inverse0 = vec![0usize; n];
    for (v, &pos) in labeling.iter().enumerate() {
        inverse0[pos] = v;
    }
    // Leaf pair (ℓ0, ℓ) induces the automorphism v ↦ ℓ0⁻¹(ℓ(v));
    // distinct minimal leaves give distinct automorphisms and every
    // automorphism arises this way.
    let automorphisms = leaves
        .iter()
        .map(|leaf| leaf.iter().map(|&pos| inverse0[pos]).collect())
        .collect();
    CanonResult {
        form: best.expect("at least one leaf"),
        labeling,
        automorphisms,
    }
}
