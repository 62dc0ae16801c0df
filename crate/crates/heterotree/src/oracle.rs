//! Independent brute-force ground truth: exhaustive heterochromatic
//! spanning-tree enumeration, the colour-removal and vertex-partition
//! existence characterizations, and heterochromatic tree embedding.
//!
//! Everything here is deliberately simple and exhaustive; the point is to
//! certify the clever constructions elsewhere, so none of their code is
//! reused.

use serde::Serialize;

use crate::error::Error;
use crate::graph::{EdgeColouredGraph, EdgeSet};
use crate::tree::Tree;
use crate::unionfind::{RollbackUnionFind, UnionFind};

/// Default transversal budget for [`enumerate_heterochromatic_spanning_trees`].
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 100_000_000;

/// [`suzuki_check`] scans `2^k` colour subsets; `k` is capped here.
pub const COLOUR_SUBSET_LIMIT: usize = 22;

/// [`akbari_alipour_check`] scans all vertex partitions; the vertex count
/// is capped here (Bell(10) = 115975 partitions).
pub const PARTITION_VERTEX_LIMIT: usize = 10;

/// [`heterochromatic_embedding`] backtracks over injective vertex maps;
/// the vertex count is capped here.
pub const EMBED_VERTEX_LIMIT: usize = 10;

/// Result of an exhaustive enumeration. `search_space` is the size of the
/// candidate space the scan ranges over (transversals, or heterochromatic
/// subsets of full size); `exact_count` of them are spanning trees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub exact_count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trees: Option<Vec<EdgeSet>>,
    pub search_space: u128,
}

/// Counts every heterochromatic spanning tree of `g` by exhaustive scan
/// with incremental cycle pruning, retaining up to `keep` of them in
/// enumeration order (`trees` is present iff `keep > 0`).
///
/// With exactly `num_vertices - 1` colours the scan runs over transversals
/// (one edge per class, smallest classes first); with more colours it runs
/// over all heterochromatic subsets of size `num_vertices - 1`; with fewer
/// colours the count is zero outright. If the candidate space exceeds
/// `budget` the enumeration refuses to start.
pub fn enumerate_heterochromatic_spanning_trees(
    g: &EdgeColouredGraph,
    keep: usize,
    budget: u64,
) -> Result<EnumerationReport, Error> {
    let v = g.num_vertices();
    let k = g.num_colours();
    let target = v - 1;

    if k < target {
        return Ok(EnumerationReport {
            exact_count: 0,
            trees: (keep > 0).then(Vec::new),
            search_space: 0,
        });
    }

    let search_space = if k == target {
        g.colour_classes()
            .iter()
            .fold(1u128, |acc, class| acc.saturating_mul(class.len() as u128))
    } else {
        heterochromatic_subset_count(g, target)
    };
    if search_space > budget as u128 {
        return Err(Error::BudgetExceeded {
            search_space,
            budget: budget as u128,
        });
    }

    let mut scan = Enumeration {
        graph: g,
        keep,
        count: 0,
        retained: Vec::new(),
        chosen: Vec::with_capacity(target),
        uf: RollbackUnionFind::new(v),
    };
    if k == target {
        let mut order: Vec<usize> = (1..=k).collect();
        order.sort_by_key(|&c| (g.class(c).len(), c));
        let classes: Vec<&[usize]> = order.iter().map(|&c| g.class(c)).collect();
        scan.transversals(&classes, 0);
    } else {
        scan.subsets(1, target);
    }

    Ok(EnumerationReport {
        exact_count: scan.count,
        trees: (keep > 0).then_some(scan.retained),
        search_space,
    })
}

/// Number of heterochromatic subsets of size `target`: the degree-`target`
/// elementary symmetric polynomial of the class sizes.
fn heterochromatic_subset_count(g: &EdgeColouredGraph, target: usize) -> u128 {
    let mut dp = vec![0u128; target + 1];
    dp[0] = 1;
    for class in g.colour_classes() {
        let size = class.len() as u128;
        for j in (1..=target).rev() {
            dp[j] = dp[j].saturating_add(dp[j - 1].saturating_mul(size));
        }
    }
    dp[target]
}

struct Enumeration<'a> {
    graph: &'a EdgeColouredGraph,
    keep: usize,
    count: u64,
    retained: Vec<EdgeSet>,
    chosen: Vec<usize>,
    uf: RollbackUnionFind,
}

impl Enumeration<'_> {
    /// `chosen` holds `num_vertices - 1` acyclic edges here, which is
    /// already a spanning tree.
    fn record_leaf(&mut self) {
        self.count += 1;
        if self.retained.len() < self.keep {
            self.retained
                .push(EdgeSet::from_indices(self.chosen.iter().copied()));
        }
    }

    fn transversals(&mut self, classes: &[&[usize]], depth: usize) {
        if depth == classes.len() {
            self.record_leaf();
            return;
        }
        for &e in classes[depth] {
            let edge = self.graph.edge(e);
            if self.uf.union(edge.u, edge.v) {
                self.chosen.push(e);
                self.transversals(classes, depth + 1);
                self.chosen.pop();
                self.uf.undo();
            }
        }
    }

    fn subsets(&mut self, colour: usize, slots: usize) {
        if slots == 0 {
            self.record_leaf();
            return;
        }
        let k = self.graph.num_colours();
        if colour > k || k - colour + 1 < slots {
            return;
        }
        for &e in self.graph.class(colour) {
            let edge = self.graph.edge(e);
            if self.uf.union(edge.u, edge.v) {
                self.chosen.push(e);
                self.subsets(colour + 1, slots - 1);
                self.chosen.pop();
                self.uf.undo();
            }
        }
        self.subsets(colour + 1, slots);
    }
}

/// Colour-removal existence test: for every set `R` of colours with
/// `1 <= |R| <= num_vertices - 2`, deleting all edges coloured in `R` must
/// leave at most `|R| + 1` connected components. On connected graphs this
/// is equivalent to the existence of a heterochromatic spanning tree.
pub fn suzuki_check(g: &EdgeColouredGraph) -> Result<bool, Error> {
    let k = g.num_colours();
    if k > COLOUR_SUBSET_LIMIT {
        return Err(Error::TooLarge(format!(
            "colour-removal check supports at most {COLOUR_SUBSET_LIMIT} colours, got {k}"
        )));
    }
    let n = g.num_vertices();
    let max_r = n.saturating_sub(2);
    for mask in 1u32..1u32 << k {
        let r = mask.count_ones() as usize;
        if r > max_r {
            continue;
        }
        let mut uf = UnionFind::new(n);
        for e in g.edges() {
            if mask >> (e.colour - 1) & 1 == 0 {
                uf.union(e.u, e.v);
            }
        }
        if uf.components() > r + 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Vertex-partition existence test: every partition of the vertices into
/// `t` parts must see at least `t - 1` distinct colours on its cross
/// edges. Equivalent to the existence of a heterochromatic spanning tree.
/// Partitions are enumerated as restricted growth strings.
pub fn akbari_alipour_check(g: &EdgeColouredGraph) -> Result<bool, Error> {
    let n = g.num_vertices();
    if n > PARTITION_VERTEX_LIMIT {
        return Err(Error::TooLarge(format!(
            "partition check supports at most {PARTITION_VERTEX_LIMIT} vertices, got {n}"
        )));
    }
    let mut block = vec![0usize; n];
    Ok(partitions_pass(g, &mut block, 1, 1))
}

fn partitions_pass(
    g: &EdgeColouredGraph,
    block: &mut Vec<usize>,
    pos: usize,
    num_blocks: usize,
) -> bool {
    if pos == block.len() {
        let mut seen = vec![false; g.num_colours() + 1];
        let mut distinct = 0;
        for e in g.edges() {
            if block[e.u] != block[e.v] && !seen[e.colour] {
                seen[e.colour] = true;
                distinct += 1;
            }
        }
        return distinct + 1 >= num_blocks;
    }
    for b in 0..=num_blocks {
        block[pos] = b;
        if !partitions_pass(g, block, pos + 1, num_blocks.max(b + 1)) {
            return false;
        }
    }
    true
}

/// Searches for an injective vertex map under which the image of `t` in
/// the complete coloured graph `g` uses pairwise distinct edge colours.
/// Returns `mapping` with `mapping[tree_vertex] = graph_vertex`, or `None`.
/// Backtracking assigns images in BFS order of `t`, candidates ascending,
/// so the result is deterministic.
pub fn heterochromatic_embedding(
    g: &EdgeColouredGraph,
    t: &Tree,
) -> Result<Option<Vec<usize>>, Error> {
    let v = g.num_vertices();
    if t.num_vertices() != v {
        return Err(Error::invalid_input(format!(
            "tree has {} vertices but the graph has {v}",
            t.num_vertices()
        )));
    }
    if !g.is_complete() {
        return Err(Error::invalid_input(
            "embedding requires a complete host graph",
        ));
    }
    if v > EMBED_VERTEX_LIMIT {
        return Err(Error::TooLarge(format!(
            "embedding supports at most {EMBED_VERTEX_LIMIT} vertices, got {v}"
        )));
    }

    let (order, parent_pos) = t.bfs_order();
    let mut image = vec![usize::MAX; v];
    let mut used_vertex = vec![false; v];
    let mut used_colour = vec![false; g.num_colours() + 1];
    if !extend_embedding(
        g,
        &parent_pos,
        &mut image,
        &mut used_vertex,
        &mut used_colour,
        0,
    ) {
        return Ok(None);
    }
    let mut mapping = vec![0usize; v];
    for (pos, &tree_vertex) in order.iter().enumerate() {
        mapping[tree_vertex] = image[pos];
    }
    Ok(Some(mapping))
}

fn extend_embedding(
    g: &EdgeColouredGraph,
    parent_pos: &[usize],
    image: &mut [usize],
    used_vertex: &mut [bool],
    used_colour: &mut [bool],
    pos: usize,
) -> bool {
    if pos == image.len() {
        return true;
    }
    for cand in 0..g.num_vertices() {
        if used_vertex[cand] {
            continue;
        }
        let colour = if pos == 0 {
            None
        } else {
            let p = image[parent_pos[pos]];
            let index = g
                .edge_index(p.min(cand), p.max(cand))
                .expect("host graph is complete");
            let colour = g.edge(index).colour;
            if used_colour[colour] {
                continue;
            }
            Some(colour)
        };
        image[pos] = cand;
        used_vertex[cand] = true;
        if let Some(c) = colour {
            used_colour[c] = true;
        }
        if extend_embedding(g, parent_pos, image, used_vertex, used_colour, pos + 1) {
            return true;
        }
        if let Some(c) = colour {
            used_colour[c] = false;
        }
        used_vertex[cand] = false;
        image[pos] = usize::MAX;
    }
    false
}
