//! Independence oracles for the graphic matroid (acyclic edge sets) and the
//! colour-partition matroid (at most one edge per colour), the augmenting
//! path intersection engine, and exhaustive verifiers for the rank min-max.
//!
//! A common independent set of size `num_vertices - 1` is exactly a
//! heterochromatic spanning tree, which is what the engine is for.

use crate::error::Error;
use crate::graph::{EdgeColouredGraph, EdgeSet};
use crate::unionfind::UnionFind;

/// Exhaustive subset scans are limited to this many edges (2^24 subsets).
pub const EXHAUSTIVE_EDGE_LIMIT: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatroidKind {
    Graphic,
    Partition,
}

/// Independence predicate over edge sets of a fixed host graph.
#[derive(Debug, Clone, Copy)]
pub struct IndependenceOracle<'a> {
    graph: &'a EdgeColouredGraph,
    kind: MatroidKind,
}

impl<'a> IndependenceOracle<'a> {
    pub fn graphic(graph: &'a EdgeColouredGraph) -> Self {
        IndependenceOracle {
            graph,
            kind: MatroidKind::Graphic,
        }
    }

    pub fn partition(graph: &'a EdgeColouredGraph) -> Self {
        IndependenceOracle {
            graph,
            kind: MatroidKind::Partition,
        }
    }

    pub fn kind(&self) -> MatroidKind {
        self.kind
    }

    pub fn is_independent(&self, x: &EdgeSet) -> Result<bool, Error> {
        match self.kind {
            MatroidKind::Graphic => graphic_independent(self.graph, x),
            MatroidKind::Partition => partition_independent(self.graph, x),
        }
    }
}

/// True iff `x` is acyclic.
pub fn graphic_independent(g: &EdgeColouredGraph, x: &EdgeSet) -> Result<bool, Error> {
    g.validate_edge_set(x)?;
    let mut uf = UnionFind::new(g.num_vertices());
    for i in x.iter() {
        let e = g.edge(i);
        if !uf.union(e.u, e.v) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff `x` has at most one edge per colour.
pub fn partition_independent(g: &EdgeColouredGraph, x: &EdgeSet) -> Result<bool, Error> {
    g.is_heterochromatic(x)
}

/// Rank of `x` in the graphic matroid: `num_vertices - w(x)`.
pub fn graphic_rank(g: &EdgeColouredGraph, x: &EdgeSet) -> Result<usize, Error> {
    Ok(g.num_vertices() - g.components_count(x)?)
}

/// Rank of the complement of `x` in the partition matroid, via the
/// identity `r(E \ x) = (number of colours) - c(x)`.
pub fn partition_corank(g: &EdgeColouredGraph, x: &EdgeSet) -> Result<usize, Error> {
    Ok(g.num_colours() - g.contained_classes_count(x)?)
}

/// Output of the intersection engine. `certificate` is a minimizing set for
/// the rank min-max; the augmenting-path engine leaves it empty, the
/// brute-force verifier produces one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionResult {
    pub common_independent: EdgeSet,
    pub certificate: Option<EdgeSet>,
}

/// Maximum-cardinality edge set that is simultaneously acyclic and
/// heterochromatic, by the standard exchange-digraph augmenting-path
/// scheme.
///
/// Starting from the empty set, each round builds the digraph with arcs
/// `x -> y` when `I - x + y` is acyclic and `y -> x` when `I - x + y` is
/// heterochromatic (`x` in the current set `I`, `y` outside), finds a
/// shortest path from the acyclic-addable elements to the
/// colour-addable elements by BFS (lowest edge index first), and swaps
/// along it. No path means `I` is maximum. Fully deterministic.
pub fn max_common_independent(g: &EdgeColouredGraph) -> IntersectionResult {
    let m = g.edge_count();
    let mut in_set = vec![false; m];
    let mut colour_member = vec![usize::MAX; g.num_colours() + 1];

    loop {
        let members: Vec<usize> = (0..m).filter(|&i| in_set[i]).collect();

        let mut parent = vec![usize::MAX; m];
        let mut seen = vec![false; m];
        let mut queue = std::collections::VecDeque::new();
        for y in 0..m {
            if !in_set[y] && acyclic_with(g, &members, usize::MAX, y) {
                seen[y] = true;
                queue.push_back(y);
            }
        }

        let mut reached_target = None;
        while let Some(e) = queue.pop_front() {
            if !in_set[e] {
                let colour = g.edge(e).colour;
                if colour_member[colour] == usize::MAX {
                    reached_target = Some(e);
                    break;
                }
                // swapping e for the same-coloured member keeps the set
                // heterochromatic
                let x = colour_member[colour];
                if !seen[x] {
                    seen[x] = true;
                    parent[x] = e;
                    queue.push_back(x);
                }
            } else {
                for y in 0..m {
                    if !in_set[y] && !seen[y] && acyclic_with(g, &members, e, y) {
                        seen[y] = true;
                        parent[y] = e;
                        queue.push_back(y);
                    }
                }
            }
        }

        let Some(mut e) = reached_target else {
            break;
        };
        loop {
            in_set[e] = !in_set[e];
            if parent[e] == usize::MAX {
                break;
            }
            e = parent[e];
        }
        for slot in colour_member.iter_mut() {
            *slot = usize::MAX;
        }
        for i in 0..m {
            if in_set[i] {
                colour_member[g.edge(i).colour] = i;
            }
        }
    }

    IntersectionResult {
        common_independent: (0..m).filter(|&i| in_set[i]).collect(),
        certificate: None,
    }
}

/// True iff `members` minus `skip` plus `extra` is acyclic.
fn acyclic_with(g: &EdgeColouredGraph, members: &[usize], skip: usize, extra: usize) -> bool {
    let mut uf = UnionFind::new(g.num_vertices());
    for &i in members.iter().chain(std::iter::once(&extra)) {
        if i == skip {
            continue;
        }
        let e = g.edge(i);
        if !uf.union(e.u, e.v) {
            return false;
        }
    }
    true
}

/// Heterochromatic spanning tree of `g` if one exists: a common independent
/// set of full size `num_vertices - 1`. A single-vertex graph yields the
/// empty tree. Deterministic; on the 3-vertex graph with edges
/// `01:1, 02:2, 12:1` the result is `{01, 02}`.
pub fn find_heterochromatic_spanning_tree(g: &EdgeColouredGraph) -> Option<EdgeSet> {
    let result = max_common_independent(g);
    if result.common_independent.len() == g.num_vertices() - 1 {
        Some(result.common_independent)
    } else {
        None
    }
}

/// Outcome of the exhaustive component/colour-count inequality check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lemma1Verdict {
    Holds,
    ViolatedBy(EdgeSet),
}

impl Lemma1Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Lemma1Verdict::Holds)
    }
}

fn require_exhaustible(g: &EdgeColouredGraph) -> Result<(), Error> {
    if g.edge_count() > EXHAUSTIVE_EDGE_LIMIT {
        return Err(Error::TooLarge(format!(
            "exhaustive subset scan supports at most {EXHAUSTIVE_EDGE_LIMIT} edges, got {}",
            g.edge_count()
        )));
    }
    Ok(())
}

/// Checks `w(X) + c(X) <= num_vertices` for every `X ⊆ E(g)` by scanning
/// all subsets; when this holds a heterochromatic spanning tree exists.
/// Requires the graph to have exactly `num_vertices - 1` colours and at
/// most [`EXHAUSTIVE_EDGE_LIMIT`] edges. On failure the first violating
/// subset in ascending bitmask order is returned.
pub fn lemma1_condition_holds(g: &EdgeColouredGraph) -> Result<Lemma1Verdict, Error> {
    if g.num_colours() != g.num_vertices() - 1 {
        return Err(Error::invalid_input(format!(
            "condition check requires {} colours on {} vertices, got {}",
            g.num_vertices() - 1,
            g.num_vertices(),
            g.num_colours()
        )));
    }
    require_exhaustible(g)?;
    let m = g.edge_count();
    let class_masks = colour_class_masks(g);
    let bound = g.num_vertices();
    for mask in 0u32..1u32 << m {
        if w_of_mask(g, mask) + c_of_mask(&class_masks, mask) > bound {
            return Ok(Lemma1Verdict::ViolatedBy(mask_to_set(mask)));
        }
    }
    Ok(Lemma1Verdict::Holds)
}

/// Brute-force minimizer of
/// `graphic_rank(X) + partition_corank(X)` over all `X ⊆ E(g)`; by the
/// intersection min-max the value equals the maximum common independent
/// size. Ties go to the lowest bitmask. Requires at most
/// [`EXHAUSTIVE_EDGE_LIMIT`] edges.
pub fn min_rank_cover(g: &EdgeColouredGraph) -> Result<(EdgeSet, usize), Error> {
    require_exhaustible(g)?;
    let m = g.edge_count();
    let class_masks = colour_class_masks(g);
    let mut best_mask = 0u32;
    let mut best = usize::MAX;
    for mask in 0u32..1u32 << m {
        let r1 = g.num_vertices() - w_of_mask(g, mask);
        let r2 = g.num_colours() - c_of_mask(&class_masks, mask);
        if r1 + r2 < best {
            best = r1 + r2;
            best_mask = mask;
        }
    }
    Ok((mask_to_set(best_mask), best))
}

fn colour_class_masks(g: &EdgeColouredGraph) -> Vec<u32> {
    g.colour_classes()
        .iter()
        .map(|class| class.iter().fold(0u32, |acc, &i| acc | 1 << i))
        .collect()
}

fn w_of_mask(g: &EdgeColouredGraph, mask: u32) -> usize {
    let mut uf = UnionFind::new(g.num_vertices());
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let e = g.edge(i);
        uf.union(e.u, e.v);
    }
    uf.components()
}

fn c_of_mask(class_masks: &[u32], mask: u32) -> usize {
    class_masks
        .iter()
        .filter(|&&cm| cm & mask == cm)
        .count()
}

fn mask_to_set(mask: u32) -> EdgeSet {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}
