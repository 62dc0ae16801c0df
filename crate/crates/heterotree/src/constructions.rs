//! Certified heterochromatic tree families extracted from the structure of
//! cute, nice, and beautiful colourings. Family sizes realize the proven
//! lower bounds; every member is validated before a family is returned.

use serde::Serialize;

use crate::colourings::{nice_colour_roles, verify_beautiful, Bipartition};
use crate::error::Error;
use crate::graph::{EdgeColouredGraph, EdgeSet};
use crate::matroid::find_heterochromatic_spanning_tree;

/// One side of a bipartition, as chosen per free colour class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Part {
    V1,
    V2,
}

/// How a family member was obtained: the anchor edge and avoidance
/// iteration of the nice-colouring grid, or the side-choice vector of the
/// beautiful-colouring construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    NiceFamily {
        anchor_edge: usize,
        iteration: usize,
        largest_class_edge: usize,
    },
    BeautifulFamily {
        choices: Vec<Part>,
    },
}

/// A list of pairwise-distinct heterochromatic spanning trees of a host
/// graph, each tagged with the construction choices that produced it.
#[derive(Debug, Clone, Serialize)]
pub struct TreeFamily {
    #[serde(skip)]
    host: EdgeColouredGraph,
    trees: Vec<EdgeSet>,
    provenance: Vec<Provenance>,
}

impl TreeFamily {
    /// Validates every member; the constructions are supposed to be
    /// infallible, so any failure here is an internal error.
    pub(crate) fn new(
        host: EdgeColouredGraph,
        trees: Vec<EdgeSet>,
        provenance: Vec<Provenance>,
    ) -> Result<Self, Error> {
        if trees.len() != provenance.len() {
            return Err(Error::internal("family provenance out of step with trees"));
        }
        let mut distinct = std::collections::BTreeSet::new();
        for tree in &trees {
            if !host.is_spanning_tree(tree)? || !host.is_heterochromatic(tree)? {
                return Err(Error::internal("family member is not a valid tree"));
            }
            if !distinct.insert(tree.to_vec()) {
                return Err(Error::internal("family members are not pairwise distinct"));
            }
        }
        Ok(TreeFamily {
            host,
            trees,
            provenance,
        })
    }

    pub fn host(&self) -> &EdgeColouredGraph {
        &self.host
    }

    pub fn trees(&self) -> &[EdgeSet] {
        &self.trees
    }

    pub fn provenance(&self) -> &[Provenance] {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }
}

/// A heterochromatic spanning tree of a cute-coloured graph. Existence is
/// guaranteed, so absence reports an internal error rather than an option.
pub fn cute_tree(g: &EdgeColouredGraph) -> Result<EdgeSet, Error> {
    if !g.classify().cute {
        return Err(Error::invalid_input("expected a cute colouring"));
    }
    find_heterochromatic_spanning_tree(g).ok_or_else(|| {
        Error::internal("cute colouring without a heterochromatic spanning tree")
    })
}

/// Builds the subgraph induced by the edge indices in `subset` (host
/// colours kept), plus the map from subgraph edge index back to host index.
fn restricted_graph(
    g: &EdgeColouredGraph,
    subset: &[usize],
) -> Result<(EdgeColouredGraph, Vec<usize>), Error> {
    let mut back = subset.to_vec();
    back.sort_unstable_by_key(|&e| {
        let edge = g.edge(e);
        (edge.u, edge.v)
    });
    let sub = EdgeColouredGraph::new(
        g.num_vertices(),
        back.iter().map(|&e| {
            let edge = g.edge(e);
            (edge.u, edge.v, edge.colour)
        }),
    )?;
    Ok((sub, back))
}

/// `ceil((n+1)/2) * floor((n+1)/2)` distinct heterochromatic spanning
/// trees of a nicely coloured complete graph.
///
/// Writing `C_i` for the class with `i` edges and `mid = ceil((n+1)/2)`:
/// for each anchor edge `e` of `C_mid` and each iteration `t`, the
/// subgraph keeping all other classes whole, `C_mid` cut down to `{e}`,
/// and `C_n` cut down to its `mid` lowest-indexed edges not used (as the
/// colour-`n` tree edge) by this anchor's earlier iterations is cute, and
/// its guaranteed tree is a new family member. For `n = 2` the two special
/// classes coincide and the subgraph is simply everything outside `C_2`
/// plus the anchor.
pub fn nice_tree_family(g: &EdgeColouredGraph) -> Result<TreeFamily, Error> {
    if !g.classify().nice {
        return Err(Error::invalid_input("expected a nice colouring"));
    }
    let n = g.num_colours();
    if n < 2 {
        return Err(Error::invalid_input("family construction requires n >= 2"));
    }
    let roles = nice_colour_roles(g);
    let mid = (n + 1).div_ceil(2);
    let mid_colour = roles[mid - 1];
    let top_colour = roles[n - 1];
    let iterations = n + 1 - mid;

    let base: Vec<usize> = (0..g.edge_count())
        .filter(|&e| {
            let c = g.edge(e).colour;
            c != mid_colour && c != top_colour
        })
        .collect();

    let mut trees: Vec<EdgeSet> = Vec::new();
    let mut provenance = Vec::new();
    for &anchor in g.class(mid_colour) {
        let mut used_top: Vec<usize> = Vec::new();
        for iteration in 0..iterations {
            let mut subset = base.clone();
            subset.push(anchor);
            if top_colour != mid_colour {
                subset.extend(
                    g.class(top_colour)
                        .iter()
                        .copied()
                        .filter(|e| !used_top.contains(e))
                        .take(mid),
                );
            }
            let (sub, back) = restricted_graph(g, &subset)?;
            let tree: EdgeSet = cute_tree(&sub)?.iter().map(|i| back[i]).collect();
            let top_edge = tree
                .iter()
                .find(|&e| g.edge(e).colour == top_colour)
                .ok_or_else(|| Error::internal("family tree missing its largest-class edge"))?;
            if top_colour != mid_colour {
                used_top.push(top_edge);
            }
            trees.push(tree);
            provenance.push(Provenance::NiceFamily {
                anchor_edge: anchor,
                iteration,
                largest_class_edge: top_edge,
            });
        }
    }
    TreeFamily::new(g.clone(), trees, provenance)
}

/// Indices of the free classes of a beautiful `n`-colouring: `i` in
/// `2..=n` with `i` and `n` of opposite parity. Each contributes one
/// binary side choice, `floor((n-1)/2)` in total.
pub fn free_class_indices(n: usize) -> Vec<usize> {
    (2..=n).filter(|i| i % 2 != n % 2).collect()
}

fn choice_edge_subset(
    g: &EdgeColouredGraph,
    roles: &[usize],
    in_v1: &[bool],
    free: &[usize],
    choices: &[Part],
) -> Vec<usize> {
    let n = g.num_colours();
    let mut subset = Vec::new();
    for i in 1..=n {
        let class = g.class(roles[i - 1]);
        if let Some(slot) = free.iter().position(|&f| f == i) {
            let want_v1 = choices[slot] == Part::V1;
            subset.extend(class.iter().copied().filter(|&e| {
                let edge = g.edge(e);
                in_v1[edge.u] == want_v1 && in_v1[edge.v] == want_v1
            }));
        } else {
            subset.extend(class.iter().copied());
        }
    }
    subset
}

/// The spanning subgraph that keeps, for each free class, only its edges
/// inside the chosen part, and keeps every other class whole. `choices`
/// lists one side per free class index, ascending.
pub fn beautiful_subgraph(
    g: &EdgeColouredGraph,
    bipartition: &Bipartition,
    choices: &[Part],
) -> Result<EdgeColouredGraph, Error> {
    let verified = verify_beautiful(g)?
        .ok_or_else(|| Error::invalid_input("colouring is not beautiful"))?;
    if &verified != bipartition {
        return Err(Error::invalid_input(
            "bipartition is not the verified witness",
        ));
    }
    let roles = nice_colour_roles(g);
    let free = free_class_indices(g.num_colours());
    if choices.len() != free.len() {
        return Err(Error::invalid_input(format!(
            "expected {} side choices, got {}",
            free.len(),
            choices.len()
        )));
    }
    let mut in_v1 = vec![false; g.num_vertices()];
    for &v in &bipartition.v1 {
        in_v1[v] = true;
    }
    let subset = choice_edge_subset(g, &roles, &in_v1, &free, choices);
    Ok(restricted_graph(g, &subset)?.0)
}

/// `2^(floor((n-1)/2))` distinct heterochromatic spanning trees of a
/// beautifully coloured complete graph: one per side-choice vector, found
/// by the intersection engine inside the corresponding choice subgraph.
/// Choice vectors are enumerated with the first free class as the lowest
/// bit and `V1` for a zero bit.
pub fn beautiful_tree_family(g: &EdgeColouredGraph) -> Result<TreeFamily, Error> {
    let bipartition = verify_beautiful(g)?
        .ok_or_else(|| Error::invalid_input("colouring is not beautiful"))?;
    let n = g.num_colours();
    if n < 2 {
        return Err(Error::invalid_input("family construction requires n >= 2"));
    }
    let roles = nice_colour_roles(g);
    let free = free_class_indices(n);
    let mut in_v1 = vec![false; g.num_vertices()];
    for &v in &bipartition.v1 {
        in_v1[v] = true;
    }

    let mut trees: Vec<EdgeSet> = Vec::new();
    let mut provenance = Vec::new();
    for mask in 0u32..1u32 << free.len() {
        let choices: Vec<Part> = (0..free.len())
            .map(|j| if mask >> j & 1 == 0 { Part::V1 } else { Part::V2 })
            .collect();
        let subset = choice_edge_subset(g, &roles, &in_v1, &free, &choices);
        let (sub, back) = restricted_graph(g, &subset)?;
        let found = find_heterochromatic_spanning_tree(&sub).ok_or_else(|| {
            Error::internal("choice subgraph without a heterochromatic spanning tree")
        })?;
        trees.push(found.iter().map(|i| back[i]).collect());
        provenance.push(Provenance::BeautifulFamily { choices });
    }
    TreeFamily::new(g.clone(), trees, provenance)
}
