//! Edge-coloured simple graphs and the two statistics that drive the
//! spanning-tree machinery: `w(X)`, the number of connected components of
//! the spanning subgraph with edge set `X`, and `c(X)`, the number of
//! colour classes entirely contained in `X`.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::unionfind::UnionFind;

/// One edge of an [`EdgeColouredGraph`]: endpoints in canonical order
/// (`u < v`) plus a colour label `>= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub colour: usize,
}

/// Wire form of a graph: `{"vertices": N, "edges": [[u, v, colour], ...]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    vertices: usize,
    edges: Vec<(usize, usize, usize)>,
}

/// A simple graph with a colour label per edge.
///
/// Invariants, enforced at construction:
/// - `0 <= u < v < num_vertices` for every edge, no duplicate pairs;
/// - colour labels form a contiguous range `1..=k` with every colour used;
/// - edge order is stable: an edge's index is its position in the list,
///   and every [`EdgeSet`] refers to these indices.
///
/// The type is immutable after construction and safe to share across
/// threads for concurrent reads.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct EdgeColouredGraph {
    num_vertices: usize,
    edges: Vec<Edge>,
    num_colours: usize,
    // classes[c - 1] lists the indices of the edges coloured c, ascending
    classes: Vec<Vec<usize>>,
    index_of: HashMap<(usize, usize), usize>,
}

impl PartialEq for EdgeColouredGraph {
    fn eq(&self, other: &Self) -> bool {
        self.num_vertices == other.num_vertices && self.edges == other.edges
    }
}

impl Eq for EdgeColouredGraph {}

impl TryFrom<GraphJson> for EdgeColouredGraph {
    type Error = Error;

    fn try_from(json: GraphJson) -> Result<Self, Error> {
        EdgeColouredGraph::new(json.vertices, json.edges)
    }
}

impl From<EdgeColouredGraph> for GraphJson {
    fn from(g: EdgeColouredGraph) -> GraphJson {
        GraphJson {
            vertices: g.num_vertices,
            edges: g.edges.iter().map(|e| (e.u, e.v, e.colour)).collect(),
        }
    }
}

impl EdgeColouredGraph {
    /// Builds a graph from `(u, v, colour)` triples, validating every invariant.
    pub fn new(
        num_vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self, Error> {
        if num_vertices == 0 {
            return Err(Error::invalid_graph("graph must have at least one vertex"));
        }
        let mut parsed = Vec::new();
        let mut index_of = HashMap::new();
        let mut used_colours = BTreeSet::new();
        for (u, v, colour) in edges {
            if u >= v {
                return Err(Error::invalid_graph(format!(
                    "edge ({u}, {v}) endpoints must satisfy u < v"
                )));
            }
            if v >= num_vertices {
                return Err(Error::invalid_graph(format!(
                    "edge ({u}, {v}) endpoint out of range for {num_vertices} vertices"
                )));
            }
            if colour == 0 {
                return Err(Error::invalid_graph(format!(
                    "edge ({u}, {v}) colour must be >= 1"
                )));
            }
            if index_of.insert((u, v), parsed.len()).is_some() {
                return Err(Error::invalid_graph(format!("duplicate edge ({u}, {v})")));
            }
            used_colours.insert(colour);
            parsed.push(Edge { u, v, colour });
        }
        let num_colours = used_colours.iter().next_back().copied().unwrap_or(0);
        if used_colours.len() != num_colours {
            return Err(Error::invalid_graph(format!(
                "colour labels must form a contiguous range 1..={num_colours} with every colour used"
            )));
        }
        let mut classes = vec![Vec::new(); num_colours];
        for (i, e) in parsed.iter().enumerate() {
            classes[e.colour - 1].push(i);
        }
        Ok(EdgeColouredGraph {
            num_vertices,
            edges: parsed,
            num_colours,
            classes,
            index_of,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Edge {
        self.edges[index]
    }

    pub fn num_colours(&self) -> usize {
        self.num_colours
    }

    /// Edge indices of colour class `colour` (1-based label), ascending.
    pub fn class(&self, colour: usize) -> &[usize] {
        &self.classes[colour - 1]
    }

    /// All colour classes, indexed by `colour - 1`.
    pub fn colour_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Index of the edge with endpoints `(u, v)`, if present (`u < v`).
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.index_of.get(&(u, v)).copied()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.num_vertices * (self.num_vertices - 1) / 2
    }

    /// Checks that every index in `x` refers to an edge of this graph.
    pub fn validate_edge_set(&self, x: &EdgeSet) -> Result<(), Error> {
        match x.iter().next_back() {
            Some(max) if max >= self.edges.len() => Err(Error::InvalidEdgeSet(format!(
                "edge index {max} out of range for {} edges",
                self.edges.len()
            ))),
            _ => Ok(()),
        }
    }

    /// `w(X)`: the number of connected components of the spanning subgraph
    /// with edge set `x` (all vertices kept).
    pub fn components_count(&self, x: &EdgeSet) -> Result<usize, Error> {
        self.validate_edge_set(x)?;
        let mut uf = UnionFind::new(self.num_vertices);
        for i in x.iter() {
            let e = self.edges[i];
            uf.union(e.u, e.v);
        }
        Ok(uf.components())
    }

    /// `c(X)`: the number of colour classes entirely contained in `x`.
    /// A class that merely intersects `x` does not count.
    pub fn contained_classes_count(&self, x: &EdgeSet) -> Result<usize, Error> {
        self.validate_edge_set(x)?;
        Ok(self
            .classes
            .iter()
            .filter(|class| class.iter().all(|&i| x.contains(i)))
            .count())
    }

    /// True iff no two edges of `x` share a colour.
    pub fn is_heterochromatic(&self, x: &EdgeSet) -> Result<bool, Error> {
        self.validate_edge_set(x)?;
        let mut seen = vec![false; self.num_colours + 1];
        for i in x.iter() {
            let colour = self.edges[i].colour;
            if seen[colour] {
                return Ok(false);
            }
            seen[colour] = true;
        }
        Ok(true)
    }

    /// True iff `x` has `num_vertices - 1` edges and spans one component.
    pub fn is_spanning_tree(&self, x: &EdgeSet) -> Result<bool, Error> {
        Ok(x.len() == self.num_vertices - 1 && self.components_count(x)? == 1)
    }

    /// Classifies the colouring against the size-multiset patterns;
    /// all satisfied verdicts are reported.
    pub fn classify(&self) -> ColouringClass {
        let mut sizes: Vec<usize> = self.classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        let v = self.num_vertices;
        let k = self.num_colours;
        let m2 = v / 2; // the m of K_{m,m} when v is even

        let nice = self.is_complete() && k == v - 1 && sizes.iter().copied().eq(1..v);

        let cute = v >= 3
            && k == v - 1
            && self.edges.len() == 1 + (v - 1) * (v - 2) / 2
            && sizes == cute_sizes(v - 1);

        let bipartite_nice = v >= 2
            && v.is_multiple_of(2)
            && k == 2 * m2 - 1
            && self.edges.len() == m2 * m2
            && sizes == bipartite_nice_sizes(m2)
            && self.is_complete_bipartite_balanced();

        let bipartite_cute = v >= 4
            && v.is_multiple_of(2)
            && k == 2 * m2 - 1
            && self.edges.len() == 1 + m2 * (m2 - 1)
            && sizes == bipartite_cute_sizes(m2)
            && self.has_balanced_bipartition();

        ColouringClass {
            nice,
            cute,
            bipartite_nice,
            bipartite_cute,
            class_sizes: sizes,
        }
    }

    /// Proper 2-colouring of the spanning subgraph with edge set `subset`,
    /// component by component. Returns per-component `(part0, part1)` vertex
    /// lists, or None if some component has an odd cycle. Isolated vertices
    /// form singleton components in part0.
    pub(crate) fn two_colour(&self, subset: &[usize]) -> Option<Vec<(Vec<usize>, Vec<usize>)>> {
        let mut adj = vec![Vec::new(); self.num_vertices];
        for &i in subset {
            let e = self.edges[i];
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        let mut side = vec![usize::MAX; self.num_vertices];
        let mut components = Vec::new();
        for start in 0..self.num_vertices {
            if side[start] != usize::MAX {
                continue;
            }
            side[start] = 0;
            let mut part0 = vec![start];
            let mut part1 = Vec::new();
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if side[y] == usize::MAX {
                        side[y] = 1 - side[x];
                        if side[y] == 0 {
                            part0.push(y);
                        } else {
                            part1.push(y);
                        }
                        queue.push_back(y);
                    } else if side[y] == side[x] {
                        return None;
                    }
                }
            }
            components.push((part0, part1));
        }
        Some(components)
    }

    /// True iff the graph is exactly K_{m,m} for m = num_vertices / 2.
    fn is_complete_bipartite_balanced(&self) -> bool {
        let all: Vec<usize> = (0..self.edges.len()).collect();
        let Some(components) = self.two_colour(&all) else {
            return false;
        };
        if components.len() != 1 {
            return false;
        }
        let (a, b) = &components[0];
        let m = self.num_vertices / 2;
        a.len() == m && b.len() == m && self.edges.len() == m * m
    }

    /// True iff the vertex set splits into two halves of size m with every
    /// edge crossing, i.e. the graph is a spanning subgraph of some K_{m,m}.
    fn has_balanced_bipartition(&self) -> bool {
        let all: Vec<usize> = (0..self.edges.len()).collect();
        let Some(components) = self.two_colour(&all) else {
            return false;
        };
        let m = self.num_vertices / 2;
        // each component contributes part0 or part1 to the first half
        let mut reachable = vec![false; m + 1];
        reachable[0] = true;
        for (a, b) in &components {
            let mut next = vec![false; m + 1];
            for s in 0..=m {
                if !reachable[s] {
                    continue;
                }
                if s + a.len() <= m {
                    next[s + a.len()] = true;
                }
                if s + b.len() <= m {
                    next[s + b.len()] = true;
                }
            }
            reachable = next;
        }
        reachable[m]
    }
}

fn cute_sizes(n: usize) -> Vec<usize> {
    // 1, 1, 2, ..., n-1
    let mut sizes = vec![1];
    sizes.extend(1..n);
    sizes
}

fn bipartite_nice_sizes(m: usize) -> Vec<usize> {
    // 1, 1, 2, 2, ..., m-1, m-1, m
    let mut sizes = Vec::with_capacity(2 * m - 1);
    for s in 1..m {
        sizes.push(s);
        sizes.push(s);
    }
    sizes.push(m);
    sizes
}

fn bipartite_cute_sizes(m: usize) -> Vec<usize> {
    // 1, 1, 1, 2, 2, ..., m-1, m-1
    let mut sizes = vec![1];
    for s in 1..m {
        sizes.push(s);
        sizes.push(s);
    }
    sizes.sort_unstable();
    sizes
}

/// A subset of the edge indices of a host graph. Iteration is always in
/// ascending index order, so derived output is deterministic.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet {
    members: BTreeSet<usize>,
}

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet::default()
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        EdgeSet {
            members: indices.into_iter().collect(),
        }
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.contains(&index)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.iter().copied().collect()
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        EdgeSet::from_indices(iter)
    }
}

/// Classification verdict for a colouring. Multiple flags can hold at the
/// same time on tiny graphs, so each pattern is reported separately;
/// `class_sizes` is the sorted multiset of colour-class sizes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColouringClass {
    pub nice: bool,
    pub cute: bool,
    pub bipartite_nice: bool,
    pub bipartite_cute: bool,
    pub class_sizes: Vec<usize>,
}

impl ColouringClass {
    /// True when no named pattern applies.
    pub fn is_other(&self) -> bool {
        !(self.nice || self.cute || self.bipartite_nice || self.bipartite_cute)
    }
}
