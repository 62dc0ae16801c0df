//! Labeled trees: validation, Prüfer decoding, uniform sampling, and the
//! BFS vertex order used by the supergraph construction.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::unionfind::UnionFind;

/// Wire form: `{"vertices": N, "tree_edges": [[u,v],...]}` or
/// `{"prufer": [...]}` (vertex count implied by sequence length).
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TreeJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    vertices: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tree_edges: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    prufer: Option<Vec<usize>>,
}

/// A labeled tree on vertices `0..num_vertices`. Edges are stored in
/// canonical order (`u < v`, sorted ascending).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TreeJson", into = "TreeJson")]
pub struct Tree {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<TreeJson> for Tree {
    type Error = Error;

    fn try_from(json: TreeJson) -> Result<Self, Error> {
        match (json.tree_edges, json.prufer) {
            (Some(_), Some(_)) => Err(Error::invalid_input(
                "tree takes either tree_edges or prufer, not both",
            )),
            (Some(edges), None) => {
                let vertices = json.vertices.ok_or_else(|| {
                    Error::invalid_input("tree_edges form requires a vertices field")
                })?;
                Tree::new(vertices, edges)
            }
            (None, Some(seq)) => {
                let tree = Tree::from_prufer(&seq)?;
                if let Some(v) = json.vertices {
                    if v != tree.num_vertices {
                        return Err(Error::invalid_input(format!(
                            "prufer sequence of length {} encodes {} vertices, not {v}",
                            seq.len(),
                            tree.num_vertices
                        )));
                    }
                }
                Ok(tree)
            }
            (None, None) => Err(Error::invalid_input(
                "tree requires a tree_edges or prufer field",
            )),
        }
    }
}

impl From<Tree> for TreeJson {
    fn from(t: Tree) -> TreeJson {
        TreeJson {
            vertices: Some(t.num_vertices),
            tree_edges: Some(t.edges),
            prufer: None,
        }
    }
}

impl Tree {
    /// Builds a tree from an edge list in any order/orientation, verifying
    /// it really is a tree.
    pub fn new(
        num_vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, Error> {
        if num_vertices == 0 {
            return Err(Error::invalid_input("tree must have at least one vertex"));
        }
        let mut canonical = Vec::new();
        let mut uf = UnionFind::new(num_vertices);
        for (a, b) in edges {
            if a == b {
                return Err(Error::invalid_input(format!("loop at vertex {a}")));
            }
            let (u, v) = (a.min(b), a.max(b));
            if v >= num_vertices {
                return Err(Error::invalid_input(format!(
                    "edge ({a}, {b}) endpoint out of range for {num_vertices} vertices"
                )));
            }
            if !uf.union(u, v) {
                return Err(Error::invalid_input(format!(
                    "edges contain a cycle through ({a}, {b})"
                )));
            }
            canonical.push((u, v));
        }
        if canonical.len() != num_vertices - 1 {
            return Err(Error::invalid_input(format!(
                "a tree on {num_vertices} vertices needs {} edges, got {}",
                num_vertices - 1,
                canonical.len()
            )));
        }
        canonical.sort_unstable();
        Ok(Tree {
            num_vertices,
            edges: canonical,
        })
    }

    /// Decodes a Prüfer sequence; a sequence of length L yields the tree on
    /// L + 2 vertices it encodes.
    pub fn from_prufer(seq: &[usize]) -> Result<Self, Error> {
        let n = seq.len() + 2;
        if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
            return Err(Error::invalid_input(format!(
                "prufer entry {bad} out of range for {n} vertices"
            )));
        }
        let mut degree = vec![1usize; n];
        for &x in seq {
            degree[x] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        // pointer scan: always attach the smallest remaining leaf
        let mut ptr = 0;
        while degree[ptr] != 1 {
            ptr += 1;
        }
        let mut leaf = ptr;
        for &x in seq {
            edges.push((leaf.min(x), leaf.max(x)));
            degree[x] -= 1;
            if degree[x] == 1 && x < ptr {
                leaf = x;
            } else {
                ptr += 1;
                while degree[ptr] != 1 {
                    ptr += 1;
                }
                leaf = ptr;
            }
        }
        edges.push((leaf, n - 1));
        Tree::new(n, edges)
    }

    /// Uniformly random labeled tree, via a random Prüfer sequence.
    pub fn random(num_vertices: usize, rng: &mut impl Rng) -> Result<Self, Error> {
        if num_vertices == 0 {
            return Err(Error::invalid_input("tree must have at least one vertex"));
        }
        if num_vertices == 1 {
            return Tree::new(1, []);
        }
        let seq: Vec<usize> = (0..num_vertices - 2)
            .map(|_| rng.gen_range(0..num_vertices))
            .collect();
        Tree::from_prufer(&seq)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Canonical edge list: `u < v`, ascending.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_vertices];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// BFS order from vertex 0 (ties broken by vertex label). Returns
    /// `(order, parent_pos)` where `order[p]` is the vertex at position `p`
    /// and `parent_pos[p]` is the position of its unique earlier neighbour
    /// (`parent_pos[0] = 0`, unused). Every prefix of the order induces a
    /// subtree.
    pub fn bfs_order(&self) -> (Vec<usize>, Vec<usize>) {
        let mut adj = vec![Vec::new(); self.num_vertices];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let mut order = Vec::with_capacity(self.num_vertices);
        let mut parent_pos = vec![0; self.num_vertices];
        let mut pos_of = vec![usize::MAX; self.num_vertices];
        let mut queue = std::collections::VecDeque::from([0usize]);
        pos_of[0] = 0;
        order.push(0);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if pos_of[y] == usize::MAX {
                    pos_of[y] = order.len();
                    parent_pos[order.len()] = pos_of[x];
                    order.push(y);
                    queue.push_back(y);
                }
            }
        }
        (order, parent_pos)
    }
}

/// Iterator over every labeled tree on `num_vertices` vertices, in Prüfer
/// sequence order. Yields each tree exactly once.
pub fn all_trees(num_vertices: usize) -> impl Iterator<Item = Tree> {
    let total: usize = if num_vertices <= 2 {
        1
    } else {
        num_vertices.pow(num_vertices as u32 - 2)
    };
    (0..total).map(move |mut code| {
        if num_vertices <= 2 {
            return Tree::new(num_vertices, (1..num_vertices).map(|v| (0, v))).unwrap();
        }
        let mut seq = vec![0; num_vertices - 2];
        for slot in seq.iter_mut() {
            *slot = code % num_vertices;
            code /= num_vertices;
        }
        Tree::from_prufer(&seq).unwrap()
    })
}
