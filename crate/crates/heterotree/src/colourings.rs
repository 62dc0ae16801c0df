//! Generators for the named colouring families and the verifier for the
//! beautiful property.
//!
//! Random generators take an explicit seed and are deterministic per seed.
//! All generators emit edges in lexicographic `(u, v)` order so serialized
//! output is canonical.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Error;
use crate::graph::{EdgeColouredGraph, EdgeSet};
use crate::tree::Tree;
use crate::unionfind::UnionFind;

/// Vertex bipartition with the convention `|v2| >= |v1|`; both halves are
/// sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
}

fn complete_edges(num_vertices: usize) -> Vec<(usize, usize)> {
    let mut pool = Vec::with_capacity(num_vertices * (num_vertices - 1) / 2);
    for u in 0..num_vertices {
        for v in (u + 1)..num_vertices {
            pool.push((u, v));
        }
    }
    pool
}

/// Shuffles `pool` with the seeded generator, takes a prefix covering
/// `sizes`, and colours consecutive blocks: colour `i` gets `sizes[i - 1]`
/// edges. Leftover pool edges are dropped, so the chosen edge subset is
/// uniform among subsets of that cardinality.
fn random_classes(
    num_vertices: usize,
    mut pool: Vec<(usize, usize)>,
    sizes: &[usize],
    seed: u64,
) -> EdgeColouredGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pool.shuffle(&mut rng);
    let mut coloured = Vec::new();
    let mut cursor = 0;
    for (i, &size) in sizes.iter().enumerate() {
        for _ in 0..size {
            let (u, v) = pool[cursor];
            cursor += 1;
            coloured.push((u, v, i + 1));
        }
    }
    coloured.sort_unstable();
    EdgeColouredGraph::new(num_vertices, coloured).expect("generated edges are valid")
}

/// K_{n+1} on vertices `0..=n` where edge `(s, t)` gets colour `|t - s|`.
/// Colour `c` is used on exactly `n - c + 1` edges. `n = 0` yields the
/// degenerate single-vertex graph with no edges.
pub fn graceful_colouring(n: usize) -> EdgeColouredGraph {
    let edges = complete_edges(n + 1)
        .into_iter()
        .map(|(u, v)| (u, v, v - u));
    EdgeColouredGraph::new(n + 1, edges).expect("generated edges are valid")
}

/// K_{n+1} built by attaching vertices `1..=n` in order, colouring the
/// star from vertex `i` back to `0..i` with colour `i`. Class sizes are
/// `1, 2, ..., n`, so the colouring is nice.
pub fn stellar_colouring(n: usize) -> EdgeColouredGraph {
    let edges = complete_edges(n + 1).into_iter().map(|(u, v)| (u, v, v));
    EdgeColouredGraph::new(n + 1, edges).expect("generated edges are valid")
}

/// Uniformly random partition of `E(K_{n+1})` into classes of sizes
/// `1, 2, ..., n` where colour `i` has `i` edges.
pub fn random_nice_colouring(n: usize, seed: u64) -> EdgeColouredGraph {
    let sizes: Vec<usize> = (1..=n).collect();
    random_classes(n + 1, complete_edges(n + 1), &sizes, seed)
}

/// Random graph on `n + 1` vertices with `1 + C(n, 2)` edges (uniform
/// among such subsets of `E(K_{n+1})`), partitioned into classes of sizes
/// `1, 1, 2, ..., n - 1`: colour 1 has one edge and colour `k >= 2` has
/// `k - 1` edges.
pub fn random_cute_colouring(n: usize, seed: u64) -> Result<EdgeColouredGraph, Error> {
    if n < 2 {
        return Err(Error::invalid_input("cute colourings require n >= 2"));
    }
    let mut sizes = vec![1];
    sizes.extend(1..n);
    Ok(random_classes(n + 1, complete_edges(n + 1), &sizes, seed))
}

/// K_{m,m} with parts `{0..m-1}` and `{m..2m-1}`, randomly partitioned
/// into classes of sizes `1, 1, 2, 2, ..., m-1, m-1, m`: colours `2j - 1`
/// and `2j` have `j` edges each, colour `2m - 1` has `m`.
pub fn bipartite_nice_colouring(m: usize, seed: u64) -> Result<EdgeColouredGraph, Error> {
    if m < 2 {
        return Err(Error::invalid_input(
            "bipartite nice colourings require m >= 2",
        ));
    }
    let mut pool = Vec::with_capacity(m * m);
    for u in 0..m {
        for v in m..2 * m {
            pool.push((u, v));
        }
    }
    let mut sizes: Vec<usize> = (1..=2 * m - 2).map(|i| i.div_ceil(2)).collect();
    sizes.push(m);
    Ok(random_classes(2 * m, pool, &sizes, seed))
}

/// The coloured supergraph in which `t` is the unique heterochromatic
/// spanning tree. See [`unique_tree_graph_with_tree`] for the witness copy.
pub fn unique_tree_graph(t: &Tree) -> Result<EdgeColouredGraph, Error> {
    Ok(unique_tree_graph_with_tree(t)?.0)
}

/// Builds the supergraph together with the relabeled copy of `t` inside it.
///
/// Vertices of `t` are reordered by BFS from vertex 0 so every prefix
/// induces a subtree; output vertex `p` is the tree vertex at BFS position
/// `p`. Edges: the complete graph on positions `0..n-1` plus the final
/// tree edge into position `n`. Colours: the tree edge into position `p`
/// gets colour `p`; every other edge with larger endpoint `q` gets colour
/// `q + 1`. Class sizes come out as `1, 1, 2, ..., n - 1`, so the output
/// is cute, and the returned edge set (the relabeled copy of `t`) is its
/// only heterochromatic spanning tree.
pub fn unique_tree_graph_with_tree(t: &Tree) -> Result<(EdgeColouredGraph, EdgeSet), Error> {
    let total = t.num_vertices();
    if total < 3 {
        return Err(Error::invalid_input(
            "supergraph construction requires a tree on at least 3 vertices",
        ));
    }
    let n = total - 1;
    let (_, parent_pos) = t.bfs_order();
    let mut coloured = Vec::new();
    for (p, &par) in parent_pos.iter().enumerate().skip(1) {
        coloured.push((par, p, p));
    }
    for (q, &par) in parent_pos.iter().enumerate().take(n).skip(1) {
        for j in (0..q).filter(|&j| j != par) {
            coloured.push((j, q, q + 1));
        }
    }
    coloured.sort_unstable();
    let g = EdgeColouredGraph::new(total, coloured)?;
    let witness = (1..=n)
        .map(|p| {
            g.edge_index(parent_pos[p], p)
                .expect("tree edges are in the supergraph")
        })
        .collect();
    Ok((g, witness))
}

/// For a nice colouring, `roles[i - 1]` is the colour label whose class
/// has exactly `i` edges (sizes `1..n` are distinct, so this is unique).
pub(crate) fn nice_colour_roles(g: &EdgeColouredGraph) -> Vec<usize> {
    let n = g.num_colours();
    let mut roles = vec![0; n];
    for c in 1..=n {
        roles[g.class(c).len() - 1] = c;
    }
    roles
}

/// Decides whether a nice colouring is beautiful and returns the witness
/// bipartition if so.
///
/// Writing `C_i` for the class with `i` edges, the colouring is beautiful
/// when every class subgraph is acyclic and some vertex bipartition
/// `(V1, V2)` with `|V2| = ceil((n+1)/2)` satisfies:
/// the classes `C_i` with `i ≡ n (mod 2)` together form exactly the
/// complete bipartite graph between `V1` and `V2`; each such class touches
/// `floor(|V(G_i)|/2)` vertices of `V1`; and each class with `i ≢ n (mod 2)`
/// has `floor(i/2)` edges inside `V1` and `ceil(i/2)` inside `V2`.
///
/// The candidate bipartition is forced: it is the 2-colouring of the union
/// of the designated classes. When both halves have equal size the
/// orientation with vertex 0 in `V2` is tried first.
pub fn verify_beautiful(g: &EdgeColouredGraph) -> Result<Option<Bipartition>, Error> {
    if !g.classify().nice {
        return Err(Error::invalid_input(
            "beautiful verification requires a nice colouring",
        ));
    }
    let num_vertices = g.num_vertices();
    let n = num_vertices - 1;
    let roles = nice_colour_roles(g);

    for colour in 1..=n {
        let mut uf = UnionFind::new(num_vertices);
        for &e in g.class(colour) {
            let edge = g.edge(e);
            if !uf.union(edge.u, edge.v) {
                return Ok(None);
            }
        }
    }

    let cross_edges: Vec<usize> = (1..=n)
        .filter(|i| i % 2 == n % 2)
        .flat_map(|i| g.class(roles[i - 1]).iter().copied())
        .collect();
    let Some(mut components) = g.two_colour(&cross_edges) else {
        return Ok(None);
    };
    if components.len() != 1 {
        return Ok(None);
    }
    let (part_a, part_b) = components.pop().unwrap();
    let small = num_vertices / 2;
    let large = num_vertices - small;
    let sizes_fit = (part_a.len() == small && part_b.len() == large)
        || (part_a.len() == large && part_b.len() == small);
    if !sizes_fit || cross_edges.len() != part_a.len() * part_b.len() {
        return Ok(None);
    }

    // part_a holds vertex 0 (BFS starts there), so on equal halves the
    // first orientation puts vertex 0 in V2
    let orientations: Vec<(&[usize], &[usize])> = if part_a.len() > part_b.len() {
        vec![(&part_b[..], &part_a[..])]
    } else if part_b.len() > part_a.len() {
        vec![(&part_a[..], &part_b[..])]
    } else {
        vec![(&part_b[..], &part_a[..]), (&part_a[..], &part_b[..])]
    };

    for (v1, v2) in orientations {
        if bipartition_satisfies_conditions(g, n, &roles, v1) {
            let mut v1 = v1.to_vec();
            let mut v2 = v2.to_vec();
            v1.sort_unstable();
            v2.sort_unstable();
            return Ok(Some(Bipartition { v1, v2 }));
        }
    }
    Ok(None)
}

fn bipartition_satisfies_conditions(
    g: &EdgeColouredGraph,
    n: usize,
    roles: &[usize],
    v1: &[usize],
) -> bool {
    let mut in_v1 = vec![false; g.num_vertices()];
    for &v in v1 {
        in_v1[v] = true;
    }
    for i in 1..=n {
        let class = g.class(roles[i - 1]);
        if i % 2 == n % 2 {
            let mut touched = vec![false; g.num_vertices()];
            for &e in class {
                let edge = g.edge(e);
                touched[edge.u] = true;
                touched[edge.v] = true;
            }
            let total = touched.iter().filter(|&&t| t).count();
            let in_first = (0..g.num_vertices())
                .filter(|&v| touched[v] && in_v1[v])
                .count();
            if in_first != total / 2 {
                return false;
            }
        } else {
            let mut within_v1 = 0;
            let mut within_v2 = 0;
            for &e in class {
                let edge = g.edge(e);
                match (in_v1[edge.u], in_v1[edge.v]) {
                    (true, true) => within_v1 += 1,
                    (false, false) => within_v2 += 1,
                    _ => return false,
                }
            }
            if within_v1 != i / 2 || within_v2 != i.div_ceil(2) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class_sizes_by_colour(g: &EdgeColouredGraph) -> Vec<usize> {
        g.colour_classes().iter().map(Vec::len).collect()
    }

    fn all_classes_acyclic(g: &EdgeColouredGraph) -> bool {
        (1..=g.num_colours()).all(|c| {
            let mut uf = UnionFind::new(g.num_vertices());
            g.class(c).iter().all(|&e| {
                let edge = g.edge(e);
                uf.union(edge.u, edge.v)
            })
        })
    }

    #[test]
    fn graceful_small_cases() {
        let g = graceful_colouring(2);
        let triples: Vec<_> = g.edges().iter().map(|e| (e.u, e.v, e.colour)).collect();
        assert_eq!(triples, vec![(0, 1, 1), (0, 2, 2), (1, 2, 1)]);

        assert_eq!(class_sizes_by_colour(&graceful_colouring(4)), vec![4, 3, 2, 1]);

        let single = graceful_colouring(1);
        assert_eq!(single.num_vertices(), 2);
        assert_eq!(single.edge_count(), 1);

        let degenerate = graceful_colouring(0);
        assert_eq!(degenerate.num_vertices(), 1);
        assert_eq!(degenerate.edge_count(), 0);
    }

    #[test]
    fn graceful_is_nice_with_acyclic_classes() {
        for n in 1..=12 {
            let g = graceful_colouring(n);
            assert!(g.classify().nice, "n = {n}");
            assert!(all_classes_acyclic(&g), "n = {n}");
        }
    }

    #[test]
    fn stellar_small_cases() {
        let g = stellar_colouring(3);
        let triples: Vec<_> = g.edges().iter().map(|e| (e.u, e.v, e.colour)).collect();
        assert_eq!(
            triples,
            vec![(0, 1, 1), (0, 2, 2), (0, 3, 3), (1, 2, 2), (1, 3, 3), (2, 3, 3)]
        );
        assert!(g.classify().nice);

        let big = stellar_colouring(5);
        assert_eq!(big.edge_count(), 15);
        assert!(big.classify().nice);
        assert_eq!(class_sizes_by_colour(&big), vec![1, 2, 3, 4, 5]);

        assert_eq!(stellar_colouring(1).edge_count(), 1);
    }

    #[test]
    fn random_nice_classifies_and_repeats() {
        let g = random_nice_colouring(2, 0);
        assert!(g.classify().nice);
        assert_eq!(random_nice_colouring(2, 0), g);

        for seed in 0..5 {
            let g = random_nice_colouring(5, seed);
            assert_eq!(g.edge_count(), 15);
            assert_eq!(class_sizes_by_colour(&g), vec![1, 2, 3, 4, 5]);
            assert!(g.classify().nice);
        }
        assert_ne!(random_nice_colouring(5, 0), random_nice_colouring(5, 1));
    }

    #[test]
    fn random_cute_classifies() {
        assert!(random_cute_colouring(1, 0).is_err());

        let g = random_cute_colouring(2, 3).unwrap();
        assert_eq!(g.num_vertices(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(class_sizes_by_colour(&g), vec![1, 1]);

        for seed in 0..5 {
            let g = random_cute_colouring(4, seed).unwrap();
            assert_eq!(g.num_vertices(), 5);
            assert_eq!(g.edge_count(), 7);
            assert_eq!(class_sizes_by_colour(&g), vec![1, 1, 2, 3]);
            assert!(g.classify().cute, "seed = {seed}");
        }
    }

    #[test]
    fn bipartite_nice_classifies() {
        assert!(bipartite_nice_colouring(1, 0).is_err());

        let g = bipartite_nice_colouring(2, 0).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(class_sizes_by_colour(&g), vec![1, 1, 2]);
        assert!(g.classify().bipartite_nice);

        for seed in 0..5 {
            let g = bipartite_nice_colouring(4, seed).unwrap();
            assert_eq!(g.edge_count(), 16);
            assert_eq!(class_sizes_by_colour(&g), vec![1, 1, 2, 2, 3, 3, 4]);
            assert!(g.classify().bipartite_nice, "seed = {seed}");
        }
    }

    #[test]
    fn unique_tree_graph_on_path() {
        let path = Tree::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let (g, witness) = unique_tree_graph_with_tree(&path).unwrap();
        let triples: Vec<_> = g.edges().iter().map(|e| (e.u, e.v, e.colour)).collect();
        assert_eq!(triples, vec![(0, 1, 1), (0, 2, 3), (1, 2, 2), (2, 3, 3)]);
        assert!(g.classify().cute);
        assert!(g.is_spanning_tree(&witness).unwrap());
        assert!(g.is_heterochromatic(&witness).unwrap());
        let witness_edges: Vec<_> = witness.iter().map(|i| (g.edge(i).u, g.edge(i).v)).collect();
        assert_eq!(witness_edges, vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn unique_tree_graph_on_star() {
        let star = Tree::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let (g, witness) = unique_tree_graph_with_tree(&star).unwrap();
        assert!(g.classify().cute);
        let witness_edges: Vec<_> = witness.iter().map(|i| (g.edge(i).u, g.edge(i).v)).collect();
        assert_eq!(witness_edges, vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn unique_tree_graph_class_sizes() {
        let t = Tree::new(6, [(0, 3), (3, 1), (1, 5), (3, 4), (4, 2)]).unwrap();
        let g = unique_tree_graph(&t).unwrap();
        let mut sizes = class_sizes_by_colour(&g);
        assert_eq!(sizes[0], 1);
        for (k, &s) in sizes.iter().enumerate().skip(1) {
            assert_eq!(s, k, "colour {} size", k + 1);
        }
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 3, 4]);

        let tiny = Tree::new(2, [(0, 1)]).unwrap();
        assert!(unique_tree_graph(&tiny).is_err());
    }

    #[test]
    fn beautiful_graceful_k5() {
        let verdict = verify_beautiful(&graceful_colouring(4)).unwrap().unwrap();
        assert_eq!(verdict.v1, vec![1, 3]);
        assert_eq!(verdict.v2, vec![0, 2, 4]);
    }

    #[test]
    fn beautiful_graceful_all_small_orders() {
        for n in 2..=10 {
            let verdict = verify_beautiful(&graceful_colouring(n)).unwrap();
            let b = verdict.unwrap_or_else(|| panic!("graceful n = {n} must be beautiful"));
            assert_eq!(b.v2.len(), (n + 2) / 2);
            assert!(b.v2.iter().all(|v| v % 2 == 0), "n = {n}: V2 = even labels");
        }
    }

    #[test]
    fn beautiful_rejects_non_nice() {
        let cute = unique_tree_graph(&Tree::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap()).unwrap();
        assert!(verify_beautiful(&cute).is_err());
    }

    #[test]
    fn beautiful_stellar_fixture() {
        // frozen verdicts: the designated-class union of stellar(3) and
        // stellar(4) contains an odd cycle, stellar(2) does not
        let b = verify_beautiful(&stellar_colouring(2)).unwrap().unwrap();
        assert_eq!(b.v1, vec![2]);
        assert_eq!(b.v2, vec![0, 1]);
        assert!(verify_beautiful(&stellar_colouring(3)).unwrap().is_none());
        assert!(verify_beautiful(&stellar_colouring(4)).unwrap().is_none());
    }
}
