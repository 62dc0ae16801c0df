#![allow(dead_code)]

use heterotree::{EdgeColouredGraph, Tree};
use rand::Rng;

/// Builds a graph from raw triples after compacting the colours used into
/// the contiguous range `1..=k` (order-preserving), as the constructor
/// requires.
pub fn with_contiguous_colours(
    num_vertices: usize,
    triples: Vec<(usize, usize, usize)>,
) -> EdgeColouredGraph {
    let mut used: Vec<usize> = triples.iter().map(|t| t.2).collect();
    used.sort_unstable();
    used.dedup();
    let remapped = triples
        .into_iter()
        .map(|(u, v, c)| (u, v, used.binary_search(&c).unwrap() + 1));
    EdgeColouredGraph::new(num_vertices, remapped).unwrap()
}

/// Random simple graph: up to `max_edges` edges on up to `max_vertices`
/// vertices, colours drawn from `1..=max_colours` then compacted. May be
/// disconnected or even empty.
pub fn random_coloured_graph(
    rng: &mut impl Rng,
    max_vertices: usize,
    max_edges: usize,
    max_colours: usize,
) -> EdgeColouredGraph {
    let v = rng.gen_range(2..=max_vertices);
    let mut pairs = Vec::new();
    for a in 0..v {
        for b in (a + 1)..v {
            pairs.push((a, b));
        }
    }
    for i in (1..pairs.len()).rev() {
        pairs.swap(i, rng.gen_range(0..=i));
    }
    let m = rng.gen_range(0..=pairs.len().min(max_edges));
    let triples = pairs[..m]
        .iter()
        .map(|&(a, b)| (a, b, rng.gen_range(1..=max_colours)))
        .collect();
    with_contiguous_colours(v, triples)
}

/// Random connected graph: a uniform spanning tree plus each remaining
/// pair independently with probability 0.35, colours random then
/// compacted.
pub fn random_connected_coloured_graph(
    rng: &mut impl Rng,
    max_vertices: usize,
    max_colours: usize,
) -> EdgeColouredGraph {
    let v = rng.gen_range(2..=max_vertices);
    let tree = Tree::random(v, rng).unwrap();
    let mut triples: Vec<(usize, usize, usize)> = tree
        .edges()
        .iter()
        .map(|&(a, b)| (a, b, rng.gen_range(1..=max_colours)))
        .collect();
    for a in 0..v {
        for b in (a + 1)..v {
            if !tree.edges().contains(&(a, b)) && rng.gen_bool(0.35) {
                triples.push((a, b, rng.gen_range(1..=max_colours)));
            }
        }
    }
    with_contiguous_colours(v, triples)
}

/// Graphic-matroid rank of an edge subset computed greedily, independent
/// of the library's rank formula.
pub fn greedy_graphic_rank(g: &EdgeColouredGraph, members: &[usize]) -> usize {
    let mut parent: Vec<usize> = (0..g.num_vertices()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut rank = 0;
    for &i in members {
        let e = g.edge(i);
        let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
        if a != b {
            parent[a] = b;
            rank += 1;
        }
    }
    rank
}

/// Partition-matroid rank of an edge subset: the number of distinct
/// colours it touches.
pub fn distinct_colours(g: &EdgeColouredGraph, members: &[usize]) -> usize {
    let colours: std::collections::BTreeSet<usize> =
        members.iter().map(|&i| g.edge(i).colour).collect();
    colours.len()
}
