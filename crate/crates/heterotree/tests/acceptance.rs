//! End-to-end acceptance suite. Each test is one criterion and prints a
//! single `acceptance NN (...): PASS` line on success (visible with
//! `cargo test --test acceptance -- --nocapture`).

mod common;

use common::*;
use heterotree::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn oracle_count(g: &EdgeColouredGraph) -> u64 {
    enumerate_heterochromatic_spanning_trees(g, 0, DEFAULT_ENUMERATION_BUDGET)
        .unwrap()
        .exact_count
}

#[test]
fn acceptance_01_graceful_beautiful_pipeline() {
    for n in 2..=10 {
        let g = graceful_colouring(n);
        let b = verify_beautiful(&g)
            .unwrap()
            .expect("graceful colouring must be beautiful");
        let odds: Vec<usize> = (1..=n).step_by(2).collect();
        let evens: Vec<usize> = (0..=n).step_by(2).collect();
        assert_eq!(b.v1, odds, "n = {n}");
        assert_eq!(b.v2, evens, "n = {n}");

        let family = beautiful_tree_family(&g).unwrap();
        let bound = 1usize << ((n - 1) / 2);
        assert_eq!(family.len(), bound, "n = {n}");
        assert!(oracle_count(&g) >= bound as u64, "n = {n}");
    }
    println!("acceptance 01 (graceful-beautiful pipeline): PASS");
}

#[test]
fn acceptance_02_nice_family_bound() {
    for n in 2..=8 {
        let mid = (n + 1usize).div_ceil(2);
        let bound = mid * (n + 1 - mid);
        for seed in 0..100 {
            let g = random_nice_colouring(n, seed);
            let family = nice_tree_family(&g).unwrap();
            assert_eq!(family.len(), bound, "n = {n}, seed = {seed}");
            assert!(
                oracle_count(&g) >= bound as u64,
                "n = {n}, seed = {seed}"
            );
        }
    }
    println!("acceptance 02 (nice-colouring family bound): PASS");
}

#[test]
fn acceptance_03_cute_tree_always_exists() {
    for n in 3..=7 {
        for seed in 0..200 {
            let g = random_cute_colouring(n, seed).unwrap();
            let tree = cute_tree(&g).unwrap();
            assert!(g.is_spanning_tree(&tree).unwrap(), "n = {n}, seed = {seed}");
            assert!(
                g.is_heterochromatic(&tree).unwrap(),
                "n = {n}, seed = {seed}"
            );
        }
    }
    println!("acceptance 03 (cute colourings always admit a tree): PASS");
}

#[test]
fn acceptance_04_unique_tree_supergraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for order in 4..=9 {
        for _ in 0..50 {
            let t = Tree::random(order, &mut rng).unwrap();
            let (g, witness) = unique_tree_graph_with_tree(&t).unwrap();
            assert!(g.classify().cute, "order = {order}, tree = {t:?}");
            let report =
                enumerate_heterochromatic_spanning_trees(&g, 1, DEFAULT_ENUMERATION_BUDGET)
                    .unwrap();
            assert_eq!(report.exact_count, 1, "order = {order}, tree = {t:?}");
            assert_eq!(report.trees, Some(vec![witness]));
        }
    }
    println!("acceptance 04 (supergraphs with a unique tree): PASS");
}

#[test]
fn acceptance_05_existence_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for case in 0..300 {
        let g = random_connected_coloured_graph(&mut rng, 7, 6);
        let counted = oracle_count(&g) > 0;
        let suzuki = suzuki_check(&g).unwrap();
        let akbari = akbari_alipour_check(&g).unwrap();
        let found = find_heterochromatic_spanning_tree(&g).is_some();
        assert_eq!(counted, suzuki, "case {case}: {g:?}");
        assert_eq!(counted, akbari, "case {case}: {g:?}");
        assert_eq!(counted, found, "case {case}: {g:?}");
    }
    println!("acceptance 05 (existence checks agree): PASS");
}

#[test]
fn acceptance_06_min_max_verification() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for case in 0..200 {
        let g = random_coloured_graph(&mut rng, 6, 12, 5);
        let m = g.edge_count();
        let engine = max_common_independent(&g).common_independent.len();

        let mut best = usize::MAX;
        for mask in 0u32..1 << m {
            let members: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            let complement: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 0).collect();
            let x = EdgeSet::from_indices(members.iter().copied());

            // r2 of the complement has the closed form colours - contained(x)
            let r1 = greedy_graphic_rank(&g, &members);
            let r2 = distinct_colours(&g, &complement);
            assert_eq!(r1, graphic_rank(&g, &x).unwrap(), "case {case}");
            assert_eq!(r2, partition_corank(&g, &x).unwrap(), "case {case}");
            best = best.min(r1 + r2);
        }

        assert_eq!(engine, best, "case {case}: {g:?}");
        let (argmin, value) = min_rank_cover(&g).unwrap();
        assert_eq!(value, best, "case {case}");
        let chosen: Vec<usize> = argmin.iter().collect();
        let rest: Vec<usize> = (0..m).filter(|i| !argmin.contains(*i)).collect();
        assert_eq!(
            greedy_graphic_rank(&g, &chosen) + distinct_colours(&g, &rest),
            best,
            "case {case}"
        );
    }
    println!("acceptance 06 (intersection matches the rank min-max): PASS");
}

#[test]
fn acceptance_07_bipartite_nice_bounds() {
    for m in 2..=5usize {
        let bound = if m % 2 == 0 {
            m * (m + 2) / 4
        } else {
            (m + 1) * (m + 1) / 4
        };
        for seed in 0..50 {
            let g = bipartite_nice_colouring(m, seed).unwrap();
            assert!(
                oracle_count(&g) >= bound as u64,
                "m = {m}, seed = {seed}"
            );
            assert!(
                find_heterochromatic_spanning_tree(&g).is_some(),
                "m = {m}, seed = {seed}"
            );
        }
    }
    println!("acceptance 07 (bipartite nice-colouring bounds): PASS");
}

#[test]
fn acceptance_08_desk_scale_embeddings() {
    for n in 1..=7usize {
        let order = n + 1;
        let graceful = graceful_colouring(n);
        let stellar = stellar_colouring(n);
        let mut seen = std::collections::BTreeSet::new();
        for t in all_trees(order) {
            if !seen.insert(t.edges().to_vec()) {
                continue;
            }
            for g in [&graceful, &stellar] {
                assert!(
                    heterochromatic_embedding(g, &t).unwrap().is_some(),
                    "order = {order}, tree = {t:?}"
                );
            }
        }
        let labeled_trees = (order as u64).pow(order as u32 - 2);
        assert_eq!(seen.len() as u64, labeled_trees);
    }
    println!("acceptance 08 (every small tree embeds): PASS");
}

#[test]
fn acceptance_09_frozen_fixtures() {
    assert_eq!(oracle_count(&graceful_colouring(2)), 2);
    assert_eq!(oracle_count(&stellar_colouring(3)), 6);
    let path = Tree::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    assert_eq!(oracle_count(&unique_tree_graph(&path).unwrap()), 1);
    println!("acceptance 09 (frozen small fixtures): PASS");
}
