//! Special-case engines and the exact oracle checked against each other and
//! against independent brute force.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use strongsub::combinatorics::{combinations, words};
use strongsub::digraph::is_strong_on;
use strongsub::generate::{random_connected_graph, random_digraph, random_semicomplete, random_symmetric_digraph};
use strongsub::semicomplete::{
    build_split, decide_kappa_s_semicomplete, strong_extension_packing, ArcPartition, ExtensionInstance,
};
use strongsub::symmetric::{acceptable_forest_packing, decide_kappa_s_symmetric, AnchorArcSet};
use strongsub::{
    biorient, decide_kappa_s_at_least, induced_subdigraph, underlying_graph, verify_packing, Arc, Digraph,
    OracleConfig, UndirectedGraph, Vertex, VertexSet,
};

fn cfg() -> OracleConfig {
    OracleConfig::forced()
}

/// Labels every arc with a part number or "unused" and checks the packing
/// conditions directly.
fn brute_kappa_s_at_least(d: &Digraph, s: &VertexSet, ell: usize) -> bool {
    let arcs = d.arcs();
    words(arcs.len(), ell + 1).into_iter().any(|w| {
        let parts: Vec<(BTreeSet<Vertex>, Vec<Arc>)> = (1..=ell)
            .map(|i| {
                let mine: Vec<Arc> = arcs.iter().zip(&w).filter(|(_, &c)| c == i).map(|(a, _)| *a).collect();
                let verts: BTreeSet<Vertex> = s.iter().chain(mine.iter().flat_map(|&(u, v)| [u, v])).collect();
                (verts, mine)
            })
            .collect();
        let strong = parts.iter().all(|(vs, a)| is_strong_on(&vs.iter().copied().collect::<Vec<_>>(), a));
        let anchor: BTreeSet<Vertex> = s.iter().collect();
        let disjoint = (0..ell).all(|i| (i + 1..ell).all(|j| parts[i].0.intersection(&parts[j].0).copied().collect::<BTreeSet<_>>() == anchor));
        strong && disjoint
    })
}

#[test]
fn oracle_matches_arc_labelling_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let n = rng.gen_range(2..=4);
        let d = random_digraph(n, rng.gen_range(0.3..0.8), &mut rng);
        if d.arc_count() > 9 {
            continue;
        }
        for k in 2..=n {
            for members in combinations(n, k) {
                let s = VertexSet::from_iter_dedup(members);
                for ell in 1..=2 {
                    let fast = decide_kappa_s_at_least(&d, &s, ell, &cfg()).unwrap();
                    assert_eq!(fast.is_some(), brute_kappa_s_at_least(&d, &s, ell), "{d:?} S={s} ell={ell}");
                }
            }
        }
    }
}

#[test]
fn semicomplete_engine_up_to_seven_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..12 {
        let n = rng.gen_range(4..=7);
        let d = random_semicomplete(n, rng.gen_range(0.0..0.7), &mut rng);
        for k in 2..=3 {
            // a sample of anchors keeps the sweep short at n = 7
            for members in combinations(n, k).step_by(3) {
                let s = VertexSet::from_iter_dedup(members);
                for ell in 1..=3 {
                    let fast = decide_kappa_s_semicomplete(&d, &s, ell).unwrap();
                    let slow = decide_kappa_s_at_least(&d, &s, ell, &cfg()).unwrap();
                    assert_eq!(fast.is_some(), slow.is_some(), "{d:?} S={s} ell={ell}");
                    if let Some(p) = fast {
                        assert!(verify_packing(&d, &p).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn symmetric_engine_with_three_parts() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..15 {
        let n = rng.gen_range(3..=6);
        let d = random_symmetric_digraph(n, rng.gen_range(0.2..0.9), &mut rng);
        for k in 2..=3 {
            for members in combinations(n, k) {
                let s = VertexSet::from_iter_dedup(members);
                for ell in 1..=3 {
                    let fast = decide_kappa_s_symmetric(&d, &s, ell).unwrap();
                    let slow = decide_kappa_s_at_least(&d, &s, ell, &cfg()).unwrap();
                    assert_eq!(fast.is_some(), slow.is_some(), "{d:?} S={s} ell={ell}");
                    if let Some(p) = fast {
                        assert!(verify_packing(&d, &p).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn symmetric_engine_with_four_anchors() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..6 {
        let d = random_symmetric_digraph(6, rng.gen_range(0.3..0.9), &mut rng);
        let s = VertexSet::from_iter_dedup([0, 2, 3, 5]);
        for ell in 1..=2 {
            let fast = decide_kappa_s_symmetric(&d, &s, ell).unwrap();
            let slow = decide_kappa_s_at_least(&d, &s, ell, &cfg()).unwrap();
            assert_eq!(fast.is_some(), slow.is_some(), "{d:?} ell={ell}");
        }
    }
}

/// Tries every assignment of free vertices to "unused" or one of the seeds.
fn brute_extension(d: &Digraph, seeds: &[VertexSet]) -> bool {
    let owned: BTreeSet<Vertex> = seeds.iter().flat_map(|s| s.iter()).collect();
    let free: Vec<Vertex> = (0..d.n()).filter(|v| !owned.contains(v)).collect();
    words(free.len(), seeds.len() + 1).into_iter().any(|w| {
        seeds.iter().enumerate().all(|(i, x)| {
            let z: BTreeSet<Vertex> = x.iter().chain(free.iter().zip(&w).filter(|(_, &c)| c == i + 1).map(|(v, _)| *v)).collect();
            induced_subdigraph(d, &VertexSet::from_iter_dedup(z)).is_strong()
        })
    })
}

#[test]
fn extension_step_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let mut negatives = 0;
    for _ in 0..150 {
        let n = rng.gen_range(4..=7);
        let d = random_semicomplete(n, rng.gen_range(0.0..0.4), &mut rng);
        let ell = rng.gen_range(1..=2);
        let mut vs: Vec<Vertex> = (0..n).collect();
        for i in (1..n).rev() {
            vs.swap(i, rng.gen_range(0..=i));
        }
        let sizes: Vec<usize> = (0..ell).map(|_| rng.gen_range(1..=2)).collect();
        let mut seeds = Vec::new();
        let mut at = 0;
        for &sz in &sizes {
            seeds.push(VertexSet::from_iter_dedup(vs[at..at + sz].iter().copied()));
            at += sz;
        }
        let inst = ExtensionInstance { host: d.clone(), seeds: seeds.clone() };
        let got = strong_extension_packing(&inst).unwrap();
        assert_eq!(got.is_some(), brute_extension(&d, &seeds), "{d:?} seeds {seeds:?}");
        match got {
            Some(z) => {
                let mut seen = BTreeSet::new();
                for (x, zi) in seeds.iter().zip(&z) {
                    assert!(x.is_subset(zi));
                    assert!(induced_subdigraph(&d, zi).is_strong());
                    assert!(zi.iter().all(|v| seen.insert(v)));
                }
            }
            None => negatives += 1,
        }
    }
    assert!(negatives > 0, "sample should include infeasible instances");
}

#[test]
fn split_recovers_the_outside_structure() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..20 {
        let n = rng.gen_range(3..=6);
        let d = random_semicomplete(n, 0.3, &mut rng);
        let s = VertexSet::from_iter_dedup([0, 1]);
        let inside: Vec<Arc> = d.arcs().iter().copied().filter(|&(u, v)| u < 2 && v < 2).collect();
        let ell = 2;
        let cells = vec![inside.clone(), Vec::new()];
        let p = ArcPartition::new(cells, &d, &s).unwrap();
        let split = build_split(&d, &s, ell, &p).unwrap();
        // keep copy layer 0 and map back to original labels
        let layer0: BTreeSet<Vertex> = split.cross_sets[0].iter().collect();
        let keep = |x: Vertex| x < n - 2 || layer0.contains(&x);
        let merged: BTreeSet<Arc> = split
            .base
            .arcs()
            .iter()
            .filter(|&&(a, b)| keep(a) && keep(b))
            .map(|&(a, b)| (split.origin[a], split.origin[b]))
            .collect();
        let original: BTreeSet<Arc> = d.arcs().iter().copied().collect();
        assert_eq!(merged, original);
    }
}

#[test]
fn acceptable_forests_are_valid() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut found = 0;
    for _ in 0..40 {
        let n = rng.gen_range(4..=7);
        let g = random_connected_graph(n, rng.gen_range(0.2..0.7), &mut rng);
        let s = VertexSet::from_iter_dedup([0, n - 1]);
        let g = UndirectedGraph::new(n, g.edges().iter().copied().filter(|&e| e != (0, n - 1))).unwrap();
        let anchors = vec![AnchorArcSet::new([], &s).unwrap(); 2];
        let Some(plan) = acceptable_forest_packing(&g, &s, &anchors).unwrap() else {
            continue;
        };
        found += 1;
        let forests = plan.realization.unwrap();
        let mut used_edges = BTreeSet::new();
        let mut owners: Vec<Option<usize>> = vec![None; n];
        for (i, f) in forests.iter().enumerate() {
            for &(u, v) in f {
                assert!(g.has_edge(u, v));
                assert!(used_edges.insert((u, v)));
                for w in [u, v] {
                    if !s.contains(w) {
                        assert!(owners[w].is_none_or(|o| o == i));
                        owners[w] = Some(i);
                    }
                }
            }
            let forest = UndirectedGraph::new(n, f.iter().copied()).unwrap();
            let d = biorient(&forest);
            let verts: BTreeSet<Vertex> = s.iter().chain(f.iter().flat_map(|&(a, b)| [a, b])).collect();
            assert!(is_strong_on(&verts.into_iter().collect::<Vec<_>>(), d.arcs()));
            // acyclic: edges = vertices - components
            assert!(f.len() < n);
        }
    }
    assert!(found > 5);
}

#[test]
fn spanning_trees_keep_symmetric_subgraphs_strong() {
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    for _ in 0..50 {
        let n = rng.gen_range(2..=8);
        let h = biorient(&random_connected_graph(n, rng.gen_range(0.1..0.8), &mut rng));
        // spanning tree by BFS on the underlying graph
        let g = underlying_graph(&h);
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = vec![0];
        let mut tree = Vec::new();
        while let Some(v) = queue.pop() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    tree.push((v, w));
                    queue.push(w);
                }
            }
        }
        let t = biorient(&UndirectedGraph::new(n, tree).unwrap());
        assert!(strongsub::is_strong(&t));
        assert_eq!(t.arc_count(), 2 * (n - 1));
    }
}
