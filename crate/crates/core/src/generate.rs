//! Seeded random instances for tests, benchmarks and the CLI.

use crate::digraph::{biorient, is_strong, Arc, Digraph, Edge, UndirectedGraph, VertexSet};
use crate::gadgets::{CLLMInstance, Linkage2Instance};
use crate::linkage::TerminalSequence;
use rand::seq::SliceRandom;
use rand::Rng;

const ATTEMPTS: usize = 200;

/// Each ordered pair becomes an arc independently with probability `p`.
pub fn random_digraph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Digraph {
    let arcs: Vec<Arc> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .filter(|_| rng.gen_bool(p))
        .collect();
    Digraph::new(n, arcs).expect("distinct ordered pairs")
}

/// Rejection-sampled strong digraph; after repeated failures a random
/// Hamiltonian cycle is added to the last sample.
pub fn random_strong_digraph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Digraph {
    let mut d = random_digraph(n, p, rng);
    for _ in 0..ATTEMPTS {
        if is_strong(&d) {
            return d;
        }
        d = random_digraph(n, p, rng);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut arcs = d.arcs().to_vec();
    for i in 0..n {
        let a = (order[i], order[(i + 1) % n]);
        if n > 1 && !d.has_arc(a.0, a.1) {
            arcs.push(a);
        }
    }
    Digraph::new(n, arcs).expect("cycle arcs were absent")
}

/// Every pair gets one arc of random direction, or both with probability
/// `p_both`.
pub fn random_semicomplete<R: Rng>(n: usize, p_both: f64, rng: &mut R) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p_both) {
                arcs.extend([(u, v), (v, u)]);
            } else if rng.gen_bool(0.5) {
                arcs.push((u, v));
            } else {
                arcs.push((v, u));
            }
        }
    }
    Digraph::new(n, arcs).expect("one or two arcs per pair")
}

pub fn random_tournament<R: Rng>(n: usize, rng: &mut R) -> Digraph {
    random_semicomplete(n, 0.0, rng)
}

pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> UndirectedGraph {
    let edges: Vec<Edge> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    UndirectedGraph::new(n, edges).expect("distinct pairs")
}

/// A random spanning tree joined with a `G(n, p)` sample.
pub fn random_connected_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> UndirectedGraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<Edge> = (1..n)
        .map(|i| {
            let j = rng.gen_range(0..i);
            let (a, b) = (order[i], order[j]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.extend(random_graph(n, p, rng).edges().iter().copied());
    edges.sort_unstable();
    edges.dedup();
    UndirectedGraph::new(n, edges).expect("deduplicated edges")
}

/// Biorientation of a random connected graph.
pub fn random_symmetric_digraph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Digraph {
    biorient(&random_connected_graph(n, p, rng))
}

/// A random digraph on `n >= 4` vertices with four distinct random
/// terminals.
pub fn random_linkage_instance<R: Rng>(n: usize, p: f64, rng: &mut R) -> Linkage2Instance {
    assert!(n >= 4, "a 2-linkage instance needs four terminals");
    let d = random_digraph(n, p, rng);
    let mut vs: Vec<usize> = (0..n).collect();
    vs.shuffle(rng);
    let t = TerminalSequence::new(vec![(vs[0], vs[1]), (vs[2], vs[3])], n).expect("distinct terminals");
    Linkage2Instance::new(d, t).expect("two pairs")
}

/// Parts `Ū = 0..q`, `V̄ = q..2q`, `W̄ = 2q..3q`; each cross-part pair is
/// an edge with probability `p`.
pub fn random_cllm_instance<R: Rng>(q: usize, p: f64, rng: &mut R) -> CLLMInstance {
    let n = 3 * q;
    let edges: Vec<Edge> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u / q != v / q)
        .filter(|_| rng.gen_bool(p))
        .collect();
    let g = UndirectedGraph::new(n, edges).expect("distinct pairs");
    let parts = [0, 1, 2].map(|i| VertexSet::from_iter_dedup(i * q..(i + 1) * q));
    CLLMInstance::new(g, parts).expect("tripartite by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semicomplete::is_semicomplete;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_meet_their_promises() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..7 {
            assert!(is_strong(&random_strong_digraph(n, 0.3, &mut rng)));
            assert!(is_semicomplete(&random_semicomplete(n, 0.3, &mut rng)));
            assert!(random_connected_graph(n, 0.2, &mut rng).is_connected());
            assert!(random_symmetric_digraph(n, 0.2, &mut rng).is_symmetric());
        }
        let inst = random_cllm_instance(2, 0.5, &mut rng);
        assert_eq!(inst.q(), 2);
    }

    #[test]
    fn seeds_reproduce() {
        let a = random_digraph(6, 0.4, &mut ChaCha8Rng::seed_from_u64(3));
        let b = random_digraph(6, 0.4, &mut ChaCha8Rng::seed_from_u64(3));
        assert_eq!(a, b);
    }
}
