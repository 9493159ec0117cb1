//! Closed forms and constructions for complete biorientations, and the
//! general bounds on `κ_k`.

use crate::digraph::{is_strong, min_degrees, Arc, Digraph, Subdigraph, Vertex, VertexSet};
use crate::error::{Error, Result};
use crate::packing::Packing;
use serde::Serialize;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// `n − 1` arc-disjoint directed Hamiltonian cycles covering `↔K_n`.
/// Each cycle lists its vertices in order, starting at 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HamiltonianDecomposition {
    pub cycles: Vec<Vec<Vertex>>,
}

impl HamiltonianDecomposition {
    pub fn n(&self) -> usize {
        self.cycles.first().map_or(0, Vec::len)
    }

    /// Every cycle is Hamiltonian and every arc of `↔K_n` is used once.
    pub fn is_valid(&self) -> bool {
        let n = self.n();
        if n < 2 || self.cycles.len() != n - 1 {
            return false;
        }
        let mut used = vec![vec![false; n]; n];
        for cycle in &self.cycles {
            let mut seen = vec![false; n];
            if cycle.len() != n || !cycle.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true)) {
                return false;
            }
            for (u, v) in cycle_arcs(cycle) {
                if std::mem::replace(&mut used[u][v], true) {
                    return false;
                }
            }
        }
        true
    }
}

fn cycle_arcs(cycle: &[Vertex]) -> impl Iterator<Item = Arc> + '_ {
    (0..cycle.len()).map(move |i| (cycle[i], cycle[(i + 1) % cycle.len()]))
}

fn cache() -> &'static Mutex<HashMap<usize, Option<HamiltonianDecomposition>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Option<HamiltonianDecomposition>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// A decomposition of `↔K_n` into Hamiltonian cycles; `None` exactly for
/// `n ∈ {4, 6}` (and for `n < 2`). Odd orders use the zigzag construction,
/// each undirected cycle taken in both directions; even orders are found
/// by search. Results are cached per `n`.
pub fn hamiltonian_decomposition(n: usize) -> Option<HamiltonianDecomposition> {
    if let Some(hit) = cache().lock().expect("cache poisoned").get(&n) {
        return hit.clone();
    }
    let found = match n {
        0 | 1 => None,
        2 => Some(HamiltonianDecomposition {
            cycles: vec![vec![0, 1]],
        }),
        _ if n % 2 == 1 => Some(zigzag(n)),
        _ => search(n),
    };
    debug_assert!(found.as_ref().is_none_or(HamiltonianDecomposition::is_valid));
    cache().lock().expect("cache poisoned").insert(n, found.clone());
    found
}

/// Odd `n = 2m + 1`: vertex `2m` is the hub; cycle `j` runs
/// `hub, j, j+1, j−1, j+2, j−2, …` around `Z_{2m}`.
fn zigzag(n: usize) -> HamiltonianDecomposition {
    let m = (n - 1) / 2;
    let modulus = 2 * m;
    let hub = 2 * m;
    let mut cycles = Vec::with_capacity(n - 1);
    for j in 0..m {
        let mut cycle = vec![hub];
        for step in 0..modulus {
            // offsets 0, +1, −1, +2, −2, …
            let offset = if step % 2 == 1 {
                step.div_ceil(2)
            } else {
                modulus - step / 2
            };
            cycle.push((j + offset) % modulus);
        }
        let rotate = |c: Vec<Vertex>| {
            let at = c.iter().position(|&v| v == 0).expect("0 on every cycle");
            let mut r = c[at..].to_vec();
            r.extend_from_slice(&c[..at]);
            r
        };
        let mut reversed = cycle.clone();
        reversed.reverse();
        cycles.push(rotate(cycle));
        cycles.push(rotate(reversed));
    }
    HamiltonianDecomposition { cycles }
}

/// Backtracking, one cycle at a time, each grown from vertex 0 along
/// unused arcs. Relabeling lets the first cycle be `0 → 1 → … → n−1 → 0`.
fn search(n: usize) -> Option<HamiltonianDecomposition> {
    struct State {
        n: usize,
        used: Vec<Vec<bool>>,
        cycles: Vec<Vec<Vertex>>,
    }
    impl State {
        fn next_cycle(&mut self) -> bool {
            if self.cycles.len() == self.n - 1 {
                return true;
            }
            let mut path = vec![0];
            let mut on = vec![false; self.n];
            on[0] = true;
            self.grow(&mut path, &mut on)
        }

        fn grow(&mut self, path: &mut Vec<Vertex>, on: &mut Vec<bool>) -> bool {
            let n = self.n;
            let cur = *path.last().expect("path starts at 0");
            if path.len() == n {
                if self.used[cur][0] {
                    return false;
                }
                self.used[cur][0] = true;
                self.cycles.push(path.clone());
                if self.next_cycle() {
                    return true;
                }
                self.cycles.pop();
                self.used[cur][0] = false;
                return false;
            }
            for w in 1..n {
                if on[w] || w == cur || self.used[cur][w] {
                    continue;
                }
                self.used[cur][w] = true;
                on[w] = true;
                path.push(w);
                if self.grow(path, on) {
                    return true;
                }
                path.pop();
                on[w] = false;
                self.used[cur][w] = false;
            }
            false
        }
    }
    let mut state = State {
        n,
        used: vec![vec![false; n]; n],
        cycles: Vec::new(),
    };
    let first: Vec<Vertex> = (0..n).collect();
    for (u, v) in cycle_arcs(&first) {
        state.used[u][v] = true;
    }
    state.cycles.push(first);
    if state.next_cycle() {
        Some(HamiltonianDecomposition {
            cycles: state.cycles,
        })
    } else {
        None
    }
}

/// `κ_k(↔K_n)`: `n − 1`, or `n − 2` when `k ∈ {4, 6}`.
pub fn kappa_complete_biorientation(n: usize, k: usize) -> Result<usize> {
    if k < 2 || k > n {
        return Err(Error::InvalidK { k, n });
    }
    Ok(if k == 4 || k == 6 { n - 2 } else { n - 1 })
}

/// A maximum packing for anchor `s` in `↔K_n`: directed Hamiltonian cycles
/// on `S` plus, for every outside vertex `v`, the star of 2-cycles between
/// `v` and `S`. For `|S| ∈ {4, 6}`, where no full decomposition exists, the
/// inner parts are the two orientations of each of `|S|/2 − 1`
/// edge-disjoint undirected Hamiltonian cycles.
pub fn construct_kn_packing(n: usize, s: &VertexSet) -> Result<Packing> {
    let k = s.len();
    if let Some(v) = s.iter().find(|&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    kappa_complete_biorientation(n, k)?;
    let anchor = s.as_slice();
    let inner: Vec<Vec<Vertex>> = match k {
        4 => both_ways(&[vec![0, 1, 2, 3]]),
        6 => both_ways(&[vec![0, 1, 2, 3, 4, 5], vec![0, 2, 4, 1, 5, 3]]),
        _ => hamiltonian_decomposition(k).expect("exists off {4, 6}").cycles,
    };
    let mut parts: Vec<Subdigraph> = inner
        .iter()
        .map(|c| Subdigraph::new(s.clone(), cycle_arcs(c).map(|(a, b)| (anchor[a], anchor[b]))))
        .collect();
    for v in (0..n).filter(|&v| !s.contains(v)) {
        let arcs = anchor.iter().flat_map(|&u| [(u, v), (v, u)]);
        parts.push(Subdigraph::from_arcs(arcs, s));
    }
    Ok(Packing {
        anchor: s.clone(),
        parts,
    })
}

fn both_ways(cycles: &[Vec<Vertex>]) -> Vec<Vec<Vertex>> {
    cycles
        .iter()
        .flat_map(|c| {
            let mut r = c.clone();
            r.reverse();
            [c.clone(), r]
        })
        .collect()
}

/// `(1, min(n − 1, δ⁺, δ⁻))` for a strong digraph.
pub fn bounds(d: &Digraph, k: usize) -> Result<(usize, usize)> {
    let n = d.n();
    if k < 2 || k > n {
        return Err(Error::InvalidK { k, n });
    }
    if !is_strong(d) {
        return Err(Error::NotStrong);
    }
    let (out, inn) = min_degrees(d)?;
    Ok((1, (n - 1).min(out).min(inn)))
}

/// Whether `κ_k(d) = n − 1`: exactly for complete biorientations with
/// `k ∉ {4, 6}`.
pub fn is_upper_bound_extremal(d: &Digraph, k: usize) -> bool {
    d.n() >= 2 && d.is_complete_biorientation() && (2..=d.n()).contains(&k) && k != 4 && k != 6
}
