//! Decision procedures for `κ_S ≥ ℓ` and `κ_k ≥ ℓ` on semicomplete digraphs.
//!
//! Every arc partition of `D[S]` into `ℓ` cells is tried. For each, the
//! anchor is split into `ℓ` copies per vertex, cell `i` is injected into
//! copy layer `X_i`, and the question becomes whether the layers extend to
//! disjoint vertex sets inducing strong subdigraphs. That extension step
//! guesses boundary vertices until each layer has a unique initial and a
//! unique terminal strong component, then closes the layers with a single
//! linkage query.

use crate::combinatorics::{combinations, search_partitions};
use crate::digraph::{is_strong_on, tarjan, Arc, Digraph, Subdigraph, Vertex, VertexSet};
use crate::error::{Error, Result};
use crate::linkage::linkage_on;
use crate::packing::{validate_anchor, Packing};
use serde::Serialize;
use std::collections::{BTreeSet, HashSet};

/// `true` when every pair of distinct vertices is joined by at least one arc.
pub fn is_semicomplete(d: &Digraph) -> bool {
    first_non_adjacent(d).is_none()
}

fn first_non_adjacent(d: &Digraph) -> Option<(Vertex, Vertex)> {
    (0..d.n()).find_map(|u| (u + 1..d.n()).find(|&v| !d.adjacent(u, v)).map(|v| (u, v)))
}

/// Labeled partition of the arcs of `D[S]` into `ℓ` cells; cells may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcPartition {
    cells: Vec<Vec<Arc>>,
}

impl ArcPartition {
    /// Checks that the cells are disjoint and cover exactly the arcs of `d[s]`.
    pub fn new(cells: Vec<Vec<Arc>>, d: &Digraph, s: &VertexSet) -> Result<Self> {
        let inside: BTreeSet<Arc> = anchor_arcs(d, s).into_iter().collect();
        let mut seen = BTreeSet::new();
        for &(u, v) in cells.iter().flatten() {
            if !inside.contains(&(u, v)) {
                return Err(Error::PartitionMismatch(format!("{u}->{v} is not an arc of D[S]")));
            }
            if !seen.insert((u, v)) {
                return Err(Error::PartitionMismatch(format!("{u}->{v} lies in two cells")));
            }
        }
        if let Some(&(u, v)) = inside.difference(&seen).next() {
            return Err(Error::PartitionMismatch(format!("{u}->{v} is in no cell")));
        }
        let cells = cells
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        Ok(ArcPartition { cells })
    }

    /// `arcs[j]` goes to cell `assign[j]`.
    pub fn from_assignment(arcs: &[Arc], assign: &[usize], ell: usize) -> Self {
        let mut cells = vec![Vec::new(); ell];
        for (&a, &c) in arcs.iter().zip(assign) {
            cells[c].push(a);
        }
        ArcPartition { cells }
    }

    pub fn cells(&self) -> &[Vec<Arc>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// The anchor-split digraph. Vertices of `V(D) ∖ S` come first, in
/// increasing order; copy `i` of the `a`-th anchor vertex follows at index
/// `(n − k) + i·k + a`.
#[derive(Clone, Debug)]
pub struct SplitDigraph {
    pub base: Digraph,
    /// `copy_map[a]` holds the `ℓ` copies of the `a`-th anchor vertex.
    pub copy_map: Vec<Vec<Vertex>>,
    /// `cross_sets[i]` holds copy `i` of every anchor vertex.
    pub cross_sets: Vec<VertexSet>,
    /// Original vertex of each split vertex.
    pub origin: Vec<Vertex>,
}

pub fn build_split(d: &Digraph, s: &VertexSet, ell: usize, p: &ArcPartition) -> Result<SplitDigraph> {
    validate_anchor(d, s)?;
    if p.len() != ell {
        return Err(Error::PartitionMismatch(format!(
            "partition has {} cells, expected {ell}",
            p.len()
        )));
    }
    let p = ArcPartition::new(p.cells.clone(), d, s)?;
    let k = s.len();
    let outside: Vec<Vertex> = (0..d.n()).filter(|&v| !s.contains(v)).collect();
    let n_out = outside.len();
    let total = n_out + ell * k;

    let mut origin = outside.clone();
    let mut index_of = vec![usize::MAX; d.n()];
    for (i, &v) in outside.iter().enumerate() {
        index_of[v] = i;
    }
    let anchor = s.as_slice();
    let pos_in_anchor = |v: Vertex| anchor.binary_search(&v).ok();
    let copy = |i: usize, a: usize| n_out + i * k + a;
    for _ in 0..ell {
        origin.extend_from_slice(anchor);
    }

    let mut arcs = Vec::new();
    for &(u, v) in d.arcs() {
        match (pos_in_anchor(u), pos_in_anchor(v)) {
            (None, None) => arcs.push((index_of[u], index_of[v])),
            (Some(a), None) => arcs.extend((0..ell).map(|i| (copy(i, a), index_of[v]))),
            (None, Some(b)) => arcs.extend((0..ell).map(|i| (index_of[u], copy(i, b)))),
            (Some(_), Some(_)) => {}
        }
    }
    for (i, cell) in p.cells.iter().enumerate() {
        for &(u, v) in cell {
            let (a, b) = (pos_in_anchor(u).unwrap(), pos_in_anchor(v).unwrap());
            arcs.push((copy(i, a), copy(i, b)));
        }
    }

    let labels = (0..total)
        .map(|x| {
            let v = origin[x];
            let base = d.label(v).map_or_else(|| v.to_string(), str::to_string);
            if x < n_out {
                base
            } else {
                format!("{base}#{}", (x - n_out) / k)
            }
        })
        .collect();
    let base = Digraph::new(total, arcs)?.with_labels(labels)?;
    let copy_map = (0..k).map(|a| (0..ell).map(|i| copy(i, a)).collect()).collect();
    let cross_sets = (0..ell)
        .map(|i| VertexSet::from_iter_dedup((0..k).map(|a| copy(i, a))))
        .collect();
    Ok(SplitDigraph {
        base,
        copy_map,
        cross_sets,
        origin,
    })
}

/// Seeds to be extended to disjoint strong vertex sets.
#[derive(Clone, Debug)]
pub struct ExtensionInstance {
    pub host: Digraph,
    pub seeds: Vec<VertexSet>,
}

/// Disjoint `Z_1..Z_ℓ` with `X_i ⊆ Z_i` and `host[Z_i]` strong, or `None`
/// when no such sets exist. Requires every vertex outside the seeds to be
/// adjacent to every other vertex of the host.
pub fn strong_extension_packing(e: &ExtensionInstance) -> Result<Option<Vec<VertexSet>>> {
    let d = &e.host;
    let n = d.n();
    let mut in_seed = vec![false; n];
    for x in &e.seeds {
        if x.is_empty() {
            return Err(Error::InvalidExtension("empty seed".into()));
        }
        for v in x.iter() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if in_seed[v] {
                return Err(Error::InvalidExtension(format!("vertex {v} lies in two seeds")));
            }
            in_seed[v] = true;
        }
    }
    for v in (0..n).filter(|&v| !in_seed[v]) {
        if let Some(u) = (0..n).find(|&u| u != v && !d.adjacent(u, v)) {
            return Err(Error::HypothesisViolation(u.min(v), u.max(v)));
        }
    }

    let mut ext = Extender {
        d,
        used: in_seed,
        sets: e.seeds.iter().map(|x| x.as_slice().to_vec()).collect(),
    };
    let found = ext.expand(0);
    debug_assert!(found.as_ref().is_none_or(|z| z.iter().all(|z| is_strong_on(z, d.arcs()))));
    Ok(found.map(|z| z.into_iter().map(VertexSet::from_iter_dedup).collect()))
}

struct Extender<'a> {
    d: &'a Digraph,
    /// Vertices currently owned by some set.
    used: Vec<bool>,
    sets: Vec<Vec<Vertex>>,
}

/// Strong components of `d[set]`, in topological order, as vertex lists.
fn components(d: &Digraph, set: &[Vertex]) -> Vec<Vec<Vertex>> {
    let local: Vec<Vec<usize>> = set
        .iter()
        .map(|&v| {
            d.out_neighbors(v)
                .iter()
                .filter_map(|w| set.binary_search(w).ok())
                .collect()
        })
        .collect();
    tarjan(set.len(), |v| &local[v])
        .into_iter()
        .map(|c| c.into_iter().map(|i| set[i]).collect())
        .collect()
}

/// Components with no entering (initial) or no leaving (terminal) arc
/// inside the set.
fn extreme_components(d: &Digraph, comps: &[Vec<Vertex>]) -> (Vec<usize>, Vec<usize>) {
    let mut comp_of = std::collections::HashMap::new();
    for (c, vs) in comps.iter().enumerate() {
        for &v in vs {
            comp_of.insert(v, c);
        }
    }
    let mut has_in = vec![false; comps.len()];
    let mut has_out = vec![false; comps.len()];
    for (c, vs) in comps.iter().enumerate() {
        for &v in vs {
            for w in d.out_neighbors(v) {
                if let Some(&c2) = comp_of.get(w) {
                    if c2 != c {
                        has_out[c] = true;
                        has_in[c2] = true;
                    }
                }
            }
        }
    }
    let initial = (0..comps.len()).filter(|&c| !has_in[c]).collect();
    let terminal = (0..comps.len()).filter(|&c| !has_out[c]).collect();
    (initial, terminal)
}

impl Extender<'_> {
    /// Boundary guessing for sets `i..`, then the linkage step.
    fn expand(&mut self, i: usize) -> Option<Vec<Vec<Vertex>>> {
        if i == self.sets.len() {
            return self.close();
        }
        let comps = components(self.d, &self.sets[i]);
        let (initial, terminal) = extreme_components(self.d, &comps);
        if initial.len() == 1 && terminal.len() == 1 {
            return self.expand(i + 1);
        }

        // Each initial component needs an in-neighbor from outside, each
        // terminal one an out-neighbor.
        let free: Vec<Vertex> = (0..self.d.n()).filter(|&v| !self.used[v]).collect();
        let mut options: Vec<Vec<Vertex>> = Vec::new();
        for &c in &initial {
            options.push(
                free.iter()
                    .copied()
                    .filter(|&v| comps[c].iter().any(|&x| self.d.has_arc(v, x)))
                    .collect(),
            );
        }
        for &c in &terminal {
            options.push(
                free.iter()
                    .copied()
                    .filter(|&w| comps[c].iter().any(|&x| self.d.has_arc(x, w)))
                    .collect(),
            );
        }
        if options.iter().any(Vec::is_empty) {
            return None;
        }

        let mut tried: HashSet<Vec<Vertex>> = HashSet::new();
        let mut choice = vec![0usize; options.len()];
        loop {
            let added: BTreeSet<Vertex> = choice.iter().zip(&options).map(|(&c, o)| o[c]).collect();
            let added: Vec<Vertex> = added.into_iter().collect();
            if tried.insert(added.clone()) {
                let before = self.sets[i].clone();
                for &v in &added {
                    self.used[v] = true;
                }
                self.sets[i].extend_from_slice(&added);
                self.sets[i].sort_unstable();
                // The enlarged set is re-examined; it may still need more.
                if let Some(found) = self.expand(i) {
                    return Some(found);
                }
                self.sets[i] = before;
                for &v in &added {
                    self.used[v] = false;
                }
            }
            // odometer
            let mut j = options.len();
            loop {
                if j == 0 {
                    return None;
                }
                j -= 1;
                choice[j] += 1;
                if choice[j] < options[j].len() {
                    break;
                }
                choice[j] = 0;
            }
        }
    }

    /// Every set now has a unique initial and terminal component. For each
    /// non-strong set, pick an ordering of some interior components and ask
    /// for disjoint paths through free vertices from the terminal component,
    /// via those, back to the initial one.
    fn close(&self) -> Option<Vec<Vec<Vertex>>> {
        let comps: Vec<Vec<Vec<Vertex>>> = self.sets.iter().map(|s| components(self.d, s)).collect();
        let open: Vec<usize> = (0..self.sets.len()).filter(|&i| comps[i].len() > 1).collect();
        if open.is_empty() {
            return Some(self.sets.clone());
        }
        let routes: Vec<Vec<Vec<usize>>> = open
            .iter()
            .map(|&i| {
                let r = comps[i].len();
                arrangements(r - 2)
                    .into_iter()
                    .map(|mid| {
                        let mut z = vec![r - 1];
                        z.extend(mid.into_iter().map(|c| c + 1));
                        z.push(0);
                        z
                    })
                    .collect()
            })
            .collect();

        let mut choice = vec![0usize; open.len()];
        loop {
            let picked: Vec<&Vec<usize>> = choice.iter().zip(&routes).map(|(&c, r)| &r[c]).collect();
            if let Some(found) = self.link(&comps, &open, &picked) {
                return Some(found);
            }
            let mut j = open.len();
            loop {
                if j == 0 {
                    return None;
                }
                j -= 1;
                choice[j] += 1;
                if choice[j] < routes[j].len() {
                    break;
                }
                choice[j] = 0;
            }
        }
    }

    fn link(
        &self,
        comps: &[Vec<Vec<Vertex>>],
        open: &[usize],
        picked: &[&Vec<usize>],
    ) -> Option<Vec<Vec<Vertex>>> {
        let d = self.d;
        let free: Vec<Vertex> = (0..d.n()).filter(|&v| !self.used[v]).collect();
        let nf = free.len();
        // Node layout: free vertices, then for every route position an
        // entry node and an exit node (unused ones stay isolated).
        let mut members: Vec<&Vec<Vertex>> = Vec::new();
        let mut pairs = Vec::new();
        for (slot, &i) in open.iter().enumerate() {
            let z = picked[slot];
            let base = members.len();
            for &c in z.iter() {
                members.push(&comps[i][c]);
            }
            for p in 0..z.len() - 1 {
                let exit = nf + 2 * (base + p) + 1;
                let entry = nf + 2 * (base + p + 1);
                pairs.push((exit, entry));
            }
        }
        let total = nf + 2 * members.len();
        let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); total];
        for (a, &u) in free.iter().enumerate() {
            for (b, &v) in free.iter().enumerate() {
                if d.has_arc(u, v) {
                    adj[a].push(b);
                }
            }
        }
        for (m, comp) in members.iter().enumerate() {
            let (entry, exit) = (nf + 2 * m, nf + 2 * m + 1);
            for (a, &y) in free.iter().enumerate() {
                if comp.iter().any(|&c| d.has_arc(c, y)) {
                    adj[exit].push(a);
                }
                if comp.iter().any(|&c| d.has_arc(y, c)) {
                    adj[a].push(entry);
                }
            }
            for (m2, comp2) in members.iter().enumerate() {
                if m2 != m && comp.iter().any(|&c| comp2.iter().any(|&c2| d.has_arc(c, c2))) {
                    adj[exit].push(nf + 2 * m2);
                }
            }
        }

        let linkage = linkage_on(&adj, &pairs)?;
        let mut out = self.sets.clone();
        let mut p = 0;
        for (slot, &i) in open.iter().enumerate() {
            for _ in 0..picked[slot].len() - 1 {
                let path = &linkage.paths[p];
                out[i].extend(path[1..path.len() - 1].iter().map(|&a| free[a]));
                p += 1;
            }
            out[i].sort_unstable();
        }
        Some(out)
    }
}

/// Every ordered selection of distinct items from `0..m`, shortest first;
/// within one subset the decreasing order comes first.
fn arrangements(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in 0..=m {
        for subset in combinations(m, size) {
            let mut perm: Vec<usize> = subset.into_iter().rev().collect();
            loop {
                out.push(perm.clone());
                if !prev_permutation(&mut perm) {
                    break;
                }
            }
        }
    }
    out
}

/// Steps to the lexicographically previous permutation; `false` once the
/// increasing order has been reached.
fn prev_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] <= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] >= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub(crate) fn anchor_arcs(d: &Digraph, s: &VertexSet) -> Vec<Arc> {
    d.arcs()
        .iter()
        .copied()
        .filter(|&(u, v)| s.contains(u) && s.contains(v))
        .collect()
}

/// Prefix filter shared by the partition searches: a cell whose arcs do not
/// already make `S` strong needs at least one vertex outside `S` of its own,
/// and such a cell needs at least `k` arcs before it can be strong.
pub(crate) fn cell_budget_ok(prefix: &[usize], m: usize, ell: usize, k: usize, outside: usize) -> bool {
    if ell <= outside {
        return true;
    }
    let mut count = vec![0usize; ell];
    for &c in prefix {
        count[c] += 1;
    }
    let mut deficit: Vec<usize> = count.iter().map(|&c| k.saturating_sub(c)).collect();
    deficit.sort_unstable();
    let needed: usize = deficit[..ell - outside].iter().sum();
    needed <= m - prefix.len()
}

/// A packing of `ell` parts for anchor `s` in the semicomplete digraph `d`,
/// or `None` when `κ_S(d) < ell`.
pub fn decide_kappa_s_semicomplete(d: &Digraph, s: &VertexSet, ell: usize) -> Result<Option<Packing>> {
    validate_anchor(d, s)?;
    if let Some((u, v)) = first_non_adjacent(d) {
        return Err(Error::NotSemicomplete(u, v));
    }
    if ell == 0 {
        return Ok(Some(Packing::empty(s.clone())));
    }
    let k = s.len();
    let outside = d.n() - k;
    let inside = anchor_arcs(d, s);
    let m = inside.len();
    let anchor = s.as_slice();

    let mut result = None;
    let mut failure = None;
    search_partitions(
        m,
        ell,
        |prefix| cell_budget_ok(prefix, m, ell, k, outside),
        |assign| {
            let p = ArcPartition::from_assignment(&inside, assign, ell);
            let weak = p.cells.iter().filter(|c| !is_strong_on(anchor, c)).count();
            if weak > outside {
                return false;
            }
            let outcome = build_split(d, s, ell, &p).and_then(|split| {
                let inst = ExtensionInstance {
                    host: split.base.clone(),
                    seeds: split.cross_sets.clone(),
                };
                Ok(strong_extension_packing(&inst)?.map(|z| reconstruct(d, s, &split, &p, &z)))
            });
            match outcome {
                Ok(Some(packing)) => {
                    result = Some(packing);
                    true
                }
                Ok(None) => false,
                Err(e) => {
                    failure = Some(e);
                    true
                }
            }
        },
    );
    match failure {
        Some(e) => Err(e),
        None => Ok(result),
    }
}

/// Part `i` keeps the arcs of `d` spanned by the original vertices of `Z_i`
/// that leave `S`, plus cell `i`.
fn reconstruct(d: &Digraph, s: &VertexSet, split: &SplitDigraph, p: &ArcPartition, z: &[VertexSet]) -> Packing {
    let parts = z
        .iter()
        .zip(&p.cells)
        .map(|(zi, cell)| {
            let verts: BTreeSet<Vertex> = zi.iter().map(|x| split.origin[x]).collect();
            let arcs = d
                .arcs()
                .iter()
                .copied()
                .filter(|&(u, v)| verts.contains(&u) && verts.contains(&v))
                .filter(|&(u, v)| !(s.contains(u) && s.contains(v)))
                .chain(cell.iter().copied())
                .collect::<Vec<_>>();
            Subdigraph::new(VertexSet::from_iter_dedup(verts), arcs)
        })
        .collect();
    Packing {
        anchor: s.clone(),
        parts,
    }
}

/// Outcome of the `κ_k` decision; `failing_set` is the first `k`-subset in
/// lexicographic order without a packing of the requested size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KDecision {
    pub holds: bool,
    pub failing_set: Option<VertexSet>,
}

pub fn decide_kappa_k_semicomplete(d: &Digraph, k: usize, ell: usize) -> Result<KDecision> {
    let n = d.n();
    if k < 2 || k > n {
        return Err(Error::InvalidK { k, n });
    }
    if let Some((u, v)) = first_non_adjacent(d) {
        return Err(Error::NotSemicomplete(u, v));
    }
    for members in combinations(n, k) {
        let s = VertexSet::from_iter_dedup(members);
        if decide_kappa_s_semicomplete(d, &s, ell)?.is_none() {
            return Ok(KDecision {
                holds: false,
                failing_set: Some(s),
            });
        }
    }
    Ok(KDecision {
        holds: true,
        failing_set: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::packing::verify_packing;

    fn set(v: &[Vertex]) -> VertexSet {
        VertexSet::from_iter_dedup(v.iter().copied())
    }

    #[test]
    fn semicompleteness() {
        assert!(is_semicomplete(&Digraph::complete_biorientation(5)));
        assert!(!is_semicomplete(&Digraph::directed_cycle(4)));
        let t = Digraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(is_semicomplete(&t));
    }

    #[test]
    fn split_injects_cells_into_layers() {
        let d = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let s = set(&[0, 1]);
        let p = ArcPartition::new(vec![vec![(0, 1)], vec![]], &d, &s).unwrap();
        let split = build_split(&d, &s, 2, &p).unwrap();
        // outside vertex 2 first, then layer 0 = {1,2}, layer 1 = {3,4}
        assert_eq!(split.base.n(), 5);
        assert_eq!(split.cross_sets, vec![set(&[1, 2]), set(&[3, 4])]);
        assert!(split.base.has_arc(1, 2));
        assert!(!split.base.has_arc(3, 4));
        assert_eq!(split.origin, vec![2, 0, 1, 0, 1]);
        assert!(split.base.has_arc(0, 1) && split.base.has_arc(0, 3));
        assert!(split.base.has_arc(2, 0) && split.base.has_arc(4, 0));

        let bad = ArcPartition::new(vec![vec![(0, 1)], vec![(0, 1)]], &d, &s);
        assert!(matches!(bad, Err(Error::PartitionMismatch(_))));
        let wrong_len = ArcPartition::new(vec![vec![(0, 1)]], &d, &s).unwrap();
        assert!(matches!(build_split(&d, &s, 2, &wrong_len), Err(Error::PartitionMismatch(_))));
    }

    #[test]
    fn extension_with_unique_completion() {
        // seed {0,1} with 0 -> 1; outside vertex 2 closes it via 1 -> 2 -> 0
        let d = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let e = ExtensionInstance {
            host: d,
            seeds: vec![set(&[0, 1])],
        };
        assert_eq!(strong_extension_packing(&e).unwrap(), Some(vec![set(&[0, 1, 2])]));
    }

    #[test]
    fn strong_seeds_are_kept() {
        let d = Digraph::complete_biorientation(4);
        let e = ExtensionInstance {
            host: d,
            seeds: vec![set(&[0, 1]), set(&[2, 3])],
        };
        assert_eq!(strong_extension_packing(&e).unwrap(), Some(vec![set(&[0, 1]), set(&[2, 3])]));
    }

    #[test]
    fn hypothesis_is_enforced() {
        let d = Digraph::directed_cycle(4);
        let e = ExtensionInstance {
            host: d,
            seeds: vec![set(&[0])],
        };
        assert!(matches!(strong_extension_packing(&e), Err(Error::HypothesisViolation(1, 3))));
    }

    #[test]
    fn small_decisions() {
        let tri = Digraph::directed_cycle(3);
        let p = decide_kappa_s_semicomplete(&tri, &set(&[0, 1]), 1).unwrap().unwrap();
        assert!(verify_packing(&tri, &p).unwrap());

        let trans = Digraph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(decide_kappa_s_semicomplete(&trans, &set(&[0, 1]), 1).unwrap(), None);

        let k4 = Digraph::complete_biorientation(4);
        let p = decide_kappa_s_semicomplete(&k4, &set(&[0, 1]), 3).unwrap().unwrap();
        assert_eq!(p.len(), 3);
        assert!(verify_packing(&k4, &p).unwrap());
        assert_eq!(decide_kappa_s_semicomplete(&k4, &set(&[0, 1]), 4).unwrap(), None);

        assert!(matches!(
            decide_kappa_s_semicomplete(&Digraph::directed_cycle(4), &set(&[0, 1]), 1),
            Err(Error::NotSemicomplete(0, 2))
        ));
    }

    #[test]
    fn complete_biorientation_of_order_five() {
        let k5 = Digraph::complete_biorientation(5);
        assert!(decide_kappa_k_semicomplete(&k5, 4, 3).unwrap().holds);
        let no = decide_kappa_k_semicomplete(&k5, 4, 4).unwrap();
        assert!(!no.holds);
        assert_eq!(no.failing_set, Some(set(&[0, 1, 2, 3])));
    }

    #[test]
    fn arrangements_cover_all_orders() {
        assert_eq!(arrangements(0), vec![Vec::<usize>::new()]);
        assert_eq!(arrangements(2), vec![vec![], vec![0], vec![1], vec![1, 0], vec![0, 1]]);
        // sum over j of 3!/(3-j)! = 1 + 3 + 6 + 6
        assert_eq!(arrangements(3).len(), 16);
    }
}
