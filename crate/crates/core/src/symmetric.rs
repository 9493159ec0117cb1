//! Symmetric digraphs: `κ_2` through vertex connectivity, and the
//! fixed-`(k, ℓ)` decision procedure built on acceptable forest packings.
//!
//! A strong symmetric subgraph containing `S` can always be thinned to the
//! biorientation of a forest plus some arcs inside `S`. Contracting the
//! forest's non-anchor vertices of degree two leaves a skeleton on at most
//! `2k − 2` vertices, so the search enumerates skeletons and asks a single
//! undirected linkage question to realize them disjointly.

use crate::combinatorics::{combinations, search_partitions};
use crate::digraph::{
    is_strong_on, underlying_graph, Arc, Digraph, Edge, Subdigraph, UndirectedGraph, Vertex, VertexSet,
};
use crate::error::{Error, Result};
use crate::linkage::linkage_on;
use crate::packing::{validate_anchor, KappaResult, Packing};
use crate::semicomplete::{anchor_arcs, cell_budget_ok};
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};

/// Maximum number of internally disjoint `x`–`y` paths; an edge `xy`
/// counts as one path.
pub fn local_connectivity(g: &UndirectedGraph, x: Vertex, y: Vertex) -> usize {
    disjoint_paths(g, x, y).len()
}

/// A maximum family of internally disjoint `x`–`y` paths, via unit
/// vertex capacities.
pub fn disjoint_paths(g: &UndirectedGraph, x: Vertex, y: Vertex) -> Vec<Vec<Vertex>> {
    let n = g.n();
    // v_in = 2v, v_out = 2v + 1
    let nodes = 2 * n;
    let mut cap = vec![vec![0i32; nodes]; nodes];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = 1;
    }
    for &(u, v) in g.edges() {
        cap[2 * u + 1][2 * v] = 1;
        cap[2 * v + 1][2 * u] = 1;
    }
    let (src, dst) = (2 * x + 1, 2 * y);
    loop {
        let mut prev = vec![usize::MAX; nodes];
        prev[src] = src;
        let mut stack = vec![src];
        while let Some(a) = stack.pop() {
            if a == dst {
                break;
            }
            for b in 0..nodes {
                if cap[a][b] > 0 && prev[b] == usize::MAX {
                    prev[b] = a;
                    stack.push(b);
                }
            }
        }
        if prev[dst] == usize::MAX {
            break;
        }
        let mut b = dst;
        while b != src {
            let a = prev[b];
            cap[a][b] -= 1;
            cap[b][a] += 1;
            b = a;
        }
    }
    // Saturated original edges (residual capacity gone) carry flow.
    let flows = |a: usize, b: usize| {
        let original = a % 2 == 1 && b.is_multiple_of(2) && g.has_edge(a / 2, b / 2);
        original && cap[a][b] == 0 && cap[b][a] == 1
    };
    let mut paths = Vec::new();
    for &w in g.neighbors(x) {
        if !flows(src, 2 * w) {
            continue;
        }
        let mut path = vec![x, w];
        let mut cur = w;
        while cur != y {
            let next = (0..n)
                .find(|&z| g.has_edge(cur, z) && flows(2 * cur + 1, 2 * z))
                .expect("flow leaves every internal vertex it enters");
            path.push(next);
            cur = next;
        }
        paths.push(path);
    }
    paths
}

/// `κ(G)`: the least local connectivity over all vertex pairs.
pub fn vertex_connectivity(g: &UndirectedGraph) -> Result<usize> {
    Ok(min_pair(g)?.0)
}

fn min_pair(g: &UndirectedGraph) -> Result<(usize, Vertex, Vertex)> {
    if g.n() < 2 {
        return Err(Error::TooSmall);
    }
    let mut best = (usize::MAX, 0, 1);
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            let c = local_connectivity(g, x, y);
            if c < best.0 {
                best = (c, x, y);
            }
        }
    }
    Ok(best)
}

/// How [`kappa2_symmetric`] treats a disconnected graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DisconnectedPolicy {
    /// Reject with [`Error::Disconnected`].
    #[default]
    Strict,
    /// Report `κ_2 = 0`.
    Relaxed,
}

/// `κ_2(↔G)`, equal to `κ(G)`. The certificate biorients a maximum family
/// of internally disjoint paths between the minimizing pair.
pub fn kappa2_symmetric(g: &UndirectedGraph, policy: DisconnectedPolicy) -> Result<KappaResult> {
    if g.n() < 2 {
        return Err(Error::TooSmall);
    }
    if !g.is_connected() && policy == DisconnectedPolicy::Strict {
        return Err(Error::Disconnected);
    }
    let (value, x, y) = min_pair(g)?;
    let anchor = VertexSet::from_iter_dedup([x, y]);
    let parts = disjoint_paths(g, x, y)
        .into_iter()
        .map(|p| {
            let arcs = p.windows(2).flat_map(|w| [(w[0], w[1]), (w[1], w[0])]);
            Subdigraph::new(VertexSet::from_iter_dedup(p.iter().copied()), arcs)
        })
        .collect();
    Ok(KappaResult {
        value,
        certificate: Some(Packing { anchor: anchor.clone(), parts }),
        witness_set: Some(anchor),
    })
}

/// Contracted forest shape: anchor vertices plus branch vertices of degree
/// at least three, joined by abstract edges that stand for host paths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Skeleton {
    pub vertices: VertexSet,
    pub edges: Vec<Edge>,
}

impl Skeleton {
    fn branch_vertices<'a>(&'a self, s: &'a VertexSet) -> impl Iterator<Item = Vertex> + 'a {
        self.vertices.iter().filter(move |&v| !s.contains(v))
    }

    /// `↔(skeleton) + anchor` is strong and contains `S`.
    fn accepts(&self, s: &VertexSet, anchor: &[Arc]) -> bool {
        let verts: BTreeSet<Vertex> = s.iter().chain(self.vertices.iter()).collect();
        let verts: Vec<Vertex> = verts.into_iter().collect();
        let arcs: Vec<Arc> = self
            .edges
            .iter()
            .flat_map(|&(u, v)| [(u, v), (v, u)])
            .chain(anchor.iter().copied())
            .collect();
        is_strong_on(&verts, &arcs)
    }
}

/// Every skeleton for anchor `s` over the vertices of `g`, sorted by edge
/// count and then edge list. Skeletons are labeled: the same shape on
/// different host vertices is listed once per placement.
pub fn enumerate_skeletons(g: &UndirectedGraph, s: &VertexSet) -> Vec<Skeleton> {
    let k = s.len();
    let others: Vec<Vertex> = (0..g.n()).filter(|&v| !s.contains(v)).collect();
    let mut out = BTreeSet::new();
    for size in 0..=k.saturating_sub(2).min(others.len()) {
        for pick in combinations(others.len(), size) {
            let branch: Vec<Vertex> = pick.iter().map(|&i| others[i]).collect();
            let verts: Vec<Vertex> = s.iter().chain(branch.iter().copied()).collect();
            let pairs: Vec<Edge> = (0..verts.len())
                .flat_map(|a| (a + 1..verts.len()).map(move |b| (a, b)))
                .map(|(a, b)| (verts[a].min(verts[b]), verts[a].max(verts[b])))
                .collect();
            forests(&verts, &pairs, &mut |edges: &[Edge]| {
                let deg = |v: Vertex| edges.iter().filter(|&&(a, b)| a == v || b == v).count();
                if branch.iter().all(|&b| deg(b) >= 3) {
                    let used = VertexSet::from_iter_dedup(edges.iter().flat_map(|&(a, b)| [a, b]));
                    let mut edges = edges.to_vec();
                    edges.sort_unstable();
                    out.insert((edges.len(), Skeleton { vertices: used, edges }));
                }
            });
        }
    }
    out.into_iter().map(|(_, sk)| sk).collect()
}

/// Calls `visit` on every acyclic subset of `pairs`.
fn forests(verts: &[Vertex], pairs: &[Edge], visit: &mut dyn FnMut(&[Edge])) {
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        r
    }
    fn rec(
        i: usize,
        pairs: &[Edge],
        idx: &dyn Fn(Vertex) -> usize,
        parent: &mut Vec<usize>,
        chosen: &mut Vec<Edge>,
        visit: &mut dyn FnMut(&[Edge]),
    ) {
        if i == pairs.len() {
            visit(chosen);
            return;
        }
        rec(i + 1, pairs, idx, parent, chosen, visit);
        let (u, v) = pairs[i];
        let (ru, rv) = (find(parent, idx(u)), find(parent, idx(v)));
        if ru != rv {
            parent[ru] = rv;
            chosen.push((u, v));
            rec(i + 1, pairs, idx, parent, chosen, visit);
            chosen.pop();
            parent[ru] = ru;
        }
    }
    let idx = |v: Vertex| verts.iter().position(|&w| w == v).expect("pair endpoint listed");
    let mut parent: Vec<usize> = (0..verts.len()).collect();
    rec(0, pairs, &idx, &mut parent, &mut Vec::new(), visit);
}

/// Arcs with both ends in the anchor, assigned to one slot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnchorArcSet {
    pub arcs: Vec<Arc>,
}

impl AnchorArcSet {
    pub fn new(arcs: impl IntoIterator<Item = Arc>, s: &VertexSet) -> Result<Self> {
        let set: BTreeSet<Arc> = arcs.into_iter().collect();
        if let Some(&(u, v)) = set.iter().find(|&&(u, v)| !s.contains(u) || !s.contains(v)) {
            return Err(Error::InvalidAnchor(format!("arc {u}->{v} leaves the anchor")));
        }
        Ok(AnchorArcSet {
            arcs: set.into_iter().collect(),
        })
    }
}

/// Skeletons per slot and, when found, the host forests realizing them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForestPlan {
    pub skeletons: Vec<Skeleton>,
    pub realization: Option<Vec<Vec<Edge>>>,
}

type RealizationCache = HashMap<Vec<Skeleton>, Option<Vec<Vec<Edge>>>>;

/// Edge-disjoint forests `F_1..F_ℓ` of `g`, sharing only anchor vertices,
/// such that `↔F_i + anchors[i]` is strong and contains `S`.
pub fn acceptable_forest_packing(
    g: &UndirectedGraph,
    s: &VertexSet,
    anchors: &[AnchorArcSet],
) -> Result<Option<ForestPlan>> {
    if let Some(v) = s.iter().find(|&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if let Some(&e) = g.edges().iter().find(|&&(u, v)| s.contains(u) && s.contains(v)) {
        return Err(Error::NotIndependent(e));
    }
    let skeletons = enumerate_skeletons(g, s);
    Ok(ForestSearch {
        g,
        s,
        skeletons: &skeletons,
        cache: &mut HashMap::new(),
    }
    .run(anchors))
}

struct ForestSearch<'a> {
    g: &'a UndirectedGraph,
    s: &'a VertexSet,
    skeletons: &'a [Skeleton],
    cache: &'a mut RealizationCache,
}

impl ForestSearch<'_> {
    fn run(&mut self, anchors: &[AnchorArcSet]) -> Option<ForestPlan> {
        let options: Vec<Vec<&Skeleton>> = anchors
            .iter()
            .map(|a| self.skeletons.iter().filter(|sk| sk.accepts(self.s, &a.arcs)).collect())
            .collect();
        if options.iter().any(Vec::is_empty) {
            return None;
        }
        let mut chosen = Vec::with_capacity(options.len());
        let mut taken = vec![false; self.g.n()];
        self.pick(&options, &mut chosen, &mut taken)
    }

    fn pick<'s>(
        &mut self,
        options: &[Vec<&'s Skeleton>],
        chosen: &mut Vec<&'s Skeleton>,
        taken: &mut Vec<bool>,
    ) -> Option<ForestPlan> {
        let i = chosen.len();
        if i == options.len() {
            let forests = self.realize(chosen)?;
            return Some(ForestPlan {
                skeletons: chosen.iter().map(|&sk| sk.clone()).collect(),
                realization: Some(forests),
            });
        }
        for &sk in &options[i] {
            let branch: Vec<Vertex> = sk.branch_vertices(self.s).collect();
            if branch.iter().any(|&b| taken[b]) {
                continue;
            }
            for &b in &branch {
                taken[b] = true;
            }
            chosen.push(sk);
            let found = self.pick(options, chosen, taken);
            chosen.pop();
            for &b in &branch {
                taken[b] = false;
            }
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Forests for the chosen skeletons, slot by slot; memoized on the
    /// sorted tuple since slots are interchangeable here.
    fn realize(&mut self, chosen: &[&Skeleton]) -> Option<Vec<Vec<Edge>>> {
        let mut order: Vec<usize> = (0..chosen.len()).collect();
        order.sort_by(|&a, &b| chosen[a].cmp(chosen[b]));
        let key: Vec<Skeleton> = order.iter().map(|&i| chosen[i].clone()).collect();
        let sorted = match self.cache.get(&key) {
            Some(hit) => hit.clone(),
            None => {
                let fresh = realize_skeletons(self.g, self.s, &key);
                self.cache.insert(key, fresh.clone());
                fresh
            }
        }?;
        let mut out = vec![Vec::new(); chosen.len()];
        for (pos, &slot) in order.iter().enumerate() {
            out[slot] = sorted[pos].clone();
        }
        Some(out)
    }
}

/// Realizes skeletons with disjoint branch sets as host forests. Every
/// skeleton edge becomes a pair of private copies of its endpoints, and a
/// host edge joining two skeleton vertices is routed through a junction
/// node so it serves at most one skeleton edge.
fn realize_skeletons(g: &UndirectedGraph, s: &VertexSet, tuple: &[Skeleton]) -> Option<Vec<Vec<Edge>>> {
    let n = g.n();
    let mut skeletal = vec![false; n];
    for v in s.iter() {
        skeletal[v] = true;
    }
    for sk in tuple {
        for v in sk.vertices.iter() {
            skeletal[v] = true;
        }
    }
    let free: Vec<Vertex> = (0..n).filter(|&v| !skeletal[v]).collect();
    let mut node_of = vec![usize::MAX; n];
    for (i, &v) in free.iter().enumerate() {
        node_of[v] = i;
    }
    // node -> host vertex, None for junctions
    let mut host: Vec<Option<Vertex>> = free.iter().map(|&v| Some(v)).collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); free.len()];
    let link = |adj: &mut Vec<Vec<usize>>, a: usize, b: usize| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for &(u, v) in g.edges() {
        if !skeletal[u] && !skeletal[v] {
            link(&mut adj, node_of[u], node_of[v]);
        }
    }
    let mut junction: HashMap<Edge, usize> = HashMap::new();
    let mut pairs = Vec::new();
    for sk in tuple {
        for &(x, y) in &sk.edges {
            let mut ends = [0usize; 2];
            for (slot, &v) in [x, y].iter().enumerate() {
                let c = adj.len();
                adj.push(Vec::new());
                host.push(Some(v));
                for &w in g.neighbors(v) {
                    if !skeletal[w] {
                        link(&mut adj, c, node_of[w]);
                    }
                }
                ends[slot] = c;
            }
            if g.has_edge(x, y) {
                let z = *junction.entry((x, y)).or_insert_with(|| {
                    adj.push(Vec::new());
                    host.push(None);
                    adj.len() - 1
                });
                link(&mut adj, ends[0], z);
                link(&mut adj, ends[1], z);
            }
            pairs.push((ends[0], ends[1]));
        }
    }
    let linkage = linkage_on(&adj, &pairs)?;
    let mut paths = linkage.paths.into_iter();
    Some(
        tuple
            .iter()
            .map(|sk| {
                let mut edges: Vec<Edge> = sk
                    .edges
                    .iter()
                    .flat_map(|_| {
                        let walk: Vec<Vertex> = paths
                            .next()
                            .expect("one path per skeleton edge")
                            .into_iter()
                            .filter_map(|node| host[node])
                            .collect();
                        walk.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))).collect::<Vec<_>>()
                    })
                    .collect();
                edges.sort_unstable();
                edges
            })
            .collect(),
    )
}

/// A packing of `ell` parts for anchor `s` in the symmetric digraph `d`, or
/// `None` when `κ_S(d) < ell`.
pub fn decide_kappa_s_symmetric(d: &Digraph, s: &VertexSet, ell: usize) -> Result<Option<Packing>> {
    validate_anchor(d, s)?;
    if let Some(a) = d.first_unpaired_arc() {
        return Err(Error::NotSymmetric(a));
    }
    if ell == 0 {
        return Ok(Some(Packing::empty(s.clone())));
    }
    let inside = anchor_arcs(d, s);
    let g = underlying_graph(&d.without_arcs(&inside));
    let skeletons = enumerate_skeletons(&g, s);
    let mut cache = RealizationCache::new();
    let (m, k, outside) = (inside.len(), s.len(), d.n() - s.len());

    let mut result = None;
    search_partitions(
        m,
        ell,
        |prefix| cell_budget_ok(prefix, m, ell, k, outside),
        |assign| {
            let mut cells = vec![Vec::new(); ell];
            for (&a, &c) in inside.iter().zip(assign) {
                cells[c].push(a);
            }
            let anchors: Vec<AnchorArcSet> = cells.into_iter().map(|arcs| AnchorArcSet { arcs }).collect();
            let plan = ForestSearch {
                g: &g,
                s,
                skeletons: &skeletons,
                cache: &mut cache,
            }
            .run(&anchors);
            match plan {
                Some(plan) => {
                    result = Some(assemble(s, &anchors, &plan));
                    true
                }
                None => false,
            }
        },
    );
    Ok(result)
}

/// `H_i = ↔F_i + P_i`.
fn assemble(s: &VertexSet, anchors: &[AnchorArcSet], plan: &ForestPlan) -> Packing {
    let forests = plan.realization.as_ref().expect("assembled plans are realized");
    let parts = forests
        .iter()
        .zip(anchors)
        .map(|(f, a)| {
            let arcs = f
                .iter()
                .flat_map(|&(u, v)| [(u, v), (v, u)])
                .chain(a.arcs.iter().copied());
            Subdigraph::from_arcs(arcs, s)
        })
        .collect();
    Packing {
        anchor: s.clone(),
        parts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::biorient;
    use crate::packing::verify_packing;

    fn set(v: &[Vertex]) -> VertexSet {
        VertexSet::from_iter_dedup(v.iter().copied())
    }

    #[test]
    fn connectivity_of_small_graphs() {
        assert_eq!(vertex_connectivity(&UndirectedGraph::complete(4)), Ok(3));
        assert_eq!(vertex_connectivity(&UndirectedGraph::path(3)), Ok(1));
        assert_eq!(vertex_connectivity(&UndirectedGraph::cycle(4)), Ok(2));
        assert_eq!(vertex_connectivity(&UndirectedGraph::complete(2)), Ok(1));
        assert_eq!(vertex_connectivity(&UndirectedGraph::complete(1)), Err(Error::TooSmall));
        let split = UndirectedGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&split), Ok(0));
    }

    #[test]
    fn disjoint_paths_are_internally_disjoint() {
        let k5 = UndirectedGraph::complete(5);
        let paths = disjoint_paths(&k5, 0, 4);
        assert_eq!(paths.len(), 4);
        let mut inner = BTreeSet::new();
        for p in &paths {
            assert_eq!((p[0], *p.last().unwrap()), (0, 4));
            assert!(p.windows(2).all(|w| k5.has_edge(w[0], w[1])));
            for &v in &p[1..p.len() - 1] {
                assert!(inner.insert(v));
            }
        }
    }

    #[test]
    fn kappa2_certificates() {
        let k3 = UndirectedGraph::complete(3);
        let r = kappa2_symmetric(&k3, DisconnectedPolicy::Strict).unwrap();
        assert_eq!(r.value, 2);
        assert!(verify_packing(&biorient(&k3), r.certificate.as_ref().unwrap()).unwrap());

        let split = UndirectedGraph::new(3, [(0, 1)]).unwrap();
        assert_eq!(kappa2_symmetric(&split, DisconnectedPolicy::Strict), Err(Error::Disconnected));
        let r = kappa2_symmetric(&split, DisconnectedPolicy::Relaxed).unwrap();
        assert_eq!(r.value, 0);
        assert!(r.certificate.unwrap().is_empty());
    }

    #[test]
    fn skeletons_respect_invariants() {
        let g = UndirectedGraph::complete(3);
        let s = set(&[0, 1]);
        let sks = enumerate_skeletons(&g, &s);
        assert_eq!(
            sks,
            vec![
                Skeleton { vertices: set(&[]), edges: vec![] },
                Skeleton { vertices: set(&[0, 1]), edges: vec![(0, 1)] },
            ]
        );
        let g = UndirectedGraph::complete(6);
        let s = set(&[0, 1, 2, 3]);
        for sk in enumerate_skeletons(&g, &s) {
            for v in sk.vertices.iter().filter(|&v| !s.contains(v)) {
                let deg = sk.edges.iter().filter(|&&(a, b)| a == v || b == v).count();
                assert!(deg >= 3);
            }
        }
    }

    #[test]
    fn forest_packing_examples() {
        let path = UndirectedGraph::path(3);
        let s = set(&[0, 2]);
        let two_cycle = AnchorArcSet::new([(0, 2), (2, 0)], &s).unwrap();
        let plan = acceptable_forest_packing(&path, &s, &[two_cycle]).unwrap().unwrap();
        assert_eq!(plan.realization, Some(vec![vec![]]));

        let empty = AnchorArcSet::new([], &s).unwrap();
        let plan = acceptable_forest_packing(&path, &s, std::slice::from_ref(&empty)).unwrap().unwrap();
        assert_eq!(plan.realization, Some(vec![vec![(0, 1), (1, 2)]]));

        // 4-cycle 0-1-2-3: two internally disjoint paths between 0 and 2
        let c4 = UndirectedGraph::cycle(4);
        let plan = acceptable_forest_packing(&c4, &s, &[empty.clone(), empty.clone()]).unwrap().unwrap();
        let forests = plan.realization.unwrap();
        assert_eq!(forests.len(), 2);
        assert!(forests.iter().all(|f| f.len() == 2));
        assert_eq!(acceptable_forest_packing(&c4, &s, &[empty.clone(), empty.clone(), empty.clone()]), Ok(None));

        let tri = UndirectedGraph::complete(3);
        assert_eq!(
            acceptable_forest_packing(&tri, &s, &[empty]),
            Err(Error::NotIndependent((0, 2)))
        );
    }

    #[test]
    fn symmetric_decisions() {
        let k3 = Digraph::complete_biorientation(3);
        let all = set(&[0, 1, 2]);
        let p = decide_kappa_s_symmetric(&k3, &all, 2).unwrap().unwrap();
        assert!(verify_packing(&k3, &p).unwrap());
        assert_eq!(decide_kappa_s_symmetric(&k3, &all, 3).unwrap(), None);

        let p3 = biorient(&UndirectedGraph::path(3));
        let p = decide_kappa_s_symmetric(&p3, &set(&[0, 2]), 1).unwrap().unwrap();
        assert!(verify_packing(&p3, &p).unwrap());

        assert_eq!(
            decide_kappa_s_symmetric(&Digraph::directed_cycle(3), &set(&[0, 1]), 1),
            Err(Error::NotSymmetric((0, 1)))
        );
    }
}
