//! Simple digraphs, undirected graphs and the structural operations the
//! connectivity algorithms are built on.
//!
//! Vertices are dense identifiers `0..n`. Arc and edge lists are kept sorted
//! so that every derived structure (and every serialization) is deterministic.

use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

pub type Vertex = usize;
pub type Arc = (Vertex, Vertex);
pub type Edge = (Vertex, Vertex);

/// A simple digraph: no self-loops, no parallel arcs.
#[derive(Clone)]
pub struct Digraph {
    n: usize,
    arcs: Vec<Arc>,
    out_adj: Vec<Vec<Vertex>>,
    in_adj: Vec<Vec<Vertex>>,
    labels: Option<Vec<String>>,
}

impl Digraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let mut list: Vec<Arc> = Vec::new();
        for (u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push((u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::ParallelArc(w[0]));
        }
        Ok(Self::from_sorted(n, list))
    }

    fn from_sorted(n: usize, arcs: Vec<Arc>) -> Self {
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        for list in &mut in_adj {
            list.sort_unstable();
        }
        Digraph {
            n,
            arcs,
            out_adj,
            in_adj,
            labels: None,
        }
    }

    /// Attaches one label per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidParameters(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    /// The complete biorientation of `K_n`.
    pub fn complete_biorientation(n: usize) -> Self {
        let arcs = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        Self::from_sorted(n, arcs)
    }

    /// The directed cycle `0 -> 1 -> ... -> n-1 -> 0` (n >= 2).
    pub fn directed_cycle(n: usize) -> Self {
        assert!(n >= 2, "a directed cycle needs at least two vertices");
        let arcs = (0..n).map(|i| (i, (i + 1) % n));
        Self::new(n, arcs).expect("cycle arcs are simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.in_adj[v].len()
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.out_adj[u].binary_search(&v).is_ok()
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// True iff every arc has its reverse.
    pub fn is_symmetric(&self) -> bool {
        self.first_unpaired_arc().is_none()
    }

    pub(crate) fn first_unpaired_arc(&self) -> Option<Arc> {
        self.arcs.iter().copied().find(|&(u, v)| !self.has_arc(v, u))
    }

    pub fn is_complete_biorientation(&self) -> bool {
        self.arcs.len() == self.n * self.n.saturating_sub(1)
    }

    /// A copy of the digraph with one arc removed.
    pub fn without_arc(&self, a: Arc) -> Result<Self> {
        if !self.has_arc(a.0, a.1) {
            return Err(Error::ArcAbsent(a));
        }
        let arcs = self.arcs.iter().copied().filter(|&b| b != a).collect();
        let mut d = Self::from_sorted(self.n, arcs);
        d.labels = self.labels.clone();
        Ok(d)
    }

    /// The digraph with `arcs` removed (missing arcs are ignored).
    pub fn without_arcs(&self, arcs: &[Arc]) -> Self {
        let drop: BTreeSet<Arc> = arcs.iter().copied().collect();
        let kept = self.arcs.iter().copied().filter(|a| !drop.contains(a)).collect();
        let mut d = Self::from_sorted(self.n, kept);
        d.labels = self.labels.clone();
        d
    }
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.arcs == other.arcs
    }
}

impl Eq for Digraph {}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs)
            .finish()
    }
}

/// Incremental construction with labeled fresh vertices; used by the gadgets.
#[derive(Debug, Default, Clone)]
pub struct DigraphBuilder {
    labels: Vec<String>,
    arcs: BTreeSet<Arc>,
}

impl DigraphBuilder {
    pub fn from_digraph(d: &Digraph) -> Self {
        let labels = match d.labels() {
            Some(l) => l.to_vec(),
            None => (0..d.n()).map(|v| v.to_string()).collect(),
        };
        DigraphBuilder {
            labels,
            arcs: d.arcs().iter().copied().collect(),
        }
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Vertex {
        self.labels.push(label.into());
        self.labels.len() - 1
    }

    pub fn add_arc(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let n = self.labels.len();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !self.arcs.insert((u, v)) {
            return Err(Error::ParallelArc((u, v)));
        }
        Ok(())
    }

    /// Adds the path `u -> w -> v` through a fresh vertex `w`.
    pub fn add_subdivided_arc(&mut self, u: Vertex, v: Vertex, label: impl Into<String>) -> Result<Vertex> {
        let w = self.add_vertex(label);
        self.add_arc(u, w)?;
        self.add_arc(w, v)?;
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn build(self) -> Digraph {
        let n = self.labels.len();
        let mut d = Digraph::from_sorted(n, self.arcs.into_iter().collect());
        d.labels = Some(self.labels);
        d
    }
}

/// A simple undirected graph. Edges are stored as `(u, v)` with `u < v`.
#[derive(Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Vertex>>,
}

impl UndirectedGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::ParallelEdge(w[0]));
        }
        Ok(Self::from_sorted(n, list))
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        UndirectedGraph { n, edges, adj }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_sorted(n, edges)
    }

    pub fn path(n: usize) -> Self {
        Self::from_sorted(n, (1..n).map(|i| (i - 1, i)).collect())
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }
}

impl fmt::Debug for UndirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("UndirectedGraph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Sorted, duplicate-free set of vertices of some host graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    /// Validates membership against a host of order `n`.
    pub fn new(members: impl IntoIterator<Item = Vertex>, n: usize) -> Result<Self> {
        let mut v: Vec<Vertex> = members.into_iter().collect();
        v.sort_unstable();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidAnchor(format!("vertex {} listed twice", w[0])));
        }
        if let Some(&last) = v.last() {
            if last >= n {
                return Err(Error::VertexOutOfRange { vertex: last, n });
            }
        }
        Ok(VertexSet(v))
    }

    /// Builds a set from arbitrary members, dropping duplicates.
    pub fn from_iter_dedup(members: impl IntoIterator<Item = Vertex>) -> Self {
        let set: BTreeSet<Vertex> = members.into_iter().collect();
        VertexSet(set.into_iter().collect())
    }

    pub fn all(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a Vertex;
    type IntoIter = std::slice::Iter<'a, Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A subdigraph of some host: a vertex set and arcs among those vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subdigraph {
    pub vertices: VertexSet,
    pub arcs: Vec<Arc>,
}

impl Subdigraph {
    /// Normalizes the arc list; vertices are taken as given.
    pub fn new(vertices: VertexSet, arcs: impl IntoIterator<Item = Arc>) -> Self {
        let set: BTreeSet<Arc> = arcs.into_iter().collect();
        Subdigraph {
            vertices,
            arcs: set.into_iter().collect(),
        }
    }

    /// Vertex set spanned by the arcs plus the `extra` vertices.
    pub fn from_arcs(arcs: impl IntoIterator<Item = Arc>, extra: &VertexSet) -> Self {
        let arcs: BTreeSet<Arc> = arcs.into_iter().collect();
        let vertices =
            VertexSet::from_iter_dedup(arcs.iter().flat_map(|&(u, v)| [u, v]).chain(extra.iter()));
        Subdigraph {
            vertices,
            arcs: arcs.into_iter().collect(),
        }
    }

    pub fn is_strong(&self) -> bool {
        is_strong_on(self.vertices.as_slice(), &self.arcs)
    }

    /// Every arc joins two listed vertices.
    pub fn is_closed(&self) -> bool {
        self.arcs
            .iter()
            .all(|&(u, v)| self.vertices.contains(u) && self.vertices.contains(v))
    }
}

/// Strong components listed in topological order of the condensation: for
/// the returned `C_1, ..., C_r` no arc leads from `C_b` to `C_a` when `a < b`.
pub fn strong_components(d: &Digraph) -> Vec<VertexSet> {
    tarjan(d.n(), |v| d.out_neighbors(v))
        .into_iter()
        .map(VertexSet)
        .collect()
}

/// A single-vertex digraph is strong; the empty digraph is not.
pub fn is_strong(d: &Digraph) -> bool {
    d.n() >= 1 && strong_components(d).len() == 1
}

/// Iterative Tarjan over a dense vertex range; components come out sources
/// first, each sorted.
pub(crate) fn tarjan<'a, F>(n: usize, succ: F) -> Vec<Vec<Vertex>>
where
    F: Fn(Vertex) -> &'a [Vertex],
{
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut next = 0;
    // (vertex, position in its successor list)
    let mut call: Vec<(Vertex, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let nbrs = succ(v);
            if *pos < nbrs.len() {
                let w = nbrs[*pos];
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
    }
    comps.reverse();
    comps
}

/// Strongness of the digraph `(vertices, arcs)`; arcs leaving `vertices`
/// are ignored.
pub fn is_strong_on(vertices: &[Vertex], arcs: &[Arc]) -> bool {
    if vertices.is_empty() {
        return false;
    }
    let index = |v: Vertex| vertices.binary_search(&v).ok();
    let m = vertices.len();
    let mut adj = vec![Vec::new(); m];
    for &(u, v) in arcs {
        if let (Some(a), Some(b)) = (index(u), index(v)) {
            adj[a].push(b);
        }
    }
    tarjan(m, |v| &adj[v]).len() == 1
}

/// Doubles every edge into a 2-cycle.
pub fn biorient(g: &UndirectedGraph) -> Digraph {
    let arcs = g.edges().iter().flat_map(|&(u, v)| [(u, v), (v, u)]);
    Digraph::new(g.n(), arcs).expect("biorientation of a simple graph is simple")
}

/// Forgets arc directions and merges 2-cycles.
pub fn underlying_graph(d: &Digraph) -> UndirectedGraph {
    let edges: BTreeSet<Edge> = d.arcs().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    UndirectedGraph::from_sorted(d.n(), edges.into_iter().collect())
}

/// Replaces `a = (u, v)` by `u -> w -> v` where `w = n` is a fresh vertex.
pub fn subdivide_arc(d: &Digraph, a: Arc) -> Result<Digraph> {
    if !d.has_arc(a.0, a.1) {
        return Err(Error::ArcAbsent(a));
    }
    let w = d.n();
    let arcs = d
        .arcs()
        .iter()
        .copied()
        .filter(|&b| b != a)
        .chain([(a.0, w), (w, a.1)]);
    let out = Digraph::new(w + 1, arcs)?;
    match d.labels() {
        Some(labels) => {
            let mut labels = labels.to_vec();
            labels.push(format!("{}~{}", labels[a.0], labels[a.1]));
            out.with_labels(labels)
        }
        None => Ok(out),
    }
}

pub fn induced_subdigraph(d: &Digraph, s: &VertexSet) -> Subdigraph {
    let arcs = s
        .iter()
        .flat_map(|u| {
            d.out_neighbors(u)
                .iter()
                .filter(|&&v| s.contains(v))
                .map(move |&v| (u, v))
        })
        .collect::<Vec<_>>();
    Subdigraph::new(s.clone(), arcs)
}

/// `(δ⁺, δ⁻)`: minimum out-degree and minimum in-degree.
pub fn min_degrees(d: &Digraph) -> Result<(usize, usize)> {
    if d.n() == 0 {
        return Err(Error::EmptyDigraph);
    }
    let out = (0..d.n()).map(|v| d.out_degree(v)).min().unwrap_or(0);
    let inn = (0..d.n()).map(|v| d.in_degree(v)).min().unwrap_or(0);
    Ok((out, inn))
}
