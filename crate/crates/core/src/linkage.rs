//! Exact vertex-disjoint path linkage, directed and undirected.
//!
//! Exhaustive backtracking; exponential in the worst case. Pairs are routed
//! in order; each partial path is abandoned as soon as its own target or
//! some later pair becomes unreachable in the residual graph, and residual
//! states already known to fail are memoized.

use crate::digraph::{Digraph, UndirectedGraph, Vertex};
use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::{HashSet, VecDeque};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TerminalSequence {
    pairs: Vec<(Vertex, Vertex)>,
}

impl TerminalSequence {
    /// All listed vertices must be distinct and below `n`.
    pub fn new(pairs: Vec<(Vertex, Vertex)>, n: usize) -> Result<Self> {
        let mut seen = HashSet::new();
        for &(s, t) in &pairs {
            for v in [s, t] {
                if v >= n {
                    return Err(Error::InvalidTerminals(format!(
                        "terminal {v} out of range for order {n}"
                    )));
                }
                if !seen.insert(v) {
                    return Err(Error::InvalidTerminals(format!("terminal {v} repeated")));
                }
            }
        }
        Ok(TerminalSequence { pairs })
    }

    pub fn pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// `paths[i]` runs from `pairs[i].0` to `pairs[i].1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Linkage {
    pub paths: Vec<Vec<Vertex>>,
}

impl Linkage {
    /// Checks endpoints, host adjacency and pairwise vertex-disjointness.
    pub fn is_valid(&self, t: &TerminalSequence, adjacent: impl Fn(Vertex, Vertex) -> bool) -> bool {
        if self.paths.len() != t.len() {
            return false;
        }
        let mut seen = HashSet::new();
        for (path, &(s, tt)) in self.paths.iter().zip(t.pairs()) {
            if path.first() != Some(&s) || path.last() != Some(&tt) {
                return false;
            }
            if !path.windows(2).all(|w| adjacent(w[0], w[1])) {
                return false;
            }
            if !path.iter().all(|&v| seen.insert(v)) {
                return false;
            }
        }
        true
    }
}

pub fn directed_linkage(d: &Digraph, t: &TerminalSequence) -> Result<Option<Linkage>> {
    check_range(t, d.n())?;
    let adj: Vec<Vec<Vertex>> = (0..d.n()).map(|v| d.out_neighbors(v).to_vec()).collect();
    Ok(LinkageSearch::new(&adj, t).solve())
}

pub fn undirected_linkage(g: &UndirectedGraph, t: &TerminalSequence) -> Result<Option<Linkage>> {
    check_range(t, g.n())?;
    let adj: Vec<Vec<Vertex>> = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
    Ok(LinkageSearch::new(&adj, t).solve())
}

/// Linkage over a raw successor list; used for the auxiliary graphs built
/// by the special-case algorithms.
pub(crate) fn linkage_on(adj: &[Vec<Vertex>], pairs: &[(Vertex, Vertex)]) -> Option<Linkage> {
    let t = TerminalSequence {
        pairs: pairs.to_vec(),
    };
    debug_assert!(TerminalSequence::new(pairs.to_vec(), adj.len()).is_ok());
    LinkageSearch::new(adj, &t).solve()
}

fn check_range(t: &TerminalSequence, n: usize) -> Result<()> {
    TerminalSequence::new(t.pairs.clone(), n).map(|_| ())
}

struct LinkageSearch<'a> {
    adj: &'a [Vec<Vertex>],
    rev: Vec<Vec<Vertex>>,
    pairs: &'a [(Vertex, Vertex)],
    /// Vertices on committed paths, plus every terminal.
    blocked: Vec<bool>,
    paths: Vec<Vec<Vertex>>,
    failed: HashSet<(usize, Vec<bool>)>,
}

impl<'a> LinkageSearch<'a> {
    fn new(adj: &'a [Vec<Vertex>], t: &'a TerminalSequence) -> Self {
        let mut blocked = vec![false; adj.len()];
        for &(s, tt) in t.pairs() {
            blocked[s] = true;
            blocked[tt] = true;
        }
        let mut rev: Vec<Vec<Vertex>> = vec![Vec::new(); adj.len()];
        for (v, nbrs) in adj.iter().enumerate() {
            for &w in nbrs {
                rev[w].push(v);
            }
        }
        LinkageSearch {
            adj,
            rev,
            pairs: t.pairs(),
            blocked,
            paths: Vec::new(),
            failed: HashSet::new(),
        }
    }

    fn solve(mut self) -> Option<Linkage> {
        if self.route(0) {
            Some(Linkage { paths: self.paths })
        } else {
            None
        }
    }

    /// Route pairs `j..` given the committed paths.
    fn route(&mut self, j: usize) -> bool {
        if j == self.pairs.len() {
            return true;
        }
        if !(j..self.pairs.len()).all(|p| self.reachable(self.pairs[p].0, self.pairs[p].1)) {
            return false;
        }
        let key = (j, self.blocked.clone());
        if self.failed.contains(&key) {
            return false;
        }
        let (s, t) = self.pairs[j];
        let mut path = vec![s];
        if self.extend(j, s, t, &mut path) {
            return true;
        }
        self.failed.insert(key);
        false
    }

    fn extend(&mut self, j: usize, cur: Vertex, t: Vertex, path: &mut Vec<Vertex>) -> bool {
        let dist = self.distances_to(t);
        let mut next: Vec<Vertex> = self.adj[cur]
            .iter()
            .copied()
            .filter(|&w| w == t || (!self.blocked[w] && dist[w] != usize::MAX))
            .collect();
        next.sort_by_key(|&w| (dist[w], w));
        for w in next {
            if w == t {
                path.push(t);
                self.paths.push(path.clone());
                if self.route(j + 1) {
                    return true;
                }
                self.paths.pop();
                path.pop();
                continue;
            }
            self.blocked[w] = true;
            let later_ok = (j + 1..self.pairs.len())
                .all(|p| self.reachable(self.pairs[p].0, self.pairs[p].1));
            if !later_ok {
                self.blocked[w] = false;
                continue;
            }
            path.push(w);
            if self.extend(j, w, t, path) {
                return true;
            }
            path.pop();
            self.blocked[w] = false;
        }
        false
    }

    /// Path from `s` to `t` through unblocked vertices.
    fn reachable(&self, s: Vertex, t: Vertex) -> bool {
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if w == t {
                    return true;
                }
                if !seen[w] && !self.blocked[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }

    /// Hop distance from each unblocked vertex to `t` through unblocked
    /// vertices (`usize::MAX` when cut off).
    fn distances_to(&self, t: Vertex) -> Vec<usize> {
        let n = self.adj.len();
        let mut dist = vec![usize::MAX; n];
        dist[t] = 0;
        let mut queue = VecDeque::from([t]);
        while let Some(v) = queue.pop_front() {
            for &u in &self.rev[v] {
                if dist[u] == usize::MAX && !self.blocked[u] {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        dist
    }
}
