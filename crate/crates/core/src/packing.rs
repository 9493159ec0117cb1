//! Exact computation of `κ_S(D)` and `κ_k(D)`.
//!
//! The search exploits that two internally disjoint parts can only compete
//! for arcs *inside* `D[S]`: every other arc has an endpoint outside `S`, and
//! that endpoint belongs to at most one part. So `κ_S(D) ≥ ℓ` holds iff the
//! vertices of `V(D) \ S` and the arcs of `D[S]` can be distributed over `ℓ`
//! slots such that, for every slot, `S` lies inside one strong component of
//! the slot digraph (slot vertices plus `S`, with every host arc among them
//! except anchor arcs handed to other slots). Handing a resource to a slot
//! never hurts that slot, so every resource is assigned somewhere.
//!
//! The problem is NP-hard for every fixed `|S| ≥ 2, ℓ ≥ 2`; instances above
//! [`OracleConfig::max_n`] are refused unless forced.

use crate::combinatorics::combinations;
use crate::digraph::{Arc, Digraph, Subdigraph, Vertex, VertexSet};
use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

pub const DEFAULT_MAX_N: usize = 12;
const HARD_MAX_N: usize = 64;

/// A family of internally disjoint strong subgraphs containing `anchor`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Packing {
    pub anchor: VertexSet,
    pub parts: Vec<Subdigraph>,
}

impl Packing {
    pub fn empty(anchor: VertexSet) -> Self {
        Packing {
            anchor,
            parts: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KappaResult {
    pub value: usize,
    pub certificate: Option<Packing>,
    /// For `κ_k`: the (lexicographically first) minimizing anchor set.
    pub witness_set: Option<VertexSet>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_n: usize,
    pub force: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_n: DEFAULT_MAX_N,
            force: false,
        }
    }
}

impl OracleConfig {
    pub fn forced() -> Self {
        OracleConfig {
            max_n: DEFAULT_MAX_N,
            force: true,
        }
    }

    /// Rejects orders above the cap unless forced; nothing passes the hard cap.
    pub fn admit(&self, n: usize) -> Result<()> {
        if n > HARD_MAX_N || (n > self.max_n && !self.force) {
            return Err(Error::SizeGuard {
                n,
                max_n: if self.force { HARD_MAX_N } else { self.max_n },
            });
        }
        Ok(())
    }
}

/// The first packing invariant a family violates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum PackingViolation {
    MissingAnchor { part: usize, vertex: Vertex },
    ArcOutsidePart { part: usize, arc: Arc },
    NotStrong { part: usize },
    SharedVertex { first: usize, second: usize, vertex: Vertex },
    SharedArc { first: usize, second: usize, arc: Arc },
}

impl fmt::Display for PackingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PackingViolation::MissingAnchor { part, vertex } => {
                write!(f, "part {part} does not contain anchor vertex {vertex}")
            }
            PackingViolation::ArcOutsidePart { part, arc } => write!(
                f,
                "part {part} lists arc {}->{} with an endpoint outside its vertex set",
                arc.0, arc.1
            ),
            PackingViolation::NotStrong { part } => write!(f, "part {part} is not strong"),
            PackingViolation::SharedVertex { first, second, vertex } => write!(
                f,
                "parts {first} and {second} share non-anchor vertex {vertex}"
            ),
            PackingViolation::SharedArc { first, second, arc } => write!(
                f,
                "parts {first} and {second} share arc {}->{}",
                arc.0, arc.1
            ),
        }
    }
}

/// `Ok(None)` when `p` is a valid packing in `host`, otherwise the first
/// violated invariant. Parts naming vertices or arcs absent from `host` are a
/// [`Error::HostMismatch`].
pub fn check_packing(host: &Digraph, p: &Packing) -> Result<Option<PackingViolation>> {
    let n = host.n();
    if let Some(v) = p.anchor.iter().find(|&v| v >= n) {
        return Err(Error::HostMismatch(format!("anchor vertex {v} out of range")));
    }
    for (i, part) in p.parts.iter().enumerate() {
        if let Some(v) = part.vertices.iter().find(|&v| v >= n) {
            return Err(Error::HostMismatch(format!("part {i} vertex {v} out of range")));
        }
        if let Some(&(u, v)) = part.arcs.iter().find(|&&(u, v)| !host.has_arc(u, v)) {
            return Err(Error::HostMismatch(format!(
                "part {i} arc {u}->{v} is not a host arc"
            )));
        }
    }
    for (i, part) in p.parts.iter().enumerate() {
        if let Some(v) = p.anchor.iter().find(|&v| !part.vertices.contains(v)) {
            return Ok(Some(PackingViolation::MissingAnchor { part: i, vertex: v }));
        }
        if let Some(&arc) = part
            .arcs
            .iter()
            .find(|&&(u, v)| !part.vertices.contains(u) || !part.vertices.contains(v))
        {
            return Ok(Some(PackingViolation::ArcOutsidePart { part: i, arc }));
        }
        if !part.is_strong() {
            return Ok(Some(PackingViolation::NotStrong { part: i }));
        }
    }
    for (i, a) in p.parts.iter().enumerate() {
        for (j, b) in p.parts.iter().enumerate().skip(i + 1) {
            if let Some(v) = a
                .vertices
                .iter()
                .find(|&v| !p.anchor.contains(v) && b.vertices.contains(v))
            {
                return Ok(Some(PackingViolation::SharedVertex {
                    first: i,
                    second: j,
                    vertex: v,
                }));
            }
            if let Some(&arc) = a.arcs.iter().find(|arc| b.arcs.binary_search(arc).is_ok()) {
                return Ok(Some(PackingViolation::SharedArc {
                    first: i,
                    second: j,
                    arc,
                }));
            }
        }
    }
    Ok(None)
}

pub fn verify_packing(host: &Digraph, p: &Packing) -> Result<bool> {
    Ok(check_packing(host, p)?.is_none())
}

pub(crate) fn validate_anchor(d: &Digraph, s: &VertexSet) -> Result<()> {
    if s.len() < 2 {
        return Err(Error::InvalidAnchor(format!(
            "need at least two anchor vertices, got {}",
            s.len()
        )));
    }
    if let Some(v) = s.iter().find(|&v| v >= d.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: d.n() });
    }
    Ok(())
}

/// A packing of `ell` parts when `κ_S(d) ≥ ell`, `None` otherwise.
pub fn decide_kappa_s_at_least(
    d: &Digraph,
    s: &VertexSet,
    ell: usize,
    cfg: &OracleConfig,
) -> Result<Option<Packing>> {
    validate_anchor(d, s)?;
    cfg.admit(d.n())?;
    Ok(Masks::new(d, s).decide(ell))
}

/// `κ_S(d)` with a certificate packing of that size.
pub fn kappa_s(d: &Digraph, s: &VertexSet, cfg: &OracleConfig) -> Result<KappaResult> {
    validate_anchor(d, s)?;
    cfg.admit(d.n())?;
    let masks = Masks::new(d, s);
    let (value, certificate) = masks.maximize(masks.upper_bound());
    Ok(KappaResult {
        value,
        certificate: Some(certificate),
        witness_set: Some(s.clone()),
    })
}

/// `κ_k(d)`, minimized over all `k`-subsets; the witness is the first
/// minimizing subset in lexicographic order.
pub fn kappa_k(d: &Digraph, k: usize, cfg: &OracleConfig) -> Result<KappaResult> {
    let n = d.n();
    if k < 2 || k > n {
        return Err(Error::InvalidK { k, n });
    }
    cfg.admit(n)?;
    let mut best: Option<(usize, Packing, VertexSet)> = None;
    for members in combinations(n, k) {
        let s = VertexSet::from_iter_dedup(members);
        let masks = Masks::new(d, &s);
        match &best {
            None => {
                let (value, cert) = masks.maximize(masks.upper_bound());
                best = Some((value, cert, s));
            }
            Some((value, _, _)) => {
                let value = *value;
                if masks.decide(value).is_some() {
                    continue;
                }
                let (v, cert) = masks.maximize(value - 1);
                best = Some((v, cert, s));
            }
        }
        if best.as_ref().is_some_and(|b| b.0 == 0) {
            break;
        }
    }
    let (value, cert, s) = best.expect("at least one k-subset exists");
    Ok(KappaResult {
        value,
        certificate: Some(cert),
        witness_set: Some(s),
    })
}

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// Bitmask view of one `(D, S)` instance.
struct Masks {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
    anchor: u64,
    anchor_list: Vec<usize>,
    outside: Vec<usize>,
    anchor_arcs: Vec<Arc>,
}

impl Masks {
    fn new(d: &Digraph, s: &VertexSet) -> Self {
        let n = d.n();
        let mut out = vec![0u64; n];
        let mut inn = vec![0u64; n];
        for &(u, v) in d.arcs() {
            out[u] |= bit(v);
            inn[v] |= bit(u);
        }
        let anchor = s.iter().fold(0, |m, v| m | bit(v));
        let anchor_arcs = d
            .arcs()
            .iter()
            .copied()
            .filter(|&(u, v)| s.contains(u) && s.contains(v))
            .collect();
        Masks {
            n,
            out,
            inn,
            anchor,
            anchor_list: s.iter().collect(),
            outside: (0..n).filter(|&v| !s.contains(v)).collect(),
            anchor_arcs,
        }
    }

    /// Each anchor vertex needs an out- and an in-arc per part; parts
    /// confined to `S` need at least `|S|` anchor arcs each.
    fn upper_bound(&self) -> usize {
        let k = self.anchor_list.len();
        let deg = self
            .anchor_list
            .iter()
            .map(|&v| self.out[v].count_ones().min(self.inn[v].count_ones()) as usize)
            .min()
            .unwrap_or(0);
        deg.min(self.outside.len() + self.anchor_arcs.len() / k)
    }

    /// Largest `ell <= cap` with a packing, ascending so that only one
    /// infeasibility proof is needed.
    fn maximize(&self, cap: usize) -> (usize, Packing) {
        let mut best = Packing::empty(self.anchor_set());
        for ell in 1..=cap {
            match self.decide(ell) {
                Some(p) => best = p,
                None => break,
            }
        }
        (best.len(), best)
    }

    fn anchor_set(&self) -> VertexSet {
        VertexSet::from_iter_dedup(self.anchor_list.iter().copied())
    }

    fn decide(&self, ell: usize) -> Option<Packing> {
        if ell == 0 {
            return Some(Packing::empty(self.anchor_set()));
        }
        let all = if self.n == 64 { u64::MAX } else { bit(self.n) - 1 };
        let s0 = self.anchor_list[0];
        let fwd = closure(s0, all, |v| self.out[v]);
        let bwd = closure(s0, all, |v| self.inn[v]);
        if fwd & bwd & self.anchor != self.anchor {
            return None;
        }
        if ell > self.upper_bound() {
            return None;
        }
        let mut search = SlotSearch::new(self, ell);
        if search.run(0) {
            Some(search.extract())
        } else {
            None
        }
    }
}

fn closure(start: usize, allowed: u64, succ: impl Fn(usize) -> u64) -> u64 {
    let mut seen = bit(start);
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let nb = succ(v) & allowed & !seen;
        seen |= nb;
        frontier |= nb;
    }
    seen
}

/// Depth-first distribution of resources (outside vertices, then anchor
/// arcs) over `ell` slots. Slots that have received nothing yet are
/// interchangeable, so a resource may only open the lowest fresh slot.
struct SlotSearch<'a> {
    m: &'a Masks,
    ell: usize,
    slot_vertices: Vec<u64>,
    unassigned: u64,
    arc_slot: Vec<Option<usize>>,
    /// `[slot][v]`: heads (tails) of anchor arcs at `v` owned by other slots.
    excl_out: Vec<Vec<u64>>,
    excl_in: Vec<Vec<u64>>,
    /// `[v][slot]`: anchor out-(in-)arcs at `v` owned by the slot.
    own_out: Vec<Vec<u32>>,
    own_in: Vec<Vec<u32>>,
    free_out: Vec<u32>,
    free_in: Vec<u32>,
    opened: usize,
}

impl<'a> SlotSearch<'a> {
    fn new(m: &'a Masks, ell: usize) -> Self {
        let n = m.n;
        let mut free_out = vec![0; n];
        let mut free_in = vec![0; n];
        for &(u, v) in &m.anchor_arcs {
            free_out[u] += 1;
            free_in[v] += 1;
        }
        SlotSearch {
            m,
            ell,
            slot_vertices: vec![0; ell],
            unassigned: m.outside.iter().fold(0, |acc, &v| acc | bit(v)),
            arc_slot: vec![None; m.anchor_arcs.len()],
            excl_out: vec![vec![0; n]; ell],
            excl_in: vec![vec![0; n]; ell],
            own_out: vec![vec![0; ell]; n],
            own_in: vec![vec![0; ell]; n],
            free_out,
            free_in,
            opened: 0,
        }
    }

    fn resources(&self) -> usize {
        self.m.outside.len() + self.m.anchor_arcs.len()
    }

    fn run(&mut self, idx: usize) -> bool {
        if idx == 0 && !self.feasible(None) {
            return false;
        }
        if idx == self.resources() {
            return true;
        }
        let limit = (self.opened + 1).min(self.ell);
        for slot in 0..limit {
            let prev_opened = self.opened;
            if slot == self.opened {
                self.opened += 1;
            }
            self.assign(idx, slot);
            if self.feasible(Some(slot)) && self.run(idx + 1) {
                return true;
            }
            self.unassign(idx, slot);
            self.opened = prev_opened;
        }
        false
    }

    fn assign(&mut self, idx: usize, slot: usize) {
        let outside = self.m.outside.len();
        if idx < outside {
            let v = self.m.outside[idx];
            self.unassigned &= !bit(v);
            self.slot_vertices[slot] |= bit(v);
        } else {
            let a = idx - outside;
            let (u, v) = self.m.anchor_arcs[a];
            self.arc_slot[a] = Some(slot);
            for other in (0..self.ell).filter(|&i| i != slot) {
                self.excl_out[other][u] |= bit(v);
                self.excl_in[other][v] |= bit(u);
            }
            self.own_out[u][slot] += 1;
            self.own_in[v][slot] += 1;
            self.free_out[u] -= 1;
            self.free_in[v] -= 1;
        }
    }

    fn unassign(&mut self, idx: usize, slot: usize) {
        let outside = self.m.outside.len();
        if idx < outside {
            let v = self.m.outside[idx];
            self.unassigned |= bit(v);
            self.slot_vertices[slot] &= !bit(v);
        } else {
            let a = idx - outside;
            let (u, v) = self.m.anchor_arcs[a];
            self.arc_slot[a] = None;
            for other in (0..self.ell).filter(|&i| i != slot) {
                self.excl_out[other][u] &= !bit(v);
                self.excl_in[other][v] &= !bit(u);
            }
            self.own_out[u][slot] -= 1;
            self.own_in[v][slot] -= 1;
            self.free_out[u] += 1;
            self.free_in[v] += 1;
        }
    }

    /// Pruning after a resource went to `changed` (or at the root).
    fn feasible(&self, changed: Option<usize>) -> bool {
        // Degree supply: every anchor vertex needs its own out- and in-arc
        // in every slot; an unassigned arc or vertex can serve one slot.
        for &s in &self.m.anchor_list {
            let mut lack_out = 0;
            let mut lack_in = 0;
            for i in 0..self.ell {
                let w = self.slot_vertices[i];
                if self.own_out[s][i] == 0 && self.m.out[s] & w == 0 {
                    lack_out += 1;
                }
                if self.own_in[s][i] == 0 && self.m.inn[s] & w == 0 {
                    lack_in += 1;
                }
            }
            let flex_out = self.free_out[s] + (self.m.out[s] & self.unassigned).count_ones();
            let flex_in = self.free_in[s] + (self.m.inn[s] & self.unassigned).count_ones();
            if lack_out > flex_out || lack_in > flex_in {
                return false;
            }
        }
        // Strongness of every slot whose potential shrank. Unopened slots
        // are identical, so one representative suffices.
        let upto = (self.opened + 1).min(self.ell);
        (0..upto)
            .filter(|&i| Some(i) != changed)
            .all(|i| self.slot_potential_ok(i))
    }

    fn slot_potential_ok(&self, i: usize) -> bool {
        let allowed = self.m.anchor | self.slot_vertices[i] | self.unassigned;
        let s0 = self.m.anchor_list[0];
        let fwd = closure(s0, allowed, |v| self.m.out[v] & !self.excl_out[i][v]);
        if fwd & self.m.anchor != self.m.anchor {
            return false;
        }
        let bwd = closure(s0, allowed, |v| self.m.inn[v] & !self.excl_in[i][v]);
        bwd & self.m.anchor == self.m.anchor
    }

    fn extract(&self) -> Packing {
        let anchor = self.m.anchor_set();
        let parts = (0..self.ell)
            .map(|i| {
                let allowed = self.m.anchor | self.slot_vertices[i];
                let arcs: Vec<Arc> = bits(allowed)
                    .flat_map(|u| {
                        bits(self.m.out[u] & allowed & !self.excl_out[i][u]).map(move |v| (u, v))
                    })
                    .collect();
                minimal_strong_part(&anchor, arcs)
            })
            .collect();
        Packing { anchor, parts }
    }
}

/// Shrinks a digraph in which `anchor` lies in one strong component to an
/// arc-minimal strong subgraph containing `anchor`. Arcs are tried for
/// removal from the lexicographically largest down, so the survivors are
/// deterministic.
pub(crate) fn minimal_strong_part(anchor: &VertexSet, arcs: Vec<Arc>) -> Subdigraph {
    let mut arcs: BTreeSet<Arc> = arcs.into_iter().collect();
    let mut verts = anchor_component(anchor, &arcs).expect("anchor lies in one strong component");
    arcs.retain(|&(u, v)| verts.contains(&u) && verts.contains(&v));
    let candidates: Vec<Arc> = arcs.iter().rev().copied().collect();
    for a in candidates {
        if !arcs.contains(&a) {
            continue;
        }
        arcs.remove(&a);
        match anchor_component(anchor, &arcs) {
            Some(comp) => {
                arcs.retain(|&(u, v)| comp.contains(&u) && comp.contains(&v));
                verts = comp;
            }
            None => {
                arcs.insert(a);
            }
        }
    }
    Subdigraph::new(VertexSet::from_iter_dedup(verts), arcs)
}

/// Vertex set of the strong component containing all of `anchor`, if any.
fn anchor_component(anchor: &VertexSet, arcs: &BTreeSet<Arc>) -> Option<BTreeSet<Vertex>> {
    let start = anchor.iter().next()?;
    let reach = |forward: bool| {
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(a, b) in arcs {
                let (from, to) = if forward { (a, b) } else { (b, a) };
                if from == v && seen.insert(to) {
                    stack.push(to);
                }
            }
        }
        seen
    };
    let fwd = reach(true);
    let bwd = reach(false);
    let comp: BTreeSet<Vertex> = fwd.intersection(&bwd).copied().collect();
    anchor.iter().all(|v| comp.contains(&v)).then_some(comp)
}
