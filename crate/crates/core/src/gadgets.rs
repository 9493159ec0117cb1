//! Reduction gadgets: 2-linkage instances turned into `κ_S` questions on
//! general digraphs, and tripartite partition instances turned into `κ_S`
//! questions on symmetric digraphs. Both serve as hard-instance generators
//! and as cross-checks between the solvers.

use crate::digraph::{biorient, Digraph, DigraphBuilder, UndirectedGraph, Vertex, VertexSet};
use crate::error::{Error, Result};
use crate::linkage::{directed_linkage, TerminalSequence};
use crate::packing::{decide_kappa_s_at_least, OracleConfig};

/// A digraph with terminals `(s_1, t_1), (s_2, t_2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linkage2Instance {
    pub d: Digraph,
    pub terminals: TerminalSequence,
}

impl Linkage2Instance {
    pub fn new(d: Digraph, terminals: TerminalSequence) -> Result<Self> {
        if terminals.len() != 2 {
            return Err(Error::InvalidTerminals(format!(
                "need exactly 2 pairs, got {}",
                terminals.len()
            )));
        }
        TerminalSequence::new(terminals.pairs().to_vec(), d.n())?;
        Ok(Linkage2Instance { d, terminals })
    }
}

/// Builds the gadget digraph and its anchor of size `k`.
///
/// New vertices `x`, `y` get the arcs `t1→x, x→s1, t2→y, y→s2, x↔s2,
/// y↔t1`. For `ell > 2`, `ell − 2` extra 2-cycles between `x` and `y` are
/// added with both arcs subdivided. For `k > 2`, vertices `x_1..x_{k−2}`
/// each get `ell` subdivided 2-cycles with `x`. Vertices are labeled.
pub fn linkage_gadget(inst: &Linkage2Instance, k: usize, ell: usize) -> Result<(Digraph, VertexSet)> {
    if k < 2 || ell < 2 {
        return Err(Error::InvalidParameters(format!(
            "linkage gadget needs k >= 2 and ell >= 2, got k = {k}, ell = {ell}"
        )));
    }
    let [(s1, t1), (s2, t2)] = [inst.terminals.pairs()[0], inst.terminals.pairs()[1]];
    let mut b = DigraphBuilder::from_digraph(&inst.d);
    let x = b.add_vertex("x");
    let y = b.add_vertex("y");
    for (u, v) in [(t1, x), (x, s1), (t2, y), (y, s2), (x, s2), (s2, x), (y, t1), (t1, y)] {
        b.add_arc(u, v)?;
    }
    for copy in 0..ell - 2 {
        b.add_subdivided_arc(x, y, format!("x>y#{copy}"))?;
        b.add_subdivided_arc(y, x, format!("y>x#{copy}"))?;
    }
    let mut anchor = vec![x, y];
    for i in 1..=k - 2 {
        let xi = b.add_vertex(format!("x_{i}"));
        for copy in 0..ell {
            b.add_subdivided_arc(x, xi, format!("x>x_{i}#{copy}"))?;
            b.add_subdivided_arc(xi, x, format!("x_{i}>x#{copy}"))?;
        }
        anchor.push(xi);
    }
    let d = b.build();
    let n = d.n();
    Ok((d, VertexSet::new(anchor, n)?))
}

/// Whether the linkage answer and the packing answer on the gadget agree.
pub fn gadget_equivalence_check(
    inst: &Linkage2Instance,
    k: usize,
    ell: usize,
    cfg: &OracleConfig,
) -> Result<bool> {
    let (gadget, s) = linkage_gadget(inst, k, ell)?;
    let packed = decide_kappa_s_at_least(&gadget, &s, ell, cfg)?.is_some();
    let linked = directed_linkage(&inst.d, &inst.terminals)?.is_some();
    Ok(packed == linked)
}

/// A tripartite graph with parts `Ū, V̄, W̄` of equal size `q` covering
/// its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CLLMInstance {
    pub g: UndirectedGraph,
    pub parts: [VertexSet; 3],
}

impl CLLMInstance {
    pub fn new(g: UndirectedGraph, parts: [VertexSet; 3]) -> Result<Self> {
        let q = parts[0].len();
        if parts.iter().any(|p| p.len() != q) {
            return Err(Error::MalformedInstance("parts differ in size".into()));
        }
        let mut part_of = vec![None; g.n()];
        for (i, p) in parts.iter().enumerate() {
            for v in p.iter() {
                if v >= g.n() {
                    return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
                }
                if part_of[v].replace(i).is_some() {
                    return Err(Error::MalformedInstance(format!("vertex {v} lies in two parts")));
                }
            }
        }
        if let Some(v) = part_of.iter().position(Option::is_none) {
            return Err(Error::MalformedInstance(format!("vertex {v} lies in no part")));
        }
        if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| part_of[u] == part_of[v]) {
            return Err(Error::MalformedInstance(format!("edge {u}-{v} inside a part")));
        }
        Ok(CLLMInstance { g, parts })
    }

    pub fn q(&self) -> usize {
        self.parts[0].len()
    }
}

/// `q` triples, one vertex from each part, each inducing a connected
/// subgraph and together covering the graph.
pub type TriplePartition = Vec<[Vertex; 3]>;

/// Exhaustive search over matchings of `Ū` to `V̄` and `W̄`.
pub fn cllm_solve(inst: &CLLMInstance) -> Result<Option<TriplePartition>> {
    let inst = CLLMInstance::new(inst.g.clone(), inst.parts.clone())?;
    let [us, vs, ws] = [0, 1, 2].map(|i| inst.parts[i].as_slice().to_vec());
    let g = &inst.g;
    fn rec(
        g: &UndirectedGraph,
        us: &[Vertex],
        vs: &[Vertex],
        ws: &[Vertex],
        used_v: &mut [bool],
        used_w: &mut [bool],
        out: &mut TriplePartition,
    ) -> bool {
        let i = out.len();
        if i == us.len() {
            return true;
        }
        let u = us[i];
        for (a, &v) in vs.iter().enumerate() {
            if used_v[a] {
                continue;
            }
            for (b, &w) in ws.iter().enumerate() {
                if used_w[b] {
                    continue;
                }
                let edges = [g.has_edge(u, v), g.has_edge(v, w), g.has_edge(u, w)];
                if edges.iter().filter(|&&e| e).count() < 2 {
                    continue;
                }
                used_v[a] = true;
                used_w[b] = true;
                out.push([u, v, w]);
                if rec(g, us, vs, ws, used_v, used_w, out) {
                    return true;
                }
                out.pop();
                used_v[a] = false;
                used_w[b] = false;
            }
        }
        false
    }
    let q = us.len();
    let mut out = Vec::with_capacity(q);
    let found = rec(g, &us, &vs, &ws, &mut vec![false; q], &mut vec![false; q], &mut out);
    Ok(found.then_some(out))
}

/// The symmetric gadget `↔H`, its anchor `{x_1..x_k}` and `ℓ = q`.
/// `x_1..x_{k−2}` are joined to every vertex of `Ū`, `x_{k−1}` to `V̄` and
/// `x_k` to `W̄`; they occupy indices `n..n+k` in that order.
#[derive(Clone, Debug)]
pub struct CllmGadget {
    pub digraph: Digraph,
    pub anchor: VertexSet,
    pub ell: usize,
}

pub fn cllm_gadget(inst: &CLLMInstance, k: usize) -> Result<CllmGadget> {
    if k < 3 {
        return Err(Error::InvalidParameters(format!("CLLM gadget needs k >= 3, got {k}")));
    }
    let n = inst.g.n();
    let mut edges = inst.g.edges().to_vec();
    for j in 0..k {
        let part = match j {
            _ if j < k - 2 => &inst.parts[0],
            _ if j == k - 2 => &inst.parts[1],
            _ => &inst.parts[2],
        };
        edges.extend(part.iter().map(|v| (v, n + j)));
    }
    let h = UndirectedGraph::new(n + k, edges)?;
    let labels = (0..n)
        .map(|v| v.to_string())
        .chain((1..=k).map(|j| format!("x_{j}")))
        .collect();
    let digraph = biorient(&h).with_labels(labels)?;
    Ok(CllmGadget {
        digraph,
        anchor: VertexSet::from_iter_dedup(n..n + k),
        ell: inst.q(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> Linkage2Instance {
        // s1=0 -> 1 -> t1=2, s2=3 -> t2=4
        let d = Digraph::new(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let t = TerminalSequence::new(vec![(0, 2), (3, 4)], 5).unwrap();
        Linkage2Instance::new(d, t).unwrap()
    }

    #[test]
    fn gadget_sizes() {
        let inst = base();
        let (d, s) = linkage_gadget(&inst, 2, 2).unwrap();
        assert_eq!((d.n(), d.arc_count()), (7, 3 + 8));
        assert_eq!(s.as_slice(), &[5, 6]);
        assert_eq!((d.in_degree(5), d.out_degree(5)), (2, 2));
        assert_eq!(d.label(5), Some("x"));

        let (d3, _) = linkage_gadget(&inst, 2, 3).unwrap();
        assert_eq!((d3.n(), d3.arc_count()), (9, 3 + 8 + 4));
        assert_eq!((d3.in_degree(5), d3.out_degree(5)), (3, 3));

        let (dk, s) = linkage_gadget(&inst, 3, 2).unwrap();
        assert_eq!((dk.n(), dk.arc_count()), (7 + 1 + 4, 11 + 8));
        assert_eq!(s.len(), 3);
        assert!(linkage_gadget(&inst, 1, 2).is_err());
    }

    #[test]
    fn gadget_agrees_on_small_bases() {
        let cfg = OracleConfig::forced();
        assert!(gadget_equivalence_check(&base(), 2, 2, &cfg).unwrap());
        let shared = Digraph::new(5, [(0, 4), (4, 1), (2, 4), (4, 3)]).unwrap();
        let t = TerminalSequence::new(vec![(0, 1), (2, 3)], 5).unwrap();
        let inst = Linkage2Instance::new(shared, t).unwrap();
        assert!(gadget_equivalence_check(&inst, 2, 2, &cfg).unwrap());
        assert!(directed_linkage(&inst.d, &inst.terminals).unwrap().is_none());
    }

    #[test]
    fn cllm_basics() {
        let parts = [0, 1, 2].map(|i| VertexSet::from_iter_dedup([i]));
        let tri = CLLMInstance::new(UndirectedGraph::complete(3), parts.clone()).unwrap();
        assert_eq!(cllm_solve(&tri).unwrap(), Some(vec![[0, 1, 2]]));
        let none = CLLMInstance::new(UndirectedGraph::new(3, []).unwrap(), parts.clone()).unwrap();
        assert_eq!(cllm_solve(&none).unwrap(), None);
        assert!(CLLMInstance::new(UndirectedGraph::complete(3), [parts[0].clone(), parts[0].clone(), parts[2].clone()]).is_err());

        let gad = cllm_gadget(&tri, 3).unwrap();
        assert_eq!(gad.digraph.n(), 6);
        assert_eq!(gad.ell, 1);
        for x in gad.anchor.iter() {
            assert_eq!(gad.digraph.out_degree(x), 1);
        }
        assert!(cllm_gadget(&tri, 2).is_err());
    }
}
