//! Engine selection and the value computations shared by the verbs.

use clap::ValueEnum;
use strongsub::combinatorics::combinations;
use strongsub::extremal::{construct_kn_packing, kappa_complete_biorientation};
use strongsub::semicomplete::{decide_kappa_s_semicomplete, is_semicomplete};
use strongsub::symmetric::{decide_kappa_s_symmetric, kappa2_symmetric, DisconnectedPolicy};
use strongsub::{
    decide_kappa_s_at_least, kappa_k, kappa_s, underlying_graph, Digraph, Error, KappaResult,
    OracleConfig, Packing, Result, VertexSet,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineChoice {
    Auto,
    Oracle,
    Semicomplete,
    Symmetric,
    Formula,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Oracle,
    Semicomplete,
    Symmetric,
    Formula,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Oracle => "oracle",
            Engine::Semicomplete => "semicomplete",
            Engine::Symmetric => "symmetric",
            Engine::Formula => "formula",
        }
    }
}

/// Cheapest applicable engine first: closed form, symmetric, semicomplete,
/// then the oracle. An explicit choice is checked for applicability, so a
/// rejected input fails even when no decision call would be made.
pub fn select(d: &Digraph, choice: EngineChoice) -> Result<Engine> {
    let complete = d.n() >= 2 && d.is_complete_biorientation();
    match choice {
        EngineChoice::Auto if complete => Ok(Engine::Formula),
        EngineChoice::Auto if d.is_symmetric() => Ok(Engine::Symmetric),
        EngineChoice::Auto if is_semicomplete(d) => Ok(Engine::Semicomplete),
        EngineChoice::Auto | EngineChoice::Oracle => Ok(Engine::Oracle),
        EngineChoice::Formula if complete => Ok(Engine::Formula),
        EngineChoice::Formula => Err(Error::InvalidParameters(
            "the formula engine needs a complete biorientation".into(),
        )),
        EngineChoice::Symmetric => match d.arcs().iter().find(|&&(u, v)| !d.has_arc(v, u)) {
            Some(&a) => Err(Error::NotSymmetric(a)),
            None => Ok(Engine::Symmetric),
        },
        EngineChoice::Semicomplete => {
            let n = d.n();
            match (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).find(|&(u, v)| !d.adjacent(u, v)) {
                Some((u, v)) => Err(Error::NotSemicomplete(u, v)),
                None => Ok(Engine::Semicomplete),
            }
        }
    }
}

/// A packing of `ell` parts for `s`, or `None`.
pub fn decide(d: &Digraph, s: &VertexSet, ell: usize, engine: Engine, cfg: &OracleConfig) -> Result<Option<Packing>> {
    match engine {
        Engine::Oracle => decide_kappa_s_at_least(d, s, ell, cfg),
        Engine::Semicomplete => {
            cfg.admit(d.n())?;
            decide_kappa_s_semicomplete(d, s, ell)
        }
        Engine::Symmetric => {
            cfg.admit(d.n())?;
            decide_kappa_s_symmetric(d, s, ell)
        }
        Engine::Formula => {
            let mut p = construct_kn_packing(d.n(), s)?;
            if p.len() < ell {
                return Ok(None);
            }
            p.parts.truncate(ell);
            Ok(Some(p))
        }
    }
}

/// `κ_S(d)` with a certificate.
pub fn value_s(d: &Digraph, s: &VertexSet, engine: Engine, cfg: &OracleConfig) -> Result<KappaResult> {
    match engine {
        Engine::Oracle => kappa_s(d, s, cfg),
        Engine::Formula => {
            let p = construct_kn_packing(d.n(), s)?;
            Ok(KappaResult {
                value: p.len(),
                certificate: Some(p),
                witness_set: Some(s.clone()),
            })
        }
        Engine::Semicomplete | Engine::Symmetric => ascend(d, s, engine, cfg),
    }
}

/// Largest `ell` the decision engine accepts, trying `1, 2, …`. Every part
/// uses an out-arc and an in-arc of each anchor vertex, which caps the climb.
fn ascend(d: &Digraph, s: &VertexSet, engine: Engine, cfg: &OracleConfig) -> Result<KappaResult> {
    let cap = s.iter().map(|v| d.out_degree(v).min(d.in_degree(v))).min().unwrap_or(0);
    let mut best = Packing::empty(s.clone());
    for ell in 1..=cap {
        match decide(d, s, ell, engine, cfg)? {
            Some(p) => best = p,
            None => break,
        }
    }
    Ok(KappaResult {
        value: best.len(),
        certificate: Some(best),
        witness_set: Some(s.clone()),
    })
}

/// `κ_k(d)`, with the first minimizing anchor as witness.
pub fn value_k(d: &Digraph, k: usize, engine: Engine, cfg: &OracleConfig) -> Result<KappaResult> {
    let n = d.n();
    if k < 2 || k > n {
        return Err(Error::InvalidK { k, n });
    }
    match engine {
        Engine::Oracle => kappa_k(d, k, cfg),
        Engine::Formula => {
            let s = VertexSet::from_iter_dedup(0..k);
            let p = construct_kn_packing(n, &s)?;
            debug_assert_eq!(p.len(), kappa_complete_biorientation(n, k)?);
            Ok(KappaResult {
                value: p.len(),
                certificate: Some(p),
                witness_set: Some(s),
            })
        }
        Engine::Symmetric if k == 2 => {
            kappa2_symmetric(&underlying_graph(d), DisconnectedPolicy::Relaxed)
        }
        Engine::Semicomplete | Engine::Symmetric => {
            let mut best: Option<KappaResult> = None;
            for members in combinations(n, k) {
                let s = VertexSet::from_iter_dedup(members);
                let r = value_s(d, &s, engine, cfg)?;
                if best.as_ref().is_none_or(|b| r.value < b.value) {
                    let zero = r.value == 0;
                    best = Some(r);
                    if zero {
                        break;
                    }
                }
            }
            Ok(best.expect("at least one anchor"))
        }
    }
}
