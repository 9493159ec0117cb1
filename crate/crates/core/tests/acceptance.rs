//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::ExitCode;
use std::time::Instant;
use strongsub::combinatorics::combinations;
use strongsub::extremal::{bounds, hamiltonian_decomposition, is_upper_bound_extremal, kappa_complete_biorientation};
use strongsub::gadgets::{cllm_gadget, cllm_solve, gadget_equivalence_check};
use strongsub::generate::{
    random_cllm_instance, random_connected_graph, random_linkage_instance, random_semicomplete,
    random_strong_digraph, random_symmetric_digraph,
};
use strongsub::semicomplete::decide_kappa_s_semicomplete;
use strongsub::symmetric::{decide_kappa_s_symmetric, kappa2_symmetric, DisconnectedPolicy};
use strongsub::{biorient, decide_kappa_s_at_least, is_strong, kappa_k, verify_packing, Digraph, OracleConfig, VertexSet};

type Outcome = Result<String, String>;

fn cfg() -> OracleConfig {
    OracleConfig::forced()
}

fn closed_form() -> Outcome {
    for n in 2..=6 {
        for k in 2..=n {
            let got = kappa_k(&Digraph::complete_biorientation(n), k, &cfg()).map_err(|e| e.to_string())?.value;
            let want = kappa_complete_biorientation(n, k).unwrap();
            if got != want {
                return Err(format!("n={n} k={k}: oracle {got}, formula {want}"));
            }
        }
    }
    Ok("20 cells, including (4,4)=2 and (6,6)=4".into())
}

fn kappa2_of_biorientations() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..50 {
        let n = rng.gen_range(2..=7);
        let p = rng.gen_range(0.1..0.8);
        let g = random_connected_graph(n, p, &mut rng);
        let fast = kappa2_symmetric(&g, DisconnectedPolicy::Strict).map_err(|e| e.to_string())?;
        let slow = kappa_k(&biorient(&g), 2, &cfg()).map_err(|e| e.to_string())?.value;
        if fast.value != slow {
            return Err(format!("graph #{i} {g:?}: flow {} vs oracle {slow}", fast.value));
        }
        if !verify_packing(&biorient(&g), fast.certificate.as_ref().unwrap()).unwrap() {
            return Err(format!("graph #{i}: certificate rejected"));
        }
    }
    Ok("50 graphs".into())
}

/// Compares a decision engine with the oracle on every anchor of size
/// 2 and 3 and every `ell` in {1, 2}; returns (checks, positives).
fn engine_sweep(
    d: &Digraph,
    engine: &dyn Fn(&Digraph, &VertexSet, usize) -> strongsub::Result<Option<strongsub::Packing>>,
) -> Result<(usize, usize), String> {
    let (mut checks, mut positive) = (0, 0);
    for k in 2..=3.min(d.n()) {
        for members in combinations(d.n(), k) {
            let s = VertexSet::from_iter_dedup(members);
            for ell in 1..=2 {
                let fast = engine(d, &s, ell).map_err(|e| e.to_string())?;
                let slow = decide_kappa_s_at_least(d, &s, ell, &cfg()).map_err(|e| e.to_string())?;
                if fast.is_some() != slow.is_some() {
                    return Err(format!("{d:?} S={s} ell={ell}: engine {} oracle {}", fast.is_some(), slow.is_some()));
                }
                if let Some(p) = fast {
                    if p.len() != ell || !verify_packing(d, &p).unwrap() {
                        return Err(format!("{d:?} S={s} ell={ell}: invalid packing"));
                    }
                    positive += 1;
                }
                checks += 1;
            }
        }
    }
    Ok((checks, positive))
}

fn semicomplete_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut checks, mut positive, mut made) = (0, 0, 0);
    while made < 30 {
        let n = rng.gen_range(3..=6);
        let d = random_semicomplete(n, rng.gen_range(0.0..0.6), &mut rng);
        if !is_strong(&d) {
            continue;
        }
        made += 1;
        let (c, p) = engine_sweep(&d, &decide_kappa_s_semicomplete)?;
        checks += c;
        positive += p;
    }
    Ok(format!("30 digraphs, {checks} decisions ({positive} positive)"))
}

fn symmetric_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut checks, mut positive) = (0, 0);
    for _ in 0..30 {
        let n = rng.gen_range(3..=6);
        let d = random_symmetric_digraph(n, rng.gen_range(0.0..0.7), &mut rng);
        let (c, p) = engine_sweep(&d, &decide_kappa_s_symmetric)?;
        checks += c;
        positive += p;
    }
    Ok(format!("30 digraphs, {checks} decisions ({positive} positive)"))
}

fn gadget_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut linked = 0;
    for i in 0..100 {
        let n = rng.gen_range(4..=6);
        let inst = random_linkage_instance(n, rng.gen_range(0.25..0.9), &mut rng);
        if strongsub::directed_linkage(&inst.d, &inst.terminals).unwrap().is_some() {
            linked += 1;
        }
        for (k, ell) in [(2, 2), (2, 3), (3, 2)] {
            if !gadget_equivalence_check(&inst, k, ell, &cfg()).map_err(|e| e.to_string())? {
                return Err(format!("base #{i} {:?} {:?}: k={k} ell={ell} disagree", inst.d, inst.terminals));
            }
        }
    }
    Ok(format!("100 bases x 3 parameter pairs ({linked} linkable)"))
}

fn cllm_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut solvable = 0;
    let total = 40;
    for i in 0..total {
        let q = 1 + i % 2;
        let k = 3 + (i / 2) % 2;
        let inst = random_cllm_instance(q, rng.gen_range(0.2..0.8), &mut rng);
        let gad = cllm_gadget(&inst, k).map_err(|e| e.to_string())?;
        let solved = cllm_solve(&inst).map_err(|e| e.to_string())?.is_some();
        let packed = decide_kappa_s_at_least(&gad.digraph, &gad.anchor, gad.ell, &cfg())
            .map_err(|e| e.to_string())?
            .is_some();
        if solved != packed {
            return Err(format!("instance #{i} q={q} k={k}: partition {solved} packing {packed}"));
        }
        solvable += solved as usize;
    }
    Ok(format!("{total} instances ({solvable} solvable)"))
}

fn decompositions() -> Outcome {
    for n in [2, 3, 5, 7, 8] {
        match hamiltonian_decomposition(n) {
            Some(h) if h.is_valid() && h.n() == n => {}
            _ => return Err(format!("n={n}: missing or invalid decomposition")),
        }
    }
    for n in [4, 6] {
        if hamiltonian_decomposition(n).is_some() {
            return Err(format!("n={n}: decomposition should not exist"));
        }
    }
    Ok("verified for 2,3,5,7,8; absent for 4,6".into())
}

fn bounds_and_extremality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut deletions = 0;
    for i in 0..200 {
        let n = rng.gen_range(2..=6);
        let d = if i % 25 == 0 {
            Digraph::complete_biorientation(n)
        } else {
            random_strong_digraph(n, rng.gen_range(0.2..0.9), &mut rng)
        };
        for k in 2..=n {
            let v = kappa_k(&d, k, &cfg()).map_err(|e| e.to_string())?.value;
            let (lo, hi) = bounds(&d, k).map_err(|e| e.to_string())?;
            if v < lo || v > hi {
                return Err(format!("{d:?} k={k}: {v} outside [{lo}, {hi}]"));
            }
            if (v == n - 1) != is_upper_bound_extremal(&d, k) {
                return Err(format!("{d:?} k={k}: value {v} vs extremality claim"));
            }
            for &a in d.arcs() {
                let smaller = d.without_arc(a).unwrap();
                if !is_strong(&smaller) {
                    continue;
                }
                deletions += 1;
                let w = kappa_k(&smaller, k, &cfg()).map_err(|e| e.to_string())?.value;
                if w > v {
                    return Err(format!("{d:?} k={k}: deleting {a:?} raised {v} to {w}"));
                }
            }
        }
    }
    Ok(format!("200 digraphs, {deletions} arc deletions"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("closed form for complete biorientations", closed_form),
        ("kappa_2 of biorientations equals vertex connectivity", kappa2_of_biorientations),
        ("semicomplete engine agrees with the oracle", semicomplete_equivalence),
        ("symmetric engine agrees with the oracle", symmetric_equivalence),
        ("linkage gadget equivalence", gadget_soundness),
        ("tripartite gadget equivalence", cllm_soundness),
        ("Hamiltonian decompositions", decompositions),
        ("bounds, extremality and monotonicity", bounds_and_extremality),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} [{detail}] ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} [{why}] ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
