use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{build_graph, LabeledDigraph};

use super::OracleError;

const MAX_ATTEMPTS: usize = 1000;

/// Parameters for [`random_eulerian_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub vertex_count: usize,
    pub cycle_count: usize,
    pub alphabet_size: u32,
    pub seed: u64,
}

/// A random Eulerian digraph on vertices named `v0, v1, …`.
///
/// Superposes `cycle_count` random simple cycles (a cycle of length one is
/// a self-loop), gives each vertex's out-arcs distinct random labels from
/// `0..alphabet_size`, and retries until the arcs form one strongly
/// connected component. Deterministic in `seed`.
pub fn random_eulerian_graph(cfg: GeneratorConfig) -> Result<LabeledDigraph<u32>, OracleError> {
    if cfg.vertex_count == 0 || cfg.cycle_count == 0 || cfg.alphabet_size == 0 {
        return Err(OracleError::InvalidConfig(format!("{cfg:?}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut reason = String::new();
    let vertices: Vec<usize> = (0..cfg.vertex_count).collect();
    let labels: Vec<u32> = (0..cfg.alphabet_size).collect();
    for _ in 0..MAX_ATTEMPTS {
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); cfg.vertex_count];
        for _ in 0..cfg.cycle_count {
            let len = rng.gen_range(1..=cfg.vertex_count);
            let mut cycle: Vec<usize> = vertices.choose_multiple(&mut rng, len).copied().collect();
            cycle.shuffle(&mut rng);
            for i in 0..len {
                out[cycle[i]].push(cycle[(i + 1) % len]);
            }
        }
        if out
            .iter()
            .any(|heads| heads.len() > cfg.alphabet_size as usize)
        {
            reason = "out-degree exceeds alphabet".into();
            continue;
        }
        let mut triples = Vec::new();
        for (tail, heads) in out.iter().enumerate() {
            let chosen: Vec<u32> = labels
                .choose_multiple(&mut rng, heads.len())
                .copied()
                .collect();
            for (&head, label) in heads.iter().zip(chosen) {
                triples.push((format!("v{tail}"), label, format!("v{head}")));
            }
        }
        let graph = build_graph(&triples).expect("labels are distinct per tail");
        if graph.check_eulerian().is_eulerian {
            return Ok(graph);
        }
        reason = "arcs not strongly connected".into();
    }
    Err(OracleError::GenerationFailed {
        attempts: MAX_ATTEMPTS,
        reason,
    })
}
