mod common;

use std::collections::{BTreeSet, HashSet};

use lexeuler::oracle::{
    best_count, bruteforce_minimal_trail, enumerate_eulerian_trails, fkm_sequence,
    random_eulerian_graph, GeneratorConfig, DEFAULT_LIMIT,
};
use lexeuler::{
    build_debruijn_graph, build_graph, circular_factors, minimal_debruijn_sequence,
    minimal_eulerian_trail, validate_sequence, Dictionary, EngineState, LabeledDigraph, VertexId,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn arb_config() -> impl Strategy<Value = GeneratorConfig> {
    (2usize..=6, 1usize..=4, 2u32..=5, any::<u64>()).prop_map(
        |(vertex_count, cycle_count, alphabet_size, seed)| GeneratorConfig {
            vertex_count,
            cycle_count,
            alphabet_size,
            seed,
        },
    )
}

fn arb_small_graph() -> impl Strategy<Value = LabeledDigraph<u32>> {
    arb_config().prop_filter_map("generation failed or too big", |cfg| {
        random_eulerian_graph(cfg)
            .ok()
            .filter(|g| g.arc_count() <= 10)
    })
}

fn triples(g: &LabeledDigraph<u32>) -> Vec<(String, u32, String)> {
    g.arcs()
        .map(|(_, a)| {
            (
                g.name(a.tail).to_owned(),
                a.label,
                g.name(a.head).to_owned(),
            )
        })
        .collect()
}

fn starts(g: &LabeledDigraph<u32>) -> Vec<VertexId> {
    g.vertices().filter(|&v| g.has_arcs(v)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn build_is_permutation_invariant(g in arb_small_graph(), seed in any::<u64>()) {
        let mut t = triples(&g);
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        rand::seq::SliceRandom::shuffle(t.as_mut_slice(), &mut rng);
        prop_assert_eq!(build_graph(&t).unwrap(), g);
    }

    #[test]
    fn out_labels_strictly_increase(g in arb_small_graph()) {
        for v in g.vertices() {
            let labels: Vec<u32> = g.out_arcs(v).map(|(_, a)| a.label).collect();
            prop_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        }
        let total_in: usize = g.vertices().map(|v| g.in_degree(v)).sum();
        let total_out: usize = g.vertices().map(|v| g.out_degree(v)).sum();
        prop_assert_eq!(total_in, g.arc_count());
        prop_assert_eq!(total_out, g.arc_count());
    }

    #[test]
    fn cut_of_a_set_equals_cut_of_its_complement(g in arb_small_graph(), mask in any::<u8>()) {
        let (inside, outside): (Vec<VertexId>, Vec<VertexId>) =
            g.vertices().partition(|v| mask >> (v.index() % 8) & 1 == 1);
        let none = HashSet::new();
        prop_assert_eq!(g.delta(&none, &inside).unwrap(), g.delta(&none, &outside).unwrap());
    }

    #[test]
    fn engine_matches_enumeration(g in arb_small_graph()) {
        for r in starts(&g) {
            let (trail, stats) = minimal_eulerian_trail(&g, r).unwrap();
            let expected = bruteforce_minimal_trail(&g, r).unwrap();
            prop_assert_eq!(trail.label(), expected.as_slice());
            prop_assert!(stats.arc_visits <= 2 * g.arc_count());
        }
    }

    #[test]
    fn best_matches_enumeration(g in arb_small_graph()) {
        for r in starts(&g) {
            let e = enumerate_eulerian_trails(&g, r, DEFAULT_LIMIT).unwrap();
            prop_assert_eq!(best_count(&g, r).unwrap(), BigUint::from(e.count));
            let distinct: BTreeSet<&Vec<u32>> = e.labels.iter().collect();
            prop_assert_eq!(distinct.len(), e.count);
            prop_assert!(e.labels.iter().all(|l| l.len() == g.arc_count()));
        }
    }

    /// Drives the engine one round at a time and checks what happens between
    /// rounds: alphabetic trails close, the exhausted set only grows and gains
    /// the splice vertex, and each vertex hands out its arcs in increasing
    /// label order.
    #[test]
    fn round_by_round_invariants(g in arb_small_graph()) {
        for r in starts(&g) {
            let mut state = EngineState::new(&g);
            let mut trail = state.start_trail(r);
            let mut handed_out: Vec<Option<u32>> = vec![None; g.vertex_count()];
            let mut exhausted: Vec<bool> = g.vertices().map(|v| state.is_exhausted(v)).collect();
            while let Some((v, at)) = state.last_nonexhausted() {
                prop_assert!(!state.is_exhausted(v));
                let w = state.alphabetic_trail(v);
                prop_assert_eq!(state.vertex_at(w.last()), v);
                for arc in state.arcs_of(w) {
                    let a = g.arc(arc);
                    let prev = handed_out[a.tail.index()].replace(a.label);
                    prop_assert!(prev.is_none_or(|p| p < a.label));
                }
                trail = state.splice_at_last_visit(trail, at, w).unwrap();
                prop_assert!(state.is_exhausted(v));
                for u in g.vertices() {
                    prop_assert!(!exhausted[u.index()] || state.is_exhausted(u));
                    exhausted[u.index()] = state.is_exhausted(u);
                }
            }
            prop_assert_eq!(trail.arc_count(), g.arc_count());
        }
    }

    #[test]
    fn debruijn_output_is_valid_and_starts_with_min_vertex(seed in any::<u64>()) {
        let d = common::eulerian_dictionaries(1, 12, seed).pop().unwrap();
        let s = minimal_debruijn_sequence(&d).unwrap();
        prop_assert!(validate_sequence(s.symbols(), &d));
        let db = build_debruijn_graph(&d);
        let z = db.word(db.min_vertex());
        let periodic: Vec<char> = s.symbols().iter().cycle().take(z.len()).copied().collect();
        prop_assert_eq!(periodic.as_slice(), z);
    }
}

#[test]
fn fkm_sequences_cover_the_full_language() {
    for (k, max_span) in [(2u8, 10usize), (3, 6), (4, 4)] {
        for span in 1..=max_span {
            let s = fkm_sequence(k, span);
            assert_eq!(s.len(), (k as usize).pow(span as u32));
            let full = Dictionary::full(&(0..k).collect::<Vec<_>>(), span).unwrap();
            assert!(validate_sequence(&s, &full), "k={k} span={span}");
            let mut f = circular_factors(&s, span);
            f.sort();
            assert_eq!(f, full.words());
        }
    }
}

#[test]
fn start_vertex_sensitivity_exists() {
    // search the generator's output for a graph whose minimal labels from two
    // starts are not rotations of each other
    let witness = (0..5_000u64).find_map(|seed| {
        let cfg = GeneratorConfig {
            vertex_count: 3,
            cycle_count: 3,
            alphabet_size: 3,
            seed,
        };
        let g = random_eulerian_graph(cfg).ok()?;
        let labels: Vec<Vec<u32>> = starts(&g)
            .into_iter()
            .map(|r| minimal_eulerian_trail(&g, r).unwrap().0.label().to_vec())
            .collect();
        labels.iter().enumerate().find_map(|(i, a)| {
            labels[i + 1..].iter().find_map(|b| {
                let doubled = [a.as_slice(), a.as_slice()].concat();
                let rotation = doubled.windows(b.len()).any(|w| w == b.as_slice());
                (!rotation).then(|| (seed, a.clone(), b.clone()))
            })
        })
    });
    assert!(witness.is_some(), "no start-sensitive graph found");
}
