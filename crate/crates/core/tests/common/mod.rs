#![allow(dead_code)]

use lexeuler::oracle::{random_eulerian_graph, GeneratorConfig};
use lexeuler::{Dictionary, LabeledDigraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Small random Eulerian graphs: 2..=6 vertices, at most `max_arcs` arcs.
pub fn small_graphs(count: usize, max_arcs: usize, seed: u64) -> Vec<LabeledDigraph<u32>> {
    let mut out = Vec::with_capacity(count);
    let mut s = seed;
    while out.len() < count {
        s += 1;
        let cfg = GeneratorConfig {
            vertex_count: 2 + (s % 5) as usize,
            cycle_count: 1 + (s / 5 % 4) as usize,
            alphabet_size: 2 + (s / 20 % 3) as u32,
            seed: s,
        };
        let Ok(g) = random_eulerian_graph(cfg) else {
            continue;
        };
        if g.arc_count() <= max_arcs && (2..=6).contains(&g.vertex_count()) {
            out.push(g);
        }
    }
    out
}

fn symbols(k: u8) -> Vec<char> {
    (0..k).map(|i| char::from(b'a' + i)).collect()
}

/// Random dictionaries with at most `max_words` words whose de Bruijn graph
/// is Eulerian. Half come from the windows of a random circular word, half
/// from rejection sampling of random word sets.
pub fn eulerian_dictionaries(count: usize, max_words: usize, seed: u64) -> Vec<Dictionary<char>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = rng.gen_range(2..=3u8);
        let span = rng.gen_range(1..=4usize);
        let alphabet = symbols(k);
        let dict = if out.len() % 2 == 0 {
            let len = rng.gen_range(1..=max_words);
            let s: Vec<char> = (0..len)
                .map(|_| *alphabet.choose(&mut rng).unwrap())
                .collect();
            let windows: Vec<Vec<char>> = lexeuler::circular_factors(&s, span);
            match Dictionary::new(windows) {
                Ok(d) => d,
                Err(_) => continue,
            }
        } else {
            let full = Dictionary::full(&alphabet, span).unwrap();
            let size = rng.gen_range(1..=max_words.min(full.len()));
            let words: Vec<Vec<char>> = full
                .words()
                .choose_multiple(&mut rng, size)
                .cloned()
                .collect();
            Dictionary::new(words).unwrap()
        };
        if lexeuler::build_debruijn_graph(&dict)
            .graph()
            .check_eulerian()
            .is_eulerian
        {
            out.push(dict);
        }
    }
    out
}

/// Random dictionaries of any shape, Eulerian or not.
pub fn random_dictionary(rng: &mut ChaCha8Rng) -> Dictionary<char> {
    let k = rng.gen_range(2..=3u8);
    let span = rng.gen_range(2..=5usize);
    let full = Dictionary::full(&symbols(k), span).unwrap();
    let size = rng.gen_range(1..=full.len().min(40));
    Dictionary::new(full.words().choose_multiple(rng, size).cloned()).unwrap()
}
