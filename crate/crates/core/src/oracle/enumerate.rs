use crate::debruijn::Dictionary;
use crate::graph::{LabeledDigraph, Symbol, VertexId};

use super::OracleError;

/// Default cap on explored search states.
pub const DEFAULT_LIMIT: u64 = 10_000_000;

/// Labels of every Eulerian trail from a fixed start, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrailEnumeration<L> {
    pub labels: Vec<Vec<L>>,
    pub count: usize,
}

struct Search<'a, L> {
    // (tail, label, head) copied out of the graph
    arcs: Vec<(usize, &'a L, usize)>,
    used: Vec<bool>,
    start: usize,
    path: Vec<L>,
    found: Vec<Vec<L>>,
    states: u64,
    limit: u64,
}

impl<L: Symbol> Search<'_, L> {
    fn run(&mut self, at: usize) -> Result<(), OracleError> {
        self.states += 1;
        if self.states > self.limit {
            return Err(OracleError::LimitExceeded(self.limit));
        }
        if self.path.len() == self.arcs.len() {
            if at == self.start {
                self.found.push(self.path.clone());
            }
            return Ok(());
        }
        for i in 0..self.arcs.len() {
            let (tail, label, head) = self.arcs[i];
            if self.used[i] || tail != at {
                continue;
            }
            self.used[i] = true;
            self.path.push(label.clone());
            self.run(head)?;
            self.path.pop();
            self.used[i] = false;
        }
        Ok(())
    }
}

/// Exhaustive backtracking over all closed trails from `start` that use
/// every arc. Fails once more than `limit` search states were visited.
pub fn enumerate_eulerian_trails<L: Symbol>(
    graph: &LabeledDigraph<L>,
    start: VertexId,
    limit: u64,
) -> Result<TrailEnumeration<L>, OracleError> {
    if !graph.contains_vertex(start) {
        return Err(OracleError::UnknownVertex(start.to_string()));
    }
    let mut search = Search {
        arcs: graph
            .arcs()
            .map(|(_, a)| (a.tail.index(), &a.label, a.head.index()))
            .collect(),
        used: vec![false; graph.arc_count()],
        start: start.index(),
        path: Vec::with_capacity(graph.arc_count()),
        found: Vec::new(),
        states: 0,
        limit,
    };
    search.run(start.index())?;
    let mut labels = search.found;
    labels.sort();
    Ok(TrailEnumeration {
        count: labels.len(),
        labels,
    })
}

/// Least label among all Eulerian trails from `start`, by enumeration.
pub fn bruteforce_minimal_trail<L: Symbol>(
    graph: &LabeledDigraph<L>,
    start: VertexId,
) -> Result<Vec<L>, OracleError> {
    enumerate_eulerian_trails(graph, start, DEFAULT_LIMIT)?
        .labels
        .into_iter()
        .next()
        .ok_or_else(|| OracleError::NoTrail(graph.name(start).to_owned()))
}

/// Least circular word `s` of length `|D|` whose periodic extension starts
/// with the smallest length-`n` prefix or suffix `z` of the dictionary and
/// whose circular `(n + 1)`-factors are exactly the dictionary words.
///
/// Works on strings alone: a depth-first search appends symbols in
/// increasing order and prunes as soon as a window is not a dictionary
/// word or repeats one. Returns `None` if no such word exists.
pub fn bruteforce_minimal_sequence<L: Symbol>(dict: &Dictionary<L>) -> Option<Vec<L>> {
    let n = dict.span() - 1;
    let z = dict
        .words()
        .iter()
        .flat_map(|w| [&w[..n], &w[1..]])
        .min()?
        .to_vec();
    let mut search = SequenceSearch {
        dict,
        alphabet: dict.alphabet(),
        z,
        seen: vec![false; dict.len()],
        s: Vec::with_capacity(dict.len()),
    };
    search.extend().then_some(search.s)
}

struct SequenceSearch<'a, L> {
    dict: &'a Dictionary<L>,
    alphabet: Vec<L>,
    z: Vec<L>,
    seen: Vec<bool>,
    s: Vec<L>,
}

impl<L: Symbol> SequenceSearch<'_, L> {
    fn claim(&mut self, window: &[L]) -> Option<usize> {
        let i = self
            .dict
            .words()
            .binary_search_by(|x| x.as_slice().cmp(window))
            .ok()?;
        (!self.seen[i]).then(|| {
            self.seen[i] = true;
            i
        })
    }

    fn extend(&mut self) -> bool {
        let span = self.dict.span();
        let total = self.dict.len();
        if self.s.len() == total {
            return self.close();
        }
        for c in self.alphabet.clone() {
            let pos = self.s.len();
            if pos < self.z.len() && self.z[pos] != c {
                continue;
            }
            self.s.push(c);
            let mut claimed = None;
            let ok = if self.s.len() >= span {
                let window = self.s[self.s.len() - span..].to_vec();
                claimed = self.claim(&window);
                claimed.is_some()
            } else {
                true
            };
            if ok && self.extend() {
                return true;
            }
            if let Some(i) = claimed {
                self.seen[i] = false;
            }
            self.s.pop();
        }
        false
    }

    // the word is complete: check the periodic prefix and the windows that wrap
    fn close(&mut self) -> bool {
        let span = self.dict.span();
        let total = self.s.len();
        if (0..self.z.len()).any(|i| self.z[i] != self.s[i % total]) {
            return false;
        }
        let mut claimed = Vec::new();
        let mut ok = true;
        for start in (0..total).filter(|&i| i + span > total) {
            let window: Vec<L> = (start..start + span)
                .map(|i| self.s[i % total].clone())
                .collect();
            match self.claim(&window) {
                Some(i) => claimed.push(i),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        for i in claimed {
            self.seen[i] = false;
        }
        ok
    }
}
