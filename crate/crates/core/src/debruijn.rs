//! Minimal de Bruijn sequences for explicit dictionaries.
//!
//! A dictionary `D` of words of length `n + 1` induces the de Bruijn graph
//! of span `n`: its vertices are the length-`n` prefixes and suffixes of
//! the words, and each word `αvβ` contributes one arc `αv → vβ` labeled `β`.
//! A walk of at least `n` arcs ends at the vertex spelled by the last `n`
//! symbols of its label, so the label of an Eulerian trail, read
//! circularly, contains every word of `D` exactly once.
//!
//! To get the least such sequence, start the minimal Eulerian trail at the
//! smallest vertex `z`. Its label has the form `B′·z`, and `z·B′` is the
//! answer.

use std::fmt::{self, Write};

use thiserror::Error;

use crate::graph::{EulerianReport, GraphBuilder, LabeledDigraph, Symbol, VertexId};
use crate::trail::{minimal_eulerian_trail, TrailError, TrailStats};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DebruijnError {
    #[error("dictionary is empty")]
    Empty,
    #[error("word {index} has length {found}, expected {expected}")]
    NonUniformLength {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("dictionary words must be non-empty")]
    EmptyWord,
    #[error("duplicate word {0}")]
    DuplicateWord(String),
    #[error("no de Bruijn sequence exists: {0}")]
    NoDeBruijnSequence(EulerianReport),
    #[error("trail label does not end with the start vertex")]
    SuffixMismatch,
    #[error(transparent)]
    Trail(#[from] TrailError),
}

fn spell<L: Symbol>(word: &[L]) -> String {
    let mut s = String::with_capacity(word.len());
    for x in word {
        write!(s, "{x}").expect("writing to a String cannot fail");
    }
    s
}

/// A set of distinct words of one common length, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dictionary<L> {
    span: usize,
    words: Vec<Vec<L>>,
}

impl<L: Symbol> Dictionary<L> {
    pub fn new<I>(words: I) -> Result<Self, DebruijnError>
    where
        I: IntoIterator<Item = Vec<L>>,
    {
        let mut words: Vec<Vec<L>> = words.into_iter().collect();
        let span = words.first().ok_or(DebruijnError::Empty)?.len();
        if span == 0 {
            return Err(DebruijnError::EmptyWord);
        }
        if let Some((index, w)) = words.iter().enumerate().find(|(_, w)| w.len() != span) {
            return Err(DebruijnError::NonUniformLength {
                index,
                expected: span,
                found: w.len(),
            });
        }
        words.sort_unstable();
        if let Some(w) = words.windows(2).find(|w| w[0] == w[1]) {
            return Err(DebruijnError::DuplicateWord(spell(&w[0])));
        }
        Ok(Dictionary { span, words })
    }

    /// Every word of length `span` over `alphabet`.
    pub fn full(alphabet: &[L], span: usize) -> Result<Self, DebruijnError> {
        let mut alphabet = alphabet.to_vec();
        alphabet.sort_unstable();
        alphabet.dedup();
        if alphabet.is_empty() {
            return Err(DebruijnError::Empty);
        }
        if span == 0 {
            return Err(DebruijnError::EmptyWord);
        }
        let k = alphabet.len();
        let total = k.checked_pow(span as u32).expect("dictionary too large");
        let mut words = Vec::with_capacity(total);
        let mut digits = vec![0usize; span];
        for _ in 0..total {
            words.push(digits.iter().map(|&d| alphabet[d].clone()).collect());
            for d in digits.iter_mut().rev() {
                *d += 1;
                if *d < k {
                    break;
                }
                *d = 0;
            }
        }
        Ok(Dictionary { span, words })
    }

    /// Word length `n + 1`.
    pub fn span(&self) -> usize {
        self.span
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Vec<L>] {
        &self.words
    }

    pub fn contains(&self, word: &[L]) -> bool {
        self.words
            .binary_search_by(|w| w.as_slice().cmp(word))
            .is_ok()
    }

    pub fn alphabet(&self) -> Vec<L> {
        let mut a: Vec<L> = self.words.iter().flatten().cloned().collect();
        a.sort_unstable();
        a.dedup();
        a
    }
}

/// The de Bruijn graph of a dictionary together with the word naming each
/// vertex. Vertex ids follow the lexicographic order of those words.
#[derive(Clone, Debug)]
pub struct DebruijnGraph<L> {
    graph: LabeledDigraph<L>,
    vertex_words: Vec<Vec<L>>,
}

impl<L: Symbol> DebruijnGraph<L> {
    pub fn graph(&self) -> &LabeledDigraph<L> {
        &self.graph
    }

    pub fn into_graph(self) -> LabeledDigraph<L> {
        self.graph
    }

    pub fn word(&self, v: VertexId) -> &[L] {
        &self.vertex_words[v.index()]
    }

    /// Vertex spelled by `word`, if present.
    pub fn vertex(&self, word: &[L]) -> Option<VertexId> {
        self.vertex_words
            .binary_search_by(|w| w.as_slice().cmp(word))
            .ok()
            .map(VertexId::new)
    }

    /// The lexicographically smallest vertex.
    pub fn min_vertex(&self) -> VertexId {
        VertexId::new(0)
    }
}

pub fn build_debruijn_graph<L: Symbol>(dict: &Dictionary<L>) -> DebruijnGraph<L> {
    let n = dict.span - 1;
    let mut ends: Vec<&[L]> = Vec::with_capacity(2 * dict.len());
    for w in &dict.words {
        ends.push(&w[..n]);
        ends.push(&w[1..]);
    }
    ends.sort_unstable();
    ends.dedup();

    let mut builder = GraphBuilder::with_capacity(ends.len(), dict.len());
    for w in &ends {
        builder.vertex(&spell(w));
    }
    let id = |part: &[L]| VertexId::new(ends.binary_search(&part).expect("end word registered"));
    for w in &dict.words {
        builder.arc(id(&w[..n]), w[n].clone(), id(&w[1..]));
    }
    let graph = builder
        .build()
        .expect("a dictionary word determines its arc, so out-labels are distinct");
    DebruijnGraph {
        graph,
        vertex_words: ends.into_iter().map(<[L]>::to_vec).collect(),
    }
}

/// A circular word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DeBruijnSequence<L>(Vec<L>);

impl<L: Symbol> DeBruijnSequence<L> {
    pub fn new(symbols: Vec<L>) -> Self {
        DeBruijnSequence(symbols)
    }

    pub fn symbols(&self) -> &[L] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<L> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<L: Symbol> fmt::Display for DeBruijnSequence<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{s}"))
    }
}

/// The `|s|` windows of length `k` of `s` read circularly, in start order.
pub fn circular_factors<L: Clone>(s: &[L], k: usize) -> Vec<Vec<L>> {
    if s.is_empty() {
        return Vec::new();
    }
    (0..s.len())
        .map(|i| (0..k).map(|j| s[(i + j) % s.len()].clone()).collect())
        .collect()
}

/// True iff the circular factors of `s` of length `d.span()` are exactly the
/// words of `d`, each once.
pub fn validate_sequence<L: Symbol>(s: &[L], d: &Dictionary<L>) -> bool {
    if s.len() != d.len() {
        return false;
    }
    let mut factors = circular_factors(s, d.span());
    factors.sort_unstable();
    factors == d.words
}

/// The least de Bruijn sequence for `dict` that starts with the smallest
/// vertex word `z`.
pub fn minimal_debruijn_sequence<L: Symbol>(
    dict: &Dictionary<L>,
) -> Result<DeBruijnSequence<L>, DebruijnError> {
    minimal_debruijn_sequence_with_stats(dict).map(|(s, _)| s)
}

pub fn minimal_debruijn_sequence_with_stats<L: Symbol>(
    dict: &Dictionary<L>,
) -> Result<(DeBruijnSequence<L>, TrailStats), DebruijnError> {
    let db = build_debruijn_graph(dict);
    let report = db.graph.check_eulerian();
    if !report.is_eulerian {
        return Err(DebruijnError::NoDeBruijnSequence(report));
    }
    let z = db.min_vertex();
    let (trail, stats) = minimal_eulerian_trail(&db.graph, z)?;
    // The walk reads z first and then the label, and comes back to z, so
    // z·B ends with z. When |B| >= n this is B = B′·z and the answer is z·B′.
    let label = trail.label();
    let z_word = db.word(z);
    let n = z_word.len();
    let mut out = Vec::with_capacity(n + label.len());
    out.extend_from_slice(z_word);
    out.extend_from_slice(label);
    if out[label.len()..] != *z_word {
        return Err(DebruijnError::SuffixMismatch);
    }
    out.truncate(label.len());
    Ok((DeBruijnSequence(out), stats))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dict(words: &[&str]) -> Dictionary<char> {
        Dictionary::new(words.iter().map(|w| w.chars().collect())).unwrap()
    }

    fn seq(d: &Dictionary<char>) -> String {
        minimal_debruijn_sequence(d).unwrap().to_string()
    }

    fn ternary_without_11() -> Dictionary<char> {
        let words: Vec<String> = ["0", "1", "2"]
            .iter()
            .flat_map(|a| ["0", "1", "2"].iter().map(move |b| format!("{a}{b}")))
            .filter(|w| w != "11")
            .collect();
        Dictionary::new(words.iter().map(|w| w.chars().collect())).unwrap()
    }

    #[test]
    fn dictionary_errors() {
        assert_eq!(Dictionary::<char>::new(vec![]), Err(DebruijnError::Empty));
        assert!(matches!(
            Dictionary::new(vec![vec!['0', '1'], vec!['0']]),
            Err(DebruijnError::NonUniformLength {
                index: 1,
                expected: 2,
                found: 1
            })
        ));
        assert!(matches!(
            Dictionary::new(vec![vec!['0', '1'], vec!['0', '1']]),
            Err(DebruijnError::DuplicateWord(w)) if w == "01"
        ));
        assert_eq!(
            Dictionary::<char>::new(vec![vec![]]),
            Err(DebruijnError::EmptyWord)
        );
    }

    #[test]
    fn full_dictionary_is_sorted() {
        let d = Dictionary::full(&['1', '0'], 2).unwrap();
        let words: Vec<String> = d.words().iter().map(|w| w.iter().collect()).collect();
        assert_eq!(words, ["00", "01", "10", "11"]);
        assert_eq!(d.alphabet(), ['0', '1']);
    }

    #[test]
    fn binary_span_two_graph() {
        let db = build_debruijn_graph(&dict(&["00", "01", "10", "11"]));
        let g = db.graph();
        assert_eq!(g.vertex_count(), 2);
        let mut arcs: Vec<(String, char, String)> = g
            .arcs()
            .map(|(_, a)| (g.name(a.tail).into(), a.label, g.name(a.head).into()))
            .collect();
        arcs.sort();
        let expected = [
            ("0", '0', "0"),
            ("0", '1', "1"),
            ("1", '0', "0"),
            ("1", '1', "1"),
        ];
        let expected: Vec<(String, char, String)> = expected
            .iter()
            .map(|(t, l, h)| (t.to_string(), *l, h.to_string()))
            .collect();
        assert_eq!(arcs, expected);
    }

    #[test]
    fn one_word_dictionary() {
        let db = build_debruijn_graph(&dict(&["aa"]));
        let g = db.graph();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.arc_count(), 1);
        let (_, a) = g.arcs().next().unwrap();
        assert_eq!((a.tail, a.label, a.head), (a.head, 'a', a.tail));
        assert_eq!(seq(&dict(&["aa"])), "a");
        // shorter than the vertex words
        assert_eq!(seq(&dict(&["aaa"])), "a");
        assert_eq!(seq(&dict(&["aba", "bab"])), "ab");
    }

    #[test]
    fn ternary_minus_11_graph() {
        let db = build_debruijn_graph(&ternary_without_11());
        assert_eq!(db.graph().vertex_count(), 3);
        assert_eq!(db.graph().arc_count(), 8);
        assert!(db.graph().check_eulerian().balanced);
    }

    #[test]
    fn minimal_sequences() {
        assert_eq!(seq(&dict(&["00", "01", "10", "11"])), "0011");
        assert_eq!(
            seq(&dict(&[
                "000", "001", "010", "011", "100", "101", "110", "111"
            ])),
            "00010111"
        );
        assert_eq!(seq(&ternary_without_11()), "00102122");
    }

    #[test]
    fn span_one_dictionary() {
        let d = Dictionary::full(&['b', 'a', 'c'], 1).unwrap();
        let db = build_debruijn_graph(&d);
        assert_eq!(db.graph().vertex_count(), 1);
        assert_eq!(db.graph().name(VertexId::new(0)), "");
        assert_eq!(seq(&d), "abc");
    }

    #[test]
    fn unbalanced_dictionary() {
        let err = minimal_debruijn_sequence(&dict(&["00", "01"])).unwrap_err();
        let DebruijnError::NoDeBruijnSequence(report) = err else {
            panic!("expected NoDeBruijnSequence");
        };
        assert!(report.to_string().contains("vertex 1 unbalanced"));
    }

    #[test]
    fn disconnected_dictionary() {
        assert!(matches!(
            minimal_debruijn_sequence(&dict(&["00", "11"])),
            Err(DebruijnError::NoDeBruijnSequence(r)) if r.balanced && !r.strongly_connected_support
        ));
    }

    #[test]
    fn circular_factor_examples() {
        let chars = |s: &str| s.chars().collect::<Vec<_>>();
        let strs = |v: Vec<Vec<char>>| {
            v.into_iter()
                .map(|w| w.into_iter().collect())
                .collect::<Vec<String>>()
        };
        assert_eq!(
            strs(circular_factors(&chars("0011"), 2)),
            ["00", "01", "11", "10"]
        );
        assert_eq!(strs(circular_factors(&chars("0"), 1)), ["0"]);
        let mut f = strs(circular_factors(&chars("00102122"), 2));
        f.sort();
        assert_eq!(f, ["00", "01", "02", "10", "12", "20", "21", "22"]);
    }

    #[test]
    fn validate_examples() {
        let chars = |s: &str| s.chars().collect::<Vec<_>>();
        let full = dict(&["00", "01", "10", "11"]);
        assert!(validate_sequence(&chars("0011"), &full));
        assert!(!validate_sequence(&chars("0101"), &full));
        assert!(!validate_sequence(
            &chars("0011"),
            &dict(&["00", "01", "11"])
        ));
    }
}
