//! Minimal Eulerian trails from a fixed start vertex.
//!
//! The engine grows a closed trail `T` in rounds. Each round finds the last
//! vertex `v` of `T` that still has an unused out-arc, builds the greedy
//! *alphabetic trail* from `v` over the unused arcs (always take the
//! smallest unused label, stop when stuck), and splices it into `T` at the
//! last visit of `v`:
//!
//! ```text
//! T  <-  (T up to the last visit of v) · W · (T from the last visit of v)
//! ```
//!
//! When no such `v` remains, `T` is the Eulerian trail whose label word is
//! lexicographically least among all Eulerian trails starting at the chosen
//! vertex.
//!
//! Everything is array-indexed. Each vertex has a cursor into its
//! label-sorted out-arcs that only moves forward. The trail is a singly
//! linked list in an arena, so a splice rewires two links. The "last
//! non-exhausted vertex" query pops a visit stack lazily. Every arc is
//! consumed once by a cursor and read once more when the final trail is
//! materialized, and [`TrailStats::arc_visits`] counts exactly those reads.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{ArcId, EulerianReport, LabeledDigraph, Symbol, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrailError {
    #[error("graph is not eulerian: {0}")]
    NotEulerian(EulerianReport),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("start vertex {0} has no incident arcs")]
    IsolatedStart(String),
    #[error("cannot splice a trail around {found} at a visit of {expected}")]
    SpliceMismatch { expected: String, found: String },
}

/// Stable reference to one visit inside an [`EngineState`]'s trail arena.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Handle(u32);

impl Handle {
    fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, Debug)]
struct Node {
    vertex: VertexId,
    // arc leaving this visit and the visit it leads to; both `None` at the end
    arc: Option<ArcId>,
    next: Option<Handle>,
}

/// A trail stored as a linked run of visits in an [`EngineState`].
///
/// This is a cheap copyable view; it is only meaningful together with the
/// state that allocated it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinkedTrail {
    first: Handle,
    last: Handle,
    arcs: usize,
}

impl LinkedTrail {
    pub fn first(&self) -> Handle {
        self.first
    }

    pub fn last(&self) -> Handle {
        self.last
    }

    pub fn arc_count(&self) -> usize {
        self.arcs
    }

    pub fn is_empty(&self) -> bool {
        self.arcs == 0
    }
}

/// Counters collected during a run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TrailStats {
    pub arc_visits: usize,
    pub splices: usize,
    pub arcs_total: usize,
    /// Splices checked for the singleton-cut property (diagnostics only).
    pub cut_checks: usize,
    pub cut_violations: usize,
}

impl TrailStats {
    /// `arc_visits <= 2 * arcs_total`.
    pub fn within_visit_bound(&self) -> bool {
        self.arc_visits <= 2 * self.arcs_total
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EngineOptions {
    /// Before every splice at a visit of `v` followed by arc `vw`, check that
    /// the only arc outside `Tv` crossing the vertex set of the rest of the
    /// trail is `vw`. Costs `O(|A|)` per splice.
    pub check_cut_property: bool,
}

impl EngineOptions {
    pub fn diagnostics() -> Self {
        EngineOptions {
            check_cut_property: true,
        }
    }
}

/// Mutable state of one run over a shared graph.
pub struct EngineState<'g, L> {
    graph: &'g LabeledDigraph<L>,
    // absolute index into the graph's sorted arc array
    cursor: Vec<usize>,
    remaining_out: Vec<u32>,
    used: Vec<bool>,
    nodes: Vec<Node>,
    visit_stack: Vec<(VertexId, Handle)>,
    last_visit: Vec<Option<Handle>>,
    stats: TrailStats,
}

impl<'g, L: Symbol> EngineState<'g, L> {
    pub fn new(graph: &'g LabeledDigraph<L>) -> Self {
        let n = graph.vertex_count();
        EngineState {
            graph,
            cursor: graph.vertices().map(|v| graph.out_range(v).start).collect(),
            remaining_out: graph
                .vertices()
                .map(|v| graph.out_degree(v) as u32)
                .collect(),
            used: vec![false; graph.arc_count()],
            nodes: Vec::with_capacity(graph.arc_count() + 1),
            visit_stack: Vec::with_capacity(graph.arc_count() + 1),
            last_visit: vec![None; n],
            stats: TrailStats {
                arcs_total: graph.arc_count(),
                ..TrailStats::default()
            },
        }
    }

    pub fn graph(&self) -> &'g LabeledDigraph<L> {
        self.graph
    }

    pub fn stats(&self) -> TrailStats {
        self.stats
    }

    /// No unused out-arc remains at `v`.
    pub fn is_exhausted(&self, v: VertexId) -> bool {
        self.remaining_out[v.index()] == 0
    }

    pub fn is_used(&self, arc: ArcId) -> bool {
        self.used[arc.index()]
    }

    /// Vertex of the visit at `h`.
    pub fn vertex_at(&self, h: Handle) -> VertexId {
        self.nodes[h.index()].vertex
    }

    /// Most recently recorded visit of `v`.
    pub fn last_visit(&self, v: VertexId) -> Option<Handle> {
        self.last_visit[v.index()]
    }

    fn push_node(&mut self, vertex: VertexId) -> Handle {
        let h = Handle(u32::try_from(self.nodes.len()).expect("trail arena overflows u32"));
        self.nodes.push(Node {
            vertex,
            arc: None,
            next: None,
        });
        h
    }

    fn record_visit(&mut self, v: VertexId, h: Handle) {
        self.visit_stack.push((v, h));
        self.last_visit[v.index()] = Some(h);
    }

    /// The empty trail at `r`, registered as the first visit.
    pub fn start_trail(&mut self, r: VertexId) -> LinkedTrail {
        let h = self.push_node(r);
        self.record_visit(r, h);
        LinkedTrail {
            first: h,
            last: h,
            arcs: 0,
        }
    }

    /// Greedy trail from `v` over the unused arcs: repeatedly take the
    /// smallest-labelled unused out-arc until the current vertex has none.
    ///
    /// In a balanced graph the result is closed and exhausts `v`. The first
    /// visit of the returned trail is not pushed on the visit stack; after a
    /// splice it is represented by the visit it was spliced into.
    pub fn alphabetic_trail(&mut self, v: VertexId) -> LinkedTrail {
        let first = self.push_node(v);
        let mut last = first;
        let mut current = v;
        let mut arcs = 0;
        while self.remaining_out[current.index()] > 0 {
            let i = self.cursor[current.index()];
            self.cursor[current.index()] += 1;
            self.remaining_out[current.index()] -= 1;
            self.used[i] = true;
            self.stats.arc_visits += 1;
            let arc = ArcId::new(i);
            let head = self.graph.arc(arc).head;
            let h = self.push_node(head);
            let prev = &mut self.nodes[last.index()];
            prev.arc = Some(arc);
            prev.next = Some(h);
            self.record_visit(head, h);
            last = h;
            current = head;
            arcs += 1;
        }
        LinkedTrail { first, last, arcs }
    }

    /// The last visited vertex that still has an unused out-arc, with the
    /// handle of its last visit, or `None` once every visited vertex is
    /// exhausted.
    pub fn last_nonexhausted(&mut self) -> Option<(VertexId, Handle)> {
        while let Some(&(v, h)) = self.visit_stack.last() {
            if self.remaining_out[v.index()] > 0 {
                debug_assert_eq!(self.last_visit[v.index()], Some(h));
                return Some((v, h));
            }
            self.visit_stack.pop();
        }
        None
    }

    /// `(T up to at) · inserted · (T from at)` in constant time.
    ///
    /// `inserted` must be closed at the vertex visited at `at`. Its first
    /// visit node is dropped; `at` takes its place.
    pub fn splice_at_last_visit(
        &mut self,
        trail: LinkedTrail,
        at: Handle,
        inserted: LinkedTrail,
    ) -> Result<LinkedTrail, TrailError> {
        let v = self.vertex_at(at);
        for end in [inserted.first, inserted.last] {
            let found = self.vertex_at(end);
            if found != v {
                return Err(TrailError::SpliceMismatch {
                    expected: self.graph.name(v).to_owned(),
                    found: self.graph.name(found).to_owned(),
                });
            }
        }
        if inserted.arcs == 0 {
            return Ok(trail);
        }
        let head = self.nodes[inserted.first.index()];
        let anchor = self.nodes[at.index()];
        {
            let tail = &mut self.nodes[inserted.last.index()];
            tail.arc = anchor.arc;
            tail.next = anchor.next;
        }
        let anchor = &mut self.nodes[at.index()];
        anchor.arc = head.arc;
        anchor.next = head.next;
        self.stats.splices += 1;
        Ok(LinkedTrail {
            first: trail.first,
            last: if trail.last == at {
                inserted.last
            } else {
                trail.last
            },
            arcs: trail.arcs + inserted.arcs,
        })
    }

    fn walk(&self, trail: LinkedTrail) -> impl Iterator<Item = Node> + '_ {
        let mut next = Some(trail.first);
        std::iter::from_fn(move || {
            let node = self.nodes[next?.index()];
            next = node.next;
            Some(node)
        })
    }

    /// Arcs of `trail` in order, without touching the counters.
    pub fn arcs_of(&self, trail: LinkedTrail) -> Vec<ArcId> {
        self.walk(trail).filter_map(|n| n.arc).collect()
    }

    /// Copies `trail` out of the arena. Counts one visit per arc.
    pub fn materialize(&mut self, trail: LinkedTrail) -> Trail<L> {
        let mut vertices = Vec::with_capacity(trail.arcs + 1);
        let mut arcs = Vec::with_capacity(trail.arcs);
        let mut label = Vec::with_capacity(trail.arcs);
        for node in self.walk(trail) {
            vertices.push(node.vertex);
            if let Some(a) = node.arc {
                arcs.push(a);
                label.push(self.graph.arc(a).label.clone());
            }
        }
        self.stats.arc_visits += arcs.len();
        Trail {
            vertices,
            arcs,
            label,
        }
    }

    /// Singleton-cut check for a splice at the visit `at` of `trail`:
    /// with `Tv` the part of `trail` before `at` and `U` the vertices after
    /// `at`, the cut of `U` in the graph minus `Tv` must be exactly the arc
    /// leaving `at`. Vacuously true when `at` is the end of the trail.
    pub fn cut_property_holds(&self, trail: LinkedTrail, at: Handle) -> bool {
        let Some(leaving) = self.nodes[at.index()].arc else {
            return true;
        };
        let mut before = HashSet::new();
        let mut after = Vec::new();
        let mut seen_anchor = false;
        let mut next = Some(trail.first);
        while let Some(h) = next {
            let node = self.nodes[h.index()];
            if seen_anchor {
                after.push(node.vertex);
            } else if h == at {
                seen_anchor = true;
            } else if let Some(a) = node.arc {
                before.insert(a);
            }
            next = node.next;
        }
        after.sort_unstable();
        after.dedup();
        match self.graph.delta(&before, &after) {
            Ok(cut) => cut.len() == 1 && cut.contains(&leaving),
            Err(_) => false,
        }
    }
}

/// A materialized trail: `vertices.len() == arcs.len() + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trail<L> {
    vertices: Vec<VertexId>,
    arcs: Vec<ArcId>,
    label: Vec<L>,
}

impl<L: Symbol> Trail<L> {
    /// Assembles a trail from its parts; nothing is checked.
    pub fn from_parts(vertices: Vec<VertexId>, arcs: Vec<ArcId>, label: Vec<L>) -> Self {
        Trail {
            vertices,
            arcs,
            label,
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn arcs(&self) -> &[ArcId] {
        &self.arcs
    }

    pub fn label(&self) -> &[L] {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn start(&self) -> Option<VertexId> {
        self.vertices.first().copied()
    }

    pub fn end(&self) -> Option<VertexId> {
        self.vertices.last().copied()
    }

    pub fn is_closed(&self) -> bool {
        self.start() == self.end()
    }

    /// `u -a-> v -b-> u` using the graph's vertex names.
    pub fn display<'a>(&'a self, graph: &'a LabeledDigraph<L>) -> impl fmt::Display + 'a {
        TrailDisplay { trail: self, graph }
    }
}

struct TrailDisplay<'a, L> {
    trail: &'a Trail<L>,
    graph: &'a LabeledDigraph<L>,
}

impl<L: Symbol> fmt::Display for TrailDisplay<'_, L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.trail;
        if let Some(&v) = t.vertices.first() {
            f.write_str(self.graph.name(v))?;
        }
        for (i, label) in t.label.iter().enumerate() {
            write!(f, " -{}-> {}", label, self.graph.name(t.vertices[i + 1]))?;
        }
        Ok(())
    }
}

/// Lexicographically minimal Eulerian trail starting (and ending) at `start`.
pub fn minimal_eulerian_trail<L: Symbol>(
    graph: &LabeledDigraph<L>,
    start: VertexId,
) -> Result<(Trail<L>, TrailStats), TrailError> {
    minimal_eulerian_trail_with(graph, start, EngineOptions::default())
}

pub fn minimal_eulerian_trail_with<L: Symbol>(
    graph: &LabeledDigraph<L>,
    start: VertexId,
    options: EngineOptions,
) -> Result<(Trail<L>, TrailStats), TrailError> {
    if !graph.contains_vertex(start) {
        return Err(TrailError::UnknownVertex(start.to_string()));
    }
    let report = graph.check_eulerian();
    if !report.is_eulerian {
        return Err(TrailError::NotEulerian(report));
    }
    if !graph.is_empty() && !graph.has_arcs(start) {
        return Err(TrailError::IsolatedStart(graph.name(start).to_owned()));
    }

    let mut state = EngineState::new(graph);
    let mut trail = state.start_trail(start);
    while let Some((v, at)) = state.last_nonexhausted() {
        if options.check_cut_property && !trail.is_empty() {
            state.stats.cut_checks += 1;
            if !state.cut_property_holds(trail, at) {
                state.stats.cut_violations += 1;
            }
        }
        let greedy = state.alphabetic_trail(v);
        trail = state.splice_at_last_visit(trail, at, greedy)?;
    }
    debug_assert_eq!(trail.arcs, graph.arc_count());
    let trail = state.materialize(trail);
    Ok((trail, state.stats()))
}

/// True iff `trail` is closed at `start` and uses every arc of `graph`
/// exactly once, with consistent vertices and labels.
pub fn verify_eulerian_trail<L: Symbol>(
    graph: &LabeledDigraph<L>,
    trail: &Trail<L>,
    start: VertexId,
) -> bool {
    let t = trail;
    if t.vertices.len() != t.arcs.len() + 1 || t.label.len() != t.arcs.len() {
        return false;
    }
    if t.arcs.len() != graph.arc_count() || t.start() != Some(start) || t.end() != Some(start) {
        return false;
    }
    let mut seen = vec![false; graph.arc_count()];
    for (i, &id) in t.arcs.iter().enumerate() {
        if id.index() >= graph.arc_count() || std::mem::replace(&mut seen[id.index()], true) {
            return false;
        }
        let arc = graph.arc(id);
        if arc.tail != t.vertices[i] || arc.head != t.vertices[i + 1] || arc.label != t.label[i] {
            return false;
        }
    }
    true
}
