//! Arc-labeled directed multigraphs.
//!
//! A [`LabeledDigraph`] stores its arcs sorted by `(tail, label)`, so the
//! out-arcs of every vertex form one contiguous run in increasing label
//! order. The trail engine consumes each run front to back with a single
//! cursor per vertex.
//!
//! Arcs leaving the same vertex must carry distinct labels. The same label
//! may appear at any number of tails, and self-loops and parallel arcs are
//! allowed.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::ops::Range;

use thiserror::Error;

/// Anything usable as an arc label: totally ordered and printable.
pub trait Symbol: Ord + Clone + fmt::Debug + fmt::Display {}

impl<T: Ord + Clone + fmt::Debug + fmt::Display> Symbol for T {}

/// Dense vertex index, `0..vertex_count`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(u32);

impl VertexId {
    pub fn new(index: usize) -> Self {
        VertexId(u32::try_from(index).expect("vertex index overflows u32"))
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Dense arc index, `0..arc_count`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcId(u32);

impl ArcId {
    pub fn new(index: usize) -> Self {
        ArcId(u32::try_from(index).expect("arc index overflows u32"))
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc<L> {
    pub tail: VertexId,
    pub head: VertexId,
    pub label: L,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} has two out-arcs labeled {label}")]
    DuplicateOutLabel { vertex: String, label: String },
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
}

/// An immutable arc-labeled digraph with label-sorted adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledDigraph<L> {
    names: Vec<String>,
    // vertex ids ordered by name, for lookups
    by_name: Vec<VertexId>,
    // sorted by (tail, label); the position is the ArcId
    arcs: Vec<Arc<L>>,
    // CSR offsets into `arcs`, length |V| + 1
    out_start: Vec<usize>,
    in_degree: Vec<usize>,
}

impl<L: Symbol> LabeledDigraph<L> {
    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.names.len()).map(VertexId::new)
    }

    pub fn arcs(&self) -> impl Iterator<Item = (ArcId, &Arc<L>)> + '_ {
        self.arcs
            .iter()
            .enumerate()
            .map(|(i, a)| (ArcId::new(i), a))
    }

    pub fn arc(&self, id: ArcId) -> &Arc<L> {
        &self.arcs[id.index()]
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.index()]
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.by_name
            .binary_search_by(|probe| self.names[probe.index()].as_str().cmp(name))
            .ok()
            .map(|i| self.by_name[i])
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.index() < self.names.len()
    }

    /// Arc ids leaving `v`, in strictly increasing label order.
    pub fn out_range(&self, v: VertexId) -> Range<usize> {
        self.out_start[v.index()]..self.out_start[v.index() + 1]
    }

    pub fn out_arcs(&self, v: VertexId) -> impl Iterator<Item = (ArcId, &Arc<L>)> + '_ {
        self.out_range(v).map(|i| (ArcId::new(i), &self.arcs[i]))
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_range(v).len()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_degree[v.index()]
    }

    /// Vertices with at least one incident arc.
    pub fn has_arcs(&self, v: VertexId) -> bool {
        self.out_degree(v) > 0 || self.in_degree(v) > 0
    }

    /// Balance and strong connectivity of the arc support.
    ///
    /// Isolated vertices are ignored by the connectivity test.
    pub fn check_eulerian(&self) -> EulerianReport {
        let offending: Vec<DegreeImbalance> = self
            .vertices()
            .filter(|&v| self.in_degree(v) != self.out_degree(v))
            .map(|v| DegreeImbalance {
                vertex: self.name(v).to_owned(),
                in_degree: self.in_degree(v),
                out_degree: self.out_degree(v),
            })
            .collect();
        let balanced = offending.is_empty();
        let strongly_connected_support = self.support_strongly_connected();
        EulerianReport {
            balanced,
            strongly_connected_support,
            offending_vertices: offending,
            is_eulerian: balanced && strongly_connected_support,
        }
    }

    fn support_strongly_connected(&self) -> bool {
        let Some(root) = self.vertices().find(|&v| self.has_arcs(v)) else {
            return true;
        };
        let n = self.vertex_count();
        let mut reverse: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        for a in &self.arcs {
            reverse[a.head.index()].push(a.tail);
        }
        let forward = self.reach(root, |v, out: &mut Vec<VertexId>| {
            out.extend(self.out_arcs(v).map(|(_, a)| a.head))
        });
        let backward = self.reach(root, |v, out: &mut Vec<VertexId>| {
            out.extend_from_slice(&reverse[v.index()])
        });
        self.vertices()
            .filter(|&v| self.has_arcs(v))
            .all(|v| forward[v.index()] && backward[v.index()])
    }

    fn reach<F>(&self, root: VertexId, mut neighbours: F) -> Vec<bool>
    where
        F: FnMut(VertexId, &mut Vec<VertexId>),
    {
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![root];
        let mut next = Vec::new();
        seen[root.index()] = true;
        while let Some(v) = stack.pop() {
            next.clear();
            neighbours(v, &mut next);
            for &w in &next {
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// The cut `δ_{G∖used}(set)`: unused arcs with exactly one endpoint in `set`.
    pub fn delta(
        &self,
        used: &HashSet<ArcId>,
        set: &[VertexId],
    ) -> Result<BTreeSet<ArcId>, GraphError> {
        let mut inside = vec![false; self.vertex_count()];
        for &v in set {
            if !self.contains_vertex(v) {
                return Err(GraphError::UnknownVertex(v.to_string()));
            }
            inside[v.index()] = true;
        }
        Ok(self
            .arcs()
            .filter(|(id, a)| {
                !used.contains(id) && inside[a.tail.index()] != inside[a.head.index()]
            })
            .map(|(id, _)| id)
            .collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeImbalance {
    pub vertex: String,
    pub in_degree: usize,
    pub out_degree: usize,
}

/// Diagnosis returned by [`LabeledDigraph::check_eulerian`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerianReport {
    pub balanced: bool,
    pub strongly_connected_support: bool,
    pub offending_vertices: Vec<DegreeImbalance>,
    pub is_eulerian: bool,
}

impl fmt::Display for EulerianReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_eulerian {
            return f.write_str("eulerian");
        }
        let mut first = true;
        for d in &self.offending_vertices {
            if !first {
                f.write_str("; ")?;
            }
            first = false;
            write!(
                f,
                "vertex {} unbalanced (in {}, out {})",
                d.vertex, d.in_degree, d.out_degree
            )?;
        }
        if !self.strongly_connected_support {
            if !first {
                f.write_str("; ")?;
            }
            f.write_str("arcs do not form a single strongly connected component")?;
        }
        Ok(())
    }
}

/// Incremental construction with caller-chosen vertex order.
///
/// Vertex ids follow insertion order. Arc ids are assigned at
/// [`build`](GraphBuilder::build) time by sorting on `(tail, label)`.
#[derive(Debug, Clone)]
pub struct GraphBuilder<L> {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
    arcs: Vec<Arc<L>>,
}

impl<L: Symbol> Default for GraphBuilder<L> {
    fn default() -> Self {
        Self::new()
    }
}

impl<L: Symbol> GraphBuilder<L> {
    pub fn new() -> Self {
        GraphBuilder {
            names: Vec::new(),
            index: HashMap::new(),
            arcs: Vec::new(),
        }
    }

    pub fn with_capacity(vertices: usize, arcs: usize) -> Self {
        GraphBuilder {
            names: Vec::with_capacity(vertices),
            index: HashMap::with_capacity(vertices),
            arcs: Vec::with_capacity(arcs),
        }
    }

    /// Returns the id of `name`, adding the vertex if needed.
    pub fn vertex(&mut self, name: &str) -> VertexId {
        if let Some(&v) = self.index.get(name) {
            return v;
        }
        let v = VertexId::new(self.names.len());
        self.names.push(name.to_owned());
        self.index.insert(name.to_owned(), v);
        v
    }

    pub fn arc(&mut self, tail: VertexId, label: L, head: VertexId) -> &mut Self {
        assert!(
            tail.index() < self.names.len() && head.index() < self.names.len(),
            "arc endpoints must be added with `vertex` first"
        );
        self.arcs.push(Arc { tail, head, label });
        self
    }

    pub fn build(self) -> Result<LabeledDigraph<L>, GraphError> {
        let GraphBuilder {
            names, mut arcs, ..
        } = self;
        let n = names.len();
        arcs.sort_by(|a, b| a.tail.cmp(&b.tail).then_with(|| a.label.cmp(&b.label)));
        if let Some(w) = arcs
            .windows(2)
            .find(|w| w[0].tail == w[1].tail && w[0].label == w[1].label)
        {
            return Err(GraphError::DuplicateOutLabel {
                vertex: names[w[0].tail.index()].clone(),
                label: w[0].label.to_string(),
            });
        }
        let mut out_start = vec![0usize; n + 1];
        let mut in_degree = vec![0usize; n];
        for a in &arcs {
            out_start[a.tail.index() + 1] += 1;
            in_degree[a.head.index()] += 1;
        }
        for i in 0..n {
            out_start[i + 1] += out_start[i];
        }
        let mut by_name: Vec<VertexId> = (0..n).map(VertexId::new).collect();
        by_name.sort_by(|a, b| names[a.index()].cmp(&names[b.index()]));
        Ok(LabeledDigraph {
            names,
            by_name,
            arcs,
            out_start,
            in_degree,
        })
    }
}

/// Builds a graph from `(tail, label, head)` triples.
///
/// Vertex ids follow name order and arc ids follow `(tail, label)` order,
/// so the result does not depend on the order of `triples`.
pub fn build_graph<L, S>(triples: &[(S, L, S)]) -> Result<LabeledDigraph<L>, GraphError>
where
    L: Symbol,
    S: AsRef<str>,
{
    let mut names: Vec<&str> = triples
        .iter()
        .flat_map(|(t, _, h)| [t.as_ref(), h.as_ref()])
        .collect();
    names.sort_unstable();
    names.dedup();
    let mut builder = GraphBuilder::with_capacity(names.len(), triples.len());
    for name in names {
        builder.vertex(name);
    }
    for (t, label, h) in triples {
        let tail = builder.vertex(t.as_ref());
        let head = builder.vertex(h.as_ref());
        builder.arc(tail, label.clone(), head);
    }
    builder.build()
}
