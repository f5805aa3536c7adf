//! Eulerian trail counts through the BEST theorem.
//!
//! `ec(G) = t_w(G) · ∏_v (outdeg(v) − 1)!`, where `t_w(G)` is the number of
//! spanning arborescences oriented toward any fixed root `w`. By the
//! matrix-tree theorem `t_w(G)` is the determinant of the out-degree
//! Laplacian with row and column `w` removed. Self-loops add one to the
//! out-degree and one to the adjacency diagonal, so they cancel.
//!
//! `ec(G)` counts circuits up to rotation. Anchoring a circuit at one of the
//! `outdeg(r)` departures from `r` gives a distinct arc sequence, so the
//! number of Eulerian trails from `r` is `ec(G) · outdeg(r)`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::graph::{LabeledDigraph, Symbol, VertexId};

use super::OracleError;

/// Number of Eulerian trails (as arc sequences) starting at `start`.
pub fn best_count<L: Symbol>(
    graph: &LabeledDigraph<L>,
    start: VertexId,
) -> Result<BigUint, OracleError> {
    if !graph.contains_vertex(start) {
        return Err(OracleError::UnknownVertex(start.to_string()));
    }
    let report = graph.check_eulerian();
    if !report.is_eulerian {
        return Err(OracleError::NotEulerian(report));
    }
    if graph.is_empty() {
        return Ok(BigUint::one());
    }
    if !graph.has_arcs(start) {
        return Ok(BigUint::zero());
    }
    let mut count = arborescence_count(graph, start)?;
    for v in graph.vertices().filter(|&v| graph.has_arcs(v)) {
        count *= factorial(graph.out_degree(v) - 1);
    }
    Ok(count * BigUint::from(graph.out_degree(start)))
}

/// Spanning arborescences of the arc support oriented toward `root`.
pub fn arborescence_count<L: Symbol>(
    graph: &LabeledDigraph<L>,
    root: VertexId,
) -> Result<BigUint, OracleError> {
    if !graph.contains_vertex(root) {
        return Err(OracleError::UnknownVertex(root.to_string()));
    }
    let support: Vec<VertexId> = graph
        .vertices()
        .filter(|&v| graph.has_arcs(v) || v == root)
        .collect();
    let mut position = vec![usize::MAX; graph.vertex_count()];
    let mut next = 0;
    for &v in &support {
        if v != root {
            position[v.index()] = next;
            next += 1;
        }
    }
    let m = next;
    let mut laplacian = vec![vec![BigInt::zero(); m]; m];
    for (_, arc) in graph.arcs() {
        if arc.tail == arc.head {
            continue;
        }
        let (t, h) = (position[arc.tail.index()], position[arc.head.index()]);
        if t != usize::MAX {
            laplacian[t][t] += 1;
            if h != usize::MAX {
                laplacian[t][h] -= 1;
            }
        }
    }
    let det = determinant(laplacian);
    // a Laplacian minor is never negative
    Ok(det.abs().to_biguint().expect("non-negative"))
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub(crate) fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}
