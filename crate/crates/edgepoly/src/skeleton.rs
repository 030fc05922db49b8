//! Dimension and 1-skeleton of the edge polytope P(G), computed from
//! graph structure alone (no geometry).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Derived invariants of P(G).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeSummary {
    pub n: usize,
    pub e: usize,
    pub dim: usize,
    pub f0: u64,
    pub f1: u64,
    /// e(G) <= C(dim+1, 2), checked when dim+1 >= 4 (vacuously true below).
    pub edge_bound_ok: bool,
    /// f1 >= f0^{3/2} - f0, compared exactly in integers.
    pub f1_bound_ok: bool,
}

/// dim P(G) = n - c0(G) - 1.
pub fn dimension(g: &Graph) -> Result<usize> {
    g.require_no_isolated()?;
    Ok(g.n() - g.decompose().c0 - 1)
}

/// Do the polytope vertices of edges e1, e2 form an edge of P(G)?
///
/// True iff the edges share a vertex, or are disjoint and no 4-cycle
/// contains both. Disjoint {i,j},{k,l} lie on a common 4-cycle iff
/// (ik and jl) or (il and jk).
pub fn is_skeleton_edge(g: &Graph, e1: (usize, usize), e2: (usize, usize)) -> Result<bool> {
    for &(a, b) in &[e1, e2] {
        if !g.has_edge(a, b) {
            return Err(Error::domain(format!("edge ({a},{b}) not in graph")));
        }
    }
    let norm = |(a, b): (usize, usize)| if a < b { (a, b) } else { (b, a) };
    let (i, j) = norm(e1);
    let (k, l) = norm(e2);
    if (i, j) == (k, l) {
        return Err(Error::domain("is_skeleton_edge: edges must be distinct"));
    }
    if i == k || i == l || j == k || j == l {
        return Ok(true);
    }
    let on_common_4cycle =
        (g.has_edge(i, k) && g.has_edge(j, l)) || (g.has_edge(i, l) && g.has_edge(j, k));
    Ok(!on_common_4cycle)
}

/// (f0, f1) of P(G): f0 = e(G), f1 = C(e,2) - 2 c4 + 3 k4.
pub fn f_counts(g: &Graph) -> Result<(u64, u64)> {
    g.require_no_isolated()?;
    let e = g.edge_count() as u64;
    let f1 = e * e.saturating_sub(1) / 2 - 2 * g.count_c4() + 3 * g.count_k4();
    Ok((e, f1))
}

/// The 1-skeleton of P(G) as a graph on vertex set E(G), edges
/// re-labeled 1..e in lexicographic order.
pub fn skeleton_graph(g: &Graph) -> Result<Graph> {
    g.require_no_isolated()?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut pairs = Vec::new();
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            if is_skeleton_edge(g, edges[a], edges[b])? {
                pairs.push((a + 1, b + 1));
            }
        }
    }
    Graph::build(edges.len().max(1), &pairs)
}

pub fn summary(g: &Graph) -> Result<PolytopeSummary> {
    let dim = dimension(g)?;
    let (f0, f1) = f_counts(g)?;
    let d = (dim + 1) as u64;
    let edge_bound_ok = if d >= 4 { f0 <= d * (d - 1) / 2 } else { true };
    Ok(PolytopeSummary {
        n: g.n(),
        e: g.edge_count(),
        dim,
        f0,
        f1,
        edge_bound_ok,
        f1_bound_ok: f1_lower_bound_holds(f0, f1),
    })
}

/// f1 >= f0^{3/2} - f0 as the exact integer comparison (f1+f0)^2 >= f0^3.
pub fn f1_lower_bound_holds(f0: u64, f1: u64) -> bool {
    let lhs = (f1 as u128 + f0 as u128).pow(2);
    lhs >= (f0 as u128).pow(3)
}

/// Equality case of the bound: (f1+f0)^2 == f0^3.
pub fn f1_lower_bound_tight(f0: u64, f1: u64) -> bool {
    (f1 as u128 + f0 as u128).pow(2) == (f0 as u128).pow(3)
}
