//! Facet enumeration for edge polytopes of connected graphs via the
//! Ohsugi-Hibi characterization: coordinate hyperplanes x_i >= 0 at
//! regular (resp. ordinary) vertices and independent-set hyperplanes
//! sum_{N(A)} x_i - sum_A x_j >= 0 at fundamental (resp. acceptable)
//! sets.

use rayon::prelude::*;

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::skeleton;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FacetKind {
    /// Coordinate hyperplane x_i = 0.
    Coordinate(usize),
    /// Independent-set hyperplane for the set A (1-based, sorted).
    IndependentSet(Vec<usize>),
}

/// A facet of P(G): its defining inequality c . x >= 0 and the graph
/// edges whose polytope vertices are tight on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetCertificate {
    pub kind: FacetKind,
    /// Integer coefficient vector of length n, sense c . x >= 0.
    pub coeffs: Vec<i64>,
    /// Edges {i,j} with c_i + c_j = 0, sorted lexicographically.
    pub tight_edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct FacetOptions {
    /// Independent-set enumeration is exponential; refuse above this
    /// vertex count unless overridden.
    pub max_n: usize,
    pub override_cap: bool,
}

impl Default for FacetOptions {
    fn default() -> Self {
        FacetOptions {
            max_n: 24,
            override_cap: false,
        }
    }
}

/// Result of `enumerate_facets`: the deduplicated certificates plus a
/// note for every merge of hyperplanes that cut the same facet.
#[derive(Debug, Clone)]
pub struct FacetEnumeration {
    pub facets: Vec<FacetCertificate>,
    pub merge_notes: Vec<String>,
}

/// Bound checks on the facet count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetBounds {
    pub count: usize,
    pub dim: usize,
    /// count <= 2^dim + dim (holds for every edge polytope).
    pub upper_ok: bool,
    /// count > 4^{floor(dim/3)} (informational; guaranteed for windmills).
    pub windmill_lower: bool,
    /// For a windmill W(4,k): the facet count claimed in the literature,
    /// 4^k + 3k - 1, reported for comparison but never asserted.
    pub windmill_claimed: Option<u128>,
}

/// Does deleting vertex i leave a facet-supporting configuration?
///
/// Non-bipartite g: i is regular iff G - i has no bipartite component
/// (an isolated vertex counts as bipartite). Bipartite g: i is
/// ordinary iff G - i is connected.
pub fn vertex_facet_test(g: &Graph, i: usize) -> Result<bool> {
    require_connected(g)?;
    if i < 1 || i > g.n() {
        return Err(Error::validation(format!("vertex {i} out of range")));
    }
    let rest: Vec<usize> = (1..=g.n()).filter(|&v| v != i).collect();
    if rest.is_empty() {
        return Ok(false);
    }
    let h = g.induced(&rest)?;
    let dec = g.decompose();
    let bipartite = dec.bipartite_flags[0];
    if bipartite {
        Ok(h.decompose().components.len() == 1)
    } else {
        Ok(no_bipartite_components(&h))
    }
}

fn no_bipartite_components(h: &Graph) -> bool {
    h.decompose().c0 == 0
}

/// Is A a fundamental (non-bipartite g) or acceptable (bipartite g,
/// with A strictly inside part V1) set?
pub fn set_facet_test(g: &Graph, a: &[usize]) -> Result<bool> {
    require_connected(g)?;
    if a.is_empty() {
        return Err(Error::validation("set_facet_test: empty set"));
    }
    if !g.is_independent(a)? {
        return Ok(false);
    }
    let bipartition = g.bipartition();
    if let Some((v1, _)) = &bipartition {
        // Theorem restricts acceptable sets to proper subsets of V1
        if !a.iter().all(|v| v1.contains(v)) || a.len() == v1.len() {
            return Ok(false);
        }
    }
    let nbrs = g.neighbor_set(a)?;
    if !link_connected(g, a, &nbrs) {
        return Ok(false);
    }
    let mut used = VertexSet::new(g.n());
    for &v in a.iter().chain(&nbrs) {
        used.insert(v - 1);
    }
    let remainder: Vec<usize> = (1..=g.n()).filter(|&v| !used.contains(v - 1)).collect();
    if bipartition.is_some() {
        // acceptable: remainder must be connected with at least one edge
        if remainder.is_empty() {
            return Ok(false);
        }
        let h = g.induced(&remainder)?;
        Ok(h.edge_count() >= 1 && h.decompose().components.len() == 1)
    } else {
        // fundamental: remainder has no bipartite components
        if remainder.is_empty() {
            return Ok(true);
        }
        Ok(no_bipartite_components(&g.induced(&remainder)?))
    }
}

/// Is the bipartite graph G[A, N(A)] (only the A-to-N(A) edges of g)
/// connected?
fn link_connected(g: &Graph, a: &[usize], nbrs: &[usize]) -> bool {
    let verts: Vec<usize> = a.iter().chain(nbrs).copied().collect();
    if verts.len() <= 1 {
        return true;
    }
    let aset = VertexSet::from_iter(g.n(), a.iter().map(|&v| v - 1));
    let index: std::collections::HashMap<usize, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut seen = vec![false; verts.len()];
    seen[0] = true;
    let mut stack = vec![verts[0]];
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for u in g.neighbors(v) {
            // only cross edges between A and N(A) belong to the link
            if aset.contains(v - 1) == aset.contains(u - 1) {
                continue;
            }
            if let Some(&iu) = index.get(&u) {
                if !seen[iu] {
                    seen[iu] = true;
                    reached += 1;
                    stack.push(u);
                }
            }
        }
    }
    reached == verts.len()
}

fn require_connected(g: &Graph) -> Result<()> {
    g.require_no_isolated()?;
    if !g.is_connected() {
        return Err(Error::domain("facet analysis requires a connected graph"));
    }
    Ok(())
}

fn certificate(g: &Graph, kind: FacetKind) -> FacetCertificate {
    let n = g.n();
    let mut coeffs = vec![0i64; n];
    match &kind {
        FacetKind::Coordinate(i) => coeffs[i - 1] = 1,
        FacetKind::IndependentSet(a) => {
            for &v in a {
                coeffs[v - 1] = -1;
            }
            for v in g.neighbor_set(a).expect("non-empty A") {
                coeffs[v - 1] = 1;
            }
        }
    }
    let tight_edges = g
        .edges()
        .filter(|&(u, v)| coeffs[u - 1] + coeffs[v - 1] == 0)
        .collect();
    FacetCertificate {
        kind,
        coeffs,
        tight_edges,
    }
}

/// Enumerate all facets of P(G): coordinate certificates at vertices
/// passing `vertex_facet_test` plus independent-set certificates at
/// sets passing `set_facet_test`, deduplicated by tight edge set.
pub fn enumerate_facets(g: &Graph, opts: &FacetOptions) -> Result<FacetEnumeration> {
    require_connected(g)?;
    if g.edge_count() < 2 {
        return Err(Error::domain("enumerate_facets: need at least 2 edges"));
    }
    let dim = skeleton::dimension(g)?;
    if dim < 2 {
        return Err(Error::domain("enumerate_facets: need dimension >= 2"));
    }
    if g.n() > opts.max_n && !opts.override_cap {
        return Err(Error::resource(format!(
            "enumerate_facets: n = {} exceeds the cap {}; use the override",
            g.n(),
            opts.max_n
        )));
    }

    let mut certs: Vec<FacetCertificate> = Vec::new();
    for i in 1..=g.n() {
        if vertex_facet_test(g, i)? {
            certs.push(certificate(g, FacetKind::Coordinate(i)));
        }
    }

    // candidate pool for A: everything, or strictly inside V1 when bipartite
    let pool: Vec<usize> = match g.bipartition() {
        Some((v1, _)) => v1,
        None => (1..=g.n()).collect(),
    };
    let set_certs: Vec<FacetCertificate> = pool
        .par_iter()
        .enumerate()
        .map(|(idx, &first)| {
            let mut found = Vec::new();
            let mut a = vec![first];
            extend_independent(g, &pool, idx, &mut a, &mut found);
            found
        })
        .reduce(Vec::new, |mut acc, mut v| {
            acc.append(&mut v);
            acc
        });
    certs.extend(set_certs);

    // dedupe by tight vertex set; a facet may be cut by several
    // hyperplanes of the characterization
    let mut merge_notes = Vec::new();
    let mut seen: std::collections::HashMap<Vec<(usize, usize)>, usize> =
        std::collections::HashMap::new();
    let mut facets: Vec<FacetCertificate> = Vec::new();
    for c in certs {
        match seen.entry(c.tight_edges.clone()) {
            std::collections::hash_map::Entry::Occupied(e) => {
                merge_notes.push(format!(
                    "{:?} merged into {:?}: identical facet",
                    c.kind, facets[*e.get()].kind
                ));
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(facets.len());
                facets.push(c);
            }
        }
    }
    facets.sort_by(|a, b| kind_key(&a.kind).cmp(&kind_key(&b.kind)));
    Ok(FacetEnumeration {
        facets,
        merge_notes,
    })
}

fn kind_key(k: &FacetKind) -> (u8, Vec<usize>) {
    match k {
        FacetKind::Coordinate(i) => (0, vec![*i]),
        FacetKind::IndependentSet(a) => (1, a.clone()),
    }
}

/// DFS over independent sets in increasing vertex order. Every set is
/// tested; a branch is abandoned when the bipartite link has frozen
/// apart (two pieces that no future vertex can reconnect).
fn extend_independent(
    g: &Graph,
    pool: &[usize],
    from: usize,
    a: &mut Vec<usize>,
    found: &mut Vec<FacetCertificate>,
) {
    if set_facet_test(g, a).expect("connected graph, non-empty A") {
        let mut sorted = a.clone();
        sorted.sort_unstable();
        found.push(certificate(g, FacetKind::IndependentSet(sorted)));
    }
    if link_frozen_apart(g, a, pool, from + 1) {
        return;
    }
    for (j, &v) in pool.iter().enumerate().skip(from + 1) {
        if a.iter().all(|&u| !g.has_edge(u, v)) {
            a.push(v);
            extend_independent(g, pool, j, a, found);
            a.pop();
        }
    }
}

/// Prune test: the link G[A, N(A)] splits into pieces; a piece that no
/// remaining candidate vertex (or its neighborhood) can touch stays a
/// separate component in every extension of A, so two such pieces doom
/// the whole subtree.
fn link_frozen_apart(g: &Graph, a: &[usize], pool: &[usize], from: usize) -> bool {
    let nbrs = match g.neighbor_set(a) {
        Ok(n) => n,
        Err(_) => return false,
    };
    let pieces = link_pieces(g, a, &nbrs);
    if pieces.len() < 2 {
        return false;
    }
    // future A-vertices and the vertices they would pull into N(A)
    let mut future = VertexSet::new(g.n());
    for &v in pool.iter().skip(from) {
        if a.iter().all(|&u| !g.has_edge(u, v)) {
            future.insert(v - 1);
            future.union_with(g.adj0(v - 1));
        }
    }
    let mut frozen = 0;
    for piece in &pieces {
        let mergeable = piece.iter().any(|&v| {
            future.contains(v - 1) || g.adj0(v - 1).iter().any(|w| future.contains(w))
        });
        if !mergeable {
            frozen += 1;
        }
    }
    frozen >= 2
}

fn link_pieces(g: &Graph, a: &[usize], nbrs: &[usize]) -> Vec<Vec<usize>> {
    let verts: Vec<usize> = a.iter().chain(nbrs).copied().collect();
    let aset = VertexSet::from_iter(g.n(), a.iter().map(|&v| v - 1));
    let index: std::collections::HashMap<usize, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut comp = vec![usize::MAX; verts.len()];
    let mut pieces = Vec::new();
    for start in 0..verts.len() {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = pieces.len();
        let mut members = Vec::new();
        comp[start] = id;
        let mut stack = vec![verts[start]];
        members.push(verts[start]);
        while let Some(v) = stack.pop() {
            for u in g.neighbors(v) {
                if aset.contains(v - 1) == aset.contains(u - 1) {
                    continue;
                }
                if let Some(&iu) = index.get(&u) {
                    if comp[iu] == usize::MAX {
                        comp[iu] = id;
                        members.push(u);
                        stack.push(u);
                    }
                }
            }
        }
        pieces.push(members);
    }
    pieces
}

/// Facet-count bound checks, plus the windmill comparison when the
/// graph is a W(4,k).
pub fn facet_count_bounds_check(g: &Graph, opts: &FacetOptions) -> Result<FacetBounds> {
    let dim = skeleton::dimension(g)?;
    let count = enumerate_facets(g, opts)?.facets.len();
    let upper = (1u128 << dim) + dim as u128;
    let lower = 4u128.pow((dim / 3) as u32);
    Ok(FacetBounds {
        count,
        dim,
        upper_ok: (count as u128) <= upper,
        windmill_lower: (count as u128) > lower,
        windmill_claimed: windmill_k(g).map(|k| 4u128.pow(k as u32) + 3 * k as u128 - 1),
    })
}

/// Detect whether g is the windmill W(4,k) in standard labeling.
pub fn windmill_k(g: &Graph) -> Option<usize> {
    let n = g.n();
    if n < 4 || (n - 1) % 3 != 0 {
        return None;
    }
    let k = (n - 1) / 3;
    crate::graph::windmill(k).ok().filter(|w| w == g).map(|_| k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, windmill, Graph};

    #[test]
    fn regular_vertices() {
        let k4 = complete(4).unwrap();
        assert!(vertex_facet_test(&k4, 1).unwrap());
        // paw graph: triangle 1-2-3 with pendant 4 on vertex 1;
        // deleting 1 isolates 4 (a bipartite component)
        let paw = Graph::build(4, &[(1, 2), (2, 3), (3, 1), (1, 4)]).unwrap();
        assert!(!vertex_facet_test(&paw, 1).unwrap());
        assert!(vertex_facet_test(&paw, 4).unwrap());
    }

    #[test]
    fn ordinary_vertices() {
        let k33 = complete_bipartite(3, 3).unwrap();
        assert!(vertex_facet_test(&k33, 1).unwrap());
    }

    #[test]
    fn fundamental_sets() {
        let k4 = complete(4).unwrap();
        assert!(set_facet_test(&k4, &[4]).unwrap());
        assert!(!set_facet_test(&k4, &[1, 2]).unwrap()); // not independent
        let w2 = windmill(2).unwrap();
        assert!(set_facet_test(&w2, &[3, 6]).unwrap());
        assert!(set_facet_test(&w2, &[7]).unwrap());
    }

    #[test]
    fn acceptable_sets() {
        let k33 = complete_bipartite(3, 3).unwrap();
        // remainder {3} has no edge
        assert!(!set_facet_test(&k33, &[1, 2]).unwrap());
        // A = V1 is excluded outright
        assert!(!set_facet_test(&k33, &[1, 2, 3]).unwrap());
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::build(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(vertex_facet_test(&g, 1).is_err());
        assert!(enumerate_facets(&g, &FacetOptions::default()).is_err());
    }

    #[test]
    fn facet_counts() {
        let opts = FacetOptions::default();
        assert_eq!(
            enumerate_facets(&complete(4).unwrap(), &opts).unwrap().facets.len(),
            8
        );
        assert_eq!(
            enumerate_facets(&complete(6).unwrap(), &opts).unwrap().facets.len(),
            12
        );
        assert_eq!(
            enumerate_facets(&complete_bipartite(3, 3).unwrap(), &opts)
                .unwrap()
                .facets
                .len(),
            6
        );
    }

    #[test]
    fn k33_facets_all_coordinate() {
        let out = enumerate_facets(&complete_bipartite(3, 3).unwrap(), &FacetOptions::default())
            .unwrap();
        assert!(out
            .facets
            .iter()
            .all(|f| matches!(f.kind, FacetKind::Coordinate(_))));
    }

    #[test]
    fn certificates_are_valid_inequalities() {
        let g = windmill(2).unwrap();
        let out = enumerate_facets(&g, &FacetOptions::default()).unwrap();
        for f in &out.facets {
            for (u, v) in g.edges() {
                assert!(f.coeffs[u - 1] + f.coeffs[v - 1] >= 0);
            }
        }
    }

    #[test]
    fn bounds_and_windmill_detection() {
        let b = facet_count_bounds_check(&windmill(2).unwrap(), &FacetOptions::default()).unwrap();
        assert_eq!(b.dim, 6);
        assert!(b.upper_ok);
        assert!(b.windmill_lower); // count > 16
        assert_eq!(b.windmill_claimed, Some(21)); // 4^2 + 6 - 1
        assert_eq!(windmill_k(&complete(4).unwrap()), Some(1));
        assert_eq!(windmill_k(&complete(5).unwrap()), None);
    }

    #[test]
    fn cap_enforced() {
        let g = crate::graph::cycle(25).unwrap();
        assert!(matches!(
            enumerate_facets(&g, &FacetOptions::default()),
            Err(Error::Resource(_))
        ));
        let opts = FacetOptions {
            max_n: 24,
            override_cap: true,
        };
        assert!(enumerate_facets(&g, &opts).is_ok());
    }
}
