//! Core graph representation, generators and subgraph-counting kernels.
//!
//! Vertices are labeled 1..n in the public API; internally everything
//! is 0-based. Graphs are immutable after construction.

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// A simple undirected graph on vertices 1..n (no loops, no multi-edges).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// 0-based, normalized u < v, sorted lexicographically.
    edges: Vec<(usize, usize)>,
    /// Per-vertex neighbor bitsets, 0-based.
    adj: Vec<VertexSet>,
}

/// Connected components with per-component bipartiteness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    /// Vertex sets (1-based, sorted) partitioning [n].
    pub components: Vec<Vec<usize>>,
    pub bipartite_flags: Vec<bool>,
    /// Number of bipartite components.
    pub c0: usize,
}

impl Graph {
    /// Build a graph from 1-based vertex pairs. Duplicate pairs collapse
    /// to one edge and pair order is normalized.
    pub fn build(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::validation("vertex count must be positive"));
        }
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a == b {
                return Err(Error::validation(format!("loop at vertex {a}")));
            }
            if a < 1 || a > n || b < 1 || b > n {
                return Err(Error::validation(format!(
                    "edge ({a},{b}) out of range 1..={n}"
                )));
            }
            let (u, v) = if a < b { (a - 1, b - 1) } else { (b - 1, a - 1) };
            edges.push((u, v));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in &edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as normalized 1-based pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u + 1, v + 1))
    }

    pub(crate) fn adj0(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    fn check_vertex(&self, v: usize) -> Result<usize> {
        if v < 1 || v > self.n {
            Err(Error::validation(format!(
                "vertex {v} out of range 1..={}",
                self.n
            )))
        } else {
            Ok(v - 1)
        }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        if a == b || a < 1 || a > self.n || b < 1 || b > self.n {
            return false;
        }
        self.adj[a - 1].contains(b - 1)
    }

    pub fn degree(&self, v: usize) -> usize {
        assert!(v >= 1 && v <= self.n, "vertex out of range");
        self.adj[v - 1].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.adj[v].len()).min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        assert!(v >= 1 && v <= self.n, "vertex out of range");
        self.adj[v - 1].iter().map(|u| u + 1).collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|v| self.adj[v].is_empty())
    }

    pub(crate) fn require_no_isolated(&self) -> Result<()> {
        if self.has_isolated_vertex() {
            Err(Error::domain("graph has an isolated vertex"))
        } else {
            Ok(())
        }
    }

    /// BFS partition into connected components, with a 2-coloring
    /// attempt per component to set the bipartite flag. An isolated
    /// vertex counts as a bipartite component.
    pub fn decompose(&self) -> ComponentDecomposition {
        let mut color: Vec<i8> = vec![-1; self.n];
        let mut components = Vec::new();
        let mut bipartite_flags = Vec::new();
        for start in 0..self.n {
            if color[start] >= 0 {
                continue;
            }
            let mut comp = vec![start];
            let mut bipartite = true;
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u].iter() {
                    if color[w] < 0 {
                        color[w] = 1 - color[u];
                        comp.push(w);
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        bipartite = false;
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp.iter().map(|&v| v + 1).collect());
            bipartite_flags.push(bipartite);
        }
        let c0 = bipartite_flags.iter().filter(|&&b| b).count();
        ComponentDecomposition {
            components,
            bipartite_flags,
            c0,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.decompose().components.len() == 1
    }

    /// For a connected bipartite graph, the bipartition with part 1
    /// chosen to contain the smallest-labeled vertex. `None` when the
    /// graph is not connected bipartite.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let dec = self.decompose();
        if dec.components.len() != 1 || !dec.bipartite_flags[0] {
            return None;
        }
        let mut color: Vec<i8> = vec![-1; self.n];
        color[0] = 0;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for w in self.adj[u].iter() {
                if color[w] < 0 {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                }
            }
        }
        let v1 = (0..self.n).filter(|&v| color[v] == 0).map(|v| v + 1).collect();
        let v2 = (0..self.n).filter(|&v| color[v] != 0).map(|v| v + 1).collect();
        Some((v1, v2))
    }

    /// Number of subgraphs isomorphic to C4 (unlabeled copies).
    ///
    /// For each vertex pair with m common neighbors there are C(m,2)
    /// 4-cycles through that pair as a diagonal; each 4-cycle has two
    /// diagonals, so the sum double-counts.
    pub fn count_c4(&self) -> u64 {
        let mut total: u64 = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                let m = self.adj[u].intersection_size(&self.adj[v]) as u64;
                total += m * m.saturating_sub(1) / 2;
            }
        }
        total / 2
    }

    /// Number of 4-cliques.
    pub fn count_k4(&self) -> u64 {
        let mut total: u64 = 0;
        for &(u, v) in &self.edges {
            let mut common = self.adj[u].clone();
            common.intersect_with(&self.adj[v]);
            for w in common.iter() {
                total += self.adj[w].intersection_size(&common) as u64;
            }
        }
        // each K4 contributes one ordered pair per base edge: 6 * 2
        total / 12
    }

    /// N(X): vertices outside X adjacent to some member of X.
    pub fn neighbor_set(&self, x: &[usize]) -> Result<Vec<usize>> {
        if x.is_empty() {
            return Err(Error::validation("neighbor_set: empty vertex set"));
        }
        let mut inset = VertexSet::new(self.n);
        for &v in x {
            inset.insert(self.check_vertex(v)?);
        }
        let mut nbrs = VertexSet::new(self.n);
        for v in inset.iter() {
            nbrs.union_with(&self.adj[v]);
        }
        nbrs.difference_with(&inset);
        Ok(nbrs.iter().map(|v| v + 1).collect())
    }

    /// True iff no edge has both ends in A.
    pub fn is_independent(&self, a: &[usize]) -> Result<bool> {
        if a.is_empty() {
            return Err(Error::validation("is_independent: empty vertex set"));
        }
        let mut set = VertexSet::new(self.n);
        for &v in a {
            set.insert(self.check_vertex(v)?);
        }
        for v in set.iter() {
            if !self.adj[v].is_disjoint(&set) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// e_G(S,T): ordered pairs (s,t) with s in S, t in T, st an edge.
    pub fn edges_between(&self, s: &[usize], t: &[usize]) -> Result<u64> {
        let mut sset = VertexSet::new(self.n);
        for &v in s {
            sset.insert(self.check_vertex(v)?);
        }
        let mut tset = VertexSet::new(self.n);
        for &v in t {
            tset.insert(self.check_vertex(v)?);
        }
        let mut count = 0u64;
        for v in sset.iter() {
            count += self.adj[v].intersection_size(&tset) as u64;
        }
        Ok(count)
    }

    /// Induced subgraph on the given 1-based vertices, relabeled 1..m
    /// in increasing label order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut vs: Vec<usize> = Vec::with_capacity(vertices.len());
        for &v in vertices {
            vs.push(self.check_vertex(v)?);
        }
        vs.sort_unstable();
        vs.dedup();
        if vs.is_empty() {
            return Err(Error::validation("induced: empty vertex set"));
        }
        let index: std::collections::HashMap<usize, usize> =
            vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut pairs = Vec::new();
        for &(u, v) in &self.edges {
            if let (Some(&iu), Some(&iv)) = (index.get(&u), index.get(&v)) {
                pairs.push((iu + 1, iv + 1));
            }
        }
        Graph::build(vs.len(), &pairs)
    }

    /// Induced subgraph on the non-isolated vertices; `None` if the
    /// graph has no edges at all.
    pub fn without_isolated(&self) -> Option<Graph> {
        if self.edges.is_empty() {
            return None;
        }
        let support: Vec<usize> = (0..self.n)
            .filter(|&v| !self.adj[v].is_empty())
            .map(|v| v + 1)
            .collect();
        Some(self.induced(&support).expect("support is non-empty"))
    }
}

// ---------------------------------------------------------------------------
// Generators

pub fn complete(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::validation("complete: need n >= 2"));
    }
    let pairs: Vec<_> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    Graph::build(n, &pairs)
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(Error::validation("complete_bipartite: need a,b >= 1"));
    }
    let pairs: Vec<_> = (1..=a)
        .flat_map(|u| (a + 1..=a + b).map(move |v| (u, v)))
        .collect();
    Graph::build(a + b, &pairs)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::validation("cycle: need n >= 3"));
    }
    let mut pairs: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
    pairs.push((n, 1));
    Graph::build(n, &pairs)
}

/// The windmill W(4,k): hub 3k+1 joined to all of [3k], plus k disjoint
/// triangles {3i-2, 3i-1, 3i}.
pub fn windmill(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::validation("windmill: need k >= 1"));
    }
    let n = 3 * k + 1;
    let mut pairs: Vec<_> = (1..=3 * k).map(|j| (j, n)).collect();
    for i in 1..=k {
        pairs.push((3 * i - 2, 3 * i - 1));
        pairs.push((3 * i - 2, 3 * i));
        pairs.push((3 * i - 1, 3 * i));
    }
    Graph::build(n, &pairs)
}

/// G(n,p) with the deterministic seeded generator: each of the C(n,2)
/// pairs, in lexicographic order, is included independently with
/// probability p. Identical seeds produce identical graphs.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::validation("gnp: need n >= 1"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::validation("gnp: p must lie in [0,1]"));
    }
    let mut rng = SplitMix64::new(seed);
    let mut pairs = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.next_f64() < p {
                pairs.push((u, v));
            }
        }
    }
    Graph::build(n, &pairs)
}

// ---------------------------------------------------------------------------
// Edge-list text format

/// Parse the edge-list text format: one edge per line as two 1-based
/// integers, '#' comment lines, and an optional header "n <count>"
/// fixing the vertex count (otherwise n = max label).
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut saw_data = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if !saw_data && fields.len() == 2 && fields[0] == "n" {
            n = Some(fields[1].parse().map_err(|_| {
                Error::validation(format!("line {}: bad vertex count", lineno + 1))
            })?);
            saw_data = true;
            continue;
        }
        saw_data = true;
        if fields.len() != 2 {
            return Err(Error::validation(format!(
                "line {}: expected two vertex labels",
                lineno + 1
            )));
        }
        let u: usize = fields[0]
            .parse()
            .map_err(|_| Error::validation(format!("line {}: bad label", lineno + 1)))?;
        let v: usize = fields[1]
            .parse()
            .map_err(|_| Error::validation(format!("line {}: bad label", lineno + 1)))?;
        pairs.push((u, v));
    }
    let n = match n {
        Some(n) => n,
        None => pairs
            .iter()
            .map(|&(u, v)| u.max(v))
            .max()
            .ok_or_else(|| Error::validation("empty edge list without an 'n' header"))?,
    };
    Graph::build(n, &pairs)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
