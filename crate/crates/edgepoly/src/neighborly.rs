//! k-neighborliness of P(G) via the forbidden-family characterization:
//! P(G) is k-neighborly iff G contains neither an even cycle on at most
//! 2k vertices nor two odd cycles joined by a (possibly trivial) path
//! on at most 2k vertices in total.

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A concrete forbidden subgraph found in g.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForbiddenWitness {
    /// An even cycle, given as its vertex sequence.
    EvenCycle(Vec<usize>),
    /// Two odd cycles sharing at most one vertex, joined by a path.
    /// `path` runs from a vertex of `cycle_a` to a vertex of `cycle_b`
    /// (a single shared vertex when the cycles touch).
    TwoOddCycles {
        cycle_a: Vec<usize>,
        cycle_b: Vec<usize>,
        path: Vec<usize>,
    },
}

/// Verdict of `max_neighborliness`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Neighborliness {
    /// P(G) is a simplex: every vertex subset is a face.
    Simplex,
    /// Largest k for which P(G) is k-neighborly (1 when even
    /// 2-neighborliness fails).
    K(usize),
}

impl ForbiddenWitness {
    /// Number of vertices of the witness subgraph.
    pub fn total_size(&self) -> usize {
        match self {
            ForbiddenWitness::EvenCycle(c) => c.len(),
            ForbiddenWitness::TwoOddCycles {
                cycle_a,
                cycle_b,
                path,
            } => {
                if path.len() == 1 {
                    cycle_a.len() + cycle_b.len() - 1
                } else {
                    cycle_a.len() + cycle_b.len() + path.len() - 2
                }
            }
        }
    }

    /// Check the witness against its own invariants: it must be a
    /// genuine subgraph of g with the right parities and size budget.
    pub fn validate(&self, g: &Graph, k: usize) -> Result<()> {
        let check_cycle = |c: &[usize]| -> Result<()> {
            if c.len() < 3 {
                return Err(Error::validation("witness cycle too short"));
            }
            let mut seen = std::collections::HashSet::new();
            for &v in c {
                if !seen.insert(v) {
                    return Err(Error::validation("witness cycle repeats a vertex"));
                }
            }
            for i in 0..c.len() {
                let (u, v) = (c[i], c[(i + 1) % c.len()]);
                if !g.has_edge(u, v) {
                    return Err(Error::validation(format!(
                        "witness edge ({u},{v}) missing from graph"
                    )));
                }
            }
            Ok(())
        };
        match self {
            ForbiddenWitness::EvenCycle(c) => {
                check_cycle(c)?;
                if c.len() % 2 != 0 || c.len() < 4 {
                    return Err(Error::validation("even-cycle witness has odd length"));
                }
            }
            ForbiddenWitness::TwoOddCycles {
                cycle_a,
                cycle_b,
                path,
            } => {
                check_cycle(cycle_a)?;
                check_cycle(cycle_b)?;
                if cycle_a.len() % 2 == 0 || cycle_b.len() % 2 == 0 {
                    return Err(Error::validation("odd-cycle witness has even length"));
                }
                let sa: std::collections::HashSet<_> = cycle_a.iter().copied().collect();
                let sb: std::collections::HashSet<_> = cycle_b.iter().copied().collect();
                let shared = sa.intersection(&sb).count();
                if shared > 1 {
                    return Err(Error::validation("cycles share more than one vertex"));
                }
                if path.is_empty() {
                    return Err(Error::validation("witness path is empty"));
                }
                if path.len() == 1 {
                    if shared != 1 || !sa.contains(&path[0]) || !sb.contains(&path[0]) {
                        return Err(Error::validation("trivial path must be the shared vertex"));
                    }
                } else {
                    if shared != 0 {
                        return Err(Error::validation("joined cycles must be disjoint"));
                    }
                    if !sa.contains(&path[0]) || !sb.contains(path.last().unwrap()) {
                        return Err(Error::validation("path endpoints must lie on the cycles"));
                    }
                    for w in path.windows(2) {
                        if !g.has_edge(w[0], w[1]) {
                            return Err(Error::validation("path edge missing from graph"));
                        }
                    }
                    for &v in &path[1..path.len() - 1] {
                        if sa.contains(&v) || sb.contains(&v) {
                            return Err(Error::validation("path interior touches a cycle"));
                        }
                    }
                }
            }
        }
        if self.total_size() > 2 * k {
            return Err(Error::validation("witness exceeds the 2k vertex budget"));
        }
        Ok(())
    }
}

/// Is P(G) a simplex? True iff g has no even cycle and each component
/// contains at most one cycle; checked per component by counting edges
/// and peeling leaves to expose the unique cycle.
pub fn is_simplex(g: &Graph) -> Result<bool> {
    g.require_no_isolated()?;
    for comp in g.decompose().components {
        let h = g.induced(&comp)?;
        if h.edge_count() > h.n() {
            return Ok(false); // at least two independent cycles
        }
        if h.edge_count() == h.n() {
            // unicyclic: peel degree-1 vertices, the remainder is the cycle
            let mut deg: Vec<usize> = (1..=h.n()).map(|v| h.degree(v)).collect();
            let mut alive = vec![true; h.n()];
            let mut queue: Vec<usize> = (0..h.n()).filter(|&v| deg[v] == 1).collect();
            while let Some(v) = queue.pop() {
                alive[v] = false;
                for u in h.neighbors(v + 1) {
                    let u = u - 1;
                    if alive[u] {
                        deg[u] -= 1;
                        if deg[u] == 1 {
                            queue.push(u);
                        }
                    }
                }
            }
            let cycle_len = alive.iter().filter(|&&a| a).count();
            if cycle_len % 2 == 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All simple cycles of length at most `max_len`, as canonical vertex
/// sequences (smallest vertex first, smaller neighbor second), sorted
/// by length then lexicographically.
fn enumerate_cycles(g: &Graph, max_len: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut cycles = Vec::new();
    if max_len < 3 {
        return cycles;
    }
    let mut path: Vec<usize> = Vec::new();
    let mut on_path = VertexSet::new(n);
    for s in 0..n {
        path.push(s);
        on_path.insert(s);
        dfs_cycles(g, s, max_len, &mut path, &mut on_path, &mut cycles);
        on_path.remove(s);
        path.pop();
    }
    cycles.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    cycles
}

fn dfs_cycles(
    g: &Graph,
    start: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut VertexSet,
    out: &mut Vec<Vec<usize>>,
) {
    let cur = *path.last().unwrap();
    for w in g.adj0(cur).iter() {
        if w == start && path.len() >= 3 {
            // canonical direction: second vertex below last
            if path[1] < path[path.len() - 1] {
                out.push(path.iter().map(|&v| v + 1).collect());
            }
        } else if w > start && !on_path.contains(w) && path.len() < max_len {
            path.push(w);
            on_path.insert(w);
            dfs_cycles(g, start, max_len, path, on_path, out);
            on_path.remove(w);
            path.pop();
        }
    }
}

/// Shortest path from a vertex of `from` to a vertex of `to` whose
/// interior avoids both sets; vertices 1-based in the result.
fn connecting_path(g: &Graph, from: &[usize], to: &[usize]) -> Option<Vec<usize>> {
    let n = g.n();
    let fset = VertexSet::from_iter(n, from.iter().map(|&v| v - 1));
    let tset = VertexSet::from_iter(n, to.iter().map(|&v| v - 1));
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut visited = fset.clone();
    let mut queue: std::collections::VecDeque<usize> =
        from.iter().map(|&v| v - 1).collect();
    while let Some(u) = queue.pop_front() {
        for w in g.adj0(u).iter() {
            if tset.contains(w) {
                let mut path = vec![w + 1, u + 1];
                let mut cur = u;
                while let Some(p) = parent[cur] {
                    path.push(p + 1);
                    cur = p;
                }
                path.reverse();
                return Some(path);
            }
            if !visited.contains(w) && !fset.contains(w) {
                visited.insert(w);
                parent[w] = Some(u);
                queue.push_back(w);
            }
        }
    }
    None
}

/// Search g for a member of the forbidden family F_k: first the
/// shortest even cycle of length <= 2k, then the best pair of short odd
/// cycles sharing at most one vertex within the 2k vertex budget.
pub fn find_forbidden(g: &Graph, k: usize) -> Result<Option<ForbiddenWitness>> {
    if k < 2 {
        return Err(Error::validation("find_forbidden: need k >= 2"));
    }
    let budget = 2 * k;
    let cycles = enumerate_cycles(g, budget.min(g.n()));
    if let Some(even) = cycles.iter().find(|c| c.len() % 2 == 0) {
        return Ok(Some(ForbiddenWitness::EvenCycle(even.clone())));
    }
    let odd: Vec<&Vec<usize>> = cycles
        .iter()
        .filter(|c| c.len() % 2 == 1 && c.len() + 3 <= budget + 1)
        .collect();
    let mut best: Option<ForbiddenWitness> = None;
    let mut best_total = usize::MAX;
    for (i, ca) in odd.iter().enumerate() {
        for cb in odd.iter().skip(i + 1) {
            let sa: std::collections::HashSet<_> = ca.iter().copied().collect();
            let shared: Vec<usize> = cb.iter().copied().filter(|v| sa.contains(v)).collect();
            let witness = match shared.len() {
                0 => {
                    let Some(path) = connecting_path(g, ca, cb) else {
                        continue;
                    };
                    ForbiddenWitness::TwoOddCycles {
                        cycle_a: (*ca).clone(),
                        cycle_b: (*cb).clone(),
                        path,
                    }
                }
                1 => ForbiddenWitness::TwoOddCycles {
                    cycle_a: (*ca).clone(),
                    cycle_b: (*cb).clone(),
                    path: vec![shared[0]],
                },
                _ => continue,
            };
            let total = witness.total_size();
            if total <= budget && total < best_total {
                best_total = total;
                best = Some(witness);
            }
        }
    }
    Ok(best)
}

/// Theorem-level verdict: P(G) is k-neighborly iff G is F_k-free.
/// Stated only for graphs with at least k edges.
pub fn is_k_neighborly(g: &Graph, k: usize) -> Result<bool> {
    g.require_no_isolated()?;
    if g.edge_count() < k {
        return Err(Error::domain(format!(
            "is_k_neighborly: the characterization requires e(G) >= k \
             (e = {}, k = {k})",
            g.edge_count()
        )));
    }
    Ok(find_forbidden(g, k)?.is_none())
}

/// Largest k with P(G) k-neighborly, or the simplex sentinel.
pub fn max_neighborliness(g: &Graph) -> Result<Neighborliness> {
    g.require_no_isolated()?;
    if is_simplex(g)? {
        return Ok(Neighborliness::Simplex);
    }
    // a non-simplex graph always contains a witness for some k <= n
    for k in 2..=g.n() + 2 {
        if find_forbidden(g, k)?.is_some() {
            return Ok(Neighborliness::K(k - 1));
        }
    }
    unreachable!("non-simplex graph must contain a forbidden subgraph");
}
