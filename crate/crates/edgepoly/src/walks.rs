//! Walk diagnostics: non-returning walk counts with the Moore-type
//! lower bound, k-path counting, the cross-edge discrepancy statistic
//! and the Turan-type upper bound on edge counts.

use num::BigRational;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lp::{rat_int, Rat};

/// Non-returning walk statistics at length k.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkStats {
    pub k: usize,
    /// Count of non-returning walks of length k.
    pub total: u128,
    /// Average per starting vertex, total / n.
    pub nu: BigRational,
    /// d(d-1)^{k-1} with d the average degree; only defined when the
    /// minimum degree is at least 2.
    pub moore_bound: Option<BigRational>,
    pub bound_holds: Option<bool>,
}

/// Count walks v0 e0 v1 ... e_{k-1} v_k with e_i != e_{i+1}, by dynamic
/// programming over (current vertex, arrival edge) states.
pub fn non_returning_walks(g: &Graph, k: usize) -> Result<WalkStats> {
    if k < 1 {
        return Err(Error::validation("non_returning_walks: need k >= 1"));
    }
    // directed-edge states: (u -> v) means we arrived at v along {u,v}
    let arcs: Vec<(usize, usize)> = g
        .edges()
        .flat_map(|(u, v)| [(u, v), (v, u)])
        .collect();
    let mut count: Vec<u128> = vec![1; arcs.len()];
    for _ in 1..k {
        // total inflow per vertex, then subtract the immediate back-step
        let mut at_vertex: Vec<u128> = vec![0; g.n() + 1];
        for (i, &(_, v)) in arcs.iter().enumerate() {
            at_vertex[v] += count[i];
        }
        let mut next = vec![0u128; arcs.len()];
        for (i, &(u, v)) in arcs.iter().enumerate() {
            // walks ending at u that may continue along {u,v}: all walks
            // into u except those that arrived along {u,v} itself
            let back = arcs.iter().position(|&a| a == (v, u)).unwrap();
            next[i] = at_vertex[u] - count[back];
        }
        count = next;
    }
    let total: u128 = count.iter().sum();
    let nu = Rat::new(total.into(), (g.n() as u64).into());
    let (moore_bound, bound_holds) = if g.min_degree() >= 2 {
        let d = Rat::new((2 * g.edge_count() as u64).into(), (g.n() as u64).into());
        let mut bound = d.clone();
        let dm1 = d - rat_int(1);
        for _ in 1..k {
            bound *= &dm1;
        }
        let holds = nu >= bound;
        (Some(bound), Some(holds))
    } else {
        (None, None)
    };
    Ok(WalkStats {
        k,
        total,
        nu,
        moore_bound,
        bound_holds,
    })
}

/// Number of simple paths of length exactly k from u to v.
pub fn count_k_paths(g: &Graph, u: usize, v: usize, k: usize) -> Result<u64> {
    for &x in &[u, v] {
        if x < 1 || x > g.n() {
            return Err(Error::validation(format!("vertex {x} out of range")));
        }
    }
    if k >= 1 && u == v {
        return Err(Error::validation("count_k_paths: need u != v for k >= 1"));
    }
    if k == 0 {
        return Ok(u64::from(u == v));
    }
    let mut visited = vec![false; g.n() + 1];
    visited[u] = true;
    Ok(path_dfs(g, u, v, k, &mut visited))
}

fn path_dfs(g: &Graph, cur: usize, target: usize, left: usize, visited: &mut Vec<bool>) -> u64 {
    if left == 0 {
        return u64::from(cur == target);
    }
    let mut total = 0;
    for w in g.neighbors(cur) {
        if w == target && left == 1 {
            total += 1;
        } else if !visited[w] && w != target {
            visited[w] = true;
            total += path_dfs(g, w, target, left - 1, visited);
            visited[w] = false;
        }
    }
    total
}

/// e_G(S,T) - (d/n) |S| |T| with d the average degree, exactly.
pub fn discrepancy(g: &Graph, s: &[usize], t: &[usize]) -> Result<BigRational> {
    let cross = g.edges_between(s, t)?;
    let mut sset = s.to_vec();
    sset.sort_unstable();
    sset.dedup();
    let mut tset = t.to_vec();
    tset.sort_unstable();
    tset.dedup();
    let d_over_n = Rat::new(
        (2 * g.edge_count() as u64).into(),
        ((g.n() * g.n()) as u64).into(),
    );
    let expected = d_over_n * rat_int((sset.len() * tset.len()) as i64);
    Ok(rat_int(cross as i64) - expected)
}

/// The Turan-type upper bound (1/2) n^{1+1/k} + ((k-1)/2k) n + n^{1-1/k}
/// on the edge count of graphs with no cycle of length <= k and no even
/// cycle of length <= 2k. Floating point by nature of the exponents.
pub fn turan_bound(n: usize, k: usize) -> Result<f64> {
    if n < 1 {
        return Err(Error::validation("turan_bound: need n >= 1"));
    }
    if k < 2 {
        return Err(Error::validation("turan_bound: need k >= 2"));
    }
    let nf = n as f64;
    let kf = k as f64;
    Ok(0.5 * nf.powf(1.0 + 1.0 / kf) + (kf - 1.0) / (2.0 * kf) * nf + nf.powf(1.0 - 1.0 / kf))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, Graph};
    use num::Zero;

    fn petersen() -> Graph {
        Graph::build(
            10,
            &[
                (1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
                (1, 6), (2, 7), (3, 8), (4, 9), (5, 10),
                (6, 8), (8, 10), (10, 7), (7, 9), (9, 6),
            ],
        )
        .unwrap()
    }

    #[test]
    fn walks_on_cycles() {
        let s = non_returning_walks(&cycle(5).unwrap(), 3).unwrap();
        assert_eq!(s.total, 10);
        assert_eq!(s.nu, rat_int(2));
        assert_eq!(s.moore_bound, Some(rat_int(2)));
        assert_eq!(s.bound_holds, Some(true));
    }

    #[test]
    fn walks_on_petersen() {
        let s = non_returning_walks(&petersen(), 2).unwrap();
        assert_eq!(s.nu, rat_int(6)); // 3 * 2 for a cubic graph
    }

    #[test]
    fn walks_on_path() {
        let g = Graph::build(3, &[(1, 2), (2, 3)]).unwrap();
        let s = non_returning_walks(&g, 2).unwrap();
        assert_eq!(s.total, 2); // 1-2-3 and 3-2-1
        assert_eq!(s.nu, Rat::new(2.into(), 3.into()));
        assert!(s.moore_bound.is_none()); // min degree 1
    }

    #[test]
    fn path_counts() {
        assert_eq!(count_k_paths(&cycle(5).unwrap(), 1, 3, 2).unwrap(), 1);
        assert_eq!(count_k_paths(&complete(4).unwrap(), 1, 2, 2).unwrap(), 2);
        let p = petersen();
        for u in 1..=10 {
            for v in 1..=10 {
                if u != v {
                    assert!(count_k_paths(&p, u, v, 2).unwrap() <= 1);
                }
            }
        }
    }

    #[test]
    fn path_count_validation() {
        assert!(count_k_paths(&cycle(5).unwrap(), 1, 1, 2).is_err());
        assert!(count_k_paths(&cycle(5).unwrap(), 0, 2, 1).is_err());
    }

    #[test]
    fn discrepancy_values() {
        let g = petersen();
        let all: Vec<usize> = (1..=10).collect();
        assert_eq!(discrepancy(&g, &all, &all).unwrap(), Rat::zero());
        let k33 = crate::graph::complete_bipartite(3, 3).unwrap();
        assert_eq!(
            discrepancy(&k33, &[1, 2, 3], &[1, 2, 3]).unwrap(),
            Rat::new((-9).into(), 2.into())
        );
        // Petersen split outer/inner: e(S,T) = 5 spokes each way = 5
        // ordered... S={1..5}, T={6..10}: ordered pairs = 5
        let d = discrepancy(&g, &[1, 2, 3, 4, 5], &[6, 7, 8, 9, 10]).unwrap();
        // 5 - (3/10)*25 = -5/2
        assert_eq!(d, Rat::new((-5).into(), 2.into()));
    }

    #[test]
    fn turan_values() {
        assert_eq!(turan_bound(100, 2).unwrap(), 535.0);
        assert!(turan_bound(10, 2).unwrap() >= 15.0); // e(Petersen)
        assert!(turan_bound(14, 3).unwrap() >= 21.0); // e(Heawood)
        assert!(turan_bound(10, 1).is_err());
    }
}
