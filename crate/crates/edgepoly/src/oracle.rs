//! Exact-geometry ground truth for the combinatorial formulas.
//!
//! The oracle works directly with the polytope's rational vertex
//! coordinates: dimension by Gaussian elimination, face decisions by
//! exact LP feasibility, facets by brute-force hyperplane enumeration.
//! It is deliberately simple and slow.

use num::{BigRational, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lp::{self, rat_int, Rat};

/// A point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoint {
    pub coords: Vec<BigRational>,
}

/// A supporting hyperplane `normal . x >= offset`, tight exactly on
/// `tight_set` (indices into the input point list).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: Vec<BigRational>,
    pub offset: BigRational,
    pub tight_set: Vec<usize>,
}

/// Caps for the brute-force facet enumeration.
#[derive(Debug, Clone)]
pub struct OracleOptions {
    pub max_points: usize,
    pub max_dim: usize,
    pub override_caps: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            max_points: 16,
            max_dim: 8,
            override_caps: false,
        }
    }
}

/// One 0/1 point e_i + e_j per edge, in lexicographic edge order.
pub fn polytope_vertices(g: &Graph) -> Result<Vec<RationalPoint>> {
    g.require_no_isolated()?;
    Ok(g.edges()
        .map(|(u, v)| {
            let mut coords = vec![Rat::zero(); g.n()];
            coords[u - 1] = rat_int(1);
            coords[v - 1] = rat_int(1);
            RationalPoint { coords }
        })
        .collect())
}

/// Dimension of the affine hull, by exact elimination on difference
/// vectors.
pub fn affine_dim(points: &[RationalPoint]) -> Result<usize> {
    if points.is_empty() {
        return Err(Error::validation("affine_dim: empty point list"));
    }
    let base = &points[0].coords;
    let rows: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|p| {
            p.coords
                .iter()
                .zip(base)
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    Ok(lp::rank(rows))
}

/// Is the set of polytope vertices indexed by the edges `u` the vertex
/// set of a face of P(G)? Decided by the separation criterion
/// "aff(U) does not meet conv(V \ U)", as an exact LP feasibility
/// question.
pub fn is_face(g: &Graph, u: &[(usize, usize)]) -> Result<bool> {
    if u.is_empty() {
        return Err(Error::validation("is_face: empty edge set"));
    }
    let all: Vec<(usize, usize)> = g.edges().collect();
    let mut sel = vec![false; all.len()];
    for &(a, b) in u {
        let key = if a < b { (a, b) } else { (b, a) };
        let idx = all
            .iter()
            .position(|&e| e == key)
            .ok_or_else(|| Error::validation(format!("edge ({a},{b}) not in graph")))?;
        sel[idx] = true;
    }
    let points = polytope_vertices(g)?;
    let inside: Vec<&RationalPoint> = points
        .iter()
        .zip(&sel)
        .filter(|(_, &s)| s)
        .map(|(p, _)| p)
        .collect();
    let outside: Vec<&RationalPoint> = points
        .iter()
        .zip(&sel)
        .filter(|(_, &s)| !s)
        .map(|(p, _)| p)
        .collect();
    if outside.is_empty() {
        return Ok(true); // the improper face
    }
    Ok(!hulls_intersect(&inside, &outside, g.n()))
}

/// Does aff(inside) meet conv(outside)? Exact phase-1 simplex.
///
/// Free affine multipliers are split into positive and negative parts;
/// convex multipliers are plain nonnegative variables.
fn hulls_intersect(inside: &[&RationalPoint], outside: &[&RationalPoint], n: usize) -> bool {
    let nu = inside.len();
    let nw = outside.len();
    let ncols = 2 * nu + nw;
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(n + 2);
    for coord in 0..n {
        let mut row = vec![Rat::zero(); ncols];
        for (j, p) in inside.iter().enumerate() {
            row[2 * j] = p.coords[coord].clone();
            row[2 * j + 1] = -p.coords[coord].clone();
        }
        for (j, p) in outside.iter().enumerate() {
            row[2 * nu + j] = -p.coords[coord].clone();
        }
        a.push(row);
    }
    let mut affine_row = vec![Rat::zero(); ncols];
    for j in 0..nu {
        affine_row[2 * j] = rat_int(1);
        affine_row[2 * j + 1] = rat_int(-1);
    }
    a.push(affine_row);
    let mut convex_row = vec![Rat::zero(); ncols];
    for j in 0..nw {
        convex_row[2 * nu + j] = rat_int(1);
    }
    a.push(convex_row);
    let mut b = vec![Rat::zero(); n];
    b.push(rat_int(1));
    b.push(rat_int(1));
    lp::feasible(&a, &b)
}

/// All facets of conv(points) by enumerating d-subsets of points and
/// keeping the spanning hyperplanes with all points weakly on one side.
pub fn brute_facets(points: &[RationalPoint], opts: &OracleOptions) -> Result<Vec<Hyperplane>> {
    let d = affine_dim(points)?;
    let m = points.len();
    if m < d + 1 {
        return Err(Error::validation(
            "brute_facets: need at least dim+1 points",
        ));
    }
    if !opts.override_caps && (m > opts.max_points || d > opts.max_dim) {
        return Err(Error::resource(format!(
            "brute_facets: {m} points / dim {d} exceeds caps ({} points, dim {}); use the override",
            opts.max_points, opts.max_dim
        )));
    }
    if d == 0 {
        return Ok(Vec::new());
    }
    let n = points[0].coords.len();
    // The polytope is degenerate in R^n; pick d coordinates that form a
    // basis of the direction space and work inside that projection.
    let base = &points[0].coords;
    let rows: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|p| p.coords.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    let pivots = lp::pivot_columns(rows);
    debug_assert_eq!(pivots.len(), d);
    let projected: Vec<Vec<Rat>> = points
        .iter()
        .map(|p| pivots.iter().map(|&c| p.coords[c].clone()).collect())
        .collect();

    let combos = combinations(m, d);
    let mut facets: Vec<(Vec<usize>, Vec<Rat>, Rat)> = combos
        .par_iter()
        .filter_map(|subset| {
            // hyperplane a.q = b through the subset: nullspace of [q | -1]
            let rows: Vec<Vec<Rat>> = subset
                .iter()
                .map(|&i| {
                    let mut r = projected[i].clone();
                    r.push(rat_int(-1));
                    r
                })
                .collect();
            let v = lp::nullspace_1d(&rows)?;
            let (a, b) = (&v[..d], v[d].clone());
            let mut any_pos = false;
            let mut any_neg = false;
            let mut tight = Vec::new();
            for (i, q) in projected.iter().enumerate() {
                let mut s = -b.clone();
                for (aj, qj) in a.iter().zip(q) {
                    s += aj * qj;
                }
                if s.is_zero() {
                    tight.push(i);
                } else if s.is_positive() {
                    any_pos = true;
                } else {
                    any_neg = true;
                }
                if any_pos && any_neg {
                    return None;
                }
            }
            let (a, b) = if any_neg {
                (a.iter().map(|x| -x.clone()).collect::<Vec<_>>(), -b)
            } else {
                (a.to_vec(), b)
            };
            Some((tight, a, b))
        })
        .collect();

    // dedupe by tight set
    facets.sort_by(|x, y| x.0.cmp(&y.0));
    facets.dedup_by(|x, y| x.0 == y.0);
    Ok(facets
        .into_iter()
        .map(|(tight, a, b)| {
            let mut normal = vec![Rat::zero(); n];
            for (j, &c) in pivots.iter().enumerate() {
                normal[c] = a[j].clone();
            }
            Hyperplane {
                normal,
                offset: b,
                tight_set: tight,
            }
        })
        .collect())
}

/// All size-k index subsets of 0..m in lexicographic order.
fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > m {
        return out;
    }
    loop {
        out.push(cur.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] + 1 <= m - (k - i) {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, windmill, Graph};

    #[test]
    fn vertices_of_k3() {
        let pts = polytope_vertices(&complete(3).unwrap()).unwrap();
        assert_eq!(pts.len(), 3);
        for p in &pts {
            let sum: Rat = p.coords.iter().sum();
            assert_eq!(sum, rat_int(2));
        }
    }

    #[test]
    fn single_edge_single_point() {
        let g = Graph::build(2, &[(1, 2)]).unwrap();
        let pts = polytope_vertices(&g).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(affine_dim(&pts).unwrap(), 0);
    }

    #[test]
    fn dims_match_formula() {
        let k4 = polytope_vertices(&complete(4).unwrap()).unwrap();
        assert_eq!(affine_dim(&k4).unwrap(), 3);
        let c6 = polytope_vertices(&cycle(6).unwrap()).unwrap();
        assert_eq!(affine_dim(&c6).unwrap(), 4);
        let c5 = polytope_vertices(&cycle(5).unwrap()).unwrap();
        assert_eq!(affine_dim(&c5).unwrap(), 4);
    }

    #[test]
    fn faces_of_k4() {
        let g = complete(4).unwrap();
        // the triangle facet x_1 = 1
        assert!(is_face(&g, &[(1, 2), (1, 3), (1, 4)]).unwrap());
        // diagonal pair of the square face
        assert!(!is_face(&g, &[(1, 2), (3, 4)]).unwrap());
        // improper face
        let all: Vec<_> = g.edges().collect();
        assert!(is_face(&g, &all).unwrap());
        // single vertices are always faces
        for e in g.edges() {
            assert!(is_face(&g, &[e]).unwrap());
        }
    }

    #[test]
    fn rejects_foreign_edge() {
        let g = cycle(5).unwrap();
        assert!(is_face(&g, &[(1, 3)]).is_err());
        assert!(is_face(&g, &[]).is_err());
    }

    #[test]
    fn octahedron_facets() {
        let pts = polytope_vertices(&complete(4).unwrap()).unwrap();
        let facets = brute_facets(&pts, &OracleOptions::default()).unwrap();
        assert_eq!(facets.len(), 8);
        // every facet of the octahedron is a triangle
        for f in &facets {
            assert_eq!(f.tight_set.len(), 3);
        }
    }

    #[test]
    fn simplex_facets() {
        let pts = polytope_vertices(&complete(3).unwrap()).unwrap();
        let facets = brute_facets(&pts, &OracleOptions::default()).unwrap();
        assert_eq!(facets.len(), 3);
    }

    #[test]
    fn caps_enforced() {
        let pts = polytope_vertices(&complete(7).unwrap()).unwrap(); // 21 points
        assert!(matches!(
            brute_facets(&pts, &OracleOptions::default()),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn windmill_two_facets_exist() {
        let pts = polytope_vertices(&windmill(2).unwrap()).unwrap();
        let facets = brute_facets(&pts, &OracleOptions::default()).unwrap();
        assert!(!facets.is_empty());
        // every point lies on at least one facet
        for i in 0..pts.len() {
            assert!(facets.iter().any(|f| f.tight_set.contains(&i)));
        }
    }

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(4, 4).len(), 1);
        assert_eq!(combinations(3, 4).len(), 0);
    }
}
