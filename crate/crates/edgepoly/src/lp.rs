//! Exact rational linear algebra and a phase-1 simplex.
//!
//! Everything here is over arbitrary-precision rationals; there are no
//! tolerances anywhere. The simplex uses Bland's rule, so it terminates
//! on every input.

use num::{BigRational, Signed, Zero};

pub(crate) type Rat = BigRational;

pub(crate) fn rat_int(v: i64) -> Rat {
    Rat::from_integer(v.into())
}

/// Rank of a rational matrix by Gaussian elimination.
pub(crate) fn rank(mut rows: Vec<Vec<Rat>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = rows[r][col].clone();
        for i in r + 1..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let factor = &rows[i][col] / &inv;
            for j in col..ncols {
                let delta = &factor * &rows[r][j];
                rows[i][j] = &rows[i][j] - delta;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Row-reduce and report the pivot columns.
pub(crate) fn pivot_columns(mut rows: Vec<Vec<Rat>>) -> Vec<usize> {
    let mut pivots = Vec::new();
    if rows.is_empty() {
        return pivots;
    }
    let ncols = rows[0].len();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = rows[r][col].clone();
        for i in r + 1..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let factor = &rows[i][col] / &inv;
            for j in col..ncols {
                let delta = &factor * &rows[r][j];
                rows[i][j] = &rows[i][j] - delta;
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// If the nullspace of the matrix is one-dimensional, return a spanning
/// vector; otherwise `None`.
pub(crate) fn nullspace_1d(rows: &[Vec<Rat>]) -> Option<Vec<Rat>> {
    if rows.is_empty() {
        return None;
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    // reduced row echelon form
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].clone();
        for j in col..ncols {
            m[r][j] = &m[r][j] / &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                for j in col..ncols {
                    let delta = &factor * &m[r][j];
                    m[i][j] = &m[i][j] - delta;
                }
            }
        }
        pivots.push((r, col));
        r += 1;
        if r == m.len() {
            break;
        }
    }
    if pivots.len() + 1 != ncols {
        return None;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free = (0..ncols).find(|c| !pivot_cols.contains(c))?;
    let mut sol = vec![Rat::zero(); ncols];
    sol[free] = rat_int(1);
    for &(row, col) in &pivots {
        sol[col] = -m[row][free].clone();
    }
    Some(sol)
}

/// Is {x >= 0 : Ax = b} non-empty? Phase-1 simplex with Bland's rule.
pub(crate) fn feasible(a: &[Vec<Rat>], b: &[Rat]) -> bool {
    let m = a.len();
    if m == 0 {
        return true;
    }
    let n = a[0].len();
    let width = n + m + 1; // columns + artificials + rhs
    let mut tab: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        let mut t = vec![Rat::zero(); width];
        let flip = b[i].is_negative();
        for (j, v) in row.iter().enumerate() {
            t[j] = if flip { -v.clone() } else { v.clone() };
        }
        t[n + i] = rat_int(1);
        t[width - 1] = if flip { -b[i].clone() } else { b[i].clone() };
        tab.push(t);
    }
    // objective row: minimize the sum of artificials. With the
    // artificial basis the reduced cost of column j is -sum_i a_ij.
    let mut obj = vec![Rat::zero(); width];
    for j in 0..n {
        let mut s = Rat::zero();
        for row in &tab {
            s += &row[j];
        }
        obj[j] = -s;
    }
    let mut rhs_obj = Rat::zero();
    for row in &tab {
        rhs_obj -= &row[width - 1];
    }
    obj[width - 1] = rhs_obj;

    let mut basis: Vec<usize> = (n..n + m).collect();
    loop {
        // Bland: smallest column with negative reduced cost
        let Some(enter) = (0..width - 1).find(|&j| obj[j].is_negative()) else {
            break;
        };
        // ratio test; ties broken by smallest basis variable
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for i in 0..m {
            if tab[i][enter].is_positive() {
                let ratio = &tab[i][width - 1] / &tab[i][enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(leave) = leave else {
            // unbounded phase-1 objective cannot happen (bounded below by 0)
            unreachable!("phase-1 simplex unbounded");
        };
        // pivot on (leave, enter)
        let inv = tab[leave][enter].clone();
        for j in 0..width {
            tab[leave][j] = &tab[leave][j] / &inv;
        }
        for i in 0..m {
            if i != leave && !tab[i][enter].is_zero() {
                let factor = tab[i][enter].clone();
                for j in 0..width {
                    let delta = &factor * &tab[leave][j];
                    tab[i][j] = &tab[i][j] - delta;
                }
            }
        }
        if !obj[enter].is_zero() {
            let factor = obj[enter].clone();
            for j in 0..width {
                let delta = &factor * &tab[leave][j];
                obj[j] = &obj[j] - delta;
            }
        }
        basis[leave] = enter;
    }
    // objective value is -obj[rhs]; feasible iff it is zero
    obj[width - 1].is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> Rat {
        rat_int(v)
    }

    #[test]
    fn rank_of_identity_like() {
        let rows = vec![
            vec![r(1), r(0), r(2)],
            vec![r(0), r(1), r(3)],
            vec![r(1), r(1), r(5)],
        ];
        assert_eq!(rank(rows), 2);
    }

    #[test]
    fn feasible_simple() {
        // x + y = 1, x,y >= 0
        assert!(feasible(&[vec![r(1), r(1)]], &[r(1)]));
        // x + y = -1 infeasible over x,y >= 0
        assert!(!feasible(&[vec![r(1), r(1)]], &[r(-1)]));
    }

    #[test]
    fn feasible_system() {
        // x - y = 0, x + y = 2 -> x = y = 1
        let a = vec![vec![r(1), r(-1)], vec![r(1), r(1)]];
        assert!(feasible(&a, &[r(0), r(2)]));
        // x + y = 1 and x + y = 2 simultaneously: infeasible
        let a = vec![vec![r(1), r(1)], vec![r(1), r(1)]];
        assert!(!feasible(&a, &[r(1), r(2)]));
    }

    #[test]
    fn nullspace_unique() {
        // x + y = 0 with two cols: nullspace spanned by (1,-1)
        let v = nullspace_1d(&[vec![r(1), r(1)]]).unwrap();
        assert_eq!(&v[0] + &v[1], Rat::zero());
        assert!(!v[0].is_zero());
        // full-rank square matrix: no nontrivial nullspace
        assert!(nullspace_1d(&[vec![r(1), r(0)], vec![r(0), r(1)]]).is_none());
    }

    #[test]
    fn pivot_cols() {
        let rows = vec![vec![r(0), r(1), r(2)], vec![r(0), r(2), r(4)]];
        assert_eq!(pivot_columns(rows), vec![1]);
    }
}
