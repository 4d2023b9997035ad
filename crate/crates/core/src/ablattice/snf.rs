//! Smith normal form and the lattice routines built on it.
//!
//! Pivoting always takes the entry of smallest nonzero absolute value in the
//! active submatrix, ties broken by lowest `(row, col)`, so the output is a
//! deterministic function of the input.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// `u * m * v = d` with `u`, `v` unimodular and `d` in Smith form.
///
/// The inverses of `u` and `v` are tracked alongside so callers can change
/// bases in both directions without a separate inversion.
#[derive(Clone, Debug)]
pub struct SNFResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SNFResult {
    /// Diagonal entries `d_0 | d_1 | ...` up to `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|x| !x.is_zero()).count()
    }
}

fn find_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[(bi, bj)].abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

pub fn smith_normal_form(m: &IntMatrix) -> SNFResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut u_inv = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut v_inv = IntMatrix::identity(cols);

    // Row op `row_i += k row_t` on a and u; inverse as a column op on u_inv.
    let row_op = |a: &mut IntMatrix, u: &mut IntMatrix, u_inv: &mut IntMatrix, i, t, k: &BigInt| {
        a.add_row_multiple(i, t, k);
        u.add_row_multiple(i, t, k);
        u_inv.add_col_multiple(t, i, &-k);
    };
    let col_op = |a: &mut IntMatrix, v: &mut IntMatrix, v_inv: &mut IntMatrix, j, t, k: &BigInt| {
        a.add_col_multiple(j, t, k);
        v.add_col_multiple(j, t, k);
        v_inv.add_row_multiple(t, j, &-k);
    };

    for t in 0..rows.min(cols) {
        while let Some((pi, pj)) = find_pivot(&a, t) {
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            u_inv.swap_cols(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);
            v_inv.swap_rows(t, pj);

            let p = a[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[(i, t)].div_floor(&p);
                if !q.is_zero() {
                    row_op(&mut a, &mut u, &mut u_inv, i, t, &-q);
                }
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                let q = a[(t, j)].div_floor(&p);
                if !q.is_zero() {
                    col_op(&mut a, &mut v, &mut v_inv, j, t, &-q);
                }
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // Row and column are clear; enforce divisibility of the rest.
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a[(i, j)].is_multiple_of(&p));
            match bad {
                Some((i, _)) => row_op(&mut a, &mut u, &mut u_inv, t, i, &BigInt::one()),
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
    }

    SNFResult {
        u,
        d: a,
        v,
        u_inv,
        v_inv,
    }
}

/// Row-style Hermite normal form of the lattice spanned by the rows of `g`.
///
/// Returns an upper-triangular basis (one row per pivot) with positive pivots
/// and entries above each pivot reduced into `[0, pivot)`. For a full-rank
/// lattice this basis is unique, which is what makes subgroup equality a
/// structural comparison.
pub fn hermite_rows(g: &IntMatrix) -> IntMatrix {
    let mut h = g.clone();
    let (rows, cols) = (h.rows(), h.cols());
    let mut pr = 0;
    for c in 0..cols {
        if pr >= rows {
            break;
        }
        loop {
            let piv = (pr..rows)
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&x, &y| h[(x, c)].abs().cmp(&h[(y, c)].abs()).then(x.cmp(&y)));
            let Some(pi) = piv else { break };
            h.swap_rows(pr, pi);
            let mut clean = true;
            for i in pr + 1..rows {
                let q = h[(i, c)].div_floor(&h[(pr, c)]);
                h.add_row_multiple(i, pr, &-q);
                clean &= h[(i, c)].is_zero();
            }
            if clean {
                break;
            }
        }
        if h[(pr, c)].is_zero() {
            continue;
        }
        if h[(pr, c)].is_negative() {
            h.negate_row(pr);
        }
        for i in 0..pr {
            let q = h[(i, c)].div_floor(&h[(pr, c)]);
            h.add_row_multiple(i, pr, &-q);
        }
        pr += 1;
    }
    let kept: Vec<Vec<BigInt>> = (0..pr).map(|i| h.row(i).to_vec()).collect();
    IntMatrix::from_rows(&kept, cols)
}

/// Solves `c * h = x` for a square upper-triangular `h` with nonzero diagonal.
/// Returns `None` when the solution is not integral.
pub fn solve_upper_left(h: &IntMatrix, x: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = h.rows();
    debug_assert_eq!(h.cols(), n);
    let mut c: Vec<BigInt> = vec![BigInt::zero(); n];
    for j in 0..n {
        let mut rhs = x[j].clone();
        for (k, ck) in c.iter().enumerate().take(j) {
            rhs -= ck * &h[(k, j)];
        }
        let (q, r) = rhs.div_rem(&h[(j, j)]);
        if !r.is_zero() {
            return None;
        }
        c[j] = q;
    }
    Some(c)
}

/// A basis (as rows) of the integer kernel `{z : a z = 0}`.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let r = snf.rank();
    let n = a.cols();
    let rows: Vec<Vec<BigInt>> = (r..n).map(|k| snf.v.col(k)).collect();
    IntMatrix::from_rows(&rows, n)
}

/// One integer solution of `a z = t`, or `None` if there is none.
pub fn solve_integer_system(a: &IntMatrix, t: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), t.len());
    let snf = smith_normal_form(a);
    let ut = snf.u.apply(t);
    let r = snf.rank();
    let mut w = vec![BigInt::zero(); a.cols()];
    for (i, x) in ut.iter().enumerate() {
        if i < r {
            let (q, rem) = x.div_rem(&snf.d[(i, i)]);
            if !rem.is_zero() {
                return None;
            }
            w[i] = q;
        } else if !x.is_zero() {
            return None;
        }
    }
    Some(snf.v.apply(&w))
}
