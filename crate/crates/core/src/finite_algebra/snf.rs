//! Smith normal form and exact linear algebra over the integers.
//!
//! All matrices are dense `Vec<Vec<BigInt>>` so intermediate swell is never a
//! correctness concern, only a speed one; the inputs in this crate stay small.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row major.
pub type Mat = Vec<Vec<BigInt>>;

/// Result of a Smith normal form computation: `u * m * v = d` with
/// `u`, `v` unimodular, `d` diagonal with nonnegative entries such that
/// `d[i][i]` divides `d[i+1][i+1]`.  The inverses of `u` and `v` are
/// tracked alongside so solving and back-substitution stay exact.
#[derive(Debug, Clone)]
pub struct IntMatrixSNF {
    pub d: Mat,
    pub u: Mat,
    pub v: Mat,
    pub u_inv: Mat,
    pub v_inv: Mat,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
}

pub fn zeros(rows: usize, cols: usize) -> Mat {
    vec![vec![BigInt::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Mat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigInt::one();
    }
    m
}

#[cfg(test)]
pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let rows = a.len();
    let inner = if rows > 0 { a[0].len() } else { 0 };
    let cols = if b.is_empty() { 0 } else { b[0].len() };
    assert_eq!(inner, b.len(), "dimension mismatch in matrix product");
    let mut out = zeros(rows, cols);
    for i in 0..rows {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                if !b[k][j].is_zero() {
                    let t = &a[i][k] * &b[k][j];
                    out[i][j] += t;
                }
            }
        }
    }
    out
}

pub fn mat_vec(a: &Mat, x: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| {
            let mut acc = BigInt::zero();
            for (c, xi) in row.iter().zip(x) {
                if !c.is_zero() && !xi.is_zero() {
                    acc += c * xi;
                }
            }
            acc
        })
        .collect()
}

struct Reducer {
    d: Mat,
    u: Mat,
    v: Mat,
    u_inv: Mat,
    v_inv: Mat,
    rows: usize,
    cols: usize,
}

impl Reducer {
    // row_i := row_i - q * row_j on d and u; inverse op on columns of u_inv
    fn row_sub(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let t = q * &self.d[j][c];
            self.d[i][c] -= t;
        }
        for c in 0..self.rows {
            let t = q * &self.u[j][c];
            self.u[i][c] -= t;
        }
        for r in 0..self.rows {
            let t = q * &self.u_inv[r][i];
            self.u_inv[r][j] += t;
        }
    }

    // col_i := col_i - q * col_j on d and v; inverse op on rows of v_inv
    fn col_sub(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let t = q * &self.d[r][j];
            self.d[r][i] -= t;
        }
        for r in 0..self.cols {
            let t = q * &self.v[r][j];
            self.v[r][i] -= t;
        }
        for c in 0..self.cols {
            let t = q * &self.v_inv[i][c];
            self.v_inv[j][c] += t;
        }
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.d.swap(i, j);
        self.u.swap(i, j);
        for r in 0..self.rows {
            self.u_inv[r].swap(i, j);
        }
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.d[r].swap(i, j);
        }
        for r in 0..self.cols {
            self.v[r].swap(i, j);
        }
        self.v_inv.swap(i, j);
    }

    fn row_negate(&mut self, i: usize) {
        for c in 0..self.cols {
            let t = -&self.d[i][c];
            self.d[i][c] = t;
        }
        for c in 0..self.rows {
            let t = -&self.u[i][c];
            self.u[i][c] = t;
        }
        for r in 0..self.rows {
            let t = -&self.u_inv[r][i];
            self.u_inv[r][i] = t;
        }
    }

    /// Smallest nonzero entry (by absolute value) in the submatrix at (k, k).
    fn pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in k..self.rows {
            for j in k..self.cols {
                if self.d[i][j].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if self.d[i][j].abs() < self.d[bi][bj].abs() {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        best
    }
}

/// Smith normal form of `m` with unimodular transforms and their inverses.
pub fn smith_normal_form(m: &Mat) -> IntMatrixSNF {
    let rows = m.len();
    let cols = if rows > 0 { m[0].len() } else { 0 };
    let mut r = Reducer {
        d: m.clone(),
        u: identity(rows),
        v: identity(cols),
        u_inv: identity(rows),
        v_inv: identity(cols),
        rows,
        cols,
    };
    let mut k = 0;
    while k < rows.min(cols) {
        let Some((pi, pj)) = r.pivot(k) else { break };
        r.row_swap(k, pi);
        r.col_swap(k, pj);
        loop {
            // clear the pivot column
            let mut dirty = false;
            for i in k + 1..rows {
                if !r.d[i][k].is_zero() {
                    let q = div_round(&r.d[i][k], &r.d[k][k]);
                    r.row_sub(i, k, &q);
                    if !r.d[i][k].is_zero() {
                        dirty = true;
                    }
                }
            }
            // clear the pivot row
            for j in k + 1..cols {
                if !r.d[k][j].is_zero() {
                    let q = div_round(&r.d[k][j], &r.d[k][k]);
                    r.col_sub(j, k, &q);
                    if !r.d[k][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
            // a residue survived; move the smallest entry back to the pivot
            let (pi, pj) = r.pivot(k).expect("nonzero residue exists");
            r.row_swap(k, pi);
            r.col_swap(k, pj);
        }
        // enforce divisibility d[k][k] | d[i][j] for the remaining block
        let mut fixed = false;
        'scan: for i in k + 1..rows {
            for j in k + 1..cols {
                if !(&r.d[i][j] % &r.d[k][k]).is_zero() {
                    // add row i to row k, then redo the elimination at k
                    let minus_one = -BigInt::one();
                    r.row_sub(k, i, &minus_one);
                    fixed = true;
                    break 'scan;
                }
            }
        }
        if fixed {
            continue;
        }
        if r.d[k][k].is_negative() {
            r.row_negate(k);
        }
        k += 1;
    }
    IntMatrixSNF {
        d: r.d,
        u: r.u,
        v: r.v,
        u_inv: r.u_inv,
        v_inv: r.v_inv,
        rank: k,
    }
}

// round-to-nearest quotient keeps remainders small, which speeds convergence
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = (a / b, a % b);
    if &r.abs() * 2 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Basis for the integer kernel of `m`: the columns of `v` past the rank.
pub fn kernel_basis(m: &Mat) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    (snf.rank..cols)
        .map(|j| (0..cols).map(|i| snf.v[i][j].clone()).collect())
        .collect()
}

/// One exact integer solution `x` of `m x = b`, or `None` if there is none.
pub fn solve(m: &Mat, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(b.len(), m.len());
    solve_with(&smith_normal_form(m), b)
}

/// Solves using a precomputed Smith normal form of the matrix.
pub fn solve_with(snf: &IntMatrixSNF, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let cols = snf.v.len();
    let ub = mat_vec(&snf.u, b);
    let mut y = vec![BigInt::zero(); cols];
    for (i, ubi) in ub.iter().enumerate() {
        if i < snf.rank {
            let d = &snf.d[i][i];
            if (ubi % d).is_zero() {
                y[i] = ubi / d;
            } else {
                return None;
            }
        } else if !ubi.is_zero() {
            return None;
        }
    }
    Some(mat_vec(&snf.v, &y))
}

/// Determinant of a square matrix by fraction-free (Bareiss) elimination.
pub fn determinant(m: &Mat) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "determinant needs a square matrix");
    let mut a = m.clone();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

#[cfg(test)]
pub fn from_i64(rows: &[&[i64]]) -> Mat {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}
