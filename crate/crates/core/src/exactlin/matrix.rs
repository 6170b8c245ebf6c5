use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{abs_cmp, Rat};

/// Dense row-major matrix with fixed dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<Rat>;
pub type IntVector = Vec<BigInt>;
pub type RatVector = Vec<Rat>;

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors. `cols` is needed for the empty case.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(idx.len(), self.cols, |i, j| self[(idx[i], j)].clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    pub fn mul(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + &self[(i, k)] * &other[(k, j)];
            }
            acc
        }))
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl IntMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Matrix::from_rows(rows, cols).expect("ragged literal matrix")
    }

    pub fn to_rat(&self) -> RatMatrix {
        self.map(|x| Rat::from_integer(x.clone()))
    }

    pub fn determinant_is_unit(&self) -> bool {
        self.rows == self.cols && {
            let d = determinant(&self.to_rat());
            d.is_integer() && d.numer().abs().is_one()
        }
    }
}

/// Index of the pivot with smallest absolute value, lowest index on ties.
fn smallest_nonzero<'a>(cands: impl Iterator<Item = (usize, &'a BigInt)>) -> Option<usize> {
    let mut best: Option<(usize, &BigInt)> = None;
    for (i, v) in cands {
        if v.is_zero() {
            continue;
        }
        match best {
            Some((_, b)) if abs_cmp(v, b) != std::cmp::Ordering::Less => {}
            _ => best = Some((i, v)),
        }
    }
    best.map(|(i, _)| i)
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn rank_int(m: &IntMatrix) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = smallest_nonzero((r..rows).map(|i| (i, &a[(i, c)]))) else {
            continue;
        };
        a.swap_rows(r, p);
        let piv = a[(r, c)].clone();
        for i in r + 1..rows {
            let lead = a[(i, c)].clone();
            for j in c + 1..cols {
                let v = (&a[(i, j)] * &piv - &lead * &a[(r, j)]) / &prev;
                a[(i, j)] = v;
            }
            a[(i, c)] = BigInt::zero();
        }
        prev = piv;
        r += 1;
    }
    r
}

/// Clears denominators row by row; the row space is unchanged.
fn integer_rows(m: &RatMatrix) -> IntMatrix {
    let mut out = IntMatrix::zeros(m.rows, m.cols);
    for i in 0..m.rows {
        let l = m
            .row(i)
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        for j in 0..m.cols {
            let x = &m[(i, j)];
            out[(i, j)] = x.numer() * (&l / x.denom());
        }
    }
    out
}

/// Rank over the rationals.
pub fn rank(m: &RatMatrix) -> usize {
    rank_int(&integer_rows(m))
}

/// Reduced row echelon form over the rationals; returns pivot columns.
pub fn rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = a[(r, c)].recip();
        for j in c..a.cols {
            a[(r, j)] = &a[(r, j)] * &inv;
        }
        for i in 0..a.rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..a.cols {
                let v = &a[(i, j)] - &f * &a[(r, j)];
                a[(i, j)] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// The unique solution of `m x = b` when `m` has full column rank.
///
/// Returns `Ok(None)` when the system is inconsistent.
pub fn solve_unique(m: &RatMatrix, b: &[Rat]) -> Result<Option<RatVector>> {
    if b.len() != m.rows {
        return Err(Error::DimensionMismatch {
            expected: m.rows,
            found: b.len(),
        });
    }
    let aug = Matrix::from_fn(m.rows, m.cols + 1, |i, j| {
        if j < m.cols {
            m[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let (red, pivots) = rref(&aug);
    let rank_m = pivots.iter().filter(|&&c| c < m.cols).count();
    if rank_m < m.cols {
        return Err(Error::ColumnRankDeficient {
            rank: rank_m,
            cols: m.cols,
        });
    }
    if pivots.contains(&m.cols) {
        return Ok(None);
    }
    Ok(Some((0..m.cols).map(|i| red[(i, m.cols)].clone()).collect()))
}

/// Basis of the rational null space `{ x : m x = 0 }`, one vector per free column.
pub fn rational_kernel_basis(m: &RatMatrix) -> Vec<RatVector> {
    let (red, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); m.cols];
            v[f] = Rat::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -red[(r, f)].clone();
            }
            v
        })
        .collect()
}

pub fn determinant(m: &RatMatrix) -> Rat {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let mut a = m.clone();
    let n = a.rows;
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            a.swap_rows(p, c);
            det = -det;
        }
        let piv = a[(c, c)].clone();
        det *= &piv;
        for i in c + 1..n {
            if a[(i, c)].is_zero() {
                continue;
            }
            let f = &a[(i, c)] / &piv;
            for j in c..n {
                let v = &a[(i, j)] - &f * &a[(c, j)];
                a[(i, j)] = v;
            }
        }
    }
    det
}

/// Reduces `m` to column echelon form by unimodular column operations.
///
/// Returns `(rank, v)` with `m · v` having its last `cols - rank` columns zero.
fn column_echelon(m: &IntMatrix) -> (usize, IntMatrix) {
    let mut a = m.clone();
    let mut v = IntMatrix::identity(m.cols);
    let mut r = 0;
    for i in 0..a.rows {
        if r == a.cols {
            break;
        }
        while let Some(p) = smallest_nonzero((r..a.cols).map(|j| (j, &a[(i, j)]))) {
            a.swap_cols(r, p);
            v.swap_cols(r, p);
            let piv = a[(i, r)].clone();
            let mut clean = true;
            for j in r + 1..a.cols {
                if a[(i, j)].is_zero() {
                    continue;
                }
                let q = a[(i, j)].div_floor(&piv);
                for k in 0..a.rows {
                    let x = &a[(k, j)] - &q * &a[(k, r)];
                    a[(k, j)] = x;
                }
                for k in 0..v.rows {
                    let x = &v[(k, j)] - &q * &v[(k, r)];
                    v[(k, j)] = x;
                }
                if !a[(i, j)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                r += 1;
                break;
            }
        }
    }
    (r, v)
}

/// Row-style Hermite normal form: positive pivots, entries above each pivot
/// reduced into `[0, pivot)`, zero rows dropped. Unique for a given lattice.
pub fn hermite_rows(m: &IntMatrix) -> IntMatrix {
    let t = m.transpose();
    let (r, v) = column_echelon(&t);
    // columns 0..r of t·v form a lower-echelon basis of the row lattice of m
    let tv = t.mul(&v).expect("shapes agree");
    let mut basis: Vec<IntVector> = (0..r).map(|j| tv.column(j)).collect();
    // pivot of each basis vector is its first nonzero entry
    let lead = |x: &IntVector| x.iter().position(|e| !e.is_zero()).unwrap_or(x.len());
    basis.sort_by_key(|x| lead(x));
    for k in 0..basis.len() {
        let p = lead(&basis[k]);
        if basis[k][p].is_negative() {
            basis[k].iter_mut().for_each(|e| *e = -e.clone());
        }
        let piv = basis[k][p].clone();
        for prev in 0..k {
            let q = basis[prev][p].div_floor(&piv);
            if !q.is_zero() {
                let row = basis[k].clone();
                for (e, s) in basis[prev].iter_mut().zip(&row) {
                    *e -= &q * s;
                }
            }
        }
    }
    let cols = m.cols;
    Matrix::from_rows(basis, cols).expect("uniform width")
}

/// A basis of the saturated lattice `{ v in Z^cols : m v = 0 }`, normalized to
/// Hermite form so the output depends only on the lattice.
pub fn integer_kernel_basis(m: &IntMatrix) -> Vec<IntVector> {
    let (r, v) = column_echelon(m);
    if r == m.cols {
        return Vec::new();
    }
    let raw = Matrix::from_fn(m.cols - r, m.cols, |i, j| v[(j, r + i)].clone());
    hermite_rows(&raw).row_vecs()
}

/// Smith normal form `u · m · v = d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }

    /// Invariant factors greater than one, i.e. the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal()
            .into_iter()
            .filter(|x| !x.is_zero() && !x.is_one())
            .collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    let mut a = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let n = m.rows.min(m.cols);

    for t in 0..n {
        let best = {
            let mut best: Option<(usize, usize)> = None;
            for i in t..a.rows {
                for j in t..a.cols {
                    let x = &a[(i, j)];
                    if x.is_zero() {
                        continue;
                    }
                    match best {
                        Some((bi, bj)) if abs_cmp(x, &a[(bi, bj)]) != std::cmp::Ordering::Less => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
            best
        };
        let Some((pi, pj)) = best else { break };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let piv = a[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..a.rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&piv);
                row_axpy(&mut a, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..a.cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&piv);
                col_axpy(&mut a, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                // move the smallest remainder in row/column t onto the pivot
                let col_best = smallest_nonzero((t..a.rows).map(|i| (i, &a[(i, t)]))).unwrap();
                let row_best = smallest_nonzero((t..a.cols).map(|j| (j, &a[(t, j)]))).unwrap();
                if abs_cmp(&a[(col_best, t)], &a[(t, row_best)]) != std::cmp::Ordering::Greater {
                    a.swap_rows(t, col_best);
                    u.swap_rows(t, col_best);
                } else {
                    a.swap_cols(t, row_best);
                    v.swap_cols(t, row_best);
                }
                continue;
            }
            // divisibility: fold an offending row into row t and repeat
            let offending = (t + 1..a.rows).find(|&i| {
                (t + 1..a.cols).any(|j| !a[(i, j)].is_multiple_of(&piv))
            });
            match offending {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut a, t, i, &minus_one);
                    row_axpy(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            // row t := row t - 2 row t
            let two = BigInt::from(2);
            row_axpy(&mut a, t, t, &two);
            row_axpy(&mut u, t, t, &two);
        }
    }
    Smith { u, d: a, v }
}

/// `row[dst] -= q * row[src]`.
fn row_axpy(a: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    if dst == src {
        for j in 0..a.cols {
            let x = &a[(dst, j)] - q * &a[(src, j)];
            a[(dst, j)] = x;
        }
        return;
    }
    for j in 0..a.cols {
        if a[(src, j)].is_zero() {
            continue;
        }
        let x = &a[(dst, j)] - q * &a[(src, j)];
        a[(dst, j)] = x;
    }
}

/// `col[dst] -= q * col[src]`.
fn col_axpy(a: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    for i in 0..a.rows {
        if a[(i, src)].is_zero() {
            continue;
        }
        let x = &a[(i, dst)] - q * &a[(i, src)];
        a[(i, dst)] = x;
    }
}
