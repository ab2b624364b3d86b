use crate::scalar::IntScalar;

use num_rational::Ratio;
use num_traits::Zero;
use std::fmt;

/// Dense row-major matrix over an exact integer scalar.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: IntScalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows * cols");
        Matrix { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![T::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row.iter().cloned());
        }
        Matrix::new(r, c, entries)
    }

    /// Matrix whose columns are the given vectors; `rows` disambiguates the
    /// shape when the list is empty.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let data: Vec<Vec<T>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| T::from_i64(x)).collect())
            .collect();
        Matrix::from_rows(&data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c {
                        self.at(r, c).is_one()
                    } else {
                        self.at(r, c).is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix<T> {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.at(r, c).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.at(r, c).clone() + a.clone() * other.at(k, c).clone();
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "vector length must equal column count");
        (0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for c in 0..self.cols {
                    acc = acc + self.at(r, c).clone() * v[c].clone();
                }
                acc
            })
            .collect()
    }

    pub fn mul_rat_vec(&self, v: &[Ratio<T>]) -> Vec<Ratio<T>> {
        assert_eq!(self.cols, v.len(), "vector length must equal column count");
        (0..self.rows)
            .map(|r| {
                let mut acc = Ratio::zero();
                for c in 0..self.cols {
                    acc += Ratio::from_integer(self.at(r, c).clone()) * v[c].clone();
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Matrix::new(self.rows, self.cols, entries)
    }

    pub fn neg(&self) -> Matrix<T> {
        Matrix::new(
            self.rows,
            self.cols,
            self.entries.iter().map(|e| T::zero() - e.clone()).collect(),
        )
    }

    /// `self - identity`, the relation matrix of a lattice automorphism.
    pub fn minus_identity(&self) -> Matrix<T> {
        assert_eq!(self.rows, self.cols);
        let mut out = self.clone();
        for i in 0..self.rows {
            let v = out.at(i, i).clone() - T::one();
            out.set(i, i, v);
        }
        out
    }

    pub fn pow(&self, k: usize) -> Matrix<T> {
        assert_eq!(self.rows, self.cols);
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Concatenate columns of the given matrices (all with equal row count).
    pub fn hstack(parts: &[&Matrix<T>]) -> Matrix<T> {
        let rows = parts.first().map_or(0, |m| m.rows);
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut base = 0;
        for m in parts {
            assert_eq!(m.rows, rows, "row count mismatch in hstack");
            for r in 0..rows {
                for c in 0..m.cols {
                    out.set(r, base + c, m.at(r, c).clone());
                }
            }
            base += m.cols;
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += coeff * row[src]
    pub fn row_axpy(&mut self, dst: usize, src: usize, coeff: &T) {
        for c in 0..self.cols {
            let v = self.at(dst, c).clone() + coeff.clone() * self.at(src, c).clone();
            self.set(dst, c, v);
        }
    }

    /// col[dst] += coeff * col[src]
    pub fn col_axpy(&mut self, dst: usize, src: usize, coeff: &T) {
        for r in 0..self.rows {
            let v = self.at(r, dst).clone() + coeff.clone() * self.at(r, src).clone();
            self.set(r, dst, v);
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = T::zero() - self.at(r, c).clone();
            self.set(r, c, v);
        }
    }

    /// Exact determinant by the Bareiss fraction-free algorithm.
    pub fn determinant(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut a: Vec<Vec<T>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero(), "Bareiss division must be exact");
                    a[i][j] = q;
                }
            }
            for row in a.iter_mut().take(n).skip(k + 1) {
                row[k] = T::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if negate {
            T::zero() - det
        } else {
            det
        }
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{:?} ", self.entries[r * self.cols + c])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Smith decomposition `d = u * m * v` with `u`, `v` unimodular and `d`
/// diagonal satisfying the divisibility chain.
#[derive(Clone, Debug)]
pub struct Smith<T> {
    pub u: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: IntScalar> Smith<T> {
    /// Diagonal entries, padded with zeros up to `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<T> {
        let lim = self.d.rows().min(self.d.cols());
        (0..lim).map(|i| self.d.at(i, i).clone()).collect()
    }

    /// Number of nonzero diagonal entries, i.e. the rank of `m`.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

fn pivot_position<T: IntScalar>(d: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(T, usize, usize)> = None;
    for r in t..d.rows() {
        for c in t..d.cols() {
            let v = d.at(r, c);
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            match &best {
                Some((cur, _, _)) if *cur <= a => {}
                _ => best = Some((a, r, c)),
            }
        }
    }
    best.map(|(_, r, c)| (r, c))
}

/// Smith normal form with a deterministic pivot rule: smallest absolute
/// nonzero entry of the working submatrix, ties broken by row then column.
pub fn smith_normal_form<T: IntScalar>(m: &Matrix<T>) -> Smith<T> {
    let mut d = m.clone();
    let mut u = Matrix::identity(m.rows());
    let mut v = Matrix::identity(m.cols());
    let lim = m.rows().min(m.cols());
    let mut t = 0;
    'position: while t < lim {
        let Some((pr, pc)) = pivot_position(&d, t) else {
            break;
        };
        if pr != t {
            d.swap_rows(t, pr);
            u.swap_rows(t, pr);
        }
        if pc != t {
            d.swap_cols(t, pc);
            v.swap_cols(t, pc);
        }
        for r in t + 1..d.rows() {
            if d.at(r, t).is_zero() {
                continue;
            }
            let (q, rem) = d.at(r, t).div_rem(d.at(t, t));
            let coeff = T::zero() - q;
            d.row_axpy(r, t, &coeff);
            u.row_axpy(r, t, &coeff);
            if !rem.is_zero() {
                continue 'position;
            }
        }
        for c in t + 1..d.cols() {
            if d.at(t, c).is_zero() {
                continue;
            }
            let (q, rem) = d.at(t, c).div_rem(d.at(t, t));
            let coeff = T::zero() - q;
            d.col_axpy(c, t, &coeff);
            v.col_axpy(c, t, &coeff);
            if !rem.is_zero() {
                continue 'position;
            }
        }
        // pivot must divide every remaining entry; fold an offender into row t
        for r in t + 1..d.rows() {
            for c in t + 1..d.cols() {
                if !d.at(r, c).mod_floor(d.at(t, t)).is_zero() {
                    d.row_axpy(t, r, &T::one());
                    u.row_axpy(t, r, &T::one());
                    continue 'position;
                }
            }
        }
        t += 1;
    }
    for i in 0..lim {
        if d.at(i, i).is_negative() {
            d.negate_row(i);
            u.negate_row(i);
        }
    }
    Smith { u, d, v }
}

/// Basis of the integer kernel `{x : m x = 0}`.
pub fn integer_kernel<T: IntScalar>(m: &Matrix<T>) -> Vec<Vec<T>> {
    let s = smith_normal_form(m);
    let lim = m.rows().min(m.cols());
    let mut basis = Vec::new();
    for c in 0..m.cols() {
        let free = c >= lim || s.d.at(c, c).is_zero();
        if free {
            basis.push(s.v.column(c));
        }
    }
    basis
}

/// Solve `m x = b` over the integers; `None` when no integral solution exists.
pub fn solve_integer<T: IntScalar>(m: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(m.rows(), b.len(), "rhs length must equal row count");
    let s = smith_normal_form(m);
    let ub = s.u.mul_vec(b);
    let lim = m.rows().min(m.cols());
    let mut z = vec![T::zero(); m.cols()];
    for (i, ubi) in ub.iter().enumerate() {
        let di = if i < lim { s.d.at(i, i).clone() } else { T::zero() };
        if di.is_zero() {
            if !ubi.is_zero() {
                return None;
            }
        } else {
            let (q, r) = ubi.div_rem(&di);
            if !r.is_zero() {
                return None;
            }
            if i < m.cols() {
                z[i] = q;
            } else if !q.is_zero() {
                return None;
            }
        }
    }
    Some(s.v.mul_vec(&z))
}

/// Generators of the intersection of the column lattices of `a` and `b`.
pub fn lattice_intersection<T: IntScalar>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    assert_eq!(a.rows(), b.rows(), "ambient rank mismatch");
    let stacked = Matrix::hstack(&[a, &b.neg()]);
    let kernel = integer_kernel(&stacked);
    let columns: Vec<Vec<T>> = kernel
        .iter()
        .map(|k| a.mul_vec(&k[..a.cols()]))
        .filter(|col| col.iter().any(|x| !x.is_zero()))
        .collect();
    Matrix::from_columns(a.rows(), &columns)
}
