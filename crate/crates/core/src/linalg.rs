//! Dense matrices over `Q(A)` with exact Gaussian elimination.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::cyclo::CycloScalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    level: u32,
    rows: usize,
    cols: usize,
    data: Vec<CycloScalar>,
}

impl Matrix {
    pub fn zeros(level: u32, rows: usize, cols: usize) -> Self {
        Matrix {
            level,
            rows,
            cols,
            data: vec![CycloScalar::zero(level); rows * cols],
        }
    }

    pub fn identity(level: u32, n: usize) -> Self {
        let mut m = Self::zeros(level, n, n);
        for i in 0..n {
            m[(i, i)] = CycloScalar::one(level);
        }
        m
    }

    pub fn from_fn(
        level: u32,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> CycloScalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            level,
            rows,
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(level: u32, rows: usize, columns: &[Vec<CycloScalar>]) -> Self {
        Self::from_fn(level, rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<CycloScalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycloScalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.level, self.cols, self.rows, |i, j| {
            self[(j, i)].clone()
        })
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.level, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let t = a * b;
                        out[(i, j)] += &t;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[CycloScalar]) -> Vec<CycloScalar> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = CycloScalar::zero(self.level);
                for (j, x) in v.iter().enumerate() {
                    let a = &self[(i, j)];
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.level, self.rows, self.cols, |i, j| {
            &self[(i, j)] - &rhs[(i, j)]
        })
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.level, self.rows, self.cols, |i, j| {
            &self[(i, j)] + &rhs[(i, j)]
        })
    }

    pub fn scale(&self, s: &CycloScalar) -> Matrix {
        Matrix::from_fn(self.level, self.rows, self.cols, |i, j| &self[(i, j)] * s)
    }

    /// Kronecker product; row and column indices are `i * other.rows + k`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(
            self.level,
            self.rows * other.rows,
            self.cols * other.cols,
            |i, j| {
                let a = &self[(i / other.rows, j / other.cols)];
                if a.is_zero() {
                    return CycloScalar::zero(self.level);
                }
                a * &other[(i % other.rows, j % other.cols)]
            },
        )
    }

    pub fn trace(&self) -> CycloScalar {
        assert!(self.is_square());
        (0..self.rows).fold(CycloScalar::zero(self.level), |acc, i| acc + &self[(i, i)])
    }

    /// Reduced row echelon form and the pivot columns, chosen leftmost-first.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].inv().expect("nonzero pivot");
            for j in col..m.cols {
                m[(row, j)] = &m[(row, j)] * &inv;
            }
            for i in 0..m.rows {
                if i != row && !m[(i, col)].is_zero() {
                    let factor = m[(i, col)].clone();
                    for j in col..m.cols {
                        if !m[(row, j)].is_zero() {
                            let t = &factor * &m[(row, j)];
                            m[(i, j)] -= &t;
                        }
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn determinant(&self) -> CycloScalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = CycloScalar::one(self.level);
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !m[(i, col)].is_zero()) else {
                return CycloScalar::zero(self.level);
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det *= &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for i in col + 1..n {
                if m[(i, col)].is_zero() {
                    continue;
                }
                let factor = &m[(i, col)] * &inv;
                for j in col..n {
                    if !m[(col, j)].is_zero() {
                        let t = &factor * &m[(col, j)];
                        m[(i, j)] -= &t;
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = Matrix::from_fn(self.level, n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                CycloScalar::one(self.level)
            } else {
                CycloScalar::zero(self.level)
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(self.level, n, n, |i, j| {
            r[(i, j + n)].clone()
        }))
    }

    /// Basis of the column space: the columns of `self` at the rref pivots.
    pub fn column_space(&self) -> Vec<Vec<CycloScalar>> {
        let (_, pivots) = self.rref();
        pivots.iter().map(|&j| self.column(j)).collect()
    }

    /// Basis of the null space, one vector per free column.
    pub fn null_space(&self) -> Vec<Vec<CycloScalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivots.contains(j)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![CycloScalar::zero(self.level); self.cols];
                v[f] = CycloScalar::one(self.level);
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -&r[(row, f)];
                }
                v
            })
            .collect()
    }

    /// Solves `self · x = b`, returning `None` when inconsistent.
    pub fn solve(&self, b: &[CycloScalar]) -> Option<Vec<CycloScalar>> {
        assert_eq!(b.len(), self.rows);
        let aug = Matrix::from_fn(self.level, self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![CycloScalar::zero(self.level); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = CycloScalar;
    fn index(&self, (i, j): (usize, usize)) -> &CycloScalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut CycloScalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} (r={})", self.rows, self.cols, self.level)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Coordinates of vectors relative to a fixed linearly independent family.
#[derive(Clone, Debug)]
pub struct Subspace {
    level: u32,
    ambient: usize,
    basis: Vec<Vec<CycloScalar>>,
    /// Rows of the ambient space at which the basis matrix has full rank.
    pivot_rows: Vec<usize>,
    /// Inverse of the basis restricted to `pivot_rows`.
    pivot_inverse: Matrix,
}

impl Subspace {
    /// `basis` must be linearly independent.
    pub fn new(level: u32, ambient: usize, basis: Vec<Vec<CycloScalar>>) -> Self {
        let m = Matrix::from_columns(level, ambient, &basis);
        let (_, pivot_rows) = m.transpose().rref();
        assert_eq!(pivot_rows.len(), basis.len(), "basis is not independent");
        let sub = Matrix::from_fn(level, basis.len(), basis.len(), |i, j| {
            basis[j][pivot_rows[i]].clone()
        });
        let pivot_inverse = sub.inverse().expect("independent basis");
        Subspace {
            level,
            ambient,
            basis,
            pivot_rows,
            pivot_inverse,
        }
    }

    /// Image of a matrix, with the deterministic column-space basis.
    pub fn image_of(m: &Matrix) -> Self {
        Self::new(m.level(), m.rows(), m.column_space())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<CycloScalar>] {
        &self.basis
    }

    /// Coordinates of `v` in this basis, or `None` if `v` lies outside the subspace.
    pub fn coordinates(&self, v: &[CycloScalar]) -> Option<Vec<CycloScalar>> {
        let picked: Vec<CycloScalar> = self.pivot_rows.iter().map(|&i| v[i].clone()).collect();
        let coords = self.pivot_inverse.apply(&picked);
        let back = self.combine(&coords);
        (back.as_slice() == v).then_some(coords)
    }

    pub fn combine(&self, coords: &[CycloScalar]) -> Vec<CycloScalar> {
        let mut out = vec![CycloScalar::zero(self.level); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *o += &(c * x);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[CycloScalar]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Dimension of the intersection with another subspace of the same ambient space.
    pub fn intersection_dim(&self, other: &Subspace) -> usize {
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().cloned());
        let sum = Matrix::from_columns(self.level, self.ambient, &cols).rank();
        self.dim() + other.dim() - sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(r: u32, n: i64) -> CycloScalar {
        CycloScalar::from_integer(r, n)
    }

    #[test]
    fn determinant_and_inverse() {
        let r = 5;
        let a = CycloScalar::a_power(r, 1);
        let m = Matrix::from_fn(r, 2, 2, |i, j| match (i, j) {
            (0, 0) => a.clone(),
            (0, 1) => int(r, 1),
            (1, 0) => int(r, 2),
            _ => int(r, 3),
        });
        assert_eq!(m.determinant(), &a * &int(r, 3) - int(r, 2));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(r, 2));
    }

    #[test]
    fn singular_matrix() {
        let r = 3;
        let m = Matrix::from_fn(r, 2, 2, |i, j| int(r, ((i + 1) * (j + 1)) as i64));
        assert!(m.determinant().is_zero());
        assert!(m.inverse().is_none());
        assert_eq!(m.rank(), 1);
        let ns = m.null_space();
        assert_eq!(ns.len(), 1);
        assert!(m.apply(&ns[0]).iter().all(CycloScalar::is_zero));
    }

    #[test]
    fn subspace_coordinates() {
        let r = 4;
        let basis = vec![
            vec![int(r, 1), int(r, 1), int(r, 0)],
            vec![int(r, 0), int(r, 1), int(r, 1)],
        ];
        let s = Subspace::new(r, 3, basis);
        let v = vec![int(r, 2), int(r, 5), int(r, 3)];
        assert_eq!(s.coordinates(&v).unwrap(), vec![int(r, 2), int(r, 3)]);
        assert!(s.coordinates(&[int(r, 1), int(r, 0), int(r, 0)]).is_none());
    }
}
