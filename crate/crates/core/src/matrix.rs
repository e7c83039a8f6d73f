//! Small dense matrices: inverses, ranks and kernels by Gauss-Jordan elimination.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<Vec<F::Elem>>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let z = field.zero();
        Matrix { field, rows, cols, data: vec![vec![z; cols]; rows] }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field.clone(), n, n);
        for i in 0..n {
            m.data[i][i] = field.one();
        }
        m
    }

    pub fn from_rows(field: F, cols: usize, data: Vec<Vec<F::Elem>>) -> Self {
        assert!(data.iter().all(|r| r.len() == cols));
        Matrix { field, rows: data.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r][c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r]
    }

    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        self.data.clone()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !f.is_zero(b) {
                        let prod = f.mul(a, b);
                        f.add_assign(&mut out.data[i][j], &prod);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        self.data
            .iter()
            .map(|row| {
                let mut acc = f.zero();
                for (a, b) in row.iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        f.add_assign(&mut acc, &f.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    /// `self - c·I` for a square matrix.
    pub fn sub_scalar(&self, c: &F::Elem) -> Self {
        let mut out = self.clone();
        for i in 0..self.rows.min(self.cols) {
            out.data[i][i] = self.field.sub(&out.data[i][i], c);
        }
        out
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.field.clone(), self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(|x| self.field.is_zero(x))
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = &self.field;
        let mut m = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !f.is_zero(&m[i][c])) else {
                continue;
            };
            m.swap(r, p);
            let inv = f.inv(&m[r][c]).expect("nonzero pivot");
            for x in m[r].iter_mut() {
                *x = f.mul(x, &inv);
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == r || f.is_zero(&row[c]) {
                    continue;
                }
                let factor = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !f.is_zero(y) {
                        f.sub_mul_assign(x, &factor, y);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data: m }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let f = &self.field;
        let mut aug = Self::zeros(f.clone(), n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i][j] = self.data[i][j].clone();
            }
            aug.data[i][n + i] = f.one();
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let data = red.data.into_iter().map(|row| row[n..].to_vec()).collect();
        Some(Matrix { field: f.clone(), rows: n, cols: n, data })
    }

    /// A basis of `{v : self·v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let (red, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(&red.data[r][free]);
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use alloc::vec;

    #[test]
    fn inverse_and_kernel() {
        let f = PrimeField::new(101).unwrap();
        let m = Matrix::from_rows(f, 2, vec![vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f, 2));
        let s = Matrix::from_rows(f, 3, vec![vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(s.rank(), 1);
        let k = s.kernel();
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(s.mul_vec(&v).iter().all(|x| *x == 0));
        }
        assert!(s.inverse().is_none());
    }
}
