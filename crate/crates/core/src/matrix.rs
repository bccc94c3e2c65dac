//! Dense matrices of polynomials. Rows index generators, columns index
//! relations throughout the crate.

use crate::modgb::MVec;
use crate::poly::Polynomial;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<F: Scalar> {
    pub nrows: usize,
    pub ncols: usize,
    entries: Vec<Polynomial<F>>,
}

impl<F: Scalar> Matrix<F> {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Matrix {
            nrows,
            ncols,
            entries: vec![Polynomial::zero(); nrows * ncols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial<F>>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        for r in &rows {
            assert_eq!(r.len(), ncols, "ragged matrix");
        }
        Matrix {
            nrows,
            ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Build from column vectors living in R^nrows.
    pub fn from_cols(nrows: usize, cols: &[MVec<F>]) -> Self {
        let mut m = Matrix::zero(nrows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), nrows, "column rank mismatch");
            for (i, p) in col.iter().enumerate() {
                *m.at_mut(i, j) = p.clone();
            }
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.entries[i * self.ncols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Polynomial<F> {
        &mut self.entries[i * self.ncols + j]
    }

    pub fn col(&self, j: usize) -> MVec<F> {
        (0..self.nrows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn cols(&self) -> Vec<MVec<F>> {
        (0..self.ncols).map(|j| self.col(j)).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial<F>> {
        (0..self.ncols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix<F> {
        let mut t = Matrix::zero(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn delete_row_col(&self, row: usize, col: usize) -> Matrix<F> {
        let mut m = Matrix::zero(self.nrows - 1, self.ncols - 1);
        let mut ii = 0;
        for i in 0..self.nrows {
            if i == row {
                continue;
            }
            let mut jj = 0;
            for j in 0..self.ncols {
                if j == col {
                    continue;
                }
                *m.at_mut(ii, jj) = self.at(i, j).clone();
                jj += 1;
            }
            ii += 1;
        }
        m
    }

    pub fn keep_cols(&self, keep: &[usize]) -> Matrix<F> {
        let mut m = Matrix::zero(self.nrows, keep.len());
        for (jj, &j) in keep.iter().enumerate() {
            for i in 0..self.nrows {
                *m.at_mut(i, jj) = self.at(i, j).clone();
            }
        }
        m
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix<F>) -> Matrix<F> {
        let mut m = Matrix::zero(self.nrows + other.nrows, self.ncols + other.ncols);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                *m.at_mut(i, j) = self.at(i, j).clone();
            }
        }
        for i in 0..other.nrows {
            for j in 0..other.ncols {
                *m.at_mut(self.nrows + i, self.ncols + j) = other.at(i, j).clone();
            }
        }
        m
    }

    /// Kronecker product with the g×g identity: entry A[i][j] becomes the
    /// block A[i][j]·Id_g. Index layout: row (i,γ) = i*g + γ.
    pub fn kron_identity(&self, g: usize) -> Matrix<F> {
        let mut m = Matrix::zero(self.nrows * g, self.ncols * g);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                let e = self.at(i, j);
                if e.is_zero() {
                    continue;
                }
                for gamma in 0..g {
                    *m.at_mut(i * g + gamma, j * g + gamma) = e.clone();
                }
            }
        }
        m
    }

    pub fn map_entries(&self, f: impl Fn(&Polynomial<F>) -> Polynomial<F>) -> Matrix<F> {
        Matrix {
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::PolyRing;
    use crate::scalar::Fp;

    #[test]
    fn kron_identity_layout() {
        let r = PolyRing::<Fp>::new(vec!["x".into()], 5);
        let x = parse_poly(&r, "x").unwrap();
        let a = Matrix::from_rows(vec![vec![x.clone(), Polynomial::zero()]]);
        let k = a.kron_identity(2);
        assert_eq!(k.nrows, 2);
        assert_eq!(k.ncols, 4);
        assert_eq!(*k.at(0, 0), x);
        assert_eq!(*k.at(1, 1), x);
        assert!(k.at(0, 2).is_zero());
    }
}
