use std::ops::{Index, IndexMut};

use super::scalar::Scalar;

/// Dense row-major matrix over a [`Scalar`].
///
/// Sizes in this crate are small (cells of a complex), so everything is kept
/// dense and simple; in exact mode all operations, including `solve` and
/// `inverse`, are exact.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Mat<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Square matrix from integer entries scaled by `num/den`.
    pub fn from_ints_scaled(entries: &[&[i64]], num: i64, den: i64) -> Self {
        let scale = S::ratio(num, den);
        let rows = entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&e| S::from_int(e) * scale.clone())
                    .collect()
            })
            .collect();
        Mat::from_rows(rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Mat<S> {
        Mat::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, rhs: &Mat<S>) -> Mat<S> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        Mat::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols)
                .map(|k| self[(r, k)].clone() * rhs[(k, c)].clone())
                .sum()
        })
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| self[(r, c)].clone() * v[c].clone())
                    .sum()
            })
            .collect()
    }

    pub fn add(&self, rhs: &Mat<S>) -> Mat<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() + rhs[(r, c)].clone()
        })
    }

    pub fn sub(&self, rhs: &Mat<S>) -> Mat<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() - rhs[(r, c)].clone()
        })
    }

    pub fn scale(&self, s: &S) -> Mat<S> {
        Mat::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() * s.clone()
        })
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Mat<T> {
        Mat::from_fn(self.rows, self.cols, |r, c| f(&self[(r, c)]))
    }

    pub fn to_f64(&self) -> Mat<f64> {
        self.map(Scalar::to_f64)
    }

    pub fn trace(&self) -> S {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data
            .iter()
            .map(|x| x.to_f64().abs())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, rhs: &Mat<S>) -> bool {
        (self.rows, self.cols) == (rhs.rows, rhs.cols)
            && self
                .data
                .iter()
                .zip(&rhs.data)
                .all(|(a, b)| a.approx_eq(b))
    }

    /// Solve `self * X = b` by Gauss-Jordan elimination with partial
    /// pivoting.  Returns `None` when the matrix is singular.
    pub fn solve(&self, b: &Mat<S>) -> Option<Mat<S>> {
        assert_eq!(self.rows, self.cols, "solve requires a square matrix");
        assert_eq!(self.rows, b.rows, "dimension mismatch");
        let n = self.rows;
        let mut a = self.clone();
        let mut x = b.clone();
        for col in 0..n {
            let pivot = (col..n)
                .filter(|&r| !a[(r, col)].is_zero())
                .max_by(|&r, &s| {
                    a[(r, col)]
                        .to_f64()
                        .abs()
                        .total_cmp(&a[(s, col)].to_f64().abs())
                })?;
            if pivot != col {
                for c in 0..n {
                    a.data.swap(pivot * n + c, col * n + c);
                }
                for c in 0..x.cols {
                    x.data.swap(pivot * x.cols + c, col * x.cols + c);
                }
            }
            let inv = a[(col, col)].clone().recip();
            for c in 0..n {
                a[(col, c)] *= inv.clone();
            }
            for c in 0..x.cols {
                x[(col, c)] *= inv.clone();
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for c in 0..n {
                    let t = factor.clone() * a[(col, c)].clone();
                    a[(r, c)] -= t;
                }
                for c in 0..x.cols {
                    let t = factor.clone() * x[(col, c)].clone();
                    x[(r, c)] -= t;
                }
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat<S>> {
        self.solve(&Mat::identity(self.rows))
    }
}

impl<S> Index<(usize, usize)> for Mat<S> {
    type Output = S;

    fn index(&self, (r, c): (usize, usize)) -> &S {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl<S> IndexMut<(usize, usize)> for Mat<S> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut S {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &mut self.data[r * self.cols + c]
    }
}
