use super::Field;
use crate::error::{Error, Result};

/// Dense row-major matrix over a field.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn identity(n: usize, like: &F) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { like.one_like() } else { like.zero_like() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows);
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = self.get(i, 0).zero_like();
            for l in 0..self.cols {
                let a = self.get(i, l);
                if !a.vanishes() {
                    acc = acc.plus(&a.times(rhs.get(l, j)));
                }
            }
            acc
        })
    }

    /// Sub-matrix on the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix<F> {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Delete the listed rows and columns.
    pub fn delete(&self, rows: &[usize], cols: &[usize]) -> Matrix<F> {
        let keep_r: Vec<usize> = (0..self.rows).filter(|i| !rows.contains(i)).collect();
        let keep_c: Vec<usize> = (0..self.cols).filter(|j| !cols.contains(j)).collect();
        self.select(&keep_r, &keep_c)
    }

    fn pivot_row(&self, col: usize, from: usize) -> Option<usize> {
        if F::EXACT {
            (from..self.rows).find(|&r| !self.get(r, col).vanishes())
        } else {
            let best = (from..self.rows).max_by(|&a, &b| {
                self.get(a, col)
                    .magnitude()
                    .partial_cmp(&self.get(b, col).magnitude())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })?;
            (!self.get(best, col).vanishes()).then_some(best)
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Determinant by fraction-free Bareiss elimination; the pivot is the first
    /// nonzero entry in row order (largest magnitude for inexact fields).
    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            panic!("determinant of an empty matrix needs a field witness");
        }
        if !F::EXACT {
            return self.det_partial_pivot();
        }
        let mut a = self.clone();
        let mut negate = false;
        let mut prev_inv: Option<F> = None;
        for k in 0..n - 1 {
            let Some(p) = a.pivot_row(k, k) else {
                return a.get(0, 0).zero_like();
            };
            if p != k {
                a.swap_rows(p, k);
                negate = !negate;
            }
            let pivot = a.get(k, k).clone();
            for i in k + 1..n {
                let aik = a.get(i, k).clone();
                for j in k + 1..n {
                    let mut v = a.get(i, j).times(&pivot);
                    if !aik.vanishes() {
                        v = v.minus(&aik.times(a.get(k, j)));
                    }
                    if let Some(inv) = &prev_inv {
                        v = v.times(inv);
                    }
                    a.set(i, j, v);
                }
                a.set(i, k, pivot.zero_like());
            }
            prev_inv = Some(pivot.recip().expect("nonzero pivot"));
        }
        let d = a.get(n - 1, n - 1).clone();
        if negate {
            d.negate()
        } else {
            d
        }
    }

    /// Gaussian elimination on the largest-magnitude pivot; only a literal zero column counts as singular.
    fn det_partial_pivot(&self) -> F {
        let n = self.rows;
        let mut a = self.clone();
        let mut d = a.get(0, 0).one_like();
        for k in 0..n {
            let p = (k..n)
                .max_by(|&x, &y| a.get(x, k).magnitude().total_cmp(&a.get(y, k).magnitude()))
                .expect("nonempty range");
            if a.get(p, k).magnitude() == 0.0 {
                return d.zero_like();
            }
            if p != k {
                a.swap_rows(p, k);
                d = d.negate();
            }
            let pivot = a.get(k, k).clone();
            d = d.times(&pivot);
            let inv = pivot.recip().expect("nonzero pivot");
            for i in k + 1..n {
                let f = a.get(i, k).times(&inv);
                for j in k + 1..n {
                    let v = a.get(i, j).minus(&f.times(a.get(k, j)));
                    a.set(i, j, v);
                }
            }
        }
        d
    }

    /// Row-reduce a copy; returns the reduced matrix and the pivot columns.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = a.pivot_row(c, r) else { continue };
            a.swap_rows(p, r);
            let inv = a.get(r, c).recip().expect("nonzero pivot");
            for j in 0..self.cols {
                let v = a.get(r, j).times(&inv);
                a.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = a.get(i, c).clone();
                if f.vanishes() {
                    continue;
                }
                for j in 0..self.cols {
                    let v = a.get(i, j).minus(&f.times(a.get(r, j)));
                    a.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Unique solution of A·x = b.
    pub fn solve(&self, b: &[F]) -> Result<Vec<F>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(b.len(), self.rows);
        let n = self.rows;
        let aug = Matrix::from_fn(n, n + 1, |i, j| if j < n { self.get(i, j).clone() } else { b[i].clone() });
        let (red, pivots) = aug.rref();
        let rank = pivots.iter().filter(|&&c| c < n).count();
        if rank < n {
            return Err(Error::SingularSystem { rank, dim: n });
        }
        Ok((0..n).map(|i| red.get(i, n).clone()).collect())
    }

    pub fn inverse(&self) -> Result<Matrix<F>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                self.get(0, 0).one_like()
            } else {
                self.get(0, 0).zero_like()
            }
        });
        let (red, pivots) = aug.rref();
        let rank = pivots.iter().filter(|&&c| c < n).count();
        if rank < n {
            return Err(Error::SingularSystem { rank, dim: n });
        }
        Ok(Matrix::from_fn(n, n, |i, j| red.get(i, n + j).clone()))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

/// Factored square system A·x = b, reusable across right-hand sides.
#[derive(Clone, Debug)]
pub struct Factorization<F> {
    inverse: Matrix<F>,
}

impl<F: Field> Factorization<F> {
    pub fn new(a: &Matrix<F>) -> Result<Self> {
        Ok(Factorization { inverse: a.inverse()? })
    }

    pub fn solve(&self, b: &[F]) -> Vec<F> {
        let n = self.inverse.rows();
        (0..n)
            .map(|i| {
                let mut acc = b[0].zero_like();
                for (j, bj) in b.iter().enumerate() {
                    if !bj.vanishes() {
                        let a = self.inverse.get(i, j);
                        if !a.vanishes() {
                            acc = acc.plus(&a.times(bj));
                        }
                    }
                }
                acc
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat, CyclotomicField, Rational};

    #[test]
    fn float_det_keeps_tiny_values() {
        use crate::algebra::Complex;
        let e = 1e-9;
        // diag(e, e, e) with a permutation: determinant -e^3, far below any absolute cutoff
        let z = Complex::new(0.0, 0.0);
        let v = Complex::new(e, 0.0);
        let m = Matrix::from_rows(vec![vec![z, v, z], vec![v, z, z], vec![z, z, v]]);
        let d = m.det();
        assert!((d.re + e * e * e).abs() < 1e-40 && d.im == 0.0, "{d}");
        let singular = Matrix::from_rows(vec![vec![v, v], vec![v, v]]);
        assert_eq!(singular.det().norm(), 0.0);
    }

    fn cofactor_det(m: &Matrix<Rational>) -> Rational {
        let n = m.rows();
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = int(0);
        for j in 0..n {
            let minor = m.delete(&[0], &[j]);
            let term = m.get(0, j) * cofactor_det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let vals = [3, -1, 4, 1, -5, 9, 2, 6, -5, 3, 5, 8, -9, 7, 9, 3, 2, 3, -8, 4, 6, 2, 6, 4, 3];
        let m = Matrix::from_fn(5, 5, |i, j| rat(vals[i * 5 + j], 1 + ((i + j) % 3) as i64));
        assert_eq!(m.det(), cofactor_det(&m));
        let id = Matrix::identity(3, &int(0));
        assert_eq!(id.det(), int(1));
    }

    #[test]
    fn cyclotomic_two_by_two() {
        let f = CyclotomicField::new(5);
        let m = Matrix::from_rows(vec![vec![f.one(), f.one()], vec![f.q_pow(1), f.q_pow(2)]]);
        assert_eq!(m.det(), f.q_pow(2).minus(&f.q_pow(1)));
    }

    #[test]
    fn solve_and_singular() {
        let a = Matrix::from_rows(vec![vec![int(2), int(1)], vec![int(1), int(3)]]);
        let x = a.solve(&[int(5), int(10)]).unwrap();
        assert_eq!(x, vec![int(1), int(3)]);
        let s = Matrix::from_rows(vec![vec![int(1), int(2)], vec![int(2), int(4)]]);
        assert_eq!(s.solve(&[int(1), int(1)]), Err(Error::SingularSystem { rank: 1, dim: 2 }));
        assert_eq!(s.det(), int(0));
    }
}
