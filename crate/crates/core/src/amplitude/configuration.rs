use crate::algebra::{Field, Matrix};
use crate::error::{Error, Result};
use crate::kinematics::KSubset;

/// n points in projective (k-1)-space as the columns of a k×n matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct PointConfiguration<F> {
    k: usize,
    n: usize,
    matrix: Matrix<F>,
}

impl<F: Field> PointConfiguration<F> {
    pub fn new(matrix: Matrix<F>) -> Self {
        PointConfiguration { k: matrix.rows(), n: matrix.cols(), matrix }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    /// Entry in row r (0-based) of column a (1-based).
    pub fn entry(&self, r: usize, a: usize) -> &F {
        self.matrix.get(r, a - 1)
    }

    /// Inhomogeneous coordinate z_{a,i} (a 1-based point, i in 1..k), i.e. row i of column a.
    pub fn z(&self, a: usize, i: usize) -> &F {
        self.matrix.get(i, a - 1)
    }

    /// Determinant of the columns in the order given (1-based, may wrap past n).
    pub fn minor_ordered(&self, cols: &[usize]) -> F {
        assert_eq!(cols.len(), self.k);
        let idx: Vec<usize> = cols.iter().map(|&c| (c - 1) % self.n).collect();
        let rows: Vec<usize> = (0..self.k).collect();
        self.matrix.select(&rows, &idx).det()
    }

    /// p_J with the columns of J in increasing order.
    pub fn minor(&self, j: &KSubset) -> F {
        self.minor_ordered(j.elements())
    }

    /// Sub-matrix of the columns of J.
    pub fn columns(&self, cols: &[usize]) -> Matrix<F> {
        let idx: Vec<usize> = cols.iter().map(|&c| (c - 1) % self.n).collect();
        let rows: Vec<usize> = (0..self.k).collect();
        self.matrix.select(&rows, &idx)
    }

    /// Rescale columns so that the first row is all ones.
    pub fn to_inhomogeneous(&self) -> Result<Self> {
        let mut m = self.matrix.clone();
        for c in 0..self.n {
            let inv = self
                .matrix
                .get(0, c)
                .recip()
                .ok_or_else(|| Error::InvalidInput(format!("column {} has vanishing first entry", c + 1)))?;
            for r in 0..self.k {
                m.set(r, c, self.matrix.get(r, c).times(&inv));
            }
        }
        Ok(PointConfiguration::new(m))
    }

    pub fn is_inhomogeneous(&self) -> bool {
        (0..self.n).all(|c| self.matrix.get(0, c).minus(&self.matrix.get(0, c).one_like()).vanishes())
    }

    /// Cyclic relabeling: new column a is old column a + t.
    pub fn shift_columns(&self, t: usize) -> Self {
        let m = Matrix::from_fn(self.k, self.n, |r, c| self.matrix.get(r, (c + t) % self.n).clone());
        PointConfiguration::new(m)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> PointConfiguration<G> {
        PointConfiguration::new(self.matrix.map(f))
    }
}
