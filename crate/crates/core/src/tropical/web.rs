//! The web chart of the positive Grassmannian and its Plücker minors.
//!
//! The matrix is `[I_k | W]` where column `k+1+t` of `W` has a one in row `k` and, in row `k-m`,
//! the sum over chains `t ≥ j_1 ≥ … ≥ j_m ≥ 0` of `∏_l y^(l)_{j_l}` with `y^(l)_0 = 1`.
//! The torus is already fixed, leaving `(k-1)(n-k-1)` variables `y^(l)_j`, `1 ≤ j ≤ n-k-1`.

use crate::kinematics::KSubset;

use super::laurent::Laurent;

/// Shape of the reduced web chart.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WebChart {
    pub k: usize,
    pub n: usize,
}

impl WebChart {
    pub fn new(k: usize, n: usize) -> Self {
        assert!(k >= 2 && n >= k + 2, "web chart needs 2 ≤ k ≤ n-2");
        WebChart { k, n }
    }

    pub fn dim(&self) -> usize {
        (self.k - 1) * (self.n - self.k - 1)
    }

    /// Index of `y^(l)_j` for `1 ≤ l ≤ k-1`, `1 ≤ j ≤ n-k-1`.
    pub fn var(&self, l: usize, j: usize) -> usize {
        (l - 1) * (self.n - self.k - 1) + (j - 1)
    }

    /// Human-readable names; `x, y, z, w, …` for the successive chains.
    pub fn var_name(&self, idx: usize) -> String {
        let per = self.n - self.k - 1;
        let (l, j) = (idx / per + 1, idx % per + 1);
        const LETTERS: [&str; 6] = ["x", "y", "z", "w", "u", "v"];
        match LETTERS.get(l - 1) {
            Some(s) => format!("{s}{j}"),
            None => format!("y{l}_{j}"),
        }
    }

    fn y(&self, l: usize, j: usize) -> Laurent {
        if j == 0 {
            Laurent::one(self.dim())
        } else {
            Laurent::var(self.dim(), self.var(l, j))
        }
    }

    /// Chain sum `Σ_{t ≥ j_1 ≥ … ≥ j_m ≥ 0} ∏ y^(l)_{j_l}`.
    fn chain_sum(&self, m: usize, t: usize) -> Laurent {
        let d = self.dim();
        // h[j] = Σ over chains with j_l = j of ∏_{l' ≥ l} y^(l')_{j_l'}
        let mut h: Vec<Laurent> = (0..=t).map(|j| self.y(m, j)).collect();
        for l in (1..m).rev() {
            let mut prefix = Laurent::zero(d);
            let mut next = Vec::with_capacity(t + 1);
            for (j, hj) in h.iter().enumerate() {
                prefix = prefix.add(hj);
                next.push(self.y(l, j).mul(&prefix));
            }
            h = next;
        }
        h.iter().fold(Laurent::zero(d), |acc, p| acc.add(p))
    }

    /// The `k × n` matrix of polynomials.
    pub fn matrix(&self) -> Vec<Vec<Laurent>> {
        let (k, n, d) = (self.k, self.n, self.dim());
        let mut m = vec![vec![Laurent::zero(d); n]; k];
        for (r, row) in m.iter_mut().enumerate() {
            row[r] = Laurent::one(d);
        }
        for t in 0..n - k {
            let col = k + t;
            m[k - 1][col] = Laurent::one(d);
            for mm in 1..k {
                m[k - 1 - mm][col] = self.chain_sum(mm, t);
            }
        }
        m
    }

    /// Plücker minor `p_J` with columns in increasing order.
    pub fn minor(&self, matrix: &[Vec<Laurent>], j: &KSubset) -> Laurent {
        let sub: Vec<Vec<Laurent>> =
            matrix.iter().map(|row| j.elements().iter().map(|&c| row[c - 1].clone()).collect()).collect();
        Laurent::det(&sub, self.dim())
    }

    /// All minors in lexicographic order of `J`.
    pub fn minors(&self) -> Vec<(KSubset, Laurent)> {
        let m = self.matrix();
        KSubset::all(self.k, self.n)
            .into_iter()
            .map(|j| {
                let p = self.minor(&m, &j);
                (j, p)
            })
            .collect()
    }
}

/// The web matrix of `G(k,n)` in the reduced chart.
pub fn web_matrix(k: usize, n: usize) -> Vec<Vec<Laurent>> {
    WebChart::new(k, n).matrix()
}

/// Claim-chart polynomials `P_i = Σ_j x_{i,j}` and
/// `Q_j = Σ_{r=0}^{k-1} x_{1,j}⋯x_{k-1-r,j} · x_{k-r,j+1}⋯x_{k-1,j+1}`,
/// in variables `x_{i,j}` at index `(i-1)(n-k) + (j-1)`.
pub fn claim_polynomials(k: usize, n: usize) -> (Vec<Laurent>, Vec<Laurent>) {
    let cols = n - k;
    let vars = (k - 1) * cols;
    let x = |i: usize, j: usize| Laurent::var(vars, (i - 1) * cols + (j - 1));
    let p = (1..k).map(|i| (1..=cols).fold(Laurent::zero(vars), |acc, j| acc.add(&x(i, j)))).collect();
    let q = (1..cols)
        .map(|j| {
            (0..k).fold(Laurent::zero(vars), |acc, r| {
                let mono =
                    (1..k).fold(Laurent::one(vars), |m, i| m.mul(&if i < k - r { x(i, j) } else { x(i, j + 1) }));
                acc.add(&mono)
            })
        })
        .collect();
    (p, q)
}

/// Map from claim variables `x_{i,j}` to the web chart: `x_{i,1} ↦ 1`, `x_{i,j} ↦ y^(k-i)_{j-1}`.
pub fn claim_to_web(k: usize, n: usize, p: &Laurent) -> Laurent {
    let cols = n - k;
    let chart = WebChart::new(k, n);
    p.relabel(chart.dim(), |idx| {
        let (i, j) = (idx / cols + 1, idx % cols + 1);
        (j > 1).then(|| chart.var(k - i, j - 1))
    })
}
