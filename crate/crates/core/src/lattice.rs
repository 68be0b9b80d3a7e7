//! Dense integer and rational matrices, Hermite normal form and the lattice
//! computations built on it (kernels, indices, integer solves).

use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};

/// A dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

impl IntMatrix {
    /// Builds a matrix from rows. Returns `None` if the rows are ragged.
    pub fn from_rows(rows: &[Vec<i64>]) -> Option<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return None;
        }
        Some(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in apply");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    /// Determinant by fraction-free elimination.
    pub fn det(&self) -> i64 {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let rows: Vec<Vec<i128>> = self
            .to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(i128::from).collect())
            .collect();
        bareiss_det(rows) as i64
    }

    /// Exact inverse if the matrix is invertible over the integers.
    pub fn inverse(&self) -> Option<IntMatrix> {
        if !self.is_square() || self.det().abs() != 1 {
            return None;
        }
        let inv = rational_inverse(&to_rational(self))?;
        let mut out = Self::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = inv[i][j];
                if !x.is_integer() {
                    return None;
                }
                out.set(i, j, x.to_integer());
            }
        }
        Some(out)
    }

    /// Smallest `k >= 1` with `self^k = I`, searching up to `bound`.
    pub fn multiplicative_order(&self, bound: usize) -> Option<usize> {
        if !self.is_square() {
            return None;
        }
        let mut power = self.clone();
        for k in 1..=bound {
            if power.is_identity() {
                return Some(k);
            }
            power = power.mul(self);
        }
        None
    }
}

fn bareiss_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

pub(crate) fn to_rational(m: &IntMatrix) -> Vec<Vec<Rational64>> {
    m.to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(Rational64::from_integer).collect())
        .collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rational64>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in 0..cols {
                    let delta = f * m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank over the rationals of a list of integer vectors.
pub fn rational_rank(vectors: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<Rational64>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| Rational64::from_integer(x)).collect())
        .collect();
    rref(&mut m).len()
}

/// Basis of `{x : m x = 0}` over the rationals.
pub fn rational_nullspace(m: &[Vec<Rational64>], cols: usize) -> Vec<Vec<Rational64>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational64::zero(); cols];
            x[f] = Rational64::one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -a[r][f];
            }
            x
        })
        .collect()
}

/// Solves `a x = b` over the rationals when the solution is unique.
pub fn solve_rational_unique(a: &[Vec<Rational64>], b: &[Rational64]) -> Option<Vec<Rational64>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Rational64>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&cols) || pivots.len() != cols {
        return None;
    }
    Some((0..cols).map(|r| aug[r][cols]).collect())
}

fn rational_inverse(a: &[Vec<Rational64>]) -> Option<Vec<Vec<Rational64>>> {
    let n = a.len();
    let mut aug: Vec<Vec<Rational64>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Row-style Hermite normal form with the unimodular transform `u`,
/// so that `u * a = h`. Nonzero rows of `h` come first.
fn hnf_with_transform(a: &[Vec<i128>]) -> (Vec<Vec<i128>>, Vec<Vec<i128>>) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut h = a.to_vec();
    let mut u: Vec<Vec<i128>> = (0..rows)
        .map(|i| (0..rows).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Euclid on column c below row r until one nonzero entry remains.
        loop {
            let nonzero: Vec<usize> = (r..rows).filter(|&i| h[i][c] != 0).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let piv = *nonzero.iter().min_by_key(|&&i| h[i][c].abs()).unwrap();
            for &i in &nonzero {
                if i == piv {
                    continue;
                }
                let f = Integer::div_floor(&h[i][c], &h[piv][c]);
                for j in 0..cols {
                    h[i][j] -= f * h[piv][j];
                }
                for j in 0..rows {
                    u[i][j] -= f * u[piv][j];
                }
            }
        }
        let Some(p) = (r..rows).find(|&i| h[i][c] != 0) else {
            continue;
        };
        h.swap(r, p);
        u.swap(r, p);
        if h[r][c] < 0 {
            h[r].iter_mut().for_each(|x| *x = -*x);
            u[r].iter_mut().for_each(|x| *x = -*x);
        }
        for i in 0..r {
            let f = Integer::div_floor(&h[i][c], &h[r][c]);
            if f != 0 {
                for j in 0..cols {
                    h[i][j] -= f * h[r][j];
                }
                for j in 0..rows {
                    u[i][j] -= f * u[r][j];
                }
            }
        }
        r += 1;
    }
    (h, u)
}

fn widen(vectors: &[Vec<i64>]) -> Vec<Vec<i128>> {
    vectors
        .iter()
        .map(|v| v.iter().map(|&x| i128::from(x)).collect())
        .collect()
}

fn narrow(v: &[i128]) -> Vec<i64> {
    v.iter()
        .map(|&x| i64::try_from(x).expect("lattice coefficient overflow"))
        .collect()
}

/// Hermite basis of the lattice spanned by `generators` (each of length `dim`).
pub fn lattice_basis(generators: &[Vec<i64>], dim: usize) -> Vec<Vec<i64>> {
    if generators.is_empty() {
        return Vec::new();
    }
    let (h, _) = hnf_with_transform(&widen(generators));
    h.iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .map(|r| {
            debug_assert_eq!(r.len(), dim);
            narrow(r)
        })
        .collect()
}

/// Index of the lattice spanned by `generators` in `Z^dim`, or `None` when
/// the lattice does not have full rank.
pub fn lattice_index(generators: &[Vec<i64>], dim: usize) -> Option<u64> {
    if dim == 0 {
        return Some(1);
    }
    let basis = lattice_basis(generators, dim);
    if basis.len() != dim {
        return None;
    }
    let mut index: u64 = 1;
    for (i, row) in basis.iter().enumerate() {
        // Full-rank Hermite form is upper triangular with positive diagonal.
        index *= row[i].unsigned_abs();
    }
    Some(index)
}

/// Saturated basis of `{x in Z^n : m x = 0}`.
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<i64>> {
    let n = m.n_cols();
    if m.n_rows() == 0 {
        return (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
    }
    let at = widen(&m.transpose().to_rows());
    let (h, u) = hnf_with_transform(&at);
    let kernel: Vec<Vec<i64>> = h
        .iter()
        .zip(&u)
        .filter(|(row, _)| row.iter().all(|&x| x == 0))
        .map(|(_, urow)| narrow(urow))
        .collect();
    lattice_basis(&kernel, n)
}

/// An integer solution of `m x = b`, if one exists.
pub fn solve_integer(m: &IntMatrix, b: &[i64]) -> Option<Vec<i64>> {
    let n = m.n_cols();
    assert_eq!(m.n_rows(), b.len());
    if n == 0 {
        return b.iter().all(|&x| x == 0).then(Vec::new);
    }
    // u * m^T = h, so m * u^T = h^T and x = u^T y with sum_i y_i h_i = b.
    let at = widen(&m.transpose().to_rows());
    let (h, u) = hnf_with_transform(&at);
    let mut rest: Vec<i128> = b.iter().map(|&x| i128::from(x)).collect();
    let mut y = vec![0i128; n];
    for (i, row) in h.iter().enumerate() {
        let Some(pc) = row.iter().position(|&x| x != 0) else {
            break;
        };
        if rest[..pc].iter().any(|&x| x != 0) {
            return None;
        }
        if rest[pc] % row[pc] != 0 {
            return None;
        }
        let yi = rest[pc] / row[pc];
        y[i] = yi;
        for (r, &hv) in rest.iter_mut().zip(row) {
            *r -= yi * hv;
        }
    }
    if rest.iter().any(|&x| x != 0) {
        return None;
    }
    let x: Vec<i128> = (0..n).map(|j| (0..n).map(|i| u[i][j] * y[i]).sum()).collect();
    Some(narrow(&x))
}

/// Order of the torsion subgroup of `Z^dim / L`, where `L` is spanned by
/// `generators`: the gcd of the maximal minors of a basis of `L`.
pub fn quotient_torsion(generators: &[Vec<i64>], dim: usize) -> u64 {
    let basis = lattice_basis(generators, dim);
    let k = basis.len();
    if k == 0 {
        return 1;
    }
    let mut g: i128 = 0;
    for cols in combinations(dim, k) {
        let minor: Vec<Vec<i128>> = basis
            .iter()
            .map(|r| cols.iter().map(|&c| i128::from(r[c])).collect())
            .collect();
        g = g.gcd(&bareiss_det(minor));
        if g == 1 {
            break;
        }
    }
    g.unsigned_abs() as u64
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Scales a rational vector to a primitive integer vector.
pub fn primitive_integer_vector(v: &[Rational64]) -> Vec<i64> {
    let den = v.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i64> = v.iter().map(|x| (x * den).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, x| acc.gcd(x));
    if g == 0 {
        return ints;
    }
    ints.into_iter().map(|x| x / g).collect()
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn rdot(a: &[i64], b: &[Rational64]) -> Rational64 {
    a.iter()
        .zip(b)
        .map(|(&x, y)| y * x)
        .fold(Rational64::zero(), |acc, t| acc + t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(a.det(), 1);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert_eq!(m(&[&[2, 0], &[0, 1]]).inverse(), None);
        assert_eq!(m(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]).det(), 1);
    }

    #[test]
    fn orders() {
        let swap = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(swap.multiplicative_order(10), Some(2));
        assert_eq!(m(&[&[1, 1], &[0, 1]]).multiplicative_order(50), None);
    }

    #[test]
    fn index_of_sublattices() {
        assert_eq!(lattice_index(&[vec![2]], 1), Some(2));
        assert_eq!(lattice_index(&[vec![1, 1], vec![1, -1]], 2), Some(2));
        assert_eq!(lattice_index(&[vec![1, 1]], 2), None);
        assert_eq!(lattice_index(&[vec![4, 6], vec![6, 9], vec![2, 4]], 2), Some(2));
    }

    #[test]
    fn kernel_is_saturated() {
        let a = m(&[&[2, 4, 6]]);
        let k = integer_kernel(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(a.apply(v), vec![0]);
        }
        // The kernel of (2,4,6) is the saturated lattice x+2y+3z=0 of index 1 in its span.
        assert_eq!(quotient_torsion(&k, 3), 1);
    }

    #[test]
    fn integer_solves() {
        let a = m(&[&[2], &[-2]]);
        assert_eq!(solve_integer(&a, &[1, -1]), None);
        let b = m(&[&[1, -1], &[-1, 1]]);
        let x = solve_integer(&b, &[1, -1]).unwrap();
        assert_eq!(b.apply(&x), vec![1, -1]);
        let c = m(&[&[3, 5]]);
        let y = solve_integer(&c, &[1]).unwrap();
        assert_eq!(c.apply(&y), vec![1]);
    }

    #[test]
    fn torsion_of_root_lattices() {
        // Roots of SL2 in its weight lattice: 2Z in Z.
        assert_eq!(quotient_torsion(&[vec![2]], 1), 2);
        // Roots of GL2 span a saturated rank-one lattice.
        assert_eq!(quotient_torsion(&[vec![1, -1]], 2), 1);
    }
}
