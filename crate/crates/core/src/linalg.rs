//! Exact linear algebra over the rationals: dense helpers, fraction-free
//! elimination, inertia by congruence, and a small sparse matrix type.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

pub type QMatrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> QMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

pub fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Inverse by Gauss-Jordan elimination; `None` when singular.
pub fn inverse(m: &[Vec<Rational>]) -> Option<QMatrix> {
    let n = m.len();
    let mut a: QMatrix = m.to_vec();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &f * &a[col][j];
                    a[r][j] -= t;
                    let t = &f * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

/// Solves `m x = b` for square nonsingular `m`.
pub fn solve(m: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    inverse(m).map(|inv| mat_vec(&inv, b))
}

/// Multiplies every row by the lcm of the denominators so the matrix becomes integral.
/// The scale is positive, so rank, definiteness and inertia are unchanged.
pub fn clear_denominators(m: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    let mut l = BigInt::one();
    for row in m {
        for x in row {
            l = l.lcm(x.denom());
        }
    }
    m.iter()
        .map(|row| row.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect())
        .collect()
}

/// Fraction-free (Bareiss) elimination with row pivoting. Returns the rank.
pub fn bareiss_rank(m: &[Vec<BigInt>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                a[r][c] = v / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Leading principal minors of a square matrix via fraction-free elimination without pivoting.
/// Stops at the first vanishing minor (later ones are not computable without pivoting).
pub fn leading_minors(m: &[Vec<Rational>]) -> Vec<BigInt> {
    let mut a = clear_denominators(m);
    let n = a.len();
    let mut prev = BigInt::one();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let pivot = a[k][k].clone();
        out.push(pivot.clone());
        if pivot.is_zero() {
            break;
        }
        for r in k + 1..n {
            for c in k + 1..n {
                let v = &pivot * &a[r][c] - &a[r][k] * &a[k][c];
                a[r][c] = v / &prev;
            }
        }
        prev = pivot;
    }
    out
}

/// Sylvester's criterion with exact pivots.
pub fn is_positive_definite(m: &[Vec<Rational>]) -> bool {
    let minors = leading_minors(m);
    minors.len() == m.len() && minors.iter().all(|d| d.is_positive())
}

/// Inertia `(positive, negative, zero)` of a symmetric rational matrix, by
/// diagonalizing the form with congruence transformations.
pub fn inertia(m: &[Vec<Rational>]) -> (usize, usize, usize) {
    let mut a = m.to_vec();
    let n = a.len();
    let (mut pos, mut neg) = (0, 0);
    let mut k = 0;
    while k < n {
        if a[k][k].is_zero() {
            // Bring a nonzero diagonal entry to position k, or manufacture one.
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // Replace e_k by e_k + e_j: diagonal becomes 2 a_kj.
                for c in 0..n {
                    let t = a[j][c].clone();
                    a[k][c] += t;
                }
                for r in 0..n {
                    let t = a[r][j].clone();
                    a[r][k] += t;
                }
            } else {
                k += 1;
                continue;
            }
        }
        let p = a[k][k].clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let f = &a[r][k] / &p;
            for c in k..n {
                let t = &f * &a[k][c];
                a[r][c] -= t;
            }
        }
        for c in k + 1..n {
            a[k][c] = Rational::zero();
        }
        for r in k + 1..n {
            a[r][k] = Rational::zero();
        }
        k += 1;
    }
    (pos, neg, n - pos - neg)
}

/// Row-major sparse matrix with sorted, zero-free rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    ncols: usize,
    rows: Vec<Vec<(usize, Rational)>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            ncols: n,
            rows: (0..n).map(|i| vec![(i, Rational::one())]).collect(),
        }
    }

    pub fn diagonal(d: Vec<Rational>) -> Self {
        let n = d.len();
        SparseMatrix {
            ncols: n,
            rows: d
                .into_iter()
                .enumerate()
                .map(|(i, x)| if x.is_zero() { Vec::new() } else { vec![(i, x)] })
                .collect(),
        }
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(nrows: usize, ncols: usize, entries: impl IntoIterator<Item = (usize, usize, Rational)>) -> Self {
        let mut acc: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); nrows];
        for (r, c, v) in entries {
            assert!(r < nrows && c < ncols, "triplet out of bounds");
            *acc[r].entry(c).or_insert_with(Rational::zero) += v;
        }
        SparseMatrix {
            ncols,
            rows: acc
                .into_iter()
                .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
                .collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, r: usize) -> &[(usize, Rational)] {
        &self.rows[r]
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        match self.rows[r].binary_search_by_key(&c, |(j, _)| *j) {
            Ok(k) => self.rows[r][k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn trace(&self) -> Rational {
        (0..self.nrows().min(self.ncols)).map(|i| self.get(i, i)).sum()
    }

    pub fn transpose(&self) -> Self {
        let entries = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (*c, r, v.clone())));
        SparseMatrix::from_triplets(self.ncols, self.nrows(), entries)
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows(), "dimension mismatch in product");
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                for (k, a) in row {
                    for (j, b) in other.row(*k) {
                        *acc.entry(*j).or_insert_with(Rational::zero) += a * b;
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseMatrix { ncols: other.ncols, rows }
    }

    pub fn scale(&self, s: &Rational) -> SparseMatrix {
        if s.is_zero() {
            return SparseMatrix::zeros(self.nrows(), self.ncols);
        }
        SparseMatrix {
            ncols: self.ncols,
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|(c, v)| (*c, v * s)).collect())
                .collect(),
        }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.combine(other, |a, b| a - b)
    }

    fn combine(&self, other: &SparseMatrix, f: impl Fn(&Rational, &Rational) -> Rational) -> SparseMatrix {
        assert_eq!((self.nrows(), self.ncols), (other.nrows(), other.ncols), "shape mismatch");
        let zero = Rational::zero();
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    let (c, v) = match (a.get(i), b.get(j)) {
                        (Some((ca, va)), Some((cb, _))) if ca < cb => {
                            i += 1;
                            (*ca, f(va, &zero))
                        }
                        (Some((ca, _)), Some((cb, vb))) if cb < ca => {
                            j += 1;
                            (*cb, f(&zero, vb))
                        }
                        (Some((ca, va)), Some((_, vb))) => {
                            i += 1;
                            j += 1;
                            (*ca, f(va, vb))
                        }
                        (Some((ca, va)), None) => {
                            i += 1;
                            (*ca, f(va, &zero))
                        }
                        (None, Some((cb, vb))) => {
                            j += 1;
                            (*cb, f(&zero, vb))
                        }
                        (None, None) => unreachable!(),
                    };
                    if !v.is_zero() {
                        out.push((c, v));
                    }
                }
                out
            })
            .collect();
        SparseMatrix { ncols: self.ncols, rows }
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn to_dense(&self) -> QMatrix {
        let mut d = vec![vec![Rational::zero(); self.ncols]; self.nrows()];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                d[r][*c] = v.clone();
            }
        }
        d
    }
}
