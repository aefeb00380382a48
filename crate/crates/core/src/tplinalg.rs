//! Neville elimination and bidiagonal factorization of inverses of
//! strictly totally positive matrices.
//!
//! Row Neville elimination of `A` zeroes each column from the bottom up,
//! subtracting a multiple of the row directly above. One elimination step
//! is a unit lower bidiagonal matrix `F_k`, so `F_{n-1}…F_1 A = U`. The same
//! adjacent-column elimination applied to `U` gives `U G_1…G_{n-1} = D`,
//! hence
//!
//! ```text
//! A^{-1} = G_1 G_2 … G_{n-1} D^{-1} F_{n-1} … F_2 F_1
//! ```
//!
//! Each factor is stored as its single off-diagonal, so applying the whole
//! product to a vector costs `n²` multiplications.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::numeric::{Rational, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct BidiagonalFactorization<S> {
    order: usize,
    /// `lower[k][i]` is entry `(i+1, i)` of `F_{k+1}`.
    lower: Vec<Vec<S>>,
    /// Neville pivots, the diagonal of `D`.
    pivots: Vec<S>,
    /// `upper[k][i]` is entry `(i, i+1)` of `G_{k+1}`.
    upper: Vec<Vec<S>>,
}

/// How a factorization is computed for a floating point solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FactorMode {
    /// Eliminate in the target field directly.
    #[default]
    Native,
    /// Eliminate exactly over the rationals, then round the factors.
    ExactThenRound,
}

/// Complete Neville elimination of a square matrix, without row exchanges.
pub fn factorize<S: Scalar>(a: &Matrix<S>) -> Result<BidiagonalFactorization<S>> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let off = n.saturating_sub(1);
    let mut w = a.to_rows();

    let mut lower = vec![vec![S::zero(); off]; off];
    for k in 0..off {
        for i in (k + 1..n).rev() {
            if w[i][k].is_zero() {
                continue;
            }
            if w[i - 1][k].is_zero() {
                return Err(Error::NevilleBreakdown { step: k, row: i });
            }
            let m = w[i][k].clone() / w[i - 1][k].clone();
            for j in k..n {
                let t = m.clone() * w[i - 1][j].clone();
                w[i][j] = w[i][j].clone() - t;
            }
            lower[k][i - 1] = -m;
        }
    }

    let mut pivots = Vec::with_capacity(n);
    for k in 0..n {
        if w[k][k].is_zero() {
            return Err(Error::NevilleBreakdown { step: k, row: k });
        }
        pivots.push(w[k][k].clone());
    }

    let mut upper = vec![vec![S::zero(); off]; off];
    for k in 0..off {
        for j in (k + 1..n).rev() {
            if w[k][j].is_zero() {
                continue;
            }
            if w[k][j - 1].is_zero() {
                return Err(Error::NevilleBreakdown { step: k, row: j });
            }
            let g = w[k][j].clone() / w[k][j - 1].clone();
            for row in w.iter_mut().take(j).skip(k) {
                let t = g.clone() * row[j - 1].clone();
                row[j] = row[j].clone() - t;
            }
            upper[k][j - 1] = -g;
        }
    }

    Ok(BidiagonalFactorization {
        order: n,
        lower,
        pivots,
        upper,
    })
}

/// Factorizes a matrix given exactly, producing factors in `T`.
pub fn factorize_from_exact<T: Scalar>(
    a: &Matrix<Rational>,
    mode: FactorMode,
) -> Result<BidiagonalFactorization<T>> {
    match mode {
        FactorMode::Native => factorize(&a.map(T::from_rational)),
        FactorMode::ExactThenRound => Ok(factorize(a)?.rounded()),
    }
}

impl BidiagonalFactorization<Rational> {
    pub fn rounded<T: Scalar>(&self) -> BidiagonalFactorization<T> {
        let conv = |v: &Vec<Rational>| v.iter().map(T::from_rational).collect::<Vec<T>>();
        BidiagonalFactorization {
            order: self.order,
            lower: self.lower.iter().map(conv).collect(),
            pivots: conv(&self.pivots),
            upper: self.upper.iter().map(conv).collect(),
        }
    }
}

impl<S: Scalar> BidiagonalFactorization<S> {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn pivots(&self) -> &[S] {
        &self.pivots
    }

    /// Subdiagonal of `F_k`, `k` in `1..order`.
    pub fn lower_factor(&self, k: usize) -> &[S] {
        &self.lower[k - 1]
    }

    /// Superdiagonal of `G_k`, `k` in `1..order`.
    pub fn upper_factor(&self, k: usize) -> &[S] {
        &self.upper[k - 1]
    }

    /// Computes `A^{-1} b` by applying the factors right to left.
    pub fn solve(&self, b: &[S]) -> Result<Vec<S>> {
        self.solve_counted(b).map(|(x, _)| x)
    }

    /// Like [`solve`](Self::solve), also returning the number of
    /// multiplications and divisions performed.
    pub fn solve_counted(&self, b: &[S]) -> Result<(Vec<S>, usize)> {
        let n = self.order;
        if b.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: b.len(),
            });
        }
        let mut x = b.to_vec();
        let mut ops = 0;
        for (k, f) in self.lower.iter().enumerate() {
            for i in (k + 1..n).rev() {
                let t = f[i - 1].clone() * x[i - 1].clone();
                x[i] = x[i].clone() + t;
                ops += 1;
            }
        }
        for (xi, d) in x.iter_mut().zip(&self.pivots) {
            *xi = xi.clone() / d.clone();
            ops += 1;
        }
        for (k, g) in self.upper.iter().enumerate().rev() {
            for j in k + 1..n {
                let t = g[j - 1].clone() * x[j].clone();
                x[j - 1] = x[j - 1].clone() + t;
                ops += 1;
            }
        }
        Ok((x, ops))
    }

    /// The explicit factors `(F_1..F_{n-1}, D, G_1..G_{n-1})` as dense
    /// matrices.
    pub fn factor_matrices(&self) -> (Vec<Matrix<S>>, Matrix<S>, Vec<Matrix<S>>) {
        let n = self.order;
        let fs = self
            .lower
            .iter()
            .map(|f| {
                let mut m = Matrix::identity(n);
                for (i, v) in f.iter().enumerate() {
                    m[(i + 1, i)] = v.clone();
                }
                m
            })
            .collect();
        let gs = self
            .upper
            .iter()
            .map(|g| {
                let mut m = Matrix::identity(n);
                for (i, v) in g.iter().enumerate() {
                    m[(i, i + 1)] = v.clone();
                }
                m
            })
            .collect();
        let d = Matrix::from_fn(n, n, |i, j| {
            if i == j {
                self.pivots[i].clone()
            } else {
                S::zero()
            }
        });
        (fs, d, gs)
    }

    /// Dense `G_1…G_{n-1} D^{-1} F_{n-1}…F_1`, multiplied out factor by
    /// factor.
    pub fn inverse(&self) -> Matrix<S> {
        let n = self.order;
        let (fs, d, gs) = self.factor_matrices();
        let d_inv = Matrix::from_fn(n, n, |i, j| {
            if i == j {
                S::one() / d[(i, i)].clone()
            } else {
                S::zero()
            }
        });
        let mut acc = Matrix::identity(n);
        for g in &gs {
            acc = acc.mul(g).expect("square factors");
        }
        acc = acc.mul(&d_inv).expect("square factors");
        for f in fs.iter().rev() {
            acc = acc.mul(f).expect("square factors");
        }
        acc
    }
}

/// Pivot tables from Neville elimination of a matrix and of its transpose.
#[derive(Debug, Clone, PartialEq)]
pub struct TotalPositivityCertificate<S> {
    /// `row_pivots[k]` holds the pivots `p_{i,k}`, `i = k..n`, of `A`.
    pub row_pivots: Vec<Vec<S>>,
    /// Same for `A^T`.
    pub column_pivots: Vec<Vec<S>>,
    pub strictly_positive: bool,
}

fn neville_pivot_table<S: Scalar>(a: &Matrix<S>) -> (Vec<Vec<S>>, bool) {
    let n = a.rows();
    let mut w = a.to_rows();
    let mut table = Vec::with_capacity(n);
    for k in 0..n {
        let column: Vec<S> = (k..n).map(|i| w[i][k].clone()).collect();
        let ok = column.iter().all(Scalar::is_positive);
        table.push(column);
        if !ok {
            return (table, false);
        }
        for i in (k + 1..n).rev() {
            let m = w[i][k].clone() / w[i - 1][k].clone();
            for j in k..n {
                let t = m.clone() * w[i - 1][j].clone();
                w[i][j] = w[i][j].clone() - t;
            }
        }
    }
    (table, true)
}

/// Strict total positivity test: every Neville pivot of `A` and of `A^T`
/// must be strictly positive.
pub fn is_strictly_totally_positive<S: Scalar>(
    a: &Matrix<S>,
) -> Result<TotalPositivityCertificate<S>> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let (row_pivots, rows_ok) = neville_pivot_table(a);
    let (column_pivots, cols_ok) = if rows_ok {
        neville_pivot_table(&a.transpose())
    } else {
        (Vec::new(), false)
    };
    Ok(TotalPositivityCertificate {
        row_pivots,
        column_pivots,
        strictly_positive: rows_ok && cols_ok,
    })
}
