//! Bernstein–Bézout resultant matrices and exact determinants.
//!
//! [`build`] fills the `d×d` matrix directly from two Bernstein coefficient
//! lists of the same degree `d`, column by column: the first column and the
//! bottom row from closed forms, every interior entry `(i, j+1)` from the
//! entry `(i+1, j)` one step down-left of it. No basis conversion happens.
//!
//! The determinant equals the power-basis (Sylvester) resultant times the
//! fixed constant [`power_resultant_scale`], and, when the second polynomial
//! has a lower true degree, times the leading power coefficient of the first
//! raised to the degree gap.

use crate::bernstein::binomial;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::numeric::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct BezoutMatrix<S> {
    entries: Matrix<S>,
}

impl<S: Scalar> BezoutMatrix<S> {
    pub fn order(&self) -> usize {
        self.entries.rows()
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.entries
    }

    pub fn into_matrix(self) -> Matrix<S> {
        self.entries
    }

    pub fn determinant(&self) -> S {
        determinant(&self.entries).expect("bezout matrices are square")
    }
}

/// Builds the Bernstein–Bézout matrix of `p` and `q`, both given as `d+1`
/// Bernstein coefficients at the same degree `d >= 1`.
pub fn build<S: Scalar>(p: &[S], q: &[S]) -> Result<BezoutMatrix<S>> {
    if p.len() != q.len() {
        return Err(Error::DimensionMismatch {
            expected: p.len(),
            found: q.len(),
        });
    }
    if p.len() < 2 {
        return Err(Error::ZeroDegree);
    }
    let n = p.len() - 1;
    let cross = |i: usize, j: usize| p[i].clone() * q[j].clone() - p[j].clone() * q[i].clone();
    let frac = |a: usize, b: usize| S::from_ratio(a as i64, b as i64);

    // 1-based (i, j) of the recurrence lives at (i-1, j-1).
    let mut bs = Matrix::zeros(n, n);
    for i in 1..=n {
        bs[(i - 1, 0)] = frac(n, i) * cross(i, 0);
    }
    for j in 1..n {
        bs[(n - 1, j)] = frac(n, n - j) * cross(n, j);
    }
    for j in 1..n {
        for i in 1..n {
            let direct = frac(n * n, i * (n - j)) * cross(i, j);
            let carried = frac(j * (n - i), i * (n - j)) * bs[(i, j - 1)].clone();
            bs[(i - 1, j)] = direct + carried;
        }
    }
    Ok(BezoutMatrix { entries: bs })
}

/// `det(build(p, q)) / Res(p, q)` for two polynomials of full degree `d`:
/// `(-1)^{d(d-1)/2} / (Π_{i=1}^{d-2} C(d-1, i))^2`.
pub fn power_resultant_scale<S: Scalar>(d: usize) -> S {
    if d == 0 {
        return S::one();
    }
    let prod = (1..d.saturating_sub(1)).fold(S::one(), |acc, i| acc * binomial::<S>(d - 1, i));
    let mag = S::one() / (prod.clone() * prod);
    if (d * (d - 1) / 2).is_multiple_of(2) {
        mag
    } else {
        -mag
    }
}

/// Determinant of a square matrix.
///
/// Exact fields use Bareiss fraction-free elimination with a row search on
/// zero pivots; floating point uses partially pivoted Gaussian elimination.
pub fn determinant<S: Scalar>(m: &Matrix<S>) -> Result<S> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(if S::EXACT {
        bareiss(m.to_rows())
    } else {
        gauss_partial_pivot(m.to_rows())
    })
}

fn bareiss<S: Scalar>(mut a: Vec<Vec<S>>) -> S {
    let n = a.len();
    if n == 0 {
        return S::one();
    }
    let mut negate = false;
    let mut prev = S::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return S::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].clone() * a[i][j].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = num / prev.clone();
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

fn gauss_partial_pivot<S: Scalar>(mut a: Vec<Vec<S>>) -> S {
    let n = a.len();
    let mut det = S::one();
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| {
                a[i][k]
                    .abs()
                    .partial_cmp(&a[j][k].abs())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .unwrap();
        if a[p][k].is_zero() {
            return S::zero();
        }
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        for i in k + 1..n {
            let f = a[i][k].clone() / a[k][k].clone();
            for j in k + 1..n {
                let t = f.clone() * a[k][j].clone();
                a[i][j] = a[i][j].clone() - t;
            }
        }
        det = det * a[k][k].clone();
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{Rational, Tolerance};
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| q(x, 1)).collect()
    }

    // Test-only oracle: Laplace expansion along the first row.
    fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
        if m.is_empty() {
            return q(1, 1);
        }
        (0..m.len())
            .map(|c| {
                let minor: Vec<Vec<Rational>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = m[0][c].clone() * cofactor_det(&minor);
                if c % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .fold(q(0, 1), |a, b| a + b)
    }

    #[test]
    fn linear_pair() {
        // p = t, q = 1 - 2t; q at the root of p is 1.
        let m = build(&ints(&[0, 1]), &ints(&[1, -1])).unwrap();
        assert_eq!(m.matrix(), &Matrix::from_rows(vec![ints(&[1])]).unwrap());
        assert_eq!(m.determinant(), q(1, 1));
    }

    #[test]
    fn identical_inputs_give_zero_matrix() {
        let p = ints(&[4, -1, 3, 9, 2]);
        let m = build(&p, &p).unwrap();
        assert!(m.matrix().is_zero());
        assert_eq!(m.determinant(), q(0, 1));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(build(&ints(&[1, 2]), &ints(&[1, 2, 3])).unwrap_err(), Error::DimensionMismatch { expected: 2, found: 3 });
        assert_eq!(build(&ints(&[1]), &ints(&[2])).unwrap_err(), Error::ZeroDegree);
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&Matrix::<Rational>::identity(4)).unwrap(), q(1, 1));
        let m = Matrix::from_rows(vec![ints(&[1, 2]), ints(&[3, 4])]).unwrap();
        assert_eq!(determinant(&m).unwrap(), q(-2, 1));
        let zero_lead = Matrix::from_rows(vec![ints(&[0, 1, 2]), ints(&[3, 0, 1]), ints(&[4, 5, 0])]).unwrap();
        assert_eq!(determinant(&zero_lead).unwrap(), cofactor_det(&zero_lead.to_rows()));
        let singular = Matrix::from_rows(vec![ints(&[1, 2]), ints(&[2, 4])]).unwrap();
        assert_eq!(determinant(&singular).unwrap(), q(0, 1));
        assert!(determinant(&Matrix::<Rational>::zeros(2, 3)).is_err());
    }

    #[test]
    fn float_determinant() {
        let m = Matrix::from_rows(vec![vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        assert!(determinant(&m).unwrap().approx_eq(&-2.0, Tolerance::default()));
    }

    #[test]
    fn scale_constants() {
        let expected = [(1, q(1, 1)), (2, q(-1, 1)), (3, q(-1, 4)), (4, q(1, 81)), (5, q(1, 9216)), (6, q(-1, 6_250_000))];
        for (d, k) in expected {
            assert_eq!(power_resultant_scale::<Rational>(d), k, "d = {d}");
        }
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-9i64..10, 1i64..6).prop_map(|(n, d)| q(n, d))
    }

    fn square(n: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
        prop::collection::vec(prop::collection::vec(small(), n), n)
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor_expansion(m in (1usize..=5).prop_flat_map(square)) {
            let mat = Matrix::from_rows(m.clone()).unwrap();
            prop_assert_eq!(determinant(&mat).unwrap(), cofactor_det(&m));
        }

        #[test]
        fn antisymmetric(pq in (2usize..8).prop_flat_map(|n| (prop::collection::vec(small(), n), prop::collection::vec(small(), n)))) {
            let (p, qs) = pq;
            let a = build(&p, &qs).unwrap();
            let b = build(&qs, &p).unwrap();
            prop_assert_eq!(a.matrix().map(|v| -v.clone()), b.into_matrix());
        }
    }
}
