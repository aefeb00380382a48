//! Independent cross-checks for the implicitization pipeline.
//!
//! Everything here deliberately avoids the pipeline's machinery: the
//! resultant comes from a Sylvester matrix of power-basis coefficients, the
//! interpolation uses integer nodes and dense elimination on an explicit
//! Vandermonde–Kronecker system, and determinants use plain Gaussian
//! elimination. Slow, and only meant for small degrees.

use crate::bernstein::BernsteinPoly;
use crate::error::{Error, Result};
use crate::implicitize::{implicit_degrees, RationalCurve};
use crate::matrix::Matrix;
use crate::numeric::{Rational, Scalar, Tolerance};

/// Largest implicit degree the oracle accepts on either axis.
pub const ORACLE_DEGREE_CAP: usize = 6;

/// `F(x, y) = Σ a_kl x^k y^l`, grid of shape `(n+1)×(m+1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BivariatePower {
    pub coeffs: Matrix<Rational>,
}

impl BivariatePower {
    pub fn deg_x(&self) -> usize {
        self.coeffs.rows() - 1
    }

    pub fn deg_y(&self) -> usize {
        self.coeffs.cols() - 1
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = <Rational as Scalar>::zero();
        for k in (0..self.coeffs.rows()).rev() {
            let row = self.coeffs.row(k)
                .iter()
                .rev()
                .fold(<Rational as Scalar>::zero(), |a, c| a * y.clone() + c.clone());
            acc = acc * x.clone() + row;
        }
        acc
    }
}

fn sylvester_matrix(p: &[Rational], q: &[Rational]) -> Matrix<Rational> {
    let dp = p.len() - 1;
    let dq = q.len() - 1;
    let size = dp + dq;
    let mut m = Matrix::zeros(size, size);
    for r in 0..dq {
        for (k, c) in p.iter().rev().enumerate() {
            m[(r, r + k)] = c.clone();
        }
    }
    for r in 0..dp {
        for (k, c) in q.iter().rev().enumerate() {
            m[(dq + r, r + k)] = c.clone();
        }
    }
    m
}

/// Sylvester determinant with formal degrees `p.len()-1` and `q.len()-1`;
/// leading zeros are kept.
fn formal_resultant(p: &[Rational], q: &[Rational]) -> Rational {
    sylvester_matrix(p, q)
        .determinant_dense()
        .expect("sylvester matrix is square")
}

/// Resultant of two power-basis polynomials `a_0 + a_1 t + …`.
pub fn sylvester_resultant(p: &[Rational], q: &[Rational]) -> Result<Rational> {
    let trim = |v: &[Rational]| -> Result<Vec<Rational>> {
        let last = v.iter().rposition(|c| !c.is_zero()).ok_or(Error::ZeroPolynomial)?;
        Ok(v[..=last].to_vec())
    };
    Ok(formal_resultant(&trim(p)?, &trim(q)?))
}

fn pad(mut v: Vec<Rational>, len: usize) -> Vec<Rational> {
    debug_assert!(v[len.min(v.len())..].iter().all(Scalar::is_zero));
    v.resize(len, <Rational as Scalar>::zero());
    v.truncate(len);
    v
}

/// The implicit polynomial `Res_t(u1 - x v1, u2 - y v2)` in the power basis,
/// up to a nonzero scale, interpolated on integer nodes `1..=n+1`,
/// `1..=m+1`.
pub fn resultant_curve_power(curve: &RationalCurve) -> Result<BivariatePower> {
    let (n, m) = implicit_degrees(curve)?;
    let worst = n.max(m);
    if worst > ORACLE_DEGREE_CAP {
        return Err(Error::DegreeCapExceeded {
            cap: ORACLE_DEGREE_CAP,
            found: worst,
        });
    }
    let u1 = pad(curve.x_num().to_power(), m + 1);
    let v1 = pad(curve.x_den().to_power(), m + 1);
    let u2 = pad(curve.y_num().to_power(), n + 1);
    let v2 = pad(curve.y_den().to_power(), n + 1);
    let combine = |u: &[Rational], v: &[Rational], s: &Rational| -> Vec<Rational> {
        u.iter().zip(v).map(|(a, b)| a.clone() - s.clone() * b.clone()).collect()
    };

    let xs: Vec<Rational> = (1..=n + 1).map(|k| Rational::from_i64(k as i64)).collect();
    let ys: Vec<Rational> = (1..=m + 1).map(|k| Rational::from_i64(k as i64)).collect();
    let mut values = Vec::with_capacity((n + 1) * (m + 1));
    for x in &xs {
        let p = combine(&u1, &v1, x);
        for y in &ys {
            let q = combine(&u2, &v2, y);
            values.push(formal_resultant(&p, &q));
        }
    }

    let vandermonde = |nodes: &[Rational]| {
        Matrix::from_fn(nodes.len(), nodes.len(), |i, j| nodes[i].powi(j as u32))
    };
    let system = vandermonde(&xs).kronecker(&vandermonde(&ys));
    let flat = system.solve_dense(&values)?;
    let rows = flat.chunks(m + 1).map(<[Rational]>::to_vec).collect();
    Ok(BivariatePower {
        coeffs: Matrix::from_rows(rows)?,
    })
}

fn map_rows(grid: &Matrix<Rational>, f: impl Fn(&[Rational]) -> Vec<Rational>) -> Matrix<Rational> {
    Matrix::from_rows((0..grid.rows()).map(|i| f(grid.row(i))).collect()).expect("uniform rows")
}

/// Tensor-product Bernstein coefficients of a power-basis polynomial.
pub fn power_to_tensor_bernstein(p: &BivariatePower) -> Matrix<Rational> {
    let (n, m) = (p.deg_x(), p.deg_y());
    let along_y = map_rows(&p.coeffs, |r| {
        BernsteinPoly::from_power(r, m).expect("length matches").into_coeffs()
    });
    map_rows(&along_y.transpose(), |c| {
        BernsteinPoly::from_power(c, n).expect("length matches").into_coeffs()
    })
    .transpose()
}

/// Inverse of [`power_to_tensor_bernstein`].
pub fn tensor_bernstein_to_power(grid: &Matrix<Rational>) -> BivariatePower {
    let to_power = |r: &[Rational]| BernsteinPoly::new(r.to_vec()).expect("nonempty").to_power();
    let along_y = map_rows(grid, to_power);
    BivariatePower {
        coeffs: map_rows(&along_y.transpose(), to_power).transpose(),
    }
}

/// The `λ ≠ 0` with `a = λ b` entrywise, if one exists.
pub fn compare_up_to_scale<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>, tol: Tolerance) -> Option<S> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return None;
    }
    let (ra, rb) = (a.to_rows(), b.to_rows());
    let pairs: Vec<(&S, &S)> = ra.iter().flatten().zip(rb.iter().flatten()).collect();
    let (x, y) = pairs.iter().find(|(_, y)| !y.is_zero())?;
    let lambda = (*x).clone() / (*y).clone();
    if lambda.is_zero() {
        return None;
    }
    let ok = pairs
        .iter()
        .all(|(x, y)| (*x).approx_eq(&(lambda.clone() * (*y).clone()), tol));
    ok.then_some(lambda)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
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

/// Checks every minor of a square matrix for strict positivity by
/// enumeration. Exponential; intended for order at most 5.
pub fn all_minors_positive(a: &Matrix<Rational>) -> bool {
    let n = a.rows();
    (1..=n).all(|k| {
        let sets = subsets(n, k);
        sets.iter().all(|rows| {
            sets.iter().all(|cols| {
                let minor = Matrix::from_fn(k, k, |i, j| a[(rows[i], cols[j])].clone());
                minor.determinant_dense().expect("square").is_positive()
            })
        })
    })
}
