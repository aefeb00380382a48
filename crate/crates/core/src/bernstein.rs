//! Univariate polynomials in Bernstein form.
//!
//! A [`BernsteinPoly`] of representation degree `d` stores the coefficients
//! of `β_i^{(d)}(t) = C(d,i) (1-t)^{d-i} t^i`. The representation degree
//! may exceed the true power-basis degree; [`BernsteinPoly::power_degree`]
//! reports the latter.

use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::numeric::{Rational, Scalar};

static BINOMIAL_ROWS: OnceLock<Mutex<Vec<Arc<Vec<BigInt>>>>> = OnceLock::new();

/// Row `d` of Pascal's triangle, built by the additive recurrence and cached.
pub fn binomial_row(d: usize) -> Arc<Vec<BigInt>> {
    let cache = BINOMIAL_ROWS.get_or_init(|| Mutex::new(vec![Arc::new(vec![BigInt::from(1)])]));
    let mut rows = cache.lock().unwrap_or_else(|e| e.into_inner());
    while rows.len() <= d {
        let prev = rows.last().unwrap().clone();
        let mut next = Vec::with_capacity(prev.len() + 1);
        next.push(BigInt::from(1));
        for w in prev.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::from(1));
        rows.push(Arc::new(next));
    }
    rows[d].clone()
}

pub fn binomial<S: Scalar>(n: usize, k: usize) -> S {
    if k > n {
        return S::zero();
    }
    S::from_rational(&Rational::from_integer(binomial_row(n)[k].clone()))
}

/// Values of all `d+1` Bernstein basis polynomials of degree `d` at `t`.
pub fn basis_values<S: Scalar>(d: usize, t: &S) -> Vec<S> {
    let s = S::one() - t.clone();
    let tp: Vec<S> = std::iter::successors(Some(S::one()), |p| Some(p.clone() * t.clone()))
        .take(d + 1)
        .collect();
    let sp: Vec<S> = std::iter::successors(Some(S::one()), |p| Some(p.clone() * s.clone()))
        .take(d + 1)
        .collect();
    (0..=d)
        .map(|i| binomial::<S>(d, i) * sp[d - i].clone() * tp[i].clone())
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct BernsteinPoly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> BernsteinPoly<S> {
    /// Wraps a coefficient list; the degree is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<S>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        Ok(BernsteinPoly { coeffs })
    }

    pub fn constant(c: S, degree: usize) -> Self {
        BernsteinPoly {
            coeffs: vec![c; degree + 1],
        }
    }

    /// Bernstein coefficients at representation degree `degree` of the
    /// polynomial `Σ a_k t^k`.
    pub fn from_power(power: &[S], degree: usize) -> Result<Self> {
        if power.is_empty() {
            return Ok(Self::constant(S::zero(), degree));
        }
        if power.len() > degree + 1 && power[degree + 1..].iter().any(|a| !a.is_zero()) {
            return Err(Error::DimensionMismatch {
                expected: degree + 1,
                found: power.len(),
            });
        }
        let coeffs = (0..=degree)
            .map(|i| {
                (0..=i.min(power.len().saturating_sub(1)))
                    .fold(S::zero(), |acc, k| {
                        acc + binomial::<S>(i, k) / binomial::<S>(degree, k) * power[k].clone()
                    })
            })
            .collect();
        Ok(BernsteinPoly { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> BernsteinPoly<T> {
        BernsteinPoly {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// de Casteljau evaluation.
    pub fn eval(&self, t: &S) -> S {
        let s = S::one() - t.clone();
        let mut work = self.coeffs.clone();
        for level in (1..work.len()).rev() {
            for i in 0..level {
                work[i] = s.clone() * work[i].clone() + t.clone() * work[i + 1].clone();
            }
        }
        work.swap_remove(0)
    }

    /// Power-basis coefficients `a_0..a_d`, with
    /// `a_k = C(d,k) Σ_{i≤k} (-1)^{k-i} C(k,i) c_i`.
    pub fn to_power(&self) -> Vec<S> {
        let d = self.degree();
        (0..=d)
            .map(|k| {
                let inner = (0..=k).fold(S::zero(), |acc, i| {
                    let term = binomial::<S>(k, i) * self.coeffs[i].clone();
                    if (k - i) % 2 == 0 {
                        acc + term
                    } else {
                        acc - term
                    }
                });
                binomial::<S>(d, k) * inner
            })
            .collect()
    }

    /// True degree in the power basis, `None` for the zero polynomial.
    pub fn power_degree(&self) -> Option<usize> {
        self.to_power().iter().rposition(|a| !a.is_zero())
    }

    /// Coefficient of `t^d` for representation degree `d`; zero signals a
    /// degree drop.
    pub fn leading_power_coeff(&self) -> S {
        let d = self.degree();
        (0..=d).fold(S::zero(), |acc, i| {
            let term = binomial::<S>(d, i) * self.coeffs[i].clone();
            if (d - i).is_multiple_of(2) {
                acc + term
            } else {
                acc - term
            }
        })
    }

    /// Same polynomial written at degree `d + r`.
    pub fn elevate(&self, r: usize) -> Self {
        if r == 0 {
            return self.clone();
        }
        let d = self.degree();
        let coeffs = (0..=d + r)
            .map(|k| {
                let lo = k.saturating_sub(r);
                let hi = k.min(d);
                let sum = (lo..=hi).fold(S::zero(), |acc, i| {
                    acc + binomial::<S>(d, i) * binomial::<S>(r, k - i) * self.coeffs[i].clone()
                });
                sum / binomial::<S>(d + r, k)
            })
            .collect();
        BernsteinPoly { coeffs }
    }

    /// Rewrites the polynomial exactly at representation degree `target`,
    /// elevating or reducing as needed. Reduction fails when the power
    /// degree exceeds `target`.
    pub fn with_degree(&self, target: usize) -> Result<Self> {
        let d = self.degree();
        if target >= d {
            return Ok(self.elevate(target - d));
        }
        BernsteinPoly::from_power(&self.to_power(), target)
    }
}

/// Collocation matrix `(β_j^{(d)}(t_i))` on strictly increasing nodes in
/// `(0, 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CollocationMatrix<S> {
    nodes: Vec<S>,
    matrix: Matrix<S>,
}

impl<S: Scalar> CollocationMatrix<S> {
    pub fn degree(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn nodes(&self) -> &[S] {
        &self.nodes
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }
}

pub fn collocation<S: Scalar>(d: usize, nodes: &[S]) -> Result<CollocationMatrix<S>> {
    if nodes.len() != d + 1 {
        return Err(Error::InvalidNodes("node count must be degree + 1"));
    }
    if nodes
        .iter()
        .any(|t| !t.is_positive() || *t >= S::one())
    {
        return Err(Error::InvalidNodes("nodes must lie in the open interval (0, 1)"));
    }
    if nodes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidNodes("nodes must be strictly increasing"));
    }
    let rows: Vec<Vec<S>> = nodes.iter().map(|t| basis_values(d, t)).collect();
    Ok(CollocationMatrix {
        nodes: nodes.to_vec(),
        matrix: Matrix::from_rows(rows)?,
    })
}
