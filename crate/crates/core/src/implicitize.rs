//! Implicitization of rational Bézier curves.
//!
//! For `x(t) = u1/v1`, `y(t) = u2/v2` the implicit polynomial is the
//! resultant in `t` of `p = u1 - x v1` and `q = u2 - y v2`. It lies in the
//! space of degree `n` in `x` and `m` in `y`, where `n` is the power degree
//! of the y-side pair and `m` that of the x-side pair. Its coefficients in
//! the tensor-product Bernstein basis are recovered by interpolation:
//!
//! 1. pick nodes `x_i = (i+1)/(n+2)`, `y_j = (j+1)/(m+2)`;
//! 2. at every node evaluate `p` and `q`, build the Bernstein–Bézout matrix
//!    and divide its determinant by the leading-coefficient correction;
//! 3. solve `(B_x ⊗ B_y) c = f` as `B_x C B_y^T = F`, with one bidiagonal
//!    factorization per collocation matrix.

use rayon::prelude::*;

use crate::bernstein::{collocation, BernsteinPoly, CollocationMatrix};
use crate::bezout;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::numeric::{format_scalar, Rational, Scalar};
use crate::tplinalg::{factorize, factorize_from_exact, BidiagonalFactorization, FactorMode};

/// A rational plane curve `(u1/v1, u2/v2)` with every polynomial in
/// Bernstein form. Numerator and denominator of each coordinate share one
/// representation degree.
///
/// The parametrization is assumed proper with `gcd(u1, v1) = gcd(u2, v2) = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalCurve {
    u1: BernsteinPoly<Rational>,
    v1: BernsteinPoly<Rational>,
    u2: BernsteinPoly<Rational>,
    v2: BernsteinPoly<Rational>,
}

fn same_degree(
    num: BernsteinPoly<Rational>,
    den: BernsteinPoly<Rational>,
) -> (BernsteinPoly<Rational>, BernsteinPoly<Rational>) {
    let d = num.degree().max(den.degree());
    let (nd, dd) = (num.degree(), den.degree());
    (num.elevate(d - nd), den.elevate(d - dd))
}

impl RationalCurve {
    pub fn new(
        u1: BernsteinPoly<Rational>,
        v1: BernsteinPoly<Rational>,
        u2: BernsteinPoly<Rational>,
        v2: BernsteinPoly<Rational>,
    ) -> Result<Self> {
        if v1.is_zero() || v2.is_zero() {
            return Err(Error::DegenerateCurve("denominator is identically zero"));
        }
        let (u1, v1) = same_degree(u1, v1);
        let (u2, v2) = same_degree(u2, v2);
        Ok(RationalCurve { u1, v1, u2, v2 })
    }

    /// Curve with polynomial (denominator one) coordinates.
    pub fn polynomial(x: BernsteinPoly<Rational>, y: BernsteinPoly<Rational>) -> Result<Self> {
        let one = || BernsteinPoly::constant(<Rational as Scalar>::one(), 0);
        Self::new(x, one(), y, one())
    }

    pub fn x_num(&self) -> &BernsteinPoly<Rational> {
        &self.u1
    }
    pub fn x_den(&self) -> &BernsteinPoly<Rational> {
        &self.v1
    }
    pub fn y_num(&self) -> &BernsteinPoly<Rational> {
        &self.u2
    }
    pub fn y_den(&self) -> &BernsteinPoly<Rational> {
        &self.v2
    }

    /// The point at parameter `t`, or `None` at a pole.
    pub fn point(&self, t: &Rational) -> Option<(Rational, Rational)> {
        let dx = self.v1.eval(t);
        let dy = self.v2.eval(t);
        if dx.is_zero() || dy.is_zero() {
            return None;
        }
        Some((self.u1.eval(t) / dx, self.u2.eval(t) / dy))
    }
}

/// Coefficients `c_ij` of `F(x, y) = Σ c_ij β_i^{(n)}(x) β_j^{(m)}(y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ImplicitCurve<S> {
    coeffs: Matrix<S>,
}

impl<S: Scalar> ImplicitCurve<S> {
    /// Wraps an `(n+1)×(m+1)` coefficient grid.
    pub fn from_grid(coeffs: Matrix<S>) -> Self {
        ImplicitCurve { coeffs }
    }

    /// Rebuilds a curve from an i-major flat coefficient list.
    pub fn from_flat(deg_x: usize, deg_y: usize, flat: Vec<S>) -> Result<Self> {
        let expected = (deg_x + 1) * (deg_y + 1);
        if flat.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: flat.len(),
            });
        }
        let rows = flat.chunks(deg_y + 1).map(<[S]>::to_vec).collect();
        Ok(ImplicitCurve {
            coeffs: Matrix::from_rows(rows)?,
        })
    }

    pub fn deg_x(&self) -> usize {
        self.coeffs.rows() - 1
    }

    pub fn deg_y(&self) -> usize {
        self.coeffs.cols() - 1
    }

    pub fn grid(&self) -> &Matrix<S> {
        &self.coeffs
    }

    /// Coefficients in i-major order: `c_00, c_01, …, c_0m, c_10, …, c_nm`.
    pub fn coefficients(&self) -> Vec<S> {
        self.coeffs.to_rows().into_iter().flatten().collect()
    }

    pub fn evaluate(&self, x: &S, y: &S) -> S {
        evaluate_implicit(self, x, y)
    }
}

impl ImplicitCurve<Rational> {
    /// Divides by the rational content and makes the first nonzero
    /// coefficient positive, leaving coprime integer coefficients.
    pub fn normalized(&self) -> Self {
        use num_integer::Integer;
        use num_traits::{One, Signed, Zero};
        let flat = self.coefficients();
        let Some(first) = flat.iter().find(|c| !Zero::is_zero(*c)) else {
            return self.clone();
        };
        let (mut g, mut l) = (num_bigint::BigInt::zero(), num_bigint::BigInt::one());
        for c in &flat {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
        let mut content = Rational::new(g, l);
        if first.is_negative() {
            content = -content;
        }
        ImplicitCurve {
            coeffs: self.coeffs.map(|c| c.clone() / content.clone()),
        }
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coefficients().iter().map(format_scalar).collect()
    }
}

impl ImplicitCurve<f64> {
    /// Scales so the largest coefficient magnitude is one and the first
    /// nonzero coefficient is positive.
    pub fn normalized(&self) -> Self {
        let flat = self.coefficients();
        let max = flat.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        let Some(first) = flat.iter().find(|c| **c != 0.0) else {
            return self.clone();
        };
        let s = max.copysign(*first);
        ImplicitCurve {
            coeffs: self.coeffs.map(|c| c / s),
        }
    }
}

/// Nested de Casteljau evaluation of the tensor-product form.
pub fn evaluate_implicit<S: Scalar>(f: &ImplicitCurve<S>, x: &S, y: &S) -> S {
    let inner: Vec<S> = (0..f.coeffs.rows())
        .map(|i| {
            BernsteinPoly::new(f.coeffs.row(i).to_vec())
                .expect("nonempty row")
                .eval(y)
        })
        .collect();
    BernsteinPoly::new(inner).expect("nonempty grid").eval(x)
}

/// Implicit degrees `(n, m)`: `n` in `x` from the y-side pair, `m` in `y`
/// from the x-side pair, both as power-basis degrees.
pub fn implicit_degrees(c: &RationalCurve) -> Result<(usize, usize)> {
    let pd = |p: &BernsteinPoly<Rational>| p.power_degree().unwrap_or(0);
    let n = pd(&c.u2).max(pd(&c.v2));
    let m = pd(&c.u1).max(pd(&c.v1));
    if n == 0 && m == 0 {
        return Err(Error::DegenerateCurve("both coordinates are constant"));
    }
    Ok((n, m))
}

/// Which elimination polynomial carries the leading-coefficient correction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrectionAxis {
    None,
    X,
    Y,
}

/// Interpolation nodes together with the data needed to turn Bézout
/// determinants into values of the implicit polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeGrid {
    pub xs: Vec<Rational>,
    pub ys: Vec<Rational>,
    /// Final node denominators (`n + 2` and `m + 2` unless bumped).
    pub x_denominator: usize,
    pub y_denominator: usize,
    /// Leading power coefficient of `p` at degree `m`, as `[c0, c1]` for
    /// `c0 + c1 x`.
    pub p_leading: [Rational; 2],
    /// Leading power coefficient of `q` at degree `n`, as `[c0, c1]` for
    /// `c0 + c1 y`.
    pub q_leading: [Rational; 2],
    pub correction_axis: CorrectionAxis,
    pub correction_exponent: u32,
    /// Shared representation degree of the two elimination polynomials.
    pub common_degree: usize,
}

impl NodeGrid {
    fn correction_poly(&self) -> Option<&[Rational; 2]> {
        match self.correction_axis {
            CorrectionAxis::None => None,
            CorrectionAxis::X => Some(&self.p_leading),
            CorrectionAxis::Y => Some(&self.q_leading),
        }
    }

    /// Factor dividing the determinant at `(x0, y0)`.
    pub fn correction_at<S: Scalar>(&self, x0: &S, y0: &S) -> S {
        let Some([c0, c1]) = self.correction_poly() else {
            return S::one();
        };
        let var = match self.correction_axis {
            CorrectionAxis::Y => y0,
            _ => x0,
        };
        let base = S::from_rational(c0) + S::from_rational(c1) * var.clone();
        base.powi(self.correction_exponent)
    }
}

fn linear_at(c: &[Rational; 2], v: &Rational) -> Rational {
    c[0].clone() + c[1].clone() * v.clone()
}

/// `lc(num) - var * lc(den)` with both written at degree `d`.
fn leading_linear(
    num: &BernsteinPoly<Rational>,
    den: &BernsteinPoly<Rational>,
    d: usize,
) -> Result<[Rational; 2]> {
    Ok([
        num.with_degree(d)?.leading_power_coeff(),
        -den.with_degree(d)?.leading_power_coeff(),
    ])
}

fn axis_nodes(count: usize, lead: &[Rational; 2]) -> (Vec<Rational>, usize) {
    let mut den = count + 1;
    loop {
        let nodes: Vec<Rational> = (1..=count)
            .map(|k| Rational::from_ratio(k as i64, den as i64))
            .collect();
        if nodes.iter().all(|v| !linear_at(lead, v).is_zero()) {
            return (nodes, den);
        }
        den += 1;
    }
}

/// Interpolation grid for implicit degrees `(n, m)`.
///
/// Nodes are `(i+1)/(n+2)` and `(j+1)/(m+2)`; an axis whose leading
/// coefficient vanishes at one of its nodes has its denominator bumped until
/// no node collides.
pub fn make_nodes(n: usize, m: usize, curve: &RationalCurve) -> Result<NodeGrid> {
    let p_leading = leading_linear(&curve.u1, &curve.v1, m)?;
    let q_leading = leading_linear(&curve.u2, &curve.v2, n)?;
    let (xs, x_denominator) = axis_nodes(n + 1, &p_leading);
    let (ys, y_denominator) = axis_nodes(m + 1, &q_leading);
    let (correction_axis, gap) = match m.cmp(&n) {
        std::cmp::Ordering::Greater => (CorrectionAxis::X, m - n),
        std::cmp::Ordering::Less => (CorrectionAxis::Y, n - m),
        std::cmp::Ordering::Equal => (CorrectionAxis::None, 0),
    };
    Ok(NodeGrid {
        xs,
        ys,
        x_denominator,
        y_denominator,
        p_leading,
        q_leading,
        correction_axis,
        correction_exponent: gap as u32,
        common_degree: m.max(n),
    })
}

/// The elimination polynomials rewritten at the grid's common degree.
#[derive(Debug, Clone)]
struct EliminationPolys<S> {
    u1: Vec<S>,
    v1: Vec<S>,
    u2: Vec<S>,
    v2: Vec<S>,
}

impl<S: Scalar> EliminationPolys<S> {
    fn new(curve: &RationalCurve, grid: &NodeGrid) -> Result<Self> {
        let d = grid.common_degree;
        let conv = |p: &BernsteinPoly<Rational>| -> Result<Vec<S>> {
            Ok(p.with_degree(d)?.coeffs().iter().map(S::from_rational).collect())
        };
        Ok(EliminationPolys {
            u1: conv(&curve.u1)?,
            v1: conv(&curve.v1)?,
            u2: conv(&curve.u2)?,
            v2: conv(&curve.v2)?,
        })
    }

    fn datum(&self, x0: &S, y0: &S, grid: &NodeGrid) -> Result<S> {
        let combine = |u: &[S], v: &[S], s: &S| -> Vec<S> {
            u.iter()
                .zip(v)
                .map(|(a, b)| a.clone() - s.clone() * b.clone())
                .collect()
        };
        let p = combine(&self.u1, &self.v1, x0);
        let q = combine(&self.u2, &self.v2, y0);
        let bs = match grid.correction_axis {
            CorrectionAxis::Y => bezout::build(&q, &p)?,
            _ => bezout::build(&p, &q)?,
        };
        let correction = grid.correction_at(x0, y0);
        if correction.is_zero() {
            return Err(Error::CorrectionVanishes(format!("({x0:?}, {y0:?})")));
        }
        bezout::determinant(bs.matrix())?.checked_div(&correction)
    }
}

/// Value of the implicit polynomial at `(x0, y0)`, up to the scale shared
/// by every node of `grid`.
pub fn interpolation_datum<S: Scalar>(
    curve: &RationalCurve,
    x0: &S,
    y0: &S,
    grid: &NodeGrid,
) -> Result<S> {
    EliminationPolys::new(curve, grid)?.datum(x0, y0, grid)
}

/// Bookkeeping from one Kronecker solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct KroneckerStats {
    pub factorizations: usize,
    pub bx_solves: usize,
    pub by_solves: usize,
    /// Multiplications and divisions across all bidiagonal solves.
    pub solve_ops: usize,
}

fn check_dims<S: Scalar>(nx: usize, ny: usize, data: &Matrix<S>) -> Result<()> {
    if data.rows() != nx {
        return Err(Error::DimensionMismatch {
            expected: nx,
            found: data.rows(),
        });
    }
    if data.cols() != ny {
        return Err(Error::DimensionMismatch {
            expected: ny,
            found: data.cols(),
        });
    }
    Ok(())
}

/// Solves `B_x C B_y^T = data` given factorizations of `B_x` and `B_y`.
pub fn solve_kronecker_factored<S: Scalar>(
    fx: &BidiagonalFactorization<S>,
    fy: &BidiagonalFactorization<S>,
    data: &Matrix<S>,
) -> Result<(Matrix<S>, KroneckerStats)> {
    let (nx, ny) = (fx.order(), fy.order());
    check_dims(nx, ny, data)?;

    // m+1 column systems with B_x.
    let cols: Vec<(Vec<S>, usize)> = (0..ny)
        .into_par_iter()
        .map(|j| fx.solve_counted(&data.column(j)))
        .collect::<Result<_>>()?;
    let mut ops: usize = cols.iter().map(|(_, c)| c).sum();
    let z = Matrix::from_fn(nx, ny, |i, j| cols[j].0[i].clone());

    // n+1 row systems with B_y.
    let rows: Vec<(Vec<S>, usize)> = (0..nx)
        .into_par_iter()
        .map(|i| fy.solve_counted(z.row(i)))
        .collect::<Result<_>>()?;
    ops += rows.iter().map(|(_, c)| c).sum::<usize>();
    let c = Matrix::from_rows(rows.into_iter().map(|(r, _)| r).collect())?;

    Ok((
        c,
        KroneckerStats {
            factorizations: 0,
            bx_solves: ny,
            by_solves: nx,
            solve_ops: ops,
        },
    ))
}

/// Solves `(B_x ⊗ B_y) vec(C) = vec(data)` (row-major vec) without forming
/// the Kronecker product.
pub fn solve_kronecker<S: Scalar>(
    bx: &CollocationMatrix<S>,
    by: &CollocationMatrix<S>,
    data: &Matrix<S>,
) -> Result<Matrix<S>> {
    solve_kronecker_with_stats(bx, by, data).map(|(c, _)| c)
}

pub fn solve_kronecker_with_stats<S: Scalar>(
    bx: &CollocationMatrix<S>,
    by: &CollocationMatrix<S>,
    data: &Matrix<S>,
) -> Result<(Matrix<S>, KroneckerStats)> {
    check_dims(bx.matrix().rows(), by.matrix().rows(), data)?;
    let fx = factorize(bx.matrix())?;
    let fy = factorize(by.matrix())?;
    let (c, mut stats) = solve_kronecker_factored(&fx, &fy, data)?;
    stats.factorizations = 2;
    Ok((c, stats))
}

/// Pipeline settings.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Options {
    /// How collocation matrices are factorized for inexact scalars; exact
    /// scalars always factorize natively.
    pub factor_mode: FactorMode,
}

/// Everything the pipeline computed along the way.
#[derive(Debug, Clone)]
pub struct Implicitization<S> {
    pub curve: ImplicitCurve<S>,
    pub grid: NodeGrid,
    pub data: Matrix<S>,
    pub stats: KroneckerStats,
}

/// Exact implicitization.
pub fn implicitize(curve: &RationalCurve) -> Result<ImplicitCurve<Rational>> {
    implicitize_with::<Rational>(curve, Options::default()).map(|r| r.curve)
}

pub fn implicitize_with<S: Scalar>(
    curve: &RationalCurve,
    options: Options,
) -> Result<Implicitization<S>> {
    let (n, m) = implicit_degrees(curve)?;
    if m == 0 {
        return Err(Error::DegenerateCurve("x coordinate is constant"));
    }
    if n == 0 {
        return Err(Error::DegenerateCurve("y coordinate is constant"));
    }
    let grid = make_nodes(n, m, curve)?;
    let polys = EliminationPolys::<S>::new(curve, &grid)?;

    let xs: Vec<S> = grid.xs.iter().map(S::from_rational).collect();
    let ys: Vec<S> = grid.ys.iter().map(S::from_rational).collect();
    let flat: Vec<S> = (0..(n + 1) * (m + 1))
        .into_par_iter()
        .map(|k| polys.datum(&xs[k / (m + 1)], &ys[k % (m + 1)], &grid))
        .collect::<Result<_>>()?;
    let data = Matrix::from_rows(flat.chunks(m + 1).map(<[S]>::to_vec).collect())?;

    let bx = collocation(n, &grid.xs)?;
    let by = collocation(m, &grid.ys)?;
    let mode = if S::EXACT {
        FactorMode::Native
    } else {
        options.factor_mode
    };
    let fx = factorize_from_exact::<S>(bx.matrix(), mode)?;
    let fy = factorize_from_exact::<S>(by.matrix(), mode)?;
    let (coeffs, mut stats) = solve_kronecker_factored(&fx, &fy, &data)?;
    stats.factorizations = 2;
    if coeffs.is_zero() {
        return Err(Error::DegenerateCurve(
            "implicit polynomial vanishes identically (numerators and denominators share a root)",
        ));
    }

    Ok(Implicitization {
        curve: ImplicitCurve { coeffs },
        grid,
        data,
        stats,
    })
}
