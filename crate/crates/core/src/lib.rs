//! Implicitization of rational plane curves given in Bernstein (Bézier)
//! form.
//!
//! The implicit equation `F(x, y) = 0` is produced directly in the
//! tensor-product Bernstein basis. Values of `F` on a rational node grid come
//! from determinants of Bernstein–Bézout resultant matrices; the
//! coefficients follow from a Kronecker-structured interpolation solve in
//! which each collocation matrix is strictly totally positive and is
//! inverted through a bidiagonal factorization obtained by Neville
//! elimination.
//!
//! ```
//! use implicit_core::{implicitize, parse_scalar, BernsteinPoly, RationalCurve};
//!
//! let poly = |c: &[&str]| {
//!     BernsteinPoly::new(c.iter().map(|s| parse_scalar(s).unwrap()).collect()).unwrap()
//! };
//! let curve = RationalCurve::new(
//!     poly(&["4", "4", "3", "3", "7"]),
//!     poly(&["1", "1", "1", "1", "3"]),
//!     poly(&["2", "3", "3", "3", "4"]),
//!     poly(&["1"]),
//! )
//! .unwrap();
//! let f = implicitize(&curve).unwrap();
//! assert_eq!((f.deg_x(), f.deg_y()), (3, 4));
//! assert_eq!(f.to_strings()[0], "25264/27");
//! ```

#![allow(clippy::needless_range_loop)]

pub mod bernstein;
pub mod bezout;
pub mod error;
pub mod implicitize;
pub mod matrix;
pub mod numeric;
pub mod oracle;
pub mod tplinalg;

pub use bernstein::{collocation, BernsteinPoly, CollocationMatrix};
pub use bezout::BezoutMatrix;
pub use error::{Error, Result};
pub use implicitize::{
    evaluate_implicit, implicit_degrees, implicitize, implicitize_with, interpolation_datum,
    make_nodes, solve_kronecker, ImplicitCurve, Implicitization, KroneckerStats, NodeGrid,
    Options, RationalCurve,
};
pub use matrix::Matrix;
pub use numeric::{format_scalar, parse_scalar, Rational, Scalar, Tolerance};
pub use tplinalg::{factorize, BidiagonalFactorization, FactorMode};
