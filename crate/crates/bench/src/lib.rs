//! Fixtures shared by the criterion benchmarks.

use implicit_core::{BernsteinPoly, Rational, RationalCurve, Scalar};

fn poly(c: &[i64]) -> BernsteinPoly<Rational> {
    BernsteinPoly::new(c.iter().map(|&v| Rational::from_i64(v)).collect()).unwrap()
}

/// The quartic rational example curve with a degree-three y coordinate.
pub fn example_curve() -> RationalCurve {
    RationalCurve::new(
        poly(&[4, 4, 3, 3, 7]),
        poly(&[1, 1, 1, 1, 3]),
        poly(&[2, 3, 3, 3, 4]),
        poly(&[1]),
    )
    .unwrap()
}

/// A polynomial curve of degree `d` in both coordinates with a fixed,
/// non-symmetric control polygon.
pub fn polynomial_curve(d: usize) -> RationalCurve {
    let xs: Vec<i64> = (0..=d as i64).map(|i| (i * i + 3 * i) % 7 - 2).collect();
    let ys: Vec<i64> = (0..=d as i64).map(|i| (2 * i * i + i + 1) % 5 - 1).collect();
    RationalCurve::polynomial(poly(&xs), poly(&ys)).unwrap()
}

/// Grid nodes `(i+1)/(d+2)`.
pub fn grid_nodes(d: usize) -> Vec<Rational> {
    (0..=d as i64)
        .map(|i| Rational::from_ratio(i + 1, d as i64 + 2))
        .collect()
}
