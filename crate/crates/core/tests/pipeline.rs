mod common;

use common::*;
use implicit_core::bezout::{self, power_resultant_scale};
use implicit_core::oracle::{
    compare_up_to_scale, power_to_tensor_bernstein, resultant_curve_power, sylvester_resultant,
    tensor_bernstein_to_power, BivariatePower,
};
use implicit_core::{
    collocation, implicitize, implicitize_with, interpolation_datum, make_nodes, solve_kronecker,
    BernsteinPoly, FactorMode, Matrix, Options, Rational, RationalCurve, Scalar, Tolerance,
};
use proptest::prelude::*;
use rand::Rng;

fn oracle_grid(c: &RationalCurve) -> Matrix<Rational> {
    power_to_tensor_bernstein(&resultant_curve_power(c).unwrap())
}

fn grid(rows: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v, 1)).collect()).collect())
        .unwrap()
}

#[test]
fn golden_through_pipeline_stages() {
    let c = example_curve();
    let r = implicitize_with::<Rational>(&c, Options::default()).unwrap();
    assert_eq!(r.curve.to_strings(), GOLDEN);
    assert_eq!(r.stats.factorizations, 2);
    assert_eq!(r.stats.bx_solves, 5);
    assert_eq!(r.stats.by_solves, 4);

    let bx = collocation(3, &r.grid.xs).unwrap();
    let by = collocation(4, &r.grid.ys).unwrap();
    let back = bx.matrix().kronecker(by.matrix()).mul_vec(&r.curve.coefficients()).unwrap();
    assert_eq!(back, r.data.to_rows().concat());
}

#[test]
fn example_datum_against_sylvester() {
    let c = example_curve();
    let nodes = make_nodes(3, 4, &c).unwrap();
    let (x0, y0) = (q(1, 5), q(1, 6));
    let datum = interpolation_datum(&c, &x0, &y0, &nodes).unwrap();

    let p: Vec<Rational> = [4, 4, 3, 3, 7]
        .iter()
        .zip([1, 1, 1, 1, 3])
        .map(|(&u, v)| q(u, 1) - x0.clone() * q(v, 1))
        .collect();
    let qq: Vec<Rational> = [2, 3, 3, 3, 4].iter().map(|&u| q(u, 1) - y0.clone()).collect();
    let res = sylvester_resultant(
        &BernsteinPoly::new(p.clone()).unwrap().to_power(),
        &BernsteinPoly::new(qq.clone()).unwrap().to_power(),
    )
    .unwrap();

    // At order 4 the Bernstein-Bezout determinant is 1/81 of the power-basis
    // Sylvester resultant (times the leading-coefficient factor).
    let kappa: Rational = power_resultant_scale(4);
    assert_eq!(kappa, q(1, 81));
    let det = bezout::build(&p, &qq).unwrap().determinant();
    assert_eq!(det, kappa.clone() * q(3, 5) * res.clone());
    assert_eq!(datum, kappa * res);
}

#[test]
fn parabola_matches_power_form() {
    let parabola = RationalCurve::polynomial(poly(&[0, 1]), poly(&[0, 0, 1])).unwrap();
    let f = implicitize(&parabola).unwrap();
    assert_eq!((f.deg_x(), f.deg_y()), (2, 1));
    // x^2 - y
    let expected = power_to_tensor_bernstein(&BivariatePower {
        coeffs: grid(&[&[0, -1], &[0, 0], &[1, 0]]),
    });
    assert!(compare_up_to_scale(f.grid(), &expected, Tolerance::default()).is_some());
}

#[test]
fn line_is_proportional_to_x_minus_y() {
    let line = RationalCurve::polynomial(poly(&[0, 1]), poly(&[0, 1])).unwrap();
    let f = implicitize(&line).unwrap();
    let expected = grid(&[&[0, -1], &[1, 0]]);
    assert!(compare_up_to_scale(f.grid(), &expected, Tolerance::default()).is_some());
}

#[test]
fn kronecker_3x3_by_4x4_matches_dense() {
    let mut rng = rng(34);
    for _ in 0..5 {
        let bx = collocation(2, &random_nodes(&mut rng, 3)).unwrap();
        let by = collocation(3, &random_nodes(&mut rng, 4)).unwrap();
        let data = Matrix::from_fn(3, 4, |_, _| q(rng.gen_range(-9..=9), rng.gen_range(1..=5)));
        let c = solve_kronecker(&bx, &by, &data).unwrap();
        assert_eq!(c.to_rows().concat(), dense_kronecker_solve(bx.matrix(), by.matrix(), &data));
    }
}

#[test]
fn float_mode_tracks_exact() {
    let exact = implicitize(&example_curve()).unwrap();
    for mode in [FactorMode::Native, FactorMode::ExactThenRound] {
        let float = implicitize_with::<f64>(&example_curve(), Options { factor_mode: mode })
            .unwrap()
            .curve;
        let reference = exact.grid().map(|v| v.to_f64());
        let lambda = compare_up_to_scale(float.grid(), &reference, Tolerance { rel: 1e-8 });
        let lambda = lambda.expect("float output proportional to exact");
        assert!((lambda - 1.0).abs() < 1e-8, "{mode:?}: scale {lambda}");
    }
}

#[test]
fn random_curves_have_sharp_degrees() {
    let mut rng = rng(5);
    for _ in 0..10 {
        let c = random_curve(&mut rng, 4);
        let f = implicitize(&c).unwrap();
        let power = tensor_bernstein_to_power(f.grid());
        let (n, m) = (f.deg_x(), f.deg_y());
        assert!(power.coeffs.row(n).iter().any(|v| !v.is_zero()), "no x^{n} term");
        assert!(power.coeffs.column(m).iter().any(|v| !v.is_zero()), "no y^{m} term");
    }
}

fn seeded_curve() -> impl Strategy<Value = RationalCurve> {
    any::<u64>().prop_map(|s| random_curve(&mut rng(s), 3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn residual_vanishes_on_curve(c in seeded_curve(), seed in any::<u64>()) {
        let f = implicitize(&c).unwrap();
        let mut r = rng(seed);
        for _ in 0..10 {
            let (_, (x, y)) = random_parameter(&mut r, &c);
            prop_assert!(f.evaluate(&x, &y).is_zero());
        }
    }

    #[test]
    fn proportional_to_oracle(c in seeded_curve()) {
        let f = implicitize(&c).unwrap();
        prop_assert!(compare_up_to_scale(f.grid(), &oracle_grid(&c), Tolerance::default()).is_some());
    }

    #[test]
    fn kronecker_consistency(c in seeded_curve()) {
        let r = implicitize_with::<Rational>(&c, Options::default()).unwrap();
        let bx = collocation(r.curve.deg_x(), &r.grid.xs).unwrap();
        let by = collocation(r.curve.deg_y(), &r.grid.ys).unwrap();
        let back = bx.matrix().kronecker(by.matrix()).mul_vec(&r.curve.coefficients()).unwrap();
        prop_assert_eq!(back, r.data.to_rows().concat());
    }

    #[test]
    fn bezout_determinant_law(seed in any::<u64>(), d in 1usize..=5, gap in 0usize..=2) {
        prop_assume!(gap < d);
        let mut r = rng(seed);
        let p = random_poly_with_degree(&mut r, d, d);
        let qq = random_poly_with_degree(&mut r, d, d - gap);
        let det = bezout::build(p.coeffs(), qq.coeffs()).unwrap().determinant();
        let res = sylvester_resultant(&p.to_power(), &qq.to_power()).unwrap();
        let lead = p.leading_power_coeff().powi(gap as u32);
        prop_assert_eq!(det, power_resultant_scale::<Rational>(d) * res * lead);
    }
}
