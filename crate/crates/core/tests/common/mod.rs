#![allow(dead_code)]

use implicit_core::oracle::sylvester_resultant;
use implicit_core::{implicit_degrees, BernsteinPoly, Rational, RationalCurve, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

pub fn poly(c: &[i64]) -> BernsteinPoly<Rational> {
    BernsteinPoly::new(c.iter().map(|&v| q(v, 1)).collect()).unwrap()
}

pub fn example_curve() -> RationalCurve {
    RationalCurve::new(
        poly(&[4, 4, 3, 3, 7]),
        poly(&[1, 1, 1, 1, 3]),
        poly(&[2, 3, 3, 3, 4]),
        poly(&[1]),
    )
    .unwrap()
}

pub const GOLDEN: [&str; 20] = [
    "25264/27", "66256/81", "167852/243", "45652/81", "36137/81", "15728/27", "125312/243",
    "320120/729", "29164/81", "69421/243", "29440/81", "79024/243", "203228/729", "18580/81",
    "14761/81", "2048/9", "16640/81", "14336/81", "3940/27", "9391/81",
];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_poly(rng: &mut impl Rng, degree: usize, lo: i64, hi: i64) -> BernsteinPoly<Rational> {
    poly(&(0..=degree).map(|_| rng.gen_range(lo..=hi)).collect::<Vec<_>>())
}

fn coprime(a: &BernsteinPoly<Rational>, b: &BernsteinPoly<Rational>) -> bool {
    match (a.power_degree(), b.power_degree()) {
        (Some(_), Some(0)) | (Some(0), Some(_)) => true,
        (Some(_), Some(_)) => !sylvester_resultant(&a.to_power(), &b.to_power())
            .unwrap()
            .is_zero(),
        _ => false,
    }
}

/// A rational curve with degrees in `1..=max_degree` per coordinate and small
/// integer Bernstein coefficients, satisfying the coprimality contract.
/// Roughly half of the curves are polynomial.
pub fn random_curve(rng: &mut impl Rng, max_degree: usize) -> RationalCurve {
    loop {
        let dx = rng.gen_range(1..=max_degree);
        let dy = rng.gen_range(1..=max_degree);
        let u1 = random_poly(rng, dx, -4, 4);
        let u2 = random_poly(rng, dy, -4, 4);
        let (v1, v2) = if rng.gen_bool(0.5) {
            (poly(&[1]), poly(&[1]))
        } else {
            (random_poly(rng, dx, 1, 3), random_poly(rng, dy, 1, 3))
        };
        if !coprime(&u1, &v1) || !coprime(&u2, &v2) {
            continue;
        }
        let curve = RationalCurve::new(u1, v1, u2, v2).unwrap();
        match implicit_degrees(&curve) {
            Ok((n, m)) if n >= 1 && m >= 1 => return curve,
            _ => continue,
        }
    }
}

/// A parameter in `(0, 1)` with a small denominator that is not a pole.
pub fn random_parameter(rng: &mut impl Rng, curve: &RationalCurve) -> (Rational, (Rational, Rational)) {
    loop {
        let den = rng.gen_range(2..=60i64);
        let t = q(rng.gen_range(1..den), den);
        if let Some(p) = curve.point(&t) {
            return (t, p);
        }
    }
}

/// Dense Gaussian elimination on the explicitly formed Kronecker system.
pub fn dense_kronecker_solve(
    bx: &implicit_core::Matrix<Rational>,
    by: &implicit_core::Matrix<Rational>,
    data: &implicit_core::Matrix<Rational>,
) -> Vec<Rational> {
    let flat: Vec<Rational> = data.to_rows().into_iter().flatten().collect();
    bx.kronecker(by).solve_dense(&flat).unwrap()
}

/// Strictly increasing rational nodes in (0, 1).
pub fn random_nodes(rng: &mut impl Rng, count: usize) -> Vec<Rational> {
    let den = 97i64;
    let mut picks = std::collections::BTreeSet::new();
    while picks.len() < count {
        picks.insert(rng.gen_range(1..den));
    }
    picks.into_iter().map(|k| q(k, den)).collect()
}

/// Bernstein coefficients at degree `d` of a polynomial with exact power
/// degree `exact` (random integer power coefficients, nonzero leading).
pub fn random_poly_with_degree(rng: &mut impl Rng, d: usize, exact: usize) -> BernsteinPoly<Rational> {
    let mut power: Vec<Rational> = (0..exact).map(|_| q(rng.gen_range(-5..=5), 1)).collect();
    let mut lead = 0;
    while lead == 0 {
        lead = rng.gen_range(-5..=5);
    }
    power.push(q(lead, 1));
    BernsteinPoly::from_power(&power, d).unwrap()
}
