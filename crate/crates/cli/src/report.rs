//! Output documents and verification checks.

use implicit_core::bernstein::basis_values;
use implicit_core::oracle::{compare_up_to_scale, power_to_tensor_bernstein, resultant_curve_power};
use implicit_core::{format_scalar, ImplicitCurve, Rational, RationalCurve, Scalar, Tolerance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::CliError;

/// Relative residual bound for float mode.
const FLOAT_RESIDUAL_TOL: f64 = 1e-8;
/// Relative tolerance when matching float output against the exact oracle.
const FLOAT_ORACLE_TOL: f64 = 1e-6;

/// Implicit curve in either field.
pub enum Computed {
    Exact(ImplicitCurve<Rational>),
    Float(ImplicitCurve<f64>),
}

impl Computed {
    pub fn degrees(&self) -> (usize, usize) {
        match self {
            Computed::Exact(f) => (f.deg_x(), f.deg_y()),
            Computed::Float(f) => (f.deg_x(), f.deg_y()),
        }
    }

    pub fn normalized(&self) -> Self {
        match self {
            Computed::Exact(f) => Computed::Exact(f.normalized()),
            Computed::Float(f) => Computed::Float(f.normalized()),
        }
    }

    pub fn coefficient_strings(&self) -> Vec<String> {
        match self {
            Computed::Exact(f) => f.to_strings(),
            Computed::Float(f) => f.coefficients().iter().map(|v| v.to_string()).collect(),
        }
    }

    pub fn mode_name(&self) -> &'static str {
        match self {
            Computed::Exact(_) => "exact",
            Computed::Float(_) => "float",
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ResidualReport {
    pub samples: usize,
    pub zero: usize,
    pub seed: u64,
}

impl ResidualReport {
    pub fn passed(&self) -> bool {
        self.zero == self.samples
    }

    pub fn summary(&self) -> String {
        format!("{}/{} residuals zero", self.zero, self.samples)
    }
}

#[derive(Debug, Serialize)]
pub struct OracleReport {
    pub proportional: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scale: Option<String>,
}

impl OracleReport {
    pub fn summary(&self) -> String {
        match &self.scale {
            Some(s) => format!("oracle: proportional, scale {s}"),
            None => "oracle: mismatch".to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub deg_x: usize,
    pub deg_y: usize,
    pub ordering: &'static str,
    pub mode: &'static str,
    pub normalized: bool,
    pub coefficients: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<ResidualReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
}

impl Report {
    pub fn new(f: &Computed, normalized: bool) -> Self {
        let (deg_x, deg_y) = f.degrees();
        Report {
            deg_x,
            deg_y,
            ordering: "i-major",
            mode: f.mode_name(),
            normalized,
            coefficients: f.coefficient_strings(),
            residual: None,
            oracle: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let cols = self.deg_y + 1;
        let mut s = String::from("i,j,coefficient\n");
        for (k, c) in self.coefficients.iter().enumerate() {
            s.push_str(&format!("{},{},{c}\n", k / cols, k % cols));
        }
        s
    }
}

/// A parameter in (0, 1) that is not a pole, with its point.
fn sample_point(rng: &mut ChaCha8Rng, curve: &RationalCurve) -> (Rational, Rational) {
    loop {
        let den = rng.gen_range(2..=1000i64);
        let t = Rational::from_ratio(rng.gen_range(1..den), den);
        if let Some(p) = curve.point(&t) {
            return p;
        }
    }
}

fn float_residual_small(f: &ImplicitCurve<f64>, x: f64, y: f64) -> bool {
    let bx = basis_values(f.deg_x(), &x);
    let by = basis_values(f.deg_y(), &y);
    let grid = f.grid();
    let mut magnitude = 0.0;
    for (i, a) in bx.iter().enumerate() {
        for (j, b) in by.iter().enumerate() {
            magnitude += (grid[(i, j)] * a * b).abs();
        }
    }
    f.evaluate(&x, &y).abs() <= FLOAT_RESIDUAL_TOL * magnitude
}

/// Evaluates `F` at `samples` random points of the curve.
pub fn check_residual(f: &Computed, curve: &RationalCurve, samples: usize, seed: u64) -> ResidualReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zero = (0..samples)
        .filter(|_| {
            let (x, y) = sample_point(&mut rng, curve);
            match f {
                Computed::Exact(f) => f.evaluate(&x, &y).is_zero(),
                Computed::Float(f) => float_residual_small(f, x.to_f64(), y.to_f64()),
            }
        })
        .count();
    ResidualReport { samples, zero, seed }
}

/// Compares `F` with the Sylvester-resultant oracle up to a nonzero scale.
pub fn check_oracle(f: &Computed, curve: &RationalCurve) -> Result<OracleReport, CliError> {
    let reference =
        power_to_tensor_bernstein(&resultant_curve_power(curve).map_err(CliError::Unsupported)?);
    let scale = match f {
        Computed::Exact(f) => {
            compare_up_to_scale(f.grid(), &reference, Tolerance::default()).map(|s| format_scalar(&s))
        }
        Computed::Float(f) => compare_up_to_scale(
            f.grid(),
            &reference.map(Scalar::to_f64),
            Tolerance { rel: FLOAT_ORACLE_TOL },
        )
        .map(|s| s.to_string()),
    };
    Ok(OracleReport {
        proportional: scale.is_some(),
        scale,
    })
}
