//! Curve description files.
//!
//! ```json
//! {
//!   "x": { "num": ["4", "4", "3", "3", "7"], "den": ["1", "1", "1", "1", "3"] },
//!   "y": { "num": ["2", "3", "3", "3", "4"], "den": ["1"] },
//!   "mode": "exact",
//!   "normalize": false
//! }
//! ```

use std::fmt;

use implicit_core::{parse_scalar, BernsteinPoly, Rational, RationalCurve};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Coordinate {
    num: Vec<String>,
    den: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveFile {
    x: Coordinate,
    y: Coordinate,
    mode: Option<Mode>,
    normalize: Option<bool>,
}

#[derive(Debug)]
pub struct CurveInput {
    pub curve: RationalCurve,
    pub mode: Option<Mode>,
    pub normalize: Option<bool>,
}

/// 1-based line and column of a byte offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

fn position_of(src: &str, offset: usize) -> Position {
    let before = &src[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rfind('\n').map_or(offset, |nl| offset - nl - 1) + 1;
    Position { line, column }
}

/// Best-effort location of `needle`, searched after each anchor in turn.
fn locate(src: &str, anchors: &[String], needle: &str) -> Position {
    let mut from = 0;
    for a in anchors {
        if let Some(i) = src[from..].find(a.as_str()) {
            from += i + a.len();
        }
    }
    let offset = src[from..].find(needle).map_or(from, |i| from + i);
    position_of(src, offset)
}

fn quoted(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn parse_list(src: &str, axis: &str, field: &str, list: &[String]) -> Result<BernsteinPoly<Rational>, CliError> {
    let anchors = [quoted(axis), quoted(field)];
    if list.is_empty() {
        return Err(CliError::Input {
            file: None,
            at: locate(src, &anchors, "["),
            message: format!("{axis}.{field} must not be empty"),
        });
    }
    let coeffs = list
        .iter()
        .enumerate()
        .map(|(k, entry)| {
            parse_scalar(entry).map_err(|e| CliError::Input {
                file: None,
                at: locate(src, &anchors, &quoted(entry)),
                message: format!("{axis}.{field}[{k}]: {e}"),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let poly = BernsteinPoly::new(coeffs).expect("list is nonempty");
    if field == "den" && poly.is_zero() {
        return Err(CliError::Input {
            file: None,
            at: locate(src, &anchors, "["),
            message: format!("{axis}.den is identically zero"),
        });
    }
    Ok(poly)
}

pub fn parse(src: &str) -> Result<CurveInput, CliError> {
    let file: CurveFile = serde_json::from_str(src).map_err(|e| CliError::Input {
        file: None,
        at: Position {
            line: e.line(),
            column: e.column(),
        },
        message: e.to_string(),
    })?;
    let u1 = parse_list(src, "x", "num", &file.x.num)?;
    let v1 = parse_list(src, "x", "den", &file.x.den)?;
    let u2 = parse_list(src, "y", "num", &file.y.num)?;
    let v2 = parse_list(src, "y", "den", &file.y.den)?;
    let curve = RationalCurve::new(u1, v1, u2, v2).map_err(CliError::Unsupported)?;
    Ok(CurveInput {
        curve,
        mode: file.mode,
        normalize: file.normalize,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = include_str!("../examples/example_curve.json");

    #[test]
    fn example_file_parses() {
        let input = parse(EXAMPLE).unwrap();
        assert_eq!(input.curve.x_num().degree(), 4);
        assert_eq!(input.curve.y_den().degree(), 4);
        assert_eq!(input.mode, Some(Mode::Exact));
    }

    #[test]
    fn malformed_entry_is_located() {
        let src = "{\n  \"x\": {\"num\": [\"1\", \"3//4\"], \"den\": [\"1\"]},\n  \"y\": {\"num\": [\"0\", \"1\"], \"den\": [\"1\"]}\n}";
        let err = parse(src).unwrap_err();
        let CliError::Input { at, message, .. } = &err else {
            panic!("{err:?}");
        };
        assert_eq!(*at, Position { line: 2, column: 22 });
        assert!(message.contains("x.num[1]") && message.contains("3//4"), "{message}");
    }

    #[test]
    fn anchors_disambiguate_repeated_entries() {
        let src = "{\"x\": {\"num\": [\"1/0\"], \"den\": [\"1\"]},\n\"y\": {\"num\": [\"1/0\"], \"den\": [\"1\"]}}";
        let err = parse(src).unwrap_err();
        assert!(matches!(err, CliError::Input { at: Position { line: 1, .. }, .. }));
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(parse("{"), Err(CliError::Input { .. })));
        let zero_den = r#"{"x": {"num": ["1", "2"], "den": ["0", "0"]}, "y": {"num": ["1"], "den": ["1"]}}"#;
        assert!(matches!(parse(zero_den), Err(CliError::Input { .. })));
        let empty = r#"{"x": {"num": [], "den": ["1"]}, "y": {"num": ["1"], "den": ["1"]}}"#;
        assert!(matches!(parse(empty), Err(CliError::Input { .. })));
        let extra = r#"{"x": {"num": ["1"], "den": ["1"]}, "y": {"num": ["1"], "den": ["1"]}, "z": 1}"#;
        assert!(matches!(parse(extra), Err(CliError::Input { .. })));
    }
}
