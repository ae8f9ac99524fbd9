//! Text formats: the polynomial grammar, ideal files and sequence syntax.
//!
//! Polynomials are sums of terms such as `3/2*x^2*y` or `- x y^3`. The `*`
//! between factors is optional and whitespace is ignored. Ideal files hold one
//! generator per line, `#` comment lines and at most one `truncate: D` line.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::forms::BinaryForm;
use crate::ideal::{GradedIdeal, IdealError};
use crate::linalg::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("inhomogeneous polynomial: terms of degrees {first} and {second}")]
    InhomogeneousInput { first: usize, second: usize },
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        source: Box<ParseError>,
    },
    #[error("line {line}: {message}")]
    Document { line: usize, message: String },
    #[error("{0}")]
    Ideal(#[from] IdealError),
    #[error("invalid sequence text: {0}")]
    Sequence(String),
}

struct Cursor {
    /// Non-whitespace characters with their 1-based column.
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        let chars = src
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i + 1, c))
            .collect();
        Cursor { chars, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or_else(|| self.chars.last().map_or(1, |&(i, _)| i + 1), |&(i, _)| i)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            column: self.column(),
            message: message.into(),
        })
    }

    fn natural(&mut self) -> Result<BigInt, ParseError> {
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            return self.error("expected a number");
        }
        Ok(digits.parse().expect("ascii digits"))
    }

    fn exponent(&mut self) -> Result<usize, ParseError> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.bump();
        let n = self.natural()?;
        match usize::try_from(n) {
            Ok(e) if e <= 10_000 => Ok(e),
            _ => self.error("exponent too large"),
        }
    }
}

/// Parses a homogeneous polynomial in `x` and `y`.
pub fn parse_form(text: &str) -> Result<BinaryForm, ParseError> {
    let mut cur = Cursor::new(text);
    if cur.peek().is_none() {
        return cur.error("empty polynomial");
    }
    // (x-power, y-power, coefficient)
    let mut terms: Vec<(usize, usize, Scalar)> = Vec::new();
    let mut sign = match cur.peek() {
        Some('-') => {
            cur.bump();
            -Scalar::one()
        }
        Some('+') => {
            cur.bump();
            Scalar::one()
        }
        _ => Scalar::one(),
    };
    loop {
        let (i, j, c) = parse_term(&mut cur)?;
        terms.push((i, j, c * &sign));
        match cur.bump() {
            None => break,
            Some('+') => sign = Scalar::one(),
            Some('-') => sign = -Scalar::one(),
            Some(other) => {
                cur.pos -= 1;
                return cur.error(format!("unexpected '{other}'"));
            }
        }
    }

    let nonzero: Vec<&(usize, usize, Scalar)> = terms.iter().filter(|t| !t.2.is_zero()).collect();
    let degree = nonzero
        .first()
        .map_or_else(|| terms[0].0 + terms[0].1, |t| t.0 + t.1);
    for t in &nonzero {
        if t.0 + t.1 != degree {
            return Err(ParseError::InhomogeneousInput {
                first: degree,
                second: t.0 + t.1,
            });
        }
    }
    let mut coeffs = vec![Scalar::zero(); degree + 1];
    for (i, j, c) in terms {
        if i + j == degree {
            coeffs[i] += c;
        }
    }
    Ok(BinaryForm::new(coeffs))
}

fn parse_term(cur: &mut Cursor) -> Result<(usize, usize, Scalar), ParseError> {
    let mut coeff = Scalar::one();
    let mut have_factor = false;
    if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        let num = cur.natural()?;
        let den = if cur.peek() == Some('/') {
            cur.bump();
            let den = cur.natural()?;
            if den.is_zero() {
                return cur.error("zero denominator");
            }
            den
        } else {
            BigInt::one()
        };
        coeff = Scalar::new(num, den);
        have_factor = true;
    }
    let (mut xi, mut yj) = (0, 0);
    loop {
        let starred = cur.peek() == Some('*');
        if starred {
            if !have_factor {
                return cur.error("'*' before the first factor");
            }
            cur.bump();
        }
        match cur.peek() {
            Some('x') => {
                cur.bump();
                xi += cur.exponent()?;
            }
            Some('y') => {
                cur.bump();
                yj += cur.exponent()?;
            }
            Some(c) if starred => {
                return cur.error(format!("expected 'x' or 'y' after '*', found '{c}'"))
            }
            None if starred => return cur.error("expected 'x' or 'y' after '*'"),
            _ => break,
        }
        have_factor = true;
    }
    if !have_factor {
        return match cur.peek() {
            Some(c) => cur.error(format!("unexpected '{c}'")),
            None => cur.error("missing term"),
        };
    }
    Ok((xi, yj, coeff))
}

fn write_scalar(f: &mut fmt::Formatter<'_>, c: &Scalar) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, i: usize, j: usize) -> fmt::Result {
    let mut parts = Vec::new();
    match i {
        0 => {}
        1 => parts.push("x".to_string()),
        _ => parts.push(format!("x^{i}")),
    }
    match j {
        0 => {}
        1 => parts.push("y".to_string()),
        _ => parts.push(format!("y^{j}")),
    }
    write!(f, "{}", parts.join("*"))
}

impl fmt::Display for BinaryForm {
    /// Terms in decreasing power of `x`, coefficients in lowest terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let d = self.degree();
        let mut first = true;
        for i in (0..=d).rev() {
            let c = self.coeff(i);
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let abs = c.abs();
            if d == 0 {
                write_scalar(f, &abs)?;
            } else if abs.is_one() {
                write_monomial(f, i, d - i)?;
            } else {
                write_scalar(f, &abs)?;
                write!(f, "*")?;
                write_monomial(f, i, d - i)?;
            }
        }
        Ok(())
    }
}

/// Parses an ideal file.
pub fn parse_ideal(text: &str) -> Result<GradedIdeal, ParseError> {
    let mut generators = Vec::new();
    let mut truncation = None;
    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("truncate") {
            let Some(value) = rest.trim_start().strip_prefix(':') else {
                return Err(ParseError::Document {
                    line: line_no,
                    message: "expected 'truncate: D'".into(),
                });
            };
            if truncation.is_some() {
                return Err(ParseError::Document {
                    line: line_no,
                    message: "duplicate truncate directive".into(),
                });
            }
            let d: usize = value.trim().parse().map_err(|_| ParseError::Document {
                line: line_no,
                message: format!("invalid truncation degree '{}'", value.trim()),
            })?;
            if d == 0 {
                return Err(ParseError::Document {
                    line: line_no,
                    message: "truncation degree must be at least 1".into(),
                });
            }
            truncation = Some(d);
            continue;
        }
        let form = parse_form(line).map_err(|e| ParseError::Line {
            line: line_no,
            source: Box::new(e),
        })?;
        if form.is_zero() {
            return Err(ParseError::Document {
                line: line_no,
                message: "zero generator".into(),
            });
        }
        generators.push(form);
    }
    if generators.is_empty() && truncation.is_none() {
        return Err(ParseError::Document {
            line: 0,
            message: "no generators and no truncate directive".into(),
        });
    }
    Ok(GradedIdeal::new(generators, truncation)?)
}

/// Renders an ideal in the file format, one generator per line, with
/// optional leading comment lines.
pub fn format_ideal(ideal: &GradedIdeal, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    for g in ideal.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    if let Some(d) = ideal.truncation() {
        out.push_str(&format!("truncate: {d}\n"));
    }
    out
}

/// Parses `1,2,3,1`, optionally wrapped in parentheses, with free whitespace.
pub fn parse_sequence(text: &str) -> Result<Vec<usize>, ParseError> {
    let trimmed = text.trim();
    let inner = match (trimmed.strip_prefix('('), trimmed.ends_with(')')) {
        (Some(rest), true) => &rest[..rest.len() - 1],
        (None, false) => trimmed,
        _ => return Err(ParseError::Sequence("unbalanced parentheses".into())),
    };
    if inner.trim().is_empty() {
        return Err(ParseError::Sequence("empty sequence".into()));
    }
    inner
        .split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<usize>()
                .map_err(|_| ParseError::Sequence(format!("'{part}' is not a nonnegative integer")))
        })
        .collect()
}

/// Renders a sequence as `(1, 2, 1)`.
pub fn format_sequence(entries: &[usize]) -> String {
    let parts: Vec<String> = entries.iter().map(usize::to_string).collect();
    format!("({})", parts.join(", "))
}
