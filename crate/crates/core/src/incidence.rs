//! Polynomial incidence functions `f(x) = ax² + bx + c`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::{Error, Result};

/// Family induced by an incidence polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyClass {
    /// `a = b = 0`: disjoint union of complete digraphs of order at most `c + 1`.
    Constant,
    /// `a = 0, b >= 1`.
    Linear,
    /// `a >= 1`.
    Quadratic,
}

impl fmt::Display for FamilyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyClass::Constant => "constant",
            FamilyClass::Linear => "linear",
            FamilyClass::Quadratic => "quadratic",
        })
    }
}

/// Non-negative coefficients of `f(x) = ax² + bx + c`.
///
/// The zero polynomial is allowed and produces edgeless graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct IncidencePolynomial {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl IncidencePolynomial {
    pub const fn new(a: u64, b: u64, c: u64) -> Self {
        Self { a, b, c }
    }

    /// `f(x) = x²`.
    pub const fn square() -> Self {
        Self::new(1, 0, 0)
    }

    pub const fn constant(c: u64) -> Self {
        Self::new(0, 0, c)
    }

    pub const fn linear(b: u64, c: u64) -> Self {
        Self::new(0, b, c)
    }

    /// `a·x² + b·x + c` in checked 64-bit arithmetic.
    pub fn evaluate(&self, x: u64) -> Result<u64> {
        let overflow = || Error::Overflow {
            context: "incidence polynomial",
        };
        let square = x.checked_mul(x).ok_or_else(overflow)?;
        self.a
            .checked_mul(square)
            .and_then(|q| self.b.checked_mul(x).and_then(|l| q.checked_add(l)))
            .and_then(|s| s.checked_add(self.c))
            .ok_or_else(overflow)
    }

    pub fn classify(&self) -> FamilyClass {
        if self.a >= 1 {
            FamilyClass::Quadratic
        } else if self.b >= 1 {
            FamilyClass::Linear
        } else {
            FamilyClass::Constant
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0 && self.c == 0
    }

    /// Upper bound `a(2i - 1) + b` on the jump in underlying degree between
    /// `v_{i-1}` and `v_i`. It equals `f(i) - f(i-1)` exactly.
    pub fn forward_difference_bound(&self, i: u64) -> Result<u64> {
        if i < 2 {
            return Err(Error::IndexOutOfRange {
                index: i as usize,
                order: usize::MAX,
            });
        }
        let overflow = || Error::Overflow {
            context: "forward difference bound",
        };
        i.checked_mul(2)
            .map(|t| t - 1)
            .and_then(|t| t.checked_mul(self.a))
            .and_then(|t| t.checked_add(self.b))
            .ok_or_else(overflow)
    }

    /// Parses the grammar `A*x^2 + B*x + C` (terms optional, in any order,
    /// coefficient 1 may be elided, whitespace ignored).
    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).parse()
    }
}

impl FromStr for IncidencePolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Canonical form: `a*x^2+b*x+c`, zero terms elided, unit coefficients
/// written as bare `x^2` / `x`, and `0` for the zero polynomial.
impl fmt::Display for IncidencePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms = Vec::with_capacity(3);
        match self.a {
            0 => {}
            1 => terms.push("x^2".to_string()),
            a => terms.push(format!("{a}*x^2")),
        }
        match self.b {
            0 => {}
            1 => terms.push("x".to_string()),
            b => terms.push(format!("{b}*x")),
        }
        if self.c != 0 {
            terms.push(self.c.to_string());
        }
        f.write_str(&terms.join("+"))
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(self.error(format!(
                "expected '{}', found '{}'",
                byte as char, b as char
            ))),
            None => Err(self.error(format!("expected '{}', found end of input", byte as char))),
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        // digits are ASCII, so the slice is valid UTF-8
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        digits.parse::<u64>().map_err(|_| Error::Parse {
            offset: start,
            message: "coefficient out of range".into(),
        })
    }

    /// Parses `x` or `x^2` (the `x` already peeked) and returns the degree.
    fn monomial(&mut self) -> Result<usize> {
        self.expect(b'x')?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = {
                self.skip_ws();
                self.pos
            };
            match self.number()? {
                2 => Ok(2),
                1 => Ok(1),
                _ => Err(Error::Parse {
                    offset: at,
                    message: "only exponents 1 and 2 are supported".into(),
                }),
            }
        } else {
            Ok(1)
        }
    }

    fn term(&mut self) -> Result<(usize, u64)> {
        match self.peek() {
            Some(b'x') => Ok((self.monomial()?, 1)),
            Some(b) if b.is_ascii_digit() => {
                let coefficient = self.number()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    if self.peek() != Some(b'x') {
                        return Err(self.error("expected 'x' after '*'"));
                    }
                    Ok((self.monomial()?, coefficient))
                } else {
                    Ok((0, coefficient))
                }
            }
            Some(b) => Err(self.error(format!("unexpected '{}'", b as char))),
            None => Err(self.error("expected a term")),
        }
    }

    fn parse(mut self) -> Result<IncidencePolynomial> {
        let mut coefficients: [Option<u64>; 3] = [None; 3];
        loop {
            self.skip_ws();
            let start = self.pos;
            let (degree, coefficient) = self.term()?;
            if coefficients[degree].replace(coefficient).is_some() {
                return Err(Error::Parse {
                    offset: start,
                    message: format!("duplicate term of degree {degree}"),
                });
            }
            match self.peek() {
                None => break,
                Some(b'+') => self.pos += 1,
                Some(b) => return Err(self.error(format!("unexpected '{}'", b as char))),
            }
        }
        let [c, b, a] = coefficients.map(|v| v.unwrap_or(0));
        Ok(IncidencePolynomial { a, b, c })
    }
}
