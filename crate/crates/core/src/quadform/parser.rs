//! Parser for second-degree polynomial equations in x, y and z.
//!
//! Accepted input looks like `48x^2+32y^2-24z^2+96x-320y-960z-8944=0`:
//! signed terms made of an optional decimal coefficient and up to two
//! variable factors, each optionally raised to `^2`. Either side of an
//! optional `=` may hold terms; everything is moved to the left-hand side.
//! Whitespace is ignored.

use crate::error::{Error, Result};

use super::{ConicCoeffs, QuadricCoeffs};

#[derive(Debug, Clone, PartialEq)]
pub enum ParsedQuadratic {
    Conic(ConicCoeffs),
    Quadric(QuadricCoeffs),
}

/// Coefficients of every monomial of degree ≤ 2 in x, y, z.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
struct Accumulator {
    coeffs: QuadricCoeffs,
    mentions_z: bool,
}

impl Accumulator {
    fn add(&mut self, exponents: [u8; 3], value: f64) {
        let c = &mut self.coeffs;
        let slot = match exponents {
            [0, 0, 0] => &mut c.constant,
            [1, 0, 0] => &mut c.x,
            [0, 1, 0] => &mut c.y,
            [0, 0, 1] => &mut c.z,
            [2, 0, 0] => &mut c.xx,
            [0, 2, 0] => &mut c.yy,
            [0, 0, 2] => &mut c.zz,
            [1, 1, 0] => &mut c.xy,
            [1, 0, 1] => &mut c.xz,
            [0, 1, 1] => &mut c.yz,
            _ => unreachable!("degree checked by the parser"),
        };
        *slot += value;
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        let chars: Vec<_> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Self { chars, pos: 0, end: text.len() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(i, _)| i)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { position: self.offset(), message: message.into() }
    }

    fn equation(&mut self) -> Result<Accumulator> {
        if self.peek().is_none() {
            return Err(self.error("empty equation"));
        }
        let mut acc = Accumulator::default();
        self.side(&mut acc, 1.0)?;
        if self.peek() == Some('=') {
            self.bump();
            self.side(&mut acc, -1.0)?;
        }
        match self.peek() {
            None => Ok(acc),
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
        }
    }

    fn side(&mut self, acc: &mut Accumulator, side_sign: f64) -> Result<()> {
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some('+') => {
                    self.bump();
                    1.0
                }
                Some('-') => {
                    self.bump();
                    -1.0
                }
                _ if first => 1.0,
                _ => return Ok(()),
            };
            first = false;
            self.term(acc, side_sign * sign)?;
        }
    }

    fn term(&mut self, acc: &mut Accumulator, sign: f64) -> Result<()> {
        let start = self.offset();
        let mut coefficient = 1.0;
        let mut has_number = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '.') {
            coefficient = self.number()?;
            has_number = true;
        }
        let mut exponents = [0u8; 3];
        let mut factors = 0;
        loop {
            if self.peek() == Some('*') {
                if !has_number && factors == 0 {
                    return Err(self.error("'*' without a left operand"));
                }
                self.bump();
                if !matches!(self.peek(), Some('x' | 'y' | 'z')) {
                    return Err(self.error("expected a variable after '*'"));
                }
            }
            let var = match self.peek() {
                Some('x') => 0,
                Some('y') => 1,
                Some('z') => 2,
                _ => break,
            };
            if var == 2 {
                acc.mentions_z = true;
            }
            self.bump();
            let power = self.exponent()?;
            exponents[var] += power;
            factors += 1;
            if exponents.iter().sum::<u8>() > 2 || factors > 2 {
                return Err(Error::Degree {
                    position: start,
                    message: "term has degree greater than 2".into(),
                });
            }
        }
        if !has_number && factors == 0 {
            return Err(match self.peek() {
                Some(c) => self.error(format!("expected a term, found '{c}'")),
                None => self.error("expected a term"),
            });
        }
        if matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '.') {
            return Err(self.error("number after variable"));
        }
        acc.add(exponents, sign * coefficient);
        Ok(())
    }

    fn exponent(&mut self) -> Result<u8> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.bump();
        let at = self.offset();
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.bump();
        }
        if digits.is_empty() {
            return Err(Error::Parse { position: at, message: "expected exponent after '^'".into() });
        }
        match digits.parse::<u32>() {
            Ok(2) => Ok(2),
            Ok(n) if n > 2 => Err(Error::Degree {
                position: at,
                message: format!("exponent {n} exceeds 2"),
            }),
            Ok(_) => Err(Error::Parse { position: at, message: "only ^2 is permitted".into() }),
            Err(_) => Err(Error::Degree { position: at, message: "exponent too large".into() }),
        }
    }

    fn number(&mut self) -> Result<f64> {
        let at = self.offset();
        let mut text = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit() || *c == '.') {
            text.push(c);
            self.bump();
        }
        text.parse::<f64>()
            .map_err(|_| Error::Parse { position: at, message: format!("malformed number '{text}'") })
    }
}

fn parse(text: &str) -> Result<Accumulator> {
    Parser::new(text).equation()
}

/// Parses an equation, returning a conic when `z` never appears and a
/// quadric otherwise.
pub fn parse_quadratic(text: &str) -> Result<ParsedQuadratic> {
    let acc = parse(text)?;
    Ok(if acc.mentions_z {
        ParsedQuadratic::Quadric(acc.coeffs)
    } else {
        let q = acc.coeffs;
        ParsedQuadratic::Conic(ConicCoeffs::new(q.xx, q.xy, q.yy, q.x, q.y, q.constant))
    })
}

/// Parses an equation in up to three variables as a quadric.
pub fn parse_quadric(text: &str) -> Result<QuadricCoeffs> {
    parse(text).map(|acc| acc.coeffs)
}

/// Parses an equation in x and y as a conic; `z` is rejected.
pub fn parse_conic(text: &str) -> Result<ConicCoeffs> {
    match parse_quadratic(text)? {
        ParsedQuadratic::Conic(c) => Ok(c),
        ParsedQuadratic::Quadric(_) => Err(Error::Parse {
            position: text.find('z').unwrap_or(0),
            message: "conic equations may only use x and y".into(),
        }),
    }
}
