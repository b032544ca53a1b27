//! Exact expression parsing for polynomials and rational functions.
//!
//! Grammar (whitespace-insensitive):
//!   expr  := ['-'] term (('+'|'-') term)*
//!   term  := coeff ['*'] [var ['^' nat]] | var ['^' nat]
//!   coeff := int | int '/' int | decimal
//! A single variable name per expression; decimals are converted exactly.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::funcfield::RationalFunction;
use crate::ratpoly::{rat, Polynomial, Rat};

struct Parser {
    chars: Vec<char>,
    pos: usize,
    var: Option<String>,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            var: None,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn parse_digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a digit");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<BigInt>()
            .map_err(|e| Error::Parse {
                position: start,
                message: format!("bad integer literal: {e}"),
            })
    }

    fn parse_nat(&mut self) -> Result<usize> {
        let start = self.pos;
        let n = self.parse_digits()?;
        match n.to_string().parse::<usize>() {
            Ok(v) => Ok(v),
            Err(_) => Err(Error::Parse {
                position: start,
                message: "exponent too large".into(),
            }),
        }
    }

    /// int, int/int, or a finite decimal, converted exactly.
    fn parse_coeff(&mut self) -> Result<Rat> {
        let int = self.parse_digits()?;
        match self.peek() {
            Some('.') => {
                self.pos += 1;
                let start = self.pos;
                let frac = self.parse_digits()?;
                let places = self.pos - start;
                let scale = BigInt::from(10).pow(places as u32);
                Ok(Rat::new(int * &scale + frac, scale))
            }
            Some('/') => {
                // a fraction only if a digit follows; otherwise leave the
                // slash for the caller (rational-function division)
                if self.chars.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                    let dstart = self.pos;
                    let den = self.parse_digits()?;
                    if den == BigInt::from(0) {
                        return Err(Error::Parse {
                            position: dstart,
                            message: "zero denominator".into(),
                        });
                    }
                    Ok(Rat::new(int, den))
                } else {
                    Ok(Rat::from_integer(int))
                }
            }
            _ => Ok(Rat::from_integer(int)),
        }
    }

    fn parse_var(&mut self) -> Result<()> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic() || c == '_') {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        match &self.var {
            None => {
                self.var = Some(name);
                Ok(())
            }
            Some(v) if *v == name => Ok(()),
            Some(v) => Err(Error::Parse {
                position: start,
                message: format!("unknown variable '{name}' (expression already uses '{v}')"),
            }),
        }
    }

    /// One term: returns (degree, coefficient).
    fn parse_term(&mut self) -> Result<(usize, Rat)> {
        self.skip_ws();
        let mut coeff = rat(1);
        let mut have_coeff = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            coeff = self.parse_coeff()?;
            have_coeff = true;
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
                self.skip_ws();
                if !self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
                    return self.err("expected a variable after '*'");
                }
            }
        }
        if self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.parse_var()?;
            self.skip_ws();
            let degree = if self.peek() == Some('^') {
                self.pos += 1;
                self.skip_ws();
                self.parse_nat()?
            } else {
                1
            };
            Ok((degree, coeff))
        } else if have_coeff {
            Ok((0, coeff))
        } else {
            self.err("expected a coefficient or a variable")
        }
    }

    fn parse_expr(&mut self) -> Result<Polynomial> {
        let mut coeffs: Vec<Rat> = Vec::new();
        let mut add = |deg: usize, c: Rat| {
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, rat(0));
            }
            coeffs[deg] += c;
        };
        self.skip_ws();
        let mut sign = rat(1);
        if self.peek() == Some('-') {
            self.pos += 1;
            sign = rat(-1);
        } else if self.peek() == Some('+') {
            self.pos += 1;
        }
        let (d, c) = self.parse_term()?;
        add(d, sign * c);
        loop {
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+') => {
                    self.pos += 1;
                    let (d, c) = self.parse_term()?;
                    add(d, c);
                }
                Some('-') => {
                    self.pos += 1;
                    let (d, c) = self.parse_term()?;
                    add(d, -c);
                }
                Some(ch) => return self.err(format!("unexpected character '{ch}'")),
            }
        }
        Ok(Polynomial::new(coeffs))
    }
}

/// Parses a polynomial expression into exact coefficients.
pub fn parse_polynomial(text: &str) -> Result<Polynomial> {
    let mut p = Parser::new(text);
    p.parse_expr()
}

fn matching_paren(chars: &[char], open: usize) -> Option<usize> {
    let mut depth = 0usize;
    for (i, c) in chars.iter().enumerate().skip(open) {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

/// Parses either a plain polynomial or the quotient form
/// "(numerator)/(denominator)".
pub fn parse_rational_function(text: &str) -> Result<RationalFunction> {
    let trimmed = text.trim();
    let chars: Vec<char> = trimmed.chars().collect();
    if chars.first() == Some(&'(') {
        let close = matching_paren(&chars, 0).ok_or(Error::Parse {
            position: trimmed.len(),
            message: "unbalanced parentheses".into(),
        })?;
        let num_text: String = chars[1..close].iter().collect();
        let rest: String = chars[close + 1..].iter().collect();
        let rest = rest.trim();
        if rest.is_empty() {
            return Ok(RationalFunction::from_poly(parse_polynomial(&num_text)?));
        }
        if let Some(den_part) = rest.strip_prefix('/') {
            let den_part = den_part.trim();
            let dchars: Vec<char> = den_part.chars().collect();
            if dchars.first() == Some(&'(')
                && matching_paren(&dchars, 0) == Some(dchars.len() - 1)
            {
                let den_text: String = dchars[1..dchars.len() - 1].iter().collect();
                return RationalFunction::new(
                    parse_polynomial(&num_text)?,
                    parse_polynomial(&den_text)?,
                );
            }
        }
        return Err(Error::Parse {
            position: close + 1,
            message: "expected '/(denominator)' after '(numerator)'".into(),
        });
    }
    Ok(RationalFunction::from_poly(parse_polynomial(trimmed)?))
}

/// Parses a standalone rational scalar: "a", "a/b", or a finite decimal,
/// with optional sign.
pub fn parse_rat_string(text: &str) -> Result<Rat> {
    let trimmed = text.trim();
    let (sign, body) = match trimmed.strip_prefix('-') {
        Some(rest) => (rat(-1), rest.trim()),
        None => (rat(1), trimmed.strip_prefix('+').unwrap_or(trimmed).trim()),
    };
    let mut p = Parser::new(body);
    let c = p.parse_coeff()?;
    p.skip_ws();
    if p.peek().is_some() {
        return p.err("trailing characters after number");
    }
    Ok(sign * c)
}
