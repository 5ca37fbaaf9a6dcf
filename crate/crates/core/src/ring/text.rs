//! Polynomial text format: sums of terms `c*t^e` or `c*t0^e0*t1^e1*...`.
//!
//! `c` is an integer or `p/q`, the coefficient may be left out when it is
//! `±1`, `^1` may be left out, and whitespace is ignored. Parentheses are
//! rejected.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{LaurentPoly, MultiLaurentPoly, Rational, RingError};

pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Rational, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, mono) in terms {
        let negative = c.is_negative();
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let abs = c.abs();
        if mono.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            f.write_str(&mono)?;
        } else {
            write!(f, "{abs}*{mono}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Var {
    Plain,
    Indexed(usize),
}

type Term = (Rational, Vec<(Var, i64)>);

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    _src: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
            _src: src,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or_else(|| self._src.len(), |&(i, _)| i)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn error(&self, message: impl Into<String>) -> RingError {
        RingError::Parse { position: self.offset(), message: message.into() }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }

    fn terms(&mut self) -> Result<Vec<Term>, RingError> {
        let mut out = Vec::new();
        let mut negative = match self.peek() {
            Some('-') => {
                self.bump();
                true
            }
            Some('+') => {
                self.bump();
                false
            }
            None => return Err(self.error("empty polynomial")),
            _ => false,
        };
        loop {
            let (mut c, vars) = self.term()?;
            if negative {
                c = -c;
            }
            out.push((c, vars));
            match self.bump() {
                None => return Ok(out),
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(_) => {
                    self.pos -= 1;
                    return Err(self.error("expected '+', '-' or end of input"));
                }
            }
        }
    }

    fn term(&mut self) -> Result<Term, RingError> {
        let mut coeff = Rational::one();
        let mut vars = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.digits().unwrap();
                    let mut value = Rational::from_integer(num.parse::<BigInt>().unwrap());
                    if self.peek() == Some('/') {
                        self.bump();
                        let den = self.digits().ok_or_else(|| self.error("expected denominator"))?;
                        let den: BigInt = den.parse().unwrap();
                        if den.is_zero() {
                            return Err(self.error("zero denominator"));
                        }
                        value /= Rational::from_integer(den);
                    }
                    coeff *= value;
                }
                Some('t') => {
                    self.bump();
                    let var = match self.digits() {
                        Some(d) => Var::Indexed(
                            d.parse().map_err(|_| self.error("variable index too large"))?,
                        ),
                        None => Var::Plain,
                    };
                    let mut exp = 1i64;
                    if self.peek() == Some('^') {
                        self.bump();
                        let neg = if self.peek() == Some('-') {
                            self.bump();
                            true
                        } else {
                            false
                        };
                        let d = self.digits().ok_or_else(|| self.error("expected exponent"))?;
                        exp = d.parse().map_err(|_| self.error("exponent too large"))?;
                        if neg {
                            exp = -exp;
                        }
                    }
                    vars.push((var, exp));
                }
                Some('(') | Some(')') => return Err(self.error("parentheses are not supported")),
                Some(c) => return Err(self.error(format!("unexpected character '{c}'"))),
                None => return Err(self.error("expected a term")),
            }
            if self.peek() == Some('*') {
                self.bump();
            } else {
                return Ok((coeff, vars));
            }
        }
    }
}

fn parse_terms(s: &str) -> Result<Vec<Term>, RingError> {
    Lexer::new(s).terms()
}

pub(crate) fn parse_univariate(s: &str) -> Result<LaurentPoly, RingError> {
    let terms = parse_terms(s)?;
    let mut out = Vec::with_capacity(terms.len());
    for (c, vars) in terms {
        let mut e = 0;
        for (v, k) in vars {
            if v != Var::Plain {
                return Err(RingError::Parse {
                    position: 0,
                    message: "indexed variables need the multivariable format".into(),
                });
            }
            e += k;
        }
        out.push((e, c));
    }
    Ok(LaurentPoly::from_terms(out))
}

/// Parses the multivariable format. With `nvars = None` the variable count
/// is one more than the largest index that occurs (at least 1).
pub(crate) fn parse_multivariate(
    s: &str,
    nvars: Option<usize>,
) -> Result<MultiLaurentPoly, RingError> {
    let terms = parse_terms(s)?;
    let mut max_index = None;
    for (_, vars) in &terms {
        for (v, _) in vars {
            match v {
                Var::Plain => {
                    return Err(RingError::Parse {
                        position: 0,
                        message: "use t0, t1, ... in the multivariable format".into(),
                    })
                }
                Var::Indexed(i) => max_index = max_index.max(Some(*i)),
            }
        }
    }
    let needed = max_index.map_or(1, |i| i + 1);
    let k = match nvars {
        Some(k) if k < needed => {
            return Err(RingError::Parse {
                position: 0,
                message: format!("variable t{} out of range for {k} variables", needed - 1),
            })
        }
        Some(k) => k,
        None => needed,
    };
    let mut out = Vec::with_capacity(terms.len());
    for (c, vars) in terms {
        let mut e = vec![0i64; k];
        for (v, x) in vars {
            if let Var::Indexed(i) = v {
                e[i] += x;
            }
        }
        out.push((e, c));
    }
    Ok(MultiLaurentPoly::from_terms(k, out))
}
