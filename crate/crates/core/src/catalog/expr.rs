//! Polynomial coefficient expressions such as `-a`, `a^2`, `2*b`, `1/2 a b - 3`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exactla::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("empty expression")]
    Empty,
    #[error("unexpected {found:?} at byte {at} in {text:?}")]
    Unexpected { text: String, at: usize, found: char },
    #[error("bad number {0:?}")]
    Number(String),
    #[error("unbound parameter {0:?}")]
    Unbound(char),
}

/// A monomial is a sorted list of (variable, exponent).
type Monomial = Vec<(char, u32)>;

/// A polynomial with rational coefficients in single-letter variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn parse(text: &str) -> Result<Self, ExprError> {
        Parser::new(text).parse()
    }

    /// Variables occurring with a nonzero coefficient.
    pub fn variables(&self) -> Vec<char> {
        let mut vars: Vec<char> = self.terms.keys().flatten().map(|(v, _)| *v).collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    pub fn eval(&self, lookup: impl Fn(char) -> Option<Rational>) -> Result<Rational, ExprError> {
        let mut total = Rational::zero();
        for (mono, coef) in &self.terms {
            let mut term = coef.clone();
            for &(v, e) in mono {
                let x = lookup(v).ok_or(ExprError::Unbound(v))?;
                term = &term * &x.pow(e);
            }
            total += &term;
        }
        Ok(total)
    }

    fn add_term(&mut self, mono: Monomial, coef: Rational) {
        let entry = self.terms.entry(mono).or_insert_with(Rational::zero);
        *entry += &coef;
        self.terms.retain(|_, c| !c.is_zero());
    }
}

struct Parser<'a> {
    text: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let chars = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i, if c == '−' { '-' } else { c }))
            .collect();
        Parser { text, chars, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn unexpected(&self) -> ExprError {
        let (at, found) = self.chars[self.pos];
        ExprError::Unexpected {
            text: self.text.to_string(),
            at,
            found,
        }
    }

    fn parse(mut self) -> Result<Polynomial, ExprError> {
        if self.chars.is_empty() {
            return Err(ExprError::Empty);
        }
        let mut poly = Polynomial { terms: BTreeMap::new() };
        let mut first = true;
        while self.pos < self.chars.len() {
            let negative = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => return Err(self.unexpected()),
            };
            first = false;
            let (mono, coef) = self.term()?;
            poly.add_term(mono, if negative { -coef } else { coef });
        }
        Ok(poly)
    }

    /// `[number] [*] var[^exp] ([*] var[^exp])*`, at least one part present.
    fn term(&mut self) -> Result<(Monomial, Rational), ExprError> {
        let mut coef = Rational::one();
        let mut powers: BTreeMap<char, u32> = BTreeMap::new();
        let mut parts = 0;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coef = &coef * &self.number()?;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    self.pos += 1;
                    let e = if self.peek() == Some('^') {
                        self.pos += 1;
                        self.exponent()?
                    } else {
                        1
                    };
                    *powers.entry(c).or_insert(0) += e;
                }
                _ => break,
            }
            parts += 1;
            if self.peek() == Some('*') {
                self.pos += 1;
                if !matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric()) {
                    return Err(self.error_here());
                }
            }
        }
        if parts == 0 {
            return Err(self.error_here());
        }
        Ok((powers.into_iter().filter(|&(_, e)| e > 0).collect(), coef))
    }

    fn error_here(&self) -> ExprError {
        if self.pos < self.chars.len() {
            self.unexpected()
        } else {
            ExprError::Empty
        }
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        s
    }

    fn number(&mut self) -> Result<Rational, ExprError> {
        let mut s = self.digits();
        if self.peek() == Some('/') {
            self.pos += 1;
            let den = self.digits();
            if den.is_empty() {
                return Err(self.error_here());
            }
            s = format!("{s}/{den}");
        }
        s.parse().map_err(|_| ExprError::Number(s))
    }

    fn exponent(&mut self) -> Result<u32, ExprError> {
        let s = self.digits();
        if s.is_empty() {
            return Err(self.error_here());
        }
        s.parse().map_err(|_| ExprError::Number(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(a: i64, b: i64) -> impl Fn(char) -> Option<Rational> {
        move |v| match v {
            'a' => Some(Rational::from_int(a)),
            'b' => Some(Rational::from_int(b)),
            _ => None,
        }
    }

    fn eval(s: &str, a: i64, b: i64) -> Rational {
        Polynomial::parse(s).unwrap().eval(at(a, b)).unwrap()
    }

    #[test]
    fn evaluates_table_coefficients() {
        assert_eq!(eval("1", 0, 0), Rational::one());
        assert_eq!(eval("-a", 3, 0), Rational::from_int(-3));
        assert_eq!(eval("a^2", 3, 0), Rational::from_int(9));
        assert_eq!(eval("2*a - b", 3, 5), Rational::from_int(1));
        assert_eq!(eval("1/2 a b", 3, 4), Rational::from_int(6));
        assert_eq!(eval("−1", 0, 0), Rational::from_int(-1));
        assert_eq!(eval("a*a - a^2", 7, 0), Rational::zero());
    }

    #[test]
    fn variables_skip_cancelled_terms() {
        assert_eq!(Polynomial::parse("a + b - b").unwrap().variables(), vec!['a']);
        assert_eq!(Polynomial::parse("3").unwrap().variables(), Vec::<char>::new());
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "a +", "2 ^ 3", "a^", "1/", "a**b", "(a)", "a b +"] {
            assert!(Polynomial::parse(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn unbound_variable_reported() {
        let p = Polynomial::parse("c").unwrap();
        assert_eq!(p.eval(at(1, 1)), Err(ExprError::Unbound('c')));
    }
}
