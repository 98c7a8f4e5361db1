use num_bigint::BigUint;

use super::Term;
use crate::carrier::{Carrier, Key, MonoidElem};
use crate::error::{Error, Result};
use crate::freerig::normalize;

/// Parses `text` as a term whose variables live in `carrier`.
pub fn parse(text: &str, carrier: &Carrier) -> Result<Term> {
    let mut parser = Parser::new(text);
    let term = parser.expr(carrier)?;
    parser.skip_ws();
    if let Some(c) = parser.peek() {
        return Err(parser.error(format!("unexpected {c:?}")));
    }
    Ok(term)
}

struct Parser<'a> {
    chars: Vec<(usize, usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let mut chars = Vec::new();
        let (mut line, mut column) = (1, 1);
        for c in src.chars() {
            chars.push((line, column, c));
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        Parser { chars, pos: 0, src }
    }

    fn location(&self) -> (usize, usize) {
        match self.chars.get(self.pos) {
            Some(&(l, c, _)) => (l, c),
            None => {
                let line = self.src.lines().count().max(1);
                let column = self.src.lines().last().map_or(0, |l| l.chars().count()) + 1;
                (line, column)
            }
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let (line, column) = self.location();
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.2.is_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.2)
    }

    fn eat(&mut self, expected: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(expected) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, expected: char) -> Result<()> {
        if self.eat(expected) {
            Ok(())
        } else {
            let found = self
                .peek()
                .map_or("end of input".to_string(), |c| format!("{c:?}"));
            Err(self.error(format!("expected {expected:?}, found {found}")))
        }
    }

    fn expr(&mut self, carrier: &Carrier) -> Result<Term> {
        let mut acc = self.mult(carrier)?;
        while self.eat('+') {
            acc = Term::sum(acc, self.mult(carrier)?);
        }
        Ok(acc)
    }

    fn mult(&mut self, carrier: &Carrier) -> Result<Term> {
        let mut acc = self.atom(carrier)?;
        while self.eat('*') {
            acc = Term::prod(acc, self.atom(carrier)?);
        }
        Ok(acc)
    }

    fn atom(&mut self, carrier: &Carrier) -> Result<Term> {
        self.skip_ws();
        match self.peek() {
            Some('0') => {
                self.pos += 1;
                Ok(Term::Zero)
            }
            Some('1') => {
                self.pos += 1;
                Ok(Term::One)
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr(carrier)?;
                self.expect(')')?;
                Ok(inner)
            }
            Some('f' | 'g') => {
                self.pos += 1;
                self.expect('(')?;
                let inner = self.expr(carrier)?;
                self.expect(')')?;
                Ok(Term::app(inner))
            }
            Some('x' | 'y') => {
                self.pos += 1;
                self.var(carrier)
            }
            Some(c) => Err(self.error(format!("unexpected {c:?}"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn var(&mut self, carrier: &Carrier) -> Result<Term> {
        self.expect('[')?;
        let payload = match carrier {
            Carrier::Nat(rank) => {
                let mut coords = vec![self.nat()?];
                while self.eat(',') {
                    coords.push(self.nat()?);
                }
                if coords.len() != *rank {
                    return Err(Error::RankMismatch {
                        rank: *rank,
                        found: coords.len(),
                    });
                }
                MonoidElem::from_terms(
                    carrier.clone(),
                    coords
                        .into_iter()
                        .enumerate()
                        .map(|(i, c)| (Key::Idx(i), c)),
                )?
            }
            Carrier::Fm(rig) => {
                let inner = self.expr(rig.base())?;
                normalize(&inner, rig)?.to_elem()
            }
        };
        self.expect(']')?;
        Ok(Term::Var(payload))
    }

    fn nat(&mut self) -> Result<BigUint> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a natural number"));
        }
        let digits: String = self.chars[start..self.pos].iter().map(|c| c.2).collect();
        Ok(digits.parse().expect("ascii digits"))
    }
}
