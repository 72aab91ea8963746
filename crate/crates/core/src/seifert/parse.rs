//! Generator-word grammar.
//!
//! ```text
//! word := term (ws term)*
//! term := gen | gen '^' int | '[' word ',' word ']' | 'inv(' word ')' | '1'
//! gen  := 'a' | 'b' | 'c' | 'h' | 'd'
//! ```
//!
//! Juxtaposition is multiplication, left to right. Whitespace between terms
//! is optional since every generator is a single letter.

use num_bigint::BigInt;
use thiserror::Error;

use super::{Element, Generator, GroupError, GroupSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at column {column}: {message}")]
pub struct SyntaxError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Power {
        generator: Generator,
        exponent: BigInt,
        column: usize,
    },
    Commutator(Word, Word),
    Inverse(Word),
    Identity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word(pub Vec<Term>);

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

pub fn parse_word(text: &str) -> Result<Word, SyntaxError> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let word = parser.word()?;
    parser.skip_ws();
    if parser.pos < parser.chars.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(word)
}

impl Parser {
    fn error(&self, message: impl Into<String>) -> SyntaxError {
        SyntaxError {
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SyntaxError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn starts_term(&self) -> bool {
        matches!(self.peek(), Some('a' | 'b' | 'c' | 'd' | 'h' | '[' | 'i' | '1'))
    }

    fn word(&mut self) -> Result<Word, SyntaxError> {
        let mut terms = Vec::new();
        self.skip_ws();
        if !self.starts_term() {
            return Err(self.error("expected a term"));
        }
        while self.starts_term() {
            terms.push(self.term()?);
            self.skip_ws();
        }
        Ok(Word(terms))
    }

    fn term(&mut self) -> Result<Term, SyntaxError> {
        let column = self.pos + 1;
        match self.peek() {
            Some('[') => {
                self.pos += 1;
                let left = self.word()?;
                self.expect(',')?;
                let right = self.word()?;
                self.expect(']')?;
                Ok(Term::Commutator(left, right))
            }
            Some('i') => {
                for c in "inv(".chars() {
                    if self.peek() != Some(c) {
                        return Err(self.error("expected 'inv('"));
                    }
                    self.pos += 1;
                }
                let inner = self.word()?;
                self.expect(')')?;
                Ok(Term::Inverse(inner))
            }
            Some('1') => {
                self.pos += 1;
                Ok(Term::Identity)
            }
            Some(c) => {
                let generator = Generator::from_char(c).ok_or_else(|| self.error("expected a generator"))?;
                self.pos += 1;
                let exponent = if self.peek() == Some('^') {
                    self.pos += 1;
                    self.integer()?
                } else {
                    BigInt::from(1)
                };
                Ok(Term::Power {
                    generator,
                    exponent,
                    column,
                })
            }
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, SyntaxError> {
        let start = self.pos;
        if matches!(self.peek(), Some('-' | '+')) {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(self.error("expected an integer exponent"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        Ok(text.parse().expect("validated digits"))
    }
}

impl Word {
    pub fn evaluate(&self, spec: GroupSpec) -> Result<Element, GroupError> {
        let mut acc = Element::identity(spec);
        for term in &self.0 {
            let value = match term {
                Term::Power {
                    generator,
                    exponent,
                    column,
                } => Element::generator_power(spec, *generator, exponent.clone()).map_err(|e| match e {
                    GroupError::UnknownGenerator { generator, spec } => GroupError::UnknownGeneratorAt {
                        generator,
                        spec,
                        column: *column,
                    },
                    other => other,
                })?,
                Term::Commutator(x, y) => x.evaluate(spec)?.commutator(&y.evaluate(spec)?)?,
                Term::Inverse(x) => x.evaluate(spec)?.inverse(),
                Term::Identity => Element::identity(spec),
            };
            acc = acc.mul_unchecked(&value);
        }
        Ok(acc)
    }
}

impl GroupSpec {
    /// Parses a generator word and returns its normal form.
    pub fn parse_element(&self, text: &str) -> Result<Element, GroupError> {
        parse_word(text)?.evaluate(*self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeprod::{reduce, Factor};

    fn t23() -> GroupSpec {
        GroupSpec::torus_knot(2, 3).unwrap()
    }

    #[test]
    fn fiber_from_a_squared() {
        let e = t23().parse_element("a a").unwrap();
        assert_eq!(e, Element::fiber_power(t23(), 1));
        assert_eq!(t23().parse_element("a^2").unwrap(), t23().parse_element("b^3").unwrap());
        assert_eq!(t23().parse_element("ab").unwrap(), t23().parse_element("a b").unwrap());
    }

    #[test]
    fn trefoil_commutator() {
        // a^-1 = h^-1 a and b^-1 = h^-1 b^2 under the section
        let spec = t23();
        let g = spec.parse_element("[a,b]").unwrap();
        assert_eq!(g.central(), &BigInt::from(-2));
        let expected = reduce(
            [(Factor::First, 1), (Factor::Second, 2), (Factor::First, 1), (Factor::Second, 1)],
            spec.quotient_specs(),
        );
        assert_eq!(g.word(), &expected);
        assert!((&g * &g.inverse()).is_identity());
        assert_eq!(g, spec.parse_element("a^-1 b^-1 a b").unwrap());
    }

    #[test]
    fn cable_basis_change() {
        let spec = GroupSpec::cable(2, 3).unwrap();
        let bc = spec.parse_element("b c").unwrap();
        assert_eq!(bc, spec.parse_element("h^-1 d^2 h^2 d^-3").unwrap());
        assert_eq!(bc.central(), &BigInt::from(1));
        assert_eq!(bc.to_string(), "h d^-1");
        assert_eq!(
            bc.abelianize(),
            crate::seifert::AbelianImage::Cable(2.into(), 1.into())
        );
    }

    #[test]
    fn equality_examples() {
        let spec = t23();
        let x = spec.parse_element("a a b b b^-1 b^-1").unwrap();
        assert!(x.equals(&spec.parse_element("a a").unwrap()).unwrap());
        let a = spec.parse_element("a").unwrap();
        let b = spec.parse_element("b").unwrap();
        assert!(!a.equals(&b).unwrap());
        assert_ne!(a.abelianize(), b.abelianize());
    }

    #[test]
    fn nested_sugar() {
        let spec = t23();
        let g = spec.parse_element("inv([a, b]) [a,b]").unwrap();
        assert!(g.is_identity());
        let g = spec.parse_element("[a^2, b]").unwrap();
        assert!(g.is_identity());
        assert!(spec.parse_element("1").unwrap().is_identity());
        assert_eq!(spec.parse_element(" a^+3 ").unwrap(), spec.parse_element("h a").unwrap());
    }

    #[test]
    fn syntax_errors_carry_columns() {
        assert_eq!(parse_word("a ^").unwrap_err().column, 3);
        assert_eq!(parse_word("a^x").unwrap_err().column, 3);
        assert_eq!(parse_word("[a b]").unwrap_err().column, 5);
        assert_eq!(parse_word("").unwrap_err().column, 1);
        assert_eq!(parse_word("a z").unwrap_err().column, 3);
        assert_eq!(parse_word("inx(a)").unwrap_err().column, 3);
    }

    #[test]
    fn unknown_generator_for_group() {
        let err = t23().parse_element("a c").unwrap_err();
        assert_eq!(
            err,
            GroupError::UnknownGeneratorAt {
                generator: 'c',
                spec: t23(),
                column: 3
            }
        );
    }

    #[test]
    fn printed_normal_forms_reparse() {
        let spec = GroupSpec::cable(4, 3).unwrap();
        for text in ["[a^2,b]", "a b c a^-3", "c^5 b^-2", "h^7"] {
            let g = spec.parse_element(text).unwrap();
            assert_eq!(spec.parse_element(&g.to_string()).unwrap(), g, "{text}");
        }
    }
}
