//! Recursive-descent parser for the expression grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | base ('^' factor)?
//! base   := number | 'u1'..'u4' | 'pi' | 'e' | func '(' expr ')' | '(' expr ')'
//! ```
//!
//! `^` is right-associative; implicit multiplication is not allowed. Errors
//! carry the byte offset of the offending token.

use super::deriv::simplify;
use super::{Ast, Func};
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<Ast> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let ast = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    // Fold constants once up front so downstream consumers see the same
    // canonical shape a differentiated tree would have.
    Ok(simplify(ast))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { offset: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", b as char)))
        }
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat(b'*') {
                lhs = Ast::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat(b'/') {
                lhs = Ast::Div(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Ast> {
        if self.eat(b'-') {
            return Ok(Ast::Neg(Box::new(self.factor()?)));
        }
        let base = self.base()?;
        if self.eat(b'^') {
            // Right-associative: the exponent is a full factor.
            let exp = self.factor()?;
            return Ok(Ast::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Ast> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() => self.identifier(),
            Some(c) => Err(self.err(format!("unexpected character '{}'", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<Ast> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos < self.src.len() && self.src[self.pos] == b'.' {
            self.pos += 1;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
        }
        if self.pos == start || &self.src[start..self.pos] == b"." {
            self.pos = start;
            return Err(self.err("malformed number"));
        }
        // Maximal munch on the exponent: consume 'e'/'E' only when digits
        // follow, so "2e3" is 2000 while the 'e' in "2*e" stays a constant.
        if self.pos < self.src.len() && matches!(self.src[self.pos], b'e' | b'E') {
            let mut probe = self.pos + 1;
            if probe < self.src.len() && matches!(self.src[probe], b'+' | b'-') {
                probe += 1;
            }
            if probe < self.src.len() && self.src[probe].is_ascii_digit() {
                self.pos = probe;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii slice");
        let value: f64 = text.parse().map_err(|_| Error::Parse {
            offset: start,
            message: format!("malformed number '{text}'"),
        })?;
        Ok(Ast::Num(value))
    }

    fn identifier(&mut self) -> Result<Ast> {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii slice");
        let func = match name {
            "u1" => return Ok(Ast::Param(1)),
            "u2" => return Ok(Ast::Param(2)),
            "u3" => return Ok(Ast::Param(3)),
            "u4" => return Ok(Ast::Param(4)),
            "pi" => return Ok(Ast::Pi),
            "e" => return Ok(Ast::E),
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "tan" => Func::Tan,
            "exp" => Func::Exp,
            "ln" => Func::Ln,
            "sqrt" => Func::Sqrt,
            _ => {
                return Err(Error::Parse {
                    offset: start,
                    message: format!("unknown identifier '{name}'"),
                })
            }
        };
        self.expect(b'(')?;
        let arg = self.expr()?;
        self.expect(b')')?;
        Ok(Ast::Apply(func, Box::new(arg)))
    }
}

#[cfg(test)]
mod tests {
    use super::super::evaluate;
    use super::*;

    #[test]
    fn parses_reference_component() {
        let a = parse("sqrt(2)*sin(u3)*cos(u2)*cos(u1)").unwrap();
        let q = std::f64::consts::FRAC_PI_4;
        assert!((evaluate(&a, &[q, q, q, 1.0]).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn parses_bare_parameter() {
        assert_eq!(parse("u1").unwrap(), Ast::Param(1));
        assert_eq!(parse("  u4 ").unwrap(), Ast::Param(4));
    }

    #[test]
    fn unbalanced_parenthesis_reports_offset() {
        match parse("sin(u1") {
            Err(Error::Parse { offset, message }) => {
                assert_eq!(offset, 6);
                assert!(message.contains("')'"), "message: {message}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_identifier_reports_its_offset() {
        match parse("1+sin(u5)") {
            Err(Error::Parse { offset, message }) => {
                assert_eq!(offset, 6);
                assert!(message.contains("u5"), "message: {message}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn trailing_tokens_are_rejected() {
        assert!(matches!(parse("1 2"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse("u1 u2"), Err(Error::Parse { .. })));
    }

    #[test]
    fn implicit_multiplication_is_rejected() {
        assert!(parse("2u1").is_err());
        assert!(parse("2(u1)").is_err());
    }

    #[test]
    fn power_is_right_associative() {
        // 2^3^2 = 2^9 = 512, not (2^3)^2 = 64.
        let v = evaluate(&parse("2^3^2").unwrap(), &[0.0; 4]).unwrap();
        assert_eq!(v, 512.0);
    }

    #[test]
    fn unary_minus_binds_tighter_than_power_base() {
        // Grammar: factor := '-' factor, so -2^2 is -(2^2).
        let v = evaluate(&parse("-2^2").unwrap(), &[0.0; 4]).unwrap();
        assert_eq!(v, -4.0);
    }

    #[test]
    fn scientific_notation_uses_maximal_munch() {
        assert_eq!(evaluate(&parse("2e3").unwrap(), &[0.0; 4]).unwrap(), 2000.0);
        assert_eq!(evaluate(&parse("2e-2").unwrap(), &[0.0; 4]).unwrap(), 0.02);
        // Here 'e' is the constant, not an exponent marker.
        let v = evaluate(&parse("2*e").unwrap(), &[0.0; 4]).unwrap();
        assert!((v - 2.0 * std::f64::consts::E).abs() < 1e-15);
        // "2e" is the number 2 followed by a trailing identifier.
        assert!(parse("2e").is_err());
    }

    #[test]
    fn operator_precedence_matches_convention() {
        let v = evaluate(&parse("1+2*3^2").unwrap(), &[0.0; 4]).unwrap();
        assert_eq!(v, 19.0);
        let w = evaluate(&parse("(1+2)*3").unwrap(), &[0.0; 4]).unwrap();
        assert_eq!(w, 9.0);
    }
}
