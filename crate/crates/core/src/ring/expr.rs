//! Expression grammar shared by field elements, polynomials and spec files.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' ['-'] integer)?
//! atom   := integer | 'I' | 'SQRT3' | 'cyclo' '(' expr ',' expr ',' expr ',' expr ')'
//!         | identifier | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;

use super::CycloElem;
use crate::error::{Error, Result};

/// Source position, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(BigInt),
    ImagUnit,
    Sqrt3,
    Cyclo(Box<[Expr; 4]>),
    Var(String, Pos),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, Pos),
    Pow(Box<Expr>, i64, Pos),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

struct Lexer {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

fn lex(src: &str, origin: Pos) -> Result<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut line, mut col) = (origin.line, origin.column);
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let pos = Pos { line, column: col };
        if c == '\n' {
            line += 1;
            col = 1;
            k += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            k += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().collect();
            col += k - start;
            out.push((Tok::Int(s.parse().expect("digits")), pos));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            let s: String = chars[start..k].iter().collect();
            col += k - start;
            out.push((Tok::Ident(s), pos));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            other => {
                return Err(Error::parse(
                    pos.line,
                    pos.column,
                    format!("unexpected character `{other}`"),
                ))
            }
        };
        out.push((t, pos));
        col += 1;
        k += 1;
    }
    out.push((Tok::End, Pos { line, column: col }));
    Ok(out)
}

impl Lexer {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let p = self.pos();
        Err(Error::parse(p.line, p.column, msg))
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    let (_, p) = self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), p);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let (_, p) = self.bump();
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.bump() {
            (Tok::Int(n), _) => {
                let e: i64 = i64::try_from(&n).map_err(|_| Error::parse(p.line, p.column, "exponent too large"))?;
                Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }, p))
            }
            (_, q) => Err(Error::parse(q.line, q.column, "expected integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let (t, p) = self.bump();
        match t {
            Tok::Int(n) => Ok(Expr::Int(n)),
            Tok::Ident(name) => match name.as_str() {
                "I" => Ok(Expr::ImagUnit),
                "SQRT3" => Ok(Expr::Sqrt3),
                "cyclo" => {
                    self.expect(Tok::LParen, "`(` after `cyclo`")?;
                    let a = self.expr()?;
                    self.expect(Tok::Comma, "`,`")?;
                    let b = self.expr()?;
                    self.expect(Tok::Comma, "`,`")?;
                    let c = self.expr()?;
                    self.expect(Tok::Comma, "`,`")?;
                    let d = self.expr()?;
                    self.expect(Tok::RParen, "`)`")?;
                    Ok(Expr::Cyclo(Box::new([a, b, c, d])))
                }
                _ => Ok(Expr::Var(name, p)),
            },
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            _ => Err(Error::parse(p.line, p.column, "expected a number, variable or `(`")),
        }
    }
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        Self::parse_at(src, Pos { line: 1, column: 1 })
    }

    /// Parses with positions offset to `origin`, for text embedded in a larger file.
    pub fn parse_at(src: &str, origin: Pos) -> Result<Expr> {
        let mut lx = Lexer {
            toks: lex(src, origin)?,
            at: 0,
        };
        if *lx.peek() == Tok::End {
            return lx.err("empty expression");
        }
        let e = lx.expr()?;
        if *lx.peek() != Tok::End {
            return lx.err("unexpected trailing input");
        }
        Ok(e)
    }

    /// Evaluates a variable-free expression in Q(ζ₁₂).
    pub fn eval_cyclo(&self) -> Result<CycloElem> {
        Ok(match self {
            Expr::Int(n) => CycloElem::from_rational(BigRational::from_integer(n.clone())),
            Expr::ImagUnit => CycloElem::i(),
            Expr::Sqrt3 => CycloElem::sqrt3(),
            Expr::Cyclo(parts) => {
                let mut c = Vec::with_capacity(4);
                for part in parts.iter() {
                    let v = part.eval_cyclo()?;
                    match v.as_rational() {
                        Some(q) => c.push(q.clone()),
                        None => {
                            return Err(Error::parse(0, 0, "cyclo() coordinates must be rational"))
                        }
                    }
                }
                CycloElem::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone())
            }
            Expr::Var(name, p) => {
                return Err(Error::parse(
                    p.line,
                    p.column,
                    format!("unexpected variable `{name}` in a constant"),
                ))
            }
            Expr::Neg(a) => -a.eval_cyclo()?,
            Expr::Add(a, b) => a.eval_cyclo()? + b.eval_cyclo()?,
            Expr::Sub(a, b) => a.eval_cyclo()? - b.eval_cyclo()?,
            Expr::Mul(a, b) => a.eval_cyclo()? * b.eval_cyclo()?,
            Expr::Div(a, b, p) => a
                .eval_cyclo()?
                .div(&b.eval_cyclo()?)
                .map_err(|_| Error::parse(p.line, p.column, "division by zero"))?,
            Expr::Pow(a, e, p) => a
                .eval_cyclo()?
                .powi(*e)
                .map_err(|err| Error::parse(p.line, p.column, err.to_string()))?,
        })
    }
}

/// Parses a field element written with `I`, `SQRT3` and `cyclo(...)`.
pub fn parse_cyclo(src: &str) -> Result<CycloElem> {
    Expr::parse(src)?.eval_cyclo()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn parses_published_style_values() {
        assert_eq!(
            parse_cyclo("(1 - I)/2").unwrap(),
            CycloElem::new(q(1, 2), q(0, 1), q(0, 1), q(-1, 2))
        );
        assert_eq!(parse_cyclo("SQRT3").unwrap(), CycloElem::from_ints([0, 2, 0, -1]));
        assert_eq!(parse_cyclo("I").unwrap(), CycloElem::i());
        let a3 = parse_cyclo("(1 + SQRT3*I)/2").unwrap();
        assert_eq!(a3.root_of_unity_order(), Some(6));
        assert_eq!(parse_cyclo("-1/2").unwrap(), CycloElem::from_rational(q(-1, 2)));
        assert_eq!(parse_cyclo("I^-1").unwrap(), -CycloElem::i());
    }

    #[test]
    fn cyclo_tuple_round_trip() {
        let x = CycloElem::new(q(1, 3), q(-2, 7), q(0, 1), q(5, 1));
        assert_eq!(parse_cyclo(&x.to_string()).unwrap(), x);
        assert_eq!(parse_cyclo(&x.to_notation()).unwrap(), x);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_cyclo("1 + $") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 5)),
            other => panic!("unexpected {other:?}"),
        }
        match parse_cyclo("1/(I - I)") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_cyclo("z1 + 1").is_err());
        assert!(parse_cyclo("").is_err());
        assert!(parse_cyclo("(1 + 2").is_err());
    }
}
