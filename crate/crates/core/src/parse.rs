//! Expression grammar for clifforms.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := power (('*' | '^' | '_|') power)*
//! power  := atom ('**' integer)*
//! atom   := rational | 'i' | coord | formgen | valgen
//!         | '(' expr ')' | 'exp' '(' expr ')'
//! ```
//!
//! `*` is the Clifford product in both factors, `^` the exterior product,
//! `_|` the left contraction. `exp` takes a linear form in the coordinates.

use std::fmt;
use std::sync::Arc;

use num::{BigInt, BigRational, Zero};

use crate::clifford::ProductKind;
use crate::scalar::{GaussianRational, LinearExponent, SymbolicScalar};
use crate::tensor::{CVForm, Space};

pub type Form = CVForm<SymbolicScalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownSymbol(String),
    DivisionByZero,
    /// Argument of `exp` is not a linear form.
    NonLinearExponent(String),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(m) => write!(f, "syntax error: {m}"),
            ParseErrorKind::UnknownSymbol(s) => write!(f, "unknown symbol `{s}`"),
            ParseErrorKind::DivisionByZero => f.write_str("division by zero"),
            ParseErrorKind::NonLinearExponent(s) => write!(f, "exp argument `{s}` is not a linear form"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    StarStar,
    Wedge,
    Contract,
    Slash,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::StarStar => f.write_str("`**`"),
            Tok::Wedge => f.write_str("`^`"),
            Tok::Contract => f.write_str("`_|`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let (mut pos, mut line, mut column) = (0, 1, 1);
    let mut out = Vec::new();
    while pos < chars.len() {
        let c = chars[pos];
        let (l, col) = (line, column);
        let err = |m: String| ParseError {
            line: l,
            column: col,
            kind: ParseErrorKind::Syntax(m),
        };
        if c == '\n' {
            pos += 1;
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            pos += 1;
            column += 1;
            continue;
        }
        let (tok, len) = if c.is_ascii_digit() {
            let end = (pos..chars.len()).find(|&p| !chars[p].is_ascii_digit()).unwrap_or(chars.len());
            let digits: String = chars[pos..end].iter().collect();
            (Tok::Int(digits.parse().expect("digits")), end - pos)
        } else if c.is_ascii_alphabetic() {
            let end = (pos..chars.len())
                .find(|&p| !chars[p].is_ascii_alphanumeric())
                .unwrap_or(chars.len());
            (Tok::Ident(chars[pos..end].iter().collect()), end - pos)
        } else {
            let next = chars.get(pos + 1).copied();
            match (c, next) {
                ('*', Some('*')) => (Tok::StarStar, 2),
                ('*', _) => (Tok::Star, 1),
                ('_', Some('|')) => (Tok::Contract, 2),
                ('^', _) => (Tok::Wedge, 1),
                ('+', _) => (Tok::Plus, 1),
                ('-', _) => (Tok::Minus, 1),
                ('/', _) => (Tok::Slash, 1),
                ('(', _) => (Tok::LParen, 1),
                (')', _) => (Tok::RParen, 1),
                _ => return Err(err(format!("unexpected character `{c}`"))),
            }
        };
        out.push(Spanned { tok, line, column });
        pos += len;
        column += len;
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    space: &'a Arc<Space>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error_at(t: &Spanned, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: t.line,
            column: t.column,
            kind,
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        let t = self.bump();
        if t.tok == tok {
            Ok(())
        } else {
            Err(Self::error_at(&t, ParseErrorKind::Syntax(format!("expected {tok}, found {}", t.tok))))
        }
    }

    fn scalar(&self, value: SymbolicScalar) -> Form {
        CVForm::scalar(self.space.clone(), value.with_arity(self.space.dim()))
    }

    fn expr(&mut self) -> Result<Form, ParseError> {
        let negate = match self.peek().tok {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Form, ParseError> {
        let mut acc = self.power()?;
        loop {
            let kind = match self.peek().tok {
                Tok::Star => ProductKind::Clifford,
                Tok::Wedge => ProductKind::Exterior,
                Tok::Contract => ProductKind::LeftContraction,
                _ => return Ok(acc),
            };
            self.bump();
            let rhs = self.power()?;
            acc = acc.mirror_product(&rhs, kind).expect("one space");
        }
    }

    fn power(&mut self) -> Result<Form, ParseError> {
        let mut base = self.atom()?;
        while self.peek().tok == Tok::StarStar {
            self.bump();
            let t = self.bump();
            let exp = match &t.tok {
                Tok::Int(n) => u32::try_from(n.clone()).map_err(|_| {
                    Self::error_at(&t, ParseErrorKind::Syntax(format!("exponent {n} too large")))
                })?,
                other => {
                    return Err(Self::error_at(
                        &t,
                        ParseErrorKind::Syntax(format!("expected integer exponent, found {other}")),
                    ))
                }
            };
            base = base.pow(exp);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Form, ParseError> {
        let t = self.bump();
        match &t.tok {
            Tok::Int(n) => {
                let mut value = BigRational::from_integer(n.clone());
                if self.peek().tok == Tok::Slash {
                    self.bump();
                    let d = self.bump();
                    let Tok::Int(den) = &d.tok else {
                        return Err(Self::error_at(
                            &d,
                            ParseErrorKind::Syntax(format!("expected integer denominator, found {}", d.tok)),
                        ));
                    };
                    if den.is_zero() {
                        return Err(Self::error_at(&d, ParseErrorKind::DivisionByZero));
                    }
                    value = BigRational::new(n.clone(), den.clone());
                }
                Ok(self.scalar(SymbolicScalar::constant(GaussianRational::real(value))))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::Ident(name) => self.identifier(&t, name),
            other => Err(Self::error_at(
                &t,
                ParseErrorKind::Syntax(format!("expected a factor, found {other}")),
            )),
        }
    }

    fn identifier(&mut self, t: &Spanned, name: &str) -> Result<Form, ParseError> {
        let space = self.space.clone();
        let n = space.dim();
        if name == "i" {
            return Ok(self.scalar(SymbolicScalar::constant(GaussianRational::i())));
        }
        if name == "exp" {
            self.expect(Tok::LParen)?;
            let arg = self.expr()?;
            self.expect(Tok::RParen)?;
            let linear = arg
                .is_scalar()
                .then(|| arg.scalar_part().as_linear_form())
                .flatten();
            return match linear {
                Some(l) => Ok(self.scalar(SymbolicScalar::exp_linear(n, l))),
                None => Err(Self::error_at(t, ParseErrorKind::NonLinearExponent(arg.to_string()))),
            };
        }
        if let Some(idx) = space.coords().iter().position(|c| c == name) {
            return Ok(self.scalar(SymbolicScalar::coordinate(n, idx)));
        }
        let lift = |f: CVForm<SymbolicScalar>| f.map(|c| c.clone().with_arity(n));
        if let Some(idx) = space.form_sig().index_of(name) {
            return Ok(lift(CVForm::form_generator(space.clone(), idx).expect("label index")));
        }
        if let Some(idx) = space.value_sig().index_of(name) {
            return Ok(lift(CVForm::value_generator(space.clone(), idx).expect("label index")));
        }
        Err(Self::error_at(t, ParseErrorKind::UnknownSymbol(name.to_string())))
    }
}

/// Parses `text` over `space`; the result is canonical.
pub fn parse(text: &str, space: &Arc<Space>) -> Result<Form, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        space,
    };
    let out = p.expr()?;
    let t = p.bump();
    if t.tok != Tok::End {
        return Err(Parser::error_at(&t, ParseErrorKind::Syntax(format!("unexpected {}", t.tok))));
    }
    Ok(out)
}

/// Linear form whose `exp` appears in a coefficient, for callers building
/// exponentials by hand.
pub fn linear(coeffs: &[(usize, GaussianRational)]) -> LinearExponent {
    LinearExponent::from_coeffs(coeffs.iter().cloned())
}
