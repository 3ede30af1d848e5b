//! Element expressions: tokenizer, parser and evaluator.
//!
//! element := term {"+" term}; term := factor {("*" | "o") factor}; factor := atom ["^" NAT];
//! `^` binds tighter than `*` (cup), which binds tighter than `o` (transfer), then `+`.

use std::fmt;

use coxring::{ElementB, ElementD};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character column.
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ring {
    B,
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    Delta(u32),
    Gamma(u32, u32),
    Unit(u32),
    Delta0(u32, u32),
    GammaPlus(u32, u32),
    GammaMinus(u32, u32),
    UnitD(u32),
    OnePlus,
    OneMinus,
}

impl Atom {
    pub fn ring(self) -> Ring {
        match self {
            Atom::Delta(_) | Atom::Gamma(..) | Atom::Unit(_) => Ring::B,
            _ => Ring::D,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Atom(Atom),
    Add(Box<Expr>, Box<Expr>),
    Cup(Box<Expr>, Box<Expr>),
    Odot(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Atom(Atom),
    Plus,
    Star,
    Odot,
    Caret,
    LParen,
    RParen,
    Num(u32),
}

struct Lexer<'a> {
    s: &'a [u8],
    i: usize,
}

impl Lexer<'_> {
    fn err<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: pos + 1, msg: msg.into() })
    }

    fn num(&mut self) -> Result<u32, ParseError> {
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return self.err(start, "expected a number");
        }
        let text = std::str::from_utf8(&self.s[start..self.i]).expect("ascii digits");
        text.parse().or_else(|_| self.err(start, "number too large"))
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.s.get(self.i) == Some(&c) {
            self.i += 1;
            Ok(())
        } else {
            self.err(self.i, format!("expected '{}'", c as char))
        }
    }

    fn pair(&mut self) -> Result<(u32, u32), ParseError> {
        let a = self.num()?;
        self.expect(b'_')?;
        Ok((a, self.num()?))
    }

    fn sign(&mut self) -> Result<bool, ParseError> {
        match self.s.get(self.i) {
            Some(b'+') => {
                self.i += 1;
                Ok(true)
            }
            Some(b'-') => {
                self.i += 1;
                Ok(false)
            }
            _ => self.err(self.i, "expected '+' or '-'"),
        }
    }

    fn tokens(mut self) -> Result<Vec<(usize, Tok)>, ParseError> {
        let mut out = Vec::new();
        while self.i < self.s.len() {
            let start = self.i;
            let c = self.s[self.i];
            if c.is_ascii_whitespace() {
                self.i += 1;
                continue;
            }
            self.i += 1;
            let tok = match c {
                b'+' => Tok::Plus,
                b'*' => Tok::Star,
                b'o' => Tok::Odot,
                b'^' => Tok::Caret,
                b'(' => Tok::LParen,
                b')' => Tok::RParen,
                b'0'..=b'9' => {
                    self.i = start;
                    Tok::Num(self.num()?)
                }
                b'd' => Tok::Atom(Atom::Delta(self.num()?)),
                b'u' => Tok::Atom(Atom::Unit(self.num()?)),
                b'U' => Tok::Atom(Atom::UnitD(self.num()?)),
                b'g' => {
                    let (k, m) = self.pair()?;
                    Tok::Atom(Atom::Gamma(k, m))
                }
                b'D' => {
                    let (n, m) = self.pair()?;
                    Tok::Atom(Atom::Delta0(n, m))
                }
                b'G' => {
                    let plus = self.sign()?;
                    let (k, m) = self.pair()?;
                    Tok::Atom(if plus { Atom::GammaPlus(k, m) } else { Atom::GammaMinus(k, m) })
                }
                b'e' => Tok::Atom(if self.sign()? { Atom::OnePlus } else { Atom::OneMinus }),
                _ => {
                    let ch = std::str::from_utf8(&self.s[start..]).ok().and_then(|t| t.chars().next()).unwrap_or('?');
                    return self.err(start, format!("unexpected character '{ch}'"));
                }
            };
            out.push((start, tok));
        }
        Ok(out)
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
    ring: Option<(Ring, usize)>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos() + 1, msg: msg.into() })
    }

    fn element(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.transfer()?;
        while self.peek() == Some(&Tok::Plus) {
            self.i += 1;
            e = Expr::Add(Box::new(e), Box::new(self.transfer()?));
        }
        Ok(e)
    }

    fn transfer(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.cup()?;
        while self.peek() == Some(&Tok::Odot) {
            self.i += 1;
            e = Expr::Odot(Box::new(e), Box::new(self.cup()?));
        }
        Ok(e)
    }

    fn cup(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.i += 1;
            e = Expr::Cup(Box::new(e), Box::new(self.factor()?));
        }
        Ok(e)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let a = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.i += 1;
            match self.peek() {
                Some(&Tok::Num(k)) => {
                    self.i += 1;
                    return Ok(Expr::Pow(Box::new(a), k));
                }
                _ => return self.err("expected an exponent"),
            }
        }
        Ok(a)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Atom(a)) => {
                let here = self.pos();
                match self.ring {
                    None => self.ring = Some((a.ring(), here)),
                    Some((r, first)) if r != a.ring() => {
                        return self.err(format!("mixes {:?} and {:?} atoms (first atom at position {})", r, a.ring(), first + 1));
                    }
                    _ => {}
                }
                self.i += 1;
                Ok(Expr::Atom(a))
            }
            Some(Tok::LParen) => {
                self.i += 1;
                let e = self.element()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.i += 1;
                Ok(e)
            }
            Some(_) => self.err("expected an atom or '('"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse an expression; the ring is fixed by its atoms.
pub fn parse(input: &str) -> Result<(Ring, Expr), ParseError> {
    let toks = Lexer { s: input.as_bytes(), i: 0 }.tokens()?;
    let mut p = Parser { toks, i: 0, end: input.len(), ring: None };
    let e = p.element()?;
    if p.i < p.toks.len() {
        return p.err("unexpected token");
    }
    Ok((p.ring.map(|r| r.0).expect("an element has at least one atom"), e))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    B(ElementB),
    D(ElementD),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::B(x) => write!(f, "{x}"),
            Value::D(x) => write!(f, "{x}"),
        }
    }
}

fn atom_b(a: Atom) -> Result<ElementB, String> {
    Ok(match a {
        Atom::Delta(0) => return Err("d0 is not defined".into()),
        Atom::Delta(n) => ElementB::delta(n),
        Atom::Gamma(k, m) if k == 0 || m == 0 => return Err(format!("g{k}_{m} is not defined")),
        Atom::Gamma(k, m) if k > 16 || (m << k) >> k != m => return Err(format!("g{k}_{m} is too large")),
        Atom::Gamma(k, m) => ElementB::gamma(k, m),
        Atom::Unit(n) => ElementB::unit(n),
        _ => unreachable!("ring checked by the parser"),
    })
}

fn atom_d(a: Atom) -> Result<ElementD, String> {
    Ok(match a {
        Atom::Delta0(n, m) => ElementD::delta0(n, m),
        Atom::GammaPlus(k, m) | Atom::GammaMinus(k, m) if k == 0 || m == 0 => {
            return Err(format!("gamma index {k}_{m} is not defined"))
        }
        Atom::GammaPlus(k, m) | Atom::GammaMinus(k, m) if k > 16 || (m << k) >> k != m => {
            return Err(format!("gamma index {k}_{m} is too large"))
        }
        Atom::GammaPlus(k, m) => ElementD::gamma_plus(k, m),
        Atom::GammaMinus(k, m) => ElementD::gamma_minus(k, m),
        Atom::UnitD(n) => ElementD::unit(n),
        Atom::OnePlus => ElementD::one(),
        Atom::OneMinus => ElementD::one_minus(),
        _ => unreachable!("ring checked by the parser"),
    })
}

fn eval_b(e: &Expr) -> Result<ElementB, String> {
    Ok(match e {
        Expr::Atom(a) => atom_b(*a)?,
        Expr::Add(x, y) => eval_b(x)?.add(&eval_b(y)?),
        Expr::Cup(x, y) => eval_b(x)?.cup(&eval_b(y)?),
        Expr::Odot(x, y) => eval_b(x)?.odot(&eval_b(y)?),
        Expr::Pow(x, k) => eval_b(x)?.pow(*k),
    })
}

fn eval_d(e: &Expr) -> Result<ElementD, String> {
    Ok(match e {
        Expr::Atom(a) => atom_d(*a)?,
        Expr::Add(x, y) => eval_d(x)?.add(&eval_d(y)?),
        Expr::Cup(x, y) => eval_d(x)?.try_cup(&eval_d(y)?).map_err(|e| e.to_string())?,
        Expr::Odot(x, y) => eval_d(x)?.odot(&eval_d(y)?),
        Expr::Pow(x, k) => {
            let base = eval_d(x)?;
            if *k == 0 {
                base.pow(0)
            } else {
                let mut out = base.clone();
                for _ in 1..*k {
                    out = out.try_cup(&base).map_err(|e| e.to_string())?;
                }
                out
            }
        }
    })
}

pub fn eval(ring: Ring, e: &Expr) -> Result<Value, String> {
    match ring {
        Ring::B => eval_b(e).map(Value::B),
        Ring::D => eval_d(e).map(Value::D),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(s: &str) -> Value {
        let (r, e) = parse(s).unwrap();
        eval(r, &e).unwrap()
    }

    #[test]
    fn precedence_of_operators() {
        assert_eq!(ev("d2 * g1_1 o d1"), ev("(d2 * g1_1) o d1"));
        assert_eq!(ev("d1^2 o d1"), ev("(d1 * d1) o d1"));
        assert_eq!(ev("g1_1 o g1_1"), Value::B(ElementB::zero()));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("d1 o (g1_1").unwrap_err();
        assert_eq!(e.pos, 11);
        let e = parse("d1 + G+1_1").unwrap_err();
        assert_eq!(e.pos, 6);
        assert_eq!(parse("d1 + x").unwrap_err().pos, 6);
        assert_eq!(parse("g1").unwrap_err().pos, 3);
    }

    #[test]
    fn d_atoms() {
        assert_eq!(ev("e- o e-"), Value::D(ElementD::one()));
        assert_eq!(ev("G+1_1 * G-1_1"), ev("D2_0"));
    }
}
