//! Tokenizer and an untyped precedence parser shared by every sort.
//!
//! Precedence, loosest first: `|>` `>` (right), `,` `;` (left),
//! `~>` `->` `=>` (right), `|` `\/` (left), `&` `/\` (left), prefix `~` `neg` `?`.

use super::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Var(String),
    Meta(String),
    Zero,
    LParen,
    RParen,
    Comma,
    Semi,
    Sup,
    Gt,
    Turnstile,
    Cap,
    Cup,
    FImp,
    Tilde,
    And,
    Or,
    Imp,
    GImp,
    Question,
    DepOpen,
    KwDn,
    KwNeg,
    KwF,
    KwFs,
    KwDnS,
    KwPh,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Var(v) | Tok::Meta(v) => format!("'{v}'"),
            Tok::Zero => "'0'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Semi => "';'".into(),
            Tok::Sup => "'|>'".into(),
            Tok::Gt => "'>'".into(),
            Tok::Turnstile => "'|-'".into(),
            Tok::Cap => "'&'".into(),
            Tok::Cup => "'|'".into(),
            Tok::FImp => "'~>'".into(),
            Tok::Tilde => "'~'".into(),
            Tok::And => "'/\\'".into(),
            Tok::Or => "'\\/'".into(),
            Tok::Imp => "'->'".into(),
            Tok::GImp => "'=>'".into(),
            Tok::Question => "'?'".into(),
            Tok::DepOpen => "'=('".into(),
            Tok::KwDn => "'dn'".into(),
            Tok::KwNeg => "'neg'".into(),
            Tok::KwF => "'F'".into(),
            Tok::KwFs => "'Fs'".into(),
            Tok::KwDnS => "'Dn'".into(),
            Tok::KwPh => "'Ph'".into(),
        }
    }
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let two = if i + 1 < bytes.len() { &src[i..i + 2] } else { "" };
        let (tok, len) = match two {
            "|>" => (Tok::Sup, 2),
            "|-" => (Tok::Turnstile, 2),
            "~>" => (Tok::FImp, 2),
            "/\\" => (Tok::And, 2),
            "\\/" => (Tok::Or, 2),
            "->" => (Tok::Imp, 2),
            "=>" => (Tok::GImp, 2),
            "=(" => (Tok::DepOpen, 2),
            _ => match c {
                b'(' => (Tok::LParen, 1),
                b')' => (Tok::RParen, 1),
                b',' => (Tok::Comma, 1),
                b';' => (Tok::Semi, 1),
                b'>' => (Tok::Gt, 1),
                b'&' => (Tok::Cap, 1),
                b'|' => (Tok::Cup, 1),
                b'~' => (Tok::Tilde, 1),
                b'?' => (Tok::Question, 1),
                b'0' => (Tok::Zero, 1),
                c if c.is_ascii_alphabetic() => {
                    let start = i;
                    let mut j = i + 1;
                    while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_') {
                        j += 1;
                    }
                    let word = &src[start..j];
                    let tok = if c.is_ascii_lowercase() {
                        match word {
                            "dn" => Tok::KwDn,
                            "neg" => Tok::KwNeg,
                            _ => Tok::Var(word.to_string()),
                        }
                    } else {
                        match word {
                            "F" => Tok::KwF,
                            "Fs" => Tok::KwFs,
                            "Dn" => Tok::KwDnS,
                            "Ph" => Tok::KwPh,
                            _ => Tok::Meta(word.to_string()),
                        }
                    };
                    (tok, j - start)
                }
                _ => {
                    let ch = src[i..].chars().next().unwrap_or('?');
                    return Err(ParseError::Syntax { pos: i, msg: format!("unexpected character '{ch}'") });
                }
            },
        };
        out.push((i, tok));
        i += len;
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum BinOp {
    Sup,
    Gt,
    Comma,
    Semi,
    FImp,
    Imp,
    GImp,
    Cup,
    Or,
    Cap,
    And,
}

impl BinOp {
    pub(crate) fn symbol(self) -> &'static str {
        match self {
            BinOp::Sup => "|>",
            BinOp::Gt => ">",
            BinOp::Comma => ",",
            BinOp::Semi => ";",
            BinOp::FImp => "~>",
            BinOp::Imp => "->",
            BinOp::GImp => "=>",
            BinOp::Cup => "|",
            BinOp::Or => "\\/",
            BinOp::Cap => "&",
            BinOp::And => "/\\",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum UnOp {
    Tilde,
    Neg,
    Question,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Head {
    /// `dn(...)`, the formula connective.
    Dn,
    F,
    Fs,
    /// `Dn(...)`, the structural connective.
    DnS,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Term {
    Var(String),
    Meta(String),
    Zero,
    Ph,
    Bin(BinOp, Box<Term>, Box<Term>),
    Un(UnOp, Box<Term>),
    Call(Head, Box<Term>),
    Dep(Vec<String>),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn err(&self, expected: &str) -> ParseError {
        let found = self.peek().map(Tok::describe).unwrap_or_else(|| "end of input".into());
        ParseError::Syntax { pos: self.here(), msg: format!("expected {expected}, found {found}") }
    }

    fn expect(&mut self, t: Tok) -> Result<(), ParseError> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&t.describe()))
        }
    }

    fn sup(&mut self) -> Result<Term, ParseError> {
        let lhs = self.comma()?;
        let op = match self.peek() {
            Some(Tok::Sup) => BinOp::Sup,
            Some(Tok::Gt) => BinOp::Gt,
            _ => return Ok(lhs),
        };
        self.pos += 1;
        let rhs = self.sup()?;
        Ok(Term::Bin(op, Box::new(lhs), Box::new(rhs)))
    }

    fn comma(&mut self) -> Result<Term, ParseError> {
        let mut lhs = self.imp()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Comma) => BinOp::Comma,
                Some(Tok::Semi) => BinOp::Semi,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.imp()?;
            lhs = Term::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn imp(&mut self) -> Result<Term, ParseError> {
        let lhs = self.or()?;
        let op = match self.peek() {
            Some(Tok::FImp) => BinOp::FImp,
            Some(Tok::Imp) => BinOp::Imp,
            Some(Tok::GImp) => BinOp::GImp,
            _ => return Ok(lhs),
        };
        self.pos += 1;
        let rhs = self.imp()?;
        Ok(Term::Bin(op, Box::new(lhs), Box::new(rhs)))
    }

    fn or(&mut self) -> Result<Term, ParseError> {
        let mut lhs = self.and()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Cup) => BinOp::Cup,
                Some(Tok::Or) => BinOp::Or,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.and()?;
            lhs = Term::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn and(&mut self) -> Result<Term, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Cap) => BinOp::Cap,
                Some(Tok::And) => BinOp::And,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Term::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Term, ParseError> {
        let op = match self.peek() {
            Some(Tok::Tilde) => UnOp::Tilde,
            Some(Tok::KwNeg) => UnOp::Neg,
            Some(Tok::Question) => UnOp::Question,
            _ => return self.atom(),
        };
        self.pos += 1;
        let t = self.unary()?;
        Ok(Term::Un(op, Box::new(t)))
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        match self.bump() {
            Some(Tok::Var(v)) => Ok(Term::Var(v)),
            Some(Tok::Meta(v)) => Ok(Term::Meta(v)),
            Some(Tok::Zero) => Ok(Term::Zero),
            Some(Tok::KwPh) => Ok(Term::Ph),
            Some(Tok::LParen) => {
                let t = self.sup()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            Some(tok @ (Tok::KwDn | Tok::KwF | Tok::KwFs | Tok::KwDnS)) => {
                let head = match tok {
                    Tok::KwDn => Head::Dn,
                    Tok::KwF => Head::F,
                    Tok::KwFs => Head::Fs,
                    _ => Head::DnS,
                };
                self.expect(Tok::LParen)?;
                let t = self.sup()?;
                self.expect(Tok::RParen)?;
                Ok(Term::Call(head, Box::new(t)))
            }
            Some(Tok::DepOpen) => {
                let mut vars = Vec::new();
                loop {
                    match self.bump() {
                        Some(Tok::Var(v)) => vars.push(v),
                        _ => {
                            self.pos -= 1;
                            return Err(self.err("a variable"));
                        }
                    }
                    match self.bump() {
                        Some(Tok::Comma) => continue,
                        Some(Tok::RParen) => break,
                        _ => {
                            self.pos -= 1;
                            return Err(self.err("',' or ')'"));
                        }
                    }
                }
                Ok(Term::Dep(vars))
            }
            _ => {
                self.pos -= 1;
                Err(self.err("a formula or structure"))
            }
        }
    }
}

/// Parse a whole string as one term.
pub(crate) fn parse_term(src: &str) -> Result<Term, ParseError> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, pos: 0, end: src.len() };
    let t = p.sup()?;
    if p.pos < p.toks.len() {
        return Err(p.err("end of input"));
    }
    Ok(t)
}

/// Split a sequent at its single `|-` and parse both halves.
pub(crate) fn parse_sequent_terms(src: &str) -> Result<(Term, Term), ParseError> {
    let toks = tokenize(src)?;
    let mut turnstiles = toks.iter().filter(|(_, t)| *t == Tok::Turnstile);
    let Some(&(split, _)) = turnstiles.next() else {
        return Err(ParseError::Syntax { pos: src.len(), msg: "sequent has no '|-'".into() });
    };
    if let Some(&(p, _)) = turnstiles.next() {
        return Err(ParseError::Syntax { pos: p, msg: "sequent has more than one '|-'".into() });
    }
    let ant = parse_term(&src[..split])?;
    let suc = parse_term(&src[split + 2..]).map_err(|e| match e {
        ParseError::Syntax { pos, msg } => ParseError::Syntax { pos: pos + split + 2, msg },
        other => other,
    })?;
    Ok((ant, suc))
}
