//! Proof scripts: one derivation per file, written as nested s-expressions.
//!
//! ```text
//! (rule "dnR" (seq "dn(a)" "dn(a)")
//!   (rule "dnL" (seq "dn(a)" "Dn(a)")
//!     ...))
//! ```
//!
//! A node may carry `(at "L.0")` after its `seq`, naming the occurrence of the
//! cut formula in the right premise of a Flat cut. `;` starts a line comment.

use super::ast::{Derivation, OccPath, Side};
use super::parse::parse_sequent_parts;
use super::ParseError;

#[derive(Debug, Clone, PartialEq)]
enum SExp {
    Atom(String),
    Str(String),
    List(Vec<SExp>),
}

fn script_err(msg: impl Into<String>) -> ParseError {
    ParseError::Script(msg.into())
}

fn lex_sexp(src: &str) -> Result<SExp, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    let mut line = 1;
    let mut stack: Vec<Vec<SExp>> = Vec::new();
    let mut done: Option<SExp> = None;
    while i < chars.len() {
        let c = chars[i];
        match c {
            '\n' => {
                line += 1;
                i += 1;
            }
            c if c.is_whitespace() => i += 1,
            ';' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '(' => {
                if done.is_some() {
                    return Err(script_err(format!("line {line}: more than one derivation in script")));
                }
                stack.push(Vec::new());
                i += 1;
            }
            ')' => {
                let list = stack.pop().ok_or_else(|| script_err(format!("line {line}: unbalanced ')'")))?;
                match stack.last_mut() {
                    Some(parent) => parent.push(SExp::List(list)),
                    None => done = Some(SExp::List(list)),
                }
                i += 1;
            }
            '"' => {
                let mut s = String::new();
                i += 1;
                loop {
                    match chars.get(i) {
                        None => return Err(script_err(format!("line {line}: unterminated string"))),
                        Some('"') => break,
                        // Only `\"` is an escape; other backslashes belong to `/\` and `\/`.
                        Some('\\') if chars.get(i + 1) == Some(&'"') => {
                            s.push('"');
                            i += 2;
                            continue;
                        }
                        Some(&ch) => {
                            if ch == '\n' {
                                line += 1;
                            }
                            s.push(ch);
                        }
                    }
                    i += 1;
                }
                i += 1;
                let top = stack.last_mut().ok_or_else(|| script_err(format!("line {line}: string outside a list")))?;
                top.push(SExp::Str(s));
            }
            _ => {
                let start = i;
                while i < chars.len() && !chars[i].is_whitespace() && !matches!(chars[i], '(' | ')' | '"' | ';') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                let top = stack.last_mut().ok_or_else(|| script_err(format!("line {line}: atom outside a list")))?;
                top.push(SExp::Atom(word));
            }
        }
    }
    if !stack.is_empty() {
        return Err(script_err("unbalanced '(': script ends inside a list"));
    }
    done.ok_or_else(|| script_err("empty script"))
}

pub fn parse_occ_path(src: &str) -> Result<OccPath, ParseError> {
    let mut parts = src.trim().split('.');
    let side = match parts.next() {
        Some("L") => Side::Ant,
        Some("R") => Side::Suc,
        _ => return Err(script_err(format!("bad occurrence path '{src}': must start with L or R"))),
    };
    let steps = parts
        .map(|p| p.parse::<usize>().map_err(|_| script_err(format!("bad occurrence path '{src}'"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(OccPath { side, steps })
}

fn to_derivation(e: &SExp) -> Result<Derivation, ParseError> {
    let SExp::List(items) = e else {
        return Err(script_err("expected (rule ...)"));
    };
    match items.first() {
        Some(SExp::Atom(a)) if a == "rule" => {}
        _ => return Err(script_err("expected (rule ...)")),
    }
    let name = match items.get(1) {
        Some(SExp::Str(s)) => s.clone(),
        _ => return Err(script_err("rule name must be a string")),
    };
    let conclusion = match items.get(2) {
        Some(SExp::List(seq)) => match seq.as_slice() {
            [SExp::Atom(h), SExp::Str(a), SExp::Str(s)] if h == "seq" => parse_sequent_parts(a, s)
                .map_err(|e| script_err(format!("in rule \"{name}\", sequent \"{a}\" |- \"{s}\": {e}")))?,
            _ => return Err(script_err(format!("rule \"{name}\": expected (seq \"<ant>\" \"<succ>\")"))),
        },
        _ => return Err(script_err(format!("rule \"{name}\": expected (seq \"<ant>\" \"<succ>\")"))),
    };
    let mut rest = &items[3..];
    let mut active = None;
    if let Some(SExp::List(at)) = rest.first() {
        if let [SExp::Atom(h), SExp::Str(p)] = at.as_slice() {
            if h == "at" {
                active = Some(parse_occ_path(p)?);
                rest = &rest[1..];
            }
        }
    }
    let premises = rest.iter().map(to_derivation).collect::<Result<Vec<_>, _>>()?;
    Ok(Derivation { conclusion, rule: name, premises, active })
}

pub fn parse_script(src: &str) -> Result<Derivation, ParseError> {
    to_derivation(&lex_sexp(src)?)
}

fn quote(s: &str) -> String {
    s.replace('"', "\\\"")
}

fn write_node(d: &Derivation, indent: usize, out: &mut String) {
    let (a, s) = d.conclusion.sides();
    out.push_str(&" ".repeat(indent));
    out.push_str(&format!("(rule \"{}\" (seq \"{}\" \"{}\")", quote(&d.rule), quote(&a), quote(&s)));
    if let Some(p) = &d.active {
        out.push_str(&format!(" (at \"{p}\")"));
    }
    for p in &d.premises {
        out.push('\n');
        write_node(p, indent + 2, out);
    }
    out.push(')');
}

/// Render a derivation back to script form.
pub fn print_script(d: &Derivation) -> String {
    let mut out = String::new();
    write_node(d, 0, &mut out);
    out.push('\n');
    out
}
