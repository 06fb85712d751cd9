//! Typed readers on top of the untyped term parser.

use super::ast::*;
use super::term::{parse_sequent_terms, parse_term, BinOp, Head, Term, UnOp};
use super::ParseError;

fn describe(t: &Term) -> String {
    match t {
        Term::Var(v) | Term::Meta(v) => format!("'{v}'"),
        Term::Zero => "'0'".into(),
        Term::Ph => "'Ph'".into(),
        Term::Bin(op, ..) => format!("'{}'", op.symbol()),
        Term::Un(UnOp::Tilde, _) => "'~'".into(),
        Term::Un(UnOp::Neg, _) => "'neg'".into(),
        Term::Un(UnOp::Question, _) => "'?'".into(),
        Term::Call(Head::Dn, _) => "'dn(...)'".into(),
        Term::Call(Head::F, _) => "'F(...)'".into(),
        Term::Call(Head::Fs, _) => "'Fs(...)'".into(),
        Term::Call(Head::DnS, _) => "'Dn(...)'".into(),
        Term::Dep(_) => "'=(...)'".into(),
    }
}

fn sort_err(t: &Term, what: &str) -> ParseError {
    ParseError::Sort(format!("{} is not allowed in {what}", describe(t)))
}

fn bx<T>(t: T) -> Box<T> {
    Box::new(t)
}

pub(crate) fn term_to_inql(t: &Term) -> Result<InqFormula, ParseError> {
    const WHAT: &str = "an InqL formula";
    Ok(match t {
        Term::Var(v) => InqFormula::Var(v.clone()),
        Term::Zero => InqFormula::Zero,
        Term::Bin(BinOp::And, a, b) => InqFormula::And(bx(term_to_inql(a)?), bx(term_to_inql(b)?)),
        Term::Bin(BinOp::Imp, a, b) => InqFormula::Imp(bx(term_to_inql(a)?), bx(term_to_inql(b)?)),
        Term::Bin(BinOp::Or, a, b) => InqFormula::Or(bx(term_to_inql(a)?), bx(term_to_inql(b)?)),
        Term::Un(UnOp::Tilde, a) => InqFormula::neg(term_to_inql(a)?),
        Term::Un(UnOp::Question, a) => InqFormula::question(term_to_inql(a)?),
        Term::Dep(vars) => {
            let (q, ps) = vars.split_last().expect("dependence atom has at least one variable");
            let ps: Vec<&str> = ps.iter().map(String::as_str).collect();
            InqFormula::dependence(&ps, q)
        }
        other => return Err(sort_err(other, WHAT)),
    })
}

pub(crate) fn term_to_flat_formula(t: &Term) -> Result<FlatFormula, ParseError> {
    const WHAT: &str = "a Flat formula";
    Ok(match t {
        Term::Var(v) => FlatFormula::Var(v.clone()),
        Term::Zero => FlatFormula::Zero,
        Term::Bin(BinOp::Cap, a, b) => FlatFormula::cap(term_to_flat_formula(a)?, term_to_flat_formula(b)?),
        Term::Bin(BinOp::FImp, a, b) => FlatFormula::fimp(term_to_flat_formula(a)?, term_to_flat_formula(b)?),
        Term::Bin(BinOp::Cup, a, b) => FlatFormula::cup(term_to_flat_formula(a)?, term_to_flat_formula(b)?),
        Term::Un(UnOp::Tilde, a) => FlatFormula::neg(term_to_flat_formula(a)?),
        other => return Err(sort_err(other, WHAT)),
    })
}

pub(crate) fn term_to_general_formula(t: &Term) -> Result<GeneralFormula, ParseError> {
    const WHAT: &str = "a General formula";
    Ok(match t {
        Term::Call(Head::Dn, a) => GeneralFormula::Down(term_to_flat_formula(a)?),
        Term::Bin(BinOp::And, a, b) => GeneralFormula::and(term_to_general_formula(a)?, term_to_general_formula(b)?),
        Term::Bin(BinOp::Or, a, b) => GeneralFormula::or(term_to_general_formula(a)?, term_to_general_formula(b)?),
        Term::Bin(BinOp::GImp, a, b) => GeneralFormula::imp(term_to_general_formula(a)?, term_to_general_formula(b)?),
        Term::Un(UnOp::Neg, a) => GeneralFormula::neg(term_to_general_formula(a)?),
        other => return Err(sort_err(other, WHAT)),
    })
}

pub(crate) fn term_to_flat_structure(t: &Term) -> Result<FlatStructure, ParseError> {
    Ok(match t {
        Term::Ph => FlatStructure::Phi,
        Term::Bin(BinOp::Comma, a, b) => FlatStructure::comma(term_to_flat_structure(a)?, term_to_flat_structure(b)?),
        Term::Bin(BinOp::Sup, a, b) => FlatStructure::sup(term_to_flat_structure(a)?, term_to_flat_structure(b)?),
        Term::Call(Head::F, x) => FlatStructure::f_of(term_to_general_structure(x)?),
        other => FlatStructure::Fml(term_to_flat_formula(other).map_err(|_| sort_err(other, "a Flat structure"))?),
    })
}

pub(crate) fn term_to_general_structure(t: &Term) -> Result<GeneralStructure, ParseError> {
    Ok(match t {
        Term::Call(Head::DnS, g) => GeneralStructure::down_of(term_to_flat_structure(g)?),
        Term::Call(Head::Fs, g) => GeneralStructure::fstar_of(term_to_flat_structure(g)?),
        Term::Bin(BinOp::Semi, a, b) => GeneralStructure::semi(term_to_general_structure(a)?, term_to_general_structure(b)?),
        Term::Bin(BinOp::Gt, a, b) => GeneralStructure::gt(term_to_general_structure(a)?, term_to_general_structure(b)?),
        other => GeneralStructure::Fml(
            term_to_general_formula(other).map_err(|_| sort_err(other, "a General structure"))?,
        ),
    })
}

/// Sort of a structure term, read off its main connective.
pub(crate) fn term_sort(t: &Term) -> Result<Sort, ParseError> {
    match t {
        Term::Var(_)
        | Term::Zero
        | Term::Ph
        | Term::Un(UnOp::Tilde, _)
        | Term::Call(Head::F, _)
        | Term::Bin(BinOp::Comma | BinOp::Sup | BinOp::Cap | BinOp::Cup | BinOp::FImp, ..) => Ok(Sort::Flat),
        Term::Un(UnOp::Neg, _)
        | Term::Call(Head::Dn | Head::DnS | Head::Fs, _)
        | Term::Bin(BinOp::Semi | BinOp::Gt | BinOp::And | BinOp::Or | BinOp::GImp, ..) => Ok(Sort::General),
        other => Err(sort_err(other, "a sequent of the calculus")),
    }
}

pub(crate) fn terms_to_sequent(ant: &Term, suc: &Term) -> Result<Sequent, ParseError> {
    let (sa, ss) = (term_sort(ant)?, term_sort(suc)?);
    if sa != ss {
        return Err(ParseError::TypeUniformity(format!(
            "antecedent is {sa:?} but succedent is {ss:?}"
        )));
    }
    Ok(match sa {
        Sort::Flat => Sequent::Flat(term_to_flat_structure(ant)?, term_to_flat_structure(suc)?),
        Sort::General => Sequent::General(term_to_general_structure(ant)?, term_to_general_structure(suc)?),
    })
}

fn no_metas(t: &Term) -> Result<(), ParseError> {
    match t {
        Term::Meta(m) => Err(ParseError::Sort(format!(
            "'{m}' is not a variable (variables are lowercase)"
        ))),
        Term::Bin(_, a, b) => {
            no_metas(a)?;
            no_metas(b)
        }
        Term::Un(_, a) | Term::Call(_, a) => no_metas(a),
        _ => Ok(()),
    }
}

fn concrete(src: &str) -> Result<Term, ParseError> {
    let t = parse_term(src)?;
    no_metas(&t)?;
    Ok(t)
}

pub fn parse_inql(src: &str) -> Result<InqFormula, ParseError> {
    term_to_inql(&concrete(src)?)
}

pub fn parse_flat_formula(src: &str) -> Result<FlatFormula, ParseError> {
    term_to_flat_formula(&concrete(src)?)
}

pub fn parse_general_formula(src: &str) -> Result<GeneralFormula, ParseError> {
    term_to_general_formula(&concrete(src)?)
}

pub fn parse_flat_structure(src: &str) -> Result<FlatStructure, ParseError> {
    term_to_flat_structure(&concrete(src)?)
}

pub fn parse_general_structure(src: &str) -> Result<GeneralStructure, ParseError> {
    term_to_general_structure(&concrete(src)?)
}

/// Parse `ant |- suc`.
pub fn parse_sequent(src: &str) -> Result<Sequent, ParseError> {
    let (a, s) = parse_sequent_terms(src)?;
    no_metas(&a)?;
    no_metas(&s)?;
    terms_to_sequent(&a, &s)
}

/// Parse a sequent given as separate antecedent and succedent strings.
pub fn parse_sequent_parts(ant: &str, suc: &str) -> Result<Sequent, ParseError> {
    let (a, s) = (concrete(ant)?, concrete(suc)?);
    terms_to_sequent(&a, &s)
}
