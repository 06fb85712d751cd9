//! Rule-schema patterns and first-order matching against concrete sequents.
//!
//! Pattern text uses the concrete syntax with metavariables:
//! `G D S P L` Flat structures, `X Y Z W` General structures,
//! `A B C` General formulas, lowercase names Flat formulas, and `p` atoms only.

use std::collections::BTreeMap;
use std::fmt;

use crate::syntax::term::{parse_sequent_terms, BinOp, Head, Term, UnOp};
use crate::syntax::{FlatFormula, FlatStructure, GeneralFormula, GeneralStructure, ParseError, Sequent, Sort};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FlatFormPat {
    Meta(String),
    Atom(String),
    Zero,
    Cap(Box<FlatFormPat>, Box<FlatFormPat>),
    FImp(Box<FlatFormPat>, Box<FlatFormPat>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GenFormPat {
    Meta(String),
    Down(FlatFormPat),
    And(Box<GenFormPat>, Box<GenFormPat>),
    Or(Box<GenFormPat>, Box<GenFormPat>),
    Imp(Box<GenFormPat>, Box<GenFormPat>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FlatPat {
    Meta(String),
    Phi,
    Form(FlatFormPat),
    Comma(Box<FlatPat>, Box<FlatPat>),
    Sup(Box<FlatPat>, Box<FlatPat>),
    FOf(Box<GenPat>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GenPat {
    Meta(String),
    DownOf(Box<FlatPat>),
    FStarOf(Box<FlatPat>),
    Form(GenFormPat),
    Semi(Box<GenPat>, Box<GenPat>),
    Gt(Box<GenPat>, Box<GenPat>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SeqPat {
    Flat(FlatPat, FlatPat),
    General(GenPat, GenPat),
}

impl SeqPat {
    pub fn sort(&self) -> Sort {
        match self {
            SeqPat::Flat(..) => Sort::Flat,
            SeqPat::General(..) => Sort::General,
        }
    }
}

/// What a metavariable stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MetaKind {
    FlatStructure,
    GeneralStructure,
    FlatFormula,
    GeneralFormula,
    Atom,
}

pub fn meta_kind(name: &str) -> Option<MetaKind> {
    match name {
        "G" | "D" | "S" | "P" | "L" => Some(MetaKind::FlatStructure),
        "X" | "Y" | "Z" | "W" => Some(MetaKind::GeneralStructure),
        "A" | "B" | "C" => Some(MetaKind::GeneralFormula),
        "p" => Some(MetaKind::Atom),
        n if n.chars().all(|c| c.is_ascii_lowercase()) => Some(MetaKind::FlatFormula),
        _ => None,
    }
}

fn pat_err(msg: String) -> ParseError {
    ParseError::Sort(msg)
}

fn pat_sort(t: &Term) -> Result<Sort, ParseError> {
    match t {
        Term::Meta(m) => match meta_kind(m) {
            Some(MetaKind::FlatStructure) => Ok(Sort::Flat),
            Some(MetaKind::GeneralStructure | MetaKind::GeneralFormula) => Ok(Sort::General),
            _ => Err(pat_err(format!("unknown metavariable '{m}'"))),
        },
        other => crate::syntax::term_sort(other),
    }
}

fn flat_form(t: &Term) -> Result<FlatFormPat, ParseError> {
    Ok(match t {
        Term::Var(v) if v == "p" => FlatFormPat::Atom(v.clone()),
        Term::Var(v) => FlatFormPat::Meta(v.clone()),
        Term::Zero => FlatFormPat::Zero,
        Term::Bin(BinOp::Cap, a, b) => FlatFormPat::Cap(Box::new(flat_form(a)?), Box::new(flat_form(b)?)),
        Term::Bin(BinOp::FImp, a, b) => FlatFormPat::FImp(Box::new(flat_form(a)?), Box::new(flat_form(b)?)),
        Term::Un(UnOp::Tilde, a) => FlatFormPat::FImp(Box::new(flat_form(a)?), Box::new(FlatFormPat::Zero)),
        other => return Err(pat_err(format!("{other:?} is not a Flat formula pattern"))),
    })
}

fn gen_form(t: &Term) -> Result<GenFormPat, ParseError> {
    Ok(match t {
        Term::Meta(m) if meta_kind(m) == Some(MetaKind::GeneralFormula) => GenFormPat::Meta(m.clone()),
        Term::Call(Head::Dn, a) => GenFormPat::Down(flat_form(a)?),
        Term::Bin(BinOp::And, a, b) => GenFormPat::And(Box::new(gen_form(a)?), Box::new(gen_form(b)?)),
        Term::Bin(BinOp::Or, a, b) => GenFormPat::Or(Box::new(gen_form(a)?), Box::new(gen_form(b)?)),
        Term::Bin(BinOp::GImp, a, b) => GenFormPat::Imp(Box::new(gen_form(a)?), Box::new(gen_form(b)?)),
        Term::Un(UnOp::Neg, a) => {
            GenFormPat::Imp(Box::new(gen_form(a)?), Box::new(GenFormPat::Down(FlatFormPat::Zero)))
        }
        other => return Err(pat_err(format!("{other:?} is not a General formula pattern"))),
    })
}

fn flat_pat(t: &Term) -> Result<FlatPat, ParseError> {
    Ok(match t {
        Term::Meta(m) if meta_kind(m) == Some(MetaKind::FlatStructure) => FlatPat::Meta(m.clone()),
        Term::Ph => FlatPat::Phi,
        Term::Bin(BinOp::Comma, a, b) => FlatPat::Comma(Box::new(flat_pat(a)?), Box::new(flat_pat(b)?)),
        Term::Bin(BinOp::Sup, a, b) => FlatPat::Sup(Box::new(flat_pat(a)?), Box::new(flat_pat(b)?)),
        Term::Call(Head::F, x) => FlatPat::FOf(Box::new(gen_pat(x)?)),
        other => FlatPat::Form(flat_form(other)?),
    })
}

fn gen_pat(t: &Term) -> Result<GenPat, ParseError> {
    Ok(match t {
        Term::Meta(m) if meta_kind(m) == Some(MetaKind::GeneralStructure) => GenPat::Meta(m.clone()),
        Term::Call(Head::DnS, g) => GenPat::DownOf(Box::new(flat_pat(g)?)),
        Term::Call(Head::Fs, g) => GenPat::FStarOf(Box::new(flat_pat(g)?)),
        Term::Bin(BinOp::Semi, a, b) => GenPat::Semi(Box::new(gen_pat(a)?), Box::new(gen_pat(b)?)),
        Term::Bin(BinOp::Gt, a, b) => GenPat::Gt(Box::new(gen_pat(a)?), Box::new(gen_pat(b)?)),
        other => GenPat::Form(gen_form(other)?),
    })
}

/// Parse a sequent pattern such as `G, D |- S`.
pub fn parse_seq_pat(src: &str) -> Result<SeqPat, ParseError> {
    let (a, s) = parse_sequent_terms(src)?;
    let (sa, ss) = (pat_sort(&a)?, pat_sort(&s)?);
    if sa != ss {
        return Err(ParseError::TypeUniformity(format!("pattern '{src}' mixes sorts")));
    }
    Ok(match sa {
        Sort::Flat => SeqPat::Flat(flat_pat(&a)?, flat_pat(&s)?),
        Sort::General => SeqPat::General(gen_pat(&a)?, gen_pat(&s)?),
    })
}

/// A value bound to a metavariable by matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    FlatS(FlatStructure),
    GenS(GeneralStructure),
    FlatF(FlatFormula),
    GenF(GeneralFormula),
}

pub type Binding = BTreeMap<String, Bound>;

fn bind(b: &mut Binding, name: &str, v: Bound) -> bool {
    match b.get(name) {
        Some(old) => *old == v,
        None => {
            b.insert(name.to_string(), v);
            true
        }
    }
}

fn match_flat_form(p: &FlatFormPat, f: &FlatFormula, b: &mut Binding) -> bool {
    match (p, f) {
        (FlatFormPat::Meta(m), _) => bind(b, m, Bound::FlatF(f.clone())),
        (FlatFormPat::Atom(m), FlatFormula::Var(_)) => bind(b, m, Bound::FlatF(f.clone())),
        (FlatFormPat::Zero, FlatFormula::Zero) => true,
        (FlatFormPat::Cap(p1, p2), FlatFormula::Cap(f1, f2)) | (FlatFormPat::FImp(p1, p2), FlatFormula::FImp(f1, f2)) => {
            match_flat_form(p1, f1, b) && match_flat_form(p2, f2, b)
        }
        _ => false,
    }
}

fn match_gen_form(p: &GenFormPat, f: &GeneralFormula, b: &mut Binding) -> bool {
    match (p, f) {
        (GenFormPat::Meta(m), _) => bind(b, m, Bound::GenF(f.clone())),
        (GenFormPat::Down(p), GeneralFormula::Down(a)) => match_flat_form(p, a, b),
        (GenFormPat::And(p1, p2), GeneralFormula::And(f1, f2))
        | (GenFormPat::Or(p1, p2), GeneralFormula::Or(f1, f2))
        | (GenFormPat::Imp(p1, p2), GeneralFormula::Imp(f1, f2)) => {
            match_gen_form(p1, f1, b) && match_gen_form(p2, f2, b)
        }
        _ => false,
    }
}

pub fn match_flat(p: &FlatPat, s: &FlatStructure, b: &mut Binding) -> bool {
    match (p, s) {
        (FlatPat::Meta(m), _) => bind(b, m, Bound::FlatS(s.clone())),
        (FlatPat::Phi, FlatStructure::Phi) => true,
        (FlatPat::Form(fp), FlatStructure::Fml(f)) => match_flat_form(fp, f, b),
        (FlatPat::Comma(p1, p2), FlatStructure::Comma(s1, s2)) | (FlatPat::Sup(p1, p2), FlatStructure::Sup(s1, s2)) => {
            match_flat(p1, s1, b) && match_flat(p2, s2, b)
        }
        (FlatPat::FOf(px), FlatStructure::FOf(x)) => match_gen(px, x, b),
        _ => false,
    }
}

pub fn match_gen(p: &GenPat, s: &GeneralStructure, b: &mut Binding) -> bool {
    match (p, s) {
        (GenPat::Meta(m), _) => bind(b, m, Bound::GenS(s.clone())),
        (GenPat::DownOf(pg), GeneralStructure::DownOf(g)) | (GenPat::FStarOf(pg), GeneralStructure::FStarOf(g)) => {
            match_flat(pg, g, b)
        }
        (GenPat::Form(fp), GeneralStructure::Fml(f)) => match_gen_form(fp, f, b),
        (GenPat::Semi(p1, p2), GeneralStructure::Semi(s1, s2)) | (GenPat::Gt(p1, p2), GeneralStructure::Gt(s1, s2)) => {
            match_gen(p1, s1, b) && match_gen(p2, s2, b)
        }
        _ => false,
    }
}

pub fn match_seq(p: &SeqPat, s: &Sequent, b: &mut Binding) -> bool {
    match (p, s) {
        (SeqPat::Flat(pa, ps), Sequent::Flat(a, s)) => match_flat(pa, a, b) && match_flat(ps, s, b),
        (SeqPat::General(pa, ps), Sequent::General(a, s)) => match_gen(pa, a, b) && match_gen(ps, s, b),
        _ => false,
    }
}

/// Metavariables of a pattern with the polarities (true = antecedent) they occur in.
pub fn metas(p: &SeqPat) -> BTreeMap<String, (MetaKind, bool, bool)> {
    let mut out = BTreeMap::new();
    fn note(out: &mut BTreeMap<String, (MetaKind, bool, bool)>, m: &str, ant: bool) {
        let kind = meta_kind(m).expect("validated at parse time");
        let e = out.entry(m.to_string()).or_insert((kind, false, false));
        if ant {
            e.1 = true;
        } else {
            e.2 = true;
        }
    }
    fn ff(p: &FlatFormPat, ant: bool, out: &mut BTreeMap<String, (MetaKind, bool, bool)>) {
        match p {
            FlatFormPat::Meta(m) | FlatFormPat::Atom(m) => note(out, m, ant),
            FlatFormPat::Zero => {}
            FlatFormPat::Cap(a, b) | FlatFormPat::FImp(a, b) => {
                ff(a, ant, out);
                ff(b, ant, out);
            }
        }
    }
    fn gf(p: &GenFormPat, ant: bool, out: &mut BTreeMap<String, (MetaKind, bool, bool)>) {
        match p {
            GenFormPat::Meta(m) => note(out, m, ant),
            GenFormPat::Down(a) => ff(a, ant, out),
            GenFormPat::And(a, b) | GenFormPat::Or(a, b) | GenFormPat::Imp(a, b) => {
                gf(a, ant, out);
                gf(b, ant, out);
            }
        }
    }
    fn fs(p: &FlatPat, ant: bool, out: &mut BTreeMap<String, (MetaKind, bool, bool)>) {
        match p {
            FlatPat::Meta(m) => note(out, m, ant),
            FlatPat::Phi => {}
            FlatPat::Form(f) => ff(f, ant, out),
            FlatPat::Comma(a, b) => {
                fs(a, ant, out);
                fs(b, ant, out);
            }
            FlatPat::Sup(a, b) => {
                fs(a, !ant, out);
                fs(b, ant, out);
            }
            FlatPat::FOf(x) => gs(x, ant, out),
        }
    }
    fn gs(p: &GenPat, ant: bool, out: &mut BTreeMap<String, (MetaKind, bool, bool)>) {
        match p {
            GenPat::Meta(m) => note(out, m, ant),
            GenPat::DownOf(g) | GenPat::FStarOf(g) => fs(g, ant, out),
            GenPat::Form(f) => gf(f, ant, out),
            GenPat::Semi(a, b) => {
                gs(a, ant, out);
                gs(b, ant, out);
            }
            GenPat::Gt(a, b) => {
                gs(a, !ant, out);
                gs(b, ant, out);
            }
        }
    }
    match p {
        SeqPat::Flat(a, s) => {
            fs(a, true, &mut out);
            fs(s, false, &mut out);
        }
        SeqPat::General(a, s) => {
            gs(a, true, &mut out);
            gs(s, false, &mut out);
        }
    }
    out
}

/// Formula patterns occurring as structure leaves, for the subterm lint.
pub fn formula_leaves(p: &SeqPat) -> Vec<FormPatRef<'_>> {
    fn fs<'a>(p: &'a FlatPat, out: &mut Vec<FormPatRef<'a>>) {
        match p {
            FlatPat::Meta(_) | FlatPat::Phi => {}
            FlatPat::Form(f) => out.push(FormPatRef::Flat(f)),
            FlatPat::Comma(a, b) | FlatPat::Sup(a, b) => {
                fs(a, out);
                fs(b, out);
            }
            FlatPat::FOf(x) => gs(x, out),
        }
    }
    fn gs<'a>(p: &'a GenPat, out: &mut Vec<FormPatRef<'a>>) {
        match p {
            GenPat::Meta(_) => {}
            GenPat::DownOf(g) | GenPat::FStarOf(g) => fs(g, out),
            GenPat::Form(f) => out.push(FormPatRef::General(f)),
            GenPat::Semi(a, b) | GenPat::Gt(a, b) => {
                gs(a, out);
                gs(b, out);
            }
        }
    }
    let mut out = Vec::new();
    match p {
        SeqPat::Flat(a, s) => {
            fs(a, &mut out);
            fs(s, &mut out);
        }
        SeqPat::General(a, s) => {
            gs(a, &mut out);
            gs(s, &mut out);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormPatRef<'a> {
    Flat(&'a FlatFormPat),
    General(&'a GenFormPat),
}

impl FormPatRef<'_> {
    /// Whether `self` occurs inside `other` (including `other` itself).
    pub fn is_subterm_of(&self, other: &FormPatRef<'_>) -> bool {
        fn in_flat(x: &FlatFormPat, y: &FlatFormPat) -> bool {
            x == y
                || match y {
                    FlatFormPat::Cap(a, b) | FlatFormPat::FImp(a, b) => in_flat(x, a) || in_flat(x, b),
                    _ => false,
                }
        }
        fn flat_in_gen(x: &FlatFormPat, y: &GenFormPat) -> bool {
            match y {
                GenFormPat::Meta(_) => false,
                GenFormPat::Down(a) => in_flat(x, a),
                GenFormPat::And(a, b) | GenFormPat::Or(a, b) | GenFormPat::Imp(a, b) => {
                    flat_in_gen(x, a) || flat_in_gen(x, b)
                }
            }
        }
        fn in_gen(x: &GenFormPat, y: &GenFormPat) -> bool {
            x == y
                || match y {
                    GenFormPat::And(a, b) | GenFormPat::Or(a, b) | GenFormPat::Imp(a, b) => in_gen(x, a) || in_gen(x, b),
                    _ => false,
                }
        }
        match (self, other) {
            (FormPatRef::Flat(x), FormPatRef::Flat(y)) => in_flat(x, y),
            (FormPatRef::Flat(x), FormPatRef::General(y)) => flat_in_gen(x, y),
            (FormPatRef::General(x), FormPatRef::General(y)) => in_gen(x, y),
            (FormPatRef::General(_), FormPatRef::Flat(_)) => false,
        }
    }
}

fn write_ff(f: &mut fmt::Formatter<'_>, p: &FlatFormPat, top: bool) -> fmt::Result {
    match p {
        FlatFormPat::Meta(m) | FlatFormPat::Atom(m) => f.write_str(m),
        FlatFormPat::Zero => f.write_str("0"),
        FlatFormPat::Cap(a, b) | FlatFormPat::FImp(a, b) => {
            let op = if matches!(p, FlatFormPat::Cap(..)) { " & " } else { " ~> " };
            if !top {
                f.write_str("(")?;
            }
            write_ff(f, a, false)?;
            f.write_str(op)?;
            write_ff(f, b, false)?;
            if !top {
                f.write_str(")")?;
            }
            Ok(())
        }
    }
}

fn write_gf(f: &mut fmt::Formatter<'_>, p: &GenFormPat, top: bool) -> fmt::Result {
    match p {
        GenFormPat::Meta(m) => f.write_str(m),
        GenFormPat::Down(a) => {
            f.write_str("dn(")?;
            write_ff(f, a, true)?;
            f.write_str(")")
        }
        GenFormPat::And(a, b) | GenFormPat::Or(a, b) | GenFormPat::Imp(a, b) => {
            let op = match p {
                GenFormPat::And(..) => " /\\ ",
                GenFormPat::Or(..) => " \\/ ",
                _ => " => ",
            };
            if !top {
                f.write_str("(")?;
            }
            write_gf(f, a, false)?;
            f.write_str(op)?;
            write_gf(f, b, false)?;
            if !top {
                f.write_str(")")?;
            }
            Ok(())
        }
    }
}

fn write_fs(f: &mut fmt::Formatter<'_>, p: &FlatPat, top: bool) -> fmt::Result {
    match p {
        FlatPat::Meta(m) => f.write_str(m),
        FlatPat::Phi => f.write_str("Ph"),
        FlatPat::Form(x) => write_ff(f, x, top),
        FlatPat::Comma(a, b) | FlatPat::Sup(a, b) => {
            let op = if matches!(p, FlatPat::Comma(..)) { ", " } else { " |> " };
            if !top {
                f.write_str("(")?;
            }
            write_fs(f, a, false)?;
            f.write_str(op)?;
            write_fs(f, b, false)?;
            if !top {
                f.write_str(")")?;
            }
            Ok(())
        }
        FlatPat::FOf(x) => {
            f.write_str("F(")?;
            write_gs(f, x, true)?;
            f.write_str(")")
        }
    }
}

fn write_gs(f: &mut fmt::Formatter<'_>, p: &GenPat, top: bool) -> fmt::Result {
    match p {
        GenPat::Meta(m) => f.write_str(m),
        GenPat::DownOf(g) | GenPat::FStarOf(g) => {
            f.write_str(if matches!(p, GenPat::DownOf(_)) { "Dn(" } else { "Fs(" })?;
            write_fs(f, g, true)?;
            f.write_str(")")
        }
        GenPat::Form(x) => write_gf(f, x, top),
        GenPat::Semi(a, b) | GenPat::Gt(a, b) => {
            let op = if matches!(p, GenPat::Semi(..)) { " ; " } else { " > " };
            if !top {
                f.write_str("(")?;
            }
            write_gs(f, a, false)?;
            f.write_str(op)?;
            write_gs(f, b, false)?;
            if !top {
                f.write_str(")")?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for SeqPat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeqPat::Flat(a, s) => {
                write_fs(f, a, true)?;
                f.write_str(" |- ")?;
                write_fs(f, s, true)
            }
            SeqPat::General(a, s) => {
                write_gs(f, a, true)?;
                f.write_str(" |- ")?;
                write_gs(f, s, true)
            }
        }
    }
}

fn inst_ff(p: &FlatFormPat, b: &Binding) -> Option<FlatFormula> {
    Some(match p {
        FlatFormPat::Meta(m) | FlatFormPat::Atom(m) => match b.get(m)? {
            Bound::FlatF(f) => f.clone(),
            _ => return None,
        },
        FlatFormPat::Zero => FlatFormula::Zero,
        FlatFormPat::Cap(x, y) => FlatFormula::cap(inst_ff(x, b)?, inst_ff(y, b)?),
        FlatFormPat::FImp(x, y) => FlatFormula::fimp(inst_ff(x, b)?, inst_ff(y, b)?),
    })
}

fn inst_gf(p: &GenFormPat, b: &Binding) -> Option<GeneralFormula> {
    Some(match p {
        GenFormPat::Meta(m) => match b.get(m)? {
            Bound::GenF(f) => f.clone(),
            _ => return None,
        },
        GenFormPat::Down(x) => GeneralFormula::Down(inst_ff(x, b)?),
        GenFormPat::And(x, y) => GeneralFormula::and(inst_gf(x, b)?, inst_gf(y, b)?),
        GenFormPat::Or(x, y) => GeneralFormula::or(inst_gf(x, b)?, inst_gf(y, b)?),
        GenFormPat::Imp(x, y) => GeneralFormula::imp(inst_gf(x, b)?, inst_gf(y, b)?),
    })
}

fn inst_fs(p: &FlatPat, b: &Binding) -> Option<FlatStructure> {
    Some(match p {
        FlatPat::Meta(m) => match b.get(m)? {
            Bound::FlatS(s) => s.clone(),
            Bound::FlatF(f) => FlatStructure::Fml(f.clone()),
            _ => return None,
        },
        FlatPat::Phi => FlatStructure::Phi,
        FlatPat::Form(f) => FlatStructure::Fml(inst_ff(f, b)?),
        FlatPat::Comma(x, y) => FlatStructure::comma(inst_fs(x, b)?, inst_fs(y, b)?),
        FlatPat::Sup(x, y) => FlatStructure::sup(inst_fs(x, b)?, inst_fs(y, b)?),
        FlatPat::FOf(x) => FlatStructure::f_of(inst_gs(x, b)?),
    })
}

fn inst_gs(p: &GenPat, b: &Binding) -> Option<GeneralStructure> {
    Some(match p {
        GenPat::Meta(m) => match b.get(m)? {
            Bound::GenS(s) => s.clone(),
            Bound::GenF(f) => GeneralStructure::Fml(f.clone()),
            _ => return None,
        },
        GenPat::DownOf(g) => GeneralStructure::down_of(inst_fs(g, b)?),
        GenPat::FStarOf(g) => GeneralStructure::fstar_of(inst_fs(g, b)?),
        GenPat::Form(f) => GeneralStructure::Fml(inst_gf(f, b)?),
        GenPat::Semi(x, y) => GeneralStructure::semi(inst_gs(x, b)?, inst_gs(y, b)?),
        GenPat::Gt(x, y) => GeneralStructure::gt(inst_gs(x, b)?, inst_gs(y, b)?),
    })
}

/// Substitute a binding into a pattern; `None` if a metavariable is unbound or
/// bound to something of the wrong kind.
pub fn instantiate(p: &SeqPat, b: &Binding) -> Option<Sequent> {
    Some(match p {
        SeqPat::Flat(a, s) => Sequent::Flat(inst_fs(a, b)?, inst_fs(s, b)?),
        SeqPat::General(a, s) => Sequent::General(inst_gs(a, b)?, inst_gs(s, b)?),
    })
}
