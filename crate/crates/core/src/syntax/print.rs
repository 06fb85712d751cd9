//! Precedence-aware printers. Output reparses to the same tree.

use std::fmt::{self, Display, Formatter};

use super::ast::*;

// Binding levels, loosest first; matches the parser.
const SUP: u8 = 1;
const COMMA: u8 = 2;
const IMP: u8 = 3;
const OR: u8 = 4;
const AND: u8 = 5;
const UNARY: u8 = 6;

fn wrap(f: &mut Formatter<'_>, level: u8, min: u8, body: impl FnOnce(&mut Formatter<'_>) -> fmt::Result) -> fmt::Result {
    if level < min {
        f.write_str("(")?;
        body(f)?;
        f.write_str(")")
    } else {
        body(f)
    }
}

fn inq(f: &mut Formatter<'_>, a: &InqFormula, min: u8) -> fmt::Result {
    match a {
        InqFormula::Var(v) => f.write_str(v),
        InqFormula::Zero => f.write_str("0"),
        InqFormula::Imp(x, y) if **y == InqFormula::Zero => wrap(f, UNARY, min, |f| {
            f.write_str("~")?;
            inq(f, x, UNARY)
        }),
        InqFormula::And(x, y) => wrap(f, AND, min, |f| {
            inq(f, x, AND)?;
            f.write_str(" /\\ ")?;
            inq(f, y, AND + 1)
        }),
        InqFormula::Or(x, y) => wrap(f, OR, min, |f| {
            inq(f, x, OR)?;
            f.write_str(" \\/ ")?;
            inq(f, y, OR + 1)
        }),
        InqFormula::Imp(x, y) => wrap(f, IMP, min, |f| {
            inq(f, x, IMP + 1)?;
            f.write_str(" -> ")?;
            inq(f, y, IMP)
        }),
    }
}

fn flat(f: &mut Formatter<'_>, a: &FlatFormula, min: u8) -> fmt::Result {
    match a {
        FlatFormula::Var(v) => f.write_str(v),
        FlatFormula::Zero => f.write_str("0"),
        FlatFormula::FImp(x, y) if **y == FlatFormula::Zero => wrap(f, UNARY, min, |f| {
            f.write_str("~")?;
            flat(f, x, UNARY)
        }),
        FlatFormula::Cap(x, y) => wrap(f, AND, min, |f| {
            flat(f, x, AND)?;
            f.write_str(" & ")?;
            flat(f, y, AND + 1)
        }),
        FlatFormula::FImp(x, y) => wrap(f, IMP, min, |f| {
            flat(f, x, IMP + 1)?;
            f.write_str(" ~> ")?;
            flat(f, y, IMP)
        }),
    }
}

fn general(f: &mut Formatter<'_>, a: &GeneralFormula, min: u8) -> fmt::Result {
    match a {
        GeneralFormula::Down(x) => {
            f.write_str("dn(")?;
            flat(f, x, 0)?;
            f.write_str(")")
        }
        GeneralFormula::Imp(x, y) if **y == GeneralFormula::Down(FlatFormula::Zero) => wrap(f, UNARY, min, |f| {
            f.write_str("neg ")?;
            general(f, x, UNARY)
        }),
        GeneralFormula::And(x, y) => wrap(f, AND, min, |f| {
            general(f, x, AND)?;
            f.write_str(" /\\ ")?;
            general(f, y, AND + 1)
        }),
        GeneralFormula::Or(x, y) => wrap(f, OR, min, |f| {
            general(f, x, OR)?;
            f.write_str(" \\/ ")?;
            general(f, y, OR + 1)
        }),
        GeneralFormula::Imp(x, y) => wrap(f, IMP, min, |f| {
            general(f, x, IMP + 1)?;
            f.write_str(" => ")?;
            general(f, y, IMP)
        }),
    }
}

fn flat_s(f: &mut Formatter<'_>, s: &FlatStructure, min: u8) -> fmt::Result {
    match s {
        FlatStructure::Phi => f.write_str("Ph"),
        FlatStructure::Fml(a) => flat(f, a, min),
        FlatStructure::Comma(x, y) => wrap(f, COMMA, min, |f| {
            flat_s(f, x, COMMA)?;
            f.write_str(", ")?;
            flat_s(f, y, COMMA + 1)
        }),
        FlatStructure::Sup(x, y) => wrap(f, SUP, min, |f| {
            flat_s(f, x, SUP + 1)?;
            f.write_str(" |> ")?;
            flat_s(f, y, SUP)
        }),
        FlatStructure::FOf(x) => {
            f.write_str("F(")?;
            gen_s(f, x, 0)?;
            f.write_str(")")
        }
    }
}

fn gen_s(f: &mut Formatter<'_>, s: &GeneralStructure, min: u8) -> fmt::Result {
    match s {
        GeneralStructure::DownOf(g) => {
            f.write_str("Dn(")?;
            flat_s(f, g, 0)?;
            f.write_str(")")
        }
        GeneralStructure::FStarOf(g) => {
            f.write_str("Fs(")?;
            flat_s(f, g, 0)?;
            f.write_str(")")
        }
        GeneralStructure::Fml(a) => general(f, a, min),
        GeneralStructure::Semi(x, y) => wrap(f, COMMA, min, |f| {
            gen_s(f, x, COMMA)?;
            f.write_str(" ; ")?;
            gen_s(f, y, COMMA + 1)
        }),
        GeneralStructure::Gt(x, y) => wrap(f, SUP, min, |f| {
            gen_s(f, x, SUP + 1)?;
            f.write_str(" > ")?;
            gen_s(f, y, SUP)
        }),
    }
}

impl Display for InqFormula {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        inq(f, self, 0)
    }
}

impl Display for FlatFormula {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        flat(f, self, 0)
    }
}

impl Display for GeneralFormula {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        general(f, self, 0)
    }
}

impl Display for FlatStructure {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        flat_s(f, self, 0)
    }
}

impl Display for GeneralStructure {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        gen_s(f, self, 0)
    }
}

impl Sequent {
    /// Antecedent and succedent as separate strings.
    pub fn sides(&self) -> (String, String) {
        match self {
            Sequent::Flat(a, s) => (a.to_string(), s.to_string()),
            Sequent::General(a, s) => (a.to_string(), s.to_string()),
        }
    }
}

impl Display for Sequent {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        let (a, s) = self.sides();
        write!(f, "{a} |- {s}")
    }
}

impl Display for Side {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Ant => "L",
            Side::Suc => "R",
        })
    }
}

impl Display for OccPath {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.side)?;
        for s in &self.steps {
            write!(f, ".{s}")?;
        }
        Ok(())
    }
}
