//! The rule table.

use std::sync::LazyLock;

use super::pattern::{parse_seq_pat, SeqPat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleKind {
    Schema,
    /// The Flat cut: `Γ ⊢ α` and `(Σ ⊢ Δ)[α]^pre` give `(Σ ⊢ Δ)[Γ/α]^pre`.
    SurgicalCut,
}

#[derive(Clone, Debug)]
pub struct RuleSchema {
    /// Unique identifier, e.g. `W L flat`.
    pub name: String,
    /// The label scripts use; several schemas may share one.
    pub label: String,
    pub premises: Vec<SeqPat>,
    pub conclusion: SeqPat,
    /// Double-line rule: usable top-down and bottom-up.
    pub bidirectional: bool,
    /// Display postulate added on top of the printed rule set.
    pub extension: bool,
    pub kind: RuleKind,
}

impl RuleSchema {
    pub fn new(name: &str, label: &str, premises: &[&str], conclusion: &str) -> RuleSchema {
        let parse = |s: &str| parse_seq_pat(s).unwrap_or_else(|e| panic!("bad pattern '{s}' in {name}: {e}"));
        RuleSchema {
            name: name.to_string(),
            label: label.to_string(),
            premises: premises.iter().map(|p| parse(p)).collect(),
            conclusion: parse(conclusion),
            bidirectional: false,
            extension: false,
            kind: RuleKind::Schema,
        }
    }

    fn double(mut self) -> Self {
        self.bidirectional = true;
        self
    }

    fn ext(mut self) -> Self {
        self.extension = true;
        self
    }

    fn surgical(mut self) -> Self {
        self.kind = RuleKind::SurgicalCut;
        self
    }

    pub fn is_axiom(&self) -> bool {
        self.premises.is_empty()
    }

    /// `premises / conclusion` on one line.
    pub fn display(&self) -> String {
        let prem: Vec<String> = self.premises.iter().map(|p| p.to_string()).collect();
        let bar = if self.bidirectional { " // " } else { " / " };
        format!("{}{}{}", prem.join("   "), bar, self.conclusion)
    }
}

static TABLE: LazyLock<Vec<RuleSchema>> = LazyLock::new(build);

fn build() -> Vec<RuleSchema> {
    let r = RuleSchema::new;
    vec![
        // Cut
        r("Cut flat", "Cut", &["G |- a", "a |- D"], "G |- D").surgical(),
        r("Cut general", "Cut", &["X |- A", "A |- Y"], "X |- Y"),
        // Structural, Flat
        r("Phi L", "Phi", &["G |- D"], "Ph, G |- D").double(),
        r("Phi R", "Phi", &["G |- D"], "G |- Ph, D").double(),
        r("W L flat", "W", &["G |- D"], "G, S |- D"),
        r("W R flat", "W", &["G |- D"], "G |- D, S"),
        r("C L flat", "C", &["G, G |- D"], "G |- D"),
        r("C R flat", "C", &["G |- D, D"], "G |- D"),
        r("E L flat", "E", &["G, D |- S"], "D, G |- S"),
        r("E R flat", "E", &["G |- D, S"], "G |- S, D"),
        r("A L flat", "A", &["G, (D, S) |- P"], "(G, D), S |- P"),
        r("A R flat", "A", &["G |- (D, S), P"], "G |- D, (S, P)"),
        r("G L flat", "G", &["(G |> D), S |- P"], "G |> (D, S) |- P"),
        r("G R flat", "G", &["P |- (G |> D), S"], "P |- G |> (D, S)"),
        r("Id", "Id", &[], "p |- p"),
        r("CG", "CG", &["P |- G |> (D, S)"], "P |- (G |> D), S"),
        // Structural, General
        r("DnPhi L", "DnPhi", &["X |- Y"], "Dn(Ph) ; X |- Y").double(),
        r("DnPhi R", "DnPhi", &["X |- Y"], "X |- Dn(Ph) ; Y").double(),
        r("W L general", "W", &["X |- Y"], "X ; Z |- Y"),
        r("W R general", "W", &["X |- Y"], "X |- Y ; Z"),
        r("C L general", "C", &["X ; X |- Y"], "X |- Y"),
        r("C R general", "C", &["X |- Y ; Y"], "X |- Y"),
        r("E L general", "E", &["X ; Y |- Z"], "Y ; X |- Z"),
        r("E R general", "E", &["X |- Y ; Z"], "X |- Z ; Y"),
        r("A L general", "A", &["X ; (Y ; Z) |- W"], "(X ; Y) ; Z |- W"),
        r("A R general", "A", &["X |- (Y ; Z) ; W"], "X |- Y ; (Z ; W)"),
        r("G L general", "G", &["(X > Y) ; Z |- W"], "X > (Y ; Z) |- W"),
        r("G R general", "G", &["W |- (X > Y) ; Z"], "W |- X > (Y ; Z)"),
        // Interaction
        r("bal", "bal", &["G |- D"], "Fs(G) |- Dn(D)"),
        r("d mon", "d mon", &["G |- D"], "Dn(G) |- Dn(D)"),
        r("f mon", "f mon", &["X |- Y"], "F(X) |- F(Y)"),
        r("f adj", "f adj", &["Fs(G) |- X"], "G |- F(X)").double(),
        r("d adj", "d adj", &["F(X) |- G"], "X |- Dn(G)").double(),
        r("d-f elim", "d-f elim", &["Dn(F(X)) |- Y"], "X |- Y"),
        r("d dis", "d dis", &["X |- Dn(G |> D)"], "X |- Dn(G) > Dn(D)").double(),
        r("f dis", "f dis", &["F(X), F(Y) |- S"], "F(X ; Y) |- S").double(),
        r("KP", "KP", &["X |- Dn(G) > (Y ; Z)"], "X |- (Dn(G) > Y) ; (Dn(G) > Z)"),
        // Introduction, Flat
        r("0L", "0L", &[], "0 |- Ph"),
        r("0R", "0R", &["G |- Ph"], "G |- 0"),
        r("capL", "capL", &["a, b |- G"], "a & b |- G"),
        r("capR", "capR", &["G |- a", "D |- b"], "G, D |- a & b"),
        r("fimpL", "fimpL", &["G |- a", "b |- D"], "a ~> b |- G |> D"),
        r("fimpR", "fimpR", &["G |- a |> b"], "G |- a ~> b"),
        // Introduction, General
        r("orL", "orL", &["A |- X", "B |- Y"], "A \\/ B |- X ; Y"),
        r("orR", "orR", &["Z |- A ; B"], "Z |- A \\/ B"),
        r("andL", "andL", &["A ; B |- Z"], "A /\\ B |- Z"),
        r("andR", "andR", &["X |- A", "Y |- B"], "X ; Y |- A /\\ B"),
        r("impL", "impL", &["X |- A", "B |- Y"], "A => B |- X > Y"),
        r("impR", "impR", &["Z |- A > B"], "Z |- A => B"),
        r("dnL", "dnL", &["Dn(a) |- X"], "dn(a) |- X"),
        r("dnR", "dnR", &["X |- Dn(a)"], "X |- dn(a)"),
        // Residuation (display postulates)
        r("res L flat", "res", &["G, D |- S"], "D |- G |> S").double().ext(),
        r("res R flat", "res", &["G |- D, S"], "D |> G |- S").double().ext(),
        r("res L general", "res", &["X ; Y |- Z"], "Y |- X > Z").double().ext(),
        r("res R general", "res", &["X |- Y ; Z"], "Y > X |- Z").double().ext(),
    ]
}

pub fn rule_table() -> &'static [RuleSchema] {
    &TABLE
}

/// All schemas carrying a script label.
pub fn lookup(label: &str) -> Vec<&'static RuleSchema> {
    TABLE.iter().filter(|r| r.label == label).collect()
}

pub fn by_name(name: &str) -> Option<&'static RuleSchema> {
    TABLE.iter().find(|r| r.name == name)
}

pub fn labels() -> Vec<&'static str> {
    let mut out: Vec<&str> = Vec::new();
    for r in TABLE.iter() {
        if !out.contains(&r.label.as_str()) {
            out.push(&r.label);
        }
    }
    out
}

/// Instances of the surgical cut with the hole in representative positions,
/// used by the schema audit.
pub fn surgical_cut_contexts() -> Vec<RuleSchema> {
    let r = RuleSchema::new;
    vec![
        r("Cut flat [displayed]", "Cut", &["G |- a", "a |- D"], "G |- D"),
        r("Cut flat [comma]", "Cut", &["G |- a", "a, S |- D"], "G, S |- D"),
        r("Cut flat [sup second]", "Cut", &["G |- a", "S |> a |- D"], "S |> G |- D"),
        r("Cut flat [succ sup first]", "Cut", &["G |- a", "S |- a |> D"], "S |- G |> D"),
        r("Cut flat [dn]", "Cut", &["G |- a", "Dn(a) |- Y"], "Dn(G) |- Y"),
        r("Cut flat [fstar]", "Cut", &["G |- a", "Fs(a) ; Z |- Y"], "Fs(G) ; Z |- Y"),
        r("Cut flat [succ dn sup]", "Cut", &["G |- a", "X |- Dn(a |> D)"], "X |- Dn(G |> D)"),
        r("Cut flat [gt second]", "Cut", &["G |- a", "Z > Dn(a) |- Y"], "Z > Dn(G) |- Y"),
        r("Cut flat [F]", "Cut", &["G |- a", "F(Dn(a)) |- D"], "F(Dn(G)) |- D"),
    ]
}

/// Deliberately unsound variants of rules, for checking that the audit bites.
pub fn mutations() -> Vec<RuleSchema> {
    let r = RuleSchema::new;
    vec![
        r("swap general", "mut", &["X |- Y"], "Y |- X"),
        r("swap flat", "mut", &["G |- D"], "D |- G"),
        r("W L reversed", "mut", &["G, S |- D"], "G |- D"),
        r("d-f elim reversed", "mut", &["X |- Y"], "Dn(F(X)) |- Y"),
        r("KP without Dn", "mut", &["X |- W > (Y ; Z)"], "X |- (W > Y) ; (W > Z)"),
        r("f dis one-sided", "mut", &["F(X ; Y) |- S"], "F(X) |- S"),
        r("capR one premise", "mut", &["G |- a"], "G |- a & b"),
        r("fimpL roles swapped", "mut", &["G |- b", "a |- D"], "a ~> b |- G |> D"),
        r("res R wrong side", "mut", &["G |- D, S"], "G |> D |- S"),
        r("andR one premise", "mut", &["Z |- A"], "Z |- A /\\ B"),
    ]
}
