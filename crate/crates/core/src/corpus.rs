//! Bundled proof scripts: derivations exercising every rule family, and
//! before/after pairs for the displayed cut reductions.

use crate::syntax::{parse_script, Derivation, ParseError};

pub struct Entry {
    pub name: &'static str,
    pub source: &'static str,
}

pub struct ReductionPair {
    pub name: &'static str,
    pub before: &'static str,
    pub after: &'static str,
}

macro_rules! entry {
    ($name:literal) => {
        Entry { name: $name, source: include_str!(concat!("../corpus/", $name, ".proof")) }
    };
}

macro_rules! pair {
    ($name:literal) => {
        ReductionPair {
            name: $name,
            before: include_str!(concat!("../corpus/reductions/", $name, "_before.proof")),
            after: include_str!(concat!("../corpus/reductions/", $name, "_after.proof")),
        }
    };
}

pub const DERIVATIONS: &[Entry] = &[
    entry!("translation_atom"),
    entry!("translation_meet_lr"),
    entry!("translation_meet_rl"),
    entry!("translation_fimp_lr"),
    entry!("translation_fimp_rl"),
    entry!("double_negation"),
    entry!("split"),
];

pub const REDUCTIONS: &[ReductionPair] = &[pair!("constant"), pair!("variable"), pair!("cap"), pair!("down")];

impl Entry {
    pub fn parse(&self) -> Result<Derivation, ParseError> {
        parse_script(self.source)
    }
}

pub fn find(name: &str) -> Option<&'static Entry> {
    DERIVATIONS.iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{audit_soundness, check_derivation};
    use crate::cutelim::{find_cuts, find_principal_cuts, reduce_principal_cut};

    #[test]
    fn corpus_checks() {
        for e in DERIVATIONS {
            let d = e.parse().unwrap_or_else(|err| panic!("{}: {err}", e.name));
            if let Err(err) = check_derivation(&d) {
                panic!("{} fails at {:?}: {} ({})", e.name, err.path, err.rule, err.reason);
            }
            assert!(find_cuts(&d).is_empty(), "{}", e.name);
        }
    }

    #[test]
    fn corpus_audits_clean() {
        for e in DERIVATIONS {
            let d = e.parse().unwrap();
            for nvars in [1, 2] {
                let r = audit_soundness(&d, nvars, 2000, 1).unwrap();
                assert!(r.ok(), "{} at |V|={nvars}: {}", e.name, r.render());
            }
        }
    }

    #[test]
    fn reduction_pairs() {
        for pr in REDUCTIONS {
            let before = parse_script(pr.before).unwrap();
            let after = parse_script(pr.after).unwrap();
            check_derivation(&before).unwrap_or_else(|e| panic!("{} before: {e:?}", pr.name));
            check_derivation(&after).unwrap_or_else(|e| panic!("{} after: {e:?}", pr.name));
            let sites = find_principal_cuts(&before);
            assert_eq!(sites.len(), 1, "{}", pr.name);
            let (got, _) = reduce_principal_cut(&before, &sites[0]).unwrap();
            assert_eq!(got, after, "{}", pr.name);
        }
    }
}
