//! Bundled self-checks at two levels.
//!
//! `fast` runs the algebra laws at one variable, the rule-table audit, the
//! mutation audit, the corpus replay and the printed cut reductions. `full`
//! adds the algebra laws at two variables, sampled KP, the corpus audit at two
//! variables, the depth-3 population suites, the multi-type axioms and random
//! cut reductions.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::laws::{self, LawCheck};
use crate::algebra::all_downsets;
use crate::corpus;
use crate::population::Population;
use crate::suites::{self, SuiteError};
use crate::teams::Context;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Fast,
    Full,
}

#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub name: String,
    pub checks: Vec<LawCheck>,
    pub seconds: f64,
}

impl Section {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(LawCheck::passed)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub level: Level,
    pub sections: Vec<Section>,
    pub corpus_checked: usize,
    pub corpus_total: usize,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.sections.iter().all(Section::passed)
    }

    pub fn first_failure(&self) -> Option<(&Section, &LawCheck)> {
        self.sections.iter().find_map(|s| s.checks.iter().find(|c| !c.passed()).map(|c| (s, c)))
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            out.push_str(&format!("[{}] {} ({:.2}s)\n", if s.passed() { "ok" } else { "FAIL" }, s.name, s.seconds));
            for c in &s.checks {
                let mark = if c.passed() { "ok" } else { "FAIL" };
                out.push_str(&format!("  {mark:4} {}: {} checked, {} failed\n", c.name, c.checked, c.failures));
                if let Some(f) = &c.first_failure {
                    out.push_str(&format!("       first failure: {f}\n"));
                }
            }
        }
        out.push_str(&format!("{}/{} bundled derivations check\n", self.corpus_checked, self.corpus_total));
        out.push_str(if self.ok() { "selftest passed\n" } else { "selftest FAILED\n" });
        out
    }
}

fn section(
    name: &str,
    sections: &mut Vec<Section>,
    run: impl FnOnce() -> Result<Vec<LawCheck>, SuiteError>,
) -> Result<(), SuiteError> {
    let start = Instant::now();
    let checks = run()?;
    sections.push(Section { name: name.to_string(), checks, seconds: start.elapsed().as_secs_f64() });
    Ok(())
}

pub fn run(level: Level) -> Result<Report, SuiteError> {
    let mut sections = Vec::new();
    let v1 = Context::new(&["p"])?;
    let v2 = Context::new(&["p", "q"])?;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);

    section("algebra laws, |V|=1", &mut sections, || {
        let mut checks = laws::all_exhaustive(&v1)?;
        checks.push(laws::kp_downset_triples(&v1, &all_downsets(&v1)?));
        Ok(checks)
    })?;
    section("rule soundness, |V|=1", &mut sections, || suites::rule_soundness(1))?;
    let audit_sizes: &[usize] = if level == Level::Full { &[1, 2] } else { &[1] };
    section("corpus replay", &mut sections, || Ok(suites::corpus_replay(audit_sizes)))?;
    let random_cuts = if level == Level::Full { 100 } else { 0 };
    section("cut reduction", &mut sections, || {
        let mut checks = suites::cut_reduction(random_cuts, &mut rng);
        checks.retain(|c| c.checked > 0);
        Ok(checks)
    })?;

    if level == Level::Full {
        section("algebra laws, |V|=2", &mut sections, || {
            let mut checks = laws::all_exhaustive(&v2)?;
            let ds = all_downsets(&v2)?;
            checks.push(laws::kp_sampled(&v2, &ds, 100_000, &mut ChaCha8Rng::seed_from_u64(3)));
            Ok(checks)
        })?;
        let pop = Population::build(&v2, 3)?;
        section("population semantics, depth 3, |V|=2", &mut sections, || {
            let mut checks = vec![suites::semantics(&pop)?];
            checks.extend(suites::flatness(&pop)?);
            checks.push(suites::adequacy(&pop));
            checks.push(suites::disjunction_property(&pop)?);
            Ok(checks)
        })?;
        section("Hilbert axioms", &mut sections, || {
            let mut checks = suites::hilbert_classical(&pop)?;
            checks.extend(suites::multi_type_axioms(&v2, 1000, &mut ChaCha8Rng::seed_from_u64(5))?);
            Ok(checks)
        })?;
    }

    let corpus_checked = corpus::DERIVATIONS
        .iter()
        .filter(|e| e.parse().ok().is_some_and(|d| crate::calculus::check_derivation(&d).is_ok()))
        .count();
    Ok(Report { level, sections, corpus_checked, corpus_total: corpus::DERIVATIONS.len() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_passes() {
        let r = run(Level::Fast).unwrap();
        assert!(r.ok(), "{}", r.render());
        assert_eq!(r.corpus_checked, corpus::DERIVATIONS.len());
        assert!(r.render().contains("7/7 bundled derivations check"));
    }
}
