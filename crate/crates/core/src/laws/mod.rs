//! Lawfulness: the two diagram equations, the concrete lens and monadic lens
//! laws, and exhaustive suites relating them.

mod concrete;
mod diagrammatic;
mod suites;

pub use concrete::{lens_laws, mlens_laws};
pub use diagrammatic::{build_outside, build_once, build_twice, cap_diagram, cap_side, is_lawful};
pub use suites::{
    enumerate_lenses, identity_monad_agreement, iso_implies_lawful_suite, lawful_equivalence_suite,
    lawful_equivalence_shapes, lawful_equivalence_suite_with, mlens_composition_closure_suite, ShapeCount, SuiteReport,
};

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// Neither proved nor refuted within the search bounds.
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Undecided => "undecided",
        })
    }
}

#[derive(Clone, Debug)]
pub struct LawCheck {
    pub law: String,
    pub verdict: Verdict,
    /// Present exactly when the verdict is `Fail`.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct LawReport {
    pub subject: String,
    pub checks: Vec<LawCheck>,
    pub truncation_notes: Vec<String>,
}

impl LawReport {
    fn new(subject: impl Into<String>) -> LawReport {
        LawReport { subject: subject.into(), ..Default::default() }
    }

    fn push(&mut self, law: &str, witness: Option<String>) {
        let verdict = if witness.is_some() { Verdict::Fail } else { Verdict::Pass };
        self.checks.push(LawCheck { law: law.to_string(), verdict, witness });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.verdict == Verdict::Pass)
    }

    pub fn any_fail(&self) -> bool {
        self.checks.iter().any(|c| c.verdict == Verdict::Fail)
    }

    pub fn verdict(&self, law: &str) -> Option<Verdict> {
        self.checks.iter().find(|c| c.law == law).map(|c| c.verdict)
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            writeln!(f, "  {:<10} {}", c.law, c.verdict)?;
            if let Some(w) = &c.witness {
                for line in w.lines() {
                    writeln!(f, "    {line}")?;
                }
            }
        }
        for n in &self.truncation_notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
