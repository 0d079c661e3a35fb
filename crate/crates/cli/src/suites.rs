//! `suite NAME`: the exhaustive checks, runnable from the command line.

use std::fmt::Write as _;

use opticforge::diagram::{compile, equation_suite, representation_roundtrip};
use opticforge::fincat::{bounds, Monad, Obj};
use opticforge::laws::{
    is_lawful, iso_implies_lawful_suite, lawful_equivalence_suite, mlens_composition_closure_suite, SuiteReport,
};
use opticforge::optic::{count_classes, Flavor};
use opticforge::tambara::coherence::coherence_suite;
use opticforge::tambara::ff::arrows_ff;
use opticforge::tambara::{ElemOpts, Universe};
use opticforge::Error;

use crate::commands::{describe_expect, expectation, short, Outcome};
use crate::error::{CliError, CliResult, EXIT_PASS, EXIT_VERIFY};
use crate::workspace::Workspace;
use crate::CORPUS;

pub const SUITES: &[&str] = &[
    "lawful_equivalence",
    "iso_implies_lawful",
    "mlens_closure",
    "snake",
    "sliding",
    "coherence",
    "representation_roundtrip",
    "arrows_ff",
    "universe_stability",
];

/// Pairs checked per shape for the state monad before sampling kicks in.
const STATE_PAIRS: u64 = 2000;
const SEED: u64 = 7;

pub fn cmd_suite(name: &str, card: Option<usize>) -> CliResult<Outcome> {
    let mut out = String::new();
    let pass = match name {
        "lawful_equivalence" => report(&mut out, lawful_equivalence_suite(card.unwrap_or(2), &Universe::default())?),
        "iso_implies_lawful" => report(&mut out, iso_implies_lawful_suite(card.unwrap_or(2), &Universe::default())?),
        "mlens_closure" => {
            let card = card.unwrap_or(2);
            let maybe = mlens_composition_closure_suite(&Monad::maybe("Maybe"), card, u64::MAX, SEED)?;
            let state = Monad::state("State", Obj::skeletal(2)?)?;
            let state = mlens_composition_closure_suite(&state, card, STATE_PAIRS, SEED)?;
            report(&mut out, maybe) & report(&mut out, state)
        }
        "snake" | "sliding" => {
            let u = Universe::cards(1, card.unwrap_or(4))?;
            let names: &[&str] = if name == "snake" { &["snake1", "snake2"] } else { &["slide_cap", "slide_cup"] };
            report(&mut out, equation_suite(&format!("{name} equations (pointwise)"), names, &u, &ElemOpts::default())?)
        }
        "coherence" => {
            let u = Universe::default();
            let objs = [Obj::unit(), Obj::skeletal(2)?];
            let mut pass = true;
            for r in coherence_suite(&u, &objs, card.unwrap_or(2))? {
                pass &= r.passed();
                write!(out, "{r}").ok();
            }
            writeln!(out, "universe {}", u.describe()).ok();
            pass
        }
        "representation_roundtrip" => report(&mut out, representation_roundtrip(card.unwrap_or(2))?),
        "arrows_ff" => arrows(&mut out, card.unwrap_or(2))?,
        "universe_stability" => stability(&mut out)?,
        _ => return Err(CliError::Usage(format!("unknown suite `{name}`; expected one of {}", SUITES.join(", ")))),
    };
    Ok(Outcome { code: if pass { EXIT_PASS } else { EXIT_VERIFY }, text: out })
}

fn report(out: &mut String, rep: SuiteReport) -> bool {
    write!(out, "{rep}").ok();
    rep.passed()
}

fn arrows(out: &mut String, card: usize) -> CliResult<bool> {
    let u = Universe::default();
    let x = Obj::skeletal(card)?;
    let i = Obj::unit();
    let rep = arrows_ff(&x, &x, &u, card.min(2))?;
    let homs = x.card().pow(x.card() as u32);
    let classes = count_classes(&x, &i, &x, &i, &Flavor::Cartesian, card)?;
    write!(out, "{rep}").ok();
    writeln!(out, "class count {} = |C({x},{x})| = {homs}", rep.classes()).ok();
    writeln!(out, "optic classes <{x},I> -> <{x},I>: {classes}").ok();
    writeln!(out, "universe {}", u.describe()).ok();
    Ok(rep.passed() && rep.classes() == homs && classes == homs)
}

/// Every verdict a workspace produces in `u`: its expectations, the equality
/// of each pair of compilable diagrams with matching boundaries, and the
/// lawfulness of each optic.
pub fn verdicts(ws: &Workspace, u: &Universe) -> CliResult<Vec<(String, String)>> {
    let mut out = Vec::new();
    for e in &ws.expects {
        let (_, v) = expectation(ws, &e.expect, u)?;
        out.push((describe_expect(&e.expect), v));
    }
    let mut cells = Vec::new();
    for nd in &ws.diagrams {
        match compile(&nd.diagram) {
            Ok(c) => cells.push((nd, c)),
            Err(Error::Abstract(_)) => {}
            Err(e) => return Err(CliError::at(nd.line, e)),
        }
    }
    for (i, (a, ca)) in cells.iter().enumerate() {
        for (b, cb) in &cells[i + 1..] {
            if ca.src == cb.src && ca.tgt == cb.tgt {
                let v = opticforge::diagram::equal_diagrams(&a.diagram, &b.diagram, u, &ElemOpts::default())?;
                out.push((format!("{} vs {}", a.name, b.name), short(&v).to_string()));
            }
        }
    }
    for (name, o) in &ws.env.optics {
        let r = is_lawful(o, u)?;
        let v = if r.all_pass() { "lawful" } else if r.any_fail() { "unlawful" } else { "undecided" };
        out.push((format!("lawful {name}"), v.to_string()));
    }
    Ok(out)
}

/// The extra object of cardinality `n` added to a universe.
pub fn extra_object(n: usize) -> CliResult<Obj> {
    let atoms: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = atoms.iter().map(String::as_str).collect();
    Ok(Obj::atoms(&format!("X{n}"), &refs)?)
}

/// Verdicts of every corpus file in its own universe and with one extra
/// object of each cardinality 1 to 4.
fn stability(out: &mut String) -> CliResult<bool> {
    let mut pass = true;
    let mut compared = 0;
    for (file, text) in CORPUS {
        let ws = Workspace::parse(text)?;
        bounds::with_bounds(ws.bounds(), || -> CliResult<()> {
            let base = ws.universe()?;
            let want = verdicts(&ws, &base)?;
            for n in 1..=4 {
                let u = base.with(&[extra_object(n)?]);
                let got = verdicts(&ws, &u)?;
                for ((what, a), (_, b)) in want.iter().zip(&got) {
                    compared += 1;
                    if a != b {
                        pass = false;
                        writeln!(out, "FAIL: {file}: {what}: {a} in {}, {b} in {}", base.describe(), u.describe()).ok();
                    }
                }
            }
            writeln!(out, "{file}: {} verdicts, universe {}", want.len(), base.describe()).ok();
            Ok(())
        })?;
    }
    writeln!(out, "{}: {compared} verdict comparisons", if pass { "pass" } else { "FAIL" }).ok();
    Ok(pass)
}
