//! The subcommands. Each returns the text to print and an exit code; errors
//! are mapped to exit codes by the caller.

use std::fmt::Write as _;
use std::path::Path;

use opticforge::diagram::{compile, equal_diagrams, eval_optic, typecheck, Equality};
use opticforge::fincat::{bounds, enumerate_homs, Cat, Obj};
use opticforge::laws::{is_lawful, lens_laws, mlens_laws, LawReport};
use opticforge::optic::{count_classes, to_lens, to_mlens, zigzag_equal, Flavor, Optic, ZigzagVerdict};
use opticforge::diagram::compile::search_for;
use opticforge::tambara::{build_l, build_r, check_2cell, check_tambara, ElemOpts, Universe};
use opticforge::Error;

use crate::error::{CliError, CliResult, EXIT_PASS, EXIT_VERIFY};
use crate::render::{render, Format, RenderSpec};
use crate::workspace::{Expect, Hom, Workspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub text: String,
}

impl Outcome {
    fn new(pass: bool, text: String) -> Outcome {
        Outcome { code: if pass { EXIT_PASS } else { EXIT_VERIFY }, text }
    }
}

pub fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), msg: e.to_string() })
}

pub fn load(path: &Path) -> CliResult<Workspace> {
    Workspace::parse(&read(path)?)
}

/// Residuals used for class counts when none is given: every cartesian class
/// has a representative with residual `x`.
pub fn default_count_bound(h: &Hom) -> usize {
    h.x.card().max(1)
}

/// Elements visited per cell when checking naturality in `check`.
const CHECK_ELEMENTS: u64 = 1 << 12;

/// Budgets for cells with effectful wires, where each square runs a bounded
/// zigzag search.
const CHECK_EFFECT_ELEMENTS: u64 = 64;
const CHECK_EFFECT_STATES: usize = 500;

/// Largest cardinality of the objects `check` probes Tambara modules and
/// 2-cells over.
const CHECK_CARD: usize = 2;

pub fn cmd_check(path: &Path) -> CliResult<Outcome> {
    let ws = match load(path) {
        Ok(ws) => ws,
        Err(e) if e.is_bound() => return Ok(Outcome { code: EXIT_VERIFY, text: format!("FAIL: {e}\n") }),
        Err(e) => return Err(e),
    };
    bounds::with_bounds(ws.bounds(), || check_workspace(&ws))
}

fn check_workspace(ws: &Workspace) -> CliResult<Outcome> {
    let u = ws.universe()?;
    let small = u.restrict(CHECK_CARD);
    let mut out = String::new();
    let mut pass = true;
    writeln!(out, "universe {}", u.describe()).ok();
    let opts = ElemOpts { max_elements: CHECK_ELEMENTS, ..ElemOpts::default() };
    let mut modules: Vec<(Obj, Cat)> = Vec::new();
    for nd in &ws.diagrams {
        typecheck(&nd.diagram).map_err(|e| CliError::at(nd.line, e))?;
        let cell = match compile(&nd.diagram) {
            Ok(c) => c,
            Err(Error::Abstract(c)) => {
                writeln!(out, "skip: diagram {} uses abstract cell {c}", nd.name).ok();
                continue;
            }
            Err(e) => return Err(CliError::at(nd.line, e)),
        };
        let mut search = search_for(&small, &[&cell.src, &cell.tgt]);
        let effectful = !cell.region.is_base() || cell.src.iter().chain(&cell.tgt).any(|w| !w.cat.is_base());
        let rep = if effectful {
            search.max_states = CHECK_EFFECT_STATES;
            check_2cell(&cell, &small, &ElemOpts { max_elements: CHECK_EFFECT_ELEMENTS, ..opts.clone() }, &search)?
        } else {
            check_2cell(&cell, &small, &opts, &search)?
        };
        pass &= rep.passed();
        write!(out, "diagram {}: {rep}", nd.name).ok();
        for w in cell.src.iter().chain(&cell.tgt) {
            if w.obj.card() <= CHECK_CARD && !w.obj.is_unit() && !modules.contains(&(w.obj.clone(), w.cat.clone())) {
                modules.push((w.obj.clone(), w.cat.clone()));
            }
        }
    }
    for (x, cat) in &modules {
        for p in [build_r(x, cat, &small), build_l(x, cat, &small)] {
            let rep = check_tambara(&p);
            pass &= rep.passed();
            write!(out, "{rep}").ok();
        }
    }
    for e in &ws.expects {
        let (ok, verdict) = expectation(ws, &e.expect, &u)?;
        pass &= ok;
        writeln!(out, "{}: line {} {}: {verdict}", if ok { "pass" } else { "FAIL" }, e.line, describe_expect(&e.expect)).ok();
    }
    writeln!(out, "{}", if pass { "all checks passed" } else { "some checks failed" }).ok();
    Ok(Outcome::new(pass, out))
}

pub fn describe_expect(e: &Expect) -> String {
    match e {
        Expect::Equal(a, b) => format!("expect equal {a} {b}"),
        Expect::Distinct(a, b) => format!("expect distinct {a} {b}"),
        Expect::Lawful(o) => format!("expect lawful {o}"),
        Expect::Unlawful(o) => format!("expect unlawful {o}"),
        Expect::Count(h, n) => format!("expect count {h} = {n}"),
    }
}

/// Short verdict without witnesses, stable across universes that agree.
pub fn short(eq: &Equality) -> &'static str {
    match eq {
        Equality::Equal => "equal",
        Equality::EqualWithinTruncation(_) => "equal within truncation",
        Equality::Distinct(_) => "distinct",
        Equality::Undecided(_) => "undecided",
    }
}

/// Whether an expectation holds in `u`, with its verdict.
pub fn expectation(ws: &Workspace, e: &Expect, u: &Universe) -> CliResult<(bool, String)> {
    let opts = ElemOpts::default();
    let eq = |a: &str, b: &str| -> CliResult<Equality> {
        let (da, db) = (ws.diagram(a)?, ws.diagram(b)?);
        equal_diagrams(&da.diagram, &db.diagram, u, &opts).map_err(|e| CliError::at(db.line, e))
    };
    Ok(match e {
        Expect::Equal(a, b) => {
            let v = eq(a, b)?;
            (v.is_equal(), short(&v).to_string())
        }
        Expect::Distinct(a, b) => {
            let v = eq(a, b)?;
            (matches!(v, Equality::Distinct(_)), short(&v).to_string())
        }
        Expect::Lawful(o) | Expect::Unlawful(o) => {
            let rep = is_lawful(ws.optic(o)?, u)?;
            let ok = if matches!(e, Expect::Lawful(_)) { rep.all_pass() } else { rep.any_fail() };
            (ok, if rep.all_pass() { "lawful".into() } else if rep.any_fail() { "unlawful".into() } else { "undecided".into() })
        }
        Expect::Count(h, n) => {
            let c = count_classes(&h.x, &h.u, &h.y, &h.v, &h.flavor(), default_count_bound(h))?;
            (c == *n, format!("{c} classes"))
        }
    })
}

pub fn cmd_eval(path: &Path, name: &str) -> CliResult<Outcome> {
    let ws = load(path)?;
    bounds::with_bounds(ws.bounds(), || {
        let nd = ws.diagram(name)?;
        let o = eval_optic(&nd.diagram).map_err(|e| CliError::at(nd.line, e))?;
        let mut out = format!("diagram {name} : <{},{}> -> <{},{}> ({})\n", o.x, o.u, o.y, o.v, flavor_name(&o.flavor));
        writeln!(out, "{}", o.describe()).ok();
        out.push_str(&lens_view(&o));
        Ok(Outcome { code: EXIT_PASS, text: out })
    })
}

fn flavor_name(f: &Flavor) -> String {
    match f {
        Flavor::Cartesian => "cartesian".into(),
        Flavor::Mixed(t) => format!("kleisli {t}"),
    }
}

fn lens_view(o: &Optic) -> String {
    let lens = match &o.flavor {
        Flavor::Cartesian => to_lens(o),
        Flavor::Mixed(_) => to_mlens(o),
    };
    match lens {
        Ok(l) => format!(
            "  get   : {} -> {} = {}\n  put   : {} -> {} = {}\n",
            l.get.src(),
            l.get.tgt(),
            l.get.show_table(),
            l.put.src(),
            l.put.tgt(),
            l.put.show_table()
        ),
        Err(e) => format!("  no (get, put) form: {e}\n"),
    }
}

pub fn cmd_equal(path: &Path, d1: &str, d2: &str, residual_bound: Option<usize>) -> CliResult<Outcome> {
    let ws = load(path)?;
    bounds::with_bounds(ws.bounds(), || {
        let u = ws.universe()?;
        let (a, b) = (ws.diagram(d1)?, ws.diagram(d2)?);
        let v = equal_diagrams(&a.diagram, &b.diagram, &u, &ElemOpts::default()).map_err(|e| CliError::at(b.line, e))?;
        let mut out = format!("{d1} vs {d2}: {v}\n");
        let mut pass = v.is_equal();
        // optic-shaped sides are also compared as coend classes
        if let (Ok(o1), Ok(o2)) = (eval_optic(&a.diagram), eval_optic(&b.diagram)) {
            if o1.same_boundary(&o2) {
                let bound = residual_bound.unwrap_or(o1.x.card().max(1));
                let z = zigzag_equal(&o1, &o2, bound)?;
                let said = match z {
                    ZigzagVerdict::Equal => "equal",
                    ZigzagVerdict::DistinctWithinBound => "distinct within the bound",
                };
                writeln!(out, "as optics: {said} (residual bound {bound})").ok();
                pass &= z == ZigzagVerdict::Equal;
            }
        }
        writeln!(out, "universe {}", u.describe()).ok();
        Ok(Outcome::new(pass, out))
    })
}

pub fn cmd_laws(path: &Path, name: &str) -> CliResult<Outcome> {
    let ws = load(path)?;
    bounds::with_bounds(ws.bounds(), || {
        let u = ws.universe()?;
        let o = ws.env.optics.get(name).ok_or_else(|| {
            CliError::Core(Error::UnknownIdentifier { line: 0, col: 0, name: name.to_string() })
        })?;
        let mut reports: Vec<LawReport> = vec![is_lawful(o, &u)?];
        if let Some(l) = ws.lenses.get(name) {
            reports.push(if l.monad().is_some() { mlens_laws(l)? } else { lens_laws(l)? });
        }
        let mut out = String::new();
        for r in &reports {
            write!(out, "{r}").ok();
        }
        writeln!(out, "universe {}", u.describe()).ok();
        let pass = reports.iter().all(LawReport::all_pass);
        Ok(Outcome::new(pass, out))
    })
}

pub fn cmd_count(path: &Path, hom: &str, residual_bound: Option<usize>) -> CliResult<Outcome> {
    let ws = load(path)?;
    bounds::with_bounds(ws.bounds(), || {
        let h = ws.parse_hom(hom)?;
        let bound = residual_bound.unwrap_or_else(|| default_count_bound(&h));
        let n = count_classes(&h.x, &h.u, &h.y, &h.v, &h.flavor(), bound)?;
        let mut out = format!("{h}: {n} classes (residuals up to cardinality {bound})\n");
        if h.monad.is_none() {
            let xv = Obj::product(&h.x, &h.v)?;
            let gets = enumerate_homs(&Cat::Base, &h.x, &h.y)?.len();
            let puts = enumerate_homs(&Cat::Base, &xv, &h.u)?.len();
            writeln!(out, "lenses: |C({},{})| * |C({xv},{})| = {}", h.x, h.y, h.u, gets * puts).ok();
        }
        Ok(Outcome { code: EXIT_PASS, text: out })
    })
}

pub fn cmd_render(path: &Path, name: &str, format: Format, out_path: &Path) -> CliResult<Outcome> {
    let ws = load(path)?;
    let nd = ws.diagram(name)?;
    let t = typecheck(&nd.diagram).map_err(|e| CliError::at(nd.line, e))?;
    let text = render(&nd.diagram, &t, format, &RenderSpec::default());
    std::fs::write(out_path, text).map_err(|e| CliError::Io { path: out_path.display().to_string(), msg: e.to_string() })?;
    Ok(Outcome { code: EXIT_PASS, text: format!("wrote {}\n", out_path.display()) })
}

/// `Err` from a command as an outcome: the message and its exit code.
pub fn failure(e: &CliError) -> Outcome {
    Outcome { code: e.exit_code(), text: format!("error: {e}\n") }
}
