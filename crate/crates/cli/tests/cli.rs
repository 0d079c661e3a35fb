//! The binary end to end: exit codes, printed verdicts and written files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const BOOLS: &str = "\
set B = {f, t}
map not : B -> B = {f -> t, t -> f}
map k0 : B -> B = {f -> f, t -> f}
";

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_opticforge"));
    cmd.args(args).env_remove("OPTICFORGE_UNIVERSE_BOUND");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("the binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn workspace(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, format!("{BOOLS}{body}")).unwrap();
    p
}

fn corpus(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name).display().to_string()
}

#[test]
fn check_passes_on_a_good_file() {
    let dir = TempDir::new().unwrap();
    let p = workspace(&dir, "ok.optic", "diagram a = wr[B] * cup[B] ; cap[B] * wr[B]\ndiagram b = wr[B]\nexpect equal a b\n");
    let o = run(&["check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
    assert!(stdout(&o).contains("all checks passed"));
    assert!(stdout(&o).contains('#'), "the universe fingerprint is printed");
}

#[test]
fn dup_on_a_left_wire_is_a_user_error_with_its_position() {
    let dir = TempDir::new().unwrap();
    let p = workspace(&dir, "bad.optic", "diagram bad = wl[B] ; dup[B]\n");
    let o = run(&["check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("line 4") && err.contains("slice 1, offset 0"), "{err}");
}

#[test]
fn parse_errors_are_user_errors() {
    let dir = TempDir::new().unwrap();
    let p = workspace(&dir, "bad.optic", "diagram bad = wr[B] ;; wr[B]\n");
    let o = run(&["check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("4:"), "{}", stderr(&o));
    let missing = run(&["check", "/nonexistent/file.optic"]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn oversized_sets_fail_the_check() {
    let dir = TempDir::new().unwrap();
    let p = workspace(&dir, "big.optic", "set F = {a, b, c, d, e}\nuniverse cards 1..2 bound 4\n");
    let o = run(&["check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "{}{}", stdout(&o), stderr(&o));
    assert!(stdout(&o).contains("FAIL"));
    // other commands report the same bound as an internal limit
    let e = run(&["count", p.to_str().unwrap(), "--hom", "(B,B) -> (B,B)"]);
    assert_eq!(e.status.code(), Some(3));
}

#[test]
fn the_environment_sets_the_default_bound() {
    let dir = TempDir::new().unwrap();
    let p = workspace(&dir, "env.optic", "set F = {a, b, c, d}\n");
    let o = run_env(&["check", p.to_str().unwrap()], &[("OPTICFORGE_UNIVERSE_BOUND", "3")]);
    assert_eq!(o.status.code(), Some(2), "{}{}", stdout(&o), stderr(&o));
    // the file's own bound wins
    let q = workspace(&dir, "env2.optic", "set F = {a, b, c, d}\nuniverse cards 1..2 bound 4\n");
    let o = run_env(&["check", q.to_str().unwrap()], &[("OPTICFORGE_UNIVERSE_BOUND", "3")]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
}

#[test]
fn failed_expectations_are_verification_failures() {
    let dir = TempDir::new().unwrap();
    let p = workspace(&dir, "no.optic", "diagram a = r[not]\ndiagram b = wr[B]\nexpect equal a b\n");
    let o = run(&["check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("FAIL: line 6 expect equal a b: distinct"), "{}", stdout(&o));
}

#[test]
fn eval_adapter_prints_the_unit_residual() {
    let dir = TempDir::new().unwrap();
    let p = workspace(&dir, "a.optic", "diagram adapter = r[not] * l[k0]\n");
    let o = run(&["eval", p.to_str().unwrap(), "-d", "adapter"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("residual I"), "{out}");
    assert!(out.contains("alpha : B -> (I*B) = {f->(*,t), t->(*,f)}"), "{out}");
    assert!(out.contains("beta  : (I*B) -> B = {(*,f)->f, (*,t)->f}"), "{out}");
}

#[test]
fn eval_lens_decomposition_recovers_get_and_put() {
    let o = run(&["eval", &corpus("lenses.optic"), "-d", "decomposed"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("get   : (B*B) -> B = {(f,f)->f, (f,t)->t, (t,f)->f, (t,t)->t}"), "{out}");
    assert!(out.contains("put   : ((B*B)*B) -> (B*B)"), "{out}");
    assert!(out.contains("((f,t),f)->(f,f)"), "{out}");
}

#[test]
fn eval_identity_diagram() {
    let dir = TempDir::new().unwrap();
    let p = workspace(&dir, "i.optic", "diagram ident = wr[B] * wl[B]\n");
    let out = stdout(&run(&["eval", p.to_str().unwrap(), "-d", "ident"]));
    assert!(out.contains("get   : B -> B = {f->f, t->t}"), "{out}");
    assert!(out.contains("put   : (B*B) -> B = {(f,f)->f, (f,t)->t, (t,f)->f, (t,t)->t}"), "{out}");
}

#[test]
fn equal_snake_and_wire() {
    let o = run(&["equal", &corpus("snakes.optic"), "snake_r", "wire_r"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("snake_r vs wire_r: equal\n"), "{}", stdout(&o));
    let same = run(&["equal", &corpus("snakes.optic"), "slide_before", "slide_before"]);
    assert_eq!(same.status.code(), Some(0));
}

#[test]
fn unlawful_sides_are_distinct_with_a_witness() {
    let o = run(&["equal", &corpus("unlawful.optic"), "stuck_once", "stuck_twice"]);
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    assert!(out.contains("distinct") && out.contains("witness"), "{out}");
}

#[test]
fn equal_rejects_mismatched_boundaries() {
    let o = run(&["equal", &corpus("snakes.optic"), "wire_r", "wire_l"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn laws_on_the_second_projection_lens() {
    let o = run(&["laws", &corpus("lenses.optic"), "-o", "second"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    for law in ["GetPut", "PutGet", "PutPut", "outside", "once=twice"] {
        assert!(out.lines().any(|l| l.trim_start().starts_with(law) && l.ends_with("pass")), "{law}: {out}");
    }
    let bad = run(&["laws", &corpus("unlawful.optic"), "-o", "stuck"]);
    assert_eq!(bad.status.code(), Some(2));
    let unknown = run(&["laws", &corpus("unlawful.optic"), "-o", "nope"]);
    assert_eq!(unknown.status.code(), Some(1));
}

#[test]
fn count_matches_the_lens_count() {
    let o = run(&["count", &corpus("lenses.optic"), "--hom", "(B,B) -> (B,B)"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains(": 64 classes"), "{out}");
    assert!(out.contains("= 64"), "{out}");
}

#[test]
fn suites_report_their_results() {
    let o = run(&["suite", "arrows_ff"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("class count 4 = |C(2,2)| = 4"), "{}", stdout(&o));
    let o = run(&["suite", "representation_roundtrip", "--card", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pass: representation round trip"), "{}", stdout(&o));
    assert_eq!(run(&["suite", "nope"]).status.code(), Some(1));
}

#[test]
fn render_writes_the_same_bytes_every_time() {
    let dir = TempDir::new().unwrap();
    for (fmt, ext) in [("svg", "svg"), ("tikz", "tex")] {
        let a = dir.path().join(format!("a.{ext}"));
        let b = dir.path().join(format!("b.{ext}"));
        for out in [&a, &b] {
            let o = run(&["render", &corpus("lenses.optic"), "-d", "second_twice", "-f", fmt, "-o", out.to_str().unwrap()]);
            assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        }
        let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
        assert!(!x.is_empty());
        assert_eq!(x, y);
    }
    let svg = std::fs::read_to_string(dir.path().join("a.svg")).unwrap();
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    let tex = std::fs::read_to_string(dir.path().join("a.tex")).unwrap();
    assert!(tex.contains("\\documentclass") && tex.contains("\\end{document}"));
}

#[test]
fn render_to_an_unwritable_path_is_a_user_error() {
    let o = run(&["render", &corpus("snakes.optic"), "-d", "wire_r", "-f", "svg", "-o", "/nonexistent/dir/x.svg"]);
    assert_eq!(o.status.code(), Some(1));
}
