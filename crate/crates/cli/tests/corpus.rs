//! The embedded corpus: every file checks cleanly and every diagram prints
//! to text that parses back to the same diagram.

use opticforge::diagram::{parse_diagram, typecheck};
use opticforge_cli::commands::cmd_check;
use opticforge_cli::render::{crossings, layout, render, Format, Item, RenderSpec};
use opticforge_cli::workspace::Workspace;
use opticforge_cli::CORPUS;
use proptest::prelude::*;

#[test]
fn corpus_files_check_cleanly() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    for (name, _) in CORPUS {
        let out = cmd_check(&dir.join(name)).unwrap();
        assert_eq!(out.code, 0, "{name}:\n{}", out.text);
    }
}

#[test]
fn corpus_diagrams_round_trip_through_text() {
    let mut n = 0;
    for (name, text) in CORPUS {
        let ws = Workspace::parse(text).unwrap();
        for nd in &ws.diagrams {
            let printed = nd.diagram.to_string();
            let again = parse_diagram(&printed, &ws.env).unwrap_or_else(|e| panic!("{name} {}: {printed}: {e}", nd.name));
            assert_eq!(again.to_string(), printed, "{name} {}", nd.name);
            assert_eq!(format!("{:?}", again.slices), format!("{:?}", nd.diagram.slices), "{name} {}", nd.name);
            n += 1;
        }
    }
    assert!(n >= 25, "{n} diagrams");
}

#[test]
fn lawfulness_diagrams_draw_without_crossings() {
    let ws = Workspace::parse(CORPUS[0].1).unwrap();
    for name in ["second_outside", "second_once", "second_twice", "decomposed"] {
        let d = &ws.diagram(name).unwrap().diagram;
        let scene = layout(d, &typecheck(d).unwrap(), &RenderSpec::default());
        assert!(crossings(&scene).is_empty(), "{name}: {:?}", crossings(&scene));
    }
}

const PIECES: &[&str] = &["wr[B]", "r[not]", "wr[B] * cup[B] ; cap[B] * wr[B]", "dup[B] ; del[B] * wr[B]", "dup[B] ; wr[B] * del[B]"];

fn env() -> Workspace {
    Workspace::parse("set B = {f, t}\nmap not : B -> B = {f -> t, t -> f}\n").unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rendering_is_deterministic_and_planar(picks in prop::collection::vec(0..PIECES.len(), 1..5)) {
        let ws = env();
        let text = picks.iter().map(|&i| format!("({})", PIECES[i])).collect::<Vec<_>>().join(" ; ");
        let d = parse_diagram(&text, &ws.env).unwrap();
        let t = typecheck(&d).unwrap();
        let spec = RenderSpec::default();
        for f in [Format::Svg, Format::Tikz] {
            prop_assert_eq!(render(&d, &t, f, &spec), render(&d, &t, f, &spec));
        }
        let scene = layout(&d, &t, &spec);
        prop_assert!(crossings(&scene).is_empty());
        let boxes = scene.items.iter().filter(|i| matches!(i, Item::Box { .. })).count();
        prop_assert_eq!(boxes, picks.iter().filter(|&&i| i == 1).count());
        let again = parse_diagram(&d.to_string(), &ws.env).unwrap();
        prop_assert_eq!(again.to_string(), d.to_string());
    }
}
