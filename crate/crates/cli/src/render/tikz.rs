use std::fmt::Write as _;

use super::svg::arrow_points;
use super::{num, Item, RenderSpec, Scene, Seg};

fn escape(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        match c {
            '\\' => out.push_str("\\textbackslash{}"),
            '{' | '}' | '$' | '&' | '#' | '_' | '%' => {
                out.push('\\');
                out.push(c);
            }
            '^' => out.push_str("\\textasciicircum{}"),
            '~' => out.push_str("\\textasciitilde{}"),
            c => out.push(c),
        }
    }
    out
}

fn pt(p: (f64, f64)) -> String {
    format!("({},{})", num(p.0), num(p.1))
}

/// A standalone LaTeX document; the y axis points down as in the SVG.
pub fn to_tikz(scene: &Scene, spec: &RenderSpec) -> String {
    let mut out = String::new();
    out.push_str("\\documentclass[tikz]{standalone}\n\\begin{document}\n");
    out.push_str("\\begin{tikzpicture}[x=1pt,y=-1pt,line width=1pt]\n");
    writeln!(out, "\\useasboundingbox (0,0) rectangle {};", pt((scene.width, scene.height))).ok();
    for it in &scene.items {
        if let Item::Wire { seg, .. } = it {
            match seg {
                Seg::Line(a, b) => writeln!(out, "\\draw {} -- {};", pt(*a), pt(*b)),
                Seg::Cubic(a, b, c, d) => writeln!(out, "\\draw {} .. controls {} and {} .. {};", pt(*a), pt(*b), pt(*c), pt(*d)),
            }
            .ok();
        }
    }
    for it in &scene.items {
        match it {
            Item::Box { x, y, w, h, label } => {
                writeln!(out, "\\filldraw[fill=white] {} rectangle {};", pt((*x, *y)), pt((x + w, y + h))).ok();
                writeln!(out, "\\node[font=\\ttfamily\\scriptsize] at {} {{{}}};", pt((x + w / 2.0, y + h / 2.0)), escape(label)).ok();
            }
            Item::Dot { x, y } => {
                writeln!(out, "\\fill {} circle ({}pt);", pt((*x, *y)), num(spec.dot_radius)).ok();
            }
            Item::Arrow { x, y, dir } => {
                let [a, b, c] = arrow_points(*x, *y, *dir, spec.arrow_size);
                writeln!(out, "\\fill {} -- {} -- {} -- cycle;", pt(a), pt(b), pt(c)).ok();
            }
            Item::Wire { .. } => {}
        }
    }
    out.push_str("\\end{tikzpicture}\n\\end{document}\n");
    out
}
