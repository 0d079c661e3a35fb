use std::fmt::Write as _;

use opticforge::tambara::Dir;

use super::{num, Item, RenderSpec, Scene, Seg};

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

pub(crate) fn path_data(seg: &Seg) -> String {
    match seg {
        Seg::Line(a, b) => format!("M {} {} L {} {}", num(a.0), num(a.1), num(b.0), num(b.1)),
        Seg::Cubic(a, b, c, d) => format!(
            "M {} {} C {} {} {} {} {} {}",
            num(a.0),
            num(a.1),
            num(b.0),
            num(b.1),
            num(c.0),
            num(c.1),
            num(d.0),
            num(d.1)
        ),
    }
}

/// Corners of an arrowhead centred at `(x, y)` pointing along `dir`.
pub(crate) fn arrow_points(x: f64, y: f64, dir: Dir, size: f64) -> [(f64, f64); 3] {
    let s = if dir == Dir::R { 1.0 } else { -1.0 };
    [(x + s * size, y), (x - s * size, y - size), (x - s * size, y + size)]
}

/// A self-contained SVG document. Wires are drawn first so boxes cover them.
pub fn to_svg(scene: &Scene, spec: &RenderSpec) -> String {
    let (w, h) = (num(scene.width), num(scene.height));
    let mut out = String::new();
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#).ok();
    writeln!(out, r#"<rect class="canvas" x="0" y="0" width="{w}" height="{h}" fill="white"/>"#).ok();
    for it in &scene.items {
        if let Item::Wire { seg, swap } = it {
            let class = if *swap { "wire swap" } else { "wire" };
            writeln!(out, r#"<path class="{class}" d="{}" fill="none" stroke="black" stroke-width="1.5"/>"#, path_data(seg)).ok();
        }
    }
    for it in &scene.items {
        match it {
            Item::Box { x, y, w, h, label } => {
                writeln!(
                    out,
                    r#"<rect class="box" x="{}" y="{}" width="{}" height="{}" fill="white" stroke="black" stroke-width="1.5"/>"#,
                    num(*x),
                    num(*y),
                    num(*w),
                    num(*h)
                )
                .ok();
                writeln!(
                    out,
                    r#"<text x="{}" y="{}" text-anchor="middle" dominant-baseline="central" font-family="monospace" font-size="11">{}</text>"#,
                    num(x + w / 2.0),
                    num(y + h / 2.0),
                    escape(label)
                )
                .ok();
            }
            Item::Dot { x, y } => {
                writeln!(out, r#"<circle class="dot" cx="{}" cy="{}" r="{}" fill="black"/>"#, num(*x), num(*y), num(spec.dot_radius)).ok();
            }
            Item::Arrow { x, y, dir } => {
                let pts: Vec<String> = arrow_points(*x, *y, *dir, spec.arrow_size).iter().map(|p| format!("{},{}", num(p.0), num(p.1))).collect();
                let class = if *dir == Dir::R { "arrow-r" } else { "arrow-l" };
                writeln!(out, r#"<polygon class="{class}" points="{}" fill="black"/>"#, pts.join(" ")).ok();
            }
            Item::Wire { .. } => {}
        }
    }
    out.push_str("</svg>\n");
    out
}
