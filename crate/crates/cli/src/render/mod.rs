//! Layered layout of diagrams and its SVG and TikZ emitters.
//!
//! Slices become columns separated by transition strips. Inside a slice each
//! generator gets a horizontal band tall enough for its wires; the strips
//! connect the outputs of one slice to the inputs of the next with curves
//! that preserve wire order, so the only crossings are drawn swaps.

mod svg;
mod tikz;

use opticforge::diagram::{Diagram, Gen, Typed};
use opticforge::fincat::Cat;
use opticforge::tambara::chain::flatten;
use opticforge::tambara::{Dir, Wire};

pub use svg::to_svg;
pub use tikz::to_tikz;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Svg,
    Tikz,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArrowStyle {
    /// Filled triangles at wire midpoints.
    Triangle,
    None,
}

/// Layout parameters, in output units.
#[derive(Clone, Debug, PartialEq)]
pub struct RenderSpec {
    pub column_width: f64,
    pub transition_width: f64,
    pub wire_spacing: f64,
    pub box_padding: f64,
    pub margin: f64,
    pub dot_radius: f64,
    pub arrow_size: f64,
    pub arrows: ArrowStyle,
    /// Smallest canvas; an empty diagram renders at exactly this size.
    pub min_width: f64,
    pub min_height: f64,
}

impl Default for RenderSpec {
    fn default() -> RenderSpec {
        RenderSpec {
            column_width: 90.0,
            transition_width: 30.0,
            wire_spacing: 28.0,
            box_padding: 5.0,
            margin: 20.0,
            dot_radius: 3.5,
            arrow_size: 4.0,
            arrows: ArrowStyle::Triangle,
            min_width: 120.0,
            min_height: 80.0,
        }
    }
}

pub type Pt = (f64, f64);

#[derive(Clone, Debug, PartialEq)]
pub enum Seg {
    Line(Pt, Pt),
    Cubic(Pt, Pt, Pt, Pt),
}

impl Seg {
    /// Points along the segment, endpoints included.
    pub fn polyline(&self) -> Vec<Pt> {
        match *self {
            Seg::Line(a, b) => vec![a, b],
            Seg::Cubic(p0, p1, p2, p3) => (0..=24)
                .map(|i| {
                    let t = i as f64 / 24.0;
                    let s = 1.0 - t;
                    let (a, b, c, d) = (s * s * s, 3.0 * s * s * t, 3.0 * s * t * t, t * t * t);
                    (a * p0.0 + b * p1.0 + c * p2.0 + d * p3.0, a * p0.1 + b * p1.1 + c * p2.1 + d * p3.1)
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Item {
    /// A piece of wire; `swap` marks the crossings of a swap generator.
    Wire { seg: Seg, swap: bool },
    Box { x: f64, y: f64, w: f64, h: f64, label: String },
    Dot { x: f64, y: f64 },
    Arrow { x: f64, y: f64, dir: Dir },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Scene {
    pub width: f64,
    pub height: f64,
    pub items: Vec<Item>,
}

pub fn render(d: &Diagram, t: &Typed, format: Format, spec: &RenderSpec) -> String {
    let scene = layout(d, t, spec);
    match format {
        Format::Svg => to_svg(&scene, spec),
        Format::Tikz => to_tikz(&scene, spec),
    }
}

/// Vertical placement of one slice: band tops and heights per generator.
struct Bands {
    tops: Vec<f64>,
    heights: Vec<f64>,
}

pub fn layout(d: &Diagram, t: &Typed, spec: &RenderSpec) -> Scene {
    let s = spec.wire_spacing;
    let k = d.slices.len();
    let mut bands = Vec::with_capacity(k);
    let mut tallest: f64 = 0.0;
    for row in &t.spans {
        let heights: Vec<f64> = row.iter().map(|sp| sp.in_len.max(sp.out_len).max(1) as f64 * s).collect();
        tallest = tallest.max(heights.iter().sum());
        bands.push(heights);
    }
    let bands: Vec<Bands> = bands
        .into_iter()
        .map(|heights| {
            let total: f64 = heights.iter().sum();
            let mut y = spec.margin + (tallest - total) / 2.0;
            let mut tops = Vec::with_capacity(heights.len());
            for h in &heights {
                tops.push(y);
                y += h;
            }
            Bands { tops, heights }
        })
        .collect();
    let slice_x = |i: usize| spec.margin + spec.transition_width + i as f64 * (spec.column_width + spec.transition_width);
    let width = spec.margin * 2.0 + spec.transition_width * (k + 1) as f64 + spec.column_width * k as f64;
    let height = spec.margin * 2.0 + tallest;
    let mut scene = Scene { width: width.max(spec.min_width), height: height.max(spec.min_height), items: Vec::new() };
    if k == 0 {
        return scene;
    }

    // y of wire `j` entering (`out = false`) or leaving slice `i`
    let wire_y = |i: usize, j: usize, out: bool| -> f64 {
        let row = &t.spans[i];
        for (g, sp) in row.iter().enumerate() {
            let (off, len) = if out { (sp.out_off, sp.out_len) } else { (sp.in_off, sp.in_len) };
            if j >= off && j < off + len {
                let b = &bands[i];
                return b.tops[g] + (b.heights[g] - len as f64 * s) / 2.0 + (j - off) as f64 * s + s / 2.0;
            }
        }
        spec.margin
    };

    let wire = |scene: &mut Scene, seg: Seg, dir: Option<Dir>| {
        if let (Some(dir), ArrowStyle::Triangle, Seg::Line(a, b)) = (dir, spec.arrows, &seg) {
            if (a.1 - b.1).abs() < 1e-9 {
                let (x, y) = ((a.0 + b.0) / 2.0, a.1);
                scene.items.push(Item::Wire { seg: seg.clone(), swap: false });
                scene.items.push(Item::Arrow { x, y, dir });
                return;
            }
        }
        scene.items.push(Item::Wire { seg, swap: false });
    };

    // transitions: boundary stubs and order-preserving curves between slices
    for c in 0..=k {
        let x1 = slice_x(c);
        let x0 = x1 - spec.transition_width;
        for (j, w) in t.columns[c].iter().enumerate() {
            let seg = match (c, c == k) {
                (0, _) => {
                    let y = wire_y(0, j, false);
                    Seg::Line((x0, y), (x1, y))
                }
                (_, true) => {
                    let y = wire_y(k - 1, j, true);
                    Seg::Line((x0, y), (x1, y))
                }
                _ => {
                    let (ya, yb) = (wire_y(c - 1, j, true), wire_y(c, j, false));
                    if (ya - yb).abs() < 1e-9 {
                        Seg::Line((x0, ya), (x1, yb))
                    } else {
                        let m = spec.transition_width / 2.0;
                        Seg::Cubic((x0, ya), (x0 + m, ya), (x1 - m, yb), (x1, yb))
                    }
                }
            };
            wire(&mut scene, seg, Some(w.dir));
        }
    }

    for (i, slice) in d.slices.iter().enumerate() {
        let x0 = slice_x(i);
        let x1 = x0 + spec.column_width;
        let xm = (x0 + x1) / 2.0;
        for (g, (gen, sp)) in slice.iter().zip(&t.spans[i]).enumerate() {
            let ins: Vec<(f64, Dir)> = (0..sp.in_len).map(|j| (wire_y(i, sp.in_off + j, false), t.columns[i][sp.in_off + j].dir)).collect();
            let outs: Vec<(f64, Dir)> =
                (0..sp.out_len).map(|j| (wire_y(i, sp.out_off + j, true), t.columns[i + 1][sp.out_off + j].dir)).collect();
            let (top, h) = (bands[i].tops[g], bands[i].heights[g]);
            match gen {
                Gen::Id | Gen::WireR(_) | Gen::WireL(_) => {
                    for (a, b) in ins.iter().zip(&outs) {
                        wire(&mut scene, Seg::Line((x0, a.0), (x1, b.0)), Some(a.1));
                    }
                }
                Gen::Dup(_) | Gen::Del(_) => {
                    let yd = ins.iter().chain(&outs).map(|p| p.0).sum::<f64>() / (ins.len() + outs.len()).max(1) as f64;
                    for a in &ins {
                        wire(&mut scene, Seg::Line((x0, a.0), (xm, yd)), None);
                    }
                    for b in &outs {
                        wire(&mut scene, Seg::Line((xm, yd), (x1, b.0)), None);
                    }
                    scene.items.push(Item::Dot { x: xm, y: yd });
                }
                Gen::Swap(..) => {
                    // the first input block moves below the second
                    let split = swap_split(gen, t);
                    for (j, a) in ins.iter().enumerate() {
                        let to = if j < split { sp.in_len - split + j } else { j - split };
                        scene.items.push(Item::Wire { seg: Seg::Line((x0, a.0), (x1, outs[to].0)), swap: true });
                    }
                }
                Gen::Cap(_) => half_turns(&mut scene, &ins, x0, spec, 1.0),
                Gen::Cup(_) => half_turns(&mut scene, &outs, x1, spec, -1.0),
                Gen::BoxR(_) | Gen::BoxL(_) | Gen::Optic(..) | Gen::Cell(..) => {
                    let bw = spec.column_width * 0.5;
                    let (bx0, bx1) = (xm - bw / 2.0, xm + bw / 2.0);
                    for a in &ins {
                        wire(&mut scene, Seg::Line((x0, a.0), (bx0, a.0)), Some(a.1));
                    }
                    for b in &outs {
                        wire(&mut scene, Seg::Line((bx1, b.0), (x1, b.0)), Some(b.1));
                    }
                    scene.items.push(Item::Box {
                        x: bx0,
                        y: top + spec.box_padding,
                        w: bw,
                        h: h - 2.0 * spec.box_padding,
                        label: box_label(gen),
                    });
                }
            }
        }
    }
    scene
}

fn box_label(g: &Gen) -> String {
    match g {
        Gen::BoxR(m) | Gen::BoxL(m) => m.expr.to_string(),
        Gen::Optic(n, _) | Gen::Cell(n, _, _) => n.clone(),
        other => other.to_string(),
    }
}

/// Number of flattened wires in the first block of a swap's input. `swap[x,y]`
/// takes `R (y*x)`, which flattens to `[R x, R y]`.
fn swap_split(g: &Gen, t: &Typed) -> usize {
    let Gen::Swap(x, _) = g else { return 0 };
    flatten(&Wire::r(x, &Cat::Base), t.units).len()
}

/// Nested half-turns joining wire `j` with wire `n - 1 - j`, bulging in
/// direction `sign` from `x`.
fn half_turns(scene: &mut Scene, ends: &[(f64, Dir)], x: f64, spec: &RenderSpec, sign: f64) {
    let n = ends.len();
    for j in 0..n / 2 {
        let (ya, yb) = (ends[j].0, ends[n - 1 - j].0);
        let reach = ((yb - ya) * 0.55).min(spec.column_width * 0.9) * sign;
        scene.items.push(Item::Wire { seg: Seg::Cubic((x, ya), (x + reach, ya), (x + reach, yb), (x, yb)), swap: false });
    }
}

/// Pairs of wire pieces that cross, other than the crossings of swaps.
pub fn crossings(scene: &Scene) -> Vec<(usize, usize)> {
    let paths: Vec<(usize, Vec<Pt>)> = scene
        .items
        .iter()
        .enumerate()
        .filter_map(|(i, it)| match it {
            Item::Wire { seg, swap: false } => Some((i, seg.polyline())),
            _ => None,
        })
        .collect();
    let mut out = Vec::new();
    for (a, (ia, pa)) in paths.iter().enumerate() {
        for (ib, pb) in &paths[a + 1..] {
            let hit = pa.windows(2).any(|s| pb.windows(2).any(|r| proper_intersection(s[0], s[1], r[0], r[1])));
            if hit {
                out.push((*ia, *ib));
            }
        }
    }
    out
}

fn orient(a: Pt, b: Pt, c: Pt) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

/// Segments cross at a point interior to both.
fn proper_intersection(p1: Pt, p2: Pt, q1: Pt, q2: Pt) -> bool {
    const EPS: f64 = 1e-6;
    let (d1, d2) = (orient(q1, q2, p1), orient(q1, q2, p2));
    let (d3, d4) = (orient(p1, p2, q1), orient(p1, p2, q2));
    ((d1 > EPS && d2 < -EPS) || (d1 < -EPS && d2 > EPS)) && ((d3 > EPS && d4 < -EPS) || (d3 < -EPS && d4 > EPS))
}

/// Fixed-precision number formatting, so output bytes depend only on input.
pub(crate) fn num(v: f64) -> String {
    let s = format!("{v:.2}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::workspace::Workspace;
    use opticforge::diagram::typecheck;

    const WS: &str = "\
set B = {f, t}
map not : B -> B = {f -> t, t -> f}
lens fl : (B, B) <-> (B, B) = lens(not, snd(B,B))
diagram adapter = r[not] * l[not]
diagram once = optic[fl] ; wr[B] * cup[B] * wl[B]
diagram twice = wr[B] * cup[B] * wl[B] ; optic[fl] * optic[fl]
diagram nest = cap[B*B]
diagram swapped = swap[B,B] * wl[B*B] ; cap[B*B]
";

    fn scene(name: &str) -> Scene {
        let ws = Workspace::parse(WS).unwrap();
        let d = &ws.diagram(name).unwrap().diagram;
        layout(d, &typecheck(d).unwrap(), &RenderSpec::default())
    }

    fn count(s: &Scene, f: impl Fn(&Item) -> bool) -> usize {
        s.items.iter().filter(|i| f(i)).count()
    }

    #[test]
    fn adapter_has_two_boxes_on_oriented_wires() {
        let s = scene("adapter");
        assert_eq!(count(&s, |i| matches!(i, Item::Box { .. })), 2);
        assert!(count(&s, |i| matches!(i, Item::Arrow { dir: Dir::R, .. })) >= 2);
        assert!(count(&s, |i| matches!(i, Item::Arrow { dir: Dir::L, .. })) >= 2);
    }

    #[test]
    fn lawfulness_diagrams_are_planar() {
        for name in ["once", "twice", "nest"] {
            let s = scene(name);
            assert_eq!(crossings(&s), vec![], "{name}");
        }
    }

    #[test]
    fn only_swaps_cross() {
        let s = scene("swapped");
        assert_eq!(crossings(&s), vec![]);
        assert!(count(&s, |i| matches!(i, Item::Wire { swap: true, .. })) == 2);
    }

    #[test]
    fn crossing_detection_sees_a_real_crossing() {
        let mut s = scene("nest");
        s.items.push(Item::Wire { seg: Seg::Line((0.0, 0.0), (s.width, s.height)), swap: false });
        assert!(!crossings(&s).is_empty());
    }

    #[test]
    fn empty_diagram_is_an_empty_canvas() {
        let d = Diagram::default();
        let spec = RenderSpec::default();
        let s = layout(&d, &typecheck(&d).unwrap(), &spec);
        assert_eq!((s.width, s.height), (spec.min_width, spec.min_height));
        assert!(s.items.is_empty());
    }

    #[test]
    fn numbers_are_trimmed() {
        assert_eq!(num(12.0), "12");
        assert_eq!(num(12.5), "12.5");
        assert_eq!(num(-0.001), "0");
    }
}
