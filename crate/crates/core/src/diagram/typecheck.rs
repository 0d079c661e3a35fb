//! Typing of diagrams: adjacent slices must agree on their flattened wires,
//! and every region gets a category. A region directly below an `R` wire or
//! above an `L` wire is in the acting category; the others are in the
//! category of the flavor. Regions are followed across slices with
//! union-find, and effectful boxes must sit next to effectful regions.

use petgraph::unionfind::UnionFind;

use super::ir::{Diagram, Gen, RawWire};
use crate::error::{Error, Result};
use crate::fincat::{Cat, Monad, Obj};
use crate::optic::Flavor;
use crate::tambara::chain::flatten_all;
use crate::tambara::{Dir, Units, Wire};

/// Label of a region: the acting category or the flavor's category.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    M,
    C,
}

/// Flattened position of a generator: inputs in column `slice`, outputs in
/// column `slice + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub in_off: usize,
    pub in_len: usize,
    pub out_off: usize,
    pub out_len: usize,
}

#[derive(Clone, Debug)]
pub struct Typed {
    pub flavor: Flavor,
    pub units: Units,
    /// Flattened wires of every column, with their categories.
    pub columns: Vec<Vec<Wire>>,
    /// Region labels of every column, one more than its wires.
    pub regions: Vec<Vec<Region>>,
    pub spans: Vec<Vec<Span>>,
}

impl Typed {
    pub fn cat_of(&self, r: Region) -> Cat {
        match r {
            Region::M => Cat::Base,
            Region::C => self.flavor.cat(),
        }
    }

    pub fn region_cat(&self, col: usize, gap: usize) -> Cat {
        self.cat_of(self.regions[col][gap])
    }

    pub fn source(&self) -> &[Wire] {
        &self.columns[0]
    }

    pub fn target(&self) -> &[Wire] {
        self.columns.last().unwrap()
    }

    /// Category of the outer region of the source.
    pub fn outer(&self) -> Cat {
        self.region_cat(0, 0)
    }
}

fn monads_of(g: &Gen, out: &mut Vec<Monad>) {
    let mut push = |c: &Cat| {
        if let Cat::Kleisli(t) = c {
            if !out.contains(t) {
                out.push(t.clone());
            }
        }
    };
    match g {
        Gen::BoxR(t) | Gen::BoxL(t) => push(t.f.cat()),
        Gen::Optic(_, o) => push(&o.flavor.cat()),
        _ => {}
    }
}

/// The single monad used anywhere in the diagram, if any.
pub fn flavor_of(d: &Diagram) -> Result<Flavor> {
    let mut ms = Vec::new();
    for g in d.generators() {
        monads_of(g, &mut ms);
    }
    match ms.len() {
        0 => Ok(Flavor::Cartesian),
        1 => Ok(Flavor::Mixed(ms.pop().unwrap())),
        _ => Err(Error::Type {
            slice: 0,
            offset: 0,
            msg: format!("diagram mixes monads {} and {}", ms[0], ms[1]),
        }),
    }
}

fn flat(ws: &[RawWire], units: Units) -> Vec<Wire> {
    let raw: Vec<Wire> = ws.iter().map(|(d, o)| Wire { dir: *d, obj: o.clone(), cat: Cat::Base }).collect();
    flatten_all(&raw, units)
}

fn show(w: &Wire) -> String {
    match w.dir {
        Dir::R => format!("R {}", w.obj),
        Dir::L => format!("L {}", w.obj),
    }
}

fn show_region(r: Region) -> &'static str {
    match r {
        Region::M => "acting",
        Region::C => "effectful",
    }
}

/// Label forced by the neighbouring wires of a gap, if any.
fn local_label(col: &[Wire], gap: usize) -> Option<Region> {
    let above = gap.checked_sub(1).map(|i| &col[i]);
    let below = col.get(gap);
    if above.map(|w| w.dir) == Some(Dir::R) || below.map(|w| w.dir) == Some(Dir::L) {
        Some(Region::M)
    } else if above.is_some() || below.is_some() {
        Some(Region::C)
    } else {
        None
    }
}

pub fn typecheck(d: &Diagram) -> Result<Typed> {
    let flavor = flavor_of(d)?;
    let units = match flavor {
        Flavor::Cartesian => Units::Drop,
        Flavor::Mixed(_) => Units::Keep,
    };
    if d.slices.is_empty() {
        return Ok(Typed { flavor, units, columns: vec![vec![]], regions: vec![vec![Region::C]], spans: vec![] });
    }

    // columns and spans
    let mut columns: Vec<Vec<Wire>> = Vec::new();
    let mut spans = Vec::new();
    for (k, slice) in d.slices.iter().enumerate() {
        let mut ins = Vec::new();
        let mut outs = Vec::new();
        let mut row = Vec::new();
        for g in slice {
            let gi = flat(&g.inputs()?, units);
            let go = flat(&g.outputs()?, units);
            row.push(Span { in_off: ins.len(), in_len: gi.len(), out_off: outs.len(), out_len: go.len() });
            ins.extend(gi);
            outs.extend(go);
        }
        if k == 0 {
            columns.push(ins);
        } else {
            let prev = columns.last().unwrap();
            check_column(k, prev, &ins)?;
        }
        columns.push(outs);
        spans.push(row);
    }

    // regions
    let offsets: Vec<usize> = columns
        .iter()
        .scan(0, |acc, c| {
            let o = *acc;
            *acc += c.len() + 1;
            Some(o)
        })
        .collect();
    let total = offsets.last().unwrap() + columns.last().unwrap().len() + 1;
    let gap = |c: usize, j: usize| offsets[c] + j;
    let mut uf = UnionFind::<usize>::new(total);
    for (k, (slice, row)) in d.slices.iter().zip(&spans).enumerate() {
        for (g, s) in slice.iter().zip(row) {
            uf.union(gap(k, s.in_off), gap(k + 1, s.out_off));
            uf.union(gap(k, s.in_off + s.in_len), gap(k + 1, s.out_off + s.out_len));
            if g.is_identity() {
                for j in 0..s.in_len {
                    uf.union(gap(k, s.in_off + j), gap(k + 1, s.out_off + j));
                }
            }
        }
    }
    let mut label: Vec<Option<(Region, usize, usize)>> = vec![None; total];
    let mixed = matches!(flavor, Flavor::Mixed(_));
    for (c, col) in columns.iter().enumerate() {
        for j in 0..=col.len() {
            let Some(l) = local_label(col, j) else { continue };
            let root = uf.find(gap(c, j));
            match label[root] {
                None => label[root] = Some((l, c, j)),
                Some((l0, c0, j0)) if l0 != l && mixed => {
                    return Err(Error::Type {
                        slice: c.saturating_sub(1).min(d.slices.len() - 1),
                        offset: j,
                        msg: format!(
                            "region at column {c}, gap {j} must be {} but is joined to the {} region at column {c0}, gap {j0}",
                            show_region(l),
                            show_region(l0)
                        ),
                    })
                }
                Some(_) => {}
            }
        }
    }
    let regions: Vec<Vec<Region>> = columns
        .iter()
        .enumerate()
        .map(|(c, col)| (0..=col.len()).map(|j| label[uf.find(gap(c, j))].map_or(Region::C, |x| x.0)).collect())
        .collect();

    let mut typed = Typed { flavor, units, columns, regions, spans };
    for c in 0..typed.columns.len() {
        for j in 0..typed.columns[c].len() {
            let g = match typed.columns[c][j].dir {
                Dir::R => j,
                Dir::L => j + 1,
            };
            typed.columns[c][j].cat = typed.region_cat(c, g);
        }
    }
    if mixed {
        check_effects(d, &typed)?;
    }
    Ok(typed)
}

fn check_column(k: usize, prev: &[Wire], ins: &[Wire]) -> Result<()> {
    let same = |a: &Wire, b: &Wire| a.dir == b.dir && a.obj == b.obj;
    for j in 0..prev.len().max(ins.len()) {
        match (prev.get(j), ins.get(j)) {
            (Some(a), Some(b)) if same(a, b) => {}
            (a, b) => {
                let s = |w: Option<&Wire>| w.map_or("nothing".to_string(), show);
                return Err(Error::Type {
                    slice: k,
                    offset: j,
                    msg: format!("previous slice provides {}, this slice expects {}", s(a), s(b)),
                });
            }
        }
    }
    Ok(())
}

fn check_effects(d: &Diagram, t: &Typed) -> Result<()> {
    for (k, (slice, row)) in d.slices.iter().zip(&t.spans).enumerate() {
        for (g, s) in slice.iter().zip(row) {
            let above = t.regions[k][s.in_off];
            let below = t.regions[k][s.in_off + s.in_len];
            let err = |what: String| Error::Type { slice: k, offset: s.in_off, msg: what };
            match g {
                Gen::BoxR(m) if !m.is_pure() && above != Region::C => {
                    return Err(err(format!("effectful r[{}] needs an effectful region above it", m.expr)))
                }
                Gen::BoxL(m) if !m.is_pure() && below != Region::C => {
                    return Err(err(format!("effectful l[{}] needs an effectful region below it", m.expr)))
                }
                Gen::Optic(n, o) => {
                    let pure = o.alpha.as_pure().is_some() && o.beta.as_pure().is_some();
                    if !pure && (above != Region::C || below != Region::C) {
                        return Err(err(format!("effectful optic[{n}] needs effectful regions on both sides")));
                    }
                }
                _ => {}
            }
        }
    }
    Ok(())
}

/// `R o` or `L o` as a raw wire, for messages.
pub fn show_raw(w: &RawWire) -> String {
    match w.0 {
        Dir::R => format!("R {}", w.1),
        Dir::L => format!("L {}", w.1),
    }
}

/// The raw objects of an optic-shaped boundary, if it is one.
pub fn boundary_objects(ws: &[Wire]) -> Option<(Obj, Obj)> {
    crate::tambara::twocell::split_boundary(ws).ok()
}
