use std::fmt;
use std::sync::Arc;

use super::monad::Monad;
use super::object::Obj;
use crate::error::{mismatch, Result};

/// Which category a morphism lives in.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Cat {
    Base,
    Kleisli(Monad),
}

impl Cat {
    /// Number of possible values of a morphism into `b`.
    pub fn codomain_size(&self, b: &Obj) -> u128 {
        match self {
            Cat::Base => b.card() as u128,
            Cat::Kleisli(t) => t.size(b.card()),
        }
    }

    pub fn monad(&self) -> Option<&Monad> {
        match self {
            Cat::Base => None,
            Cat::Kleisli(t) => Some(t),
        }
    }

    pub fn is_base(&self) -> bool {
        matches!(self, Cat::Base)
    }
}

impl fmt::Display for Cat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cat::Base => f.write_str("Base"),
            Cat::Kleisli(t) => write!(f, "Kleisli({t})"),
        }
    }
}

/// A tabulated function. For Kleisli morphisms the table indexes into `T tgt`.
#[derive(Clone)]
pub struct Morphism {
    src: Obj,
    tgt: Obj,
    cat: Cat,
    table: Arc<[u32]>,
    name: Option<Arc<str>>,
}

impl PartialEq for Morphism {
    fn eq(&self, o: &Morphism) -> bool {
        self.src == o.src && self.tgt == o.tgt && self.cat == o.cat && self.table == o.table
    }
}

impl Eq for Morphism {}

impl std::hash::Hash for Morphism {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.src.hash(state);
        self.tgt.hash(state);
        self.table.hash(state);
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.show_table())
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(n) => f.write_str(n),
            None => write!(f, "{}", self.show_table()),
        }
    }
}

impl Morphism {
    pub fn new(src: Obj, tgt: Obj, cat: Cat, table: Vec<u32>) -> Result<Morphism> {
        if table.len() != src.card() {
            return Err(mismatch(format!(
                "table for {src} -> {tgt} has {} entries, expected {}",
                table.len(),
                src.card()
            )));
        }
        let cod = cat.codomain_size(&tgt);
        if let Some(bad) = table.iter().find(|&&v| v as u128 >= cod) {
            return Err(mismatch(format!("table value {bad} out of range for {tgt} in {cat}")));
        }
        Ok(Morphism { src, tgt, cat, table: table.into(), name: None })
    }

    /// Construct from a closure; callers guarantee the values are in range.
    pub(crate) fn tabulate(src: &Obj, tgt: &Obj, cat: Cat, f: impl Fn(u32) -> u32) -> Morphism {
        let table: Vec<u32> = (0..src.card() as u32).map(f).collect();
        debug_assert!(table.iter().all(|&v| (v as u128) < cat.codomain_size(tgt)));
        Morphism { src: src.clone(), tgt: tgt.clone(), cat, table: table.into(), name: None }
    }

    pub fn named(mut self, name: &str) -> Morphism {
        self.name = Some(Arc::from(name));
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn src(&self) -> &Obj {
        &self.src
    }

    pub fn tgt(&self) -> &Obj {
        &self.tgt
    }

    pub fn cat(&self) -> &Cat {
        &self.cat
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.table[i as usize]
    }

    pub fn id(a: &Obj) -> Morphism {
        Morphism::tabulate(a, a, Cat::Base, |i| i)
    }

    /// Diagrammatic composite `self ⨾ g`. Mixed tags compose in the Kleisli category.
    pub fn then(&self, g: &Morphism) -> Result<Morphism> {
        if self.tgt != g.src {
            return Err(mismatch(format!(
                "cannot compose {} : {} -> {} with {} : {} -> {}",
                self, self.src, self.tgt, g, g.src, g.tgt
            )));
        }
        let nb = self.tgt.card();
        let nc = g.tgt.card();
        let (cat, table): (Cat, Vec<u32>) = match (&self.cat, &g.cat) {
            (Cat::Base, Cat::Base) | (Cat::Base, Cat::Kleisli(_)) => {
                (g.cat.clone(), self.table.iter().map(|&v| g.table[v as usize]).collect())
            }
            (Cat::Kleisli(t), Cat::Base) => (
                self.cat.clone(),
                self.table.iter().map(|&v| t.fmap(nb, nc, |j| g.table[j as usize], v)).collect(),
            ),
            (Cat::Kleisli(t), Cat::Kleisli(t2)) => {
                if t != t2 {
                    return Err(mismatch(format!("cannot compose across monads {t} and {t2}")));
                }
                (self.cat.clone(), self.table.iter().map(|&v| t.bind(nb, nc, v, |j| g.table[j as usize])).collect())
            }
        };
        Ok(Morphism { src: self.src.clone(), tgt: g.tgt.clone(), cat, table: table.into(), name: None })
    }

    /// View in the given category: Base morphisms lift along the unit.
    pub fn lift_to(&self, cat: &Cat) -> Result<Morphism> {
        match (&self.cat, cat) {
            (a, b) if a == b => Ok(self.clone()),
            (Cat::Base, Cat::Kleisli(t)) => Ok(self.pure_lift(t)),
            _ => Err(mismatch(format!("cannot view a {} morphism in {}", self.cat, cat))),
        }
    }

    /// `f ⨾ unit`.
    pub fn pure_lift(&self, t: &Monad) -> Morphism {
        assert!(self.cat.is_base(), "pure_lift of a non-base morphism");
        let nb = self.tgt.card();
        let table: Vec<u32> = self.table.iter().map(|&v| t.unit(nb, v)).collect();
        Morphism { src: self.src.clone(), tgt: self.tgt.clone(), cat: Cat::Kleisli(t.clone()), table: table.into(), name: None }
    }

    /// The underlying base morphism if every value is a unit.
    pub fn as_pure(&self) -> Option<Morphism> {
        match &self.cat {
            Cat::Base => Some(self.clone()),
            Cat::Kleisli(t) => {
                let nb = self.tgt.card();
                let table: Option<Vec<u32>> = self.table.iter().map(|&v| t.as_pure(nb, v)).collect();
                table.map(|table| Morphism {
                    src: self.src.clone(),
                    tgt: self.tgt.clone(),
                    cat: Cat::Base,
                    table: table.into(),
                    name: None,
                })
            }
        }
    }

    /// Equality after viewing both sides in the richer category.
    pub fn same_arrow(&self, o: &Morphism) -> bool {
        if self.cat == o.cat {
            return self == o;
        }
        match (&self.cat, &o.cat) {
            (Cat::Base, Cat::Kleisli(t)) => self.pure_lift(t) == *o,
            (Cat::Kleisli(t), Cat::Base) => *self == o.pure_lift(t),
            _ => false,
        }
    }

    pub fn is_iso(&self) -> bool {
        if !self.cat.is_base() || self.src.card() != self.tgt.card() {
            return false;
        }
        let mut seen = vec![false; self.tgt.card()];
        self.table.iter().all(|&v| !std::mem::replace(&mut seen[v as usize], true))
    }

    /// Inverse of a base bijection.
    pub fn inverse(&self) -> Option<Morphism> {
        if !self.is_iso() {
            return None;
        }
        let mut inv = vec![0u32; self.src.card()];
        for (i, &v) in self.table.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Some(Morphism { src: self.tgt.clone(), tgt: self.src.clone(), cat: Cat::Base, table: inv.into(), name: None })
    }

    /// Render a single value.
    pub fn show_value(&self, v: u32) -> String {
        match &self.cat {
            Cat::Base => self.tgt.elem(v).to_string(),
            Cat::Kleisli(t) => t.show(&self.tgt, v),
        }
    }

    /// `{a->b, ...}` in source order.
    pub fn show_table(&self) -> String {
        let parts: Vec<String> = self
            .table
            .iter()
            .enumerate()
            .map(|(i, &v)| format!("{}->{}", self.src.elem(i as u32), self.show_value(v)))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}
