use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use super::bounds;
use super::monad::Monad;
use crate::error::{mismatch, Result};

/// An element token: an atom, the unit token, or an ordered pair.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Atom(Arc<str>),
    Unit,
    Pair(Arc<(Elem, Elem)>),
}

impl Elem {
    pub fn atom(s: &str) -> Elem {
        Elem::Atom(Arc::from(s))
    }

    pub fn pair(a: Elem, b: Elem) -> Elem {
        Elem::Pair(Arc::new((a, b)))
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Atom(a) => write!(f, "{a}"),
            Elem::Unit => write!(f, "*"),
            Elem::Pair(p) => write!(f, "({},{})", p.0, p.1),
        }
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// How an object was built. Products remember their factors so that wires over
/// them can be split.
#[derive(Clone)]
pub enum Shape {
    Atoms,
    Unit,
    Product(Obj, Obj),
    Monadic(Monad, Obj),
}

struct ObjData {
    name: Arc<str>,
    elems: Vec<Elem>,
    shape: Shape,
    index: OnceLock<HashMap<Elem, u32>>,
}

/// A named finite set. Equality is name equality.
#[derive(Clone)]
pub struct Obj(Arc<ObjData>);

impl PartialEq for Obj {
    fn eq(&self, other: &Obj) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.name == other.0.name
    }
}

impl Eq for Obj {}

impl Hash for Obj {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.name.hash(state)
    }
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.name)
    }
}

impl fmt::Debug for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.name)
    }
}

type ProductKey = (usize, usize);

fn product_cache() -> &'static Mutex<HashMap<ProductKey, Obj>> {
    static CACHE: OnceLock<Mutex<HashMap<ProductKey, Obj>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl Obj {
    pub(crate) fn from_parts(name: String, elems: Vec<Elem>, shape: Shape) -> Obj {
        Obj(Arc::new(ObjData { name: Arc::from(name), elems, shape, index: OnceLock::new() }))
    }

    /// A set of named atoms, in declaration order.
    pub fn atoms(name: &str, atoms: &[&str]) -> Result<Obj> {
        let elems: Vec<Elem> = atoms.iter().map(|a| Elem::atom(a)).collect();
        Obj::from_elems(name, elems)
    }

    /// A set with arbitrary (distinct) element tokens.
    pub fn from_elems(name: &str, elems: Vec<Elem>) -> Result<Obj> {
        let mut seen = std::collections::HashSet::new();
        for e in &elems {
            if !seen.insert(e.clone()) {
                return Err(mismatch(format!("duplicate element {e} in set {name}")));
            }
        }
        bounds::check_card(|| format!("set {name}"), elems.len() as u128)?;
        Ok(Obj::from_parts(name.to_string(), elems, Shape::Atoms))
    }

    /// The monoidal unit `I`, with the single element `*`.
    pub fn unit() -> Obj {
        static UNIT: OnceLock<Obj> = OnceLock::new();
        UNIT.get_or_init(|| Obj::from_parts("I".into(), vec![Elem::Unit], Shape::Unit)).clone()
    }

    /// The skeletal object of cardinality `n`: atoms `0..n`, named by `n`.
    /// Cardinality one is the unit.
    pub fn skeletal(n: usize) -> Result<Obj> {
        if n == 1 {
            return Ok(Obj::unit());
        }
        static SKEL: OnceLock<Mutex<HashMap<usize, Obj>>> = OnceLock::new();
        let cache = SKEL.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(o) = cache.lock().unwrap().get(&n) {
            return Ok(o.clone());
        }
        bounds::check_card(|| format!("skeletal object {n}"), n as u128)?;
        let elems = (0..n).map(|i| Elem::atom(&i.to_string())).collect();
        let o = Obj::from_parts(n.to_string(), elems, Shape::Atoms);
        Ok(cache.lock().unwrap().entry(n).or_insert(o).clone())
    }

    /// Cartesian product `a × b`, elements in lexicographic order.
    pub fn product(a: &Obj, b: &Obj) -> Result<Obj> {
        let size = a.card() as u128 * b.card() as u128;
        bounds::check_card(|| format!("product {a}*{b}"), size)?;
        let key = (Arc::as_ptr(&a.0) as usize, Arc::as_ptr(&b.0) as usize);
        if let Some(p) = product_cache().lock().unwrap().get(&key) {
            return Ok(p.clone());
        }
        let mut elems = Vec::with_capacity(size as usize);
        for x in a.elems() {
            for y in b.elems() {
                elems.push(Elem::pair(x.clone(), y.clone()));
            }
        }
        let p = Obj::from_parts(format!("({a}*{b})"), elems, Shape::Product(a.clone(), b.clone()));
        Ok(product_cache().lock().unwrap().entry(key).or_insert(p).clone())
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn card(&self) -> usize {
        self.0.elems.len()
    }

    pub fn elems(&self) -> &[Elem] {
        &self.0.elems
    }

    pub fn elem(&self, i: u32) -> &Elem {
        &self.0.elems[i as usize]
    }

    pub fn shape(&self) -> &Shape {
        &self.0.shape
    }

    pub fn is_unit(&self) -> bool {
        matches!(self.0.shape, Shape::Unit)
    }

    /// Factors `(a, b)` when this object is `a × b`.
    pub fn factors(&self) -> Option<(&Obj, &Obj)> {
        match &self.0.shape {
            Shape::Product(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn index_of(&self, e: &Elem) -> Option<u32> {
        let idx = self.0.index.get_or_init(|| {
            self.0.elems.iter().enumerate().map(|(i, e)| (e.clone(), i as u32)).collect()
        });
        idx.get(e).copied()
    }

    /// Same underlying allocation; used for fast paths only.
    pub fn ptr_eq(&self, other: &Obj) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}
