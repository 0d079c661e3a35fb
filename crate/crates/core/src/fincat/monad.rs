use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::bounds;
use super::object::{Elem, Obj, Shape};
use crate::error::{mismatch, Result};

/// The fixed monad shells; monoid and state data are user supplied.
#[derive(Clone)]
pub enum MonadKind {
    Identity,
    Maybe,
    /// Writer over a finite monoid: `mul` is the row-major multiplication table.
    Writer { monoid: Obj, mul: Vec<u32>, unit: u32 },
    State { states: Obj },
}

struct MonadData {
    id: Arc<str>,
    kind: MonadKind,
    objects: Mutex<HashMap<Obj, Obj>>,
}

/// A strong monad on finite sets, identified by its id.
#[derive(Clone)]
pub struct Monad(Arc<MonadData>);

impl PartialEq for Monad {
    fn eq(&self, other: &Monad) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.id == other.0.id
    }
}

impl Eq for Monad {}

impl std::hash::Hash for Monad {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.id.hash(state)
    }
}

impl fmt::Debug for Monad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.id)
    }
}

impl fmt::Display for Monad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.id)
    }
}

/// A decoded value of `T a`, with `a`-components as indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TVal {
    Id(u32),
    Maybe(Option<u32>),
    Writer(u32, u32),
    /// For each input state in order: (value, next state).
    State(Vec<(u32, u32)>),
}

impl Monad {
    fn make(id: &str, kind: MonadKind) -> Monad {
        Monad(Arc::new(MonadData { id: Arc::from(id), kind, objects: Mutex::new(HashMap::new()) }))
    }

    pub fn identity(id: &str) -> Monad {
        Monad::make(id, MonadKind::Identity)
    }

    pub fn maybe(id: &str) -> Monad {
        Monad::make(id, MonadKind::Maybe)
    }

    /// Writer over the monoid `(monoid, mul, unit)`; `mul` maps `monoid × monoid → monoid`
    /// in row-major order. The monoid axioms are checked.
    pub fn writer(id: &str, monoid: Obj, mul: Vec<u32>, unit: u32) -> Result<Monad> {
        let n = monoid.card();
        if mul.len() != n * n || mul.iter().any(|&v| v as usize >= n) || unit as usize >= n {
            return Err(mismatch(format!("writer {id}: malformed monoid table")));
        }
        let m = |a: u32, b: u32| mul[a as usize * n + b as usize];
        for a in 0..n as u32 {
            if m(unit, a) != a || m(a, unit) != a {
                return Err(mismatch(format!("writer {id}: {} is not a unit", monoid.elem(unit))));
            }
            for b in 0..n as u32 {
                for c in 0..n as u32 {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(mismatch(format!("writer {id}: multiplication is not associative")));
                    }
                }
            }
        }
        Ok(Monad::make(id, MonadKind::Writer { monoid, mul, unit }))
    }

    pub fn state(id: &str, states: Obj) -> Result<Monad> {
        if states.card() == 0 {
            return Err(mismatch(format!("state {id}: empty state set")));
        }
        Ok(Monad::make(id, MonadKind::State { states }))
    }

    pub fn id(&self) -> &str {
        &self.0.id
    }

    pub fn kind(&self) -> &MonadKind {
        &self.0.kind
    }

    /// `|T a|` for `|a| = n`.
    pub fn size(&self, n: usize) -> u128 {
        match &self.0.kind {
            MonadKind::Identity => n as u128,
            MonadKind::Maybe => n as u128 + 1,
            MonadKind::Writer { monoid, .. } => monoid.card() as u128 * n as u128,
            MonadKind::State { states } => {
                let s = states.card() as u32;
                (n as u128 * s as u128).checked_pow(s).unwrap_or(u128::MAX)
            }
        }
    }

    pub fn decode(&self, n: usize, t: u32) -> TVal {
        match &self.0.kind {
            MonadKind::Identity => TVal::Id(t),
            MonadKind::Maybe => TVal::Maybe(if t == 0 { None } else { Some(t - 1) }),
            MonadKind::Writer { .. } => TVal::Writer(t / n as u32, t % n as u32),
            MonadKind::State { states } => {
                let s = states.card();
                let base = (n * s) as u32;
                let mut out = vec![(0, 0); s];
                let mut rest = t;
                for slot in out.iter_mut().rev() {
                    let d = rest % base;
                    rest /= base;
                    *slot = (d / s as u32, d % s as u32);
                }
                TVal::State(out)
            }
        }
    }

    pub fn encode(&self, n: usize, v: &TVal) -> u32 {
        match (&self.0.kind, v) {
            (MonadKind::Identity, TVal::Id(a)) => *a,
            (MonadKind::Maybe, TVal::Maybe(o)) => o.map_or(0, |a| a + 1),
            (MonadKind::Writer { .. }, TVal::Writer(w, a)) => w * n as u32 + a,
            (MonadKind::State { states }, TVal::State(vs)) => {
                let s = states.card() as u32;
                let base = n as u32 * s;
                vs.iter().fold(0, |acc, &(a, st)| acc * base + a * s + st)
            }
            _ => panic!("monad value of the wrong shape for {}", self.0.id),
        }
    }

    /// `unit_a(i)`.
    pub fn unit(&self, n: usize, i: u32) -> u32 {
        let v = match &self.0.kind {
            MonadKind::Identity => TVal::Id(i),
            MonadKind::Maybe => TVal::Maybe(Some(i)),
            MonadKind::Writer { unit, .. } => TVal::Writer(*unit, i),
            MonadKind::State { states } => TVal::State((0..states.card() as u32).map(|s| (i, s)).collect()),
        };
        self.encode(n, &v)
    }

    /// The `a`-index of `t` when `t` is a unit.
    pub fn as_pure(&self, n: usize, t: u32) -> Option<u32> {
        match self.decode(n, t) {
            TVal::Id(a) => Some(a),
            TVal::Maybe(o) => o,
            TVal::Writer(w, a) => match &self.0.kind {
                MonadKind::Writer { unit, .. } if w == *unit => Some(a),
                _ => None,
            },
            TVal::State(vs) => {
                let a = vs[0].0;
                vs.iter().enumerate().all(|(s, &(b, st))| b == a && st == s as u32).then_some(a)
            }
        }
    }

    /// `bind(t, k)` with `t ∈ T a`, `|a| = na`, and `k` returning indices into `T b`.
    pub fn bind(&self, na: usize, nb: usize, t: u32, k: impl Fn(u32) -> u32) -> u32 {
        match self.decode(na, t) {
            TVal::Id(a) => k(a),
            TVal::Maybe(None) => 0,
            TVal::Maybe(Some(a)) => k(a),
            TVal::Writer(w, a) => {
                let MonadKind::Writer { monoid, mul, .. } = &self.0.kind else { unreachable!() };
                let TVal::Writer(w2, b) = self.decode(nb, k(a)) else { unreachable!() };
                let w3 = mul[w as usize * monoid.card() + w2 as usize];
                self.encode(nb, &TVal::Writer(w3, b))
            }
            TVal::State(vs) => {
                let out = vs
                    .iter()
                    .map(|&(a, s1)| {
                        let TVal::State(ws) = self.decode(nb, k(a)) else { unreachable!() };
                        ws[s1 as usize]
                    })
                    .collect();
                self.encode(nb, &TVal::State(out))
            }
        }
    }

    /// `T f` on indices.
    pub fn fmap(&self, na: usize, nb: usize, f: impl Fn(u32) -> u32, t: u32) -> u32 {
        self.bind(na, nb, t, |a| self.unit(nb, f(a)))
    }

    /// Strength `a × T b → T(a × b)` at element `a`, with `|a| = na`, `|b| = nb`.
    pub fn strength(&self, na: usize, nb: usize, a: u32, t: u32) -> u32 {
        self.fmap(nb, na * nb, |j| a * nb as u32 + j, t)
    }

    /// The object `T a`, with structural element tokens.
    pub fn apply(&self, a: &Obj) -> Result<Obj> {
        if let MonadKind::Identity = self.0.kind {
            return Ok(a.clone());
        }
        if let Some(o) = self.0.objects.lock().unwrap().get(a) {
            return Ok(o.clone());
        }
        let size = self.size(a.card());
        bounds::check_monad_card(|| format!("{}({a})", self.0.id), size)?;
        let n = a.card();
        let elems = (0..size as u32)
            .map(|t| match self.decode(n, t) {
                TVal::Id(i) => a.elem(i).clone(),
                TVal::Maybe(None) => Elem::atom("nothing"),
                TVal::Maybe(Some(i)) => Elem::pair(Elem::atom("just"), a.elem(i).clone()),
                TVal::Writer(w, i) => {
                    let MonadKind::Writer { monoid, .. } = &self.0.kind else { unreachable!() };
                    Elem::pair(monoid.elem(w).clone(), a.elem(i).clone())
                }
                TVal::State(vs) => {
                    let MonadKind::State { states } = &self.0.kind else { unreachable!() };
                    vs.iter().rev().fold(Elem::Unit, |acc, &(i, s)| {
                        Elem::pair(Elem::pair(a.elem(i).clone(), states.elem(s).clone()), acc)
                    })
                }
            })
            .collect();
        let obj = Obj::from_parts(format!("{}({a})", self.0.id), elems, Shape::Monadic(self.clone(), a.clone()));
        Ok(self.0.objects.lock().unwrap().entry(a.clone()).or_insert(obj).clone())
    }

    /// Render a `T a` value for humans, e.g. `just 1`, `(w,0)`, `{s0->(1,s1)}`.
    pub fn show(&self, a: &Obj, t: u32) -> String {
        match self.decode(a.card(), t) {
            TVal::Id(i) => a.elem(i).to_string(),
            TVal::Maybe(None) => "nothing".into(),
            TVal::Maybe(Some(i)) => format!("just {}", a.elem(i)),
            TVal::Writer(w, i) => {
                let MonadKind::Writer { monoid, .. } = &self.0.kind else { unreachable!() };
                format!("({},{})", monoid.elem(w), a.elem(i))
            }
            TVal::State(vs) => {
                let MonadKind::State { states } = &self.0.kind else { unreachable!() };
                let parts: Vec<String> = vs
                    .iter()
                    .enumerate()
                    .map(|(s, &(i, s2))| {
                        format!("{}->({},{})", states.elem(s as u32), a.elem(i), states.elem(s2))
                    })
                    .collect();
                format!("{{{}}}", parts.join(", "))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Obj {
        Obj::atoms("B", &["0", "1"]).unwrap()
    }

    #[test]
    fn state_over_two_states_has_sixteen_values_on_b() {
        let s = Obj::atoms("S", &["s0", "s1"]).unwrap();
        let st = Monad::state("St", s).unwrap();
        assert_eq!(st.size(2), 16);
        assert_eq!(st.apply(&b()).unwrap().card(), 16);
    }

    #[test]
    fn decode_encode_roundtrip() {
        let s = Obj::atoms("S", &["s0", "s1"]).unwrap();
        let w = Obj::atoms("W", &["e", "a"]).unwrap();
        let monads = vec![
            Monad::identity("Id"),
            Monad::maybe("Maybe"),
            Monad::writer("Wr", w, vec![0, 1, 1, 0], 0).unwrap(),
            Monad::state("St", s).unwrap(),
        ];
        for m in monads {
            for n in 0..4 {
                for t in 0..m.size(n) as u32 {
                    assert_eq!(m.encode(n, &m.decode(n, t)), t, "{m} n={n}");
                }
            }
        }
    }

    #[test]
    fn maybe_strength() {
        let m = Monad::maybe("Maybe");
        // a × T b with |b| = 2: (1, nothing) -> nothing, (1, just 0) -> just (1,0)
        assert_eq!(m.strength(2, 2, 1, 0), 0);
        assert_eq!(m.decode(4, m.strength(2, 2, 1, 1)), TVal::Maybe(Some(2)));
    }

    #[test]
    fn state_values_render_per_input_state() {
        let s = Obj::atoms("S", &["s0", "s1"]).unwrap();
        let st = Monad::state("St", s).unwrap();
        let t = st.unit(2, 1);
        assert_eq!(st.show(&b(), t), "{s0->(1,s0), s1->(1,s1)}");
        assert_eq!(st.as_pure(2, t), Some(1));
    }

    #[test]
    fn writer_rejects_non_monoid() {
        let w = Obj::atoms("W", &["e", "a"]).unwrap();
        assert!(Monad::writer("Bad", w, vec![0, 1, 1, 1], 1).is_err());
    }
}
