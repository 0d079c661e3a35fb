//! The finite truncation of the object class that every tabulation runs over.

use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::fincat::Obj;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    objects: Vec<Obj>,
}

impl Default for Universe {
    /// Skeletal objects of cardinality 1 to 4.
    fn default() -> Universe {
        Universe::cards(1, 4).expect("the default universe is within the default bounds")
    }
}

impl Universe {
    /// `I` first, then the given objects without duplicates.
    pub fn new(objects: impl IntoIterator<Item = Obj>) -> Universe {
        let mut out = vec![Obj::unit()];
        for o in objects {
            if !out.contains(&o) {
                out.push(o);
            }
        }
        Universe { objects: out }
    }

    /// Skeletal objects with cardinalities `lo..=hi` (and always `I`).
    pub fn cards(lo: usize, hi: usize) -> Result<Universe> {
        let objs = (lo.max(1)..=hi).map(Obj::skeletal).collect::<Result<Vec<_>>>()?;
        Ok(Universe::new(objs))
    }

    pub fn with(&self, extra: &[Obj]) -> Universe {
        Universe::new(self.objects.iter().chain(extra).cloned())
    }

    pub fn objects(&self) -> &[Obj] {
        &self.objects
    }

    pub fn contains(&self, o: &Obj) -> bool {
        self.objects.contains(o)
    }

    pub fn index_of(&self, o: &Obj) -> Option<usize> {
        self.objects.iter().position(|p| p == o)
    }

    /// The objects of cardinality at most `n`.
    pub fn restrict(&self, n: usize) -> Universe {
        Universe { objects: self.objects.iter().filter(|o| o.card() <= n).cloned().collect() }
    }

    /// The first member of the given cardinality; used to transport products
    /// back into the universe along the index-preserving bijection.
    pub fn of_card(&self, n: usize) -> Option<&Obj> {
        self.objects.iter().find(|o| o.card() == n)
    }

    pub fn index_of_card(&self, n: usize) -> Option<usize> {
        self.objects.iter().position(|o| o.card() == n)
    }

    pub fn max_card(&self) -> usize {
        self.objects.iter().map(|o| o.card()).max().unwrap_or(1)
    }

    /// A short hash of the object list, printed next to every verdict.
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        for o in &self.objects {
            h.update(o.name().as_bytes());
            h.update(b"{");
            for e in o.elems() {
                h.update(e.to_string().as_bytes());
                h.update(b",");
            }
            h.update(b"}");
        }
        let d = h.finalize();
        d.iter().take(6).map(|b| format!("{b:02x}")).collect()
    }

    pub fn describe(&self) -> String {
        let names: Vec<&str> = self.objects.iter().map(|o| o.name()).collect();
        format!("{{{}}} #{}", names.join(", "), self.fingerprint())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_universe_has_unit_first() {
        let u = Universe::default();
        assert_eq!(u.objects().len(), 4);
        assert!(u.objects()[0].is_unit());
        assert_eq!(u.of_card(3).unwrap().name(), "3");
    }

    #[test]
    fn fingerprint_tracks_contents() {
        let u = Universe::default();
        let b = Obj::atoms("B", &["0", "1"]).unwrap();
        assert_ne!(u.fingerprint(), u.with(&[b]).fingerprint());
        assert_eq!(u.fingerprint(), Universe::default().fingerprint());
    }
}
