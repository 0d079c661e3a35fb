use super::bounds;
use super::morphism::{Cat, Morphism};
use super::object::Obj;
use crate::error::{mismatch, Result};

/// All morphisms `a → b` in a category, ranked lexicographically by table
/// (the first source element is the most significant digit).
#[derive(Clone, Debug)]
pub struct HomSet {
    src: Obj,
    tgt: Obj,
    cat: Cat,
    radix: u64,
    size: u64,
}

impl HomSet {
    pub fn new(cat: &Cat, a: &Obj, b: &Obj) -> Result<HomSet> {
        let radix = cat.codomain_size(b);
        let size = (radix).checked_pow(a.card() as u32).unwrap_or(u128::MAX);
        bounds::check_hom(|| format!("hom-set {a} -> {b} in {cat}"), size)?;
        Ok(HomSet { src: a.clone(), tgt: b.clone(), cat: cat.clone(), radix: radix as u64, size: size as u64 })
    }

    pub fn len(&self) -> u64 {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
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

    /// Write the table of the `rank`-th morphism into `out`.
    pub fn table_into(&self, mut rank: u64, out: &mut [u32]) {
        for slot in out.iter_mut().rev() {
            *slot = (rank % self.radix) as u32;
            rank /= self.radix;
        }
    }

    pub fn get(&self, rank: u64) -> Morphism {
        let mut table = vec![0u32; self.src.card()];
        self.table_into(rank, &mut table);
        Morphism::tabulate(&self.src, &self.tgt, self.cat.clone(), |i| table[i as usize])
    }

    pub fn rank_of_table(&self, table: &[u32]) -> u64 {
        table.iter().fold(0u64, |acc, &v| acc * self.radix + v as u64)
    }

    pub fn rank(&self, f: &Morphism) -> Result<u64> {
        if f.src() != &self.src || f.tgt() != &self.tgt {
            return Err(mismatch(format!("{f} is not in hom({}, {})", self.src, self.tgt)));
        }
        let f = f.lift_to(&self.cat)?;
        Ok(self.rank_of_table(f.table()))
    }

    pub fn iter(&self) -> impl Iterator<Item = Morphism> + '_ {
        (0..self.size).map(move |r| self.get(r))
    }
}

/// Every morphism `a → b` in canonical order.
pub fn enumerate_homs(cat: &Cat, a: &Obj, b: &Obj) -> Result<Vec<Morphism>> {
    let h = HomSet::new(cat, a, b)?;
    Ok(h.iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::Monad;

    fn b() -> Obj {
        Obj::atoms("B", &["0", "1"]).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_homs(&Cat::Base, &b(), &b()).unwrap().len(), 4);
        assert_eq!(enumerate_homs(&Cat::Base, &Obj::unit(), &b()).unwrap().len(), 2);
        let maybe = Cat::Kleisli(Monad::maybe("Maybe"));
        assert_eq!(enumerate_homs(&maybe, &Obj::unit(), &b()).unwrap().len(), 3);
    }

    #[test]
    fn order_is_lexicographic() {
        let tables: Vec<Vec<u32>> =
            enumerate_homs(&Cat::Base, &b(), &b()).unwrap().iter().map(|f| f.table().to_vec()).collect();
        assert_eq!(tables, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn rank_inverts_get() {
        let h = HomSet::new(&Cat::Base, &Obj::skeletal(3).unwrap(), &b()).unwrap();
        for r in 0..h.len() {
            assert_eq!(h.rank(&h.get(r)).unwrap(), r);
        }
    }

    #[test]
    fn hom_bound() {
        let four = Obj::skeletal(4).unwrap();
        let p = Obj::product(&four, &four).unwrap();
        assert!(HomSet::new(&Cat::Base, &p, &four).is_err());
    }
}
