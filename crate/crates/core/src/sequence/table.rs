use num_bigint::BigUint;

use crate::admissible::{partitioned_count_with, Family};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::par::{self, Strategy};

/// How an entry was obtained.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Provenance {
    Enumerated,
    Recursion,
    Imported,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Entry {
    pub value: BigUint,
    pub provenance: Provenance,
}

/// Values of one family at indices `1..=len`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SequenceTable {
    family: Family,
    entries: Vec<Entry>,
}

impl SequenceTable {
    pub fn new(family: Family) -> Self {
        SequenceTable {
            family,
            entries: Vec::new(),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Largest stored index; 0 when empty.
    pub fn len(&self) -> u32 {
        self.entries.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, k: u32) -> Option<&Entry> {
        k.checked_sub(1).and_then(|i| self.entries.get(i as usize))
    }

    pub fn get(&self, k: u32) -> Option<&BigUint> {
        self.entry(k).map(|e| &e.value)
    }

    pub fn require(&self, k: u32) -> Result<&BigUint> {
        self.get(k).ok_or(Error::MissingSequenceData {
            family: self.family.name(),
            index: k,
        })
    }

    /// Appends the entry at index `len + 1`.
    pub fn push(&mut self, value: BigUint, provenance: Provenance) {
        self.entries.push(Entry { value, provenance });
    }

    /// Drops entries above `len`.
    pub fn truncate(&mut self, len: u32) {
        self.entries.truncate(len as usize);
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Entry)> {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, e)| (i as u32 + 1, e))
    }
}

/// The four families side by side.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TableSet {
    tables: [SequenceTable; 4],
}

impl Default for TableSet {
    fn default() -> Self {
        TableSet {
            tables: Family::ALL.map(SequenceTable::new),
        }
    }
}

fn slot(family: Family) -> usize {
    Family::ALL
        .iter()
        .position(|&f| f == family)
        .expect("listed")
}

impl TableSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, family: Family) -> &SequenceTable {
        &self.tables[slot(family)]
    }

    pub fn get_mut(&mut self, family: Family) -> &mut SequenceTable {
        &mut self.tables[slot(family)]
    }

    pub fn value(&self, family: Family, k: u32) -> Result<&BigUint> {
        self.get(family).require(k)
    }

    /// Extends `family` through index `max`.
    ///
    /// `A` and `A^σ` are always enumerated. `A′` and `A′^σ` are enumerated up
    /// to their direct-scan limits and recursion-filled beyond.
    pub fn fill(
        &mut self,
        family: Family,
        max: u32,
        limits: &Limits,
        strategy: Strategy,
    ) -> Result<()> {
        for k in self.get(family).len() + 1..=max {
            let direct = match family {
                Family::A | Family::ASigma => true,
                Family::APrime => k <= limits.a_prime_k,
                Family::ASigmaPrime => k <= limits.a_sigma_prime_k,
            };
            let entry = if direct {
                let v =
                    partitioned_count_with(family, k, par::default_partitions(), strategy, limits)?;
                (v, Provenance::Enumerated)
            } else {
                (
                    self.recurse(family, k, limits, strategy)?,
                    Provenance::Recursion,
                )
            };
            self.get_mut(family).push(entry.0, entry.1);
        }
        Ok(())
    }

    /// `A′_{2m} = 2A′_{2m−1}`, `A′_{2m+1} = 2A′_{2m} − A_m`, and the σ forms
    /// `A′^σ_{2m} = A′^σ_{2m−1}`, `A′^σ_{2m+1} = 2A′^σ_{2m} − A^σ_m`.
    fn recurse(
        &mut self,
        family: Family,
        k: u32,
        limits: &Limits,
        strategy: Strategy,
    ) -> Result<BigUint> {
        let base = match family {
            Family::APrime => Family::A,
            Family::ASigmaPrime => Family::ASigma,
            _ => unreachable!("only primed families recurse"),
        };
        let prev = self.value(family, k - 1)?.clone();
        if k.is_multiple_of(2) {
            return Ok(if family == Family::APrime {
                prev * 2u32
            } else {
                prev
            });
        }
        let m = (k - 1) / 2;
        self.fill(base, m, limits, strategy)?;
        let sub = self.value(base, m)?;
        Ok(prev * 2u32 - sub)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(t: &TableSet, f: Family) -> Vec<u64> {
        t.get(f)
            .iter()
            .map(|(_, e)| e.value.to_u64_digits().first().copied().unwrap_or(0))
            .collect()
    }

    #[test]
    fn recursion_fill_matches_enumeration() {
        let lim = Limits {
            a_prime_k: 5,
            a_sigma_prime_k: 7,
            ..Limits::default()
        };
        let mut t = TableSet::new();
        t.fill(Family::APrime, 12, &lim, Strategy::Sequential)
            .unwrap();
        t.fill(Family::ASigmaPrime, 33, &lim, Strategy::Sequential)
            .unwrap();
        assert_eq!(
            values(&t, Family::APrime),
            [1, 2, 3, 6, 10, 20, 37, 74, 140, 280, 542, 1084]
        );
        let sp = values(&t, Family::ASigmaPrime);
        assert_eq!((sp[16], sp[32]), (73, 16194));
        assert_eq!(
            t.get(Family::APrime).entry(5).unwrap().provenance,
            Provenance::Enumerated
        );
        assert_eq!(
            t.get(Family::APrime).entry(6).unwrap().provenance,
            Provenance::Recursion
        );
        assert_eq!(t.get(Family::A).len(), 5);
    }

    #[test]
    fn missing_data() {
        let t = TableSet::new();
        assert_eq!(
            t.value(Family::A, 3),
            Err(Error::MissingSequenceData {
                family: "A",
                index: 3
            })
        );
        assert!(t.get(Family::A).get(0).is_none());
    }
}
