//! Sets of unordered color pairs {a, b} with 1 <= a < b <= k, stored as a
//! triangular boolean array for O(1) membership.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSet {
    k: u32,
    bits: Vec<bool>,
    count: usize,
}

pub(crate) fn tri_index(a: u32, b: u32) -> usize {
    debug_assert!(a < b);
    let (a, b) = (a as usize, b as usize);
    (b - 1) * (b - 2) / 2 + (a - 1)
}

impl PairSet {
    pub fn new(k: u32) -> Self {
        let cap = Self::capacity(k);
        PairSet {
            k,
            bits: vec![false; cap],
            count: 0,
        }
    }

    /// All C(k,2) pairs present.
    pub fn full(k: u32) -> Self {
        let cap = Self::capacity(k);
        PairSet {
            k,
            bits: vec![true; cap],
            count: cap,
        }
    }

    pub fn capacity(k: u32) -> usize {
        let k = k as usize;
        k * k.saturating_sub(1) / 2
    }

    pub fn from_pairs(k: u32, pairs: &[(u32, u32)]) -> Result<Self> {
        let mut set = PairSet::new(k);
        for &(a, b) in pairs {
            if a == b || a == 0 || b == 0 || a > k || b > k {
                return Err(Error::BadPair { a, b, k });
            }
            set.insert(a.min(b), a.max(b));
        }
        Ok(set)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Inserts {a, b}; returns true when the pair was not present before.
    /// Callers must pass a < b within 1..=k.
    pub fn insert(&mut self, a: u32, b: u32) -> bool {
        let idx = tri_index(a, b);
        if self.bits[idx] {
            false
        } else {
            self.bits[idx] = true;
            self.count += 1;
            true
        }
    }

    pub fn contains(&self, a: u32, b: u32) -> bool {
        if a == b || a == 0 || b == 0 || a > self.k || b > self.k {
            return false;
        }
        self.bits[tri_index(a.min(b), a.max(b))]
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (2..=self.k)
            .flat_map(move |b| (1..b).map(move |a| (a, b)))
            .filter(move |&(a, b)| self.bits[tri_index(a, b)])
    }

    pub fn remove_all(&mut self, other: &PairSet) {
        for (a, b) in other.iter() {
            if a <= self.k && b <= self.k {
                let idx = tri_index(a, b);
                if self.bits[idx] {
                    self.bits[idx] = false;
                    self.count -= 1;
                }
            }
        }
    }

    pub fn is_subset_of(&self, other: &PairSet) -> bool {
        self.iter().all(|(a, b)| other.contains(a, b))
    }
}

impl Serialize for PairSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.count))?;
        for pair in self.iter() {
            seq.serialize_element(&[pair.0, pair.1])?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_and_query() {
        let mut s = PairSet::new(5);
        assert!(s.insert(1, 3));
        assert!(!s.insert(1, 3));
        assert!(s.contains(3, 1));
        assert!(!s.contains(2, 3));
        assert!(!s.contains(1, 6));
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn full_and_difference() {
        let mut full = PairSet::full(4);
        assert_eq!(full.len(), 6);
        let part = PairSet::from_pairs(4, &[(1, 2), (3, 4)]).unwrap();
        full.remove_all(&part);
        assert_eq!(full.len(), 4);
        assert!(!full.contains(1, 2));
        assert!(full.contains(1, 3));
    }

    #[test]
    fn iter_is_sorted_and_consistent() {
        let s = PairSet::from_pairs(6, &[(5, 2), (1, 6), (3, 4)]).unwrap();
        let listed: Vec<_> = s.iter().collect();
        assert_eq!(listed, vec![(3, 4), (2, 5), (1, 6)]);
    }

    #[test]
    fn rejects_bad_pairs() {
        assert!(PairSet::from_pairs(4, &[(2, 2)]).is_err());
        assert!(PairSet::from_pairs(4, &[(0, 1)]).is_err());
        assert!(PairSet::from_pairs(4, &[(1, 5)]).is_err());
    }

    #[test]
    fn k1_has_no_pairs() {
        let s = PairSet::full(1);
        assert!(s.is_empty());
        assert_eq!(PairSet::capacity(1), 0);
    }
}
