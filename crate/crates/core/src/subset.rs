use std::fmt;

use serde::Serialize;

/// A set of element indices drawn from `0..order`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    mask: Vec<bool>,
}

impl Subset {
    pub fn empty(order: usize) -> Self {
        Subset {
            mask: vec![false; order],
        }
    }

    pub fn full(order: usize) -> Self {
        Subset {
            mask: vec![true; order],
        }
    }

    /// Builds a subset from element indices. Panics on an index `>= order`.
    pub fn from_elements(order: usize, elements: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Subset::empty(order);
        for x in elements {
            s.insert(x);
        }
        s
    }

    /// Subset whose members are the set bits of `mask`. Requires `order <= 64`.
    pub fn from_mask(order: usize, mask: u64) -> Self {
        assert!(order <= 64, "bitmask subsets support at most 64 elements");
        Subset {
            mask: (0..order).map(|i| mask >> i & 1 == 1).collect(),
        }
    }

    /// Bitmask encoding, bit `i` set iff `i` is a member. Requires `order <= 64`.
    pub fn to_mask(&self) -> u64 {
        assert!(
            self.order() <= 64,
            "bitmask subsets support at most 64 elements"
        );
        self.iter().fold(0u64, |m, i| m | 1 << i)
    }

    /// Size of the ambient carrier.
    pub fn order(&self) -> usize {
        self.mask.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, x: usize) -> bool {
        assert!(x < self.mask.len(), "element {x} out of range");
        !std::mem::replace(&mut self.mask[x], true)
    }

    pub fn remove(&mut self, x: usize) -> bool {
        x < self.mask.len() && std::mem::replace(&mut self.mask[x], false)
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.mask.iter().any(|&b| b)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    pub fn union(&self, other: &Subset) -> Subset {
        Subset {
            mask: self
                .mask
                .iter()
                .zip(&other.mask)
                .map(|(a, b)| *a || *b)
                .collect(),
        }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        Subset {
            mask: self
                .mask
                .iter()
                .zip(&other.mask)
                .map(|(a, b)| *a && *b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        Subset {
            mask: self
                .mask
                .iter()
                .zip(&other.mask)
                .map(|(a, b)| *a && !*b)
                .collect(),
        }
    }

    pub fn complement(&self) -> Subset {
        Subset {
            mask: self.mask.iter().map(|b| !b).collect(),
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
