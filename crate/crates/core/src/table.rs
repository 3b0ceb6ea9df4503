//! Finite semigroups given by their operation tables.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::subset::Subset;

/// An `n × n` operation table over the element indices `0..n`.
///
/// Row index is the left operand. Construction only checks that entries are
/// in range; associativity is reported by [`CayleyTable::validate`] and is
/// assumed by every other operation in this crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    order: usize,
    cells: Vec<usize>,
}

/// Outcome of [`CayleyTable::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub associative: bool,
    pub commutative: bool,
    /// Lexicographically first `(x, y, z)` with `(xy)z != x(yz)`.
    pub associativity_witness: Option<(usize, usize, usize)>,
    /// Lexicographically first `(x, y)` with `xy != yx`.
    pub commutativity_witness: Option<(usize, usize)>,
}

impl CayleyTable {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::MalformedTable(
                "a table needs at least one element".into(),
            ));
        }
        let mut cells = Vec::with_capacity(order * order);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != order {
                return Err(Error::MalformedTable(format!(
                    "row {row} has {} entries, expected {order}",
                    r.len()
                )));
            }
            for (col, value) in r.into_iter().enumerate() {
                if value >= order {
                    return Err(Error::EntryOutOfRange {
                        row,
                        col,
                        value,
                        order,
                    });
                }
                cells.push(value);
            }
        }
        Ok(CayleyTable { order, cells })
    }

    /// Table with `x*y = f(x, y)`. Panics if `order == 0` or `f` leaves the range.
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        assert!(order > 0, "a table needs at least one element");
        let mut cells = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                let v = f(x, y);
                assert!(v < order, "entry {v} at ({x}, {y}) out of range");
                cells.push(v);
            }
        }
        CayleyTable { order, cells }
    }

    /// The cyclic group `Z_n` under addition mod `n`.
    pub fn cyclic_group(n: usize) -> Self {
        Self::from_fn(n, |x, y| (x + y) % n)
    }

    /// The chain `{0 < 1 < ... < n-1}` under `min`.
    pub fn chain(n: usize) -> Self {
        Self::from_fn(n, |x, y| x.min(y))
    }

    /// The null semigroup: every product is `0`.
    pub fn null(n: usize) -> Self {
        Self::from_fn(n, |_, _| 0)
    }

    /// Bottom `0` below `n - 1` pairwise incomparable idempotents.
    pub fn antichain_with_zero(n: usize) -> Self {
        Self::from_fn(n, |x, y| if x == y { x } else { 0 })
    }

    /// Left-zero band: `x*y = x`.
    pub fn left_zero(n: usize) -> Self {
        Self::from_fn(n, |x, _| x)
    }

    /// Taimanov's operation on `{0, .., n-1}`: distinct elements outside
    /// `{0, 1}` multiply to `1`, every other product is `0`.
    pub fn taimanov(n: usize) -> Self {
        Self::from_fn(n, |x, y| usize::from(x != y && x >= 2 && y >= 2))
    }

    /// Componentwise product, element `(a, b)` encoded as `a * |right| + b`.
    pub fn direct_product(&self, right: &CayleyTable) -> CayleyTable {
        let m = right.order;
        CayleyTable::from_fn(self.order * m, |x, y| {
            self.op(x / m, y / m) * m + right.op(x % m, y % m)
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.order + y]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: x,
                order: self.order,
            })
        }
    }

    pub(crate) fn check_subset(&self, s: &Subset) -> Result<()> {
        if s.order() == self.order {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "subset over {} elements used with a table of order {}",
                s.order(),
                self.order
            )))
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.order;
        let mut associativity_witness = None;
        'outer: for x in 0..n {
            for y in 0..n {
                let xy = self.op(x, y);
                for z in 0..n {
                    if self.op(xy, z) != self.op(x, self.op(y, z)) {
                        associativity_witness = Some((x, y, z));
                        break 'outer;
                    }
                }
            }
        }
        let commutativity_witness = (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .find(|&(x, y)| self.op(x, y) != self.op(y, x));
        ValidationReport {
            associative: associativity_witness.is_none(),
            commutative: commutativity_witness.is_none(),
            associativity_witness,
            commutativity_witness,
        }
    }

    pub fn is_associative(&self) -> bool {
        self.validate().associative
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|x| (x + 1..self.order).all(|y| self.op(x, y) == self.op(y, x)))
    }

    /// Fails with the associativity witness, if any.
    pub fn require_associative(&self) -> Result<()> {
        match self.validate().associativity_witness {
            None => Ok(()),
            Some((x, y, z)) => Err(Error::NotAssociative(x, y, z)),
        }
    }

    pub fn require_commutative(&self) -> Result<()> {
        match self.validate().commutativity_witness {
            None => Ok(()),
            Some((x, y)) => Err(Error::NotCommutative(x, y)),
        }
    }

    /// `x^k` for `k >= 1`.
    pub fn pow(&self, x: usize, k: usize) -> usize {
        assert!(k >= 1, "powers start at 1");
        (1..k).fold(x, |acc, _| self.op(acc, x))
    }

    /// `AB = {ab : a in A, b in B}`.
    pub fn product_set(&self, a: &Subset, b: &Subset) -> Subset {
        let mut out = Subset::empty(self.order);
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.op(x, y));
            }
        }
        out
    }

    pub fn is_closed(&self, s: &Subset) -> bool {
        s.iter()
            .all(|x| s.iter().all(|y| s.contains(self.op(x, y))))
    }

    /// Restriction to a nonempty subsemigroup, with the embedding of the new
    /// indices into the old ones. `None` if `s` is empty or not closed.
    pub fn restrict(&self, s: &Subset) -> Option<(CayleyTable, Vec<usize>)> {
        if s.is_empty() || !self.is_closed(s) {
            return None;
        }
        let embed = s.to_vec();
        let mut index = vec![usize::MAX; self.order];
        for (i, &x) in embed.iter().enumerate() {
            index[x] = i;
        }
        let t = CayleyTable::from_fn(embed.len(), |i, j| index[self.op(embed[i], embed[j])]);
        Some((t, embed))
    }

    /// Relabels elements: element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> CayleyTable {
        let mut inv = vec![0; self.order];
        for (x, &p) in perm.iter().enumerate() {
            inv[p] = x;
        }
        CayleyTable::from_fn(self.order, |i, j| perm[self.op(inv[i], inv[j])])
    }

    pub(crate) fn cells(&self) -> &[usize] {
        &self.cells
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyTable{:?}", self.rows())
    }
}
