//! Element-level structure of a finite semigroup: idempotents, the natural
//! order, chains, the center, H-classes, monogenic subsemigroups and the
//! map sending each element to the idempotent among its powers.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::search::max_compatible_set;
use crate::subset::Subset;
use crate::table::CayleyTable;

/// Shape of the monogenic subsemigroup `{x, x^2, x^3, ...}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MonogenicData {
    /// Least `i >= 1` such that `x^i` recurs later in the power sequence.
    pub index: usize,
    /// Least `r >= 1` with `x^(index + r) = x^index`.
    pub period: usize,
    /// The unique idempotent among the powers of `x`.
    pub pi: usize,
}

impl CayleyTable {
    pub fn is_idempotent(&self, x: usize) -> bool {
        self.op(x, x) == x
    }

    /// `E(X)`: the fixed points of squaring.
    pub fn idempotents(&self) -> Subset {
        Subset::from_elements(
            self.order(),
            (0..self.order()).filter(|&x| self.is_idempotent(x)),
        )
    }

    fn require_idempotent(&self, e: usize) -> Result<()> {
        self.check_element(e)?;
        if self.is_idempotent(e) {
            Ok(())
        } else {
            Err(Error::NotIdempotent(e))
        }
    }

    /// Natural order on idempotents: `e <= f` iff `ef = e`.
    pub fn natural_le(&self, e: usize, f: usize) -> Result<bool> {
        self.require_idempotent(e)?;
        self.require_idempotent(f)?;
        Ok(self.op(e, f) == e)
    }

    pub fn is_chain(&self, s: &Subset) -> bool {
        s.iter().all(|x| {
            s.iter().all(|y| {
                let p = self.op(x, y);
                p == x || p == y
            })
        })
    }

    /// Size of a largest chain, i.e. a set `C` with `xy ∈ {x, y}` for all
    /// `x, y ∈ C` (including `x = y`, so chains consist of idempotents),
    /// together with the lexicographically least such chain.
    pub fn max_chain_length(&self) -> (usize, Subset) {
        let candidates = self.idempotents().to_vec();
        let best = max_compatible_set(&candidates, usize::MAX, |x, y| {
            let (a, b) = (self.op(x, y), self.op(y, x));
            (a == x || a == y) && (b == x || b == y)
        });
        (best.len(), Subset::from_elements(self.order(), best))
    }

    /// `Z(X)`: elements commuting with everything.
    pub fn center(&self) -> Subset {
        let n = self.order();
        Subset::from_elements(
            n,
            (0..n).filter(|&z| (0..n).all(|x| self.op(x, z) == self.op(z, x))),
        )
    }

    /// `xX¹ = {x} ∪ xX`.
    pub fn principal_right_ideal(&self, x: usize) -> Subset {
        let mut s = Subset::from_elements(self.order(), (0..self.order()).map(|y| self.op(x, y)));
        s.insert(x);
        s
    }

    /// `X¹x = {x} ∪ Xx`.
    pub fn principal_left_ideal(&self, x: usize) -> Subset {
        let mut s = Subset::from_elements(self.order(), (0..self.order()).map(|y| self.op(y, x)));
        s.insert(x);
        s
    }

    /// `H_a`: elements generating the same principal left and right ideals as `a`.
    pub fn h_class(&self, a: usize) -> Subset {
        let n = self.order();
        let right = self.principal_right_ideal(a);
        let left = self.principal_left_ideal(a);
        Subset::from_elements(
            n,
            (0..n).filter(|&x| {
                self.principal_right_ideal(x) == right && self.principal_left_ideal(x) == left
            }),
        )
    }

    /// All distinct H-classes, ordered by least member.
    pub fn h_classes(&self) -> Vec<Subset> {
        let mut seen = Subset::empty(self.order());
        let mut out = Vec::new();
        for a in 0..self.order() {
            if !seen.contains(a) {
                let h = self.h_class(a);
                seen = seen.union(&h);
                out.push(h);
            }
        }
        out
    }

    /// `H(X)`: the union of the maximal subgroups `H_e`, `e ∈ E(X)`.
    pub fn clifford_part(&self) -> Subset {
        self.idempotents()
            .iter()
            .fold(Subset::empty(self.order()), |acc, e| {
                acc.union(&self.h_class(e))
            })
    }

    pub fn monogenic_data(&self, x: usize) -> MonogenicData {
        let mut first_seen = vec![0usize; self.order()];
        let mut powers = vec![usize::MAX];
        let mut p = x;
        let mut k = 1;
        loop {
            if first_seen[p] != 0 {
                let index = first_seen[p];
                let period = k - index;
                let pi_exp = index.div_ceil(period) * period;
                return MonogenicData {
                    index,
                    period,
                    pi: powers[pi_exp],
                };
            }
            first_seen[p] = k;
            powers.push(p);
            p = self.op(p, x);
            k += 1;
        }
    }

    /// `π(x)` for every element. Requires every idempotent to be central.
    pub fn pi_map(&self) -> Result<Vec<usize>> {
        let center = self.center();
        if let Some(e) = self.idempotents().iter().find(|&e| !center.contains(e)) {
            return Err(Error::NonCentralIdempotent(e));
        }
        Ok((0..self.order())
            .map(|x| self.monogenic_data(x).pi)
            .collect())
    }

    /// `√∞A = {x : x^n ∈ A for some n >= 1}`.
    pub fn root_inf(&self, a: &Subset) -> Subset {
        let n = self.order();
        let mut out = Subset::empty(n);
        for x in 0..n {
            let m = self.monogenic_data(x);
            let mut p = x;
            for _ in 0..m.index + m.period {
                if a.contains(p) {
                    out.insert(x);
                    break;
                }
                p = self.op(p, x);
            }
        }
        out
    }

    /// `Z_k = {z ∈ Z(X) : z^k ∈ H_e}` for `k = 1..=n_max`.
    pub fn z_sets(&self, e: usize, n_max: usize) -> Result<Vec<Subset>> {
        self.require_idempotent(e)?;
        if n_max < 1 {
            return Err(Error::InvalidArgument("n_max must be at least 1".into()));
        }
        let h = self.h_class(e);
        let center = self.center();
        Ok((1..=n_max)
            .map(|k| {
                Subset::from_elements(
                    self.order(),
                    center.iter().filter(|&z| h.contains(self.pow(z, k))),
                )
            })
            .collect())
    }

    /// Least `n >= 1` with `x^n = e` for every `x` in the group `H_e`.
    pub fn group_exponent(&self, e: usize) -> Result<usize> {
        self.require_idempotent(e)?;
        Ok(self
            .h_class(e)
            .iter()
            .map(|x| self.monogenic_data(x).period)
            .fold(1, lcm))
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
