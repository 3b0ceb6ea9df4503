//! Finite subsemigroups of described semigroups, for cross-checking the
//! symbolic predicates against table computations.
//!
//! Per constructor, within a budget `b`:
//! - groups: a direct sum of cyclic subgroups (`Z_{p^k} ⊂ Z_{p^∞}`, summands
//!   of towers, copies of cyclic factors), chosen greedily left to right;
//!   `Z` contributes only its trivial subgroup;
//! - `chain-omega`: the initial segment `{0 < .. < b-1}`;
//! - `antichain-omega-zero`: the bottom and `b - 1` atoms;
//! - null and Taimanov: the carrier `{0, .., b-1}`, closed under the operation;
//! - finite tables larger than `b`: a greedily grown subsemigroup;
//! - products: a product of truncations of the factors;
//! - adjoined elements: the adjoined element plus a truncation of the rest.

use super::{Descriptor, FactorKind, GroupSpec, Multiplicity, SemilatticeSpec};
use crate::error::{Error, Result};
use crate::subset::Subset;
use crate::table::CayleyTable;

pub fn truncate(d: &Descriptor, budget: usize) -> Result<CayleyTable> {
    if budget == 0 {
        return Err(Error::InvalidArgument(
            "truncation budget must be at least 1".into(),
        ));
    }
    Ok(match d {
        Descriptor::FiniteTable(t) => fit_finite(t.table(), budget),
        Descriptor::Semilattice(SemilatticeSpec::FinitePoset(t)) => fit_finite(t.table(), budget),
        Descriptor::Group(g) => {
            g.check()?;
            cyclic_sum(&group_components(g, budget))
        }
        Descriptor::Semilattice(SemilatticeSpec::OmegaChain) => CayleyTable::chain(budget),
        Descriptor::Semilattice(SemilatticeSpec::OmegaAntichainZero) => {
            CayleyTable::antichain_with_zero(budget)
        }
        Descriptor::Null => CayleyTable::null(budget),
        Descriptor::Taimanov => CayleyTable::taimanov(budget),
        Descriptor::Product(a, b) => {
            let left = truncate(a, isqrt(budget))?;
            let right = truncate(b, budget / left.order())?;
            left.direct_product(&right)
        }
        Descriptor::AdjoinZero(inner) => {
            if budget == 1 {
                CayleyTable::null(1)
            } else {
                adjoin(&truncate(inner, budget - 1)?, true)
            }
        }
        Descriptor::AdjoinIdentity(inner) => {
            if budget == 1 {
                CayleyTable::null(1)
            } else {
                adjoin(&truncate(inner, budget - 1)?, false)
            }
        }
    })
}

/// Orders of the cyclic summands of a finite subgroup with at most `budget` elements.
fn group_components(g: &GroupSpec, budget: usize) -> Vec<usize> {
    let mut size = 1usize;
    let mut parts = Vec::new();
    for f in &g.factors {
        let copies = match f.multiplicity {
            Multiplicity::Finite(k) => k,
            Multiplicity::Omega => u64::MAX,
        };
        for _ in 0..copies {
            let room = budget / size;
            let part = match f.kind {
                FactorKind::Cyclic(n) => usize::try_from(n).ok().filter(|&n| n <= room),
                FactorKind::Prufer(p) | FactorKind::CyclicTower(p) => largest_power(p, room),
                FactorKind::Integers => None,
            };
            match part {
                Some(m) if m > 1 => {
                    size *= m;
                    parts.push(m);
                }
                _ => break,
            }
        }
    }
    parts
}

/// Largest `p^k` with `k >= 1` and `p^k <= room`.
fn largest_power(p: u64, room: usize) -> Option<usize> {
    let p = usize::try_from(p).ok()?;
    if p > room {
        return None;
    }
    let mut q = p;
    while let Some(next) = q.checked_mul(p).filter(|&x| x <= room) {
        q = next;
    }
    Some(q)
}

fn cyclic_sum(parts: &[usize]) -> CayleyTable {
    parts.iter().fold(CayleyTable::cyclic_group(1), |acc, &m| {
        acc.direct_product(&CayleyTable::cyclic_group(m))
    })
}

fn isqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r.max(1)
}

/// New zero (or identity) at index `n`.
fn adjoin(t: &CayleyTable, zero: bool) -> CayleyTable {
    let n = t.order();
    CayleyTable::from_fn(n + 1, |x, y| match (x == n, y == n) {
        (false, false) => t.op(x, y),
        _ if zero => n,
        (true, true) => n,
        (true, false) => y,
        (false, true) => x,
    })
}

fn fit_finite(t: &CayleyTable, budget: usize) -> CayleyTable {
    if t.order() <= budget {
        return t.clone();
    }
    let e = (0..t.order())
        .find(|&x| t.is_idempotent(x))
        .expect("finite semigroups have idempotents");
    let mut current = Subset::from_elements(t.order(), [e]);
    for x in 0..t.order() {
        if current.contains(x) {
            continue;
        }
        let mut grown = current.clone();
        grown.insert(x);
        let grown = closure(t, grown);
        if grown.len() <= budget {
            current = grown;
        }
    }
    t.restrict(&current).expect("closed by construction").0
}

fn closure(t: &CayleyTable, mut s: Subset) -> Subset {
    loop {
        let next = s.union(&t.product_set(&s, &s));
        if next == s {
            return s;
        }
        s = next;
    }
}
