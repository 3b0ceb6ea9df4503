//! The semigroup of filters on a finite semigroup.
//!
//! On a finite carrier every filter is generated by a single nonempty set, so
//! the filter semigroup is the power semigroup of nonempty subsets under the
//! elementwise product `UV = {uv : u ∈ U, v ∈ V}`. Principal ultrafilters are
//! the singletons. Subset `U` sits at index `mask(U) - 1`.

use crate::error::{Error, Result};
use crate::subset::Subset;
use crate::table::CayleyTable;

/// Largest base order accepted by [`power_semigroup`]; the result has
/// `2^n - 1` elements and a table with `(2^n - 1)^2` cells.
pub const MAX_POWER_BASE: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSemigroup {
    pub base: CayleyTable,
    pub table: CayleyTable,
}

impl PowerSemigroup {
    pub fn element_count(&self) -> usize {
        self.table.order()
    }

    pub fn index_of(&self, u: &Subset) -> Result<usize> {
        if u.is_empty() || u.order() != self.base.order() {
            return Err(Error::InvalidArgument(format!(
                "{u} is not a nonempty subset of the base"
            )));
        }
        Ok(u.to_mask() as usize - 1)
    }

    pub fn subset_at(&self, index: usize) -> Subset {
        Subset::from_mask(self.base.order(), index as u64 + 1)
    }

    /// Index of the singleton `{x}`.
    pub fn singleton(&self, x: usize) -> usize {
        (1usize << x) - 1
    }
}

pub fn power_semigroup(base: &CayleyTable) -> Result<PowerSemigroup> {
    let n = base.order();
    if n > MAX_POWER_BASE {
        return Err(Error::SizeLimit(format!(
            "power semigroup supports base order <= {MAX_POWER_BASE}, got {n}"
        )));
    }
    // left_times[x][V] = mask of xV, built by adding the lowest member of V last
    let count = (1usize << n) - 1;
    let mut left_times = vec![0u64; n * (count + 1)];
    for x in 0..n {
        for mask in 1..=count {
            let low = mask.trailing_zeros() as usize;
            let prev = left_times[x * (count + 1) + (mask & (mask - 1))];
            left_times[x * (count + 1) + mask] = prev | 1 << base.op(x, low);
        }
    }
    let table = CayleyTable::from_fn(count, |i, j| {
        let (u, v) = (i + 1, j + 1);
        let prod = (0..n)
            .filter(|x| u >> x & 1 == 1)
            .fold(0u64, |acc, x| acc | left_times[x * (count + 1) + v]);
        prod as usize - 1
    });
    Ok(PowerSemigroup {
        base: base.clone(),
        table,
    })
}

/// `UV` for nonempty `U`, `V`.
pub fn subset_product(base: &CayleyTable, u: &Subset, v: &Subset) -> Result<Subset> {
    base.check_subset(u)?;
    base.check_subset(v)?;
    if u.is_empty() || v.is_empty() {
        return Err(Error::InvalidArgument(
            "subset products are taken over nonempty sets".into(),
        ));
    }
    Ok(base.product_set(u, v))
}

/// The basic open set `⟨U⟩`: filters containing `U`, i.e. every nonempty
/// `B ⊆ U`, ordered by bitmask.
pub fn basic_open(u: &Subset) -> Result<Vec<Subset>> {
    if u.is_empty() {
        return Err(Error::InvalidArgument(
            "basic open sets need a nonempty U".into(),
        ));
    }
    if u.order() > 64 {
        return Err(Error::SizeLimit(
            "basic open sets need a carrier of at most 64".into(),
        ));
    }
    let full = u.to_mask();
    let mut out = Vec::new();
    // enumerate submasks in increasing order
    let mut sub = 0u64;
    loop {
        sub = (sub.wrapping_sub(full)) & full;
        if sub == 0 {
            break;
        }
        out.push(Subset::from_mask(u.order(), sub));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, xs: &[usize]) -> Subset {
        Subset::from_elements(n, xs.iter().copied())
    }

    #[test]
    fn two_chain_gives_three_chain() {
        let p = power_semigroup(&CayleyTable::chain(2)).unwrap();
        assert_eq!(p.element_count(), 3);
        // {0} <= {0,1} <= {1}
        let (bottom, mid, top) = (
            p.index_of(&set(2, &[0])).unwrap(),
            p.index_of(&set(2, &[0, 1])).unwrap(),
            p.index_of(&set(2, &[1])).unwrap(),
        );
        assert_eq!(p.table.op(bottom, mid), bottom);
        assert_eq!(p.table.op(mid, top), mid);
        assert_eq!(p.table.op(bottom, top), bottom);
        assert_eq!(p.table.idempotents().len(), 3);
        assert_eq!(p.table.max_chain_length().0, 3);
    }

    #[test]
    fn element_counts() {
        assert_eq!(
            power_semigroup(&CayleyTable::chain(3))
                .unwrap()
                .element_count(),
            7
        );
        assert!(matches!(
            power_semigroup(&CayleyTable::null(MAX_POWER_BASE + 1)),
            Err(Error::SizeLimit(_))
        ));
    }

    #[test]
    fn null_base_products_are_zero() {
        let p = power_semigroup(&CayleyTable::null(3)).unwrap();
        let zero = p.singleton(0);
        for i in 0..p.element_count() {
            for j in 0..p.element_count() {
                assert_eq!(p.table.op(i, j), zero);
            }
        }
    }

    #[test]
    fn table_matches_direct_products() {
        let base = CayleyTable::taimanov(4);
        let p = power_semigroup(&base).unwrap();
        for i in 0..p.element_count() {
            for j in 0..p.element_count() {
                let (u, v) = (p.subset_at(i), p.subset_at(j));
                assert_eq!(p.subset_at(p.table.op(i, j)), base.product_set(&u, &v));
            }
        }
    }

    #[test]
    fn subset_product_examples() {
        let l3 = CayleyTable::chain(3);
        assert_eq!(
            subset_product(&l3, &set(3, &[1, 2]), &set(3, &[0])).unwrap(),
            set(3, &[0])
        );
        let z3 = CayleyTable::cyclic_group(3);
        assert_eq!(
            subset_product(&z3, &set(3, &[0, 1]), &set(3, &[0, 1])).unwrap(),
            Subset::full(3)
        );
        let t5 = CayleyTable::taimanov(5);
        assert_eq!(
            subset_product(&t5, &set(5, &[3]), &set(5, &[4])).unwrap(),
            set(5, &[1])
        );
        assert!(subset_product(&t5, &Subset::empty(5), &set(5, &[4])).is_err());
    }

    #[test]
    fn basic_open_examples() {
        assert_eq!(
            basic_open(&set(3, &[0, 1])).unwrap(),
            vec![set(3, &[0]), set(3, &[1]), set(3, &[0, 1])]
        );
        assert_eq!(basic_open(&set(3, &[2])).unwrap(), vec![set(3, &[2])]);
        assert_eq!(basic_open(&Subset::full(4)).unwrap().len(), 15);
        assert!(basic_open(&Subset::empty(3)).is_err());
    }
}
