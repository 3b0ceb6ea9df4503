use crate::search::max_compatible_set;
use crate::subset::Subset;
use crate::table::CayleyTable;

/// A largest set `A` with `|A| >= 2`, `|A| <= max_subset` and `AA` a
/// singleton; ties go to the lexicographically least set.
pub fn singleton_square_scan(table: &CayleyTable, max_subset: usize) -> Option<Subset> {
    if max_subset < 2 {
        return None;
    }
    let n = table.order();
    let mut best: Vec<usize> = Vec::new();
    for z in 0..n {
        let candidates: Vec<usize> = (0..n).filter(|&a| table.op(a, a) == z).collect();
        let found = max_compatible_set(&candidates, max_subset, |a, b| {
            table.op(a, b) == z && table.op(b, a) == z
        });
        if found.len() > best.len() || (found.len() == best.len() && found < best) {
            best = found;
        }
    }
    (best.len() >= 2).then(|| Subset::from_elements(n, best))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(table: &CayleyTable, max_subset: usize) -> Option<Vec<usize>> {
        let n = table.order();
        let mut best: Option<Vec<usize>> = None;
        for mask in 1u64..1 << n {
            let a = Subset::from_mask(n, mask);
            if a.len() < 2 || a.len() > max_subset || table.product_set(&a, &a).len() != 1 {
                continue;
            }
            let v = a.to_vec();
            let better = match &best {
                None => true,
                Some(b) => v.len() > b.len() || (v.len() == b.len() && v < *b),
            };
            if better {
                best = Some(v);
            }
        }
        best
    }

    #[test]
    fn scan_examples() {
        assert_eq!(
            singleton_square_scan(&CayleyTable::null(3), 3),
            Some(Subset::full(3))
        );
        assert_eq!(
            singleton_square_scan(&CayleyTable::cyclic_group(3), 3),
            None
        );
        let q = CayleyTable::taimanov(5)
            .rees_quotient(&Subset::from_elements(5, [0, 1]))
            .unwrap();
        // the sink joins the three images of {2, 3, 4}
        assert_eq!(singleton_square_scan(&q.table, 4), Some(Subset::full(4)));
        assert_eq!(
            singleton_square_scan(&q.table, 3),
            Some(Subset::from_elements(4, [0, 1, 2]))
        );
        assert_eq!(singleton_square_scan(&CayleyTable::null(3), 1), None);
    }

    #[test]
    fn scan_agrees_with_brute_force() {
        let tables = [
            CayleyTable::taimanov(6),
            CayleyTable::null(4).direct_product(&CayleyTable::cyclic_group(2)),
            CayleyTable::chain(4),
            CayleyTable::antichain_with_zero(5),
            CayleyTable::taimanov(3).direct_product(&CayleyTable::null(2)),
        ];
        for t in &tables {
            for cap in 0..=t.order() {
                assert_eq!(
                    singleton_square_scan(t, cap).map(|s| s.to_vec()),
                    brute(t, cap),
                    "{t:?} cap {cap}"
                );
            }
        }
    }
}
