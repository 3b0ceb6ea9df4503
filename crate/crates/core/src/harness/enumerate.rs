use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::table::CayleyTable;

pub const MAX_ENUMERATION_ORDER: usize = 5;

const UNSET: usize = usize::MAX;

/// Every commutative semigroup table of order `n`, in lexicographic order of
/// their rows. With `up_to_iso`, only tables equal to their own
/// [`canonical_form`] are kept, one per isomorphism class.
pub fn enumerate_commutative(n: usize, up_to_iso: bool) -> Result<Vec<CayleyTable>> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "enumeration order must be in 1..={MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|x| (x..n).map(move |y| (x, y))).collect();
    // split on the value of the first cell; each branch is independent
    let branches: Vec<Vec<CayleyTable>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut partial = Partial::new(n);
            let mut out = Vec::new();
            partial.set(cells[0], first);
            if partial.consistent() {
                search(&mut partial, &cells, 1, &mut out);
            }
            out
        })
        .collect();
    let all = branches.into_iter().flatten();
    Ok(if up_to_iso {
        all.filter(|t| canonical_form(t) == *t).collect()
    } else {
        all.collect()
    })
}

struct Partial {
    n: usize,
    cells: Vec<usize>,
}

impl Partial {
    fn new(n: usize) -> Self {
        Partial {
            n,
            cells: vec![UNSET; n * n],
        }
    }

    fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y]
    }

    fn set(&mut self, (x, y): (usize, usize), v: usize) {
        self.cells[x * self.n + y] = v;
        self.cells[y * self.n + x] = v;
    }

    /// No fully determined triple violates associativity.
    fn consistent(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.get(a, b);
                if ab == UNSET {
                    continue;
                }
                for c in 0..n {
                    let bc = self.get(b, c);
                    if bc == UNSET {
                        continue;
                    }
                    let (l, r) = (self.get(ab, c), self.get(a, bc));
                    if l != UNSET && r != UNSET && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn search(partial: &mut Partial, cells: &[(usize, usize)], k: usize, out: &mut Vec<CayleyTable>) {
    if k == cells.len() {
        let n = partial.n;
        out.push(CayleyTable::from_fn(n, |x, y| partial.get(x, y)));
        return;
    }
    for v in 0..partial.n {
        partial.set(cells[k], v);
        if partial.consistent() {
            search(partial, cells, k + 1, out);
        }
    }
    partial.set(cells[k], UNSET);
}

/// Lexicographically least relabeling of `t` over all `n!` permutations.
pub fn canonical_form(t: &CayleyTable) -> CayleyTable {
    let n = t.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = t.clone();
    loop {
        let candidate = t.relabel(&perm);
        if candidate.cells() < best.cells() {
            best = candidate;
        }
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = p
        .iter()
        .rposition(|&x| x > p[i])
        .expect("pivot has a successor");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}
