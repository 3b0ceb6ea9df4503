//! Exact maximum-clique search used by the chain and singleton-square scans.

/// Largest subset of `candidates` (ascending) whose elements are pairwise
/// compatible, capped at `cap` elements. Among the largest, returns the
/// lexicographically least as a sorted list.
///
/// Include-first depth-first search visits equal-size sets in lexicographic
/// order, so keeping only strict improvements yields the least one.
pub(crate) fn max_compatible_set(
    candidates: &[usize],
    cap: usize,
    compatible: impl Fn(usize, usize) -> bool,
) -> Vec<usize> {
    let mut best = Vec::new();
    let mut current = Vec::new();
    extend(candidates, cap, &compatible, &mut current, &mut best);
    best
}

fn extend(
    pool: &[usize],
    cap: usize,
    compatible: &impl Fn(usize, usize) -> bool,
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    if current.len() == cap || current.len() + pool.len() <= best.len() {
        return;
    }
    for (i, &x) in pool.iter().enumerate() {
        if current.len() + (pool.len() - i) <= best.len() {
            return;
        }
        let rest: Vec<usize> = pool[i + 1..]
            .iter()
            .copied()
            .filter(|&y| compatible(x, y))
            .collect();
        current.push(x);
        extend(&rest, cap, compatible, current, best);
        current.pop();
        if best.len() == cap {
            return;
        }
    }
}
