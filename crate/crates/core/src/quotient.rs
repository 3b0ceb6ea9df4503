//! Ideals, congruences, and the quotient semigroups they induce.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::subset::Subset;
use crate::table::CayleyTable;

/// Largest order for which [`congruences`] enumerates set partitions.
pub const MAX_CONGRUENCE_ENUMERATION: usize = 8;

/// A subset `I` with `IX ∪ XI ⊆ I`. May be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal(Subset);

impl Ideal {
    pub fn new(table: &CayleyTable, carrier: Subset) -> Result<Self> {
        table.check_subset(&carrier)?;
        match ideal_violation(table, &carrier) {
            None => Ok(Ideal(carrier)),
            Some((a, b, p)) => Err(Error::NotAnIdeal(a, b, p)),
        }
    }

    pub fn carrier(&self) -> &Subset {
        &self.0
    }

    pub fn into_subset(self) -> Subset {
        self.0
    }
}

/// A partition of `0..n` into nonempty classes, numbered by least member.
///
/// Compatibility with an operation is a property relative to a table; see
/// [`Congruence::compatibility_violation`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Congruence {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl Congruence {
    pub fn identity(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>())
    }

    /// Partition from arbitrary labels: `x` and `y` share a class iff
    /// `labels[x] == labels[y]`.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut renumber = std::collections::HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let class_of = labels
            .iter()
            .enumerate()
            .map(|(x, l)| {
                let next = classes.len();
                let c = *renumber.entry(*l).or_insert(next);
                if c == next {
                    classes.push(Vec::new());
                }
                classes[c].push(x);
                c
            })
            .collect();
        Congruence { class_of, classes }
    }

    /// Partition of `0..n` from explicit classes. Every element must appear
    /// in exactly one class.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::InvalidPartition("empty class".into()));
            }
            for &x in class {
                if x >= n {
                    return Err(Error::ElementOutOfRange {
                        element: x,
                        order: n,
                    });
                }
                if labels[x] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "element {x} appears twice"
                    )));
                }
                labels[x] = c;
            }
        }
        if let Some(x) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::InvalidPartition(format!(
                "element {x} is in no class"
            )));
        }
        Ok(Self::from_labels(&labels))
    }

    /// The Rees congruence `(I × I) ∪ Δ`.
    pub fn rees(ideal: &Subset) -> Self {
        let n = ideal.order();
        let sink = ideal.iter().next();
        let labels: Vec<usize> = (0..n)
            .map(|x| match sink {
                Some(s) if ideal.contains(x) => s,
                _ => x,
            })
            .collect();
        Self::from_labels(&labels)
    }

    pub fn order(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    /// `(x, y, a)` with `x ≈ y` but `ax ≉ ay` or `xa ≉ ya`, if one exists.
    pub fn compatibility_violation(&self, table: &CayleyTable) -> Option<(usize, usize, usize)> {
        for class in &self.classes {
            let r = class[0];
            for &x in &class[1..] {
                for a in 0..table.order() {
                    if !self.related(table.op(a, r), table.op(a, x))
                        || !self.related(table.op(r, a), table.op(x, a))
                    {
                        return Some((r, x, a));
                    }
                }
            }
        }
        None
    }

    pub fn is_congruence_of(&self, table: &CayleyTable) -> bool {
        self.order() == table.order() && self.compatibility_violation(table).is_none()
    }
}

/// A quotient semigroup with the projection of source elements onto it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Quotient {
    #[serde(serialize_with = "serialize_table")]
    pub table: CayleyTable,
    pub projection: Vec<usize>,
}

fn serialize_table<S: serde::Serializer>(
    t: &CayleyTable,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(t.rows())
}

fn ideal_violation(table: &CayleyTable, s: &Subset) -> Option<(usize, usize, usize)> {
    for i in s.iter() {
        for x in 0..table.order() {
            let p = table.op(i, x);
            if !s.contains(p) {
                return Some((i, x, p));
            }
            let p = table.op(x, i);
            if !s.contains(p) {
                return Some((x, i, p));
            }
        }
    }
    None
}

impl CayleyTable {
    pub fn is_ideal(&self, s: &Subset) -> bool {
        s.order() == self.order() && ideal_violation(self, s).is_none()
    }

    /// Least ideal containing `s`.
    pub fn generated_ideal(&self, s: &Subset) -> Result<Ideal> {
        self.check_subset(s)?;
        let mut ideal = s.clone();
        let mut frontier = s.to_vec();
        while let Some(i) = frontier.pop() {
            for x in 0..self.order() {
                for p in [self.op(i, x), self.op(x, i)] {
                    if ideal.insert(p) {
                        frontier.push(p);
                    }
                }
            }
        }
        Ok(Ideal(ideal))
    }

    /// `X/I`: the ideal collapses to a sink at index 0, the remaining
    /// elements keep their relative order. The empty ideal gives `X` back.
    pub fn rees_quotient(&self, ideal: &Subset) -> Result<Quotient> {
        self.check_subset(ideal)?;
        if let Some((a, b, p)) = ideal_violation(self, ideal) {
            return Err(Error::NotAnIdeal(a, b, p));
        }
        if ideal.is_empty() {
            return Ok(Quotient {
                table: self.clone(),
                projection: (0..self.order()).collect(),
            });
        }
        let mut projection = vec![0; self.order()];
        let mut reps = vec![ideal.iter().next().unwrap_or(0)];
        for (x, slot) in projection.iter_mut().enumerate() {
            if !ideal.contains(x) {
                *slot = reps.len();
                reps.push(x);
            }
        }
        let table = CayleyTable::from_fn(reps.len(), |i, j| projection[self.op(reps[i], reps[j])]);
        Ok(Quotient { table, projection })
    }

    /// Least congruence containing every pair.
    pub fn congruence_closure(&self, pairs: &[(usize, usize)]) -> Result<Congruence> {
        let n = self.order();
        for &(x, y) in pairs {
            self.check_element(x)?;
            self.check_element(y)?;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut work: Vec<(usize, usize)> = pairs.to_vec();
        while let Some((x, y)) = work.pop() {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            if rx == ry {
                continue;
            }
            parent[rx.max(ry)] = rx.min(ry);
            for a in 0..n {
                work.push((self.op(a, x), self.op(a, y)));
                work.push((self.op(x, a), self.op(y, a)));
            }
        }
        let labels: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
        Ok(Congruence::from_labels(&labels))
    }

    /// `X/≈` on classes numbered by least member.
    pub fn quotient_by_congruence(&self, c: &Congruence) -> Result<Quotient> {
        if c.order() != self.order() {
            return Err(Error::InvalidArgument(format!(
                "partition over {} elements used with a table of order {}",
                c.order(),
                self.order()
            )));
        }
        if let Some((x, y, a)) = c.compatibility_violation(self) {
            return Err(Error::NotACongruence { x, y, a });
        }
        let reps: Vec<usize> = c.classes().iter().map(|cl| cl[0]).collect();
        let table = CayleyTable::from_fn(reps.len(), |i, j| c.class_of(self.op(reps[i], reps[j])));
        Ok(Quotient {
            table,
            projection: (0..self.order()).map(|x| c.class_of(x)).collect(),
        })
    }

    /// The least idempotent `s` (in the natural order) of the preimage of the
    /// quotient idempotent `e_class`. For a finite commutative source the
    /// projection maps `H_s` onto the H-class of `e_class`.
    pub fn lift_idempotent(&self, c: &Congruence, e_class: usize) -> Result<usize> {
        self.require_commutative()?;
        let q = self.quotient_by_congruence(c)?;
        q.table.check_element(e_class)?;
        if !q.table.is_idempotent(e_class) {
            return Err(Error::NotIdempotent(e_class));
        }
        let lifts: Vec<usize> = c.classes()[e_class]
            .iter()
            .copied()
            .filter(|&x| self.is_idempotent(x))
            .collect();
        let Some((&first, rest)) = lifts.split_first() else {
            return Err(Error::Internal(format!(
                "class {e_class} is idempotent but contains no idempotent"
            )));
        };
        let s = rest.iter().fold(first, |acc, &f| self.op(acc, f));
        if !c.related(s, first) || lifts.iter().any(|&f| self.op(s, f) != s) {
            return Err(Error::Internal(format!(
                "meet {s} of the idempotents in class {e_class} is not their least element"
            )));
        }
        Ok(s)
    }
}

/// Every congruence of `table`, in lexicographic order of their
/// restricted-growth labelings.
pub fn congruences(table: &CayleyTable) -> Result<Vec<Congruence>> {
    let n = table.order();
    if n > MAX_CONGRUENCE_ENUMERATION {
        return Err(Error::SizeLimit(format!(
            "congruence enumeration supports order <= {MAX_CONGRUENCE_ENUMERATION}, got {n}"
        )));
    }
    let mut out = Vec::new();
    for_each_partition(n, &mut |labels| {
        let c = Congruence::from_labels(labels);
        if c.compatibility_violation(table).is_none() {
            out.push(c);
        }
    });
    Ok(out)
}

/// Calls `f` on every restricted-growth string of length `n`.
pub fn for_each_partition(n: usize, f: &mut impl FnMut(&[usize])) {
    fn go(labels: &mut Vec<usize>, n: usize, max: usize, f: &mut impl FnMut(&[usize])) {
        if labels.len() == n {
            f(labels);
            return;
        }
        let limit = if labels.is_empty() { 0 } else { max + 1 };
        for l in 0..=limit {
            labels.push(l);
            go(labels, n, max.max(l), f);
            labels.pop();
        }
    }
    go(&mut Vec::with_capacity(n), n, 0, f);
}

/// Every ideal of `table` including the empty one, ordered by bitmask.
pub fn ideals(table: &CayleyTable) -> Result<Vec<Subset>> {
    let n = table.order();
    if n > 20 {
        return Err(Error::SizeLimit(format!(
            "ideal enumeration supports order <= 20, got {n}"
        )));
    }
    Ok((0u64..1 << n)
        .map(|m| Subset::from_mask(n, m))
        .filter(|s| table.is_ideal(s))
        .collect())
}
