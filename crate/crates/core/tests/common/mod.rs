//! Helpers shared by the integration tests: independent oracles and a
//! seeded descriptor sampler.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use semiclass_core::descriptor::{
    FactorKind, FiniteCommutative, FiniteSemilattice, GroupFactor, GroupSpec, Multiplicity,
    SemilatticeSpec,
};
use semiclass_core::harness::enumerate_commutative;
use semiclass_core::{CayleyTable, Descriptor};
use std::collections::BTreeSet;

/// Every commutative semigroup table on `0..n`, found by trying all `n^(n*n)`
/// operation tables.
pub fn naive_commutative(n: usize) -> Vec<Vec<usize>> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    let mut out = Vec::new();
    let mut cell = vec![0usize; cells];
    for mut code in 0..total {
        for c in cell.iter_mut().rev() {
            *c = code % n;
            code /= n;
        }
        let op = |x: usize, y: usize| cell[x * n + y];
        let commutative = (0..n).all(|x| (0..n).all(|y| op(x, y) == op(y, x)));
        let associative = commutative
            && (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| op(op(x, y), z) == op(x, op(y, z)))));
        if associative {
            out.push(cell.clone());
        }
    }
    out
}

/// Every associative (not necessarily commutative) table of order `n`.
pub fn naive_semigroups(n: usize) -> Vec<CayleyTable> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    let mut out = Vec::new();
    for mut code in 0..total {
        let mut cell = vec![0usize; cells];
        for c in cell.iter_mut().rev() {
            *c = code % n;
            code /= n;
        }
        let t = CayleyTable::from_fn(n, |x, y| cell[x * n + y]);
        if t.is_associative() {
            out.push(t);
        }
    }
    out
}

pub fn flat(t: &CayleyTable) -> Vec<usize> {
    t.rows().concat()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Number of isomorphism classes among `tables`, by removing whole orbits
/// under relabelling.
pub fn orbit_count(n: usize, tables: &[Vec<usize>]) -> usize {
    let perms = permutations(n);
    let mut remaining: BTreeSet<Vec<usize>> = tables.iter().cloned().collect();
    let mut classes = 0;
    while let Some(t) = remaining.iter().next().cloned() {
        classes += 1;
        for p in &perms {
            // p sends x to p[x]; the image table has p[x]p[y] = p[xy]
            let mut image = vec![0; n * n];
            for x in 0..n {
                for y in 0..n {
                    image[p[x] * n + p[y]] = p[t[x * n + y]];
                }
            }
            remaining.remove(&image);
        }
    }
    classes
}

/// Isomorphism-class representatives of every order `1..=max_order`.
pub fn corpus(max_order: usize) -> Vec<CayleyTable> {
    (1..=max_order)
        .flat_map(|n| enumerate_commutative(n, true).unwrap())
        .collect()
}

/// Every labelled commutative table of every order `1..=max_order`.
pub fn raw_corpus(max_order: usize) -> Vec<CayleyTable> {
    (1..=max_order)
        .flat_map(|n| enumerate_commutative(n, false).unwrap())
        .collect()
}

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u64..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

const PRIMES: [u64; 4] = [2, 3, 5, 7];

fn random_factor<R: Rng>(rng: &mut R) -> GroupFactor {
    let kind = match rng.gen_range(0..6) {
        0..=2 => FactorKind::Cyclic(rng.gen_range(1..=12)),
        3 => FactorKind::Prufer(*PRIMES.choose(rng).unwrap()),
        4 => FactorKind::CyclicTower(*PRIMES.choose(rng).unwrap()),
        _ => FactorKind::Integers,
    };
    let multiplicity = match rng.gen_range(0..4) {
        0 => Multiplicity::Omega,
        1 => Multiplicity::Finite(rng.gen_range(2..=4)),
        _ => Multiplicity::Finite(1),
    };
    GroupFactor { kind, multiplicity }
}

pub fn random_group<R: Rng>(rng: &mut R) -> GroupSpec {
    let k = rng.gen_range(1..=3);
    GroupSpec::new((0..k).map(|_| random_factor(rng)).collect())
}

pub fn random_semilattice<R: Rng>(rng: &mut R, pool: &Pool) -> SemilatticeSpec {
    match rng.gen_range(0..3) {
        0 => SemilatticeSpec::OmegaChain,
        1 => SemilatticeSpec::OmegaAntichainZero,
        _ => SemilatticeSpec::FinitePoset(
            FiniteSemilattice::new(pool.semilattices.choose(rng).unwrap().clone()).unwrap(),
        ),
    }
}

/// Finite tables the sampler draws leaves from.
pub struct Pool {
    pub tables: Vec<CayleyTable>,
    pub semilattices: Vec<CayleyTable>,
}

impl Pool {
    pub fn new() -> Self {
        let tables = corpus(3);
        let semilattices = tables
            .iter()
            .filter(|t| t.idempotents().len() == t.order())
            .cloned()
            .collect();
        Pool {
            tables,
            semilattices,
        }
    }
}

/// A descriptor of depth at most `depth`, drawn from the whole grammar.
pub fn random_descriptor<R: Rng>(rng: &mut R, pool: &Pool, depth: usize) -> Descriptor {
    let leaf_only = depth <= 1;
    let choice = if leaf_only {
        rng.gen_range(0..5)
    } else {
        rng.gen_range(0..8)
    };
    match choice {
        0 => Descriptor::Group(random_group(rng)),
        1 => Descriptor::Semilattice(random_semilattice(rng, pool)),
        2 => Descriptor::FiniteTable(
            FiniteCommutative::new(pool.tables.choose(rng).unwrap().clone()).unwrap(),
        ),
        3 => Descriptor::Taimanov,
        4 => Descriptor::Null,
        5 | 6 => Descriptor::product(
            random_descriptor(rng, pool, depth - 1),
            random_descriptor(rng, pool, depth - 1),
        ),
        _ if rng.gen_bool(0.5) => Descriptor::adjoin_zero(random_descriptor(rng, pool, depth - 1)),
        _ => Descriptor::adjoin_identity(random_descriptor(rng, pool, depth - 1)),
    }
}

/// Every subterm of `d`, `d` included.
pub fn subterms(d: &Descriptor) -> Vec<&Descriptor> {
    let mut out = vec![d];
    match d {
        Descriptor::Product(a, b) => {
            out.extend(subterms(a));
            out.extend(subterms(b));
        }
        Descriptor::AdjoinZero(x) | Descriptor::AdjoinIdentity(x) => out.extend(subterms(x)),
        _ => {}
    }
    out
}
