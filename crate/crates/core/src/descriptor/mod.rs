//! Symbolic descriptions of possibly infinite commutative semigroups and the
//! compositional evaluation of their structural predicates.

mod truncate;

use std::fmt;

use serde::Serialize;

use crate::analysis::lcm;
use crate::error::{Error, Result};
use crate::table::CayleyTable;

pub use truncate::truncate;

/// A validated, associative and commutative finite table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteCommutative(CayleyTable);

impl FiniteCommutative {
    pub fn new(table: CayleyTable) -> Result<Self> {
        table.require_associative()?;
        table.require_commutative()?;
        Ok(FiniteCommutative(table))
    }

    pub fn table(&self) -> &CayleyTable {
        &self.0
    }
}

/// A finite semilattice given by its meet table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemilattice(CayleyTable);

impl FiniteSemilattice {
    pub fn new(table: CayleyTable) -> Result<Self> {
        table.require_associative()?;
        table.require_commutative()?;
        if let Some(x) = (0..table.order()).find(|&x| !table.is_idempotent(x)) {
            return Err(Error::NotIdempotent(x));
        }
        Ok(FiniteSemilattice(table))
    }

    pub fn table(&self) -> &CayleyTable {
        &self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorKind {
    /// `Z_n`, `n >= 1`.
    Cyclic(u64),
    /// The quasi-cyclic group `Z_{p^∞}`.
    Prufer(u64),
    Integers,
    /// `⊕_{k >= 1} Z_{p^k}`.
    CyclicTower(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Multiplicity {
    Finite(u64),
    /// Countably many copies, as a direct sum.
    Omega,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupFactor {
    pub kind: FactorKind,
    pub multiplicity: Multiplicity,
}

impl GroupFactor {
    pub fn once(kind: FactorKind) -> Self {
        GroupFactor {
            kind,
            multiplicity: Multiplicity::Finite(1),
        }
    }
}

/// Direct sum of the listed factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub factors: Vec<GroupFactor>,
}

impl GroupSpec {
    pub fn new(factors: Vec<GroupFactor>) -> Self {
        GroupSpec { factors }
    }

    pub fn single(kind: FactorKind) -> Self {
        GroupSpec::new(vec![GroupFactor::once(kind)])
    }

    pub fn check(&self) -> Result<()> {
        if self.factors.is_empty() {
            return Err(Error::MalformedDescriptor("group with no factors".into()));
        }
        for f in &self.factors {
            match f.kind {
                FactorKind::Cyclic(0) => {
                    return Err(Error::MalformedDescriptor("cyclic group of order 0".into()))
                }
                FactorKind::Prufer(p) | FactorKind::CyclicTower(p) if !is_prime(p) => {
                    return Err(Error::MalformedDescriptor(format!("{p} is not prime")))
                }
                _ => {}
            }
            if f.multiplicity == Multiplicity::Finite(0) {
                return Err(Error::MalformedDescriptor("factor multiplicity 0".into()));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SemilatticeSpec {
    FinitePoset(FiniteSemilattice),
    /// `(ℕ, min)`.
    OmegaChain,
    /// Infinitely many pairwise incomparable elements above a bottom.
    OmegaAntichainZero,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Descriptor {
    FiniteTable(FiniteCommutative),
    Group(GroupSpec),
    Semilattice(SemilatticeSpec),
    Product(Box<Descriptor>, Box<Descriptor>),
    AdjoinZero(Box<Descriptor>),
    AdjoinIdentity(Box<Descriptor>),
    /// Countably infinite carrier; distinct elements outside `{0, 1}`
    /// multiply to `1`, all other products are `0`.
    Taimanov,
    /// Countably infinite carrier with every product equal to one zero.
    Null,
}

impl Descriptor {
    pub fn finite_table(table: CayleyTable) -> Result<Self> {
        FiniteCommutative::new(table).map(Descriptor::FiniteTable)
    }

    pub fn product(left: Descriptor, right: Descriptor) -> Self {
        Descriptor::Product(Box::new(left), Box::new(right))
    }

    pub fn adjoin_zero(inner: Descriptor) -> Self {
        Descriptor::AdjoinZero(Box::new(inner))
    }

    pub fn adjoin_identity(inner: Descriptor) -> Self {
        Descriptor::AdjoinIdentity(Box::new(inner))
    }

    pub fn group(kind: FactorKind) -> Self {
        Descriptor::Group(GroupSpec::single(kind))
    }

    pub fn depth(&self) -> usize {
        match self {
            Descriptor::Product(a, b) => 1 + a.depth().max(b.depth()),
            Descriptor::AdjoinZero(d) | Descriptor::AdjoinIdentity(d) => 1 + d.depth(),
            _ => 1,
        }
    }
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorKind::Cyclic(n) => write!(f, "(cyclic {n})"),
            FactorKind::Prufer(p) => write!(f, "(prufer {p})"),
            FactorKind::Integers => write!(f, "(integers)"),
            FactorKind::CyclicTower(p) => write!(f, "(cyclic-tower {p})"),
        }
    }
}

impl fmt::Display for GroupFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.kind.to_string();
        match self.multiplicity {
            Multiplicity::Finite(1) => write!(f, "{s}"),
            Multiplicity::Finite(k) => write!(f, "{} x {k})", &s[..s.len() - 1]),
            Multiplicity::Omega => write!(f, "{} x omega)", &s[..s.len() - 1]),
        }
    }
}

/// Expression-like rendering; finite tables are shown by order only.
impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::FiniteTable(t) => write!(f, "(table <order {}>)", t.table().order()),
            Descriptor::Group(g) => {
                write!(f, "(group")?;
                for factor in &g.factors {
                    write!(f, " {factor}")?;
                }
                write!(f, ")")
            }
            Descriptor::Semilattice(SemilatticeSpec::FinitePoset(t)) => {
                write!(f, "(semilattice (poset <order {}>))", t.table().order())
            }
            Descriptor::Semilattice(SemilatticeSpec::OmegaChain) => {
                write!(f, "(semilattice chain-omega)")
            }
            Descriptor::Semilattice(SemilatticeSpec::OmegaAntichainZero) => {
                write!(f, "(semilattice antichain-omega-zero)")
            }
            Descriptor::Product(a, b) => write!(f, "(product {a} {b})"),
            Descriptor::AdjoinZero(d) => write!(f, "(adjoin-zero {d})"),
            Descriptor::AdjoinIdentity(d) => write!(f, "(adjoin-identity {d})"),
            Descriptor::Taimanov => write!(f, "(taimanov)"),
            Descriptor::Null => write!(f, "(null)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "size")]
pub enum Cardinality {
    Finite(u128),
    CountablyInfinite,
}

impl Cardinality {
    pub fn is_finite(self) -> bool {
        matches!(self, Cardinality::Finite(_))
    }
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Finite(n) => write!(f, "finite ({n})"),
            Cardinality::CountablyInfinite => write!(f, "countably infinite"),
        }
    }
}

/// Truth value of one predicate with a human-readable reason.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub holds: bool,
    pub witness: String,
}

impl Check {
    fn yes(witness: impl Into<String>) -> Self {
        Check {
            holds: true,
            witness: witness.into(),
        }
    }

    fn no(witness: impl Into<String>) -> Self {
        Check {
            holds: false,
            witness: witness.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredicateProfile {
    pub cardinality: Cardinality,
    pub periodic: Check,
    pub chain_finite: Check,
    pub subgroups_bounded: Check,
    /// Common exponent of all subgroups, when bounded and representable.
    pub exponent: Option<u128>,
    pub almost_clifford: Check,
    /// `H(X) = X`.
    pub clifford: bool,
    /// Some infinite `A` has `AA` a singleton.
    pub has_singleton_square: Check,
}

pub fn cardinality(d: &Descriptor) -> Cardinality {
    use Cardinality::*;
    match d {
        Descriptor::FiniteTable(t) => Finite(t.table().order() as u128),
        Descriptor::Group(g) => g
            .factors
            .iter()
            .try_fold(1u128, |acc, f| match (f.kind, f.multiplicity) {
                (FactorKind::Cyclic(1), _) => Some(acc),
                (FactorKind::Cyclic(n), Multiplicity::Finite(k)) => {
                    let k = u32::try_from(k).ok()?;
                    acc.checked_mul((n as u128).checked_pow(k)?)
                }
                _ => None,
            })
            .map_or(CountablyInfinite, Finite),
        Descriptor::Semilattice(SemilatticeSpec::FinitePoset(t)) => {
            Finite(t.table().order() as u128)
        }
        Descriptor::Semilattice(_) | Descriptor::Taimanov | Descriptor::Null => CountablyInfinite,
        Descriptor::Product(a, b) => match (cardinality(a), cardinality(b)) {
            (Finite(x), Finite(y)) => x.checked_mul(y).map_or(CountablyInfinite, Finite),
            _ => CountablyInfinite,
        },
        Descriptor::AdjoinZero(inner) | Descriptor::AdjoinIdentity(inner) => {
            match cardinality(inner) {
                Finite(x) => x.checked_add(1).map_or(CountablyInfinite, Finite),
                CountablyInfinite => CountablyInfinite,
            }
        }
    }
}

/// Evaluates every predicate by structural recursion.
pub fn evaluate(d: &Descriptor) -> Result<PredicateProfile> {
    let cardinality = cardinality(d);
    let profile = match d {
        Descriptor::FiniteTable(t) => finite_profile(t.table(), cardinality),
        Descriptor::Semilattice(SemilatticeSpec::FinitePoset(t)) => {
            finite_profile(t.table(), cardinality)
        }
        Descriptor::Group(g) => group_profile(g, cardinality)?,
        Descriptor::Semilattice(SemilatticeSpec::OmegaChain) => PredicateProfile {
            cardinality,
            periodic: Check::yes("semilattice: every element is idempotent"),
            chain_finite: Check::no("chain-omega: (N, min) is itself an infinite chain"),
            subgroups_bounded: Check::yes("semilattice: all subgroups are trivial"),
            exponent: Some(1),
            almost_clifford: Check::yes("semilattice: every element is a trivial subgroup"),
            clifford: true,
            has_singleton_square: Check::no("semilattice: a ∈ A implies a = aa ∈ AA"),
        },
        Descriptor::Semilattice(SemilatticeSpec::OmegaAntichainZero) => PredicateProfile {
            cardinality,
            periodic: Check::yes("semilattice: every element is idempotent"),
            chain_finite: Check::yes("antichain-omega-zero: chains have at most 2 elements"),
            subgroups_bounded: Check::yes("semilattice: all subgroups are trivial"),
            exponent: Some(1),
            almost_clifford: Check::yes("semilattice: every element is a trivial subgroup"),
            clifford: true,
            has_singleton_square: Check::no("semilattice: a ∈ A implies a = aa ∈ AA"),
        },
        Descriptor::Taimanov => PredicateProfile {
            cardinality,
            periodic: Check::yes("taimanov: xx = 0 for every x"),
            chain_finite: Check::yes("taimanov: 0 is the only idempotent"),
            subgroups_bounded: Check::yes("taimanov: the only subgroup is {0}"),
            exponent: Some(1),
            almost_clifford: Check::no("taimanov: H(X) = {0}, so X \\ H(X) is infinite"),
            clifford: false,
            has_singleton_square: Check::no(
                "taimanov: for infinite A, AA contains 0 = aa and 1 = ab (a != b outside {0,1})",
            ),
        },
        Descriptor::Null => PredicateProfile {
            cardinality,
            periodic: Check::yes("null: xx = 0 for every x"),
            chain_finite: Check::yes("null: 0 is the only idempotent"),
            subgroups_bounded: Check::yes("null: the only subgroup is {0}"),
            exponent: Some(1),
            almost_clifford: Check::no("null: H(X) = {0}, so X \\ H(X) is infinite"),
            clifford: false,
            has_singleton_square: Check::yes("null: A = the whole carrier, AA = {0}"),
        },
        Descriptor::Product(a, b) => product_profile(evaluate(a)?, evaluate(b)?, cardinality),
        Descriptor::AdjoinZero(inner) => {
            adjoin_profile(evaluate(inner)?, cardinality, "adjoin-zero")
        }
        Descriptor::AdjoinIdentity(inner) => {
            adjoin_profile(evaluate(inner)?, cardinality, "adjoin-identity")
        }
    };
    Ok(profile)
}

fn finite_profile(t: &CayleyTable, cardinality: Cardinality) -> PredicateProfile {
    let n = t.order();
    let exponent = t
        .idempotents()
        .iter()
        .map(|e| t.group_exponent(e).expect("idempotent"))
        .fold(1usize, lcm);
    let h = t.clifford_part();
    let outside = n - h.len();
    PredicateProfile {
        cardinality,
        periodic: Check::yes(format!("finite ({n} elements)")),
        chain_finite: Check::yes(format!("finite ({n} elements)")),
        subgroups_bounded: Check::yes(format!("finite: subgroup exponent {exponent}")),
        exponent: Some(exponent as u128),
        almost_clifford: Check::yes(format!("finite: {outside} element(s) outside H(X)")),
        clifford: outside == 0,
        has_singleton_square: Check::no("finite: no infinite subsets"),
    }
}

fn group_profile(g: &GroupSpec, cardinality: Cardinality) -> Result<PredicateProfile> {
    g.check()?;
    let non_periodic = g.factors.iter().find(|f| f.kind == FactorKind::Integers);
    let unbounded = g
        .factors
        .iter()
        .find(|f| !matches!(f.kind, FactorKind::Cyclic(_)));
    let exponent = match unbounded {
        Some(_) => None,
        None => g.factors.iter().try_fold(1u128, |acc, f| match f.kind {
            FactorKind::Cyclic(n) => lcm_u128(acc, n as u128),
            _ => None,
        }),
    };
    Ok(PredicateProfile {
        cardinality,
        periodic: match non_periodic {
            Some(f) => Check::no(format!("{f}: 1 has infinite order")),
            None => Check::yes("torsion group: every element has finite order"),
        },
        chain_finite: Check::yes("group: the identity is the only idempotent"),
        subgroups_bounded: match unbounded {
            Some(f) => Check::no(match f.kind {
                FactorKind::Prufer(p) => {
                    format!("{f}: contains elements of order {p}^k for every k")
                }
                FactorKind::CyclicTower(p) => format!("{f}: summand Z_{p}^k for every k"),
                _ => format!("{f}: elements of infinite order"),
            }),
            None => Check::yes(match exponent {
                Some(e) => format!("bounded group of exponent {e}"),
                None => "bounded group (exponent too large to represent)".to_string(),
            }),
        },
        exponent,
        almost_clifford: Check::yes("group: X = H(X)"),
        clifford: true,
        has_singleton_square: Check::no("group: cancellation makes |AA| >= |A|"),
    })
}

fn product_profile(
    a: PredicateProfile,
    b: PredicateProfile,
    cardinality: Cardinality,
) -> PredicateProfile {
    // leftmost failing factor supplies the witness
    fn both(x: &Check, y: &Check) -> Check {
        match (x.holds, y.holds) {
            (false, _) => Check::no(format!("left factor: {}", x.witness)),
            (true, false) => Check::no(format!("right factor: {}", y.witness)),
            (true, true) => Check::yes(format!("both factors: {}; {}", x.witness, y.witness)),
        }
    }
    fn either(x: &Check, y: &Check) -> Check {
        match (x.holds, y.holds) {
            (true, _) => Check::yes(format!("left factor: {}, times an idempotent", x.witness)),
            (false, true) => {
                Check::yes(format!("right factor: {}, times an idempotent", y.witness))
            }
            (false, false) => Check::no(format!("neither factor: {}; {}", x.witness, y.witness)),
        }
    }
    let subgroups_bounded = both(&a.subgroups_bounded, &b.subgroups_bounded);
    let exponent = if subgroups_bounded.holds {
        a.exponent.zip(b.exponent).and_then(|(x, y)| lcm_u128(x, y))
    } else {
        None
    };
    // (X×Y) \ H = (X \ H(X))×Y ∪ X×(Y \ H(Y))
    let side_ok = |this: &PredicateProfile, other: &PredicateProfile| {
        this.clifford || (this.almost_clifford.holds && other.cardinality.is_finite())
    };
    let almost_clifford = if !side_ok(&a, &b) {
        Check::no(if a.almost_clifford.holds {
            "left factor has elements outside H(X) and the right factor is infinite".to_string()
        } else {
            format!("left factor: {}", a.almost_clifford.witness)
        })
    } else if !side_ok(&b, &a) {
        Check::no(if b.almost_clifford.holds {
            "right factor has elements outside H(X) and the left factor is infinite".to_string()
        } else {
            format!("right factor: {}", b.almost_clifford.witness)
        })
    } else {
        Check::yes(format!(
            "both factors: {}; {}",
            a.almost_clifford.witness, b.almost_clifford.witness
        ))
    };
    PredicateProfile {
        cardinality,
        periodic: both(&a.periodic, &b.periodic),
        chain_finite: both(&a.chain_finite, &b.chain_finite),
        subgroups_bounded,
        exponent,
        almost_clifford,
        clifford: a.clifford && b.clifford,
        has_singleton_square: either(&a.has_singleton_square, &b.has_singleton_square),
    }
}

fn adjoin_profile(
    inner: PredicateProfile,
    cardinality: Cardinality,
    name: &str,
) -> PredicateProfile {
    let wrap = |c: &Check| Check {
        holds: c.holds,
        witness: format!("{name}: {}", c.witness),
    };
    PredicateProfile {
        cardinality,
        periodic: wrap(&inner.periodic),
        chain_finite: wrap(&inner.chain_finite),
        subgroups_bounded: wrap(&inner.subgroups_bounded),
        exponent: inner.exponent,
        almost_clifford: wrap(&inner.almost_clifford),
        clifford: inner.clifford,
        has_singleton_square: wrap(&inner.has_singleton_square),
    }
}

fn lcm_u128(a: u128, b: u128) -> Option<u128> {
    fn gcd(a: u128, b: u128) -> u128 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    (a / gcd(a, b)).checked_mul(b)
}

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}
