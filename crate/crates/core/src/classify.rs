//! Closedness verdicts for commutative semigroups.
//!
//! A commutative semigroup is C-closed iff it is periodic, chain-finite, has
//! bounded subgroups, and no infinite `A` has `AA` a singleton. It is ideally
//! (equivalently, projectively) C-closed iff it is chain-finite, almost
//! Clifford, and has bounded subgroups. Groups are C-closed iff bounded;
//! semilattices iff chain-finite.

use std::fmt::Write as _;

use serde::Serialize;

use crate::descriptor::{
    evaluate, Descriptor, FactorKind, GroupSpec, PredicateProfile, SemilatticeSpec,
};
use crate::error::Result;

/// Stable tag naming the characterization a verdict rests on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Citation {
    #[serde(rename = "Thm1.2")]
    Semilattices,
    #[serde(rename = "Thm1.3")]
    Groups,
    #[serde(rename = "Thm1.4")]
    Closed,
    #[serde(rename = "Thm1.7")]
    IdeallyClosed,
    #[serde(rename = "Cor5.2")]
    SemilatticeEquivalences,
}

impl Citation {
    pub fn tag(self) -> &'static str {
        match self {
            Citation::Semilattices => "Thm1.2",
            Citation::Groups => "Thm1.3",
            Citation::Closed => "Thm1.4",
            Citation::IdeallyClosed => "Thm1.7",
            Citation::SemilatticeEquivalences => "Cor5.2",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            Citation::Semilattices => "Theorem 1.2",
            Citation::Groups => "Theorem 1.3",
            Citation::Closed => "Theorem 1.4",
            Citation::IdeallyClosed => "Theorem 1.7",
            Citation::SemilatticeEquivalences => "Corollary 5.2",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailingCondition {
    pub name: String,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosednessVerdict {
    pub c_closed: bool,
    pub ideally_closed: bool,
    pub projectively_closed: bool,
    pub profile: PredicateProfile,
    pub failing_condition: Option<FailingCondition>,
    /// Governs `c_closed`.
    pub citation: Citation,
    /// Governs `ideally_closed` and `projectively_closed`.
    pub quotient_citation: Citation,
    /// The described semigroup is the Taimanov semigroup itself.
    pub taimanov: bool,
}

fn failing(name: &str, witness: &str) -> Option<FailingCondition> {
    Some(FailingCondition {
        name: name.to_string(),
        witness: witness.to_string(),
    })
}

fn first_failure(p: &PredicateProfile) -> Option<FailingCondition> {
    if !p.periodic.holds {
        failing("periodic", &p.periodic.witness)
    } else if !p.chain_finite.holds {
        failing("chain-finite", &p.chain_finite.witness)
    } else if !p.subgroups_bounded.holds {
        failing("subgroups bounded", &p.subgroups_bounded.witness)
    } else if p.has_singleton_square.holds {
        failing(
            "no infinite singleton-square set",
            &p.has_singleton_square.witness,
        )
    } else if !p.almost_clifford.holds {
        failing("almost Clifford", &p.almost_clifford.witness)
    } else {
        None
    }
}

pub fn classify(d: &Descriptor) -> Result<ClosednessVerdict> {
    let profile = evaluate(d)?;
    let c_closed = profile.periodic.holds
        && profile.chain_finite.holds
        && profile.subgroups_bounded.holds
        && !profile.has_singleton_square.holds;
    let quotient_closed = profile.chain_finite.holds
        && profile.almost_clifford.holds
        && profile.subgroups_bounded.holds;
    Ok(ClosednessVerdict {
        c_closed,
        ideally_closed: quotient_closed,
        projectively_closed: quotient_closed,
        failing_condition: first_failure(&profile),
        profile,
        citation: Citation::Closed,
        quotient_citation: Citation::IdeallyClosed,
        taimanov: matches!(d, Descriptor::Taimanov),
    })
}

/// Groups: all three notions coincide with boundedness.
pub fn classify_group(g: &GroupSpec) -> Result<ClosednessVerdict> {
    let profile = evaluate(&Descriptor::Group(g.clone()))?;
    let unbounded = g
        .factors
        .iter()
        .find(|f| !matches!(f.kind, FactorKind::Cyclic(_)));
    let failing_condition = unbounded.map(|f| {
        let name = if f.kind == FactorKind::Integers {
            "periodic"
        } else {
            "bounded"
        };
        FailingCondition {
            name: name.to_string(),
            witness: format!("{f} is not bounded"),
        }
    });
    let bounded = unbounded.is_none();
    Ok(ClosednessVerdict {
        c_closed: bounded,
        ideally_closed: bounded,
        projectively_closed: bounded,
        profile,
        failing_condition,
        citation: Citation::Groups,
        quotient_citation: Citation::Groups,
        taimanov: false,
    })
}

/// Semilattices: all three notions coincide with chain-finiteness.
pub fn classify_semilattice(s: &SemilatticeSpec) -> Result<ClosednessVerdict> {
    let profile = evaluate(&Descriptor::Semilattice(s.clone()))?;
    let chain_finite = !matches!(s, SemilatticeSpec::OmegaChain);
    Ok(ClosednessVerdict {
        c_closed: chain_finite,
        ideally_closed: chain_finite,
        projectively_closed: chain_finite,
        failing_condition: (!chain_finite)
            .then(|| failing("chain-finite", "(N, min) is an infinite chain"))
            .flatten(),
        profile,
        citation: Citation::Semilattices,
        quotient_citation: Citation::SemilatticeEquivalences,
        taimanov: false,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Deterministic multi-line report.
pub fn explain(v: &ClosednessVerdict) -> String {
    let p = &v.profile;
    let mut out = String::new();
    let _ = writeln!(out, "cardinality: {}", p.cardinality);
    if p.cardinality.is_finite() {
        let _ = writeln!(out, "finite ⇒ all properties hold");
    }
    let _ = writeln!(
        out,
        "C-closed: {} [{}: {}]",
        yes_no(v.c_closed),
        v.citation.tag(),
        v.citation.title()
    );
    let _ = writeln!(
        out,
        "ideally C-closed: {} [{}: {}]",
        yes_no(v.ideally_closed),
        v.quotient_citation.tag(),
        v.quotient_citation.title()
    );
    let _ = writeln!(
        out,
        "projectively C-closed: {} [{}: {}]",
        yes_no(v.projectively_closed),
        v.quotient_citation.tag(),
        v.quotient_citation.title()
    );
    let _ = writeln!(out, "conditions:");
    let rows = [
        ("periodic", &p.periodic),
        ("chain-finite", &p.chain_finite),
        ("subgroups bounded", &p.subgroups_bounded),
        ("almost Clifford", &p.almost_clifford),
        ("infinite singleton-square set", &p.has_singleton_square),
    ];
    for (name, check) in rows {
        let _ = writeln!(out, "  {name}: {} ({})", yes_no(check.holds), check.witness);
    }
    if let Some(e) = p.exponent {
        let _ = writeln!(out, "  subgroup exponent: {e}");
    }
    if let Some(f) = &v.failing_condition {
        let _ = writeln!(out, "failing condition: {} ({})", f.name, f.witness);
    }
    if v.taimanov {
        let _ = writeln!(
            out,
            "precedent: Example 1.6 (Taimanov): C-closed, yet its quotient by the ideal {{0,1}} is a null semigroup that is not C-closed"
        );
    }
    out
}
