//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

mod common;

use common::{naive_commutative, orbit_count, random_descriptor, subterms, Pool};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use semiclass_core::descriptor::{
    FactorKind, FiniteSemilattice, GroupFactor, GroupSpec, Multiplicity, SemilatticeSpec,
};
use semiclass_core::harness::{enumerate_commutative, singleton_square_scan, suite_over_corpus};
use semiclass_core::power::power_semigroup;
use semiclass_core::{classify, classify_group, classify_semilattice, truncate};
use semiclass_core::{CayleyTable, ClosednessVerdict, Descriptor, Subset};
use std::process::ExitCode;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_secs: u64) -> Result<(), String> {
    check(elapsed < Duration::from_secs(limit_secs), || {
        format!("took {:.1}s, limit {limit_secs}s", elapsed.as_secs_f64())
    })
}

fn lemma_suite_exhaustive() -> Outcome {
    let start = Instant::now();
    let report = suite_over_corpus(4, false).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if let Some((t, r)) = report.failures.first() {
        let names: Vec<_> = r.failures().map(|p| p.name).collect();
        return Err(format!(
            "{} failing tables, first {:?} fails {names:?}",
            report.failures.len(),
            t.rows()
        ));
    }
    check(
        report.checked == [(1, 1), (2, 6), (3, 63), (4, 1140)],
        || format!("unexpected corpus sizes {:?}", report.checked),
    )?;
    within(elapsed, 60)?;
    Ok(format!(
        "{} labelled tables of order <= 4, zero failures, {:.2}s",
        report.tables_checked(),
        elapsed.as_secs_f64()
    ))
}

fn enumerator_oracle() -> Outcome {
    let mut iso = Vec::new();
    for n in 1..=3 {
        let mut raw: Vec<Vec<usize>> = enumerate_commutative(n, false)
            .map_err(|e| e.to_string())?
            .iter()
            .map(common::flat)
            .collect();
        raw.sort();
        let naive = naive_commutative(n);
        check(raw == naive, || {
            format!(
                "order {n}: enumerator {} tables, oracle {}",
                raw.len(),
                naive.len()
            )
        })?;
        let classes = enumerate_commutative(n, true)
            .map_err(|e| e.to_string())?
            .len();
        let oracle_classes = orbit_count(n, &naive);
        check(classes == oracle_classes, || {
            format!("order {n}: {classes} classes enumerated, oracle {oracle_classes}")
        })?;
        iso.push(classes);
    }
    check(iso == [1, 3, 12], || {
        format!("class counts {iso:?}, expected [1, 3, 12]")
    })?;
    Ok(format!(
        "raw tables and class counts {iso:?} match the naive oracle"
    ))
}

fn triple(v: &ClosednessVerdict) -> (bool, bool, bool) {
    (v.c_closed, v.ideally_closed, v.projectively_closed)
}

fn specialization_consistency() -> Outcome {
    let pool = Pool::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let samples = 2000;
    let mut compared = 0;
    for i in 0..samples {
        let d = random_descriptor(&mut rng, &pool, 4);
        check(d.depth() <= 4, || {
            format!("sample {i} has depth {}", d.depth())
        })?;
        for sub in subterms(&d) {
            let v = classify(sub).map_err(|e| format!("sample {i}: {sub}: {e}"))?;
            let (c, ideal, proj) = triple(&v);
            check((!proj || ideal) && (!ideal || c), || {
                format!("implication chain broken on {sub}: {:?}", triple(&v))
            })?;
            let special = match sub {
                Descriptor::Group(g) => Some(classify_group(g)),
                Descriptor::Semilattice(s) => Some(classify_semilattice(s)),
                _ => None,
            };
            if let Some(special) = special {
                let special = special.map_err(|e| e.to_string())?;
                check(triple(&special) == triple(&v), || {
                    format!(
                        "{sub}: general {:?}, specialized {:?}",
                        triple(&v),
                        triple(&special)
                    )
                })?;
                compared += 1;
            }
        }
    }
    check(compared >= 1000, || {
        format!("only {compared} group/semilattice comparisons")
    })?;
    Ok(format!(
        "{samples} sampled descriptors, {compared} specialization comparisons agree, implication chain holds"
    ))
}

fn is_null(t: &CayleyTable) -> bool {
    let z = t.op(0, 0);
    (0..t.order()).all(|x| (0..t.order()).all(|y| t.op(x, y) == z))
}

fn taimanov_reproduction() -> Outcome {
    let v = classify(&Descriptor::Taimanov).map_err(|e| e.to_string())?;
    check(v.c_closed && !v.ideally_closed, || {
        format!(
            "c_closed {}, ideally_closed {}",
            v.c_closed, v.ideally_closed
        )
    })?;
    for n in 3..=8 {
        let t = truncate(&Descriptor::Taimanov, n).map_err(|e| e.to_string())?;
        let q = t
            .rees_quotient(&Subset::from_elements(n, [0, 1]))
            .map_err(|e| format!("n = {n}: {e}"))?;
        check(is_null(&q.table), || {
            format!("n = {n}: quotient is not null")
        })?;
        check(
            singleton_square_scan(&q.table, q.table.order()).is_some(),
            || format!("n = {n}: no singleton-square witness"),
        )?;
    }
    Ok(
        "C-closed, not ideally C-closed; quotients by {0,1} null with witnesses for n = 3..8"
            .into(),
    )
}

fn power_laws() -> Outcome {
    let start = Instant::now();
    let tables = common::corpus(5);
    for base in &tables {
        let p = power_semigroup(base).map_err(|e| e.to_string())?;
        let report = p.table.validate();
        check(report.associative && report.commutative, || {
            format!("power semigroup of {:?} fails validation", base.rows())
        })?;
        let n = base.order();
        let singles: Vec<usize> = (0..n).map(|x| p.singleton(x)).collect();
        let mut distinct = singles.clone();
        distinct.sort();
        distinct.dedup();
        check(distinct.len() == n, || {
            format!("{:?}: singletons collide", base.rows())
        })?;
        for x in 0..n {
            for y in 0..n {
                check(
                    p.table.op(singles[x], singles[y]) == singles[base.op(x, y)],
                    || format!("{:?}: embedding breaks at ({x}, {y})", base.rows()),
                )?;
            }
        }
        // index + 1 is the bitmask of the subset
        let count = p.element_count();
        for u in 1..=count {
            for v in 1..=count {
                let uv = p.table.op(u - 1, v - 1) + 1;
                let mut b1 = u;
                while b1 > 0 {
                    let mut b2 = v;
                    while b2 > 0 {
                        let prod = p.table.op(b1 - 1, b2 - 1) + 1;
                        check(prod & !uv == 0, || {
                            format!("{:?}: law fails for U={u:#b}, V={v:#b}", base.rows())
                        })?;
                        b2 = (b2 - 1) & v;
                    }
                    b1 = (b1 - 1) & u;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, 120)?;
    Ok(format!(
        "{} tables of order <= 5 (up to isomorphism), zero failures, {:.2}s",
        tables.len(),
        elapsed.as_secs_f64()
    ))
}

fn groups_and_semilattices() -> Vec<Descriptor> {
    let mut out = Vec::new();
    for n in 1..=12 {
        out.push(Descriptor::group(FactorKind::Cyclic(n)));
    }
    for p in [2, 3, 5, 7] {
        out.push(Descriptor::group(FactorKind::Prufer(p)));
        out.push(Descriptor::group(FactorKind::CyclicTower(p)));
    }
    out.push(Descriptor::group(FactorKind::Integers));
    for m in [
        Multiplicity::Finite(2),
        Multiplicity::Finite(3),
        Multiplicity::Omega,
    ] {
        for kind in [
            FactorKind::Cyclic(2),
            FactorKind::Cyclic(3),
            FactorKind::Prufer(2),
        ] {
            out.push(Descriptor::Group(GroupSpec::new(vec![GroupFactor {
                kind,
                multiplicity: m,
            }])));
        }
    }
    out.push(Descriptor::Group(GroupSpec::new(vec![
        GroupFactor::once(FactorKind::Cyclic(2)),
        GroupFactor::once(FactorKind::Prufer(3)),
        GroupFactor::once(FactorKind::Integers),
    ])));
    out.push(Descriptor::Semilattice(SemilatticeSpec::OmegaChain));
    out.push(Descriptor::Semilattice(SemilatticeSpec::OmegaAntichainZero));
    for t in common::corpus(4) {
        if t.idempotents().len() == t.order() {
            let s = FiniteSemilattice::new(t).expect("semilattice");
            out.push(Descriptor::Semilattice(SemilatticeSpec::FinitePoset(s)));
        }
    }
    let pool = Pool::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    for _ in 0..100 {
        out.push(Descriptor::Group(common::random_group(&mut rng)));
        out.push(Descriptor::Semilattice(common::random_semilattice(
            &mut rng, &pool,
        )));
    }
    out
}

fn singleton_square_rules() -> Outcome {
    let family = groups_and_semilattices();
    let mut truncations = 0;
    for d in &family {
        for budget in 1..=8 {
            let t = truncate(d, budget).map_err(|e| format!("{d}: {e}"))?;
            if let Some(a) = singleton_square_scan(&t, t.order()) {
                return Err(format!("{d} budget {budget}: witness {a}"));
            }
            truncations += 1;
        }
    }
    // a one-element null semigroup has no two-element subset to test
    for budget in 2..=8 {
        let t = truncate(&Descriptor::Null, budget).map_err(|e| e.to_string())?;
        check(singleton_square_scan(&t, t.order()).is_some(), || {
            format!("null budget {budget}: no witness")
        })?;
    }
    Ok(format!(
        "no witness in {truncations} group/semilattice truncations; witness in every null truncation of budget 2..8"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        (
            "lemma suite over every table of order <= 4",
            lemma_suite_exhaustive,
        ),
        ("enumerator matches the naive oracle", enumerator_oracle),
        (
            "classifier specialization and implication chain",
            specialization_consistency,
        ),
        ("Taimanov semigroup reproduction", taimanov_reproduction),
        ("power semigroup laws", power_laws),
        ("singleton-square rules", singleton_square_rules),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
