use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use semiclass_core::harness::{enumerate_commutative, suite_over_corpus, MAX_ENUMERATION_ORDER};
use semiclass_core::power::power_semigroup;
use semiclass_core::text::{format_table, parse_descriptor, read_table_file};
use semiclass_core::{classify as classify_descriptor, explain, CayleyTable, Descriptor, Subset};

use crate::{Failure, Outcome};

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn done(output: String) -> Result<Outcome, Failure> {
    Ok(Outcome {
        output,
        findings: false,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn validate(file: &Path, json: bool) -> Result<Outcome, Failure> {
    let t = read_table_file(file, false)?;
    let r = t.validate();
    let output = if json {
        to_json(&r)
    } else {
        let mut out = format!("order: {}\n", t.order());
        let _ = write!(out, "associative: {}", yes_no(r.associative));
        if let Some((x, y, z)) = r.associativity_witness {
            let _ = write!(out, " (witness ({x}*{y})*{z} != {x}*({y}*{z}))");
        }
        let _ = write!(out, "\ncommutative: {}", yes_no(r.commutative));
        if let Some((x, y)) = r.commutativity_witness {
            let _ = write!(out, " (witness {x}*{y} != {y}*{x})");
        }
        out.push('\n');
        out
    };
    Ok(Outcome {
        output,
        findings: !r.associative,
    })
}

#[derive(Serialize)]
struct MaxChain {
    length: usize,
    witness: Subset,
}

#[derive(Serialize)]
struct Analysis {
    order: usize,
    commutative: bool,
    idempotents: Subset,
    /// Covering pairs `(e, f)` with `e < f` in the natural order.
    order_covers: Vec<(usize, usize)>,
    h_classes: Vec<Subset>,
    pi: Option<Vec<usize>>,
    pi_unavailable: Option<String>,
    center: Subset,
    clifford_part: Subset,
    max_chain: MaxChain,
}

fn order_covers(t: &CayleyTable) -> Vec<(usize, usize)> {
    let e = t.idempotents().to_vec();
    let lt = |a: usize, b: usize| a != b && t.op(a, b) == a;
    let mut covers = Vec::new();
    for &a in &e {
        for &b in &e {
            if lt(a, b) && !e.iter().any(|&g| lt(a, g) && lt(g, b)) {
                covers.push((a, b));
            }
        }
    }
    covers
}

pub fn analyze(file: &Path, json: bool) -> Result<Outcome, Failure> {
    let t = read_table_file(file, true)?;
    let (pi, pi_unavailable) = match t.pi_map() {
        Ok(p) => (Some(p), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let (length, witness) = t.max_chain_length();
    let a = Analysis {
        order: t.order(),
        commutative: t.is_commutative(),
        idempotents: t.idempotents(),
        order_covers: order_covers(&t),
        h_classes: t.h_classes(),
        pi,
        pi_unavailable,
        center: t.center(),
        clifford_part: t.clifford_part(),
        max_chain: MaxChain { length, witness },
    };
    if json {
        return done(to_json(&a));
    }
    let mut out = String::new();
    let _ = writeln!(out, "order: {}", a.order);
    let _ = writeln!(out, "commutative: {}", yes_no(a.commutative));
    let _ = writeln!(out, "idempotents E: {}", a.idempotents);
    let covers: Vec<String> = a
        .order_covers
        .iter()
        .map(|(x, y)| format!("{x}<{y}"))
        .collect();
    let _ = writeln!(out, "natural order covers: {}", covers.join(" "));
    let classes: Vec<String> = a.h_classes.iter().map(Subset::to_string).collect();
    let _ = writeln!(out, "H-classes: {}", classes.join(" "));
    match (&a.pi, &a.pi_unavailable) {
        (Some(p), _) => {
            let maps: Vec<String> = p
                .iter()
                .enumerate()
                .map(|(x, e)| format!("{x}->{e}"))
                .collect();
            let _ = writeln!(out, "pi: {}", maps.join(" "));
        }
        (None, Some(why)) => {
            let _ = writeln!(out, "pi: unavailable ({why})");
        }
        (None, None) => {}
    }
    let _ = writeln!(out, "center Z: {}", a.center);
    let _ = writeln!(out, "Clifford part H: {}", a.clifford_part);
    let _ = writeln!(
        out,
        "largest chain: {} {}",
        a.max_chain.length, a.max_chain.witness
    );
    done(out)
}

#[derive(Serialize)]
struct Classification<'a> {
    input: &'a str,
    verdict: semiclass_core::ClosednessVerdict,
}

pub fn classify(input: &str, base_dir: &Path, json: bool) -> Result<Outcome, Failure> {
    let descriptor = if input.trim_start().starts_with('(') {
        parse_descriptor(input, base_dir)?
    } else {
        let t = read_table_file(&base_dir.join(input), true)?;
        if let Some((x, y)) = t.validate().commutativity_witness {
            return Err(Failure::Usage(format!(
                "{input} is not commutative ({x}*{y} != {y}*{x}); classification covers commutative \
                 semigroups only (Remark 1.8: the non-commutative group Z ⋊ {{-1,1}} is C-closed but unbounded)"
            )));
        }
        Descriptor::finite_table(t)?
    };
    let verdict = classify_descriptor(&descriptor)?;
    let output = if json {
        to_json(&Classification { input, verdict })
    } else {
        format!("input: {descriptor}\n{}", explain(&verdict))
    };
    done(output)
}

fn parse_elements(list: &str, order: usize) -> Result<Vec<usize>, Failure> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .ok()
                .filter(|&x| x < order)
                .ok_or_else(|| Failure::Usage(format!("{s:?} is not an element of 0..{order}")))
        })
        .collect()
}

fn parse_pairs(list: &str, order: usize) -> Result<Vec<(usize, usize)>, Failure> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|p| {
            let (a, b) = p
                .split_once('-')
                .ok_or_else(|| Failure::Usage(format!("pair {p:?} is not of the form x-y")))?;
            let v = parse_elements(&format!("{a},{b}"), order)?;
            Ok((v[0], v[1]))
        })
        .collect()
}

pub fn quotient(
    file: &Path,
    ideal: Option<&str>,
    pairs: Option<&str>,
    json: bool,
) -> Result<Outcome, Failure> {
    let t = read_table_file(file, true)?;
    let q = match (ideal, pairs) {
        (Some(list), _) => {
            let members = parse_elements(list, t.order())?;
            t.rees_quotient(&Subset::from_elements(t.order(), members))?
        }
        (None, Some(list)) => {
            let c = t.congruence_closure(&parse_pairs(list, t.order())?)?;
            t.quotient_by_congruence(&c)?
        }
        (None, None) => return Err(Failure::Usage("give --ideal or --pairs".into())),
    };
    if json {
        return done(to_json(&q));
    }
    let maps: Vec<String> = q
        .projection
        .iter()
        .enumerate()
        .map(|(x, y)| format!("{x}->{y}"))
        .collect();
    done(format!(
        "# projection: {}\n{}",
        maps.join(" "),
        format_table(&q.table)
    ))
}

#[derive(Serialize)]
struct PowerReport {
    base_order: usize,
    elements: Vec<Subset>,
    table: Vec<Vec<usize>>,
    associative: bool,
    commutative: bool,
}

pub fn power(file: &Path, json: bool) -> Result<Outcome, Failure> {
    let base = read_table_file(file, true)?;
    let p = power_semigroup(&base)?;
    let r = p.table.validate();
    let elements: Vec<Subset> = (0..p.element_count()).map(|i| p.subset_at(i)).collect();
    if json {
        return done(to_json(&PowerReport {
            base_order: base.order(),
            elements,
            table: p.table.rows(),
            associative: r.associative,
            commutative: r.commutative,
        }));
    }
    let mut out = format!(
        "# power semigroup of a base of order {}: associative {}, commutative {}\n",
        base.order(),
        yes_no(r.associative),
        yes_no(r.commutative)
    );
    for (i, s) in elements.iter().enumerate() {
        let _ = writeln!(out, "# {i} = {s}");
    }
    out.push_str(&format_table(&p.table));
    done(out)
}

#[derive(Serialize)]
struct EnumerationReport {
    order: usize,
    up_to_iso: bool,
    count: usize,
    tables: Vec<Vec<Vec<usize>>>,
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents)
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn create_dir(dir: &Path) -> Result<(), Failure> {
    std::fs::create_dir_all(dir)
        .map_err(|e| Failure::Usage(format!("cannot create {}: {e}", dir.display())))
}

pub fn enumerate(
    order: usize,
    up_to_iso: bool,
    out: Option<&Path>,
    json: bool,
) -> Result<Outcome, Failure> {
    let tables = enumerate_commutative(order, up_to_iso)?;
    if let Some(dir) = out {
        create_dir(dir)?;
        for (k, t) in tables.iter().enumerate() {
            write_file(
                &dir.join(format!("order{order}_{k:05}.tbl")),
                &format_table(t),
            )?;
        }
    }
    if json {
        return done(to_json(&EnumerationReport {
            order,
            up_to_iso,
            count: tables.len(),
            tables: tables.iter().map(CayleyTable::rows).collect(),
        }));
    }
    let mut text = format!("# order {order}: {} table(s)\n", tables.len());
    if out.is_none() {
        for t in &tables {
            text.push('\n');
            text.push_str(&format_table(t));
        }
    }
    done(text)
}

#[derive(Serialize)]
struct SuiteSummary {
    max_order: usize,
    up_to_iso: bool,
    checked: Vec<(usize, usize)>,
    failures: Vec<FailureSummary>,
}

#[derive(Serialize)]
struct FailureSummary {
    table: Vec<Vec<usize>>,
    properties: Vec<semiclass_core::harness::PropertyResult>,
    file: String,
}

pub fn suite(
    max_order: usize,
    up_to_iso: bool,
    out: &Path,
    json: bool,
) -> Result<Outcome, Failure> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&max_order) {
        return Err(Failure::Usage(format!(
            "--max-order must be in 1..={MAX_ENUMERATION_ORDER}"
        )));
    }
    let report = suite_over_corpus(max_order, up_to_iso)?;
    let mut failures = Vec::new();
    if !report.all_passed() {
        create_dir(out)?;
    }
    for (k, (t, r)) in report.failures.iter().enumerate() {
        let path = out.join(format!("failure_{k:04}.tbl"));
        let mut contents = String::new();
        for p in r.failures() {
            let _ = writeln!(
                contents,
                "# {}: {}",
                p.name,
                p.counterexample.as_deref().unwrap_or("")
            );
        }
        contents.push_str(&format_table(t));
        write_file(&path, &contents)?;
        failures.push(FailureSummary {
            table: t.rows(),
            properties: r.failures().cloned().collect(),
            file: path.display().to_string(),
        });
    }
    let findings = !failures.is_empty();
    let output = if json {
        to_json(&SuiteSummary {
            max_order,
            up_to_iso,
            checked: report.checked.clone(),
            failures,
        })
    } else {
        let mut text = String::new();
        for (n, k) in &report.checked {
            let _ = writeln!(text, "order {n}: {k} table(s) checked");
        }
        if findings {
            for f in &failures {
                for p in &f.properties {
                    let _ = writeln!(
                        text,
                        "FAIL {}: {} ({})",
                        p.name,
                        p.counterexample.as_deref().unwrap_or(""),
                        f.file
                    );
                }
            }
        } else {
            let _ = writeln!(text, "all properties hold");
        }
        text
    };
    Ok(Outcome { output, findings })
}
