use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::enumerate_commutative;
use crate::error::Result;
use crate::quotient::{congruences, Congruence, MAX_CONGRUENCE_ENUMERATION};
use crate::subset::Subset;
use crate::table::CayleyTable;

/// Largest maximal subgroup whose subsets are enumerated for the
/// product-size property; larger ones are checked through translations.
const SUBSET_SCAN_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub passed: bool,
    /// First counterexample in lexicographic order of the quantified elements.
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub order: usize,
    pub congruences_checked: usize,
    pub results: Vec<PropertyResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyResult> {
        self.results.iter().filter(|r| !r.passed)
    }
}

fn property(name: &'static str, counterexample: Option<String>) -> PropertyResult {
    PropertyResult {
        name,
        passed: counterexample.is_none(),
        counterexample,
    }
}

/// Runs every structural property on a commutative table.
///
/// Congruence properties quantify over all congruences up to order
/// [`MAX_CONGRUENCE_ENUMERATION`]; above that, over the principal
/// congruences and the Rees congruences of principal ideals.
pub fn lemma_suite(t: &CayleyTable) -> Result<SuiteReport> {
    t.require_associative()?;
    t.require_commutative()?;
    let n = t.order();
    let idempotents = t.idempotents().to_vec();
    let center = t.center();
    let pi = t.pi_map()?;
    let h: Vec<Subset> = (0..n).map(|x| t.h_class(x)).collect();
    let mut results = Vec::new();

    results.push(property(
        "maximal subgroup absorbs its roots",
        idempotents.iter().find_map(|&e| {
            let roots = t.root_inf(&h[e]);
            let found = roots.iter().find_map(|r| {
                h[e].iter().find_map(|y| {
                    (!h[e].contains(t.op(r, y)) || !h[e].contains(t.op(y, r)))
                        .then(|| format!("e={e}, root={r}, y={y}"))
                })
            });
            found
        }),
    ));

    results.push(property(
        "H-class of an idempotent is a subgroup",
        idempotents.iter().find_map(|&e| {
            if !h[e].contains(e) || !t.is_closed(&h[e]) {
                return Some(format!("e={e}"));
            }
            h[e].iter()
                .find(|&x| t.op(e, x) != x || !h[e].iter().any(|y| t.op(x, y) == e))
                .map(|x| format!("e={e}, x={x} lacks identity or inverse"))
        }),
    ));

    results.push(property(
        "pi is multiplicative on central elements",
        pairs(n).find_map(|(x, y)| {
            (center.contains(y) && pi[t.op(x, y)] != t.op(pi[x], pi[y]))
                .then(|| format!("x={x}, y={y}"))
        }),
    ));

    results.push(property(
        "H-classes of idempotents multiply into the H-class of the product",
        idempotents.iter().find_map(|&x| {
            idempotents.iter().find_map(|&y| {
                let target = &h[t.op(x, y)];
                (!t.product_set(&h[x], &h[y]).is_subset(target)).then(|| format!("x={x}, y={y}"))
            })
        }),
    ));

    results.push(property(
        "pi(x)pi(y) <= pi(xy)",
        pairs(n).find_map(|(x, y)| {
            let lhs = t.op(pi[x], pi[y]);
            (t.op(lhs, pi[t.op(x, y)]) != lhs).then(|| format!("x={x}, y={y}"))
        }),
    ));

    let clifford = t.clifford_part();
    results.push(property(
        "pi is multiplicative against the Clifford part",
        pairs(n).find_map(|(x, y)| {
            (clifford.contains(y) && pi[t.op(x, y)] != t.op(pi[x], pi[y]))
                .then(|| format!("x={x}, y={y}"))
        }),
    ));

    results.push(property(
        "pi(xy) = pi(yx)",
        pairs(n)
            .find_map(|(x, y)| (pi[t.op(x, y)] != pi[t.op(y, x)]).then(|| format!("x={x}, y={y}"))),
    ));

    results.push(property(
        "pi is a homomorphism onto the idempotents",
        pairs(n)
            .find_map(|(x, y)| {
                (pi[t.op(x, y)] != t.op(pi[x], pi[y])).then(|| format!("x={x}, y={y}"))
            })
            .or_else(|| {
                let image = Subset::from_elements(n, pi.iter().copied());
                (image != t.idempotents()).then(|| format!("image {image} is not E(X)"))
            }),
    ));

    results.push(property(
        "Clifford part is a subsemigroup",
        (!t.is_closed(&clifford)).then(|| format!("H(X) = {clifford}")),
    ));

    results.push(property(
        "Z_n sets ascend",
        idempotents.iter().find_map(|&e| {
            let z = t.z_sets(e, n + 1).expect("idempotent");
            if z[0] != center.intersection(&h[e]) {
                return Some(format!("e={e}: Z_1 != Z(X) ∩ H_e"));
            }
            z.windows(2)
                .position(|w| !w[0].is_subset(&w[1]))
                .map(|k| format!("e={e}: Z_{} not in Z_{}", k + 1, k + 2))
        }),
    ));

    results.push(property(
        "products within a maximal subgroup do not shrink",
        idempotents
            .iter()
            .find_map(|&e| group_products_do_not_shrink(t, &h[e], e)),
    ));

    let congruence_list = if n <= MAX_CONGRUENCE_ENUMERATION {
        congruences(t)?
    } else {
        sampled_congruences(t)?
    };

    let mut projection_failure = None;
    let mut idempotent_image_failure = None;
    let mut lifting_failure = None;
    for (ci, c) in congruence_list.iter().enumerate() {
        let q = t.quotient_by_congruence(c)?;
        let p = &q.projection;
        if projection_failure.is_none() {
            projection_failure = pairs(n)
                .find(|&(x, y)| p[t.op(x, y)] != q.table.op(p[x], p[y]))
                .map(|(x, y)| format!("congruence #{ci} {:?}: x={x}, y={y}", c.classes()));
        }
        let image = Subset::from_elements(q.table.order(), idempotents.iter().map(|&e| p[e]));
        if idempotent_image_failure.is_none() && image != q.table.idempotents() {
            idempotent_image_failure = Some(format!(
                "congruence #{ci} {:?}: E(Y) = {} but q[E(X)] = {image}",
                c.classes(),
                q.table.idempotents()
            ));
        }
        if lifting_failure.is_none() {
            for e_class in q.table.idempotents().iter() {
                let ok = t.lift_idempotent(c, e_class).is_ok_and(|s| {
                    let lifted = Subset::from_elements(q.table.order(), h[s].iter().map(|x| p[x]));
                    lifted == q.table.h_class(e_class)
                });
                if !ok {
                    lifting_failure = Some(format!(
                        "congruence #{ci} {:?}: class {e_class}",
                        c.classes()
                    ));
                    break;
                }
            }
        }
    }
    results.push(property(
        "quotient projection is a homomorphism",
        projection_failure,
    ));
    results.push(property(
        "idempotents of a quotient are images of idempotents",
        idempotent_image_failure,
    ));
    results.push(property(
        "least idempotent lift maps its H-class onto the quotient H-class",
        lifting_failure,
    ));

    Ok(SuiteReport {
        order: n,
        congruences_checked: congruence_list.len(),
        results,
    })
}

/// Suite results over every enumerated table of order `1..=max_order`.
#[derive(Debug, Clone)]
pub struct CorpusReport {
    /// `(order, tables checked)` per order.
    pub checked: Vec<(usize, usize)>,
    /// Failing tables with their reports, in enumeration order.
    pub failures: Vec<(CayleyTable, SuiteReport)>,
}

impl CorpusReport {
    pub fn tables_checked(&self) -> usize {
        self.checked.iter().map(|(_, k)| k).sum()
    }

    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn suite_over_corpus(max_order: usize, up_to_iso: bool) -> Result<CorpusReport> {
    let mut checked = Vec::new();
    let mut failures = Vec::new();
    for n in 1..=max_order {
        let tables = enumerate_commutative(n, up_to_iso)?;
        let reports: Vec<SuiteReport> =
            tables.par_iter().map(lemma_suite).collect::<Result<_>>()?;
        checked.push((n, tables.len()));
        failures.extend(
            tables
                .into_iter()
                .zip(reports)
                .filter(|(_, r)| !r.all_passed()),
        );
    }
    Ok(CorpusReport { checked, failures })
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

fn group_products_do_not_shrink(t: &CayleyTable, group: &Subset, e: usize) -> Option<String> {
    let members = group.to_vec();
    if members.len() <= SUBSET_SCAN_LIMIT {
        (1u64..1 << members.len()).find_map(|mask| {
            let a = Subset::from_elements(
                t.order(),
                (0..members.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| members[i]),
            );
            (a.len() >= 2 && t.product_set(&a, &a).len() < a.len()).then(|| format!("e={e}, A={a}"))
        })
    } else {
        // aA has |A| elements when translations are injective
        members.iter().find_map(|&a| {
            let image = Subset::from_elements(t.order(), members.iter().map(|&x| t.op(a, x)));
            (image.len() != members.len())
                .then(|| format!("e={e}: translation by {a} not injective"))
        })
    }
}

fn sampled_congruences(t: &CayleyTable) -> Result<Vec<Congruence>> {
    let n = t.order();
    let mut out = vec![Congruence::identity(n)];
    for x in 0..n {
        for y in x + 1..n {
            out.push(t.congruence_closure(&[(x, y)])?);
        }
        let ideal = t.generated_ideal(&Subset::from_elements(n, [x]))?;
        out.push(Congruence::rees(ideal.carrier()));
    }
    out.sort_by(|a, b| a.classes().cmp(b.classes()));
    out.dedup();
    Ok(out)
}
