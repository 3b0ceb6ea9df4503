use proptest::prelude::*;
use semiclass_core::descriptor::{FactorKind, GroupFactor, GroupSpec, Multiplicity};
use semiclass_core::text::{parse_descriptor, parse_expr, DescriptorExpr, SemilatticeExpr};
use semiclass_core::{Descriptor, Error};
use std::path::Path;

const EXAMPLES: &[&str] = &[
    "(taimanov)",
    "(null)",
    "(group (cyclic 6))",
    "(group (prufer 2))",
    "(group (integers))",
    "(group (cyclic-tower 3))",
    "(group (cyclic 2 x omega) (prufer 5 x 3))",
    "(semilattice chain-omega)",
    "(semilattice antichain-omega-zero)",
    "(semilattice (poset lattice.tbl))",
    "(table z3.tbl)",
    "(table \"dir with space/t.tbl\")",
    "(product (group (cyclic 2)) (semilattice antichain-omega-zero))",
    "(adjoin-zero (taimanov))",
    "(adjoin-identity (product (null) (table a.tbl)))",
    "  ( product\n (taimanov)   (group (cyclic 4 x 2)) )",
];

#[test]
fn example_expressions_round_trip() {
    for src in EXAMPLES {
        let parsed = parse_expr(src).unwrap();
        let rendered = parsed.to_string();
        assert_eq!(parse_expr(&rendered).unwrap(), parsed, "{src}");
        assert_eq!(parse_expr(&rendered).unwrap().to_string(), rendered);
    }
}

#[test]
fn rendering_is_canonical() {
    let d = parse_expr("( product (taimanov)\n(group (cyclic 4 x 1)))").unwrap();
    assert_eq!(d.to_string(), "(product (taimanov) (group (cyclic 4)))");
}

#[test]
fn malformed_expressions_report_positions() {
    let err = parse_expr("(group (prufer 4))").unwrap_err();
    assert!(
        matches!(
            err,
            Error::Parse {
                line: 1,
                column: 16,
                ..
            }
        ),
        "{err}"
    );
    assert!(err.to_string().contains("not prime"));
    for bad in [
        "(product (null))",
        "(frobnicate)",
        "(null",
        "(null) (null)",
        "(group)",
        "",
    ] {
        assert!(parse_expr(bad).is_err(), "{bad}");
    }
}

#[test]
fn tables_resolve_relative_to_the_base_directory() {
    let dir = std::env::temp_dir().join(format!("semiclass-expr-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("z2.tbl"), "# Z2\n2\n0 1\n1 0\n").unwrap();
    std::fs::write(dir.join("lz.tbl"), "2\n0 0\n1 1\n").unwrap();
    let d = parse_descriptor("(product (table z2.tbl) (taimanov))", &dir).unwrap();
    assert!(matches!(d, Descriptor::Product(..)));
    assert!(parse_descriptor("(table lz.tbl)", &dir).is_err());
    assert!(parse_descriptor("(semilattice (poset z2.tbl))", &dir).is_err());
    assert!(parse_descriptor("(table missing.tbl)", Path::new(&dir)).is_err());
    std::fs::remove_dir_all(&dir).unwrap();
}

fn factor() -> impl Strategy<Value = GroupFactor> {
    let kind = prop_oneof![
        (1u64..50).prop_map(FactorKind::Cyclic),
        prop::sample::select(vec![2u64, 3, 5, 7, 11]).prop_map(FactorKind::Prufer),
        prop::sample::select(vec![2u64, 3, 5, 7, 11]).prop_map(FactorKind::CyclicTower),
        Just(FactorKind::Integers),
    ];
    let multiplicity = prop_oneof![
        (1u64..10).prop_map(Multiplicity::Finite),
        Just(Multiplicity::Omega),
    ];
    (kind, multiplicity).prop_map(|(kind, multiplicity)| GroupFactor { kind, multiplicity })
}

fn path() -> impl Strategy<Value = String> {
    prop_oneof!["[a-z][a-z0-9_]{0,6}\\.tbl", "[a-z ()]{1,8}\\.tbl"]
}

fn expr() -> impl Strategy<Value = DescriptorExpr> {
    let leaf = prop_oneof![
        Just(DescriptorExpr::Taimanov),
        Just(DescriptorExpr::Null),
        prop::collection::vec(factor(), 1..4)
            .prop_map(|f| DescriptorExpr::Group(GroupSpec::new(f))),
        Just(DescriptorExpr::Semilattice(SemilatticeExpr::ChainOmega)),
        Just(DescriptorExpr::Semilattice(
            SemilatticeExpr::AntichainOmegaZero
        )),
        path().prop_map(|p| DescriptorExpr::Semilattice(SemilatticeExpr::Poset(p))),
        path().prop_map(DescriptorExpr::Table),
    ];
    leaf.prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| DescriptorExpr::Product(Box::new(a), Box::new(b))),
            inner
                .clone()
                .prop_map(|a| DescriptorExpr::AdjoinZero(Box::new(a))),
            inner.prop_map(|a| DescriptorExpr::AdjoinIdentity(Box::new(a))),
        ]
    })
}

proptest! {
    #[test]
    fn render_then_parse_is_the_identity(e in expr()) {
        let rendered = e.to_string();
        let parsed = parse_expr(&rendered).unwrap();
        prop_assert_eq!(&parsed, &e);
        prop_assert_eq!(parsed.to_string(), rendered);
    }
}
