//! Golden-file comparison of the rank-2 P* and h tables.  The checked-in
//! JSON was produced by the klpoly dump and validated against the published
//! rank-2 data (Δ/n table, cell list, hand-expanded C′ products).

use std::sync::Arc;

use hecke::kl::{KlContext, KlTables, WeightFunction};
use hecke::perm::GroupTable;

#[test]
fn b2_tables_match_golden_file() {
    let group = Arc::new(GroupTable::new(2));
    let ctx = KlContext::new(group, WeightFunction::generic(2));
    let fresh = ctx.dump_tables(true);
    let golden: KlTables =
        serde_json::from_str(include_str!("golden/b2_tables.json")).expect("golden file parses");
    assert_eq!(fresh.rank, golden.rank);
    assert_eq!(fresh.regime, golden.regime);
    assert_eq!(fresh.pstar.len(), golden.pstar.len());
    for (a, b) in fresh.pstar.iter().zip(&golden.pstar) {
        assert_eq!((&a.y, &a.w), (&b.y, &b.w), "P* table order drifted");
        assert_eq!(a.poly, b.poly, "P*[{}, {}] drifted", a.y, a.w);
    }
    assert_eq!(fresh.h.len(), golden.h.len());
    for (a, b) in fresh.h.iter().zip(&golden.h) {
        assert_eq!(
            (&a.x, &a.y, &a.z),
            (&b.x, &b.y, &b.z),
            "h table order drifted"
        );
        assert_eq!(a.poly, b.poly, "h[{}, {}, {}] drifted", a.x, a.y, a.z);
    }
}

#[test]
fn b2_tables_round_trip_through_json() {
    let group = Arc::new(GroupTable::new(2));
    let ctx = KlContext::new(group, WeightFunction::generic(2));
    let dump = ctx.dump_tables(false);
    let json = serde_json::to_string(&dump).unwrap();
    let back: KlTables = serde_json::from_str(&json).unwrap();
    for (a, b) in dump.pstar.iter().zip(&back.pstar) {
        assert_eq!(a.poly, b.poly);
    }
}
