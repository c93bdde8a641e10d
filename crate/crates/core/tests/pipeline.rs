mod common;

use antimagic::layout::PathName;
use antimagic::oracle::recount_sums;
use antimagic::verify::circuit_sums;
use antimagic::{construct, verify_construction, Config, Construction, Graph};

use common::{acceptance_orders, all_distinct, forward_flags, slot_sums, union};

fn built(g: &Graph, seed: u64) -> Construction {
    let c = construct(
        g,
        &Config {
            seed,
            ..Config::default()
        },
    )
    .unwrap();
    let report = verify_construction(&c);
    assert!(report.antimagic_ok, "collisions: {:?}", report.collisions);
    assert!(report.invariants_ok(), "{:?}", report.invariant_results);
    c
}

fn first_vertex_sum(c: &Construction, i: usize) -> i64 {
    let comp = &c.components[i - 1];
    let slot = comp.layout.slot_of_name(1).unwrap();
    slot_sums(&c.labeled.circuits[i - 1])[slot]
}

#[test]
fn k5_is_antimagic() {
    let g = union(2, vec![5]);
    let c = built(&g, 0);
    let mut labels = c.labeled.labels.clone();
    labels.sort_unstable();
    assert_eq!(labels, (1..=10).collect::<Vec<_>>());
    assert_eq!(first_vertex_sum(&c, 1), 1);
}

#[test]
fn two_odd_components() {
    let g = union(2, vec![5, 5]);
    for seed in 0..5 {
        let c = built(&g, seed);
        assert_eq!(c.k, 2);
        assert_eq!(first_vertex_sum(&c, 1), 1);
        assert_eq!(first_vertex_sum(&c, 2), -1);
    }
}

#[test]
fn ninth_first_vertex_sum() {
    let g = union(2, acceptance_orders(9, 2, 1));
    for seed in 0..3 {
        let c = built(&g, seed);
        let layout = &c.components[8].layout;
        assert_eq!(layout.gap_of(PathName::new(2, 4)), Some(7));
        assert_eq!(layout.gap_of(PathName::new(3, 5)), Some(1));
        assert_eq!(first_vertex_sum(&c, 9), -9);
    }
}

#[test]
fn late_first_vertex_sums_count_up() {
    let g = union(2, acceptance_orders(12, 2, 0));
    let c = built(&g, 4);
    let late: Vec<i64> = (10..=12).map(|i| first_vertex_sum(&c, i)).collect();
    assert_eq!(late, vec![2, 3, 4]);
    let early: Vec<i64> = (1..=8).map(|i| first_vertex_sum(&c, i)).collect();
    assert_eq!(early, vec![1, -1, -2, -3, -4, -5, -6, -7]);
}

#[test]
fn projection_identity_holds() {
    let g = union(3, acceptance_orders(4, 3, 2));
    let c = built(&g, 2);
    let d = c.d as i64;
    let og = &c.labeled.graph;
    let recounted = recount_sums(
        og.vertex_count,
        g.edges(),
        &forward_flags(&g, &og.arcs),
        &c.labeled.labels,
    );
    for (comp, cl) in c.components.iter().zip(&c.labeled.circuits) {
        let local = slot_sums(cl);
        assert_eq!(local, circuit_sums(cl));
        for &slot in &comp.layout.real_slots {
            let v = comp.layout.circuit.vertex(slot);
            assert_eq!(recounted[v], local[slot] - (d - 1));
        }
    }
    assert!(all_distinct(&recounted));
}

#[test]
fn seeds_change_tours_but_not_validity() {
    let g = union(2, vec![7, 7, 8]);
    let a = built(&g, 1);
    let b = built(&g, 2);
    assert_ne!(a.labeled.labels, b.labeled.labels);
    let again = built(&g, 1);
    assert_eq!(a.labeled.labels, again.labeled.labels);
}
