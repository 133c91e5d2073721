mod common;

use common::*;
use fcomp::bounds::{
    capacity_id, capacity_sum, lower_bound_gamma, lower_bound_general,
    lower_bound_general_unpruned, rank_partition, strong_partitions, Rational, StrongPartition,
};
use fcomp::codes::paper_code;
use fcomp::network::{to_network, CutSet};

#[test]
fn rationals_reduce_compare_and_print() {
    assert_eq!(Rational::new(4, 6), Rational::new(2, 3));
    assert_eq!((Rational::new(4, 6).num(), Rational::new(4, 6).den()), (2, 3));
    assert_eq!(Rational::new(0, 5), Rational::zero());
    assert!(Rational::new(2, 3) < Rational::new(3, 4));
    assert!(Rational::new(3, 2) > Rational::integer(1));
    assert_eq!(Rational::new(2, 3).to_string(), "2/3");
    assert_eq!(Rational::integer(2).to_string(), "2");
    assert_eq!("3/4".parse::<Rational>().unwrap(), Rational::new(3, 4));
    assert_eq!("2".parse::<Rational>().unwrap(), Rational::integer(2));
    assert!("1/0".parse::<Rational>().is_err());
    assert!("x/2".parse::<Rational>().is_err());
}

#[test]
fn gamma_bound_matches_hand_computations() {
    // every proper encoder subset encloses at most one source of rank 1
    assert_eq!(lower_bound_gamma(&omega1_t2(2)), Rational::new(2, 3));
    assert_eq!(lower_bound_gamma(&omega1_t1(2)), Rational::new(2, 3));
    assert_eq!(lower_bound_gamma(&omega2_t2(2)), Rational::new(2, 3));
    // single shared encoder forces rate s for the identity target
    let m = model(2, 1, &[&[0], &[0]], &id_target(2));
    assert_eq!(lower_bound_gamma(&m), Rational::integer(2));
    // sum through one encoder needs one symbol per shot
    let m = model(2, 1, &[&[0], &[0]], &sum_target(2));
    assert_eq!(lower_bound_gamma(&m), Rational::integer(1));
}

#[test]
fn trivial_partition_scores_the_plain_cut_rank() {
    let m = omega1_t2(2);
    let net = to_network(&m);
    let cut = CutSet { edges: vec![12, 13, 14] };
    let p = StrongPartition { parts: vec![cut.edges.clone()] };
    // one part: score is rank(T[I]) + rank(T[I]) - rank(T[I])
    assert_eq!(rank_partition(m.t(), &net, &p), 2);
}

#[test]
fn strong_partition_improves_on_the_gamma_bound_when_sources_collide() {
    // dependent-pair sources split across the encoders, third seeing both
    let (m, _) = paper_code("T2-m2-rate32").unwrap();
    // cutting both sink edges splits into non-interfering singleton parts:
    // 1 + 1 + rank(T) - rank of the dependent pair, over two edges
    let net = to_network(&m);
    let cut = CutSet { edges: vec![net.sink_edge(0), net.sink_edge(1)] };
    let parts = strong_partitions(&net, &cut).unwrap();
    let best = parts
        .iter()
        .map(|p| rank_partition(m.t(), &net, p))
        .max()
        .unwrap();
    assert_eq!(best, 3);
    assert_eq!(lower_bound_gamma(&m), Rational::integer(1));
    assert_eq!(lower_bound_general(&m).unwrap(), Rational::new(3, 2));
}

#[test]
fn general_bound_matches_frozen_values() {
    assert_eq!(lower_bound_general(&omega1_t2(2)).unwrap(), Rational::new(2, 3));
    assert_eq!(lower_bound_general(&omega2_t2(2)).unwrap(), Rational::new(2, 3));
    assert_eq!(lower_bound_general(&omega1_t1(2)).unwrap(), Rational::new(2, 3));
    let m = model(2, 1, &[&[0], &[0], &[0]], &t2_rows());
    assert_eq!(lower_bound_general(&m).unwrap(), Rational::integer(2));
}

#[test]
fn skipping_wide_cuts_never_changes_the_bound() {
    // full enumeration is only feasible below the partition cap, so the
    // three-encoder networks (15 edges) stay out of this comparison
    let mut cases = vec![
        model(2, 2, &[&[0], &[0], &[1]], &t2_rows()),
        model(2, 2, &[&[0, 1], &[0], &[1]], &t1_rows()),
        model(2, 2, &[&[0, 1], &[0, 1], &[0, 1]], &t2_rows()),
        model(2, 1, &[&[0], &[0]], &id_target(2)),
    ];
    cases.push(paper_code("T2-m2-rate32").unwrap().0);
    for m in cases {
        assert_eq!(
            lower_bound_general(&m).unwrap(),
            lower_bound_general_unpruned(&m).unwrap()
        );
    }
}

#[test]
fn closed_forms_evaluate_and_guard_their_rank() {
    let sum3 = model(2, 3, &omega1(), &sum_target(3));
    assert_eq!(capacity_sum(&sum3).unwrap(), Rational::new(1, 2));
    assert!(capacity_id(&sum3).is_err());

    let sum1 = model(2, 1, &[&[0], &[0], &[0]], &sum_target(3));
    assert_eq!(capacity_sum(&sum1).unwrap(), Rational::integer(1));

    let id3 = model(2, 3, &omega1(), &id_target(3));
    assert_eq!(capacity_id(&id3).unwrap(), Rational::integer(1));
    assert!(capacity_sum(&id3).is_err());

    // two sources sharing one of three encoders: best subset is all three
    let id23 = model(2, 3, &[&[0, 1], &[1, 2]], &id_target(2));
    assert_eq!(capacity_id(&id23).unwrap(), Rational::new(2, 3));

    // a single private encoder per source recovers everything at rate 1
    let id2 = model(2, 2, &[&[0], &[1]], &id_target(2));
    assert_eq!(capacity_id(&id2).unwrap(), Rational::integer(1));
    assert!(capacity_sum(&omega1_t2(2)).is_err());
    assert!(capacity_id(&omega1_t2(2)).is_err());
}
