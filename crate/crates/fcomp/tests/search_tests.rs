mod common;

use common::*;
use fcomp::bounds::{lower_bound_general, Rational};
use fcomp::codes::{is_realizable, paper_code, rate_of};
use fcomp::model::Model;
use fcomp::search::{
    scan_capacity_floor, search_linear, search_linear_with_pruning, search_table, CodeClass,
    SearchError, SearchSpec,
};

fn spec(model: Model, k: usize, n_max: usize, class: CodeClass) -> SearchSpec {
    SearchSpec { model, k, n_max, class, workers: None }
}

fn single_encoder_t2() -> Model {
    model(2, 1, &[&[0], &[0], &[0]], &t2_rows())
}

#[test]
fn one_shot_one_symbol_code_exists_for_the_three_quarters_state() {
    let m = omega1_t2(2);
    let out = search_linear(&spec(m.clone(), 1, 1, CodeClass::Linear)).unwrap();
    let code = out.found.expect("a rate-1 one-shot code exists");
    assert!(is_realizable(&m, &code).unwrap());
    assert!(rate_of(&m, &code).unwrap().rate <= Rational::integer(1));
}

#[test]
fn three_shots_in_two_symbols_is_exhausted_without_a_code() {
    let m = omega1_t2(2);
    let out = search_linear(&spec(m, 3, 2, CodeClass::Linear)).unwrap();
    assert!(out.found.is_none());
    assert!(out.nodes_visited > 0);
}

#[test]
fn found_rates_never_beat_the_cut_bound() {
    for m in [omega1_t2(2), omega1_t1(2), single_encoder_t2()] {
        let bound = lower_bound_general(&m).unwrap();
        for (k, n_max) in [(1, 1), (1, 2), (2, 2)] {
            let out = search_linear(&spec(m.clone(), k, n_max, CodeClass::Linear)).unwrap();
            if let Some(code) = out.found {
                assert!(rate_of(&m, &code).unwrap().rate >= bound);
                assert!(is_realizable(&m, &code).unwrap());
            }
        }
    }
}

#[test]
fn table_search_matches_the_single_encoder_census() {
    let m = single_encoder_t2();
    // two symbols carry both target coordinates; one cannot
    let found = search_table(&spec(m.clone(), 1, 2, CodeClass::Table)).unwrap();
    let code = found.found.expect("forwarding both outputs fits");
    assert!(is_realizable(&m, &code).unwrap());
    assert_eq!(rate_of(&m, &code).unwrap().n, 2);
    let missed = search_table(&spec(m, 1, 1, CodeClass::Table)).unwrap();
    assert!(missed.found.is_none());
}

#[test]
fn a_budget_of_k_symbols_per_source_always_succeeds() {
    // any encoder can just forward everything it sees
    let m = omega1_t2(2);
    let out = search_linear(&spec(m.clone(), 1, 3, CodeClass::Linear)).unwrap();
    assert!(out.found.is_some());
    let out = search_table(&spec(single_encoder_t2(), 1, 3, CodeClass::Table)).unwrap();
    assert!(out.found.is_some());
}

#[test]
fn pruning_never_changes_the_outcome() {
    for (m, k, n_max) in [
        (omega1_t2(2), 1, 1),
        (omega1_t2(2), 2, 1),
        (omega2_t2(2), 1, 1),
        (single_encoder_t2(), 1, 2),
    ] {
        let s = spec(m, k, n_max, CodeClass::Linear);
        let pruned = search_linear_with_pruning(&s, true).unwrap();
        let unpruned = search_linear_with_pruning(&s, false).unwrap();
        assert_eq!(pruned.found.is_some(), unpruned.found.is_some(), "k={k} n={n_max}");
        if let (Some(a), Some(b)) = (&pruned.found, &unpruned.found) {
            assert_eq!(a, b, "both orders must pick the first certificate");
        }
        assert!(pruned.nodes_visited <= unpruned.nodes_visited);
    }
}

#[test]
fn worker_count_does_not_change_the_certificate() {
    let m = omega1_t2(2);
    let mut outs = Vec::new();
    for workers in [Some(1), Some(2), None] {
        let s = SearchSpec { model: m.clone(), k: 2, n_max: 2, class: CodeClass::Linear, workers };
        outs.push(search_linear(&s).unwrap().found.expect("rate 1 is feasible"));
    }
    assert_eq!(outs[0], outs[1]);
    assert_eq!(outs[1], outs[2]);
}

#[test]
fn oversized_searches_are_refused_up_front() {
    let m = omega2_t2(2);
    // the all-seeing encoder alone ranges over far more than 2^40 maps
    let err = search_linear(&spec(m, 4, 4, CodeClass::Linear)).unwrap_err();
    assert!(matches!(err, SearchError::CapExceeded(_)));
    let big = single_encoder_t2();
    assert!(search_table(&spec(big, 8, 2, CodeClass::Table)).is_err());
}

#[test]
fn scan_pins_the_single_encoder_floor_at_one_shot() {
    for t in [t1_rows(), t2_rows()] {
        let m = model(2, 1, &[&[0], &[0], &[0]], &t);
        let report = scan_capacity_floor(&m, 2).unwrap();
        assert_eq!(report.per_k, vec![(1, 2), (2, 4)]);
        assert_eq!(report.floor, Rational::integer(2));
    }
}

#[test]
fn scan_needs_three_shots_to_reach_two_thirds() {
    let (m, _) = paper_code("T1-m3-rate23").unwrap();
    let report = scan_capacity_floor(&m, 3).unwrap();
    assert_eq!(report.per_k, vec![(1, 1), (2, 2), (3, 2)]);
    assert_eq!(report.floor, Rational::new(2, 3));
}
