mod common;

use common::*;
use fcomp::network::{i_gamma, to_network, CutSet, Node};

#[test]
fn induced_network_shape_matches_hand_count() {
    let net = to_network(&omega1_t2(2));
    // ceil(3 encoders / 2 target columns) parallel copies per pair
    assert_eq!(net.ell(), 2);
    // 6 connected pairs * 2 copies + 3 sink edges
    assert_eq!(net.edge_count(), 15);
    assert_eq!((net.s(), net.m()), (3, 3));
    assert_eq!(net.sink_edge(0), 12);
    assert_eq!(net.edges()[12].tail, Node::Encoder(0));
    assert_eq!(net.edges()[14].head, Node::Sink);
    assert_eq!(net.edges()[0].tail, Node::Source(0));

    // a sum target widens the parallel edge bundles
    let net = to_network(&model(2, 3, &omega1(), &sum_target(3)));
    assert_eq!(net.ell(), 3);
    assert_eq!(net.edge_count(), 6 * 3 + 3);
}

#[test]
fn separated_and_upstream_sets_match_frozen_cuts() {
    let net = to_network(&omega1_t2(2));
    // cutting the sink edges of encoders 1 and 2 strands source 1 only
    let cut = CutSet { edges: vec![12, 13] };
    assert_eq!(net.i_of_cut(&cut), vec![0]);
    assert_eq!(net.k_of_cut(&cut), vec![0, 1, 2]);
    // cutting all four outgoing edges of source 1 isolates exactly it
    let cut = CutSet { edges: vec![0, 1, 2, 3] };
    assert_eq!(net.i_of_cut(&cut), vec![0]);
    assert_eq!(net.k_of_cut(&cut), vec![0]);
    // one parallel copy left alive is enough to reach the sink
    assert_eq!(net.i_of_cut_mask(0b01), 0);
    assert_eq!(net.i_of_cut_mask(0b11), 0);
}

#[test]
fn every_cut_separates_someone_and_upstream_contains_separated() {
    let net = to_network(&omega1_t2(2));
    let mut count = 0usize;
    for cut in net.cut_sets().unwrap() {
        let i = net.i_of_cut_mask(cut.mask());
        let k = net.k_of_cut_mask(cut.mask());
        assert_ne!(i, 0);
        assert_eq!(i & !k, 0, "separated sources must be upstream");
        count += 1;
    }
    assert!(count > 0);
}

#[test]
fn tiny_network_cut_census_is_exact() {
    // two sources feeding one shared encoder, sum target
    let m = model(2, 1, &[&[0], &[0]], &sum_target(2));
    let net = to_network(&m);
    assert_eq!((net.ell(), net.edge_count()), (1, 3));
    let cuts: Vec<_> = net.cut_sets().unwrap().collect();
    assert_eq!(cuts.len(), 7);
    // the sink edge alone severs everything
    let sink_only = CutSet { edges: vec![2] };
    assert_eq!(net.i_of_cut(&sink_only), vec![0, 1]);
}

#[test]
fn sink_edge_cuts_separate_exactly_the_enclosed_sources() {
    for (gamma, t) in [(omega1(), t2_rows()), (omega2(), t2_rows()), (omega1(), t1_rows())] {
        let m = model(2, 3, &gamma, &t);
        let net = to_network(&m);
        for d_mask in 0u32..8 {
            let d: Vec<usize> = (0..3).filter(|&j| d_mask >> j & 1 == 1).collect();
            let cut_mask: u32 = d.iter().map(|&j| 1 << net.sink_edge(j)).sum();
            let separated = net.i_of_cut_mask(cut_mask);
            let expected: u32 = i_gamma(m.omega(), &d).iter().map(|&i| 1 << i).sum();
            assert_eq!(separated, expected, "gamma sub {d:?}");
        }
    }
}

#[test]
fn fully_enclosed_sources_are_recognized() {
    let st = state(3, &omega2());
    assert_eq!(i_gamma(&st, &[0, 1]), vec![0]);
    assert_eq!(i_gamma(&st, &[0, 2]), vec![1]);
    assert_eq!(i_gamma(&st, &[1, 2]), Vec::<usize>::new());
    assert_eq!(i_gamma(&st, &[0, 1, 2]), vec![0, 1, 2]);
}
