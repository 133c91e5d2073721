//! Relabel a model, recover the permutation pair by search, and show the
//! two rate-3/4 states are genuinely different instances.

use fcomp::ffield::{FieldSpec, Matrix};
use fcomp::model::{enumerate_states, find_isomorphism, ConnectivityState, Model, PermPair};

fn main() {
    let f = FieldSpec::new(2).unwrap();
    let t = Matrix::from_rows(f, &[vec![1, 0], vec![1, 0], vec![0, 1]]).unwrap();
    let omega = ConnectivityState::new(3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
    let a = Model::new(omega, t.clone()).unwrap();

    let scrambled = a.apply_perm(&PermPair { pi: vec![2, 0, 1], tau: vec![1, 2, 0] });
    match find_isomorphism(&a, &scrambled) {
        Some(pp) => println!("recovered relabeling pi={:?} tau={:?}", pp.pi, pp.tau),
        None => unreachable!("a relabeling is always isomorphic"),
    }

    let other = ConnectivityState::new(3, vec![vec![0, 1], vec![0, 2], vec![0, 1, 2]]).unwrap();
    let b = Model::new(other, t).unwrap();
    println!("same capacity, isomorphic: {}", find_isomorphism(&a, &b).is_some());

    // count states up to nothing at all: the raw census
    for m in 1..=3 {
        println!("states with 3 sources, {m} encoders: {}", enumerate_states(3, m).unwrap().len());
    }
}
