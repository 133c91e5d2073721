#![allow(dead_code)]

use fcomp::ffield::{FieldSpec, Matrix};
use fcomp::model::{ConnectivityState, Model};

pub fn field(q: u32) -> FieldSpec {
    FieldSpec::new(q).unwrap()
}

pub fn matrix(q: u32, rows: &[Vec<u32>]) -> Matrix {
    Matrix::from_rows(field(q), rows).unwrap()
}

pub fn state(m: usize, gamma: &[&[usize]]) -> ConnectivityState {
    ConnectivityState::new(m, gamma.iter().map(|g| g.to_vec()).collect()).unwrap()
}

pub fn model(q: u32, m: usize, gamma: &[&[usize]], t_rows: &[Vec<u32>]) -> Model {
    Model::new(state(m, gamma), matrix(q, t_rows)).unwrap()
}

/// Rank 2, every pair of rows independent.
pub fn t1_rows() -> Vec<Vec<u32>> {
    vec![vec![1, 0], vec![0, 1], vec![1, 1]]
}

/// Rank 2, rows 1 and 2 dependent.
pub fn t2_rows() -> Vec<Vec<u32>> {
    vec![vec![1, 0], vec![1, 0], vec![0, 1]]
}

/// Three encoders, each source missing a different one.
pub fn omega1() -> Vec<&'static [usize]> {
    vec![&[0, 1], &[0, 2], &[1, 2]]
}

/// Three encoders, source 1 seeing all of them.
pub fn omega2() -> Vec<&'static [usize]> {
    vec![&[0, 1], &[0, 2], &[0, 1, 2]]
}

pub fn omega1_t1(q: u32) -> Model {
    model(q, 3, &omega1(), &t1_rows())
}

pub fn omega1_t2(q: u32) -> Model {
    model(q, 3, &omega1(), &t2_rows())
}

pub fn omega2_t2(q: u32) -> Model {
    model(q, 3, &omega2(), &t2_rows())
}

/// All-ones column: an algebraic-sum target for s sources.
pub fn sum_target(s: usize) -> Vec<Vec<u32>> {
    (0..s).map(|_| vec![1]).collect()
}

/// s x s identity target: recover every source.
pub fn id_target(s: usize) -> Vec<Vec<u32>> {
    (0..s)
        .map(|i| (0..s).map(|c| u32::from(c == i)).collect())
        .collect()
}
