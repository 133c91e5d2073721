mod common;

use common::{field, matrix};
use fcomp::ffield::{FieldSpec, Matrix};

const FIELD_SIZES: [u32; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

#[test]
fn axioms_hold_exhaustively_in_every_supported_field() {
    for q in FIELD_SIZES {
        let f = field(q);
        assert_eq!(f.q(), q);
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                let inv = f.inv(a).unwrap();
                assert_eq!(f.mul(a, inv), 1, "q={q} a={a}");
            } else {
                assert_eq!(f.inv(a), None);
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
                assert!(f.contains(f.add(a, b)) && f.contains(f.mul(a, b)));
                for c in 0..q {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(
                        f.mul(a, f.add(b, c)),
                        f.add(f.mul(a, b), f.mul(a, c)),
                        "distributivity q={q} a={a} b={b} c={c}"
                    );
                }
            }
        }
    }
}

#[test]
fn multiplicative_group_is_cyclic_of_order_q_minus_1() {
    for q in FIELD_SIZES {
        let f = field(q);
        // every nonzero element satisfies a^(q-1) = 1
        for a in 1..q {
            let mut pow = 1;
            for _ in 0..q - 1 {
                pow = f.mul(pow, a);
            }
            assert_eq!(pow, 1, "q={q} a={a}");
        }
    }
}

#[test]
fn non_prime_power_sizes_are_rejected() {
    for q in [0, 1, 6, 10, 12, 15, 18, 100] {
        assert!(FieldSpec::new(q).is_err(), "q={q} should be rejected");
    }
}

#[test]
fn characteristic_and_degree_are_reported() {
    let f = field(16);
    assert_eq!((f.p(), f.e()), (2, 4));
    let f = field(9);
    assert_eq!((f.p(), f.e()), (3, 2));
    let f = field(13);
    assert_eq!((f.p(), f.e()), (13, 1));
}

#[test]
fn rank_matches_frozen_examples() {
    let m = matrix(2, &[vec![1, 0], vec![1, 0], vec![0, 1]]);
    assert_eq!(m.rank(), 2);
    let m = matrix(3, &[vec![1, 2, 0], vec![2, 2, 0], vec![0, 0, 1]]);
    assert_eq!(m.rank(), 3);
    // second row is twice the first
    let m = matrix(3, &[vec![1, 2], vec![2, 1]]);
    assert_eq!(m.rank(), 1);
    assert_eq!(Matrix::zero(field(5), 3, 4).rank(), 0);
    assert_eq!(Matrix::identity(field(4), 6).rank(), 6);
}

#[test]
fn row_reduce_is_idempotent_and_rank_preserving() {
    let cases = [
        matrix(2, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]),
        matrix(5, &[vec![2, 3, 1], vec![4, 1, 0], vec![1, 4, 1]]),
        matrix(4, &[vec![1, 2], vec![3, 1], vec![2, 3]]),
    ];
    for m in cases {
        let r = m.row_reduce();
        assert_eq!(r.row_reduce(), r);
        assert_eq!(r.rank(), m.rank());
    }
}

#[test]
fn row_space_membership_agrees_with_exhaustive_span() {
    // GF(3) 2x3: enumerate all 9 combinations of the rows and compare
    let f = field(3);
    let m = matrix(3, &[vec![1, 2, 0], vec![0, 1, 1]]);
    let mut span = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            let v: Vec<u32> = (0..3)
                .map(|c| f.add(f.mul(a, m.get(0, c)), f.mul(b, m.get(1, c))))
                .collect();
            span.push(v);
        }
    }
    for x in 0..3u32 {
        for y in 0..3u32 {
            for z in 0..3u32 {
                let v = vec![x, y, z];
                assert_eq!(m.row_space_contains(&v).unwrap(), span.contains(&v));
            }
        }
    }
}

#[test]
fn solve_finds_a_preimage_exactly_when_one_exists() {
    let m = matrix(2, &[vec![1, 1], vec![0, 1], vec![1, 0]]);
    // columns of m span GF(2)^2 viewed as x -> m * x
    for b0 in 0..2u32 {
        for b1 in 0..2u32 {
            for b2 in 0..2u32 {
                let b = vec![b0, b1, b2];
                match m.solve(&b).unwrap() {
                    Some(x) => {
                        let f = m.field();
                        for r in 0..3 {
                            let got = f.add(f.mul(m.get(r, 0), x[0]), f.mul(m.get(r, 1), x[1]));
                            assert_eq!(got, b[r]);
                        }
                    }
                    None => {
                        // consistent b must satisfy b0 = b1 + b2
                        assert_ne!(b0, (b1 + b2) % 2);
                    }
                }
            }
        }
    }
}

#[test]
fn multiply_transpose_and_stacking_compose() {
    let a = matrix(3, &[vec![1, 2], vec![0, 1]]);
    let b = matrix(3, &[vec![2, 0, 1], vec![1, 1, 0]]);
    let ab = a.multiply(&b).unwrap();
    assert_eq!(ab.row(0), &[1, 2, 1]);
    assert_eq!(ab.row(1), &[1, 1, 0]);
    assert_eq!(ab.transpose().transpose(), ab);
    let stacked = a.vstack(&a).unwrap();
    assert_eq!((stacked.rows(), stacked.cols()), (4, 2));
    assert_eq!(stacked.rank(), a.rank());
    let wide = a.hstack(&a).unwrap();
    assert_eq!((wide.rows(), wide.cols()), (2, 4));
    assert!(a.invertible());
    assert!(!matrix(3, &[vec![1, 2], vec![2, 1]]).invertible());
}

#[test]
fn apply_row_is_the_row_vector_action() {
    let m = matrix(2, &[vec![1, 0, 1], vec![1, 1, 0]]);
    assert_eq!(m.apply_row(&[1, 1]).unwrap(), vec![0, 1, 1]);
    assert_eq!(m.apply_row(&[0, 0]).unwrap(), vec![0, 0, 0]);
}
