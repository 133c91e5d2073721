//! Classify target matrices and compute the exact rate lower bounds for
//! a few three-source instances.

use fcomp::bounds::{lower_bound_gamma, lower_bound_general};
use fcomp::ffield::{FieldSpec, Matrix};
use fcomp::model::{classify, ConnectivityState, Model};

fn main() {
    let f = FieldSpec::new(2).unwrap();
    let targets = [
        ("all pairs independent", vec![vec![1, 0], vec![0, 1], vec![1, 1]]),
        ("rows 1 and 2 dependent", vec![vec![1, 0], vec![1, 0], vec![0, 1]]),
        ("plain sum", vec![vec![1], vec![1], vec![1]]),
    ];
    // each source misses a different encoder
    let gamma = vec![vec![0, 1], vec![0, 2], vec![1, 2]];

    for (label, rows) in targets {
        let t = Matrix::from_rows(f.clone(), &rows).unwrap();
        let omega = ConnectivityState::new(3, gamma.clone()).unwrap();
        let model = Model::new(omega, t).unwrap();
        println!("{label}: {:?}", classify(model.t()));
        println!("  enclosed-subset bound  {}", lower_bound_gamma(&model));
        println!("  strong-partition bound {}", lower_bound_general(&model).unwrap());
    }
}
