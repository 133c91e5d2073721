//! Exhaustive code search on the hardest three-encoder state: find the
//! four-shot optimum, refute three shots, and scan the per-shot floor.

use fcomp::codes::{rate_of, SourceCode};
use fcomp::ffield::{FieldSpec, Matrix};
use fcomp::model::{ConnectivityState, Model};
use fcomp::search::{scan_capacity_floor, search_linear, CodeClass, SearchSpec};

fn main() {
    let f = FieldSpec::new(2).unwrap();
    let t = Matrix::from_rows(f, &[vec![1, 0], vec![1, 0], vec![0, 1]]).unwrap();
    let omega = ConnectivityState::new(3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
    let model = Model::new(omega, t).unwrap();

    // three symbols in four shots is achievable
    let spec = SearchSpec { model: model.clone(), k: 4, n_max: 3, class: CodeClass::Linear, workers: None };
    let out = search_linear(&spec).unwrap();
    let code = out.found.expect("rate 3/4 is the capacity");
    println!("k=4 n=3: found rate {} ({} nodes)", rate_of(&model, &code).unwrap().rate, out.nodes_visited);
    if let SourceCode::Linear(c) = &code {
        for (j, enc) in c.enc.iter().enumerate() {
            println!("  encoder {}: {} -> {} symbols", j + 1, enc.rows(), enc.cols());
        }
    }

    // two symbols in three shots is not: the floor stays above 2/3
    let spec = SearchSpec { model: model.clone(), k: 3, n_max: 2, class: CodeClass::Linear, workers: None };
    let out = search_linear(&spec).unwrap();
    println!(
        "k=3 n=2: exhausted with no code ({} nodes, {} pruned)",
        out.nodes_visited, out.pruned
    );

    let report = scan_capacity_floor(&model, 4).unwrap();
    println!("per-shot minima: {:?}", report.per_k);
    println!("floor over k <= 4: {}", report.floor);
}
