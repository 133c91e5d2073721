//! Evaluate the image-counting inequalities that force rate 3/4 on the
//! four-shot reference code, then on randomized forwarding codes.

use fcomp::codes::{paper_code, random_forwarding_perturbation, verify_converse_counting, SourceCode};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let (model, code) = paper_code("T2-m3-rate34").unwrap();
    let rep = verify_converse_counting(&model, &SourceCode::Linear(code)).unwrap();
    println!("four-shot code: q={} k={} n={}", rep.q, rep.k, rep.n);
    println!("  joint images {} <= cap {}", rep.joint_image_count, rep.upper);
    println!("  min fixed-block images {}", rep.min_fixed_block_count);
    println!("  all inequalities hold: {}", rep.all_hold());

    // invertible remixes of plain forwarding keep the image partition
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut pass = 0;
    for _ in 0..20 {
        let code = random_forwarding_perturbation(&model, 2, &mut rng);
        if verify_converse_counting(&model, &SourceCode::Linear(code)).unwrap().all_hold() {
            pass += 1;
        }
    }
    println!("perturbed forwarding codes passing: {pass}/20");
}
