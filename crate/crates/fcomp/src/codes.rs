//! k-shot source codes: linear and table-based encoders, zero-error
//! admissibility, rate reports, a catalog of explicit reference codes,
//! and the image-counting checks behind the 3/4 converse.

use std::collections::HashMap;

use crate::bounds::Rational;
use crate::ffield::{FFieldError, FieldSpec, Matrix};
use crate::model::{ConnectivityState, Model, ModelError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CodesError {
    #[error("code shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("enumeration domain q^(k*s) exceeds 2^20")]
    DomainTooLarge,
    #[error("unknown catalog id {0:?}")]
    UnknownId(String),
    #[error("code is not admissible for the model")]
    NotAdmissible,
    #[error("counting checks need one encoder fed by exactly sources 1 and 3")]
    WrongShapeForCounting,
    #[error(transparent)]
    Field(#[from] FFieldError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Linear k-shot code: encoder j applies x -> x * enc[j], where x is the
/// concatenation of the k-symbol blocks of its visible sources in
/// ascending source order, shots within a block in shot order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    pub k: usize,
    pub enc: Vec<Matrix>,
}

/// Table k-shot code: encoder j maps the canonical index of its input
/// tuple to an abstract image label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableCode {
    pub k: usize,
    pub enc: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SourceCode {
    Linear(LinearCode),
    Table(TableCode),
}

impl SourceCode {
    pub fn k(&self) -> usize {
        match self {
            SourceCode::Linear(c) => c.k,
            SourceCode::Table(c) => c.k,
        }
    }
}

/// Per-encoder symbol counts and the resulting rate max_j n_j / k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RateReport {
    pub n_per_encoder: Vec<usize>,
    pub n: usize,
    pub k: usize,
    pub rate: Rational,
}

fn idx_to_digits(mut idx: u64, q: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((idx % q as u64) as u32);
        idx /= q as u64;
    }
    out
}

fn digits_to_idx(digits: &[u32], q: u32) -> u64 {
    digits.iter().rev().fold(0u64, |acc, &d| acc * q as u64 + d as u64)
}

fn check_shapes(model: &Model, code: &SourceCode) -> Result<(), CodesError> {
    let m = model.m();
    let k = code.k();
    let q = model.field().q();
    match code {
        SourceCode::Linear(c) => {
            if c.enc.len() != m {
                return Err(CodesError::ShapeMismatch(format!(
                    "{} encoder matrices for {} encoders",
                    c.enc.len(),
                    m
                )));
            }
            for (j, mj) in c.enc.iter().enumerate() {
                let expect = k * model.theta_of(j).len();
                if mj.rows() != expect {
                    return Err(CodesError::ShapeMismatch(format!(
                        "encoder {} matrix has {} rows, expected {}",
                        j + 1,
                        mj.rows(),
                        expect
                    )));
                }
                if mj.field() != model.field() {
                    return Err(CodesError::ShapeMismatch("field mismatch".into()));
                }
            }
        }
        SourceCode::Table(c) => {
            if c.enc.len() != m {
                return Err(CodesError::ShapeMismatch(format!(
                    "{} encoder tables for {} encoders",
                    c.enc.len(),
                    m
                )));
            }
            for (j, tj) in c.enc.iter().enumerate() {
                let dom = (q as u64).pow((k * model.theta_of(j).len()) as u32);
                if dom > 1 << 20 {
                    return Err(CodesError::DomainTooLarge);
                }
                if tj.len() as u64 != dom {
                    return Err(CodesError::ShapeMismatch(format!(
                        "encoder {} table has {} entries, expected {}",
                        j + 1,
                        tj.len(),
                        dom
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Input tuple of encoder j, taken from the full source tuple `x`
/// (s blocks of k symbols).
fn encoder_input(model: &Model, j: usize, k: usize, x: &[u32]) -> Vec<u32> {
    let mut input = Vec::with_capacity(k * model.theta_of(j).len());
    for i in model.theta_of(j) {
        input.extend_from_slice(&x[i * k..(i + 1) * k]);
    }
    input
}

fn encode_one(model: &Model, code: &SourceCode, j: usize, input: &[u32]) -> u64 {
    let q = model.field().q();
    match code {
        SourceCode::Linear(c) => {
            let out = c.enc[j].apply_row(input).expect("shape checked");
            digits_to_idx(&out, q)
        }
        SourceCode::Table(c) => c.enc[j][digits_to_idx(input, q) as usize] as u64,
    }
}

/// Shot-wise target value x_S * T as a flat vector (r blocks of k).
pub fn target_value(model: &Model, k: usize, x: &[u32]) -> Vec<u32> {
    let f = model.field();
    let t = model.t();
    let r = model.r();
    let mut out = vec![0u32; r * k];
    for c in 0..r {
        for shot in 0..k {
            let mut acc = 0;
            for i in 0..model.s() {
                acc = f.add(acc, f.mul(t.get(i, c), x[i * k + shot]));
            }
            out[c * k + shot] = acc;
        }
    }
    out
}

/// Zero-error admissibility by full enumeration: the joint encoder image
/// must determine the target value, so that a decoder exists.
pub fn is_realizable(model: &Model, code: &SourceCode) -> Result<bool, CodesError> {
    check_shapes(model, code)?;
    let q = model.field().q() as u64;
    let k = code.k();
    let total_bits = (q as f64).log2() * (k * model.s()) as f64;
    if total_bits > 20.0 {
        return Err(CodesError::DomainTooLarge);
    }
    let total = q.pow((k * model.s()) as u32);
    let mut seen: HashMap<Vec<u64>, Vec<u32>> = HashMap::new();
    for idx in 0..total {
        let x = idx_to_digits(idx, q as u32, k * model.s());
        let image: Vec<u64> = (0..model.m())
            .map(|j| encode_one(model, code, j, &encoder_input(model, j, k, &x)))
            .collect();
        let target = target_value(model, k, &x);
        match seen.entry(image) {
            std::collections::hash_map::Entry::Occupied(e) => {
                if e.get() != &target {
                    return Ok(false);
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(target);
            }
        }
    }
    Ok(true)
}

/// The shot-wise target map as a (k*s) x (k*r) matrix acting on row
/// vectors: block (i, c) is T[i][c] times the k x k identity.
pub fn block_target_matrix(model: &Model, k: usize) -> Matrix {
    let f = model.field().clone();
    let s = model.s();
    let r = model.r();
    let mut big = Matrix::zero(f, k * s, k * r);
    for i in 0..s {
        for c in 0..r {
            let coef = model.t().get(i, c);
            for shot in 0..k {
                big.set(i * k + shot, c * k + shot, coef);
            }
        }
    }
    big
}

/// Encoder j's matrix lifted to act on the full source tuple: rows for
/// invisible sources are zero.
fn lifted_encoder(model: &Model, code: &LinearCode, j: usize) -> Matrix {
    let k = code.k;
    let mj = &code.enc[j];
    let mut big = Matrix::zero(model.field().clone(), k * model.s(), mj.cols());
    for (pos, i) in model.theta_of(j).into_iter().enumerate() {
        for shot in 0..k {
            for c in 0..mj.cols() {
                big.set(i * k + shot, c, mj.get(pos * k + shot, c));
            }
        }
    }
    big
}

/// Algebraic admissibility for linear codes: every target functional must
/// lie in the span of the encoder functionals. Agrees with is_realizable.
pub fn is_realizable_linear(model: &Model, code: &LinearCode) -> Result<bool, CodesError> {
    check_shapes(model, &SourceCode::Linear(code.clone()))?;
    let mut stacked = Matrix::zero(model.field().clone(), 0, code.k * model.s());
    for j in 0..model.m() {
        stacked = stacked.vstack(&lifted_encoder(model, code, j).transpose())?;
    }
    let targets = block_target_matrix(model, code.k).transpose();
    let base_rank = stacked.rank();
    Ok(stacked.vstack(&targets)?.rank() == base_rank)
}

/// Per-encoder symbol counts: the matrix rank for linear encoders, the
/// base-q log of the image size (rounded up) for tables.
pub fn rate_of(model: &Model, code: &SourceCode) -> Result<RateReport, CodesError> {
    check_shapes(model, code)?;
    let q = model.field().q() as u64;
    let k = code.k();
    let n_per_encoder: Vec<usize> = match code {
        SourceCode::Linear(c) => c.enc.iter().map(|mj| mj.rank()).collect(),
        SourceCode::Table(c) => c
            .enc
            .iter()
            .map(|tj| {
                let mut labels: Vec<u32> = tj.clone();
                labels.sort_unstable();
                labels.dedup();
                let count = labels.len() as u64;
                let mut n = 0usize;
                let mut cap = 1u64;
                while cap < count {
                    cap *= q;
                    n += 1;
                }
                n
            })
            .collect(),
    };
    let n = n_per_encoder.iter().copied().max().unwrap_or(0);
    Ok(RateReport { n_per_encoder: n_per_encoder.clone(), n, k, rate: Rational::new(n as u64, k as u64) })
}

/// One linear output symbol: a sum of coefficient * source-shot terms.
type OutputExpr = Vec<(usize, usize, u32)>;

fn build_encoder(
    model: &Model,
    j: usize,
    k: usize,
    outputs: &[OutputExpr],
) -> Matrix {
    let theta = model.theta_of(j);
    let f = model.field().clone();
    let mut mj = Matrix::zero(f, k * theta.len(), outputs.len());
    for (col, expr) in outputs.iter().enumerate() {
        for &(source, shot, coef) in expr {
            let pos = theta
                .iter()
                .position(|&i| i == source)
                .expect("output refers to a visible source");
            mj.set(pos * k + shot, col, coef);
        }
    }
    mj
}

fn t1(f: &FieldSpec) -> Matrix {
    Matrix::from_rows(f.clone(), &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap()
}

fn t2(f: &FieldSpec) -> Matrix {
    Matrix::from_rows(f.clone(), &[vec![1, 0], vec![1, 0], vec![0, 1]]).unwrap()
}

/// Catalog identifiers of the transcribed reference codes.
pub const CATALOG: [&str; 14] = [
    "T2-m3-rate34",
    "T1-m3-rate23",
    "T2-m3-rate23",
    "T2-m2-rate32",
    "T1-m1",
    "T2-m1",
    "T1-m2-1A",
    "T1-m2-1B",
    "T1-m2-2A",
    "T1-m2-2C",
    "T2-m2-1A",
    "T2-m2-1B",
    "T1-m3-id",
    "T2-m3-id",
];

/// Builds a transcribed reference model and code over GF(2) by catalog id.
pub fn paper_code(id: &str) -> Result<(Model, LinearCode), CodesError> {
    let f = FieldSpec::new(2).expect("GF(2) exists");
    // Entries: gamma sets (0-based), target picker, k, per-encoder outputs
    // as (source, shot, coefficient) sums.
    let (gamma, use_t1, k, outputs): (Vec<Vec<usize>>, bool, usize, Vec<Vec<OutputExpr>>) = match id {
        "T2-m3-rate34" => (
            vec![vec![0, 1], vec![0, 2], vec![1, 2]],
            false,
            4,
            vec![
                vec![
                    vec![(0, 0, 1), (1, 0, 1)],
                    vec![(0, 1, 1), (1, 1, 1)],
                    vec![(0, 2, 1), (1, 2, 1)],
                ],
                vec![vec![(0, 3, 1)], vec![(2, 0, 1)], vec![(2, 1, 1)]],
                vec![vec![(1, 3, 1)], vec![(2, 2, 1)], vec![(2, 3, 1)]],
            ],
        ),
        "T1-m3-rate23" => (
            vec![vec![0, 1], vec![0, 2], vec![1, 2]],
            true,
            3,
            vec![
                vec![vec![(1, 0, 1), (0, 0, 1)], vec![(0, 1, 1), (1, 1, 1)]],
                vec![vec![(0, 0, 1), (2, 0, 1)], vec![(0, 2, 1), (2, 2, 1)]],
                vec![vec![(1, 1, 1), (2, 1, 1)], vec![(1, 2, 1), (2, 2, 1)]],
            ],
        ),
        "T2-m3-rate23" => (
            vec![vec![0, 1], vec![0, 1], vec![1, 2]],
            false,
            3,
            vec![
                vec![vec![(0, 0, 1), (1, 0, 1)], vec![(0, 1, 1), (1, 1, 1)]],
                vec![vec![(0, 2, 1), (1, 2, 1)], vec![(2, 0, 1)]],
                vec![vec![(2, 1, 1)], vec![(2, 2, 1)]],
            ],
        ),
        "T2-m2-rate32" => (
            vec![vec![0], vec![1], vec![0, 1]],
            false,
            2,
            vec![
                vec![vec![(0, 0, 1)], vec![(0, 1, 1)], vec![(2, 0, 1)]],
                vec![vec![(1, 0, 1)], vec![(1, 1, 1)], vec![(2, 1, 1)]],
            ],
        ),
        "T1-m1" => (
            vec![vec![0], vec![0], vec![0]],
            true,
            1,
            vec![vec![vec![(0, 0, 1), (1, 0, 1)], vec![(0, 0, 1), (2, 0, 1)]]],
        ),
        "T2-m1" => (
            vec![vec![0], vec![0], vec![0]],
            false,
            1,
            vec![vec![vec![(0, 0, 1), (1, 0, 1)], vec![(2, 0, 1)]]],
        ),
        "T1-m2-1A" => (
            vec![vec![0], vec![0], vec![1]],
            true,
            1,
            vec![vec![vec![(0, 0, 1)], vec![(1, 0, 1)]], vec![vec![(2, 0, 1)]]],
        ),
        "T1-m2-1B" => (
            vec![vec![0], vec![1], vec![0]],
            true,
            1,
            vec![vec![vec![(0, 0, 1)], vec![(2, 0, 1)]], vec![vec![(1, 0, 1)]]],
        ),
        "T1-m2-2A" => (
            vec![vec![0, 1], vec![0], vec![1]],
            true,
            1,
            vec![
                vec![vec![(1, 0, 1), (0, 0, 1)]],
                vec![vec![(0, 0, 1), (2, 0, 1)]],
            ],
        ),
        "T1-m2-2C" => (
            vec![vec![0], vec![1], vec![0, 1]],
            true,
            1,
            vec![
                vec![vec![(0, 0, 1), (2, 0, 1)]],
                vec![vec![(1, 0, 1), (2, 0, 1)]],
            ],
        ),
        "T2-m2-1A" => (
            vec![vec![0], vec![0], vec![1]],
            false,
            1,
            vec![vec![vec![(0, 0, 1), (1, 0, 1)]], vec![vec![(2, 0, 1)]]],
        ),
        "T2-m2-1B" => (
            vec![vec![0], vec![1], vec![0]],
            false,
            1,
            vec![vec![vec![(0, 0, 1)], vec![(2, 0, 1)]], vec![vec![(1, 0, 1)]]],
        ),
        "T1-m3-id" => (
            vec![vec![0], vec![1], vec![2]],
            true,
            1,
            vec![vec![vec![(0, 0, 1)]], vec![vec![(1, 0, 1)]], vec![vec![(2, 0, 1)]]],
        ),
        "T2-m3-id" => (
            vec![vec![0], vec![1], vec![2]],
            false,
            1,
            vec![vec![vec![(0, 0, 1)]], vec![vec![(1, 0, 1)]], vec![vec![(2, 0, 1)]]],
        ),
        _ => return Err(CodesError::UnknownId(id.to_string())),
    };
    let m = gamma.iter().flatten().copied().max().unwrap() + 1;
    let omega = ConnectivityState::new(m, gamma)?;
    let t = if use_t1 { t1(&f) } else { t2(&f) };
    let model = Model::new(omega, t)?;
    let enc = (0..m).map(|j| build_encoder(&model, j, k, &outputs[j])).collect();
    Ok((model, LinearCode { k, enc }))
}

/// Numeric sides of the three image-counting inequalities behind the
/// 3/4 converse, evaluated by full enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConverseReport {
    pub q: u32,
    pub k: usize,
    pub n: usize,
    /// Total number of distinct joint encoder images.
    pub joint_image_count: u64,
    /// q^(3n): cardinality cap on the joint image.
    pub upper: u128,
    /// Smallest over b of the image count of the side encoder with the
    /// other-source block pinned to b.
    pub min_fixed_block_count: u64,
    pub upper_holds: bool,
    pub per_block_holds: bool,
    pub lower_holds: bool,
}

impl ConverseReport {
    pub fn all_hold(&self) -> bool {
        self.upper_holds && self.per_block_holds && self.lower_holds
    }
}

/// Checks the counting inequalities for an admissible code on a model
/// with three sources, three encoders, and one encoder fed by exactly
/// sources 1 and 3:
/// joint image count <= q^(3n), each fixed-b image count of that encoder
/// is >= q^(k-n), and the joint image count is >= q^(3k-n).
pub fn verify_converse_counting(
    model: &Model,
    code: &SourceCode,
) -> Result<ConverseReport, CodesError> {
    if model.s() != 3 || model.m() != 3 {
        return Err(CodesError::WrongShapeForCounting);
    }
    let side = (0..3)
        .find(|&j| model.theta_of(j) == vec![0, 2])
        .ok_or(CodesError::WrongShapeForCounting)?;
    if !is_realizable(model, code)? {
        return Err(CodesError::NotAdmissible);
    }
    let q = model.field().q();
    let k = code.k();
    let n = rate_of(model, code)?.n;
    let qk = (q as u64).pow(k as u32);

    let total = (q as u64).pow((k * 3) as u32);
    let mut joint: std::collections::HashSet<Vec<u64>> = std::collections::HashSet::new();
    for idx in 0..total {
        let x = idx_to_digits(idx, q, k * 3);
        joint.insert(
            (0..3)
                .map(|j| encode_one(model, code, j, &encoder_input(model, j, k, &x)))
                .collect(),
        );
    }
    let joint_image_count = joint.len() as u64;

    // The side encoder sees (x_1, x_3); pin the x_3 block to b and count
    // images over x_1.
    let mut min_fixed_block_count = u64::MAX;
    for b_idx in 0..qk {
        let b = idx_to_digits(b_idx, q, k);
        let mut images = std::collections::HashSet::new();
        for x1_idx in 0..qk {
            let mut input = idx_to_digits(x1_idx, q, k);
            input.extend_from_slice(&b);
            images.insert(encode_one(model, code, side, &input));
        }
        min_fixed_block_count = min_fixed_block_count.min(images.len() as u64);
    }

    let qn = (q as u128).pow(n as u32);
    let upper = (q as u128).pow((3 * n) as u32);
    // count >= q^(k-n) checked as count * q^n >= q^k to stay integral.
    let per_block_holds = min_fixed_block_count as u128 * qn >= (q as u128).pow(k as u32);
    let lower_holds = joint_image_count as u128 * qn >= (q as u128).pow((3 * k) as u32);
    Ok(ConverseReport {
        q,
        k,
        n,
        joint_image_count,
        upper,
        min_fixed_block_count,
        upper_holds: (joint_image_count as u128) <= upper,
        per_block_holds,
        lower_holds,
    })
}

/// An always-admissible baseline: every encoder forwards its whole input.
pub fn raw_forwarding(model: &Model, k: usize) -> LinearCode {
    let enc = (0..model.m())
        .map(|j| Matrix::identity(model.field().clone(), k * model.theta_of(j).len()))
        .collect();
    LinearCode { k, enc }
}

/// Mixes the raw-forwarding code by a random invertible matrix per
/// encoder; the image partition, hence admissibility, is unchanged.
pub fn random_forwarding_perturbation<R: rand::Rng>(
    model: &Model,
    k: usize,
    rng: &mut R,
) -> LinearCode {
    let f = model.field().clone();
    let enc = (0..model.m())
        .map(|j| {
            let d = k * model.theta_of(j).len();
            loop {
                let entries: Vec<u32> = (0..d * d).map(|_| rng.gen_range(0..f.q())).collect();
                let cand = Matrix::new(f.clone(), d, d, entries).expect("entries in range");
                if cand.invertible() {
                    return cand;
                }
            }
        })
        .collect();
    LinearCode { k, enc }
}
