//! Exhaustive existence search for admissible codes at fixed (k, n):
//! exact over encoder row spaces for linear codes, exact over canonical
//! lookup tables for tiny instances, with auditable node and prune counts.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;

use crate::bounds::Rational;
use crate::codes::{block_target_matrix, is_realizable, LinearCode, SourceCode, TableCode};
use crate::ffield::{FieldSpec, Matrix};
use crate::model::Model;
use crate::network::mask_to_vec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("search space exceeds the configured cap: {0}")]
    CapExceeded(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeClass {
    Linear,
    Table,
}

#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub model: Model,
    pub k: usize,
    /// Uniform per-encoder symbol budget: n_j <= n_max.
    pub n_max: usize,
    pub class: CodeClass,
    /// Worker count hint; None uses the default thread pool.
    pub workers: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    /// First certificate in canonical candidate order, if any. Candidates
    /// are ordered per encoder by (dimension, then basis entries), and
    /// encoders are assigned in ascending visible-source count; the final
    /// encoder is completed in closed form.
    pub found: Option<SourceCode>,
    pub nodes_visited: u64,
    pub pruned: u64,
}

/// One candidate encoder behavior: a functional subspace in reduced
/// echelon basis form, both on the encoder's own input coordinates and
/// lifted to full source-tuple coordinates.
struct Candidate {
    dim: usize,
    local_rows: Vec<Vec<u32>>,
    global_rows: Vec<Vec<u32>>,
    /// Bit-packed global rows, populated for binary fields with at most
    /// 64 full coordinates; used by the hot pruning checks.
    packed_global: Vec<u64>,
}

fn pack_row(row: &[u32]) -> u64 {
    row.iter().enumerate().fold(0u64, |acc, (c, &x)| acc | (u64::from(x != 0) << c))
}

/// Xor basis over packed binary rows, one slot per leading bit; returns
/// true if the row was independent of the basis so far.
fn insert64(basis: &mut [u64; 64], mut row: u64) -> bool {
    while row != 0 {
        let top = 63 - row.leading_zeros() as usize;
        if basis[top] == 0 {
            basis[top] = row;
            return true;
        }
        row ^= basis[top];
    }
    false
}

fn contains64(basis: &[u64; 64], mut row: u64) -> bool {
    while row != 0 {
        let top = 63 - row.leading_zeros() as usize;
        if basis[top] == 0 {
            return false;
        }
        row ^= basis[top];
    }
    true
}

/// Row-reduction workspace: pivot rows kept fully reduced against each
/// other, one pivot column each.
struct Basis<'f> {
    f: &'f FieldSpec,
    pivots: Vec<(usize, Vec<u32>)>,
}

impl<'f> Basis<'f> {
    fn new(f: &'f FieldSpec) -> Basis<'f> {
        Basis { f, pivots: Vec::new() }
    }

    fn reduce(&self, row: &mut [u32]) {
        for (col, pv) in &self.pivots {
            let factor = row[*col];
            if factor != 0 {
                for (x, &p) in row.iter_mut().zip(pv.iter()) {
                    *x = self.f.sub(*x, self.f.mul(factor, p));
                }
            }
        }
    }

    /// Inserts a row; returns false if it was already in the span.
    fn insert(&mut self, row: &[u32]) -> bool {
        let mut row = row.to_vec();
        self.reduce(&mut row);
        let Some(col) = row.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.f.inv(row[col]).unwrap();
        for x in row.iter_mut() {
            *x = self.f.mul(*x, inv);
        }
        for (_, pv) in self.pivots.iter_mut() {
            let factor = pv[col];
            if factor != 0 {
                for (x, &r) in pv.iter_mut().zip(row.iter()) {
                    *x = self.f.sub(*x, self.f.mul(factor, r));
                }
            }
        }
        self.pivots.push((col, row));
        true
    }

    fn contains(&self, row: &[u32]) -> bool {
        let mut row = row.to_vec();
        self.reduce(&mut row);
        row.iter().all(|&x| x == 0)
    }

}

/// All reduced-echelon bases of subspaces of F_q^dim_in with dimension
/// 0..=dim_max, ordered by dimension, then pivot columns, then entries.
fn enumerate_subspaces(f: &FieldSpec, dim_in: usize, dim_max: usize) -> Vec<Vec<Vec<u32>>> {
    let q = f.q();
    let mut out = vec![vec![]];
    for d in 1..=dim_max.min(dim_in) {
        let mut pivots: Vec<usize> = (0..d).collect();
        loop {
            // Free positions: non-pivot columns to the right of each pivot.
            let mut free: Vec<(usize, usize)> = Vec::new();
            for (r, &p) in pivots.iter().enumerate() {
                for c in p + 1..dim_in {
                    if !pivots.contains(&c) {
                        free.push((r, c));
                    }
                }
            }
            let mut digits = vec![0u32; free.len()];
            loop {
                let mut rows = vec![vec![0u32; dim_in]; d];
                for (r, &p) in pivots.iter().enumerate() {
                    rows[r][p] = 1;
                }
                for (&(r, c), &v) in free.iter().zip(digits.iter()) {
                    rows[r][c] = v;
                }
                out.push(rows);
                let mut pos = free.len();
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    digits[pos] += 1;
                    if digits[pos] < q {
                        break;
                    }
                    digits[pos] = 0;
                }
                if digits.iter().all(|&x| x == 0) {
                    break;
                }
            }
            if !next_combination(&mut pivots, dim_in) {
                break;
            }
        }
    }
    out
}

fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    for i in (0..k).rev() {
        if comb[i] < n - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

struct LinearSearch {
    model: Model,
    k: usize,
    n_max: usize,
    /// Encoder indices in assignment order (ascending visible-source
    /// count, ties by index).
    order: Vec<usize>,
    candidates: Vec<Vec<Candidate>>,
    /// Target functionals on full source-tuple coordinates.
    target_rows: Vec<Vec<u32>>,
    /// Required sum of n_j over each encoder subset: k * rank(T[I_Gamma]).
    needed: Vec<usize>,
    /// For each assignment depth, the full-coordinate positions invisible
    /// to every encoder still unassigned after that depth.
    visible_after: Vec<Vec<usize>>,
    /// Bit masks of visible_after, valid when packed is set.
    visible_after_masks: Vec<u64>,
    /// Full coordinates invisible to the last-assigned encoder.
    last_inv_coords: Vec<usize>,
    last_inv_mask: u64,
    /// Binary field with at most 64 full coordinates: pruning checks run
    /// on packed rows.
    packed: bool,
    packed_targets: Vec<u64>,
    prune: bool,
    nodes: AtomicU64,
    pruned: AtomicU64,
    best_idx: AtomicUsize,
}

impl LinearSearch {
    fn new(spec: &SearchSpec, prune: bool) -> Result<LinearSearch, SearchError> {
        let model = spec.model.clone();
        let k = spec.k;
        let q = model.field().q() as f64;
        let s = model.s();
        let m = model.m();

        // Ascending input size: the widest encoder is assigned last, where
        // completion is solved in closed form instead of enumerated.
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&j| (model.theta_of(j).len(), j));

        for j in 0..m {
            let bits = q.log2() * (k * model.theta_of(j).len() * spec.n_max) as f64;
            if bits > 40.0 {
                return Err(SearchError::CapExceeded(format!(
                    "encoder {} matrix space needs {bits:.0} bits",
                    j + 1
                )));
            }
        }

        let packed = model.field().q() == 2 && k * s <= 64;

        let f = model.field().clone();
        let mut candidates = Vec::with_capacity(m);
        for (depth, &j) in order.iter().enumerate() {
            // The last assignment is solved in closed form, never
            // enumerated.
            if depth == m - 1 {
                candidates.push(Vec::new());
                continue;
            }
            let theta = model.theta_of(j);
            let d_in = k * theta.len();
            let cands = enumerate_subspaces(&f, d_in, spec.n_max)
                .into_iter()
                .map(|local_rows| {
                    let global_rows: Vec<Vec<u32>> = local_rows
                        .iter()
                        .map(|row| {
                            let mut g = vec![0u32; k * s];
                            for (pos, &i) in theta.iter().enumerate() {
                                for shot in 0..k {
                                    g[i * k + shot] = row[pos * k + shot];
                                }
                            }
                            g
                        })
                        .collect();
                    let packed_global = if packed {
                        global_rows.iter().map(|r| pack_row(r)).collect()
                    } else {
                        Vec::new()
                    };
                    Candidate { dim: local_rows.len(), local_rows, global_rows, packed_global }
                })
                .collect();
            candidates.push(cands);
        }

        let target_rows: Vec<Vec<u32>> = {
            let t = block_target_matrix(&model, k).transpose();
            (0..t.rows()).map(|r| t.row(r).to_vec()).collect()
        };

        let mut needed = vec![0usize; 1 << m];
        for gmask in 1u32..1 << m {
            let gamma = mask_to_vec(gmask, m);
            let i_set = crate::network::i_gamma(model.omega(), &gamma);
            needed[gmask as usize] =
                if i_set.is_empty() { 0 } else { k * model.t_rows(&i_set).rank() };
        }

        let mut visible_after = Vec::with_capacity(m);
        for depth in 0..m {
            let mut vis_sources = vec![false; s];
            for &j in &order[depth + 1..] {
                for i in model.theta_of(j) {
                    vis_sources[i] = true;
                }
            }
            let coords: Vec<usize> = (0..s)
                .filter(|&i| !vis_sources[i])
                .flat_map(|i| (i * k..(i + 1) * k).collect::<Vec<_>>())
                .collect();
            visible_after.push(coords);
        }
        let visible_after_masks: Vec<u64> = visible_after
            .iter()
            .map(|coords| coords.iter().fold(0u64, |acc, &c| acc | (1 << c)))
            .collect();

        let last_inv_coords: Vec<usize> = {
            let mut vis = vec![false; s];
            for i in model.theta_of(order[m - 1]) {
                vis[i] = true;
            }
            (0..s)
                .filter(|&i| !vis[i])
                .flat_map(|i| (i * k..(i + 1) * k).collect::<Vec<_>>())
                .collect()
        };
        let last_inv_mask = last_inv_coords.iter().fold(0u64, |acc, &c| acc | (1 << c));
        let packed_targets: Vec<u64> =
            if packed { target_rows.iter().map(|r| pack_row(r)).collect() } else { Vec::new() };

        Ok(LinearSearch {
            model,
            k,
            n_max: spec.n_max,
            order,
            candidates,
            target_rows,
            needed,
            visible_after,
            visible_after_masks,
            last_inv_coords,
            last_inv_mask,
            packed,
            packed_targets,
            prune,
            nodes: AtomicU64::new(0),
            pruned: AtomicU64::new(0),
            best_idx: AtomicUsize::new(usize::MAX),
        })
    }

    /// Optimistic budget check: assigned encoders contribute their actual
    /// dimension, unassigned ones the full budget.
    fn rank_bound_ok(&self, dims: &[usize]) -> bool {
        let m = self.order.len();
        for gmask in 1usize..1 << m {
            let mut have = 0;
            for (depth, &j) in self.order.iter().enumerate() {
                if gmask >> j & 1 == 1 {
                    have += if depth < dims.len() { dims[depth] } else { self.n_max };
                }
            }
            if have < self.needed[gmask] {
                return false;
            }
        }
        true
    }

    /// Source-tuple differences invisible to every unassigned encoder and
    /// unresolved by the assigned ones must not change the target.
    fn refinement_ok(&self, fixed: &[&Candidate], coords: &[usize]) -> bool {
        let f = self.model.field();
        let mut base = Basis::new(f);
        for cand in fixed {
            for row in &cand.global_rows {
                let restricted: Vec<u32> = coords.iter().map(|&c| row[c]).collect();
                base.insert(&restricted);
            }
        }
        self.target_rows.iter().all(|row| {
            let restricted: Vec<u32> = coords.iter().map(|&c| row[c]).collect();
            base.contains(&restricted)
        })
    }

    fn refinement_ok_packed(&self, fixed: &[&Candidate], mask: u64) -> bool {
        let mut base = [0u64; 64];
        for cand in fixed {
            for &row in &cand.packed_global {
                insert64(&mut base, row & mask);
            }
        }
        self.packed_targets.iter().all(|&row| contains64(&base, row & mask))
    }

    fn refinement(&self, fixed: &[&Candidate], depth: usize) -> bool {
        if self.packed {
            self.refinement_ok_packed(fixed, self.visible_after_masks[depth])
        } else {
            self.refinement_ok(fixed, &self.visible_after[depth])
        }
    }

    /// Leftover target rank modulo the fixed rows; the last encoder must
    /// supply this many fresh dimensions.
    fn deficit(&self, fixed: &[&Candidate]) -> usize {
        if self.packed {
            let mut base = [0u64; 64];
            for cand in fixed {
                for &row in &cand.packed_global {
                    insert64(&mut base, row);
                }
            }
            self.packed_targets.iter().filter(|&&row| insert64(&mut base, row)).count()
        } else {
            let f = self.model.field();
            let mut base = Basis::new(f);
            for cand in fixed {
                for row in &cand.global_rows {
                    base.insert(row);
                }
            }
            self.target_rows.iter().filter(|row| base.insert(row)).count()
        }
    }

    /// The joint row space of any completion contains both the fixed rows
    /// and every target row, yet has at most sum-of-budgets dimensions.
    fn span_budget_ok(&self, fixed: &[&Candidate], dims: &[usize]) -> bool {
        let m = self.order.len();
        let budget: usize = dims.iter().sum::<usize>() + (m - dims.len()) * self.n_max;
        let joint = if self.packed {
            let mut base = [0u64; 64];
            let mut r = 0usize;
            for cand in fixed {
                for &row in &cand.packed_global {
                    r += usize::from(insert64(&mut base, row));
                }
            }
            for &row in &self.packed_targets {
                r += usize::from(insert64(&mut base, row));
            }
            r
        } else {
            let f = self.model.field();
            let mut base = Basis::new(f);
            let mut r = 0usize;
            for cand in fixed {
                for row in &cand.global_rows {
                    r += usize::from(base.insert(row));
                }
            }
            for row in &self.target_rows {
                r += usize::from(base.insert(row));
            }
            r
        };
        joint <= budget
    }

    fn refinement_vs_last(&self, fixed: &[&Candidate]) -> bool {
        if self.packed {
            self.refinement_ok_packed(fixed, self.last_inv_mask)
        } else {
            self.refinement_ok(fixed, &self.last_inv_coords)
        }
    }

    /// With one encoder left, completion is closed form. It exists exactly
    /// when the target rows are reachable modulo functionals of the last
    /// encoder's input (refinement against its blind coordinates) and the
    /// leftover rank fits the budget; the rows themselves come from
    /// peeling the reachable part off each leftover target direction.
    fn last_level_solve(&self, fixed: &[&Candidate]) -> Option<Vec<Vec<u32>>> {
        if !self.refinement_vs_last(fixed) || self.deficit(fixed) > self.n_max {
            return None;
        }
        let f = self.model.field();
        let last_j = self.order[self.order.len() - 1];
        let theta = self.model.theta_of(last_j);
        let fixed_rows: Vec<&Vec<u32>> = fixed.iter().flat_map(|c| c.global_rows.iter()).collect();

        // Coefficient matrix of the fixed rows on the blind coordinates:
        // column i holds fixed row i restricted.
        let inv = &self.last_inv_coords;
        let mut coeff = Matrix::zero(f.clone(), inv.len(), fixed_rows.len());
        for (i, row) in fixed_rows.iter().enumerate() {
            for (r, &c) in inv.iter().enumerate() {
                coeff.set(r, i, row[c]);
            }
        }

        let mut base = Basis::new(f);
        for row in &fixed_rows {
            base.insert(row);
        }
        let mut local_rows = Vec::new();
        for t in &self.target_rows {
            if base.contains(t) {
                continue;
            }
            let b: Vec<u32> = inv.iter().map(|&c| t[c]).collect();
            let sol = coeff
                .solve(&b)
                .unwrap()
                .expect("refinement check guarantees a solution");
            let mut w = t.clone();
            for (i, row) in fixed_rows.iter().enumerate() {
                let ci = sol[i];
                if ci != 0 {
                    for (x, &r) in w.iter_mut().zip(row.iter()) {
                        *x = f.sub(*x, f.mul(ci, r));
                    }
                }
            }
            debug_assert!(inv.iter().all(|&c| w[c] == 0));
            let mut local = vec![0u32; self.k * theta.len()];
            for (pos, &i) in theta.iter().enumerate() {
                for shot in 0..self.k {
                    local[pos * self.k + shot] = w[i * self.k + shot];
                }
            }
            local_rows.push(local);
            base.insert(&w);
        }
        Some(local_rows)
    }

    /// Assembles the certificate from the fixed prefix plus the solved
    /// rows for the last encoder.
    fn certificate(&self, fixed: &[&Candidate], last_rows: &[Vec<u32>]) -> LinearCode {
        let f = self.model.field().clone();
        let m = self.order.len();
        let to_matrix = |rows: &[Vec<u32>], d_in: usize| -> Matrix {
            if rows.is_empty() {
                Matrix::zero(f.clone(), d_in, 0)
            } else {
                Matrix::from_rows(f.clone(), rows).unwrap().transpose()
            }
        };
        let mut enc: Vec<Option<Matrix>> = vec![None; m];
        for (depth, cand) in fixed.iter().enumerate() {
            let j = self.order[depth];
            let d_in = self.k * self.model.theta_of(j).len();
            enc[j] = Some(to_matrix(&cand.local_rows, d_in));
        }
        let last_j = self.order[m - 1];
        let d_in = self.k * self.model.theta_of(last_j).len();
        enc[last_j] = Some(to_matrix(last_rows, d_in));
        LinearCode { k: self.k, enc: enc.into_iter().map(|x| x.unwrap()).collect() }
    }

    fn dfs<'a>(
        &'a self,
        depth: usize,
        fixed: &mut Vec<&'a Candidate>,
        dims: &mut Vec<usize>,
    ) -> Option<LinearCode> {
        let last = self.order.len() - 1;
        if depth == last {
            self.nodes.fetch_add(1, Ordering::Relaxed);
            return match self.last_level_solve(fixed) {
                Some(rows) => Some(self.certificate(fixed, &rows)),
                None => {
                    self.pruned.fetch_add(1, Ordering::Relaxed);
                    None
                }
            };
        }
        for cand in &self.candidates[depth] {
            self.nodes.fetch_add(1, Ordering::Relaxed);
            dims.push(cand.dim);
            fixed.push(cand);
            let mut keep = true;
            if self.prune {
                if !self.rank_bound_ok(dims)
                    || !self.span_budget_ok(fixed, dims)
                    || !self.refinement(fixed, depth)
                {
                    keep = false;
                    self.pruned.fetch_add(1, Ordering::Relaxed);
                }
            }
            let res = if keep { self.dfs(depth + 1, fixed, dims) } else { None };
            fixed.pop();
            dims.pop();
            if res.is_some() {
                return res;
            }
        }
        None
    }

    fn run(&self) -> SearchOutcome {
        let m = self.order.len();
        let found = if m == 1 {
            let mut fixed = Vec::new();
            let mut dims = Vec::new();
            self.dfs(0, &mut fixed, &mut dims)
        } else {
            // Split at the first encoder's candidates; keep the lowest
            // candidate index that yields a certificate so the reported
            // code is independent of scheduling.
            let results: Mutex<Vec<(usize, LinearCode)>> = Mutex::new(Vec::new());
            self.candidates[0].par_iter().enumerate().for_each(|(idx, cand)| {
                if idx >= self.best_idx.load(Ordering::Acquire) {
                    return;
                }
                self.nodes.fetch_add(1, Ordering::Relaxed);
                let mut fixed = vec![cand];
                let mut dims = vec![cand.dim];
                if self.prune {
                    if !self.rank_bound_ok(&dims)
                        || !self.span_budget_ok(&fixed, &dims)
                        || !self.refinement(&fixed, 0)
                    {
                        self.pruned.fetch_add(1, Ordering::Relaxed);
                        return;
                    }
                }
                if let Some(cert) = self.dfs(1, &mut fixed, &mut dims) {
                    self.best_idx.fetch_min(idx, Ordering::AcqRel);
                    results.lock().unwrap().push((idx, cert));
                }
            });
            let mut results = results.into_inner().unwrap();
            results.sort_by_key(|(idx, _)| *idx);
            results.into_iter().next().map(|(_, c)| c)
        };
        SearchOutcome {
            found: found.map(SourceCode::Linear),
            nodes_visited: self.nodes.load(Ordering::Relaxed),
            pruned: self.pruned.load(Ordering::Relaxed),
        }
    }
}

fn with_pool<T: Send>(workers: Option<usize>, run: impl FnOnce() -> T + Send) -> T {
    match workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    }
}

/// Exact existence search over linear codes with per-encoder budget
/// n_max, with subset-rank and partial-refinement pruning.
pub fn search_linear(spec: &SearchSpec) -> Result<SearchOutcome, SearchError> {
    search_linear_with_pruning(spec, true)
}

/// Same search with all pruning disabled; every candidate tuple is
/// visited. Outcome must match the pruned search.
pub fn search_linear_with_pruning(spec: &SearchSpec, prune: bool) -> Result<SearchOutcome, SearchError> {
    let search = LinearSearch::new(spec, prune)?;
    Ok(with_pool(spec.workers, || search.run()))
}

/// Exhaustive search over lookup-table codes, one canonical function per
/// image-relabeling class (first-occurrence labeling), intended for
/// one-shot binary instances.
pub fn search_table(spec: &SearchSpec) -> Result<SearchOutcome, SearchError> {
    let model = &spec.model;
    let q = model.field().q() as u64;
    let k = spec.k;
    let m = model.m();

    let total_domain_bits = (q as f64).log2() * (k * model.s()) as f64;
    if total_domain_bits > 20.0 {
        return Err(SearchError::CapExceeded("table domain above 2^20 tuples".into()));
    }

    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&j| (std::cmp::Reverse(model.theta_of(j).len()), j));

    let mut per_encoder: Vec<Vec<Vec<u32>>> = Vec::with_capacity(m);
    let mut space: f64 = 1.0;
    for &j in &order {
        let dom = q.pow((k * model.theta_of(j).len()) as u32) as usize;
        let labels = q.pow(spec.n_max as u32).min(dom as u64) as usize;
        let tables = enumerate_canonical_tables(dom, labels);
        space *= tables.len() as f64;
        if space > (1u64 << 24) as f64 {
            return Err(SearchError::CapExceeded(format!(
                "about {space:.0} canonical table combinations"
            )));
        }
        per_encoder.push(tables);
    }

    let mut nodes = 0u64;
    let mut choice = vec![0usize; m];
    let found = table_dfs(model, spec, &order, &per_encoder, &mut choice, 0, &mut nodes);
    Ok(SearchOutcome { found: found.map(SourceCode::Table), nodes_visited: nodes, pruned: 0 })
}

fn table_dfs(
    model: &Model,
    spec: &SearchSpec,
    order: &[usize],
    per_encoder: &[Vec<Vec<u32>>],
    choice: &mut Vec<usize>,
    depth: usize,
    nodes: &mut u64,
) -> Option<TableCode> {
    if depth == order.len() {
        let mut enc = vec![Vec::new(); order.len()];
        for (d, &j) in order.iter().enumerate() {
            enc[j] = per_encoder[d][choice[d]].clone();
        }
        let code = TableCode { k: spec.k, enc };
        return match is_realizable(model, &SourceCode::Table(code.clone())) {
            Ok(true) => Some(code),
            _ => None,
        };
    }
    for idx in 0..per_encoder[depth].len() {
        *nodes += 1;
        choice[depth] = idx;
        if let Some(code) = table_dfs(model, spec, order, per_encoder, choice, depth + 1, nodes) {
            return Some(code);
        }
    }
    None
}

/// All surjective-onto-a-prefix labelings of 0..dom with at most
/// max_labels labels, in restricted-growth order.
fn enumerate_canonical_tables(dom: usize, max_labels: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut rgs = vec![0u32; dom];
    loop {
        out.push(rgs.clone());
        // Advance, keeping the first-occurrence property and label cap.
        let mut pos = dom;
        loop {
            if pos <= 1 {
                return out;
            }
            pos -= 1;
            let max_prefix = rgs[..pos].iter().copied().max().unwrap_or(0);
            if rgs[pos] <= max_prefix && (rgs[pos] + 1) < max_labels as u32 {
                rgs[pos] += 1;
                for x in rgs[pos + 1..].iter_mut() {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// Per-k minimal budgets and the best rate seen up to k_max.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    /// (k, minimal n with a linear certificate). When the search space at
    /// some probe exceeds the caps, the raw-forwarding budget k*max|Θ| is
    /// recorded instead; it is always achievable.
    pub per_k: Vec<(usize, usize)>,
    pub floor: Rational,
}

/// For each k <= k_max, finds the minimal uniform budget n admitting a
/// linear certificate and reports the best n/k seen. Probing starts at the
/// cut bound ceil(k * lower_bound_general), below which no code exists.
pub fn scan_capacity_floor(model: &Model, k_max: usize) -> Result<ScanReport, SearchError> {
    if k_max > 4 {
        return Err(SearchError::CapExceeded("k_max above 4".into()));
    }
    let mut per_k = Vec::new();
    let mut floor: Option<Rational> = None;
    let bound = crate::bounds::lower_bound_general(model)
        .map_err(|e| SearchError::CapExceeded(e.to_string()))?;
    for k in 1..=k_max {
        let max_theta = (0..model.m()).map(|j| model.theta_of(j).len()).max().unwrap();
        let hi = k * max_theta;
        let mut n = ((k as u64 * bound.num() + bound.den() - 1) / bound.den()) as usize;
        let minimal = loop {
            if n >= hi {
                // Raw forwarding always works at the full budget.
                break hi;
            }
            let spec = SearchSpec {
                model: model.clone(),
                k,
                n_max: n,
                class: CodeClass::Linear,
                workers: None,
            };
            match search_linear(&spec) {
                Ok(out) if out.found.is_some() => break n,
                Ok(_) => n += 1,
                Err(SearchError::CapExceeded(_)) => break hi,
            }
        };
        per_k.push((k, minimal));
        let rate = Rational::new(minimal as u64, k as u64);
        floor = Some(match floor {
            Some(best) => best.min(rate),
            None => rate,
        });
    }
    Ok(ScanReport { per_k, floor: floor.expect("k_max >= 1") })
}
