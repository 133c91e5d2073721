//! Problem instances (s, m, Omega, T): connectivity states, target
//! matrices, validation, matrix-type classification, isomorphism, and
//! the componentwise connectivity partial order.
//!
//! Source and encoder indices are 1-based in all I/O and 0-based
//! internally.

use crate::ffield::{FFieldError, FieldSpec, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("gamma set of source {0} is empty")]
    EmptyGamma(usize),
    #[error("encoder {0} is not reachable from any source")]
    UncoveredEncoder(usize),
    #[error("row {0} of the target matrix is all-zero")]
    ZeroRow(usize),
    #[error("target matrix is not column-full-rank")]
    NotColumnFullRank,
    #[error("gamma refers to encoder index {0} outside 1..={1}")]
    EncoderIndexOutOfRange(usize, usize),
    #[error("target matrix has {0} rows but the state has {1} sources")]
    RowCountMismatch(usize, usize),
    #[error("state enumeration limited to s <= 4 and m <= 4, got s={0}, m={1}")]
    EnumerationLimit(usize, usize),
    #[error(transparent)]
    Field(#[from] FFieldError),
}

/// Connectivity state Omega: which encoders each source reaches.
///
/// `gamma[i]` is the 0-based sorted encoder index set of source i.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConnectivityState {
    s: usize,
    m: usize,
    gamma: Vec<Vec<usize>>,
}

impl ConnectivityState {
    /// Builds a state from 0-based encoder index sets (one per source).
    pub fn new(m: usize, gamma: Vec<Vec<usize>>) -> Result<ConnectivityState, ModelError> {
        let s = gamma.len();
        let mut norm = Vec::with_capacity(s);
        for (i, g) in gamma.into_iter().enumerate() {
            if g.is_empty() {
                return Err(ModelError::EmptyGamma(i + 1));
            }
            let mut g = g;
            g.sort_unstable();
            g.dedup();
            if let Some(&bad) = g.iter().find(|&&j| j >= m) {
                return Err(ModelError::EncoderIndexOutOfRange(bad + 1, m));
            }
            norm.push(g);
        }
        for j in 0..m {
            if !norm.iter().any(|g| g.contains(&j)) {
                return Err(ModelError::UncoveredEncoder(j + 1));
            }
        }
        Ok(ConnectivityState { s, m, gamma: norm })
    }

    pub fn s(&self) -> usize {
        self.s
    }
    pub fn m(&self) -> usize {
        self.m
    }
    /// 0-based encoder set of source i (0-based), sorted.
    pub fn gamma(&self, i: usize) -> &[usize] {
        &self.gamma[i]
    }
    pub fn gammas(&self) -> &[Vec<usize>] {
        &self.gamma
    }

    /// Union of the gamma sets over a 0-based source index set.
    pub fn gamma_union(&self, sources: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = sources.iter().flat_map(|&i| self.gamma[i].iter().copied()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Sources feeding encoder j (0-based): Theta(v_j).
    pub fn theta_of(&self, j: usize) -> Vec<usize> {
        (0..self.s).filter(|&i| self.gamma[i].contains(&j)).collect()
    }

    /// True iff gamma_i is contained in other's gamma_i for every source.
    pub fn leq(&self, other: &ConnectivityState) -> bool {
        self.s == other.s
            && self.m == other.m
            && self
                .gamma
                .iter()
                .zip(&other.gamma)
                .all(|(a, b)| a.iter().all(|j| b.contains(j)))
    }
}

/// How a target matrix falls in the characterized landscape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixType {
    /// Rank 1: equivalent to an algebraic-sum target.
    SumRank1,
    /// Rank s: equivalent to recovering all sources.
    IdentityRankS,
    /// s = 3, rank 2, every pair of rows linearly independent.
    Type1,
    /// s = 3, rank 2, some pair of rows linearly dependent.
    Type2,
    /// Outside the characterized shapes.
    Unclassified,
}

/// A source permutation and an encoder permutation.
///
/// `pi[i] = i'` maps source i to role i' (0-based); likewise `tau` for
/// encoders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermPair {
    pub pi: Vec<usize>,
    pub tau: Vec<usize>,
}

impl PermPair {
    pub fn identity(s: usize, m: usize) -> PermPair {
        PermPair { pi: (0..s).collect(), tau: (0..m).collect() }
    }

    pub fn is_valid(&self, s: usize, m: usize) -> bool {
        is_permutation(&self.pi, s) && is_permutation(&self.tau, m)
    }

    pub fn inverse(&self) -> PermPair {
        PermPair { pi: invert(&self.pi), tau: invert(&self.tau) }
    }
}

fn is_permutation(p: &[usize], n: usize) -> bool {
    if p.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in p {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// A full instance: connectivity state plus target matrix over GF(q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    omega: ConnectivityState,
    t: Matrix,
}

impl Model {
    pub fn new(omega: ConnectivityState, t: Matrix) -> Result<Model, ModelError> {
        let model = Model { omega, t };
        model.validate()?;
        Ok(model)
    }

    /// Checks the standing assumptions: nonempty gamma sets, full encoder
    /// coverage, no all-zero rows in T, and T column-full-rank.
    pub fn validate(&self) -> Result<(), ModelError> {
        // ConnectivityState::new enforces the gamma invariants already;
        // re-check in case of direct construction via clone+mutation paths.
        for (i, g) in self.omega.gamma.iter().enumerate() {
            if g.is_empty() {
                return Err(ModelError::EmptyGamma(i + 1));
            }
        }
        for j in 0..self.omega.m {
            if !self.omega.gamma.iter().any(|g| g.contains(&j)) {
                return Err(ModelError::UncoveredEncoder(j + 1));
            }
        }
        if self.t.rows() != self.omega.s {
            return Err(ModelError::RowCountMismatch(self.t.rows(), self.omega.s));
        }
        for r in 0..self.t.rows() {
            if self.t.row(r).iter().all(|&x| x == 0) {
                return Err(ModelError::ZeroRow(r + 1));
            }
        }
        if self.t.rank() != self.t.cols() {
            return Err(ModelError::NotColumnFullRank);
        }
        Ok(())
    }

    pub fn omega(&self) -> &ConnectivityState {
        &self.omega
    }
    pub fn t(&self) -> &Matrix {
        &self.t
    }
    pub fn field(&self) -> &FieldSpec {
        self.t.field()
    }
    pub fn s(&self) -> usize {
        self.omega.s
    }
    pub fn m(&self) -> usize {
        self.omega.m
    }
    pub fn r(&self) -> usize {
        self.t.cols()
    }

    pub fn theta_of(&self, j: usize) -> Vec<usize> {
        self.omega.theta_of(j)
    }

    /// T restricted to a 0-based source index set (rows).
    pub fn t_rows(&self, sources: &[usize]) -> Matrix {
        self.t.select_rows(sources)
    }

    /// Relabels sources by pi and encoders by tau.
    ///
    /// Source i becomes source pi[i] and encoder j becomes tau[j], so the
    /// new state connects source pi[i] to encoder tau[j] exactly when the
    /// old one connects i to j, and row i' of the new target is row
    /// pi^-1[i'] of the old one. The relabeled model computes the same
    /// function after renaming the inputs.
    pub fn apply_perm(&self, pp: &PermPair) -> Model {
        assert!(pp.is_valid(self.s(), self.m()), "permutation shape mismatch");
        let s = self.s();
        let mut gamma = vec![Vec::new(); s];
        for i in 0..s {
            let mut g: Vec<usize> = self.omega.gamma[i].iter().map(|&j| pp.tau[j]).collect();
            g.sort_unstable();
            gamma[pp.pi[i]] = g;
        }
        let pi_inv = invert(&pp.pi);
        let t = self.t.select_rows(&pi_inv);
        Model {
            omega: ConnectivityState { s, m: self.m(), gamma },
            t,
        }
    }
}

/// Classifies a target matrix per the capacity landscape.
pub fn classify(t: &Matrix) -> MatrixType {
    let s = t.rows();
    let r = t.rank();
    if r == 1 {
        return MatrixType::SumRank1;
    }
    if r == s {
        return MatrixType::IdentityRankS;
    }
    if s == 3 && r == 2 {
        let all_pairs_independent = (0..3).all(|a| {
            (a + 1..3).all(|b| t.select_rows(&[a, b]).rank() == 2)
        });
        return if all_pairs_independent { MatrixType::Type1 } else { MatrixType::Type2 };
    }
    MatrixType::Unclassified
}

/// For a Type2 matrix, the unique 0-based pair of linearly dependent rows.
pub fn dependent_row_pair(t: &Matrix) -> Option<(usize, usize)> {
    for a in 0..t.rows() {
        for b in a + 1..t.rows() {
            if t.select_rows(&[a, b]).rank() < 2 {
                return Some((a, b));
            }
        }
    }
    None
}

/// Returns T * Q for invertible Q; classification is invariant under this.
pub fn column_transform(t: &Matrix, q: &Matrix) -> Result<Matrix, FFieldError> {
    if !q.invertible() {
        return Err(FFieldError::NotInvertible);
    }
    t.multiply(q)
}

/// Exhaustive isomorphism search over all s! * m! permutation pairs.
///
/// Returns the lexicographically smallest (pi, tau) with
/// apply_perm(a, pair) == b, or None.
pub fn find_isomorphism(a: &Model, b: &Model) -> Option<PermPair> {
    if a.s() != b.s() || a.m() != b.m() || a.field() != b.field() || a.r() != b.r() {
        return None;
    }
    let pis = permutations(a.s());
    let taus = permutations(a.m());
    for pi in &pis {
        for tau in &taus {
            let pp = PermPair { pi: pi.clone(), tau: tau.clone() };
            if &a.apply_perm(&pp) == b {
                return Some(pp);
            }
        }
    }
    None
}

/// All permutations of 0..n in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(n, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// All connectivity states for s sources and m encoders, in lexicographic
/// order of the gamma bitmask tuples. Capped at s, m <= 4.
pub fn enumerate_states(s: usize, m: usize) -> Result<Vec<ConnectivityState>, ModelError> {
    if s == 0 || m == 0 || s > 4 || m > 4 {
        return Err(ModelError::EnumerationLimit(s, m));
    }
    let full: u32 = (1 << m) - 1;
    let mut out = Vec::new();
    let mut masks = vec![0u32; s];
    fn rec(
        i: usize,
        s: usize,
        m: usize,
        full: u32,
        masks: &mut Vec<u32>,
        out: &mut Vec<ConnectivityState>,
    ) {
        if i == s {
            if masks.iter().fold(0, |acc, &x| acc | x) == full {
                let gamma = masks
                    .iter()
                    .map(|&mask| (0..m).filter(|&j| mask >> j & 1 == 1).collect())
                    .collect();
                out.push(ConnectivityState { s, m, gamma });
            }
            return;
        }
        for mask in 1..=full {
            masks[i] = mask;
            rec(i + 1, s, m, full, masks, out);
        }
    }
    rec(0, s, m, full, &mut masks, &mut out);
    Ok(out)
}
