//! Assembly of Hadamard matrices as Kronecker sums `H = sum A_k (x) B_k`.
//!
//! The A side comes from basis matrices over a transversal: n monomial
//! matrices of order n with pairwise disjoint supports, a sign matrix as
//! their sum, and a lambda in {-1, +1} per pair measuring how the pair
//! (anti-)commutes under transposition. The B side is any tuple of sign
//! matrices satisfying the mirrored lambda conditions plus a sum-of-squares
//! identity; when both sides hold, H H^T = (n b) I and H is Hadamard.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::clifford;
use crate::error::Error as CoreError;
use crate::monomial::{SignedPerm, Symmetry};

/// Dense square matrix with i64 entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseSquare {
    order: usize,
    entries: Vec<i64>,
}

impl DenseSquare {
    pub fn new(order: usize, entries: Vec<i64>) -> Result<Self, CoreError> {
        if entries.len() != order * order {
            return Err(CoreError::TableLength {
                got: entries.len(),
                expected: order * order,
            });
        }
        Ok(DenseSquare { order, entries })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, CoreError> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(CoreError::TableLength {
                    got: row.len(),
                    expected: order,
                });
            }
            entries.extend_from_slice(row);
        }
        Ok(DenseSquare { order, entries })
    }

    pub fn zeros(order: usize) -> Self {
        DenseSquare {
            order,
            entries: vec![0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = DenseSquare::zeros(order);
        for i in 0..order {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_signed_perm(p: &SignedPerm) -> Self {
        let n = p.order();
        let mut m = DenseSquare::zeros(n);
        for c in 0..n {
            m.set(p.row_of_col(c), c, i64::from(p.col_sign(c)));
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.order + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.entries[r * self.order + c] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.order)
            .map(|r| self.entries[r * self.order..(r + 1) * self.order].to_vec())
            .collect()
    }

    /// `self * other^T`.
    pub fn mul_transpose(&self, other: &DenseSquare) -> DenseSquare {
        assert_eq!(self.order, other.order);
        let n = self.order;
        let mut out = DenseSquare::zeros(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = 0;
                for k in 0..n {
                    acc += self.get(r, k) * other.get(c, k);
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn add_assign(&mut self, other: &DenseSquare) {
        assert_eq!(self.order, other.order);
        for (d, s) in self.entries.iter_mut().zip(&other.entries) {
            *d += s;
        }
    }

    pub fn kron(&self, other: &DenseSquare) -> DenseSquare {
        let (na, nb) = (self.order, other.order);
        let mut out = DenseSquare::zeros(na * nb);
        for ra in 0..na {
            for ca in 0..na {
                let x = self.get(ra, ca);
                if x == 0 {
                    continue;
                }
                for rb in 0..nb {
                    for cb in 0..nb {
                        out.set(ra * nb + rb, ca * nb + cb, x * other.get(rb, cb));
                    }
                }
            }
        }
        out
    }

    /// First entry not in {-1, +1}, if any.
    fn bad_sign_entry(&self) -> Option<(usize, usize, i64)> {
        for r in 0..self.order {
            for c in 0..self.order {
                let v = self.get(r, c);
                if v != 1 && v != -1 {
                    return Some((r, c, v));
                }
            }
        }
        None
    }
}

/// Lambda signs for unordered pairs of n slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaTable {
    n: usize,
    vals: Vec<i8>,
}

impl LambdaTable {
    pub fn new(n: usize) -> Self {
        LambdaTable {
            n,
            vals: vec![0; n * (n.saturating_sub(1)) / 2],
        }
    }

    fn idx(&self, j: usize, k: usize) -> usize {
        assert!(j != k && j < self.n && k < self.n, "lambda needs j != k");
        let (j, k) = if j < k { (j, k) } else { (k, j) };
        j * self.n - j * (j + 1) / 2 + (k - j - 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, j: usize, k: usize, v: i8) {
        assert!(v == 1 || v == -1);
        let i = self.idx(j, k);
        self.vals[i] = v;
    }

    pub fn get(&self, j: usize, k: usize) -> i8 {
        self.vals[self.idx(j, k)]
    }

    /// All pairs (j, k, lambda) with j < k, lexicographic.
    pub fn pairs(&self) -> Vec<(usize, usize, i8)> {
        let mut out = Vec::with_capacity(self.vals.len());
        for j in 0..self.n {
            for k in j + 1..self.n {
                out.push((j, k, self.get(j, k)));
            }
        }
        out
    }
}

/// A failed construction condition, pointing at the offending pair or cell.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ConditionViolation {
    #[error("expected {expected} matrices, got {got}")]
    CountMismatch { expected: usize, got: usize },

    #[error("matrix {index} has order {got}, expected {expected}")]
    OrderMismatch {
        index: usize,
        expected: usize,
        got: usize,
    },

    #[error("matrices {j} and {k} share support at ({row}, {col})")]
    SupportOverlap {
        j: usize,
        k: usize,
        row: usize,
        col: usize,
    },

    #[error("sum entry at ({row}, {col}) is {value}, expected -1 or +1")]
    SumEntry { row: usize, col: usize, value: i64 },

    #[error("matrix {index} is not orthogonal")]
    NotOrthogonal { index: usize },

    #[error("pair ({j}, {k}) admits no lambda: the product is neither symmetric nor skew")]
    NoLambda { j: usize, k: usize },

    #[error("matrix {index} entry at ({row}, {col}) is {value}, expected -1 or +1")]
    EntryOutOfRange {
        index: usize,
        row: usize,
        col: usize,
        value: i64,
    },

    #[error("pair ({j}, {k}) violates its lambda condition")]
    PairCondition { j: usize, k: usize },

    #[error("sum of squares at ({row}, {col}) is {got}, expected {expected}")]
    SumCondition {
        row: usize,
        col: usize,
        got: i64,
        expected: i64,
    },

    #[error("assembled matrix entry at ({row}, {col}) is {value}, expected -1 or +1")]
    AssemblyEntry { row: usize, col: usize, value: i64 },
}

/// The transversal whose basis matrices feed the A side: indices with all
/// base-4 digits in {0, 1}, ascending. Always 2^m of them.
pub fn canonical_transversal(m: usize) -> Vec<usize> {
    assert!((1..=clifford::MAX_M).contains(&m));
    (0..1usize << m)
        .map(|mask| {
            let mut idx = 0;
            for t in 0..m {
                if mask >> t & 1 == 1 {
                    idx += 1 << (2 * t);
                }
            }
            idx
        })
        .collect()
}

/// Verifies the A-side conditions and extracts the lambda table.
///
/// Requires: as many matrices as their common order, pairwise disjoint
/// supports, a {-1, +1} sum, each matrix orthogonal, and for every pair a
/// sign lambda with `A_j A_k^T + lambda A_k A_j^T = 0`.
pub fn check_a_conditions(mats: &[SignedPerm]) -> Result<LambdaTable, ConditionViolation> {
    let n = mats.len();
    for (index, a) in mats.iter().enumerate() {
        if a.order() != n {
            return Err(ConditionViolation::OrderMismatch {
                index,
                expected: n,
                got: a.order(),
            });
        }
    }
    for j in 0..n {
        for k in j + 1..n {
            for c in 0..n {
                if mats[j].row_of_col(c) == mats[k].row_of_col(c) {
                    return Err(ConditionViolation::SupportOverlap {
                        j,
                        k,
                        row: mats[j].row_of_col(c),
                        col: c,
                    });
                }
            }
        }
    }
    let mut sum = DenseSquare::zeros(n);
    for a in mats {
        sum.add_assign(&DenseSquare::from_signed_perm(a));
    }
    if let Some((row, col, value)) = sum.bad_sign_entry() {
        return Err(ConditionViolation::SumEntry { row, col, value });
    }
    for (index, a) in mats.iter().enumerate() {
        let prod = a.multiply(&a.transpose()).expect("orders checked");
        if !prod.is_identity() {
            return Err(ConditionViolation::NotOrthogonal { index });
        }
    }
    let mut lambdas = LambdaTable::new(n);
    for j in 0..n {
        for k in j + 1..n {
            let p = mats[j]
                .multiply(&mats[k].transpose())
                .expect("orders checked");
            match p.classify() {
                // P skew means P + P^T = 0, so lambda = +1; symmetric gives -1.
                Ok(c) if c.symmetry == Symmetry::Skew => lambdas.set(j, k, 1),
                Ok(_) => lambdas.set(j, k, -1),
                Err(_) => return Err(ConditionViolation::NoLambda { j, k }),
            }
        }
    }
    Ok(lambdas)
}

/// Verifies the B-side conditions against a lambda table: sign entries,
/// `B_j B_k^T = lambda_{j,k} B_k B_j^T` for every pair, and
/// `sum_k B_k B_k^T = (n b) I`.
pub fn check_b_conditions(
    bs: &[DenseSquare],
    lambdas: &LambdaTable,
) -> Result<(), ConditionViolation> {
    let n = lambdas.n();
    if bs.len() != n {
        return Err(ConditionViolation::CountMismatch {
            expected: n,
            got: bs.len(),
        });
    }
    let b = bs[0].order();
    for (index, m) in bs.iter().enumerate() {
        if m.order() != b {
            return Err(ConditionViolation::OrderMismatch {
                index,
                expected: b,
                got: m.order(),
            });
        }
        if let Some((row, col, value)) = m.bad_sign_entry() {
            return Err(ConditionViolation::EntryOutOfRange {
                index,
                row,
                col,
                value,
            });
        }
    }
    for j in 0..n {
        for k in j + 1..n {
            let lhs = bs[j].mul_transpose(&bs[k]);
            let rhs = bs[k].mul_transpose(&bs[j]);
            let lambda = i64::from(lambdas.get(j, k));
            for r in 0..b {
                for c in 0..b {
                    if lhs.get(r, c) != lambda * rhs.get(r, c) {
                        return Err(ConditionViolation::PairCondition { j, k });
                    }
                }
            }
        }
    }
    let mut sum = DenseSquare::zeros(b);
    for m in bs {
        sum.add_assign(&m.mul_transpose(m));
    }
    let target = (n * b) as i64;
    for r in 0..b {
        for c in 0..b {
            let expected = if r == c { target } else { 0 };
            if sum.get(r, c) != expected {
                return Err(ConditionViolation::SumCondition {
                    row: r,
                    col: c,
                    got: sum.get(r, c),
                    expected,
                });
            }
        }
    }
    Ok(())
}

/// Builds `H = sum_k A_k (x) B_k` and verifies every entry lands in
/// {-1, +1}. Entry failures surface the precondition violation directly.
pub fn assemble_h(
    a_mats: &[SignedPerm],
    bs: &[DenseSquare],
) -> Result<DenseSquare, ConditionViolation> {
    if a_mats.len() != bs.len() || a_mats.is_empty() {
        return Err(ConditionViolation::CountMismatch {
            expected: a_mats.len(),
            got: bs.len(),
        });
    }
    let n = a_mats[0].order();
    let b = bs[0].order();
    for (index, a) in a_mats.iter().enumerate() {
        if a.order() != n {
            return Err(ConditionViolation::OrderMismatch {
                index,
                expected: n,
                got: a.order(),
            });
        }
    }
    for (index, m) in bs.iter().enumerate() {
        if m.order() != b {
            return Err(ConditionViolation::OrderMismatch {
                index,
                expected: b,
                got: m.order(),
            });
        }
    }
    let mut h = DenseSquare::zeros(n * b);
    for (a, bm) in a_mats.iter().zip(bs) {
        h.add_assign(&DenseSquare::from_signed_perm(a).kron(bm));
    }
    if let Some((row, col, value)) = h.bad_sign_entry() {
        return Err(ConditionViolation::AssemblyEntry { row, col, value });
    }
    Ok(h)
}

/// True when `h h^T = order * I`. The entries must already be signs.
pub fn is_hadamard(h: &DenseSquare) -> Result<bool, CoreError> {
    if let Some((row, col, _)) = h.bad_sign_entry() {
        return Err(CoreError::NotSignMatrix { row, col });
    }
    let n = h.order();
    let prod = h.mul_transpose(h);
    for r in 0..n {
        for c in 0..n {
            let expected = if r == c { n as i64 } else { 0 };
            if prod.get(r, c) != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Least admissible block count for amicable-pair constructions of order q:
/// `ceil(q / 2)`, plus one when `q mod 8` is 2, 3 or 4.
pub fn big_m(q: u64) -> u64 {
    assert!(q >= 1);
    q.div_ceil(2) + u64::from(matches!(q % 8, 2 | 3 | 4))
}

/// Outcome of the B-side search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BSearchOutcome {
    Found { bs: Vec<DenseSquare>, tried: u64 },
    /// The whole space was enumerated and nothing passed; a genuine
    /// nonexistence statement for this (lambda, b) instance.
    AbsentExhaustive { tried: u64 },
    /// Budget ran out first; says nothing about existence.
    BudgetExhausted { tried: u64 },
}

fn decode_pattern(pattern: u64, n: usize, b: usize) -> Vec<DenseSquare> {
    (0..n)
        .map(|k| {
            let mut m = DenseSquare::zeros(b);
            for r in 0..b {
                for c in 0..b {
                    let bit = pattern >> (k * b * b + r * b + c) & 1;
                    m.set(r, c, if bit == 0 { 1 } else { -1 });
                }
            }
            m
        })
        .collect()
}

/// Number of violated condition cells; 0 exactly when check_b passes.
fn violation_cells(bs: &[DenseSquare], lambdas: &LambdaTable) -> usize {
    let n = lambdas.n();
    let b = bs[0].order();
    let mut bad = 0;
    for j in 0..n {
        for k in j + 1..n {
            let lhs = bs[j].mul_transpose(&bs[k]);
            let rhs = bs[k].mul_transpose(&bs[j]);
            let lambda = i64::from(lambdas.get(j, k));
            for r in 0..b {
                for c in 0..b {
                    if lhs.get(r, c) != lambda * rhs.get(r, c) {
                        bad += 1;
                    }
                }
            }
        }
    }
    let mut sum = DenseSquare::zeros(b);
    for m in bs {
        sum.add_assign(&m.mul_transpose(m));
    }
    let target = (n * b) as i64;
    for r in 0..b {
        for c in 0..b {
            let expected = if r == c { target } else { 0 };
            if sum.get(r, c) != expected {
                bad += 1;
            }
        }
    }
    bad
}

/// Searches for a B tuple satisfying `check_b_conditions`.
///
/// Small instances (n b^2 <= 24 sign bits) are enumerated exhaustively in
/// ascending pattern order with all-ones first, so absence is definitive for
/// the instance. Larger ones run seeded hill climbing with random restarts;
/// they can only report found or budget exhausted.
pub fn search_b(lambdas: &LambdaTable, b: usize, budget: u64, seed: u64) -> BSearchOutcome {
    assert!(b >= 1);
    let n = lambdas.n();
    let bits = n * b * b;
    let mut tried = 0u64;

    if bits <= 24 {
        for pattern in 0..1u64 << bits {
            if tried >= budget {
                return BSearchOutcome::BudgetExhausted { tried };
            }
            tried += 1;
            let bs = decode_pattern(pattern, n, b);
            if check_b_conditions(&bs, lambdas).is_ok() {
                return BSearchOutcome::Found { bs, tried };
            }
        }
        return BSearchOutcome::AbsentExhaustive { tried };
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut signs: Vec<i64> = vec![1; bits];
    let build = |signs: &[i64]| {
        (0..n)
            .map(|k| {
                let mut m = DenseSquare::zeros(b);
                for r in 0..b {
                    for c in 0..b {
                        m.set(r, c, signs[k * b * b + r * b + c]);
                    }
                }
                m
            })
            .collect::<Vec<_>>()
    };
    while tried < budget {
        for s in signs.iter_mut() {
            *s = if rng.gen::<bool>() { 1 } else { -1 };
        }
        tried += 1;
        let mut current = violation_cells(&build(&signs), lambdas);
        loop {
            if current == 0 {
                let bs = build(&signs);
                debug_assert!(check_b_conditions(&bs, lambdas).is_ok());
                return BSearchOutcome::Found { bs, tried };
            }
            let mut improved = false;
            for i in 0..bits {
                if tried >= budget {
                    return BSearchOutcome::BudgetExhausted { tried };
                }
                signs[i] = -signs[i];
                tried += 1;
                let cand = violation_cells(&build(&signs), lambdas);
                if cand < current {
                    current = cand;
                    improved = true;
                    break;
                }
                signs[i] = -signs[i];
            }
            if !improved {
                break; // local minimum; restart
            }
        }
    }
    BSearchOutcome::BudgetExhausted { tried }
}
