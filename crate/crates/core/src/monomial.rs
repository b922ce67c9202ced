//! Exact arithmetic on signed permutation matrices.
//!
//! A signed permutation (monomial) matrix of order n has exactly one nonzero
//! entry in every row and column, and that entry is -1 or +1. The type below
//! stores one as a column-to-row map plus a sign per column, so products,
//! transposes and Kronecker products run in O(n) without any dense matrices.

use crate::error::Error;

/// Monomial matrix with entries in {-1, 0, +1}.
///
/// Column `c` has its single nonzero entry in row `col_to_row[c]`, with value
/// `sign[c]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    col_to_row: Vec<usize>,
    sign: Vec<i8>,
}

/// Whether a matrix equals its transpose or its negated transpose.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    Symmetric,
    Skew,
}

/// Symmetry type plus diagonality, as produced by [`SignedPerm::classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub symmetry: Symmetry,
    pub diagonal: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Amicability {
    /// A B^T is symmetric.
    Amicable,
    /// A B^T is skew-symmetric.
    AntiAmicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Support {
    /// No position carries a nonzero entry in both matrices.
    Disjoint,
    /// At least one shared nonzero position.
    Overlapping,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Commutation {
    Commute,
    Anticommute,
}

/// How two signed permutation matrices relate, along the three axes the graph
/// constructions care about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairRelation {
    pub amicability: Amicability,
    pub support: Support,
    pub commutation: Commutation,
}

impl SignedPerm {
    /// Builds a signed permutation from its column map and column signs.
    pub fn new(col_to_row: Vec<usize>, sign: Vec<i8>) -> Result<Self, Error> {
        let n = col_to_row.len();
        if sign.len() != n {
            return Err(Error::InvalidSignedPerm(format!(
                "column map has length {n} but sign vector has length {}",
                sign.len()
            )));
        }
        let mut seen = vec![false; n];
        for (c, &r) in col_to_row.iter().enumerate() {
            if r >= n {
                return Err(Error::InvalidSignedPerm(format!(
                    "column {c} maps to row {r}, out of range for order {n}"
                )));
            }
            if seen[r] {
                return Err(Error::InvalidSignedPerm(format!(
                    "row {r} is hit by more than one column"
                )));
            }
            seen[r] = true;
        }
        for (c, &s) in sign.iter().enumerate() {
            if s != 1 && s != -1 {
                return Err(Error::InvalidSignedPerm(format!(
                    "sign for column {c} is {s}, expected -1 or +1"
                )));
            }
        }
        Ok(SignedPerm { col_to_row, sign })
    }

    /// Identity matrix of order `n` (n >= 1).
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "identity needs order >= 1");
        SignedPerm {
            col_to_row: (0..n).collect(),
            sign: vec![1; n],
        }
    }

    pub fn order(&self) -> usize {
        self.col_to_row.len()
    }

    /// Row index of the nonzero entry in column `c`.
    pub fn row_of_col(&self, c: usize) -> usize {
        self.col_to_row[c]
    }

    /// Sign of the nonzero entry in column `c`.
    pub fn col_sign(&self, c: usize) -> i8 {
        self.sign[c]
    }

    /// Entry at (row, col); one of -1, 0, +1.
    pub fn entry(&self, row: usize, col: usize) -> i8 {
        if self.col_to_row[col] == row {
            self.sign[col]
        } else {
            0
        }
    }

    /// Matrix product `self * other`.
    pub fn multiply(&self, other: &Self) -> Result<Self, Error> {
        let n = self.order();
        if other.order() != n {
            return Err(Error::OrderMismatch {
                left: n,
                right: other.order(),
            });
        }
        let mut col_to_row = vec![0; n];
        let mut sign = vec![0i8; n];
        for c in 0..n {
            let mid = other.col_to_row[c];
            col_to_row[c] = self.col_to_row[mid];
            sign[c] = self.sign[mid] * other.sign[c];
        }
        Ok(SignedPerm { col_to_row, sign })
    }

    pub fn transpose(&self) -> Self {
        let n = self.order();
        let mut col_to_row = vec![0; n];
        let mut sign = vec![0i8; n];
        for c in 0..n {
            let r = self.col_to_row[c];
            col_to_row[r] = c;
            sign[r] = self.sign[c];
        }
        SignedPerm { col_to_row, sign }
    }

    pub fn neg(&self) -> Self {
        SignedPerm {
            col_to_row: self.col_to_row.clone(),
            sign: self.sign.iter().map(|&s| -s).collect(),
        }
    }

    /// Kronecker product `self (x) other`, of order `self.order() * other.order()`.
    ///
    /// Block (i, j) of the result is `self[i][j] * other`.
    pub fn kronecker(&self, other: &Self) -> Self {
        let na = self.order();
        let nb = other.order();
        let n = na * nb;
        let mut col_to_row = vec![0; n];
        let mut sign = vec![0i8; n];
        for ca in 0..na {
            for cb in 0..nb {
                let c = ca * nb + cb;
                col_to_row[c] = self.col_to_row[ca] * nb + other.col_to_row[cb];
                sign[c] = self.sign[ca] * other.sign[cb];
            }
        }
        SignedPerm { col_to_row, sign }
    }

    pub fn is_identity(&self) -> bool {
        self.col_to_row.iter().enumerate().all(|(c, &r)| r == c)
            && self.sign.iter().all(|&s| s == 1)
    }

    /// Symmetry type and diagonality.
    ///
    /// Errors if the matrix is neither symmetric nor skew, which cannot happen
    /// for products of the Clifford basis but can for arbitrary inputs.
    pub fn classify(&self) -> Result<Classification, Error> {
        let n = self.order();
        let mut symmetric = true;
        let mut skew = true;
        let mut diagonal = true;
        for c in 0..n {
            let r = self.col_to_row[c];
            if r != c {
                diagonal = false;
            }
            // Entry (r, c) is sign[c]; its mirror (c, r) is the entry of
            // column r, which sits at row col_to_row[r].
            if self.col_to_row[r] != c {
                symmetric = false;
                skew = false;
                break;
            }
            let mirror = self.sign[r];
            if mirror != self.sign[c] {
                symmetric = false;
            }
            if mirror != -self.sign[c] {
                skew = false;
            }
        }
        // A diagonal entry is its own mirror, so it forces `skew` off unless
        // the loop broke early; a nonzero diagonal can never be skew.
        match (symmetric, skew) {
            (true, _) => Ok(Classification {
                symmetry: Symmetry::Symmetric,
                diagonal,
            }),
            (_, true) => Ok(Classification {
                symmetry: Symmetry::Skew,
                diagonal,
            }),
            _ => Err(Error::NeitherSymmetricNorSkew),
        }
    }

    /// Amicability, support overlap, and commutation for a pair.
    pub fn pair_relation(&self, other: &Self) -> Result<PairRelation, Error> {
        let n = self.order();
        if other.order() != n {
            return Err(Error::OrderMismatch {
                left: n,
                right: other.order(),
            });
        }

        let support = if (0..n).any(|c| self.col_to_row[c] == other.col_to_row[c]) {
            Support::Overlapping
        } else {
            Support::Disjoint
        };

        let abt = self.multiply(&other.transpose())?;
        let amicability = match abt.classify()?.symmetry {
            Symmetry::Symmetric => Amicability::Amicable,
            Symmetry::Skew => Amicability::AntiAmicable,
        };

        let ab = self.multiply(other)?;
        let ba = other.multiply(self)?;
        let commutation = if ab == ba {
            Commutation::Commute
        } else if ab == ba.neg() {
            Commutation::Anticommute
        } else {
            return Err(Error::NeitherCommuteNorAnticommute);
        };

        Ok(PairRelation {
            amicability,
            support,
            commutation,
        })
    }

    /// Dense expansion; intended for small orders and external export.
    pub fn to_dense(&self) -> Vec<Vec<i32>> {
        let n = self.order();
        let mut out = vec![vec![0i32; n]; n];
        for c in 0..n {
            out[self.col_to_row[c]][c] = i32::from(self.sign[c]);
        }
        out
    }

    /// Nonzero entries as (row, col, value), sorted by row then column.
    pub fn triples(&self) -> Vec<(usize, usize, i8)> {
        let mut t: Vec<(usize, usize, i8)> = (0..self.order())
            .map(|c| (self.col_to_row[c], c, self.sign[c]))
            .collect();
        t.sort_unstable();
        t
    }
}

impl std::fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SignedPerm(order {}; ", self.order())?;
        let body: Vec<String> = (0..self.order())
            .map(|c| {
                format!(
                    "c{}->r{}{}",
                    c,
                    self.col_to_row[c],
                    if self.sign[c] == 1 { "+" } else { "-" }
                )
            })
            .collect();
        write!(f, "{})", body.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_oracle as oracle;
    use proptest::prelude::*;

    fn e1() -> SignedPerm {
        // [[0, -1], [1, 0]]
        SignedPerm::new(vec![1, 0], vec![1, -1]).unwrap()
    }

    fn e2() -> SignedPerm {
        // [[0, 1], [1, 0]]
        SignedPerm::new(vec![1, 0], vec![1, 1]).unwrap()
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert!(SignedPerm::new(vec![0, 0], vec![1, 1]).is_err());
        assert!(SignedPerm::new(vec![0, 2], vec![1, 1]).is_err());
        assert!(SignedPerm::new(vec![0, 1], vec![1]).is_err());
        assert!(SignedPerm::new(vec![0, 1], vec![1, 0]).is_err());
        assert!(SignedPerm::new(vec![0, 1], vec![1, 2]).is_err());
    }

    #[test]
    fn entry_convention_is_pinned() {
        // The stored form of the two order-2 generators is part of the
        // contract: breaking it silently changes every sign downstream.
        assert_eq!(e1().to_dense(), vec![vec![0, -1], vec![1, 0]]);
        assert_eq!(e2().to_dense(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(e1().entry(1, 0), 1);
        assert_eq!(e1().entry(0, 1), -1);
        assert_eq!(e1().entry(0, 0), 0);
    }

    #[test]
    fn identity_is_identity() {
        let i2 = SignedPerm::identity(2);
        assert_eq!(i2.to_dense(), vec![vec![1, 0], vec![0, 1]]);
        assert!(i2.is_identity());
        assert!(!e1().is_identity());
        assert_eq!(i2.transpose(), i2);
    }

    #[test]
    fn product_of_generators() {
        // E1 * E2 = diag(-1, 1), and the product anticommutes.
        let p = e1().multiply(&e2()).unwrap();
        assert_eq!(p.to_dense(), vec![vec![-1, 0], vec![0, 1]]);
        let q = e2().multiply(&e1()).unwrap();
        assert_eq!(q, p.neg());
    }

    #[test]
    fn multiply_respects_identity() {
        for a in [e1(), e2(), e1().multiply(&e2()).unwrap()] {
            let i = SignedPerm::identity(2);
            assert_eq!(a.multiply(&i).unwrap(), a);
            assert_eq!(i.multiply(&a).unwrap(), a);
        }
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = SignedPerm::identity(2);
        let b = SignedPerm::identity(4);
        assert_eq!(
            a.multiply(&b).unwrap_err(),
            Error::OrderMismatch { left: 2, right: 4 }
        );
        assert!(a.pair_relation(&b).is_err());
    }

    #[test]
    fn transpose_of_generators() {
        assert_eq!(e1().transpose(), e1().neg());
        assert_eq!(e2().transpose(), e2());
    }

    #[test]
    fn kronecker_block_layout() {
        // I2 (x) E1 is block-diagonal with E1 blocks.
        let k = SignedPerm::identity(2).kronecker(&e1());
        assert_eq!(
            k.to_dense(),
            vec![
                vec![0, -1, 0, 0],
                vec![1, 0, 0, 0],
                vec![0, 0, 0, -1],
                vec![0, 0, 1, 0],
            ]
        );
        // E1 (x) I2 moves whole blocks instead.
        let k = e1().kronecker(&SignedPerm::identity(2));
        assert_eq!(
            k.to_dense(),
            vec![
                vec![0, 0, -1, 0],
                vec![0, 0, 0, -1],
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
            ]
        );
    }

    #[test]
    fn classify_generators() {
        let c = e1().classify().unwrap();
        assert_eq!(c.symmetry, Symmetry::Skew);
        assert!(!c.diagonal);
        let c = e2().classify().unwrap();
        assert_eq!(c.symmetry, Symmetry::Symmetric);
        assert!(!c.diagonal);
        let c = e1().multiply(&e2()).unwrap().classify().unwrap();
        assert_eq!(c.symmetry, Symmetry::Symmetric);
        assert!(c.diagonal);
    }

    #[test]
    fn classify_rejects_plain_cycle() {
        // A 3-cycle permutation is neither symmetric nor skew.
        let c = SignedPerm::new(vec![1, 2, 0], vec![1, 1, 1]).unwrap();
        assert_eq!(c.classify().unwrap_err(), Error::NeitherSymmetricNorSkew);
        assert!(c.pair_relation(&SignedPerm::identity(3)).is_err());
    }

    #[test]
    fn pair_relation_examples() {
        let r = SignedPerm::identity(2).pair_relation(&e1()).unwrap();
        assert_eq!(r.amicability, Amicability::AntiAmicable);
        assert_eq!(r.support, Support::Disjoint);
        assert_eq!(r.commutation, Commutation::Commute);

        // E1 and E2 are both antidiagonal, so their supports overlap.
        let r = e1().pair_relation(&e2()).unwrap();
        assert_eq!(r.amicability, Amicability::Amicable);
        assert_eq!(r.support, Support::Overlapping);
        assert_eq!(r.commutation, Commutation::Anticommute);

        let r = e1().pair_relation(&e1()).unwrap();
        assert_eq!(r.amicability, Amicability::Amicable);
        assert_eq!(r.support, Support::Overlapping);
        assert_eq!(r.commutation, Commutation::Commute);
    }

    #[test]
    fn triples_are_row_major() {
        assert_eq!(e1().triples(), vec![(0, 1, -1), (1, 0, 1)]);
        assert_eq!(
            SignedPerm::identity(3).triples(),
            vec![(0, 0, 1), (1, 1, 1), (2, 2, 1)]
        );
    }

    fn arb_signed_perm(n: usize) -> impl Strategy<Value = SignedPerm> {
        (
            proptest::collection::vec(any::<u32>(), n),
            proptest::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(keys, bits)| {
                let mut idx: Vec<usize> = (0..n).collect();
                idx.sort_by_key(|&i| (keys[i], i));
                let sign = bits.iter().map(|&b| if b { 1 } else { -1 }).collect();
                SignedPerm::new(idx, sign).unwrap()
            })
    }

    proptest! {
        #[test]
        fn matches_dense_multiply(a in arb_signed_perm(8), b in arb_signed_perm(8)) {
            let fast = a.multiply(&b).unwrap().to_dense();
            let slow = oracle::mul(&a.to_dense(), &b.to_dense());
            prop_assert_eq!(fast, slow);
        }

        #[test]
        fn matches_dense_transpose(a in arb_signed_perm(9)) {
            prop_assert_eq!(a.transpose().to_dense(), oracle::transpose(&a.to_dense()));
        }

        #[test]
        fn matches_dense_kronecker(a in arb_signed_perm(3), b in arb_signed_perm(4)) {
            let fast = a.kronecker(&b).to_dense();
            let slow = oracle::kron(&a.to_dense(), &b.to_dense());
            prop_assert_eq!(fast, slow);
        }

        #[test]
        fn transpose_is_involutive(a in arb_signed_perm(7)) {
            prop_assert_eq!(a.transpose().transpose(), a);
        }

        #[test]
        fn signed_perms_are_orthogonal(a in arb_signed_perm(6)) {
            prop_assert!(a.multiply(&a.transpose()).unwrap().is_identity());
            prop_assert!(a.transpose().multiply(&a).unwrap().is_identity());
        }

        #[test]
        fn kronecker_mixed_product(
            a in arb_signed_perm(3),
            b in arb_signed_perm(2),
            c in arb_signed_perm(3),
            d in arb_signed_perm(2),
        ) {
            // (A (x) B)(C (x) D) = AC (x) BD
            let lhs = a.kronecker(&b).multiply(&c.kronecker(&d)).unwrap();
            let rhs = a.multiply(&c).unwrap().kronecker(&b.multiply(&d).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn entry_agrees_with_dense(a in arb_signed_perm(5)) {
            let dense = a.to_dense();
            for r in 0..5 {
                for c in 0..5 {
                    prop_assert_eq!(i32::from(a.entry(r, c)), dense[r][c]);
                }
            }
        }
    }
}
