//! The real monomial representation of the Clifford algebra with neutral
//! signature, built from Kronecker products of two order-2 generators.
//!
//! For half-rank `m` the positive basis has `4^m` elements of order `2^m`,
//! indexed by base-4 strings: digit `t` (the 4^t place) selects the factor
//! `t` positions from the right of the Kronecker product, with
//! 0 -> I, 1 -> E1, 2 -> E2, 3 -> E1*E2.

use crate::error::Error;
use crate::monomial::{Classification, SignedPerm};

/// Largest supported half-rank; `gamma` matrices then have order 64.
pub const MAX_M: usize = 6;

pub(crate) fn check_m(m: usize) -> Result<(), Error> {
    if (1..=MAX_M).contains(&m) {
        Ok(())
    } else {
        Err(Error::MOutOfRange {
            m,
            min: 1,
            max: MAX_M,
        })
    }
}

fn check_index(m: usize, i: usize) -> Result<(), Error> {
    let limit = basis_count(m);
    if i < limit {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { m, index: i, limit })
    }
}

/// Number of positive basis elements, `4^m`.
pub fn basis_count(m: usize) -> usize {
    1 << (2 * m)
}

/// Skew generator [[0, -1], [1, 0]].
pub fn e1() -> SignedPerm {
    SignedPerm::new(vec![1, 0], vec![1, -1]).expect("fixed generator")
}

/// Symmetric generator [[0, 1], [1, 0]].
pub fn e2() -> SignedPerm {
    SignedPerm::new(vec![1, 0], vec![1, 1]).expect("fixed generator")
}

fn factor(digit: u8) -> SignedPerm {
    match digit {
        0 => SignedPerm::identity(2),
        1 => e1(),
        2 => e2(),
        3 => e1().multiply(&e2()).expect("order 2"),
        _ => unreachable!("base-4 digit"),
    }
}

/// Base-4 digits of `i`, least significant first, padded to length `m`.
pub fn digits4(m: usize, i: usize) -> Result<Vec<u8>, Error> {
    check_m(m)?;
    check_index(m, i)?;
    let mut d = Vec::with_capacity(m);
    let mut x = i;
    for _ in 0..m {
        d.push((x & 3) as u8);
        x >>= 2;
    }
    Ok(d)
}

/// Base-4 digit string, most significant first (the order the Kronecker
/// factors are written in).
pub fn digit_string(m: usize, i: usize) -> Result<String, Error> {
    let d = digits4(m, i)?;
    Ok(d.iter().rev().map(|x| char::from(b'0' + x)).collect())
}

/// Basis matrix number `i` of the half-rank `m` representation.
pub fn gamma(m: usize, i: usize) -> Result<SignedPerm, Error> {
    let d = digits4(m, i)?;
    let mut acc = SignedPerm::identity(1);
    for t in (0..m).rev() {
        acc = acc.kronecker(&factor(d[t]));
    }
    Ok(acc)
}

/// Index form of a basis product: `gamma(i) * gamma(j) = sign * gamma(i ^ j)`.
pub fn index_product(m: usize, i: usize, j: usize) -> Result<(i8, usize), Error> {
    let gi = gamma(m, i)?;
    let gj = gamma(m, j)?;
    let k = i ^ j;
    let p = gi.multiply(&gj)?;
    let gk = gamma(m, k)?;
    if p == gk {
        Ok((1, k))
    } else if p == gk.neg() {
        Ok((-1, k))
    } else {
        unreachable!("basis products always land on a signed basis matrix")
    }
}

/// All `4^m` basis matrices, in index order.
pub fn positive_basis(m: usize) -> Result<Vec<SignedPerm>, Error> {
    check_m(m)?;
    (0..basis_count(m)).map(|i| gamma(m, i)).collect()
}

/// One row of the basis export: index, digit string, symmetry class, and the
/// sparse entries.
#[derive(Clone, Debug, serde::Serialize)]
pub struct BasisElement {
    pub index: usize,
    pub digits: String,
    pub symmetry: crate::monomial::Symmetry,
    pub diagonal: bool,
    pub triples: Vec<(usize, usize, i8)>,
}

/// Classification of every basis matrix, for export.
pub fn basis_report(m: usize) -> Result<Vec<BasisElement>, Error> {
    check_m(m)?;
    (0..basis_count(m))
        .map(|i| {
            let g = gamma(m, i)?;
            let Classification { symmetry, diagonal } =
                g.classify().expect("basis matrices are symmetric or skew");
            Ok(BasisElement {
                index: i,
                digits: digit_string(m, i)?,
                symmetry,
                diagonal,
                triples: g.triples(),
            })
        })
        .collect()
}
