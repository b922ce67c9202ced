//! The twin Boolean functions attached to the Clifford basis, their Walsh
//! spectra, and the parameters of the strongly regular graphs they generate.
//!
//! `sigma_m(i)` marks basis matrices that are skew; `tau_m(i)` marks those
//! that are symmetric but not diagonal. Both can be read off the base-4
//! digits of `i` without building any matrix, and the digit rules are kept
//! deliberately separate from the matrix classification so each can check
//! the other.

use crate::clifford::{self, basis_count, digit_string, gamma};
use crate::error::Error;
use crate::monomial::Symmetry;

/// Boolean function on `4^m` points, stored as a truth table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoolFn {
    m: usize,
    table: Vec<u8>,
}

impl BoolFn {
    pub fn new(m: usize, table: Vec<u8>) -> Result<Self, Error> {
        clifford::check_m(m)?;
        let expected = basis_count(m);
        if table.len() != expected {
            return Err(Error::TableLength {
                got: table.len(),
                expected,
            });
        }
        for (index, &value) in table.iter().enumerate() {
            if value > 1 {
                return Err(Error::TableEntry { index, value });
            }
        }
        Ok(BoolFn { m, table })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the table always has 4^m >= 4 entries
    }

    pub fn value(&self, i: usize) -> u8 {
        self.table[i]
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.table.len())
            .filter(|&i| self.table[i] == 1)
            .collect()
    }

    pub fn support_size(&self) -> usize {
        self.table.iter().filter(|&&v| v == 1).count()
    }
}

fn digit_counts(m: usize, i: usize) -> (u32, u32) {
    // (number of digits equal to 1, number of digits equal to 1 or 2)
    let mut ones = 0;
    let mut mixed = 0;
    let mut x = i;
    for _ in 0..m {
        match x & 3 {
            1 => {
                ones += 1;
                mixed += 1;
            }
            2 => mixed += 1,
            _ => {}
        }
        x >>= 2;
    }
    (ones, mixed)
}

/// Digit rule for the first twin: an odd number of base-4 digits equal to 1.
pub fn sigma_fn(m: usize) -> Result<BoolFn, Error> {
    clifford::check_m(m)?;
    let table = (0..basis_count(m))
        .map(|i| {
            let (ones, _) = digit_counts(m, i);
            (ones & 1) as u8
        })
        .collect();
    BoolFn::new(m, table)
}

/// Digit rule for the second twin: at least one digit in {1, 2} and an even
/// number of digits equal to 1.
pub fn tau_fn(m: usize) -> Result<BoolFn, Error> {
    clifford::check_m(m)?;
    let table = (0..basis_count(m))
        .map(|i| {
            let (ones, mixed) = digit_counts(m, i);
            u8::from(mixed > 0 && ones & 1 == 0)
        })
        .collect();
    BoolFn::new(m, table)
}

/// Matrix-side definition of the first twin: 1 iff `gamma(m, i)` is skew.
pub fn matrix_oracle_sigma(m: usize, i: usize) -> Result<u8, Error> {
    let c = gamma(m, i)?
        .classify()
        .expect("basis matrices are symmetric or skew");
    Ok(u8::from(c.symmetry == Symmetry::Skew))
}

/// Matrix-side definition of the second twin: 1 iff `gamma(m, i)` is
/// symmetric and not diagonal.
pub fn matrix_oracle_tau(m: usize, i: usize) -> Result<u8, Error> {
    let c = gamma(m, i)?
        .classify()
        .expect("basis matrices are symmetric or skew");
    Ok(u8::from(c.symmetry == Symmetry::Symmetric && !c.diagonal))
}

/// Walsh spectrum over the 2m-dimensional Boolean cube, by the in-place
/// butterfly. Entry `w` is `sum_i (-1)^(f(i) + <i, w>)`.
pub fn walsh_hadamard(f: &BoolFn) -> Vec<i64> {
    let mut v: Vec<i64> = f.table.iter().map(|&b| 1 - 2 * i64::from(b)).collect();
    let n = v.len();
    let mut h = 1;
    while h < n {
        let mut start = 0;
        while start < n {
            for k in start..start + h {
                let (a, b) = (v[k], v[k + h]);
                v[k] = a + b;
                v[k + h] = a - b;
            }
            start += 2 * h;
        }
        h *= 2;
    }
    v
}

/// A function on 4^m points is bent when its whole Walsh spectrum has
/// magnitude 2^m.
pub fn is_bent(f: &BoolFn) -> bool {
    let flat = 1i64 << f.m;
    walsh_hadamard(f).iter().all(|&w| w.abs() == flat)
}

/// Strongly regular graph parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

/// The parameter set both twins' Cayley graphs must hit:
/// `(4^m, 2^(2m-1) - 2^(m-1), 2^(2m-2) - 2^(m-1), same)`.
pub fn srg_params(m: usize) -> SrgParams {
    assert!((1..=16).contains(&m));
    let lam = (1usize << (2 * m - 2)) - (1 << (m - 1));
    SrgParams {
        v: 1 << (2 * m),
        k: (1 << (2 * m - 1)) - (1 << (m - 1)),
        lambda: lam,
        mu: lam,
    }
}

/// Parameters of the difference set formed by either support.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DifferenceSetParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    /// Order of the difference set, `k - lambda`.
    pub n: usize,
}

pub fn difference_set_params(m: usize) -> DifferenceSetParams {
    let p = srg_params(m);
    DifferenceSetParams {
        v: p.v,
        k: p.k,
        lambda: p.lambda,
        n: p.k - p.lambda,
    }
}

/// Truth tables of both twins as CSV with header `index,digits,sigma,tau`.
pub fn truth_table_csv(m: usize) -> Result<String, Error> {
    let sigma = sigma_fn(m)?;
    let tau = tau_fn(m)?;
    let mut out = String::from("index,digits,sigma,tau\n");
    for i in 0..basis_count(m) {
        out.push_str(&format!(
            "{},{},{},{}\n",
            i,
            digit_string(m, i)?,
            sigma.value(i),
            tau.value(i)
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_oracle as oracle;
    use proptest::prelude::*;

    #[test]
    fn rank_one_tables() {
        assert_eq!(sigma_fn(1).unwrap().table(), &[0, 1, 0, 0]);
        assert_eq!(tau_fn(1).unwrap().table(), &[0, 0, 1, 0]);
    }

    #[test]
    fn digit_rules_match_matrix_classification() {
        for m in 1..=3 {
            let sigma = sigma_fn(m).unwrap();
            let tau = tau_fn(m).unwrap();
            for i in 0..basis_count(m) {
                assert_eq!(sigma.value(i), matrix_oracle_sigma(m, i).unwrap(), "m={m} i={i}");
                assert_eq!(tau.value(i), matrix_oracle_tau(m, i).unwrap(), "m={m} i={i}");
            }
        }
    }

    #[test]
    fn twins_have_equal_support_sizes() {
        for m in 1..=4 {
            let expected = (1usize << (2 * m - 1)) - (1 << (m - 1));
            assert_eq!(sigma_fn(m).unwrap().support_size(), expected);
            assert_eq!(tau_fn(m).unwrap().support_size(), expected);
            // The two supports never meet, and both avoid 0.
            let s = sigma_fn(m).unwrap();
            let t = tau_fn(m).unwrap();
            assert_eq!(s.value(0), 0);
            assert_eq!(t.value(0), 0);
            assert!((0..basis_count(m)).all(|i| s.value(i) & t.value(i) == 0));
        }
    }

    #[test]
    fn walsh_spectrum_of_first_twin_at_rank_one() {
        let f = sigma_fn(1).unwrap();
        let by_definition = oracle::walsh_by_definition(f.table());
        assert_eq!(by_definition, vec![2, 2, -2, 2]);
        assert_eq!(walsh_hadamard(&f), by_definition);
    }

    #[test]
    fn butterfly_matches_definition() {
        for m in 1..=3 {
            for f in [sigma_fn(m).unwrap(), tau_fn(m).unwrap()] {
                assert_eq!(walsh_hadamard(&f), oracle::walsh_by_definition(f.table()));
            }
        }
    }

    #[test]
    fn twins_are_bent_up_to_rank_four() {
        for m in 1..=4 {
            assert!(is_bent(&sigma_fn(m).unwrap()), "sigma, m={m}");
            assert!(is_bent(&tau_fn(m).unwrap()), "tau, m={m}");
        }
    }

    #[test]
    fn constant_function_is_not_bent() {
        let z = BoolFn::new(2, vec![0; 16]).unwrap();
        assert!(!is_bent(&z));
    }

    #[test]
    fn table_validation() {
        assert!(matches!(
            BoolFn::new(2, vec![0; 15]),
            Err(Error::TableLength { got: 15, expected: 16 })
        ));
        let mut t = vec![0; 16];
        t[3] = 2;
        assert!(matches!(
            BoolFn::new(2, t),
            Err(Error::TableEntry { index: 3, value: 2 })
        ));
    }

    #[test]
    fn parameter_tables() {
        let expect = [
            (1, (4, 1, 0, 0)),
            (2, (16, 6, 2, 2)),
            (3, (64, 28, 12, 12)),
            (4, (256, 120, 56, 56)),
        ];
        for (m, (v, k, lambda, mu)) in expect {
            assert_eq!(srg_params(m), SrgParams { v, k, lambda, mu });
        }
        let d = difference_set_params(2);
        assert_eq!((d.v, d.k, d.lambda, d.n), (16, 6, 2, 4));
        assert_eq!(difference_set_params(4).n, 64);
    }

    #[test]
    fn csv_layout() {
        let csv = truth_table_csv(2).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 17);
        assert_eq!(lines[0], "index,digits,sigma,tau");
        assert_eq!(lines[10], "9,21,1,0");
        assert_eq!(lines[11], "10,22,0,1");
    }

    proptest! {
        #[test]
        fn butterfly_matches_definition_on_random_tables(
            bits in proptest::collection::vec(0u8..=1, 16)
        ) {
            let f = BoolFn::new(2, bits).unwrap();
            prop_assert_eq!(walsh_hadamard(&f), oracle::walsh_by_definition(f.table()));
        }

        #[test]
        fn parseval(bits in proptest::collection::vec(0u8..=1, 16)) {
            let f = BoolFn::new(2, bits).unwrap();
            let total: i64 = walsh_hadamard(&f).iter().map(|w| w * w).sum();
            prop_assert_eq!(total, 16 * 16);
        }
    }
}
