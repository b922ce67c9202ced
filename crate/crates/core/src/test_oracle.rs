//! Naive dense integer matrix arithmetic, used only by tests as an
//! independent check on the sparse implementations.

pub fn mul(a: &[Vec<i32>], b: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let n = a.len();
    assert_eq!(b.len(), n);
    let mut out = vec![vec![0; n]; n];
    for r in 0..n {
        for c in 0..n {
            let mut acc = 0;
            for k in 0..n {
                acc += a[r][k] * b[k][c];
            }
            out[r][c] = acc;
        }
    }
    out
}

pub fn transpose(a: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let n = a.len();
    let mut out = vec![vec![0; n]; n];
    for r in 0..n {
        for c in 0..n {
            out[c][r] = a[r][c];
        }
    }
    out
}

pub fn kron(a: &[Vec<i32>], b: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let na = a.len();
    let nb = b.len();
    let n = na * nb;
    let mut out = vec![vec![0; n]; n];
    for ra in 0..na {
        for ca in 0..na {
            for rb in 0..nb {
                for cb in 0..nb {
                    out[ra * nb + rb][ca * nb + cb] = a[ra][ca] * b[rb][cb];
                }
            }
        }
    }
    out
}

pub fn neg(a: &[Vec<i32>]) -> Vec<Vec<i32>> {
    a.iter()
        .map(|row| row.iter().map(|&x| -x).collect())
        .collect()
}

pub fn identity(n: usize) -> Vec<Vec<i32>> {
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        out[i][i] = 1;
    }
    out
}

/// Walsh spectrum by the defining double sum; quadratic in table length.
pub fn walsh_by_definition(table: &[u8]) -> Vec<i64> {
    let n = table.len();
    (0..n)
        .map(|w| {
            (0..n)
                .map(|i| {
                    let dot = (i & w).count_ones() as u8 & 1;
                    if table[i] ^ dot == 1 {
                        -1i64
                    } else {
                        1
                    }
                })
                .sum()
        })
        .collect()
}
