//! Dense linear algebra over a small prime field, entries in `[0, p)`.

pub(crate) type Row = Vec<u64>;

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    let mut r = 1;
    let (mut b, mut e) = (a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref(m: &mut [Row], p: u64) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(sel) = (row..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(row, sel);
        let inv = inv_mod(m[row][col], p);
        for v in m[row].iter_mut() {
            *v = *v * inv % p;
        }
        for i in 0..m.len() {
            if i != row && m[i][col] != 0 {
                let c = m[i][col];
                for j in 0..cols {
                    m[i][j] = (m[i][j] + (p - c) * m[row][j]) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

pub(crate) fn rank(m: &[Row], p: u64) -> usize {
    let mut m = m.to_vec();
    rref(&mut m, p).len()
}

/// A basis of `{x : m·x = 0}` for an `r × n` matrix.
pub(crate) fn kernel(m: &[Row], n: usize, p: u64) -> Vec<Row> {
    let mut m = m.to_vec();
    let pivots = rref(&mut m, p);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![0; n];
            x[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                x[pc] = (p - m[i][f]) % p;
            }
            x
        })
        .collect()
}

/// Solve `m·x = b`; returns a particular solution and a kernel basis.
pub(crate) fn solve(m: &[Row], b: &[u64], n: usize, p: u64) -> Option<(Row, Vec<Row>)> {
    let mut aug: Vec<Row> = m
        .iter()
        .zip(b)
        .map(|(r, &v)| {
            let mut r = r.clone();
            r.push(v % p);
            r
        })
        .collect();
    let pivots = rref(&mut aug, p);
    if pivots.contains(&n) {
        return None;
    }
    let mut x = vec![0; n];
    for (i, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[i][n];
    }
    Some((x, kernel(m, n, p)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_and_solve() {
        let m = vec![vec![1, 1, 0], vec![0, 1, 1]];
        let k = kernel(&m, 3, 2);
        assert_eq!(k, vec![vec![1, 1, 1]]);
        let (x, k2) = solve(&m, &[1, 0], 3, 2).unwrap();
        assert_eq!(x, vec![1, 0, 0]);
        assert_eq!(k2.len(), 1);
        assert!(solve(&[vec![0, 0]], &[1], 2, 3).is_none());
        assert_eq!(rank(&m, 5), 2);
        assert_eq!(inv_mod(3, 7), 5);
    }
}
