//! Small dense integer linear algebra: gcds, determinants, Hermite and Smith
//! forms. Matrices are row-major `Vec<Vec<_>>` and intermediate values are
//! carried in `i128`.

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let (g, x, _) = ext_gcd(a.rem_euclid(m), m);
    (g == 1).then(|| x.rem_euclid(m))
}

pub fn to_i128(m: &[Vec<i64>]) -> Vec<Vec<i128>> {
    m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect()
}

/// Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
pub fn det(m: &[Vec<i64>]) -> i128 {
    det_i128(to_i128(m))
}

pub fn det_i128(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    assert!(a.iter().all(|r| r.len() == n), "det of non-square matrix");
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Adjugate of a square matrix, so that `m * adj(m) = det(m) * I`.
pub fn adjugate(m: &[Vec<i64>]) -> Vec<Vec<i128>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![1]];
    }
    let mut adj = vec![vec![0i128; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i64>> = m
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != i)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let cof = det(&minor);
            // adj = transpose of cofactor matrix
            adj[j][i] = if (i + j) % 2 == 0 { cof } else { -cof };
        }
    }
    adj
}

/// Row-style Hermite basis: a list of linearly independent integer rows
/// generating the same lattice as the input rows, in echelon form with
/// positive pivots.
pub fn lattice_basis(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let Some(ncols) = rows.first().map(|r| r.len()) else {
        return Vec::new();
    };
    let mut a: Vec<Vec<i128>> = to_i128(rows);
    let mut pivot = 0;
    for col in 0..ncols {
        loop {
            let live: Vec<usize> = (pivot..a.len()).filter(|&i| a[i][col] != 0).collect();
            if live.is_empty() {
                break;
            }
            let best = *live.iter().min_by_key(|&&i| a[i][col].abs()).unwrap();
            a.swap(pivot, best);
            let mut done = true;
            for i in pivot + 1..a.len() {
                if a[i][col] != 0 {
                    let q = a[i][col].div_euclid(a[pivot][col]);
                    for j in 0..ncols {
                        a[i][j] -= q * a[pivot][j];
                    }
                    if a[i][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                if a[pivot][col] < 0 {
                    a[pivot].iter_mut().for_each(|x| *x = -*x);
                }
                pivot += 1;
                break;
            }
        }
        if pivot == a.len() {
            break;
        }
    }
    a.truncate(pivot);
    a.into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| i64::try_from(x).expect("lattice basis entry overflows i64"))
                .collect()
        })
        .collect()
}

/// Nonzero Smith invariants `d_1 | d_2 | ... | d_r` (all positive), where
/// `r` is the rank of the matrix.
pub fn smith_invariants(m: &[Vec<i64>]) -> Vec<i128> {
    let mut a = to_i128(m);
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // smallest nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        let mut clean = true;
        for i in t + 1..nrows {
            let q = a[i][t] / a[t][t];
            if q != 0 {
                for j in t..ncols {
                    a[i][j] -= q * a[t][j];
                }
            }
            if a[i][t] != 0 {
                clean = false;
            }
        }
        for j in t + 1..ncols {
            let q = a[t][j] / a[t][t];
            if q != 0 {
                for row in a.iter_mut().skip(t) {
                    row[j] -= q * row[t];
                }
            }
            if a[t][j] != 0 {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        let p = a[t][t];
        let bad = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| a[i][j] % p != 0));
        if let Some(i) = bad {
            for j in t..ncols {
                a[t][j] += a[i][j];
            }
            continue;
        }
        out.push(p.abs());
        t += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_gcd_bezout() {
        for a in -12..=12 {
            for b in -12..=12 {
                let (g, x, y) = ext_gcd(a, b);
                assert_eq!(g, gcd(a, b));
                assert_eq!(a * x + b * y, g);
            }
        }
    }

    #[test]
    fn determinant_and_adjugate() {
        let m = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        assert_eq!(det(&m), 4);
        let adj = adjugate(&m);
        for i in 0..3 {
            for j in 0..3 {
                let s: i128 = (0..3).map(|t| m[i][t] as i128 * adj[t][j]).sum();
                assert_eq!(s, if i == j { 4 } else { 0 });
            }
        }
        assert_eq!(det(&[vec![0, 1], vec![1, 0]]), -1);
    }

    #[test]
    fn smith_of_known_matrices() {
        assert_eq!(smith_invariants(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(smith_invariants(&[vec![2, 4], vec![4, 2]]), vec![2, 6]);
        assert_eq!(smith_invariants(&[vec![0, 0], vec![0, 0]]), Vec::<i128>::new());
        // D4 Cartan matrix has discriminant group (Z/2)^2
        let d4 = vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, -1],
            vec![0, -1, 2, 0],
            vec![0, -1, 0, 2],
        ];
        assert_eq!(smith_invariants(&d4), vec![1, 1, 2, 2]);
    }

    #[test]
    fn lattice_basis_spans() {
        let rows = vec![vec![2, 4], vec![3, 6], vec![0, 5]];
        let b = lattice_basis(&rows);
        assert_eq!(b.len(), 2);
        assert_eq!(det(&b).abs(), 5);
    }
}
