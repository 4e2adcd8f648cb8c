//! Small exact integer linear algebra for desk-scale geometry.

use num_integer::Integer;

/// Rank of a list of integer row vectors.
pub(crate) fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let Some(cols) = m.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in 0..m.len() {
            if r == rank || m[r][col] == 0 {
                continue;
            }
            let (a, b) = (m[rank][col], m[r][col]);
            let g = a.gcd(&b);
            let (fa, fb) = (a / g, b / g);
            for c in 0..cols {
                m[r][c] = m[r][c] * fa - m[rank][c] * fb;
            }
            normalize(&mut m[r]);
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn normalize(row: &mut [i128]) {
    let g = row.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g > 1 {
        row.iter_mut().for_each(|x| *x /= g);
    }
}

/// Determinant of a square integer matrix (Bareiss elimination).
pub(crate) fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// A nonzero integer vector orthogonal to the `n - 1` rows of `diffs`
/// (generalized cross product), or `None` if the rows are dependent.
pub(crate) fn normal_of(diffs: &[Vec<i64>], n: usize) -> Option<Vec<i64>> {
    debug_assert_eq!(diffs.len() + 1, n);
    let mut normal = Vec::with_capacity(n);
    for skip in 0..n {
        let minor: Vec<Vec<i128>> = diffs
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != skip)
                    .map(|(_, &x)| x as i128)
                    .collect()
            })
            .collect();
        let d = det(minor);
        let signed = if skip % 2 == 0 { d } else { -d };
        normal.push(signed);
    }
    let g = normal.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g == 0 {
        return None;
    }
    Some(normal.into_iter().map(|x| (x / g) as i64).collect())
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Affine dimension of a point set; `-1` for the empty set.
pub(crate) fn affine_dim(points: &[&[i64]]) -> i32 {
    let Some((first, rest)) = points.split_first() else {
        return -1;
    };
    let diffs: Vec<Vec<i64>> = rest
        .iter()
        .map(|p| p.iter().zip(first.iter()).map(|(a, b)| a - b).collect())
        .collect();
    rank(&diffs) as i32
}
