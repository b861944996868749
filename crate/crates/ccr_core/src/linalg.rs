//! Small dense Gaussian elimination over any `Real` field.


use crate::scalar::Real;

pub type Matrix<R> = Vec<Vec<R>>;

pub fn identity<R: Real>(n: usize) -> Matrix<R> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { R::one() } else { R::zero() }).collect())
        .collect()
}

pub fn transpose<R: Real>(a: &Matrix<R>) -> Matrix<R> {
    if a.is_empty() {
        return Vec::new();
    }
    (0..a[0].len())
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn matmul<R: Real>(a: &Matrix<R>, b: &Matrix<R>) -> Matrix<R> {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(R::zero(), |acc, k| acc + row[k].clone() * b[k][j].clone())
                })
                .collect()
        })
        .collect()
}

fn pivot_row<R: Real>(m: &Matrix<R>, col: usize, from: usize, tol: &R) -> Option<usize> {
    let mut best: Option<(usize, R)> = None;
    for (r, row) in m.iter().enumerate().skip(from) {
        let v = row[col].abs();
        if v > *tol && best.as_ref().map_or(true, |(_, b)| v > *b) {
            best = Some((r, v));
        }
    }
    best.map(|(r, _)| r)
}

/// Rank with pivots below `tol` treated as zero (pass zero for exact fields).
pub fn rank<R: Real>(a: &Matrix<R>, tol: &R) -> usize {
    let mut m = a.clone();
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = pivot_row(&m, c, r, tol) else { continue };
        m.swap(r, p);
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone() / m[r][c].clone();
            for j in c..cols {
                let v = m[r][j].clone() * f.clone();
                m[i][j] = m[i][j].clone() - v;
            }
        }
        r += 1;
    }
    r
}

/// Gauss-Jordan inverse; `None` when singular.
pub fn inverse<R: Real>(a: &Matrix<R>, tol: &R) -> Option<Matrix<R>> {
    let n = a.len();
    let mut m: Matrix<R> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { R::one() } else { R::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = pivot_row(&m, c, c, tol)?;
        m.swap(c, p);
        let inv = R::one() / m[c][c].clone();
        for v in m[c].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for i in 0..n {
            if i == c || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in 0..2 * n {
                let v = m[c][j].clone() * f.clone();
                m[i][j] = m[i][j].clone() - v;
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn max_abs_diff<R: Real>(a: &Matrix<R>, b: &Matrix<R>) -> R {
    let mut worst = R::zero();
    for (ra, rb) in a.iter().zip(b) {
        for (x, y) in ra.iter().zip(rb) {
            let d = (x.clone() - y.clone()).abs();
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::scalar::rational;
    use num_rational::BigRational;

    #[test]
    fn exact_inverse_and_rank() {
        let a: Matrix<BigRational> = vec![
            vec![rational(2, 1), rational(1, 1)],
            vec![rational(1, 1), rational(1, 1)],
        ];
        let inv = inverse(&a, &BigRational::zero()).unwrap();
        assert_eq!(matmul(&a, &inv), identity(2));
        assert_eq!(rank(&a, &BigRational::zero()), 2);
        let s: Matrix<BigRational> = vec![
            vec![rational(1, 2), rational(1, 3)],
            vec![rational(3, 2), rational(1, 1)],
        ];
        assert_eq!(rank(&s, &BigRational::zero()), 1);
        assert!(inverse(&s, &BigRational::zero()).is_none());
    }
}
