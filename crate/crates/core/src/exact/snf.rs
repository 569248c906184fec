use crate::error::Result;
use crate::exact::matrix::Matrix;
use num::bigint::BigInt;
use num::{Integer, Signed, Zero};

/// Arbitrary-precision integer matrix; carrier for Smith normal form.
pub type IntMatrix = Matrix<BigInt>;

pub fn int_matrix(rows: usize, cols: usize, vals: &[i64]) -> Result<IntMatrix> {
    Matrix::new(rows, cols, vals.iter().map(|&v| BigInt::from(v)).collect())
}

fn swap_rows(m: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols() {
        let t = m.at(a, j).clone();
        m.set(a, j, m.at(b, j).clone());
        m.set(b, j, t);
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows() {
        let t = m.at(i, a).clone();
        m.set(i, a, m.at(i, b).clone());
        m.set(i, b, t);
    }
}

/// row[dst] += c * row[src]
fn add_row(m: &mut IntMatrix, dst: usize, src: usize, c: &BigInt) {
    for j in 0..m.cols() {
        let v = m.at(dst, j) + c * m.at(src, j);
        m.set(dst, j, v);
    }
}

/// col[dst] += c * col[src]
fn add_col(m: &mut IntMatrix, dst: usize, src: usize, c: &BigInt) {
    for i in 0..m.rows() {
        let v = m.at(i, dst) + c * m.at(i, src);
        m.set(i, dst, v);
    }
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for j in 0..m.cols() {
        let v = -m.at(r, j);
        m.set(r, j, v);
    }
}

/// Smith normal form with transformation matrices: returns (U, D, V) with
/// U*A*V = D, D diagonal with d_1 | d_2 | ..., and U, V unimodular.
pub fn smith_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let (rows, cols) = (a.rows(), a.cols());
    let mut d = a.clone();
    let one = BigInt::from(1);
    let mut u = Matrix::identity_like(rows, &one);
    let mut v = Matrix::identity_like(cols, &one);

    let steps = rows.min(cols);
    for k in 0..steps {
        'pivot: loop {
            // Locate a nonzero entry of minimal absolute value in the
            // trailing submatrix and move it to (k, k).
            let mut best: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if d.at(i, j).is_zero() {
                        continue;
                    }
                    best = match best {
                        None => Some((i, j)),
                        Some((bi, bj)) => {
                            if d.at(i, j).abs() < d.at(bi, bj).abs() {
                                Some((i, j))
                            } else {
                                Some((bi, bj))
                            }
                        }
                    };
                }
            }
            let Some((pi, pj)) = best else {
                break 'pivot; // trailing block is zero
            };
            swap_rows(&mut d, k, pi);
            swap_rows(&mut u, k, pi);
            swap_cols(&mut d, k, pj);
            swap_cols(&mut v, k, pj);

            // Clear the pivot column and row by Euclidean reduction.
            let mut dirty = false;
            for i in (k + 1)..rows {
                if !d.at(i, k).is_zero() {
                    let q = -(d.at(i, k).div_floor(d.at(k, k)));
                    add_row(&mut d, i, k, &q);
                    add_row(&mut u, i, k, &q);
                    if !d.at(i, k).is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in (k + 1)..cols {
                if !d.at(k, j).is_zero() {
                    let q = -(d.at(k, j).div_floor(d.at(k, k)));
                    add_col(&mut d, j, k, &q);
                    add_col(&mut v, j, k, &q);
                    if !d.at(k, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'pivot;
            }

            // Pivot divides everything deeper in the block, or we absorb the
            // offending row and restart the reduction.
            let pivot = d.at(k, k).clone();
            let mut offender = None;
            'scan: for i in (k + 1)..rows {
                for j in (k + 1)..cols {
                    if !(d.at(i, j) % &pivot).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    add_row(&mut d, k, i, &one);
                    add_row(&mut u, k, i, &one);
                }
                None => break 'pivot,
            }
        }
    }

    // Positive diagonal.
    for k in 0..steps {
        if d.at(k, k).is_negative() {
            negate_row(&mut d, k);
            negate_row(&mut u, k);
        }
    }
    (u, d, v)
}

/// Diagonal of the Smith form as plain integers (for small lattices).
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    let (_, d, _) = smith_normal_form(a);
    (0..a.rows().min(a.cols()))
        .map(|k| d.at(k, k).clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::RingElem;

    fn check_snf(a: &IntMatrix) {
        let (u, d, v) = smith_normal_form(a);
        // U*A*V = D
        let uav = u.mul(a).unwrap().mul(&v).unwrap();
        assert_eq!(uav, d);
        // off-diagonal zero, divisibility chain
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                if i != j {
                    assert!(d.at(i, j).is_zero());
                }
            }
        }
        let k = d.rows().min(d.cols());
        for t in 1..k {
            let prev = d.at(t - 1, t - 1);
            let cur = d.at(t, t);
            if !prev.is_zero() {
                assert!((cur % prev).is_zero());
            } else {
                assert!(cur.is_zero());
            }
        }
        // unimodular transforms
        for m in [&u, &v] {
            let det = m.determinant().unwrap();
            assert!(det.clone().abs().ring_one() == det.abs());
        }
    }

    #[test]
    fn snf_coprime_diagonal() {
        let a = int_matrix(2, 2, &[2, 0, 0, 3]).unwrap();
        let (_, d, _) = smith_normal_form(&a);
        assert_eq!(*d.at(0, 0), BigInt::from(1));
        assert_eq!(*d.at(1, 1), BigInt::from(6));
        check_snf(&a);
    }

    #[test]
    fn snf_identity_and_scalar() {
        let id = int_matrix(3, 3, &[1, 0, 0, 0, 1, 0, 0, 0, 1]).unwrap();
        let (u, d, v) = smith_normal_form(&id);
        assert_eq!(d, id);
        assert_eq!(u, id);
        assert_eq!(v, id);

        let s = int_matrix(1, 1, &[2]).unwrap();
        let (_, d, _) = smith_normal_form(&s);
        assert_eq!(*d.at(0, 0), BigInt::from(2));
    }

    #[test]
    fn snf_rectangular_and_torsion() {
        let a = int_matrix(4, 4, &[-6, 111, -36, 6, 5, -672, 210, 74, 0, -255, 81, 24, -7, 255, -81, -10]).unwrap();
        let (_, d, _) = smith_normal_form(&a);
        let diag: Vec<i64> = (0..4).map(|k| i64::try_from(d.at(k, k)).unwrap()).collect();
        assert_eq!(diag, vec![1, 3, 21, 0]);
        check_snf(&a);

        let b = int_matrix(2, 3, &[2, 4, 4, -6, 6, 12]).unwrap();
        check_snf(&b);
    }
}
