use crate::error::{Error, Result};
use crate::exact::scalar::{RingElem, Scalar};

/// Dense rectangular matrix over an exact ring, row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type ExactMatrix = Matrix<Scalar>;

impl<T: Clone> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn filled(rows: usize, cols: usize, fill: T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![fill; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.at(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: RingElem> Matrix<T> {
    /// Identity with the ring structure of `sample`.
    pub fn identity_like(n: usize, sample: &T) -> Self {
        let mut m = Matrix::filled(n, n, sample.ring_zero());
        for i in 0..n {
            m.set(i, i, sample.ring_one());
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let zero = if let Some(t) = self.data.first().or_else(|| other.data.first()) {
            t.ring_zero()
        } else {
            return Matrix::new(self.rows, other.cols, vec![]);
        };
        let mut out = Matrix::filled(self.rows, other.cols, zero);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_ring_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j).ring_add(&a.ring_mul(other.at(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.at(i, j) != self.at(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Exact determinant by fraction-free (Bareiss) elimination. All interior
    /// divisions are exact, so the routine works over any integral domain
    /// with an exact-division test, polynomials included.
    pub fn determinant(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Err(Error::Dimension("determinant of empty matrix".into()));
        }
        let one = self.data[0].ring_one();
        let zero = self.data[0].ring_zero();
        let mut a = self.clone();
        let mut sign_flip = false;
        let mut prev = one;
        for k in 0..n {
            if a.at(k, k).is_ring_zero() {
                let mut pivot = None;
                for i in (k + 1)..n {
                    if !a.at(i, k).is_ring_zero() {
                        pivot = Some(i);
                        break;
                    }
                }
                match pivot {
                    None => return Ok(zero),
                    Some(i) => {
                        for j in 0..n {
                            let tmp = a.at(k, j).clone();
                            a.set(k, j, a.at(i, j).clone());
                            a.set(i, j, tmp);
                        }
                        sign_flip = !sign_flip;
                    }
                }
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let num = a
                        .at(k, k)
                        .ring_mul(a.at(i, j))
                        .ring_sub(&a.at(i, k).ring_mul(a.at(k, j)));
                    let q = num.ring_exact_div(&prev).ok_or_else(|| {
                        Error::Invalid("fraction-free elimination hit an inexact division".into())
                    })?;
                    a.set(i, j, q);
                }
                a.set(i, k, zero.clone());
            }
            prev = a.at(k, k).clone();
        }
        let det = a.at(n - 1, n - 1).clone();
        Ok(if sign_flip { det.ring_neg() } else { det })
    }
}

impl ExactMatrix {
    /// All entries must share one field.
    pub fn check_uniform_field(&self) -> Result<()> {
        if let Some(first) = self.data.first() {
            let f = first.field();
            for s in &self.data {
                if s.field() != f {
                    return Err(Error::FieldMismatch(
                        "matrix entries drawn from different fields".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Basis of the right null space by Gaussian elimination. One basis
    /// vector per free column, with a 1 in the free coordinate.
    pub fn solve_kernel(&self) -> Result<Vec<Vec<Scalar>>> {
        self.check_uniform_field()?;
        let (rows, cols) = (self.rows, self.cols);
        if cols == 0 {
            return Ok(vec![]);
        }
        let field = self.data[0].field();
        let mut a = self.clone();
        let mut pivot_col_of_row: Vec<usize> = Vec::new();
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let mut pivot = None;
            for i in r..rows {
                if !a.at(i, c).is_zero() {
                    pivot = Some(i);
                    break;
                }
            }
            let Some(pi) = pivot else { continue };
            if pi != r {
                for j in 0..cols {
                    let tmp = a.at(r, j).clone();
                    a.set(r, j, a.at(pi, j).clone());
                    a.set(pi, j, tmp);
                }
            }
            let inv = a.at(r, c).inv().expect("nonzero pivot");
            for j in c..cols {
                a.set(r, j, a.at(r, j).mul(&inv));
            }
            for i in 0..rows {
                if i != r && !a.at(i, c).is_zero() {
                    let f = a.at(i, c).clone();
                    for j in c..cols {
                        let v = a.at(i, j).sub(&f.mul(a.at(r, j)));
                        a.set(i, j, v);
                    }
                }
            }
            pivot_col_of_row.push(c);
            pivot_cols.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in 0..cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![field.zero(); cols];
            v[free] = field.one();
            for (row, &pc) in pivot_col_of_row.iter().enumerate() {
                v[pc] = a.at(row, free).neg();
            }
            basis.push(v);
        }
        Ok(basis)
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::FieldSpec;

    fn fp(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn mat(field: FieldSpec, rows: usize, cols: usize, vals: &[i64]) -> ExactMatrix {
        Matrix::new(
            rows,
            cols,
            vals.iter().map(|&v| field.from_i64(v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        let f = fp(5);
        let id = Matrix::identity_like(3, &f.one());
        assert!(id.solve_kernel().unwrap().is_empty());
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        let f = fp(3);
        let z = Matrix::filled(2, 2, f.zero());
        let b = z.solve_kernel().unwrap();
        assert_eq!(b.len(), 2);
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        // [[1,1],[2,2]] over F_5 has kernel spanned by something
        // proportional to (1,4).
        let f = fp(5);
        let a = mat(f, 2, 2, &[1, 1, 2, 2]);
        let b = a.solve_kernel().unwrap();
        assert_eq!(b.len(), 1);
        let v = &b[0];
        // v = c * (1, 4): cross-multiply to avoid fixing the scale.
        assert_eq!(v[0].mul(&f.from_i64(4)), v[1].mul(&f.from_i64(1)));
        assert!(!(v[0].is_zero() && v[1].is_zero()));
        // A * v = 0
        for i in 0..2 {
            let s = a.at(i, 0).mul(&v[0]).add(&a.at(i, 1).mul(&v[1]));
            assert!(s.is_zero());
        }
    }

    #[test]
    fn determinant_examples() {
        let f = fp(3);
        let id = Matrix::identity_like(4, &f.one());
        assert!(id.determinant().unwrap().is_one());

        let swap = mat(f, 2, 2, &[0, 1, 1, 0]);
        assert_eq!(swap.determinant().unwrap(), f.from_i64(2));

        // Vandermonde on {0,1,2} over F_7: prod of differences = 1*2*1 = 2.
        let f7 = fp(7);
        let v = mat(f7, 3, 3, &[1, 0, 0, 1, 1, 1, 1, 2, 4]);
        assert_eq!(v.determinant().unwrap(), f7.from_i64(2));
    }

    #[test]
    fn determinant_rejects_non_square() {
        let f = fp(3);
        let a = mat(f, 2, 3, &[0, 1, 1, 0, 2, 2]);
        assert!(matches!(
            a.determinant(),
            Err(Error::NonSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn kernel_rejects_mixed_fields() {
        let a = Matrix::new(
            1,
            2,
            vec![fp(3).one(), FieldSpec::Rationals.one()],
        )
        .unwrap();
        assert!(matches!(a.solve_kernel(), Err(Error::FieldMismatch(_))));
    }
}
