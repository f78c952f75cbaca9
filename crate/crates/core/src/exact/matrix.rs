use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::Field;

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Output of [`Matrix::rref`]: the reduced row echelon form and the pivot
/// column of each nonzero row.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    pub reduced: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F> Matrix<F> {
    /// Panics if `data.len() != rows * cols`.
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Self { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let nrows = rows.len();
        Self {
            rows: nrows,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut F {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn map<G>(&self, f: impl FnMut(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| F::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { F::one() } else { F::zero() })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, factor: &F) -> Self {
        self.map(|x| x.clone() * factor)
    }

    /// Product `self * rhs`, or `None` when the inner dimensions differ.
    pub fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        if self.cols != rhs.rows {
            return None;
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        let slot = out.get_mut(r, c);
                        *slot = std::mem::replace(slot, F::zero()) + &(a.clone() * b);
                    }
                }
            }
        }
        Some(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(F::zero(), |acc, (a, b)| acc + &(a.clone() * b))
            })
            .collect()
    }

    /// Kronecker product: block `(i, j)` of the result is `self[i][j] * rhs`.
    pub fn kronecker(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            self.get(r / rhs.rows, c / rhs.cols).clone() * rhs.get(r % rhs.rows, c % rhs.cols)
        })
    }

    /// Reduced row echelon form. Columns are scanned left to right and each
    /// pivot is the first nonzero entry at or below the current row.
    pub fn rref(&self) -> Echelon<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inverse().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.get(row, c).clone() * &inv;
                *m.get_mut(row, c) = v;
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let pivot_entry = m.get(row, c);
                    if pivot_entry.is_zero() {
                        continue;
                    }
                    let v = m.get(r, c).clone() - &(factor.clone() * pivot_entry);
                    *m.get_mut(r, c) = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right null space. One vector per free column `f`, with a
    /// 1 in position `f`, zeros at the other free columns, and the pivot
    /// entries read off the reduced echelon form.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let Echelon { reduced, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![F::zero(); self.cols];
                v[free] = F::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -reduced.get(r, free).clone();
                }
                v
            })
            .collect()
    }

    /// Determinant by Bareiss fraction-free elimination. Panics on a
    /// non-square matrix.
    pub fn determinant(&self) -> F {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return F::one();
        }
        let mut m = self.clone();
        let mut prev = F::one();
        let mut negate = false;
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m.get(r, k).is_zero()) else {
                    return F::zero();
                };
                m.swap_rows(k, p);
                negate = !negate;
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let v =
                        (m.get(i, j).clone() * &pivot - m.get(i, k).clone() * m.get(k, j)) / &prev;
                    *m.get_mut(i, j) = v;
                }
            }
            prev = pivot;
        }
        let det = m.get(n - 1, n - 1).clone();
        if negate {
            -det
        } else {
            det
        }
    }

    /// Inverse via Gauss-Jordan on `[self | Id]`; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let augmented = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                F::one()
            } else {
                F::zero()
            }
        });
        let Echelon { reduced, pivots } = augmented.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |r, c| reduced.get(r, c + n).clone()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<F: Field> Add for &Matrix<F> {
    type Output = Matrix<F>;
    fn add(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).clone() + rhs.get(r, c)
        })
    }
}

impl<F: Field> Sub for &Matrix<F> {
    type Output = Matrix<F>;
    fn sub(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).clone() - rhs.get(r, c)
        })
    }
}

impl<F: Field> Mul for &Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, rhs: &Matrix<F>) -> Matrix<F> {
        self.checked_mul(rhs)
            .expect("matrix multiplication with mismatched inner dimensions")
    }
}

impl<F: Field> Neg for &Matrix<F> {
    type Output = Matrix<F>;
    fn neg(self) -> Matrix<F> {
        self.map(|x| -x.clone())
    }
}

impl<F: fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (c, x) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl<F: Field> Matrix<F> {
    /// Dot product of two coordinate vectors.
    pub fn dot(a: &[F], b: &[F]) -> F {
        a.iter()
            .zip(b)
            .fold(F::zero(), |acc, (x, y)| acc + &(x.clone() * y))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = self.get(r, c);
                    if r == c {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rational, GaussianRational, MatrixGQ, MatrixQ, Rational};
    use num_traits::One;

    fn q(rows: &[&[i64]]) -> MatrixQ {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    fn gi(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(int(re), int(im))
    }

    fn gq(rows: &[&[(i64, i64)]]) -> MatrixGQ {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(a, b)| gi(a, b)).collect())
                .collect(),
        )
    }

    #[test]
    fn kronecker_of_identities() {
        let id2 = MatrixGQ::identity(2);
        assert_eq!(id2.kronecker(&id2), MatrixGQ::identity(4));
    }

    #[test]
    fn kronecker_of_quaternion_and_rotation() {
        let i = gq(&[&[(0, 1), (0, 0)], &[(0, 0), (0, -1)]]);
        let rho = gq(&[&[(0, 0), (-1, 0)], &[(1, 0), (0, 0)]]);
        let expected = gq(&[
            &[(0, 0), (0, -1), (0, 0), (0, 0)],
            &[(0, 1), (0, 0), (0, 0), (0, 0)],
            &[(0, 0), (0, 0), (0, 0), (0, 1)],
            &[(0, 0), (0, 0), (0, -1), (0, 0)],
        ]);
        assert_eq!(i.kronecker(&rho), expected);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(MatrixGQ::identity(4).rank(), 4);
        assert_eq!(MatrixGQ::zeros(4, 4).rank(), 0);
        let i = gq(&[&[(0, 1), (0, 0)], &[(0, 0), (0, -1)]]);
        let rho = gq(&[&[(0, 0), (-1, 0)], &[(1, 0), (0, 0)]]);
        let s = i.kronecker(&rho);
        assert_eq!((&s - &MatrixGQ::identity(4)).rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        assert!(MatrixQ::identity(5).kernel_basis().is_empty());
        let m = q(&[&[2, 2, 2, 2, 2]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 4);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
        // free-variable unit pattern: the first kernel vector is (-1, 1, 0, 0, 0)
        assert_eq!(k[0], vec![int(-1), int(1), int(0), int(0), int(0)]);
        assert_eq!(MatrixQ::zeros(3, 5).kernel_basis().len(), 5);
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(MatrixGQ::identity(4).determinant(), GaussianRational::one());
        let id = MatrixGQ::identity(4);
        let m = &(-&id) - &id;
        assert_eq!(m.determinant(), GaussianRational::from_int(16));
        let rho = gq(&[&[(0, 0), (-1, 0)], &[(1, 0), (0, 0)]]);
        assert_eq!(rho.determinant(), GaussianRational::one());
        // needs a row swap
        let p = q(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 3]]);
        assert_eq!(p.determinant(), int(-3));
        let singular = q(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.determinant(), Rational::zero());
    }

    #[test]
    #[should_panic(expected = "non-square")]
    fn determinant_rejects_non_square() {
        MatrixQ::zeros(2, 3).determinant();
    }

    #[test]
    fn inverse_round_trip() {
        let m = q(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let h = Matrix::from_rows(vec![
            vec![rational(1, 2), rational(1, 3)],
            vec![rational(1, 3), rational(1, 4)],
        ]);
        assert!((&h.inverse().unwrap() * &h).is_identity());
    }

    #[test]
    fn checked_mul_rejects_mismatch() {
        assert!(MatrixQ::zeros(2, 3)
            .checked_mul(&MatrixQ::zeros(2, 3))
            .is_none());
    }
}
