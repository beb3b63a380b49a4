//! Dense column-major matrices over a `Field`, plus the Hermitian wrapper
//! used for states and map outputs.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::scalar::Scalar;

/// Dense column-major matrix.
#[derive(Clone, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Field> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::from_real(<T::Real as num_traits::One>::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut m = Self::zeros(rows, cols);
        for j in 0..cols {
            for i in 0..rows {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Build from a row-major nested array (convenient in tests and builders).
    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = if r > 0 { rows[0].len() } else { 0 };
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn col(&self, j: usize) -> &[T] {
        &self.data[j * self.rows..(j + 1) * self.rows]
    }

    #[inline]
    pub fn col_mut(&mut self, j: usize) -> &mut [T] {
        &mut self.data[j * self.rows..(j + 1) * self.rows]
    }

    #[inline]
    pub fn data(&self) -> &[T] {
        &self.data
    }

    #[inline]
    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: T::Real) -> Self {
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = v.scale(s);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a += *b;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a -= *b;
        }
        out
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        let mut t = T::zero();
        for i in 0..self.rows {
            t += self[(i, i)];
        }
        t
    }

    pub fn norm_fro(&self) -> T::Real {
        let mut s = <T::Real as num_traits::Zero>::zero();
        for v in &self.data {
            s = s + v.abs_sq();
        }
        s.sqrt()
    }

    /// C = A * B.
    pub fn mul(&self, b: &Self) -> Self {
        assert_eq!(self.cols, b.rows, "shape mismatch in mul");
        let mut c = Mat::zeros(self.rows, b.cols);
        // Column-oriented accumulation: streams columns of A, holds a column
        // of C; the inner axpy vectorizes.
        for j in 0..b.cols {
            let cj = &mut c.data[j * self.rows..(j + 1) * self.rows];
            for k in 0..self.cols {
                let bkj = b[(k, j)];
                if bkj == T::zero() {
                    continue;
                }
                let ak = &self.data[k * self.rows..(k + 1) * self.rows];
                for (ci, &ai) in cj.iter_mut().zip(ak.iter()) {
                    *ci += ai * bkj;
                }
            }
        }
        c
    }

    /// C = A† * B (conjugate transpose on the left).
    pub fn mul_ah_b(&self, b: &Self) -> Self {
        assert_eq!(self.rows, b.rows, "shape mismatch in mul_ah_b");
        let mut c = Mat::zeros(self.cols, b.cols);
        for j in 0..b.cols {
            let bj = b.col(j);
            for i in 0..self.cols {
                let ai = self.col(i);
                let mut acc = T::zero();
                for (&a, &bv) in ai.iter().zip(bj.iter()) {
                    acc += a.conj() * bv;
                }
                c[(i, j)] = acc;
            }
        }
        c
    }

    /// C = A * B† (conjugate transpose on the right).
    pub fn mul_a_bh(&self, b: &Self) -> Self {
        assert_eq!(self.cols, b.cols, "shape mismatch in mul_a_bh");
        let mut c = Mat::zeros(self.rows, b.rows);
        for k in 0..self.cols {
            let ak = self.col(k);
            for j in 0..b.rows {
                let bjk = b[(j, k)].conj();
                if bjk == T::zero() {
                    continue;
                }
                let cj = &mut c.data[j * self.rows..(j + 1) * self.rows];
                for (ci, &ai) in cj.iter_mut().zip(ak.iter()) {
                    *ci += ai * bjk;
                }
            }
        }
        c
    }

    /// y = A * x.
    pub fn mul_vec(&self, x: &[T]) -> Vec<T> {
        assert_eq!(self.cols, x.len());
        let mut y = vec![T::zero(); self.rows];
        for (k, &xk) in x.iter().enumerate() {
            if xk == T::zero() {
                continue;
            }
            let ak = self.col(k);
            for (yi, &ai) in y.iter_mut().zip(ak.iter()) {
                *yi += ai * xk;
            }
        }
        y
    }

    /// y = A† * x.
    pub fn mul_vec_ah(&self, x: &[T]) -> Vec<T> {
        assert_eq!(self.rows, x.len());
        let mut y = vec![T::zero(); self.cols];
        for (j, yj) in y.iter_mut().enumerate() {
            let aj = self.col(j);
            let mut acc = T::zero();
            for (&a, &xv) in aj.iter().zip(x.iter()) {
                acc += a.conj() * xv;
            }
            *yj = acc;
        }
        y
    }
}

impl<T: Field> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[j * self.rows + i]
    }
}

impl<T: Field> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[j * self.rows + i]
    }
}

impl<T: Field> std::fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows.min(8) {
            write!(f, "  ")?;
            for j in 0..self.cols.min(8) {
                write!(f, "{:?} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Square matrix that is Hermitian (complex mode) or symmetric (real mode).
///
/// Constructors symmetrize or check; afterwards the invariant
/// `entries[i][j] == conj(entries[j][i])` holds exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix<F: Field> {
    mat: Mat<F>,
}

impl<F: Field> HermitianMatrix<F> {
    /// Symmetrize `(M + M†)/2` and wrap. This is the lenient builder used on
    /// outputs of floating-point map applications.
    pub fn symmetrize(m: Mat<F>) -> Self {
        assert!(m.is_square(), "Hermitian matrix must be square");
        let n = m.rows();
        let mut out = m;
        let half = <F::Real as Scalar>::half();
        for j in 0..n {
            for i in 0..=j {
                let a = out[(i, j)];
                let b = out[(j, i)].conj();
                let avg = (a + b).scale(half);
                out[(i, j)] = avg;
                out[(j, i)] = avg.conj();
            }
            // Diagonal must be exactly real.
            let d = out[(j, j)];
            out[(j, j)] = F::from_real(d.re());
        }
        HermitianMatrix { mat: out }
    }

    /// Check Hermiticity within `tol * max(1, ||M||_F)` and wrap (exact
    /// symmetrization is applied after the check).
    pub fn try_new(m: Mat<F>, tol: F::Real) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Dimension(format!(
                "Hermitian matrix must be square, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        let scale = m.norm_fro().max(<F::Real as num_traits::One>::one());
        let n = m.rows();
        for j in 0..n {
            for i in 0..=j {
                let diff = m[(i, j)] - m[(j, i)].conj();
                if diff.abs() > tol * scale {
                    return Err(Error::Dimension(format!(
                        "matrix not Hermitian at ({i},{j}): asymmetry {:e}",
                        diff.abs().to_f64()
                    )));
                }
            }
        }
        Ok(Self::symmetrize(m))
    }

    pub fn zeros(n: usize) -> Self {
        HermitianMatrix {
            mat: Mat::zeros(n, n),
        }
    }

    pub fn identity(n: usize) -> Self {
        HermitianMatrix {
            mat: Mat::identity(n),
        }
    }

    /// Identity scaled by a real factor.
    pub fn scaled_identity(n: usize, s: F::Real) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::from_real(s);
        }
        HermitianMatrix { mat: m }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    #[inline]
    pub fn mat(&self) -> &Mat<F> {
        &self.mat
    }

    pub fn into_mat(self) -> Mat<F> {
        self.mat
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> F {
        self.mat[(i, j)]
    }

    /// Set entry (i, j) and its mirror (j, i) simultaneously.
    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.mat[(i, j)] = v;
        self.mat[(j, i)] = v.conj();
        if i == j {
            self.mat[(i, i)] = F::from_real(v.re());
        }
    }

    pub fn trace(&self) -> F::Real {
        self.mat.trace().re()
    }

    pub fn norm_fro(&self) -> F::Real {
        self.mat.norm_fro()
    }

    pub fn scale(&self, s: F::Real) -> Self {
        HermitianMatrix {
            mat: self.mat.scale(s),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        HermitianMatrix {
            mat: self.mat.add(&other.mat),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        HermitianMatrix {
            mat: self.mat.sub(&other.mat),
        }
    }

    /// Rank-one Hermitian matrix `v v†` scaled by `s`.
    pub fn outer(v: &[F], s: F::Real) -> Self {
        let n = v.len();
        let mut m = Mat::zeros(n, n);
        for j in 0..n {
            let vjc = v[j].conj();
            for i in 0..n {
                m[(i, j)] = (v[i] * vjc).scale(s);
            }
        }
        HermitianMatrix::symmetrize(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex;

    type C = Complex<f64>;

    #[test]
    fn mul_small() {
        let a = Mat::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]);
        let b = Mat::from_rows(&[vec![5.0, 6.0], vec![7.0, 8.0]]);
        let c = a.mul(&b);
        assert_eq!(c[(0, 0)], 19.0);
        assert_eq!(c[(0, 1)], 22.0);
        assert_eq!(c[(1, 0)], 43.0);
        assert_eq!(c[(1, 1)], 50.0);
    }

    #[test]
    fn dagger_and_ah_b() {
        let a = Mat::from_rows(&[
            vec![C::new(1.0, 1.0), C::new(0.0, 2.0)],
            vec![C::new(3.0, 0.0), C::new(1.0, -1.0)],
        ]);
        let ad = a.dagger();
        assert_eq!(ad[(0, 0)], C::new(1.0, -1.0));
        assert_eq!(ad[(1, 0)], C::new(0.0, -2.0));
        let b = Mat::identity(2);
        let c = a.mul_ah_b(&b);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(c[(i, j)], ad[(i, j)]);
            }
        }
        let c2 = b.mul_a_bh(&a);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(c2[(i, j)], ad[(i, j)]);
            }
        }
    }

    #[test]
    fn hermitian_guard() {
        let good = Mat::from_rows(&[
            vec![C::new(1.0, 0.0), C::new(0.0, 1.0)],
            vec![C::new(0.0, -1.0), C::new(2.0, 0.0)],
        ]);
        assert!(HermitianMatrix::try_new(good, 1e-12).is_ok());

        let bad = Mat::from_rows(&[
            vec![C::new(1.0, 0.0), C::new(0.5, 0.0)],
            vec![C::new(0.0, 0.0), C::new(2.0, 0.0)],
        ]);
        assert!(HermitianMatrix::try_new(bad, 1e-12).is_err());

        let rect: Mat<f64> = Mat::zeros(2, 3);
        assert!(HermitianMatrix::try_new(rect, 1e-12).is_err());
    }

    #[test]
    fn symmetrize_forces_real_diagonal() {
        let m = Mat::from_rows(&[
            vec![C::new(1.0, 1e-17), C::new(0.3, 0.4)],
            vec![C::new(0.3, -0.4), C::new(2.0, -1e-17)],
        ]);
        let h = HermitianMatrix::symmetrize(m);
        assert_eq!(h.get(0, 0).im, 0.0);
        assert_eq!(h.get(1, 1).im, 0.0);
        assert_eq!(h.get(0, 1), h.get(1, 0).conj());
    }
}
