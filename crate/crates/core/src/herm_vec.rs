//! Canonical real vectorization of Hermitian matrices and matrix
//! representations of the linear maps acting on them.
//!
//! The layout is a stable wire convention, also used by the problem-file
//! serializer:
//!
//! * `svec` walks the upper triangle in column-major order.
//! * Strict off-diagonals are scaled by `sqrt(2)` so that
//!   `<X, Y> = <svec(X), svec(Y)>`.
//! * In complex mode each strict off-diagonal occupies two consecutive real
//!   slots holding `(sqrt(2)*Re, -sqrt(2)*Im)` — note the minus sign on the
//!   imaginary part.
//!
//! Lengths: `n(n+1)/2` in real mode, `n^2` in complex mode.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{svec_len, Field};
use crate::mat::{HermitianMatrix, Mat};
use crate::scalar::Scalar;

/// Matrix of a linear map acting on svec coordinates (dense, real).
pub type LinearMapMatrix<S> = Mat<S>;

/// Field mode tag carried by vectorized data (the real vector alone cannot
/// always distinguish the two layouts).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldMode {
    Real,
    Complex,
}

impl FieldMode {
    pub fn of<F: Field>() -> Self {
        if F::IS_COMPLEX {
            FieldMode::Complex
        } else {
            FieldMode::Real
        }
    }

    pub fn svec_len(self, n: usize) -> usize {
        match self {
            FieldMode::Real => n * (n + 1) / 2,
            FieldMode::Complex => n * n,
        }
    }
}

/// Non-redundant real vectorization of a Hermitian matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SVec<S> {
    pub data: Vec<S>,
    pub side_dim: usize,
    pub field_mode: FieldMode,
}

/// Identity of a single svec slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    /// Diagonal entry (i, i).
    Diag(usize),
    /// sqrt(2) * Re of entry (i, j), i < j.
    OffRe(usize, usize),
    /// -sqrt(2) * Im of entry (i, j), i < j (complex mode only).
    OffIm(usize, usize),
}

/// Enumerate the slots of an `n x n` Hermitian matrix in layout order.
pub fn slots<F: Field>(n: usize) -> Vec<Slot> {
    let mut out = Vec::with_capacity(svec_len::<F>(n));
    for j in 0..n {
        for i in 0..j {
            out.push(Slot::OffRe(i, j));
            if F::IS_COMPLEX {
                out.push(Slot::OffIm(i, j));
            }
        }
        out.push(Slot::Diag(j));
    }
    out
}

/// The Hermitian basis matrix `B_a` of a slot, satisfying
/// `svec(B_a) = e_a` and `<B_a, B_b> = delta_ab`.
pub fn slot_basis_matrix<F: Field>(n: usize, slot: Slot) -> HermitianMatrix<F> {
    let mut m = Mat::zeros(n, n);
    let inv_sqrt2 = <F::Real as Scalar>::two().sqrt().recip();
    match slot {
        Slot::Diag(i) => {
            m[(i, i)] = F::from_real(<F::Real as num_traits::One>::one());
        }
        Slot::OffRe(i, j) => {
            m[(i, j)] = F::from_real(inv_sqrt2);
            m[(j, i)] = F::from_real(inv_sqrt2);
        }
        Slot::OffIm(i, j) => {
            debug_assert!(F::IS_COMPLEX);
            // Coordinate s contributes X_ij = -i s / sqrt(2).
            m[(i, j)] = F::from_parts(F::Real::zero(), -inv_sqrt2);
            m[(j, i)] = F::from_parts(F::Real::zero(), inv_sqrt2);
        }
    }
    HermitianMatrix::symmetrize(m)
}

/// Write `svec(x)` into `out` (length must match).
pub fn svec_into<F: Field>(x: &HermitianMatrix<F>, out: &mut [S_of<F>]) {
    let n = x.dim();
    assert_eq!(out.len(), svec_len::<F>(n), "svec output length mismatch");
    let sqrt2 = <F::Real as Scalar>::two().sqrt();
    let mut k = 0;
    for j in 0..n {
        for i in 0..j {
            let v = x.get(i, j);
            out[k] = v.re() * sqrt2;
            k += 1;
            if F::IS_COMPLEX {
                out[k] = -(v.im() * sqrt2);
                k += 1;
            }
        }
        out[k] = x.get(j, j).re();
        k += 1;
    }
}

type S_of<F> = <F as Field>::Real;

/// Non-redundant vectorization of a Hermitian matrix.
pub fn svec<F: Field>(x: &HermitianMatrix<F>) -> SVec<F::Real> {
    let n = x.dim();
    let mut data = vec![F::Real::zero(); svec_len::<F>(n)];
    svec_into(x, &mut data);
    SVec {
        data,
        side_dim: n,
        field_mode: FieldMode::of::<F>(),
    }
}

/// Rebuild a Hermitian matrix from svec coordinates in a slice.
pub fn smat_from_slice<F: Field>(v: &[F::Real], n: usize) -> HermitianMatrix<F> {
    assert_eq!(v.len(), svec_len::<F>(n), "smat input length mismatch");
    let inv_sqrt2 = <F::Real as Scalar>::two().sqrt().recip();
    let mut m = Mat::zeros(n, n);
    let mut k = 0;
    for j in 0..n {
        for i in 0..j {
            let re = v[k] * inv_sqrt2;
            k += 1;
            let im = if F::IS_COMPLEX {
                let s = v[k];
                k += 1;
                -(s * inv_sqrt2)
            } else {
                F::Real::zero()
            };
            let val = F::from_parts(re, im);
            m[(i, j)] = val;
            m[(j, i)] = val.conj();
        }
        m[(j, j)] = F::from_real(v[k]);
        k += 1;
    }
    HermitianMatrix::symmetrize(m)
}

/// Inverse of [`svec`]. Fails if the length is not realizable for the
/// vector's field mode.
pub fn smat<F: Field>(v: &SVec<F::Real>) -> Result<HermitianMatrix<F>> {
    if v.field_mode != FieldMode::of::<F>() {
        return Err(Error::Dimension(
            "svec field mode does not match requested matrix field".into(),
        ));
    }
    let n = v.side_dim;
    if v.data.len() != svec_len::<F>(n) {
        return Err(Error::Dimension(format!(
            "svec length {} not realizable for side dimension {} in this mode",
            v.data.len(),
            n
        )));
    }
    Ok(smat_from_slice::<F>(&v.data, n))
}

/// Side dimension whose svec length equals `len`, if any.
pub fn side_dim_for_len(mode: FieldMode, len: usize) -> Result<usize> {
    for n in 1..=len {
        let l = mode.svec_len(n);
        if l == len {
            return Ok(n);
        }
        if l > len {
            break;
        }
    }
    Err(Error::Dimension(format!(
        "length {len} is not a valid svec length for {mode:?} mode"
    )))
}

/// Frobenius inner product `tr(X Y)` of two Hermitian matrices. Equals the
/// Euclidean dot product of their svec coordinates.
pub fn inner<F: Field>(x: &HermitianMatrix<F>, y: &HermitianMatrix<F>) -> Result<F::Real> {
    if x.dim() != y.dim() {
        return Err(Error::Dimension(format!(
            "inner: dimension mismatch {} vs {}",
            x.dim(),
            y.dim()
        )));
    }
    let n = x.dim();
    let mut acc = F::Real::zero();
    for j in 0..n {
        acc = acc + x.get(j, j).re() * y.get(j, j).re();
        for i in 0..j {
            // tr(XY) picks up X_ij Y_ji + X_ji Y_ij = 2 Re(X_ij conj(Y_ij)).
            let p = x.get(i, j).mul_conj(y.get(i, j));
            acc = acc + p.re() + p.re();
        }
    }
    Ok(acc)
}

/// Matrix representation of `X -> K X K†` on svec coordinates.
///
/// Computed column-by-column from the rank-two images of the svec basis
/// matrices, so memory scales with the output size rather than with the
/// Kronecker product.
pub fn skron<F: Field>(k: &Mat<F>) -> LinearMapMatrix<F::Real> {
    let d_in = k.cols();
    let d_out = k.rows();
    let rows = svec_len::<F>(d_out);
    let cols = svec_len::<F>(d_in);
    let mut out = Mat::zeros(rows, cols);
    let sqrt2 = <F::Real as Scalar>::two().sqrt();
    let inv_sqrt2 = sqrt2.recip();

    // Scratch for one image K B_a K†.
    let mut img: Mat<F> = Mat::zeros(d_out, d_out);

    for (a, slot) in slots::<F>(d_in).into_iter().enumerate() {
        for v in img.data_mut().iter_mut() {
            *v = F::zero();
        }
        match slot {
            Slot::Diag(i) => {
                // K e_i e_i† K† = k_i k_i†
                let ki = k.col(i);
                rank_one_acc(&mut img, ki, ki, F::from_real(<F::Real as num_traits::One>::one()));
            }
            Slot::OffRe(i, j) => {
                // (k_i k_j† + k_j k_i†) / sqrt(2)
                let s = F::from_real(inv_sqrt2);
                let (ki, kj) = (k.col(i), k.col(j));
                rank_one_acc(&mut img, ki, kj, s);
                rank_one_acc(&mut img, kj, ki, s);
            }
            Slot::OffIm(i, j) => {
                // (-i k_i k_j† + i k_j k_i†) / sqrt(2)
                let minus_i = F::from_parts(F::Real::zero(), -inv_sqrt2);
                let plus_i = F::from_parts(F::Real::zero(), inv_sqrt2);
                let (ki, kj) = (k.col(i), k.col(j));
                rank_one_acc(&mut img, ki, kj, minus_i);
                rank_one_acc(&mut img, kj, ki, plus_i);
            }
        }
        let h = HermitianMatrix::symmetrize(img.clone());
        svec_into(&h, out.col_mut(a));
    }
    out
}

/// img += s * u v†
fn rank_one_acc<F: Field>(img: &mut Mat<F>, u: &[F], v: &[F], s: F) {
    let n = u.len();
    for j in 0..n {
        let c = s * v[j].conj();
        if c == F::zero() {
            continue;
        }
        let col = img.col_mut(j);
        for (dst, &ui) in col.iter_mut().zip(u.iter()) {
            *dst += ui * c;
        }
    }
}

/// Completely positive map given by a list of rectangular Kraus operators.
#[derive(Clone, Debug)]
pub struct KrausMap<F: Field> {
    ops: Vec<Mat<F>>,
    dim_in: usize,
    dim_out: usize,
}

impl<F: Field> KrausMap<F> {
    pub fn new(ops: Vec<Mat<F>>) -> Result<Self> {
        if ops.is_empty() {
            return Err(Error::Dimension("Kraus map needs at least one operator".into()));
        }
        let dim_out = ops[0].rows();
        let dim_in = ops[0].cols();
        for (k, op) in ops.iter().enumerate() {
            if op.rows() != dim_out || op.cols() != dim_in {
                return Err(Error::Dimension(format!(
                    "Kraus operator {k} has shape {}x{}, expected {}x{}",
                    op.rows(),
                    op.cols(),
                    dim_out,
                    dim_in
                )));
            }
        }
        Ok(KrausMap { ops, dim_in, dim_out })
    }

    pub fn identity(n: usize) -> Self {
        KrausMap {
            ops: vec![Mat::identity(n)],
            dim_in: n,
            dim_out: n,
        }
    }

    #[inline]
    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    #[inline]
    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    #[inline]
    pub fn ops(&self) -> &[Mat<F>] {
        &self.ops
    }

    /// Forward application: sum_i K_i X K_i†.
    pub fn apply(&self, x: &HermitianMatrix<F>) -> Result<HermitianMatrix<F>> {
        if x.dim() != self.dim_in {
            return Err(Error::Dimension(format!(
                "kraus apply: input dim {} expected {}",
                x.dim(),
                self.dim_in
            )));
        }
        let mut acc: Mat<F> = Mat::zeros(self.dim_out, self.dim_out);
        for k in &self.ops {
            let kx = k.mul(x.mat());
            acc = acc.add(&kx.mul_a_bh(k));
        }
        Ok(HermitianMatrix::symmetrize(acc))
    }

    /// Adjoint application: sum_i K_i† Y K_i.
    pub fn apply_adjoint(&self, y: &HermitianMatrix<F>) -> Result<HermitianMatrix<F>> {
        if y.dim() != self.dim_out {
            return Err(Error::Dimension(format!(
                "kraus adjoint apply: input dim {} expected {}",
                y.dim(),
                self.dim_out
            )));
        }
        let mut acc: Mat<F> = Mat::zeros(self.dim_in, self.dim_in);
        for k in &self.ops {
            let ky = k.mul_ah_b(y.mat());
            acc = acc.add(&ky.mul(k));
        }
        Ok(HermitianMatrix::symmetrize(acc))
    }

    /// Matrix of the map on svec coordinates: sum_i skron(K_i).
    pub fn svec_matrix(&self) -> LinearMapMatrix<F::Real> {
        let mut acc = skron(&self.ops[0]);
        for k in &self.ops[1..] {
            acc = acc.add(&skron(k));
        }
        acc
    }
}

/// Forward or adjoint Kraus application behind one entry point.
pub fn kraus_apply<F: Field>(
    map: &KrausMap<F>,
    x: &HermitianMatrix<F>,
    adjoint: bool,
) -> Result<HermitianMatrix<F>> {
    if adjoint {
        map.apply_adjoint(x)
    } else {
        map.apply(x)
    }
}
