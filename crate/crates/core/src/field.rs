//! Field abstraction over matrix entries.
//!
//! The library treats real symmetric and complex Hermitian matrices
//! uniformly: a `Field` is either a real scalar (real mode) or a complex
//! number over one (complex mode). Real mode is a genuine first-class
//! citizen rather than complex storage with zero imaginary parts, which is
//! what makes the real-symmetrization speedup possible.

use num_complex::Complex;
use num_traits::{NumAssign, Zero};
use std::fmt::Debug;

use crate::scalar::Scalar;

/// Matrix entry: real scalar or complex number over a real scalar.
pub trait Field: Copy + NumAssign + Zero + PartialEq + Debug + Send + Sync + 'static {
    type Real: Scalar;

    const IS_COMPLEX: bool;

    fn conj(self) -> Self;
    fn re(self) -> Self::Real;
    fn im(self) -> Self::Real;
    /// Build an entry from parts. In real mode the imaginary part must be
    /// zero; callers that may produce one should symmetrize first.
    fn from_parts(re: Self::Real, im: Self::Real) -> Self;
    fn from_real(re: Self::Real) -> Self;
    fn scale(self, s: Self::Real) -> Self;
    fn abs_sq(self) -> Self::Real;

    #[inline]
    fn abs(self) -> Self::Real {
        self.abs_sq().sqrt()
    }

    #[inline]
    fn mul_conj(self, other: Self) -> Self {
        self * other.conj()
    }
}

macro_rules! impl_real_field {
    ($t:ty) => {
        impl Field for $t {
            type Real = $t;
            const IS_COMPLEX: bool = false;

            #[inline]
            fn conj(self) -> Self {
                self
            }
            #[inline]
            fn re(self) -> Self {
                self
            }
            #[inline]
            fn im(self) -> Self {
                <$t as num_traits::Zero>::zero()
            }
            #[inline]
            fn from_parts(re: Self, im: Self) -> Self {
                debug_assert!(im == <$t as num_traits::Zero>::zero());
                let _ = im;
                re
            }
            #[inline]
            fn from_real(re: Self) -> Self {
                re
            }
            #[inline]
            fn scale(self, s: Self) -> Self {
                self * s
            }
            #[inline]
            fn abs_sq(self) -> Self {
                self * self
            }
        }
    };
}

impl_real_field!(f64);
impl_real_field!(twofloat::TwoFloat);

impl<S: Scalar> Field for Complex<S> {
    type Real = S;
    const IS_COMPLEX: bool = true;

    #[inline]
    fn conj(self) -> Self {
        Complex::new(self.re, -self.im)
    }
    #[inline]
    fn re(self) -> S {
        self.re
    }
    #[inline]
    fn im(self) -> S {
        self.im
    }
    #[inline]
    fn from_parts(re: S, im: S) -> Self {
        Complex::new(re, im)
    }
    #[inline]
    fn from_real(re: S) -> Self {
        Complex::new(re, S::zero())
    }
    #[inline]
    fn scale(self, s: S) -> Self {
        Complex::new(self.re * s, self.im * s)
    }
    #[inline]
    fn abs_sq(self) -> S {
        self.re * self.re + self.im * self.im
    }
}

/// Number of real coordinates a Hermitian `n x n` matrix occupies in the
/// non-redundant vectorization: `n(n+1)/2` in real mode, `n^2` in complex
/// mode (each strict off-diagonal contributes two slots).
#[inline]
pub fn svec_len<F: Field>(n: usize) -> usize {
    if F::IS_COMPLEX {
        n * n
    } else {
        n * (n + 1) / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn svec_lengths() {
        assert_eq!(svec_len::<f64>(3), 6);
        assert_eq!(svec_len::<Complex<f64>>(3), 9);
        assert_eq!(svec_len::<f64>(1), 1);
        assert_eq!(svec_len::<Complex<f64>>(1), 1);
    }

    #[test]
    fn complex_conj_and_abs() {
        let z = Complex::new(3.0f64, -4.0);
        assert_eq!(z.conj(), Complex::new(3.0, 4.0));
        assert_eq!(Field::abs_sq(z), 25.0);
        assert_eq!(Field::abs(z), 5.0);
    }
}
