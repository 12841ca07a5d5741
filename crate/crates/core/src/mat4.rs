//! Dense 4x4 complex matrices.
//!
//! Everything in the gamma algebra and the spinor representation of the
//! Lorentz group lives in this one fixed dimension, so a small fixed-size
//! type is used instead of a general matrix library.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::scalar::{czero, Real, C};

/// A 4x4 complex matrix.
#[derive(Clone, Copy, PartialEq)]
pub struct Mat4<R: Real> {
    e: [[C<R>; 4]; 4],
}

impl<R: Real> std::fmt::Debug for Mat4<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat4 [")?;
        for r in 0..4 {
            write!(f, "  ")?;
            for c in 0..4 {
                write!(f, "{:?} ", self.e[r][c])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl<R: Real> Mat4<R> {
    pub fn zero() -> Self {
        Mat4 {
            e: [[czero(); 4]; 4],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for k in 0..4 {
            m.e[k][k] = C::new(R::one(), R::zero());
        }
        m
    }

    pub fn from_rows(rows: [[C<R>; 4]; 4]) -> Self {
        Mat4 { e: rows }
    }

    /// Diagonal matrix from four complex entries.
    pub fn diag(d: [C<R>; 4]) -> Self {
        let mut m = Self::zero();
        for k in 0..4 {
            m.e[k][k] = d[k];
        }
        m
    }

    /// Block matrix from four 2x2 complex blocks [[a, b], [c, d]].
    pub fn from_blocks(
        a: [[C<R>; 2]; 2],
        b: [[C<R>; 2]; 2],
        c: [[C<R>; 2]; 2],
        d: [[C<R>; 2]; 2],
    ) -> Self {
        let mut m = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                m.e[i][j] = a[i][j];
                m.e[i][j + 2] = b[i][j];
                m.e[i + 2][j] = c[i][j];
                m.e[i + 2][j + 2] = d[i][j];
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero();
        for r in 0..4 {
            for c in 0..4 {
                m.e[r][c] = self.e[c][r];
            }
        }
        m
    }

    pub fn conj(&self) -> Self {
        let mut m = *self;
        for r in 0..4 {
            for c in 0..4 {
                m.e[r][c] = m.e[r][c].conj();
            }
        }
        m
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        self.transpose().conj()
    }

    pub fn scale(&self, s: C<R>) -> Self {
        let mut m = *self;
        for r in 0..4 {
            for c in 0..4 {
                m.e[r][c] *= s;
            }
        }
        m
    }

    pub fn trace(&self) -> C<R> {
        self.e[0][0] + self.e[1][1] + self.e[2][2] + self.e[3][3]
    }

    /// Determinant by cofactor expansion.
    pub fn det(&self) -> C<R> {
        let m = &self.e;
        let det3 = |r: [usize; 3], c: [usize; 3]| -> C<R> {
            m[r[0]][c[0]] * (m[r[1]][c[1]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[1]])
                - m[r[0]][c[1]] * (m[r[1]][c[0]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[0]])
                + m[r[0]][c[2]] * (m[r[1]][c[0]] * m[r[2]][c[1]] - m[r[1]][c[1]] * m[r[2]][c[0]])
        };
        let rows = [1, 2, 3];
        let mut det = czero();
        let mut sign = C::new(R::one(), R::zero());
        for k in 0..4 {
            let cols: [usize; 3] = match k {
                0 => [1, 2, 3],
                1 => [0, 2, 3],
                2 => [0, 1, 3],
                _ => [0, 1, 2],
            };
            det += sign * m[0][k] * det3(rows, cols);
            sign = -sign;
        }
        det
    }

    /// Largest entry magnitude.
    pub fn max_norm(&self) -> R {
        let mut m = R::zero();
        for r in 0..4 {
            for c in 0..4 {
                m = m.max(self.e[r][c].norm());
            }
        }
        m
    }

    /// Largest entrywise difference to another matrix.
    pub fn max_diff(&self, other: &Self) -> R {
        (*self - *other).max_norm()
    }

    pub fn approx_eq(&self, other: &Self, tol: R) -> bool {
        self.max_diff(other) <= tol
    }

    /// Matrix exponential by scaling and squaring with a Taylor series.
    ///
    /// The argument is halved until its max-norm is below 1/2, the series is
    /// summed until terms fall below relative 1e-16, and the result is squared
    /// back up. For the 4x4 matrices used here this reaches relative accuracy
    /// of about 1e-12 or better.
    pub fn exp(&self) -> Self {
        let half = R::real(0.5);
        let mut squarings = 0u32;
        let mut norm = self.max_norm();
        let mut scaled = *self;
        while norm > half && squarings < 64 {
            scaled = scaled.scale(C::new(half, R::zero()));
            norm *= half;
            squarings += 1;
        }
        let mut result = Self::identity();
        let mut term = Self::identity();
        let floor = R::real(1e-16);
        for k in 1..64 {
            let inv_k = C::new(R::one() / R::real(k as f64), R::zero());
            term = (term * scaled).scale(inv_k);
            result = result + term;
            if term.max_norm() <= floor * result.max_norm() {
                break;
            }
        }
        for _ in 0..squarings {
            result = result * result;
        }
        result
    }
}

impl<R: Real> Index<(usize, usize)> for Mat4<R> {
    type Output = C<R>;
    fn index(&self, (r, c): (usize, usize)) -> &C<R> {
        &self.e[r][c]
    }
}

impl<R: Real> IndexMut<(usize, usize)> for Mat4<R> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C<R> {
        &mut self.e[r][c]
    }
}

impl<R: Real> Add for Mat4<R> {
    type Output = Mat4<R>;
    fn add(self, rhs: Self) -> Self {
        let mut m = self;
        for r in 0..4 {
            for c in 0..4 {
                m.e[r][c] += rhs.e[r][c];
            }
        }
        m
    }
}

impl<R: Real> Sub for Mat4<R> {
    type Output = Mat4<R>;
    fn sub(self, rhs: Self) -> Self {
        let mut m = self;
        for r in 0..4 {
            for c in 0..4 {
                m.e[r][c] -= rhs.e[r][c];
            }
        }
        m
    }
}

impl<R: Real> Neg for Mat4<R> {
    type Output = Mat4<R>;
    fn neg(self) -> Self {
        self.scale(C::new(-R::one(), R::zero()))
    }
}

impl<R: Real> Mul for Mat4<R> {
    type Output = Mat4<R>;
    fn mul(self, rhs: Self) -> Self {
        let mut m = Mat4::zero();
        for r in 0..4 {
            for k in 0..4 {
                let a = self.e[r][k];
                if a.norm_sqr() == R::zero() {
                    continue;
                }
                for c in 0..4 {
                    m.e[r][c] += a * rhs.e[k][c];
                }
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::c;

    type M = Mat4<f64>;

    #[test]
    fn exp_of_zero_is_identity() {
        assert!(M::zero().exp().approx_eq(&M::identity(), 1e-15));
    }

    #[test]
    fn exp_of_diagonal() {
        let d = M::diag([c(1.0, 0.0), c(0.0, 1.0), c(-2.0, 0.5), c(0.0, 0.0)]);
        let e = d.exp();
        let expect = M::diag([
            c(1.0f64.exp(), 0.0),
            c(1.0f64.cos(), 1.0f64.sin()),
            c(
                (-2.0f64).exp() * 0.5f64.cos(),
                (-2.0f64).exp() * 0.5f64.sin(),
            ),
            c(1.0, 0.0),
        ]);
        assert!(e.approx_eq(&expect, 1e-13));
    }

    #[test]
    fn det_of_identity_and_swap() {
        assert!((M::identity().det() - c(1.0, 0.0)).norm() < 1e-15);
        let mut swap = M::identity();
        swap[(0, 0)] = c(0.0, 0.0);
        swap[(1, 1)] = c(0.0, 0.0);
        swap[(0, 1)] = c(1.0, 0.0);
        swap[(1, 0)] = c(1.0, 0.0);
        assert!((swap.det() + c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn exp_works_in_f32_too() {
        let d = Mat4::<f32>::diag([
            C::new(0.5f32, 0.0),
            C::new(0.0, 0.25),
            C::new(-0.5, 0.0),
            C::new(0.0, 0.0),
        ]);
        let e = d.exp();
        assert!((e[(0, 0)].re - 0.5f32.exp()).abs() < 1e-5);
    }
}
