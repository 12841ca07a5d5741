//! Four-component Dirac spinor amplitudes at a point.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::mat4::Mat4;
use crate::scalar::{czero, Real, C};

/// A 4-component complex spinor. Not required to be normalized.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spinor<R: Real> {
    a: [C<R>; 4],
}

impl<R: Real> Spinor<R> {
    pub fn new(a: [C<R>; 4]) -> Self {
        Spinor { a }
    }

    pub fn zero() -> Self {
        Spinor { a: [czero(); 4] }
    }

    /// Basis spinor with a single unit component.
    pub fn basis(j: usize) -> Self {
        assert!(j < 4, "basis spinor index must be 0..3");
        let mut s = Self::zero();
        s.a[j] = C::new(R::one(), R::zero());
        s
    }

    pub fn conj(&self) -> Self {
        Spinor {
            a: [
                self.a[0].conj(),
                self.a[1].conj(),
                self.a[2].conj(),
                self.a[3].conj(),
            ],
        }
    }

    pub fn scale(&self, s: C<R>) -> Self {
        Spinor {
            a: [self.a[0] * s, self.a[1] * s, self.a[2] * s, self.a[3] * s],
        }
    }

    pub fn norm_sqr(&self) -> R {
        self.a
            .iter()
            .map(|z| z.norm_sqr())
            .fold(R::zero(), |x, y| x + y)
    }

    pub fn norm(&self) -> R {
        self.norm_sqr().sqrt()
    }

    pub fn max_diff(&self, other: &Self) -> R {
        (0..4)
            .map(|k| (self.a[k] - other.a[k]).norm())
            .fold(R::zero(), |x, y| x.max(y))
    }

    pub fn components(&self) -> &[C<R>; 4] {
        &self.a
    }
}

impl<R: Real> Index<usize> for Spinor<R> {
    type Output = C<R>;
    fn index(&self, k: usize) -> &C<R> {
        &self.a[k]
    }
}

impl<R: Real> IndexMut<usize> for Spinor<R> {
    fn index_mut(&mut self, k: usize) -> &mut C<R> {
        &mut self.a[k]
    }
}

impl<R: Real> Add for Spinor<R> {
    type Output = Spinor<R>;
    fn add(self, rhs: Self) -> Self {
        let mut s = self;
        for k in 0..4 {
            s.a[k] += rhs.a[k];
        }
        s
    }
}

impl<R: Real> Sub for Spinor<R> {
    type Output = Spinor<R>;
    fn sub(self, rhs: Self) -> Self {
        let mut s = self;
        for k in 0..4 {
            s.a[k] -= rhs.a[k];
        }
        s
    }
}

impl<R: Real> Neg for Spinor<R> {
    type Output = Spinor<R>;
    fn neg(self) -> Self {
        self.scale(C::new(-R::one(), R::zero()))
    }
}

/// Matrix action on a spinor.
impl<R: Real> Mul<Spinor<R>> for Mat4<R> {
    type Output = Spinor<R>;
    fn mul(self, rhs: Spinor<R>) -> Spinor<R> {
        let mut out = Spinor::zero();
        for r in 0..4 {
            let mut acc = czero();
            for c in 0..4 {
                acc += self[(r, c)] * rhs[c];
            }
            out[r] = acc;
        }
        out
    }
}
