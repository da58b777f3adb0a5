//! Coefficient rings for the polynomial layer.
//!
//! [`Scalar`] abstracts over exact fields ([`Rational`], [`FieldElement`])
//! and floating complex numbers (`Complex<T>` for any [`Real`]). Elements of a
//! number field need their field to build constants, so every scalar type
//! carries a `Context` from which zeros and ones are made.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::exactnum::Rational;
use crate::numeric::Real;

pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    type Context: Clone + Debug + PartialEq + Send + Sync;

    fn context(&self) -> Self::Context;
    fn zero_in(ctx: &Self::Context) -> Self;
    fn one_in(ctx: &Self::Context) -> Self;
    fn from_rational_in(ctx: &Self::Context, r: &Rational) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn inv_elem(&self) -> Option<Self>;

    fn is_one_elem(&self) -> bool {
        *self == Self::one_in(&self.context())
    }

    fn from_int_in(ctx: &Self::Context, n: i64) -> Self {
        Self::from_rational_in(ctx, &Rational::from_integer(n.into()))
    }
}

impl Scalar for Rational {
    type Context = ();

    fn context(&self) {}
    fn zero_in(_: &()) -> Self {
        Rational::zero()
    }
    fn one_in(_: &()) -> Self {
        Rational::one()
    }
    fn from_rational_in(_: &(), r: &Rational) -> Self {
        r.clone()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn inv_elem(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl<T: Real> Scalar for Complex<T> {
    type Context = ();

    fn context(&self) {}
    fn zero_in(_: &()) -> Self {
        Complex::new(T::zero(), T::zero())
    }
    fn one_in(_: &()) -> Self {
        Complex::new(T::one(), T::zero())
    }
    fn from_rational_in(_: &(), r: &Rational) -> Self {
        Complex::new(T::from_rational(r), T::zero())
    }
    fn is_zero_elem(&self) -> bool {
        self.re == T::zero() && self.im == T::zero()
    }
    fn inv_elem(&self) -> Option<Self> {
        if self.is_zero_elem() {
            None
        } else {
            Some(Complex::new(T::one(), T::zero()) / *self)
        }
    }
}
