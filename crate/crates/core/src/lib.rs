//! Exact and numeric verification of Belyi maps on genus-0 and genus-1 curves.
//!
//! The algebra is generic over [`scalar::Scalar`]: exact work happens over
//! [`Rational`] or a [`FieldElement`] of a number field, numeric work over
//! `Complex<f32>`, `Complex<f64>` or `Complex<DoubleDouble>`.

pub mod belyi0;
pub mod catalog;
pub mod composer;
pub mod curves;
pub mod error;
pub mod exactnum;
pub mod expr;
pub mod hypergeo;
pub mod isogeny;
pub mod monodromy;
pub mod numeric;
pub mod polyalg;
pub mod report;
pub mod scalar;

pub use belyi0::{BelyiValue, Genus0BelyiMap, Passport};
pub use error::{Error, Result};
pub use exactnum::{Field, FieldElement, NumberField, Rational};
pub use numeric::{DoubleDouble, Real};
pub use polyalg::{Polynomial, RationalFunction};
pub use report::{Check, CheckStatus, VerificationReport};
pub use scalar::Scalar;

pub type QPoly = Polynomial<Rational>;
pub type QRatFun = RationalFunction<Rational>;
pub type KPoly = Polynomial<FieldElement>;
pub type KRatFun = RationalFunction<FieldElement>;
pub type CPoly<T> = Polynomial<num_complex::Complex<T>>;
pub type C64Poly = CPoly<f64>;
pub type C32Poly = CPoly<f32>;
pub type DdPoly = CPoly<DoubleDouble>;
