//! Floating-point support for the numeric oracles.

mod dd;
mod real;
mod roots;

pub use dd::DoubleDouble;
pub use real::Real;
pub use roots::{poly_roots, sort_lex};

use num_complex::{Complex, Complex64};

/// Significand bits actually carried when `requested` bits are asked for.
pub fn effective_precision(requested: u32) -> u32 {
    if requested <= f64::MANTISSA_BITS {
        f64::MANTISSA_BITS
    } else {
        DoubleDouble::MANTISSA_BITS
    }
}

pub fn c_from_f64<T: Real>(z: Complex64) -> Complex<T> {
    Complex::new(T::from_f64(z.re), T::from_f64(z.im))
}

pub fn c_to_f64<T: Real>(z: Complex<T>) -> Complex64 {
    Complex64::new(z.re.to_f64(), z.im.to_f64())
}

pub fn cabs<T: Real>(z: Complex<T>) -> T {
    let (a, b) = (z.re.abs(), z.im.abs());
    let m = a.max(b);
    if m == T::zero() {
        return m;
    }
    let (a, b) = (a / m, b / m);
    m * (a * a + b * b).sqrt()
}

pub fn cdist<T: Real>(a: Complex<T>, b: Complex<T>) -> T {
    cabs(a - b)
}

/// Horner evaluation of an ascending coefficient list.
pub fn eval_poly<T: Real>(coeffs: &[Complex<T>], x: Complex<T>) -> Complex<T> {
    let mut acc = Complex::new(T::zero(), T::zero());
    for c in coeffs.iter().rev() {
        acc = acc * x + *c;
    }
    acc
}

/// Value and first derivative.
pub fn eval_poly_d<T: Real>(coeffs: &[Complex<T>], x: Complex<T>) -> (Complex<T>, Complex<T>) {
    let zero = Complex::new(T::zero(), T::zero());
    let (mut p, mut dp) = (zero, zero);
    for c in coeffs.iter().rev() {
        dp = dp * x + p;
        p = p * x + *c;
    }
    (p, dp)
}

pub fn cpowi<T: Real>(z: Complex<T>, k: u32) -> Complex<T> {
    let mut acc = Complex::new(T::one(), T::zero());
    for _ in 0..k {
        acc = acc * z;
    }
    acc
}

/// All `n` complex `n`-th roots of `w`, seeded in `f64` and polished by Newton steps in `T`.
pub fn nth_roots<T: Real>(w: Complex<T>, n: u32) -> Vec<Complex<T>> {
    let zero = Complex::new(T::zero(), T::zero());
    if w == zero {
        return vec![zero; n as usize];
    }
    let w64 = c_to_f64(w);
    let r = w64.norm().powf(1.0 / n as f64);
    let arg = w64.arg() / n as f64;
    let nt = T::from_f64(n as f64);
    (0..n)
        .map(|k| {
            let th = arg + 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            let mut y: Complex<T> = c_from_f64(Complex64::from_polar(r, th));
            for _ in 0..3 {
                let yn1 = cpowi(y, n - 1);
                y = y - (yn1 * y - w) / (yn1 * Complex::new(nt, T::zero()));
            }
            y
        })
        .collect()
}
