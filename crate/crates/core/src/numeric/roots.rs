use std::cmp::Ordering;

use num_complex::{Complex, Complex64};

use super::{c_from_f64, c_to_f64, cabs, eval_poly_d, Real};
use crate::error::{Error, Result};

fn aberth_pass<T: Real>(coeffs: &[Complex<T>], z: &mut [Complex<T>], tol: T, max_iter: usize) -> bool {
    let one = Complex::new(T::one(), T::zero());
    for _ in 0..max_iter {
        let mut converged = true;
        for i in 0..z.len() {
            let (p, dp) = eval_poly_d(coeffs, z[i]);
            if p.re == T::zero() && p.im == T::zero() {
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex::new(T::zero(), T::zero());
            for j in 0..z.len() {
                if j != i {
                    s = s + one / (z[i] - z[j]);
                }
            }
            let w = ratio / (one - ratio * s);
            if !(w.re.to_f64().is_finite() && w.im.to_f64().is_finite()) {
                continue;
            }
            z[i] = z[i] - w;
            if cabs(w) > tol * (T::one() + cabs(z[i])) {
                converged = false;
            }
        }
        if converged {
            return true;
        }
    }
    false
}

/// All complex roots (with multiplicity) of an ascending coefficient list,
/// by Aberth–Ehrlich iteration: first in `f64`, then polished in `T`.
pub fn poly_roots<T: Real>(coeffs: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
    let zero = Complex::new(T::zero(), T::zero());
    let mut c: Vec<Complex<T>> = coeffs.to_vec();
    while c.last() == Some(&zero) {
        c.pop();
    }
    if c.is_empty() {
        return Err(Error::InvalidInput("roots of the zero polynomial".into()));
    }
    let lead_zeros = c.iter().take_while(|x| **x == zero).count();
    let mut roots = vec![zero; lead_zeros];
    let c = c.split_off(lead_zeros);
    let n = c.len() - 1;
    if n == 0 {
        return Ok(roots);
    }
    if n == 1 {
        roots.push(-c[0] / c[1]);
        return Ok(roots);
    }

    let c64: Vec<Complex64> = c.iter().map(|x| c_to_f64(*x)).collect();
    let lead = c64[n].norm();
    let radius = (1..=n)
        .map(|k| (c64[n - k].norm() / lead).powf(1.0 / k as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3);
    let mut z64: Vec<Complex64> = (0..n)
        .map(|k| {
            let th = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, th)
        })
        .collect();
    aberth_pass(&c64, &mut z64, 1e-15, 2000);

    let mut z: Vec<Complex<T>> = z64.into_iter().map(c_from_f64).collect();
    if T::MANTISSA_BITS > f64::MANTISSA_BITS {
        aberth_pass(&c, &mut z, T::epsilon() * T::from_f64(8.0), 200);
    }
    if z.iter().any(|r| !(r.re.to_f64().is_finite() && r.im.to_f64().is_finite())) {
        return Err(Error::Precision("root iteration diverged".into()));
    }
    roots.extend(z);
    Ok(roots)
}

/// Lexicographic (real, imaginary) order; real parts within `tol` (relative) count as equal.
pub fn sort_lex<T: Real>(v: &mut [Complex<T>], tol: f64) {
    v.sort_by(|a, b| {
        let (ar, br) = (a.re.to_f64(), b.re.to_f64());
        let scale = 1.0 + ar.abs().max(br.abs());
        if (ar - br).abs() <= tol * scale {
            a.im.to_f64().partial_cmp(&b.im.to_f64()).unwrap_or(Ordering::Equal)
        } else {
            ar.partial_cmp(&br).unwrap_or(Ordering::Equal)
        }
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{eval_poly, DoubleDouble};

    fn cx(v: &[f64]) -> Vec<Complex64> {
        v.iter().map(|&x| Complex64::new(x, 0.0)).collect()
    }

    #[test]
    fn roots_of_unity() {
        let mut r = poly_roots(&cx(&[-1.0, 0.0, 0.0, 0.0, 1.0])).unwrap();
        sort_lex(&mut r, 1e-9);
        let expect = [(-1.0, 0.0), (0.0, -1.0), (0.0, 1.0), (1.0, 0.0)];
        for (z, (re, im)) in r.iter().zip(expect) {
            assert!((z - Complex64::new(re, im)).norm() < 1e-13, "{z}");
        }
    }

    #[test]
    fn zero_roots_are_exact() {
        let r = poly_roots(&cx(&[0.0, 0.0, -2.0, 1.0])).unwrap();
        assert_eq!(r.iter().filter(|z| **z == Complex64::new(0.0, 0.0)).count(), 2);
    }

    #[test]
    fn double_double_polish() {
        let c: Vec<Complex<DoubleDouble>> = [-2.0, 0.0, 1.0]
            .iter()
            .map(|&v| Complex::new(DoubleDouble::from_f64(v), DoubleDouble::from_f64(0.0)))
            .collect();
        for z in poly_roots(&c).unwrap() {
            let res = cabs(eval_poly(&c, z)).to_f64();
            assert!(res < 1e-29, "{res}");
        }
    }

    #[test]
    fn wilkinson_like_degree_twelve() {
        let mut c = vec![Complex64::new(1.0, 0.0)];
        for k in 1..=12 {
            let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
            for (i, a) in c.iter().enumerate() {
                next[i + 1] += a;
                next[i] -= a * (k as f64 / 4.0);
            }
            c = next;
        }
        let mut r = poly_roots(&c).unwrap();
        sort_lex(&mut r, 1e-9);
        for (k, z) in r.iter().enumerate() {
            assert!((z.re - (k + 1) as f64 / 4.0).abs() < 1e-6, "{z}");
        }
    }
}
