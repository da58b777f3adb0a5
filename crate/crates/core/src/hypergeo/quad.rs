use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};

const ORDER: usize = 15;

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[−1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            // Legendre recurrence for P_n(x) and P_{n−1}(x)
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 1 { x } else { p1 };
            let pm = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (x * pn - pm) / (x * x - 1.0);
            let dx = pn / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

fn rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(ORDER))
}

fn fixed(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64) -> Complex64 {
    let (xs, ws) = rule();
    let (mid, half) = ((a + b) / 2.0, (b - a) / 2.0);
    xs.iter().zip(ws).map(|(x, w)| f(mid + half * x) * *w).sum::<Complex64>() * half
}

fn refine(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64, whole: Complex64, tol: f64, depth: u32) -> Result<Complex64> {
    let m = (a + b) / 2.0;
    let (l, r) = (fixed(f, a, m), fixed(f, m, b));
    if (l + r - whole).norm() <= tol {
        return Ok(l + r);
    }
    if depth == 0 {
        return Err(Error::Precision(format!("quadrature did not converge on [{a}, {b}]")));
    }
    Ok(refine(f, a, m, l, tol / 2.0, depth - 1)? + refine(f, m, b, r, tol / 2.0, depth - 1)?)
}

/// Adaptive composite Gauss–Legendre quadrature of a complex-valued integrand.
pub fn integrate_adaptive(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64, tol: f64) -> Result<Complex64> {
    let v = refine(f, a, b, fixed(f, a, b), tol, 40)?;
    if !(v.re.is_finite() && v.im.is_finite()) {
        return Err(Error::Precision("quadrature produced a non-finite value".into()));
    }
    Ok(v)
}
