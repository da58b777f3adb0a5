//! Fibers of `h = (Σ yⁱ pᵢ(x)) / d(x)` on `yⁿ = f(x)` and their continuation in `w`.

use num_complex::{Complex, Complex64};

use crate::error::{Error, Result};
use crate::exactnum::Embedding;
use crate::numeric::{c_from_f64, c_to_f64, cabs, eval_poly, eval_poly_d, nth_roots, poly_roots, Real};
use crate::{KPoly, KRatFun};
use crate::curves::FfElem;

type C<T> = Complex<T>;

fn czero<T: Real>() -> C<T> {
    Complex::new(T::zero(), T::zero())
}

fn pmul<T: Real>(a: &[C<T>], b: &[C<T>]) -> Vec<C<T>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![czero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j] + *x * *y;
        }
    }
    out
}

fn padd<T: Real>(a: &[C<T>], b: &[C<T>], sb: C<T>) -> Vec<C<T>> {
    let mut out = vec![czero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] = *x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] = out[i] + *y * sb;
    }
    out
}

/// A point of a fiber: `x` and the sheet value `y`.
pub(crate) type Point<T> = (C<T>, C<T>);

fn dist<T: Real>(a: &Point<T>, b: &Point<T>) -> f64 {
    cabs(a.0 - b.0).to_f64() + cabs(a.1 - b.1).to_f64()
}

fn size<T: Real>(a: &Point<T>) -> f64 {
    1.0 + cabs(a.0).to_f64() + cabs(a.1).to_f64()
}

/// Complex model of a function on the curve. Genus 0 uses `n = 1`, `f = 1`, so `y ≡ 1`.
#[derive(Debug, Clone)]
pub(crate) struct NumFun<T: Real> {
    n: usize,
    f: Vec<C<T>>,
    p: Vec<Vec<C<T>>>,
    d: Vec<C<T>>,
}

fn embed_poly<T: Real>(e: &Embedding<T>, p: &KPoly) -> Vec<C<T>> {
    p.coeffs().iter().map(|c| e.apply(c)).collect()
}

impl<T: Real> NumFun<T> {
    pub fn from_ratfun(e: &Embedding<T>, r: &KRatFun) -> Self {
        let one = Complex::new(T::one(), T::zero());
        NumFun { n: 1, f: vec![one], p: vec![embed_poly(e, r.num())], d: embed_poly(e, r.den()) }
    }

    pub fn from_ffelem(e: &Embedding<T>, h: &FfElem) -> Self {
        let (ps, d) = h.split_den();
        NumFun {
            n: h.n(),
            f: embed_poly(e, h.curve_poly()),
            p: ps.iter().map(|q| embed_poly(e, q)).collect(),
            d: embed_poly(e, &d),
        }
    }

    fn is_x_only(&self) -> bool {
        self.p.iter().skip(1).all(|q| q.iter().all(|c| *c == czero()))
    }

    pub fn sheets(&self, x: C<T>) -> Vec<C<T>> {
        if self.n == 1 {
            return vec![Complex::new(T::one(), T::zero())];
        }
        nth_roots(eval_poly(&self.f, x), self.n as u32)
    }

    fn numerator(&self, x: C<T>, y: C<T>) -> C<T> {
        let mut acc = czero();
        for q in self.p.iter().rev() {
            acc = acc * y + eval_poly(q, x);
        }
        acc
    }

    /// `h(x, y)`, or `None` at a pole.
    pub fn value(&self, x: C<T>, y: C<T>) -> Option<C<T>> {
        let d = eval_poly(&self.d, x);
        let num = self.numerator(x, y);
        if cabs(d).to_f64() <= 1e-300 || cabs(d).to_f64() < 1e-13 * cabs(num).to_f64() {
            return None;
        }
        Some(num / d)
    }

    /// Residuals of `yⁿ = f(x)`, `A(x, y) = w·d(x)`, the Jacobian, and `d(x)`.
    fn system(&self, (x, y): Point<T>, w: C<T>) -> ([C<T>; 2], [C<T>; 4], C<T>) {
        let (fv, fd) = eval_poly_d(&self.f, x);
        let (dv, dd) = eval_poly_d(&self.d, x);
        let (mut a, mut ax, mut ay): (C<T>, C<T>, C<T>) = (czero(), czero(), czero());
        for q in self.p.iter().rev() {
            let (qv, qd) = eval_poly_d(q, x);
            ay = ay * y + a;
            a = a * y + qv;
            ax = ax * y + qd;
        }
        let mut yn1 = Complex::new(T::one(), T::zero());
        for _ in 1..self.n {
            yn1 = yn1 * y;
        }
        let nt = Complex::new(T::from_f64(self.n as f64), T::zero());
        ([yn1 * y - fv, a - w * dv], [-fd, nt * yn1, ax - w * dd, ay], dv)
    }

    fn solve(j: &[C<T>; 4], r: [C<T>; 2]) -> Option<Point<T>> {
        let det = j[0] * j[3] - j[1] * j[2];
        if cabs(det).to_f64() == 0.0 {
            return None;
        }
        Some(((r[0] * j[3] - j[1] * r[1]) / det, (j[0] * r[1] - j[2] * r[0]) / det))
    }

    fn newton_step(&self, z: Point<T>, w: C<T>) -> Option<Point<T>> {
        let (e, j, _) = self.system(z, w);
        Self::solve(&j, e)
    }

    /// Tangent `d(x, y)/dw`.
    fn tangent(&self, z: Point<T>, w: C<T>) -> Option<Point<T>> {
        let (_, j, dv) = self.system(z, w);
        Self::solve(&j, [czero(), dv])
    }

    /// Newton polish; `None` if it does not settle within `iters`.
    pub fn polish(&self, mut z: Point<T>, w: C<T>, iters: usize, tol: f64) -> Option<(Point<T>, f64)> {
        let mut moved = 0.0;
        for _ in 0..iters {
            let (dx, dy) = self.newton_step(z, w)?;
            z = (z.0 - dx, z.1 - dy);
            let step = cabs(dx).to_f64() + cabs(dy).to_f64();
            moved += step;
            if !step.is_finite() {
                return None;
            }
            if step <= tol * size(&z) {
                return Some((z, moved));
            }
        }
        None
    }

    /// All `degree` points above `w`, in (Re x, Im x, Re y, Im y) order.
    pub fn fiber(&self, w: C<T>, degree: usize, tol: f64) -> Result<Vec<Point<T>>> {
        let xpoly = if self.is_x_only() {
            padd(&self.p[0], &self.d, -w)
        } else {
            self.norm_poly(w)
        };
        let xs = poly_roots(&xpoly)?;
        // Clearing the denominator can add roots at poles of h; a generic w has no fiber point there.
        let poles = if self.d.iter().skip(1).any(|c| *c != czero()) { poly_roots(&self.d)? } else { Vec::new() };
        let mut pts: Vec<Point<T>> = Vec::new();
        for x in xs {
            for y in self.sheets(x) {
                let Some((z, _)) = self.polish((x, y), w, 40, tol) else { continue };
                if poles.iter().any(|p| cabs(z.0 - *p).to_f64() <= 1e-7 * (1.0 + cabs(*p).to_f64())) {
                    continue;
                }
                if pts.iter().all(|q| dist(q, &z) > 1e3 * tol * size(&z)) {
                    pts.push(z);
                }
            }
        }
        if pts.len() != degree {
            return Err(Error::Precision(format!("found {} of {degree} fiber points", pts.len())));
        }
        sort_points(&mut pts);
        Ok(pts)
    }

    /// `N(A − w·d)` as a polynomial in `x`.
    fn norm_poly(&self, w: C<T>) -> Vec<C<T>> {
        let a0 = padd(&self.p[0], &self.d, -w);
        let zero: Vec<C<T>> = Vec::new();
        let a1 = self.p.get(1).unwrap_or(&zero);
        let f = &self.f;
        match self.n {
            1 => a0,
            2 => padd(&pmul(&a0, &a0), &pmul(&pmul(a1, a1), f), -Complex::new(T::one(), T::zero())),
            _ => {
                let a2 = self.p.get(2).unwrap_or(&zero);
                let one = Complex::new(T::one(), T::zero());
                let cube = |q: &[C<T>]| pmul(&pmul(q, q), q);
                let mut out = cube(&a0);
                out = padd(&out, &pmul(&cube(a1), f), one);
                out = padd(&out, &pmul(&cube(a2), &pmul(f, f)), one);
                let mixed = pmul(&pmul(&pmul(&a0, a1), a2), f);
                padd(&out, &mixed, Complex::new(T::from_f64(-3.0), T::zero()))
            }
        }
    }
}

pub(crate) fn sort_points<T: Real>(pts: &mut [Point<T>]) {
    let key = |p: &Point<T>| [p.0.re.to_f64(), p.0.im.to_f64(), p.1.re.to_f64(), p.1.im.to_f64()];
    pts.sort_by(|a, b| {
        let (ka, kb) = (key(a), key(b));
        for i in 0..4 {
            let scale = 1.0 + ka[i].abs().max(kb[i].abs());
            if (ka[i] - kb[i]).abs() > 1e-9 * scale {
                return ka[i].partial_cmp(&kb[i]).unwrap_or(std::cmp::Ordering::Equal);
            }
        }
        std::cmp::Ordering::Equal
    });
}

/// A piecewise path in the `w`-plane: segments and full counter-clockwise circles.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Leg {
    Segment(Complex64, Complex64),
    Circle { center: Complex64, start: Complex64 },
}

impl Leg {
    fn at<T: Real>(&self, t: f64) -> C<T> {
        match *self {
            Leg::Segment(a, b) => {
                let (a, b): (C<T>, C<T>) = (c_from_f64(a), c_from_f64(b));
                if t >= 1.0 {
                    return b;
                }
                a + (b - a) * Complex::new(T::from_f64(t), T::zero())
            }
            Leg::Circle { center, start } => {
                if t <= 0.0 || t >= 1.0 {
                    return c_from_f64(start);
                }
                let rot = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * t);
                c_from_f64::<T>(center) + c_from_f64::<T>(start - center) * c_from_f64::<T>(rot)
            }
        }
    }
}

/// Continues every point of `pts` along `legs`; `min_sep` is the collision threshold.
pub(crate) fn track<T: Real>(
    h: &NumFun<T>,
    legs: &[Leg],
    mut pts: Vec<Point<T>>,
    steps: usize,
    newton_tol: f64,
    min_sep: f64,
) -> Result<Vec<Point<T>>> {
    for leg in legs {
        let mut t = 0.0;
        let mut dt = 1.0 / steps as f64;
        while t < 1.0 {
            let t1 = (t + dt).min(1.0);
            let (w0, w1) = (leg.at::<T>(t), leg.at::<T>(t1));
            match advance(h, &pts, w0, w1, newton_tol, min_sep) {
                Some(next) => {
                    pts = next;
                    t = t1;
                    dt = (dt * 1.5).min(4.0 / steps as f64);
                }
                None => {
                    dt /= 2.0;
                    if dt < 1e-9 {
                        return Err(Error::Precision(format!(
                            "path tracking stalled near w = {}; raise the precision",
                            c_to_f64(w0)
                        )));
                    }
                }
            }
        }
    }
    Ok(pts)
}

fn advance<T: Real>(h: &NumFun<T>, pts: &[Point<T>], w0: C<T>, w1: C<T>, tol: f64, min_sep: f64) -> Option<Vec<Point<T>>> {
    let sep: Vec<f64> = (0..pts.len())
        .map(|i| {
            (0..pts.len()).filter(|&j| j != i).map(|j| dist(&pts[i], &pts[j])).fold(f64::INFINITY, f64::min)
        })
        .collect();
    let dw = w1 - w0;
    let mut out = Vec::with_capacity(pts.len());
    for (z, s) in pts.iter().zip(&sep) {
        let t = h.tangent(*z, w0)?;
        let pred = (z.0 + t.0 * dw, z.1 + t.1 * dw);
        let (next, corr) = h.polish(pred, w1, 6, tol)?;
        let reach = if s.is_finite() { *s } else { size(z) };
        if corr > 0.1 * reach || dist(z, &next) > 0.4 * reach {
            return None;
        }
        out.push(next);
    }
    for i in 0..out.len() {
        for j in 0..i {
            if dist(&out[i], &out[j]) <= min_sep * size(&out[i]) {
                return None;
            }
        }
    }
    Some(out)
}

/// Index of the point of `targets` that `z` landed on.
pub(crate) fn match_points<T: Real>(ends: &[Point<T>], targets: &[Point<T>]) -> Result<Vec<usize>> {
    let sep = (0..targets.len())
        .flat_map(|i| (0..i).map(move |j| (i, j)))
        .map(|(i, j)| dist(&targets[i], &targets[j]))
        .fold(f64::INFINITY, f64::min);
    let mut out = Vec::with_capacity(ends.len());
    for z in ends {
        let (best, d) = targets
            .iter()
            .enumerate()
            .map(|(k, q)| (k, dist(z, q)))
            .fold((usize::MAX, f64::INFINITY), |acc, c| if c.1 < acc.1 { c } else { acc });
        if best == usize::MAX || (sep.is_finite() && d > 0.01 * sep) {
            return Err(Error::Precision("a continued fiber point did not return to the fiber".into()));
        }
        out.push(best);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::NumberField;
    use crate::expr::{parse_poly, parse_ratfun};

    #[test]
    fn cubic_fiber_and_loop() {
        let k = NumberField::rationals();
        let e = Embedding::<f64>::new(&k, 0, 53).unwrap();
        let h = NumFun::from_ratfun(&e, &parse_ratfun(&k, "x", "x^3").unwrap());
        let w = Complex64::new(0.5, 0.2);
        let pts = h.fiber(w, 3, 1e-13).unwrap();
        for p in &pts {
            assert!((p.0 * p.0 * p.0 - w).norm() < 1e-12);
        }
        let legs = [Leg::Circle { center: Complex64::new(0.0, 0.0), start: w }];
        let ends = track(&h, &legs, pts.clone(), 16, 1e-13, 1e-9).unwrap();
        let perm = match_points(&ends, &pts).unwrap();
        let mut sorted = perm.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 1, 2]);
        assert!(perm.iter().enumerate().all(|(i, &j)| i != j));
    }

    #[test]
    fn curve_fiber_counts() {
        let k = NumberField::rationals();
        let e = Embedding::<f64>::new(&k, 0, 53).unwrap();
        let g = parse_poly(&k, "x", "x^3+1").unwrap();
        let y = FfElem::y(2, &g);
        let h = NumFun::from_ffelem(&e, &y);
        let pts = h.fiber(Complex64::new(0.3, -0.7), 3, 1e-13).unwrap();
        assert_eq!(pts.len(), 3);
        let x = NumFun::from_ffelem(&e, &FfElem::x(2, &g));
        assert_eq!(x.fiber(Complex64::new(0.3, -0.7), 2, 1e-13).unwrap().len(), 2);
    }
}
