//! Floating-point monodromy: critical values, permutation triples by path continuation,
//! and dessin equivalence.

mod perm;
mod track;

pub use perm::{genus_from_triple, triples_equivalent, Permutation, PermutationTriple};

use num_complex::{Complex, Complex64};

use crate::belyi0::{fiber_structure, BelyiValue, Genus0BelyiMap};
use crate::composer::Genus1BelyiMap;
use crate::curves::{fiber_orders, function_degree, FfElem};
use crate::error::{Error, Result};
use crate::exactnum::{Embedding, Field, FieldElement};
use crate::numeric::{c_from_f64, c_to_f64, effective_precision, poly_roots, DoubleDouble, Real};
use crate::polyalg::{gcd, squarefree_part, Polynomial, RationalFunction};
use crate::{KPoly, KRatFun};
use track::{match_points, track, Leg, NumFun, Point};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericSettings {
    /// Requested significand bits; requests above 53 run in double-double.
    pub precision: u32,
    /// Relative distance below which two values count as one.
    pub cluster_tol: f64,
    /// Initial number of steps per path leg; steps adapt from there.
    pub path_steps: usize,
    pub base_point: Complex64,
    /// Which complex embedding of the coefficient field to use.
    pub embedding: usize,
}

impl Default for NumericSettings {
    fn default() -> Self {
        NumericSettings {
            precision: 128,
            cluster_tol: 1e-9,
            path_steps: 64,
            base_point: Complex64::new(0.4137, 0.3719),
            embedding: 0,
        }
    }
}

impl NumericSettings {
    pub fn validate(&self) -> Result<()> {
        if self.cluster_tol.is_nan() || self.cluster_tol <= 0.0 {
            return Err(Error::InvalidInput("cluster_tol must be positive".into()));
        }
        if self.path_steps < 16 {
            return Err(Error::InvalidInput("path_steps must be at least 16".into()));
        }
        Ok(())
    }

    fn high_precision(&self) -> bool {
        effective_precision(self.precision) > f64::MANTISSA_BITS
    }
}

/// A non-constant function given either on the line or on a superelliptic curve.
#[derive(Debug, Clone, Copy)]
pub enum MapRef<'a> {
    Rational(&'a KRatFun),
    Curve(&'a FfElem),
}

impl<'a> From<&'a Genus0BelyiMap> for MapRef<'a> {
    fn from(m: &'a Genus0BelyiMap) -> Self {
        MapRef::Rational(m.map())
    }
}

impl<'a> From<&'a Genus1BelyiMap> for MapRef<'a> {
    fn from(m: &'a Genus1BelyiMap) -> Self {
        MapRef::Curve(m.value())
    }
}

impl<'a> From<&'a KRatFun> for MapRef<'a> {
    fn from(r: &'a KRatFun) -> Self {
        MapRef::Rational(r)
    }
}

impl<'a> From<&'a FfElem> for MapRef<'a> {
    fn from(h: &'a FfElem) -> Self {
        MapRef::Curve(h)
    }
}

impl MapRef<'_> {
    fn field(&self) -> &Field {
        match self {
            MapRef::Rational(r) => r.ctx(),
            MapRef::Curve(h) => h.field(),
        }
    }

    fn is_constant(&self) -> bool {
        match self {
            MapRef::Rational(r) => r.is_constant(),
            MapRef::Curve(h) => h.is_x_only() && h.comp(0).is_constant(),
        }
    }

    fn degree(&self) -> Result<usize> {
        match self {
            MapRef::Rational(r) => Ok(r.degree()),
            MapRef::Curve(h) => function_degree(h),
        }
    }

    fn infinity_is_critical(&self) -> Result<bool> {
        let poles = match self {
            MapRef::Rational(r) => fiber_structure(*r, BelyiValue::Infinity)?,
            MapRef::Curve(h) => fiber_orders(h, BelyiValue::Infinity)?,
        };
        Ok(poles.iter().any(|&e| e >= 2))
    }
}

/// Clustered critical values: finite ones plus whether `∞` is one.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalValues {
    pub finite: Vec<Complex64>,
    pub infinity: bool,
}

impl CriticalValues {
    /// True when the finite values all lie within `tol` of `0` or `1`.
    pub fn within_zero_one_infinity(&self, tol: f64) -> bool {
        self.finite.iter().all(|v| v.norm() <= tol || (v - 1.0).norm() <= tol)
    }
}

fn chart_candidates(field: &Field) -> impl Iterator<Item = FieldElement> + '_ {
    [(2, 7), (-3, 11), (5, 13), (-7, 17), (11, 19), (-13, 23), (17, 29), (-19, 31)]
        .into_iter()
        .map(|(p, q)| FieldElement::from_rational(field, crate::exactnum::rat(p, q)))
}

/// `(x0·s + 1)/s`, the substitution `x = x0 + 1/s`.
fn chart_inner(x0: &FieldElement) -> Result<KRatFun> {
    let k = x0.field();
    let num = Polynomial::new(k.clone(), vec![FieldElement::one(k), x0.clone()]);
    RationalFunction::new(num, Polynomial::x(k))
}

fn vanishes_at(p: &KPoly, x0: &FieldElement) -> bool {
    p.eval(x0).is_zero()
}

/// `h` written on `Yⁿ = s^{nk} f(x0 + 1/s)` with `x = x0 + 1/s`, `y = Y/s^k`.
fn curve_chart(h: &FfElem, x0: &FieldElement) -> Result<FfElem> {
    let n = h.n();
    let f = h.curve_poly();
    let k = f.deg0().div_ceil(n);
    let ctx = f.ctx();
    let shift = Polynomial::new(ctx.clone(), vec![x0.clone(), FieldElement::one(ctx)]);
    let ft = f.compose(&shift).reversed(n * k);
    let inner = chart_inner(x0)?;
    let s = Polynomial::x(ctx);
    let comps = h
        .comps()
        .iter()
        .enumerate()
        .map(|(i, r)| Ok(&r.compose(&inner)? * &RationalFunction::new(Polynomial::one(ctx), s.pow((k * i) as u32))?))
        .collect::<Result<Vec<_>>>()?;
    Ok(FfElem::new(n, &ft, comps))
}

/// Strips from `p` every root it shares with `q`.
fn strip(p: &KPoly, q: &KPoly) -> Result<KPoly> {
    let mut p = p.clone();
    loop {
        let g = gcd(&p, q);
        if g.deg0() == 0 {
            return Ok(p);
        }
        p = p.exact_div(&g)?;
    }
}

fn raw_critical_values<T: Real>(map: MapRef<'_>, s: &NumericSettings) -> Result<Vec<Complex<T>>> {
    let field = map.field();
    let e = Embedding::<T>::new(field, s.embedding, s.precision)?;
    let mut values = Vec::new();
    match map {
        MapRef::Rational(r) => {
            let dnum = r.derivative().num().clone();
            let x0 = chart_candidates(field)
                .find(|x0| !vanishes_at(r.den(), x0) && !vanishes_at(&dnum, x0))
                .ok_or_else(|| Error::Precision("no generic chart point found".into()))?;
            let rt = r.compose(&chart_inner(&x0)?)?;
            let crit = squarefree_part(&strip(rt.derivative().num(), rt.den())?);
            let h = NumFun::from_ratfun(&e, &rt);
            let one = Complex::new(T::one(), T::zero());
            if crit.deg0() > 0 {
                for x in poly_roots(&embed(&e, &crit))? {
                    values.extend(h.value(x, one));
                }
            }
        }
        MapRef::Curve(h) => {
            let g = h.derivative()?;
            let gnorm = g.norm()?;
            let x0 = chart_candidates(field)
                .find(|x0| {
                    !vanishes_at(h.curve_poly(), x0)
                        && h.comps().iter().all(|c| !vanishes_at(c.den(), x0))
                        && !vanishes_at(gnorm.num(), x0)
                        && !vanishes_at(gnorm.den(), x0)
                })
                .ok_or_else(|| Error::Precision("no generic chart point found".into()))?;
            let ht = curve_chart(h, &x0)?;
            let gt = ht.derivative()?;
            let ft = ht.curve_poly().clone();
            let hn = NumFun::from_ffelem(&e, &ht);
            let gn = NumFun::from_ffelem(&e, &gt);
            let crit = squarefree_part(&strip(gt.norm()?.num(), &ft)?);
            if crit.deg0() > 0 {
                for x in poly_roots(&embed(&e, &crit))? {
                    let ys = hn.sheets(x);
                    let gs: Vec<f64> = ys
                        .iter()
                        .map(|y| gn.value(x, *y).map_or(f64::INFINITY, |v| crate::numeric::cabs(v).to_f64()))
                        .collect();
                    let big = gs.iter().copied().filter(|v| v.is_finite()).fold(0.0, f64::max);
                    let small = gs.iter().copied().fold(f64::INFINITY, f64::min);
                    for (y, gv) in ys.iter().zip(&gs) {
                        if *gv <= 1e-6 * big || *gv == small {
                            values.extend(hn.value(x, *y));
                        }
                    }
                }
            }
            // Branch points of the x-line where the linear y-term vanishes.
            let mut at_branch = if ht.comps().len() > 1 && !ht.comp(1).is_zero() {
                gcd(&ft, ht.comp(1).num())
            } else {
                ft.clone()
            };
            for c in ht.comps() {
                at_branch = strip(&at_branch, c.den())?;
            }
            if at_branch.deg0() > 0 {
                let r0 = NumFun::from_ratfun(&e, ht.comp(0));
                let one = Complex::new(T::one(), T::zero());
                for a in poly_roots(&embed(&e, &at_branch))? {
                    values.extend(r0.value(a, one));
                }
            }
        }
    }
    Ok(values)
}

fn embed<T: Real>(e: &Embedding<T>, p: &KPoly) -> Vec<Complex<T>> {
    p.coeffs().iter().map(|c| e.apply(c)).collect()
}

/// Greedy clustering with relative tolerance; rejects clusters closer than `10·tol`.
fn cluster(mut values: Vec<Complex64>, tol: f64) -> Result<Vec<Complex64>> {
    values.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let close = |a: Complex64, b: Complex64, t: f64| (a - b).norm() <= t * (1.0 + a.norm().max(b.norm()));
    let mut groups: Vec<Vec<Complex64>> = Vec::new();
    for v in values {
        match groups.iter_mut().find(|g| g.iter().any(|u| close(*u, v, tol))) {
            Some(g) => g.push(v),
            None => groups.push(vec![v]),
        }
    }
    let centers: Vec<Complex64> = groups.iter().map(|g| g.iter().sum::<Complex64>() / g.len() as f64).collect();
    for i in 0..centers.len() {
        for j in 0..i {
            if close(centers[i], centers[j], 10.0 * tol) {
                return Err(Error::Precision(format!(
                    "critical values {} and {} are not separated; raise the precision",
                    centers[i], centers[j]
                )));
            }
        }
    }
    Ok(centers)
}

/// Critical values of a non-constant map, located in floating point.
pub fn critical_values_numeric<'a>(map: impl Into<MapRef<'a>>, settings: &NumericSettings) -> Result<CriticalValues> {
    let map = map.into();
    settings.validate()?;
    if map.is_constant() {
        return Err(Error::InvalidInput("constant map has no critical values".into()));
    }
    let raw: Vec<Complex64> = if settings.high_precision() {
        raw_critical_values::<DoubleDouble>(map, settings)?.into_iter().map(c_to_f64).collect()
    } else {
        raw_critical_values::<f64>(map, settings)?
    };
    let mut finite = cluster(raw, settings.cluster_tol)?;
    for v in &mut finite {
        for snap in [0.0, 1.0] {
            if (*v - snap).norm() <= settings.cluster_tol {
                *v = Complex64::new(snap, 0.0);
            }
        }
    }
    Ok(CriticalValues { finite, infinity: map.infinity_is_critical()? })
}

fn numeric_function<T: Real>(map: MapRef<'_>, e: &Embedding<T>) -> NumFun<T> {
    match map {
        MapRef::Rational(r) => NumFun::from_ratfun(e, r),
        MapRef::Curve(h) => NumFun::from_ffelem(e, h),
    }
}

fn newton_tol<T: Real>() -> f64 {
    T::epsilon().to_f64().powf(2.0 / 3.0)
}

fn min_separation<T: Real>(pts: &[Point<T>]) -> f64 {
    let mut m = f64::INFINITY;
    for i in 0..pts.len() {
        for j in 0..i {
            let d = crate::numeric::cabs(pts[i].0 - pts[j].0).to_f64() + crate::numeric::cabs(pts[i].1 - pts[j].1).to_f64();
            m = m.min(d);
        }
    }
    m
}

/// Loop from `base` around `center` (radius `r`) and back.
fn loop_around(base: Complex64, center: Complex64, r: f64) -> [Leg; 3] {
    let q = center + (base - center) / (base - center).norm() * r;
    [Leg::Segment(base, q), Leg::Circle { center, start: q }, Leg::Segment(q, base)]
}

fn base_fiber<T: Real>(h: &NumFun<T>, base: Complex64, degree: usize) -> Result<Vec<Point<T>>> {
    for v in [0.0, 1.0] {
        if (base - v).norm() < 0.3 + 1e-6 {
            return Err(Error::InvalidInput(format!("base point {base} lies inside a loop")));
        }
    }
    let pts = h.fiber(c_from_f64(base), degree, newton_tol::<T>())?;
    if degree > 1 && min_separation(&pts) < 1e-6 {
        return Err(Error::Precision(format!("fiber over {base} is nearly degenerate")));
    }
    Ok(pts)
}

fn triple_in<T: Real>(map: MapRef<'_>, degree: usize, s: &NumericSettings) -> Result<PermutationTriple> {
    let e = Embedding::<T>::new(map.field(), s.embedding, s.precision)?;
    let h = numeric_function(map, &e);
    let shifted = s.base_point + Complex64::new(0.0, 1.0 / 7.0);
    let (base, pts) = match base_fiber(&h, s.base_point, degree) {
        Ok(p) => (s.base_point, p),
        Err(_) => (shifted, base_fiber(&h, shifted, degree)?),
    };
    let tol = newton_tol::<T>();
    // The two finite critical values are 1 apart, so any radius below 1/2 gives the same loops.
    // Clearing denominators can leave isolated 0/0 points that stall Newton; another radius avoids them.
    let run = |center: f64| -> Result<Vec<usize>> {
        let mut last = None;
        for r in [0.25, 0.2, 0.3, 0.15] {
            let legs = loop_around(base, Complex64::new(center, 0.0), r);
            match track(&h, &legs, pts.clone(), s.path_steps, tol, s.cluster_tol).and_then(|ends| match_points(&ends, &pts)) {
                Err(e @ Error::Precision(_)) => last = Some(e),
                other => return other,
            }
        }
        Err(last.expect("at least one radius"))
    };
    let (r0, r1) = rayon::join(|| run(0.0), || run(1.0));
    let (s0, s1) = (Permutation::new(r0?)?, Permutation::new(r1?)?);
    PermutationTriple::from_pair(s0, s1)
        .map_err(|e| Error::Precision(format!("continued fibers give an inconsistent triple ({e})")))
}

/// Monodromy of a Belyi map from loops around `0` and `1` based at `settings.base_point`.
pub fn permutation_triple<'a>(map: impl Into<MapRef<'a>>, settings: &NumericSettings) -> Result<PermutationTriple> {
    let map = map.into();
    settings.validate()?;
    if map.is_constant() {
        return Err(Error::InvalidInput("constant map has no monodromy".into()));
    }
    let degree = map.degree()?;
    let attempt = |m: MapRef<'_>| {
        if settings.high_precision() {
            triple_in::<DoubleDouble>(m, degree, settings)
        } else {
            triple_in::<f64>(m, degree, settings)
        }
    };
    let first = attempt(map);
    let Err(Error::Precision(_)) = first else { return first };
    // A fiber point may run through x = ∞ on the way; retry with that point moved into the affine chart.
    for x0 in chart_candidates(map.field()) {
        let retry = match map {
            MapRef::Rational(r) => attempt(MapRef::Rational(&r.compose(&chart_inner(&x0)?)?)),
            MapRef::Curve(h) => attempt(MapRef::Curve(&curve_chart(h, &x0)?)),
        };
        if retry.is_ok() {
            return retry;
        }
    }
    first
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composer::{compose_with_cover, CoverSpec};
    use crate::exactnum::NumberField;
    use crate::expr::{parse_poly, parse_ratfun};

    fn q() -> Field {
        NumberField::rationals()
    }

    fn g0(s: &str) -> Genus0BelyiMap {
        Genus0BelyiMap::new(parse_ratfun(&q(), "x", s).unwrap()).unwrap()
    }

    fn fast() -> NumericSettings {
        NumericSettings { precision: 53, ..NumericSettings::default() }
    }

    fn phi1() -> Genus0BelyiMap {
        g0("(x^3+1)^2/(4x^3)")
    }

    #[test]
    fn cubic_critical_values() {
        let r = parse_ratfun(&q(), "x", "x^3-3x").unwrap();
        let cv = critical_values_numeric(&r, &fast()).unwrap();
        assert!(cv.infinity);
        let mut f: Vec<f64> = cv.finite.iter().map(|v| v.re).collect();
        f.sort_by(f64::total_cmp);
        assert_eq!(f.len(), 2);
        assert!((f[0] + 2.0).abs() < 1e-12 && (f[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn phi1_is_belyi_numerically() {
        for s in [fast(), NumericSettings::default()] {
            let cv = critical_values_numeric(&phi1(), &s).unwrap();
            assert!(cv.infinity);
            assert!(cv.within_zero_one_infinity(1e-9), "{cv:?}");
            assert_eq!(cv.finite.len(), 2);
        }
    }

    #[test]
    fn phi1_triple() {
        let t = permutation_triple(&phi1(), &fast()).unwrap();
        assert_eq!(t.passport(), *phi1().passport());
        assert_eq!(t.sigma0.cycle_type(), vec![2, 2, 2]);
        assert_eq!(t.sigma_inf.cycle_type(), vec![3, 3]);
        assert_eq!(genus_from_triple(&t), 0);
    }

    #[test]
    fn degree_one_map() {
        let t = permutation_triple(&g0("x"), &fast()).unwrap();
        assert!(t.sigma0.is_identity() && t.sigma1.is_identity() && t.sigma_inf.is_identity());
    }

    #[test]
    fn composite_on_elliptic_curve() {
        let cover = CoverSpec::new(2, parse_poly(&q(), "x", "x^3+1").unwrap());
        let m = compose_with_cover(&phi1(), &cover).unwrap();
        let cv = critical_values_numeric(&m, &NumericSettings::default()).unwrap();
        assert!(cv.within_zero_one_infinity(1e-9), "{cv:?}");
        for s in [fast(), NumericSettings::default()] {
            let t = permutation_triple(&m, &s).unwrap();
            assert_eq!(t.passport(), *m.passport());
            assert_eq!(t.passport().to_string(), "6 3^2/4^3/2^6");
            assert_eq!(genus_from_triple(&t), 1);
        }
    }

    #[test]
    fn base_point_independence() {
        let cover = CoverSpec::new(2, parse_poly(&q(), "x", "x^3+1").unwrap());
        let m = compose_with_cover(&phi1(), &cover).unwrap();
        let a = permutation_triple(&m, &fast()).unwrap();
        let other = NumericSettings { base_point: Complex64::new(0.62, 0.71), ..fast() };
        let b = permutation_triple(&m, &other).unwrap();
        assert!(triples_equivalent(&a, &b));
    }

    #[test]
    fn same_passport_different_dessins() {
        let phi3 = g0("x^3(x-2)^3/(2x-1)^3");
        let on = |f: &str| compose_with_cover(&phi3, &CoverSpec::new(2, parse_poly(&q(), "x", f).unwrap())).unwrap();
        let (a, b) = (on("x(x^2-4x+1)"), on("(x-2)(x^2-4x+1)"));
        assert_eq!(a.passport(), b.passport());
        let ta = permutation_triple(&a, &fast()).unwrap();
        let tb = permutation_triple(&b, &fast()).unwrap();
        assert_eq!(ta.passport(), *a.passport());
        assert_eq!(tb.passport(), *b.passport());
        assert!(!triples_equivalent(&ta, &tb));
        assert!(triples_equivalent(&ta, &ta));
    }

    #[test]
    fn psi1_branching() {
        use crate::composer::make_psi1;
        let u = FieldElement::from_int(&q(), 1);
        let psi = make_psi1(&u).unwrap();
        let cv = critical_values_numeric(&psi.value, &NumericSettings::default()).unwrap();
        assert!(cv.infinity);
        // (v − 2)² + 32v/27 = v² − 76v/27 + 4
        let disc = (76.0f64 / 27.0).powi(2) - 16.0;
        let roots = [
            Complex64::new(38.0 / 27.0, (-disc).sqrt() / 2.0),
            Complex64::new(38.0 / 27.0, -(-disc).sqrt() / 2.0),
        ];
        let mut expected = vec![Complex64::new(0.0, 0.0)];
        expected.extend(roots);
        assert_eq!(cv.finite.len(), 3, "{cv:?}");
        for v in expected {
            assert!(cv.finite.iter().any(|w| (w - v).norm() < 1e-9), "{v} missing from {cv:?}");
        }
    }

    #[test]
    fn settings_validation() {
        let bad = NumericSettings { path_steps: 4, ..NumericSettings::default() };
        assert!(bad.validate().is_err());
        let bad = NumericSettings { cluster_tol: 0.0, ..NumericSettings::default() };
        assert!(critical_values_numeric(&phi1(), &bad).is_err());
    }
}
