//! Explicit isogenies `(x, y) ↦ (u(x), y·R(x))` between superelliptic curves and
//! their composition with genus-1 Belyi maps.

use crate::composer::{Genus1BelyiMap, Provenance};
use crate::curves::{quartic_to_weierstrass, FfElem, SuperellipticCurve};
use crate::error::{Error, Result};
use crate::exactnum::{rational_nth_root, FieldElement};
use crate::polyalg::{is_constant_times_power, Polynomial, RationalFunction};
use crate::report::VerificationReport;
use crate::{KPoly, KRatFun};

#[derive(Debug, Clone, PartialEq)]
pub struct IsogenyMap {
    pub source: SuperellipticCurve,
    pub target: SuperellipticCurve,
    pub u: KRatFun,
    pub r: Option<KRatFun>,
    pub degree: usize,
}

impl IsogenyMap {
    pub fn new(source: SuperellipticCurve, target: SuperellipticCurve, u: KRatFun, r: Option<KRatFun>, degree: usize) -> Result<Self> {
        if source.n() != target.n() {
            return Err(Error::CurveMismatch("source and target have different exponents".into()));
        }
        if source.field() != target.field() || source.field() != u.ctx() {
            return Err(Error::FieldMismatch("isogeny data over different fields".into()));
        }
        Ok(IsogenyMap { source, target, u, r, degree })
    }

    /// `f·Rⁿ − g∘u`, zero exactly when the substitution maps the source into the target.
    pub fn curve_identity_residual(&self) -> Result<Option<KRatFun>> {
        let Some(r) = &self.r else { return Ok(None) };
        let f = RationalFunction::from_poly(self.source.f().clone());
        let g = RationalFunction::from_poly(self.target.f().clone());
        let lhs = &f * &r.pow(self.source.n() as i64)?;
        Ok(Some(&lhs - &g.compose(&self.u)?))
    }

    pub fn x_map_degree(&self) -> usize {
        self.u.degree()
    }

    /// `deg num u > deg den u`, i.e. the point at infinity goes to the point at infinity.
    pub fn fixes_infinity(&self) -> bool {
        self.u.num().deg0() > self.u.den().deg0()
    }
}

/// Rewrites a `Y`-component `c(x)·y^k` as `y·R(x)` using `yⁿ = f`.
pub fn y_component_to_r(c: &KRatFun, k: i64, n: usize, f: &KPoly) -> Result<KRatFun> {
    let n = n as i64;
    if (k - 1).rem_euclid(n) != 0 {
        return Err(Error::InvalidInput(format!("y^{k} is not y times a function of x on y^{n} = f")));
    }
    let f = RationalFunction::from_poly(f.clone());
    Ok(c * &f.pow((k - 1).div_euclid(n))?)
}

/// Checks the curve identity, `∞ ↦ ∞` and the stated degree.
pub fn verify_isogeny_full(iso: &IsogenyMap, entry: &str) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(entry);
    match iso.curve_identity_residual()? {
        Some(res) => {
            rep.check("f·Rⁿ = g∘u", res.is_zero(), if res.is_zero() { "identity holds".to_string() } else { format!("residual {res}") });
        }
        None => {
            rep.check("f·Rⁿ = g∘u", false, "no y-component given");
        }
    }
    rep.check("∞ ↦ ∞", iso.fixes_infinity(), format!("u = {}", iso.u));
    let d = iso.x_map_degree();
    rep.check("degree", d == iso.degree, format!("stated {}, x-map degree {d}", iso.degree));
    Ok(rep)
}

/// Whether the constant `c` has an `n`-th root in its field.
#[derive(Debug, Clone, PartialEq)]
pub enum RootStatus {
    Power(FieldElement),
    NotPower,
    /// Decided only for constants lying in Q.
    Undetermined,
}

#[derive(Debug, Clone, PartialEq)]
pub struct XOnlyVerdict {
    /// `(g∘u)/f` is a constant times an `n`-th power.
    pub flag: bool,
    pub c: Option<FieldElement>,
    /// `S` with `(g∘u)/f = c·Sⁿ`; the `y`-component is `c^{1/n}·S`.
    pub r: Option<KRatFun>,
    pub root: RootStatus,
    pub note: String,
}

/// Recovers the `y`-component of an isogeny from its `x`-component alone.
pub fn verify_isogeny_xonly(f_source: &KPoly, g_target: &KPoly, u: &KRatFun, n: usize) -> Result<XOnlyVerdict> {
    let g = RationalFunction::from_poly(g_target.clone());
    let q = g.compose(u)?.try_div(&RationalFunction::from_poly(f_source.clone()))?;
    let Some((c, s)) = is_constant_times_power(&q, n) else {
        return Ok(XOnlyVerdict {
            flag: false,
            c: None,
            r: None,
            root: RootStatus::Undetermined,
            note: format!("(g∘u)/f = {q} has a multiplicity not divisible by {n}"),
        });
    };
    let (root, note) = match c.as_rational() {
        Some(cr) => match rational_nth_root(&cr, n as u32) {
            Some(rt) => (RootStatus::Power(FieldElement::from_rational(c.field(), rt)), format!("c = {c} has an exact root of order {n} in Q")),
            None => (RootStatus::NotPower, format!("c = {c} has no root of order {n} in Q; R needs the extension by c^(1/{n})")),
        },
        None => (RootStatus::Undetermined, format!("c = {c}; whether it has a root of order {n} in the field is not decided")),
    };
    let r = match &root {
        RootStatus::Power(rt) => s.scale(rt),
        _ => s,
    };
    Ok(XOnlyVerdict { flag: true, c: Some(c), r: Some(r), root, note })
}

/// Pulls `base` back along the isogeny: `X ↦ u(x)`, `Y ↦ y·R(x)`.
pub fn compose_isogeny(base: &Genus1BelyiMap, iso: &IsogenyMap) -> Result<Genus1BelyiMap> {
    if base.curve() != &iso.target {
        return Err(Error::CurveMismatch(format!("base map lives on {}, isogeny targets {}", base.curve(), iso.target)));
    }
    let r = iso.r.as_ref().ok_or_else(|| Error::InvalidInput("isogeny has no y-component".into()))?;
    if !iso.curve_identity_residual()?.is_some_and(|res| res.is_zero()) {
        return Err(Error::CurveMismatch("isogeny does not map the source onto the target".into()));
    }
    let n = iso.source.n();
    let f = iso.source.f();
    let xs = FfElem::from_ratfun(n, f, iso.u.clone());
    let ys = FfElem::new(n, f, vec![RationalFunction::zero(f.ctx()), r.clone()]);
    let value = base.value().substitute(&xs, &ys)?;
    let map = Genus1BelyiMap::new(iso.source.clone(), value, Provenance::IsogenyComposite)?;
    let expected = base.passport().repeated(iso.degree);
    if map.passport() != &expected {
        return Err(Error::NotBelyi(format!(
            "composite passport {} is not the base passport repeated {} times ({expected})",
            map.passport(),
            iso.degree
        )));
    }
    Ok(map)
}

/// The 2-descent pattern for `y² = x(x² + a x + b)`: the isogeny `x = X²`, `y = X·Y` from
/// `Y² = X⁴ + aX² + b`, and the Weierstrass model of that quartic, `X(X² − 2aX + a² − 4b)`.
pub fn two_descent_report(a: &FieldElement, b: &FieldElement) -> Result<VerificationReport> {
    let k = a.field();
    let c = |n: i64| FieldElement::from_int(k, n);
    let mut rep = VerificationReport::new(format!("2-descent a={a} b={b}"));
    let target = SuperellipticCurve::new(2, Polynomial::new(k.clone(), vec![c(0), b.clone(), a.clone(), c(1)]))?;
    let source = SuperellipticCurve::new(2, Polynomial::new(k.clone(), vec![b.clone(), c(0), a.clone(), c(0), c(1)]))?;
    let x = RationalFunction::x(k);
    let iso = IsogenyMap::new(source.clone(), target.clone(), &x * &x, Some(x.clone()), 2)?;
    rep.absorb("isogeny", verify_isogeny_full(&iso, "")?);
    let (w, _) = quartic_to_weierstrass(&c(0), a, &c(0), b)?;
    let shifted = w.cubic().compose(&Polynomial::new(k.clone(), vec![-a.clone(), c(1)]));
    let expected = Polynomial::new(k.clone(), vec![c(0), &(a * a) - &(&c(4) * b), &c(-2) * a, c(1)]);
    rep.check("Weierstrass model", shifted == expected, format!("{shifted}"));
    let (j1, j2) = (source.j_invariant()?, SuperellipticCurve::new(2, expected)?.j_invariant()?);
    rep.check("j-invariants agree", j1 == j2, format!("{j1} vs {j2}"));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composer::compose_with_cover;
    use crate::composer::CoverSpec;
    use crate::exactnum::{int, rat, Field, NumberField};
    use crate::expr::{parse_poly, parse_ratfun};
    use crate::Genus0BelyiMap;
    use rand::{Rng, SeedableRng};

    fn curve(k: &Field, f: &str) -> SuperellipticCurve {
        SuperellipticCurve::new(2, parse_poly(k, "x", f).unwrap()).unwrap()
    }

    fn rf(k: &Field, s: &str) -> KRatFun {
        parse_ratfun(k, "x", s).unwrap()
    }

    #[test]
    fn degree_two_isogeny_and_composite() {
        let q = NumberField::rationals();
        let src = curve(&q, "x(x^2+6x-3)");
        let tgt = curve(&q, "x^3+1");
        let iso = IsogenyMap::new(src, tgt.clone(), rf(&q, "(x-1)(x+3)/(4x)"), Some(rf(&q, "(x^2+3)/(8x^2)")), 2).unwrap();
        assert!(verify_isogeny_full(&iso, "iso").unwrap().passed());
        let half = rf(&q, "1/2");
        let phi0 = FfElem::new(2, tgt.f(), vec![half.clone(), half]);
        let base = Genus1BelyiMap::new(tgt, phi0, Provenance::Explicit).unwrap();
        let m = compose_isogeny(&base, &iso).unwrap();
        assert_eq!(m.passport().to_string(), "3^2/3^2/3^2");
        assert_eq!(m.value().comp(1), &rf(&q, "(x^2+3)/(16x^2)"));
    }

    #[test]
    fn wrong_y_component_fails() {
        let q = NumberField::rationals();
        let iso = IsogenyMap::new(
            curve(&q, "x(x^2+6x-3)"),
            curve(&q, "x^3+1"),
            rf(&q, "(x-1)(x+3)/(4x)"),
            Some(rf(&q, "(x^2+3)/(4x^2)")),
            2,
        )
        .unwrap();
        assert!(!verify_isogeny_full(&iso, "iso").unwrap().passed());
    }

    #[test]
    fn cubic_multiplication_by_two() {
        let q = NumberField::rationals();
        let c = SuperellipticCurve::new(3, parse_poly(&q, "x", "x(x-1)").unwrap()).unwrap();
        let iso = IsogenyMap::new(c.clone(), c, rf(&q, "-x(x-2)^3/(2x-1)^3"), Some(rf(&q, "(x-2)(x+1)/(2x-1)^2")), 4).unwrap();
        assert!(verify_isogeny_full(&iso, "cubic_mult2").unwrap().passed());
    }

    #[test]
    fn x_only_recovery() {
        let q = NumberField::rationals();
        let v = verify_isogeny_xonly(
            &parse_poly(&q, "x", "x^3+x").unwrap(),
            &parse_poly(&q, "x", "x^3-x").unwrap(),
            &rf(&q, "(x^2+1)/(2x)"),
            2,
        )
        .unwrap();
        assert!(v.flag);
        assert_eq!(v.c.unwrap().as_rational(), Some(rat(1, 8)));
        assert_eq!(v.root, RootStatus::NotPower);
        let id = verify_isogeny_xonly(&parse_poly(&q, "x", "x^3+1").unwrap(), &parse_poly(&q, "x", "x^3+1").unwrap(), &rf(&q, "x"), 2).unwrap();
        assert_eq!(id.r, Some(rf(&q, "1")));
        assert_eq!(id.root, RootStatus::Power(FieldElement::one(&q)));
        let wrong = verify_isogeny_xonly(&parse_poly(&q, "x", "x^3+1").unwrap(), &parse_poly(&q, "x", "x^3-x").unwrap(), &rf(&q, "x+1"), 2).unwrap();
        assert!(!wrong.flag);
    }

    #[test]
    fn normalizing_inverse_powers_of_y() {
        let q = NumberField::rationals();
        let f = parse_poly(&q, "x", "x^3-x").unwrap();
        let r = y_component_to_r(&rf(&q, "(x^2+1)(x^4-6x^2+1)/8"), -3, 2, &f).unwrap();
        let iso = IsogenyMap::new(curve(&q, "x^3-x"), curve(&q, "x^3-x"), rf(&q, "(x^2+1)^2/(4(x^3-x))"), Some(r), 4).unwrap();
        assert!(verify_isogeny_full(&iso, "mult by 2").unwrap().passed());
        assert!(y_component_to_r(&rf(&q, "1"), 2, 2, &f).is_err());
    }

    #[test]
    fn square_lattice_degree_eight() {
        let q = NumberField::rationals();
        let e1 = curve(&q, "x^3-x");
        let psi0 = FfElem::from_ratfun(2, e1.f(), rf(&q, "x^2"));
        let base = Genus1BelyiMap::new(e1.clone(), psi0, Provenance::Explicit).unwrap();
        assert_eq!(base.passport().to_string(), "4/4/2^2");
        let src = curve(&q, "x(x^2+6x+1)");
        let iso = IsogenyMap::new(src, e1, rf(&q, "(x+1)^2/(4x)"), Some(rf(&q, "(x^2-1)/(8x^2)")), 2).unwrap();
        let m = compose_isogeny(&base, &iso).unwrap();
        assert_eq!(m.passport().to_string(), "4^2/4^2/2^4");
        assert_eq!(m.value().comp(0), &rf(&q, "(x+1)^4/(16x^2)"));
    }

    #[test]
    fn twist_swaps_psi1_and_its_complement() {
        let k = NumberField::new(vec![int(1), int(0), int(1)], "i").unwrap();
        let psi1 = Genus0BelyiMap::new(rf(&k, "(x^2+1)^2/(4x^2)")).unwrap();
        let twisted = psi1.map().compose(&rf(&k, "-i x")).unwrap();
        assert_eq!(twisted, &rf(&k, "1") - psi1.map());
        let m = compose_with_cover(&psi1, &CoverSpec::new(2, parse_poly(&k, "x", "x^3+x").unwrap())).unwrap();
        assert_eq!(m.passport().to_string(), "4^2/4^2/2^4");
    }

    #[test]
    fn two_descent_at_random_pairs() {
        let q = NumberField::rationals();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut done = 0;
        while done < 10 {
            let a = rat(rng.gen_range(-30..30), rng.gen_range(1..7));
            let b = rat(rng.gen_range(-30..30), rng.gen_range(1..7));
            let (a, b) = (FieldElement::from_rational(&q, a), FieldElement::from_rational(&q, b));
            let disc = &(&a * &a) - &(&FieldElement::from_int(&q, 4) * &b);
            if b.is_zero() || disc.is_zero() {
                continue;
            }
            let rep = two_descent_report(&a, &b).unwrap();
            assert!(rep.passed(), "{rep}");
            done += 1;
        }
    }
}
