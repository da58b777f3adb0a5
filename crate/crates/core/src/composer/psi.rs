//! The parametric degree-3 functions `Ψ₁`, `Ψ₂` on plane cubics.

use crate::belyi0::BelyiValue;
use crate::curves::{fiber_orders, function_degree, FfElem, SuperellipticCurve};
use crate::error::{Error, Result};
use crate::exactnum::FieldElement;
use crate::polyalg::{discriminant, Polynomial, RationalFunction};
use crate::report::VerificationReport;
use crate::KPoly;

/// A degree-3 function on `y² = cubic` whose critical values are `∞`, `0` and the roots of `quadratic`.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeThreeCover {
    pub curve: SuperellipticCurve,
    pub value: FfElem,
    pub quadratic: KPoly,
}

fn poly(cs: Vec<FieldElement>) -> KPoly {
    let k = cs[0].field().clone();
    Polynomial::new(k, cs)
}

/// `Ψ₁ = Y + X + u` on `Y² = X³ + (X + u)²`; the remaining critical values solve `(v − 2u)² + 32v/27 = 0`.
pub fn make_psi1(u: &FieldElement) -> Result<DegreeThreeCover> {
    let k = u.field();
    let c = |n: i64| FieldElement::from_int(k, n);
    let f = poly(vec![u * u, &c(2) * u, c(1), c(1)]);
    let curve = SuperellipticCurve::new(2, f)?;
    let value = FfElem::new(
        2,
        curve.f(),
        vec![RationalFunction::from_poly(poly(vec![u.clone(), c(1)])), RationalFunction::one(k)],
    );
    let r = FieldElement::from_rational(k, crate::exactnum::rat(32, 27));
    let two_u = &c(2) * u;
    let quadratic = poly(vec![&two_u * &two_u, &r - &(&c(2) * &two_u), c(1)]);
    Ok(DegreeThreeCover { curve, value, quadratic })
}

/// `Ψ₂ = (Y + 3X + √B)/2` on `Y² = 16X³/(A + 2√B) + (3X + √B)²`, with critical values
/// `∞`, `0` and the roots of `v² + Av + B`.
pub fn make_psi2(a: &FieldElement, b_sqrt: &FieldElement) -> Result<DegreeThreeCover> {
    let k = a.field();
    let c = |n: i64| FieldElement::from_int(k, n);
    let s = a + &(&c(2) * b_sqrt);
    if s.is_zero() {
        return Err(Error::DegenerateCover("A + 2√B = 0: the quadratic v² + Av + B has a double root".into()));
    }
    let lead = c(16).try_div(&s)?;
    let f = poly(vec![b_sqrt * b_sqrt, &c(6) * b_sqrt, c(9), lead]);
    let curve = SuperellipticCurve::new(2, f)?;
    let half = FieldElement::from_rational(k, crate::exactnum::rat(1, 2));
    let value = FfElem::new(
        2,
        curve.f(),
        vec![
            RationalFunction::from_poly(poly(vec![b_sqrt * &half, &c(3) * &half])),
            RationalFunction::constant(half),
        ],
    );
    let quadratic = poly(vec![b_sqrt * b_sqrt, a.clone(), c(1)]);
    Ok(DegreeThreeCover { curve, value, quadratic })
}

/// Exact check that the only critical values are `∞`, `0` and the roots of the quadratic:
/// the ramification found there already exhausts the Riemann–Hurwitz total `2·3 = 6`.
pub fn psi2_critical_report(p: &DegreeThreeCover, entry: &str) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(entry);
    let d = function_degree(&p.value)?;
    rep.check("degree 3", d == 3, format!("degree {d}"));
    let inf = fiber_orders(&p.value, BelyiValue::Infinity)?;
    let zero = fiber_orders(&p.value, BelyiValue::Zero)?;
    rep.check("total ramification over ∞", inf == [3], format!("{inf:?}"));
    rep.check("total ramification over 0", zero == [3], format!("{zero:?}"));
    let disc_ok = discriminant(&p.quadratic).map(|x| !x.is_zero()).unwrap_or(false);
    rep.check("quadratic has distinct roots", disc_ok, p.quadratic.to_string());
    let q = p.value.eval_poly(&p.quadratic)?;
    let roots = fiber_orders(&q, BelyiValue::Zero)?;
    rep.check("simple branching over each root", roots == [2, 2, 1, 1], format!("{roots:?}"));
    let total: usize = inf.iter().chain(&zero).chain(&roots).map(|e| e - 1).sum();
    rep.check("no other critical values", total == 6, format!("Σ(e−1) = {total}"));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composer::compose_genus0_after;
    use crate::exactnum::{int, rat, NumberField};
    use crate::expr::{parse_field_element, parse_ratfun};
    use crate::Genus0BelyiMap;

    #[test]
    fn psi1_branching() {
        let q = NumberField::rationals();
        for u in [rat(1, 1), rat(-3, 2), rat(5, 7)] {
            let p = make_psi1(&FieldElement::from_rational(&q, u)).unwrap();
            let rep = psi2_critical_report(&p, "psi1").unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn psi2_cases_k_and_l() {
        let k = NumberField::new(vec![int(2), int(0), int(1)], "s").unwrap();
        let s = parse_field_element(&k, "s").unwrap();
        let phi = Genus0BelyiMap::new(parse_ratfun(&k, "z", "z(z+4)^3/(4(2z-1)^3)").unwrap()).unwrap();
        for (a, expected) in [("7/2", "6 3^2/6 3^2/2^6"), ("-10", "3^4/3^4/4^2 2^2")] {
            let p = make_psi2(&parse_field_element(&k, a).unwrap(), &s).unwrap();
            assert!(psi2_critical_report(&p, a).unwrap().passed());
            let m = compose_genus0_after(&phi, &p.curve, &p.value).unwrap();
            assert_eq!(m.passport().to_string(), expected);
        }
    }

    #[test]
    fn degenerate_quadratic() {
        let q = NumberField::rationals();
        let e = |n| FieldElement::from_int(&q, n);
        assert!(matches!(make_psi2(&e(-4), &e(2)), Err(Error::DegenerateCover(_))));
    }
}
