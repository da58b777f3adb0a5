use super::{CurveTransformation, FfElem, SuperellipticCurve};
use crate::error::{Error, Result};
use crate::exactnum::{Field, FieldElement};
use crate::polyalg::{discriminant, Polynomial, RationalFunction};
use crate::KPoly;

/// `Y² = X³ + b2·X² + b4·X + b6`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeierstrassCurve {
    pub b2: FieldElement,
    pub b4: FieldElement,
    pub b6: FieldElement,
}

impl WeierstrassCurve {
    pub fn new(b2: FieldElement, b4: FieldElement, b6: FieldElement) -> Result<Self> {
        let w = WeierstrassCurve { b2, b4, b6 };
        if w.discriminant().is_zero() {
            return Err(Error::SingularCurve(format!("{} has a repeated root", w.cubic())));
        }
        Ok(w)
    }

    pub fn field(&self) -> &Field {
        self.b2.field()
    }

    pub fn cubic(&self) -> KPoly {
        let k = self.field();
        Polynomial::new(k.clone(), vec![self.b6.clone(), self.b4.clone(), self.b2.clone(), FieldElement::one(k)])
    }

    /// Discriminant of the cubic on the right-hand side.
    pub fn discriminant(&self) -> FieldElement {
        discriminant(&self.cubic()).expect("cubic")
    }

    /// `256 (b2² − 3 b4)³ / disc`.
    pub fn j_invariant(&self) -> FieldElement {
        let k = self.field();
        let c = &(&self.b2 * &self.b2) - &(&FieldElement::from_int(k, 3) * &self.b4);
        let num = &FieldElement::from_int(k, 256) * &(&(&c * &c) * &c);
        num.try_div(&self.discriminant()).expect("nonsingular")
    }

    pub fn to_curve(&self) -> SuperellipticCurve {
        SuperellipticCurve::new(2, self.cubic()).expect("nonsingular cubic")
    }
}

/// Weierstrass model of `y² = c3·x³ + c2·x² + c1·x + c0` via `x = X/c3`, `y = Y/c3`.
pub fn cubic_to_weierstrass(f: &KPoly) -> Result<WeierstrassCurve> {
    if f.degree() != Some(3) {
        return Err(Error::InvalidInput("expected a cubic".into()));
    }
    let c3 = f.coeff(3);
    WeierstrassCurve::new(f.coeff(2), &f.coeff(1) * &c3, &(&f.coeff(0) * &c3) * &c3)
}

/// Weierstrass form of `y² = x⁴ + a x³ + b x² + c x + d`, with the substitution
/// expressing `x, y` in terms of `X, Y`.
pub fn quartic_to_weierstrass(
    a: &FieldElement,
    b: &FieldElement,
    c: &FieldElement,
    d: &FieldElement,
) -> Result<(WeierstrassCurve, CurveTransformation)> {
    let k = a.field().clone();
    let int = |n: i64| FieldElement::from_int(&k, n);
    let quartic = Polynomial::new(k.clone(), vec![d.clone(), c.clone(), b.clone(), a.clone(), int(1)]);
    let source = SuperellipticCurve::new(2, quartic)?;

    let a2m4b = &(a * a) - &(&int(4) * b);
    let ac = a * c;
    let b4 = &ac - &(&int(4) * d);
    let b6 = &(&a2m4b * d) + &(c * c);
    let w = WeierstrassCurve::new(b.clone(), b4.clone(), b6)?;
    let target = w.to_curve();
    let g = target.f().clone();

    let kx = |cs: Vec<FieldElement>| RationalFunction::from_poly(Polynomial::new(k.clone(), cs));
    let den = Polynomial::new(k.clone(), vec![-a2m4b.clone(), int(4)]);
    let den_r = RationalFunction::from_poly(den.clone());
    let den2_r = RationalFunction::from_poly(den.pow(2));

    // x = −(2Y + aX + 2c) / (4X − a² + 4b)
    let x = FfElem::new(
        2,
        &g,
        vec![
            kx(vec![-(&int(2) * c), -a.clone()]).try_div(&den_r)?,
            RationalFunction::constant(int(-2)).try_div(&den_r)?,
        ],
    );
    // Q = aY + 3X² + 2bX + ac + 4d
    let q0 = kx(vec![&ac + &(&int(4) * d), &int(2) * b, int(3)]);
    let q1 = RationalFunction::constant(a.clone());
    // y = (8cY − 4X³ + 4(ac−4d)X + 8c² + (a²−4b)Q) / (4X − a² + 4b)²
    let scale = RationalFunction::constant(a2m4b.clone());
    let y0 = &kx(vec![&int(8) * &(c * c), &int(4) * &b4, int(0), int(-4)]) + &(&scale * &q0);
    let y1 = &RationalFunction::constant(&int(8) * c) + &(&scale * &q1);
    let y = FfElem::new(2, &g, vec![y0.try_div(&den2_r)?, y1.try_div(&den2_r)?]);

    Ok((w, CurveTransformation::new(source, target, x, y)?))
}

/// j-invariant of `y² = f` (`deg f ∈ {3, 4}`) from the binary-quartic invariants
/// `I = 12ae − 3bd + c²`, `J = 72ace + 9bcd − 27ad² − 27eb² − 2c³`: `j = 6912 I³ / (4I³ − J²)`.
pub fn j_from_quartic_invariants(f: &KPoly) -> Result<FieldElement> {
    let deg = f.deg0();
    if !(3..=4).contains(&deg) {
        return Err(Error::InvalidInput(format!("j-invariant needs degree 3 or 4, got {deg}")));
    }
    let k = f.ctx();
    let int = |n: i64| FieldElement::from_int(k, n);
    let (a, b, c, d, e) = (f.coeff(4), f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0));
    let i = &(&(&int(12) * &(&a * &e)) - &(&int(3) * &(&b * &d))) + &(&c * &c);
    let j = &(&(&(&(&int(72) * &(&(&a * &c) * &e)) + &(&int(9) * &(&(&b * &c) * &d)))
        - &(&int(27) * &(&(&a * &d) * &d)))
        - &(&int(27) * &(&(&e * &b) * &b)))
        - &(&int(2) * &(&(&c * &c) * &c));
    let i3 = &(&i * &i) * &i;
    let den = &(&int(4) * &i3) - &(&j * &j);
    if den.is_zero() {
        return Err(Error::SingularCurve("quartic has a repeated root".into()));
    }
    (&int(6912) * &i3).try_div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int as q, rat, NumberField};
    use crate::expr::parse_poly;

    fn el(k: &Field, n: i64) -> FieldElement {
        FieldElement::from_int(k, n)
    }

    #[test]
    fn x4_minus_one() {
        let k = NumberField::rationals();
        let (w, t) = quartic_to_weierstrass(&el(&k, 0), &el(&k, 0), &el(&k, 0), &el(&k, -1)).unwrap();
        assert_eq!(w.cubic(), parse_poly(&k, "x", "x^3+4x").unwrap());
        assert_eq!(w.j_invariant().as_rational(), Some(q(1728)));
        assert!(t.verify().unwrap());
    }

    #[test]
    fn quartic_of_map_d() {
        let k = NumberField::rationals();
        let (w, t) = quartic_to_weierstrass(&el(&k, -18), &el(&k, 90), &el(&k, -18), &el(&k, 1)).unwrap();
        assert_eq!(w.cubic(), parse_poly(&k, "x", "x^3+90x^2+320x+288").unwrap());
        assert!(t.verify().unwrap());
        let other = cubic_to_weierstrass(&parse_poly(&k, "x", "x(x^2+42x-7)").unwrap()).unwrap();
        assert_eq!(w.j_invariant(), other.j_invariant());
        assert_eq!(w.j_invariant().as_rational(), Some(q(255 * 255 * 255)));
    }

    #[test]
    fn two_routes_agree() {
        let k = NumberField::rationals();
        for s in ["x^3-x", "(x+1)(x-1)(x-2)", "x(x^2+6x-3)", "x^4+6x^2+1", "3x^4-2x^3+x+5", "2x^3+x^2-1"] {
            let f = parse_poly(&k, "x", s).unwrap();
            let j2 = j_from_quartic_invariants(&f).unwrap();
            let j1 = if f.deg0() == 3 {
                cubic_to_weierstrass(&f).unwrap().j_invariant()
            } else if f.lc().unwrap().as_rational() == Some(q(1)) {
                quartic_to_weierstrass(&f.coeff(3), &f.coeff(2), &f.coeff(1), &f.coeff(0)).unwrap().0.j_invariant()
            } else {
                continue;
            };
            assert_eq!(j1, j2, "{s}");
        }
        let f = parse_poly(&k, "x", "(x+1)(x-1)(x-2)").unwrap();
        assert_eq!(j_from_quartic_invariants(&f).unwrap().as_rational(), Some(rat(28 * 28 * 28, 9)));
    }

    #[test]
    fn singular_cubic_rejected() {
        let k = NumberField::rationals();
        assert!(matches!(
            WeierstrassCurve::new(el(&k, 0), el(&k, 0), el(&k, 0)),
            Err(Error::SingularCurve(_))
        ));
    }
}
