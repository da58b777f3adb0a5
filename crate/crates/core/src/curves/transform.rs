use super::{FfElem, SuperellipticCurve};
use crate::error::{Error, Result};

/// Source coordinates `x, y` written as functions on the target curve.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveTransformation {
    pub source: SuperellipticCurve,
    pub target: SuperellipticCurve,
    pub x: FfElem,
    pub y: FfElem,
}

impl CurveTransformation {
    pub fn new(source: SuperellipticCurve, target: SuperellipticCurve, x: FfElem, y: FfElem) -> Result<Self> {
        for e in [&x, &y] {
            if e.n() != target.n() || e.curve_poly() != target.f() {
                return Err(Error::CurveMismatch("substitution does not live on the target curve".into()));
            }
        }
        Ok(CurveTransformation { source, target, x, y })
    }

    /// `yⁿ − f(x)` pulled back to the target's function field.
    pub fn residual(&self) -> Result<FfElem> {
        let lhs = self.y.pow(self.source.n() as i64)?;
        let rhs = self.x.eval_poly(self.source.f())?;
        lhs.try_sub(&rhs)
    }

    /// True iff the source equation vanishes identically on the target and `x` is non-constant.
    pub fn verify(&self) -> Result<bool> {
        let nonconstant = !(self.x.is_x_only() && self.x.comp(0).is_constant());
        Ok(nonconstant && self.residual()?.is_zero())
    }
}

pub fn verify_transformation(t: &CurveTransformation) -> Result<bool> {
    t.verify()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, NumberField};
    use crate::expr::{parse_poly, parse_ratfun};

    #[test]
    fn identity_substitution() {
        let k = NumberField::rationals();
        let c = SuperellipticCurve::new(3, parse_poly(&k, "x", "x^2-x").unwrap()).unwrap();
        let x = FfElem::x(3, c.f());
        let y = FfElem::y(3, c.f());
        let t = CurveTransformation::new(c.clone(), c.clone(), x, y).unwrap();
        assert!(t.verify().unwrap());
    }

    #[test]
    fn omega_isomorphism_and_printed_sign() {
        let k = NumberField::new(vec![int(1), int(1), int(1)], "w").unwrap();
        let src = SuperellipticCurve::new(2, parse_poly(&k, "x", "(x^3-9x-9)(x+1-w)").unwrap()).unwrap();
        let tgt = SuperellipticCurve::new(2, parse_poly(&k, "X", "X^3+1+w").unwrap()).unwrap();
        let g = tgt.f().clone();
        let y = FfElem::new(2, &g, vec![parse_ratfun(&k, "X", "0").unwrap(), parse_ratfun(&k, "X", "3w/(X+1)^2").unwrap()]);
        let good = FfElem::from_ratfun(2, &g, parse_ratfun(&k, "X", "(w-1)(X+1+w)/(X+1)").unwrap());
        let printed = FfElem::from_ratfun(2, &g, parse_ratfun(&k, "X", "(w-1)(X+1-w)/(X+1)").unwrap());
        assert!(CurveTransformation::new(src.clone(), tgt.clone(), good, y.clone()).unwrap().verify().unwrap());
        assert!(!CurveTransformation::new(src, tgt, printed, y).unwrap().verify().unwrap());
    }
}
