//! Genus-0 Belyi maps: fibers over 0, 1, ∞ and the Riemann–Hurwitz certificate.

mod passport;

pub use passport::{canonical_passport, BelyiValue, Passport};

use crate::error::{Error, Result};
use crate::exactnum::{Field, FieldElement};
use crate::polyalg::{squarefree_decompose, Polynomial, RationalFunction};
use crate::report::VerificationReport;
use crate::scalar::Scalar;

/// Polynomial whose roots are the finite points of the fiber over `v`.
pub fn fiber_polynomial<K: Scalar>(map: &RationalFunction<K>, v: BelyiValue) -> Polynomial<K> {
    match v {
        BelyiValue::Zero => map.num().clone(),
        BelyiValue::Infinity => map.den().clone(),
        BelyiValue::One => map.num() - map.den(),
    }
}

/// Ramification index of the point `x = ∞` over `v` (0 when ∞ is not in that fiber).
pub fn infinity_multiplicity<K: Scalar>(map: &RationalFunction<K>, v: BelyiValue) -> usize {
    map.degree() - fiber_polynomial(map, v).deg0()
}

/// Multiplicities of all points over `v`, the point at infinity included.
pub fn fiber_structure<K: Scalar>(map: &RationalFunction<K>, v: BelyiValue) -> Result<Vec<usize>> {
    if map.is_constant() {
        return Err(Error::InvalidInput("fiber structure of a constant map".into()));
    }
    let p = fiber_polynomial(map, v);
    let mut out = Vec::new();
    for (g, e) in squarefree_decompose(&p)?.parts {
        out.extend(std::iter::repeat(e).take(g.deg0()));
    }
    let inf = infinity_multiplicity(map, v);
    if inf > 0 {
        out.push(inf);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

pub fn passport<K: Scalar>(map: &RationalFunction<K>) -> Result<Passport> {
    Ok(Passport::new(
        fiber_structure(map, BelyiValue::Infinity)?,
        fiber_structure(map, BelyiValue::Zero)?,
        fiber_structure(map, BelyiValue::One)?,
    ))
}

/// Outcome of the Riemann–Hurwitz count for a rational map of the line.
#[derive(Debug, Clone, PartialEq)]
pub struct Belyi0Verdict {
    pub passport: Passport,
    pub degree: usize,
    pub ramification_total: usize,
    pub is_belyi: bool,
}

impl Belyi0Verdict {
    /// `2d − 2 − Σ(e−1)`: ramification hidden over values outside {0, 1, ∞}.
    pub fn deficit(&self) -> usize {
        (2 * self.degree - 2).saturating_sub(self.ramification_total)
    }

    pub fn to_report(&self, entry: &str) -> VerificationReport {
        let mut r = VerificationReport::new(entry);
        r.check(
            "Belyi (ramification only over 0, 1, ∞)",
            self.is_belyi,
            format!(
                "degree {}, Σ(e−1) = {} vs 2d−2 = {}",
                self.degree,
                self.ramification_total,
                2 * self.degree - 2
            ),
        );
        r
    }
}

/// A map of the line is Belyi iff its ramification over {0, 1, ∞} already totals 2d − 2.
pub fn verify_belyi0<K: Scalar>(map: &RationalFunction<K>) -> Result<Belyi0Verdict> {
    let passport = passport(map)?;
    let degree = map.degree();
    let ramification_total = passport.ramification_total();
    Ok(Belyi0Verdict { passport, degree, ramification_total, is_belyi: ramification_total == 2 * degree - 2 })
}

/// A verified genus-0 Belyi map over a number field.
#[derive(Debug, Clone, PartialEq)]
pub struct Genus0BelyiMap {
    map: RationalFunction<FieldElement>,
    passport: Passport,
}

impl Genus0BelyiMap {
    pub fn new(map: RationalFunction<FieldElement>) -> Result<Self> {
        let v = verify_belyi0(&map)?;
        if !v.is_belyi {
            return Err(Error::NotBelyi(format!(
                "ramification over 0, 1, ∞ falls short of 2d−2 by {}",
                v.deficit()
            )));
        }
        Ok(Genus0BelyiMap { map, passport: v.passport })
    }

    pub fn map(&self) -> &RationalFunction<FieldElement> {
        &self.map
    }

    pub fn passport(&self) -> &Passport {
        &self.passport
    }

    pub fn field(&self) -> &Field {
        self.map.ctx()
    }

    pub fn degree(&self) -> usize {
        self.map.degree()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QPoly, QRatFun};

    fn q(cs: &[i64]) -> QPoly {
        QPoly::from_ints(&(), cs)
    }

    /// (x³+1)² / (4x³)
    fn phi1() -> QRatFun {
        QRatFun::new(q(&[1, 0, 0, 2, 0, 0, 1]), q(&[0, 0, 0, 4])).unwrap()
    }

    #[test]
    fn phi1_fibers() {
        let m = phi1();
        assert_eq!(fiber_structure(&m, BelyiValue::Infinity).unwrap(), vec![3, 3]);
        assert_eq!(fiber_structure(&m, BelyiValue::Zero).unwrap(), vec![2, 2, 2]);
        assert_eq!(passport(&m).unwrap().to_string(), "3^2/2^3/2^3");
        let v = verify_belyi0(&m).unwrap();
        assert!(v.is_belyi);
        assert_eq!(v.ramification_total, 10);
    }

    #[test]
    fn squaring_and_identity() {
        let z2 = QRatFun::from_poly(q(&[0, 0, 1]));
        assert_eq!(fiber_structure(&z2, BelyiValue::One).unwrap(), vec![1, 1]);
        assert_eq!(passport(&z2).unwrap().to_string(), "2/2/1^2");
        assert!(verify_belyi0(&z2).unwrap().is_belyi);
        assert_eq!(passport(&QRatFun::x(&())).unwrap().to_string(), "1/1/1");
    }

    #[test]
    fn cubic_with_hidden_critical_values() {
        let m = QRatFun::from_poly(q(&[0, -3, 0, 1]));
        let v = verify_belyi0(&m).unwrap();
        assert!(!v.is_belyi);
        assert!(v.ramification_total < 4);
        assert!(fiber_structure(&QRatFun::constant(crate::exactnum::int(2)), BelyiValue::Zero).is_err());
    }

    #[test]
    fn inversion_keeps_the_passport() {
        let m = phi1();
        let inv = QRatFun::new(q(&[1]), q(&[0, 1])).unwrap();
        let a = passport(&m).unwrap();
        let b = passport(&m.compose(&inv).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
