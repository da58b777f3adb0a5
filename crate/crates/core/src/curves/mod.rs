//! Superelliptic curves `yⁿ = f(x)` with `n ∈ {2, 3}`.

mod divisor;
mod funcfield;
mod transform;
mod weierstrass;

pub use divisor::{divisor, fiber_orders, function_degree, genus1_passport, PlaceOrder};
pub use funcfield::FfElem;
pub use transform::{verify_transformation, CurveTransformation};
pub use weierstrass::{cubic_to_weierstrass, j_from_quartic_invariants, quartic_to_weierstrass, WeierstrassCurve};

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::{Field, FieldElement};
use crate::polyalg::{gcd, poly_from_json, poly_to_json};
use crate::scalar::Scalar;
use crate::KPoly;

#[derive(Debug, Clone, PartialEq)]
pub struct SuperellipticCurve {
    n: usize,
    f: KPoly,
}

/// Branch points of the projection to the x-line, kept symbolic.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchPoints {
    /// Monic squarefree polynomial whose roots are the finite branch points.
    pub finite: KPoly,
    pub at_infinity: bool,
}

impl BranchPoints {
    pub fn count(&self) -> usize {
        self.finite.deg0() + usize::from(self.at_infinity)
    }
}

impl SuperellipticCurve {
    pub fn new(n: usize, f: KPoly) -> Result<Self> {
        let d = f.deg0();
        let ok_range = match n {
            2 => (1..=4).contains(&d),
            3 => (1..=3).contains(&d),
            _ => return Err(Error::InvalidInput(format!("superelliptic exponent {n} not in {{2, 3}}"))),
        };
        if !ok_range {
            return Err(Error::InvalidInput(format!("degree {d} out of range for y^{n}")));
        }
        if gcd(&f, &f.derivative()).deg0() > 0 {
            return Err(Error::SingularCurve(format!("{f} is not squarefree")));
        }
        Ok(SuperellipticCurve { n, f })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn f(&self) -> &KPoly {
        &self.f
    }

    pub fn field(&self) -> &Field {
        self.f.ctx()
    }

    pub fn branch_points(&self) -> BranchPoints {
        BranchPoints { finite: self.f.monic(), at_infinity: self.f.deg0() % self.n != 0 }
    }

    /// Riemann–Hurwitz for the cyclic cover of prime degree: `2g − 2 = −2n + B(n − 1)`.
    pub fn genus(&self) -> i64 {
        let n = self.n as i64;
        let b = self.branch_points().count() as i64;
        (b * (n - 1) - 2 * n + 2) / 2
    }

    /// j-invariant of an elliptic curve `y² = f`, `deg f ∈ {3, 4}`.
    pub fn j_invariant(&self) -> Result<FieldElement> {
        if self.n > 2 && self.genus() == 1 {
            let j = if self.n == 4 { 1728 } else { 0 };
            return Ok(FieldElement::from_int(self.field(), j));
        }
        if self.n != 2 || !(3..=4).contains(&self.f.deg0()) {
            return Err(Error::InvalidInput("j-invariant needs y² = cubic or quartic".into()));
        }
        if self.f.deg0() == 3 {
            return Ok(cubic_to_weierstrass(&self.f)?.j_invariant());
        }
        if self.f.lc().is_some_and(|c| c.is_one_elem()) {
            let f = &self.f;
            let (w, _) = quartic_to_weierstrass(&f.coeff(3), &f.coeff(2), &f.coeff(1), &f.coeff(0))?;
            return Ok(w.j_invariant());
        }
        j_from_quartic_invariants(&self.f)
    }

    pub fn x(&self) -> FfElem {
        FfElem::x(self.n, &self.f)
    }

    pub fn y(&self) -> FfElem {
        FfElem::y(self.n, &self.f)
    }

    pub fn to_json(&self) -> Value {
        json!({ "n": self.n, "f": poly_to_json(&self.f) })
    }

    pub fn from_json(field: &Field, v: &Value, location: &str) -> Result<Self> {
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Schema { location: location.into(), message: "missing integer \"n\"".into() })?;
        let f = v
            .get("f")
            .ok_or_else(|| Error::Schema { location: location.into(), message: "missing \"f\"".into() })?;
        let f = poly_from_json(field, f, &format!("{location}.f"))?;
        SuperellipticCurve::new(n as usize, f)
    }
}

impl fmt::Display for SuperellipticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^{} = {}", self.n, self.f)
    }
}

pub fn cover_branch_points(c: &SuperellipticCurve) -> BranchPoints {
    c.branch_points()
}

pub fn cover_genus(c: &SuperellipticCurve) -> i64 {
    c.genus()
}

pub fn j_invariant(c: &SuperellipticCurve) -> Result<FieldElement> {
    c.j_invariant()
}
