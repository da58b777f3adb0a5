use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{FieldElement, Rational};
use crate::error::{Error, Result};

/// Q(α) presented by the monic minimal polynomial of α.
///
/// Irreducibility is trusted, not checked. A reducible minimal polynomial
/// shows up later as a zero-divisor error during inversion.
#[derive(Debug)]
pub struct NumberField {
    minpoly: Vec<Rational>,
    generator: String,
}

pub type Field = Arc<NumberField>;

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.minpoly == other.minpoly
    }
}

impl Eq for NumberField {}

impl NumberField {
    pub fn new(minpoly: Vec<Rational>, generator: impl Into<String>) -> Result<Field> {
        let generator = generator.into();
        if minpoly.len() < 2 {
            return Err(Error::InvalidField(
                "minimal polynomial must have degree at least 1".into(),
            ));
        }
        if !minpoly.last().is_some_and(|c| c.is_one()) {
            return Err(Error::InvalidField("minimal polynomial must be monic".into()));
        }
        if generator.is_empty() || !generator.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(Error::InvalidField(format!("bad generator name {generator:?}")));
        }
        Ok(Arc::new(NumberField { minpoly, generator }))
    }

    /// The rational numbers, encoded by the minimal polynomial t.
    pub fn rationals() -> Field {
        Arc::new(NumberField {
            minpoly: vec![Rational::zero(), Rational::one()],
            generator: "t".into(),
        })
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    /// Ascending coefficients, monic.
    pub fn minpoly(&self) -> &[Rational] {
        &self.minpoly
    }

    pub fn generator_name(&self) -> &str {
        &self.generator
    }

    pub fn generator(self: &Arc<Self>) -> FieldElement {
        let mut coords = vec![Rational::zero(); self.degree()];
        if self.degree() == 1 {
            coords[0] = -self.minpoly[0].clone();
        } else {
            coords[1] = Rational::one();
        }
        FieldElement::from_coords_unchecked(self, coords)
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "Q");
        }
        let g = &self.generator;
        let mut terms = Vec::new();
        for (k, c) in self.minpoly.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => g.clone(),
                _ => format!("{g}^{k}"),
            };
            terms.push(match k {
                0 => c.to_string(),
                _ if c.is_one() => mono,
                _ if (-c).is_one() => format!("-{mono}"),
                _ => format!("{c}*{mono}"),
            });
        }
        write!(f, "Q({g}) with {} = 0", terms.join(" + ").replace("+ -", "- "))
    }
}

/// Creates Q[t]/(m(t)) with generator name `a`.
pub fn field_create(minpoly: &[Rational]) -> Result<Field> {
    NumberField::new(minpoly.to_vec(), "a")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    #[test]
    fn degree_one_is_q() {
        let q = field_create(&[int(0), int(1)]).unwrap();
        assert!(q.is_rational());
        assert_eq!(*q, *NumberField::rationals());
    }

    #[test]
    fn rejects_bad_minpolys() {
        assert!(matches!(field_create(&[]), Err(Error::InvalidField(_))));
        assert!(matches!(field_create(&[int(1)]), Err(Error::InvalidField(_))));
        assert!(matches!(field_create(&[int(15), int(0), int(2)]), Err(Error::InvalidField(_))));
    }

    #[test]
    fn cubic_field() {
        let k = field_create(&[int(15), int(5), int(-1), int(1)]).unwrap();
        assert_eq!(k.degree(), 3);
        assert_eq!(k.to_string(), "Q(a) with a^3 - a^2 + 5*a + 15 = 0");
    }
}
