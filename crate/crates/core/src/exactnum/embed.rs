use num_complex::{Complex, Complex64};

use super::{Field, FieldElement, NumberField};
use crate::error::{Error, Result};
use crate::numeric::{c_to_f64, cabs, cdist, poly_roots, sort_lex, DoubleDouble, Real};

/// A complex embedding of a number field: α sent to one root of its minimal polynomial.
#[derive(Debug, Clone)]
pub struct Embedding<T: Real> {
    field: Field,
    index: usize,
    root: Complex<T>,
}

impl NumberField {
    /// Roots of the minimal polynomial in (real, imaginary) lexicographic order.
    ///
    /// Fails when two roots cannot be told apart at `precision_bits`.
    pub fn sorted_roots<T: Real>(&self, precision_bits: u32) -> Result<Vec<Complex<T>>> {
        let coeffs: Vec<Complex<T>> = self
            .minpoly()
            .iter()
            .map(|c| Complex::new(T::from_rational(c), T::zero()))
            .collect();
        let mut roots = poly_roots(&coeffs)?;
        let bits = precision_bits.min(T::MANTISSA_BITS);
        let sep = 2f64.powi(-(bits as i32) / 2);
        let scale = 1.0 + roots.iter().map(|r| cabs(*r).to_f64()).fold(0.0, f64::max);
        for i in 0..roots.len() {
            for j in 0..i {
                if cdist(roots[i], roots[j]).to_f64() < sep * scale {
                    return Err(Error::Precision(format!(
                        "roots of the minimal polynomial of {self} are not separated at {precision_bits} bits"
                    )));
                }
            }
        }
        sort_lex(&mut roots, sep);
        Ok(roots)
    }
}

impl<T: Real> Embedding<T> {
    pub fn new(field: &Field, index: usize, precision_bits: u32) -> Result<Self> {
        if index >= field.degree() {
            return Err(Error::InvalidInput(format!(
                "root index {index} out of range for a degree {} field",
                field.degree()
            )));
        }
        let roots = field.sorted_roots::<T>(precision_bits)?;
        Ok(Embedding { field: field.clone(), index, root: roots[index] })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn root(&self) -> Complex<T> {
        self.root
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn apply(&self, a: &FieldElement) -> Complex<T> {
        debug_assert!(a.field() == &self.field || a.field().is_rational());
        if a.field().is_rational() {
            return Complex::new(T::from_rational(&a.coords()[0]), T::zero());
        }
        let mut acc = Complex::new(T::zero(), T::zero());
        for c in a.coords().iter().rev() {
            acc = acc * self.root + Complex::new(T::from_rational(c), T::zero());
        }
        acc
    }
}

/// Complex value of `a` under the `root_index`-th embedding, computed with at
/// least `precision` bits (f64 up to 53 bits, double-double beyond).
pub fn embed(a: &FieldElement, root_index: usize, precision: u32) -> Result<Complex64> {
    if precision <= f64::MANTISSA_BITS {
        let e = Embedding::<f64>::new(a.field(), root_index, precision)?;
        Ok(e.apply(a))
    } else {
        let e = Embedding::<DoubleDouble>::new(a.field(), root_index, precision)?;
        Ok(c_to_f64(e.apply(a)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use proptest::prelude::*;

    fn sqrt_m15() -> Field {
        NumberField::new(vec![int(15), int(0), int(1)], "s").unwrap()
    }

    fn xi() -> Field {
        NumberField::new(vec![int(15), int(5), int(-1), int(1)], "xi").unwrap()
    }

    #[test]
    fn sqrt_minus_fifteen() {
        let k = sqrt_m15();
        let v0 = embed(&k.generator(), 0, 64).unwrap();
        let v1 = embed(&k.generator(), 1, 64).unwrap();
        assert!(v0.re.abs() < 1e-15 && (v0.im.abs() - 15f64.sqrt()).abs() < 1e-14);
        assert!(v0.im < 0.0 && v1.im > 0.0);
    }

    #[test]
    fn rational_one() {
        let q = NumberField::rationals();
        assert_eq!(embed(&FieldElement::one(&q), 0, 64).unwrap(), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn cubic_has_one_real_embedding() {
        let k = xi();
        let vals: Vec<Complex64> = (0..3).map(|i| embed(&k.generator(), i, 128).unwrap()).collect();
        assert_eq!(vals.iter().filter(|v| v.im.abs() < 1e-20).count(), 1);
        assert!((vals[1] - vals[2].conj()).norm() < 1e-12 || (vals[0] - vals[1].conj()).norm() < 1e-12);
    }

    #[test]
    fn bad_index_and_low_precision() {
        let k = sqrt_m15();
        assert!(embed(&k.generator(), 2, 64).is_err());
        let close = NumberField::new(vec![rat(-1, 1 << 30), int(0), int(1)], "e").unwrap();
        assert!(matches!(embed(&close.generator(), 0, 16), Err(Error::Precision(_))));
        assert!(embed(&close.generator(), 0, 106).is_ok());
    }

    proptest! {
        #[test]
        fn embedding_is_a_ring_homomorphism(
            a in prop::collection::vec(-20i64..20, 3),
            b in prop::collection::vec(-20i64..20, 3),
            idx in 0usize..3,
        ) {
            let k = xi();
            let fa = FieldElement::new(&k, a.iter().map(|&v| int(v)).collect());
            let fb = FieldElement::new(&k, b.iter().map(|&v| int(v)).collect());
            let e = Embedding::<DoubleDouble>::new(&k, idx, 128).unwrap();
            let lhs = e.apply(&(&fa * &fb));
            let rhs = e.apply(&fa) * e.apply(&fb);
            let scale = 1.0 + cabs(lhs).to_f64();
            prop_assert!(cabs(lhs - rhs).to_f64() < 1e-25 * scale);
        }
    }
}
