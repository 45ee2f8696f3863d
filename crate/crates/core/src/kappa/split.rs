//! Split-complex values `s + p ε` with ε² = +1, the quadratic form
//! `X X†`, and the definition-(b) norm built on it.

use serde::Serialize;

use crate::error::{KappaError, SplitResidual};
use crate::kappa::basis::{Orientation, DIM, PSEUDO};
use crate::kappa::element::KElement;
use crate::Field;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SplitScalar<F: Field> {
    /// Scalar part.
    pub s: F,
    /// ε part.
    pub p: F,
}

impl<F: Field> SplitScalar<F> {
    pub fn new(s: F, p: F) -> Self {
        Self { s, p }
    }

    pub fn one() -> Self {
        Self::new(F::one(), F::zero())
    }

    pub fn is_scalar(&self) -> bool {
        self.p.is_zero()
    }

    /// Embeds `s + p ε` into the algebra.
    pub fn to_element(&self, lambda: Orientation) -> KElement<F> {
        let mut x = KElement::zero(lambda);
        x.coeffs[0] = self.s.clone();
        x.coeffs[PSEUDO] = pseudo_coeff_from_epsilon(&self.p);
        x
    }
}

/// `(s₁ + p₁ε)(s₂ + p₂ε) = (s₁s₂ + p₁p₂) + (s₁p₂ + p₁s₂)ε`.
pub fn split_mul<F: Field>(a: &SplitScalar<F>, b: &SplitScalar<F>) -> SplitScalar<F> {
    SplitScalar::new(
        a.s.mul(&b.s).add(&a.p.mul(&b.p)),
        a.s.mul(&b.p).add(&a.p.mul(&b.s)),
    )
}

// ε = -λ I₃ e_∞. The basis coefficient X₇ sits on λ I₃ e_∞, so a value
// `p ε` contributes `-p` to X₇ for either orientation. In Cl(4,0) blade
// terms the coefficient on I₃ e_∞ is `λ X₇ = -λ p`. Every ε conversion in
// the crate goes through the two functions below.

/// ε coordinate of an element whose `λ I₃ e_∞` coefficient is `x7`.
pub fn epsilon_from_pseudo_coeff<F: Field>(x7: &F) -> F {
    x7.neg()
}

/// `λ I₃ e_∞` coefficient carrying the ε coordinate `p`.
pub fn pseudo_coeff_from_epsilon<F: Field>(p: &F) -> F {
    p.neg()
}

/// The element ε itself.
pub fn epsilon<F: Field>(lambda: Orientation) -> KElement<F> {
    SplitScalar::new(F::zero(), F::one()).to_element(lambda)
}

/// Default tolerance used by [`qform`] for float elements: relative to the
/// scale of `Σ X_μ²`. Exact fields ignore it.
pub fn default_tolerance<F: Field>(x: &KElement<F>) -> f64 {
    1e-12 * (1.0 + x.norm_a_sq().to_f64())
}

/// `X X†` as a split scalar, checking that the six bivector coefficients
/// vanish (exactly, or within `tol` for floats).
pub fn qform_with_tol<F: Field>(x: &KElement<F>, tol: f64) -> Result<SplitScalar<F>, KappaError> {
    let prod = x.kproduct(&x.reverse_k())?;
    for index in 1..DIM - 1 {
        let c = &prod.coeffs[index];
        if !c.is_negligible(tol) {
            return Err(KappaError::QuadraticFormResidual { index, coeff: c.format_coeff() });
        }
    }
    let [s, .., x7] = prod.coeffs;
    Ok(SplitScalar::new(s, epsilon_from_pseudo_coeff(&x7)))
}

pub fn qform<F: Field>(x: &KElement<F>) -> Result<SplitScalar<F>, KappaError> {
    qform_with_tol(x, default_tolerance(x))
}

/// Error returned by the definition-(b) norm family.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NormError<F: Field> {
    #[error(transparent)]
    Residual(#[from] SplitResidual<F>),
    #[error(transparent)]
    Kappa(#[from] KappaError),
}

/// Squared definition-(b) norm: `X X†` when it is already a pure scalar.
///
/// Partial by construction; an ε part above `tol` is reported with the full
/// split value rather than discarded.
pub fn norm_b_sq<F: Field>(x: &KElement<F>, tol: f64) -> Result<F, NormError<F>> {
    let value = qform(x)?;
    if value.p.is_negligible(tol) {
        Ok(value.s)
    } else {
        Err(SplitResidual { value }.into())
    }
}

pub fn norm_b<F: Field>(x: &KElement<F>, tol: f64) -> Result<f64, NormError<F>> {
    norm_b_sq(x, tol).map(|s| s.to_f64().sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use std::f64::consts::FRAC_1_SQRT_2;

    const POS: Orientation = Orientation::Positive;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn sq(s: i64, p: i64) -> SplitScalar<Rational> {
        SplitScalar::new(q(s, 1), q(p, 1))
    }

    #[test]
    fn split_mul_examples() {
        assert_eq!(split_mul(&sq(1, 0), &sq(5, -3)), sq(5, -3));
        assert_eq!(split_mul(&sq(1, 1), &sq(1, -1)), sq(0, 0));
        assert_eq!(split_mul(&sq(2, 1), &sq(3, 2)), sq(8, 7));
    }

    #[test]
    fn qform_of_identity() {
        assert_eq!(qform(&KElement::<Rational>::one(POS)).unwrap(), sq(1, 0));
    }

    #[test]
    fn qform_of_scalar_plus_pseudo() {
        // X₀ = X₇ = 1/√2, λ = +1: X = (1 - ε)/√2, so X X† = (1 - ε)²/2 = 1 - ε.
        let mut x = KElement::<f64>::zero(POS);
        x.coeffs[0] = FRAC_1_SQRT_2;
        x.coeffs[7] = FRAC_1_SQRT_2;
        let v = qform(&x).unwrap();
        assert!((v.s - 1.0).abs() < 1e-15);
        assert!((v.p + 1.0).abs() < 1e-15);
        assert!((v.p - 2.0 * x.constraint_f()).abs() < 1e-15);
    }

    #[test]
    fn epsilon_squares_to_one_and_is_central() {
        for lambda in Orientation::BOTH {
            let e = epsilon::<Rational>(lambda);
            assert_eq!(e.kproduct(&e).unwrap(), KElement::one(lambda));
            assert_eq!(e.reverse_k(), e);
            for i in 0..DIM {
                let b = KElement::basis(lambda, i);
                assert_eq!(e.kproduct(&b).unwrap(), b.kproduct(&e).unwrap());
            }
        }
    }

    #[test]
    fn norm_b_on_basis_and_residual() {
        for i in 0..DIM {
            let b = KElement::<Rational>::basis(POS, i);
            assert_eq!(norm_b_sq(&b, 0.0).unwrap(), q(1, 1));
        }
        // (1 + ε)/2 has f_K = +1/8 ≠ 0.
        let z = SplitScalar::new(q(1, 2), q(1, 2)).to_element(POS);
        match norm_b_sq(&z, 0.0) {
            Err(NormError::Residual(r)) => assert_eq!(r.value, SplitScalar::new(q(1, 2), q(1, 2))),
            other => panic!("expected residual, got {other:?}"),
        }
    }

    #[test]
    fn norm_b_float_residual_sign() {
        // (1 + ε)/√2: ε part of X X† is +1.
        for lambda in Orientation::BOTH {
            let x = SplitScalar::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2).to_element(lambda);
            assert!((x.norm_a() - 1.0).abs() < 1e-15);
            match norm_b(&x, 1e-12) {
                Err(NormError::Residual(r)) => {
                    assert!((r.value.p - 1.0).abs() < 1e-15);
                    assert!((r.value.s - 1.0).abs() < 1e-15);
                }
                other => panic!("expected residual, got {other:?}"),
            }
        }
    }
}
