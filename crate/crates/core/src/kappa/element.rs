use crate::clifford::Multivector;
use crate::error::{CliffordError, KappaError};
use crate::kappa::basis::{bare_blade, lambda_weight, Orientation, DIM, PSEUDO};
use crate::kappa::table::numeric_table;
use crate::Field;

/// Element `X₀ + X₁ λe_xe_y + X₂ λe_ze_x + X₃ λe_ye_z + X₄ λe_xe_∞ + X₅ λe_ye_∞
/// + X₆ λe_ze_∞ + X₇ λI₃e_∞` of the even subalgebra of Cl(4,0).
#[derive(Debug, Clone, PartialEq)]
pub struct KElement<F: Field> {
    pub lambda: Orientation,
    pub coeffs: [F; DIM],
}

impl<F: Field> KElement<F> {
    pub fn new(lambda: Orientation, coeffs: [F; DIM]) -> Self {
        Self { lambda, coeffs }
    }

    pub fn zero(lambda: Orientation) -> Self {
        Self::new(lambda, std::array::from_fn(|_| F::zero()))
    }

    pub fn one(lambda: Orientation) -> Self {
        Self::basis(lambda, 0)
    }

    pub fn basis(lambda: Orientation, index: usize) -> Self {
        let mut x = Self::zero(lambda);
        x.coeffs[index] = F::one();
        x
    }

    pub fn from_i64s(lambda: Orientation, values: [i64; DIM]) -> Self {
        Self::new(lambda, values.map(F::from_i64))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Field::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self, KappaError> {
        self.same_orientation(other)?;
        Ok(Self::new(self.lambda, std::array::from_fn(|i| self.coeffs[i].add(&other.coeffs[i]))))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, KappaError> {
        self.same_orientation(other)?;
        Ok(Self::new(self.lambda, std::array::from_fn(|i| self.coeffs[i].sub(&other.coeffs[i]))))
    }

    pub fn scale(&self, k: &F) -> Self {
        Self::new(self.lambda, std::array::from_fn(|i| self.coeffs[i].mul(k)))
    }

    fn same_orientation(&self, other: &Self) -> Result<(), KappaError> {
        if self.lambda == other.lambda {
            Ok(())
        } else {
            Err(KappaError::OrientationMismatch { left: self.lambda, right: other.lambda })
        }
    }

    /// Table-driven product.
    pub fn kproduct(&self, other: &Self) -> Result<Self, KappaError> {
        self.same_orientation(other)?;
        let table = numeric_table(self.lambda);
        let mut terms: [Vec<(i8, &F, &F)>; DIM] = std::array::from_fn(|_| Vec::with_capacity(DIM));
        for (i, xi) in self.coeffs.iter().enumerate() {
            for (j, yj) in other.coeffs.iter().enumerate() {
                let (k, sign) = table[i][j];
                terms[k].push((sign, xi, yj));
            }
        }
        Ok(Self::new(self.lambda, terms.map(|t| F::signed_product_sum(&t))))
    }

    /// Reverse: bivector coefficients X₁..X₆ change sign, X₀ and X₇ do not.
    pub fn reverse_k(&self) -> Self {
        Self::new(
            self.lambda,
            std::array::from_fn(|i| if i == 0 || i == PSEUDO { self.coeffs[i].clone() } else { self.coeffs[i].neg() }),
        )
    }

    pub fn embed_to_cl40(&self) -> Result<Multivector<F>, CliffordError> {
        let mut coeffs = vec![F::zero(); 16];
        for (i, c) in self.coeffs.iter().enumerate() {
            let (sign, blade) = bare_blade(i);
            coeffs[blade.mask() as usize] = c.scale_i(sign * self.lambda.pow(lambda_weight(i)));
        }
        Multivector::from_coeffs(4, coeffs)
    }

    /// Inverse of [`KElement::embed_to_cl40`]; odd-grade content is an error.
    pub fn from_cl40(mv: &Multivector<F>, lambda: Orientation) -> Result<Self, KappaError> {
        if mv.dim() != 4 {
            return Err(KappaError::NotCl40(mv.dim()));
        }
        if let Some((blade, coeff)) = mv.terms().find(|(b, _)| b.grade() % 2 == 1) {
            return Err(KappaError::OutsideSpan { mask: blade.mask(), coeff: coeff.format_coeff() });
        }
        let coeffs = std::array::from_fn(|i| {
            let (sign, blade) = bare_blade(i);
            mv.coeff(blade).scale_i(sign * lambda.pow(lambda_weight(i)))
        });
        Ok(Self::new(lambda, coeffs))
    }

    /// `-X₀X₇ + λ(X₁X₆ + X₂X₅ + X₃X₄)`; zero exactly when `q_r q_d† + q_d q_r† = 0`.
    pub fn constraint_f(&self) -> F {
        let c = &self.coeffs;
        let paired = c[1].mul(&c[6]).add(&c[2].mul(&c[5])).add(&c[3].mul(&c[4]));
        let paired = paired.scale_i(self.lambda.value());
        paired.sub(&c[0].mul(&c[7]))
    }

    /// Definition-(a) norm squared: `Σ X_μ²`, the scalar part of `X X†`.
    pub fn norm_a_sq(&self) -> F {
        self.coeffs.iter().fold(F::zero(), |acc, c| acc.add(&c.mul(c)))
    }

    /// Definition-(a) norm, always defined.
    pub fn norm_a(&self) -> f64 {
        self.norm_a_sq().to_f64().sqrt()
    }

    /// Overwrites one dual coefficient so that `constraint_f` vanishes exactly.
    ///
    /// The constraint is `Σ c_p a_p b_p` over the pairs (X₀,X₇), (X₁,X₆),
    /// (X₂,X₅), (X₃,X₄) with `c = (-1, λ, λ, λ)`; the `b` of the first pair
    /// with nonzero `a` is solved for. If every `a` is zero the constraint
    /// already holds.
    pub fn solve_constraint(&self) -> Self {
        const PAIRS: [(usize, usize); 4] = [(0, 7), (1, 6), (2, 5), (3, 4)];
        let weight = |p: usize| if p == 0 { -1 } else { self.lambda.value() };
        let Some(pivot) = PAIRS.iter().position(|&(a, _)| !self.coeffs[a].is_zero()) else {
            return self.clone();
        };
        let rest = PAIRS
            .iter()
            .enumerate()
            .filter(|(p, _)| *p != pivot)
            .fold(F::zero(), |acc, (p, &(a, b))| {
                acc.add(&self.coeffs[a].mul(&self.coeffs[b]).scale_i(weight(p)))
            });
        let (a, b) = PAIRS[pivot];
        // c·a·b = -rest  =>  b = -rest · c / a, with c = ±1.
        let solved = rest.neg().scale_i(weight(pivot)).div(&self.coeffs[a]);
        let mut out = self.clone();
        out.coeffs[b] = solved;
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type K = KElement<Rational>;
    const POS: Orientation = Orientation::Positive;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn identity_is_neutral() {
        let y = K::from_i64s(POS, [1, -2, 3, 0, 5, -1, 2, 7]);
        assert_eq!(K::one(POS).kproduct(&y).unwrap(), y);
        assert_eq!(y.kproduct(&K::one(POS)).unwrap(), y);
    }

    #[test]
    fn bivector_squares_to_minus_one() {
        for lambda in Orientation::BOTH {
            let e = K::basis(lambda, 1);
            assert_eq!(e.kproduct(&e).unwrap(), K::one(lambda).scale(&q(-1, 1)));
        }
    }

    #[test]
    fn orientation_mismatch() {
        let a = K::one(Orientation::Positive);
        let b = K::one(Orientation::Negative);
        assert!(matches!(a.kproduct(&b), Err(KappaError::OrientationMismatch { .. })));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(K::one(POS).reverse_k(), K::one(POS));
        assert_eq!(K::basis(POS, 1).reverse_k(), K::basis(POS, 1).scale(&q(-1, 1)));
        assert_eq!(K::basis(POS, 7).reverse_k(), K::basis(POS, 7));
    }

    #[test]
    fn embedding_matches_weighted_basis() {
        for lambda in Orientation::BOTH {
            for i in 0..DIM {
                let via_words = crate::kappa::weighted_basis::<Rational>(i, lambda).unwrap();
                assert_eq!(K::basis(lambda, i).embed_to_cl40().unwrap(), via_words);
            }
        }
    }

    #[test]
    fn reverse_agrees_with_cl40() {
        for lambda in Orientation::BOTH {
            let x = K::from_i64s(lambda, [1, 2, 3, 4, 5, 6, 7, 8]);
            let via = K::from_cl40(&x.embed_to_cl40().unwrap().reverse(), lambda).unwrap();
            assert_eq!(via, x.reverse_k());
        }
    }

    #[test]
    fn embedding_round_trip_and_rejects_odd() {
        for lambda in Orientation::BOTH {
            let x = K::from_i64s(lambda, [1, -2, 3, -4, 5, -6, 7, -8]);
            assert_eq!(K::from_cl40(&x.embed_to_cl40().unwrap(), lambda).unwrap(), x);
        }
        let ex = Multivector::<Rational>::from_generators(4, &[0]).unwrap();
        assert!(matches!(K::from_cl40(&ex, POS), Err(KappaError::OutsideSpan { mask: 1, .. })));
    }

    #[test]
    fn constraint_values() {
        for i in 0..DIM {
            assert!(K::basis(POS, i).constraint_f().is_zero());
        }
        // X₀ = X₇ = 1/2 gives -1/4; scaled by 2 (X₀ = X₇ = 1/√2) this is -1/2.
        let mut x = K::zero(POS);
        x.coeffs[0] = q(1, 2);
        x.coeffs[7] = q(1, 2);
        assert_eq!(x.constraint_f(), q(-1, 4));
        let xf = KElement::<f64>::new(POS, {
            let mut c = [0.0; DIM];
            c[0] = std::f64::consts::FRAC_1_SQRT_2;
            c[7] = std::f64::consts::FRAC_1_SQRT_2;
            c
        });
        assert!((xf.constraint_f() + 0.5).abs() < 1e-15);
    }

    #[test]
    fn norm_a_examples() {
        assert_eq!(K::zero(POS).norm_a(), 0.0);
        for i in 0..DIM {
            assert_eq!(K::basis(POS, i).norm_a(), 1.0);
        }
    }

    #[test]
    fn solve_constraint_hits_zero() {
        for lambda in Orientation::BOTH {
            let x = K::new(lambda, [q(1, 3), q(-2, 5), q(7, 2), q(1, 1), q(-3, 4), q(2, 9), q(5, 7), q(0, 1)]);
            assert!(x.solve_constraint().constraint_f().is_zero());
            let mut y = x.clone();
            y.coeffs[0] = q(0, 1);
            y.coeffs[1] = q(0, 1);
            let solved = y.solve_constraint();
            assert!(solved.constraint_f().is_zero());
            assert_eq!(solved.coeffs[7], y.coeffs[7]);
        }
        let z = K::basis(POS, 7);
        assert_eq!(z.solve_constraint(), z);
    }
}
