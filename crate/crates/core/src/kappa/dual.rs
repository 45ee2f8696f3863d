//! Dual-quaternion view `Q = q_r + q_d ε` of an algebra element.

use crate::clifford::Multivector;
use crate::error::CliffordError;
use crate::kappa::basis::Orientation;
use crate::kappa::element::KElement;
use crate::kappa::split::SplitScalar;
use crate::Field;

/// Quaternion on the basis `1, λe_xe_y, λe_ze_x, λe_ye_z`.
///
/// With `i, j, k` the three λ-weighted bivectors, `i² = j² = k² = -1` and
/// `ij = λk`, `jk = λi`, `ki = λj`, so the orientation is part of the value.
#[derive(Debug, Clone, PartialEq)]
pub struct Quaternion<F: Field> {
    pub lambda: Orientation,
    pub coeffs: [F; 4],
}

impl<F: Field> Quaternion<F> {
    pub fn new(lambda: Orientation, coeffs: [F; 4]) -> Self {
        Self { lambda, coeffs }
    }

    pub fn zero(lambda: Orientation) -> Self {
        Self::new(lambda, std::array::from_fn(|_| F::zero()))
    }

    pub fn unit(lambda: Orientation, index: usize) -> Self {
        let mut q = Self::zero(lambda);
        q.coeffs[index] = F::one();
        q
    }

    /// The same quaternion as an algebra element (first four slots).
    pub fn to_element(&self) -> KElement<F> {
        let mut x = KElement::zero(self.lambda);
        x.coeffs[..4].clone_from_slice(&self.coeffs);
        x
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.lambda, std::array::from_fn(|i| self.coeffs[i].add(&other.coeffs[i])))
    }
}

pub fn qmul<F: Field>(a: &Quaternion<F>, b: &Quaternion<F>) -> Quaternion<F> {
    let [a0, a1, a2, a3] = &a.coeffs;
    let [b0, b1, b2, b3] = &b.coeffs;
    let l = a.lambda.value();
    let dot = a1.mul(b1).add(&a2.mul(b2)).add(&a3.mul(b3));
    let cross = [
        a2.mul(b3).sub(&a3.mul(b2)).scale_i(l),
        a3.mul(b1).sub(&a1.mul(b3)).scale_i(l),
        a1.mul(b2).sub(&a2.mul(b1)).scale_i(l),
    ];
    Quaternion::new(
        a.lambda,
        [
            a0.mul(b0).sub(&dot),
            a0.mul(b1).add(&b0.mul(a1)).add(&cross[0]),
            a0.mul(b2).add(&b0.mul(a2)).add(&cross[1]),
            a0.mul(b3).add(&b0.mul(a3)).add(&cross[2]),
        ],
    )
}

/// Reverse: the three bivector components change sign.
pub fn qconj<F: Field>(a: &Quaternion<F>) -> Quaternion<F> {
    let [a0, a1, a2, a3] = &a.coeffs;
    Quaternion::new(a.lambda, [a0.clone(), a1.neg(), a2.neg(), a3.neg()])
}

pub fn qnormsq<F: Field>(a: &Quaternion<F>) -> F {
    a.coeffs.iter().fold(F::zero(), |acc, c| acc.add(&c.mul(c)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct DualQuatView<F: Field> {
    pub q_r: Quaternion<F>,
    pub q_d: Quaternion<F>,
    pub lambda: Orientation,
}

impl<F: Field> DualQuatView<F> {
    /// `Q Q† = (q_r q_r† + q_d q_d†) + (q_r q_d† + q_d q_r†) ε`, computed
    /// entirely in quaternion arithmetic. Both brackets are real for any
    /// pair of quaternions, so only their scalar parts are returned.
    pub fn qform(&self) -> SplitScalar<F> {
        let rr = qmul(&self.q_r, &qconj(&self.q_r));
        let dd = qmul(&self.q_d, &qconj(&self.q_d));
        let rd = qmul(&self.q_r, &qconj(&self.q_d));
        let dr = qmul(&self.q_d, &qconj(&self.q_r));
        SplitScalar::new(rr.coeffs[0].add(&dd.coeffs[0]), rd.coeffs[0].add(&dr.coeffs[0]))
    }
}

/// Splits `X` into `q_r + q_d ε` with `q_r = (X₀, X₁, X₂, X₃)` and
/// `q_d = (-X₇, λX₆, λX₅, λX₄)`.
///
/// For λ = +1 this is `q_d = -X₇ + X₆ e_xe_y + X₅ e_ze_x + X₄ e_ye_z`. The λ
/// factors on the bivector slots come from writing `q_d` on the λ-weighted
/// basis; the identity `X = q_r + q_d ε` in Cl(4,0) fixes them.
pub fn to_dual_quaternion<F: Field>(x: &KElement<F>) -> DualQuatView<F> {
    let l = x.lambda.value();
    let c = &x.coeffs;
    DualQuatView {
        q_r: Quaternion::new(x.lambda, [c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()]),
        q_d: Quaternion::new(x.lambda, [c[7].neg(), c[6].scale_i(l), c[5].scale_i(l), c[4].scale_i(l)]),
        lambda: x.lambda,
    }
}

pub fn from_dual_quaternion<F: Field>(q_r: &Quaternion<F>, q_d: &Quaternion<F>, lambda: Orientation) -> KElement<F> {
    let l = lambda.value();
    let [r0, r1, r2, r3] = q_r.coeffs.clone();
    let [d0, d1, d2, d3] = &q_d.coeffs;
    KElement::new(lambda, [r0, r1, r2, r3, d3.scale_i(l), d2.scale_i(l), d1.scale_i(l), d0.neg()])
}

/// `q_r + q_d · ε` formed by geometric product inside Cl(4,0), with
/// ε = -λ I₃ e_∞. Independent of the coefficient map in [`from_dual_quaternion`].
pub fn compose_in_cl40<F: Field>(
    q_r: &Quaternion<F>,
    q_d: &Quaternion<F>,
    lambda: Orientation,
) -> Result<Multivector<F>, CliffordError> {
    let eps = Multivector::<F>::from_generators(4, &[0, 1, 2, 3])?.scale(&F::from_i64(-(lambda.value() as i64)));
    let r = Quaternion::new(lambda, q_r.coeffs.clone()).to_element().embed_to_cl40()?;
    let d = Quaternion::new(lambda, q_d.coeffs.clone()).to_element().embed_to_cl40()?;
    r.add(&d.geometric_product(&eps)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    const POS: Orientation = Orientation::Positive;

    fn qi(lambda: Orientation, c: [i64; 4]) -> Quaternion<Rational> {
        Quaternion::new(lambda, c.map(Rational::from_i64))
    }

    #[test]
    fn identity_view() {
        let v = to_dual_quaternion(&KElement::<Rational>::one(POS));
        assert_eq!(v.q_r, qi(POS, [1, 0, 0, 0]));
        assert_eq!(v.q_d, qi(POS, [0, 0, 0, 0]));
    }

    #[test]
    fn pseudo_slot_maps_to_minus_dual_scalar() {
        let v = to_dual_quaternion(&KElement::<Rational>::basis(POS, 7));
        assert_eq!(v.q_d, qi(POS, [-1, 0, 0, 0]));
        let v = to_dual_quaternion(&KElement::<Rational>::basis(POS, 4));
        assert_eq!(v.q_d, qi(POS, [0, 0, 0, 1]));
    }

    #[test]
    fn from_view_inverts_for_basis() {
        for lambda in Orientation::BOTH {
            for i in 0..8 {
                let x = KElement::<Rational>::basis(lambda, i);
                let v = to_dual_quaternion(&x);
                assert_eq!(from_dual_quaternion(&v.q_r, &v.q_d, lambda), x);
                let mv = compose_in_cl40(&v.q_r, &v.q_d, lambda).unwrap();
                assert_eq!(mv, x.embed_to_cl40().unwrap(), "basis {i}, lambda {lambda}");
            }
        }
    }

    #[test]
    fn lambda_blind_map_fails_for_negative_orientation() {
        // Applying (-X₇, X₆, X₅, X₄) unchanged at λ = -1 breaks X = q_r + q_d ε.
        let lambda = Orientation::Negative;
        let x = KElement::<Rational>::basis(lambda, 6);
        let q_r = Quaternion::zero(lambda);
        let blind = qi(lambda, [0, 1, 0, 0]);
        let mv = compose_in_cl40(&q_r, &blind, lambda).unwrap();
        assert_ne!(mv, x.embed_to_cl40().unwrap());
        assert_eq!(mv, x.embed_to_cl40().unwrap().neg());
    }

    #[test]
    fn qmul_units_follow_table() {
        for lambda in Orientation::BOTH {
            let i = Quaternion::<Rational>::unit(lambda, 1);
            let j = Quaternion::<Rational>::unit(lambda, 2);
            let ij = qmul(&i, &j);
            let via_table = i.to_element().kproduct(&j.to_element()).unwrap();
            assert_eq!(ij.to_element(), via_table);
            // (λe_xy)(λe_zx) = e_yz = λ·(λe_yz)
            assert_eq!(ij, qi(lambda, [0, 0, 0, lambda.value() as i64]));
        }
    }

    #[test]
    fn qconj_negates_vector_part() {
        assert_eq!(qconj(&qi(POS, [1, 2, -3, 4])), qi(POS, [1, -2, 3, -4]));
    }

    #[test]
    fn norm_through_conjugate() {
        let q = qi(Orientation::Negative, [1, 2, -3, 4]);
        assert_eq!(qmul(&q, &qconj(&q)), qi(Orientation::Negative, [30, 0, 0, 0]));
        assert_eq!(qnormsq(&q), Rational::from_i64(30));
    }
}
