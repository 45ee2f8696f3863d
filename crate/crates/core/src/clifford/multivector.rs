use crate::clifford::blade::{blade_product, Blade, MAX_DIM};
use crate::error::CliffordError;
use crate::Field;

/// Dense multivector of Cl(n,0): one coefficient per blade, indexed by mask.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector<F: Field> {
    dim: usize,
    coeffs: Vec<F>,
}

fn check_dim(dim: usize) -> Result<(), CliffordError> {
    if (1..=MAX_DIM).contains(&dim) {
        Ok(())
    } else {
        Err(CliffordError::DimensionOutOfRange { dim, min: 1, max: MAX_DIM })
    }
}

impl<F: Field> Multivector<F> {
    pub fn zero(dim: usize) -> Result<Self, CliffordError> {
        check_dim(dim)?;
        Ok(Self { dim, coeffs: vec![F::zero(); 1 << dim] })
    }

    pub fn scalar(dim: usize, value: F) -> Result<Self, CliffordError> {
        let mut mv = Self::zero(dim)?;
        mv.coeffs[0] = value;
        Ok(mv)
    }

    pub fn one(dim: usize) -> Result<Self, CliffordError> {
        Self::scalar(dim, F::one())
    }

    /// `coeff` times a single basis blade.
    pub fn blade(dim: usize, blade: Blade, coeff: F) -> Result<Self, CliffordError> {
        let mut mv = Self::zero(dim)?;
        if !blade.fits(dim) {
            return Err(CliffordError::MaskOutOfRange { mask: blade.mask(), dim });
        }
        mv.coeffs[blade.mask() as usize] = coeff;
        Ok(mv)
    }

    /// The ordered product of the listed generators, e.g. `[2, 0]` is `e_z e_x`.
    pub fn from_generators(dim: usize, generators: &[usize]) -> Result<Self, CliffordError> {
        let mut acc = Self::one(dim)?;
        for &g in generators {
            if g >= dim {
                return Err(CliffordError::GeneratorOutOfRange { index: g, dim });
            }
            let e = Self::blade(dim, Blade::generator(g), F::one())?;
            acc = acc.geometric_product(&e)?;
        }
        Ok(acc)
    }

    pub fn from_coeffs(dim: usize, coeffs: Vec<F>) -> Result<Self, CliffordError> {
        check_dim(dim)?;
        if coeffs.len() != 1 << dim {
            return Err(CliffordError::DimensionMismatch { left: 1 << dim, right: coeffs.len() });
        }
        Ok(Self { dim, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, blade: Blade) -> &F {
        &self.coeffs[blade.mask() as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Field::is_zero)
    }

    /// Nonzero terms as `(blade, coeff)` pairs in mask order.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, &F)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (Blade::new(m as u32), c))
    }

    fn same_dim(&self, other: &Self) -> Result<(), CliffordError> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(CliffordError::DimensionMismatch { left: self.dim, right: other.dim })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, CliffordError> {
        self.same_dim(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect();
        Ok(Self { dim: self.dim, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CliffordError> {
        self.same_dim(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect();
        Ok(Self { dim: self.dim, coeffs })
    }

    pub fn scale(&self, k: &F) -> Self {
        Self { dim: self.dim, coeffs: self.coeffs.iter().map(|c| c.mul(k)).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { dim: self.dim, coeffs: self.coeffs.iter().map(Field::neg).collect() }
    }

    /// Bilinear extension of [`blade_product`].
    pub fn geometric_product(&self, other: &Self) -> Result<Self, CliffordError> {
        self.same_dim(other)?;
        let mut terms: Vec<Vec<(i8, &F, &F)>> = vec![Vec::new(); self.coeffs.len()];
        for (a, xa) in self.coeffs.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in other.coeffs.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let (sign, c) = blade_product(Blade::new(a as u32), Blade::new(b as u32));
                terms[c.mask() as usize].push((sign, xa, yb));
            }
        }
        let coeffs = terms.iter().map(|t| F::signed_product_sum(t)).collect();
        Ok(Self { dim: self.dim, coeffs })
    }

    /// Grade-wise sign flip `(-1)^(k(k-1)/2)`.
    pub fn reverse(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, c)| c.scale_i(Blade::new(m as u32).reverse_sign()))
            .collect();
        Self { dim: self.dim, coeffs }
    }

    pub fn grade_project(&self, grade: usize) -> Result<Self, CliffordError> {
        if grade > self.dim {
            return Err(CliffordError::GradeOutOfRange { grade, dim: self.dim });
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, c)| if Blade::new(m as u32).grade() == grade { c.clone() } else { F::zero() })
            .collect();
        Ok(Self { dim: self.dim, coeffs })
    }

    /// `(XY + YX) / 2`
    pub fn inner(&self, other: &Self) -> Result<Self, CliffordError> {
        let xy = self.geometric_product(other)?;
        let yx = other.geometric_product(self)?;
        Ok(xy.add(&yx)?.scale(&F::one().half()))
    }

    /// `(XY - YX) / 2`
    pub fn outer(&self, other: &Self) -> Result<Self, CliffordError> {
        let xy = self.geometric_product(other)?;
        let yx = other.geometric_product(self)?;
        Ok(xy.sub(&yx)?.scale(&F::one().half()))
    }

    pub fn is_even(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(m, c)| Blade::new(m as u32).grade() % 2 == 0 || c.is_zero())
    }
}

/// All even-grade blades of Cl(n,0), 1 ≤ n ≤ 4.
///
/// Order is by grade, then by the conventional listing: for n = 3 that is
/// `1, e_xy, e_xz (= -e_zx), e_yz`; for n = 4 it continues with
/// `e_x e_∞, e_y e_∞, e_z e_∞, e_x e_y e_z e_∞`.
pub fn even_basis(dim: usize) -> Result<Vec<Blade>, CliffordError> {
    const ORDER: [u32; 8] = [0b0000, 0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100, 0b1111];
    if !(1..=4).contains(&dim) {
        return Err(CliffordError::DimensionOutOfRange { dim, min: 1, max: 4 });
    }
    Ok(ORDER
        .into_iter()
        .map(Blade::new)
        .filter(|b| b.fits(dim))
        .collect())
}
