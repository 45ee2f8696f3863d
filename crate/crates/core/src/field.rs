//! Coefficient fields.
//!
//! Every multivector and algebra element is generic over a [`Field`]. Two
//! implementations exist: [`Rational`] (exact, arbitrary precision) and `f64`.
//! The two are never mixed inside one value and there is no implicit
//! conversion between them.

use std::fmt::Debug;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseCoeffError;

/// Exact rational coefficient.
pub type Rational = BigRational;

/// Which coefficient field a computation runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldMode {
    Rational,
    Float,
}

impl FieldMode {
    pub fn as_str(self) -> &'static str {
        match self {
            FieldMode::Rational => "rational",
            FieldMode::Float => "float",
        }
    }
}

impl std::fmt::Display for FieldMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FieldMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rational" | "exact" => Ok(FieldMode::Rational),
            "float" | "f64" => Ok(FieldMode::Float),
            other => Err(format!("unknown field mode `{other}`")),
        }
    }
}

/// A coefficient field for Clifford algebra computations.
///
/// Exact fields compare with `==`; floating fields compare against an
/// explicit tolerance supplied by the caller through [`Field::is_negligible`].
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    const MODE: FieldMode;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    /// `num / den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `rhs` must be nonzero.
    fn div(&self, rhs: &Self) -> Self;
    fn half(&self) -> Self;

    fn is_zero(&self) -> bool;
    fn to_f64(&self) -> f64;

    /// Exact fields ignore `tol` and test for exact zero.
    fn is_negligible(&self, tol: f64) -> bool;

    fn parse_coeff(s: &str) -> Result<Self, ParseCoeffError>;
    fn format_coeff(&self) -> String;

    fn scale_i(&self, sign: i8) -> Self {
        if sign < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// `Σ sign·a·b` over the given terms.
    fn signed_product_sum(terms: &[(i8, &Self, &Self)]) -> Self {
        terms.iter().fold(Self::zero(), |acc, (s, a, b)| {
            let t = a.mul(b);
            if *s < 0 {
                acc.sub(&t)
            } else {
                acc.add(&t)
            }
        })
    }
}

impl Field for Rational {
    const MODE: FieldMode = FieldMode::Rational;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn half(&self) -> Self {
        self / BigRational::from_integer(BigInt::from(2))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn is_negligible(&self, _tol: f64) -> bool {
        Zero::is_zero(self)
    }
    fn parse_coeff(s: &str) -> Result<Self, ParseCoeffError> {
        parse_rational(s)
    }
    // Accumulates over a running common denominator and reduces once;
    // per-term gcd reduction dominates the exact suites otherwise.
    fn signed_product_sum(terms: &[(i8, &Self, &Self)]) -> Self {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for (s, a, b) in terms {
            let mut tn = a.numer() * b.numer();
            if tn.is_zero() {
                continue;
            }
            if *s < 0 {
                tn = -tn;
            }
            let td = a.denom() * b.denom();
            if td == den {
                num += tn;
            } else {
                num = num * &td + tn * &den;
                den *= td;
            }
        }
        BigRational::new(num, den)
    }
    fn format_coeff(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

impl Field for f64 {
    const MODE: FieldMode = FieldMode::Float;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn half(&self) -> Self {
        self * 0.5
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn is_negligible(&self, tol: f64) -> bool {
        self.abs() <= tol
    }
    fn parse_coeff(s: &str) -> Result<Self, ParseCoeffError> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: f64 = n.trim().parse().map_err(|_| ParseCoeffError::new(s))?;
            let d: f64 = d.trim().parse().map_err(|_| ParseCoeffError::new(s))?;
            if d == 0.0 {
                return Err(ParseCoeffError::new(s));
            }
            return Ok(n / d);
        }
        let v: f64 = s.parse().map_err(|_| ParseCoeffError::new(s))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(ParseCoeffError::new(s))
        }
    }
    fn format_coeff(&self) -> String {
        // `{}` on f64 is the shortest representation that round-trips.
        format!("{self}")
    }
}

/// Parses `p/q`, an integer, or a finite decimal (optionally with exponent)
/// into an exact rational.
fn parse_rational(input: &str) -> Result<Rational, ParseCoeffError> {
    let s = input.trim();
    let err = || ParseCoeffError::new(input);
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(BigRational::new(n, d));
    }

    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| err())?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(err());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut numer: BigInt = if all_digits.is_empty() {
        BigInt::zero()
    } else {
        all_digits.parse().map_err(|_| err())?
    };
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        BigRational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(value)
}

/// Largest absolute coefficient, as f64.
pub fn max_abs<F: Field>(coeffs: &[F]) -> f64 {
    coeffs.iter().map(|c| c.to_f64().abs()).fold(0.0, f64::max)
}

/// `|a - b|` as f64; exact fields compute the difference exactly first.
pub fn abs_diff<F: Field>(a: &F, b: &F) -> f64 {
    a.sub(b).to_f64().abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn parses_rational_forms() {
        assert_eq!(Rational::parse_coeff("3/6").unwrap(), q(1, 2));
        assert_eq!(Rational::parse_coeff("-7").unwrap(), q(-7, 1));
        assert_eq!(Rational::parse_coeff("0.125").unwrap(), q(1, 8));
        assert_eq!(Rational::parse_coeff("-.5").unwrap(), q(-1, 2));
        assert_eq!(Rational::parse_coeff("1.5e2").unwrap(), q(150, 1));
        assert_eq!(Rational::parse_coeff("25e-2").unwrap(), q(1, 4));
        assert!(Rational::parse_coeff("1/0").is_err());
        assert!(Rational::parse_coeff("abc").is_err());
        assert!(Rational::parse_coeff("").is_err());
        assert!(Rational::parse_coeff(".").is_err());
    }

    #[test]
    fn float_parse_accepts_ratio() {
        assert_eq!(f64::parse_coeff("1/4").unwrap(), 0.25);
        assert!(f64::parse_coeff("nan").is_err());
        assert!(f64::parse_coeff("1/0").is_err());
    }

    #[test]
    fn format_round_trips() {
        for s in ["1/2", "-3", "0", "22/7"] {
            let v = Rational::parse_coeff(s).unwrap();
            assert_eq!(v.format_coeff(), s);
        }
        let x = std::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(f64::parse_coeff(&x.format_coeff()).unwrap(), x);
    }

    #[test]
    fn halving_is_exact() {
        assert_eq!(q(3, 7).half(), q(3, 14));
    }
}
