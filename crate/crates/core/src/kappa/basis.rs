use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::clifford::{blade_product, Blade, Multivector};
use crate::error::CliffordError;
use crate::Field;

/// Orientation λ = ±1 of the basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Orientation {
    #[default]
    Positive,
    Negative,
}

impl Orientation {
    pub const BOTH: [Orientation; 2] = [Orientation::Positive, Orientation::Negative];

    pub fn value(self) -> i8 {
        match self {
            Orientation::Positive => 1,
            Orientation::Negative => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Self> {
        match v {
            1 => Some(Orientation::Positive),
            -1 => Some(Orientation::Negative),
            _ => None,
        }
    }

    /// `λ^exp` as ±1.
    pub fn pow(self, exp: u8) -> i8 {
        if exp % 2 == 0 {
            1
        } else {
            self.value()
        }
    }

    pub fn as_field<F: Field>(self) -> F {
        F::from_i64(self.value() as i64)
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl FromStr for Orientation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "1" | "+1" | "+" => Ok(Orientation::Positive),
            "-1" | "-" => Ok(Orientation::Negative),
            other => Err(format!("lambda must be 1 or -1, got `{other}`")),
        }
    }
}

impl Serialize for Orientation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i8(self.value())
    }
}

impl<'de> Deserialize<'de> for Orientation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = i64::deserialize(d)?;
        Orientation::from_value(v)
            .ok_or_else(|| serde::de::Error::custom(format!("lambda must be 1 or -1, got {v}")))
    }
}

/// Number of basis elements.
pub const DIM: usize = 8;

/// Generator words of the bare basis blades, in coefficient order
/// `1, e_x e_y, e_z e_x, e_y e_z, e_x e_∞, e_y e_∞, e_z e_∞, I₃ e_∞`.
/// Generator indices: x = 0, y = 1, z = 2, ∞ = 3.
pub const BASIS_WORDS: [&[usize]; DIM] = [
    &[],
    &[0, 1],
    &[2, 0],
    &[1, 2],
    &[0, 3],
    &[1, 3],
    &[2, 3],
    &[0, 1, 2, 3],
];

/// Bare labels (without the λ weight) in rendering notation.
pub const BASIS_LABELS: [&str; DIM] = [
    "1",
    "e_x e_y",
    "e_z e_x",
    "e_y e_z",
    "e_x e_\u{221e}",
    "e_y e_\u{221e}",
    "e_z e_\u{221e}",
    "I\u{2083} e_\u{221e}",
];

/// Power of λ carried by each basis element: every element except `1`.
pub const fn lambda_weight(index: usize) -> u8 {
    if index == 0 {
        0
    } else {
        1
    }
}

/// Index of the pseudoscalar direction `λ I₃ e_∞`.
pub const PSEUDO: usize = 7;

/// Label including its λ weight, e.g. `λ e_x e_y`.
pub fn weighted_label(index: usize) -> String {
    if lambda_weight(index) == 0 {
        BASIS_LABELS[index].to_string()
    } else {
        format!("\u{03bb} {}", BASIS_LABELS[index])
    }
}

/// `(sign, blade)` with `bare_index = sign · blade`, from folding
/// [`blade_product`] over the generator word.
pub fn bare_blade(index: usize) -> (i8, Blade) {
    BASIS_WORDS[index].iter().fold((1, Blade::SCALAR), |(sign, acc), &g| {
        let (s, b) = blade_product(acc, Blade::generator(g));
        (sign * s, b)
    })
}

/// The bare blade product for `index`, built inside Cl(4,0).
pub fn bare_basis<F: Field>(index: usize) -> Result<Multivector<F>, CliffordError> {
    Multivector::from_generators(4, BASIS_WORDS[index])
}

/// `λ^w · bare` for `index`.
pub fn weighted_basis<F: Field>(index: usize, lambda: Orientation) -> Result<Multivector<F>, CliffordError> {
    let bare = bare_basis::<F>(index)?;
    Ok(if lambda.pow(lambda_weight(index)) < 0 { bare.neg() } else { bare })
}
