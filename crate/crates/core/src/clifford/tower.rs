//! Even subalgebras of Cl(1,0), Cl(2,0) and Cl(3,0) against the structure
//! constants of the reals, complex numbers and quaternions.

use serde::Serialize;

use crate::clifford::Multivector;
use crate::error::CliffordError;
use crate::{Field, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DivisionAlgebra {
    Real,
    Complex,
    Quaternion,
}

impl DivisionAlgebra {
    pub fn symbol(self) -> &'static str {
        match self {
            DivisionAlgebra::Real => "R",
            DivisionAlgebra::Complex => "C",
            DivisionAlgebra::Quaternion => "H",
        }
    }

    /// Reference structure constants: `table[i][j] = (sign, k)` means
    /// `u_i u_j = sign * u_k`.
    fn reference_table(self) -> Vec<Vec<(i8, usize)>> {
        match self {
            DivisionAlgebra::Real => vec![vec![(1, 0)]],
            DivisionAlgebra::Complex => vec![vec![(1, 0), (1, 1)], vec![(1, 1), (-1, 0)]],
            // Hamilton: i^2 = j^2 = k^2 = ijk = -1.
            DivisionAlgebra::Quaternion => vec![
                vec![(1, 0), (1, 1), (1, 2), (1, 3)],
                vec![(1, 1), (-1, 0), (1, 3), (-1, 2)],
                vec![(1, 2), (-1, 3), (-1, 0), (1, 1)],
                vec![(1, 3), (1, 2), (-1, 1), (-1, 0)],
            ],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsomorphismReport {
    pub dim: usize,
    pub expected: DivisionAlgebra,
    pub matched: bool,
    /// Basis used for the even subalgebra, written as generator products.
    pub basis: Vec<String>,
    pub witnesses: Vec<String>,
    pub mismatches: Vec<String>,
}

const GENERATOR_LETTERS: [&str; 3] = ["e_x", "e_y", "e_z"];

fn even_generators(dim: usize) -> Vec<Vec<usize>> {
    match dim {
        1 => vec![vec![]],
        2 => vec![vec![], vec![0, 1]],
        _ => vec![vec![], vec![0, 1], vec![2, 0], vec![1, 2]],
    }
}

fn label(gens: &[usize]) -> String {
    if gens.is_empty() {
        "1".into()
    } else {
        gens.iter().map(|&g| GENERATOR_LETTERS[g]).collect::<Vec<_>>().join(" ")
    }
}

/// Expresses `mv` as `sign * basis[k]` when it is exactly that.
fn factor_on_basis(mv: &Multivector<Rational>, basis: &[Multivector<Rational>]) -> Option<(i8, usize)> {
    let one = Rational::one();
    let minus = one.neg();
    basis.iter().enumerate().find_map(|(k, b)| {
        if *mv == *b {
            Some((1, k))
        } else if *mv == b.scale(&minus) {
            Some((-1, k))
        } else {
            None
        }
    })
}

/// Computes the structure constants of the even subalgebra of Cl(n,0) and
/// compares them with ℝ, ℂ or ℍ for n = 1, 2, 3.
pub fn check_division_tower(dim: usize) -> Result<IsomorphismReport, CliffordError> {
    let expected = match dim {
        1 => DivisionAlgebra::Real,
        2 => DivisionAlgebra::Complex,
        3 => DivisionAlgebra::Quaternion,
        _ => return Err(CliffordError::DimensionOutOfRange { dim, min: 1, max: 3 }),
    };
    let gens = even_generators(dim);
    let basis: Vec<Multivector<Rational>> = gens
        .iter()
        .map(|g| Multivector::from_generators(dim, g))
        .collect::<Result<_, _>>()?;
    let labels: Vec<String> = gens.iter().map(|g| label(g)).collect();
    let reference = expected.reference_table();

    let mut witnesses = Vec::new();
    let mut mismatches = Vec::new();
    for (i, bi) in basis.iter().enumerate() {
        for (j, bj) in basis.iter().enumerate() {
            let product = bi.geometric_product(bj)?;
            let got = factor_on_basis(&product, &basis);
            let want = reference[i][j];
            let render = |(s, k): (i8, usize)| {
                format!("{}{}", if s < 0 { "-" } else { "" }, labels[k])
            };
            match got {
                Some(g) if g == want => {
                    if i > 0 && (i == j || j == i % (basis.len() - 1) + 1) {
                        witnesses.push(format!("({})({}) = {}", labels[i], labels[j], render(g)));
                    }
                }
                Some(g) => mismatches.push(format!(
                    "({})({}) = {}, expected {}",
                    labels[i],
                    labels[j],
                    render(g),
                    render(want)
                )),
                None => mismatches.push(format!(
                    "({})({}) leaves the even basis",
                    labels[i], labels[j]
                )),
            }
        }
    }
    if dim == 3 {
        let ijk = basis[1].geometric_product(&basis[2])?.geometric_product(&basis[3])?;
        if factor_on_basis(&ijk, &basis) == Some((-1, 0)) {
            witnesses.push(format!("({})({})({}) = -1", labels[1], labels[2], labels[3]));
        } else {
            mismatches.push("ijk != -1".into());
        }
    }

    Ok(IsomorphismReport {
        dim,
        expected,
        matched: mismatches.is_empty(),
        basis: labels,
        witnesses,
        mismatches,
    })
}
