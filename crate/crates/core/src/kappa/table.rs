//! The 8×8 multiplication table of the even subalgebra of Cl(4,0).
//!
//! Two sources exist: a committed cell-by-cell transcription of the printed
//! table and [`derive_table`], which recomputes every cell inside Cl(4,0).
//! Rows are the left factor, columns the right factor.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{CliffordError, KappaError};
use crate::kappa::basis::{bare_basis, lambda_weight, weighted_basis, Orientation, BASIS_LABELS, DIM};
use crate::{Field, Rational};

/// `basis_row · basis_col = sign · λ^lambda_exp · basis_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TableEntry {
    pub index: u8,
    pub sign: i8,
    pub lambda_exp: u8,
}

impl TableEntry {
    /// Numeric factor `sign · λ^lambda_exp` for a concrete orientation.
    pub fn factor(self, lambda: Orientation) -> i8 {
        self.sign * lambda.pow(self.lambda_exp)
    }

    /// Cell text in table notation: `λ` is printed only where the entry is
    /// exactly a (λ-weighted) basis element, bare labels stand for `λ · basis`.
    pub fn label(self) -> String {
        let k = self.index as usize;
        let body = match (k, self.lambda_exp) {
            (0, 0) => "1".to_string(),
            (0, _) => "\u{03bb}".to_string(),
            (_, 0) => format!("\u{03bb} {}", BASIS_LABELS[k]),
            (_, _) => BASIS_LABELS[k].to_string(),
        };
        if self.sign < 0 {
            format!("-{body}")
        } else {
            body
        }
    }

    pub fn parse_label(text: &str) -> Option<Self> {
        let (sign, rest) = match text.trim().strip_prefix('-') {
            Some(r) => (-1, r.trim_start()),
            None => (1, text.trim()),
        };
        let (weighted, bare) = match rest.strip_prefix('\u{03bb}') {
            Some(r) => (true, r.trim_start()),
            None => (false, rest),
        };
        let index = BASIS_LABELS.iter().position(|l| *l == bare)?;
        let lambda_exp = match (index, weighted) {
            (0, false) => 0,
            (0, true) => return None,
            (_, true) => 0,
            (_, false) => 1,
        };
        Some(TableEntry { index: index as u8, sign, lambda_exp })
    }
}

/// The printed multiplication table, cell text as it appears there.
pub const TRANSCRIBED_CELLS: [[&str; DIM]; DIM] = [
    ["1", "λ e_x e_y", "λ e_z e_x", "λ e_y e_z", "λ e_x e_∞", "λ e_y e_∞", "λ e_z e_∞", "λ I₃ e_∞"],
    ["λ e_x e_y", "-1", "e_y e_z", "-e_z e_x", "-e_y e_∞", "e_x e_∞", "I₃ e_∞", "-e_z e_∞"],
    ["λ e_z e_x", "-e_y e_z", "-1", "e_x e_y", "e_z e_∞", "I₃ e_∞", "-e_x e_∞", "-e_y e_∞"],
    ["λ e_y e_z", "e_z e_x", "-e_x e_y", "-1", "I₃ e_∞", "-e_z e_∞", "e_y e_∞", "-e_x e_∞"],
    ["λ e_x e_∞", "e_y e_∞", "-e_z e_∞", "I₃ e_∞", "-1", "-e_x e_y", "e_z e_x", "-e_y e_z"],
    ["λ e_y e_∞", "-e_x e_∞", "I₃ e_∞", "e_z e_∞", "e_x e_y", "-1", "-e_y e_z", "-e_z e_x"],
    ["λ e_z e_∞", "I₃ e_∞", "e_x e_∞", "-e_y e_∞", "-e_z e_x", "e_y e_z", "-1", "-e_x e_y"],
    ["λ I₃ e_∞", "-e_z e_∞", "-e_y e_∞", "-e_x e_∞", "-e_y e_z", "-e_z e_x", "-e_x e_y", "1"],
];

pub type Entries = [[TableEntry; DIM]; DIM];

fn parse_transcription() -> Entries {
    let mut out = [[TableEntry { index: 0, sign: 1, lambda_exp: 0 }; DIM]; DIM];
    for (r, row) in TRANSCRIBED_CELLS.iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            out[r][c] = TableEntry::parse_label(cell)
                .unwrap_or_else(|| panic!("unparseable table cell ({r},{c}): {cell}"));
        }
    }
    out
}

/// Parsed transcription; identical for both orientations.
pub fn transcribed_entries() -> &'static Entries {
    static CELLS: OnceLock<Entries> = OnceLock::new();
    CELLS.get_or_init(parse_transcription)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureTable {
    pub lambda: Orientation,
    pub entries: Entries,
}

impl StructureTable {
    pub fn transcribed(lambda: Orientation) -> Self {
        Self { lambda, entries: *transcribed_entries() }
    }

    pub fn get(&self, row: usize, col: usize) -> TableEntry {
        self.entries[row][col]
    }

    /// Result indices only.
    pub fn index_pattern(&self) -> [[u8; DIM]; DIM] {
        self.entries.map(|row| row.map(|e| e.index))
    }

    pub fn transpose(&self) -> Self {
        let mut entries = self.entries;
        for (r, row) in entries.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                *cell = self.entries[c][r];
            }
        }
        Self { lambda: self.lambda, entries }
    }
}

fn factor_on_bare_basis(
    product: &crate::clifford::Multivector<Rational>,
    bare: &[crate::clifford::Multivector<Rational>],
) -> Option<(i8, usize)> {
    let minus_one = Rational::from_i64(-1);
    bare.iter().enumerate().find_map(|(k, b)| {
        if product == b {
            Some((1, k))
        } else if *product == b.scale(&minus_one) {
            Some((-1, k))
        } else {
            None
        }
    })
}

/// Recomputes the table from first principles inside Cl(4,0).
///
/// Each bare product `bare_i · bare_j = σ · bare_k` is found by geometric
/// product; with `basis_i = λ^w_i · bare_i` and λ² = 1 the λ exponent of the
/// cell is `w_i + w_j + w_k mod 2`. Every cell is then re-checked numerically
/// with the λ-weighted elements for the requested orientation.
pub fn derive_table(lambda: Orientation) -> Result<StructureTable, KappaError> {
    let bare: Vec<_> = (0..DIM).map(bare_basis::<Rational>).collect::<Result<_, CliffordError>>()?;
    let weighted: Vec<_> = (0..DIM)
        .map(|i| weighted_basis::<Rational>(i, lambda))
        .collect::<Result<_, CliffordError>>()?;
    let mut entries = [[TableEntry { index: 0, sign: 1, lambda_exp: 0 }; DIM]; DIM];
    for i in 0..DIM {
        for j in 0..DIM {
            let product = bare[i].geometric_product(&bare[j])?;
            let (sign, k) = factor_on_bare_basis(&product, &bare).ok_or_else(|| {
                let (blade, coeff) = product
                    .terms()
                    .find(|(b, _)| b.grade() % 2 == 1)
                    .map(|(b, c)| (b.mask(), c.format_coeff()))
                    .unwrap_or((0, "?".into()));
                KappaError::OutsideSpan { mask: blade, coeff }
            })?;
            let lambda_exp = (lambda_weight(i) + lambda_weight(j) + lambda_weight(k)) % 2;
            let entry = TableEntry { index: k as u8, sign, lambda_exp };

            let lhs = weighted[i].geometric_product(&weighted[j])?;
            let rhs = weighted[k].scale(&Rational::from_i64(entry.factor(lambda) as i64));
            assert_eq!(lhs, rhs, "λ bookkeeping failed for cell ({i},{j})");
            entries[i][j] = entry;
        }
    }
    Ok(StructureTable { lambda, entries })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellMismatch {
    pub row: usize,
    pub col: usize,
    pub derived: String,
    pub transcribed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableComparison {
    pub cells: usize,
    pub matching: usize,
    pub mismatches: Vec<CellMismatch>,
    /// The transcription matches the derived table only after transposing,
    /// i.e. the row/column operand convention is flipped.
    pub transposed: bool,
}

impl TableComparison {
    pub fn is_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn compare_tables(derived: &StructureTable, transcribed: &StructureTable) -> TableComparison {
    let mut mismatches = Vec::new();
    for r in 0..DIM {
        for c in 0..DIM {
            let d = derived.entries[r][c];
            let t = transcribed.entries[r][c];
            if d != t {
                mismatches.push(CellMismatch { row: r, col: c, derived: d.label(), transcribed: t.label() });
            }
        }
    }
    let transposed = !mismatches.is_empty() && derived.transpose().entries == transcribed.entries;
    TableComparison {
        cells: DIM * DIM,
        matching: DIM * DIM - mismatches.len(),
        mismatches,
        transposed,
    }
}

/// Per-orientation numeric lookup `(result index, ±1)` used by the product kernel.
pub(crate) fn numeric_table(lambda: Orientation) -> &'static [[(usize, i8); DIM]; DIM] {
    static TABLES: OnceLock<[[[(usize, i8); DIM]; DIM]; 2]> = OnceLock::new();
    let tables = TABLES.get_or_init(|| {
        let entries = transcribed_entries();
        Orientation::BOTH.map(|l| entries.map(|row| row.map(|e| (e.index as usize, e.factor(l)))))
    });
    match lambda {
        Orientation::Positive => &tables[0],
        Orientation::Negative => &tables[1],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_round_trip_over_transcription() {
        for row in TRANSCRIBED_CELLS {
            for cell in row {
                assert_eq!(TableEntry::parse_label(cell).unwrap().label(), cell);
            }
        }
    }

    #[test]
    fn spot_cells() {
        let t = derive_table(Orientation::Positive).unwrap();
        // (λe_xy)(λe_zx) = e_yz
        assert_eq!(t.get(1, 2), TableEntry { index: 3, sign: 1, lambda_exp: 1 });
        // (λe_x e_∞)(λe_y e_∞) = -e_xy
        assert_eq!(t.get(4, 5), TableEntry { index: 1, sign: -1, lambda_exp: 1 });
        // (λI₃e_∞)² = 1
        assert_eq!(t.get(7, 7), TableEntry { index: 0, sign: 1, lambda_exp: 0 });
        assert_eq!(t.get(6, 1).label(), "I₃ e_∞");
    }

    #[test]
    fn identity_row_and_column() {
        for lambda in Orientation::BOTH {
            let t = derive_table(lambda).unwrap();
            for k in 0..DIM {
                assert_eq!(t.get(0, k), TableEntry { index: k as u8, sign: 1, lambda_exp: 0 });
                assert_eq!(t.get(k, 0), TableEntry { index: k as u8, sign: 1, lambda_exp: 0 });
            }
        }
    }

    #[test]
    fn transpose_is_detected() {
        let derived = derive_table(Orientation::Positive).unwrap();
        let cmp = compare_tables(&derived, &derived.transpose());
        assert!(!cmp.is_match());
        assert!(cmp.transposed);
    }

    #[test]
    fn rejects_bad_labels() {
        assert!(TableEntry::parse_label("e_w").is_none());
        assert!(TableEntry::parse_label("λ 1").is_none());
    }
}
