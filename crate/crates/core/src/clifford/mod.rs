//! Dense Clifford algebra Cl(n,0), n ≤ 5, with positive signature.
//!
//! Generators are ordered `e_x, e_y, e_z, e_∞` on bits 0..=3, so Cl(3,0)
//! sits inside Cl(4,0) as the blades with bit 3 clear.

mod blade;
mod multivector;
mod tower;

pub use blade::{blade_product, Blade, GENERATOR_NAMES, MAX_DIM};
pub use multivector::{even_basis, Multivector};
pub use tower::{check_division_tower, DivisionAlgebra, IsomorphismReport};
