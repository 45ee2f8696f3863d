use std::fmt;

/// Highest supported dimension.
pub const MAX_DIM: usize = 5;

/// Generator names, in bit order. Bit 3 is the conformal direction e_∞.
pub const GENERATOR_NAMES: [&str; MAX_DIM] = ["e_x", "e_y", "e_z", "e_\u{221e}", "e_5"];

/// A basis blade of Cl(n,0), stored as a generator bitmask.
///
/// Bit `i` set means generator `i` is present; generators are taken in
/// ascending bit order, so `0b101` is `e_x e_z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Blade(u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub const fn new(mask: u32) -> Self {
        Blade(mask)
    }

    pub const fn generator(index: usize) -> Self {
        Blade(1 << index)
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub const fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn fits(self, dim: usize) -> bool {
        dim <= MAX_DIM && (self.0 as u64) < (1u64 << dim)
    }

    /// `(-1)^(k(k-1)/2)` for grade `k`.
    pub const fn reverse_sign(self) -> i8 {
        let k = self.grade();
        if (k * k.saturating_sub(1) / 2) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, name) in GENERATOR_NAMES.iter().enumerate() {
            if self.0 & (1 << i) != 0 {
                if !first {
                    f.write_str(" ")?;
                }
                f.write_str(name)?;
                first = false;
            }
        }
        Ok(())
    }
}

/// Geometric product of two basis blades under positive signature.
///
/// The result blade is `a XOR b`; the sign is the parity of transpositions
/// needed to move every generator of `b` past the higher generators of `a`.
/// Repeated generators contract to `+1`.
pub fn blade_product(a: Blade, b: Blade) -> (i8, Blade) {
    let mut swaps = 0u32;
    let mut shifted = a.0 >> 1;
    while shifted != 0 {
        swaps += (shifted & b.0).count_ones();
        shifted >>= 1;
    }
    let sign = if swaps % 2 == 0 { 1 } else { -1 };
    (sign, Blade(a.0 ^ b.0))
}
