//! Finite cyclic groups ℤ/m, the periodic carriers.

use crate::error::{Error, Result};

/// Residue modulo m, written multiplicatively by the semigroup layer
/// (the "product" is addition of residues).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicElement {
    residue: u64,
    modulus: u64,
}

impl CyclicElement {
    pub fn new(residue: i64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Domain("modulus must be >= 1".into()));
        }
        let m = modulus as i64;
        Ok(CyclicElement {
            residue: residue.rem_euclid(m) as u64,
            modulus,
        })
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn add(&self, other: &CyclicElement) -> Result<CyclicElement> {
        if self.modulus != other.modulus {
            return Err(Error::CarrierMismatch(format!(
                "moduli {} vs {}",
                self.modulus, other.modulus
            )));
        }
        Ok(CyclicElement {
            residue: (self.residue + other.residue) % self.modulus,
            modulus: self.modulus,
        })
    }

    pub fn neg(&self) -> CyclicElement {
        CyclicElement {
            residue: (self.modulus - self.residue) % self.modulus,
            modulus: self.modulus,
        }
    }

    /// n-fold sum, n reduced modulo m first.
    pub fn scale(&self, n: u64) -> CyclicElement {
        let n = n % self.modulus;
        CyclicElement {
            residue: (self.residue as u128 * n as u128 % self.modulus as u128) as u64,
            modulus: self.modulus,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.residue == 0
    }
}

impl std::fmt::Display for CyclicElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.residue)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues_normalize() {
        let x = CyclicElement::new(-2, 5).unwrap();
        assert_eq!(x.residue(), 3);
    }

    #[test]
    fn power_by_scaling() {
        // 3^7 in additive Z/5 is 21 mod 5 = 1
        let x = CyclicElement::new(3, 5).unwrap();
        assert_eq!(x.scale(7).residue(), 1);
    }

    #[test]
    fn modulus_mismatch() {
        let x = CyclicElement::new(1, 5).unwrap();
        let y = CyclicElement::new(1, 7).unwrap();
        assert!(x.add(&y).is_err());
    }
}
