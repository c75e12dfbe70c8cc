//! Free abelian groups ℤ^k with arbitrary-precision coordinates.

use num::bigint::BigInt;
use num::traits::Zero;

use crate::error::{Error, Result};

/// Element of ℤ^k.  The group law is coordinatewise addition; written
/// multiplicatively by the semigroup layer.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbelianVector {
    coords: Vec<BigInt>,
}

impl AbelianVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        AbelianVector { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        AbelianVector {
            coords: coords.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn zero(dim: usize) -> Self {
        AbelianVector {
            coords: vec![BigInt::zero(); dim],
        }
    }

    /// Standard basis vector e_i.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coords[i] = BigInt::from(1);
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn add(&self, other: &AbelianVector) -> Result<AbelianVector> {
        if self.dim() != other.dim() {
            return Err(Error::CarrierMismatch(format!(
                "vector dimensions {} vs {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(AbelianVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn neg(&self) -> AbelianVector {
        AbelianVector {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, n: &BigInt) -> AbelianVector {
        AbelianVector {
            coords: self.coords.iter().map(|c| c * n).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

impl std::fmt::Display for AbelianVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn addition_is_coordinatewise() {
        let a = AbelianVector::from_i64(&[1, 2]);
        let b = AbelianVector::from_i64(&[3, -1]);
        assert_eq!(a.add(&b).unwrap(), AbelianVector::from_i64(&[4, 1]));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = AbelianVector::from_i64(&[1]);
        let b = AbelianVector::from_i64(&[1, 2]);
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn scaling_never_overflows() {
        let a = AbelianVector::from_i64(&[2, -1]);
        let big = BigInt::from(1u8) << 40;
        let scaled = a.scale(&big);
        assert_eq!(scaled.coords()[0], BigInt::from(2) << 40);
    }
}
