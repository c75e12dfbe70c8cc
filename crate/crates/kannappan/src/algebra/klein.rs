//! The Klein four-group: generators b, c with b² = c² = 1, bc = cb.

/// Element b^β c^γ encoded as the bit pair (β, γ); the group law is
/// bitwise XOR, so every non-identity element has order two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct KleinFourElement {
    bits: u8, // low bit β, next bit γ
}

pub const KLEIN_ONE: KleinFourElement = KleinFourElement { bits: 0 };
pub const KLEIN_B: KleinFourElement = KleinFourElement { bits: 1 };
pub const KLEIN_C: KleinFourElement = KleinFourElement { bits: 2 };
pub const KLEIN_BC: KleinFourElement = KleinFourElement { bits: 3 };

impl KleinFourElement {
    pub fn all() -> [KleinFourElement; 4] {
        [KLEIN_ONE, KLEIN_B, KLEIN_C, KLEIN_BC]
    }

    pub fn mul(self, other: KleinFourElement) -> KleinFourElement {
        KleinFourElement {
            bits: self.bits ^ other.bits,
        }
    }

    /// Every element is its own inverse.
    pub fn inverse(self) -> KleinFourElement {
        self
    }

    pub fn is_identity(self) -> bool {
        self.bits == 0
    }

    pub fn name(self) -> &'static str {
        match self.bits {
            0 => "1",
            1 => "b",
            2 => "c",
            _ => "bc",
        }
    }

    pub fn from_name(name: &str) -> Option<KleinFourElement> {
        match name {
            "1" | "e" => Some(KLEIN_ONE),
            "b" => Some(KLEIN_B),
            "c" => Some(KLEIN_C),
            "bc" | "cb" => Some(KLEIN_BC),
            _ => None,
        }
    }
}

impl std::fmt::Display for KleinFourElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_non_identity_element_has_order_two() {
        for x in KleinFourElement::all() {
            assert_eq!(x.mul(x), KLEIN_ONE);
        }
    }

    #[test]
    fn group_is_abelian_exhaustively() {
        for x in KleinFourElement::all() {
            for y in KleinFourElement::all() {
                assert_eq!(x.mul(y), y.mul(x));
            }
        }
    }

    #[test]
    fn defining_relations() {
        assert_eq!(KLEIN_B.mul(KLEIN_C), KLEIN_BC);
        assert_eq!(KLEIN_B.mul(KLEIN_B), KLEIN_ONE);
        assert_eq!(KLEIN_C.mul(KLEIN_C), KLEIN_ONE);
    }
}
