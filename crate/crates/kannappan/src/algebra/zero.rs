//! Zero adjunction S⁰ = S ∪ {0} with 0 absorbing on both sides.

use super::Element;
use crate::error::Result;

/// Either the adjoined absorbing zero or an element of the base semigroup.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ZeroAdjoined {
    Zero,
    Base(Box<Element>),
}

impl ZeroAdjoined {
    pub fn zero() -> Self {
        ZeroAdjoined::Zero
    }

    pub fn base(e: Element) -> Self {
        ZeroAdjoined::Base(Box::new(e))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ZeroAdjoined::Zero)
    }

    pub fn mul(&self, rhs: &ZeroAdjoined) -> Result<ZeroAdjoined> {
        match (self, rhs) {
            (ZeroAdjoined::Zero, _) | (_, ZeroAdjoined::Zero) => Ok(ZeroAdjoined::Zero),
            (ZeroAdjoined::Base(a), ZeroAdjoined::Base(b)) => {
                Ok(ZeroAdjoined::Base(Box::new(a.mul(b)?)))
            }
        }
    }
}

impl std::fmt::Display for ZeroAdjoined {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ZeroAdjoined::Zero => write!(f, "0"),
            ZeroAdjoined::Base(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::word::Word;

    #[test]
    fn zero_absorbs_on_both_sides() {
        let z = ZeroAdjoined::zero();
        let w = ZeroAdjoined::base(Element::Word(Word::from_str_unchecked("ab")));
        assert_eq!(z.mul(&w).unwrap(), ZeroAdjoined::Zero);
        assert_eq!(w.mul(&z).unwrap(), ZeroAdjoined::Zero);
        assert_eq!(z.mul(&z).unwrap(), ZeroAdjoined::Zero);
    }

    #[test]
    fn base_elements_multiply_in_the_base() {
        let u = ZeroAdjoined::base(Element::Word(Word::from_str_unchecked("ab")));
        let v = ZeroAdjoined::base(Element::Word(Word::from_str_unchecked("ba")));
        let uv = u.mul(&v).unwrap();
        assert_eq!(
            uv,
            ZeroAdjoined::base(Element::Word(Word::from_str_unchecked("abba")))
        );
    }
}
