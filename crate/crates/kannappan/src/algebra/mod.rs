//! Carriers and their elements.
//!
//! Every construction in this crate runs over one of a small family of
//! finitely generated semigroups: free words, integer lattices ℤ^k, finite
//! cyclic groups, the Klein four-group, wreath products S ≀ C, zero-adjoined
//! semigroups, and binary direct products.  Elements are immutable values
//! with structural equality and a canonical normal form per carrier.

pub mod cyclic;
pub mod klein;
pub mod literal;
pub mod vector;
pub mod word;
pub mod wreath;
pub mod zero;

use num::bigint::BigInt;
use rand::Rng;

use crate::error::{Error, Result};

pub use cyclic::CyclicElement;
pub use klein::{KleinFourElement, KLEIN_B, KLEIN_BC, KLEIN_C, KLEIN_ONE};
pub use vector::AbelianVector;
pub use word::{Alphabet, Word};
pub use wreath::{amplification_rhs, amplification_triple, WreathElement};
pub use zero::ZeroAdjoined;

/// An element of one of the supported carriers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Word(Word),
    Vector(AbelianVector),
    Cyclic(CyclicElement),
    Klein(KleinFourElement),
    Wreath(WreathElement),
    Zero(ZeroAdjoined),
    Pair(Box<Element>, Box<Element>),
}

impl Element {
    pub fn word(s: &str) -> Element {
        Element::Word(Word::from_str_unchecked(s))
    }

    pub fn int(n: i64) -> Element {
        Element::Vector(AbelianVector::from_i64(&[n]))
    }

    pub fn vector(coords: &[i64]) -> Element {
        Element::Vector(AbelianVector::from_i64(coords))
    }

    /// Semigroup product; both operands must come from the same ambient
    /// carrier.
    pub fn mul(&self, rhs: &Element) -> Result<Element> {
        match (self, rhs) {
            (Element::Word(a), Element::Word(b)) => Ok(Element::Word(a.concat(b))),
            (Element::Vector(a), Element::Vector(b)) => Ok(Element::Vector(a.add(b)?)),
            (Element::Cyclic(a), Element::Cyclic(b)) => Ok(Element::Cyclic(a.add(b)?)),
            (Element::Klein(a), Element::Klein(b)) => Ok(Element::Klein(a.mul(*b))),
            (Element::Wreath(a), Element::Wreath(b)) => Ok(Element::Wreath(a.mul(b)?)),
            (Element::Zero(a), Element::Zero(b)) => Ok(Element::Zero(a.mul(b)?)),
            (Element::Pair(a1, a2), Element::Pair(b1, b2)) => Ok(Element::Pair(
                Box::new(a1.mul(b1)?),
                Box::new(a2.mul(b2)?),
            )),
            _ => Err(Error::CarrierMismatch(format!(
                "cannot multiply {} with {}",
                self.kind_name(),
                rhs.kind_name()
            ))),
        }
    }

    /// x^n for n >= 1, by repeated squaring (words short-circuit to direct
    /// repetition, abelian carriers to scaling).
    pub fn pow(&self, n: u64) -> Result<Element> {
        if n == 0 {
            return Err(Error::Domain(
                "pow with n = 0 requires a carrier with unit; use Carrier::pow".into(),
            ));
        }
        match self {
            Element::Word(w) => Ok(Element::Word(w.repeat(n)?)),
            Element::Vector(v) => Ok(Element::Vector(v.scale(&BigInt::from(n)))),
            Element::Cyclic(c) => Ok(Element::Cyclic(c.scale(n))),
            _ => {
                let mut base = self.clone();
                let mut n = n;
                let mut acc: Option<Element> = None;
                loop {
                    if n & 1 == 1 {
                        acc = Some(match acc {
                            None => base.clone(),
                            Some(a) => a.mul(&base)?,
                        });
                    }
                    n >>= 1;
                    if n == 0 {
                        break;
                    }
                    base = base.mul(&base)?;
                }
                Ok(acc.expect("n >= 1"))
            }
        }
    }

    pub fn square(&self) -> Result<Element> {
        self.mul(self)
    }

    /// Group inverse where the carrier is a group.
    pub fn inverse(&self) -> Result<Element> {
        match self {
            Element::Vector(v) => Ok(Element::Vector(v.neg())),
            Element::Cyclic(c) => Ok(Element::Cyclic(c.neg())),
            Element::Klein(k) => Ok(Element::Klein(k.inverse())),
            Element::Wreath(w) => Ok(Element::Wreath(w.inverse()?)),
            Element::Pair(a, b) => Ok(Element::Pair(
                Box::new(a.inverse()?),
                Box::new(b.inverse()?),
            )),
            Element::Word(_) | Element::Zero(_) => Err(Error::Domain(format!(
                "{} carrier is not a group",
                self.kind_name()
            ))),
        }
    }

    /// Identity test that needs no ambient data: the normal form of the
    /// unit is the same in every carrier of the same shape.
    pub fn is_identity(&self) -> bool {
        match self {
            Element::Word(w) => w.is_empty(),
            Element::Vector(v) => v.is_zero(),
            Element::Cyclic(c) => c.is_zero(),
            Element::Klein(k) => k.is_identity(),
            Element::Wreath(w) => w.is_identity(),
            Element::Zero(z) => match z {
                ZeroAdjoined::Zero => false,
                ZeroAdjoined::Base(e) => e.is_identity(),
            },
            Element::Pair(a, b) => a.is_identity() && b.is_identity(),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Element::Word(_) => "word",
            Element::Vector(_) => "vector",
            Element::Cyclic(_) => "cyclic",
            Element::Klein(_) => "klein",
            Element::Wreath(_) => "wreath",
            Element::Zero(_) => "zero-adjoined",
            Element::Pair(_, _) => "pair",
        }
    }

    /// Deterministic byte encoding, used to seed the reproducible noise
    /// bodies.  Stable across runs and platforms.
    pub fn canonical_bytes(&self, out: &mut Vec<u8>) {
        fn push_bigint(n: &BigInt, out: &mut Vec<u8>) {
            let (sign, bytes) = n.to_bytes_be();
            out.push(match sign {
                num::bigint::Sign::Minus => b'-',
                num::bigint::Sign::NoSign => b'0',
                num::bigint::Sign::Plus => b'+',
            });
            out.extend_from_slice(&(bytes.len() as u32).to_be_bytes());
            out.extend_from_slice(&bytes);
        }
        match self {
            Element::Word(w) => {
                out.push(b'W');
                out.extend_from_slice(&(w.len() as u64).to_be_bytes());
                out.extend_from_slice(w.letters());
            }
            Element::Vector(v) => {
                out.push(b'V');
                out.extend_from_slice(&(v.dim() as u32).to_be_bytes());
                for c in v.coords() {
                    push_bigint(c, out);
                }
            }
            Element::Cyclic(c) => {
                out.push(b'C');
                out.extend_from_slice(&c.modulus().to_be_bytes());
                out.extend_from_slice(&c.residue().to_be_bytes());
            }
            Element::Klein(k) => {
                out.push(b'K');
                out.extend_from_slice(k.name().as_bytes());
            }
            Element::Wreath(w) => {
                out.push(b'R');
                out.extend_from_slice(w.top().name().as_bytes());
                out.push(b'|');
                for (slot, v) in w.slots() {
                    out.extend_from_slice(slot.name().as_bytes());
                    out.push(b'=');
                    v.canonical_bytes(out);
                }
            }
            Element::Zero(z) => {
                out.push(b'Z');
                match z {
                    ZeroAdjoined::Zero => out.push(b'0'),
                    ZeroAdjoined::Base(e) => {
                        out.push(b'1');
                        e.canonical_bytes(out);
                    }
                }
            }
            Element::Pair(a, b) => {
                out.push(b'P');
                a.canonical_bytes(out);
                out.push(b'#');
                b.canonical_bytes(out);
            }
        }
    }
}

impl std::fmt::Display for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Element::Word(w) => write!(f, "{w}"),
            Element::Vector(v) => write!(f, "{v}"),
            Element::Cyclic(c) => write!(f, "{c}"),
            Element::Klein(k) => write!(f, "{k}"),
            Element::Wreath(w) => write!(f, "{w}"),
            Element::Zero(z) => write!(f, "{z}"),
            Element::Pair(a, b) => write!(f, "{a}#{b}"),
        }
    }
}

/// Ambient semigroup descriptor: validates elements, supplies units,
/// classifies structure, and samples random elements for sweeps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Carrier {
    /// Free words over an alphabet; `with_unit` selects monoid vs semigroup.
    FreeWords { alphabet: Alphabet, with_unit: bool },
    /// ℤ^dim with coordinatewise addition.
    IntegerLattice { dim: usize },
    /// ℤ/m, the periodic carrier.
    Cyclic { modulus: u64 },
    /// The Klein four-group.
    Klein,
    /// base ≀ C with C the Klein four-group; always has a unit.
    Wreath { base: Box<Carrier> },
    /// base ∪ {0} with 0 absorbing.
    ZeroAdjoined { base: Box<Carrier> },
    /// Direct product of two carriers.
    Pair { left: Box<Carrier>, right: Box<Carrier> },
}

impl Carrier {
    pub fn free_ab() -> Carrier {
        Carrier::FreeWords {
            alphabet: Alphabet::ab(),
            with_unit: false,
        }
    }

    pub fn integers() -> Carrier {
        Carrier::IntegerLattice { dim: 1 }
    }

    pub fn lattice(dim: usize) -> Carrier {
        Carrier::IntegerLattice { dim }
    }

    pub fn has_unit(&self) -> bool {
        match self {
            Carrier::FreeWords { with_unit, .. } => *with_unit,
            Carrier::ZeroAdjoined { base } => base.has_unit(),
            _ => true,
        }
    }

    pub fn is_group(&self) -> bool {
        match self {
            Carrier::FreeWords { .. } | Carrier::ZeroAdjoined { .. } => false,
            Carrier::IntegerLattice { .. } | Carrier::Cyclic { .. } | Carrier::Klein => true,
            Carrier::Wreath { base } => base.is_group(),
            Carrier::Pair { left, right } => left.is_group() && right.is_group(),
        }
    }

    pub fn is_abelian(&self) -> bool {
        match self {
            Carrier::IntegerLattice { .. } | Carrier::Cyclic { .. } | Carrier::Klein => true,
            Carrier::Pair { left, right } => left.is_abelian() && right.is_abelian(),
            _ => false,
        }
    }

    pub fn identity(&self) -> Result<Element> {
        match self {
            Carrier::FreeWords { with_unit, .. } => {
                if *with_unit {
                    Ok(Element::Word(Word::empty()))
                } else {
                    Err(Error::Domain(
                        "free semigroup without unit has no identity".into(),
                    ))
                }
            }
            Carrier::IntegerLattice { dim } => Ok(Element::Vector(AbelianVector::zero(*dim))),
            Carrier::Cyclic { modulus } => {
                Ok(Element::Cyclic(CyclicElement::new(0, *modulus)?))
            }
            Carrier::Klein => Ok(Element::Klein(KLEIN_ONE)),
            Carrier::Wreath { .. } => Ok(Element::Wreath(WreathElement::identity())),
            Carrier::ZeroAdjoined { base } => {
                Ok(Element::Zero(ZeroAdjoined::base(base.identity()?)))
            }
            Carrier::Pair { left, right } => Ok(Element::Pair(
                Box::new(left.identity()?),
                Box::new(right.identity()?),
            )),
        }
    }

    /// x^n with n = 0 resolved through the carrier's unit.
    pub fn pow(&self, x: &Element, n: u64) -> Result<Element> {
        if n == 0 {
            return self.identity().map_err(|_| {
                Error::Domain("x^0 undefined: carrier has no unit".into())
            });
        }
        x.pow(n)
    }

    /// Structural membership check.
    pub fn contains(&self, e: &Element) -> bool {
        match (self, e) {
            (Carrier::FreeWords { alphabet, with_unit }, Element::Word(w)) => {
                (*with_unit || !w.is_empty()) && w.check_alphabet(alphabet).is_ok()
            }
            (Carrier::IntegerLattice { dim }, Element::Vector(v)) => v.dim() == *dim,
            (Carrier::Cyclic { modulus }, Element::Cyclic(c)) => c.modulus() == *modulus,
            (Carrier::Klein, Element::Klein(_)) => true,
            (Carrier::Wreath { base }, Element::Wreath(w)) => {
                w.slots().values().all(|v| base.contains(v))
            }
            (Carrier::ZeroAdjoined { base }, Element::Zero(z)) => match z {
                ZeroAdjoined::Zero => true,
                ZeroAdjoined::Base(e) => base.contains(e),
            },
            (Carrier::Pair { left, right }, Element::Pair(a, b)) => {
                left.contains(a) && right.contains(b)
            }
            _ => false,
        }
    }

    pub fn check_contains(&self, e: &Element) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::CarrierMismatch(format!(
                "element `{e}` does not belong to carrier {}",
                self.describe()
            )))
        }
    }

    /// Random element for corpus sweeps; `size` bounds word length and
    /// coordinate magnitude.
    pub fn sample<R: Rng>(&self, rng: &mut R, size: u32) -> Element {
        match self {
            Carrier::FreeWords { alphabet, with_unit } => {
                let min_len = usize::from(!*with_unit);
                let len = rng.gen_range(min_len..=(size.max(1) as usize));
                let letters = (0..len)
                    .map(|_| alphabet.symbols()[rng.gen_range(0..alphabet.len())])
                    .collect();
                Element::Word(Word::new(letters))
            }
            Carrier::IntegerLattice { dim } => {
                let bound = i64::from(size.max(1));
                let coords: Vec<i64> =
                    (0..*dim).map(|_| rng.gen_range(-bound..=bound)).collect();
                Element::vector(&coords)
            }
            Carrier::Cyclic { modulus } => Element::Cyclic(
                CyclicElement::new(rng.gen_range(0..*modulus) as i64, *modulus)
                    .expect("modulus >= 1"),
            ),
            Carrier::Klein => {
                Element::Klein(KleinFourElement::all()[rng.gen_range(0..4)])
            }
            Carrier::Wreath { base } => {
                let top = KleinFourElement::all()[rng.gen_range(0..4)];
                let mut slots = std::collections::BTreeMap::new();
                for slot in KleinFourElement::all() {
                    if rng.gen_bool(0.5) {
                        slots.insert(slot, base.sample(rng, size));
                    }
                }
                Element::Wreath(WreathElement::new(top, slots))
            }
            Carrier::ZeroAdjoined { base } => {
                if rng.gen_bool(0.1) {
                    Element::Zero(ZeroAdjoined::zero())
                } else {
                    Element::Zero(ZeroAdjoined::base(base.sample(rng, size)))
                }
            }
            Carrier::Pair { left, right } => Element::Pair(
                Box::new(left.sample(rng, size)),
                Box::new(right.sample(rng, size)),
            ),
        }
    }

    /// Exhaustive element list for the finite carriers.
    pub fn elements(&self) -> Result<Vec<Element>> {
        match self {
            Carrier::Cyclic { modulus } => Ok((0..*modulus)
                .map(|r| Element::Cyclic(CyclicElement::new(r as i64, *modulus).unwrap()))
                .collect()),
            Carrier::Klein => Ok(KleinFourElement::all()
                .into_iter()
                .map(Element::Klein)
                .collect()),
            _ => Err(Error::Domain(format!(
                "carrier {} is not finite",
                self.describe()
            ))),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Carrier::FreeWords { alphabet, with_unit } => {
                let sym = String::from_utf8_lossy(alphabet.symbols()).to_string();
                if *with_unit {
                    format!("free1:{sym}")
                } else {
                    format!("free:{sym}")
                }
            }
            Carrier::IntegerLattice { dim } => {
                if *dim == 1 {
                    "Z".to_string()
                } else {
                    format!("Z^{dim}")
                }
            }
            Carrier::Cyclic { modulus } => format!("Z/{modulus}"),
            Carrier::Klein => "klein".to_string(),
            Carrier::Wreath { base } => format!("wreath:{}", base.describe()),
            Carrier::ZeroAdjoined { base } => format!("zero:{}", base.describe()),
            Carrier::Pair { left, right } => {
                format!("pair:{}:{}", left.describe(), right.describe())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_product_and_powers() {
        let ab = Element::word("ab");
        let ba = Element::word("ba");
        assert_eq!(ab.mul(&ba).unwrap(), Element::word("abba"));
        assert_eq!(ab.pow(3).unwrap(), Element::word("ababab"));
    }

    #[test]
    fn vector_product_and_powers() {
        let x = Element::vector(&[1, 2]);
        let y = Element::vector(&[3, -1]);
        assert_eq!(x.mul(&y).unwrap(), Element::vector(&[4, 1]));
        assert_eq!(
            Element::vector(&[2, -1]).pow(4).unwrap(),
            Element::vector(&[8, -4])
        );
    }

    #[test]
    fn cyclic_pow_by_modular_arithmetic() {
        let x = Element::Cyclic(CyclicElement::new(3, 5).unwrap());
        assert_eq!(
            x.pow(7).unwrap(),
            Element::Cyclic(CyclicElement::new(1, 5).unwrap())
        );
    }

    #[test]
    fn mismatched_carriers_error() {
        let w = Element::word("a");
        let v = Element::int(1);
        assert!(w.mul(&v).is_err());
        let z2 = Element::Cyclic(CyclicElement::new(1, 2).unwrap());
        let z3 = Element::Cyclic(CyclicElement::new(1, 3).unwrap());
        assert!(z2.mul(&z3).is_err());
    }

    #[test]
    fn pow_zero_needs_a_unit() {
        let semigroup = Carrier::free_ab();
        let monoid = Carrier::FreeWords {
            alphabet: Alphabet::ab(),
            with_unit: true,
        };
        let x = Element::word("ab");
        assert!(semigroup.pow(&x, 0).is_err());
        assert_eq!(monoid.pow(&x, 0).unwrap(), Element::Word(Word::empty()));
    }

    #[test]
    fn huge_vector_powers_are_exact() {
        let x = Element::int(3);
        let big = x.pow(1 << 40).unwrap();
        match big {
            Element::Vector(v) => {
                assert_eq!(v.coords()[0], BigInt::from(3) << 40);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn zero_adjoined_absorbs() {
        let z = Element::Zero(ZeroAdjoined::zero());
        let x = Element::Zero(ZeroAdjoined::base(Element::word("ab")));
        assert_eq!(z.mul(&x).unwrap(), z);
        assert_eq!(x.mul(&z).unwrap(), z);
    }

    #[test]
    fn pair_componentwise() {
        let a = Element::Pair(
            Box::new(Element::int(2)),
            Box::new(Element::Cyclic(CyclicElement::new(1, 2).unwrap())),
        );
        let b = Element::Pair(
            Box::new(Element::int(3)),
            Box::new(Element::Cyclic(CyclicElement::new(1, 2).unwrap())),
        );
        let ab = a.mul(&b).unwrap();
        assert_eq!(
            ab,
            Element::Pair(
                Box::new(Element::int(5)),
                Box::new(Element::Cyclic(CyclicElement::new(0, 2).unwrap())),
            )
        );
    }

    #[test]
    fn carrier_membership() {
        let c = Carrier::free_ab();
        assert!(c.contains(&Element::word("abab")));
        assert!(!c.contains(&Element::word("")));
        assert!(!c.contains(&Element::word("xyz")));
        assert!(!c.contains(&Element::int(3)));
    }
}
