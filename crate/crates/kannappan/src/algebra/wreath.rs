//! The wreath product S ≀ C of a base semigroup S (with unit) by the Klein
//! four-group C.
//!
//! An element is a pair (top, slots): `top ∈ C` and `slots` a map from C
//! into S with identity entries elided.  C acts on the 4-fold direct power
//! of S by right translation of slot indices, and the product is the
//! semidirect one:
//!
//! ```text
//! (k, v)·(k', v')  has top k·k'  and  slot[t] = v[t·k'⁻¹] · v'[t].
//! ```
//!
//! Since every element of C is an involution, k'⁻¹ = k'.

use std::collections::BTreeMap;

use super::klein::{KleinFourElement, KLEIN_B, KLEIN_C, KLEIN_ONE};
use super::Element;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WreathElement {
    top: KleinFourElement,
    slots: BTreeMap<KleinFourElement, Element>,
}

impl WreathElement {
    /// Builds a normalized element: identity slot values are elided.
    pub fn new(top: KleinFourElement, slots: BTreeMap<KleinFourElement, Element>) -> Self {
        let slots = slots
            .into_iter()
            .filter(|(_, v)| !v.is_identity())
            .collect();
        WreathElement { top, slots }
    }

    pub fn identity() -> Self {
        WreathElement {
            top: KLEIN_ONE,
            slots: BTreeMap::new(),
        }
    }

    /// Pure top element (all slots at the base identity).
    pub fn top_only(top: KleinFourElement) -> Self {
        WreathElement {
            top,
            slots: BTreeMap::new(),
        }
    }

    /// Injection of the base semigroup into slot 1; this is the embedding
    /// step of the chain S_{k+1} = S_k ≀ C_k.
    pub fn embed(base: Element) -> Self {
        let mut slots = BTreeMap::new();
        if !base.is_identity() {
            slots.insert(KLEIN_ONE, base);
        }
        WreathElement {
            top: KLEIN_ONE,
            slots,
        }
    }

    pub fn top(&self) -> KleinFourElement {
        self.top
    }

    pub fn slots(&self) -> &BTreeMap<KleinFourElement, Element> {
        &self.slots
    }

    pub fn slot(&self, at: KleinFourElement) -> Option<&Element> {
        self.slots.get(&at)
    }

    pub fn is_identity(&self) -> bool {
        self.top.is_identity() && self.slots.is_empty()
    }

    /// Supported in slot 1 with trivial top; the precondition of the
    /// defect-amplification triple.
    pub fn is_slot_one_supported(&self) -> bool {
        self.top.is_identity() && self.slots.keys().all(|k| k.is_identity())
    }

    pub fn mul(&self, rhs: &WreathElement) -> Result<WreathElement> {
        let mut slots = BTreeMap::new();
        for t in KleinFourElement::all() {
            // left factor shifted by the right top (self-inverse in C)
            let left = self.slots.get(&t.mul(rhs.top));
            let right = rhs.slots.get(&t);
            let combined = match (left, right) {
                (Some(a), Some(b)) => Some(a.mul(b)?),
                (Some(a), None) => Some(a.clone()),
                (None, Some(b)) => Some(b.clone()),
                (None, None) => None,
            };
            if let Some(v) = combined {
                if !v.is_identity() {
                    slots.insert(t, v);
                }
            }
        }
        Ok(WreathElement {
            top: self.top.mul(rhs.top),
            slots,
        })
    }

    /// Conjugation u^t = t⁻¹ u t by a top element t: the top is unchanged
    /// and slot s receives the old value of slot s·t.  An element supported
    /// in slot 1 moves to slot t.
    pub fn conjugate(&self, t: KleinFourElement) -> WreathElement {
        let slots = self
            .slots
            .iter()
            .map(|(s, v)| (s.mul(t), v.clone()))
            .collect();
        WreathElement {
            top: self.top,
            slots,
        }
    }

    /// Inverse, defined when every slot value is invertible:
    /// (k, v)⁻¹ = (k, t ↦ v[t·k]⁻¹).
    pub fn inverse(&self) -> Result<WreathElement> {
        let mut slots = BTreeMap::new();
        for (s, v) in &self.slots {
            slots.insert(s.mul(self.top), v.inverse()?);
        }
        Ok(WreathElement {
            top: self.top,
            slots,
        })
    }
}

/// The defect-amplification triple (x₁, y₁, z₁) = (xyz, (xyz)^b, (xyz)^c)
/// built from slot-1-supported x, y, z.  Satisfies the element identity
///
/// ```text
/// x₁y₁z₁ = x·x^b·x^c · y·y^b·y^c · z·z^b·z^c
/// ```
///
/// exactly, which is what transports a defect δ at (x,y,z) to 9δ (or 3δ)
/// one level up the embedding chain.
pub fn amplification_triple(
    x: &WreathElement,
    y: &WreathElement,
    z: &WreathElement,
) -> Result<(WreathElement, WreathElement, WreathElement)> {
    for (name, u) in [("x", x), ("y", y), ("z", z)] {
        if !u.is_slot_one_supported() {
            return Err(Error::Domain(format!(
                "{name} must be supported in slot 1 with trivial top"
            )));
        }
    }
    let x1 = x.mul(y)?.mul(z)?;
    let y1 = x1.conjugate(KLEIN_B);
    let z1 = x1.conjugate(KLEIN_C);
    Ok((x1, y1, z1))
}

/// Right-hand side of the amplification identity, spelled out.
pub fn amplification_rhs(
    x: &WreathElement,
    y: &WreathElement,
    z: &WreathElement,
) -> Result<WreathElement> {
    let spread = |u: &WreathElement| -> Result<WreathElement> {
        u.mul(&u.conjugate(KLEIN_B))?.mul(&u.conjugate(KLEIN_C))
    };
    spread(x)?.mul(&spread(y)?)?.mul(&spread(z)?)
}

impl std::fmt::Display for WreathElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}|", self.top.name())?;
        let parts: Vec<String> = self
            .slots
            .iter()
            .map(|(k, v)| format!("{}={}", k.name(), v))
            .collect();
        write!(f, "{}", parts.join(";"))
    }
}
