//! Textual forms for carriers and elements.
//!
//! Carrier descriptors:
//!   `Z`, `Z^3`, `Z/5`, `free:ab`, `free1:ab` (monoid), `klein`,
//!   `wreath:<base>`, `zero:<base>`, `pair:<left>:<right>`
//!   (the left component of `pair:` must be a simple descriptor).
//!
//! Element literals, always read against a carrier:
//!   words `aabb` (unit `_`), vectors `3,-1,2`, residues `3`,
//!   Klein `1|b|c|bc`, wreath `top|slot=value;slot=value` (e.g. `b|1=3;c=-2`),
//!   zero-adjoined `0` for the adjoined zero or a base literal,
//!   pairs `left#right`.

use std::collections::BTreeMap;

use num::bigint::BigInt;

use super::{
    Alphabet, Carrier, CyclicElement, Element, KleinFourElement, Word, WreathElement,
    ZeroAdjoined,
};
use crate::error::{Error, Result};

pub fn parse_carrier(s: &str) -> Result<Carrier> {
    let s = s.trim();
    if s == "Z" {
        return Ok(Carrier::integers());
    }
    if let Some(dim) = s.strip_prefix("Z^") {
        let dim: usize = dim
            .parse()
            .map_err(|_| Error::Parse(format!("bad lattice dimension in `{s}`")))?;
        if dim == 0 {
            return Err(Error::Parse("lattice dimension must be >= 1".into()));
        }
        return Ok(Carrier::lattice(dim));
    }
    if let Some(m) = s.strip_prefix("Z/") {
        let modulus: u64 = m
            .parse()
            .map_err(|_| Error::Parse(format!("bad modulus in `{s}`")))?;
        if modulus == 0 {
            return Err(Error::Parse("modulus must be >= 1".into()));
        }
        return Ok(Carrier::Cyclic { modulus });
    }
    if s == "klein" {
        return Ok(Carrier::Klein);
    }
    if let Some(sym) = s.strip_prefix("free1:") {
        return Ok(Carrier::FreeWords {
            alphabet: Alphabet::new(sym.as_bytes())?,
            with_unit: true,
        });
    }
    if let Some(sym) = s.strip_prefix("free:") {
        return Ok(Carrier::FreeWords {
            alphabet: Alphabet::new(sym.as_bytes())?,
            with_unit: false,
        });
    }
    if let Some(base) = s.strip_prefix("wreath:") {
        return Ok(Carrier::Wreath {
            base: Box::new(parse_carrier(base)?),
        });
    }
    if let Some(base) = s.strip_prefix("zero:") {
        return Ok(Carrier::ZeroAdjoined {
            base: Box::new(parse_carrier(base)?),
        });
    }
    if let Some(rest) = s.strip_prefix("pair:") {
        let (left, right) = rest.split_once(':').ok_or_else(|| {
            Error::Parse(format!("pair descriptor needs two components: `{s}`"))
        })?;
        return Ok(Carrier::Pair {
            left: Box::new(parse_carrier(left)?),
            right: Box::new(parse_carrier(right)?),
        });
    }
    Err(Error::Parse(format!("unknown carrier descriptor `{s}`")))
}

pub fn parse_element(carrier: &Carrier, s: &str) -> Result<Element> {
    let s = s.trim();
    let element = match carrier {
        Carrier::FreeWords { alphabet, with_unit } => {
            let word = if s == "_" || s == "ε" {
                Word::empty()
            } else {
                Word::from_str_unchecked(s)
            };
            word.check_alphabet(alphabet)?;
            if !with_unit && word.is_empty() {
                return Err(Error::Parse(
                    "empty word not admitted without unit".into(),
                ));
            }
            Element::Word(word)
        }
        Carrier::IntegerLattice { dim } => {
            let coords: Result<Vec<BigInt>> = s
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<BigInt>()
                        .map_err(|_| Error::Parse(format!("bad integer `{p}`")))
                })
                .collect();
            let coords = coords?;
            if coords.len() != *dim {
                return Err(Error::Parse(format!(
                    "expected {dim} coordinates, got {}",
                    coords.len()
                )));
            }
            Element::Vector(super::AbelianVector::new(coords))
        }
        Carrier::Cyclic { modulus } => {
            let r: i64 = s
                .parse()
                .map_err(|_| Error::Parse(format!("bad residue `{s}`")))?;
            Element::Cyclic(CyclicElement::new(r, *modulus)?)
        }
        Carrier::Klein => Element::Klein(
            KleinFourElement::from_name(s)
                .ok_or_else(|| Error::Parse(format!("bad Klein element `{s}`")))?,
        ),
        Carrier::Wreath { base } => {
            let (top_str, slots_str) = s
                .split_once('|')
                .ok_or_else(|| Error::Parse(format!("wreath literal needs `top|...`: `{s}`")))?;
            let top = KleinFourElement::from_name(top_str.trim())
                .ok_or_else(|| Error::Parse(format!("bad wreath top `{top_str}`")))?;
            let mut slots = BTreeMap::new();
            for part in slots_str.split(';').filter(|p| !p.trim().is_empty()) {
                let (slot_str, value_str) = part.split_once('=').ok_or_else(|| {
                    Error::Parse(format!("wreath slot needs `slot=value`: `{part}`"))
                })?;
                let slot = KleinFourElement::from_name(slot_str.trim())
                    .ok_or_else(|| Error::Parse(format!("bad slot name `{slot_str}`")))?;
                slots.insert(slot, parse_element(base, value_str)?);
            }
            Element::Wreath(WreathElement::new(top, slots))
        }
        Carrier::ZeroAdjoined { base } => {
            if s == "0" {
                Element::Zero(ZeroAdjoined::zero())
            } else {
                Element::Zero(ZeroAdjoined::base(parse_element(base, s)?))
            }
        }
        Carrier::Pair { left, right } => {
            let (l, r) = s
                .split_once('#')
                .ok_or_else(|| Error::Parse(format!("pair literal needs `left#right`: `{s}`")))?;
            Element::Pair(
                Box::new(parse_element(left, l)?),
                Box::new(parse_element(right, r)?),
            )
        }
    };
    carrier.check_contains(&element)?;
    Ok(element)
}

/// Splits a triple literal: three element literals separated by `;`,
/// or a bare `x,y,z` comma form on the rank-one lattice.
pub fn parse_triple(carrier: &Carrier, s: &str) -> Result<(Element, Element, Element)> {
    let parts: Vec<&str> = if s.contains(';') {
        s.split(';').collect()
    } else if matches!(carrier, Carrier::IntegerLattice { dim: 1 }) {
        s.split(',').collect()
    } else {
        s.split_whitespace().collect()
    };
    if parts.len() != 3 {
        return Err(Error::Parse(format!(
            "expected three elements separated by `;`, got {}",
            parts.len()
        )));
    }
    Ok((
        parse_element(carrier, parts[0])?,
        parse_element(carrier, parts[1])?,
        parse_element(carrier, parts[2])?,
    ))
}
