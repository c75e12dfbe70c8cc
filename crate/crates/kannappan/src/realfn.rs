//! Real-valued functions on a carrier.
//!
//! A [`RealFn`] couples a carrier descriptor with a body: quadratic forms
//! and additive characters on ℤ^k, pattern counters and their linear limits
//! on words, pullbacks along homomorphisms, finite lookup tables, rational
//! weighted sums, and seeded bounded noise.  Evaluation is exact (rational)
//! whenever every body in the expression is exact, floating point otherwise.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{literal, Carrier, Element};
use crate::error::{Error, Result};
use crate::eta::PatternCounter;
use crate::value::Value;

/// Homomorphism descriptors for pullback bodies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Homomorphism {
    /// Wreath product over ℤ^k → ℤ^k, summing all slot values.
    CoordinateSum,
    /// ℤ → ℤ/m reduction.
    ModReduce(u64),
    /// Left projection of a direct product.
    ProjectLeft,
    /// Right projection of a direct product.
    ProjectRight,
}

impl Homomorphism {
    /// Target carrier when applied to `source`.
    pub fn target(&self, source: &Carrier) -> Result<Carrier> {
        match (self, source) {
            (Homomorphism::CoordinateSum, Carrier::Wreath { base }) => match **base {
                Carrier::IntegerLattice { .. } => Ok((**base).clone()),
                _ => Err(Error::Domain(
                    "coordinate sum needs a wreath product over a lattice".into(),
                )),
            },
            (Homomorphism::ModReduce(m), Carrier::IntegerLattice { dim: 1 }) => {
                Ok(Carrier::Cyclic { modulus: *m })
            }
            (Homomorphism::ProjectLeft, Carrier::Pair { left, .. }) => Ok((**left).clone()),
            (Homomorphism::ProjectRight, Carrier::Pair { right, .. }) => Ok((**right).clone()),
            _ => Err(Error::Domain(format!(
                "homomorphism {self:?} undefined on carrier {}",
                source.describe()
            ))),
        }
    }

    pub fn apply(&self, e: &Element, target: &Carrier) -> Result<Element> {
        match (self, e) {
            (Homomorphism::CoordinateSum, Element::Wreath(w)) => {
                let mut acc = target.identity()?;
                for v in w.slots().values() {
                    acc = acc.mul(v)?;
                }
                Ok(acc)
            }
            (Homomorphism::ModReduce(m), Element::Vector(v)) if v.dim() == 1 => {
                let m_big = BigInt::from(*m);
                let r = ((&v.coords()[0] % &m_big) + &m_big) % &m_big;
                let r: i64 = r.try_into().map_err(|_| {
                    Error::Domain("residue out of range".into())
                })?;
                Ok(Element::Cyclic(crate::algebra::CyclicElement::new(r, *m)?))
            }
            (Homomorphism::ProjectLeft, Element::Pair(a, _)) => Ok((**a).clone()),
            (Homomorphism::ProjectRight, Element::Pair(_, b)) => Ok((**b).clone()),
            _ => Err(Error::Domain(format!(
                "homomorphism {self:?} undefined at element kind {}",
                e.kind_name()
            ))),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Homomorphism::CoordinateSum => "sum".into(),
            Homomorphism::ModReduce(m) => format!("mod{m}"),
            Homomorphism::ProjectLeft => "left".into(),
            Homomorphism::ProjectRight => "right".into(),
        }
    }

    pub fn from_name(s: &str) -> Result<Homomorphism> {
        if s == "sum" {
            Ok(Homomorphism::CoordinateSum)
        } else if s == "left" {
            Ok(Homomorphism::ProjectLeft)
        } else if s == "right" {
            Ok(Homomorphism::ProjectRight)
        } else if let Some(m) = s.strip_prefix("mod") {
            Ok(Homomorphism::ModReduce(m.parse().map_err(|_| {
                Error::Parse(format!("bad modulus in hom `{s}`"))
            })?))
        } else {
            Err(Error::Parse(format!("unknown homomorphism `{s}`")))
        }
    }
}

#[derive(Debug, Clone)]
pub enum Body {
    /// v ↦ vᵀMv + a·v on ℤ^k, M symmetric rational.
    QuadraticForm {
        matrix: Vec<Vec<BigRational>>,
        linear: Vec<BigRational>,
    },
    /// v ↦ a·v on ℤ^k.
    AdditiveCharacter { weights: Vec<BigRational> },
    /// Pattern occurrence count on words.
    PatternCount(PatternCounter),
    /// Closed form of the linear dyadic limit of a pattern count.
    PatternTilde(PatternCounter),
    /// inner ∘ hom.
    Pullback {
        hom: Homomorphism,
        inner: Box<RealFn>,
    },
    /// Finite exact map; evaluation outside the table is a domain error.
    Lookup { table: BTreeMap<Element, Value> },
    /// Rational-weighted sum of inner functions on the same carrier.
    ScaledSum { terms: Vec<(BigRational, RealFn)> },
    /// Seeded deterministic values in [−amplitude, amplitude]; `even`
    /// hashes x and x⁻¹ identically (group carriers only).
    BoundedNoise {
        amplitude: f64,
        seed: u64,
        even: bool,
    },
}

#[derive(Debug, Clone)]
pub struct RealFn {
    carrier: Carrier,
    body: Body,
}

impl RealFn {
    pub fn new(carrier: Carrier, body: Body) -> Result<Self> {
        if let Body::QuadraticForm { matrix, linear } = &body {
            let k = linear.len();
            if matrix.len() != k || matrix.iter().any(|row| row.len() != k) {
                return Err(Error::Domain("quadratic form shape mismatch".into()));
            }
            for i in 0..k {
                for j in 0..k {
                    if matrix[i][j] != matrix[j][i] {
                        return Err(Error::Domain(
                            "quadratic-form array must be symmetric".into(),
                        ));
                    }
                }
            }
            if !matches!(carrier, Carrier::IntegerLattice { dim } if dim == k) {
                return Err(Error::Domain(
                    "quadratic form needs a lattice carrier of matching dimension".into(),
                ));
            }
        }
        if let Body::AdditiveCharacter { weights } = &body {
            if !matches!(carrier, Carrier::IntegerLattice { dim } if dim == weights.len()) {
                return Err(Error::Domain(
                    "additive character needs a lattice carrier of matching dimension".into(),
                ));
            }
        }
        if let Body::ScaledSum { terms } = &body {
            if terms.iter().any(|(_, f)| f.carrier != carrier) {
                return Err(Error::Domain(
                    "scaled-sum terms must share the outer carrier".into(),
                ));
            }
        }
        if let Body::Pullback { hom, inner } = &body {
            let target = hom.target(&carrier)?;
            if inner.carrier != target {
                return Err(Error::Domain(format!(
                    "pullback inner carrier {} does not match hom target {}",
                    inner.carrier.describe(),
                    target.describe()
                )));
            }
        }
        Ok(RealFn { carrier, body })
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn body(&self) -> &Body {
        &self.body
    }

    /// f(v) = vᵀMv + a·v with integer matrix/vector entries.
    pub fn quadratic_int(dim: usize, matrix: &[&[i64]], linear: &[i64]) -> Result<Self> {
        let m = matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&x| BigRational::from_integer(BigInt::from(x)))
                    .collect()
            })
            .collect();
        let a = linear
            .iter()
            .map(|&x| BigRational::from_integer(BigInt::from(x)))
            .collect();
        RealFn::new(
            Carrier::lattice(dim),
            Body::QuadraticForm {
                matrix: m,
                linear: a,
            },
        )
    }

    /// f(n) = q·n² + a·n on ℤ.
    pub fn parabola(q: i64, a: i64) -> Self {
        RealFn::quadratic_int(1, &[&[q]], &[a]).expect("valid 1x1 form")
    }

    pub fn additive_int(weights: &[i64]) -> Result<Self> {
        RealFn::new(
            Carrier::lattice(weights.len()),
            Body::AdditiveCharacter {
                weights: weights
                    .iter()
                    .map(|&w| BigRational::from_integer(BigInt::from(w)))
                    .collect(),
            },
        )
    }

    /// The occurrence counter as a function on the free semigroup over its
    /// alphabet.
    pub fn pattern_count(counter: PatternCounter) -> Self {
        let carrier = Carrier::FreeWords {
            alphabet: counter.alphabet().clone(),
            with_unit: false,
        };
        RealFn {
            carrier,
            body: Body::PatternCount(counter),
        }
    }

    pub fn pattern_tilde(counter: PatternCounter) -> Self {
        let carrier = Carrier::FreeWords {
            alphabet: counter.alphabet().clone(),
            with_unit: false,
        };
        RealFn {
            carrier,
            body: Body::PatternTilde(counter),
        }
    }

    /// η over {a,b}.
    pub fn eta() -> Self {
        RealFn::pattern_count(PatternCounter::aabb())
    }

    pub fn lookup(carrier: Carrier, table: BTreeMap<Element, Value>) -> Self {
        RealFn {
            carrier,
            body: Body::Lookup { table },
        }
    }

    pub fn noise(carrier: Carrier, amplitude: f64, seed: u64) -> Self {
        RealFn {
            carrier,
            body: Body::BoundedNoise {
                amplitude,
                seed,
                even: false,
            },
        }
    }

    pub fn even_noise(carrier: Carrier, amplitude: f64, seed: u64) -> Self {
        RealFn {
            carrier,
            body: Body::BoundedNoise {
                amplitude,
                seed,
                even: true,
            },
        }
    }

    /// The identically-zero function on a carrier (an empty sum).
    pub fn zero_fn(carrier: Carrier) -> Self {
        RealFn {
            carrier,
            body: Body::ScaledSum { terms: Vec::new() },
        }
    }

    pub fn scaled_sum(terms: Vec<(BigRational, RealFn)>) -> Result<Self> {
        let carrier = terms
            .first()
            .ok_or_else(|| Error::Domain("scaled sum needs at least one term".into()))?
            .1
            .carrier
            .clone();
        RealFn::new(carrier, Body::ScaledSum { terms })
    }

    /// f + g on a shared carrier.
    pub fn sum_of(f: RealFn, g: RealFn) -> Result<Self> {
        let one = BigRational::from_integer(BigInt::from(1));
        RealFn::scaled_sum(vec![(one.clone(), f), (one, g)])
    }

    pub fn pullback(source: Carrier, hom: Homomorphism, inner: RealFn) -> Result<Self> {
        RealFn::new(
            source,
            Body::Pullback {
                hom,
                inner: Box::new(inner),
            },
        )
    }

    /// True when every body in the expression evaluates to exact rationals.
    pub fn is_exact(&self) -> bool {
        match &self.body {
            Body::QuadraticForm { .. }
            | Body::AdditiveCharacter { .. }
            | Body::PatternCount(_)
            | Body::PatternTilde(_) => true,
            Body::Pullback { inner, .. } => inner.is_exact(),
            Body::Lookup { table } => table.values().all(Value::is_exact),
            Body::ScaledSum { terms } => terms.iter().all(|(_, f)| f.is_exact()),
            Body::BoundedNoise { .. } => false,
        }
    }

    /// An a-priori bound on the defect, when one is known analytically:
    /// exact solvers give 0, the a²b² counter gives 5, bounded bodies give
    /// 7·sup|f|, and sums add.  `None` means: sweep a corpus and label the
    /// estimate empirical.
    pub fn analytic_defect_bound(&self) -> Option<Value> {
        match &self.body {
            Body::QuadraticForm { .. } | Body::AdditiveCharacter { .. } => {
                self.carrier.is_abelian().then(Value::zero)
            }
            Body::PatternCount(counter) => {
                (counter.pattern() == &crate::algebra::Word::from_str_unchecked("aabb"))
                    .then(|| Value::from_int(5))
            }
            Body::PatternTilde(_) => None,
            Body::Pullback { inner, .. } => inner.analytic_defect_bound(),
            Body::Lookup { table } => {
                let mut sup = Value::zero();
                for v in table.values() {
                    if v.abs().cmp_abs(&sup) == std::cmp::Ordering::Greater {
                        sup = v.abs();
                    }
                }
                Some(sup.mul(&Value::from_int(7)))
            }
            Body::ScaledSum { terms } => {
                let mut acc = Value::zero();
                for (w, f) in terms {
                    let b = f.analytic_defect_bound()?;
                    acc = acc.add(&b.mul_rational(&w.abs()));
                }
                Some(acc)
            }
            Body::BoundedNoise { amplitude, .. } => {
                Some(Value::Float(7.0 * amplitude))
            }
        }
    }

    pub fn evaluate(&self, x: &Element) -> Result<Value> {
        self.carrier.check_contains(x)?;
        self.eval_unchecked(x)
    }

    fn eval_unchecked(&self, x: &Element) -> Result<Value> {
        match (&self.body, x) {
            (Body::QuadraticForm { matrix, linear }, Element::Vector(v)) => {
                let coords: Vec<BigRational> = v
                    .coords()
                    .iter()
                    .map(|c| BigRational::from_integer(c.clone()))
                    .collect();
                let mut acc = BigRational::zero();
                for (i, ci) in coords.iter().enumerate() {
                    for (j, cj) in coords.iter().enumerate() {
                        acc += &matrix[i][j] * ci * cj;
                    }
                    acc += &linear[i] * ci;
                }
                Ok(Value::Exact(acc))
            }
            (Body::AdditiveCharacter { weights }, Element::Vector(v)) => {
                let mut acc = BigRational::zero();
                for (w, c) in weights.iter().zip(v.coords()) {
                    acc += w * BigRational::from_integer(c.clone());
                }
                Ok(Value::Exact(acc))
            }
            (Body::PatternCount(counter), Element::Word(w)) => {
                Ok(Value::from_bigint(BigInt::from(counter.eta(w)?)))
            }
            (Body::PatternTilde(counter), Element::Word(w)) => {
                Ok(Value::Exact(counter.eta_tilde_rational(w)?))
            }
            (Body::Pullback { hom, inner }, _) => {
                let y = hom.apply(x, &inner.carrier)?;
                inner.evaluate(&y)
            }
            (Body::Lookup { table }, _) => table
                .get(x)
                .cloned()
                .ok_or_else(|| Error::OutsideTable(x.to_string())),
            (Body::ScaledSum { terms }, _) => {
                let mut acc = Value::zero();
                for (w, f) in terms {
                    acc = acc.add(&f.eval_unchecked(x)?.mul_rational(w));
                }
                Ok(acc)
            }
            (
                Body::BoundedNoise {
                    amplitude,
                    seed,
                    even,
                },
                _,
            ) => {
                let key = if *even {
                    let inv = x.inverse()?;
                    std::cmp::min(x.clone(), inv)
                } else {
                    x.clone()
                };
                Ok(Value::Float(noise_sample(&key, *seed, *amplitude)))
            }
            _ => Err(Error::Domain(format!(
                "body cannot evaluate element kind {}",
                x.kind_name()
            ))),
        }
    }

    /// f(xⁿ) without materializing large word powers where a closed form
    /// exists for the body.
    pub fn eval_at_power(&self, x: &Element, n: u64) -> Result<Value> {
        if n == 0 {
            return self.evaluate(&self.carrier.pow(x, 0)?);
        }
        match (&self.body, x) {
            (Body::PatternCount(counter), Element::Word(w)) => {
                Ok(Value::from_bigint(counter.eta_repeat_count(w, n)?))
            }
            (Body::PatternTilde(counter), Element::Word(w)) => {
                // the linear law η̃(xⁿ) = n·η̃(x) is exact for every length
                let v = counter.eta_tilde_rational(w)?;
                Ok(Value::Exact(v * BigRational::from_integer(BigInt::from(n))))
            }
            (Body::ScaledSum { terms }, _) => {
                let mut acc = Value::zero();
                for (w, f) in terms {
                    acc = acc.add(&f.eval_at_power(x, n)?.mul_rational(w));
                }
                Ok(acc)
            }
            (Body::Pullback { hom, inner }, _) => {
                let y = hom.apply(x, &inner.carrier)?;
                inner.eval_at_power(&y, n)
            }
            _ => self.evaluate(&x.pow(n)?),
        }
    }

    /// f(x^(2ᵏ)); pattern counts go through the doubling recurrence.
    pub fn eval_at_dyadic_power(&self, x: &Element, k: u32) -> Result<Value> {
        match (&self.body, x) {
            (Body::PatternCount(counter), Element::Word(w)) => {
                Ok(Value::from_bigint(counter.eta_power_count(w, k)?))
            }
            (Body::PatternTilde(counter), Element::Word(w)) => {
                let v = counter.eta_tilde_rational(w)?;
                Ok(Value::Exact(
                    v * BigRational::from_integer(BigInt::from(1u8) << k),
                ))
            }
            (Body::ScaledSum { terms }, _) => {
                let mut acc = Value::zero();
                for (w, f) in terms {
                    acc = acc.add(&f.eval_at_dyadic_power(x, k)?.mul_rational(w));
                }
                Ok(acc)
            }
            (Body::Pullback { hom, inner }, _) => {
                let y = hom.apply(x, &inner.carrier)?;
                inner.eval_at_dyadic_power(&y, k)
            }
            _ => {
                if k >= 63 {
                    return Err(Error::TooLarge(format!("2^{k} exceeds the exponent cap")));
                }
                self.evaluate(&x.pow(1u64 << k)?)
            }
        }
    }

    pub fn describe(&self) -> String {
        match &self.body {
            Body::QuadraticForm { matrix, linear } => {
                format!(
                    "quadratic:{}",
                    matrix
                        .iter()
                        .flatten()
                        .chain(linear.iter())
                        .map(rational_str)
                        .collect::<Vec<_>>()
                        .join(",")
                )
            }
            Body::AdditiveCharacter { weights } => format!(
                "additive:{}",
                weights.iter().map(rational_str).collect::<Vec<_>>().join(",")
            ),
            Body::PatternCount(c) => format!("eta:{}", c.pattern()),
            Body::PatternTilde(c) => format!("etatilde:{}", c.pattern()),
            Body::Pullback { hom, inner } => {
                format!("pullback:{}:{}", hom.name(), inner.describe())
            }
            Body::Lookup { table } => format!("table[{} entries]", table.len()),
            Body::ScaledSum { terms } => {
                let parts: Vec<String> = terms
                    .iter()
                    .map(|(w, f)| format!("{}*({})", rational_str(w), f.describe()))
                    .collect();
                parts.join(" + ")
            }
            Body::BoundedNoise {
                amplitude,
                seed,
                even,
            } => format!(
                "noise:{amplitude}:{seed}{}",
                if *even { ":even" } else { "" }
            ),
        }
    }
}

fn rational_str(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

// ---------------------------------------------------------------------------
// seeded noise: FNV-1a over the canonical element encoding, finalized with
// splitmix64.  Stated here in full so every run is bit-reproducible.
// ---------------------------------------------------------------------------

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn fnv1a(bytes: &[u8], basis: u64) -> u64 {
    let mut h = basis;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01B3);
    }
    h
}

fn noise_sample(key: &Element, seed: u64, amplitude: f64) -> f64 {
    let mut bytes = Vec::new();
    key.canonical_bytes(&mut bytes);
    let basis = 0xCBF2_9CE4_8422_2325 ^ splitmix64(seed);
    let h = splitmix64(fnv1a(&bytes, basis));
    let unit = (h >> 11) as f64 / (1u64 << 53) as f64; // [0, 1)
    (2.0 * unit - 1.0) * amplitude
}

/// Parses a rational literal `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator `{p}`")))?;
        let q: BigInt = q
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator `{q}`")))?;
        if q.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(BigRational::new(p, q))
    } else {
        let p: BigInt = s
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer `{s}`")))?;
        Ok(BigRational::from_integer(p))
    }
}

/// Parses a value literal: rationals stay exact, decimal-point literals
/// become floats.
pub fn parse_value(s: &str) -> Result<Value> {
    let s = s.trim();
    if s.contains('.') {
        s.parse::<f64>()
            .map(Value::Float)
            .map_err(|_| Error::Parse(format!("bad float `{s}`")))
    } else {
        parse_rational(s).map(Value::Exact)
    }
}

/// Compact function literals, resolved against a carrier:
///
/// ```text
/// quadratic:<k²+k rationals>    vᵀMv + a·v, row-major M then a
/// additive:<k rationals>
/// eta[:pattern]                 pattern count (default aabb)
/// etatilde[:pattern]            its linear limit, closed form
/// noise:<amp>[:seed][:even]
/// pullback:<hom>:<rest>         hom ∈ {sum, modM, left, right}
/// ```
pub fn parse_fn_literal(carrier: &Carrier, s: &str) -> Result<RealFn> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("quadratic:") {
        let dim = lattice_dim(carrier)?;
        let vals: Vec<BigRational> = rest
            .split(',')
            .map(parse_rational)
            .collect::<Result<_>>()?;
        if vals.len() != dim * dim + dim {
            return Err(Error::Parse(format!(
                "quadratic on Z^{dim} needs {} values (row-major M then a), got {}",
                dim * dim + dim,
                vals.len()
            )));
        }
        let matrix: Vec<Vec<BigRational>> = (0..dim)
            .map(|i| vals[i * dim..(i + 1) * dim].to_vec())
            .collect();
        let linear = vals[dim * dim..].to_vec();
        return RealFn::new(carrier.clone(), Body::QuadraticForm { matrix, linear });
    }
    if let Some(rest) = s.strip_prefix("additive:") {
        let dim = lattice_dim(carrier)?;
        let weights: Vec<BigRational> = rest
            .split(',')
            .map(parse_rational)
            .collect::<Result<_>>()?;
        if weights.len() != dim {
            return Err(Error::Parse(format!(
                "additive on Z^{dim} needs {dim} weights"
            )));
        }
        return RealFn::new(carrier.clone(), Body::AdditiveCharacter { weights });
    }
    if s == "eta" || s.starts_with("eta:") {
        let counter = counter_for(carrier, s.strip_prefix("eta:").unwrap_or("aabb"))?;
        return RealFn::new(carrier.clone(), Body::PatternCount(counter));
    }
    if s == "etatilde" || s.starts_with("etatilde:") {
        let counter = counter_for(carrier, s.strip_prefix("etatilde:").unwrap_or("aabb"))?;
        return RealFn::new(carrier.clone(), Body::PatternTilde(counter));
    }
    if let Some(rest) = s.strip_prefix("noise:") {
        let mut parts = rest.split(':');
        let amp: f64 = parts
            .next()
            .unwrap_or_default()
            .parse()
            .map_err(|_| Error::Parse(format!("bad noise amplitude in `{s}`")))?;
        let mut seed = 0u64;
        let mut even = false;
        for p in parts {
            if p == "even" {
                even = true;
            } else {
                seed = p
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad noise seed `{p}`")))?;
            }
        }
        return RealFn::new(
            carrier.clone(),
            Body::BoundedNoise {
                amplitude: amp,
                seed,
                even,
            },
        );
    }
    if let Some(rest) = s.strip_prefix("pullback:") {
        let (hom_str, inner_str) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("pullback needs `hom:fn`: `{s}`")))?;
        let hom = Homomorphism::from_name(hom_str)?;
        let target = hom.target(carrier)?;
        let inner = parse_fn_literal(&target, inner_str)?;
        return RealFn::pullback(carrier.clone(), hom, inner);
    }
    Err(Error::Parse(format!("unknown function literal `{s}`")))
}

fn lattice_dim(carrier: &Carrier) -> Result<usize> {
    match carrier {
        Carrier::IntegerLattice { dim } => Ok(*dim),
        _ => Err(Error::Parse(format!(
            "function literal needs a lattice carrier, got {}",
            carrier.describe()
        ))),
    }
}

fn counter_for(carrier: &Carrier, pattern: &str) -> Result<PatternCounter> {
    match carrier {
        Carrier::FreeWords { alphabet, .. } => PatternCounter::new(
            crate::algebra::Word::from_str_unchecked(pattern),
            alphabet.clone(),
        ),
        _ => Err(Error::Parse(format!(
            "pattern counters need a free-word carrier, got {}",
            carrier.describe()
        ))),
    }
}

/// Declarative function description for JSON configs.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FnConfig {
    Quadratic {
        matrix: Vec<Vec<String>>,
        linear: Vec<String>,
    },
    Additive {
        weights: Vec<String>,
    },
    Eta {
        #[serde(default = "default_pattern")]
        pattern: String,
    },
    EtaTilde {
        #[serde(default = "default_pattern")]
        pattern: String,
    },
    Noise {
        amplitude: f64,
        #[serde(default)]
        seed: u64,
        #[serde(default)]
        even: bool,
    },
    Table {
        entries: Vec<(String, String)>,
    },
    Sum {
        terms: Vec<(String, FnConfig)>,
    },
    Pullback {
        hom: String,
        inner: Box<FnConfig>,
    },
}

fn default_pattern() -> String {
    "aabb".into()
}

impl FnConfig {
    pub fn build(&self, carrier: &Carrier) -> Result<RealFn> {
        match self {
            FnConfig::Quadratic { matrix, linear } => {
                let m: Vec<Vec<BigRational>> = matrix
                    .iter()
                    .map(|row| row.iter().map(|s| parse_rational(s)).collect())
                    .collect::<Result<_>>()?;
                let a: Vec<BigRational> =
                    linear.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?;
                RealFn::new(
                    carrier.clone(),
                    Body::QuadraticForm {
                        matrix: m,
                        linear: a,
                    },
                )
            }
            FnConfig::Additive { weights } => {
                let w: Vec<BigRational> =
                    weights.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?;
                RealFn::new(carrier.clone(), Body::AdditiveCharacter { weights: w })
            }
            FnConfig::Eta { pattern } => {
                let counter = counter_for(carrier, pattern)?;
                RealFn::new(carrier.clone(), Body::PatternCount(counter))
            }
            FnConfig::EtaTilde { pattern } => {
                let counter = counter_for(carrier, pattern)?;
                RealFn::new(carrier.clone(), Body::PatternTilde(counter))
            }
            FnConfig::Noise {
                amplitude,
                seed,
                even,
            } => RealFn::new(
                carrier.clone(),
                Body::BoundedNoise {
                    amplitude: *amplitude,
                    seed: *seed,
                    even: *even,
                },
            ),
            FnConfig::Table { entries } => {
                let mut table = BTreeMap::new();
                for (lit, val) in entries {
                    table.insert(literal::parse_element(carrier, lit)?, parse_value(val)?);
                }
                Ok(RealFn::lookup(carrier.clone(), table))
            }
            FnConfig::Sum { terms } => {
                let built: Vec<(BigRational, RealFn)> = terms
                    .iter()
                    .map(|(w, cfg)| Ok((parse_rational(w)?, cfg.build(carrier)?)))
                    .collect::<Result<_>>()?;
                RealFn::scaled_sum(built)
            }
            FnConfig::Pullback { hom, inner } => {
                let hom = Homomorphism::from_name(hom)?;
                let target = hom.target(carrier)?;
                let inner = inner.build(&target)?;
                RealFn::pullback(carrier.clone(), hom, inner)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{WreathElement, KLEIN_C};

    #[test]
    fn quadratic_form_evaluates() {
        let f = RealFn::parabola(1, 0);
        assert_eq!(f.evaluate(&Element::int(3)).unwrap(), Value::from_int(9));
    }

    #[test]
    fn additive_character_evaluates() {
        let f = RealFn::additive_int(&[2, -1]).unwrap();
        assert_eq!(
            f.evaluate(&Element::vector(&[1, 1])).unwrap(),
            Value::from_int(1)
        );
    }

    #[test]
    fn pattern_count_evaluates() {
        let f = RealFn::eta();
        assert_eq!(f.evaluate(&Element::word("aabb")).unwrap(), Value::from_int(1));
    }

    #[test]
    fn lookup_outside_table_is_domain_error() {
        let mut table = BTreeMap::new();
        table.insert(Element::int(1), Value::from_int(10));
        let f = RealFn::lookup(Carrier::integers(), table);
        assert!(f.evaluate(&Element::int(1)).is_ok());
        assert!(matches!(
            f.evaluate(&Element::int(2)),
            Err(Error::OutsideTable(_))
        ));
    }

    #[test]
    fn noise_is_deterministic_and_bounded() {
        let f = RealFn::noise(Carrier::integers(), 0.25, 7);
        let a = f.evaluate(&Element::int(123)).unwrap().to_f64();
        let b = f.evaluate(&Element::int(123)).unwrap().to_f64();
        assert_eq!(a, b);
        for n in -200..200 {
            let v = f.evaluate(&Element::int(n)).unwrap().to_f64();
            assert!(v.abs() <= 0.25, "noise out of range at {n}: {v}");
        }
    }

    #[test]
    fn even_noise_is_even() {
        let f = RealFn::even_noise(Carrier::integers(), 0.5, 3);
        for n in 1..100 {
            let a = f.evaluate(&Element::int(n)).unwrap().to_f64();
            let b = f.evaluate(&Element::int(-n)).unwrap().to_f64();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn symmetric_matrix_enforced() {
        let bad = RealFn::quadratic_int(2, &[&[1, 2], &[3, 1]], &[0, 0]);
        assert!(bad.is_err());
    }

    #[test]
    fn coordinate_sum_is_a_homomorphism() {
        let carrier = Carrier::Wreath {
            base: Box::new(Carrier::integers()),
        };
        let target = Carrier::integers();
        let hom = Homomorphism::CoordinateSum;
        let u = Element::Wreath(WreathElement::embed(Element::int(3)));
        let v = Element::Wreath(WreathElement::embed(Element::int(4)).conjugate(KLEIN_C));
        let uv = u.mul(&v).unwrap();
        let left = hom.apply(&uv, &target).unwrap();
        let right = hom
            .apply(&u, &target)
            .unwrap()
            .mul(&hom.apply(&v, &target).unwrap())
            .unwrap();
        assert_eq!(left, right);
        assert!(carrier.contains(&uv));
    }

    #[test]
    fn pullback_from_mod_two() {
        // f(n) = K·(n mod 2) pulled back from Z/2, with K = 5
        let mut table = BTreeMap::new();
        let z2 = Carrier::Cyclic { modulus: 2 };
        table.insert(
            literal::parse_element(&z2, "0").unwrap(),
            Value::from_int(0),
        );
        table.insert(
            literal::parse_element(&z2, "1").unwrap(),
            Value::from_int(5),
        );
        let inner = RealFn::lookup(z2, table);
        let f = RealFn::pullback(Carrier::integers(), Homomorphism::ModReduce(2), inner)
            .unwrap();
        assert_eq!(f.evaluate(&Element::int(7)).unwrap(), Value::from_int(5));
        assert_eq!(f.evaluate(&Element::int(-4)).unwrap(), Value::from_int(0));
    }

    #[test]
    fn fn_literal_round_trip() {
        let f = parse_fn_literal(&Carrier::integers(), "quadratic:1,0").unwrap();
        assert_eq!(f.evaluate(&Element::int(4)).unwrap(), Value::from_int(16));
        let g = parse_fn_literal(&Carrier::free_ab(), "eta").unwrap();
        assert_eq!(g.evaluate(&Element::word("aabb")).unwrap(), Value::from_int(1));
        let s = parse_fn_literal(&Carrier::integers(), "noise:0.5:9").unwrap();
        assert!(!s.is_exact());
    }

    #[test]
    fn eval_at_power_matches_direct() {
        let f = RealFn::eta();
        let x = Element::word("bbaa");
        for n in 1..=6u64 {
            let direct = f.evaluate(&x.pow(n).unwrap()).unwrap();
            assert_eq!(f.eval_at_power(&x, n).unwrap(), direct, "n = {n}");
        }
        let g = RealFn::parabola(1, 1);
        let y = Element::int(3);
        for n in 1..=6u64 {
            let direct = g.evaluate(&y.pow(n).unwrap()).unwrap();
            assert_eq!(g.eval_at_power(&y, n).unwrap(), direct);
        }
    }

    #[test]
    fn fn_config_json_round_trip() {
        let json = r#"{
            "kind": "sum",
            "terms": [
                ["1", {"kind": "quadratic", "matrix": [["1"]], "linear": ["1"]}],
                ["1", {"kind": "noise", "amplitude": 0.5, "seed": 42}]
            ]
        }"#;
        let cfg: FnConfig = serde_json::from_str(json).unwrap();
        let f = cfg.build(&Carrier::integers()).unwrap();
        let v = f.evaluate(&Element::int(2)).unwrap().to_f64();
        assert!((v - 6.0).abs() <= 0.5);
    }
}
