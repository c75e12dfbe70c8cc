//! Defect operators for the equation
//! f(xyz) + f(x) + f(y) + f(z) − f(xy) − f(xz) − f(yz) = 0
//! and the derived n-fold, power, and square-composition inequalities.

use serde::Serialize;

use crate::algebra::Element;
use crate::error::{Error, Result};
use crate::realfn::RealFn;
use crate::value::{sum, Value};

/// The defect f(xyz)+f(x)+f(y)+f(z)−f(xy)−f(xz)−f(yz); exact when f is.
pub fn kannappan_defect(
    f: &RealFn,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Result<Value> {
    let xy = x.mul(y)?;
    let xz = x.mul(z)?;
    let yz = y.mul(z)?;
    let xyz = xy.mul(z)?;
    let pos = sum([
        &f.evaluate(&xyz)?,
        &f.evaluate(x)?,
        &f.evaluate(y)?,
        &f.evaluate(z)?,
    ]);
    let neg = sum([&f.evaluate(&xy)?, &f.evaluate(&xz)?, &f.evaluate(&yz)?]);
    Ok(pos.sub(&neg))
}

/// Sweep statistics for a defect corpus: the sup of |defect| together with
/// the witnessing triple (lexicographically smallest among maxima).
#[derive(Debug, Clone, Serialize)]
pub struct DefectReport {
    #[serde(serialize_with = "crate::report::value_as_string")]
    pub value: Value,
    pub triple: (String, String, String),
    #[serde(serialize_with = "crate::report::value_as_string")]
    pub sup_estimate: Value,
    pub samples: usize,
    pub arithmetic: &'static str,
}

pub fn sup_defect(
    f: &RealFn,
    corpus: &[(Element, Element, Element)],
) -> Result<DefectReport> {
    if corpus.is_empty() {
        return Err(Error::Domain("defect sweep needs a nonempty corpus".into()));
    }
    let mut best: Option<(Value, &(Element, Element, Element))> = None;
    for triple in corpus {
        let d = kannappan_defect(f, &triple.0, &triple.1, &triple.2)?;
        best = Some(match best {
            None => (d, triple),
            Some((cur, cur_triple)) => match d.cmp_abs(&cur) {
                std::cmp::Ordering::Greater => (d, triple),
                std::cmp::Ordering::Equal if triple < cur_triple => (d, triple),
                _ => (cur, cur_triple),
            },
        });
    }
    let (value, triple) = best.expect("nonempty corpus");
    Ok(DefectReport {
        sup_estimate: value.abs(),
        value,
        triple: (
            triple.0.to_string(),
            triple.1.to_string(),
            triple.2.to_string(),
        ),
        samples: corpus.len(),
        arithmetic: if f.is_exact() { "exact" } else { "float" },
    })
}

/// The coefficient (n−2)(n−1)/2 that scales a defect bound c through the
/// n-fold inequality; (n−2)(n−1) is always even.
pub fn nfold_coefficient(n: u64) -> Value {
    Value::from_int(((n - 2) * (n - 1) / 2) as i64)
}

/// f(x₁⋯xₙ) + (n−2)·Σf(xᵢ) − Σ_{i<j} f(xᵢxⱼ) with its bound
/// (n−2)(n−1)/2·c; n = 3 coincides with the plain defect.
pub fn nfold_defect(f: &RealFn, xs: &[Element], c: &Value) -> Result<(Value, Value)> {
    let n = xs.len();
    if n < 3 {
        return Err(Error::Domain(format!("n-fold defect needs n >= 3, got {n}")));
    }
    let mut product = xs[0].clone();
    for x in &xs[1..] {
        product = product.mul(x)?;
    }
    let mut value = f.evaluate(&product)?;
    let n_minus_2 = Value::from_int(n as i64 - 2);
    for x in xs {
        value = value.add(&f.evaluate(x)?.mul(&n_minus_2));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            value = value.sub(&f.evaluate(&xs[i].mul(&xs[j])?)?);
        }
    }
    let bound = nfold_coefficient(n as u64).mul(c);
    Ok((value, bound))
}

/// f(xⁿ) + (n−2)n·f(x) − (n−1)n/2·f(x²) with bound (n−2)(n−1)/2·c.
/// Word powers are evaluated through the body's closed form, never
/// materialized beyond the guard.
pub fn power_defect(f: &RealFn, x: &Element, n: u64, c: &Value) -> Result<(Value, Value)> {
    if n < 3 {
        return Err(Error::Domain(format!("power defect needs n >= 3, got {n}")));
    }
    let n_i = n as i64;
    let value = f
        .eval_at_power(x, n)?
        .add(&f.evaluate(x)?.mul(&Value::from_int((n_i - 2) * n_i)))
        .sub(&f.eval_at_power(x, 2)?.mul(&Value::ratio((n_i - 1) * n_i, 2)));
    let bound = nfold_coefficient(n).mul(c);
    Ok((value, bound))
}

/// The defect of φ(x) = f(x²) at (x, y, z), bounded by 21c when c bounds
/// the defect of f on the generated subsemigroup.
pub fn square_compose_defect(
    f: &RealFn,
    x: &Element,
    y: &Element,
    z: &Element,
    c: &Value,
) -> Result<(Value, Value)> {
    let xy = x.mul(y)?;
    let xz = x.mul(z)?;
    let yz = y.mul(z)?;
    let xyz = xy.mul(z)?;
    let phi = |e: &Element| -> Result<Value> { f.evaluate(&e.square()?) };
    let pos = sum([&phi(&xyz)?, &phi(x)?, &phi(y)?, &phi(z)?]);
    let neg = sum([&phi(&xy)?, &phi(&xz)?, &phi(&yz)?]);
    Ok((pos.sub(&neg), c.mul(&Value::from_int(21))))
}

/// Both residuals of the quadratic exchange identity on a group carrier.
///
/// `as_printed` is the residual of
///   f(xyz) + f(xzy) = f(x) + 3f(y) + 3f(z) + f(xy) + f(xz) − f(yz)
/// exactly as that identity is usually displayed; it is nonzero already for
/// f(n) = n² at (0, 0, 1).  `corrected` is the residual of the identity
/// obtained by combining the three quadratic-equation instances
///   f(xyz)+f(xyz⁻¹) = 2f(xy)+2f(z)
///   f(xyz⁻¹)+f(xzy⁻¹) = 2f(x)+2f(yz⁻¹)
///   f(xzy⁻¹)+f(xzy) = 2f(xz)+2f(y)
/// with f(yz⁻¹) = 2f(y)+2f(z)−f(yz), namely
///   f(xyz) + f(xzy) + 2f(x) + 2f(y) + 2f(z) − 2f(xy) − 2f(xz) − 2f(yz) = 0,
/// which every quadratic function on a group satisfies.
pub fn quadratic_exchange_residuals(
    f: &RealFn,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Result<(Value, Value)> {
    if !f.carrier().is_group() {
        return Err(Error::Domain(format!(
            "quadratic exchange needs a group carrier, got {}",
            f.carrier().describe()
        )));
    }
    let xy = x.mul(y)?;
    let xz = x.mul(z)?;
    let yz = y.mul(z)?;
    let xyz = xy.mul(z)?;
    let xzy = xz.mul(y)?;
    let two = Value::from_int(2);
    let three = Value::from_int(3);

    let fx = f.evaluate(x)?;
    let fy = f.evaluate(y)?;
    let fz = f.evaluate(z)?;
    let fxy = f.evaluate(&xy)?;
    let fxz = f.evaluate(&xz)?;
    let fyz = f.evaluate(&yz)?;
    let fxyz = f.evaluate(&xyz)?;
    let fxzy = f.evaluate(&xzy)?;

    let lhs = fxyz.add(&fxzy);
    let printed_rhs = sum([&fx, &fy.mul(&three), &fz.mul(&three), &fxy, &fxz]).sub(&fyz);
    let as_printed = lhs.sub(&printed_rhs);

    let corrected = lhs
        .add(&sum([&fx.mul(&two), &fy.mul(&two), &fz.mul(&two)]))
        .sub(&sum([&fxy.mul(&two), &fxz.mul(&two), &fyz.mul(&two)]));
    Ok((as_printed, corrected))
}
