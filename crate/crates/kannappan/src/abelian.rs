//! Closed-form solving on ℤ^k.
//!
//! Every solution of the equation on an abelian group is B(x,x) + ψ(x) with
//! B a symmetric bimorphism and ψ additive, so on ℤ^k a handful of probe
//! points pins the model down exactly: the diagonal from e_i and 2e_i, the
//! off-diagonal from e_i + e_j.  The noisy variants recover the quadratic
//! part through the quartic limit (even inputs) or the additive part
//! through the linear limit (odd inputs) with certified deviation bounds.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::Zero;
use serde::Serialize;

use crate::algebra::{AbelianVector, Carrier, Element};
use crate::error::{Error, Result};
use crate::limits::{hat_limit, tilde_limit, LimitParams};
use crate::realfn::{Body, RealFn};
use crate::value::Value;

/// f(v) = vᵀMv + a·v with exact rational entries.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadraticAdditiveModel {
    pub form: Vec<Vec<String>>,
    pub additive: Vec<String>,
    #[serde(skip)]
    form_rat: Vec<Vec<BigRational>>,
    #[serde(skip)]
    additive_rat: Vec<BigRational>,
}

impl QuadraticAdditiveModel {
    pub fn new(form: Vec<Vec<BigRational>>, additive: Vec<BigRational>) -> Self {
        let form_str = form
            .iter()
            .map(|row| row.iter().map(rational_str).collect())
            .collect();
        let additive_str = additive.iter().map(rational_str).collect();
        QuadraticAdditiveModel {
            form: form_str,
            additive: additive_str,
            form_rat: form,
            additive_rat: additive,
        }
    }

    pub fn dim(&self) -> usize {
        self.additive_rat.len()
    }

    pub fn form_entries(&self) -> &[Vec<BigRational>] {
        &self.form_rat
    }

    pub fn additive_entries(&self) -> &[BigRational] {
        &self.additive_rat
    }

    pub fn evaluate(&self, v: &AbelianVector) -> Result<BigRational> {
        if v.dim() != self.dim() {
            return Err(Error::CarrierMismatch(format!(
                "model dimension {} vs vector dimension {}",
                self.dim(),
                v.dim()
            )));
        }
        let coords: Vec<BigRational> = v
            .coords()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut acc = BigRational::zero();
        for (i, ci) in coords.iter().enumerate() {
            for (j, cj) in coords.iter().enumerate() {
                acc += &self.form_rat[i][j] * ci * cj;
            }
            acc += &self.additive_rat[i] * ci;
        }
        Ok(acc)
    }

    pub fn evaluate_element(&self, e: &Element) -> Result<BigRational> {
        match e {
            Element::Vector(v) => self.evaluate(v),
            _ => Err(Error::CarrierMismatch(format!(
                "model evaluation needs a lattice element, got {}",
                e.kind_name()
            ))),
        }
    }

    pub fn to_realfn(&self) -> Result<RealFn> {
        RealFn::new(
            Carrier::lattice(self.dim()),
            Body::QuadraticForm {
                matrix: self.form_rat.clone(),
                linear: self.additive_rat.clone(),
            },
        )
    }
}

fn rational_str(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn lattice_dim(f: &RealFn) -> Result<usize> {
    match f.carrier() {
        Carrier::IntegerLattice { dim } => Ok(*dim),
        other => Err(Error::Domain(format!(
            "fit needs a lattice carrier, got {}",
            other.describe()
        ))),
    }
}

fn basis_element(dim: usize, i: usize) -> Element {
    Element::Vector(AbelianVector::basis(dim, i))
}

/// Probe-point fit of f(v) = vᵀMv + a·v:
/// M_ii = (f(2e_i) − 2f(e_i))/2,  a_i = f(e_i) − M_ii,
/// M_ij = (f(e_i+e_j) − f(e_i) − f(e_j))/2.
///
/// Exact rationals whenever f evaluates exactly; float values enter as the
/// exact binary rationals they denote.
pub fn fit_quadratic_additive(f: &RealFn) -> Result<QuadraticAdditiveModel> {
    let dim = lattice_dim(f)?;
    let two = BigRational::from_integer(BigInt::from(2));
    let probe = |e: &Element| -> Result<BigRational> { Ok(f.evaluate(e)?.to_rational()) };

    let mut form = vec![vec![BigRational::zero(); dim]; dim];
    let mut additive = vec![BigRational::zero(); dim];
    let mut f_basis = vec![BigRational::zero(); dim];
    for i in 0..dim {
        let ei = basis_element(dim, i);
        let f_ei = probe(&ei)?;
        let f_2ei = probe(&ei.pow(2)?)?;
        let m_ii = (&f_2ei - &two * &f_ei) / &two;
        additive[i] = &f_ei - &m_ii;
        form[i][i] = m_ii;
        f_basis[i] = f_ei;
    }
    for i in 0..dim {
        for j in (i + 1)..dim {
            let eij = basis_element(dim, i).mul(&basis_element(dim, j))?;
            let m_ij = (probe(&eij)? - &f_basis[i] - &f_basis[j]) / &two;
            form[i][j] = m_ij.clone();
            form[j][i] = m_ij;
        }
    }
    Ok(QuadraticAdditiveModel::new(form, additive))
}

/// sup over the corpus of |f(v) − model(v)|.
pub fn model_residual(
    model: &QuadraticAdditiveModel,
    f: &RealFn,
    corpus: &[Element],
) -> Result<Value> {
    if corpus.is_empty() {
        return Err(Error::Domain("model residual needs a nonempty corpus".into()));
    }
    let mut sup = Value::zero();
    for x in corpus {
        let dev = f
            .evaluate(x)?
            .sub(&Value::Exact(model.evaluate_element(x)?))
            .abs();
        if dev.cmp_abs(&sup) == std::cmp::Ordering::Greater {
            sup = dev;
        }
    }
    Ok(sup)
}

/// Outcome of a noisy quadratic recovery.
#[derive(Debug, Clone, Serialize)]
pub struct JungRecovery {
    pub model: QuadraticAdditiveModel,
    #[serde(serialize_with = "crate::report::value_as_string")]
    pub sup_dev: Value,
    #[serde(serialize_with = "crate::report::value_as_string")]
    pub defect_bound: Value,
    #[serde(serialize_with = "crate::report::value_as_string")]
    pub deviation_bound: Value,
    pub within_bound: bool,
    #[serde(serialize_with = "crate::report::value_as_string")]
    pub symmetry_sup: Value,
}

/// Recovers the unique quadratic Q near an approximately even f:
/// Q is materialized from the quartic limit at the probe points and fit to
/// a pure form; asserts sup|f − Q| ≤ 3·d for the supplied defect bound d.
///
/// The evenness hypothesis sup|f(v) − f(−v)| ≤ θ is checked over the corpus
/// first and a violation is a domain error naming the witness.
pub fn jung_recover(
    f: &RealFn,
    corpus: &[Element],
    defect_bound: &Value,
    odd_bound: f64,
) -> Result<JungRecovery> {
    let dim = lattice_dim(f)?;
    if corpus.is_empty() {
        return Err(Error::Domain("recovery needs a nonempty corpus".into()));
    }
    let mut symmetry_sup = Value::zero();
    for x in corpus {
        let gap = f.evaluate(x)?.sub(&f.evaluate(&x.inverse()?)?).abs();
        if gap.to_f64() > odd_bound {
            return Err(Error::Domain(format!(
                "evenness check failed at {x}: |f(x) − f(−x)| = {gap} > {odd_bound}"
            )));
        }
        if gap.cmp_abs(&symmetry_sup) == std::cmp::Ordering::Greater {
            symmetry_sup = gap;
        }
    }

    let params = LimitParams::default();
    let hat_at = |e: &Element| -> Result<BigRational> {
        Ok(hat_limit(f, e, &params)?.value.to_rational())
    };
    let two = BigRational::from_integer(BigInt::from(2));
    let mut form = vec![vec![BigRational::zero(); dim]; dim];
    let mut hat_basis = vec![BigRational::zero(); dim];
    for i in 0..dim {
        let h = hat_at(&basis_element(dim, i))?;
        form[i][i] = h.clone();
        hat_basis[i] = h;
    }
    for i in 0..dim {
        for j in (i + 1)..dim {
            let eij = basis_element(dim, i).mul(&basis_element(dim, j))?;
            let b_ij = (hat_at(&eij)? - &hat_basis[i] - &hat_basis[j]) / &two;
            form[i][j] = b_ij.clone();
            form[j][i] = b_ij;
        }
    }
    let model = QuadraticAdditiveModel::new(form, vec![BigRational::zero(); dim]);

    let mut sup_dev = Value::zero();
    for x in corpus {
        let dev = f
            .evaluate(x)?
            .sub(&Value::Exact(model.evaluate_element(x)?))
            .abs();
        if dev.cmp_abs(&sup_dev) == std::cmp::Ordering::Greater {
            sup_dev = dev;
        }
    }
    let deviation_bound = defect_bound.mul(&Value::from_int(3));
    let within_bound = sup_dev.abs_le(&deviation_bound);
    Ok(JungRecovery {
        model,
        sup_dev,
        defect_bound: defect_bound.clone(),
        deviation_bound,
        within_bound,
        symmetry_sup,
    })
}

/// Odd companion: recovers the additive part of an approximately odd f
/// through the linear limit at the basis points.  The deviation bound
/// θ/2 + 4d follows from the decomposition chain: oddness forces the
/// quartic part below (θ + 2·|remainder|)/2 with |remainder| ≤ 2d, and a
/// bounded function in the quartic class vanishes.
pub fn jung_recover_odd(
    f: &RealFn,
    corpus: &[Element],
    defect_bound: &Value,
    even_bound: f64,
) -> Result<JungRecovery> {
    let dim = lattice_dim(f)?;
    if corpus.is_empty() {
        return Err(Error::Domain("recovery needs a nonempty corpus".into()));
    }
    let mut symmetry_sup = Value::zero();
    for x in corpus {
        let gap = f.evaluate(x)?.add(&f.evaluate(&x.inverse()?)?).abs();
        if gap.to_f64() > even_bound {
            return Err(Error::Domain(format!(
                "oddness check failed at {x}: |f(x) + f(−x)| = {gap} > {even_bound}"
            )));
        }
        if gap.cmp_abs(&symmetry_sup) == std::cmp::Ordering::Greater {
            symmetry_sup = gap;
        }
    }

    let params = LimitParams::default();
    let mut additive = vec![BigRational::zero(); dim];
    for (i, slot) in additive.iter_mut().enumerate() {
        let t = tilde_limit(f, &basis_element(dim, i), &params, None)?;
        *slot = t.value.to_rational();
    }
    let model =
        QuadraticAdditiveModel::new(vec![vec![BigRational::zero(); dim]; dim], additive);

    let mut sup_dev = Value::zero();
    for x in corpus {
        let dev = f
            .evaluate(x)?
            .sub(&Value::Exact(model.evaluate_element(x)?))
            .abs();
        if dev.cmp_abs(&sup_dev) == std::cmp::Ordering::Greater {
            sup_dev = dev;
        }
    }
    let deviation_bound = Value::Float(even_bound / 2.0)
        .add(&defect_bound.mul(&Value::from_int(4)));
    let within_bound = sup_dev.abs_le(&deviation_bound);
    Ok(JungRecovery {
        model,
        sup_dev,
        defect_bound: defect_bound.clone(),
        deviation_bound,
        within_bound,
        symmetry_sup,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realfn::RealFn;
    use num::traits::{One, Signed};

    #[test]
    fn fit_recovers_the_running_example() {
        // f(v) = v₁² + 4v₁v₂ + 3v₂² + 5v₁ − v₂ → M = [[1,2],[2,3]], a = (5,−1)
        let f = RealFn::quadratic_int(2, &[&[1, 2], &[2, 3]], &[5, -1]).unwrap();
        let model = fit_quadratic_additive(&f).unwrap();
        let int = |n: i64| BigRational::from_integer(BigInt::from(n));
        assert_eq!(
            model.form_entries(),
            &[vec![int(1), int(2)], vec![int(2), int(3)]]
        );
        assert_eq!(model.additive_entries(), &[int(5), int(-1)]);
    }

    #[test]
    fn fit_recovers_pure_parts() {
        let quad = RealFn::parabola(1, 0);
        let m = fit_quadratic_additive(&quad).unwrap();
        assert_eq!(m.form_entries()[0][0], BigRational::one());
        assert!(m.additive_entries()[0].is_zero());

        let additive = RealFn::additive_int(&[7]).unwrap();
        let m = fit_quadratic_additive(&additive).unwrap();
        assert!(m.form_entries()[0][0].is_zero());
        assert_eq!(
            m.additive_entries()[0],
            BigRational::from_integer(BigInt::from(7))
        );
    }

    #[test]
    fn residual_vanishes_on_exact_models() {
        let f = RealFn::quadratic_int(2, &[&[2, -1], &[-1, 4]], &[0, 3]).unwrap();
        let model = fit_quadratic_additive(&f).unwrap();
        let corpus: Vec<Element> = (-10..=10)
            .flat_map(|a| (-10..=10).map(move |b| Element::vector(&[a, b])))
            .collect();
        let r = model_residual(&model, &f, &corpus).unwrap();
        assert!(r.is_exact_zero());
        assert!(model_residual(&model, &f, &[]).is_err());
    }

    #[test]
    fn residual_of_noisy_model_is_within_amplitude() {
        let base = RealFn::parabola(3, -2);
        let f = RealFn::sum_of(base, RealFn::noise(Carrier::integers(), 0.25, 5)).unwrap();
        let model = QuadraticAdditiveModel::new(
            vec![vec![BigRational::from_integer(BigInt::from(3))]],
            vec![BigRational::from_integer(BigInt::from(-2))],
        );
        let corpus: Vec<Element> = (-50..=50).map(Element::int).collect();
        let r = model_residual(&model, &f, &corpus).unwrap();
        assert!(r.to_f64() <= 0.25 + 1e-12);
    }

    #[test]
    fn residual_rejects_non_lattice_carriers() {
        let model = QuadraticAdditiveModel::new(
            vec![vec![BigRational::one()]],
            vec![BigRational::zero()],
        );
        let eta = RealFn::eta();
        let corpus = vec![Element::word("aabb")];
        assert!(model_residual(&model, &eta, &corpus).is_err());
    }

    #[test]
    fn jung_recovery_on_exact_quadratic() {
        let f = RealFn::parabola(1, 0);
        let corpus: Vec<Element> = (-20..=20).map(Element::int).collect();
        let r = jung_recover(&f, &corpus, &Value::from_int(1), 0.0).unwrap();
        assert_eq!(r.model.form_entries()[0][0], BigRational::one());
        assert!(r.sup_dev.is_exact_zero());
        assert!(r.within_bound);
    }

    #[test]
    fn jung_recovery_with_even_noise() {
        let f = RealFn::sum_of(
            RealFn::parabola(2, 0),
            RealFn::even_noise(Carrier::integers(), 0.1, 13),
        )
        .unwrap();
        let corpus: Vec<Element> = (-40..=40).filter(|n| *n != 0).map(Element::int).collect();
        // d is the measured defect sup over a small sweep
        let triples: Vec<_> = (1..=10)
            .map(|n| (Element::int(n), Element::int(-n - 1), Element::int(2 * n)))
            .collect();
        let d = crate::defect::sup_defect(&f, &triples).unwrap().sup_estimate;
        let r = jung_recover(&f, &corpus, &d, 1e-12).unwrap();
        assert_eq!(
            r.model.form_entries()[0][0],
            BigRational::from_integer(BigInt::from(2))
        );
        assert!(r.sup_dev.to_f64() <= 0.1 + 1e-12);
        assert!(r.within_bound, "sup_dev {} vs 3d {}", r.sup_dev, r.deviation_bound);
    }

    #[test]
    fn jung_recovery_of_a_plane_form_with_even_noise() {
        use crate::realfn::Body;
        // rational symmetric M on Z² plus even noise: M comes back exactly
        let matrix = vec![
            vec![BigRational::new(BigInt::from(3), BigInt::from(2)), BigRational::one()],
            vec![BigRational::one(), BigRational::new(BigInt::from(-5), BigInt::from(4))],
        ];
        let form = RealFn::new(
            Carrier::lattice(2),
            Body::QuadraticForm {
                matrix: matrix.clone(),
                linear: vec![BigRational::zero(), BigRational::zero()],
            },
        )
        .unwrap();
        let f = RealFn::sum_of(form, RealFn::even_noise(Carrier::lattice(2), 0.05, 77)).unwrap();
        let corpus: Vec<Element> = (-8..=8)
            .flat_map(|a| (-8..=8).map(move |b| Element::vector(&[a, b])))
            .filter(|e| !e.is_identity())
            .collect();
        let r = jung_recover(&f, &corpus, &Value::Float(0.35), 1e-12).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let got = r.model.form_entries()[i][j].clone();
                let want = matrix[i][j].clone();
                assert!(
                    (got - want).abs() < BigRational::new(BigInt::one(), BigInt::from(1_000_000)),
                    "entry ({i},{j})"
                );
            }
        }
        assert!(r.within_bound);
    }

    #[test]
    fn evenness_violation_names_the_witness() {
        let f = RealFn::parabola(0, 1); // odd
        let corpus: Vec<Element> = (-5..=5).filter(|n| *n != 0).map(Element::int).collect();
        let err = jung_recover(&f, &corpus, &Value::from_int(1), 0.5).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("evenness check failed"), "{msg}");
    }

    #[test]
    fn odd_recovery_returns_the_additive_part() {
        let f = RealFn::sum_of(
            RealFn::parabola(0, 3),
            RealFn::noise(Carrier::integers(), 0.05, 99),
        )
        .unwrap();
        let corpus: Vec<Element> = (-30..=30).filter(|n| *n != 0).map(Element::int).collect();
        let r = jung_recover_odd(&f, &corpus, &Value::Float(0.35), 0.2).unwrap();
        assert_eq!(
            r.model.additive_entries()[0],
            BigRational::from_integer(BigInt::from(3))
        );
        assert!(r.within_bound);
    }

    #[test]
    fn two_corpora_recover_the_same_model() {
        let f = RealFn::sum_of(
            RealFn::parabola(5, 0),
            RealFn::even_noise(Carrier::integers(), 0.2, 21),
        )
        .unwrap();
        let c1: Vec<Element> = (1..=30).map(Element::int).collect();
        let c2: Vec<Element> = (-30..=-1).map(Element::int).collect();
        let r1 = jung_recover(&f, &c1, &Value::from_int(2), 0.5).unwrap();
        let r2 = jung_recover(&f, &c2, &Value::from_int(2), 0.5).unwrap();
        assert_eq!(r1.model, r2.model);
    }
}
