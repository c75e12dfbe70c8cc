//! Algebraic-law property tests: associativity and power laws on every
//! carrier, the wreath action by automorphisms, exactness of the defect on
//! abelian solutions, and the counting-function windows.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use proptest::prelude::*;

use kannappan::algebra::{
    AbelianVector, Carrier, CyclicElement, Element, KleinFourElement, Word, WreathElement,
    ZeroAdjoined, KLEIN_ONE,
};
use kannappan::defect::{kannappan_defect, nfold_defect};
use kannappan::eta::PatternCounter;
use kannappan::realfn::RealFn;
use kannappan::value::Value;

fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::bool::ANY, 1..=max_len)
        .prop_map(|bits| Word::new(bits.iter().map(|&b| if b { b'b' } else { b'a' }).collect()))
}

fn vector_strategy(dim: usize) -> impl Strategy<Value = AbelianVector> {
    prop::collection::vec(-1_000_000i64..=1_000_000, dim)
        .prop_map(|coords| AbelianVector::from_i64(&coords))
}

fn klein_strategy() -> impl Strategy<Value = KleinFourElement> {
    (0usize..4).prop_map(|i| KleinFourElement::all()[i])
}

fn wreath_strategy() -> impl Strategy<Value = WreathElement> {
    (
        klein_strategy(),
        prop::collection::btree_map(klein_strategy(), -1000i64..=1000, 0..=4),
    )
        .prop_map(|(top, slots)| {
            let slots: BTreeMap<KleinFourElement, Element> = slots
                .into_iter()
                .map(|(k, v)| (k, Element::int(v)))
                .collect();
            WreathElement::new(top, slots)
        })
}

fn zero_word_strategy() -> impl Strategy<Value = Element> {
    prop_oneof![
        1 => Just(Element::Zero(ZeroAdjoined::zero())),
        9 => word_strategy(8).prop_map(|w| Element::Zero(ZeroAdjoined::base(Element::Word(w)))),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn words_associate(x in word_strategy(30), y in word_strategy(30), z in word_strategy(30)) {
        let xy_z = x.concat(&y).concat(&z);
        let x_yz = x.concat(&y.concat(&z));
        prop_assert_eq!(xy_z, x_yz);
    }

    #[test]
    fn vectors_associate(x in vector_strategy(3), y in vector_strategy(3), z in vector_strategy(3)) {
        let l = x.add(&y).unwrap().add(&z).unwrap();
        let r = x.add(&y.add(&z).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn cyclic_associate(a in 0i64..=11, b in 0i64..=11, c in 0i64..=11, m in 1u64..=12) {
        let x = Element::Cyclic(CyclicElement::new(a, m).unwrap());
        let y = Element::Cyclic(CyclicElement::new(b, m).unwrap());
        let z = Element::Cyclic(CyclicElement::new(c, m).unwrap());
        let l = x.mul(&y).unwrap().mul(&z).unwrap();
        let r = x.mul(&y.mul(&z).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn zero_adjoined_associate(x in zero_word_strategy(), y in zero_word_strategy(), z in zero_word_strategy()) {
        let l = x.mul(&y).unwrap().mul(&z).unwrap();
        let r = x.mul(&y.mul(&z).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn superadditivity_window(u in word_strategy(40), v in word_strategy(40)) {
        let counter = PatternCounter::aabb();
        let d = counter.eta(&u.concat(&v)).unwrap() as i64
            - counter.eta(&u).unwrap() as i64
            - counter.eta(&v).unwrap() as i64;
        prop_assert!((0..=1).contains(&d));
    }

    #[test]
    fn triple_window(u in word_strategy(25), v in word_strategy(25), w in word_strategy(25)) {
        let counter = PatternCounter::aabb();
        let uvw = u.concat(&v).concat(&w);
        let d = counter.eta(&uvw).unwrap() as i64
            - counter.eta(&u).unwrap() as i64
            - counter.eta(&v).unwrap() as i64
            - counter.eta(&w).unwrap() as i64;
        prop_assert!((0..=2).contains(&d));
    }

    #[test]
    fn abelian_solutions_have_zero_defect(
        x in vector_strategy(2),
        y in vector_strategy(2),
        z in vector_strategy(2),
        m11 in -9i64..=9, m12 in -9i64..=9, m22 in -9i64..=9,
        a1 in -9i64..=9, a2 in -9i64..=9,
    ) {
        let f = RealFn::quadratic_int(2, &[&[m11, m12], &[m12, m22]], &[a1, a2]).unwrap();
        let d = kannappan_defect(
            &f,
            &Element::Vector(x),
            &Element::Vector(y),
            &Element::Vector(z),
        )
        .unwrap();
        prop_assert!(d.is_exact_zero());
    }

    #[test]
    fn quadratic_functional_equation_on_forms(
        x in vector_strategy(2),
        y in vector_strategy(2),
        m11 in -9i64..=9, m12 in -9i64..=9, m22 in -9i64..=9,
    ) {
        // f(x+y) + f(x−y) = 2f(x) + 2f(y) for pure forms
        let f = RealFn::quadratic_int(2, &[&[m11, m12], &[m12, m22]], &[0, 0]).unwrap();
        let xy = x.add(&y).unwrap();
        let x_minus_y = x.add(&y.neg()).unwrap();
        let lhs = f.evaluate(&Element::Vector(xy)).unwrap()
            .add(&f.evaluate(&Element::Vector(x_minus_y)).unwrap());
        let rhs = f.evaluate(&Element::Vector(x)).unwrap()
            .add(&f.evaluate(&Element::Vector(y)).unwrap())
            .mul(&Value::from_int(2));
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn wreath_associates(x in wreath_strategy(), y in wreath_strategy(), z in wreath_strategy()) {
        let l = x.mul(&y).unwrap().mul(&z).unwrap();
        let r = x.mul(&y.mul(&z).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn wreath_action_is_by_automorphisms(
        u in wreath_strategy(),
        v in wreath_strategy(),
        t in klein_strategy(),
    ) {
        let lhs = u.mul(&v).unwrap().conjugate(t);
        let rhs = u.conjugate(t).mul(&v.conjugate(t)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn power_law_on_words(x in word_strategy(12), m in 1u64..=16, n in 1u64..=16) {
        let e = Element::Word(x);
        let l = e.pow(m + n).unwrap();
        let r = e.pow(m).unwrap().mul(&e.pow(n).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn power_law_on_wreath(x in wreath_strategy(), m in 1u64..=16, n in 1u64..=16) {
        let e = Element::Wreath(x);
        let l = e.pow(m + n).unwrap();
        let r = e.pow(m).unwrap().mul(&e.pow(n).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn nfold_at_three_is_the_defect(
        x in word_strategy(15),
        y in word_strategy(15),
        z in word_strategy(15),
    ) {
        let f = RealFn::eta();
        let xs = [Element::Word(x), Element::Word(y), Element::Word(z)];
        let (value, _) = nfold_defect(&f, &xs, &Value::from_int(5)).unwrap();
        let direct = kannappan_defect(&f, &xs[0], &xs[1], &xs[2]).unwrap();
        prop_assert_eq!(value, direct);
    }

    #[test]
    fn linear_limit_is_multiplicative(x in word_strategy(8), m in 1u64..=16) {
        let counter = PatternCounter::aabb();
        let xm = x.repeat(m).unwrap();
        let lhs = counter.eta_tilde(&xm).unwrap();
        let rhs = BigInt::from(m) * counter.eta_tilde(&x).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn crossing_count_matches_definition(x in word_strategy(20)) {
        let counter = PatternCounter::aabb();
        let direct = counter.eta(&x.concat(&x)).unwrap() as i64
            - 2 * counter.eta(&x).unwrap() as i64;
        prop_assert_eq!(counter.crossing_count(&x).unwrap() as i64, direct);
    }

    #[test]
    fn scaled_sums_of_solutions_stay_solutions(
        x in -1000i64..=1000,
        y in -1000i64..=1000,
        z in -1000i64..=1000,
        wq in -5i64..=5,
        wa in -5i64..=5,
    ) {
        let f = RealFn::scaled_sum(vec![
            (BigRational::from_integer(BigInt::from(wq)), RealFn::parabola(1, 0)),
            (BigRational::from_integer(BigInt::from(wa)), RealFn::parabola(0, 1)),
        ])
        .unwrap();
        let d = kannappan_defect(&f, &Element::int(x), &Element::int(y), &Element::int(z))
            .unwrap();
        prop_assert!(d.is_exact_zero());
    }
}

#[test]
fn zero_is_two_sided_absorbing_exhaustively() {
    let zero = Element::Zero(ZeroAdjoined::zero());
    let base = Element::Zero(ZeroAdjoined::base(Element::word("ab")));
    for (l, r) in [
        (&zero, &zero),
        (&zero, &base),
        (&base, &zero),
    ] {
        assert_eq!(l.mul(r).unwrap(), zero);
    }
    assert_ne!(base.mul(&base).unwrap(), zero);
}

#[test]
fn klein_four_group_exhaustive() {
    for x in KleinFourElement::all() {
        assert_eq!(x.mul(x), KLEIN_ONE);
        for y in KleinFourElement::all() {
            assert_eq!(x.mul(y), y.mul(x));
            for z in KleinFourElement::all() {
                assert_eq!(x.mul(y).mul(z), x.mul(y.mul(z)));
            }
        }
    }
}

#[test]
fn embedding_chain_three_levels() {
    // words → words ≀ C → (words ≀ C) ≀ C → ...: embedding stays slot-1
    // supported and commutes with products
    let monoid = Carrier::FreeWords {
        alphabet: kannappan::algebra::Alphabet::ab(),
        with_unit: true,
    };
    let mut carrier = monoid;
    let mut u = Element::word("ab");
    let mut v = Element::word("ba");
    let mut uv = u.mul(&v).unwrap();
    for _ in 0..3 {
        carrier = Carrier::Wreath {
            base: Box::new(carrier),
        };
        u = Element::Wreath(WreathElement::embed(u));
        v = Element::Wreath(WreathElement::embed(v));
        uv = Element::Wreath(WreathElement::embed(uv));
        assert!(carrier.contains(&u));
        assert_eq!(u.mul(&v).unwrap(), uv);
        if let Element::Wreath(w) = &u {
            assert!(w.is_slot_one_supported());
        }
    }
}
