//! Adjoining an absorbing zero trivializes stability: putting y = z = 0 in
//! the defect collapses the seven terms to f(x) alone, so every
//! bounded-defect function on S⁰ is itself bounded.
//!
//! Run: `cargo run --example zero_absorption`

use std::collections::BTreeMap;

use kannappan::defect::kannappan_defect;
use kannappan::realfn::RealFn;
use kannappan::value::Value;
use kannappan::{Carrier, Element};
use kannappan::algebra::ZeroAdjoined;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let carrier = Carrier::ZeroAdjoined {
        base: Box::new(Carrier::free_ab()),
    };
    let zero = Element::Zero(ZeroAdjoined::zero());

    // absorption
    let w = Element::Zero(ZeroAdjoined::base(Element::word("abba")));
    println!("0 · abba = {}", zero.mul(&w).unwrap());
    println!("abba · 0 = {}", w.mul(&zero).unwrap());
    println!();

    // defect(f, x, 0, 0) = f(x) for arbitrary table functions
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut verified = 0;
    for _ in 0..1000 {
        let base = Carrier::free_ab().sample(&mut rng, 12);
        let x = Element::Zero(ZeroAdjoined::base(base));
        let mut table = BTreeMap::new();
        table.insert(zero.clone(), Value::ratio(rng.gen_range(-99..=99), 7));
        let fx = Value::ratio(rng.gen_range(-99..=99), 5);
        table.insert(x.clone(), fx.clone());
        let f = RealFn::lookup(carrier.clone(), table);
        assert_eq!(kannappan_defect(&f, &x, &zero, &zero).unwrap(), fx);
        verified += 1;
    }
    println!("defect(f, x, 0, 0) = f(x) exactly on {verified} random table functions;");
    println!("a defect bound d therefore bounds |f| itself: every bounded-defect");
    println!("function on a zero-adjoined semigroup is bounded, and the zero");
    println!("function witnesses stability.");
}
