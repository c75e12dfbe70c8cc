//! On periodic carriers both dyadic limits vanish identically, so every
//! bounded-defect function is within bounded distance of the zero solution:
//! the equation is stable there.
//!
//! Run: `cargo run --example periodic_collapse`

use std::collections::BTreeMap;

use kannappan::limits::{hat_limit, hat_limit_iterative, tilde_limit, LimitParams};
use kannappan::realfn::RealFn;
use kannappan::value::Value;
use kannappan::Carrier;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let params = LimitParams::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);

    for m in [2u64, 5, 12] {
        let carrier = Carrier::Cyclic { modulus: m };
        let elements = carrier.elements().unwrap();
        let mut table = BTreeMap::new();
        for e in &elements {
            table.insert(
                e.clone(),
                Value::ratio(rng.gen_range(-100..=100), rng.gen_range(1..=9)),
            );
        }
        let f = RealFn::lookup(carrier.clone(), table);

        let mut all_zero = true;
        for e in &elements {
            all_zero &= hat_limit(&f, e, &params).unwrap().value.is_exact_zero();
            all_zero &= tilde_limit(&f, e, &params, None).unwrap().value.is_exact_zero();
        }
        // the iterative route agrees: the orbit x^(2^k) cycles inside Z/m
        // while the normalization divides away
        let probe = &elements[(m / 2) as usize];
        let iter = hat_limit_iterative(&f, probe, &params).unwrap();
        println!(
            "Z/{m}: both limits exactly 0 on all {} elements: {all_zero}; \
             iterative value at {probe} after {} steps: {:.2e}",
            elements.len(),
            iter.iterations,
            iter.value.to_f64()
        );
    }
    println!();
    println!("every bounded-defect function on a periodic carrier is bounded,");
    println!("hence lies within bounded distance of the zero solution.");
}
