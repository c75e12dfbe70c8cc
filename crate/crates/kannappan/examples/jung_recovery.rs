//! Noisy recovery with certified deviation bounds.
//!
//! An approximately even function with defect bound d lies within 3d of a
//! unique quadratic, recovered here through the quartic limit; the odd
//! companion recovers the additive part through the linear limit.
//!
//! Run: `cargo run --example jung_recovery`

use kannappan::abelian::{jung_recover, jung_recover_odd};
use kannappan::defect::sup_defect;
use kannappan::realfn::RealFn;
use kannappan::value::Value;
use kannappan::{Carrier, Element};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    // even case: f = 3n² + even noise
    let f = RealFn::sum_of(
        RealFn::parabola(3, 0),
        RealFn::even_noise(Carrier::integers(), 0.25, 99),
    )
    .unwrap();
    let corpus: Vec<Element> = (-60..=60).filter(|n| *n != 0).map(Element::int).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let triples: Vec<_> = (0..300)
        .map(|_| {
            (
                Element::int(rng.gen_range(-100..=100)),
                Element::int(rng.gen_range(-100..=100)),
                Element::int(rng.gen_range(-100..=100)),
            )
        })
        .collect();
    let measured = sup_defect(&f, &triples).unwrap().sup_estimate;
    println!("measured defect sup over 300 triples: {measured}");

    let r = jung_recover(&f, &corpus, &measured, 1e-12).unwrap();
    println!("recovered quadratic coefficient: {}", r.model.form[0][0]);
    println!(
        "sup |f − Q| = {} vs 3·d = {} → {}",
        r.sup_dev,
        r.deviation_bound,
        if r.within_bound { "within" } else { "EXCEEDED" }
    );
    println!();

    // odd case: f = 4n + noise, recovered through the linear limit
    let g = RealFn::sum_of(
        RealFn::parabola(0, 4),
        RealFn::noise(Carrier::integers(), 0.1, 7),
    )
    .unwrap();
    let r = jung_recover_odd(&g, &corpus, &Value::Float(0.7), 0.25).unwrap();
    println!("odd companion: recovered additive coefficient {}", r.model.additive[0]);
    println!(
        "sup |g − ψ| = {} vs θ/2 + 4d = {} → {}",
        r.sup_dev,
        r.deviation_bound,
        if r.within_bound { "within" } else { "EXCEEDED" }
    );

    // the evenness gate names its witness
    let odd = RealFn::parabola(0, 1);
    match jung_recover(&odd, &corpus, &Value::from_int(1), 0.1) {
        Err(e) => println!("\nodd input correctly rejected: {e}"),
        Ok(_) => unreachable!("an odd function cannot pass the evenness gate"),
    }
}
