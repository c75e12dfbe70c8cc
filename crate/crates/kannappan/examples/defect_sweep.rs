//! Defect sweeps: how far is a function from solving
//! f(xyz) + f(x) + f(y) + f(z) = f(xy) + f(xz) + f(yz)?
//!
//! Quadratic forms and additive characters on ℤ^k solve the equation
//! exactly (defect identically 0, verified in exact rational arithmetic);
//! the a²b² counter on words has defect bounded by 5.
//!
//! Run: `cargo run --example defect_sweep`

use kannappan::defect::{kannappan_defect, sup_defect};
use kannappan::realfn::RealFn;
use kannappan::report::to_json;
use kannappan::value::Value;
use kannappan::{Carrier, Element};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    // exact solutions have exact zero defect
    let solution = RealFn::quadratic_int(2, &[&[1, 2], &[2, 3]], &[5, -1]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let lattice = Carrier::lattice(2);
    let mut all_zero = true;
    for _ in 0..10_000 {
        let x = lattice.sample(&mut rng, 100);
        let y = lattice.sample(&mut rng, 100);
        let z = lattice.sample(&mut rng, 100);
        all_zero &= kannappan_defect(&solution, &x, &y, &z)
            .unwrap()
            .is_exact_zero();
    }
    println!("quadratic+additive model on Z^2: 10000 random triples, defect exactly 0: {all_zero}");

    // the counter has small but nonzero defect
    let eta = RealFn::eta();
    let words = Carrier::free_ab();
    let corpus: Vec<_> = (0..50_000)
        .map(|_| {
            (
                words.sample(&mut rng, 40),
                words.sample(&mut rng, 40),
                words.sample(&mut rng, 40),
            )
        })
        .collect();
    let report = sup_defect(&eta, &corpus).unwrap();
    println!();
    println!("counter sweep over {} random word triples:", report.samples);
    println!("{}", to_json(&report));
    assert!(report.sup_estimate.abs_le(&Value::from_int(5)));

    // the witness triple reaches defect 1
    let d = kannappan_defect(
        &eta,
        &Element::word("a"),
        &Element::word("a"),
        &Element::word("bb"),
    )
    .unwrap();
    println!();
    println!("defect of the counter at (a, a, bb) = {d}");
}
