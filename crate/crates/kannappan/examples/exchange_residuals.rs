//! Two residuals of the quadratic exchange identity on group carriers.
//!
//! The identity is often displayed as
//!   f(xyz) + f(xzy) = f(x) + 3f(y) + 3f(z) + f(xy) + f(xz) − f(yz),
//! which already fails for f(n) = n² at (0, 0, 1).  Re-deriving it from the
//! three quadratic-equation instances gives
//!   f(xyz) + f(xzy) + 2f(x) + 2f(y) + 2f(z) = 2f(xy) + 2f(xz) + 2f(yz),
//! which every quadratic function satisfies (and which, on abelian
//! carriers, is twice the original equation).  Both residuals are reported;
//! only the corrected one is asserted.
//!
//! Run: `cargo run --example exchange_residuals`

use kannappan::defect::quadratic_exchange_residuals;
use kannappan::realfn::RealFn;
use kannappan::Element;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let square = RealFn::parabola(1, 0);
    let (printed, corrected) = quadratic_exchange_residuals(
        &square,
        &Element::int(0),
        &Element::int(0),
        &Element::int(1),
    )
    .unwrap();
    println!("f(n) = n² at (0, 0, 1):");
    println!("  as-printed residual: {printed}   (the displayed identity is off)");
    println!("  corrected residual:  {corrected}");
    println!();

    let form = RealFn::quadratic_int(2, &[&[2, -1], &[-1, 5]], &[0, 0]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let mut all_zero = true;
    for _ in 0..1000 {
        let pick = |rng: &mut ChaCha8Rng| {
            Element::vector(&[rng.gen_range(-50..=50), rng.gen_range(-50..=50)])
        };
        let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let (_, corrected) = quadratic_exchange_residuals(&form, &x, &y, &z).unwrap();
        all_zero &= corrected.is_exact_zero();
    }
    println!("corrected residual identically 0 on 1000 random form triples: {all_zero}");

    // additive characters satisfy the corrected identity on abelian carriers
    // as well: there it is twice the original equation
    let additive = RealFn::parabola(0, 3);
    let (_, corrected) = quadratic_exchange_residuals(
        &additive,
        &Element::int(1),
        &Element::int(2),
        &Element::int(3),
    )
    .unwrap();
    println!("corrected residual for an additive character at (1,2,3): {corrected}");

    // non-group carriers are rejected
    let eta = RealFn::eta();
    match quadratic_exchange_residuals(
        &eta,
        &Element::word("a"),
        &Element::word("b"),
        &Element::word("ab"),
    ) {
        Err(e) => println!("free-word carrier correctly rejected: {e}"),
        Ok(_) => unreachable!("words form no group"),
    }
}
