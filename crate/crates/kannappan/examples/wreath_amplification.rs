//! Wreath products S ≀ C and defect amplification.
//!
//! Slot-1-supported x, y, z produce the triple (x₁, y₁, z₁) =
//! (xyz, (xyz)^b, (xyz)^c) whose product equals the spread product
//! x·x^b·x^c · y·y^b·y^c · z·z^b·z^c exactly: the engine that multiplies
//! a defect by 9 (quartic class) or 3 (linear class) at each step of the
//! embedding chain S, S ≀ C, (S ≀ C) ≀ C, ...
//!
//! Run: `cargo run --example wreath_amplification`

use kannappan::algebra::{
    amplification_rhs, amplification_triple, Carrier, Element, WreathElement, KLEIN_B, KLEIN_BC,
    KLEIN_C,
};
use kannappan::realfn::{Homomorphism, RealFn};
use kannappan::value::Value;

fn main() {
    // the element identity behind the amplification
    let x = WreathElement::embed(Element::int(2));
    let y = WreathElement::embed(Element::int(-7));
    let z = WreathElement::embed(Element::int(11));
    let (x1, y1, z1) = amplification_triple(&x, &y, &z).unwrap();
    println!("x₁ = {x1}");
    println!("y₁ = {y1}");
    println!("z₁ = {z1}");
    let lhs = x1.mul(&y1).unwrap().mul(&z1).unwrap();
    let rhs = amplification_rhs(&x, &y, &z).unwrap();
    println!("x₁y₁z₁            = {lhs}");
    println!("spread product    = {rhs}");
    assert_eq!(lhs, rhs);
    println!("element identity holds exactly");
    println!();

    // conjugation shuffles slots: u ∈ slot 1 moves to slot t
    let u = WreathElement::embed(Element::int(5));
    println!("u       = {u}");
    println!("u^b     = {}", u.conjugate(KLEIN_B));
    println!("u^c     = {}", u.conjugate(KLEIN_C));
    println!("u^bc    = {}", u.conjugate(KLEIN_BC));
    println!();

    // the ×9 and ×3 laws through the coordinate-sum pullback
    let wreath_z = Carrier::Wreath {
        base: Box::new(Carrier::integers()),
    };
    let sigma_sq = RealFn::pullback(
        wreath_z.clone(),
        Homomorphism::CoordinateSum,
        RealFn::parabola(1, 0),
    )
    .unwrap();
    let sigma = RealFn::pullback(
        wreath_z,
        Homomorphism::CoordinateSum,
        RealFn::parabola(0, 1),
    )
    .unwrap();
    let spread = Element::Wreath(
        u.conjugate(KLEIN_BC)
            .mul(&u.conjugate(KLEIN_C))
            .unwrap()
            .mul(&u)
            .unwrap(),
    );
    let u_el = Element::Wreath(u);
    let f9 = sigma_sq.evaluate(&spread).unwrap();
    let f1 = sigma_sq.evaluate(&u_el).unwrap();
    println!("σ² law: f(u^bc·u^c·u) = {f9} = 9·{f1}");
    assert_eq!(f9, f1.mul(&Value::from_int(9)));
    let g3 = sigma.evaluate(&spread).unwrap();
    let g1 = sigma.evaluate(&u_el).unwrap();
    println!("σ  law: f(u^bc·u^c·u) = {g3} = 3·{g1}");
    assert_eq!(g3, g1.mul(&Value::from_int(3)));
    println!();
    println!(
        "a defect δ at (x, y, z) therefore reappears as 9δ (quartic class) or \
         3δ (linear class) one wreath level up: only δ = 0 survives the chain."
    );
}
