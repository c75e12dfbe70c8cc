//! Closed-form solving on ℤ^k: every solution is f(v) = vᵀMv + a·v, and a
//! handful of probe points recovers M and a exactly.
//!
//! Run: `cargo run --example abelian_fit`

use kannappan::abelian::{fit_quadratic_additive, model_residual};
use kannappan::realfn::RealFn;
use kannappan::Element;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    // the running example: f(v) = v₁² + 4v₁v₂ + 3v₂² + 5v₁ − v₂
    let f = RealFn::quadratic_int(2, &[&[1, 2], &[2, 3]], &[5, -1]).unwrap();
    let model = fit_quadratic_additive(&f).unwrap();
    println!("fit from probe points e_i, 2e_i, e_i+e_j:");
    println!("  M:");
    for row in &model.form {
        println!("    [{}]", row.join(", "));
    }
    println!("  a: ({})", model.additive.join(", "));

    let corpus: Vec<Element> = (-15..=15)
        .flat_map(|a| (-15..=15).map(move |b| Element::vector(&[a, b])))
        .collect();
    let residual = model_residual(&model, &f, &corpus).unwrap();
    println!("  residual over {} lattice points: {residual}", corpus.len());
    println!();

    // random integer models on Z^3 round-trip exactly
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut exact = 0;
    for _ in 0..25 {
        let mut m = [[0i64; 3]; 3];
        for i in 0..3 {
            for j in i..3 {
                let v = rng.gen_range(-30..=30);
                m[i][j] = v;
                m[j][i] = v;
            }
        }
        let a: Vec<i64> = (0..3).map(|_| rng.gen_range(-30..=30)).collect();
        let rows: Vec<&[i64]> = m.iter().map(|r| r.as_slice()).collect();
        let g = RealFn::quadratic_int(3, &rows, &a).unwrap();
        let recovered = fit_quadratic_additive(&g).unwrap();
        let extra: Vec<Element> = (0..50)
            .map(|_| {
                Element::vector(&[
                    rng.gen_range(-10..=10),
                    rng.gen_range(-10..=10),
                    rng.gen_range(-10..=10),
                ])
            })
            .collect();
        if model_residual(&recovered, &g, &extra).unwrap().is_exact_zero() {
            exact += 1;
        }
    }
    println!("random integer models on Z^3 recovered exactly: {exact}/25");
}
