//! The instability witness on the rank-two free semigroup.
//!
//! The a²b² occurrence counter η has uniformly bounded defect, and its
//! linear dyadic limit η̃ satisfies η̃(xᵐ) = m·η̃(x) for every m.  If the
//! equation were stable, η̃ would have to be an exact solution, but its
//! defect at (a, a, b²) is 1.
//!
//! Run: `cargo run --example instability_witness`

use kannappan::eta::instability_witness;

fn main() {
    let report = instability_witness().expect("witness computation");

    println!("word      eta   eta_tilde");
    for row in &report.rows {
        println!("{:8} {:4} {:6}", row.word, row.eta, row.eta_tilde);
    }
    println!();
    println!(
        "defect of eta_tilde at (a, a, bb): {}   (exact integer arithmetic)",
        report.tilde_defect
    );
    println!(
        "same combination under eta:        {}",
        report.eta_defect
    );
    println!(
        "homogeneity pairs checked:         {} ({})",
        report.homogeneity_pairs_checked,
        if report.homogeneity_ok {
            "eta_tilde(x^m) = m·eta_tilde(x) exactly on all of them"
        } else {
            "MISMATCH"
        }
    );
    println!();
    if report.ok {
        println!(
            "conclusion: eta_tilde is linearly homogeneous with bounded defect \
             yet solves nothing — no exact solution stays within bounded \
             distance of eta, so the equation is not stable here."
        );
    } else {
        println!("UNEXPECTED: witness table mismatch");
        std::process::exit(1);
    }
}
