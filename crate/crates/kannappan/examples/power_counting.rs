//! Exact pattern counts in astronomically long repeated words.
//!
//! Counting a²b² occurrences in x^(2ⁿ) materializes nothing: a doubling
//! recurrence on (count, prefix, suffix) summaries is exact for every block
//! length, here cross-checked against brute-force scans and then pushed to
//! n = 40 where the word has ~4.4 trillion letters.
//!
//! Run: `cargo run --example power_counting`

use kannappan::algebra::Word;
use kannappan::eta::PatternCounter;
use num::bigint::BigInt;

fn main() {
    let counter = PatternCounter::aabb();

    // brute-force cross-check on everything small
    let mut checked = 0;
    for len in 1..=8usize {
        for bits in 0..(1u32 << len) {
            let letters: Vec<u8> = (0..len)
                .map(|i| if bits >> i & 1 == 0 { b'a' } else { b'b' })
                .collect();
            let x = Word::new(letters);
            for n in 0..=6u32 {
                let fast = counter.eta_power_count(&x, n).unwrap();
                let slow = BigInt::from(counter.eta(&x.repeat(1 << n).unwrap()).unwrap());
                assert_eq!(fast, slow, "mismatch at {x}^(2^{n})");
                checked += 1;
            }
        }
    }
    println!("doubling recurrence == brute force on {checked} cases (all words ≤ 8, n ≤ 6)");
    println!();

    // now the recurrence alone, far beyond anything materializable
    println!("word    n      letters in word^(2^n)    occurrences of aabb");
    for w in ["aabb", "bbaa", "babbaab"] {
        let x = Word::from_str_unchecked(w);
        for n in [10u32, 20, 40] {
            let count = counter.eta_power_count(&x, n).unwrap();
            let letters = BigInt::from(x.len()) << n;
            println!("{w:7} {n:3} {letters:>24} {count:>22}");
        }
    }
    println!();

    // crossing counts explain the leading term: count ≈ 2^n·(eta + crossing)
    for w in ["aabb", "bbaa"] {
        let x = Word::from_str_unchecked(w);
        println!(
            "{w}: eta = {}, crossing = {}, linear limit = {}",
            counter.eta(&x).unwrap(),
            counter.crossing_count(&x).unwrap(),
            counter.eta_tilde(&x).unwrap(),
        );
    }
}
