//! Runs the property suite over all dominant strings up to a length.
//!
//! cargo run --release --example verify_suite -- 8

use std::time::Instant;

use sl3web::verify::{run, Config};

fn main() {
    let max_len = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let start = Instant::now();
    let report = run(&Config {
        max_len,
        ..Config::default()
    });
    println!("{report}");
    println!("max length {max_len}, {:.1}s", start.elapsed().as_secs_f64());
    if !report.passed() {
        std::process::exit(2);
    }
}
