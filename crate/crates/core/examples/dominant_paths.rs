//! Sign/state strings, their weight paths, and the dominant ones.
//!
//! cargo run --example dominant_paths

use sl3web::weightpath::{dominant_strings, path_of};
use sl3web::SignStateString;

fn main() {
    let s: SignStateString = "+1,+1,+0,-1,+0,+-1,-0,+-1,--1".parse().unwrap();
    let points: Vec<String> = path_of(&s).iter().map(|p| format!("({},{})", p.c1, p.c2)).collect();
    println!("{s}");
    println!("  path {}", points.join(" "));
    println!("  dominant: {}", s.is_dominant());

    let leaves: SignStateString = "+1,+0,-1".parse().unwrap();
    println!("{leaves} dominant: {}", leaves.is_dominant());

    for len in 1..=6 {
        let all = dominant_strings(len);
        let shown: Vec<String> = all.iter().take(3).map(|s| s.to_string()).collect();
        println!("length {len}: {:>3} dominant  {}", all.len(), shown.join("  "));
    }
}
