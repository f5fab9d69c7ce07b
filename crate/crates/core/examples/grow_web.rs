//! Grow a web from a dominant string and print it with its edge labels.
//!
//! cargo run --example grow_web -- "+1,-1,--1,+-1"

use rand::rngs::StdRng;
use rand::SeedableRng;
use sl3web::growth::{applicable_rules, grow, grow_random, kk_labeling, GrowthFrontier};
use sl3web::SignStateString;

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "+1,+1,+0,-1,+0,+-1,-0,+-1,--1".into());
    let s: SignStateString = arg.parse().expect("a sign/state string");

    let rules = applicable_rules(&GrowthFrontier::from_string(&s));
    let first: Vec<String> = rules.iter().map(|(k, r)| format!("{r}@{}", k + 1)).collect();
    println!("applicable at the top: {}", first.join(" "));

    let g = grow(&s).expect("dominant");
    println!("{} steps, {} internal vertices", g.steps, g.web.internal().len());
    for (e, label) in g.labels.iter().enumerate() {
        println!("  edge {:>2}: {label}", e + 1);
    }
    print!("{}", g.web);

    let other = grow_random(&s, &mut StdRng::seed_from_u64(7)).unwrap().web;
    println!("random order gives the same web: {}", other.canonical_form().unwrap() == g.web.canonical_form().unwrap());
    println!("KK labeling of the result: {}", kk_labeling(&g.web).unwrap());
}
