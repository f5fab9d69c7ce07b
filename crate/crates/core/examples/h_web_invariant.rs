//! The invariant of the H web and its leading term.
//!
//! cargo run --example h_web_invariant

use sl3web::growth::grow;
use sl3web::invariant::{evaluate, leading_term_via_kk};
use sl3web::polyring::format_term;

fn main() {
    let web = grow(&"+1,-1,--1,+-1".parse().unwrap()).unwrap().web;
    let f = evaluate(&web).unwrap();
    println!("[D] has {} terms, largest first:", f.len());
    for (m, c) in f.terms() {
        println!("  {}", format_term(c, m));
    }
    let (c, m) = leading_term_via_kk(&web).unwrap();
    println!("leading term from the KK labeling: {}", format_term(&c, &m));
}
