//! Clasp boundary vertices together, unclasp them again, and read the
//! leading terms of both webs.
//!
//! cargo run --example clasped_leading_term

use sl3web::growth::grow;
use sl3web::invariant::{evaluate, leading_term_via_kk, web_from_monomial};
use sl3web::polyring::format_term;

fn main() {
    let unclasped = grow(&"+1,-1,+0,+-1,+-1".parse().unwrap()).unwrap().web;
    let clasped = unclasped.clasp(&"1,1,1,2".parse().unwrap()).unwrap();
    print!("{clasped}");
    println!("valid: {}", clasped.is_valid());

    for (name, web) in [("clasped", &clasped), ("unclasped", &unclasped)] {
        let (c, m) = leading_term_via_kk(web).unwrap();
        let f = evaluate(web).unwrap();
        println!("{name}: {} ({} terms, agrees with full evaluation: {})", format_term(&c, &m), f.len(), f.leading_term().unwrap() == (c, m));
    }

    let (_, m) = leading_term_via_kk(&clasped).unwrap();
    let back = web_from_monomial(&m, &clasped.signature()).unwrap();
    println!("web_from_monomial rebuilds it: {}", back.canonical_form().unwrap() == clasped.canonical_form().unwrap());
}
