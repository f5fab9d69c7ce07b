//! Expand invariant polynomials in the web basis.
//!
//! cargo run --example expand_basis

use num_bigint::BigInt;
use sl3web::growth::grow;
use sl3web::invariant::{evaluate, expand};
use sl3web::polyring::Polynomial;
use sl3web::Signature;

fn main() {
    let edge: Polynomial = "x[-1,1]*y[2,-1] + x[0,1]*y[2,0] + x[1,1]*y[2,1]".parse().unwrap();
    let square = &edge * &edge;
    println!("f = {square}");
    let e = expand(&square, &"BW".parse().unwrap()).unwrap();
    for (c, w) in &e.terms {
        println!("{c} x web with multidegree {}", w.multidegree());
    }

    // a random-looking combination of two basis webs with the same signature
    let sig: Signature = "BBBBBB".parse().unwrap();
    let a = grow(&"+1,+1,+0,+0,+-1,+-1".parse().unwrap()).unwrap().web;
    let b = grow(&"+1,+0,+-1,+1,+0,+-1".parse().unwrap()).unwrap().web;
    let f = &evaluate(&a).unwrap().scale(&BigInt::from(4)) - &evaluate(&b).unwrap().scale(&BigInt::from(7));
    let e = expand(&f, &sig).unwrap();
    println!("{} terms expand into {} webs:", f.len(), e.len());
    for (c, w) in &e.terms {
        let same_as = if w.canonical_form().unwrap() == a.canonical_form().unwrap() { "a" } else { "b" };
        println!("  {c:>3} x web {same_as}");
    }
    println!("re-summed equals f: {}", e.evaluate().unwrap() == f);
}
