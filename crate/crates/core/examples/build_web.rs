//! Build webs by hand, validate them, and compare up to isotopy.
//!
//! cargo run --example build_web

use sl3web::growth::grow;
use sl3web::{VertexColor::*, Web, WebBuilder};

fn main() {
    // boundary black 1, white 2, white 3, black 4; two internal vertices
    let mut b = WebBuilder::new();
    let v: Vec<_> = [Black, White, White, Black].into_iter().map(|c| b.add_boundary(c)).collect();
    let u = b.add_internal(White);
    let w = b.add_internal(Black);
    b.connect(u, w);
    b.connect(v[0], u);
    b.connect(u, v[3]);
    b.connect(w, v[2]);
    b.connect(w, v[1]);
    let h = b.build().unwrap();
    println!("H web valid: {}, signature {}, multidegree {}", h.is_valid(), h.signature(), h.multidegree());
    let grown = grow(&"+1,-1,--1,+-1".parse().unwrap()).unwrap().web;
    println!("same web as grown from +1,-1,--1,+-1: {}", h.canonical_form().unwrap() == grown.canonical_form().unwrap());

    // a planar web with a doubled edge between its two internal vertices
    let bigon: Web = "web n=2
b 1 B 1
b 2 W 8
i 3 W 2 3 4
i 4 B 5 6 7
e 1 2
e 3 6
e 4 5
e 7 8
"
    .parse()
    .unwrap();
    for violation in bigon.validate() {
        println!("violation: {violation}");
    }
}
