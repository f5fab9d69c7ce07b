//! Proper edge colorings and the minimal one in boundary order.
//!
//! cargo run --example colorings

use sl3web::coloring::{compare_colorings, enumerate_colorings, minimal_coloring};
use sl3web::growth::grow;

fn main() {
    let web = grow(&"+1,-1,--1,+-1".parse().unwrap()).unwrap().web;
    let mut all = enumerate_colorings(&web);
    all.sort_by(|a, b| compare_colorings(&web, a, b).unwrap());
    println!("{} proper colorings, smallest boundary word first:", all.len());
    for c in &all {
        println!("  {}   {c}", c.boundary_word(&web));
    }
    let min = minimal_coloring(&web).unwrap();
    println!("minimal: {}", min.boundary_word(&web));
}
