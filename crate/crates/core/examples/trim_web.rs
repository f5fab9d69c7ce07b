//! Trim a grown web one step at a time, back to the empty web.
//!
//! cargo run --example trim_web

use sl3web::growth::{grow, kk_labeling};
use sl3web::SignStateString;

fn main() {
    let mut s: SignStateString = "+1,+1,+0,-1,+0,+-1,-0,+-1,--1".parse().unwrap();
    let mut web = grow(&s).unwrap().web;
    while web.n_boundary() > 0 {
        let (next, read_off) = web.trim(&s).unwrap();
        let relabeled = if next.n_boundary() > 0 { kk_labeling(&next).unwrap().to_string() } else { String::new() };
        println!("{s:<32} -> {read_off:<32} relabels as read off: {}", relabeled == read_off.to_string());
        web = next;
        s = read_off;
    }
}
