//! SL3 webs: growth from sign/state strings, proper edge colorings, web
//! invariants as polynomials, grevlex leading terms and expansion of
//! invariants in the web basis.
//!
//! ```
//! use sl3web::{growth::grow, invariant::{evaluate, leading_term_via_kk}};
//!
//! let s = "+1,-1,--1,+-1".parse().unwrap();
//! let web = grow(&s).unwrap().web;
//! let f = evaluate(&web).unwrap();
//! assert_eq!(f.len(), 12);
//! assert_eq!(f.leading_term().unwrap(), leading_term_via_kk(&web).unwrap());
//! ```

pub mod coloring;
pub mod error;
pub mod growth;
pub mod invariant;
pub mod polyring;
pub mod verify;
pub mod webgraph;
pub mod weightpath;

pub use error::{Error, ParseError, Result};
pub use webgraph::{Multidegree, Signature, VertexColor, Web, WebBuilder};
pub use weightpath::{SignState, SignStateString, Trit};
