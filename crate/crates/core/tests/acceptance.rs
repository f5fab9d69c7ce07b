//! Acceptance checks, one line per criterion. Runs without the libtest
//! harness so the verdicts always show in `cargo test` output.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;

use sl3web::coloring::{coloring_from_kk, minimal_coloring};
use sl3web::growth::grow;
use sl3web::invariant::{evaluate, is_unit, kk_coloring, leading_term_via_kk};
use sl3web::polyring::{Monomial, Polynomial};
use sl3web::verify;
use sl3web::weightpath::dominant_strings_up_to;
use sl3web::{SignStateString, Trit, VertexColor, Web};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

const H_POLY: &str = "x[1,1]*y[2,-1]*y[3,1]*x[-1,4] + x[1,1]*y[2,0]*y[3,1]*x[0,4] \
    - x[1,1]*y[2,1]*y[3,-1]*x[-1,4] - x[1,1]*y[2,1]*y[3,0]*x[0,4] \
    + x[0,1]*y[2,-1]*y[3,0]*x[-1,4] - x[0,1]*y[2,0]*y[3,-1]*x[-1,4] \
    - x[0,1]*y[2,0]*y[3,1]*x[1,4] + x[0,1]*y[2,1]*y[3,0]*x[1,4] \
    - x[-1,1]*y[2,-1]*y[3,0]*x[0,4] - x[-1,1]*y[2,-1]*y[3,1]*x[1,4] \
    + x[-1,1]*y[2,0]*y[3,-1]*x[0,4] + x[-1,1]*y[2,1]*y[3,-1]*x[1,4]";

/// Boundary black 1, white 2, white 3, black 4; internal white 5 joined to
/// 1, 4 and 6; internal black 6 joined to 2, 3 and 5.
const H_WEB: &str = "web n=4
b 1 B 3
b 2 W 10
b 3 W 8
b 4 B 6
i 5 W 1 4 5
i 6 B 2 7 9
e 1 2
e 3 4
e 5 6
e 7 8
e 9 10
";

const MAX_LEN: usize = 8;

fn h_web() -> Web {
    Web::parse(H_WEB).expect("H web parses")
}

fn ss(s: &str) -> SignStateString {
    s.parse().expect("valid string")
}

fn mono(s: &str) -> Monomial {
    s.parse().expect("valid monomial")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn criterion_1() -> Outcome {
    let web = h_web();
    ensure(web.is_valid(), || format!("H web invalid: {:?}", web.validate()))?;
    let f = evaluate(&web).map_err(err)?;
    let expected: Polynomial = H_POLY.parse().map_err(err)?;
    ensure(f == expected, || format!("got {f}"))?;
    Ok(format!("{} terms, all signs equal", f.len()))
}

fn criterion_2() -> Outcome {
    let web = h_web();
    let bold = (BigInt::from(1), mono("x[1,1]*y[2,-1]*y[3,1]*x[-1,4]"));
    let full = evaluate(&web).map_err(err)?.leading_term().map_err(err)?;
    let kk = leading_term_via_kk(&web).map_err(err)?;
    ensure(full == bold, || format!("leading_term gives {} {}", full.0, full.1))?;
    ensure(kk == bold, || format!("leading_term_via_kk gives {} {}", kk.0, kk.1))?;
    Ok("+1 x[1,1]*y[2,-1]*y[3,1]*x[-1,4] from both".into())
}

fn criterion_3() -> Outcome {
    let unclasped = grow(&ss("+1,-1,+0,+-1,+-1")).map_err(err)?.web;
    let clasped = unclasped.clasp(&"1,1,1,2".parse().map_err(err)?).map_err(err)?;
    ensure(clasped.is_valid(), || "clasped web invalid".into())?;
    let mut signs = Vec::new();
    for (web, expected, name) in [
        (&clasped, "x[1,1]*y[2,-1]*x[0,3]*x[-1,4]^2", "clasped"),
        (&unclasped, "x[1,1]*y[2,-1]*x[0,3]*x[-1,4]*x[-1,5]", "unclasped"),
    ] {
        let kk = leading_term_via_kk(web).map_err(err)?;
        let full = evaluate(web).map_err(err)?.leading_term().map_err(err)?;
        ensure(kk.1 == mono(expected), || format!("{name}: KK monomial {}", kk.1))?;
        ensure(full == kk, || format!("{name}: evaluate leads with {} {}", full.0, full.1))?;
        ensure(is_unit(&kk.0), || format!("{name}: coefficient {}", kk.0))?;
        signs.push(format!("{name} {:+}", kk.0));
    }
    Ok(format!("coefficients {}", signs.join(", ")))
}

fn criterion_4() -> Outcome {
    let s = ss("+1,+1,+0,-1,+0,+-1,-0,+-1,--1");
    ensure(s.is_dominant(), || "string is not dominant".into())?;
    let g = grow(&s).map_err(err)?;
    ensure(g.web.n_boundary() == 9, || format!("{} boundary vertices", g.web.n_boundary()))?;
    let via_labels = coloring_from_kk(&g.web, &g.labels).map_err(err)?;
    let minimal = minimal_coloring(&g.web).map_err(err)?;
    let word = via_labels.boundary_word(&g.web);
    let expected: Vec<(i8, VertexColor)> = {
        use VertexColor::{Black as B, White as W};
        vec![(1, B), (1, B), (0, B), (-1, W), (0, B), (-1, B), (0, W), (-1, B), (1, W)]
    };
    let got: Vec<(i8, VertexColor)> = word.0.iter().map(|&(c, v)| (c.value(), v)).collect();
    ensure(got == expected, || format!("boundary word {word}"))?;
    ensure(minimal.boundary_word(&g.web) == word, || "minimal coloring differs from the KK coloring".into())?;
    Ok(format!("boundary word {word}"))
}

fn strings() -> Vec<SignStateString> {
    dominant_strings_up_to(MAX_LEN)
}

fn exhaustive<F>(check: F) -> Outcome
where
    F: Fn(usize, &SignStateString) -> Result<bool, String> + Sync,
{
    let all = strings();
    let results: Vec<Result<bool, String>> = all
        .par_iter()
        .enumerate()
        .map(|(i, s)| check(i, s).map_err(|e| format!("{s}: {e}")))
        .collect();
    let mut checked = 0;
    for r in results {
        if r? {
            checked += 1;
        }
    }
    Ok(format!("{checked} of {} dominant strings up to length {MAX_LEN}", all.len()))
}

fn criterion_5() -> Outcome {
    exhaustive(|_, s| {
        verify::check_leading_term(s)?;
        verify::check_unique_minimum(s)
    })
}

fn criterion_6() -> Outcome {
    exhaustive(|i, s| verify::check_confluence(s, 10, 1000 + i as u64))
}

fn criterion_7() -> Outcome {
    exhaustive(|_, s| verify::check_trimming(s))
}

fn criterion_8() -> Outcome {
    let pool = verify::basis_pool(6);
    let sizes: Vec<Result<usize, String>> = (0..100u64)
        .into_par_iter()
        .map(|t| {
            let mut rng = StdRng::seed_from_u64(0xacce97 + t);
            verify::expansion_trial(&pool, &mut rng).map_err(|c| format!("{}: {}", c.input, c.detail))
        })
        .collect();
    let mut webs = 0;
    for s in sizes {
        webs += s?;
    }
    Ok(format!("100 combinations, {webs} basis webs in total"))
}

/// Clasped vertices' KK colors: weakly increasing at black, weakly
/// decreasing at white.
fn criterion_9() -> Outcome {
    let all = strings();
    let counts: Vec<Result<(usize, usize), String>> = all
        .par_iter()
        .map(|s| {
            let web = grow(s).map_err(err)?.web;
            let mut clasps = (0, 0);
            for d in verify::clasp_groupings(s) {
                if d.degrees().iter().all(|&x| x == 1) {
                    continue;
                }
                let clasped = web.clasp(&d).map_err(err)?;
                if !clasped.is_valid() {
                    continue;
                }
                clasps.0 += 1;
                let kk = kk_coloring(&clasped).map_err(err)?;
                for v in clasped.boundary().iter().filter(|v| v.degree() > 1) {
                    clasps.1 += 1;
                    let colors: Vec<Trit> = v.half_edges.iter().map(|&h| kk.color(clasped.edge_of(h))).collect();
                    let ok = colors.windows(2).all(|w| match v.color {
                        VertexColor::Black => w[0] <= w[1],
                        VertexColor::White => w[0] >= w[1],
                    });
                    if !ok {
                        return Err(format!("{s} clasped as {d}: vertex {} colors {colors:?}", v.id));
                    }
                }
            }
            Ok(clasps)
        })
        .collect();
    let (mut webs, mut vertices) = (0, 0);
    for c in counts {
        let (w, v) = c?;
        webs += w;
        vertices += v;
    }
    Ok(format!("{webs} valid clasped webs, {vertices} clasped vertices"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "H web invariant is the twelve-term polynomial", Duration::from_secs(1), criterion_1),
        (2, "H web leading term, full and via KK", Duration::from_secs(1), criterion_2),
        (3, "clasped example and its unclasping", Duration::from_secs(1), criterion_3),
        (4, "nine-letter string grows, KK boundary word", Duration::from_secs(1), criterion_4),
        (5, "KK term leads, unique minimal coloring", Duration::from_secs(300), criterion_5),
        (6, "confluence of 10 random growth orders", Duration::from_secs(300), criterion_6),
        (7, "trimming step relabels correctly", Duration::from_secs(300), criterion_7),
        (8, "expansion round trip of 100 combinations", Duration::from_secs(120), criterion_8),
        (9, "clasp monotonicity of KK colors", Duration::from_secs(300), criterion_9),
    ];
    let mut failed = 0;
    for (n, title, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (verdict, detail) = match outcome {
            Ok(d) if elapsed <= limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took {elapsed:.2?}, limit {limit:?}")),
            Err(e) => ("FAIL", e),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!("criterion {n} {verdict}: {title} [{detail}] ({elapsed:.2?})");
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
