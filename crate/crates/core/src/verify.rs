//! Exhaustive property checks over all dominant strings up to a length.
//!
//! Each per-string property returns `Ok(true)` when checked, `Ok(false)` when
//! it does not apply to the string, and `Err(detail)` on a counterexample.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::coloring::{compare_colorings, enumerate_colorings, minimal_coloring};
use crate::growth::{grow, grow_random, kk_labeling};
use crate::invariant::{
    coloring_monomial, evaluate, expand, is_unit, kk_coloring, leading_term_via_kk, web_from_monomial,
};
use crate::polyring::Polynomial;
use crate::webgraph::{Multidegree, Signature, VertexColor, Web};
use crate::weightpath::{dominant_strings_up_to, Sign, SignStateString, Trit};

type Check = std::result::Result<bool, String>;

#[derive(Clone, Debug)]
pub struct Config {
    pub max_len: usize,
    /// Random growth orders per string for the confluence check.
    pub growth_orders: usize,
    pub seed: u64,
    pub expansion_trials: usize,
    pub expansion_max_len: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_len: 8,
            growth_orders: 10,
            seed: 0x5eed,
            expansion_trials: 100,
            expansion_max_len: 6,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Counterexample {
    pub input: String,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct PropertyReport {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<Counterexample>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        write!(
            f,
            "{verdict} {}: {} checked, {} failed",
            self.name,
            self.checked,
            self.failures.len()
        )?;
        if let Some(c) = self.failures.first() {
            write!(f, "\n  first counterexample {}: {}", c.input, c.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub properties: Vec<PropertyReport>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyReport::passed)
    }

    pub fn get(&self, name: &str) -> Option<&PropertyReport> {
        self.properties.iter().find(|p| p.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.properties {
            writeln!(f, "{p}")?;
        }
        let failed = self.properties.iter().filter(|p| !p.passed()).count();
        write!(f, "{} properties, {} failed", self.properties.len(), failed)
    }
}

fn fail<T: fmt::Display>(what: T) -> Check {
    Err(what.to_string())
}

fn grown(s: &SignStateString) -> std::result::Result<Web, String> {
    grow(s).map(|g| g.web).map_err(|e| format!("growth failed: {e}"))
}

/// The KK monomial of `grow(s)` is the leading monomial of its invariant,
/// with coefficient ±1.
pub fn check_leading_term(s: &SignStateString) -> Check {
    let web = grown(s)?;
    let full = evaluate(&web).map_err(|e| e.to_string())?.leading_term().map_err(|e| e.to_string())?;
    let kk = leading_term_via_kk(&web).map_err(|e| e.to_string())?;
    if full != kk {
        return fail(format!("evaluate leads with {} {}, KK gives {} {}", full.0, full.1, kk.0, kk.1));
    }
    if !is_unit(&kk.0) {
        return fail(format!("leading coefficient {}", kk.0));
    }
    Ok(true)
}

/// The KK coloring is the only coloring with the smallest boundary word, and
/// its labeling reproduces `s`.
pub fn check_unique_minimum(s: &SignStateString) -> Check {
    let web = grown(s)?;
    let all = enumerate_colorings(&web);
    let kk = minimal_coloring(&web).map_err(|e| e.to_string())?;
    let mut at_min = 0;
    for c in &all {
        match compare_colorings(&web, c, &kk).map_err(|e| e.to_string())? {
            Ordering::Less => return fail(format!("coloring below the KK coloring: {c}")),
            Ordering::Equal => at_min += 1,
            Ordering::Greater => {}
        }
    }
    if at_min != 1 {
        return fail(format!("{at_min} colorings share the minimal boundary word"));
    }
    let labeling = kk_labeling(&web).map_err(|e| e.to_string())?;
    if &labeling != s {
        return fail(format!("KK labeling reads {labeling}"));
    }
    Ok(true)
}

/// Distinct boundary words order monomials in reverse.
pub fn check_order_agreement(s: &SignStateString) -> Check {
    let web = grown(s)?;
    let all = enumerate_colorings(&web);
    let monos: Vec<_> = all.iter().map(|c| coloring_monomial(&web, c)).collect();
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            let words = compare_colorings(&web, &all[i], &all[j]).map_err(|e| e.to_string())?;
            if monos[i].cmp(&monos[j]) != words.reverse() {
                return fail(format!("colorings {} and {} disagree", all[i], all[j]));
            }
        }
    }
    Ok(true)
}

/// Every monomial has the web's multidegree.
pub fn check_multihomogeneous(s: &SignStateString) -> Check {
    let web = grown(s)?;
    let f = evaluate(&web).map_err(|e| e.to_string())?;
    if !f.is_homogeneous_of(web.multidegree().degrees()) {
        return fail("invariant is not multihomogeneous");
    }
    Ok(true)
}

/// `orders` random growth orders give isotopic webs.
pub fn check_confluence(s: &SignStateString, orders: usize, seed: u64) -> Check {
    let reference = grown(s)?.canonical_form().map_err(|e| e.to_string())?;
    let mut rng = StdRng::seed_from_u64(seed);
    for k in 0..orders {
        let w = grow_random(s, &mut rng).map_err(|e| e.to_string())?.web;
        if w.canonical_form().map_err(|e| e.to_string())? != reference {
            return fail(format!("random order {k} grows a different web"));
        }
    }
    Ok(true)
}

/// One trimming step: the trimmed web's own KK labeling is the read-off
/// string, and growing that string gives the trimmed web back.
pub fn check_trimming(s: &SignStateString) -> Check {
    if s.len() < 2 {
        return Ok(false);
    }
    let web = grown(s)?;
    let (trimmed, read_off) = web.trim(s).map_err(|e| format!("trim failed: {e}"))?;
    if !trimmed.is_valid() {
        return fail("trimmed web is invalid");
    }
    if trimmed.n_boundary() > 0 {
        let kk = kk_labeling(&trimmed).map_err(|e| e.to_string())?;
        if kk != read_off {
            return fail(format!("trimmed web labels as {kk}, read off {read_off}"));
        }
    } else if !read_off.is_empty() {
        return fail(format!("empty trimmed web but read off {read_off}"));
    }
    let regrown = grown(&read_off)?;
    if regrown.canonical_form().map_err(|e| e.to_string())? != trimmed.canonical_form().map_err(|e| e.to_string())? {
        return fail(format!("growing {read_off} does not give the trimmed web"));
    }
    Ok(true)
}

/// Multidegrees that group consecutive boundary vertices of equal sign.
pub fn clasp_groupings(s: &SignStateString) -> Vec<Multidegree> {
    let signs: Vec<Sign> = s.signs().collect();
    let mut out = Vec::new();
    if signs.is_empty() {
        return out;
    }
    // bit k set: cut between k and k+1
    let n = signs.len();
    for mask in 0u64..(1 << (n - 1)) {
        let mut degrees = vec![1];
        let mut ok = true;
        for k in 0..n - 1 {
            if mask >> k & 1 == 1 {
                degrees.push(1);
            } else if signs[k] == signs[k + 1] {
                *degrees.last_mut().unwrap() += 1;
            } else {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(Multidegree(degrees));
        }
    }
    out
}

/// Counts the valid clasped webs of `s` and checks that at every clasped
/// vertex the KK colors increase weakly at black vertices and decrease
/// weakly at white ones, and that the KK term leads the invariant.
pub fn check_monotonicity(s: &SignStateString) -> std::result::Result<usize, String> {
    let web = grown(s)?;
    let mut checked = 0;
    for d in clasp_groupings(s) {
        if d.degrees().iter().all(|&x| x == 1) {
            continue;
        }
        let clasped = web.clasp(&d).map_err(|e| e.to_string())?;
        if !clasped.is_valid() {
            continue;
        }
        checked += 1;
        let kk = kk_coloring(&clasped).map_err(|e| e.to_string())?;
        for v in clasped.boundary() {
            let colors: Vec<Trit> = v.half_edges.iter().map(|&h| kk.color(clasped.edge_of(h))).collect();
            let ordered = colors.windows(2).all(|w| match v.color {
                VertexColor::Black => w[0] <= w[1],
                VertexColor::White => w[0] >= w[1],
            });
            if !ordered {
                let shown: Vec<String> = colors.iter().map(|c| c.to_string()).collect();
                return Err(format!(
                    "clasp {d}: vertex {} ({}) has colors {}",
                    v.id,
                    v.color.letter(),
                    shown.join(",")
                ));
            }
        }
        let full = evaluate(&clasped).map_err(|e| e.to_string())?.leading_term().map_err(|e| e.to_string())?;
        let via = leading_term_via_kk(&clasped).map_err(|e| e.to_string())?;
        if full != via || !is_unit(&via.0) {
            return Err(format!("clasp {d}: evaluate leads with {} {}, KK gives {} {}", full.0, full.1, via.0, via.1));
        }
        match web_from_monomial(&via.1, &clasped.signature()) {
            Ok(back) if back.canonical_form().ok() == clasped.canonical_form().ok() => {}
            Ok(_) => return Err(format!("clasp {d}: web_from_monomial builds another web")),
            Err(e) => return Err(format!("clasp {d}: web_from_monomial failed: {e}")),
        }
    }
    Ok(checked)
}

/// `web_from_monomial` inverts the KK monomial of `grow(s)`.
pub fn check_monomial_round_trip(s: &SignStateString) -> Check {
    let web = grown(s)?;
    let (_, m) = leading_term_via_kk(&web).map_err(|e| e.to_string())?;
    let back = web_from_monomial(&m, &web.signature()).map_err(|e| e.to_string())?;
    if back.canonical_form().map_err(|e| e.to_string())? != web.canonical_form().map_err(|e| e.to_string())? {
        return fail(format!("web_from_monomial({m}) differs"));
    }
    Ok(true)
}

fn signature_of(s: &SignStateString) -> Signature {
    Signature(s.signs().map(VertexColor::of_sign).collect())
}

/// Leading monomials of all degree-1 basis webs with the same signature are
/// distinct. Returns the number of signatures looked at.
pub fn check_linear_independence(max_len: usize) -> (usize, Vec<Counterexample>) {
    let mut by_sig: HashMap<Signature, Vec<SignStateString>> = HashMap::new();
    for s in dominant_strings_up_to(max_len) {
        by_sig.entry(signature_of(&s)).or_default().push(s);
    }
    let mut failures = Vec::new();
    for (sig, strings) in &by_sig {
        let mut seen = HashSet::new();
        for s in strings {
            match grow(s).and_then(|g| leading_term_via_kk(&g.web)) {
                Ok((_, m)) => {
                    if !seen.insert(m.clone()) {
                        failures.push(Counterexample {
                            input: sig.to_string(),
                            detail: format!("leading monomial {m} repeats"),
                        });
                    }
                }
                Err(e) => failures.push(Counterexample {
                    input: s.to_string(),
                    detail: e.to_string(),
                }),
            }
        }
    }
    (by_sig.len(), failures)
}

/// One random combination of up to five basis webs sharing a signature,
/// expanded back. Returns the combination size.
pub fn expansion_trial<R: Rng>(pool: &[Vec<SignStateString>], rng: &mut R) -> std::result::Result<usize, Counterexample> {
    let group = pool.choose(rng).expect("nonempty pool");
    let k = rng.gen_range(1..=group.len().min(5));
    let chosen: Vec<&SignStateString> = group.choose_multiple(rng, k).collect();
    let sig = signature_of(chosen[0]);
    let mut f = Polynomial::zero();
    let mut expected = HashMap::new();
    let mut desc = Vec::new();
    for s in chosen {
        let mut c = 0i64;
        while c == 0 {
            c = rng.gen_range(-9..=9);
        }
        let web = grow(s).expect("dominant").web;
        f = &f + &evaluate(&web).expect("valid").scale(&BigInt::from(c));
        expected.insert(web.canonical_form().expect("connected to boundary"), BigInt::from(c));
        desc.push(format!("{c}*[{s}]"));
    }
    let input = desc.join(" + ");
    let e = expand(&f, &sig).map_err(|e| Counterexample {
        input: input.clone(),
        detail: e.to_string(),
    })?;
    let got = e.by_canonical_form().map_err(|e| Counterexample {
        input: input.clone(),
        detail: e.to_string(),
    })?;
    if got != expected {
        return Err(Counterexample {
            input,
            detail: format!("expanded into {} webs with other coefficients", e.len()),
        });
    }
    match e.evaluate() {
        Ok(back) if back == f => Ok(k),
        _ => Err(Counterexample {
            input,
            detail: "re-summed polynomial differs".into(),
        }),
    }
}

/// Strings up to `max_len` grouped by signature, groups in a fixed order.
pub fn basis_pool(max_len: usize) -> Vec<Vec<SignStateString>> {
    let mut by_sig: HashMap<String, Vec<SignStateString>> = HashMap::new();
    for s in dominant_strings_up_to(max_len) {
        by_sig.entry(signature_of(&s).to_string()).or_default().push(s);
    }
    let mut keys: Vec<_> = by_sig.keys().cloned().collect();
    keys.sort();
    keys.into_iter().map(|k| by_sig.remove(&k).unwrap()).collect()
}

fn per_string<F>(name: &'static str, strings: &[SignStateString], check: F) -> PropertyReport
where
    F: Fn(usize, &SignStateString) -> Check + Sync,
{
    let results: Vec<(usize, Option<Counterexample>)> = strings
        .par_iter()
        .enumerate()
        .map(|(i, s)| match check(i, s) {
            Ok(true) => (1, None),
            Ok(false) => (0, None),
            Err(detail) => (
                1,
                Some(Counterexample {
                    input: s.to_string(),
                    detail,
                }),
            ),
        })
        .collect();
    PropertyReport {
        name,
        checked: results.iter().map(|r| r.0).sum(),
        failures: results.into_iter().filter_map(|r| r.1).collect(),
    }
}

/// Runs every property. Per-string checks run in parallel.
pub fn run(cfg: &Config) -> Report {
    let strings = dominant_strings_up_to(cfg.max_len);
    let mut report = Report::default();
    report.properties.push(per_string("leading term", &strings, |_, s| check_leading_term(s)));
    report.properties.push(per_string("unique minimal coloring", &strings, |_, s| check_unique_minimum(s)));
    report.properties.push(per_string("order agreement", &strings, |_, s| check_order_agreement(s)));
    report.properties.push(per_string("multihomogeneity", &strings, |_, s| check_multihomogeneous(s)));
    report.properties.push(per_string("confluence", &strings, |i, s| {
        check_confluence(s, cfg.growth_orders, cfg.seed.wrapping_add(i as u64))
    }));
    report.properties.push(per_string("trimming", &strings, |_, s| check_trimming(s)));
    report.properties.push(per_string("monomial round trip", &strings, |_, s| check_monomial_round_trip(s)));

    let clasped: Vec<std::result::Result<usize, Counterexample>> = strings
        .par_iter()
        .map(|s| {
            check_monotonicity(s).map_err(|detail| Counterexample {
                input: s.to_string(),
                detail,
            })
        })
        .collect();
    report.properties.push(PropertyReport {
        name: "clasp monotonicity",
        checked: clasped.iter().map(|r| *r.as_ref().unwrap_or(&1)).sum(),
        failures: clasped.into_iter().filter_map(|r| r.err()).collect(),
    });

    let (checked, failures) = check_linear_independence(cfg.max_len.min(6));
    report.properties.push(PropertyReport {
        name: "linear independence",
        checked,
        failures,
    });

    let pool = basis_pool(cfg.expansion_max_len.min(cfg.max_len));
    let trials: Vec<_> = (0..cfg.expansion_trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = StdRng::seed_from_u64(cfg.seed ^ (t as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
            expansion_trial(&pool, &mut rng)
        })
        .collect();
    report.properties.push(PropertyReport {
        name: "expansion round trip",
        checked: trials.len(),
        failures: trials.into_iter().filter_map(|r| r.err()).collect(),
    });
    report
}
