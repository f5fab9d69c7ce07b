//! Web invariants as polynomials, their leading terms, and expansion of
//! invariant polynomials in the web basis.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::coloring::{self, Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::growth::grow;
use crate::polyring::{Monomial, Polynomial, VarKind, Variable};
use crate::webgraph::{CanonicalForm, Multidegree, Signature, VertexColor, Web};
use crate::weightpath::{SignState, SignStateString, Trit};

/// `+1` when the colors around internal vertex `k`, read counterclockwise,
/// are a rotation of `(-1, 0, 1)`, `-1` for a rotation of `(1, 0, -1)`.
pub fn internal_sign(web: &Web, k: usize, colors: &[Color]) -> i8 {
    let hs = &web.internal()[k].half_edges;
    let a = colors[web.edge_of(hs[0])].index();
    let b = colors[web.edge_of(hs[1])].index();
    if (b + 3 - a) % 3 == 1 {
        1
    } else {
        -1
    }
}

/// Product of the internal signs of a proper coloring.
pub fn coloring_sign(web: &Web, coloring: &EdgeColoring) -> i8 {
    (0..web.internal().len())
        .map(|k| internal_sign(web, k, coloring.colors()))
        .product()
}

/// The boundary monomial of a coloring.
pub fn coloring_monomial(web: &Web, coloring: &EdgeColoring) -> Monomial {
    Monomial::from_factors(web.boundary_half_edges().map(|(k, h)| {
        (variable(k + 1, web.boundary()[k].color, coloring.color(web.edge_of(h))), 1)
    }))
}

fn variable(vertex: usize, at: VertexColor, color: Color) -> Variable {
    Variable {
        vertex,
        color,
        kind: VarKind::of_vertex(at),
    }
}

/// Precomputed data for turning colorings into dense exponent vectors.
struct Evaluator {
    /// (edge, exponent slot) per boundary half-edge.
    slots: Vec<(usize, usize, VertexColor)>,
    /// Edge pairs read at each internal vertex.
    vertices: Vec<(usize, usize)>,
    width: usize,
}

impl Evaluator {
    fn new(web: &Web) -> Evaluator {
        Evaluator {
            slots: web
                .boundary_half_edges()
                .map(|(k, h)| (web.edge_of(h), 3 * k, web.boundary()[k].color))
                .collect(),
            vertices: web
                .internal()
                .iter()
                .map(|v| (web.edge_of(v.half_edges[0]), web.edge_of(v.half_edges[1])))
                .collect(),
            width: 3 * web.n_boundary(),
        }
    }

    fn sign(&self, colors: &[Color]) -> i64 {
        let mut s = 1;
        for &(e0, e1) in &self.vertices {
            let (a, b) = (colors[e0].index(), colors[e1].index());
            if (b + 3 - a) % 3 != 1 {
                s = -s;
            }
        }
        s
    }

    fn exponents(&self, colors: &[Color]) -> Vec<u8> {
        let mut key = vec![0u8; self.width];
        for &(e, base, at) in &self.slots {
            key[base + variable(0, at, colors[e]).slot()] += 1;
        }
        key
    }

    fn monomial(&self, web: &Web, key: &[u8]) -> Monomial {
        Monomial::from_factors(key.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| {
            let k = i / 3;
            let at = web.boundary()[k].color;
            let color = Trit::ALL
                .into_iter()
                .find(|&c| variable(k + 1, at, c).slot() == i % 3)
                .unwrap();
            (variable(k + 1, at, color), e as u32)
        }))
    }
}

/// The web invariant: the signed sum of boundary monomials over all proper
/// colorings. Colorings are streamed into a term map.
pub fn evaluate(web: &Web) -> Result<Polynomial> {
    web.require_valid()?;
    let ev = Evaluator::new(web);
    let mut acc: HashMap<Vec<u8>, i64> = HashMap::new();
    coloring::for_each_color_slice(web, |colors| {
        *acc.entry(ev.exponents(colors)).or_default() += ev.sign(colors);
    });
    Ok(Polynomial::from_terms(
        acc.into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(key, c)| (BigInt::from(c), ev.monomial(web, &key))),
    ))
}

/// The coloring of `web` induced by the KK labeling of its unclasping.
pub fn kk_coloring(web: &Web) -> Result<EdgeColoring> {
    web.require_valid()?;
    // unclasping keeps edge indices, so the coloring transfers as is
    coloring::minimal_coloring(&web.unclasp()?)
}

/// The leading term of `evaluate(web)`, found from the KK labeling of the
/// unclasped web. Only colorings with the same boundary color multisets are
/// visited to fix the coefficient.
pub fn leading_term_via_kk(web: &Web) -> Result<(BigInt, Monomial)> {
    let kk = kk_coloring(web)?;
    let ev = Evaluator::new(web);
    let target = ev.exponents(kk.colors());

    let mut allowed = vec![0b111u8; web.n_edges()];
    for v in web.boundary() {
        let mut mask = 0;
        for &h in &v.half_edges {
            mask |= coloring::color_bit(kk.color(web.edge_of(h)));
        }
        for &h in &v.half_edges {
            allowed[web.edge_of(h)] &= mask;
        }
    }
    let mut coefficient = 0i64;
    coloring::for_each_restricted(web, allowed, |colors| {
        if ev.exponents(colors) == target {
            coefficient += ev.sign(colors);
        }
    });
    Ok((BigInt::from(coefficient), ev.monomial(web, &target)))
}

/// The degree-1 sign/state string read off a monomial: at each vertex the
/// colors in its variables, sorted so that states increase (black state =
/// color, white state = -color).
pub fn monomial_string(m: &Monomial, sig: &Signature) -> Result<SignStateString> {
    for &(v, _) in m.factors() {
        if v.vertex == 0 || v.vertex > sig.len() || VarKind::of_vertex(sig.0[v.vertex - 1]) != v.kind {
            return Err(Error::SignatureMismatch(format!("variable {v} does not fit signature {sig}")));
        }
    }
    let mut entries = Vec::with_capacity(m.degree() as usize);
    for (k, &at) in sig.colors().iter().enumerate() {
        let mut states: Vec<Trit> = Vec::new();
        for c in Trit::ALL {
            let e = m.exponent(variable(k + 1, at, c));
            let state = match at {
                VertexColor::Black => c,
                VertexColor::White => -c,
            };
            states.extend(std::iter::repeat_n(state, e as usize));
        }
        states.sort();
        entries.extend(states.into_iter().map(|s| SignState::new(at.sign(), s)));
    }
    Ok(SignStateString(entries))
}

/// The basis web whose leading monomial is `m`.
pub fn web_from_monomial(m: &Monomial, sig: &Signature) -> Result<Web> {
    let s = monomial_string(m, sig)?;
    if !s.is_dominant() {
        return Err(Error::NotDominant(s));
    }
    let degrees = Multidegree(m.multidegree(sig.len()));
    let web = grow(&s)?.web.clasp_with_signature(&degrees, sig)?;
    let violations = web.validate();
    if !violations.is_empty() {
        return Err(Error::InvalidWeb(violations));
    }
    Ok(web)
}

/// Integer combination of basis webs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WebExpansion {
    pub terms: Vec<(BigInt, Web)>,
}

impl WebExpansion {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ c·[D]`.
    pub fn evaluate(&self) -> Result<Polynomial> {
        let mut sum = Polynomial::zero();
        for (c, w) in &self.terms {
            sum = &sum + &evaluate(w)?.scale(c);
        }
        Ok(sum)
    }

    /// Coefficients keyed by canonical form, for order-free comparison.
    pub fn by_canonical_form(&self) -> Result<HashMap<CanonicalForm, BigInt>> {
        let mut out: HashMap<CanonicalForm, BigInt> = HashMap::new();
        for (c, w) in &self.terms {
            *out.entry(w.canonical_form()?).or_default() += c;
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }
}

impl fmt::Display for WebExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, w) in &self.terms {
            writeln!(f, "{c}")?;
            f.write_str(&w.to_text())?;
        }
        Ok(())
    }
}

/// Number of monomials of each multidegree present in `f`, summed: an upper
/// bound on the number of expansion steps.
fn step_bound(f: &Polynomial, n: usize) -> usize {
    let mut degrees: Vec<Vec<usize>> = f.terms().map(|(m, _)| m.multidegree(n)).collect();
    degrees.sort();
    degrees.dedup();
    degrees
        .iter()
        .map(|d| d.iter().map(|&di| (di + 2) * (di + 1) / 2).product::<usize>())
        .sum()
}

/// Writes `f` as an integer combination of basis webs with signature `sig`
/// by repeatedly removing the leading term.
pub fn expand(f: &Polynomial, sig: &Signature) -> Result<WebExpansion> {
    for (m, _) in f.terms() {
        monomial_string(m, sig)?;
    }
    let bound = step_bound(f, sig.len());
    let mut remainder = f.clone();
    let mut out = WebExpansion::default();
    while !remainder.is_zero() {
        if out.len() == bound {
            return Err(Error::Expansion(format!("no termination after {bound} steps")));
        }
        let (c, m) = remainder.leading_term()?;
        let web = web_from_monomial(&m, sig)
            .map_err(|e| Error::Expansion(format!("leading monomial {m} is not a web's: {e}")))?;
        let inv = evaluate(&web)?;
        let (lc, lm) = inv.leading_term()?;
        if lm != m {
            return Err(Error::Expansion(format!("web for {m} leads with {lm}")));
        }
        let (coef, rest) = c.div_rem(&lc);
        if !rest.is_zero() {
            return Err(Error::Expansion(format!("coefficient {c} not divisible by {lc}")));
        }
        remainder = &remainder - &inv.scale(&coef);
        if let Ok((_, next)) = remainder.leading_term() {
            if next >= m {
                return Err(Error::Expansion(format!("leading monomial did not drop below {m}")));
            }
        }
        out.terms.push((coef, web));
    }
    Ok(out)
}

/// Is `c` a unit?
pub fn is_unit(c: &BigInt) -> bool {
    c.is_one() || (-c).is_one()
}
