use std::collections::HashSet;

use super::{HalfEdge, Multidegree, Signature, Vertex, VertexColor, VertexRef, Web};
use crate::error::{Error, Result};
use crate::growth::GrowthRule;
use crate::weightpath::{SignStateString, Trit};

/// Splits every boundary vertex of degree `d` into `d` consecutive degree-1
/// vertices of the same color; degree-0 vertices disappear.
pub(super) fn unclasp(web: &Web) -> Web {
    let boundary = web
        .boundary()
        .iter()
        .flat_map(|v| v.half_edges.iter().map(move |&h| (v.color, vec![h])))
        .collect();
    Web::new(boundary, web.internal().to_vec(), web.edges().to_vec())
        .expect("unclasping keeps the half-edge tables consistent")
}

pub(super) fn clasp(web: &Web, degrees: &Multidegree, signature: Option<&Signature>) -> Result<Web> {
    web.require_unclasped()?;
    if degrees.total() != web.n_boundary() {
        return Err(Error::Clasp(format!(
            "multidegree {degrees} sums to {} but the web has {} boundary vertices",
            degrees.total(),
            web.n_boundary()
        )));
    }
    if let Some(sig) = signature {
        if sig.len() != degrees.0.len() {
            return Err(Error::Clasp(format!(
                "signature {sig} and multidegree {degrees} differ in length"
            )));
        }
    }
    let mut boundary = Vec::with_capacity(degrees.0.len());
    let mut next = 0;
    for (i, &d) in degrees.0.iter().enumerate() {
        let group = &web.boundary()[next..next + d];
        next += d;
        let color = match (group.first(), signature) {
            (Some(first), _) => first.color,
            (None, Some(sig)) => sig.0[i],
            (None, None) => {
                return Err(Error::Clasp(format!(
                    "vertex {} has degree 0 and no signature gives its color",
                    i + 1
                )))
            }
        };
        if group.iter().any(|v| v.color != color) {
            return Err(Error::Clasp(format!("group for vertex {} is not monochromatic", i + 1)));
        }
        if let Some(sig) = signature {
            if sig.0[i] != color {
                return Err(Error::Clasp(format!("vertex {} does not match signature {sig}", i + 1)));
            }
        }
        boundary.push((color, group.iter().map(|v| v.half_edges[0]).collect()));
    }
    Web::new(boundary, web.internal().to_vec(), web.edges().to_vec())
}

/// `true` iff `seq` is a rotation of `expected`.
fn cyclically_equal(seq: &[HalfEdge], expected: [HalfEdge; 3]) -> bool {
    seq.len() == 3 && (0..3).any(|r| (0..3).all(|k| seq[(k + r) % 3] == expected[k]))
}

fn internal_index(r: VertexRef) -> Option<usize> {
    match r {
        VertexRef::Internal(k) => Some(k),
        VertexRef::Boundary(_) => None,
    }
}

/// The half-edge of internal vertex `k` other than `a` and `b`.
fn third(web: &Web, k: usize, a: HalfEdge, b: HalfEdge) -> Result<HalfEdge> {
    let rest: Vec<HalfEdge> = web.internal()[k]
        .half_edges
        .iter()
        .copied()
        .filter(|&h| h != a && h != b)
        .collect();
    match rest.as_slice() {
        [h] => Ok(*h),
        _ => Err(Error::Trim(format!("vertex {} is not trivalent", web.internal()[k].id))),
    }
}

/// One trimming step at the first position `i` whose successor's state is
/// not 1. Returns the smaller web and its state string, obtained by applying
/// the growth rule at `(i, i + 1)` to `labeling`.
pub(super) fn trim(web: &Web, labeling: &SignStateString) -> Result<(Web, SignStateString)> {
    web.require_unclasped()?;
    let n = web.n_boundary();
    if n < 2 {
        return Err(Error::Trim("need at least two boundary vertices".into()));
    }
    if labeling.len() != n {
        return Err(Error::Trim(format!(
            "labeling has {} entries for {n} boundary vertices",
            labeling.len()
        )));
    }
    if !labeling.is_dominant() {
        return Err(Error::NotDominant(labeling.clone()));
    }
    for (k, (e, v)) in labeling.entries().iter().zip(web.boundary()).enumerate() {
        if VertexColor::of_sign(e.sign) != v.color {
            return Err(Error::Trim(format!("sign of entry {} disagrees with the boundary color", k + 1)));
        }
    }
    let states: Vec<Trit> = labeling.states().collect();
    let i = (0..n - 1)
        .find(|&i| states[i + 1] != Trit::Plus)
        .expect("a dominant string ends in state -1");
    let (left, right) = (labeling.entries()[i], labeling.entries()[i + 1]);
    let rule = GrowthRule::for_pair(left, right)
        .ok_or_else(|| Error::Trim(format!("no growth rule for {left},{right}")))?;

    let hl = web.boundary()[i].half_edges[0];
    let hr = web.boundary()[i + 1].half_edges[0];
    let (tl, tr) = (web.twin(hl), web.twin(hr));
    let malformed = |what: &str| {
        Error::Trim(format!(
            "vertices {} and {} are not joined as {what} ({rule} expected)",
            i + 1,
            i + 2
        ))
    };

    let mut drop_internal = HashSet::new();
    let mut drop_edges = HashSet::new();
    let mut new_boundary: Vec<(VertexColor, Vec<HalfEdge>)> = Vec::new();
    drop_edges.insert(web.edge_of(hl));
    drop_edges.insert(web.edge_of(hr));

    match rule {
        GrowthRule::Cap => {
            if tl != hr {
                return Err(malformed("an arc"));
            }
        }
        GrowthRule::Y10 | GrowthRule::Y0Minus | GrowthRule::Y1Minus => {
            let y = internal_index(web.site(tl).vertex).ok_or_else(|| malformed("a Y"))?;
            if web.site(tr).vertex != VertexRef::Internal(y) {
                return Err(malformed("a Y"));
            }
            let low = third(web, y, tl, tr)?;
            if !cyclically_equal(&web.internal()[y].half_edges, [tr, tl, low]) {
                return Err(malformed("a Y"));
            }
            drop_internal.insert(y);
            new_boundary.push((web.internal()[y].color, vec![low]));
        }
        GrowthRule::H10 | GrowthRule::H00 | GrowthRule::H0Minus => {
            let p = internal_index(web.site(tl).vertex).ok_or_else(|| malformed("an H"))?;
            let q = internal_index(web.site(tr).vertex).ok_or_else(|| malformed("an H"))?;
            if p == q {
                return Err(malformed("an H"));
            }
            let side = web.internal()[p]
                .half_edges
                .iter()
                .copied()
                .find(|&h| web.across(h) == VertexRef::Internal(q))
                .ok_or_else(|| malformed("an H"))?;
            let side_q = web.twin(side);
            let p_low = third(web, p, tl, side)?;
            let q_low = third(web, q, tr, side_q)?;
            if !cyclically_equal(&web.internal()[p].half_edges, [side, tl, p_low])
                || !cyclically_equal(&web.internal()[q].half_edges, [tr, side_q, q_low])
            {
                return Err(malformed("an H"));
            }
            drop_internal.insert(p);
            drop_internal.insert(q);
            drop_edges.insert(web.edge_of(side));
            new_boundary.push((web.internal()[p].color, vec![p_low]));
            new_boundary.push((web.internal()[q].color, vec![q_low]));
        }
    }

    let mut boundary: Vec<(VertexColor, Vec<HalfEdge>)> = Vec::with_capacity(n);
    for v in &web.boundary()[..i] {
        boundary.push((v.color, v.half_edges.clone()));
    }
    boundary.extend(new_boundary);
    for v in &web.boundary()[i + 2..] {
        boundary.push((v.color, v.half_edges.clone()));
    }
    let internal: Vec<Vertex> = web
        .internal()
        .iter()
        .enumerate()
        .filter(|(k, _)| !drop_internal.contains(k))
        .map(|(_, v)| v.clone())
        .collect();
    let edges = web
        .edges()
        .iter()
        .enumerate()
        .filter(|(e, _)| !drop_edges.contains(e))
        .map(|(_, &pair)| pair)
        .collect();
    let trimmed = Web::new(boundary, internal, edges)?;

    let mut entries = labeling.entries()[..i].to_vec();
    entries.extend(rule.output(left, right));
    entries.extend_from_slice(&labeling.entries()[i + 2..]);
    Ok((trimmed, SignStateString(entries)))
}
