use std::collections::VecDeque;

use super::{VertexColor, VertexRef, Web};
use crate::error::{Error, Result};

/// Byte encoding of a web that is equal for two webs iff they are isotopic
/// relative to the (linearly ordered) boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Breadth-first relabeling from boundary vertex 1. An internal vertex's
/// rotation is read starting from the half-edge it was discovered through, so
/// the labels depend only on the rotation system.
pub(super) fn encode(web: &Web) -> Result<CanonicalForm> {
    let nb = web.n_boundary();
    let ni = web.internal().len();
    let dense = |r: VertexRef| match r {
        VertexRef::Boundary(k) => k,
        VertexRef::Internal(k) => nb + k,
    };
    let refs: Vec<VertexRef> = web.vertex_refs().collect();

    let mut label: Vec<Option<u32>> = vec![None; nb + ni];
    let mut start = vec![0usize; nb + ni];
    let mut order: Vec<usize> = Vec::with_capacity(nb + ni);
    let mut queue = VecDeque::new();
    for (k, l) in label.iter_mut().enumerate().take(nb) {
        *l = Some(k as u32);
        order.push(k);
        queue.push_back(k);
    }
    while let Some(v) = queue.pop_front() {
        let vert = web.vertex(refs[v]);
        let deg = vert.degree();
        for i in 0..deg {
            let h = vert.half_edges[(start[v] + i) % deg];
            let t = web.twin(h);
            let site = web.site(t);
            let u = dense(site.vertex);
            if label[u].is_none() {
                label[u] = Some(order.len() as u32);
                start[u] = site.slot;
                order.push(u);
                queue.push_back(u);
            }
        }
    }
    if order.len() != nb + ni {
        return Err(Error::Structure("web has a component away from the boundary".into()));
    }

    let mut bytes = Vec::new();
    let mut put = |x: u32| bytes.extend_from_slice(&x.to_le_bytes());
    put(nb as u32);
    put(ni as u32);
    for &v in &order {
        let vert = web.vertex(refs[v]);
        let deg = vert.degree();
        put(match vert.color {
            VertexColor::Black => 0,
            VertexColor::White => 1,
        });
        put(deg as u32);
        for i in 0..deg {
            let h = vert.half_edges[(start[v] + i) % deg];
            let site = web.site(web.twin(h));
            let u = dense(site.vertex);
            let udeg = web.vertex(site.vertex).degree();
            put(label[u].unwrap());
            put(((site.slot + udeg - start[u]) % udeg) as u32);
        }
    }
    Ok(CanonicalForm(bytes))
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{HalfEdge, Vertex, Web};

    /// Rebuild with shuffled ids, rotated internal rotations and permuted
    /// internal/edge tables.
    fn relabel(web: &Web, shift: u32, rot: usize) -> Web {
        let map = |h: HalfEdge| HalfEdge(h.0 * 7 + shift);
        let boundary = web
            .boundary()
            .iter()
            .map(|v| (v.color, v.half_edges.iter().map(|&h| map(h)).collect()))
            .collect();
        let mut internal: Vec<Vertex> = web
            .internal()
            .iter()
            .map(|v| {
                let mut hs: Vec<HalfEdge> = v.half_edges.iter().map(|&h| map(h)).collect();
                let r = rot % hs.len().max(1);
                hs.rotate_left(r);
                Vertex {
                    id: v.id * 3 + shift,
                    color: v.color,
                    half_edges: hs,
                }
            })
            .collect();
        internal.reverse();
        let mut edges: Vec<[HalfEdge; 2]> = web
            .edges()
            .iter()
            .map(|&[a, b]| [map(b), map(a)])
            .collect();
        edges.reverse();
        Web::new(boundary, internal, edges).unwrap()
    }

    #[test]
    fn relabeling_invariance() {
        for web in [single_edge(), h_web(), tripod()] {
            let c = web.canonical_form().unwrap();
            for (shift, rot) in [(1, 0), (5, 1), (11, 2)] {
                assert_eq!(relabel(&web, shift, rot).canonical_form().unwrap(), c);
            }
        }
    }

    #[test]
    fn different_webs_differ() {
        assert_ne!(
            single_edge().canonical_form().unwrap(),
            h_web().canonical_form().unwrap()
        );
    }
}
