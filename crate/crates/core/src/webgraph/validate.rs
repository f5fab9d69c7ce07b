use std::collections::{BTreeSet, HashMap};
use std::fmt;

use super::{VertexRef, Web};

/// A reason a web is not a well-formed non-elliptic web.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    /// Edge (by index) joining two vertices of the same color.
    NotBipartite { edge: usize },
    SelfLoop { edge: usize },
    /// Internal vertex (by id) whose degree is not 3.
    NotTrivalent { vertex: u32, degree: usize },
    /// The rotation system, closed off by the boundary circle, is not a
    /// sphere: `V - E + F` differs from twice the component count.
    NotPlanar { euler: i64, expected: i64 },
    /// Internal vertex (by id) in a component that never reaches the boundary.
    ClosedComponent { vertex: u32 },
    /// Two vertices (ids) joined by `count > 1` edges, at least one of them
    /// internal.
    MultipleEdge { a: u32, b: u32, count: usize },
    /// A 4-cycle through internal vertices only (ids, sorted).
    InteriorSquare { vertices: [u32; 4] },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotBipartite { edge } => write!(f, "edge {} joins two vertices of one color", edge + 1),
            Violation::SelfLoop { edge } => write!(f, "edge {} is a loop", edge + 1),
            Violation::NotTrivalent { vertex, degree } => {
                write!(f, "internal vertex {vertex} has degree {degree}")
            }
            Violation::NotPlanar { euler, expected } => {
                write!(f, "rotation system is not planar (V-E+F = {euler}, expected {expected})")
            }
            Violation::ClosedComponent { vertex } => {
                write!(f, "internal vertex {vertex} is not connected to the boundary")
            }
            Violation::MultipleEdge { a, b, count } => write!(f, "{count} parallel edges between vertices {a} and {b}"),
            Violation::InteriorSquare { vertices } => {
                write!(f, "interior 4-cycle through vertices {vertices:?}")
            }
        }
    }
}

fn dense(web: &Web, r: VertexRef) -> usize {
    match r {
        VertexRef::Boundary(k) => k,
        VertexRef::Internal(k) => web.n_boundary() + k,
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

pub(super) fn violations(web: &Web) -> Vec<Violation> {
    let mut out = Vec::new();
    let nb = web.n_boundary();

    for (e, _) in web.edges().iter().enumerate() {
        let [a, b] = web.endpoints(e);
        if a == b {
            out.push(Violation::SelfLoop { edge: e });
        } else if web.color(a) == web.color(b) {
            out.push(Violation::NotBipartite { edge: e });
        }
    }

    for v in web.internal() {
        if v.degree() != 3 {
            out.push(Violation::NotTrivalent {
                vertex: v.id,
                degree: v.degree(),
            });
        }
    }

    if let Some(v) = planarity(web) {
        out.push(v);
    }

    // components of the web graph itself
    let nv = nb + web.internal().len();
    let mut uf = UnionFind::new(nv);
    for e in 0..web.n_edges() {
        let [a, b] = web.endpoints(e);
        uf.union(dense(web, a), dense(web, b));
    }
    let reaches: BTreeSet<usize> = (0..nb).map(|k| uf.find(k)).collect();
    for (k, v) in web.internal().iter().enumerate() {
        if !reaches.contains(&uf.find(nb + k)) {
            out.push(Violation::ClosedComponent { vertex: v.id });
        }
    }

    let mut multiplicity: HashMap<(VertexRef, VertexRef), usize> = HashMap::new();
    for e in 0..web.n_edges() {
        let [a, b] = web.endpoints(e);
        if a != b {
            *multiplicity.entry((a.min(b), a.max(b))).or_default() += 1;
        }
    }
    let mut multi: Vec<_> = multiplicity
        .into_iter()
        .filter(|&((a, b), c)| c > 1 && !(a.is_boundary() && b.is_boundary()))
        .collect();
    multi.sort();
    out.extend(
        multi
            .into_iter()
            .map(|((a, b), count)| Violation::MultipleEdge {
                a: web.vertex(a).id,
                b: web.vertex(b).id,
                count,
            }),
    );

    out.extend(
        interior_squares(web)
            .into_iter()
            .map(|vertices| Violation::InteriorSquare { vertices }),
    );
    out
}

fn interior_squares(web: &Web) -> BTreeSet<[u32; 4]> {
    let ni = web.internal().len();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ni];
    for e in 0..web.n_edges() {
        if let [VertexRef::Internal(a), VertexRef::Internal(b)] = web.endpoints(e) {
            if a != b {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
    }
    let mut found = BTreeSet::new();
    for a in 0..ni {
        for &b in &adj[a] {
            for &d in &adj[a] {
                if d <= b {
                    continue;
                }
                for &c in &adj[b] {
                    if c != a && c != d && adj[d].contains(&c) {
                        let mut ids = [a, b, c, d].map(|k| web.internal()[k].id);
                        ids.sort_unstable();
                        found.insert(ids);
                    }
                }
            }
        }
    }
    found
}

/// Traces faces of the web closed off by the boundary circle and checks the
/// Euler characteristic component by component.
fn planarity(web: &Web) -> Option<Violation> {
    let nb = web.n_boundary();
    let ne = web.n_edges();
    let nv = nb + web.internal().len();
    // darts 2e, 2e+1 for web edges; 2ne + 2k is k -> k+1 along the circle and
    // 2ne + 2k + 1 its reverse
    let n_darts = 2 * ne + if nb > 0 { 2 * nb } else { 0 };
    let dart_of = |h| {
        let s = web.site(h);
        2 * s.edge + s.end
    };
    let mut origin = vec![0usize; n_darts];
    let mut succ = vec![0usize; n_darts];
    let mut rotations: Vec<Vec<usize>> = Vec::with_capacity(nv);
    for (k, v) in web.boundary().iter().enumerate() {
        let prev = 2 * ne + 2 * ((k + nb - 1) % nb) + 1;
        let next = 2 * ne + 2 * k;
        let mut rot = vec![prev];
        rot.extend(v.half_edges.iter().map(|&h| dart_of(h)));
        rot.push(next);
        rotations.push(rot);
    }
    for v in web.internal() {
        rotations.push(v.half_edges.iter().map(|&h| dart_of(h)).collect());
    }
    for (vi, rot) in rotations.iter().enumerate() {
        for (i, &d) in rot.iter().enumerate() {
            origin[d] = vi;
            succ[d] = rot[(i + 1) % rot.len()];
        }
    }

    let mut uf = UnionFind::new(nv);
    for d in (0..n_darts).step_by(2) {
        uf.union(origin[d], origin[d + 1]);
    }

    let mut seen = vec![false; n_darts];
    let mut faces = 0i64;
    for start in 0..n_darts {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = succ[d ^ 1];
        }
    }
    // a component with no darts is a lone vertex on a sphere with one face
    let mut comps = BTreeSet::new();
    let mut lone = 0i64;
    for (vi, rot) in rotations.iter().enumerate() {
        comps.insert(uf.find(vi));
        if rot.is_empty() {
            lone += 1;
        }
    }
    let euler = nv as i64 - (n_darts / 2) as i64 + faces + lone;
    let expected = 2 * comps.len() as i64;
    (euler != expected).then_some(Violation::NotPlanar { euler, expected })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{HalfEdge, Vertex, VertexColor, WebBuilder};
    use super::*;
    use VertexColor::{Black, White};

    #[test]
    fn small_webs_are_valid() {
        assert_eq!(single_edge().validate(), vec![]);
        assert_eq!(h_web().validate(), vec![]);
        assert_eq!(tripod().validate(), vec![]);
        assert_eq!(Web::empty().validate(), vec![]);
    }

    #[test]
    fn doubled_internal_edge() {
        // black 1 - white u = black v - white 2, with u, v doubly joined
        let mut b = WebBuilder::new();
        let v1 = b.add_boundary(Black);
        let v2 = b.add_boundary(White);
        let u = b.add_internal(White);
        let v = b.add_internal(Black);
        b.connect(v1, u);
        b.connect(u, v);
        b.connect(u, v);
        b.connect(v, v2);
        let web = b.build().unwrap();
        let viol = web.validate();
        assert!(
            viol.iter().any(|x| matches!(x, Violation::MultipleEdge { count: 2, .. })),
            "{viol:?}"
        );
    }

    #[test]
    fn boundary_double_edge_is_allowed() {
        let mut b = WebBuilder::new();
        let v1 = b.add_boundary(Black);
        let v2 = b.add_boundary(White);
        // outer arc first at 1, last at 2
        b.connect(v1, v2);
        let web = b.build().unwrap();
        let [ha, hb] = web.edges()[0];
        let web = Web::new(
            vec![
                (Black, vec![ha, HalfEdge(10)]),
                (White, vec![HalfEdge(11), hb]),
            ],
            vec![],
            vec![[ha, hb], [HalfEdge(10), HalfEdge(11)]],
        )
        .unwrap();
        assert_eq!(web.validate(), vec![]);
    }

    #[test]
    fn crossing_arcs_are_not_planar() {
        // arcs 1-3 and 2-4 on four boundary vertices cross
        let mut b = WebBuilder::new();
        let v: Vec<_> = [Black, Black, White, White].iter().map(|&c| b.add_boundary(c)).collect();
        b.connect(v[0], v[2]);
        b.connect(v[1], v[3]);
        let viol = b.build().unwrap().validate();
        assert!(viol.iter().any(|x| matches!(x, Violation::NotPlanar { .. })), "{viol:?}");
        // nested arcs 1-4 and 2-3 are fine
        let mut b = WebBuilder::new();
        let v: Vec<_> = [Black, Black, White, White].iter().map(|&c| b.add_boundary(c)).collect();
        b.connect(v[0], v[3]);
        b.connect(v[1], v[2]);
        assert_eq!(b.build().unwrap().validate(), vec![]);
    }

    #[test]
    fn wrong_rotation_at_internal_vertex() {
        // reverse the rotation at one internal vertex of the H web
        let h = h_web();
        let mut internal: Vec<Vertex> = h.internal().to_vec();
        internal[0].half_edges.reverse();
        let boundary = h.boundary().iter().map(|v| (v.color, v.half_edges.clone())).collect();
        let flipped = Web::new(boundary, internal, h.edges().to_vec()).unwrap();
        let viol = flipped.validate();
        assert!(viol.iter().any(|x| matches!(x, Violation::NotPlanar { .. })), "{viol:?}");
    }

    #[test]
    fn bipartite_and_trivalence() {
        let mut b = WebBuilder::new();
        let v1 = b.add_boundary(Black);
        let v2 = b.add_boundary(Black);
        b.connect(v1, v2);
        let viol = b.build().unwrap().validate();
        assert!(viol.contains(&Violation::NotBipartite { edge: 0 }));

        let mut b = WebBuilder::new();
        let v1 = b.add_boundary(Black);
        let v2 = b.add_boundary(Black);
        let u = b.add_internal(White);
        b.connect(v1, u);
        b.connect(u, v2);
        let viol = b.build().unwrap().validate();
        assert!(viol.iter().any(|x| matches!(x, Violation::NotTrivalent { degree: 2, .. })));
    }

    #[test]
    fn interior_square_is_flagged() {
        // four internal vertices in a ring, one leg from each to the boundary
        let colors = [Black, White, Black, White];
        let mut he = 0u32;
        let mut fresh = || {
            he += 1;
            HalfEdge(he)
        };
        let legs: Vec<(HalfEdge, HalfEdge)> = (0..4).map(|_| (fresh(), fresh())).collect();
        let links: Vec<(HalfEdge, HalfEdge)> = (0..4).map(|_| (fresh(), fresh())).collect();
        let mut boundary = Vec::new();
        let mut internal = Vec::new();
        let mut edges = Vec::new();
        for k in 0..4 {
            // counterclockwise at ring vertex k: link to k+1, leg, link to k-1
            internal.push(Vertex {
                id: 10 + k as u32,
                color: colors[k].opposite(),
                half_edges: vec![links[k].0, legs[k].1, links[(k + 3) % 4].1],
            });
            boundary.push((colors[k], vec![legs[k].0]));
            edges.push([legs[k].0, legs[k].1]);
            edges.push([links[k].0, links[k].1]);
        }
        let web = Web::new(boundary, internal, edges).unwrap();
        assert_eq!(
            web.validate(),
            vec![Violation::InteriorSquare { vertices: [10, 11, 12, 13] }]
        );
    }
}
