//! Proper edge colorings of webs with colors `{-1, 0, 1}`.
//!
//! A coloring is proper when the three edges at every internal vertex get
//! distinct colors. Colorings are compared through their boundary word: the
//! colors of the boundary half-edges read from vertex 1, where at a black
//! vertex `1 < 0 < -1` and at a white vertex `-1 < 0 < 1`.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::growth::EdgeLabel;
use crate::webgraph::{VertexColor, VertexRef, Web};
use crate::weightpath::{Sign, Trit};

pub type Color = Trit;

/// A total coloring, indexed like `web.edges()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeColoring {
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(colors: Vec<Color>) -> Self {
        EdgeColoring { colors }
    }

    pub fn color(&self, edge: usize) -> Color {
        self.colors[edge]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn is_proper(&self, web: &Web) -> bool {
        self.colors.len() == web.n_edges()
            && web.internal().iter().all(|v| {
                let mut seen = [false; 3];
                v.half_edges.iter().all(|&h| {
                    let c = self.colors[web.edge_of(h)].index();
                    !std::mem::replace(&mut seen[c], true)
                })
            })
    }

    pub fn boundary_word(&self, web: &Web) -> BoundaryWord {
        BoundaryWord(
            web.boundary_half_edges()
                .map(|(k, h)| (self.colors[web.edge_of(h)], web.boundary()[k].color))
                .collect(),
        )
    }
}

impl fmt::Display for EdgeColoring {
    /// `<edge id>=<color>` pairs with 1-based edge ids.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, c) in self.colors.iter().enumerate() {
            if e > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}={}", e + 1, c)?;
        }
        Ok(())
    }
}

/// Position of `color` in the boundary order for a vertex of color `vertex`.
pub fn rank(color: Color, vertex: VertexColor) -> u8 {
    match vertex {
        VertexColor::Black => (1 - color.value()) as u8,
        VertexColor::White => (color.value() + 1) as u8,
    }
}

/// Colors in increasing boundary order at a vertex of the given color.
fn preference(vertex: VertexColor) -> [Color; 3] {
    match vertex {
        VertexColor::Black => [Trit::Plus, Trit::Zero, Trit::Minus],
        VertexColor::White => [Trit::Minus, Trit::Zero, Trit::Plus],
    }
}

/// Colors along the boundary with the color of the vertex they sit at.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundaryWord(pub Vec<(Color, VertexColor)>);

impl BoundaryWord {
    /// Lexicographic comparison with the per-vertex-color orders.
    pub fn compare(&self, other: &BoundaryWord) -> Ordering {
        for (&(a, va), &(b, vb)) in self.0.iter().zip(&other.0) {
            debug_assert_eq!(va, vb);
            match rank(a, va).cmp(&rank(b, vb)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl fmt::Display for BoundaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, (c, v)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}{}", c, v.letter())?;
        }
        f.write_str(")")
    }
}

/// Backtracking over edges with all-different propagation at internal
/// vertices. Boundary edges come first, in reading order.
struct Search {
    n_edges: usize,
    /// Internal vertex -> its edges.
    vertex_edges: Vec<Vec<usize>>,
    /// Edge -> internal vertices it touches.
    edge_vertices: Vec<Vec<usize>>,
    order: Vec<usize>,
    /// Value order per edge.
    values: Vec<[Color; 3]>,
}

const ALL: u8 = 0b111;

fn bit(c: Color) -> u8 {
    1 << c.index()
}

fn single(d: u8) -> Option<Color> {
    match d {
        0b001 => Some(Trit::Minus),
        0b010 => Some(Trit::Zero),
        0b100 => Some(Trit::Plus),
        _ => None,
    }
}

impl Search {
    fn new(web: &Web, lexicographic: bool) -> Search {
        let n_edges = web.n_edges();
        let vertex_edges: Vec<Vec<usize>> = web
            .internal()
            .iter()
            .map(|v| v.half_edges.iter().map(|&h| web.edge_of(h)).collect())
            .collect();
        let mut edge_vertices = vec![Vec::new(); n_edges];
        for (k, es) in vertex_edges.iter().enumerate() {
            for &e in es {
                if !edge_vertices[e].contains(&k) {
                    edge_vertices[e].push(k);
                }
            }
        }

        let mut placed = vec![false; n_edges];
        let mut order = Vec::with_capacity(n_edges);
        let mut values = vec![Trit::ALL; n_edges];
        for (k, h) in web.boundary_half_edges() {
            let e = web.edge_of(h);
            if !placed[e] {
                placed[e] = true;
                order.push(e);
                if lexicographic {
                    values[e] = preference(web.boundary()[k].color);
                }
            }
        }
        // interior edges breadth first from the boundary
        let mut seen = vec![false; web.internal().len()];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for (_, h) in web.boundary_half_edges() {
            if let VertexRef::Internal(k) = web.across(h) {
                if !seen[k] {
                    seen[k] = true;
                    queue.push_back(k);
                }
            }
        }
        while let Some(k) = queue.pop_front() {
            for &h in &web.internal()[k].half_edges {
                let e = web.edge_of(h);
                if !placed[e] {
                    placed[e] = true;
                    order.push(e);
                }
                if let VertexRef::Internal(j) = web.across(h) {
                    if !seen[j] {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
            }
        }
        order.extend((0..n_edges).filter(|&e| !placed[e]));

        Search {
            n_edges,
            vertex_edges,
            edge_vertices,
            order,
            values,
        }
    }

    /// Fixes `edge` to `c` and propagates; false on a wipe-out.
    fn assign(&self, domains: &mut [u8], edge: usize, c: Color) -> bool {
        if domains[edge] & bit(c) == 0 {
            return false;
        }
        domains[edge] = bit(c);
        let mut pending = vec![edge];
        while let Some(e) = pending.pop() {
            let c = single(domains[e]).expect("pending edges are fixed");
            for &v in &self.edge_vertices[e] {
                for &f in &self.vertex_edges[v] {
                    if f == e {
                        continue;
                    }
                    if domains[f] & bit(c) != 0 {
                        domains[f] &= !bit(c);
                        match domains[f].count_ones() {
                            0 => return false,
                            1 => pending.push(f),
                            _ => {}
                        }
                    } else if domains[f] == bit(c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Visits proper colorings in search order until `visit` returns false.
    /// Returns false iff stopped early.
    fn run<F: FnMut(&[Color]) -> bool>(&self, visit: &mut F) -> bool {
        self.run_from(vec![ALL; self.n_edges], visit)
    }

    fn run_from<F: FnMut(&[Color]) -> bool>(&self, mut domains: Vec<u8>, visit: &mut F) -> bool {
        let mut colors = vec![Trit::Zero; self.n_edges];
        self.dfs(0, &mut domains, &mut colors, visit)
    }

    fn dfs<F: FnMut(&[Color]) -> bool>(
        &self,
        depth: usize,
        domains: &mut Vec<u8>,
        colors: &mut Vec<Color>,
        visit: &mut F,
    ) -> bool {
        if depth == self.order.len() {
            for (e, &d) in domains.iter().enumerate() {
                colors[e] = single(d).expect("every edge is fixed at a leaf");
            }
            return visit(colors);
        }
        let e = self.order[depth];
        for c in self.values[e] {
            if domains[e] & bit(c) == 0 {
                continue;
            }
            let saved = domains.clone();
            if self.assign(domains, e, c) && !self.dfs(depth + 1, domains, colors, visit) {
                return false;
            }
            *domains = saved;
        }
        true
    }
}

/// Calls `visit` on every proper coloring, each exactly once.
pub fn for_each_coloring<F: FnMut(&EdgeColoring)>(web: &Web, mut visit: F) {
    let search = Search::new(web, false);
    search.run(&mut |colors: &[Color]| {
        visit(&EdgeColoring::new(colors.to_vec()));
        true
    });
}

/// Visits raw color slices; avoids an allocation per coloring.
pub(crate) fn for_each_color_slice<F: FnMut(&[Color])>(web: &Web, mut visit: F) {
    Search::new(web, false).run(&mut |colors: &[Color]| {
        visit(colors);
        true
    });
}

/// Like [`for_each_color_slice`], with edge `e` restricted to the colors in
/// the bit set `allowed[e]` (bit `c.index()` for color `c`).
pub(crate) fn for_each_restricted<F: FnMut(&[Color])>(web: &Web, allowed: Vec<u8>, mut visit: F) {
    Search::new(web, false).run_from(allowed, &mut |colors: &[Color]| {
        visit(colors);
        true
    });
}

pub(crate) fn color_bit(c: Color) -> u8 {
    bit(c)
}

/// Every proper edge coloring, in search order.
pub fn enumerate_colorings(web: &Web) -> Vec<EdgeColoring> {
    let mut out = Vec::new();
    for_each_coloring(web, |c| out.push(c.clone()));
    out
}

/// The proper coloring whose boundary word is lexicographically smallest.
pub fn minimal_coloring(web: &Web) -> Result<EdgeColoring> {
    web.require_valid()?;
    let search = Search::new(web, true);
    let mut found = None;
    search.run(&mut |colors: &[Color]| {
        found = Some(EdgeColoring::new(colors.to_vec()));
        false
    });
    found.ok_or(Error::NoColoring)
}

/// Compares two colorings of `web` by their boundary words.
pub fn compare_colorings(web: &Web, a: &EdgeColoring, b: &EdgeColoring) -> Result<Ordering> {
    if a.len() != web.n_edges() || b.len() != web.n_edges() {
        return Err(Error::ColoringMismatch);
    }
    Ok(a.boundary_word(web).compare(&b.boundary_word(web)))
}

fn label_color(l: crate::weightpath::SignState) -> Color {
    match l.sign {
        Sign::Plus => l.state,
        Sign::Minus => -l.state,
    }
}

/// The coloring read off a growth labeling: `+` edges take their state, `-`
/// edges its negative, and horizontal edges the color missing at their ends.
pub fn coloring_from_kk(web: &Web, labels: &[EdgeLabel]) -> Result<EdgeColoring> {
    if labels.len() != web.n_edges() {
        return Err(Error::LabelConflict(format!(
            "{} labels for {} edges",
            labels.len(),
            web.n_edges()
        )));
    }
    let mut colors: Vec<Option<Color>> = vec![None; web.n_edges()];
    for (e, label) in labels.iter().enumerate() {
        colors[e] = match *label {
            EdgeLabel::Single(l) => Some(label_color(l)),
            EdgeLabel::Cap(a, b) => {
                let (ca, cb) = (label_color(a), label_color(b));
                if ca != cb {
                    return Err(Error::LabelConflict(format!(
                        "cap edge {} has labels {a} and {b} of different colors",
                        e + 1
                    )));
                }
                Some(ca)
            }
            EdgeLabel::Horizontal => None,
        };
    }
    for (e, label) in labels.iter().enumerate() {
        if *label != EdgeLabel::Horizontal {
            continue;
        }
        let mut choice = None;
        for end in web.endpoints(e) {
            let VertexRef::Internal(k) = end else {
                return Err(Error::LabelConflict(format!("horizontal edge {} reaches the boundary", e + 1)));
            };
            let mut used = 0u8;
            for &h in &web.internal()[k].half_edges {
                let f = web.edge_of(h);
                if f != e {
                    let c = colors[f].ok_or_else(|| {
                        Error::LabelConflict(format!("two horizontal edges meet at vertex {}", web.internal()[k].id))
                    })?;
                    used |= bit(c);
                }
            }
            let c = single(ALL & !used).ok_or_else(|| {
                Error::LabelConflict(format!("no free color at vertex {}", web.internal()[k].id))
            })?;
            if choice.is_some_and(|x| x != c) {
                return Err(Error::LabelConflict(format!("horizontal edge {} is overdetermined", e + 1)));
            }
            choice = Some(c);
        }
        colors[e] = choice;
    }
    let coloring = EdgeColoring::new(colors.into_iter().map(|c| c.unwrap()).collect());
    if !coloring.is_proper(web) {
        return Err(Error::LabelConflict("labels do not give a proper coloring".into()));
    }
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::growth::grow;
    use crate::webgraph::fixtures::*;
    use crate::weightpath::SignStateString;
    use std::collections::HashSet;

    fn ss(s: &str) -> SignStateString {
        s.parse().unwrap()
    }

    /// Independent oracle: all 3^E assignments filtered by properness.
    fn brute_colorings(web: &Web) -> HashSet<EdgeColoring> {
        let e = web.n_edges();
        (0..3usize.pow(e as u32))
            .map(|mut code| {
                EdgeColoring::new(
                    (0..e)
                        .map(|_| {
                            let c = Trit::from_index(code % 3);
                            code /= 3;
                            c
                        })
                        .collect(),
                )
            })
            .filter(|c| c.is_proper(web))
            .collect()
    }

    #[test]
    fn coloring_counts() {
        assert_eq!(enumerate_colorings(&single_edge()).len(), 3);
        assert_eq!(enumerate_colorings(&h_web()).len(), 12);
        assert_eq!(enumerate_colorings(&tripod()).len(), 6);
        assert_eq!(enumerate_colorings(&Web::empty()).len(), 1);
    }

    #[test]
    fn enumeration_agrees_with_brute_force() {
        for s in crate::weightpath::dominant_strings_up_to(5) {
            let web = grow(&s).unwrap().web;
            let list = enumerate_colorings(&web);
            let set: HashSet<_> = list.iter().cloned().collect();
            assert_eq!(set.len(), list.len(), "duplicates for {s}");
            assert!(list.iter().all(|c| c.is_proper(&web)));
            assert_eq!(set, brute_colorings(&web), "{s}");
        }
    }

    #[test]
    fn minimal_colorings() {
        let m = minimal_coloring(&single_edge()).unwrap();
        assert_eq!(m.colors(), &[Trit::Plus]);
        let h = h_web();
        let m = minimal_coloring(&h).unwrap();
        let word: Vec<i8> = m.boundary_word(&h).0.iter().map(|(c, _)| c.value()).collect();
        assert_eq!(word, vec![1, -1, 1, -1]);
    }

    #[test]
    fn kk_coloring_of_h_web() {
        let g = grow(&ss("+1,-1,--1,+-1")).unwrap();
        let c = coloring_from_kk(&g.web, &g.labels).unwrap();
        let word: Vec<i8> = c.boundary_word(&g.web).0.iter().map(|(c, _)| c.value()).collect();
        assert_eq!(word, vec![1, -1, 1, -1]);
        // the edge between the two internal vertices gets 0
        let inner = (0..g.web.n_edges())
            .find(|&e| g.web.endpoints(e).iter().all(|v| !v.is_boundary()))
            .unwrap();
        assert_eq!(c.color(inner), Trit::Zero);
    }

    #[test]
    fn single_edge_kk_coloring() {
        let g = grow(&ss("+1,--1")).unwrap();
        assert!(matches!(g.labels[0], EdgeLabel::Cap(..)));
        let c = coloring_from_kk(&g.web, &g.labels).unwrap();
        assert_eq!(c.colors(), &[Trit::Plus]);
    }

    #[test]
    fn boundary_word_order() {
        use VertexColor::{Black as B, White as W};
        let w = |v: &[(i64, VertexColor)]| {
            BoundaryWord(v.iter().map(|&(c, vc)| (Trit::from_value(c).unwrap(), vc)).collect())
        };
        let kk = w(&[(1, B), (1, B), (0, B), (-1, W), (0, B), (-1, B), (0, W), (-1, B), (1, W)]);
        let other = w(&[(1, B), (1, B), (-1, B), (-1, W), (0, B), (-1, B), (0, W), (0, B), (1, W)]);
        assert_eq!(kk.compare(&other), Ordering::Less);
        assert_eq!(other.compare(&kk), Ordering::Greater);
        assert_eq!(kk.compare(&kk), Ordering::Equal);
    }

    #[test]
    fn interior_differences_compare_equal() {
        // two H-web colorings with the same boundary word cannot exist, so
        // use a web with an interior cycle: a nine-vertex web
        let web = grow(&ss("+1,+1,+0,-1,+0,+-1,-0,+-1,--1")).unwrap().web;
        let all = enumerate_colorings(&web);
        let mut by_word: std::collections::HashMap<Vec<(Trit, VertexColor)>, Vec<&EdgeColoring>> =
            Default::default();
        for c in &all {
            by_word.entry(c.boundary_word(&web).0).or_default().push(c);
        }
        let (a, b) = by_word
            .values()
            .find(|v| v.len() > 1)
            .map(|v| (v[0], v[1]))
            .expect("some boundary word extends in two ways");
        assert_ne!(a, b);
        assert_eq!(compare_colorings(&web, a, b).unwrap(), Ordering::Equal);
        assert_eq!(compare_colorings(&web, a, a).unwrap(), Ordering::Equal);
        assert!(matches!(
            compare_colorings(&web, a, &EdgeColoring::new(vec![])),
            Err(Error::ColoringMismatch)
        ));
    }

    #[test]
    fn conflicting_labels_are_rejected() {
        let g = grow(&ss("+1,--1")).unwrap();
        let bad = vec![EdgeLabel::Cap(
            "+1".parse().unwrap(),
            "--1".parse::<crate::weightpath::SignState>().map(|mut x| {
                x.state = Trit::Zero;
                x
            }).unwrap(),
        )];
        assert!(matches!(coloring_from_kk(&g.web, &bad), Err(Error::LabelConflict(_))));
    }
}
