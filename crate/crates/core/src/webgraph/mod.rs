//! Webs as combinatorial maps in a disk.
//!
//! A [`Web`] stores its boundary vertices in clockwise order starting from
//! vertex 1, its internal vertices with their incident half-edges in
//! counterclockwise order, and its edges as pairs of half-edges. The
//! half-edges of a boundary vertex are listed in boundary order: the first one
//! is nearest to the previous boundary vertex. Isotopy classes of disk
//! embeddings with a fixed boundary are exactly these rotation systems, so no
//! coordinates are stored.

mod canonical;
mod format;
mod surgery;
mod validate;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::weightpath::Sign;

pub use canonical::CanonicalForm;
pub use validate::Violation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexColor {
    Black,
    White,
}

impl VertexColor {
    pub fn opposite(self) -> VertexColor {
        match self {
            VertexColor::Black => VertexColor::White,
            VertexColor::White => VertexColor::Black,
        }
    }

    /// Black boundary vertices carry `+`, white ones `-`.
    pub fn sign(self) -> Sign {
        match self {
            VertexColor::Black => Sign::Plus,
            VertexColor::White => Sign::Minus,
        }
    }

    pub fn of_sign(sign: Sign) -> VertexColor {
        match sign {
            Sign::Plus => VertexColor::Black,
            Sign::Minus => VertexColor::White,
        }
    }

    pub fn letter(self) -> char {
        match self {
            VertexColor::Black => 'B',
            VertexColor::White => 'W',
        }
    }

    pub fn from_letter(c: char) -> Option<VertexColor> {
        match c {
            'B' | 'b' | '•' | '+' => Some(VertexColor::Black),
            'W' | 'w' | '◦' | '∘' | '-' => Some(VertexColor::White),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfEdge(pub u32);

/// Position of a vertex: `Boundary(k)` is boundary vertex `k + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexRef {
    Boundary(usize),
    Internal(usize),
}

impl VertexRef {
    pub fn is_boundary(self) -> bool {
        matches!(self, VertexRef::Boundary(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: u32,
    pub color: VertexColor,
    pub half_edges: Vec<HalfEdge>,
}

impl Vertex {
    pub fn degree(&self) -> usize {
        self.half_edges.len()
    }
}

/// Where a half-edge lives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Site {
    pub vertex: VertexRef,
    /// Index in the vertex's half-edge list.
    pub slot: usize,
    pub edge: usize,
    /// Which end of the edge (0 or 1).
    pub end: usize,
}

#[derive(Clone, Debug)]
pub struct Web {
    boundary: Vec<Vertex>,
    internal: Vec<Vertex>,
    edges: Vec<[HalfEdge; 2]>,
    sites: HashMap<HalfEdge, Site>,
}

impl PartialEq for Web {
    fn eq(&self, other: &Self) -> bool {
        self.boundary == other.boundary
            && self.internal == other.internal
            && self.edges == other.edges
    }
}

impl Eq for Web {}

impl Web {
    /// Assembles a web from raw tables. Boundary vertex ids become their
    /// 1-based positions. Fails only if the tables are not a graph: unknown or
    /// repeated half-edge ids, or duplicate internal ids. Trivalence,
    /// bipartiteness and the other web conditions are checked by
    /// [`Web::validate`].
    pub fn new(
        boundary: Vec<(VertexColor, Vec<HalfEdge>)>,
        internal: Vec<Vertex>,
        edges: Vec<[HalfEdge; 2]>,
    ) -> Result<Web> {
        let boundary: Vec<Vertex> = boundary
            .into_iter()
            .enumerate()
            .map(|(k, (color, half_edges))| Vertex {
                id: k as u32 + 1,
                color,
                half_edges,
            })
            .collect();

        let mut ids = std::collections::HashSet::new();
        for v in &internal {
            if !ids.insert(v.id) {
                return Err(Error::Structure(format!("duplicate internal vertex id {}", v.id)));
            }
        }

        let mut at_vertex: HashMap<HalfEdge, (VertexRef, usize)> = HashMap::new();
        let all = boundary
            .iter()
            .enumerate()
            .map(|(k, v)| (VertexRef::Boundary(k), v))
            .chain(internal.iter().enumerate().map(|(k, v)| (VertexRef::Internal(k), v)));
        for (r, v) in all {
            for (slot, &h) in v.half_edges.iter().enumerate() {
                if at_vertex.insert(h, (r, slot)).is_some() {
                    return Err(Error::Structure(format!("half-edge {} used at two vertices", h.0)));
                }
            }
        }

        let mut sites = HashMap::with_capacity(at_vertex.len());
        for (e, pair) in edges.iter().enumerate() {
            for (end, &h) in pair.iter().enumerate() {
                let &(vertex, slot) = at_vertex
                    .get(&h)
                    .ok_or_else(|| Error::Structure(format!("half-edge {} has no vertex", h.0)))?;
                if sites
                    .insert(h, Site { vertex, slot, edge: e, end })
                    .is_some()
                {
                    return Err(Error::Structure(format!("half-edge {} used by two edges", h.0)));
                }
            }
        }
        if sites.len() != at_vertex.len() {
            let dangling = at_vertex.keys().find(|h| !sites.contains_key(h)).unwrap();
            return Err(Error::Structure(format!("half-edge {} has no edge", dangling.0)));
        }

        Ok(Web {
            boundary,
            internal,
            edges,
            sites,
        })
    }

    /// The web with no vertices at all; its invariant is 1.
    pub fn empty() -> Web {
        Web::new(Vec::new(), Vec::new(), Vec::new()).unwrap()
    }

    pub fn boundary(&self) -> &[Vertex] {
        &self.boundary
    }

    pub fn internal(&self) -> &[Vertex] {
        &self.internal
    }

    pub fn edges(&self) -> &[[HalfEdge; 2]] {
        &self.edges
    }

    pub fn n_boundary(&self) -> usize {
        self.boundary.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex(&self, r: VertexRef) -> &Vertex {
        match r {
            VertexRef::Boundary(k) => &self.boundary[k],
            VertexRef::Internal(k) => &self.internal[k],
        }
    }

    pub fn vertex_refs(&self) -> impl Iterator<Item = VertexRef> {
        (0..self.boundary.len())
            .map(VertexRef::Boundary)
            .chain((0..self.internal.len()).map(VertexRef::Internal))
    }

    pub fn site(&self, h: HalfEdge) -> Site {
        self.sites[&h]
    }

    pub fn twin(&self, h: HalfEdge) -> HalfEdge {
        let s = self.sites[&h];
        self.edges[s.edge][1 - s.end]
    }

    /// Vertex at the far end of half-edge `h`.
    pub fn across(&self, h: HalfEdge) -> VertexRef {
        self.sites[&self.twin(h)].vertex
    }

    pub fn edge_of(&self, h: HalfEdge) -> usize {
        self.sites[&h].edge
    }

    pub fn endpoints(&self, edge: usize) -> [VertexRef; 2] {
        let [a, b] = self.edges[edge];
        [self.sites[&a].vertex, self.sites[&b].vertex]
    }

    pub fn color(&self, r: VertexRef) -> VertexColor {
        self.vertex(r).color
    }

    pub fn signature(&self) -> Signature {
        Signature(self.boundary.iter().map(|v| v.color).collect())
    }

    pub fn multidegree(&self) -> Multidegree {
        Multidegree(self.boundary.iter().map(Vertex::degree).collect())
    }

    /// True iff every boundary vertex has degree exactly 1.
    pub fn is_unclasped(&self) -> bool {
        self.boundary.iter().all(|v| v.degree() == 1)
    }

    pub(crate) fn require_unclasped(&self) -> Result<()> {
        match self.boundary.iter().position(|v| v.degree() != 1) {
            None => Ok(()),
            Some(k) => Err(Error::NotUnclasped {
                vertex: k + 1,
                degree: self.boundary[k].degree(),
            }),
        }
    }

    /// Boundary half-edges in reading order: `(position, half-edge)`, boundary
    /// vertex 1 first and each vertex's half-edges in their listed order.
    pub fn boundary_half_edges(&self) -> impl Iterator<Item = (usize, HalfEdge)> + '_ {
        self.boundary
            .iter()
            .enumerate()
            .flat_map(|(k, v)| v.half_edges.iter().map(move |&h| (k, h)))
    }

    pub fn validate(&self) -> Vec<Violation> {
        validate::violations(self)
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidWeb(v))
        }
    }

    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        self.require_valid()?;
        canonical::encode(self)
    }

    pub fn unclasp(&self) -> Result<Web> {
        self.require_valid()?;
        Ok(surgery::unclasp(self))
    }

    pub fn clasp(&self, degrees: &Multidegree) -> Result<Web> {
        surgery::clasp(self, degrees, None)
    }

    /// Like [`Web::clasp`], but zero entries of `degrees` are allowed and
    /// become isolated boundary vertices colored from `signature`.
    pub fn clasp_with_signature(&self, degrees: &Multidegree, signature: &Signature) -> Result<Web> {
        surgery::clasp(self, degrees, Some(signature))
    }

    pub fn trim(
        &self,
        labeling: &crate::weightpath::SignStateString,
    ) -> Result<(Web, crate::weightpath::SignStateString)> {
        surgery::trim(self, labeling)
    }

    /// Serializes to the line-oriented web file format.
    pub fn to_text(&self) -> String {
        format::write(self)
    }

    pub fn parse(text: &str) -> std::result::Result<Web, ParseError> {
        format::parse(text)
    }
}

impl fmt::Display for Web {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Web {
    type Err = ParseError;
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        Web::parse(s)
    }
}

/// Incremental construction; half-edges are appended to a vertex's rotation
/// in the order of the `connect` calls that touch it.
#[derive(Default, Debug)]
pub struct WebBuilder {
    boundary: Vec<(VertexColor, Vec<HalfEdge>)>,
    internal: Vec<(VertexColor, Vec<HalfEdge>)>,
    edges: Vec<[HalfEdge; 2]>,
    next_half_edge: u32,
}

impl WebBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_boundary(&mut self, color: VertexColor) -> VertexRef {
        self.boundary.push((color, Vec::new()));
        VertexRef::Boundary(self.boundary.len() - 1)
    }

    pub fn add_internal(&mut self, color: VertexColor) -> VertexRef {
        self.internal.push((color, Vec::new()));
        VertexRef::Internal(self.internal.len() - 1)
    }

    fn list(&mut self, r: VertexRef) -> &mut Vec<HalfEdge> {
        match r {
            VertexRef::Boundary(k) => &mut self.boundary[k].1,
            VertexRef::Internal(k) => &mut self.internal[k].1,
        }
    }

    /// Adds an edge and returns its index.
    pub fn connect(&mut self, a: VertexRef, b: VertexRef) -> usize {
        let ha = HalfEdge(self.next_half_edge + 1);
        let hb = HalfEdge(self.next_half_edge + 2);
        self.next_half_edge += 2;
        self.list(a).push(ha);
        self.list(b).push(hb);
        self.edges.push([ha, hb]);
        self.edges.len() - 1
    }

    /// Internal vertices get ids `n + 1, n + 2, ...` where `n` is the boundary
    /// size.
    pub fn build(self) -> Result<Web> {
        let n = self.boundary.len() as u32;
        let internal = self
            .internal
            .into_iter()
            .enumerate()
            .map(|(k, (color, half_edges))| Vertex {
                id: n + 1 + k as u32,
                color,
                half_edges,
            })
            .collect();
        Web::new(self.boundary, internal, self.edges)
    }
}

/// Boundary colors read from vertex 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(pub Vec<VertexColor>);

impl Signature {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn colors(&self) -> &[VertexColor] {
        &self.0
    }

    /// `(a, b)`: number of white and black entries.
    pub fn kind(&self) -> (usize, usize) {
        let white = self.0.iter().filter(|&&c| c == VertexColor::White).count();
        (white, self.0.len() - white)
    }

    /// Equality up to cyclic rotation.
    pub fn is_rotation_of(&self, other: &Signature) -> bool {
        let n = self.len();
        if n != other.len() {
            return false;
        }
        n == 0 || (0..n).any(|r| (0..n).all(|k| self.0[(k + r) % n] == other.0[k]))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|c| write!(f, "{}", c.letter()))
    }
}

impl FromStr for Signature {
    type Err = ParseError;
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| {
                VertexColor::from_letter(c)
                    .ok_or_else(|| ParseError::new(format!("bad signature letter `{c}`")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Signature)
    }
}

/// Boundary vertex degrees read from vertex 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidegree(pub Vec<usize>);

impl Multidegree {
    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Multidegree {
    type Err = ParseError;
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Multidegree(Vec::new()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| ParseError::new(format!("bad degree `{t}`")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Multidegree)
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn builder_and_lookups() {
        let w = h_web();
        assert_eq!(w.n_boundary(), 4);
        assert_eq!(w.internal().len(), 2);
        assert_eq!(w.n_edges(), 5);
        assert_eq!(w.signature().to_string(), "BWWB");
        assert_eq!(w.multidegree().to_string(), "1,1,1,1");
        for (e, &[a, b]) in w.edges().iter().enumerate() {
            assert_eq!(w.twin(a), b);
            assert_eq!(w.twin(b), a);
            assert_eq!(w.edge_of(a), e);
        }
        assert_eq!(w.internal()[0].id, 5);
    }

    #[test]
    fn structural_errors() {
        let h = |k| HalfEdge(k);
        let dup = Web::new(
            vec![(VertexColor::Black, vec![h(1)]), (VertexColor::White, vec![h(1)])],
            vec![],
            vec![[h(1), h(1)]],
        );
        assert!(matches!(dup, Err(Error::Structure(_))));
        let missing = Web::new(vec![(VertexColor::Black, vec![h(1)])], vec![], vec![]);
        assert!(matches!(missing, Err(Error::Structure(_))));
    }

    #[test]
    fn signature_text_and_rotation() {
        let s: Signature = "BWWB".parse().unwrap();
        assert_eq!(s.kind(), (2, 2));
        assert!(s.is_rotation_of(&"WWBB".parse().unwrap()));
        assert!(!s.is_rotation_of(&"WBWB".parse().unwrap()));
        assert_eq!("•◦◦•".parse::<Signature>().unwrap(), s);
        assert!("BX".parse::<Signature>().is_err());
    }
}
