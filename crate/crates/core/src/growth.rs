//! The KK growth algorithm.
//!
//! A dominant sign/state string is laid out left to right along the top of
//! the disk with one dangling edge per entry. Local rules rewrite adjacent
//! pairs of dangling edges until none remain:
//!
//! | rule | signs    | states in | states out |
//! |------|----------|-----------|------------|
//! | H    | opposite | `1, 0`    | `0, 1`     |
//! | H    | opposite | `0, 0`    | `-1, 1`    |
//! | H    | opposite | `0, -1`   | `-1, 0`    |
//! | cap  | opposite | `1, -1`   | none       |
//! | Y    | same     | `1, 0`    | `1`        |
//! | Y    | same     | `0, -1`   | `-1`       |
//! | Y    | same     | `1, -1`   | `0`        |
//!
//! H rules swap the two signs; Y rules emit one edge of the opposite sign.
//! Every rule conserves total weight.
//!
//! With the boundary on top and the web growing downward, the vertices a rule
//! creates have these counterclockwise rotations: H left `(horizontal, upper,
//! lower)`, H right `(upper, horizontal, lower)`, Y `(upper right, upper left,
//! lower)`.

use std::fmt;

use rand::Rng;

use crate::coloring;
use crate::error::{Error, Result};
use crate::webgraph::{HalfEdge, Vertex, VertexColor, Web};
use crate::weightpath::{SignState, SignStateString, Trit, WeightPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GrowthRule {
    /// Opposite signs, states `(1, 0)`.
    H10,
    /// Opposite signs, states `(0, 0)`.
    H00,
    /// Opposite signs, states `(0, -1)`.
    H0Minus,
    /// Opposite signs, states `(1, -1)`; joins the two edges.
    Cap,
    /// Same signs, states `(1, 0)`.
    Y10,
    /// Same signs, states `(0, -1)`.
    Y0Minus,
    /// Same signs, states `(1, -1)`.
    Y1Minus,
}

use Trit::{Minus, Plus, Zero};

impl GrowthRule {
    /// Preference order when several rules could be chosen.
    pub const ALL: [GrowthRule; 7] = [
        GrowthRule::H10,
        GrowthRule::H00,
        GrowthRule::H0Minus,
        GrowthRule::Cap,
        GrowthRule::Y10,
        GrowthRule::Y0Minus,
        GrowthRule::Y1Minus,
    ];

    fn pattern(self) -> (bool, Trit, Trit) {
        match self {
            GrowthRule::H10 => (false, Plus, Zero),
            GrowthRule::H00 => (false, Zero, Zero),
            GrowthRule::H0Minus => (false, Zero, Minus),
            GrowthRule::Cap => (false, Plus, Minus),
            GrowthRule::Y10 => (true, Plus, Zero),
            GrowthRule::Y0Minus => (true, Zero, Minus),
            GrowthRule::Y1Minus => (true, Plus, Minus),
        }
    }

    pub fn is_h(self) -> bool {
        matches!(self, GrowthRule::H10 | GrowthRule::H00 | GrowthRule::H0Minus)
    }

    pub fn is_y(self) -> bool {
        matches!(self, GrowthRule::Y10 | GrowthRule::Y0Minus | GrowthRule::Y1Minus)
    }

    pub fn matches(self, left: SignState, right: SignState) -> bool {
        let (same, a, b) = self.pattern();
        (left.sign == right.sign) == same && left.state == a && right.state == b
    }

    /// The rule for an adjacent pair, if any. At most one rule matches a
    /// given pair.
    pub fn for_pair(left: SignState, right: SignState) -> Option<GrowthRule> {
        GrowthRule::ALL.into_iter().find(|r| r.matches(left, right))
    }

    /// Labels of the dangling edges the rule produces, left to right.
    pub fn output(self, left: SignState, right: SignState) -> Vec<SignState> {
        debug_assert!(self.matches(left, right));
        let flipped = left.sign.flip();
        match self {
            GrowthRule::H10 => vec![SignState::new(right.sign, Zero), SignState::new(left.sign, Plus)],
            GrowthRule::H00 => vec![SignState::new(right.sign, Minus), SignState::new(left.sign, Plus)],
            GrowthRule::H0Minus => vec![SignState::new(right.sign, Minus), SignState::new(left.sign, Zero)],
            GrowthRule::Cap => vec![],
            GrowthRule::Y10 => vec![SignState::new(flipped, Plus)],
            GrowthRule::Y0Minus => vec![SignState::new(flipped, Minus)],
            GrowthRule::Y1Minus => vec![SignState::new(flipped, Zero)],
        }
    }
}

impl fmt::Display for GrowthRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GrowthRule::H10 => "H(1,0)",
            GrowthRule::H00 => "H(0,0)",
            GrowthRule::H0Minus => "H(0,-1)",
            GrowthRule::Cap => "cap",
            GrowthRule::Y10 => "Y(1,0)",
            GrowthRule::Y0Minus => "Y(0,-1)",
            GrowthRule::Y1Minus => "Y(1,-1)",
        };
        f.write_str(s)
    }
}

/// Unprocessed dangling edges, left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthFrontier {
    pub dangling: Vec<(HalfEdge, SignState)>,
}

impl GrowthFrontier {
    /// One dangling edge per entry; entry `k` hangs from half-edge `k + 1`.
    pub fn from_string(s: &SignStateString) -> Self {
        GrowthFrontier {
            dangling: s
                .entries()
                .iter()
                .enumerate()
                .map(|(k, &e)| (HalfEdge(k as u32 + 1), e))
                .collect(),
        }
    }

    pub fn labels(&self) -> SignStateString {
        SignStateString(self.dangling.iter().map(|d| d.1).collect())
    }

    pub fn weight(&self) -> WeightPoint {
        self.dangling
            .iter()
            .fold(WeightPoint::ORIGIN, |acc, d| acc + d.1.weight())
    }

    pub fn is_empty(&self) -> bool {
        self.dangling.is_empty()
    }
}

/// Every `(position, rule)` that applies, where `position` is the index of
/// the left edge of the pair. Sorted by position.
pub fn applicable_rules(f: &GrowthFrontier) -> Vec<(usize, GrowthRule)> {
    f.dangling
        .windows(2)
        .enumerate()
        .filter_map(|(k, w)| GrowthRule::for_pair(w[0].1, w[1].1).map(|r| (k, r)))
        .collect()
}

/// Label of an edge as assigned during growth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeLabel {
    /// A non-horizontal edge with the label it was created with.
    Single(SignState),
    /// The horizontal edge of an H; unlabeled.
    Horizontal,
    /// Two edges joined by the cap rule, left and right labels.
    Cap(SignState, SignState),
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLabel::Single(l) => write!(f, "{l}"),
            EdgeLabel::Horizontal => f.write_str("h"),
            EdgeLabel::Cap(a, b) => write!(f, "cap {a} {b}"),
        }
    }
}

/// Result of growing a web: the web, one label per edge (indexed like
/// `web.edges()`) and the string it was grown from.
#[derive(Clone, Debug)]
pub struct Growth {
    pub web: Web,
    pub labels: Vec<EdgeLabel>,
    pub string: SignStateString,
    /// Rule applications used.
    pub steps: usize,
}

struct Grower {
    internal: Vec<Vertex>,
    edges: Vec<[HalfEdge; 2]>,
    labels: Vec<EdgeLabel>,
    next_half_edge: u32,
    next_id: u32,
}

impl Grower {
    fn fresh(&mut self) -> HalfEdge {
        self.next_half_edge += 1;
        HalfEdge(self.next_half_edge)
    }

    /// New internal vertex; its half-edges in counterclockwise order.
    fn vertex(&mut self, color: VertexColor) -> [HalfEdge; 3] {
        let hs = [self.fresh(), self.fresh(), self.fresh()];
        self.internal.push(Vertex {
            id: self.next_id,
            color,
            half_edges: hs.to_vec(),
        });
        self.next_id += 1;
        hs
    }

    fn edge(&mut self, a: HalfEdge, b: HalfEdge, label: EdgeLabel) {
        self.edges.push([a, b]);
        self.labels.push(label);
    }

    fn apply(&mut self, f: &mut GrowthFrontier, pos: usize, rule: GrowthRule) {
        let (lh, l) = f.dangling[pos];
        let (rh, r) = f.dangling[pos + 1];
        let out = rule.output(l, r);
        let replacement = match rule {
            GrowthRule::Cap => {
                self.edge(lh, rh, EdgeLabel::Cap(l, r));
                vec![]
            }
            GrowthRule::Y10 | GrowthRule::Y0Minus | GrowthRule::Y1Minus => {
                let color = VertexColor::of_sign(l.sign).opposite();
                let [up_right, up_left, low] = self.vertex(color);
                self.edge(lh, up_left, EdgeLabel::Single(l));
                self.edge(rh, up_right, EdgeLabel::Single(r));
                vec![(low, out[0])]
            }
            GrowthRule::H10 | GrowthRule::H00 | GrowthRule::H0Minus => {
                let [p_side, p_up, p_low] = self.vertex(VertexColor::of_sign(l.sign).opposite());
                let [q_up, q_side, q_low] = self.vertex(VertexColor::of_sign(r.sign).opposite());
                self.edge(lh, p_up, EdgeLabel::Single(l));
                self.edge(rh, q_up, EdgeLabel::Single(r));
                self.edge(p_side, q_side, EdgeLabel::Horizontal);
                vec![(p_low, out[0]), (q_low, out[1])]
            }
        };
        f.dangling.splice(pos..pos + 2, replacement);
    }
}

/// Grows the web of a dominant string, always applying the leftmost
/// applicable rule.
pub fn grow(s: &SignStateString) -> Result<Growth> {
    grow_with(s, |_| 0)
}

/// Grows with random rule choices.
pub fn grow_random<R: Rng>(s: &SignStateString, rng: &mut R) -> Result<Growth> {
    grow_with(s, |rules| rng.gen_range(0..rules.len()))
}

/// Grows the web of a dominant string; `choose` picks an index into the
/// (nonempty) list of applicable rules at every step.
pub fn grow_with<F>(s: &SignStateString, mut choose: F) -> Result<Growth>
where
    F: FnMut(&[(usize, GrowthRule)]) -> usize,
{
    if !s.is_dominant() {
        return Err(Error::NotDominant(s.clone()));
    }
    let n = s.len();
    let mut g = Grower {
        internal: Vec::new(),
        edges: Vec::new(),
        labels: Vec::new(),
        next_half_edge: n as u32,
        next_id: n as u32 + 1,
    };
    let mut frontier = GrowthFrontier::from_string(s);
    let limit = (n * n).max(1);
    let mut steps = 0;
    while !frontier.is_empty() {
        let rules = applicable_rules(&frontier);
        if rules.is_empty() {
            return Err(Error::Stuck(frontier.labels()));
        }
        if steps == limit {
            return Err(Error::StepLimit(s.clone()));
        }
        let (pos, rule) = rules[choose(&rules).min(rules.len() - 1)];
        g.apply(&mut frontier, pos, rule);
        steps += 1;
        assert_eq!(frontier.weight(), WeightPoint::ORIGIN, "growth rule broke weight conservation");
    }
    let boundary = s
        .entries()
        .iter()
        .enumerate()
        .map(|(k, e)| (VertexColor::of_sign(e.sign), vec![HalfEdge(k as u32 + 1)]))
        .collect();
    let web = Web::new(boundary, g.internal, g.edges)?;
    Ok(Growth {
        web,
        labels: g.labels,
        string: s.clone(),
        steps,
    })
}

/// The dominant string that grows `web`: signs from the boundary colors,
/// states from the lexicographically minimal proper coloring (black state =
/// color, white state = -color).
pub fn kk_labeling(web: &Web) -> Result<SignStateString> {
    web.require_valid()?;
    web.require_unclasped()?;
    let coloring = coloring::minimal_coloring(web)?;
    let s = SignStateString(
        web.boundary_half_edges()
            .map(|(k, h)| {
                let color = web.boundary()[k].color;
                let c = coloring.color(web.edge_of(h));
                let state = match color {
                    VertexColor::Black => c,
                    VertexColor::White => -c,
                };
                SignState::new(color.sign(), state)
            })
            .collect(),
    );
    if !s.is_dominant() {
        return Err(Error::NotDominant(s));
    }
    Ok(s)
}
