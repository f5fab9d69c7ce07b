//! Sign/state strings and their paths in the SL3 weight lattice.
//!
//! Weights are stored in fundamental-weight coordinates, so the dominant
//! chamber is exactly the set of points with both coordinates nonnegative.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::error::ParseError;

/// A value in `{-1, 0, 1}`. Used both for states and for edge colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Trit {
    Minus,
    Zero,
    Plus,
}

/// State of a boundary edge in a sign/state string.
pub type State = Trit;

impl Trit {
    pub const ALL: [Trit; 3] = [Trit::Minus, Trit::Zero, Trit::Plus];

    pub fn value(self) -> i8 {
        match self {
            Trit::Minus => -1,
            Trit::Zero => 0,
            Trit::Plus => 1,
        }
    }

    pub fn from_value(v: i64) -> Option<Trit> {
        match v {
            -1 => Some(Trit::Minus),
            0 => Some(Trit::Zero),
            1 => Some(Trit::Plus),
            _ => None,
        }
    }

    /// Index in `0..3` with `-1 -> 0`, `0 -> 1`, `1 -> 2`.
    pub fn index(self) -> usize {
        (self.value() + 1) as usize
    }

    pub fn from_index(i: usize) -> Trit {
        Trit::ALL[i]
    }
}

impl Neg for Trit {
    type Output = Trit;
    fn neg(self) -> Trit {
        match self {
            Trit::Minus => Trit::Plus,
            Trit::Zero => Trit::Zero,
            Trit::Plus => Trit::Minus,
        }
    }
}

impl fmt::Display for Trit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// `Plus` labels a black boundary vertex (a vector argument), `Minus` a white
/// one (a covector argument).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// One entry of a sign/state string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignState {
    pub sign: Sign,
    pub state: State,
}

impl SignState {
    pub const fn new(sign: Sign, state: State) -> Self {
        SignState { sign, state }
    }

    pub fn weight(self) -> WeightPoint {
        weight_of(self.sign, self.state)
    }
}

impl fmt::Display for SignState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.sign.symbol(), self.state.value())
    }
}

impl FromStr for SignState {
    type Err = ParseError;

    fn from_str(token: &str) -> Result<Self, ParseError> {
        let token = token.trim();
        let mut chars = token.chars();
        let sign = match chars.next() {
            Some('+') => Sign::Plus,
            Some('-') => Sign::Minus,
            _ => return Err(ParseError::new(format!("bad sign in token `{token}`"))),
        };
        let state = chars
            .as_str()
            .parse::<i64>()
            .ok()
            .and_then(Trit::from_value)
            .ok_or_else(|| ParseError::new(format!("bad state in token `{token}`")))?;
        Ok(SignState::new(sign, state))
    }
}

/// A point of the weight lattice in fundamental-weight coordinates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeightPoint {
    pub c1: i64,
    pub c2: i64,
}

impl WeightPoint {
    pub const ORIGIN: WeightPoint = WeightPoint { c1: 0, c2: 0 };

    pub const fn new(c1: i64, c2: i64) -> Self {
        WeightPoint { c1, c2 }
    }

    pub fn is_dominant(self) -> bool {
        self.c1 >= 0 && self.c2 >= 0
    }
}

impl Add for WeightPoint {
    type Output = WeightPoint;
    fn add(self, o: WeightPoint) -> WeightPoint {
        WeightPoint::new(self.c1 + o.c1, self.c2 + o.c2)
    }
}

impl Sub for WeightPoint {
    type Output = WeightPoint;
    fn sub(self, o: WeightPoint) -> WeightPoint {
        WeightPoint::new(self.c1 - o.c1, self.c2 - o.c2)
    }
}

impl Neg for WeightPoint {
    type Output = WeightPoint;
    fn neg(self) -> WeightPoint {
        WeightPoint::new(-self.c1, -self.c2)
    }
}

/// Weight of a single `(sign, state)` pair.
///
/// `(+,1)`, `(+,0)`, `(+,-1)` are the three weights of the standard
/// representation; `(-,j)` is the negative of `(+,-j)`.
pub fn weight_of(sign: Sign, state: State) -> WeightPoint {
    match sign {
        Sign::Plus => match state {
            Trit::Plus => WeightPoint::new(1, 0),
            Trit::Zero => WeightPoint::new(-1, 1),
            Trit::Minus => WeightPoint::new(0, -1),
        },
        Sign::Minus => -weight_of(Sign::Plus, -state),
    }
}

/// A finite sequence of `(sign, state)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignStateString(pub Vec<SignState>);

impl SignStateString {
    pub fn new(entries: Vec<SignState>) -> Self {
        SignStateString(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[SignState] {
        &self.0
    }

    pub fn signs(&self) -> impl Iterator<Item = Sign> + '_ {
        self.0.iter().map(|e| e.sign)
    }

    pub fn states(&self) -> impl Iterator<Item = State> + '_ {
        self.0.iter().map(|e| e.state)
    }

    pub fn path(&self) -> Vec<WeightPoint> {
        path_of(self)
    }

    pub fn is_dominant(&self) -> bool {
        is_dominant(self)
    }

    pub fn concat(&self, other: &SignStateString) -> SignStateString {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SignStateString(v)
    }
}

impl From<Vec<SignState>> for SignStateString {
    fn from(v: Vec<SignState>) -> Self {
        SignStateString(v)
    }
}

impl fmt::Display for SignStateString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for SignStateString {
    type Err = ParseError;

    /// Parses the comma separated encoding `+1,+0,--1,...`.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SignStateString::default());
        }
        s.split(',')
            .map(str::parse)
            .collect::<Result<Vec<_>, _>>()
            .map(SignStateString)
    }
}

/// The lattice path `π_0, ..., π_n` of a sign/state string, starting at the
/// origin.
pub fn path_of(s: &SignStateString) -> Vec<WeightPoint> {
    let mut path = Vec::with_capacity(s.len() + 1);
    let mut at = WeightPoint::ORIGIN;
    path.push(at);
    for e in s.entries() {
        at = at + e.weight();
        path.push(at);
    }
    path
}

/// True iff the path stays in the dominant chamber and closes at the origin.
pub fn is_dominant(s: &SignStateString) -> bool {
    let path = path_of(s);
    path.iter().all(|p| p.is_dominant()) && path.last() == Some(&WeightPoint::ORIGIN)
}

const ENTRY_ORDER: [SignState; 6] = [
    SignState::new(Sign::Plus, Trit::Plus),
    SignState::new(Sign::Plus, Trit::Zero),
    SignState::new(Sign::Plus, Trit::Minus),
    SignState::new(Sign::Minus, Trit::Plus),
    SignState::new(Sign::Minus, Trit::Zero),
    SignState::new(Sign::Minus, Trit::Minus),
];

/// All dominant strings of exactly `len` entries, in a fixed deterministic
/// order (depth first, entries tried as `+1,+0,+-1,-1,-0,--1`).
pub fn dominant_strings(len: usize) -> Vec<SignStateString> {
    fn go(len: usize, at: WeightPoint, cur: &mut Vec<SignState>, out: &mut Vec<SignStateString>) {
        let remaining = len - cur.len();
        if remaining == 0 {
            if at == WeightPoint::ORIGIN {
                out.push(SignStateString(cur.clone()));
            }
            return;
        }
        for e in ENTRY_ORDER {
            let next = at + e.weight();
            // each step lowers c1 + c2 by at most one
            if next.is_dominant() && next.c1 + next.c2 < remaining as i64 {
                cur.push(e);
                go(len, next, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(len, WeightPoint::ORIGIN, &mut Vec::with_capacity(len), &mut out);
    out
}

/// All nonempty dominant strings of length at most `max_len`, shortest first.
pub fn dominant_strings_up_to(max_len: usize) -> Vec<SignStateString> {
    (1..=max_len).flat_map(dominant_strings).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ss(s: &str) -> SignStateString {
        s.parse().unwrap()
    }

    const NINE: &str = "+1,+1,+0,-1,+0,+-1,-0,+-1,--1";

    #[test]
    fn weights_of_all_pairs() {
        assert_eq!(weight_of(Sign::Plus, Trit::Plus), WeightPoint::new(1, 0));
        assert_eq!(weight_of(Sign::Plus, Trit::Zero), WeightPoint::new(-1, 1));
        assert_eq!(weight_of(Sign::Plus, Trit::Minus), WeightPoint::new(0, -1));
        assert_eq!(weight_of(Sign::Minus, Trit::Plus), WeightPoint::new(0, 1));
        assert_eq!(weight_of(Sign::Minus, Trit::Zero), WeightPoint::new(1, -1));
        assert_eq!(weight_of(Sign::Minus, Trit::Minus), WeightPoint::new(-1, 0));
        let total = ENTRY_ORDER
            .iter()
            .fold(WeightPoint::ORIGIN, |acc, e| acc + e.weight());
        assert_eq!(total, WeightPoint::ORIGIN);
    }

    #[test]
    fn paths() {
        assert_eq!(path_of(&SignStateString::default()), vec![WeightPoint::ORIGIN]);
        assert_eq!(
            path_of(&ss("+1,--1")),
            vec![WeightPoint::ORIGIN, WeightPoint::new(1, 0), WeightPoint::ORIGIN]
        );
        let expected: Vec<WeightPoint> = [
            (0, 0),
            (1, 0),
            (2, 0),
            (1, 1),
            (1, 2),
            (0, 3),
            (0, 2),
            (1, 1),
            (1, 0),
            (0, 0),
        ]
        .iter()
        .map(|&(a, b)| WeightPoint::new(a, b))
        .collect();
        assert_eq!(path_of(&ss(NINE)), expected);
    }

    #[test]
    fn dominance() {
        assert!(is_dominant(&ss(NINE)));
        assert!(!is_dominant(&ss("+-1")));
        assert!(is_dominant(&ss("+1,-1,--1,+-1")));
        assert!(is_dominant(&SignStateString::default()));
    }

    #[test]
    fn text_encoding() {
        let s = ss(" +1, +0 ,--1,-0,+-1,-1");
        assert_eq!(s.to_string(), "+1,+0,--1,-0,+-1,-1");
        assert!("+2".parse::<SignStateString>().is_err());
        assert!("*1".parse::<SignStateString>().is_err());
        assert!("+1,".parse::<SignStateString>().is_err());
    }

    /// Brute force over all 6^n strings.
    fn brute_dominant(len: usize) -> Vec<SignStateString> {
        let mut out = Vec::new();
        let total = 6usize.pow(len as u32);
        for mut code in 0..total {
            let mut v = Vec::with_capacity(len);
            for _ in 0..len {
                v.push(ENTRY_ORDER[code % 6]);
                code /= 6;
            }
            let s = SignStateString(v);
            if is_dominant(&s) {
                out.push(s);
            }
        }
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for len in 0..=6 {
            let mut fast = dominant_strings(len);
            let mut slow = brute_dominant(len);
            fast.sort();
            slow.sort();
            assert_eq!(fast, slow, "length {len}");
        }
        let two: Vec<String> = dominant_strings(2).iter().map(|s| s.to_string()).collect();
        assert_eq!(two, vec!["+1,--1", "-1,+-1"]);
    }

    #[test]
    fn dominant_strings_start_at_one_and_end_at_minus_one() {
        for len in 1..=8 {
            for s in brute_or_fast(len) {
                assert_eq!(s.entries()[0].state, Trit::Plus, "{s}");
                assert_eq!(s.entries()[len - 1].state, Trit::Minus, "{s}");
            }
        }
    }

    fn brute_or_fast(len: usize) -> Vec<SignStateString> {
        if len <= 5 {
            brute_dominant(len)
        } else {
            dominant_strings(len)
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn entry() -> impl Strategy<Value = SignState> {
            (0usize..6).prop_map(|i| ENTRY_ORDER[i])
        }

        fn string(max: usize) -> impl Strategy<Value = SignStateString> {
            prop::collection::vec(entry(), 0..max).prop_map(SignStateString)
        }

        proptest! {
            #[test]
            fn path_length_and_origin(s in string(12)) {
                let p = path_of(&s);
                prop_assert_eq!(p.len(), s.len() + 1);
                prop_assert_eq!(p[0], WeightPoint::ORIGIN);
            }

            #[test]
            fn concatenation_translates(s in string(8), t in string(8)) {
                let ps = path_of(&s);
                let pt = path_of(&t);
                let end = *ps.last().unwrap();
                let mut expected = ps.clone();
                expected.extend(pt.iter().skip(1).map(|&q| q + end));
                prop_assert_eq!(path_of(&s.concat(&t)), expected);
            }

            #[test]
            fn text_round_trip(s in string(10)) {
                prop_assert_eq!(s.to_string().parse::<SignStateString>().unwrap(), s);
            }
        }
    }
}
