//! Sparse polynomials with integer coefficients in the coordinates of
//! vectors (`x[c,i]`, at black vertices) and covectors (`y[i,c]`, at white
//! vertices), ordered by graded reverse lexicographic order.
//!
//! Variables are listed vertex by vertex; inside a black vertex
//! `x[-1,i] < x[0,i] < x[1,i]`, inside a white vertex
//! `y[i,1] < y[i,0] < y[i,-1]`. Between two monomials of equal degree, the
//! one with the smaller exponent at the first listed variable where they
//! differ is the larger.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, ParseError, Result};
use crate::webgraph::{Signature, VertexColor};
use crate::weightpath::Trit;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarKind {
    X,
    Y,
}

impl VarKind {
    pub fn of_vertex(color: VertexColor) -> VarKind {
        match color {
            VertexColor::Black => VarKind::X,
            VertexColor::White => VarKind::Y,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Variable {
    /// 1-based boundary vertex.
    pub vertex: usize,
    pub color: Trit,
    pub kind: VarKind,
}

impl Variable {
    pub fn x(color: Trit, vertex: usize) -> Variable {
        Variable { vertex, color, kind: VarKind::X }
    }

    pub fn y(vertex: usize, color: Trit) -> Variable {
        Variable { vertex, color, kind: VarKind::Y }
    }

    /// Position among the three variables of its vertex.
    pub fn slot(self) -> usize {
        match self.kind {
            VarKind::X => self.color.index(),
            VarKind::Y => 2 - self.color.index(),
        }
    }

    fn key(self) -> (usize, VarKind, usize) {
        (self.vertex, self.kind, self.slot())
    }
}

impl Ord for Variable {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Variable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            VarKind::X => write!(f, "x[{},{}]", self.color, self.vertex),
            VarKind::Y => write!(f, "y[{},{}]", self.vertex, self.color),
        }
    }
}

/// Product of variables. Exponents are kept sorted by variable and nonzero.
/// `Ord` is grevlex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(Variable, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn from_factors<I: IntoIterator<Item = (Variable, u32)>>(factors: I) -> Monomial {
        let mut map: BTreeMap<Variable, u32> = BTreeMap::new();
        for (v, e) in factors {
            *map.entry(v).or_default() += e;
        }
        Monomial {
            factors: map.into_iter().filter(|&(_, e)| e > 0).collect(),
        }
    }

    pub fn var(v: Variable) -> Monomial {
        Monomial { factors: vec![(v, 1)] }
    }

    pub fn factors(&self) -> &[(Variable, u32)] {
        &self.factors
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.factors
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|k| self.factors[k].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total degree in the variables of each vertex `1..=n`.
    pub fn multidegree(&self, n: usize) -> Vec<usize> {
        let mut d = vec![0; n];
        for &(v, e) in &self.factors {
            if (1..=n).contains(&v.vertex) {
                d[v.vertex - 1] += e as usize;
            }
        }
        d
    }

    pub fn max_vertex(&self) -> usize {
        self.factors.iter().map(|(v, _)| v.vertex).max().unwrap_or(0)
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &rhs.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { factors: out }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.factors, &other.factors);
            let (mut i, mut j) = (0, 0);
            loop {
                match (a.get(i), b.get(j)) {
                    (None, None) => return Ordering::Equal,
                    // the side that has the earlier variable has the larger
                    // exponent there, so it is the smaller monomial
                    (Some(_), None) => return Ordering::Less,
                    (None, Some(_)) => return Ordering::Greater,
                    (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                        Ordering::Less => return Ordering::Less,
                        Ordering::Greater => return Ordering::Greater,
                        Ordering::Equal if ea != eb => return eb.cmp(&ea),
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// An explicit listing of the variables of a signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableOrder {
    vars: Vec<Variable>,
}

impl VariableOrder {
    pub fn for_signature(sig: &Signature) -> VariableOrder {
        let mut vars = Vec::with_capacity(3 * sig.len());
        for (k, &c) in sig.colors().iter().enumerate() {
            let kind = VarKind::of_vertex(c);
            let mut three: Vec<Variable> = Trit::ALL
                .iter()
                .map(|&color| Variable { vertex: k + 1, color, kind })
                .collect();
            three.sort_by_key(|v| v.slot());
            vars.extend(three);
        }
        VariableOrder { vars }
    }

    pub fn from_list(vars: Vec<Variable>) -> VariableOrder {
        VariableOrder { vars }
    }

    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }

    pub fn position(&self, v: Variable) -> Option<usize> {
        self.vars.iter().position(|&w| w == v)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        m.factors.iter().all(|&(v, _)| self.position(v).is_some())
    }
}

/// Grevlex comparison over an explicit variable listing. Variables missing
/// from `ord` are an error.
pub fn grevlex_compare(a: &Monomial, b: &Monomial, ord: &VariableOrder) -> Result<Ordering> {
    for m in [a, b] {
        if let Some(&(v, _)) = m.factors.iter().find(|&&(v, _)| ord.position(v).is_none()) {
            return Err(Error::SignatureMismatch(format!("variable {v} is not in the order")));
        }
    }
    let by_degree = a.degree().cmp(&b.degree());
    if by_degree != Ordering::Equal {
        return Ok(by_degree);
    }
    for &v in &ord.vars {
        let (ea, eb) = (a.exponent(v), b.exponent(v));
        if ea != eb {
            return Ok(eb.cmp(&ea));
        }
    }
    Ok(Ordering::Equal)
}

/// Terms keyed by monomial in grevlex order; coefficients are never zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Polynomial {
        Polynomial::term(c, Monomial::one())
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Polynomial {
        let mut p = Polynomial::zero();
        p.add_term(c.into(), m);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (BigInt, Monomial)>>(terms: I) -> Polynomial {
        let mut p = Polynomial::zero();
        for (c, m) in terms {
            p.add_term(c, m);
        }
        p
    }

    pub fn add_term(&mut self, c: BigInt, m: Monomial) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms from the grevlex-largest down.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Result<(BigInt, Monomial)> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, c)| (c.clone(), m.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    /// Is every monomial of this multidegree?
    pub fn is_homogeneous_of(&self, degrees: &[usize]) -> bool {
        self.terms.keys().all(|m| m.multidegree(degrees.len()) == degrees)
    }
}

/// Leading term of `p` under an explicit order.
pub fn leading_term(p: &Polynomial, ord: &VariableOrder) -> Result<(BigInt, Monomial)> {
    let mut best: Option<(&Monomial, &BigInt)> = None;
    for (m, c) in &p.terms {
        best = match best {
            Some((b, _)) if grevlex_compare(m, b, ord)? != Ordering::Greater => best,
            _ => Some((m, c)),
        };
    }
    best.map(|(m, c)| (c.clone(), m.clone())).ok_or(Error::ZeroPolynomial)
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(c.clone(), m.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(-c, m.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-BigInt::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(c * d, a * b);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

/// `±c monomial`, the format of a single leading term.
pub fn format_term(c: &BigInt, m: &Monomial) -> String {
    let sign = if c.is_negative() { '-' } else { '+' };
    format!("{sign}{} {m}", c.abs())
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn error(&self, msg: &str) -> ParseError {
        ParseError::new(format!("column {}: {msg}", self.pos + 1))
    }

    fn digits(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn small(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat(b'-');
        let d: i64 = self.digits()?.parse().map_err(|_| self.error("number too large"))?;
        Ok(if neg { -d } else { d })
    }

    fn color(&mut self) -> Result<Trit, ParseError> {
        let v = self.small()?;
        Trit::from_value(v).ok_or_else(|| self.error("color must be -1, 0 or 1"))
    }

    fn vertex(&mut self) -> Result<usize, ParseError> {
        let v = self.small()?;
        if v < 1 {
            return Err(self.error("vertex numbers start at 1"));
        }
        Ok(v as usize)
    }

    /// One factor: an integer or a variable with optional exponent.
    fn factor(&mut self) -> Result<(BigInt, Monomial), ParseError> {
        match self.peek() {
            Some(b'x') | Some(b'y') => {
                let kind = if self.s[self.pos] == b'x' { VarKind::X } else { VarKind::Y };
                self.pos += 1;
                self.expect(b'[')?;
                let v = match kind {
                    VarKind::X => {
                        let c = self.color()?;
                        self.expect(b',')?;
                        Variable::x(c, self.vertex()?)
                    }
                    VarKind::Y => {
                        let i = self.vertex()?;
                        self.expect(b',')?;
                        Variable::y(i, self.color()?)
                    }
                };
                self.expect(b']')?;
                let e = if self.eat(b'^') {
                    self.digits()?.parse().map_err(|_| self.error("exponent too large"))?
                } else {
                    1
                };
                Ok((BigInt::one(), Monomial::from_factors([(v, e)])))
            }
            Some(c) if c.is_ascii_digit() => {
                let d: BigInt = self.digits()?.parse().unwrap();
                Ok((d, Monomial::one()))
            }
            _ => Err(self.error("expected a coefficient or variable")),
        }
    }
}

impl FromStr for Polynomial {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Polynomial, ParseError> {
        let mut cur = Cursor { s: text.as_bytes(), pos: 0 };
        let mut p = Polynomial::zero();
        let mut first = true;
        while cur.peek().is_some() {
            let mut sign = BigInt::one();
            if cur.eat(b'-') {
                sign = -sign;
            } else if !cur.eat(b'+') && !first {
                return Err(cur.error("expected `+` or `-` between terms"));
            }
            first = false;
            let (mut c, mut m) = cur.factor()?;
            while cur.eat(b'*') {
                let (d, n) = cur.factor()?;
                c *= d;
                m = &m * &n;
            }
            p.add_term(sign * c, m);
        }
        if first {
            return Err(ParseError::new("empty polynomial"));
        }
        Ok(p)
    }
}

impl FromStr for Monomial {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Monomial, ParseError> {
        let p: Polynomial = text.parse()?;
        match p.terms.into_iter().collect::<Vec<_>>().as_slice() {
            [(m, c)] if c.is_one() => Ok(m.clone()),
            _ => Err(ParseError::new(format!("`{text}` is not a single monomial"))),
        }
    }
}
