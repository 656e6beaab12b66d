//! The lattice `I^{1,6}` with its Lorentzian pairing, the `E6` sublattice,
//! the 72 roots and the 27 exceptional vectors (lines), all over exact integers.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::KanevError;

/// An element of `I^{1,6}` in the standard basis `f0, f1, ..., f6`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(pub [i64; 7]);

impl LatticeVector {
    pub const ZERO: LatticeVector = LatticeVector([0; 7]);

    /// Standard basis vector `f_i`, `0 <= i <= 6`.
    pub fn f(i: usize) -> LatticeVector {
        assert!(i < 7);
        let mut v = [0i64; 7];
        v[i] = 1;
        LatticeVector(v)
    }

    /// The canonical class `k = -3 f0 + f1 + ... + f6`, of square 3.
    pub fn canonical_class() -> LatticeVector {
        LatticeVector([-3, 1, 1, 1, 1, 1, 1])
    }

    /// Lorentzian pairing `(u, v) = u0 v0 - sum_{i>=1} ui vi`.
    pub fn pairing(&self, other: &LatticeVector) -> i64 {
        let mut p = self.0[0] * other.0[0];
        for i in 1..7 {
            p -= self.0[i] * other.0[i];
        }
        p
    }

    pub fn norm(&self) -> i64 {
        self.pairing(self)
    }

    pub fn scale(&self, c: i64) -> LatticeVector {
        let mut v = self.0;
        for x in &mut v {
            *x *= c;
        }
        LatticeVector(v)
    }

    /// True for vectors of square -2 orthogonal to `k` (the roots of `E6`).
    pub fn is_root(&self) -> bool {
        self.norm() == -2 && self.pairing(&LatticeVector::canonical_class()) == 0
    }

    /// True for exceptional vectors: square -1 and pairing -1 with `k`.
    pub fn is_line(&self) -> bool {
        self.norm() == -1 && self.pairing(&LatticeVector::canonical_class()) == -1
    }
}

impl std::ops::Add for LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: LatticeVector) -> LatticeVector {
        let mut v = self.0;
        for (a, b) in v.iter_mut().zip(rhs.0) {
            *a += b;
        }
        LatticeVector(v)
    }
}

impl std::ops::Sub for LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: LatticeVector) -> LatticeVector {
        let mut v = self.0;
        for (a, b) in v.iter_mut().zip(rhs.0) {
            *a -= b;
        }
        LatticeVector(v)
    }
}

impl std::ops::Neg for LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        self.scale(-1)
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// Label of a root in the `alpha` notation of the Schlaefli basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum RootLabel {
    /// `alpha_ij = f_i - f_j`, `1 <= i < j <= 6`.
    Ij(u8, u8),
    /// `alpha_ijk = f0 - f_i - f_j - f_k`, `1 <= i < j < k <= 6`.
    Ijk(u8, u8, u8),
    /// `alpha_max = 2 f0 - f1 - ... - f6`.
    Max,
}

impl RootLabel {
    pub fn vector(&self) -> LatticeVector {
        match *self {
            RootLabel::Ij(i, j) => LatticeVector::f(i as usize) - LatticeVector::f(j as usize),
            RootLabel::Ijk(i, j, k) => {
                LatticeVector::f(0)
                    - LatticeVector::f(i as usize)
                    - LatticeVector::f(j as usize)
                    - LatticeVector::f(k as usize)
            }
            RootLabel::Max => LatticeVector([2, -1, -1, -1, -1, -1, -1]),
        }
    }
}

/// A root of `E6`, stored with its label; the vector is authoritative.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Root {
    pub vec: LatticeVector,
    pub label: RootLabel,
    /// True when this is the negative of the labelled positive root.
    pub negated: bool,
}

impl Root {
    pub fn from_label(label: RootLabel, negated: bool) -> Root {
        let v = label.vector();
        Root {
            vec: if negated { -v } else { v },
            label,
            negated,
        }
    }

    /// Looks up the labelled root with the given vector, if it is a root.
    pub fn from_vector(v: LatticeVector) -> Option<Root> {
        if !v.is_root() {
            return None;
        }
        for r in all_roots() {
            if r.vec == v {
                return Some(*r);
            }
        }
        None
    }

    pub fn negate(&self) -> Root {
        Root {
            vec: -self.vec,
            label: self.label,
            negated: !self.negated,
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "-")?;
        }
        match self.label {
            RootLabel::Ij(i, j) => write!(f, "a:{},{}", i, j),
            RootLabel::Ijk(i, j, k) => write!(f, "b:{},{},{}", i, j, k),
            RootLabel::Max => write!(f, "max"),
        }
    }
}

impl FromStr for Root {
    type Err = KanevError;

    /// Root tokens: `a:i,j`, `b:i,j,k`, `max`, each with an optional leading
    /// `-`; also raw 7-tuples `(x0,x1,...,x6)`.
    fn from_str(s: &str) -> Result<Root, KanevError> {
        let s = s.trim();
        let bad = || KanevError::Parse(format!("invalid root token `{s}`"));
        if s.starts_with('(') {
            let inner = s
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(bad)?;
            let coords: Vec<i64> = inner
                .split(',')
                .map(|t| t.trim().parse::<i64>())
                .collect::<Result<_, _>>()
                .map_err(|_| bad())?;
            if coords.len() != 7 {
                return Err(bad());
            }
            let mut v = [0i64; 7];
            v.copy_from_slice(&coords);
            return Root::from_vector(LatticeVector(v))
                .ok_or_else(|| KanevError::Parse(format!("`{s}` is not a root of E6")));
        }
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest.trim()),
            None => (false, s),
        };
        if body == "max" {
            return Ok(Root::from_label(RootLabel::Max, neg));
        }
        let (kind, idx) = body.split_once(':').ok_or_else(bad)?;
        let parts: Vec<u8> = idx
            .split(',')
            .map(|t| t.trim().parse::<u8>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        if parts.iter().any(|&i| i == 0 || i > 6) {
            return Err(bad());
        }
        let mut sorted = parts.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != parts.len() {
            return Err(bad());
        }
        let label = match (kind, sorted.as_slice()) {
            ("a", &[i, j]) => RootLabel::Ij(i, j),
            ("b", &[i, j, k]) => RootLabel::Ijk(i, j, k),
            _ => return Err(bad()),
        };
        Ok(Root::from_label(label, neg))
    }
}

/// Label of an exceptional vector in Schlaefli notation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum LineLabel {
    A(u8),
    B(u8),
    C(u8, u8),
}

impl fmt::Display for LineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LineLabel::A(i) => write!(f, "a{}", i),
            LineLabel::B(i) => write!(f, "b{}", i),
            LineLabel::C(i, j) => write!(f, "c{}{}", i, j),
        }
    }
}

/// One of the 27 exceptional vectors, with its index in the canonical order
/// `a1..a6, b1..b6, c12, c13, ..., c56`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Line {
    pub vec: LatticeVector,
    pub label: LineLabel,
    pub index: usize,
}

fn build_lines() -> Vec<Line> {
    let mut out = Vec::with_capacity(27);
    for i in 1..=6u8 {
        out.push(Line {
            vec: LatticeVector::f(i as usize),
            label: LineLabel::A(i),
            index: out.len(),
        });
    }
    for i in 1..=6u8 {
        let v = RootLabel::Max.vector() + LatticeVector::f(i as usize);
        out.push(Line {
            vec: v,
            label: LineLabel::B(i),
            index: out.len(),
        });
    }
    for i in 1..=6u8 {
        for j in (i + 1)..=6u8 {
            let v =
                LatticeVector::f(0) - LatticeVector::f(i as usize) - LatticeVector::f(j as usize);
            out.push(Line {
                vec: v,
                label: LineLabel::C(i, j),
                index: out.len(),
            });
        }
    }
    out
}

fn build_roots() -> Vec<Root> {
    let mut labels = Vec::with_capacity(36);
    for i in 1..=6u8 {
        for j in (i + 1)..=6u8 {
            labels.push(RootLabel::Ij(i, j));
        }
    }
    for i in 1..=6u8 {
        for j in (i + 1)..=6u8 {
            for k in (j + 1)..=6u8 {
                labels.push(RootLabel::Ijk(i, j, k));
            }
        }
    }
    labels.push(RootLabel::Max);
    let mut out = Vec::with_capacity(72);
    for &l in &labels {
        out.push(Root::from_label(l, false));
        out.push(Root::from_label(l, true));
    }
    out
}

/// The 27 lines in canonical order.
pub fn lines() -> &'static [Line] {
    static LINES: OnceLock<Vec<Line>> = OnceLock::new();
    LINES.get_or_init(build_lines)
}

/// All 72 roots: `alpha_ij` lexicographic, then `alpha_ijk` lexicographic,
/// then `alpha_max`, each immediately followed by its negative.
pub fn all_roots() -> &'static [Root] {
    static ROOTS: OnceLock<Vec<Root>> = OnceLock::new();
    ROOTS.get_or_init(build_roots)
}

/// The 36 positive roots in canonical order.
pub fn positive_roots() -> impl Iterator<Item = &'static Root> {
    all_roots().iter().filter(|r| !r.negated)
}

/// The simple roots `r1 = alpha_123, r2 = alpha_12, ..., r6 = alpha_56`.
pub fn simple_roots() -> [Root; 6] {
    [
        Root::from_label(RootLabel::Ijk(1, 2, 3), false),
        Root::from_label(RootLabel::Ij(1, 2), false),
        Root::from_label(RootLabel::Ij(2, 3), false),
        Root::from_label(RootLabel::Ij(3, 4), false),
        Root::from_label(RootLabel::Ij(4, 5), false),
        Root::from_label(RootLabel::Ij(5, 6), false),
    ]
}

/// The extra root `r0 = -alpha_max` of the extended Dynkin diagram.
pub fn extended_root() -> Root {
    Root::from_label(RootLabel::Max, true)
}

pub fn line_index(v: &LatticeVector) -> Option<usize> {
    lines().iter().position(|l| l.vec == *v)
}

pub fn line_by_label(label: LineLabel) -> &'static Line {
    lines()
        .iter()
        .find(|l| l.label == label)
        .expect("valid line label")
}

/// The double-six of a root: the six ordered pairs `(l, l + r)` over the
/// lines with `(r, l) = 1`. The remaining 15 lines are orthogonal to `r`.
pub fn double_six(r: &Root) -> Result<Vec<(Line, Line)>, KanevError> {
    if !r.vec.is_root() {
        return Err(KanevError::NotARoot(r.vec.to_string()));
    }
    let mut pairs = Vec::with_capacity(6);
    for l in lines() {
        if r.vec.pairing(&l.vec) == 1 {
            let partner = l.vec + r.vec;
            let idx = line_index(&partner).expect("l + r is a line");
            pairs.push((*l, lines()[idx]));
        }
    }
    debug_assert_eq!(pairs.len(), 6);
    Ok(pairs)
}

/// Parses a whitespace/semicolon/newline separated list of root tokens.
/// Commas belong to the tokens themselves (`a:1,2`, tuples), so they do not
/// separate list entries. `#` starts a comment.
pub fn parse_root_list(text: &str) -> Result<Vec<Root>, KanevError> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        };
        for tok in line.split([' ', '\t', ';']) {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            out.push(
                tok.parse::<Root>()
                    .map_err(|e| KanevError::Parse(format!("line {}: {}", lineno + 1, e)))?,
            );
        }
    }
    Ok(out)
}
