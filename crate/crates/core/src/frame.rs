//! Finite 3-frames and the frame-level betweenness axioms.
//!
//! A [`Frame`] is a point set `{0, .., n-1}` with a ternary relation stored
//! as a bit vector of length `n^3`, triple `<i,j,k>` at bit `i*n^2 + j*n + k`.
//! The middle-argument convention is fixed once and used everywhere: a triple
//! `<i,j,k>` reads "j lies between i and k".

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::report::AxiomReport;

/// Hard cap on the point count; a frame then fits in a 4096-bit vector.
pub const MAX_POINTS: usize = 16;

/// A finite 3-frame. Immutable after construction; all checks are pure.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Frame {
    n: usize,
    words: Vec<u64>,
}

#[inline]
fn word_count(n: usize) -> usize {
    (n * n * n + 63) / 64
}

impl Frame {
    /// The frame on `n` points with the empty relation.
    pub fn empty(n: usize) -> Result<Frame> {
        if n < 1 || n > MAX_POINTS {
            return Err(Error::PointCount(n));
        }
        Ok(Frame { n, words: vec![0; word_count(n)] })
    }

    pub fn from_triples(n: usize, triples: &[(usize, usize, usize)]) -> Result<Frame> {
        let mut frame = Frame::empty(n)?;
        for &(i, j, k) in triples {
            for idx in [i, j, k] {
                if idx >= n {
                    return Err(Error::Index { index: idx, bound: n });
                }
            }
            frame.insert(i, j, k);
        }
        Ok(frame)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn bit(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.n + j) * self.n + k
    }

    #[inline]
    pub fn contains(&self, i: usize, j: usize, k: usize) -> bool {
        debug_assert!(i < self.n && j < self.n && k < self.n);
        let b = self.bit(i, j, k);
        self.words[b >> 6] >> (b & 63) & 1 == 1
    }

    pub(crate) fn insert(&mut self, i: usize, j: usize, k: usize) {
        debug_assert!(i < self.n && j < self.n && k < self.n);
        let b = self.bit(i, j, k);
        self.words[b >> 6] |= 1 << (b & 63);
    }

    /// All triples in lexicographic order.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..self.n {
                    if self.contains(i, j, k) {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    pub fn triple_count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset_of(&self, other: &Frame) -> bool {
        self.n == other.n
            && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// The complement relation on the same point set.
    pub fn complement(&self) -> Frame {
        let mut frame = Frame { n: self.n, words: self.words.iter().map(|w| !w).collect() };
        // clear bits beyond n^3
        let used = self.n * self.n * self.n;
        let last = frame.words.len() - 1;
        let tail = used & 63;
        if tail != 0 {
            frame.words[last] &= (1u64 << tail) - 1;
        }
        frame
    }

    /// Image of the relation under a point permutation (`perm[i]` is where
    /// point `i` goes).
    pub fn permuted(&self, perm: &[usize]) -> Frame {
        debug_assert_eq!(perm.len(), self.n);
        let mut out = Frame { n: self.n, words: vec![0; self.words.len()] };
        for (i, j, k) in self.triples() {
            out.insert(perm[i], perm[j], perm[k]);
        }
        out
    }

    pub fn satisfies(&self, axiom: FrameAxiom) -> bool {
        check_frame_axiom_inner(self, axiom, false).is_none()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn from_words(n: usize, words: Vec<u64>) -> Frame {
        debug_assert_eq!(words.len(), word_count(n));
        Frame { n, words }
    }

    /// Render in the line-oriented text format (`frame <n>` then `t i j k`
    /// lines, lexicographic).
    pub fn to_text(&self) -> String {
        let mut s = format!("frame {}\n", self.n);
        for (i, j, k) in self.triples() {
            s.push_str(&format!("t {} {} {}\n", i, j, k));
        }
        s
    }

    /// Parse the text format. `#` starts a comment, duplicate triples are
    /// idempotent, any other line is a parse error.
    pub fn parse_str(input: &str) -> Result<Frame> {
        let mut frame: Option<Frame> = None;
        for (lineno, raw) in input.lines().enumerate() {
            let line = lineno + 1;
            let text = raw.split('#').next().unwrap_or("").trim();
            if text.is_empty() {
                continue;
            }
            let fields: Vec<&str> = text.split_whitespace().collect();
            match (frame.as_mut(), fields.as_slice()) {
                (None, ["frame", n]) => {
                    let n: usize = n
                        .parse()
                        .map_err(|_| Error::Parse { line, msg: format!("bad point count `{n}`") })?;
                    frame = Some(Frame::empty(n).map_err(|e| Error::Parse { line, msg: e.to_string() })?);
                }
                (None, _) => {
                    return Err(Error::Parse { line, msg: "expected `frame <n>` header".into() });
                }
                (Some(f), ["t", i, j, k]) => {
                    let mut idx = [0usize; 3];
                    for (slot, s) in idx.iter_mut().zip([i, j, k]) {
                        *slot = s
                            .parse()
                            .map_err(|_| Error::Parse { line, msg: format!("bad index `{s}`") })?;
                        if *slot >= f.n {
                            return Err(Error::Parse {
                                line,
                                msg: format!("index {} out of range for {} points", slot, f.n),
                            });
                        }
                    }
                    f.insert(idx[0], idx[1], idx[2]);
                }
                (Some(_), _) => {
                    return Err(Error::Parse { line, msg: format!("unrecognized line `{text}`") });
                }
            }
        }
        frame.ok_or(Error::Parse { line: 0, msg: "missing `frame <n>` header".into() })
    }
}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Frame(n={}, {:?})", self.n, self.triples())
    }
}

/// Built-in frame constructors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrameKind {
    /// Exactly the diagonal triples `<a,a,a>`.
    Identity,
    /// All `n^3` triples.
    Universal,
    /// The betweenness relation of the total order `0 <= 1 <= .. <= n-1`.
    Chain,
    /// Exactly the supplied triple list.
    FromTriples,
}

pub fn build_frame(
    kind: FrameKind,
    n: usize,
    triples: Option<&[(usize, usize, usize)]>,
) -> Result<Frame> {
    if kind != FrameKind::FromTriples && triples.is_some() {
        return Err(Error::TriplesNotAllowed);
    }
    match kind {
        FrameKind::Identity => {
            let mut f = Frame::empty(n)?;
            for a in 0..n {
                f.insert(a, a, a);
            }
            Ok(f)
        }
        FrameKind::Universal => {
            let f = Frame::empty(n)?;
            Ok(f.complement())
        }
        FrameKind::Chain => {
            let mut f = Frame::empty(n)?;
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if (i <= j && j <= k) || (k <= j && j <= i) {
                            f.insert(i, j, k);
                        }
                    }
                }
            }
            Ok(f)
        }
        FrameKind::FromTriples => {
            let triples = triples.ok_or(Error::TriplesRequired)?;
            Frame::from_triples(n, triples)
        }
    }
}

/// The frame-level betweenness axioms.
///
/// * `BT0`: `B(a,a,a)`
/// * `BT1`: `B(a,b,c) -> B(c,b,a)`
/// * `BT2`: `B(a,b,c) -> B(a,a,b)`
/// * `BT3`: `B(a,b,c) & B(a,c,b) -> b = c`
/// * `BTW`: `B(a,b,a) -> a = b`
/// * `BT2s`: `B(a,a,b)`
/// * `C`: for pairwise distinct `a,b,c`, not both `<a,b,c>` and `<a,c,b>`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FrameAxiom {
    Bt0,
    Bt1,
    Bt2,
    Bt3,
    Btw,
    Bt2s,
    C,
}

impl FrameAxiom {
    pub const ALL: [FrameAxiom; 7] = [
        FrameAxiom::Bt0,
        FrameAxiom::Bt1,
        FrameAxiom::Bt2,
        FrameAxiom::Bt3,
        FrameAxiom::Btw,
        FrameAxiom::Bt2s,
        FrameAxiom::C,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FrameAxiom::Bt0 => "BT0",
            FrameAxiom::Bt1 => "BT1",
            FrameAxiom::Bt2 => "BT2",
            FrameAxiom::Bt3 => "BT3",
            FrameAxiom::Btw => "BTW",
            FrameAxiom::Bt2s => "BT2s",
            FrameAxiom::C => "C",
        }
    }
}

impl fmt::Display for FrameAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FrameAxiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<FrameAxiom> {
        FrameAxiom::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Invalid(format!("unknown frame axiom `{s}`")))
    }
}

/// Scan for the lexicographically least violating tuple. Returns `None` when
/// the axiom holds; with `want_witness == false` the scan is identical but
/// callers only use the `is_none` answer.
fn check_frame_axiom_inner(
    frame: &Frame,
    axiom: FrameAxiom,
    _want_witness: bool,
) -> Option<Vec<u32>> {
    let n = frame.n;
    match axiom {
        FrameAxiom::Bt0 => (0..n).find(|&a| !frame.contains(a, a, a)).map(|a| vec![a as u32]),
        FrameAxiom::Btw => {
            for a in 0..n {
                for b in 0..n {
                    if a != b && frame.contains(a, b, a) {
                        return Some(vec![a as u32, b as u32]);
                    }
                }
            }
            None
        }
        FrameAxiom::Bt2s => {
            for a in 0..n {
                for b in 0..n {
                    if !frame.contains(a, a, b) {
                        return Some(vec![a as u32, b as u32]);
                    }
                }
            }
            None
        }
        FrameAxiom::Bt1 | FrameAxiom::Bt2 | FrameAxiom::Bt3 | FrameAxiom::C => {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        let bad = match axiom {
                            FrameAxiom::Bt1 => {
                                frame.contains(a, b, c) && !frame.contains(c, b, a)
                            }
                            FrameAxiom::Bt2 => {
                                frame.contains(a, b, c) && !frame.contains(a, a, b)
                            }
                            FrameAxiom::Bt3 => {
                                b != c && frame.contains(a, b, c) && frame.contains(a, c, b)
                            }
                            FrameAxiom::C => {
                                a != b
                                    && b != c
                                    && a != c
                                    && frame.contains(a, b, c)
                                    && frame.contains(a, c, b)
                            }
                            _ => unreachable!(),
                        };
                        if bad {
                            return Some(vec![a as u32, b as u32, c as u32]);
                        }
                    }
                }
            }
            None
        }
    }
}

pub fn check_frame_axiom(frame: &Frame, axiom: FrameAxiom) -> AxiomReport<FrameAxiom> {
    match check_frame_axiom_inner(frame, axiom, true) {
        None => AxiomReport::passed(axiom),
        Some(w) => AxiomReport::failed(axiom, w),
    }
}

/// Re-instantiate a witness tuple into the axiom and confirm it violates it.
/// Used to validate reports; a correct report always returns `true`.
pub fn witness_violates(frame: &Frame, axiom: FrameAxiom, witness: &[u32]) -> bool {
    let at = |i: usize| witness[i] as usize;
    match axiom {
        FrameAxiom::Bt0 => witness.len() == 1 && !frame.contains(at(0), at(0), at(0)),
        FrameAxiom::Btw => {
            witness.len() == 2 && at(0) != at(1) && frame.contains(at(0), at(1), at(0))
        }
        FrameAxiom::Bt2s => witness.len() == 2 && !frame.contains(at(0), at(0), at(1)),
        FrameAxiom::Bt1 => {
            witness.len() == 3
                && frame.contains(at(0), at(1), at(2))
                && !frame.contains(at(2), at(1), at(0))
        }
        FrameAxiom::Bt2 => {
            witness.len() == 3
                && frame.contains(at(0), at(1), at(2))
                && !frame.contains(at(0), at(0), at(1))
        }
        FrameAxiom::Bt3 => {
            witness.len() == 3
                && at(1) != at(2)
                && frame.contains(at(0), at(1), at(2))
                && frame.contains(at(0), at(2), at(1))
        }
        FrameAxiom::C => {
            witness.len() == 3
                && at(0) != at(1)
                && at(1) != at(2)
                && at(0) != at(2)
                && frame.contains(at(0), at(1), at(2))
                && frame.contains(at(0), at(2), at(1))
        }
    }
}

/// Frame classification, strongest label first. The labels are cumulative:
/// every strong b-frame is a b-frame, every b-frame is a weak b-frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrameClass {
    Strong,
    BFrame,
    Weak,
    PsOnly,
}

impl FrameClass {
    pub fn name(self) -> &'static str {
        match self {
            FrameClass::Strong => "strong b-frame",
            FrameClass::BFrame => "b-frame",
            FrameClass::Weak => "weak b-frame",
            FrameClass::PsOnly => "PS-frame-only",
        }
    }

    pub fn is_strong(self) -> bool {
        self == FrameClass::Strong
    }

    pub fn is_b_frame(self) -> bool {
        matches!(self, FrameClass::Strong | FrameClass::BFrame)
    }

    pub fn is_weak(self) -> bool {
        !matches!(self, FrameClass::PsOnly)
    }
}

impl fmt::Display for FrameClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Most specific applicable label: strong = BT0,BT1,BT2s,BT3; b-frame =
/// BT0-BT3; weak = BT0,BT1,BT2,BTW.
pub fn classify_frame(frame: &Frame) -> FrameClass {
    let bt0 = frame.satisfies(FrameAxiom::Bt0);
    let bt1 = frame.satisfies(FrameAxiom::Bt1);
    let bt2 = frame.satisfies(FrameAxiom::Bt2);
    let strong = bt0 && bt1 && frame.satisfies(FrameAxiom::Bt2s) && frame.satisfies(FrameAxiom::Bt3);
    let b = bt0 && bt1 && bt2 && frame.satisfies(FrameAxiom::Bt3);
    let weak = bt0 && bt1 && bt2 && frame.satisfies(FrameAxiom::Btw);
    // the hierarchy must hold on every classified frame
    debug_assert!(!strong || b);
    debug_assert!(!b || weak);
    if strong {
        FrameClass::Strong
    } else if b {
        FrameClass::BFrame
    } else if weak {
        FrameClass::Weak
    } else {
        FrameClass::PsOnly
    }
}

/// A finite binary relation, pair `<i,j>` at bit `i*n + j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryRelation {
    n: usize,
    bits: Vec<u64>,
}

impl BinaryRelation {
    pub fn empty(n: usize) -> Result<BinaryRelation> {
        if n < 1 || n > MAX_POINTS {
            return Err(Error::PointCount(n));
        }
        Ok(BinaryRelation { n, bits: vec![0; (n * n + 63) / 64] })
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<BinaryRelation> {
        let mut rel = BinaryRelation::empty(n)?;
        for &(i, j) in pairs {
            for idx in [i, j] {
                if idx >= n {
                    return Err(Error::Index { index: idx, bound: n });
                }
            }
            rel.insert(i, j);
        }
        Ok(rel)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, i: usize, j: usize) {
        debug_assert!(i < self.n && j < self.n);
        let b = i * self.n + j;
        self.bits[b >> 6] |= 1 << (b & 63);
    }

    #[inline]
    pub fn contains(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n && j < self.n);
        let b = i * self.n + j;
        self.bits[b >> 6] >> (b & 63) & 1 == 1
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|i| self.contains(i, i))
    }
}

impl fmt::Debug for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.contains(i, j))
            .collect();
        write!(f, "BinaryRelation(n={}, {:?})", self.n, pairs)
    }
}

/// Strong antisymmetry: `x R y R z R x -> y = z`. Least witness `(x,y,z)` on
/// failure.
pub fn is_strongly_antisymmetric(rel: &BinaryRelation) -> AxiomReport<&'static str> {
    const TAG: &str = "strongly-antisymmetric";
    let n = rel.n;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if y != z && rel.contains(x, y) && rel.contains(y, z) && rel.contains(z, x) {
                    return AxiomReport::failed(TAG, vec![x as u32, y as u32, z as u32]);
                }
            }
        }
    }
    AxiomReport::passed(TAG)
}

/// The ternary relation induced by a binary one:
/// `B_R(x,y,z)` iff `x R y R z` or `z R y R x`.
pub fn betweenness_from_binary(rel: &BinaryRelation) -> Frame {
    let n = rel.n;
    let mut frame = Frame::empty(n).expect("relation size is within the frame cap");
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if (rel.contains(x, y) && rel.contains(y, z))
                    || (rel.contains(z, y) && rel.contains(y, x))
                {
                    frame.insert(x, y, z);
                }
            }
        }
    }
    frame
}

/// Result of closing a seed relation under the expanding axioms.
#[derive(Clone, Debug)]
pub struct ClosureResult {
    pub frame: Frame,
    /// Whether the closure satisfies the contracting axiom BT3.
    pub consistent: bool,
}

/// Least superset of `seed` closed under the expanding rules: all diagonal
/// triples (BT0), `<c,b,a>` whenever `<a,b,c>` is present (BT1), and
/// `<a,a,b>` whenever `<a,b,c>` is present (BT2). BT3 is contracting, so it
/// is validated on the fixpoint instead of fired as a rule.
pub fn close_expanding(seed: &Frame) -> ClosureResult {
    let n = seed.n();
    let mut frame = seed.clone();
    for a in 0..n {
        frame.insert(a, a, a);
    }
    loop {
        let mut changed = false;
        for (a, b, c) in frame.triples() {
            if !frame.contains(c, b, a) {
                frame.insert(c, b, a);
                changed = true;
            }
            if !frame.contains(a, a, b) {
                frame.insert(a, a, b);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let consistent = frame.satisfies(FrameAxiom::Bt3);
    ClosureResult { frame, consistent }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame_of(n: usize, triples: &[(usize, usize, usize)]) -> Frame {
        Frame::from_triples(n, triples).unwrap()
    }

    /// Independent oracle for the chain relation: filter all n^3 triples by
    /// the order condition.
    fn chain_oracle(n: usize) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if (i <= j && j <= k) || (k <= j && j <= i) {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn build_identity() {
        let f = build_frame(FrameKind::Identity, 2, None).unwrap();
        assert_eq!(f.triples(), vec![(0, 0, 0), (1, 1, 1)]);
    }

    #[test]
    fn build_universal_singleton() {
        let f = build_frame(FrameKind::Universal, 1, None).unwrap();
        assert_eq!(f.triples(), vec![(0, 0, 0)]);
    }

    #[test]
    fn build_chain_matches_oracle() {
        let expected = chain_oracle(3);
        assert_eq!(expected.len(), 17);
        let f = build_frame(FrameKind::Chain, 3, None).unwrap();
        assert_eq!(f.triples(), expected);
    }

    #[test]
    fn build_frame_rejects_bad_input() {
        assert_eq!(build_frame(FrameKind::Identity, 0, None), Err(Error::PointCount(0)));
        assert_eq!(build_frame(FrameKind::Identity, 17, None), Err(Error::PointCount(17)));
        assert!(matches!(
            build_frame(FrameKind::Identity, 2, Some(&[(0, 0, 0)])),
            Err(Error::TriplesNotAllowed)
        ));
        assert!(matches!(build_frame(FrameKind::FromTriples, 2, None), Err(Error::TriplesRequired)));
        assert!(matches!(
            build_frame(FrameKind::FromTriples, 2, Some(&[(0, 2, 0)])),
            Err(Error::Index { index: 2, bound: 2 })
        ));
    }

    #[test]
    fn encode_round_trips() {
        let triples = [(0, 1, 2), (2, 1, 0), (1, 1, 1), (0, 0, 2)];
        let f = frame_of(3, &triples);
        let mut sorted: Vec<_> = triples.to_vec();
        sorted.sort();
        assert_eq!(f.triples(), sorted);
    }

    #[test]
    fn axiom_reports_on_named_frames() {
        let singleton = build_frame(FrameKind::Identity, 1, None).unwrap();
        assert!(check_frame_axiom(&singleton, FrameAxiom::Bt0).holds);

        let universal2 = build_frame(FrameKind::Universal, 2, None).unwrap();
        let r = check_frame_axiom(&universal2, FrameAxiom::Btw);
        assert!(!r.holds);
        assert_eq!(r.witness(), Some(&[0, 1][..]));

        let empty1 = Frame::empty(1).unwrap();
        let r = check_frame_axiom(&empty1, FrameAxiom::Bt0);
        assert!(!r.holds);
        assert_eq!(r.witness(), Some(&[0][..]));
    }

    #[test]
    fn wnot3_separates_btw_from_bt3() {
        let f = crate::catalog::wnot3();
        assert!(check_frame_axiom(&f, FrameAxiom::Btw).holds);
        let r = check_frame_axiom(&f, FrameAxiom::Bt3);
        assert!(!r.holds);
        assert_eq!(r.witness(), Some(&[0, 1, 2][..]));
        assert_eq!(classify_frame(&f), FrameClass::Weak);
    }

    #[test]
    fn classify_named_frames() {
        let identity2 = build_frame(FrameKind::Identity, 2, None).unwrap();
        assert_eq!(classify_frame(&identity2), FrameClass::BFrame);
        // BT2s needs <0,0,1>, absent from the identity frame
        assert!(!identity2.satisfies(FrameAxiom::Bt2s));

        let chain3 = build_frame(FrameKind::Chain, 3, None).unwrap();
        assert_eq!(classify_frame(&chain3), FrameClass::Strong);
        assert!(classify_frame(&chain3).is_b_frame());
    }

    #[test]
    fn strongly_antisymmetric_checks() {
        let mut chain = BinaryRelation::empty(3).unwrap();
        for i in 0..3 {
            for j in i..3 {
                chain.insert(i, j);
            }
        }
        assert!(is_strongly_antisymmetric(&chain).holds);

        let cycle = BinaryRelation::from_pairs(
            3,
            &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (2, 0)],
        )
        .unwrap();
        let r = is_strongly_antisymmetric(&cycle);
        assert!(!r.holds);
        assert_eq!(r.witness(), Some(&[0, 1, 2][..]));

        let id = BinaryRelation::from_pairs(3, &[(0, 0), (1, 1), (2, 2)]).unwrap();
        assert!(is_strongly_antisymmetric(&id).holds);
    }

    #[test]
    fn betweenness_from_binary_examples() {
        let mut chain = BinaryRelation::empty(3).unwrap();
        for i in 0..3 {
            for j in i..3 {
                chain.insert(i, j);
            }
        }
        let f = betweenness_from_binary(&chain);
        assert_eq!(f, build_frame(FrameKind::Chain, 3, None).unwrap());
        assert_eq!(classify_frame(&f), FrameClass::Strong);

        let cycle = BinaryRelation::from_pairs(
            3,
            &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (2, 0)],
        )
        .unwrap();
        let g = betweenness_from_binary(&cycle);
        assert!(!classify_frame(&g).is_b_frame());
        let r = check_frame_axiom(&g, FrameAxiom::Bt3);
        assert!(!r.holds);
        assert_eq!(r.witness(), Some(&[0, 1, 2][..]));

        let id = BinaryRelation::from_pairs(2, &[(0, 0), (1, 1)]).unwrap();
        assert_eq!(
            betweenness_from_binary(&id),
            build_frame(FrameKind::Identity, 2, None).unwrap()
        );
    }

    /// Independent fixpoint oracle for the closure: iterate the three rules
    /// on a plain triple set until nothing changes.
    fn closure_oracle(n: usize, seed: &[(usize, usize, usize)]) -> Vec<(usize, usize, usize)> {
        use std::collections::BTreeSet;
        let mut set: BTreeSet<(usize, usize, usize)> = seed.iter().copied().collect();
        for a in 0..n {
            set.insert((a, a, a));
        }
        loop {
            let mut next = set.clone();
            for &(a, b, c) in &set {
                next.insert((c, b, a));
                next.insert((a, a, b));
            }
            if next == set {
                break;
            }
            set = next;
        }
        set.into_iter().collect()
    }

    #[test]
    fn close_expanding_matches_oracle() {
        let seed = frame_of(3, &[(0, 1, 2)]);
        let result = close_expanding(&seed);
        assert!(result.consistent);
        for t in [(2, 1, 0), (0, 0, 1), (2, 2, 1)] {
            assert!(result.frame.contains(t.0, t.1, t.2));
        }
        let oracle = closure_oracle(3, &[(0, 1, 2)]);
        assert_eq!(result.frame.triples(), oracle);
    }

    #[test]
    fn close_expanding_empty_seed_is_identity() {
        let seed = Frame::empty(3).unwrap();
        let result = close_expanding(&seed);
        assert!(result.consistent);
        assert_eq!(result.frame, build_frame(FrameKind::Identity, 3, None).unwrap());
    }

    #[test]
    fn close_expanding_gpairs_seed() {
        let result = close_expanding(&crate::catalog::gpairs4_seed());
        assert!(result.consistent);
        assert!(classify_frame(&result.frame).is_b_frame());
        let oracle = closure_oracle(4, &crate::catalog::gpairs4_seed().triples());
        assert_eq!(result.frame.triples(), oracle);
    }

    #[test]
    fn bt2s_implies_bt2_everywhere_small() {
        // all 256 relations on 2 points
        for bits in 0u32..256 {
            let mut f = Frame::empty(2).unwrap();
            for b in 0..8 {
                if bits >> b & 1 == 1 {
                    f.insert(b >> 2 & 1, b >> 1 & 1, b & 1);
                }
            }
            if f.satisfies(FrameAxiom::Bt2s) {
                assert!(f.satisfies(FrameAxiom::Bt2));
            }
        }
    }

    #[test]
    fn bt3_iff_btw_and_c_under_bt2_on_two_points() {
        for bits in 0u32..256 {
            let mut f = Frame::empty(2).unwrap();
            for b in 0..8 {
                if bits >> b & 1 == 1 {
                    f.insert(b >> 2 & 1, b >> 1 & 1, b & 1);
                }
            }
            if f.satisfies(FrameAxiom::Bt2) {
                let bt3 = f.satisfies(FrameAxiom::Bt3);
                let btw_and_c = f.satisfies(FrameAxiom::Btw) && f.satisfies(FrameAxiom::C);
                assert_eq!(bt3, btw_and_c, "disagrees on {f:?}");
            }
        }
    }

    #[test]
    fn parse_and_print_round_trip() {
        let text = "# comment\nframe 3\nt 0 1 2  # trailing comment\nt 0 1 2\nt 2 2 2\n";
        let f = Frame::parse_str(text).unwrap();
        assert_eq!(f.triples(), vec![(0, 1, 2), (2, 2, 2)]);
        let printed = f.to_text();
        assert_eq!(Frame::parse_str(&printed).unwrap(), f);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Frame::parse_str(""), Err(Error::Parse { .. })));
        assert!(matches!(Frame::parse_str("frame 3\nx 1 2 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Frame::parse_str("frame 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(Frame::parse_str("frame 2\nt 0 0 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Frame::parse_str("t 0 0 0\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn frame_axiom_names_round_trip() {
        for a in FrameAxiom::ALL {
            assert_eq!(a.name().parse::<FrameAxiom>().unwrap(), a);
        }
        assert!("BT9".parse::<FrameAxiom>().is_err());
    }
}
