//! Bounded enumeration of frames and algebras, separating-model search, and
//! representability search.
//!
//! Enumeration order is pinned so counts and first witnesses are stable:
//!
//! * Frames are enumerated by ascending value of the `n^3`-bit relation
//!   vector. When the requested `satisfy` set contains BT0/BT2s the forced
//!   triples are fixed up front, and when it contains BT1 the remaining
//!   positions are enumerated as symmetry orbits; both prunings only skip
//!   candidates the filter would reject, so counts stay exact, and orbit
//!   ranking by highest bit position keeps the order identical to the
//!   unpruned scan.
//! * Algebras are enumerated by ascending atom-table value (entries
//!   row-major, last entry fastest), `f` tables outer, `g` tables inner.
//!   `f` tables failing the requested f-only axioms are discarded before any
//!   `g` table is built.
//!
//! Work may be split across rayon worker threads; chunks are merged in index
//! order, so results are identical for any thread count.

use rayon::prelude::*;

use crate::algebra::{Mask, PSAlgebra};
use crate::balg::{algebra_axiom_holds, AlgebraAxiom};
use crate::complex::{complex_op, ComplexMode, PointSet};
use crate::error::{Error, Result};
use crate::frame::{classify_frame, Frame, FrameAxiom};

/// Search request for frame enumeration.
#[derive(Clone, Debug)]
pub struct FrameSearchSpec {
    pub n: usize,
    pub satisfy: Vec<FrameAxiom>,
    pub violate: Vec<FrameAxiom>,
    /// How many models to collect (the count is exact regardless).
    pub limit: usize,
    /// Max candidates examined; mandatory for n = 4.
    pub budget: Option<u64>,
    /// Count only candidates that are minimal in their point-permutation
    /// orbit.
    pub modulo_iso: bool,
}

/// Search request for algebra enumeration.
#[derive(Clone, Debug)]
pub struct AlgebraSearchSpec {
    pub m: usize,
    pub satisfy: Vec<AlgebraAxiom>,
    pub violate: Vec<AlgebraAxiom>,
    pub limit: usize,
    /// Max candidates examined (both f-stage tables and full pairs count);
    /// mandatory for m = 3.
    pub budget: Option<u64>,
    pub modulo_iso: bool,
}

/// Enumeration outcome. `count` is exact when `exhaustive` is true;
/// `models` holds the first `limit` hits in enumeration order.
#[derive(Clone, Debug)]
pub struct Enumeration<T> {
    pub count: u64,
    pub models: Vec<T>,
    pub exhaustive: bool,
    pub examined: u64,
}

fn check_disjoint<A: PartialEq + std::fmt::Debug>(satisfy: &[A], violate: &[A]) -> Result<()> {
    for s in satisfy {
        if violate.contains(s) {
            return Err(Error::Invalid(format!("{s:?} cannot be both satisfied and violated")));
        }
    }
    Ok(())
}

/// Triple positions forced present by the requested axioms, plus the free
/// positions grouped into BT1 symmetry orbits when applicable. Orbits are
/// ranked ascending by their highest bit position, which makes the induced
/// enumeration order agree with the raw ascending-value order.
fn frame_orbits(n: usize, satisfy: &[FrameAxiom]) -> (u64, Vec<u64>) {
    let idx = |i: usize, j: usize, k: usize| -> u64 { 1u64 << ((i * n + j) * n + k) };
    let mut forced: u64 = 0;
    if satisfy.contains(&FrameAxiom::Bt0) {
        for a in 0..n {
            forced |= idx(a, a, a);
        }
    }
    if satisfy.contains(&FrameAxiom::Bt2s) {
        for a in 0..n {
            for b in 0..n {
                forced |= idx(a, a, b);
            }
        }
    }
    let symmetric = satisfy.contains(&FrameAxiom::Bt1);
    if symmetric {
        // close the forced set under the mirror rule
        let mut mirrored = forced;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if forced & idx(i, j, k) != 0 {
                        mirrored |= idx(k, j, i);
                    }
                }
            }
        }
        forced = mirrored;
    }
    let mut orbits: Vec<u64> = Vec::new();
    let mut seen: u64 = forced;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let bit = idx(i, j, k);
                if seen & bit != 0 {
                    continue;
                }
                let orbit = if symmetric { bit | idx(k, j, i) } else { bit };
                seen |= orbit;
                orbits.push(orbit);
            }
        }
    }
    // rank ascending by highest position
    orbits.sort_by_key(|o| 63 - o.leading_zeros());
    (forced, orbits)
}

fn frame_passes(frame: &Frame, satisfy: &[FrameAxiom], violate: &[FrameAxiom]) -> bool {
    satisfy.iter().all(|&a| frame.satisfies(a)) && violate.iter().all(|&a| !frame.satisfies(a))
}

/// Whether the relation vector is minimal among all point-permutation images.
fn is_canonical_frame(frame: &Frame) -> bool {
    let n = frame.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let words = frame.words().to_vec();
    loop {
        if !next_permutation(&mut perm) {
            return true;
        }
        let image = frame.permuted(&perm);
        if image.words() < &words[..] {
            return false;
        }
    }
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Deterministic lexicographic enumeration of relation vectors filtered by
/// the axiom sets. Exhaustive for n <= 3; n = 4 requires a budget.
pub fn enumerate_frames(spec: &FrameSearchSpec) -> Result<Enumeration<Frame>> {
    check_disjoint(&spec.satisfy, &spec.violate)?;
    if spec.n < 1 || spec.n > 4 {
        return Err(Error::CapExceeded(format!(
            "frame enumeration supports n in 1..=4, got {}",
            spec.n
        )));
    }
    let (forced, orbits) = frame_orbits(spec.n, &spec.satisfy);
    let free = orbits.len() as u32;
    let space: Option<u64> = if free >= 64 { None } else { Some(1u64 << free) };
    let total = match (space, spec.budget) {
        (Some(s), Some(b)) => s.min(b),
        (Some(s), None) => {
            if spec.n == 4 {
                return Err(Error::CapExceeded(
                    "frame enumeration at n = 4 requires a budget".into(),
                ));
            }
            s
        }
        (None, Some(b)) => b,
        (None, None) => {
            return Err(Error::CapExceeded(
                "frame enumeration at n = 4 requires a budget".into(),
            ));
        }
    };
    let exhaustive = space.map_or(false, |s| total >= s);

    let n = spec.n;
    let chunk = 1u64 << 16;
    let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
    let results: Vec<(u64, Vec<Frame>)> = starts
        .par_iter()
        .map(|&start| {
            let end = (start + chunk).min(total);
            let mut count = 0u64;
            let mut models = Vec::new();
            for c in start..end {
                let mut word = forced;
                for (bit, orbit) in orbits.iter().enumerate() {
                    if c >> bit & 1 == 1 {
                        word |= orbit;
                    }
                }
                // n <= 4 keeps the whole relation in one word
                let candidate = Frame::from_words(n, vec![word]);
                if frame_passes(&candidate, &spec.satisfy, &spec.violate)
                    && (!spec.modulo_iso || is_canonical_frame(&candidate))
                {
                    count += 1;
                    if models.len() < spec.limit {
                        models.push(candidate);
                    }
                }
            }
            (count, models)
        })
        .collect();

    let mut count = 0u64;
    let mut models = Vec::new();
    for (c, ms) in results {
        count += c;
        for m in ms {
            if models.len() < spec.limit {
                models.push(m);
            }
        }
    }
    Ok(Enumeration { count, models, exhaustive, examined: total })
}

/// Odometer over atom tables: `digits` in row-major entry order, the last
/// entry fastest. Returns false when the space is exhausted.
fn next_table(digits: &mut [Mask], radix: Mask) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

fn is_canonical_algebra(alg: &PSAlgebra) -> bool {
    let m = alg.atom_count();
    let mut perm: Vec<usize> = (0..m).collect();
    let key = |a: &PSAlgebra| (a.f_table().entries().to_vec(), a.g_table().entries().to_vec());
    let own = key(alg);
    loop {
        if !next_permutation(&mut perm) {
            return true;
        }
        let image_mask =
            |mask: Mask| crate::algebra::atoms_of(mask).fold(0, |acc, p| acc | 1 << perm[p]);
        let mut f_entries = vec![0; m * m];
        let mut g_entries = vec![0; m * m];
        for p in 0..m {
            for q in 0..m {
                f_entries[perm[p] * m + perm[q]] = image_mask(alg.f_atom(p, q));
                g_entries[perm[p] * m + perm[q]] = image_mask(alg.g_atom(p, q));
            }
        }
        if (f_entries, g_entries) < own {
            return false;
        }
    }
}

/// Staged enumeration of algebras: `f` tables first, filtered by the
/// requested f-only axioms, then `g` tables per surviving `f`. Exhaustive
/// for m <= 2; m = 3 requires a budget.
pub fn enumerate_algebras(spec: &AlgebraSearchSpec) -> Result<Enumeration<PSAlgebra>> {
    check_disjoint(&spec.satisfy, &spec.violate)?;
    if spec.m < 1 || spec.m > 3 {
        return Err(Error::CapExceeded(format!(
            "algebra enumeration supports m in 1..=3, got {}",
            spec.m
        )));
    }
    if spec.m == 3 && spec.budget.is_none() {
        return Err(Error::CapExceeded("algebra enumeration at m = 3 requires a budget".into()));
    }
    let m = spec.m;
    let radix = 1u32 << m;
    let entries = m * m;
    let f_axioms: Vec<AlgebraAxiom> =
        spec.satisfy.iter().copied().filter(|a| a.f_only()).collect();
    let rest_satisfy: Vec<AlgebraAxiom> =
        spec.satisfy.iter().copied().filter(|a| !a.f_only()).collect();

    let mut budget = spec.budget.unwrap_or(u64::MAX);
    let mut exhausted_budget = false;
    let mut count = 0u64;
    let mut examined = 0u64;
    let mut models = Vec::new();

    let zero_g = vec![0 as Mask; entries];
    let mut f_digits = vec![0 as Mask; entries];
    'outer: loop {
        if budget == 0 {
            exhausted_budget = true;
            break;
        }
        budget -= 1;
        examined += 1;
        // the f-only axioms never read g, so a placeholder g table is fine
        let probe = PSAlgebra::new(m, f_digits.clone(), zero_g.clone())?;
        if f_axioms.iter().all(|&a| algebra_axiom_holds(&probe, a)) {
            let mut g_digits = vec![0 as Mask; entries];
            loop {
                if budget == 0 {
                    exhausted_budget = true;
                    break 'outer;
                }
                budget -= 1;
                examined += 1;
                let alg = PSAlgebra::new(m, f_digits.clone(), g_digits.clone())?;
                if rest_satisfy.iter().all(|&a| algebra_axiom_holds(&alg, a))
                    && spec.violate.iter().all(|&a| !algebra_axiom_holds(&alg, a))
                    && (!spec.modulo_iso || is_canonical_algebra(&alg))
                {
                    count += 1;
                    if models.len() < spec.limit {
                        models.push(alg);
                    }
                }
                if !next_table(&mut g_digits, radix) {
                    break;
                }
            }
        }
        if !next_table(&mut f_digits, radix) {
            break;
        }
    }
    Ok(Enumeration { count, models, exhaustive: !exhausted_budget, examined })
}

/// Outcome of a first-witness search.
#[derive(Clone, Debug)]
pub enum SearchOutcome<T> {
    Found(T),
    /// The whole space was scanned without a hit.
    ExhaustedSpace,
    /// The budget ran out before the space did.
    ExhaustedBudget,
}

impl<T> SearchOutcome<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }
}

/// First frame in enumeration order satisfying every `satisfy` axiom and
/// violating every `violate` axiom.
pub fn find_separating_frame(spec: &FrameSearchSpec) -> Result<SearchOutcome<Frame>> {
    let mut spec = spec.clone();
    spec.limit = spec.limit.max(1);
    let result = enumerate_frames(&spec)?;
    Ok(match result.models.into_iter().next() {
        Some(frame) => SearchOutcome::Found(frame),
        None if result.exhaustive => SearchOutcome::ExhaustedSpace,
        None => SearchOutcome::ExhaustedBudget,
    })
}

/// First algebra in enumeration order satisfying/violating the requested
/// axiom sets.
pub fn find_separating_algebra(spec: &AlgebraSearchSpec) -> Result<SearchOutcome<PSAlgebra>> {
    let mut spec = spec.clone();
    spec.limit = spec.limit.max(1);
    let result = enumerate_algebras(&spec)?;
    Ok(match result.models.into_iter().next() {
        Some(alg) => SearchOutcome::Found(alg),
        None if result.exhaustive => SearchOutcome::ExhaustedSpace,
        None => SearchOutcome::ExhaustedBudget,
    })
}

/// A successful representability search: a b-frame together with the atom
/// images of the embedding. The images are pairwise disjoint, nonempty, and
/// cover all points.
#[derive(Clone, Debug)]
pub struct EmbeddingWitness {
    pub frame: Frame,
    pub atom_images: Vec<PointSet>,
}

impl EmbeddingWitness {
    /// Re-check everything the witness claims: the images partition the
    /// points, the frame is a b-frame, and mapping every element pair
    /// through the induced Boolean embedding reproduces both operators.
    pub fn verify(&self, alg: &PSAlgebra) -> bool {
        let n = self.frame.n();
        let top: PointSet = ((1u32 << n) - 1) as PointSet;
        if self.atom_images.len() != alg.atom_count() {
            return false;
        }
        let mut union: PointSet = 0;
        for &img in &self.atom_images {
            if img == 0 || union & img != 0 {
                return false;
            }
            union |= img;
        }
        if union != top || !classify_frame(&self.frame).is_b_frame() {
            return false;
        }
        let image = |x: Mask| -> PointSet {
            crate::algebra::atoms_of(x).fold(0, |acc, p| acc | self.atom_images[p])
        };
        for x in alg.elements() {
            for y in alg.elements() {
                if image(alg.f(x, y)) != complex_op(&self.frame, ComplexMode::Poss, image(x), image(y))
                    || image(alg.g(x, y))
                        != complex_op(&self.frame, ComplexMode::Suff, image(x), image(y))
                {
                    return false;
                }
            }
        }
        true
    }
}

/// Result of a bounded representability search.
#[derive(Clone, Debug)]
pub enum RepSearch {
    Witness(EmbeddingWitness),
    Exhausted { max_points: usize },
}

/// Tri-state assignment of the candidate relation during embedding search.
#[derive(Clone)]
struct EmbedState {
    n: usize,
    /// None = undecided, Some(true) = present, Some(false) = absent.
    value: Vec<Option<bool>>,
}

impl EmbedState {
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.n + j) * self.n + k
    }

    /// Set a triple and propagate the frame-axiom consequences:
    /// presence forces the mirror (BT1) and the initial segment (BT2) and
    /// prohibits the BT3 partner; absence forces the mirror absent and
    /// propagates the BT2 contrapositive. Returns false on conflict.
    fn assign(&mut self, i: usize, j: usize, k: usize, val: bool) -> bool {
        let idx = self.idx(i, j, k);
        match self.value[idx] {
            Some(v) => return v == val,
            None => self.value[idx] = Some(val),
        }
        if val {
            if !self.assign(k, j, i, true) {
                return false;
            }
            if !self.assign(i, i, j, true) {
                return false;
            }
            if j != k && !self.assign(i, k, j, false) {
                return false;
            }
        } else {
            if !self.assign(k, j, i, false) {
                return false;
            }
            // BT2 contrapositive: once <a,a,b> is out, every <a,b,c> is out
            if i == j {
                for c in 0..self.n {
                    if !self.assign(i, k, c, false) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Search for a relation completing the forced/prohibited skeleton into a
/// b-frame meeting the existential constraints. Branching tries "absent"
/// first, so the first witness carries the least relation vector.
struct EmbedSearch {
    n: usize,
    /// clauses requiring at least one member present
    need_present: Vec<Vec<usize>>,
    /// clauses requiring at least one member absent
    need_absent: Vec<Vec<usize>>,
}

impl EmbedSearch {
    fn clauses_ok(&self, state: &EmbedState) -> bool {
        self.need_present
            .iter()
            .all(|c| c.iter().any(|&t| state.value[t] != Some(false)))
            && self
                .need_absent
                .iter()
                .all(|c| c.iter().any(|&t| state.value[t] != Some(true)))
    }

    /// Unit propagation over the clauses; returns false on conflict.
    fn propagate_units(&self, state: &mut EmbedState) -> bool {
        loop {
            let mut changed = false;
            for clause in &self.need_present {
                let mut open = None;
                let mut satisfied = false;
                let mut undecided = 0;
                for &t in clause {
                    match state.value[t] {
                        Some(true) => satisfied = true,
                        Some(false) => {}
                        None => {
                            undecided += 1;
                            open = Some(t);
                        }
                    }
                }
                if satisfied {
                    continue;
                }
                match (undecided, open) {
                    (0, _) => return false,
                    (1, Some(t)) => {
                        let (i, j, k) = unindex(self.n, t);
                        if !state.assign(i, j, k, true) {
                            return false;
                        }
                        changed = true;
                    }
                    _ => {}
                }
            }
            for clause in &self.need_absent {
                let mut open = None;
                let mut satisfied = false;
                let mut undecided = 0;
                for &t in clause {
                    match state.value[t] {
                        Some(false) => satisfied = true,
                        Some(true) => {}
                        None => {
                            undecided += 1;
                            open = Some(t);
                        }
                    }
                }
                if satisfied {
                    continue;
                }
                match (undecided, open) {
                    (0, _) => return false,
                    (1, Some(t)) => {
                        let (i, j, k) = unindex(self.n, t);
                        if !state.assign(i, j, k, false) {
                            return false;
                        }
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn solve(&self, mut state: EmbedState) -> Option<Frame> {
        if !self.propagate_units(&mut state) || !self.clauses_ok(&state) {
            return None;
        }
        match state.value.iter().position(|v| v.is_none()) {
            None => {
                let mut frame = Frame::empty(self.n).expect("cap checked");
                for (t, v) in state.value.iter().enumerate() {
                    if *v == Some(true) {
                        let (i, j, k) = unindex(self.n, t);
                        frame.insert(i, j, k);
                    }
                }
                Some(frame)
            }
            Some(t) => {
                let (i, j, k) = unindex(self.n, t);
                for val in [false, true] {
                    let mut branch = state.clone();
                    if branch.assign(i, j, k, val) {
                        if let Some(frame) = self.solve(branch) {
                            return Some(frame);
                        }
                    }
                }
                None
            }
        }
    }
}

fn unindex(n: usize, t: usize) -> (usize, usize, usize) {
    (t / (n * n), t / n % n, t % n)
}

/// Search for a b-frame of at most `max_points` points whose full complex
/// algebra embeds the given algebra. Frame sizes grow from the atom count;
/// per size, the atom images range over the contiguous ordered partitions
/// (any embedding can be relabeled to one, and the contiguous assignment is
/// the least in its point-relabeling orbit). Found witnesses are always
/// revalidated through the checking modules before being reported.
pub fn representability_search(alg: &PSAlgebra, max_points: usize) -> Result<RepSearch> {
    if max_points > 6 {
        return Err(Error::CapExceeded("representability search supports max_points <= 6".into()));
    }
    let m = alg.atom_count();
    for n in m..=max_points {
        for sizes in compositions(n, m) {
            let mut blocks: Vec<PointSet> = Vec::with_capacity(m);
            let mut next = 0usize;
            for &s in &sizes {
                let block = (((1u32 << s) - 1) << next) as PointSet;
                blocks.push(block);
                next += s;
            }
            if let Some(frame) = solve_embedding(alg, n, &blocks) {
                let witness = EmbeddingWitness { frame, atom_images: blocks };
                if witness.verify(alg) {
                    return Ok(RepSearch::Witness(witness));
                }
            }
        }
    }
    Ok(RepSearch::Exhausted { max_points })
}

/// All compositions of `n` into `m` positive parts, lexicographic.
fn compositions(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, slots: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            prefix.push(remaining);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 1..=remaining.saturating_sub(slots - 1) {
            prefix.push(first);
            rec(remaining - first, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m >= 1 && n >= m {
        rec(n, m, &mut Vec::new(), &mut out);
    }
    out
}

/// Translate the operator tables into constraints on the candidate relation
/// (for atom pairs only; additivity extends them to all pairs) and run the
/// backtracking search.
fn solve_embedding(alg: &PSAlgebra, n: usize, blocks: &[PointSet]) -> Option<Frame> {
    let m = alg.atom_count();
    let mut state = EmbedState { n, value: vec![None; n * n * n] };
    let mut search = EmbedSearch { n, need_present: Vec::new(), need_absent: Vec::new() };
    let points = |set: PointSet| (0..n).filter(move |&u| set >> u & 1 == 1);
    let image = |x: Mask| -> PointSet {
        crate::algebra::atoms_of(x).fold(0, |acc, p| acc | blocks[p])
    };

    // BT0 skeleton
    for a in 0..n {
        if !state.assign(a, a, a, true) {
            return None;
        }
    }
    for p in 0..m {
        for q in 0..m {
            let f_img = image(alg.f_atom(p, q));
            let g_img = image(alg.g_atom(p, q));
            for u in 0..n {
                let in_f = f_img >> u & 1 == 1;
                let in_g = g_img >> u & 1 == 1;
                if in_g {
                    // universal membership: all block triples forced present
                    for x in points(blocks[p]) {
                        for y in points(blocks[q]) {
                            if !state.assign(x, u, y, true) {
                                return None;
                            }
                        }
                    }
                } else {
                    // some block triple must be absent
                    let clause: Vec<usize> = points(blocks[p])
                        .flat_map(|x| points(blocks[q]).map(move |y| (x, y)))
                        .map(|(x, y)| state.idx(x, u, y))
                        .collect();
                    search.need_absent.push(clause);
                }
                if in_f {
                    // some block triple must be present
                    let clause: Vec<usize> = points(blocks[p])
                        .flat_map(|x| points(blocks[q]).map(move |y| (x, y)))
                        .map(|(x, y)| state.idx(x, u, y))
                        .collect();
                    search.need_present.push(clause);
                } else {
                    // no block triple may be present
                    for x in points(blocks[p]) {
                        for y in points(blocks[q]) {
                            if !state.assign(x, u, y, false) {
                                return None;
                            }
                        }
                    }
                }
            }
        }
    }
    search
        .solve(state)
        .filter(|frame| classify_frame(frame).is_b_frame())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::frame::FrameKind;

    fn b_frame_axioms() -> Vec<FrameAxiom> {
        vec![FrameAxiom::Bt0, FrameAxiom::Bt1, FrameAxiom::Bt2, FrameAxiom::Bt3]
    }

    /// Unpruned oracle: filter every relation vector directly.
    fn frame_count_oracle(n: usize, satisfy: &[FrameAxiom], violate: &[FrameAxiom]) -> u64 {
        let bits = n * n * n;
        let mut count = 0;
        for word in 0u64..1 << bits {
            let frame = Frame::from_words(n, vec![word]);
            if frame_passes(&frame, satisfy, violate) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn counts_match_the_unpruned_oracle() {
        for (satisfy, n) in [
            (b_frame_axioms(), 1),
            (b_frame_axioms(), 2),
            (vec![FrameAxiom::Bt0, FrameAxiom::Bt1, FrameAxiom::Bt2s, FrameAxiom::Bt3], 2),
            (vec![FrameAxiom::Btw], 2),
            (vec![], 2),
        ] {
            let spec = FrameSearchSpec {
                n,
                satisfy: satisfy.clone(),
                violate: vec![],
                limit: 0,
                budget: None,
                modulo_iso: false,
            };
            let pruned = enumerate_frames(&spec).unwrap();
            assert!(pruned.exhaustive);
            assert_eq!(pruned.count, frame_count_oracle(n, &satisfy, &[]));
        }
    }

    #[test]
    fn known_frame_counts() {
        let count = |satisfy: Vec<FrameAxiom>, n: usize| {
            enumerate_frames(&FrameSearchSpec {
                n,
                satisfy,
                violate: vec![],
                limit: 0,
                budget: None,
                modulo_iso: false,
            })
            .unwrap()
            .count
        };
        assert_eq!(count(b_frame_axioms(), 1), 1);
        assert_eq!(count(b_frame_axioms(), 2), 2);
        assert_eq!(
            count(vec![FrameAxiom::Bt0, FrameAxiom::Bt1, FrameAxiom::Bt2s, FrameAxiom::Bt3], 2),
            1
        );
    }

    #[test]
    fn first_witness_is_order_independent_of_pruning() {
        // same filter with and without BT1 in the satisfy set changes the
        // candidate walk but not the first b-frame found
        let spec = FrameSearchSpec {
            n: 2,
            satisfy: b_frame_axioms(),
            violate: vec![],
            limit: 10,
            budget: None,
            modulo_iso: false,
        };
        let pruned = enumerate_frames(&spec).unwrap();
        // oracle order: ascending word value
        let mut oracle_models = Vec::new();
        for word in 0u64..256 {
            let frame = Frame::from_words(2, vec![word]);
            if frame_passes(&frame, &spec.satisfy, &[]) {
                oracle_models.push(frame);
            }
        }
        assert_eq!(pruned.models, oracle_models);
    }

    #[test]
    fn modulo_iso_bounds() {
        let spec = FrameSearchSpec {
            n: 2,
            satisfy: vec![FrameAxiom::Bt0],
            violate: vec![],
            limit: 0,
            budget: None,
            modulo_iso: false,
        };
        let labeled = enumerate_frames(&spec).unwrap().count;
        let iso = enumerate_frames(&FrameSearchSpec { modulo_iso: true, ..spec }).unwrap().count;
        assert!(iso <= labeled);
        assert!(labeled <= iso * 2); // n! = 2
    }

    #[test]
    fn budget_is_respected() {
        let spec = FrameSearchSpec {
            n: 4,
            satisfy: b_frame_axioms(),
            violate: vec![],
            limit: 1,
            budget: Some(5000),
            modulo_iso: false,
        };
        let result = enumerate_frames(&spec).unwrap();
        assert!(!result.exhaustive);
        assert_eq!(result.examined, 5000);
        // the chain frame exists at n = 4, and some b-frame appears early
        assert!(result.count >= 1);

        assert!(enumerate_frames(&FrameSearchSpec { budget: None, ..spec }).is_err());
    }

    #[test]
    fn separating_frames() {
        // weak but not b: exists at n = 3
        let found = find_separating_frame(&FrameSearchSpec {
            n: 3,
            satisfy: vec![FrameAxiom::Bt0, FrameAxiom::Bt1, FrameAxiom::Bt2, FrameAxiom::Btw],
            violate: vec![FrameAxiom::Bt3],
            limit: 1,
            budget: None,
            modulo_iso: false,
        })
        .unwrap();
        let frame = found.found().expect("weak-not-b witness exists at n = 3");
        assert_eq!(crate::frame::classify_frame(frame), crate::frame::FrameClass::Weak);

        // BT3 without BTW at n = 2: first hit is the single off-diagonal triple
        let found = find_separating_frame(&FrameSearchSpec {
            n: 2,
            satisfy: vec![FrameAxiom::Bt3],
            violate: vec![FrameAxiom::Btw],
            limit: 1,
            budget: None,
            modulo_iso: false,
        })
        .unwrap();
        let frame = found.found().expect("witness exists at n = 2");
        assert_eq!(frame.triples(), vec![(0, 1, 0)]);

        // impossible request: nothing satisfies BT0 and violates BT0
        let out = find_separating_frame(&FrameSearchSpec {
            n: 2,
            satisfy: vec![],
            violate: vec![FrameAxiom::Bt0, FrameAxiom::Btw],
            limit: 1,
            budget: None,
            modulo_iso: false,
        });
        assert!(out.is_ok());
        let conflict = find_separating_frame(&FrameSearchSpec {
            n: 2,
            satisfy: vec![FrameAxiom::Bt0],
            violate: vec![FrameAxiom::Bt0],
            limit: 1,
            budget: None,
            modulo_iso: false,
        });
        assert!(conflict.is_err());
    }

    /// Unpruned oracle over all (f,g) atom-table pairs at m = 1.
    fn algebra_count_oracle_m1(satisfy: &[AlgebraAxiom]) -> u64 {
        let mut count = 0;
        for f in 0u32..2 {
            for g in 0u32..2 {
                let alg = PSAlgebra::new(1, vec![f], vec![g]).unwrap();
                if satisfy.iter().all(|&a| algebra_axiom_holds(&alg, a)) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn algebra_counts() {
        let b_axioms = AlgebraAxiom::B_ALGEBRA.to_vec();
        let spec = AlgebraSearchSpec {
            m: 1,
            satisfy: b_axioms.clone(),
            violate: vec![],
            limit: 10,
            budget: None,
            modulo_iso: false,
        };
        let result = enumerate_algebras(&spec).unwrap();
        assert!(result.exhaustive);
        assert_eq!(result.count, 2);
        assert_eq!(result.count, algebra_count_oracle_m1(&b_axioms));
        // the two models are the two-element algebras
        assert!(result.models.iter().any(|a| a == &catalog::qnots_a0()));
        assert!(result.models.iter().any(|a| a == &catalog::qnots_a1()));
    }

    #[test]
    fn mia_filter_on_two_element_algebras() {
        let spec = AlgebraSearchSpec {
            m: 1,
            satisfy: AlgebraAxiom::B_ALGEBRA.to_vec(),
            violate: vec![],
            limit: 10,
            budget: None,
            modulo_iso: false,
        };
        let result = enumerate_algebras(&spec).unwrap();
        let mias: Vec<&PSAlgebra> =
            result.models.iter().filter(|a| crate::canonical::is_mia(a)).collect();
        assert_eq!(mias.len(), 1);
        assert_eq!(mias[0], &catalog::qnots_a0());
    }

    #[test]
    fn separating_algebra_with_asymmetric_f() {
        let found = find_separating_algebra(&AlgebraSearchSpec {
            m: 2,
            satisfy: vec![AlgebraAxiom::Abt0],
            violate: vec![AlgebraAxiom::Abt1f],
            limit: 1,
            budget: None,
            modulo_iso: false,
        })
        .unwrap();
        let alg = found.found().expect("asymmetric-f tables exist at m = 2");
        assert!(algebra_axiom_holds(alg, AlgebraAxiom::Abt0));
        assert!(!algebra_axiom_holds(alg, AlgebraAxiom::Abt1f));
    }

    #[test]
    fn representability_positives() {
        let a0 = catalog::qnots_a0();
        match representability_search(&a0, 3).unwrap() {
            RepSearch::Witness(w) => {
                assert_eq!(w.frame.n(), 1);
                assert!(w.verify(&a0));
            }
            RepSearch::Exhausted { .. } => panic!("the one-point frame represents this algebra"),
        }

        let a1 = catalog::qnots_a1();
        match representability_search(&a1, 3).unwrap() {
            RepSearch::Witness(w) => {
                assert_eq!(w.frame.n(), 2, "no one-point frame works, two points do");
                assert_eq!(w.frame, catalog::identity2());
                assert!(w.verify(&a1));
            }
            RepSearch::Exhausted { .. } => panic!("the identity frame represents this algebra"),
        }
    }

    #[test]
    fn representability_obstruction_blocks_search() {
        let alg = catalog::nonrep8();
        assert!(crate::balg::representability_obstruction(&alg).is_some());
        match representability_search(&alg, 5).unwrap() {
            RepSearch::Witness(_) => panic!("obstructed algebra must not embed"),
            RepSearch::Exhausted { max_points } => assert_eq!(max_points, 5),
        }
    }

    #[test]
    fn representability_cap() {
        assert!(representability_search(&catalog::qnots_a0(), 7).is_err());
    }

    #[test]
    fn compositions_enumerate_all_size_vectors() {
        assert_eq!(compositions(3, 1), vec![vec![3]]);
        assert_eq!(compositions(4, 3), vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
        assert_eq!(compositions(2, 3), Vec::<Vec<usize>>::new());
    }
}
