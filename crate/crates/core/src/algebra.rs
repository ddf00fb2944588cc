//! Finite Boolean algebras with a binary possibility operator `f` and a
//! binary sufficiency operator `g`.
//!
//! Elements are subsets of atoms encoded as bit masks; meet/join/complement
//! are bitwise and/or/not and `p <= q` is mask containment. The operators are
//! stored on atom pairs only: on a finite algebra, additivity plus normality
//! determine `f` from its atom table (`f(x,y)` is the join of `f(p,q)` over
//! atoms `p <= x`, `q <= y`, empty join = 0), and dually co-additivity plus
//! co-normality determine `g` (meet over atom pairs, empty meet = 1).

use std::fmt;

use crate::error::{Error, Result};
use crate::report::AxiomReport;

/// Hard cap on the atom count (32 elements, 1024-entry full tables).
pub const MAX_ATOMS: usize = 5;

/// An element of a finite Boolean algebra: the mask of atoms below it.
pub type Mask = u32;

/// Iterate the atoms (bit indices) of a mask, ascending.
#[inline]
pub fn atoms_of(mask: Mask) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let p = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(p)
        }
    })
}

/// Render a mask in atom-set notation with atoms named `a..e`, e.g. `{a,c}`.
pub fn atom_set_string(mask: Mask, m: usize) -> String {
    const NAMES: [char; MAX_ATOMS] = ['a', 'b', 'c', 'd', 'e'];
    let mut s = String::from("{");
    let mut first = true;
    for p in atoms_of(mask) {
        if p < m {
            if !first {
                s.push(',');
            }
            s.push(NAMES[p]);
            first = false;
        }
    }
    s.push('}');
    s
}

/// An operator table on ordered atom pairs: `m * m` element values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AtomTable {
    m: usize,
    entries: Vec<Mask>,
}

impl AtomTable {
    pub fn new(m: usize, entries: Vec<Mask>) -> Result<AtomTable> {
        if m < 1 || m > MAX_ATOMS {
            return Err(Error::AtomCount(m));
        }
        if entries.len() != m * m {
            return Err(Error::Invalid(format!(
                "atom table needs {} entries, got {}",
                m * m,
                entries.len()
            )));
        }
        let top = (1u32 << m) - 1;
        for (i, &e) in entries.iter().enumerate() {
            if e > top {
                return Err(Error::Invalid(format!(
                    "entry ({},{}) mask {} exceeds top {}",
                    i / m,
                    i % m,
                    e,
                    top
                )));
            }
        }
        Ok(AtomTable { m, entries })
    }

    #[inline]
    pub fn get(&self, p: usize, q: usize) -> Mask {
        debug_assert!(p < self.m && q < self.m);
        self.entries[p * self.m + q]
    }

    pub fn entries(&self) -> &[Mask] {
        &self.entries
    }
}

/// A principal ultrafilter of a finite Boolean algebra, `up(p)` for an atom
/// `p`: membership is `x in up(p)` iff `p <= x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ultrafilter {
    pub atom: usize,
}

impl Ultrafilter {
    #[inline]
    pub fn contains(&self, x: Mask) -> bool {
        x >> self.atom & 1 == 1
    }
}

/// A finite Boolean algebra with possibility table `f` and sufficiency table
/// `g` stored on atom pairs. Immutable; all operations are pure.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PSAlgebra {
    m: usize,
    f: AtomTable,
    g: AtomTable,
}

impl PSAlgebra {
    /// Build an algebra from complete atom-pair tables (entries in row-major
    /// `(p,q)` order). Trivial algebras (`m = 0`) are rejected.
    pub fn new(m: usize, f_entries: Vec<Mask>, g_entries: Vec<Mask>) -> Result<PSAlgebra> {
        let f = AtomTable::new(m, f_entries)?;
        let g = AtomTable::new(m, g_entries)?;
        Ok(PSAlgebra { m, f, g })
    }

    pub fn atom_count(&self) -> usize {
        self.m
    }

    pub fn element_count(&self) -> usize {
        1 << self.m
    }

    #[inline]
    pub fn top(&self) -> Mask {
        (1u32 << self.m) - 1
    }

    pub fn elements(&self) -> impl Iterator<Item = Mask> {
        0..(1u32 << self.m)
    }

    pub fn ultrafilters(&self) -> Vec<Ultrafilter> {
        (0..self.m).map(|atom| Ultrafilter { atom }).collect()
    }

    #[inline]
    pub fn f_atom(&self, p: usize, q: usize) -> Mask {
        self.f.get(p, q)
    }

    #[inline]
    pub fn g_atom(&self, p: usize, q: usize) -> Mask {
        self.g.get(p, q)
    }

    pub fn f_table(&self) -> &AtomTable {
        &self.f
    }

    pub fn g_table(&self) -> &AtomTable {
        &self.g
    }

    /// The possibility operator on arbitrary elements (join over atom pairs).
    pub fn f(&self, x: Mask, y: Mask) -> Mask {
        let mut acc = 0;
        for p in atoms_of(x) {
            for q in atoms_of(y) {
                acc |= self.f.get(p, q);
            }
        }
        acc
    }

    /// The sufficiency operator on arbitrary elements (meet over atom pairs).
    pub fn g(&self, x: Mask, y: Mask) -> Mask {
        let mut acc = self.top();
        for p in atoms_of(x) {
            for q in atoms_of(y) {
                acc &= self.g.get(p, q);
            }
        }
        acc
    }

    /// Materialize the full `2^m x 2^m` tables, indexed `[x << m | y]`.
    pub fn full_tables(&self) -> (Vec<Mask>, Vec<Mask>) {
        let size = 1usize << self.m;
        let mut f_full = vec![0; size * size];
        let mut g_full = vec![0; size * size];
        for x in 0..size as Mask {
            for y in 0..size as Mask {
                f_full[(x as usize) << self.m | y as usize] = self.f(x, y);
                g_full[(x as usize) << self.m | y as usize] = self.g(x, y);
            }
        }
        (f_full, g_full)
    }

    /// Search for an isomorphism onto `other` by atom permutation; returns
    /// the permutation (self atom `p` maps to other atom `perm[p]`) if one
    /// exists. Feasible at these sizes (`m! <= 120`).
    pub fn isomorphic_to(&self, other: &PSAlgebra) -> Option<Vec<usize>> {
        if self.m != other.m {
            return None;
        }
        let mut perm: Vec<usize> = (0..self.m).collect();
        loop {
            if self.matches_under(other, &perm) {
                return Some(perm);
            }
            if !next_permutation(&mut perm) {
                return None;
            }
        }
    }

    fn matches_under(&self, other: &PSAlgebra, perm: &[usize]) -> bool {
        let image = |mask: Mask| -> Mask {
            atoms_of(mask).fold(0, |acc, p| acc | 1 << perm[p])
        };
        for p in 0..self.m {
            for q in 0..self.m {
                if other.f.get(perm[p], perm[q]) != image(self.f.get(p, q))
                    || other.g.get(perm[p], perm[q]) != image(self.g.get(p, q))
                {
                    return false;
                }
            }
        }
        true
    }

    /// Render in the text format: `psalg <m>` then `f p q mask` and
    /// `g p q mask` lines, row-major.
    pub fn to_text(&self) -> String {
        let mut s = format!("psalg {}\n", self.m);
        for p in 0..self.m {
            for q in 0..self.m {
                s.push_str(&format!("f {} {} {}\n", p, q, self.f.get(p, q)));
            }
        }
        for p in 0..self.m {
            for q in 0..self.m {
                s.push_str(&format!("g {} {} {}\n", p, q, self.g.get(p, q)));
            }
        }
        s
    }

    /// Parse the text format. Missing or duplicate entries are parse errors;
    /// `#` starts a comment.
    pub fn parse_str(input: &str) -> Result<PSAlgebra> {
        let mut m: Option<usize> = None;
        let mut f_entries: Vec<Option<Mask>> = Vec::new();
        let mut g_entries: Vec<Option<Mask>> = Vec::new();
        for (lineno, raw) in input.lines().enumerate() {
            let line = lineno + 1;
            let text = raw.split('#').next().unwrap_or("").trim();
            if text.is_empty() {
                continue;
            }
            let fields: Vec<&str> = text.split_whitespace().collect();
            match (m, fields.as_slice()) {
                (None, ["psalg", count]) => {
                    let count: usize = count.parse().map_err(|_| Error::Parse {
                        line,
                        msg: format!("bad atom count `{count}`"),
                    })?;
                    if count < 1 || count > MAX_ATOMS {
                        return Err(Error::Parse {
                            line,
                            msg: Error::AtomCount(count).to_string(),
                        });
                    }
                    m = Some(count);
                    f_entries = vec![None; count * count];
                    g_entries = vec![None; count * count];
                }
                (None, _) => {
                    return Err(Error::Parse { line, msg: "expected `psalg <m>` header".into() });
                }
                (Some(count), [op @ ("f" | "g"), p, q, mask]) => {
                    let p: usize = p
                        .parse()
                        .map_err(|_| Error::Parse { line, msg: format!("bad atom index `{p}`") })?;
                    let q: usize = q
                        .parse()
                        .map_err(|_| Error::Parse { line, msg: format!("bad atom index `{q}`") })?;
                    if p >= count || q >= count {
                        return Err(Error::Parse { line, msg: "atom index out of range".into() });
                    }
                    let mask: Mask = mask.parse().map_err(|_| Error::Parse {
                        line,
                        msg: format!("bad mask `{mask}`"),
                    })?;
                    if mask >= 1 << count {
                        return Err(Error::Parse { line, msg: format!("mask {mask} out of range") });
                    }
                    let slot = &mut (if *op == "f" { &mut f_entries } else { &mut g_entries })
                        [p * count + q];
                    if slot.is_some() {
                        return Err(Error::Parse {
                            line,
                            msg: format!("duplicate entry {op} {p} {q}"),
                        });
                    }
                    *slot = Some(mask);
                }
                (Some(_), _) => {
                    return Err(Error::Parse { line, msg: format!("unrecognized line `{text}`") });
                }
            }
        }
        let m = m.ok_or(Error::Parse { line: 0, msg: "missing `psalg <m>` header".into() })?;
        let unwrap_all = |entries: Vec<Option<Mask>>, op: &str| -> Result<Vec<Mask>> {
            entries
                .into_iter()
                .enumerate()
                .map(|(i, e)| {
                    e.ok_or_else(|| Error::Parse {
                        line: 0,
                        msg: format!("missing entry {op} {} {}", i / m, i % m),
                    })
                })
                .collect()
        };
        PSAlgebra::new(m, unwrap_all(f_entries, "f")?, unwrap_all(g_entries, "g")?)
    }
}

impl fmt::Debug for PSAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PSAlgebra(m={}, f={:?}, g={:?})",
            self.m,
            self.f.entries(),
            self.g.entries()
        )
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

/// The operator laws checked by [`validate_operators`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorLaw {
    PossNormality,
    PossAdditivityLeft,
    PossAdditivityRight,
    SuffCoNormality,
    SuffCoAdditivityLeft,
    SuffCoAdditivityRight,
}

impl OperatorLaw {
    pub const ALL: [OperatorLaw; 6] = [
        OperatorLaw::PossNormality,
        OperatorLaw::PossAdditivityLeft,
        OperatorLaw::PossAdditivityRight,
        OperatorLaw::SuffCoNormality,
        OperatorLaw::SuffCoAdditivityLeft,
        OperatorLaw::SuffCoAdditivityRight,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OperatorLaw::PossNormality => "P-normality",
            OperatorLaw::PossAdditivityLeft => "P-additivity(arg 1)",
            OperatorLaw::PossAdditivityRight => "P-additivity(arg 2)",
            OperatorLaw::SuffCoNormality => "S-co-normality",
            OperatorLaw::SuffCoAdditivityLeft => "S-co-additivity(arg 1)",
            OperatorLaw::SuffCoAdditivityRight => "S-co-additivity(arg 2)",
        }
    }
}

impl fmt::Display for OperatorLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Check raw full `2^m x 2^m` tables (indexed `[x << m | y]`) against the
/// possibility laws (normality, additivity in each argument) for `f` and the
/// sufficiency laws (co-normality, co-additivity) for `g`. One report per
/// law; witnesses are the least violating element pairs/triples in ascending
/// mask order.
pub fn validate_operators(
    m: usize,
    f_full: &[Mask],
    g_full: &[Mask],
) -> Result<Vec<AxiomReport<OperatorLaw>>> {
    if m < 1 || m > MAX_ATOMS {
        return Err(Error::AtomCount(m));
    }
    let size = 1usize << m;
    if f_full.len() != size * size || g_full.len() != size * size {
        return Err(Error::Invalid(format!(
            "full tables need {} entries each",
            size * size
        )));
    }
    let top = (1u32 << m) - 1;
    let f = |x: Mask, y: Mask| f_full[(x as usize) << m | y as usize];
    let g = |x: Mask, y: Mask| g_full[(x as usize) << m | y as usize];

    let mut reports = Vec::with_capacity(6);
    for law in OperatorLaw::ALL {
        let mut witness: Option<Vec<u32>> = None;
        match law {
            OperatorLaw::PossNormality | OperatorLaw::SuffCoNormality => {
                'outer: for x in 0..size as Mask {
                    for y in 0..size as Mask {
                        if x != 0 && y != 0 {
                            continue;
                        }
                        let bad = match law {
                            OperatorLaw::PossNormality => f(x, y) != 0,
                            _ => g(x, y) != top,
                        };
                        if bad {
                            witness = Some(vec![x, y]);
                            break 'outer;
                        }
                    }
                }
            }
            _ => {
                'outer3: for u in 0..size as Mask {
                    for v in 0..size as Mask {
                        for w in 0..size as Mask {
                            let bad = match law {
                                OperatorLaw::PossAdditivityLeft => f(u | v, w) != f(u, w) | f(v, w),
                                OperatorLaw::PossAdditivityRight => {
                                    f(u, v | w) != f(u, v) | f(u, w)
                                }
                                OperatorLaw::SuffCoAdditivityLeft => {
                                    g(u | v, w) != g(u, w) & g(v, w)
                                }
                                OperatorLaw::SuffCoAdditivityRight => {
                                    g(u, v | w) != g(u, v) & g(u, w)
                                }
                                _ => unreachable!(),
                            };
                            if bad {
                                witness = Some(vec![u, v, w]);
                                break 'outer3;
                            }
                        }
                    }
                }
            }
        }
        reports.push(match witness {
            None => AxiomReport::passed(law),
            Some(w) => AxiomReport::failed(law, w),
        });
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_trivial_and_oversized() {
        assert_eq!(PSAlgebra::new(0, vec![], vec![]), Err(Error::AtomCount(0)));
        assert!(matches!(PSAlgebra::new(6, vec![0; 36], vec![0; 36]), Err(Error::AtomCount(6))));
        assert!(PSAlgebra::new(2, vec![0; 3], vec![0; 4]).is_err());
        assert!(PSAlgebra::new(2, vec![4, 0, 0, 0], vec![0; 4]).is_err());
    }

    #[test]
    fn two_element_algebras() {
        let a1 = PSAlgebra::new(1, vec![1], vec![0]).unwrap();
        assert_eq!(a1.f(1, 1), 1);
        assert_eq!(a1.g(1, 1), 0);
        assert_eq!(a1.g(0, 1), 1);
        assert_eq!(a1.g(1, 0), 1);
        assert_eq!(a1.f(0, 1), 0);

        let a0 = PSAlgebra::new(1, vec![1], vec![1]).unwrap();
        assert_eq!(a0.g(1, 1), 1);
        assert!(a0.isomorphic_to(&a1).is_none());
    }

    #[test]
    fn expansion_always_passes_the_operator_laws() {
        // every atom table yields an additive/co-additive normal pair
        for fe in 0u32..16 {
            for ge in 0u32..16 {
                let alg = PSAlgebra::new(
                    2,
                    vec![fe & 3, fe >> 2 & 3, 0, 3],
                    vec![ge & 3, ge >> 2 & 3, 3, 0],
                )
                .unwrap();
                let (f_full, g_full) = alg.full_tables();
                let reports = validate_operators(2, &f_full, &g_full).unwrap();
                assert!(reports.iter().all(|r| r.holds), "laws fail for {alg:?}");
            }
        }
    }

    #[test]
    fn expansion_is_the_unique_additive_extension() {
        // exactness at m <= 3: additivity pins every element pair from atoms
        let alg = crate::catalog::table1();
        let (f_full, g_full) = alg.full_tables();
        let m = alg.atom_count();
        for x in alg.elements() {
            for y in alg.elements() {
                let f_expected: Mask =
                    atoms_of(x).flat_map(|p| atoms_of(y).map(move |q| (p, q))).fold(0, |acc, (p, q)| {
                        acc | f_full[(1usize << p) << m | (1 << q)]
                    });
                assert_eq!(alg.f(x, y), f_expected);
                let g_expected: Mask = atoms_of(x)
                    .flat_map(|p| atoms_of(y).map(move |q| (p, q)))
                    .fold(alg.top(), |acc, (p, q)| acc & g_full[(1usize << p) << m | (1 << q)]);
                assert_eq!(alg.g(x, y), g_expected);
            }
        }
    }

    #[test]
    fn validate_flags_broken_normality() {
        // f(0,1) = 1 violates P-normality with witness (0,1)
        let mut f_full = vec![0u32; 4];
        f_full[0 << 1 | 1] = 1;
        let g_full = vec![1u32; 4];
        let reports = validate_operators(1, &f_full, &g_full).unwrap();
        let norm = reports.iter().find(|r| r.axiom == OperatorLaw::PossNormality).unwrap();
        assert!(!norm.holds);
        assert_eq!(norm.witness(), Some(&[0, 1][..]));
    }

    #[test]
    fn validate_four_element_tables() {
        let a1 = crate::catalog::fourelem_a1();
        let (f_full, g_full) = a1.full_tables();
        for r in validate_operators(2, &f_full, &g_full).unwrap() {
            assert!(r.holds, "{} fails", r.axiom);
        }
        let t1 = crate::catalog::table1();
        let (f_full, g_full) = t1.full_tables();
        for r in validate_operators(3, &f_full, &g_full).unwrap() {
            assert!(r.holds, "{} fails", r.axiom);
        }
    }

    #[test]
    fn monotone_and_antitone() {
        let alg = crate::catalog::nonrep8();
        for x in alg.elements() {
            for y in alg.elements() {
                for x2 in alg.elements() {
                    for y2 in alg.elements() {
                        if x & x2 == x && y & y2 == y {
                            // x <= x2, y <= y2
                            assert_eq!(alg.f(x, y) & alg.f(x2, y2), alg.f(x, y));
                            assert_eq!(alg.g(x2, y2) & alg.g(x, y), alg.g(x2, y2));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn boundary_values() {
        let alg = crate::catalog::nonrep8();
        for x in alg.elements() {
            assert_eq!(alg.f(0, x), 0);
            assert_eq!(alg.f(x, 0), 0);
            assert_eq!(alg.g(0, x), alg.top());
            assert_eq!(alg.g(x, 0), alg.top());
        }
    }

    #[test]
    fn ultrafilter_membership() {
        let alg = crate::catalog::table1();
        let ults = alg.ultrafilters();
        assert_eq!(ults.len(), 3);
        for u in &ults {
            for x in alg.elements() {
                assert_eq!(u.contains(x), x >> u.atom & 1 == 1);
            }
        }
    }

    #[test]
    fn parse_and_print_round_trip() {
        for alg in [
            crate::catalog::qnots_a0(),
            crate::catalog::fourelem_a2(),
            crate::catalog::nonrep8(),
        ] {
            let text = alg.to_text();
            assert_eq!(PSAlgebra::parse_str(&text).unwrap(), alg);
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(PSAlgebra::parse_str("psalg 1\nf 0 0 1\n"), Err(Error::Parse { .. })));
        let dup = "psalg 1\nf 0 0 1\nf 0 0 1\ng 0 0 0\n";
        assert!(matches!(PSAlgebra::parse_str(dup), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(PSAlgebra::parse_str("psalg 6\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            PSAlgebra::parse_str("psalg 1\nf 0 0 2\ng 0 0 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn isomorphism_by_atom_permutation() {
        // swap the two atoms of the asymmetric four-element algebra
        let a1 = crate::catalog::fourelem_a1();
        let swapped = PSAlgebra::new(
            2,
            vec![3, 3, 3, 3],
            // g'(p,q) = image of g(swap p, swap q) under the bit swap
            vec![
                1, // g'(a,a) = swap(g(b,b)) = swap(2) = 1
                0, // g'(a,b) = swap(g(b,a)) = 0
                1, // g'(b,a) = swap(g(a,b)) = swap(2) = 1
                0, // g'(b,b) = swap(g(a,a)) = 0
            ],
        )
        .unwrap();
        assert_eq!(a1.isomorphic_to(&swapped), Some(vec![1, 0]));
        assert!(a1.isomorphic_to(&crate::catalog::fourelem_a2()).is_none());
    }
}
