//! Abstract betweenness-algebra axioms, classification, the discriminator
//! check, products, and the non-representability obstruction.
//!
//! All axioms are universally quantified over the full element tables; the
//! guards of the conditional axioms (`x != 0`, `a.b != 0`, ...) are applied
//! exactly as written, never replaced by the unguarded closure.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{atoms_of, Mask, PSAlgebra, MAX_ATOMS};
use crate::error::{Error, Result};
use crate::report::AxiomReport;

/// The algebra-level axioms.
///
/// * `ABT0`: `x <= f(x,x)`
/// * `ABT1f`: `f(x,y) <= f(y,x)`
/// * `ABT1g`: `g(x,y) <= g(y,x)`
/// * `ABT2`: `y.f(x,z) <= f(x.f(x,y), z)`
/// * `ABT3`: `f(x, g(x,-y).y) <= y`
/// * `wMIA`: `x,y != 0 -> g(x,y) <= f(x,y)`
/// * `ABTW`: `a != 0 -> g(a,a) <= a`
/// * `ABT2s`: `b != 0 -> a <= f(a,b)`
/// * `5-for-d`: `a.b != 0 -> g(a,b) <= f(a,b)`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraAxiom {
    Abt0,
    Abt1f,
    Abt1g,
    Abt2,
    Abt3,
    WMia,
    Abtw,
    Abt2s,
    FiveForD,
}

impl AlgebraAxiom {
    pub const ALL: [AlgebraAxiom; 9] = [
        AlgebraAxiom::Abt0,
        AlgebraAxiom::Abt1f,
        AlgebraAxiom::Abt1g,
        AlgebraAxiom::Abt2,
        AlgebraAxiom::Abt3,
        AlgebraAxiom::WMia,
        AlgebraAxiom::Abtw,
        AlgebraAxiom::Abt2s,
        AlgebraAxiom::FiveForD,
    ];

    /// The axioms defining a b-algebra.
    pub const B_ALGEBRA: [AlgebraAxiom; 6] = [
        AlgebraAxiom::Abt0,
        AlgebraAxiom::Abt1f,
        AlgebraAxiom::Abt1g,
        AlgebraAxiom::Abt2,
        AlgebraAxiom::Abt3,
        AlgebraAxiom::WMia,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraAxiom::Abt0 => "ABT0",
            AlgebraAxiom::Abt1f => "ABT1f",
            AlgebraAxiom::Abt1g => "ABT1g",
            AlgebraAxiom::Abt2 => "ABT2",
            AlgebraAxiom::Abt3 => "ABT3",
            AlgebraAxiom::WMia => "wMIA",
            AlgebraAxiom::Abtw => "ABTW",
            AlgebraAxiom::Abt2s => "ABT2s",
            AlgebraAxiom::FiveForD => "5-for-d",
        }
    }

    /// Whether the axiom mentions only the possibility operator; these can
    /// filter `f` tables before any `g` table is enumerated.
    pub fn f_only(self) -> bool {
        matches!(
            self,
            AlgebraAxiom::Abt0 | AlgebraAxiom::Abt1f | AlgebraAxiom::Abt2 | AlgebraAxiom::Abt2s
        )
    }
}

impl fmt::Display for AlgebraAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraAxiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<AlgebraAxiom> {
        AlgebraAxiom::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s) || (s.eq_ignore_ascii_case("FiveForD") && *a == AlgebraAxiom::FiveForD))
            .ok_or_else(|| Error::Invalid(format!("unknown algebra axiom `{s}`")))
    }
}

#[inline]
fn leq(x: Mask, y: Mask) -> bool {
    x & !y == 0
}

fn violation(alg: &PSAlgebra, axiom: AlgebraAxiom) -> Option<Vec<u32>> {
    let size = 1u32 << alg.atom_count();
    match axiom {
        AlgebraAxiom::Abt0 => (0..size).find(|&x| !leq(x, alg.f(x, x))).map(|x| vec![x]),
        AlgebraAxiom::Abtw => (1..size).find(|&a| !leq(alg.g(a, a), a)).map(|a| vec![a]),
        AlgebraAxiom::Abt1f
        | AlgebraAxiom::Abt1g
        | AlgebraAxiom::Abt3
        | AlgebraAxiom::WMia
        | AlgebraAxiom::Abt2s
        | AlgebraAxiom::FiveForD => {
            for x in 0..size {
                for y in 0..size {
                    let bad = match axiom {
                        AlgebraAxiom::Abt1f => !leq(alg.f(x, y), alg.f(y, x)),
                        AlgebraAxiom::Abt1g => !leq(alg.g(x, y), alg.g(y, x)),
                        AlgebraAxiom::Abt3 => {
                            let inner = alg.g(x, alg.top() & !y) & y;
                            !leq(alg.f(x, inner), y)
                        }
                        AlgebraAxiom::WMia => {
                            x != 0 && y != 0 && !leq(alg.g(x, y), alg.f(x, y))
                        }
                        AlgebraAxiom::Abt2s => y != 0 && !leq(x, alg.f(x, y)),
                        AlgebraAxiom::FiveForD => {
                            x & y != 0 && !leq(alg.g(x, y), alg.f(x, y))
                        }
                        _ => unreachable!(),
                    };
                    if bad {
                        return Some(vec![x, y]);
                    }
                }
            }
            None
        }
        AlgebraAxiom::Abt2 => {
            for x in 0..size {
                for y in 0..size {
                    for z in 0..size {
                        if !leq(y & alg.f(x, z), alg.f(x & alg.f(x, y), z)) {
                            return Some(vec![x, y, z]);
                        }
                    }
                }
            }
            None
        }
    }
}

pub fn check_algebra_axiom(alg: &PSAlgebra, axiom: AlgebraAxiom) -> AxiomReport<AlgebraAxiom> {
    match violation(alg, axiom) {
        None => AxiomReport::passed(axiom),
        Some(w) => AxiomReport::failed(axiom, w),
    }
}

pub fn algebra_axiom_holds(alg: &PSAlgebra, axiom: AlgebraAxiom) -> bool {
    violation(alg, axiom).is_none()
}

/// Algebra classification, strongest label first; cumulative like the frame
/// classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraClass {
    Strong,
    BAlgebra,
    Weak,
    PsOnly,
}

impl AlgebraClass {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraClass::Strong => "strong b-algebra",
            AlgebraClass::BAlgebra => "b-algebra",
            AlgebraClass::Weak => "weak b-algebra",
            AlgebraClass::PsOnly => "PS-algebra-only",
        }
    }

    pub fn is_strong(self) -> bool {
        self == AlgebraClass::Strong
    }

    pub fn is_b_algebra(self) -> bool {
        matches!(self, AlgebraClass::Strong | AlgebraClass::BAlgebra)
    }

    pub fn is_weak(self) -> bool {
        !matches!(self, AlgebraClass::PsOnly)
    }
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Most specific label: strong = ABT1f, ABT1g, ABT3, wMIA, ABT2s; b-algebra
/// = ABT0-ABT3 (both symmetry forms) plus wMIA; weak = ABT0-ABT2 plus ABTW.
/// An algebra failing wMIA is never labeled weak/b/strong even if it passes
/// every other axiom (report the axiom vector for those instead).
pub fn classify_algebra(alg: &PSAlgebra) -> AlgebraClass {
    let holds = |a| algebra_axiom_holds(alg, a);
    let wmia = holds(AlgebraAxiom::WMia);
    let strong = wmia
        && holds(AlgebraAxiom::Abt1f)
        && holds(AlgebraAxiom::Abt1g)
        && holds(AlgebraAxiom::Abt3)
        && holds(AlgebraAxiom::Abt2s);
    let b = AlgebraAxiom::B_ALGEBRA.into_iter().all(holds);
    let weak = wmia
        && holds(AlgebraAxiom::Abt0)
        && holds(AlgebraAxiom::Abt1f)
        && holds(AlgebraAxiom::Abt1g)
        && holds(AlgebraAxiom::Abt2)
        && holds(AlgebraAxiom::Abtw);
    // the implication chain is asserted on every classified algebra
    debug_assert!(!strong || b);
    debug_assert!(!b || weak);
    if strong {
        AlgebraClass::Strong
    } else if b {
        AlgebraClass::BAlgebra
    } else if weak {
        AlgebraClass::Weak
    } else {
        AlgebraClass::PsOnly
    }
}

/// Check that `d(a) = f(a,a) + -g(a,a)` is the unary discriminator:
/// `d(0) = 0` and `d(a) = 1` for every `a != 0`.
pub fn discriminator_check(alg: &PSAlgebra) -> AxiomReport<&'static str> {
    const TAG: &str = "discriminator";
    let top = alg.top();
    for a in alg.elements() {
        let d = alg.f(a, a) | (top & !alg.g(a, a));
        let expected = if a == 0 { 0 } else { top };
        if d != expected {
            return AxiomReport::failed(TAG, vec![a]);
        }
    }
    AxiomReport::passed(TAG)
}

/// Product of two algebras: atoms are the disjoint union (left atoms keep
/// their indices, right atoms are offset by `left.atom_count()`), and both
/// operators act componentwise on the pair decomposition.
pub fn product_algebra(left: &PSAlgebra, right: &PSAlgebra) -> Result<PSAlgebra> {
    let m1 = left.atom_count();
    let m2 = right.atom_count();
    let m = m1 + m2;
    if m > MAX_ATOMS {
        return Err(Error::CapExceeded(format!(
            "product would have {m} atoms, cap is {MAX_ATOMS}"
        )));
    }
    let lift_left = |mask: Mask| mask;
    let lift_right = |mask: Mask| mask << m1;
    let left_top = left.top();
    let right_top = lift_right(right.top());
    let mut f_entries = Vec::with_capacity(m * m);
    let mut g_entries = Vec::with_capacity(m * m);
    for p in 0..m {
        for q in 0..m {
            let (f, g) = match (p < m1, q < m1) {
                (true, true) => (
                    lift_left(left.f_atom(p, q)),
                    lift_left(left.g_atom(p, q)) | right_top,
                ),
                (false, false) => (
                    lift_right(right.f_atom(p - m1, q - m1)),
                    lift_right(right.g_atom(p - m1, q - m1)) | left_top,
                ),
                // mixed pairs: f normal in the missing coordinate, g co-normal
                _ => (0, left_top | right_top),
            };
            f_entries.push(f);
            g_entries.push(g);
        }
    }
    PSAlgebra::new(m, f_entries, g_entries)
}

/// A certificate that an algebra cannot embed into the full complex algebra
/// of any b-frame: elements `a, c` with `a != 0`, `g(a,a) = a`, `c != 0`,
/// `c <= f(a,c)` and `g(a,c) = 0`. Under an embedding the image of `a` would
/// have to be a singleton `{x}` while every point of the image of `c` forces
/// `<x,x,.>`-triples, putting `x` into the image of `g(a,c) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionCertificate {
    pub a: Mask,
    pub c: Mask,
}

impl ObstructionCertificate {
    /// Re-verify the four facts against the algebra.
    pub fn verify(&self, alg: &PSAlgebra) -> bool {
        self.a != 0
            && alg.g(self.a, self.a) == self.a
            && self.c != 0
            && leq(self.c, alg.f(self.a, self.c))
            && alg.g(self.a, self.c) == 0
    }
}

/// Scan for the least obstruction pair, ascending masks, `a` outer.
pub fn representability_obstruction(alg: &PSAlgebra) -> Option<ObstructionCertificate> {
    for a in 1..(1u32 << alg.atom_count()) {
        if alg.g(a, a) != a {
            continue;
        }
        for c in 1..(1u32 << alg.atom_count()) {
            if leq(c, alg.f(a, c)) && alg.g(a, c) == 0 {
                return Some(ObstructionCertificate { a, c });
            }
        }
    }
    None
}

/// All atoms of a mask are atoms of the algebra; used by the theorem checks.
pub fn is_atom(alg: &PSAlgebra, x: Mask) -> bool {
    x != 0 && x < (1 << alg.atom_count()) && atoms_of(x).count() == 1
}
