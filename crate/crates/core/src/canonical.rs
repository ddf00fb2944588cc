//! Canonical frames and canonical extensions.
//!
//! The ultrafilters of a finite algebra are the principal filters of its
//! atoms. On them two ternary relations live, middle argument distinguished:
//!
//! * `Q_f(u1,u2,u3)` iff `f[u1 x u3]` is contained in `u2`, and
//! * `S_g(u1,u2,u3)` iff `g[u1 x u3]` meets `u2`.
//!
//! On a finite algebra monotonicity collapses the image conditions to the
//! atom tests `q <= f(p,r)` and `q <= g(p,r)`; both routes are computed and
//! their agreement is asserted, the fast path is never trusted alone.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Mask, PSAlgebra, Ultrafilter};
use crate::complex::{complex_op, complex_pair_to_psalgebra, ComplexMode, PointSet, TABULATION_CAP};
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::report::AxiomReport;

/// The canonical frame of an algebra: one point per ultrafilter, relations
/// `Q` (from the possibility operator) and `S` (from the sufficiency
/// operator) stored as frames on the same points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalFrame {
    pub ultrafilters: Vec<Ultrafilter>,
    pub q: Frame,
    pub s: Frame,
}

/// Definitional route: quantify over the full ultrafilter images.
fn canonical_frame_definitional(alg: &PSAlgebra) -> CanonicalFrame {
    let m = alg.atom_count();
    let mut q = Frame::empty(m).expect("atom cap is below the frame cap");
    let mut s = Frame::empty(m).expect("atom cap is below the frame cap");
    let members = |atom: usize| {
        let size = 1u32 << m;
        (0..size).filter(move |x| x >> atom & 1 == 1)
    };
    for p in 0..m {
        for r in 0..m {
            for mid in 0..m {
                let mut contained = true;
                let mut meets = false;
                for x in members(p) {
                    for y in members(r) {
                        if alg.f(x, y) >> mid & 1 == 0 {
                            contained = false;
                        }
                        if alg.g(x, y) >> mid & 1 == 1 {
                            meets = true;
                        }
                    }
                }
                if contained {
                    q.insert(p, mid, r);
                }
                if meets {
                    s.insert(p, mid, r);
                }
            }
        }
    }
    CanonicalFrame { ultrafilters: alg.ultrafilters(), q, s }
}

/// Build the canonical frame. The fast path reads the atom tables directly;
/// it is checked against the definitional ultrafilter computation.
pub fn canonical_frame(alg: &PSAlgebra) -> CanonicalFrame {
    let m = alg.atom_count();
    let mut q = Frame::empty(m).expect("atom cap is below the frame cap");
    let mut s = Frame::empty(m).expect("atom cap is below the frame cap");
    for p in 0..m {
        for r in 0..m {
            let f_val = alg.f_atom(p, r);
            let g_val = alg.g_atom(p, r);
            for mid in 0..m {
                if f_val >> mid & 1 == 1 {
                    q.insert(p, mid, r);
                }
                if g_val >> mid & 1 == 1 {
                    s.insert(p, mid, r);
                }
            }
        }
    }
    let fast = CanonicalFrame { ultrafilters: alg.ultrafilters(), q, s };
    assert_eq!(fast, canonical_frame_definitional(alg), "fast path disagrees with the definition");
    fast
}

/// Properties of canonical frames mirroring the frame axioms, plus the
/// containment `S ⊆ Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfProperty {
    Bt0Cf,
    Bt1CfF,
    Bt1CfG,
    Bt2Cf,
    Bt3Cf,
    Bt2sCf,
    BtwCf,
    SsubQ,
}

impl CfProperty {
    pub const ALL: [CfProperty; 8] = [
        CfProperty::Bt0Cf,
        CfProperty::Bt1CfF,
        CfProperty::Bt1CfG,
        CfProperty::Bt2Cf,
        CfProperty::Bt3Cf,
        CfProperty::Bt2sCf,
        CfProperty::BtwCf,
        CfProperty::SsubQ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CfProperty::Bt0Cf => "BT0Cf",
            CfProperty::Bt1CfF => "BT1Cf_f",
            CfProperty::Bt1CfG => "BT1Cf_g",
            CfProperty::Bt2Cf => "BT2Cf",
            CfProperty::Bt3Cf => "BT3Cf",
            CfProperty::Bt2sCf => "BT2sCf",
            CfProperty::BtwCf => "BTWCf",
            CfProperty::SsubQ => "SsubQ",
        }
    }
}

impl fmt::Display for CfProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CfProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<CfProperty> {
        CfProperty::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Invalid(format!("unknown canonical-frame property `{s}`")))
    }
}

/// Check one property over all ultrafilter triples; least witness on failure.
pub fn check_cf_property(alg: &PSAlgebra, prop: CfProperty) -> AxiomReport<CfProperty> {
    let cf = canonical_frame(alg);
    let m = alg.atom_count();
    let q = |a: usize, b: usize, c: usize| cf.q.contains(a, b, c);
    let s = |a: usize, b: usize, c: usize| cf.s.contains(a, b, c);
    match prop {
        CfProperty::Bt0Cf => {
            for u in 0..m {
                if !q(u, u, u) {
                    return AxiomReport::failed(prop, vec![u as u32]);
                }
            }
        }
        CfProperty::Bt2sCf => {
            for u1 in 0..m {
                for u2 in 0..m {
                    if !q(u1, u1, u2) {
                        return AxiomReport::failed(prop, vec![u1 as u32, u2 as u32]);
                    }
                }
            }
        }
        CfProperty::BtwCf => {
            for u1 in 0..m {
                for u2 in 0..m {
                    if u1 != u2 && s(u1, u2, u1) {
                        return AxiomReport::failed(prop, vec![u1 as u32, u2 as u32]);
                    }
                }
            }
        }
        _ => {
            for u1 in 0..m {
                for u2 in 0..m {
                    for u3 in 0..m {
                        let bad = match prop {
                            CfProperty::Bt1CfF => q(u1, u2, u3) && !q(u3, u2, u1),
                            CfProperty::Bt1CfG => s(u1, u2, u3) && !s(u3, u2, u1),
                            CfProperty::Bt2Cf => q(u1, u2, u3) && !q(u1, u1, u2),
                            CfProperty::Bt3Cf => u2 != u3 && q(u1, u2, u3) && s(u1, u3, u2),
                            CfProperty::SsubQ => s(u1, u2, u3) && !q(u1, u2, u3),
                            _ => unreachable!(),
                        };
                        if bad {
                            return AxiomReport::failed(
                                prop,
                                vec![u1 as u32, u2 as u32, u3 as u32],
                            );
                        }
                    }
                }
            }
        }
    }
    AxiomReport::passed(prop)
}

/// The canonical extension: the complex algebra over the canonical frame,
/// possibility from `Q`, sufficiency from `S`, plus the Stone map sending an
/// element to the set of ultrafilters containing it.
#[derive(Clone, Debug)]
pub struct CanonicalExtension {
    pub ext: PSAlgebra,
    /// `stone[x]` is the ultrafilter-set mask of element `x`.
    pub stone: Vec<Mask>,
}

pub fn canonical_extension(alg: &PSAlgebra) -> Result<CanonicalExtension> {
    let m = alg.atom_count();
    if m > TABULATION_CAP {
        return Err(Error::CapExceeded(format!(
            "canonical extension tabulation needs m <= {TABULATION_CAP}"
        )));
    }
    let cf = canonical_frame(alg);
    let ext = complex_pair_to_psalgebra(&cf.q, &cf.s)?;
    let stone = alg
        .elements()
        .map(|x| {
            cf.ultrafilters
                .iter()
                .enumerate()
                .filter(|(_, u)| u.contains(x))
                .fold(0, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    Ok(CanonicalExtension { ext, stone })
}

/// Verify that the Stone map is an operator-preserving embedding:
/// `stone(f(x,y)) = poss_Q(stone x, stone y)` and
/// `stone(g(x,y)) = suff_S(stone x, stone y)` for all pairs.
pub fn verify_stone_embedding(alg: &PSAlgebra) -> Result<AxiomReport<&'static str>> {
    const TAG: &str = "stone-embedding";
    let m = alg.atom_count();
    if m > TABULATION_CAP {
        return Err(Error::CapExceeded(format!(
            "stone embedding check needs m <= {TABULATION_CAP}"
        )));
    }
    let ce = canonical_extension(alg)?;
    let cf = canonical_frame(alg);
    // injectivity and Boolean structure
    for x in alg.elements() {
        for y in alg.elements() {
            if x != y && ce.stone[x as usize] == ce.stone[y as usize] {
                return Ok(AxiomReport::failed(TAG, vec![x, y]));
            }
        }
    }
    for x in alg.elements() {
        for y in alg.elements() {
            let sx = ce.stone[x as usize] as PointSet;
            let sy = ce.stone[y as usize] as PointSet;
            let f_ok = ce.stone[alg.f(x, y) as usize]
                == complex_op(&cf.q, ComplexMode::Poss, sx, sy) as Mask;
            let g_ok = ce.stone[alg.g(x, y) as usize]
                == complex_op(&cf.s, ComplexMode::Suff, sx, sy) as Mask;
            if !f_ok || !g_ok {
                return Ok(AxiomReport::failed(TAG, vec![x, y]));
            }
        }
    }
    Ok(AxiomReport::passed(TAG))
}

/// Mixed-algebra test: the two canonical relations coincide.
pub fn is_mia(alg: &PSAlgebra) -> bool {
    let cf = canonical_frame(alg);
    cf.q == cf.s
}

/// Check that a frame embeds into the canonical frame of its own complex
/// algebra via `k(x) = up({x})`: `B(x,y,z)` iff `Q(kx,ky,kz)` iff
/// `S(kx,ky,kz)` for all triples.
pub fn frame_ultrafilter_embedding(frame: &Frame) -> Result<AxiomReport<&'static str>> {
    const TAG: &str = "frame-ultrafilter-embedding";
    let alg = crate::complex::complex_to_psalgebra(frame)?;
    let cf = canonical_frame(&alg);
    let n = frame.n();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let b = frame.contains(x, y, z);
                if b != cf.q.contains(x, y, z) || b != cf.s.contains(x, y, z) {
                    return Ok(AxiomReport::failed(TAG, vec![x as u32, y as u32, z as u32]));
                }
            }
        }
    }
    Ok(AxiomReport::passed(TAG))
}
