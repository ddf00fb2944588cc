//! Bounded and co-bounded morphisms between 3-frames, middle-argument form.
//!
//! For a map `p` from the points of `F = (U,B)` to the points of `G = (V,B')`:
//!
//! * bounded: forth `B(x,y,z) -> B'(px,py,pz)`; back `B'(u, px, v) ->
//!   exists y,z with p(y)=u, p(z)=v and B(y,x,z)`.
//! * co-bounded: the same two conditions with both relations complemented.
//!
//! Only the middle-argument back condition is implemented; the generic
//! last-argument variant is out of scope here.

use std::fmt;

use crate::error::{Error, Result};
use crate::frame::Frame;

/// A total map between point sets. Surjectivity is recorded as a derived
/// flag, not required.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointMap {
    src_n: usize,
    dst_n: usize,
    map: Vec<usize>,
}

impl PointMap {
    pub fn new(src_n: usize, dst_n: usize, map: Vec<usize>) -> Result<PointMap> {
        if map.len() != src_n {
            return Err(Error::Invalid(format!(
                "map must assign all {src_n} source points, got {}",
                map.len()
            )));
        }
        for &v in &map {
            if v >= dst_n {
                return Err(Error::Index { index: v, bound: dst_n });
            }
        }
        Ok(PointMap { src_n, dst_n, map })
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn src_n(&self) -> usize {
        self.src_n
    }

    pub fn dst_n(&self) -> usize {
        self.dst_n
    }

    pub fn is_surjective(&self) -> bool {
        (0..self.dst_n).all(|v| self.map.contains(&v))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismMode {
    Bounded,
    CoBounded,
}

impl MorphismMode {
    pub fn name(self) -> &'static str {
        match self {
            MorphismMode::Bounded => "bounded",
            MorphismMode::CoBounded => "cobounded",
        }
    }
}

impl fmt::Display for MorphismMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which half of the morphism definition failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismCondition {
    /// Witness `(x,y,z)`: source triple whose image is missing.
    Forth,
    /// Witness `(x,u,v)`: source point and target pair with no preimage
    /// triple.
    Back,
}

impl MorphismCondition {
    pub fn name(self) -> &'static str {
        match self {
            MorphismCondition::Forth => "forth",
            MorphismCondition::Back => "back",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismFailure {
    pub condition: MorphismCondition,
    pub witness: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismReport {
    pub mode: MorphismMode,
    pub holds: bool,
    pub failure: Option<MorphismFailure>,
}

/// Check the forth and back conditions over all tuples; forth is scanned
/// first, each in lexicographic order, so the reported failure is the least
/// one of the first failing condition.
pub fn check_morphism(
    src: &Frame,
    dst: &Frame,
    map: &PointMap,
    mode: MorphismMode,
) -> Result<MorphismReport> {
    if map.src_n() != src.n() {
        return Err(Error::Invalid(format!(
            "map has {} source points, frame has {}",
            map.src_n(),
            src.n()
        )));
    }
    if map.dst_n() != dst.n() {
        return Err(Error::Invalid(format!(
            "map has {} target points, frame has {}",
            map.dst_n(),
            dst.n()
        )));
    }
    // for co-bounded morphisms both relations are read complemented
    let rel_src = |x: usize, y: usize, z: usize| match mode {
        MorphismMode::Bounded => src.contains(x, y, z),
        MorphismMode::CoBounded => !src.contains(x, y, z),
    };
    let rel_dst = |x: usize, y: usize, z: usize| match mode {
        MorphismMode::Bounded => dst.contains(x, y, z),
        MorphismMode::CoBounded => !dst.contains(x, y, z),
    };
    let n = src.n();
    let n_dst = dst.n();

    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if rel_src(x, y, z) && !rel_dst(map.apply(x), map.apply(y), map.apply(z)) {
                    return Ok(MorphismReport {
                        mode,
                        holds: false,
                        failure: Some(MorphismFailure {
                            condition: MorphismCondition::Forth,
                            witness: vec![x as u32, y as u32, z as u32],
                        }),
                    });
                }
            }
        }
    }
    for x in 0..n {
        for u in 0..n_dst {
            for v in 0..n_dst {
                if !rel_dst(u, map.apply(x), v) {
                    continue;
                }
                let mut witnessed = false;
                'search: for y in 0..n {
                    if map.apply(y) != u {
                        continue;
                    }
                    for z in 0..n {
                        if map.apply(z) == v && rel_src(y, x, z) {
                            witnessed = true;
                            break 'search;
                        }
                    }
                }
                if !witnessed {
                    return Ok(MorphismReport {
                        mode,
                        holds: false,
                        failure: Some(MorphismFailure {
                            condition: MorphismCondition::Back,
                            witness: vec![x as u32, u as u32, v as u32],
                        }),
                    });
                }
            }
        }
    }
    Ok(MorphismReport { mode, holds: true, failure: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::{build_frame, FrameKind};

    #[test]
    fn constant_map_to_empty_point_is_co_bounded() {
        let src = build_frame(FrameKind::Identity, 2, None).unwrap();
        let dst = Frame::empty(1).unwrap();
        let map = PointMap::new(2, 1, vec![0, 0]).unwrap();
        let r = check_morphism(&src, &dst, &map, MorphismMode::CoBounded).unwrap();
        assert!(r.holds);
        assert!(map.is_surjective());
    }

    #[test]
    fn identity_map_is_bounded() {
        for frame in [
            build_frame(FrameKind::Chain, 4, None).unwrap(),
            crate::catalog::wnot3(),
        ] {
            let n = frame.n();
            let map = PointMap::new(n, n, (0..n).collect()).unwrap();
            assert!(check_morphism(&frame, &frame, &map, MorphismMode::Bounded).unwrap().holds);
        }
    }

    #[test]
    fn parity_map_fails_on_a_finite_window() {
        // the chain 0..5 mapped onto two points by parity: the back condition
        // needs a neighbour outside the window and fails at the boundary
        let src = build_frame(FrameKind::Chain, 6, None).unwrap();
        let dst = build_frame(FrameKind::Universal, 2, None).unwrap();
        let map = PointMap::new(6, 2, vec![0, 1, 0, 1, 0, 1]).unwrap();
        let r = check_morphism(&src, &dst, &map, MorphismMode::Bounded).unwrap();
        assert!(!r.holds);
        let failure = r.failure.unwrap();
        assert_eq!(failure.condition, MorphismCondition::Back);
        // least failing tuple: at x = 0 there is no odd point at or below 0
        assert_eq!(failure.witness, vec![0, 1, 1]);
    }

    #[test]
    fn forth_is_vacuous_into_a_universal_target() {
        let dst = build_frame(FrameKind::Universal, 2, None).unwrap();
        for bits in 0u32..256 {
            let mut src = Frame::empty(2).unwrap();
            for b in 0..8 {
                if bits >> b & 1 == 1 {
                    src.insert(b >> 2 & 1, b >> 1 & 1, b & 1);
                }
            }
            let map = PointMap::new(2, 2, vec![0, 1]).unwrap();
            let r = check_morphism(&src, &dst, &map, MorphismMode::Bounded).unwrap();
            if let Some(f) = r.failure {
                assert_eq!(f.condition, MorphismCondition::Back);
            }
        }
    }

    #[test]
    fn co_bounded_equals_bounded_on_complements() {
        // dual-route oracle: the direct co-bounded check must agree with the
        // bounded check on the complemented frames
        let maps = [
            PointMap::new(3, 2, vec![0, 1, 0]).unwrap(),
            PointMap::new(3, 2, vec![0, 0, 1]).unwrap(),
        ];
        for bits in (0u32..1 << 12).step_by(7) {
            let mut src = Frame::empty(3).unwrap();
            for b in 0..12 {
                if bits >> b & 1 == 1 {
                    let t = [(0, 0, 1), (0, 1, 2), (1, 2, 0), (2, 1, 0), (1, 1, 1), (2, 2, 2),
                             (0, 2, 1), (1, 0, 2), (2, 0, 1), (0, 1, 1), (1, 2, 2), (2, 0, 0)][b];
                    src.insert(t.0, t.1, t.2);
                }
            }
            for dst_bits in 0u32..256 {
                if dst_bits % 11 != 0 {
                    continue;
                }
                let mut dst = Frame::empty(2).unwrap();
                for b in 0..8 {
                    if dst_bits >> b & 1 == 1 {
                        dst.insert(b >> 2 & 1, b >> 1 & 1, b & 1);
                    }
                }
                for map in &maps {
                    let direct =
                        check_morphism(&src, &dst, map, MorphismMode::CoBounded).unwrap();
                    let via_complement = check_morphism(
                        &src.complement(),
                        &dst.complement(),
                        map,
                        MorphismMode::Bounded,
                    )
                    .unwrap();
                    assert_eq!(direct.holds, via_complement.holds);
                    assert_eq!(
                        direct.failure.map(|f| (f.condition, f.witness)),
                        via_complement.failure.map(|f| (f.condition, f.witness))
                    );
                }
            }
        }
    }

    #[test]
    fn bounded_morphisms_compose() {
        let frames: Vec<Frame> = (0u32..256)
            .step_by(5)
            .map(|bits| {
                let mut f = Frame::empty(2).unwrap();
                for b in 0..8 {
                    if bits >> b & 1 == 1 {
                        f.insert(b >> 2 & 1, b >> 1 & 1, b & 1);
                    }
                }
                f
            })
            .collect();
        let maps: Vec<PointMap> = (0..4)
            .map(|bits| PointMap::new(2, 2, vec![bits & 1, bits >> 1 & 1]).unwrap())
            .collect();
        let mut composed_checked = 0;
        for f in &frames {
            for g in &frames {
                for h in &frames {
                    for p in &maps {
                        if !check_morphism(f, g, p, MorphismMode::Bounded).unwrap().holds {
                            continue;
                        }
                        for q in &maps {
                            if !check_morphism(g, h, q, MorphismMode::Bounded).unwrap().holds {
                                continue;
                            }
                            let composed = PointMap::new(
                                2,
                                2,
                                (0..2).map(|x| q.apply(p.apply(x))).collect(),
                            )
                            .unwrap();
                            assert!(
                                check_morphism(f, h, &composed, MorphismMode::Bounded)
                                    .unwrap()
                                    .holds,
                                "composition fails for {f:?} -> {g:?} -> {h:?}"
                            );
                            composed_checked += 1;
                        }
                    }
                }
            }
        }
        assert!(composed_checked > 0);
    }

    #[test]
    fn map_validation() {
        assert!(PointMap::new(2, 1, vec![0]).is_err());
        assert!(PointMap::new(2, 1, vec![0, 1]).is_err());
        let src = build_frame(FrameKind::Identity, 2, None).unwrap();
        let dst = build_frame(FrameKind::Identity, 3, None).unwrap();
        let wrong = PointMap::new(3, 3, vec![0, 1, 2]).unwrap();
        assert!(check_morphism(&src, &dst, &wrong, MorphismMode::Bounded).is_err());
    }
}
