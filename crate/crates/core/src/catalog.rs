//! Canonical example structures used by the golden checks, the fixtures and
//! the test suites. Atom indices follow the letter order a = 0, b = 1, c = 2,
//! d = 3; element masks are atom-set masks.

use crate::algebra::PSAlgebra;
use crate::frame::Frame;

/// Two-element algebra with `f(1,1) = 1` and `g(1,1) = 1`; the full complex
/// algebra of the one-point frame, and the smallest mixed algebra.
pub fn qnots_a0() -> PSAlgebra {
    PSAlgebra::new(1, vec![1], vec![1]).expect("fixed tables")
}

/// Two-element algebra with `f(1,1) = 1` and `g(1,1) = 0`; a strong
/// b-algebra whose canonical relations differ (`Q` holds on the unique
/// triple, `S` does not).
pub fn qnots_a1() -> PSAlgebra {
    PSAlgebra::new(1, vec![1], vec![0]).expect("fixed tables")
}

/// Four-element algebra with symmetric `f` (constantly 1 on nonzero pairs)
/// and asymmetric `g` (`g(a,b) = b` but `g(b,a) = 0`).
pub fn fourelem_a1() -> PSAlgebra {
    PSAlgebra::new(2, vec![3, 3, 3, 3], vec![0, 2, 0, 2]).expect("fixed tables")
}

/// Four-element algebra with asymmetric `f` (`f(a,b) = a` but `f(b,a) = 1`)
/// and symmetric `g` (constantly 0 on nonzero pairs).
pub fn fourelem_a2() -> PSAlgebra {
    PSAlgebra::new(2, vec![1, 1, 3, 3], vec![0, 0, 0, 0]).expect("fixed tables")
}

/// Eight-element algebra on atoms a, b, c that passes the strong axioms and
/// 5-for-d but fails wMIA: `g(b,c) = a` is not below `f(b,c) = b+c`.
pub fn table1() -> PSAlgebra {
    PSAlgebra::new(
        3,
        vec![
            7, 3, 5, // f(a,a) f(a,b) f(a,c)
            3, 7, 6, // f(b,a) f(b,b) f(b,c)
            5, 6, 7, // f(c,a) f(c,b) f(c,c)
        ],
        vec![
            0, 0, 0, // g(a,a) g(a,b) g(a,c)
            0, 0, 1, // g(b,a) g(b,b) g(b,c)
            0, 1, 0, // g(c,a) g(c,b) g(c,c)
        ],
    )
    .expect("fixed tables")
}

/// Eight-element b-algebra on atoms a, b, c that is not representable: it
/// carries the obstruction `g(a,a) = a`, `f(a,c) = 1`, `g(a,c) = 0`.
pub fn nonrep8() -> PSAlgebra {
    PSAlgebra::new(
        3,
        vec![
            1, 7, 7, // f(a,a) f(a,b) f(a,c)
            7, 2, 6, // f(b,a) f(b,b) f(b,c)
            7, 6, 4, // f(c,a) f(c,b) f(c,c)
        ],
        vec![
            1, 1, 0, // g(a,a) g(a,b) g(a,c)
            1, 0, 0, // g(b,a) g(b,b) g(b,c)
            0, 0, 0, // g(c,a) g(c,b) g(c,c)
        ],
    )
    .expect("fixed tables")
}

/// Three-point frame on which BTW holds vacuously while BT3 fails at
/// `(0,1,2)`: a weak b-frame that is not a b-frame.
pub fn wnot3() -> Frame {
    let mut triples = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            triples.push((a, a, b));
            triples.push((a, b, b));
        }
    }
    triples.extend([(0, 1, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0)]);
    Frame::from_triples(3, &triples).expect("fixed triples")
}

/// Seed relation on four points a, b, c, d: everything lies between a and b
/// and between c and d. Closing it under the expanding axioms yields a
/// b-frame whose complex algebra has `suff({a},{b}) = U = suff({c},{d})`.
pub fn gpairs4_seed() -> Frame {
    let mut triples = Vec::new();
    for x in 0..4 {
        triples.push((0, x, 1));
        triples.push((2, x, 3));
    }
    Frame::from_triples(4, &triples).expect("fixed triples")
}

/// The identity frame on two points.
pub fn identity2() -> Frame {
    crate::frame::build_frame(crate::frame::FrameKind::Identity, 2, None).expect("fixed frame")
}

/// The chain frame on three points.
pub fn chain3() -> Frame {
    crate::frame::build_frame(crate::frame::FrameKind::Chain, 3, None).expect("fixed frame")
}
