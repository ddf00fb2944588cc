//! The golden battery: a fixed list of checks over the catalog structures,
//! each a pure composition of library calls. The CLI surfaces it as
//! `betw verify-paper`, printing one pass/fail line per check.

use crate::balg::{
    check_algebra_axiom, classify_algebra, discriminator_check, product_algebra,
    representability_obstruction, AlgebraAxiom, AlgebraClass, ObstructionCertificate,
};
use crate::canonical::{
    canonical_extension, canonical_frame, check_cf_property, frame_ultrafilter_embedding, is_mia,
    verify_stone_embedding, CfProperty,
};
use crate::catalog;
use crate::complex::{
    check_complex_condition, complex_op, complex_to_psalgebra, reconstruct_relation,
    ComplexCondition, ComplexMode,
};
use crate::frame::{
    check_frame_axiom, classify_frame, close_expanding, FrameAxiom,
};
use crate::morphism::{check_morphism, MorphismMode, PointMap};
use crate::search::{
    enumerate_algebras, enumerate_frames, representability_search, AlgebraSearchSpec,
    FrameSearchSpec, RepSearch,
};

/// One named golden check.
#[derive(Clone, Debug)]
pub struct GoldenCheck {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

fn check(name: &'static str, holds: bool, detail: String) -> GoldenCheck {
    GoldenCheck { name, holds, detail }
}

/// Run the whole battery. Each entry re-derives its expectation from the
/// library; the battery adds no logic of its own.
pub fn run_golden_checks() -> Vec<GoldenCheck> {
    let mut out = Vec::new();
    let a0 = catalog::qnots_a0();
    let a1 = catalog::qnots_a1();

    // the one-point frame tabulates to the smallest mixed algebra
    let singleton = crate::frame::build_frame(crate::frame::FrameKind::Identity, 1, None).unwrap();
    let tab = complex_to_psalgebra(&singleton).unwrap();
    out.push(check("qnots.singleton-complex-tables", tab == a0, format!("{tab:?}")));
    out.push(check(
        "qnots.a1-strong",
        classify_algebra(&a1) == AlgebraClass::Strong,
        classify_algebra(&a1).to_string(),
    ));
    out.push(check("qnots.a0-mia", is_mia(&a0), String::new()));
    out.push(check("qnots.a1-not-mia", !is_mia(&a1), String::new()));

    // four-element symmetry split
    let fe1 = catalog::fourelem_a1();
    let fe2 = catalog::fourelem_a2();
    out.push(check(
        "fourelem.a1-abt1f",
        check_algebra_axiom(&fe1, AlgebraAxiom::Abt1f).holds,
        String::new(),
    ));
    let r = check_algebra_axiom(&fe1, AlgebraAxiom::Abt1g);
    out.push(check(
        "fourelem.a1-abt1g-witness",
        !r.holds && r.witness() == Some(&[1, 2][..]),
        format!("{:?}", r.witness),
    ));
    out.push(check(
        "fourelem.a2-abt1g",
        check_algebra_axiom(&fe2, AlgebraAxiom::Abt1g).holds,
        String::new(),
    ));
    out.push(check(
        "fourelem.a2-abt1f-fails",
        !check_algebra_axiom(&fe2, AlgebraAxiom::Abt1f).holds,
        String::new(),
    ));

    // the three-atom algebra separating 5-for-d from wMIA
    let t1 = catalog::table1();
    for (name, axiom) in [
        ("table1.abt1f", AlgebraAxiom::Abt1f),
        ("table1.abt1g", AlgebraAxiom::Abt1g),
        ("table1.abt3", AlgebraAxiom::Abt3),
        ("table1.abt2s", AlgebraAxiom::Abt2s),
        ("table1.5-for-d", AlgebraAxiom::FiveForD),
    ] {
        out.push(check(name, check_algebra_axiom(&t1, axiom).holds, String::new()));
    }
    out.push(check(
        "table1.wmia-fails",
        !check_algebra_axiom(&t1, AlgebraAxiom::WMia).holds,
        String::new(),
    ));
    let r = check_cf_property(&t1, CfProperty::SsubQ);
    out.push(check(
        "table1.ssubq-witness",
        !r.holds && r.witness() == Some(&[1, 0, 2][..]),
        format!("{:?}", r.witness),
    ));
    out.push(check("table1.discriminator", discriminator_check(&t1).holds, String::new()));

    // the non-representable eight-element b-algebra
    let nr = catalog::nonrep8();
    out.push(check(
        "nonrep8.b-algebra",
        AlgebraAxiom::B_ALGEBRA.iter().all(|&a| check_algebra_axiom(&nr, a).holds),
        classify_algebra(&nr).to_string(),
    ));
    let cert = representability_obstruction(&nr);
    out.push(check(
        "nonrep8.obstruction",
        cert == Some(ObstructionCertificate { a: 1, c: 4 })
            && cert.as_ref().is_some_and(|c| c.verify(&nr)),
        format!("{cert:?}"),
    ));
    out.push(check("nonrep8.discriminator", discriminator_check(&nr).holds, String::new()));

    // closure of the two-pair seed
    let closure = close_expanding(&catalog::gpairs4_seed());
    out.push(check("gpairs4.consistent", closure.consistent, String::new()));
    out.push(check(
        "gpairs4.closure-b-frame",
        classify_frame(&closure.frame).is_b_frame(),
        classify_frame(&closure.frame).to_string(),
    ));
    let all = 0b1111;
    out.push(check(
        "gpairs4.suff-pairs",
        complex_op(&closure.frame, ComplexMode::Suff, 0b0001, 0b0010) == all
            && complex_op(&closure.frame, ComplexMode::Suff, 0b0100, 0b1000) == all,
        String::new(),
    ));

    // the weak-not-b frame
    let w = catalog::wnot3();
    out.push(check("wnot3.btw", check_frame_axiom(&w, FrameAxiom::Btw).holds, String::new()));
    let r = check_frame_axiom(&w, FrameAxiom::Bt3);
    out.push(check(
        "wnot3.bt3-witness",
        !r.holds && r.witness() == Some(&[0, 1, 2][..]),
        format!("{:?}", r.witness),
    ));
    out.push(check(
        "wnot3.bt3c-fails",
        !check_complex_condition(&w, ComplexCondition::Bt3c).unwrap().holds,
        String::new(),
    ));

    // exact enumeration counts
    let b_frames = [FrameAxiom::Bt0, FrameAxiom::Bt1, FrameAxiom::Bt2, FrameAxiom::Bt3];
    let frame_count = |n: usize, satisfy: &[FrameAxiom]| {
        enumerate_frames(&FrameSearchSpec {
            n,
            satisfy: satisfy.to_vec(),
            violate: vec![],
            limit: 0,
            budget: None,
            modulo_iso: false,
        })
        .unwrap()
        .count
    };
    out.push(check("counts.n1-b-frames", frame_count(1, &b_frames) == 1, String::new()));
    out.push(check("counts.n2-b-frames", frame_count(2, &b_frames) == 2, String::new()));
    out.push(check(
        "counts.n2-strong-b-frames",
        frame_count(2, &[FrameAxiom::Bt0, FrameAxiom::Bt1, FrameAxiom::Bt2s, FrameAxiom::Bt3])
            == 1,
        String::new(),
    ));
    let algs = enumerate_algebras(&AlgebraSearchSpec {
        m: 1,
        satisfy: AlgebraAxiom::B_ALGEBRA.to_vec(),
        violate: vec![],
        limit: 0,
        budget: None,
        modulo_iso: false,
    })
    .unwrap();
    out.push(check("counts.m1-b-algebras", algs.count == 2, format!("count {}", algs.count)));

    // representability positives and the bounded negative
    match representability_search(&a0, 3).unwrap() {
        RepSearch::Witness(wit) => out.push(check(
            "embed.a0-at-one-point",
            wit.frame.n() == 1 && wit.verify(&a0),
            format!("n = {}", wit.frame.n()),
        )),
        RepSearch::Exhausted { .. } => {
            out.push(check("embed.a0-at-one-point", false, "exhausted".into()))
        }
    }
    match representability_search(&a1, 3).unwrap() {
        RepSearch::Witness(wit) => out.push(check(
            "embed.a1-at-two-points",
            wit.frame.n() == 2 && wit.verify(&a1),
            format!("n = {}", wit.frame.n()),
        )),
        RepSearch::Exhausted { .. } => {
            out.push(check("embed.a1-at-two-points", false, "exhausted".into()))
        }
    }

    // canonical frames and extensions
    let cf = canonical_frame(&t1);
    out.push(check(
        "canonical.table1-s-not-q",
        cf.s.contains(1, 0, 2) && !cf.q.contains(1, 0, 2),
        String::new(),
    ));
    let ce = canonical_extension(&a1).unwrap();
    out.push(check(
        "canonical.a1-extension-iso",
        ce.ext.isomorphic_to(&a1).is_some(),
        String::new(),
    ));
    out.push(check(
        "canonical.stone-embedding-nonrep8",
        verify_stone_embedding(&nr).unwrap().holds,
        String::new(),
    ));
    let chain3 = catalog::chain3();
    out.push(check(
        "canonical.frame-embedding-chain3",
        frame_ultrafilter_embedding(&chain3).unwrap().holds,
        String::new(),
    ));
    out.push(check(
        "canonical.chain3-complex-mia",
        is_mia(&complex_to_psalgebra(&chain3).unwrap()),
        String::new(),
    ));

    // correspondence spot checks
    out.push(check(
        "complex.chain3-bt1cf",
        check_complex_condition(&chain3, ComplexCondition::Bt1cf).unwrap().holds,
        String::new(),
    ));
    let id2 = catalog::identity2();
    out.push(check(
        "complex.identity2-dagc",
        check_complex_condition(&id2, ComplexCondition::Dagc).unwrap().holds,
        String::new(),
    ));
    out.push(check(
        "complex.reconstruct-chain3",
        reconstruct_relation(&chain3) == chain3,
        String::new(),
    ));
    out.push(check(
        "complex.chain3-strong",
        classify_frame(&chain3).is_strong(),
        classify_frame(&chain3).to_string(),
    ));

    // morphism goldens
    let point = crate::frame::Frame::empty(1).unwrap();
    let constant = PointMap::new(2, 1, vec![0, 0]).unwrap();
    out.push(check(
        "morphism.cobounded-identity2-to-point",
        check_morphism(&id2, &point, &constant, MorphismMode::CoBounded).unwrap().holds,
        String::new(),
    ));
    let chain6 = crate::frame::build_frame(crate::frame::FrameKind::Chain, 6, None).unwrap();
    let universal2 = crate::frame::build_frame(crate::frame::FrameKind::Universal, 2, None).unwrap();
    let parity = PointMap::new(6, 2, vec![0, 1, 0, 1, 0, 1]).unwrap();
    let r = check_morphism(&chain6, &universal2, &parity, MorphismMode::Bounded).unwrap();
    out.push(check(
        "morphism.parity-window-fails",
        !r.holds,
        format!("{:?}", r.failure.map(|f| f.witness)),
    ));

    // products leave the class
    let prod = product_algebra(&a1, &a1).unwrap();
    let r = check_algebra_axiom(&prod, AlgebraAxiom::Abtw);
    out.push(check(
        "product.a1xa1-abtw-fails",
        !r.holds && r.witness() == Some(&[1][..]),
        format!("{:?}", r.witness),
    ));
    let prod0 = product_algebra(&a0, &a0).unwrap();
    out.push(check(
        "product.a0xa0-abtw-fails",
        !check_algebra_axiom(&prod0, AlgebraAxiom::Abtw).holds,
        String::new(),
    ));

    out
}
