//! Finite betweenness frames and betweenness algebras.
//!
//! The crate models two sides of one duality and the traffic between them:
//!
//! * **Frames** ([`frame`]): finite point sets with a ternary relation,
//!   middle argument distinguished (`<i,j,k>` reads "j lies between i and
//!   k"), together with the betweenness axioms BT0-BT3, BTW, BT2s and the
//!   distinctness condition C.
//! * **Algebras** ([`algebra`], [`balg`]): finite Boolean algebras carrying a
//!   binary possibility operator `f` and a binary sufficiency operator `g`,
//!   with the abstract axioms ABT0-ABT3, wMIA, ABTW, ABT2s and 5-for-d.
//! * **Complex algebras** ([`complex`]): the powerset algebra of a frame with
//!   the operators induced by existential/universal quantification over the
//!   relation, and the conditions that mirror the frame axioms.
//! * **Canonical frames and extensions** ([`canonical`]): ultrafilter frames
//!   of an algebra with the relations `Q_f` and `S_g`, the Stone map, and the
//!   mixed-algebra test `Q_f = S_g`.
//! * **Morphisms** ([`morphism`]): bounded and co-bounded morphism checking
//!   between frames, middle-argument convention.
//! * **Search** ([`search`]): bounded exhaustive/pruned enumeration of frames
//!   and algebras, separating-model search, and representability search by
//!   constraint propagation over candidate relations.
//!
//! Everything is exact: all structures are finite, all checks are decision
//! procedures, and failing checks come with a least violating witness.

pub mod algebra;
pub mod balg;
pub mod canonical;
pub mod catalog;
pub mod complex;
mod error;
pub mod frame;
pub mod morphism;
pub mod report;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
pub use report::AxiomReport;
