/// Outcome of a single universally quantified check.
///
/// `witness` is present exactly when `holds` is false, and is always the
/// lexicographically least violating tuple for the check in question, so
/// reports are deterministic and stable across runs and thread counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport<A> {
    pub axiom: A,
    pub holds: bool,
    pub witness: Option<Vec<u32>>,
}

impl<A> AxiomReport<A> {
    pub fn passed(axiom: A) -> Self {
        AxiomReport { axiom, holds: true, witness: None }
    }

    pub fn failed(axiom: A, witness: Vec<u32>) -> Self {
        AxiomReport { axiom, holds: false, witness: Some(witness) }
    }

    pub fn witness(&self) -> Option<&[u32]> {
        self.witness.as_deref()
    }
}
