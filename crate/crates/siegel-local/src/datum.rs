//! Tagged description of which local coefficient model applies at a place.

use serde::Serialize;

use crate::RamifiedShape;

/// One place together with exactly the parameters its coefficient model
/// needs.  Each variant corresponds to one closed-form formula implemented
/// in this crate, so a report can name the model it exercised.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LocalModel {
    /// The archimedean place: matrix size and weight.
    Archimedean { n: usize, kappa: i64 },
    /// A finite place where everything is unramified: the residue prime and
    /// the valuation of the indexing indeterminant.
    Unramified { prime: u64, valuation: u32 },
    /// A ramified finite place away from p: the residue prime, the block
    /// sizes, and which of the two formula shapes applies.
    Ramified { prime: u64, a: usize, b: usize, shape: RamifiedShape },
    /// The place above p: block sizes of the minor-chain functional.
    PAdic { p: u64, r: usize, s: usize },
    /// The auxiliary split place used to kill degenerate indices.
    SplitAuxiliary { prime: u64 },
}

impl LocalModel {
    /// A short stable label for reports.
    pub fn label(&self) -> &'static str {
        match self {
            LocalModel::Archimedean { .. } => "archimedean",
            LocalModel::Unramified { .. } => "unramified",
            LocalModel::Ramified { .. } => "ramified",
            LocalModel::PAdic { .. } => "p-adic",
            LocalModel::SplitAuxiliary { .. } => "split-auxiliary",
        }
    }
}
