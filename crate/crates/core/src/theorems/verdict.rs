//! Verdict types shared by the theorem registry.

use serde::Serialize;
use std::fmt;

use crate::group::GroupElement;
use crate::subsets::GroupSubset;

/// Stable identifiers for the registered criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// Perfect codes of prime-minus-one degree in good groups are cosets.
    ApcSubgroup,
    /// Structure of total perfect codes of size n/p in good groups.
    AtpcSubgroup,
    /// Perfect-code criterion for |S₀| a prime.
    ApcForP,
    /// Perfect-code criterion for |S₀| = p^l with p^l exactly dividing n.
    ApcForPl,
    /// Total-code criterion for |S| an odd prime.
    AtpcForP,
    /// Total-code criterion for |S| = p^l with p^l exactly dividing n.
    AtpcForPl,
    /// Circulant: subgroup total codes exist iff residues mod |S| separate.
    CtpcSubgroup,
    /// Circulant with n = p·|S|: total codes and their complete list.
    CtpcHalfOrder,
    /// Circulant with |S| = pq, S periodic.
    CtpcPqPeriodic,
    /// Circulant with |S| = pq, S aperiodic, n of good-cyclic shape.
    CtpcPqAperiodic,
    /// Circulant with n of good-cyclic shape and |S| coprime to n/|S|.
    CtpcCoprimeOrder,
}

impl TheoremId {
    /// The stable external id string.
    pub fn id(&self) -> &'static str {
        match self {
            TheoremId::ApcSubgroup => "APCsubgp",
            TheoremId::AtpcSubgroup => "ATPCsubgp",
            TheoremId::ApcForP => "APCforP",
            TheoremId::ApcForPl => "APCforPl",
            TheoremId::AtpcForP => "ATPCforP",
            TheoremId::AtpcForPl => "ATPCforPl",
            TheoremId::CtpcSubgroup => "CTPC.subgroup",
            TheoremId::CtpcHalfOrder => "CTPC.half-order",
            TheoremId::CtpcPqPeriodic => "CTPC.pq-periodic",
            TheoremId::CtpcPqAperiodic => "CTPC.pq-aperiodic",
            TheoremId::CtpcCoprimeOrder => "CTPC.Nbar",
        }
    }

    pub fn from_id(id: &str) -> Option<TheoremId> {
        use TheoremId::*;
        for t in [
            ApcSubgroup,
            AtpcSubgroup,
            ApcForP,
            ApcForPl,
            AtpcForP,
            AtpcForPl,
            CtpcSubgroup,
            CtpcHalfOrder,
            CtpcPqPeriodic,
            CtpcPqAperiodic,
            CtpcCoprimeOrder,
        ] {
            if t.id() == id {
                return Some(t);
            }
        }
        None
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.id())
    }
}

/// Machine-readable reason a criterion did not apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InapplicabilityReason {
    /// Stable code, e.g. `gate.cardinality` or `gate.connectivity`.
    pub code: &'static str,
    pub detail: String,
}

impl InapplicabilityReason {
    pub fn new(code: &'static str, detail: impl Into<String>) -> Self {
        InapplicabilityReason { code, detail: detail.into() }
    }
}

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TheoremWitness {
    /// Two distinct tile elements congruent at the decisive coordinate.
    ViolatingPair {
        a: GroupElement,
        b: GroupElement,
        coordinate: usize,
        modulus: u64,
    },
    /// A code produced by the sufficiency construction, verified.
    ConstructedCode(GroupSubset),
}

/// Outcome of applying a named criterion to an instance.
#[derive(Debug, Clone)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub applicable: bool,
    pub inapplicability: Option<InapplicabilityReason>,
    /// The criterion's congruence condition, when applicable.
    pub condition_holds: Option<bool>,
    /// What the criterion predicts: for existence criteria, whether the
    /// graph admits a (total) perfect code; for `CTPC.subgroup`, whether it
    /// admits a subgroup as a total perfect code.
    pub predicted_admits: Option<bool>,
    pub witness: Option<TheoremWitness>,
}

impl TheoremVerdict {
    pub fn inapplicable(theorem: TheoremId, reason: InapplicabilityReason) -> Self {
        TheoremVerdict {
            theorem,
            applicable: false,
            inapplicability: Some(reason),
            condition_holds: None,
            predicted_admits: None,
            witness: None,
        }
    }

    pub fn applicable(theorem: TheoremId, condition: bool, witness: Option<TheoremWitness>) -> Self {
        TheoremVerdict {
            theorem,
            applicable: true,
            inapplicability: None,
            condition_holds: Some(condition),
            predicted_admits: Some(condition),
            witness,
        }
    }
}
