//! Structural classification of codes in Cayley graphs of good groups.
//!
//! In a good group, a perfect code of size n/p in a connected graph of
//! degree p − 1 (p an odd prime) is always a coset of a subgroup; a total
//! perfect code of size n/p is either half of a complete bipartite graph or
//! the union of exactly two cosets of its subgroup of periods. These
//! routines verify the guaranteed structure on a concrete instance and
//! report it; a structural failure on a verified code signals a bug.

use crate::error::{Error, Result};
use crate::group::{
    is_prime, quotient, subgroup_generated, AbelianGroup, GroupElement, SubgroupHandle,
};
use crate::subsets::{periods, quotient_subset, GroupSubset};
use crate::tiling::{is_factorization, is_perfect_code, is_total_perfect_code};

use super::goodness::is_good_group;
use super::verdict::TheoremId;

/// A perfect code recognized as a coset of a subgroup.
#[derive(Debug, Clone)]
pub struct CosetStructureReport {
    pub theorem: TheoremId,
    pub prime: u64,
    /// The subgroup whose coset the code is (its subgroup of periods).
    pub subgroup: SubgroupHandle,
    /// The least element of the code; code = subgroup + representative.
    pub representative: GroupElement,
}

/// Verifies that a perfect code of size n/p in a connected degree-(p−1)
/// Cayley graph of a good group is a coset, and reports the subgroup.
pub fn classify_coset_perfect_code(
    g: &AbelianGroup,
    s: &GroupSubset,
    c: &GroupSubset,
) -> Result<CosetStructureReport> {
    if s.group() != g || c.group() != g {
        return Err(Error::AmbientMismatch);
    }
    let cert = is_good_group(g);
    if !cert.is_good {
        return Err(Error::Precondition(format!("{g} is not a good group")));
    }
    let p = s.len() as u64 + 1;
    if !is_prime(p) || p % 2 == 0 {
        return Err(Error::Precondition(format!(
            "degree |S| = {} is not p - 1 for an odd prime p",
            s.len()
        )));
    }
    if g.order() % p != 0 || p >= g.order() {
        return Err(Error::Precondition(format!(
            "{p} is not a proper divisor of the order {}",
            g.order()
        )));
    }
    let generated = subgroup_generated(g, &s.elements().collect::<Vec<_>>())?;
    if generated.order() != g.order() {
        return Err(Error::Precondition("the Cayley graph is not connected".into()));
    }
    if !is_perfect_code(g, s, c)?.holds {
        return Err(Error::Precondition(format!("{c} is not a perfect code of the instance")));
    }

    let subgroup = periods(c)?;
    if subgroup.order() != c.len() as u64 {
        return Err(Error::InternalConsistency(format!(
            "perfect code {c} in a good group is not a single coset of its periods"
        )));
    }
    let representative = c.elements().next().expect("nonempty code");
    Ok(CosetStructureReport { theorem: TheoremId::ApcSubgroup, prime: p, subgroup, representative })
}

/// The two structural shapes a total perfect code of size n/p can take.
#[derive(Debug, Clone)]
pub enum TotalCodeBranch {
    /// n = 2p and the graph is complete bipartite between the periods of S
    /// and its other coset; the code has one vertex on each side.
    CompleteBipartite {
        half: SubgroupHandle,
        /// An involution x ∈ S with G = S ⊕ {0, x}.
        involution: GroupElement,
    },
    /// |C| > 2: C is the union of exactly two cosets of its periods H,
    /// |G/H| = 2p, and H avoids S.
    TwoCosets {
        kernel: SubgroupHandle,
        quotient_order: u64,
        /// When 0 ∈ C: the shift z with C = H ∪ (H + z).
        shift: Option<GroupElement>,
        /// When 0 ∈ C: the unique element of (H + z) ∩ S.
        connection_in_shifted_coset: Option<GroupElement>,
    },
}

#[derive(Debug, Clone)]
pub struct TotalCodeStructureReport {
    pub theorem: TheoremId,
    pub prime: u64,
    pub branch: TotalCodeBranch,
}

/// Verifies the guaranteed structure of a total perfect code of size n/p in
/// a connected Cayley graph of a good group with order n.
pub fn validate_total_code_structure(
    g: &AbelianGroup,
    s: &GroupSubset,
    c: &GroupSubset,
) -> Result<TotalCodeStructureReport> {
    if s.group() != g || c.group() != g {
        return Err(Error::AmbientMismatch);
    }
    let cert = is_good_group(g);
    if !cert.is_good {
        return Err(Error::Precondition(format!("{g} is not a good group")));
    }
    let n = g.order();
    if c.is_empty() || n % c.len() as u64 != 0 {
        return Err(Error::Precondition("code size does not divide the group order".into()));
    }
    let p = n / c.len() as u64;
    if !is_prime(p) || p % 2 == 0 || p >= n {
        return Err(Error::Precondition(format!(
            "|G|/|C| = {p} is not a proper odd prime divisor of {n}"
        )));
    }
    let generated = subgroup_generated(g, &s.elements().collect::<Vec<_>>())?;
    if generated.order() != n {
        return Err(Error::Precondition("the Cayley graph is not connected".into()));
    }
    if !is_total_perfect_code(g, s, c)?.holds {
        return Err(Error::Precondition(format!(
            "{c} is not a total perfect code of the instance"
        )));
    }
    if n % 2 != 0 {
        return Err(Error::InternalConsistency(
            "total perfect code in a group of odd order".into(),
        ));
    }

    let bug = |msg: String| Error::InternalConsistency(msg);

    if c.len() == 2 {
        // Complete bipartite shape: S is a full coset of its periods.
        let half = periods(s)?;
        if half.order() != p || n != 2 * p {
            return Err(bug(format!("expected |G_S| = {p} and n = 2p, got {}", half.order())));
        }
        if s.elements().any(|x| half.contains(&x)) {
            return Err(bug("S meets its own subgroup of periods".into()));
        }
        let involution = s
            .elements()
            .find(|x| x.add(x).map(|y| y.is_identity()).unwrap_or(false))
            .ok_or_else(|| bug("no involution in S".into()))?;
        let pair = GroupSubset::from_elements(g, &[g.identity(), involution.clone()])?;
        if !is_factorization(s, &pair)?.holds {
            return Err(bug("S with {0, x} does not factor the group".into()));
        }
        return Ok(TotalCodeStructureReport {
            theorem: TheoremId::AtpcSubgroup,
            prime: p,
            branch: TotalCodeBranch::CompleteBipartite { half, involution },
        });
    }

    // Two-coset shape.
    let kernel = periods(c)?;
    let quotient_order = n / kernel.order();
    if quotient_order != 2 * p {
        return Err(bug(format!("expected |G/H| = {}, got {quotient_order}", 2 * p)));
    }
    if c.len() as u64 != 2 * kernel.order() {
        return Err(bug("code is not the union of exactly two kernel cosets".into()));
    }
    if s.elements().any(|x| kernel.contains(&x)) {
        return Err(bug("S meets the code's subgroup of periods".into()));
    }

    let (shift, connection) = if c.contains(&g.identity()) {
        let z = c
            .elements()
            .find(|x| !kernel.contains(x))
            .ok_or_else(|| bug("code contains only kernel elements".into()))?;
        // C = H ∪ (H + z).
        let shifted = GroupSubset::from_subgroup(&kernel).translate(&z)?;
        let rebuilt = GroupSubset::from_subgroup(&kernel).union(&shifted)?;
        if &rebuilt != c {
            return Err(bug("code is not H together with a single shifted coset".into()));
        }
        let meets: Vec<GroupElement> = shifted.elements().filter(|x| s.contains(x)).collect();
        if meets.len() != 1 {
            return Err(bug(format!(
                "shifted coset meets S in {} elements instead of one",
                meets.len()
            )));
        }
        // H + z generates the periods of S/H in G/H.
        let q = quotient(g, &kernel)?;
        let z_image = q.map(&z)?;
        let s_image = quotient_subset(s, &q)?;
        let image_periods = periods(&s_image)?;
        let generated = subgroup_generated(q.quotient_group(), &[z_image])?;
        if generated.elements().collect::<Vec<_>>()
            != image_periods.elements().collect::<Vec<_>>()
        {
            return Err(bug(
                "shift does not generate the periods of the reduced connection set".into(),
            ));
        }
        (Some(z), Some(meets.into_iter().next().expect("one element")))
    } else {
        (None, None)
    };

    Ok(TotalCodeStructureReport {
        theorem: TheoremId::AtpcSubgroup,
        prime: p,
        branch: TotalCodeBranch::TwoCosets {
            kernel,
            quotient_order,
            shift,
            connection_in_shifted_coset: connection,
        },
    })
}
