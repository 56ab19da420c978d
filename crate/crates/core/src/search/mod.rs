//! Exhaustive enumeration of (total) perfect codes, constructive witnesses,
//! and the quotient-reduction/lifting pipeline.
//!
//! Enumeration is exact cover: the tiles are the translates of S₀ (perfect
//! case) or S (total case) and a code is a set of translation amounts whose
//! tiles partition the group. Reduction factors out the subgroup of periods
//! H of S₀; the graph admits a perfect code exactly when the quotient graph
//! does, and every reduced code of size k lifts to |H|^k codes upstairs by
//! choosing one representative per coset.

pub mod dense;
mod solver;

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::group::{
    quotient, subgroup_generated, AbelianGroup, GroupElement, QuotientMap, SubgroupHandle,
};
use crate::subsets::{is_inverse_closed_connection_set, periods, quotient_subset, GroupSubset};
use crate::tiling::{is_perfect_code, is_total_perfect_code};

use solver::{CoverBudget, ExactCover};

/// Search mode: enumerate every code, or only codes containing the identity
/// together with the size of their translation closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Full,
    IdentityOrbit,
}

/// Resource guards for enumeration. Exceeding the ambient-order guards is an
/// error up front; running out of nodes or time mid-search yields an honest
/// partial result flagged non-exhaustive.
#[derive(Debug, Clone)]
pub struct SearchLimits {
    /// Unrestricted enumeration bound on |G|.
    pub max_order: u64,
    /// Relaxed bound applying when the code index |G|/|B| is small.
    pub small_index_max_order: u64,
    /// What counts as a small index.
    pub small_index: u64,
    pub max_nodes: u64,
    pub time_budget: Option<Duration>,
    pub mode: SearchMode,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_order: 200,
            small_index_max_order: 2000,
            small_index: 8,
            max_nodes: 50_000_000,
            time_budget: None,
            mode: SearchMode::Full,
        }
    }
}

impl SearchLimits {
    pub fn with_max_order(mut self, max_order: u64) -> Self {
        self.max_order = max_order;
        if self.small_index_max_order < max_order {
            self.small_index_max_order = max_order;
        }
        self
    }
}

/// A Cayley-graph code-search instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeInstance {
    pub group: AbelianGroup,
    pub connection: GroupSubset,
    pub total: bool,
}

#[derive(Debug, Clone)]
pub struct CodeSearchResult {
    pub instance: CodeInstance,
    /// Codes in canonical order (lexicographic on element lists).
    pub codes: Vec<GroupSubset>,
    /// True when the search tree was exhausted within the limits.
    pub exhaustive: bool,
    pub node_count: u64,
    pub mode: SearchMode,
    /// In identity-orbit mode, the total number of codes the listed ones
    /// expand to under translation.
    pub orbit_total: Option<u64>,
}

fn require_connection_set(s: &GroupSubset) -> Result<()> {
    if !is_inverse_closed_connection_set(s) {
        return Err(Error::InvalidConnectionSet(format!(
            "{s} is not an identity-free inverse-closed set"
        )));
    }
    Ok(())
}

/// All (total) perfect codes of Cay(G, S), by exact-cover backtracking.
pub fn enumerate_codes(
    g: &AbelianGroup,
    s: &GroupSubset,
    total: bool,
    limits: &SearchLimits,
) -> Result<CodeSearchResult> {
    if s.group() != g {
        return Err(Error::AmbientMismatch);
    }
    require_connection_set(s)?;
    let tile = if total { s.clone() } else { s.with_identity() };
    if tile.is_empty() {
        return Err(Error::InvalidConnectionSet("empty connection set".into()));
    }
    let n = g.order();
    let index = n / tile.len() as u64;
    if n > limits.max_order && !(n <= limits.small_index_max_order && index <= limits.small_index) {
        return Err(Error::LimitExceeded(format!(
            "group order {n} exceeds the search guard (max_order {}, or {} at index <= {})",
            limits.max_order, limits.small_index_max_order, limits.small_index
        )));
    }

    let tile_cells: Vec<Vec<u32>> = (0..n)
        .map(|c| {
            tile.indices()
                .iter()
                .map(|&b| g.add_indices(b, c) as u32)
                .collect()
        })
        .collect();
    let cover = ExactCover::new(n as usize, tile_cells);
    let budget = CoverBudget {
        max_nodes: limits.max_nodes,
        deadline: limits.time_budget.map(|d| Instant::now() + d),
        max_solutions: u64::MAX,
    };
    let forced = match limits.mode {
        SearchMode::Full => Vec::new(),
        SearchMode::IdentityOrbit => vec![0u32],
    };
    let outcome = cover.run(&forced, &budget);

    let mut codes: Vec<GroupSubset> = outcome
        .solutions
        .iter()
        .map(|sol| GroupSubset::from_indices(g, sol.iter().map(|&c| c as u64).collect()))
        .collect();
    codes.sort_by(|a, b| a.indices().cmp(b.indices()));

    // Every emitted code must pass the independent checker.
    for c in &codes {
        let report = if total {
            is_total_perfect_code(g, s, c)?
        } else {
            is_perfect_code(g, s, c)?
        };
        if !report.holds {
            return Err(Error::InternalConsistency(format!(
                "search emitted {c}, which the checker rejects"
            )));
        }
    }

    let orbit_total = match limits.mode {
        SearchMode::Full => None,
        // Each code has |G|/|C| = |B| distinct translates per orbit element
        // containing the identity, so the closure has #codes · |B| members.
        SearchMode::IdentityOrbit => Some(codes.len() as u64 * tile.len() as u64),
    };

    Ok(CodeSearchResult {
        instance: CodeInstance { group: g.clone(), connection: s.clone(), total },
        codes,
        exhaustive: outcome.complete,
        node_count: outcome.nodes,
        mode: limits.mode,
        orbit_total,
    })
}

/// The subgroup ∏ mᵢ·Z_{nᵢ} as a subset; the canonical code of the
/// sufficiency construction.
pub fn canonical_code_from_moduli(g: &AbelianGroup, moduli: &[u64]) -> Result<GroupSubset> {
    if moduli.len() != g.rank() {
        return Err(Error::InvalidArgument(format!(
            "expected {} moduli, got {}",
            g.rank(),
            moduli.len()
        )));
    }
    for (i, (&m, &n)) in moduli.iter().zip(g.factors()).enumerate() {
        if m == 0 || n % m != 0 {
            return Err(Error::InvalidArgument(format!(
                "modulus {m} at coordinate {i} does not divide {n}"
            )));
        }
    }
    let indices = (0..g.order())
        .filter(|&x| {
            g.coords_of_index(x)
                .iter()
                .zip(moduli)
                .all(|(&c, &m)| c % m == 0)
        })
        .collect();
    Ok(GroupSubset::from_indices(g, indices))
}

/// A successful sufficiency witness: moduli m₁ · … · m_d = |B| with mᵢ | nᵢ
/// such that every pair of distinct tile elements separates modulo some mⱼ,
/// together with the canonical code the construction yields.
#[derive(Debug, Clone)]
pub struct ModuliWitness {
    pub moduli: Vec<u64>,
    pub code: GroupSubset,
}

/// Searches every factorization of |S₀| (or |S| in the total case) into
/// per-coordinate moduli and returns the first witness whose pairwise
/// separation condition holds.
pub fn check_sufficiency_moduli(s: &GroupSubset, total: bool) -> Result<Option<ModuliWitness>> {
    require_connection_set(s)?;
    let g = s.group();
    let tile = if total { s.clone() } else { s.with_identity() };
    if tile.is_empty() {
        return Err(Error::InvalidConnectionSet("empty connection set".into()));
    }
    let target = tile.len() as u64;
    let coords: Vec<Vec<u64>> = tile.elements().map(|e| e.coords()).collect();

    let divisor_lists: Vec<Vec<u64>> = g
        .factors()
        .iter()
        .map(|&n| (1..=n).filter(|d| n % d == 0).collect())
        .collect();

    fn separates(coords: &[Vec<u64>], moduli: &[u64]) -> bool {
        for i in 0..coords.len() {
            for j in (i + 1)..coords.len() {
                let split = coords[i]
                    .iter()
                    .zip(&coords[j])
                    .zip(moduli)
                    .any(|((&a, &b), &m)| a % m != b % m);
                if !split {
                    return false;
                }
            }
        }
        true
    }

    fn rec(
        level: usize,
        remaining: u64,
        moduli: &mut Vec<u64>,
        divisor_lists: &[Vec<u64>],
        coords: &[Vec<u64>],
    ) -> Option<Vec<u64>> {
        if level == divisor_lists.len() {
            if remaining == 1 && separates(coords, moduli) {
                return Some(moduli.clone());
            }
            return None;
        }
        for &m in &divisor_lists[level] {
            if remaining % m != 0 {
                continue;
            }
            moduli.push(m);
            if let Some(found) = rec(level + 1, remaining / m, moduli, divisor_lists, coords) {
                return Some(found);
            }
            moduli.pop();
        }
        None
    }

    let mut moduli = Vec::new();
    let Some(found) = rec(0, target, &mut moduli, &divisor_lists, &coords) else {
        return Ok(None);
    };
    let code = canonical_code_from_moduli(g, &found)?;
    let report = if total {
        is_total_perfect_code(g, s, &code)?
    } else {
        is_perfect_code(g, s, &code)?
    };
    if !report.holds {
        return Err(Error::InternalConsistency(
            "sufficiency witness produced a code the checker rejects".into(),
        ));
    }
    Ok(Some(ModuliWitness { moduli: found, code }))
}

/// Outcome of factoring the periods of S₀ out of a perfect-code instance.
#[derive(Debug, Clone)]
pub struct ReductionResult {
    pub instance: CodeInstance,
    /// The subgroup of periods of S₀.
    pub kernel: SubgroupHandle,
    pub quotient: QuotientMap,
    pub reduced_group: AbelianGroup,
    pub reduced_connection: GroupSubset,
    /// False when the kernel is trivial and the reduction is the identity.
    pub genuine: bool,
    /// |H|^k, the number of lifts of each reduced code (k = reduced code size).
    pub lift_multiplicity: u128,
}

/// Reduces Cay(G, S) to the quotient by the subgroup of periods H of S₀.
/// The original graph admits a perfect code iff the reduced one does. The
/// reduction applies to perfect codes only; total codes are not reduced.
pub fn reduce_instance(g: &AbelianGroup, s: &GroupSubset) -> Result<ReductionResult> {
    if s.group() != g {
        return Err(Error::AmbientMismatch);
    }
    require_connection_set(s)?;
    if s.is_empty() {
        return Err(Error::InvalidConnectionSet("empty connection set".into()));
    }
    let generated = subgroup_generated(g, &s.elements().collect::<Vec<_>>())?;
    if generated.order() != g.order() {
        return Err(Error::Precondition(format!(
            "Cay({g}, S) is disconnected: S generates a subgroup of order {}",
            generated.order()
        )));
    }
    if s.len() as u64 == g.order() - 1 {
        return Err(Error::Precondition(
            "complete graph: S must be a proper subset of the nonidentity elements".into(),
        ));
    }

    let s0 = s.with_identity();
    let kernel = periods(&s0)?;
    let genuine = kernel.order() > 1;
    let q = if genuine {
        quotient(g, &kernel)?
    } else {
        identity_quotient(g, &kernel)
    };
    let reduced_group = q.quotient_group().clone();
    let reduced_connection = quotient_subset(s, &q)?.without_identity();
    let reduced_tile_len = reduced_connection.len() as u64 + 1;
    let k = reduced_group.order() / reduced_tile_len;
    let lift_multiplicity = (kernel.order() as u128)
        .checked_pow(k as u32)
        .ok_or_else(|| Error::LimitExceeded("lift multiplicity overflows".into()))?;

    Ok(ReductionResult {
        instance: CodeInstance { group: g.clone(), connection: s.clone(), total: false },
        kernel,
        quotient: q,
        reduced_group,
        reduced_connection,
        genuine,
        lift_multiplicity,
    })
}

/// Quotient by the trivial subgroup with the identity relabelling, so a
/// trivial reduction leaves the instance untouched.
fn identity_quotient(g: &AbelianGroup, kernel: &SubgroupHandle) -> QuotientMap {
    let ids: Vec<u64> = (0..g.order()).collect();
    QuotientMap::identity_map(g, kernel, ids)
}

const MAX_LIFTED_CODES: u128 = 1_000_000;

/// Expands reduced perfect codes to all their lifts: one representative per
/// kernel coset, every combination. Every input code must verify as a
/// perfect code of the reduced instance.
pub fn lift_codes(
    reduction: &ReductionResult,
    reduced_codes: &[GroupSubset],
) -> Result<Vec<GroupSubset>> {
    let rg = &reduction.reduced_group;
    let g = &reduction.instance.group;
    let total: u128 = reduction.lift_multiplicity * reduced_codes.len() as u128;
    if total > MAX_LIFTED_CODES {
        return Err(Error::LimitExceeded(format!(
            "{total} lifted codes exceed the cap of {MAX_LIFTED_CODES}"
        )));
    }
    let mut out = Vec::new();
    for code in reduced_codes {
        if code.group() != rg {
            return Err(Error::AmbientMismatch);
        }
        if !is_perfect_code(rg, &reduction.reduced_connection, code)?.holds {
            return Err(Error::Precondition(format!(
                "{code} is not a perfect code of the reduced instance"
            )));
        }
        // The coset of H over each reduced code element, in canonical order.
        let cosets: Vec<Vec<u64>> = code
            .elements()
            .map(|q| {
                let rep = reduction.quotient.section(&q).expect("quotient element");
                let mut coset: Vec<u64> = reduction
                    .kernel
                    .indices()
                    .iter()
                    .map(|&h| g.add_indices(rep.index(), h))
                    .collect();
                coset.sort_unstable();
                coset
            })
            .collect();
        let k = cosets.len();
        let mut pick = vec![0usize; k];
        loop {
            let lift: Vec<u64> = (0..k).map(|i| cosets[i][pick[i]]).collect();
            let lifted = GroupSubset::from_indices(g, lift);
            if !is_perfect_code(g, &reduction.instance.connection, &lifted)?.holds {
                return Err(Error::InternalConsistency(format!(
                    "lift {lifted} fails the perfect-code checker"
                )));
            }
            out.push(lifted);
            let mut i = k;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                pick[i] += 1;
                if pick[i] < cosets[i].len() {
                    break;
                }
                pick[i] = 0;
                if i == 0 {
                    i = usize::MAX;
                    break;
                }
            }
            if i == usize::MAX {
                break;
            }
        }
    }
    out.sort_by(|a, b| a.indices().cmp(b.indices()));
    out.dedup();
    Ok(out)
}

/// Builds a connection set S such that the given subgroup H verifies as a
/// (total) perfect code of Cay(G, S).
///
/// One representative is chosen per nonidentity coset, pairing the coset of
/// x with the coset of −x so S stays inverse-closed; a self-paired coset
/// uses its unique element of order two (the parity preconditions guarantee
/// one exists). The total case additionally places an involution of H
/// itself. Correctness is established by verification, not assumed.
pub fn subgroup_code_connection_set(
    g: &AbelianGroup,
    h: &SubgroupHandle,
    total: bool,
) -> Result<GroupSubset> {
    if h.group() != g {
        return Err(Error::NotASubgroup);
    }
    let order = h.order();
    let index = g.order() / order;
    if total {
        if order % 2 != 0 || index % 2 == 0 {
            return Err(Error::Precondition(format!(
                "total case needs |H| even and index odd; got |H| = {order}, index = {index}"
            )));
        }
    } else {
        if order % 2 == 0 && index % 2 == 0 {
            return Err(Error::Precondition(format!(
                "perfect case needs |H| or the index odd; got |H| = {order}, index = {index}"
            )));
        }
        if index == 1 {
            return Err(Error::Precondition(
                "H = G leaves an empty connection set, which defines no Cayley graph".into(),
            ));
        }
    }

    let n = g.order();
    // coset id by least representative
    let mut coset_rep = vec![u64::MAX; n as usize];
    for x in 0..n {
        if coset_rep[x as usize] != u64::MAX {
            continue;
        }
        for &k in h.indices() {
            coset_rep[g.add_indices(x, k) as usize] = x;
        }
    }

    let mut chosen: Vec<u64> = Vec::new();
    if total {
        let involution = h
            .indices()
            .iter()
            .copied()
            .find(|&x| x != 0 && g.add_indices(x, x) == 0)
            .ok_or_else(|| {
                Error::InternalConsistency("even subgroup without an involution".into())
            })?;
        chosen.push(involution);
    }
    let mut done: Vec<bool> = vec![false; n as usize];
    done[0] = true; // identity coset handled above
    for x in 0..n {
        let rep = coset_rep[x as usize];
        if rep == 0 || done[rep as usize] {
            continue;
        }
        let neg_rep = coset_rep[g.neg_index(rep) as usize];
        if neg_rep == rep {
            // Self-paired coset: take its element of order two.
            let y = (0..n)
                .find(|&y| coset_rep[y as usize] == rep && g.add_indices(y, y) == 0)
                .ok_or_else(|| {
                    Error::InternalConsistency("self-paired coset without an involution".into())
                })?;
            chosen.push(y);
            done[rep as usize] = true;
        } else {
            chosen.push(rep);
            chosen.push(g.neg_index(rep));
            done[rep as usize] = true;
            done[neg_rep as usize] = true;
        }
    }

    let s = GroupSubset::from_indices(g, chosen);
    let code = GroupSubset::from_subgroup(h);
    let report = if total {
        is_total_perfect_code(g, &s, &code)?
    } else {
        is_perfect_code(g, &s, &code)?
    };
    if !report.holds {
        return Err(Error::InternalConsistency(format!(
            "constructed connection set {s} does not admit H as a code"
        )));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsets::is_periodic;

    fn g(factors: &[u64]) -> AbelianGroup {
        AbelianGroup::new(factors).unwrap()
    }

    fn sub(group: &AbelianGroup, text: &str) -> GroupSubset {
        GroupSubset::parse(group, text).unwrap()
    }

    /// Brute-force oracle: all codes of the given size by direct subset scan.
    fn oracle_codes(group: &AbelianGroup, s: &GroupSubset, total: bool) -> Vec<GroupSubset> {
        let tile = if total { s.clone() } else { s.with_identity() };
        let size = (group.order() / tile.len() as u64) as usize;
        let n = group.order() as usize;
        let mut out = Vec::new();
        let mut chosen: Vec<u64> = Vec::new();
        fn rec(
            start: usize,
            size: usize,
            n: usize,
            group: &AbelianGroup,
            s: &GroupSubset,
            total: bool,
            chosen: &mut Vec<u64>,
            out: &mut Vec<GroupSubset>,
        ) {
            if chosen.len() == size {
                let c = GroupSubset::from_indices(group, chosen.clone());
                let ok = if total {
                    is_total_perfect_code(group, s, &c).unwrap().holds
                } else {
                    is_perfect_code(group, s, &c).unwrap().holds
                };
                if ok {
                    out.push(c);
                }
                return;
            }
            for x in start..n {
                chosen.push(x as u64);
                rec(x + 1, size, n, group, s, total, chosen, out);
                chosen.pop();
            }
        }
        rec(0, size, n, group, s, total, &mut chosen, &mut out);
        out
    }

    #[test]
    fn enumerate_ball_partitions_of_z6() {
        let z6 = g(&[6]);
        let s = sub(&z6, "{1,5}");
        let result = enumerate_codes(&z6, &s, false, &SearchLimits::default()).unwrap();
        assert!(result.exhaustive);
        let want: Vec<GroupSubset> = ["{0,3}", "{1,4}", "{2,5}"]
            .iter()
            .map(|t| sub(&z6, t))
            .collect();
        assert_eq!(result.codes, want);
        assert_eq!(result.codes, oracle_codes(&z6, &s, false));
    }

    #[test]
    fn enumerate_total_codes_of_4_cycle() {
        let z4 = g(&[4]);
        let s = sub(&z4, "{1,3}");
        let result = enumerate_codes(&z4, &s, true, &SearchLimits::default()).unwrap();
        let want: Vec<GroupSubset> = ["{0,1}", "{0,3}", "{1,2}", "{2,3}"]
            .iter()
            .map(|t| sub(&z4, t))
            .collect();
        assert_eq!(result.codes, want);
        assert_eq!(result.codes, oracle_codes(&z4, &s, true));
    }

    #[test]
    fn enumerate_finds_the_z5xz5_code() {
        let z = g(&[5, 5]);
        let s = sub(&z, "{(1,1),(1,4),(4,1),(4,4)}");
        let result = enumerate_codes(&z, &s, false, &SearchLimits::default()).unwrap();
        let known = sub(&z, "{(0,0),(2,1),(4,2),(1,3),(3,4)}");
        assert!(result.codes.contains(&known));
        // Closure under translation.
        for c in &result.codes {
            for t in z.elements() {
                assert!(result.codes.contains(&c.translate(&t).unwrap()));
            }
        }
    }

    #[test]
    fn identity_orbit_mode_counts_the_closure() {
        let z6 = g(&[6]);
        let s = sub(&z6, "{1,5}");
        let limits = SearchLimits { mode: SearchMode::IdentityOrbit, ..Default::default() };
        let result = enumerate_codes(&z6, &s, false, &limits).unwrap();
        assert_eq!(result.codes, vec![sub(&z6, "{0,3}")]);
        assert_eq!(result.orbit_total, Some(3));
    }

    #[test]
    fn enumerate_respects_order_guard() {
        let z = g(&[3000]);
        let s = sub(&z, "{1,2999}");
        assert!(matches!(
            enumerate_codes(&z, &s, false, &SearchLimits::default()),
            Err(Error::LimitExceeded(_))
        ));
    }

    #[test]
    fn canonical_code_from_moduli_examples() {
        let z = g(&[6, 4]);
        let c = canonical_code_from_moduli(&z, &[6, 1]).unwrap();
        assert_eq!(c, sub(&z, "{(0,0),(0,1),(0,2),(0,3)}"));
        assert_eq!(canonical_code_from_moduli(&z, &[1, 1]).unwrap().len(), 24);

        let z12 = g(&[12]);
        assert_eq!(canonical_code_from_moduli(&z12, &[6]).unwrap(), sub(&z12, "{0,6}"));
        assert!(canonical_code_from_moduli(&z12, &[5]).is_err());
    }

    #[test]
    fn sufficiency_absent_for_z6xz4_and_z12() {
        let z = g(&[6, 4]);
        let s = sub(&z, "{(1,1),(1,2),(3,2),(5,2),(5,3)}");
        assert!(check_sufficiency_moduli(&s, false).unwrap().is_none());

        let z12 = g(&[12]);
        let s = sub(&z12, "{1,3,5,7,9,11}");
        assert!(check_sufficiency_moduli(&s, true).unwrap().is_none());
    }

    #[test]
    fn sufficiency_witness_for_z9() {
        let z9 = g(&[9]);
        let s = sub(&z9, "{1,8}");
        let witness = check_sufficiency_moduli(&s, false).unwrap().unwrap();
        assert_eq!(witness.moduli, vec![3]);
        assert_eq!(witness.code, sub(&z9, "{0,3,6}"));
        // Ball partition oracle.
        assert!(oracle_codes(&z9, &s, false).contains(&witness.code));
    }

    #[test]
    fn reduce_z42_instance() {
        let z42 = g(&[42]);
        let s = sub(
            &z42,
            "{1,5,6,7,11,12,13,17,18,19,23,24,25,29,30,31,35,36,37,41}",
        );
        let r = reduce_instance(&z42, &s).unwrap();
        assert!(r.genuine);
        assert_eq!(
            r.kernel.elements().map(|e| e.index()).collect::<Vec<_>>(),
            vec![0, 6, 12, 18, 24, 30, 36]
        );
        assert_eq!(r.reduced_group.factors(), &[6]);
        assert_eq!(r.reduced_connection, sub(&r.reduced_group, "{1,5}"));
        assert_eq!(r.lift_multiplicity, 49);
    }

    #[test]
    fn reduce_aperiodic_is_identity() {
        let z9 = g(&[9]);
        let s = sub(&z9, "{1,8}");
        assert!(!is_periodic(&s.with_identity()).unwrap());
        let r = reduce_instance(&z9, &s).unwrap();
        assert!(!r.genuine);
        assert_eq!(r.reduced_group, z9);
        assert_eq!(r.reduced_connection, s);
        assert_eq!(r.lift_multiplicity, 1);
    }

    #[test]
    fn reduce_rejects_disconnected_and_complete() {
        let z12 = g(&[12]);
        let s = sub(&z12, "{4,8}");
        assert!(matches!(reduce_instance(&z12, &s), Err(Error::Precondition(_))));
        let z5 = g(&[5]);
        let s = sub(&z5, "{1,2,3,4}");
        assert!(matches!(reduce_instance(&z5, &s), Err(Error::Precondition(_))));
    }

    #[test]
    fn lift_z42_codes() {
        let z42 = g(&[42]);
        let s = sub(
            &z42,
            "{1,5,6,7,11,12,13,17,18,19,23,24,25,29,30,31,35,36,37,41}",
        );
        let r = reduce_instance(&z42, &s).unwrap();
        let reduced_code = sub(&r.reduced_group, "{1,4}");
        let lifts = lift_codes(&r, &[reduced_code]).unwrap();
        assert_eq!(lifts.len(), 49);
        assert!(lifts.contains(&sub(&z42, "{13,22}")));

        // Trivial kernel: codes pass through unchanged.
        let z9 = g(&[9]);
        let s9 = sub(&z9, "{1,8}");
        let r9 = reduce_instance(&z9, &s9).unwrap();
        let code = sub(&z9, "{0,3,6}");
        assert_eq!(lift_codes(&r9, &[code.clone()]).unwrap(), vec![code]);
    }

    #[test]
    fn lift_rejects_non_codes() {
        let z42 = g(&[42]);
        let s = sub(
            &z42,
            "{1,5,6,7,11,12,13,17,18,19,23,24,25,29,30,31,35,36,37,41}",
        );
        let r = reduce_instance(&z42, &s).unwrap();
        let not_a_code = sub(&r.reduced_group, "{1,2}");
        assert!(matches!(
            lift_codes(&r, &[not_a_code]),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn reduction_counts_match_direct_enumeration() {
        // A periodic instance over Z12: codes upstairs = reduced codes x |H|^k.
        let z12 = g(&[12]);
        let s = sub(&z12, "{1,5,6,7,11}");
        let r = reduce_instance(&z12, &s).unwrap();
        assert_eq!(r.kernel.order(), 2);
        let reduced = enumerate_codes(
            &r.reduced_group,
            &r.reduced_connection,
            false,
            &SearchLimits::default(),
        )
        .unwrap();
        let lifted = lift_codes(&r, &reduced.codes).unwrap();
        let direct = enumerate_codes(&z12, &s, false, &SearchLimits::default()).unwrap();
        assert_eq!(lifted, direct.codes);
        assert_eq!(
            direct.codes.len() as u128,
            reduced.codes.len() as u128 * r.lift_multiplicity
        );
    }

    #[test]
    fn subgroup_connection_set_constructions() {
        // Total code: the order-4 subgroup of Z2 x Z10 (index 5).
        let z = g(&[2, 10]);
        let h = subgroup_generated(&z, &[z.element(&[0, 5]).unwrap(), z.element(&[1, 0]).unwrap()])
            .unwrap();
        assert_eq!(h.order(), 4);
        let s = subgroup_code_connection_set(&z, &h, true).unwrap();
        assert_eq!(s.len(), 5);
        assert!(is_total_perfect_code(&z, &s, &GroupSubset::from_subgroup(&h)).unwrap().holds);

        // Perfect code: {0,3,6} in Z9.
        let z9 = g(&[9]);
        let h9 = subgroup_generated(&z9, &[z9.element(&[3]).unwrap()]).unwrap();
        let s9 = subgroup_code_connection_set(&z9, &h9, false).unwrap();
        assert!(is_perfect_code(&z9, &s9, &GroupSubset::from_subgroup(&h9)).unwrap().holds);

        // Degenerate and parity rejections.
        let full = SubgroupHandle::full(&z9);
        assert!(matches!(
            subgroup_code_connection_set(&z9, &full, false),
            Err(Error::Precondition(_))
        ));
        let z4 = g(&[4]);
        let h2 = subgroup_generated(&z4, &[z4.element(&[2]).unwrap()]).unwrap();
        assert!(matches!(
            subgroup_code_connection_set(&z4, &h2, false),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            subgroup_code_connection_set(&z4, &h2, true),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn subgroup_connection_set_with_self_paired_cosets() {
        // Odd subgroup, even index: self-paired cosets must resolve to
        // involutions. H = <3> in Z12 has index 4.
        let z12 = g(&[12]);
        let h = subgroup_generated(&z12, &[z12.element(&[3]).unwrap()]).unwrap();
        let s = subgroup_code_connection_set(&z12, &h, false).unwrap();
        assert!(is_perfect_code(&z12, &s, &GroupSubset::from_subgroup(&h)).unwrap().holds);
    }

    #[test]
    fn dense_engine_agrees_with_general_solver() {
        for (factors, conn, total) in [
            (vec![6u64], "{1,5}", false),
            (vec![4], "{1,3}", true),
            (vec![12], "{1,5,6,7,11}", false),
            (vec![12], "{1,3,5,7,9,11}", true),
            (vec![2, 10], "{(1,5),(0,1),(0,3),(0,7),(0,9)}", true),
            (vec![5, 5], "{(1,1),(1,4),(4,1),(4,4)}", false),
            (vec![42], "{1,5,6,7,11,12,13,17,18,19,23,24,25,29,30,31,35,36,37,41}", false),
        ] {
            let group = g(&factors);
            let s = sub(&group, conn);
            let general = enumerate_codes(&group, &s, total, &SearchLimits::default()).unwrap();
            let dg = dense::DenseGroup::new(&group).unwrap();
            let tile_mask = dg
                .subset_mask(&if total { s.clone() } else { s.with_identity() })
                .unwrap();
            let cover = dense::MaskCover::for_group_tile(&dg, tile_mask);
            let masks = cover.collect_all();
            let dense_codes: Vec<GroupSubset> =
                masks.iter().map(|&m| dg.subset_from_mask(m)).collect();
            assert_eq!(general.codes, dense_codes);
            assert_eq!(
                cover.exists_translation_closed(),
                !general.codes.is_empty()
            );
        }
    }
}
