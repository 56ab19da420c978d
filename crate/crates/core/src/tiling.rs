//! Factorization (tiling) verification and the code-definition equivalences.
//!
//! G = X ⊕ Y means every group element has exactly one expression x + y.
//! A subset C is a perfect code in Cay(G, S) iff G = S₀ ⊕ C, and a total
//! perfect code iff G = S ⊕ C; both checks are cross-validated here against
//! the literal graph definitions, and a group-ring product gives a third
//! equivalent route.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{AbelianGroup, GroupElement};
use crate::subsets::{
    difference_set, is_inverse_closed_connection_set, sum_set, GroupSubset,
};

/// One of the three conditions of the two-of-three criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FactorCondition {
    #[serde(rename = "sum-covers")]
    SumCovers,
    #[serde(rename = "difference-intersection")]
    DifferenceIntersection,
    #[serde(rename = "cardinality")]
    Cardinality,
}

impl std::fmt::Display for FactorCondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FactorCondition::SumCovers => "sum-covers",
            FactorCondition::DifferenceIntersection => "difference-intersection",
            FactorCondition::Cardinality => "cardinality",
        })
    }
}

/// Witness that a pair is not a factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorizationViolation {
    /// The lexicographically least element whose expression count is not one,
    /// with all its expressions (x, y).
    NonUniqueExpression {
        element: GroupElement,
        expressions: Vec<(GroupElement, GroupElement)>,
    },
    /// The first failed condition, when the verdict came from the
    /// two-of-three criterion.
    FailedCondition(FactorCondition),
}

/// Outcome of a factorization or code check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationReport {
    pub holds: bool,
    pub violation: Option<FactorizationViolation>,
}

impl FactorizationReport {
    fn ok() -> Self {
        FactorizationReport { holds: true, violation: None }
    }
}

/// Direct unique-expression check: G = X ⊕ Y.
pub fn is_factorization(x: &GroupSubset, y: &GroupSubset) -> Result<FactorizationReport> {
    if x.group() != y.group() {
        return Err(Error::AmbientMismatch);
    }
    if x.is_empty() {
        return Err(Error::EmptyOperand("is_factorization left factor"));
    }
    if y.is_empty() {
        return Err(Error::EmptyOperand("is_factorization right factor"));
    }
    let g = x.group();
    let n = g.order() as usize;
    let mut counts = vec![0u64; n];
    for &a in x.indices() {
        for &b in y.indices() {
            counts[g.add_indices(a, b) as usize] += 1;
        }
    }
    match counts.iter().position(|&c| c != 1) {
        None => Ok(FactorizationReport::ok()),
        Some(bad) => {
            let element = g.element_from_index(bad as u64)?;
            let mut expressions = Vec::new();
            for a in x.elements() {
                for b in y.elements() {
                    if a.add(&b)? == element {
                        expressions.push((a.clone(), b));
                    }
                }
            }
            Ok(FactorizationReport {
                holds: false,
                violation: Some(FactorizationViolation::NonUniqueExpression {
                    element,
                    expressions,
                }),
            })
        }
    }
}

/// The three conditions of the two-of-three factorization criterion: any two
/// of them imply the third and the factorization itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwoOfThreeReport {
    /// (a) G = X + Y.
    pub sum_covers: bool,
    /// (b) (X − X) ∩ (Y − Y) = {0}.
    pub difference_intersection_trivial: bool,
    /// (c) |G| = |X| · |Y|.
    pub cardinality: bool,
}

impl TwoOfThreeReport {
    /// Factorization verdict: at least two of the three conditions hold.
    pub fn verdict(&self) -> bool {
        let held = [
            self.sum_covers,
            self.difference_intersection_trivial,
            self.cardinality,
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        held >= 2
    }

    pub fn to_factorization_report(&self) -> FactorizationReport {
        if self.verdict() {
            return FactorizationReport::ok();
        }
        let failed = if !self.sum_covers {
            FactorCondition::SumCovers
        } else if !self.difference_intersection_trivial {
            FactorCondition::DifferenceIntersection
        } else {
            FactorCondition::Cardinality
        };
        FactorizationReport {
            holds: false,
            violation: Some(FactorizationViolation::FailedCondition(failed)),
        }
    }
}

/// Evaluates the three conditions of the two-of-three criterion.
pub fn two_of_three(x: &GroupSubset, y: &GroupSubset) -> Result<TwoOfThreeReport> {
    if x.group() != y.group() {
        return Err(Error::AmbientMismatch);
    }
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptyOperand("two_of_three factor"));
    }
    let g = x.group();
    let sum_covers = sum_set(x, y)?.len() as u64 == g.order();
    let dx = difference_set(x, x)?;
    let dy = difference_set(y, y)?;
    let difference_intersection_trivial =
        dx.indices().iter().filter(|&&i| dy.contains_index(i)).eq([&0u64]);
    let cardinality = (x.len() as u128) * (y.len() as u128) == g.order() as u128;
    Ok(TwoOfThreeReport { sum_covers, difference_intersection_trivial, cardinality })
}

fn require_connection_set(s: &GroupSubset) -> Result<()> {
    if !is_inverse_closed_connection_set(s) {
        return Err(Error::InvalidConnectionSet(format!(
            "{s} is not an identity-free inverse-closed set"
        )));
    }
    Ok(())
}

/// Count of neighbours of `v` inside `c` in Cay(G, S): #{w ∈ c : v − w ∈ S}.
fn neighbours_in(g: &AbelianGroup, s: &GroupSubset, c: &GroupSubset, v: u64) -> usize {
    c.indices()
        .iter()
        .filter(|&&w| s.contains_index(g.add_indices(v, g.neg_index(w))))
        .count()
}

/// C is a perfect code in Cay(G, S) iff G = S₀ ⊕ C. The factorization route
/// and the literal graph definition (C independent, every outside vertex
/// with exactly one neighbour in C) are both evaluated and must agree.
pub fn is_perfect_code(
    g: &AbelianGroup,
    s: &GroupSubset,
    c: &GroupSubset,
) -> Result<FactorizationReport> {
    if s.group() != g || c.group() != g {
        return Err(Error::AmbientMismatch);
    }
    require_connection_set(s)?;
    if c.is_empty() {
        return Err(Error::EmptyOperand("code"));
    }
    let report = is_factorization(&s.with_identity(), c)?;

    let graph_ok = (0..g.order()).all(|v| {
        let inside = c.contains_index(v);
        let nbrs = neighbours_in(g, s, c, v);
        if inside {
            nbrs == 0
        } else {
            nbrs == 1
        }
    });
    if graph_ok != report.holds {
        return Err(Error::InternalConsistency(
            "factorization and graph definitions of a perfect code disagree".into(),
        ));
    }
    if report.holds {
        debug_assert_eq!((s.len() as u64 + 1) * c.len() as u64, g.order());
    }
    Ok(report)
}

/// C is a total perfect code in Cay(G, S) iff G = S ⊕ C; cross-checked
/// against "every vertex has exactly one neighbour in C".
pub fn is_total_perfect_code(
    g: &AbelianGroup,
    s: &GroupSubset,
    c: &GroupSubset,
) -> Result<FactorizationReport> {
    if s.group() != g || c.group() != g {
        return Err(Error::AmbientMismatch);
    }
    require_connection_set(s)?;
    if s.is_empty() {
        return Err(Error::InvalidConnectionSet("empty connection set".into()));
    }
    if c.is_empty() {
        return Err(Error::EmptyOperand("code"));
    }
    let report = is_factorization(s, c)?;

    let graph_ok = (0..g.order()).all(|v| neighbours_in(g, s, c, v) == 1);
    if graph_ok != report.holds {
        return Err(Error::InternalConsistency(
            "factorization and graph definitions of a total perfect code disagree".into(),
        ));
    }
    if report.holds {
        debug_assert_eq!(s.len() as u64 * c.len() as u64, g.order());
        // A total perfect code induces a perfect matching on itself.
        if c.len() % 2 != 0 {
            return Err(Error::InternalConsistency(
                "total perfect code of odd size".into(),
            ));
        }
    }
    Ok(report)
}

/// An element of the integral group ring Z[G]: an integer coefficient for
/// every group element (exponents reduced by the group relations).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    group: AbelianGroup,
    coeffs: Vec<i64>,
}

impl GroupRingElement {
    pub fn zero(group: &AbelianGroup) -> GroupRingElement {
        GroupRingElement {
            group: group.clone(),
            coeffs: vec![0; group.order() as usize],
        }
    }

    /// Indicator Σ_{a ∈ A} [a].
    pub fn indicator(a: &GroupSubset) -> GroupRingElement {
        let mut r = GroupRingElement::zero(a.group());
        for &i in a.indices() {
            r.coeffs[i as usize] = 1;
        }
        r
    }

    /// Σ_{g ∈ G} [g].
    pub fn all_ones(group: &AbelianGroup) -> GroupRingElement {
        GroupRingElement {
            group: group.clone(),
            coeffs: vec![1; group.order() as usize],
        }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn coefficient(&self, x: &GroupElement) -> i64 {
        if x.group() == &self.group {
            self.coeffs[x.index() as usize]
        } else {
            0
        }
    }

    pub fn is_all_ones(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 1)
    }

    pub fn set(&mut self, x: &GroupElement, value: i64) -> Result<()> {
        if x.group() != &self.group {
            return Err(Error::AmbientMismatch);
        }
        self.coeffs[x.index() as usize] = value;
        Ok(())
    }
}

/// Convolution in Z[G]: the coefficient of h in f·g is Σ_{a+b=h} f(a)·g(b).
pub fn ring_multiply(f: &GroupRingElement, g: &GroupRingElement) -> Result<GroupRingElement> {
    if f.group != g.group {
        return Err(Error::AmbientMismatch);
    }
    let grp = &f.group;
    let mut out = GroupRingElement::zero(grp);
    for (a, &fa) in f.coeffs.iter().enumerate() {
        if fa == 0 {
            continue;
        }
        for (b, &gb) in g.coeffs.iter().enumerate() {
            if gb == 0 {
                continue;
            }
            out.coeffs[grp.add_indices(a as u64, b as u64) as usize] += fa * gb;
        }
    }
    Ok(out)
}

/// Group-ring code criterion: C is a (total) perfect code in Cay(G, S) iff
/// the product of the indicators of S₀ (resp. S) and C is Σ_{g ∈ G} [g].
/// Multiplying in Z[G] performs intrinsically the reduction by the relations
/// x_i^{n_i} = 1 that the equivalent polynomial identity spells out.
pub fn polynomial_code_criterion(
    g: &AbelianGroup,
    s: &GroupSubset,
    c: &GroupSubset,
    total: bool,
) -> Result<bool> {
    if s.group() != g || c.group() != g {
        return Err(Error::AmbientMismatch);
    }
    require_connection_set(s)?;
    if c.is_empty() {
        return Err(Error::EmptyOperand("code"));
    }
    let tile = if total { s.clone() } else { s.with_identity() };
    if tile.is_empty() {
        return Err(Error::InvalidConnectionSet("empty connection set".into()));
    }
    let product = ring_multiply(
        &GroupRingElement::indicator(&tile),
        &GroupRingElement::indicator(c),
    )?;
    Ok(product.is_all_ones())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(factors: &[u64]) -> AbelianGroup {
        AbelianGroup::new(factors).unwrap()
    }

    fn sub(group: &AbelianGroup, text: &str) -> GroupSubset {
        GroupSubset::parse(group, text).unwrap()
    }

    #[test]
    fn factorization_of_z6xz4_code() {
        let z = g(&[6, 4]);
        let s0 = sub(&z, "{(1,1),(1,2),(3,2),(5,2),(5,3)}").with_identity();
        let c = sub(&z, "{(0,0),(0,2),(3,1),(3,3)}");
        assert!(is_factorization(&s0, &c).unwrap().holds);
    }

    #[test]
    fn factorization_trivial_and_failing() {
        let z = g(&[4]);
        let full = GroupSubset::full(&z);
        let id = sub(&z, "{0}");
        assert!(is_factorization(&full, &id).unwrap().holds);

        let x = sub(&z, "{0,1}");
        let report = is_factorization(&x, &x).unwrap();
        assert!(!report.holds);
        match report.violation.unwrap() {
            FactorizationViolation::NonUniqueExpression { element, expressions } => {
                assert_eq!(element.to_string(), "1");
                assert_eq!(expressions.len(), 2);
            }
            other => panic!("unexpected violation {other:?}"),
        }
    }

    #[test]
    fn two_of_three_on_total_code_instance() {
        // Z5 x Z10 with a subgroup code: conditions (b) and (c) hold.
        let z = g(&[5, 10]);
        let s = sub(&z, "{(0,5),(1,4),(1,6),(4,4),(4,6)}");
        let c = sub(&z, "{(0,0),(2,1),(4,2),(1,3),(3,4),(0,5),(2,6),(4,7),(1,8),(3,9)}");
        let r = two_of_three(&s, &c).unwrap();
        assert!(r.difference_intersection_trivial);
        assert!(r.cardinality);
        assert!(r.verdict());

        let z6 = g(&[6]);
        let r = two_of_three(&GroupSubset::full(&z6), &sub(&z6, "{0}")).unwrap();
        assert!(r.sum_covers && r.difference_intersection_trivial && r.cardinality);

        let x = sub(&z6, "{0,1,2}");
        let y = sub(&z6, "{0,1}");
        let r = two_of_three(&x, &y).unwrap();
        assert!(r.cardinality);
        assert!(!r.sum_covers);
        assert!(!r.difference_intersection_trivial);
        assert!(!r.verdict());
        assert_eq!(
            r.to_factorization_report().violation,
            Some(FactorizationViolation::FailedCondition(FactorCondition::SumCovers))
        );
    }

    #[test]
    fn perfect_code_examples() {
        let z55 = g(&[5, 5]);
        let s = sub(&z55, "{(1,1),(1,4),(4,1),(4,4)}");
        let c = sub(&z55, "{(0,0),(2,1),(4,2),(1,3),(3,4)}");
        assert!(is_perfect_code(&z55, &s, &c).unwrap().holds);

        // Complete graph: any single vertex is a perfect code.
        let z7 = g(&[7]);
        let s = GroupSubset::full(&z7).without_identity();
        for v in z7.elements() {
            let c = GroupSubset::singleton(&v);
            assert!(is_perfect_code(&z7, &s, &c).unwrap().holds);
        }

        let z42 = g(&[42]);
        let s = sub(
            &z42,
            "{1,5,6,7,11,12,13,17,18,19,23,24,25,29,30,31,35,36,37,41}",
        );
        let c = sub(&z42, "{13,22}");
        assert!(is_perfect_code(&z42, &s, &c).unwrap().holds);
    }

    #[test]
    fn perfect_code_rejects_bad_connection_set() {
        let z = g(&[5]);
        let s = sub(&z, "{1,2}");
        let c = sub(&z, "{0}");
        assert!(matches!(
            is_perfect_code(&z, &s, &c),
            Err(Error::InvalidConnectionSet(_))
        ));
    }

    #[test]
    fn total_perfect_code_examples() {
        let z12 = g(&[12]);
        let s = sub(&z12, "{1,3,5,7,9,11}");
        assert!(is_total_perfect_code(&z12, &s, &sub(&z12, "{0,1}")).unwrap().holds);
        assert!(!is_total_perfect_code(&z12, &s, &sub(&z12, "{0,6}")).unwrap().holds);

        let z2 = g(&[2]);
        let s = sub(&z2, "{1}");
        assert!(is_total_perfect_code(&z2, &s, &sub(&z2, "{0,1}")).unwrap().holds);

        let z510 = g(&[5, 10]);
        let s = sub(&z510, "{(0,5),(1,4),(1,6),(4,4),(4,6)}");
        let c = sub(
            &z510,
            "{(0,0),(2,1),(4,2),(1,3),(3,4),(0,5),(2,6),(4,7),(1,8),(3,9)}",
        );
        assert!(is_total_perfect_code(&z510, &s, &c).unwrap().holds);
    }

    #[test]
    fn ring_multiply_examples() {
        let z = g(&[6, 4]);
        let s0 = sub(&z, "{(1,1),(1,2),(3,2),(5,2),(5,3)}").with_identity();
        let c = sub(&z, "{(0,0),(0,2),(3,1),(3,3)}");
        let product = ring_multiply(
            &GroupRingElement::indicator(&s0),
            &GroupRingElement::indicator(&c),
        )
        .unwrap();
        assert!(product.is_all_ones());

        // [0] is the ring identity.
        let id = GroupRingElement::indicator(&sub(&z, "{(0,0)}"));
        let f = GroupRingElement::indicator(&c);
        assert_eq!(ring_multiply(&id, &f).unwrap(), f);

        let z4 = g(&[4]);
        let f = GroupRingElement::indicator(&sub(&z4, "{0,1}"));
        let sq = ring_multiply(&f, &f).unwrap();
        let coeff = |k: i64| sq.coefficient(&z4.element(&[k]).unwrap());
        assert_eq!((coeff(0), coeff(1), coeff(2), coeff(3)), (1, 2, 1, 0));
    }

    #[test]
    fn group_ring_criterion_matches_checkers() {
        let z = g(&[6, 4]);
        let s = sub(&z, "{(1,1),(1,2),(3,2),(5,2),(5,3)}");
        let c = sub(&z, "{(0,0),(0,2),(3,1),(3,3)}");
        assert!(polynomial_code_criterion(&z, &s, &c, false).unwrap());

        let z510 = g(&[5, 10]);
        let s = sub(&z510, "{(0,5),(1,4),(1,6),(4,4),(4,6)}");
        let c = sub(
            &z510,
            "{(0,0),(2,1),(4,2),(1,3),(3,4),(0,5),(2,6),(4,7),(1,8),(3,9)}",
        );
        assert!(polynomial_code_criterion(&z510, &s, &c, true).unwrap());

        // Balls at 0 and 2 miss the element 4.
        let z6 = g(&[6]);
        let s = sub(&z6, "{1,5}");
        let c = sub(&z6, "{0,2}");
        assert!(!polynomial_code_criterion(&z6, &s, &c, false).unwrap());
        assert!(!is_perfect_code(&z6, &s, &c).unwrap().holds);
    }

    #[test]
    fn translation_invariance_of_codes() {
        let z = g(&[6, 4]);
        let s = sub(&z, "{(1,1),(1,2),(3,2),(5,2),(5,3)}");
        let c = sub(&z, "{(0,0),(0,2),(3,1),(3,3)}");
        for t in z.elements() {
            let shifted = c.translate(&t).unwrap();
            assert!(is_perfect_code(&z, &s, &shifted).unwrap().holds);
        }
    }

    #[test]
    fn degree_law() {
        let z = g(&[5, 5]);
        let s = sub(&z, "{(1,1),(1,4),(4,1),(4,4)}");
        let c = sub(&z, "{(0,0),(2,1),(4,2),(1,3),(3,4)}");
        assert!(is_perfect_code(&z, &s, &c).unwrap().holds);
        assert_eq!((s.len() as u64 + 1) * c.len() as u64, z.order());
    }
}
