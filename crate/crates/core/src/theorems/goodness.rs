//! Good-group classification.
//!
//! An abelian group is *good* when every factorization of it into two
//! factors has at least one periodic factor. By Sands' classification the
//! good abelian groups are exactly the groups of a fixed finite list of
//! types and their subgroups. The classifier instantiates each type with
//! every admissible assignment of primes to its symbols and tests whether
//! the group embeds, using the classical subgroup criterion for abelian
//! p-groups: sorted descending, the exponent partition must be dominated
//! componentwise.

use serde::Serialize;

use crate::group::AbelianGroup;

/// Shape of one prime's exponent partition inside a type.
#[derive(Debug, Clone, Copy)]
enum PartShape {
    /// Exactly these exponents (sorted descending).
    Exact(&'static [u32]),
    /// An unbounded head exponent followed by these exponents, as in p^k or
    /// 2^λ with k, λ ≥ 1 arbitrary.
    HeadAny(&'static [u32]),
}

impl PartShape {
    /// Does the shape dominate the (descending) partition?
    fn dominates(&self, partition: &[u32]) -> bool {
        match self {
            PartShape::Exact(t) => {
                partition.len() <= t.len()
                    && partition.iter().zip(t.iter()).all(|(&a, &b)| a <= b)
            }
            PartShape::HeadAny(tail) => {
                partition.len() <= tail.len() + 1
                    && partition[1..].iter().zip(tail.iter()).all(|(&a, &b)| a <= b)
            }
        }
    }

    /// Concrete exponents large enough to exhibit the embedding.
    fn instantiate(&self, partition: &[u32]) -> Vec<u32> {
        match self {
            PartShape::Exact(t) => t.to_vec(),
            PartShape::HeadAny(tail) => {
                let head = partition.first().copied().unwrap_or(1).max(1);
                let mut v = vec![head];
                v.extend_from_slice(tail);
                v
            }
        }
    }
}

struct SandsType {
    pattern: &'static str,
    /// Parts pinned to explicit primes.
    fixed: &'static [(u64, PartShape)],
    /// Parts filled by pairwise-distinct primes, also distinct from the
    /// explicit primes of this type.
    symbols: &'static [PartShape],
}

const SANDS_TYPES: &[SandsType] = &[
    SandsType {
        pattern: "{p^k,q}",
        fixed: &[],
        symbols: &[PartShape::HeadAny(&[]), PartShape::Exact(&[1])],
    },
    SandsType {
        pattern: "{p^2,q^2}",
        fixed: &[],
        symbols: &[PartShape::Exact(&[2]), PartShape::Exact(&[2])],
    },
    SandsType {
        pattern: "{p^2,q,r}",
        fixed: &[],
        symbols: &[PartShape::Exact(&[2]), PartShape::Exact(&[1]), PartShape::Exact(&[1])],
    },
    SandsType {
        pattern: "{p,q,r,s}",
        fixed: &[],
        symbols: &[
            PartShape::Exact(&[1]),
            PartShape::Exact(&[1]),
            PartShape::Exact(&[1]),
            PartShape::Exact(&[1]),
        ],
    },
    SandsType {
        pattern: "{p^3,2,2}",
        fixed: &[(2, PartShape::Exact(&[1, 1]))],
        symbols: &[PartShape::Exact(&[3])],
    },
    SandsType {
        pattern: "{p^2,2,2,2}",
        fixed: &[(2, PartShape::Exact(&[1, 1, 1]))],
        symbols: &[PartShape::Exact(&[2])],
    },
    SandsType {
        pattern: "{p,2^2,2}",
        fixed: &[(2, PartShape::Exact(&[2, 1]))],
        symbols: &[PartShape::Exact(&[1])],
    },
    SandsType {
        pattern: "{p,2,2,2,2}",
        fixed: &[(2, PartShape::Exact(&[1, 1, 1, 1]))],
        symbols: &[PartShape::Exact(&[1])],
    },
    SandsType {
        pattern: "{p,q,2,2}",
        fixed: &[(2, PartShape::Exact(&[1, 1]))],
        symbols: &[PartShape::Exact(&[1]), PartShape::Exact(&[1])],
    },
    SandsType {
        pattern: "{p,3,3}",
        fixed: &[(3, PartShape::Exact(&[1, 1]))],
        symbols: &[PartShape::Exact(&[1])],
    },
    SandsType {
        pattern: "{3^2,3}",
        fixed: &[(3, PartShape::Exact(&[2, 1]))],
        symbols: &[],
    },
    SandsType {
        pattern: "{2^lambda,2}",
        fixed: &[(2, PartShape::HeadAny(&[1]))],
        symbols: &[],
    },
    SandsType {
        pattern: "{2^2,2^2}",
        fixed: &[(2, PartShape::Exact(&[2, 2]))],
        symbols: &[],
    },
    SandsType {
        pattern: "{p,p}",
        fixed: &[],
        symbols: &[PartShape::Exact(&[1, 1])],
    },
];

/// One prime's side of a successful embedding.
#[derive(Debug, Clone, Serialize)]
pub struct PrimeEmbedding {
    pub prime: u64,
    /// The group's exponents at this prime, descending.
    pub group_exponents: Vec<u32>,
    /// The instantiated type's exponents at the slot hosting this prime.
    pub type_exponents: Vec<u32>,
}

/// The matched type with its prime assignment.
#[derive(Debug, Clone, Serialize)]
pub struct SandsTypeMatch {
    pub pattern: &'static str,
    /// (prime, slot description) pairs, one per prime dividing the order.
    pub assignment: Vec<(u64, String)>,
}

/// Goodness verdict with the matched type and per-prime embedding data.
#[derive(Debug, Clone, Serialize)]
pub struct GoodnessCertificate {
    pub is_good: bool,
    pub matched_type: Option<SandsTypeMatch>,
    pub embedding: Vec<PrimeEmbedding>,
}

/// Classifies `group` against Sands' list: good iff its primary
/// decomposition embeds in some instantiated type.
pub fn is_good_group(group: &AbelianGroup) -> GoodnessCertificate {
    let decomposition = group.primary_decomposition();
    let primes: Vec<(u64, Vec<u32>)> = decomposition.into_iter().collect();

    for ty in SANDS_TYPES {
        if let Some((assignment, embedding)) = try_match(ty, &primes) {
            return GoodnessCertificate {
                is_good: true,
                matched_type: Some(SandsTypeMatch { pattern: ty.pattern, assignment }),
                embedding,
            };
        }
    }
    GoodnessCertificate { is_good: false, matched_type: None, embedding: Vec::new() }
}

type Assignment = Vec<(u64, String)>;

fn try_match(ty: &SandsType, primes: &[(u64, Vec<u32>)]) -> Option<(Assignment, Vec<PrimeEmbedding>)> {
    let explicit: Vec<u64> = ty.fixed.iter().map(|&(p, _)| p).collect();

    fn rec(
        ty: &SandsType,
        explicit: &[u64],
        primes: &[(u64, Vec<u32>)],
        i: usize,
        used_symbols: &mut Vec<bool>,
        assignment: &mut Assignment,
        embedding: &mut Vec<PrimeEmbedding>,
    ) -> bool {
        let Some((p, partition)) = primes.get(i) else {
            return true;
        };
        // The slot pinned to this prime, when the type has one.
        if let Some(&(_, shape)) = ty.fixed.iter().find(|&&(fp, _)| fp == *p) {
            if shape.dominates(partition) {
                assignment.push((*p, format!("explicit {p} part")));
                embedding.push(PrimeEmbedding {
                    prime: *p,
                    group_exponents: partition.clone(),
                    type_exponents: shape.instantiate(partition),
                });
                if rec(ty, explicit, primes, i + 1, used_symbols, assignment, embedding) {
                    return true;
                }
                assignment.pop();
                embedding.pop();
            }
            // A prime with an explicit slot may not take a symbol slot.
            return false;
        }
        for (j, shape) in ty.symbols.iter().enumerate() {
            if used_symbols[j] || explicit.contains(p) || !shape.dominates(partition) {
                continue;
            }
            used_symbols[j] = true;
            assignment.push((*p, format!("symbol slot {j}")));
            embedding.push(PrimeEmbedding {
                prime: *p,
                group_exponents: partition.clone(),
                type_exponents: shape.instantiate(partition),
            });
            if rec(ty, explicit, primes, i + 1, used_symbols, assignment, embedding) {
                return true;
            }
            used_symbols[j] = false;
            assignment.pop();
            embedding.pop();
        }
        false
    }

    let mut used = vec![false; ty.symbols.len()];
    let mut assignment = Vec::new();
    let mut embedding = Vec::new();
    if rec(ty, &explicit, primes, 0, &mut used, &mut assignment, &mut embedding) {
        Some((assignment, embedding))
    } else {
        None
    }
}

/// Membership of n in the good-cyclic order family
/// {p^k, p^k·q, p²q², pqr, p²qr, pqrs} over primes p, q, r, s.
pub(crate) fn order_in_good_cyclic_family(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut exps: Vec<u32> = crate::group::factorize(n).into_iter().map(|(_, e)| e).collect();
    exps.sort_unstable_by(|a, b| b.cmp(a));
    match exps.len() {
        1 => true,
        2 => exps[1] == 1 || (exps[0] == 2 && exps[1] == 2),
        3 => exps[0] <= 2 && exps[1] == 1 && exps[2] == 1,
        4 => exps.iter().all(|&e| e == 1),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(factors: &[u64]) -> AbelianGroup {
        AbelianGroup::new(factors).unwrap()
    }

    #[test]
    fn known_good_groups() {
        for factors in [
            vec![2u64, 10], // Z2 x Z2p with p = 5
            vec![5, 5],
            vec![42],
            vec![2, 6],
            vec![5, 10], // Zp x Z2p with p = 5
            vec![9, 3],
            vec![4, 4],
            vec![16, 2],
            vec![2, 2, 2, 5],
        ] {
            let cert = is_good_group(&g(&factors));
            assert!(cert.is_good, "{factors:?} should be good");
            let m = cert.matched_type.unwrap();
            // The embedding must really dominate, per prime.
            for e in &cert.embedding {
                assert!(e.group_exponents.len() <= e.type_exponents.len(), "{m:?}");
                for (a, b) in e.group_exponents.iter().zip(&e.type_exponents) {
                    assert!(a <= b);
                }
            }
        }
    }

    #[test]
    fn z5xz5_matches_the_square_type() {
        let cert = is_good_group(&g(&[5, 5]));
        assert!(cert.is_good);
        assert_eq!(cert.matched_type.unwrap().pattern, "{p,p}");
    }

    #[test]
    fn known_bad_groups() {
        for factors in [
            vec![8u64, 9],    // 2^3 · 3^2
            vec![3, 3, 3],    // explicit 3-constants may not be reused by p
            vec![8, 4],       // exceeds both two-generator 2-types
            vec![4, 2, 9],    // 3^2 with extra 2-rank
            vec![25, 5, 5],
            vec![2, 2, 3, 3, 5],
        ] {
            assert!(!is_good_group(&g(&factors)).is_good, "{factors:?} should not be good");
        }
    }

    #[test]
    fn cyclic_family_membership() {
        for n in [2u64, 4, 9, 12, 30, 36, 42, 60, 50, 210, 49] {
            assert!(order_in_good_cyclic_family(n), "{n} is in the family");
        }
        for n in [72u64, 2 * 3 * 5 * 7 * 11, 8 * 9, 4 * 9 * 25, 120] {
            assert!(!order_in_good_cyclic_family(n), "{n} is not in the family");
        }
    }

    #[test]
    fn classifier_agrees_with_cyclic_family_on_small_orders() {
        for n in 2..=300u64 {
            let cert = is_good_group(&g(&[n]));
            assert_eq!(
                cert.is_good,
                order_in_good_cyclic_family(n),
                "cyclic order {n}"
            );
        }
    }
}
