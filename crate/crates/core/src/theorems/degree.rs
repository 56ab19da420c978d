//! Existence criteria driven by the tile cardinality: when |S₀| (perfect
//! case) or |S| (total case) is a prime p or a prime power p^l exactly
//! dividing |G|, and exactly one cyclic factor of G is divisible by p, the
//! graph admits a (total) perfect code iff the decisive coordinates of the
//! tile are pairwise incongruent mod p (resp. mod p^l). The sufficiency
//! direction is constructive: the canonical moduli code works.

use crate::error::{Error, Result};
use crate::group::{factorize, is_prime, subgroup_generated, AbelianGroup};
use crate::search::canonical_code_from_moduli;
use crate::subsets::{is_inverse_closed_connection_set, GroupSubset};
use crate::tiling::{is_perfect_code, is_total_perfect_code};

use super::verdict::{InapplicabilityReason, TheoremId, TheoremVerdict, TheoremWitness};

pub(crate) fn prime_power(n: u64) -> Option<(u64, u32)> {
    let f = factorize(n);
    match f.as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

pub(crate) fn p_adic_valuation(n: u64, p: u64) -> u32 {
    let mut v = 0;
    let mut n = n;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// The unique coordinate whose factor p divides, if exactly one exists.
pub(crate) fn sole_divisible_coordinate(factors: &[u64], p: u64) -> Option<usize> {
    let mut found = None;
    for (i, &n) in factors.iter().enumerate() {
        if n % p == 0 {
            if found.is_some() {
                return None;
            }
            found = Some(i);
        }
    }
    found
}

struct DegreeCriterion {
    theorem: TheoremId,
    /// Condition and tile on S (total case) rather than S₀.
    total: bool,
    /// Cardinality must be a prime power with the exact p-adic valuation of n.
    exact_exponent: bool,
    /// Cardinality must be a single prime; when total, an odd one.
    prime_only: bool,
}

fn check_degree_criterion(
    g: &AbelianGroup,
    s: &GroupSubset,
    crit: DegreeCriterion,
) -> Result<TheoremVerdict> {
    if s.group() != g {
        return Err(Error::AmbientMismatch);
    }
    let id = crit.theorem;
    if !is_inverse_closed_connection_set(s) {
        return Ok(TheoremVerdict::inapplicable(
            id,
            InapplicabilityReason::new("gate.connection-set", format!("{s} is not inverse-closed and identity-free")),
        ));
    }
    let tile = if crit.total { s.clone() } else { s.with_identity() };
    let size = tile.len() as u64;

    let Some((p, l)) = prime_power(size) else {
        return Ok(TheoremVerdict::inapplicable(
            id,
            InapplicabilityReason::new("gate.cardinality", format!("tile size {size} is not a prime power")),
        ));
    };
    if crit.prime_only && l != 1 {
        return Ok(TheoremVerdict::inapplicable(
            id,
            InapplicabilityReason::new("gate.cardinality", format!("tile size {size} is not prime")),
        ));
    }
    if crit.prime_only && crit.total && p == 2 {
        return Ok(TheoremVerdict::inapplicable(
            id,
            InapplicabilityReason::new("gate.cardinality", "tile size must be an odd prime"),
        ));
    }
    if crit.exact_exponent && p_adic_valuation(g.order(), p) != l {
        return Ok(TheoremVerdict::inapplicable(
            id,
            InapplicabilityReason::new(
                "gate.exponent",
                format!("{p}^{l} does not exactly divide the group order {}", g.order()),
            ),
        ));
    }
    let Some(coordinate) = sole_divisible_coordinate(g.factors(), p) else {
        return Ok(TheoremVerdict::inapplicable(
            id,
            InapplicabilityReason::new(
                "gate.divisibility",
                format!("the number of cyclic factors divisible by {p} is not exactly one"),
            ),
        ));
    };
    let generated = subgroup_generated(g, &s.elements().collect::<Vec<_>>())?;
    if generated.order() != g.order() {
        return Ok(TheoremVerdict::inapplicable(
            id,
            InapplicabilityReason::new("gate.connectivity", "S does not generate the group"),
        ));
    }

    let modulus = size; // p or p^l
    let elements: Vec<_> = tile.elements().collect();
    let mut violating = None;
    'outer: for i in 0..elements.len() {
        for j in (i + 1)..elements.len() {
            let a = elements[i].coords()[coordinate];
            let b = elements[j].coords()[coordinate];
            if a % modulus == b % modulus {
                violating = Some((elements[i].clone(), elements[j].clone()));
                break 'outer;
            }
        }
    }

    let witness = match &violating {
        Some((a, b)) => Some(TheoremWitness::ViolatingPair {
            a: a.clone(),
            b: b.clone(),
            coordinate,
            modulus,
        }),
        None => {
            // Sufficiency: the canonical moduli code, verified.
            let mut moduli = vec![1u64; g.rank()];
            moduli[coordinate] = modulus;
            let code = canonical_code_from_moduli(g, &moduli)?;
            let holds = if crit.total {
                is_total_perfect_code(g, s, &code)?.holds
            } else {
                is_perfect_code(g, s, &code)?.holds
            };
            if !holds {
                return Err(Error::InternalConsistency(format!(
                    "sufficiency code {code} fails verification for {id}"
                )));
            }
            Some(TheoremWitness::ConstructedCode(code))
        }
    };
    Ok(TheoremVerdict::applicable(id, violating.is_none(), witness))
}

/// Perfect-code criterion for prime tile size: applicable when |S₀| = p is
/// prime, exactly one cyclic factor is divisible by p, and S generates G;
/// the graph then admits a perfect code iff the decisive coordinates of S₀
/// are pairwise incongruent mod p.
pub fn check_prime_degree_perfect(g: &AbelianGroup, s: &GroupSubset) -> Result<TheoremVerdict> {
    check_degree_criterion(
        g,
        s,
        DegreeCriterion {
            theorem: TheoremId::ApcForP,
            total: false,
            exact_exponent: false,
            prime_only: true,
        },
    )
}

/// Perfect-code criterion for |S₀| = p^l with p^l exactly dividing |G|.
pub fn check_prime_power_degree_perfect(
    g: &AbelianGroup,
    s: &GroupSubset,
) -> Result<TheoremVerdict> {
    check_degree_criterion(
        g,
        s,
        DegreeCriterion {
            theorem: TheoremId::ApcForPl,
            total: false,
            exact_exponent: true,
            prime_only: false,
        },
    )
}

/// Total-code criterion for |S| = p an odd prime.
pub fn check_prime_degree_total(g: &AbelianGroup, s: &GroupSubset) -> Result<TheoremVerdict> {
    check_degree_criterion(
        g,
        s,
        DegreeCriterion {
            theorem: TheoremId::AtpcForP,
            total: true,
            exact_exponent: false,
            prime_only: true,
        },
    )
}

/// Total-code criterion for |S| = p^l with p^l exactly dividing |G|.
pub fn check_prime_power_degree_total(
    g: &AbelianGroup,
    s: &GroupSubset,
) -> Result<TheoremVerdict> {
    check_degree_criterion(
        g,
        s,
        DegreeCriterion {
            theorem: TheoremId::AtpcForPl,
            total: true,
            exact_exponent: true,
            prime_only: false,
        },
    )
}

pub(crate) fn is_semiprime(n: u64) -> bool {
    let f = factorize(n);
    f.iter().map(|&(_, e)| e).sum::<u32>() == 2
}

pub(crate) fn sole_prime(n: u64) -> Option<u64> {
    is_prime(n).then_some(n)
}
