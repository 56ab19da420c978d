//! Executable registry of structural existence and classification criteria
//! for (total) perfect codes in Cayley graphs of abelian groups: good-group
//! classification, degree-driven congruence criteria, coset-structure
//! classification, the circulant total-code suite, and cross-validation of
//! every criterion against the brute-force search oracle.

mod circulant;
mod crossvalidate;
mod degree;
mod goodness;
mod structure;
mod verdict;

pub use circulant::{check_circulant_tpc, CirculantTpcReport};
pub use crossvalidate::{
    registry_crossvalidate, CrossvalidateScope, CrossvalidationReport, Discrepancy,
};
pub use degree::{
    check_prime_degree_perfect, check_prime_degree_total, check_prime_power_degree_perfect,
    check_prime_power_degree_total,
};
pub use goodness::{is_good_group, GoodnessCertificate, PrimeEmbedding, SandsTypeMatch};
pub use structure::{
    classify_coset_perfect_code, validate_total_code_structure, CosetStructureReport,
    TotalCodeBranch, TotalCodeStructureReport,
};
pub use verdict::{InapplicabilityReason, TheoremId, TheoremVerdict, TheoremWitness};
