//! Integer univariate polynomials, cyclotomic polynomials, and the
//! divisibility diagnostics built on them.
//!
//! λ_n denotes the n-th cyclotomic polynomial; x^n − 1 = ∏_{k|n} λ_k, and
//! λ_n is computed by exact division of x^n − 1 by the λ_k of the proper
//! divisors. Coefficients are arbitrary-precision integers so correctness
//! never silently degrades, and division is provided for monic divisors
//! only, which keeps everything in Z[x].

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::group::is_prime;
use crate::subsets::GroupSubset;

/// A polynomial over Z, least-degree coefficient first, trailing zeros
/// trimmed (so the leading coefficient is nonzero unless the polynomial is
/// zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> IntPolynomial {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> IntPolynomial {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// x^n − 1.
    pub fn x_power_minus_one(n: usize) -> IntPolynomial {
        let mut coeffs = vec![BigInt::from(0); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] = BigInt::from(1);
        IntPolynomial::from_coeffs(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.sign() == num_bigint::Sign::NoSign) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0 by convention.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map(|c| *c == BigInt::from(1)).unwrap_or(false)
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::from(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coefficient(i) + other.coefficient(i));
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::from(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.sign() == num_bigint::Sign::NoSign {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Quotient and remainder by a monic divisor; stays inside Z[x].
    pub fn div_rem_monic(&self, divisor: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
        if divisor.is_zero() {
            return Err(Error::InvalidArgument("division by the zero polynomial".into()));
        }
        if !divisor.is_monic() {
            return Err(Error::InvalidArgument(format!(
                "division requires a monic divisor, got leading coefficient {}",
                divisor.coeffs.last().unwrap()
            )));
        }
        let d = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((IntPolynomial::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::from(0); rem.len() - d];
        for k in (d..rem.len()).rev() {
            let factor = rem[k].clone();
            if factor.sign() != num_bigint::Sign::NoSign {
                quot[k - d] = factor.clone();
                for (j, c) in divisor.coeffs.iter().enumerate() {
                    let idx = k - d + j;
                    rem[idx] -= &factor * c;
                }
            }
        }
        rem.truncate(d);
        Ok((IntPolynomial::from_coeffs(quot), IntPolynomial::from_coeffs(rem)))
    }

    /// Exact division by a monic divisor; fails if the remainder is nonzero.
    pub fn exact_div_monic(&self, divisor: &IntPolynomial) -> Result<IntPolynomial> {
        let (q, r) = self.div_rem_monic(divisor)?;
        if !r.is_zero() {
            return Err(Error::InvalidArgument("division is not exact".into()));
        }
        Ok(q)
    }

    /// Text form `c0 + c1*x + ...` with zero terms omitted.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.sign() == num_bigint::Sign::NoSign {
                continue;
            }
            if !out.is_empty() {
                out.push_str(if c.sign() == num_bigint::Sign::Minus { " - " } else { " + " });
            } else if c.sign() == num_bigint::Sign::Minus {
                out.push('-');
            }
            let mag = c.magnitude();
            let one = mag == &1u32.into();
            match (k, one) {
                (0, _) => out.push_str(&mag.to_string()),
                (1, true) => out.push('x'),
                (1, false) => out.push_str(&format!("{mag}*x")),
                (_, true) => out.push_str(&format!("x^{k}")),
                (_, false) => out.push_str(&format!("{mag}*x^{k}")),
            }
        }
        out
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// The n-th cyclotomic polynomial, by exact division of x^n − 1 by the
/// cyclotomic polynomials of the proper divisors of n.
pub fn cyclotomic(n: u64) -> Result<IntPolynomial> {
    if n < 1 {
        return Err(Error::InvalidArgument("cyclotomic polynomial needs n >= 1".into()));
    }
    let mut table: Vec<(u64, IntPolynomial)> = Vec::new();
    for d in divisors(n) {
        let mut poly = IntPolynomial::x_power_minus_one(d as usize);
        for (e, lambda) in &table {
            if d % e == 0 {
                poly = poly.exact_div_monic(lambda)?;
            }
        }
        table.push((d, poly));
    }
    Ok(table.pop().expect("n divides n").1)
}

/// Euler's totient, the degree of the n-th cyclotomic polynomial.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    for (p, _) in crate::group::factorize(n) {
        result = result / p * (p - 1);
    }
    result
}

/// True iff `d` divides `f` exactly (d must be monic and nonzero).
pub fn divides(d: &IntPolynomial, f: &IntPolynomial) -> Result<bool> {
    let (_, r) = f.div_rem_monic(d)?;
    Ok(r.is_zero())
}

/// The one-variable shadow of the indicator polynomial of A: all variables
/// except the chosen coordinate are set to 1, so the coefficient of x^j
/// counts the elements of A whose chosen coordinate equals j.
pub fn subset_polynomial(a: &GroupSubset, coordinate: usize) -> Result<IntPolynomial> {
    if a.is_empty() {
        return Err(Error::EmptyOperand("subset_polynomial"));
    }
    let g = a.group();
    if coordinate >= g.rank() {
        return Err(Error::InvalidArgument(format!(
            "coordinate {coordinate} out of range for {g}"
        )));
    }
    let n = g.factors()[coordinate] as usize;
    let mut coeffs = vec![BigInt::from(0); n];
    for e in a.elements() {
        let j = e.coords()[coordinate] as usize;
        coeffs[j] += 1;
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// For j = 1..l, whether λ_{p^j} divides the subset polynomial of S at the
/// chosen coordinate. A diagnostic companion to the prime-power degree
/// criteria.
pub fn cyclotomic_divisibility_profile(
    s: &GroupSubset,
    coordinate: usize,
    p: u64,
    l: u32,
) -> Result<Vec<bool>> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if l < 1 {
        return Err(Error::InvalidArgument("need l >= 1".into()));
    }
    let f = subset_polynomial(s, coordinate)?;
    let mut out = Vec::with_capacity(l as usize);
    for j in 1..=l {
        let lambda = cyclotomic(p.pow(j))?;
        out.push(divides(&lambda, &f)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::AbelianGroup;

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64_coeffs(coeffs)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1).unwrap(), poly(&[-1, 1]));
        assert_eq!(cyclotomic(2).unwrap(), poly(&[1, 1]));
        assert_eq!(cyclotomic(4).unwrap(), poly(&[1, 0, 1]));
        assert_eq!(cyclotomic(5).unwrap(), poly(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic(6).unwrap(), poly(&[1, -1, 1]));
        assert!(cyclotomic(0).is_err());
    }

    #[test]
    fn cyclotomic_degree_and_value_at_one() {
        for n in 1..=60 {
            assert_eq!(cyclotomic(n).unwrap().degree() as u64, euler_phi(n));
        }
        for p in [2u64, 3, 5, 7, 11, 13] {
            for j in 1..=3 {
                let v = cyclotomic(p.pow(j)).unwrap().evaluate(&BigInt::from(1));
                assert_eq!(v, BigInt::from(p));
            }
        }
    }

    #[test]
    fn product_over_divisors() {
        for n in 1..=40u64 {
            let mut prod = poly(&[1]);
            for d in divisors(n) {
                prod = prod.mul(&cyclotomic(d).unwrap());
            }
            assert_eq!(prod, IntPolynomial::x_power_minus_one(n as usize));
        }
    }

    #[test]
    fn division_examples() {
        let l2 = cyclotomic(2).unwrap();
        assert!(divides(&l2, &IntPolynomial::x_power_minus_one(2)).unwrap());

        let l4 = cyclotomic(4).unwrap();
        assert!(!divides(&l4, &l2).unwrap());

        // Non-monic divisors are rejected rather than approximated.
        let two_x = poly(&[0, 2]);
        assert!(divides(&two_x, &poly(&[0, 0, 2])).is_err());
        assert!(poly(&[1]).div_rem_monic(&IntPolynomial::zero()).is_err());
    }

    #[test]
    fn division_reconstructs() {
        let f = IntPolynomial::x_power_minus_one(12);
        let d = cyclotomic(12).unwrap();
        let (q, r) = f.div_rem_monic(&d).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.mul(&d), f);

        let g = poly(&[3, 1, 4, 1, 5]);
        let d = poly(&[2, 0, 1]);
        let (q, r) = g.div_rem_monic(&d).unwrap();
        assert_eq!(q.mul(&d).add(&r), g);
        assert!(r.degree() < d.degree());
    }

    #[test]
    fn subset_polynomial_examples() {
        let z = AbelianGroup::new(&[6, 4]).unwrap();
        let s0 = GroupSubset::parse(&z, "{(1,1),(1,2),(3,2),(5,2),(5,3)}")
            .unwrap()
            .with_identity();
        // First coordinates of S0 are 0,1,1,3,5,5.
        assert_eq!(subset_polynomial(&s0, 0).unwrap(), poly(&[1, 2, 0, 1, 0, 2]));

        let single = GroupSubset::parse(&z, "{(0,0)}").unwrap();
        assert_eq!(subset_polynomial(&single, 1).unwrap(), poly(&[1]));

        let z12 = AbelianGroup::new(&[12]).unwrap();
        let s = GroupSubset::parse(&z12, "{1,3,5,7,9,11}").unwrap();
        assert_eq!(
            subset_polynomial(&s, 0).unwrap(),
            poly(&[0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1])
        );
        assert!(subset_polynomial(&s, 1).is_err());
    }

    #[test]
    fn subset_polynomial_counts_size_at_one() {
        let z = AbelianGroup::new(&[6, 4]).unwrap();
        let s = GroupSubset::parse(&z, "{(1,1),(1,2),(3,2),(5,2),(5,3)}").unwrap();
        for coord in 0..2 {
            let f = subset_polynomial(&s, coord).unwrap();
            assert_eq!(f.evaluate(&BigInt::from(1)), BigInt::from(s.len()));
        }
    }

    #[test]
    fn prime_residue_system_divisibility() {
        // A connection set whose first coordinates form a full residue
        // system mod 5 has subset polynomial exactly λ5.
        let z = AbelianGroup::new(&[5, 4]).unwrap();
        let s0 = GroupSubset::parse(&z, "{(0,0),(1,1),(2,2),(3,2),(4,3)}").unwrap();
        let f = subset_polynomial(&s0, 0).unwrap();
        assert_eq!(f, cyclotomic(5).unwrap());
        assert!(divides(&cyclotomic(5).unwrap(), &f).unwrap());
    }

    #[test]
    fn divisibility_profile_examples() {
        // Independent oracle for the half-degree Z42 instance: S0 hits each
        // residue class mod 7 exactly three times, so f ≡ 3·λ7 mod (x^7 − 1)
        // and λ7 divides f. Checked here by explicit division.
        let z42 = AbelianGroup::new(&[42]).unwrap();
        let s0 = GroupSubset::parse(
            &z42,
            "{1,5,6,7,11,12,13,17,18,19,23,24,25,29,30,31,35,36,37,41}",
        )
        .unwrap()
        .with_identity();
        assert_eq!(cyclotomic_divisibility_profile(&s0, 0, 7, 1).unwrap(), vec![true]);

        let zn = AbelianGroup::new(&[9]).unwrap();
        let id = GroupSubset::parse(&zn, "{0}").unwrap();
        assert_eq!(
            cyclotomic_divisibility_profile(&id, 0, 3, 2).unwrap(),
            vec![false, false]
        );

        assert!(cyclotomic_divisibility_profile(&id, 0, 4, 1).is_err());
    }

    #[test]
    fn text_form() {
        assert_eq!(poly(&[1, 1, 1, 1, 1]).to_text(), "1 + x + x^2 + x^3 + x^4");
        assert_eq!(poly(&[-1, 0, 0, 1]).to_text(), "-1 + x^3");
        assert_eq!(poly(&[1, -2]).to_text(), "1 - 2*x");
        assert_eq!(IntPolynomial::zero().to_text(), "0");
    }
}
