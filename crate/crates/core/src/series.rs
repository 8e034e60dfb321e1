//! Formal power series over arbitrary-precision integers and the
//! simple-permutation counting formula.
//!
//! The number of simple permutations of length `n ≥ 4` is
//! `s_n = −c_n + (−1)^{n+1}·2`, where `c_n` is the coefficient of `xⁿ` in
//! the functional inverse of `F(x) = Σ_{n≥1} n! xⁿ`. The inverse is
//! computed by Lagrange inversion, `c_n = [x^{n−1}] (x/F(x))ⁿ / n`;
//! coefficients grow factorially, hence `BigInt` throughout.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("functional inversion requires a unit leading coefficient, found {0}")]
    NonUnitLeadingCoefficient(BigInt),
    #[error("series has no terms")]
    Empty,
}

/// A formal power series with zero constant term: `c₁x + c₂x² + …`,
/// truncated at the stored length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSeries {
    // coeffs[k] = c_{k+1}
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(IntSeries { coeffs })
    }

    /// `F(x) = Σ_{n=1..n_max} n! xⁿ`.
    pub fn factorial_series(n_max: usize) -> IntSeries {
        let mut coeffs = Vec::with_capacity(n_max);
        let mut fact = BigInt::one();
        for n in 1..=n_max {
            fact *= n;
            coeffs.push(fact.clone());
        }
        IntSeries { coeffs }
    }

    /// Coefficient of `xⁿ` (1-based); zero beyond the truncation.
    pub fn coefficient(&self, n: usize) -> BigInt {
        if n == 0 || n > self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[n - 1].clone()
        }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Compositional inverse `G` with `F(G(x)) = x`, truncated at `n_max`.
    /// Requires `c₁ = ±1` so the inverse stays integral.
    pub fn functional_inverse(&self, n_max: usize) -> Result<IntSeries, SeriesError> {
        let c1 = self.coefficient(1);
        if !(c1.clone().abs().is_one()) {
            return Err(SeriesError::NonUnitLeadingCoefficient(c1));
        }
        // h = x / F(x), an ordinary series with constant term 1/c₁ = c₁;
        // then n·c_n = [x^{n−1}] hⁿ by Lagrange inversion.
        let len = n_max.max(1);
        let mut h = vec![BigInt::zero(); len];
        h[0] = c1.clone();
        for k in 1..len {
            // convolution of h with the tail of F must vanish
            let mut acc = BigInt::zero();
            for (j, hj) in h.iter().enumerate().take(k) {
                acc += hj * self.coefficient(k - j + 1);
            }
            h[k] = -&c1 * acc;
        }
        let mut inverse = Vec::with_capacity(len);
        let mut power = vec![BigInt::one()]; // hⁿ, built incrementally
        for n in 1..=len {
            power = multiply_truncated(&power, &h, len);
            let num = &power[n - 1];
            let den = BigInt::from(n);
            assert!(
                (num % &den).is_zero(),
                "Lagrange coefficient not divisible by n"
            );
            inverse.push(num / &den);
        }
        Ok(IntSeries { coeffs: inverse })
    }
}

fn multiply_truncated(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j >= len {
                break;
            }
            out[i + j] += ai * bj;
        }
    }
    out
}

/// `s_n` for `n = 4..=n_max` via the series-inversion formula, as
/// `(n, s_n)` pairs.
pub fn simple_counts_series(n_max: usize) -> Vec<(usize, BigInt)> {
    if n_max < 4 {
        return Vec::new();
    }
    let f = IntSeries::factorial_series(n_max);
    let inv = f.functional_inverse(n_max).expect("leading coefficient 1");
    (4..=n_max)
        .map(|n| {
            let sign = if n % 2 == 1 { 2 } else { -2 };
            (n, -inv.coefficient(n) + BigInt::from(sign))
        })
        .collect()
}

/// Full simple-permutation counting sequence for `n = 1..=n_max`: the three
/// small values 1, 2, 0 directly, the rest from the inversion formula.
pub fn simple_counts(n_max: usize) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = [1, 2, 0]
        .iter()
        .take(n_max)
        .map(|&v| BigInt::from(v))
        .collect();
    out.extend(simple_counts_series(n_max).into_iter().map(|(_, s)| s));
    out
}

/// Big Schröder numbers `1, 2, 6, 22, 90, …` for `n = 1..=n_max`, via the
/// bicolored-tree recurrence: a red-rooted tree is a sequence of at least
/// two subtrees that are leaves or blue-rooted, and color swap is a
/// bijection between the two rooted colors.
pub fn schroeder_numbers(n_max: usize) -> Vec<BigInt> {
    let mut rooted: Vec<BigInt> = vec![BigInt::zero(); n_max + 1]; // red-rooted
    let mut child: Vec<BigInt> = vec![BigInt::zero(); n_max + 1]; // leaf or blue-rooted
    if n_max >= 1 {
        child[1] = BigInt::one();
    }
    for n in 2..=n_max {
        let mut acc = BigInt::zero();
        for a in 1..n {
            let b = n - a;
            acc += &child[a] * (&child[b] + &rooted[b]);
        }
        rooted[n] = acc;
        child[n] = rooted[n].clone();
    }
    (1..=n_max)
        .map(|n| {
            if n == 1 {
                BigInt::one()
            } else {
                2 * &rooted[n]
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    #[test]
    fn factorial_series_coefficients() {
        let f = IntSeries::factorial_series(5);
        assert_eq!(f.coefficient(1), BigInt::from(1));
        assert_eq!(f.coefficient(3), BigInt::from(6));
        assert_eq!(f.coefficient(5), BigInt::from(120));
        assert_eq!(f.coefficient(6), BigInt::from(0));
    }

    #[test]
    fn inverse_composes_to_identity() {
        // independent check: substitute G into F and compare with x,
        // everything indexed by plain degree 0..=n
        let n = 12usize;
        let f = IntSeries::factorial_series(n);
        let g = f.functional_inverse(n).unwrap();
        let mut g_by_degree = vec![BigInt::zero(); n + 1];
        for (k, slot) in g_by_degree.iter_mut().enumerate().skip(1) {
            *slot = g.coefficient(k);
        }
        let mut composed = vec![BigInt::zero(); n + 1];
        let mut g_power = vec![BigInt::zero(); n + 1];
        g_power[0] = BigInt::one();
        for m in 1..=n {
            let mut next = vec![BigInt::zero(); n + 1];
            for (i, a) in g_power.iter().enumerate() {
                for (j, b) in g_by_degree.iter().enumerate() {
                    if i + j <= n {
                        next[i + j] += a * b;
                    }
                }
            }
            g_power = next;
            let factor = f.coefficient(m);
            for (k, c) in g_power.iter().enumerate() {
                composed[k] += &factor * c;
            }
        }
        assert_eq!(composed[1], BigInt::from(1));
        for (degree, c) in composed.iter().enumerate() {
            if degree != 1 {
                assert_eq!(*c, BigInt::zero(), "degree {degree} of F(G(x)) nonzero");
            }
        }
    }

    #[test]
    fn rejects_nonunit_leading_coefficient() {
        let s = IntSeries::new(vec![BigInt::from(2), BigInt::from(1)]).unwrap();
        assert!(matches!(
            s.functional_inverse(4),
            Err(SeriesError::NonUnitLeadingCoefficient(_))
        ));
    }

    #[test]
    fn simple_counts_match_published_values() {
        let expected: Vec<i64> = vec![1, 2, 0, 2, 6, 46, 338, 2926, 28146, 298526];
        let got = simple_counts(10);
        assert_eq!(got.len(), 10);
        for (g, e) in got.iter().zip(expected.iter()) {
            assert_eq!(*g, BigInt::from(*e));
        }
    }

    #[test]
    fn series_counts_match_direct_enumeration() {
        let series = simple_counts(8);
        for n in 4..=8usize {
            let direct = all_permutations(n)
                .unwrap()
                .filter(|p| p.is_simple())
                .count();
            assert_eq!(series[n - 1], BigInt::from(direct), "n={n}");
        }
    }

    #[test]
    fn schroeder_recurrence_values() {
        let s = schroeder_numbers(10);
        let expected: Vec<i64> = vec![1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098];
        for (g, e) in s.iter().zip(expected.iter()) {
            assert_eq!(*g, BigInt::from(*e));
        }
    }
}
