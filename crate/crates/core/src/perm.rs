//! Permutations in one-line notation and their operadic partial composition.
//!
//! A `Permutation` is a bijection of `{1..n}` stored as the sequence
//! `(σ₁, …, σ_n)`. The partial composition `a ∘_i b` inflates the i-th entry
//! of `a` by the whole of `b`, re-indexing the remaining entries; together
//! these operations make the disjoint union of all `S_n` a nonsymmetric
//! operad. Pattern containment, separability, simplicity and the permutation
//! matrix view live here as well.

use std::fmt;
use std::str::FromStr;

use crate::grid::GridConfig;

/// Largest arity we ever materialize; `u8` entries keep permutations cheap
/// to copy and hash during the enumeration sweeps.
pub const MAX_ARITY: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("entries do not form a bijection of 1..{0}")]
    NotBijection(usize),
    #[error("arity {0} exceeds the supported maximum {MAX_ARITY}")]
    ArityTooLarge(usize),
    #[error("composition position {position} out of range 1..={arity}")]
    PositionOutOfRange { position: usize, arity: usize },
    #[error("enumeration arity {0} exceeds the cap {1}")]
    EnumerationCapExceeded(usize, usize),
    #[error("malformed permutation text: {0}")]
    Parse(String),
}

/// A permutation of `{1..n}` in one-line notation, `n ≥ 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    entries: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from 1-based one-line entries, validating that
    /// they form a bijection of `{1..n}`.
    pub fn from_one_line<I>(entries: I) -> Result<Self, PermError>
    where
        I: IntoIterator<Item = usize>,
    {
        let entries: Vec<usize> = entries.into_iter().collect();
        let n = entries.len();
        if n == 0 || n > MAX_ARITY {
            return Err(PermError::ArityTooLarge(n));
        }
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotBijection(n));
            }
            seen[v] = true;
        }
        Ok(Self {
            entries: entries.into_iter().map(|v| v as u8).collect(),
        })
    }

    /// The identity permutation `12…n`.
    pub fn identity(n: usize) -> Self {
        Self::from_one_line(1..=n).expect("identity is a bijection")
    }

    /// The trivial permutation of length 1.
    pub fn trivial() -> Self {
        Self::identity(1)
    }

    pub fn arity(&self) -> usize {
        self.entries.len()
    }

    /// 1-based entry access: `at(j) = σ_j`.
    pub fn at(&self, j: usize) -> usize {
        self.entries[j - 1] as usize
    }

    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|&v| v as usize)
    }

    /// Partial composition `self ∘_i other`: the i-th entry of `self` is
    /// inflated by `other`, entries of `self` larger than `σ_i` are shifted
    /// up by `arity(other) − 1`, and the inflated block carries the entries
    /// of `other` offset by `σ_i − 1`.
    pub fn compose(&self, i: usize, other: &Permutation) -> Result<Permutation, PermError> {
        let m = self.arity();
        let n = other.arity();
        if i == 0 || i > m {
            return Err(PermError::PositionOutOfRange {
                position: i,
                arity: m,
            });
        }
        if m + n - 1 > MAX_ARITY {
            return Err(PermError::ArityTooLarge(m + n - 1));
        }
        let pivot = self.at(i);
        let mut entries = Vec::with_capacity(m + n - 1);
        let shifted = |v: usize| if v > pivot { v + n - 1 } else { v };
        for k in 1..i {
            entries.push(shifted(self.at(k)));
        }
        for b in other.entries() {
            entries.push(b + pivot - 1);
        }
        for k in i + 1..=m {
            entries.push(shifted(self.at(k)));
        }
        Ok(Permutation {
            entries: entries.into_iter().map(|v| v as u8).collect(),
        })
    }

    /// Pattern containment: true iff `pattern ≤ self`, i.e. some subsequence
    /// of `self` is in the same relative order as `pattern`. Plain
    /// backtracking over index subsequences; arities here stay small.
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        let n = self.arity();
        let m = pattern.arity();
        if m > n {
            return false;
        }
        let text: Vec<usize> = self.entries().collect();
        let pat: Vec<usize> = pattern.entries().collect();
        let mut chosen: Vec<usize> = Vec::with_capacity(m);

        fn order_compatible(text: &[usize], pat: &[usize], chosen: &[usize], cand: usize) -> bool {
            let k = chosen.len();
            for (j, &c) in chosen.iter().enumerate() {
                if (text[c] < text[cand]) != (pat[j] < pat[k]) {
                    return false;
                }
            }
            true
        }

        fn search(text: &[usize], pat: &[usize], chosen: &mut Vec<usize>, from: usize) -> bool {
            if chosen.len() == pat.len() {
                return true;
            }
            let remaining = pat.len() - chosen.len();
            for cand in from..=text.len().saturating_sub(remaining) {
                if order_compatible(text, pat, chosen, cand) {
                    chosen.push(cand);
                    if search(text, pat, chosen, cand + 1) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }

        search(&text, &pat, &mut chosen, 0)
    }

    /// Direct sum: `self` followed by `other` shifted up by `arity(self)`.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let m = self.arity();
        let entries = self
            .entries()
            .chain(other.entries().map(|v| v + m))
            .map(|v| v as u8)
            .collect();
        Permutation { entries }
    }

    /// Skew sum: `self` shifted up by `arity(other)`, followed by `other`.
    pub fn skew_sum(&self, other: &Permutation) -> Permutation {
        let n = other.arity();
        let entries = self
            .entries()
            .map(|v| v + n)
            .chain(other.entries())
            .map(|v| v as u8)
            .collect();
        Permutation { entries }
    }

    /// Separability via pattern avoidance: separable iff `self` avoids both
    /// 2413 and 3142.
    pub fn is_separable(&self) -> bool {
        let p2413 = Permutation::from_one_line([2, 4, 1, 3]).unwrap();
        let p3142 = Permutation::from_one_line([3, 1, 4, 2]).unwrap();
        !self.contains_pattern(&p2413) && !self.contains_pattern(&p3142)
    }

    /// Separability by the recursive block definition: a permutation is
    /// separable iff it is trivial or splits as a direct or skew sum of two
    /// separable permutations. Independent of [`Permutation::is_separable`].
    pub fn is_separable_by_blocks(&self) -> bool {
        fn separable(values: &[usize]) -> bool {
            let n = values.len();
            if n == 1 {
                return true;
            }
            let lo = *values.iter().min().unwrap();
            let mut max_prefix = 0;
            let mut min_prefix = usize::MAX;
            for (k, &v) in values.iter().enumerate().take(n - 1) {
                max_prefix = max_prefix.max(v);
                min_prefix = min_prefix.min(v);
                let len = k + 1;
                // prefix holds exactly the `len` smallest or largest values
                let is_low_block = min_prefix == lo && max_prefix == lo + len - 1;
                let is_high_block = max_prefix == lo + n - 1 && min_prefix == lo + n - len;
                if (is_low_block || is_high_block)
                    && separable(&values[..len])
                    && separable(&values[len..])
                {
                    return true;
                }
            }
            false
        }
        let values: Vec<usize> = self.entries().collect();
        separable(&values)
    }

    /// Simplicity: no interval of positions of length `2..n−1` has an image
    /// that is an interval of values. The trivial permutation, 12 and 21 are
    /// simple under this convention.
    pub fn is_simple(&self) -> bool {
        let n = self.arity();
        for start in 1..=n {
            let mut lo = self.at(start);
            let mut hi = lo;
            for end in start + 1..=n {
                let v = self.at(end);
                lo = lo.min(v);
                hi = hi.max(v);
                let len = end - start + 1;
                if len == n {
                    break;
                }
                if hi - lo + 1 == len {
                    return false;
                }
            }
        }
        true
    }

    /// The permutation matrix as a grid configuration: column `j` carries a
    /// red cell in row `σ_j`.
    pub fn to_grid(&self) -> GridConfig {
        let n = self.arity();
        GridConfig::from_cells(n, n, (1..=n).map(|j| (self.at(j), j)))
            .expect("permutation matrix is a valid grid")
    }

    /// Reversal `σ_n … σ_1` (matrix reflected about the vertical axis).
    pub fn reverse(&self) -> Permutation {
        Permutation {
            entries: self.entries.iter().rev().copied().collect(),
        }
    }

    /// Complement `(n+1−σ_1) … (n+1−σ_n)` (matrix reflected about the
    /// horizontal axis).
    pub fn complement(&self) -> Permutation {
        let n = self.arity() as u8;
        Permutation {
            entries: self.entries.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    /// Group-theoretic inverse (matrix transposed).
    pub fn inverse(&self) -> Permutation {
        let n = self.arity();
        let mut entries = vec![0u8; n];
        for j in 1..=n {
            entries[self.at(j) - 1] = j as u8;
        }
        Permutation { entries }
    }

    /// The eight images of `self` under the dihedral group of the square
    /// acting on permutation matrices (may repeat for symmetric matrices).
    pub fn dihedral_orbit(&self) -> Vec<Permutation> {
        let r = self.reverse();
        let c = self.complement();
        let rc = r.complement();
        let i = self.inverse();
        let ir = i.reverse();
        let ic = i.complement();
        let irc = ir.complement();
        vec![self.clone(), r, c, rc, i, ir, ic, irc]
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Arity ≤ 9 prints as a digit string ("31425"); larger arities as
/// comma-separated decimals.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arity() <= 9 {
            for v in self.entries() {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.entries().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Accepts both text forms: a digit string for arity ≤ 9, or comma-separated
/// decimals for any arity.
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(PermError::Parse("empty permutation".into()));
        }
        let entries: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<usize>()
                        .map_err(|_| PermError::Parse(format!("bad entry {part:?}")))
                })
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| d > 0)
                        .map(|d| d as usize)
                        .ok_or_else(|| PermError::Parse(format!("bad digit {c:?}")))
                })
                .collect::<Result<_, _>>()?
        };
        Permutation::from_one_line(entries)
    }
}

/// Practical cap for full `S_n` enumeration.
pub const ENUMERATION_CAP: usize = 10;

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> Result<Permutations, PermError> {
    if n == 0 || n > ENUMERATION_CAP {
        return Err(PermError::EnumerationCapExceeded(n, ENUMERATION_CAP));
    }
    Ok(Permutations {
        next: Some(Permutation::identity(n)),
    })
}

/// Lexicographic stream over `S_n`.
pub struct Permutations {
    next: Option<Permutation>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        self.next = next_lexicographic(&current);
        Some(current)
    }
}

fn next_lexicographic(p: &Permutation) -> Option<Permutation> {
    let mut e = p.entries.clone();
    let n = e.len();
    if n < 2 {
        return None;
    }
    let i = (0..n - 1).rev().find(|&i| e[i] < e[i + 1])?;
    let j = (i + 1..n).rev().find(|&j| e[j] > e[i]).unwrap();
    e.swap(i, j);
    e[i + 1..].reverse();
    Some(Permutation { entries: e })
}
