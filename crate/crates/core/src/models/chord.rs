//! The Hamiltonian-cycle model of permutations.
//!
//! A permutation `σ = σ₁…σ_n` becomes the oriented cycle
//! `0 → σ₁ → … → σ_n → 0` on a circle with `n+1` points labeled `0..n`
//! clockwise, a one-point compactification of one-line notation. Partial
//! composition splices one cycle into a point of another, and `σ` is a
//! generator of the permutation operad exactly when its cycle uses only
//! edges of the complement of the cycle graph `C_{n+1}`.

use std::fmt;

use crate::perm::{PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChordError {
    #[error("chord diagram must start at 0 and visit 1..n exactly once")]
    Malformed,
    #[error("composition position {position} out of range 1..={arity}")]
    PositionOutOfRange { position: usize, arity: usize },
    #[error("generator test requires arity >= 4, found {0}")]
    ArityTooSmall(usize),
    #[error("step {step} is invalid for arity {arity}: need gcd(step, arity+1) = 1 and 2 <= step <= arity-1")]
    InvalidStep { step: usize, arity: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// An oriented Hamiltonian cycle `0 → c₁ → … → c_n → 0` on `n+1` labeled
/// circle points, stored as the point sequence starting at 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChordDiagram {
    points: Vec<usize>,
}

impl ChordDiagram {
    /// Validates that the sequence starts at 0 and visits `1..=n` once.
    pub fn new(points: Vec<usize>) -> Result<Self, ChordError> {
        if points.len() < 2 || points[0] != 0 {
            return Err(ChordError::Malformed);
        }
        let n = points.len() - 1;
        let mut seen = vec![false; n + 1];
        for &p in &points {
            if p > n || seen[p] {
                return Err(ChordError::Malformed);
            }
            seen[p] = true;
        }
        Ok(ChordDiagram { points })
    }

    /// Number of non-zero points.
    pub fn arity(&self) -> usize {
        self.points.len() - 1
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    /// Cyclic shift `T`: every label increases by 1 mod `n+1`, then the
    /// sequence is rotated to start at 0 again.
    pub fn shift_t(&self) -> ChordDiagram {
        let modulus = self.points.len();
        let shifted: Vec<usize> = self.points.iter().map(|&p| (p + 1) % modulus).collect();
        ChordDiagram::rotate_to_zero(shifted)
    }

    /// Reflection `S`: the cycle is traversed backwards with every label
    /// replaced by its negative mod `n+1`, renormalized to start at 0.
    /// Flipping the disk over reverses both the traversal and the clockwise
    /// label order; the relabeling keeps labels clockwise, and together
    /// with [`ChordDiagram::shift_t`] this generates a dihedral action
    /// (`S² = id`, `STS = T⁻¹`).
    pub fn reverse_s(&self) -> ChordDiagram {
        let modulus = self.points.len();
        let mut reflected: Vec<usize> = self
            .points
            .iter()
            .map(|&p| (modulus - p) % modulus)
            .collect();
        reflected[1..].reverse();
        ChordDiagram { points: reflected }
    }

    fn rotate_to_zero(mut points: Vec<usize>) -> ChordDiagram {
        let zero_at = points.iter().position(|&p| p == 0).expect("0 present");
        points.rotate_left(zero_at);
        ChordDiagram { points }
    }
}

impl fmt::Debug for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChordDiagram({self})")
    }
}

/// Renders the cycle as `0→c₁→…→c_n→0`.
impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.points {
            write!(f, "{p}→")?;
        }
        write!(f, "0")
    }
}

/// The cycle `(0, σ₁, …, σ_n)` of a permutation.
pub fn to_chord(sigma: &Permutation) -> ChordDiagram {
    let mut points = Vec::with_capacity(sigma.arity() + 1);
    points.push(0);
    points.extend(sigma.entries());
    ChordDiagram { points }
}

/// Reads the permutation back off the cycle; inverse of [`to_chord`].
pub fn from_chord(diagram: &ChordDiagram) -> Result<Permutation, ChordError> {
    Ok(Permutation::from_one_line(diagram.points[1..].to_vec())?)
}

/// Partial composition of diagrams: the point of `a` labeled `aᵢ` is
/// replaced by the cycle of `b` (its 0 removed), with `b`-labels shifted by
/// `aᵢ − 1` and `a`-labels above `aᵢ` shifted by `arity(b) − 1`. Implemented
/// by splice-and-relabel on the cycles themselves, so it can serve as an
/// independent route to the permutation composition.
pub fn chord_compose(
    a: &ChordDiagram,
    i: usize,
    b: &ChordDiagram,
) -> Result<ChordDiagram, ChordError> {
    let m = a.arity();
    let n = b.arity();
    if i == 0 || i > m {
        return Err(ChordError::PositionOutOfRange {
            position: i,
            arity: m,
        });
    }
    let pivot = a.points[i];
    let mut points = Vec::with_capacity(m + n);
    for &p in &a.points {
        if p == pivot {
            points.extend(b.points[1..].iter().map(|&q| q + pivot - 1));
        } else if p > pivot {
            points.push(p + n - 1);
        } else {
            points.push(p);
        }
    }
    debug_assert_eq!(points[0], 0);
    Ok(ChordDiagram { points })
}

/// True iff no two cyclically adjacent labels of `(0, σ₁, …, σ_n, 0)`
/// differ by ±1 mod `n+1`, i.e. the cycle avoids every edge of `C_{n+1}`.
/// Characterizes the filtration generators for arity ≥ 4.
pub fn is_generator_by_cycle(sigma: &Permutation) -> Result<bool, ChordError> {
    let n = sigma.arity();
    if n < 4 {
        return Err(ChordError::ArityTooSmall(n));
    }
    let diagram = to_chord(sigma);
    let modulus = n + 1;
    Ok(diagram
        .points
        .iter()
        .zip(diagram.points.iter().cycle().skip(1))
        .all(|(&a, &b)| {
            let d = a.abs_diff(b);
            d != 1 && d != modulus - 1
        }))
}

/// The uniform-step cycle `(0, s, 2s, …, ns)` mod `n+1` read as a
/// permutation. Step 2 on an even arity `2m` is the size-2m non-percolating
/// family and step `m` its quarter-turn companion (the two coincide at
/// `m = 2`); every coprime step `2..=n−1` realizes a primitive root of
/// unity other than the two excluded ones. Steps 1 and `n` are rejected:
/// they yield the two separable diagonals.
pub fn step_family(n: usize, s: usize) -> Result<Permutation, ChordError> {
    let modulus = n + 1;
    if s < 2 || s + 1 >= modulus || gcd(s, modulus) != 1 {
        return Err(ChordError::InvalidStep { step: s, arity: n });
    }
    let points: Vec<usize> = (0..=n).map(|k| k * s % modulus).collect();
    from_chord(&ChordDiagram { points })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn d(points: &[usize]) -> ChordDiagram {
        ChordDiagram::new(points.to_vec()).unwrap()
    }

    #[test]
    fn to_chord_examples() {
        assert_eq!(to_chord(&p("3142")), d(&[0, 3, 1, 4, 2]));
        assert_eq!(to_chord(&p("42513")), d(&[0, 4, 2, 5, 1, 3]));
        assert_eq!(to_chord(&p("1")), d(&[0, 1]));
    }

    #[test]
    fn from_chord_examples() {
        assert_eq!(
            from_chord(&d(&[0, 2, 4, 6, 8, 1, 3, 5, 7])).unwrap(),
            p("24681357")
        );
        assert_eq!(from_chord(&d(&[0, 1])).unwrap(), p("1"));
        for perm in all_permutations(5).unwrap() {
            assert_eq!(from_chord(&to_chord(&perm)).unwrap(), perm);
        }
    }

    #[test]
    fn diagram_validation() {
        assert!(ChordDiagram::new(vec![1, 0]).is_err());
        assert!(ChordDiagram::new(vec![0, 2, 2]).is_err());
        assert!(ChordDiagram::new(vec![0, 3, 1]).is_err());
        assert!(ChordDiagram::new(vec![0]).is_err());
    }

    #[test]
    fn chord_composition_matches_figure() {
        let left = chord_compose(&to_chord(&p("3142")), 4, &to_chord(&p("123"))).unwrap();
        assert_eq!(left, to_chord(&p("516234")));
    }

    #[test]
    fn composing_with_trivial_diagram_is_identity() {
        let a = to_chord(&p("42513"));
        let unit = to_chord(&p("1"));
        for i in 1..=5 {
            assert_eq!(chord_compose(&a, i, &unit).unwrap(), a);
        }
        assert_eq!(chord_compose(&unit, 1, &a).unwrap(), a);
        assert!(chord_compose(&a, 6, &unit).is_err());
    }

    #[test]
    fn chord_composition_commutes_with_permutation_composition() {
        for a in all_permutations(4).unwrap() {
            for b in all_permutations(3).unwrap() {
                for i in 1..=4 {
                    let via_chords =
                        from_chord(&chord_compose(&to_chord(&a), i, &to_chord(&b)).unwrap())
                            .unwrap();
                    assert_eq!(via_chords, a.compose(i, &b).unwrap(), "{a} o_{i} {b}");
                }
            }
        }
    }

    #[test]
    fn dihedral_relations() {
        for perm in all_permutations(5).unwrap() {
            let diagram = to_chord(&perm);
            let mut t = diagram.clone();
            for _ in 0..6 {
                t = t.shift_t();
            }
            assert_eq!(t, diagram, "T^(n+1) != id at {perm}");
            assert_eq!(diagram.reverse_s().reverse_s(), diagram);
            let sts = diagram.reverse_s().shift_t().reverse_s();
            // STS = T^{-1}: applying T once more recovers the original
            assert_eq!(sts.shift_t(), diagram, "STS != T^-1 at {perm}");
        }
    }

    #[test]
    fn reflection_matches_matrix_half_turn() {
        // S acts on permutation matrices as the half turn of the square
        for n in 1..=6 {
            for perm in all_permutations(n).unwrap() {
                assert_eq!(
                    to_chord(&perm).reverse_s(),
                    to_chord(&perm.reverse().complement())
                );
            }
        }
    }

    #[test]
    fn plain_orientation_flip_matches_vertical_reflection() {
        // reversing just the traversal direction of the cycle mirrors the
        // permutation matrix about its vertical axis
        for n in 1..=6 {
            for perm in all_permutations(n).unwrap() {
                let cycle = to_chord(&perm);
                let mut flipped = cycle.points().to_vec();
                flipped[1..].reverse();
                assert_eq!(flipped, to_chord(&perm.reverse()).points());
            }
        }
    }

    #[test]
    fn generator_cycle_examples() {
        assert!(is_generator_by_cycle(&p("2413")).unwrap());
        assert!(is_generator_by_cycle(&p("3142")).unwrap());
        assert!(!is_generator_by_cycle(&p("1234")).unwrap());
        assert!(is_generator_by_cycle(&p("123")).is_err());
    }

    #[test]
    fn separable_diagram_has_consecutive_labels() {
        assert!(!is_generator_by_cycle(&p("368795412")).unwrap());
        let cycle = to_chord(&p("368795412"));
        let pairs: Vec<(usize, usize)> = cycle
            .points()
            .iter()
            .zip(cycle.points().iter().cycle().skip(1))
            .map(|(&a, &b)| (a, b))
            .collect();
        assert!(pairs.iter().any(|&(a, b)| a.abs_diff(b) == 1));
    }

    #[test]
    fn step_family_examples() {
        assert_eq!(step_family(8, 2).unwrap(), p("24681357"));
        assert_eq!(step_family(8, 4).unwrap(), p("48372615"));
        assert!(step_family(8, 1).is_err());
        assert!(step_family(8, 8).is_err());
        assert!(step_family(8, 3).is_err()); // gcd(3, 9) != 1
        assert!(step_family(8, 6).is_err());
    }

    #[test]
    fn step_family_members_are_simple_and_nonpercolating() {
        for n in 4..=10 {
            for s in 2..n {
                if gcd(s, n + 1) != 1 {
                    continue;
                }
                let perm = step_family(n, s).unwrap();
                assert!(perm.is_simple(), "step_family({n},{s}) = {perm} not simple");
                assert!(
                    !perm.to_grid().is_percolating(),
                    "step_family({n},{s}) percolates"
                );
            }
        }
    }
}
