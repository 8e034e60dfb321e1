//! Substitution decomposition of permutations.
//!
//! Every permutation is canonically either trivial, a direct sum of at
//! least two sum-indecomposable blocks, a skew sum of at least two
//! skew-indecomposable blocks, or the inflation of a unique simple
//! permutation of arity ≥ 4 by its maximal proper intervals.
//! `decompose` produces that canonical tree and `eval_tree` inverts it.

use std::fmt;

use crate::perm::{PermError, Permutation};

/// Node of a substitution decomposition tree. `Plus`/`Minus` children are
/// never themselves `Plus`/`Minus` respectively (maximal linear blocks), and
/// a `Simple` skeleton is a simple permutation of arity ≥ 4 with one child
/// per entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionTree {
    Leaf,
    Plus(Vec<DecompositionTree>),
    Minus(Vec<DecompositionTree>),
    Simple(Permutation, Vec<DecompositionTree>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TreeError {
    #[error("linear node must have at least two children, found {0}")]
    TooFewChildren(usize),
    #[error("skeleton {0} of a simple node is not a simple permutation of arity >= 4")]
    BadSkeleton(Permutation),
    #[error("simple node has {children} children for skeleton arity {arity}")]
    ChildCountMismatch { children: usize, arity: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}

impl DecompositionTree {
    /// Number of leaves; equals the arity of the encoded permutation.
    pub fn leaf_count(&self) -> usize {
        match self {
            DecompositionTree::Leaf => 1,
            DecompositionTree::Plus(kids)
            | DecompositionTree::Minus(kids)
            | DecompositionTree::Simple(_, kids) => kids.iter().map(|k| k.leaf_count()).sum(),
        }
    }

    /// Number of `Simple` nodes anywhere in the tree.
    pub fn simple_node_count(&self) -> usize {
        match self {
            DecompositionTree::Leaf => 0,
            DecompositionTree::Plus(kids) | DecompositionTree::Minus(kids) => {
                kids.iter().map(|k| k.simple_node_count()).sum()
            }
            DecompositionTree::Simple(_, kids) => {
                1 + kids.iter().map(|k| k.simple_node_count()).sum::<usize>()
            }
        }
    }

    /// Skeletons of all `Simple` nodes, outermost first.
    pub fn simple_skeletons(&self) -> Vec<&Permutation> {
        let mut out = Vec::new();
        fn walk<'a>(t: &'a DecompositionTree, out: &mut Vec<&'a Permutation>) {
            match t {
                DecompositionTree::Leaf => {}
                DecompositionTree::Plus(kids) | DecompositionTree::Minus(kids) => {
                    kids.iter().for_each(|k| walk(k, out))
                }
                DecompositionTree::Simple(skel, kids) => {
                    out.push(skel);
                    kids.iter().for_each(|k| walk(k, out));
                }
            }
        }
        walk(self, &mut out);
        out
    }
}

/// Renders as nested prefix terms: `1`, `+(…)`, `-(…)`, `<skeleton>(…)`.
impl fmt::Display for DecompositionTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn children(f: &mut fmt::Formatter<'_>, kids: &[DecompositionTree]) -> fmt::Result {
            write!(f, "(")?;
            for (i, kid) in kids.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{kid}")?;
            }
            write!(f, ")")
        }
        match self {
            DecompositionTree::Leaf => write!(f, "1"),
            DecompositionTree::Plus(kids) => {
                write!(f, "+")?;
                children(f, kids)
            }
            DecompositionTree::Minus(kids) => {
                write!(f, "-")?;
                children(f, kids)
            }
            DecompositionTree::Simple(skel, kids) => {
                write!(f, "{skel}")?;
                children(f, kids)
            }
        }
    }
}

/// Canonical substitution decomposition of a permutation.
pub fn decompose(sigma: &Permutation) -> DecompositionTree {
    let values: Vec<usize> = sigma.entries().collect();
    decompose_values(&values)
}

fn decompose_values(values: &[usize]) -> DecompositionTree {
    let n = values.len();
    if n == 1 {
        return DecompositionTree::Leaf;
    }
    if let Some(blocks) = linear_blocks(values, true) {
        return DecompositionTree::Plus(block_trees(values, &blocks));
    }
    if let Some(blocks) = linear_blocks(values, false) {
        return DecompositionTree::Minus(block_trees(values, &blocks));
    }
    // neither sum- nor skew-decomposable: the maximal proper intervals are
    // pairwise disjoint and their quotient is a simple permutation
    let blocks = maximal_proper_intervals(values);
    let mut reps: Vec<(usize, usize)> = blocks
        .iter()
        .enumerate()
        .map(|(idx, &(start, end))| (values[start..end].iter().min().copied().unwrap(), idx))
        .collect();
    reps.sort();
    let mut skeleton = vec![0usize; blocks.len()];
    for (rank, &(_, idx)) in reps.iter().enumerate() {
        skeleton[idx] = rank + 1;
    }
    let skeleton = Permutation::from_one_line(skeleton).expect("block quotient is a bijection");
    debug_assert!(skeleton.is_simple() && skeleton.arity() >= 4);
    DecompositionTree::Simple(skeleton, block_trees(values, &blocks))
}

fn block_trees(values: &[usize], blocks: &[(usize, usize)]) -> Vec<DecompositionTree> {
    blocks
        .iter()
        .map(|&(start, end)| decompose_values(&normalize(&values[start..end])))
        .collect()
}

fn normalize(values: &[usize]) -> Vec<usize> {
    let mut sorted: Vec<usize> = values.to_vec();
    sorted.sort_unstable();
    values
        .iter()
        .map(|v| sorted.binary_search(v).unwrap() + 1)
        .collect()
}

// Finest split into consecutive blocks of contiguous values running upward
// (plus) or downward (minus); None unless there are at least two blocks.
// Half-open (start, end) index pairs. A prefix of length k is a cut for the
// plus case iff its k distinct values are exactly the k smallest, which the
// cumulative prefix maximum detects on its own; dually for minus.
fn linear_blocks(values: &[usize], plus: bool) -> Option<Vec<(usize, usize)>> {
    let n = values.len();
    let lo = *values.iter().min().unwrap();
    let hi = *values.iter().max().unwrap();
    let mut cuts = vec![0usize];
    let mut min_prefix = usize::MAX;
    let mut max_prefix = 0usize;
    for (k, &v) in values.iter().enumerate().take(n - 1) {
        min_prefix = min_prefix.min(v);
        max_prefix = max_prefix.max(v);
        let len = k + 1;
        let cut = if plus {
            max_prefix == lo + len - 1
        } else {
            min_prefix == hi + 1 - len
        };
        if cut {
            cuts.push(len);
        }
    }
    if cuts.len() < 2 {
        return None;
    }
    cuts.push(n);
    Some(cuts.windows(2).map(|w| (w[0], w[1])).collect())
}

// Maximal intervals of positions (proper, any length including singletons)
// whose values form a contiguous range; for a non-linear-decomposable
// permutation these partition the positions.
fn maximal_proper_intervals(values: &[usize]) -> Vec<(usize, usize)> {
    let n = values.len();
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut pos = 0;
    while pos < n {
        let mut best_end = pos + 1;
        let mut lo = values[pos];
        let mut hi = values[pos];
        for (end, &v) in values.iter().enumerate().skip(pos + 1) {
            lo = lo.min(v);
            hi = hi.max(v);
            let len = end - pos + 1;
            if len == n {
                break;
            }
            if hi - lo + 1 == len {
                best_end = end + 1;
            }
        }
        blocks.push((pos, best_end));
        pos = best_end;
    }
    debug_assert!(blocks.len() >= 4);
    blocks
}

/// Inflates each node skeleton by its children; inverse of [`decompose`].
pub fn eval_tree(tree: &DecompositionTree) -> Result<Permutation, TreeError> {
    let values = eval_values(tree)?;
    Ok(Permutation::from_one_line(values)?)
}

fn eval_values(tree: &DecompositionTree) -> Result<Vec<usize>, TreeError> {
    match tree {
        DecompositionTree::Leaf => Ok(vec![1]),
        DecompositionTree::Plus(kids) | DecompositionTree::Minus(kids) => {
            if kids.len() < 2 {
                return Err(TreeError::TooFewChildren(kids.len()));
            }
            let arity = kids.len();
            let skeleton: Vec<usize> = match tree {
                DecompositionTree::Plus(_) => (1..=arity).collect(),
                _ => (1..=arity).rev().collect(),
            };
            inflate(&skeleton, kids)
        }
        DecompositionTree::Simple(skel, kids) => {
            if !skel.is_simple() || skel.arity() < 4 {
                return Err(TreeError::BadSkeleton(skel.clone()));
            }
            if kids.len() != skel.arity() {
                return Err(TreeError::ChildCountMismatch {
                    children: kids.len(),
                    arity: skel.arity(),
                });
            }
            let skeleton: Vec<usize> = skel.entries().collect();
            inflate(&skeleton, kids)
        }
    }
}

fn inflate(skeleton: &[usize], kids: &[DecompositionTree]) -> Result<Vec<usize>, TreeError> {
    let sizes: Vec<usize> = kids
        .iter()
        .map(|k| Ok(eval_values(k)?.len()))
        .collect::<Result<_, TreeError>>()?;
    let mut out = Vec::with_capacity(sizes.iter().sum());
    for (i, kid) in kids.iter().enumerate() {
        let offset: usize = skeleton
            .iter()
            .zip(&sizes)
            .filter(|&(&s, _)| s < skeleton[i])
            .map(|(_, &size)| size)
            .sum();
        for v in eval_values(kid)? {
            out.push(v + offset);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_decomposes_to_leaf() {
        assert_eq!(decompose(&p("1")), DecompositionTree::Leaf);
    }

    #[test]
    fn simple_permutation_is_its_own_skeleton() {
        let t = decompose(&p("2413"));
        assert_eq!(
            t,
            DecompositionTree::Simple(p("2413"), vec![DecompositionTree::Leaf; 4])
        );
    }

    #[test]
    fn linear_nodes_are_maximal() {
        let t = decompose(&p("123"));
        assert_eq!(t, DecompositionTree::Plus(vec![DecompositionTree::Leaf; 3]));
        let t = decompose(&p("321"));
        assert_eq!(
            t,
            DecompositionTree::Minus(vec![DecompositionTree::Leaf; 3])
        );
        // 2143 = 21 ⊕ 21
        let t = decompose(&p("2143"));
        let minus2 = DecompositionTree::Minus(vec![DecompositionTree::Leaf; 2]);
        assert_eq!(t, DecompositionTree::Plus(vec![minus2.clone(), minus2]));
    }

    #[test]
    fn composed_example_has_unique_simple_skeleton() {
        let t = decompose(&p("3156427"));
        let skeletons = t.simple_skeletons();
        assert_eq!(skeletons, vec![&p("3142")]);
        assert_eq!(eval_tree(&t).unwrap(), p("3156427"));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval_tree(&DecompositionTree::Leaf).unwrap(), p("1"));
        let chain = DecompositionTree::Plus(vec![DecompositionTree::Leaf; 3]);
        assert_eq!(eval_tree(&chain).unwrap(), p("123"));
        let inflated = DecompositionTree::Simple(
            p("2413"),
            vec![
                DecompositionTree::Leaf,
                DecompositionTree::Plus(vec![DecompositionTree::Leaf; 2]),
                DecompositionTree::Leaf,
                DecompositionTree::Leaf,
            ],
        );
        assert_eq!(eval_tree(&inflated).unwrap(), p("24513"));
        // cross-check by partial composition
        assert_eq!(p("2413").compose(2, &p("12")).unwrap(), p("24513"));
    }

    #[test]
    fn eval_rejects_malformed_trees() {
        let one_child = DecompositionTree::Plus(vec![DecompositionTree::Leaf]);
        assert!(matches!(
            eval_tree(&one_child),
            Err(TreeError::TooFewChildren(1))
        ));
        let bad_skel = DecompositionTree::Simple(p("123"), vec![DecompositionTree::Leaf; 3]);
        assert!(matches!(
            eval_tree(&bad_skel),
            Err(TreeError::BadSkeleton(_))
        ));
        let mismatch = DecompositionTree::Simple(p("2413"), vec![DecompositionTree::Leaf; 3]);
        assert!(matches!(
            eval_tree(&mismatch),
            Err(TreeError::ChildCountMismatch { .. })
        ));
    }

    #[test]
    fn round_trip_is_identity_up_to_n7() {
        for n in 1..=7 {
            for perm in all_permutations(n).unwrap() {
                let t = decompose(&perm);
                assert_eq!(eval_tree(&t).unwrap(), perm, "round trip at {perm}");
                assert_eq!(t.leaf_count(), n);
            }
        }
    }

    #[test]
    fn canonical_form_has_no_nested_linear_nodes() {
        fn check(t: &DecompositionTree) {
            match t {
                DecompositionTree::Leaf => {}
                DecompositionTree::Plus(kids) => {
                    assert!(kids.len() >= 2);
                    for k in kids {
                        assert!(!matches!(k, DecompositionTree::Plus(_)));
                        check(k);
                    }
                }
                DecompositionTree::Minus(kids) => {
                    assert!(kids.len() >= 2);
                    for k in kids {
                        assert!(!matches!(k, DecompositionTree::Minus(_)));
                        check(k);
                    }
                }
                DecompositionTree::Simple(skel, kids) => {
                    assert!(skel.is_simple() && skel.arity() >= 4);
                    assert_eq!(kids.len(), skel.arity());
                    kids.iter().for_each(check);
                }
            }
        }
        for n in 1..=6 {
            for perm in all_permutations(n).unwrap() {
                check(&decompose(&perm));
            }
        }
    }

    #[test]
    fn separable_means_no_simple_node() {
        for n in 1..=7 {
            for perm in all_permutations(n).unwrap() {
                assert_eq!(
                    perm.is_separable(),
                    decompose(&perm).simple_node_count() == 0,
                    "at {perm}"
                );
            }
        }
    }

    #[test]
    fn display_renders_nested_terms() {
        assert_eq!(decompose(&p("1")).to_string(), "1");
        assert_eq!(decompose(&p("12")).to_string(), "+(1,1)");
        assert_eq!(decompose(&p("2413")).to_string(), "2413(1,1,1,1)");
        assert_eq!(decompose(&p("24513")).to_string(), "2413(1,+(1,1),1,1)");
    }
}
