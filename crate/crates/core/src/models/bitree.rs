//! Bicolored trees: planar rooted trees whose internal vertices carry at
//! least two ordered children and a proper red/blue 2-coloring.
//!
//! Grafting one tree onto a leaf of another, contracting the new edge when
//! two adjacent vertices share a color, makes these trees an operad, and
//! sending a red vertex to the direct-sum join of its children and a blue
//! vertex to the skew-sum join is an isomorphism onto the separable
//! permutations. Which diagonal the red corolla names is a convention; the
//! choice here is red = ascending. Trees with n leaves are counted by the
//! big Schröder numbers.

use crate::decompose::{decompose, DecompositionTree};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TreeModelError {
    #[error("internal vertex needs at least two children, found {0}")]
    TooFewChildren(usize),
    #[error("adjacent internal vertices share a color")]
    ImproperColoring,
    #[error("leaf index {index} out of range 1..={leaves}")]
    LeafOutOfRange { index: usize, leaves: usize },
    #[error("permutation {0} is not separable")]
    NotSeparable(Permutation),
}

/// A planar rooted tree with properly 2-colored internal vertices; the
/// element of the free product of two associative operads with as many
/// leaves as the arity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BicoloredTree {
    Leaf,
    Node {
        color: Color,
        children: Vec<BicoloredTree>,
    },
}

impl BicoloredTree {
    /// Internal vertex constructor enforcing the two invariants: at least
    /// two children, and no child vertex of the same color.
    pub fn node(color: Color, children: Vec<BicoloredTree>) -> Result<Self, TreeModelError> {
        if children.len() < 2 {
            return Err(TreeModelError::TooFewChildren(children.len()));
        }
        for child in &children {
            if child.root_color() == Some(color) {
                return Err(TreeModelError::ImproperColoring);
            }
        }
        Ok(BicoloredTree::Node { color, children })
    }

    /// An n-leaf corolla: a single internal vertex with n leaf children.
    pub fn corolla(color: Color, leaves: usize) -> Result<Self, TreeModelError> {
        Self::node(color, vec![BicoloredTree::Leaf; leaves])
    }

    pub fn root_color(&self) -> Option<Color> {
        match self {
            BicoloredTree::Leaf => None,
            BicoloredTree::Node { color, .. } => Some(*color),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            BicoloredTree::Leaf => 1,
            BicoloredTree::Node { children, .. } => children.iter().map(|c| c.leaf_count()).sum(),
        }
    }
}

/// Red vertices join their children by direct sums, blue vertices by skew
/// sums; the result is always separable.
pub fn tree_to_perm(tree: &BicoloredTree) -> Permutation {
    match tree {
        BicoloredTree::Leaf => Permutation::trivial(),
        BicoloredTree::Node { color, children } => {
            let parts: Vec<Permutation> = children.iter().map(tree_to_perm).collect();
            let mut acc = parts[0].clone();
            for part in &parts[1..] {
                acc = match color {
                    Color::Red => acc.direct_sum(part),
                    Color::Blue => acc.skew_sum(part),
                };
            }
            acc
        }
    }
}

/// The unique bicolored tree of a separable permutation, read off the
/// substitution decomposition; inverse of [`tree_to_perm`].
pub fn perm_to_tree(sigma: &Permutation) -> Result<BicoloredTree, TreeModelError> {
    from_decomposition(&decompose(sigma)).ok_or_else(|| TreeModelError::NotSeparable(sigma.clone()))
}

fn from_decomposition(tree: &DecompositionTree) -> Option<BicoloredTree> {
    match tree {
        DecompositionTree::Leaf => Some(BicoloredTree::Leaf),
        DecompositionTree::Plus(kids) => Some(BicoloredTree::Node {
            color: Color::Red,
            children: kids
                .iter()
                .map(from_decomposition)
                .collect::<Option<Vec<_>>>()?,
        }),
        DecompositionTree::Minus(kids) => Some(BicoloredTree::Node {
            color: Color::Blue,
            children: kids
                .iter()
                .map(from_decomposition)
                .collect::<Option<Vec<_>>>()?,
        }),
        DecompositionTree::Simple(..) => None,
    }
}

/// Grafts `b` onto the i-th leaf of `a` (leaves numbered left to right from
/// 1), contracting the connecting edge when the two now-adjacent vertices
/// share a color, so the result is again properly colored.
pub fn tree_compose(
    a: &BicoloredTree,
    i: usize,
    b: &BicoloredTree,
) -> Result<BicoloredTree, TreeModelError> {
    let leaves = a.leaf_count();
    if i == 0 || i > leaves {
        return Err(TreeModelError::LeafOutOfRange { index: i, leaves });
    }
    Ok(graft(a, i, b))
}

// The leaf index counts down as the recursion passes over children; once it
// leaves the 1..=leaf_count window the remaining children are untouched.
fn graft(a: &BicoloredTree, target: usize, b: &BicoloredTree) -> BicoloredTree {
    match a {
        BicoloredTree::Leaf => b.clone(),
        BicoloredTree::Node { color, children } => {
            let mut t = target;
            let mut new_children = Vec::with_capacity(children.len());
            for child in children {
                let leaves = child.leaf_count();
                if t >= 1 && t <= leaves {
                    let new_child = graft(child, t, b);
                    // contract when the grafted root repeats this color
                    match new_child {
                        BicoloredTree::Node {
                            color: child_color,
                            children: grandkids,
                        } if child_color == *color => new_children.extend(grandkids),
                        other => new_children.push(other),
                    }
                } else {
                    new_children.push(child.clone());
                }
                t = t.wrapping_sub(leaves);
            }
            BicoloredTree::Node {
                color: *color,
                children: new_children,
            }
        }
    }
}

/// Number of bicolored trees with `n` leaves, by the series recurrence;
/// agrees with direct generation and equals the big Schröder numbers.
pub fn count_bicolored_trees(n: usize) -> u64 {
    let values = crate::series::schroeder_numbers(n);
    values
        .last()
        .map(|v| u64::try_from(v).expect("count fits in u64"))
        .unwrap_or(0)
}

/// Every bicolored tree with `n` leaves, by direct generation. Exponential;
/// intended for cross-checking counts at small `n`.
pub fn generate_bicolored_trees(n: usize) -> Vec<BicoloredTree> {
    match n {
        0 => Vec::new(),
        1 => vec![BicoloredTree::Leaf],
        _ => [Color::Red, Color::Blue]
            .into_iter()
            .flat_map(|color| {
                compositions_into_subtrees(n, color)
                    .into_iter()
                    .map(move |children| BicoloredTree::Node { color, children })
            })
            .collect(),
    }
}

// All ordered lists of >= 2 subtrees with the given total leaf count whose
// roots avoid `parent`.
fn compositions_into_subtrees(total: usize, parent: Color) -> Vec<Vec<BicoloredTree>> {
    fn parts_avoiding(n: usize, parent: Color) -> Vec<BicoloredTree> {
        generate_bicolored_trees(n)
            .into_iter()
            .filter(|t| t.root_color() != Some(parent))
            .collect()
    }
    fn go(
        remaining: usize,
        parent: Color,
        depth: usize,
        out: &mut Vec<Vec<BicoloredTree>>,
        prefix: &mut Vec<BicoloredTree>,
    ) {
        if remaining == 0 {
            if depth >= 2 {
                out.push(prefix.clone());
            }
            return;
        }
        for size in 1..=remaining {
            // last part must leave room for at least two parts overall
            if depth == 0 && size == remaining {
                continue;
            }
            for subtree in parts_avoiding(size, parent) {
                prefix.push(subtree);
                go(remaining - size, parent, depth + 1, out, prefix);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(total, parent, 0, &mut out, &mut Vec::new());
    out
}
