//! Property tests over randomized inputs, complementing the seeded suites
//! in the verify module.

use proptest::prelude::*;

use percoperm::decompose::{decompose, eval_tree};
use percoperm::grid::GridConfig;
use percoperm::models::bitree::{perm_to_tree, tree_to_perm};
use percoperm::models::chord::{chord_compose, from_chord, to_chord};
use percoperm::perm::Permutation;

fn arb_permutation(max_arity: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_arity).prop_flat_map(|n| {
        Just((1..=n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_one_line(v).expect("shuffle is a bijection"))
    })
}

fn arb_grid(max_side: usize) -> impl Strategy<Value = GridConfig> {
    (1..=max_side, 1..=max_side).prop_flat_map(|(rows, cols)| {
        proptest::collection::vec(any::<bool>(), rows * cols).prop_map(move |bits| {
            let cells = bits
                .iter()
                .enumerate()
                .filter(|&(_, &b)| b)
                .map(|(idx, _)| (idx / cols + 1, idx % cols + 1));
            GridConfig::from_cells(rows, cols, cells).expect("cells in range")
        })
    })
}

proptest! {
    #[test]
    fn composition_is_generalized_associative(
        a in arb_permutation(5),
        b in arb_permutation(5),
        c in arb_permutation(5),
    ) {
        let k = a.arity();
        let l = b.arity();
        for i in 1..=k {
            for j in i..=i + l - 1 {
                let lhs = a.compose(i, &b).unwrap().compose(j, &c).unwrap();
                let rhs = a.compose(i, &b.compose(j - i + 1, &c).unwrap()).unwrap();
                prop_assert_eq!(&lhs, &rhs);
            }
        }
        for i in 1..k {
            for j in i + 1..=k {
                let lhs = a.compose(i, &b).unwrap().compose(j + l - 1, &c).unwrap();
                let rhs = a.compose(j, &c).unwrap().compose(i, &b).unwrap();
                prop_assert_eq!(&lhs, &rhs);
            }
        }
    }

    #[test]
    fn decomposition_round_trips(sigma in arb_permutation(7)) {
        let tree = decompose(&sigma);
        prop_assert_eq!(tree.leaf_count(), sigma.arity());
        prop_assert_eq!(eval_tree(&tree).unwrap(), sigma);
    }

    #[test]
    fn separable_iff_no_simple_node(sigma in arb_permutation(7)) {
        let tree = decompose(&sigma);
        prop_assert_eq!(sigma.is_separable(), tree.simple_node_count() == 0);
        prop_assert_eq!(sigma.is_separable(), sigma.is_separable_by_blocks());
    }

    #[test]
    fn separable_tree_round_trips(sigma in arb_permutation(7)) {
        if sigma.is_separable() {
            let tree = perm_to_tree(&sigma).unwrap();
            prop_assert_eq!(tree_to_perm(&tree), sigma);
        } else {
            prop_assert!(perm_to_tree(&sigma).is_err());
        }
    }

    #[test]
    fn chord_encoding_round_trips_and_composes(
        a in arb_permutation(6),
        b in arb_permutation(6),
        i_raw in 1usize..=6,
    ) {
        prop_assert_eq!(from_chord(&to_chord(&a)).unwrap(), a.clone());
        let i = (i_raw - 1) % a.arity() + 1;
        let direct = a.compose(i, &b).unwrap();
        let spliced = chord_compose(&to_chord(&a), i, &to_chord(&b)).unwrap();
        prop_assert_eq!(from_chord(&spliced).unwrap(), direct);
    }

    #[test]
    fn permutation_text_round_trips(sigma in arb_permutation(10)) {
        let text = sigma.to_string();
        prop_assert_eq!(text.parse::<Permutation>().unwrap(), sigma);
    }

    #[test]
    fn grid_text_round_trips(grid in arb_grid(8)) {
        let text = grid.to_text();
        prop_assert_eq!(GridConfig::parse_text(&text).unwrap(), grid);
    }

    #[test]
    fn closure_is_a_closure_operator(grid in arb_grid(8)) {
        let closed = grid.closure();
        prop_assert!(grid.is_subset_of(&closed));
        prop_assert_eq!(closed.closure(), closed.clone());
        prop_assert!(closed.is_final());
        prop_assert!(closed.is_final_structural());
    }

    #[test]
    fn matrix_substitution_matches_composition(
        a in arb_permutation(6),
        b in arb_permutation(6),
        i_raw in 1usize..=6,
    ) {
        let i = (i_raw - 1) % a.arity() + 1;
        let target = (a.at(i), i);
        let substituted = a.to_grid().substitute_at(target, &b.to_grid()).unwrap();
        prop_assert_eq!(substituted, a.compose(i, &b).unwrap().to_grid());
    }

    #[test]
    fn separability_is_closed_under_composition(
        a in arb_permutation(6),
        b in arb_permutation(6),
        i_raw in 1usize..=6,
    ) {
        if a.is_separable() && b.is_separable() {
            let i = (i_raw - 1) % a.arity() + 1;
            prop_assert!(a.compose(i, &b).unwrap().is_separable());
        }
    }
}
