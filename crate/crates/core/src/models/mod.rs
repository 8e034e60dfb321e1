pub mod bitree;
pub mod chord;
pub mod spnet;

pub use bitree::{
    count_bicolored_trees, perm_to_tree, tree_compose, tree_to_perm, BicoloredTree, Color,
};
pub use chord::{
    chord_compose, from_chord, is_generator_by_cycle, step_family, to_chord, ChordDiagram,
};
pub use spnet::{count_sp_networks, sp_from_tree, sp_realize, RealizedNetwork, SpNetwork};
