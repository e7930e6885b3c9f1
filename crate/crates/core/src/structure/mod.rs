//! Constructive bijections between numerical sets and admissible data,
//! the spawning trees over `G(2k+1)` and `G^σ(2k+1)`, and additive 2-bases.

mod basis;
mod lmp;
mod tree;

pub use basis::{additive_basis_count, additive_basis_count_with, MAX_BASIS_K};
pub use lmp::{build_s_lmp, decompose_b, even_odd_drop, even_odd_lift, sigma_build, BMembership};
pub use tree::{
    level_sets, matrix_word, sigma_level_sets, sigma_spawn_children, sigma_word, spawn_children,
    word_membership, BinaryWord,
};
