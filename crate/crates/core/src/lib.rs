//! Minimal absent words (MAWs) of edge-labeled trees.
//!
//! A rooted tree with edges labeled over an integer alphabet spells one word
//! per node (the labels read from the node up to the root). The factors of
//! those words form a factor-closed language; this crate enumerates the
//! language's minimal absent words — words `a·u·b` that are absent while both
//! `a·u` and `u·b` occur — in time proportional to the tree size plus the
//! output size. Unrooted trees are handled by reduction to the rooted case.
//!
//! The crate also ships brute-force oracles for cross-checking, generators
//! for extremal and random instances, and the plumbing used by the `treemaw`
//! command-line tool and the Python bindings.

pub mod alphabet;
pub mod determinize;
pub mod generators;
pub mod maw_rooted;
pub mod maw_unrooted;
pub mod oracle;
pub mod suffix_tree;
pub mod tree;

pub use alphabet::{Alphabet, Letter, Word};
pub use determinize::{determinize, is_deterministic};
pub use maw_rooted::{maw_rooted, MawTriple, RootedMaws};
pub use maw_unrooted::{maw_unrooted, merge_rootings, merged_node_count, UnrootedMaws};
pub use suffix_tree::{augment, build_suffix_tree, preprocess_lca, AugmentedTree, Lca, SuffixTree};
pub use tree::{word_to_rooted, RootedTree, TreeError, UnrootedTree};
