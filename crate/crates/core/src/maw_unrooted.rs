//! Minimal absent words of unrooted trees, by reduction to the rooted case.
//!
//! Rooting the tree at every node and identifying all the roots yields one
//! rooted tree whose node words are exactly the words of ordered simple
//! paths. The merged tree has `1 + n(n-1)` nodes; determinization then
//! collapses the shared structure before the rooted pipeline runs.

use std::collections::VecDeque;

use crate::maw_rooted::{MawTriple, RootedMaws};
use crate::tree::{RootedTree, UnrootedTree};

/// Node count of the merged tree before determinization.
pub fn merged_node_count(n: u32) -> u64 {
    1 + n as u64 * (n as u64 - 1)
}

/// Root the tree at every node and identify the roots.
pub fn merge_rootings(t: &UnrootedTree) -> RootedTree {
    let n = t.n();
    let total = merged_node_count(n) as usize;
    let mut parent = vec![0u32; total + 1];
    let mut label = vec![0u32; total + 1];
    let mut next = 1u32;
    let mut stamp = vec![0u32; n as usize + 1];
    let mut new_id = vec![0u32; n as usize + 1];
    let mut queue = VecDeque::new();
    for root in 1..=n {
        stamp[root as usize] = root;
        new_id[root as usize] = 1; // identified common root
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            for (l, y) in t.neighbors(x) {
                if stamp[y as usize] == root {
                    continue;
                }
                stamp[y as usize] = root;
                next += 1;
                new_id[y as usize] = next;
                parent[next as usize] = new_id[x as usize];
                label[next as usize] = l.0;
                queue.push_back(y);
            }
        }
    }
    debug_assert_eq!(next as u64, merged_node_count(n));
    RootedTree::from_parents(t.alphabet().clone(), parent, label)
}

/// The built unrooted pipeline: merged, determinized, suffix tree ready.
pub struct UnrootedMaws {
    merged_nodes: u64,
    inner: RootedMaws,
}

impl UnrootedMaws {
    pub fn build(t: &UnrootedTree) -> UnrootedMaws {
        let merged = merge_rootings(t);
        UnrootedMaws { merged_nodes: merged.n() as u64, inner: RootedMaws::build(&merged) }
    }

    pub fn merged_nodes(&self) -> u64 {
        self.merged_nodes
    }

    pub fn rooted(&self) -> &RootedMaws {
        &self.inner
    }

    pub fn emit(&self, sink: impl FnMut(MawTriple)) -> u64 {
        self.inner.emit(sink)
    }

    pub fn count(&self) -> u64 {
        self.inner.count()
    }
}

/// Enumerate the minimal absent words of an unrooted tree; returns the count.
pub fn maw_unrooted(t: &UnrootedTree, sink: impl FnMut(MawTriple)) -> u64 {
    UnrootedMaws::build(t).emit(sink)
}
