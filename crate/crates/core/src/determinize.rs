//! Determinization of rooted labeled trees.
//!
//! Merges nodes level by level so that no node keeps two child edges with
//! the same letter, preserving the set of node words. Levels are grouped
//! with counting sorts and duplicate targets are detected through an array
//! stamped per (depth, letter) group, so the whole pass is linear.

use crate::tree::RootedTree;

/// True when no node has two equal-letter child edges.
pub fn is_deterministic(t: &RootedTree) -> bool {
    t.is_deterministic()
}

/// Produce a deterministic tree with the same set of node words.
pub fn determinize(t: &RootedTree) -> RootedTree {
    if t.is_deterministic() {
        return t.clone();
    }
    let n = t.n() as usize;
    let (parent, parent_label, depth) = t.parents_raw();
    let sigma = t.alphabet().sigma() as usize;

    // Counting-sort the non-root nodes by (depth, parent letter): one stable
    // pass on the letter, then a stable pass on the depth.
    let max_depth = (1..=n).map(|v| depth[v] as usize).max().unwrap_or(0);
    let mut by_letter: Vec<u32> = Vec::with_capacity(n - 1);
    {
        let mut count = vec![0u32; sigma + 1];
        for v in 2..=n {
            count[parent_label[v] as usize + 1] += 1;
        }
        for i in 1..count.len() {
            count[i] += count[i - 1];
        }
        by_letter.resize(n - 1, 0);
        for v in 2..=n as u32 {
            let l = parent_label[v as usize] as usize;
            by_letter[count[l] as usize] = v;
            count[l] += 1;
        }
    }
    let mut order: Vec<u32> = vec![0; n - 1];
    let mut depth_start = vec![0u32; max_depth + 2];
    {
        let mut count = vec![0u32; max_depth + 2];
        for &v in &by_letter {
            count[depth[v as usize] as usize] += 1;
        }
        let mut acc = 0;
        for d in 1..=max_depth {
            depth_start[d] = acc;
            acc += count[d];
        }
        depth_start[max_depth + 1] = acc;
        let mut cursor = depth_start.clone();
        for &v in &by_letter {
            let d = depth[v as usize] as usize;
            order[cursor[d] as usize] = v;
            cursor[d] += 1;
        }
    }

    // f maps old nodes to new nodes; A detects, per group, whether a new
    // parent has already received an edge with the group's letter.
    let mut f = vec![0u32; n + 1];
    f[1] = 1;
    let mut stamp_of = vec![0u32; n + 2];
    let mut value_of = vec![0u32; n + 2];
    let mut stamp = 0u32;

    let mut new_parent = vec![0u32; 1 + 1];
    let mut new_label = vec![0u32; 1 + 1];
    let mut next_id = 1u32;

    for d in 1..=max_depth {
        let lo = depth_start[d] as usize;
        let hi = depth_start[d + 1] as usize;
        let mut i = lo;
        while i < hi {
            // one group: same depth, same parent-edge letter
            let letter = parent_label[order[i] as usize];
            stamp += 1;
            let mut j = i;
            while j < hi && parent_label[order[j] as usize] == letter {
                let old = order[j] as usize;
                let fp = f[parent[old] as usize] as usize;
                if stamp_of[fp] == stamp {
                    f[old] = value_of[fp];
                } else {
                    next_id += 1;
                    new_parent.push(fp as u32);
                    new_label.push(letter);
                    stamp_of[fp] = stamp;
                    value_of[fp] = next_id;
                    f[old] = next_id;
                }
                j += 1;
            }
            i = j;
        }
    }

    RootedTree::from_parents(t.alphabet().clone(), new_parent, new_label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::{Alphabet, Letter};
    use crate::tree::RootedTree;

    fn ab() -> Alphabet {
        Alphabet::new(3)
    }

    #[test]
    fn already_deterministic_chain() {
        let t = RootedTree::new(3, ab(), &[(2, 1, Letter(0)), (3, 2, Letter(1))]).unwrap();
        let d = determinize(&t);
        assert_eq!(d.n(), 3);
        assert_eq!(d.node_words(), t.node_words());
        assert!(d.is_deterministic());
    }

    #[test]
    fn identical_unit_branches_merge() {
        let t = RootedTree::new(3, ab(), &[(2, 1, Letter(0)), (3, 1, Letter(0))]).unwrap();
        let d = determinize(&t);
        assert_eq!(d.n(), 2);
        assert!(d.is_deterministic());
        assert_eq!(d.node_words(), t.node_words());
    }

    #[test]
    fn merges_shared_prefix_keeps_suffixes() {
        // root with a->x, a->y; x -b-> x', y -c-> y'  =>  4 nodes, words
        // {ε, a, ba, ca}
        let t = RootedTree::new(
            5,
            ab(),
            &[
                (2, 1, Letter(0)),
                (3, 1, Letter(0)),
                (4, 2, Letter(1)),
                (5, 3, Letter(2)),
            ],
        )
        .unwrap();
        let d = determinize(&t);
        assert_eq!(d.n(), 4);
        assert!(d.is_deterministic());
        assert_eq!(d.node_words(), t.node_words());
    }

    #[test]
    fn idempotent() {
        let t = RootedTree::new(
            5,
            ab(),
            &[
                (2, 1, Letter(0)),
                (3, 1, Letter(0)),
                (4, 2, Letter(1)),
                (5, 3, Letter(1)),
            ],
        )
        .unwrap();
        let once = determinize(&t);
        let twice = determinize(&once);
        assert_eq!(once.n(), twice.n());
        assert_eq!(once.node_words(), twice.node_words());
    }
}
