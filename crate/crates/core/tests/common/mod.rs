//! Shared helpers for the integration suites: an independent compacted-trie
//! oracle for suffix-tree checking and structural assertions.

use std::collections::BTreeMap;

use treemaw::suffix_tree::SuffixTree;
use treemaw::tree::RootedTree;

/// A compacted trie built the slow way: insert every node word plus
/// sentinel letter by letter, then collapse unary chains.
pub struct NaiveNode {
    pub label: Vec<u32>,
    pub children: Vec<NaiveNode>,
    pub leaf: Option<u32>,
}

pub fn naive_compacted_trie(det: &RootedTree) -> NaiveNode {
    assert!(det.is_deterministic());
    let sentinel = det.alphabet().sigma();
    // uncompacted trie
    let mut children: Vec<BTreeMap<u32, usize>> = vec![BTreeMap::new()];
    let mut word_end: Vec<Option<u32>> = vec![None];
    for v in 1..=det.n() {
        let mut word: Vec<u32> = det
            .spell_to_root(v)
            .unwrap()
            .iter()
            .map(|l| l.0)
            .collect();
        word.push(sentinel);
        let mut cur = 0usize;
        for &l in &word {
            cur = match children[cur].get(&l) {
                Some(&next) => next,
                None => {
                    let id = children.len();
                    children.push(BTreeMap::new());
                    word_end.push(None);
                    children[cur].insert(l, id);
                    id
                }
            };
        }
        assert!(word_end[cur].is_none(), "distinct nodes spell distinct words");
        word_end[cur] = Some(v);
    }

    fn compact(
        children: &Vec<BTreeMap<u32, usize>>,
        word_end: &Vec<Option<u32>>,
        node: usize,
        mut label: Vec<u32>,
    ) -> NaiveNode {
        let mut cur = node;
        // collapse while exactly one child and not a word end
        while children[cur].len() == 1 && word_end[cur].is_none() {
            let (&l, &next) = children[cur].iter().next().unwrap();
            label.push(l);
            cur = next;
        }
        let kids = children[cur]
            .iter()
            .map(|(&l, &c)| compact(children, word_end, c, vec![l]))
            .collect();
        NaiveNode { label, children: kids, leaf: word_end[cur] }
    }

    let root_kids = children[0]
        .iter()
        .map(|(&l, &c)| compact(&children, &word_end, c, vec![l]))
        .collect();
    NaiveNode { label: Vec::new(), children: root_kids, leaf: word_end[0] }
}

/// Compare the fast suffix tree against the naive compacted trie: same edge
/// words, same branching, same leaf bijection.
pub fn assert_isomorphic(st: &SuffixTree, naive: &NaiveNode) {
    fn rec(st: &SuffixTree, v: u32, nn: &NaiveNode) {
        let edge: Vec<u32> = st.edge_label(v).iter().map(|l| l.0).collect();
        assert_eq!(edge, nn.label, "edge words differ at node {v}");
        let st_kids = st.children(v);
        assert_eq!(
            st_kids.len(),
            nn.children.len(),
            "degree differs below {v}"
        );
        match (st.leaf_of(v), nn.leaf) {
            (Some(a), Some(b)) => assert_eq!(a, b, "leaf bijection differs at {v}"),
            (None, None) => {}
            other => panic!("leaf/internal mismatch at {v}: {other:?}"),
        }
        for (&(letter, child), nchild) in st_kids.iter().zip(&nn.children) {
            assert_eq!(Some(&letter), nchild.label.first());
            rec(st, child, nchild);
        }
    }
    rec(st, st.root(), naive);
}

/// Structural invariants of a built suffix tree.
pub fn check_structure(st: &SuffixTree) {
    let n = st.aug().original_count();
    assert_eq!(st.leaf_count(), n, "one leaf per original node");
    assert!(st.node_count() as u64 <= 2 * (n as u64 + 1));
    for &v in st.preorder_nodes().iter().rev() {
        if st.is_leaf(v) {
            assert_eq!(st.subtree_size(v), 1);
            let aug_node = st.leaf_of(v).unwrap();
            assert_eq!(st.spell(v), st.aug().word_of(aug_node), "leaf word mismatch");
            assert_eq!(st.leaf_for(aug_node), v, "leaf pointers disagree");
        } else {
            let kids = st.children(v);
            if v != st.root() {
                assert!(kids.len() >= 2, "internal node {v} with < 2 children");
            }
            assert!(
                kids.windows(2).all(|w| w[0].0 < w[1].0),
                "sibling letters not distinct/sorted"
            );
            let mut size = 1;
            for &(_, c) in kids {
                assert!(st.string_depth(c) > st.string_depth(v));
                assert!(st.in_subtree(v, c));
                size += st.subtree_size(c);
            }
            assert_eq!(size, st.subtree_size(v), "preorder intervals not laminar");
        }
    }
}
