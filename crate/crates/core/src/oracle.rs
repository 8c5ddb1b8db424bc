//! Brute-force reference implementations.
//!
//! Everything here is deliberately naive: factor closures are materialized
//! as sorted sets and minimal absent words are found by trying every
//! `a·u·b`. These are the ground truth the fast pipeline is tested against,
//! guarded by size limits so a stray large input fails loudly instead of
//! grinding.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::alphabet::{Letter, Word};
use crate::tree::{RootedTree, UnrootedTree};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance size {size} exceeds the brute-force limit {limit} ({what})")]
    TooLarge { what: &'static str, size: u64, limit: u64 },
}

/// Size guards for the brute-force oracles.
#[derive(Clone, Copy, Debug)]
pub struct OracleLimits {
    pub max_word_len: usize,
    pub max_rooted_nodes: u32,
    pub max_unrooted_nodes: u32,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_word_len: 64, max_rooted_nodes: 16, max_unrooted_nodes: 12 }
    }
}

/// All factors (contiguous subwords) of all input words, including ε.
pub fn factor_closure<'a>(words: impl IntoIterator<Item = &'a Word>) -> BTreeSet<Word> {
    let mut closure = BTreeSet::new();
    closure.insert(Word::new());
    for w in words {
        for i in 0..w.len() {
            for j in i + 1..=w.len() {
                closure.insert(w[i..j].to_vec());
            }
        }
    }
    closure
}

/// Minimal absent words of a factor-closed language: every `a·u·b` with
/// `a·u` and `u·b` present but `a·u·b` absent.
pub fn oracle_maw(closure: &BTreeSet<Word>, sigma: u32) -> BTreeSet<Word> {
    let mut maws = BTreeSet::new();
    let mut candidate = Word::new();
    for u in closure {
        for a in 0..sigma {
            candidate.clear();
            candidate.push(Letter(a));
            candidate.extend_from_slice(u);
            if !closure.contains(&candidate) {
                continue; // a·u absent
            }
            for b in 0..sigma {
                candidate.push(Letter(b));
                let missing = !closure.contains(&candidate);
                if missing && closure.contains(&candidate[1..]) {
                    debug_assert!(closure.contains(&candidate[..candidate.len() - 1]));
                    maws.insert(candidate.clone());
                }
                candidate.pop();
            }
        }
    }
    maws
}

pub fn oracle_maw_word(
    w: &[Letter],
    sigma: u32,
    limits: &OracleLimits,
) -> Result<BTreeSet<Word>, OracleError> {
    if w.len() > limits.max_word_len {
        return Err(OracleError::TooLarge {
            what: "word length",
            size: w.len() as u64,
            limit: limits.max_word_len as u64,
        });
    }
    let word = w.to_vec();
    Ok(oracle_maw(&factor_closure([&word]), sigma))
}

pub fn oracle_maw_rooted(
    t: &RootedTree,
    limits: &OracleLimits,
) -> Result<BTreeSet<Word>, OracleError> {
    if t.n() > limits.max_rooted_nodes {
        return Err(OracleError::TooLarge {
            what: "rooted tree nodes",
            size: t.n() as u64,
            limit: limits.max_rooted_nodes as u64,
        });
    }
    let words: Vec<Word> = (1..=t.n()).map(|v| t.spell_to_root(v).unwrap()).collect();
    Ok(oracle_maw(&factor_closure(&words), t.alphabet().sigma()))
}

pub fn oracle_maw_unrooted(
    t: &UnrootedTree,
    limits: &OracleLimits,
) -> Result<BTreeSet<Word>, OracleError> {
    if t.n() > limits.max_unrooted_nodes {
        return Err(OracleError::TooLarge {
            what: "unrooted tree nodes",
            size: t.n() as u64,
            limit: limits.max_unrooted_nodes as u64,
        });
    }
    // The simple-path language is factor-closed already; the closure call
    // only adds the factors that are themselves path words.
    Ok(oracle_maw(
        &factor_closure(&simple_path_words(t).into_iter().collect::<Vec<_>>()),
        t.alphabet().sigma(),
    ))
}

/// A compacted trie built the slow way, for cross-checking the suffix tree:
/// every node word plus sentinel is inserted letter by letter into a plain
/// trie, then unary chains are collapsed.
pub struct NaiveTrieNode {
    pub label: Vec<u32>,
    pub children: Vec<NaiveTrieNode>, // sorted by first letter
    pub leaf: Option<u32>,            // original node whose word ends here
}

pub fn naive_compacted_trie(det: &RootedTree) -> NaiveTrieNode {
    assert!(det.is_deterministic());
    let sentinel = det.alphabet().sigma();
    let mut children: Vec<BTreeMap<u32, usize>> = vec![BTreeMap::new()];
    let mut word_end: Vec<Option<u32>> = vec![None];
    for v in 1..=det.n() {
        let mut word: Vec<u32> =
            det.spell_to_root(v).unwrap().iter().map(|l| l.0).collect();
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
    ) -> NaiveTrieNode {
        let mut cur = node;
        while children[cur].len() == 1 && word_end[cur].is_none() {
            let (&l, &next) = children[cur].iter().next().unwrap();
            label.push(l);
            cur = next;
        }
        let kids = children[cur]
            .iter()
            .map(|(&l, &c)| compact(children, word_end, c, vec![l]))
            .collect();
        NaiveTrieNode { label, children: kids, leaf: word_end[cur] }
    }

    let root_kids = children[0]
        .iter()
        .map(|(&l, &c)| compact(&children, &word_end, c, vec![l]))
        .collect();
    NaiveTrieNode { label: Vec::new(), children: root_kids, leaf: word_end[0] }
}

/// Compare a built suffix tree against the naive compacted trie: same edge
/// words, same branching, same leaf bijection.
pub fn verify_against_naive(
    st: &crate::suffix_tree::SuffixTree,
    naive: &NaiveTrieNode,
) -> Result<(), String> {
    fn rec(
        st: &crate::suffix_tree::SuffixTree,
        v: u32,
        nn: &NaiveTrieNode,
    ) -> Result<(), String> {
        let edge: Vec<u32> = st.edge_label(v).iter().map(|l| l.0).collect();
        if edge != nn.label {
            return Err(format!("edge words differ at node {v}"));
        }
        let st_kids = st.children(v);
        if st_kids.len() != nn.children.len() {
            return Err(format!("degree differs below node {v}"));
        }
        match (st.leaf_of(v), nn.leaf) {
            (Some(a), Some(b)) if a == b => {}
            (None, None) => {}
            other => return Err(format!("leaf bijection differs at {v}: {other:?}")),
        }
        for (&(letter, child), nchild) in st_kids.iter().zip(&nn.children) {
            if Some(&letter) != nchild.label.first() {
                return Err(format!("child letters differ below node {v}"));
            }
            rec(st, child, nchild)?;
        }
        Ok(())
    }
    rec(st, st.root(), naive)
}

/// Structural invariants of a built suffix tree: one leaf per original
/// node spelling its word plus sentinel, branching internals with distinct
/// sorted child letters, strictly growing string depths, laminar preorder
/// intervals, and at most `2(n+1)` nodes.
pub fn verify_suffix_tree_structure(
    st: &crate::suffix_tree::SuffixTree,
) -> Result<(), String> {
    let n = st.aug().original_count();
    if st.leaf_count() != n {
        return Err(format!("expected one leaf per node: {} vs {n}", st.leaf_count()));
    }
    if st.node_count() as u64 > 2 * (n as u64 + 1) {
        return Err(format!("too many nodes: {}", st.node_count()));
    }
    for &v in st.preorder_nodes().iter().rev() {
        if st.is_leaf(v) {
            if st.subtree_size(v) != 1 {
                return Err(format!("leaf {v} with a subtree"));
            }
            let orig = st.leaf_of(v).unwrap();
            if st.spell(v) != st.aug().word_of(orig) {
                return Err(format!("leaf {v} spells the wrong word"));
            }
            if st.leaf_for(orig) != v {
                return Err(format!("leaf pointers disagree at {v}"));
            }
        } else {
            let kids = st.children(v);
            if v != st.root() && kids.len() < 2 {
                return Err(format!("internal node {v} with {} children", kids.len()));
            }
            if !kids.windows(2).all(|w| w[0].0 < w[1].0) {
                return Err(format!("sibling letters unsorted at {v}"));
            }
            let mut size = 1;
            for &(_, c) in kids {
                if st.string_depth(c) <= st.string_depth(v) {
                    return Err(format!("string depth not increasing at {v}"));
                }
                if !st.in_subtree(v, c) {
                    return Err(format!("child escapes the preorder interval of {v}"));
                }
                size += st.subtree_size(c);
            }
            if size != st.subtree_size(v) {
                return Err(format!("preorder intervals not laminar at {v}"));
            }
        }
    }
    Ok(())
}

/// Words of all ordered simple paths of an unrooted tree (ε included).
pub fn simple_path_words(t: &UnrootedTree) -> BTreeSet<Word> {
    let mut words = BTreeSet::new();
    words.insert(Word::new());
    for start in 1..=t.n() {
        // DFS away from `start`, collecting the word of every path prefix
        let mut stack: Vec<(u32, u32, Word)> = vec![(start, 0, Word::new())];
        while let Some((node, from, word)) = stack.pop() {
            for (l, next) in t.neighbors(node) {
                if next == from {
                    continue;
                }
                let mut w = word.clone();
                w.push(l);
                words.insert(w.clone());
                stack.push((next, node, w));
            }
        }
    }
    words
}
