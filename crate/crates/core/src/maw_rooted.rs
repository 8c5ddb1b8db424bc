//! Output-sensitive enumeration of minimal absent words of a rooted tree.
//!
//! For each letter `a`, the suffix-tree leaves whose words can be extended
//! on the left by `a` form the list `L(a)`. The compacted subtree induced by
//! `L(a)` is built with the stack procedure used for Cartesian trees, and
//! every minimal absent word starting with `a` falls out of a walk of that
//! subtree: at a node of the induced tree, every suffix-tree child edge not
//! leading to induced content yields one word; along a compressed induced
//! edge, every explicit suffix-tree node passed yields one word per child
//! edge that avoids the walk's target. Each result is reported as a
//! constant-size triple and expanded only on demand.

use rayon::prelude::*;

use crate::alphabet::{Letter, Word};
use crate::determinize::determinize;
use crate::suffix_tree::{augment, build_suffix_tree, preprocess_lca, Lca, SuffixTree};
use crate::tree::RootedTree;

/// A minimal absent word `a · word(node) · b`, where `node` is an explicit
/// suffix-tree node. Constant-size; see [`SuffixTree::expand`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MawTriple {
    pub a: Letter,
    pub node: u32,
    pub b: Letter,
}

impl SuffixTree {
    /// Materialize the word of a triple in time proportional to its length.
    pub fn expand(&self, m: &MawTriple) -> Word {
        let mut word = Word::with_capacity(self.string_depth(m.node) as usize + 2);
        word.push(m.a);
        word.extend(self.spell(m.node));
        word.push(m.b);
        word
    }
}

/// For each letter `a`, the suffix-tree leaves extendable by `a` on the
/// left, sorted by preorder.
pub struct LetterLists {
    lists: Vec<Vec<u32>>,
}

impl LetterLists {
    pub fn list(&self, a: Letter) -> &[u32] {
        &self.lists[a.0 as usize]
    }

    pub fn total_entries(&self) -> usize {
        self.lists.iter().map(Vec::len).sum()
    }
}

/// Walk the determinized tree once: each non-root node `v` with parent `p`
/// and parent label `a` contributes `leaf_for(p)` to `L(a)`. Scanning the
/// leaves in preorder keeps every list sorted without a separate sort.
pub fn build_letter_lists(det: &RootedTree, st: &SuffixTree) -> LetterLists {
    let sigma = det.alphabet().sigma() as usize;
    let mut lists = vec![Vec::new(); sigma];
    for &node in st.preorder_nodes() {
        let Some(v) = st.leaf_of(node) else { continue };
        for (letter, _) in det.children(v) {
            lists[letter.0 as usize].push(node);
        }
    }
    LetterLists { lists }
}

/// The compacted subtree of the suffix tree induced by a preorder-sorted
/// leaf list. Node 0 is always the suffix-tree root.
pub struct InducedSubtree {
    nodes: Vec<IndNode>,
}

struct IndNode {
    st: u32,
    children: Vec<u32>,
}

impl InducedSubtree {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the suffix-tree root is always present
    }

    pub fn st_node(&self, i: u32) -> u32 {
        self.nodes[i as usize].st
    }

    pub fn children(&self, i: u32) -> &[u32] {
        &self.nodes[i as usize].children
    }
}

/// Stack construction over a preorder-sorted leaf list, splitting the
/// rightmost path by string depth of consecutive LCAs.
pub fn build_induced(st: &SuffixTree, lca: &Lca, leaves: &[u32]) -> InducedSubtree {
    let mut nodes = Vec::with_capacity(2 * leaves.len() + 1);
    nodes.push(IndNode { st: st.root(), children: Vec::new() });
    let mut stack: Vec<u32> = Vec::with_capacity(leaves.len() + 1);
    stack.push(0);
    for &leaf in leaves {
        let top_st = nodes[*stack.last().unwrap() as usize].st;
        let l = lca.query(top_st, leaf);
        let sl = st.string_depth(l);
        while stack.len() >= 2
            && st.string_depth(nodes[stack[stack.len() - 2] as usize].st) >= sl
        {
            let child = stack.pop().unwrap();
            let parent = *stack.last().unwrap();
            nodes[parent as usize].children.push(child);
        }
        let top = *stack.last().unwrap();
        if st.string_depth(nodes[top as usize].st) > sl {
            let mid = nodes.len() as u32;
            nodes.push(IndNode { st: l, children: vec![top] });
            stack.pop();
            stack.push(mid);
        } else {
            debug_assert_eq!(nodes[top as usize].st, l);
        }
        let li = nodes.len() as u32;
        nodes.push(IndNode { st: leaf, children: Vec::new() });
        stack.push(li);
    }
    while stack.len() >= 2 {
        let child = stack.pop().unwrap();
        let parent = *stack.last().unwrap();
        nodes[parent as usize].children.push(child);
    }
    InducedSubtree { nodes }
}

/// Per-letter instrumentation counters.
#[derive(Clone, Copy, Debug, Default)]
pub struct LetterStats {
    pub leaves: u64,
    pub induced_nodes: u64,
    pub visited: u64,
    pub emitted: u64,
}

/// Emit every minimal absent word starting with `a`, in preorder of the
/// induced subtree with extension letters ascending at each node.
pub fn emit_for_letter(
    st: &SuffixTree,
    ind: &InducedSubtree,
    a: Letter,
    sink: &mut impl FnMut(MawTriple),
) -> u64 {
    emit_for_letter_counted(st, ind, a, sink).emitted
}

pub(crate) fn emit_for_letter_counted(
    st: &SuffixTree,
    ind: &InducedSubtree,
    a: Letter,
    sink: &mut impl FnMut(MawTriple),
) -> LetterStats {
    let sentinel = st.sigma();
    let mut stats = LetterStats { induced_nodes: ind.len() as u64, ..Default::default() };
    enum Item {
        Node(u32),
        // induced edge from an emitted node down to `child`: walk the
        // explicit ST nodes strictly between `from_st` and the child
        Edge { from_st: u32, child: u32 },
    }
    let mut work = vec![Item::Node(0)];
    let mut covered: Vec<(u32, u32)> = Vec::new();
    while let Some(item) = work.pop() {
        match item {
            Item::Node(i) => {
                stats.visited += 1;
                let u = ind.st_node(i);
                let ich = ind.children(i);
                covered.clear();
                let mut k = 0;
                for &(letter, z) in st.children(u) {
                    if k < ich.len() && st.in_subtree(z, ind.st_node(ich[k])) {
                        covered.push((z, ich[k]));
                        k += 1;
                    } else if letter != sentinel {
                        stats.emitted += 1;
                        sink(MawTriple { a, node: u, b: Letter(letter) });
                    }
                }
                debug_assert_eq!(k, ich.len(), "every induced child sits under one ST child");
                for &(z, ci) in covered.iter().rev() {
                    work.push(Item::Edge { from_st: z, child: ci });
                }
            }
            Item::Edge { from_st, child } => {
                let target = ind.st_node(child);
                let mut w = from_st;
                while w != target {
                    stats.visited += 1;
                    let mut next = u32::MAX;
                    for &(letter, y) in st.children(w) {
                        if st.in_subtree(y, target) {
                            next = y;
                        } else if letter != sentinel {
                            stats.emitted += 1;
                            sink(MawTriple { a, node: w, b: Letter(letter) });
                        }
                    }
                    debug_assert_ne!(next, u32::MAX, "walk target must stay below");
                    w = next;
                }
                work.push(Item::Node(child));
            }
        }
    }
    stats
}

/// The built artifacts of the rooted enumeration pipeline. Construction
/// determinizes when needed; the finished value is immutable and all
/// emission entry points take `&self`.
pub struct RootedMaws {
    det: RootedTree,
    st: SuffixTree,
    lca: Lca,
    lists: LetterLists,
}

impl RootedMaws {
    pub fn build(t: &RootedTree) -> RootedMaws {
        let det = if t.is_deterministic() { t.clone() } else { determinize(t) };
        let aug = augment(&det).expect("determinized tree");
        let st = build_suffix_tree(aug);
        let lca = preprocess_lca(&st);
        let lists = build_letter_lists(&det, &st);
        RootedMaws { det, st, lca, lists }
    }

    pub fn suffix_tree(&self) -> &SuffixTree {
        &self.st
    }

    pub fn determinized(&self) -> &RootedTree {
        &self.det
    }

    pub fn letter_lists(&self) -> &LetterLists {
        &self.lists
    }

    /// Stream every minimal absent word exactly once. Letters ascend;
    /// within a letter the induced subtree is traversed in preorder.
    pub fn emit(&self, mut sink: impl FnMut(MawTriple)) -> u64 {
        self.emit_with_stats(&mut sink).iter().map(|s| s.emitted).sum()
    }

    pub fn emit_with_stats(&self, sink: &mut impl FnMut(MawTriple)) -> Vec<LetterStats> {
        let mut all = Vec::new();
        for a in self.det.alphabet().letters() {
            let leaves = self.lists.list(a);
            if leaves.is_empty() {
                continue;
            }
            let ind = build_induced(&self.st, &self.lca, leaves);
            let mut stats = emit_for_letter_counted(&self.st, &ind, a, sink);
            stats.leaves = leaves.len() as u64;
            all.push(stats);
        }
        all
    }

    /// Per-letter emission on worker threads; results are flushed to the
    /// sink in the same deterministic order as [`emit`].
    pub fn emit_parallel(&self, mut sink: impl FnMut(MawTriple)) -> u64 {
        let letters: Vec<Letter> = self
            .det
            .alphabet()
            .letters()
            .filter(|&a| !self.lists.list(a).is_empty())
            .collect();
        let batches: Vec<Vec<MawTriple>> = letters
            .par_iter()
            .map(|&a| {
                let ind = build_induced(&self.st, &self.lca, self.lists.list(a));
                let mut out = Vec::new();
                emit_for_letter(&self.st, &ind, a, &mut |t| out.push(t));
                out
            })
            .collect();
        let mut total = 0;
        for batch in batches {
            total += batch.len() as u64;
            for t in batch {
                sink(t);
            }
        }
        total
    }

    pub fn count(&self) -> u64 {
        self.emit(|_| {})
    }

    /// Collect the expanded word set (small instances and tests).
    pub fn collect_words(&self) -> Vec<Word> {
        let mut out = Vec::new();
        self.emit(|t| out.push(self.st.expand(&t)));
        out
    }
}

/// Enumerate the minimal absent words of a rooted tree, streaming triples to
/// `sink`; returns the count.
pub fn maw_rooted(t: &RootedTree, sink: impl FnMut(MawTriple)) -> u64 {
    RootedMaws::build(t).emit(sink)
}
