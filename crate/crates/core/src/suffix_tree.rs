//! Suffix tree of a deterministic rooted tree.
//!
//! The tree is first augmented with a new root attached above the old one by
//! a sentinel edge, which appends the sentinel to every node word. The suffix
//! tree is the compacted trie of those words; its leaves correspond
//! one-to-one to the nodes of the original tree.
//!
//! Construction processes nodes in order of increasing depth. Every new word
//! extends an already-inserted word (its parent's) by one letter on the left,
//! so the insertion point is located by climbing from the parent's leaf to
//! the nearest ancestor carrying a reverse-extension link for that letter,
//! jumping through the link, and re-matching the few remaining letters by
//! direct comparison. Links are added (and repaired) as insertions discover
//! them. Edge labels are `(node, length)` references into the augmented
//! tree; a binary-lifting ancestor table supplies the reference start for
//! each new leaf in O(log n). The finished tree is flattened into plain
//! arrays with children in one contiguous block.

use crate::alphabet::{Letter, Word};
use crate::tree::{RootedTree, TreeError};

/// The input tree plus a new root attached above the old root by a
/// sentinel-labeled edge. Original node ids are preserved; the new root is
/// node `n+1`. Parent and label are stored as one pair per node since every
/// traversal reads them together.
#[derive(Clone, Debug)]
pub struct AugmentedTree {
    up: Vec<(u32, u32)>, // (parent, label of edge to parent)
    depth: Vec<u32>,
    sigma: u32,
    n_orig: u32,
}

/// Attach the sentinel root. Fails on nondeterministic input.
pub fn augment(t: &RootedTree) -> Result<AugmentedTree, TreeError> {
    if !t.is_deterministic() {
        return Err(TreeError::NotDeterministic);
    }
    let n = t.n() as usize;
    let sigma = t.alphabet().sigma();
    let (old_parent, old_label, old_depth) = t.parents_raw();
    let new_root = (n + 1) as u32;
    let mut up = vec![(0u32, 0u32); n + 2];
    let mut depth = vec![0u32; n + 2];
    up[1] = (new_root, sigma); // sentinel edge
    depth[1] = 1;
    for v in 2..=n {
        up[v] = (old_parent[v], old_label[v]);
        depth[v] = old_depth[v] + 1;
    }
    Ok(AugmentedTree { up, depth, sigma, n_orig: t.n() })
}

impl AugmentedTree {
    pub fn node_count(&self) -> u32 {
        self.n_orig + 1
    }

    pub fn original_count(&self) -> u32 {
        self.n_orig
    }

    pub fn root(&self) -> u32 {
        self.n_orig + 1
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn sentinel(&self) -> Letter {
        Letter(self.sigma)
    }

    pub fn parent(&self, v: u32) -> u32 {
        self.up[v as usize].0
    }

    /// Label of the edge from `v` to its parent (sentinel for the old root).
    pub fn label(&self, v: u32) -> Letter {
        Letter(self.up[v as usize].1)
    }

    /// Distance from `v` to the augmented root; also `|spell_to_root(v)|`.
    pub fn depth(&self, v: u32) -> u32 {
        self.depth[v as usize]
    }

    /// The word `spell_to_root(v) + sentinel` an original node contributes.
    pub fn word_of(&self, v: u32) -> Word {
        let mut out = Word::with_capacity(self.depth[v as usize] as usize);
        let mut cur = v;
        while cur != self.root() {
            let (p, l) = self.up[cur as usize];
            out.push(Letter(l));
            cur = p;
        }
        out
    }

    /// Original nodes sorted by depth: every node after its parent.
    fn level_order(&self) -> Vec<u32> {
        let n = self.n_orig as usize;
        let max_d = (1..=n).map(|v| self.depth[v] as usize).max().unwrap_or(0);
        let mut count = vec![0u32; max_d + 2];
        for v in 1..=n {
            count[self.depth[v] as usize + 1] += 1;
        }
        for i in 1..count.len() {
            count[i] += count[i - 1];
        }
        let mut order = vec![0u32; n];
        for v in 1..=n as u32 {
            let d = self.depth[v as usize] as usize;
            order[count[d] as usize] = v;
            count[d] += 1;
        }
        order
    }
}

/// Binary-lifting ancestor table over the augmented tree.
struct Lifting {
    up: Vec<Vec<u32>>,
}

impl Lifting {
    fn new(aug: &AugmentedTree) -> Lifting {
        let n = aug.node_count() as usize + 1;
        let max_depth = (1..n).map(|v| aug.depth[v]).max().unwrap_or(0);
        let levels = (32 - max_depth.leading_zeros()).max(1) as usize;
        let mut up = Vec::with_capacity(levels);
        up.push(aug.up.iter().map(|&(p, _)| p).collect::<Vec<u32>>());
        for k in 1..levels {
            let prev = &up[k - 1];
            let mut next = vec![0u32; n];
            for v in 1..n {
                next[v] = prev[prev[v] as usize];
            }
            up.push(next);
        }
        Lifting { up }
    }

    fn ancestor(&self, mut v: u32, mut steps: u32) -> u32 {
        let mut k = 0;
        while steps != 0 {
            if steps & 1 != 0 {
                v = self.up[k][v as usize];
            }
            steps >>= 1;
            k += 1;
        }
        v
    }
}

// Construction-time layout: node fields split into small parallel arrays so
// the hot paths touch as few cache lines as possible on an 8 MB L3 budget.
// Children are singly-linked sorted lists through one shared pool, so child
// insertion never allocates.

/// Fields the climb reads: parent, string depth and the most recently set
/// reverse-extension link. A second link letter for the same source lands
/// in the overflow map.
#[derive(Clone, Copy)]
struct Hot {
    parent: u32,
    sdepth: u32,
    link_letter: u32,
    link_target: u32,
}

const NO_LINK: u32 = u32::MAX;
const NONE: u32 = u32::MAX;

/// (first letter, child node, next entry) of one child-list cell.
type PoolEnt = (u32, u32, u32);

#[inline]
fn child_lookup(kid_head: &[u32], pool: &[PoolEnt], v: u32, letter: u32) -> Option<u32> {
    let mut e = kid_head[v as usize];
    while e != NONE {
        let (l, node, next) = pool[e as usize];
        if l == letter {
            return Some(node);
        }
        if l > letter {
            return None;
        }
        e = next;
    }
    None
}

#[inline]
fn child_insert(kid_head: &mut [u32], pool: &mut Vec<PoolEnt>, v: u32, letter: u32, node: u32) {
    let ent = pool.len() as u32;
    let mut prev = NONE;
    let mut e = kid_head[v as usize];
    while e != NONE && pool[e as usize].0 < letter {
        prev = e;
        e = pool[e as usize].2;
    }
    debug_assert!(e == NONE || pool[e as usize].0 != letter, "duplicate first letter");
    pool.push((letter, node, e));
    if prev == NONE {
        kid_head[v as usize] = ent;
    } else {
        pool[prev as usize].2 = ent;
    }
}

#[inline]
fn child_replace(kid_head: &[u32], pool: &mut [PoolEnt], v: u32, letter: u32, node: u32) {
    let mut e = kid_head[v as usize];
    while e != NONE {
        if pool[e as usize].0 == letter {
            pool[e as usize].1 = node;
            return;
        }
        e = pool[e as usize].2;
    }
    unreachable!("replaced child must exist");
}

/// Multiply-xor hasher for the construction's (node, letter) link keys;
/// the default hasher dominates the build profile on million-node inputs.
#[derive(Default)]
struct LinkHasher(u64);

impl std::hash::Hasher for LinkHasher {
    fn write(&mut self, _bytes: &[u8]) {
        unreachable!("link keys hash as u64");
    }

    fn write_u64(&mut self, x: u64) {
        let mut h = x.wrapping_mul(0x9e37_79b9_7f4a_7c15);
        h ^= h >> 32;
        self.0 = h;
    }

    fn finish(&self) -> u64 {
        self.0
    }
}

#[derive(Clone, Default)]
struct LinkHash;

impl std::hash::BuildHasher for LinkHash {
    type Hasher = LinkHasher;

    fn build_hasher(&self) -> LinkHasher {
        LinkHasher::default()
    }
}

type LinkMap = std::collections::HashMap<u64, u32, LinkHash>;

#[inline]
fn link_key(node: u32, letter: u32) -> u64 {
    ((node as u64) << 32) | letter as u64
}

/// Compacted trie of the augmented tree's node words, with preorder
/// numbering, subtree intervals and the leaf bijection. Flat arrays, one
/// contiguous child table; immutable and safe to query from many threads.
pub struct SuffixTree {
    aug: AugmentedTree,
    parent: Vec<u32>,
    refs: Vec<(u32, u32)>,      // incoming edge label: (aug start node, length)
    sdepth: Vec<u32>,
    child_span: Vec<(u32, u32)>, // (offset into child_ent, count)
    child_ent: Vec<(u32, u32)>,  // (first letter, child), grouped per node
    leaf_of: Vec<u32>,           // per ST node: original node id, 0 for internals
    leaf_for: Vec<u32>,          // per original node: its ST leaf
    interval: Vec<(u32, u32)>,   // per node: (preorder, subtree size)
    order: Vec<u32>,             // preorder rank -> node
}

const ST_ROOT: u32 = 0;

/// Construction counters (profiling aid).
#[derive(Default, Debug)]
pub struct BuildStats {
    pub climb_steps: u64,
    pub rematched: u64,
    pub inline_hits: u64,
    pub overflow_hits: u64,
    pub no_link: u64,
}

/// Build plus counters; see [`build_suffix_tree`].
pub fn build_suffix_tree_stats(aug: AugmentedTree) -> (SuffixTree, BuildStats) {
    let mut stats = BuildStats::default();
    let st = build_suffix_tree_inner(aug, &mut stats);
    (st, stats)
}

/// Build the suffix tree of an augmented deterministic tree.
pub fn build_suffix_tree(aug: AugmentedTree) -> SuffixTree {
    let mut stats = BuildStats::default();
    build_suffix_tree_inner(aug, &mut stats)
}

fn build_suffix_tree_inner(aug: AugmentedTree, stats: &mut BuildStats) -> SuffixTree {
    let lift = Lifting::new(&aug);
    let n = aug.original_count() as usize;
    let cap = 2 * n + 1;
    let mut hot: Vec<Hot> = Vec::with_capacity(cap);
    hot.push(Hot { parent: 0, sdepth: 0, link_letter: NO_LINK, link_target: 0 });
    let mut refs: Vec<(u32, u32)> = Vec::with_capacity(cap);
    refs.push((0, 0));
    let mut kid_head: Vec<u32> = Vec::with_capacity(cap);
    kid_head.push(NONE);
    let mut pool: Vec<PoolEnt> = Vec::with_capacity(cap);
    let mut leaf_of: Vec<u32> = Vec::with_capacity(cap);
    leaf_of.push(0);
    let mut leaf_for: Vec<u32> = vec![0; n + 1];
    let mut wlink: LinkMap = LinkMap::with_capacity_and_hasher(n / 4 + 16, LinkHash);
    let mut climb: Vec<(u32, u32)> = Vec::new(); // (node, sdepth), deepest first

    // Within a level, inserting in order of the parent leaf's arena position
    // turns the climb starts into a near-sequential sweep of the arena.
    let mut order = aug.level_order();
    let mut lo = 0;
    while lo < order.len() {
        let d = aug.depth[order[lo] as usize];
        let mut hi = lo + 1;
        while hi < order.len() && aug.depth[order[hi] as usize] == d {
            hi += 1;
        }
        let level = &mut order[lo..hi];
        level.sort_unstable_by_key(|&c| leaf_for[aug.up[c as usize].0 as usize]);
        lo = hi;

        for &c in level.iter() {
            insert_word(
                c,
                &aug,
                &lift,
                &mut hot,
                &mut refs,
                &mut kid_head,
                &mut pool,
                &mut leaf_of,
                &mut leaf_for,
                &mut wlink,
                &mut climb,
                stats,
            );
        }
    }
    drop(wlink); // construction aid only

    finalize(aug, hot, refs, kid_head, pool, leaf_of, leaf_for)
}

/// One left-extension insertion: the word of node `c` is its parent label
/// prepended to its parent's word, which is already in the trie.
#[allow(clippy::too_many_arguments)]
fn insert_word(
    c: u32,
    aug: &AugmentedTree,
    lift: &Lifting,
    hot: &mut Vec<Hot>,
    refs: &mut Vec<(u32, u32)>,
    kid_head: &mut Vec<u32>,
    pool: &mut Vec<PoolEnt>,
    leaf_of: &mut Vec<u32>,
    leaf_for: &mut [u32],
    wlink: &mut LinkMap,
    climb: &mut Vec<(u32, u32)>,
    stats: &mut BuildStats,
) {
    let (p, a) = aug.up[c as usize];
    let nw_len = aug.depth[c as usize];

    // Locate the deepest known-present prefix of the new word: climb
    // from the parent's leaf to the first ancestor with a left-extension
    // link for `a`.
    climb.clear();
    let (mut cur, mut matched) = if p == aug.root() {
            (ST_ROOT, 0u32)
        } else {
            let mut v = hot[leaf_for[p as usize] as usize].parent;
            loop {
                let node = hot[v as usize];
                climb.push((v, node.sdepth));
                stats.climb_steps += 1;
                if node.link_letter == a {
                    stats.inline_hits += 1;
                    break (node.link_target, node.sdepth + 1);
                }
                if node.link_letter != NO_LINK {
                    if let Some(&u) = wlink.get(&link_key(v, a)) {
                        stats.overflow_hits += 1;
                        break (u, node.sdepth + 1);
                    }
                }
                if v == ST_ROOT {
                    stats.no_link += 1;
                    break (ST_ROOT, 0);
                }
                v = node.parent;
            }
        };

        // Re-match the remaining letters of the new word downward from the
        // anchor. `cursor` tracks the augmented-tree node whose parent edge
        // carries the next letter to match.
        let m_start = matched;
        let mut cursor = if matched == 0 { c } else { lift.ancestor(c, matched) };
        let attach = loop {
            debug_assert!(matched < nw_len);
            let letter = aug.up[cursor as usize].1;
            let Some(child) = child_lookup(kid_head, pool, cur, letter) else {
                break cur; // no edge starts with this letter
            };
            let (s, len) = refs[child as usize];
            matched += 1;
            cursor = aug.up[cursor as usize].0;
            let mut off = 1u32;
            let mut ecur = aug.up[s as usize].0;
            let mut split = None;
            while off < len {
                debug_assert!(matched < nw_len);
                if aug.up[ecur as usize].1 != aug.up[cursor as usize].1 {
                    split = Some(off);
                    break;
                }
                off += 1;
                matched += 1;
                cursor = aug.up[cursor as usize].0;
                ecur = aug.up[ecur as usize].0;
            }
            match split {
                None => cur = child,
                Some(off) => {
                    // split the edge at `off` matched letters
                    let mid = hot.len() as u32;
                    hot.push(Hot {
                        parent: cur,
                        sdepth: hot[cur as usize].sdepth + off,
                        link_letter: NO_LINK,
                        link_target: 0,
                    });
                    refs.push((s, off));
                    kid_head.push(NONE);
                    leaf_of.push(0);
                    child_insert(kid_head, pool, mid, aug.up[ecur as usize].1, child);
                    child_replace(kid_head, pool, cur, letter, mid);
                    hot[child as usize].parent = mid;
                    refs[child as usize] = (ecur, len - off);
                    break mid;
                }
            }
        };

        // attach the new leaf
        let head = matched;
        stats.rematched += (head - m_start) as u64;
        let leaf = hot.len() as u32;
        hot.push(Hot { parent: attach, sdepth: nw_len, link_letter: NO_LINK, link_target: 0 });
        refs.push((cursor, nw_len - head));
        kid_head.push(NONE);
        leaf_of.push(c);
        leaf_for[c as usize] = leaf;
        child_insert(kid_head, pool, attach, aug.up[cursor as usize].1, leaf);

        // The node one letter above the attach point ("head minus the first
        // letter") is always an existing explicit ancestor on the climbed
        // path; record the link so later insertions jump straight here. The
        // inline slot keeps the most recent letter (sibling bursts reuse it)
        // and demotes the previous one to the overflow map.
        if head >= 1 {
            let want = head - 1;
            if let Ok(i) = climb.binary_search_by(|&(_, sd)| want.cmp(&sd)) {
                let src = climb[i].0 as usize;
                let old = hot[src];
                if old.link_letter != a {
                    if old.link_letter != NO_LINK {
                        wlink.insert(link_key(src as u32, old.link_letter), old.link_target);
                    }
                    // the locus of a + word(src) never changes once explicit,
                    // so any stale overflow entry for `a` already agrees
                    debug_assert!(wlink
                        .get(&link_key(src as u32, a))
                        .is_none_or(|&x| x == attach));
                    hot[src].link_letter = a;
                    hot[src].link_target = attach;
                }
            } else {
                debug_assert!(climb.is_empty(), "link source must lie on the climbed path");
            }
        }
}

/// Flatten: preorder numbering, subtree sizes, children in one block
/// ordered by the parent's preorder position.
fn finalize(
    aug: AugmentedTree,
    hot: Vec<Hot>,
    refs: Vec<(u32, u32)>,
    kid_head: Vec<u32>,
    pool: Vec<PoolEnt>,
    leaf_of: Vec<u32>,
    leaf_for: Vec<u32>,
) -> SuffixTree {
    let count = hot.len();
    let mut interval = vec![(0u32, 1u32); count];
    let mut order = vec![0u32; count];
    let mut child_span = vec![(0u32, 0u32); count];
    let mut child_ent: Vec<(u32, u32)> = Vec::with_capacity(count - 1);
    let mut stack = vec![ST_ROOT];
    let mut next = 0u32;
    while let Some(v) = stack.pop() {
        interval[v as usize].0 = next;
        order[next as usize] = v;
        next += 1;
        let start = child_ent.len();
        let mut e = kid_head[v as usize];
        while e != NONE {
            let (l, node, nx) = pool[e as usize];
            child_ent.push((l, node));
            e = nx;
        }
        child_span[v as usize] = (start as u32, (child_ent.len() - start) as u32);
        for i in (start..child_ent.len()).rev() {
            stack.push(child_ent[i].1);
        }
    }
    drop(pool);
    drop(kid_head);
    for i in (1..count).rev() {
        let v = order[i] as usize;
        let p = hot[v].parent as usize;
        interval[p].1 += interval[v].1;
    }
    let mut parent = Vec::with_capacity(count);
    let mut sdepth = Vec::with_capacity(count);
    for node in &hot {
        parent.push(node.parent);
        sdepth.push(node.sdepth);
    }
    drop(hot);

    SuffixTree {
        aug,
        parent,
        refs,
        sdepth,
        child_span,
        child_ent,
        leaf_of,
        leaf_for,
        interval,
        order,
    }
}

impl SuffixTree {
    pub fn root(&self) -> u32 {
        ST_ROOT
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    pub fn edge_count(&self) -> u64 {
        self.parent.len() as u64 - 1
    }

    pub fn aug(&self) -> &AugmentedTree {
        &self.aug
    }

    pub fn sigma(&self) -> u32 {
        self.aug.sigma()
    }

    pub fn parent(&self, v: u32) -> u32 {
        self.parent[v as usize]
    }

    pub fn string_depth(&self, v: u32) -> u32 {
        self.sdepth[v as usize]
    }

    /// Children as `(first letter, node)` pairs sorted by letter.
    pub fn children(&self, v: u32) -> &[(u32, u32)] {
        let (off, len) = self.child_span[v as usize];
        &self.child_ent[off as usize..off as usize + len as usize]
    }

    pub fn is_leaf(&self, v: u32) -> bool {
        self.leaf_of[v as usize] != 0
    }

    pub fn leaf_count(&self) -> u32 {
        self.leaf_of.iter().filter(|&&x| x != 0).count() as u32
    }

    /// The original tree node whose word this leaf spells.
    pub fn leaf_of(&self, leaf: u32) -> Option<u32> {
        match self.leaf_of[leaf as usize] {
            0 => None,
            v => Some(v),
        }
    }

    /// The ST leaf spelling the word of original node `v` plus sentinel.
    pub fn leaf_for(&self, v: u32) -> u32 {
        self.leaf_for[v as usize]
    }

    pub fn preorder(&self, v: u32) -> u32 {
        self.interval[v as usize].0
    }

    /// Nodes in preorder.
    pub fn preorder_nodes(&self) -> &[u32] {
        &self.order
    }

    pub fn subtree_size(&self, v: u32) -> u32 {
        self.interval[v as usize].1
    }

    /// True iff `y` lies in the subtree rooted at `x` (preorder interval).
    pub fn in_subtree(&self, x: u32, y: u32) -> bool {
        let (px, size) = self.interval[x as usize];
        let py = self.interval[y as usize].0;
        py >= px && py < px + size
    }

    /// Append the letters of the incoming edge label of `v`.
    fn read_edge(&self, v: u32, out: &mut Word) {
        let (mut cur, len) = self.refs[v as usize];
        for _ in 0..len {
            let (p, l) = self.aug.up[cur as usize];
            out.push(Letter(l));
            cur = p;
        }
    }

    /// The label of the incoming edge of `v` as a word.
    pub fn edge_label(&self, v: u32) -> Word {
        let mut out = Word::new();
        self.read_edge(v, &mut out);
        out
    }

    /// The word spelled from the ST root to `v` (sentinel included when the
    /// path reaches it).
    pub fn spell(&self, v: u32) -> Word {
        let mut edges = Vec::new();
        let mut u = v;
        while u != ST_ROOT {
            edges.push(u);
            u = self.parent[u as usize];
        }
        let mut word = Word::with_capacity(self.sdepth[v as usize] as usize);
        for &e in edges.iter().rev() {
            self.read_edge(e, &mut word);
        }
        word
    }
}

/// Constant-time lowest common ancestors over a suffix tree: Euler tour
/// plus a sparse table of range minima over fixed-size blocks (partial
/// blocks are scanned; they are short and sequential).
pub struct Lca {
    first: Vec<u32>,
    packed: Vec<u64>,     // per euler slot: hop depth << 32 | node
    table: Vec<Vec<u64>>, // sparse minima over per-block minima
}

const LCA_BLOCK: usize = 16;

/// Build the LCA structure for a suffix tree.
pub fn preprocess_lca(st: &SuffixTree) -> Lca {
    let count = st.node_count();
    let mut packed = Vec::with_capacity(2 * count);
    let mut first = vec![u32::MAX; count];
    // Euler tour without recursion: a node reappears after each child visit.
    let mut stack: Vec<(u32, u32, u32)> = vec![(ST_ROOT, 0, 0)]; // (node, depth, child idx)
    while let Some(&(v, d, idx)) = stack.last() {
        if idx == 0 {
            first[v as usize] = packed.len() as u32;
        }
        packed.push(((d as u64) << 32) | v as u64);
        let kids = st.children(v);
        if (idx as usize) < kids.len() {
            let child = kids[idx as usize].1;
            stack.last_mut().unwrap().2 += 1;
            stack.push((child, d + 1, 0));
        } else {
            stack.pop();
        }
    }
    let blocks = packed.len().div_ceil(LCA_BLOCK);
    let mut level0 = Vec::with_capacity(blocks);
    for b in 0..blocks {
        let lo = b * LCA_BLOCK;
        let hi = (lo + LCA_BLOCK).min(packed.len());
        level0.push(packed[lo..hi].iter().copied().min().unwrap());
    }
    let levels = if blocks <= 1 { 1 } else { (usize::BITS - (blocks - 1).leading_zeros()) as usize };
    let mut table = Vec::with_capacity(levels);
    table.push(level0);
    for k in 1..levels {
        let half = 1usize << (k - 1);
        let prev = &table[k - 1];
        let width = blocks - (1usize << k) + 1;
        let mut row = Vec::with_capacity(width);
        for i in 0..width {
            row.push(prev[i].min(prev[i + half]));
        }
        table.push(row);
    }
    Lca { first, packed, table }
}

impl Lca {
    /// Lowest common ancestor of two suffix-tree nodes.
    pub fn query(&self, x: u32, y: u32) -> u32 {
        let mut l = self.first[x as usize] as usize;
        let mut r = self.first[y as usize] as usize;
        if l > r {
            std::mem::swap(&mut l, &mut r);
        }
        let (bl, br) = (l / LCA_BLOCK, r / LCA_BLOCK);
        let mut best = u64::MAX;
        if bl == br {
            for &p in &self.packed[l..=r] {
                best = best.min(p);
            }
        } else {
            for &p in &self.packed[l..(bl + 1) * LCA_BLOCK] {
                best = best.min(p);
            }
            for &p in &self.packed[br * LCA_BLOCK..=r] {
                best = best.min(p);
            }
            if bl + 1 <= br - 1 {
                let span = br - 1 - bl;
                let k = (usize::BITS - 1 - span.leading_zeros()) as usize;
                best = best
                    .min(self.table[k][bl + 1])
                    .min(self.table[k][br - (1usize << k)]);
            }
        }
        best as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::tree::{word_to_rooted, RootedTree};

    fn letters(s: &str) -> Word {
        s.bytes()
            .map(|b| if b == b'$' { Letter(9) } else { Letter((b - b'a') as u32) })
            .collect()
    }

    fn spell_str(st: &SuffixTree, v: u32) -> String {
        st.spell(v)
            .iter()
            .map(|&Letter(l)| {
                if l == st.sigma() {
                    '$'
                } else {
                    (b'a' + l as u8) as char
                }
            })
            .collect()
    }

    fn leaf_words(st: &SuffixTree) -> Vec<String> {
        let mut out: Vec<String> = (0..st.node_count() as u32)
            .filter(|&v| st.is_leaf(v))
            .map(|v| spell_str(st, v))
            .collect();
        out.sort();
        out
    }

    fn example_a() -> RootedTree {
        RootedTree::new(
            4,
            Alphabet::new(2),
            &[(2, 1, Letter(0)), (3, 1, Letter(1)), (4, 2, Letter(1))],
        )
        .unwrap()
    }

    #[test]
    fn augment_counts() {
        let single = RootedTree::new(1, Alphabet::new(2), &[]).unwrap();
        let aug = augment(&single).unwrap();
        assert_eq!(aug.node_count(), 2);
        assert_eq!(aug.label(1), aug.sentinel());
        assert_eq!(augment(&example_a()).unwrap().node_count(), 5);
        let t = word_to_rooted(Alphabet::new(2), &letters("aab"));
        let aug = augment(&t).unwrap();
        assert_eq!(aug.node_count(), 5);
    }

    #[test]
    fn augment_rejects_nondeterministic() {
        let t = RootedTree::new(3, Alphabet::new(2), &[(2, 1, Letter(0)), (3, 1, Letter(0))])
            .unwrap();
        assert_eq!(augment(&t).unwrap_err(), TreeError::NotDeterministic);
    }

    #[test]
    fn single_node_tree() {
        let t = RootedTree::new(1, Alphabet::new(2), &[]).unwrap();
        let st = build_suffix_tree(augment(&t).unwrap());
        assert_eq!(st.node_count(), 2);
        assert_eq!(st.leaf_count(), 1);
        assert_eq!(leaf_words(&st), vec!["$"]);
    }

    #[test]
    fn example_a_shape() {
        let st = build_suffix_tree(augment(&example_a()).unwrap());
        assert_eq!(st.leaf_count(), 4);
        let root_letters: Vec<u32> = st.children(st.root()).iter().map(|&(l, _)| l).collect();
        assert_eq!(root_letters, vec![0, 1, 2]); // a, b, $
        // the b-child is branching with children {$, a$}
        let b_child = st.children(st.root())[1].1;
        assert!(!st.is_leaf(b_child));
        assert_eq!(spell_str(&st, b_child), "b");
        assert_eq!(st.children(b_child).len(), 2);
        assert_eq!(leaf_words(&st), vec!["$", "a$", "b$", "ba$"]);
    }

    #[test]
    fn aab_shape_and_subtrees() {
        let t = word_to_rooted(Alphabet::new(2), &letters("aab"));
        let st = build_suffix_tree(augment(&t).unwrap());
        assert_eq!(st.leaf_count(), 4);
        assert_eq!(leaf_words(&st), vec!["$", "aab$", "ab$", "b$"]);
        let a_node = st.children(st.root())[0].1;
        assert_eq!(spell_str(&st, a_node), "a");
        assert_eq!(st.children(a_node).len(), 2);
        // leaf bijection: the deepest original node spells aab$
        let leaf = st.leaf_for(4);
        assert_eq!(spell_str(&st, leaf), "aab$");
        assert_eq!(st.leaf_of(leaf), Some(4));
        // in_subtree examples
        let aab_leaf = st.leaf_for(4);
        assert!(st.in_subtree(st.root(), aab_leaf));
        assert!(st.in_subtree(a_node, aab_leaf));
        let b_leaf = st.leaf_for(2); // node 2 spells "b"
        assert!(!st.in_subtree(a_node, b_leaf));
        assert!(!st.in_subtree(b_leaf, aab_leaf));
    }

    #[test]
    fn lca_examples() {
        let t = word_to_rooted(Alphabet::new(2), &letters("aab"));
        let st = build_suffix_tree(augment(&t).unwrap());
        let lca = preprocess_lca(&st);
        let a_node = st.children(st.root())[0].1;
        let ab_leaf = st.leaf_for(3);
        let aab_leaf = st.leaf_for(4);
        assert_eq!(lca.query(ab_leaf, aab_leaf), a_node);
        assert_eq!(lca.query(ab_leaf, ab_leaf), ab_leaf);
        assert_eq!(lca.query(ab_leaf, st.root()), st.root());
    }

    #[test]
    fn spell_matches_leaf_words() {
        let st = build_suffix_tree(augment(&example_a()).unwrap());
        assert_eq!(st.spell(st.root()), Word::new());
        for v in 1..=4u32 {
            let leaf = st.leaf_for(v);
            let mut expect = example_a().spell_to_root(v).unwrap();
            expect.push(Letter(2));
            assert_eq!(st.spell(leaf), expect);
        }
    }

    #[test]
    fn lca_random_against_walk() {
        // blocked range-minimum structure against plain parent walks
        let t = crate::generators::gen_random_rooted(400, 3, 9);
        let maws = crate::maw_rooted::RootedMaws::build(&t);
        let st = maws.suffix_tree();
        let lca = preprocess_lca(st);
        let naive = |mut x: u32, mut y: u32| -> u32 {
            loop {
                if x == y {
                    return x;
                }
                if st.string_depth(x) >= st.string_depth(y) && x != ST_ROOT {
                    x = st.parent(x);
                } else {
                    y = st.parent(y);
                }
            }
        };
        let count = st.node_count() as u32;
        for i in 0..600u32 {
            let x = i.wrapping_mul(2654435761) % count;
            let y = i.wrapping_mul(40503).wrapping_add(7) % count;
            assert_eq!(lca.query(x, y), naive(x, y), "x={x} y={y}");
        }
    }
}
