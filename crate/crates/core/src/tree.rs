//! Rooted and unrooted edge-labeled trees.
//!
//! Nodes are dense integers `1..=n`; node 1 is the root of a rooted tree.
//! A rooted tree spells one word per node: the labels read from the node up
//! to the root (`spell_to_root`). All types are immutable once built.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use thiserror::Error;

use crate::alphabet::{Alphabet, Letter, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("node id {0} out of range 1..={1}")]
    BadNodeId(u32, u32),
    #[error("node {0} has {1} parent edges, expected exactly one")]
    BadParentCount(u32, u32),
    #[error("edge label {0} outside alphabet 0..{1}")]
    LabelOutOfRange(u32, u32),
    #[error("expected {expected} edges, found {found}")]
    BadEdgeCount { expected: u32, found: u32 },
    #[error("parent references contain a cycle through node {0}")]
    Cycle(u32),
    #[error("tree is not connected (node {0} unreachable)")]
    Disconnected(u32),
    #[error("duplicate edge between {0} and {1}")]
    DuplicateEdge(u32, u32),
    #[error("self-loop at node {0}")]
    SelfLoop(u32),
    #[error("tree is not deterministic")]
    NotDeterministic,
}

/// Compressed child lists: per node a slice of `(letter, child)` pairs.
#[derive(Clone, Debug)]
struct Csr {
    offsets: Vec<u32>,
    entries: Vec<(u32, u32)>,
}

impl Csr {
    fn slice(&self, v: u32) -> &[(u32, u32)] {
        let lo = self.offsets[v as usize] as usize;
        let hi = self.offsets[v as usize + 1] as usize;
        &self.entries[lo..hi]
    }
}

fn build_csr(n: u32, items: impl Iterator<Item = (u32, (u32, u32))> + Clone) -> Csr {
    let mut offsets = vec![0u32; n as usize + 2];
    for (v, _) in items.clone() {
        offsets[v as usize + 1] += 1;
    }
    for i in 1..offsets.len() {
        offsets[i] += offsets[i - 1];
    }
    let mut entries = vec![(0u32, 0u32); offsets[n as usize + 1] as usize];
    let mut cursor = offsets.clone();
    for (v, e) in items {
        entries[cursor[v as usize] as usize] = e;
        cursor[v as usize] += 1;
    }
    Csr { offsets, entries }
}

/// A rooted tree with labeled edges. `parent[v]` and `parent_label[v]` give
/// the edge from `v` toward the root; slot 0 and the root's slot are unused.
#[derive(Clone, Debug)]
pub struct RootedTree {
    alphabet: Alphabet,
    parent: Vec<u32>,
    parent_label: Vec<u32>,
    depth: Vec<u32>,
    children: OnceLock<Csr>,
    deterministic: OnceLock<bool>,
}

impl RootedTree {
    /// Build and validate a tree from `(child, parent, label)` edges.
    pub fn new(
        n: u32,
        alphabet: Alphabet,
        edges: &[(u32, u32, Letter)],
    ) -> Result<RootedTree, TreeError> {
        if n == 0 {
            return Err(TreeError::BadNodeId(0, 0));
        }
        if edges.len() as u32 != n - 1 {
            return Err(TreeError::BadEdgeCount { expected: n - 1, found: edges.len() as u32 });
        }
        let mut parent = vec![0u32; n as usize + 1];
        let mut parent_label = vec![0u32; n as usize + 1];
        let mut seen = vec![0u32; n as usize + 1];
        for &(child, par, label) in edges {
            if child < 2 || child > n {
                return Err(TreeError::BadNodeId(child, n));
            }
            if par < 1 || par > n {
                return Err(TreeError::BadNodeId(par, n));
            }
            if !alphabet.contains(label) {
                return Err(TreeError::LabelOutOfRange(label.0, alphabet.sigma()));
            }
            seen[child as usize] += 1;
            parent[child as usize] = par;
            parent_label[child as usize] = label.0;
        }
        for v in 2..=n {
            if seen[v as usize] != 1 {
                return Err(TreeError::BadParentCount(v, seen[v as usize]));
            }
        }
        // Resolve depths; a walk that revisits an in-progress node is a cycle.
        const UNKNOWN: u32 = u32::MAX;
        const IN_PROGRESS: u32 = u32::MAX - 1;
        let mut depth = vec![UNKNOWN; n as usize + 1];
        depth[1] = 0;
        let mut stack = Vec::new();
        for v in 2..=n {
            if depth[v as usize] != UNKNOWN {
                continue;
            }
            let mut u = v;
            while depth[u as usize] == UNKNOWN {
                depth[u as usize] = IN_PROGRESS;
                stack.push(u);
                u = parent[u as usize];
                if depth[u as usize] == IN_PROGRESS {
                    return Err(TreeError::Cycle(u));
                }
            }
            // the stack unwinds from the node nearest the resolved ancestor
            let mut d = depth[u as usize];
            while let Some(w) = stack.pop() {
                d += 1;
                depth[w as usize] = d;
            }
        }
        Ok(RootedTree {
            alphabet,
            parent,
            parent_label,
            depth,
            children: OnceLock::new(),
            deterministic: OnceLock::new(),
        })
    }

    /// Trusted constructor from parent arrays where `parent[v] < v` holds for
    /// every non-root node (construction orders like BFS guarantee this).
    pub(crate) fn from_parents(
        alphabet: Alphabet,
        parent: Vec<u32>,
        parent_label: Vec<u32>,
    ) -> RootedTree {
        debug_assert_eq!(parent.len(), parent_label.len());
        let n = parent.len() - 1;
        let mut depth = vec![0u32; n + 1];
        for v in 2..=n {
            debug_assert!((parent[v] as usize) < v && parent[v] >= 1);
            debug_assert!(alphabet.contains(Letter(parent_label[v])));
            depth[v] = depth[parent[v] as usize] + 1;
        }
        RootedTree {
            alphabet,
            parent,
            parent_label,
            depth,
            children: OnceLock::new(),
            deterministic: OnceLock::new(),
        }
    }

    pub fn n(&self) -> u32 {
        (self.parent.len() - 1) as u32
    }

    pub fn root(&self) -> u32 {
        1
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn parent(&self, v: u32) -> Option<u32> {
        if v == 1 {
            None
        } else {
            Some(self.parent[v as usize])
        }
    }

    pub fn parent_label(&self, v: u32) -> Option<Letter> {
        if v == 1 {
            None
        } else {
            Some(Letter(self.parent_label[v as usize]))
        }
    }

    pub fn depth(&self, v: u32) -> u32 {
        self.depth[v as usize]
    }

    pub(crate) fn parents_raw(&self) -> (&[u32], &[u32], &[u32]) {
        (&self.parent, &self.parent_label, &self.depth)
    }

    /// Children of `v` as `(letter, child)` pairs, sorted by letter.
    pub fn children(&self, v: u32) -> impl Iterator<Item = (Letter, u32)> + '_ {
        self.children_csr()
            .slice(v)
            .iter()
            .map(|&(l, c)| (Letter(l), c))
    }

    fn children_csr(&self) -> &Csr {
        self.children.get_or_init(|| {
            let n = self.n();
            let items = (2..=n).map(|v| {
                (
                    self.parent[v as usize],
                    (self.parent_label[v as usize], v),
                )
            });
            let mut csr = build_csr(n, items);
            for v in 1..=n as usize {
                let lo = csr.offsets[v] as usize;
                let hi = csr.offsets[v + 1] as usize;
                csr.entries[lo..hi].sort_unstable();
            }
            csr
        })
    }

    /// True when no node has two child edges with the same letter.
    pub fn is_deterministic(&self) -> bool {
        *self.deterministic.get_or_init(|| {
            let mut pairs: Vec<(u32, u32)> = (2..=self.n())
                .map(|v| (self.parent[v as usize], self.parent_label[v as usize]))
                .collect();
            pairs.sort_unstable();
            pairs.windows(2).all(|w| w[0] != w[1])
        })
    }

    /// The word read from `v` up to the root.
    pub fn spell_to_root(&self, v: u32) -> Result<Word, TreeError> {
        if v < 1 || v > self.n() {
            return Err(TreeError::BadNodeId(v, self.n()));
        }
        let mut word = Word::with_capacity(self.depth(v) as usize);
        let mut u = v;
        while u != 1 {
            word.push(Letter(self.parent_label[u as usize]));
            u = self.parent[u as usize];
        }
        Ok(word)
    }

    /// The set of all node words; the language the tree denotes.
    pub fn node_words(&self) -> BTreeSet<Word> {
        (1..=self.n())
            .map(|v| self.spell_to_root(v).unwrap())
            .collect()
    }
}

/// Transform a word into the unary rooted tree spelling exactly its suffixes.
pub fn word_to_rooted(alphabet: Alphabet, w: &[Letter]) -> RootedTree {
    for &l in w {
        assert!(alphabet.contains(l), "word letter outside alphabet");
    }
    let n = w.len() + 1;
    let mut parent = vec![0u32; n + 1];
    let mut parent_label = vec![0u32; n + 1];
    for i in 2..=n {
        parent[i] = (i - 1) as u32;
        // descending from the root the labels read reverse(w), so the deepest
        // node spells w upward
        parent_label[i] = w[n - i].0;
    }
    RootedTree::from_parents(alphabet, parent, parent_label)
}

/// A connected, undirected, edge-labeled tree.
#[derive(Clone, Debug)]
pub struct UnrootedTree {
    alphabet: Alphabet,
    n: u32,
    edges: Vec<(u32, u32, Letter)>,
    adjacency: OnceLock<Csr>,
}

impl UnrootedTree {
    pub fn new(
        n: u32,
        alphabet: Alphabet,
        edges: &[(u32, u32, Letter)],
    ) -> Result<UnrootedTree, TreeError> {
        if n == 0 {
            return Err(TreeError::BadNodeId(0, 0));
        }
        if edges.len() as u32 != n - 1 {
            return Err(TreeError::BadEdgeCount { expected: n - 1, found: edges.len() as u32 });
        }
        let mut seen = BTreeSet::new();
        for &(u, v, label) in edges {
            if u < 1 || u > n {
                return Err(TreeError::BadNodeId(u, n));
            }
            if v < 1 || v > n {
                return Err(TreeError::BadNodeId(v, n));
            }
            if u == v {
                return Err(TreeError::SelfLoop(u));
            }
            if !alphabet.contains(label) {
                return Err(TreeError::LabelOutOfRange(label.0, alphabet.sigma()));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(TreeError::DuplicateEdge(u, v));
            }
        }
        let t = UnrootedTree {
            alphabet,
            n,
            edges: edges.to_vec(),
            adjacency: OnceLock::new(),
        };
        // n-1 distinct edges: connectivity suffices for treeness
        let mut visited = vec![false; n as usize + 1];
        let mut queue = vec![1u32];
        visited[1] = true;
        while let Some(u) = queue.pop() {
            for (_, v) in t.neighbors(u) {
                if !visited[v as usize] {
                    visited[v as usize] = true;
                    queue.push(v);
                }
            }
        }
        if let Some(v) = (1..=n).find(|&v| !visited[v as usize]) {
            return Err(TreeError::Disconnected(v));
        }
        Ok(t)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn edges(&self) -> &[(u32, u32, Letter)] {
        &self.edges
    }

    pub fn neighbors(&self, v: u32) -> impl Iterator<Item = (Letter, u32)> + '_ {
        self.adjacency_csr()
            .slice(v)
            .iter()
            .map(|&(l, u)| (Letter(l), u))
    }

    fn adjacency_csr(&self) -> &Csr {
        self.adjacency.get_or_init(|| {
            let items = self
                .edges
                .iter()
                .flat_map(|&(u, v, l)| [(u, (l.0, v)), (v, (l.0, u))]);
            build_csr(self.n, items)
        })
    }
}
