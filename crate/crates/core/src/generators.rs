//! Instance generators: extremal families and seeded random trees.

use rand::RngExt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::alphabet::{Alphabet, Letter, Word};
use crate::tree::{RootedTree, UnrootedTree};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("sigma must be at least 2, got {0}")]
    SigmaTooSmall(u32),
    #[error("no block exponent k > 1 fits: need sigma^k < n with k > 1 (sigma={sigma}, n={n})")]
    NoExponent { sigma: u32, n: u64 },
    #[error(
        "block length 2*sigma*(k+2)+1 = {block} exceeds n = {n} (sigma={sigma}, k={k}); \
         pick n large enough that one block fits"
    )]
    BlockTooLong { sigma: u32, n: u64, k: u32, block: u64 },
}

/// A word of length > n/2 over `sigma`+1 letters (the separator is encoded
/// as the extra letter id `sigma`) packing Θ(σ²·n/block) minimal absent
/// words that all share the length k+2.
///
/// Blocks follow the pattern `$1s$s1$2s$s2$…$σs$sσ$` for k-letter seeds `s`
/// taken in lexicographic order; every `a·s·b` over the base letters is then
/// a minimal absent word.
pub fn gen_fixed_length_word(sigma: u32, n: u64) -> Result<(Word, Alphabet, u32), GenError> {
    if sigma < 2 {
        return Err(GenError::SigmaTooSmall(sigma));
    }
    // largest k with sigma^k < n
    let mut k = 0u32;
    let mut power = 1u64;
    while power.saturating_mul(sigma as u64) < n {
        power *= sigma as u64;
        k += 1;
    }
    if k <= 1 {
        return Err(GenError::NoExponent { sigma, n });
    }
    let block = 2 * sigma as u64 * (k as u64 + 2) + 1;
    if block > n {
        return Err(GenError::BlockTooLong { sigma, n, k, block });
    }
    let count = n / block;
    let separator = Letter(sigma);
    let mut seed = vec![0u32; k as usize]; // current element of Σ^k, ids 0-based
    let mut word = Word::with_capacity((count * block) as usize);
    for i in 0..count {
        if i > 0 {
            // next seed in lexicographic order
            for d in (0..seed.len()).rev() {
                if seed[d] + 1 < sigma {
                    seed[d] += 1;
                    break;
                }
                seed[d] = 0;
            }
        }
        word.push(separator);
        for a in 0..sigma {
            word.push(Letter(a));
            word.extend(seed.iter().map(|&x| Letter(x)));
            word.push(separator);
            word.extend(seed.iter().map(|&x| Letter(x)));
            word.push(Letter(a));
            word.push(separator);
        }
    }
    debug_assert_eq!(word.len() as u64, count * block);
    debug_assert!(word.len() as u64 > n / 2);
    Ok((word, Alphabet::new(sigma + 1), k))
}

/// The seeds `s_i` used by [`gen_fixed_length_word`], for membership tests.
pub fn fixed_length_seeds(sigma: u32, k: u32, count: u64) -> Vec<Word> {
    let mut seed = vec![0u32; k as usize];
    let mut out = Vec::with_capacity(count as usize);
    for i in 0..count {
        if i > 0 {
            for d in (0..seed.len()).rev() {
                if seed[d] + 1 < sigma {
                    seed[d] += 1;
                    break;
                }
                seed[d] = 0;
            }
        }
        out.push(seed.iter().map(|&x| Letter(x)).collect());
    }
    out
}

/// An unrooted tree over the alphabet {0, 1, …, s} realizing Ω(s³N²)
/// minimal absent words: a backbone of N+1 nodes joined by 0-edges, s
/// pendant leaves labeled 1..s on every backbone node, and s chains of N+1
/// nodes (N internal 0-edges each) hanging off the last backbone node, chain
/// i attached by an edge labeled i.
pub fn gen_unrooted_extremal(s: u32, big_n: u32) -> UnrootedTree {
    assert!(s >= 1 && big_n >= 1);
    let n_nodes = (big_n + 1) * (2 * s + 1);
    let alphabet = Alphabet::new(s + 1);
    let mut edges = Vec::with_capacity(n_nodes as usize - 1);
    let mut next = 0u32;
    let mut fresh = || {
        next += 1;
        next
    };
    let mut backbone = Vec::with_capacity(big_n as usize + 1);
    for i in 0..=big_n {
        let b = fresh();
        if i > 0 {
            edges.push((backbone[i as usize - 1], b, Letter(0)));
        }
        backbone.push(b);
    }
    for &b in &backbone {
        for letter in 1..=s {
            let leaf = fresh();
            edges.push((b, leaf, Letter(letter)));
        }
    }
    let last = *backbone.last().unwrap();
    for letter in 1..=s {
        let mut prev = fresh();
        edges.push((last, prev, Letter(letter)));
        for _ in 0..big_n {
            let nx = fresh();
            edges.push((prev, nx, Letter(0)));
            prev = nx;
        }
    }
    debug_assert_eq!(next, n_nodes);
    UnrootedTree::new(n_nodes, alphabet, &edges).expect("generator output is a valid tree")
}

/// Seeded random rooted tree: node i attaches below a uniform earlier node
/// with a uniform label.
pub fn gen_random_rooted(n: u32, sigma: u32, seed: u64) -> RootedTree {
    assert!(n >= 1 && sigma >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut parent = vec![0u32; n as usize + 1];
    let mut label = vec![0u32; n as usize + 1];
    for v in 2..=n {
        parent[v as usize] = rng.random_range(1..v);
        label[v as usize] = rng.random_range(0..sigma);
    }
    RootedTree::from_parents(Alphabet::new(sigma), parent, label)
}

/// Seeded random unrooted tree, same attachment scheme.
pub fn gen_random_unrooted(n: u32, sigma: u32, seed: u64) -> UnrootedTree {
    assert!(n >= 1 && sigma >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(n as usize - 1);
    for v in 2..=n {
        let u = rng.random_range(1..v);
        let l = rng.random_range(0..sigma);
        edges.push((u, v, Letter(l)));
    }
    UnrootedTree::new(n, Alphabet::new(sigma), &edges).expect("generator output is valid")
}
