//! proptest invariants with shrinking on small random instances.

use proptest::prelude::*;

use treemaw::alphabet::{Alphabet, Letter, Word};
use treemaw::determinize::determinize;
use treemaw::oracle::{oracle_maw_word, OracleLimits};
use treemaw::tree::{word_to_rooted, RootedTree};
use treemaw::RootedMaws;

/// Random rooted tree: each node attaches below an earlier one.
fn tree_strategy(max_n: usize, sigma: u32) -> impl Strategy<Value = RootedTree> {
    prop::collection::vec((any::<u32>(), 0..sigma), 0..max_n).prop_map(move |choices| {
        let n = choices.len() as u32 + 1;
        let edges: Vec<(u32, u32, Letter)> = choices
            .iter()
            .enumerate()
            .map(|(i, &(p, l))| {
                let child = i as u32 + 2;
                (child, 1 + p % (child - 1), Letter(l))
            })
            .collect();
        RootedTree::new(n, Alphabet::new(sigma), &edges).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn word_tree_spells_exactly_the_suffixes(w in prop::collection::vec(0..3u32, 0..16)) {
        let word: Word = w.iter().map(|&l| Letter(l)).collect();
        let t = word_to_rooted(Alphabet::new(3), &word);
        prop_assert_eq!(t.n() as usize, word.len() + 1);
        let words = t.node_words();
        let suffixes: std::collections::BTreeSet<Word> =
            (0..=word.len()).map(|i| word[i..].to_vec()).collect();
        prop_assert_eq!(words, suffixes);
    }

    #[test]
    fn determinize_language_preserving_and_idempotent(t in tree_strategy(12, 3)) {
        let d = determinize(&t);
        prop_assert!(d.is_deterministic());
        prop_assert_eq!(d.node_words(), t.node_words());
        prop_assert!(d.n() <= t.n());
        let dd = determinize(&d);
        prop_assert_eq!(dd.n(), d.n());
        prop_assert_eq!(dd.node_words(), d.node_words());
    }

    #[test]
    fn expand_is_injective_on_emitted_triples(t in tree_strategy(12, 4)) {
        let maws = RootedMaws::build(&t);
        let mut triples = Vec::new();
        maws.emit(|trip| triples.push(trip));
        let words: std::collections::BTreeSet<Word> =
            triples.iter().map(|trip| maws.suffix_tree().expand(trip)).collect();
        prop_assert_eq!(words.len(), triples.len());
    }

    #[test]
    fn word_commutation(w in prop::collection::vec(0..4u32, 0..20)) {
        let word: Word = w.iter().map(|&l| Letter(l)).collect();
        let t = word_to_rooted(Alphabet::new(4), &word);
        let got: std::collections::BTreeSet<Word> =
            RootedMaws::build(&t).collect_words().into_iter().collect();
        let expect = oracle_maw_word(&word, 4, &OracleLimits::default()).unwrap();
        prop_assert_eq!(got, expect);
    }
}
