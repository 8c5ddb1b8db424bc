//! Acceptance suite: every shipped guarantee, one pass/fail line each.
//!
//! All nine criteria run inside a single sequential test so the timing
//! checks are not disturbed by parallel test threads. Run with
//! `cargo test -p treemaw --test acceptance -- --nocapture` to see the
//! per-criterion lines.

mod common;

use std::collections::{BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::RngExt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{assert_isomorphic, check_structure, naive_compacted_trie};
use treemaw::alphabet::{Alphabet, Letter, Word};
use treemaw::determinize::determinize;
use treemaw::generators::{
    fixed_length_seeds, gen_fixed_length_word, gen_random_rooted, gen_random_unrooted,
    gen_unrooted_extremal,
};
use treemaw::maw_unrooted::UnrootedMaws;
use treemaw::oracle::{
    oracle_maw_rooted, oracle_maw_unrooted, oracle_maw_word, OracleLimits,
};
use treemaw::tree::word_to_rooted;
use treemaw::{RootedMaws, RootedTree};

#[derive(Default)]
struct Gate {
    bound_checks: u64,
    bound_violations: u64,
}

impl Gate {
    /// Criterion 4 invariant, asserted on every pipeline the suite builds.
    fn check_bound(&mut self, maws: &RootedMaws, emitted: u64) {
        self.bound_checks += 1;
        let sigma = maws.determinized().alphabet().sigma() as u64;
        if emitted > sigma * maws.suffix_tree().edge_count() {
            self.bound_violations += 1;
        }
    }
}

fn expanded_set(maws: &RootedMaws) -> (BTreeSet<Word>, u64) {
    let mut set = BTreeSet::new();
    let count = maws.emit(|t| {
        set.insert(maws.suffix_tree().expand(&t));
    });
    (set, count)
}

fn ascii(s: &str) -> Word {
    s.bytes().map(|b| Letter((b - b'a') as u32)).collect()
}

fn criterion_1_rooted_oracle(gate: &mut Gate) -> Result<String, String> {
    let start = Instant::now();
    let limits = OracleLimits::default();
    let mut instances = 0;
    for seed in 0..100u64 {
        let n = 1 + (seed % 12) as u32;
        let sigma = 1 + (seed % 4) as u32;
        let raw = gen_random_rooted(n, sigma, seed);
        for t in [raw.clone(), determinize(&raw)] {
            let maws = RootedMaws::build(&t);
            let (got, count) = expanded_set(&maws);
            gate.check_bound(&maws, count);
            let expect = oracle_maw_rooted(&t, &limits).map_err(|e| e.to_string())?;
            if got != expect {
                return Err(format!("mismatch at seed {seed} (n={n}, sigma={sigma})"));
            }
            instances += 1;
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(10) {
        return Err(format!("took {elapsed:?}, budget 10 s"));
    }
    Ok(format!("{instances} rooted instances equal the oracle in {elapsed:?}"))
}

fn criterion_2_word_equivalence(gate: &mut Gate) -> Result<String, String> {
    let limits = OracleLimits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for case in 0..200 {
        let len = rng.random_range(0..=20usize);
        let sigma = rng.random_range(1..=4u32);
        let w: Word = (0..len).map(|_| Letter(rng.random_range(0..sigma))).collect();
        let t = word_to_rooted(Alphabet::new(sigma), &w);
        let maws = RootedMaws::build(&t);
        let (got, count) = expanded_set(&maws);
        gate.check_bound(&maws, count);
        let expect = oracle_maw_word(&w, sigma, &limits).map_err(|e| e.to_string())?;
        if got != expect {
            return Err(format!("mismatch at case {case}: {w:?}"));
        }
    }
    for (word, expect) in [
        ("aab", vec!["ba", "bb", "aaa"]),
        ("abba", vec!["aa", "aba", "bab", "bbb"]),
    ] {
        let t = word_to_rooted(Alphabet::new(2), &ascii(word));
        let maws = RootedMaws::build(&t);
        let (got, count) = expanded_set(&maws);
        gate.check_bound(&maws, count);
        let want: BTreeSet<Word> = expect.iter().map(|s| ascii(s)).collect();
        if got != want {
            return Err(format!("fixed example {word} disagrees"));
        }
    }
    Ok("200 random words plus the fixed examples equal the oracle".into())
}

fn criterion_3_unrooted_oracle(gate: &mut Gate) -> Result<String, String> {
    let start = Instant::now();
    let limits = OracleLimits::default();
    let mut instances = 0;
    for seed in 0..100u64 {
        let n = 1 + (seed % 10) as u32;
        let sigma = 1 + (seed % 3) as u32;
        let t = gen_random_unrooted(n, sigma, seed ^ 0xacce);
        let maws = UnrootedMaws::build(&t);
        let mut got = BTreeSet::new();
        let count = maws.emit(|trip| {
            got.insert(maws.rooted().suffix_tree().expand(&trip));
        });
        gate.check_bound(maws.rooted(), count);
        let expect = oracle_maw_unrooted(&t, &limits).map_err(|e| e.to_string())?;
        if got != expect {
            return Err(format!("mismatch at seed {seed} (n={n}, sigma={sigma})"));
        }
        instances += 1;
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(30) {
        return Err(format!("took {elapsed:?}, budget 30 s"));
    }
    Ok(format!("{instances} unrooted instances equal the oracle in {elapsed:?}"))
}

fn criterion_4_count_bound(gate: &mut Gate) -> Result<String, String> {
    if gate.bound_checks == 0 {
        return Err("no instances were checked".into());
    }
    if gate.bound_violations != 0 {
        return Err(format!(
            "{} of {} instances exceeded sigma x |ST edges|",
            gate.bound_violations, gate.bound_checks
        ));
    }
    Ok(format!(
        "count <= sigma x (ST edges) on all {} instances, zero violations",
        gate.bound_checks
    ))
}

fn criterion_5_fixed_length_family(gate: &mut Gate) -> Result<String, String> {
    let start = Instant::now();
    // sigma = 3, n = 243: at least sigma^2 * l = 54 minimal absent words of
    // length k + 2 = 6
    let (word, alphabet, k) = gen_fixed_length_word(3, 243).map_err(|e| e.to_string())?;
    if k != 4 {
        return Err(format!("expected block exponent 4, got {k}"));
    }
    let block = 2 * 3 * (k as u64 + 2) + 1;
    let l = 243 / block;
    if l != 6 {
        return Err(format!("expected 6 blocks, got {l}"));
    }
    let t = word_to_rooted(alphabet.clone(), &word);
    let maws = RootedMaws::build(&t);
    let mut of_target_len = 0u64;
    let target = (k + 2) as usize;
    let count = maws.emit(|trip| {
        let len = maws.suffix_tree().string_depth(trip.node) as usize + 2;
        if len == target {
            of_target_len += 1;
        }
    });
    gate.check_bound(&maws, count);
    if of_target_len < 54 {
        return Err(format!("only {of_target_len} length-6 words, need >= 54"));
    }

    // sigma = 2, n = 32: the whole family a s_1 b is confirmed by the oracle
    let (word, alphabet, k) = gen_fixed_length_word(2, 32).map_err(|e| e.to_string())?;
    let oracle = oracle_maw_word(&word, alphabet.sigma(), &OracleLimits::default())
        .map_err(|e| e.to_string())?;
    let seeds = fixed_length_seeds(2, k, 1);
    for a in 0..2u32 {
        for b in 0..2u32 {
            let mut cand = vec![Letter(a)];
            cand.extend(&seeds[0]);
            cand.push(Letter(b));
            if !oracle.contains(&cand) {
                return Err(format!("family word missing from oracle: {cand:?}"));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(5) {
        return Err(format!("took {elapsed:?}, budget 5 s"));
    }
    Ok(format!(
        "{of_target_len} length-6 words (>= 54) and the sigma=2 family verified in {elapsed:?}"
    ))
}

/// Parse `a 0^j b 0^k c` with nonzero a, b, c; returns (a, j, b, k, c).
fn family_shape(w: &[Letter]) -> Option<(u32, usize, u32, usize, u32)> {
    if w.len() < 5 || w[0].0 == 0 || w[w.len() - 1].0 == 0 {
        return None;
    }
    let inner: Vec<usize> =
        (1..w.len() - 1).filter(|&i| w[i].0 != 0).collect();
    let [mid] = inner[..] else { return None };
    let j = mid - 1;
    let k = w.len() - mid - 2;
    if j == 0 || k == 0 {
        return None;
    }
    Some((w[0].0, j, w[mid].0, k, w[w.len() - 1].0))
}

fn criterion_6_extremal_family(gate: &mut Gate) -> Result<String, String> {
    let start = Instant::now();
    for (s, big_n) in [(1u32, 1u32), (2, 2), (2, 1)] {
        let t = gen_unrooted_extremal(s, big_n);
        let maws = UnrootedMaws::build(&t);
        let mut got = BTreeSet::new();
        let count = maws.emit(|trip| {
            got.insert(maws.rooted().suffix_tree().expand(&trip));
        });
        gate.check_bound(maws.rooted(), count);
        let mut checks = 0u64;
        for a in 1..=s {
            for b in 1..=s {
                for c in 1..=s {
                    for j in 1..=big_n as usize {
                        for k in 1..=big_n as usize {
                            let mut w = vec![Letter(a)];
                            w.extend(std::iter::repeat(Letter(0)).take(j));
                            w.push(Letter(b));
                            w.extend(std::iter::repeat(Letter(0)).take(k));
                            w.push(Letter(c));
                            if !got.contains(&w) {
                                return Err(format!(
                                    "(s={s}, N={big_n}): family word missing: {w:?}"
                                ));
                            }
                            checks += 1;
                        }
                    }
                }
            }
        }
        if checks != (s as u64).pow(3) * (big_n as u64).pow(2) {
            return Err("membership check count off".into());
        }
    }

    // (s, N) = (3, 20): n = 147; the pipeline confirms >= 10800 family words
    let t = gen_unrooted_extremal(3, 20);
    if t.n() != 147 {
        return Err(format!("expected 147 nodes, got {}", t.n()));
    }
    let maws = UnrootedMaws::build(&t);
    let mut family: HashSet<(u32, usize, u32, usize, u32)> = HashSet::new();
    let count = maws.emit(|trip| {
        let w = maws.rooted().suffix_tree().expand(&trip);
        if let Some(tuple) = family_shape(&w) {
            let (_, j, _, k, _) = tuple;
            if j <= 20 && k <= 20 {
                family.insert(tuple);
            }
        }
    });
    gate.check_bound(maws.rooted(), count);
    let elapsed = start.elapsed();
    if family.len() < 10_800 {
        return Err(format!("only {} family words, need >= 10800", family.len()));
    }
    if elapsed >= Duration::from_secs(30) {
        return Err(format!("took {elapsed:?}, budget 30 s"));
    }
    Ok(format!(
        "small families complete; (3,20) yields {} >= 10800 family words in {elapsed:?}",
        family.len()
    ))
}

fn time_pipeline(n: u32, seed: u64) -> Duration {
    let t = gen_random_rooted(n, 4, seed);
    let start = Instant::now();
    let maws = RootedMaws::build(&t);
    let count = maws.count();
    let elapsed = start.elapsed();
    assert!(count > 0);
    elapsed
}

fn criterion_7_scaling(_gate: &mut Gate) -> Result<String, String> {
    let sizes = [1u32 << 16, 1 << 17, 1 << 18, 1 << 19, 1 << 20];
    let mut times = Vec::new();
    for (i, &n) in sizes.iter().enumerate() {
        // two attempts at the smaller sizes damp scheduler noise
        let mut best = time_pipeline(n, 1000 + i as u64);
        if n < 1 << 19 {
            best = best.min(time_pipeline(n, 1000 + i as u64));
        }
        times.push(best);
    }
    let last = *times.last().unwrap();
    if last >= Duration::from_secs(30) {
        return Err(format!("n = 2^20 took {last:?}, budget 30 s"));
    }
    for w in times.windows(2) {
        let ratio = w[1].as_secs_f64() / w[0].as_secs_f64().max(1e-9);
        if ratio > 2.6 {
            return Err(format!(
                "doubling ratio {ratio:.2} > 2.6 (times {:?})",
                times
            ));
        }
    }
    let ratios: Vec<String> = times
        .windows(2)
        .map(|w| format!("{:.2}", w[1].as_secs_f64() / w[0].as_secs_f64()))
        .collect();
    Ok(format!(
        "2^16..2^20 in {times:?}; doubling ratios {} all <= 2.6",
        ratios.join(", ")
    ))
}

fn criterion_8_determinize(_gate: &mut Gate) -> Result<String, String> {
    for seed in 0..200u64 {
        let n = 1 + (seed % 12) as u32;
        let sigma = 1 + (seed % 3) as u32;
        let t = gen_random_rooted(n, sigma, seed + 5000);
        let d = determinize(&t);
        if !d.is_deterministic() || d.node_words() != t.node_words() || d.n() > t.n() {
            return Err(format!("determinize broke seed {seed}"));
        }
        let dd = determinize(&d);
        if dd.n() != d.n() || dd.node_words() != d.node_words() {
            return Err(format!("not idempotent at seed {seed}"));
        }
    }
    // a chain of one million nodes, plus a nondeterministic twin-chain that
    // must collapse through the full level-merge path
    let chain_word: Word = (0..999_999u32).map(|i| Letter(i % 2)).collect();
    let chain = word_to_rooted(Alphabet::new(2), &chain_word);
    let start = Instant::now();
    let d = determinize(&chain);
    let t_chain = start.elapsed();
    if d.n() != 1_000_000 {
        return Err("chain changed size".into());
    }
    let half = 500_000u32;
    let twin_n = 2 * half + 1;
    let edges: Vec<(u32, u32, Letter)> = (2..=twin_n)
        .map(|v| (v, if v <= 3 { 1 } else { v - 2 }, Letter(0)))
        .collect();
    let twin = RootedTree::new(twin_n, Alphabet::new(1), &edges).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let d = determinize(&twin);
    let t_twin = start.elapsed();
    if d.n() != half + 1 {
        return Err(format!("twin chains should collapse to {} nodes, got {}", half + 1, d.n()));
    }
    if t_chain >= Duration::from_secs(2) || t_twin >= Duration::from_secs(2) {
        return Err(format!("too slow: chain {t_chain:?}, twin {t_twin:?}, budget 2 s each"));
    }
    Ok(format!(
        "200 instances preserve words and shrink; 10^6-node chains in {t_chain:?} / {t_twin:?}"
    ))
}

fn criterion_9_suffix_tree_structure(_gate: &mut Gate) -> Result<String, String> {
    let mut instances = 0;
    for seed in 0..220u64 {
        let n = 1 + (seed % 12) as u32;
        let sigma = 1 + (seed % 3) as u32;
        let raw = gen_random_rooted(n, sigma, seed.wrapping_mul(7) + 99);
        let maws = RootedMaws::build(&raw);
        let st = maws.suffix_tree();
        // leaf count: one leaf per node word of the determinized tree
        if st.leaf_count() != maws.determinized().n() {
            return Err(format!("leaf count off at seed {seed}"));
        }
        check_structure(st);
        let naive = naive_compacted_trie(maws.determinized());
        assert_isomorphic(st, &naive);
        instances += 1;
    }
    Ok(format!(
        "{instances} suffix trees isomorphic to the naive trie, leaf counts exact, internals branch"
    ))
}

#[test]
fn acceptance_criteria() {
    let mut gate = Gate::default();
    type Criterion = fn(&mut Gate) -> Result<String, String>;
    let criteria: Vec<(u32, &str, Criterion)> = vec![
        (1, "rooted oracle equivalence", criterion_1_rooted_oracle),
        (2, "word equivalence", criterion_2_word_equivalence),
        (3, "unrooted oracle equivalence", criterion_3_unrooted_oracle),
        (4, "count upper bound", criterion_4_count_bound),
        (5, "fixed-length family", criterion_5_fixed_length_family),
        (6, "extremal unrooted family", criterion_6_extremal_family),
        (7, "output-sensitive scaling", criterion_7_scaling),
        (8, "determinization", criterion_8_determinize),
        (9, "suffix-tree structure", criterion_9_suffix_tree_structure),
    ];
    let mut failed = Vec::new();
    for (idx, name, f) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(|| f(&mut gate)));
        match outcome {
            Ok(Ok(detail)) => println!("[PASS] criterion {idx} ({name}): {detail}"),
            Ok(Err(why)) => {
                println!("[FAIL] criterion {idx} ({name}): {why}");
                failed.push(idx);
            }
            Err(panic) => {
                let msg = panic
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into());
                println!("[FAIL] criterion {idx} ({name}): panicked: {msg}");
                failed.push(idx);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
    // criteria 5 and 6 record bound checks after criterion 4 printed its
    // line; a late violation still fails the gate
    assert_eq!(gate.bound_violations, 0, "count bound violated after criterion 4");
}
