//! Text formats for trees and words.
//!
//! Tree files: a header `rooted <n> <sigma>` or `unrooted <n> <sigma>`,
//! then `n-1` edge lines — `<child> <parent> <label>` for rooted trees
//! (nodes 1..n, node 1 the root) or `<u> <v> <label>` for unrooted ones.
//! Word files: `word <len> <sigma>` followed by `len` whitespace-separated
//! integer letters. Lines starting with `#` are comments.

use std::fmt::Write as _;

use treemaw::alphabet::{Alphabet, Letter, Word};
use treemaw::tree::{RootedTree, UnrootedTree};

use crate::CliError;

pub enum TreeFile {
    Rooted(RootedTree),
    Unrooted(UnrootedTree),
}

fn meaningful_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn parse_int(tok: &str, what: &str) -> Result<u64, CliError> {
    tok.parse::<u64>()
        .map_err(|_| CliError::Parse(format!("{what}: expected an integer, got {tok:?}")))
}

pub fn parse_tree_file(text: &str) -> Result<TreeFile, CliError> {
    let mut lines = meaningful_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| CliError::Parse("empty tree file".into()))?;
    let mut toks = header.split_whitespace();
    let kind = toks.next().unwrap();
    if kind != "rooted" && kind != "unrooted" {
        return Err(CliError::Parse(format!(
            "bad header {header:?}: expected 'rooted <n> <sigma>' or 'unrooted <n> <sigma>'"
        )));
    }
    let n = parse_int(toks.next().ok_or_else(|| CliError::Parse("header missing n".into()))?, "n")?;
    let sigma = parse_int(
        toks.next().ok_or_else(|| CliError::Parse("header missing sigma".into()))?,
        "sigma",
    )?;
    if toks.next().is_some() {
        return Err(CliError::Parse(format!("trailing tokens in header {header:?}")));
    }
    if n == 0 || n > u32::MAX as u64 {
        return Err(CliError::Validation(format!("node count {n} out of range")));
    }
    if sigma == 0 || sigma >= u32::MAX as u64 {
        return Err(CliError::Validation(format!("sigma {sigma} out of range")));
    }
    let mut edges = Vec::with_capacity(n as usize - 1);
    for line in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(CliError::Parse(format!(
                "edge line {line:?}: expected 3 fields, got {}",
                toks.len()
            )));
        }
        let a = parse_int(toks[0], "edge endpoint")?;
        let b = parse_int(toks[1], "edge endpoint")?;
        let l = parse_int(toks[2], "edge label")?;
        if a > u32::MAX as u64 || b > u32::MAX as u64 || l > u32::MAX as u64 {
            return Err(CliError::Validation(format!("edge {line:?} out of range")));
        }
        edges.push((a as u32, b as u32, Letter(l as u32)));
    }
    let alphabet = Alphabet::new(sigma as u32);
    let tree = match kind {
        "rooted" => TreeFile::Rooted(
            RootedTree::new(n as u32, alphabet, &edges)
                .map_err(|e| CliError::Validation(e.to_string()))?,
        ),
        _ => TreeFile::Unrooted(
            UnrootedTree::new(n as u32, alphabet, &edges)
                .map_err(|e| CliError::Validation(e.to_string()))?,
        ),
    };
    Ok(tree)
}

pub fn parse_word_file(text: &str) -> Result<(Word, Alphabet), CliError> {
    let mut lines = meaningful_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| CliError::Parse("empty word file".into()))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("word") {
        return Err(CliError::Parse(format!(
            "bad header {header:?}: expected 'word <len> <sigma>'"
        )));
    }
    let len = parse_int(toks.next().ok_or_else(|| CliError::Parse("header missing len".into()))?, "len")?;
    let sigma = parse_int(
        toks.next().ok_or_else(|| CliError::Parse("header missing sigma".into()))?,
        "sigma",
    )?;
    if sigma == 0 {
        return Err(CliError::Validation("sigma must be positive".into()));
    }
    let mut word = Word::with_capacity(len as usize);
    for line in lines {
        for tok in line.split_whitespace() {
            let l = parse_int(tok, "letter")?;
            if l >= sigma {
                return Err(CliError::Validation(format!("letter {l} outside alphabet 0..{sigma}")));
            }
            word.push(Letter(l as u32));
        }
    }
    if word.len() as u64 != len {
        return Err(CliError::Parse(format!(
            "word length mismatch: header says {len}, found {}",
            word.len()
        )));
    }
    Ok((word, Alphabet::new(sigma as u32)))
}

pub fn write_rooted(t: &RootedTree) -> String {
    let mut out = String::new();
    writeln!(out, "rooted {} {}", t.n(), t.alphabet().sigma()).unwrap();
    for v in 2..=t.n() {
        writeln!(out, "{} {} {}", v, t.parent(v).unwrap(), t.parent_label(v).unwrap().0).unwrap();
    }
    out
}

pub fn write_unrooted(t: &UnrootedTree) -> String {
    let mut out = String::new();
    writeln!(out, "unrooted {} {}", t.n(), t.alphabet().sigma()).unwrap();
    for &(u, v, l) in t.edges() {
        writeln!(out, "{} {} {}", u, v, l.0).unwrap();
    }
    out
}

pub fn write_word(w: &[Letter], sigma: u32) -> String {
    let mut out = String::new();
    writeln!(out, "word {} {}", w.len(), sigma).unwrap();
    let parts: Vec<String> = w.iter().map(|l| l.0.to_string()).collect();
    if !parts.is_empty() {
        writeln!(out, "{}", parts.join(" ")).unwrap();
    }
    out
}
