//! Set partitions of `[n]`, restricted growth functions (RGFs), the bijection
//! between them, and lexicographic enumeration streams.
//!
//! A word `a_1 ... a_n` is an RGF when `a_1 = 1` and every later letter is at
//! most one more than the running maximum. Letter `a_i = j` says that element
//! `i` lives in the `j`-th block when blocks are ordered by their minima.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{domain, parse_err, Error, Result};

/// Longest word the library handles. Statistics use a 64-bit letter mask.
pub const MAX_LEN: usize = 64;

/// A restricted growth function.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RgfWord {
    letters: Vec<u8>,
    max: u8,
}

impl RgfWord {
    /// Builds a word from letters already known to satisfy the growth rules.
    pub(crate) fn from_trusted(letters: Vec<u8>) -> Self {
        debug_assert!(check_letters(&letters).is_ok(), "{letters:?}");
        let max = letters.iter().copied().max().unwrap_or(0);
        RgfWord { letters, max }
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest letter, which is also the number of blocks.
    pub fn max_letter(&self) -> usize {
        self.max as usize
    }

    /// `1^{l_1} 2^{l_2} ... k^{l_k}`: the word never goes down.
    pub fn is_layered(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn to_partition(&self) -> SetPartition {
        partition_from_rgf(self)
    }
}

fn check_letters<T: Copy + Into<u64>>(seq: &[T]) -> Result<u8> {
    if seq.is_empty() {
        return Err(domain("words must have length at least 1"));
    }
    if seq.len() > MAX_LEN {
        return Err(domain(format!(
            "words longer than {MAX_LEN} are not supported"
        )));
    }
    let mut max = 0u64;
    for (i, &a) in seq.iter().enumerate() {
        let a: u64 = a.into();
        let ok = if i == 0 {
            a == 1
        } else {
            a >= 1 && a <= max + 1
        };
        if !ok {
            return Err(Error::NotAnRgf { position: i + 1 });
        }
        max = max.max(a);
    }
    Ok(max as u8)
}

/// Checks both growth rules and returns the typed word, or the first bad position (1-based).
pub fn validate_rgf<T: Copy + Into<u64>>(seq: &[T]) -> Result<RgfWord> {
    let max = check_letters(seq)?;
    let letters = seq.iter().map(|&a| a.into() as u8).collect();
    Ok(RgfWord { letters, max })
}

impl fmt::Display for RgfWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

/// Digits when every letter is below 10, otherwise comma-separated integers.
pub(crate) fn write_letters(f: &mut impl fmt::Write, letters: &[u8]) -> fmt::Result {
    if letters.iter().all(|&a| a <= 9) {
        for a in letters {
            write!(f, "{a}")?;
        }
    } else {
        for (i, a) in letters.iter().enumerate() {
            if i > 0 {
                f.write_char(',')?;
            }
            write!(f, "{a}")?;
        }
    }
    Ok(())
}

pub(crate) fn format_letters(letters: &[u8]) -> String {
    let mut s = String::new();
    write_letters(&mut s, letters).expect("writing to a String");
    s
}

/// Parses the word text format into raw integers (no RGF check).
pub(crate) fn parse_letters(text: &str) -> Result<Vec<u32>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(parse_err(text, "empty word"));
    }
    if text.contains(',') {
        text.split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u32>()
                    .map_err(|_| parse_err(tok, "expected a positive integer"))
            })
            .collect()
    } else {
        text.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| parse_err(c.to_string(), "expected a digit"))
            })
            .collect()
    }
}

impl FromStr for RgfWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        validate_rgf(&parse_letters(s)?)
    }
}

/// A set partition of `[n]` in standard form: blocks sorted internally and
/// ordered by their minima.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates that `blocks` partition `{1, ..., n}` and puts them in standard form.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(domain("set partitions need n >= 1"));
        }
        if n > MAX_LEN {
            return Err(domain(format!("n > {MAX_LEN} is not supported")));
        }
        let mut seen = vec![false; n + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(domain("blocks must be nonempty"));
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x == 0 || x > n {
                    return Err(domain(format!("element {x} is outside [1, {n}]")));
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(domain(format!("element {x} appears twice")));
                }
            }
        }
        if let Some(x) = (1..=n).find(|&x| !seen[x]) {
            return Err(domain(format!("element {x} is not covered")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn to_rgf(&self) -> RgfWord {
        rgf_from_partition(self)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.n <= 9;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, x) in block.iter().enumerate() {
                if j > 0 && !compact {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut blocks = Vec::new();
        // compact form only exists for n <= 9
        let separated = s.contains(',')
            || s.contains('0')
            || s.chars().filter(char::is_ascii_digit).count() > 9;
        for block in s.split('/') {
            let block = block.trim();
            if block.is_empty() {
                return Err(parse_err(s, "empty block"));
            }
            let elems: Vec<usize> = if separated {
                block
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|_| parse_err(t, "expected a positive integer"))
                    })
                    .collect::<Result<_>>()?
            } else {
                block
                    .chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| parse_err(c.to_string(), "expected a digit"))
                    })
                    .collect::<Result<_>>()?
            };
            blocks.push(elems);
        }
        let n = blocks.iter().map(Vec::len).sum();
        SetPartition::new(n, blocks).map_err(|e| match e {
            Error::Domain(reason) => parse_err(s, reason),
            other => other,
        })
    }
}

/// Letter `i` of the result is the index of the block holding `i`.
pub fn rgf_from_partition(p: &SetPartition) -> RgfWord {
    let mut letters = vec![0u8; p.n];
    for (j, block) in p.blocks.iter().enumerate() {
        for &x in block {
            letters[x - 1] = (j + 1) as u8;
        }
    }
    RgfWord {
        letters,
        max: p.blocks.len() as u8,
    }
}

pub fn partition_from_rgf(w: &RgfWord) -> SetPartition {
    let mut blocks = vec![Vec::new(); w.max_letter()];
    for (i, &a) in w.letters.iter().enumerate() {
        blocks[a as usize - 1].push(i + 1);
    }
    SetPartition { n: w.len(), blocks }
}

/// Intersects every block with `s`, drops empty blocks and relabels the
/// surviving elements by rank.
pub fn restrict_standardize(p: &SetPartition, s: &BTreeSet<usize>) -> Result<SetPartition> {
    if s.is_empty() {
        return Err(domain("restriction set must be nonempty"));
    }
    if let Some(&x) = s.iter().find(|&&x| x == 0 || x > p.n) {
        return Err(domain(format!("element {x} is outside [1, {}]", p.n)));
    }
    let rank = |x: usize| s.range(..x).count() + 1;
    let blocks: Vec<Vec<usize>> = p
        .blocks
        .iter()
        .map(|b| {
            b.iter()
                .filter(|x| s.contains(x))
                .map(|&x| rank(x))
                .collect()
        })
        .filter(|b: &Vec<usize>| !b.is_empty())
        .collect();
    SetPartition::new(s.len(), blocks)
}

/// Replaces every letter by its rank among the distinct letters (smallest -> 1).
pub fn standardize_word<T: Ord + Copy>(seq: &[T]) -> Vec<u8> {
    let distinct: BTreeSet<T> = seq.iter().copied().collect();
    seq.iter()
        .map(|a| (distinct.range(..a).count() + 1) as u8)
        .collect()
}

/// A strict integer partition: parts strictly decreasing, all at most `bound`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerPartitionStrict {
    parts: Vec<usize>,
    bound: usize,
}

impl IntegerPartitionStrict {
    pub fn new(parts: Vec<usize>, bound: usize) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(domain("parts must be strictly decreasing"));
        }
        if parts.iter().any(|&p| p == 0 || p > bound) {
            return Err(domain(format!("parts must lie in [1, {bound}]")));
        }
        Ok(IntegerPartitionStrict { parts, bound })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// Binomial coefficient, zero when `k > n`.
pub(crate) fn binom_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Stirling number of the second kind `S(n, k)`.
pub fn stirling2(n: usize, k: usize) -> Result<u64> {
    if k > n {
        return Err(domain(format!("stirling2 needs k <= n (got n={n}, k={k})")));
    }
    let mut row = vec![0u64; n + 1];
    row[0] = 1;
    for m in 1..=n {
        for j in (1..=m.min(k)).rev() {
            row[j] = (j as u64)
                .checked_mul(row[j])
                .and_then(|x| x.checked_add(row[j - 1]))
                .ok_or(Error::Overflow("stirling2"))?;
        }
        row[0] = 0;
    }
    Ok(row[k])
}

pub fn bell(n: usize) -> Result<u64> {
    (0..=n).try_fold(0u64, |acc, k| {
        acc.checked_add(stirling2(n, k)?)
            .ok_or(Error::Overflow("bell"))
    })
}

type Prune<'a> = Box<dyn Fn(&[u8]) -> bool + Send + Sync + 'a>;

/// Lexicographic stream of RGFs of a fixed length, optionally with a fixed
/// maximal letter, a fixed prefix and a prefix-closed rejection predicate.
///
/// `prune(prefix)` must be monotone: once it rejects a prefix it must reject
/// every extension. Only the newest letter is new to the predicate on each call.
pub struct Rgfs<'a> {
    n: usize,
    k: Option<u8>,
    fixed: usize,
    word: Vec<u8>,
    maxes: Vec<u8>,
    cand: Vec<u8>,
    prune: Option<Prune<'a>>,
    done: bool,
}

impl<'a> Rgfs<'a> {
    pub(crate) fn new(
        n: usize,
        k: Option<usize>,
        prefix: &[u8],
        prune: Option<Prune<'a>>,
    ) -> Result<Self> {
        check_nk(n, k)?;
        if prefix.len() > n {
            return Err(domain("prefix longer than the word"));
        }
        let mut maxes = Vec::with_capacity(n);
        let mut done = false;
        if !prefix.is_empty() {
            check_letters(prefix)?;
            let mut m = 0;
            for (i, &a) in prefix.iter().enumerate() {
                m = m.max(a);
                maxes.push(m);
                if prune.as_ref().is_some_and(|p| p(&prefix[..=i])) {
                    done = true;
                }
            }
            if let Some(k) = k {
                let m = m as usize;
                if m > k || k - m > n - prefix.len() {
                    done = true;
                }
            }
        }
        Ok(Rgfs {
            n,
            k: k.map(|k| k as u8),
            fixed: prefix.len(),
            word: prefix.to_vec(),
            maxes,
            cand: vec![1; n + 1],
            prune,
            done,
        })
    }
}

fn check_nk(n: usize, k: Option<usize>) -> Result<()> {
    if n == 0 {
        return Err(domain("n must be at least 1"));
    }
    if n > MAX_LEN {
        return Err(domain(format!("n > {MAX_LEN} is not supported")));
    }
    if let Some(k) = k {
        if k == 0 || k > n {
            return Err(domain(format!("need 1 <= k <= n (got n={n}, k={k})")));
        }
    }
    Ok(())
}

impl Iterator for Rgfs<'_> {
    type Item = RgfWord;

    fn next(&mut self) -> Option<RgfWord> {
        if self.done {
            return None;
        }
        loop {
            let d = self.word.len();
            if d == self.n {
                let out = RgfWord::from_trusted(self.word.clone());
                if d == self.fixed {
                    self.done = true;
                } else {
                    self.word.pop();
                    self.maxes.pop();
                }
                return Some(out);
            }
            let cur_max = if d == 0 { 0 } else { self.maxes[d - 1] };
            let hi = match self.k {
                Some(k) => (cur_max + 1).min(k),
                None => cur_max + 1,
            };
            let v = self.cand[d];
            if v > hi {
                if d == self.fixed {
                    self.done = true;
                    return None;
                }
                self.cand[d] = 1;
                self.word.pop();
                self.maxes.pop();
                continue;
            }
            self.cand[d] = v + 1;
            let new_max = cur_max.max(v);
            if let Some(k) = self.k {
                // the letters new_max+1..=k still have to fit in the remaining slots
                if (k - new_max) as usize > self.n - d - 1 {
                    continue;
                }
            }
            self.word.push(v);
            if self.prune.as_ref().is_some_and(|p| p(&self.word)) {
                self.word.pop();
                continue;
            }
            self.maxes.push(new_max);
            self.cand[d + 1] = 1;
        }
    }
}

/// All RGFs of length `n` (with maximal letter `k` when given), in lexicographic order.
pub fn enumerate_rgfs(n: usize, k: Option<usize>) -> Result<Rgfs<'static>> {
    Rgfs::new(n, k, &[], None)
}
