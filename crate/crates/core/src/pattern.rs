//! Pattern containment for partition patterns and word patterns, avoidance
//! classes, and the direct constructions of the known avoidance classes.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{domain, parse_err, Error, Result};
use crate::partition::{
    binom_u64, format_letters, parse_letters, rgf_from_partition, standardize_word, stirling2,
    RgfWord, Rgfs, SetPartition,
};

/// A set partition of `[m]` used as a pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionPattern {
    partition: SetPartition,
    letters: Vec<u8>,
}

impl PartitionPattern {
    pub fn new(partition: SetPartition) -> Self {
        let letters = rgf_from_partition(&partition).letters().to_vec();
        PartitionPattern { partition, letters }
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    /// The pattern's RGF.
    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn size(&self) -> usize {
        self.letters.len()
    }
}

impl FromStr for PartitionPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(PartitionPattern::new(s.parse()?))
    }
}

impl fmt::Display for PartitionPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.partition.fmt(f)
    }
}

/// A standardized word, such as `112` or `121`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WordPattern(Vec<u8>);

impl WordPattern {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if letters.is_empty() {
            return Err(domain("word patterns must be nonempty"));
        }
        if standardize_word(&letters) != letters {
            return Err(domain(format!(
                "word pattern {} is not standardized",
                format_letters(&letters)
            )));
        }
        Ok(WordPattern(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }
}

impl FromStr for WordPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let raw = parse_letters(s)?;
        if raw.iter().any(|&a| a == 0 || a > u8::MAX as u32) {
            return Err(parse_err(s, "letters must lie in 1..=255"));
        }
        WordPattern::new(raw.into_iter().map(|a| a as u8).collect())
            .map_err(|e| parse_err(s, e.to_string()))
    }
}

impl fmt::Display for WordPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.0))
    }
}

/// A set of patterns to avoid.
///
/// Text grammar: items separated by `;`, word patterns prefixed with `w:`,
/// e.g. `1/23;13/2` or `w:112`. The canonical rendering sorts the items.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternSet {
    partitions: BTreeSet<PartitionPattern>,
    words: BTreeSet<WordPattern>,
}

impl PatternSet {
    pub fn new(
        partitions: impl IntoIterator<Item = PartitionPattern>,
        words: impl IntoIterator<Item = WordPattern>,
    ) -> Self {
        PatternSet {
            partitions: partitions.into_iter().collect(),
            words: words.into_iter().collect(),
        }
    }

    pub fn partition_patterns(&self) -> impl Iterator<Item = &PartitionPattern> {
        self.partitions.iter()
    }

    pub fn word_patterns(&self) -> impl Iterator<Item = &WordPattern> {
        self.words.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty() && self.words.is_empty()
    }

    pub fn is_subset(&self, other: &PatternSet) -> bool {
        self.partitions.is_subset(&other.partitions) && self.words.is_subset(&other.words)
    }

    /// True when the word contains none of the patterns.
    pub fn avoided_by(&self, letters: &[u8]) -> bool {
        self.partitions
            .iter()
            .all(|p| !rgf_contains_partition(letters, p.letters(), false))
            && self
                .words
                .iter()
                .all(|v| !rgf_contains_word(letters, v.letters(), false))
    }

    /// Whether the word contains a pattern occurrence that uses its last letter.
    fn hit_at_end(&self, letters: &[u8]) -> bool {
        self.partitions
            .iter()
            .any(|p| rgf_contains_partition(letters, p.letters(), true))
            || self
                .words
                .iter()
                .any(|v| rgf_contains_word(letters, v.letters(), true))
    }
}

/// Parses the `;`-separated pattern grammar.
pub fn parse_pattern_set(text: &str) -> Result<PatternSet> {
    let mut set = PatternSet::default();
    for item in text.split(';') {
        let item = item.trim();
        if item.is_empty() {
            return Err(parse_err(text, "empty pattern"));
        }
        if let Some(word) = item.strip_prefix("w:") {
            set.words.insert(word.parse()?);
        } else {
            set.partitions.insert(item.parse()?);
        }
    }
    Ok(set)
}

impl FromStr for PatternSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pattern_set(s)
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.partitions {
            if !first {
                f.write_str(";")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        for v in &self.words {
            if !first {
                f.write_str(";")?;
            }
            first = false;
            write!(f, "w:{v}")?;
        }
        Ok(())
    }
}

// Restricting a partition to a subset and standardizing only depends on which
// chosen positions share a block, so containment of a partition pattern is
// containment of its equality structure as a subsequence of the RGF.
fn rgf_contains_partition(w: &[u8], pat: &[u8], use_last: bool) -> bool {
    fn go(
        w: &[u8],
        pat: &[u8],
        d: usize,
        from: usize,
        assigned: &mut Vec<u8>,
        use_last: bool,
    ) -> bool {
        if d == pat.len() {
            return true;
        }
        let remaining = pat.len() - d;
        let last_slot = w.len() - remaining;
        let start = if use_last && remaining == 1 {
            w.len() - 1
        } else {
            from
        };
        let end = if use_last && remaining > 1 {
            last_slot.min(w.len() - 2)
        } else {
            last_slot
        };
        let block = pat[d] as usize;
        for (i, &v) in w.iter().enumerate().take(end + 1).skip(start) {
            if block <= assigned.len() {
                if assigned[block - 1] != v {
                    continue;
                }
                if go(w, pat, d + 1, i + 1, assigned, use_last) {
                    return true;
                }
            } else {
                if assigned.contains(&v) {
                    continue;
                }
                assigned.push(v);
                let found = go(w, pat, d + 1, i + 1, assigned, use_last);
                assigned.pop();
                if found {
                    return true;
                }
            }
        }
        false
    }
    if pat.len() > w.len() || pat.is_empty() {
        return false;
    }
    go(w, pat, 0, 0, &mut Vec::with_capacity(pat.len()), use_last)
}

fn rgf_contains_word(w: &[u8], pat: &[u8], use_last: bool) -> bool {
    fn go(w: &[u8], pat: &[u8], d: usize, from: usize, image: &mut [u8], use_last: bool) -> bool {
        if d == pat.len() {
            return true;
        }
        let remaining = pat.len() - d;
        let last_slot = w.len() - remaining;
        let start = if use_last && remaining == 1 {
            w.len() - 1
        } else {
            from
        };
        let end = if use_last && remaining > 1 {
            last_slot.min(w.len() - 2)
        } else {
            last_slot
        };
        let x = pat[d] as usize;
        for (i, &v) in w.iter().enumerate().take(end + 1).skip(start) {
            if image[x] != 0 {
                if image[x] == v && go(w, pat, d + 1, i + 1, image, use_last) {
                    return true;
                }
                continue;
            }
            let consistent = image
                .iter()
                .enumerate()
                .all(|(y, &m)| m == 0 || (y < x && m < v) || (y > x && m > v));
            if !consistent {
                continue;
            }
            image[x] = v;
            let found = go(w, pat, d + 1, i + 1, image, use_last);
            image[x] = 0;
            if found {
                return true;
            }
        }
        false
    }
    if pat.len() > w.len() || pat.is_empty() {
        return false;
    }
    let distinct = *pat.iter().max().unwrap() as usize;
    go(w, pat, 0, 0, &mut vec![0u8; distinct + 1], use_last)
}

/// True iff some restriction of `p` to `|pat|` elements standardizes to `pat`.
pub fn contains_partition_pattern(p: &SetPartition, pat: &PartitionPattern) -> bool {
    rgf_contains_partition(rgf_from_partition(p).letters(), pat.letters(), false)
}

/// True iff some subsequence of `w` standardizes to `v`.
pub fn contains_word_pattern(w: &RgfWord, v: &WordPattern) -> bool {
    rgf_contains_word(w.letters(), v.letters(), false)
}

/// Lexicographic stream of RGFs of length `n` (maximal letter `k` if given)
/// avoiding every pattern in `ps`.
///
/// Containment is inherited by extensions, so prefixes that already contain a
/// pattern are cut off during the walk.
pub fn avoidance_class(n: usize, k: Option<usize>, ps: &PatternSet) -> Result<Rgfs<'_>> {
    avoidance_class_from(n, k, ps, &[])
}

pub(crate) fn avoidance_class_from<'a>(
    n: usize,
    k: Option<usize>,
    ps: &'a PatternSet,
    prefix: &[u8],
) -> Result<Rgfs<'a>> {
    if ps.is_empty() {
        return Rgfs::new(n, k, prefix, None);
    }
    Rgfs::new(
        n,
        k,
        prefix,
        Some(Box::new(move |w: &[u8]| ps.hit_at_end(w))),
    )
}

/// `w` never decreases; the words avoiding `13/2`.
pub fn is_layered(w: &[u8]) -> bool {
    w.windows(2).all(|p| p[0] <= p[1])
}

/// No letter occurs three or more times; the words avoiding `123`.
pub fn no_letter_thrice(w: &[u8]) -> bool {
    max_multiplicity(w) <= 2
}

fn max_multiplicity(w: &[u8]) -> usize {
    let mut counts = [0usize; 256];
    for &a in w {
        counts[a as usize] += 1;
    }
    counts.into_iter().max().unwrap_or(0)
}

/// Pattern sets of size two with a tabulated characterization.
pub const TABLE1: [&str; 9] = [
    "1/2/3;1/23",
    "1/2/3;13/2",
    "1/2/3;12/3",
    "1/23;13/2",
    "1/23;12/3",
    "1/23;123",
    "12/3;13/2",
    "123;13/2",
    "12/3;123",
];

/// Pattern sets of size three and four with a tabulated characterization.
pub const TABLE2: [&str; 9] = [
    "1/2/3;1/23;13/2",
    "1/2/3;1/23;12/3",
    "1/2/3;12/3;13/2",
    "1/23;12/3;13/2",
    "1/23;123;13/2",
    "1/23;12/3;123",
    "12/3;123;13/2",
    "1/2/3;1/23;12/3;13/2",
    "1/23;12/3;123;13/2",
];

/// The five partitions of `[3]`.
pub const SINGLETONS: [&str; 5] = ["1/2/3", "1/23", "12/3", "13/2", "123"];

fn word(letters: impl IntoIterator<Item = u8>) -> Vec<u8> {
    letters.into_iter().collect()
}

fn rep(a: u8, times: usize) -> impl Iterator<Item = u8> {
    std::iter::repeat_n(a, times)
}

fn run(from: u8, to: u8) -> impl Iterator<Item = u8> {
    from..=to
}

/// RGFs of length `n` with maximal letter `k` in which no letter occurs more
/// than `cap` times, built by a capped walk rather than pattern tests.
fn capped_words(n: usize, k: usize, cap: usize) -> Vec<Vec<u8>> {
    fn go(
        n: usize,
        k: usize,
        cap: usize,
        w: &mut Vec<u8>,
        counts: &mut [usize],
        max: usize,
        out: &mut Vec<Vec<u8>>,
    ) {
        if w.len() == n {
            if max == k {
                out.push(w.clone());
            }
            return;
        }
        if k - max > n - w.len() {
            return;
        }
        for a in 1..=(max + 1).min(k) {
            if counts[a] == cap {
                continue;
            }
            counts[a] += 1;
            w.push(a as u8);
            go(n, k, cap, w, counts, max.max(a), out);
            w.pop();
            counts[a] -= 1;
        }
    }
    let mut out = Vec::new();
    go(
        n,
        k,
        cap,
        &mut Vec::with_capacity(n),
        &mut vec![0; k + 1],
        0,
        &mut out,
    );
    out
}

/// Compositions of `n` into `k` positive parts, as layered words.
fn layered_words(n: usize, k: usize, max_layer: usize) -> Vec<Vec<u8>> {
    fn go(n: usize, k: usize, max_layer: usize, w: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        let letter = w.last().copied().unwrap_or(0) as usize;
        if letter == k {
            if w.len() == n {
                out.push(w.clone());
            }
            return;
        }
        let layers_left = k - letter;
        for len in 1..=max_layer {
            if w.len() + len + (layers_left - 1) > n {
                break;
            }
            w.extend(rep(letter as u8 + 1, len));
            go(n, k, max_layer, w, out);
            w.truncate(w.len() - len);
        }
    }
    let mut out = Vec::new();
    go(n, k, max_layer, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Inserts one extra `1` anywhere into `base`, keeping the results that are RGFs.
fn insert_one(base: &[u8]) -> Vec<Vec<u8>> {
    (0..=base.len())
        .map(|i| {
            let mut w = base.to_vec();
            w.insert(i, 1);
            w
        })
        .collect()
}

/// Members of the avoidance class built directly from its known description.
///
/// Supported sets: the five partitions of `[3]` and the eighteen tabulated
/// sets of two, three and four of them (those require `n >= 3`).
pub fn characterized_class(n: usize, k: usize, ps: &PatternSet) -> Result<Vec<RgfWord>> {
    if n == 0 || k == 0 || k > n {
        return Err(domain(format!("need 1 <= k <= n (got n={n}, k={k})")));
    }
    let key = ps.to_string();
    let is_multi = TABLE1.contains(&key.as_str()) || TABLE2.contains(&key.as_str());
    if is_multi && n < 3 {
        return Err(domain("tabulated multi-pattern classes assume n >= 3"));
    }
    let k8 = k as u8;
    let n8 = n as u8;
    let nk = n - k;
    let words: Vec<Vec<u8>> = match key.as_str() {
        "1/2/3" => match k {
            1 => vec![word(rep(1, n))],
            2 => capped_words(n, 2, n),
            _ => vec![],
        },
        "1/23" => {
            if n == k {
                vec![word(run(1, k8))]
            } else {
                let base: Vec<u8> = rep(1, nk).chain(run(2, k8)).collect();
                insert_one(&base)
            }
        }
        "13/2" => layered_words(n, k, n),
        "12/3" => {
            if n == k {
                vec![word(run(1, k8))]
            } else {
                (1..=k8)
                    .map(|i| word(run(1, k8).chain(rep(i, nk))))
                    .collect()
            }
        }
        "123" => capped_words(n, k, 2),
        "1/2/3;1/23" => match k {
            1 => vec![word(rep(1, n))],
            2 => vec![
                word(rep(1, n - 1).chain([2])),
                word(rep(1, n - 2).chain([2, 1])),
            ],
            _ => vec![],
        },
        "1/2/3;13/2" => match k {
            1 => vec![word(rep(1, n))],
            2 => (1..n)
                .map(|m| word(rep(1, m).chain(rep(2, n - m))))
                .collect(),
            _ => vec![],
        },
        "1/2/3;12/3" => match k {
            1 => vec![word(rep(1, n))],
            2 => vec![
                word([1].into_iter().chain(rep(2, n - 1))),
                word([1, 2].into_iter().chain(rep(1, n - 2))),
            ],
            _ => vec![],
        },
        "1/23;13/2" => vec![word(rep(1, nk + 1).chain(run(2, k8)))],
        "1/23;12/3" => {
            let mut v = Vec::new();
            if k == 1 {
                v.push(word(rep(1, n)));
            }
            if k == n - 1 {
                v.push(word(run(1, n8 - 1).chain([1])));
            }
            if k == n {
                v.push(word(run(1, n8)));
            }
            v
        }
        "1/23;123" => {
            if k == n - 1 {
                insert_one(&word(run(1, n8 - 1)))
            } else if k == n {
                vec![word(run(1, n8))]
            } else {
                vec![]
            }
        }
        "12/3;13/2" => vec![word(run(1, k8).chain(rep(k8, nk)))],
        "123;13/2" => layered_words(n, k, 2),
        "12/3;123" => {
            if k == n {
                vec![word(run(1, k8))]
            } else if k == n - 1 {
                (1..=k8).map(|i| word(run(1, k8).chain([i]))).collect()
            } else {
                vec![]
            }
        }
        "1/2/3;1/23;13/2" => match k {
            1 => vec![word(rep(1, n))],
            2 => vec![word(rep(1, n - 1).chain([2]))],
            _ => vec![],
        },
        "1/2/3;1/23;12/3" => match (k, n) {
            (1, _) => vec![word(rep(1, n))],
            (2, 3) => vec![vec![1, 2, 1]],
            _ => vec![],
        },
        "1/2/3;12/3;13/2" => match k {
            1 => vec![word(rep(1, n))],
            2 => vec![word([1].into_iter().chain(rep(2, n - 1)))],
            _ => vec![],
        },
        "1/23;12/3;13/2" => {
            if k == 1 {
                vec![word(rep(1, n))]
            } else if k == n {
                vec![word(run(1, k8))]
            } else {
                vec![]
            }
        }
        "1/23;123;13/2" => {
            if k == n {
                vec![word(run(1, k8))]
            } else if k == n - 1 {
                vec![word([1].into_iter().chain(run(1, n8 - 1)))]
            } else {
                vec![]
            }
        }
        "1/23;12/3;123" => {
            if k == n {
                vec![word(run(1, k8))]
            } else if k == n - 1 {
                vec![word(run(1, n8 - 1).chain([1]))]
            } else {
                vec![]
            }
        }
        "12/3;123;13/2" => {
            if k == n {
                vec![word(run(1, k8))]
            } else if k == n - 1 {
                vec![word(run(1, n8 - 1).chain([n8 - 1]))]
            } else {
                vec![]
            }
        }
        "1/2/3;1/23;12/3;13/2" => {
            if k == 1 {
                vec![word(rep(1, n))]
            } else {
                vec![]
            }
        }
        "1/23;12/3;123;13/2" => {
            if k == n {
                vec![word(run(1, k8))]
            } else {
                vec![]
            }
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "no characterization for {{{key}}}"
            )))
        }
    };
    let set: BTreeSet<Vec<u8>> = words
        .into_iter()
        .filter(|w| w.len() == n && w.iter().copied().max() == Some(k8))
        .collect();
    set.into_iter()
        .map(|w| crate::partition::validate_rgf(&w))
        .collect()
}

/// Closed-form size of the avoidance class for a single partition of `[3]`.
pub fn cardinality_closed_form(n: usize, k: usize, ps: &PatternSet) -> Result<u64> {
    if n == 0 || k == 0 || k > n {
        return Err(domain(format!("need 1 <= k <= n (got n={n}, k={k})")));
    }
    let (n64, k64) = (n as u64, k as u64);
    match ps.to_string().as_str() {
        "1/2/3" => match k {
            1 | 2 => stirling2(n, k),
            _ => Ok(0),
        },
        "13/2" => Ok(binom_u64(n64 - 1, k64 - 1)),
        "1/23" | "12/3" => Ok(if k < n { k64 } else { 1 }),
        "123" => {
            if n == k {
                return Ok(1);
            }
            // C(n, 2j) * 1*3*5*...*(2j-1) with j = n - k
            let j = n64 - k64;
            let odd: u64 = (1..=j).map(|i| 2 * i - 1).product();
            Ok(binom_u64(n64, 2 * j) * odd)
        }
        other => Err(Error::Unsupported(format!(
            "no closed-form cardinality for {{{other}}}"
        ))),
    }
}
