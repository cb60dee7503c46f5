//! Generating polynomials computed by summing over avoidance classes.
//!
//! This is the reference every closed form is checked against. Classes are
//! streamed, never materialized; the stream is split by word prefix and the
//! pieces are summed in parallel on the current rayon pool.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::Result;
use crate::partition::Rgfs;
use crate::pattern::{avoidance_class_from, PatternSet};
use crate::poly::{Monomial, MultiPoly};
use crate::stats::{stat_vector_of, StatName};

const SPLIT_DEPTH: usize = 5;

/// `F_{n,k}` (or `FE_{n,k}`) for every `k` at once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleTable {
    n: usize,
    by_k: Vec<MultiPoly>,
}

impl OracleTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Polynomial over the words with maximal letter `k` (zero outside `1..=n`).
    pub fn at(&self, k: usize) -> MultiPoly {
        self.by_k.get(k).cloned().unwrap_or_default()
    }

    /// Sum over all `k`.
    pub fn total(&self) -> MultiPoly {
        self.by_k.iter().cloned().sum()
    }
}

type Partial = Vec<HashMap<[u32; 4], i64>>;

fn accumulate(words: Rgfs<'_>, n: usize, equal: bool) -> Partial {
    let mut acc: Partial = vec![HashMap::new(); n + 1];
    for w in words {
        let v = stat_vector_of(w.letters(), equal);
        *acc[w.max_letter()].entry(v.as_array()).or_insert(0) += 1;
    }
    acc
}

fn merge(mut a: Partial, b: Partial) -> Partial {
    for (slot, part) in a.iter_mut().zip(b) {
        for (m, c) in part {
            *slot.entry(m).or_insert(0) += c;
        }
    }
    a
}

fn sum_class(n: usize, k: Option<usize>, ps: &PatternSet, equal: bool) -> Result<Partial> {
    let depth = n.min(SPLIT_DEPTH);
    // prefixes that already contain a pattern are dropped here too
    let prefixes: Vec<Vec<u8>> = avoidance_class_from(depth, None, ps, &[])?
        .map(|w| w.letters().to_vec())
        .collect();
    let parts: Vec<Partial> = prefixes
        .par_iter()
        .map(|prefix| avoidance_class_from(n, k, ps, prefix).map(|ws| accumulate(ws, n, equal)))
        .collect::<Result<_>>()?;
    Ok(parts.into_iter().fold(vec![HashMap::new(); n + 1], merge))
}

fn to_poly(part: HashMap<[u32; 4], i64>) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for (m, c) in part {
        p.add_term(Monomial(m), c).expect("class sizes fit in i64");
    }
    p
}

/// One enumeration pass over `Pi_n(ps)`, split by maximal letter.
pub fn oracle_table(n: usize, ps: &PatternSet, equal_variant: bool) -> Result<OracleTable> {
    let part = sum_class(n, None, ps, equal_variant)?;
    Ok(OracleTable {
        n,
        by_k: part.into_iter().map(to_poly).collect(),
    })
}

/// `sum over w in R_{n,k}(ps)` of `q^lb r^ls s^rb t^rs` (or the equal variants).
/// With `k = None` the sum runs over all of `R_n(ps)`.
pub fn oracle_f(
    n: usize,
    k: Option<usize>,
    ps: &PatternSet,
    equal_variant: bool,
) -> Result<MultiPoly> {
    let part = sum_class(n, k, ps, equal_variant)?;
    Ok(part.into_iter().map(to_poly).sum())
}

/// Single-statistic generating polynomial, in the statistic's own variable.
pub fn oracle_single(
    n: usize,
    k: Option<usize>,
    ps: &PatternSet,
    stat: StatName,
) -> Result<MultiPoly> {
    Ok(oracle_f(n, k, ps, stat.is_equal_variant())?.specialize(&[stat.var()]))
}
