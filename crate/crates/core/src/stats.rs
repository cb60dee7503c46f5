//! The four left/right bigger/smaller statistics on RGFs and their weak
//! ("equal") variants.
//!
//! For a letter `a_j`, `lb` counts the distinct values bigger than `a_j` at
//! positions before `j`; `ls`, `rb` and `rs` are the smaller/left,
//! bigger/right and smaller/right analogues. The equal variants compare
//! values with `>=` / `<=` but still only look at positions strictly before
//! or strictly after `j`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{domain, parse_err, Error, Result};
use crate::partition::RgfWord;
use crate::poly::Var;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatName {
    Lb,
    Ls,
    Rb,
    Rs,
    Lbe,
    Lse,
    Rbe,
    Rse,
}

impl StatName {
    pub const ALL: [StatName; 8] = [
        StatName::Lb,
        StatName::Ls,
        StatName::Rb,
        StatName::Rs,
        StatName::Lbe,
        StatName::Lse,
        StatName::Rbe,
        StatName::Rse,
    ];

    pub fn is_equal_variant(self) -> bool {
        matches!(
            self,
            StatName::Lbe | StatName::Lse | StatName::Rbe | StatName::Rse
        )
    }

    /// The weak-inequality counterpart (identity on the equal variants).
    pub fn to_equal_variant(self) -> StatName {
        match self {
            StatName::Lb => StatName::Lbe,
            StatName::Ls => StatName::Lse,
            StatName::Rb => StatName::Rbe,
            StatName::Rs => StatName::Rse,
            other => other,
        }
    }

    /// Generating-function variable carrying this statistic.
    pub fn var(self) -> Var {
        match self {
            StatName::Lb | StatName::Lbe => Var::Q,
            StatName::Ls | StatName::Lse => Var::R,
            StatName::Rb | StatName::Rbe => Var::S,
            StatName::Rs | StatName::Rse => Var::T,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            StatName::Lb => "lb",
            StatName::Ls => "ls",
            StatName::Rb => "rb",
            StatName::Rs => "rs",
            StatName::Lbe => "lbe",
            StatName::Lse => "lse",
            StatName::Rbe => "rbe",
            StatName::Rse => "rse",
        }
    }

    fn is_left(self) -> bool {
        matches!(
            self,
            StatName::Lb | StatName::Ls | StatName::Lbe | StatName::Lse
        )
    }

    fn is_bigger(self) -> bool {
        matches!(
            self,
            StatName::Lb | StatName::Rb | StatName::Lbe | StatName::Rbe
        )
    }
}

impl fmt::Display for StatName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StatName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StatName::ALL
            .into_iter()
            .find(|st| st.as_str() == s)
            .ok_or_else(|| parse_err(s, "expected one of lb, ls, rb, rs, lbe, lse, rbe, rse"))
    }
}

/// `(lb, ls, rb, rs)`, or `(lbe, lse, rbe, rse)` for the equal variants.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct StatVector {
    pub lb: u32,
    pub ls: u32,
    pub rb: u32,
    pub rs: u32,
}

impl StatVector {
    pub fn as_array(&self) -> [u32; 4] {
        [self.lb, self.ls, self.rb, self.rs]
    }
}

impl std::ops::AddAssign for StatVector {
    fn add_assign(&mut self, o: StatVector) {
        self.lb += o.lb;
        self.ls += o.ls;
        self.rb += o.rb;
        self.rs += o.rs;
    }
}

/// Statistic of the letter at 1-based position `j`, computed from the definition.
pub fn stat_letter(w: &RgfWord, j: usize, s: StatName) -> Result<u32> {
    let letters = w.letters();
    if j == 0 || j > letters.len() {
        return Err(domain(format!(
            "position {j} is outside 1..={}",
            letters.len()
        )));
    }
    let a = letters[j - 1];
    let side = if s.is_left() {
        &letters[..j - 1]
    } else {
        &letters[j..]
    };
    let mut values: Vec<u8> = side
        .iter()
        .copied()
        .filter(|&b| match (s.is_bigger(), s.is_equal_variant()) {
            (true, false) => b > a,
            (true, true) => b >= a,
            (false, false) => b < a,
            (false, true) => b <= a,
        })
        .collect();
    values.sort_unstable();
    values.dedup();
    Ok(values.len() as u32)
}

pub fn stat_word(w: &RgfWord, s: StatName) -> u32 {
    let v = stat_vector(w, s.is_equal_variant());
    match s.var() {
        Var::Q => v.lb,
        Var::R => v.ls,
        Var::S => v.rb,
        Var::T => v.rs,
    }
}

pub fn stat_vector(w: &RgfWord, equal_variant: bool) -> StatVector {
    stat_vector_of(w.letters(), equal_variant)
}

/// One left-to-right and one right-to-left pass over a bitmask of seen values.
pub(crate) fn stat_vector_of(letters: &[u8], equal: bool) -> StatVector {
    let mut out = StatVector::default();
    let mut seen = 0u64;
    for &a in letters {
        let (bigger, smaller) = split_mask(seen, a, equal);
        out.lb += bigger;
        out.ls += smaller;
        seen |= bit(a);
    }
    seen = 0;
    for &a in letters.iter().rev() {
        let (bigger, smaller) = split_mask(seen, a, equal);
        out.rb += bigger;
        out.rs += smaller;
        seen |= bit(a);
    }
    out
}

/// Per-letter statistics, in word order.
pub fn letter_table(w: &RgfWord, equal_variant: bool) -> Vec<StatVector> {
    let letters = w.letters();
    let mut rows = vec![StatVector::default(); letters.len()];
    let mut seen = 0u64;
    for (row, &a) in rows.iter_mut().zip(letters) {
        (row.lb, row.ls) = split_mask(seen, a, equal_variant);
        seen |= bit(a);
    }
    seen = 0;
    for (row, &a) in rows.iter_mut().zip(letters).rev() {
        (row.rb, row.rs) = split_mask(seen, a, equal_variant);
        seen |= bit(a);
    }
    rows
}

#[inline]
fn bit(a: u8) -> u64 {
    1u64 << (a - 1)
}

#[inline]
fn split_mask(seen: u64, a: u8, equal: bool) -> (u32, u32) {
    let below = bit(a) - 1;
    let mut bigger = seen & !below & !bit(a);
    let mut smaller = seen & below;
    if equal && seen & bit(a) != 0 {
        bigger |= bit(a);
        smaller |= bit(a);
    }
    (bigger.count_ones(), smaller.count_ones())
}
