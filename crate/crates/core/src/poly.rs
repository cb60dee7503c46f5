//! Sparse polynomials in `q, r, s, t` with `i64` coefficients.
//!
//! Terms are kept in graded lexicographic order (total degree first, then
//! exponents compared in the order q > r > s > t), which fixes every printed
//! and serialized form. Zero coefficients are never stored.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    R,
    S,
    T,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::Q, Var::R, Var::S, Var::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["q", "r", "s", "t"][self.index()]
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent tuple `(e_q, e_r, e_s, e_t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, i64>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        MultiPoly::monomial(c, [0; 4])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 4];
        e[v.index()] = 1;
        MultiPoly::monomial(1, e)
    }

    pub fn monomial(c: i64, exps: [u32; 4]) -> Self {
        let mut p = MultiPoly::zero();
        if c != 0 {
            p.terms.insert(Monomial(exps), c);
        }
        p
    }

    /// `c * v^e`.
    pub fn power_of(c: i64, v: Var, e: u32) -> Self {
        let mut exps = [0; 4];
        exps[v.index()] = e;
        MultiPoly::monomial(c, exps)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, i64)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, exps: [u32; 4]) -> i64 {
        self.terms.get(&Monomial(exps)).copied().unwrap_or(0)
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e
                    .get()
                    .checked_add(c)
                    .ok_or(Error::Overflow("polynomial addition"))?;
                if sum == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(*m, c)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(
                *m,
                c.checked_neg()
                    .ok_or(Error::Overflow("polynomial negation"))?,
            )?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let mut e = [0u32; 4];
                for (i, slot) in e.iter_mut().enumerate() {
                    *slot = a.0[i]
                        .checked_add(b.0[i])
                        .ok_or(Error::Overflow("exponent"))?;
                }
                let c = ca
                    .checked_mul(cb)
                    .ok_or(Error::Overflow("polynomial product"))?;
                out.add_term(Monomial(e), c)?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> Result<MultiPoly> {
        self.checked_mul(&MultiPoly::constant(c))
    }

    pub fn pow(&self, e: u32) -> Result<MultiPoly> {
        (0..e).try_fold(MultiPoly::one(), |acc, _| acc.checked_mul(self))
    }

    /// Sets every variable outside `keep` to 1.
    pub fn specialize(&self, keep: &[Var]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in self.terms() {
            let mut e = [0; 4];
            for v in keep {
                e[v.index()] = m.0[v.index()];
            }
            out.add_term(Monomial(e), c)
                .expect("coefficient overflow while specializing");
        }
        out
    }

    /// Moves the exponent of each variable `v` onto `perm[v]`.
    pub fn swap_vars(&self, perm: [Var; 4]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in self.terms() {
            let mut e = [0; 4];
            for v in Var::ALL {
                e[perm[v.index()].index()] = m.0[v.index()];
            }
            out.add_term(Monomial(e), c)
                .expect("swap_vars with a non-permutation");
        }
        out
    }

    /// Exchanges two variables.
    pub fn swap(&self, a: Var, b: Var) -> MultiPoly {
        let mut perm = Var::ALL;
        perm.swap(a.index(), b.index());
        self.swap_vars(perm)
    }

    /// Keeps only `from` (others set to 1) and renames it to `to`.
    pub fn univariate_as(&self, from: Var, to: Var) -> MultiPoly {
        let only = self.specialize(&[from]);
        if from == to {
            only
        } else {
            only.swap(from, to)
        }
    }

    pub fn degree_in(&self, v: Var) -> Result<u32> {
        self.terms()
            .map(|(m, _)| m.exp(v))
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Sum of the terms of top `v`-degree, with `v` removed.
    pub fn leading_coeff_in(&self, v: Var) -> Result<MultiPoly> {
        let d = self.degree_in(v)?;
        Ok(self.coefficient_in(v, d))
    }

    /// Terms not involving `v`.
    pub fn constant_term_in(&self, v: Var) -> MultiPoly {
        self.coefficient_in(v, 0)
    }

    /// Coefficient of `v^e`, as a polynomial in the other variables.
    pub fn coefficient_in(&self, v: Var, e: u32) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in self.terms() {
            if m.exp(v) == e {
                let mut rest = m.0;
                rest[v.index()] = 0;
                out.add_term(Monomial(rest), c)
                    .expect("distinct monomials stay distinct");
            }
        }
        out
    }

    /// Value at `q = r = s = t = 1`.
    pub fn eval_at_ones(&self) -> Result<i64> {
        self.terms()
            .try_fold(0i64, |acc, (_, c)| acc.checked_add(c))
            .ok_or(Error::Overflow("evaluation at one"))
    }

    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms().enumerate() {
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let abs = c.unsigned_abs();
            let mut factors: Vec<String> = Vec::new();
            if abs != 1 || m.degree() == 0 {
                factors.push(abs.to_string());
            }
            for v in Var::ALL {
                match m.exp(v) {
                    0 => {}
                    1 => factors.push(v.name().to_string()),
                    e => factors.push(format!("{v}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms().enumerate() {
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let abs = c.unsigned_abs();
            if abs != 1 || m.degree() == 0 {
                out.push_str(&abs.to_string());
            }
            for v in Var::ALL {
                match m.exp(v) {
                    0 => {}
                    1 => out.push_str(v.name()),
                    e => out.push_str(&format!("{v}^{{{e}}}")),
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomials always serialize")
    }

    pub fn from_json(text: &str) -> Result<MultiPoly> {
        serde_json::from_str(text).map_err(|e| crate::error::parse_err(text, e.to_string()))
    }

    pub fn render(&self, format: PolyFormat) -> String {
        match format {
            PolyFormat::Text => self.to_text(),
            PolyFormat::Latex => self.to_latex(),
            PolyFormat::Json => self.to_json(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyFormat {
    Text,
    Latex,
    Json,
}

impl std::str::FromStr for PolyFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(PolyFormat::Text),
            "latex" => Ok(PolyFormat::Latex),
            "json" => Ok(PolyFormat::Json),
            _ => Err(crate::error::parse_err(s, "expected text, latex or json")),
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    q: u32,
    r: u32,
    s: u32,
    t: u32,
    c: i64,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<TermJson>,
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            terms: self
                .terms()
                .map(|(m, c)| TermJson {
                    q: m.0[0],
                    r: m.0[1],
                    s: m.0[2],
                    t: m.0[3],
                    c,
                })
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(de)?;
        let mut p = MultiPoly::zero();
        for t in raw.terms {
            p.add_term(Monomial([t.q, t.r, t.s, t.t]), t.c)
                .map_err(serde::de::Error::custom)?;
        }
        Ok(p)
    }
}

// Operator forms panic on overflow; the checked_* methods report it instead.

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::zero() - self
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        iter.fold(MultiPoly::zero(), |acc, p| acc + p)
    }
}
