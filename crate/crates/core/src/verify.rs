//! Checks every registered claim against enumeration, cell by cell, and
//! compares the outcome with the shipped findings file.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use glob::Pattern;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, parse_err, Error, Result};
use crate::formulas::{lookup, registry, Claim, Entry, Level, OracleQuery};
use crate::genfun::{oracle_table, OracleTable};
use crate::pattern::PatternSet;
use crate::poly::MultiPoly;

/// Smallest `n` swept.
pub const N_MIN: usize = 3;
/// Largest `n_max` accepted by [`verify_all`].
pub const N_MAX_LIMIT: usize = 12;
pub const DEFAULT_N_MAX: usize = 9;

const SHIPPED_FINDINGS: &str = include_str!("../findings.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Confirmed,
    Mismatch,
    OutOfRegime,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Confirmed => "CONFIRMED",
            Status::Mismatch => "MISMATCH",
            Status::OutOfRegime => "OUT_OF_REGIME",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub id: String,
    pub n: usize,
    pub k: Option<usize>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<MultiPoly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actual: Option<MultiPoly>,
    /// `expected - actual`, when both exist.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diff: Option<MultiPoly>,
}

impl Verdict {
    fn new(
        id: &str,
        n: usize,
        k: Option<usize>,
        expected: Option<MultiPoly>,
        actual: Option<MultiPoly>,
        attach: bool,
    ) -> Result<Verdict> {
        let (status, diff) = match (&expected, &actual) {
            (Some(e), Some(a)) => {
                let d = e.checked_sub(a)?;
                let s = if d.is_zero() {
                    Status::Confirmed
                } else {
                    Status::Mismatch
                };
                (s, Some(d))
            }
            _ => (Status::OutOfRegime, None),
        };
        let keep = attach || status != Status::Confirmed;
        Ok(Verdict {
            id: id.to_string(),
            n,
            k,
            status,
            expected: expected.filter(|_| keep),
            actual: actual.filter(|_| keep),
            diff,
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub confirmed: usize,
    pub mismatch: usize,
    pub out_of_regime: usize,
}

/// Outcome for one id over the whole sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdOutcome {
    pub status: Status,
    pub first_mismatch_n: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub version: String,
    pub n_min: usize,
    pub n_max: usize,
    pub verdicts: Vec<Verdict>,
    pub summary: Summary,
    pub ids: BTreeMap<String, IdOutcome>,
}

impl VerificationReport {
    fn assemble(n_max: usize, mut verdicts: Vec<Verdict>) -> Self {
        verdicts.sort_by(|a, b| (&a.id, a.n, a.k).cmp(&(&b.id, b.n, b.k)));
        let mut summary = Summary::default();
        let mut ids: BTreeMap<String, IdOutcome> = BTreeMap::new();
        for v in &verdicts {
            match v.status {
                Status::Confirmed => summary.confirmed += 1,
                Status::Mismatch => summary.mismatch += 1,
                Status::OutOfRegime => summary.out_of_regime += 1,
            }
            let slot = ids.entry(v.id.clone()).or_insert(IdOutcome {
                status: Status::OutOfRegime,
                first_mismatch_n: None,
            });
            match v.status {
                Status::Mismatch => {
                    slot.status = Status::Mismatch;
                    slot.first_mismatch_n = Some(slot.first_mismatch_n.map_or(v.n, |m| m.min(v.n)));
                }
                Status::Confirmed if slot.status == Status::OutOfRegime => {
                    slot.status = Status::Confirmed;
                }
                _ => {}
            }
        }
        VerificationReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            n_min: N_MIN,
            n_max,
            verdicts,
            summary,
            ids,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

type TableKey = (String, usize, bool);

#[derive(Default)]
struct Tables(HashMap<TableKey, OracleTable>);

impl Tables {
    fn build(keys: BTreeSet<TableKey>) -> Result<Tables> {
        let built: Vec<(TableKey, OracleTable)> = keys
            .into_par_iter()
            .map(|key| {
                let ps: PatternSet = key.0.parse()?;
                let table = oracle_table(key.1, &ps, key.2)?;
                Ok((key, table))
            })
            .collect::<Result<_>>()?;
        Ok(Tables(built.into_iter().collect()))
    }

    fn read(&self, q: &OracleQuery, n: usize, k: Option<usize>) -> Result<MultiPoly> {
        let table = &self.0[&(q.patterns.clone(), n, q.equal)];
        let f = match k {
            Some(k) => table.at(k),
            None => table.total(),
        };
        q.view.apply(&f, n, k)
    }
}

fn keys_for(entry: &Entry, n: usize, out: &mut BTreeSet<TableKey>) {
    for q in entry.queries() {
        out.insert((q.patterns.clone(), n, q.equal));
    }
}

// A view with nothing to read (degree of an empty class, say) counts as
// outside the claim's range, not as a disagreement.
fn readable(r: Result<MultiPoly>) -> Result<Option<MultiPoly>> {
    match r {
        Ok(p) => Ok(Some(p)),
        Err(Error::ZeroPolynomial) => Ok(None),
        Err(e) => Err(e),
    }
}

fn judge(entry: &Entry, n: usize, k: Option<usize>, tables: &Tables) -> Result<Verdict> {
    let (expected, actual) = match &entry.claim {
        Claim::Closed { target, .. } => {
            let actual = readable(tables.read(target, n, k))?;
            let expected = match entry.eval(n, k) {
                Ok(p) => Some(p),
                Err(Error::OutOfRegime { .. }) => None,
                Err(e) => return Err(e),
            };
            (expected, actual)
        }
        Claim::Identity { left, right } => (
            readable(tables.read(left, n, k))?,
            readable(tables.read(right, n, k))?,
        ),
    };
    Verdict::new(&entry.id, n, k, expected, actual, entry.attach)
}

fn cells(entry: &Entry, n: usize) -> Vec<Option<usize>> {
    match entry.level {
        Level::PerK => (1..=n).map(Some).collect(),
        Level::AllK => vec![None],
    }
}

/// One cell. `k` must be given for per-`k` claims and omitted for the others.
pub fn verify_one(id: &str, n: usize, k: Option<usize>) -> Result<Verdict> {
    let entry = lookup(id)?;
    match (entry.level, k) {
        (Level::PerK, Some(k)) if (1..=n).contains(&k) => {}
        (Level::AllK, None) => {}
        (Level::PerK, _) => return Err(domain(format!("{id} needs k in 1..={n}"))),
        (Level::AllK, Some(_)) => return Err(domain(format!("{id} is a sum over all k; drop k"))),
    }
    let mut keys = BTreeSet::new();
    keys_for(entry, n, &mut keys);
    judge(entry, n, k, &Tables::build(keys)?)
}

/// Ids matching `filter` (a glob; `None` matches everything).
pub fn matching_ids(filter: Option<&str>) -> Result<Vec<&'static Entry>> {
    let pattern = filter
        .map(|f| Pattern::new(f).map_err(|e| parse_err(f, e.msg)))
        .transpose()?;
    Ok(registry()
        .iter()
        .filter(|e| pattern.as_ref().is_none_or(|p| p.matches(&e.id)))
        .collect())
}

/// Sweeps the matching claims over `N_MIN <= n <= n_max` on the current rayon pool.
pub fn verify_all(n_max: usize, filter: Option<&str>) -> Result<VerificationReport> {
    if !(N_MIN..=N_MAX_LIMIT).contains(&n_max) {
        return Err(domain(format!(
            "n_max must lie in {N_MIN}..={N_MAX_LIMIT}, got {n_max}"
        )));
    }
    let entries = matching_ids(filter)?;
    let mut keys = BTreeSet::new();
    let mut work = Vec::new();
    for entry in &entries {
        for n in N_MIN..=n_max {
            keys_for(entry, n, &mut keys);
            work.extend(cells(entry, n).into_iter().map(|k| (*entry, n, k)));
        }
    }
    let tables = Tables::build(keys)?;
    let verdicts = work
        .par_iter()
        .map(|&(entry, n, k)| judge(entry, n, k, &tables))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::assemble(n_max, verdicts))
}

/// Expected outcome per id at a given `n_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Findings {
    pub n_max: usize,
    pub ids: BTreeMap<String, IdOutcome>,
}

impl Findings {
    pub fn from_report(report: &VerificationReport) -> Findings {
        Findings {
            n_max: report.n_max,
            ids: report.ids.clone(),
        }
    }

    pub fn shipped() -> Findings {
        Findings::from_json(SHIPPED_FINDINGS).expect("shipped findings parse")
    }

    pub fn from_json(text: &str) -> Result<Findings> {
        serde_json::from_str(text).map_err(|e| parse_err("findings", e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("findings serialize");
        s.push('\n');
        s
    }

    /// Ids of the report whose outcome differs from what these findings
    /// predict for the report's range: the first `n` with a mismatch has to
    /// agree (no mismatch counts as agreeing with a first mismatch beyond
    /// the report's `n_max`).
    pub fn deviations(&self, report: &VerificationReport) -> Vec<Deviation> {
        let mut out = Vec::new();
        for (id, got) in &report.ids {
            let Some(want) = self.ids.get(id) else {
                out.push(Deviation {
                    id: id.clone(),
                    expected: None,
                    actual: got.first_mismatch_n,
                });
                continue;
            };
            let want_n = want.first_mismatch_n.filter(|&m| m <= report.n_max);
            if want_n != got.first_mismatch_n {
                out.push(Deviation {
                    id: id.clone(),
                    expected: Some(want_n),
                    actual: got.first_mismatch_n,
                });
            }
        }
        out
    }
}

/// A report outcome that the findings did not predict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deviation {
    pub id: String,
    /// First mismatching `n` predicted, or `None` if the id is unknown.
    pub expected: Option<Option<usize>>,
    pub actual: Option<usize>,
}

impl fmt::Display for Deviation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |m: Option<usize>| match m {
            Some(n) => format!("first mismatch at n={n}"),
            None => "no mismatch".to_string(),
        };
        match self.expected {
            None => write!(f, "{}: not in findings ({})", self.id, show(self.actual)),
            Some(want) => write!(
                f,
                "{}: expected {}, got {}",
                self.id,
                show(want),
                show(self.actual)
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let v = verify_one("cor1.3.ii", 6, Some(3)).unwrap();
        assert_eq!(v.status, Status::Confirmed);
        assert_eq!(v.diff, Some(MultiPoly::zero()));

        let v = verify_one("thm3.1.i", 3, Some(3)).unwrap();
        assert_eq!(v.status, Status::Confirmed);

        let v = verify_one("thm4.1.as-printed", 3, Some(2)).unwrap();
        assert_eq!(v.status, Status::Mismatch);
        assert!(!v.diff.as_ref().unwrap().is_zero());
        let rs = MultiPoly::monomial(1, [0, 1, 2, 0]) + MultiPoly::monomial(1, [0, 2, 1, 0]);
        assert_eq!(v.actual, Some(rs));
    }

    #[test]
    fn out_of_regime_keeps_the_oracle_value() {
        let v = verify_one("thm3.1.i", 5, Some(3)).unwrap();
        assert_eq!(v.status, Status::OutOfRegime);
        assert!(v.expected.is_none());
        assert!(v.actual.is_some());
        assert!(v.diff.is_none());
    }

    #[test]
    fn level_and_id_checks() {
        assert!(verify_one("thm9.1", 4, Some(2)).is_err());
        assert!(verify_one("thm3.1.i", 4, None).is_err());
        assert!(matches!(
            verify_one("nope", 4, Some(1)),
            Err(Error::Unsupported(_))
        ));
        assert!(verify_all(2, None).is_err());
        assert!(verify_all(13, None).is_err());
        assert!(verify_all(5, Some("[")).is_err());
    }

    #[test]
    fn filtered_sweeps() {
        let r = verify_all(3, Some("cor1.3.i")).unwrap();
        assert_eq!(r.ids.len(), 1);
        assert_eq!(r.ids["cor1.3.i"].status, Status::Confirmed);

        let r = verify_all(6, Some("thm7.1.*")).unwrap();
        assert_eq!(r.ids.len(), 9);
        assert_eq!(r.verdicts.len(), 9 * (3 + 4 + 5 + 6));

        let r = verify_all(5, Some("nothing-matches")).unwrap();
        assert!(r.verdicts.is_empty());
        assert_eq!(r.summary, Summary::default());
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert!(v["verdicts"].as_array().unwrap().is_empty());
    }

    #[test]
    fn swapping_sides_negates_the_diff() {
        let e = MultiPoly::monomial(2, [1, 0, 0, 0]);
        let a = MultiPoly::monomial(1, [0, 1, 0, 0]);
        let one = Verdict::new("x", 3, None, Some(e.clone()), Some(a.clone()), false).unwrap();
        let two = Verdict::new("x", 3, None, Some(a), Some(e), false).unwrap();
        assert_eq!(one.status, two.status);
        assert_eq!(one.diff.unwrap(), -two.diff.unwrap());
    }

    #[test]
    fn deviations_respect_the_range() {
        let report = verify_all(4, Some("thm4.1.*")).unwrap();
        let mut findings = Findings::from_report(&report);
        findings.n_max = 9;
        assert!(findings.deviations(&report).is_empty());
        // a mismatch predicted beyond the report's range is not a deviation
        findings
            .ids
            .get_mut("thm4.1.kminus1")
            .unwrap()
            .first_mismatch_n = Some(7);
        assert!(findings.deviations(&report).is_empty());
        findings
            .ids
            .get_mut("thm4.1.kminus1")
            .unwrap()
            .first_mismatch_n = Some(4);
        assert_eq!(findings.deviations(&report).len(), 1);
        findings.ids.clear();
        assert_eq!(findings.deviations(&report).len(), 2);
    }
}
