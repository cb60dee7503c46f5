//! One line per acceptance criterion. Known failures are listed in
//! `EXPECTED_FAILURES`; anything else failing makes the test fail.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::process::Command;
use std::time::{Duration, Instant};

use rgf_core::genfun::{oracle_f, oracle_single};
use rgf_core::partition::{enumerate_rgfs, partition_from_rgf};
use rgf_core::pattern::{avoidance_class, characterized_class, SINGLETONS, TABLE1, TABLE2};
use rgf_core::stats::stat_vector;
use rgf_core::verify::{verify_all, Findings, Status, VerificationReport};
use rgf_core::{MultiPoly, PatternSet, RgfWord, SetPartition, StatName};

/// LSE_n(112) and LSE_n(122) already differ at n = 3 (2r^2 + 2r^3 against
/// 3r^2 + r^3), so the three-way LSE equality cannot hold.
const EXPECTED_FAILURES: [u32; 1] = [8];

struct Outcome {
    pass: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            pass: true,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, note: impl FnOnce() -> String) {
        if !ok {
            self.pass = false;
            if self.notes.len() < 5 {
                self.notes.push(note());
            }
        }
    }
}

fn set(text: &str) -> PatternSet {
    text.parse().expect("valid pattern set")
}

fn sorted_class(n: usize, k: usize, ps: &PatternSet) -> Vec<RgfWord> {
    let mut v: Vec<RgfWord> = avoidance_class(n, Some(k), ps).expect("class").collect();
    v.sort();
    v
}

fn sorted_characterized(n: usize, k: usize, ps: &PatternSet) -> Vec<RgfWord> {
    let mut v =
        characterized_class(n, k, ps).unwrap_or_else(|e| panic!("{ps} at n={n} k={k}: {e}"));
    v.sort();
    v
}

fn binom(a: i64, b: i64) -> i64 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    (0..b).fold(1, |acc, i| acc * (a - i) / (i + 1))
}

fn odd_product(j: i64) -> i64 {
    (1..=j).map(|i| 2 * i - 1).product()
}

fn stirling_table(n_max: usize) -> Vec<Vec<u64>> {
    let mut s = vec![vec![0u64; n_max + 1]; n_max + 1];
    s[0][0] = 1;
    for n in 1..=n_max {
        for k in 1..=n {
            s[n][k] = k as u64 * s[n - 1][k] + s[n - 1][k - 1];
        }
    }
    s
}

fn bell_triangle(n_max: usize) -> Vec<u64> {
    let mut bells = vec![1u64];
    let mut row = vec![1u64];
    for _ in 1..=n_max {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            next.push(next.last().unwrap() + x);
        }
        bells.push(next[0]);
        row = next;
    }
    bells
}

/// Weak value comparison over strictly earlier or later positions.
fn naive_equal_stats(w: &[u8]) -> [u32; 4] {
    let mut out = [0u32; 4];
    for (j, &a) in w.iter().enumerate() {
        let left: BTreeSet<u8> = w[..j].iter().copied().collect();
        let right: BTreeSet<u8> = w[j + 1..].iter().copied().collect();
        out[0] += left.iter().filter(|&&v| v >= a).count() as u32;
        out[1] += left.iter().filter(|&&v| v <= a).count() as u32;
        out[2] += right.iter().filter(|&&v| v >= a).count() as u32;
        out[3] += right.iter().filter(|&&v| v <= a).count() as u32;
    }
    out
}

fn ids_matching<'a>(report: &'a VerificationReport, prefixes: &[&str]) -> Vec<&'a str> {
    report
        .ids
        .keys()
        .filter(|id| prefixes.iter().any(|p| id.starts_with(p)))
        .map(String::as_str)
        .collect()
}

/// Every id is swept at every n, and its status agrees with the shipped findings.
fn recorded(out: &mut Outcome, report: &VerificationReport, findings: &Findings, ids: &[&str]) {
    out.check(!ids.is_empty(), || "no ids matched".into());
    let mut seen: BTreeMap<&str, BTreeSet<usize>> = BTreeMap::new();
    for v in &report.verdicts {
        seen.entry(v.id.as_str()).or_default().insert(v.n);
    }
    for id in ids {
        let ns = seen.get(id).cloned().unwrap_or_default();
        out.check(ns == (report.n_min..=report.n_max).collect(), || {
            format!("{id}: not swept at every n")
        });
        let got = report.ids.get(*id).map(|o| (o.status, o.first_mismatch_n));
        let want = findings
            .ids
            .get(*id)
            .map(|o| (o.status, o.first_mismatch_n));
        out.check(got.is_some() && got == want, || {
            format!("{id}: {got:?} but findings say {want:?}")
        });
    }
    for v in report
        .verdicts
        .iter()
        .filter(|v| ids.contains(&v.id.as_str()))
    {
        if v.status == Status::Mismatch {
            out.check(v.expected.is_some() && v.actual.is_some(), || {
                format!("{} at n={}: mismatch without polynomials", v.id, v.n)
            });
        }
    }
}

fn all_confirmed(out: &mut Outcome, report: &VerificationReport, ids: &[&str], n_max: usize) {
    out.check(!ids.is_empty(), || "no ids matched".into());
    for id in ids {
        let cells: Vec<_> = report
            .verdicts
            .iter()
            .filter(|v| v.id == *id && v.n <= n_max)
            .collect();
        out.check(cells.iter().any(|v| v.status == Status::Confirmed), || {
            format!("{id}: nothing confirmed")
        });
        for v in cells.iter().filter(|v| v.status == Status::Mismatch) {
            out.check(false, || format!("{id}: mismatch at n={} k={:?}", v.n, v.k));
        }
    }
}

fn criterion_1() -> Outcome {
    let mut out = Outcome::new();
    let bells = bell_triangle(10);
    let stirling = stirling_table(10);
    for n in 1..=10 {
        let mut by_k = vec![0u64; n + 1];
        for w in enumerate_rgfs(n, None).expect("rgfs") {
            let p = partition_from_rgf(&w);
            out.check(p.to_rgf() == w, || format!("{w}: rgf round trip"));
            let text = p.to_string();
            let back: Option<SetPartition> = text.parse().ok();
            out.check(back.as_ref() == Some(&p), || {
                format!("{text}: text round trip")
            });
            let reparsed: Option<RgfWord> = w.to_string().parse().ok();
            out.check(reparsed.as_ref() == Some(&w), || {
                format!("{w}: word text round trip")
            });
            by_k[w.max_letter()] += 1;
        }
        out.check(by_k.iter().sum::<u64>() == bells[n], || {
            format!("Bell({n})")
        });
        for k in 1..=n {
            out.check(by_k[k] == stirling[n][k], || format!("S({n},{k})"));
        }
    }
    out
}

fn criterion_2() -> Outcome {
    let mut out = Outcome::new();
    for text in SINGLETONS {
        let ps = set(text);
        for n in 1..=9 {
            for k in 1..=n {
                out.check(
                    sorted_characterized(n, k, &ps) == sorted_class(n, k, &ps),
                    || format!("{text} at n={n} k={k}"),
                );
            }
        }
    }
    out
}

fn criterion_3(report: &VerificationReport, findings: &Findings) -> Outcome {
    let mut out = Outcome::new();
    for n in 1..=9i64 {
        for k in 1..=n {
            let count = |p: &str| {
                avoidance_class(n as usize, Some(k as usize), &set(p))
                    .expect("class")
                    .count() as i64
            };
            if k == 2 {
                out.check(count("1/2/3") == (1 << (n - 1)) - 1, || {
                    format!("1/2/3 at n={n}")
                });
            }
            out.check(count("13/2") == binom(n - 1, k - 1), || {
                format!("13/2 at n={n} k={k}")
            });
            let small = if k < n { k } else { 1 };
            out.check(count("1/23") == small, || format!("1/23 at n={n} k={k}"));
            out.check(count("12/3") == small, || format!("12/3 at n={n} k={k}"));
            let j = n - k;
            out.check(count("123") == binom(n, 2 * j) * odd_product(j), || {
                format!("123 at n={n} k={k}")
            });
        }
    }
    let ids = ids_matching(report, &["cor1.3."]);
    recorded(&mut out, report, findings, &ids);
    out
}

fn criterion_4(report: &VerificationReport, findings: &Findings) -> Outcome {
    let mut out = Outcome::new();
    let ids = ids_matching(
        report,
        &[
            "thm2.1.", "cor2.2.", "thm3.1.", "cor3.2.", "thm4.1.", "cor4.2.", "thm5.1.", "cor5.2.",
            "prop5.3", "sec5.",
        ],
    );
    recorded(&mut out, report, findings, &ids);
    let readings = ids_matching(report, &["thm4.1."]);
    let confirmed: Vec<_> = readings
        .iter()
        .filter(|id| report.ids[**id].status == Status::Confirmed)
        .collect();
    out.check(readings.len() == 2 && confirmed.len() == 1, || {
        format!("thm4.1 readings {readings:?}, confirmed {confirmed:?}")
    });
    out
}

fn criterion_5(report: &VerificationReport, findings: &Findings) -> Outcome {
    let mut out = Outcome::new();
    let ids = ids_matching(report, &["thm6.", "sec6."]);
    recorded(&mut out, report, findings, &ids);
    for m in ["m3", "m4"] {
        out.check(ids.iter().any(|id| id.contains(m)), || {
            format!("no composition claim for {m}")
        });
    }
    out
}

fn criterion_6(report: &VerificationReport) -> Outcome {
    let mut out = Outcome::new();
    let items = ids_matching(report, &["thm7.1."]);
    out.check(items.len() == 9, || format!("{} items", items.len()));
    all_confirmed(&mut out, report, &items, 8);
    for text in TABLE1.iter().chain(TABLE2.iter()) {
        let ps = set(text);
        for n in 3..=8 {
            for k in 1..=n {
                out.check(
                    sorted_characterized(n, k, &ps) == sorted_class(n, k, &ps),
                    || format!("{text} at n={n} k={k}"),
                );
            }
        }
    }
    let symmetries = ids_matching(report, &["cor7.2."]);
    all_confirmed(&mut out, report, &symmetries, 9);
    out
}

fn criterion_7(report: &VerificationReport, findings: &Findings) -> Outcome {
    let mut out = Outcome::new();
    for n in 1..=10 {
        for w in enumerate_rgfs(n, None).expect("rgfs") {
            let shift = (n - w.max_letter()) as u32;
            let plain = stat_vector(&w, false).as_array();
            let equal = stat_vector(&w, true).as_array();
            out.check(equal == naive_equal_stats(w.letters()), || {
                format!("{w}: equal variants")
            });
            out.check(equal == plain.map(|x| x + shift), || format!("{w}: shift"));
        }
    }
    let qrst = MultiPoly::monomial(1, [1, 1, 1, 1]);
    for text in SINGLETONS.iter().chain(TABLE1.iter()).chain(TABLE2.iter()) {
        let ps = set(text);
        for n in 1..=9 {
            for k in 1..=n {
                let f = oracle_f(n, Some(k), &ps, false).expect("F");
                let fe = oracle_f(n, Some(k), &ps, true).expect("FE");
                let shifted = qrst
                    .pow((n - k) as u32)
                    .and_then(|m| m.checked_mul(&f))
                    .expect("shift");
                out.check(fe == shifted, || format!("{text} at n={n} k={k}"));
            }
        }
    }
    let ids = ids_matching(
        report,
        &[
            "note8.", "thm9.", "cor9.", "thm10.", "cor10.", "prop10.", "thm11.", "thm12.", "cor12.",
        ],
    );
    recorded(&mut out, report, findings, &ids);
    let shifts = ids_matching(report, &["note8.shift"]);
    all_confirmed(&mut out, report, &shifts, 9);
    let symmetries = ids_matching(report, &["cor12.2."]);
    all_confirmed(&mut out, report, &symmetries, 9);
    out
}

fn criterion_8(report: &VerificationReport, findings: &Findings) -> Outcome {
    let mut out = Outcome::new();
    let single =
        |n: usize, p: &str, s: StatName| oracle_single(n, None, &set(p), s).expect("oracle");
    for n in 1..=9 {
        out.check(
            single(n, "w:112", StatName::Lbe) == single(n, "w:122", StatName::Lbe),
            || format!("LBE_{n}(112) != LBE_{n}(122)"),
        );
        let lse: Vec<MultiPoly> = ["w:112", "w:121", "w:122"]
            .iter()
            .map(|p| single(n, p, StatName::Lse))
            .collect();
        out.check(lse[0] == lse[1], || format!("LSE_{n}(112) != LSE_{n}(121)"));
        out.check(lse[0] == lse[2], || {
            format!("LSE_{n}(112) = {} but LSE_{n}(122) = {}", lse[0], lse[2])
        });
    }
    let ids = ids_matching(report, &["sec13."]);
    recorded(&mut out, report, findings, &ids);
    out
}

fn run_verify(dir: &std::path::Path, name: &str, jobs: &str) -> Vec<u8> {
    let path = dir.join(name);
    let status = Command::new(env!("CARGO_BIN_EXE_rgf"))
        .args(["verify", "--n-max", "9", "--jobs", jobs, "--out"])
        .arg(&path)
        .env_remove("RGF_JOBS")
        .output()
        .expect("run rgf");
    assert!(
        status.status.success(),
        "{}",
        String::from_utf8_lossy(&status.stderr)
    );
    fs::read(path).expect("report written")
}

fn criterion_9_and_10() -> (Outcome, Outcome) {
    let dir = tempfile::tempdir().expect("tempdir");
    let start = Instant::now();
    let first = run_verify(dir.path(), "a.json", "1");
    let elapsed = start.elapsed();
    let second = run_verify(dir.path(), "b.json", "1");
    let parallel = run_verify(dir.path(), "c.json", "4");
    let mut nine = Outcome::new();
    nine.check(first == second, || "two runs differ".into());
    nine.check(first == parallel, || {
        "--jobs 4 differs from --jobs 1".into()
    });
    let mut ten = Outcome::new();
    ten.check(elapsed < Duration::from_secs(300), || {
        format!("took {elapsed:?}")
    });
    (nine, ten)
}

#[test]
fn acceptance() {
    let report = verify_all(9, None).expect("sweep");
    let findings = Findings::shipped();
    let (nine, ten) = criterion_9_and_10();
    let outcomes = [
        criterion_1(),
        criterion_2(),
        criterion_3(&report, &findings),
        criterion_4(&report, &findings),
        criterion_5(&report, &findings),
        criterion_6(&report),
        criterion_7(&report, &findings),
        criterion_8(&report, &findings),
        nine,
        ten,
    ];
    let mut failed = Vec::new();
    for (i, o) in outcomes.iter().enumerate() {
        let n = i as u32 + 1;
        println!("criterion {n}: {}", if o.pass { "PASS" } else { "FAIL" });
        for note in &o.notes {
            println!("    {note}");
        }
        if !o.pass {
            failed.push(n);
        }
    }
    assert_eq!(
        failed, EXPECTED_FAILURES,
        "unexpected set of failing criteria"
    );
}
