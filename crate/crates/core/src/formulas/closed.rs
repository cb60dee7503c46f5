//! The closed forms, written out term by term. Each returns `None` outside
//! the `(n, k)` range it is stated for; `k` is ignored by the `n`-level ones.

use crate::partition::stirling2;
use crate::poly::{MultiPoly, Var};

use super::{composition_count, enumerate_strict_partitions, subset_sum_terms};

pub(super) fn binom(a: i64, b: i64) -> i64 {
    if a < 0 || b < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: i64 = 1;
    for i in 0..b {
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

/// `C(a, b)` extended to negative `a` by `C(a, b) = (-1)^b C(b - a - 1, b)`.
pub(super) fn binom_general(a: i64, b: i64) -> i64 {
    if a >= 0 || b < 0 {
        return binom(a, b);
    }
    let sign = if b % 2 == 0 { 1 } else { -1 };
    sign * binom(b - a - 1, b)
}

fn c2(x: i64) -> i64 {
    binom(x, 2)
}

fn factorial(x: i64) -> i64 {
    (1..=x).product()
}

fn exp(e: i64) -> u32 {
    assert!(e >= 0, "negative exponent {e}");
    e as u32
}

/// `c q^a r^b s^c t^d`; a zero coefficient gives zero whatever the exponents.
fn m(c: i64, q: i64, r: i64, s: i64, t: i64) -> MultiPoly {
    if c == 0 {
        return MultiPoly::zero();
    }
    MultiPoly::monomial(c, [exp(q), exp(r), exp(s), exp(t)])
}

fn x(c: i64, v: Var, e: i64) -> MultiPoly {
    if c == 0 {
        return MultiPoly::zero();
    }
    MultiPoly::power_of(c, v, exp(e))
}

fn konst(c: i64) -> MultiPoly {
    MultiPoly::constant(c)
}

fn ceil_half(n: i64) -> i64 {
    (n + 1) / 2
}

fn sum(terms: impl Iterator<Item = MultiPoly>) -> MultiPoly {
    terms.sum()
}

// cardinalities

pub(super) fn card_two_blocks(n: i64, k: i64) -> Option<MultiPoly> {
    (k == 2).then(|| konst((1i64 << (n - 1)) - 1))
}

pub(super) fn card_stirling(n: i64, k: i64) -> Option<MultiPoly> {
    if k > 2 {
        return None;
    }
    Some(konst(stirling2(n as usize, k as usize).ok()? as i64))
}

pub(super) fn card_layered(n: i64, k: i64) -> Option<MultiPoly> {
    (k >= 2).then(|| konst(binom(n - 1, k - 1)))
}

pub(super) fn card_k_or_one(n: i64, k: i64) -> Option<MultiPoly> {
    Some(konst(if k < n { k } else { 1 }))
}

pub(super) fn card_123(n: i64, k: i64) -> Option<MultiPoly> {
    if n == k {
        return Some(konst(1));
    }
    // (2n-2k)!! read as the odd product 1*3*...*(2n-2k-1)
    let odd: i64 = (1..=n - k).map(|i| 2 * i - 1).product();
    Some(konst(binom(n, 2 * n - 2 * k) * odd))
}

// 1/2/3

pub(super) fn one_if_k1(_n: i64, k: i64) -> Option<MultiPoly> {
    (k == 1).then(MultiPoly::one)
}

pub(super) fn f_123_split_k2(n: i64, k: i64) -> Option<MultiPoly> {
    f_123_split_k2_with(n, k, binom)
}

pub(super) fn f_123_split_k2_general(n: i64, k: i64) -> Option<MultiPoly> {
    f_123_split_k2_with(n, k, binom_general)
}

fn f_123_split_k2_with(n: i64, k: i64, binom: fn(i64, i64) -> i64) -> Option<MultiPoly> {
    if k != 2 {
        return None;
    }
    let mut p = sum((1..n).map(|l| m(1, 0, n - l, l, 0)));
    for l in 2..n {
        for h in 0..=n - l - 1 {
            for i in 1..=l {
                for j in 1..=l {
                    let c = binom(n - i - j - h - 2, l - i - j);
                    let delta = if h == 0 { j } else { 0 };
                    p = p + m(c, l - i, n - l, l - delta, n - l - h);
                }
            }
        }
    }
    Some(p)
}

pub(super) fn lb_two_blocks(n: i64, k: i64, v: Var) -> Option<MultiPoly> {
    (k == 2).then(|| sum((0..=n - 2).map(|h| x(binom(n - 1, h + 1), v, h))))
}

pub(super) fn ls_two_blocks(n: i64, k: i64, v: Var) -> Option<MultiPoly> {
    (k == 2).then(|| sum((1..n).map(|e| x(binom(n - 1, e), v, e))))
}

// 1/23

pub(super) fn rs_diagonal(n: i64, k: i64) -> Option<MultiPoly> {
    (n == k).then(|| m(1, 0, c2(k), c2(k), 0))
}

fn rb_exp_1_23(n: i64, k: i64, j: i64) -> i64 {
    (n - k) * (k - 1) + (k - j) + c2(k - 1)
}

pub(super) fn f_1_23(n: i64, k: i64) -> Option<MultiPoly> {
    (n > k).then(|| sum((1..=k).map(|j| m(1, j - 1, c2(k), rb_exp_1_23(n, k, j), j - 1))))
}

pub(super) fn one_if_diagonal(n: i64, k: i64) -> Option<MultiPoly> {
    (n == k).then(MultiPoly::one)
}

pub(super) fn geometric_below_k(n: i64, k: i64, v: Var) -> Option<MultiPoly> {
    (n > k).then(|| sum((1..=k).map(|j| x(1, v, j - 1))))
}

pub(super) fn ls_1_23(n: i64, k: i64) -> Option<MultiPoly> {
    Some(x(if n == k { 1 } else { k }, Var::R, c2(k)))
}

pub(super) fn rb_1_23(n: i64, k: i64) -> Option<MultiPoly> {
    if n == k {
        return Some(x(1, Var::S, c2(k)));
    }
    Some(sum((1..=k).map(|j| x(1, Var::S, rb_exp_1_23(n, k, j)))))
}

// 13/2

/// Sum over strict partitions with parts in `[n-1]` of `r^{sum(n-l_i)} s^{sum l_i}`,
/// keeping only the variables in `keep`.
pub(super) fn f_13_2(n: i64, parts: i64, keep: &[Var]) -> Option<MultiPoly> {
    if parts < 0 || n < 1 {
        return None;
    }
    let mut p = MultiPoly::zero();
    for lambda in enumerate_strict_partitions(n as usize - 1, parts as usize) {
        let size = lambda.size() as i64;
        let co = parts * n - size;
        p = p + m(1, 0, co, size, 0);
    }
    Some(p.specialize(keep))
}

pub(super) fn binom_blocks(n: i64, k: i64) -> Option<MultiPoly> {
    Some(konst(binom(n - 1, k - 1)))
}

// 12/3

pub(super) fn f_12_3(n: i64, k: i64) -> Option<MultiPoly> {
    (n > k).then(|| {
        sum((1..=k).map(|i| {
            m(
                1,
                (n - k) * (k - i),
                c2(k) + (n - k) * (i - 1),
                c2(k),
                k - i,
            )
        }))
    })
}

pub(super) fn r_diagonal(n: i64, k: i64) -> Option<MultiPoly> {
    (n == k).then(|| x(1, Var::R, c2(k)))
}

pub(super) fn ls_12_3(n: i64, k: i64) -> Option<MultiPoly> {
    (n > k).then(|| sum((1..=k).map(|i| x(1, Var::R, c2(k) + (n - k) * (i - 1)))))
}

pub(super) fn rb_12_3(n: i64, k: i64) -> Option<MultiPoly> {
    Some(x(if n == k { 1 } else { k }, Var::S, c2(k)))
}

pub(super) fn rs_12_3(n: i64, k: i64) -> Option<MultiPoly> {
    if n == k {
        return Some(MultiPoly::one());
    }
    Some(sum((1..k).map(|i| x(1, Var::T, k - i))))
}

/// Number of `d >= 1` with `d | i` and `d + i/d + 1 <= n`; every `d` divides 0.
fn divisor_count(n: i64, i: i64) -> i64 {
    if i == 0 {
        return (n - 1).max(0);
    }
    (1..=i).filter(|&d| i % d == 0 && d + i / d < n).count() as i64
}

pub(super) fn lb_12_3_divisors(n: i64, k: i64) -> Option<MultiPoly> {
    Some(sum(
        (0..=(n - k) * (k - 1)).map(|i| x(divisor_count(n, i), Var::Q, i))
    ))
}

pub(super) fn lb_12_3_by_blocks(n: i64, k: i64) -> Option<MultiPoly> {
    Some(sum((1..=k).map(|i| x(1, Var::Q, (n - k) * (k - i)))))
}

// 123

fn ls_123_at(n: i64, k: i64, shift: i64) -> MultiPoly {
    let j = n - k;
    if j < 0 || j > k {
        return MultiPoly::zero();
    }
    let mut p = MultiPoly::zero();
    for set in subset_sum_terms(k as usize, j as usize) {
        let weight: i64 = set
            .iter()
            .enumerate()
            .map(|(g, &l)| k - l as i64 + g as i64 + 1)
            .product();
        let e: i64 = set.iter().map(|&l| l as i64 - 1 + shift).sum();
        p = p + x(weight, Var::R, c2(k) + e);
    }
    p
}

pub(super) fn ls_123(n: i64, k: i64) -> Option<MultiPoly> {
    Some(ls_123_at(n, k, 0))
}

fn half_exact(num: i64) -> i64 {
    assert!(num % 2 == 0, "odd numerator {num}");
    num / 2
}

pub(super) fn deg_lb_123(n: i64, k: i64) -> Option<MultiPoly> {
    (k >= ceil_half(n)).then(|| konst(half_exact((4 * n + 1) * k - 3 * k * k - n * n - n)))
}

pub(super) fn lead_lb_123(n: i64, k: i64) -> Option<MultiPoly> {
    (k >= ceil_half(n)).then(|| konst(factorial(n - k)))
}

pub(super) fn compositions(n: i64, k: i64, max_part: i64) -> Option<MultiPoly> {
    Some(konst(
        composition_count(n as usize, k as usize, max_part as usize) as i64,
    ))
}

pub(super) fn deg_rs_123(n: i64, k: i64) -> Option<MultiPoly> {
    (k >= ceil_half(n)).then(|| konst((n - k) * (k - 1)))
}

pub(super) fn one_if_nonempty_123(n: i64, k: i64) -> Option<MultiPoly> {
    (k >= ceil_half(n)).then(MultiPoly::one)
}

pub(super) fn deg_rb_123(n: i64, k: i64) -> Option<MultiPoly> {
    (k >= ceil_half(n)).then(|| konst(c2(k)))
}

// pairs, per k

pub(super) fn pair_1(n: i64, k: i64) -> Option<MultiPoly> {
    match k {
        1 => Some(MultiPoly::one()),
        2 => Some(m(1, 0, 1, n - 1, 0) + m(1, 1, 1, n - 2, 1)),
        _ => None,
    }
}

pub(super) fn pair_2(n: i64, k: i64) -> Option<MultiPoly> {
    match k {
        1 => Some(MultiPoly::one()),
        2 => Some(sum((1..n).map(|i| m(1, 0, i, n - i, 0)))),
        _ => None,
    }
}

pub(super) fn pair_3(n: i64, k: i64) -> Option<MultiPoly> {
    match k {
        1 => Some(MultiPoly::one()),
        2 => Some(m(1, 0, n - 1, 1, 0) + m(1, n - 2, 1, 1, 1)),
        _ => None,
    }
}

pub(super) fn pair_4(n: i64, k: i64) -> Option<MultiPoly> {
    if k == 1 {
        return Some(MultiPoly::one());
    }
    // (k-1)/2 * (2n-k) has to come out whole
    let num = (k - 1) * (2 * n - k);
    (num % 2 == 0).then(|| m(1, 0, k * (k - 1) / 2, num / 2, 0))
}

pub(super) fn pair_5(n: i64, k: i64) -> Option<MultiPoly> {
    if k == 1 {
        Some(MultiPoly::one())
    } else if k == n {
        Some(m(1, 0, c2(k), c2(k), 0))
    } else if k == n - 1 {
        Some(m(1, k - 1, c2(k), c2(k), k - 1))
    } else {
        None
    }
}

pub(super) fn pair_6(n: i64, k: i64) -> Option<MultiPoly> {
    if k == n {
        Some(m(1, 0, c2(k), c2(k), 0))
    } else if k == n - 1 {
        Some(sum(
            (0..=n - 2).map(|i| m(1, i, c2(n - 1), c2(n) - i - 1, i))
        ))
    } else {
        None
    }
}

pub(super) fn pair_7(n: i64, k: i64) -> Option<MultiPoly> {
    if k == 1 {
        return Some(MultiPoly::one());
    }
    Some(m(
        1,
        0,
        half_exact((k - 1) * (2 * n - k)),
        half_exact((k - 1) * k),
        0,
    ))
}

pub(super) fn pair_8(n: i64, k: i64) -> Option<MultiPoly> {
    let j = n - k;
    if j < 0 || j > k {
        return Some(MultiPoly::zero());
    }
    Some(sum(subset_sum_terms(k as usize, j as usize)
        .into_iter()
        .map(|set| {
            let below: i64 = set.iter().map(|&l| l as i64 - 1).sum();
            let above: i64 = set.iter().map(|&l| k - l as i64).sum();
            m(1, 0, c2(k) + below, c2(k) + above, 0)
        })))
}

pub(super) fn pair_9(n: i64, k: i64) -> Option<MultiPoly> {
    if k == n {
        Some(m(1, 0, n * (n - 1) / 2, n * (n - 1) / 2, 0))
    } else if k == n - 1 {
        Some(sum(
            (0..=n - 2).map(|i| m(1, i, n * (n - 1) / 2 - i - 1, c2(n - 1), i))
        ))
    } else {
        None
    }
}

// equal variants

pub(super) fn deg_lbe_123(n: i64, k: i64) -> Option<MultiPoly> {
    (k >= ceil_half(n)).then(|| konst(half_exact((4 * n - 1) * k - 3 * k * k - n * n + n)))
}

fn all_equal(n: i64) -> MultiPoly {
    m(1, n - 1, n - 1, n - 1, n - 1)
}

pub(super) fn fe_1_23(n: i64, _k: i64) -> Option<MultiPoly> {
    let mut p = all_equal(n) + m(1, 0, c2(n), c2(n), 0);
    for mm in 1..n {
        for j in 1..=mm {
            p = p + m(
                1,
                j - 1 + n - mm,
                c2(mm) + (n - mm),
                (n - mm) * mm + (mm - j) + c2(mm - 1),
                j - 1 + n - mm,
            );
        }
    }
    Some(p)
}

pub(super) fn lbe_1_23(n: i64, _k: i64, v: Var) -> Option<MultiPoly> {
    Some(x(1, v, 0) + x(1, v, n - 1) + sum((1..n).map(|mm| x(n - mm, v, n - mm))))
}

pub(super) fn lse_1_23(n: i64, _k: i64) -> Option<MultiPoly> {
    let v = Var::R;
    Some(x(1, v, n - 1) + x(1, v, c2(n)) + sum((1..n).map(|mm| x(mm, v, c2(mm) + n - mm))))
}

fn rbe_1_23_head(n: i64) -> MultiPoly {
    x(1, Var::S, n - 1) + x(1, Var::S, c2(n))
}

fn rbe_1_23_tail(n: i64) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for mm in 1..n {
        for j in 1..=mm {
            p = p + x(1, Var::S, (n - mm) * mm + (mm - j) + c2(mm - 1));
        }
    }
    p
}

pub(super) fn rbe_1_23_plus(n: i64, _k: i64) -> Option<MultiPoly> {
    Some(rbe_1_23_head(n) + rbe_1_23_tail(n))
}

pub(super) fn rbe_1_23_left(n: i64, _k: i64) -> Option<MultiPoly> {
    Some(rbe_1_23_head(n))
}

pub(super) fn rbe_1_23_right(n: i64, _k: i64) -> Option<MultiPoly> {
    Some(rbe_1_23_tail(n))
}

pub(super) fn fe_12_3(n: i64, _k: i64) -> Option<MultiPoly> {
    let mut p = m(1, 0, c2(n), c2(n), 0);
    for mm in 1..n {
        for i in 1..=mm {
            p = p + m(
                1,
                (n - mm) * (mm - i + 1),
                c2(mm) + (n - mm) * i - 1,
                c2(mm) + n - mm,
                n - i,
            );
        }
    }
    Some(p)
}

pub(super) fn lse_12_3(n: i64, _k: i64) -> Option<MultiPoly> {
    let mut p = x(1, Var::R, c2(n));
    for mm in 1..n {
        for i in 1..=mm {
            p = p + x(1, Var::R, c2(mm) + (n - mm) * i);
        }
    }
    Some(p)
}

pub(super) fn rbe_12_3(n: i64, _k: i64) -> Option<MultiPoly> {
    Some(x(1, Var::S, c2(n)) + sum((1..n).map(|mm| x(mm, Var::S, c2(mm) + n - mm))))
}

pub(super) fn rse_12_3(n: i64, _k: i64) -> Option<MultiPoly> {
    Some(konst(1) + sum((1..n).map(|i| x(1, Var::T, n - i))))
}

pub(super) fn lbe_12_3_divisors(n: i64, _k: i64) -> Option<MultiPoly> {
    Some(sum(
        (0..=n * n / 4).map(|i| x(divisor_count(n, i), Var::Q, i))
    ))
}

pub(super) fn lse_123(n: i64, _k: i64) -> Option<MultiPoly> {
    Some(sum((ceil_half(n)..=n).map(|mm| ls_123_at(n, mm, 1))))
}

pub(super) fn deg_lbe_123_all(n: i64, _k: i64) -> Option<MultiPoly> {
    Some(konst(n * (n + 1) / 6))
}

pub(super) fn lead_lbe_123_all(n: i64, _k: i64) -> Option<MultiPoly> {
    let j = n / 3;
    match n % 3 {
        0 => Some(konst(factorial(j))),
        1 => Some(konst(factorial(j + 1))),
        _ => (j >= 1).then(|| konst(factorial(j - 1))),
    }
}

pub(super) fn constant(c: i64) -> Option<MultiPoly> {
    Some(konst(c))
}

pub(super) fn coeff_lbe_123(n: i64, _k: i64) -> Option<MultiPoly> {
    Some(konst(c2(n)))
}

pub(super) fn deg_rse_123(n: i64, _k: i64) -> Option<MultiPoly> {
    Some(konst((n * n + 3) / 4))
}

pub(super) fn fe_pair_1(n: i64, _k: i64) -> Option<MultiPoly> {
    Some(all_equal(n) + m(1, n - 2, n - 1, 2 * n - 3, n - 2) + m(1, n - 1, n - 1, 2 * n - 4, n - 1))
}

pub(super) fn fe_pair_2(n: i64, _k: i64) -> Option<MultiPoly> {
    Some(all_equal(n) + sum((1..n).map(|mm| m(1, n - 2, 2 * n - mm - 2, mm + n - 2, n - 2))))
}

pub(super) fn fe_pair_3(n: i64, _k: i64) -> Option<MultiPoly> {
    Some(all_equal(n) + m(1, n - 2, 2 * n - 3, n - 1, n - 2) + m(1, 2 * n - 4, n - 1, n - 1, n - 1))
}

pub(super) fn fe_pair_4(n: i64, _k: i64) -> Option<MultiPoly> {
    Some(
        all_equal(n)
            + sum((1..n).map(|i| {
                m(
                    1,
                    n - i - 1,
                    c2(n - i + 1) + n - i - 1,
                    c2(n) - c2(i) + n - i - 1,
                    n - i - 1,
                )
            })),
    )
}

pub(super) fn fe_pair_5(n: i64, _k: i64) -> Option<MultiPoly> {
    Some(
        m(1, 0, c2(n), c2(n), 0)
            + sum((0..=n - 2).map(|i| m(1, i + 1, c2(n - 1) + 1, c2(n) - i, i + 1))),
    )
}

pub(super) fn fe_pair_6(n: i64, _k: i64) -> Option<MultiPoly> {
    Some(
        all_equal(n)
            + sum((1..n).map(|i| {
                m(
                    1,
                    n - i - 1,
                    c2(n) - c2(i) + n - i - 1,
                    c2(n - i + 1) + n - i - 1,
                    n - i - 1,
                )
            })),
    )
}

// word patterns

pub(super) fn words_112(n: i64, _k: i64, v: Var) -> Option<MultiPoly> {
    Some(sum(
        (0..=n).map(|mm| x(binom(n - 1, n - mm), v, c2(mm) + (n - mm)))
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_vanish_out_of_range() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(5, 6), 0);
        assert_eq!(binom(-1, 0), 0);
        assert_eq!(binom(3, -1), 0);
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom_general(-1, 0), 1);
        assert_eq!(binom_general(-1, 3), -1);
        assert_eq!(binom_general(-2, 2), 3);
        assert_eq!(binom_general(4, 2), 6);
    }

    #[test]
    fn divisor_counts() {
        assert_eq!(divisor_count(6, 4), 3);
        assert_eq!(divisor_count(5, 4), 1);
        assert_eq!(divisor_count(4, 4), 0);
        assert_eq!(divisor_count(5, 0), 4);
    }

    #[test]
    fn odd_product_cardinality() {
        assert_eq!(card_123(4, 2), Some(konst(3)));
        assert_eq!(card_123(5, 5), Some(konst(1)));
        assert_eq!(card_123(5, 3), Some(konst(binom(5, 4) * 3)));
    }
}
