use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::pattern::{PatternSet, SINGLETONS};
use crate::poly::Var;

use super::closed;
use super::{Claim, Entry, Eval, Level, OracleQuery, View};

const ALL: &[Var] = &Var::ALL;
const QT: (Var, Var) = (Var::Q, Var::T);
const RS: (Var, Var) = (Var::R, Var::S);

fn std_q(patterns: &str, view: View) -> OracleQuery {
    OracleQuery {
        patterns: canonical(patterns),
        equal: false,
        view,
    }
}

fn eq_q(patterns: &str, view: View) -> OracleQuery {
    OracleQuery {
        patterns: canonical(patterns),
        equal: true,
        view,
    }
}

fn canonical(patterns: &str) -> String {
    patterns
        .parse::<PatternSet>()
        .expect("registry patterns parse")
        .to_string()
}

#[derive(Default)]
struct Builder(Vec<Entry>);

impl Builder {
    fn closed(&mut self, id: &str, about: &str, level: Level, eval: Eval, target: OracleQuery) {
        self.push(id, about, level, Claim::Closed { eval, target });
    }

    fn per_k(&mut self, id: &str, about: &str, eval: Eval, target: OracleQuery) {
        self.closed(id, about, Level::PerK, eval, target);
    }

    fn all_k(&mut self, id: &str, about: &str, eval: Eval, target: OracleQuery) {
        self.closed(id, about, Level::AllK, eval, target);
    }

    fn same(&mut self, id: &str, about: &str, level: Level, left: OracleQuery, right: OracleQuery) {
        self.push(id, about, level, Claim::Identity { left, right });
    }

    fn push(&mut self, id: &str, about: &str, level: Level, claim: Claim) {
        self.0.push(Entry {
            id: id.to_string(),
            about: about.to_string(),
            level,
            claim,
            attach: false,
        });
    }

    fn attach_last(&mut self) {
        if let Some(e) = self.0.last_mut() {
            e.attach = true;
        }
    }
}

/// Sets of size at least two that contain 13/2.
fn sets_with_13_2() -> Vec<String> {
    let others = ["1/2/3", "1/23", "12/3", "123"];
    let mut out = Vec::new();
    for mask in 1u32..16 {
        let mut items = vec!["13/2"];
        items.extend((0..4).filter(|i| mask >> i & 1 == 1).map(|i| others[i]));
        out.push(canonical(&items.join(";")));
    }
    out
}

const QT_PAIRS: [&str; 4] = ["1/2/3;1/23", "1/23;12/3", "1/23;123", "12/3;123"];
const RS_PAIRS: [&str; 2] = ["1/2/3;13/2", "1/23;12/3"];

fn build() -> Vec<Entry> {
    use closed::*;
    use Level::{AllK, PerK};
    use View::*;

    let mut b = Builder::default();

    // class sizes
    b.per_k(
        "cor1.3.i",
        "#R_{n,2}(1/2/3) = 2^{n-1} - 1",
        card_two_blocks,
        std_q("1/2/3", Count),
    );
    b.per_k(
        "cor1.3.i.stirling",
        "#R_{n,k}(1/2/3) = S(n,k) for k <= 2",
        card_stirling,
        std_q("1/2/3", Count),
    );
    b.per_k(
        "cor1.3.ii",
        "#R_{n,k}(13/2) = C(n-1,k-1), k >= 2",
        card_layered,
        std_q("13/2", Count),
    );
    b.per_k(
        "cor1.3.iii.a",
        "#R_{n,k}(1/23) = k if k < n, 1 if k = n",
        card_k_or_one,
        std_q("1/23", Count),
    );
    b.per_k(
        "cor1.3.iii.b",
        "#R_{n,k}(12/3) = k if k < n, 1 if k = n",
        card_k_or_one,
        std_q("12/3", Count),
    );
    b.per_k(
        "cor1.3.iv",
        "#R_{n,k}(123) = C(n,2n-2k) * 1*3*...*(2n-2k-1), 1 if n = k",
        card_123,
        std_q("123", Count),
    );

    // 1/2/3
    b.per_k(
        "thm2.1.i",
        "F_{n,1}(1/2/3) = 1",
        one_if_k1,
        std_q("1/2/3", Full),
    );
    b.per_k(
        "thm2.1.ii",
        "F_{n,2}(1/2/3) = sum_l r^{n-l} s^l + sum_{l,h,i,j} C(n-i-j-h-2, l-i-j) q^{l-i} r^{n-l} s^{l-[h=0]j} t^{n-l-h}",
        f_123_split_k2,
        std_q("1/2/3", Full),
    );
    b.per_k(
        "thm2.1.ii.generalized-binomial",
        "the same sum with C(a,b) = (-1)^b C(b-a-1,b) for a < 0, so C(-1,0) = 1",
        f_123_split_k2_general,
        std_q("1/2/3", Full),
    );
    for (name, v) in [
        ("lb", Var::Q),
        ("ls", Var::R),
        ("rb", Var::S),
        ("rs", Var::T),
    ] {
        b.per_k(
            &format!("cor2.2.i.{name}"),
            &format!("{}_{{n,1}}(1/2/3) = 1", name.to_uppercase()),
            one_if_k1,
            std_q("1/2/3", Stat(v)),
        );
    }
    b.per_k(
        "cor2.2.ii.lb",
        "LB_{n,2}(1/2/3) = sum_{h=0}^{n-2} C(n-1,h+1) q^h",
        |n, k| lb_two_blocks(n, k, Var::Q),
        std_q("1/2/3", Stat(Var::Q)),
    );
    b.per_k(
        "cor2.2.ii.rs",
        "RS_{n,2}(1/2/3) = sum_{h=0}^{n-2} C(n-1,h+1) t^h",
        |n, k| lb_two_blocks(n, k, Var::T),
        std_q("1/2/3", Stat(Var::T)),
    );
    b.per_k(
        "cor2.2.iii.ls",
        "LS_{n,2}(1/2/3) = (r+1)^{n-1} - 1",
        |n, k| ls_two_blocks(n, k, Var::R),
        std_q("1/2/3", Stat(Var::R)),
    );
    b.per_k(
        "cor2.2.iii.rb",
        "RB_{n,2}(1/2/3) = (s+1)^{n-1} - 1",
        |n, k| ls_two_blocks(n, k, Var::S),
        std_q("1/2/3", Stat(Var::S)),
    );

    // 1/23
    b.per_k(
        "thm3.1.i",
        "F_{k,k}(1/23) = (rs)^{C(k,2)}",
        rs_diagonal,
        std_q("1/23", Full),
    );
    b.per_k(
        "thm3.1.ii",
        "F_{n,k}(1/23) = sum_{j=1}^k (qt)^{j-1} r^{C(k,2)} s^{(n-k)(k-1)+(k-j)+C(k-1,2)}, n > k",
        f_1_23,
        std_q("1/23", Full),
    );
    b.per_k(
        "cor3.2.i.lb",
        "LB_{k,k}(1/23) = 1",
        one_if_diagonal,
        std_q("1/23", Stat(Var::Q)),
    );
    b.per_k(
        "cor3.2.i.rs",
        "RS_{k,k}(1/23) = 1",
        one_if_diagonal,
        std_q("1/23", Stat(Var::T)),
    );
    b.per_k(
        "cor3.2.ii.lb",
        "LB_{n,k}(1/23) = sum_{j=1}^k q^{j-1}, n > k",
        |n, k| geometric_below_k(n, k, Var::Q),
        std_q("1/23", Stat(Var::Q)),
    );
    b.per_k(
        "cor3.2.ii.rs",
        "RS_{n,k}(1/23) = sum_{j=1}^k t^{j-1}, n > k",
        |n, k| geometric_below_k(n, k, Var::T),
        std_q("1/23", Stat(Var::T)),
    );
    b.per_k(
        "cor3.2.iii",
        "LS_{n,k}(1/23) = r^{C(k,2)} if n = k, else k r^{C(k,2)}",
        ls_1_23,
        std_q("1/23", Stat(Var::R)),
    );
    b.per_k(
        "cor3.2.iv",
        "RB_{n,k}(1/23) = s^{C(k,2)} if n = k, else sum_j s^{(n-k)(k-1)+(k-j)+C(k-1,2)}",
        rb_1_23,
        std_q("1/23", Stat(Var::S)),
    );

    // 13/2
    b.per_k(
        "thm4.1.as-printed",
        "F_{n,k}(13/2) = sum over k distinct parts from [n-1] of r^{sum(n-l)} s^{sum l}",
        |n, k| f_13_2(n, k, ALL),
        std_q("13/2", Full),
    );
    b.per_k(
        "thm4.1.kminus1",
        "F_{n,k}(13/2) = sum over k-1 distinct parts from [n-1] of r^{sum(n-l)} s^{sum l}",
        |n, k| f_13_2(n, k - 1, ALL),
        std_q("13/2", Full),
    );
    b.per_k(
        "cor4.2.i.lb",
        "LB_{n,k}(13/2) = C(n-1,k-1)",
        binom_blocks,
        std_q("13/2", Stat(Var::Q)),
    );
    b.per_k(
        "cor4.2.i.rs",
        "RS_{n,k}(13/2) = C(n-1,k-1)",
        binom_blocks,
        std_q("13/2", Stat(Var::T)),
    );
    b.per_k(
        "cor4.2.ii.as-printed",
        "LS_{n,k}(13/2) = sum over k distinct parts from [n-1] of r^{sum(n-l)}",
        |n, k| f_13_2(n, k, &[Var::R]),
        std_q("13/2", Stat(Var::R)),
    );
    b.per_k(
        "cor4.2.ii.kminus1",
        "LS_{n,k}(13/2) = sum over k-1 distinct parts from [n-1] of r^{sum(n-l)}",
        |n, k| f_13_2(n, k - 1, &[Var::R]),
        std_q("13/2", Stat(Var::R)),
    );
    b.per_k(
        "cor4.2.iii.as-printed",
        "RB_{n,k}(13/2) = sum over k distinct parts from [n-1] of s^{sum l}",
        |n, k| f_13_2(n, k, &[Var::S]),
        std_q("13/2", Stat(Var::S)),
    );
    b.per_k(
        "cor4.2.iii.kminus1",
        "RB_{n,k}(13/2) = sum over k-1 distinct parts from [n-1] of s^{sum l}",
        |n, k| f_13_2(n, k - 1, &[Var::S]),
        std_q("13/2", Stat(Var::S)),
    );

    // 12/3
    b.per_k(
        "thm5.1.i",
        "F_{k,k}(12/3) = (rs)^{C(k,2)}",
        rs_diagonal,
        std_q("12/3", Full),
    );
    b.per_k(
        "thm5.1.ii",
        "F_{n,k}(12/3) = sum_{i=1}^k q^{(n-k)(k-i)} r^{C(k,2)+(n-k)(i-1)} s^{C(k,2)} t^{k-i}, n > k",
        f_12_3,
        std_q("12/3", Full),
    );
    b.per_k(
        "cor5.2.i",
        "LS_{k,k}(12/3) = r^{C(k,2)}",
        r_diagonal,
        std_q("12/3", Stat(Var::R)),
    );
    b.per_k(
        "cor5.2.ii",
        "LS_{n,k}(12/3) = sum_{i=1}^k r^{C(k,2)+(n-k)(i-1)}, n > k",
        ls_12_3,
        std_q("12/3", Stat(Var::R)),
    );
    b.per_k(
        "cor5.2.iii",
        "RB_{n,k}(12/3) = s^{C(k,2)} if n = k, else k s^{C(k,2)}",
        rb_12_3,
        std_q("12/3", Stat(Var::S)),
    );
    b.per_k(
        "cor5.2.iv",
        "RS_{n,k}(12/3) = 1 if n = k, else sum_{i=1}^{k-1} t^{k-i}",
        rs_12_3,
        std_q("12/3", Stat(Var::T)),
    );
    b.per_k(
        "prop5.3",
        "LB_{n,k}(12/3) = sum_{i=0}^{(n-k)(k-1)} D_i q^i, D_i = #{d >= 1 : d | i, d + i/d + 1 <= n}",
        lb_12_3_divisors,
        std_q("12/3", Stat(Var::Q)),
    );
    b.per_k(
        "sec5.lb-by-blocks",
        "LB_{n,k}(12/3) = sum_{i=1}^k q^{(n-k)(k-i)}",
        lb_12_3_by_blocks,
        std_q("12/3", Stat(Var::Q)),
    );
    b.same(
        "prop5.5.i",
        "LB_{n,k}(1/23) = RS_{n,k}(12/3)",
        PerK,
        std_q("1/23", StatAs(Var::Q, Var::Q)),
        std_q("12/3", StatAs(Var::T, Var::Q)),
    );
    b.same(
        "prop5.5.ii",
        "LS_{n,k}(1/23) = RB_{n,k}(12/3)",
        PerK,
        std_q("1/23", StatAs(Var::R, Var::R)),
        std_q("12/3", StatAs(Var::S, Var::R)),
    );

    // 123
    b.per_k(
        "thm6.1",
        "LS_{n,k}(123) = sum over L in [k], |L| = n-k, of prod_g (k - l_g + g) r^{C(k,2) + sum(l-1)}",
        ls_123,
        std_q("123", Stat(Var::R)),
    );
    b.per_k(
        "thm6.2.i",
        "deg_q LB_{n,k}(123) = ((4n+1)k - 3k^2 - n^2 - n)/2, k >= n/2",
        deg_lb_123,
        std_q("123", Degree(Var::Q)),
    );
    b.per_k(
        "thm6.2.ii",
        "leading coefficient of LB_{n,k}(123) = (n-k)!, k >= n/2",
        lead_lb_123,
        std_q("123", Leading(Var::Q)),
    );
    b.per_k(
        "sec6.ct-lb.m3.as-printed",
        "[q^0] LB_{n,k}(123) = [x^n] (x(1-x^3)/(1-x))^k",
        |n, k| compositions(n, k, 3),
        std_q("123", Constant(Var::Q)),
    );
    b.per_k(
        "sec6.ct-lb.m3.parts-below-m",
        "[q^0] LB_{n,k}(123) = compositions of n into k parts of size at most 2",
        |n, k| compositions(n, k, 2),
        std_q("123", Constant(Var::Q)),
    );
    b.per_k(
        "sec6.ct-lb.m4.as-printed",
        "[q^0] LB_{n,k}(1234) = [x^n] (x(1-x^4)/(1-x))^k",
        |n, k| compositions(n, k, 4),
        std_q("1234", Constant(Var::Q)),
    );
    b.per_k(
        "sec6.ct-lb.m4.parts-below-m",
        "[q^0] LB_{n,k}(1234) = compositions of n into k parts of size at most 3",
        |n, k| compositions(n, k, 3),
        std_q("1234", Constant(Var::Q)),
    );
    b.per_k(
        "thm6.4.i",
        "deg_t RS_{n,k}(123) = (n-k)(k-1), k >= n/2",
        deg_rs_123,
        std_q("123", Degree(Var::T)),
    );
    b.per_k(
        "thm6.4.ii",
        "leading coefficient of RS_{n,k}(123) = 1, k >= n/2",
        one_if_nonempty_123,
        std_q("123", Leading(Var::T)),
    );
    b.same(
        "thm6.4.iii",
        "[t^0] RS_{n,k}(123) compared with itself; the value is recorded",
        PerK,
        std_q("123", Constant(Var::T)),
        std_q("123", Constant(Var::T)),
    );
    b.attach_last();
    b.per_k(
        "thm6.4.iv.monic",
        "leading coefficient of RB_{n,k}(123) = 1, k >= n/2",
        one_if_nonempty_123,
        std_q("123", Leading(Var::S)),
    );
    b.per_k(
        "thm6.4.iv.degree",
        "deg_s RB_{n,k}(123) = C(k,2), k >= n/2",
        deg_rb_123,
        std_q("123", Degree(Var::S)),
    );

    // pairs
    let pairs: [(&str, &str, Eval, &str); 9] = [
        (
            "1",
            "1/2/3;1/23",
            pair_1,
            "1 (k=1); r s^{n-1} + q r s^{n-2} t (k=2)",
        ),
        (
            "2",
            "1/2/3;13/2",
            pair_2,
            "1 (k=1); sum_{i=1}^{n-1} r^i s^{n-i} (k=2)",
        ),
        (
            "3",
            "1/2/3;12/3",
            pair_3,
            "1 (k=1); r^{n-1} s + q^{n-2} r s t (k=2)",
        ),
        (
            "4",
            "1/23;13/2",
            pair_4,
            "1 (k=1); r^{k(k-1)/2} s^{(k-1)(2n-k)/2}",
        ),
        (
            "5",
            "1/23;12/3",
            pair_5,
            "1 (k=1); (rs)^{C(k,2)} (k=n); (qt)^{k-1} (rs)^{C(k,2)} (k=n-1)",
        ),
        (
            "6",
            "1/23;123",
            pair_6,
            "(rs)^{C(k,2)} (k=n); r^{C(n-1,2)} sum_{i=0}^{n-2} (qt)^i s^{C(n,2)-i-1} (k=n-1)",
        ),
        (
            "7",
            "13/2;12/3",
            pair_7,
            "1 (k=1); r^{(k-1)(2n-k)/2} s^{(k-1)k/2}",
        ),
        (
            "8",
            "13/2;123",
            pair_8,
            "sum over L in [k], |L| = n-k, of r^{C(k,2)+sum(l-1)} s^{C(k,2)+sum(k-l)}",
        ),
        (
            "9",
            "12/3;123",
            pair_9,
            "(rs)^{n(n-1)/2} (k=n); s^{C(n-1,2)} sum_{i=0}^{n-2} (qt)^i r^{n(n-1)/2-i-1} (k=n-1)",
        ),
    ];
    for (item, set, eval, about) in pairs {
        b.per_k(
            &format!("thm7.1.{item}"),
            &format!("F_{{n,k}}({set}) = {about}"),
            eval,
            std_q(set, Full),
        );
    }
    symmetries(&mut b, "cor7.2", false, PerK);
    b.same(
        "cor7.2.3.a",
        "F_{n,k}(1/23;13/2; q,r,s,t) = F_{n,k}(12/3;13/2; q,s,r,t)",
        PerK,
        std_q("1/23;13/2", Full),
        std_q("12/3;13/2", Swap(Var::R, Var::S)),
    );
    b.same(
        "cor7.2.3.b",
        "F_{n,k}(1/23;123; q,r,s,t) = F_{n,k}(12/3;123; q,s,r,t)",
        PerK,
        std_q("1/23;123", Full),
        std_q("12/3;123", Swap(Var::R, Var::S)),
    );

    // equal variants
    for set in SINGLETONS {
        b.same(
            &format!("note8.shift({set})"),
            &format!("FE_{{n,k}}({set}) = (qrst)^{{n-k}} F_{{n,k}}({set})"),
            PerK,
            eq_q(set, Full),
            std_q(set, BlockShift),
        );
    }
    b.per_k(
        "note8.ii.deg-lbe123",
        "deg_q LBE_{n,k}(123) = ((4n-1)k - 3k^2 - n^2 + n)/2, k >= n/2",
        deg_lbe_123,
        eq_q("123", Degree(Var::Q)),
    );

    b.all_k(
        "thm9.1",
        "FE_n(1/23) = (qrst)^{n-1} + (rs)^{C(n,2)} + sum_{m<n} sum_{j<=m} (qt)^{j-1+n-m} r^{C(m,2)+n-m} s^{(n-m)m+(m-j)+C(m-1,2)}",
        fe_1_23,
        eq_q("1/23", Full),
    );
    b.all_k(
        "cor9.2.i.lbe",
        "LBE_n(1/23) = 1 + q^{n-1} + sum_{m=1}^{n-1} (n-m) q^{n-m}",
        |n, k| lbe_1_23(n, k, Var::Q),
        eq_q("1/23", Stat(Var::Q)),
    );
    b.all_k(
        "cor9.2.i.rse",
        "RSE_n(1/23) = 1 + t^{n-1} + sum_{m=1}^{n-1} (n-m) t^{n-m}",
        |n, k| lbe_1_23(n, k, Var::T),
        eq_q("1/23", Stat(Var::T)),
    );
    b.all_k(
        "cor9.2.ii",
        "LSE_n(1/23) = r^{n-1} + r^{C(n,2)} + sum_{m=1}^{n-1} m r^{C(m,2)+n-m}",
        lse_1_23,
        eq_q("1/23", Stat(Var::R)),
    );
    b.all_k(
        "cor9.2.iii.plus",
        "RBE_n(1/23) = s^{n-1} + s^{C(n,2)} + sum_{m<n} sum_{j<=m} s^{(n-m)m+(m-j)+C(m-1,2)}",
        rbe_1_23_plus,
        eq_q("1/23", Stat(Var::S)),
    );
    b.all_k(
        "cor9.2.iii.eq-left",
        "RBE_n(1/23) = s^{n-1} + s^{C(n,2)}",
        rbe_1_23_left,
        eq_q("1/23", Stat(Var::S)),
    );
    b.all_k(
        "cor9.2.iii.eq-right",
        "RBE_n(1/23) = sum_{m<n} sum_{j<=m} s^{(n-m)m+(m-j)+C(m-1,2)}",
        rbe_1_23_right,
        eq_q("1/23", Stat(Var::S)),
    );

    b.all_k(
        "thm10.1",
        "FE_n(12/3) = (rs)^{C(n,2)} + sum_{m<n} sum_{i<=m} q^{(n-m)(m-i+1)} r^{C(m,2)+(n-m)i-1} s^{C(m,2)+n-m} t^{n-i}",
        fe_12_3,
        eq_q("12/3", Full),
    );
    b.all_k(
        "cor10.2.i",
        "LSE_n(12/3) = r^{C(n,2)} + sum_{m<n} sum_{i<=m} r^{C(m,2)+(n-m)i}",
        lse_12_3,
        eq_q("12/3", Stat(Var::R)),
    );
    b.all_k(
        "cor10.2.ii",
        "RBE_n(12/3) = s^{C(n,2)} + sum_{m=1}^{n-1} m s^{C(m,2)+n-m}",
        rbe_12_3,
        eq_q("12/3", Stat(Var::S)),
    );
    b.all_k(
        "cor10.2.iii",
        "RSE_n(12/3) = 1 + sum_{i=1}^{n-1} t^{n-i}",
        rse_12_3,
        eq_q("12/3", Stat(Var::T)),
    );
    b.all_k(
        "prop10.3",
        "LBE_n(12/3) = sum_{i=0}^{floor(n^2/4)} D_i q^i",
        lbe_12_3_divisors,
        eq_q("12/3", Stat(Var::Q)),
    );
    b.same(
        "prop10.4.i",
        "LBE_n(1/23) = RSE_n(12/3)",
        AllK,
        eq_q("1/23", StatAs(Var::Q, Var::Q)),
        eq_q("12/3", StatAs(Var::T, Var::Q)),
    );
    b.same(
        "prop10.4.ii",
        "LSE_n(1/23) = RBE_n(12/3)",
        AllK,
        eq_q("1/23", StatAs(Var::R, Var::R)),
        eq_q("12/3", StatAs(Var::S, Var::R)),
    );

    b.all_k(
        "thm11.1",
        "LSE_n(123) = sum_{m >= n/2} sum over L in [m], |L| = n-m, of prod_g (m - l_g + g) r^{C(m,2) + sum l}",
        lse_123,
        eq_q("123", Stat(Var::R)),
    );
    b.all_k(
        "thm11.2.i",
        "deg_q LBE_n(123) = floor(n(n+1)/6)",
        deg_lbe_123_all,
        eq_q("123", Degree(Var::Q)),
    );
    b.all_k(
        "thm11.2.ii",
        "leading coefficient of LBE_n(123) = j! (n=3j), (j-1)! (n=3j+2), (j+1)! (n=3j+1)",
        lead_lbe_123_all,
        eq_q("123", Leading(Var::Q)),
    );
    b.all_k(
        "thm11.3.i",
        "[q^0] LBE_n(123) = 1",
        |_, _| constant(1),
        eq_q("123", Constant(Var::Q)),
    );
    b.all_k(
        "thm11.3.ii",
        "[q^1] LBE_n(123) = C(n,2)",
        coeff_lbe_123,
        eq_q("123", Coefficient(Var::Q, 1)),
    );
    b.all_k(
        "thm11.3.iii",
        "deg_t RSE_n(123) = ceil(n^2/4)",
        deg_rse_123,
        eq_q("123", Degree(Var::T)),
    );
    b.all_k(
        "thm11.3.iv",
        "[t^0] RSE_n(123) = 1",
        |_, _| constant(1),
        eq_q("123", Constant(Var::T)),
    );
    b.all_k(
        "thm11.3.v",
        "leading coefficient of RBE_n(123) = 2",
        |_, _| constant(2),
        eq_q("123", Leading(Var::S)),
    );

    let fe_pairs: [(&str, &str, Eval, &str); 6] = [
        (
            "1",
            "1/2/3;1/23",
            fe_pair_1,
            "(qrst)^{n-1} + (qt)^{n-2} r^{n-1} s^{2n-3} + (qrt)^{n-1} s^{2n-4}",
        ),
        (
            "2",
            "1/2/3;13/2",
            fe_pair_2,
            "(qrst)^{n-1} + sum_{m=1}^{n-1} q^{n-2} r^{2n-m-2} s^{m+n-2} t^{n-2}",
        ),
        (
            "3",
            "1/2/3;12/3",
            fe_pair_3,
            "(qrst)^{n-1} + q^{n-2} r^{2n-3} s^{n-1} t^{n-2} + q^{2n-4} (rst)^{n-1}",
        ),
        (
            "4",
            "1/23;13/2",
            fe_pair_4,
            "(qrst)^{n-1} + sum_{i=1}^{n-1} q^{n-i-1} r^{C(n-i+1,2)+n-i-1} s^{C(n,2)-C(i,2)+n-i-1} t^{n-i-1}",
        ),
        (
            "5",
            "1/23;123",
            fe_pair_5,
            "(rs)^{C(n,2)} + r^{C(n-1,2)+1} sum_{i=0}^{n-2} (qt)^{i+1} s^{C(n,2)-i}",
        ),
        (
            "6",
            "13/2;12/3",
            fe_pair_6,
            "(qrst)^{n-1} + sum_{i=1}^{n-1} q^{n-i-1} r^{C(n,2)-C(i,2)+n-i-1} s^{C(n-i+1,2)+n-i-1} t^{n-i-1}",
        ),
    ];
    for (item, set, eval, about) in fe_pairs {
        b.all_k(
            &format!("thm12.1.{item}"),
            &format!("FE_n({set}) = {about}"),
            eval,
            eq_q(set, Full),
        );
    }
    symmetries(&mut b, "cor12.2", true, AllK);
    b.same(
        "cor12.2.3",
        "FE_n(1/23;13/2; q,r,s,t) = FE_n(12/3;13/2; q,s,r,t)",
        AllK,
        eq_q("1/23;13/2", Full),
        eq_q("12/3;13/2", Swap(Var::R, Var::S)),
    );

    // word patterns
    b.same(
        "sec13.lbe112-122",
        "LBE_n(w:112) = LBE_n(w:122)",
        AllK,
        eq_q("w:112", Stat(Var::Q)),
        eq_q("w:122", Stat(Var::Q)),
    );
    b.same(
        "sec13.lse112-121",
        "LSE_n(w:112) = LSE_n(w:121)",
        AllK,
        eq_q("w:112", Stat(Var::R)),
        eq_q("w:121", Stat(Var::R)),
    );
    b.same(
        "sec13.lse112-122",
        "LSE_n(w:112) = LSE_n(w:122)",
        AllK,
        eq_q("w:112", Stat(Var::R)),
        eq_q("w:122", Stat(Var::R)),
    );
    b.same(
        "sec13.rbe112-lse122",
        "RBE_n(w:112) = LSE_n(w:122)",
        AllK,
        eq_q("w:112", StatAs(Var::S, Var::Q)),
        eq_q("w:122", StatAs(Var::R, Var::Q)),
    );
    b.all_k(
        "sec13.rbe112",
        "RBE_n(w:112) = sum_{m=0}^n C(n-1,n-m) s^{C(m,2)+(n-m)}",
        |n, k| words_112(n, k, Var::S),
        eq_q("w:112", Stat(Var::S)),
    );
    b.all_k(
        "sec13.lse122",
        "LSE_n(w:122) = sum_{m=0}^n C(n-1,n-m) r^{C(m,2)+(n-m)}",
        |n, k| words_112(n, k, Var::R),
        eq_q("w:122", Stat(Var::R)),
    );

    b.0
}

fn symmetries(b: &mut Builder, prefix: &str, equal: bool, level: Level) {
    let make = |set: &str, view| {
        if equal {
            eq_q(set, view)
        } else {
            std_q(set, view)
        }
    };
    let name = if equal { "FE" } else { "F" };
    let mut qt_sets = sets_with_13_2();
    qt_sets.extend(QT_PAIRS.iter().map(|s| canonical(s)));
    for set in qt_sets {
        b.same(
            &format!("{prefix}.1.qt({set})"),
            &format!("{name}({set}) is symmetric in q and t"),
            level,
            make(&set, View::Full),
            make(&set, View::Swap(QT.0, QT.1)),
        );
    }
    for set in RS_PAIRS {
        let set = canonical(set);
        b.same(
            &format!("{prefix}.2.rs({set})"),
            &format!("{name}({set}) is symmetric in r and s"),
            level,
            make(&set, View::Full),
            make(&set, View::Swap(RS.0, RS.1)),
        );
    }
}

/// Every registered claim, in registration order.
pub fn registry() -> &'static [Entry] {
    static REGISTRY: OnceLock<Vec<Entry>> = OnceLock::new();
    REGISTRY.get_or_init(build)
}

pub fn lookup(id: &str) -> Result<&'static Entry> {
    registry()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::Unsupported(format!("no formula with id `{id}`")))
}
