//! Partition statistic tables computed through generating functions.
//!
//! Each statistic has a series route here and an enumeration oracle in
//! [`crate::enumerate`]; the two are compared in tests. Where the literature
//! gives two series expressions (M_k and MP_k), both are implemented: the
//! structured sum is the canonical route and the truncated-theta route is the
//! cross-check.
//!
//! Letters follow the established names: `p` counts partitions, `Q` counts
//! odd-part partitions, `b` is the part-count difference between odd and
//! distinct partitions, `s` its signed companion over distinct partitions,
//! `S` the total part count, `e` the even-multiplicity count, and `a`, `c`
//! the two other counts equal to `b`.

use crate::enumerate;
use crate::qkernels::{
    self, euler, lambert, poch_fin, poch_inf, truncated_gauss, truncated_pentagonal,
    QBinomialTable, Sign,
};
use crate::series::Series;
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

/// Which statistic a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StatKind {
    /// p(n)
    P,
    /// Q(n)
    Q,
    /// b(n)
    B,
    /// s(n)
    S,
    /// S(n), written `S` in tables and CLI
    STotal,
    /// e(n)
    E,
    /// a(n)
    A,
    /// c(n)
    C,
    /// M_k(n)
    M,
    /// MP_k(n)
    Mp,
}

impl StatKind {
    pub const ALL: [StatKind; 10] = [
        StatKind::P,
        StatKind::Q,
        StatKind::B,
        StatKind::S,
        StatKind::STotal,
        StatKind::E,
        StatKind::A,
        StatKind::C,
        StatKind::M,
        StatKind::Mp,
    ];

    pub fn symbol(&self) -> &'static str {
        match self {
            StatKind::P => "p",
            StatKind::Q => "Q",
            StatKind::B => "b",
            StatKind::S => "s",
            StatKind::STotal => "S",
            StatKind::E => "e",
            StatKind::A => "a",
            StatKind::C => "c",
            StatKind::M => "M",
            StatKind::Mp => "MP",
        }
    }

    /// Case-sensitive: `s` and `S` are different statistics.
    pub fn from_symbol(s: &str) -> Option<StatKind> {
        StatKind::ALL.into_iter().find(|k| k.symbol() == s)
    }

    pub fn takes_k(&self) -> bool {
        matches!(self, StatKind::M | StatKind::Mp)
    }
}

impl fmt::Display for StatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// How a table's values were produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Through the statistic's own generating function.
    Series,
    /// a(n) and c(n) have no series of their own; their tables reuse the
    /// b series and say so.
    AliasOfB,
    /// Brute-force enumeration.
    Oracle,
}

impl Route {
    pub fn as_str(&self) -> &'static str {
        match self {
            Route::Series => "series",
            Route::AliasOfB => "series-alias-b",
            Route::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StatError {
    #[error("statistic {0} requires a k parameter")]
    MissingK(StatKind),
    #[error("statistic {0} takes no k parameter")]
    SuperfluousK(StatKind),
    #[error("k must be >= 1")]
    ZeroK,
}

/// A named integer sequence: statistic values for n = 0..=N with their
/// provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatTable {
    kind: StatKind,
    k: Option<usize>,
    values: Vec<BigInt>,
    route: Route,
}

impl StatTable {
    fn new(kind: StatKind, k: Option<usize>, values: Vec<BigInt>, route: Route) -> StatTable {
        StatTable {
            kind,
            k,
            values,
            route,
        }
    }

    pub fn kind(&self) -> StatKind {
        self.kind
    }

    pub fn k(&self) -> Option<usize> {
        self.k
    }

    pub fn trunc_order(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn value(&self, n: usize) -> &BigInt {
        &self.values[n]
    }

    pub fn route(&self) -> Route {
        self.route
    }

    pub fn series(&self) -> Series {
        Series::from_coeffs(self.values.clone())
    }
}

/// `(-1)^(k-1) * s`.
pub(crate) fn sign_for_k(k: usize, s: Series) -> Series {
    if k % 2 == 0 {
        s.neg()
    } else {
        s
    }
}

/// `1/(q;q)_inf`: the partition counting series.
pub fn p_series(order: usize) -> Series {
    euler(order).inverse().expect("unit constant term")
}

/// `1/(q;q^2)_inf`: odd-part partition counts.
pub fn big_q_series(order: usize) -> Series {
    poch_inf(Sign::Plus, 1, 2, order)
        .inverse()
        .expect("unit constant term")
}

/// `(-q;q)_inf * sum q^(2n)/(1-q^(2n))`: the b(n) factorization.
pub fn b_series(order: usize) -> Series {
    &poch_inf(Sign::Minus, 1, 1, order) * &lambert(2, order)
}

/// `(q;q)_inf * sum q^n/(1-q^n)`: solves the Lambert factorization for s(n).
pub fn s_series(order: usize) -> Series {
    &euler(order) * &lambert(1, order)
}

/// `1/(q;q)_inf * sum q^n/(1-q^n)`: total part counts S(n).
pub fn big_s_series(order: usize) -> Series {
    &p_series(order) * &lambert(1, order)
}

/// `1/((q;q^2)_inf (q^4;q^4)_inf)`: odd parts free, even parts in pairs.
pub fn e_series(order: usize) -> Series {
    let even_pairs = poch_inf(Sign::Plus, 4, 4, order)
        .inverse()
        .expect("unit constant term");
    &big_q_series(order) * &even_pairs
}

/// M_k(n) by the structured sum
/// `sum_{n>=k} q^(C(k,2)+(k+1)n) / (q;q)_n * [n-1, k-1]`.
pub fn mk_series(k: usize, order: usize) -> Series {
    assert!(k >= 1);
    let base = k * (k - 1) / 2;
    let mut acc = vec![BigInt::zero(); order + 1];
    // 1/(q;q)_n, extended one factor per loop iteration
    let mut inv_poch = Series::one(order);
    for i in 1..=k {
        inv_poch = inv_poch.div_one_minus(i);
    }
    let mut qtab = QBinomialTable::new(order, k - 1);
    let mut n = k;
    loop {
        let exp = base + (k + 1) * n;
        if exp > order {
            break;
        }
        let term = inv_poch.mul_truncated(qtab.get(n - 1, k - 1), order - exp);
        for (i, c) in term.coeffs().iter().enumerate() {
            if !c.is_zero() {
                acc[exp + i] += c;
            }
        }
        n += 1;
        inv_poch = inv_poch.div_one_minus(n);
    }
    Series::from_coeffs(acc)
}

/// M_k(n) by the truncated pentagonal route:
/// `(-1)^(k-1) * (truncated_pentagonal(k) / (q;q)_inf - 1)`.
pub fn mk_series_alt(k: usize, order: usize) -> Series {
    assert!(k >= 1);
    let folded = &truncated_pentagonal(k, order) * &p_series(order);
    sign_for_k(k, &folded - &Series::one(order))
}

/// MP_k(n) by the structured sum
/// `(-q;q^2)_k/(q^2;q^2)_(k-1) * sum_j q^(k(2k+2j+1))
///  (-q^(2k+2j+3);q^2)_inf / (q^(2k+2j+2);q^2)_inf`.
pub fn mpk_series(k: usize, order: usize) -> Series {
    assert!(k >= 1);
    let mut prefactor = poch_fin(Sign::Minus, 1, 2, k, order);
    for i in 1..k {
        prefactor = prefactor.div_one_minus(2 * i);
    }
    // ratio_j = (-q^(2k+2j+3);q^2)_inf / (q^(2k+2j+2);q^2)_inf
    let mut ratio = poch_inf(Sign::Minus, 2 * k + 3, 2, order);
    let mut e = 2 * k + 2;
    while e <= order {
        ratio = ratio.div_one_minus(e);
        e += 2;
    }
    let mut acc = vec![BigInt::zero(); order + 1];
    let mut j = 0;
    loop {
        let exp = k * (2 * k + 2 * j + 1);
        if exp > order {
            break;
        }
        for (i, c) in ratio.coeffs()[..=(order - exp)].iter().enumerate() {
            if !c.is_zero() {
                acc[exp + i] += c;
            }
        }
        // step the ratio from j to j+1
        ratio = (&ratio - &ratio.shift(2 * k + 2 * j + 2)).div_one_plus(2 * k + 2 * j + 3);
        j += 1;
    }
    &prefactor * &Series::from_coeffs(acc)
}

/// MP_k(n) by the truncated triangular-theta route: solve
/// `(q;q^2)_inf/(q^2;q^2)_inf * truncated_gauss(k) = 1 + (-1)^(k-1) sum (-1)^n MP_k(n) q^n`
/// for the MP_k coefficients.
pub fn mpk_series_alt(k: usize, order: usize) -> Series {
    assert!(k >= 1);
    let mut ratio = poch_inf(Sign::Plus, 1, 2, order);
    let mut e = 2;
    while e <= order {
        ratio = ratio.div_one_minus(e);
        e += 2;
    }
    let folded = &ratio * &truncated_gauss(k, order);
    let alternating = sign_for_k(k, &folded - &Series::one(order));
    alternating.alternate()
}

fn table_from_series(kind: StatKind, k: Option<usize>, s: Series, route: Route) -> StatTable {
    StatTable::new(kind, k, s.coeffs().to_vec(), route)
}

pub fn gen_p(order: usize) -> StatTable {
    table_from_series(StatKind::P, None, p_series(order), Route::Series)
}

pub fn gen_big_q(order: usize) -> StatTable {
    table_from_series(StatKind::Q, None, big_q_series(order), Route::Series)
}

pub fn gen_b(order: usize) -> StatTable {
    table_from_series(StatKind::B, None, b_series(order), Route::Series)
}

pub fn gen_s(order: usize) -> StatTable {
    table_from_series(StatKind::S, None, s_series(order), Route::Series)
}

pub fn gen_big_s(order: usize) -> StatTable {
    table_from_series(StatKind::STotal, None, big_s_series(order), Route::Series)
}

pub fn gen_e(order: usize) -> StatTable {
    table_from_series(StatKind::E, None, e_series(order), Route::Series)
}

/// a(n) equals b(n); the table carries the alias in its route.
pub fn gen_a(order: usize) -> StatTable {
    table_from_series(StatKind::A, None, b_series(order), Route::AliasOfB)
}

/// c(n) equals b(n); the table carries the alias in its route.
pub fn gen_c(order: usize) -> StatTable {
    table_from_series(StatKind::C, None, b_series(order), Route::AliasOfB)
}

pub fn gen_mk(k: usize, order: usize) -> StatTable {
    table_from_series(StatKind::M, Some(k), mk_series(k, order), Route::Series)
}

pub fn gen_mpk(k: usize, order: usize) -> StatTable {
    table_from_series(StatKind::Mp, Some(k), mpk_series(k, order), Route::Series)
}

/// Series-route table for any statistic kind.
pub fn gen_table(kind: StatKind, k: Option<usize>, order: usize) -> Result<StatTable, StatError> {
    check_k(kind, k)?;
    Ok(match kind {
        StatKind::P => gen_p(order),
        StatKind::Q => gen_big_q(order),
        StatKind::B => gen_b(order),
        StatKind::S => gen_s(order),
        StatKind::STotal => gen_big_s(order),
        StatKind::E => gen_e(order),
        StatKind::A => gen_a(order),
        StatKind::C => gen_c(order),
        StatKind::M => gen_mk(k.unwrap(), order),
        StatKind::Mp => gen_mpk(k.unwrap(), order),
    })
}

/// Enumeration-route table for any statistic kind. Desk scale: cost grows
/// with p(n), so keep `order` below ~50.
pub fn oracle_table(kind: StatKind, k: Option<usize>, order: usize) -> Result<StatTable, StatError> {
    check_k(kind, k)?;
    let count = |f: &dyn Fn(usize) -> i64| -> Vec<BigInt> {
        (0..=order).map(|n| BigInt::from(f(n))).collect()
    };
    let values = match kind {
        StatKind::P => count(&enumerate::oracle_p),
        StatKind::Q => count(&enumerate::oracle_q_odd),
        StatKind::B => count(&enumerate::oracle_b),
        StatKind::S => count(&enumerate::oracle_s),
        StatKind::STotal => count(&enumerate::oracle_s_total),
        StatKind::E => count(&enumerate::oracle_e),
        StatKind::A => count(&enumerate::oracle_a),
        StatKind::C => count(&enumerate::oracle_c),
        StatKind::M => count(&|n| enumerate::oracle_mk(k.unwrap(), n)),
        StatKind::Mp => count(&|n| enumerate::oracle_mpk(k.unwrap(), n)),
    };
    Ok(StatTable::new(kind, k, values, Route::Oracle))
}

fn check_k(kind: StatKind, k: Option<usize>) -> Result<(), StatError> {
    if kind.takes_k() {
        match k {
            None => return Err(StatError::MissingK(kind)),
            Some(0) => return Err(StatError::ZeroK),
            Some(_) => {}
        }
    } else if k.is_some() {
        return Err(StatError::SuperfluousK(kind));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::series_from_i64;

    fn values_i64(t: &StatTable) -> Vec<i64> {
        t.values().iter().map(|v| i64::try_from(v).unwrap()).collect()
    }

    #[test]
    fn p_table() {
        assert_eq!(values_i64(&gen_p(5)), vec![1, 1, 2, 3, 5, 7]);
    }

    #[test]
    fn q_table() {
        assert_eq!(values_i64(&gen_big_q(5)), vec![1, 1, 1, 2, 2, 3]);
    }

    #[test]
    fn b_table() {
        assert_eq!(values_i64(&gen_b(6)), vec![0, 0, 1, 1, 3, 4, 6]);
    }

    #[test]
    fn s_table() {
        assert_eq!(values_i64(&gen_s(6)), vec![0, 1, 1, -1, -1, -3, 0]);
    }

    #[test]
    fn big_s_table() {
        assert_eq!(values_i64(&gen_big_s(5)), vec![0, 1, 3, 6, 12, 20]);
    }

    #[test]
    fn e_table() {
        assert_eq!(values_i64(&gen_e(7)), vec![1, 1, 1, 2, 3, 4, 5, 7]);
    }

    #[test]
    fn mk_reference_value() {
        let t = gen_mk(3, 18);
        assert_eq!(*t.value(18), BigInt::from(3));
    }

    #[test]
    fn mk_small_table() {
        assert_eq!(values_i64(&gen_mk(1, 5)), vec![0, 0, 1, 1, 2, 2]);
    }

    #[test]
    fn mk_vanishes_below_threshold() {
        for k in 1..=4 {
            let t = gen_mk(k, 60);
            let threshold = k * (3 * k + 1) / 2;
            for n in 0..threshold {
                assert!(t.value(n).is_zero(), "M_{}({}) should vanish", k, n);
            }
            assert!(!t.value(threshold).is_zero(), "M_{} at threshold", k);
        }
    }

    #[test]
    fn mpk_reference_value() {
        let t = gen_mpk(2, 19);
        assert_eq!(*t.value(19), BigInt::from(10));
    }

    #[test]
    fn mpk_vanishes_below_threshold() {
        for k in 1..=4 {
            let t = gen_mpk(k, 70);
            let threshold = k * (2 * k + 1);
            for n in 0..threshold {
                assert!(t.value(n).is_zero(), "MP_{}({}) should vanish", k, n);
            }
            assert!(!t.value(threshold).is_zero(), "MP_{} at threshold", k);
        }
    }

    #[test]
    fn dual_routes_agree_small() {
        for k in 1..=3 {
            assert_eq!(mk_series(k, 80), mk_series_alt(k, 80), "M_{}", k);
            assert_eq!(mpk_series(k, 80), mpk_series_alt(k, 80), "MP_{}", k);
        }
    }

    #[test]
    fn alias_tables_flag_their_route() {
        let a = gen_a(10);
        let c = gen_c(10);
        let b = gen_b(10);
        assert_eq!(a.route(), Route::AliasOfB);
        assert_eq!(c.route(), Route::AliasOfB);
        assert_eq!(a.values(), b.values());
        assert_eq!(c.values(), b.values());
        assert_eq!(b.route(), Route::Series);
    }

    #[test]
    fn k_parameter_validation() {
        assert_eq!(gen_table(StatKind::M, None, 10), Err(StatError::MissingK(StatKind::M)));
        assert_eq!(gen_table(StatKind::M, Some(0), 10), Err(StatError::ZeroK));
        assert_eq!(
            gen_table(StatKind::P, Some(2), 10),
            Err(StatError::SuperfluousK(StatKind::P))
        );
        assert!(gen_table(StatKind::Mp, Some(1), 10).is_ok());
    }

    #[test]
    fn divisor_identity_smoke() {
        // sum_j s(j) p(n-j) = d(n); the full n<=1000 run lives in the
        // property suite
        let n = 30;
        let conv = &s_series(n) * &p_series(n);
        assert_eq!(conv, lambert(1, n));
    }

    #[test]
    fn sign_helper() {
        let one = Series::one(3);
        assert_eq!(sign_for_k(1, one.clone()), one);
        assert_eq!(sign_for_k(2, one.clone()), one.neg());
        assert_eq!(sign_for_k(3, one.clone()), one);
    }

    #[test]
    fn table_metadata() {
        let t = gen_mk(2, 12);
        assert_eq!(t.kind(), StatKind::M);
        assert_eq!(t.k(), Some(2));
        assert_eq!(t.trunc_order(), 12);
        assert_eq!(t.series(), mk_series(2, 12));
        assert_eq!(StatKind::from_symbol("MP"), Some(StatKind::Mp));
        assert_eq!(StatKind::from_symbol("S"), Some(StatKind::STotal));
        assert_eq!(StatKind::from_symbol("s"), Some(StatKind::S));
        assert_eq!(StatKind::from_symbol("x"), None);
    }
}
