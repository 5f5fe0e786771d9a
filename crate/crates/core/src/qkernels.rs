//! q-analysis building blocks: Pochhammer products, Gaussian binomial
//! coefficients, pentagonal and triangular theta series, Lambert sums.
//!
//! Every function returns an exact [`Series`] at the requested truncation
//! order. Only Pochhammer arguments of the shape `(+-q^j; q^m)` are supported;
//! those are the only ones the partition generating functions need, and they
//! keep every computation inside integer coefficients.

use crate::series::Series;
use num_bigint::BigInt;
use num_traits::Zero;

/// Sign of the `a` parameter in `(a; q^m)` with `a = sign * q^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// Number of factors of a Pochhammer product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PochLen {
    Finite(usize),
    Infinite,
}

/// The product `(sign * q^j; q^m)_len = prod_i (1 - sign * q^(j + m*i))`.
///
/// `start_exp` and `step` must both be >= 1, so every factor has constant
/// term 1 and the product stays invertible. Infinite products truncate
/// automatically: a factor whose exponent exceeds the order cannot change
/// any retained coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PochSpec {
    sign: Sign,
    start_exp: usize,
    step: usize,
    len: PochLen,
}

impl PochSpec {
    pub fn new(sign: Sign, start_exp: usize, step: usize, len: PochLen) -> PochSpec {
        assert!(start_exp >= 1, "pochhammer start exponent must be >= 1");
        assert!(step >= 1, "pochhammer step must be >= 1");
        PochSpec {
            sign,
            start_exp,
            step,
            len,
        }
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn start_exp(&self) -> usize {
        self.start_exp
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn len(&self) -> PochLen {
        self.len
    }
}

/// Evaluate a Pochhammer product at truncation order `order`.
pub fn pochhammer(spec: &PochSpec, order: usize) -> Series {
    let mut coeffs = vec![BigInt::zero(); order + 1];
    coeffs[0] = BigInt::from(1);
    let max_factors = match spec.len {
        PochLen::Finite(n) => n,
        PochLen::Infinite => usize::MAX,
    };
    let mut i = 0usize;
    while i < max_factors {
        let exp = spec.start_exp + spec.step * i;
        if exp > order {
            break;
        }
        // in-place multiply by (1 -+ q^exp), descending so each source
        // coefficient is still the pre-multiplication value
        match spec.sign {
            Sign::Plus => {
                for idx in (exp..=order).rev() {
                    let prev = coeffs[idx - exp].clone();
                    coeffs[idx] -= prev;
                }
            }
            Sign::Minus => {
                for idx in (exp..=order).rev() {
                    let prev = coeffs[idx - exp].clone();
                    coeffs[idx] += prev;
                }
            }
        }
        i += 1;
    }
    Series::from_coeffs(coeffs)
}

/// `(sign * q^j; q^m)_infinity`.
pub fn poch_inf(sign: Sign, start_exp: usize, step: usize, order: usize) -> Series {
    pochhammer(&PochSpec::new(sign, start_exp, step, PochLen::Infinite), order)
}

/// `(sign * q^j; q^m)_n`.
pub fn poch_fin(sign: Sign, start_exp: usize, step: usize, n: usize, order: usize) -> Series {
    pochhammer(&PochSpec::new(sign, start_exp, step, PochLen::Finite(n)), order)
}

/// Euler's product `(q;q)_infinity`.
pub fn euler(order: usize) -> Series {
    poch_inf(Sign::Plus, 1, 1, order)
}

/// Generalized pentagonal number `j(3j-1)/2` for a signed index.
pub fn pentagonal_exponent(j: i64) -> i64 {
    j * (3 * j - 1) / 2
}

/// Signed pentagonal indices in the order `0, 1, -1, 2, -2, ...`, which
/// enumerates the generalized pentagonal numbers increasingly.
pub fn pentagonal_indices() -> impl Iterator<Item = i64> {
    (0i64..).flat_map(|j| if j == 0 { vec![0] } else { vec![j, -j] })
}

/// Triangular number `j(j+1)/2`.
pub fn triangular(j: usize) -> usize {
    j * (j + 1) / 2
}

/// The theta expansion of `(q;q)_infinity`: `sum_j (-1)^j q^(j(3j-1)/2)`
/// over all signed indices with exponent within the order.
pub fn pentagonal_theta(order: usize) -> Series {
    let mut coeffs = vec![BigInt::zero(); order + 1];
    for j in pentagonal_indices() {
        let e = pentagonal_exponent(j);
        if e > order as i64 {
            // for |j| >= 1 exponents of both signs only grow from here
            if j > 0 && pentagonal_exponent(-j) > order as i64 {
                break;
            }
            continue;
        }
        let sign = if j.rem_euclid(2) == 0 { 1 } else { -1 };
        coeffs[e as usize] += sign;
    }
    Series::from_coeffs(coeffs)
}

/// Partial pentagonal theta sum over `j = -(k-1), ..., k`.
pub fn truncated_pentagonal(k: usize, order: usize) -> Series {
    assert!(k >= 1);
    let mut coeffs = vec![BigInt::zero(); order + 1];
    for j in -(k as i64 - 1)..=k as i64 {
        let e = pentagonal_exponent(j);
        if e <= order as i64 {
            let sign = if j.rem_euclid(2) == 0 { 1 } else { -1 };
            coeffs[e as usize] += sign;
        }
    }
    Series::from_coeffs(coeffs)
}

/// The triangular-number theta series `sum_{j>=0} (-q)^(j(j+1)/2)`, whose
/// sign at exponent T_j follows the pattern `+ - - + + - - ...`.
pub fn gauss_theta(order: usize) -> Series {
    let mut coeffs = vec![BigInt::zero(); order + 1];
    for j in 0.. {
        let e = triangular(j);
        if e > order {
            break;
        }
        coeffs[e] += if e % 2 == 0 { 1 } else { -1 };
    }
    Series::from_coeffs(coeffs)
}

/// Partial triangular theta sum `sum_{j=0}^{2k-1} q^(j(j+1)/2)` with all-plus
/// signs (the `q -> -q` image of the signed form).
pub fn truncated_gauss(k: usize, order: usize) -> Series {
    assert!(k >= 1);
    let mut coeffs = vec![BigInt::zero(); order + 1];
    for j in 0..2 * k {
        let e = triangular(j);
        if e <= order {
            coeffs[e] += 1;
        }
    }
    Series::from_coeffs(coeffs)
}

/// Complete all-plus triangular theta series `sum_{T_j <= N} q^(T_j)`,
/// which equals `(q^2;q^2)_infinity / (q;q^2)_infinity`.
pub fn triangular_theta(order: usize) -> Series {
    let mut coeffs = vec![BigInt::zero(); order + 1];
    for j in 0.. {
        let e = triangular(j);
        if e > order {
            break;
        }
        coeffs[e] += 1;
    }
    Series::from_coeffs(coeffs)
}

/// Lambert sum `sum_{n>=1} q^(mn) / (1 - q^(mn))`. The coefficient of `q^r`
/// is the divisor count d(r/m) when m divides r, and 0 otherwise.
pub fn lambert(m: usize, order: usize) -> Series {
    assert!(m >= 1);
    let mut coeffs = vec![BigInt::zero(); order + 1];
    let mut base = m;
    while base <= order {
        let mut e = base;
        while e <= order {
            coeffs[e] += 1;
            e += base;
        }
        base += m;
    }
    Series::from_coeffs(coeffs)
}

/// Gaussian binomial coefficient as a truncated polynomial; zero when `k`
/// is outside `0..=n`.
///
/// Computed through the q-Pascal recurrence
/// `[n,k] = [n-1,k-1] + q^k [n-1,k]`, never through series division.
pub fn qbinomial(n: usize, k: i64, order: usize) -> Series {
    if k < 0 || k as usize > n {
        return Series::zero(order);
    }
    let k = (k as usize).min(n - k as usize); // symmetry keeps the triangle narrow
    let mut table = QBinomialTable::new(order, k);
    table.get(n, k).clone()
}

/// Memoized q-Pascal triangle for Gaussian binomials, rows extended on
/// demand, columns capped at construction. Each instance is private to its
/// computation, so there is no shared mutable state to guard.
pub struct QBinomialTable {
    order: usize,
    max_col: usize,
    rows: Vec<Vec<Series>>,
}

impl QBinomialTable {
    pub fn new(order: usize, max_col: usize) -> QBinomialTable {
        QBinomialTable {
            order,
            max_col,
            rows: vec![vec![Series::one(order)]],
        }
    }

    /// `[n, k]` for `k <= min(n, max_col)`.
    pub fn get(&mut self, n: usize, k: usize) -> &Series {
        assert!(k <= n && k <= self.max_col);
        while self.rows.len() <= n {
            let m = self.rows.len();
            let prev = &self.rows[m - 1];
            let cols = m.min(self.max_col);
            let mut row = Vec::with_capacity(cols + 1);
            row.push(Series::one(self.order));
            for j in 1..=cols {
                let left = &prev[j - 1];
                let entry = if j <= m - 1 {
                    left + &prev[j].shift(j)
                } else {
                    left.clone() // [m-1, m] is zero
                };
                row.push(entry);
            }
            self.rows.push(row);
        }
        &self.rows[n][k]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::series_from_i64;

    #[test]
    fn euler_product_expansion() {
        // brute-force expansion of (1-q)(1-q^2)...(1-q^12); nonzero exactly at
        // the generalized pentagonal numbers 0,1,2,5,7,12 with signs +,-,-,+,+,-
        let expected = series_from_i64(&[1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]);
        assert_eq!(euler(12), expected);
    }

    #[test]
    fn distinct_parts_product() {
        // (-q;q)_inf counts partitions into distinct parts
        assert_eq!(
            poch_inf(Sign::Minus, 1, 1, 5),
            series_from_i64(&[1, 1, 1, 2, 2, 3])
        );
    }

    #[test]
    fn empty_product_is_one() {
        assert_eq!(poch_fin(Sign::Plus, 1, 1, 0, 6), Series::one(6));
    }

    #[test]
    fn pentagonal_theta_matches_product() {
        assert_eq!(pentagonal_theta(300), euler(300));
    }

    #[test]
    fn gauss_theta_self_test() {
        // sum (-q)^(T_j) * (-q;q^2)_inf = (q^2;q^2)_inf
        let n = 300;
        let lhs = &gauss_theta(n) * &poch_inf(Sign::Minus, 1, 2, n);
        assert_eq!(lhs, poch_inf(Sign::Plus, 2, 2, n));
    }

    #[test]
    fn triangular_theta_self_test() {
        // all-plus form: sum q^(T_j) * (q;q^2)_inf = (q^2;q^2)_inf
        let n = 200;
        let lhs = &triangular_theta(n) * &poch_inf(Sign::Plus, 1, 2, n);
        assert_eq!(lhs, poch_inf(Sign::Plus, 2, 2, n));
    }

    #[test]
    fn truncated_pentagonal_first_segment() {
        assert_eq!(truncated_pentagonal(1, 5), series_from_i64(&[1, -1, 0, 0, 0, 0]));
    }

    #[test]
    fn truncated_gauss_first_segment() {
        // k=1 keeps j=0,1: 1 + q
        assert_eq!(truncated_gauss(1, 5), series_from_i64(&[1, 1, 0, 0, 0, 0]));
    }

    #[test]
    fn qbinomial_examples() {
        assert_eq!(qbinomial(4, 0, 8), Series::one(8));
        assert_eq!(qbinomial(4, 2, 8), series_from_i64(&[1, 1, 2, 1, 1, 0, 0, 0, 0]));
        assert_eq!(qbinomial(3, 5, 8), Series::zero(8));
        assert_eq!(qbinomial(3, -1, 8), Series::zero(8));
    }

    #[test]
    fn qbinomial_division_route_cross_check() {
        // [n,k] = (q;q)_n / ((q;q)_k (q;q)_(n-k)), the defining quotient
        for (n, k) in [(4usize, 2i64), (6, 3), (7, 2), (9, 4)] {
            let order = (k as usize) * (n - k as usize) + 4;
            let numer = poch_fin(Sign::Plus, 1, 1, n, order);
            let denom = &poch_fin(Sign::Plus, 1, 1, k as usize, order)
                * &poch_fin(Sign::Plus, 1, 1, n - k as usize, order);
            let quotient = &numer * &denom.inverse().unwrap();
            assert_eq!(qbinomial(n, k, order), quotient, "[{},{}]", n, k);
        }
    }

    #[test]
    fn lambert_divisor_counts() {
        assert_eq!(lambert(1, 6), series_from_i64(&[0, 1, 2, 2, 3, 2, 4]));
        assert_eq!(lambert(2, 6), series_from_i64(&[0, 0, 1, 0, 2, 0, 2]));
        assert_eq!(lambert(7, 6), Series::zero(6));
    }

    #[test]
    fn pentagonal_index_order() {
        let idx: Vec<i64> = pentagonal_indices().take(5).collect();
        assert_eq!(idx, vec![0, 1, -1, 2, -2]);
        let exps: Vec<i64> = pentagonal_indices()
            .take(9)
            .map(pentagonal_exponent)
            .collect();
        assert_eq!(exps, vec![0, 1, 2, 5, 7, 12, 15, 22, 26]);
    }
}
