//! Brute-force partition oracles.
//!
//! Every statistic in [`crate::statistics`] has a counting definition in
//! plain English; this module generates all partitions of `n` and counts
//! straight from those definitions, with no generating functions involved.
//! That independence is the point: the series route and the oracle route
//! validate each other.
//!
//! Enumeration is desk-scale, intended for `n` up to roughly 45-50.

/// A partition: positive parts in nonincreasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Panics unless `parts` is nonincreasing with every part >= 1.
    pub fn new(parts: Vec<usize>) -> Partition {
        assert!(parts.iter().all(|&p| p >= 1), "parts must be positive");
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be nonincreasing"
        );
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// Iterative reverse-lexicographic successor: decrement the rightmost part
/// that exceeds 1, then refill the tail greedily. Returns false when the
/// all-ones partition has been passed.
fn advance(parts: &mut Vec<usize>) -> bool {
    let mut i = parts.len();
    let mut spare = 0;
    while i > 0 && parts[i - 1] == 1 {
        spare += 1;
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    parts.truncate(i);
    parts[i - 1] -= 1;
    let cap = parts[i - 1];
    let mut rem = spare + 1;
    while rem > 0 {
        let p = cap.min(rem);
        parts.push(p);
        rem -= p;
    }
    true
}

/// Visit every partition of `n` exactly once, in reverse-lexicographic
/// order, reusing one buffer. `n = 0` visits the single empty partition.
pub fn for_each_partition(n: usize, mut f: impl FnMut(&[usize])) {
    if n == 0 {
        f(&[]);
        return;
    }
    let mut parts = vec![n];
    loop {
        f(&parts);
        if !advance(&mut parts) {
            break;
        }
    }
}

/// Stream of owned partitions of `n`, in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> PartitionIter {
    PartitionIter {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

pub struct PartitionIter {
    next: Option<Vec<usize>>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        let item = Partition {
            parts: current.clone(),
        };
        if !current.is_empty() {
            let mut buf = current;
            if advance(&mut buf) {
                self.next = Some(buf);
            }
        }
        Some(item)
    }
}

fn is_distinct(parts: &[usize]) -> bool {
    parts.windows(2).all(|w| w[0] > w[1])
}

fn all_odd(parts: &[usize]) -> bool {
    parts.iter().all(|p| p % 2 == 1)
}

/// Visit each (value, multiplicity) run of a nonincreasing part list.
fn for_each_run(parts: &[usize], mut f: impl FnMut(usize, usize)) {
    let mut i = 0;
    while i < parts.len() {
        let v = parts[i];
        let mut m = 1;
        while i + m < parts.len() && parts[i + m] == v {
            m += 1;
        }
        f(v, m);
        i += m;
    }
}

/// p(n): number of partitions of n.
pub fn oracle_p(n: usize) -> i64 {
    let mut count = 0;
    for_each_partition(n, |_| count += 1);
    count
}

/// Q(n): partitions of n into odd parts.
pub fn oracle_q_odd(n: usize) -> i64 {
    let mut count = 0;
    for_each_partition(n, |p| {
        if all_odd(p) {
            count += 1;
        }
    });
    count
}

/// Partitions of n into distinct parts (equinumerous with Q(n)).
pub fn oracle_distinct(n: usize) -> i64 {
    let mut count = 0;
    for_each_partition(n, |p| {
        if is_distinct(p) {
            count += 1;
        }
    });
    count
}

/// a(n): partitions of n whose set of even parts has exactly one element.
pub fn oracle_a(n: usize) -> i64 {
    let mut count = 0;
    for_each_partition(n, |p| {
        let mut even_values = 0;
        for_each_run(p, |v, _| {
            if v % 2 == 0 {
                even_values += 1;
            }
        });
        if even_values == 1 {
            count += 1;
        }
    });
    count
}

/// c(n): partitions of n in which exactly one part value is repeated.
pub fn oracle_c(n: usize) -> i64 {
    let mut count = 0;
    for_each_partition(n, |p| {
        let mut repeated = 0;
        for_each_run(p, |_, m| {
            if m >= 2 {
                repeated += 1;
            }
        });
        if repeated == 1 {
            count += 1;
        }
    });
    count
}

/// b(n): total parts over the odd-part partitions of n, minus total parts
/// over the distinct-part partitions of n.
pub fn oracle_b(n: usize) -> i64 {
    let mut odd_parts = 0i64;
    let mut distinct_parts = 0i64;
    for_each_partition(n, |p| {
        if all_odd(p) {
            odd_parts += p.len() as i64;
        }
        if is_distinct(p) {
            distinct_parts += p.len() as i64;
        }
    });
    odd_parts - distinct_parts
}

/// s(n): over distinct-part partitions, parts in those of odd length minus
/// parts in those of even length.
pub fn oracle_s(n: usize) -> i64 {
    let mut acc = 0i64;
    for_each_partition(n, |p| {
        if is_distinct(p) {
            let len = p.len() as i64;
            acc += if len % 2 == 1 { len } else { -len };
        }
    });
    acc
}

/// S(n): total number of parts over all partitions of n.
pub fn oracle_s_total(n: usize) -> i64 {
    let mut acc = 0i64;
    for_each_partition(n, |p| acc += p.len() as i64);
    acc
}

/// e(n): partitions of n in which every even part occurs with even
/// multiplicity (odd parts unrestricted).
pub fn oracle_e(n: usize) -> i64 {
    let mut count = 0;
    for_each_partition(n, |p| {
        let mut ok = true;
        for_each_run(p, |v, m| {
            if v % 2 == 0 && m % 2 == 1 {
                ok = false;
            }
        });
        if ok {
            count += 1;
        }
    });
    count
}

/// M_k(n): partitions of n in which k is the least positive integer that is
/// not a part, and the parts greater than k outnumber the parts less than k.
pub fn oracle_mk(k: usize, n: usize) -> i64 {
    assert!(k >= 1);
    let mut count = 0;
    for_each_partition(n, |p| {
        let mut expected = 1;
        for &v in p.iter().rev() {
            if v == expected {
                expected += 1;
            } else if v > expected {
                break;
            }
        }
        if expected != k {
            return;
        }
        let greater = p.iter().filter(|&&v| v > k).count();
        let less = p.iter().filter(|&&v| v < k).count();
        if greater > less {
            count += 1;
        }
    });
    count
}

/// MP_k(n): partitions of n whose smallest part exceeding 2k-1 is odd with
/// multiplicity exactly k, while every other odd part appears at most once.
///
/// "First part larger than 2k-1" is read as the smallest such part: that is
/// the reading the reference count MP_2(19) = 10 pins down, and the one the
/// generating-function route reproduces.
pub fn oracle_mpk(k: usize, n: usize) -> i64 {
    assert!(k >= 1);
    let threshold = 2 * k - 1;
    let mut count = 0;
    for_each_partition(n, |p| {
        // smallest part exceeding the threshold
        let pivot = match p.iter().rev().find(|&&v| v > threshold) {
            Some(&v) => v,
            None => return,
        };
        if pivot % 2 == 0 {
            return;
        }
        let mut ok = true;
        let mut pivot_mult = 0;
        for_each_run(p, |v, m| {
            if v == pivot {
                pivot_mult = m;
            } else if v % 2 == 1 && m > 1 {
                ok = false;
            }
        });
        if ok && pivot_mult == k {
            count += 1;
        }
    });
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        assert_eq!(oracle_p(5), 7);
        assert_eq!(oracle_p(0), 1);
        assert_eq!(oracle_p(10), 42);
        assert_eq!(partitions_of(0).count(), 1);
        assert_eq!(partitions_of(0).next().unwrap().parts(), &[] as &[usize]);
    }

    #[test]
    fn reverse_lex_order_n6() {
        let got: Vec<Vec<usize>> = partitions_of(6).map(|p| p.parts().to_vec()).collect();
        let expected: Vec<Vec<usize>> = vec![
            vec![6],
            vec![5, 1],
            vec![4, 2],
            vec![4, 1, 1],
            vec![3, 3],
            vec![3, 2, 1],
            vec![3, 1, 1, 1],
            vec![2, 2, 2],
            vec![2, 2, 1, 1],
            vec![2, 1, 1, 1, 1],
            vec![1, 1, 1, 1, 1, 1],
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn partition_type_invariants() {
        let p = Partition::new(vec![4, 2, 2, 1]);
        assert_eq!(p.weight(), 9);
        assert_eq!(p.parts(), &[4, 2, 2, 1]);
    }

    #[test]
    #[should_panic(expected = "nonincreasing")]
    fn partition_rejects_increasing() {
        let _ = Partition::new(vec![1, 2]);
    }

    #[test]
    fn reference_counts_at_5() {
        assert_eq!(oracle_a(5), 4);
        assert_eq!(oracle_b(5), 4);
        assert_eq!(oracle_c(5), 4);
        assert_eq!(oracle_s(5), -3);
        assert_eq!(oracle_s_total(5), 20);
        assert_eq!(oracle_q_odd(5), 3);
    }

    #[test]
    fn even_multiplicity_counts() {
        let got: Vec<i64> = (0..=4).map(oracle_e).collect();
        assert_eq!(got, vec![1, 1, 1, 2, 3]);
    }

    #[test]
    fn least_gap_counts() {
        assert_eq!(oracle_mk(3, 18), 3);
        assert_eq!(oracle_mk(1, 1), 0); // the partition "1" contains 1
        let m1: Vec<i64> = (0..=5).map(|n| oracle_mk(1, n)).collect();
        assert_eq!(m1, vec![0, 0, 1, 1, 2, 2]);
    }

    #[test]
    fn odd_pivot_counts() {
        assert_eq!(oracle_mpk(2, 19), 10);
        assert_eq!(oracle_mpk(2, 10), 1); // 5+5
        let mp1: Vec<i64> = (0..=7).map(|n| oracle_mpk(1, n)).collect();
        assert_eq!(mp1, vec![0, 0, 0, 1, 1, 1, 1, 2]); // n=7: {7}, {4,3}
    }

    #[test]
    fn euler_equinumeracy() {
        for n in 0..=40 {
            assert_eq!(oracle_q_odd(n), oracle_distinct(n), "n={}", n);
        }
    }

    #[test]
    fn theorem_counts_agree() {
        for n in 1..=40 {
            let b = oracle_b(n);
            assert_eq!(oracle_a(n), b, "a(n)=b(n) at n={}", n);
            assert_eq!(oracle_c(n), b, "c(n)=b(n) at n={}", n);
        }
    }
}
