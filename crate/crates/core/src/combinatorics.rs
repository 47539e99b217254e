//! Fibonacci numbers, binomials, and subsets without consecutive members.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{argument, Error, Result};

/// Default largest ground set for [`nonconsecutive_subsets`].
pub const DEFAULT_SUBSET_CAP: usize = 25;

/// F_1, …, F_n with F_1 = F_2 = 1. There is no F_0.
#[derive(Debug, Clone)]
pub struct FibTable {
    // values[k] = F_{k+1}
    values: Vec<BigUint>,
}

impl FibTable {
    pub fn new(n: usize) -> Self {
        let mut values: Vec<BigUint> = Vec::with_capacity(n.max(2));
        values.push(BigUint::one());
        values.push(BigUint::one());
        while values.len() < n {
            let k = values.len();
            let next = &values[k - 1] + &values[k - 2];
            values.push(next);
        }
        values.truncate(n.max(2));
        FibTable { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// F_n, if 1 ≤ n ≤ len.
    pub fn get(&self, n: usize) -> Option<&BigUint> {
        n.checked_sub(1).and_then(|k| self.values.get(k))
    }
}

pub fn fibonacci(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(argument("Fibonacci numbers are indexed from 1 (F_1 = F_2 = 1)"));
    }
    let (mut a, mut b) = (BigUint::one(), BigUint::one());
    for _ in 2..n {
        let c = &a + &b;
        a = b;
        b = c;
    }
    Ok(b)
}

/// C(n, k), and 0 whenever k < 0, n < 0 or k > n.
pub fn binomial_safe(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for m in 0..k {
        acc *= BigUint::from((n - m) as u64);
        acc /= BigUint::from((m + 1) as u64);
    }
    acc
}

/// Subsets of {1, …, n} with no two consecutive members, ordered by size and
/// then lexicographically.
pub fn nonconsecutive_subsets(n: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
    if n > cap {
        return Err(Error::Capacity {
            what: "ground-set size for subset enumeration",
            requested: n as i64,
            cap: cap as i64,
            hint: "a larger subset cap",
        });
    }
    Ok(nonconsecutive_subsets_in(1, n))
}

/// Nonconsecutive subsets of {lo, …, hi}; empty range gives only ∅.
pub(crate) fn nonconsecutive_subsets_in(lo: usize, hi: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    grow(lo, hi, &mut current, &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn grow(from: usize, hi: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    out.push(current.clone());
    for x in from..=hi {
        current.push(x);
        grow(x + 2, hi, current, out);
        current.pop();
    }
}

/// Ways to pick k pairwise nonconsecutive integers from {1, …, n}: C(n+1−k, k).
pub fn nonconsecutive_count_k(n: usize, k: usize) -> BigUint {
    binomial_safe(n as i64 + 1 - k as i64, k as i64)
}

/// Checks Σ_k C(n+1−k, k) = F_{n+2}.
pub fn fib_identity_check(n: usize) -> bool {
    let sum = (0..=n + 1).fold(BigUint::zero(), |acc, k| acc + nonconsecutive_count_k(n, k));
    fibonacci(n + 2).map(|f| f == sum).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fibonacci(1).unwrap(), big(1));
        assert_eq!(fibonacci(2).unwrap(), big(1));
        assert_eq!(fibonacci(3).unwrap(), big(2));
        assert_eq!(fibonacci(10).unwrap(), big(55));
        assert!(fibonacci(0).is_err());
    }

    #[test]
    fn table_follows_recurrence() {
        let table = FibTable::new(90);
        assert_eq!(table.len(), 90);
        assert_eq!(table.get(0), None);
        assert_eq!(table.get(1), Some(&big(1)));
        assert_eq!(table.get(2), Some(&big(1)));
        for n in 3..=90 {
            assert_eq!(table.get(n).unwrap(), &(table.get(n - 1).unwrap() + table.get(n - 2).unwrap()));
            assert_eq!(table.get(n).unwrap(), &fibonacci(n).unwrap());
        }
        assert_eq!(table.get(91), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_safe(5, 2), big(10));
        assert_eq!(binomial_safe(-1, 0), big(0));
        assert_eq!(binomial_safe(3, 0), big(1));
        assert_eq!(binomial_safe(3, 4), big(0));
        assert_eq!(binomial_safe(3, -1), big(0));
        assert_eq!(binomial_safe(60, 30), big(118264581564861424));
        // Pascal's rule
        for n in 1..30 {
            for k in 1..n {
                assert_eq!(binomial_safe(n, k), binomial_safe(n - 1, k - 1) + binomial_safe(n - 1, k));
            }
        }
    }

    #[test]
    fn subset_listings() {
        let s1 = nonconsecutive_subsets(1, DEFAULT_SUBSET_CAP).unwrap();
        assert_eq!(s1, vec![vec![], vec![1]]);
        let s3 = nonconsecutive_subsets(3, DEFAULT_SUBSET_CAP).unwrap();
        assert_eq!(s3, vec![vec![], vec![1], vec![2], vec![3], vec![1, 3]]);
        assert_eq!(nonconsecutive_subsets(0, DEFAULT_SUBSET_CAP).unwrap(), vec![Vec::<usize>::new()]);
        assert!(matches!(
            nonconsecutive_subsets(26, DEFAULT_SUBSET_CAP),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn counts_by_size() {
        assert_eq!(nonconsecutive_count_k(4, 2), big(3));
        assert_eq!(nonconsecutive_count_k(3, 2), big(1));
        for n in 0..10 {
            assert_eq!(nonconsecutive_count_k(n, 0), big(1));
        }
        for n in 0..=16 {
            let subsets = nonconsecutive_subsets(n, DEFAULT_SUBSET_CAP).unwrap();
            for k in 0..=n + 1 {
                let listed = subsets.iter().filter(|s| s.len() == k).count() as u64;
                assert_eq!(nonconsecutive_count_k(n, k), big(listed), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn subsets_are_fibonacci_many() {
        for n in 0..=20 {
            let subsets = nonconsecutive_subsets(n, DEFAULT_SUBSET_CAP).unwrap();
            assert_eq!(big(subsets.len() as u64), fibonacci(n + 2).unwrap());
            assert!(subsets.iter().all(|s| s.windows(2).all(|p| p[1] >= p[0] + 2)));
        }
    }

    #[test]
    fn identity_holds() {
        assert!(fib_identity_check(0));
        assert!(fib_identity_check(4));
        assert!((0..=30).all(fib_identity_check));
        // 1 + 4 + 3 = 8 = F_6
        let terms: Vec<_> = (0..=2).map(|k| nonconsecutive_count_k(4, k)).collect();
        assert_eq!(terms, vec![big(1), big(4), big(3)]);
    }

    #[test]
    fn shifted_ranges() {
        assert_eq!(nonconsecutive_subsets_in(5, 6), vec![vec![], vec![5], vec![6]]);
        assert_eq!(nonconsecutive_subsets_in(2, 1), vec![Vec::<usize>::new()]);
    }
}
