//! Kostant's partition function for A_r and its q-analog.
//!
//! ℘_q(ξ) has as coefficient of q^d the number of multisets of d positive
//! roots summing to ξ; ℘(ξ) is its value at q = 1.

use std::sync::Arc;

use dashmap::DashMap;
use num_bigint::BigUint;
use once_cell::sync::Lazy;

use crate::error::{argument, Error, Result};
use crate::weights::{positive_roots, Weight};

pub use crate::poly::{Polynomial, QPolynomial, SignedQPolynomial};

/// Default height bound for [`kostant_q_oracle`].
pub const DEFAULT_ORACLE_HEIGHT_CAP: i64 = 24;

/// Memoized ℘_q for one fixed rank.
///
/// Positive roots are ordered by (i, j); a decomposition is counted by
/// choosing how many copies of each root to use in that order. The memo is
/// keyed by (root index, remaining weight) and is safe to share across
/// threads.
#[derive(Debug)]
pub struct PartitionFunction {
    rank: usize,
    // 0-based inclusive (start, end) for each positive root
    roots: Vec<(usize, usize)>,
    memo: DashMap<(usize, Vec<i64>), QPolynomial>,
    memo_cap: Option<usize>,
}

static SHARED: Lazy<DashMap<usize, Arc<PartitionFunction>>> = Lazy::new(DashMap::new);

impl PartitionFunction {
    pub fn new(rank: usize) -> Self {
        Self::with_memo_cap(rank, None)
    }

    /// A table whose memo stops growing once it holds `cap` entries.
    pub fn with_memo_cap(rank: usize, cap: Option<usize>) -> Self {
        assert!(rank >= 1, "rank must be positive");
        PartitionFunction {
            rank,
            roots: positive_roots(rank)
                .into_iter()
                .map(|iv| (iv.i() - 1, iv.j() - 1))
                .collect(),
            memo: DashMap::new(),
            memo_cap: cap,
        }
    }

    /// The process-wide table for `rank`, created on first use.
    pub fn shared(rank: usize) -> Arc<PartitionFunction> {
        SHARED
            .entry(rank)
            .or_insert_with(|| Arc::new(PartitionFunction::new(rank)))
            .clone()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn kostant_q(&self, xi: &Weight) -> Result<QPolynomial> {
        xi.check_rank(self.rank)?;
        if !xi.is_nonnegative() {
            return Ok(QPolynomial::zero());
        }
        Ok(self.solve(0, xi.coords()))
    }

    pub fn kostant_count(&self, xi: &Weight) -> Result<BigUint> {
        Ok(self.kostant_q(xi)?.eval_at_one())
    }

    fn solve(&self, t: usize, rem: &[i64]) -> QPolynomial {
        if rem.iter().all(|&c| c == 0) {
            return QPolynomial::one();
        }
        let Some(&(start, end)) = self.roots.get(t) else {
            return QPolynomial::zero();
        };
        // no later root touches coordinates before `start`
        if rem[..start].iter().any(|&c| c != 0) {
            return QPolynomial::zero();
        }
        let key = (t, rem.to_vec());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }

        let most = rem[start..=end].iter().copied().min().unwrap_or(0);
        // the last root starting at `start` must absorb all of rem[start]
        let copies = if end + 1 == self.rank {
            if most != rem[start] {
                return self.remember(key, QPolynomial::zero());
            }
            most..=most
        } else {
            0..=most
        };

        let mut result = QPolynomial::zero();
        let mut next = rem.to_vec();
        for c in copies {
            for (x, &r) in next[start..=end].iter_mut().zip(&rem[start..=end]) {
                *x = r - c;
            }
            let sub = self.solve(t + 1, &next);
            if !sub.is_zero() {
                result += &sub.shift(c as usize);
            }
        }

        self.remember(key, result)
    }

    fn remember(&self, key: (usize, Vec<i64>), value: QPolynomial) -> QPolynomial {
        if self.memo_cap.is_none_or(|cap| self.memo.len() < cap) {
            self.memo.insert(key, value.clone());
        }
        value
    }
}

/// ℘_q(ξ) for A_r, using the shared memo for `rank`.
pub fn kostant_q(rank: usize, xi: &Weight) -> Result<QPolynomial> {
    xi.check_rank(rank)?;
    PartitionFunction::shared(rank).kostant_q(xi)
}

/// ℘(ξ), the number of ways to write ξ as a sum of positive roots.
pub fn kostant_count(rank: usize, xi: &Weight) -> Result<BigUint> {
    Ok(kostant_q(rank, xi)?.eval_at_one())
}

/// ℘_q by exhaustive depth-first enumeration of nonincreasing root sequences.
///
/// Shares nothing with [`PartitionFunction`] beyond the list of positive
/// roots; it exists to check the memoized table.
pub fn kostant_q_oracle(rank: usize, xi: &Weight, height_cap: i64) -> Result<QPolynomial> {
    xi.check_rank(rank)?;
    let height = xi.height();
    if height > height_cap {
        return Err(Error::Capacity {
            what: "height for the enumeration oracle",
            requested: height,
            cap: height_cap,
            hint: "a larger oracle height cap",
        });
    }
    if !xi.is_nonnegative() {
        return Ok(QPolynomial::zero());
    }
    let roots: Vec<Vec<i64>> = positive_roots(rank).iter().map(|iv| iv.root().coords().to_vec()).collect();
    let mut counts = vec![0u64; height.max(0) as usize + 1];
    let mut rem = xi.coords().to_vec();
    enumerate(&roots, 0, &mut rem, 0, &mut counts);
    Ok(QPolynomial::from_coeffs(counts.into_iter().map(BigUint::from).collect()))
}

fn enumerate(roots: &[Vec<i64>], from: usize, rem: &mut [i64], depth: usize, counts: &mut [u64]) {
    if rem.iter().all(|&c| c == 0) {
        counts[depth] = counts[depth]
            .checked_add(1)
            .expect("oracle count overflowed u64");
        return;
    }
    for t in from..roots.len() {
        let root = &roots[t];
        if root.iter().zip(rem.iter()).all(|(a, b)| a <= b) {
            for (x, a) in rem.iter_mut().zip(root) {
                *x -= a;
            }
            enumerate(roots, t, rem, depth + 1, counts);
            for (x, a) in rem.iter_mut().zip(root) {
                *x += a;
            }
        }
    }
}

/// q(1 + q)^{s−1}, the value of ℘_q on any consecutive sum of s simple roots.
pub fn consecutive_closed_form(s: usize) -> Result<QPolynomial> {
    if s == 0 {
        return Err(argument("a consecutive root sum needs at least one simple root"));
    }
    Ok(QPolynomial::one_plus_q_pow(s - 1).shift(1))
}
