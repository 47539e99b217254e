//! Weights of A_r written in the simple-root basis.
//!
//! Every weight handled here lies in the root lattice, so all coordinates are
//! integers. The Weyl vector is only ever stored doubled (see [`two_rho`]).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{argument, Error, Result};

/// An element of the root lattice of A_r; `coords[k]` is the coefficient of
/// α_{k+1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    /// Builds a weight from simple-root coordinates. The rank is the length.
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(argument("a weight needs rank at least 1"));
        }
        Ok(Weight { coords })
    }

    pub fn zero(rank: usize) -> Self {
        assert!(rank >= 1, "rank must be positive");
        Weight { coords: vec![0; rank] }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// True when every coordinate is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn height(&self) -> i64 {
        height(self)
    }

    pub(crate) fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: self.rank(),
            });
        }
        Ok(())
    }

    pub(crate) fn from_coords_unchecked(coords: Vec<i64>) -> Self {
        debug_assert!(!coords.is_empty());
        Weight { coords }
    }

    /// If this weight is α_i + ⋯ + α_j, returns that interval.
    pub fn as_interval(&self) -> Option<RootInterval> {
        let first = self.coords.iter().position(|&c| c != 0)?;
        let last = self.coords.iter().rposition(|&c| c != 0)?;
        if self.coords[first..=last].iter().all(|&c| c == 1) {
            RootInterval::new(self.rank(), first + 1, last + 1).ok()
        } else {
            None
        }
    }

    fn zip_with(&self, other: &Weight, f: impl Fn(i64, i64) -> i64) -> Weight {
        assert_eq!(
            self.rank(),
            other.rank(),
            "weights of different ranks cannot be combined"
        );
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        Weight {
            coords: rhs.coords.iter().map(|&c| self * c).collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -1 * self
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The positive root α_i + α_{i+1} + ⋯ + α_j of A_r, with 1 ≤ i ≤ j ≤ r.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootInterval {
    rank: usize,
    i: usize,
    j: usize,
}

impl RootInterval {
    pub fn new(rank: usize, i: usize, j: usize) -> Result<Self> {
        if rank == 0 {
            return Err(argument("rank must be at least 1"));
        }
        if !(1 <= i && i <= j && j <= rank) {
            return Err(argument(format!(
                "interval {i}..{j} is not within 1 ≤ i ≤ j ≤ {rank}"
            )));
        }
        Ok(RootInterval { rank, i, j })
    }

    /// The interval 1..r, i.e. the highest root.
    pub fn highest(rank: usize) -> Result<Self> {
        Self::new(rank, 1, rank)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    /// j − i + 1.
    pub fn height(&self) -> usize {
        self.j - self.i + 1
    }

    pub fn root(&self) -> Weight {
        interval_root(*self)
    }

    /// All intervals of the given rank, ordered by (i, j).
    pub fn all(rank: usize) -> impl Iterator<Item = RootInterval> {
        (1..=rank).flat_map(move |i| (i..=rank).map(move |j| RootInterval { rank, i, j }))
    }
}

impl fmt::Display for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.i, self.j)
    }
}

pub fn simple_root(rank: usize, i: usize) -> Result<Weight> {
    if rank == 0 || i == 0 || i > rank {
        return Err(argument(format!(
            "simple root index {i} is outside 1..={rank}"
        )));
    }
    let mut coords = vec![0; rank];
    coords[i - 1] = 1;
    Ok(Weight { coords })
}

pub fn interval_root(iv: RootInterval) -> Weight {
    let coords = (1..=iv.rank)
        .map(|k| i64::from(iv.i <= k && k <= iv.j))
        .collect();
    Weight { coords }
}

/// The highest root α̃ = α_1 + ⋯ + α_r.
pub fn highest_root(rank: usize) -> Weight {
    assert!(rank >= 1, "rank must be positive");
    Weight {
        coords: vec![1; rank],
    }
}

/// Sum of the simple-root coordinates. Negative for some non-positive weights.
pub fn height(w: &Weight) -> i64 {
    w.coords.iter().sum()
}

/// 2ρ, the sum of all positive roots. Coordinate k is k(r + 1 − k).
pub fn two_rho(rank: usize) -> Weight {
    assert!(rank >= 1, "rank must be positive");
    let r = rank as i64;
    Weight {
        coords: (1..=r).map(|k| k * (r + 1 - k)).collect(),
    }
}

/// All positive roots of A_r, ordered lexicographically by (i, j).
pub fn positive_roots(rank: usize) -> Vec<RootInterval> {
    RootInterval::all(rank).collect()
}
