//! Weyl alternation sets 𝒜(λ, μ) = {σ ∈ W : ℘(σ(λ+ρ) − ρ − μ) > 0}.
//!
//! Two independent constructions are provided: [`alt_set_bruteforce`] scans
//! the whole Weyl group, while [`alt_set_characterized`] builds 𝒜(α̃, μ) for a
//! positive root μ = α_i + ⋯ + α_j directly as products of pairwise
//! nonconsecutive generators drawn from {2, …, i−1} and {j+1, …, r−1}.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial_safe, fibonacci, nonconsecutive_subsets_in};
use crate::error::{argument, Error, Result};
use crate::exec::{self, Settings};
use crate::partition::PartitionFunction;
use crate::weights::{highest_root, RootInterval, Weight};
use crate::weyl::{check_brute_cap, enumerate_all, WeylElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    BruteForce,
    Characterized,
}

/// A finite set of Weyl group elements, kept sorted by (length, reduced word)
/// and free of duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "AltSetRepr", try_from = "AltSetRepr")]
pub struct AlternationSet {
    rank: usize,
    lambda: Weight,
    mu: Weight,
    elements: Vec<WeylElement>,
    provenance: Provenance,
}

impl AlternationSet {
    fn from_unsorted(
        lambda: Weight,
        mu: Weight,
        elements: Vec<WeylElement>,
        provenance: Provenance,
    ) -> Self {
        let mut keyed: Vec<_> = elements
            .into_iter()
            .map(|s| ((s.length(), s.reduced_word()), s))
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.dedup_by(|a, b| a.1 == b.1);
        AlternationSet {
            rank: lambda.rank(),
            lambda,
            mu,
            elements: keyed.into_iter().map(|(_, s)| s).collect(),
            provenance,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn mu(&self) -> &Weight {
        &self.mu
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn contains(&self, sigma: &WeylElement) -> bool {
        self.elements.contains(sigma)
    }

    /// Equality of the underlying sets, ignoring provenance.
    pub fn same_elements(&self, other: &AlternationSet) -> bool {
        let a: BTreeSet<_> = self.elements.iter().collect();
        let b: BTreeSet<_> = other.elements.iter().collect();
        self.rank == other.rank && a == b
    }
}

/// 𝒜(λ, μ) by testing every σ ∈ W.
pub fn alt_set_bruteforce(lambda: &Weight, mu: &Weight, settings: &Settings) -> Result<AlternationSet> {
    let rank = lambda.rank();
    mu.check_rank(rank)?;
    check_brute_cap(rank, settings.brute_cap)?;
    let table = PartitionFunction::shared(rank);
    let group: Vec<WeylElement> = enumerate_all(rank, settings.brute_cap)?.collect();
    let members = exec::filter(group, settings.execution, |sigma| {
        let xi = &sigma.shifted_action(lambda).expect("ranks checked") - mu;
        xi.is_nonnegative() && !table.kostant_count(&xi).expect("ranks checked").is_zero()
    });
    Ok(AlternationSet::from_unsorted(
        lambda.clone(),
        mu.clone(),
        members,
        Provenance::BruteForce,
    ))
}

/// 𝒜(α̃, α_i + ⋯ + α_j) as products of nonconsecutive commuting generators.
pub fn alt_set_characterized(iv: RootInterval) -> AlternationSet {
    let rank = iv.rank();
    let lambda = highest_root(rank);
    let mu = iv.root();
    let elements = characterized_words(iv)
        .map(|word| WeylElement::from_word(rank, &word).expect("letters lie in 2..=r-1"))
        .collect::<Vec<_>>();
    for sigma in [elements.first(), elements.last()].into_iter().flatten() {
        let xi = &sigma.shifted_action(&lambda).expect("same rank") - &mu;
        assert!(xi.is_nonnegative(), "{sigma} is not in the alternation set");
    }
    AlternationSet::from_unsorted(lambda, mu, elements, Provenance::Characterized)
}

/// Ascending generator lists of the characterized elements.
pub(crate) fn characterized_words(iv: RootInterval) -> impl Iterator<Item = Vec<usize>> {
    let left = nonconsecutive_subsets_in(2, iv.i().saturating_sub(1));
    let right = nonconsecutive_subsets_in(iv.j() + 1, iv.rank().saturating_sub(1));
    left.into_iter().flat_map(move |l| {
        right.clone().into_iter().map(move |r| {
            let mut word = l.clone();
            word.extend(r);
            word
        })
    })
}

/// |𝒜(α̃, α_i + ⋯ + α_j)| = F_i · F_{r−j+1}.
pub fn alt_cardinality(iv: RootInterval) -> BigUint {
    let left = fibonacci(iv.i()).expect("i ≥ 1");
    let right = fibonacci(iv.rank() - iv.j() + 1).expect("r − j + 1 ≥ 1");
    left * right
}

/// Which end of the simple-root chain μ leaves uncovered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// μ = α_i + ⋯ + α_r with i ≥ 2; the boundary generator is s_{i−1}.
    LeftBoundary,
    /// μ = α_1 + ⋯ + α_j with j ≤ r−1; the boundary generator is s_{j+1}.
    RightBoundary,
}

impl Side {
    fn check(self, iv: RootInterval) -> Result<()> {
        let ok = match self {
            Side::RightBoundary => iv.i() == 1 && iv.j() < iv.rank(),
            Side::LeftBoundary => iv.j() == iv.rank() && iv.i() >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(argument(format!(
                "interval {iv} in rank {} is not one-sided on the {self:?} side",
                iv.rank()
            )))
        }
    }

    /// Index of the boundary generator for a one-sided interval.
    pub fn boundary_generator(self, iv: RootInterval) -> usize {
        match self {
            Side::RightBoundary => iv.j() + 1,
            Side::LeftBoundary => iv.i() - 1,
        }
    }

    /// One more than the number of generators allowed on this side.
    fn free_span(self, iv: RootInterval) -> i64 {
        match self {
            Side::RightBoundary => (iv.rank() - iv.j()) as i64,
            Side::LeftBoundary => iv.i() as i64 - 1,
        }
    }
}

/// Counts elements of 𝒜(α̃, μ) for a one-sided μ by the boundary condition.
///
/// With `contains`, `k` counts the generators other than the boundary one
/// (so the elements have length k + 1); otherwise `k` is the length itself.
/// Right side gives C(r−j−2−k, k) or C(r−j−1−k, k); left side gives
/// C(i−3−k, k) or C(i−2−k, k).
pub fn count_by_length(iv: RootInterval, k: usize, side: Side, contains: bool) -> Result<BigUint> {
    side.check(iv)?;
    let k = k as i64;
    let top = side.free_span(iv) - 2 + i64::from(!contains) - k;
    Ok(binomial_safe(top, k))
}

/// Largest `k` (in the sense of [`count_by_length`]) with a nonzero count,
/// clamped below at 0.
pub fn max_length(iv: RootInterval, side: Side, contains: bool) -> Result<usize> {
    side.check(iv)?;
    let numerator = side.free_span(iv) - 2 + i64::from(!contains);
    Ok(numerator.div_euclid(2).max(0) as usize)
}

/// Serialized form of an [`AlternationSet`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AltSetRepr {
    pub rank: usize,
    pub lambda: Vec<i64>,
    /// [i, j] when μ is a positive root.
    pub mu: Option<[usize; 2]>,
    pub mu_weight: Vec<i64>,
    pub count: usize,
    pub elements: Vec<Vec<usize>>,
    pub provenance: Provenance,
}

impl From<AlternationSet> for AltSetRepr {
    fn from(set: AlternationSet) -> Self {
        AltSetRepr {
            rank: set.rank,
            lambda: set.lambda.coords().to_vec(),
            mu: set.mu.as_interval().map(|iv| [iv.i(), iv.j()]),
            mu_weight: set.mu.coords().to_vec(),
            count: set.elements.len(),
            elements: set.elements.iter().map(WeylElement::reduced_word).collect(),
            provenance: set.provenance,
        }
    }
}

impl TryFrom<AltSetRepr> for AlternationSet {
    type Error = Error;

    fn try_from(repr: AltSetRepr) -> Result<Self> {
        let lambda = Weight::new(repr.lambda)?;
        let mu = Weight::new(repr.mu_weight)?;
        lambda.check_rank(repr.rank)?;
        mu.check_rank(repr.rank)?;
        if let Some([i, j]) = repr.mu {
            if RootInterval::new(repr.rank, i, j)?.root() != mu {
                return Err(argument("mu interval disagrees with mu_weight"));
            }
        }
        let elements = repr
            .elements
            .iter()
            .map(|w| WeylElement::from_word(repr.rank, w))
            .collect::<Result<Vec<_>>>()?;
        if elements.len() != repr.count {
            return Err(argument("count disagrees with the number of elements"));
        }
        Ok(AlternationSet::from_unsorted(lambda, mu, elements, repr.provenance))
    }
}
