//! Re-runnable checks of the characterization, counting and closed-form
//! results, each comparing two independent computations exactly.
//!
//! The CLI `verify` subcommand is a thin wrapper around [`run_all`].

use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::alternation::{
    alt_cardinality, alt_set_bruteforce, alt_set_characterized, count_by_length, max_length, Side,
};
use crate::combinatorics::{
    fib_identity_check, nonconsecutive_count_k, nonconsecutive_subsets, DEFAULT_SUBSET_CAP,
};
use crate::exec::Settings;
use crate::multiplicity::{
    closed_form_term, multiplicity_at_one, predicted_q_multiplicity, q_multiplicity, q_multiplicity_closed_with,
    Method,
};
use crate::partition::{consecutive_closed_form, kostant_q, kostant_q_oracle, SignedQPolynomial};
use crate::weights::{highest_root, RootInterval, Weight};
use crate::weyl::enumerate_all;

pub const DEFAULT_SEED: u64 = 0x5eed_2025;

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    /// Largest rank for checks that enumerate the whole Weyl group.
    pub max_brute_rank: usize,
    /// Largest rank for the closed-form summation check.
    pub max_closed_rank: usize,
    pub seed: u64,
    pub settings: Settings,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_brute_rank: 7,
            max_closed_rank: 25,
            seed: DEFAULT_SEED,
            settings: Settings::default(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    /// Number of individual comparisons made.
    pub checked: usize,
    pub detail: String,
    pub millis: u128,
}

struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self, id: u32, name: &'static str, started: Instant) -> Outcome {
        let passed = self.failures.is_empty();
        let detail = if passed {
            format!("{} exact comparisons", self.checked)
        } else {
            let shown: Vec<_> = self.failures.iter().take(3).cloned().collect();
            format!("{} of {} failed; first: {}", self.failures.len(), self.checked, shown.join("; "))
        };
        Outcome {
            id,
            name,
            passed,
            checked: self.checked,
            detail,
            millis: started.elapsed().as_millis(),
        }
    }
}

fn sum_q_powers(from: usize, to: usize) -> SignedQPolynomial {
    (from..=to).fold(SignedQPolynomial::zero(), |acc, t| acc + SignedQPolynomial::q_pow(t))
}

/// Brute-force alternation sets equal the characterized ones.
pub fn alternation_characterization(cfg: &VerifyConfig) -> Outcome {
    let started = Instant::now();
    let mut t = Tally::new();
    for r in 1..=cfg.max_brute_rank {
        let lambda = highest_root(r);
        for mu in RootInterval::all(r) {
            let ok = match alt_set_bruteforce(&lambda, &mu.root(), &cfg.settings) {
                Ok(brute) => brute.same_elements(&alt_set_characterized(mu)),
                Err(_) => false,
            };
            t.check(ok, || format!("r={r} μ={mu}"));
        }
    }
    t.finish(1, "alternation set characterization", started)
}

/// |𝒜| = F_i · F_{r−j+1}.
pub fn alternation_cardinality(_cfg: &VerifyConfig) -> Outcome {
    let started = Instant::now();
    let mut t = Tally::new();
    for r in 1..=16 {
        for mu in RootInterval::all(r) {
            let n = alt_set_characterized(mu).len();
            t.check(BigUint::from(n) == alt_cardinality(mu), || format!("r={r} μ={mu}: {n}"));
        }
    }
    t.finish(2, "Fibonacci cardinality", started)
}

/// The full alternating sum equals q^{r−h(μ)}.
pub fn kwmf_power_of_q(cfg: &VerifyConfig) -> Outcome {
    let started = Instant::now();
    let mut t = Tally::new();
    for r in 1..=cfg.max_brute_rank {
        let lambda = highest_root(r);
        for mu in RootInterval::all(r) {
            let got = q_multiplicity(&lambda, &mu.root(), Method::KwmfFull, &cfg.settings);
            let want = predicted_q_multiplicity(mu).to_signed();
            t.check(got.is_ok_and(|rep| rep.q_multiplicity == want), || format!("r={r} μ={mu}"));
        }
    }
    t.finish(3, "q-multiplicity via the full Weyl group", started)
}

/// The closed-form alternating sum equals q^{r−h(μ)}.
pub fn closed_power_of_q(cfg: &VerifyConfig) -> Outcome {
    let started = Instant::now();
    let mut t = Tally::new();
    for r in 1..=cfg.max_closed_rank {
        for mu in RootInterval::all(r) {
            let got = q_multiplicity_closed_with(mu, cfg.settings.execution);
            t.check(got == predicted_q_multiplicity(mu).to_signed(), || format!("r={r} μ={mu}: {got}"));
        }
    }
    t.finish(4, "q-multiplicity via closed-form terms", started)
}

/// Multiplicity one for every root, positive or Weyl-conjugate.
pub fn multiplicity_one(cfg: &VerifyConfig) -> Outcome {
    let started = Instant::now();
    let mut t = Tally::new();
    let one = BigInt::from(1);
    for r in 1..=cfg.max_brute_rank {
        let lambda = highest_root(r);
        for mu in RootInterval::all(r) {
            let m = multiplicity_at_one(&lambda, &mu.root(), Method::KwmfFull, &cfg.settings);
            t.check(m.as_ref() == Ok(&one), || format!("r={r} μ={mu}"));
        }
    }
    for r in 1..=cfg.max_brute_rank.min(4) {
        let lambda = highest_root(r);
        for mu in weyl_images_of_positive_roots(r, &cfg.settings) {
            let m = multiplicity_at_one(&lambda, &mu, Method::KwmfFull, &cfg.settings);
            t.check(m.as_ref() == Ok(&one), || format!("r={r} μ={mu}"));
        }
    }
    t.finish(5, "multiplicity one at q = 1", started)
}

/// Distinct σ(μ) over σ ∈ W and positive roots μ.
pub fn weyl_images_of_positive_roots(rank: usize, settings: &Settings) -> Vec<Weight> {
    let mut images = std::collections::BTreeSet::new();
    let group: Vec<_> = enumerate_all(rank, settings.brute_cap)
        .map(|it| it.collect())
        .unwrap_or_default();
    for mu in RootInterval::all(rank) {
        for sigma in &group {
            images.insert(sigma.apply(&mu.root()).expect("same rank"));
        }
    }
    images.into_iter().collect()
}

/// ℘_q of a consecutive root sum is q(1+q)^{s−1}.
pub fn consecutive_sums(_cfg: &VerifyConfig) -> Outcome {
    let started = Instant::now();
    let mut t = Tally::new();
    for r in 1..=10 {
        for mu in RootInterval::all(r) {
            let got = kostant_q(r, &mu.root());
            let want = consecutive_closed_form(mu.height());
            t.check(got.is_ok() && got == want, || format!("r={r} μ={mu}"));
        }
    }
    t.finish(6, "partition function of consecutive sums", started)
}

/// Closed-form terms equal the partition-function table term by term.
pub fn closed_terms_vs_table(_cfg: &VerifyConfig) -> Outcome {
    let started = Instant::now();
    let mut t = Tally::new();
    for r in 1..=9 {
        let lambda = highest_root(r);
        for mu in RootInterval::all(r) {
            for sigma in alt_set_characterized(mu).elements() {
                let xi = &sigma.shifted_action(&lambda).expect("same rank") - &mu.root();
                let table = kostant_q(r, &xi);
                let closed = closed_form_term(mu, sigma);
                t.check(table.is_ok() && table == closed, || format!("r={r} μ={mu} σ={sigma}"));
            }
        }
    }
    t.finish(7, "closed-form terms against the partition table", started)
}

/// All weights of A_r with coordinates in 0..=max.
pub fn box_weights(rank: usize, max: i64) -> Vec<Weight> {
    let base = (max + 1) as usize;
    (0..base.pow(rank as u32))
        .map(|code| {
            let coords = (0..rank)
                .map(|k| ((code / base.pow(k as u32)) % base) as i64)
                .collect();
            Weight::new(coords).expect("rank ≥ 1")
        })
        .collect()
}

/// Seeded random weights of A_r with coordinates in 0..=max.
pub fn random_weights(rank: usize, max: i64, count: usize, seed: u64) -> Vec<Weight> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| Weight::new((0..rank).map(|_| rng.gen_range(0..=max)).collect()).expect("rank ≥ 1"))
        .collect()
}

/// The memoized table agrees with exhaustive enumeration.
pub fn oracle_agreement(cfg: &VerifyConfig) -> Outcome {
    let started = Instant::now();
    let mut t = Tally::new();
    let mut weights: Vec<(usize, Weight)> = box_weights(4, 2).into_iter().map(|w| (4, w)).collect();
    weights.extend(random_weights(5, 3, 200, cfg.seed).into_iter().map(|w| (5, w)));
    for (r, xi) in weights {
        let fast = kostant_q(r, &xi);
        let slow = kostant_q_oracle(r, &xi, crate::partition::DEFAULT_ORACLE_HEIGHT_CAP);
        t.check(fast.is_ok() && fast == slow, || format!("r={r} ξ={xi}"));
    }
    t.finish(8, "partition table against the enumeration oracle", started)
}

/// Σ_k C(n+1−k, k) = F_{n+2}, and subset listings match the counts.
pub fn fibonacci_identity(_cfg: &VerifyConfig) -> Outcome {
    let started = Instant::now();
    let mut t = Tally::new();
    for n in 0..=30 {
        t.check(fib_identity_check(n), || format!("identity at n={n}"));
    }
    for n in 0..=16 {
        let subsets = nonconsecutive_subsets(n, DEFAULT_SUBSET_CAP).unwrap_or_default();
        for k in 0..=n + 1 {
            let listed = subsets.iter().filter(|s| s.len() == k).count();
            t.check(BigUint::from(listed) == nonconsecutive_count_k(n, k), || format!("n={n} k={k}"));
        }
    }
    t.finish(9, "binomial-Fibonacci identity", started)
}

/// Length counts and bounds on one-sided intervals against direct filtering.
pub fn length_counts(_cfg: &VerifyConfig) -> Outcome {
    let started = Instant::now();
    let mut t = Tally::new();
    for r in 1..=14 {
        for mu in RootInterval::all(r) {
            for side in [Side::LeftBoundary, Side::RightBoundary] {
                let one_sided = match side {
                    Side::RightBoundary => mu.i() == 1 && mu.j() < r,
                    Side::LeftBoundary => mu.j() == r && mu.i() >= 2,
                };
                if !one_sided {
                    continue;
                }
                let boundary = side.boundary_generator(mu);
                let set = alt_set_characterized(mu);
                for contains in [true, false] {
                    // k counts generators other than the boundary one
                    let ks: Vec<usize> = set
                        .elements()
                        .iter()
                        .filter(|s| s.support().contains(&boundary) == contains)
                        .map(|s| s.length() - usize::from(contains))
                        .collect();
                    let bound = max_length(mu, side, contains);
                    let observed_max = ks.iter().copied().max().unwrap_or(0);
                    t.check(bound == Ok(observed_max), || {
                        format!("max r={r} μ={mu} {side:?} contains={contains}")
                    });
                    for k in 0..=r {
                        let listed = ks.iter().filter(|&&x| x == k).count();
                        let formula = count_by_length(mu, k, side, contains);
                        t.check(formula == Ok(BigUint::from(listed)), || {
                            format!("count r={r} μ={mu} {side:?} contains={contains} k={k}")
                        });
                    }
                }
            }
        }
    }
    t.finish(10, "length counts and bounds", started)
}

/// m_q(α̃, 0) = q + q² + ⋯ + q^r.
pub fn zero_weight(cfg: &VerifyConfig) -> Outcome {
    let started = Instant::now();
    let mut t = Tally::new();
    for r in 1..=cfg.max_brute_rank.min(6) {
        let got = q_multiplicity(&highest_root(r), &Weight::zero(r), Method::KwmfFull, &cfg.settings);
        let want = sum_q_powers(1, r);
        t.check(got.is_ok_and(|rep| rep.q_multiplicity == want), || format!("r={r}"));
    }
    t.finish(11, "zero-weight q-multiplicity", started)
}

pub type Check = fn(&VerifyConfig) -> Outcome;

/// Every check, in order.
pub const ALL: [Check; 11] = [
    alternation_characterization,
    alternation_cardinality,
    kwmf_power_of_q,
    closed_power_of_q,
    multiplicity_one,
    consecutive_sums,
    closed_terms_vs_table,
    oracle_agreement,
    fibonacci_identity,
    length_counts,
    zero_weight,
];

pub fn run_all(cfg: &VerifyConfig) -> Vec<Outcome> {
    ALL.iter().map(|check| check(cfg)).collect()
}
