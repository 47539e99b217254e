//! Weight multiplicities via Kostant's alternating sum, and the closed forms
//! for the adjoint representation of sl_{r+1}.
//!
//! m_q(λ, μ) = Σ_{σ ∈ W} (−1)^{ℓ(σ)} ℘_q(σ(λ+ρ) − ρ − μ). For λ = α̃ and μ a
//! positive root only the alternation set contributes, and each surviving term
//! has the shape q^a (1 + q)^b with exponents read off from ℓ(σ) and whether σ
//! uses the generators bordering μ.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::alternation::{alt_set_characterized, characterized_words};
use crate::error::{argument, Error, Result};
use crate::exec::{self, Execution, Settings};
use crate::partition::{PartitionFunction, QPolynomial, SignedQPolynomial};
use crate::poly::int_json;
use crate::weights::{highest_root, RootInterval, Weight};
use crate::weyl::{check_brute_cap, enumerate_all, WeylElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Alternating sum over the whole Weyl group.
    KwmfFull,
    /// Alternating sum over the characterized alternation set, with ℘_q
    /// evaluated by the partition-function table.
    KwmfAltset,
    /// Alternating sum of the closed-form terms.
    ClosedForm,
    /// The monomial q^{r − h(μ)}.
    Predicted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ReportRepr", try_from = "ReportRepr")]
pub struct MultiplicityReport {
    pub rank: usize,
    pub lambda: Weight,
    pub mu: Weight,
    pub q_multiplicity: SignedQPolynomial,
    pub multiplicity_at_one: BigInt,
    pub method: Method,
    /// Number of group elements summed over.
    pub term_count: usize,
}

impl MultiplicityReport {
    fn new(lambda: &Weight, mu: &Weight, q: SignedQPolynomial, method: Method, term_count: usize) -> Self {
        MultiplicityReport {
            rank: lambda.rank(),
            lambda: lambda.clone(),
            mu: mu.clone(),
            multiplicity_at_one: q.eval_at_one(),
            q_multiplicity: q,
            method,
            term_count,
        }
    }
}

/// m_q(λ, μ) by the chosen route.
///
/// `KwmfFull` accepts any root-lattice λ and μ (μ = 0 included) within the
/// brute-force cap. The other routes need λ = α̃ and μ a positive root.
pub fn q_multiplicity(lambda: &Weight, mu: &Weight, method: Method, settings: &Settings) -> Result<MultiplicityReport> {
    let rank = lambda.rank();
    mu.check_rank(rank)?;
    match method {
        Method::KwmfFull => {
            check_brute_cap(rank, settings.brute_cap)?;
            let group: Vec<WeylElement> = enumerate_all(rank, settings.brute_cap)?.collect();
            let q = alternating_sum(&group, lambda, mu, settings.execution);
            Ok(MultiplicityReport::new(lambda, mu, q, method, group.len()))
        }
        Method::KwmfAltset => {
            let iv = adjoint_interval(lambda, mu)?;
            let set = alt_set_characterized(iv);
            let q = alternating_sum(set.elements(), lambda, mu, settings.execution);
            Ok(MultiplicityReport::new(lambda, mu, q, method, set.len()))
        }
        Method::ClosedForm => {
            let iv = adjoint_interval(lambda, mu)?;
            let (q, count) = closed_sum(iv, settings.execution);
            Ok(MultiplicityReport::new(lambda, mu, q, method, count))
        }
        Method::Predicted => {
            let iv = adjoint_interval(lambda, mu)?;
            let q = predicted_q_multiplicity(iv).to_signed();
            Ok(MultiplicityReport::new(lambda, mu, q, method, 1))
        }
    }
}

/// m(λ, μ), the value of m_q at q = 1.
pub fn multiplicity_at_one(lambda: &Weight, mu: &Weight, method: Method, settings: &Settings) -> Result<BigInt> {
    Ok(q_multiplicity(lambda, mu, method, settings)?.multiplicity_at_one)
}

fn adjoint_interval(lambda: &Weight, mu: &Weight) -> Result<RootInterval> {
    if *lambda != highest_root(lambda.rank()) {
        return Err(argument("this route requires λ to be the highest root"));
    }
    mu.as_interval()
        .ok_or_else(|| argument(format!("this route requires μ to be a positive root, got {mu}")))
}

fn alternating_sum(elements: &[WeylElement], lambda: &Weight, mu: &Weight, exec: Execution) -> SignedQPolynomial {
    let table = PartitionFunction::shared(lambda.rank());
    exec::map_reduce(
        elements,
        exec,
        SignedQPolynomial::zero,
        |sigma| {
            let xi = &sigma.shifted_action(lambda).expect("ranks checked") - mu;
            let mut term = SignedQPolynomial::zero();
            if xi.is_nonnegative() {
                term.add_signed(sigma.sign(), &table.kostant_q(&xi).expect("ranks checked"));
            }
            term
        },
        |a, b| a + b,
    )
}

/// Exponents (a, b) with ℘_q(σ(α̃+ρ) − ρ − μ) = q^a (1 + q)^b.
fn closed_form_exponents(iv: RootInterval, sigma: &WeylElement) -> Result<(usize, usize)> {
    let r = iv.rank();
    if sigma.rank() != r {
        return Err(Error::RankMismatch {
            expected: r,
            found: sigma.rank(),
        });
    }
    let support = sigma.support();
    let allowed = |x: usize| (2..iv.i()).contains(&x) || (iv.j() + 1..r).contains(&x);
    let member = support.len() == sigma.length()
        && support.iter().all(|&x| allowed(x) && !support.contains(&(x + 1)));
    if !member {
        return Err(argument(format!(
            "{sigma} is not in the alternation set for μ = α_{} + ⋯ + α_{}",
            iv.i(),
            iv.j()
        )));
    }

    let length = sigma.length();
    let missing_left = iv.i() > 1 && !support.contains(&(iv.i() - 1));
    let missing_right = iv.j() < r && !support.contains(&(iv.j() + 1));
    let absent = usize::from(missing_left) + usize::from(missing_right);
    let b = (r - iv.height())
        .checked_sub(2 * length + absent)
        .expect("closed-form exponent of (1 + q) went negative");
    Ok((length + absent, b))
}

/// ℘_q(σ(α̃+ρ) − ρ − μ) for σ in the characterized alternation set.
pub fn closed_form_term(iv: RootInterval, sigma: &WeylElement) -> Result<QPolynomial> {
    let (a, b) = closed_form_exponents(iv, sigma)?;
    Ok(QPolynomial::one_plus_q_pow(b).shift(a))
}

/// Σ_{σ ∈ 𝒜(α̃, μ)} (−1)^{ℓ(σ)} times the closed-form term for σ.
pub fn q_multiplicity_closed(iv: RootInterval) -> SignedQPolynomial {
    closed_sum(iv, Execution::default()).0
}

pub fn q_multiplicity_closed_with(iv: RootInterval, exec: Execution) -> SignedQPolynomial {
    closed_sum(iv, exec).0
}

fn closed_sum(iv: RootInterval, exec: Execution) -> (SignedQPolynomial, usize) {
    let words: Vec<Vec<usize>> = characterized_words(iv).collect();
    // signed tally of each q^a (1 + q)^b shape
    let tally = exec::map_reduce(
        &words,
        exec,
        BTreeMap::<(usize, usize), i64>::new,
        |word| {
            let sigma = WeylElement::from_word(iv.rank(), word).expect("valid letters");
            let shape = closed_form_exponents(iv, &sigma).expect("characterized element");
            BTreeMap::from([(shape, i64::from(sigma.sign()))])
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    );
    let mut total = SignedQPolynomial::zero();
    for ((a, b), n) in tally {
        if n == 0 {
            continue;
        }
        let shape = QPolynomial::one_plus_q_pow(b).shift(a).to_signed();
        total += &(&SignedQPolynomial::from_coeffs(vec![BigInt::from(n)]) * &shape);
    }
    (total, words.len())
}

/// q^{r − h(μ)}.
pub fn predicted_q_multiplicity(iv: RootInterval) -> QPolynomial {
    QPolynomial::q_pow(iv.rank() - iv.height())
}

#[derive(Serialize, Deserialize)]
struct PolyWithText {
    #[serde(flatten)]
    poly: SignedQPolynomial,
    pretty: String,
}

#[derive(Serialize, Deserialize)]
struct ReportRepr {
    rank: usize,
    lambda: Weight,
    mu: Weight,
    q_multiplicity: PolyWithText,
    #[serde(with = "int_json")]
    multiplicity_at_one: BigInt,
    method: Method,
    term_count: usize,
}

impl From<MultiplicityReport> for ReportRepr {
    fn from(r: MultiplicityReport) -> Self {
        ReportRepr {
            rank: r.rank,
            lambda: r.lambda,
            mu: r.mu,
            q_multiplicity: PolyWithText {
                pretty: r.q_multiplicity.to_string(),
                poly: r.q_multiplicity,
            },
            multiplicity_at_one: r.multiplicity_at_one,
            method: r.method,
            term_count: r.term_count,
        }
    }
}

impl TryFrom<ReportRepr> for MultiplicityReport {
    type Error = Error;

    fn try_from(r: ReportRepr) -> Result<Self> {
        r.lambda.check_rank(r.rank)?;
        r.mu.check_rank(r.rank)?;
        if r.q_multiplicity.poly.eval_at_one() != r.multiplicity_at_one {
            return Err(argument("multiplicity_at_one disagrees with the polynomial"));
        }
        Ok(MultiplicityReport {
            rank: r.rank,
            lambda: r.lambda,
            mu: r.mu,
            q_multiplicity: r.q_multiplicity.poly,
            multiplicity_at_one: r.multiplicity_at_one,
            method: r.method,
            term_count: r.term_count,
        })
    }
}
