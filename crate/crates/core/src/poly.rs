//! Dense polynomials in q with exact integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Coefficient rings usable in [`Polynomial`].
pub trait Coefficient:
    Clone
    + PartialEq
    + Zero
    + One
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + FromPrimitive
    + ToPrimitive
    + FromStr
    + fmt::Display
{
    fn is_negative_coeff(&self) -> bool;
    fn magnitude_string(&self) -> String;
}

impl Coefficient for BigUint {
    fn is_negative_coeff(&self) -> bool {
        false
    }
    fn magnitude_string(&self) -> String {
        self.to_string()
    }
}

impl Coefficient for BigInt {
    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
    fn magnitude_string(&self) -> String {
        self.magnitude().to_string()
    }
}

/// `coeffs[d]` is the coefficient of q^d. No trailing zeros are stored, so
/// the zero polynomial has no coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    coeffs: Vec<C>,
}

/// Polynomials with nonnegative coefficients, the values of ℘_q.
pub type QPolynomial = Polynomial<BigUint>;

/// Polynomials with signed coefficients, used for alternating sums.
pub type SignedQPolynomial = Polynomial<BigInt>;

impl<C: Coefficient> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::q_pow(0)
    }

    /// q^d.
    pub fn q_pow(d: usize) -> Self {
        let mut coeffs = vec![C::zero(); d + 1];
        coeffs[d] = C::one();
        Polynomial { coeffs }
    }

    /// (1 + q)^n, expanded with binomial coefficients.
    pub fn one_plus_q_pow(n: usize) -> Self {
        let mut coeffs: Vec<C> = Vec::with_capacity(n + 1);
        coeffs.push(C::one());
        for _ in 0..n {
            coeffs.push(C::zero());
            for d in (1..coeffs.len()).rev() {
                let prev = coeffs[d - 1].clone();
                coeffs[d] = coeffs[d].clone() + &prev;
            }
        }
        Polynomial { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> C {
        self.coeffs.get(d).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplies by q^d.
    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Value at q = 1.
    pub fn eval_at_one(&self) -> C {
        self.coeffs.iter().fold(C::zero(), |acc, c| acc + c)
    }

    pub fn mul_poly(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in other.coeffs.iter().enumerate() {
                let term = x.clone() * y;
                coeffs[a + b] = coeffs[a + b].clone() + &term;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn add_poly(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (d, c) in short.coeffs.iter().enumerate() {
            coeffs[d] = coeffs[d].clone() + c;
        }
        Self::from_coeffs(coeffs)
    }
}

impl QPolynomial {
    pub fn to_signed(&self) -> SignedQPolynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| BigInt::from(c.clone())).collect(),
        }
    }
}

impl SignedQPolynomial {
    /// Converts back when every coefficient is nonnegative.
    pub fn to_natural(&self) -> Option<QPolynomial> {
        self.coeffs
            .iter()
            .map(|c| c.to_biguint())
            .collect::<Option<Vec<_>>>()
            .map(|coeffs| Polynomial { coeffs })
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Adds `sign · term` in place, the accumulation step of an alternating sum.
    pub fn add_signed(&mut self, sign: i32, term: &QPolynomial) {
        if self.coeffs.len() < term.coeffs.len() {
            self.coeffs.resize(term.coeffs.len(), BigInt::zero());
        }
        for (d, c) in term.coeffs.iter().enumerate() {
            let c = BigInt::from(c.clone());
            if sign >= 0 {
                self.coeffs[d] += c;
            } else {
                self.coeffs[d] -= c;
            }
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.add_poly(rhs)
    }
}

impl<C: Coefficient> Add for Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.add_poly(&rhs)
    }
}

impl<C: Coefficient> AddAssign<&Polynomial<C>> for Polynomial<C> {
    fn add_assign(&mut self, rhs: &Polynomial<C>) {
        *self = self.add_poly(rhs);
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.mul_poly(rhs)
    }
}

impl<C: Coefficient> Mul for Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.mul_poly(&rhs)
    }
}

impl Neg for &SignedQPolynomial {
    type Output = SignedQPolynomial;
    fn neg(self) -> SignedQPolynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &SignedQPolynomial {
    type Output = SignedQPolynomial;
    fn sub(self, rhs: Self) -> SignedQPolynomial {
        self.add_poly(&-rhs)
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative_coeff();
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let mag = c.magnitude_string();
            match (d, mag.as_str()) {
                (0, _) => write!(f, "{mag}")?,
                (1, "1") => write!(f, "q")?,
                (1, _) => write!(f, "{mag}q")?,
                (_, "1") => write!(f, "q^{d}")?,
                _ => write!(f, "{mag}q^{d}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// Coefficients go to JSON as plain numbers when they fit in 64 bits and as
// decimal strings otherwise.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Signed(i64),
    Unsigned(u64),
    Text(String),
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    coeffs: Vec<CoeffRepr>,
}

impl<C: Coefficient> Serialize for Polynomial<C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                if let Some(v) = c.to_i64() {
                    CoeffRepr::Signed(v)
                } else if let Some(v) = c.to_u64() {
                    CoeffRepr::Unsigned(v)
                } else {
                    CoeffRepr::Text(c.to_string())
                }
            })
            .collect();
        PolyRepr { coeffs }.serialize(s)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for Polynomial<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = PolyRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .into_iter()
            .map(|c| match c {
                CoeffRepr::Signed(v) => C::from_i64(v),
                CoeffRepr::Unsigned(v) => C::from_u64(v),
                CoeffRepr::Text(t) => t.parse().ok(),
            })
            .collect::<Option<Vec<C>>>()
            .ok_or_else(|| D::Error::custom("coefficient out of range for this polynomial"))?;
        Ok(Polynomial::from_coeffs(coeffs))
    }
}

/// `#[serde(with = ...)]` adapter writing a big integer the same way as a
/// polynomial coefficient.
pub(crate) mod int_json {
    use super::*;

    pub fn serialize<C: Coefficient, S: Serializer>(c: &C, s: S) -> Result<S::Ok, S::Error> {
        if let Some(v) = c.to_i64() {
            CoeffRepr::Signed(v).serialize(s)
        } else if let Some(v) = c.to_u64() {
            CoeffRepr::Unsigned(v).serialize(s)
        } else {
            CoeffRepr::Text(c.to_string()).serialize(s)
        }
    }

    pub fn deserialize<'de, C: Coefficient, D: Deserializer<'de>>(d: D) -> Result<C, D::Error> {
        use serde::de::Error as _;
        match CoeffRepr::deserialize(d)? {
            CoeffRepr::Signed(v) => C::from_i64(v),
            CoeffRepr::Unsigned(v) => C::from_u64(v),
            CoeffRepr::Text(t) => t.parse().ok(),
        }
        .ok_or_else(|| D::Error::custom("integer out of range"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qp(c: &[u64]) -> QPolynomial {
        Polynomial::from_coeffs(c.iter().map(|&x| BigUint::from(x)).collect())
    }

    fn sp(c: &[i64]) -> SignedQPolynomial {
        Polynomial::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(qp(&[0, 1, 2, 1]).to_string(), "q + 2q^2 + q^3");
        assert_eq!(qp(&[0, 0, 0, 1]).to_string(), "q^3");
        assert_eq!(qp(&[1]).to_string(), "1");
        assert_eq!(qp(&[]).to_string(), "0");
        assert_eq!(qp(&[3, 2]).to_string(), "3 + 2q");
        assert_eq!(sp(&[0, -1, 0, 1]).to_string(), "-q + q^3");
        assert_eq!(sp(&[2, -3]).to_string(), "2 - 3q");
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert!(qp(&[0, 0]).is_zero());
        assert_eq!(qp(&[1, 0, 0]).degree(), Some(0));
        assert_eq!(qp(&[0, 0, 5]).lowest_degree(), Some(2));
    }

    #[test]
    fn binomial_expansion() {
        assert_eq!(QPolynomial::one_plus_q_pow(0), qp(&[1]));
        assert_eq!(QPolynomial::one_plus_q_pow(3), qp(&[1, 3, 3, 1]));
        let direct = (0..5).fold(QPolynomial::one(), |acc, _| &acc * &qp(&[1, 1]));
        assert_eq!(QPolynomial::one_plus_q_pow(5), direct);
    }

    #[test]
    fn signed_accumulation() {
        // q(1+q)^2 − q(1+q) − q^2 = q^3
        let mut acc = SignedQPolynomial::zero();
        acc.add_signed(1, &QPolynomial::one_plus_q_pow(2).shift(1));
        acc.add_signed(-1, &QPolynomial::one_plus_q_pow(1).shift(1));
        acc.add_signed(-1, &QPolynomial::q_pow(2));
        assert_eq!(acc, SignedQPolynomial::q_pow(3));
        assert_eq!(acc.to_natural(), Some(QPolynomial::q_pow(3)));
        assert_eq!(sp(&[1, -1]).to_natural(), None);
    }

    #[test]
    fn json_format() {
        let p = qp(&[0, 1, 2, 1]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"coeffs":[0,1,2,1]}"#);
        let big = Polynomial::from_coeffs(vec![BigUint::from(u64::MAX) * 10u32]);
        let json = serde_json::to_string(&big).unwrap();
        assert_eq!(json, r#"{"coeffs":["184467440737095516150"]}"#);
        assert_eq!(serde_json::from_str::<QPolynomial>(&json).unwrap(), big);
        assert!(serde_json::from_str::<QPolynomial>(r#"{"coeffs":[-1]}"#).is_err());
        let s: SignedQPolynomial = serde_json::from_str(r#"{"coeffs":[0,-2]}"#).unwrap();
        assert_eq!(s, sp(&[0, -2]));
    }

    proptest! {
        #[test]
        fn json_round_trip(c in proptest::collection::vec(any::<i64>(), 0..8)) {
            let p = sp(&c);
            let back: SignedQPolynomial = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn evaluation_is_a_ring_map(
            a in proptest::collection::vec(0u64..1000, 0..6),
            b in proptest::collection::vec(0u64..1000, 0..6),
        ) {
            let (a, b) = (qp(&a), qp(&b));
            prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
            prop_assert_eq!((&a + &b).eval_at_one(), a.eval_at_one() + b.eval_at_one());
            prop_assert_eq!(&a * &b, &b * &a);
        }
    }
}
