//! The Weyl group of A_r, realized as the symmetric group S_{r+1}.
//!
//! Elements are stored in one-line notation. The generator s_i is the adjacent
//! transposition (i, i+1) acting on ε-coordinates, and words compose with the
//! rightmost letter applied first: `from_word(r, &[a, b])` is s_a ∘ s_b.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{argument, Error, Result};
use crate::weights::{two_rho, Weight};

/// Default largest rank for which the whole group may be enumerated (|W| = 9!).
pub const DEFAULT_BRUTE_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    // one-line notation, values 1..=r+1
    perm: Vec<u32>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        assert!(rank >= 1, "rank must be positive");
        WeylElement {
            perm: (1..=rank as u32 + 1).collect(),
        }
    }

    /// The simple reflection s_i.
    pub fn generator(rank: usize, i: usize) -> Result<Self> {
        Self::from_word(rank, &[i])
    }

    pub fn from_word(rank: usize, word: &[usize]) -> Result<Self> {
        if rank == 0 {
            return Err(argument("rank must be at least 1"));
        }
        let mut sigma = Self::identity(rank);
        for &letter in word {
            if letter == 0 || letter > rank {
                return Err(argument(format!(
                    "generator s_{letter} does not exist in rank {rank}"
                )));
            }
            sigma.perm.swap(letter - 1, letter);
        }
        Ok(sigma)
    }

    /// Builds an element from one-line notation over {1, …, r+1}.
    pub fn from_perm(perm: Vec<u32>) -> Result<Self> {
        let n = perm.len();
        if n < 2 {
            return Err(argument("a permutation of at least two letters is required"));
        }
        let mut seen = vec![false; n];
        for &v in &perm {
            let idx = (v as usize).wrapping_sub(1);
            if idx >= n || seen[idx] {
                return Err(argument(format!("{perm:?} is not a permutation of 1..={n}")));
            }
            seen[idx] = true;
        }
        Ok(WeylElement { perm })
    }

    pub fn rank(&self) -> usize {
        self.perm.len() - 1
    }

    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &v)| v as usize == k + 1)
    }

    /// ℓ(σ), the inversion count of the permutation.
    pub fn length(&self) -> usize {
        let p = &self.perm;
        let mut inversions = 0;
        for a in 0..p.len() {
            for b in a + 1..p.len() {
                if p[a] > p[b] {
                    inversions += 1;
                }
            }
        }
        inversions
    }

    /// (−1)^ℓ(σ).
    pub fn sign(&self) -> i32 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The lexicographically smallest reduced word.
    ///
    /// Peels off the smallest left descent each step: s_i is a left descent
    /// exactly when the value i+1 sits before the value i.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.perm.len();
        // position of each value
        let mut pos = vec![0usize; n + 1];
        for (k, &v) in self.perm.iter().enumerate() {
            pos[v as usize] = k;
        }
        let mut word = Vec::new();
        'outer: loop {
            for i in 1..n {
                if pos[i + 1] < pos[i] {
                    word.push(i);
                    pos.swap(i, i + 1);
                    continue 'outer;
                }
            }
            break;
        }
        word
    }

    /// Generators occurring in a reduced word (the same set for every reduced word).
    pub fn support(&self) -> BTreeSet<usize> {
        self.reduced_word().into_iter().collect()
    }

    /// σ ∘ τ.
    pub fn compose(&self, other: &WeylElement) -> Result<WeylElement> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        Ok(WeylElement {
            perm: other
                .perm
                .iter()
                .map(|&t| self.perm[t as usize - 1])
                .collect(),
        })
    }

    pub fn inverse(&self) -> WeylElement {
        let mut inv = vec![0u32; self.perm.len()];
        for (k, &v) in self.perm.iter().enumerate() {
            inv[v as usize - 1] = k as u32 + 1;
        }
        WeylElement { perm: inv }
    }

    /// The linear action of σ on the root lattice.
    pub fn apply(&self, w: &Weight) -> Result<Weight> {
        w.check_rank(self.rank())?;
        Ok(self.apply_coords(w.coords()))
    }

    fn apply_coords(&self, c: &[i64]) -> Weight {
        let r = c.len();
        // ε-coordinates: e_1 = c_1, e_k = c_k − c_{k−1}, e_{r+1} = −c_r
        let mut moved = vec![0i64; r + 1];
        for k in 0..=r {
            let hi = if k < r { c[k] } else { 0 };
            let lo = if k > 0 { c[k - 1] } else { 0 };
            moved[self.perm[k] as usize - 1] = hi - lo;
        }
        let mut acc = 0;
        let coords = moved[..r]
            .iter()
            .map(|e| {
                acc += e;
                acc
            })
            .collect();
        Weight::from_coords_unchecked(coords)
    }

    /// σ(λ + ρ) − ρ, computed as (σ(2λ + 2ρ) − 2ρ) / 2.
    pub fn shifted_action(&self, lambda: &Weight) -> Result<Weight> {
        lambda.check_rank(self.rank())?;
        let rho2 = two_rho(self.rank());
        let shifted: Vec<i64> = lambda
            .coords()
            .iter()
            .zip(rho2.coords())
            .map(|(l, p)| 2 * l + p)
            .collect();
        let image = self.apply_coords(&shifted);
        let coords = image
            .coords()
            .iter()
            .zip(rho2.coords())
            .map(|(x, p)| {
                let d = x - p;
                assert!(d % 2 == 0, "σ(ρ) − ρ left the root lattice");
                d / 2
            })
            .collect();
        Ok(Weight::from_coords_unchecked(coords))
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = self.reduced_word();
        if word.is_empty() {
            return write!(f, "1");
        }
        for (k, letter) in word.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{letter}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    word: Vec<usize>,
    perm: Vec<u32>,
}

impl Serialize for WeylElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementRepr {
            word: self.reduced_word(),
            perm: self.perm.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeylElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = ElementRepr::deserialize(d)?;
        let sigma = WeylElement::from_perm(repr.perm).map_err(D::Error::custom)?;
        let from_word = WeylElement::from_word(sigma.rank(), &repr.word).map_err(D::Error::custom)?;
        if from_word != sigma {
            return Err(D::Error::custom("word and perm describe different elements"));
        }
        Ok(sigma)
    }
}

/// Iterates S_{r+1} in lexicographic one-line order.
#[derive(Debug, Clone)]
pub struct AllElements {
    next: Option<Vec<u32>>,
}

impl Iterator for AllElements {
    type Item = WeylElement;

    fn next(&mut self) -> Option<WeylElement> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(WeylElement { perm: current })
    }
}

fn next_permutation(p: &mut [u32]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut k = n - 1;
    while p[k] <= p[i - 1] {
        k -= 1;
    }
    p.swap(i - 1, k);
    p[i..].reverse();
    true
}

/// Every element of W, each exactly once, in lexicographic one-line order.
pub fn enumerate_all(rank: usize, cap: usize) -> Result<AllElements> {
    if rank == 0 {
        return Err(argument("rank must be at least 1"));
    }
    check_brute_cap(rank, cap)?;
    Ok(AllElements {
        next: Some(WeylElement::identity(rank).perm),
    })
}

pub(crate) fn check_brute_cap(rank: usize, cap: usize) -> Result<()> {
    if rank > cap {
        return Err(Error::Capacity {
            what: "rank for full Weyl-group enumeration",
            requested: rank as i64,
            cap: cap as i64,
            hint: "--brute-cap or KOSTANT_MAX_BRUTE_RANK",
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{highest_root, simple_root};
    use proptest::prelude::*;

    fn w(coords: &[i64]) -> Weight {
        Weight::new(coords.to_vec()).unwrap()
    }

    #[test]
    fn identity_element() {
        let e = WeylElement::identity(2);
        assert_eq!(e.perm(), &[1, 2, 3]);
        assert_eq!(WeylElement::identity(5).length(), 0);
        assert!(WeylElement::identity(5).support().is_empty());
    }

    #[test]
    fn words() {
        assert_eq!(WeylElement::from_word(3, &[2]).unwrap().perm(), &[1, 3, 2, 4]);
        assert!(WeylElement::from_word(3, &[1, 1]).unwrap().is_identity());
        assert_eq!(
            WeylElement::from_word(5, &[2, 5]).unwrap(),
            WeylElement::from_word(5, &[5, 2]).unwrap()
        );
        assert!(WeylElement::from_word(3, &[4]).is_err());
        assert!(WeylElement::from_word(3, &[0]).is_err());
        assert!(WeylElement::from_word(3, &[]).unwrap().is_identity());
    }

    #[test]
    fn lengths() {
        assert_eq!(WeylElement::from_word(4, &[2, 4]).unwrap().length(), 2);
        assert_eq!(WeylElement::from_word(2, &[1, 2, 1]).unwrap().length(), 3);
    }

    #[test]
    fn supports() {
        let s = WeylElement::from_word(6, &[2, 5]).unwrap().support();
        assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![2, 5]);
        let s = WeylElement::from_word(3, &[1, 2, 1]).unwrap().support();
        assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn action_on_roots() {
        let a = w(&[3, -1, 2]);
        assert_eq!(WeylElement::identity(3).apply(&a).unwrap(), a);
        for r in 1..=5 {
            for i in 1..=r {
                let s = WeylElement::generator(r, i).unwrap();
                let root = simple_root(r, i).unwrap();
                assert_eq!(s.apply(&root).unwrap(), -&root);
            }
        }
        let s1 = WeylElement::generator(2, 1).unwrap();
        assert_eq!(s1.apply(&w(&[1, 1])).unwrap(), w(&[0, 1]));
        assert!(matches!(
            s1.apply(&w(&[1, 1, 1])),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn shifted_actions() {
        let lam = highest_root(4);
        assert_eq!(WeylElement::identity(4).shifted_action(&lam).unwrap(), lam);
        let s1 = WeylElement::generator(3, 1).unwrap();
        assert_eq!(s1.shifted_action(&highest_root(3)).unwrap(), w(&[-1, 1, 1]));
        let s3 = WeylElement::generator(5, 3).unwrap();
        let expected = &highest_root(5) - &simple_root(5, 3).unwrap();
        assert_eq!(s3.shifted_action(&highest_root(5)).unwrap(), expected);
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_all(1, DEFAULT_BRUTE_CAP).unwrap().count(), 2);
        let all: Vec<_> = enumerate_all(3, DEFAULT_BRUTE_CAP).unwrap().collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|p| p[0].perm() < p[1].perm()));
        assert!(all[0].is_identity());
        assert!(matches!(
            enumerate_all(9, DEFAULT_BRUTE_CAP),
            Err(Error::Capacity { cap: 8, .. })
        ));
    }

    #[test]
    fn reduced_word_is_reduced() {
        for sigma in enumerate_all(4, DEFAULT_BRUTE_CAP).unwrap() {
            let word = sigma.reduced_word();
            assert_eq!(word.len(), sigma.length());
            assert_eq!(WeylElement::from_word(4, &word).unwrap(), sigma);
        }
    }

    // An element lies in the parabolic subgroup avoiding s_k iff it maps
    // {1..k} onto itself.
    #[test]
    fn support_matches_block_criterion() {
        for sigma in enumerate_all(5, DEFAULT_BRUTE_CAP).unwrap() {
            let support = sigma.support();
            for k in 1..=5usize {
                let fixes_block = sigma.perm()[..k].iter().all(|&v| v as usize <= k);
                assert_eq!(!support.contains(&k), fixes_block, "{sigma:?} s_{k}");
            }
        }
    }

    // breadth-first search over the Cayley graph gives minimal word lengths
    #[test]
    fn length_is_minimal_word_length() {
        use std::collections::{HashMap, VecDeque};
        let r = 4;
        let mut dist = HashMap::new();
        let mut queue = VecDeque::new();
        dist.insert(WeylElement::identity(r), 0usize);
        queue.push_back(WeylElement::identity(r));
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            for i in 1..=r {
                let y = x.compose(&WeylElement::generator(r, i).unwrap()).unwrap();
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), d + 1);
                    queue.push_back(y);
                }
            }
        }
        assert_eq!(dist.len(), 120);
        for (sigma, d) in dist {
            assert_eq!(sigma.length(), d);
        }
    }

    #[test]
    fn shifted_action_stays_in_root_lattice() {
        // exhaustive over small λ for r ≤ 4; the assertion inside would fire otherwise
        for r in 1..=4 {
            let lambdas = [highest_root(r), Weight::zero(r), simple_root(r, 1).unwrap()];
            for sigma in enumerate_all(r, DEFAULT_BRUTE_CAP).unwrap() {
                for lam in &lambdas {
                    let image = sigma.shifted_action(lam).unwrap();
                    assert_eq!(image.rank(), r);
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let s = WeylElement::from_word(3, &[1, 2, 1]).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"word":[1,2,1],"perm":[3,2,1,4]}"#);
        let back: WeylElement = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<WeylElement>(r#"{"word":[1],"perm":[1,2,3]}"#).is_err());
    }

    fn element(rank: usize) -> impl Strategy<Value = WeylElement> {
        proptest::collection::vec(1..=rank, 0..12)
            .prop_map(move |word| WeylElement::from_word(rank, &word).unwrap())
    }

    fn weight(rank: usize) -> impl Strategy<Value = Weight> {
        proptest::collection::vec(-6i64..=6, rank).prop_map(|c| Weight::new(c).unwrap())
    }

    proptest! {
        #[test]
        fn action_is_a_group_action(
            (s, t, x) in (1usize..=5).prop_flat_map(|r| (element(r), element(r), weight(r)))
        ) {
            let st = s.compose(&t).unwrap();
            let lhs = s.apply(&t.apply(&x).unwrap()).unwrap();
            prop_assert_eq!(lhs, st.apply(&x).unwrap());
        }

        #[test]
        fn word_length_bounds(word in proptest::collection::vec(1usize..=5, 0..10)) {
            let sigma = WeylElement::from_word(5, &word).unwrap();
            let len = sigma.length();
            prop_assert!(len <= word.len());
            let letters: BTreeSet<usize> = word.iter().copied().collect();
            prop_assert!(sigma.support().is_subset(&letters));
        }

        #[test]
        fn commuting_generators(i in 1usize..=8, j in 1usize..=8) {
            prop_assume!(i.abs_diff(j) >= 2);
            let a = WeylElement::from_word(8, &[i, j]).unwrap();
            let b = WeylElement::from_word(8, &[j, i]).unwrap();
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(a.support(), [i, j].into_iter().collect::<BTreeSet<_>>());
        }

        #[test]
        fn inverse_composes_to_identity(s in element(6)) {
            prop_assert!(s.compose(&s.inverse()).unwrap().is_identity());
            prop_assert_eq!(s.inverse().length(), s.length());
        }
    }
}
