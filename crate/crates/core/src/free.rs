//! Freely reduced words in a free group of fixed rank, and endomorphisms
//! given by generator images.
//!
//! A letter is a nonzero `i32`: `k` stands for the generator `x_k`, `-k`
//! for its inverse. Words are kept freely reduced at all times, so `==`
//! on [`FreeWord`] is equality in the free group.

use crate::error::{Error, Result};
use std::fmt;

/// Default cap on the number of letters any derived word may reach.
/// Generator-image substitution can blow up exponentially; hitting the cap
/// is reported as an explicit error, never a wrong answer.
pub const DEFAULT_LEN_BUDGET: usize = 1_000_000;

/// A freely reduced word in the free group on `rank` generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    /// The empty word (identity) in the free group of the given rank.
    pub fn identity(rank: usize) -> Self {
        FreeWord { rank, letters: Vec::new() }
    }

    /// The generator `x_index` (1-based).
    pub fn generator(rank: usize, index: usize) -> Result<Self> {
        if index == 0 || index > rank {
            return Err(Error::IndexOutOfRange { index, rank });
        }
        Ok(FreeWord { rank, letters: vec![index as i32] })
    }

    /// Freely reduce a raw letter sequence.
    pub fn reduce(rank: usize, letters: impl IntoIterator<Item = i32>) -> Result<Self> {
        let mut out: Vec<i32> = Vec::new();
        for l in letters {
            let idx = l.unsigned_abs() as usize;
            if l == 0 || idx > rank {
                return Err(Error::IndexOutOfRange { index: idx, rank });
            }
            push_reduced(&mut out, l);
        }
        Ok(FreeWord { rank, letters: out })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The reduced letter sequence; `k` is `x_k`, `-k` its inverse.
    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reduced concatenation `self * other`.
    pub fn multiply(&self, other: &FreeWord) -> Result<FreeWord> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        let mut out = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        Ok(FreeWord { rank: self.rank, letters: out })
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Total signed exponent over all generators.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *l > 0 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

/// Push a letter onto a reduced word, cancelling with the last letter.
fn push_reduced(out: &mut Vec<i32>, l: i32) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

/// An endomorphism of the free group on `rank` generators, given by the
/// images of the generators. Those built from braid letters are invertible
/// by construction; invertibility is not checked dynamically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeEndomorphism {
    rank: usize,
    images: Vec<FreeWord>,
}

impl FreeEndomorphism {
    pub fn identity(rank: usize) -> Self {
        let images = (1..=rank)
            .map(|i| FreeWord { rank, letters: vec![i as i32] })
            .collect();
        FreeEndomorphism { rank, images }
    }

    /// Build from the list of generator images (one per generator).
    pub fn from_images(images: Vec<FreeWord>) -> Result<Self> {
        let rank = images.len();
        for im in &images {
            if im.rank != rank {
                return Err(Error::RankMismatch { left: rank, right: im.rank });
            }
        }
        Ok(FreeEndomorphism { rank, images })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Image of the generator `x_index` (1-based).
    pub fn image(&self, index: usize) -> &FreeWord {
        &self.images[index - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, im)| im.letters.len() == 1 && im.letters[0] == (i + 1) as i32)
    }

    /// Substitute every letter of `w` by its image (inverse image for a
    /// negative letter) and reduce. `budget` caps the result length.
    pub fn apply(&self, w: &FreeWord, budget: usize) -> Result<FreeWord> {
        if self.rank != w.rank {
            return Err(Error::RankMismatch { left: self.rank, right: w.rank });
        }
        let mut out: Vec<i32> = Vec::new();
        for &l in &w.letters {
            let im = &self.images[(l.unsigned_abs() as usize) - 1];
            if l > 0 {
                for &m in &im.letters {
                    push_reduced(&mut out, m);
                }
            } else {
                for &m in im.letters.iter().rev() {
                    push_reduced(&mut out, -m);
                }
            }
            if out.len() > budget {
                return Err(Error::LengthBudget { budget });
            }
        }
        Ok(FreeWord { rank: self.rank, letters: out })
    }

    /// Composition `self ∘ other`: generator `i` maps to
    /// `self(other(x_i))`.
    pub fn compose(&self, other: &FreeEndomorphism, budget: usize) -> Result<FreeEndomorphism> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        let images = other
            .images
            .iter()
            .map(|im| self.apply(im, budget))
            .collect::<Result<Vec<_>>>()?;
        Ok(FreeEndomorphism { rank: self.rank, images })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(rank: usize, letters: &[i32]) -> FreeWord {
        FreeWord::reduce(rank, letters.iter().copied()).unwrap()
    }

    #[test]
    fn reduce_cancels_adjacent_pair() {
        assert!(w(2, &[1, -1]).is_empty());
    }

    #[test]
    fn reduce_cancels_inner_pair() {
        assert_eq!(w(2, &[1, 2, -2, 1]).letters(), &[1, 1]);
    }

    #[test]
    fn reduce_cascades() {
        assert_eq!(w(3, &[-2, 1, -1, 2, 3]).letters(), &[3]);
    }

    #[test]
    fn reduce_rejects_out_of_range() {
        assert_eq!(
            FreeWord::reduce(2, [3]),
            Err(Error::IndexOutOfRange { index: 3, rank: 2 })
        );
        assert!(FreeWord::reduce(2, [0]).is_err());
    }

    #[test]
    fn multiply_cancels() {
        assert!(w(1, &[1]).multiply(&w(1, &[-1])).unwrap().is_empty());
        assert_eq!(
            w(3, &[1, 2]).multiply(&w(3, &[-2, 3])).unwrap().letters(),
            &[1, 3]
        );
        let v = w(3, &[2, -1]);
        assert_eq!(FreeWord::identity(3).multiply(&v).unwrap(), v);
    }

    #[test]
    fn multiply_rejects_rank_mismatch() {
        assert!(w(2, &[1]).multiply(&w(3, &[1])).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(w(2, &[1, 2]).inverse().letters(), &[-2, -1]);
        assert!(FreeWord::identity(2).inverse().is_empty());
        assert_eq!(w(1, &[-1]).inverse().letters(), &[1]);
    }

    #[test]
    fn apply_identity_fixes_word() {
        let e = FreeEndomorphism::identity(2);
        let v = w(2, &[1, -2]);
        assert_eq!(e.apply(&v, DEFAULT_LEN_BUDGET).unwrap(), v);
    }

    /// e = {x1 -> x1 x2 x1^-1, x2 -> x1}
    fn sample_endo() -> FreeEndomorphism {
        FreeEndomorphism::from_images(vec![w(2, &[1, 2, -1]), w(2, &[1])]).unwrap()
    }

    #[test]
    fn apply_substitutes() {
        let e = sample_endo();
        assert_eq!(e.apply(&w(2, &[2]), DEFAULT_LEN_BUDGET).unwrap(), w(2, &[1]));
    }

    #[test]
    fn apply_substitutes_then_reduces() {
        // x1 x2 -> (x1 x2 x1^-1)(x1) = x1 x2
        let e = sample_endo();
        let v = w(2, &[1, 2]);
        assert_eq!(e.apply(&v, DEFAULT_LEN_BUDGET).unwrap(), v);
    }

    #[test]
    fn apply_enforces_budget() {
        let e = sample_endo();
        let long = FreeWord::reduce(2, std::iter::repeat(1).take(10)).unwrap();
        assert_eq!(e.apply(&long, 4), Err(Error::LengthBudget { budget: 4 }));
    }

    #[test]
    fn compose_with_identity() {
        let e = sample_endo();
        let id = FreeEndomorphism::identity(2);
        assert_eq!(id.compose(&e, DEFAULT_LEN_BUDGET).unwrap(), e);
        assert_eq!(e.compose(&id, DEFAULT_LEN_BUDGET).unwrap(), e);
    }

    #[test]
    fn compose_inverse_images_gives_identity() {
        // sample_endo is the braid action of a single crossing; its inverse
        // sends x1 -> x2, x2 -> x2^-1 x1 x2.
        let e = sample_endo();
        let f =
            FreeEndomorphism::from_images(vec![w(2, &[2]), w(2, &[-2, 1, 2])]).unwrap();
        assert!(e.compose(&f, DEFAULT_LEN_BUDGET).unwrap().is_identity());
        assert!(f.compose(&e, DEFAULT_LEN_BUDGET).unwrap().is_identity());
    }

    prop_compose! {
        fn arb_word(rank: usize, max_len: usize)
            (letters in prop::collection::vec(
                (1..=rank, prop::bool::ANY).prop_map(|(i, neg)| {
                    if neg { -(i as i32) } else { i as i32 }
                }),
                0..max_len,
            ))
        -> FreeWord {
            FreeWord::reduce(rank, letters).unwrap()
        }
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent(v in arb_word(3, 24)) {
            let again = FreeWord::reduce(3, v.letters().iter().copied()).unwrap();
            prop_assert_eq!(again, v);
        }

        #[test]
        fn group_axioms(a in arb_word(3, 12), b in arb_word(3, 12), c in arb_word(3, 12)) {
            let ab_c = a.multiply(&b).unwrap().multiply(&c).unwrap();
            let a_bc = a.multiply(&b.multiply(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            prop_assert_eq!(a.multiply(&FreeWord::identity(3)).unwrap(), a.clone());
            prop_assert!(a.multiply(&a.inverse()).unwrap().is_empty());
            prop_assert!(a.inverse().multiply(&a).unwrap().is_empty());
        }

        #[test]
        fn endo_apply_distributes(a in arb_word(2, 12), b in arb_word(2, 12)) {
            let e = sample_endo();
            let lhs = e.apply(&a.multiply(&b).unwrap(), DEFAULT_LEN_BUDGET).unwrap();
            let rhs = e
                .apply(&a, DEFAULT_LEN_BUDGET)
                .unwrap()
                .multiply(&e.apply(&b, DEFAULT_LEN_BUDGET).unwrap())
                .unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn endo_compose_associative(
            xs in prop::collection::vec(arb_word(2, 6), 2),
            ys in prop::collection::vec(arb_word(2, 6), 2),
            zs in prop::collection::vec(arb_word(2, 6), 2),
        ) {
            let a = FreeEndomorphism::from_images(xs).unwrap();
            let b = FreeEndomorphism::from_images(ys).unwrap();
            let c = FreeEndomorphism::from_images(zs).unwrap();
            let lhs = a.compose(&b, DEFAULT_LEN_BUDGET).unwrap()
                .compose(&c, DEFAULT_LEN_BUDGET).unwrap();
            let rhs = a.compose(&b.compose(&c, DEFAULT_LEN_BUDGET).unwrap(), DEFAULT_LEN_BUDGET)
                .unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
