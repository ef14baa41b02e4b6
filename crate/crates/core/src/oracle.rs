//! Word equality for all three families, decided by evaluating the Artin
//! action on a free group after embedding everything into an A-type group.
//!
//! A crossing `s_k` acts on the free group by `x_k -> x_k x_{k+1} x_k^-1`,
//! `x_{k+1} -> x_k`, fixing the other generators; the relation-check tests
//! pin this convention down. Equality of Artin images is equality of
//! group elements (the action is faithful and the embeddings injective),
//! so the oracle is sound and complete up to the explicit length budget.

use crate::error::{Error, Result};
use crate::free::{FreeEndomorphism, FreeWord, DEFAULT_LEN_BUDGET};
use crate::word::{BraidWord, Gen, GroupKind};

/// A bijection on `1..=size` (stored 0-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation { images: (0..size).collect() }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.images.len()];
        let mut cycles = 0;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
            }
        }
        cycles
    }
}

/// The permutation of strand endpoints induced by an A-type word
/// (sign-insensitive per letter).
pub fn underlying_permutation(w: &BraidWord) -> Result<Permutation> {
    if w.kind() != GroupKind::A {
        return Err(Error::KindMismatch { left: w.kind(), right: GroupKind::A });
    }
    let strands = w.rank() + 1;
    // at[j] = strand whose running endpoint is position j
    let mut at: Vec<usize> = (0..strands).collect();
    for &(gen, _) in w.letters() {
        let Gen::Sigma(i) = gen else { unreachable!("kind A holds only sigmas") };
        at.swap(i - 1, i);
    }
    let mut images = vec![0; strands];
    for (j, &strand) in at.iter().enumerate() {
        images[strand] = j;
    }
    Ok(Permutation { images })
}

/// The Artin action of one signed crossing on the free group of rank `r`.
fn letter_action(r: usize, k: usize, sign: i8) -> FreeEndomorphism {
    let mut images: Vec<FreeWord> =
        (1..=r).map(|i| FreeWord::generator(r, i).unwrap()).collect();
    let (a, b) = (k as i32, (k + 1) as i32);
    if sign > 0 {
        images[k - 1] = FreeWord::reduce(r, [a, b, -a]).unwrap();
        images[k] = FreeWord::reduce(r, [a]).unwrap();
    } else {
        images[k - 1] = FreeWord::reduce(r, [b]).unwrap();
        images[k] = FreeWord::reduce(r, [-b, a, b]).unwrap();
    }
    FreeEndomorphism::from_images(images).unwrap()
}

/// Evaluate the Artin representation on an A-type word. Multiplicative:
/// the action of a product is the composition of the actions.
pub fn artin_action(w: &BraidWord, budget: usize) -> Result<FreeEndomorphism> {
    if w.kind() != GroupKind::A {
        return Err(Error::KindMismatch { left: w.kind(), right: GroupKind::A });
    }
    let r = w.rank() + 1;
    let mut action = FreeEndomorphism::identity(r);
    for &(gen, sign) in w.letters() {
        let Gen::Sigma(k) = gen else { unreachable!("kind A holds only sigmas") };
        action = action.compose(&letter_action(r, k, sign), budget)?;
    }
    Ok(action)
}

/// Embed a word of any kind into an A-type group where the Artin action
/// decides equality. Kind `B` of rank `n` goes one strand up
/// (`s_i -> s_{i+1}`, `t -> s1^2`); kind `AffineA` factors through its
/// B-type image first. Compositions of injective maps, so equality is
/// reflected.
pub fn embed_to_a(w: &BraidWord) -> BraidWord {
    let w = w.expand_abbreviations();
    let n = w.rank();
    match w.kind() {
        GroupKind::A => w,
        GroupKind::B => {
            let mut letters = Vec::with_capacity(w.len() * 2);
            for &(gen, sign) in w.letters() {
                match gen {
                    Gen::Sigma(i) => letters.push((Gen::Sigma(i + 1), sign)),
                    Gen::T => {
                        letters.push((Gen::Sigma(1), sign));
                        letters.push((Gen::Sigma(1), sign));
                    }
                    _ => unreachable!("canonical B word"),
                }
            }
            BraidWord::from_letters_unchecked(GroupKind::A, n + 1, letters)
        }
        GroupKind::AffineA => embed_to_a(&affine_to_b(&w)),
    }
}

/// The inclusion of the affine group into its B-type parent: `s_i -> s_i`,
/// `a(n+1) -> t s1 .. sn s(n-1)^-1 .. s1^-1 t^-1`.
pub(crate) fn affine_to_b(w: &BraidWord) -> BraidWord {
    debug_assert_eq!(w.kind(), GroupKind::AffineA);
    let w = w.expand_abbreviations();
    let n = w.rank();
    let mut letters = Vec::with_capacity(w.len());
    for &(gen, sign) in w.letters() {
        match gen {
            Gen::Sigma(i) => letters.push((Gen::Sigma(i), sign)),
            Gen::AGen(_) => letters.push((Gen::AGen(n + 1), sign)),
            _ => unreachable!("canonical affine word"),
        }
    }
    BraidWord::from_letters_unchecked(GroupKind::B, n, letters).expand_abbreviations()
}

/// Decide whether two words of the same kind and rank represent the same
/// group element. A permutation comparison short-circuits the `false`
/// case; otherwise the Artin images are compared extensionally.
pub fn words_equal_budgeted(x: &BraidWord, y: &BraidWord, budget: usize) -> Result<bool> {
    if x.kind() != y.kind() {
        return Err(Error::KindMismatch { left: x.kind(), right: y.kind() });
    }
    if x.rank() != y.rank() {
        return Err(Error::RankMismatch { left: x.rank(), right: y.rank() });
    }
    let xa = embed_to_a(x);
    let ya = embed_to_a(y);
    if underlying_permutation(&xa)? != underlying_permutation(&ya)? {
        return Ok(false);
    }
    Ok(artin_action(&xa, budget)? == artin_action(&ya, budget)?)
}

/// [`words_equal_budgeted`] with the default length budget.
pub fn words_equal(x: &BraidWord, y: &BraidWord) -> Result<bool> {
    words_equal_budgeted(x, y, DEFAULT_LEN_BUDGET)
}
