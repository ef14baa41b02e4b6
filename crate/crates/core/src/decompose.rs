//! Membership and structure theory: the t-exponent membership test, the
//! phi-decomposition of B-type words, parabolic conversion, kernel
//! rewriting over the free generators `F_i`, and Schreier rewriting over
//! the coset generators `g[j,i]`.

use crate::atlas::{apply_morphism, iota, Morphism};
use crate::error::{Error, Result};
use crate::free::{FreeEndomorphism, FreeWord, DEFAULT_LEN_BUDGET};
use crate::oracle::artin_action;
use crate::word::{parse_raw, BraidWord, Gen, GroupKind, Letter};
use std::fmt;

/// Sum of the exponents of `t` in a B-type word.
pub fn t_exponent_sum(w: &BraidWord) -> Result<i64> {
    if w.kind() != GroupKind::B {
        return Err(Error::KindMismatch { left: w.kind(), right: GroupKind::B });
    }
    Ok(w.expand_abbreviations()
        .letters()
        .iter()
        .filter(|&&(g, _)| g == Gen::T)
        .map(|&(_, s)| s as i64)
        .sum())
}

/// A B-type word lies in the affine subgroup iff its t-exponent sum is
/// zero.
pub fn is_affine(w: &BraidWord) -> Result<bool> {
    Ok(t_exponent_sum(w)? == 0)
}

/// The pair `(lambda, k)` with `w = lambda . phi^k`: `lambda` is the
/// affine part (a word over `s1..sn, a(n+1)`) and `k` the t-exponent sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiDecomposition {
    pub lambda: BraidWord,
    pub k: i64,
}

impl PhiDecomposition {
    /// `iota(lambda) . phi^k`, a B-type word equal to the decomposed one.
    pub fn recombined(&self) -> BraidWord {
        let n = self.lambda.rank();
        let affine_part = iota(n, &self.lambda).expect("lambda is a legal affine word");
        affine_part
            .concat(&phi_power(n, self.k))
            .expect("same kind and rank")
    }
}

/// The word `phi^k` in expanded form, `phi = t s1 .. sn`.
pub fn phi_power(n: usize, k: i64) -> BraidWord {
    let phi = BraidWord::new(GroupKind::B, n, vec![(Gen::Phi, 1)])
        .unwrap()
        .expand_abbreviations();
    let step = if k >= 0 { phi.clone() } else { phi.inverse() };
    let mut out = BraidWord::identity(GroupKind::B, n).unwrap();
    for _ in 0..k.unsigned_abs() {
        out = out.concat(&step).unwrap();
    }
    out
}

/// Letter relabeling along the phi-cycle `s1 -> s2 -> .. -> sn -> a(n+1)
/// -> s1`, by `r` steps.
fn phi_shifted(n: usize, gen: Gen, r: i64) -> Gen {
    let cycle = (n + 1) as i64;
    let pos = match gen {
        Gen::Sigma(i) => (i - 1) as i64,
        Gen::AGen(_) => n as i64,
        _ => unreachable!("affine alphabet only"),
    };
    let new = (pos + r).rem_euclid(cycle) as usize;
    if new < n {
        Gen::Sigma(new + 1)
    } else {
        Gen::AGen(n + 1)
    }
}

/// Split a B-type word as `lambda . phi^k` by pushing the phi's to the
/// right. Scanning left to right with a running shift `r`: a crossing
/// emits its phi-conjugate; `t = phi z` (with `z = sn^-1 .. s1^-1`) emits
/// the shifted `z` and bumps `r`.
pub fn phi_decompose(w: &BraidWord) -> Result<PhiDecomposition> {
    if w.kind() != GroupKind::B {
        return Err(Error::KindMismatch { left: w.kind(), right: GroupKind::B });
    }
    let w = w.expand_abbreviations();
    let n = w.rank();
    let mut letters: Vec<Letter> = Vec::new();
    let mut r: i64 = 0;
    for &(gen, sign) in w.letters() {
        match gen {
            Gen::Sigma(_) => letters.push((phi_shifted(n, gen, r), sign)),
            Gen::T => {
                if sign > 0 {
                    r += 1;
                    // shift_r(z), z = sn^-1 .. s1^-1
                    letters.extend(
                        (1..=n).rev().map(|j| (phi_shifted(n, Gen::Sigma(j), r), -1)),
                    );
                } else {
                    // shift_r(z^-1), z^-1 = s1 .. sn
                    letters
                        .extend((1..=n).map(|j| (phi_shifted(n, Gen::Sigma(j), r), 1)));
                    r -= 1;
                }
            }
            _ => unreachable!("canonical B word"),
        }
    }
    let lambda =
        BraidWord::from_letters_unchecked(GroupKind::AffineA, n, letters).free_cancel();
    Ok(PhiDecomposition { lambda, k: r })
}

/// An affine word spelled over `{s1..sn, a3}`, the alphabet of the
/// parabolic-like presentation. Only meaningful for rank >= 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicWord(BraidWord);

impl ParabolicWord {
    pub fn new(word: BraidWord) -> Result<Self> {
        if word.kind() != GroupKind::AffineA || word.rank() < 3 {
            return Err(Error::UnsupportedPresentation(
                "parabolic words require kind AT and rank >= 3".into(),
            ));
        }
        for &(g, _) in word.letters() {
            if !matches!(g, Gen::Sigma(_) | Gen::AGen(3)) {
                return Err(Error::IllegalLetter {
                    kind: word.kind(),
                    rank: word.rank(),
                    letter: format!("{g:?}"),
                });
            }
        }
        Ok(ParabolicWord(word))
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_raw(text)?)
    }

    pub fn as_word(&self) -> &BraidWord {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }
}

impl fmt::Display for ParabolicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Respell a formal affine word over the parabolic alphabet, substituting
/// `a(n+1) = sn^-1 .. s3^-1 a3 s3 .. sn` letter by letter.
pub fn to_parabolic(w: &BraidWord) -> Result<ParabolicWord> {
    if w.kind() != GroupKind::AffineA || w.rank() < 3 {
        return Err(Error::UnsupportedPresentation(
            "to_parabolic requires kind AT and rank >= 3".into(),
        ));
    }
    let w = w.expand_abbreviations();
    let n = w.rank();
    let mut letters: Vec<Letter> = Vec::new();
    for &(gen, sign) in w.letters() {
        match gen {
            Gen::Sigma(_) => letters.push((gen, sign)),
            Gen::AGen(_) => {
                let mut image: Vec<Letter> =
                    (3..=n).rev().map(|i| (Gen::Sigma(i), -1)).collect();
                image.push((Gen::AGen(3), 1));
                image.extend((3..=n).map(|i| (Gen::Sigma(i), 1)));
                if sign > 0 {
                    letters.extend(image);
                } else {
                    letters.extend(image.into_iter().rev().map(|(g, s)| (g, -s)));
                }
            }
            _ => unreachable!("canonical affine word"),
        }
    }
    ParabolicWord::new(BraidWord::from_letters_unchecked(GroupKind::AffineA, n, letters))
}

/// Back to the formal alphabet: `a3 = s3 .. sn a(n+1) sn^-1 .. s3^-1`.
pub fn from_parabolic(p: &ParabolicWord) -> BraidWord {
    p.0.expand_abbreviations()
}

/// A word over the kernel alphabet `F0 .. Fn`, freely reduced. `F_i`
/// stands for `s_i .. s_1 t s_1^-1 .. s_i^-1` in the B-type group of the
/// same rank (`F0 = t`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelWord {
    rank: usize,
    word: FreeWord,
}

impl KernelWord {
    /// `word` lives in the free group of rank `rank + 1`; its generator
    /// `x_(i+1)` encodes `F_i`.
    pub fn new(rank: usize, word: FreeWord) -> Result<Self> {
        if word.rank() != rank + 1 {
            return Err(Error::RankMismatch { left: word.rank(), right: rank + 1 });
        }
        Ok(KernelWord { rank, word })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn free_word(&self) -> &FreeWord {
        &self.word
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.word.exponent_sum()
    }

    /// Substitute each `F_i` by its defining B-type word.
    pub fn expand_to_b(&self) -> BraidWord {
        let n = self.rank;
        let mut letters: Vec<Letter> = Vec::new();
        for &l in self.word.letters() {
            let i = l.unsigned_abs() as usize - 1;
            let mut image: Vec<Letter> = (1..=i).rev().map(|j| (Gen::Sigma(j), 1)).collect();
            image.push((Gen::T, 1));
            image.extend((1..=i).map(|j| (Gen::Sigma(j), -1)));
            if l > 0 {
                letters.extend(image);
            } else {
                letters.extend(image.into_iter().rev().map(|(g, s)| (g, -s)));
            }
        }
        BraidWord::from_letters_unchecked(GroupKind::B, n, letters)
    }

    /// Parse the `F0 F1^-1 ..` text form at a given rank.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let mut letters: Vec<i32> = Vec::new();
        for atom in text.split_whitespace() {
            if atom == "1" && letters.is_empty() {
                continue;
            }
            let err = || Error::Syntax {
                offset: 0,
                message: format!("bad kernel atom `{atom}`"),
            };
            let (base, exp) = match atom.find('^') {
                Some(p) => (&atom[..p], atom[p + 1..].parse::<i64>().map_err(|_| err())?),
                None => (atom, 1),
            };
            let i: usize = base.strip_prefix('F').ok_or_else(err)?.parse().map_err(|_| err())?;
            if i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            let letter = (i + 1) as i32;
            for _ in 0..exp.unsigned_abs() {
                letters.push(if exp >= 0 { letter } else { -letter });
            }
        }
        KernelWord::new(rank, FreeWord::reduce(rank + 1, letters)?)
    }
}

impl fmt::Display for KernelWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        for (pos, &l) in self.word.letters().iter().enumerate() {
            if pos > 0 {
                write!(f, " ")?;
            }
            let i = l.unsigned_abs() - 1;
            if l > 0 {
                write!(f, "F{i}")?;
            } else {
                write!(f, "F{i}^-1")?;
            }
        }
        Ok(())
    }
}

/// Conjugation action of a signed crossing on the kernel alphabet:
/// `s_j` sends `F_(j-1) -> F_j` and `F_j -> F_j^-1 F_(j-1) F_j`, fixing
/// the rest. Derived, and oracle-checked in the tests rather than
/// trusted.
fn sigma_action_on_kernel(free_rank: usize, j: usize, sign: i8) -> FreeEndomorphism {
    let mut images: Vec<FreeWord> = (1..=free_rank)
        .map(|i| FreeWord::generator(free_rank, i).unwrap())
        .collect();
    let lo = j as i32; // F_(j-1)
    let hi = (j + 1) as i32; // F_j
    if sign > 0 {
        images[j - 1] = FreeWord::reduce(free_rank, [hi]).unwrap();
        images[j] = FreeWord::reduce(free_rank, [-hi, lo, hi]).unwrap();
    } else {
        images[j - 1] = FreeWord::reduce(free_rank, [lo, hi, -lo]).unwrap();
        images[j] = FreeWord::reduce(free_rank, [lo]).unwrap();
    }
    FreeEndomorphism::from_images(images).unwrap()
}

/// Rewrite a kernel element of the B-type group as a word in the free
/// generators `F0 .. Fn`. The input must have trivial image under
/// `alpha` (equivalently: its crossing part must be trivial); anything
/// else is rejected.
pub fn kernel_rewrite_f(w: &BraidWord, budget: usize) -> Result<KernelWord> {
    if w.kind() != GroupKind::B {
        return Err(Error::KindMismatch { left: w.kind(), right: GroupKind::B });
    }
    let w = w.expand_abbreviations();
    let n = w.rank();
    let free_rank = n + 1;
    let mut conj = FreeEndomorphism::identity(free_rank);
    let mut out = FreeWord::identity(free_rank);
    let mut crossings: Vec<Letter> = Vec::new();
    for &(gen, sign) in w.letters() {
        match gen {
            Gen::T => {
                let f0 = FreeWord::reduce(free_rank, [sign as i32]).unwrap();
                out = out.multiply(&conj.apply(&f0, budget)?)?;
            }
            Gen::Sigma(j) => {
                conj = conj.compose(&sigma_action_on_kernel(free_rank, j, sign), budget)?;
                crossings.push((gen, sign));
            }
            _ => unreachable!("canonical B word"),
        }
    }
    // The crossing part is w's alpha-image; it must be trivial.
    let trailing = BraidWord::from_letters_unchecked(GroupKind::A, n, crossings);
    if !artin_action(&trailing, budget)?.is_identity() {
        return Err(Error::NotInKernel);
    }
    KernelWord::new(n, out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchreierLetter {
    pub j: i64,
    pub i: usize,
    pub sign: i8,
}

/// A freely reduced word over the Schreier generators
/// `g[j,i] = F0^j F_i F0^-(j+1)`, `j` any integer, `1 <= i <= rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchreierWord {
    rank: usize,
    letters: Vec<SchreierLetter>,
}

impl SchreierWord {
    pub fn new(rank: usize, letters: Vec<SchreierLetter>) -> Result<Self> {
        let mut out = SchreierWord { rank, letters: Vec::new() };
        for l in letters {
            if l.i == 0 || l.i > rank {
                return Err(Error::IndexOutOfRange { index: l.i, rank });
            }
            out.push(l);
        }
        Ok(out)
    }

    fn push(&mut self, l: SchreierLetter) {
        let cancels = self
            .letters
            .last()
            .is_some_and(|p| p.j == l.j && p.i == l.i && p.sign == -l.sign);
        if cancels {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[SchreierLetter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Substitute each `g[j,i]` by `F0^j F_i F0^-(j+1)` and reduce.
    pub fn expand_to_kernel(&self) -> KernelWord {
        let free_rank = self.rank + 1;
        let mut letters: Vec<i32> = Vec::new();
        for l in &self.letters {
            let (j, fi) = (l.j, (l.i + 1) as i32);
            let mut image: Vec<i32> = Vec::new();
            image.extend(std::iter::repeat(1i32.copysign_i64(j)).take(j.unsigned_abs() as usize));
            image.push(fi);
            let back = -(j + 1);
            image.extend(
                std::iter::repeat(1i32.copysign_i64(back)).take(back.unsigned_abs() as usize),
            );
            if l.sign > 0 {
                letters.extend(image);
            } else {
                letters.extend(image.into_iter().rev().map(|x| -x));
            }
        }
        KernelWord::new(self.rank, FreeWord::reduce(free_rank, letters).unwrap()).unwrap()
    }

    /// Expansion all the way down to a B-type word.
    pub fn expand_to_b(&self) -> BraidWord {
        self.expand_to_kernel().expand_to_b()
    }

    /// Expansion as a word of the affine group (the expanded B-type word
    /// has zero t-exponent sum, so its phi-part is trivial).
    pub fn expand_to_affine(&self) -> BraidWord {
        let d = phi_decompose(&self.expand_to_b()).expect("expansion is a legal B word");
        debug_assert_eq!(d.k, 0);
        d.lambda
    }

    /// Parse the `g[j,i]` text form at a given rank.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for atom in text.split_whitespace() {
            if atom == "1" && letters.is_empty() {
                continue;
            }
            let err = || Error::Syntax {
                offset: 0,
                message: format!("bad schreier atom `{atom}`"),
            };
            let (base, exp) = match atom.find('^') {
                Some(p) => (&atom[..p], atom[p + 1..].parse::<i64>().map_err(|_| err())?),
                None => (atom, 1),
            };
            let inner = base
                .strip_prefix("g[")
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(err)?;
            let (j_text, i_text) = inner.split_once(',').ok_or_else(err)?;
            let j: i64 = j_text.trim().parse().map_err(|_| err())?;
            let i: usize = i_text.trim().parse().map_err(|_| err())?;
            let sign = if exp >= 0 { 1 } else { -1 };
            for _ in 0..exp.unsigned_abs() {
                letters.push(SchreierLetter { j, i, sign });
            }
        }
        SchreierWord::new(rank, letters)
    }
}

trait CopySign {
    fn copysign_i64(self, from: i64) -> i32;
}

impl CopySign for i32 {
    fn copysign_i64(self, from: i64) -> i32 {
        if from >= 0 {
            self
        } else {
            -self
        }
    }
}

impl fmt::Display for SchreierWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (pos, l) in self.letters.iter().enumerate() {
            if pos > 0 {
                write!(f, " ")?;
            }
            write!(f, "g[{},{}]", l.j, l.i)?;
            if l.sign < 0 {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// Rewrite a zero-exponent-sum kernel word over the Schreier basis, with
/// the coset transversal `{F0^j}`. `F0`-letters only move the running
/// coset exponent; `F_i` at coset `j` becomes `g[j,i]`.
pub fn schreier_rewrite(w: &KernelWord) -> Result<SchreierWord> {
    let sum = w.exponent_sum();
    if sum != 0 {
        return Err(Error::NonzeroExponentSum { sum });
    }
    let mut out = SchreierWord { rank: w.rank(), letters: Vec::new() };
    let mut j: i64 = 0;
    for &l in w.free_word().letters() {
        let i = l.unsigned_abs() as usize - 1;
        if l > 0 {
            if i >= 1 {
                out.push(SchreierLetter { j, i, sign: 1 });
            }
            j += 1;
        } else {
            if i >= 1 {
                out.push(SchreierLetter { j: j - 1, i, sign: -1 });
            }
            j -= 1;
        }
    }
    debug_assert_eq!(j, 0);
    Ok(out)
}

/// Split an affine word along `B(affine) = B(A) x| N_e`: returns
/// `(nu, u)` where `u` is the beta-image and `nu` a Schreier word with
/// `w = nu-expansion . i_inc(u)` as group elements.
pub fn ne_decompose(x: &BraidWord, budget: usize) -> Result<(SchreierWord, BraidWord)> {
    if x.kind() != GroupKind::AffineA {
        return Err(Error::KindMismatch { left: x.kind(), right: GroupKind::AffineA });
    }
    let x = x.expand_abbreviations();
    let n = x.rank();
    let u = apply_morphism(&Morphism::Beta(n), &x)?.free_cancel();
    let embedded_u = apply_morphism(&Morphism::IInc(n), &u)?;
    let kernel_part = x.concat(&embedded_u.inverse())?;
    let b_word = iota(n, &kernel_part)?;
    let kw = match kernel_rewrite_f(&b_word, budget) {
        Err(Error::NotInKernel) => {
            unreachable!("beta-corrected word is in the kernel by construction")
        }
        other => other?,
    };
    let nu = schreier_rewrite(&kw).expect("kernel part has zero t-exponent sum");
    Ok((nu, u))
}

/// Convenience wrapper using the default length budget.
pub fn ne_decompose_default(x: &BraidWord) -> Result<(SchreierWord, BraidWord)> {
    ne_decompose(x, DEFAULT_LEN_BUDGET)
}
