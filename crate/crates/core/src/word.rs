//! Typed braid words for the three group families, their relation tables,
//! abbreviation expansion, parsing and rendering.
//!
//! Rank convention: a word of kind `A` and rank `n` lives in the braid
//! group on `n+1` strands with generators `s1..sn`. Kind `B` with rank
//! `n` addresses the group usually written with `n+1` strand indices
//! (generators `s1..sn` and `t`; one extra fixed strand). Kind `AffineA`
//! with rank `n` has generators `s1..sn` and the affine generator
//! `a(n+1)` closing the cycle.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    A,
    B,
    AffineA,
}

impl GroupKind {
    pub fn tag(self) -> &'static str {
        match self {
            GroupKind::A => "A",
            GroupKind::B => "B",
            GroupKind::AffineA => "AT",
        }
    }
}

/// A generator symbol. `Sigma(i)` is the crossing `s_i`; `T` is the
/// B-type loop generator; `AGen(k)` is an affine generator `a_k`; `Phi`
/// abbreviates `t s1 .. sn` in kind `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    Sigma(usize),
    T,
    AGen(usize),
    Phi,
}

impl Gen {
    fn atom(&self) -> String {
        match self {
            Gen::Sigma(i) => format!("s{i}"),
            Gen::T => "t".to_string(),
            Gen::AGen(k) => format!("a{k}"),
            Gen::Phi => "phi".to_string(),
        }
    }
}

/// A signed generator; the sign is `+1` or `-1`.
pub type Letter = (Gen, i8);

fn letter_atom(&(gen, sign): &Letter) -> String {
    if sign > 0 {
        gen.atom()
    } else {
        format!("{}^-1", gen.atom())
    }
}

/// Is the generator legal in a word of this kind and rank? Abbreviations
/// (`Phi`, low-index `AGen`) count as legal; canonical form excludes them.
fn gen_legal(kind: GroupKind, rank: usize, gen: Gen) -> bool {
    match (kind, gen) {
        (_, Gen::Sigma(i)) => 1 <= i && i <= rank,
        (GroupKind::B, Gen::T) | (GroupKind::B, Gen::Phi) => true,
        (GroupKind::B, Gen::AGen(k)) | (GroupKind::AffineA, Gen::AGen(k)) => {
            k == rank + 1 || (3 <= k && k <= rank)
        }
        _ => false,
    }
}

/// A word over the generator alphabet of one group in the family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    kind: GroupKind,
    rank: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// The empty word. Rank 0 is allowed only for kind `A` (the trivial
    /// group on one strand).
    pub fn identity(kind: GroupKind, rank: usize) -> Result<Self> {
        if rank == 0 && kind != GroupKind::A {
            return Err(Error::IllegalLetter {
                kind,
                rank,
                letter: "rank 0".into(),
            });
        }
        Ok(BraidWord { kind, rank, letters: Vec::new() })
    }

    /// Build a word from letters, validating legality (not canonicity).
    pub fn new(kind: GroupKind, rank: usize, letters: Vec<Letter>) -> Result<Self> {
        let mut w = Self::identity(kind, rank)?;
        for (gen, sign) in &letters {
            if (*sign != 1 && *sign != -1) || !gen_legal(kind, rank, *gen) {
                return Err(Error::IllegalLetter {
                    kind,
                    rank,
                    letter: letter_atom(&(*gen, *sign)),
                });
            }
        }
        w.letters = letters;
        Ok(w)
    }

    /// Letters are asserted legal by the caller.
    pub(crate) fn from_letters_unchecked(
        kind: GroupKind,
        rank: usize,
        letters: Vec<Letter>,
    ) -> Self {
        debug_assert!(letters.iter().all(|&(g, s)| {
            (s == 1 || s == -1) && gen_legal(kind, rank, g)
        }));
        BraidWord { kind, rank, letters }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Signed letter count (the writhe of the closed diagram for kind A).
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&(_, s)| s as i64).sum()
    }

    /// Canonical storage form: no `Phi`, no `AGen` other than the affine
    /// generator `a(n+1)` of kind `AffineA`.
    pub fn is_canonical(&self) -> bool {
        self.letters.iter().all(|&(g, _)| match g {
            Gen::Sigma(_) | Gen::T => true,
            Gen::Phi => false,
            Gen::AGen(k) => self.kind == GroupKind::AffineA && k == self.rank + 1,
        })
    }

    /// Expand every abbreviation, yielding the canonical storage form of
    /// the same group element. Idempotent.
    pub fn expand_abbreviations(&self) -> BraidWord {
        let n = self.rank;
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &(gen, sign) in &self.letters {
            let expansion: Vec<Letter> = match (self.kind, gen) {
                (_, Gen::Sigma(_)) | (_, Gen::T) => {
                    out.push((gen, sign));
                    continue;
                }
                (GroupKind::AffineA, Gen::AGen(k)) if k == n + 1 => {
                    out.push((gen, sign));
                    continue;
                }
                // phi = t s1 .. sn
                (GroupKind::B, Gen::Phi) => {
                    let mut v = vec![(Gen::T, 1)];
                    v.extend((1..=n).map(|i| (Gen::Sigma(i), 1)));
                    v
                }
                // a(n+1) in kind B: t s1 .. s(n-1) sn s(n-1)^-1 .. s1^-1 t^-1
                (GroupKind::B, Gen::AGen(k)) if k == n + 1 => agen_top_expansion_b(n),
                // a_k = sk .. sn a(n+1) sn^-1 .. sk^-1
                (GroupKind::B, Gen::AGen(k)) | (GroupKind::AffineA, Gen::AGen(k)) => {
                    let mut v: Vec<Letter> = (k..=n).map(|i| (Gen::Sigma(i), 1)).collect();
                    match self.kind {
                        GroupKind::AffineA => v.push((Gen::AGen(n + 1), 1)),
                        _ => v.extend(agen_top_expansion_b(n)),
                    }
                    v.extend((k..=n).rev().map(|i| (Gen::Sigma(i), -1)));
                    v
                }
                (_, Gen::Phi) | (GroupKind::A, Gen::AGen(_)) => {
                    unreachable!("letter was validated at construction")
                }
            };
            if sign > 0 {
                out.extend(expansion);
            } else {
                out.extend(expansion.into_iter().rev().map(|(g, s)| (g, -s)));
            }
        }
        BraidWord { kind: self.kind, rank: n, letters: out }
    }

    /// Concatenation; requires matching kind and rank.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch { left: self.kind, right: other.kind });
        }
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { kind: self.kind, rank: self.rank, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            kind: self.kind,
            rank: self.rank,
            letters: self.letters.iter().rev().map(|&(g, s)| (g, -s)).collect(),
        }
    }

    /// Remove adjacent letter/inverse pairs. This preserves the group
    /// element but is not a normal form.
    pub fn free_cancel(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &(g, s) in &self.letters {
            if out.last() == Some(&(g, -s)) {
                out.pop();
            } else {
                out.push((g, s));
            }
        }
        BraidWord { kind: self.kind, rank: self.rank, letters: out }
    }
}

/// Expansion of the topmost affine generator inside kind `B` at rank `n`:
/// `t s1 .. s(n-1) sn s(n-1)^-1 .. s1^-1 t^-1`.
fn agen_top_expansion_b(n: usize) -> Vec<Letter> {
    let mut v = vec![(Gen::T, 1)];
    v.extend((1..=n).map(|i| (Gen::Sigma(i), 1)));
    v.extend((1..n).rev().map(|i| (Gen::Sigma(i), -1)));
    v.push((Gen::T, -1));
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Presentation {
    Formal,
    Parabolic,
}

/// One defining relation, `lhs = rhs`, tagged with the presentation's
/// numbering.
#[derive(Debug, Clone)]
pub struct Relation {
    pub label: String,
    pub lhs: BraidWord,
    pub rhs: BraidWord,
}

#[derive(Debug, Clone)]
pub struct RelationTable {
    pub kind: GroupKind,
    pub rank: usize,
    pub presentation: Presentation,
    pub relations: Vec<Relation>,
}

/// The complete defining-relation table for a presentation. Parabolic
/// tables exist only for kind `AffineA` at rank `n >= 3` and keep their
/// `a3` letters unexpanded.
pub fn defining_relations(
    kind: GroupKind,
    rank: usize,
    presentation: Presentation,
) -> Result<RelationTable> {
    let n = rank;
    let mk = |letters: Vec<Letter>| BraidWord::new(kind, n, letters);
    let s = Gen::Sigma;
    let mut relations = Vec::new();
    let mut push = |label: String, lhs: Vec<Letter>, rhs: Vec<Letter>| -> Result<()> {
        relations.push(Relation { label, lhs: mk(lhs)?, rhs: mk(rhs)? });
        Ok(())
    };

    match (kind, presentation) {
        (GroupKind::A, Presentation::Formal) => {
            for i in 1..=n {
                for j in i + 2..=n {
                    push(
                        format!("comm s{i} s{j}"),
                        vec![(s(i), 1), (s(j), 1)],
                        vec![(s(j), 1), (s(i), 1)],
                    )?;
                }
            }
            for i in 1..n {
                push(
                    format!("braid s{i} s{}", i + 1),
                    vec![(s(i), 1), (s(i + 1), 1), (s(i), 1)],
                    vec![(s(i + 1), 1), (s(i), 1), (s(i + 1), 1)],
                )?;
            }
        }
        (GroupKind::B, Presentation::Formal) => {
            if n == 0 {
                return Err(Error::UnsupportedPresentation("B requires rank >= 1".into()));
            }
            for i in 1..=n {
                for j in i + 2..=n {
                    push(
                        format!("comm s{i} s{j}"),
                        vec![(s(i), 1), (s(j), 1)],
                        vec![(s(j), 1), (s(i), 1)],
                    )?;
                }
            }
            for i in 1..n {
                push(
                    format!("braid s{i} s{}", i + 1),
                    vec![(s(i), 1), (s(i + 1), 1), (s(i), 1)],
                    vec![(s(i + 1), 1), (s(i), 1), (s(i + 1), 1)],
                )?;
            }
            for i in 2..=n {
                push(
                    format!("comm s{i} t"),
                    vec![(s(i), 1), (Gen::T, 1)],
                    vec![(Gen::T, 1), (s(i), 1)],
                )?;
            }
            push(
                "quartic s1 t".into(),
                vec![(s(1), 1), (Gen::T, 1), (s(1), 1), (Gen::T, 1)],
                vec![(Gen::T, 1), (s(1), 1), (Gen::T, 1), (s(1), 1)],
            )?;
        }
        (GroupKind::AffineA, Presentation::Formal) => {
            if n == 0 {
                return Err(Error::UnsupportedPresentation(
                    "AffineA requires rank >= 1".into(),
                ));
            }
            // Rank 1 is the free group on s1 and a2: no relations.
            if n >= 2 {
                let a = Gen::AGen(n + 1);
                for i in 1..=n {
                    for j in i + 2..=n {
                        push(
                            format!("(1') comm s{i} s{j}"),
                            vec![(s(i), 1), (s(j), 1)],
                            vec![(s(j), 1), (s(i), 1)],
                        )?;
                    }
                }
                for i in 1..n {
                    push(
                        format!("(2') braid s{i} s{}", i + 1),
                        vec![(s(i), 1), (s(i + 1), 1), (s(i), 1)],
                        vec![(s(i + 1), 1), (s(i), 1), (s(i + 1), 1)],
                    )?;
                }
                for i in 2..n {
                    push(
                        format!("(3') comm s{i} a{}", n + 1),
                        vec![(s(i), 1), (a, 1)],
                        vec![(a, 1), (s(i), 1)],
                    )?;
                }
                push(
                    format!("(4') braid s1 a{}", n + 1),
                    vec![(s(1), 1), (a, 1), (s(1), 1)],
                    vec![(a, 1), (s(1), 1), (a, 1)],
                )?;
                push(
                    format!("(5') braid s{n} a{}", n + 1),
                    vec![(s(n), 1), (a, 1), (s(n), 1)],
                    vec![(a, 1), (s(n), 1), (a, 1)],
                )?;
            }
        }
        (GroupKind::AffineA, Presentation::Parabolic) => {
            if n < 3 {
                return Err(Error::UnsupportedPresentation(
                    "parabolic presentation requires rank >= 3".into(),
                ));
            }
            let a = Gen::AGen(3);
            for i in 1..=n {
                for j in i + 2..=n {
                    push(
                        format!("(1) comm s{i} s{j}"),
                        vec![(s(i), 1), (s(j), 1)],
                        vec![(s(j), 1), (s(i), 1)],
                    )?;
                }
            }
            for i in 1..n {
                push(
                    format!("(2) braid s{i} s{}", i + 1),
                    vec![(s(i), 1), (s(i + 1), 1), (s(i), 1)],
                    vec![(s(i + 1), 1), (s(i), 1), (s(i + 1), 1)],
                )?;
            }
            push(
                "(3) braid s1 a3".into(),
                vec![(s(1), 1), (a, 1), (s(1), 1)],
                vec![(a, 1), (s(1), 1), (a, 1)],
            )?;
            push(
                "(4) braid s3 a3".into(),
                vec![(s(3), 1), (a, 1), (s(3), 1)],
                vec![(a, 1), (s(3), 1), (a, 1)],
            )?;
            for i in 4..=n {
                push(
                    format!("(5) comm s{i} a3"),
                    vec![(s(i), 1), (a, 1)],
                    vec![(a, 1), (s(i), 1)],
                )?;
            }
            push(
                "(6) mixed s3 s2 a3".into(),
                vec![(s(3), 1), (s(2), 1), (a, 1), (s(3), 1)],
                vec![(s(2), 1), (a, 1), (s(3), 1), (s(2), 1)],
            )?;
        }
        (_, Presentation::Parabolic) => {
            return Err(Error::UnsupportedPresentation(format!(
                "no parabolic presentation for kind {kind:?}"
            )));
        }
    }

    Ok(RelationTable { kind, rank, presentation, relations })
}

/// Parse without expanding abbreviations; the result may be non-canonical.
pub fn parse_raw(text: &str) -> Result<BraidWord> {
    let syntax = |offset: usize, message: &str| Error::Syntax {
        offset,
        message: message.to_string(),
    };

    let rest = text.trim_start();
    let base = text.len() - rest.len();
    let colon = rest
        .find(':')
        .ok_or_else(|| syntax(base, "expected header `A:`, `B:` or `AT:`"))?;
    let kind = match &rest[..colon] {
        "A" => GroupKind::A,
        "B" => GroupKind::B,
        "AT" => GroupKind::AffineA,
        other => {
            return Err(syntax(base, &format!("unknown kind `{other}`")));
        }
    };
    let after_kind = &rest[colon + 1..];
    let after_kind_off = base + colon + 1;
    let digits = after_kind
        .strip_prefix("n=")
        .ok_or_else(|| syntax(after_kind_off, "expected `n=<rank>`"))?;
    let digits_off = after_kind_off + 2;
    let end = digits.find(|c: char| !c.is_ascii_digit()).unwrap_or(digits.len());
    if end == 0 {
        return Err(syntax(digits_off, "expected a rank number"));
    }
    let rank: usize = digits[..end]
        .parse()
        .map_err(|_| syntax(digits_off, "rank does not fit"))?;
    if !digits[end..].starts_with(':') {
        return Err(syntax(digits_off + end, "expected `:` after rank"));
    }
    let word_text = &digits[end + 1..];
    let word_off = digits_off + end + 1;

    let mut w = BraidWord::identity(kind, rank).map_err(|_| {
        syntax(base, &format!("rank {rank} illegal for kind {}", kind.tag()))
    })?;

    // Walk whitespace-separated atoms, tracking byte offsets.
    let mut letters: Vec<Letter> = Vec::new();
    let mut it = word_text.char_indices().peekable();
    while let Some(&(start, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
            continue;
        }
        let mut end = start;
        while let Some(&(i, c)) = it.peek() {
            if c.is_whitespace() {
                break;
            }
            end = i + c.len_utf8();
            it.next();
        }
        let atom = &word_text[start..end];
        let offset = word_off + start;
        let (gen, exp) = parse_atom(atom, offset)?;
        if !gen_legal(kind, rank, gen) {
            let reason = match gen {
                Gen::Sigma(i) if i > rank => format!("generator s{i} exceeds rank {rank}"),
                _ => format!("generator {} illegal for kind {}", gen.atom(), kind.tag()),
            };
            return Err(syntax(offset, &reason));
        }
        let sign = if exp >= 0 { 1 } else { -1 };
        for _ in 0..exp.unsigned_abs() {
            letters.push((gen, sign));
        }
    }
    w.letters = letters;
    Ok(w)
}

fn parse_atom(atom: &str, offset: usize) -> Result<(Gen, i64)> {
    let syntax = |message: String| Error::Syntax { offset, message };
    let (base, exp_text) = match atom.find('^') {
        Some(i) => (&atom[..i], Some(&atom[i + 1..])),
        None => (atom, None),
    };
    let gen = if base == "t" {
        Gen::T
    } else if base == "phi" {
        Gen::Phi
    } else if let Some(d) = base.strip_prefix('s') {
        Gen::Sigma(d.parse().map_err(|_| syntax(format!("bad atom `{atom}`")))?)
    } else if let Some(d) = base.strip_prefix('a') {
        Gen::AGen(d.parse().map_err(|_| syntax(format!("bad atom `{atom}`")))?)
    } else {
        return Err(syntax(format!("bad atom `{atom}`")));
    };
    let exp = match exp_text {
        None => 1,
        Some(e) => e
            .parse::<i64>()
            .map_err(|_| syntax(format!("bad exponent in `{atom}`")))?,
    };
    Ok((gen, exp))
}

/// Parse and expand abbreviations, yielding the canonical storage form.
pub fn parse(text: &str) -> Result<BraidWord> {
    Ok(parse_raw(text)?.expand_abbreviations())
}

/// Render a word in the grammar accepted by [`parse`]; one atom per letter.
pub fn render(w: &BraidWord) -> String {
    let mut out = format!("{}:n={}:", w.kind().tag(), w.rank());
    for l in w.letters() {
        out.push(' ');
        out.push_str(&letter_atom(l));
    }
    out
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

impl FromStr for BraidWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pw(text: &str) -> BraidWord {
        parse(text).unwrap()
    }

    #[test]
    fn expand_phi() {
        assert_eq!(pw("B:n=2: phi"), pw("B:n=2: t s1 s2"));
    }

    #[test]
    fn expand_a3_in_b() {
        assert_eq!(pw("B:n=2: a3"), pw("B:n=2: t s1 s2 s1^-1 t^-1"));
    }

    #[test]
    fn expand_parabolic_a3_in_affine() {
        assert_eq!(pw("AT:n=3: a3"), pw("AT:n=3: s3 a4 s3^-1"));
    }

    #[test]
    fn expand_is_idempotent_and_preserves_kind_rank() {
        for text in ["B:n=3: phi a4 t", "AT:n=4: a3 a4 s2", "B:n=1: a2"] {
            let w = parse_raw(text).unwrap();
            let e = w.expand_abbreviations();
            assert!(e.is_canonical(), "{text}");
            assert_eq!(e.kind(), w.kind());
            assert_eq!(e.rank(), w.rank());
            assert_eq!(e.expand_abbreviations(), e);
        }
    }

    #[test]
    fn concat_cancel_invert() {
        let w = pw("A:n=2: s1").concat(&pw("A:n=2: s1^-1")).unwrap();
        assert!(w.free_cancel().is_empty());
        assert_eq!(pw("AT:n=3: s1 a4").inverse(), pw("AT:n=3: a4^-1 s1^-1"));
        assert_eq!(
            pw("A:n=2: s2 s1 s1^-1 s2").free_cancel(),
            pw("A:n=2: s2 s2")
        );
    }

    #[test]
    fn concat_rejects_mismatch() {
        assert!(pw("A:n=2: s1").concat(&pw("A:n=3: s1")).is_err());
        assert!(pw("A:n=2: s1").concat(&pw("B:n=2: s1")).is_err());
    }

    fn table_has(table: &RelationTable, lhs: &str, rhs: &str) -> bool {
        let (l, r) = (parse_raw(lhs).unwrap(), parse_raw(rhs).unwrap());
        table
            .relations
            .iter()
            .any(|rel| rel.lhs == l && rel.rhs == r)
    }

    #[test]
    fn a3_formal_table() {
        let t = defining_relations(GroupKind::A, 3, Presentation::Formal).unwrap();
        assert!(table_has(&t, "A:n=3: s1 s3", "A:n=3: s3 s1"));
        assert!(table_has(&t, "A:n=3: s1 s2 s1", "A:n=3: s2 s1 s2"));
        assert_eq!(t.relations.len(), 3);
    }

    #[test]
    fn affine2_formal_table() {
        let t = defining_relations(GroupKind::AffineA, 2, Presentation::Formal).unwrap();
        assert!(table_has(&t, "AT:n=2: s1 a3 s1", "AT:n=2: a3 s1 a3"));
        assert_eq!(t.relations.len(), 3);
    }

    #[test]
    fn affine4_parabolic_table_keeps_a3_spelling() {
        let t = defining_relations(GroupKind::AffineA, 4, Presentation::Parabolic).unwrap();
        assert!(table_has(&t, "AT:n=4: s3 s2 a3 s3", "AT:n=4: s2 a3 s3 s2"));
    }

    #[test]
    fn affine1_is_free() {
        let t = defining_relations(GroupKind::AffineA, 1, Presentation::Formal).unwrap();
        assert!(t.relations.is_empty());
    }

    #[test]
    fn parabolic_needs_rank_three() {
        assert!(defining_relations(GroupKind::AffineA, 2, Presentation::Parabolic).is_err());
        assert!(defining_relations(GroupKind::B, 3, Presentation::Parabolic).is_err());
    }

    #[test]
    fn parse_basic() {
        let w = pw("A:n=2: s1 s2^-1");
        assert_eq!(
            w.letters(),
            &[(Gen::Sigma(1), 1), (Gen::Sigma(2), -1)]
        );
    }

    #[test]
    fn parse_exponents() {
        let w = pw("AT:n=3: a4 s1^2");
        assert_eq!(
            w.letters(),
            &[(Gen::AGen(4), 1), (Gen::Sigma(1), 1), (Gen::Sigma(1), 1)]
        );
    }

    #[test]
    fn parse_rejects_rank_violation() {
        match parse("B:n=2: t s9") {
            Err(Error::Syntax { offset, message }) => {
                assert!(message.contains("s9"), "{message}");
                assert_eq!(&"B:n=2: t s9"[offset..offset + 2], "s9");
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_noise() {
        assert!(parse("C:n=2: s1").is_err());
        assert!(parse("A:n=: s1").is_err());
        assert!(parse("A:n=2: q1").is_err());
        assert!(parse("A:n=2: s1^x").is_err());
        assert!(parse("B:n=0:").is_err());
    }

    #[test]
    fn parse_empty_word() {
        assert!(pw("A:n=2:").is_empty());
        assert!(pw("A:n=0:").is_empty());
    }

    fn arb_canonical(kind: GroupKind, rank: usize) -> impl Strategy<Value = BraidWord> {
        let mut gens: Vec<Gen> = (1..=rank).map(Gen::Sigma).collect();
        match kind {
            GroupKind::A => {}
            GroupKind::B => gens.push(Gen::T),
            GroupKind::AffineA => gens.push(Gen::AGen(rank + 1)),
        }
        prop::collection::vec(
            (prop::sample::select(gens), prop::sample::select(vec![1i8, -1])),
            0..16,
        )
        .prop_map(move |letters| BraidWord::new(kind, rank, letters).unwrap())
    }

    proptest! {
        #[test]
        fn parse_render_round_trip(
            w in prop::sample::select(vec![GroupKind::A, GroupKind::B, GroupKind::AffineA])
                .prop_flat_map(|k| arb_canonical(k, 3))
        ) {
            prop_assert_eq!(parse(&render(&w)).unwrap(), w);
        }
    }
}
