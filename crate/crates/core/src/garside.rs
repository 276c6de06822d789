//! Garside left-greedy normal form for spherical Artin groups.
//!
//! Every element of the Artin group of a finite Coxeter group `W` is written
//! uniquely as `Δ^p · x₁ ⋯ x_ℓ` where each `xᵢ` is a simple element (the
//! positive lift of an element of `W` other than `1` and `w0`) and each
//! adjacent pair is left-weighted: every left descent of `xᵢ₊₁` is a right
//! descent of `xᵢ`. Two braid words are equal in the group exactly when
//! their normal forms coincide.
//!
//! Over [`SymmetricGroup`](crate::realization::SymmetricGroup) this is the
//! permutation-braid normal form of the classical braid group.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::realization::{meet_and_remainder, Realization};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GarsideError {
    #[error("letter {letter} is not a generator (rank {rank})")]
    InvalidGenerator { letter: i32, rank: usize },
    #[error("braid elements belong to different realizations")]
    RealizationMismatch,
    #[error("cannot parse braid word: {0}")]
    Parse(String),
}

/// A word in the Artin generators: `+i` is `σᵢ`, `-i` is `σᵢ⁻¹` (1-based).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BraidWord {
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(letters: Vec<i32>) -> Self {
        BraidWord { letters }
    }

    pub fn positive(gens: &[usize]) -> Self {
        BraidWord {
            letters: gens.iter().map(|&g| g as i32).collect(),
        }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reversed with every letter negated.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { letters }
    }

    /// Largest generator index used.
    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn check_rank(&self, rank: usize) -> Result<(), GarsideError> {
        match self
            .letters
            .iter()
            .find(|l| **l == 0 || l.unsigned_abs() as usize > rank)
        {
            Some(&letter) => Err(GarsideError::InvalidGenerator { letter, rank }),
            None => Ok(()),
        }
    }
}

impl FromStr for BraidWord {
    type Err = GarsideError;

    /// Whitespace- or comma-separated letters: `2 -1 3`, or `s2 S1 s3` with a
    /// capital letter for the inverse.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let letters = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|tok| {
                let bad = || GarsideError::Parse(format!("bad letter {tok:?}"));
                let (sign, digits) = if let Some(d) = tok.strip_prefix('s') {
                    (1, d)
                } else if let Some(d) = tok.strip_prefix('S') {
                    (-1, d)
                } else {
                    (1, tok)
                };
                let v: i32 = digits.parse().map_err(|_| bad())?;
                if v == 0 || (sign < 0 && v < 0) || (digits != tok && v < 0) {
                    return Err(bad());
                }
                Ok(sign * v)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BraidWord { letters })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `Δ⁻¹·x·Δ`; as elements of `W`, `w0·x·w0`.
pub fn tau<R: Realization + ?Sized>(r: &R, x: &R::Elem) -> R::Elem {
    let w0 = r.longest();
    r.mul(&r.mul(&w0, x), &w0)
}

fn tau_pow<R: Realization + ?Sized>(r: &R, x: R::Elem, power: i64) -> R::Elem {
    // w0 is an involution, so τ has order at most 2
    if power.rem_euclid(2) == 1 {
        tau(r, &x)
    } else {
        x
    }
}

/// Incremental right multiplication of a left-weighted factor list by
/// simples. Each push runs one right-to-left pass of local transfers and
/// stops as soon as a pair is already left-weighted.
struct Normalizer<'a, R: Realization + ?Sized> {
    r: &'a R,
    w0: R::Elem,
    delta: i64,
    factors: Vec<R::Elem>,
}

impl<'a, R: Realization + ?Sized> Normalizer<'a, R> {
    fn new(r: &'a R, delta: i64, factors: Vec<R::Elem>) -> Self {
        Normalizer {
            r,
            w0: r.longest(),
            delta,
            factors,
        }
    }

    fn push(&mut self, x: R::Elem) {
        let r = self.r;
        if r.is_identity(&x) {
            return;
        }
        self.factors.push(x);
        let mut i = self.factors.len() - 1;
        while i > 0 {
            let a = &self.factors[i - 1];
            let complement = r.mul(&r.inverse(a), &self.w0);
            let (t, rest) = meet_and_remainder(r, &complement, &self.factors[i]);
            if r.is_identity(&t) {
                break;
            }
            self.factors[i - 1] = r.mul(a, &t);
            self.factors[i] = rest;
            i -= 1;
        }
        while self.factors.last().is_some_and(|f| r.is_identity(f)) {
            self.factors.pop();
        }
        let leading = self.factors.iter().take_while(|f| **f == self.w0).count();
        if leading > 0 {
            self.delta += leading as i64;
            self.factors.drain(..leading);
        }
    }

    fn finish(self) -> (i64, Vec<R::Elem>) {
        (self.delta, self.factors)
    }
}

/// An element of an Artin group in Garside normal form `Δ^p · x₁ ⋯ x_ℓ`.
pub struct BraidElement<R: Realization> {
    realization: Arc<R>,
    delta: i64,
    factors: Vec<R::Elem>,
}

impl<R: Realization> Clone for BraidElement<R> {
    fn clone(&self) -> Self {
        BraidElement {
            realization: Arc::clone(&self.realization),
            delta: self.delta,
            factors: self.factors.clone(),
        }
    }
}

impl<R: Realization> BraidElement<R> {
    pub fn identity(r: &Arc<R>) -> Self {
        BraidElement {
            realization: Arc::clone(r),
            delta: 0,
            factors: Vec::new(),
        }
    }

    /// `Δ^power`.
    pub fn delta(r: &Arc<R>, power: i64) -> Self {
        BraidElement {
            realization: Arc::clone(r),
            delta: power,
            factors: Vec::new(),
        }
    }

    /// The positive lift of `w` in which each pair of strands crosses at most
    /// once (in type A); in general the lift along any reduced word.
    pub fn simple_lift(r: &Arc<R>, w: R::Elem) -> Self {
        if r.is_identity(&w) {
            Self::identity(r)
        } else if w == r.longest() {
            Self::delta(r, 1)
        } else {
            BraidElement {
                realization: Arc::clone(r),
                delta: 0,
                factors: vec![w],
            }
        }
    }

    pub fn generator(r: &Arc<R>, letter: i32) -> Result<Self, GarsideError> {
        Self::from_word(r, &BraidWord::new(vec![letter]))
    }

    pub fn from_word(r: &Arc<R>, word: &BraidWord) -> Result<Self, GarsideError> {
        word.check_rank(r.rank())?;
        let rr: &R = r;
        let w0 = rr.longest();
        let letters = word.letters();
        let negatives = letters.iter().filter(|l| **l < 0).count() as i64;
        let mut norm = Normalizer::new(rr, -negatives, Vec::new());
        // σᵢ⁻¹ = Δ⁻¹·(w0·sᵢ); every Δ⁻¹ moved to the front twists the factors it
        // passes by τ.
        let mut negatives_after = negatives;
        for &l in letters {
            let s = l.unsigned_abs() as usize - 1;
            let x = if l > 0 {
                rr.generator(s)
            } else {
                negatives_after -= 1;
                rr.mul(&w0, &rr.generator(s))
            };
            norm.push(tau_pow(rr, x, negatives_after));
        }
        let (delta, factors) = norm.finish();
        Ok(BraidElement {
            realization: Arc::clone(r),
            delta,
            factors,
        })
    }

    /// Builds the normal form of `Δ^delta · x₁ ⋯ x_ℓ` for arbitrary simples.
    pub fn from_simples(r: &Arc<R>, delta: i64, simples: &[R::Elem]) -> Self {
        let mut norm = Normalizer::new(&**r, delta, Vec::new());
        for x in simples {
            norm.push(x.clone());
        }
        let (delta, factors) = norm.finish();
        BraidElement {
            realization: Arc::clone(r),
            delta,
            factors,
        }
    }

    pub fn realization(&self) -> &Arc<R> {
        &self.realization
    }

    pub fn delta_power(&self) -> i64 {
        self.delta
    }

    pub fn factors(&self) -> &[R::Elem] {
        &self.factors
    }

    /// Number of simple factors, not counting `Δ`-powers.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.delta == 0 && self.factors.is_empty()
    }

    fn same_realization(&self, other: &Self) -> Result<(), GarsideError> {
        if Arc::ptr_eq(&self.realization, &other.realization) {
            Ok(())
        } else {
            Err(GarsideError::RealizationMismatch)
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, GarsideError> {
        self.same_realization(other)?;
        let r: &R = &self.realization;
        // Δ^p A Δ^q B = Δ^(p+q) τ^q(A) B
        let twisted = self
            .factors
            .iter()
            .map(|x| tau_pow(r, x.clone(), other.delta))
            .collect();
        let mut norm = Normalizer::new(r, self.delta + other.delta, twisted);
        for x in &other.factors {
            norm.push(x.clone());
        }
        let (delta, factors) = norm.finish();
        Ok(BraidElement {
            realization: Arc::clone(&self.realization),
            delta,
            factors,
        })
    }

    pub fn invert(&self) -> Self {
        let r: &R = &self.realization;
        let w0 = r.longest();
        let len = self.factors.len() as i64;
        // (Δ^p x₁⋯x_ℓ)⁻¹ = ∂x_ℓ Δ⁻¹ ⋯ ∂x₁ Δ⁻¹ Δ^-p with ∂x = x⁻¹·w0
        let mut norm = Normalizer::new(r, -len - self.delta, Vec::new());
        for (k, x) in self.factors.iter().rev().enumerate() {
            let complement = r.mul(&r.inverse(x), &w0);
            norm.push(tau_pow(r, complement, len - k as i64 + self.delta));
        }
        let (delta, factors) = norm.finish();
        BraidElement {
            realization: Arc::clone(&self.realization),
            delta,
            factors,
        }
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut acc = Self::identity(&self.realization);
        for _ in 0..n.unsigned_abs() {
            acc = acc.multiply(&base).expect("same realization");
        }
        acc
    }

    /// Group equality, decided by comparing normal forms.
    pub fn equal(&self, other: &Self) -> Result<bool, GarsideError> {
        self.same_realization(other)?;
        Ok(self.delta == other.delta && self.factors == other.factors)
    }

    /// Image in `W`: `w0^p · x₁ ⋯ x_ℓ`.
    pub fn underlying_permutation(&self) -> R::Elem {
        let r: &R = &self.realization;
        let start = if self.delta.rem_euclid(2) == 1 {
            r.longest()
        } else {
            r.identity()
        };
        self.factors.iter().fold(start, |acc, x| r.mul(&acc, x))
    }

    pub fn is_pure(&self) -> bool {
        self.realization.is_identity(&self.underlying_permutation())
    }

    /// A word spelling this element: `Δ`-powers first, then each factor as
    /// its reduced word with the smallest left descent stripped first.
    pub fn to_word(&self) -> BraidWord {
        let r: &R = &self.realization;
        let delta_word: Vec<i32> = r
            .reduced_word(&r.longest())
            .into_iter()
            .map(|s| s as i32 + 1)
            .collect();
        let mut letters = Vec::new();
        for _ in 0..self.delta.unsigned_abs() {
            if self.delta > 0 {
                letters.extend_from_slice(&delta_word);
            } else {
                letters.extend(delta_word.iter().rev().map(|l| -l));
            }
        }
        for x in &self.factors {
            letters.extend(r.reduced_word(x).into_iter().map(|s| s as i32 + 1));
        }
        BraidWord::new(letters)
    }

    /// Checks the normal-form invariants: no identity or `Δ` factor, and
    /// every adjacent pair left-weighted.
    pub fn is_normal_form(&self) -> bool {
        let r: &R = &self.realization;
        let w0 = r.longest();
        if self.factors.iter().any(|x| r.is_identity(x) || *x == w0) {
            return false;
        }
        self.factors.windows(2).all(|pair| {
            r.left_descents(&pair[1])
                .into_iter()
                .all(|s| r.is_right_descent(&pair[0], s))
        })
    }

    /// Hashable normal-form key, independent of the realization handle.
    pub fn key(&self) -> (i64, Vec<R::Elem>) {
        (self.delta, self.factors.clone())
    }
}

impl<R: Realization> PartialEq for BraidElement<R> {
    fn eq(&self, other: &Self) -> bool {
        matches!(self.equal(other), Ok(true))
    }
}

impl<R: Realization> Eq for BraidElement<R> {}

impl<R: Realization> Hash for BraidElement<R> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.delta.hash(state);
        self.factors.hash(state);
    }
}

impl<R: Realization> fmt::Debug for BraidElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidElement({self})")
    }
}

/// `D^p | w1 | w2 | …`
impl<R: Realization> fmt::Display for BraidElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{} |", self.delta)?;
        for (i, x) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " |")?;
            }
            write!(f, " {}", self.realization.label(x))?;
        }
        Ok(())
    }
}
