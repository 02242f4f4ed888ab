//! The mod-2 Steenrod algebra as a rewriting system.
//!
//! Elements are F2-sums of compositions `Sq^i1 Sq^i2 ... Sq^ik`. A composition
//! is *admissible* when `i_j >= 2 i_(j+1)` for every adjacent pair; the Adem
//! relations rewrite any inadmissible pair `Sq^a Sq^b` (`a < 2b`) into a sum of
//! words that are closer to admissible, and exhaustive rewriting yields the
//! unique admissible form.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::f2::{adem_coeff, FormalSum};

/// Default number of rewrite applications allowed per `normalize` call.
pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

/// A composition of Steenrod squares, outermost square first.
///
/// `Sq^0` is the identity and never appears inside a word; the empty word is
/// the identity operation.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SqWord(Vec<u32>);

impl SqWord {
    pub fn identity() -> Self {
        SqWord(Vec::new())
    }

    /// Builds a word, dropping any `Sq^0` letters.
    pub fn new(exponents: impl IntoIterator<Item = u32>) -> Self {
        SqWord(exponents.into_iter().filter(|&i| i != 0).collect())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `i1 - (i2 + ... + ik)`, clamped at zero.
    pub fn excess(&self) -> u32 {
        match self.0.split_first() {
            None => 0,
            Some((first, rest)) => first.saturating_sub(rest.iter().sum()),
        }
    }

    pub fn is_admissible(&self) -> bool {
        self.first_inadmissible().is_none()
    }

    /// Index of the leftmost adjacent pair `(a, b)` with `a < 2b`.
    pub fn first_inadmissible(&self) -> Option<usize> {
        self.0.windows(2).position(|p| p[0] < 2 * p[1])
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &SqWord) -> SqWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SqWord(v)
    }

    fn splice(&self, pos: usize, replacement: &SqWord) -> SqWord {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0[..pos]);
        v.extend_from_slice(&replacement.0);
        v.extend_from_slice(&self.0[pos + 2..]);
        SqWord(v)
    }
}

impl From<Vec<u32>> for SqWord {
    fn from(v: Vec<u32>) -> Self {
        SqWord::new(v)
    }
}

impl<const N: usize> From<[u32; N]> for SqWord {
    fn from(v: [u32; N]) -> Self {
        SqWord::new(v)
    }
}

/// Canonical order: degree, then length, then lexicographic on exponents.
impl Ord for SqWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.0.len().cmp(&other.0.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for SqWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SqWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "Sq{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SqWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// An element of the Steenrod algebra: an F2-sum of words.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AdemElement(FormalSum<SqWord>);

impl AdemElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(SqWord::identity())
    }

    pub fn from_word(w: impl Into<SqWord>) -> Self {
        AdemElement(FormalSum::single(w.into()))
    }

    pub fn from_words<W: Into<SqWord>>(words: impl IntoIterator<Item = W>) -> Self {
        AdemElement(words.into_iter().map(Into::into).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn words(&self) -> impl Iterator<Item = &SqWord> {
        self.0.iter()
    }

    pub fn terms(&self) -> &FormalSum<SqWord> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn toggle(&mut self, w: SqWord) {
        self.0.toggle(w);
    }

    pub fn is_admissible(&self) -> bool {
        self.words().all(SqWord::is_admissible)
    }

    /// The common degree of all words, if there is one. Zero has no degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.words().map(SqWord::degree);
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    /// Composition of every pair of words, without normalizing.
    pub fn compose(&self, other: &AdemElement) -> AdemElement {
        AdemElement(
            self.words()
                .flat_map(|a| other.words().map(move |b| a.compose(b)))
                .collect(),
        )
    }

    pub fn sum(&self, other: &AdemElement) -> AdemElement {
        AdemElement(self.0.sum(&other.0))
    }
}

impl std::ops::Add for AdemElement {
    type Output = AdemElement;
    fn add(self, rhs: Self) -> Self {
        AdemElement(self.0 + rhs.0)
    }
}

impl std::ops::AddAssign<&AdemElement> for AdemElement {
    fn add_assign(&mut self, rhs: &AdemElement) {
        self.0 += &rhs.0;
    }
}

impl FromIterator<SqWord> for AdemElement {
    fn from_iter<I: IntoIterator<Item = SqWord>>(iter: I) -> Self {
        AdemElement(iter.into_iter().collect())
    }
}

impl fmt::Display for AdemElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, w) in self.words().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AdemElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// The Adem relation for `Sq^a Sq^b` with `1 <= a < 2b`:
/// `Σ_c C(b-c-1, a-2c) Sq^(a+b-c) Sq^c`, with `Sq^0` dropped from each word.
pub fn adem_rewrite(a: u32, b: u32) -> Result<AdemElement> {
    if a == 0 || a >= 2 * b {
        return Err(Error::NotAdemPair { a, b });
    }
    Ok((0..=a / 2)
        .filter(|&c| adem_coeff(a as u64, b as u64, c as u64).is_one())
        .map(|c| SqWord::new([a + b - c, c]))
        .collect())
}

/// Exhaustive Adem rewriting with a per-call step budget and a word cache.
///
/// The cache only memoizes results and does not change what `normalize`
/// returns.
#[derive(Debug)]
pub struct Normalizer {
    budget: u64,
    cache: HashMap<SqWord, AdemElement>,
}

impl Default for Normalizer {
    fn default() -> Self {
        Self::with_budget(DEFAULT_STEP_BUDGET)
    }
}

impl Normalizer {
    pub fn with_budget(budget: u64) -> Self {
        Normalizer {
            budget,
            cache: HashMap::new(),
        }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn normalize(&mut self, e: &AdemElement) -> Result<AdemElement> {
        let mut steps = 0;
        let mut out = AdemElement::zero();
        for w in e.words() {
            let nf = self.normalize_word(w, &mut steps)?;
            out += &nf;
        }
        Ok(out)
    }

    fn normalize_word(&mut self, w: &SqWord, steps: &mut u64) -> Result<AdemElement> {
        if w.is_admissible() {
            return Ok(AdemElement::from_word(w.clone()));
        }
        if let Some(hit) = self.cache.get(w) {
            return Ok(hit.clone());
        }
        let mut work = FormalSum::single(w.clone());
        let mut done = AdemElement::zero();
        while let Some(x) = work.take_first() {
            match x.first_inadmissible() {
                None => done.toggle(x),
                Some(pos) => {
                    *steps += 1;
                    if *steps > self.budget {
                        return Err(Error::BudgetExceeded {
                            budget: self.budget,
                        });
                    }
                    let (a, b) = (x.0[pos], x.0[pos + 1]);
                    for r in adem_rewrite(a, b)?.words() {
                        work.toggle(x.splice(pos, r));
                    }
                }
            }
        }
        self.cache.insert(w.clone(), done.clone());
        Ok(done)
    }
}

/// Rewrites `e` into a sum of admissible words using the default budget.
pub fn normalize(e: &AdemElement) -> Result<AdemElement> {
    Normalizer::default().normalize(e)
}

/// Composition followed by normalization.
pub fn product(lhs: &AdemElement, rhs: &AdemElement) -> Result<AdemElement> {
    normalize(&lhs.compose(rhs))
}

/// All admissible words of degree `d`, in canonical order.
pub fn admissible_basis(d: u32) -> Vec<SqWord> {
    fn extend(remaining: u32, max_first: u32, prefix: &mut Vec<u32>, out: &mut Vec<SqWord>) {
        if remaining == 0 {
            out.push(SqWord(prefix.clone()));
            return;
        }
        for i in 1..=remaining.min(max_first) {
            prefix.push(i);
            extend(remaining - i, i / 2, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(d, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(words: &[&[u32]]) -> AdemElement {
        AdemElement::from_words(words.iter().map(|w| SqWord::new(w.iter().copied())))
    }

    #[test]
    fn word_statistics() {
        assert_eq!(SqWord::identity().degree(), 0);
        assert_eq!(SqWord::from([3]).degree(), 3);
        assert_eq!(SqWord::from([3, 1]).degree(), 4);
        assert_eq!(SqWord::from([5]).excess(), 5);
        assert_eq!(SqWord::from([2, 1]).excess(), 1);
        assert_eq!(SqWord::from([3, 1]).excess(), 2);
        assert_eq!(SqWord::identity().excess(), 0);
        assert!(SqWord::from([2, 1]).is_admissible());
        assert!(!SqWord::from([3, 2]).is_admissible());
        assert!(SqWord::identity().is_admissible());
        assert_eq!(SqWord::new([0, 2, 0]), SqWord::from([2]));
    }

    #[test]
    fn canonical_word_order() {
        let mut ws = [
            SqWord::from([2, 1]),
            SqWord::from([3]),
            SqWord::from([1]),
            SqWord::identity(),
            SqWord::from([1, 2]),
        ];
        ws.sort();
        let shown: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, ["1", "Sq1", "Sq3", "Sq1 Sq2", "Sq2 Sq1"]);
    }

    #[test]
    fn adem_rewrite_examples() {
        assert_eq!(adem_rewrite(1, 1).unwrap(), AdemElement::zero());
        assert_eq!(adem_rewrite(1, 2).unwrap(), el(&[&[3]]));
        assert_eq!(adem_rewrite(2, 2).unwrap(), el(&[&[3, 1]]));
        assert_eq!(adem_rewrite(3, 2).unwrap(), AdemElement::zero());
        assert_eq!(adem_rewrite(2, 1), Err(Error::NotAdemPair { a: 2, b: 1 }));
        assert!(adem_rewrite(0, 3).is_err());
    }

    #[test]
    fn adem_rewrite_is_homogeneous() {
        for b in 1..12 {
            for a in 1..2 * b {
                let r = adem_rewrite(a, b).unwrap();
                assert!(r.words().all(|w| w.degree() == a + b));
                assert!(r.words().all(|w| w.len() == 1 || w.exponents()[0] > a));
            }
        }
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&el(&[&[1, 1]])).unwrap(), AdemElement::zero());
        assert_eq!(normalize(&el(&[&[2, 2]])).unwrap(), el(&[&[3, 1]]));
        assert_eq!(normalize(&el(&[&[2, 1]])).unwrap(), el(&[&[2, 1]]));
        assert_eq!(normalize(&el(&[&[1, 1, 1]])).unwrap(), AdemElement::zero());
        // Sq2 Sq3 = Sq5 + Sq4 Sq1
        assert_eq!(normalize(&el(&[&[2, 3]])).unwrap(), el(&[&[5], &[4, 1]]));
    }

    #[test]
    fn budget_is_enforced() {
        let e = el(&[&[1, 2, 4, 8]]);
        assert!(Normalizer::with_budget(DEFAULT_STEP_BUDGET)
            .normalize(&e)
            .is_ok());
        assert_eq!(
            Normalizer::with_budget(1).normalize(&e),
            Err(Error::BudgetExceeded { budget: 1 })
        );
        // admissible input consumes no budget
        assert!(Normalizer::with_budget(0)
            .normalize(&el(&[&[4, 2, 1]]))
            .is_ok());
    }

    #[test]
    fn product_examples() {
        let sq1 = el(&[&[1]]);
        assert_eq!(product(&sq1, &sq1).unwrap(), AdemElement::zero());
        assert_eq!(product(&sq1, &el(&[&[2]])).unwrap(), el(&[&[3]]));
        let e = el(&[&[2, 2], &[1]]);
        assert_eq!(
            product(&AdemElement::one(), &e).unwrap(),
            normalize(&e).unwrap()
        );
    }

    #[test]
    fn basis_examples() {
        assert_eq!(admissible_basis(0), vec![SqWord::identity()]);
        assert_eq!(
            admissible_basis(3),
            vec![SqWord::from([3]), SqWord::from([2, 1])]
        );
        assert_eq!(
            admissible_basis(5),
            vec![SqWord::from([5]), SqWord::from([4, 1])]
        );
    }

    /// Brute force: every composition of `d`, filtered.
    fn basis_by_compositions(d: u32) -> Vec<SqWord> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << d.saturating_sub(1)) {
            let mut parts = Vec::new();
            let mut cur = 1;
            for bit in 0..d.saturating_sub(1) {
                if mask >> bit & 1 == 1 {
                    parts.push(cur);
                    cur = 1;
                } else {
                    cur += 1;
                }
            }
            if d > 0 {
                parts.push(cur);
            }
            let w = SqWord::new(parts);
            if w.is_admissible() {
                out.push(w);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn basis_matches_brute_force() {
        for d in 0..=16 {
            assert_eq!(admissible_basis(d), basis_by_compositions(d), "degree {d}");
        }
    }
}
