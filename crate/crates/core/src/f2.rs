//! Parity arithmetic and formal sums over the two-element field.

use std::collections::btree_set;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

/// An element of the field with two elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2(bool);

impl F2 {
    pub const ZERO: F2 = F2(false);
    pub const ONE: F2 = F2(true);

    pub fn new(bit: bool) -> Self {
        F2(bit)
    }

    pub fn is_zero(self) -> bool {
        !self.0
    }

    pub fn is_one(self) -> bool {
        self.0
    }
}

impl From<bool> for F2 {
    fn from(bit: bool) -> Self {
        F2(bit)
    }
}

impl From<F2> for bool {
    fn from(x: F2) -> bool {
        x.0
    }
}

impl From<F2> for u8 {
    fn from(x: F2) -> u8 {
        x.0 as u8
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for F2 {
    type Output = F2;
    fn add(self, rhs: F2) -> F2 {
        F2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for F2 {
    fn add_assign(&mut self, rhs: F2) {
        self.0 ^= rhs.0;
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for F2 {
    type Output = F2;
    fn mul(self, rhs: F2) -> F2 {
        F2(self.0 & rhs.0)
    }
}

impl fmt::Display for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0 as u8)
    }
}

/// `C(n, k) mod 2`, zero when `k > n`.
///
/// By Lucas' theorem the coefficient is odd exactly when the binary digits of
/// `k` form a subset of those of `n`.
pub fn binom_mod2(n: u64, k: u64) -> F2 {
    F2(k & !n == 0)
}

/// Coefficient of `Sq^(a+b-c) Sq^c` in the Adem expansion of `Sq^a Sq^b`,
/// i.e. `C(b-c-1, a-2c) mod 2`.
///
/// Negative arguments are mapped to zero rather than rejected.
pub fn adem_coeff(a: u64, b: u64, c: u64) -> F2 {
    let top = b as i128 - c as i128 - 1;
    let bottom = a as i128 - 2 * c as i128;
    if top < 0 || bottom < 0 {
        return F2::ZERO;
    }
    binom_mod2(top as u64, bottom as u64)
}

/// A formal sum with coefficients in F2: a finite set of basis terms where
/// adding a term twice cancels it.
///
/// Iteration follows the `Ord` of the basis type, which is the canonical
/// term order for that basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FormalSum<B: Ord> {
    terms: BTreeSet<B>,
}

impl<B: Ord> Default for FormalSum<B> {
    fn default() -> Self {
        FormalSum {
            terms: BTreeSet::new(),
        }
    }
}

impl<B: Ord> FormalSum<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(term: B) -> Self {
        let mut s = Self::zero();
        s.terms.insert(term);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, term: &B) -> bool {
        self.terms.contains(term)
    }

    /// Adds a single term, cancelling it if already present.
    pub fn toggle(&mut self, term: B) {
        if !self.terms.remove(&term) {
            self.terms.insert(term);
        }
    }

    /// Adds `term` with coefficient `coeff`.
    pub fn add_term(&mut self, coeff: F2, term: B) {
        if coeff.is_one() {
            self.toggle(term);
        }
    }

    /// Symmetric difference of the term sets.
    pub fn sum(&self, other: &Self) -> Self
    where
        B: Clone,
    {
        FormalSum {
            terms: self
                .terms
                .symmetric_difference(&other.terms)
                .cloned()
                .collect(),
        }
    }

    pub fn iter(&self) -> btree_set::Iter<'_, B> {
        self.terms.iter()
    }

    pub fn first(&self) -> Option<&B> {
        self.terms.first()
    }

    pub fn take_first(&mut self) -> Option<B> {
        self.terms.pop_first()
    }

    pub fn retain(&mut self, f: impl FnMut(&B) -> bool) {
        self.terms.retain(f);
    }

    pub fn map<C: Ord>(&self, f: impl FnMut(&B) -> C) -> FormalSum<C> {
        self.iter().map(f).collect()
    }
}

impl<B: Ord> AddAssign for FormalSum<B> {
    fn add_assign(&mut self, rhs: Self) {
        for t in rhs.terms {
            self.toggle(t);
        }
    }
}

impl<B: Ord + Clone> AddAssign<&FormalSum<B>> for FormalSum<B> {
    fn add_assign(&mut self, rhs: &FormalSum<B>) {
        for t in rhs.iter() {
            self.toggle(t.clone());
        }
    }
}

impl<B: Ord> Add for FormalSum<B> {
    type Output = FormalSum<B>;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

/// Collecting cancels repeated terms in pairs.
impl<B: Ord> FromIterator<B> for FormalSum<B> {
    fn from_iter<I: IntoIterator<Item = B>>(iter: I) -> Self {
        let mut s = Self::zero();
        for t in iter {
            s.toggle(t);
        }
        s
    }
}

impl<B: Ord> Extend<B> for FormalSum<B> {
    fn extend<I: IntoIterator<Item = B>>(&mut self, iter: I) {
        for t in iter {
            self.toggle(t);
        }
    }
}

impl<B: Ord> IntoIterator for FormalSum<B> {
    type Item = B;
    type IntoIter = btree_set::IntoIter<B>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, B: Ord> IntoIterator for &'a FormalSum<B> {
    type Item = &'a B;
    type IntoIter = btree_set::Iter<'a, B>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<B: Ord + fmt::Debug> fmt::Debug for FormalSum<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pascal_mod2(size: usize) -> Vec<Vec<u8>> {
        let mut rows = vec![vec![1u8]];
        for n in 1..size {
            let prev = &rows[n - 1];
            let mut row = vec![1u8; n + 1];
            for k in 1..n {
                row[k] = (prev[k - 1] + prev[k]) % 2;
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn binom_examples() {
        assert_eq!(binom_mod2(0, 0), F2::ONE);
        assert_eq!(binom_mod2(2, 1), F2::ZERO);
        assert_eq!(binom_mod2(5, 1), F2::ONE);
        assert_eq!(binom_mod2(3, 5), F2::ZERO);
    }

    #[test]
    fn binom_matches_pascal_triangle() {
        let tri = pascal_mod2(65);
        for n in 0..=64u64 {
            for k in 0..=64u64 {
                let expected = if k <= n {
                    tri[n as usize][k as usize]
                } else {
                    0
                };
                assert_eq!(u8::from(binom_mod2(n, k)), expected, "C({n},{k})");
                assert_eq!(binom_mod2(n, k).is_one(), k & n == k);
            }
        }
    }

    #[test]
    fn adem_coeff_examples() {
        assert_eq!(adem_coeff(1, 1, 0), F2::ZERO);
        assert_eq!(adem_coeff(1, 2, 0), F2::ONE);
        assert_eq!(adem_coeff(2, 2, 0), F2::ZERO);
        assert_eq!(adem_coeff(2, 2, 1), F2::ONE);
        // b - c - 1 < 0
        assert_eq!(adem_coeff(4, 1, 1), F2::ZERO);
        // a - 2c < 0
        assert_eq!(adem_coeff(1, 3, 1), F2::ZERO);
    }

    #[test]
    fn sum_examples() {
        let w = FormalSum::single(7u32);
        assert!(w.sum(&w).is_zero());
        assert_eq!(w.sum(&FormalSum::zero()), w);
        let both = w.sum(&FormalSum::single(3));
        assert_eq!(both.iter().copied().collect::<Vec<_>>(), vec![3, 7]);
    }

    #[test]
    fn f2_field_tables() {
        assert_eq!(F2::ONE + F2::ONE, F2::ZERO);
        assert_eq!(F2::ONE * F2::ZERO, F2::ZERO);
        assert_eq!(F2::ONE * F2::ONE, F2::ONE);
    }

    fn set() -> impl Strategy<Value = FormalSum<u8>> {
        proptest::collection::vec(0u8..32, 0..20).prop_map(|v| v.into_iter().collect())
    }

    proptest! {
        #[test]
        fn sum_is_an_exponent_two_group(x in set(), y in set(), z in set()) {
            prop_assert_eq!(x.sum(&y), y.sum(&x));
            prop_assert_eq!(x.sum(&y).sum(&z), x.sum(&y.sum(&z)));
            prop_assert!(x.sum(&x).is_zero());
            prop_assert_eq!(x.sum(&FormalSum::zero()), x.clone());
        }
    }
}
