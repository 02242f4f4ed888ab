//! Steenrod squares acting on `F2[t1, ..., tk]`, the mod-2 cohomology of a
//! product of `k` copies of infinite real projective space.
//!
//! Every variable has degree one and `Sq(t) = t + t^2`; the action on
//! arbitrary polynomials is the unique extension satisfying the Cartan
//! formula and additivity. Nothing here consults the Adem relations, so
//! [`act`] serves as an independent oracle for [`crate::adem::normalize`].

mod symbolic;

use std::cmp::Ordering;
use std::fmt;

use crate::adem::{admissible_basis, AdemElement, SqWord};
use crate::error::{Error, Result};
use crate::f2::{binom_mod2, FormalSum, F2};
use crate::matrix::F2Matrix;

pub use symbolic::{
    adem_identities, classify_relations, derive_adem_relations, relation_span, CoefficientIdentity,
    DerivedRelation, Stability, SymbolicClass, SymbolicTerm, SYMBOLIC_U, SYMBOLIC_V,
};

/// A monomial `t1^e1 ... tk^ek`. Variables are indexed from 1.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyMonomial {
    // exps[j] is the exponent of t_(j+1); no trailing zeros
    exps: Vec<u32>,
}

impl PolyMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(j: usize) -> Self {
        Self::var_pow(j, 1)
    }

    pub fn var_pow(j: usize, n: u32) -> Self {
        assert!(j >= 1, "variables are indexed from 1");
        let mut exps = vec![0; j];
        exps[j - 1] = n;
        Self::from_exponents(exps)
    }

    /// `exps[0]` is the exponent of `t1`.
    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        PolyMonomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, j: usize) -> u32 {
        self.exps.get(j - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Largest variable index with a nonzero exponent, 0 for the unit.
    pub fn max_var(&self) -> usize {
        self.exps.len()
    }

    pub fn mul(&self, other: &PolyMonomial) -> PolyMonomial {
        let (long, short) = if self.exps.len() >= other.exps.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut exps = long.exps.clone();
        for (e, s) in exps.iter_mut().zip(&short.exps) {
            *e += s;
        }
        PolyMonomial { exps }
    }

    /// Same monomial with the exponent of `t_j` replaced.
    pub fn with_exponent(&self, j: usize, n: u32) -> PolyMonomial {
        let mut exps = self.exps.clone();
        if exps.len() < j {
            exps.resize(j, 0);
        }
        exps[j - 1] = n;
        Self::from_exponents(exps)
    }

    pub fn fmt_with(
        &self,
        f: &mut fmt::Formatter<'_>,
        names: &dyn Fn(usize) -> String,
    ) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (k, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&names(k + 1))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Graded lexicographic: lower degree first, then larger exponent of the
/// lowest-indexed variable first (`t1^2 < t1*t2 < t2^2`).
impl Ord for PolyMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.exps.len().max(other.exps.len());
            for j in 0..n {
                let a = self.exps.get(j).copied().unwrap_or(0);
                let b = other.exps.get(j).copied().unwrap_or(0);
                match b.cmp(&a) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for PolyMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn default_var_name(j: usize) -> String {
    format!("t{j}")
}

impl fmt::Display for PolyMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, &default_var_name)
    }
}

impl fmt::Debug for PolyMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A polynomial in `F2[t1, ..., tk]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyElement(FormalSum<PolyMonomial>);

impl PolyElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(PolyMonomial::one())
    }

    pub fn var(j: usize) -> Self {
        Self::from_monomial(PolyMonomial::var(j))
    }

    pub fn from_monomial(m: PolyMonomial) -> Self {
        PolyElement(FormalSum::single(m))
    }

    /// `t1 t2 ... td`.
    pub fn product_of_vars(d: usize) -> Self {
        Self::from_monomial(PolyMonomial::from_exponents(vec![1; d]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &PolyMonomial> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, m: &PolyMonomial) -> bool {
        self.0.contains(m)
    }

    pub fn toggle(&mut self, m: PolyMonomial) {
        self.0.toggle(m);
    }

    /// The common degree of all monomials. Zero is homogeneous of every
    /// degree and reports `None` here; see [`PolyElement::is_homogeneous`].
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut ds = self.monomials().map(PolyMonomial::degree);
        let d = ds.next()?;
        ds.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn max_var(&self) -> usize {
        self.monomials()
            .map(PolyMonomial::max_var)
            .max()
            .unwrap_or(0)
    }

    pub fn mentions(&self, j: usize) -> bool {
        self.monomials().any(|m| m.exponent(j) > 0)
    }

    pub fn sum(&self, other: &PolyElement) -> PolyElement {
        PolyElement(self.0.sum(&other.0))
    }

    /// Multiplication by a monomial.
    pub fn shift(&self, m: &PolyMonomial) -> PolyElement {
        self.monomials().map(|x| x.mul(m)).collect()
    }

    /// Terms containing exactly `t_j^power`, with `t_j` removed.
    pub fn coefficient_of(&self, j: usize, power: u32) -> PolyElement {
        self.monomials()
            .filter(|m| m.exponent(j) == power)
            .map(|m| m.with_exponent(j, 0))
            .collect()
    }

    /// Replaces the variable `t_from` by `t_to` everywhere.
    pub fn substitute_var(&self, from: usize, to: usize) -> PolyElement {
        self.monomials()
            .map(|m| {
                let e = m.exponent(from);
                let cleared = m.with_exponent(from, 0);
                let merged = cleared.exponent(to) + e;
                cleared.with_exponent(to, merged)
            })
            .collect()
    }

    pub fn display_with<'a>(
        &'a self,
        names: &'a dyn Fn(usize) -> String,
    ) -> impl fmt::Display + 'a {
        struct D<'a>(&'a PolyElement, &'a dyn Fn(usize) -> String);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.0.is_zero() {
                    return f.write_str("0");
                }
                for (k, m) in self.0.monomials().enumerate() {
                    if k > 0 {
                        f.write_str(" + ")?;
                    }
                    m.fmt_with(f, self.1)?;
                }
                Ok(())
            }
        }
        D(self, names)
    }
}

impl FromIterator<PolyMonomial> for PolyElement {
    fn from_iter<I: IntoIterator<Item = PolyMonomial>>(iter: I) -> Self {
        PolyElement(iter.into_iter().collect())
    }
}

impl std::ops::AddAssign<&PolyElement> for PolyElement {
    fn add_assign(&mut self, rhs: &PolyElement) {
        self.0 += &rhs.0;
    }
}

impl std::ops::Add for PolyElement {
    type Output = PolyElement;
    fn add(self, rhs: Self) -> Self {
        PolyElement(self.0 + rhs.0)
    }
}

impl fmt::Display for PolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_var_name))
    }
}

impl fmt::Debug for PolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cup product: polynomial multiplication mod 2.
pub fn cup(p: &PolyElement, q: &PolyElement) -> PolyElement {
    let mut out = PolyElement::zero();
    for a in p.monomials() {
        for b in q.monomials() {
            out.toggle(a.mul(b));
        }
    }
    out
}

/// `Sq^i(t_j^n) = C(n, i) t_j^(n+i)`.
pub fn sq_on_power(j: usize, n: u32, i: u32) -> PolyElement {
    if binom_mod2(n as u64, i as u64).is_one() {
        PolyElement::from_monomial(PolyMonomial::var_pow(j, n + i))
    } else {
        PolyElement::zero()
    }
}

/// `Sq^i` of a single monomial: the Cartan convolution of [`sq_on_power`]
/// over its variables.
pub fn sq_monomial(i: u32, m: &PolyMonomial) -> PolyElement {
    fn go(i: u32, exps: &[u32], acc: &mut Vec<u32>, out: &mut PolyElement) {
        let Some((&e, rest)) = exps.split_first() else {
            if i == 0 {
                out.toggle(PolyMonomial::from_exponents(acc.clone()));
            }
            return;
        };
        let rest_max: u32 = rest.iter().sum();
        // Sq^k(t^e) vanishes for k > e
        for k in i.saturating_sub(rest_max)..=i.min(e) {
            if binom_mod2(e as u64, k as u64).is_one() {
                acc.push(e + k);
                go(i - k, rest, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = PolyElement::zero();
    go(
        i,
        m.exponents(),
        &mut Vec::with_capacity(m.max_var()),
        &mut out,
    );
    out
}

pub fn sq(i: u32, p: &PolyElement) -> PolyElement {
    if i == 0 {
        return p.clone();
    }
    let mut out = PolyElement::zero();
    for m in p.monomials() {
        out += &sq_monomial(i, m);
    }
    out
}

/// Applies a word right to left.
pub fn act_word(w: &SqWord, p: &PolyElement) -> PolyElement {
    w.exponents()
        .iter()
        .rev()
        .fold(p.clone(), |acc, &i| sq(i, &acc))
}

/// Action of a Steenrod-algebra element by iterated application of squares.
/// Never rewrites `e`.
pub fn act(e: &AdemElement, p: &PolyElement) -> PolyElement {
    let mut out = PolyElement::zero();
    for w in e.words() {
        out += &act_word(w, p);
    }
    out
}

/// The total square `Σ_(i=0..m) Sq^i(p) u^(m-i)` of a homogeneous degree-`m`
/// polynomial, with `u` the variable `t_u`.
pub fn total_sq(p: &PolyElement, u: usize) -> Result<PolyElement> {
    if u == 0 {
        return Err(Error::VariableNotFresh(0));
    }
    if p.mentions(u) {
        return Err(Error::VariableNotFresh(u));
    }
    if p.is_zero() {
        return Ok(PolyElement::zero());
    }
    let m = p.homogeneous_degree().ok_or(Error::Inhomogeneous)?;
    let mut out = PolyElement::zero();
    for i in 0..=m {
        out += &sq(i, p).shift(&PolyMonomial::var_pow(u, m - i));
    }
    Ok(out)
}

/// `Sq^i(p)` read off a total square as the coefficient of `u^(m-i)`.
pub fn extract_square(total: &PolyElement, u: usize, m: u32, i: u32) -> PolyElement {
    if i > m {
        return PolyElement::zero();
    }
    total.coefficient_of(u, m - i)
}

/// Whether `total_sq(p q) = total_sq(p) total_sq(q)`.
pub fn check_total_sq_multiplicative(p: &PolyElement, q: &PolyElement) -> Result<bool> {
    let u = p.max_var().max(q.max_var()) + 1;
    let lhs = total_sq(&cup(p, q), u)?;
    let rhs = cup(&total_sq(p, u)?, &total_sq(q, u)?);
    Ok(lhs == rhs)
}

/// For each variable `t_j` of `F2[t1..tk]`, substituting `u := t_j` in the
/// total square of `t_j` gives zero.
pub fn check_tautological_vanishing(k: usize) -> bool {
    let u = k + 1;
    (1..=k).all(|j| {
        let t = PolyElement::var(j);
        match total_sq(&t, u) {
            Ok(total) => total.substitute_var(u, j).is_zero(),
            Err(_) => false,
        }
    })
}

/// Solves `0 = c t^2 + Sq^1(t)` for the scalar `c` by which `Sq^0` acts on a
/// degree-one class, taking `Sq^1(t) = t ⌣ t` from the top-square identity.
///
/// Returns every solution; uniqueness of coefficients means there is
/// exactly one.
pub fn sq0_scalar_on_degree_one() -> Vec<F2> {
    let t = PolyElement::var(1);
    let top = cup(&t, &t);
    [F2::ZERO, F2::ONE]
        .into_iter()
        .filter(|&c| {
            let lhs = if c.is_one() {
                top.clone()
            } else {
                PolyElement::zero()
            };
            lhs.sum(&top).is_zero()
        })
        .collect()
}

/// All monomials of exactly degree `d` in `t1..tk`, in canonical order.
pub fn monomials_of_degree(k: usize, d: u32) -> Vec<PolyMonomial> {
    fn go(k: usize, d: u32, acc: &mut Vec<u32>, out: &mut Vec<PolyMonomial>) {
        if acc.len() + 1 == k {
            acc.push(d);
            out.push(PolyMonomial::from_exponents(acc.clone()));
            acc.pop();
            return;
        }
        for e in 0..=d {
            acc.push(e);
            go(k, d - e, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if d == 0 {
            out.push(PolyMonomial::one());
        }
        return out;
    }
    go(k, d, &mut Vec::with_capacity(k), &mut out);
    out.sort();
    out
}

/// Rank of the matrix of `act(w, t1...td)` over `w` in the admissible basis
/// of degree `d`.
pub fn faithful_rank(d: u32) -> usize {
    action_matrix(&admissible_basis(d), d).rank()
}

/// Rows: `act(w, t1...td)` for each word; columns: degree-`2d` monomials
/// in `t1..td`.
pub fn action_matrix(words: &[SqWord], d: u32) -> F2Matrix {
    let class = PolyElement::product_of_vars(d as usize);
    let images: Vec<PolyElement> = words.iter().map(|w| act_word(w, &class)).collect();
    let mut columns: Vec<PolyMonomial> =
        images.iter().flat_map(|p| p.monomials().cloned()).collect();
    columns.sort();
    columns.dedup();
    let mut m = F2Matrix::zeros(words.len(), columns.len());
    for (r, img) in images.iter().enumerate() {
        for mono in img.monomials() {
            let c = columns.binary_search(mono).expect("column collected above");
            m.set(r, c, F2::ONE);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(j: usize) -> PolyElement {
        PolyElement::var(j)
    }

    fn mono(exps: &[u32]) -> PolyElement {
        PolyElement::from_monomial(PolyMonomial::from_exponents(exps.to_vec()))
    }

    #[test]
    fn cup_examples() {
        assert_eq!(cup(&t(1), &t(1)), mono(&[2]));
        let s = t(1).sum(&t(2));
        assert_eq!(cup(&s, &s), mono(&[2]).sum(&mono(&[0, 2])));
        let p = mono(&[1, 3]).sum(&t(3));
        assert_eq!(cup(&p, &PolyElement::one()), p);
    }

    #[test]
    fn sq_on_power_examples() {
        assert_eq!(sq_on_power(1, 1, 1), mono(&[2]));
        assert_eq!(sq_on_power(1, 5, 0), mono(&[5]));
        assert_eq!(sq_on_power(1, 2, 3), PolyElement::zero());
        assert_eq!(sq_on_power(1, 3, 2), mono(&[5]));
    }

    /// Sq on t^n computed by expanding t^n as an n-fold cup product and
    /// applying the Cartan formula with Sq(t) = t + t^2 only.
    fn sq_power_via_cartan(n: u32, i: u32) -> PolyElement {
        // total square of t^n = (t + t^2)^n; Sq^i picks degree n + i
        let mut total = PolyElement::one();
        let st = t(1).sum(&mono(&[2]));
        for _ in 0..n {
            total = cup(&total, &st);
        }
        total
            .monomials()
            .filter(|m| m.degree() == n + i)
            .cloned()
            .collect()
    }

    #[test]
    fn sq_on_power_matches_cartan_expansion() {
        for n in 0..10 {
            for i in 0..12 {
                assert_eq!(
                    sq_on_power(1, n, i),
                    sq_power_via_cartan(n, i),
                    "Sq{i}(t^{n})"
                );
            }
        }
    }

    #[test]
    fn sq_examples() {
        let t1t2 = mono(&[1, 1]);
        assert_eq!(sq(1, &t1t2), mono(&[2, 1]).sum(&mono(&[1, 2])));
        assert_eq!(sq(2, &t1t2), mono(&[2, 2]));
        let p = mono(&[3, 1]).sum(&t(2));
        assert!(sq(3, &p.sum(&p)).is_zero());
        assert!(sq(4, &PolyElement::zero()).is_zero());
    }

    #[test]
    fn act_examples() {
        let sq1sq1 = AdemElement::from_word([1, 1]);
        assert!(act(&sq1sq1, &t(1)).is_zero());
        let p = mono(&[2, 1]).sum(&t(4));
        assert_eq!(act(&AdemElement::one(), &p), p);
        let x = PolyElement::product_of_vars(4);
        assert_eq!(
            act(&AdemElement::from_word([2, 2]), &x),
            act(&AdemElement::from_word([3, 1]), &x)
        );
    }

    #[test]
    fn total_sq_examples() {
        // variable 2 plays the role of u
        assert_eq!(total_sq(&t(1), 2).unwrap(), mono(&[1, 1]).sum(&mono(&[2])));
        assert_eq!(
            total_sq(&PolyElement::one(), 2).unwrap(),
            PolyElement::one()
        );
        assert_eq!(
            total_sq(&mono(&[2]), 2).unwrap(),
            mono(&[2, 2]).sum(&mono(&[4]))
        );
        assert_eq!(
            total_sq(&t(1).sum(&mono(&[2])), 2),
            Err(Error::Inhomogeneous)
        );
        assert_eq!(total_sq(&t(2), 2), Err(Error::VariableNotFresh(2)));
    }

    #[test]
    fn multiplicativity_examples() {
        assert!(check_total_sq_multiplicative(&t(1), &t(1)).unwrap());
        assert!(check_total_sq_multiplicative(&PolyElement::one(), &mono(&[2, 1])).unwrap());
        assert!(check_total_sq_multiplicative(&t(1), &t(2)).unwrap());
    }

    #[test]
    fn tautological_vanishing() {
        assert!(check_tautological_vanishing(0));
        assert!(check_tautological_vanishing(1));
        assert!(check_tautological_vanishing(2));
        assert!(check_tautological_vanishing(5));
    }

    #[test]
    fn sq0_is_identity_on_degree_one() {
        assert_eq!(sq0_scalar_on_degree_one(), vec![F2::ONE]);
    }

    #[test]
    fn faithful_rank_examples() {
        assert_eq!(faithful_rank(0), 1);
        assert_eq!(faithful_rank(1), 1);
        assert_eq!(faithful_rank(3), 2);
    }

    #[test]
    fn monomial_enumeration_counts() {
        // C(d + k - 1, k - 1)
        assert_eq!(monomials_of_degree(3, 0).len(), 1);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(3, 6).len(), 28);
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
        assert!(monomials_of_degree(0, 2).is_empty());
    }

    #[test]
    fn substitution_merges_exponents() {
        let p = mono(&[2, 0, 1]);
        assert_eq!(p.substitute_var(3, 1), mono(&[3]));
        let q = mono(&[1, 0, 1]).sum(&mono(&[2]));
        assert!(q.substitute_var(3, 1).is_zero());
    }
}
