//! Symbolic total squares of a generic class, used to re-derive the Adem
//! relations.
//!
//! A [`SymbolicClass`] is an F2-sum of terms `w(a) · u^s v^r` where `a` is a
//! generic class of degree `m`, `w` is a raw (never normalized) word of
//! squares applied to `a`, and `u`, `v` are degree-one classes. Squares act
//! on such terms by the Cartan formula, on `u`/`v` powers by
//! [`super::sq_monomial`], and on `w(a)` by prefixing a letter, dropping the
//! result when the letter exceeds the degree of `w(a)`.
//!
//! Expanding the two iterated total squares of `a` (first in `u` then `v`,
//! and the other way round) and comparing coefficients of each `u^s v^r`
//! yields identities between length-two words acting on `a`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{sq_monomial, PolyMonomial};
use crate::adem::{AdemElement, SqWord};
use crate::f2::FormalSum;
use crate::matrix::span_contains;

/// Variable index of `u` inside the auxiliary monomial.
pub const SYMBOLIC_U: usize = 1;
/// Variable index of `v` inside the auxiliary monomial.
pub const SYMBOLIC_V: usize = 2;

/// One term `word(a) · aux`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SymbolicTerm {
    // aux first so terms group by bimonomial
    pub aux: PolyMonomial,
    pub word: SqWord,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymbolicClass {
    base_degree: u32,
    terms: FormalSum<SymbolicTerm>,
}

impl SymbolicClass {
    /// The generic class `a` of degree `m`.
    pub fn generic(m: u32) -> Self {
        SymbolicClass {
            base_degree: m,
            terms: FormalSum::single(SymbolicTerm {
                aux: PolyMonomial::one(),
                word: SqWord::identity(),
            }),
        }
    }

    pub fn base_degree(&self) -> u32 {
        self.base_degree
    }

    pub fn terms(&self) -> impl Iterator<Item = &SymbolicTerm> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    fn term_degree(&self, t: &SymbolicTerm) -> u32 {
        self.base_degree + t.word.degree() + t.aux.degree()
    }

    /// Total degree, or `None` for zero or inhomogeneous classes.
    pub fn degree(&self) -> Option<u32> {
        let mut ds = self.terms().map(|t| self.term_degree(t));
        let d = ds.next()?;
        ds.all(|e| e == d).then_some(d)
    }

    /// `Sq^j` by the Cartan formula across `w(a)` and the auxiliary monomial.
    pub fn sq(&self, j: u32) -> SymbolicClass {
        let mut out = FormalSum::zero();
        for t in self.terms() {
            let word_degree = self.base_degree + t.word.degree();
            for p in 0..=j.min(word_degree) {
                let word = SqWord::new([p]).compose(&t.word);
                for aux in sq_monomial(j - p, &t.aux).monomials() {
                    out.toggle(SymbolicTerm {
                        aux: aux.clone(),
                        word: word.clone(),
                    });
                }
            }
        }
        SymbolicClass {
            base_degree: self.base_degree,
            terms: out,
        }
    }

    /// `Σ_(j=0..D) Sq^j(self) · x^(D-j)` for the auxiliary variable `x`,
    /// where `D` is the degree of `self`.
    pub fn total_square(&self, var: usize) -> SymbolicClass {
        let Some(d) = self.degree() else {
            assert!(self.is_zero(), "total square of an inhomogeneous class");
            return self.clone();
        };
        let mut out = FormalSum::zero();
        for j in 0..=d {
            let shift = PolyMonomial::var_pow(var, d - j);
            for t in self.sq(j).terms {
                out.toggle(SymbolicTerm {
                    aux: t.aux.mul(&shift),
                    word: t.word,
                });
            }
        }
        SymbolicClass {
            base_degree: self.base_degree,
            terms: out,
        }
    }

    /// Groups terms by auxiliary monomial.
    pub fn coefficients(&self) -> BTreeMap<PolyMonomial, AdemElement> {
        let mut map: BTreeMap<PolyMonomial, AdemElement> = BTreeMap::new();
        for t in self.terms() {
            map.entry(t.aux.clone()).or_default().toggle(t.word.clone());
        }
        map.retain(|_, e| !e.is_zero());
        map
    }
}

/// The identity obtained at one bimonomial `u^s v^r`: the coefficient in the
/// `u`-then-`v` expansion equals the one in the `v`-then-`u` expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientIdentity {
    pub u_power: u32,
    pub v_power: u32,
    #[serde(serialize_with = "crate::report::display")]
    pub lhs: AdemElement,
    #[serde(serialize_with = "crate::report::display")]
    pub rhs: AdemElement,
}

impl CoefficientIdentity {
    /// `lhs + rhs`, asserted to vanish on `a`.
    pub fn relation(&self) -> AdemElement {
        self.lhs.sum(&self.rhs)
    }
}

/// All bimonomials at which the two iterated total squares of a generic
/// degree-`m` class have different coefficients.
pub fn adem_identities(m: u32) -> Vec<CoefficientIdentity> {
    let a = SymbolicClass::generic(m);
    let uv = a.total_square(SYMBOLIC_U).total_square(SYMBOLIC_V);
    let vu = a.total_square(SYMBOLIC_V).total_square(SYMBOLIC_U);
    let left = uv.coefficients();
    let right = vu.coefficients();
    let mut keys: Vec<&PolyMonomial> = left.keys().chain(right.keys()).collect();
    keys.sort();
    keys.dedup();
    let zero = AdemElement::zero();
    keys.into_iter()
        .filter_map(|k| {
            let lhs = left.get(k).unwrap_or(&zero);
            let rhs = right.get(k).unwrap_or(&zero);
            (lhs != rhs).then(|| CoefficientIdentity {
                u_power: k.exponent(SYMBOLIC_U),
                v_power: k.exponent(SYMBOLIC_V),
                lhs: lhs.clone(),
                rhs: rhs.clone(),
            })
        })
        .collect()
}

fn sorted_relations(ids: &[CoefficientIdentity]) -> Vec<AdemElement> {
    let mut rels: Vec<AdemElement> = ids.iter().map(CoefficientIdentity::relation).collect();
    rels.sort_by(|x, y| x.words().cmp(y.words()));
    rels.dedup();
    rels
}

/// Whether a derived relation holds in the Steenrod algebra itself or only
/// on classes of the degree it was derived from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stability {
    Stable,
    Unstable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedRelation {
    #[serde(serialize_with = "crate::report::display")]
    pub relation: AdemElement,
    pub degree: u32,
    pub stability: Stability,
}

/// Every distinct nonzero relation `Σ words = 0` that the double expansion
/// forces on a generic class of degree `m`, classified by stability.
///
/// A degree-`N` relation is stable when it lies in the span of the degree-`N`
/// relations derived from a class of degree `max(m, N)`: at that class degree
/// no word of degree `N` is removed by instability, so those relations hold in
/// the algebra. The classification never consults Adem rewriting.
pub fn classify_relations(m: u32) -> Vec<DerivedRelation> {
    let here = sorted_relations(&adem_identities(m));
    let mut reference: BTreeMap<u32, Vec<FormalSum<SqWord>>> = BTreeMap::new();
    here.into_iter()
        .map(|relation| {
            let degree = relation
                .homogeneous_degree()
                .expect("relations are homogeneous");
            let basis = reference.entry(degree).or_insert_with(|| {
                let source = if degree <= m {
                    sorted_relations(&adem_identities(m))
                } else {
                    sorted_relations(&adem_identities(degree))
                };
                source
                    .into_iter()
                    .filter(|r| r.homogeneous_degree() == Some(degree))
                    .map(|r| r.terms().clone())
                    .collect()
            });
            let stability = if span_contains(basis, relation.terms()) {
                Stability::Stable
            } else {
                Stability::Unstable
            };
            DerivedRelation {
                relation,
                degree,
                stability,
            }
        })
        .collect()
}

/// Distinct stable relations derived from a generic class of degree `m`, in
/// canonical order. Each one normalizes to zero.
pub fn derive_adem_relations(m: u32) -> Vec<AdemElement> {
    classify_relations(m)
        .into_iter()
        .filter(|r| r.stability == Stability::Stable)
        .map(|r| r.relation)
        .collect()
}

/// The degree-`n` relations derived from a class of degree `n`; their span
/// contains every Adem relation of degree `n`.
pub fn relation_span(n: u32) -> Vec<AdemElement> {
    sorted_relations(&adem_identities(n))
        .into_iter()
        .filter(|r| r.homogeneous_degree() == Some(n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn term(word: &[u32], u: u32, v: u32) -> SymbolicTerm {
        SymbolicTerm {
            aux: PolyMonomial::from_exponents(vec![u, v]),
            word: SqWord::new(word.iter().copied()),
        }
    }

    #[test]
    fn single_total_square_of_degree_one_class() {
        // a^X = a u + Sq1 a
        let ax = SymbolicClass::generic(1).total_square(SYMBOLIC_U);
        let expected: FormalSum<_> = [term(&[1], 0, 0), term(&[], 1, 0)].into_iter().collect();
        assert_eq!(ax.terms().cloned().collect::<FormalSum<_>>(), expected);
        assert_eq!(ax.degree(), Some(2));
    }

    #[test]
    fn double_expansion_for_degree_one_matches_hand_computation() {
        let axy = SymbolicClass::generic(1)
            .total_square(SYMBOLIC_U)
            .total_square(SYMBOLIC_V);
        // (a u + Sq1 a) v^2 + (Sq1 a u + a u^2 + Sq1 Sq1 a) v + (Sq1 a u^2 + Sq2 Sq1 a)
        let expected: FormalSum<SymbolicTerm> = [
            term(&[], 1, 2),
            term(&[1], 0, 2),
            term(&[1], 1, 1),
            term(&[], 2, 1),
            term(&[1, 1], 0, 1),
            term(&[1], 2, 0),
            term(&[2, 1], 0, 0),
        ]
        .into_iter()
        .collect();
        assert_eq!(axy.terms().cloned().collect::<FormalSum<_>>(), expected);
    }

    #[test]
    fn degree_one_gives_sq1_sq1() {
        let rels = derive_adem_relations(1);
        assert_eq!(rels, vec![AdemElement::from_word([1, 1])]);
        let ids = adem_identities(1);
        assert_eq!(ids.len(), 2);
        assert!(ids.iter().any(|i| (i.u_power, i.v_power) == (0, 1)));
    }

    #[test]
    fn unstable_relations_are_separated() {
        // on a degree-4 class Sq1 Sq4 = Sq5 = 0, but Sq1 Sq4 is not zero in the algebra
        let all = classify_relations(4);
        let sq1sq4 = AdemElement::from_word([1, 4]);
        let hit = all.iter().find(|r| r.relation == sq1sq4).expect("derived");
        assert_eq!(hit.stability, Stability::Unstable);
        assert!(!derive_adem_relations(4).contains(&sq1sq4));
    }

    #[test]
    fn degree_zero_gives_nothing() {
        assert!(derive_adem_relations(0).is_empty());
    }

    #[test]
    fn instability_truncation_is_eager() {
        // Sq^j of a degree-2 generic class never produces Sq^3
        let s = SymbolicClass::generic(2).sq(3);
        assert!(s.is_zero());
        let s = SymbolicClass::generic(2).sq(2);
        assert_eq!(s.terms().count(), 1);
    }
}
