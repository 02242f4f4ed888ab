use proptest::prelude::*;
use steenrod::modules::{
    act_on_module, complex_proj, real_proj, sphere, suspend, verify_axioms, wedge, GradedModule,
    ModuleElement,
};
use steenrod::poly::{act_word, monomials_of_degree};
use steenrod::{
    act, admissible_basis, normalize, product, AdemElement, PolyElement, PolyMonomial, SqWord,
};

fn word() -> impl Strategy<Value = SqWord> {
    prop::collection::vec(1u32..8, 0..5).prop_map(SqWord::new)
}

fn element() -> impl Strategy<Value = AdemElement> {
    prop::collection::vec(word(), 0..4).prop_map(AdemElement::from_words)
}

fn homogeneous_poly(k: usize, d: u32) -> impl Strategy<Value = PolyElement> {
    let monos = monomials_of_degree(k, d);
    prop::collection::vec(any::<bool>(), monos.len()).prop_map(move |keep| {
        monos
            .iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(m, _)| m.clone())
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normalize_preserves_degree(w in word()) {
        let nf = normalize(&AdemElement::from_word(w.clone())).unwrap();
        prop_assert!(nf.words().all(|v| v.degree() == w.degree() && v.is_admissible()));
    }

    #[test]
    fn normal_form_acts_like_raw_element(e in element(), d in 0u32..5) {
        let nf = normalize(&e).unwrap();
        for m in monomials_of_degree(3, d) {
            let p = PolyElement::from_monomial(m);
            prop_assert_eq!(act(&e, &p), act(&nf, &p));
        }
    }

    #[test]
    fn product_is_associative(a in element(), b in element(), c in element()) {
        let left = product(&product(&a, &b).unwrap(), &c).unwrap();
        let right = product(&a, &product(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn action_is_additive(e in element(), p in homogeneous_poly(3, 3), q in homogeneous_poly(3, 3)) {
        prop_assert_eq!(act(&e, &p.sum(&q)), act(&e, &p).sum(&act(&e, &q)));
    }
}

#[test]
fn excess_vanishing() {
    for d in 0..=8 {
        for w in admissible_basis(d) {
            for m in 0..w.excess().min(9) {
                for mono in monomials_of_degree(3, m) {
                    let p = PolyElement::from_monomial(mono);
                    assert!(act_word(&w, &p).is_zero(), "{w} on {p}");
                }
            }
        }
    }
}

fn poly_of_power(n: u32) -> PolyElement {
    PolyElement::from_monomial(PolyMonomial::var_pow(1, n))
}

#[test]
fn real_projective_module_matches_polynomial_action() {
    // RP^n is F2[t]/(t^(n+1)); words acting on t^k agree with the
    // polynomial action truncated above degree n
    for n in 1..=8 {
        let m = real_proj(n);
        for k in 1..=n {
            let x = m.generator(&format!("t^{k}")).unwrap();
            for d in 0..=8 {
                for w in admissible_basis(d) {
                    let e = AdemElement::from_word(w.clone());
                    let got = act_on_module(&m, &e, &x).unwrap();
                    let image = act_word(&w, &poly_of_power(k));
                    let expected = if k + d <= n && !image.is_zero() {
                        m.generator(&format!("t^{}", k + d)).unwrap()
                    } else {
                        ModuleElement::zero(k + d)
                    };
                    assert_eq!(got.sum, expected.sum, "{w} on t^{k} in rp{n}");
                }
            }
        }
    }
}

fn base_catalog() -> Vec<GradedModule> {
    let mut v: Vec<GradedModule> = (1..=8).map(sphere).collect();
    v.extend((1..=8).map(real_proj));
    v.extend((1..=3).map(complex_proj));
    v
}

#[test]
fn suspension_consistency() {
    let base = base_catalog();
    let mut modules = base.clone();
    modules.push(wedge(&base[9], &base[17]));
    for m in &modules {
        if verify_axioms(m, 8).passed() {
            assert!(verify_axioms(&suspend(m), 9).passed(), "{}", m.name());
        }
    }
}

#[test]
fn module_json_round_trip_over_catalog() {
    for a in base_catalog() {
        for m in [suspend(&a), wedge(&a, &real_proj(3))] {
            let back = GradedModule::from_json(&m.to_json()).unwrap();
            assert_eq!(back, m);
        }
    }
}
