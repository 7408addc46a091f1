//! Worked-example values asserted one by one: translation maps, canonical
//! map images, carrier generators and coinvariant spans of the catalog
//! entries, each against its independently stated closed form.

use std::collections::BTreeMap;

use bialgebroid::catalog::{self, CatalogEntry};
use bialgebroid::field::Field;
use num_traits::One;
use bialgebroid::kernel::Word;
use bialgebroid::linalg;
use bialgebroid::{Element, Scalar, Tensor};

fn entry(name: &str, params: &[(&str, &str)]) -> CatalogEntry {
    let map: BTreeMap<String, String> = params
        .iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect();
    catalog::get_example(name, &map).expect("entry loads")
}

fn gen(e: &CatalogEntry, name: &str) -> Element {
    Element::generator(e.algebra(), name).unwrap()
}

#[test]
fn quantum_sl2_determinant_and_straightening_values() {
    let e = entry("podles-monopole", &[]);
    let q = e.session.indeterminate("q").unwrap();
    let (a, b, c, d) = (gen(&e, "a"), gen(&e, "b"), gen(&e, "c"), gen(&e, "d"));
    // a c = q c a as elements (both reduce to the same normal form).
    assert_eq!(a.mul(&c), c.mul(&a).scale(&q));
    // d a = 1 + q^{-1} b c and a d = 1 + q b c.
    let one = Element::one(e.algebra());
    assert_eq!(d.mul(&a), one.add(&b.mul(&c).scale(&q.inv().unwrap())));
    assert_eq!(a.mul(&d), one.add(&b.mul(&c).scale(&q)));
    // a d - d a = (q - q^{-1}) b c.
    let lhs = a.mul(&d).sub(&d.mul(&a));
    let rhs = b.mul(&c).scale(&(q.clone() - q.inv().unwrap()));
    assert_eq!(lhs, rhs);
}

#[test]
fn monopole_translation_map_display() {
    let e = entry("podles-monopole", &[]);
    let q = e.session.indeterminate("q").unwrap();
    let (a, b, c, d) = (gen(&e, "a"), gen(&e, "b"), gen(&e, "c"), gen(&e, "d"));
    let hp = e.hopf().presentation().clone();
    let z = hp.gen_index("z").unwrap();
    let zi = hp.gen_index("zi").unwrap();
    // tau(z) = d (x) a - q^{-1} b (x) c; tau(z^{-1}) = a (x) d - q c (x) b.
    let tz = e.ext.translate_word(&Word::gen(z));
    assert_eq!(
        tz,
        Tensor::pair(&d, &a).sub(&Tensor::pair(&b, &c).scale(&q.inv().unwrap()))
    );
    let tzi = e.ext.translate_word(&Word::gen(zi));
    assert_eq!(tzi, Tensor::pair(&a, &d).sub(&Tensor::pair(&c, &b).scale(&q)));
    // chi(d (x) a) = d a (x) z.
    let img = e.ext.chi(&Tensor::pair(&d, &a));
    let z_el = Element::generator(&hp, "z").unwrap();
    assert_eq!(img, Tensor::from_elements(&[d.mul(&a), z_el]));
    // chi(tau(z)) = 1 (x) z exactly: d a - q^{-1} b c = 1 paired with z.
    let chi_tau = e.ext.chi(&tz);
    let one = Element::one(e.algebra());
    assert_eq!(
        chi_tau,
        Tensor::from_elements(&[one, Element::generator(&hp, "z").unwrap()])
    );
}

#[test]
fn monopole_degree_two_coinvariants_span_the_sphere_generators() {
    let e = entry("podles-monopole", &[]);
    let basis = e.ext.comodule().coinvariants(2);
    assert_eq!(basis.len(), 3);
    // Each named sphere generator lies in the computed span.
    let words: Vec<Word> = e.algebra().basis(2);
    let coords = |el: &Element| -> Vec<Scalar> {
        words.iter().map(|w| el.coeff(w)).collect()
    };
    let span: Vec<Vec<Scalar>> = basis.iter().map(|b| coords(b)).collect();
    for name in ["B0", "Bp", "Bm"] {
        let target = coords(e.named_b(name).unwrap());
        assert!(
            linalg::express_in_basis(&span, &target).is_some(),
            "{} is outside the computed coinvariant span",
            name
        );
    }
}

#[test]
fn shear_extension_translation_of_a_square() {
    // tau on the square of the primitive generator, through the
    // anti-multiplicative fold, still satisfies the defining identity.
    let e = entry("sl2-nff", &[]);
    let hp = e.hopf().presentation().clone();
    let x2 = Word(vec![hp.gen_index("x").unwrap(); 2]);
    let tau = e.ext.translate_word(&x2);
    let img = e.ext.chi(&tau);
    let expect = Tensor::from_elements(&[
        Element::one(e.algebra()),
        Element::from_word(&hp, x2.clone()),
    ]);
    assert_eq!(img, expect);
    // And the fold agrees with the two-letter composition rule.
    assert!(e.ext.translation_p2(&Word::gen(0), &Word::gen(0), 8).is_ok());
}

#[test]
fn cyclic_nilpotent_object_basis_and_commutation() {
    let e = entry("sweedler", &[]);
    let a = e.algebra().clone();
    let basis = a.full_basis(8).unwrap();
    assert_eq!(basis.len(), 4);
    let shown: Vec<String> = basis.iter().map(|w| a.show_word(w)).collect();
    assert_eq!(shown, vec!["1", "G", "X", "G*X"]);
    // X G = q G X with q the session root of unity.
    let (gg, xx) = (gen(&e, "G"), gen(&e, "X"));
    let q = e.session.zeta();
    assert_eq!(xx.mul(&gg), gg.mul(&xx).scale(&q));
    // G G^{N-1} = 1.
    assert_eq!(gg.mul(&gg.pow(1)), Element::one(&a));
    // X^2 = s (the symbolic family parameter).
    let s = e.session.indeterminate("s").unwrap();
    assert_eq!(xx.mul(&xx), Element::scalar(&a, s));
}

#[test]
fn taft_carrier_coproduct_values() {
    let e = entry("sweedler", &[]);
    let bi = e.bialgebroid.clone();
    // Delta(Gamma) = Gamma (x) Gamma and Delta(Xi) = 1 (x) Xi + Xi (x) Gamma,
    // matched against the canonical coproduct exactly (ground-field base).
    for name in ["Gamma", "Xi"] {
        assert!(bi.verify_coproduct_decomposition(name, 16).is_ok());
    }
    let d = bi.coproduct_tensor(bi.gen("Gamma").unwrap());
    let gamma = bi.gen("Gamma").unwrap().clone();
    let expect = bialgebroid::esbrd::outer4(&gamma, &gamma);
    assert_eq!(d, expect);
}

#[test]
fn trivial_cocycle_group_object_is_the_group_algebra() {
    let e = entry("group", &[("cocycle", "trivial")]);
    let report = bialgebroid::suites::run_suite(&e, "bialgebroid", 4).unwrap();
    let failures: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| c.status == bialgebroid::report::Status::Fail)
        .map(|c| c.id.as_str())
        .collect();
    assert!(failures.is_empty(), "{:?}", failures);
    // The rescaling isomorphism is exact here (mu is identically 1).
    assert!(report
        .checks
        .iter()
        .any(|c| c.id == "rescaled-group-iso"
            && c.status == bialgebroid::report::Status::Pass));
    // tau(h_i) = u_{g_i^{-1}} (x) u_{g_i} with unit coefficient.
    let hp = e.hopf().presentation().clone();
    for i in 0..hp.generators().len() as u8 {
        let t = e.ext.translate_word(&Word::gen(i));
        assert_eq!(t.num_terms(), 1);
        let (_, c) = t.terms().next().unwrap();
        assert!(c.is_one());
    }
}

#[test]
fn sign_cocycle_mu_values_and_commutation() {
    let e = entry("group", &[]);
    let bialgebroid::catalog::Flavor::Group { data } = &e.flavor else {
        panic!("group flavor expected")
    };
    // mu((1,1)) = lambda((1,1),(1,1)) = -1; the two factor generators
    // anticommute in the twisted algebra.
    assert_eq!(data.mu(&[1, 1]).unwrap(), Scalar::from_int(-1));
    assert_eq!(data.mu(&[1, 0]).unwrap(), Scalar::from_int(1));
    let u10 = gen(&e, "u10");
    let u01 = gen(&e, "u01");
    assert_eq!(u10.mul(&u01), u01.mul(&u10).neg());
    assert_eq!(u10.mul(&u10), Element::one(e.algebra()));
}

#[test]
fn self_galois_entry_is_the_zero_parameter_member() {
    let e = entry("self-galois", &[]);
    let xx = gen(&e, "X");
    assert!(xx.mul(&xx).is_zero());
    // The translation map is S (x) id composed with the coproduct pattern:
    // tau(g) = G (x) G at N = 2 and tau(x) = 1 (x) X - X G (x) G.
    let hp = e.hopf().presentation().clone();
    let gg = gen(&e, "G");
    let tg = e.ext.translate_word(&Word::gen(hp.gen_index("g").unwrap()));
    assert_eq!(tg, Tensor::pair(&gg, &gg));
    let tx = e.ext.translate_word(&Word::gen(hp.gen_index("x").unwrap()));
    let one = Element::one(e.algebra());
    assert_eq!(
        tx,
        Tensor::pair(&one, &xx).sub(&Tensor::pair(&xx.mul(&gg), &gg))
    );
}
