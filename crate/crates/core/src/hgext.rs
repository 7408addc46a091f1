//! Comodule algebras, coinvariants, the canonical Galois map and the
//! translation map with its identity suite.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;


use crate::error::Error;
use crate::field::Field;
use crate::hopf::{HopfStructure, Morphism};
use crate::kernel::{AlgebraElement, Presentation, Word};
use crate::linalg;
use crate::tensor::{BalancedContext, BalancedSpan, TensorElement};

/// An H-comodule algebra: coaction delta: A -> A (x) H, an algebra map.
pub struct ComoduleAlgebra<F: Field> {
    algebra: Arc<Presentation<F>>,
    hopf: Arc<HopfStructure<F>>,
    coaction: Morphism<F>,
}

impl<F: Field> ComoduleAlgebra<F> {
    pub fn new(
        algebra: &Arc<Presentation<F>>,
        hopf: &Arc<HopfStructure<F>>,
        coaction_images: Vec<TensorElement<F>>,
    ) -> Result<Self, Error> {
        let coaction = Morphism::algebra(
            algebra,
            vec![algebra.clone(), hopf.presentation().clone()],
            coaction_images,
        )?;
        Ok(ComoduleAlgebra { algebra: algebra.clone(), hopf: hopf.clone(), coaction })
    }

    pub fn algebra(&self) -> &Arc<Presentation<F>> {
        &self.algebra
    }

    pub fn hopf(&self) -> &Arc<HopfStructure<F>> {
        &self.hopf
    }

    pub fn coaction_word(&self, w: &Word) -> TensorElement<F> {
        self.coaction.apply_word(w)
    }

    pub fn coaction(&self, e: &AlgebraElement<F>) -> TensorElement<F> {
        self.coaction.apply(e)
    }

    /// Coaction axioms on basis words up to `degree`.
    pub fn verify_coaction(&self, degree: usize) -> Vec<String> {
        let mut failures = Vec::new();
        let hp = self.hopf.presentation().clone();
        for w in self.algebra.basis_upto(degree) {
            let d = self.coaction_word(&w);
            // (delta (x) id) delta = (id (x) Delta) delta
            let left = d.expand_slot(0, &[self.algebra.clone(), hp.clone()], |u| {
                self.coaction_word(u)
            });
            let right = d.expand_slot(1, &[hp.clone(), hp.clone()], |u| {
                self.hopf.delta_word(u)
            });
            if left != right {
                failures.push(format!(
                    "coaction coassociativity fails on {}",
                    self.algebra.show_word(&w)
                ));
            }
            // (id (x) eps) delta = id
            let mut counited = AlgebraElement::zero(&self.algebra);
            for (tuple, c) in d.terms() {
                let eps = self.hopf.counit_word(&tuple[1]);
                counited = counited.add(
                    &AlgebraElement::from_word(&self.algebra, tuple[0].clone())
                        .scale(&(c.clone() * eps)),
                );
            }
            if counited != AlgebraElement::from_word(&self.algebra, w.clone()) {
                failures.push(format!(
                    "coaction counit law fails on {}",
                    self.algebra.show_word(&w)
                ));
            }
        }
        failures
    }

    pub fn is_coinvariant(&self, e: &AlgebraElement<F>) -> bool {
        let one_h = AlgebraElement::one(self.hopf.presentation());
        let expect = TensorElement::from_elements(&[e.clone(), one_h]);
        self.coaction(e) == expect
    }

    /// Basis of the coinvariant subspace of the span of degree-d words.
    pub fn coinvariants(&self, degree: usize) -> Vec<AlgebraElement<F>> {
        let words = self.algebra.basis(degree);
        if words.is_empty() {
            return Vec::new();
        }
        // Constraint rows keyed by (A-word, H-word) of delta(w) - w (x) 1.
        let mut keys: BTreeMap<(Word, Word), usize> = BTreeMap::new();
        let mut cols: Vec<BTreeMap<usize, F>> = Vec::new();
        for w in &words {
            let mut col: BTreeMap<usize, F> = BTreeMap::new();
            let d = self.coaction_word(w);
            for (tuple, c) in d.terms() {
                let n = keys.len();
                let k = *keys.entry((tuple[0].clone(), tuple[1].clone())).or_insert(n);
                let cur = col.remove(&k).unwrap_or_else(F::zero) + c.clone();
                if !cur.is_zero() {
                    col.insert(k, cur);
                }
            }
            let n = keys.len();
            let k = *keys.entry((w.clone(), Word::unit())).or_insert(n);
            let cur = col.remove(&k).unwrap_or_else(F::zero) - F::one();
            if !cur.is_zero() {
                col.insert(k, cur);
            }
            cols.push(col);
        }
        let rows = keys.len();
        let mut m = vec![vec![F::zero(); words.len()]; rows];
        for (j, col) in cols.iter().enumerate() {
            for (&i, c) in col {
                m[i][j] = c.clone();
            }
        }
        linalg::nullspace(&m)
            .into_iter()
            .map(|v| {
                let mut acc = AlgebraElement::zero(&self.algebra);
                for (j, c) in v.into_iter().enumerate() {
                    if !c.is_zero() {
                        acc = acc.add(
                            &AlgebraElement::from_word(&self.algebra, words[j].clone()).scale(&c),
                        );
                    }
                }
                acc
            })
            .collect()
    }
}

type SpanKey = (Vec<String>, Vec<usize>);

/// A Hopf–Galois extension: comodule algebra, declared coinvariant
/// generators and the translation map on H-generators.
pub struct HopfGaloisExtension<F: Field> {
    com: ComoduleAlgebra<F>,
    b_gens: Vec<AlgebraElement<F>>,
    tau_gens: Vec<TensorElement<F>>,
    spans: RefCell<HashMap<SpanKey, BalancedSpan<F>>>,
}

impl<F: Field> HopfGaloisExtension<F> {
    /// Builds and runs the load-time checks: each B-generator coinvariant
    /// and the defining translation identity for every H-generator.
    pub fn new(
        com: ComoduleAlgebra<F>,
        b_gens: Vec<AlgebraElement<F>>,
        tau_gens: Vec<TensorElement<F>>,
    ) -> Result<Self, Error> {
        if tau_gens.len() != com.hopf.presentation().generators().len() {
            return Err(Error::Parse("translation map must cover every H-generator".into()));
        }
        let ext = HopfGaloisExtension { com, b_gens, tau_gens, spans: RefCell::new(HashMap::new()) };
        for (i, b) in ext.b_gens.iter().enumerate() {
            if !ext.com.is_coinvariant(b) {
                return Err(Error::Load {
                    entry: ext.com.algebra.name().into(),
                    detail: format!("declared coinvariant generator #{} is not coinvariant", i),
                });
            }
        }
        for (i, name) in ext.com.hopf.presentation().generators().iter().enumerate() {
            let h = Word::gen(i as u8);
            if !ext.translation_identity_holds(&h) {
                return Err(Error::Load {
                    entry: ext.com.algebra.name().into(),
                    detail: format!("translation identity fails for H-generator `{}`", name),
                });
            }
        }
        Ok(ext)
    }

    pub fn comodule(&self) -> &ComoduleAlgebra<F> {
        &self.com
    }

    pub fn algebra(&self) -> &Arc<Presentation<F>> {
        &self.com.algebra
    }

    pub fn hopf(&self) -> &Arc<HopfStructure<F>> {
        &self.com.hopf
    }

    pub fn b_generators(&self) -> &[AlgebraElement<F>] {
        &self.b_gens
    }

    /// chi(tau(h)) = 1 (x) h, checked exactly.
    fn translation_identity_holds(&self, h: &Word) -> bool {
        let img = self.chi(&self.translate_word(h));
        let expect = TensorElement::from_elements(&[
            AlgebraElement::one(&self.com.algebra),
            AlgebraElement::from_word(self.com.hopf.presentation(), h.clone()),
        ]);
        img == expect
    }

    /// tau on a normal word by the anti-multiplicative fold
    /// tau(hk) = tau(k)_1 tau(h)_1 (x) tau(h)_2 tau(k)_2.
    pub fn translate_word(&self, w: &Word) -> TensorElement<F> {
        let a = &self.com.algebra;
        let mut cur = TensorElement::unit(vec![a.clone(), a.clone()]);
        for &g in &w.0 {
            let tg = &self.tau_gens[g as usize];
            cur = tg.mul_op(&cur);
        }
        cur
    }

    pub fn translate(&self, e: &AlgebraElement<F>) -> TensorElement<F> {
        let a = &self.com.algebra;
        let mut acc = TensorElement::zero(vec![a.clone(), a.clone()]);
        for (w, c) in e.terms() {
            acc = acc.add(&self.translate_word(w).scale(c));
        }
        acc
    }

    /// The canonical map chi(a' (x) a) = a' a_0 (x) a_1 on representatives.
    pub fn chi(&self, x: &TensorElement<F>) -> TensorElement<F> {
        let hp = self.com.hopf.presentation().clone();
        x.expand_slot(1, &[self.com.algebra.clone(), hp], |w| self.com.coaction_word(w))
            .merge_slots(0)
    }

    /// chi^{-1}(a' (x) h) = a' tau(h)_1 (x) tau(h)_2.
    pub fn chi_inv(&self, y: &TensorElement<F>) -> TensorElement<F> {
        let a = self.com.algebra.clone();
        y.expand_slot(1, &[a.clone(), a], |h| self.translate_word(h))
            .merge_slots(0)
    }

    /// Runs `f` with the balanced span for the given slots/pairs/bound,
    /// materializing it on first use.
    pub fn with_span<R>(
        &self,
        slots: &[Arc<Presentation<F>>],
        pairs: &[usize],
        bound: usize,
        f: impl FnOnce(&mut BalancedSpan<F>) -> R,
    ) -> R {
        let key: SpanKey = (
            slots.iter().map(|p| p.name().to_string()).collect(),
            pairs.to_vec(),
        );
        let mut map = self.spans.borrow_mut();
        let span = map.entry(key).or_insert_with(|| {
            BalancedSpan::new(BalancedContext::new(
                slots.to_vec(),
                pairs.to_vec(),
                self.b_gens.clone(),
                bound,
            ))
        });
        span.raise_bound(bound);
        f(span)
    }

    pub fn balanced_equal(
        &self,
        x: &TensorElement<F>,
        y: &TensorElement<F>,
        pairs: &[usize],
        bound: usize,
    ) -> Result<bool, Error> {
        assert!(x.same_slots(y));
        self.with_span(x.slots(), pairs, bound, |span| span.equal(x, y))
    }

    /// One translation-map identity by label.
    pub fn translation_identity(
        &self,
        h: &Word,
        label: &str,
        bound: usize,
    ) -> Result<(), String> {
        self.translation_identities_filtered(h, bound, Some(label))
            .into_iter()
            .find(|(l, _)| *l == label)
            .map(|(_, r)| r)
            .unwrap_or_else(|| Err(format!("unknown identity label `{}`", label)))
    }

    /// The eight translation-map identities for one H-word, each returned
    /// as (label, result); balanced equalities truncated at `bound`.
    pub fn translation_identities(
        &self,
        h: &Word,
        bound: usize,
    ) -> Vec<(&'static str, Result<(), String>)> {
        self.translation_identities_filtered(h, bound, None)
    }

    fn translation_identities_filtered(
        &self,
        h: &Word,
        bound: usize,
        only: Option<&str>,
    ) -> Vec<(&'static str, Result<(), String>)> {
        let a = self.com.algebra.clone();
        let hp = self.com.hopf.presentation().clone();
        let hopf = &self.com.hopf;
        let tau = self.translate_word(h);
        let delta_h = hopf.delta_word(h);
        let mut out = Vec::new();
        let want = |label: &str| only.is_none() || only == Some(label);

        // p7: tau(h)_1 tau(h)_2{(0)} (x) tau(h)_2{(1)} = 1 (x) h, exact.
        if want("p7") {
        let p7 = {
            let lhs = self.chi(&tau);
            let rhs = TensorElement::from_elements(&[
                AlgebraElement::one(&a),
                AlgebraElement::from_word(&hp, h.clone()),
            ]);
            exact(lhs == rhs, || "chi(tau(h)) != 1 (x) h".into())
        };
        out.push(("p7", p7));
        }

        // p5: m(tau(h)) = eps(h) 1, exact.
        if want("p5") {
        let p5 = {
            let lhs = tau.merge_slots(0);
            let rhs = TensorElement::from_elements(&[AlgebraElement::scalar(
                &a,
                hopf.counit_word(h),
            )]);
            exact(lhs == rhs, || "m(tau(h)) != eps(h)".into())
        };
        out.push(("p5", p5));
        }

        // p4: tau_1 (x) (tau_2)_0 (x) (tau_2)_1 = tau(h_1) (x) h_2, balanced (0,1).
        if want("p4") {
        let p4 = {
            let lhs = tau.expand_slot(1, &[a.clone(), hp.clone()], |w| self.com.coaction_word(w));
            let rhs = delta_h.expand_slot(0, &[a.clone(), a.clone()], |u| self.translate_word(u));
            self.balanced_result(&lhs, &rhs, &[0], bound)
        };
        out.push(("p4", p4));
        }

        // p1: (tau_1)_0 (x) tau_2 (x) (tau_1)_1 = tau(h_2) (x) S(h_1), balanced (0,1).
        if want("p1") {
        let p1 = {
            let lhs = tau
                .expand_slot(0, &[a.clone(), hp.clone()], |w| self.com.coaction_word(w))
                .permute(&[0, 2, 1]);
            let rhs = delta_h
                .expand_slot(1, &[a.clone(), a.clone()], |u| self.translate_word(u))
                .map_slot(0, |u| hopf.antipode_word(u))
                .permute(&[1, 2, 0]);
            self.balanced_result(&lhs, &rhs, &[0], bound)
        };
        out.push(("p1", p1));
        }

        // p3 is per A-generator; reported separately.

        // p6: tau(h_1) (x) m(tau(h_1)_2, tau(h_2)_1) (x) tau(h_2)_2
        //     = tau_1 (x) 1 (x) tau_2, balanced (0,1) and (1,2).
        if want("p6") {
        let p6 = {
            let lhs = delta_h
                .expand_slot(0, &[a.clone(), a.clone()], |u| self.translate_word(u))
                .expand_slot(2, &[a.clone(), a.clone()], |u| self.translate_word(u))
                .merge_slots(1);
            let rhs = tau.expand_slot(0, &[a.clone(), a.clone()], |w| {
                TensorElement::from_elements(&[
                    AlgebraElement::from_word(&a, w.clone()),
                    AlgebraElement::one(&a),
                ])
            });
            self.balanced_result(&lhs, &rhs, &[0, 1], bound)
        };
        out.push(("p6", p6));
        }

        // p8: b tau(h) = tau(h) b for every declared B-generator, balanced (0,1).
        if want("p8") {
        let p8 = {
            let mut res: Result<(), String> = Ok(());
            for (i, b) in self.b_gens.iter().enumerate() {
                let lhs = tau.mul_into_slot_left(0, b);
                let rhs = tau.mul_into_slot_right(1, b);
                if let Err(e) = self.balanced_result(&lhs, &rhs, &[0], bound) {
                    res = Err(format!("B-generator #{}: {}", i, e));
                    break;
                }
            }
            res
        };
        out.push(("p8", p8));
        }
        out
    }

    /// p2 on a product of two H-words: tau(reduce(uv)) vs the fold of the
    /// factors, balanced.
    pub fn translation_p2(
        &self,
        u: &Word,
        v: &Word,
        bound: usize,
    ) -> Result<(), String> {
        let hp = self.com.hopf.presentation();
        let prod = AlgebraElement::from_word(hp, u.concat(v));
        let direct = self.translate(&prod);
        let folded = self.translate_word(v).mul_op(&self.translate_word(u));
        self.balanced_result(&direct, &folded, &[0], bound)
    }

    /// p3 for an A-element: a_0 tau(a_1)_1 (x) tau(a_1)_2 = 1 (x) a.
    pub fn translation_p3(&self, e: &AlgebraElement<F>, bound: usize) -> Result<(), String> {
        let a = self.com.algebra.clone();
        let lhs = self
            .com
            .coaction(e)
            .expand_slot(1, &[a.clone(), a.clone()], |h| self.translate_word(h))
            .merge_slots(0);
        let rhs = TensorElement::from_elements(&[AlgebraElement::one(&a), e.clone()]);
        self.balanced_result(&lhs, &rhs, &[0], bound)
    }

    fn balanced_result(
        &self,
        x: &TensorElement<F>,
        y: &TensorElement<F>,
        pairs: &[usize],
        bound: usize,
    ) -> Result<(), String> {
        match self.balanced_equal(x, y, pairs, bound) {
            Ok(true) => Ok(()),
            Ok(false) => Err(format!("{} != {} modulo balancing", x.show(), y.show())),
            Err(e) => Err(format!("{}", e)),
        }
    }

    /// Bijectivity data for the canonical map.
    ///
    /// For finite-dimensional A over B = ground field, assembles the full
    /// matrix of chi on A (x) A and returns (rank, expected); otherwise
    /// checks the two-sided-inverse identities on a degree-bounded spanning
    /// set (the truncation stand-in, labeled as such by the caller).
    pub fn galois_matrix_rank(&self, probe: usize) -> Result<(usize, usize), Error> {
        let a_basis = self
            .com
            .algebra
            .full_basis(probe)
            .ok_or_else(|| Error::Unsupported("algebra not finite-dimensional".into()))?;
        let h_basis = self
            .com
            .hopf
            .presentation()
            .full_basis(probe)
            .ok_or_else(|| Error::Unsupported("Hopf algebra not finite-dimensional".into()))?;
        let n = a_basis.len();
        if h_basis.len() != n {
            return Err(Error::Unsupported(format!(
                "dim A = {} but dim H = {}; the canonical map cannot be bijective",
                n,
                h_basis.len()
            )));
        }
        let col_index: BTreeMap<(Word, Word), usize> = a_basis
            .iter()
            .flat_map(|u| h_basis.iter().map(move |v| (u.clone(), v.clone())))
            .enumerate()
            .map(|(i, k)| (k, i))
            .collect();
        let dim = n * n;
        let mut m = vec![vec![F::zero(); dim]; dim];
        let mut row = 0;
        for u in &a_basis {
            for v in &a_basis {
                let x = TensorElement::from_elements(&[
                    AlgebraElement::from_word(&self.com.algebra, u.clone()),
                    AlgebraElement::from_word(&self.com.algebra, v.clone()),
                ]);
                let img = self.chi(&x);
                for (tuple, c) in img.terms() {
                    let col = *col_index
                        .get(&(tuple[0].clone(), tuple[1].clone()))
                        .ok_or_else(|| Error::Internal("chi image leaves basis".into()))?;
                    m[row][col] = m[row][col].clone() + c.clone();
                }
                row += 1;
            }
        }
        Ok((linalg::rank(m), dim))
    }

    /// chi o chi^{-1} = id on a' (x) h and chi^{-1} o chi = id on a' (x) a,
    /// over all basis pairs whose computation fits the bound.
    pub fn galois_two_sided_inverse(
        &self,
        degree: usize,
    ) -> (usize, Vec<String>) {
        let mut failures = Vec::new();
        let mut checked = 0;
        let a = self.com.algebra.clone();
        let hp = self.com.hopf.presentation().clone();
        for u in a.basis_upto(degree / 2) {
            for h in hp.basis_upto(degree / 2) {
                let y = TensorElement::from_elements(&[
                    AlgebraElement::from_word(&a, u.clone()),
                    AlgebraElement::from_word(&hp, h.clone()),
                ]);
                let back = self.chi(&self.chi_inv(&y));
                if back.total_degree() > degree {
                    continue;
                }
                checked += 1;
                if back != y {
                    failures.push(format!(
                        "chi o chi_inv != id on {} (x) {}",
                        a.show_word(&u),
                        hp.show_word(&h)
                    ));
                }
            }
        }
        for u in a.basis_upto(degree / 2) {
            for v in a.basis_upto(degree / 2) {
                let x = TensorElement::from_elements(&[
                    AlgebraElement::from_word(&a, u.clone()),
                    AlgebraElement::from_word(&a, v.clone()),
                ]);
                let round = self.chi_inv(&self.chi(&x));
                if round.total_degree() > degree || x.total_degree() > degree {
                    continue;
                }
                checked += 1;
                match self.balanced_equal(&round, &x, &[0], degree) {
                    Ok(true) => {}
                    Ok(false) => failures.push(format!(
                        "chi_inv o chi != id on {} (x) {}",
                        a.show_word(&u),
                        a.show_word(&v)
                    )),
                    Err(e) => failures.push(format!("{}", e)),
                }
            }
        }
        (checked, failures)
    }
}

fn exact(ok: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(witness())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::tests::taft_hopf;
    use crate::test_support::taft_galois_presentation;
    use crate::{Scalar, Session};

    type E = AlgebraElement<Scalar>;
    type T = TensorElement<Scalar>;

    /// The T_N Galois object A_s with its coaction and translation map.
    pub fn taft_extension(n: u32, symbolic_s: bool) -> Arc<HopfGaloisExtension<Scalar>> {
        let session = Session::new(n, &["s"]);
        let q = session.zeta();
        let s = if symbolic_s { session.indeterminate("s").unwrap() } else { Scalar::from_int(0) };
        let (hp, hopf) = taft_hopf(n);
        let ap = taft_galois_presentation(n, q, s);
        let gg = E::generator(&ap, "G").unwrap();
        let xx = E::generator(&ap, "X").unwrap();
        let g = E::generator(&hp, "g").unwrap();
        let x = E::generator(&hp, "x").unwrap();
        let com = ComoduleAlgebra::new(
            &ap,
            &hopf,
            vec![
                T::pair(&gg, &g),
                T::pair(&E::one(&ap), &x).add(&T::pair(&xx, &g)),
            ],
        )
        .unwrap();
        let ginv = gg.pow(n as usize - 1);
        let tau_g = T::pair(&ginv, &gg);
        let tau_x = T::pair(&E::one(&ap), &xx).sub(&T::pair(&xx.mul(&ginv), &gg));
        Arc::new(HopfGaloisExtension::new(com, vec![], vec![tau_g, tau_x]).unwrap())
    }

    #[test]
    fn taft_coaction_axioms_and_coinvariants() {
        let ext = taft_extension(2, true);
        assert!(ext.comodule().verify_coaction(3).is_empty());
        // Coinvariants: only the ground field, i.e. nothing in degree >= 1.
        for d in 1..4 {
            assert!(ext.comodule().coinvariants(d).is_empty(), "degree {}", d);
        }
        assert_eq!(ext.comodule().coinvariants(0).len(), 1);
    }

    #[test]
    fn canonical_map_values() {
        let ext = taft_extension(2, true);
        let a = ext.algebra().clone();
        let hp = ext.hopf().presentation().clone();
        let one = E::one(&a);
        let xx = E::generator(&a, "X").unwrap();
        let g = E::generator(&hp, "g").unwrap();
        let x = E::generator(&hp, "x").unwrap();
        // chi(1 (x) X) = 1 (x) x + X (x) g
        let img = ext.chi(&T::pair(&one, &xx));
        let expect = T::from_elements(&[one.clone(), x]).add(&T::from_elements(&[xx, g]));
        assert_eq!(img, expect);
        // chi(1 (x) 1) = 1 (x) 1
        let unit2 = T::unit(vec![a.clone(), a.clone()]);
        let unit_ah = T::unit(vec![a.clone(), hp.clone()]);
        assert_eq!(ext.chi(&unit2), unit_ah);
    }

    #[test]
    fn taft_translation_identities_exact() {
        for n in [2u32, 3] {
            let ext = taft_extension(n, true);
            let hp = ext.hopf().presentation().clone();
            for h in hp.full_basis(4 * n as usize).unwrap() {
                if h.is_empty() {
                    continue;
                }
                for (label, res) in ext.translation_identities(&h, 64) {
                    assert!(
                        res.is_ok(),
                        "{} fails for T_{} at {}: {:?}",
                        label,
                        n,
                        hp.show_word(&h),
                        res
                    );
                }
            }
            // p5 on generators explicitly: x -> 0, g -> 1.
            let x = Word::gen(hp.gen_index("x").unwrap());
            let g = Word::gen(hp.gen_index("g").unwrap());
            let a = ext.algebra().clone();
            assert!(ext.translate_word(&x).merge_slots(0).is_zero());
            assert_eq!(
                ext.translate_word(&g).merge_slots(0),
                T::from_elements(&[E::one(&a)])
            );
            // p3 for both A-generators.
            for gen in ["G", "X"] {
                let e = E::generator(&a, gen).unwrap();
                assert!(ext.translation_p3(&e, 64).is_ok());
            }
            // p2 on all generator pairs.
            for u in ["g", "x"] {
                for v in ["g", "x"] {
                    let uw = Word::gen(hp.gen_index(u).unwrap());
                    let vw = Word::gen(hp.gen_index(v).unwrap());
                    assert!(ext.translation_p2(&uw, &vw, 64).is_ok());
                }
            }
        }
    }

    #[test]
    fn unit_translation_identities_are_unit_laws() {
        let ext = taft_extension(2, true);
        for (label, res) in ext.translation_identities(&Word::unit(), 16) {
            assert!(res.is_ok(), "{} fails for h = 1", label);
        }
    }

    #[test]
    fn galois_matrix_full_rank_n2() {
        let ext = taft_extension(2, true);
        let (rank, dim) = ext.galois_matrix_rank(8).unwrap();
        assert_eq!(dim, 16);
        assert_eq!(rank, 16);
    }

    #[test]
    fn two_sided_inverse_on_taft() {
        let ext = taft_extension(2, true);
        let (checked, failures) = ext.galois_two_sided_inverse(8);
        assert!(checked > 20);
        assert!(failures.is_empty(), "{:?}", failures);
    }

    #[test]
    fn load_rejects_wrong_translation() {
        let session = Session::new(2, &["s"]);
        let q = session.zeta();
        let s = session.indeterminate("s").unwrap();
        let (hp, hopf) = taft_hopf(2);
        let ap = taft_galois_presentation(2, q, s);
        let gg = E::generator(&ap, "G").unwrap();
        let xx = E::generator(&ap, "X").unwrap();
        let g = E::generator(&hp, "g").unwrap();
        let x = E::generator(&hp, "x").unwrap();
        let com = ComoduleAlgebra::new(
            &ap,
            &hopf,
            vec![T::pair(&gg, &g), T::pair(&E::one(&ap), &x).add(&T::pair(&xx, &g))],
        )
        .unwrap();
        // tau(g) = G (x) G is wrong (G^2 = 1 only for the right pairing order
        // here, but chi(G (x) G) = G^2 (x) g = 1 (x) g ... so use a genuinely
        // broken value): tau(g) = X (x) G.
        let bad = HopfGaloisExtension::new(
            com,
            vec![],
            vec![T::pair(&xx, &gg), T::pair(&E::one(&ap), &xx)],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn declared_b_generators_must_be_coinvariant() {
        let session = Session::new(2, &["s"]);
        let q = session.zeta();
        let s = session.indeterminate("s").unwrap();
        let (hp, hopf) = taft_hopf(2);
        let ap = taft_galois_presentation(2, q, s);
        let gg = E::generator(&ap, "G").unwrap();
        let xx = E::generator(&ap, "X").unwrap();
        let g = E::generator(&hp, "g").unwrap();
        let x = E::generator(&hp, "x").unwrap();
        let com = ComoduleAlgebra::new(
            &ap,
            &hopf,
            vec![T::pair(&gg, &g), T::pair(&E::one(&ap), &x).add(&T::pair(&xx, &g))],
        )
        .unwrap();
        let ginv = gg.clone();
        let tau_g = T::pair(&ginv, &gg);
        let tau_x = T::pair(&E::one(&ap), &xx).sub(&T::pair(&xx.mul(&ginv), &gg));
        let bad = HopfGaloisExtension::new(com, vec![gg.clone()], vec![tau_g, tau_x]);
        assert!(matches!(bad, Err(Error::Load { .. })));
    }
}
