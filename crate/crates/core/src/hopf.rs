//! Structure maps of presented Hopf algebras, axiom verification, and the
//! convolution algebra of linear functionals.
//!
//! Morphisms are stored by generator images (algebra or anti-algebra mode)
//! or by basis images (linear-on-basis mode); constructing an (anti-)algebra
//! morphism checks that every rewrite rule of the source is preserved.

use std::collections::BTreeMap;
use std::sync::Arc;


use crate::error::Error;
use crate::field::Field;
use crate::kernel::{same_presentation, AlgebraElement, Presentation, Word};
use crate::linalg;
use crate::tensor::TensorElement;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MorphismMode {
    Algebra,
    AntiAlgebra,
    LinearOnBasis,
}

/// A map from a presented algebra into a tensor power of presented algebras.
#[derive(Clone)]
pub struct Morphism<F: Field> {
    source: Arc<Presentation<F>>,
    target: Vec<Arc<Presentation<F>>>,
    mode: MorphismMode,
    images: BTreeMap<Word, TensorElement<F>>,
}

impl<F: Field> Morphism<F> {
    /// Algebra morphism given on generators; relation preservation is checked.
    pub fn algebra(
        source: &Arc<Presentation<F>>,
        target: Vec<Arc<Presentation<F>>>,
        gen_images: Vec<TensorElement<F>>,
    ) -> Result<Self, Error> {
        Self::multiplicative(source, target, gen_images, MorphismMode::Algebra)
    }

    /// Anti-algebra morphism (reverses word order before substitution).
    pub fn anti_algebra(
        source: &Arc<Presentation<F>>,
        target: Vec<Arc<Presentation<F>>>,
        gen_images: Vec<TensorElement<F>>,
    ) -> Result<Self, Error> {
        Self::multiplicative(source, target, gen_images, MorphismMode::AntiAlgebra)
    }

    fn multiplicative(
        source: &Arc<Presentation<F>>,
        target: Vec<Arc<Presentation<F>>>,
        gen_images: Vec<TensorElement<F>>,
        mode: MorphismMode,
    ) -> Result<Self, Error> {
        if gen_images.len() != source.generators().len() {
            return Err(Error::Parse(format!(
                "morphism from `{}` needs {} generator images",
                source.name(),
                source.generators().len()
            )));
        }
        let mut images = BTreeMap::new();
        for (i, img) in gen_images.into_iter().enumerate() {
            images.insert(Word::gen(i as u8), img);
        }
        let m = Morphism { source: source.clone(), target, mode, images };
        for rule in m.source.rules() {
            let lhs = m.apply_word(&rule.lhs);
            let mut rhs = TensorElement::zero(m.target.clone());
            for (c, w) in &rule.rhs {
                rhs = rhs.add(&m.apply_word(w).scale(c));
            }
            if lhs != rhs {
                return Err(Error::RelationViolated(format!(
                    "image of {} is {} but the rule gives {}",
                    m.source.show_word(&rule.lhs),
                    lhs.show(),
                    rhs.show()
                )));
            }
        }
        Ok(m)
    }

    /// Linear map given on every basis word (finite-dimensional sources).
    pub fn linear_on_basis(
        source: &Arc<Presentation<F>>,
        target: Vec<Arc<Presentation<F>>>,
        basis_images: BTreeMap<Word, TensorElement<F>>,
    ) -> Self {
        Morphism {
            source: source.clone(),
            target,
            mode: MorphismMode::LinearOnBasis,
            images: basis_images,
        }
    }

    pub fn identity(pres: &Arc<Presentation<F>>) -> Self {
        let gen_images = (0..pres.generators().len())
            .map(|i| {
                TensorElement::from_elements(&[AlgebraElement::from_word(
                    pres,
                    Word::gen(i as u8),
                )])
            })
            .collect();
        Morphism::algebra(pres, vec![pres.clone()], gen_images).unwrap()
    }

    pub fn source(&self) -> &Arc<Presentation<F>> {
        &self.source
    }

    pub fn target(&self) -> &[Arc<Presentation<F>>] {
        &self.target
    }

    pub fn mode(&self) -> MorphismMode {
        self.mode
    }

    pub fn apply_word(&self, w: &Word) -> TensorElement<F> {
        match self.mode {
            MorphismMode::LinearOnBasis => self
                .images
                .get(w)
                .cloned()
                .unwrap_or_else(|| TensorElement::zero(self.target.clone())),
            MorphismMode::Algebra | MorphismMode::AntiAlgebra => {
                let mut acc = TensorElement::unit(self.target.clone());
                let letters: Vec<u8> = if self.mode == MorphismMode::Algebra {
                    w.0.clone()
                } else {
                    let mut v = w.0.clone();
                    v.reverse();
                    v
                };
                for g in letters {
                    let img = self.images.get(&Word::gen(g)).expect("generator image present");
                    acc = acc.mul(img);
                }
                acc
            }
        }
    }

    pub fn apply(&self, e: &AlgebraElement<F>) -> TensorElement<F> {
        assert!(
            same_presentation(e.presentation(), &self.source),
            "morphism applied to element of wrong presentation"
        );
        let mut acc = TensorElement::zero(self.target.clone());
        for (w, c) in e.terms() {
            acc = acc.add(&self.apply_word(w).scale(c));
        }
        acc
    }

    /// For arity-1 targets: the image as an algebra element.
    pub fn apply_elem(&self, e: &AlgebraElement<F>) -> AlgebraElement<F> {
        assert_eq!(self.target.len(), 1);
        self.apply(e).as_single_slot(0).expect("arity-1 image")
    }

    /// Composition g after f, both with arity-1 targets.
    pub fn then(&self, g: &Morphism<F>) -> Result<Morphism<F>, Error> {
        assert_eq!(self.target.len(), 1);
        assert!(same_presentation(&self.target[0], &g.source));
        match self.mode {
            MorphismMode::LinearOnBasis => {
                let mut images = BTreeMap::new();
                for (w, img) in &self.images {
                    let e = img.as_single_slot(0).expect("arity-1");
                    images.insert(w.clone(), g.apply(&e));
                }
                Ok(Morphism::linear_on_basis(&self.source, g.target.clone(), images))
            }
            MorphismMode::Algebra => {
                let gen_images = (0..self.source.generators().len())
                    .map(|i| {
                        let e = self
                            .apply_word(&Word::gen(i as u8))
                            .as_single_slot(0)
                            .expect("arity-1");
                        g.apply(&e)
                    })
                    .collect();
                Morphism::multiplicative(&self.source, g.target.clone(), gen_images, self.mode)
            }
            MorphismMode::AntiAlgebra => Err(Error::Unsupported(
                "composition with anti-algebra first leg".into(),
            )),
        }
    }

    /// Equality on a finite family of words.
    pub fn agrees_with(&self, other: &Morphism<F>, words: &[Word]) -> bool {
        words.iter().all(|w| self.apply_word(w) == other.apply_word(w))
    }
}

/// A Hopf algebra structure on a presented algebra.
pub struct HopfStructure<F: Field> {
    pres: Arc<Presentation<F>>,
    coproduct: Morphism<F>, // H -> H (x) H
    counit: Morphism<F>,    // H -> k (trivial presentation)
    antipode: Morphism<F>,  // H -> H, anti-algebra mode
    trivial: Arc<Presentation<F>>,
}

impl<F: Field> HopfStructure<F> {
    pub fn new(
        pres: &Arc<Presentation<F>>,
        coproduct_images: Vec<TensorElement<F>>,
        counit_values: Vec<F>,
        antipode_images: Vec<AlgebraElement<F>>,
    ) -> Result<Arc<Self>, Error> {
        let trivial = Presentation::trivial();
        let coproduct =
            Morphism::algebra(pres, vec![pres.clone(), pres.clone()], coproduct_images)?;
        let counit_imgs = counit_values
            .into_iter()
            .map(|c| TensorElement::from_elements(&[AlgebraElement::scalar(&trivial, c)]))
            .collect();
        let counit = Morphism::algebra(pres, vec![trivial.clone()], counit_imgs)?;
        let anti_imgs = antipode_images
            .into_iter()
            .map(|e| TensorElement::from_elements(&[e]))
            .collect();
        let antipode = Morphism::anti_algebra(pres, vec![pres.clone()], anti_imgs)?;
        Ok(Arc::new(HopfStructure { pres: pres.clone(), coproduct, counit, antipode, trivial }))
    }

    pub fn presentation(&self) -> &Arc<Presentation<F>> {
        &self.pres
    }

    pub fn trivial_presentation(&self) -> &Arc<Presentation<F>> {
        &self.trivial
    }

    pub fn coproduct(&self) -> &Morphism<F> {
        &self.coproduct
    }

    pub fn antipode(&self) -> &Morphism<F> {
        &self.antipode
    }

    pub fn delta_word(&self, w: &Word) -> TensorElement<F> {
        self.coproduct.apply_word(w)
    }

    pub fn delta(&self, e: &AlgebraElement<F>) -> TensorElement<F> {
        self.coproduct.apply(e)
    }

    pub fn counit_word(&self, w: &Word) -> F {
        scalar_of(&self.counit.apply_word(w))
    }

    pub fn counit(&self, e: &AlgebraElement<F>) -> F {
        scalar_of(&self.counit.apply(e))
    }

    pub fn antipode_word(&self, w: &Word) -> AlgebraElement<F> {
        self.antipode.apply_word(w).as_single_slot(0).expect("antipode arity-1")
    }

    pub fn antipode_elem(&self, e: &AlgebraElement<F>) -> AlgebraElement<F> {
        self.antipode.apply_elem(e)
    }

    /// Iterated coproduct: arity-(n+1) tensor.
    pub fn delta_n(&self, e: &AlgebraElement<F>, n: usize) -> TensorElement<F> {
        let mut t = TensorElement::from_elements(&[e.clone()]);
        for _ in 0..n {
            let i = t.arity() - 1;
            t = t.expand_slot(i, &[self.pres.clone(), self.pres.clone()], |w| self.delta_word(w));
        }
        t
    }

    /// Checks coassociativity, both counit laws and both antipode laws on
    /// every basis word up to `degree`. Returns human-readable failures.
    pub fn verify_axioms(&self, degree: usize) -> Vec<String> {
        let mut failures = Vec::new();
        let words = self.pres.basis_upto(degree);
        for w in &words {
            let e = AlgebraElement::from_word(&self.pres, w.clone());
            let d = self.delta(&e);
            let left =
                d.expand_slot(0, &[self.pres.clone(), self.pres.clone()], |u| self.delta_word(u));
            let right =
                d.expand_slot(1, &[self.pres.clone(), self.pres.clone()], |u| self.delta_word(u));
            if left != right {
                failures.push(format!(
                    "coassociativity fails on {}: {} vs {}",
                    self.pres.show_word(w),
                    left.show(),
                    right.show()
                ));
            }
            let l_counit = apply_counit_slot(self, &d, 0);
            let r_counit = apply_counit_slot(self, &d, 1);
            if l_counit != e {
                failures.push(format!(
                    "left counit law fails on {}: got {}",
                    self.pres.show_word(w),
                    l_counit.show()
                ));
            }
            if r_counit != e {
                failures.push(format!(
                    "right counit law fails on {}: got {}",
                    self.pres.show_word(w),
                    r_counit.show()
                ));
            }
            let s_left = d.map_slot(0, |u| self.antipode_word(u)).merge_slots(0);
            let s_right = d.map_slot(1, |u| self.antipode_word(u)).merge_slots(0);
            let target = TensorElement::from_elements(&[AlgebraElement::scalar(
                &self.pres,
                self.counit_word(w),
            )]);
            if s_left != target {
                failures.push(format!(
                    "antipode law m(S(x)id)Delta fails on {}: got {}",
                    self.pres.show_word(w),
                    s_left.show()
                ));
            }
            if s_right != target {
                failures.push(format!(
                    "antipode law m(id(x)S)Delta fails on {}: got {}",
                    self.pres.show_word(w),
                    s_right.show()
                ));
            }
        }
        failures
    }
}

fn apply_counit_slot<F: Field>(
    h: &HopfStructure<F>,
    t: &TensorElement<F>,
    slot: usize,
) -> AlgebraElement<F> {
    let other = 1 - slot;
    let mut acc = AlgebraElement::zero(&h.pres);
    for (tuple, c) in t.terms() {
        let eps = h.counit_word(&tuple[slot]);
        let w = AlgebraElement::from_word(&h.pres, tuple[other].clone());
        acc = acc.add(&w.scale(&(c.clone() * eps)));
    }
    acc
}

fn scalar_of<F: Field>(t: &TensorElement<F>) -> F {
    let mut acc = F::zero();
    for (tuple, c) in t.terms() {
        debug_assert!(tuple.iter().all(|w| w.is_empty()));
        acc = acc + c.clone();
    }
    acc
}

/// A linear functional on a finite-dimensional presented algebra, stored by
/// its values on the normal-form basis.
#[derive(Clone, Debug)]
pub struct Functional<F: Field> {
    algebra: Arc<Presentation<F>>,
    values: BTreeMap<Word, F>,
}

impl<F: Field> PartialEq for Functional<F> {
    fn eq(&self, other: &Self) -> bool {
        same_presentation(&self.algebra, &other.algebra)
            && self.values.iter().all(|(w, c)| other.value(w) == *c)
            && other.values.iter().all(|(w, c)| self.value(w) == *c)
    }
}
impl<F: Field> Eq for Functional<F> {}

impl<F: Field> Functional<F> {
    pub fn new(algebra: &Arc<Presentation<F>>, values: BTreeMap<Word, F>) -> Self {
        Functional { algebra: algebra.clone(), values }
    }

    pub fn counit_of(hopf: &HopfStructure<F>, basis: &[Word]) -> Self {
        let values = basis.iter().map(|w| (w.clone(), hopf.counit_word(w))).collect();
        Functional::new(&hopf.pres, values)
    }

    pub fn algebra(&self) -> &Arc<Presentation<F>> {
        &self.algebra
    }

    pub fn value(&self, w: &Word) -> F {
        self.values.get(w).cloned().unwrap_or_else(F::zero)
    }

    pub fn eval(&self, e: &AlgebraElement<F>) -> F {
        let mut acc = F::zero();
        for (w, c) in e.terms() {
            acc = acc + c.clone() * self.value(w);
        }
        acc
    }

    pub fn is_unital(&self) -> bool {
        self.value(&Word::unit()).is_one()
    }

    /// Multiplicativity on all pairs of the given basis.
    pub fn is_character(&self, basis: &[Word]) -> bool {
        if !self.is_unital() {
            return false;
        }
        basis.iter().all(|u| {
            basis.iter().all(|v| {
                let uv = AlgebraElement::from_word(&self.algebra, u.clone())
                    .mul(&AlgebraElement::from_word(&self.algebra, v.clone()));
                self.eval(&uv) == self.value(u) * self.value(v)
            })
        })
    }

    /// Convolution product (f * g)(h) = f(h_1) g(h_2).
    pub fn convolve(&self, other: &Functional<F>, hopf: &HopfStructure<F>, basis: &[Word]) -> Self {
        let values = basis
            .iter()
            .map(|w| {
                let d = hopf.delta_word(w);
                let mut acc = F::zero();
                for (tuple, c) in d.terms() {
                    acc = acc + c.clone() * self.value(&tuple[0]) * other.value(&tuple[1]);
                }
                (w.clone(), acc)
            })
            .collect();
        Functional::new(&self.algebra, values)
    }

    /// Convolution inverse by the linear solve (f * x)(w) = eps(w) over the
    /// basis; errors when the system is singular.
    pub fn convolution_inverse(
        &self,
        hopf: &HopfStructure<F>,
        basis: &[Word],
    ) -> Result<Functional<F>, Error> {
        let n = basis.len();
        let idx: BTreeMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut m = vec![vec![F::zero(); n]; n];
        let mut b = vec![F::zero(); n];
        for (r, w) in basis.iter().enumerate() {
            let d = hopf.delta_word(w);
            for (tuple, c) in d.terms() {
                let col = *idx
                    .get(&tuple[1])
                    .ok_or_else(|| Error::Internal("coproduct leaves the basis".into()))?;
                let add = c.clone() * self.value(&tuple[0]);
                m[r][col] = m[r][col].clone() + add;
            }
            b[r] = hopf.counit_word(w);
        }
        let x = linalg::solve(&m, &b)
            .ok_or_else(|| Error::NotInvertible("singular convolution system".into()))?;
        let mut values = BTreeMap::new();
        for (i, w) in basis.iter().enumerate() {
            values.insert(w.clone(), x[i].clone());
        }
        let inv = Functional::new(&self.algebra, values);
        let eps = Functional::counit_of(hopf, basis);
        if inv.convolve(self, hopf, basis) != eps {
            return Err(Error::NotInvertible("left inverse is not a right inverse".into()));
        }
        Ok(inv)
    }

    /// Composition with the antipode; for characters this is the inverse.
    pub fn compose_antipode(&self, hopf: &HopfStructure<F>, basis: &[Word]) -> Self {
        let values = basis
            .iter()
            .map(|w| (w.clone(), self.eval(&hopf.antipode_word(w))))
            .collect();
        Functional::new(&self.algebra, values)
    }

    pub fn values(&self) -> &BTreeMap<Word, F> {
        &self.values
    }
}

/// The co-inner endomorphism h -> phi(h_1) h_2 phi^{-1}(h_3) of a Hopf
/// algebra, for a convolution-invertible unital functional phi.
pub fn coinn<F: Field>(
    hopf: &HopfStructure<F>,
    phi: &Functional<F>,
    basis: &[Word],
) -> Result<Morphism<F>, Error> {
    if !phi.is_unital() {
        return Err(Error::NotInvertible("coinn needs a unital functional".into()));
    }
    let inv = phi.convolution_inverse(hopf, basis)?;
    let pres = hopf.presentation();
    let mut images = BTreeMap::new();
    for w in basis {
        let e = AlgebraElement::from_word(pres, w.clone());
        let d2 = hopf.delta_n(&e, 2); // arity 3
        let mut acc = AlgebraElement::zero(pres);
        for (tuple, c) in d2.terms() {
            let coeff = c.clone() * phi.value(&tuple[0]) * inv.value(&tuple[2]);
            acc = acc.add(&AlgebraElement::from_word(pres, tuple[1].clone()).scale(&coeff));
        }
        images.insert(w.clone(), TensorElement::from_elements(&[acc]));
    }
    Ok(Morphism::linear_on_basis(pres, vec![pres.clone()], images))
}

/// Supported relation shapes for character enumeration.
enum RelShape<F: Field> {
    Power { gen: u8, scalar: F },     // g^n = scalar * 1
    Nilpotent { gen: u8 },            // g^n = 0
    QCommute { a: u8, b: u8, mu: F }, // a b = mu * b a
}

fn classify_rule<F: Field>(rule: &crate::kernel::Rule<F>) -> Result<RelShape<F>, Error> {
    let lhs = &rule.lhs.0;
    let all_same = lhs.iter().all(|&g| g == lhs[0]);
    if all_same && lhs.len() >= 2 {
        if rule.rhs.is_empty() {
            return Ok(RelShape::Nilpotent { gen: lhs[0] });
        }
        if rule.rhs.len() == 1 && rule.rhs[0].1.is_empty() {
            return Ok(RelShape::Power { gen: lhs[0], scalar: rule.rhs[0].0.clone() });
        }
    }
    if lhs.len() == 2 && rule.rhs.len() == 1 && rule.rhs[0].1 .0 == vec![lhs[1], lhs[0]] {
        return Ok(RelShape::QCommute { a: lhs[0], b: lhs[1], mu: rule.rhs[0].0.clone() });
    }
    Err(Error::Unsupported(
        "relation shape not supported for character enumeration".into(),
    ))
}

/// Complete list of characters of a finite-dimensional presented algebra
/// whose relations are powers, nilpotents and q-commutations. Power
/// relations enumerate roots of unity through the supplied closure, which
/// must be complete in the session field; every assignment is re-verified
/// against all relations.
pub fn enumerate_characters<F: Field>(
    pres: &Arc<Presentation<F>>,
    roots_of_unity: impl Fn(u32) -> Result<Vec<F>, Error>,
    basis: &[Word],
) -> Result<Vec<Functional<F>>, Error> {
    let ng = pres.generators().len();
    let mut candidates: Vec<Option<Vec<F>>> = vec![None; ng];
    let mut qpairs: Vec<(u8, u8)> = Vec::new();
    for rule in pres.rules() {
        match classify_rule(rule)? {
            RelShape::Nilpotent { gen } => {
                candidates[gen as usize] = Some(vec![F::zero()]);
            }
            RelShape::Power { gen, scalar } => {
                let n = rule.lhs.len() as u32;
                if scalar.is_one() {
                    let roots = roots_of_unity(n)?;
                    merge_candidates(&mut candidates[gen as usize], roots);
                } else {
                    return Err(Error::Unsupported(
                        "power relations with non-unit right-hand scalar".into(),
                    ));
                }
            }
            RelShape::QCommute { a, b, mu } => {
                if !mu.is_one() {
                    qpairs.push((a, b));
                }
            }
        }
    }
    for (i, c) in candidates.iter().enumerate() {
        if c.is_none() {
            return Err(Error::Unsupported(format!(
                "generator `{}` has no power or nilpotency relation",
                pres.generators()[i]
            )));
        }
    }
    let mut assignments: Vec<Vec<F>> = vec![Vec::new()];
    for c in &candidates {
        let mut next = Vec::new();
        for a in &assignments {
            for v in c.as_ref().unwrap() {
                let mut b = a.clone();
                b.push(v.clone());
                next.push(b);
            }
        }
        assignments = next;
    }
    let mut out = Vec::new();
    'outer: for assign in assignments {
        // A q-commuting pair with mu != 1 forces at least one image to zero.
        for (a, b) in &qpairs {
            if !assign[*a as usize].is_zero() && !assign[*b as usize].is_zero() {
                continue 'outer;
            }
        }
        let mut values = BTreeMap::new();
        for w in basis {
            let mut v = F::one();
            for &g in &w.0 {
                v = v * assign[g as usize].clone();
            }
            values.insert(w.clone(), v);
        }
        let phi = Functional::new(pres, values);
        let ok = pres.rules().iter().all(|rule| {
            let lhs: F =
                rule.lhs.0.iter().fold(F::one(), |acc, &g| acc * assign[g as usize].clone());
            let rhs: F = rule.rhs.iter().fold(F::zero(), |acc, (c, w)| {
                let wv = w.0.iter().fold(F::one(), |a, &g| a * assign[g as usize].clone());
                acc + c.clone() * wv
            });
            lhs == rhs
        });
        if ok {
            out.push(phi);
        }
    }
    Ok(out)
}

fn merge_candidates<F: Field>(slot: &mut Option<Vec<F>>, new: Vec<F>) {
    match slot {
        None => *slot = Some(new),
        Some(cur) => {
            cur.retain(|v| new.contains(v));
        }
    }
}

#[cfg(test)]
pub mod tests {
    use num_traits::Zero;
    use super::*;
    use crate::ratfn::{ratfn_roots_of_unity, RatFn};
    use crate::test_support::{free_commutative_rank1, taft_presentation};
    use crate::Scalar;

    type E = AlgebraElement<Scalar>;
    type T = TensorElement<Scalar>;

    pub fn taft_hopf(n: u32) -> (Arc<Presentation<Scalar>>, Arc<HopfStructure<Scalar>>) {
        let q = RatFn::zeta(n);
        let p = taft_presentation(n, q);
        let g = E::generator(&p, "g").unwrap();
        let x = E::generator(&p, "x").unwrap();
        let ginv = g.pow(n as usize - 1);
        let hopf = HopfStructure::new(
            &p,
            vec![T::pair(&g, &g), T::pair(&E::one(&p), &x).add(&T::pair(&x, &g))],
            vec![Scalar::from_int(1), Scalar::from_int(0)],
            vec![ginv.clone(), x.mul(&ginv).neg()],
        )
        .unwrap();
        (p, hopf)
    }

    /// Extended character of T_2 with frame values (1, sigma_xg, sigma_g,
    /// sigma_x) on (1, xg, g, x); stored on normal words (xg = -gx).
    pub fn extended_char_t2(
        p: &Arc<Presentation<Scalar>>,
        sg: &Scalar,
        sx: &Scalar,
        sxg: &Scalar,
    ) -> Functional<Scalar> {
        let g = p.gen_index("g").unwrap();
        let x = p.gen_index("x").unwrap();
        let mut values = BTreeMap::new();
        values.insert(Word::unit(), Scalar::from_int(1));
        values.insert(Word::gen(g), sg.clone());
        values.insert(Word::gen(x), sx.clone());
        values.insert(Word(vec![g, x]), -sxg.clone());
        Functional::new(p, values)
    }

    #[test]
    fn taft_coproduct_antipode_on_generators() {
        let (p, h) = taft_hopf(2);
        let x = E::generator(&p, "x").unwrap();
        let g = E::generator(&p, "g").unwrap();
        let dx = h.delta(&x);
        let expect = T::pair(&E::one(&p), &x).add(&T::pair(&x, &g));
        assert_eq!(dx, expect);
        assert_eq!(h.antipode_elem(&g), g);
        assert_eq!(h.counit(&E::one(&p)), Scalar::from_int(1));
    }

    #[test]
    fn taft_hopf_axioms_pass() {
        for n in [2u32, 3, 4] {
            let (p, h) = taft_hopf(n);
            let dim = p.full_basis(4 * n as usize).unwrap().len();
            assert_eq!(dim, (n * n) as usize);
            let failures = h.verify_axioms(2 * (n as usize - 1) + 1);
            assert!(failures.is_empty(), "T_{}: {:?}", n, failures);
        }
    }

    #[test]
    fn primitive_element_hopf_axioms() {
        let p = free_commutative_rank1::<Scalar>();
        let x = E::generator(&p, "x").unwrap();
        let h = HopfStructure::new(
            &p,
            vec![T::pair(&E::one(&p), &x).add(&T::pair(&x, &E::one(&p)))],
            vec![Scalar::from_int(0)],
            vec![x.neg()],
        )
        .unwrap();
        assert!(h.verify_axioms(6).is_empty());
    }

    #[test]
    fn corrupted_structures_are_rejected_or_fail_axioms() {
        let q = RatFn::zeta(2);
        let p = taft_presentation(2, q);
        let x = E::generator(&p, "x").unwrap();
        let g = E::generator(&p, "g").unwrap();
        // Delta(x) = x (x) x does not even respect x g = q g x (q = -1), so
        // construction reports the violated relation.
        let bad = HopfStructure::new(
            &p,
            vec![T::pair(&g, &g), T::pair(&x, &x)],
            vec![Scalar::from_int(1), Scalar::from_int(0)],
            vec![g.clone(), x.neg()],
        );
        assert!(matches!(bad, Err(Error::RelationViolated(_))));
        // eps(g) = -1 is a valid algebra map but the wrong counit: the
        // axiom suite pinpoints the counit law.
        let h = HopfStructure::new(
            &p,
            vec![T::pair(&g, &g), T::pair(&E::one(&p), &x).add(&T::pair(&x, &g))],
            vec![Scalar::from_int(-1), Scalar::from_int(0)],
            vec![g.clone(), x.mul(&g).neg()],
        )
        .unwrap();
        let failures = h.verify_axioms(3);
        assert!(!failures.is_empty());
        assert!(failures.iter().any(|f| f.contains("counit")));
    }

    #[test]
    fn characters_of_taft_form_cyclic_group() {
        for n in [2u32, 3, 4] {
            let (p, h) = taft_hopf(n);
            let basis = p.full_basis(4 * n as usize).unwrap();
            let chars = enumerate_characters(
                &p,
                |k| {
                    ratfn_roots_of_unity(n, k)
                        .ok_or(Error::RootsNotInField { wanted: k, order: n })
                },
                &basis,
            )
            .unwrap();
            assert_eq!(chars.len(), n as usize);
            for c in &chars {
                assert!(c.is_character(&basis));
                let x = Word::gen(p.gen_index("x").unwrap());
                assert!(c.value(&x).is_zero());
            }
            let eps = Functional::counit_of(&h, &basis);
            assert!(chars.contains(&eps));
            for a in &chars {
                for b in &chars {
                    let ab = a.convolve(b, &h, &basis);
                    assert!(chars.contains(&ab));
                }
                let ai = a.convolution_inverse(&h, &basis).unwrap();
                assert!(chars.contains(&ai));
                assert_eq!(ai, a.compose_antipode(&h, &basis));
            }
            // Cyclic: some character generates the whole list.
            let generates = chars.iter().any(|c| {
                let mut seen = vec![eps.clone()];
                let mut cur = c.clone();
                while !seen.contains(&cur) {
                    seen.push(cur.clone());
                    cur = cur.convolve(c, &h, &basis);
                }
                seen.len() == chars.len()
            });
            assert!(generates);
        }
    }

    #[test]
    fn characters_of_group_algebra_z2() {
        let p = Presentation::new(
            "C[Z2]",
            vec!["g".into()],
            vec![crate::kernel::Rule {
                lhs: Word(vec![0, 0]),
                rhs: vec![(Scalar::from_int(1), Word::unit())],
            }],
            None,
        )
        .unwrap();
        let basis = p.full_basis(4).unwrap();
        let chars = enumerate_characters(
            &p,
            |k| ratfn_roots_of_unity(1, k).ok_or(Error::RootsNotInField { wanted: k, order: 1 }),
            &basis,
        )
        .unwrap();
        assert_eq!(chars.len(), 2);
    }

    #[test]
    fn convolution_unit_and_symbolic_inverse() {
        let (p, h) = taft_hopf(2);
        let basis = p.full_basis(8).unwrap();
        let f = Functional::new(
            &p,
            basis
                .iter()
                .enumerate()
                .map(|(i, w)| (w.clone(), Scalar::from_int(i as i64 + 2)))
                .collect(),
        );
        let eps = Functional::counit_of(&h, &basis);
        assert_eq!(eps.convolve(&f, &h, &basis), f);
        assert_eq!(f.convolve(&eps, &h, &basis), f);

        let session = crate::Session::new(2, &["sg", "sx", "sxg"]);
        let sg = session.indeterminate("sg").unwrap();
        let sx = session.indeterminate("sx").unwrap();
        let sxg = session.indeterminate("sxg").unwrap();
        let sigma = extended_char_t2(&p, &sg, &sx, &sxg);
        let inv = sigma.convolution_inverse(&h, &basis).unwrap();
        let wg = Word::gen(p.gen_index("g").unwrap());
        let wx = Word::gen(p.gen_index("x").unwrap());
        let wgx = Word(vec![p.gen_index("g").unwrap(), p.gen_index("x").unwrap()]);
        // (sigma^{-1})_g = sigma_g^{-1}, (sigma^{-1})_x = -sigma_x/sigma_g,
        // (sigma^{-1})_{xg} = -sigma_{xg}/sigma_g; on the normal word gx the
        // xg-frame value picks up the factor -1.
        assert_eq!(inv.value(&wg), sg.inv().unwrap());
        assert_eq!(inv.value(&wx), -(sx.clone() * sg.inv().unwrap()));
        assert_eq!(inv.value(&wgx), sxg.clone() * sg.inv().unwrap());

        let bad = extended_char_t2(&p, &Scalar::from_int(0), &sx, &sxg);
        assert!(bad.convolution_inverse(&h, &basis).is_err());
    }

    #[test]
    fn coinn_of_character_and_of_counit() {
        let (p, h) = taft_hopf(3);
        let basis = p.full_basis(12).unwrap();
        let chars = enumerate_characters(
            &p,
            |k| ratfn_roots_of_unity(3, k).ok_or(Error::RootsNotInField { wanted: k, order: 3 }),
            &basis,
        )
        .unwrap();
        let eps = Functional::counit_of(&h, &basis);
        let id = Morphism::identity(&p);
        for c in &chars {
            let ad = coinn(&h, c, &basis).unwrap();
            // coinn(phi_r): g -> g, x -> r^{-1} x
            let r = c.value(&Word::gen(p.gen_index("g").unwrap()));
            let g = E::generator(&p, "g").unwrap();
            let x = E::generator(&p, "x").unwrap();
            assert_eq!(ad.apply_elem(&g), g);
            assert_eq!(ad.apply_elem(&x), x.scale(&r.inv().unwrap()));
            if c == &eps {
                assert!(ad.agrees_with(&id, &basis));
            }
        }
    }

    #[test]
    fn convolution_is_associative_on_random_functionals() {
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let (p, h) = taft_hopf(2);
        let basis = p.full_basis(8).unwrap();
        let mut rng = StdRng::seed_from_u64(7);
        let mut rand_fn = || {
            Functional::new(
                &p,
                basis
                    .iter()
                    .map(|w| (w.clone(), Scalar::from_int(rng.gen_range(-5..6))))
                    .collect(),
            )
        };
        for _ in 0..25 {
            let (f, g, k) = (rand_fn(), rand_fn(), rand_fn());
            let left = f.convolve(&g, &h, &basis).convolve(&k, &h, &basis);
            let right = f.convolve(&g.convolve(&k, &h, &basis), &h, &basis);
            assert_eq!(left, right);
        }
    }

    #[test]
    fn coinn_reverses_convolution_order() {
        // coinn(phi) o coinn(psi) = coinn(psi * phi) with symbolic phi, psi.
        let session = crate::Session::new(2, &["sg", "sx", "sxg", "tg", "tx", "txg"]);
        let (p, h) = taft_hopf(2);
        let basis = p.full_basis(8).unwrap();
        let phi = extended_char_t2(
            &p,
            &session.indeterminate("sg").unwrap(),
            &session.indeterminate("sx").unwrap(),
            &session.indeterminate("sxg").unwrap(),
        );
        let psi = extended_char_t2(
            &p,
            &session.indeterminate("tg").unwrap(),
            &session.indeterminate("tx").unwrap(),
            &session.indeterminate("txg").unwrap(),
        );
        let a = coinn(&h, &phi, &basis).unwrap();
        let b = coinn(&h, &psi, &basis).unwrap();
        let comp = b.then(&a).unwrap(); // coinn(phi) after coinn(psi)
        let conv = coinn(&h, &psi.convolve(&phi, &h, &basis), &basis).unwrap();
        assert!(comp.agrees_with(&conv, &basis));
    }
}
