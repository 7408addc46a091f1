//! The crossed module of bisections and bialgebroid automorphisms:
//! Ad, the action of automorphisms on bisections, and both axioms.

use std::collections::BTreeMap;
use std::sync::Arc;


use crate::error::Error;
use crate::esbrd::Bialgebroid;
use crate::field::Field;
use crate::gauge::{gauge_via_delta_c, Bisection, CarrierMap};
use crate::hopf::{HopfStructure, Morphism};
use crate::kernel::{AlgebraElement, Word};
use crate::linalg;
use crate::tensor::TensorElement;

/// Ad of a bisection: the vertical automorphism x (x) x' -> F(x) (x) F(x')
/// for the inducing gauge transformation F.
pub fn ad_of_bisection<F: Field>(
    bi: &Arc<Bialgebroid<F>>,
    sigma: &Bisection<F>,
) -> Result<CarrierMap<F>, Error> {
    let f = match sigma.to_gauge() {
        Ok(f) => f,
        Err(_) => gauge_via_delta_c(bi, sigma)?,
    };
    Ok(CarrierMap::Gauge(Arc::new(f)))
}

/// The alternate description of Ad through the iterated coproduct:
/// Ad_sigma(X) = sigma(X_1) |> X_2 <| sigma^{-1}(X_3), compared with the
/// slotwise form on one carrier element.
pub fn verify_ad_alt_formula<F: Field>(
    bi: &Bialgebroid<F>,
    sigma: &Bisection<F>,
    sigma_inv: &Bisection<F>,
    x: &TensorElement<F>,
    ad: &CarrierMap<F>,
) -> Result<(), String> {
    let a = bi.extension().algebra().clone();
    let t6 = coproduct2_tensor(bi, x);
    let mut acc = TensorElement::zero(vec![a.clone(), a.clone()]);
    for (t, c) in t6.terms() {
        let p1 = TensorElement::from_elements(&[
            AlgebraElement::from_word(&a, t[0].clone()),
            AlgebraElement::from_word(&a, t[1].clone()),
        ]);
        let p3 = TensorElement::from_elements(&[
            AlgebraElement::from_word(&a, t[4].clone()),
            AlgebraElement::from_word(&a, t[5].clone()),
        ]);
        let b1 = sigma.eval(&p1).map_err(|e| e.to_string())?;
        let b2 = sigma_inv.eval(&p3).map_err(|e| e.to_string())?;
        let mid = TensorElement::from_elements(&[
            b1.mul(&AlgebraElement::from_word(&a, t[2].clone())),
            AlgebraElement::from_word(&a, t[3].clone()).mul(&b2),
        ]);
        acc = acc.add(&mid.scale(c));
    }
    let direct = ad.apply(x);
    if acc == direct {
        Ok(())
    } else {
        Err(format!(
            "iterated-coproduct form {} != slotwise form {}",
            acc.show(),
            direct.show()
        ))
    }
}

/// (Delta (x)_B id) Delta on the carrier: a 6-slot tensor.
pub fn coproduct2_tensor<F: Field>(
    bi: &Bialgebroid<F>,
    x: &TensorElement<F>,
) -> TensorElement<F> {
    let a = bi.extension().algebra().clone();
    let t4 = bi.coproduct_tensor(x);
    let mut slots = vec![a.clone(); 6];
    let mut out = TensorElement::zero(slots.drain(..).collect());
    for (t, c) in t4.terms() {
        let first = TensorElement::from_elements(&[
            AlgebraElement::from_word(&a, t[0].clone()),
            AlgebraElement::from_word(&a, t[1].clone()),
        ]);
        let d = bi.coproduct_tensor(&first);
        for (dt, dc) in d.terms() {
            let parts: Vec<AlgebraElement<F>> = dt
                .iter()
                .chain([&t[2], &t[3]])
                .map(|w| AlgebraElement::from_word(&a, w.clone()))
                .collect();
            out = out.add(&TensorElement::from_elements(&parts).scale(&(c.clone() * dc.clone())));
        }
    }
    out
}

/// First crossed-module axiom on one generator:
/// Ad_{Phi |> sigma} = Phi^{-1} o Ad_sigma o Phi.
pub fn verify_axiom1_on<F: Field>(
    bi: &Arc<Bialgebroid<F>>,
    phi: &CarrierMap<F>,
    phi_inv: &CarrierMap<F>,
    sigma: &Bisection<F>,
    x: &TensorElement<F>,
) -> Result<(), String> {
    let acted = sigma.precompose(phi.clone());
    let ad_acted = ad_of_bisection(bi, &acted).map_err(|e| e.to_string())?;
    let lhs = ad_acted.apply(x);
    let ad_sigma = ad_of_bisection(bi, sigma).map_err(|e| e.to_string())?;
    let rhs = phi_inv.apply(&ad_sigma.apply(&phi.apply(x)));
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("axiom 1 fails: {} vs {}", lhs.show(), rhs.show()))
    }
}

/// Second crossed-module axiom on one generator:
/// Ad_tau |> sigma = tau * sigma * tau^{-1}.
pub fn verify_axiom2_on<F: Field>(
    bi: &Bialgebroid<F>,
    tau: &Bisection<F>,
    tau_inv: &Bisection<F>,
    sigma: &Bisection<F>,
    ad_tau: &CarrierMap<F>,
    x: &TensorElement<F>,
) -> Result<(), String> {
    let lhs = sigma.eval(&ad_tau.apply(x)).map_err(|e| e.to_string())?;
    let rhs = triple_convolution(bi, tau, sigma, tau_inv, x).map_err(|e| e.to_string())?;
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!(
            "axiom 2 fails: (Ad_tau |> sigma) = {} vs tau*sigma*tau^{{-1}} = {}",
            lhs.show(),
            rhs.show()
        ))
    }
}

/// (s1 * s2 * s3)(x) through the twice-iterated coproduct.
pub fn triple_convolution<F: Field>(
    bi: &Bialgebroid<F>,
    s1: &Bisection<F>,
    s2: &Bisection<F>,
    s3: &Bisection<F>,
    x: &TensorElement<F>,
) -> Result<AlgebraElement<F>, Error> {
    let a = bi.extension().algebra().clone();
    let t6 = coproduct2_tensor(bi, x);
    let mut acc = AlgebraElement::zero(&a);
    for (t, c) in t6.terms() {
        let p = |i: usize, j: usize| {
            TensorElement::from_elements(&[
                AlgebraElement::from_word(&a, t[i].clone()),
                AlgebraElement::from_word(&a, t[j].clone()),
            ])
        };
        let v1 = s1.eval(&p(0, 1))?;
        let v2 = s2.eval(&p(2, 3))?;
        let v3 = s3.eval(&p(4, 5))?;
        acc = acc.add(&v1.mul(&v2).mul(&v3).scale(c));
    }
    Ok(acc)
}

// ----- Hopf-algebra-level crossed module (Galois objects via the C ~ H
// identification): characters, coinn and matrix representations. -----

/// Matrix of a linear endomorphism of a finite-dimensional algebra with
/// respect to a frame of elements (each a combination of basis words):
/// column j holds the frame coordinates of the image of frame\[j\].
pub fn matrix_in_frame<F: Field>(
    basis: &[Word],
    frame: &[AlgebraElement<F>],
    apply: impl Fn(&AlgebraElement<F>) -> AlgebraElement<F>,
) -> Result<Vec<Vec<F>>, Error> {
    let n = basis.len();
    if frame.len() != n {
        return Err(Error::Parse("frame size must equal the basis size".into()));
    }
    let coords = |e: &AlgebraElement<F>| -> Vec<F> {
        basis.iter().map(|w| e.coeff(w)).collect()
    };
    let c: Vec<Vec<F>> = {
        // columns are frame vectors
        let cols: Vec<Vec<F>> = frame.iter().map(|f| coords(f)).collect();
        (0..n)
            .map(|i| cols.iter().map(|col| col[i].clone()).collect())
            .collect()
    };
    let cinv = linalg::invert(&c).ok_or_else(|| Error::Parse("frame is not a basis".into()))?;
    let mut out = vec![vec![F::zero(); n]; n];
    for (j, f) in frame.iter().enumerate() {
        let img = coords(&apply(f));
        for i in 0..n {
            let mut acc = F::zero();
            for (k, v) in img.iter().enumerate() {
                acc = acc + cinv[i][k].clone() * v.clone();
            }
            out[i][j] = acc;
        }
    }
    Ok(out)
}

/// Matrix of a morphism in a frame.
pub fn morphism_matrix_in_frame<F: Field>(
    m: &Morphism<F>,
    basis: &[Word],
    frame: &[AlgebraElement<F>],
) -> Result<Vec<Vec<F>>, Error> {
    matrix_in_frame(basis, frame, |e| m.apply_elem(e))
}

/// A linear map on a finite-dimensional presented algebra given by its
/// matrix in a frame.
pub fn morphism_from_frame_matrix<F: Field>(
    hopf: &HopfStructure<F>,
    basis: &[Word],
    frame: &[AlgebraElement<F>],
    matrix: &[Vec<F>],
) -> Result<Morphism<F>, Error> {
    let pres = hopf.presentation();
    let n = basis.len();
    if frame.len() != n || matrix.len() != n {
        return Err(Error::Parse("frame/matrix size mismatch".into()));
    }
    // Images of frame elements.
    let mut frame_images = Vec::new();
    for j in 0..n {
        let mut img = AlgebraElement::zero(pres);
        for (i, f) in frame.iter().enumerate() {
            if !matrix[i][j].is_zero() {
                img = img.add(&f.scale(&matrix[i][j]));
            }
        }
        frame_images.push(img);
    }
    // Convert to images of basis words: solve basis = frame * T.
    let coords = |e: &AlgebraElement<F>| -> Vec<F> { basis.iter().map(|w| e.coeff(w)).collect() };
    let cols: Vec<Vec<F>> = frame.iter().map(|f| coords(f)).collect();
    let cmat: Vec<Vec<F>> = (0..n)
        .map(|i| cols.iter().map(|col| col[i].clone()).collect())
        .collect();
    let cinv = linalg::invert(&cmat).ok_or_else(|| Error::Parse("frame is not a basis".into()))?;
    let mut images = BTreeMap::new();
    for (bidx, w) in basis.iter().enumerate() {
        // w = sum_j cinv[j][bidx] frame[j]
        let mut img = AlgebraElement::zero(pres);
        for (j, fi) in frame_images.iter().enumerate() {
            if !cinv[j][bidx].is_zero() {
                img = img.add(&fi.scale(&cinv[j][bidx]));
            }
        }
        images.insert(w.clone(), TensorElement::from_elements(&[img]));
    }
    Ok(Morphism::linear_on_basis(pres, vec![pres.clone()], images))
}

/// Unitality plus coalgebra-map conditions for a linear endomorphism of a
/// finite-dimensional Hopf algebra (the extended-automorphism conditions
/// over the ground field).
pub fn verify_extended_hopf_automorphism<F: Field>(
    hopf: &HopfStructure<F>,
    basis: &[Word],
    m: &Morphism<F>,
) -> Vec<(String, Result<(), String>)> {
    let pres = hopf.presentation().clone();
    let mut out = Vec::new();
    let one = AlgebraElement::one(&pres);
    out.push((
        "unitality".into(),
        if m.apply_elem(&one) == one { Ok(()) } else { Err("Phi(1) != 1".into()) },
    ));
    for w in basis {
        let e = AlgebraElement::from_word(&pres, w.clone());
        let lhs = hopf.delta(&m.apply_elem(&e));
        let rhs = hopf
            .delta(&e)
            .map_slot(0, |u| m.apply_elem(&AlgebraElement::from_word(&pres, u.clone())))
            .map_slot(1, |u| m.apply_elem(&AlgebraElement::from_word(&pres, u.clone())));
        out.push((
            format!("coproduct-{}", pres.show_word(w)),
            if lhs == rhs {
                Ok(())
            } else {
                Err(format!("coproduct equivariance fails on {}", pres.show_word(w)))
            },
        ));
        let eps_ok = hopf.counit(&m.apply_elem(&e)) == hopf.counit_word(w);
        out.push((
            format!("counit-{}", pres.show_word(w)),
            if eps_ok {
                Ok(())
            } else {
                Err(format!("counit equivariance fails on {}", pres.show_word(w)))
            },
        ));
    }
    out
}

/// Gauge-mode crossed-module suite on the carrier generators, for listed
/// families of bisections and automorphism pairs (map, inverse).
pub fn verify_crossed_module<F: Field>(
    bi: &Arc<Bialgebroid<F>>,
    bisections: &[(String, Bisection<F>, Bisection<F>)], // (name, sigma, sigma_inv)
    automorphisms: &[(String, CarrierMap<F>, CarrierMap<F>)], // (name, phi, phi_inv)
) -> Vec<(String, Result<(), String>)> {
    let mut out = Vec::new();
    for (an, phi, phi_inv) in automorphisms {
        for (sn, sigma, _) in bisections {
            for (gn, g) in bi.generators() {
                let res = verify_axiom1_on(bi, phi, phi_inv, sigma, g);
                out.push((format!("axiom1-{}-{}-{}", an, sn, gn), res));
            }
        }
    }
    for (tn, tau, tau_inv) in bisections {
        let ad_tau = match ad_of_bisection(bi, tau) {
            Ok(m) => m,
            Err(e) => {
                out.push((format!("axiom2-{}-ad", tn), Err(e.to_string())));
                continue;
            }
        };
        for (sn, sigma, _) in bisections {
            for (gn, g) in bi.generators() {
                let res = verify_axiom2_on(bi, tau, tau_inv, sigma, &ad_tau, g);
                out.push((format!("axiom2-{}-{}-{}", tn, sn, gn), res));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::esbrd::GaloisBialgebroid;
    use crate::gauge::{Bisection, GaugeTransformation};
    use crate::suites::TaftIso;
    use crate::{Element, Scalar};
    use num_traits::Zero;
    use std::collections::BTreeMap as Map;
    use std::sync::Arc;

    #[test]
    fn ad_of_the_counit_is_the_identity() {
        let entry = catalog::get_example("sl2-nff", &Map::new()).unwrap();
        let bi = entry.bialgebroid.clone();
        let eps = Bisection::counit(&bi);
        let ad = ad_of_bisection(&bi, &eps).unwrap();
        for (_, g) in bi.generators() {
            assert_eq!(ad.apply(g), *g);
        }
    }

    #[test]
    fn ad_inverse_matches_inverse_bisection() {
        let entry = catalog::get_example("podles-monopole", &Map::new()).unwrap();
        let bi = entry.bialgebroid.clone();
        let ext = entry.ext.clone();
        let a = entry.algebra().clone();
        let el = |s: &str| Element::generator(&a, s).unwrap();
        let x = entry.session.indeterminate("X").unwrap();
        let family = |t: &Scalar| {
            GaugeTransformation::algebra(
                &ext,
                vec![
                    el("b").scale(&t.inv().unwrap()),
                    el("c").scale(t),
                    el("a").scale(t),
                    el("d").scale(&t.inv().unwrap()),
                ],
            )
            .unwrap()
        };
        let sigma = Bisection::from_gauge(&bi, family(&x));
        let sigma_inv = Bisection::from_gauge(&bi, family(&x.inv().unwrap()));
        let ad = ad_of_bisection(&bi, &sigma).unwrap();
        let ad_inv = ad_of_bisection(&bi, &sigma_inv).unwrap();
        for (_, g) in bi.generators() {
            assert_eq!(ad_inv.apply(&ad.apply(g)), *g);
        }
    }

    #[test]
    fn character_ad_scales_the_nilpotent_generator() {
        // Ad of the character with g -> rho acts as Xi -> rho^{-1} Xi on the
        // carrier, through the isomorphism.
        let mut p3 = Map::new();
        p3.insert("N".to_string(), "3".to_string());
        let entry = catalog::get_example("taft", &p3).unwrap();
        let bi = entry.bialgebroid.clone();
        let iso = TaftIso::new(&entry, 3).unwrap();
        let rho = entry.session.zeta();
        let hp = entry.hopf().presentation().clone();
        let basis = hp.full_basis(64).unwrap();
        let phi = crate::hopf::Functional::new(
            &hp,
            basis
                .iter()
                .map(|w| {
                    let mut v = Scalar::from_int(1);
                    for &l in &w.0 {
                        if l == hp.gen_index("g").unwrap() {
                            v = v * rho.clone();
                        } else {
                            v = Scalar::zero();
                        }
                    }
                    (w.clone(), v)
                })
                .collect(),
        );
        let mut values = Vec::new();
        for b in &iso.gb.basis {
            values.push(phi.eval(&iso.to_hopf(&entry, b).unwrap()));
        }
        let sigma = Bisection::from_galois_functional(&bi, &iso.gb, values).unwrap();
        let ad = ad_of_bisection(&bi, &sigma).unwrap();
        let xi = bi.gen("Xi").unwrap().clone();
        let gamma = bi.gen("Gamma").unwrap().clone();
        assert_eq!(ad.apply(&gamma), gamma);
        assert_eq!(ad.apply(&xi), xi.scale(&rho.inv().unwrap()));
        let _ = Arc::new(GaloisBialgebroid::new(bi.clone(), 8).unwrap());
    }
}
