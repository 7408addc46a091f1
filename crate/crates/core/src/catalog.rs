//! Built-in, fully specified instances of the worked examples: the
//! q-deformed SL(2) monopole bundle, the commutative not-faithfully-flat
//! SL(2) extension, the cyclic-nilpotent Galois objects A_s, cocycled
//! group algebras and the self-Galois entry.
//!
//! Loading an entry runs confluence, coaction, translation and membership
//! checks; entries that fail any of them do not load.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::esbrd::{AntipodeData, AntipodeKind, Bialgebroid, CPoly};
use crate::expr::parse_tensor;
use crate::field::Field;
use crate::hgext::{ComoduleAlgebra, HopfGaloisExtension};
use crate::hopf::HopfStructure;
use crate::kernel::{check_local_confluence, Presentation, Rule, Word};
use crate::session::Session;
use crate::tensor::TensorElement;
use crate::{Element, Scalar, Tensor};

#[derive(Clone, Debug)]
pub enum Flavor {
    Monopole,
    Sl2Nff,
    Taft { n: u32 },
    SelfGalois { n: u32 },
    Group { data: CocycledGroupData },
}

pub struct CatalogEntry {
    pub name: String,
    pub session: Session,
    pub ext: Arc<HopfGaloisExtension<Scalar>>,
    pub bialgebroid: Arc<Bialgebroid<Scalar>>,
    /// Named coinvariants used by the entry's identities.
    pub named_b: Vec<(String, Element)>,
    pub flavor: Flavor,
    /// Default truncation degree for balanced-tensor checks.
    pub default_degree: usize,
}

impl CatalogEntry {
    pub fn algebra(&self) -> &Arc<Presentation<Scalar>> {
        self.ext.algebra()
    }

    pub fn hopf(&self) -> &Arc<HopfStructure<Scalar>> {
        self.ext.hopf()
    }

    pub fn named_b(&self, name: &str) -> Result<&Element, Error> {
        self.named_b
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, e)| e)
            .ok_or_else(|| Error::Parse(format!("unknown coinvariant `{}`", name)))
    }
}

/// Entry names and one-line descriptions for `catalog list`.
pub fn list() -> Vec<(&'static str, &'static str)> {
    vec![
        (
            "podles-monopole",
            "U(1) bundle over the standard quantum sphere inside O(SL_q(2)); q symbolic",
        ),
        (
            "sl2-nff",
            "commutative O(SL(2)) over C[c,d], flat but not faithfully flat",
        ),
        (
            "taft",
            "Galois object A_s of the N^2-dimensional cyclic-nilpotent Hopf algebra (params: N, s)",
        ),
        ("sweedler", "the N = 2 case of `taft`"),
        (
            "self-galois",
            "a Hopf algebra as a Galois object over itself via its coproduct (param: N)",
        ),
        (
            "group",
            "cocycled group algebra of Z_2 x Z_2 (param: cocycle = sign | trivial)",
        ),
    ]
}

pub fn get_example(name: &str, params: &BTreeMap<String, String>) -> Result<CatalogEntry, Error> {
    let n_param = |default: u32| -> Result<u32, Error> {
        match params.get("N") {
            None => Ok(default),
            Some(v) => v
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("invalid N={}", v)))
                .and_then(|n| {
                    if n >= 2 {
                        Ok(n)
                    } else {
                        Err(Error::Parse("N must be at least 2".into()))
                    }
                }),
        }
    };
    match name {
        "podles-monopole" => {
            let qroot = match params.get("qroot") {
                None => None,
                Some(v) => Some(
                    v.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("invalid qroot={}", v)))?,
                ),
            };
            monopole_entry(qroot)
        }
        "sl2-nff" => sl2_nff_entry(),
        "taft" => taft_entry(n_param(2)?, params.get("s").map(|s| s.as_str())),
        "sweedler" => {
            let mut e = taft_entry(2, params.get("s").map(|s| s.as_str()))?;
            e.name = "sweedler".into();
            Ok(e)
        }
        "self-galois" => self_galois_entry(n_param(2)?),
        "group" => {
            let data = match params.get("cocycle").map(|s| s.as_str()) {
                None | Some("sign") => zz2_sign_cocycle(),
                Some("trivial") => trivial_cocycle(&[2, 2]),
                Some(other) => return Err(Error::Parse(format!("unknown cocycle `{}`", other))),
            };
            group_entry(data)
        }
        other => Err(Error::Parse(format!("unknown catalog entry `{}`", other))),
    }
}

fn ensure_confluent(p: &Arc<Presentation<Scalar>>) -> Result<(), Error> {
    let bound = (2 * p.max_rule_lhs_len()).max(4);
    let rep = check_local_confluence(p, bound);
    if rep.is_confluent() {
        Ok(())
    } else {
        Err(Error::Load {
            entry: p.name().into(),
            detail: format!(
                "presentation not locally confluent: {} of {} ambiguities fail",
                rep.failures.len(),
                rep.ambiguities
            ),
        })
    }
}

fn ensure_coaction(com: &ComoduleAlgebra<Scalar>, degree: usize) -> Result<(), Error> {
    let failures = com.verify_coaction(degree);
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Error::Load { entry: com.algebra().name().into(), detail: failures.join("; ") })
    }
}

// ----- shared presentation builders -----

/// O(SL_q(2)): generators in precedence order b, c, a, d with the
/// q-straightening and both determinant rules; graded by coaction weight.
pub fn slq2_presentation(q: &Scalar) -> Result<Arc<Presentation<Scalar>>, Error> {
    let qi = q.inv().ok_or(Error::DivisionByZero)?;
    let (b, c, a, d) = (0u8, 1u8, 2u8, 3u8);
    let w = |v: &[u8]| Word(v.to_vec());
    let one = Scalar::one;
    let rules = vec![
        Rule { lhs: w(&[c, b]), rhs: vec![(one(), w(&[b, c]))] },
        Rule { lhs: w(&[a, b]), rhs: vec![(q.clone(), w(&[b, a]))] },
        Rule { lhs: w(&[a, c]), rhs: vec![(q.clone(), w(&[c, a]))] },
        Rule { lhs: w(&[d, b]), rhs: vec![(qi.clone(), w(&[b, d]))] },
        Rule { lhs: w(&[d, c]), rhs: vec![(qi.clone(), w(&[c, d]))] },
        Rule { lhs: w(&[d, a]), rhs: vec![(one(), Word::unit()), (qi.clone(), w(&[b, c]))] },
        Rule { lhs: w(&[a, d]), rhs: vec![(one(), Word::unit()), (q.clone(), w(&[b, c]))] },
    ];
    Presentation::new(
        "O(SL_q2)",
        vec!["b".into(), "c".into(), "a".into(), "d".into()],
        rules,
        Some(vec![1, -1, -1, 1]),
    )
}

/// The q-cyclic-nilpotent presentation: y z = q z y, y^n = yn * 1, z^n = 1.
pub fn cyclic_nilpotent_presentation(
    name: &str,
    n: u32,
    q: &Scalar,
    yn: &Scalar,
    z: &str,
    y: &str,
) -> Result<Arc<Presentation<Scalar>>, Error> {
    let mut yn_rhs = Vec::new();
    if !yn.is_zero() {
        yn_rhs.push((yn.clone(), Word::unit()));
    }
    let rules = vec![
        Rule { lhs: Word(vec![1, 0]), rhs: vec![(q.clone(), Word(vec![0, 1]))] },
        Rule { lhs: Word(vec![1; n as usize]), rhs: yn_rhs },
        Rule { lhs: Word(vec![0; n as usize]), rhs: vec![(Scalar::one(), Word::unit())] },
    ];
    Presentation::new(name, vec![z.into(), y.into()], rules, None)
}

/// The Laurent-circle Hopf algebra C[z, z^{-1}] with group-like z.
pub fn circle_hopf() -> Result<(Arc<Presentation<Scalar>>, Arc<HopfStructure<Scalar>>), Error> {
    let one = Scalar::one;
    let p = Presentation::new(
        "O(U1)",
        vec!["z".into(), "zi".into()],
        vec![
            Rule { lhs: Word(vec![0, 1]), rhs: vec![(one(), Word::unit())] },
            Rule { lhs: Word(vec![1, 0]), rhs: vec![(one(), Word::unit())] },
        ],
        Some(vec![1, -1]),
    )?;
    let z = Element::generator(&p, "z")?;
    let zi = Element::generator(&p, "zi")?;
    let hopf = HopfStructure::new(
        &p,
        vec![Tensor::pair(&z, &z), Tensor::pair(&zi, &zi)],
        vec![Scalar::one(), Scalar::one()],
        vec![zi.clone(), z.clone()],
    )?;
    Ok((p, hopf))
}

/// The cyclic-nilpotent Hopf algebra on g, x: group-like g, (1,g)-skew
/// primitive x, antipode S(g) = g^{N-1}, S(x) = -x g^{N-1}.
pub fn taft_hopf(
    n: u32,
    q: &Scalar,
) -> Result<(Arc<Presentation<Scalar>>, Arc<HopfStructure<Scalar>>), Error> {
    let p = cyclic_nilpotent_presentation(&format!("T{}", n), n, q, &Scalar::zero(), "g", "x")?;
    let g = Element::generator(&p, "g")?;
    let x = Element::generator(&p, "x")?;
    let ginv = g.pow(n as usize - 1);
    let hopf = HopfStructure::new(
        &p,
        vec![
            Tensor::pair(&g, &g),
            Tensor::pair(&Element::one(&p), &x).add(&Tensor::pair(&x, &g)),
        ],
        vec![Scalar::one(), Scalar::zero()],
        vec![ginv.clone(), x.mul(&ginv).neg()],
    )?;
    Ok((p, hopf))
}

// ----- entries -----

pub fn monopole_entry(qroot: Option<u32>) -> Result<CatalogEntry, Error> {
    let order = qroot.unwrap_or(1);
    let session = Session::new(order, &["q", "X", "Y"]);
    let q = if qroot.is_some() { session.zeta() } else { session.indeterminate("q")? };
    let a = slq2_presentation(&q)?;
    ensure_confluent(&a)?;
    let (hp, hopf) = circle_hopf()?;
    ensure_confluent(&hp)?;
    let tn = |s: &str| parse_tensor(&session, &[a.clone(), a.clone()], s);
    let ga = Element::generator(&a, "a")?;
    let gb = Element::generator(&a, "b")?;
    let gc = Element::generator(&a, "c")?;
    let gd = Element::generator(&a, "d")?;
    let qi = q.inv().unwrap();
    let com = ComoduleAlgebra::new(
        &a,
        &hopf,
        vec![
            // generator order is the precedence order b, c, a, d
            Tensor::pair(&gb, &Element::generator(&hp, "zi")?),
            Tensor::pair(&gc, &Element::generator(&hp, "z")?),
            Tensor::pair(&ga, &Element::generator(&hp, "z")?),
            Tensor::pair(&gd, &Element::generator(&hp, "zi")?),
        ],
    )?;
    ensure_coaction(&com, 2)?;
    let b0 = gc.mul(&gb).scale(&-qi.clone());
    let bp = gc.mul(&gd);
    let bm = ga.mul(&gb).scale(&-qi.clone());
    let tau_z = Tensor::pair(&gd, &ga).sub(&Tensor::pair(&gb, &gc).scale(&qi));
    let tau_zi = Tensor::pair(&ga, &gd).sub(&Tensor::pair(&gc, &gb).scale(&q));
    let ext = Arc::new(HopfGaloisExtension::new(
        com,
        vec![b0.clone(), bp.clone(), bm.clone()],
        vec![tau_z, tau_zi],
    )?);
    let q2 = q.clone() * q.clone();
    let gens = vec![
        ("alpha".to_string(), tn("tensor(a, d)")?),
        ("gamma".to_string(), tn("tensor(c, b)")?.scale(&-qi.clone())),
        ("alphat".to_string(), tn("tensor(a, b)")?.scale(&-qi.clone())),
        ("gammat".to_string(), tn("tensor(c, d)")?),
        ("delta".to_string(), tn("tensor(d, a)")?),
        ("beta".to_string(), tn("tensor(b, c)")?.scale(&-qi.clone())),
        ("betat".to_string(), tn("tensor(d, c)")?),
        ("deltat".to_string(), tn("tensor(b, a)")?.scale(&-qi.clone())),
    ];
    let one = Scalar::one;
    let coproduct: BTreeMap<String, Vec<(Scalar, String, String)>> = [
        ("alpha", vec![(one(), "alpha", "alpha"), (one(), "alphat", "gammat")]),
        ("alphat", vec![(one(), "alpha", "alphat"), (one(), "alphat", "gamma")]),
        ("gamma", vec![(one(), "gammat", "alphat"), (one(), "gamma", "gamma")]),
        ("gammat", vec![(one(), "gammat", "alpha"), (one(), "gamma", "gammat")]),
        ("delta", vec![(one(), "delta", "delta"), (q2.clone(), "betat", "deltat")]),
        ("betat", vec![(one(), "delta", "betat"), (q2.clone(), "betat", "beta")]),
        ("beta", vec![(one(), "deltat", "betat"), (q2.clone(), "beta", "beta")]),
        ("deltat", vec![(one(), "deltat", "delta"), (q2.clone(), "beta", "deltat")]),
    ]
    .into_iter()
    .map(|(k, v)| {
        (
            k.to_string(),
            v.into_iter().map(|(c, l, r)| (c, l.to_string(), r.to_string())).collect(),
        )
    })
    .collect();
    let one_a = Element::one(&a);
    let counit: BTreeMap<String, Element> = [
        ("alpha", one_a.sub(&b0.scale(&q2))),
        ("gamma", b0.clone()),
        ("alphat", bm.clone()),
        ("gammat", bp.clone()),
        ("delta", one_a.sub(&b0)),
        ("beta", b0.clone()),
        ("betat", bp.scale(&qi)),
        ("deltat", bm.scale(&qi)),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect();
    let antipode = AntipodeData {
        kind: AntipodeKind::Flip,
        gen_images: [
            ("alpha", "delta"),
            ("gamma", "beta"),
            ("alphat", "deltat"),
            ("gammat", "betat"),
            ("delta", "alpha"),
            ("beta", "gamma"),
            ("betat", "gammat"),
            ("deltat", "alphat"),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_string(), vec![(one(), vec![v.to_string()])] as CPoly<Scalar>))
        .collect(),
    };
    let gen_t = |name: &str, gens: &[(String, Tensor)]| -> Tensor {
        gens.iter().find(|(n, _)| n == name).map(|(_, t)| t.clone()).unwrap()
    };
    let delta_c: BTreeMap<String, Vec<(Scalar, Tensor, Element)>> = [
        (
            "a",
            vec![
                (one(), gen_t("alpha", &gens), ga.clone()),
                (one(), gen_t("alphat", &gens), gc.clone()),
            ],
        ),
        (
            "c",
            vec![
                (one(), gen_t("gammat", &gens), ga.clone()),
                (one(), gen_t("gamma", &gens), gc.clone()),
            ],
        ),
        (
            "b",
            vec![
                (-q.clone(), gen_t("deltat", &gens), gd.clone()),
                (q2.clone(), gen_t("beta", &gens), gb.clone()),
            ],
        ),
        (
            "d",
            vec![
                (one(), gen_t("delta", &gens), gd.clone()),
                (-q.clone(), gen_t("betat", &gens), gb.clone()),
            ],
        ),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect();
    let bialgebroid =
        Arc::new(Bialgebroid::new(ext.clone(), gens, coproduct, counit, Some(antipode), delta_c)?);
    Ok(CatalogEntry {
        name: "podles-monopole".into(),
        session,
        ext,
        bialgebroid,
        named_b: vec![("B0".into(), b0), ("Bp".into(), bp), ("Bm".into(), bm)],
        flavor: Flavor::Monopole,
        default_degree: 6,
    })
}

pub fn sl2_nff_entry() -> Result<CatalogEntry, Error> {
    let session = Session::new(1, &["h", "k"]);
    let one = Scalar::one;
    let a = slq2_presentation(&one())?;
    ensure_confluent(&a)?;
    let hp = Presentation::new("C[x]", vec!["x".into()], vec![], Some(vec![1]))?;
    let x = Element::generator(&hp, "x")?;
    let hopf = HopfStructure::new(
        &hp,
        vec![Tensor::pair(&Element::one(&hp), &x).add(&Tensor::pair(&x, &Element::one(&hp)))],
        vec![Scalar::zero()],
        vec![x.neg()],
    )?;
    let ga = Element::generator(&a, "a")?;
    let gb = Element::generator(&a, "b")?;
    let gc = Element::generator(&a, "c")?;
    let gd = Element::generator(&a, "d")?;
    let one_h = Element::one(&hp);
    let com = ComoduleAlgebra::new(
        &a,
        &hopf,
        vec![
            Tensor::pair(&gb, &one_h).add(&Tensor::pair(&gd, &x)),
            Tensor::pair(&gc, &one_h),
            Tensor::pair(&ga, &one_h).add(&Tensor::pair(&gc, &x)),
            Tensor::pair(&gd, &one_h),
        ],
    )?;
    ensure_coaction(&com, 2)?;
    let tau_x = Tensor::pair(&ga, &gb).sub(&Tensor::pair(&gb, &ga));
    let ext =
        Arc::new(HopfGaloisExtension::new(com, vec![gc.clone(), gd.clone()], vec![tau_x])?);
    let tn = |s: &str| parse_tensor(&session, &[a.clone(), a.clone()], s);
    let gens = vec![
        ("alpha".to_string(), tn("tensor(a, d) - tensor(c, b)")?),
        ("beta".to_string(), tn("tensor(b, d) - tensor(d, b)")?),
        ("gamma".to_string(), tn("tensor(c, a) - tensor(a, c)")?),
        ("delta".to_string(), tn("tensor(d, a) - tensor(b, c)")?),
    ];
    let coproduct: BTreeMap<String, Vec<(Scalar, String, String)>> = [
        ("alpha", vec![(one(), "alpha", "alpha"), (one(), "gamma", "beta")]),
        ("delta", vec![(one(), "delta", "delta"), (one(), "beta", "gamma")]),
        ("beta", vec![(one(), "beta", "alpha"), (one(), "delta", "beta")]),
        ("gamma", vec![(one(), "gamma", "delta"), (one(), "alpha", "gamma")]),
    ]
    .into_iter()
    .map(|(k, v)| {
        (
            k.to_string(),
            v.into_iter().map(|(c, l, r)| (c, l.to_string(), r.to_string())).collect(),
        )
    })
    .collect();
    let counit: BTreeMap<String, Element> = [
        ("alpha", Element::one(&a)),
        ("delta", Element::one(&a)),
        ("beta", Element::zero(&a)),
        ("gamma", Element::zero(&a)),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect();
    let antipode = AntipodeData {
        kind: AntipodeKind::Flip,
        gen_images: [
            ("alpha", (one(), "delta")),
            ("delta", (one(), "alpha")),
            ("beta", (-one(), "beta")),
            ("gamma", (-one(), "gamma")),
        ]
        .into_iter()
        .map(|(k, (c, v))| (k.to_string(), vec![(c, vec![v.to_string()])] as CPoly<Scalar>))
        .collect(),
    };
    let gen_t = |name: &str, gens: &[(String, Tensor)]| -> Tensor {
        gens.iter().find(|(n, _)| n == name).map(|(_, t)| t.clone()).unwrap()
    };
    let src = |e: &Element| TensorElement::from_elements(&[e.clone(), Element::one(&a)]);
    let delta_c: BTreeMap<String, Vec<(Scalar, Tensor, Element)>> = [
        (
            "a",
            vec![
                (one(), gen_t("alpha", &gens), ga.clone()),
                (one(), gen_t("gamma", &gens), gb.clone()),
            ],
        ),
        (
            "b",
            vec![
                (one(), gen_t("beta", &gens), ga.clone()),
                (one(), gen_t("delta", &gens), gb.clone()),
            ],
        ),
        ("c", vec![(one(), src(&gc), Element::one(&a))]),
        ("d", vec![(one(), src(&gd), Element::one(&a))]),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect();
    let bialgebroid =
        Arc::new(Bialgebroid::new(ext.clone(), gens, coproduct, counit, Some(antipode), delta_c)?);
    Ok(CatalogEntry {
        name: "sl2-nff".into(),
        session,
        ext,
        bialgebroid,
        named_b: vec![("c".into(), gc), ("d".into(), gd)],
        flavor: Flavor::Sl2Nff,
        default_degree: 6,
    })
}

fn taft_session(n: u32) -> Session {
    Session::new(
        n,
        &[
            "s", "r", "sg", "sx", "sxg", "tg", "tx", "txg", "a1", "a2", "b", "c", "p1", "p2",
            "p3", "p4", "p5", "p6", "p7", "p8",
        ],
    )
}

pub fn taft_entry(n: u32, s_value: Option<&str>) -> Result<CatalogEntry, Error> {
    let session = taft_session(n);
    let s = match s_value {
        None => session.indeterminate("s")?,
        Some(v) => session.parse_scalar(v)?,
    };
    build_taft_like(session, n, s, Flavor::Taft { n }, "taft")
}

pub fn self_galois_entry(n: u32) -> Result<CatalogEntry, Error> {
    let session = taft_session(n);
    build_taft_like(session, n, Scalar::zero(), Flavor::SelfGalois { n }, "self-galois")
}

fn build_taft_like(
    session: Session,
    n: u32,
    s: Scalar,
    flavor: Flavor,
    name: &str,
) -> Result<CatalogEntry, Error> {
    let q = session.zeta();
    let (hp, hopf) = taft_hopf(n, &q)?;
    ensure_confluent(&hp)?;
    let a = cyclic_nilpotent_presentation(&format!("A_s[{}]", n), n, &q, &s, "G", "X")?;
    ensure_confluent(&a)?;
    let gg = Element::generator(&a, "G")?;
    let xx = Element::generator(&a, "X")?;
    let g = Element::generator(&hp, "g")?;
    let x = Element::generator(&hp, "x")?;
    let com = ComoduleAlgebra::new(
        &a,
        &hopf,
        vec![
            Tensor::pair(&gg, &g),
            Tensor::pair(&Element::one(&a), &x).add(&Tensor::pair(&xx, &g)),
        ],
    )?;
    ensure_coaction(&com, (2 * n) as usize)?;
    let ginv = gg.pow(n as usize - 1);
    let tau_g = Tensor::pair(&ginv, &gg);
    let tau_x = Tensor::pair(&Element::one(&a), &xx).sub(&Tensor::pair(&xx.mul(&ginv), &gg));
    let ext = Arc::new(HopfGaloisExtension::new(com, vec![], vec![tau_g, tau_x])?);
    let one = Scalar::one;
    let xi = Tensor::pair(&xx, &ginv).sub(&Tensor::pair(&Element::one(&a), &xx.mul(&ginv)));
    let gamma = Tensor::pair(&gg, &ginv);
    let gens = vec![("Xi".to_string(), xi.clone()), ("Gamma".to_string(), gamma.clone())];
    let coproduct: BTreeMap<String, Vec<(Scalar, String, String)>> = [
        ("Gamma", vec![(one(), "Gamma".to_string(), "Gamma".to_string())]),
        (
            "Xi",
            vec![
                (one(), "1".to_string(), "Xi".to_string()),
                (one(), "Xi".to_string(), "Gamma".to_string()),
            ],
        ),
        ("1", vec![(one(), "1".to_string(), "1".to_string())]),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect();
    let counit: BTreeMap<String, Element> = [
        ("Gamma", Element::one(&a)),
        ("Xi", Element::zero(&a)),
        ("1", Element::one(&a)),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect();
    // S(Gamma) = Gamma^{N-1}, S(Xi) = -Xi . Gamma^{N-1}.
    let gamma_pow = vec!["Gamma".to_string(); n as usize - 1];
    let mut xi_image = vec!["Xi".to_string()];
    xi_image.extend(gamma_pow.clone());
    let antipode = AntipodeData {
        kind: AntipodeKind::GaloisFormula,
        gen_images: [
            ("Gamma".to_string(), vec![(one(), gamma_pow)] as CPoly<Scalar>),
            ("Xi".to_string(), vec![(-one(), xi_image)]),
        ]
        .into_iter()
        .collect(),
    };
    let unit_c = TensorElement::unit(vec![a.clone(), a.clone()]);
    let delta_c: BTreeMap<String, Vec<(Scalar, Tensor, Element)>> = [
        ("G".to_string(), vec![(one(), gamma.clone(), gg.clone())]),
        (
            "X".to_string(),
            vec![(one(), unit_c.clone(), xx.clone()), (one(), xi.clone(), gg.clone())],
        ),
    ]
    .into_iter()
    .collect();
    let bialgebroid =
        Arc::new(Bialgebroid::new(ext.clone(), gens, coproduct, counit, Some(antipode), delta_c)?);
    Ok(CatalogEntry {
        name: name.into(),
        session,
        ext,
        bialgebroid,
        named_b: vec![],
        flavor,
        default_degree: 4 * n as usize,
    })
}

// ----- cocycled group algebras -----

/// A finite abelian group as a product of cyclic factors, with a full
/// 2-cocycle table.
#[derive(Clone, Debug)]
pub struct CocycledGroupData {
    pub factors: Vec<u32>,
    pub table: BTreeMap<(Vec<u32>, Vec<u32>), Scalar>,
}

impl CocycledGroupData {
    pub fn elements(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new()];
        for &n in &self.factors {
            let mut next = Vec::new();
            for e in &out {
                for i in 0..n {
                    let mut v = e.clone();
                    v.push(i);
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }

    pub fn identity(&self) -> Vec<u32> {
        vec![0; self.factors.len()]
    }

    pub fn mul(&self, g: &[u32], h: &[u32]) -> Vec<u32> {
        g.iter()
            .zip(h)
            .zip(&self.factors)
            .map(|((a, b), n)| (a + b) % n)
            .collect()
    }

    pub fn inv(&self, g: &[u32]) -> Vec<u32> {
        g.iter().zip(&self.factors).map(|(a, n)| (n - a) % n).collect()
    }

    pub fn lambda(&self, g: &[u32], h: &[u32]) -> Result<Scalar, Error> {
        self.table
            .get(&(g.to_vec(), h.to_vec()))
            .cloned()
            .ok_or_else(|| Error::Parse(format!("cocycle table missing ({:?},{:?})", g, h)))
    }

    /// mu(g) = lambda(g, g^{-1}).
    pub fn mu(&self, g: &[u32]) -> Result<Scalar, Error> {
        self.lambda(g, &self.inv(g))
    }

    /// Normalization and the 2-cocycle condition on every triple; the
    /// violated triple is reported on failure.
    pub fn check_cocycle(&self) -> Result<(), Error> {
        let e = self.identity();
        for g in self.elements() {
            if self.lambda(&e, &g)? != Scalar::one() || self.lambda(&g, &e)? != Scalar::one() {
                return Err(Error::Load {
                    entry: "group".into(),
                    detail: format!("cocycle not normalized at {:?}", g),
                });
            }
        }
        for g in self.elements() {
            for h in self.elements() {
                for k in self.elements() {
                    let gh = self.mul(&g, &h);
                    let hk = self.mul(&h, &k);
                    let lhs = self.lambda(&g, &h)? * self.lambda(&gh, &k)?;
                    let rhs = self.lambda(&h, &k)? * self.lambda(&g, &hk)?;
                    if lhs != rhs {
                        return Err(Error::Load {
                            entry: "group".into(),
                            detail: format!(
                                "cocycle condition fails on triple ({:?}, {:?}, {:?})",
                                g, h, k
                            ),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Z_2 x Z_2 with lambda((a1,a2),(b1,b2)) = (-1)^{a2 b1}.
pub fn zz2_sign_cocycle() -> CocycledGroupData {
    let factors = vec![2u32, 2];
    let mut table = BTreeMap::new();
    for a1 in 0..2u32 {
        for a2 in 0..2u32 {
            for b1 in 0..2u32 {
                for b2 in 0..2u32 {
                    let sign = if a2 * b1 % 2 == 1 { -1 } else { 1 };
                    table.insert((vec![a1, a2], vec![b1, b2]), Scalar::from_int(sign));
                }
            }
        }
    }
    CocycledGroupData { factors, table }
}

pub fn trivial_cocycle(factors: &[u32]) -> CocycledGroupData {
    let skel = CocycledGroupData { factors: factors.to_vec(), table: BTreeMap::new() };
    let mut table = BTreeMap::new();
    for g in skel.elements() {
        for h in skel.elements() {
            table.insert((g.clone(), h.clone()), Scalar::one());
        }
    }
    CocycledGroupData { factors: factors.to_vec(), table }
}

pub fn group_elem_name(g: &[u32]) -> String {
    let digits: String = g.iter().map(|d| d.to_string()).collect();
    format!("u{}", digits)
}

/// Builds the strongly graded algebra of a cocycle, its group Hopf algebra,
/// the coaction and the translation map. The cocycle condition is checked
/// directly on the table, and again through local confluence of the induced
/// rewriting system (the two coincide by construction).
pub fn group_entry(data: CocycledGroupData) -> Result<CatalogEntry, Error> {
    data.check_cocycle()?;
    // The rescaling isomorphism needs square roots of the mu values; order 4
    // covers mu = +-1.
    let session = Session::new(4, &[]);
    let elements = data.elements();
    let e = data.identity();
    let nontrivial: Vec<Vec<u32>> = elements.iter().filter(|g| **g != e).cloned().collect();
    let gen_names: Vec<String> = nontrivial.iter().map(|g| group_elem_name(g)).collect();
    let gen_index: BTreeMap<&Vec<u32>, u8> =
        nontrivial.iter().enumerate().map(|(i, g)| (g, i as u8)).collect();
    let mut rules = Vec::new();
    for g in &nontrivial {
        for h in &nontrivial {
            let gh = data.mul(g, h);
            let coeff = data.lambda(g, h)?;
            let rhs = if gh == e {
                vec![(coeff, Word::unit())]
            } else {
                vec![(coeff, Word::gen(gen_index[&gh]))]
            };
            rules.push(Rule { lhs: Word(vec![gen_index[g], gen_index[h]]), rhs });
        }
    }
    let a = Presentation::new("A_lambda", gen_names.clone(), rules, None)?;
    ensure_confluent(&a)?;
    let k = data.factors.len();
    let h_names: Vec<String> = (0..k).map(|i| format!("h{}", i + 1)).collect();
    let mut h_rules = Vec::new();
    for (i, &ni) in data.factors.iter().enumerate() {
        h_rules.push(Rule {
            lhs: Word(vec![i as u8; ni as usize]),
            rhs: vec![(Scalar::one(), Word::unit())],
        });
    }
    for i in 0..k {
        for j in 0..i {
            h_rules.push(Rule {
                lhs: Word(vec![i as u8, j as u8]),
                rhs: vec![(Scalar::one(), Word(vec![j as u8, i as u8]))],
            });
        }
    }
    let hp = Presentation::new("C[G]", h_names, h_rules, None)?;
    ensure_confluent(&hp)?;
    let word_of_group = |g: &[u32]| -> Word {
        let mut letters = Vec::new();
        for (i, &ei) in g.iter().enumerate() {
            for _ in 0..ei {
                letters.push(i as u8);
            }
        }
        Word(letters)
    };
    let group_likes: Vec<Element> =
        (0..k).map(|i| Element::from_word(&hp, Word::gen(i as u8))).collect();
    let hopf = HopfStructure::new(
        &hp,
        group_likes.iter().map(|h| Tensor::pair(h, h)).collect(),
        vec![Scalar::one(); k],
        (0..k)
            .map(|i| {
                let ni = data.factors[i] as usize;
                group_likes[i].pow(ni - 1)
            })
            .collect(),
    )?;
    let com = ComoduleAlgebra::new(
        &a,
        &hopf,
        nontrivial
            .iter()
            .map(|g| {
                Tensor::pair(
                    &Element::from_word(&a, Word::gen(gen_index[g])),
                    &Element::from_word(&hp, word_of_group(g)),
                )
            })
            .collect(),
    )?;
    ensure_coaction(&com, 2)?;
    let u_of = |g: &[u32]| -> Element {
        if g == e.as_slice() {
            Element::one(&a)
        } else {
            Element::from_word(&a, Word::gen(gen_index[&g.to_vec()]))
        }
    };
    // tau(h_i) = lambda(g_i^{-1}, g_i)^{-1} u_{g_i^{-1}} (x) u_{g_i}.
    let mut taus = Vec::new();
    for i in 0..k {
        let mut gi = e.clone();
        gi[i] = 1;
        let gii = data.inv(&gi);
        let coeff = data.lambda(&gii, &gi)?.inv().ok_or(Error::DivisionByZero)?;
        taus.push(Tensor::pair(&u_of(&gii), &u_of(&gi)).scale(&coeff));
    }
    let ext = Arc::new(HopfGaloisExtension::new(com, vec![], taus)?);
    let mut gens = Vec::new();
    let mut coproduct = BTreeMap::new();
    let mut counit = BTreeMap::new();
    let mut delta_c: BTreeMap<String, Vec<(Scalar, Tensor, Element)>> = BTreeMap::new();
    coproduct
        .insert("1".to_string(), vec![(Scalar::one(), "1".to_string(), "1".to_string())]);
    counit.insert("1".to_string(), Element::one(&a));
    for g in &nontrivial {
        let name = format!("Th{}", group_elem_name(g).trim_start_matches('u'));
        let gi = data.inv(g);
        let theta = Tensor::pair(&u_of(g), &u_of(&gi));
        gens.push((name.clone(), theta.clone()));
        let lam = data.lambda(&gi, g)?.inv().ok_or(Error::DivisionByZero)?;
        coproduct.insert(name.clone(), vec![(lam.clone(), name.clone(), name.clone())]);
        counit.insert(name.clone(), Element::scalar(&a, data.lambda(g, &gi)?));
        delta_c.insert(group_elem_name(g), vec![(lam, theta, u_of(g))]);
    }
    let antipode =
        AntipodeData { kind: AntipodeKind::GaloisFormula, gen_images: BTreeMap::new() };
    let bialgebroid =
        Arc::new(Bialgebroid::new(ext.clone(), gens, coproduct, counit, Some(antipode), delta_c)?);
    Ok(CatalogEntry {
        name: "group".into(),
        session,
        ext,
        bialgebroid,
        named_b: vec![],
        flavor: Flavor::Group { data },
        default_degree: 4,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_entries_load() {
        let p = BTreeMap::new();
        for (name, _) in list() {
            let entry = get_example(name, &p);
            assert!(entry.is_ok(), "{} failed to load: {:?}", name, entry.err());
        }
        let mut p3 = BTreeMap::new();
        p3.insert("N".to_string(), "3".to_string());
        assert!(get_example("taft", &p3).is_ok());
    }

    #[test]
    fn corrupted_cocycle_is_rejected_with_witness_triple() {
        let mut data = zz2_sign_cocycle();
        data.table.insert((vec![1, 0], vec![0, 1]), Scalar::from_int(-1));
        match group_entry(data) {
            Err(Error::Load { detail, .. }) => assert!(detail.contains("triple")),
            Err(other) => panic!("unexpected error {:?}", other),
            Ok(_) => panic!("corrupted cocycle loaded"),
        }
    }

    #[test]
    fn unknown_entry_is_an_error() {
        assert!(get_example("nosuch", &BTreeMap::new()).is_err());
    }
}
