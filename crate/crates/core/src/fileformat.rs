//! The presentation-bundle file format (JSON): algebra and Hopf
//! presentations with rewrite rules, structure maps, the extension block
//! (coaction, translation, coinvariant generators) and the bialgebroid
//! block (named carrier generators, optional antipode images).
//!
//! Import rebuilds a verified bundle: the same load-time checks run as for
//! built-in catalog entries.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::expr::{parse_element, parse_scalar, parse_tensor, parse_word};
use crate::hgext::{ComoduleAlgebra, HopfGaloisExtension};
use crate::hopf::HopfStructure;
use crate::kernel::{Presentation, Rule, Word};
use crate::session::Session;
use crate::{Element, Scalar, Tensor};

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct TermBlock {
    pub coeff: String,
    pub word: String,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct RuleBlock {
    pub lhs: String,
    pub rhs: Vec<TermBlock>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct PresentationBlock {
    pub name: String,
    pub generators: Vec<String>,
    pub rules: Vec<RuleBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grading: Option<BTreeMap<String, i64>>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct HopfBlock {
    pub presentation: PresentationBlock,
    pub coproduct: BTreeMap<String, String>,
    pub counit: BTreeMap<String, String>,
    pub antipode: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct ExtensionBlock {
    pub coaction: BTreeMap<String, String>,
    pub translation: BTreeMap<String, String>,
    pub coinvariant_generators: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct BialgebroidBlock {
    pub c_generators: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub antipode: Option<BTreeMap<String, String>>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct BundleFile {
    pub cyclotomic_order: u32,
    pub indeterminates: Vec<String>,
    pub algebra: PresentationBlock,
    pub hopf: HopfBlock,
    pub extension: ExtensionBlock,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bialgebroid: Option<BialgebroidBlock>,
}

/// A re-parseable expression string for a tensor.
pub fn tensor_expr_string(t: &Tensor) -> String {
    if t.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (tuple, c) in t.terms() {
        let words: Vec<String> = tuple
            .iter()
            .zip(t.slots())
            .map(|(w, p)| p.show_word(w))
            .collect();
        parts.push(format!("({})*tensor({})", c, words.join(", ")));
    }
    parts.join(" + ")
}

/// A re-parseable expression string for an algebra element.
pub fn element_expr_string(e: &Element) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (w, c) in e.terms() {
        parts.push(format!("({})*{}", c, e.presentation().show_word(w)));
    }
    parts.join(" + ")
}

fn presentation_block(p: &Arc<Presentation<Scalar>>) -> PresentationBlock {
    PresentationBlock {
        name: p.name().to_string(),
        generators: p.generators().to_vec(),
        rules: p
            .rules()
            .iter()
            .map(|r| RuleBlock {
                lhs: p.show_word(&r.lhs),
                rhs: r
                    .rhs
                    .iter()
                    .map(|(c, w)| TermBlock { coeff: format!("{}", c), word: p.show_word(w) })
                    .collect(),
            })
            .collect(),
        grading: p.grading().map(|g| {
            p.generators()
                .iter()
                .cloned()
                .zip(g.iter().copied())
                .collect()
        }),
    }
}

fn build_presentation(b: &PresentationBlock, session: &Session) -> Result<Arc<Presentation<Scalar>>, Error> {
    // A rule-free scaffold gives generator indices for word parsing.
    let scaffold = Presentation::new(&b.name, b.generators.clone(), vec![], None)?;
    let mut rules = Vec::new();
    for r in &b.rules {
        let lhs = parse_word(&scaffold, &r.lhs)?;
        let mut rhs = Vec::new();
        for t in &r.rhs {
            rhs.push((parse_scalar(session, &t.coeff)?, parse_word(&scaffold, &t.word)?));
        }
        rules.push(Rule { lhs, rhs });
    }
    let grading = match &b.grading {
        None => None,
        Some(m) => {
            let mut g = Vec::new();
            for name in &b.generators {
                g.push(*m.get(name).ok_or_else(|| {
                    Error::Parse(format!("grading missing generator `{}`", name))
                })?);
            }
            Some(g)
        }
    };
    Presentation::new(&b.name, b.generators.clone(), rules, grading)
}

/// Serializes the data of a loaded extension (and named carrier
/// generators, when given) to the bundle format.
pub fn export_bundle(
    session: &Session,
    ext: &HopfGaloisExtension<Scalar>,
    c_generators: &[(String, Tensor)],
    c_antipode: Option<&BTreeMap<String, String>>,
) -> BundleFile {
    let a = ext.algebra();
    let hp = ext.hopf().presentation();
    let hopf = ext.hopf();
    let hopf_block = HopfBlock {
        presentation: presentation_block(hp),
        coproduct: hp
            .generators()
            .iter()
            .enumerate()
            .map(|(i, g)| {
                (g.clone(), tensor_expr_string(&hopf.delta_word(&Word::gen(i as u8))))
            })
            .collect(),
        counit: hp
            .generators()
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), format!("{}", hopf.counit_word(&Word::gen(i as u8)))))
            .collect(),
        antipode: hp
            .generators()
            .iter()
            .enumerate()
            .map(|(i, g)| {
                (g.clone(), element_expr_string(&hopf.antipode_word(&Word::gen(i as u8))))
            })
            .collect(),
    };
    let extension = ExtensionBlock {
        coaction: a
            .generators()
            .iter()
            .enumerate()
            .map(|(i, g)| {
                (
                    g.clone(),
                    tensor_expr_string(&ext.comodule().coaction_word(&Word::gen(i as u8))),
                )
            })
            .collect(),
        translation: hp
            .generators()
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), tensor_expr_string(&ext.translate_word(&Word::gen(i as u8)))))
            .collect(),
        coinvariant_generators: ext
            .b_generators()
            .iter()
            .map(element_expr_string)
            .collect(),
    };
    let bialgebroid = if c_generators.is_empty() {
        None
    } else {
        Some(BialgebroidBlock {
            c_generators: c_generators
                .iter()
                .map(|(n, t)| (n.clone(), tensor_expr_string(t)))
                .collect(),
            antipode: c_antipode.cloned(),
        })
    };
    BundleFile {
        cyclotomic_order: session.cyclotomic_order(),
        indeterminates: session.indeterminate_names().to_vec(),
        algebra: presentation_block(a),
        hopf: hopf_block,
        extension,
        bialgebroid,
    }
}

pub struct ImportedBundle {
    pub session: Session,
    pub ext: Arc<HopfGaloisExtension<Scalar>>,
    pub c_generators: Vec<(String, Tensor)>,
}

/// Rebuilds a bundle, running the load-time checks (rule orientation,
/// relation preservation by all structure maps, the translation identity
/// and coinvariance of the declared coinvariant generators).
pub fn import_bundle(file: &BundleFile) -> Result<ImportedBundle, Error> {
    let names: Vec<&str> = file.indeterminates.iter().map(|s| s.as_str()).collect();
    let session = Session::new(file.cyclotomic_order, &names);
    let a = build_presentation(&file.algebra, &session)?;
    let hp = build_presentation(&file.hopf.presentation, &session)?;
    let gen_expr = |m: &BTreeMap<String, String>, g: &String| -> Result<String, Error> {
        m.get(g)
            .cloned()
            .ok_or_else(|| Error::Parse(format!("missing structure map for generator `{}`", g)))
    };
    let mut coproduct = Vec::new();
    let mut counit = Vec::new();
    let mut antipode = Vec::new();
    for g in hp.generators() {
        coproduct.push(parse_tensor(
            &session,
            &[hp.clone(), hp.clone()],
            &gen_expr(&file.hopf.coproduct, g)?,
        )?);
        counit.push(parse_scalar(&session, &gen_expr(&file.hopf.counit, g)?)?);
        antipode.push(parse_element(&session, &hp, &gen_expr(&file.hopf.antipode, g)?)?);
    }
    let hopf = HopfStructure::new(&hp, coproduct, counit, antipode)?;
    let mut coaction = Vec::new();
    for g in a.generators() {
        coaction.push(parse_tensor(
            &session,
            &[a.clone(), hp.clone()],
            &gen_expr(&file.extension.coaction, g)?,
        )?);
    }
    let com = ComoduleAlgebra::new(&a, &hopf, coaction)?;
    let failures = com.verify_coaction(2);
    if !failures.is_empty() {
        return Err(Error::Load { entry: a.name().into(), detail: failures.join("; ") });
    }
    let mut translation = Vec::new();
    for g in hp.generators() {
        translation.push(parse_tensor(
            &session,
            &[a.clone(), a.clone()],
            &gen_expr(&file.extension.translation, g)?,
        )?);
    }
    let mut b_gens = Vec::new();
    for s in &file.extension.coinvariant_generators {
        b_gens.push(parse_element(&session, &a, s)?);
    }
    let ext = Arc::new(HopfGaloisExtension::new(com, b_gens, translation)?);
    let mut c_generators = Vec::new();
    if let Some(bb) = &file.bialgebroid {
        for (n, expr) in &bb.c_generators {
            c_generators.push((
                n.clone(),
                parse_tensor(&session, &[a.clone(), a.clone()], expr)?,
            ));
        }
    }
    Ok(ImportedBundle { session, ext, c_generators })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use std::collections::BTreeMap as Map;

    #[test]
    fn monopole_round_trips_through_the_file_format() {
        let entry = catalog::get_example("podles-monopole", &Map::new()).unwrap();
        let bundle = export_bundle(
            &entry.session,
            &entry.ext,
            entry.bialgebroid.generators(),
            None,
        );
        let json = serde_json::to_string_pretty(&bundle).unwrap();
        let parsed: BundleFile = serde_json::from_str(&json).unwrap();
        let imported = import_bundle(&parsed).unwrap();
        // The re-imported extension computes the same translation values.
        for (i, _) in entry.hopf().presentation().generators().iter().enumerate() {
            let w = Word::gen(i as u8);
            assert_eq!(
                tensor_expr_string(&imported.ext.translate_word(&w)),
                tensor_expr_string(&entry.ext.translate_word(&w))
            );
        }
        assert_eq!(imported.c_generators.len(), 8);
    }

    #[test]
    fn taft_bundle_round_trip() {
        let entry = catalog::get_example("taft", &Map::new()).unwrap();
        let bundle = export_bundle(
            &entry.session,
            &entry.ext,
            entry.bialgebroid.generators(),
            None,
        );
        let json = serde_json::to_string(&bundle).unwrap();
        let parsed: BundleFile = serde_json::from_str(&json).unwrap();
        let imported = import_bundle(&parsed).unwrap();
        assert_eq!(imported.session.cyclotomic_order(), 2);
        let a = imported.ext.algebra().clone();
        assert_eq!(a.full_basis(8).unwrap().len(), 4);
    }

    #[test]
    fn corrupted_bundle_fails_load_checks() {
        let entry = catalog::get_example("sweedler", &Map::new()).unwrap();
        let mut bundle = export_bundle(&entry.session, &entry.ext, &[], None);
        // Break the translation map: tau(g) = X (x) G is inconsistent.
        bundle
            .extension
            .translation
            .insert("g".into(), "(1)*tensor(X, G)".into());
        assert!(import_bundle(&bundle).is_err());
    }
}
