//! Shared presentation builders for unit tests.

use std::sync::Arc;

use num_traits::One;

use crate::field::Field;
use crate::kernel::{Presentation, Rule, Word};
use crate::ratfn::RatFn;

/// O(SL_q(2)) with generators in precedence order b, c, a, d and the
/// q-straightening plus determinant rules. Grading is the coaction weight
/// (b, d positive; c, a negative).
pub fn slq2_presentation(q: RatFn) -> Arc<Presentation<RatFn>> {
    let qi = q.inv().unwrap();
    let (b, c, a, d) = (0u8, 1u8, 2u8, 3u8);
    let w = |v: &[u8]| Word(v.to_vec());
    let rules = vec![
        // c b -> b c
        Rule { lhs: w(&[c, b]), rhs: vec![(RatFn::one(), w(&[b, c]))] },
        // a b -> q b a   (a b = q b a)
        Rule { lhs: w(&[a, b]), rhs: vec![(q.clone(), w(&[b, a]))] },
        // a c -> q c a
        Rule { lhs: w(&[a, c]), rhs: vec![(q.clone(), w(&[c, a]))] },
        // d b -> q^-1 b d   (b d = q d b)
        Rule { lhs: w(&[d, b]), rhs: vec![(qi.clone(), w(&[b, d]))] },
        // d c -> q^-1 c d
        Rule { lhs: w(&[d, c]), rhs: vec![(qi.clone(), w(&[c, d]))] },
        // d a -> 1 + q^-1 b c
        Rule {
            lhs: w(&[d, a]),
            rhs: vec![(RatFn::one(), Word::unit()), (qi.clone(), w(&[b, c]))],
        },
        // a d -> 1 + q b c
        Rule {
            lhs: w(&[a, d]),
            rhs: vec![(RatFn::one(), Word::unit()), (q.clone(), w(&[b, c]))],
        },
    ];
    Presentation::new(
        "O(SL_q2)",
        vec!["b".into(), "c".into(), "a".into(), "d".into()],
        rules,
        Some(vec![1, -1, -1, 1]),
    )
    .unwrap()
}

/// The Taft algebra T_N: x g = q g x, x^N = 0, g^N = 1, q = zeta_N.
pub fn taft_presentation(n: u32, q: RatFn) -> Arc<Presentation<RatFn>> {
    generalized_taft(&format!("T_{}", n), n, q, RatFn::from_int(0), "g", "x")
}

/// The Galois object A_s of T_N: X G = q G X, X^N = s, G^N = 1.
pub fn taft_galois_presentation(n: u32, q: RatFn, s: RatFn) -> Arc<Presentation<RatFn>> {
    generalized_taft(&format!("A_s[{}]", n), n, q, s, "G", "X")
}

fn generalized_taft(
    name: &str,
    n: u32,
    q: RatFn,
    xn: RatFn,
    g: &str,
    x: &str,
) -> Arc<Presentation<RatFn>> {
    let gw = |k: usize| Word(vec![0u8; k]);
    let xw = |k: usize| Word(vec![1u8; k]);
    let mut xn_rhs = Vec::new();
    if !<RatFn as num_traits::Zero>::is_zero(&xn) {
        xn_rhs.push((xn, Word::unit()));
    }
    let rules = vec![
        Rule { lhs: Word(vec![1, 0]), rhs: vec![(q, Word(vec![0, 1]))] },
        Rule { lhs: xw(n as usize), rhs: xn_rhs },
        Rule { lhs: gw(n as usize), rhs: vec![(RatFn::one(), Word::unit())] },
    ];
    Presentation::new(name, vec![g.into(), x.into()], rules, None).unwrap()
}

/// Helper used by tests needing a generic field presentation.
pub fn free_commutative_rank1<F: Field>() -> Arc<Presentation<F>> {
    Presentation::new("k[x]", vec!["x".into()], vec![], None).unwrap()
}
