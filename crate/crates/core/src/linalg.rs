//! Exact linear algebra over a generic field: incremental row-echelon
//! bases for sparse vectors with ordered keys, plus small dense solvers.

use std::collections::BTreeMap;


use crate::field::Field;

/// An incremental row-echelon basis of sparse vectors keyed by `K`.
///
/// Rows are kept with distinct pivots (the maximal key of each row) and
/// incoming vectors are reduced against all rows whose pivot occurs in
/// them. The reduction of a vector is canonical for a fixed spanned
/// subspace: it is supported away from the pivot-key set.
pub struct LinearBasis<K: Ord + Clone, F: Field> {
    rows: Vec<BTreeMap<K, F>>,
    pivots: BTreeMap<K, usize>,
}

impl<K: Ord + Clone, F: Field> Default for LinearBasis<K, F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone, F: Field> LinearBasis<K, F> {
    pub fn new() -> Self {
        LinearBasis { rows: Vec::new(), pivots: BTreeMap::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduces `v` modulo the span; the result has no pivot keys.
    pub fn reduce(&self, mut v: BTreeMap<K, F>) -> BTreeMap<K, F> {
        loop {
            let hit = v
                .iter()
                .rev()
                .find_map(|(k, _)| self.pivots.get(k).map(|&r| (k.clone(), r)));
            let Some((k, r)) = hit else { break };
            let c = v.get(&k).unwrap().clone();
            let row = &self.rows[r];
            let lead = row.get(&k).unwrap().clone();
            let factor = c.checked_div(&lead).unwrap();
            for (rk, rc) in row {
                let delta = factor.clone() * rc.clone();
                match v.entry(rk.clone()) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        let nv = -delta;
                        if !nv.is_zero() {
                            e.insert(nv);
                        }
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let nv = e.get().clone() - delta;
                        if nv.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = nv;
                        }
                    }
                }
            }
        }
        v
    }

    /// Reduces and, if nonzero, adds the remainder as a new row.
    /// Returns true when the vector enlarged the span.
    pub fn insert(&mut self, v: BTreeMap<K, F>) -> bool {
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let pivot = r.keys().next_back().unwrap().clone();
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn contains(&self, v: BTreeMap<K, F>) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Rank of a dense matrix (rows of equal length).
pub fn rank<F: Field>(mut m: Vec<Vec<F>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = f.clone() * m[r][j].clone();
                    m[i][j] = m[i][j].clone() - t;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Basis of the solution space of M x = 0.
pub fn nullspace<F: Field>(m: &[Vec<F>]) -> Vec<Vec<F>> {
    if m.is_empty() {
        return Vec::new();
    }
    let cols = m[0].len();
    let (rref, pivots) = rref_of(m.to_vec());
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut out = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![F::zero(); cols];
        v[free] = F::one();
        for &(r, c) in &pivots {
            v[c] = -rref[r][free].clone();
        }
        out.push(v);
    }
    out
}

/// Reduced row-echelon form plus the (row, col) pivot list.
fn rref_of<F: Field>(mut m: Vec<Vec<F>>) -> (Vec<Vec<F>>, Vec<(usize, usize)>) {
    let rows = m.len();
    let cols = if rows > 0 { m[0].len() } else { 0 };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = f.clone() * m[r][j].clone();
                    m[i][j] = m[i][j].clone() - t;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    (m, pivots)
}

/// One solution of M x = b, if consistent.
pub fn solve<F: Field>(m: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    affine_solve(m, b).map(|(p, _)| p)
}

/// The full affine solution set of M x = b: a particular solution plus a
/// basis of the homogeneous kernel.
pub fn affine_solve<F: Field>(m: &[Vec<F>], b: &[F]) -> Option<(Vec<F>, Vec<Vec<F>>)> {
    assert_eq!(m.len(), b.len());
    if m.is_empty() {
        return Some((Vec::new(), Vec::new()));
    }
    let cols = m[0].len();
    let mut aug: Vec<Vec<F>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (rref, pivots) = {
        let (rr, pv) = rref_of(std::mem::take(&mut aug));
        (rr, pv)
    };
    // Inconsistent if some pivot lands in the augmented column.
    if pivots.iter().any(|&(_, c)| c == cols) {
        return None;
    }
    let mut part = vec![F::zero(); cols];
    for &(r, c) in &pivots {
        part[c] = rref[r][cols].clone();
    }
    let stripped: Vec<Vec<F>> = m.to_vec();
    let null = nullspace(&stripped);
    Some((part, null))
}

/// Inverse of a square matrix, if invertible.
pub fn invert<F: Field>(m: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = m.len();
    let mut aug: Vec<Vec<F>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n);
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { F::one() } else { F::zero() });
            }
            r
        })
        .collect();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..n).find(|&i| !aug[i][c].is_zero()) else { return None };
        aug.swap(r, p);
        let inv = aug[r][c].inv().unwrap();
        for x in aug[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..n {
            if i != r && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for j in 0..2 * n {
                    let t = f.clone() * aug[r][j].clone();
                    aug[i][j] = aug[i][j].clone() - t;
                }
            }
        }
        r += 1;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Determinant via fraction-free-ish Gaussian elimination over a field.
pub fn determinant<F: Field>(m: &[Vec<F>]) -> F {
    let n = m.len();
    let mut a: Vec<Vec<F>> = m.to_vec();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return F::zero() };
        if p != c {
            a.swap(c, p);
            det = -det;
        }
        det = det * a[c][c].clone();
        let inv = a[c][c].inv().unwrap();
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = a[i][c].clone() * inv.clone();
                for j in c..n {
                    let t = f.clone() * a[c][j].clone();
                    a[i][j] = a[i][j].clone() - t;
                }
            }
        }
    }
    det
}

/// Expresses `target` in the span of `basis` (dense column vectors), if possible.
pub fn express_in_basis<F: Field>(basis: &[Vec<F>], target: &[F]) -> Option<Vec<F>> {
    if basis.is_empty() {
        return if target.iter().all(|c| c.is_zero()) { Some(Vec::new()) } else { None };
    }
    let dim = target.len();
    let m: Vec<Vec<F>> = (0..dim)
        .map(|i| basis.iter().map(|v| v[i].clone()).collect())
        .collect();
    solve(&m, target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn rank_and_nullspace() {
        let m = vec![
            vec![r(1), r(2), r(3)],
            vec![r(2), r(4), r(6)],
            vec![r(1), r(0), r(1)],
        ];
        assert_eq!(rank(m.clone()), 2);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 1);
        for row in &m {
            let dot = row
                .iter()
                .zip(&ns[0])
                .fold(r(0), |acc, (a, b)| acc + a * b);
            assert_eq!(dot, r(0));
        }
    }

    #[test]
    fn solve_and_invert() {
        let m = vec![vec![r(2), r(1)], vec![r(1), r(1)]];
        let b = vec![r(3), r(2)];
        let x = solve(&m, &b).unwrap();
        assert_eq!(x, vec![r(1), r(1)]);
        let inv = invert(&m).unwrap();
        assert_eq!(inv[0], vec![r(1), r(-1)]);
        assert_eq!(determinant(&m), r(1));
        assert!(invert(&[vec![r(1), r(2)], vec![r(2), r(4)]]).is_none());
    }

    #[test]
    fn linear_basis_reduction_is_canonical() {
        let mut lb: LinearBasis<u32, BigRational> = LinearBasis::new();
        // v1 = e9 + e1, v2 = e9 + e2  => e1 - e2 in span
        lb.insert([(9u32, r(1)), (1u32, r(1))].into_iter().collect());
        lb.insert([(9u32, r(1)), (2u32, r(1))].into_iter().collect());
        let diff: BTreeMap<u32, BigRational> =
            [(1u32, r(1)), (2u32, r(-1))].into_iter().collect();
        assert!(lb.contains(diff));
        let not_in: BTreeMap<u32, BigRational> = [(1u32, r(1))].into_iter().collect();
        assert!(!lb.contains(not_in));
    }
}
