//! Ideals of the ambient polynomial ring with cached reduced Groebner bases,
//! ideal quotients, radical membership, and Krull dimension.

use crate::groebner::{groebner_basis, normal_form};
use crate::modgb::{mvec_zero, AugmentedBasis, MVec};
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};
use crate::scalar::Scalar;
use std::sync::{Arc, OnceLock};

#[derive(Clone, Debug)]
pub struct Ideal<F: Scalar> {
    pub ring: Arc<PolyRing<F>>,
    gens: Vec<Polynomial<F>>,
    gb: OnceLock<Vec<Polynomial<F>>>,
}

impl<F: Scalar> Ideal<F> {
    pub fn new(ring: Arc<PolyRing<F>>, gens: Vec<Polynomial<F>>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            ring,
            gens,
            gb: OnceLock::new(),
        }
    }

    pub fn zero(ring: Arc<PolyRing<F>>) -> Self {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: Arc<PolyRing<F>>) -> Self {
        let one = ring.constant(1);
        Ideal::new(ring, vec![one])
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    /// The unique reduced degrevlex Groebner basis, computed once.
    pub fn groebner(&self) -> &[Polynomial<F>] {
        self.gb.get_or_init(|| groebner_basis(&self.gens))
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        normal_form(f, self.groebner())
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn is_zero(&self) -> bool {
        self.groebner().is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner().iter().any(|g| g.is_constant())
    }

    pub fn equals(&self, other: &Ideal<F>) -> bool {
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    pub fn sum(&self, other: &Ideal<F>) -> Ideal<F> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.ring.clone(), gens)
    }

    pub fn product(&self, other: &Ideal<F>) -> Ideal<F> {
        if self.gens.is_empty() || other.gens.is_empty() {
            return Ideal::zero(self.ring.clone());
        }
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.mul(g));
            }
        }
        Ideal::new(self.ring.clone(), gens)
    }

    /// The ideal quotient (self : other) = { r | r * other ⊆ self }.
    ///
    /// Computed in one syzygy pass: r·(h_1,…,h_m) must land in the submodule
    /// of R^m with a copy of `self` in every slot.
    pub fn quotient(&self, other: &Ideal<F>) -> Ideal<F> {
        let hs: Vec<&Polynomial<F>> = other.gens.iter().collect();
        if hs.is_empty() {
            // (I : 0) = (1)
            return Ideal::unit(self.ring.clone());
        }
        let m = hs.len();
        let mut gens: Vec<MVec<F>> = Vec::new();
        let stacked: MVec<F> = hs.iter().map(|h| (*h).clone()).collect();
        gens.push(stacked);
        for slot in 0..m {
            for g in &self.gens {
                let mut v = mvec_zero::<F>(m);
                v[slot] = g.clone();
                gens.push(v);
            }
        }
        let aug = AugmentedBasis::new(&self.ring, &gens, m);
        let quot_gens: Vec<Polynomial<F>> = aug
            .syzygies()
            .into_iter()
            .map(|s| s[0].clone())
            .filter(|p| !p.is_zero())
            .collect();
        let q = Ideal::new(self.ring.clone(), quot_gens);
        Ideal::new(self.ring.clone(), q.groebner().to_vec())
    }

    /// Radical membership via the extra-variable trick: f ∈ √I iff
    /// 1 ∈ I + (1 - t·f) in R[t].
    pub fn radical_contains(&self, f: &Polynomial<F>) -> bool {
        if f.is_zero() {
            return true;
        }
        let ext = self.ring.extended("@t");
        let t = ext.var(self.ring.n_vars());
        let mut gens: Vec<Polynomial<F>> = self.gens.iter().map(|g| g.extend_ring()).collect();
        let one = ext.constant(1);
        gens.push(one.clone().sub(&t.mul(&f.extend_ring())));
        let gb = groebner_basis(&gens);
        normal_form(&one, &gb).is_zero()
    }

    /// Krull dimension of R/self via independent variable sets of the
    /// leading-term ideal; `None` is the unit ideal's sentinel (dimension -∞).
    pub fn krull_dimension(&self) -> Option<usize> {
        if self.is_unit() {
            return None;
        }
        let n = self.ring.n_vars();
        let leads: Vec<&Monomial> = self
            .groebner()
            .iter()
            .map(|g| g.leading_monomial().unwrap())
            .collect();
        let mut best = 0usize;
        for mask in 0u64..(1u64 << n) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let independent = leads
                .iter()
                .all(|m| m.support().any(|i| mask & (1 << i) == 0));
            if independent {
                best = size;
            }
        }
        Some(best)
    }

    /// Minimal homogeneous generating set: repeatedly drop any generator that
    /// lies in the ideal generated by the others.
    pub fn minimal_generators(&self) -> Vec<Polynomial<F>> {
        let mut gens: Vec<Polynomial<F>> = self.gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        gens.sort_by_key(|g| g.degree());
        loop {
            let mut removed = false;
            for i in 0..gens.len() {
                let others: Vec<Polynomial<F>> = gens
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, g)| g.clone())
                    .collect();
                let gb = groebner_basis(&others);
                if normal_form(&gens[i], &gb).is_zero() {
                    gens.remove(i);
                    removed = true;
                    break;
                }
            }
            if !removed {
                break;
            }
        }
        gens
    }

    /// Jacobian matrix of the given polynomials: rows indexed by polynomials,
    /// columns by variables.
    pub fn jacobian_of(ring: &PolyRing<F>, polys: &[Polynomial<F>]) -> Vec<Vec<Polynomial<F>>> {
        polys
            .iter()
            .map(|f| (0..ring.n_vars()).map(|i| f.derivative(i, &ring.ctx)).collect())
            .collect()
    }

    /// Generator strings sorted in the active order, used for fingerprints.
    pub fn sorted_gen_strings(&self) -> Vec<String> {
        let mut gb: Vec<&Polynomial<F>> = self.groebner().iter().collect();
        gb.sort_by(|a, b| {
            b.leading_monomial()
                .unwrap()
                .cmp(a.leading_monomial().unwrap())
        });
        gb.iter().map(|g| g.to_string_in(&self.ring)).collect()
    }
}

impl<F: Scalar> PartialEq for Ideal<F> {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

/// All c×c minors of a rectangular polynomial matrix.
pub fn minors<F: Scalar>(
    mat: &[Vec<Polynomial<F>>],
    c: usize,
) -> Vec<Polynomial<F>> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    if c == 0 {
        return Vec::new(); // caller treats the empty 0x0 minor set as the unit ideal
    }
    if c > rows || c > cols {
        return Vec::new();
    }
    let row_sets = subsets_of_size(rows, c);
    let col_sets = subsets_of_size(cols, c);
    let mut out = Vec::new();
    for rs in &row_sets {
        for cs in &col_sets {
            let det = determinant(mat, rs, cs);
            if !det.is_zero() {
                out.push(det);
            }
        }
    }
    out
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn determinant<F: Scalar>(
    mat: &[Vec<Polynomial<F>>],
    rows: &[usize],
    cols: &[usize],
) -> Polynomial<F> {
    // Laplace expansion; the minors needed here are at most 3x3.
    if rows.len() == 1 {
        return mat[rows[0]][cols[0]].clone();
    }
    let mut acc = Polynomial::zero();
    for (k, &c) in cols.iter().enumerate() {
        let sub_rows = &rows[1..];
        let sub_cols: Vec<usize> = cols
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, c)| *c)
            .collect();
        let minor = determinant(mat, sub_rows, &sub_cols);
        let term = mat[rows[0]][c].mul(&minor);
        acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::scalar::{Fp, Rat};

    fn ringq() -> Arc<PolyRing<Rat>> {
        PolyRing::new(vec!["x".into(), "y".into()], ())
    }

    fn ideal(r: &Arc<PolyRing<Rat>>, gens: &[&str]) -> Ideal<Rat> {
        Ideal::new(
            r.clone(),
            gens.iter().map(|s| parse_poly(r, s).unwrap()).collect(),
        )
    }

    #[test]
    fn quotient_examples() {
        let r = ringq();
        // (x^2) : (x) = (x)
        let q = ideal(&r, &["x^2"]).quotient(&ideal(&r, &["x"]));
        assert!(q.equals(&ideal(&r, &["x"])));
        // lift of (0 : x) over Q[x,y]/(x^2): ((x^2) : (x)) = (x)
        // I : (1) = I
        let i = ideal(&r, &["x^2", "x*y"]);
        assert!(i.quotient(&ideal(&r, &["1"])).equals(&i));
        // quotient contains the ideal
        assert!(q.contains_ideal(&ideal(&r, &["x^2"])));
    }

    #[test]
    fn radical_membership() {
        let r = ringq();
        let i = ideal(&r, &["x^2"]);
        assert!(i.radical_contains(&parse_poly(&r, "x").unwrap()));
        assert!(!i.radical_contains(&parse_poly(&r, "y").unwrap()));
        // x^3 = x(x^2+y^2) - y(xy), so x is in the radical
        let j = ideal(&r, &["x^2 + y^2", "x*y"]);
        assert!(j.radical_contains(&parse_poly(&r, "x").unwrap()));
    }

    #[test]
    fn krull_dimension_examples() {
        let r = ringq();
        assert_eq!(ideal(&r, &["x"]).krull_dimension(), Some(1));
        assert_eq!(ideal(&r, &["1"]).krull_dimension(), None);
        assert_eq!(ideal(&r, &[]).krull_dimension(), Some(2));
        let r3: Arc<PolyRing<Fp>> =
            PolyRing::new(vec!["x".into(), "y".into(), "z".into()], 5);
        let i = Ideal::new(
            r3.clone(),
            vec![
                parse_poly(&r3, "x^2").unwrap(),
                parse_poly(&r3, "y*z").unwrap(),
            ],
        );
        assert_eq!(i.krull_dimension(), Some(1));
    }

    #[test]
    fn minimal_generators_drop_redundant() {
        let r = ringq();
        let i = ideal(&r, &["x", "x^2", "x*y + x"]);
        let min = i.minimal_generators();
        assert_eq!(min.len(), 1);
        assert_eq!(min[0].monic(), parse_poly(&r, "x").unwrap());
    }

    #[test]
    fn minors_of_jacobian() {
        let r3: Arc<PolyRing<Fp>> =
            PolyRing::new(vec!["x".into(), "y".into(), "z".into()], 5);
        let gens = vec![
            parse_poly(&r3, "x^2").unwrap(),
            parse_poly(&r3, "y*z").unwrap(),
        ];
        let jac = Ideal::jacobian_of(&r3, &gens);
        let m2 = minors(&jac, 2);
        // rows (2x, 0, 0) and (0, z, y): 2x2 minors are 2xz and 2xy
        let m2s: Vec<String> = m2.iter().map(|p| p.monic().to_string_in(&r3)).collect();
        assert!(m2s.contains(&"x*z".to_string()));
        assert!(m2s.contains(&"x*y".to_string()));
        assert_eq!(m2.len(), 2);
    }
}
