//! Groebner bases for submodules of free modules S^r.
//!
//! The term order is position-over-term with descending position priority
//! (position 0 dominates), degrevlex within a position. Syzygies and lifting
//! are obtained from a single augmented computation: each generator is tagged
//! with a unit vector in a trailing block of positions that the order ranks
//! below every original position, so basis elements with vanishing leading
//! block carry syzygies and division remainders carry cofactors.

use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use std::collections::BinaryHeap;

/// Vector of polynomials; the ambient rank is tracked by the caller.
pub type MVec<F> = Vec<Polynomial<F>>;

pub fn mvec_zero<F: Scalar>(rank: usize) -> MVec<F> {
    vec![Polynomial::zero(); rank]
}

pub fn mvec_is_zero<F: Scalar>(v: &[Polynomial<F>]) -> bool {
    v.iter().all(|p| p.is_zero())
}

pub fn mvec_add<F: Scalar>(a: &[Polynomial<F>], b: &[Polynomial<F>]) -> MVec<F> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn mvec_sub<F: Scalar>(a: &[Polynomial<F>], b: &[Polynomial<F>]) -> MVec<F> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn mvec_neg<F: Scalar>(a: &[Polynomial<F>]) -> MVec<F> {
    a.iter().map(|x| x.neg()).collect()
}

pub fn mvec_mul_term<F: Scalar>(a: &[Polynomial<F>], m: &Monomial, c: &F) -> MVec<F> {
    a.iter().map(|x| x.mul_term(m, c)).collect()
}

pub fn mvec_mul_poly<F: Scalar>(a: &[Polynomial<F>], p: &Polynomial<F>) -> MVec<F> {
    a.iter().map(|x| x.mul(p)).collect()
}

pub fn mvec_scale<F: Scalar>(a: &[Polynomial<F>], c: &F) -> MVec<F> {
    a.iter().map(|x| x.scale(c)).collect()
}

/// Leading term of a vector: the leading term of the first nonzero component.
pub fn mvec_leading<F: Scalar>(v: &[Polynomial<F>]) -> Option<(usize, &Monomial, &F)> {
    for (i, p) in v.iter().enumerate() {
        if let Some((m, c)) = p.leading() {
            return Some((i, m, c));
        }
    }
    None
}

/// Degree of a homogeneous vector with component twists, `None` for zero.
/// Panics if the components disagree, which would mean non-homogeneous input
/// slipped past validation.
pub fn mvec_degree<F: Scalar>(v: &[Polynomial<F>], twists: &[i64]) -> Option<i64> {
    let mut deg: Option<i64> = None;
    for (j, p) in v.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        assert!(p.is_homogeneous(), "non-homogeneous vector component");
        let d = p.degree().unwrap() as i64 + twists[j];
        match deg {
            None => deg = Some(d),
            Some(e) => assert_eq!(e, d, "vector is not homogeneous for the given twists"),
        }
    }
    deg
}

/// Full normal form against module Groebner basis elements: the remainder has
/// no term (in any position) divisible by a leading term of the basis.
pub fn mvec_normal_form<F: Scalar>(v: &[Polynomial<F>], basis: &[MVec<F>]) -> MVec<F> {
    let rank = v.len();
    let mut work = v.to_vec();
    let mut remainder = mvec_zero::<F>(rank);
    'outer: while let Some((pos, lm, lc)) = {
        // borrow dance: compute the leading data by value
        mvec_leading(&work).map(|(p, m, c)| (p, m.clone(), c.clone()))
    } {
        for g in basis {
            if let Some((gpos, gm, gc)) = mvec_leading(g) {
                if gpos == pos && gm.divides(&lm) {
                    let q = gm.div_into(&lm);
                    let coeff = lc.clone() / gc.clone();
                    work = mvec_sub(&work, &mvec_mul_term(g, &q, &coeff));
                    continue 'outer;
                }
            }
        }
        remainder[pos] = remainder[pos].add(&Polynomial::from_terms(vec![(lm.clone(), lc.clone())]));
        work[pos] = work[pos].sub(&Polynomial::from_terms(vec![(lm, lc)]));
    }
    remainder
}

fn mvec_s_vector<F: Scalar>(f: &[Polynomial<F>], g: &[Polynomial<F>]) -> Option<MVec<F>> {
    let (fp, fm, fc) = mvec_leading(f)?;
    let (gp, gm, gc) = mvec_leading(g)?;
    if fp != gp {
        return None;
    }
    let lcm = fm.lcm(gm);
    let a = mvec_mul_term(f, &fm.div_into(&lcm), &fc.clone().inv());
    let b = mvec_mul_term(g, &gm.div_into(&lcm), &gc.clone().inv());
    Some(mvec_sub(&a, &b))
}

#[derive(PartialEq, Eq)]
struct MPair {
    lcm_degree: u32,
    pos: usize,
    i: usize,
    j: usize,
}

impl Ord for MPair {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .lcm_degree
            .cmp(&self.lcm_degree)
            .then_with(|| (other.pos, other.i, other.j).cmp(&(self.pos, self.i, self.j)))
    }
}

impl PartialOrd for MPair {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Buchberger for modules. No pair criteria beyond equal leading position;
/// correctness over speed at this scale.
pub fn module_groebner<F: Scalar>(gens: &[MVec<F>]) -> Vec<MVec<F>> {
    let mut basis: Vec<MVec<F>> = gens.iter().filter(|g| !mvec_is_zero(g)).cloned().collect();
    let mut pairs = BinaryHeap::new();
    let push_pair = |pairs: &mut BinaryHeap<MPair>, basis: &[MVec<F>], i: usize, j: usize| {
        let (pi, mi, _) = mvec_leading(&basis[i]).unwrap();
        let (pj, mj, _) = mvec_leading(&basis[j]).unwrap();
        if pi == pj {
            pairs.push(MPair {
                lcm_degree: mi.lcm(mj).degree(),
                pos: pi,
                i,
                j,
            });
        }
    };
    for i in 0..basis.len() {
        for j in 0..i {
            push_pair(&mut pairs, &basis, j, i);
        }
    }
    while let Some(MPair { i, j, .. }) = pairs.pop() {
        let Some(s) = mvec_s_vector(&basis[i], &basis[j]) else {
            continue;
        };
        let r = mvec_normal_form(&s, &basis);
        if !mvec_is_zero(&r) {
            basis.push(r);
            let n = basis.len() - 1;
            for k in 0..n {
                push_pair(&mut pairs, &basis, k, n);
            }
        }
    }
    reduce_module_basis(basis)
}

/// Inter-reduce and normalize a module Groebner basis; the result is the
/// unique reduced basis for the order.
pub fn reduce_module_basis<F: Scalar>(mut basis: Vec<MVec<F>>) -> Vec<MVec<F>> {
    basis.retain(|g| !mvec_is_zero(g));
    loop {
        let mut changed = false;
        let mut next: Vec<MVec<F>> = Vec::with_capacity(basis.len());
        for i in 0..basis.len() {
            let others: Vec<MVec<F>> = basis
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let r = mvec_normal_form(&basis[i], &others);
            if r != basis[i] {
                changed = true;
            }
            if !mvec_is_zero(&r) {
                next.push(r);
            }
        }
        next.sort_by(|a, b| {
            let (pa, ma, _) = mvec_leading(a).unwrap();
            let (pb, mb, _) = mvec_leading(b).unwrap();
            pa.cmp(&pb).then_with(|| mb.cmp(ma))
        });
        next.dedup();
        basis = next;
        if !changed {
            break;
        }
    }
    for g in &mut basis {
        let lc = mvec_leading(g).map(|(_, _, c)| c.clone()).unwrap();
        *g = mvec_scale(g, &lc.inv());
    }
    basis
}

/// Augmented basis of a generator list: carries enough structure to answer
/// membership, lifting, and syzygy queries about the original generators.
pub struct AugmentedBasis<F: Scalar> {
    pub first_rank: usize,
    pub n_gens: usize,
    basis: Vec<MVec<F>>,
}

impl<F: Scalar> AugmentedBasis<F> {
    /// `gens` live in S^rank; tag block positions rank..rank+gens.len().
    pub fn new(ring: &crate::poly::PolyRing<F>, gens: &[MVec<F>], rank: usize) -> Self {
        let n = gens.len();
        let one = ring.constant(1);
        let mut aug: Vec<MVec<F>> = Vec::with_capacity(n);
        for (i, g) in gens.iter().enumerate() {
            assert_eq!(g.len(), rank, "generator rank mismatch");
            let mut v = g.to_vec();
            v.resize(rank + n, Polynomial::zero());
            v[rank + i] = one.clone();
            aug.push(v);
        }
        let basis = module_groebner(&aug);
        AugmentedBasis {
            first_rank: rank,
            n_gens: n,
            basis,
        }
    }

    /// Normal form of `v` modulo the span of the generators, together with
    /// cofactors c such that `v = nf + sum c_i * gens_i`.
    pub fn reduce(&self, v: &[Polynomial<F>]) -> (MVec<F>, Vec<Polynomial<F>>) {
        assert_eq!(v.len(), self.first_rank);
        let mut padded = v.to_vec();
        padded.resize(self.first_rank + self.n_gens, Polynomial::zero());
        let r = mvec_normal_form(&padded, &self.basis);
        let nf = r[..self.first_rank].to_vec();
        let cof = r[self.first_rank..].iter().map(|p| p.neg()).collect();
        (nf, cof)
    }

    pub fn contains(&self, v: &[Polynomial<F>]) -> bool {
        mvec_is_zero(&self.reduce(v).0)
    }

    /// Generators of the syzygy module of the original generator list.
    pub fn syzygies(&self) -> Vec<Vec<Polynomial<F>>> {
        self.basis
            .iter()
            .filter(|b| b[..self.first_rank].iter().all(|p| p.is_zero()))
            .map(|b| b[self.first_rank..].to_vec())
            .collect()
    }

    /// The Groebner basis of the span, without tags.
    pub fn span_basis(&self) -> Vec<MVec<F>> {
        self.basis
            .iter()
            .filter(|b| b[..self.first_rank].iter().any(|p| !p.is_zero()))
            .map(|b| b[..self.first_rank].to_vec())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::PolyRing;
    use crate::scalar::Rat;
    use std::sync::Arc;

    fn ringq() -> Arc<PolyRing<Rat>> {
        PolyRing::new(vec!["x".into(), "y".into()], ())
    }

    #[test]
    fn koszul_syzygy_of_two_variables() {
        let r = ringq();
        let x = parse_poly(&r, "x").unwrap();
        let y = parse_poly(&r, "y").unwrap();
        let aug = AugmentedBasis::new(&r, &[vec![x.clone()], vec![y.clone()]], 1);
        let syz = aug.syzygies();
        assert_eq!(syz.len(), 1);
        // the Koszul relation (y, -x) up to sign and scalar
        let s = &syz[0];
        assert!(s[0].mul(&x).add(&s[1].mul(&y)).is_zero());
        assert_eq!(s[0].monic(), y.monic());
        assert_eq!(s[1].neg().monic(), x.monic());
    }

    #[test]
    fn principal_ideal_has_no_syzygies() {
        let r = ringq();
        let f = parse_poly(&r, "x^2").unwrap();
        let aug = AugmentedBasis::new(&r, &[vec![f]], 1);
        assert!(aug.syzygies().is_empty());
    }

    #[test]
    fn reduce_returns_cofactors() {
        let r = ringq();
        let f = parse_poly(&r, "x^2 - y").unwrap();
        let g = parse_poly(&r, "y^2").unwrap();
        let aug = AugmentedBasis::new(&r, &[vec![f.clone()], vec![g.clone()]], 1);
        let target = parse_poly(&r, "x^4").unwrap();
        let (nf, cof) = aug.reduce(&[target.clone()]);
        // x^4 = (x^2 + y)(x^2 - y) + y^2, so the remainder is zero
        assert!(nf[0].is_zero());
        let recombined = cof[0].mul(&f).add(&cof[1].mul(&g));
        assert_eq!(recombined, target);
    }

    #[test]
    fn diagonal_matrix_over_poly_ring_has_zero_syzygies() {
        let r: Arc<PolyRing<Rat>> = PolyRing::new(vec!["x".into()], ());
        let x = parse_poly(&r, "x").unwrap();
        let zero = Polynomial::zero();
        let c1 = vec![x.clone(), zero.clone()];
        let c2 = vec![zero.clone(), x.clone()];
        let aug = AugmentedBasis::new(&r, &[c1, c2], 2);
        assert!(aug.syzygies().is_empty());
    }

    #[test]
    fn module_nf_respects_position_priority() {
        let r = ringq();
        let x = parse_poly(&r, "x").unwrap();
        let one_gen = vec![x.clone(), parse_poly(&r, "y").unwrap()];
        let gb = module_groebner(&[one_gen.clone()]);
        // (x, y) reduces to zero against itself
        assert!(mvec_is_zero(&mvec_normal_form(&one_gen, &gb)));
        // (0, y) is irreducible: the basis leading term sits in position 0
        let v = vec![Polynomial::zero(), parse_poly(&r, "y").unwrap()];
        assert_eq!(mvec_normal_form(&v, &gb), v);
    }
}
