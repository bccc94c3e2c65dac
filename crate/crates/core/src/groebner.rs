//! Buchberger's algorithm for polynomial ideals.
//!
//! Pair selection is the normal strategy (smallest lcm degree first) and both
//! the coprime-lcm criterion and the chain criterion are applied. The output
//! is always the unique reduced basis for degrevlex.

use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use std::collections::BinaryHeap;

/// Full normal form of `f` against `basis`: no term of the remainder is
/// divisible by any leading monomial of the basis.
pub fn normal_form<F: Scalar>(f: &Polynomial<F>, basis: &[Polynomial<F>]) -> Polynomial<F> {
    let mut work = f.clone();
    let mut remainder: Vec<(Monomial, F)> = Vec::new();
    'outer: while let Some((lm, lc)) = work.leading().cloned() {
        for g in basis {
            if let Some((gm, gc)) = g.leading() {
                if gm.divides(&lm) {
                    let q = gm.div_into(&lm);
                    let coeff = lc.clone() / gc.clone();
                    work = work.sub(&g.mul_term(&q, &coeff));
                    continue 'outer;
                }
            }
        }
        // leading term irreducible: move it to the remainder
        remainder.push((lm.clone(), lc.clone()));
        work = work.sub(&Polynomial::from_terms(vec![(lm, lc)]));
    }
    Polynomial::from_terms(remainder)
}

fn s_polynomial<F: Scalar>(f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let lcm = fm.lcm(gm);
    let a = f.mul_term(&fm.div_into(&lcm), &fc.clone().inv());
    let b = g.mul_term(&gm.div_into(&lcm), &gc.clone().inv());
    a.sub(&b)
}

#[derive(PartialEq, Eq)]
struct Pair {
    lcm_degree: u32,
    i: usize,
    j: usize,
    lcm: Monomial,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // BinaryHeap is a max-heap; smallest lcm degree must come first
        other
            .lcm_degree
            .cmp(&self.lcm_degree)
            .then_with(|| other.lcm.cmp(&self.lcm))
            .then_with(|| (other.i, other.j).cmp(&(self.i, self.j)))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn groebner_basis<F: Scalar>(gens: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
    let mut basis: Vec<Polynomial<F>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut pairs = BinaryHeap::new();
    let mut handled: Vec<(usize, usize)> = Vec::new();
    let push_pair = |pairs: &mut BinaryHeap<Pair>, basis: &[Polynomial<F>], i: usize, j: usize| {
        let lcm = basis[i]
            .leading_monomial()
            .unwrap()
            .lcm(basis[j].leading_monomial().unwrap());
        pairs.push(Pair {
            lcm_degree: lcm.degree(),
            i,
            j,
            lcm,
        });
    };
    for i in 0..basis.len() {
        for j in 0..i {
            push_pair(&mut pairs, &basis, j, i);
        }
    }
    while let Some(Pair { i, j, lcm, .. }) = pairs.pop() {
        handled.push((i, j));
        let lm_i = basis[i].leading_monomial().unwrap();
        let lm_j = basis[j].leading_monomial().unwrap();
        // coprime criterion
        if lm_i.coprime(lm_j) {
            continue;
        }
        // chain criterion: some k with lt(k) | lcm(i,j) and both pairs done
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&lcm)
                && handled.contains(&(k.min(i), k.max(i)))
                && handled.contains(&(k.min(j), k.max(j)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = normal_form(&s, &basis);
        if !r.is_zero() {
            basis.push(r);
            let n = basis.len() - 1;
            for k in 0..n {
                push_pair(&mut pairs, &basis, k, n);
            }
        }
    }
    reduce_basis(basis)
}

/// Inter-reduce a Groebner basis: every element monic and fully reduced
/// against the others; sorted by leading monomial descending.
pub fn reduce_basis<F: Scalar>(mut basis: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    // drop elements whose leading monomial is a multiple of another's
    basis.retain(|g| !g.is_zero());
    loop {
        let mut changed = false;
        let mut next: Vec<Polynomial<F>> = Vec::with_capacity(basis.len());
        for i in 0..basis.len() {
            let others: Vec<Polynomial<F>> = basis
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let r = normal_form(&basis[i], &others);
            if r != basis[i] {
                changed = true;
            }
            if !r.is_zero() {
                next.push(r);
            }
        }
        // dedupe identical elements
        next.sort_by(|a, b| b.leading_monomial().unwrap().cmp(a.leading_monomial().unwrap()));
        next.dedup();
        basis = next;
        if !changed {
            break;
        }
    }
    for g in &mut basis {
        *g = g.monic();
    }
    basis.sort_by(|a, b| b.leading_monomial().unwrap().cmp(a.leading_monomial().unwrap()));
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::PolyRing;
    use crate::scalar::{Fp, Rat};
    use std::sync::Arc;

    fn ring5() -> Arc<PolyRing<Fp>> {
        PolyRing::new(vec!["x".into(), "y".into()], 5)
    }

    fn ringq() -> Arc<PolyRing<Rat>> {
        PolyRing::new(vec!["x".into(), "y".into()], ())
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = ring5();
        let gens = vec![parse_poly(&r, "x^2").unwrap(), parse_poly(&r, "x*y").unwrap()];
        let gb = groebner_basis(&gens);
        assert_eq!(gb, gens);
    }

    #[test]
    fn empty_input_gives_empty_basis() {
        let gb: Vec<Polynomial<Fp>> = groebner_basis(&[]);
        assert!(gb.is_empty());
    }

    #[test]
    fn buchberger_example_over_q() {
        // x^2 - y, x*y - 1: the reduced degrevlex basis was computed by hand:
        // S(f,g) = y*f - x*g = x - y^2, then y^3 - 1 and x - y^2 generate,
        // with x^2 - y and x*y - 1 reducing to zero against them.
        let r = ringq();
        let f = parse_poly(&r, "x^2 - y").unwrap();
        let g = parse_poly(&r, "x*y - 1").unwrap();
        let gb = groebner_basis(&[f.clone(), g.clone()]);
        let strings: Vec<String> = gb.iter().map(|p| p.to_string_in(&r)).collect();
        assert_eq!(strings, vec!["x^2 - y", "x*y - 1", "y^2 - x"]);
        // span preserved: inputs reduce to zero
        assert!(normal_form(&f, &gb).is_zero());
        assert!(normal_form(&g, &gb).is_zero());
        // Buchberger fixpoint
        for i in 0..gb.len() {
            for j in 0..i {
                let s = s_polynomial(&gb[i], &gb[j]);
                assert!(normal_form(&s, &gb).is_zero());
            }
        }
    }

    #[test]
    fn normal_form_examples() {
        let r = ringq();
        let basis = groebner_basis(&[parse_poly(&r, "x^2").unwrap()]);
        assert!(normal_form(&parse_poly(&r, "x^3").unwrap(), &basis).is_zero());
        let f = parse_poly(&r, "x + y").unwrap();
        assert_eq!(normal_form(&f, &basis), f);
        let basis2 = groebner_basis(&[parse_poly(&r, "x^2 - y").unwrap()]);
        let g = parse_poly(&r, "x^2*y + y").unwrap();
        assert_eq!(
            normal_form(&g, &basis2),
            parse_poly(&r, "y^2 + y").unwrap()
        );
    }

    #[test]
    fn groebner_is_idempotent() {
        let r = ring5();
        let gens = vec![
            parse_poly(&r, "x^2 + y^2").unwrap(),
            parse_poly(&r, "x*y").unwrap(),
        ];
        let gb = groebner_basis(&gens);
        let gb2 = groebner_basis(&gb);
        assert_eq!(gb, gb2);
    }
}
