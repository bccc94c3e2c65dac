//! Quotient rings R = S/I of a polynomial ring, with the irrelevant ideal
//! playing the maximal ideal: the graded-local model in which every
//! computation of this crate takes place. Only homogeneous data is admitted.
//!
//! All module computations over R are performed on lifts: a submodule
//! computation augments the generator list with I·e_j so that coefficients,
//! normal forms and syzygies come out correct over R while the Groebner
//! machinery runs over S.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::modgb::{mvec_is_zero, mvec_zero, AugmentedBasis, MVec};
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};
use crate::scalar::Scalar;
use std::sync::{Arc, OnceLock};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingFlags {
    pub regular: bool,
    pub hypersurface: bool,
    pub complete_intersection: bool,
    pub gorenstein: bool,
    pub cohen_macaulay: bool,
}

#[derive(Debug)]
pub struct QuotientRing<F: Scalar> {
    pub poly_ring: Arc<PolyRing<F>>,
    pub defining: Ideal<F>,
    min_gens: Vec<Polynomial<F>>,
    pub dim: usize,
    pub(crate) flags: OnceLock<RingFlags>,
    pub(crate) jacobian_ideal: OnceLock<Ideal<F>>,
    /// Asserted by the caller, not verified: R_p is a hypersurface for every
    /// nonmaximal (homogeneous) prime p.
    pub locally_hypersurface_assertion: bool,
}

impl<F: Scalar> QuotientRing<F> {
    /// Build R = S/I. Rejects the unit ideal and any minimal generator of
    /// degree < 2 (the embedding-dimension convention: I sits inside the
    /// square of the irrelevant ideal).
    pub fn new(poly_ring: Arc<PolyRing<F>>, defining_gens: Vec<Polynomial<F>>) -> Result<Arc<Self>> {
        Self::with_assertion(poly_ring, defining_gens, false)
    }

    pub fn with_assertion(
        poly_ring: Arc<PolyRing<F>>,
        defining_gens: Vec<Polynomial<F>>,
        locally_hypersurface_assertion: bool,
    ) -> Result<Arc<Self>> {
        for g in &defining_gens {
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous(g.to_string_in(&poly_ring)));
            }
        }
        let defining = Ideal::new(poly_ring.clone(), defining_gens);
        if defining.is_unit() {
            return Err(Error::BadDefiningIdeal("1".into()));
        }
        let min_gens = defining.minimal_generators();
        for g in &min_gens {
            if g.degree().unwrap_or(0) < 2 {
                return Err(Error::BadDefiningIdeal(g.to_string_in(&poly_ring)));
            }
        }
        let dim = defining
            .krull_dimension()
            .expect("proper ideal has a dimension");
        Ok(Arc::new(QuotientRing {
            poly_ring,
            defining,
            min_gens,
            dim,
            flags: OnceLock::new(),
            jacobian_ideal: OnceLock::new(),
            locally_hypersurface_assertion,
        }))
    }

    /// The ambient polynomial ring S viewed as a quotient ring with I = 0.
    pub fn ambient(&self) -> Arc<QuotientRing<F>> {
        Arc::new(QuotientRing {
            poly_ring: self.poly_ring.clone(),
            defining: Ideal::zero(self.poly_ring.clone()),
            min_gens: Vec::new(),
            dim: self.poly_ring.n_vars(),
            flags: OnceLock::new(),
            jacobian_ideal: OnceLock::new(),
            locally_hypersurface_assertion: false,
        })
    }

    pub fn n_vars(&self) -> usize {
        self.poly_ring.n_vars()
    }

    pub fn minimal_defining_gens(&self) -> &[Polynomial<F>] {
        &self.min_gens
    }

    pub fn is_ambient(&self) -> bool {
        self.min_gens.is_empty()
    }

    /// Normal form mod the defining ideal: the canonical representative.
    pub fn reduce(&self, f: &Polynomial<F>) -> Polynomial<F> {
        if self.min_gens.is_empty() {
            f.clone()
        } else {
            self.defining.normal_form(f)
        }
    }

    pub fn reduce_vec(&self, v: &[Polynomial<F>]) -> MVec<F> {
        v.iter().map(|p| self.reduce(p)).collect()
    }

    /// `I · e_j` helper vectors for rank-`rank` module computations over R.
    pub fn helper_vectors(&self, rank: usize) -> Vec<MVec<F>> {
        let mut out = Vec::new();
        for j in 0..rank {
            for f in self.defining.groebner() {
                let mut v = mvec_zero::<F>(rank);
                v[j] = f.clone();
                out.push(v);
            }
        }
        out
    }

    /// Augmented basis for the span over R of `gens` inside R^rank.
    pub fn r_span(&self, gens: &[MVec<F>], rank: usize) -> RSpan<'_, F> {
        let n_user = gens.len();
        let mut all: Vec<MVec<F>> = gens.to_vec();
        all.extend(self.helper_vectors(rank));
        let aug = AugmentedBasis::new(&self.poly_ring, &all, rank);
        RSpan {
            ring: self,
            aug,
            n_user,
        }
    }

    /// Syzygies over R of a generator list inside R^rank: relations among the
    /// given vectors with coefficients in R, reduced to canonical form.
    pub fn r_syzygies(&self, gens: &[MVec<F>], rank: usize) -> Vec<MVec<F>> {
        if gens.is_empty() {
            return Vec::new();
        }
        let span = self.r_span(gens, rank);
        let mut out: Vec<MVec<F>> = span
            .aug
            .syzygies()
            .into_iter()
            .map(|s| self.reduce_vec(&s[..span.n_user]))
            .filter(|v| !mvec_is_zero(v))
            .collect();
        out.sort_by_key(|v| {
            v.iter()
                .map(|p| p.degree().map_or(-1, |d| d as i64))
                .max()
                .unwrap_or(-1)
        });
        out.dedup();
        out
    }

    /// Annihilator of coker(relations ⊆ R^rank) over R. The unit ideal for
    /// the zero module (rank 0).
    pub fn annihilator(&self, relations: &[MVec<F>], rank: usize) -> Ideal<F> {
        if rank == 0 {
            return Ideal::unit(self.poly_ring.clone());
        }
        // r annihilates every generator iff r * vec(Id) lies in the block sum
        // of the relation module
        let big = rank * rank;
        let mut stacked = mvec_zero::<F>(big);
        let one = self.poly_ring.constant(1);
        for gamma in 0..rank {
            stacked[gamma * rank + gamma] = one.clone();
        }
        let mut gens: Vec<MVec<F>> = vec![stacked];
        for block in 0..rank {
            for rel in relations {
                let mut v = mvec_zero::<F>(big);
                for (i, p) in rel.iter().enumerate() {
                    v[block * rank + i] = p.clone();
                }
                gens.push(v);
            }
        }
        let mut all = gens;
        all.extend(self.helper_vectors(big));
        let aug = AugmentedBasis::new(&self.poly_ring, &all, big);
        let ann_gens: Vec<Polynomial<F>> = aug
            .syzygies()
            .into_iter()
            .map(|s| self.reduce(&s[0]))
            .filter(|p| !p.is_zero())
            .collect();
        let lifted = Ideal::new(self.poly_ring.clone(), ann_gens).sum(&self.defining);
        Ideal::new(self.poly_ring.clone(), lifted.groebner().to_vec())
    }

    /// k-dimension of coker(relations ⊆ R^rank) by counting standard
    /// monomials; `None` when the module has infinite length.
    pub fn dim_k(&self, relations: &[MVec<F>], rank: usize) -> Option<usize> {
        if rank == 0 {
            return Some(0);
        }
        let mut all: Vec<MVec<F>> = relations.to_vec();
        all.extend(self.helper_vectors(rank));
        let gb = crate::modgb::module_groebner(&all);
        let n = self.n_vars();
        let mut total = 0usize;
        for pos in 0..rank {
            let leads: Vec<Monomial> = gb
                .iter()
                .filter_map(|v| {
                    crate::modgb::mvec_leading(v)
                        .filter(|(p, _, _)| *p == pos)
                        .map(|(_, m, _)| m.clone())
                })
                .collect();
            // finite in this position iff a pure power of every variable leads
            let mut bounds = vec![None; n];
            for m in &leads {
                let support: Vec<usize> = m.support().collect();
                if support.len() == 1 {
                    let i = support[0];
                    let e = m.exps()[i];
                    bounds[i] = Some(bounds[i].map_or(e, |b: u32| b.min(e)));
                }
                if support.is_empty() {
                    // constant leading term: the whole position dies
                    bounds = vec![Some(0); n];
                    break;
                }
            }
            if bounds.iter().any(|b| b.is_none()) {
                return None;
            }
            let bounds: Vec<u32> = bounds.into_iter().map(|b| b.unwrap()).collect();
            total += count_standard(&leads, &bounds, n);
        }
        Some(total)
    }

    /// Whether x is a nonzerodivisor on R: (0 : x) = 0, tested by lifting the
    /// ideal quotient to the ambient ring.
    pub fn is_regular_element(&self, x: &Polynomial<F>) -> bool {
        let x = self.reduce(x);
        if x.is_zero() {
            return false;
        }
        let full = Ideal::new(self.poly_ring.clone(), self.defining.groebner().to_vec());
        let quot = full.quotient(&Ideal::new(self.poly_ring.clone(), vec![x]));
        quot.contains_ideal(&full) && full.contains_ideal(&quot)
    }

    /// Ideal quotient over R: {r in R | r·J ⊆ I}, both given by generators in R.
    pub fn r_ideal_quotient(&self, i: &Ideal<F>, j: &Ideal<F>) -> Ideal<F> {
        let lifted_i = i.sum(&self.defining);
        let q = lifted_i.quotient(j);
        Ideal::new(
            self.poly_ring.clone(),
            q.groebner().iter().map(|g| self.reduce(g)).filter(|g| !g.is_zero()).collect(),
        )
    }

    pub fn fingerprint(&self) -> (String, Vec<String>, Vec<String>) {
        (
            F::field_name(&self.poly_ring.ctx),
            self.poly_ring.var_names.clone(),
            self.defining.sorted_gen_strings(),
        )
    }

    pub fn same_ring(&self, other: &QuotientRing<F>) -> bool {
        self.fingerprint() == other.fingerprint()
    }
}

fn count_standard(leads: &[Monomial], bounds: &[u32], n: usize) -> usize {
    // enumerate exponent vectors below the pure-power bounds and count the
    // ones no lead divides
    let mut count = 0usize;
    let mut exps = vec![0u32; n];
    loop {
        let m = Monomial::new(exps.clone());
        if !leads.iter().any(|l| l.divides(&m)) {
            count += 1;
        }
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            exps[i] += 1;
            if exps[i] >= bounds[i].max(1) {
                exps[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
    }
}

/// Span of a generator list over R with membership and lifting.
pub struct RSpan<'a, F: Scalar> {
    ring: &'a QuotientRing<F>,
    aug: AugmentedBasis<F>,
    n_user: usize,
}

impl<F: Scalar> RSpan<'_, F> {
    /// Canonical normal form of `v` modulo the span over R.
    pub fn normal_form(&self, v: &[Polynomial<F>]) -> MVec<F> {
        self.aug.reduce(v).0
    }

    pub fn contains(&self, v: &[Polynomial<F>]) -> bool {
        mvec_is_zero(&self.normal_form(v))
    }

    /// Cofactors on the user generators with `v = Σ c_i g_i` over R, when v
    /// lies in the span.
    pub fn lift(&self, v: &[Polynomial<F>]) -> Option<Vec<Polynomial<F>>> {
        let (nf, cof) = self.aug.reduce(v);
        if !mvec_is_zero(&nf) {
            return None;
        }
        Some(cof[..self.n_user].iter().map(|c| self.ring.reduce(c)).collect())
    }
}

/// Minimal generating set over R for the submodule of R^rank generated by
/// homogeneous `gens`: repeatedly drops any member lying in the span of the
/// others (graded Nakayama).
pub fn minimal_module_gens<F: Scalar>(
    ring: &QuotientRing<F>,
    gens: &[MVec<F>],
    rank: usize,
) -> Vec<MVec<F>> {
    let mut gens: Vec<MVec<F>> = gens
        .iter()
        .map(|v| ring.reduce_vec(v))
        .filter(|v| !mvec_is_zero(v))
        .collect();
    gens.sort_by_key(|v| {
        v.iter()
            .filter_map(|p| p.degree())
            .max()
            .unwrap_or(0)
    });
    loop {
        let mut removed = false;
        for i in 0..gens.len() {
            let others: Vec<MVec<F>> = gens
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let span = ring.r_span(&others, rank);
            if span.contains(&gens[i]) {
                gens.remove(i);
                removed = true;
                break;
            }
        }
        if !removed {
            return gens;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::scalar::Fp;

    pub fn hypersurface_xy() -> Arc<QuotientRing<Fp>> {
        let r = PolyRing::<Fp>::new(vec!["x".into(), "y".into()], 5);
        let f = parse_poly(&r, "x^2").unwrap();
        QuotientRing::new(r, vec![f]).unwrap()
    }

    #[test]
    fn rejects_bad_defining_ideals() {
        let r = PolyRing::<Fp>::new(vec!["x".into(), "y".into()], 5);
        let unit = parse_poly(&r, "1").unwrap();
        assert!(QuotientRing::new(r.clone(), vec![unit]).is_err());
        let linear = parse_poly(&r, "x").unwrap();
        assert!(QuotientRing::new(r.clone(), vec![linear]).is_err());
        let inhom = parse_poly(&r, "x^2 + x").unwrap();
        assert!(QuotientRing::new(r, vec![inhom]).is_err());
    }

    #[test]
    fn reduction_and_regularity() {
        let q = hypersurface_xy();
        let r = &q.poly_ring;
        let x2y = parse_poly(r, "x^2*y + y").unwrap();
        assert_eq!(q.reduce(&x2y), parse_poly(r, "y").unwrap());
        let x = parse_poly(r, "x").unwrap();
        let y = parse_poly(r, "y").unwrap();
        assert!(!q.is_regular_element(&x));
        assert!(q.is_regular_element(&y));
        assert_eq!(q.dim, 1);
    }

    #[test]
    fn syzygies_of_maximal_ideal_over_hypersurface() {
        let q = hypersurface_xy();
        let r = &q.poly_ring;
        let x = parse_poly(r, "x").unwrap();
        let y = parse_poly(r, "y").unwrap();
        let syz = q.r_syzygies(&[vec![x.clone()], vec![y.clone()]], 1);
        // relations among (x, y) over F5[x,y]/(x^2): (x, 0) and (y, -x)
        assert_eq!(syz.len(), 2);
        for s in &syz {
            let eval = q.reduce(&s[0].mul(&x).add(&s[1].mul(&y)));
            assert!(eval.is_zero());
        }
    }

    #[test]
    fn annihilator_of_residue_field() {
        let q = hypersurface_xy();
        let r = &q.poly_ring;
        let x = parse_poly(r, "x").unwrap();
        let y = parse_poly(r, "y").unwrap();
        // k = coker [x y] on one generator
        let ann = q.annihilator(&[vec![x.clone()], vec![y.clone()]], 1);
        assert!(ann.contains(&x));
        assert!(ann.contains(&y));
        assert!(!ann.contains(&r.constant(1)));
    }

    #[test]
    fn dim_k_counts_standard_monomials() {
        let q = hypersurface_xy();
        let r = &q.poly_ring;
        let x = parse_poly(r, "x").unwrap();
        let y = parse_poly(r, "y").unwrap();
        // k has dimension 1
        assert_eq!(q.dim_k(&[vec![x.clone()], vec![y.clone()]], 1), Some(1));
        // R itself has infinite length
        assert_eq!(q.dim_k(&[], 1), None);
        // R/(y) = F5[x]/(x^2) has dimension 2
        assert_eq!(q.dim_k(&[vec![y.clone()]], 1), Some(2));
    }

    #[test]
    fn minimal_gens_trims_redundant_vectors() {
        let q = hypersurface_xy();
        let r = &q.poly_ring;
        let x = parse_poly(r, "x").unwrap();
        let y = parse_poly(r, "y").unwrap();
        let xy = x.mul(&y);
        let trimmed = minimal_module_gens(&q, &[vec![x.clone()], vec![xy], vec![y.clone()]], 1);
        assert_eq!(trimmed.len(), 2);
    }
}
