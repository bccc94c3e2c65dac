//! Closed and specialization-closed subsets of the homogeneous spectrum,
//! nonfree loci, the singular locus, and the poset of declared primes.
//!
//! Closed sets are carried by defining ideals; containment and equality are
//! decided by radical membership, never by prime decomposition. A finite
//! union is compared through the product of its component ideals.

use crate::error::{Error, Result};
use crate::homology::{ext, syzygy};
use crate::ideal::{minors, Ideal};
use crate::presentation::ModulePresentation;
use crate::qring::QuotientRing;
use crate::scalar::Scalar;
use std::sync::Arc;

/// v(J): the homogeneous primes of R containing J.
#[derive(Clone, Debug)]
pub struct ClosedSet<F: Scalar> {
    pub ring: Arc<QuotientRing<F>>,
    /// Defining ideal, given by generators in R (reduced representatives).
    pub defining: Ideal<F>,
}

impl<F: Scalar> ClosedSet<F> {
    pub fn new(ring: Arc<QuotientRing<F>>, gens: Vec<crate::poly::Polynomial<F>>) -> Self {
        let gens = gens
            .into_iter()
            .map(|g| ring.reduce(&g))
            .filter(|g| !g.is_zero())
            .collect();
        ClosedSet {
            defining: Ideal::new(ring.poly_ring.clone(), gens),
            ring,
        }
    }

    pub fn empty(ring: Arc<QuotientRing<F>>) -> Self {
        let one = ring.poly_ring.constant(1);
        ClosedSet {
            defining: Ideal::new(ring.poly_ring.clone(), vec![one]),
            ring,
        }
    }

    pub fn whole_spectrum(ring: Arc<QuotientRing<F>>) -> Self {
        ClosedSet {
            defining: Ideal::zero(ring.poly_ring.clone()),
            ring,
        }
    }

    /// Lift of the defining ideal to the ambient ring, including I.
    fn lifted(&self) -> Ideal<F> {
        self.defining.sum(&self.ring.defining)
    }

    /// v(J) = ∅ iff J is the unit ideal of R.
    pub fn is_empty(&self) -> bool {
        self.lifted().is_unit()
    }

    /// v(self) ⊆ v(other) iff every generator of `other` is in √(self).
    pub fn contains_set(&self, other: &ClosedSet<F>) -> bool {
        // self ⊇ other as SETS of primes: primes containing other.defining
        // must contain... note the reversal: v(J1) ⊇ v(J2) iff J1 ⊆ √J2
        let rad_base = other.lifted();
        self.defining.gens().iter().all(|g| rad_base.radical_contains(g))
    }

    pub fn set_eq(&self, other: &ClosedSet<F>) -> bool {
        self.contains_set(other) && other.contains_set(self)
    }

    /// Whether the (declared prime) ideal `p` is a point of this set:
    /// p ⊇ defining.
    pub fn has_point(&self, p: &Ideal<F>) -> bool {
        let p_full = p.sum(&self.ring.defining);
        self.defining.gens().iter().all(|g| p_full.contains(g))
    }

    /// dim v(J) = Krull dimension of R/J; `None` for the empty set.
    pub fn dimension(&self) -> Option<usize> {
        self.lifted().krull_dimension()
    }

    /// Whether the set is inside {m}: every variable lies in √(J).
    pub fn within_irrelevant(&self) -> bool {
        let rad_base = self.lifted();
        (0..self.ring.n_vars()).all(|i| rad_base.radical_contains(&self.ring.poly_ring.var(i)))
    }

    pub fn gen_strings(&self) -> Vec<String> {
        self.defining.sorted_gen_strings()
    }
}

/// A finite union of closed sets; specialization-closed by construction.
#[derive(Clone, Debug)]
pub struct SpecClosedSet<F: Scalar> {
    pub ring: Arc<QuotientRing<F>>,
    pub components: Vec<ClosedSet<F>>,
}

impl<F: Scalar> SpecClosedSet<F> {
    pub fn empty(ring: Arc<QuotientRing<F>>) -> Self {
        SpecClosedSet {
            ring,
            components: Vec::new(),
        }
    }

    pub fn from_components(ring: Arc<QuotientRing<F>>, comps: Vec<ClosedSet<F>>) -> Self {
        SpecClosedSet {
            ring,
            components: comps,
        }
        .normalized()
    }

    /// Remove empty components and components contained in others.
    pub fn normalized(&self) -> SpecClosedSet<F> {
        let comps: Vec<ClosedSet<F>> = self
            .components
            .iter()
            .filter(|c| !c.is_empty())
            .cloned()
            .collect();
        let mut keep: Vec<ClosedSet<F>> = Vec::new();
        for (i, c) in comps.iter().enumerate() {
            let redundant = comps.iter().enumerate().any(|(j, other)| {
                if i == j {
                    return false;
                }
                // drop c if strictly contained, or equal with a smaller index kept
                if other.contains_set(c) {
                    !c.contains_set(other) || j < i
                } else {
                    false
                }
            });
            if !redundant {
                keep.push(c.clone());
            }
        }
        SpecClosedSet {
            ring: self.ring.clone(),
            components: keep,
        }
    }

    pub fn union(&self, other: &SpecClosedSet<F>) -> SpecClosedSet<F> {
        let mut comps = self.components.clone();
        comps.extend(other.components.iter().cloned());
        SpecClosedSet {
            ring: self.ring.clone(),
            components: comps,
        }
        .normalized()
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(|c| c.is_empty())
    }

    /// The union as a single closed set: v(∏ components).
    pub fn product_ideal(&self) -> Ideal<F> {
        if self.components.is_empty() {
            return Ideal::unit(self.ring.poly_ring.clone());
        }
        let mut acc = self.components[0].defining.clone();
        for c in &self.components[1..] {
            acc = acc.product(&c.defining);
        }
        acc
    }

    pub fn contains(&self, other: &SpecClosedSet<F>) -> bool {
        // self ⊇ other iff ∏(self components) ⊆ √(∏ other components)
        let rad_base = SpecClosedSet {
            ring: self.ring.clone(),
            components: other.components.clone(),
        }
        .product_ideal()
        .sum(&self.ring.defining);
        self.product_ideal()
            .gens()
            .iter()
            .all(|g| rad_base.radical_contains(g))
    }

    pub fn set_eq(&self, other: &SpecClosedSet<F>) -> bool {
        self.contains(other) && other.contains(self)
    }

    pub fn dimension(&self) -> Option<usize> {
        self.components.iter().filter_map(|c| c.dimension()).max()
    }

    pub fn has_point(&self, p: &Ideal<F>) -> bool {
        self.components.iter().any(|c| c.has_point(p))
    }

    pub fn component_strings(&self) -> Vec<Vec<String>> {
        self.components.iter().map(|c| c.gen_strings()).collect()
    }
}

/// Nonfree locus V(M) = v(Ann Ext^1(M, Ω M)); empty for free modules.
pub fn nonfree_locus<F: Scalar>(m: &ModulePresentation<F>) -> ClosedSet<F> {
    let m0 = m.minimalize();
    if m0.num_gens() == 0 {
        return ClosedSet::empty(m.ring.clone());
    }
    let om = syzygy(&m0, 1);
    if om.num_gens() == 0 {
        // first syzygy vanishes: M free
        return ClosedSet::empty(m.ring.clone());
    }
    let e = ext(&m0, &om, 1);
    if e.is_zero() {
        return ClosedSet::empty(m.ring.clone());
    }
    let ann = e.pres.annihilator();
    ClosedSet::new(m.ring.clone(), ann.gens().to_vec())
}

/// Fast path for cyclic modules: V(R/I) = v(I + (0 : I)).
pub fn nonfree_locus_cyclic<F: Scalar>(
    ring: &Arc<QuotientRing<F>>,
    i: &Ideal<F>,
) -> ClosedSet<F> {
    let reduced: Vec<crate::poly::Polynomial<F>> = i
        .gens()
        .iter()
        .map(|g| ring.reduce(g))
        .filter(|g| !g.is_zero())
        .collect();
    let i_red = Ideal::new(ring.poly_ring.clone(), reduced);
    if i_red.sum(&ring.defining).is_unit() {
        // R/I = 0
        return ClosedSet::empty(ring.clone());
    }
    let zero = Ideal::zero(ring.poly_ring.clone());
    let colon = ring.r_ideal_quotient(&zero, &i_red);
    let mut gens = i_red.gens().to_vec();
    gens.extend(colon.gens().iter().cloned());
    ClosedSet::new(ring.clone(), gens)
}

/// Jacobian-criterion singular locus: v(I + J_c) with J_c the c×c minors of
/// the Jacobian of the minimal generators, c = height of I.
pub fn singular_locus<F: Scalar>(ring: &Arc<QuotientRing<F>>) -> ClosedSet<F> {
    let jac_ideal = ring
        .jacobian_ideal
        .get_or_init(|| {
            let c = ring.n_vars() - ring.dim;
            if c == 0 {
                return Ideal::unit(ring.poly_ring.clone());
            }
            let jac = Ideal::jacobian_of(&ring.poly_ring, ring.minimal_defining_gens());
            Ideal::new(ring.poly_ring.clone(), minors(&jac, c))
        })
        .clone();
    if jac_ideal.is_unit() {
        return ClosedSet::empty(ring.clone());
    }
    let mut gens = ring.defining.gens().to_vec();
    gens.extend(jac_ideal.gens().iter().cloned());
    ClosedSet::new(ring.clone(), gens)
}

/// Free on the punctured spectrum: V(M) ⊆ {m}.
pub fn punctured_free<F: Scalar>(m: &ModulePresentation<F>) -> bool {
    nonfree_locus(m).within_irrelevant()
}

/// s(R): the support of the irrelevant ideal as a module, the primes where
/// R_p is not a field.
pub fn nonfield_locus<F: Scalar>(ring: &Arc<QuotientRing<F>>) -> ClosedSet<F> {
    let vars: Vec<crate::poly::Polynomial<F>> =
        (0..ring.n_vars()).map(|i| ring.poly_ring.var(i)).collect();
    if vars.is_empty() {
        return ClosedSet::empty(ring.clone());
    }
    let m = ModulePresentation::ideal_module(ring.clone(), vars)
        .expect("variables are homogeneous");
    let m0 = m.minimalize();
    if m0.num_gens() == 0 {
        return ClosedSet::empty(ring.clone());
    }
    let ann = m0.annihilator();
    ClosedSet::new(ring.clone(), ann.gens().to_vec())
}

/// User-declared homogeneous primes with their containment order.
#[derive(Clone, Debug)]
pub struct PrimePoset<F: Scalar> {
    pub ring: Arc<QuotientRing<F>>,
    pub primes: Vec<Ideal<F>>,
    /// leq[i][j] = true iff primes[i] ⊆ primes[j].
    pub leq: Vec<Vec<bool>>,
}

impl<F: Scalar> PrimePoset<F> {
    pub fn new(ring: Arc<QuotientRing<F>>, primes: Vec<Ideal<F>>) -> Result<Self> {
        for p in &primes {
            let full = p.sum(&ring.defining);
            if full.is_unit() {
                return Err(Error::Invalid("declared prime is the unit ideal".into()));
            }
            for g in p.gens() {
                if !g.is_homogeneous() {
                    return Err(Error::Inhomogeneous(g.to_string_in(&ring.poly_ring)));
                }
            }
        }
        let n = primes.len();
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                let full_j = primes[j].sum(&ring.defining);
                leq[i][j] = primes[i].gens().iter().all(|g| full_j.contains(g));
            }
        }
        Ok(PrimePoset { ring, primes, leq })
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// Indices of the poset primes that are points of the given set.
    pub fn points_in(&self, set: &SpecClosedSet<F>) -> Vec<usize> {
        (0..self.primes.len())
            .filter(|&i| set.has_point(&self.primes[i]))
            .collect()
    }

    /// All upward-closed subsets of the subposet supported inside `within`,
    /// as specialization-closed sets (including the empty one, first).
    pub fn upward_closed_within(&self, within: &ClosedSet<F>) -> Vec<SpecClosedSet<F>> {
        let idx: Vec<usize> = (0..self.primes.len())
            .filter(|&i| within.has_point(&self.primes[i]))
            .collect();
        let n = idx.len();
        let mut out = Vec::new();
        'mask: for mask in 0u64..(1u64 << n) {
            // upward closure check: i in set and i ⊆ j imply j in set
            for (a, &i) in idx.iter().enumerate() {
                if mask & (1 << a) == 0 {
                    continue;
                }
                for (b, &j) in idx.iter().enumerate() {
                    if self.leq[i][j] && mask & (1 << b) == 0 {
                        continue 'mask;
                    }
                }
            }
            let comps: Vec<ClosedSet<F>> = idx
                .iter()
                .enumerate()
                .filter(|(a, _)| mask & (1 << *a) != 0)
                .map(|(_, &i)| ClosedSet::new(self.ring.clone(), self.primes[i].gens().to_vec()))
                .collect();
            out.push(SpecClosedSet::from_components(self.ring.clone(), comps));
        }
        out.sort_by_key(|s| s.components.len());
        out
    }
}
