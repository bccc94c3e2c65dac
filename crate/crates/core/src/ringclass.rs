//! Ring classification flags: regular, hypersurface, complete intersection,
//! Gorenstein (terminal Bass number), Cohen-Macaulay (depth = dimension).

use crate::homology::ext;
use crate::presentation::ModulePresentation;
use crate::qring::{QuotientRing, RingFlags};
use crate::resolve::depth;
use crate::scalar::Scalar;
use std::sync::Arc;

/// Compute (once) and return the classification flags of R.
pub fn ring_flags<F: Scalar>(ring: &Arc<QuotientRing<F>>) -> RingFlags {
    if let Some(f) = ring.flags.get() {
        return *f;
    }
    let computed = compute_flags(ring);
    *ring.flags.get_or_init(|| computed)
}

fn compute_flags<F: Scalar>(ring: &Arc<QuotientRing<F>>) -> RingFlags {
    let n_min = ring.minimal_defining_gens().len();
    let regular = n_min == 0;
    let hypersurface = n_min == 1;
    let d = ring.dim;
    let codim = ring.n_vars() - d;
    let complete_intersection = n_min == codim;
    let r_mod = ModulePresentation::free(ring.clone(), 1);
    let cohen_macaulay = depth(&r_mod).expect("R is nonzero") == d;
    let gorenstein = if regular {
        true
    } else {
        // terminal Bass number: dim_k Ext^d(k, R) = 1
        let k = ModulePresentation::residue_field(ring.clone());
        let e = ext(&k, &r_mod, d);
        e.dim_k == Some(1)
    };
    RingFlags {
        regular,
        hypersurface,
        complete_intersection,
        gorenstein,
        cohen_macaulay,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::PolyRing;
    use crate::scalar::Fp;

    #[test]
    fn plane_hypersurface_flags() {
        let r = PolyRing::<Fp>::new(vec!["x".into(), "y".into()], 5);
        let q = QuotientRing::new(r.clone(), vec![parse_poly(&r, "x^2").unwrap()]).unwrap();
        let f = ring_flags(&q);
        assert!(f.hypersurface);
        assert!(f.gorenstein);
        assert!(f.cohen_macaulay);
        assert!(!f.regular);
        assert!(f.complete_intersection);
    }

    #[test]
    fn complete_intersection_flags() {
        let r = PolyRing::<Fp>::new(vec!["x".into(), "y".into(), "z".into()], 5);
        let q = QuotientRing::new(
            r.clone(),
            vec![
                parse_poly(&r, "x^2").unwrap(),
                parse_poly(&r, "y*z").unwrap(),
            ],
        )
        .unwrap();
        let f = ring_flags(&q);
        assert!(!f.hypersurface);
        assert!(f.complete_intersection);
        assert!(f.gorenstein);
        assert!(f.cohen_macaulay);
        assert!(!f.regular);
        assert_eq!(q.dim, 1);
    }

    #[test]
    fn polynomial_ring_is_regular() {
        let r = PolyRing::<Fp>::new(vec!["x".into(), "y".into()], 5);
        let q = QuotientRing::new(r, vec![]).unwrap();
        let f = ring_flags(&q);
        assert!(f.regular);
        assert!(f.gorenstein);
        assert!(f.cohen_macaulay);
        assert!(!f.hypersurface);
    }

    #[test]
    fn non_gorenstein_cm_ring() {
        // F5[x,y]/(x^2, x*y, y^2): artinian with 2-dimensional socle
        let r = PolyRing::<Fp>::new(vec!["x".into(), "y".into()], 5);
        let q = QuotientRing::new(
            r.clone(),
            vec![
                parse_poly(&r, "x^2").unwrap(),
                parse_poly(&r, "x*y").unwrap(),
                parse_poly(&r, "y^2").unwrap(),
            ],
        )
        .unwrap();
        let f = ring_flags(&q);
        assert!(!f.gorenstein);
        assert!(f.cohen_macaulay);
        assert!(!f.hypersurface);
        assert!(!f.complete_intersection);
    }
}
