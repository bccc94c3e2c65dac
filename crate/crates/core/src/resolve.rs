//! Minimal graded free resolutions, Betti tables, and depth via projective
//! dimension over the ambient polynomial ring (Auslander-Buchsbaum).

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::modgb::{mvec_degree, MVec};
use crate::poly::Polynomial;
use crate::presentation::ModulePresentation;
use crate::qring::{minimal_module_gens, QuotientRing};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    /// β_0, β_1, … up to the computed bound.
    pub total: Vec<usize>,
    /// Graded refinement: generator degree → rank, per homological index.
    pub graded: Vec<BTreeMap<i64, usize>>,
    /// Whether the resolution stopped with a zero kernel inside the window,
    /// so all later Betti numbers vanish.
    pub terminated: bool,
}

impl BettiTable {
    /// β_i, with the zeros after termination filled in.
    pub fn beta(&self, i: usize) -> Option<usize> {
        if i < self.total.len() {
            Some(self.total[i])
        } else if self.terminated {
            Some(0)
        } else {
            None
        }
    }

    /// Totals padded with the implied zeros out to index `n`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        (0..=n).map(|i| self.beta(i).unwrap_or(0)).collect()
    }

    /// Graded column padded likewise.
    pub fn graded_padded(&self, n: usize) -> Vec<BTreeMap<i64, usize>> {
        (0..=n)
            .map(|i| self.graded.get(i).cloned().unwrap_or_default())
            .collect()
    }

    /// Projective dimension when the table terminated.
    pub fn projective_dimension(&self) -> Option<usize> {
        if !self.terminated {
            return None;
        }
        Some(
            self.total
                .iter()
                .rposition(|&b| b > 0)
                .map_or(0, |p| p),
        )
    }
}

/// Smallest index N such that β_{i+2} = β_i for all i ≥ N within the window.
pub fn periodicity_start(betti: &[usize]) -> Option<usize> {
    if betti.len() < 3 {
        return Some(0);
    }
    let mut start = betti.len() - 2;
    for n in (0..betti.len() - 2).rev() {
        if betti[n] == betti[n + 2] {
            start = n;
        } else {
            break;
        }
    }
    if start == betti.len() - 2 {
        // nothing periodic observed
        None
    } else {
        Some(start)
    }
}

#[derive(Clone, Debug)]
pub struct FreeResolution<F: Scalar> {
    pub ring: Arc<QuotientRing<F>>,
    /// diffs[i] is ∂_{i+1}: F_{i+1} → F_i (rows = F_i generators).
    pub diffs: Vec<Matrix<F>>,
    /// gen_degrees[i] labels the generators of F_i; len = diffs.len() + 1,
    /// except for the zero module where everything is empty.
    pub gen_degrees: Vec<Vec<i64>>,
}

impl<F: Scalar> FreeResolution<F> {
    pub fn betti(&self, terminated: bool) -> BettiTable {
        let total: Vec<usize> = self.gen_degrees.iter().map(|d| d.len()).collect();
        let graded = self
            .gen_degrees
            .iter()
            .map(|degs| {
                let mut m = BTreeMap::new();
                for &d in degs {
                    *m.entry(d).or_insert(0) += 1;
                }
                m
            })
            .collect();
        BettiTable {
            total,
            graded,
            terminated,
        }
    }

    /// ∂_i ∘ ∂_{i+1} = 0 over R, for every adjacent pair.
    pub fn verify_complex(&self) -> bool {
        for w in self.diffs.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            for i in 0..a.nrows {
                for j in 0..b.ncols {
                    let mut acc = Polynomial::zero();
                    for k in 0..a.ncols {
                        acc = acc.add(&a.at(i, k).mul(b.at(k, j)));
                    }
                    if !self.ring.reduce(&acc).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every entry of every differential has zero constant term.
    pub fn verify_minimal(&self) -> bool {
        self.diffs.iter().all(|d| {
            (0..d.nrows).all(|i| (0..d.ncols).all(|j| d.at(i, j).constant_term().is_none()))
        })
    }
}

/// Minimal graded free resolution of M to homological degree n, together
/// with its Betti table. The resolution may terminate early when a kernel
/// vanishes.
pub fn resolve<F: Scalar>(
    m: &ModulePresentation<F>,
    n: usize,
) -> (FreeResolution<F>, BettiTable) {
    let ring = m.ring.clone();
    let m0 = m.minimalize();
    if m0.num_gens() == 0 {
        let res = FreeResolution {
            ring,
            diffs: Vec::new(),
            gen_degrees: vec![Vec::new()],
        };
        let betti = res.betti(true);
        return (res, betti);
    }
    let mut gen_degrees = vec![m0.row_degrees.clone()];
    let mut diffs: Vec<Matrix<F>> = Vec::new();
    let mut terminated = false;
    // minimal generators of the relation module give ∂_1
    let mut current_cols = minimal_module_gens(&ring, &m0.matrix.cols(), m0.num_gens());
    let mut current_twists = m0.row_degrees.clone();
    for _step in 1..=n {
        if current_cols.is_empty() {
            terminated = true;
            break;
        }
        let col_degs: Vec<i64> = current_cols
            .iter()
            .map(|c| mvec_degree(c, &current_twists).expect("nonzero homogeneous column"))
            .collect();
        let d = Matrix::from_cols(current_twists.len(), &current_cols);
        debug_assert!(
            (0..d.nrows).all(|i| (0..d.ncols).all(|j| d.at(i, j).constant_term().is_none())),
            "resolution step is not minimal"
        );
        diffs.push(d);
        gen_degrees.push(col_degs.clone());
        let syz = ring.r_syzygies(&current_cols, current_twists.len());
        current_cols = minimal_module_gens(&ring, &syz, current_cols.len());
        current_twists = col_degs;
    }
    if !terminated && current_cols.is_empty() {
        terminated = true;
    }
    let res = FreeResolution {
        ring,
        diffs,
        gen_degrees,
    };
    let betti = res.betti(terminated);
    (res, betti)
}

/// depth_R M = n_vars − pd_S M: resolve M as a module over the ambient
/// polynomial ring, where the resolution always terminates.
pub fn depth<F: Scalar>(m: &ModulePresentation<F>) -> Result<usize> {
    let m0 = m.minimalize();
    if m0.num_gens() == 0 {
        return Err(Error::ZeroModuleDepth);
    }
    let betti = ambient_betti(&m0);
    let pd = betti
        .projective_dimension()
        .expect("resolution over the ambient ring terminates");
    let n = m.ring.n_vars();
    assert!(pd <= n, "projective dimension exceeds the variable count");
    Ok(n - pd)
}

/// Betti table of M viewed as a module over the ambient polynomial ring.
pub fn ambient_betti<F: Scalar>(m: &ModulePresentation<F>) -> BettiTable {
    let ambient = m.ring.ambient();
    let g = m.num_gens();
    let mut cols: Vec<MVec<F>> = m.matrix.cols();
    for gamma in 0..g {
        for f in m.ring.defining.groebner() {
            let mut v = vec![Polynomial::zero(); g];
            v[gamma] = f.clone();
            cols.push(v);
        }
    }
    let ms = ModulePresentation::new(
        ambient,
        Matrix::from_cols(g, &cols),
        m.row_degrees.clone(),
    )
    .expect("lift stays homogeneous");
    let n = m.ring.n_vars();
    let (_, betti) = resolve(&ms, n + 1);
    betti
}

/// Cohen-Macaulay test: depth M = dim R. Errors on the zero module.
pub fn is_cohen_macaulay<F: Scalar>(m: &ModulePresentation<F>) -> Result<bool> {
    Ok(depth(m)? == m.ring.dim)
}
