//! Finitely generated graded modules over a quotient ring, given by a
//! homogeneous presentation matrix (rows = generators with degree labels,
//! columns = relations).

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::matrix::Matrix;
use crate::modgb::{mvec_degree, mvec_is_zero, MVec};
use crate::poly::Polynomial;
use crate::qring::QuotientRing;
use crate::scalar::Scalar;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct ModulePresentation<F: Scalar> {
    pub ring: Arc<QuotientRing<F>>,
    pub matrix: Matrix<F>,
    pub row_degrees: Vec<i64>,
    pub minimal: bool,
}

impl<F: Scalar> ModulePresentation<F> {
    /// Validates homogeneity: every entry homogeneous and every column has a
    /// single consistent degree against the row labels.
    pub fn new(
        ring: Arc<QuotientRing<F>>,
        matrix: Matrix<F>,
        row_degrees: Vec<i64>,
    ) -> Result<Self> {
        assert_eq!(matrix.nrows, row_degrees.len(), "degree label count");
        let matrix = matrix.map_entries(|e| ring.reduce(e));
        for j in 0..matrix.ncols {
            let col = matrix.col(j);
            for e in &col {
                if !e.is_homogeneous() {
                    return Err(Error::Inhomogeneous(e.to_string_in(&ring.poly_ring)));
                }
            }
            // consistency of the column degree
            let mut coldeg: Option<i64> = None;
            for (i, e) in col.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                let d = e.degree().unwrap() as i64 + row_degrees[i];
                match coldeg {
                    None => coldeg = Some(d),
                    Some(c) if c == d => {}
                    Some(_) => {
                        return Err(Error::Inhomogeneous(e.to_string_in(&ring.poly_ring)))
                    }
                }
            }
        }
        Ok(ModulePresentation {
            ring,
            matrix,
            row_degrees,
            minimal: false,
        })
    }

    /// Infer row degrees from the matrix alone by propagating the
    /// homogeneity constraints, anchoring each connected component at 0.
    pub fn from_matrix(ring: Arc<QuotientRing<F>>, matrix: Matrix<F>) -> Result<Self> {
        let matrix = matrix.map_entries(|e| ring.reduce(e));
        let nrows = matrix.nrows;
        let ncols = matrix.ncols;
        for i in 0..nrows {
            for j in 0..ncols {
                if !matrix.at(i, j).is_homogeneous() {
                    return Err(Error::Inhomogeneous(
                        matrix.at(i, j).to_string_in(&ring.poly_ring),
                    ));
                }
            }
        }
        let mut row_degrees: Vec<Option<i64>> = vec![None; nrows];
        let mut col_degrees: Vec<Option<i64>> = vec![None; ncols];
        // propagate until stable
        loop {
            let mut changed = false;
            for i in 0..nrows {
                for j in 0..ncols {
                    let e = matrix.at(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    let d = e.degree().unwrap() as i64;
                    match (row_degrees[i], col_degrees[j]) {
                        (Some(r), None) => {
                            col_degrees[j] = Some(r + d);
                            changed = true;
                        }
                        (None, Some(c)) => {
                            row_degrees[i] = Some(c - d);
                            changed = true;
                        }
                        (Some(r), Some(c)) => {
                            if c - r != d {
                                return Err(Error::Inhomogeneous(
                                    e.to_string_in(&ring.poly_ring),
                                ));
                            }
                        }
                        (None, None) => {}
                    }
                }
            }
            if let Some(i) = row_degrees.iter().position(|d| d.is_none()) {
                // anchor an untouched row and keep propagating
                if !changed {
                    row_degrees[i] = Some(0);
                    continue;
                }
            }
            if !changed && row_degrees.iter().all(|d| d.is_some()) {
                break;
            }
            if !changed {
                break;
            }
        }
        let row_degrees: Vec<i64> = row_degrees.into_iter().map(|d| d.unwrap_or(0)).collect();
        ModulePresentation::new(ring, matrix, row_degrees)
    }

    pub fn free(ring: Arc<QuotientRing<F>>, rank: usize) -> Self {
        ModulePresentation {
            ring,
            matrix: Matrix::zero(rank, 0),
            row_degrees: vec![0; rank],
            minimal: true,
        }
    }

    pub fn zero(ring: Arc<QuotientRing<F>>) -> Self {
        ModulePresentation {
            ring,
            matrix: Matrix::zero(0, 0),
            row_degrees: Vec::new(),
            minimal: true,
        }
    }

    /// R/I for an ideal of R given by generators.
    pub fn cyclic(ring: Arc<QuotientRing<F>>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        let reduced: Vec<Polynomial<F>> = gens
            .iter()
            .map(|g| ring.reduce(g))
            .filter(|g| !g.is_zero())
            .collect();
        for g in &reduced {
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous(g.to_string_in(&ring.poly_ring)));
            }
        }
        let cols: Vec<MVec<F>> = reduced.into_iter().map(|g| vec![g]).collect();
        ModulePresentation::new(ring, Matrix::from_cols(1, &cols), vec![0])
    }

    /// The residue field k = R/m.
    pub fn residue_field(ring: Arc<QuotientRing<F>>) -> Self {
        let vars: Vec<Polynomial<F>> = (0..ring.n_vars()).map(|i| ring.poly_ring.var(i)).collect();
        ModulePresentation::cyclic(ring, vars).expect("homogeneous by construction")
    }

    /// The submodule of R^1 generated by the given elements, presented by its
    /// syzygy matrix. A unit generator yields the free module R.
    pub fn ideal_module(ring: Arc<QuotientRing<F>>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        let reduced: Vec<Polynomial<F>> = gens
            .iter()
            .map(|g| ring.reduce(g))
            .filter(|g| !g.is_zero())
            .collect();
        for g in &reduced {
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous(g.to_string_in(&ring.poly_ring)));
            }
        }
        if reduced.is_empty() {
            return Ok(ModulePresentation::zero(ring));
        }
        let row_degrees: Vec<i64> = reduced.iter().map(|g| g.degree().unwrap() as i64).collect();
        let vectors: Vec<MVec<F>> = reduced.iter().map(|g| vec![g.clone()]).collect();
        let syz = ring.r_syzygies(&vectors, 1);
        let matrix = Matrix::from_cols(reduced.len(), &syz);
        ModulePresentation::new(ring, matrix, row_degrees)
    }

    pub fn num_gens(&self) -> usize {
        self.matrix.nrows
    }

    pub fn num_rels(&self) -> usize {
        self.matrix.ncols
    }

    pub fn direct_sum(&self, other: &ModulePresentation<F>) -> ModulePresentation<F> {
        assert!(self.ring.same_ring(&other.ring), "mixed rings");
        let mut row_degrees = self.row_degrees.clone();
        row_degrees.extend(other.row_degrees.iter().copied());
        ModulePresentation {
            ring: self.ring.clone(),
            matrix: self.matrix.direct_sum(&other.matrix),
            row_degrees,
            minimal: self.minimal && other.minimal,
        }
    }

    /// M/xM: append the columns x·e_γ.
    pub fn quotient_by_element(&self, x: &Polynomial<F>) -> ModulePresentation<F> {
        let x = self.ring.reduce(x);
        let g = self.num_gens();
        let mut cols = self.matrix.cols();
        for gamma in 0..g {
            let mut v = vec![Polynomial::zero(); g];
            v[gamma] = x.clone();
            cols.push(v);
        }
        ModulePresentation::new(
            self.ring.clone(),
            Matrix::from_cols(g, &cols),
            self.row_degrees.clone(),
        )
        .expect("homogeneous by construction")
    }

    /// Unit-entry pivoting: removes generators expressible through others and
    /// drops vacuous zero relations. Idempotent; sets the minimality flag.
    pub fn minimalize(&self) -> ModulePresentation<F> {
        let mut matrix = self.matrix.clone();
        let mut row_degrees = self.row_degrees.clone();
        'pivot: loop {
            for i in 0..matrix.nrows {
                for j in 0..matrix.ncols {
                    let e = matrix.at(i, j);
                    if e.is_zero() || e.constant_term().is_none() {
                        continue;
                    }
                    // homogeneous entry with a constant term is a constant
                    let u = e.leading_coeff().unwrap().clone();
                    let uinv = u.inv();
                    // scale column j so the pivot is 1
                    for r in 0..matrix.nrows {
                        *matrix.at_mut(r, j) = matrix.at(r, j).scale(&uinv);
                    }
                    // clear row i across other columns
                    for c in 0..matrix.ncols {
                        if c == j {
                            continue;
                        }
                        let factor = matrix.at(i, c).clone();
                        if factor.is_zero() {
                            continue;
                        }
                        for r in 0..matrix.nrows {
                            let v = matrix.at(r, c).sub(&matrix.at(r, j).mul(&factor));
                            *matrix.at_mut(r, c) = self.ring.reduce(&v);
                        }
                    }
                    // clear column j across other rows
                    for r in 0..matrix.nrows {
                        if r == i {
                            continue;
                        }
                        let factor = matrix.at(r, j).clone();
                        if factor.is_zero() {
                            continue;
                        }
                        for c in 0..matrix.ncols {
                            let v = matrix.at(r, c).sub(&matrix.at(i, c).mul(&factor));
                            *matrix.at_mut(r, c) = self.ring.reduce(&v);
                        }
                    }
                    matrix = matrix.delete_row_col(i, j);
                    row_degrees.remove(i);
                    continue 'pivot;
                }
            }
            break;
        }
        let keep: Vec<usize> = (0..matrix.ncols)
            .filter(|&j| !mvec_is_zero(&matrix.col(j)))
            .collect();
        ModulePresentation {
            ring: self.ring.clone(),
            matrix: matrix.keep_cols(&keep),
            row_degrees,
            minimal: true,
        }
    }

    pub fn is_zero_module(&self) -> bool {
        self.minimalize().num_gens() == 0
    }

    /// Free means the minimal presentation has no relations.
    pub fn is_free(&self) -> bool {
        let m = self.minimalize();
        let trimmed = crate::qring::minimal_module_gens(&m.ring, &m.matrix.cols(), m.num_gens());
        trimmed.is_empty()
    }

    /// Relation columns as vectors, for kernel machinery.
    pub fn relation_cols(&self) -> Vec<MVec<F>> {
        self.matrix.cols()
    }

    /// Annihilator ideal of the module over R.
    pub fn annihilator(&self) -> Ideal<F> {
        let m = self.minimalize();
        m.ring.annihilator(&m.matrix.cols(), m.num_gens())
    }

    /// Total dimension over k, `None` for infinite length.
    pub fn dim_k(&self) -> Option<usize> {
        let m = self.minimalize();
        m.ring.dim_k(&m.matrix.cols(), m.num_gens())
    }

    /// Degrees of the relation columns.
    pub fn col_degrees(&self) -> Vec<i64> {
        (0..self.matrix.ncols)
            .map(|j| {
                mvec_degree(&self.matrix.col(j), &self.row_degrees)
                    .expect("nonzero homogeneous column")
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::PolyRing;
    use crate::scalar::Fp;

    fn hypersurface_x3() -> Arc<QuotientRing<Fp>> {
        let r = PolyRing::<Fp>::new(vec!["x".into()], 5);
        let f = parse_poly(&r, "x^3").unwrap();
        QuotientRing::new(r, vec![f]).unwrap()
    }

    #[test]
    fn minimalize_unit_relation_kills_module() {
        // coker [[1]] = 0
        let q = hypersurface_x3();
        let one = q.poly_ring.constant(1);
        let m = ModulePresentation::new(q, Matrix::from_rows(vec![vec![one]]), vec![0]).unwrap();
        let min = m.minimalize();
        assert_eq!(min.num_gens(), 0);
        assert!(m.is_zero_module());
    }

    #[test]
    fn minimalize_spec_example_over_x3() {
        // coker [[x, 1], [0, x^2]] over F5[x]/(x^3) is free of rank 1:
        // substituting e1 = -x^2 e2 turns the x-relation into x^3 e2 = 0
        let q = hypersurface_x3();
        let r = &q.poly_ring;
        let x = parse_poly(r, "x").unwrap();
        let x2 = parse_poly(r, "x^2").unwrap();
        let one = r.constant(1);
        let m = ModulePresentation::new(
            q.clone(),
            Matrix::from_rows(vec![vec![x, one], vec![Polynomial::zero(), x2]]),
            vec![2, 0],
        )
        .unwrap();
        let min = m.minimalize();
        assert_eq!(min.num_gens(), 1);
        assert_eq!(min.num_rels(), 0);
        assert!(m.is_free());
        // oracle: a rank-1 free module over F5[x]/(x^3) has 125 elements,
        // i.e. k-dimension 3
        assert_eq!(min.dim_k(), Some(3));
    }

    #[test]
    fn minimalize_already_minimal_is_identity() {
        let q = hypersurface_x3();
        let r = &q.poly_ring;
        let x = parse_poly(r, "x").unwrap();
        let m = ModulePresentation::new(q, Matrix::from_rows(vec![vec![x.clone()]]), vec![0]).unwrap();
        let min = m.minimalize();
        assert_eq!(min.num_gens(), 1);
        assert_eq!(min.num_rels(), 1);
        assert_eq!(*min.matrix.at(0, 0), x);
        let min2 = min.minimalize();
        assert_eq!(min2.matrix, min.matrix);
    }

    #[test]
    fn ideal_module_of_unit_is_free() {
        let q = hypersurface_x3();
        let one = q.poly_ring.constant(1);
        let m = ModulePresentation::ideal_module(q, vec![one]).unwrap();
        assert!(m.is_free());
        assert_eq!(m.num_gens(), 1);
    }

    #[test]
    fn residue_field_dimension() {
        let q = hypersurface_x3();
        let k = ModulePresentation::residue_field(q);
        assert_eq!(k.dim_k(), Some(1));
        assert!(!k.is_free());
        assert!(!k.is_zero_module());
    }

    #[test]
    fn inhomogeneous_input_rejected() {
        let q = hypersurface_x3();
        let r = &q.poly_ring;
        let bad = parse_poly(r, "x + 1").unwrap();
        assert!(matches!(
            ModulePresentation::ideal_module(q, vec![bad]),
            Err(Error::Inhomogeneous(_))
        ));
    }
}
