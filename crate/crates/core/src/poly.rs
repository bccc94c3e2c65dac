//! Multivariate polynomials with exact coefficients.
//!
//! Terms are kept sorted strictly descending in degrevlex and never carry a
//! zero coefficient; the zero polynomial is the empty term list with degree
//! reported as `None`.

use crate::monomial::Monomial;
use crate::scalar::Scalar;
use std::fmt;
use std::sync::Arc;

/// The ambient polynomial ring: variable names plus the coefficient context.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyRing<F: Scalar> {
    pub var_names: Vec<String>,
    pub ctx: F::Ctx,
}

impl<F: Scalar> PolyRing<F> {
    pub fn new(var_names: Vec<String>, ctx: F::Ctx) -> Arc<Self> {
        Arc::new(PolyRing { var_names, ctx })
    }

    pub fn n_vars(&self) -> usize {
        self.var_names.len()
    }

    pub fn zero(&self) -> Polynomial<F> {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(&self, n: i64) -> Polynomial<F> {
        Polynomial::from_terms(vec![(Monomial::one(self.n_vars()), F::from_i64(n, &self.ctx))])
    }

    pub fn var(&self, i: usize) -> Polynomial<F> {
        Polynomial::from_terms(vec![(
            Monomial::var(i, self.n_vars()),
            F::from_i64(1, &self.ctx),
        )])
    }

    pub fn monomial(&self, exps: Vec<u32>) -> Polynomial<F> {
        Polynomial::from_terms(vec![(Monomial::new(exps), F::from_i64(1, &self.ctx))])
    }

    /// The same ring with one fresh variable appended.
    pub fn extended(&self, fresh_name: &str) -> Arc<PolyRing<F>> {
        let mut names = self.var_names.clone();
        names.push(fresh_name.to_string());
        PolyRing::new(names, self.ctx.clone())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<F: Scalar> {
    terms: Vec<(Monomial, F)>,
}

impl<F: Scalar> Polynomial<F> {
    /// Build from arbitrary terms: sorts, merges, drops zeros.
    pub fn from_terms(mut terms: Vec<(Monomial, F)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, F)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    let s = last.1.clone() + c;
                    if s.is_zero() {
                        out.pop();
                    } else {
                        last.1 = s;
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                out.push((m, c));
            }
        }
        Polynomial { terms: out }
    }

    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn leading(&self) -> Option<&(Monomial, F)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.first().map(|t| &t.1)
    }

    /// Total degree; `None` is the zero polynomial's sentinel.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.degree() {
            None => true,
            Some(d) => self.terms.iter().all(|(m, _)| m.degree() == d),
        }
    }

    /// Coefficient of the monomial 1.
    pub fn constant_term(&self) -> Option<&F> {
        self.terms.last().and_then(|(m, c)| m.is_one().then_some(c))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Polynomial::from_terms(terms)
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, mono: &Monomial, coeff: &F) -> Self {
        if coeff.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono), c.clone() * coeff.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m, c) in &self.terms {
            for (m2, c2) in &other.terms {
                terms.push((m.mul(m2), c.clone() * c2.clone()));
            }
        }
        Polynomial::from_terms(terms)
    }

    pub fn scale(&self, coeff: &F) -> Self {
        if coeff.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.clone() * coeff.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self
    where
        F: Scalar,
    {
        let mut acc: Option<Polynomial<F>> = None;
        for _ in 0..k {
            acc = Some(match acc {
                None => self.clone(),
                Some(a) => a.mul(self),
            });
        }
        match acc {
            None => {
                // empty product: caller supplies constants via the ring, but
                // exponent 0 on a nonzero polynomial still has a well-defined
                // leading coefficient to reuse
                match self.leading_coeff() {
                    Some(c) => Polynomial::from_terms(vec![(
                        Monomial::one(self.terms[0].0.n_vars()),
                        c.clone() * c.clone().inv(),
                    )]),
                    None => panic!("0^0 is undefined here"),
                }
            }
            Some(a) => a,
        }
    }

    /// Divide every coefficient by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.clone().inv();
                self.scale(&inv)
            }
        }
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize, ctx: &F::Ctx) -> Self {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exps()[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[i] -= 1;
            terms.push((Monomial::new(exps), c.clone() * F::from_i64(e as i64, ctx)));
        }
        Polynomial::from_terms(terms)
    }

    /// Append a fresh variable with exponent 0 to every term.
    pub fn extend_ring(&self) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.extend(0), c.clone()))
                .collect(),
        }
    }

    pub fn display<'a>(&'a self, ring: &'a PolyRing<F>) -> PolyDisplay<'a, F> {
        PolyDisplay { poly: self, ring }
    }

    pub fn to_string_in(&self, ring: &PolyRing<F>) -> String {
        format!("{}", self.display(ring))
    }
}

pub struct PolyDisplay<'a, F: Scalar> {
    poly: &'a Polynomial<F>,
    ring: &'a PolyRing<F>,
}

impl<F: Scalar> fmt::Display for PolyDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.poly.terms.iter().enumerate() {
            let cs = c.to_string();
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", cs),
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", m.display(&self.ring.var_names))?;
            } else {
                write!(f, "{}*{}", mag, m.display(&self.ring.var_names))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Fp;

    fn ring() -> Arc<PolyRing<Fp>> {
        PolyRing::new(vec!["x".into(), "y".into()], 5)
    }

    #[test]
    fn arithmetic_and_normalization() {
        let r = ring();
        let x = r.var(0);
        let y = r.var(1);
        let f = x.mul(&x).add(&y.scale(&Fp::new(4, 5)));
        let g = y.clone();
        let s = f.add(&g);
        // x^2 + 4y + y = x^2 over F_5
        assert_eq!(s, x.mul(&x));
        assert_eq!(s.degree(), Some(2));
        assert!(f.sub(&f).is_zero());
        assert_eq!(f.sub(&f).degree(), None);
    }

    #[test]
    fn homogeneity() {
        let r = ring();
        let x = r.var(0);
        let f = x.mul(&x).add(&r.var(1));
        assert!(!f.is_homogeneous());
        assert!(x.mul(&r.var(1)).is_homogeneous());
        assert!(Polynomial::<Fp>::zero().is_homogeneous());
    }

    #[test]
    fn display_canonical() {
        let r = ring();
        let x = r.var(0);
        let y = r.var(1);
        let f = x.mul(&x).add(&y.scale(&Fp::new(3, 5))).add(&r.constant(1));
        assert_eq!(f.to_string_in(&r), "x^2 + 3*y + 1");
    }

    #[test]
    fn derivative() {
        let r = ring();
        let x = r.var(0);
        let f = x.mul(&x).mul(&r.var(1));
        assert_eq!(f.derivative(0, &r.ctx), x.mul(&r.var(1)).scale(&Fp::new(2, 5)));
    }
}
