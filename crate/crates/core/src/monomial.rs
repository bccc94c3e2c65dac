//! Monomials as exponent vectors, ordered by degree-reverse-lexicographic.

use std::cmp::Ordering;
use std::fmt;

/// Exponent vector of a monomial in a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n_vars: usize) -> Self {
        Monomial {
            exps: vec![0; n_vars],
        }
    }

    pub fn var(i: usize, n_vars: usize) -> Self {
        let mut exps = vec![0; n_vars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn n_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variables appearing with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
    }

    /// Append one fresh variable with the given exponent (used by the
    /// radical-membership trick).
    pub fn extend(&self, exp: u32) -> Monomial {
        let mut exps = self.exps.clone();
        exps.push(exp);
        Monomial { exps }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|e| e * k).collect(),
        }
    }

    pub fn display<'a>(&'a self, var_names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay {
            mono: self,
            var_names,
        }
    }
}

/// Degree-reverse-lexicographic: higher total degree wins; on ties the
/// monomial with the smaller exponent in the last differing variable wins.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.exps.iter().zip(&other.exps).rev() {
            match a.cmp(b) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    var_names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.var_names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degrevlex_order() {
        // x^2 > xy > y^2 > x > y > 1 in two variables
        let x2 = m(&[2, 0]);
        let xy = m(&[1, 1]);
        let y2 = m(&[0, 2]);
        let x = m(&[1, 0]);
        let y = m(&[0, 1]);
        let one = m(&[0, 0]);
        let mut v = vec![one.clone(), y.clone(), xy.clone(), x2.clone(), x.clone(), y2.clone()];
        v.sort_by(|a, b| b.cmp(a));
        assert_eq!(v, vec![x2, xy, y2, x, y, one]);
    }

    #[test]
    fn degrevlex_three_vars() {
        // classic: x*z < y^2 in degrevlex(x > y > z)
        let xz = m(&[1, 0, 1]);
        let y2 = m(&[0, 2, 0]);
        assert!(y2 > xz);
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[2, 1]);
        let b = m(&[1, 3]);
        assert!(!a.divides(&b));
        assert_eq!(a.lcm(&b), m(&[2, 3]));
        assert_eq!(m(&[1, 1]).div_into(&a), m(&[1, 0]));
    }
}
