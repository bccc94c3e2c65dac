//! Coefficient fields: arbitrary-precision rationals and prime fields F_p.
//!
//! All arithmetic is exact. `Fp` elements carry their modulus so that values
//! from different sessions cannot be mixed silently; the identities produced
//! by [`num_traits::Zero`]/[`num_traits::One`] are modulus-free and acquire a
//! modulus on first contact with a bound element.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A coefficient field for the polynomial engine.
pub trait Scalar:
    Clone
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Session context needed to embed integers: the prime for `Fp`, nothing for `Rat`.
    type Ctx: Clone + Eq + fmt::Debug + Send + Sync;

    fn from_i64(n: i64, ctx: &Self::Ctx) -> Self;

    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    /// Short field name for fingerprints, e.g. `Q` or `F5`.
    fn field_name(ctx: &Self::Ctx) -> String;
}

/// Arbitrary-precision rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        Rat(self.0 + rhs.0)
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        Rat(self.0 - rhs.0)
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        Rat(self.0 * rhs.0)
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        Rat(self.0 / rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Zero for Rat {
    fn zero() -> Self {
        Rat(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rat {
    fn one() -> Self {
        Rat(BigRational::one())
    }
}

impl Scalar for Rat {
    type Ctx = ();

    fn from_i64(n: i64, _ctx: &()) -> Self {
        Rat::from_int(n)
    }

    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Rat(self.0.recip())
    }

    fn field_name(_ctx: &()) -> String {
        "Q".to_string()
    }
}

/// Element of F_p for a prime p fitting in 62 bits.
///
/// `p == 0` marks the modulus-free constants 0 and 1; they never persist
/// inside polynomials because every stored coefficient passes through a
/// context-aware constructor or through arithmetic with a bound element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    pub fn new(v: i64, p: u64) -> Self {
        assert!(p >= 2, "modulus must be at least 2");
        let m = v.rem_euclid(p as i64) as u64;
        Fp { v: m, p }
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn join(a: u64, b: u64) -> u64 {
        match (a, b) {
            (0, q) => q,
            (q, 0) => q,
            (q, r) => {
                assert_eq!(q, r, "mixed moduli {q} and {r}");
                q
            }
        }
    }

    fn reduced(v: u128, p: u64) -> Fp {
        if p == 0 {
            Fp { v: v as u64, p: 0 }
        } else {
            Fp {
                v: (v % p as u128) as u64,
                p,
            }
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let p = Fp::join(self.p, rhs.p);
        Fp::reduced(self.v as u128 + rhs.v as u128, p)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self + (-rhs)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let p = Fp::join(self.p, rhs.p);
        Fp::reduced(self.v as u128 * rhs.v as u128, p)
    }
}

impl Div for Fp {
    type Output = Fp;
    fn div(self, rhs: Fp) -> Fp {
        self * rhs.inv()
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.v == 0 {
            self
        } else {
            assert!(self.p != 0, "negation of an unbound constant");
            Fp {
                v: self.p - self.v,
                p: self.p,
            }
        }
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp { v: 0, p: 0 }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp { v: 1, p: 0 }
    }
}

impl Scalar for Fp {
    type Ctx = u64;

    fn from_i64(n: i64, p: &u64) -> Self {
        Fp::new(n, *p)
    }

    fn inv(&self) -> Self {
        assert!(self.v != 0, "inverse of zero");
        assert!(self.p != 0, "inverse of an unbound constant");
        // extended Euclid
        let (mut r0, mut r1) = (self.p as i128, self.v as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        assert!(r0 == 1, "{} is not invertible mod {}", self.v, self.p);
        Fp::new(t0 as i64, self.p)
    }

    fn field_name(p: &u64) -> String {
        format!("F{p}")
    }
}

/// Runtime description of a coefficient field, used by the CLI layer to pick
/// the generic instantiation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FieldSpec {
    Q,
    Fp(u64),
}

impl FieldSpec {
    pub fn name(&self) -> String {
        match self {
            FieldSpec::Q => "Q".to_string(),
            FieldSpec::Fp(p) => format!("F{p}"),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Primality check for moduli supplied at session start.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_arithmetic_reduces() {
        let a = Fp::new(3, 5);
        let b = Fp::new(4, 5);
        assert_eq!(a + b, Fp::new(2, 5));
        assert_eq!(a * b, Fp::new(2, 5));
        assert_eq!(-a, Fp::new(2, 5));
        assert_eq!(a.inv() * a, Fp::new(1, 5));
    }

    #[test]
    fn fp_unbound_identities_bind_on_contact() {
        let a = Fp::new(3, 7);
        assert_eq!(Fp::zero() + a, a);
        assert_eq!(Fp::one() * a, a);
        assert!((a - a).is_zero());
    }

    #[test]
    fn rat_canonical_form() {
        let half = Rat::from_frac(2, 4);
        assert_eq!(half, Rat::from_frac(1, 2));
        assert_eq!(half.to_string(), "1/2");
        assert_eq!(Rat::from_frac(1, -2).to_string(), "-1/2");
        assert_eq!((half.clone() + half).to_string(), "1");
    }

    #[test]
    fn fp_inverse_large_prime() {
        let a = Fp::new(12345, 32003);
        assert_eq!(a.inv() * a, Fp::new(1, 32003));
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(32003));
        assert!(!is_prime(32001));
        assert!(!is_prime(1));
    }
}
