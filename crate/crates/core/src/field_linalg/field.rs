//! Prime fields F_p with canonical representatives in `[0, p)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A prime modulus, checked by trial division.
///
/// Entries are stored as `u32` and products are formed in `u64`, so any
/// prime below 2^32 is accepted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p > u64::from(u32::MAX) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p as u32))
    }

    pub const fn two() -> Self {
        Prime(2)
    }

    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((u64::from(a) + u64::from(b)) % u64::from(self.0)) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        let p = u64::from(self.0);
        ((u64::from(a) + p - u64::from(b)) % p) as u32
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((u64::from(a) * u64::from(b)) % u64::from(self.0)) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    /// Multiplicative inverse by Fermat's little theorem.
    ///
    /// Panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(
            !a.is_multiple_of(self.0),
            "zero has no inverse in F_{}",
            self.0
        );
        self.pow(a, u64::from(self.0) - 2)
    }

    pub fn pow(self, base: u32, mut exp: u64) -> u32 {
        let p = u64::from(self.0);
        let mut base = u64::from(base) % p;
        let mut acc = 1 % p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc as u32
    }

    /// Reduces an arbitrary signed integer to its canonical representative.
    pub fn reduce(self, value: i64) -> u32 {
        value.rem_euclid(i64::from(self.0)) as u32
    }

    pub fn element(self, value: u32) -> Result<FieldElement> {
        if value >= self.0 {
            return Err(Error::ValueOutOfField {
                value: u64::from(value),
                p: self.0,
            });
        }
        Ok(FieldElement {
            value,
            modulus: self,
        })
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of F_p; `value` is always the canonical representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    modulus: Prime,
}

impl FieldElement {
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> Prime {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_field(self, other: Self) -> Prime {
        assert_eq!(
            self.modulus, other.modulus,
            "field elements from different fields"
        );
        self.modulus
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: Self) -> Self {
        let p = self.same_field(rhs);
        FieldElement {
            value: p.add(self.value, rhs.value),
            modulus: p,
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: Self) -> Self {
        let p = self.same_field(rhs);
        FieldElement {
            value: p.sub(self.value, rhs.value),
            modulus: p,
        }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: Self) -> Self {
        let p = self.same_field(rhs);
        FieldElement {
            value: p.mul(self.value, rhs.value),
            modulus: p,
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> Self {
        FieldElement {
            value: self.modulus.neg(self.value),
            modulus: self.modulus,
        }
    }
}

/// Which row-reduction kernel to run.
///
/// `Packed` only changes anything for p = 2, where rows are stored one bit
/// per column and eliminated with XOR. Both kernels produce the same
/// canonical output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Backend {
    #[default]
    Packed,
    Generic,
}

/// A prime field together with the kernel used for its linear algebra.
///
/// Equality compares the prime only; two matrices over F_2 with different
/// backends describe the same mathematical objects.
#[derive(Debug, Clone, Copy, Eq)]
pub struct Field {
    prime: Prime,
    backend: Backend,
}

impl Field {
    pub fn new(prime: Prime) -> Self {
        Field {
            prime,
            backend: Backend::default(),
        }
    }

    pub fn with_backend(prime: Prime, backend: Backend) -> Self {
        Field { prime, backend }
    }

    pub fn from_p(p: u64) -> Result<Self> {
        Ok(Field::new(Prime::new(p)?))
    }

    pub fn prime(self) -> Prime {
        self.prime
    }

    pub fn p(self) -> u32 {
        self.prime.get()
    }

    pub fn backend(self) -> Backend {
        self.backend
    }

    pub(crate) fn uses_bit_packing(self) -> bool {
        self.backend == Backend::Packed && self.prime.get() == 2
    }

    pub(crate) fn check_same(self, other: Field) -> Result<()> {
        if self.prime != other.prime {
            return Err(Error::ModulusMismatch {
                left: self.p(),
                right: other.p(),
            });
        }
        Ok(())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.prime == other.prime
    }
}

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.prime.hash(state);
    }
}
