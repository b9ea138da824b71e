//! Arithmetic in GF(p) and GF(p²).
//!
//! GF(p²) is modelled as `GF(p)[t]/(t² − κ)` with `κ` the smallest quadratic
//! non-residue mod p. GF(p) sits inside as the elements with `c₁ = 0`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A field GF(p) (`kappa == None`) or GF(p²).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gf {
    p: u64,
    kappa: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: Gf,
    c0: u64,
    c1: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Smallest quadratic non-residue modulo an odd prime.
pub fn smallest_non_residue(p: u64) -> u64 {
    (2..p)
        .find(|&k| pow_mod(k, (p - 1) / 2, p) == p - 1)
        .expect("odd primes have non-residues")
}

fn check_odd_prime(p: u64) -> Result<()> {
    if p.is_multiple_of(2) || !is_prime(p) || p > u32::MAX as u64 {
        return Err(Error::InvalidParameter(format!("{p} is not an odd prime")));
    }
    Ok(())
}

impl Gf {
    /// GF(p).
    pub fn prime(p: u64) -> Result<Self> {
        check_odd_prime(p)?;
        Ok(Self { p, kappa: None })
    }

    /// GF(p²).
    pub fn quadratic(p: u64) -> Result<Self> {
        check_odd_prime(p)?;
        Ok(Self {
            p,
            kappa: Some(smallest_non_residue(p)),
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        if self.kappa.is_some() {
            2
        } else {
            1
        }
    }

    pub fn kappa(&self) -> Option<u64> {
        self.kappa
    }

    pub fn size(&self) -> u64 {
        self.p.pow(self.degree())
    }

    pub fn element(&self, c0: u64) -> FieldElement {
        FieldElement {
            field: *self,
            c0: c0 % self.p,
            c1: 0,
        }
    }

    /// `c₀ + c₁·t`; `c₁` must be zero in GF(p).
    pub fn element2(&self, c0: u64, c1: u64) -> FieldElement {
        debug_assert!(self.kappa.is_some() || c1.is_multiple_of(self.p));
        FieldElement {
            field: *self,
            c0: c0 % self.p,
            c1: if self.kappa.is_some() { c1 % self.p } else { 0 },
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// The generator `t` of GF(p²) over GF(p).
    pub fn t(&self) -> Option<FieldElement> {
        self.kappa.map(|_| self.element2(0, 1))
    }

    /// Elements in coefficient-lexicographic order, `(c₀, c₁)`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let q = if self.kappa.is_some() { self.p } else { 1 };
        (0..self.p).flat_map(move |c0| (0..q).map(move |c1| self.element2(c0, c1)))
    }

    /// Index of an element in [`Gf::elements`] order.
    pub fn index_of(&self, x: FieldElement) -> usize {
        if self.kappa.is_some() {
            (x.c0 * self.p + x.c1) as usize
        } else {
            x.c0 as usize
        }
    }
}

impl FieldElement {
    pub fn field(&self) -> Gf {
        self.field
    }

    pub fn coefficients(&self) -> (u64, u64) {
        (self.c0, self.c1)
    }

    pub fn is_zero(&self) -> bool {
        self.c0 == 0 && self.c1 == 0
    }

    /// Image under GF(p) ⊂ GF(p²).
    pub fn embed(&self, into: Gf) -> FieldElement {
        debug_assert_eq!(self.field.p, into.p);
        into.element2(self.c0, self.c1)
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = *self;
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. In GF(p²), `(c₀ + c₁t)⁻¹ = (c₀ − c₁t)/(c₀² − κc₁²)`.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.field.p;
        let kappa = self.field.kappa.unwrap_or(0);
        let norm = (self.c0 * self.c0 + (p - kappa % p) % p * (self.c1 * self.c1 % p)) % p;
        let norm_inv = pow_mod(norm, p - 2, p);
        Ok(FieldElement {
            field: self.field,
            c0: self.c0 * norm_inv % p,
            c1: (p - self.c1) % p * norm_inv % p,
        })
    }
}

impl Add for FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.field, rhs.field);
        let p = self.field.p;
        FieldElement {
            field: self.field,
            c0: (self.c0 + rhs.c0) % p,
            c1: (self.c1 + rhs.c1) % p,
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;

    fn neg(self) -> Self {
        let p = self.field.p;
        FieldElement {
            field: self.field,
            c0: (p - self.c0) % p,
            c1: (p - self.c1) % p,
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;

    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.field, rhs.field);
        let p = self.field.p;
        let kappa = self.field.kappa.unwrap_or(0);
        // (a + bt)(c + dt) = ac + κbd + (ad + bc)t
        let bd = self.c1 * rhs.c1 % p;
        FieldElement {
            field: self.field,
            c0: (self.c0 * rhs.c0 + kappa * bd) % p,
            c1: (self.c0 * rhs.c1 + self.c1 * rhs.c0) % p,
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.c0, self.c1) {
            (c0, 0) => write!(f, "{c0}"),
            (0, c1) => write!(f, "{c1}t"),
            (c0, c1) => write!(f, "{c0}+{c1}t"),
        }
    }
}
