//! Finite fields GF(p^m) with q <= 256, backed by full operation tables.
//!
//! Elements are encoded as integers in `0..q` whose base-p digits (low digit
//! first) are the coefficients of the element as a polynomial in the
//! generator `x`. For prime fields this is the usual residue.
//!
//! ```
//! use crcodes::gf::FieldSpec;
//!
//! let gf4 = FieldSpec::with_order(4).unwrap();
//! // omega * omega = omega + 1
//! assert_eq!(gf4.mul(2, 2), 3);
//! assert_eq!(gf4.inv(2).unwrap(), 3);
//! ```

mod poly;

pub use poly::DEFAULT_MODULI;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: usize = 256;

/// A finite field description together with its arithmetic tables.
///
/// Cloning is cheap (shared tables). Equality compares `(p, m, modulus)`.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<Tables>,
}

struct Tables {
    p: u32,
    m: u32,
    q: usize,
    modulus: Vec<u32>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

pub(crate) fn is_prime(n: u32) -> bool {
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

impl FieldSpec {
    /// Builds GF(p^m). For `m > 1` the modulus defaults to the built-in
    /// Conway polynomial when `modulus` is `None`.
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidParameter(
                "extension degree must be >= 1".into(),
            ));
        }
        let q = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
        if q > MAX_ORDER as u64 {
            return Err(Error::UnsupportedOrder(q));
        }
        let q = q as usize;
        let modulus = if m == 1 {
            match modulus {
                Some(c) if c != [0, 1] => {
                    return Err(Error::InvalidModulus("prime fields take no modulus".into()))
                }
                _ => vec![0, 1],
            }
        } else {
            let c = match modulus {
                Some(c) => c.to_vec(),
                None => poly::default_modulus(p, m).ok_or(Error::UnsupportedOrder(q as u64))?,
            };
            if c.len() != m as usize + 1 {
                return Err(Error::InvalidModulus(format!(
                    "expected {} coefficients, got {}",
                    m + 1,
                    c.len()
                )));
            }
            if c.iter().any(|&x| x >= p) {
                return Err(Error::InvalidModulus(format!("coefficients must be < {p}")));
            }
            if c[m as usize] != 1 {
                return Err(Error::InvalidModulus("modulus must be monic".into()));
            }
            if !poly::is_irreducible(&c, p) {
                return Err(Error::ReducibleModulus { p });
            }
            c
        };

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        let elems: Vec<Vec<u32>> = (0..q as u64)
            .map(|v| poly::digits(v, p, m as usize))
            .collect();
        for a in 0..q {
            for b in 0..q {
                let s: Vec<u32> = elems[a]
                    .iter()
                    .zip(&elems[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * q + b] = poly::from_digits(&s, p) as u8;
                let prod = if m == 1 {
                    vec![((a * b) % q) as u32]
                } else {
                    poly::mul_mod(&elems[a], &elems[b], &modulus, p)
                };
                mul[a * q + b] = poly::from_digits(&prod, p) as u8;
            }
        }
        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for a in 0..q {
            neg[a] = (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u8;
            if a != 0 {
                inv[a] = (1..q)
                    .find(|&b| mul[a * q + b] == 1)
                    .ok_or(Error::ReducibleModulus { p })? as u8;
            }
        }
        Ok(FieldSpec {
            inner: Arc::new(Tables {
                p,
                m,
                q,
                modulus,
                add,
                mul,
                neg,
                inv,
            }),
        })
    }

    /// Prime field GF(p).
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// Field of order `q` with the default modulus.
    pub fn with_order(q: u64) -> Result<Self> {
        let (p, m) = factor_prime_power(q)?;
        Self::new(p, m, None)
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn m(&self) -> u32 {
        self.inner.m
    }

    pub fn q(&self) -> usize {
        self.inner.q
    }

    /// Modulus coefficients, low degree first, leading 1 included.
    /// For prime fields this is `[0, 1]` (the polynomial `x`).
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn contains(&self, v: u64) -> bool {
        v < self.inner.q as u64
    }

    pub fn check(&self, v: u64) -> Result<u8> {
        if self.contains(v) {
            Ok(v as u8)
        } else {
            Err(Error::ElementOutOfRange {
                value: v,
                q: self.inner.q,
            })
        }
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.inner.add[a as usize * self.inner.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.inner.mul[a as usize * self.inner.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.inner.neg[a as usize]
    }

    pub fn inv(&self, a: u8) -> Result<u8> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inner.inv[a as usize])
    }

    pub fn div(&self, a: u8, b: u8) -> Result<u8> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u8, mut e: u64) -> u8 {
        let mut base = a;
        let mut acc = 1u8;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn order_of(&self, a: u8) -> Result<usize> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        Ok(k)
    }

    /// Smallest element (by encoding) generating the multiplicative group.
    pub fn primitive_element(&self) -> u8 {
        (1..self.q())
            .map(|a| a as u8)
            .find(|&a| self.order_of(a).unwrap() == self.q() - 1)
            .expect("every finite field has a primitive element")
    }

    /// All element encodings `0..q`.
    pub fn values(&self) -> impl Iterator<Item = u8> {
        (0..self.inner.q).map(|v| v as u8)
    }

    /// Nonzero element encodings `1..q`.
    pub fn nonzero(&self) -> impl Iterator<Item = u8> {
        (1..self.inner.q).map(|v| v as u8)
    }

    /// All q elements in ascending order, starting with zero.
    pub fn elements(&self) -> Vec<FieldElement> {
        self.values()
            .map(|value| FieldElement {
                field: self.clone(),
                value,
            })
            .collect()
    }

    pub fn element(&self, v: u64) -> Result<FieldElement> {
        Ok(FieldElement {
            field: self.clone(),
            value: self.check(v)?,
        })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            value: 0,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            value: 1,
        }
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.m == other.inner.m
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m() == 1 {
            write!(f, "GF({})", self.p())
        } else {
            write!(f, "GF({}^{}; {:?})", self.p(), self.m(), self.modulus())
        }
    }
}

pub fn factor_prime_power(q: u64) -> Result<(u32, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrimePower(q));
    }
    if p > u32::MAX as u64 {
        return Err(Error::UnsupportedOrder(q));
    }
    Ok((p as u32, m))
}

/// A field element bound to its field. Arithmetic across fields is refused.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FieldSpec,
    value: u8,
}

impl FieldElement {
    pub fn value(&self) -> u8 {
        self.value
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, value: u8) -> Self {
        FieldElement {
            field: self.field.clone(),
            value,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> Self {
        self.with(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.with(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.with(self.field.pow(self.value, e))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_fields() -> Vec<FieldSpec> {
        [2u64, 3, 4, 5, 7, 8, 9, 16]
            .iter()
            .map(|&q| FieldSpec::with_order(q).unwrap())
            .collect()
    }

    #[test]
    fn prime_field_examples() {
        let gf2 = FieldSpec::new(2, 1, None).unwrap();
        assert_eq!(gf2.add(1, 1), 0);
        assert_eq!(gf2.inv(1).unwrap(), 1);
        let gf3 = FieldSpec::new(3, 1, None).unwrap();
        assert_eq!(gf3.mul(2, 2), 1);
        assert_eq!(gf3.inv(2).unwrap(), 2);
    }

    #[test]
    fn gf4_matches_hand_reduction() {
        let gf4 = FieldSpec::new(2, 2, Some(&[1, 1, 1])).unwrap();
        // omega = x = 2, omega^2 = x + 1 = 3
        assert_eq!(gf4.mul(2, 2), 3);
        assert_eq!(gf4.inv(2).unwrap(), 3);
        assert_eq!(gf4.mul(2, 3), 1);
        assert_eq!(gf4, FieldSpec::with_order(4).unwrap());
    }

    #[test]
    fn element_lists() {
        assert_eq!(
            FieldSpec::with_order(2)
                .unwrap()
                .values()
                .collect::<Vec<_>>(),
            [0, 1]
        );
        assert_eq!(
            FieldSpec::with_order(3)
                .unwrap()
                .values()
                .collect::<Vec<_>>(),
            [0, 1, 2]
        );
        let e = FieldSpec::with_order(4).unwrap().elements();
        assert_eq!(
            e.iter().map(|x| x.value()).collect::<Vec<_>>(),
            [0, 1, 2, 3]
        );
    }

    #[test]
    fn error_paths() {
        assert_eq!(FieldSpec::new(4, 1, None).unwrap_err(), Error::NotPrime(4));
        assert_eq!(
            FieldSpec::new(2, 2, Some(&[1, 0, 1])).unwrap_err(),
            Error::ReducibleModulus { p: 2 }
        );
        assert_eq!(
            FieldSpec::new(2, 9, None).unwrap_err(),
            Error::UnsupportedOrder(512)
        );
        assert_eq!(
            FieldSpec::with_order(6).unwrap_err(),
            Error::NotPrimePower(6)
        );
        let gf3 = FieldSpec::prime(3).unwrap();
        assert_eq!(gf3.inv(0).unwrap_err(), Error::DivisionByZero);
        let gf2 = FieldSpec::prime(2).unwrap();
        assert_eq!(gf3.one().add(&gf2.one()).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn axioms_hold_exhaustively() {
        for f in small_fields() {
            let q = f.q() as u8;
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        for f in small_fields() {
            let p = f.p() as u64;
            for a in f.values() {
                for b in f.values() {
                    assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
                }
            }
        }
    }

    #[test]
    fn default_moduli_are_primitive() {
        for (p, m, _) in DEFAULT_MODULI {
            let f = FieldSpec::new(*p, *m, None).unwrap();
            // x is encoded as p
            assert_eq!(f.order_of(*p as u8).unwrap(), f.q() - 1, "{f:?}");
        }
    }

    #[test]
    fn all_orders_up_to_256_build() {
        for q in 2..=256u64 {
            if factor_prime_power(q).is_ok() {
                let f = FieldSpec::with_order(q).unwrap();
                assert_eq!(f.q() as u64, q);
                assert_eq!(f.order_of(f.primitive_element()).unwrap(), f.q() - 1);
            }
        }
    }
}
