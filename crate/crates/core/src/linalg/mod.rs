//! Dense linear algebra over a [`FieldSpec`].

mod matrix;
mod monomial;

pub use matrix::{Matrix, Rref};
pub use monomial::MonomialMap;

use crate::error::{Error, Result};
use crate::gf::FieldSpec;

/// A vector over a finite field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vector {
    field: FieldSpec,
    entries: Vec<u8>,
}

impl Vector {
    pub fn new(field: &FieldSpec, entries: Vec<u8>) -> Result<Self> {
        for &e in &entries {
            field.check(e as u64)?;
        }
        Ok(Vector {
            field: field.clone(),
            entries,
        })
    }

    pub fn zeros(field: &FieldSpec, n: usize) -> Self {
        Vector {
            field: field.clone(),
            entries: vec![0; n],
        }
    }

    /// `value` at position `pos`, zero elsewhere.
    pub fn unit(field: &FieldSpec, n: usize, pos: usize, value: u8) -> Self {
        let mut v = Self::zeros(field, n);
        v.entries[pos] = value;
        v
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<u8> {
        self.entries
    }

    pub fn weight(&self) -> usize {
        weight(&self.entries)
    }

    pub fn support(&self) -> Vec<usize> {
        support(&self.entries)
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                actual: other.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(Vector {
            field: self.field.clone(),
            entries: add(&self.field, &self.entries, &other.entries),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let f = &self.field;
        Ok(Vector {
            field: f.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: u8) -> Self {
        Vector {
            field: self.field.clone(),
            entries: self.entries.iter().map(|&a| self.field.mul(c, a)).collect(),
        }
    }

    pub fn distance(&self, other: &Self) -> Result<usize> {
        self.compatible(other)?;
        Ok(distance(&self.entries, &other.entries))
    }

    pub fn dot(&self, other: &Self) -> Result<u8> {
        self.compatible(other)?;
        Ok(dot(&self.field, &self.entries, &other.entries))
    }
}

pub fn weight(v: &[u8]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

pub fn support(v: &[u8]) -> Vec<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, _)| i)
        .collect()
}

pub fn distance(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

pub fn add(f: &FieldSpec, a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}

pub fn dot(f: &FieldSpec, a: &[u8], b: &[u8]) -> u8 {
    a.iter()
        .zip(b)
        .fold(0u8, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// `a += c * b` in place.
pub fn axpy(f: &FieldSpec, a: &mut [u8], c: u8, b: &[u8]) {
    if c == 0 {
        return;
    }
    for (x, &y) in a.iter_mut().zip(b) {
        *x = f.add(*x, f.mul(c, y));
    }
}

/// Scales `v` so its first nonzero entry is 1; returns the removed factor.
///
/// `v = factor * normalized`. Returns `None` for the zero vector.
pub fn normalize(f: &FieldSpec, v: &[u8]) -> Option<(u8, Vec<u8>)> {
    let lead = *v.iter().find(|&&x| x != 0)?;
    let inv = f.inv(lead).ok()?;
    Some((lead, v.iter().map(|&x| f.mul(inv, x)).collect()))
}

/// Index of `v` in `F_q^n` with position 0 as the most significant digit, so
/// that index order equals lexicographic order.
pub fn lex_index(q: usize, v: &[u8]) -> usize {
    v.iter().fold(0usize, |acc, &x| acc * q + x as usize)
}

pub fn from_lex_index(q: usize, n: usize, mut idx: usize) -> Vec<u8> {
    let mut v = vec![0u8; n];
    for slot in v.iter_mut().rev() {
        *slot = (idx % q) as u8;
        idx /= q;
    }
    v
}

/// `q^e` if it fits in `u128`.
pub fn checked_power(q: usize, e: usize) -> Option<u128> {
    (q as u128).checked_pow(u32::try_from(e).ok()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_and_support() {
        let f = FieldSpec::prime(3).unwrap();
        let v = Vector::new(&f, vec![0, 2, 0, 1]).unwrap();
        assert_eq!(v.weight(), 2);
        assert_eq!(v.support(), vec![1, 3]);
        assert!(Vector::new(&f, vec![3]).is_err());
    }

    #[test]
    fn lex_index_round_trip() {
        for idx in 0..81 {
            let v = from_lex_index(3, 4, idx);
            assert_eq!(lex_index(3, &v), idx);
        }
        assert_eq!(from_lex_index(2, 3, 1), vec![0, 0, 1]);
    }

    #[test]
    fn normalize_first_nonzero() {
        let f = FieldSpec::prime(5).unwrap();
        let (c, v) = normalize(&f, &[0, 3, 1]).unwrap();
        assert_eq!(v, vec![0, 1, 2]);
        assert_eq!(c, 3);
        assert!(normalize(&f, &[0, 0]).is_none());
    }
}
