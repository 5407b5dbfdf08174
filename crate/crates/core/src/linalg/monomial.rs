use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::gf::FieldSpec;

use super::{Matrix, Vector};

/// A linear automorphism of `F_q^n`: coordinate `i` is multiplied by
/// `scales[i]` and moved to position `perm[i]`.
///
/// `(sigma(v))[perm[i]] = scales[i] * v[i]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialMap {
    field: FieldSpec,
    perm: Vec<usize>,
    scales: Vec<u8>,
}

impl MonomialMap {
    pub fn new(field: &FieldSpec, perm: Vec<usize>, scales: Vec<u8>) -> Result<Self> {
        let n = perm.len();
        if scales.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: scales.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidPermutation(n));
            }
        }
        for (i, &s) in scales.iter().enumerate() {
            field.check(s as u64)?;
            if s == 0 {
                return Err(Error::ZeroScale(i));
            }
        }
        Ok(MonomialMap {
            field: field.clone(),
            perm,
            scales,
        })
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        MonomialMap {
            field: field.clone(),
            perm: (0..n).collect(),
            scales: vec![1; n],
        }
    }

    /// Swaps coordinates `i` and `j`.
    pub fn transposition(field: &FieldSpec, n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::identity(field, n);
        m.perm.swap(i, j);
        m
    }

    /// Multiplies every coordinate by `c`.
    pub fn scalar(field: &FieldSpec, n: usize, c: u8) -> Result<Self> {
        Self::new(field, (0..n).collect(), vec![c; n])
    }

    /// Uniformly random permutation with uniformly random nonzero scales.
    pub fn random<R: Rng + ?Sized>(field: &FieldSpec, n: usize, rng: &mut R) -> Self {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let q = field.q();
        let scales = (0..n).map(|_| rng.gen_range(1..q) as u8).collect();
        MonomialMap {
            field: field.clone(),
            perm,
            scales,
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn scales(&self) -> &[u8] {
        &self.scales
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.scales.iter().all(|&s| s == 1)
    }

    /// Applies the map to a raw slice of the right length.
    pub fn apply_slice(&self, v: &[u8]) -> Vec<u8> {
        debug_assert_eq!(v.len(), self.len());
        let mut out = vec![0u8; v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.perm[i]] = self.field.mul(self.scales[i], x);
        }
        out
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        if v.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if v.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                actual: v.len(),
            });
        }
        Vector::new(&self.field, self.apply_slice(v.entries()))
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &MonomialMap) -> Result<MonomialMap> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                actual: other.len(),
            });
        }
        let perm = other.perm.iter().map(|&p| self.perm[p]).collect();
        let scales = other
            .perm
            .iter()
            .zip(&other.scales)
            .map(|(&p, &s)| self.field.mul(self.scales[p], s))
            .collect();
        Ok(MonomialMap {
            field: self.field.clone(),
            perm,
            scales,
        })
    }

    pub fn inverse(&self) -> MonomialMap {
        let n = self.len();
        let mut perm = vec![0; n];
        let mut scales = vec![0; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            scales[self.perm[i]] = self.field.inv(self.scales[i]).expect("scales are nonzero");
        }
        MonomialMap {
            field: self.field.clone(),
            perm,
            scales,
        }
    }

    /// Monomial matrix `M` with `x M = sigma(x)`.
    pub fn to_matrix(&self) -> Matrix {
        let n = self.len();
        let mut data = vec![0u8; n * n];
        for i in 0..n {
            data[i * n + self.perm[i]] = self.scales[i];
        }
        Matrix::new(&self.field, n, n, data).expect("valid entries")
    }

    /// Image of a generator matrix: every row is mapped.
    pub fn apply_to_rows(&self, g: &Matrix) -> Result<Matrix> {
        if g.cols() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                actual: g.cols(),
            });
        }
        let rows: Vec<Vec<u8>> = g.row_iter().map(|r| self.apply_slice(r)).collect();
        if rows.is_empty() {
            return Ok(Matrix::zeros(&self.field, 0, g.cols()));
        }
        Matrix::from_rows(&self.field, &rows)
    }

    /// Parity-check matrix of `sigma(C)` from a parity-check matrix of `C`:
    /// column `perm[i]` becomes `scales[i]^-1` times column `i`.
    pub fn apply_to_parity_check(&self, h: &Matrix) -> Result<Matrix> {
        if h.cols() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                actual: h.cols(),
            });
        }
        let n = self.len();
        let mut data = vec![0u8; h.rows() * n];
        for i in 0..n {
            let s = self.field.inv(self.scales[i]).expect("scales are nonzero");
            for r in 0..h.rows() {
                data[r * n + self.perm[i]] = self.field.mul(s, h.get(r, i));
            }
        }
        Matrix::new(&self.field, h.rows(), n, data)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn examples() {
        let f2 = FieldSpec::prime(2).unwrap();
        let v = Vector::new(&f2, vec![1, 0]).unwrap();
        assert_eq!(MonomialMap::identity(&f2, 2).apply(&v).unwrap(), v);
        let swap = MonomialMap::new(&f2, vec![1, 0], vec![1, 1]).unwrap();
        assert_eq!(swap.apply(&v).unwrap().entries(), &[0, 1]);

        let f3 = FieldSpec::prime(3).unwrap();
        let s = MonomialMap::new(&f3, vec![0, 1], vec![2, 1]).unwrap();
        let v = Vector::new(&f3, vec![1, 1]).unwrap();
        assert_eq!(s.apply(&v).unwrap().entries(), &[2, 1]);
    }

    #[test]
    fn rejects_bad_maps() {
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(
            MonomialMap::new(&f3, vec![0, 0], vec![1, 1]).unwrap_err(),
            Error::InvalidPermutation(2)
        );
        assert_eq!(
            MonomialMap::new(&f3, vec![1, 0], vec![1, 0]).unwrap_err(),
            Error::ZeroScale(1)
        );
        let m = MonomialMap::identity(&f3, 2);
        let v = Vector::new(&f3, vec![1, 1, 1]).unwrap();
        assert!(matches!(m.apply(&v), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn inverse_compose_and_matrix_agree() {
        let f = FieldSpec::with_order(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let a = MonomialMap::random(&f, 6, &mut rng);
            let b = MonomialMap::random(&f, 6, &mut rng);
            let v: Vec<u8> = (0..6).map(|_| rng.gen_range(0..4)).collect();
            assert_eq!(a.inverse().apply_slice(&a.apply_slice(&v)), v);
            assert_eq!(
                a.compose(&b).unwrap().apply_slice(&v),
                a.apply_slice(&b.apply_slice(&v))
            );
            let row = Matrix::from_rows(&f, std::slice::from_ref(&v)).unwrap();
            assert_eq!(
                row.mul(&a.to_matrix()).unwrap().row(0),
                a.apply_slice(&v).as_slice()
            );
            assert!(a.compose(&a.inverse()).unwrap().is_identity());
        }
    }
}
