//! Builders for the code families: Hamming, repetition, q-repeated, direct
//! and Kronecker-product codes.

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::linalg::{checked_power, normalize, Matrix};

/// Parameters of the `q`-ary Hamming code with redundancy `m_b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HammingParams {
    pub q: usize,
    pub m_b: usize,
    pub n_b: usize,
    pub k_b: usize,
}

impl HammingParams {
    pub fn new(q: usize, m_b: usize) -> Result<Self> {
        if m_b < 2 {
            return Err(Error::InvalidParameter(format!(
                "Hamming redundancy must be at least 2, got {m_b}"
            )));
        }
        let n_b = checked_power(q, m_b)
            .map(|p| (p - 1) / (q as u128 - 1))
            .filter(|&n| n <= 1 << 24)
            .ok_or(Error::Overflow("Hamming length"))? as usize;
        Ok(HammingParams {
            q,
            m_b,
            n_b,
            k_b: n_b - m_b,
        })
    }

    /// Recovers `m_b` from a length, if it is a Hamming length.
    pub fn from_length(q: usize, n: usize) -> Option<Self> {
        (2..64)
            .map_while(|m| HammingParams::new(q, m).ok().filter(|p| p.n_b <= n))
            .find(|p| p.n_b == n)
    }
}

/// Normalized representatives of the points of `PG(m - 1, q)`: the first
/// nonzero entry is 1. Sorted by `sum_j v_j q^j`, so position 0 is the least
/// significant digit.
pub fn projective_points(field: &FieldSpec, m: usize) -> Result<Vec<Vec<u8>>> {
    let q = field.q();
    let total = checked_power(q, m)
        .filter(|&t| t <= 1 << 24)
        .ok_or(Error::Overflow("projective points"))? as usize;
    let mut points = Vec::new();
    for code in 1..total {
        let mut v = vec![0u8; m];
        let mut c = code;
        for x in v.iter_mut() {
            *x = (c % q) as u8;
            c /= q;
        }
        if normalize(field, &v).is_some_and(|(lead, _)| lead == 1) {
            points.push(v);
        }
    }
    Ok(points)
}

/// Parity-check matrix of the Hamming code: one column per projective point.
pub fn hamming_parity_check(field: &FieldSpec, m_b: usize) -> Result<Matrix> {
    let p = HammingParams::new(field.q(), m_b)?;
    let points = projective_points(field, m_b)?;
    debug_assert_eq!(points.len(), p.n_b);
    Ok(Matrix::from_rows(field, &points)?.transpose())
}

/// The `[n_b, n_b - m_b, 3]_q` Hamming code.
pub fn hamming(field: &FieldSpec, m_b: usize) -> Result<LinearCode> {
    LinearCode::from_parity_check(&hamming_parity_check(field, m_b)?)
}

/// The `[n, 1, n]_q` repetition code.
pub fn repetition(field: &FieldSpec, n: usize) -> Result<LinearCode> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "repetition length must be positive".into(),
        ));
    }
    LinearCode::from_generator(&Matrix::from_rows(field, &[vec![1u8; n]])?)
}

/// `C' = { (c_0, x) : c_0 in F_q, x in C }`, the new coordinate placed first.
pub fn q_repeat(code: &LinearCode) -> Result<LinearCode> {
    let n = code.n();
    let mut rows = Vec::with_capacity(code.k() + 1);
    let mut unit = vec![0u8; n + 1];
    unit[0] = 1;
    rows.push(unit);
    for r in code.generator().row_iter() {
        let mut row = Vec::with_capacity(n + 1);
        row.push(0);
        row.extend_from_slice(r);
        rows.push(row);
    }
    LinearCode::from_generator(&Matrix::from_rows(code.field(), &rows)?)
}

/// Applies [`q_repeat`] `times` times.
pub fn q_repeat_times(code: &LinearCode, times: usize) -> Result<LinearCode> {
    let mut c = code.clone();
    for _ in 0..times {
        c = q_repeat(&c)?;
    }
    Ok(c)
}

/// The `[m + 1, m]` code with generator `[I | h]`.
pub fn direct(field: &FieldSpec, h: &[u8]) -> Result<LinearCode> {
    for &x in h {
        field.check(x as u64)?;
    }
    if h.iter().all(|&x| x == 0) {
        return Err(Error::ZeroVector);
    }
    let m = h.len();
    let rows: Vec<Vec<u8>> = (0..m)
        .map(|i| {
            let mut r = vec![0u8; m + 1];
            r[i] = 1;
            r[m] = h[i];
            r
        })
        .collect();
    LinearCode::from_generator(&Matrix::from_rows(field, &rows)?)
}

/// `A (x) B` with `A` the all-ones `1 x n_a` row and `B` the Hamming parity
/// check, i.e. `n_a` copies of `B` side by side. Copy `a` of column `b` sits
/// at position `a * n_b + b`.
pub fn kron_parity_check(field: &FieldSpec, n_a: usize, m_b: usize) -> Result<Matrix> {
    if n_a == 0 {
        return Err(Error::InvalidParameter("n_a must be positive".into()));
    }
    let a = Matrix::from_rows(field, &[vec![1u8; n_a]])?;
    a.kron(&hamming_parity_check(field, m_b)?)
}

/// The code with parity-check matrix [`kron_parity_check`].
pub fn kron_code(field: &FieldSpec, n_a: usize, m_b: usize) -> Result<LinearCode> {
    LinearCode::from_parity_check(&kron_parity_check(field, n_a, m_b)?)
}

/// Every nonzero linear code of length `n`, one per reduced row echelon
/// generator, in order of dimension.
pub fn all_linear_codes(field: &FieldSpec, n: usize) -> Result<Vec<LinearCode>> {
    let q = field.q();
    let mut out = Vec::new();
    for k in 1..=n {
        let mut pivots: Vec<usize> = (0..k).collect();
        loop {
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|i| {
                    let pv = &pivots;
                    ((pv[i] + 1)..n)
                        .filter(move |c| !pv.contains(c))
                        .map(move |c| (i, c))
                })
                .collect();
            let mut digits = vec![0u8; free.len()];
            loop {
                let mut rows = vec![vec![0u8; n]; k];
                for (i, &p) in pivots.iter().enumerate() {
                    rows[i][p] = 1;
                }
                for (&(i, c), &v) in free.iter().zip(&digits) {
                    rows[i][c] = v;
                }
                out.push(LinearCode::from_generator(&Matrix::from_rows(
                    field, &rows,
                )?)?);
                let mut pos = digits.len();
                let mut carried = true;
                while carried && pos > 0 {
                    pos -= 1;
                    if digits[pos] as usize + 1 == q {
                        digits[pos] = 0;
                    } else {
                        digits[pos] += 1;
                        carried = false;
                    }
                }
                if carried {
                    break;
                }
            }
            // next k-subset of 0..n in lexicographic order
            let mut i = k;
            while i > 0 && pivots[i - 1] == n - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            pivots[i - 1] += 1;
            for j in i..k {
                pivots[j] = pivots[j - 1] + 1;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::Budget;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::with_order(q).unwrap()
    }

    #[test]
    fn hamming_parity_checks() {
        let b = hamming_parity_check(&gf(2), 2).unwrap();
        assert_eq!(b.to_rows(), vec![vec![1, 0, 1], vec![0, 1, 1]]);
        let b = hamming_parity_check(&gf(3), 2).unwrap();
        assert_eq!(b.to_rows(), vec![vec![1, 0, 1, 1], vec![0, 1, 1, 2]]);
        assert!(matches!(
            hamming_parity_check(&gf(2), 1),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn hamming_parameters() {
        let budget = Budget::default();
        for (q, m, n, k) in [
            (2, 2, 3, 1),
            (2, 3, 7, 4),
            (3, 2, 4, 2),
            (4, 2, 5, 3),
            (2, 4, 15, 11),
        ] {
            let c = hamming(&gf(q), m).unwrap();
            assert_eq!((c.n(), c.k()), (n, k));
            assert_eq!(c.min_distance(&budget).unwrap(), 3);
            assert_eq!(c.covering_radius(&budget).unwrap(), 1);
        }
        assert_eq!(HammingParams::from_length(3, 13).map(|p| p.m_b), Some(3));
        assert_eq!(HammingParams::from_length(2, 6), None);
    }

    #[test]
    fn repetition_codes() {
        let budget = Budget::default();
        let words = repetition(&gf(3), 2).unwrap().codewords(&budget).unwrap();
        assert_eq!(words, vec![vec![0, 0], vec![1, 1], vec![2, 2]]);
        assert!(repetition(&gf(2), 1).unwrap().is_whole_space());
        assert!(repetition(&gf(2), 0).is_err());
    }

    #[test]
    fn q_repeat_examples() {
        let budget = Budget::default();
        let even = direct(&gf(2), &[1, 1]).unwrap();
        let r = q_repeat(&even).unwrap();
        assert_eq!((r.n(), r.k()), (4, 3));
        assert_eq!(r.min_distance(&budget).unwrap(), 1);
        assert_eq!(r.covering_radius(&budget).unwrap(), 1);
        let rep3 = repetition(&gf(3), 3).unwrap();
        let r = q_repeat(&rep3).unwrap();
        // the ternary repetition code of length 3 is not perfect: rho = 2
        assert_eq!(rep3.covering_radius(&budget).unwrap(), 2);
        assert_eq!(
            (r.n(), r.k(), r.covering_radius(&budget).unwrap()),
            (4, 2, 2)
        );
        assert_eq!(q_repeat_times(&rep3, 3).unwrap().n(), 6);
    }

    #[test]
    fn direct_examples() {
        let budget = Budget::default();
        let c = direct(&gf(3), &[2, 2]).unwrap();
        assert_eq!((c.n(), c.k(), c.min_distance(&budget).unwrap()), (3, 2, 2));
        assert_eq!(c.covering_radius(&budget).unwrap(), 1);
        let c = direct(&gf(2), &[1, 0]).unwrap();
        assert_eq!(c.min_distance(&budget).unwrap(), 1);
        assert_eq!(direct(&gf(2), &[0, 0]).unwrap_err(), Error::ZeroVector);
    }

    #[test]
    fn kron_examples() {
        let budget = Budget::default();
        let h = kron_parity_check(&gf(2), 2, 2).unwrap();
        assert_eq!(
            h.to_rows(),
            vec![vec![1, 0, 1, 1, 0, 1], vec![0, 1, 1, 0, 1, 1]]
        );
        let c = kron_code(&gf(2), 2, 2).unwrap();
        assert_eq!((c.n(), c.k(), c.min_distance(&budget).unwrap()), (6, 4, 2));
        assert_eq!(
            kron_code(&gf(2), 1, 3).unwrap(),
            hamming(&gf(2), 3).unwrap()
        );
        let c = kron_code(&gf(3), 2, 2).unwrap();
        assert_eq!(
            (c.n(), c.k(), c.covering_radius(&budget).unwrap()),
            (8, 6, 1)
        );
    }

    #[test]
    fn counts_all_subspaces() {
        // Gaussian binomial sums minus the zero space
        assert_eq!(all_linear_codes(&gf(2), 3).unwrap().len(), 15);
        assert_eq!(all_linear_codes(&gf(3), 3).unwrap().len(), 27);
        assert_eq!(all_linear_codes(&gf(2), 4).unwrap().len(), 66);
    }
}
