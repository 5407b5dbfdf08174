//! Dense polynomials over GF(p), used only to build extension-field tables.
//!
//! Coefficient vectors are stored low degree first.

/// Built-in moduli for every extension field with p^m <= 256.
///
/// Entries are `(p, m, coefficients)` with coefficients low degree first and
/// the leading 1 included. All entries are Conway polynomials, so `x` is a
/// primitive element in each field.
pub static DEFAULT_MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (7, 2, &[3, 6, 1]),
    (11, 2, &[2, 7, 1]),
    (13, 2, &[2, 12, 1]),
];

pub fn default_modulus(p: u32, m: u32) -> Option<Vec<u32>> {
    DEFAULT_MODULI
        .iter()
        .find(|(pp, mm, _)| *pp == p && *mm == m)
        .map(|(_, _, c)| c.to_vec())
}

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Remainder of `a` modulo a monic `b`.
pub fn rem_monic(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let lead = *r.last().unwrap();
        for (i, &bc) in b.iter().enumerate() {
            let t = (r[shift + i] + p - (lead * bc) % p) % p;
            r[shift + i] = t;
        }
        r = trim(r);
    }
    r
}

/// Product of two polynomials, reduced modulo the monic `modulus`.
pub fn mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    rem_monic(&out, modulus, p)
}

/// Exhaustive irreducibility test: no monic factor of degree 1..=deg/2.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut g = digits(idx, p, d);
            g.push(1);
            if rem_monic(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Base-p digits of `value`, low first, padded to `len`.
pub fn digits(mut value: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((value % p as u64) as u32);
        value /= p as u64;
    }
    out
}

pub fn from_digits(d: &[u32], p: u32) -> u64 {
    d.iter()
        .rev()
        .fold(0u64, |acc, &c| acc * p as u64 + c as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_default_moduli_are_irreducible() {
        for (p, m, c) in DEFAULT_MODULI {
            assert_eq!(c.len(), *m as usize + 1);
            assert_eq!(*c.last().unwrap(), 1);
            assert!(is_irreducible(c, *p), "p={p} m={m}");
        }
    }

    #[test]
    fn reducible_examples() {
        // x^2 + 1 = (x+1)^2 over GF(2)
        assert!(!is_irreducible(&[1, 0, 1], 2));
        // x^2 + 1 is irreducible over GF(3)
        assert!(is_irreducible(&[1, 0, 1], 3));
        // x^4 + x^2 + 1 = (x^2+x+1)^2 over GF(2)
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
    }

    #[test]
    fn reduction_of_omega_squared() {
        // x * x mod (x^2 + x + 1) = x + 1 over GF(2)
        assert_eq!(mul_mod(&[0, 1], &[0, 1], &[1, 1, 1], 2), vec![1, 1]);
    }
}
