use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::linalg::{normalize, Matrix, MonomialMap};

use super::{Case, Certificate};

/// Columns `first, e_0, e_1, ...` with dependent unit vectors skipped, as an
/// invertible `m x m` matrix.
fn basis_starting_with(field: &FieldSpec, first: &[u8]) -> Result<Matrix> {
    let m = first.len();
    let mut cols: Vec<Vec<u8>> = vec![first.to_vec()];
    for i in 0..m {
        if cols.len() == m {
            break;
        }
        let mut e = vec![0u8; m];
        e[i] = 1;
        cols.push(e);
        if Matrix::from_rows(field, &cols)?.rank() < cols.len() {
            cols.pop();
        }
    }
    Ok(Matrix::from_rows(field, &cols)?.transpose())
}

/// Automorphism of the Hamming code with parity check `b` induced by an
/// invertible `K` with `K b_0 = b_target`: from `K b_j = mu_j b_pi(j)`, the
/// map sends coordinate `j` to `pi(j)` with scale `mu_j`.
fn hamming_lift(field: &FieldSpec, b: &Matrix, target: usize) -> Result<(Vec<usize>, Vec<u8>)> {
    let u = basis_starting_with(field, &b.column(0))?;
    let v = basis_starting_with(field, &b.column(target))?;
    let u_inv = u
        .inverse()
        .ok_or_else(|| Error::InternalContradiction("basis is singular".into()))?;
    let k = v.mul(&u_inv)?;
    let kb = k.mul(b)?;
    let points: Vec<Vec<u8>> = (0..b.cols()).map(|j| b.column(j)).collect();
    let mut perm = Vec::with_capacity(b.cols());
    let mut scales = Vec::with_capacity(b.cols());
    for j in 0..b.cols() {
        let (mu, p) = normalize(field, &kb.column(j))
            .ok_or_else(|| Error::InternalContradiction("K sends a column to zero".into()))?;
        let pi = points
            .iter()
            .position(|x| *x == p)
            .ok_or_else(|| Error::InternalContradiction("image column is not a point".into()))?;
        perm.push(pi);
        scales.push(mu);
    }
    Ok((perm, scales))
}

/// Generators for `A (x) B`, where `B` is the parity check of the canonical
/// Hamming code of redundancy `m_b` (or `[1]` when `n_b = 1`).
fn kronecker_generators(
    field: &FieldSpec,
    n_a: usize,
    n_b: usize,
    m_b: usize,
) -> Result<Vec<MonomialMap>> {
    let n = n_a * n_b;
    let mut gens = vec![MonomialMap::identity(field, n)];
    if field.q() > 2 {
        gens.push(MonomialMap::scalar(field, n, field.primitive_element())?);
    }
    for a in 1..n_a {
        for b in 0..n_b {
            gens.push(MonomialMap::transposition(field, n, b, a * n_b + b));
        }
    }
    if n_b > 1 {
        let b = crate::constructions::hamming_parity_check(field, m_b)?;
        for target in 1..n_b {
            let (pi, mu) = hamming_lift(field, &b, target)?;
            let mut perm = vec![0usize; n];
            let mut scales = vec![0u8; n];
            for a in 0..n_a {
                for j in 0..n_b {
                    perm[a * n_b + j] = a * n_b + pi[j];
                    scales[a * n_b + j] = mu[j];
                }
            }
            gens.push(MonomialMap::new(field, perm, scales)?);
        }
    }
    Ok(gens)
}

/// Shifts maps on the base code past `p` leading repeated coordinates.
fn lift_past_repeats(
    field: &FieldSpec,
    gens: &[MonomialMap],
    p: usize,
) -> Result<Vec<MonomialMap>> {
    let mut out = Vec::with_capacity(gens.len() + p);
    for g in gens {
        let mut perm: Vec<usize> = (0..p).collect();
        perm.extend(g.perm().iter().map(|&x| x + p));
        let mut scales = vec![1u8; p];
        scales.extend_from_slice(g.scales());
        out.push(MonomialMap::new(field, perm, scales)?);
    }
    if field.q() > 2 {
        let n = p + gens.first().map_or(0, MonomialMap::len);
        for t in 0..p {
            let mut scales = vec![1u8; n];
            scales[t] = field.primitive_element();
            out.push(MonomialMap::new(field, (0..n).collect(), scales)?);
        }
    }
    Ok(out)
}

fn generators(cert: &Certificate) -> Result<Vec<MonomialMap>> {
    let canonical = cert.canonical.as_ref().ok_or(Error::NotClassified)?;
    let field = canonical.field();
    match cert.case {
        Case::NotApplicable => Err(Error::NotClassified),
        Case::D1Repeated => {
            let base = cert.base.as_deref().ok_or(Error::NotClassified)?;
            lift_past_repeats(field, &generators(base)?, cert.peel_count)
        }
        Case::D2FullPart | Case::D2Kronecker | Case::D3Hamming => {
            let (n_a, n_b, m_b) = match (cert.n_a, cert.n_b, cert.m_b) {
                (Some(a), Some(b), Some(m)) => (a, b, m),
                _ => return Err(Error::NotClassified),
            };
            kronecker_generators(field, n_a, n_b, m_b)
        }
    }
}

/// Generators of a group of automorphisms of the certificate's canonical
/// code, acting with `rho + 1 = 2` orbits on its cosets: coordinate swaps
/// between copies of one column, Hamming automorphisms applied to every copy,
/// and multiplication by a primitive element. Each map is checked to fix the
/// canonical code.
pub fn build_automorphisms(cert: &Certificate) -> Result<Vec<MonomialMap>> {
    let canonical = cert.canonical.as_ref().ok_or(Error::NotClassified)?;
    let gens = generators(cert)?;
    if let Some(i) = gens.iter().position(|g| !canonical.is_automorphism(g)) {
        return Err(Error::InternalContradiction(format!(
            "generator {i} does not fix the canonical code"
        )));
    }
    Ok(gens)
}

/// The generators of [`build_automorphisms`] conjugated back to the input
/// code: `sigma^-1 g sigma`, each checked to fix `code`.
pub fn input_automorphisms(cert: &Certificate, code: &LinearCode) -> Result<Vec<MonomialMap>> {
    let sigma = cert.equivalence.as_ref().ok_or(Error::NotClassified)?;
    let inv = sigma.inverse();
    let mut out = Vec::new();
    for g in build_automorphisms(cert)? {
        let h = inv.compose(&g.compose(sigma)?)?;
        if !code.is_automorphism(&h) {
            return Err(Error::InternalContradiction(
                "conjugated generator does not fix the code".into(),
            ));
        }
        out.push(h);
    }
    Ok(out)
}
