//! Classification of completely regular linear codes with covering radius 1.
//!
//! Such a code falls in exactly one case:
//!
//! * `D1_REPEATED`: minimum distance 1. Coordinates whose parity-check column
//!   is zero are peeled off; what remains is classified recursively.
//! * `D2_FULLPART`: minimum distance 2 and dimension `n - 1`. Equivalent to
//!   the code with an all-ones parity check.
//! * `D2_KRONECKER`: minimum distance 2 and dimension below `n - 1`.
//!   Equivalent to the code with parity check `A (x) B`, where `A` is the
//!   all-ones `1 x n_a` row and `B` a Hamming parity check.
//! * `D3_HAMMING`: minimum distance 3, a Hamming code.
//!
//! Every certificate carries a monomial map onto the canonical code of its
//! case, checked by parity-check row-space equality before it is returned.

mod automorphisms;

pub use automorphisms::{build_automorphisms, input_automorphisms};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::code::{Budget, LinearCode};
use crate::constructions::{
    direct, hamming, kron_code, projective_points, q_repeat_times, HammingParams,
};
use crate::error::{Error, Result};
use crate::linalg::{checked_power, normalize, MonomialMap};
use crate::regularity::{is_completely_regular, Regularity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    D1Repeated,
    D2FullPart,
    D2Kronecker,
    D3Hamming,
    NotApplicable,
}

impl Case {
    pub fn as_str(self) -> &'static str {
        match self {
            Case::D1Repeated => "D1_REPEATED",
            Case::D2FullPart => "D2_FULLPART",
            Case::D2Kronecker => "D2_KRONECKER",
            Case::D3Hamming => "D3_HAMMING",
            Case::NotApplicable => "NOT_APPLICABLE",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Case::D1Repeated,
            Case::D2FullPart,
            Case::D2Kronecker,
            Case::D3Hamming,
            Case::NotApplicable,
        ]
        .into_iter()
        .find(|c| c.as_str() == s)
        .ok_or_else(|| Error::Parse(format!("unknown case {s:?}")))
    }
}

/// Result of [`classify`].
///
/// For classified codes, `equivalence` maps the input code onto `canonical`
/// and `n_a`, `n_b`, `m_b` are the parameters of `A (x) B`: a Hamming code
/// has `n_a = 1`, the full-part case has `n_b = m_b = 1`. A repeated code
/// reports the parameters of its peeled base, whose certificate is `base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub case: Case,
    pub peel_count: usize,
    pub n_a: Option<usize>,
    pub n_b: Option<usize>,
    pub m_b: Option<usize>,
    pub partition: Vec<Vec<usize>>,
    pub equivalence: Option<MonomialMap>,
    pub canonical: Option<LinearCode>,
    pub reason: Option<String>,
    pub base: Option<Box<Certificate>>,
    pub verified: bool,
}

impl Certificate {
    fn not_applicable(reason: impl Into<String>) -> Self {
        Certificate {
            case: Case::NotApplicable,
            peel_count: 0,
            n_a: None,
            n_b: None,
            m_b: None,
            partition: Vec::new(),
            equivalence: None,
            canonical: None,
            reason: Some(reason.into()),
            base: None,
            verified: false,
        }
    }

    pub fn is_classified(&self) -> bool {
        self.case != Case::NotApplicable
    }
}

/// A code with its repeated coordinates removed.
#[derive(Clone, Debug)]
pub struct Peeled {
    pub base: LinearCode,
    /// Removed coordinates, increasing.
    pub removed: Vec<usize>,
    /// Coordinates of the input that form `base`, increasing.
    pub kept: Vec<usize>,
}

/// Strips every coordinate whose unit vector is a codeword (equivalently,
/// whose parity-check column is zero). The input is the q-repeated code of
/// the result, applied once per removed coordinate.
pub fn peel_repeats(code: &LinearCode, budget: &Budget) -> Result<Peeled> {
    if code.is_whole_space() {
        return Err(Error::WholeSpace);
    }
    if code.min_distance(budget)? != 1 {
        return Err(Error::MinDistanceNotOne);
    }
    let removed = code.parity_check().zero_columns();
    let kept: Vec<usize> = (0..code.n()).filter(|j| !removed.contains(j)).collect();
    let base = code.project(&kept)?;
    if base.k() + removed.len() != code.k() {
        return Err(Error::InternalContradiction(
            "peeled dimensions do not add up".into(),
        ));
    }
    Ok(Peeled {
        base,
        removed,
        kept,
    })
}

/// Coordinate blocks joined by supports of weight-two codewords, each sorted,
/// ordered by smallest element.
///
/// Two coordinates carry a weight-two codeword exactly when their
/// parity-check columns are nonzero and proportional, so blocks are the
/// classes of proportional columns.
pub fn weight2_partition(code: &LinearCode) -> Result<Vec<Vec<usize>>> {
    let f = code.field();
    let h = code.parity_check();
    let mut classes: BTreeMap<Vec<u8>, Vec<usize>> = BTreeMap::new();
    for j in 0..code.n() {
        let (_, p) = normalize(f, &h.column(j)).ok_or_else(|| {
            Error::PreconditionViolated(format!("coordinate {j} has a zero parity-check column"))
        })?;
        classes.entry(p).or_default().push(j);
    }
    let mut blocks: Vec<Vec<usize>> = classes.into_values().collect();
    blocks.sort();
    if blocks.iter().any(|b| b.len() != blocks[0].len()) {
        return Err(Error::PreconditionViolated(format!(
            "weight-two blocks have unequal sizes {:?}",
            blocks.iter().map(Vec::len).collect::<Vec<_>>()
        )));
    }
    Ok(blocks)
}

/// For each block, the codewords supported inside it restricted to it. Each
/// must be an `[n_a, n_a - 1, 2]` completely regular code with generator
/// `[I | h]`, `wt(h) = n_a - 1`.
pub fn extract_block_codes(
    code: &LinearCode,
    partition: &[Vec<usize>],
    budget: &Budget,
) -> Result<Vec<LinearCode>> {
    let mut out = Vec::with_capacity(partition.len());
    for block in partition {
        let n_a = block.len();
        let d = code.subcode_on(block).map_err(|e| {
            Error::PreconditionViolated(format!("block {block:?} carries no codeword ({e})"))
        })?;
        if d.k() + 1 != n_a || d.min_distance(budget)? != 2 {
            return Err(Error::PreconditionViolated(format!(
                "block {block:?} gives a [{}, {}] code, expected [{n_a}, {}, 2]",
                d.n(),
                d.k(),
                n_a - 1
            )));
        }
        let g = d.generator();
        let shaped = (0..d.k()).all(|i| (0..d.k()).all(|j| g.get(i, j) == u8::from(i == j)))
            && (0..d.k()).all(|i| g.get(i, n_a - 1) != 0);
        if !shaped || !is_completely_regular(&d, budget)?.is_regular() {
            return Err(Error::PreconditionViolated(format!(
                "block {block:?} is not of the form [I | h] with a full-weight h"
            )));
        }
        out.push(d);
    }
    Ok(out)
}

/// Codewords supported inside `representatives`, restricted to them; must
/// be a Hamming code with covering radius 1.
pub fn extract_hamming_core(
    code: &LinearCode,
    representatives: &[usize],
    budget: &Budget,
) -> Result<(LinearCode, HammingParams)> {
    let q = code.field().q();
    let len = representatives.len();
    let params = HammingParams::from_length(q, len).ok_or_else(|| {
        Error::PreconditionViolated(format!("{len} is not a {q}-ary Hamming length"))
    })?;
    if len < 3 {
        return Err(Error::PreconditionViolated(
            "fewer than three blocks".into(),
        ));
    }
    let core = code.subcode_on(representatives)?;
    if core.k() != params.k_b
        || core.min_distance(budget)? != 3
        || core.covering_radius(budget)? != 1
    {
        return Err(Error::PreconditionViolated(format!(
            "core on {representatives:?} is not a [{}, {}, 3] Hamming code",
            params.n_b, params.k_b
        )));
    }
    Ok((core, params))
}

/// Monomial map sending coordinate `j` onto the copy of `B`'s column that is
/// proportional to column `j` of `code`'s parity check. Copies are taken in
/// the order the coordinates appear within each class.
fn column_alignment(code: &LinearCode, m: usize, n_a: usize) -> Result<MonomialMap> {
    let f = code.field();
    let h = code.parity_check();
    if h.rows() != m {
        return Err(Error::InternalContradiction(
            "redundancy differs from m_b".into(),
        ));
    }
    let points = projective_points(f, m)?;
    let n_b = points.len();
    let index: BTreeMap<&[u8], usize> = points
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let mut used = vec![0usize; n_b];
    let mut perm = vec![0usize; code.n()];
    let mut scales = vec![0u8; code.n()];
    for j in 0..code.n() {
        let (lambda, p) = normalize(f, &h.column(j))
            .ok_or_else(|| Error::InternalContradiction("zero parity-check column".into()))?;
        let b = *index.get(p.as_slice()).ok_or_else(|| {
            Error::InternalContradiction("column is not a projective point".into())
        })?;
        if used[b] == n_a {
            return Err(Error::InternalContradiction(format!(
                "point {p:?} occurs more than {n_a} times"
            )));
        }
        perm[j] = used[b] * n_b + b;
        used[b] += 1;
        scales[j] = lambda;
    }
    MonomialMap::new(f, perm, scales)
}

/// Checks `map(code) = canonical` by parity-check row spaces.
fn verify(code: &LinearCode, map: &MonomialMap, canonical: &LinearCode) -> Result<()> {
    let h = map.apply_to_parity_check(code.parity_check())?;
    if h.same_row_space(canonical.parity_check()) {
        Ok(())
    } else {
        Err(Error::InternalContradiction(
            "equivalence map does not reach the canonical code".into(),
        ))
    }
}

/// Debug oracle: equality of codeword sets after applying `map`.
pub fn verify_by_codewords(
    code: &LinearCode,
    map: &MonomialMap,
    canonical: &LinearCode,
    budget: &Budget,
) -> Result<bool> {
    let mut image: Vec<Vec<u8>> = code
        .codewords(budget)?
        .iter()
        .map(|c| map.apply_slice(c))
        .collect();
    let mut target = canonical.codewords(budget)?;
    image.sort();
    target.sort();
    Ok(image == target)
}

fn certified(
    case: Case,
    code: &LinearCode,
    map: MonomialMap,
    canonical: LinearCode,
    (n_a, n_b, m_b): (usize, usize, usize),
    partition: Vec<Vec<usize>>,
) -> Result<Certificate> {
    verify(code, &map, &canonical)?;
    Ok(Certificate {
        case,
        peel_count: 0,
        n_a: Some(n_a),
        n_b: Some(n_b),
        m_b: Some(m_b),
        partition,
        equivalence: Some(map),
        canonical: Some(canonical),
        reason: None,
        base: None,
        verified: true,
    })
}

/// Decides which case applies and certifies an equivalence to the canonical
/// code. Codes that are not completely regular or whose covering radius is
/// not 1 give a `NOT_APPLICABLE` certificate with a reason.
pub fn classify(code: &LinearCode, budget: &Budget) -> Result<Certificate> {
    let rho = code.covering_radius(budget)?;
    if rho != 1 {
        return Ok(Certificate::not_applicable(format!(
            "covering radius {rho}"
        )));
    }
    let profile = match is_completely_regular(code, budget)? {
        Regularity::Regular(p) => p,
        Regularity::Irregular { leader_weight, .. } => {
            return Ok(Certificate::not_applicable(format!(
                "not completely regular: cosets of weight {leader_weight} have different weight distributions"
            )))
        }
    };
    match code.min_distance(budget)? {
        1 => classify_repeated(code, budget),
        2 if code.k() + 1 == code.n() => classify_full_part(code),
        2 => classify_kronecker(code, profile.n_a().unwrap_or(0) as usize, budget),
        3 => classify_hamming(code, budget),
        d => Err(Error::InternalContradiction(format!(
            "minimum distance {d} with covering radius 1"
        ))),
    }
}

fn classify_repeated(code: &LinearCode, budget: &Budget) -> Result<Certificate> {
    let f = code.field();
    if code.k() == code.parity_check().zero_columns().len() {
        return Ok(Certificate::not_applicable("reduced code is the zero code"));
    }
    let peeled = peel_repeats(code, budget)?;
    let base = classify(&peeled.base, budget)?;
    let (Some(base_map), Some(base_canonical)) = (&base.equivalence, &base.canonical) else {
        return Err(Error::InternalContradiction(
            "peeled code of a completely regular code is not classified".into(),
        ));
    };
    let p = peeled.removed.len();
    let mut perm = vec![0usize; code.n()];
    let mut scales = vec![1u8; code.n()];
    for (t, &z) in peeled.removed.iter().enumerate() {
        perm[z] = t;
    }
    for (i, &j) in peeled.kept.iter().enumerate() {
        perm[j] = p + base_map.perm()[i];
        scales[j] = base_map.scales()[i];
    }
    let map = MonomialMap::new(f, perm, scales)?;
    let canonical = q_repeat_times(base_canonical, p)?;
    verify(code, &map, &canonical)?;
    Ok(Certificate {
        case: Case::D1Repeated,
        peel_count: p,
        n_a: base.n_a,
        n_b: base.n_b,
        m_b: base.m_b,
        partition: Vec::new(),
        equivalence: Some(map),
        canonical: Some(canonical),
        reason: None,
        base: Some(Box::new(base)),
        verified: true,
    })
}

/// Canonical full-part code: generator `[I | h]` with `h` all `-1`, whose
/// parity check is the all-ones row.
pub fn full_part_code(field: &crate::gf::FieldSpec, n: usize) -> Result<LinearCode> {
    let minus_one = field.neg(1);
    direct(field, &vec![minus_one; n - 1])
}

fn classify_full_part(code: &LinearCode) -> Result<Certificate> {
    let f = code.field();
    let n = code.n();
    let h = code.parity_check();
    let scales: Vec<u8> = (0..n).map(|j| h.get(0, j)).collect();
    let map = MonomialMap::new(f, (0..n).collect(), scales)?;
    let canonical = full_part_code(f, n)?;
    certified(
        Case::D2FullPart,
        code,
        map,
        canonical,
        (n, 1, 1),
        vec![(0..n).collect()],
    )
}

fn classify_kronecker(code: &LinearCode, n_a: usize, budget: &Budget) -> Result<Certificate> {
    let f = code.field();
    let q = f.q();
    let n = code.n();
    let r = code.redundancy();
    let lhs = (q as u128 - 1) * n as u128;
    let rhs = checked_power(q, r).map(|p| (p - 1) * n_a as u128);
    if rhs != Some(lhs) || n_a < 2 {
        return Err(Error::InternalContradiction(format!(
            "sphere-counting identity fails: (q-1)n = {lhs}, n_a = {n_a}"
        )));
    }
    let partition = weight2_partition(code)?;
    if partition.iter().any(|b| b.len() != n_a) {
        return Err(Error::InternalContradiction(format!(
            "weight-two blocks do not have size n_a = {n_a}"
        )));
    }
    extract_block_codes(code, &partition, budget)?;
    let reps: Vec<usize> = partition.iter().map(|b| b[0]).collect();
    let (core, params) = extract_hamming_core(code, &reps, budget)?;
    let blocks = partition.len();
    if blocks * (n_a - 1) + core.k() != code.k() || params.m_b != r {
        return Err(Error::InternalContradiction(
            "dimension accounting fails".into(),
        ));
    }
    let map = column_alignment(code, params.m_b, n_a)?;
    let canonical = kron_code(f, n_a, params.m_b)?;
    certified(
        Case::D2Kronecker,
        code,
        map,
        canonical,
        (n_a, params.n_b, params.m_b),
        partition,
    )
}

fn classify_hamming(code: &LinearCode, _budget: &Budget) -> Result<Certificate> {
    let f = code.field();
    let params = HammingParams::from_length(f.q(), code.n())
        .filter(|p| p.m_b == code.redundancy())
        .ok_or_else(|| {
            Error::InternalContradiction("perfect code without Hamming parameters".into())
        })?;
    let map = column_alignment(code, params.m_b, 1)?;
    let canonical = hamming(f, params.m_b)?;
    certified(
        Case::D3Hamming,
        code,
        map,
        canonical,
        (1, params.n_b, params.m_b),
        Vec::new(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{q_repeat, repetition};
    use crate::gf::FieldSpec;
    use crate::linalg::Matrix;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::with_order(q).unwrap()
    }

    #[test]
    fn kronecker_partition_and_blocks() {
        let b = Budget::default();
        let c = kron_code(&gf(2), 2, 2).unwrap();
        let p = weight2_partition(&c).unwrap();
        assert_eq!(p, vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
        let blocks = extract_block_codes(&c, &p, &b).unwrap();
        assert_eq!(blocks.len(), 3);
        for d in &blocks {
            assert_eq!(d.codewords(&b).unwrap(), vec![vec![0, 0], vec![1, 1]]);
        }
        let (core, params) = extract_hamming_core(&c, &[0, 1, 2], &b).unwrap();
        assert_eq!(
            core.codewords(&b).unwrap(),
            vec![vec![0, 0, 0], vec![1, 1, 1]]
        );
        assert_eq!(params.m_b, 2);
        let (other, _) = extract_hamming_core(&c, &[3, 4, 2], &b).unwrap();
        assert_eq!(other.n(), 3);

        let c3 = kron_code(&gf(3), 2, 2).unwrap();
        let p3 = weight2_partition(&c3).unwrap();
        assert_eq!(extract_block_codes(&c3, &p3, &b).unwrap().len(), 4);
    }

    #[test]
    fn partition_rejects_unequal_blocks() {
        let f = gf(2);
        let h = Matrix::from_rows(&f, &[[1u8, 1, 0, 1], [0, 0, 1, 1]]).unwrap();
        let c = LinearCode::from_parity_check(&h).unwrap();
        assert!(matches!(
            weight2_partition(&c),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn peel_examples() {
        let b = Budget::default();
        let even = direct(&gf(2), &[1, 1]).unwrap();
        let peeled = peel_repeats(&q_repeat(&even).unwrap(), &b).unwrap();
        assert_eq!(peeled.base, even);
        assert_eq!(peeled.removed, vec![0]);
        let k = kron_code(&gf(2), 2, 2).unwrap();
        let peeled = peel_repeats(&q_repeat_times(&k, 2).unwrap(), &b).unwrap();
        assert_eq!(peeled.base, k);
        assert_eq!(peeled.removed.len(), 2);
        assert_eq!(
            peel_repeats(&even, &b).unwrap_err(),
            Error::MinDistanceNotOne
        );
        let whole = LinearCode::whole_space(&gf(2), 3).unwrap();
        assert_eq!(peel_repeats(&whole, &b).unwrap_err(), Error::WholeSpace);
    }

    #[test]
    fn classify_examples() {
        let b = Budget::default();
        let cert = classify(&kron_code(&gf(2), 2, 2).unwrap(), &b).unwrap();
        assert_eq!(cert.case, Case::D2Kronecker);
        assert_eq!((cert.n_a, cert.m_b), (Some(2), Some(2)));
        assert!(cert.verified);

        let cert = classify(&hamming(&gf(2), 3).unwrap(), &b).unwrap();
        assert_eq!(cert.case, Case::D3Hamming);

        let cert = classify(&direct(&gf(3), &[1, 2, 1]).unwrap(), &b).unwrap();
        assert_eq!(cert.case, Case::D2FullPart);
        assert_eq!(cert.n_a, Some(4));

        let f = gf(2);
        let g = Matrix::from_rows(&f, &[[1u8, 0, 1, 1, 0], [0, 1, 1, 0, 1]]).unwrap();
        let c = LinearCode::from_generator(&g).unwrap();
        let cert = classify(&c, &b).unwrap();
        assert_eq!(cert.case, Case::NotApplicable);
        assert_eq!(cert.reason.as_deref(), Some("covering radius 2"));

        let cert = classify(&repetition(&gf(3), 3).unwrap(), &b).unwrap();
        assert_eq!(cert.case, Case::NotApplicable);
    }

    #[test]
    fn classify_scrambles_and_repeats() {
        let b = Budget::default();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (q, n_a, m_b) in [(2, 2, 2), (3, 2, 2), (4, 2, 2), (2, 3, 3), (2, 1, 3)] {
            let f = gf(q);
            let canonical = kron_code(&f, n_a, m_b).unwrap();
            for _ in 0..5 {
                let sigma = MonomialMap::random(&f, canonical.n(), &mut rng);
                let scrambled = canonical.transform(&sigma).unwrap();
                let cert = classify(&scrambled, &b).unwrap();
                assert_eq!((cert.n_a, cert.m_b), (Some(n_a), Some(m_b)));
                let map = cert.equivalence.as_ref().unwrap();
                assert!(verify_by_codewords(&scrambled, map, &canonical, &b).unwrap());

                let repeated = q_repeat_times(&scrambled, 2).unwrap();
                let sigma2 = MonomialMap::random(&f, repeated.n(), &mut rng);
                let repeated = repeated.transform(&sigma2).unwrap();
                let cert = classify(&repeated, &b).unwrap();
                assert_eq!(cert.case, Case::D1Repeated);
                assert_eq!(cert.peel_count, 2);
                assert_eq!((cert.n_a, cert.m_b), (Some(n_a), Some(m_b)));
                assert!(verify_by_codewords(
                    &repeated,
                    cert.equivalence.as_ref().unwrap(),
                    cert.canonical.as_ref().unwrap(),
                    &b
                )
                .unwrap());
            }
        }
    }

    #[test]
    fn zero_code_residue_is_not_applicable() {
        let f = gf(2);
        let c =
            LinearCode::from_generator(&Matrix::from_rows(&f, &[[1u8, 0, 0], [0, 1, 0]]).unwrap())
                .unwrap();
        let cert = classify(&c, &Budget::default()).unwrap();
        assert_eq!(
            cert.reason.as_deref(),
            Some("reduced code is the zero code")
        );
    }

    #[test]
    fn case_names_round_trip() {
        for c in [
            Case::D1Repeated,
            Case::D2FullPart,
            Case::D2Kronecker,
            Case::D3Hamming,
            Case::NotApplicable,
        ] {
            assert_eq!(c.as_str().parse::<Case>().unwrap(), c);
        }
    }
}
