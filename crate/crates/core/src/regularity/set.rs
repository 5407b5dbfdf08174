use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::code::span::check_budget;
use crate::code::{Budget, LinearCode};
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::linalg::{checked_power, distance, from_lex_index, lex_index};

/// An explicit set of vectors of one length, such as a nonlinear code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSet {
    field: FieldSpec,
    n: usize,
    members: Vec<Vec<u8>>,
}

impl CodeSet {
    pub fn new(field: &FieldSpec, n: usize, members: Vec<Vec<u8>>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::InvalidCodeSet("empty set".into()));
        }
        let mut seen = BTreeSet::new();
        for m in &members {
            if m.len() != n {
                return Err(Error::InvalidCodeSet(format!(
                    "member of length {} in a set of length {n}",
                    m.len()
                )));
            }
            for &x in m {
                field.check(x as u64)?;
            }
            if !seen.insert(m.as_slice()) {
                return Err(Error::InvalidCodeSet(format!("duplicate member {m:?}")));
            }
        }
        Ok(CodeSet {
            field: field.clone(),
            n,
            members,
        })
    }

    /// All codewords of a linear code.
    pub fn from_code(code: &LinearCode, budget: &Budget) -> Result<Self> {
        Ok(CodeSet {
            field: code.field().clone(),
            n: code.n(),
            members: code.codewords(budget)?,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Vec<u8>] {
        &self.members
    }

    pub fn contains(&self, x: &[u8]) -> bool {
        self.members.iter().any(|m| m == x)
    }

    /// Minimum distance between distinct members; `None` for a single vector.
    ///
    /// Distance 1 is detected through unit-vector neighbours; otherwise all
    /// pairs are compared.
    pub fn min_distance(&self) -> Option<usize> {
        if self.members.len() < 2 {
            return None;
        }
        let index: HashSet<&[u8]> = self.members.iter().map(Vec::as_slice).collect();
        let mut probe = vec![0u8; self.n];
        for m in &self.members {
            probe.copy_from_slice(m);
            for j in 0..self.n {
                for a in self.field.nonzero() {
                    probe[j] = self.field.add(m[j], a);
                    if index.contains(probe.as_slice()) {
                        return Some(1);
                    }
                }
                probe[j] = m[j];
            }
        }
        let mut best = self.n;
        for (i, a) in self.members.iter().enumerate() {
            for b in &self.members[i + 1..] {
                best = best.min(distance(a, b));
            }
        }
        Some(best)
    }
}

/// `counts[x * (n + 1) + i]` = number of members at distance `i` from the
/// vector with lexicographic index `x`.
///
/// Built one coordinate at a time: after processing coordinates `0..j`, the
/// entry counts members that agree with `x` on the remaining coordinates and
/// sit at distance `i` on the processed ones. Within a fiber over coordinate
/// `j` (vectors differing only there), moving to the next coordinate adds the
/// other fiber members' counts shifted by one.
fn distance_counts(set: &CodeSet, budget: &Budget) -> Result<Vec<u32>> {
    let q = set.field.q();
    let n = set.n;
    let total = check_budget(
        "whole-space enumeration",
        checked_power(q, n),
        budget.oracle,
    )? as usize;
    if set.len() > u32::MAX as usize {
        return Err(Error::Overflow("set distance counts"));
    }
    let w = n + 1;
    let mut counts = vec![0u32; total * w];
    for m in &set.members {
        counts[lex_index(q, m) * w] = 1;
    }
    let mut sum = Vec::new();
    let mut prev = Vec::new();
    for j in 0..n {
        // vectors differing only in coordinate j sit `stride` rows apart
        let stride = checked_power(q, n - 1 - j).expect("fits") as usize;
        let sw = stride * w;
        for chunk in counts.chunks_exact_mut(q * sw) {
            sum.clear();
            sum.resize(sw, 0u32);
            for part in chunk.chunks_exact(sw) {
                for (s, &c) in sum.iter_mut().zip(part) {
                    *s = s.wrapping_add(c);
                }
            }
            for part in chunk.chunks_exact_mut(sw) {
                prev.clear();
                prev.extend_from_slice(part);
                for (row, (srow, prow)) in part
                    .chunks_exact_mut(w)
                    .zip(sum.chunks_exact(w).zip(prev.chunks_exact(w)))
                {
                    for i in 1..w {
                        row[i] = row[i].wrapping_add(srow[i - 1].wrapping_sub(prow[i - 1]));
                    }
                }
            }
        }
    }
    Ok(counts)
}

/// Distance distribution per distance class, or `None` if two vectors at the
/// same distance from the set see different distributions.
pub fn set_profile(set: &CodeSet, budget: &Budget) -> Result<Option<BTreeMap<usize, Vec<u64>>>> {
    let w = set.n + 1;
    let counts = distance_counts(set, budget)?;
    let mut classes: BTreeMap<usize, &[u32]> = BTreeMap::new();
    for row in counts.chunks_exact(w) {
        let t = row.iter().position(|&c| c > 0).expect("set is nonempty");
        match classes.get(&t) {
            None => {
                classes.insert(t, row);
            }
            Some(&first) if first != row => return Ok(None),
            Some(_) => {}
        }
    }
    Ok(Some(
        classes
            .into_iter()
            .map(|(t, row)| (t, row.iter().map(|&c| c as u64).collect()))
            .collect(),
    ))
}

/// Definition-level complete regularity test over every vector of `F_q^n`.
/// Works for nonlinear sets.
pub fn cr_oracle_set(set: &CodeSet, budget: &Budget) -> Result<bool> {
    Ok(set_profile(set, budget)?.is_some())
}

/// All vectors at distance exactly `rho` from the code.
pub fn covering_set(code: &LinearCode, budget: &Budget) -> Result<CodeSet> {
    let q = code.field().q();
    let n = code.n();
    let total = check_budget(
        "whole-space enumeration",
        checked_power(q, n),
        budget.oracle,
    )? as usize;
    let rho = code.covering_radius(budget)?;
    let leaders = code.leaders(budget)?;
    let mut members = Vec::new();
    for idx in 0..total {
        let x = from_lex_index(q, n, idx);
        if leaders.weight(code.syndrome_index(&x)?) == rho {
            members.push(x);
        }
    }
    CodeSet::new(code.field(), n, members)
}

/// Checks that `repeated` is the q-repeated code of `code` and that, for
/// every `x'` in `F_q^(n+1)` with `x` its last `n` coordinates, the number of
/// codewords of `repeated` at distance `i` from `x'` equals
/// `count_C(x, i) + (q - 1) count_C(x, i - 1)`.
pub fn repeat_recurrence_check(
    code: &LinearCode,
    repeated: &LinearCode,
    budget: &Budget,
) -> Result<bool> {
    let n = code.n();
    if repeated.field() != code.field() {
        return Err(Error::FieldMismatch);
    }
    if repeated.n() != n + 1 || repeated.k() != code.k() + 1 {
        return Err(Error::NotARepeat(format!(
            "expected an [{}, {}] code, got [{}, {}]",
            n + 1,
            code.k() + 1,
            repeated.n(),
            repeated.k()
        )));
    }
    let mut e0 = vec![0u8; n + 1];
    e0[0] = 1;
    if !repeated.contains(&e0) {
        return Err(Error::NotARepeat(
            "first unit vector is not a codeword".into(),
        ));
    }
    let tail: Vec<usize> = (1..=n).collect();
    if !repeated.project(&tail)?.same_code(code) {
        return Err(Error::NotARepeat(
            "puncturing the first coordinate does not give the code".into(),
        ));
    }

    let q = code.field().q();
    let small = distance_counts(&CodeSet::from_code(code, budget)?, budget)?;
    let big = distance_counts(&CodeSet::from_code(repeated, budget)?, budget)?;
    let inner = checked_power(q, n).expect("fits") as usize;
    let (w, w1) = (n + 1, n + 2);
    let q1 = (q - 1) as u64;
    for (xp, row) in big.chunks_exact(w1).enumerate() {
        let x = xp % inner;
        let base = &small[x * w..(x + 1) * w];
        for i in 0..w1 {
            let a = if i < w { base[i] as u64 } else { 0 };
            let b = if i > 0 { base[i - 1] as u64 } else { 0 };
            if row[i] as u64 != a + q1 * b {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
