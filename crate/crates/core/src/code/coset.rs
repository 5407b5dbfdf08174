//! Coset leaders and coset weight distributions.
//!
//! Leaders are found by visiting vectors of weight 0, 1, 2, ... in
//! lexicographic order, so the first vector reaching a syndrome is the
//! lexicographically smallest minimum-weight member of its coset.
//!
//! Coset weight distributions have two exact routes:
//!
//! * [`DistributionRoute::Codewords`] enumerates the `q^k` codewords and
//!   counts `wt(c + leader)` directly.
//! * [`DistributionRoute::DualCodewords`] enumerates the `q^(n-k)` dual
//!   codewords `u` and applies the transform
//!   `A_i(C + x) = q^-(n-k) * sum_u chi(u.x) K_i(wt u)`.
//!   Dual words that differ by a nonzero scalar share their weight and have
//!   `u.x` running over all nonzero values together, so the character sum
//!   reduces to the integer `N0 - Nnz / (q - 1)`.

use crate::error::{Error, Result};
use crate::linalg::{checked_power, lex_index, weight};

use super::span::{check_budget, for_each_in_span, span_size};
use super::{Budget, LinearCode};

/// Which enumeration computes coset weight distributions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistributionRoute {
    Codewords,
    DualCodewords,
}

impl DistributionRoute {
    /// The route with the smaller enumeration.
    pub fn cheapest(code: &LinearCode) -> Self {
        if code.k() <= code.n() - code.k() {
            DistributionRoute::Codewords
        } else {
            DistributionRoute::DualCodewords
        }
    }
}

/// Sparse coset leader: `(position, value)` pairs in increasing position.
pub(crate) type SparseLeader = Vec<(usize, u8)>;

#[derive(Clone, Debug)]
pub(crate) struct Leaders {
    pub leaders: Vec<SparseLeader>,
}

impl Leaders {
    pub fn weight(&self, syndrome: usize) -> usize {
        self.leaders[syndrome].len()
    }

    pub fn covering_radius(&self) -> usize {
        self.leaders.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn dense(&self, syndrome: usize, n: usize) -> Vec<u8> {
        let mut v = vec![0u8; n];
        for &(p, a) in &self.leaders[syndrome] {
            v[p] = a;
        }
        v
    }
}

/// One row of a [`CosetTable`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetEntry {
    pub syndrome: Vec<u8>,
    pub leader: Vec<u8>,
    pub leader_weight: usize,
    pub distribution: Vec<u64>,
}

/// All cosets of a code indexed by syndrome (lexicographic index of `H x^T`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    entries: Vec<CosetEntry>,
}

impl CosetTable {
    pub fn entries(&self) -> &[CosetEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, syndrome_index: usize) -> Option<&CosetEntry> {
        self.entries.get(syndrome_index)
    }

    pub fn covering_radius(&self) -> usize {
        self.entries
            .iter()
            .map(|e| e.leader_weight)
            .max()
            .unwrap_or(0)
    }
}

pub(crate) fn compute_leaders(code: &LinearCode, budget: &Budget) -> Result<Leaders> {
    let f = code.field();
    let q = f.q();
    let n = code.n();
    let h = code.parity_check();
    let r = h.rows();
    let total = check_budget("coset enumeration", checked_power(q, r), budget.cosets)? as usize;

    // scaled[j][a] = a * h_j
    let scaled: Vec<Vec<Vec<u8>>> = (0..n)
        .map(|j| {
            let col = h.column(j);
            f.values()
                .map(|a| col.iter().map(|&x| f.mul(a, x)).collect())
                .collect()
        })
        .collect();

    let mut found: Vec<Option<SparseLeader>> = vec![None; total];
    found[0] = Some(Vec::new());
    let mut assigned = 1usize;
    let mut search = LeaderSearch {
        q,
        n,
        scaled: &scaled,
        found: &mut found,
        assigned: &mut assigned,
        total,
        visited: 0,
        limit: budget.codewords,
        current: Vec::new(),
    };
    let mut w = 1;
    while *search.assigned < total {
        if w > n {
            return Err(Error::InternalContradiction(
                "syndromes left unassigned after all weights".into(),
            ));
        }
        let mut syn = vec![0u8; r];
        search.visit(0, w, &mut syn, f)?;
        w += 1;
    }
    Ok(Leaders {
        leaders: found
            .into_iter()
            .map(|l| l.expect("all assigned"))
            .collect(),
    })
}

struct LeaderSearch<'a> {
    q: usize,
    n: usize,
    scaled: &'a [Vec<Vec<u8>>],
    found: &'a mut [Option<SparseLeader>],
    assigned: &'a mut usize,
    total: usize,
    visited: u64,
    limit: u64,
    current: SparseLeader,
}

impl LeaderSearch<'_> {
    fn visit(
        &mut self,
        pos: usize,
        remaining: usize,
        syn: &mut Vec<u8>,
        f: &crate::gf::FieldSpec,
    ) -> Result<()> {
        if *self.assigned == self.total {
            return Ok(());
        }
        if remaining == 0 {
            self.visited += 1;
            if self.visited > self.limit {
                return Err(Error::BudgetExceeded {
                    what: "coset leader search",
                    needed: self.visited as u128,
                    limit: self.limit,
                });
            }
            let idx = lex_index(self.q, syn);
            if self.found[idx].is_none() {
                self.found[idx] = Some(self.current.clone());
                *self.assigned += 1;
            }
            return Ok(());
        }
        if pos == self.n {
            return Ok(());
        }
        if self.n - pos > remaining {
            self.visit(pos + 1, remaining, syn, f)?;
        }
        for a in 1..self.q {
            let col = &self.scaled[pos][a];
            for (s, &c) in syn.iter_mut().zip(col) {
                *s = f.add(*s, c);
            }
            self.current.push((pos, a as u8));
            self.visit(pos + 1, remaining - 1, syn, f)?;
            self.current.pop();
            for (s, &c) in syn.iter_mut().zip(col) {
                *s = f.sub(*s, c);
            }
        }
        Ok(())
    }
}

/// Weight distributions of `C + x` for each sparse `x`, via `route`.
pub(crate) fn distributions(
    code: &LinearCode,
    xs: &[SparseLeader],
    route: DistributionRoute,
    budget: &Budget,
) -> Result<Vec<Vec<u64>>> {
    let q = code.field().q();
    if span_size(q, code.k()).is_none_or(|s| s > u64::MAX as u128) {
        return Err(Error::Overflow("counting codewords"));
    }
    match route {
        DistributionRoute::Codewords => by_codewords(code, xs, budget),
        DistributionRoute::DualCodewords => by_dual(code, xs, budget),
    }
}

fn by_codewords(code: &LinearCode, xs: &[SparseLeader], budget: &Budget) -> Result<Vec<Vec<u64>>> {
    let f = code.field();
    let n = code.n();
    check_budget(
        "codeword enumeration",
        span_size(f.q(), code.k()),
        budget.codewords,
    )?;
    let mut out = vec![vec![0u64; n + 1]; xs.len()];
    for_each_in_span(code.generator(), |c| {
        let base = weight(c);
        for (x, dist) in xs.iter().zip(out.iter_mut()) {
            let mut w = base;
            for &(p, a) in x {
                let before = c[p] != 0;
                let after = f.add(c[p], a) != 0;
                if before && !after {
                    w -= 1;
                } else if !before && after {
                    w += 1;
                }
            }
            dist[w] += 1;
        }
    });
    Ok(out)
}

fn by_dual(code: &LinearCode, xs: &[SparseLeader], budget: &Budget) -> Result<Vec<Vec<u64>>> {
    let f = code.field();
    let n = code.n();
    let q = f.q();
    let r = code.n() - code.k();
    check_budget(
        "dual codeword enumeration",
        span_size(q, r),
        budget.codewords,
    )?;

    let mut zero = vec![vec![0u64; n + 1]; xs.len()];
    let mut nonzero = vec![vec![0u64; n + 1]; xs.len()];
    for_each_in_span(code.parity_check(), |u| {
        let j = weight(u);
        for (idx, x) in xs.iter().enumerate() {
            let d = x
                .iter()
                .fold(0u8, |acc, &(p, a)| f.add(acc, f.mul(u[p], a)));
            if d == 0 {
                zero[idx][j] += 1;
            } else {
                nonzero[idx][j] += 1;
            }
        }
    });

    let kraw = krawtchouk_table(n, q)?;
    let q1 = (q - 1) as i128;
    let denom = checked_power(q, r)
        .and_then(|p| i128::try_from(p).ok())
        .and_then(|p| p.checked_mul(q1))
        .ok_or(Error::Overflow("dual transform"))?;
    let mut out = Vec::with_capacity(xs.len());
    for idx in 0..xs.len() {
        let weights: Vec<i128> = (0..=n)
            .map(|j| q1 * zero[idx][j] as i128 - nonzero[idx][j] as i128)
            .collect();
        let mut dist = Vec::with_capacity(n + 1);
        for row in &kraw {
            let mut acc: i128 = 0;
            for (j, &w) in weights.iter().enumerate() {
                if w == 0 {
                    continue;
                }
                let term = w
                    .checked_mul(row[j])
                    .ok_or(Error::Overflow("dual transform"))?;
                acc = acc
                    .checked_add(term)
                    .ok_or(Error::Overflow("dual transform"))?;
            }
            if acc < 0 || acc % denom != 0 {
                return Err(Error::InternalContradiction(format!(
                    "dual transform produced non-integral count {acc}/{denom}"
                )));
            }
            dist.push(u64::try_from(acc / denom).map_err(|_| Error::Overflow("dual transform"))?);
        }
        out.push(dist);
    }
    Ok(out)
}

/// `K[i][j] = sum_s (-1)^s (q-1)^(i-s) C(j,s) C(n-j,i-s)` for `0 <= i, j <= n`.
pub(crate) fn krawtchouk_table(n: usize, q: usize) -> Result<Vec<Vec<i128>>> {
    let binom = binomials(n)?;
    let q1 = (q - 1) as i128;
    let mut pows = vec![1i128; n + 1];
    for i in 1..=n {
        pows[i] = pows[i - 1]
            .checked_mul(q1)
            .ok_or(Error::Overflow("Krawtchouk values"))?;
    }
    let mut table = vec![vec![0i128; n + 1]; n + 1];
    for (i, row) in table.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let mut acc: i128 = 0;
            for s in 0..=i.min(j) {
                if i - s > n - j {
                    continue;
                }
                let term = pows[i - s]
                    .checked_mul(binom[j][s])
                    .and_then(|t| t.checked_mul(binom[n - j][i - s]))
                    .ok_or(Error::Overflow("Krawtchouk values"))?;
                acc = if s % 2 == 0 {
                    acc.checked_add(term)
                } else {
                    acc.checked_sub(term)
                }
                .ok_or(Error::Overflow("Krawtchouk values"))?;
            }
            *cell = acc;
        }
    }
    Ok(table)
}

fn binomials(n: usize) -> Result<Vec<Vec<i128>>> {
    let mut c = vec![vec![0i128; n + 1]; n + 1];
    for i in 0..=n {
        c[i][0] = 1;
        for j in 1..=i {
            c[i][j] = c[i - 1][j - 1]
                .checked_add(c[i - 1][j])
                .ok_or(Error::Overflow("binomial coefficients"))?;
        }
    }
    Ok(c)
}

pub(crate) fn build_table(
    code: &LinearCode,
    leaders: &Leaders,
    route: DistributionRoute,
    budget: &Budget,
) -> Result<CosetTable> {
    let q = code.field().q();
    let r = code.n() - code.k();
    let dists = distributions(code, &leaders.leaders, route, budget)?;
    let entries = dists
        .into_iter()
        .enumerate()
        .map(|(idx, distribution)| CosetEntry {
            syndrome: crate::linalg::from_lex_index(q, r, idx),
            leader: leaders.dense(idx, code.n()),
            leader_weight: leaders.weight(idx),
            distribution,
        })
        .collect();
    Ok(CosetTable { entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn krawtchouk_small_values() {
        // binary, n = 3: K_1(j) = 3 - 2j
        let k = krawtchouk_table(3, 2).unwrap();
        assert_eq!(k[1], vec![3, 1, -1, -3]);
        // K_i(0) = C(n,i) (q-1)^i
        let k = krawtchouk_table(4, 3).unwrap();
        assert_eq!(
            (0..=4).map(|i| k[i][0]).collect::<Vec<_>>(),
            vec![1, 8, 24, 32, 16]
        );
    }
}
