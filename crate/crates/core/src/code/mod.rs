//! Linear codes and their exact analytics.

mod coset;
pub(crate) mod span;

pub use coset::{CosetEntry, CosetTable, DistributionRoute};
pub(crate) use coset::{Leaders, SparseLeader};

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::linalg::{lex_index, Matrix, MonomialMap};

/// Enumeration limits. Every exhaustive computation checks its size against
/// one of these before starting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Codeword (or dual codeword) enumeration and leader-search steps.
    pub codewords: u64,
    /// Number of cosets, `q^(n-k)`.
    pub cosets: u64,
    /// Whole-space enumeration for set oracles, `q^n`.
    pub oracle: u64,
    /// Monomial maps examined by exhaustive automorphism searches.
    pub monomial: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            codewords: 1 << 24,
            cosets: 1 << 20,
            oracle: 1 << 20,
            monomial: 10_000_000,
        }
    }
}

#[derive(Clone, Default)]
struct Analytics {
    parity_check: OnceLock<Matrix>,
    weights: OnceLock<Vec<u64>>,
    leaders: OnceLock<Leaders>,
    table: OnceLock<CosetTable>,
}

fn cached<T>(cell: &OnceLock<T>, compute: impl FnOnce() -> Result<T>) -> Result<&T> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = compute()?;
    // A concurrent fill computed the same value; keep whichever landed first.
    let _ = cell.set(v);
    Ok(cell.get().expect("just set"))
}

/// A linear `[n, k]_q` code held by its generator matrix in reduced row
/// echelon form.
///
/// Analytics are memoized lazily. Equality and identity depend only on the
/// field and the canonical generator.
#[derive(Clone)]
pub struct LinearCode {
    field: FieldSpec,
    n: usize,
    k: usize,
    gen: Matrix,
    analytics: Analytics,
}

impl LinearCode {
    /// Code spanned by the rows of `rows`; dependent rows are dropped.
    pub fn from_generator(rows: &Matrix) -> Result<Self> {
        let gen = rows.row_basis();
        if gen.rows() == 0 {
            return Err(Error::ZeroCode);
        }
        Ok(LinearCode {
            field: rows.field().clone(),
            n: rows.cols(),
            k: gen.rows(),
            gen,
            analytics: Analytics::default(),
        })
    }

    /// Kernel of `h`.
    pub fn from_parity_check(h: &Matrix) -> Result<Self> {
        if h.rank() == 0 {
            return Err(Error::FullSpace);
        }
        Self::kernel_of(h)
    }

    /// Kernel of `h`, allowing `h` of rank 0 (giving the whole space).
    pub(crate) fn kernel_of(h: &Matrix) -> Result<Self> {
        let code = Self::from_generator(&h.kernel_basis())?;
        let _ = code.analytics.parity_check.set(h.row_basis());
        Ok(code)
    }

    pub fn whole_space(field: &FieldSpec, n: usize) -> Result<Self> {
        Self::from_generator(&Matrix::identity(field, n))
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    /// Generator matrix in reduced row echelon form.
    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    /// Parity-check matrix in reduced row echelon form (`(n-k) x n`).
    pub fn parity_check(&self) -> &Matrix {
        self.analytics
            .parity_check
            .get_or_init(|| self.gen.kernel_basis())
    }

    pub fn is_whole_space(&self) -> bool {
        self.k == self.n
    }

    /// `|C| = q^k`, if it fits in 128 bits.
    pub fn size(&self) -> Option<u128> {
        crate::linalg::checked_power(self.field.q(), self.k)
    }

    pub fn syndrome(&self, x: &[u8]) -> Result<Vec<u8>> {
        self.parity_check().mul_vec(x)
    }

    /// Lexicographic index of the syndrome of `x`.
    pub fn syndrome_index(&self, x: &[u8]) -> Result<usize> {
        Ok(lex_index(self.field.q(), &self.syndrome(x)?))
    }

    pub fn contains(&self, x: &[u8]) -> bool {
        x.len() == self.n && self.syndrome(x).is_ok_and(|s| s.iter().all(|&v| v == 0))
    }

    /// All codewords in message-counter order.
    pub fn codewords(&self, budget: &Budget) -> Result<Vec<Vec<u8>>> {
        span::span_vectors(&self.gen, budget)
    }

    /// Number of codewords of each weight `0..=n`.
    pub fn weight_distribution(&self, budget: &Budget) -> Result<&[u64]> {
        cached(&self.analytics.weights, || {
            self.weight_distribution_via(DistributionRoute::cheapest(self), budget)
        })
        .map(Vec::as_slice)
    }

    /// Weight distribution by an explicit route, bypassing the memo.
    pub fn weight_distribution_via(
        &self,
        route: DistributionRoute,
        budget: &Budget,
    ) -> Result<Vec<u64>> {
        let mut d = coset::distributions(self, &[Vec::new()], route, budget)?;
        Ok(d.pop().expect("one distribution"))
    }

    pub fn min_distance(&self, budget: &Budget) -> Result<usize> {
        let w = self.weight_distribution(budget)?;
        Ok((1..=self.n).find(|&i| w[i] > 0).expect("nonzero code"))
    }

    /// `floor((d - 1) / 2)`.
    pub fn packing_radius(&self, budget: &Budget) -> Result<usize> {
        Ok((self.min_distance(budget)? - 1) / 2)
    }

    pub(crate) fn leaders(&self, budget: &Budget) -> Result<&Leaders> {
        cached(&self.analytics.leaders, || {
            coset::compute_leaders(self, budget)
        })
    }

    /// Largest coset-leader weight.
    pub fn covering_radius(&self, budget: &Budget) -> Result<usize> {
        Ok(self.leaders(budget)?.covering_radius())
    }

    /// Full coset table using the cheaper distribution route.
    pub fn coset_table(&self, budget: &Budget) -> Result<&CosetTable> {
        cached(&self.analytics.table, || {
            let leaders = self.leaders(budget)?;
            coset::build_table(self, leaders, DistributionRoute::cheapest(self), budget)
        })
    }

    /// Coset table by an explicit route, bypassing the memo.
    pub fn coset_table_via(&self, route: DistributionRoute, budget: &Budget) -> Result<CosetTable> {
        let leaders = self.leaders(budget)?;
        coset::build_table(self, leaders, route, budget)
    }

    /// Weight distribution of `C + x` for an arbitrary vector.
    pub fn translate_distribution(&self, x: &[u8], budget: &Budget) -> Result<Vec<u64>> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: x.len(),
            });
        }
        let sparse: SparseLeader = x
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(i, &a)| (i, a))
            .collect();
        let mut d =
            coset::distributions(self, &[sparse], DistributionRoute::cheapest(self), budget)?;
        Ok(d.pop().expect("one distribution"))
    }

    /// Dual code. Fails with `ZeroCode` for the whole space.
    pub fn dual(&self) -> Result<LinearCode> {
        let code = LinearCode::from_generator(self.parity_check())?;
        let _ = code.analytics.parity_check.set(self.gen.clone());
        Ok(code)
    }

    /// Image of the code under a monomial map.
    pub fn transform(&self, map: &MonomialMap) -> Result<LinearCode> {
        if map.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        LinearCode::from_generator(&map.apply_to_rows(&self.gen)?)
    }

    /// Whether `map` sends the code onto itself.
    pub fn is_automorphism(&self, map: &MonomialMap) -> bool {
        map.field() == &self.field
            && map.len() == self.n
            && self
                .gen
                .row_iter()
                .all(|r| self.contains(&map.apply_slice(r)))
    }

    /// Codewords supported inside `positions`, restricted to those positions
    /// (in the order given).
    pub fn subcode_on(&self, positions: &[usize]) -> Result<LinearCode> {
        LinearCode::kernel_of(&self.parity_check().select_columns(positions))
    }

    /// Projection onto `positions`: every codeword restricted to them.
    pub fn project(&self, positions: &[usize]) -> Result<LinearCode> {
        LinearCode::from_generator(&self.gen.select_columns(positions))
    }

    /// Same codeword set, decided by parity-check row-space equality.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.field == other.field
            && self.n == other.n
            && self.parity_check().same_row_space(other.parity_check())
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.gen == other.gen
    }
}

impl Eq for LinearCode {}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]_{} {:?}",
            self.n,
            self.k,
            self.field.q(),
            self.gen
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::with_order(q).unwrap()
    }

    fn code(f: &FieldSpec, rows: &[&[u8]]) -> LinearCode {
        LinearCode::from_generator(&Matrix::from_rows(f, rows).unwrap()).unwrap()
    }

    fn hamming_7_4() -> LinearCode {
        let f = gf(2);
        let h = Matrix::from_rows(
            &f,
            &[
                [1u8, 0, 1, 0, 1, 0, 1],
                [0, 1, 1, 0, 0, 1, 1],
                [0, 0, 0, 1, 1, 1, 1],
            ],
        )
        .unwrap();
        LinearCode::from_parity_check(&h).unwrap()
    }

    #[test]
    fn generator_examples() {
        let f = gf(2);
        let rep = code(&f, &[&[1, 1, 1]]);
        assert_eq!((rep.n(), rep.k()), (3, 1));
        let c = code(&f, &[&[1, 0, 1], &[0, 1, 1], &[1, 1, 0]]);
        assert_eq!(c.k(), 2);
        let words: BTreeSet<_> = c
            .codewords(&Budget::default())
            .unwrap()
            .into_iter()
            .collect();
        let expected: BTreeSet<Vec<u8>> =
            [vec![0, 0, 0], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 0]]
                .into_iter()
                .collect();
        assert_eq!(words, expected);
        let zero = Matrix::zeros(&f, 2, 3);
        assert_eq!(
            LinearCode::from_generator(&zero).unwrap_err(),
            Error::ZeroCode
        );
    }

    #[test]
    fn parity_check_examples() {
        let f = gf(2);
        let even =
            LinearCode::from_parity_check(&Matrix::from_rows(&f, &[[1u8, 1, 1]]).unwrap()).unwrap();
        assert_eq!((even.n(), even.k()), (3, 2));
        assert_eq!(even.min_distance(&Budget::default()).unwrap(), 2);
        assert_eq!(
            LinearCode::from_parity_check(&Matrix::identity(&f, 3)).unwrap_err(),
            Error::ZeroCode
        );
        assert_eq!(
            LinearCode::from_parity_check(&Matrix::zeros(&f, 1, 3)).unwrap_err(),
            Error::FullSpace
        );
        let h = Matrix::from_rows(&f, &[[1u8, 0, 1, 1, 0, 1], [0, 1, 1, 0, 1, 1]]).unwrap();
        let c = LinearCode::from_parity_check(&h).unwrap();
        assert_eq!((c.n(), c.k()), (6, 4));
        let b = Budget::default();
        assert_eq!(
            (c.min_distance(&b).unwrap(), c.covering_radius(&b).unwrap()),
            (2, 1)
        );
        assert!(c.parity_check().same_row_space(&h));
    }

    #[test]
    fn distances_and_radii() {
        let b = Budget::default();
        let ham = hamming_7_4();
        assert_eq!(ham.min_distance(&b).unwrap(), 3);
        assert_eq!(ham.covering_radius(&b).unwrap(), 1);
        assert_eq!(
            ham.weight_distribution(&b).unwrap(),
            &[1, 0, 0, 7, 7, 0, 0, 1]
        );

        let f3 = gf(3);
        let rep3 = code(&f3, &[&[1, 1, 1]]);
        assert_eq!(rep3.min_distance(&b).unwrap(), 3);

        let f2 = gf(2);
        let whole = LinearCode::whole_space(&f2, 3).unwrap();
        assert_eq!(whole.covering_radius(&b).unwrap(), 0);
        assert_eq!(whole.min_distance(&b).unwrap(), 1);
    }

    #[test]
    fn coset_table_examples() {
        let b = Budget::default();
        let f = gf(2);
        let even = code(&f, &[&[1, 0, 1], &[0, 1, 1]]);
        let t = even.coset_table(&b).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.get(0).unwrap().distribution, vec![1, 0, 3, 0]);
        assert_eq!(t.get(1).unwrap().distribution, vec![0, 3, 0, 1]);
        assert_eq!(t.get(1).unwrap().leader, vec![0, 0, 1]);

        let rep = code(&f, &[&[1, 1, 1]]);
        let t = rep.coset_table(&b).unwrap();
        let mut weights: Vec<usize> = t.entries().iter().map(|e| e.leader_weight).collect();
        weights.sort();
        assert_eq!(weights, vec![0, 1, 1, 1]);
        assert_eq!(
            t.get(0).unwrap().distribution,
            rep.weight_distribution(&b).unwrap()
        );
    }

    #[test]
    fn leaders_are_lexicographically_smallest() {
        let b = Budget::default();
        let f = gf(3);
        let c = code(&f, &[&[1, 1, 0, 2], &[0, 1, 1, 1]]);
        let words = c.codewords(&b).unwrap();
        for e in c.coset_table(&b).unwrap().entries() {
            let members: Vec<Vec<u8>> = words
                .iter()
                .map(|w| crate::linalg::add(&f, w, &e.leader))
                .collect();
            let min_w = members
                .iter()
                .map(|m| crate::linalg::weight(m))
                .min()
                .unwrap();
            let best = members
                .iter()
                .filter(|m| crate::linalg::weight(m) == min_w)
                .min()
                .unwrap();
            assert_eq!(&e.leader, best);
            assert_eq!(e.leader_weight, min_w);
        }
    }

    #[test]
    fn dual_examples() {
        let b = Budget::default();
        let f = gf(2);
        let even = code(&f, &[&[1, 0, 1], &[0, 1, 1]]);
        let d = even.dual().unwrap();
        assert_eq!(d, code(&f, &[&[1, 1, 1]]));
        assert_eq!(d.dual().unwrap(), even);

        let simplex = hamming_7_4().dual().unwrap();
        assert_eq!(simplex.k(), 3);
        assert_eq!(
            simplex.weight_distribution(&b).unwrap(),
            &[1, 0, 0, 0, 7, 0, 0, 0]
        );
        assert_eq!(
            LinearCode::whole_space(&f, 2).unwrap().dual().unwrap_err(),
            Error::ZeroCode
        );
    }

    #[test]
    fn budgets_are_enforced() {
        let f = gf(2);
        let c = LinearCode::whole_space(&f, 10).unwrap();
        let tiny = Budget {
            codewords: 100,
            ..Budget::default()
        };
        assert!(matches!(
            c.codewords(&tiny),
            Err(Error::BudgetExceeded { .. })
        ));
        let rep = code(&f, &[&[1; 12]]);
        let tiny = Budget {
            cosets: 16,
            ..Budget::default()
        };
        assert!(matches!(
            rep.covering_radius(&tiny),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn translate_distribution_matches_coset_row() {
        let b = Budget::default();
        let ham = hamming_7_4();
        let x = [1u8, 1, 0, 0, 0, 0, 0];
        let idx = ham.syndrome_index(&x).unwrap();
        assert_eq!(
            ham.translate_distribution(&x, &b).unwrap(),
            ham.coset_table(&b).unwrap().get(idx).unwrap().distribution
        );
    }
}
