use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::linalg::{axpy, checked_power, Matrix};

use super::Budget;

/// Number of vectors in the row space spanned by `rows` independent rows.
pub(crate) fn span_size(q: usize, rows: usize) -> Option<u128> {
    checked_power(q, rows)
}

pub(crate) fn check_budget(what: &'static str, needed: Option<u128>, limit: u64) -> Result<u64> {
    match needed {
        Some(n) if n <= limit as u128 => Ok(n as u64),
        Some(n) => Err(Error::BudgetExceeded {
            what,
            needed: n,
            limit,
        }),
        None => Err(Error::BudgetExceeded {
            what,
            needed: u128::MAX,
            limit,
        }),
    }
}

/// Visits every linear combination of the rows of `basis`.
///
/// The message vector runs through a plain mixed-radix counter (last digit
/// fastest) and the combination is updated incrementally, so each step costs
/// one row update. The rows must be independent for each vector to be
/// visited exactly once.
pub(crate) fn for_each_in_span<F: FnMut(&[u8])>(basis: &Matrix, mut visit: F) {
    let f: &FieldSpec = basis.field();
    let q = f.q();
    let k = basis.rows();
    let mut msg = vec![0u8; k];
    let mut word = vec![0u8; basis.cols()];
    loop {
        visit(&word);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            let old = msg[i];
            let new = if old as usize + 1 == q { 0 } else { old + 1 };
            msg[i] = new;
            axpy(f, &mut word, f.sub(new, old), basis.row(i));
            if new != 0 {
                break;
            }
        }
    }
}

/// Materializes the row space of `basis`, guarded by the codeword budget.
pub(crate) fn span_vectors(basis: &Matrix, budget: &Budget) -> Result<Vec<Vec<u8>>> {
    let size = check_budget(
        "codeword enumeration",
        span_size(basis.field().q(), basis.rows()),
        budget.codewords,
    )?;
    let mut out = Vec::with_capacity(size as usize);
    for_each_in_span(basis, |w| out.push(w.to_vec()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn visits_each_combination_once() {
        let f = FieldSpec::with_order(4).unwrap();
        let g = Matrix::from_rows(&f, &[[1u8, 0, 2], [0, 1, 3]]).unwrap();
        let mut seen = BTreeSet::new();
        let mut count = 0;
        for_each_in_span(&g, |w| {
            seen.insert(w.to_vec());
            count += 1;
        });
        assert_eq!(count, 16);
        assert_eq!(seen.len(), 16);
    }

    #[test]
    fn empty_basis_gives_zero_vector() {
        let f = FieldSpec::prime(3).unwrap();
        let g = Matrix::zeros(&f, 0, 4);
        let v = span_vectors(&g, &Budget::default()).unwrap();
        assert_eq!(v, vec![vec![0; 4]]);
    }
}
