//! Complete regularity and complete transitivity.
//!
//! A code is completely regular when the distance distribution from a vector
//! to the code depends only on the vector's distance to the code. For a
//! linear code the distance distribution from `x` is the weight distribution
//! of the coset `C - x`, so the check runs over the coset table. Arbitrary
//! vector sets go through [`cr_oracle_set`], which checks every vector of the
//! ambient space.

mod set;
mod transitive;

pub use set::{covering_set, cr_oracle_set, repeat_recurrence_check, set_profile, CodeSet};
pub use transitive::{is_completely_transitive, orbit_count, Strategy, Transitivity};

use std::collections::BTreeMap;

use crate::code::{Budget, LinearCode};
use crate::error::Result;

/// Distance distributions of a completely regular code.
///
/// `alpha[t][i]` is the number of codewords at distance `i` from any vector at
/// distance `t` from the code, for `0 <= t <= rho`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityProfile {
    pub rho: usize,
    pub alpha: BTreeMap<usize, Vec<u64>>,
}

impl RegularityProfile {
    /// Number of codewords at distance 1 from a vector at distance 1.
    pub fn n_a(&self) -> Option<u64> {
        self.alpha.get(&1).map(|a| a[1])
    }
}

/// Outcome of [`is_completely_regular`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regularity {
    Regular(RegularityProfile),
    /// Two cosets with leaders of weight `leader_weight` have different
    /// weight distributions; `syndromes` are their indices.
    Irregular {
        leader_weight: usize,
        syndromes: (usize, usize),
    },
}

impl Regularity {
    pub fn is_regular(&self) -> bool {
        matches!(self, Regularity::Regular(_))
    }

    pub fn profile(&self) -> Option<&RegularityProfile> {
        match self {
            Regularity::Regular(p) => Some(p),
            Regularity::Irregular { .. } => None,
        }
    }
}

/// Decides complete regularity from the coset table: all cosets with the
/// same leader weight must share one weight distribution.
pub fn is_completely_regular(code: &LinearCode, budget: &Budget) -> Result<Regularity> {
    let table = code.coset_table(budget)?;
    let mut seen: BTreeMap<usize, (usize, &Vec<u64>)> = BTreeMap::new();
    for (idx, e) in table.entries().iter().enumerate() {
        match seen.get(&e.leader_weight) {
            None => {
                seen.insert(e.leader_weight, (idx, &e.distribution));
            }
            Some(&(first, dist)) if dist != &e.distribution => {
                return Ok(Regularity::Irregular {
                    leader_weight: e.leader_weight,
                    syndromes: (first, idx),
                });
            }
            Some(_) => {}
        }
    }
    let alpha: BTreeMap<usize, Vec<u64>> =
        seen.into_iter().map(|(t, (_, d))| (t, d.clone())).collect();
    Ok(Regularity::Regular(RegularityProfile {
        rho: table.covering_radius(),
        alpha,
    }))
}
