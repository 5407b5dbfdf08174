use crate::code::span::check_budget;
use crate::code::{Budget, LinearCode};
use crate::error::{Error, Result};
use crate::linalg::{lex_index, MonomialMap};

/// How automorphisms are obtained for [`is_completely_transitive`].
#[derive(Clone, Copy, Debug)]
pub enum Strategy<'a> {
    /// Orbits of the subgroup generated by these maps. Each map must be an
    /// automorphism of the code.
    Generated(&'a [MonomialMap]),
    /// Every monomial map of `F_q^n`, filtered to automorphisms.
    Exhaustive,
}

/// Orbit data for the action of a group of automorphisms on cosets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transitivity {
    pub rho: usize,
    /// Number of orbits on the cosets.
    pub orbits: usize,
    pub completely_transitive: bool,
    /// Number of orbits on the `(q - 1) n` vectors of weight one.
    pub weight_one_orbits: usize,
    /// Automorphisms used to generate the group.
    pub automorphisms: usize,
    /// Monomial maps examined (equals the generator count for the generated
    /// strategy).
    pub maps_examined: u64,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }

    fn components(&mut self) -> usize {
        (0..self.0.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// Orbits of the group generated by `maps` on the cosets of `code`, and on
/// the weight-one vectors.
fn orbits(code: &LinearCode, maps: &[MonomialMap], budget: &Budget) -> Result<(usize, usize)> {
    let f = code.field();
    let q = f.q();
    let n = code.n();
    let h = code.parity_check();
    let leaders = code.leaders(budget)?;
    let total = leaders.leaders.len();
    let columns: Vec<Vec<u8>> = (0..n).map(|j| h.column(j)).collect();

    let mut cosets = UnionFind::new(total);
    let mut units = UnionFind::new(n * (q - 1));
    let mut syn = vec![0u8; h.rows()];
    for g in maps {
        for (s, leader) in leaders.leaders.iter().enumerate() {
            syn.iter_mut().for_each(|v| *v = 0);
            for &(p, a) in leader {
                let c = f.mul(a, g.scales()[p]);
                for (v, &x) in syn.iter_mut().zip(&columns[g.perm()[p]]) {
                    *v = f.add(*v, f.mul(c, x));
                }
            }
            cosets.union(s, lex_index(q, &syn));
        }
        for j in 0..n {
            for a in 1..q as u8 {
                let b = f.mul(a, g.scales()[j]);
                units.union(
                    j * (q - 1) + a as usize - 1,
                    g.perm()[j] * (q - 1) + b as usize - 1,
                );
            }
        }
    }
    Ok((cosets.components(), units.components()))
}

/// Number of coset orbits under the group generated by `maps`, without
/// checking that the maps are automorphisms.
pub fn orbit_count(code: &LinearCode, maps: &[MonomialMap], budget: &Budget) -> Result<usize> {
    Ok(orbits(code, maps, budget)?.0)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn all_automorphisms(code: &LinearCode, budget: &Budget) -> Result<(Vec<MonomialMap>, u64)> {
    let f = code.field();
    let q = f.q() as u128;
    let n = code.n();
    let needed = (1..=n as u128)
        .try_fold(1u128, |acc, i| acc.checked_mul(i))
        .and_then(|fact| (0..n).try_fold(fact, |acc, _| acc.checked_mul(q - 1)));
    check_budget("monomial enumeration", needed, budget.monomial)?;

    let mut found = Vec::new();
    let mut examined = 0u64;
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut scales = vec![1u8; n];
        loop {
            examined += 1;
            let map = MonomialMap::new(f, perm.clone(), scales.clone())?;
            if code.is_automorphism(&map) {
                found.push(map);
            }
            let mut i = n;
            let mut carried = true;
            while carried && i > 0 {
                i -= 1;
                if scales[i] as u128 + 1 == q {
                    scales[i] = 1;
                } else {
                    scales[i] += 1;
                    carried = false;
                }
            }
            if carried {
                break;
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok((found, examined))
}

/// Decides complete transitivity: the automorphism group must have exactly
/// `rho + 1` orbits on the cosets.
///
/// With [`Strategy::Generated`] a subgroup reaching `rho + 1` orbits
/// certifies the property, while more orbits prove nothing and give
/// [`Error::Indeterminate`].
pub fn is_completely_transitive(
    code: &LinearCode,
    strategy: Strategy<'_>,
    budget: &Budget,
) -> Result<Transitivity> {
    let rho = code.covering_radius(budget)?;
    let (maps, examined) = match strategy {
        Strategy::Generated(gens) => {
            if let Some(i) = gens.iter().position(|g| !code.is_automorphism(g)) {
                return Err(Error::NotAnAutomorphism(i));
            }
            (gens.to_vec(), gens.len() as u64)
        }
        Strategy::Exhaustive => all_automorphisms(code, budget)?,
    };
    let (orbits, weight_one_orbits) = orbits(code, &maps, budget)?;
    if orbits > rho + 1 && matches!(strategy, Strategy::Generated(_)) {
        return Err(Error::Indeterminate {
            orbits,
            expected: rho + 1,
        });
    }
    Ok(Transitivity {
        rho,
        orbits,
        completely_transitive: orbits == rho + 1,
        weight_one_orbits,
        automorphisms: maps.len(),
        maps_examined: examined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;
    use crate::linalg::Matrix;

    #[test]
    fn even_weight_exhaustive() {
        let f = FieldSpec::prime(2).unwrap();
        let c =
            LinearCode::from_generator(&Matrix::from_rows(&f, &[[1u8, 0, 1], [0, 1, 1]]).unwrap())
                .unwrap();
        let t = is_completely_transitive(&c, Strategy::Exhaustive, &Budget::default()).unwrap();
        assert_eq!(t.orbits, 2);
        assert!(t.completely_transitive);
        assert_eq!(t.automorphisms, 6);
        assert_eq!(t.maps_examined, 6);
        assert_eq!(t.weight_one_orbits, 1);
    }

    #[test]
    fn whole_space_has_one_orbit() {
        let f = FieldSpec::prime(3).unwrap();
        let c = LinearCode::whole_space(&f, 2).unwrap();
        let id = [MonomialMap::identity(&f, 2)];
        let t = is_completely_transitive(&c, Strategy::Generated(&id), &Budget::default()).unwrap();
        assert_eq!((t.orbits, t.completely_transitive), (1, true));
    }

    #[test]
    fn generated_strategy_reports_indeterminate_and_bad_maps() {
        let f = FieldSpec::prime(2).unwrap();
        let rep =
            LinearCode::from_generator(&Matrix::from_rows(&f, &[[1u8, 1, 1]]).unwrap()).unwrap();
        let id = [MonomialMap::identity(&f, 3)];
        assert_eq!(
            is_completely_transitive(&rep, Strategy::Generated(&id), &Budget::default())
                .unwrap_err(),
            Error::Indeterminate {
                orbits: 4,
                expected: 2
            }
        );
        let c =
            LinearCode::from_generator(&Matrix::from_rows(&f, &[[1u8, 1, 0]]).unwrap()).unwrap();
        let swap = [
            MonomialMap::identity(&f, 3),
            MonomialMap::transposition(&f, 3, 0, 2),
        ];
        assert_eq!(
            is_completely_transitive(&c, Strategy::Generated(&swap), &Budget::default())
                .unwrap_err(),
            Error::NotAnAutomorphism(1)
        );
    }

    #[test]
    fn exhaustive_budget_is_checked() {
        let f = FieldSpec::prime(3).unwrap();
        let c = LinearCode::from_generator(&Matrix::from_rows(&f, &[[1u8; 9]]).unwrap()).unwrap();
        let b = Budget {
            monomial: 1000,
            ..Budget::default()
        };
        assert!(matches!(
            is_completely_transitive(&c, Strategy::Exhaustive, &b),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
