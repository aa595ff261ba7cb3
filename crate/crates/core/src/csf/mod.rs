//! Chromatic symmetric functions.
//!
//! The primary route enumerates stable partitions and returns the monomial
//! expansion `X_G = Σ_λ a_λ r_1! r_2! ⋯ m_λ`. Coloring counts give an
//! independent check of single coefficients and of the chromatic polynomial.

mod closed_forms;
mod relations;

use std::collections::{BTreeMap, HashMap};

use num::BigInt;

use crate::error::{guard, Error, Result};
use crate::graphs::Graph;
use crate::partitions::{enumerate_special_rim_hook_tabloids, Partition};
use crate::rational::Rational;
use crate::symfunc::{Basis, SymFn};

pub use closed_forms::*;
pub use relations::{edge_swap_relation_check, triangle_relation_check};

/// Largest graph handed to the stable-partition enumeration (Bell(12) ≈ 4.2M).
pub const MAX_CSF_VERTICES: usize = 12;
/// Largest graph for the coloring oracle.
pub const MAX_ORACLE_VERTICES: usize = 9;
/// Largest graph for the tabloid formula.
pub const MAX_TABLOID_VERTICES: usize = 10;

/// Number of stable partitions of each type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StablePartitionCensus {
    pub order: usize,
    pub counts: BTreeMap<Partition, u64>,
}

impl StablePartitionCensus {
    pub fn count(&self, lambda: &Partition) -> u64 {
        self.counts.get(lambda).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// Walks every stable partition of `g` as a list of block bitmasks.
///
/// Vertices are placed in label order; a vertex may join an existing block
/// only if it has no neighbor there, so every emitted partition is stable and
/// each one is produced exactly once (restricted growth order).
pub fn for_each_stable_partition(g: &Graph, mut visit: impl FnMut(&[u64])) {
    fn rec(g: &Graph, v: usize, blocks: &mut Vec<u64>, visit: &mut dyn FnMut(&[u64])) {
        if v == g.order() {
            visit(blocks);
            return;
        }
        let nbrs = g.neighbor_mask(v);
        for b in 0..blocks.len() {
            if blocks[b] & nbrs == 0 {
                blocks[b] |= 1 << v;
                rec(g, v + 1, blocks, visit);
                blocks[b] &= !(1 << v);
            }
        }
        blocks.push(1 << v);
        rec(g, v + 1, blocks, visit);
        blocks.pop();
    }
    rec(g, 0, &mut Vec::new(), &mut visit);
}

pub fn stable_partition_census(g: &Graph) -> Result<StablePartitionCensus> {
    guard("stable partition census", g.order(), "MAX_CSF_VERTICES", MAX_CSF_VERTICES)?;
    let mut raw: HashMap<Vec<usize>, u64> = HashMap::new();
    let mut sizes = Vec::with_capacity(g.order());
    for_each_stable_partition(g, |blocks| {
        sizes.clear();
        sizes.extend(blocks.iter().map(|b| b.count_ones() as usize));
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        *raw.entry(sizes.clone()).or_insert(0) += 1;
    });
    let counts = raw
        .into_iter()
        .map(|(parts, n)| (Partition::from_unsorted(parts), n))
        .collect();
    Ok(StablePartitionCensus { order: g.order(), counts })
}

/// `X_G` in the monomial basis.
pub fn csf(g: &Graph) -> Result<SymFn> {
    let census = stable_partition_census(g)?;
    Ok(census_to_monomial(&census))
}

pub fn census_to_monomial(census: &StablePartitionCensus) -> SymFn {
    SymFn::from_terms(
        Basis::M,
        census.counts.iter().map(|(lam, &a)| {
            (lam.clone(), Rational::from_integer(BigInt::from(a) * lam.multiplicity_factorial()))
        }),
    )
}

/// `X_G` in the elementary basis, converted through the Schur basis.
pub fn csf_in(g: &Graph, basis: Basis) -> Result<SymFn> {
    crate::symfunc::to_basis(&csf(g)?, basis)
}

/// Number of proper colorings in which color `i` is used exactly `λ_i` times.
/// This is `[m_λ] X_G`.
pub fn csf_coloring_oracle(g: &Graph, lambda: &Partition) -> Result<u64> {
    guard("coloring oracle", g.order(), "MAX_ORACLE_VERTICES", MAX_ORACLE_VERTICES)?;
    if lambda.degree() != g.order() {
        return Ok(0);
    }
    fn rec(g: &Graph, v: usize, colors: &mut [usize], left: &mut [usize]) -> u64 {
        if v == g.order() {
            return 1;
        }
        let mut total = 0;
        for c in 0..left.len() {
            if left[c] == 0 {
                continue;
            }
            let clash = (0..v).any(|u| colors[u] == c && g.neighbor_mask(v) >> u & 1 == 1);
            if !clash {
                left[c] -= 1;
                colors[v] = c;
                total += rec(g, v + 1, colors, left);
                left[c] += 1;
            }
        }
        total
    }
    let mut colors = vec![usize::MAX; g.order()];
    let mut left = lambda.parts().to_vec();
    Ok(rec(g, 0, &mut colors, &mut left))
}

/// Proper colorings of `g` with colors `1..=n`, counted one by one.
pub fn proper_coloring_count(g: &Graph, n: usize) -> Result<u64> {
    guard("coloring count", g.order(), "MAX_ORACLE_VERTICES", MAX_ORACLE_VERTICES)?;
    fn rec(g: &Graph, v: usize, n: usize, colors: &mut [usize]) -> u64 {
        if v == g.order() {
            return 1;
        }
        let mut total = 0;
        for c in 0..n {
            if !(0..v).any(|u| colors[u] == c && g.neighbor_mask(v) >> u & 1 == 1) {
                colors[v] = c;
                total += rec(g, v + 1, n, colors);
            }
        }
        total
    }
    Ok(rec(g, 0, n, &mut vec![usize::MAX; g.order()]))
}

/// `[s_λ] X_G` as a signed sum over special rim hook tabloids of shape `λ`.
///
/// A tabloid of hook type `κ` contributes `±a_κ Π_j r_j(κ)!`, the number of
/// stable partitions of type `κ` with equal-size blocks ordered; the sign is
/// negative when an odd number of hooks span an even number of rows.
pub fn schur_coeff_via_tabloids(g: &Graph, lambda: &Partition) -> Result<BigInt> {
    if lambda.degree() != g.order() {
        return Err(Error::DegreeMismatch { left: g.order(), right: lambda.degree() });
    }
    guard("tabloid formula", g.order(), "MAX_TABLOID_VERTICES", MAX_TABLOID_VERTICES)?;
    let census = stable_partition_census(g)?;
    let mut total = BigInt::from(0);
    for t in enumerate_special_rim_hook_tabloids(lambda) {
        let kappa = t.hook_type();
        let a = census.count(&kappa);
        if a == 0 {
            continue;
        }
        let n_t = BigInt::from(a) * kappa.multiplicity_factorial();
        total += n_t * t.sign();
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, cycle, fork, path, tadpole};
    use crate::partitions::partitions_of;
    use crate::rational::rat;
    use crate::symfunc::to_basis;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn single_vertex() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(csf(&k1).unwrap(), SymFn::element(Basis::M, p(&[1])));
        assert_eq!(csf_in(&k1, Basis::E).unwrap(), SymFn::e(&[1]));
    }

    #[test]
    fn census_always_has_all_singletons() {
        for g in [fork(), cycle(5).unwrap(), complete(4).unwrap()] {
            let c = stable_partition_census(&g).unwrap();
            assert_eq!(c.count(&Partition::column(g.order())), 1);
        }
        assert_eq!(stable_partition_census(&complete(4).unwrap()).unwrap().total(), 1);
        // Edgeless graph: every set partition is stable, Bell(5) = 52.
        assert_eq!(stable_partition_census(&Graph::empty(5).unwrap()).unwrap().total(), 52);
    }

    #[test]
    fn fork_elementary_expansion() {
        let expect = SymFn::from_terms(
            Basis::E,
            [
                (p(&[5]), rat(5)),
                (p(&[4, 1]), rat(7)),
                (p(&[3, 2]), rat(1)),
                (p(&[3, 1, 1]), rat(2)),
                (p(&[2, 2, 1]), rat(1)),
            ],
        );
        assert_eq!(csf_in(&fork(), Basis::E).unwrap(), expect);
    }

    #[test]
    fn coloring_oracle_on_an_edge() {
        let k2 = path(2).unwrap();
        assert_eq!(csf_coloring_oracle(&k2, &p(&[1, 1])).unwrap(), 2);
        assert_eq!(csf_coloring_oracle(&k2, &p(&[2])).unwrap(), 0);
    }

    #[test]
    fn coloring_oracle_matches_monomial_expansion() {
        let g = tadpole(3, 1).unwrap();
        let x = csf(&g).unwrap();
        for lam in partitions_of(4) {
            let direct = csf_coloring_oracle(&g, &lam).unwrap();
            assert_eq!(x.get(&lam), rat(direct as i64), "{lam}");
        }
    }

    #[test]
    fn guards() {
        let big = Graph::empty(13).unwrap();
        assert!(matches!(csf(&big), Err(Error::TooLarge { limit: 12, .. })));
        let ten = Graph::empty(10).unwrap();
        assert!(matches!(csf_coloring_oracle(&ten, &Partition::column(10)), Err(Error::TooLarge { .. })));
        assert!(matches!(
            schur_coeff_via_tabloids(&fork(), &p(&[2, 2])),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn tabloid_formula_small_cases() {
        assert_eq!(schur_coeff_via_tabloids(&path(2).unwrap(), &p(&[1, 1])).unwrap(), BigInt::from(2));
        let s = to_basis(&csf(&fork()).unwrap(), Basis::S).unwrap();
        for lam in partitions_of(5) {
            let via = schur_coeff_via_tabloids(&fork(), &lam).unwrap();
            assert_eq!(Rational::from_integer(via), s.get(&lam), "{lam}");
        }
    }
}
