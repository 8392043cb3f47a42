//! Brute-force Betti numbers from the Taylor resolution.
//!
//! The Taylor complex has a basis element `e_T` for every nonempty subset `T`
//! of the generators, in homological degree `|T| - 1` and multidegree
//! `lcm(T)`. After tensoring with the residue field only the terms with
//! `lcm(T \ {j}) = lcm(T)` survive in the differential, so the complex splits
//! into strands indexed by `b = lcm(T)`, and the homology of strand `b` in
//! degree `i` is `β_{i,b}(I)`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::betti::{BettiEngine, BettiTable, Indexing};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialIdeal};

pub const DEFAULT_ORACLE_CAP: usize = 16;

/// The subsets `T` with `lcm(T) = b`, grouped by size.
#[derive(Clone, Debug)]
pub struct TaylorComplexSlice {
    pub multidegree: Monomial,
    /// `by_degree[i]` holds the masks with `i + 1` elements, sorted.
    pub by_degree: Vec<Vec<u32>>,
}

impl TaylorComplexSlice {
    /// Matrix of the strand differential from degree `i` to `i - 1`.
    pub fn boundary(&self, i: usize) -> Vec<Vec<i64>> {
        let empty = Vec::new();
        let upper = self.by_degree.get(i).unwrap_or(&empty);
        let lower = if i == 0 { &empty } else { self.by_degree.get(i - 1).unwrap_or(&empty) };
        let mut rows = vec![vec![0i64; upper.len()]; lower.len()];
        for (col, &t) in upper.iter().enumerate() {
            let mut sign = 1;
            for j in 0..32 {
                if t & (1 << j) == 0 {
                    continue;
                }
                // faces with a smaller lcm live in another strand
                if let Ok(row) = lower.binary_search(&(t & !(1 << j))) {
                    rows[row][col] = sign;
                }
                sign = -sign;
            }
        }
        rows
    }

    /// Checks that consecutive differentials compose to zero.
    pub fn boundary_squares_to_zero(&self) -> bool {
        (2..self.by_degree.len()).all(|i| {
            let hi = self.boundary(i);
            let lo = self.boundary(i - 1);
            let cols = hi.first().map_or(0, Vec::len);
            lo.iter().all(|lo_row| {
                (0..cols).all(|c| lo_row.iter().zip(&hi).map(|(a, row)| a * row[c]).sum::<i64>() == 0)
            })
        })
    }

    /// `dim H_i` of the strand for each degree `i`.
    pub fn homology(&self, field: Field) -> Vec<usize> {
        let top = self.by_degree.len();
        let ranks: Vec<usize> = (0..=top)
            .map(|i| {
                if i == 0 || i >= top {
                    return 0;
                }
                let m = self.boundary(i);
                if m.is_empty() || m[0].is_empty() {
                    0
                } else {
                    field.rank(&m)
                }
            })
            .collect();
        (0..top)
            .map(|i| self.by_degree[i].len() - ranks[i] - ranks[i + 1])
            .collect()
    }
}

/// All strands of the Taylor complex of `ideal`.
pub fn taylor_slices(ideal: &MonomialIdeal, cap: usize) -> Result<Vec<TaylorComplexSlice>> {
    let gens = ideal.generators();
    let s = gens.len();
    if s > cap || s > 31 {
        return Err(Error::OracleCap { gens: s, cap: cap.min(31) });
    }
    let mut lcms: Vec<Option<Monomial>> = vec![None; 1 << s];
    let mut strands: BTreeMap<Monomial, Vec<Vec<u32>>> = BTreeMap::new();
    for mask in 1u32..(1 << s) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let l = match &lcms[rest as usize] {
            Some(r) => r.lcm(&gens[low]),
            None => gens[low].clone(),
        };
        let deg = mask.count_ones() as usize - 1;
        let strand = strands.entry(l.clone()).or_default();
        if strand.len() <= deg {
            strand.resize(deg + 1, Vec::new());
        }
        strand[deg].push(mask);
        lcms[mask as usize] = Some(l);
    }
    Ok(strands
        .into_iter()
        .map(|(multidegree, mut by_degree)| {
            by_degree.iter_mut().for_each(|v| v.sort_unstable());
            TaylorComplexSlice { multidegree, by_degree }
        })
        .collect())
}

/// Multigraded Betti numbers of `ideal` (ideal indexing) from the Taylor complex.
pub fn taylor_betti(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    taylor_betti_with_cap(ideal, field, DEFAULT_ORACLE_CAP)
}

pub fn taylor_betti_with_cap(ideal: &MonomialIdeal, field: Field, cap: usize) -> Result<BettiTable> {
    ideal.ensure_proper_nonzero()?;
    let slices = taylor_slices(ideal, cap)?;
    let computed: Vec<(Monomial, Vec<usize>)> = slices
        .par_iter()
        .map(|slice| {
            if !slice.boundary_squares_to_zero() {
                return Err(Error::Certificate(format!(
                    "Taylor differential squares to nonzero at {:?}",
                    slice.multidegree
                )));
            }
            Ok((slice.multidegree.clone(), slice.homology(field)))
        })
        .collect::<Result<_>>()?;
    let mut table = BettiTable::new(Indexing::Ideal, ideal.arity());
    for (b, dims) in computed {
        for (i, d) in dims.into_iter().enumerate() {
            table.insert(i, b.clone(), d);
        }
    }
    Ok(table)
}

/// Outcome of comparing the engine against the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub agree: bool,
    /// First `(i, b)` where the tables differ, with (engine, oracle) values.
    pub discrepancy: Option<(usize, Monomial, usize, usize)>,
}

/// Compare [`BettiEngine::betti_table`] with [`taylor_betti`] entrywise.
pub fn cross_check(ideal: &MonomialIdeal, field: Field) -> Result<CrossCheck> {
    let engine = BettiEngine::new(field).betti_table(ideal)?;
    let oracle = taylor_betti(ideal, field)?;
    Ok(match engine.first_difference(&oracle) {
        None => CrossCheck { agree: true, discrepancy: None },
        Some((i, b)) => {
            let (e, o) = (engine.get(i, &b), oracle.get(i, &b));
            CrossCheck { agree: false, discrepancy: Some((i, b, e, o)) }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Ring;

    fn ideal(vars: &[&str], rows: &[&[u16]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(Ring::new(vars.iter().copied()).unwrap(), rows).unwrap()
    }

    #[test]
    fn principal_ideal() {
        let i = ideal(&["x", "y"], &[&[2, 1]]);
        let t = taylor_betti(&i, Field::default()).unwrap();
        assert_eq!(t.totals(), vec![1]);
        assert_eq!(t.get(0, &Monomial::new(&[2, 1])), 1);
    }

    #[test]
    fn two_generators() {
        let i = ideal(&["x", "y", "z"], &[&[1, 1, 0], &[0, 1, 1]]);
        let t = taylor_betti(&i, Field::Rationals).unwrap();
        assert_eq!(t.totals(), vec![2, 1]);
        assert_eq!(t.get(1, &Monomial::new(&[1, 1, 1])), 1);
    }

    #[test]
    fn non_minimal_strands_cancel() {
        // (x, y, z): the Taylor complex is the Koszul complex, already minimal
        let k = ideal(&["x", "y", "z"], &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(taylor_betti(&k, Field::default()).unwrap().totals(), vec![3, 3, 1]);
        // (xy, xz, yz): the triple lcm xyz equals each pairwise lcm, so the strand cancels to totals 3, 2
        let t = ideal(&["x", "y", "z"], &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(taylor_betti(&t, Field::default()).unwrap().totals(), vec![3, 2]);
    }

    #[test]
    fn agrees_with_engine_on_prop_ideal() {
        let i = ideal(&["x", "y", "z"], &[&[3, 0, 0], &[1, 1, 1], &[0, 2, 1]]);
        for f in [Field::Prime(2), Field::Prime(3), Field::Rationals] {
            let t = taylor_betti(&i, f).unwrap();
            assert_eq!(t.totals(), vec![3, 2]);
            assert!(cross_check(&i, f).unwrap().agree);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let ring = Ring::indexed("x", 2).unwrap();
        let gens = (0..17u16).map(|a| Monomial::new(&[a, 16 - a])).collect();
        let i = MonomialIdeal::new(ring, gens).unwrap();
        assert_eq!(
            taylor_betti(&i, Field::default()).unwrap_err(),
            Error::OracleCap { gens: 17, cap: 16 }
        );
    }
}
