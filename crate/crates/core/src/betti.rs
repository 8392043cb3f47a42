//! Multigraded Betti numbers of monomial ideals.
//!
//! For a multidegree `b`, `β_{i,b}(I)` is the dimension of the reduced
//! homology in degree `i-1` of the upper Koszul complex
//! `{τ ⊆ supp(b) : x^{b-τ} ∈ I}`. Nonzero Betti numbers only occur at
//! multidegrees in the lcm lattice of the minimal generators, so the engine
//! enumerates that lattice and computes one small homology per element.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{minimalize, Monomial, MonomialIdeal};

pub const DEFAULT_LATTICE_CAP: usize = 200_000;

/// Whether homological indices refer to the ideal `I` or the quotient `S/I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Indexing {
    Ideal,
    Quotient,
}

/// All lcms of nonempty subsets of the minimal generators, canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultidegreeLattice {
    elements: Vec<Monomial>,
}

impl MultidegreeLattice {
    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.elements.binary_search(m).is_ok()
    }
}

/// Nonzero multigraded Betti numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    indexing: Indexing,
    arity: usize,
    entries: BTreeMap<(usize, Monomial), usize>,
}

impl BettiTable {
    pub fn new(indexing: Indexing, arity: usize) -> Self {
        Self { indexing, arity, entries: BTreeMap::new() }
    }

    /// Record a dimension; zeros are ignored.
    pub fn insert(&mut self, i: usize, b: Monomial, dim: usize) {
        if dim > 0 {
            self.entries.insert((i, b), dim);
        }
    }

    pub fn indexing(&self) -> Indexing {
        self.indexing
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, i: usize, b: &Monomial) -> usize {
        self.entries.get(&(i, b.clone())).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &Monomial, usize)> {
        self.entries.iter().map(|((i, b), &d)| (*i, b, d))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total Betti number `β_i = Σ_b β_{i,b}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((j, _), _)| *j == i)
            .map(|(_, &d)| d)
            .sum()
    }

    /// Largest index with a nonzero entry, in this table's indexing.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// Totals `β_0, β_1, ...` up to the projective dimension.
    pub fn totals(&self) -> Vec<usize> {
        match self.projective_dimension() {
            None => Vec::new(),
            Some(pd) => (0..=pd).map(|i| self.total(i)).collect(),
        }
    }

    /// Re-index an ideal table for the quotient: shift by one and add `β_{0,1} = 1`.
    pub fn to_quotient(&self) -> BettiTable {
        match self.indexing {
            Indexing::Quotient => self.clone(),
            Indexing::Ideal => {
                let mut out = BettiTable::new(Indexing::Quotient, self.arity);
                out.insert(0, Monomial::one(self.arity), 1);
                for ((i, b), &d) in &self.entries {
                    out.insert(i + 1, b.clone(), d);
                }
                out
            }
        }
    }

    /// First `(i, b)` where the two tables differ, scanning in key order.
    pub fn first_difference(&self, other: &BettiTable) -> Option<(usize, Monomial)> {
        let keys: std::collections::BTreeSet<&(usize, Monomial)> =
            self.entries.keys().chain(other.entries.keys()).collect();
        keys.into_iter()
            .find(|k| self.entries.get(k) != other.entries.get(k))
            .cloned()
    }
}

/// Upper Koszul simplicial complex of `I` at multidegree `b`, on the ring's variables.
pub fn upper_koszul(ideal: &MonomialIdeal, b: &Monomial) -> Result<SimplicialComplex> {
    let n = ideal.arity();
    if b.arity() != n {
        return Err(Error::ArityMismatch { expected: n, found: b.arity() });
    }
    if n > 64 {
        return Err(Error::TooManyVariables { arity: n, max: 64 });
    }
    Ok(SimplicialComplex::from_facets(n, &koszul_facets(ideal.generators(), b)))
}

/// For each generator `g | b` the face `{v : g_v < b_v}`; their downward
/// closure is exactly the upper Koszul complex.
fn koszul_facets(gens: &[Monomial], b: &Monomial) -> Vec<u64> {
    gens.iter()
        .filter(|g| g.divides(b))
        .map(|g| {
            g.exponents()
                .iter()
                .zip(b.exponents())
                .enumerate()
                .filter(|(_, (ge, be))| ge < be)
                .fold(0u64, |acc, (v, _)| acc | (1 << v))
        })
        .collect()
}

/// Computes Betti tables and depths over a fixed field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BettiEngine {
    pub field: Field,
    pub lattice_cap: usize,
}

impl Default for BettiEngine {
    fn default() -> Self {
        Self { field: Field::default(), lattice_cap: DEFAULT_LATTICE_CAP }
    }
}

impl BettiEngine {
    pub fn new(field: Field) -> Self {
        Self { field, ..Self::default() }
    }

    pub fn with_lattice_cap(mut self, cap: usize) -> Self {
        self.lattice_cap = cap;
        self
    }

    pub fn lcm_lattice(&self, ideal: &MonomialIdeal) -> Result<MultidegreeLattice> {
        ideal.ensure_proper_nonzero()?;
        let gens = ideal.generators();
        if gens.len() > self.lattice_cap {
            return Err(Error::LatticeCap { cap: self.lattice_cap });
        }
        let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
        let mut frontier: Vec<Monomial> = gens.to_vec();
        // closing under lcm with single generators reaches every subset lcm
        while !frontier.is_empty() {
            let fresh: Vec<Monomial> = frontier
                .par_iter()
                .flat_map_iter(|e| gens.iter().map(move |g| e.lcm(g)))
                .filter(|l| !seen.contains(l))
                .collect();
            let mut next = Vec::new();
            for l in fresh {
                if seen.insert(l.clone()) {
                    next.push(l);
                    if seen.len() > self.lattice_cap {
                        return Err(Error::LatticeCap { cap: self.lattice_cap });
                    }
                }
            }
            frontier = next;
        }
        let mut elements: Vec<Monomial> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(MultidegreeLattice { elements })
    }

    /// Betti table of the ideal (index 0 = minimal generators).
    pub fn betti_table(&self, ideal: &MonomialIdeal) -> Result<BettiTable> {
        Ok(self.betti_table_with_lattice(ideal)?.0)
    }

    fn betti_table_with_lattice(&self, ideal: &MonomialIdeal) -> Result<(BettiTable, usize)> {
        let n = ideal.arity();
        if n > 64 {
            return Err(Error::TooManyVariables { arity: n, max: 64 });
        }
        let lattice = self.lcm_lattice(ideal)?;
        let gens = ideal.generators();
        let field = self.field;
        let found: Vec<(usize, Monomial, usize)> = lattice
            .elements
            .par_iter()
            .flat_map_iter(|b| {
                let complex = SimplicialComplex::from_facets(n, &koszul_facets(gens, b));
                let mut out = Vec::new();
                if !complex.is_cone() {
                    for (deg, dim) in complex.reduced_homology(field).nonzero() {
                        out.push(((deg + 1) as usize, b.clone(), dim));
                    }
                }
                out
            })
            .collect();
        let mut table = BettiTable::new(Indexing::Ideal, n);
        for (i, b, d) in found {
            table.insert(i, b, d);
        }
        Ok((table, lattice.len()))
    }

    /// `depth S/I = n - pd(S/I) = n - 1 - pd(I)`.
    pub fn depth_of_quotient(&self, ideal: &MonomialIdeal) -> Result<usize> {
        ideal.ensure_proper_nonzero()?;
        let table = self.betti_table(ideal)?;
        let pd = table.projective_dimension().expect("nonzero ideal has generators");
        Ok(ideal.arity() - 1 - pd)
    }

    /// Depth of `S/I^k` for `k = 1..=k_max`; a nonzero socle skips the Betti computation.
    pub fn depth_prefix(&self, ideal: &MonomialIdeal, k_max: usize) -> Result<Vec<DepthRow>> {
        ideal.ensure_proper_nonzero()?;
        let n = ideal.arity();
        let mut rows = Vec::with_capacity(k_max);
        for (idx, power) in ideal.powers(k_max)?.into_iter().enumerate() {
            let k = idx + 1;
            let row = if socle_nonzero(&power)? {
                DepthRow { k, depth: 0, num_generators: power.num_generators(), lattice_size: None }
            } else {
                let (table, lattice_size) = self.betti_table_with_lattice(&power)?;
                let pd = table.projective_dimension().expect("nonzero ideal has generators");
                DepthRow {
                    k,
                    depth: n - 1 - pd,
                    num_generators: power.num_generators(),
                    lattice_size: Some(lattice_size),
                }
            };
            rows.push(row);
        }
        Ok(rows)
    }

    /// Just the depth values of [`depth_prefix`](Self::depth_prefix).
    pub fn depths(&self, ideal: &MonomialIdeal, k_max: usize) -> Result<Vec<usize>> {
        Ok(self.depth_prefix(ideal, k_max)?.iter().map(|r| r.depth).collect())
    }
}

/// One row of a depth table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthRow {
    pub k: usize,
    pub depth: usize,
    pub num_generators: usize,
    /// `None` when depth 0 was detected by the socle test.
    pub lattice_size: Option<usize>,
}

impl DepthRow {
    /// Projective dimension of the quotient `S/I^k` in a ring of the given arity.
    pub fn pd_quotient(&self, arity: usize) -> usize {
        arity - self.depth
    }
}

/// Whether `(I : m) ≠ I` for the maximal ideal `m`, i.e. `depth S/I = 0`.
///
/// Works with the parts of `(I : x_v)` outside `I`: a monomial lies in
/// `(I : m) \ I` exactly when it lies in every `({g / x_v : g_v > 0})` and
/// not in `I`, and any intermediate generator already in `I` can be dropped.
pub fn socle_nonzero(ideal: &MonomialIdeal) -> Result<bool> {
    ideal.ensure_proper_nonzero()?;
    let gens = ideal.generators();
    let divided = |v: usize| -> Vec<Monomial> {
        let xv = ideal.ring().var(v);
        minimalize(
            gens.iter()
                .filter(|g| g.exponent(v) > 0)
                .map(|g| g.monus(&xv))
                .collect(),
        )
    };
    // g / x_v is never in I when g is a minimal generator
    let mut current = divided(0);
    for v in 1..ideal.arity() {
        if current.is_empty() {
            return Ok(false);
        }
        let next = divided(v);
        let candidates: Vec<Monomial> = current
            .par_iter()
            .flat_map_iter(|a| next.iter().map(move |b| a.lcm(b)))
            .collect::<HashSet<_>>()
            .into_par_iter()
            .filter(|c| !ideal.contains_unchecked(c))
            .collect();
        current = minimalize(candidates);
    }
    Ok(!current.is_empty())
}

/// Eventual behavior read off a finite depth prefix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stability {
    Stable { limit: usize, dstab: usize, certified: bool },
    /// The final constant run is shorter than the window.
    Inconclusive { run: usize, window: usize },
}

impl Stability {
    /// Mark as certified when it matches a predicted `(limit, dstab)`.
    pub fn certify(self, predicted_limit: usize, predicted_dstab: usize) -> Self {
        match self {
            Stability::Stable { limit, dstab, .. }
                if limit == predicted_limit && dstab == predicted_dstab =>
            {
                Stability::Stable { limit, dstab, certified: true }
            }
            other => other,
        }
    }
}

/// Start of the final constant run of the prefix, provided the run has at
/// least `window` values. Never certified by itself.
pub fn observed_limit_and_dstab(prefix: &[usize], window: usize) -> Result<Stability> {
    let window = window.max(1);
    let last = *prefix
        .last()
        .ok_or_else(|| Error::Precondition("empty depth prefix".into()))?;
    let run = prefix.iter().rev().take_while(|&&d| d == last).count();
    if run < window {
        return Ok(Stability::Inconclusive { run, window });
    }
    Ok(Stability::Stable { limit: last, dstab: prefix.len() - run + 1, certified: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{Exponent, Ring};

    fn ideal(vars: &[&str], rows: &[&[Exponent]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(Ring::new(vars.iter().copied()).unwrap(), rows).unwrap()
    }

    fn t3() -> MonomialIdeal {
        ideal(&["x", "y", "z"], &[&[3, 0, 0], &[1, 1, 1], &[0, 2, 1]])
    }

    #[test]
    fn lattice_examples() {
        let e = BettiEngine::default();
        let single = ideal(&["x", "y"], &[&[2, 1]]);
        assert_eq!(e.lcm_lattice(&single).unwrap().elements(), single.generators());

        let xy = ideal(&["x", "y"], &[&[1, 0], &[0, 1]]);
        let l = e.lcm_lattice(&xy).unwrap();
        assert_eq!(l.len(), 3);
        assert!(l.contains(&Monomial::new(&[1, 1])));

        let l = e.lcm_lattice(&t3()).unwrap();
        for m in [[3, 1, 1], [1, 2, 1], [3, 2, 1]] {
            assert!(l.contains(&Monomial::new(&m)), "{m:?}");
        }
    }

    #[test]
    fn lattice_cap_is_enforced() {
        let e = BettiEngine::default().with_lattice_cap(4);
        assert_eq!(e.lcm_lattice(&t3()), Err(Error::LatticeCap { cap: 4 }));
    }

    #[test]
    fn upper_koszul_examples() {
        let i = t3();
        for g in i.generators() {
            let c = upper_koszul(&i, g).unwrap();
            assert_eq!(c.faces(), &[0]);
        }
        let outside = upper_koszul(&i, &Monomial::new(&[2, 2, 0])).unwrap();
        assert!(outside.is_void());

        let xy = ideal(&["x", "y"], &[&[1, 0], &[0, 1]]);
        let c = upper_koszul(&xy, &Monomial::new(&[1, 1])).unwrap();
        assert_eq!(c.faces(), &[0, 0b01, 0b10]);
    }

    #[test]
    fn principal_ideal_table() {
        let i = ideal(&["x", "y", "z"], &[&[2, 1, 0]]);
        let t = BettiEngine::default().betti_table(&i).unwrap();
        assert_eq!(t.totals(), vec![1]);
        assert_eq!(BettiEngine::default().depth_of_quotient(&i).unwrap(), 2);
    }

    #[test]
    fn t3_family_table() {
        for field in [Field::Prime(2), Field::Prime(3), Field::Rationals] {
            let t = BettiEngine::new(field).betti_table(&t3()).unwrap();
            assert_eq!(t.totals(), vec![3, 2]);
            assert_eq!(BettiEngine::new(field).depth_of_quotient(&t3()).unwrap(), 1);
        }
    }

    #[test]
    fn two_generator_table() {
        let i = ideal(&["x", "y", "z"], &[&[1, 1, 0], &[0, 1, 1]]);
        let t = BettiEngine::default().betti_table(&i).unwrap();
        assert_eq!(t.totals(), vec![2, 1]);
        assert_eq!(t.get(1, &Monomial::new(&[1, 1, 1])), 1);
    }

    #[test]
    fn generators_are_the_degree_zero_entries() {
        let i = ideal(&["x", "y", "z"], &[&[2, 0, 0], &[1, 0, 1], &[0, 1, 1]]).power(3).unwrap();
        let t = BettiEngine::default().betti_table(&i).unwrap();
        let zero: Vec<&Monomial> = t.entries().filter(|e| e.0 == 0).map(|e| e.1).collect();
        assert_eq!(zero, i.generators().iter().collect::<Vec<_>>());
        assert!(t.entries().filter(|e| e.0 == 0).all(|e| e.2 == 1));
    }

    #[test]
    fn variable_ideal_depth() {
        // (x1, x2) in 5 variables has depth 3
        let i = ideal(&["a", "b", "c", "d", "e"], &[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0]]);
        assert_eq!(BettiEngine::default().depth_of_quotient(&i).unwrap(), 3);
    }

    #[test]
    fn quotient_indexing() {
        let t = BettiEngine::default().betti_table(&t3()).unwrap().to_quotient();
        assert_eq!(t.indexing(), Indexing::Quotient);
        assert_eq!(t.totals(), vec![1, 3, 2]);
    }

    #[test]
    fn depth_rejects_zero_and_unit() {
        let r = Ring::new(["x", "y"]).unwrap();
        let e = BettiEngine::default();
        assert_eq!(e.depth_of_quotient(&MonomialIdeal::zero(r.clone())), Err(Error::ZeroIdeal));
        assert_eq!(e.depth_of_quotient(&MonomialIdeal::unit(r)), Err(Error::UnitIdeal));
    }

    #[test]
    fn depth_prefix_t2() {
        let i = ideal(&["x", "y", "z"], &[&[2, 0, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(BettiEngine::default().depths(&i, 3).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn socle_examples() {
        let t2 = ideal(&["x", "y", "z"], &[&[2, 0, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert!(socle_nonzero(&t2.power(2).unwrap()).unwrap());
        assert!(!socle_nonzero(&ideal(&["x", "y"], &[&[1, 0]])).unwrap());
        assert!(!socle_nonzero(&t3().power(2).unwrap()).unwrap());
        assert!(socle_nonzero(&ideal(&["x"], &[&[3]])).unwrap());
    }

    #[test]
    fn socle_agrees_with_colon_definition() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let m = MonomialIdeal::maximal(r);
        for i in [t3(), t3().power(3).unwrap(), t3().power(2).unwrap()] {
            let colon = i.colon_ideal(&m).unwrap();
            let by_colon = colon.generators().iter().any(|g| !i.contains(g).unwrap());
            assert_eq!(socle_nonzero(&i).unwrap(), by_colon);
        }
    }

    #[test]
    fn stability_observation() {
        assert_eq!(
            observed_limit_and_dstab(&[1, 0, 0, 0], 2).unwrap(),
            Stability::Stable { limit: 0, dstab: 2, certified: false }
        );
        assert_eq!(
            observed_limit_and_dstab(&[3, 3, 3], 3).unwrap(),
            Stability::Stable { limit: 3, dstab: 1, certified: false }
        );
        assert_eq!(
            observed_limit_and_dstab(&[2, 2, 1], 2).unwrap(),
            Stability::Inconclusive { run: 1, window: 2 }
        );
        assert!(observed_limit_and_dstab(&[], 2).is_err());
        let s = observed_limit_and_dstab(&[1, 0, 0, 0], 2).unwrap();
        assert_eq!(s.certify(0, 2), Stability::Stable { limit: 0, dstab: 2, certified: true });
        assert_eq!(s.certify(0, 3), s);
    }
}
