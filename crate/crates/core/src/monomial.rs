//! Monomials and monomial ideals over a named polynomial ring.
//!
//! A [`MonomialIdeal`] always stores its minimal generating set in canonical
//! order (total degree first, then lexicographic with `x1` heaviest), so two
//! ideals are equal exactly when their generator sequences are equal.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponent = u16;

/// Polynomial ring `K[x_1, ..., x_n]`, identified by its variable names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Arc<[String]>,
}

impl Ring {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Result<Self> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidRing(format!("variable {i} has an empty name")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable name {v:?}")));
            }
        }
        Ok(Self { vars: vars.into() })
    }

    /// Ring with variables `prefix1, ..., prefixN`.
    pub fn indexed(prefix: &str, arity: usize) -> Result<Self> {
        Self::new((1..=arity).map(|i| format!("{prefix}{i}")))
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.arity())
    }

    /// The monomial consisting of the single variable with the given index.
    pub fn var(&self, index: usize) -> Monomial {
        let mut exps = SmallVec::from_elem(0, self.arity());
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn monomial(&self, exps: &[Exponent]) -> Result<Monomial> {
        if exps.len() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), found: exps.len() });
        }
        Ok(Monomial::new(exps))
    }

    pub(crate) fn ensure_same(&self, other: &Ring) -> Result<()> {
        if Arc::ptr_eq(&self.vars, &other.vars) || self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.vars.to_vec(),
                right: other.vars.to_vec(),
            })
        }
    }

    /// Render a monomial with this ring's variable names, e.g. `x1^2*x3`.
    pub fn format(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exponents()
            .iter()
            .zip(self.vars.iter())
            .filter(|(e, _)| **e > 0)
            .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring{:?}", &self.vars[..])
    }
}

/// An exponent vector. Arity is implicit in the length.
///
/// The binary operations below assume equal arity and panic otherwise; the
/// `try_` variants report [`Error::ArityMismatch`] instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[Exponent; 12]>,
}

impl Monomial {
    pub fn new(exps: &[Exponent]) -> Self {
        Self { exps: SmallVec::from_slice(exps) }
    }

    pub fn one(arity: usize) -> Self {
        Self { exps: SmallVec::from_elem(0, arity) }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> Exponent {
        self.exps[var]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Bitmask of the variables with positive exponent.
    pub fn support_mask(&self) -> u64 {
        debug_assert!(self.arity() <= 64);
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1 << i))
    }

    fn check_arity(&self, other: &Monomial) -> Result<()> {
        if self.arity() == other.arity() {
            Ok(())
        } else {
            Err(Error::ArityMismatch { expected: self.arity(), found: other.arity() })
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.arity(), other.arity(), "monomial arity mismatch");
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn try_divides(&self, other: &Monomial) -> Result<bool> {
        self.check_arity(other)?;
        Ok(self.divides(other))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.arity(), other.arity(), "monomial arity mismatch");
        Monomial {
            exps: self.exps.iter().zip(other.exps.iter()).map(|(&a, &b)| a.max(b)).collect(),
        }
    }

    pub fn try_lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_arity(other)?;
        Ok(self.lcm(other))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.arity(), other.arity(), "monomial arity mismatch");
        Monomial {
            exps: self.exps.iter().zip(other.exps.iter()).map(|(&a, &b)| a.min(b)).collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_arity(other)?;
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    /// Truncated subtraction `self / gcd(self, other)`.
    pub fn monus(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.arity(), other.arity(), "monomial arity mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        }
    }

    /// Exact quotient, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.monus(other))
    }

    /// Multiply by a single variable.
    pub fn times_var(&self, var: usize) -> Result<Monomial> {
        let mut out = self.clone();
        out.exps[var] = out.exps[var].checked_add(1).ok_or(Error::ExponentOverflow)?;
        Ok(out)
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: lower total degree first; within a degree the
    /// vector with the larger leading exponent comes first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.exps[..])
    }
}

/// Keep the divisibility-minimal elements, deduplicated, in canonical order.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // any proper divisor has strictly smaller degree, so it is already in `kept`
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// A monomial ideal given by its minimal generators in canonical order.
///
/// An empty generator list is the zero ideal; a generator equal to `1`
/// makes it the unit ideal.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(ring: Ring, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.arity() != ring.arity() {
                return Err(Error::ArityMismatch { expected: ring.arity(), found: g.arity() });
            }
        }
        Ok(Self::from_parts(ring, minimalize(gens)))
    }

    pub fn from_exponents(ring: Ring, rows: &[&[Exponent]]) -> Result<Self> {
        let gens = rows.iter().map(|r| ring.monomial(r)).collect::<Result<_>>()?;
        Self::new(ring, gens)
    }

    fn from_parts(ring: Ring, gens: Vec<Monomial>) -> Self {
        debug_assert!(is_minimal(&gens));
        Self { ring, gens }
    }

    pub fn zero(ring: Ring) -> Self {
        Self { ring, gens: Vec::new() }
    }

    pub fn unit(ring: Ring) -> Self {
        let one = ring.one();
        Self { ring, gens: vec![one] }
    }

    /// The irrelevant ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: Ring) -> Self {
        let mut gens: Vec<Monomial> = (0..ring.arity()).map(|i| ring.var(i)).collect();
        gens.sort_unstable();
        Self { ring, gens }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn arity(&self) -> usize {
        self.ring.arity()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    /// Error unless the ideal is proper and nonzero.
    pub fn ensure_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    pub fn contains(&self, u: &Monomial) -> Result<bool> {
        if u.arity() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), found: u.arity() });
        }
        Ok(self.contains_unchecked(u))
    }

    #[inline]
    pub(crate) fn contains_unchecked(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.ensure_same(&other.ring)?;
        let gens = self.gens.iter().chain(other.gens.iter()).cloned().collect();
        Ok(Self::from_parts(self.ring.clone(), minimalize(gens)))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.ensure_same(&other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.mul(h)?);
            }
        }
        Ok(Self::from_parts(self.ring.clone(), minimalize(gens)))
    }

    pub fn power(&self, k: usize) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// All powers `I^1, ..., I^k_max`, reusing each step.
    pub fn powers(&self, k_max: usize) -> Result<Vec<MonomialIdeal>> {
        if k_max == 0 {
            return Err(Error::ZeroPower);
        }
        let mut out = Vec::with_capacity(k_max);
        out.push(self.clone());
        for _ in 1..k_max {
            let next = out.last().expect("nonempty").product(self)?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.ensure_same(&other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.lcm(h));
            }
        }
        Ok(Self::from_parts(self.ring.clone(), minimalize(gens)))
    }

    pub fn colon_monomial(&self, u: &Monomial) -> Result<MonomialIdeal> {
        if u.arity() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), found: u.arity() });
        }
        let gens = self.gens.iter().map(|g| g.monus(u)).collect();
        Ok(Self::from_parts(self.ring.clone(), minimalize(gens)))
    }

    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.ensure_same(&other.ring)?;
        let mut gens = other.gens.iter();
        let first = gens.next().ok_or(Error::ColonByZero)?;
        let mut acc = self.colon_monomial(first)?;
        for u in gens {
            acc = acc.intersection(&self.colon_monomial(u)?)?;
        }
        Ok(acc)
    }

    /// Re-index into `target`; `var_map[i]` is the target index of source variable `i`.
    pub fn embed(&self, target: &Ring, var_map: &[usize]) -> Result<MonomialIdeal> {
        if var_map.len() != self.arity() {
            return Err(Error::InvalidEmbedding(format!(
                "map has {} entries for {} source variables",
                var_map.len(),
                self.arity()
            )));
        }
        for (i, &t) in var_map.iter().enumerate() {
            if t >= target.arity() {
                return Err(Error::InvalidEmbedding(format!(
                    "variable {i} maps to index {t}, target has {} variables",
                    target.arity()
                )));
            }
            if var_map[..i].contains(&t) {
                return Err(Error::InvalidEmbedding(format!("target index {t} used twice")));
            }
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut exps = SmallVec::from_elem(0, target.arity());
                for (i, &t) in var_map.iter().enumerate() {
                    exps[t] = g.exps[i];
                }
                Monomial { exps }
            })
            .collect();
        Ok(Self::from_parts(target.clone(), minimalize(gens)))
    }

    /// Same generators in a ring with `extra` additional variables appended.
    pub fn with_free_variables(&self, names: &[&str]) -> Result<MonomialIdeal> {
        let mut vars = self.ring.var_names().to_vec();
        vars.extend(names.iter().map(|s| s.to_string()));
        let target = Ring::new(vars)?;
        let map: Vec<usize> = (0..self.arity()).collect();
        self.embed(&target, &map)
    }

    pub fn format_generators(&self) -> String {
        if self.gens.is_empty() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| self.ring.format(g)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_generators())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_generators())
    }
}

/// True when the list is sorted canonically and no element divides another.
pub fn is_minimal(gens: &[Monomial]) -> bool {
    gens.windows(2).all(|w| w[0] < w[1])
        && gens
            .iter()
            .enumerate()
            .all(|(i, g)| gens.iter().enumerate().all(|(j, h)| i == j || !h.divides(g)))
}
