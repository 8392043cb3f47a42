//! Syzygies of powers of `I = (x^t, x y^{t-2} z, y^{t-1} z)`.
//!
//! The generators of `I^n` are `w(a,b,c)` with `a + b + c = n`, ordered
//! lexicographically on `(a, b)`. For `n <= t - 1` the syzygies between
//! consecutive generators in that order form a minimal generating set of the
//! syzygy module, which gives `pd I^n = 1`. This module makes each step of
//! that argument executable.

use std::collections::{BTreeMap, BTreeSet};

use crate::constructions::{grid_monomial, prop_ideal};
use crate::error::{Error, Result};
use crate::monomial::{minimalize, Monomial, MonomialIdeal, Ring};

/// `(a, b, c)` with `a + b + c = n`.
pub type Label = (usize, usize, usize);

/// The labeled generators of `I^n`, in descending lex order on `(a, b)`.
#[derive(Clone, Debug)]
pub struct PowerGrid {
    pub t: usize,
    pub n: usize,
    pub ring: Ring,
    pub labels: Vec<Label>,
    pub monomials: Vec<Monomial>,
    /// The labeled monomials are distinct and equal the minimal generators of `I^n`.
    pub matches_power: bool,
}

impl PowerGrid {
    pub fn new(t: usize, n: usize) -> Result<Self> {
        if t < 2 || n < 1 {
            return Err(Error::Precondition(format!("need t >= 2 and n >= 1, got t={t}, n={n}")));
        }
        let base = prop_ideal(t)?;
        let mut labels = Vec::with_capacity((n + 1) * (n + 2) / 2);
        for a in (0..=n).rev() {
            for b in (0..=n - a).rev() {
                labels.push((a, b, n - a - b));
            }
        }
        let monomials = labels
            .iter()
            .map(|&(a, b, c)| grid_monomial(t, a, b, c))
            .collect::<Result<Vec<_>>>()?;
        let power = base.power(n)?;
        let distinct = monomials.iter().collect::<BTreeSet<_>>().len() == monomials.len();
        let matches_power = distinct && minimalize(monomials.clone()) == power.generators();
        Ok(Self { t, n, ring: base.ring().clone(), labels, monomials, matches_power })
    }

    /// `1 <= n <= t - 1`, where the lex order claims are made.
    pub fn within_hypothesis(&self) -> bool {
        self.n < self.t
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn position(&self, label: Label) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn monomial(&self, label: Label) -> Option<&Monomial> {
        self.position(label).map(|i| &self.monomials[i])
    }

    /// The ideal generated by the grid monomials.
    pub fn ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::new(self.ring.clone(), self.monomials.clone())
    }
}

pub fn power_grid(t: usize, n: usize) -> Result<PowerGrid> {
    PowerGrid::new(t, n)
}

/// Shape of a covering pair `lower ⋖ upper`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverKind {
    /// `(a, b-1, c+1) ⋖ (a, b, c)`
    Shift,
    /// `(a-1, n-a+1, 0) ⋖ (a, 0, n-a)`
    BlockJump,
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverPair {
    pub upper: Label,
    pub lower: Label,
    pub kind: CoverKind,
}

#[derive(Clone, Debug)]
pub struct LessdotPairs {
    pub pairs: Vec<CoverPair>,
    pub outside_hypothesis: bool,
}

fn cover_kind(n: usize, upper: Label, lower: Label) -> CoverKind {
    let (a, b, c) = upper;
    if b >= 1 && lower == (a, b - 1, c + 1) {
        CoverKind::Shift
    } else if a >= 1 && b == 0 && c == n - a && lower == (a - 1, n - a + 1, 0) {
        CoverKind::BlockJump
    } else {
        CoverKind::Other
    }
}

/// Consecutive pairs of the lex order.
pub fn lessdot_pairs(grid: &PowerGrid) -> LessdotPairs {
    let pairs = grid
        .labels
        .windows(2)
        .map(|w| CoverPair { upper: w[0], lower: w[1], kind: cover_kind(grid.n, w[0], w[1]) })
        .collect();
    LessdotPairs { pairs, outside_hypothesis: !grid.within_hypothesis() }
}

/// Undirected graph on generator indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuchbergerGraph {
    pub vertices: usize,
    pub edges: BTreeSet<(usize, usize)>,
}

impl BuchbergerGraph {
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    /// One line per edge, `m_i -- m_j`.
    pub fn format_edges(&self, ideal: &MonomialIdeal) -> String {
        let gens = ideal.generators();
        self.edges
            .iter()
            .map(|&(i, j)| {
                format!("{} -- {}\n", ideal.ring().format(&gens[i]), ideal.ring().format(&gens[j]))
            })
            .collect()
    }
}

/// `lcm / (product of the variables in its support)`.
fn strip_support(lcm: &Monomial) -> Monomial {
    let e: Vec<_> = lcm.exponents().iter().map(|&v| v.saturating_sub(1)).collect();
    Monomial::new(&e)
}

/// Whether `m_k` blocks the pair: it divides the lcm with strictly smaller
/// degree in every variable occurring in the lcm.
fn blocks(m_k: &Monomial, lcm: &Monomial) -> bool {
    m_k.divides(&strip_support(lcm))
}

/// Edge `(i, j)` unless some other generator divides `lcm(m_i, m_j)` with
/// strictly smaller degree in every variable of the lcm's support.
pub fn buchberger_graph(ideal: &MonomialIdeal) -> Result<BuchbergerGraph> {
    ideal.ensure_proper_nonzero()?;
    let gens = ideal.generators();
    let s = gens.len();
    let mut edges = BTreeSet::new();
    for i in 0..s {
        for j in i + 1..s {
            let l = gens[i].lcm(&gens[j]);
            if !(0..s).any(|k| k != i && k != j && blocks(&gens[k], &l)) {
                edges.insert((i, j));
            }
        }
    }
    Ok(BuchbergerGraph { vertices: s, edges })
}

/// Result of a pass/fail check with an optional counterexample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub pass: bool,
    pub outside_hypothesis: bool,
    pub checked: usize,
    pub failure: Option<String>,
}

impl CheckReport {
    fn new(grid: &PowerGrid) -> Self {
        Self { pass: true, outside_hypothesis: !grid.within_hypothesis(), checked: 0, failure: None }
    }

    fn fail(&mut self, msg: String) {
        if self.pass {
            self.pass = false;
            self.failure = Some(msg);
        }
    }
}

/// Every covering pair has one of the two shapes, is an edge of the
/// Buchberger graph of `I^n`, and no grid generator divides `lcm / xyz`.
pub fn claim1_check(t: usize, n: usize) -> Result<CheckReport> {
    let grid = PowerGrid::new(t, n)?;
    let mut report = CheckReport::new(&grid);
    let power = prop_ideal(t)?.power(n)?;
    let graph = buchberger_graph(&power)?;
    let index = |m: &Monomial| power.generators().iter().position(|g| g == m);
    for pair in lessdot_pairs(&grid).pairs {
        report.checked += 1;
        let (wu, wl) = (grid.monomial(pair.upper).unwrap(), grid.monomial(pair.lower).unwrap());
        if pair.kind == CoverKind::Other {
            report.fail(format!("{:?} ⋖ {:?} has neither covering shape", pair.lower, pair.upper));
        }
        match (index(wu), index(wl)) {
            (Some(i), Some(j)) if graph.has_edge(i, j) => {}
            (Some(_), Some(_)) => {
                report.fail(format!("{:?} ⋖ {:?} is not an edge", pair.lower, pair.upper))
            }
            _ => report.fail(format!(
                "{:?} or {:?} is not a minimal generator of I^{n}",
                pair.lower, pair.upper
            )),
        }
        let reduced = strip_support(&wu.lcm(wl));
        if let Some(pos) = grid.monomials.iter().position(|w| w.divides(&reduced)) {
            report.fail(format!(
                "w{:?} divides lcm/xyz for {:?} ⋖ {:?}",
                grid.labels[pos], pair.lower, pair.upper
            ));
        }
    }
    Ok(report)
}

/// For `q < p` in lex order: `deg_x q < deg_x p` exactly when `q < p`, and
/// `deg_y`, `deg_z` weakly increase going down.
pub fn observation_check(t: usize, n: usize) -> Result<CheckReport> {
    let grid = PowerGrid::new(t, n)?;
    let mut report = CheckReport::new(&grid);
    // labels are sorted descending, so index order is reverse lex order
    for (p, wp) in grid.monomials.iter().enumerate() {
        for (q, wq) in grid.monomials.iter().enumerate() {
            if p == q {
                continue;
            }
            report.checked += 1;
            let q_below = q > p;
            let (lp, lq) = (grid.labels[p], grid.labels[q]);
            if (wq.exponent(0) < wp.exponent(0)) != q_below {
                report.fail(format!("deg_x of w{lq:?} vs w{lp:?} disagrees with the order"));
            }
            if q_below && wq.exponent(1) < wp.exponent(1) {
                report.fail(format!("deg_y w{lq:?} < deg_y w{lp:?} though w{lq:?} < w{lp:?}"));
            }
            if q_below && wq.exponent(2) < wp.exponent(2) {
                report.fail(format!("deg_z w{lq:?} < deg_z w{lp:?} though w{lq:?} < w{lp:?}"));
            }
        }
    }
    Ok(report)
}

/// `σ = (lcm/w_upper) e_upper - (lcm/w_lower) e_lower`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syzygy {
    pub upper: Label,
    pub lower: Label,
    pub coeff_upper: Monomial,
    pub coeff_lower: Monomial,
}

impl Syzygy {
    pub fn between(grid: &PowerGrid, upper: Label, lower: Label) -> Result<Self> {
        let get = |l: Label| {
            grid.monomial(l).ok_or_else(|| Error::Precondition(format!("{l:?} is not a grid label")))
        };
        let (wu, wl) = (get(upper)?, get(lower)?);
        let l = wu.lcm(wl);
        Ok(Self {
            upper,
            lower,
            coeff_upper: l.div(wu).expect("lcm is divisible"),
            coeff_lower: l.div(wl).expect("lcm is divisible"),
        })
    }

    /// `coeff_upper * w_upper - coeff_lower * w_lower = 0`.
    pub fn presentation_vanishes(&self, grid: &PowerGrid) -> bool {
        match (grid.monomial(self.upper), grid.monomial(self.lower)) {
            (Some(wu), Some(wl)) => match (self.coeff_upper.mul(wu), self.coeff_lower.mul(wl)) {
                (Ok(a), Ok(b)) => a == b,
                _ => false,
            },
            _ => false,
        }
    }

    /// `(yz) e(1,0,0) - (x^2) e(0,1,0)`.
    pub fn format(&self, ring: &Ring) -> String {
        format!(
            "({}) e{:?} - ({}) e{:?}",
            ring.format(&self.coeff_upper),
            self.upper,
            ring.format(&self.coeff_lower),
            self.lower
        )
    }
}

/// One syzygy per covering pair.
pub fn sigma_set(grid: &PowerGrid) -> Result<Vec<Syzygy>> {
    lessdot_pairs(grid)
        .pairs
        .iter()
        .map(|p| Syzygy::between(grid, p.upper, p.lower))
        .collect()
}

/// Chain of covers from `upper` down to `lower` with the monomial multipliers
/// expressing `σ(upper, lower)` through the covering syzygies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim2Certificate {
    pub chain: Vec<Label>,
    /// `lcm(w_1, w_s) / lcm(w_i, w_{i+1})` for each link.
    pub quotients: Vec<Monomial>,
}

/// Sparse element of the free module on the grid labels.
type ModuleElement = BTreeMap<(Label, Monomial), i64>;

fn add_term(acc: &mut ModuleElement, label: Label, coeff: Monomial, sign: i64) {
    let entry = acc.entry((label, coeff)).or_insert(0);
    *entry += sign;
    if *entry == 0 {
        acc.retain(|_, v| *v != 0);
    }
}

pub fn claim2_decompose(grid: &PowerGrid, upper: Label, lower: Label) -> Result<Claim2Certificate> {
    let (i, j) = match (grid.position(upper), grid.position(lower)) {
        (Some(i), Some(j)) => (i, j),
        _ => return Err(Error::Precondition(format!("{upper:?} or {lower:?} is not a grid label"))),
    };
    if j <= i {
        return Err(Error::Precondition(format!("{lower:?} is not below {upper:?}")));
    }
    if j == i + 1 {
        return Err(Error::Precondition(format!("{lower:?} ⋖ {upper:?} is a covering pair")));
    }
    let chain = grid.labels[i..=j].to_vec();
    let ws = &grid.monomials[i..=j];
    let big = ws[0].lcm(&ws[ws.len() - 1]);
    let mut quotients = Vec::with_capacity(chain.len() - 1);
    let mut combo = ModuleElement::new();
    for k in 0..chain.len() - 1 {
        let link = ws[k].lcm(&ws[k + 1]);
        let q = big.div(&link).ok_or_else(|| {
            Error::Certificate(format!(
                "lcm(w{:?}, w{:?}) does not divide lcm(w{:?}, w{:?})",
                chain[k],
                chain[k + 1],
                upper,
                lower
            ))
        })?;
        let sigma = Syzygy::between(grid, chain[k], chain[k + 1])?;
        add_term(&mut combo, chain[k], q.mul(&sigma.coeff_upper)?, 1);
        add_term(&mut combo, chain[k + 1], q.mul(&sigma.coeff_lower)?, -1);
        quotients.push(q);
    }
    let target = Syzygy::between(grid, upper, lower)?;
    let mut expected = ModuleElement::new();
    add_term(&mut expected, upper, target.coeff_upper, 1);
    add_term(&mut expected, lower, target.coeff_lower, -1);
    if combo != expected {
        return Err(Error::Certificate(format!(
            "telescoping sum differs from σ({upper:?}, {lower:?})"
        )));
    }
    Ok(Claim2Certificate { chain, quotients })
}
