//! Explicit ideal families with known depth functions.
//!
//! * [`prop_ideal`]: `(x^t, x y^{t-2} z, y^{t-1} z)` in three variables, with
//!   `depth S/I^k = 1` for `k < t` and `0` for `k >= t`.
//! * [`construct_from_spec`]: a sum of such blocks in disjoint variables plus
//!   free variables, realizing any nonincreasing function with unit drops
//!   whose level multiplicities are nondecreasing.
//! * [`ndr_witness`]: an ideal in `n` variables with prescribed limit depth
//!   `d` and depth stability number `r`.
//! * [`example_fixtures`]: two six-variable ideals whose depth functions
//!   drop by two and so fall outside the block construction.

use serde::Deserialize;

use crate::depth_model::DepthFunction;
use crate::error::{Error, Result};
use crate::monomial::{Exponent, Monomial, MonomialIdeal, Ring};

fn exp(v: usize) -> Result<Exponent> {
    Exponent::try_from(v).map_err(|_| Error::ExponentOverflow)
}

/// `(x^t, x y^{t-2} z, y^{t-1} z)` in `K[x, y, z]`.
pub fn prop_ideal(t: usize) -> Result<MonomialIdeal> {
    if t < 2 {
        return Err(Error::Precondition(format!("t must be at least 2, got {t}")));
    }
    let t = exp(t)?;
    let ring = Ring::new(["x", "y", "z"])?;
    MonomialIdeal::from_exponents(ring, &[&[t, 0, 0], &[1, t - 2, 1], &[0, t - 1, 1]])
}

/// Generator `w(a,b,c) = (x^t)^a (x y^{t-2} z)^b (y^{t-1} z)^c` of `prop_ideal(t)^{a+b+c}`.
pub fn grid_monomial(t: usize, a: usize, b: usize, c: usize) -> Result<Monomial> {
    let x = t.checked_mul(a).and_then(|v| v.checked_add(b));
    let y = (t - 2)
        .checked_mul(b)
        .and_then(|v| v.checked_add((t - 1).checked_mul(c)?));
    match (x, y) {
        (Some(x), Some(y)) => Ok(Monomial::new(&[exp(x)?, exp(y)?, exp(b + c)?])),
        _ => Err(Error::ExponentOverflow),
    }
}

/// `prop_ideal(k+1)` placed on the variables `x{i}, y{i}, z{i}` of `ring`.
pub fn block_ideal(k: usize, block: usize, ring: &Ring) -> Result<MonomialIdeal> {
    if k < 1 {
        return Err(Error::Precondition("block parameter k must be at least 1".into()));
    }
    let map = ["x", "y", "z"]
        .iter()
        .map(|p| {
            let name = format!("{p}{block}");
            ring.index_of(&name)
                .ok_or_else(|| Error::InvalidEmbedding(format!("ring has no variable {name}")))
        })
        .collect::<Result<Vec<_>>>()?;
    prop_ideal(k + 1)?.embed(ring, &map)
}

/// `u ∈ (I^n : m) \ I^n` for `I = prop_ideal(t)`, `n >= t`, with the three
/// generators that witness `x u, y u, z u ∈ I^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleWitness {
    pub t: usize,
    pub n: usize,
    pub u: Monomial,
    /// `(variable index, grid label (a,b,c), w(a,b,c))`
    pub divisors: Vec<(usize, (usize, usize, usize), Monomial)>,
}

/// `u = x^{tn-t^2+t} y^{t^2-2t} z^{t-1}`, verified against `prop_ideal(t)^n`.
pub fn socle_witness(t: usize, n: usize) -> Result<SocleWitness> {
    if t < 2 || n < t {
        return Err(Error::Precondition(format!("need t >= 2 and n >= t, got t={t}, n={n}")));
    }
    let u = Monomial::new(&[exp(t * n - t * t + t)?, exp(t * t - 2 * t)?, exp(t - 1)?]);
    let labels = [(n - t + 1, 1, t - 2), (n - t + 1, 0, t - 1), (n - t, t, 0)];
    let power = prop_ideal(t)?.power(n)?;
    if power.contains(&u)? {
        return Err(Error::Certificate(format!("u = {u:?} lies in I^{n}")));
    }
    let mut divisors = Vec::with_capacity(3);
    for (var, &(a, b, c)) in labels.iter().enumerate() {
        let w = grid_monomial(t, a, b, c)?;
        let shifted = u.times_var(var)?;
        if !w.divides(&shifted) {
            return Err(Error::Certificate(format!(
                "w({a},{b},{c}) = {w:?} does not divide u * var{var}"
            )));
        }
        if !power.contains(&shifted)? {
            return Err(Error::Certificate(format!("u * var{var} is not in I^{n}")));
        }
        divisors.push((var, (a, b, c), w));
    }
    Ok(SocleWitness { t, n, u, divisors })
}

/// An admissible target depth function, encoded by `a = f(1)`, the limit
/// `b`, and the level multiplicities `s_i = |f^{-1}(a - i + 1)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthSpec {
    a: usize,
    b: usize,
    mult: Vec<usize>,
}

impl DepthSpec {
    pub fn new(a: usize, b: usize, mult: Vec<usize>) -> Result<Self> {
        if a < b {
            return Err(Error::InvalidSpec {
                position: 1,
                reason: format!("f(1) = {a} is below the limit {b}"),
            });
        }
        if mult.len() != a - b {
            return Err(Error::InvalidSpec {
                position: 1,
                reason: format!("expected {} multiplicities, got {}", a - b, mult.len()),
            });
        }
        let mut k = 1;
        for (i, &s) in mult.iter().enumerate() {
            if s == 0 {
                return Err(Error::InvalidSpec {
                    position: k,
                    reason: format!("value {} never occurs (drop by more than 1)", a - i),
                });
            }
            if i > 0 && s < mult[i - 1] {
                return Err(Error::InvalidSpec {
                    position: k,
                    reason: format!(
                        "chain condition fails: |f^-1({})| = {} > |f^-1({})| = {}",
                        a - i + 1,
                        mult[i - 1],
                        a - i,
                        s
                    ),
                });
            }
            k += s;
        }
        Ok(Self { a, b, mult })
    }

    /// Validate an explicit function given as values `f(1..=m)` and a tail.
    pub fn from_function(prefix: &[usize], tail: usize) -> Result<Self> {
        let f = DepthFunction::new(prefix.to_vec(), tail);
        let a = f.value(1);
        for k in 2..=f.prefix().len() + 1 {
            let (prev, cur) = (f.value(k - 1), f.value(k));
            if cur > prev {
                return Err(Error::InvalidSpec {
                    position: k,
                    reason: format!("not nonincreasing: f({}) = {prev} < f({k}) = {cur}", k - 1),
                });
            }
            if prev - cur > 1 {
                return Err(Error::InvalidSpec {
                    position: k,
                    reason: format!("drop by {}: f({}) = {prev}, f({k}) = {cur}", prev - cur, k - 1),
                });
            }
        }
        let mult = (0..a - tail)
            .map(|i| f.prefix().iter().filter(|&&v| v == a - i).count())
            .collect();
        Self::new(a, tail, mult)
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.mult
    }

    /// `a` repeated `s_1` times, `a-1` repeated `s_2` times, ..., then `b`.
    pub fn induced_function(&self) -> DepthFunction {
        let prefix = self
            .mult
            .iter()
            .enumerate()
            .flat_map(|(i, &s)| std::iter::repeat_n(self.a - i, s))
            .collect();
        DepthFunction::new(prefix, self.b)
    }

    /// Parse either `{"prefix": [...], "tail": b}` or `{"a": a, "b": b, "mult": [...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(untagged, deny_unknown_fields)]
        enum SpecDoc {
            Function { prefix: Vec<usize>, tail: usize },
            Levels { a: usize, b: usize, mult: Vec<usize> },
        }
        match serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))? {
            SpecDoc::Function { prefix, tail } => Self::from_function(&prefix, tail),
            SpecDoc::Levels { a, b, mult } => Self::new(a, b, mult),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({ "a": self.a, "b": self.b, "mult": self.mult }).to_string()
    }
}

/// Variables `x1,y1,z1,...,x{blocks},y{blocks},z{blocks},w1,...,w{free}`.
pub fn block_ring(blocks: usize, free: usize) -> Result<Ring> {
    let mut vars = Vec::with_capacity(3 * blocks + free);
    for i in 1..=blocks {
        vars.extend([format!("x{i}"), format!("y{i}"), format!("z{i}")]);
    }
    vars.extend((1..=free).map(|j| format!("w{j}")));
    Ring::new(vars)
}

/// Sum of `block_ideal(s_i, i)` over the levels, with `b` free variables.
///
/// A constant spec (`a = b`) has no blocks; it yields `(x1)` in the ring
/// `K[x1, w1, ..., wb]`, whose powers all have depth `b`.
pub fn construct_from_spec(spec: &DepthSpec) -> Result<MonomialIdeal> {
    if spec.mult.is_empty() {
        let mut vars = vec!["x1".to_string()];
        vars.extend((1..=spec.b).map(|j| format!("w{j}")));
        let ring = Ring::new(vars)?;
        let x1 = ring.var(0);
        return MonomialIdeal::new(ring, vec![x1]);
    }
    let ring = block_ring(spec.mult.len(), spec.b)?;
    let mut acc = MonomialIdeal::zero(ring.clone());
    for (i, &s) in spec.mult.iter().enumerate() {
        acc = acc.sum(&block_ideal(s, i + 1, &ring)?)?;
    }
    Ok(acc)
}

/// Target `(n, d, r)`: ring arity, limit depth, depth stability number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessRequest {
    pub n: usize,
    pub d: usize,
    pub r: usize,
}

/// Which witness family the proof uses for a request.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NdrCase {
    /// `d = n - 1`, `r = 1`: `(x1)`.
    Principal,
    /// `r = 1`, `d <= n - 2`: `(x1, ..., x_{n-d})`.
    VariableIdeal,
    /// `r >= 2`, `d <= n - 3`: `(x1^r, x1 x2^{r-2} x3, x2^{r-1} x3, x4, ..., x_{n-d})`.
    PropPlusVariables,
    /// `r >= 2`, `d = n - 2`: `(x1^{r+2}, x1^{r+1} x2, x1 x2^{r+1}, x2^{r+2}, x1^r x2^2 x3)`.
    Nondecreasing,
}

impl NdrCase {
    pub fn name(&self) -> &'static str {
        match self {
            NdrCase::Principal => "principal",
            NdrCase::VariableIdeal => "variables",
            NdrCase::PropPlusVariables => "prop+variables",
            NdrCase::Nondecreasing => "nondecreasing",
        }
    }
}

impl WitnessRequest {
    pub fn new(n: usize, d: usize, r: usize) -> Self {
        Self { n, d, r }
    }

    /// `Ok` when some monomial ideal in `n` variables has limit depth `d`
    /// and depth stability number `r`; otherwise the violated condition.
    pub fn check_admissible(&self) -> Result<()> {
        let (n, d, r) = (self.n, self.d, self.r);
        let fail = |reason: &str| Err(Error::Inadmissible { n, d, r, reason: reason.to_string() });
        if n == 0 {
            return fail("n must be positive");
        }
        if r == 0 {
            return fail("r must be positive");
        }
        match n {
            1 if d == 0 && r == 1 => Ok(()),
            1 => fail("n=1 forces d=0 and r=1"),
            2 if d <= 1 && r == 1 => Ok(()),
            2 => fail("n=2 forces 0 <= d <= 1 and r=1"),
            _ if d <= n - 2 => Ok(()),
            _ if d == n - 1 && r == 1 => Ok(()),
            _ if d == n - 1 => fail("d=n-1 and r=1: limit depth n-1 forces r=1"),
            _ => fail("0 <= d <= n-2 or d=n-1: limit depth is at most n-1"),
        }
    }

    pub fn is_admissible(&self) -> bool {
        self.check_admissible().is_ok()
    }

    pub fn case(&self) -> Result<NdrCase> {
        self.check_admissible()?;
        let (n, d, r) = (self.n, self.d, self.r);
        Ok(if d + 1 == n {
            NdrCase::Principal
        } else if r == 1 {
            NdrCase::VariableIdeal
        } else if d + 3 <= n {
            NdrCase::PropPlusVariables
        } else {
            NdrCase::Nondecreasing
        })
    }
}

pub fn admissible_ndr(req: &WitnessRequest) -> bool {
    req.is_admissible()
}

/// Ideal in `K[x1, ..., xn]` realizing an admissible `(n, d, r)`.
pub fn ndr_witness(req: &WitnessRequest) -> Result<MonomialIdeal> {
    let case = req.case()?;
    let (n, d, r) = (req.n, req.d, req.r);
    let ring = Ring::indexed("x", n)?;
    let mono = |pairs: &[(usize, usize)]| -> Result<Monomial> {
        let mut e = vec![0; n];
        for &(var, power) in pairs {
            e[var - 1] = exp(power)?;
        }
        Ok(Monomial::new(&e))
    };
    let gens = match case {
        NdrCase::Principal => vec![mono(&[(1, 1)])?],
        NdrCase::VariableIdeal => (1..=n - d).map(|i| mono(&[(i, 1)])).collect::<Result<_>>()?,
        NdrCase::PropPlusVariables => {
            let mut g = vec![
                mono(&[(1, r)])?,
                mono(&[(1, 1), (2, r - 2), (3, 1)])?,
                mono(&[(2, r - 1), (3, 1)])?,
            ];
            for i in 4..=n - d {
                g.push(mono(&[(i, 1)])?);
            }
            g
        }
        NdrCase::Nondecreasing => j3_generators(r)?
            .into_iter()
            .map(|e| mono(&[(1, e[0]), (2, e[1]), (3, e[2])]))
            .collect::<Result<_>>()?,
    };
    MonomialIdeal::new(ring, gens)
}

/// Exponent rows of `(x1^{r+2}, x1^{r+1} x2, x1 x2^{r+1}, x2^{r+2}, x1^r x2^2 x3)`.
fn j3_generators(r: usize) -> Result<Vec<[usize; 3]>> {
    Ok(vec![[r + 2, 0, 0], [r + 1, 1, 0], [1, r + 1, 0], [0, r + 2, 0], [r, 2, 1]])
}

/// The nondecreasing three-variable family on its own: `depth A/J^k` is 0 for
/// `k < r` and 1 afterwards. For `r = 1` the last generator is redundant.
pub fn hh_ideal(r: usize) -> Result<MonomialIdeal> {
    if r < 1 {
        return Err(Error::Precondition("r must be at least 1".into()));
    }
    let ring = Ring::indexed("x", 3)?;
    let gens = j3_generators(r)?
        .into_iter()
        .map(|e| Ok(Monomial::new(&[exp(e[0])?, exp(e[1])?, exp(e[2])?])))
        .collect::<Result<_>>()?;
    MonomialIdeal::new(ring, gens)
}

/// The two six-variable ideals with depth functions `(2,2,0,...)` and `(2,2,1,0,...)`.
#[derive(Clone, Debug)]
pub struct ExampleFixtures {
    pub i: MonomialIdeal,
    pub j: MonomialIdeal,
    pub expected_i: DepthFunction,
    pub expected_j: DepthFunction,
}

/// `(x1^t, x1 x2^{t-2} x3, x2^{t-1} x3)(x4^t, x4 x5^{t-2} x6, x5^{t-1} x6)
///   + (x1^{t+1}, x1^t x2, x1 x2^t, x2^{t+1}, x1^{t-1} x2^2 x3)`
fn example_ideal(ring: &Ring, t: usize) -> Result<MonomialIdeal> {
    let first = prop_ideal(t)?.embed(ring, &[0, 1, 2])?;
    let second = prop_ideal(t)?.embed(ring, &[3, 4, 5])?;
    let mono = |e: [usize; 3]| -> Result<Monomial> {
        Ok(Monomial::new(&[exp(e[0])?, exp(e[1])?, exp(e[2])?, 0, 0, 0]))
    };
    let tail = MonomialIdeal::new(
        ring.clone(),
        vec![
            mono([t + 1, 0, 0])?,
            mono([t, 1, 0])?,
            mono([1, t, 0])?,
            mono([0, t + 1, 0])?,
            mono([t - 1, 2, 1])?,
        ],
    )?;
    first.product(&second)?.sum(&tail)
}

pub fn example_fixtures() -> Result<ExampleFixtures> {
    let ring = Ring::indexed("x", 6)?;
    Ok(ExampleFixtures {
        i: example_ideal(&ring, 3)?,
        j: example_ideal(&ring, 4)?,
        expected_i: DepthFunction::new(vec![2, 2], 0),
        expected_j: DepthFunction::new(vec![2, 2, 1], 0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::depth_model::{predict_ndr, predict_spec};

    fn m(e: &[Exponent]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn prop_ideal_examples() {
        assert_eq!(prop_ideal(2).unwrap().to_string(), "(x^2, x*z, y*z)");
        assert_eq!(prop_ideal(3).unwrap().to_string(), "(x^3, x*y*z, y^2*z)");
        for t in 2..8 {
            let i = prop_ideal(t).unwrap();
            assert_eq!(i.num_generators(), 3);
            assert!(i.generators().iter().all(|g| g.degree() as usize == t));
        }
        assert!(prop_ideal(1).is_err());
    }

    #[test]
    fn block_ideals() {
        let ring = block_ring(2, 1).unwrap();
        let b1 = block_ideal(1, 1, &ring).unwrap();
        assert_eq!(b1.to_string(), "(x1^2, x1*z1, y1*z1)");
        let b2 = block_ideal(2, 2, &ring).unwrap();
        assert_eq!(b2.to_string(), "(x2^3, x2*y2*z2, y2^2*z2)");
        assert_eq!(b2, prop_ideal(3).unwrap().embed(&ring, &[3, 4, 5]).unwrap());
        assert!(block_ideal(1, 3, &ring).is_err());
    }

    #[test]
    fn socle_witness_examples() {
        assert_eq!(socle_witness(3, 3).unwrap().u, m(&[3, 3, 2]));
        assert_eq!(socle_witness(2, 2).unwrap().u, m(&[2, 0, 1]));
        assert_eq!(socle_witness(2, 4).unwrap().u, m(&[6, 0, 1]));
        assert_eq!(socle_witness(2, 3).unwrap().u, m(&[4, 0, 1]));
        assert!(socle_witness(3, 2).is_err());
    }

    #[test]
    fn spec_validation() {
        let err = DepthSpec::from_function(&[2, 2], 0).unwrap_err();
        assert!(matches!(err, Error::InvalidSpec { position: 3, .. }), "{err}");
        let ok = DepthSpec::from_function(&[3, 2, 2, 1, 1], 1).unwrap();
        assert_eq!((ok.a(), ok.b(), ok.multiplicities()), (3, 1, &[1usize, 2][..]));
        let err = DepthSpec::from_function(&[2, 1, 1, 2], 2).unwrap_err();
        assert!(matches!(err, Error::InvalidSpec { position: 4, .. }), "{err}");
        // chain condition: |f^-1(2)| = 2 > |f^-1(1)| = 1
        let err = DepthSpec::from_function(&[2, 2, 1], 0).unwrap_err();
        assert!(matches!(err, Error::InvalidSpec { position: 3, .. }), "{err}");
        assert!(DepthSpec::new(2, 0, vec![1]).is_err());
        assert!(DepthSpec::new(1, 2, vec![]).is_err());
    }

    #[test]
    fn spec_json_formats() {
        let a = DepthSpec::from_json(r#"{"prefix": [3, 2, 2], "tail": 1}"#).unwrap();
        let b = DepthSpec::from_json(r#"{"a": 3, "b": 1, "mult": [1, 2]}"#).unwrap();
        assert_eq!(a, b);
        assert_eq!(DepthSpec::from_json(&a.to_json()).unwrap(), a);
        assert!(DepthSpec::from_json(r#"{"prefix": [1]}"#).is_err());
    }

    #[test]
    fn construction_from_spec() {
        let spec = DepthSpec::new(2, 0, vec![1, 2]).unwrap();
        let i = construct_from_spec(&spec).unwrap();
        assert_eq!(i.arity(), 6);
        assert_eq!(
            i.to_string(),
            "(x1^2, x1*z1, y1*z1, x2^3, x2*y2*z2, y2^2*z2)"
        );

        let spec = DepthSpec::new(3, 1, vec![1, 2]).unwrap();
        let i = construct_from_spec(&spec).unwrap();
        assert_eq!(i.arity(), 7);
        assert_eq!(i.ring().var_names()[6], "w1");
        assert!(i.generators().iter().all(|g| g.exponent(6) == 0));
        assert_eq!(predict_spec(&spec).unwrap(), DepthFunction::new(vec![3, 2, 2], 1));
    }

    #[test]
    fn constant_spec_is_principal() {
        let spec = DepthSpec::from_function(&[], 2).unwrap();
        let i = construct_from_spec(&spec).unwrap();
        assert_eq!(i.arity(), 3);
        assert_eq!(i.num_generators(), 1);
        assert_eq!(predict_spec(&spec).unwrap(), DepthFunction::constant(2));
    }

    #[test]
    fn admissibility() {
        let adm = |n, d, r| admissible_ndr(&WitnessRequest::new(n, d, r));
        assert!(!adm(3, 2, 2));
        assert!(adm(5, 1, 3));
        assert!(adm(1, 0, 1));
        assert!(!adm(1, 0, 2));
        assert!(adm(2, 1, 1));
        assert!(!adm(2, 0, 2));
        assert!(!adm(3, 3, 1));
        assert!(adm(3, 1, 7));
        assert!(!adm(0, 0, 1));
        assert!(!adm(4, 0, 0));
    }

    #[test]
    fn ndr_witness_examples() {
        let w = ndr_witness(&WitnessRequest::new(5, 1, 3)).unwrap();
        assert_eq!(w.to_string(), "(x4, x1^3, x1*x2*x3, x2^2*x3)");
        let w = ndr_witness(&WitnessRequest::new(4, 2, 5)).unwrap();
        assert_eq!(w.arity(), 4);
        assert_eq!(w.to_string(), "(x1^7, x1^6*x2, x1*x2^6, x2^7, x1^5*x2^2*x3)");
        let w = ndr_witness(&WitnessRequest::new(6, 4, 1)).unwrap();
        assert_eq!(w.to_string(), "(x1, x2)");
        assert_eq!(w.arity(), 6);
        let w = ndr_witness(&WitnessRequest::new(3, 2, 1)).unwrap();
        assert_eq!(w.to_string(), "(x1)");
        assert!(ndr_witness(&WitnessRequest::new(3, 2, 2)).is_err());
    }

    #[test]
    fn ndr_predictions() {
        let p = |n, d, r| predict_ndr(&WitnessRequest::new(n, d, r)).unwrap();
        assert_eq!(p(5, 1, 3), DepthFunction::new(vec![2, 2], 1));
        assert_eq!(p(4, 2, 5), DepthFunction::new(vec![1, 1, 1, 1], 2));
        assert_eq!(p(6, 4, 1), DepthFunction::constant(4));
        for n in 1..8 {
            for d in 0..n {
                for r in 1..6 {
                    let req = WitnessRequest::new(n, d, r);
                    if let Ok(f) = predict_ndr(&req) {
                        assert_eq!((f.limit(), f.dstab()), (d, r), "{req:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn hh_ideal_r1_drops_redundant_generator() {
        let j = hh_ideal(1).unwrap();
        assert_eq!(j.num_generators(), 4);
        assert_eq!(j.to_string(), "(x1^3, x1^2*x2, x1*x2^2, x2^3)");
    }

    #[test]
    fn example_fixture_shapes() {
        let fx = example_fixtures().unwrap();
        assert_eq!(fx.i.arity(), 6);
        // 3 * 3 products of disjoint-variable generators plus 5 more, all minimal
        assert_eq!(fx.i.num_generators(), 14);
        assert_eq!(fx.j.num_generators(), 14);
        let tail: Vec<String> = fx.j.generators().iter()
            .filter(|g| g.exponents()[3..].iter().all(|&e| e == 0))
            .map(|g| fx.j.ring().format(g))
            .collect();
        assert_eq!(tail, vec!["x1^5", "x1^4*x2", "x1*x2^4", "x2^5", "x1^3*x2^2*x3"]);
        assert!(DepthSpec::from_function(fx.expected_i.prefix(), 0).is_err());
        assert!(DepthSpec::from_function(fx.expected_j.prefix(), 0).is_err());
    }
}
