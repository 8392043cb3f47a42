//! Symbolic calculus on eventually constant depth sequences.
//!
//! Two sequences matter for a monomial ideal `I`: `f(k) = depth S/I^k` and
//! `g(k) = depth I^{k-1}/I^k`. They are related by
//! `g(k) = min(f(k-1) + 1, f(k))` with `g(1) = f(1)`, and they coincide
//! whenever either one is nonincreasing. For ideals in disjoint sets of
//! variables the `g` sequence of the sum is the min-plus convolution
//! `h(t) = min_{i+j=t+1} g_I(i) + g_J(j)`. A free variable adds one to every
//! depth.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::constructions::{DepthSpec, NdrCase, WitnessRequest};
use crate::error::{Error, Result};

/// An eventually constant sequence indexed from `k = 1`: explicit values for
/// `k <= prefix.len()`, then `tail` forever.
///
/// Stored canonically: the prefix never ends with the tail value, so two
/// functions are equal iff their representations are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDepthFunction")]
pub struct DepthFunction {
    prefix: Vec<usize>,
    tail: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDepthFunction {
    prefix: Vec<usize>,
    tail: usize,
}

impl TryFrom<RawDepthFunction> for DepthFunction {
    type Error = Error;

    fn try_from(raw: RawDepthFunction) -> Result<Self> {
        Ok(DepthFunction::new(raw.prefix, raw.tail))
    }
}

impl DepthFunction {
    pub fn new(mut prefix: Vec<usize>, tail: usize) -> Self {
        while prefix.last() == Some(&tail) {
            prefix.pop();
        }
        Self { prefix, tail }
    }

    pub fn constant(value: usize) -> Self {
        Self { prefix: Vec::new(), tail: value }
    }

    /// `value` repeated `times` times, then `tail`.
    pub fn step(value: usize, times: usize, tail: usize) -> Self {
        Self::new(vec![value; times], tail)
    }

    pub fn prefix(&self) -> &[usize] {
        &self.prefix
    }

    pub fn tail(&self) -> usize {
        self.tail
    }

    /// Value at `k >= 1`.
    pub fn value(&self, k: usize) -> usize {
        assert!(k >= 1, "depth functions are indexed from 1");
        self.prefix.get(k - 1).copied().unwrap_or(self.tail)
    }

    /// Values at `k = 1..=k_max`.
    pub fn values(&self, k_max: usize) -> Vec<usize> {
        (1..=k_max).map(|k| self.value(k)).collect()
    }

    pub fn limit(&self) -> usize {
        self.tail
    }

    /// Smallest `k0 >= 1` with the sequence constant from `k0` on.
    pub fn dstab(&self) -> usize {
        self.prefix.len() + 1
    }

    pub fn is_nonincreasing(&self) -> bool {
        self.first_increase().is_none()
    }

    /// First `k >= 2` with `value(k) > value(k-1)`.
    fn first_increase(&self) -> Option<usize> {
        (2..=self.prefix.len() + 1).find(|&k| self.value(k) > self.value(k - 1))
    }

    /// Add `b` to every value (adjoining `b` free variables).
    pub fn shift(&self, b: usize) -> Self {
        Self {
            prefix: self.prefix.iter().map(|v| v + b).collect(),
            tail: self.tail + b,
        }
    }

    /// `g(1) = f(1)`, `g(k) = min(f(k-1) + 1, f(k))`.
    pub fn f_to_g(&self) -> Self {
        let len = self.prefix.len() + 1;
        let values = (1..=len)
            .map(|k| if k == 1 { self.value(1) } else { (self.value(k - 1) + 1).min(self.value(k)) })
            .collect();
        // beyond `len` both arguments are the tail, so min(tail + 1, tail) = tail
        Self::new(values, self.tail)
    }

    /// Inverse of [`f_to_g`](Self::f_to_g) on nonincreasing input, where the two agree.
    pub fn g_to_f(&self) -> Result<Self> {
        match self.first_increase() {
            Some(position) => Err(Error::NotNonincreasing { position }),
            None => Ok(self.clone()),
        }
    }

    /// `h(t) = min_{i+j=t+1, i,j>=1} self(i) + other(j)`.
    ///
    /// For `t >= p + q + 1` (prefix lengths `p`, `q`) every split has at least
    /// one index in its tail, and the splits with both indices in the tails
    /// are present, so `h` is constant from there on.
    pub fn min_convolution(&self, other: &Self) -> Self {
        let horizon = self.prefix.len() + other.prefix.len() + 1;
        let h = |t: usize| (1..=t).map(|i| self.value(i) + other.value(t + 1 - i)).min().expect("t >= 1");
        let values: Vec<usize> = (1..=horizon).map(h).collect();
        let tail = values[horizon - 1];
        Self::new(values, tail)
    }

    /// Parse `{"prefix": [...], "tail": t}`.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

impl fmt::Display for DepthFunction {
    /// `(3,2,2, tail 1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.prefix.iter().map(|v| v.to_string()).collect();
        if parts.is_empty() {
            write!(f, "(tail {})", self.tail)
        } else {
            write!(f, "({}, tail {})", parts.join(","), self.tail)
        }
    }
}

/// `g` sequence of the block `(x^{s+1}, x y^{s-1} z, y^s z)` in its own three
/// variables: depth 1 for the first `s` powers, then 0.
pub fn block_g(s: usize) -> DepthFunction {
    DepthFunction::step(1, s, 0)
}

/// Depth function predicted for the block-sum construction of a spec.
///
/// Asserts that the prediction equals the function the spec encodes.
pub fn predict_spec(spec: &DepthSpec) -> Result<DepthFunction> {
    let predicted = match spec.multiplicities().split_first() {
        // constant spec: a principal ideal plus `b` free variables
        None => DepthFunction::constant(0).shift(spec.b()),
        Some((&first, rest)) => {
            let g = rest
                .iter()
                .fold(block_g(first), |acc, &s| acc.min_convolution(&block_g(s)));
            g.g_to_f()
                .map_err(|e| Error::Model(format!("block convolution not nonincreasing: {e}")))?
                .shift(spec.b())
        }
    };
    let expected = spec.induced_function();
    if predicted != expected {
        return Err(Error::Model(format!(
            "predicted {predicted} differs from the spec's function {expected}"
        )));
    }
    Ok(predicted)
}

/// Depth function predicted for the witness of an admissible `(n, d, r)`.
pub fn predict_ndr(req: &WitnessRequest) -> Result<DepthFunction> {
    let case = req.case()?;
    let (n, d, r) = (req.n, req.d, req.r);
    Ok(match case {
        // depth of S/(x1)^k in one variable is 0; the other n-1 variables are free
        NdrCase::Principal => DepthFunction::constant(0).shift(n - 1),
        // (x1..x_{n-d})^k has depth 0 in its own n-d variables
        NdrCase::VariableIdeal => DepthFunction::constant(0).shift(d),
        NdrCase::PropPlusVariables => {
            let mut g = block_g(r - 1);
            if n - d > 3 {
                // the variable ideal (x4..x_{n-d}) has g = 0 in its own variables
                g = g.min_convolution(&DepthFunction::constant(0));
            }
            g.g_to_f()?.shift(d)
        }
        NdrCase::Nondecreasing => hh_depth_prediction(r).shift(n - 3),
    })
}

/// `depth A/J^k` for the three-variable nondecreasing family: 0 for `k < r`, then 1.
pub fn hh_depth_prediction(r: usize) -> DepthFunction {
    assert!(r >= 1);
    DepthFunction::step(0, r - 1, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn df(prefix: &[usize], tail: usize) -> DepthFunction {
        DepthFunction::new(prefix.to_vec(), tail)
    }

    #[test]
    fn canonical_form_and_attributes() {
        let f = df(&[3, 2, 2, 1, 1], 1);
        assert_eq!(f.prefix(), &[3, 2, 2]);
        assert_eq!(f.limit(), 1);
        assert_eq!(f.dstab(), 4);
        assert_eq!(DepthFunction::constant(2).dstab(), 1);
        assert_eq!(f.values(6), vec![3, 2, 2, 1, 1, 1]);
        assert_eq!(f.to_string(), "(3,2,2, tail 1)");
    }

    #[test]
    fn f_to_g_fixes_nonincreasing() {
        let f = df(&[3, 2, 2], 1);
        assert_eq!(f.f_to_g(), f);
    }

    #[test]
    fn f_to_g_on_increasing_functions() {
        let hh = df(&[0, 0], 1);
        assert_eq!(hh.f_to_g(), hh);
        assert_eq!(df(&[0], 5).f_to_g(), df(&[0, 1], 5));
    }

    #[test]
    fn g_to_f_examples() {
        assert_eq!(df(&[1, 1], 0).g_to_f().unwrap(), df(&[1, 1], 0));
        assert_eq!(DepthFunction::constant(3).g_to_f().unwrap(), DepthFunction::constant(3));
        assert_eq!(df(&[0], 1).g_to_f(), Err(Error::NotNonincreasing { position: 2 }));
    }

    #[test]
    fn min_convolution_examples() {
        let gi = df(&[1], 0);
        let gj = df(&[1, 1], 0);
        assert_eq!(gi.min_convolution(&gj), df(&[2, 1, 1], 0));
        // constant absorbs
        let c = DepthFunction::constant(2);
        assert_eq!(gj.min_convolution(&c), gj.shift(2));
        // non-monotone input keeps a sound tail
        let hh = df(&[0, 0], 1);
        assert_eq!(hh.min_convolution(&DepthFunction::constant(0)), DepthFunction::constant(0));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(df(&[2, 1, 1], 0).shift(1), df(&[3, 2, 2], 1));
        assert_eq!(df(&[2, 1, 1], 0).shift(0), df(&[2, 1, 1], 0));
    }

    #[test]
    fn json_round_trip() {
        let f = df(&[3, 2, 2], 1);
        assert_eq!(f.to_json(), r#"{"prefix":[3,2,2],"tail":1}"#);
        assert_eq!(DepthFunction::from_json(&f.to_json()).unwrap(), f);
        // non-canonical input is canonicalized
        assert_eq!(DepthFunction::from_json(r#"{"prefix":[3,1,1],"tail":1}"#).unwrap(), df(&[3], 1));
        assert!(DepthFunction::from_json(r#"{"prefix":[-1],"tail":1}"#).is_err());
    }

    #[test]
    fn hh_prediction() {
        assert_eq!(hh_depth_prediction(1), DepthFunction::constant(1));
        assert_eq!(hh_depth_prediction(3), df(&[0, 0], 1));
        assert_eq!(hh_depth_prediction(3).dstab(), 3);
    }
}
