//! Coefficient fields and exact matrix rank.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Field used for homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// `GF(p)`.
    Prime(u32),
    Rationals,
}

impl Field {
    pub fn prime(p: u32) -> Result<Self> {
        if is_prime(u64::from(p)) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(u64::from(p)))
        }
    }

    /// Rank of an integer matrix (given as rows) over this field.
    pub fn rank(&self, rows: &[Vec<i64>]) -> usize {
        match *self {
            Field::Prime(p) => rank_mod_p(rows, p),
            Field::Rationals => rank_rational(rows),
        }
    }
}

impl Default for Field {
    fn default() -> Self {
        Field::Prime(2)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "gf{p}"),
            Field::Rationals => f.write_str("q"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `gf<p>`, `q` and `rationals`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        if lower == "q" || lower == "rationals" {
            return Ok(Field::Rationals);
        }
        let digits = lower
            .strip_prefix("gf")
            .ok_or_else(|| Error::Parse(format!("unknown field {s:?}")))?;
        let p: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("unknown field {s:?}")))?;
        Field::prime(p)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn rank_mod_p(rows: &[Vec<i64>], p: u32) -> usize {
    let p = u64::from(p);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = mod_pow(m[rank][col], p - 2, p);
        for v in m[rank].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (v, &pv) in row.iter_mut().zip(pivot_row.iter()) {
                *v = (*v + p - factor * pv % p) % p;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Fraction-free (Bareiss) elimination over the integers.
fn rank_rational(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let pivot_val = m[rank][col].clone();
        let (top, bottom) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom {
            let factor = row[col].clone();
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                // exact by Sylvester's identity
                *x = (&pivot_val * &*x - &factor * p) / &prev;
            }
        }
        prev = pivot_val;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}
