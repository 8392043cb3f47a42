//! Text documents for ideals.
//!
//! An ideal document is a JSON object:
//!
//! ```text
//! {
//!   "ring": { "vars": ["x", "y", "z"] },
//!   "generators": [
//!     [3, 0, 0],
//!     [1, 1, 1]
//!   ]
//! }
//! ```
//!
//! Generators may appear in any order and need not be minimal on input;
//! output is always the canonical minimal generating set, one row per line.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::monomial::{Exponent, Monomial, MonomialIdeal, Ring};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RingDoc {
    vars: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealDoc {
    ring: RingDoc,
    generators: Vec<Vec<i64>>,
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let doc: IdealDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let ring = Ring::new(doc.ring.vars)?;
    let mut gens = Vec::with_capacity(doc.generators.len());
    for (row_idx, row) in doc.generators.iter().enumerate() {
        if row.len() != ring.arity() {
            return Err(Error::ArityMismatch { expected: ring.arity(), found: row.len() });
        }
        let exps = row
            .iter()
            .map(|&e| {
                if e < 0 {
                    Err(Error::NegativeExponent { row: row_idx, value: e })
                } else {
                    Exponent::try_from(e).map_err(|_| Error::ExponentOverflow)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        gens.push(Monomial::new(&exps));
    }
    MonomialIdeal::new(ring, gens)
}

pub fn serialize_ideal(ideal: &MonomialIdeal) -> String {
    let vars: Vec<String> = ideal
        .ring()
        .var_names()
        .iter()
        .map(|v| serde_json::to_string(v).expect("string serializes"))
        .collect();
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"ring\": {{ \"vars\": [{}] }},\n", vars.join(", ")));
    if ideal.generators().is_empty() {
        out.push_str("  \"generators\": []\n");
    } else {
        out.push_str("  \"generators\": [\n");
        let rows: Vec<String> = ideal
            .generators()
            .iter()
            .map(|g| {
                let cells: Vec<String> = g.exponents().iter().map(|e| e.to_string()).collect();
                format!("    [{}]", cells.join(", "))
            })
            .collect();
        out.push_str(&rows.join(",\n"));
        out.push_str("\n  ]\n");
    }
    out.push_str("}\n");
    out
}
