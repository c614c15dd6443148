//! Hilbert functions of monomial quotients `K[x_1..x_k] / I` in the standard
//! grading, used to cross-check tangent-cone presentations against the
//! semigroup-side computation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::analyze_ring;
use crate::semigroup::NumericalSemigroup;

pub type Exponent = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialIdeal {
    num_vars: usize,
    generators: Vec<Exponent>,
}

fn divides(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl MonomialIdeal {
    /// Builds and minimalizes: drops duplicates and any generator divisible by
    /// another one.
    pub fn new(num_vars: usize, generators: Vec<Exponent>) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::Parse(
                "monomial ideal needs at least one variable".into(),
            ));
        }
        if let Some(g) = generators.iter().find(|g| g.len() != num_vars) {
            return Err(Error::DimensionMismatch {
                expected: num_vars,
                got: g.len(),
            });
        }
        let mut gens = generators;
        gens.sort();
        gens.dedup();
        let minimal = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && divides(h, g)))
            .cloned()
            .collect();
        Ok(MonomialIdeal {
            num_vars,
            generators: minimal,
        })
    }

    pub fn zero(num_vars: usize) -> Self {
        MonomialIdeal {
            num_vars,
            generators: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.generators
    }

    pub fn contains(&self, w: &[usize]) -> bool {
        self.generators.iter().any(|g| divides(g, w))
    }

    /// Number of standard monomials of degree `n`.
    pub fn hilbert_function(&self, n: usize) -> usize {
        let mut count = 0;
        let mut buf = vec![0; self.num_vars];
        for_each_monomial(&mut buf, 0, n, &mut |w| {
            if !self.contains(w) {
                count += 1;
            }
        });
        count
    }

    /// `w ∉ I` and `w · x_i ∈ I` for every variable.
    pub fn is_socle_witness(&self, w: &[usize]) -> Result<bool> {
        if w.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                got: w.len(),
            });
        }
        if self.contains(w) {
            return Ok(false);
        }
        let mut v = w.to_vec();
        Ok((0..self.num_vars).all(|i| {
            v[i] += 1;
            let inside = self.contains(&v);
            v[i] -= 1;
            inside
        }))
    }

    /// Parses `"1,0,1;0,6,0"`. An empty string needs the variable count from
    /// elsewhere, see [`MonomialIdeal::parse_with_vars`].
    pub fn parse_with_vars(text: &str, num_vars: Option<usize>) -> Result<Self> {
        let gens = text
            .split(';')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(parse_exponent)
            .collect::<Result<Vec<_>>>()?;
        let k = match (gens.first(), num_vars) {
            (_, Some(k)) => k,
            (Some(g), None) => g.len(),
            (None, None) => {
                return Err(Error::Parse(
                    "empty presentation needs an explicit variable count".into(),
                ))
            }
        };
        MonomialIdeal::new(k, gens)
    }
}

/// Comma-separated exponent vector, e.g. `"0,2,1"`.
pub fn parse_exponent(text: &str) -> Result<Exponent> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad exponent {t:?} in {text:?}")))
        })
        .collect()
}

impl FromStr for MonomialIdeal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MonomialIdeal::parse_with_vars(s, None)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .generators
            .iter()
            .map(|g| g.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", parts.join(";"))
    }
}

fn for_each_monomial(buf: &mut [usize], i: usize, remaining: usize, f: &mut impl FnMut(&[usize])) {
    if i + 1 == buf.len() {
        buf[i] = remaining;
        f(buf);
        return;
    }
    for k in 0..=remaining {
        buf[i] = k;
        for_each_monomial(buf, i + 1, remaining - k, f);
    }
}

pub fn monomial_hf(ideal: &MonomialIdeal, n: usize) -> usize {
    ideal.hilbert_function(n)
}

pub fn is_socle_witness(ideal: &MonomialIdeal, w: &[usize]) -> Result<bool> {
    ideal.is_socle_witness(w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub degree: usize,
    pub semigroup: usize,
    pub presentation: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrosscheckReport {
    pub gens: Vec<usize>,
    pub presentation: String,
    pub upto: usize,
    pub semigroup_hf: Vec<usize>,
    pub presentation_hf: Vec<usize>,
    pub equal: bool,
    pub first_mismatch: Option<Mismatch>,
}

/// Compares `H(K[[S]], n)` against the standard-monomial count of `ideal` for
/// `0 <= n <= upto`.
pub fn crosscheck_presentation(
    s: &NumericalSemigroup,
    ideal: &MonomialIdeal,
    upto: usize,
) -> Result<CrosscheckReport> {
    let data = analyze_ring(s)?;
    let semigroup_hf: Vec<usize> = (0..=upto).map(|n| data.value(n)).collect();
    let presentation_hf: Vec<usize> = (0..=upto).map(|n| ideal.hilbert_function(n)).collect();
    let first_mismatch = semigroup_hf
        .iter()
        .zip(&presentation_hf)
        .position(|(a, b)| a != b)
        .map(|n| Mismatch {
            degree: n,
            semigroup: semigroup_hf[n],
            presentation: presentation_hf[n],
        });
    Ok(CrosscheckReport {
        gens: s.minimal_generators().to_vec(),
        presentation: ideal.to_string(),
        upto,
        semigroup_hf,
        presentation_hf,
        equal: first_mismatch.is_none(),
        first_mismatch,
    })
}
