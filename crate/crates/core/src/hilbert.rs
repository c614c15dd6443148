//! Hilbert function, h-polynomial and tangent-cone depth of a monomial module.
//!
//! In dimension one the Hilbert series is `h(z) / (1 - z)`, so the
//! h-polynomial is the sequence of first differences of the Hilbert function,
//! `e0 = h(1)` and `e1 = h'(1)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::filtration::FiltrationTable;
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

/// Everything we know about `H(M, -)` for one module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub gens: Vec<usize>,
    /// Canonical generators of each summand's ideal, concatenated for direct
    /// sums. `[0]` for the ring itself.
    pub ideal: Vec<usize>,
    /// `H(0) ..= H(r)`; constant from `r` on.
    #[serde(rename = "H")]
    pub hilbert: Vec<usize>,
    #[serde(rename = "h")]
    pub h_coeffs: Vec<i64>,
    pub e0: i64,
    pub e1: i64,
    #[serde(rename = "reduction")]
    pub reduction_number: usize,
    pub mu: usize,
    pub monotone: bool,
    pub first_violation: Option<usize>,
    pub depth_positive: bool,
    pub depth_witness: Option<(usize, usize)>,
}

impl HilbertData {
    pub fn h_nonnegative(&self) -> bool {
        self.h_coeffs.iter().all(|&c| c >= 0)
    }

    /// `H(n)` for any `n`.
    pub fn value(&self, n: usize) -> usize {
        self.hilbert[n.min(self.hilbert.len() - 1)]
    }

    /// Hilbert data of `M_1 ⊕ ... ⊕ M_k` over the same ring. Hilbert functions
    /// add; depth of the sum is the minimum, so the first failing summand's
    /// witness is kept.
    pub fn direct_sum(parts: &[HilbertData]) -> Result<HilbertData> {
        let first = parts.first().ok_or(Error::EmptyInput)?;
        let len = parts.iter().map(|p| p.hilbert.len()).max().unwrap();
        let hilbert: Vec<usize> = (0..len)
            .map(|n| parts.iter().map(|p| p.value(n)).sum())
            .collect();
        let h_coeffs = h_polynomial(&hilbert)?;
        let (e0, e1) = hilbert_coefficients(&h_coeffs);
        let first_violation = check_monotone(&hilbert);
        let failing = parts.iter().find(|p| !p.depth_positive);
        Ok(HilbertData {
            gens: first.gens.clone(),
            ideal: parts.iter().flat_map(|p| p.ideal.iter().copied()).collect(),
            hilbert,
            h_coeffs,
            e0,
            e1,
            reduction_number: parts.iter().map(|p| p.reduction_number).max().unwrap(),
            mu: parts.iter().map(|p| p.mu).sum(),
            monotone: first_violation.is_none(),
            first_violation,
            depth_positive: failing.is_none(),
            depth_witness: failing.and_then(|p| p.depth_witness),
        })
    }
}

/// First differences of `H` with `H(-1) = 0`, trailing zeros removed.
pub fn h_polynomial(hilbert: &[usize]) -> Result<Vec<i64>> {
    if hilbert.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut prev = 0i64;
    let mut coeffs: Vec<i64> = hilbert
        .iter()
        .map(|&v| {
            let d = v as i64 - prev;
            prev = v as i64;
            d
        })
        .collect();
    while coeffs.len() > 1 && coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    Ok(coeffs)
}

/// `(e0, e1) = (h(1), h'(1))`.
pub fn hilbert_coefficients(h_coeffs: &[i64]) -> (i64, i64) {
    let e0 = h_coeffs.iter().sum();
    let e1 = h_coeffs
        .iter()
        .enumerate()
        .map(|(i, &c)| i as i64 * c)
        .sum();
    (e0, e1)
}

/// Least `n` with `H(n) > H(n + 1)`. The prefix is assumed to be followed by
/// its last value forever.
pub fn check_monotone(hilbert: &[usize]) -> Option<usize> {
    hilbert.windows(2).position(|w| w[0] > w[1])
}

/// Is the initial form of `t^e` a nonzerodivisor on `G(M)`?
///
/// It is a zero divisor exactly when some `s ∈ T_n \ T_{n+1}` has
/// `s + e ∈ T_{n+2}`. Only `n < r` needs checking: past the reduction number
/// multiplication by `t^e` maps `T_n \ T_{n+1}` bijectively onto
/// `T_{n+1} \ T_{n+2}`.
///
/// On failure the witness is the least `(n, s)` spanning a socle element of
/// `G(M)`, i.e. `s + g ∈ T_{n+2}` for every minimal generator `g` of `S`. The
/// only bigraded primes of `G(A)` are the nilradical (which misses `t^e`) and
/// the maximal ideal, so `t^e` is a zero divisor iff the socle is nonzero and
/// the witness always exists.
pub fn depth_positive(
    s: &NumericalSemigroup,
    table: &FiltrationTable,
) -> (bool, Option<(usize, usize)>) {
    let e = s.multiplicity();
    let levels = table.levels();
    let r = table.reduction_number();
    let killed_by_te = (0..r).any(|n| {
        levels[n]
            .difference(&levels[n + 1])
            .into_iter()
            .any(|x| levels[n + 2].contains(x + e))
    });
    if !killed_by_te {
        return (true, None);
    }
    let gens = s.minimal_generators();
    let socle = (0..r).find_map(|n| {
        levels[n]
            .difference(&levels[n + 1])
            .into_iter()
            .find(|&x| gens.iter().all(|&g| levels[n + 2].contains(x + g)))
            .map(|x| (n, x))
    });
    debug_assert!(
        socle.is_some(),
        "t^e is a zero divisor but the socle is empty"
    );
    (false, socle)
}

pub fn analyze_with_table(
    s: &NumericalSemigroup,
    ideal: &RelativeIdeal,
    table: &FiltrationTable,
) -> HilbertData {
    let r = table.reduction_number();
    let hilbert: Vec<usize> = (0..=r).map(|n| table.level_diff_count(n)).collect();
    let h_coeffs = h_polynomial(&hilbert).expect("filtration has at least one level");
    let (e0, e1) = hilbert_coefficients(&h_coeffs);
    let first_violation = check_monotone(&hilbert);
    let (depth_positive, depth_witness) = depth_positive(s, table);
    HilbertData {
        gens: s.minimal_generators().to_vec(),
        ideal: ideal.offsets().to_vec(),
        hilbert,
        h_coeffs,
        e0,
        e1,
        reduction_number: r,
        mu: ideal.minimal_generator_count(),
        monotone: first_violation.is_none(),
        first_violation,
        depth_positive,
        depth_witness,
    }
}

pub fn analyze(s: &NumericalSemigroup, ideal: &RelativeIdeal) -> Result<HilbertData> {
    let table = FiltrationTable::new(s, ideal)?;
    Ok(analyze_with_table(s, ideal, &table))
}

/// Hilbert data of the ring `K[[S]]` itself.
pub fn analyze_ring(s: &NumericalSemigroup) -> Result<HilbertData> {
    analyze(s, &RelativeIdeal::ring(s))
}
