//! Relative ideals: the monomial rank-one maximal Cohen-Macaulay modules.

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::valuation::ValuationSet;

/// A normalized relative ideal `E = offsets + S` with `min E = 0`.
///
/// `offsets` is always the full sorted list of minimal generators, so equal
/// closures give equal values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelativeIdeal {
    offsets: Vec<usize>,
    closure: ValuationSet,
}

impl RelativeIdeal {
    pub fn new(s: &NumericalSemigroup, offsets: &[usize]) -> Result<Self> {
        let min = *offsets.iter().min().ok_or(Error::EmptyGenerators)?;
        let base = s.as_valuation_set();
        let closure = offsets
            .iter()
            .map(|&o| base.shift(o - min))
            .reduce(|a, b| a.union(&b))
            .unwrap();
        Ok(Self::from_closure(s, closure))
    }

    /// The ring as a module over itself.
    pub fn ring(s: &NumericalSemigroup) -> Self {
        RelativeIdeal {
            offsets: vec![0],
            closure: s.as_valuation_set(),
        }
    }

    /// `closure` must satisfy `closure + S ⊆ closure` and `min closure = 0`.
    pub(crate) fn from_closure(s: &NumericalSemigroup, closure: ValuationSet) -> Self {
        debug_assert_eq!(closure.least(), 0);
        let moved = s.maximal_ideal().sumset(&closure);
        let offsets = closure.difference(&moved);
        RelativeIdeal { offsets, closure }
    }

    /// Canonical minimal generators, ascending, starting at 0.
    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// `mu(M)`.
    pub fn minimal_generator_count(&self) -> usize {
        self.offsets.len()
    }

    pub fn closure(&self) -> &ValuationSet {
        &self.closure
    }

    pub fn contains(&self, x: usize) -> bool {
        self.closure.contains(x)
    }
}
