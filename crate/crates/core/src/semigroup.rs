//! Numerical semigroups: cofinite additive submonoids of `N`.

use std::fmt;

use crate::error::{Error, Result};
use crate::valuation::ValuationSet;

/// Largest membership table we are willing to allocate while building a
/// semigroup from generators.
const MAX_TABLE: usize = 1 << 26;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    minimal_generators: Vec<usize>,
    frobenius: i64,
    multiplicity: usize,
    genus: usize,
    /// Membership on `[0, frobenius + 1]`.
    membership: Vec<bool>,
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl NumericalSemigroup {
    /// Builds `<generators>`. The list need not be minimal or sorted.
    pub fn new(generators: &[usize]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if generators.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let g = generators.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::NotCoprime(g));
        }
        let min = *generators.iter().min().unwrap();
        let max = *generators.iter().max().unwrap();
        // Frobenius < min * max, so this always contains a run of `min`
        // consecutive members.
        let bound = max
            .checked_mul(min)
            .and_then(|p| p.checked_add(max))
            .filter(|&b| b <= MAX_TABLE)
            .ok_or(Error::GeneratorsTooLarge(max.saturating_mul(min)))?;
        let mut table = vec![false; bound + 1];
        table[0] = true;
        for x in 1..=bound {
            table[x] = generators.iter().any(|&g| g <= x && table[x - g]);
        }
        let mut run = 0;
        let mut conductor = 0;
        for (x, &member) in table.iter().enumerate() {
            if member {
                run += 1;
                if run == min {
                    conductor = x + 1 - min;
                    break;
                }
            } else {
                run = 0;
            }
        }
        table.truncate(conductor + 1);
        Ok(Self::from_membership(table))
    }

    /// `table` covers `[0, conductor]` and its last entry (the conductor) is
    /// the first element of the infinite tail.
    pub(crate) fn from_membership(table: Vec<bool>) -> Self {
        debug_assert!(table.last() == Some(&true));
        let frobenius = table.iter().rposition(|&m| !m).map_or(-1, |f| f as i64);
        let member = |x: usize| x >= table.len() || table[x];
        let multiplicity = (1..).find(|&x| member(x)).unwrap();
        let genus = table.iter().filter(|&&m| !m).count();
        let top = (frobenius + multiplicity as i64).max(multiplicity as i64) as usize;
        let minimal_generators = (multiplicity..=top)
            .filter(|&x| member(x))
            .filter(|&x| !(multiplicity..=x - multiplicity).any(|y| member(y) && member(x - y)))
            .collect();
        NumericalSemigroup {
            minimal_generators,
            frobenius,
            multiplicity,
            genus,
            membership: table,
        }
    }

    /// The semigroup `N`.
    pub fn naturals() -> Self {
        Self::from_membership(vec![true])
    }

    pub fn minimal_generators(&self) -> &[usize] {
        &self.minimal_generators
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// `frobenius + 1`; every integer from here on is a member.
    pub fn conductor(&self) -> usize {
        (self.frobenius + 1) as usize
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators.len()
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn membership_table(&self) -> &[bool] {
        &self.membership
    }

    pub fn contains(&self, x: usize) -> bool {
        x >= self.membership.len() || self.membership[x]
    }

    pub fn gaps(&self) -> Vec<usize> {
        (0..self.membership.len())
            .filter(|&x| !self.membership[x])
            .collect()
    }

    /// Least member in each residue class mod `m`, indexed by residue.
    pub fn apery_set(&self, m: usize) -> Result<Vec<usize>> {
        if m == 0 || !self.contains(m) {
            return Err(Error::NotAMember(m));
        }
        let mut out = vec![None; m];
        let mut found = 0;
        let mut x = 0;
        while found < m {
            if out[x % m].is_none() && self.contains(x) {
                out[x % m] = Some(x);
                found += 1;
            }
            x += 1;
        }
        Ok(out.into_iter().map(Option::unwrap).collect())
    }

    /// Gorenstein test: `x` is a member iff `frobenius - x` is not.
    pub fn is_symmetric(&self) -> bool {
        let Ok(f) = usize::try_from(self.frobenius) else {
            return true;
        };
        (0..=f).all(|x| self.contains(x) != self.contains(f - x))
    }

    /// Symmetry via the gap count alone: `2 * genus = frobenius + 1`.
    pub fn is_symmetric_by_genus(&self) -> bool {
        2 * self.genus as i64 == self.frobenius + 1
    }

    /// `x + y - z` is a member for all members `x >= y >= z`. Checking members
    /// up to `frobenius + multiplicity + 1` is enough.
    pub fn is_arf(&self) -> bool {
        let window = self.conductor() + self.multiplicity;
        let members: Vec<usize> = (0..=window).filter(|&x| self.contains(x)).collect();
        for (i, &x) in members.iter().enumerate() {
            for (j, &y) in members[..=i].iter().enumerate() {
                for &z in &members[..=j] {
                    if !self.contains(x + y - z) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Dimension-one minimal multiplicity: `multiplicity == embedding_dimension`.
    pub fn has_minimal_multiplicity(&self) -> bool {
        self.multiplicity == self.embedding_dimension()
    }

    /// The semigroup as a subset of `N`.
    pub fn as_valuation_set(&self) -> ValuationSet {
        ValuationSet::from_table(&self.membership[..self.conductor()])
    }

    /// `S \ {0}`: exponents of the maximal ideal.
    pub fn maximal_ideal(&self) -> ValuationSet {
        let mut table = self.membership[..self.conductor()].to_vec();
        if let Some(first) = table.first_mut() {
            *first = false;
            ValuationSet::from_table(&table)
        } else {
            ValuationSet::from_threshold(1)
        }
    }

    /// Child in the genus tree: `S \ {g}` for a minimal generator `g > frobenius`.
    pub fn remove_generator(&self, g: usize) -> Option<Self> {
        if (g as i64) <= self.frobenius || !self.minimal_generators.contains(&g) {
            return None;
        }
        let mut table = self.membership.clone();
        table.resize(g + 2, true);
        table[g] = false;
        Some(Self::from_membership(table))
    }

    /// Minimal generators larger than the Frobenius number.
    pub fn effective_generators(&self) -> impl Iterator<Item = usize> + '_ {
        self.minimal_generators
            .iter()
            .copied()
            .filter(|&g| g as i64 > self.frobenius)
    }
}

/// Minimal generating set of `<generators>`, sorted.
pub fn reduce_generators(generators: &[usize]) -> Result<Vec<usize>> {
    NumericalSemigroup::new(generators).map(|s| s.minimal_generators)
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.minimal_generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}
