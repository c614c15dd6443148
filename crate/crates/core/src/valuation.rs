//! Cofinite subsets of the naturals.
//!
//! A [`ValuationSet`] is stored as a sorted list of sporadic elements below a
//! conductor `c`, with every integer `>= c` a member. The conductor is kept
//! minimal, so two sets are equal iff their representations are equal.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ValuationSet {
    sporadic: Vec<usize>,
    conductor: usize,
}

impl ValuationSet {
    /// Builds a set from arbitrary sporadic elements and a (not necessarily
    /// minimal) conductor. Elements at or above the conductor are dropped.
    pub fn new(mut sporadic: Vec<usize>, conductor: usize) -> Self {
        sporadic.retain(|&x| x < conductor);
        sporadic.sort_unstable();
        sporadic.dedup();
        let mut set = ValuationSet {
            sporadic,
            conductor,
        };
        set.normalize();
        set
    }

    /// All of `N`.
    pub fn naturals() -> Self {
        ValuationSet {
            sporadic: Vec::new(),
            conductor: 0,
        }
    }

    /// `{x >= start}`.
    pub fn from_threshold(start: usize) -> Self {
        ValuationSet {
            sporadic: Vec::new(),
            conductor: start,
        }
    }

    /// Membership table on `[0, bound)`; everything at or above `bound` is
    /// taken to be in the set.
    pub fn from_table(table: &[bool]) -> Self {
        let sporadic = table
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        ValuationSet::new(sporadic, table.len())
    }

    fn normalize(&mut self) {
        while let Some(&last) = self.sporadic.last() {
            if last + 1 == self.conductor {
                self.sporadic.pop();
                self.conductor = last;
            } else {
                break;
            }
        }
    }

    pub fn sporadic(&self) -> &[usize] {
        &self.sporadic
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn contains(&self, x: usize) -> bool {
        x >= self.conductor || self.sporadic.binary_search(&x).is_ok()
    }

    pub fn least(&self) -> usize {
        self.sporadic.first().copied().unwrap_or(self.conductor)
    }

    /// Members strictly below `bound`, ascending.
    pub fn members_below(&self, bound: usize) -> impl Iterator<Item = usize> + '_ {
        let tail_start = self.conductor.min(bound);
        self.sporadic
            .iter()
            .copied()
            .take_while(move |&x| x < bound)
            .chain(tail_start..bound)
    }

    /// `t + self`.
    pub fn shift(&self, t: usize) -> Self {
        ValuationSet {
            sporadic: self.sporadic.iter().map(|x| x + t).collect(),
            conductor: self.conductor + t,
        }
    }

    /// Minkowski sum `{v + w}`.
    pub fn sumset(&self, other: &ValuationSet) -> ValuationSet {
        // x >= c(V) + min(W) is always reachable as (x - min W) + min W.
        let bound = (self.conductor + other.least()).min(other.conductor + self.least());
        let mut table = vec![false; bound];
        for v in self.members_below(bound) {
            for w in other.members_below(bound - v) {
                table[v + w] = true;
            }
        }
        ValuationSet::from_table(&table)
    }

    pub fn union(&self, other: &ValuationSet) -> ValuationSet {
        let bound = self.conductor.min(other.conductor);
        let sporadic = self
            .members_below(bound)
            .chain(other.members_below(bound))
            .collect();
        ValuationSet::new(sporadic, bound)
    }

    pub fn is_subset_of(&self, other: &ValuationSet) -> bool {
        self.members_below(other.conductor)
            .all(|x| other.contains(x))
    }

    /// `|self \ other|`. Finite whenever `other` is cofinite, which it always is.
    pub fn difference_count(&self, other: &ValuationSet) -> usize {
        self.members_below(other.conductor)
            .filter(|&x| !other.contains(x))
            .count()
    }

    /// Elements of `self \ other`, ascending.
    pub fn difference(&self, other: &ValuationSet) -> Vec<usize> {
        self.members_below(other.conductor)
            .filter(|&x| !other.contains(x))
            .collect()
    }
}

impl fmt::Display for ValuationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for x in &self.sporadic {
            write!(f, "{x}, ")?;
        }
        write!(f, "{}, ...}}", self.conductor)
    }
}
