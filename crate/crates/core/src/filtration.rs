//! The m-adic filtration `T_n = nM + E` of a relative ideal.

use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;
use crate::valuation::ValuationSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationTable {
    levels: Vec<ValuationSet>,
    reduction_number: usize,
    multiplicity: usize,
    maximal_ideal: ValuationSet,
}

impl FiltrationTable {
    /// Iterates `T_{n+1} = M + T_n` until `T_{n+1} = e + T_n`.
    ///
    /// The first such `n` is the reduction number `r`; levels `T_0 ..= T_{r+1}`
    /// are kept. The loop is capped at `frobenius + 2` steps.
    pub fn new(s: &NumericalSemigroup, ideal: &RelativeIdeal) -> Result<Self> {
        let m = s.maximal_ideal();
        let e = s.multiplicity();
        let cap = s.conductor() + 1;
        let mut levels = vec![ideal.closure().clone()];
        for n in 0..=cap {
            let next = m.sumset(&levels[n]);
            let stable = next == levels[n].shift(e);
            levels.push(next);
            if stable {
                return Ok(FiltrationTable {
                    levels,
                    reduction_number: n,
                    multiplicity: e,
                    maximal_ideal: m,
                });
            }
        }
        Err(Error::ReductionCapExceeded {
            cap,
            frobenius: s.frobenius(),
        })
    }

    /// Stored levels `T_0 ..= T_{r+1}`.
    pub fn levels(&self) -> &[ValuationSet] {
        &self.levels
    }

    pub fn reduction_number(&self) -> usize {
        self.reduction_number
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    /// `T_n` for any `n`; levels past `r + 1` are translates of `T_r`.
    pub fn level(&self, n: usize) -> ValuationSet {
        let r = self.reduction_number;
        if n <= r + 1 {
            self.levels[n].clone()
        } else {
            self.levels[r].shift((n - r) * self.multiplicity)
        }
    }

    /// `H(n) = |T_n \ T_{n+1}|`, constant for `n >= r`.
    pub fn level_diff_count(&self, n: usize) -> usize {
        let k = n.min(self.reduction_number);
        self.levels[k].difference_count(&self.levels[k + 1])
    }

    /// Recomputes `extra` levels past `r` by honest sumsets and checks
    /// `T_{n+1} = e + T_n` for each.
    pub fn persists(&self, extra: usize) -> bool {
        let r = self.reduction_number;
        let mut current = self.levels[r].clone();
        for _ in 0..=extra {
            let next = self.maximal_ideal.sumset(&current);
            if next != current.shift(self.multiplicity) {
                return false;
            }
            current = next;
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Bitset model of `nM + E` on `[0, limit)`, built by repeated brute-force
    /// pairwise sums.
    fn brute_levels(
        s: &NumericalSemigroup,
        e: &RelativeIdeal,
        count: usize,
        limit: usize,
    ) -> Vec<Vec<bool>> {
        let m: Vec<bool> = (0..limit).map(|x| x > 0 && s.contains(x)).collect();
        let mut cur: Vec<bool> = (0..limit).map(|x| e.contains(x)).collect();
        let mut out = vec![cur.clone()];
        for _ in 0..count {
            let mut next = vec![false; limit];
            for a in 0..limit {
                if !m[a] {
                    continue;
                }
                for b in 0..limit - a {
                    if cur[b] {
                        next[a + b] = true;
                    }
                }
            }
            out.push(next.clone());
            cur = next;
        }
        out
    }

    fn brute_hilbert(s: &NumericalSemigroup, e: &RelativeIdeal, count: usize) -> Vec<usize> {
        // counts are exact as long as limit exceeds every conductor involved
        let limit = (count + 2) * (s.conductor() + s.multiplicity() + 40);
        let lv = brute_levels(s, e, count + 1, limit);
        (0..=count)
            .map(|n| (0..limit).filter(|&x| lv[n][x] && !lv[n + 1][x]).count())
            .collect()
    }

    fn sg(gens: &[usize]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    #[test]
    fn example_ring_filtration() {
        let s = sg(&[6, 7, 15]);
        let t = FiltrationTable::new(&s, &RelativeIdeal::ring(&s)).unwrap();
        assert_eq!(t.reduction_number(), 5);
        let lv = t.levels();
        assert_eq!(lv[1].difference(&lv[2]), vec![6, 7, 15]);
        assert_eq!(lv[2].difference(&lv[3]), vec![12, 13, 14, 22]);
        assert_eq!(lv[3].difference(&lv[4]), vec![18, 19, 20, 21, 29]);
        let h: Vec<usize> = (0..=6).map(|n| t.level_diff_count(n)).collect();
        assert_eq!(h, vec![1, 3, 4, 5, 5, 6, 6]);
        assert_eq!(h, brute_hilbert(&s, &RelativeIdeal::ring(&s), 6));
    }

    #[test]
    fn discrete_valuation_ring() {
        let s = NumericalSemigroup::naturals();
        let t = FiltrationTable::new(&s, &RelativeIdeal::ring(&s)).unwrap();
        assert_eq!(t.reduction_number(), 0);
        assert_eq!(t.levels()[1], t.levels()[0].shift(1));
        for n in 0..10 {
            assert_eq!(t.level_diff_count(n), 1);
        }
    }

    #[test]
    fn whole_line_over_3_4_5() {
        let s = sg(&[3, 4, 5]);
        let e = RelativeIdeal::new(&s, &[0, 1, 2]).unwrap();
        let t = FiltrationTable::new(&s, &e).unwrap();
        assert_eq!(t.reduction_number(), 0);
        assert_eq!(t.levels()[1], ValuationSet::from_threshold(3));
        for n in 0..10 {
            assert_eq!(t.level_diff_count(n), 3);
            assert_eq!(t.level(n), ValuationSet::from_threshold(3 * n));
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_instance() -> impl Strategy<Value = (NumericalSemigroup, RelativeIdeal)> {
            (
                proptest::collection::vec(3usize..12, 1..4),
                proptest::collection::vec(0usize..15, 1..4),
            )
                .prop_map(|(mut g, o)| {
                    g.push(g[0] + 1);
                    let s = NumericalSemigroup::new(&g).unwrap();
                    let e = RelativeIdeal::new(&s, &o).unwrap();
                    (s, e)
                })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn matches_bitset_oracle((s, e) in arb_instance()) {
                let t = FiltrationTable::new(&s, &e).unwrap();
                let count = t.reduction_number() + 3;
                let brute = brute_hilbert(&s, &e, count);
                for (n, &b) in brute.iter().enumerate() {
                    prop_assert_eq!(t.level_diff_count(n), b);
                }
            }

            #[test]
            fn nesting_persistence_and_bounds((s, e) in arb_instance()) {
                let t = FiltrationTable::new(&s, &e).unwrap();
                for w in t.levels().windows(2) {
                    prop_assert!(w[1].is_subset_of(&w[0]));
                }
                prop_assert!((t.reduction_number() as i64) <= s.frobenius() + 1);
                prop_assert!(t.persists(5));
                prop_assert_eq!(t.level_diff_count(t.reduction_number()), s.multiplicity());
            }
        }
    }
}
