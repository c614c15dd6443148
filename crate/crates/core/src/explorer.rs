//! Exhaustive scans over numerical semigroups and their relative ideals.
//!
//! Semigroups come from the genus tree (children drop one minimal generator
//! larger than the Frobenius number). Work items are analyzed in parallel and
//! the results are sorted canonically before anything is emitted, so output
//! does not depend on the number of workers.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::filtration::FiltrationTable;
use crate::hilbert::{analyze, analyze_with_table, HilbertData};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;
use crate::valuation::ValuationSet;

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_SAFETY_CAP: usize = 5_000_000;
pub const SAFETY_CAP_ENV: &str = "HILBMON_SAFETY_CAP";

/// Extra levels recomputed past the reduction number by the structure check.
const PERSISTENCE_LEVELS: usize = 5;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanBounds {
    pub max_frobenius: Option<usize>,
    pub max_genus: Option<usize>,
    pub max_embdim: Option<usize>,
    pub min_embdim: Option<usize>,
    pub ideal_window: Option<usize>,
    pub symmetric_only: bool,
    pub arf_only: bool,
    pub min_mult_only: bool,
    pub embdim_le_3: bool,
}

impl ScanBounds {
    pub fn validate(&self) -> Result<()> {
        if self.max_frobenius.is_none() && self.max_genus.is_none() {
            return Err(Error::InvalidBounds(
                "one of max_frobenius / max_genus is required".into(),
            ));
        }
        if self.max_embdim == Some(0) || self.min_embdim == Some(0) {
            return Err(Error::InvalidBounds(
                "embedding dimension bounds must be positive".into(),
            ));
        }
        if let (Some(lo), Some(hi)) = (self.min_embdim, self.max_embdim) {
            if lo > hi {
                return Err(Error::InvalidBounds(format!(
                    "min_embdim {lo} exceeds max_embdim {hi}"
                )));
            }
        }
        Ok(())
    }

    /// Filters that do not bound the tree itself.
    pub fn admits(&self, s: &NumericalSemigroup) -> bool {
        let k = s.embedding_dimension();
        self.max_embdim.is_none_or(|m| k <= m)
            && self.min_embdim.is_none_or(|m| k >= m)
            && (!self.embdim_le_3 || k <= 3)
            && (!self.symmetric_only || s.is_symmetric())
            && (!self.arf_only || s.is_arf())
            && (!self.min_mult_only || s.has_minimal_multiplicity())
    }
}

pub fn safety_cap_from_env() -> Result<usize> {
    match std::env::var(SAFETY_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{SAFETY_CAP_ENV}={v:?} is not a count"))),
        Err(_) => Ok(DEFAULT_SAFETY_CAP),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Monotone,
    HNonneg,
    ArfImpliesMinmult,
    DepthImpliesMonotone,
    /// Reduction bound, persistence past `r`, eventual value and `h_0 = mu`.
    Structure,
    /// Records depth-zero instances whose Hilbert function is still monotone.
    DepthZero,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Monotone,
        Check::HNonneg,
        Check::ArfImpliesMinmult,
        Check::DepthImpliesMonotone,
        Check::Structure,
        Check::DepthZero,
    ];

    /// The checks that report violations (everything but `DepthZero`).
    pub fn defaults() -> Vec<Check> {
        Check::ALL[..5].to_vec()
    }

    pub fn name(self) -> &'static str {
        match self {
            Check::Monotone => "monotone",
            Check::HNonneg => "h_nonneg",
            Check::ArfImpliesMinmult => "arf_implies_minmult",
            Check::DepthImpliesMonotone => "depth_implies_monotone",
            Check::Structure => "structure",
            Check::DepthZero => "depth_zero",
        }
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingKind {
    Nonmonotone,
    HNegative,
    DepthZeroMonotone,
    PropertyViolation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub generators: Vec<usize>,
    pub ideal: Option<Vec<usize>>,
    pub kind: FindingKind,
    /// Which property failed, for `property_violation`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
    pub data: HilbertData,
}

impl Finding {
    /// Recomputes the instance from its generators and ideal and confirms
    /// the recorded data and the condition behind `kind`.
    pub fn reverify(&self) -> Result<bool> {
        let s = NumericalSemigroup::new(&self.generators)?;
        let ideal = match &self.ideal {
            Some(offsets) => RelativeIdeal::new(&s, offsets)?,
            None => RelativeIdeal::ring(&s),
        };
        let table = FiltrationTable::new(&s, &ideal)?;
        let data = analyze_with_table(&s, &ideal, &table);
        if data != self.data {
            return Ok(false);
        }
        Ok(match self.kind {
            FindingKind::Nonmonotone => !data.monotone,
            FindingKind::HNegative => !data.h_nonnegative(),
            FindingKind::DepthZeroMonotone => !data.depth_positive && data.monotone,
            FindingKind::PropertyViolation => match self.detail.as_deref() {
                Some("arf_implies_minmult") => s.is_arf() && !s.has_minimal_multiplicity(),
                Some("depth_implies_monotone") => data.depth_positive && !data.monotone,
                Some(other) if other.starts_with("structure:") => {
                    !structural_violations(&s, &table, &data).is_empty()
                }
                _ => false,
            },
        })
    }
}

/// Structural facts every instance must satisfy; returns the names of those
/// that fail.
pub fn structural_violations(
    s: &NumericalSemigroup,
    table: &FiltrationTable,
    data: &HilbertData,
) -> Vec<&'static str> {
    let mut out = Vec::new();
    if data.depth_positive && !data.monotone {
        out.push("depth_implies_monotone");
    }
    if table.reduction_number() as i64 > s.frobenius() + 1 {
        out.push("reduction_bound");
    }
    if !table.persists(PERSISTENCE_LEVELS) {
        out.push("reduction_persistence");
    }
    let tail = table.level_diff_count(table.reduction_number()) as i64;
    if tail != data.e0 || data.e0 != s.multiplicity() as i64 {
        out.push("eventual_value");
    }
    if data.h_coeffs[0] != data.mu as i64 || data.mu == 0 {
        out.push("h0_equals_mu");
    }
    out
}

/// Every numerical semigroup within the tree bounds, exactly once, in
/// canonical order (genus, then gap set). The safety cap limits the number of
/// tree nodes visited.
pub fn enumerate_semigroups(
    bounds: &ScanBounds,
    safety_cap: usize,
) -> Result<Vec<NumericalSemigroup>> {
    bounds.validate()?;
    let mut out = Vec::new();
    let mut visited = 0usize;
    let mut stack = vec![NumericalSemigroup::naturals()];
    while let Some(s) = stack.pop() {
        visited += 1;
        if visited > safety_cap {
            return Err(Error::BoundsTooLarge(safety_cap));
        }
        if bounds.max_genus.is_none_or(|g| s.genus() < g) {
            for g in s.effective_generators() {
                if bounds.max_frobenius.is_none_or(|f| g <= f) {
                    stack.push(s.remove_generator(g).expect("effective generator"));
                }
            }
        }
        if bounds.admits(&s) {
            out.push(s);
        }
    }
    out.sort_by_cached_key(|s| (s.genus(), s.gaps()));
    Ok(out)
}

/// All normalized relative ideals of `s` whose minimal generators lie in
/// `[0, window]`, ordered by canonical generator list.
pub fn enumerate_ideals(s: &NumericalSemigroup, window: usize) -> Vec<RelativeIdeal> {
    let base = s.as_valuation_set();
    let candidates: Vec<usize> = s.gaps().into_iter().filter(|&g| g <= window).collect();
    let mut seen: HashSet<ValuationSet> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(base.clone());
    queue.push_back(base.clone());
    while let Some(e) = queue.pop_front() {
        for &g in &candidates {
            if e.contains(g) {
                continue;
            }
            let next = e.union(&base.shift(g));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut ideals: Vec<RelativeIdeal> = seen
        .into_iter()
        .map(|c| RelativeIdeal::from_closure(s, c))
        .collect();
    ideals.sort_by(|a, b| a.offsets().cmp(b.offsets()));
    ideals
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub schema_version: u32,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gens: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bounds: Option<ScanBounds>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ideal_window: Option<usize>,
    pub checks: Vec<Check>,
    pub semigroups: usize,
    pub instances: usize,
    pub findings: usize,
    pub by_kind: BTreeMap<FindingKind, usize>,
    pub max_reduction: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub summary: ScanSummary,
    pub findings: Vec<Finding>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "snake_case")]
pub enum Record {
    Finding(Finding),
    Summary(ScanSummary),
}

impl ScanReport {
    /// True when any finding reports a violation, as opposed to the purely
    /// exploratory `depth_zero_monotone` records.
    pub fn has_violations(&self) -> bool {
        self.findings
            .iter()
            .any(|f| f.kind != FindingKind::DepthZeroMonotone)
    }

    /// One JSON object per line: findings in canonical order, then the
    /// summary. With `timing = false` the output is a pure function of the
    /// inputs.
    pub fn to_jsonl(&self, timing: bool) -> String {
        let mut out = String::new();
        for f in &self.findings {
            out.push_str(&serde_json::to_string(&Record::Finding(f.clone())).unwrap());
            out.push('\n');
        }
        let mut summary = self.summary.clone();
        if !timing {
            summary.elapsed_ms = None;
        }
        out.push_str(&serde_json::to_string(&Record::Summary(summary)).unwrap());
        out.push('\n');
        out
    }
}

#[derive(Clone, Debug)]
pub struct ScanOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    pub safety_cap: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            jobs: None,
            safety_cap: DEFAULT_SAFETY_CAP,
        }
    }
}

fn in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

#[derive(Default)]
struct Tally {
    instances: usize,
    max_reduction: usize,
    findings: Vec<Finding>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        self.max_reduction = self.max_reduction.max(other.max_reduction);
        self.findings.extend(other.findings);
        self
    }
}

fn finding(
    s: &NumericalSemigroup,
    ideal: Option<&RelativeIdeal>,
    kind: FindingKind,
    detail: Option<&str>,
    data: &HilbertData,
) -> Finding {
    Finding {
        generators: s.minimal_generators().to_vec(),
        ideal: ideal.map(|e| e.offsets().to_vec()),
        kind,
        detail: detail.map(str::to_owned),
        data: data.clone(),
    }
}

fn check_instance(
    s: &NumericalSemigroup,
    ideal: &RelativeIdeal,
    is_module: bool,
    checks: &[Check],
) -> Result<Tally> {
    let table = FiltrationTable::new(s, ideal)?;
    let data = analyze_with_table(s, ideal, &table);
    let tag = is_module.then_some(ideal);
    let mut tally = Tally {
        instances: 1,
        max_reduction: data.reduction_number,
        findings: Vec::new(),
    };
    for &check in checks {
        let hit = match check {
            Check::Monotone if !data.monotone => Some((FindingKind::Nonmonotone, None)),
            Check::HNonneg if !data.h_nonnegative() => Some((FindingKind::HNegative, None)),
            Check::DepthImpliesMonotone if data.depth_positive && !data.monotone => Some((
                FindingKind::PropertyViolation,
                Some("depth_implies_monotone".to_owned()),
            )),
            Check::Structure => structural_violations(s, &table, &data).first().map(|v| {
                (
                    FindingKind::PropertyViolation,
                    Some(format!("structure:{v}")),
                )
            }),
            Check::DepthZero if !data.depth_positive && data.monotone => {
                Some((FindingKind::DepthZeroMonotone, None))
            }
            _ => None,
        };
        if let Some((kind, detail)) = hit {
            tally
                .findings
                .push(finding(s, tag, kind, detail.as_deref(), &data));
        }
    }
    Ok(tally)
}

fn scan_semigroup(
    s: &NumericalSemigroup,
    window: Option<usize>,
    checks: &[Check],
) -> Result<Tally> {
    let mut tally = Tally::default();
    if checks.contains(&Check::ArfImpliesMinmult) && s.is_arf() && !s.has_minimal_multiplicity() {
        let data = analyze(s, &RelativeIdeal::ring(s))?;
        tally.findings.push(finding(
            s,
            None,
            FindingKind::PropertyViolation,
            Some("arf_implies_minmult"),
            &data,
        ));
    }
    let instance_checks: Vec<Check> = checks
        .iter()
        .copied()
        .filter(|&c| c != Check::ArfImpliesMinmult)
        .collect();
    match window {
        None => {
            tally = tally.merge(check_instance(
                s,
                &RelativeIdeal::ring(s),
                false,
                &instance_checks,
            )?);
        }
        Some(w) => {
            for ideal in enumerate_ideals(s, w) {
                tally = tally.merge(check_instance(s, &ideal, true, &instance_checks)?);
            }
        }
    }
    Ok(tally)
}

fn sort_key(
    f: &Finding,
) -> (
    usize,
    Vec<usize>,
    Option<Vec<usize>>,
    FindingKind,
    Option<String>,
) {
    let s = NumericalSemigroup::new(&f.generators).expect("finding generators are valid");
    (
        s.genus(),
        s.gaps(),
        f.ideal.clone(),
        f.kind,
        f.detail.clone(),
    )
}

fn canonical_sort(findings: &mut [Finding]) {
    findings.sort_by_cached_key(sort_key);
}

/// Runs `checks` over every semigroup in `bounds` (and every ideal within
/// `bounds.ideal_window`, when set).
pub fn scan(bounds: &ScanBounds, checks: &[Check], opts: &ScanOptions) -> Result<ScanReport> {
    let start = Instant::now();
    let semigroups = enumerate_semigroups(bounds, opts.safety_cap)?;
    let tally = in_pool(opts.jobs, || {
        semigroups
            .par_iter()
            .map(|s| scan_semigroup(s, bounds.ideal_window, checks))
            .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
    })?;
    Ok(finish(tally, semigroups.len(), start, |findings| {
        ScanSummary {
            schema_version: SCHEMA_VERSION,
            mode: "scan".into(),
            gens: None,
            bounds: Some(bounds.clone()),
            ideal_window: bounds.ideal_window,
            checks: sorted_checks(checks),
            semigroups: 0,
            instances: 0,
            findings,
            by_kind: BTreeMap::new(),
            max_reduction: 0,
            elapsed_ms: None,
        }
    }))
}

fn sorted_checks(checks: &[Check]) -> Vec<Check> {
    let mut c = checks.to_vec();
    c.sort();
    c.dedup();
    c
}

fn finish(
    mut tally: Tally,
    semigroups: usize,
    start: Instant,
    summary: impl FnOnce(usize) -> ScanSummary,
) -> ScanReport {
    canonical_sort(&mut tally.findings);
    let mut s = summary(tally.findings.len());
    s.semigroups = semigroups;
    s.instances = tally.instances;
    s.max_reduction = tally.max_reduction;
    for f in &tally.findings {
        *s.by_kind.entry(f.kind).or_default() += 1;
    }
    s.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    ScanReport {
        summary: s,
        findings: tally.findings,
    }
}

/// Checks the monotonicity properties over every relative
/// ideal of `s` with generators in `[0, window]`: the Hilbert function is
/// non-decreasing and every h-coefficient is non-negative. The structure
/// check (which includes `h_0 = mu`) runs alongside.
///
/// Whether `K[[S]]` actually satisfies the hypotheses under which these are expected is the
/// caller's responsibility.
pub fn sweep_monotonicity(
    s: &NumericalSemigroup,
    window: usize,
    opts: &ScanOptions,
) -> Result<ScanReport> {
    let start = Instant::now();
    let ideals = enumerate_ideals(s, window);
    let checks = [Check::Monotone, Check::HNonneg, Check::Structure];
    let tally = in_pool(opts.jobs, || {
        ideals
            .par_iter()
            .map(|e| check_instance(s, e, true, &checks))
            .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
    })?;
    Ok(finish(tally, 1, start, |findings| ScanSummary {
        schema_version: SCHEMA_VERSION,
        mode: "sweep".into(),
        gens: Some(s.minimal_generators().to_vec()),
        bounds: None,
        ideal_window: Some(window),
        checks: checks.to_vec(),
        semigroups: 1,
        instances: 0,
        findings,
        by_kind: BTreeMap::new(),
        max_reduction: 0,
        elapsed_ms: None,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[usize]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    fn genus_bound(g: usize) -> ScanBounds {
        ScanBounds {
            max_genus: Some(g),
            ..Default::default()
        }
    }

    /// Gap sets G ⊆ [1, 2g-1] whose complement is additively closed.
    fn brute_force_counts(max_genus: usize) -> Vec<usize> {
        let limit = (2 * max_genus).max(1);
        let mut counts = vec![0; max_genus + 1];
        for mask in 0u32..(1 << (limit - 1)) {
            let gap = |x: usize| x >= 1 && x < limit && mask & (1 << (x - 1)) != 0;
            let genus = mask.count_ones() as usize;
            if genus > max_genus {
                continue;
            }
            let closed = (1..limit)
                .filter(|&a| !gap(a))
                .all(|a| (a..limit).filter(|&b| !gap(b)).all(|b| !gap(a + b)));
            if closed {
                counts[genus] += 1;
            }
        }
        counts
    }

    #[test]
    fn genus_three_counts() {
        let all = enumerate_semigroups(&genus_bound(3), DEFAULT_SAFETY_CAP).unwrap();
        assert_eq!(all.len(), 8);
        let mut by_genus = [0; 4];
        for s in &all {
            by_genus[s.genus()] += 1;
        }
        assert_eq!(by_genus, [1, 1, 2, 4]);
    }

    #[test]
    fn genus_tree_matches_gap_set_enumeration() {
        let tree = enumerate_semigroups(&genus_bound(8), DEFAULT_SAFETY_CAP).unwrap();
        let mut counts = vec![0; 9];
        for s in &tree {
            counts[s.genus()] += 1;
        }
        assert_eq!(counts, brute_force_counts(8));
        assert_eq!(counts, vec![1, 1, 2, 4, 7, 12, 23, 39, 67]);
    }

    #[test]
    fn genus_zero_is_naturals() {
        let all = enumerate_semigroups(&genus_bound(0), DEFAULT_SAFETY_CAP).unwrap();
        assert_eq!(all, vec![NumericalSemigroup::naturals()]);
    }

    #[test]
    fn frobenius_three() {
        let bounds = ScanBounds {
            max_frobenius: Some(3),
            ..Default::default()
        };
        let gens: Vec<Vec<usize>> = enumerate_semigroups(&bounds, DEFAULT_SAFETY_CAP)
            .unwrap()
            .iter()
            .map(|s| s.minimal_generators().to_vec())
            .collect();
        assert_eq!(
            gens,
            vec![
                vec![1],
                vec![2, 3],
                vec![3, 4, 5],
                vec![2, 5],
                vec![4, 5, 6, 7]
            ]
        );
    }

    #[test]
    fn safety_cap_and_bounds() {
        assert_eq!(
            enumerate_semigroups(&genus_bound(10), 100),
            Err(Error::BoundsTooLarge(100))
        );
        assert!(matches!(
            enumerate_semigroups(&ScanBounds::default(), 100),
            Err(Error::InvalidBounds(_))
        ));
        let bad = ScanBounds {
            max_genus: Some(3),
            min_embdim: Some(4),
            max_embdim: Some(2),
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn ideals_of_naturals_and_window_zero() {
        let n = enumerate_ideals(&NumericalSemigroup::naturals(), 10);
        assert_eq!(n.len(), 1);
        assert_eq!(n[0].closure(), &ValuationSet::naturals());
        let s = sg(&[6, 7, 15]);
        let only = enumerate_ideals(&s, 0);
        assert_eq!(only, vec![RelativeIdeal::ring(&s)]);
    }

    #[test]
    fn ideals_of_2_3() {
        // Closure-dedup oracle: all subsets of [0, window] containing 0.
        let s = sg(&[2, 3]);
        let mut expected: Vec<RelativeIdeal> = Vec::new();
        for mask in 0u32..8 {
            let offs: Vec<usize> = std::iter::once(0)
                .chain((1..=3).filter(|i| mask & (1 << (i - 1)) != 0))
                .collect();
            let e = RelativeIdeal::new(&s, &offs).unwrap();
            if !expected.contains(&e) {
                expected.push(e);
            }
        }
        expected.sort_by(|a, b| a.offsets().cmp(b.offsets()));
        let got = enumerate_ideals(&s, 3);
        assert_eq!(got, expected);
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].offsets(), &[0]);
        assert_eq!(got[1].offsets(), &[0, 1]);
    }

    #[test]
    fn ideals_brute_force_small() {
        let s = sg(&[4, 5, 7]);
        let window = 7;
        let mut expected: HashSet<ValuationSet> = HashSet::new();
        for mask in 0u32..(1 << window) {
            let offs: Vec<usize> = std::iter::once(0)
                .chain((1..=window).filter(|i| mask & (1 << (i - 1)) != 0))
                .collect();
            expected.insert(RelativeIdeal::new(&s, &offs).unwrap().closure().clone());
        }
        let got = enumerate_ideals(&s, window);
        assert_eq!(got.len(), expected.len());
        assert!(got.iter().all(|e| expected.contains(e.closure())));
        assert!(got.iter().all(|e| e.offsets().iter().all(|&o| o <= window)));
    }

    #[test]
    fn sweep_small_examples() {
        let opts = ScanOptions::default();
        let r = sweep_monotonicity(&NumericalSemigroup::naturals(), 5, &opts).unwrap();
        assert_eq!(r.summary.instances, 1);
        assert!(r.findings.is_empty());

        let s = sg(&[4, 5, 6, 7]);
        let r = sweep_monotonicity(&s, 10, &opts).unwrap();
        assert!(r.findings.is_empty());
        for e in enumerate_ideals(&s, 10) {
            assert!(analyze(&s, &e).unwrap().depth_positive);
        }
    }

    #[test]
    fn checks_parse() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn depth_zero_findings_reverify() {
        let bounds = ScanBounds {
            max_frobenius: Some(12),
            ..Default::default()
        };
        let r = scan(&bounds, &[Check::DepthZero], &ScanOptions::default()).unwrap();
        assert!(!r.findings.is_empty());
        assert!(!r.has_violations());
        for f in &r.findings {
            assert_eq!(f.kind, FindingKind::DepthZeroMonotone);
            assert!(f.reverify().unwrap());
        }
        let mut tampered = r.findings[0].clone();
        tampered.data.hilbert[0] += 1;
        assert!(!tampered.reverify().unwrap());
    }

    #[test]
    fn jsonl_is_parseable_and_ordered() {
        let bounds = ScanBounds {
            max_frobenius: Some(9),
            ideal_window: Some(4),
            ..Default::default()
        };
        let r = scan(&bounds, &Check::ALL, &ScanOptions::default()).unwrap();
        let text = r.to_jsonl(false);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), r.findings.len() + 1);
        for line in &lines[..lines.len() - 1] {
            let rec: Record = serde_json::from_str(line).unwrap();
            assert!(matches!(rec, Record::Finding(_)));
        }
        let last: serde_json::Value = serde_json::from_str(lines.last().unwrap()).unwrap();
        assert_eq!(last["record"], "summary");
        assert_eq!(last["schema_version"], SCHEMA_VERSION);
        assert!(last.get("elapsed_ms").is_none());
        assert!(r.to_jsonl(true).contains("elapsed_ms"));
    }
}
