//! Full pipeline runs and grids of them.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::allocator::allocate;
use crate::domain::{AllocationResult, Confederation, Match, Policy, ScenarioConfig, SeedingName, SeedingScheme};
use crate::engine::{run_policy, RatingTimeline};
use crate::error::DataError;
use crate::filter::{apply_filters, check_excluded_playoffs};

/// Filter, rate and allocate in one go.
pub fn run_pipeline(
    matches: &[Match],
    cfg: &ScenarioConfig,
) -> Result<(RatingTimeline, AllocationResult), DataError> {
    cfg.validate()?;
    check_excluded_playoffs(matches)?;
    let sample = apply_filters(matches, cfg);
    let timeline = run_policy(&sample, cfg)?;
    let alloc = allocate(timeline.last(), cfg)?;
    Ok((timeline, alloc))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepGrid {
    pub end_editions: Vec<u16>,
    pub policies: Vec<Policy>,
    pub seedings: Vec<SeedingScheme>,
    pub last_round: Vec<bool>,
}

impl SweepGrid {
    /// The eight end editions from 1994 to 2022 under every method.
    pub fn figures() -> Self {
        SweepGrid {
            end_editions: (1994..=2022).step_by(4).collect(),
            policies: Policy::ALL.to_vec(),
            seedings: alloc::vec![SeedingScheme::s0(), SeedingScheme::s1(), SeedingScheme::s2()],
            last_round: alloc::vec![false],
        }
    }

    /// All nine methods at one end edition, with and without the last group round.
    pub fn last_round_effect(end: u16) -> Self {
        SweepGrid {
            end_editions: alloc::vec![end],
            last_round: alloc::vec![false, true],
            ..SweepGrid::figures()
        }
    }

    pub fn len(&self) -> usize {
        self.end_editions.len() * self.policies.len() * self.seedings.len() * self.last_round.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn validate(&self) -> Result<(), DataError> {
        let empty = [
            ("end_editions", self.end_editions.is_empty()),
            ("policies", self.policies.is_empty()),
            ("seedings", self.seedings.is_empty()),
            ("last_round", self.last_round.is_empty()),
        ];
        if let Some((axis, _)) = empty.iter().find(|(_, e)| *e) {
            return Err(DataError::Config(format!("sweep axis '{axis}' is empty")));
        }
        Ok(())
    }

    /// Every grid point with the scenario it runs, in key order.
    pub fn points(&self, base: &ScenarioConfig) -> Vec<(SweepKey, ScenarioConfig)> {
        let mut out = Vec::with_capacity(self.len());
        for &end in &self.end_editions {
            for &policy in &self.policies {
                for seeding in &self.seedings {
                    for &last in &self.last_round {
                        let cfg = ScenarioConfig {
                            policy,
                            seeding: seeding.clone(),
                            end_edition: end,
                            include_last_group_round: last,
                            ..base.clone()
                        };
                        out.push((SweepKey::new(end, policy, seeding.name, last), cfg));
                    }
                }
            }
        }
        out.sort_by_key(|a| a.0);
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SweepKey {
    pub end_edition: u16,
    pub policy: Policy,
    pub seeding: SeedingName,
    pub last_round: bool,
}

impl SweepKey {
    pub fn new(end_edition: u16, policy: Policy, seeding: SeedingName, last_round: bool) -> Self {
        SweepKey {
            end_edition,
            policy,
            seeding,
            last_round,
        }
    }

    /// Same method without the last-round option.
    pub fn method(&self) -> (u16, Policy, SeedingName) {
        (self.end_edition, self.policy, self.seeding)
    }
}

impl fmt::Display for SweepKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{}/{}/{}",
            self.end_edition,
            self.policy,
            self.seeding,
            if self.last_round { "with-last-round" } else { "baseline" }
        )
    }
}

pub type SweepResult = BTreeMap<SweepKey, AllocationResult>;

/// Error raised at one grid point.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepError {
    pub key: SweepKey,
    pub source: DataError,
}

impl fmt::Display for SweepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "grid point {}: {}", self.key, self.source)
    }
}

impl core::error::Error for SweepError {}

pub fn run_point(matches: &[Match], key: SweepKey, cfg: &ScenarioConfig) -> Result<AllocationResult, SweepError> {
    run_pipeline(matches, cfg)
        .map(|(_, a)| a)
        .map_err(|source| SweepError { key, source })
}

/// Run every grid point one after another.
pub fn run_sweep(matches: &[Match], grid: &SweepGrid, base: &ScenarioConfig) -> Result<SweepResult, SweepError> {
    let mut out = SweepResult::new();
    for (key, cfg) in grid.points(base) {
        let a = run_point(matches, key, &cfg)?;
        out.insert(key, a);
    }
    Ok(out)
}

/// Quota changes from `a` to `b` for each method present in both. CONMEBOL
/// is left out when capped on either side; OFC is never reported.
pub fn diff_sweeps(
    a: &SweepResult,
    b: &SweepResult,
) -> Result<BTreeMap<SweepKey, BTreeMap<Confederation, f64>>, DataError> {
    let index_b: BTreeMap<_, _> = b.iter().map(|(k, v)| (k.method(), (k, v))).collect();
    if index_b.len() != b.len() || a.len() != b.len() {
        return Err(DataError::Config(String::from("sweeps do not cover the same methods")));
    }
    let mut out = BTreeMap::new();
    for (ka, ra) in a {
        let Some((_, rb)) = index_b.get(&ka.method()) else {
            return Err(DataError::Config(format!("no counterpart for {ka}")));
        };
        let mut d = BTreeMap::new();
        for c in Confederation::RATED {
            if c == Confederation::Conmebol && (ra.is_capped(c) || rb.is_capped(c)) {
                continue;
            }
            d.insert(c, rb.quota(c) - ra.quota(c));
        }
        out.insert(*ka, d);
    }
    Ok(out)
}

/// Split a sweep by its last-round option.
pub fn split_last_round(r: &SweepResult) -> (SweepResult, SweepResult) {
    r.iter()
        .map(|(k, v)| (*k, v.clone()))
        .partition(|(k, _)| !k.last_round)
}
