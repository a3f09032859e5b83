//! Sample selection and dataset tallies.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::domain::{Confederation, Entity, Match, Outcome, ScenarioConfig, SeedingScheme, Stage};
use crate::engine::entity_of;
use crate::error::DataError;

/// Play-offs that are left out of the sample entirely.
pub const EXCLUDED_PLAYOFFS: [(u16, &str, &str); 2] =
    [(1958, "Israel", "Wales"), (1974, "Soviet Union", "Chile")];

fn is_excluded_playoff(m: &Match) -> bool {
    m.stage == Stage::PlayoffLeg
        && EXCLUDED_PLAYOFFS.iter().any(|&(ed, x, y)| {
            m.edition == ed
                && ((m.team_a == x && m.team_b == y) || (m.team_a == y && m.team_b == x))
        })
}

/// Fails if any of the excluded play-offs made it into the dataset.
pub fn check_excluded_playoffs(matches: &[Match]) -> Result<(), DataError> {
    match matches.iter().find(|m| is_excluded_playoff(m)) {
        Some(m) => Err(DataError::ExcludedPlayoffPresent {
            edition: m.edition,
            team_a: m.team_a.clone(),
            team_b: m.team_b.clone(),
        }),
        None => Ok(()),
    }
}

/// Whether a match belongs to the sample described by `cfg`.
pub fn keep(m: &Match, cfg: &ScenarioConfig) -> bool {
    m.edition <= cfg.end_edition
        && m.confed_a != Confederation::Ofc
        && m.confed_b != Confederation::Ofc
        && (cfg.include_last_group_round || !m.last_group_round)
}

/// Matches in the sample, in input order.
pub fn apply_filters(matches: &[Match], cfg: &ScenarioConfig) -> Vec<Match> {
    debug_assert!(check_excluded_playoffs(matches).is_ok());
    matches.iter().filter(|m| keep(m, cfg)).cloned().collect()
}

/// Unordered confederation pair, smaller code first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConfedPair(pub Confederation, pub Confederation);

impl ConfedPair {
    pub fn new(a: Confederation, b: Confederation) -> Self {
        if a <= b {
            ConfedPair(a, b)
        } else {
            ConfedPair(b, a)
        }
    }
}

/// Wins of the row entity over the column entity, and drawn matches.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub wins: u32,
    pub draws: u32,
}

/// Counts by confederation pair and results by entity pair.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DatasetSummary {
    /// Inter-confederation final-tournament matches per pair and edition.
    pub pair_counts: BTreeMap<ConfedPair, BTreeMap<u16, u32>>,
    /// Two-legged play-off ties per edition.
    pub playoff_ties: BTreeMap<u16, u32>,
    /// Single-leg play-offs per edition.
    pub playoff_single: BTreeMap<u16, u32>,
    pub playoff_legs: u32,
    /// Results keyed by (row, column).
    pub tallies: BTreeMap<(Entity, Entity), Tally>,
    pub matches: u32,
    pub decisive: u32,
    pub draws: u32,
}

impl DatasetSummary {
    pub fn pair_total(&self, p: ConfedPair) -> u32 {
        self.pair_counts.get(&p).map_or(0, |m| m.values().sum())
    }

    pub fn inter_confed_total(&self) -> u32 {
        self.pair_counts.values().flat_map(|m| m.values()).sum()
    }

    pub fn playoff_tie_total(&self) -> u32 {
        self.playoff_ties.values().sum::<u32>() + self.playoff_single.values().sum::<u32>()
    }

    /// Pair matches plus play-off ties, each tie counted once.
    pub fn grand_total(&self) -> u32 {
        self.inter_confed_total() + self.playoff_tie_total()
    }

    /// Per-edition column total of the pair table.
    pub fn edition_total(&self, edition: u16) -> u32 {
        self.pair_counts
            .values()
            .filter_map(|m| m.get(&edition))
            .sum::<u32>()
            + self.playoff_ties.get(&edition).copied().unwrap_or(0)
            + self.playoff_single.get(&edition).copied().unwrap_or(0)
    }

    pub fn tally(&self, row: Entity, col: Entity) -> Tally {
        self.tallies.get(&(row, col)).copied().unwrap_or_default()
    }
}

/// Tally a filtered sample. Shootouts count as ordinary wins and losses and
/// each play-off leg is one match.
pub fn tabulate(matches: &[Match], seeding: &SeedingScheme) -> DatasetSummary {
    let mut s = DatasetSummary::default();
    let mut legs: BTreeMap<(u16, String, String), u32> = BTreeMap::new();
    for m in matches {
        if m.stage == Stage::PlayoffLeg {
            s.playoff_legs += 1;
            let (x, y) = if m.team_a <= m.team_b {
                (m.team_a.clone(), m.team_b.clone())
            } else {
                (m.team_b.clone(), m.team_a.clone())
            };
            *legs.entry((m.edition, x, y)).or_insert(0) += 1;
        } else if m.confed_a != m.confed_b {
            *s.pair_counts
                .entry(ConfedPair::new(m.confed_a, m.confed_b))
                .or_default()
                .entry(m.edition)
                .or_insert(0) += 1;
        }
        let (Some(ea), Some(eb)) = (
            entity_of(&m.team_a, m.confed_a, seeding),
            entity_of(&m.team_b, m.confed_b, seeding),
        ) else {
            continue;
        };
        s.matches += 1;
        match m.outcome {
            Outcome::Win | Outcome::ShootoutWin => {
                s.decisive += 1;
                s.tallies.entry((ea, eb)).or_default().wins += 1;
            }
            Outcome::Loss | Outcome::ShootoutLoss => {
                s.decisive += 1;
                s.tallies.entry((eb, ea)).or_default().wins += 1;
            }
            Outcome::Draw => {
                s.draws += 1;
                s.tallies.entry((ea, eb)).or_default().draws += 1;
                if ea != eb {
                    s.tallies.entry((eb, ea)).or_default().draws += 1;
                }
            }
        }
    }
    for ((edition, _, _), n) in legs {
        let map = if n >= 2 {
            &mut s.playoff_ties
        } else {
            &mut s.playoff_single
        };
        *map.entry(edition).or_insert(0) += 1;
    }
    s
}

/// Editions present in a match list.
pub fn editions_of(matches: &[Match]) -> BTreeSet<u16> {
    matches.iter().map(|m| m.edition).collect()
}
