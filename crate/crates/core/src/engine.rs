//! Elo updates for rating entities, applied in batches.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::domain::{Confederation, Entity, Match, Policy, RatingState, ScenarioConfig, SeedingScheme, Stage};
use crate::error::DataError;

const SCALE: f64 = 600.0;

/// Win expectancy of a side rated `r_i` against one rated `r_j`.
///
/// The larger side is always computed directly and the smaller one as its
/// complement, so `expected_score(a, b) + expected_score(b, a)` is 1.
pub fn expected_score(r_i: f64, r_j: f64) -> f64 {
    if r_i < r_j {
        1.0 - expected_score(r_j, r_i)
    } else {
        1.0 / (1.0 + libm::pow(10.0, -(r_i - r_j) / SCALE))
    }
}

/// Weight of a match.
pub fn importance(m: &Match) -> Result<u32, DataError> {
    match m.stage {
        Stage::PlayoffLeg => Ok(25),
        Stage::Group1 | Stage::R16 => Ok(50),
        Stage::QF | Stage::SF | Stage::ThirdPlace | Stage::Final => Ok(60),
        Stage::Group2 => match m.edition {
            1974 | 1978 => Ok(60),
            1982 => Ok(50),
            edition => Err(DataError::ImpossibleStage {
                edition,
                stage: Stage::Group2,
            }),
        },
    }
}

/// Rating change of one side. Knockout matches never lower a rating.
pub fn match_delta(r_i: f64, r_j: f64, w: f64, imp: u32, knockout: bool) -> f64 {
    let raw = imp as f64 * (w - expected_score(r_i, r_j));
    if knockout && raw < 0.0 {
        0.0
    } else {
        raw
    }
}

/// The entity a team is rated under, or `None` for OFC sides.
pub fn entity_of(team: &str, confed: Confederation, seeding: &SeedingScheme) -> Option<Entity> {
    if confed == Confederation::Ofc {
        None
    } else if seeding.is_seeded(team) {
        Some(Entity::Seeded)
    } else {
        Entity::confed(confed)
    }
}

/// What a batch covers inside one edition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BatchKind {
    Playoffs,
    GroupRound(Stage, u8),
    Stage(Stage),
    Tournament,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BatchKey {
    pub edition: u16,
    pub kind: BatchKind,
}

impl BatchKey {
    pub fn of(m: &Match, policy: Policy) -> BatchKey {
        let kind = match (policy, m.stage) {
            (Policy::FourYear, _) => BatchKind::Tournament,
            (_, Stage::PlayoffLeg) => BatchKind::Playoffs,
            (Policy::Round, s) if s.is_group() => BatchKind::GroupRound(s, m.round_index),
            (_, s) => BatchKind::Stage(s),
        };
        BatchKey {
            edition: m.edition,
            kind,
        }
    }
}

impl fmt::Display for BatchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BatchKind::Playoffs => f.write_str("playoff"),
            BatchKind::GroupRound(s, r) => write!(f, "{}-{}", s.code().to_ascii_lowercase(), r),
            BatchKind::Stage(s) => f.write_str(&s.code().to_ascii_lowercase()),
            BatchKind::Tournament => f.write_str("all"),
        }
    }
}

/// A set of matches rated against the same starting state.
#[derive(Clone, Debug, PartialEq)]
pub struct Batch<'a> {
    pub key: BatchKey,
    pub matches: Vec<&'a Match>,
}

/// Group matches into batches in chronological order. Inside a batch the
/// matches are sorted by `date_order` so that summation is canonical.
pub fn partition(matches: &[Match], policy: Policy) -> Vec<Batch<'_>> {
    let mut map: BTreeMap<BatchKey, Vec<&Match>> = BTreeMap::new();
    for m in matches {
        map.entry(BatchKey::of(m, policy)).or_default().push(m);
    }
    map.into_iter()
        .map(|(key, mut matches)| {
            matches.sort_by_key(|m| m.date_order);
            Batch { key, matches }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BatchLabel {
    Initial,
    After(BatchKey),
}

/// Rating states at every batch boundary.
#[derive(Clone, Debug, PartialEq)]
pub struct RatingTimeline {
    pub entries: Vec<(BatchLabel, RatingState)>,
}

impl RatingTimeline {
    pub fn initial(&self) -> &RatingState {
        &self.entries[0].1
    }

    pub fn last(&self) -> &RatingState {
        &self.entries[self.entries.len() - 1].1
    }

    pub fn batch_count(&self) -> usize {
        self.entries.len() - 1
    }
}

/// Entities rated under a seeding: the five confederations, plus the
/// seeded entity when anyone is seeded.
pub fn active_entities(seeding: &SeedingScheme) -> Vec<Entity> {
    let mut out: Vec<Entity> = Confederation::RATED.iter().map(|&c| Entity::Confed(c)).collect();
    if !seeding.is_empty() {
        out.push(Entity::Seeded);
    }
    out
}

/// Per-entity changes produced by one batch, computed against `state`.
pub fn batch_deltas(
    state: &RatingState,
    matches: &[&Match],
    cfg: &ScenarioConfig,
) -> Result<BTreeMap<Entity, f64>, DataError> {
    let mut deltas: BTreeMap<Entity, f64> = BTreeMap::new();
    for m in matches {
        let (Some(ea), Some(eb)) = (
            entity_of(&m.team_a, m.confed_a, &cfg.seeding),
            entity_of(&m.team_b, m.confed_b, &cfg.seeding),
        ) else {
            continue;
        };
        if ea == eb && (ea == Entity::Seeded || cfg.skip_intra_entity) {
            continue;
        }
        let imp = importance(m)?;
        let ko = m.stage.is_knockout();
        let ra = rating(state, ea)?;
        let rb = rating(state, eb)?;
        *deltas.entry(ea).or_insert(0.0) += match_delta(ra, rb, m.w_a(), imp, ko);
        *deltas.entry(eb).or_insert(0.0) += match_delta(rb, ra, m.w_b(), imp, ko);
    }
    Ok(deltas)
}

fn rating(state: &RatingState, e: Entity) -> Result<f64, DataError> {
    state.get(e).ok_or(match e {
        Entity::Confed(c) => DataError::MissingRating(c),
        Entity::Seeded => DataError::Config(alloc::string::String::from(
            "seeded entity has no rating",
        )),
    })
}

/// Rate filtered matches from the uniform initial state.
pub fn run_policy(matches: &[Match], cfg: &ScenarioConfig) -> Result<RatingTimeline, DataError> {
    let initial = RatingState::uniform(&active_entities(&cfg.seeding), cfg.initial_rating);
    run_from(initial, matches, cfg)
}

/// Rate filtered matches starting from an arbitrary state.
pub fn run_from(
    initial: RatingState,
    matches: &[Match],
    cfg: &ScenarioConfig,
) -> Result<RatingTimeline, DataError> {
    let mut state = initial.clone();
    let mut entries = alloc::vec![(BatchLabel::Initial, initial)];
    for batch in partition(matches, cfg.policy) {
        let deltas = batch_deltas(&state, &batch.matches, cfg)?;
        for (e, d) in deltas {
            if let Some(r) = state.ratings.get_mut(&e) {
                *r += d;
            }
        }
        entries.push((BatchLabel::After(batch.key), state.clone()));
    }
    Ok(RatingTimeline { entries })
}
