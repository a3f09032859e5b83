//! Value types shared by the engine, the allocator and the filters.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{DataError, ParseEnumError};

/// One of the six continental zones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Confederation {
    Afc,
    Caf,
    Concacaf,
    Conmebol,
    Ofc,
    Uefa,
}

impl Confederation {
    pub const ALL: [Confederation; 6] = [
        Confederation::Afc,
        Confederation::Caf,
        Confederation::Concacaf,
        Confederation::Conmebol,
        Confederation::Ofc,
        Confederation::Uefa,
    ];

    /// The five zones that receive a rating; OFC has a fixed quota instead.
    pub const RATED: [Confederation; 5] = [
        Confederation::Afc,
        Confederation::Caf,
        Confederation::Concacaf,
        Confederation::Conmebol,
        Confederation::Uefa,
    ];

    pub fn code(self) -> &'static str {
        match self {
            Confederation::Afc => "AFC",
            Confederation::Caf => "CAF",
            Confederation::Concacaf => "CONCACAF",
            Confederation::Conmebol => "CONMEBOL",
            Confederation::Ofc => "OFC",
            Confederation::Uefa => "UEFA",
        }
    }

    /// Short label used in pair tables ("CONC", "CONM").
    pub fn short(self) -> &'static str {
        match self {
            Confederation::Concacaf => "CONC",
            Confederation::Conmebol => "CONM",
            other => other.code(),
        }
    }
}

impl fmt::Display for Confederation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Confederation {
    type Err = ParseEnumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Confederation::ALL
            .into_iter()
            .find(|c| c.code().eq_ignore_ascii_case(s))
            .ok_or_else(|| ParseEnumError::new("confederation", s))
    }
}

/// A unit that carries a single Elo rating.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Entity {
    Confed(Confederation),
    Seeded,
}

impl Entity {
    /// Rating entity for a confederation; `None` for OFC.
    pub fn confed(c: Confederation) -> Option<Entity> {
        match c {
            Confederation::Ofc => None,
            c => Some(Entity::Confed(c)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Entity::Confed(c) => c.code(),
            Entity::Seeded => "SEEDED",
        }
    }
}

impl fmt::Display for Entity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Stage {
    PlayoffLeg,
    Group1,
    Group2,
    R16,
    QF,
    SF,
    ThirdPlace,
    Final,
}

impl Stage {
    pub const ALL: [Stage; 8] = [
        Stage::PlayoffLeg,
        Stage::Group1,
        Stage::Group2,
        Stage::R16,
        Stage::QF,
        Stage::SF,
        Stage::ThirdPlace,
        Stage::Final,
    ];

    pub fn code(self) -> &'static str {
        match self {
            Stage::PlayoffLeg => "PLAYOFF",
            Stage::Group1 => "GROUP1",
            Stage::Group2 => "GROUP2",
            Stage::R16 => "R16",
            Stage::QF => "QF",
            Stage::SF => "SF",
            Stage::ThirdPlace => "TP",
            Stage::Final => "F",
        }
    }

    /// Knockout rounds of the final tournament. Play-off legs are not included.
    pub fn is_knockout(self) -> bool {
        matches!(
            self,
            Stage::R16 | Stage::QF | Stage::SF | Stage::ThirdPlace | Stage::Final
        )
    }

    pub fn is_group(self) -> bool {
        matches!(self, Stage::Group1 | Stage::Group2)
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Stage {
    type Err = ParseEnumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Stage::ALL
            .into_iter()
            .find(|st| st.code().eq_ignore_ascii_case(s))
            .ok_or_else(|| ParseEnumError::new("stage", s))
    }
}

/// Result of a match from one side's perspective.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Outcome {
    Loss,
    Draw,
    /// Lost a penalty shootout.
    ShootoutLoss,
    /// Won a penalty shootout.
    ShootoutWin,
    Win,
}

impl Outcome {
    pub fn value(self) -> f64 {
        match self {
            Outcome::Loss => 0.0,
            Outcome::Draw | Outcome::ShootoutLoss => 0.5,
            Outcome::ShootoutWin => 0.75,
            Outcome::Win => 1.0,
        }
    }

    /// Decode a stored `w_a` value. `0.5` is ambiguous without the shootout flag.
    pub fn from_value(w: f64, shootout: bool) -> Option<Outcome> {
        match (w, shootout) {
            (0.0, false) => Some(Outcome::Loss),
            (0.5, false) => Some(Outcome::Draw),
            (1.0, false) => Some(Outcome::Win),
            (0.5, true) => Some(Outcome::ShootoutLoss),
            (0.75, true) => Some(Outcome::ShootoutWin),
            _ => None,
        }
    }

    /// The other side's outcome.
    pub fn opposite(self) -> Outcome {
        match self {
            Outcome::Loss => Outcome::Win,
            Outcome::Win => Outcome::Loss,
            Outcome::Draw => Outcome::Draw,
            Outcome::ShootoutLoss => Outcome::ShootoutWin,
            Outcome::ShootoutWin => Outcome::ShootoutLoss,
        }
    }

    pub fn is_shootout(self) -> bool {
        matches!(self, Outcome::ShootoutLoss | Outcome::ShootoutWin)
    }
}

/// One fixture. Results are stored from `team_a`'s side.
#[derive(Clone, Debug, PartialEq)]
pub struct Match {
    pub edition: u16,
    pub date_order: u32,
    pub stage: Stage,
    pub round_index: u8,
    pub team_a: String,
    pub team_b: String,
    pub confed_a: Confederation,
    pub confed_b: Confederation,
    pub score_a: u8,
    pub score_b: u8,
    pub outcome: Outcome,
    pub last_group_round: bool,
}

pub const FIRST_EDITION: u16 = 1954;
pub const LAST_EDITION: u16 = 2022;

/// Every World Cup edition from 1954 to 2022.
pub fn editions() -> impl Iterator<Item = u16> {
    (FIRST_EDITION..=LAST_EDITION).step_by(4)
}

impl Match {
    pub fn w_a(&self) -> f64 {
        self.outcome.value()
    }

    pub fn w_b(&self) -> f64 {
        self.outcome.opposite().value()
    }

    pub fn shootout(&self) -> bool {
        self.outcome.is_shootout()
    }

    /// Check the structural invariants of a single match.
    pub fn validate(&self) -> Result<(), DataError> {
        let bad = |field: &'static str, msg: &str| {
            Err(DataError::Field {
                field,
                message: String::from(msg),
            })
        };
        if !(FIRST_EDITION..=LAST_EDITION).contains(&self.edition)
            || !(self.edition - FIRST_EDITION).is_multiple_of(4)
        {
            return bad("edition", "not a World Cup year between 1954 and 2022");
        }
        if self.round_index == 0 {
            return bad("round_index", "must be at least 1");
        }
        if self.team_a.is_empty() || self.team_b.is_empty() {
            return bad("team_a", "team names must be non-empty");
        }
        if self.team_a == self.team_b {
            return bad("team_b", "a team cannot play itself");
        }
        if self.shootout() && !(self.stage.is_knockout() || self.stage == Stage::PlayoffLeg) {
            return bad("shootout", "shootouts only occur in knockout rounds or play-offs");
        }
        if self.last_group_round && self.stage != Stage::Group1 {
            return bad("last_group_round", "only first group stage matches can be flagged");
        }
        if self.stage == Stage::Group2 && !matches!(self.edition, 1974 | 1978 | 1982) {
            return bad("stage", "a second group stage was only played in 1974, 1978 and 1982");
        }
        for (team, confed, field) in [
            (&self.team_a, self.confed_a, "confed_a"),
            (&self.team_b, self.confed_b, "confed_b"),
        ] {
            if let Some(expected) = historical_confederation(team, self.edition) {
                if expected != confed {
                    return bad(field, "confederation does not match the team's zone in that edition");
                }
            }
        }
        Ok(())
    }
}

/// Zone for the teams whose membership changed over the covered period.
pub fn historical_confederation(team: &str, edition: u16) -> Option<Confederation> {
    match team {
        "Australia" if edition <= 2006 => Some(Confederation::Ofc),
        "Australia" => Some(Confederation::Afc),
        "Israel" if edition == 1990 => Some(Confederation::Ofc),
        _ => None,
    }
}

/// A seeded country and the names it has played under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeededCountry {
    pub names: Vec<String>,
    pub confed: Confederation,
}

impl SeededCountry {
    pub fn new(names: &[&str], confed: Confederation) -> Self {
        SeededCountry {
            names: names.iter().map(|n| String::from(*n)).collect(),
            confed,
        }
    }

    pub fn matches(&self, team: &str) -> bool {
        self.names.iter().any(|n| n == team)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SeedingName {
    S0,
    S1,
    S2,
    Custom,
}

impl SeedingName {
    pub fn code(self) -> &'static str {
        match self {
            SeedingName::S0 => "S0",
            SeedingName::S1 => "S1",
            SeedingName::S2 => "S2",
            SeedingName::Custom => "custom",
        }
    }
}

impl fmt::Display for SeedingName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for SeedingName {
    type Err = ParseEnumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "s0" => Ok(SeedingName::S0),
            "s1" => Ok(SeedingName::S1),
            "s2" => Ok(SeedingName::S2),
            "custom" => Ok(SeedingName::Custom),
            _ => Err(ParseEnumError::new("seeding", s)),
        }
    }
}

/// Countries rated jointly as an extra entity and given automatic slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedingScheme {
    pub name: SeedingName,
    pub countries: Vec<SeededCountry>,
}

impl SeedingScheme {
    pub fn s0() -> Self {
        SeedingScheme {
            name: SeedingName::S0,
            countries: Vec::new(),
        }
    }

    pub fn s1() -> Self {
        SeedingScheme {
            name: SeedingName::S1,
            countries: s1_countries(),
        }
    }

    pub fn s2() -> Self {
        let mut countries = s1_countries();
        countries.extend([
            SeededCountry::new(&["France"], Confederation::Uefa),
            SeededCountry::new(&["Italy"], Confederation::Uefa),
            SeededCountry::new(&["Mexico"], Confederation::Concacaf),
            SeededCountry::new(&["Spain"], Confederation::Uefa),
        ]);
        SeedingScheme {
            name: SeedingName::S2,
            countries,
        }
    }

    pub fn custom(countries: Vec<SeededCountry>) -> Self {
        SeedingScheme {
            name: SeedingName::Custom,
            countries,
        }
    }

    pub fn named(name: SeedingName) -> Option<Self> {
        match name {
            SeedingName::S0 => Some(Self::s0()),
            SeedingName::S1 => Some(Self::s1()),
            SeedingName::S2 => Some(Self::s2()),
            SeedingName::Custom => None,
        }
    }

    pub fn is_seeded(&self, team: &str) -> bool {
        self.countries.iter().any(|c| c.matches(team))
    }

    /// |S|
    pub fn len(&self) -> usize {
        self.countries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.countries.is_empty()
    }

    /// |S_i| for every confederation, zeros included.
    pub fn seed_counts(&self) -> BTreeMap<Confederation, u32> {
        let mut counts: BTreeMap<Confederation, u32> =
            Confederation::ALL.iter().map(|&c| (c, 0)).collect();
        for c in &self.countries {
            *counts.entry(c.confed).or_insert(0) += 1;
        }
        counts
    }

    pub fn seed_count(&self, confed: Confederation) -> u32 {
        self.countries.iter().filter(|c| c.confed == confed).count() as u32
    }
}

fn s1_countries() -> Vec<SeededCountry> {
    alloc::vec![
        SeededCountry::new(&["Argentina"], Confederation::Conmebol),
        SeededCountry::new(&["Brazil"], Confederation::Conmebol),
        SeededCountry::new(&["England"], Confederation::Uefa),
        SeededCountry::new(&["Germany", "West Germany"], Confederation::Uefa),
    ]
}

/// When accumulated rating changes are applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Policy {
    Round,
    Stage,
    FourYear,
}

impl Policy {
    pub const ALL: [Policy; 3] = [Policy::Round, Policy::Stage, Policy::FourYear];

    pub fn code(self) -> &'static str {
        match self {
            Policy::Round => "round",
            Policy::Stage => "stage",
            Policy::FourYear => "4year",
        }
    }
}

impl fmt::Display for Policy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Policy {
    type Err = ParseEnumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "round" => Ok(Policy::Round),
            "stage" => Ok(Policy::Stage),
            "4year" | "fouryear" | "four-year" => Ok(Policy::FourYear),
            _ => Err(ParseEnumError::new("policy", s)),
        }
    }
}

/// Everything that defines one rating and allocation run.
#[derive(Clone, Debug, PartialEq)]
pub struct ScenarioConfig {
    pub policy: Policy,
    pub seeding: SeedingScheme,
    pub end_edition: u16,
    pub include_last_group_round: bool,
    pub total_slots: f64,
    pub ofc_quota: f64,
    pub caps: BTreeMap<Confederation, f64>,
    pub initial_rating: f64,
    pub redistribute_cap_excess: bool,
    /// Ignore matches whose two sides map to the same rating entity.
    pub skip_intra_entity: bool,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        let mut caps = BTreeMap::new();
        caps.insert(Confederation::Conmebol, 8.0);
        ScenarioConfig {
            policy: Policy::Round,
            seeding: SeedingScheme::s2(),
            end_edition: LAST_EDITION,
            include_last_group_round: false,
            total_slots: 48.0,
            ofc_quota: 4.0 / 3.0,
            caps,
            initial_rating: 1500.0,
            redistribute_cap_excess: true,
            skip_intra_entity: true,
        }
    }
}

impl ScenarioConfig {
    /// Slots shared out in proportion to the ratios.
    pub fn pool(&self) -> f64 {
        self.total_slots - self.ofc_quota - self.seeding.len() as f64
    }

    pub fn validate(&self) -> Result<(), DataError> {
        if !self.total_slots.is_finite() || !self.ofc_quota.is_finite() || self.ofc_quota < 0.0 {
            return Err(DataError::Config(String::from("slot totals must be finite and non-negative")));
        }
        if !(self.pool() > 0.0) {
            return Err(DataError::Config(String::from(
                "total slots must exceed the OFC quota plus the number of seeds",
            )));
        }
        if self.caps.values().any(|&c| !(c > 0.0)) {
            return Err(DataError::Config(String::from("caps must be positive")));
        }
        if self.caps.contains_key(&Confederation::Ofc) {
            return Err(DataError::Config(String::from("OFC has a fixed quota and cannot be capped")));
        }
        if !self.initial_rating.is_finite() {
            return Err(DataError::Config(String::from("initial rating must be finite")));
        }
        if self.seeding.countries.iter().any(|c| c.confed == Confederation::Ofc) {
            return Err(DataError::Config(String::from("OFC countries cannot be seeded")));
        }
        Ok(())
    }
}

/// Ratings of the active entities at a batch boundary.
#[derive(Clone, Debug, PartialEq)]
pub struct RatingState {
    pub ratings: BTreeMap<Entity, f64>,
}

impl RatingState {
    pub fn uniform(entities: &[Entity], rating: f64) -> Self {
        RatingState {
            ratings: entities.iter().map(|&e| (e, rating)).collect(),
        }
    }

    /// Ratings for the five rated confederations in `Confederation::RATED` order.
    pub fn from_confeds(values: [f64; 5]) -> Self {
        RatingState {
            ratings: Confederation::RATED
                .iter()
                .zip(values)
                .map(|(&c, r)| (Entity::Confed(c), r))
                .collect(),
        }
    }

    pub fn get(&self, e: Entity) -> Option<f64> {
        self.ratings.get(&e).copied()
    }

    pub fn confed(&self, c: Confederation) -> Option<f64> {
        self.get(Entity::Confed(c))
    }

    pub fn set(&mut self, e: Entity, r: f64) {
        self.ratings.insert(e, r);
    }
}

/// Fractional slots per confederation after seeds and caps.
#[derive(Clone, Debug, PartialEq)]
pub struct AllocationResult {
    pub quotas: BTreeMap<Confederation, f64>,
    pub ofc: f64,
    pub capped: Vec<Confederation>,
    pub reference: Entity,
    pub ratios: BTreeMap<Entity, f64>,
}

impl AllocationResult {
    pub fn quota(&self, c: Confederation) -> f64 {
        if c == Confederation::Ofc {
            self.ofc
        } else {
            self.quotas.get(&c).copied().unwrap_or(0.0)
        }
    }

    pub fn total(&self) -> f64 {
        self.quotas.values().sum::<f64>() + self.ofc
    }

    pub fn is_capped(&self, c: Confederation) -> bool {
        self.capped.contains(&c)
    }
}
