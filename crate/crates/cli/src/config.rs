//! JSON configuration files and their merge with command-line flags.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use confed_elo::domain::SeededCountry;
use confed_elo::{Confederation, Policy, ScenarioConfig, SeedingName, SeedingScheme};
use serde::Deserialize;

use crate::error::AppError;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub dataset: Option<PathBuf>,
    pub out: Option<PathBuf>,
    pub policy: Option<String>,
    pub seeding: Option<SeedingSpec>,
    pub end_edition: Option<u16>,
    pub include_last_group_round: Option<bool>,
    pub total_slots: Option<f64>,
    pub ofc_quota: Option<f64>,
    pub caps: Option<BTreeMap<String, f64>>,
    pub initial_rating: Option<f64>,
    pub redistribute_cap_excess: Option<bool>,
    pub skip_intra_entity: Option<bool>,
}

/// `"s2"` or `{"countries": [{"names": ["Italy"], "confed": "UEFA"}]}`.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum SeedingSpec {
    Named(String),
    Custom { countries: Vec<CountrySpec> },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CountrySpec {
    pub names: Vec<String>,
    pub confed: String,
}

/// Values given on the command line; they win over the file.
#[derive(Debug, Default, Clone)]
pub struct Overrides {
    pub dataset: Option<PathBuf>,
    pub out: Option<PathBuf>,
    pub policy: Option<Policy>,
    pub seeding: Option<SeedingName>,
    pub end: Option<u16>,
    pub include_last_round: bool,
    pub no_redistribute_cap_excess: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub scenario: ScenarioConfig,
    pub dataset: Option<PathBuf>,
    pub out: Option<PathBuf>,
}

fn usage(msg: impl std::fmt::Display) -> AppError {
    AppError::Usage(msg.to_string())
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<FileConfig, AppError> {
        let text = std::fs::read_to_string(path).map_err(|source| AppError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|e| usage(format!("config {}: {e}", path.display())))
    }

    fn seeding(&self) -> Result<Option<SeedingScheme>, AppError> {
        match &self.seeding {
            None => Ok(None),
            Some(SeedingSpec::Named(name)) => {
                let n: SeedingName = name.parse().map_err(usage)?;
                SeedingScheme::named(n)
                    .map(Some)
                    .ok_or_else(|| usage("a custom seeding needs a 'countries' list"))
            }
            Some(SeedingSpec::Custom { countries }) => {
                let mut out = Vec::with_capacity(countries.len());
                for c in countries {
                    if c.names.is_empty() {
                        return Err(usage("a seeded country needs at least one name"));
                    }
                    out.push(SeededCountry {
                        names: c.names.clone(),
                        confed: c.confed.parse().map_err(usage)?,
                    });
                }
                Ok(Some(SeedingScheme::custom(out)))
            }
        }
    }
}

impl CliConfig {
    pub fn resolve(file: FileConfig, flags: Overrides) -> Result<CliConfig, AppError> {
        let mut s = ScenarioConfig::default();
        if let Some(p) = &file.policy {
            s.policy = p.parse().map_err(usage)?;
        }
        if let Some(seeding) = file.seeding()? {
            s.seeding = seeding;
        }
        if let Some(e) = file.end_edition {
            s.end_edition = e;
        }
        if let Some(b) = file.include_last_group_round {
            s.include_last_group_round = b;
        }
        if let Some(x) = file.total_slots {
            s.total_slots = x;
        }
        if let Some(x) = file.ofc_quota {
            s.ofc_quota = x;
        }
        if let Some(caps) = &file.caps {
            s.caps = caps
                .iter()
                .map(|(k, &v)| Ok((k.parse::<Confederation>().map_err(usage)?, v)))
                .collect::<Result<_, AppError>>()?;
        }
        if let Some(x) = file.initial_rating {
            s.initial_rating = x;
        }
        if let Some(b) = file.redistribute_cap_excess {
            s.redistribute_cap_excess = b;
        }
        if let Some(b) = file.skip_intra_entity {
            s.skip_intra_entity = b;
        }

        if let Some(p) = flags.policy {
            s.policy = p;
        }
        if let Some(n) = flags.seeding {
            s.seeding = SeedingScheme::named(n).ok_or_else(|| usage("use the config file for custom seedings"))?;
        }
        if let Some(e) = flags.end {
            s.end_edition = e;
        }
        if flags.include_last_round {
            s.include_last_group_round = true;
        }
        if flags.no_redistribute_cap_excess {
            s.redistribute_cap_excess = false;
        }
        s.validate().map_err(usage)?;
        Ok(CliConfig {
            scenario: s,
            dataset: flags.dataset.or(file.dataset),
            out: flags.out.or(file.out),
        })
    }
}
