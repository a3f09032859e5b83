//! Turning ratings into fractional slot quotas.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::domain::{AllocationResult, Confederation, Entity, RatingState, ScenarioConfig};
use crate::error::DataError;

/// Entity used as the ratio reference in reports.
pub const DEFAULT_REFERENCE: Entity = Entity::Confed(Confederation::Afc);

/// Odds of `i` over `k` implied by their ratings.
pub fn pairwise_ratio(r_i: f64, r_k: f64) -> f64 {
    libm::pow(10.0, (r_i - r_k) / 600.0)
}

/// `a_ik` for every entity in the state.
#[derive(Clone, Debug, PartialEq)]
pub struct RatioVector {
    pub reference: Entity,
    pub values: BTreeMap<Entity, f64>,
}

pub fn ratios(state: &RatingState, reference: Entity) -> Result<RatioVector, DataError> {
    let r_k = reference_rating(state, reference)?;
    Ok(RatioVector {
        reference,
        values: state
            .ratings
            .iter()
            .map(|(&e, &r)| (e, pairwise_ratio(r, r_k)))
            .collect(),
    })
}

fn reference_rating(state: &RatingState, reference: Entity) -> Result<f64, DataError> {
    state.get(reference).ok_or(match reference {
        Entity::Confed(c) => DataError::MissingRating(c),
        Entity::Seeded => DataError::Config(alloc::string::String::from(
            "seeded entity is not rated",
        )),
    })
}

/// Uncapped quotas using confederation `k` as the ratio reference.
pub fn raw_quotas_with_reference(
    state: &RatingState,
    cfg: &ScenarioConfig,
    k: Confederation,
) -> Result<BTreeMap<Confederation, f64>, DataError> {
    cfg.validate()?;
    let r_k = state.confed(k).ok_or(DataError::MissingRating(k))?;
    let mut a = Vec::with_capacity(5);
    for c in Confederation::RATED {
        let r = state.confed(c).ok_or(DataError::MissingRating(c))?;
        a.push((c, pairwise_ratio(r, r_k)));
    }
    let sum: f64 = a.iter().map(|(_, x)| x).sum();
    let pool = cfg.pool();
    Ok(a.into_iter()
        .map(|(c, x)| (c, x / sum * pool + cfg.seeding.seed_count(c) as f64))
        .collect())
}

/// Uncapped quotas. The choice of reference does not change the result.
pub fn raw_quotas(
    state: &RatingState,
    cfg: &ScenarioConfig,
) -> Result<BTreeMap<Confederation, f64>, DataError> {
    raw_quotas_with_reference(state, cfg, Confederation::Afc)
}

/// Enforce caps, moving any excess to the uncapped confederations in
/// proportion to their non-seed shares.
pub fn apply_caps(
    quotas: &BTreeMap<Confederation, f64>,
    cfg: &ScenarioConfig,
) -> Result<(BTreeMap<Confederation, f64>, Vec<Confederation>), DataError> {
    let mut q = quotas.clone();
    let mut capped: Vec<Confederation> = Vec::new();
    for (&c, &cap) in &cfg.caps {
        if cap < cfg.seeding.seed_count(c) as f64 {
            return Err(DataError::InfeasibleCaps(format!(
                "{c} has more seeds than its cap of {cap}"
            )));
        }
    }
    loop {
        let violator = q
            .iter()
            .filter(|(c, _)| !capped.contains(c))
            .filter_map(|(&c, &x)| cfg.caps.get(&c).map(|&cap| (c, x - cap)))
            .filter(|&(_, over)| over > 0.0)
            .max_by(|a, b| a.1.total_cmp(&b.1));
        let Some((c, excess)) = violator else { break };
        let cap = cfg.caps[&c];
        q.insert(c, cap);
        capped.push(c);
        if !cfg.redistribute_cap_excess {
            continue;
        }
        let shares: Vec<(Confederation, f64)> = q
            .iter()
            .filter(|(c, _)| !capped.contains(c))
            .map(|(&c, &x)| (c, x - cfg.seeding.seed_count(c) as f64))
            .collect();
        let total: f64 = shares.iter().map(|(_, s)| s).sum();
        if !(total > 0.0) {
            return Err(DataError::InfeasibleCaps(format!(
                "no uncapped confederation can absorb the excess of {c}"
            )));
        }
        for (d, s) in shares {
            *q.get_mut(&d).expect("share from quota map") += excess * s / total;
        }
    }
    capped.sort();
    Ok((q, capped))
}

/// Full allocation for an end-of-sample rating state.
pub fn allocate(state: &RatingState, cfg: &ScenarioConfig) -> Result<AllocationResult, DataError> {
    let raw = raw_quotas(state, cfg)?;
    let (quotas, capped) = apply_caps(&raw, cfg)?;
    let ratios = ratios(state, DEFAULT_REFERENCE)?;
    Ok(AllocationResult {
        quotas,
        ofc: cfg.ofc_quota,
        capped,
        reference: ratios.reference,
        ratios: ratios.values,
    })
}
