use confed_elo::scenario::{run_point, SweepError, SweepGrid, SweepResult};
use confed_elo::{Match, ScenarioConfig};
use rayon::prelude::*;

/// Same as `confed_elo::scenario::run_sweep`, with grid points on the rayon pool.
pub fn run_sweep_par(matches: &[Match], grid: &SweepGrid, base: &ScenarioConfig) -> Result<SweepResult, SweepError> {
    grid.points(base)
        .into_par_iter()
        .map(|(key, cfg)| run_point(matches, key, &cfg).map(|a| (key, a)))
        .collect()
}
