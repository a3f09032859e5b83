use confed_elo::engine::entity_of;
use confed_elo::filter::{apply_filters, check_excluded_playoffs, tabulate};
use confed_elo::scenario::{diff_sweeps, run_pipeline, run_sweep, SweepGrid, SweepKey};
use confed_elo::{Confederation, Entity, Policy, ScenarioConfig, SeedingName, SeedingScheme, Stage};
use confed_elo_cli::ingest::{bundled, parse_matches, write_matches};
use confed_elo_cli::parallel::run_sweep_par;

#[test]
fn round_trip_is_exact() {
    let m = bundled();
    let mut buf = Vec::new();
    write_matches(&mut buf, &m).unwrap();
    assert_eq!(parse_matches(buf.as_slice()).unwrap(), m);
}

#[test]
fn invariants_hold() {
    let m = bundled();
    assert!(check_excluded_playoffs(&m).is_ok());
    for x in &m {
        x.validate().unwrap();
        if x.shootout() {
            assert_eq!(x.score_a, x.score_b, "{x:?}");
        } else if x.stage != Stage::PlayoffLeg {
            assert_eq!(x.w_a() == 1.0, x.score_a > x.score_b, "{x:?}");
            assert_eq!(x.w_a() == 0.5, x.score_a == x.score_b, "{x:?}");
        }
    }
}

#[test]
fn end_1954_leaves_eleven_pair_matches() {
    let m = bundled();
    let cfg = ScenarioConfig { end_edition: 1954, ..ScenarioConfig::default() };
    let kept = apply_filters(&m, &cfg);
    assert!(kept.iter().all(|x| x.edition == 1954));
    assert_eq!(tabulate(&kept, &SeedingScheme::s0()).grand_total(), 11);
}

#[test]
fn israel_1990_playoff_dropped() {
    let m = bundled();
    let legs: Vec<_> = m.iter().filter(|x| x.edition == 1990 && x.stage == Stage::PlayoffLeg).collect();
    assert_eq!(legs.len(), 2);
    assert!(legs.iter().all(|x| x.team_a == "Israel" || x.team_b == "Israel"));
    let kept = apply_filters(&m, &ScenarioConfig::default());
    assert!(!kept.iter().any(|x| x.edition == 1990 && x.stage == Stage::PlayoffLeg));
}

#[test]
fn second_group_stage_never_flagged() {
    let m = bundled();
    assert!(m.iter().filter(|x| x.stage == Stage::Group2).all(|x| !x.last_group_round));
    let g2 = m.iter().filter(|x| x.stage == Stage::Group2).count();
    let kept = apply_filters(&m, &ScenarioConfig::default());
    assert_eq!(kept.iter().filter(|x| x.stage == Stage::Group2).count(), g2);
}

#[test]
fn seeding_mexico_shrinks_concacaf() {
    let kept = apply_filters(&bundled(), &ScenarioConfig::default());
    let concacaf = Some(Entity::Confed(Confederation::Concacaf));
    let count = |s: &SeedingScheme| {
        kept.iter()
            .filter(|x| {
                entity_of(&x.team_a, x.confed_a, s) == concacaf || entity_of(&x.team_b, x.confed_b, s) == concacaf
            })
            .count()
    };
    assert!(count(&SeedingScheme::s2()) < count(&SeedingScheme::s1()));
    let row = |s: &SeedingScheme| {
        let t = tabulate(&kept, s);
        let c = concacaf.unwrap();
        t.tallies
            .iter()
            .filter(|((r, _), _)| *r == c)
            .map(|(_, v)| v.wins + v.draws)
            .sum::<u32>()
    };
    assert!(row(&SeedingScheme::s2()) < row(&SeedingScheme::s1()));
}

#[test]
fn parallel_matches_sequential() {
    let m = bundled();
    let grid = SweepGrid::figures();
    let base = ScenarioConfig::default();
    assert_eq!(run_sweep_par(&m, &grid, &base).unwrap(), run_sweep(&m, &grid, &base).unwrap());
}

#[test]
fn singleton_grid_is_pipeline() {
    let m = bundled();
    let base = ScenarioConfig::default();
    let grid = SweepGrid {
        end_editions: vec![2006],
        policies: vec![Policy::Stage],
        seedings: vec![SeedingScheme::s1()],
        last_round: vec![false],
    };
    let r = run_sweep(&m, &grid, &base).unwrap();
    let cfg = ScenarioConfig { end_edition: 2006, policy: Policy::Stage, seeding: SeedingScheme::s1(), ..base };
    assert_eq!(r[&SweepKey::new(2006, Policy::Stage, SeedingName::S1, false)], run_pipeline(&m, &cfg).unwrap().1);
}

#[test]
fn self_diff_is_zero() {
    let r = run_sweep_par(&bundled(), &SweepGrid::last_round_effect(2022), &ScenarioConfig::default()).unwrap();
    let (a, _) = confed_elo::scenario::split_last_round(&r);
    for m in diff_sweeps(&a, &a).unwrap().values() {
        assert!(m.values().all(|&d| d == 0.0));
    }
}

#[test]
fn conmebol_pinned_at_cap() {
    let m = bundled();
    let base = ScenarioConfig::default();
    let r = run_sweep_par(&m, &SweepGrid::figures(), &base).unwrap();
    for (k, a) in &r {
        let cfg = ScenarioConfig {
            end_edition: k.end_edition,
            policy: k.policy,
            seeding: SeedingScheme::named(k.seeding).unwrap(),
            ..base.clone()
        };
        let (t, _) = run_pipeline(&m, &cfg).unwrap();
        let raw = confed_elo::allocator::raw_quotas(t.last(), &cfg).unwrap();
        if raw[&Confederation::Conmebol] > 8.0 {
            assert_eq!(a.quota(Confederation::Conmebol), 8.0, "{k}");
        }
        assert!((a.total() - 48.0).abs() < 1e-9);
    }
}

#[test]
fn checked_in_reconciliation_is_current() {
    use confed_elo_cli::report::{reconcile, reconciliation_markdown, Baseline};
    let b = Baseline::new(&bundled());
    let expected = reconciliation_markdown(&b, &reconcile(&b));
    let on_disk = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/RECONCILIATION.md")).unwrap();
    assert_eq!(on_disk, expected, "regenerate with `confed-elo validate --out DIR`");
}
