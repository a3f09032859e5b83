mod common;

use confed_elo::filter::{apply_filters, keep, tabulate};
use confed_elo::{Confederation, ScenarioConfig, SeedingScheme};
use proptest::prelude::*;

fn cfg() -> impl Strategy<Value = ScenarioConfig> {
    (0usize..18, any::<bool>()).prop_map(|(e, last)| ScenarioConfig {
        end_edition: 1954 + 4 * e as u16,
        include_last_group_round: last,
        ..ScenarioConfig::default()
    })
}

proptest! {
    #[test]
    fn idempotent(games in common::history(80), c in cfg()) {
        let once = apply_filters(&games, &c);
        prop_assert_eq!(apply_filters(&once, &c), once);
    }

    #[test]
    fn ordered_sublist(games in common::history(80), c in cfg()) {
        let kept = apply_filters(&games, &c);
        let mut it = games.iter();
        for m in &kept {
            prop_assert!(it.any(|g| g == m));
            prop_assert!(m.edition <= c.end_edition);
            prop_assert!(m.confed_a != Confederation::Ofc && m.confed_b != Confederation::Ofc);
            prop_assert!(c.include_last_group_round || !m.last_group_round);
        }
        prop_assert_eq!(kept.len(), games.iter().filter(|m| keep(m, &c)).count());
    }

    #[test]
    fn totals_add_up(games in common::history(80), s in prop::sample::select(vec![SeedingScheme::s0(), SeedingScheme::s1(), SeedingScheme::s2()])) {
        let kept = apply_filters(&games, &ScenarioConfig::default());
        let t = tabulate(&kept, &s);
        let wins: u32 = t.tallies.values().map(|x| x.wins).sum();
        prop_assert_eq!(wins, t.decisive);
        prop_assert_eq!(t.decisive + t.draws, t.matches);
        prop_assert_eq!(t.matches as usize, kept.len());
        let cells: u32 = t.pair_counts.values().flat_map(|m| m.values()).sum();
        prop_assert_eq!(cells, t.inter_confed_total());
    }
}
