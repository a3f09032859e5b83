#![allow(dead_code)]

use confed_elo::{Confederation, Match, Outcome, Stage};
use proptest::prelude::*;

pub const TEAMS: [(&str, Confederation); 14] = [
    ("Argentina", Confederation::Conmebol),
    ("Uruguay", Confederation::Conmebol),
    ("Chile", Confederation::Conmebol),
    ("Spain", Confederation::Uefa),
    ("Wales", Confederation::Uefa),
    ("Sweden", Confederation::Uefa),
    ("Mexico", Confederation::Concacaf),
    ("Haiti", Confederation::Concacaf),
    ("Iran", Confederation::Afc),
    ("Japan", Confederation::Afc),
    ("Ghana", Confederation::Caf),
    ("Egypt", Confederation::Caf),
    ("New Zealand", Confederation::Ofc),
    ("Brazil", Confederation::Conmebol),
];

pub fn stage() -> impl Strategy<Value = Stage> {
    prop::sample::select(Stage::ALL.to_vec())
}

pub fn outcome_for(stage: Stage) -> BoxedStrategy<Outcome> {
    let mut v = vec![Outcome::Win, Outcome::Draw, Outcome::Loss];
    if stage.is_knockout() || stage == Stage::PlayoffLeg {
        v.extend([Outcome::ShootoutWin, Outcome::ShootoutLoss]);
    }
    prop::sample::select(v).boxed()
}

/// A valid match without an order key.
pub fn game() -> impl Strategy<Value = Match> {
    (stage(), 0usize..TEAMS.len(), 1usize..TEAMS.len(), 1u8..=3, any::<bool>(), 0usize..18)
        .prop_flat_map(|(st, a, off, round, last, ed)| {
            let b = (a + off) % TEAMS.len();
            let edition = if st == Stage::Group2 {
                [1974u16, 1978, 1982][ed % 3]
            } else {
                1954 + 4 * ed as u16
            };
            outcome_for(st).prop_map(move |o| Match {
                edition,
                date_order: 0,
                stage: st,
                round_index: round,
                team_a: TEAMS[a].0.to_string(),
                team_b: TEAMS[b].0.to_string(),
                confed_a: TEAMS[a].1,
                confed_b: TEAMS[b].1,
                score_a: 0,
                score_b: 0,
                outcome: o,
                last_group_round: last && st == Stage::Group1 && round == 3,
            })
        })
}

/// Matches sorted by edition with unique order keys.
pub fn history(max: usize) -> impl Strategy<Value = Vec<Match>> {
    prop::collection::vec(game(), 0..max).prop_map(|mut v| {
        v.sort_by_key(|m| m.edition);
        for (i, m) in v.iter_mut().enumerate() {
            m.date_order = i as u32 + 1;
        }
        v
    })
}
