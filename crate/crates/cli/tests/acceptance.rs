//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::collections::BTreeMap;
use std::time::Instant;

use confed_elo::allocator::{allocate, pairwise_ratio, raw_quotas, raw_quotas_with_reference};
use confed_elo::engine::{importance, match_delta, partition, run_from, run_policy};
use confed_elo::filter::apply_filters;
use confed_elo::scenario::{diff_sweeps, split_last_round, SweepGrid, SweepKey};
use confed_elo::{Confederation, Entity, Match, Outcome, Policy, RatingState, ScenarioConfig, SeedingName, SeedingScheme, Stage};
use confed_elo_cli::ingest::bundled;
use confed_elo_cli::parallel::run_sweep_par;
use confed_elo_cli::report::{reconcile, Baseline};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use Confederation::*;

type Verdict = Result<String, String>;

fn check(ok: bool, detail: String) -> Verdict {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn close(x: f64, target: f64, tol: f64) -> bool {
    (x - target).abs() <= tol
}

fn duel(order: u32, round: u8, favourite_wins: bool) -> Match {
    Match {
        edition: 2002,
        date_order: order,
        stage: Stage::Group1,
        round_index: round,
        team_a: "Spain".into(),
        team_b: "Ghana".into(),
        confed_a: Uefa,
        confed_b: Caf,
        score_a: 0,
        score_b: 0,
        outcome: if favourite_wins { Outcome::Win } else { Outcome::Loss },
        last_group_round: false,
    }
}

fn schedule_order() -> Verdict {
    let cfg = ScenarioConfig { seeding: SeedingScheme::s0(), ..ScenarioConfig::default() };
    let fav = Entity::Confed(Uefa);
    let mut start = RatingState::from_confeds([1500.0; 5]);
    start.set(fav, 1550.0);
    let steps = |games: &[Match]| -> Vec<f64> {
        let t = run_from(start.clone(), games, &cfg).unwrap();
        t.entries.windows(2).map(|w| w[1].1.get(fav).unwrap() - w[0].1.get(fav).unwrap()).collect()
    };
    let under_first = steps(&[duel(1, 1, false), duel(2, 2, true)]);
    let fav_first = steps(&[duel(1, 1, true), duel(2, 2, false)]);
    let together = steps(&[duel(1, 1, false), duel(2, 1, true)]);
    let values = [
        (-under_first[0], 27.39),
        (under_first[1], 25.23),
        (fav_first[0], 22.61),
        (-fav_first[1], 29.52),
        (-(under_first[0] + under_first[1]), 2.16),
        (-(fav_first[0] + fav_first[1]), 6.91),
        (-together[0], 4.78),
    ];
    let ok = values.iter().all(|&(x, t)| close(x, t, 0.01));
    let shown: Vec<String> = values.iter().map(|(x, _)| format!("{x:.2}")).collect();
    check(ok, shown.join(" / "))
}

fn anchor_allocation() -> Verdict {
    let state = RatingState::from_confeds([1576.56, 1734.71, 1574.12, 1590.36, 1806.89]);
    let a = allocate(&state, &ScenarioConfig::default()).unwrap();
    let r = |c| a.ratios[&Entity::Confed(c)];
    let ratios = [(r(Caf), 1.83), (r(Concacaf), 0.99), (r(Conmebol), 1.05), (r(Uefa), 2.42)];
    let ok = ratios.iter().all(|&(x, t)| close(x, t, 0.005))
        && close(a.quota(Afc), 5.3, 0.02)
        && close(a.quota(Uefa), 17.82, 0.02);
    check(
        ok,
        format!(
            "ratios {:.3} {:.3} {:.3} {:.3}, AFC {:.3}, UEFA {:.3}",
            ratios[0].0, ratios[1].0, ratios[2].0, ratios[3].0, a.quota(Afc), a.quota(Uefa)
        ),
    )
}

fn random_state(rng: &mut ChaCha8Rng) -> [f64; 5] {
    std::array::from_fn(|_| rng.gen_range(1200.0..2200.0))
}

fn transitivity() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst: f64 = 0.0;
    for _ in 0..20_000 {
        let (i, j, k) = (rng.gen_range(1000.0..2500.0), rng.gen_range(1000.0..2500.0), rng.gen_range(1000.0..2500.0));
        let a_ik = pairwise_ratio(i, k);
        worst = worst.max((a_ik - pairwise_ratio(i, j) * pairwise_ratio(j, k)).abs() / a_ik);
    }
    let mut ref_worst: f64 = 0.0;
    for _ in 0..2_000 {
        let st = RatingState::from_confeds(random_state(&mut rng));
        let cfg = ScenarioConfig::default();
        let base = raw_quotas_with_reference(&st, &cfg, Afc).unwrap();
        for k in Confederation::RATED {
            let q = raw_quotas_with_reference(&st, &cfg, k).unwrap();
            for c in Confederation::RATED {
                ref_worst = ref_worst.max((q[&c] - base[&c]).abs());
            }
        }
    }
    check(
        worst <= 1e-12 && ref_worst <= 1e-9,
        format!("20000 triples, max relative error {worst:.1e}; reference spread {ref_worst:.1e}"),
    )
}

fn conservation() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let matches = bundled();
    let (mut worst, mut min_ko, mut n) = (0.0f64, f64::INFINITY, 0);
    for _ in 0..20 {
        for m in &matches {
            if m.stage == Stage::Group2 && !matches!(m.edition, 1974 | 1978 | 1982) {
                continue;
            }
            let (ra, rb) = (rng.gen_range(1200.0..2200.0), rng.gen_range(1200.0..2200.0));
            let imp = importance(m).unwrap();
            let ko = m.stage.is_knockout();
            let s = match_delta(ra, rb, m.w_a(), imp, ko) + match_delta(rb, ra, m.w_b(), imp, ko);
            if ko || m.shootout() {
                min_ko = min_ko.min(s);
            } else {
                worst = worst.max(s.abs());
            }
            n += 1;
        }
    }
    check(
        worst <= 1e-12 && min_ko >= 0.0,
        format!("{n} match evaluations, max |sum| {worst:.1e}, min knockout sum {min_ko:.3}"),
    )
}

fn budget() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut worst, mut binding) = (0.0f64, 0);
    for i in 0..5_000 {
        let mut cfg = ScenarioConfig {
            seeding: [SeedingScheme::s0(), SeedingScheme::s1(), SeedingScheme::s2()][i % 3].clone(),
            ..ScenarioConfig::default()
        };
        if i % 2 == 0 {
            cfg.caps.insert(Conmebol, rng.gen_range(2.5..6.0));
            cfg.caps.insert(Uefa, rng.gen_range(12.0..20.0));
        }
        let st = RatingState::from_confeds(random_state(&mut rng));
        let a = allocate(&st, &cfg).unwrap();
        if !a.capped.is_empty() {
            binding += 1;
        }
        worst = worst.max((a.total() - 48.0).abs());
        let raw = raw_quotas(&st, &cfg).unwrap();
        worst = worst.max((raw.values().sum::<f64>() + 4.0 / 3.0 - 48.0).abs());
    }
    check(worst <= 1e-9, format!("5000 states, {binding} with binding caps, max error {worst:.1e}"))
}

fn reconciliation() -> Verdict {
    let matches = bundled();
    let b = Baseline::new(&matches);
    let rec = reconcile(&b);
    let conm_uefa = b.s0.pair_total(confed_elo::filter::ConfedPair::new(Conmebol, Uefa));
    let t = b.s0.tally(Entity::Confed(Conmebol), Entity::Confed(Uefa));
    let report = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/RECONCILIATION.md")).unwrap_or_default();
    let unlisted: Vec<String> = rec
        .diffs
        .iter()
        .filter(|d| !report.contains(&format!("| {} | {} | {} | {} |", d.table, d.cell, d.ours, d.reference)))
        .map(|d| format!("{} {}", d.table, d.cell))
        .collect();
    let ok = b.s0.grand_total() == 464
        && conm_uefa == 174
        && rec.max_abs_delta() <= 2
        && unlisted.is_empty();
    check(
        ok,
        format!(
            "total {}, CONM-UEFA {conm_uefa}, CONMEBOL vs UEFA {} ({}), overall {} ({}), {} of {} cells differ (max {}), {} unlisted",
            b.s0.grand_total(),
            t.wins,
            t.draws,
            b.s0.decisive,
            b.s0.draws,
            rec.diffs.len(),
            rec.checked,
            rec.max_abs_delta(),
            unlisted.len()
        ),
    )
}

const PUBLISHED_2022: [((Policy, SeedingName), [f64; 5]); 9] = [
    ((Policy::Round, SeedingName::S0), [4.77, 7.60, 6.21, 8.0, 20.09]),
    ((Policy::Stage, SeedingName::S0), [5.30, 7.52, 6.65, 8.0, 19.19]),
    ((Policy::FourYear, SeedingName::S0), [5.89, 8.39, 8.07, 8.0, 16.31]),
    ((Policy::Round, SeedingName::S1), [3.82, 6.40, 5.26, 8.0, 23.19]),
    ((Policy::Stage, SeedingName::S1), [4.10, 6.16, 5.65, 8.0, 22.75]),
    ((Policy::FourYear, SeedingName::S1), [4.54, 6.65, 6.68, 8.0, 20.80]),
    ((Policy::Round, SeedingName::S2), [4.48, 7.43, 5.33, 8.0, 21.43]),
    ((Policy::Stage, SeedingName::S2), [4.89, 7.13, 5.36, 8.0, 21.29]),
    ((Policy::FourYear, SeedingName::S2), [5.34, 7.60, 5.50, 8.0, 20.23]),
];

fn calibration() -> Verdict {
    let matches = bundled();
    let sweep = run_sweep_par(&matches, &SweepGrid::last_round_effect(2022), &ScenarioConfig::default()).unwrap();
    let (base, with_last) = split_last_round(&sweep);
    let a = &base[&SweepKey::new(2022, Policy::Round, SeedingName::S2, false)];
    let q = |c| a.quota(c);
    let shape = q(Conmebol) == 8.0
        && Confederation::RATED.iter().all(|&c| c == Uefa || q(Uefa) > q(c))
        && q(Caf) > q(Afc)
        && q(Concacaf) > q(Afc);
    let target = PUBLISHED_2022[6].1;
    let dev = Confederation::RATED
        .iter()
        .zip(target)
        .map(|(&c, t)| (q(c) - t).abs())
        .fold(0.0, f64::max);
    let mut all_dev: f64 = 0.0;
    for ((p, s), t) in PUBLISHED_2022 {
        let r = &base[&SweepKey::new(2022, p, s, false)];
        for (&c, x) in Confederation::RATED.iter().zip(t) {
            all_dev = all_dev.max((r.quota(c) - x).abs());
        }
    }
    let diffs = diff_sweeps(&base, &with_last).unwrap();
    let signs = diffs.values().filter(|d| d[&Uefa] < 0.0 && d[&Afc] > 0.0 && d[&Caf] > 0.0).count();
    let ok = shape && dev <= 0.75 && signs == 9;
    check(
        ok,
        format!(
            "AFC {:.2} CAF {:.2} CONCACAF {:.2} CONMEBOL {:.2} UEFA {:.2}; max deviation {dev:.2} (all nine methods {all_dev:.2}); sign pattern in {signs}/9",
            q(Afc), q(Caf), q(Concacaf), q(Conmebol), q(Uefa)
        ),
    )
}

fn permutation() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let matches = bundled();
    let mut worst: f64 = 0.0;
    for policy in Policy::ALL {
        let cfg = ScenarioConfig { policy, ..ScenarioConfig::default() };
        let sample = apply_filters(&matches, &cfg);
        let reference = run_policy(&sample, &cfg).unwrap();
        for _ in 0..10 {
            let mut shuffled = sample.clone();
            let mut orders: BTreeMap<_, Vec<usize>> = BTreeMap::new();
            for b in partition(&sample, policy) {
                let idx: Vec<usize> = b
                    .matches
                    .iter()
                    .map(|m| sample.iter().position(|x| std::ptr::eq(x, *m)).unwrap())
                    .collect();
                orders.insert(b.key, idx);
            }
            for idx in orders.values() {
                let mut keys: Vec<u32> = idx.iter().map(|&i| sample[i].date_order).collect();
                keys.shuffle(&mut rng);
                for (&i, k) in idx.iter().zip(keys) {
                    shuffled[i].date_order = k;
                }
            }
            shuffled.shuffle(&mut rng);
            let other = run_policy(&shuffled, &cfg).unwrap();
            for ((_, a), (_, b)) in reference.entries.iter().zip(&other.entries) {
                for (e, r) in &a.ratings {
                    worst = worst.max((r - b.get(*e).unwrap()).abs());
                }
            }
        }
    }
    check(worst <= 1e-9, format!("30 reorderings of the full history, max drift {worst:.1e}"))
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 8] = [
        ("schedule-order arithmetic", schedule_order),
        ("worked allocation anchor", anchor_allocation),
        ("ratio transitivity", transitivity),
        ("conservation and inflation", conservation),
        ("slot budget", budget),
        ("dataset reconciliation", reconciliation),
        ("end-to-end calibration", calibration),
        ("within-batch permutation", permutation),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = f();
        let ms = t.elapsed().as_millis();
        let (tag, detail) = match &r {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("criterion {} {tag} {name} ({ms} ms): {detail}", i + 1);
        failed += r.is_err() as i32;
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
