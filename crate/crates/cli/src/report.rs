//! Human-readable tables and the reconciliation against published counts.

use std::fmt::Write as _;

use confed_elo::filter::{apply_filters, tabulate, ConfedPair, DatasetSummary};
use confed_elo::{AllocationResult, Confederation, Entity, Match, RatingState, ScenarioConfig, SeedingScheme};

use crate::reference as r;

/// Summaries of the baseline sample (through 2022, last group round
/// excluded) under the three standard seedings.
pub struct Baseline {
    pub s0: DatasetSummary,
    pub s1: DatasetSummary,
    pub s2: DatasetSummary,
}

impl Baseline {
    pub fn new(matches: &[Match]) -> Baseline {
        let cfg = ScenarioConfig {
            end_edition: confed_elo::domain::LAST_EDITION,
            include_last_group_round: false,
            ..ScenarioConfig::default()
        };
        let sample = apply_filters(matches, &cfg);
        Baseline {
            s0: tabulate(&sample, &SeedingScheme::s0()),
            s1: tabulate(&sample, &SeedingScheme::s1()),
            s2: tabulate(&sample, &SeedingScheme::s2()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellDiff {
    pub table: &'static str,
    pub cell: String,
    pub ours: u32,
    pub reference: u32,
}

impl CellDiff {
    pub fn delta(&self) -> i64 {
        self.ours as i64 - self.reference as i64
    }
}

#[derive(Clone, Debug, Default)]
pub struct Reconciliation {
    pub checked: usize,
    pub diffs: Vec<CellDiff>,
}

impl Reconciliation {
    fn check(&mut self, table: &'static str, cell: String, ours: u32, reference: u32) {
        self.checked += 1;
        if ours != reference {
            self.diffs.push(CellDiff {
                table,
                cell,
                ours,
                reference,
            });
        }
    }

    pub fn max_abs_delta(&self) -> u64 {
        self.diffs.iter().map(|d| d.delta().unsigned_abs()).max().unwrap_or(0)
    }

    pub fn diffs_in<'a>(&'a self, table: &'a str) -> impl Iterator<Item = &'a CellDiff> {
        self.diffs.iter().filter(move |d| d.table == table)
    }
}

pub fn pair_label(p: ConfedPair) -> String {
    format!("{}-{}", p.0.short(), p.1.short())
}

fn tally_tables(b: &Baseline) -> [(&'static str, &DatasetSummary, Vec<Vec<(u32, u32)>>); 3] {
    [
        ("results S0", &b.s0, r::TALLIES_S0.iter().map(|row| row.to_vec()).collect()),
        ("results S1", &b.s1, r::TALLIES_S1.iter().map(|row| row.to_vec()).collect()),
        ("results S2", &b.s2, r::TALLIES_S2.iter().map(|row| row.to_vec()).collect()),
    ]
}

pub fn reconcile(b: &Baseline) -> Reconciliation {
    let mut rec = Reconciliation::default();
    let s = &b.s0;
    for ((x, y), counts) in r::PAIR_COUNTS {
        let p = ConfedPair::new(x, y);
        for (i, &ed) in r::EDITIONS.iter().enumerate() {
            let ours = s.pair_counts.get(&p).and_then(|m| m.get(&ed)).copied().unwrap_or(0);
            rec.check("pairs", format!("{} {ed}", pair_label(p)), ours, counts[i]);
        }
        rec.check("pairs", format!("{} total", pair_label(p)), s.pair_total(p), counts.iter().sum());
    }
    for (i, &ed) in r::EDITIONS.iter().enumerate() {
        let ties = s.playoff_ties.get(&ed).copied().unwrap_or(0);
        let single = s.playoff_single.get(&ed).copied().unwrap_or(0);
        rec.check("pairs", format!("play-off ties {ed}"), ties, r::PLAYOFF_TIES[i]);
        rec.check("pairs", format!("single-leg play-offs {ed}"), single, r::PLAYOFF_SINGLE[i]);
        let reference: u32 = r::PAIR_COUNTS.iter().map(|(_, c)| c[i]).sum::<u32>() + r::PLAYOFF_TIES[i] + r::PLAYOFF_SINGLE[i];
        rec.check("pairs", format!("column {ed}"), s.edition_total(ed), reference);
    }
    rec.check("pairs", "grand total".into(), s.grand_total(), r::GRAND_TOTAL);

    for (table, summary, cells) in tally_tables(b) {
        for (i, row) in cells.iter().enumerate() {
            for (j, &(w, d)) in row.iter().enumerate() {
                let (re, ce) = (r::TALLY_ORDER[i], r::TALLY_ORDER[j]);
                let t = summary.tally(re, ce);
                rec.check(table, format!("{re} vs {ce} wins"), t.wins, w);
                rec.check(table, format!("{re} vs {ce} draws"), t.draws, d);
            }
        }
        rec.check(table, "decisive total".into(), summary.decisive, r::TALLY_TOTAL.0);
        rec.check(table, "drawn total".into(), summary.draws, r::TALLY_TOTAL.1);
    }
    rec
}

/// Matches per confederation pair and edition.
pub fn pair_table(s: &DatasetSummary) -> String {
    let mut out = String::new();
    let _ = write!(out, "{:<20}", "");
    for ed in r::EDITIONS {
        let _ = write!(out, "  {:02}", ed % 100);
    }
    let _ = writeln!(out, "{:>6}", "total");
    for ((x, y), _) in r::PAIR_COUNTS {
        let p = ConfedPair::new(x, y);
        let _ = write!(out, "{:<20}", pair_label(p));
        for ed in r::EDITIONS {
            let n = s.pair_counts.get(&p).and_then(|m| m.get(&ed)).copied().unwrap_or(0);
            let _ = write!(out, "{n:>4}");
        }
        let _ = writeln!(out, "{:>6}", s.pair_total(p));
    }
    for (label, map) in [("Play-offs (1 leg)", &s.playoff_single), ("Play-offs (2 legs)", &s.playoff_ties)] {
        let _ = write!(out, "{label:<20}");
        for ed in r::EDITIONS {
            let _ = write!(out, "{:>4}", map.get(&ed).copied().unwrap_or(0));
        }
        let _ = writeln!(out, "{:>6}", map.values().sum::<u32>());
    }
    let _ = write!(out, "{:<20}", "Total");
    for ed in r::EDITIONS {
        let _ = write!(out, "{:>4}", s.edition_total(ed));
    }
    let _ = writeln!(out, "{:>6}", s.grand_total());
    out
}

/// Wins (draws) of each row entity against each column entity.
pub fn tally_table(s: &DatasetSummary, with_seeded: bool) -> String {
    let order: &[Entity] = if with_seeded { &r::TALLY_ORDER } else { &r::TALLY_ORDER[..5] };
    let mut out = format!("{:<10}", "");
    for e in order {
        let _ = write!(out, "{:>10}", e.to_string());
    }
    out.push('\n');
    for &re in order {
        let _ = write!(out, "{:<10}", re.to_string());
        for &ce in order {
            let t = s.tally(re, ce);
            let _ = write!(out, "{:>10}", format!("{} ({})", t.wins, t.draws));
        }
        out.push('\n');
    }
    let _ = writeln!(out, "total {} ({})", s.decisive, s.draws);
    out
}

pub fn reconciliation_text(rec: &Reconciliation) -> String {
    let mut out = format!(
        "{} cells checked, {} differ, largest difference {}\n",
        rec.checked,
        rec.diffs.len(),
        rec.max_abs_delta()
    );
    for d in &rec.diffs {
        let _ = writeln!(
            out,
            "  {:<11} {:<34} dataset {:>4}  reference {:>4}  ({:+})",
            d.table,
            d.cell,
            d.ours,
            d.reference,
            d.delta()
        );
    }
    out
}

/// Markdown listing of every cell where the dataset differs from the published counts.
pub fn reconciliation_markdown(b: &Baseline, rec: &Reconciliation) -> String {
    let mut out = String::from("# Reconciliation\n\n");
    out += "Counts from the bundled dataset compared with the published tabulations, \
for the baseline sample: editions through 2022, last group round excluded, \
matches against OFC dropped.\n\n";
    out += "Play-off rows count ties, so a two-legged play-off is one entry. \
The legs are still rated as separate matches. \
Result tallies count shootout wins as wins.\n\n";
    let _ = writeln!(
        out,
        "{} cells checked, {} differ, largest difference {}. \
Baseline sample: {} matches, {} of them play-off legs. \
Result totals: {} decisive and {} drawn.\n",
        rec.checked,
        rec.diffs.len(),
        rec.max_abs_delta(),
        b.s0.matches,
        b.s0.playoff_legs,
        b.s0.decisive,
        b.s0.draws
    );
    out += "The pair counts agree cell for cell. The tally differences are within two matches \
per cell. The individual results behind them could not be pinned down, \
so they are listed here rather than patched into the data.\n\n";
    out += "| table | cell | dataset | published |\n|---|---|---|---|\n";
    for d in &rec.diffs {
        let _ = writeln!(out, "| {} | {} | {} | {} |", d.table, d.cell, d.ours, d.reference);
    }
    out
}

pub fn validate_text(b: &Baseline, rec: &Reconciliation, parsed: usize) -> String {
    let mut out = format!(
        "{parsed} matches parsed, {} in the baseline sample ({} play-off legs)\n\n",
        b.s0.matches, b.s0.playoff_legs
    );
    out += "Matches by confederation pair\n";
    out += &pair_table(&b.s0);
    for (name, s, seeded) in [("S0", &b.s0, false), ("S1", &b.s1, true), ("S2", &b.s2, true)] {
        let _ = write!(out, "\nResults under {name}\n");
        out += &tally_table(s, seeded);
    }
    out += "\nReconciliation\n";
    out += &reconciliation_text(rec);
    out
}

pub fn ratings_text(state: &RatingState) -> String {
    let mut out = String::new();
    for (e, r) in &state.ratings {
        let _ = writeln!(out, "{:<10}{:>10.2}", e.to_string(), r);
    }
    out
}

pub fn allocation_text(a: &AllocationResult) -> String {
    let mut out = String::new();
    for c in Confederation::ALL {
        let _ = writeln!(
            out,
            "{:<10}{:>8.2}{}",
            c.to_string(),
            a.quota(c),
            if a.is_capped(c) { "  capped" } else { "" }
        );
    }
    let _ = writeln!(out, "{:<10}{:>8.2}", "total", a.total());
    out
}
