//! CSV and JSON exports. Numbers carry six decimals.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Read;

use confed_elo::engine::{BatchLabel, RatingTimeline};
use confed_elo::scenario::{SweepKey, SweepResult};
use confed_elo::{AllocationResult, Confederation, Entity, Policy, SeedingName};
use serde_json::{json, Map, Value};

use crate::error::AppError;

pub fn fmt6(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6 + 0.0
}

pub fn timeline_csv(t: &RatingTimeline) -> String {
    let mut out = String::from("edition,batch_key,entity,rating\n");
    for (label, state) in &t.entries {
        let (edition, key) = match label {
            BatchLabel::Initial => (String::new(), "initial".to_string()),
            BatchLabel::After(k) => (k.edition.to_string(), k.kind.to_string()),
        };
        for (e, r) in &state.ratings {
            let _ = writeln!(out, "{edition},{key},{e},{}", fmt6(*r));
        }
    }
    out
}

pub fn allocation_json(a: &AllocationResult) -> Value {
    let quotas: Map<String, Value> = a.quotas.iter().map(|(c, q)| (c.to_string(), json!(round6(*q)))).collect();
    let ratios: Map<String, Value> = a.ratios.iter().map(|(e, r)| (e.to_string(), json!(round6(*r)))).collect();
    json!({
        "quotas": quotas,
        "ofc": round6(a.ofc),
        "capped": a.capped.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "reference": a.reference.to_string(),
        "ratios": ratios,
    })
}

pub const SWEEP_HEADER: &str = "end_edition,policy,seeding,last_round,confed,quota,capped";

pub fn sweep_csv(r: &SweepResult) -> String {
    let mut out = format!("{SWEEP_HEADER}\n");
    for (k, a) in r {
        for c in Confederation::ALL {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                k.end_edition,
                k.policy,
                k.seeding,
                k.last_round,
                c,
                fmt6(a.quota(c)),
                a.is_capped(c)
            );
        }
    }
    out
}

/// One row per (series, end edition, confederation).
pub fn figure_csv(r: &SweepResult) -> String {
    let mut out = String::from("series,end_edition,confed,quota\n");
    let mut rows: Vec<(String, u16, Confederation, f64)> = Vec::new();
    for (k, a) in r {
        let series = format!(
            "{}-{}{}",
            k.policy,
            k.seeding,
            if k.last_round { "-last" } else { "" }
        );
        for c in Confederation::ALL {
            rows.push((series.clone(), k.end_edition, c, a.quota(c)));
        }
    }
    rows.sort_by(|a, b| (&a.0, a.1, a.2).cmp(&(&b.0, b.1, b.2)));
    for (s, e, c, q) in rows {
        let _ = writeln!(out, "{s},{e},{c},{}", fmt6(q));
    }
    out
}

pub fn diff_csv(d: &BTreeMap<SweepKey, BTreeMap<Confederation, f64>>) -> String {
    let mut out = String::from("end_edition,policy,seeding,confed,delta\n");
    for (k, m) in d {
        for (c, x) in m {
            let _ = writeln!(out, "{},{},{},{},{}", k.end_edition, k.policy, k.seeding, c, fmt6(*x));
        }
    }
    out
}

/// Read a sweep export back. Ratios are not part of the export and stay empty.
pub fn read_sweep_csv<R: Read>(input: R) -> Result<SweepResult, AppError> {
    let mut rdr = csv::Reader::from_reader(input);
    let bad = |line: u64, msg: &str| AppError::Usage(format!("sweep file line {line}: {msg}"));
    let headers = rdr.headers().map_err(|e| bad(1, &e.to_string()))?;
    if headers.iter().collect::<Vec<_>>().join(",") != SWEEP_HEADER {
        return Err(bad(1, "unexpected header"));
    }
    let mut out = SweepResult::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| bad(0, &e.to_string()))?;
        let line = rec.position().map_or(0, |p| p.line());
        let get = |i: usize| rec.get(i).unwrap_or("");
        let end: u16 = get(0).parse().map_err(|_| bad(line, "end_edition"))?;
        let policy: Policy = get(1).parse().map_err(|_| bad(line, "policy"))?;
        let seeding: SeedingName = get(2).parse().map_err(|_| bad(line, "seeding"))?;
        let last: bool = get(3).parse().map_err(|_| bad(line, "last_round"))?;
        let confed: Confederation = get(4).parse().map_err(|_| bad(line, "confed"))?;
        let quota: f64 = get(5).parse().map_err(|_| bad(line, "quota"))?;
        let capped: bool = get(6).parse().map_err(|_| bad(line, "capped"))?;
        let entry = out.entry(SweepKey::new(end, policy, seeding, last)).or_insert_with(|| AllocationResult {
            quotas: BTreeMap::new(),
            ofc: 0.0,
            capped: Vec::new(),
            reference: Entity::Confed(Confederation::Afc),
            ratios: BTreeMap::new(),
        });
        if confed == Confederation::Ofc {
            entry.ofc = quota;
        } else {
            entry.quotas.insert(confed, quota);
        }
        if capped {
            entry.capped.push(confed);
        }
    }
    Ok(out)
}
