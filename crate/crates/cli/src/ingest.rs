//! Reading and writing the match CSV.

use std::collections::HashMap;
use std::io::{Read, Write};

use confed_elo::{DataError, Match, Outcome};

pub const HEADER: [&str; 13] = [
    "edition",
    "date_order",
    "stage",
    "round_index",
    "team_a",
    "team_b",
    "confed_a",
    "confed_b",
    "score_a",
    "score_b",
    "w_a",
    "shootout",
    "last_group_round",
];

/// The dataset shipped with the crate.
pub const BUNDLED_CSV: &str = include_str!("../data/matches.csv");

#[derive(Debug, thiserror::Error)]
pub enum IngestError {
    #[error("line {line}: {source}")]
    Csv { line: u64, source: csv::Error },
    #[error("unexpected header: expected '{}', found '{found}'", HEADER.join(","))]
    Header { found: String },
    #[error("line {line}: field '{field}' has invalid value '{value}': {message}")]
    Field {
        line: u64,
        field: &'static str,
        value: String,
        message: String,
    },
    #[error("line {line}: {source}")]
    Invalid { line: u64, source: DataError },
    #[error("line {line}: duplicate match key (edition {edition}, date_order {date_order}), first seen on line {first}")]
    Duplicate {
        line: u64,
        first: u64,
        edition: u16,
        date_order: u32,
    },
}

fn field(rec: &csv::StringRecord, i: usize) -> &str {
    rec.get(i).unwrap_or("").trim()
}

fn parse<T: std::str::FromStr>(rec: &csv::StringRecord, i: usize, line: u64) -> Result<T, IngestError>
where
    T::Err: std::fmt::Display,
{
    let raw = field(rec, i);
    raw.parse::<T>().map_err(|e| IngestError::Field {
        line,
        field: HEADER[i],
        value: raw.to_string(),
        message: e.to_string(),
    })
}

fn parse_bool(rec: &csv::StringRecord, i: usize, line: u64) -> Result<bool, IngestError> {
    match field(rec, i) {
        "true" => Ok(true),
        "false" => Ok(false),
        other => Err(IngestError::Field {
            line,
            field: HEADER[i],
            value: other.to_string(),
            message: "expected 'true' or 'false'".into(),
        }),
    }
}

fn parse_row(rec: &csv::StringRecord, line: u64) -> Result<Match, IngestError> {
    let shootout = parse_bool(rec, 11, line)?;
    let w: f64 = parse(rec, 10, line)?;
    let outcome = Outcome::from_value(w, shootout).ok_or_else(|| IngestError::Field {
        line,
        field: "w_a",
        value: field(rec, 10).to_string(),
        message: if shootout {
            "a shootout result must be 0.75 or 0.5".into()
        } else {
            "must be 0, 0.5 or 1 without a shootout".into()
        },
    })?;
    let m = Match {
        edition: parse(rec, 0, line)?,
        date_order: parse(rec, 1, line)?,
        stage: parse(rec, 2, line)?,
        round_index: parse(rec, 3, line)?,
        team_a: field(rec, 4).to_string(),
        team_b: field(rec, 5).to_string(),
        confed_a: parse(rec, 6, line)?,
        confed_b: parse(rec, 7, line)?,
        score_a: parse(rec, 8, line)?,
        score_b: parse(rec, 9, line)?,
        outcome,
        last_group_round: parse_bool(rec, 12, line)?,
    };
    m.validate().map_err(|source| IngestError::Invalid { line, source })?;
    Ok(m)
}

/// Parse a dataset. Matches come back ordered by (edition, date_order).
pub fn parse_matches<R: Read>(input: R) -> Result<Vec<Match>, IngestError> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let headers = rdr.headers().map_err(|source| IngestError::Csv { line: 1, source })?.clone();
    if headers.iter().map(str::trim).ne(HEADER) {
        return Err(IngestError::Header {
            found: headers.iter().collect::<Vec<_>>().join(","),
        });
    }
    let mut out = Vec::new();
    let mut seen: HashMap<(u16, u32), u64> = HashMap::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|source| IngestError::Csv {
            line: source.position().map_or(0, |p| p.line()),
            source,
        })?;
        let line = rec.position().map_or(0, |p| p.line());
        let m = parse_row(&rec, line)?;
        if let Some(&first) = seen.get(&(m.edition, m.date_order)) {
            return Err(IngestError::Duplicate {
                line,
                first,
                edition: m.edition,
                date_order: m.date_order,
            });
        }
        seen.insert((m.edition, m.date_order), line);
        out.push(m);
    }
    out.sort_by_key(|m| (m.edition, m.date_order));
    Ok(out)
}

pub fn bundled() -> Vec<Match> {
    parse_matches(BUNDLED_CSV.as_bytes()).expect("bundled dataset is valid")
}

/// Write matches in the dataset format.
pub fn write_matches<W: Write>(out: W, matches: &[Match]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for m in matches {
        w.write_record([
            m.edition.to_string(),
            m.date_order.to_string(),
            m.stage.code().to_string(),
            m.round_index.to_string(),
            m.team_a.clone(),
            m.team_b.clone(),
            m.confed_a.code().to_string(),
            m.confed_b.code().to_string(),
            m.score_a.to_string(),
            m.score_b.to_string(),
            m.w_a().to_string(),
            m.shootout().to_string(),
            m.last_group_round.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
