//! Census table rendering.

use std::io::{self, Write};

use serde::Serialize;
use tricomm::census::format_significant;
use tricomm::CensusRow;

pub const DIGITS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    /// n, A, B and P(n) A / (n B)
    Main,
    /// n, A1, B1, A1/B1, A2, B2 and n A2 / B2
    Cycles,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Jsonl,
    Plain,
}

#[derive(Serialize)]
struct MainRecord {
    n: usize,
    a: String,
    b: String,
    partitions: String,
    p_a: String,
    proba_exact: String,
    proba: String,
}

#[derive(Serialize)]
struct CyclesRecord {
    n: usize,
    a1: String,
    b1: String,
    proba1_exact: String,
    proba1: String,
    a2: String,
    b2: String,
    proba2_exact: String,
    proba2: String,
}

const MAIN_HEADER: &str = "n,a,b,partitions,p_a,proba_exact,proba";
const CYCLES_HEADER: &str = "n,a1,b1,proba1_exact,proba1,a2,b2,proba2_exact,proba2";

fn main_record(row: &CensusRow) -> MainRecord {
    let scaled = row.scaled_p_a();
    MainRecord {
        n: row.n,
        a: row.a.to_string(),
        b: row.b.to_string(),
        partitions: row.partitions.to_string(),
        p_a: row.p_a.to_string(),
        proba: format_significant(&scaled, DIGITS),
        proba_exact: scaled.to_string(),
    }
}

fn cycles_record(row: &CensusRow) -> CyclesRecord {
    let scaled = row.scaled_p2();
    CyclesRecord {
        n: row.n,
        a1: row.a1.to_string(),
        b1: row.b1.to_string(),
        proba1_exact: row.p1.to_string(),
        proba1: format_significant(&row.p1, DIGITS),
        a2: row.a2.to_string(),
        b2: row.b2.to_string(),
        proba2: format_significant(&scaled, DIGITS),
        proba2_exact: scaled.to_string(),
    }
}

/// Writes `rows` in ascending order. `plain` mirrors the space-separated
/// layout `n a b proba` / `n a1 b1 proba1 a2 b2 proba2` with no header.
pub fn write_rows(
    out: &mut impl Write,
    rows: &[CensusRow],
    family: Family,
    format: Format,
) -> io::Result<()> {
    if format == Format::Csv {
        let header = match family {
            Family::Main => MAIN_HEADER,
            Family::Cycles => CYCLES_HEADER,
        };
        writeln!(out, "{header}")?;
    }
    for row in rows {
        match (family, format) {
            (Family::Main, Format::Plain) => {
                let r = main_record(row);
                writeln!(out, "{} {} {} {}", r.n, r.a, r.b, r.proba)?;
            }
            (Family::Main, Format::Csv) => {
                let r = main_record(row);
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.n, r.a, r.b, r.partitions, r.p_a, r.proba_exact, r.proba
                )?;
            }
            (Family::Main, Format::Jsonl) => {
                writeln!(out, "{}", serde_json::to_string(&main_record(row))?)?
            }
            (Family::Cycles, Format::Plain) => {
                let r = cycles_record(row);
                writeln!(
                    out,
                    "{} {} {} {} {} {} {}",
                    r.n, r.a1, r.b1, r.proba1, r.a2, r.b2, r.proba2
                )?;
            }
            (Family::Cycles, Format::Csv) => {
                let r = cycles_record(row);
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{}",
                    r.n, r.a1, r.b1, r.proba1_exact, r.proba1, r.a2, r.b2, r.proba2_exact, r.proba2
                )?;
            }
            (Family::Cycles, Format::Jsonl) => {
                writeln!(out, "{}", serde_json::to_string(&cycles_record(row))?)?
            }
        }
    }
    Ok(())
}
