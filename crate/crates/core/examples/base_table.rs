//! Tabulate bases for all groups up to a given order and cross-check the
//! two deciders.
//!
//! `cargo run --release --example base_table -- 24`

use std::io::stdout;

use amalgam_bases::decide::{enumerate_bases, selftest, write_csv};
use amalgam_bases::{Method, DEFAULT_BOUND};

fn main() -> amalgam_bases::Result<()> {
    let max: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(16);
    let rows = enumerate_bases(max, Method::Both, DEFAULT_BOUND)?;
    write_csv(&rows, stdout().lock())?;

    let bases = rows.iter().filter(|r| r.verdict.is_base).count();
    eprintln!(
        "{} pointed groups of order <= {max}, {bases} bases",
        rows.len()
    );

    let report = selftest(max, DEFAULT_BOUND)?;
    eprintln!(
        "selftest: {} groups, {} witnesses rechecked, passed = {}",
        report.groups,
        report.witnesses_checked,
        report.passed()
    );
    Ok(())
}
