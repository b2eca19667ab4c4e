//! Prints the ξ table of one group, e.g. `cargo run --release --example xi_tables -- F4`.

use repcoh::schubert::Calculus;
use repcoh::ximap::{report_section, ReportOptions, RowStatus};

fn main() -> repcoh::Result<()> {
    let group = std::env::args().nth(1).unwrap_or_else(|| "G2".into());
    let ceiling = std::env::args().nth(2).and_then(|s| s.parse().ok());
    let calc = Calculus::from_label(&group)?;
    let parabolics = std::env::args().nth(3).map(|s| s.split(',').filter_map(|x| x.parse().ok()).collect());
    let report = report_section(&calc, &ReportOptions { ceiling, parabolics, ..Default::default() })?;
    print!("{}", report.to_text());
    println!(
        "match {}  mismatch(paper) {}  mismatch {}  skipped {}",
        report.count(RowStatus::Match),
        report.count(RowStatus::MismatchPaper),
        report.count(RowStatus::Mismatch),
        report.count(RowStatus::Skipped)
    );
    Ok(())
}
