// Runs every cross-check on one case and prints the markdown report.

use std::error::Error;

use schubval::harness::{render_report, run_case, CaseSpec, Format};
use schubval::Series;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let spec = CaseSpec::new(Series::B, 2, vec![1, 2, 1, 2], vec![1, 1], 1)
        .with_alt_word(vec![2, 1, 2, 1]);
    let report = run_case(&spec)?;
    print!("{}", render_report(&report, Format::Markdown)?);
    if !report.pass() {
        return Err("a check failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
