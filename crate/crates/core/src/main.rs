use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use schubval::crystal::{demazure_crystal, string_parametrization};
use schubval::harness::{
    compute_level, parse_checks, render_report, run_case_timed, valuation_table, CaseSpec, Format,
};
use schubval::{Error, Series};

#[derive(Parser)]
#[command(
    name = "schubval",
    version,
    about = "Valuations, crystals and bodies of Schubert varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CaseArgs {
    #[arg(long)]
    series: String,
    #[arg(long)]
    rank: usize,
    /// Reduced word, e.g. `1,2,1` (empty for the point).
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    word: String,
    /// Highest weight in fundamental coordinates, e.g. `1,1`.
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
}

#[derive(Subcommand)]
enum Command {
    /// Run the cross-checks and write a report.
    Verify {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, default_value_t = 1)]
        kmax: usize,
        /// `all` or a list such as `C1,C4`.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Another reduced word for the same element (used by C8).
        #[arg(long)]
        alt_word: Option<String>,
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Print the level-1 table of the four valuations.
    Table {
        #[command(flatten)]
        case: CaseArgs,
    },
    /// Print the string parametrization of every Demazure crystal element.
    Crystal {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
}

fn list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, Error> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| {
            x.parse()
                .map_err(|_| Error::Input(format!("bad {what} entry `{x}`")))
        })
        .collect()
}

fn spec(case: &CaseArgs, kmax: usize) -> Result<CaseSpec, Error> {
    let series: Series = case.series.parse()?;
    Ok(CaseSpec::new(
        series,
        case.rank,
        list(&case.word, "word")?,
        list(&case.lambda, "lambda")?,
        kmax,
    ))
}

fn write(out: Option<&PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Verify {
            case,
            kmax,
            checks,
            alt_word,
            format,
            out,
            timing,
        } => {
            let format: Format = format.parse()?;
            let mut spec = spec(&case, kmax)?.with_checks(parse_checks(&checks)?);
            if let Some(alt) = alt_word {
                spec = spec.with_alt_word(list(&alt, "alt-word")?);
            }
            let report = run_case_timed(&spec, timing)?;
            write(out.as_ref(), &render_report(&report, format)?)?;
            Ok(report.pass())
        }
        Command::Table { case } => {
            let (case, _) = spec(&case, 1)?.resolve()?;
            let level = compute_level(&case, 1)?;
            let table = valuation_table(&level.sections, case.word(), case.root_system().rank());
            print!("{}", table.to_markdown());
            Ok(true)
        }
        Command::Crystal { case, k } => {
            let (case, _) = spec(&case, k.max(1))?.resolve()?;
            let rs = case.root_system();
            let kl = case.lambda().scaled(k as i64);
            let crystal = demazure_crystal(rs, &kl, case.word())?;
            let mut rows = Vec::new();
            for b in crystal.elements() {
                rows.push((
                    string_parametrization(rs, &kl, b, case.word())?,
                    b.wt(),
                    b.to_string(),
                ));
            }
            rows.sort();
            for (t, wt, path) in rows {
                println!("{t}\twt={wt}\t{path}");
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
