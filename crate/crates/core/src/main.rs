use std::io::Write;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand};

use catb2::catalan::{Model, Perturbation};
use catb2::sweep::{self, parse_checks, Format, IndexRange, SweepConfig};
use catb2::{Error, FamilyIndex, Rat, Result};

#[derive(Parser)]
#[command(
    name = "catb2",
    version,
    about = "Exact verification of the Cat(B2, m) derivation basis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run identity checks over a parameter grid.
    Verify {
        /// Range of i, inclusive.
        #[arg(long = "i", default_value = "0..4", value_name = "LO..HI")]
        i_range: String,
        /// Range of m, inclusive.
        #[arg(long = "m", default_value = "0..4", value_name = "LO..HI")]
        m_range: String,
        /// k runs over 0..=m+N for the checks indexed by k.
        #[arg(long, default_value_t = 2, value_name = "N")]
        k_extra: u32,
        /// Comma-separated check names, or `all`.
        #[arg(long, default_value = "all", value_name = "LIST")]
        checks: String,
        #[arg(long, default_value = "text", value_name = "text|json")]
        format: String,
        #[arg(long, default_value_t = 1, value_name = "N")]
        jobs: usize,
        /// Add DELTA (default 1) to the coefficient c_{M,I,K} before checking.
        #[arg(long, value_name = "I,M,K[,DELTA]")]
        perturb: Option<String>,
    },
    /// Print the basis polynomials and constants for one m.
    Basis {
        #[arg(long, value_name = "M")]
        m: u32,
        #[arg(long, default_value = "text", value_name = "text|json")]
        format: String,
    },
}

fn parse_perturbation(s: &str) -> Result<Perturbation> {
    let bad = || {
        Error::Config(format!(
            "invalid perturbation '{s}', expected I,M,K[,DELTA]"
        ))
    };
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if !(3..=4).contains(&parts.len()) {
        return Err(bad());
    }
    let num = |p: &str| p.parse::<u32>().map_err(|_| bad());
    let delta = match parts.get(3) {
        Some(d) => d.parse::<Rat>().map_err(|_| bad())?,
        None => Rat::one(),
    };
    Ok(Perturbation {
        index: FamilyIndex::new(num(parts[0])?, num(parts[1])?),
        k: num(parts[2])?,
        delta,
    })
}

fn run(cli: Cli) -> Result<u8> {
    let mut stdout = std::io::stdout().lock();
    let io = |e: std::io::Error| Error::Config(format!("write failed: {e}"));
    match cli.command {
        Command::Verify {
            i_range,
            m_range,
            k_extra,
            checks,
            format,
            jobs,
            perturb,
        } => {
            let cfg = SweepConfig {
                i_range: i_range.parse::<IndexRange>()?,
                m_range: m_range.parse::<IndexRange>()?,
                k_extra,
                checks: parse_checks(&checks)?,
                format: format.parse::<Format>()?,
                jobs,
                model: match perturb {
                    Some(p) => Model::perturbed(parse_perturbation(&p)?),
                    None => Model::exact(),
                },
            };
            let outcomes = sweep::run_verify(&cfg)?;
            stdout
                .write_all(sweep::render(&outcomes, cfg.format).as_bytes())
                .map_err(io)?;
            Ok(sweep::exit_code(&outcomes) as u8)
        }
        Command::Basis { m, format } => {
            let format = format.parse::<Format>()?;
            let data = sweep::basis_data(&Model::exact(), m)?;
            stdout
                .write_all(sweep::render_basis(&data, format).as_bytes())
                .map_err(io)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}\n");
            eprintln!("{}", Cli::command().render_usage());
            ExitCode::from(2)
        }
    }
}
