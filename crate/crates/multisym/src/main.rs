use std::process;

use clap::{Parser, Subcommand, ValueEnum};

use multisym::{
    appendix_suite, counting_suite, dims_suite, monomial_symmetric, projections_suite, schur,
    schur_stability_suite, staircase, vandermonde_product, Context, Error, MultiPartition,
    Polynomial, Result, SuiteReport,
};

#[derive(Parser)]
#[command(
    name = "multisym",
    version,
    about = "Exact symmetric-function computations over multi-indexed variable universes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Appendix,
    Projections,
    Dims,
    Counting,
    SchurStability,
}

#[derive(Subcommand)]
enum Command {
    /// Expand the Schur polynomial of a multi-partition
    Schur {
        #[arg(short)]
        m: u32,
        #[arg(short)]
        n: u32,
        #[arg(short)]
        k: u32,
        /// Level form, e.g. "[[3,2],[2,1,1,1]]"
        #[arg(long)]
        ell: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Use flat a[p;...] names even where X/Y/Z aliases exist
        #[arg(long)]
        flat: bool,
    },
    /// Expand the product of all pairwise differences of the universe
    Vandermonde {
        #[arg(short)]
        m: u32,
        #[arg(short)]
        n: u32,
        #[arg(short)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Use flat a[p;...] names even where X/Y/Z aliases exist
        #[arg(long)]
        flat: bool,
    },
    /// Expand the monomial symmetric polynomial of a multi-partition
    Msym {
        #[arg(short)]
        m: u32,
        #[arg(short)]
        n: u32,
        #[arg(short)]
        k: u32,
        /// Level form, e.g. "[[1],[1,1]]"
        #[arg(long)]
        mp: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Use X/Y/Z aliases instead of flat a[p;...] names
        #[arg(long)]
        alias: bool,
    },
    /// Print the staircase exponent sequence in flat order
    Delta {
        #[arg(short)]
        m: u32,
        #[arg(short)]
        n: u32,
        #[arg(short)]
        k: u32,
    },
    /// List the indeterminates of a context in flat order
    Universe {
        #[arg(short)]
        m: u32,
        #[arg(short)]
        n: u32,
        #[arg(short)]
        k: u32,
        /// Use X/Y/Z aliases instead of flat a[p;...] names
        #[arg(long)]
        alias: bool,
    },
    /// Run a verification suite and exit nonzero on any failed check
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest degree swept by the dims suite
        #[arg(long, default_value_t = 12)]
        max_r: u64,
        /// Largest letter-alphabet size swept by the dims suite
        #[arg(long, default_value_t = 5)]
        max_n: u32,
        /// Seed for the randomized projection checks
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn parse_levels(raw: &str) -> Result<Vec<Vec<u32>>> {
    serde_json::from_str(raw).map_err(|e| Error::Parse(format!("level form {raw:?}: {e}")))
}

/// Alias names only exist for words of depth at most two.
fn check_alias_depth(ctx: Context, alias: bool) -> Result<()> {
    if alias && ctx.k() > 2 {
        return Err(Error::InvalidContext(format!(
            "alias names cover depth <= 2 only, context has k={}",
            ctx.k()
        )));
    }
    Ok(())
}

/// Writes to stdout, exiting with the conventional SIGPIPE status when the
/// reader has gone away (e.g. `multisym ... | head`).
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).is_err() || out.flush().is_err() {
        process::exit(141);
    }
}

fn print_poly(p: &Polynomial, format: Format, alias: bool) {
    match format {
        Format::Text => emit(&format!("{}\n", p.render(alias))),
        Format::Json => emit(&format!("{}\n", p.to_json_string())),
    }
}

fn print_report(report: &SuiteReport, format: Format) -> i32 {
    match format {
        Format::Text => emit(&report.render_text()),
        Format::Json => emit(&format!("{}\n", report.to_json_string())),
    }
    if report.passed {
        0
    } else {
        1
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Schur {
            m,
            n,
            k,
            ell,
            format,
            flat,
        } => {
            let ctx = Context::new(m, n, k)?;
            let levels = parse_levels(&ell)?;
            let mp = MultiPartition::from_levels(ctx, &levels)?;
            print_poly(&schur(&mp)?, format, !flat && ctx.k() <= 2);
            Ok(0)
        }
        Command::Vandermonde {
            m,
            n,
            k,
            format,
            flat,
        } => {
            let ctx = Context::new(m, n, k)?;
            print_poly(&vandermonde_product(ctx), format, !flat && ctx.k() <= 2);
            Ok(0)
        }
        Command::Msym {
            m,
            n,
            k,
            mp,
            format,
            alias,
        } => {
            let ctx = Context::new(m, n, k)?;
            check_alias_depth(ctx, alias)?;
            let levels = parse_levels(&mp)?;
            let mp = MultiPartition::from_levels(ctx, &levels)?;
            print_poly(&monomial_symmetric(&mp)?, format, alias);
            Ok(0)
        }
        Command::Delta { m, n, k } => {
            let ctx = Context::new(m, n, k)?;
            let values: Vec<String> = staircase(ctx)
                .values()
                .iter()
                .map(|v| v.to_string())
                .collect();
            emit(&format!("{}\n", values.join(",")));
            Ok(0)
        }
        Command::Universe { m, n, k, alias } => {
            let ctx = Context::new(m, n, k)?;
            check_alias_depth(ctx, alias)?;
            let names: Vec<String> = ctx
                .universe()
                .iter()
                .map(|label| {
                    if alias {
                        label.alias().expect("depth checked above")
                    } else {
                        label.to_string()
                    }
                })
                .collect();
            emit(&format!("{}\n", names.join(" ")));
            Ok(0)
        }
        Command::Verify {
            suite,
            max_r,
            max_n,
            seed,
            format,
        } => {
            let report = match suite {
                Suite::Appendix => appendix_suite()?,
                Suite::Projections => projections_suite(seed)?,
                Suite::Dims => dims_suite(max_r, max_n)?,
                Suite::Counting => counting_suite(5)?,
                Suite::SchurStability => schur_stability_suite(6)?,
            };
            Ok(print_report(&report, format))
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Parse(_) | Error::Json(_) => 2,
                _ => 3,
            };
            process::exit(code);
        }
    }
}
