//! Command implementations behind the `jaco` binary: tables, verification,
//! export and braided-graph reports. [`run`] takes the argument list and the
//! two output streams, so the commands can also be driven in-process.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
//! 3 budget exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use jaco_core::braided::{self, BraidedString};
use jaco_core::builder::DEFAULT_ARC_BUDGET;
use jaco_core::chroma::{Solver, DEFAULT_SEARCH_BUDGET};
use jaco_core::tables::{self, format_rational, TsvOptions};
use jaco_core::verify::{self, VerifyConfig, PROPERTIES};
use jaco_core::{export, invariants, Error, IncidencePolynomial, JacoGraph};

#[derive(Parser)]
#[command(name = "jaco", version, about = "Jaco graphs and their chromatic sums")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-order structural invariants as TSV.
    Table1 {
        /// Incidence polynomial, e.g. `x^2`, `2x^2+x+1`, `3`.
        #[arg(long = "f", default_value = "x^2")]
        f: IncidencePolynomial,
        #[arg(long, default_value_t = 35)]
        n: usize,
        /// Append the originally published value wherever it differs (x² only).
        #[arg(long = "show-paper-errata")]
        show_errata: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Chromatic sums, means and variances per order as TSV.
    Table3 {
        #[arg(long = "f", default_value = "x^2")]
        f: IncidencePolynomial,
        #[arg(long, default_value_t = 20)]
        n: usize,
        /// Append minimum and maximum colour-weight vectors.
        #[arg(long)]
        weights: bool,
        #[arg(long = "show-paper-errata")]
        show_errata: bool,
        /// Search-node budget per graph.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the property suite; exits 2 if any property fails.
    Verify {
        /// Check a single polynomial instead of the default grid.
        #[arg(long = "f")]
        f: Option<IncidencePolynomial>,
        /// Largest structural order (default 200).
        #[arg(long)]
        n: Option<usize>,
        /// Run only the named properties (repeatable); `--prop list` prints them.
        #[arg(long = "prop")]
        props: Vec<String>,
    },
    /// Write a graph as JSON or DOT.
    Export {
        #[arg(long = "f", default_value = "x^2")]
        f: IncidencePolynomial,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Include the materialized arc list in JSON output.
        #[arg(long)]
        arcs: bool,
        /// Largest number of arcs to materialize.
        #[arg(long, default_value_t = DEFAULT_ARC_BUDGET)]
        arc_budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Chromatic report of a braided string of complete graphs.
    Braided {
        /// Block orders, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<usize>,
        /// Overlap sizes between consecutive blocks, comma separated.
        #[arg(long, value_delimiter = ',')]
        overlaps: Vec<usize>,
        /// Append the realized graph in DOT form.
        #[arg(long)]
        dot: bool,
        /// Add the originally published maximum-mean closed form (two blocks).
        #[arg(long)]
        erratum: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Smallest order whose maximum degree is f(f(1)).
    Locate {
        #[arg(long = "f", default_value = "x^2")]
        f: IncidencePolynomial,
        /// Add the originally published order for comparison.
        #[arg(long)]
        erratum: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    DotDirected,
    DotUnderlying,
}

enum Failure {
    Core(Error),
    Usage(String),
    Io(std::io::Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ArcBudgetExceeded { .. }
        | Error::SearchBudgetExceeded { .. }
        | Error::BudgetExceeded { .. }
        | Error::OrderTooLarge { .. } => 3,
        Error::HopeNotComplete { .. } | Error::LocatorMismatch(_) => 2,
        _ => 1,
    }
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `stdout` and diagnostics to `stderr`. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                1
            } else {
                let _ = stdout.write_all(text.as_bytes());
                0
            };
        }
    };
    let mut io = Streams { stdout, stderr };
    let outcome = dispatch(cli.command, &mut io);
    let (code, message) = match outcome {
        Ok(()) => (0, None),
        Err(Failure::Core(e)) => (exit_code(&e), Some(e.to_string())),
        Err(Failure::Usage(msg)) => (1, Some(msg)),
        Err(Failure::Io(e)) => (1, Some(e.to_string())),
        Err(Failure::Verification) => (2, None),
    };
    if let Some(message) = message {
        let _ = writeln!(io.stderr, "error: {message}");
    }
    code
}

struct Streams<'a> {
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Streams<'_> {
    fn emit(&mut self, out: Option<PathBuf>, text: &str) -> Result<(), Failure> {
        match out {
            Some(path) => std::fs::write(path, text)?,
            None => self.stdout.write_all(text.as_bytes())?,
        }
        Ok(())
    }
}

fn require_order(n: usize) -> Result<(), Failure> {
    if n == 0 {
        return Err(Error::InvalidOrder.into());
    }
    Ok(())
}

fn dispatch(command: Command, io: &mut Streams<'_>) -> Result<(), Failure> {
    match command {
        Command::Table1 {
            f,
            n,
            show_errata,
            out,
        } => {
            require_order(n)?;
            let rows = tables::structural_rows(f, n)?;
            let opts = TsvOptions {
                weights: false,
                errata: show_errata,
            };
            io.emit(out, &tables::structural_tsv(f, &rows, opts))
        }
        Command::Table3 {
            f,
            n,
            weights,
            show_errata,
            budget,
            out,
        } => {
            require_order(n)?;
            let rows = tables::chromatic_rows(f, n, &Solver::with_budget(budget))?;
            let opts = TsvOptions {
                weights,
                errata: show_errata,
            };
            io.emit(out, &tables::chromatic_tsv(f, &rows, opts))
        }
        Command::Verify { f, n, props } => {
            if props.iter().any(|p| p == "list") {
                let text: String = PROPERTIES
                    .iter()
                    .map(|(name, description)| format!("{name}\t{description}\n"))
                    .collect();
                return io.emit(None, &text);
            }
            if let Some(bad) = props
                .iter()
                .find(|p| !PROPERTIES.iter().any(|(n, _)| n == p))
            {
                return Err(Failure::Usage(format!(
                    "unknown property `{bad}`; `--prop list` shows the names"
                )));
            }
            let mut config = match (f, n) {
                (Some(p), n) => VerifyConfig::single(p, n.unwrap_or(200)),
                (None, Some(n)) => VerifyConfig {
                    structural_max: n,
                    colouring_max: n.min(VerifyConfig::default().colouring_max),
                    sequence_max: n.min(20),
                    ..VerifyConfig::default()
                },
                (None, None) => VerifyConfig::default(),
            };
            if config.structural_max == 0 {
                return Err(Error::InvalidOrder.into());
            }
            if !props.is_empty() {
                config.only = Some(props);
            }
            let report = verify::run(&config);
            io.emit(None, &report.render())?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Export {
            f,
            n,
            format,
            arcs,
            arc_budget,
            out,
        } => {
            require_order(n)?;
            let g = JacoGraph::build(f, n)?;
            let text = match format {
                Format::Json => export::to_json(&g, arcs.then_some(arc_budget))?,
                Format::DotDirected => export::to_dot_directed(&g, arc_budget)?,
                Format::DotUnderlying => export::to_dot_underlying(&g, arc_budget)?,
            };
            io.emit(out, &text)
        }
        Command::Braided {
            orders,
            overlaps,
            dot,
            erratum,
            out,
        } => {
            let s = BraidedString::new(orders, overlaps)?;
            for (j, _) in s.overlaps().iter().enumerate().filter(|(_, &l)| l == 0) {
                let _ = writeln!(
                    io.stderr,
                    "warning: overlap {} is 0; blocks {} and {} form a disjoint union",
                    j + 1,
                    j + 1,
                    j + 2
                );
            }
            let g = s.realize();
            let r = Solver::default().chroma_report(&g)?;
            let mut text =
                String::from("vertices\tchi\tchi_minus\tchi_plus\tmu_minus\tmu_plus\tvar");
            if erratum {
                text.push_str("\tmu_plus_published");
            }
            text.push('\n');
            text.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                s.vertex_count(),
                r.chi,
                r.chi_minus,
                r.chi_plus,
                format_rational(&r.mu_minus),
                format_rational(&r.mu_plus),
                format_rational(&r.var_minus)
            ));
            if erratum {
                let published = match (s.orders(), s.overlaps()) {
                    (&[n, m], &[l]) => format_rational(&braided::mu_max_two_block_published(
                        n as u64, m as u64, l as u64,
                    )?),
                    _ => "-".to_string(),
                };
                text.push('\t');
                text.push_str(&published);
            }
            text.push('\n');
            if dot {
                text.push_str(&export::simple_to_dot(&g));
            }
            io.emit(out, &text)
        }
        Command::Locate { f, erratum } => {
            let located = invariants::smallest_with_max_degree(f)?;
            let mut text = String::from("order\tprime_vertex\tmax_degree");
            if erratum {
                text.push_str("\tpublished_order");
            }
            text.push('\n');
            text.push_str(&format!(
                "{}\t{}\t{}",
                located.order, located.prime_vertex, located.max_degree
            ));
            if erratum {
                text.push_str(&format!("\t{}", invariants::published_locator_order(f)?));
            }
            text.push('\n');
            io.emit(None, &text)
        }
    }
}
