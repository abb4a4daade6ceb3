use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use berger_index::cli::{self, BergerParam, Figure, IndexQuery, Space};
use berger_index::output::{Format, Table, DEFAULT_PRECISION, MAX_PRECISION};
use berger_index::rational::{parse_rational, Rational};
use berger_index::slices::{PageConstants, DEFAULT_DEPTH};
use berger_index::{Error, Result};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "berger-index",
    version,
    about = "Round and Berger sphere spectra, Jacobi index and nullity of Berger slices"
)]
struct Cli {
    #[arg(long, value_enum, default_value = "csv", global = true)]
    format: FormatArg,

    /// Significant digits for real columns
    #[arg(long, env = "BERGER_PRECISION", default_value_t = DEFAULT_PRECISION as u8,
          value_parser = clap::value_parser!(u8).range(1..=MAX_PRECISION as i64),
          global = true)]
    precision: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceArg {
    Cp2,
    Page,
}

#[derive(Clone, Copy, ValueEnum)]
enum FigureArg {
    Fig1,
    Fig2,
    Fig3,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum of the unit round p-sphere
    Sphere {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        dim: u64,
        #[arg(long)]
        kmax: u64,
    },
    /// Distinct eigenvalues of a Berger sphere
    #[command(group(ArgGroup::new("param").required(true).args(["t", "epsilon"])))]
    Berger {
        /// Unit-volume squash parameter
        #[arg(long)]
        t: Option<f64>,
        /// Fibre length of σ₁² + σ₂² + ε²σ₃²
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long, default_value_t = 12)]
        count: usize,
        #[arg(long)]
        with_multiplicity: bool,
    },
    /// Exact cells of one level of the distinct spectrum in x = t^-3
    Piecewise {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        index: u64,
        #[arg(long, value_parser = rational_arg)]
        xmax: Rational,
    },
    /// Index and nullity of Berger slices in CP2 or the Page space
    #[command(group(ArgGroup::new("query").required(true).args(["r", "scan", "roots"])))]
    Index {
        #[arg(value_enum)]
        space: SpaceArg,
        #[arg(long)]
        r: Option<f64>,
        /// RMIN RMAX STEPS
        #[arg(long, num_args = 3, value_names = ["RMIN", "RMAX", "STEPS"])]
        scan: Option<Vec<String>>,
        #[arg(long)]
        roots: bool,
        /// Bisection tolerance for transition roots
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Number of distinct eigenvalues examined
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
        #[arg(long)]
        page_config: Option<PathBuf>,
    },
    /// Data behind the eigenvalue figures
    Plot {
        #[arg(value_enum)]
        figure: FigureArg,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long)]
        page_config: Option<PathBuf>,
    },
}

fn rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn page_constants(path: Option<&PathBuf>) -> Result<PageConstants> {
    match path {
        Some(p) => PageConstants::load(p),
        None => Ok(PageConstants::builtin()),
    }
}

fn parse_scan(v: &[String]) -> Result<IndexQuery> {
    let bad = |s: &String| Error::InvalidParameter(format!("'{s}' is not a valid scan value"));
    let r_min = v[0].parse().map_err(|_| bad(&v[0]))?;
    let r_max = v[1].parse().map_err(|_| bad(&v[1]))?;
    let steps = v[2].parse().map_err(|_| bad(&v[2]))?;
    Ok(IndexQuery::Scan {
        r_min,
        r_max,
        steps,
    })
}

fn build(command: &Command) -> Result<(Table, Option<PathBuf>)> {
    let table = match command {
        Command::Sphere { dim, kmax } => cli::cmd_sphere_spectrum(*dim, *kmax)?,
        Command::Berger {
            t,
            epsilon,
            count,
            with_multiplicity,
        } => {
            let param = match (t, epsilon) {
                (Some(t), None) => BergerParam::T(*t),
                (None, Some(e)) => BergerParam::Epsilon(*e),
                _ => {
                    return Err(Error::InvalidParameter(
                        "give exactly one of --t, --epsilon".into(),
                    ))
                }
            };
            cli::cmd_berger_spectrum(param, *count, *with_multiplicity)?
        }
        Command::Piecewise { index, xmax } => cli::cmd_berger_piecewise(*index as usize, xmax)?,
        Command::Index {
            space,
            r,
            scan,
            roots,
            tol,
            depth,
            page_config,
        } => {
            let space = match space {
                SpaceArg::Cp2 => Space::Cp2,
                SpaceArg::Page => Space::Page(page_constants(page_config.as_ref())?),
            };
            let query = match (r, scan, roots) {
                (Some(r), None, false) => IndexQuery::At(*r),
                (None, Some(v), false) => parse_scan(v)?,
                (None, None, true) => IndexQuery::Roots,
                _ => {
                    return Err(Error::InvalidParameter(
                        "give exactly one of --r, --scan, --roots".into(),
                    ))
                }
            };
            cli::cmd_index(&space, query, *tol, *depth)?
        }
        Command::Plot {
            figure,
            out,
            samples,
            page_config,
        } => {
            let figure = match figure {
                FigureArg::Fig1 => Figure::Fig1,
                FigureArg::Fig2 => Figure::Fig2,
                FigureArg::Fig3 => Figure::Fig3,
            };
            let page = page_constants(page_config.as_ref())?;
            return Ok((cli::cmd_plot_data(figure, *samples, &page)?, out.clone()));
        }
    };
    Ok((table, None))
}

fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let (table, out) = build(&cli.command)?;
    let format = match cli.format {
        FormatArg::Csv => Format::Csv,
        FormatArg::Json => Format::Json,
    };
    let precision = usize::from(cli.precision);
    if format == Format::Json {
        for c in &table.comments {
            let _ = writeln!(stderr, "# {c}");
        }
    }
    match out {
        Some(path) => {
            let io_err = |source| Error::Io {
                path: path.clone(),
                source,
            };
            let file = File::create(&path).map_err(io_err)?;
            let mut w = BufWriter::new(file);
            table.write(&mut w, format, precision)?;
            w.flush().map_err(io_err)?;
        }
        None => table.write(stdout, format, precision)?,
    }
    Ok(())
}

/// Parses `args`, runs the command and returns the process exit status.
fn execute<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                2
            } else {
                let _ = write!(stdout, "{text}");
                0
            };
        }
    };
    match run(&cli, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            cli::exit_code(&e) as u8
        }
    }
}

fn main() -> ExitCode {
    let code = execute(
        std::env::args_os(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code)
}
