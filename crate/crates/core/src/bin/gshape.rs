use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gamma_shape::approx::AlgoConfig;
use gamma_shape::error::Result;
use gamma_shape::harness::{
    cdf_dump, fit, iteration_table, mh_check, read_data_from_path, read_rows_from_path,
    run_grid_rows, worst_case, write_cdf, write_rows, write_worst, GridCase, GridFilter,
    DEFAULT_MASTER_SEED,
};
use gamma_shape::model::{GammaParams, ShapePosterior};
use gamma_shape::quadrature::QuadConfig;

#[derive(Parser)]
#[command(name = "gshape", version, about = "Gamma approximation to the shape full conditional")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit Gamma(A, B) to the shape full conditional of a data file.
    #[command(allow_negative_numbers = true)]
    Fit {
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        mu: f64,
        #[arg(long)]
        a0: f64,
        #[arg(long)]
        b0: f64,
        #[arg(long, default_value_t = 1e-8)]
        eps: f64,
        #[arg(long, default_value_t = 10)]
        max_iter: usize,
    },
    /// Run the simulation grid and write one CSV row per run.
    #[command(allow_negative_numbers = true)]
    Simulate {
        #[arg(long, value_delimiter = ',')]
        a0: Option<Vec<f64>>,
        #[arg(long, value_delimiter = ',')]
        n: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        r: Option<Vec<f64>>,
        #[arg(long, default_value_t = DEFAULT_MASTER_SEED)]
        master_seed: u64,
        #[arg(long, default_value_t = QuadConfig::DEFAULT_POINTS)]
        quad_points: usize,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Histogram of iteration counts per a0 from a simulation CSV.
    Table {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Per-(a0, n) maxima of replicate-averaged discrepancies.
    Worst {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Exact and approximate CDFs of one grid case.
    #[command(allow_negative_numbers = true)]
    Cdf {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: f64,
        #[arg(long)]
        a_true: f64,
        #[arg(long)]
        mu_true: f64,
        #[arg(long)]
        a0: f64,
        #[arg(long, default_value_t = 512)]
        points: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare a Metropolis-Hastings chain with quadrature moments.
    #[command(allow_negative_numbers = true)]
    MhCheck {
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        mu: f64,
        #[arg(long)]
        a0: f64,
        #[arg(long)]
        b0: f64,
        #[arg(long)]
        steps: u64,
        #[arg(long)]
        seed: u64,
    },
}

fn output(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Fit {
            data,
            mu,
            a0,
            b0,
            eps,
            max_iter,
        } => {
            let data = read_data_from_path(&data)?;
            let prior = GammaParams::new(a0, b0)?;
            let summary = fit(&data, mu, &prior, &AlgoConfig::new(eps, max_iter)?)?;
            println!("{}", serde_json::to_string(&summary).expect("serializable"));
        }
        Command::Simulate {
            a0,
            n,
            r,
            master_seed,
            quad_points,
            out,
        } => {
            let filter = GridFilter {
                a0,
                n,
                r,
                ..Default::default()
            };
            let qcfg = QuadConfig::new(quad_points)?;
            let rows = run_grid_rows(master_seed, &AlgoConfig::default(), &qcfg, &filter);
            write_rows(output(out.as_ref())?, &rows)?;
        }
        Command::Table { input } => {
            let table = iteration_table(&read_rows_from_path(&input)?);
            print!("{}", table.to_csv());
        }
        Command::Worst { input } => {
            let worst = worst_case(&read_rows_from_path(&input)?);
            write_worst(output(None)?, &worst)?;
        }
        Command::Cdf {
            n,
            r,
            a_true,
            mu_true,
            a0,
            points,
            out,
        } => {
            let case = GridCase::new(DEFAULT_MASTER_SEED, n, r, a_true, mu_true, a0, 1);
            let table = cdf_dump(&case, &AlgoConfig::default(), &QuadConfig::default(), points)?;
            write_cdf(output(Some(&out))?, &table)?;
        }
        Command::MhCheck {
            data,
            mu,
            a0,
            b0,
            steps,
            seed,
        } => {
            let data = read_data_from_path(&data)?;
            let post = ShapePosterior::from_data(&data, mu, GammaParams::new(a0, b0)?)?;
            let check = mh_check(&post, steps, seed, &AlgoConfig::default(), &QuadConfig::default())?;
            println!("{}", serde_json::to_string(&check).expect("serializable"));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
