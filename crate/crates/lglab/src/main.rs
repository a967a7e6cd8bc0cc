//! Command-line front end for the exact twisted de Rham toolbox.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lglab::corpus;
use lglab::jobs::{self, parse_rat, Command as JobCommand, JobError, JobSpec};
use lglab::report::{Payload, Report};

#[derive(Parser)]
#[command(
    name = "lglab",
    version,
    about = "Exact twisted de Rham cohomology, Brieskorn lattices, and duality checks"
)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Args, Clone)]
struct JobArgs {
    /// Polynomial, e.g. "x^3 - y^2" (integers, p/q scalars, + - * ^, parens).
    #[arg(long)]
    poly: String,
    /// Comma-separated variable names, e.g. x,y.
    #[arg(long, value_delimiter = ',')]
    vars: Vec<String>,
    /// u-adic truncation order N.
    #[arg(long = "trunc-u", default_value_t = 6)]
    trunc_u: usize,
    /// Polynomial degree ladder, e.g. 3,5,7,9; defaults to deg f + {0,2,4,6}.
    #[arg(long = "deg-ladder", value_delimiter = ',')]
    deg_ladder: Option<Vec<u32>>,
    /// Override the u_o sample set, e.g. 0,1,-1,2,7/3.
    #[arg(long, value_delimiter = ',')]
    samples: Option<Vec<String>>,
    /// Skip the tameness gate.
    #[arg(long = "assume-tame", default_value_t = false)]
    assume_tame: bool,
    /// Write the JSON report here as well.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Seed for the extra pseudorandom sample (also: LGLAB_SEED).
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand, Clone)]
enum CliCommand {
    /// Milnor number and monomial basis of the Jacobian quotient.
    Milnor(JobArgs),
    /// Koszul cohomology dimensions of (Ω•, df∧).
    Koszul(JobArgs),
    /// Fiber dimensions across u_o samples and the degree ladder.
    Fibers(JobArgs),
    /// Fiber constancy cross-validated against Smith-normal-form freeness.
    Freeness(JobArgs),
    /// Brieskorn lattice basis and the u²∂_u connection matrix.
    Brieskorn(JobArgs),
    /// Residue pairing Gram matrix at u = 0.
    Pairing(JobArgs),
    /// Quasi-homogeneous weights and spectrum.
    Spectrum(JobArgs),
    /// Independent predictions: tameness, Newton number, rank formulas.
    Predict(JobArgs),
    /// Everything above plus the cross-check table.
    Report(JobArgs),
    /// Run a corpus file (defaults to the bundled corpus).
    Corpus {
        /// Corpus file path; omit for the bundled corpus.
        path: Option<PathBuf>,
        /// Write the JSON report here as well.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Seed for the extra pseudorandom sample (also: LGLAB_SEED).
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn env_seed() -> Option<u64> {
    std::env::var("LGLAB_SEED").ok()?.parse().ok()
}

fn resolve_seed(flag: Option<u64>) -> u64 {
    flag.or_else(env_seed).unwrap_or(0)
}

fn job_spec(command: JobCommand, args: &JobArgs) -> Result<JobSpec, JobError> {
    let samples_override = match &args.samples {
        None => None,
        Some(raw) => {
            let parsed: Option<Vec<_>> = raw.iter().map(|s| parse_rat(s)).collect();
            Some(parsed.ok_or_else(|| {
                JobError::Parse("--samples entries must be integers or p/q".into())
            })?)
        }
    };
    Ok(JobSpec {
        command,
        poly: args.poly.clone(),
        vars: args.vars.clone(),
        trunc_u: args.trunc_u,
        deg_ladder: args.deg_ladder.clone(),
        samples_override,
        assume_tame: args.assume_tame,
        seed: resolve_seed(args.seed),
    })
}

fn print_summary(report: &Report) {
    match &report.payload {
        Payload::Milnor(p) => {
            println!("mu = {}", p.mu);
            println!("basis = [{}]", p.basis.join(", "));
        }
        Payload::Koszul(p) => {
            println!("koszul dims = {:?}", p.dims);
            println!(
                "vanishing below the top verified at dmax {}: {}",
                p.verified_at_dmax, p.vanishing_verified
            );
        }
        Payload::Fibers(p) => {
            println!("ladder used: {:?}", p.ladder_used);
            for (s, sample) in p.samples.iter().enumerate() {
                let last = p.dims.last().expect("rungs");
                println!(
                    "u_o = {:>6}: dims {:?} (stabilized: {})",
                    sample, last[s], p.stabilized[s]
                );
            }
            println!("verdict: {}", p.verdict);
        }
        Payload::Freeness(p) => {
            println!("verdict: {}", p.fibers.verdict);
            for m in &p.modules {
                println!(
                    "H^{}: free rank {}, torsion [{}], generic rank {}",
                    m.degree,
                    m.free_rank,
                    m.torsion.join(", "),
                    m.generic_rank
                );
            }
            println!(
                "basicu: constant dims {}, free {}, consistent {}",
                p.basicu.constant_dims, p.basicu.free, p.basicu.consistent
            );
            for d in &p.basicu.discrepancies {
                println!("  discrepancy: {d}");
            }
        }
        Payload::Brieskorn(p) => {
            println!("rank = {}", p.rank);
            println!("basis = [{}]", p.basis.join(", "));
            println!("A(u) with u^2*d/du e_j = sum_i A_ij e_i:");
            for row in &p.connection {
                println!("  [{}]", row.join(", "));
            }
            println!("stabilized at trunc_u: {}", p.stabilized);
        }
        Payload::Pairing(p) => {
            println!("G (residue pairing at u = 0):");
            for row in &p.gram {
                println!("  [{}]", row.join(", "));
            }
            println!("det G = {}", p.det);
            if let Some(grid) = p.grid_checked {
                println!("spectrum pairing grid: {grid}");
            }
        }
        Payload::Spectrum(p) => {
            println!("weights = [{}]", p.weights.join(", "));
            println!("spectrum = [{}]", p.alphas.join(", "));
            println!("symmetric about n/2: {}", p.symmetric);
        }
        Payload::Predict(p) => {
            println!("tameness: {}", p.tameness);
            if let Some(r) = &p.tameness_reason {
                println!("  ({r})");
            }
            match (p.kouchnirenko_mu, &p.kouchnirenko_error) {
                (Some(mu), _) => println!("kouchnirenko mu = {mu}"),
                (None, Some(e)) => println!("kouchnirenko: {e}"),
                _ => {}
            }
            if let Some(r) = &p.milnor_sum_ranks {
                println!("milnor-sum ranks = {r:?}");
            }
            if let Some(s5) = &p.section5 {
                println!(
                    "hypersurface V in P^{} of degree {}: betti {:?}, predicted ranks {:?}",
                    s5.n, s5.d, s5.betti, s5.ranks
                );
            }
        }
        Payload::Report(_) => {}
        Payload::Corpus(p) => {
            for entry in &p.entries {
                let status = if entry.passed { "pass" } else { "FAIL" };
                println!("{status}  {} ({})", entry.name, entry.poly);
                for f in &entry.failures {
                    println!("      {f}");
                }
            }
            println!("{} entries, {} failed", p.total, p.failed);
        }
    }
    if !report.cross_checks.is_empty() {
        println!("cross-checks:");
        for c in &report.cross_checks {
            let status = if c.pass { "pass" } else { "FAIL" };
            println!("  {status}  {}: {} vs {}", c.name, c.computed, c.predicted);
        }
    }
}

fn finish(report: &Report, json: &Option<PathBuf>) -> ExitCode {
    print_summary(report);
    let rendered = report.to_json();
    if let Some(path) = json {
        if let Err(e) = std::fs::write(path, &rendered) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(3);
        }
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_cli() -> ExitCode {
    let cli = Cli::parse();
    let outcome: Result<(Report, Option<PathBuf>), JobError> = match &cli.command {
        CliCommand::Corpus { path, json, seed } => {
            let seed = resolve_seed(*seed);
            let text = match path {
                Some(p) => match std::fs::read_to_string(p) {
                    Ok(t) => t,
                    Err(e) => {
                        eprintln!("error: cannot read {}: {e}", p.display());
                        return ExitCode::from(2);
                    }
                },
                None => corpus::STANDARD_CORPUS.to_string(),
            };
            corpus::run_corpus(&text, seed).map(|r| (r, json.clone()))
        }
        other => {
            let (command, args) = match other {
                CliCommand::Milnor(a) => (JobCommand::Milnor, a),
                CliCommand::Koszul(a) => (JobCommand::Koszul, a),
                CliCommand::Fibers(a) => (JobCommand::Fibers, a),
                CliCommand::Freeness(a) => (JobCommand::Freeness, a),
                CliCommand::Brieskorn(a) => (JobCommand::Brieskorn, a),
                CliCommand::Pairing(a) => (JobCommand::Pairing, a),
                CliCommand::Spectrum(a) => (JobCommand::Spectrum, a),
                CliCommand::Predict(a) => (JobCommand::Predict, a),
                CliCommand::Report(a) => (JobCommand::Report, a),
                CliCommand::Corpus { .. } => unreachable!(),
            };
            job_spec(command, args)
                .and_then(|spec| jobs::run(&spec))
                .map(|r| (r, args.json.clone()))
        }
    };
    match outcome {
        Ok((report, json)) => finish(&report, &json),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    // Internal invariant breaches surface as panics; map them to exit 4
    // with the panic text as the witness.
    match std::panic::catch_unwind(run_cli) {
        Ok(code) => code,
        Err(payload) => {
            let witness = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            let err = JobError::Internal(witness);
            eprintln!("internal invariant breach: {}", err.message());
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
