//! Command-line interface for constructing two-block group-algebra codes,
//! computing their parameters and distances, decomposing them into
//! double-coset components, and enumerating inequivalent codes.

use std::fs::File;
use std::io::{BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tbga::code::TwoBlockCode;
use tbga::distance::{
    exact_dx, exact_dz, random_dx_upper, random_dz_upper, RandomOptions,
};
use tbga::enumerate::{enumerate, verify_golden_rows, DistancePolicy, EnumerationJob, GoldenRow};
use tbga::error::Result;
use tbga::field::PrimeField;
use tbga::parse::{parse_algebra_elem, parse_group_spec, parse_poly};
use tbga::poly::gb_dimension;
use tbga::report::{emit, CodeReport, Format};

#[derive(Parser)]
#[command(
    name = "tbga",
    about = "Two-block group-algebra quantum CSS codes: parameters, distances, enumeration"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build one code and print its full parameter record as JSON.
    Params {
        /// Group spec: C36, D6, M(5,8,4), C4xC2, perm:(1,2,3);(1,2)(3,4), table:PATH
        group: String,
        /// Element a, e.g. "1 + r^28"
        a: String,
        /// Element b, e.g. "1 + r^9 + r^18 + r^12 + r^29 + r^14"
        b: String,
        #[arg(long, default_value_t = 2)]
        field: u64,
        /// log2 of the exact-enumeration vector budget
        #[arg(long, default_value_t = 26)]
        exact_budget: u32,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Also scan pairwise row sums in randomized trials
        #[arg(long)]
        scan_pairs: bool,
    },
    /// Enumerate inequivalent connected codes over a group.
    Enumerate {
        group: String,
        #[arg(long)]
        wa: usize,
        #[arg(long)]
        wb: usize,
        #[arg(long, default_value_t = 2)]
        field: u64,
        /// Drop codes whose check graph is disconnected
        #[arg(long)]
        connected_only: bool,
        #[arg(long, default_value_t = 1)]
        kmin: usize,
        /// Emit every canonical code, not one per (k, d)
        #[arg(long)]
        no_dedup: bool,
        #[arg(long, default_value = "jsonl")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 26)]
        exact_budget: u32,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Show the double-coset components of a code.
    Decompose {
        group: String,
        a: String,
        b: String,
        #[arg(long, default_value_t = 2)]
        field: u64,
    },
    /// Dimension of the generalized-bicycle code GB[a(x), b(x)] of length 2l.
    Gbdim {
        /// Circulant size l
        l: usize,
        /// Polynomial a(x), e.g. "1 + x^28"
        a: String,
        /// Polynomial b(x)
        b: String,
        #[arg(long, default_value_t = 2)]
        field: u64,
    },
    /// Verify a JSONL dataset of published code parameters.
    Verify {
        dataset: PathBuf,
        #[arg(long, default_value_t = 26)]
        exact_budget: u32,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Cmd::Params {
            group,
            a,
            b,
            field,
            exact_budget,
            trials,
            seed,
            scan_pairs,
        } => {
            let g = parse_group_spec(&group)?;
            let f = PrimeField::new(field)?;
            let ae = parse_algebra_elem(&a, &g, f)?;
            let be = parse_algebra_elem(&b, &g, f)?;
            let code = TwoBlockCode::build(ae, be)?;
            let sp = code.structure_params();
            let components = code.component_cosets().len();
            let p = f.modulus();
            let fits = |dim: usize| tbga::distance::within_budget(p, dim, exact_budget);
            let dim_z = code.n() - code.hx().rank();
            let dim_x = code.n() - code.hz().rank();
            let (dx, dz, used_trials) = if fits(dim_z) && fits(dim_x) {
                (
                    exact_dx(code.hx(), code.hz(), exact_budget)?,
                    exact_dz(code.hx(), code.hz(), exact_budget)?,
                    0,
                )
            } else {
                let opts = RandomOptions { scan_pairs };
                (
                    random_dx_upper(code.hx(), code.hz(), trials, seed, opts),
                    random_dz_upper(code.hx(), code.hz(), trials, seed, opts),
                    trials,
                )
            };
            let report = CodeReport::from_code(
                &group,
                &code,
                &sp,
                components,
                Some(&dx),
                Some(&dz),
                used_trials,
                seed,
            );
            println!("{}", serde_json::to_string(&report)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Enumerate {
            group,
            wa,
            wb,
            field,
            connected_only,
            kmin,
            no_dedup,
            format,
            out,
            exact_budget,
            trials,
            seed,
        } => {
            let f = PrimeField::new(field)?;
            let mut job = EnumerationJob::new(&group, f, wa, wb)?;
            job.connected_only = connected_only;
            job.k_min = kmin;
            job.dedup_by_params = !no_dedup;
            job.policy = DistancePolicy {
                exact_budget_log2: exact_budget,
                trials,
                seed,
                scan_pairs: false,
            };
            let reports = enumerate(&job);
            let format: Format = format.parse()?;
            match out {
                Some(path) => emit(&reports, format, File::create(path)?)?,
                None => emit(&reports, format, std::io::stdout().lock())?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Decompose { group, a, b, field } => {
            let g = parse_group_spec(&group)?;
            let f = PrimeField::new(field)?;
            let ae = parse_algebra_elem(&a, &g, f)?;
            let be = parse_algebra_elem(&b, &g, f)?;
            let code = TwoBlockCode::build(ae, be)?;
            let comps = code.components();
            let mut out = std::io::stdout().lock();
            writeln!(
                out,
                "n = {}, k = {}, components = {}",
                code.n(),
                code.dimension(),
                comps.len()
            )?;
            for (i, c) in comps.iter().enumerate() {
                let words: Vec<&str> = c.coset.iter().map(|&x| g.word(x)).collect();
                writeln!(
                    out,
                    "component {}: n = {}, k = {}, coset = {{{}}}",
                    i,
                    c.n(),
                    c.dimension(),
                    words.join(", ")
                )?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Gbdim { l, a, b, field } => {
            let f = PrimeField::new(field)?;
            let pa = parse_poly(&a, l, f)?;
            let pb = parse_poly(&b, l, f)?;
            println!("{}", gb_dimension(&pa, &pb, l));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            dataset,
            exact_budget,
            trials,
            seed,
        } => {
            let reader = BufReader::new(File::open(&dataset)?);
            let mut rows: Vec<GoldenRow> = Vec::new();
            for line in std::io::BufRead::lines(reader) {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                rows.push(serde_json::from_str(&line)?);
            }
            let policy = DistancePolicy {
                exact_budget_log2: exact_budget,
                trials,
                seed,
                scan_pairs: false,
            };
            let outcomes = verify_golden_rows(&rows, &policy);
            let mut failures = 0usize;
            for o in &outcomes {
                let status = if o.pass { "pass" } else { "FAIL" };
                println!(
                    "[{status}] {} LP[{}, {}] [[{},{},{}]]: {}",
                    o.row.group, o.row.a, o.row.b, o.row.n, o.row.k, o.row.d, o.detail
                );
                if !o.pass {
                    failures += 1;
                }
            }
            println!("{} rows, {} failures", outcomes.len(), failures);
            Ok(if failures == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}
