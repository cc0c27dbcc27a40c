//! Command-line front end: exact computation, minimum-zero
//! classification, verification sweeps, and table export.

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::json;

use stirling_padic::minzero;
use stirling_padic::oracle::{self, ClaimId, Profile, SweepReport, SweepSpec, Verdict};
use stirling_padic::output::{self, OutputRecord};
use stirling_padic::padic::{val_unit, val_unit_int, Prime, Valuation};
use stirling_padic::stirling;
use stirling_padic::{bernoulli, StirlingKind};

const CONFIG_ENV: &str = "STIRLING_PADIC_CONFIG";

const EXIT_VERIFY_FAILED: u8 = 3;
const EXIT_CONJECTURE_VIOLATION: u8 = 4;

#[derive(Parser)]
#[command(
    name = "stirling-padic",
    version,
    about = "Exact p-adic valuations and congruences of Stirling numbers",
    after_help = "The prime defaults to 2 everywhere. Verification ranges can be preset \
                  in a key=value config file given by --config or the STIRLING_PADIC_CONFIG \
                  environment variable; command-line flags override it."
)]
struct Cli {
    /// Prime p for valuations, residues and sweeps (default 2)
    #[arg(long, global = true)]
    p: Option<u64>,

    /// Config file with key=value lines (nmax, kmax, hmax, lmax, cmax, primes, witness)
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one exact value: S(n,k), s(n,k), B_n^(l) or B_n^(l)(x)
    Compute {
        kind: ComputeKind,
        /// Degree n
        n: u64,
        /// k for s1/s2, order l for bern/bernpoly
        #[arg(allow_negative_numbers = true)]
        arg: i64,
        /// Emit a JSON record instead of text
        #[arg(long)]
        json: bool,
    },
    /// Classify a Stirling number as minimum zero or not
    Classify {
        kind: ClassifyKind,
        n: u64,
        k: u64,
        /// Also compute the exact value and check the prediction against it
        #[arg(long)]
        witness: bool,
        /// Emit a JSON record instead of text
        #[arg(long)]
        json: bool,
    },
    /// Run verification sweeps; exits nonzero on any failure
    Verify {
        /// Single claim to check (e.g. EQ1.1, T2.4, L5.1)
        #[arg(long)]
        claim: Option<String>,
        /// Run every registered claim: quick or full
        #[arg(long)]
        profile: Option<Profile>,
        /// Override: triangle sweeps run to n <= nmax
        #[arg(long)]
        nmax: Option<u64>,
        /// Override: central sweeps run to k <= kmax
        #[arg(long)]
        kmax: Option<u64>,
        /// Override: prime-power exponent bound
        #[arg(long)]
        hmax: Option<u32>,
        /// Override: Bernoulli order bound |l| <= lmax
        #[arg(long)]
        lmax: Option<i64>,
        /// Override: conjecture multiplier bound c <= cmax
        #[arg(long)]
        cmax: Option<u64>,
        /// Write the machine-readable summary document here ('-' = stdout)
        #[arg(long)]
        json: Option<String>,
    },
    /// Export a triangle of values or valuations
    Table {
        kind: TableKind,
        /// Rows 0..=nmax (nmax >= 1)
        #[arg(long)]
        nmax: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ComputeKind {
    S1,
    S2,
    Bern,
    Bernpoly,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassifyKind {
    First,
    Second,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    S1,
    S2,
    #[value(name = "s1-nu")]
    S1Nu,
    #[value(name = "s2-nu")]
    S2Nu,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum TableFormat {
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let prime = Prime::new(cli.p.unwrap_or(2))
        .map_err(|e| anyhow::anyhow!("{e}"))?;
    match cli.command {
        Command::Compute { kind, n, arg, json } => cmd_compute(kind, n, arg, cli.p, prime, json),
        Command::Classify {
            kind,
            n,
            k,
            witness,
            json,
        } => cmd_classify(kind, n, k, prime, witness, json),
        Command::Verify {
            claim,
            profile,
            nmax,
            kmax,
            hmax,
            lmax,
            cmax,
            json,
        } => {
            let overrides = Overrides {
                p: cli.p,
                nmax,
                kmax,
                hmax,
                lmax,
                cmax,
                config: load_config(cli.config.as_deref())?,
            };
            cmd_verify(claim, profile, overrides, json)
        }
        Command::Table {
            kind,
            nmax,
            format,
            out,
        } => cmd_table(kind, nmax, prime, format, out),
    }
}

fn cmd_compute(
    kind: ComputeKind,
    n: u64,
    arg: i64,
    p_given: Option<u64>,
    p: Prime,
    json: bool,
) -> anyhow::Result<ExitCode> {
    let padic_prime = p_given.map(|_| p);
    match kind {
        ComputeKind::S1 | ComputeKind::S2 => {
            if arg < 0 {
                bail!("k must be non-negative, got {arg}");
            }
            let k = arg as u64;
            let (symbol, value) = match kind {
                ComputeKind::S1 => ("s", stirling::stirling1(n, k)),
                _ => ("S", stirling::stirling2(n, k)),
            };
            if json {
                let record = OutputRecord::new(
                    "compute",
                    json!({ "kind": symbol, "n": n, "k": k, "p": p_given }),
                    output::stirling_results(&value, padic_prime)?,
                );
                println!("{}", record.to_json());
            } else {
                println!("{symbol}({n},{k}) = {value}");
                if padic_prime.is_some() {
                    let vu = val_unit_int(&value, p);
                    println!("nu_{p} = {}", vu.valuation);
                    match vu.unit_residue {
                        Some(r) => println!("eps_{p} residue = {r}"),
                        None => println!("eps_{p} residue undefined (value is 0)"),
                    }
                }
            }
        }
        ComputeKind::Bern => {
            let value = bernoulli::bernoulli_number(n, arg);
            if json {
                let mut results = json!({ "value": value.to_string() });
                if padic_prime.is_some() {
                    if value.is_zero() {
                        results["nu"] = serde_json::Value::Null;
                        results["eps_residue"] = serde_json::Value::Null;
                    } else {
                        let vu = val_unit(&value, p);
                        results["nu"] = match vu.valuation {
                            Valuation::Finite(v) => json!(v),
                            Valuation::Infinite => serde_json::Value::Null,
                        };
                        results["eps_residue"] = json!(vu.unit_residue);
                    }
                }
                let record = OutputRecord::new(
                    "compute",
                    json!({ "kind": "bern", "n": n, "l": arg, "p": p_given }),
                    results,
                );
                println!("{}", record.to_json());
            } else {
                println!("B_{n}^({arg}) = {value}");
                if padic_prime.is_some() {
                    if value.is_zero() {
                        println!("nu_{p} = inf");
                    } else {
                        let vu = val_unit(&value, p);
                        println!("nu_{p} = {}", vu.valuation);
                        println!("eps_{p} residue = {}", vu.unit_residue.expect("nonzero"));
                    }
                }
            }
        }
        ComputeKind::Bernpoly => {
            let poly = bernoulli::bernoulli_poly(n, arg);
            if json {
                let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
                let record = OutputRecord::new(
                    "compute",
                    json!({ "kind": "bernpoly", "n": n, "l": arg, "p": p_given }),
                    json!({ "display": poly.to_string(), "coefficients": coeffs }),
                );
                println!("{}", record.to_json());
            } else {
                println!("B_{n}^({arg})(x) = {poly}");
                if padic_prime.is_some() {
                    let vals = bernoulli::coefficient_valuations(n, arg, p);
                    let shown: Vec<String> = vals
                        .iter()
                        .map(|(i, v)| format!("{i}:{v}"))
                        .collect();
                    println!("codegree:nu_{p} = {}", shown.join(" "));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(
    kind: ClassifyKind,
    n: u64,
    k: u64,
    p: Prime,
    witness: bool,
    json: bool,
) -> anyhow::Result<ExitCode> {
    let report = match kind {
        ClassifyKind::Second => minzero::classify_second(n, k, p, witness),
        ClassifyKind::First => minzero::classify_first(n, k, p, witness),
    }
    .map_err(|e| anyhow::anyhow!("{e}"))?;
    if json {
        let record = OutputRecord::new(
            "classify",
            json!({ "kind": report.kind, "n": n, "k": k, "p": p.get(), "witness": witness }),
            serde_json::to_value(&report)?,
        );
        println!("{}", record.to_json());
    } else {
        println!(
            "{} kind, n = {n}, k = {k}, p = {p}",
            match kind {
                ClassifyKind::First => "first",
                ClassifyKind::Second => "second",
            }
        );
        match report.r {
            Some(r) => println!("r = (n-k)/(p-1) = {r}"),
            None => println!("r absent: (p-1) does not divide n-k"),
        }
        if let Some(t) = report.binomial_test {
            println!("criterion binomial residue = {t}");
        }
        println!("minimum zero: {}", report.is_min_zero);
        if let (Some(v), Some(res)) = (report.predicted_valuation, report.predicted_unit_residue)
        {
            println!("predicted valuation = {v}");
            println!("predicted unit residue = {res}");
        }
        if witness {
            println!(
                "witnessed valuation = {}",
                report
                    .witnessed_valuation
                    .map_or("inf".to_string(), |v| v.to_string())
            );
            if let Some(res) = report.witnessed_unit_residue {
                println!("witnessed unit residue = {res}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

struct Overrides {
    p: Option<u64>,
    nmax: Option<u64>,
    kmax: Option<u64>,
    hmax: Option<u32>,
    lmax: Option<i64>,
    cmax: Option<u64>,
    config: HashMap<String, String>,
}

impl Overrides {
    /// defaults < config file < command-line flags
    fn apply(&self, spec: &mut SweepSpec) -> anyhow::Result<()> {
        if let Some(v) = self.config_u64("nmax")? {
            spec.ranges.n_max = v;
        }
        if let Some(v) = self.config_u64("kmax")? {
            spec.ranges.k_max = v;
        }
        if let Some(v) = self.config_u64("hmax")? {
            spec.ranges.h_max_p2 = v as u32;
            spec.ranges.h_max_odd = v as u32;
        }
        if let Some(v) = self.config_i64("lmax")? {
            spec.ranges.l_max = v;
        }
        if let Some(v) = self.config_u64("cmax")? {
            spec.ranges.c_max = v;
        }
        if let Some(primes) = self.config.get("primes") {
            spec.primes = primes
                .split(',')
                .map(|s| s.trim().parse::<u64>())
                .collect::<Result<Vec<_>, _>>()
                .context("config key 'primes' must be a comma-separated list of integers")?;
        }
        if let Some(w) = self.config.get("witness") {
            spec.witness = w
                .parse::<bool>()
                .context("config key 'witness' must be true or false")?;
        }

        if let Some(v) = self.nmax {
            spec.ranges.n_max = v;
        }
        if let Some(v) = self.kmax {
            spec.ranges.k_max = v;
        }
        if let Some(v) = self.hmax {
            spec.ranges.h_max_p2 = v;
            spec.ranges.h_max_odd = v;
        }
        if let Some(v) = self.lmax {
            spec.ranges.l_max = v;
        }
        if let Some(v) = self.cmax {
            spec.ranges.c_max = v;
        }
        if let Some(p) = self.p {
            // restrict to the requested prime when the claim supports it
            if spec.claim.default_primes().contains(&p) {
                spec.primes = vec![p];
            } else if spec.claim.default_primes() == [2] && p != 2 {
                bail!("claim {} is specific to p = 2", spec.claim.token());
            } else {
                spec.primes = vec![p];
            }
        }
        Ok(())
    }

    fn config_u64(&self, key: &str) -> anyhow::Result<Option<u64>> {
        self.config
            .get(key)
            .map(|v| {
                v.parse::<u64>()
                    .with_context(|| format!("config key '{key}' must be an integer"))
            })
            .transpose()
    }

    fn config_i64(&self, key: &str) -> anyhow::Result<Option<i64>> {
        self.config
            .get(key)
            .map(|v| {
                v.parse::<i64>()
                    .with_context(|| format!("config key '{key}' must be an integer"))
            })
            .transpose()
    }
}

fn load_config(path: Option<&std::path::Path>) -> anyhow::Result<HashMap<String, String>> {
    let path = match path {
        Some(p) => Some(p.to_path_buf()),
        None => std::env::var_os(CONFIG_ENV).map(PathBuf::from),
    };
    let Some(path) = path else {
        return Ok(HashMap::new());
    };
    let text = std::fs::read_to_string(&path)
        .with_context(|| format!("reading config file {}", path.display()))?;
    let mut map = HashMap::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!("config line {} is not key=value: {line:?}", idx + 1);
        };
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}

fn cmd_verify(
    claim: Option<String>,
    profile: Option<Profile>,
    overrides: Overrides,
    json_out: Option<String>,
) -> anyhow::Result<ExitCode> {
    let reports: Vec<SweepReport> = match (&claim, profile) {
        (Some(token), _) => {
            let claim = ClaimId::from_token(token)
                .with_context(|| format!("unknown claim id '{token}'"))?;
            let mut spec = SweepSpec::for_profile(claim, profile.unwrap_or(Profile::Full));
            overrides.apply(&mut spec)?;
            vec![oracle::run_sweep(&spec).map_err(|e| anyhow::anyhow!("{e}"))?]
        }
        (None, Some(profile)) => {
            let mut specs = Vec::new();
            for claim in ClaimId::ALL {
                let mut spec = SweepSpec::for_profile(claim, profile);
                // prime restrictions only apply to claims that allow them
                if let Some(p) = overrides.p {
                    if !spec.claim.default_primes().contains(&p) {
                        continue;
                    }
                }
                overrides.apply(&mut spec)?;
                specs.push(spec);
            }
            let mut reports = Vec::with_capacity(specs.len());
            for spec in &specs {
                let report = oracle::run_sweep(spec).map_err(|e| anyhow::anyhow!("{e}"))?;
                println!("{}", report.log_line());
                reports.push(report);
            }
            reports
        }
        (None, None) => bail!("verify needs --claim <id> or --profile quick|full"),
    };
    if claim.is_some() {
        for report in &reports {
            println!("{}", report.log_line());
            for failure in &report.failures {
                let inputs: Vec<String> = failure
                    .inputs
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                println!(
                    "  failure: {} expected={} observed={}",
                    inputs.join(" "),
                    failure.expected,
                    failure.observed
                );
            }
        }
    }

    let verdict = aggregate_verdict(&reports);
    println!(
        "verify: {} claims, {} failures, verdict {}",
        reports.len(),
        reports.iter().map(|r| r.failures.len()).sum::<usize>(),
        verdict
    );

    if let Some(dest) = json_out {
        let record = OutputRecord::new(
            "verify",
            json!({ "claim": claim, "profile": profile }),
            json!({ "verdict": verdict, "reports": reports }),
        );
        if dest == "-" {
            println!("{}", record.to_json());
        } else {
            std::fs::write(&dest, record.to_json())
                .with_context(|| format!("writing report to {dest}"))?;
        }
    }

    Ok(match verdict {
        Verdict::Pass => ExitCode::SUCCESS,
        Verdict::Fail => ExitCode::from(EXIT_VERIFY_FAILED),
        Verdict::ConjectureViolation => ExitCode::from(EXIT_CONJECTURE_VIOLATION),
    })
}

fn aggregate_verdict(reports: &[SweepReport]) -> Verdict {
    if reports.iter().any(|r| r.verdict() == Verdict::Fail) {
        Verdict::Fail
    } else if reports
        .iter()
        .any(|r| r.verdict() == Verdict::ConjectureViolation)
    {
        Verdict::ConjectureViolation
    } else {
        Verdict::Pass
    }
}

fn cmd_table(
    kind: TableKind,
    nmax: u64,
    p: Prime,
    format: TableFormat,
    out: Option<PathBuf>,
) -> anyhow::Result<ExitCode> {
    if nmax == 0 {
        bail!("--nmax must be at least 1");
    }
    let (stirling_kind, valuations) = match kind {
        TableKind::S1 => (StirlingKind::First, false),
        TableKind::S2 => (StirlingKind::Second, false),
        TableKind::S1Nu => (StirlingKind::First, true),
        TableKind::S2Nu => (StirlingKind::Second, true),
    };
    let text = if valuations {
        let rows = output::valuation_table(stirling_kind, nmax, p);
        match format {
            TableFormat::Csv => output::valuation_table_csv(&rows),
            TableFormat::Json => OutputRecord::new(
                "table",
                json!({ "kind": stirling_kind, "nu": true, "p": p.get(), "nmax": nmax }),
                json!({ "rows": output::valuation_table_json(&rows) }),
            )
            .to_json(),
        }
    } else {
        let rows = output::value_table(stirling_kind, nmax);
        match format {
            TableFormat::Csv => output::value_table_csv(&rows),
            TableFormat::Json => OutputRecord::new(
                "table",
                json!({ "kind": stirling_kind, "nu": false, "nmax": nmax }),
                json!({ "rows": output::value_table_json(&rows) }),
            )
            .to_json(),
        }
    };
    match out {
        Some(path) => std::fs::write(&path, text)
            .with_context(|| format!("writing table to {}", path.display()))?,
        None => {
            print!("{text}");
            if format == TableFormat::Json {
                println!();
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
