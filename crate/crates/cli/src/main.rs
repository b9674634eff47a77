//! `stabsym` command-line front end.
//!
//! Exit codes: 0 success, 1 a check failed (or a clean/verify request was
//! refused), 2 usage or parse error, 3 the distance search budget ran out.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use stabsym::code_io::{parse_code_with, parse_qubit_set, parse_vector, serialize_code};
use stabsym::field_linalg::{Backend, Field, Prime};
use stabsym::generation::{random_code, GeneratorConfig, SplitMix64};
use stabsym::stabilizer::{
    check_cleaning_identity, check_cleaning_regions, check_logical_space_dim, check_singleton,
    clean, g, is_correctable, verify_code, AnalysisReport, Outcome, SearchLimits, StabilizerCode,
    Verdict, VerifyOptions, Witness, CLEANING_IDENTITY, LEMMAS, LOGICAL_SPACE_DIM,
};
use stabsym::symplectic::PauliVector;
use stabsym::Error;

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_LIMIT: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "stabsym",
    version,
    about = "Analyze stabilizer codes as isotropic subspaces of F_p^{2n}"
)]
struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Largest weight the distance search may reach (default: n).
    #[arg(long, global = true, value_name = "W")]
    max_weight: Option<usize>,

    /// Cap on the total number of candidate vectors in the distance search.
    #[arg(long, global = true, value_name = "CANDIDATES")]
    budget: Option<u128>,

    /// Row-reduction kernel used for p = 2.
    #[arg(long, global = true, value_enum, default_value_t = BackendArg::Packed)]
    backend: BackendArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BackendArg {
    Packed,
    Generic,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Packed => Backend::Packed,
            BackendArg::Generic => Backend::Generic,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report n, k, d, the Singleton slack and a minimum-weight logical.
    Analyze {
        /// Code file, or '-' for stdin.
        file: String,
    },
    /// Decide whether an erasure set is correctable.
    Erasure {
        file: String,
        /// Qubit set, e.g. `1,3-5` or `empty` (1-based).
        #[arg(long)]
        set: String,
    },
    /// Print g(M), g(M^c) and check g(M) + g(M^c) = 2k.
    Gprofile {
        file: String,
        /// Every subset M of the qubits.
        #[arg(long, conflicts_with = "set", required_unless_present = "set")]
        all: bool,
        #[arg(long)]
        set: Option<String>,
        /// Largest n accepted with --all.
        #[arg(long, default_value_t = 16)]
        cap: usize,
    },
    /// Move a logical operator off an erased region.
    Clean {
        file: String,
        /// Integer row (2n entries) or, for p = 2, a Pauli string.
        #[arg(long)]
        logical: String,
        #[arg(long)]
        erase: String,
    },
    /// Write a random [[n, k]] code over F_p.
    Random {
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of transvections (default 5n).
        #[arg(long)]
        rounds: Option<usize>,
        /// Output file; the code goes to stdout when omitted or '-'.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also compute the distance.
        #[arg(long)]
        analyze: bool,
    },
    /// Run every check on one code, or on COUNT random codes.
    Verify {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        file: Option<String>,
        #[arg(long, value_name = "COUNT")]
        random: Option<usize>,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long)]
        n: Option<usize>,
        /// Fixed k; drawn uniformly from 0..=n per code when omitted.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug)]
struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceLimit { .. } => EXIT_LIMIT,
            Error::NotLogical | Error::NotCleanable => EXIT_FAIL,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

/// What a command produced: text lines, the JSON object, and an exit code.
struct Output {
    text: String,
    json: Value,
    code: u8,
}

struct Ctx {
    backend: Backend,
    limits: SearchLimits,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        backend: cli.backend.into(),
        limits: SearchLimits {
            max_weight: cli.max_weight,
            max_candidates: cli.budget,
            parallel: true,
        },
    };
    let result = match cli.command {
        Command::Analyze { file } => analyze(&ctx, &file),
        Command::Erasure { file, set } => erasure(&ctx, &file, &set),
        Command::Gprofile {
            file,
            all,
            set,
            cap,
        } => gprofile(&ctx, &file, all, set.as_deref(), cap),
        Command::Clean {
            file,
            logical,
            erase,
        } => clean_cmd(&ctx, &file, &logical, &erase),
        Command::Random {
            p,
            n,
            k,
            seed,
            rounds,
            out,
            analyze,
        } => random(&ctx, p, n, k, seed, rounds, out, analyze),
        Command::Verify {
            file,
            random,
            p,
            n,
            k,
            seed,
        } => match (file, random) {
            (_, Some(count)) => verify_random(&ctx, count, p, n, k, seed),
            (Some(file), None) => verify_file(&ctx, &file, seed),
            (None, None) => Err(CliError::usage("verify needs FILE or --random COUNT")),
        },
    };

    match result {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            let written = if cli.json {
                writeln!(stdout, "{}", out.json)
            } else {
                write!(stdout, "{}", out.text)
            };
            if written.is_err() {
                return ExitCode::from(EXIT_USAGE);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({ "error": e.message, "exit": e.code }));
            }
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::usage(format!("cannot read stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::usage(format!("cannot read {path}: {e}")))
    }
}

fn load(ctx: &Ctx, path: &str) -> Result<StabilizerCode, CliError> {
    let text = read_input(path)?;
    parse_code_with(&text, ctx.backend).map_err(|e| CliError::usage(format!("{path}: {e}")))
}

fn vector_lines(out: &mut String, label: &str, v: &PauliVector) {
    writeln!(out, "{label} g {v}").unwrap();
    if let Some(letters) = v.to_pauli_string() {
        writeln!(out, "{label} P {letters}").unwrap();
    }
}

fn witness_lines(out: &mut String, w: &Witness) {
    match w {
        Witness::Vector(v) => vector_lines(out, "  witness", v),
        Witness::Set(s) => writeln!(out, "  witness E={s}").unwrap(),
        Witness::Pair { a, b } => writeln!(out, "  witness A={a} B={b}").unwrap(),
    }
}

fn verdict_line(out: &mut String, name: &str, v: &Verdict) {
    writeln!(out, "{} {name}: {}", v.outcome.label(), v.detail).unwrap();
    if v.outcome == Outcome::Fail {
        if let Some(w) = &v.witness {
            witness_lines(out, w);
        }
    }
}

fn headline(report: &AnalysisReport) -> String {
    match (report.d, report.slack) {
        (Some(d), Some(slack)) => format!("n={} k={} d={d} slack={slack}", report.n, report.k),
        _ => format!("n={} k={} d=NoLogicals", report.n, report.k),
    }
}

fn limit_json(code: &StabilizerCode, lower_bound: usize, verdicts: Value) -> Value {
    json!({
        "n": code.n(),
        "k": code.k(),
        "d": Value::Null,
        "d_lower_bound": lower_bound,
        "slack": Value::Null,
        "verdicts": verdicts,
        "witness": Value::Null,
        "status": "resource_limit",
    })
}

fn analyze(ctx: &Ctx, path: &str) -> Result<Output, CliError> {
    let code = load(ctx, path)?;
    let report = match check_singleton(&code, &ctx.limits) {
        Ok(r) => r,
        Err(Error::ResourceLimit { lower_bound }) => {
            return Ok(Output {
                text: format!("n={} k={} d>{lower_bound}\n", code.n(), code.k()),
                json: limit_json(&code, lower_bound, json!({})),
                code: EXIT_LIMIT,
            });
        }
        Err(e) => return Err(e.into()),
    };
    let mut text = headline(&report);
    text.push('\n');
    if let Some(w) = &report.witness {
        vector_lines(&mut text, "witness", w);
    }
    for (name, v) in report.ordered_verdicts() {
        verdict_line(&mut text, name, v);
    }
    let code_out = if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_FAIL
    };
    let mut json = serde_json::to_value(&report).expect("report serializes");
    json["status"] = json!("ok");
    Ok(Output {
        text,
        json,
        code: code_out,
    })
}

fn erasure(ctx: &Ctx, path: &str, set_text: &str) -> Result<Output, CliError> {
    let code = load(ctx, path)?;
    let set = parse_qubit_set(set_text, code.n())?;
    let res = is_correctable(&code, &set)?;
    let g_e = g(&code, &set)?;
    let mut text = format!(
        "E={set}\ncorrectable: {}\ng={g_e}\n",
        if res.correctable { "yes" } else { "no" }
    );
    if let Some(w) = &res.witness {
        vector_lines(&mut text, "witness", w);
    }
    Ok(Output {
        text,
        json: json!({
            "n": code.n(),
            "k": code.k(),
            "set": set,
            "correctable": res.correctable,
            "g": g_e,
            "witness": res.witness,
        }),
        code: EXIT_OK,
    })
}

fn gprofile(
    ctx: &Ctx,
    path: &str,
    all: bool,
    set_text: Option<&str>,
    cap: usize,
) -> Result<Output, CliError> {
    let code = load(ctx, path)?;
    let n = code.n();
    let regions = if all {
        if n > cap.min(63) {
            return Err(Error::CapExceeded { n, cap }.into());
        }
        (0u64..1 << n)
            .map(|mask| stabsym::symplectic::QubitSet::from_mask(n, mask))
            .collect()
    } else {
        vec![parse_qubit_set(set_text.unwrap_or("empty"), n)?]
    };

    let mut text = String::new();
    let mut rows = Vec::with_capacity(regions.len());
    let mut all_ok = true;
    for m in &regions {
        let chk = check_cleaning_identity(&code, m)?;
        let ok = chk.holds();
        all_ok &= ok;
        writeln!(
            text,
            "M={} g={} g_c={} sum={} 2k={} {}",
            chk.region,
            chk.g,
            chk.g_complement,
            chk.g + chk.g_complement,
            chk.two_k,
            if ok { "OK" } else { "FAIL" }
        )
        .unwrap();
        rows.push(json!({
            "set": chk.region,
            "g": chk.g,
            "g_c": chk.g_complement,
            "sum": chk.g + chk.g_complement,
            "ok": ok,
        }));
    }
    Ok(Output {
        text,
        json: json!({
            "n": n,
            "k": code.k(),
            "two_k": 2 * code.k(),
            "regions": rows,
            "all_ok": all_ok,
        }),
        code: if all_ok { EXIT_OK } else { EXIT_FAIL },
    })
}

fn clean_cmd(ctx: &Ctx, path: &str, logical: &str, erase: &str) -> Result<Output, CliError> {
    let code = load(ctx, path)?;
    let l = parse_vector(logical, code.prime(), code.n())?;
    let m = parse_qubit_set(erase, code.n())?;
    let out = clean(&code, &l, &m).map_err(|e| {
        let mut err = CliError::from(e.clone());
        err.message = match e {
            Error::NotLogical => format!(
                "{logical} is not a logical operator: it fails to commute with some stabilizer"
            ),
            Error::NotCleanable => format!(
                "{logical} cannot be moved off {m}: the region supports a nontrivial logical"
            ),
            _ => err.message,
        };
        err
    })?;
    let mut text = String::new();
    vector_lines(&mut text, "cleaned", &out.cleaned);
    vector_lines(&mut text, "stabilizer", &out.stabilizer);
    Ok(Output {
        text,
        json: json!({
            "n": code.n(),
            "k": code.k(),
            "erase": m,
            "logical": l,
            "cleaned": out.cleaned,
            "stabilizer": out.stabilizer,
        }),
        code: EXIT_OK,
    })
}

fn field_for(ctx: &Ctx, p: u64) -> Result<Field, CliError> {
    Ok(Field::with_backend(Prime::new(p)?, ctx.backend))
}

#[allow(clippy::too_many_arguments)]
fn random(
    ctx: &Ctx,
    p: u64,
    n: usize,
    k: usize,
    seed: u64,
    rounds: Option<usize>,
    out: Option<PathBuf>,
    analyze: bool,
) -> Result<Output, CliError> {
    let cfg = GeneratorConfig {
        field: field_for(ctx, p)?,
        n,
        k,
        seed,
        transvection_rounds: rounds,
    };
    let code = random_code(&cfg)?;
    let file = format!(
        "# random code p={p} n={n} k={k} seed={seed} rounds={}\n{}",
        cfg.rounds(),
        serialize_code(&code)
    );

    let mut summary = format!("n={} k={}", code.n(), code.k());
    let mut json = json!({ "n": code.n(), "k": code.k() });
    let mut exit = EXIT_OK;
    if analyze {
        match check_singleton(&code, &ctx.limits) {
            Ok(report) => {
                summary = headline(&report);
                json["d"] = json!(report.d);
                json["slack"] = json!(report.slack);
                json["witness"] = json!(report.witness);
            }
            Err(Error::ResourceLimit { lower_bound }) => {
                write!(summary, " d>{lower_bound}").unwrap();
                json["d"] = Value::Null;
                json["d_lower_bound"] = json!(lower_bound);
                exit = EXIT_LIMIT;
            }
            Err(e) => return Err(e.into()),
        }
    }
    summary.push('\n');

    let text = match out.as_ref().filter(|p| p.as_os_str() != "-") {
        Some(path) => {
            fs::write(path, &file)
                .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
            json["path"] = json!(path.display().to_string());
            summary
        }
        None => {
            // keep stdout a valid code file
            eprint!("{summary}");
            json["code"] = json!(file);
            file
        }
    };
    Ok(Output {
        text,
        json,
        code: exit,
    })
}

fn verify_options(ctx: &Ctx, seed: u64) -> VerifyOptions {
    VerifyOptions {
        limits: ctx.limits,
        seed,
        ..VerifyOptions::default()
    }
}

/// Checks that need no distance, for reporting after a budget overrun.
fn partial_verdicts(
    code: &StabilizerCode,
    opts: &VerifyOptions,
) -> Result<Vec<(&'static str, Verdict)>, CliError> {
    Ok(vec![
        (LOGICAL_SPACE_DIM, check_logical_space_dim(code)),
        (
            CLEANING_IDENTITY,
            check_cleaning_regions(
                code,
                opts.cleaning_exhaustive_max_n,
                opts.cleaning_samples,
                opts.seed,
            )?,
        ),
    ])
}

fn verify_file(ctx: &Ctx, path: &str, seed: u64) -> Result<Output, CliError> {
    let code = load(ctx, path)?;
    let opts = verify_options(ctx, seed);
    match verify_code(&code, &opts) {
        Ok(report) => {
            let mut text = headline(&report);
            text.push('\n');
            for (name, v) in report.ordered_verdicts() {
                verdict_line(&mut text, name, v);
            }
            let passed = report.all_passed();
            let mut json = serde_json::to_value(&report).expect("report serializes");
            json["all_passed"] = json!(passed);
            Ok(Output {
                text,
                json,
                code: if passed { EXIT_OK } else { EXIT_FAIL },
            })
        }
        Err(Error::ResourceLimit { lower_bound }) => {
            let partial = partial_verdicts(&code, &opts)?;
            let mut text = format!("n={} k={} d>{lower_bound}\n", code.n(), code.k());
            let mut verdicts = serde_json::Map::new();
            let mut failed = false;
            for (name, v) in &partial {
                verdict_line(&mut text, name, v);
                failed |= !v.passed();
                verdicts.insert(
                    name.to_string(),
                    serde_json::to_value(v).expect("verdict serializes"),
                );
            }
            for name in LEMMAS
                .iter()
                .filter(|n| partial.iter().all(|(p, _)| p != *n))
            {
                writeln!(
                    text,
                    "LIMIT {name}: needs d, search stopped at weight {lower_bound}"
                )
                .unwrap();
            }
            Ok(Output {
                text,
                json: limit_json(&code, lower_bound, Value::Object(verdicts)),
                code: if failed { EXIT_FAIL } else { EXIT_LIMIT },
            })
        }
        Err(e) => Err(e.into()),
    }
}

#[derive(Default, Clone, Copy)]
struct Tally {
    pass: usize,
    vacuous: usize,
    fail: usize,
}

fn verify_random(
    ctx: &Ctx,
    count: usize,
    p: u64,
    n: Option<usize>,
    k: Option<usize>,
    seed: u64,
) -> Result<Output, CliError> {
    let n = n.ok_or_else(|| CliError::usage("verify --random needs --n"))?;
    if let Some(k) = k {
        if k > n {
            return Err(Error::InvalidK { k, n }.into());
        }
    }
    let field = field_for(ctx, p)?;
    let mut rng = SplitMix64::new(seed);
    let mut tallies = [Tally::default(); LEMMAS.len()];
    let mut all_pass = 0usize;
    let mut limited = 0usize;
    let mut failures = Vec::new();
    let mut text = String::new();

    for i in 0..count {
        let code_seed = rng.next_u64();
        let code_k = match k {
            Some(k) => k,
            None => rng.below(n as u64 + 1) as usize,
        };
        let code = random_code(&GeneratorConfig::new(field, n, code_k, code_seed))?;
        let report = match verify_code(&code, &verify_options(ctx, code_seed)) {
            Ok(r) => r,
            Err(Error::ResourceLimit { lower_bound }) => {
                limited += 1;
                writeln!(
                    text,
                    "code {i} (seed {code_seed}, k={code_k}): d>{lower_bound}"
                )
                .unwrap();
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        for (slot, name) in LEMMAS.iter().enumerate() {
            let v = &report.verdicts[*name];
            let t = &mut tallies[slot];
            match v.outcome {
                Outcome::Pass => t.pass += 1,
                Outcome::Vacuous => t.vacuous += 1,
                Outcome::Fail => t.fail += 1,
            }
        }
        if report.all_passed() {
            all_pass += 1;
        } else {
            writeln!(
                text,
                "code {i} (seed {code_seed}, k={code_k}): {}",
                headline(&report)
            )
            .unwrap();
            for (name, v) in report.ordered_verdicts().filter(|(_, v)| !v.passed()) {
                verdict_line(&mut text, name, v);
            }
            failures.push(json!({
                "index": i,
                "seed": code_seed,
                "report": report,
            }));
        }
    }

    let mut summary = serde_json::Map::new();
    for (name, t) in LEMMAS.iter().zip(&tallies) {
        let label = if t.fail > 0 { "FAIL" } else { "PASS" };
        writeln!(
            text,
            "{label} {name}: {} pass, {} vacuous, {} fail",
            t.pass, t.vacuous, t.fail
        )
        .unwrap();
        summary.insert(
            name.to_string(),
            json!({ "pass": t.pass, "vacuous": t.vacuous, "fail": t.fail }),
        );
    }
    writeln!(
        text,
        "{count} random codes (p={p}, n={n}, seed={seed}): {all_pass} all-pass, {} failing, {limited} over budget",
        failures.len()
    )
    .unwrap();

    let code = if !failures.is_empty() {
        EXIT_FAIL
    } else if limited > 0 {
        EXIT_LIMIT
    } else {
        EXIT_OK
    };
    Ok(Output {
        text,
        json: json!({
            "n": n,
            "k": k,
            "p": p,
            "count": count,
            "seed": seed,
            "all_pass": all_pass,
            "over_budget": limited,
            "verdicts": summary,
            "failures": failures,
        }),
        code,
    })
}
