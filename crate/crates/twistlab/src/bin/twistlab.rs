//! `twistlab` CLI: JSON report on stdout, human-readable summary on
//! stderr. Exit codes: 0 all checks pass, 2 a derived assertion failed,
//! 3 input or hypothesis error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use std::process::ExitCode;
use twistlab::ainfinity::{bar_homology, build_model, build_truncated_bar, ModelKind};
use twistlab::graded::{finite_order_supertrace_audit, GradedMapJson};
use twistlab::grassmann::{involution_search, DivisorSpec};
use twistlab::picard_lefschetz::LatticeSpecJson;
use twistlab::pipeline::{certificate, ring_classification};
use twistlab::spectral_flow::randomized_crossing_trials;

const EXIT_ASSERTION: u8 = 2;
const EXIT_INPUT: u8 = 3;

#[derive(Parser)]
#[command(name = "twistlab", version, about = "Dehn-twist certificate toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Quadratic-growth certificate for the squared-twist word.
    Certificate(CertificateArgs),
    /// Truncated bar-complex homology for the two model algebras.
    Bar(BarArgs),
    /// Grassmannian involution and divisor checks.
    Grassmann {
        #[command(subcommand)]
        command: GrassmannCommand,
    },
    /// Spectral-flow crossing-parity verification.
    SpectralFlow {
        #[command(subcommand)]
        command: SpectralFlowCommand,
    },
    /// Supertrace audits for finite-order graded maps.
    Str {
        #[command(subcommand)]
        command: StrCommand,
    },
}

#[derive(Args)]
struct CertificateArgs {
    /// JSON lattice description (middle degree, pairing, classes, off-middle Euler term).
    #[arg(long)]
    model: std::path::PathBuf,
    /// Number of growth-table rows.
    #[arg(long = "k-max", default_value_t = 5)]
    k_max: u64,
    /// Unboundedness threshold for the witness k*.
    #[arg(long, default_value_t = 100)]
    threshold: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    /// ℂ[x]/x² with vanishing module actions.
    Formal,
    /// ℂ[x]/(x²−1) with sign-twisted module actions.
    Deformed,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignsArg {
    #[value(name = "++")]
    PlusPlus,
    #[value(name = "+-")]
    PlusMinus,
    #[value(name = "-+")]
    MinusPlus,
    #[value(name = "--")]
    MinusMinus,
}

impl SignsArg {
    fn eps(self) -> (i64, i64, &'static str) {
        match self {
            SignsArg::PlusPlus => (1, 1, "++"),
            SignsArg::PlusMinus => (1, -1, "+-"),
            SignsArg::MinusPlus => (-1, 1, "-+"),
            SignsArg::MinusMinus => (-1, -1, "--"),
        }
    }
}

#[derive(Args)]
struct BarArgs {
    #[arg(long, value_enum)]
    model: ModelArg,
    /// Module structure signs (ε_m, ε_n).
    #[arg(long, value_enum, default_value = "++", allow_hyphen_values = true)]
    signs: SignsArg,
    /// Truncation level of the bar complex.
    #[arg(long)]
    k: usize,
}

#[derive(Subcommand)]
enum GrassmannCommand {
    /// Enumerate fixed components of the involution on Gr(2p+1, 2q).
    Search {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
    },
    /// Classify HF(L,L) for a degree-d divisor of Gr(k,n).
    Check {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        /// Depth of the growth-path evidence table.
        #[arg(long = "k-max", default_value_t = 8)]
        k_max: usize,
    },
}

#[derive(Subcommand)]
enum SpectralFlowCommand {
    /// Randomized crossing-parity vs endpoint-determinant trials.
    Verify {
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long = "max-dim", default_value_t = 6)]
        max_dim: usize,
        #[arg(long = "tau-samples", default_value_t = 41)]
        tau_samples: usize,
        #[arg(long, default_value_t = 400)]
        steps: usize,
    },
}

#[derive(Subcommand)]
enum StrCommand {
    /// Check STr(M) = a·q⁰ with |a| ≤ dim for an order-k graded map.
    Audit {
        /// JSON graded map (block0/block1 over the Novikov field).
        #[arg(long)]
        input: std::path::PathBuf,
        /// Claimed finite order k.
        #[arg(long)]
        order: u32,
    },
}

fn emit<T: Serialize>(report: &T, summary: &str) {
    println!("{}", serde_json::to_string_pretty(report).expect("serializable report"));
    eprintln!("{summary}");
}

fn input_error(msg: &str) -> ExitCode {
    println!("{}", json!({ "error": msg }));
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_INPUT)
}

fn assertion_failure<T: Serialize>(report: &T, msg: &str) -> ExitCode {
    println!("{}", serde_json::to_string_pretty(report).expect("serializable report"));
    eprintln!("FAIL: {msg}");
    ExitCode::from(EXIT_ASSERTION)
}

fn run_certificate(args: CertificateArgs) -> ExitCode {
    let text = match std::fs::read_to_string(&args.model) {
        Ok(t) => t,
        Err(e) => return input_error(&format!("cannot read {}: {e}", args.model.display())),
    };
    let spec: LatticeSpecJson = match serde_json::from_str(&text) {
        Ok(s) => s,
        Err(e) => return input_error(&format!("malformed model JSON: {e}")),
    };
    match certificate(spec, args.k_max, args.threshold) {
        Ok(report) => {
            let last = report.growth.last().map(|r| r.lower_bound.clone()).unwrap_or_default();
            emit(
                &report,
                &format!(
                    "certificate: {} rows, final lower bound {}, witness k* = {} for threshold {}",
                    report.growth.len(),
                    last,
                    report.witness.k_star,
                    report.witness.threshold
                ),
            );
            ExitCode::SUCCESS
        }
        Err(e) => input_error(&e.to_string()),
    }
}

#[derive(Serialize)]
struct BarReport {
    model: String,
    signs: String,
    k: usize,
    generators: usize,
    homology_dim: usize,
    /// dim ≤ 2 for the deformed model, dim = k for the formal one.
    expected_bound_ok: bool,
}

fn run_bar(args: BarArgs) -> ExitCode {
    let (em, en, label) = args.signs.eps();
    let (kind, name) = match args.model {
        ModelArg::Formal => (ModelKind::FormalX2, "formal_x2"),
        ModelArg::Deformed => (ModelKind::DeformedX2m1, "deformed_x2m1"),
    };
    if args.k == 0 {
        return input_error("truncation level k must be at least 1");
    }
    let (a, m, n) = build_model(kind, em, en);
    let bar = match build_truncated_bar(&m, &a, &n, args.k) {
        Ok(b) => b,
        Err(e) => return input_error(&e.to_string()),
    };
    let dim = bar_homology(&bar);
    let expected_bound_ok = match kind {
        ModelKind::FormalX2 => dim == args.k,
        ModelKind::DeformedX2m1 => dim <= 2,
    };
    let report = BarReport {
        model: name.into(),
        signs: label.into(),
        k: args.k,
        generators: bar.generators.len(),
        homology_dim: dim,
        expected_bound_ok,
    };
    let summary = format!(
        "bar: model {name}, signs {label}, k = {}, dim H = {dim} ({} generators)",
        args.k,
        bar.generators.len()
    );
    if expected_bound_ok {
        emit(&report, &summary);
        ExitCode::SUCCESS
    } else {
        assertion_failure(&report, &format!("{summary}; homology dimension outside the derived bound"))
    }
}

fn run_grassmann(cmd: GrassmannCommand) -> ExitCode {
    match cmd {
        GrassmannCommand::Search { p, q } => match involution_search(p, q) {
            Ok(report) => {
                let summary = match report.violating_t {
                    Some(t) => format!(
                        "grassmann search: (p, q) = ({p}, {q}), unique violating component t = {t}"
                    ),
                    None => format!(
                        "grassmann search: (p, q) = ({p}, {q}), all {} components have negative excess",
                        report.all_components.len()
                    ),
                };
                emit(&report, &summary);
                ExitCode::SUCCESS
            }
            Err(e) => input_error(&e.to_string()),
        },
        GrassmannCommand::Check { k, n, d, k_max } => {
            let spec = match DivisorSpec::new(k, n, d) {
                Ok(s) => s,
                Err(e) => return input_error(&e.to_string()),
            };
            match ring_classification(spec, k_max) {
                Ok(report) => {
                    emit(
                        &report,
                        &format!(
                            "grassmann check: Gr({k},{n}) degree {d} → verdict {} via the {} path",
                            report.verdict, report.path
                        ),
                    );
                    ExitCode::SUCCESS
                }
                Err(e) => input_error(&e.to_string()),
            }
        }
    }
}

fn run_spectral_flow(cmd: SpectralFlowCommand) -> ExitCode {
    let SpectralFlowCommand::Verify { trials, seed, max_dim, tau_samples, steps } = cmd;
    if trials == 0 || max_dim < 2 || max_dim % 2 != 0 {
        return input_error("need trials ≥ 1 and an even max-dim ≥ 2");
    }
    let summary = randomized_crossing_trials(trials, seed, max_dim, tau_samples, steps);
    let line = format!(
        "spectral-flow: {}/{} trials agree (seed {seed}, dims ≤ {max_dim})",
        summary.agreements, summary.trials
    );
    if summary.agreements == summary.trials {
        emit(&summary, &line);
        ExitCode::SUCCESS
    } else {
        assertion_failure(&summary, &format!("{line}; crossing parity disagreed with endpoint determinant signs"))
    }
}

fn run_str(cmd: StrCommand) -> ExitCode {
    let StrCommand::Audit { input, order } = cmd;
    if order == 0 {
        return input_error("order must be at least 1");
    }
    let text = match std::fs::read_to_string(&input) {
        Ok(t) => t,
        Err(e) => return input_error(&format!("cannot read {}: {e}", input.display())),
    };
    let wire: GradedMapJson = match serde_json::from_str(&text) {
        Ok(w) => w,
        Err(e) => return input_error(&format!("malformed graded-map JSON: {e}")),
    };
    let map = match wire.into_map() {
        Ok(m) => m,
        Err(e) => return input_error(&e.to_string()),
    };
    match finite_order_supertrace_audit(&map, order) {
        Ok(audit) => {
            let line = format!(
                "str audit: order {order}, STr = {}, |a| = {} ≤ dim {}",
                audit.str_value, audit.abs_value, audit.dim_bound
            );
            if audit.passed() {
                emit(&audit, &line);
                ExitCode::SUCCESS
            } else {
                assertion_failure(&audit, &format!("{line}; supertrace audit failed"))
            }
        }
        Err(e) => input_error(&e.to_string()),
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Certificate(args) => run_certificate(args),
        Command::Bar(args) => run_bar(args),
        Command::Grassmann { command } => run_grassmann(command),
        Command::SpectralFlow { command } => run_spectral_flow(command),
        Command::Str { command } => run_str(command),
    }
}
