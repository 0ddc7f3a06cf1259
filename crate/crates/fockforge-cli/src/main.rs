use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fockforge::affine::graded_character;
use fockforge::fermion::MayaState;
use fockforge::geometry::{
    fixed_points, g_map, resolution_tangent, tangent_character, zk_fixed_tangent,
    TorusCharacter,
};
use fockforge::partition::{
    cell_color, from_core_quotient, is_k_regular, k_core, k_quotient,
    multipartitions_of, parse_partition, partitions_of, ChargeVector, Partition,
};
use fockforge::symfunc::{format_rat, Basis, SymElement};
use fockforge::verify::{run_all, run_suite, SuiteReport, VerifyConfig, SUITES};
use fockforge::{rat, Rat};

const DEFAULT_CAP: u32 = 14;

#[derive(Parser)]
#[command(
    name = "fockforge",
    version,
    about = "Exact-arithmetic Fock spaces, boson-fermion correspondence, and fixed-point combinatorics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite (exit 0 iff every identity holds)
    Verify(VerifyArgs),
    /// Compute a single object and print it
    Compute {
        #[command(subcommand)]
        what: ComputeCmd,
    },
    /// Tangent characters at all torus fixed points of M(r,n)
    Tangent(TangentArgs),
    /// Graded dimension table of a charge block
    Character(CharacterArgs),
    /// Check the k-core/k-quotient theorems up to a size bound
    QuotientCheck {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 12)]
        max: u32,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or "all"
    suite: String,
    /// Bound on total partition size / truncation degree
    #[arg(long)]
    degree: Option<u32>,
    /// Alias for --degree
    #[arg(long)]
    size: Option<u32>,
    /// Bound on |charge| per slot
    #[arg(long)]
    charges: Option<i64>,
    /// Bound on operator indices
    #[arg(long)]
    indices: Option<i64>,
    /// Number of colors
    #[arg(long)]
    r: Option<usize>,
    /// Cyclic group order for Z_k checks
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Shorthand for --format json
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum ComputeCmd {
    /// k-core of a partition
    KCore(CoreArgs),
    /// k-core and k-quotient of a partition
    KQuotient(CoreArgs),
    /// Maya (semi-infinite wedge) form of a charged partition, or the inverse
    Maya(MayaArgs),
    /// Tangent characters at the fixed points of M(r,n)
    Tangent(TangentArgs),
    /// Graded dimension table of a charge block
    Character(CharacterArgs),
    /// Image of a Schur function under the level-rank map g
    GMap(GMapArgs),
}

#[derive(Args)]
struct CoreArgs {
    #[arg(long)]
    k: u32,
    /// Partition as [a,b,c]
    #[arg(long)]
    partition: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct MayaArgs {
    /// Partition as [a,b,c]
    #[arg(long)]
    partition: Option<String>,
    #[arg(long, default_value_t = 0)]
    charge: i64,
    /// A state "charge=<m>; wedge=[i_0,...]" to decode instead
    #[arg(long)]
    maya: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TangentArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    n: u32,
    /// Framing charges l0,l1,...
    #[arg(long)]
    charges: String,
    /// Restrict to the Z_k-invariant part
    #[arg(long)]
    zk: Option<u32>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CharacterArgs {
    #[arg(long)]
    r: usize,
    /// Total charge of the block
    #[arg(long)]
    charge: i64,
    #[arg(long)]
    max_energy: u32,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GMapArgs {
    #[arg(long)]
    k: u32,
    /// Partition label of the Schur function, as [a,b,c]
    #[arg(long)]
    partition: String,
    #[arg(long)]
    json: bool,
}

fn degree_cap() -> Result<u32, String> {
    match std::env::var("FOCKFORGE_MAX_DEGREE") {
        Ok(s) => s
            .trim()
            .parse::<u32>()
            .map_err(|_| format!("invalid FOCKFORGE_MAX_DEGREE value: {s:?}")),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn check_cap(value: u32, what: &str) -> Result<(), String> {
    let cap = degree_cap()?;
    if value > cap {
        return Err(format!(
            "cap exceeded: {what} = {value} is above the configured cap {cap} \
             (set FOCKFORGE_MAX_DEGREE to raise it)"
        ));
    }
    Ok(())
}

fn parse_charges(s: &str, r: usize) -> Result<ChargeVector, String> {
    let entries: Result<Vec<i64>, _> = s
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect();
    let entries = entries.map_err(|_| format!("malformed charge list: {s:?}"))?;
    if entries.len() != r {
        return Err(format!(
            "expected {r} charges, got {} in {s:?}",
            entries.len()
        ));
    }
    Ok(ChargeVector::new(entries))
}

fn partition_arg(s: &str) -> Result<Partition, String> {
    parse_partition(s).map_err(|e| format!("malformed partition {s:?}: {e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Compute { what } => match what {
            ComputeCmd::KCore(a) => cmd_k_core(a),
            ComputeCmd::KQuotient(a) => cmd_k_quotient(a),
            ComputeCmd::Maya(a) => cmd_maya(a),
            ComputeCmd::Tangent(a) => cmd_tangent(a),
            ComputeCmd::Character(a) => cmd_character(a),
            ComputeCmd::GMap(a) => cmd_g_map(a),
        },
        Command::Tangent(a) => cmd_tangent(a),
        Command::Character(a) => cmd_character(a),
        Command::QuotientCheck { k, max } => cmd_quotient_check(k, max),
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let mut cfg = VerifyConfig::default();
    if let Some(d) = args.size.or(args.degree) {
        check_cap(d, "--degree")?;
        cfg.degree = d;
    }
    if let Some(c) = args.charges {
        cfg.charges = c.unsigned_abs().min(8) as i64;
    }
    if let Some(i) = args.indices {
        cfg.indices = i.unsigned_abs().min(16) as i64;
    }
    if let Some(r) = args.r {
        cfg.r = r;
    }
    if let Some(k) = args.k {
        cfg.k = k;
    }
    let reports: Vec<SuiteReport> = if args.suite == "all" {
        run_all(&cfg)
    } else {
        vec![run_suite(&args.suite, &cfg).ok_or_else(|| {
            format!(
                "unknown suite {:?}; available: {}, all",
                args.suite,
                SUITES.join(", ")
            )
        })?]
    };
    let all_ok = reports.iter().all(|r| r.all_passed());
    let format = if args.json { Format::Json } else { args.format };
    match format {
        Format::Json => {
            let v: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
            println!(
                "{}",
                serde_json::json!({ "passed": all_ok, "suites": v })
            );
        }
        Format::Csv => {
            println!("suite,check,passed,cases,detail");
            for r in &reports {
                for c in &r.checks {
                    println!(
                        "{},{},{},{},{}",
                        r.suite,
                        c.name.replace(',', ";"),
                        c.passed,
                        c.cases,
                        c.detail.replace(',', ";")
                    );
                }
            }
        }
        Format::Text => {
            for r in &reports {
                print!("{}", r.render_text());
            }
            println!("result: {}", if all_ok { "PASS" } else { "FAIL" });
        }
    }
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_k_core(args: CoreArgs) -> Result<ExitCode, String> {
    if args.k == 0 {
        return Err("k must be positive".into());
    }
    let lam = partition_arg(&args.partition)?;
    let core = k_core(&lam, args.k);
    if args.json {
        println!(
            "{}",
            serde_json::json!({
                "k": args.k,
                "partition": lam.parts(),
                "core": core.parts(),
            })
        );
    } else {
        println!("core={core}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_k_quotient(args: CoreArgs) -> Result<ExitCode, String> {
    if args.k == 0 {
        return Err("k must be positive".into());
    }
    let lam = partition_arg(&args.partition)?;
    let core = k_core(&lam, args.k);
    let quot = k_quotient(&lam, args.k);
    if args.json {
        let q: Vec<_> = quot.components().iter().map(|p| p.parts()).collect();
        println!(
            "{}",
            serde_json::json!({
                "k": args.k,
                "partition": lam.parts(),
                "core": core.parts(),
                "quotient": q,
            })
        );
    } else {
        println!("core={core}; quotient={quot}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_maya(args: MayaArgs) -> Result<ExitCode, String> {
    if let Some(text) = &args.maya {
        let state = MayaState::from_text(text).map_err(|e| e.to_string())?;
        if args.json {
            println!(
                "{}",
                serde_json::json!({
                    "charge": state.charge(),
                    "partition": state.partition().parts(),
                })
            );
        } else {
            println!("charge={}; partition={}", state.charge(), state.partition());
        }
        return Ok(ExitCode::SUCCESS);
    }
    let part = args
        .partition
        .as_deref()
        .ok_or("provide --partition (with --charge) or --maya")?;
    let lam = partition_arg(part)?;
    let state = MayaState::from_partition(lam, args.charge);
    if args.json {
        let head: Vec<i64> = (0..state.partition().len())
            .map(|j| state.entry(j))
            .collect();
        println!(
            "{}",
            serde_json::json!({ "charge": state.charge(), "wedge": head })
        );
    } else {
        println!("{}", state.to_text());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_tangent(args: TangentArgs) -> Result<ExitCode, String> {
    if args.r == 0 {
        return Err("r must be positive".into());
    }
    check_cap(args.n, "--n")?;
    let charges = parse_charges(&args.charges, args.r)?;
    if let Some(k) = args.zk {
        if k == 0 {
            return Err("k must be positive".into());
        }
    }
    let points = fixed_points(args.r, args.n);
    let mut rows: Vec<(String, TorusCharacter)> = Vec::new();
    for mp in &points {
        let mut chi = tangent_character(mp, &charges).map_err(|e| e.to_string())?;
        if let Some(k) = args.zk {
            chi = chi.zk_invariant_part(k);
        }
        rows.push((mp.to_string(), chi));
    }
    if args.json {
        let v: Vec<_> = rows
            .iter()
            .map(|(p, chi)| {
                serde_json::json!({ "fixed_point": p, "character": chi.to_json() })
            })
            .collect();
        println!(
            "{}",
            serde_json::json!({
                "r": args.r, "n": args.n,
                "charges": charges.entries(),
                "zk": args.zk,
                "fixed_points": v,
            })
        );
    } else {
        for (p, chi) in &rows {
            println!("{p}: {chi}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_character(args: CharacterArgs) -> Result<ExitCode, String> {
    if args.r == 0 {
        return Err("r must be positive".into());
    }
    check_cap(args.max_energy, "--max-energy")?;
    let table: BTreeMap<Rat, u64> =
        graded_character(args.r, args.charge, &rat(args.max_energy as i64));
    let format = if args.json { Format::Json } else { args.format };
    match format {
        Format::Json => {
            let rows: Vec<_> = table
                .iter()
                .map(|(e, d)| serde_json::json!({ "energy": format_rat(e), "dim": d }))
                .collect();
            println!(
                "{}",
                serde_json::json!({
                    "r": args.r,
                    "charge": args.charge,
                    "max_energy": args.max_energy,
                    "table": rows,
                })
            );
        }
        Format::Csv => {
            println!("energy,dimension");
            for (e, d) in &table {
                println!("{},{}", format_rat(e), d);
            }
        }
        Format::Text => {
            for (e, d) in &table {
                println!("energy={} dim={}", format_rat(e), d);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_g_map(args: GMapArgs) -> Result<ExitCode, String> {
    if args.k == 0 {
        return Err("k must be positive".into());
    }
    let lam = partition_arg(&args.partition)?;
    check_cap(lam.size(), "partition size")?;
    let x = SymElement::basis_element(lam.size(), Basis::Schur, lam)
        .map_err(|e| e.to_string())?;
    let image = g_map(&x, args.k).map_err(|e| e.to_string())?;
    if args.json {
        let terms: Vec<_> = image
            .terms()
            .map(|(labels, c)| {
                let l: Vec<_> = labels.iter().map(|p| p.parts()).collect();
                serde_json::json!({ "labels": l, "coeff": format_rat(c) })
            })
            .collect();
        println!(
            "{}",
            serde_json::json!({ "k": args.k, "basis": "schur", "terms": terms })
        );
    } else {
        for (labels, c) in image.terms() {
            let l: Vec<String> = labels.iter().map(|p| p.to_string()).collect();
            println!("{}*({})", format_rat(c), l.join(","));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_quotient_check(k: u32, max: u32) -> Result<ExitCode, String> {
    if k < 2 {
        return Err("k must be at least 2".into());
    }
    check_cap(max, "--max")?;
    let mut all_ok = true;
    for n in 0..=max {
        let mut checked = 0usize;
        let mut regular = 0usize;
        let mut ok = true;
        for lam in partitions_of(n) {
            checked += 1;
            let core = k_core(&lam, k);
            let quot = k_quotient(&lam, k);
            if core.size() + k * quot.total_size() != lam.size() {
                ok = false;
            }
            if from_core_quotient(&core, &quot, k).as_ref() != Ok(&lam) {
                ok = false;
            }
            let mut colors = vec![0u64; k as usize];
            for c in lam.cells() {
                colors[cell_color(c, k, 0) as usize] += 1;
            }
            let balanced = colors.iter().all(|&c| c == colors[0]);
            if core.is_empty() != balanced || is_k_regular(&lam, k) != core.is_empty() {
                ok = false;
            }
            if is_k_regular(&lam, k) {
                regular += 1;
                let lhs = zk_fixed_tangent(&lam, k).map_err(|e| e.to_string())?;
                if lhs != resolution_tangent(&quot, k) {
                    ok = false;
                }
            }
        }
        if n % k == 0 {
            let tuples = multipartitions_of(n / k, k as usize).len();
            if regular != tuples {
                ok = false;
            }
        } else if regular != 0 {
            ok = false;
        }
        println!(
            "n={n} partitions={checked} k_regular={regular} {}",
            if ok { "ok" } else { "FAIL" }
        );
        all_ok &= ok;
    }
    println!("result: {}", if all_ok { "PASS" } else { "FAIL" });
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
