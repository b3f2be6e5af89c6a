//! Workbench entry point: every subsystem behind one binary.
//!
//! Subcommands: poly, roots, family, enum, census, density, resilience,
//! verify. Exit codes: 0 success, 1 domain error, 2 usage error.

mod svg;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use wiener_lab::census::{
    all_real_census, double_root_census, max_imaginary_census, max_modulus_census,
    ratio_bound_check, tn_bracket_scan, ExecConfig,
};
use wiener_lab::density::{find_complex_root_tree, find_real_root_tree, DensityHit};
use wiener_lab::enumerate::enumerate_trees;
use wiener_lab::error::{Error, Result};
use wiener_lab::exact;
use wiener_lab::families::{
    make_broom, make_real_root_caterpillar, make_spider_star, make_tilde_tn, make_tn,
    make_tn_dprime, make_tn_prime, spider_distribution, FamilySpec, RealRootCaterpillarSpec,
};
use wiener_lab::io::{to_edge_list, to_graph6, tree_from_text};
use wiener_lab::poly::{parse_probability, resilience_mc, WienerPoly};
use wiener_lab::roots::{find_roots, RootReport, DEFAULT_TOL};
use wiener_lab::tree::{DistanceDistribution, Tree};
use wiener_lab::verify::{run_all, Level};

#[derive(Parser)]
#[command(
    name = "wiener-lab",
    version,
    about = "Wiener polynomials of trees: exact coefficients, root analysis, families, censuses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Wiener polynomial of a tree (from a file or a named family)
    Poly(PolyArgs),
    /// Complex roots of the reduced Wiener polynomial
    Roots(RootsArgs),
    /// Generate a family member and emit it
    Family(FamilyArgs),
    /// Stream all non-isomorphic trees of an order as graph6
    #[command(name = "enum")]
    Enumerate(EnumArgs),
    /// Exhaustive censuses over all trees of an order
    Census(CensusArgs),
    /// Find a tree with a Wiener root near a target
    Density(DensityArgs),
    /// Resilience W(T;p) with optional Monte Carlo cross-check
    Resilience(ResilienceArgs),
    /// Run the acceptance criteria
    Verify(VerifyArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(command: Command) -> Result<ExitCode> {
    match command {
        Command::Poly(args) => cmd_poly(args),
        Command::Roots(args) => cmd_roots(args),
        Command::Family(args) => cmd_family(args),
        Command::Enumerate(args) => cmd_enum(args),
        Command::Census(args) => cmd_census(args),
        Command::Density(args) => cmd_density(args),
        Command::Resilience(args) => cmd_resilience(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn default_jobs() -> usize {
    std::env::var("WIENER_LAB_JOBS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(1)
}

// ---------------------------------------------------------------------
// Family selection shared by poly / roots / family
// ---------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyKindArg {
    Broom,
    Spider,
    Tn,
    Tnp,
    Tnpp,
    Tilde,
    Cat,
}

#[derive(Args, Clone)]
struct FamilySelect {
    /// Order n (tn, tnp, tnpp, tilde) or leaf count (broom)
    #[arg(long)]
    n: Option<usize>,
    /// Path or arm edge count
    #[arg(long)]
    k: Option<usize>,
    /// Comma-separated hub leaf counts (spider)
    #[arg(long, value_delimiter = ',')]
    a: Option<Vec<u64>>,
    /// Caterpillar diameter
    #[arg(long = "D")]
    diameter: Option<usize>,
    /// Caterpillar base (t > 4 D^2)
    #[arg(long = "t")]
    base: Option<u64>,
    /// Caterpillar scale multiplier
    #[arg(long = "m")]
    scale: Option<u64>,
}

/// A generated family member: its exact distribution plus the explicit
/// tree when one is feasible to build.
struct FamilyTarget {
    label: String,
    order: BigInt,
    distribution: DistanceDistribution,
    tree: Option<Tree>,
}

fn require<T: Copy>(value: Option<T>, flag: &str, kind: &str) -> Result<T> {
    value.ok_or_else(|| Error::BadParam(format!("{kind} requires {flag}")))
}

fn build_family(kind: FamilyKindArg, sel: &FamilySelect) -> Result<FamilyTarget> {
    match kind {
        FamilyKindArg::Broom => {
            let k = require(sel.k, "--k", "broom")?;
            let n = require(sel.n, "--n", "broom")?;
            let tree = make_broom(k, n)?;
            Ok(FamilyTarget {
                label: FamilySpec::Broom {
                    path_edges: k,
                    leaves: n,
                }
                .to_string(),
                order: BigInt::from(tree.order()),
                distribution: tree.distance_distribution(),
                tree: Some(tree),
            })
        }
        FamilyKindArg::Spider => {
            let k = require(sel.k, "--k", "spider")?;
            let a = sel
                .a
                .clone()
                .ok_or_else(|| Error::BadParam("spider requires --a".into()))?;
            let big: Vec<BigInt> = a.iter().map(|&x| BigInt::from(x)).collect();
            let distribution = spider_distribution(&big, k)?;
            let order = BigInt::from(distribution.order());
            let tree = if distribution.order() <= 100_000 {
                let small: Vec<usize> = a.iter().map(|&x| x as usize).collect();
                Some(make_spider_star(&small, k)?)
            } else {
                None
            };
            Ok(FamilyTarget {
                label: FamilySpec::SpiderStar {
                    arm_leaves: big,
                    arm_edges: k,
                }
                .to_string(),
                order,
                distribution,
                tree,
            })
        }
        FamilyKindArg::Tn | FamilyKindArg::Tnp | FamilyKindArg::Tnpp | FamilyKindArg::Tilde => {
            let n = require(sel.n, "--n", "family")?;
            let (tree, label) = match kind {
                FamilyKindArg::Tn => (make_tn(n)?, FamilySpec::Tn { n }.to_string()),
                FamilyKindArg::Tnp => (make_tn_prime(n)?, FamilySpec::TnPrime { n }.to_string()),
                FamilyKindArg::Tnpp => {
                    (make_tn_dprime(n)?, FamilySpec::TnDoublePrime { n }.to_string())
                }
                _ => (make_tilde_tn(n)?, FamilySpec::TildeTn { n }.to_string()),
            };
            Ok(FamilyTarget {
                label,
                order: BigInt::from(n),
                distribution: tree.distance_distribution(),
                tree: Some(tree),
            })
        }
        FamilyKindArg::Cat => {
            let spec = RealRootCaterpillarSpec {
                diameter: require(sel.diameter, "--D", "caterpillar")?,
                base: require(sel.base, "--t", "caterpillar")?,
                scale: sel.scale.unwrap_or(1),
            };
            let cat = make_real_root_caterpillar(&spec)?;
            let distribution = cat.distance_distribution()?;
            let tree = cat.expand().ok();
            Ok(FamilyTarget {
                label: FamilySpec::RealRootCaterpillar { spec }.to_string(),
                order: cat.order(),
                distribution,
                tree,
            })
        }
    }
}

fn load_target(file: &Option<PathBuf>, family: &Option<FamilyKindArg>, sel: &FamilySelect) -> Result<FamilyTarget> {
    match (file, family) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)?;
            let tree = tree_from_text(&text)?;
            Ok(FamilyTarget {
                label: path.display().to_string(),
                order: BigInt::from(tree.order()),
                distribution: tree.distance_distribution(),
                tree: Some(tree),
            })
        }
        (None, Some(kind)) => build_family(*kind, sel),
        (Some(_), Some(_)) => Err(Error::BadParam(
            "give either a file or --family, not both".into(),
        )),
        (None, None) => Err(Error::BadParam("need a tree file or --family".into())),
    }
}

// ---------------------------------------------------------------------
// poly
// ---------------------------------------------------------------------

#[derive(Args)]
struct PolyArgs {
    /// Tree file (graph6 or edge list); alternative to --family
    file: Option<PathBuf>,
    #[arg(long, value_enum)]
    family: Option<FamilyKindArg>,
    #[command(flatten)]
    select: FamilySelect,
    /// Emit the reduced polynomial W/x
    #[arg(long)]
    reduced: bool,
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
}

fn poly_json(target: &FamilyTarget, poly: &WienerPoly) -> serde_json::Value {
    let coeffs: Vec<String> = poly.coeffs().iter().map(BigInt::to_string).collect();
    serde_json::json!({
        "n": order_json(&target.order),
        "diameter": target.distribution.diameter(),
        "reduced": poly.is_reduced(),
        "coeffs": coeffs,
        "wiener_index": poly.wiener_index().to_string(),
    })
}

fn order_json(order: &BigInt) -> serde_json::Value {
    match order.to_u64() {
        Some(v) if v < (1u64 << 53) => serde_json::json!(v),
        _ => serde_json::json!(order.to_string()),
    }
}

fn poly_text(poly: &WienerPoly) -> String {
    let mut terms = Vec::new();
    for (i, c) in poly.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = match i {
            0 => c.to_string(),
            1 => format!("{c} x"),
            _ => format!("{c} x^{i}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn cmd_poly(args: PolyArgs) -> Result<ExitCode> {
    let target = load_target(&args.file, &args.family, &args.select)?;
    let full = WienerPoly::from_distribution(&target.distribution);
    let poly = if args.reduced { full.reduce()? } else { full };
    if args.json {
        println!("{}", serde_json::to_string(&poly_json(&target, &poly)).unwrap());
    } else if args.csv {
        println!("power,coefficient");
        for (i, c) in poly.coeffs().iter().enumerate() {
            println!("{i},{c}");
        }
    } else {
        println!("# {}", target.label);
        println!("{}", poly_text(&poly));
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------
// roots
// ---------------------------------------------------------------------

#[derive(Args)]
struct RootsArgs {
    /// Tree file (graph6 or edge list); alternative to --family
    file: Option<PathBuf>,
    #[arg(long, value_enum)]
    family: Option<FamilyKindArg>,
    #[command(flatten)]
    select: FamilySelect,
    /// Residual tolerance for convergence
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Add an exact Sturm certificate for the real roots
    #[arg(long)]
    exact_real: bool,
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
    /// Write a scatter plot of the roots
    #[arg(long)]
    svg: Option<PathBuf>,
}

fn roots_json(
    target: &FamilyTarget,
    report: &RootReport,
    annulus: Option<&exact::Annulus>,
    cert: Option<&exact::SturmCertificate>,
) -> serde_json::Value {
    let roots: Vec<serde_json::Value> = report
        .roots
        .iter()
        .zip(report.residuals.iter())
        .map(|(z, r)| {
            serde_json::json!({
                "re": format!("{:.17e}", z.re),
                "im": format!("{:.17e}", z.im),
                "modulus": format!("{:.17e}", z.norm()),
                "residual": format!("{:.3e}", r),
            })
        })
        .collect();
    let mut value = serde_json::json!({
        "n": order_json(&target.order),
        "degree": report.roots.len(),
        "converged": report.converged,
        "iterations": report.iterations,
        "precision": 17,
        "roots": roots,
        "max_modulus": {
            "re": format!("{:.17e}", report.max_modulus.re),
            "im": format!("{:.17e}", report.max_modulus.im),
            "modulus": format!("{:.17e}", report.max_modulus.norm()),
        },
    });
    if let Some(annulus) = annulus {
        value["annulus"] = serde_json::json!({
            "inner": annulus.inner.to_string(),
            "outer": annulus.outer.to_string(),
        });
    }
    if let Some(cert) = cert {
        value["exact_real"] = serde_json::json!({
            "real_root_count": cert.real_root_count,
            "squarefree_part_degree": cert.squarefree_part_degree,
        });
    }
    value
}

fn cmd_roots(args: RootsArgs) -> Result<ExitCode> {
    let target = load_target(&args.file, &args.family, &args.select)?;
    let poly = WienerPoly::reduced_from_distribution(&target.distribution);
    let report = find_roots(&poly, args.tol)?;
    let annulus = exact::enestrom_kakeya(&poly).ok();
    let cert = if args.exact_real {
        Some(exact::sturm_real_root_count(
            &poly,
            exact::RatBound::NegInf,
            exact::RatBound::PosInf,
        )?)
    } else {
        None
    };
    if let Some(path) = &args.svg {
        let points: Vec<(f64, f64)> = report.roots.iter().map(|z| (z.re, z.im)).collect();
        let ring = annulus.as_ref().map(|a| {
            (
                a.inner.to_f64().unwrap_or(0.0),
                a.outer.to_f64().unwrap_or(1.0),
            )
        });
        std::fs::write(path, svg::root_scatter(&points, ring))?;
    }
    if args.csv {
        println!("re,im,modulus,residual");
        for (z, r) in report.roots.iter().zip(report.residuals.iter()) {
            println!("{:.17e},{:.17e},{:.17e},{:.3e}", z.re, z.im, z.norm(), r);
        }
    } else if args.json {
        println!(
            "{}",
            serde_json::to_string(&roots_json(&target, &report, annulus.as_ref(), cert.as_ref()))
                .unwrap()
        );
    } else {
        println!("# {} (degree {})", target.label, report.roots.len());
        for (z, r) in report.roots.iter().zip(report.residuals.iter()) {
            println!("{:>24.16e} {:>+24.16e}i  |z| = {:.12}  residual {:.2e}", z.re, z.im, z.norm(), r);
        }
        println!(
            "max modulus {:.12}; converged = {} in {} iterations",
            report.max_modulus.norm(),
            report.converged,
            report.iterations
        );
        if let Some(cert) = cert {
            println!(
                "exact: {} distinct real roots (squarefree degree {})",
                cert.real_root_count, cert.squarefree_part_degree
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------
// family
// ---------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmitKind {
    Graph6,
    EdgeList,
    Poly,
    Roots,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(value_enum)]
    kind: FamilyKindArg,
    #[command(flatten)]
    select: FamilySelect,
    #[arg(long, value_enum, default_value_t = EmitKind::Graph6)]
    emit: EmitKind,
}

fn cmd_family(args: FamilyArgs) -> Result<ExitCode> {
    let target = build_family(args.kind, &args.select)?;
    match args.emit {
        EmitKind::Graph6 | EmitKind::EdgeList => {
            let tree = target.tree.as_ref().ok_or_else(|| {
                Error::BadParam(format!(
                    "{} has order {}, too large to expand; use --emit poly or roots",
                    target.label, target.order
                ))
            })?;
            if args.emit == EmitKind::Graph6 {
                println!("{}", to_graph6(tree));
            } else {
                print!("{}", to_edge_list(tree));
            }
        }
        EmitKind::Poly => {
            let full = WienerPoly::from_distribution(&target.distribution);
            println!("{}", serde_json::to_string(&poly_json(&target, &full)).unwrap());
        }
        EmitKind::Roots => {
            let poly = WienerPoly::reduced_from_distribution(&target.distribution);
            let report = find_roots(&poly, DEFAULT_TOL)?;
            let annulus = exact::enestrom_kakeya(&poly).ok();
            println!(
                "{}",
                serde_json::to_string(&roots_json(&target, &report, annulus.as_ref(), None))
                    .unwrap()
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------
// enum
// ---------------------------------------------------------------------

#[derive(Args)]
struct EnumArgs {
    #[arg(long)]
    n: usize,
    /// First stream index to emit
    #[arg(long, default_value_t = 0)]
    start: usize,
    /// One past the last stream index to emit
    #[arg(long)]
    end: Option<usize>,
}

fn cmd_enum(args: EnumArgs) -> Result<ExitCode> {
    let mut stream = enumerate_trees(args.n)?;
    stream.skip_trees(args.start);
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let limit = args
        .end
        .map(|e| e.saturating_sub(args.start))
        .unwrap_or(usize::MAX);
    for tree in stream.take(limit) {
        writeln!(out, "{}", to_graph6(&tree))?;
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------
// census
// ---------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CensusKindArg {
    MaxMod,
    MaxIm,
    DoubleRoot,
    AllReal,
    RatioBound,
    Brackets,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(value_enum)]
    kind: CensusKindArg,
    /// Smallest order (diameter for all-real)
    #[arg(long)]
    n_min: usize,
    /// Largest order (diameter for all-real)
    #[arg(long)]
    n_max: usize,
    /// JSON-lines checkpoint file, one line per completed chunk
    #[arg(long)]
    out: Option<PathBuf>,
    /// Reuse completed chunks from --out
    #[arg(long)]
    resume: bool,
    #[arg(long, default_value_t = default_jobs())]
    jobs: usize,
    /// Trees per checkpointed chunk
    #[arg(long, default_value_t = 1000)]
    chunk: usize,
}

fn cmd_census(args: CensusArgs) -> Result<ExitCode> {
    let cfg = ExecConfig {
        jobs: args.jobs,
        chunk_size: args.chunk,
        checkpoint: args.out.clone(),
        resume: args.resume,
    };
    if args.n_min > args.n_max {
        return Err(Error::BadRange(format!(
            "--n-min {} exceeds --n-max {}",
            args.n_min, args.n_max
        )));
    }
    match args.kind {
        CensusKindArg::Brackets => {
            let report = tn_bracket_scan(args.n_min, args.n_max)?;
            println!("{}", serde_json::to_string(&report).unwrap());
            if !report.failures.is_empty() {
                return Ok(ExitCode::from(1));
            }
        }
        CensusKindArg::AllReal => {
            for d in args.n_min..=args.n_max {
                let record = all_real_census(d, &cfg)?;
                println!("{}", serde_json::to_string(&record).unwrap());
            }
        }
        _ => {
            for n in args.n_min..=args.n_max {
                match args.kind {
                    CensusKindArg::MaxMod => {
                        let record = max_modulus_census(n, &cfg)?;
                        println!("{}", serde_json::to_string(&record).unwrap());
                    }
                    CensusKindArg::MaxIm => {
                        let record = max_imaginary_census(n, &cfg)?;
                        println!("{}", serde_json::to_string(&record).unwrap());
                    }
                    CensusKindArg::DoubleRoot => {
                        let record = double_root_census(n, &cfg)?;
                        println!("{}", serde_json::to_string(&record).unwrap());
                    }
                    CensusKindArg::RatioBound => {
                        let record = ratio_bound_check(n, &cfg)?;
                        println!("{}", serde_json::to_string(&record).unwrap());
                        if !record.violations.is_empty() {
                            return Ok(ExitCode::from(1));
                        }
                    }
                    _ => unreachable!(),
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------
// density
// ---------------------------------------------------------------------

#[derive(Args)]
struct DensityArgs {
    #[command(subcommand)]
    which: DensityCommand,
}

#[derive(Subcommand)]
enum DensityCommand {
    /// Hit a negative real target with a broom root
    Real {
        #[arg(long, allow_hyphen_values = true)]
        target: f64,
        #[arg(long)]
        eps: f64,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
    },
    /// Hit a complex target with a spider-star root
    Complex {
        #[arg(long, allow_hyphen_values = true)]
        re: f64,
        #[arg(long, allow_hyphen_values = true)]
        im: f64,
        #[arg(long)]
        eps: f64,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
    },
}

fn family_json(spec: &FamilySpec) -> serde_json::Value {
    match spec {
        FamilySpec::Broom { path_edges, leaves } => serde_json::json!({
            "kind": "broom", "k": path_edges, "n": leaves,
        }),
        FamilySpec::SpiderStar {
            arm_leaves,
            arm_edges,
        } => serde_json::json!({
            "kind": "spider",
            "a": arm_leaves.iter().map(BigInt::to_string).collect::<Vec<_>>(),
            "k": arm_edges,
        }),
        other => serde_json::json!({ "kind": other.to_string() }),
    }
}

fn hit_json(hit: &DensityHit) -> serde_json::Value {
    serde_json::json!({
        "family": family_json(&hit.family),
        "achieved_root": {
            "re": format!("{:.17e}", hit.achieved_root.re),
            "im": format!("{:.17e}", hit.achieved_root.im),
        },
        "target": {
            "re": format!("{:.17e}", hit.target.re),
            "im": format!("{:.17e}", hit.target.im),
        },
        "error": format!("{:.6e}", hit.error),
        "residual": format!("{:.3e}", hit.residual),
        "evaluations": hit.evaluations,
        "precision": 17,
    })
}

fn cmd_density(args: DensityArgs) -> Result<ExitCode> {
    let hit = match args.which {
        DensityCommand::Real {
            target,
            eps,
            budget,
        } => find_real_root_tree(target, eps, budget)?,
        DensityCommand::Complex {
            re,
            im,
            eps,
            budget,
        } => find_complex_root_tree(Complex64::new(re, im), eps, budget)?,
    };
    println!("{}", serde_json::to_string(&hit_json(&hit)).unwrap());
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------
// resilience
// ---------------------------------------------------------------------

#[derive(Args)]
struct ResilienceArgs {
    /// Tree file (graph6 or edge list)
    file: PathBuf,
    /// Edge survival probability as a decimal string
    #[arg(long)]
    p: String,
    /// Run a Monte Carlo cross-check with this many trials
    #[arg(long)]
    mc_trials: Option<u64>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

/// Decimal expansion of a rational, up to `digits` fractional digits;
/// exact when the expansion terminates within the budget.
fn rational_decimal(q: &BigRational, digits: usize) -> (String, bool) {
    let negative = q.is_negative();
    let q = q.abs();
    let int_part = q.to_integer();
    let mut rem = q.numer() - &int_part * q.denom();
    let mut out = String::new();
    if negative && (!int_part.is_zero() || !rem.is_zero()) {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if rem.is_zero() {
        return (out, true);
    }
    out.push('.');
    let ten = BigInt::from(10);
    let mut exact = false;
    for _ in 0..digits {
        rem *= &ten;
        let digit = &rem / q.denom();
        out.push_str(&digit.to_string());
        rem -= digit * q.denom();
        if rem.is_zero() {
            exact = true;
            break;
        }
    }
    (out, exact)
}

fn cmd_resilience(args: ResilienceArgs) -> Result<ExitCode> {
    let text = std::fs::read_to_string(&args.file)?;
    let tree = tree_from_text(&text)?;
    let prob = parse_probability(&args.p)?;
    let poly = WienerPoly::of_tree(&tree);
    let value = poly.resilience(&prob)?;
    let (decimal, exact) = rational_decimal(&value, 30);
    let mut output = serde_json::json!({
        "n": tree.order(),
        "p": args.p.trim(),
        "resilience": decimal,
        "exact": format!("{}/{}", value.numer(), value.denom()),
        "decimal_exact": exact,
        "precision": 30,
    });
    if let Some(trials) = args.mc_trials {
        let p_f64 = prob.to_f64().unwrap();
        let mc = resilience_mc(&tree, p_f64, trials, args.seed)?;
        output["mc"] = serde_json::json!({
            "estimate": format!("{:.10e}", mc.estimate),
            "stderr": format!("{:.4e}", mc.stderr),
            "trials": trials,
            "seed": args.seed,
        });
    }
    println!("{}", serde_json::to_string(&output).unwrap());
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LevelArg {
    Fast,
    Full,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = LevelArg::Fast)]
    level: LevelArg,
    #[arg(long, default_value_t = default_jobs())]
    jobs: usize,
    /// Run a single criterion (1..=15) instead of the whole suite
    #[arg(long)]
    criterion: Option<usize>,
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let level = match args.level {
        LevelArg::Fast => Level::Fast,
        LevelArg::Full => Level::Full,
    };
    let results = match args.criterion {
        Some(id) => vec![wiener_lab::verify::run_criterion(id, level, args.jobs)?],
        None => run_all(level, args.jobs)?,
    };
    let mut all_pass = true;
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {:>2} ({}): {} [{} ms]",
            r.id, r.name, r.details, r.millis
        );
        all_pass &= r.passed;
    }
    if all_pass {
        println!("all {} criteria passed", results.len());
        Ok(ExitCode::SUCCESS)
    } else {
        println!("FAILURES present");
        Ok(ExitCode::from(1))
    }
}
