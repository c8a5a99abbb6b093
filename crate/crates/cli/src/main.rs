//! `hullvol`: compute hull-volume functionals, run searches and verification
//! suites, and plot translation profiles.

mod body;
mod plot;
mod verify;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hullvol_core::functionals::{self, profile_tr, FunctionalValue, Maximizer};
use hullvol_core::geom2::FloatPolygon;
use hullvol_core::nd::{self, BodyN, OptOptions};
use hullvol_core::rational;
use hullvol_core::search::{self, Functional, SearchConfig};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use body::Body;

#[derive(Parser, Debug)]
#[command(name = "hullvol", version, about = "Volumes of convex hulls of a convex body and its moved copies")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Base seed for every random choice.
    #[arg(long, global = true, env = "HULLVOL_SEED", default_value_t = 0)]
    seed: u64,
    /// Output format; `json` prints a machine-readable report.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Output file.
    #[arg(long, global = true)]
    out: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Evaluate one functional on a body file.
    Compute {
        #[arg(long)]
        body: String,
        /// ctr, c0, c1, chyp or cylinder.
        #[arg(long)]
        functional: String,
        /// Accuracy target of numeric maximizations.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Coarse direction samples for nD maximizations.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Minimize a planar functional over convex m-gons.
    Search {
        #[arg(long)]
        m: usize,
        /// tr, c0 or c1.
        #[arg(long, default_value = "tr")]
        functional: String,
        #[arg(long, default_value_t = 20)]
        restarts: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Run a verification suite: thm1..thm5, corollaries, identities or all.
    Verify {
        suite: String,
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Sample the translation profile d(θ) w(θ⊥) of a planar body.
    Profile {
        #[arg(long)]
        body: String,
        #[arg(long, default_value_t = 256)]
        samples: usize,
    },
}

enum Failure {
    Usage(String),
    Parse(String),
    Verify,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Verify => 3,
        }
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(j) = cli.common.jobs {
        if j == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(1);
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
    let start = Instant::now();
    let result = match &cli.cmd {
        Cmd::Compute { body, functional, tol, samples } => compute(&cli.common, body, functional, *tol, *samples),
        Cmd::Search { m, functional, restarts, tol } => search(&cli.common, *m, functional, *restarts, *tol),
        Cmd::Verify { suite, samples } => verify(&cli.common, suite, *samples),
        Cmd::Profile { body, samples } => profile(&cli.common, body, *samples),
    };
    match result {
        Ok(results) => {
            emit_report(&cli.common, &args, start, results.clone());
            if results.get("pass") == Some(&Value::Bool(false)) {
                ExitCode::from(Failure::Verify.code())
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            match &f {
                Failure::Usage(m) => eprintln!("error: {m}"),
                Failure::Parse(m) => eprintln!("parse error: {m}"),
                Failure::Verify => {}
            }
            ExitCode::from(f.code())
        }
    }
}

fn emit_report(common: &Common, args: &[String], start: Instant, results: Value) {
    if common.format != Some(Format::Json) {
        return;
    }
    let echo: Vec<&String> = args.iter().skip(1).collect();
    let mut h = Sha256::new();
    for a in &echo {
        h.update(a.as_bytes());
        h.update([0u8]);
    }
    h.update(common.seed.to_le_bytes());
    let hash: String = h.finalize().iter().map(|b| format!("{b:02x}")).collect();
    let report = json!({
        "command": echo,
        "config_hash": hash,
        "seed": common.seed,
        "wall_time_s": start.elapsed().as_secs_f64(),
        "results": results,
    });
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable report"));
}

fn text(common: &Common) -> bool {
    common.format != Some(Format::Json)
}

fn load(path: &str) -> Result<Body, Failure> {
    body::load(path).map_err(Failure::Parse)
}

fn opt_options(common: &Common, tol: f64, samples: Option<usize>) -> OptOptions {
    OptOptions { coarse_samples: samples, tol, seed: common.seed, ..Default::default() }
}

fn exact_text(r: &rational::Rational) -> String {
    let s = rational::format(r);
    let s = if r.denom() == &1.into() { format!("{s}/1") } else { s };
    if s.len() <= 80 {
        s
    } else {
        format!("rational with {}-digit denominator", r.denom().to_string().len())
    }
}

fn planar_json(name: &str, v: &FunctionalValue, approx_tol: Option<f64>) -> Value {
    let maximizer = match &v.maximizer {
        Maximizer::Direction(d) => json!({"direction": [rational::format(&d.v.x), rational::format(&d.v.y)]}),
        Maximizer::Vertex(i) => json!({"vertex": i}),
        Maximizer::Line(l) => json!({"line": {"point": l.point, "angle": l.angle}}),
    };
    json!({
        "functional": name,
        "value": v.to_f64(),
        "exact_value": v.value.as_exact().map(rational::format),
        "exact": v.exact && approx_tol.is_none(),
        "exact_arithmetic": v.exact,
        "input_approximation_tol": approx_tol,
        "maximizer": maximizer,
    })
}

fn print_planar(name: &str, v: &FunctionalValue, approx_tol: Option<f64>, poly: &hullvol_core::geom2::ConvexPolygon) {
    match v.value.as_exact() {
        Some(r) => println!("{name} = {} (exact: {})", plot::sig15(v.to_f64()), exact_text(r)),
        None => println!("{name} = {}", plot::sig15(v.to_f64())),
    }
    if let Some(t) = approx_tol {
        println!("exact=false: vertices are rational approximations within {t:e}");
    }
    match &v.maximizer {
        Maximizer::Direction(d) => println!("maximizer: direction ({}, {})", rational::format(&d.v.x), rational::format(&d.v.y)),
        Maximizer::Vertex(i) => println!("maximizer: vertex {i} at {}", poly.vertex(*i)),
        Maximizer::Line(l) => {
            println!("maximizer: supporting line through ({}, {}) at angle {}", l.point[0], l.point[1], l.angle)
        }
    }
}

fn compute(common: &Common, path: &str, functional: &str, tol: f64, samples: Option<usize>) -> Result<Value, Failure> {
    let body = load(path)?;
    let f = functional.to_ascii_lowercase();
    match body {
        Body::Planar { poly, approx_tol } => {
            let value = match f.as_str() {
                "ctr" | "tr" | "c_tr" => ("c_tr", functionals::c_tr(&poly)),
                "c0" | "c_0" => ("c_0", functionals::c_0(&poly)),
                "c1" | "c_1" | "chyp" => {
                    if f == "chyp" {
                        eprintln!("note: in the plane hyperplane reflections are line reflections; computing c_1");
                    }
                    ("c_1", functionals::c_1(&poly, tol).map_err(usage)?)
                }
                "cylinder" => {
                    let pts: Vec<Vec<f64>> = poly.to_f64().iter().map(|p| p.to_vec()).collect();
                    let b = BodyN::polytope(&pts).map_err(usage)?;
                    return Ok(cylinder(common, &b, tol, samples));
                }
                other => return Err(usage(format!("unknown functional {other:?}"))),
            };
            if text(common) {
                print_planar(value.0, &value.1, approx_tol, &poly);
            }
            Ok(planar_json(value.0, &value.1, approx_tol))
        }
        Body::Nd(b) => {
            let opts = opt_options(common, tol, samples);
            let (name, r) = match f.as_str() {
                "ctr" | "tr" | "c_tr" => ("c_tr", nd::c_tr_nd(&b, &opts)),
                "c0" | "c_0" => ("c_0", nd::c_0_nd(&b, &opts)),
                "chyp" | "c_hyp" => ("c_hyp", nd::c_hyp_nd(&b, &opts)),
                "c1" | "c_1" if b.dim() == 2 => ("c_1", nd::c_hyp_nd(&b, &opts)),
                "c1" | "c_1" => {
                    return Err(usage(format!("c1 is line reflection; body has dimension {} (use chyp)", b.dim())))
                }
                "cylinder" => return Ok(cylinder(common, &b, tol, samples)),
                other => return Err(usage(format!("unknown functional {other:?}"))),
            };
            let r = r.map_err(usage)?;
            if text(common) {
                println!("{name} = {}", plot::sig15(r.value));
                println!("maximizer: direction {:?}", r.direction);
                println!("exact=false (numeric; {} coarse samples, refined={})", r.samples_used, r.refined);
            }
            Ok(json!({
                "functional": name,
                "value": r.value,
                "exact": false,
                "maximizer": {"direction": r.direction},
                "samples": r.samples_used,
            }))
        }
    }
}

fn cylinder(common: &Common, b: &BodyN, tol: f64, samples: Option<usize>) -> Value {
    let c = nd::cylinder_check(b, &opt_options(common, tol, samples));
    if text(common) {
        println!("cylinder max ratio = {} at {:?}", plot::sig15(c.max_right.value), c.max_right.direction);
        println!(
            "cylinder min ratio = {} at {:?}",
            plot::sig15(c.min_over_u_of_right.value),
            c.min_over_u_of_right.direction
        );
    }
    json!({
        "functional": "cylinder",
        "max_ratio": c.max_right.value,
        "max_direction": c.max_right.direction,
        "min_ratio": c.min_over_u_of_right.value,
        "min_direction": c.min_over_u_of_right.direction,
        "exact": false,
    })
}

fn search(common: &Common, m: usize, functional: &str, restarts: usize, tol: f64) -> Result<Value, Failure> {
    let f: Functional = functional.parse().map_err(usage)?;
    let mut cfg = SearchConfig::new(m, f);
    cfg.restarts = restarts;
    cfg.seed = common.seed;
    cfg.tol = tol;
    cfg.validate().map_err(usage)?;
    let open = m >= 6;
    if open {
        eprintln!("=== m = {m}: experimental value, no acceptance claim (open problem) ===");
    }
    let r = search::minimize_functional(&cfg).map_err(usage)?;
    let sides = search::side_deviation(&r.best);
    let rhombus = (f == Functional::C1 && m == 4).then_some(sides <= 1e-2);
    let equilateral = (f == Functional::C1 && m == 3).then_some(sides <= 1e-2);
    let exact = search::exact_vertices(&r.best);
    if let Some(path) = &common.out {
        let doc = body::polygon_document(&exact);
        std::fs::write(path, serde_json::to_string_pretty(&doc).expect("json") + "\n")
            .map_err(|e| usage(format!("{path}: {e}")))?;
    }
    if text(common) {
        println!("best {f} over {m}-gons: {}", plot::sig15(r.value));
        if m >= 4 {
            println!("regularity deviation: {:e}", r.regularity);
        }
        if let Some(flag) = rhombus {
            println!("rhombus: {flag} (side deviation {sides:e})");
        }
        if let Some(flag) = equilateral {
            println!("equilateral: {flag} (side deviation {sides:e})");
        }
        println!("restarts: {} (worst {})", r.per_restart.len(), plot::sig15(r.per_restart.last().map_or(f64::NAN, |p| p.1)));
        for v in r.best.vertices() {
            println!("  {} {}", plot::sig15(v[0]), plot::sig15(v[1]));
        }
    }
    Ok(json!({
        "m": m,
        "functional": f.to_string(),
        "value": r.value,
        "regularity": r.regularity,
        "side_deviation": sides,
        "rhombus": rhombus,
        "equilateral": equilateral,
        "open_problem": open,
        "per_restart": r.per_restart,
        "best": r.best.vertices(),
    }))
}

fn verify(common: &Common, suite: &str, samples: Option<usize>) -> Result<Value, Failure> {
    let opts = opt_options(common, 1e-9, samples);
    let checks = verify::run(suite, common.seed, &opts).map_err(usage)?;
    let pass = checks.iter().all(|c| c.pass);
    if text(common) {
        for c in &checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            println!("{tag} {:<12} {}: measured {}, expected {}", c.suite, c.name, c.measured, c.expected);
        }
        println!("{} of {} checks passed", checks.iter().filter(|c| c.pass).count(), checks.len());
    }
    Ok(json!({ "suite": suite, "pass": pass, "checks": checks }))
}

fn profile(common: &Common, path: &str, samples: usize) -> Result<Value, Failure> {
    let Body::Planar { poly, .. } = load(path)? else {
        return Err(usage("profile needs a planar body"));
    };
    if samples == 0 {
        return Err(usage("--samples must be positive"));
    }
    let rows = profile_tr(&poly, samples);
    let doc = match common.format {
        Some(Format::Svg) => Some(plot::svg(&rows, "translation profile d(θ) w(θ⊥)")),
        Some(Format::Json) => None,
        _ => Some(plot::csv(&rows)),
    };
    if let Some(doc) = doc {
        match &common.out {
            Some(p) => std::fs::write(p, doc).map_err(|e| usage(format!("{p}: {e}")))?,
            None => print!("{doc}"),
        }
    }
    let area = FloatPolygon::from_exact(&poly).area();
    Ok(json!({ "samples": samples, "area": area, "rows": rows }))
}
