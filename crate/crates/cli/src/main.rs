use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use injekt::constructions::{self as cons, Family, FamilyParams};
use injekt::exactalg::{q_from_str, q_to_string};
use injekt::graphgadget as gg;
use injekt::morphism::{self, Morphism};
use injekt::sepinv::{self, InvariantSet};
use injekt::suite::{self, SuiteConfig};
use injekt::tensors::{self, RationalCurveP3, SecantMode, Tensor222n};
use injekt::Q;

#[derive(Parser)]
#[command(name = "injekt", version, about = "Construct and check injective morphisms into projective space")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Leave timestamps and timings out of reports.
    #[arg(long, global = true)]
    no_timestamp: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a family member and write its morphism JSON.
    Construct(ConstructArgs),
    /// Collision search plus decoder round trips on a morphism file.
    Verify(VerifyArgs),
    /// Decode one image point.
    Decode(DecodeArgs),
    /// Rank decision for a 2x2x(m+1) tensor.
    Rank2(Rank2Args),
    /// Is a point of P^3 on a secant line of a rational curve?
    SecantCurve(SecantArgs),
    /// Checks on the graph gadget.
    Gadget(GadgetArgs),
    /// Separation checks for invariants of a cyclic group action.
    Sepinv(SepinvArgs),
    /// Run the acceptance criteria.
    Suite(SuiteArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Print the family table instead.
    #[arg(long)]
    list: bool,
    #[arg(long, required_unless_present = "list")]
    family: Option<String>,
    #[arg(long, value_delimiter = ',')]
    weights: Vec<u64>,
    #[arg(long, value_delimiter = ',')]
    dims: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    degrees: Vec<u32>,
    #[arg(long, value_delimiter = ',')]
    dvec: Vec<u32>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<u32>,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    morphism: PathBuf,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    height: i64,
}

#[derive(Args)]
struct DecodeArgs {
    #[arg(long)]
    morphism: PathBuf,
    /// Image coordinates, comma separated rationals.
    #[arg(long)]
    image: String,
}

#[derive(Args)]
struct Rank2Args {
    #[arg(long)]
    tensor: PathBuf,
}

#[derive(Args)]
struct SecantArgs {
    #[arg(long)]
    curve: PathBuf,
    /// Comma separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    point: String,
    /// `rational` or `modular`.
    #[arg(long, default_value = "rational")]
    mode: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GadgetCheck {
    All,
    Dims,
    Flattening,
    Theorem,
    Annihilation,
}

#[derive(Args)]
struct GadgetArgs {
    #[arg(long)]
    m: usize,
    #[arg(long, value_enum, default_value_t = GadgetCheck::All)]
    check: GadgetCheck,
    #[arg(long, default_value_t = 1_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    height: i64,
    /// Also write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct SepinvArgs {
    #[arg(long)]
    k: u64,
    #[arg(long, value_delimiter = ',')]
    weights: Vec<u64>,
    /// A JSON file, or one of `E`, `F`, `control`, `monomials:<deg>`.
    #[arg(long)]
    set: String,
    #[arg(long, default_value_t = 100_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Primes to work over; three defaults above 10^6 otherwise.
    #[arg(long, value_delimiter = ',')]
    primes: Vec<u64>,
}

#[derive(Args)]
struct SuiteArgs {
    /// Criterion numbers or keys, comma separated.
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
    /// Smaller samples.
    #[arg(long)]
    quick: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Extra rows: verify these morphism files too.
    #[arg(long)]
    morphism: Vec<PathBuf>,
    #[arg(long, default_value_t = 1_000)]
    morphism_trials: u64,
}

/// The outcome of one command.
struct Report {
    json: Value,
    text: String,
    violation: bool,
}

fn read_json(path: &Path) -> Result<Value> {
    let s = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&s).with_context(|| format!("parsing {}", path.display()))
}

fn parse_rationals(s: &str) -> Result<Vec<Q>> {
    Ok(s.split(',').map(q_from_str).collect::<injekt::Result<Vec<_>>>()?)
}

fn qs(v: &[Q]) -> Vec<String> {
    v.iter().map(q_to_string).collect()
}

fn construct(a: &ConstructArgs) -> Result<Report> {
    if a.list {
        let rows: Vec<Value> = cons::family_table()
            .iter()
            .map(|r| {
                json!({"family": r.family.id(), "params": r.params, "source": r.source, "target": r.target,
                       "decoder": r.decoder, "claim": r.claim})
            })
            .collect();
        let text = cons::family_table()
            .iter()
            .map(|r| format!("{:<16} {:<16} {:<18} -> {:<24} decoder: {}\n    {}", r.family.id(), r.params, r.source, r.target, r.decoder, r.claim))
            .collect::<Vec<_>>()
            .join("\n");
        return Ok(Report { json: json!({"families": rows}), text, violation: false });
    }
    let family = Family::parse(a.family.as_deref().unwrap_or_default())?;
    let params = FamilyParams {
        dims: a.dims.clone(),
        degrees: a.degrees.clone(),
        weights: a.weights.clone(),
        dvec: a.dvec.clone(),
        k: a.k,
        m: a.m,
        n: a.n,
        d: a.d,
    };
    let m = cons::build(family, &params)?;
    let claim = cons::family_table().into_iter().find(|r| r.family == family).map_or("", |r| r.claim);
    let body = m.to_json();
    let summary = json!({
        "family": family.id(),
        "label": m.label,
        "source_dimension": m.source.dimension(),
        "ambient_dimension": m.ambient_dim(),
        "sections": m.sections.len(),
        "decoder": m.decoder,
        "claim": claim,
    });
    let text = format!(
        "{}: {} sections, P^{} from a {}-dimensional source\n{}",
        m.label,
        m.sections.len(),
        m.ambient_dim(),
        m.source.dimension(),
        claim
    );
    match &a.out {
        Some(path) => {
            let s = serde_json::to_string_pretty(&body)?;
            std::fs::write(path, s + "\n").with_context(|| format!("writing {}", path.display()))?;
            let mut json = summary;
            json["out"] = json!(path.display().to_string());
            Ok(Report { json, text, violation: false })
        }
        None => Ok(Report { json: body, text, violation: false }),
    }
}

fn load_morphism(path: &Path) -> Result<Morphism> {
    Ok(Morphism::from_json(&read_json(path)?)?)
}

fn verify(a: &VerifyArgs, with_time: bool) -> Result<Report> {
    let m = load_morphism(&a.morphism)?;
    let r = morphism::verify(&m, a.trials, a.seed, a.height);
    let text = format!(
        "{}: {} pairs, {} collisions, {} base-locus hits, {} scaling failures, {} of {} round trips failed; evidence {}",
        r.label,
        r.trials,
        r.collisions.len(),
        r.base_locus_hits.len(),
        r.scaling_failures.len(),
        r.roundtrip_failures.len(),
        r.roundtrip_trials,
        r.evidence.as_str()
    );
    Ok(Report { json: r.to_json(with_time), text, violation: !r.is_clean() })
}

fn decode(a: &DecodeArgs) -> Result<Report> {
    let m = load_morphism(&a.morphism)?;
    let z = parse_rationals(&a.image)?;
    let d = m.decode(&z)?;
    let shown = d.to_string();
    let json = match &d {
        morphism::Decoded::Point(p) => json!({"point": p.to_json()}),
        morphism::Decoded::PowerCoordinates(v) => json!({"power_coordinates": qs(v)}),
    };
    Ok(Report { json, text: shown, violation: false })
}

fn rank2(a: &Rank2Args) -> Result<Report> {
    let t = Tensor222n::<Q>::from_json(&read_json(&a.tensor)?)?;
    let d = t.rank_decision();
    let ok = d.verify(&t);
    let mut json = tensors::rank_decision_json(&d);
    json["flattening_rank"] = json!(t.flattening_rank());
    json["witness_verified"] = json!(ok);
    let text = format!("{} (flattening rank {}), witness verified: {}", d.name(), t.flattening_rank(), ok);
    Ok(Report { json, text, violation: !ok })
}

fn secant_curve(a: &SecantArgs) -> Result<Report> {
    let c = RationalCurveP3::from_json(&read_json(&a.curve)?)?;
    let p = parse_rationals(&a.point)?;
    let mode = SecantMode::parse(&a.mode)?;
    let v = tensors::point_on_secant(&c, &p, mode)?;
    let mut json = v.to_json();
    json["point"] = json!(qs(&p));
    json["mode"] = json!(a.mode);
    Ok(Report { text: format!("[{}]: {}", qs(&p).join(":"), v.name()), json, violation: false })
}

fn gadget(a: &GadgetArgs) -> Result<Report> {
    if a.m == 0 {
        bail!("--m must be at least 1");
    }
    let want = |c: GadgetCheck| a.check == GadgetCheck::All || a.check == c;
    let mut json = json!({"m": a.m, "trials": a.trials, "seed": a.seed, "height": a.height});
    let mut lines = Vec::new();
    let mut violation = false;
    let (g, w) = gg::build_gadget::<Q>(a.m)?;
    if want(GadgetCheck::Dims) {
        let (d1, d2, d) = w.dims();
        let ok = (d1, d2, d) == (a.m, a.m - 1, 2 * a.m - 1);
        violation |= !ok;
        json["dims"] = json!({"w1": d1, "w2": d2, "w": d, "direct_sum": d1 + d2 == d, "ok": ok});
        lines.push(format!("dim W1 = {d1}, dim W2 = {d2}, dim W = {d}"));
    }
    if want(GadgetCheck::Flattening) {
        let bad = suite::flattening_failures(&g, a.trials, a.seed);
        violation |= bad > 0;
        json["flattening"] = json!({"checked": a.trials, "failures": bad});
        lines.push(format!("flattening correspondence: {bad} failures in {}", a.trials));
    }
    if want(GadgetCheck::Theorem) {
        let r = gg::check_theorem_samples(a.m, a.trials, a.seed, a.height)?;
        violation |= !r.is_clean();
        lines.push(format!("theorem samples clean: {}", r.is_clean()));
        json["theorem"] = r.to_json();
    }
    if want(GadgetCheck::Annihilation) {
        let r = gg::check_annihilation(a.m, &cons::p1p1pm_sections(a.m))?;
        violation |= !r.ok();
        lines.push(format!("sections annihilate W: {}", r.ok()));
        json["annihilation"] = r.to_json();
    }
    json["clean"] = json!(!violation);
    if let Some(path) = &a.report {
        std::fs::write(path, serde_json::to_string_pretty(&json)? + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(Report { json, text: lines.join("\n"), violation })
}

fn load_set(name: &str, k: u64, weights: &[u64]) -> Result<InvariantSet> {
    let set = match name {
        "E" => sepinv::z6_six_element_set(),
        "F" => sepinv::z6_generators(),
        "control" => sepinv::z3_control(),
        s if s.starts_with("monomials:") => {
            let deg: u32 = s["monomials:".len()..].parse::<u32>()?;
            sepinv::invariant_monomials(k, weights, deg)
        }
        path => InvariantSet::from_json(&read_json(Path::new(path))?)?,
    };
    set.validate(k, weights)?;
    Ok(set)
}

fn sepinv_cmd(a: &SepinvArgs, with_time: bool) -> Result<Report> {
    let set = load_set(&a.set, a.k, &a.weights)?;
    let primes = (!a.primes.is_empty()).then_some(a.primes.as_slice());
    let reps = sepinv::separates_over_primes(a.k, &a.weights, &set, primes, a.trials, a.seed)?;
    let violation = reps.iter().any(|r| !r.is_clean());
    let text = reps
        .iter()
        .map(|r| {
            format!(
                "p = {}: {} pairs, {} separation violations, {} invariance violations",
                r.p,
                r.pairs_checked,
                r.separation_violations.len(),
                r.invariance_violations.len()
            )
        })
        .collect::<Vec<_>>()
        .join("\n");
    let json = json!({
        "k": a.k,
        "weights": a.weights,
        "set": a.set,
        "trials": a.trials,
        "seed": a.seed,
        "evidence": "F_p points only",
        "reports": reps.iter().map(|r| r.to_json(with_time)).collect::<Vec<_>>(),
        "clean": !violation,
    });
    Ok(Report { json, text, violation })
}

fn suite_cmd(a: &SuiteArgs, with_time: bool) -> Result<Report> {
    let mut only = Vec::new();
    for s in &a.only {
        match suite::parse_criterion(s) {
            Some(id) => only.push(id),
            None => bail!("unknown criterion {s:?}"),
        }
    }
    let mut cfg = if a.quick { SuiteConfig::quick() } else { SuiteConfig::full() };
    cfg.seed = a.seed;
    let results = suite::run_suite(&only, &cfg);
    let mut rows: Vec<Value> = results.iter().map(|r| r.to_json(with_time)).collect();
    let mut lines: Vec<String> = results.iter().map(|r| r.line()).collect();
    let mut violation = results.iter().any(|r| !r.passed);
    for path in &a.morphism {
        // a broken file fails its own row only
        let (passed, detail) = match Morphism::from_json(&read_json(path).unwrap_or(Value::Null)) {
            Ok(m) => {
                let r = morphism::verify(&m, a.morphism_trials, cfg.seed, cfg.height);
                (r.is_clean(), format!("{} collisions, {} round-trip failures", r.collisions.len(), r.roundtrip_failures.len()))
            }
            Err(e) => (false, format!("unreadable morphism: {e}")),
        };
        violation |= !passed;
        let name = format!("verify {}", path.display());
        lines.push(format!("extra [{}] {name}: {detail}", if passed { "PASS" } else { "FAIL" }));
        rows.push(json!({"id": Value::Null, "name": name, "passed": passed, "detail": detail}));
    }
    Ok(Report {
        json: json!({"seed": cfg.seed, "quick": a.quick, "criteria": rows, "passed": !violation}),
        text: lines.join("\n"),
        violation,
    })
}

fn run(cli: &Cli) -> Result<Report> {
    let with_time = !cli.no_timestamp;
    match &cli.cmd {
        Cmd::Construct(a) => construct(a),
        Cmd::Verify(a) => verify(a, with_time),
        Cmd::Decode(a) => decode(a),
        Cmd::Rank2(a) => rank2(a),
        Cmd::SecantCurve(a) => secant_curve(a),
        Cmd::Gadget(a) => gadget(a),
        Cmd::Sepinv(a) => sepinv_cmd(a, with_time),
        Cmd::Suite(a) => suite_cmd(a, with_time),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(mut r) => {
            match cli.format {
                Format::Json => {
                    if !cli.no_timestamp && r.json.is_object() {
                        let secs = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
                        r.json["timestamp"] = json!(secs);
                    }
                    println!("{}", serde_json::to_string_pretty(&r.json).expect("serializable"));
                }
                Format::Text => println!("{}", r.text),
            }
            ExitCode::from(u8::from(r.violation))
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
