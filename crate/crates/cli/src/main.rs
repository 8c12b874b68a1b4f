use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use dpcascade::acceptance::{run_all, CriterionReport};
use dpcascade::catalog::{catalog_ids, check_scaffold, family_record, polygon, FamilyId};
use dpcascade::hilbert::cascade_hilbert_raw;
use dpcascade::mutation::{
    fundamental_group_invariant, mutate, mutation_neighbors, quiver, reduced_quiver, MutationMove, Quiver,
    DEFAULT_SEARCH_BOUND,
};
use dpcascade::polygon::{pt, LatticePolygon};
use dpcascade::quasismooth::is_quasismooth;
use dpcascade::rootsys::{summarize, PolarizedLattice};
use dpcascade::scaffolding::Scaffolding;
use dpcascade::tables::{cascade_table, hilbert_model_table, regenerate_tables};

/// Exact computations for del Pezzo surfaces with a single 1/k(1,1) point.
#[derive(Parser)]
#[command(name = "dpcascade", version)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cascade tables, family records and golden-table regeneration
    Catalog(CatalogArgs),
    /// Anti-canonical Hilbert series of the cascade
    Hilbert(HilbertArgs),
    /// Root system in the Picard lattice of X(k,l)
    Roots(RootsArgs),
    /// Quasismoothness of a hypersurface or codimension-2 complete intersection
    Quasismooth(QuasismoothArgs),
    /// Weight data of a scaffolded polygon
    LaurentInvert(LaurentArgs),
    /// Mutations of a Fano polygon
    Mutate(MutateArgs),
    /// Weight-vector group of a mutation class
    Pi1(Pi1Args),
    /// Quiver of a Fano polygon
    Quiver(QuiverArgs),
    /// Run every acceptance criterion
    CheckAll,
}

#[derive(Args)]
struct CatalogArgs {
    /// Print the cascade table for this k
    #[arg(long, conflicts_with_all = ["family", "regenerate"])]
    k: Option<i64>,
    /// Family id such as X:5:7, B:5 or pair:5:6
    #[arg(long, conflicts_with = "regenerate")]
    family: Option<String>,
    /// Diff the regenerated tables against the golden files in DIR
    #[arg(long, value_name = "DIR")]
    regenerate: Option<PathBuf>,
    /// With --regenerate, overwrite the golden files
    #[arg(long, requires = "regenerate")]
    write: bool,
}

#[derive(Args)]
struct HilbertArgs {
    #[arg(long, required_unless_present = "check_models")]
    k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    l: usize,
    /// Compare every tabulated model with the cascade series
    #[arg(long)]
    check_models: bool,
}

#[derive(Args)]
struct RootsArgs {
    #[arg(long)]
    k: i64,
    #[arg(long)]
    l: usize,
    /// Also list every root
    #[arg(long)]
    table: bool,
}

#[derive(Args)]
struct QuasismoothArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    weights: Vec<i64>,
    /// Degree of a hypersurface
    #[arg(long, conflicts_with = "degrees", required_unless_present = "degrees")]
    degree: Option<i64>,
    /// Degrees of a complete intersection
    #[arg(long, value_delimiter = ',')]
    degrees: Vec<i64>,
}

#[derive(Args)]
struct PolygonSource {
    /// JSON file {"vertices": [[x,y],...]}
    #[arg(long, value_name = "FILE", required_unless_present = "family", conflicts_with = "family")]
    polygon: Option<PathBuf>,
    /// Use the polygon of a catalog family instead
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args)]
struct LaurentArgs {
    #[command(flatten)]
    source: PolygonSource,
    /// Scaffolding JSON; defaults to the catalog scaffolding with --family
    #[arg(long, value_name = "FILE")]
    scaffolding: Option<PathBuf>,
}

#[derive(Args)]
struct MutateArgs {
    #[command(flatten)]
    source: PolygonSource,
    /// List the normal forms of all one-step mutations
    #[arg(long, conflicts_with_all = ["w", "factor"])]
    list: bool,
    /// Weight vector of a single move, "x,y"
    #[arg(long, value_delimiter = ',', num_args = 2, allow_negative_numbers = true, requires = "factor")]
    w: Vec<i64>,
    /// Factor of a single move, "x,y"
    #[arg(long, value_delimiter = ',', num_args = 2, allow_negative_numbers = true, requires = "w")]
    factor: Vec<i64>,
}

#[derive(Args)]
struct Pi1Args {
    #[command(flatten)]
    source: PolygonSource,
    /// Maximum number of polygons to visit
    #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
    bound: usize,
}

#[derive(Args)]
struct QuiverArgs {
    #[command(flatten)]
    source: PolygonSource,
    /// Drop one node per height-one edge
    #[arg(long)]
    reduced: bool,
}

/// A computation failure, tagged with the module it came from.
struct Failure {
    module: &'static str,
    error: anyhow::Error,
}

trait InModule<T> {
    fn module(self, module: &'static str) -> Result<T, Failure>;
}

impl<T, E: Into<anyhow::Error>> InModule<T> for Result<T, E> {
    fn module(self, module: &'static str) -> Result<T, Failure> {
        self.map_err(|e| Failure { module, error: e.into() })
    }
}

/// Text and JSON renderings of one result.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn new(text: String, json: Value) -> Output {
        Output { text, json, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("serializable") + "\n"
            } else {
                out.text
            };
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error [{}]: {:#}", f.module, f.error);
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Catalog(a) => catalog(a).module("catalog"),
        Command::Hilbert(a) => hilbert(a).module("hilbert"),
        Command::Roots(a) => roots(a).module("rootsys"),
        Command::Quasismooth(a) => quasismooth(a).module("quasismooth"),
        Command::LaurentInvert(a) => laurent(a).module("scaffolding"),
        Command::Mutate(a) => mutate_cmd(a).module("mutation_mirror"),
        Command::Pi1(a) => pi1(a).module("mutation_mirror"),
        Command::Quiver(a) => quiver_cmd(a).module("mutation_mirror"),
        Command::CheckAll => Ok(check_all()),
    }
}

fn parse_family(s: &str) -> anyhow::Result<FamilyId> {
    Ok(s.parse::<FamilyId>()?)
}

fn load_polygon(src: &PolygonSource) -> anyhow::Result<LatticePolygon> {
    if let Some(id) = &src.family {
        return Ok(polygon(parse_family(id)?)?);
    }
    let path = src.polygon.as_ref().expect("clap requires --polygon or --family");
    let text = read(path)?;
    Ok(LatticePolygon::from_json(&text)?.0)
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn catalog(a: CatalogArgs) -> anyhow::Result<Output> {
    if let Some(dir) = a.regenerate {
        let report = regenerate_tables(&dir, a.write)?;
        let mut text = String::new();
        for s in &report {
            text.push_str(&format!("{}: {}\n", s.file, s.status));
            for d in &s.discrepancies {
                text.push_str(&format!("    differs: {d}\n"));
            }
        }
        let ok = report.iter().all(|s| s.status == "same" || s.status == "written");
        return Ok(Output { text, json: serde_json::to_value(&report)?, ok });
    }
    if let Some(k) = a.k {
        let t = cascade_table(k)?;
        return Ok(Output::new(t.render(), serde_json::to_value(&t)?));
    }
    if let Some(id) = a.family {
        let rec = family_record(parse_family(&id)?)?;
        let mut text = format!(
            "{}\npolygon: {}\ndegree: {}\nfano index: {}\ntoric: {}\nsingularity content: {}\n",
            rec.id,
            rec.polygon,
            rec.degree,
            rec.fano_index,
            if rec.is_toric { "yes" } else { "no" },
            rec.content
        );
        for m in &rec.models {
            text.push_str(&format!("model: {m}\n"));
        }
        for s in &rec.scaffolds {
            let git = check_scaffold(s)?.git;
            text.push_str(&format!("scaffolding with {} struts: {}\n", s.scaffolding.struts.len(), rows(&git.weight_matrix)));
        }
        for n in &rec.notes {
            text.push_str(&format!("note: {n}\n"));
        }
        return Ok(Output::new(text, serde_json::to_value(&rec)?));
    }
    let ids: Vec<String> = catalog_ids().iter().map(|id| id.to_string()).collect();
    Ok(Output::new(ids.join("\n") + "\n", json!(ids)))
}

fn rows(m: &[Vec<i64>]) -> String {
    m.iter()
        .map(|r| format!("({})", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn joined<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn hilbert(a: HilbertArgs) -> anyhow::Result<Output> {
    if a.check_models {
        let t = hilbert_model_table()?;
        let mut text = String::new();
        let mut results = Vec::new();
        for r in &t.rows {
            let pass = r.last().map(String::as_str) == Some("ok");
            text.push_str(&format!(
                "[{}] X({},{}): {} = {}\n",
                if pass { "PASS" } else { "FAIL" },
                r[0],
                r[1],
                r[2],
                r[3]
            ));
            results.push(json!({"k": r[0], "l": r[1], "source": r[2], "series": r[3], "pass": pass}));
        }
        let ok = results.iter().all(|r| r["pass"] == json!(true));
        return Ok(Output { text, json: json!(results), ok });
    }
    let k = a.k.expect("clap requires --k");
    let h = cascade_hilbert_raw(k, a.l)?;
    let num = h.numerator.coeffs();
    let text = format!("numerator: {}\ndenominator: {}\n", joined(&num), joined(&h.denominator));
    Ok(Output::new(text, json!({"k": k, "l": a.l, "numerator": num, "denominator": h.denominator})))
}

fn roots(a: RootsArgs) -> anyhow::Result<Output> {
    let (s, roots) = summarize(a.k, a.l)?;
    let mut text = format!("count={} type={} index={}\n", s.count, s.type_label, s.index);
    let mut json = serde_json::to_value(&s)?;
    if a.table {
        let lat = PolarizedLattice::new(a.k, a.l)?;
        for r in &roots {
            text.push_str(&format!("{} ; {}\n", r[0], joined(&r[1..])));
        }
        json["roots"] = json!(roots);
        json["gram"] = json!(lat.gram());
    }
    Ok(Output::new(text, json))
}

fn quasismooth(a: QuasismoothArgs) -> anyhow::Result<Output> {
    let degrees = match a.degree {
        Some(d) => vec![d],
        None => a.degrees.clone(),
    };
    let r = is_quasismooth(&a.weights, &degrees)?;
    let mut text = if r.quasismooth { "quasismooth".to_string() } else { "NOT quasismooth".to_string() };
    if r.linear_cone {
        text.push_str(" (linear cone)");
    }
    if let Some(s) = &r.violating_subset {
        let w: Vec<i64> = s.iter().map(|&i| a.weights[i]).collect();
        text.push_str(&format!("; violating subset {{{}}} of weights {{{}}}", joined(s), joined(&w)));
    }
    text.push('\n');
    let mut json = serde_json::to_value(&r)?;
    json["weights"] = json!(a.weights);
    json["degrees"] = json!(degrees);
    Ok(Output::new(text, json))
}

/// Right-aligned integer columns.
fn aligned(m: &[Vec<i64>]) -> String {
    let width = m.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
    m.iter()
        .map(|r| r.iter().map(|x| format!("{x:>width$}")).collect::<Vec<_>>().join(" ") + "\n")
        .collect()
}

fn laurent(a: LaurentArgs) -> anyhow::Result<Output> {
    let p = load_polygon(&a.source)?;
    let s = match (&a.scaffolding, &a.source.family) {
        (Some(path), _) => Scaffolding::from_json(&read(path)?)?,
        (None, Some(id)) => family_record(parse_family(id)?)?
            .scaffolds
            .into_iter()
            .find(|s| s.polygon == p)
            .map(|s| s.scaffolding)
            .ok_or_else(|| anyhow!("family {id} has no scaffolding of its own polygon"))?,
        (None, None) => bail!("--scaffolding is required with --polygon"),
    };
    let git = s.laurent_invert(&p)?;
    let text = format!(
        "weight matrix:\n{}stability:\n{}equation degrees:\n{}",
        aligned(&git.weight_matrix),
        aligned(std::slice::from_ref(&git.stability)),
        aligned(&git.equation_degrees)
    );
    Ok(Output::new(text, serde_json::to_value(&git)?))
}

fn mutate_cmd(a: MutateArgs) -> anyhow::Result<Output> {
    let p = load_polygon(&a.source)?;
    if a.w.len() == 2 {
        let m = MutationMove::new(pt(a.w[0], a.w[1]), pt(a.factor[0], a.factor[1]))?;
        let q = mutate(&p, m)?;
        let nf = q.normal_form()?;
        let text = format!("{q}\nnormal form: {nf}\n");
        return Ok(Output::new(text, json!({"polygon": q, "normal_form": nf})));
    }
    if !a.list {
        bail!("give --list or a move via --w and --factor");
    }
    let nbs: Vec<LatticePolygon> = mutation_neighbors(&p)?.into_iter().collect();
    let text: String = nbs.iter().map(|q| format!("{q}\n")).collect();
    Ok(Output::new(text, json!({"neighbors": nbs})))
}

fn pi1(a: Pi1Args) -> anyhow::Result<Output> {
    let p = load_polygon(&a.source)?;
    let r = fundamental_group_invariant(&p, a.bound)?;
    let text = format!(
        "group: {}\ninvariant factors: {}\nfree rank: {}\npolygons visited: {} (exhausted: {}, stabilized: {})\n",
        r.group,
        joined(&r.group.invariant_factors),
        r.group.free_rank,
        r.polygons_visited,
        r.exhausted,
        r.stabilized
    );
    let mut json = serde_json::to_value(&r)?;
    json["label"] = json!(r.group.to_string());
    Ok(Output::new(text, json))
}

fn quiver_cmd(a: QuiverArgs) -> anyhow::Result<Output> {
    let p = load_polygon(&a.source)?;
    let q: Quiver = if a.reduced { reduced_quiver(&p)? } else { quiver(&p)? };
    let mut text = format!("{} nodes\n", q.len());
    for (i, n) in q.nodes.iter().enumerate() {
        text.push_str(&format!("node {i}: edge {} normal {}\n", n.edge, n.normal));
    }
    if !q.is_empty() {
        text.push_str("arrows:\n");
        text.push_str(&aligned(&q.arrows));
    }
    Ok(Output::new(text, serde_json::to_value(&q)?))
}

fn check_all() -> Output {
    let reports: Vec<CriterionReport> = run_all();
    let mut text = String::new();
    for r in &reports {
        text.push_str(&format!("{r}\n"));
        for f in &r.failures {
            text.push_str(&format!("    failed: {f}\n"));
        }
        for n in &r.notes {
            text.push_str(&format!("    note: {n}\n"));
        }
    }
    let ok = reports.iter().all(|r| r.passed);
    Output { text, json: serde_json::to_value(&reports).expect("serializable"), ok }
}
