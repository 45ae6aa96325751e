//! `repst`: batch commands over the `repst-core` modules with JSON input and
//! output.
//!
//! Results go to stdout as one JSON document (or a human rendering with
//! `--format pretty`). Failures go to stderr as a single-line error object
//! `{"error": code, "message": …, "context": …}` with exit status 1 for
//! domain errors and 2 for usage errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use repst_core::arith::{rational_json, Cyclotomic, Matrix, Rational};
use repst_core::cache;
use repst_core::centralizer::{
    centralizer_character, centralizer_classes, centralizer_irreps, centralizer_structure, wreath_character_table,
};
use repst_core::combinatorics::{IntPartition, SetPartition};
use repst_core::diagrams::{compose, evaluate_fd, evaluate_fd_x, tensor, x_basis, DiagramMorphism};
use repst_core::oracle::{verify_suite, SUITES};
use repst_core::sn::{character_table, grk0_repst_product, pieri_induction};
use repst_core::tower::{
    block_label, center_simples, grk0_bijection, grk0_center_product, k0_rank_center, odot, CenterSimple, GenericBlocks,
    GrK0Basis,
};

#[derive(Parser)]
#[command(name = "repst", version, about = "Exact computations in Rep S_t, its center, and the tower of centers")]
struct Cli {
    /// Output rendering; golden tests pin `json`.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Character-table cache directory (default: $REPST_CACHE_DIR, then
    /// $XDG_CACHE_HOME/repst, then $HOME/.cache/repst).
    #[arg(long, env = cache::CACHE_ENV, global = true)]
    cache_dir: Option<PathBuf>,

    /// Do not read or write the character-table cache.
    #[arg(long, global = true)]
    no_cache: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Partition-diagram morphisms of Rep S_t.
    #[command(subcommand)]
    Diagrams(DiagramsCmd),
    /// Character tables.
    #[command(subcommand)]
    Chars(CharsCmd),
    /// Simples of the centers Z(Rep S_n) and their induction product.
    #[command(subcommand)]
    Center(CenterCmd),
    /// The graded Grothendieck ring of Z(Rep S_t).
    #[command(subcommand)]
    Grk0(Grk0Cmd),
    /// Restriction of X_λ along Rep S_{t-1} ⊂ Rep S_t (Pieri rule).
    Pieri {
        /// Partition, e.g. '[2,1]'.
        #[arg(long)]
        lambda: String,
    },
    /// Brute-force cross-checks against explicit group constructions.
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Character-table cache management.
    #[command(subcommand)]
    Cache(CacheCmd),
}

#[derive(Args)]
struct PairArgs {
    /// First operand: a morphism JSON, a name (unit, counit, crossing,
    /// merge, id:<k>), or @<file>.
    #[arg(long)]
    a: String,
    /// Second operand, same forms as --a.
    #[arg(long)]
    b: String,
}

#[derive(Subcommand)]
enum DiagramsCmd {
    /// `b ∘ a` (a on top).
    Compose(PairArgs),
    /// `a ⊗ b` (a on the left).
    Tensor(PairArgs),
    /// The x-basis element x_π expanded in diagrams.
    Xbasis {
        /// Set partition JSON {"k":…,"l":…,"blocks":[[1,-1],…]} (upper points
        /// 1..k, lower points -1..-l), or @<file>.
        #[arg(long)]
        partition: String,
    },
    /// Matrix of F_d applied to a morphism (or to x_π with --x).
    Eval {
        /// Morphism (same forms as `compose --a`), or a partition with --x.
        #[arg(long)]
        morphism: String,
        /// Evaluation dimension d.
        #[arg(long)]
        d: usize,
        /// Interpret the input as a set partition and evaluate x_π.
        #[arg(long)]
        x: bool,
    },
}

#[derive(Subcommand)]
enum CharsCmd {
    /// Character table of S_n.
    Sn {
        #[arg(long)]
        n: u32,
    },
    /// Character table of Z_c ≀ S_m.
    Wreath {
        #[arg(long)]
        c: u32,
        #[arg(long)]
        m: u32,
    },
    /// Character table of the centralizer Z(μ) ⊂ S_|μ|.
    Centralizer {
        /// Cycle type, e.g. '[2,1,1]'.
        #[arg(long)]
        mu: String,
    },
}

#[derive(Subcommand)]
enum CenterCmd {
    /// All simples of Z(Rep S_n).
    Simples {
        #[arg(long)]
        n: u32,
    },
    /// Induction product of two simples, e.g. --a '{"mu":[2],"irrep":"triv"}'.
    Odot {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Rank of the Grothendieck group of Z(Rep S_n).
    K0Rank {
        #[arg(long)]
        n: u32,
    },
    /// Block label of a gr K_0 basis element, generic or at integer t.
    Blocks {
        /// Basis element {"mu0":[…],"v0":…,"lambda":[…]} or @<file>.
        #[arg(long)]
        g: String,
        /// Integer value of t (omit for generic t).
        #[arg(long, allow_hyphen_values = true)]
        t: Option<i64>,
    },
}

#[derive(Subcommand)]
enum Grk0Cmd {
    /// Product of two basis elements {"mu0":[…],"v0":…,"lambda":[…]}.
    Product {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Product [X_λ]·[X_μ] in gr K_0(Rep S_t) (Littlewood–Richardson).
    RepstProduct {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Run a named suite (realize, odot, yd, frobenius) or `all`.
    Verify { suite: String },
}

#[derive(Subcommand)]
enum CacheCmd {
    /// Remove all cached tables.
    Clear,
    /// Print the cache directory.
    Path,
}

/// A failure reported on stderr.
struct Failure {
    code: String,
    message: String,
    context: Value,
    exit: u8,
}

impl Failure {
    fn usage(code: &str, message: impl Into<String>, context: Value) -> Self {
        Failure {
            code: code.into(),
            message: message.into(),
            context,
            exit: 2,
        }
    }

    fn to_json(&self) -> Value {
        json!({"error": self.code, "message": self.message, "context": self.context})
    }
}

impl From<repst_core::Error> for Failure {
    fn from(e: repst_core::Error) -> Self {
        let context = match &e {
            repst_core::Error::CapExceeded { what, value, cap } => json!({"what": what, "value": value, "cap": cap}),
            _ => Value::Null,
        };
        // Malformed input payloads are usage errors; everything else is a
        // domain error.
        let exit = if matches!(e, repst_core::Error::InvalidInput(_) | repst_core::Error::NotYoungDiagram(_)) {
            2
        } else {
            1
        };
        Failure {
            code: e.code().into(),
            message: e.to_string(),
            context,
            exit,
        }
    }
}

type Outcome = Result<Value, Failure>;

/// Inline JSON, or the contents of `<file>` for `@<file>`.
fn payload(flag: &str, raw: &str) -> Result<Value, Failure> {
    let text = match raw.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::usage("io", format!("cannot read {path}: {e}"), json!({"flag": flag})))?,
        None => raw.to_string(),
    };
    serde_json::from_str(&text)
        .map_err(|e| Failure::usage("schema", format!("--{flag} is not valid JSON: {e}"), json!({"flag": flag})))
}

fn partition_arg(flag: &str, raw: &str) -> Result<IntPartition, Failure> {
    let parts: Vec<u32> = serde_json::from_value(payload(flag, raw)?)
        .map_err(|e| Failure::usage("schema", format!("--{flag} must be a list of positive integers: {e}"), json!({"flag": flag})))?;
    Ok(IntPartition::new(parts)?)
}

fn morphism_arg(flag: &str, raw: &str) -> Result<DiagramMorphism, Failure> {
    match raw {
        "unit" => return Ok(DiagramMorphism::unit()),
        "counit" => return Ok(DiagramMorphism::counit()),
        "crossing" => return Ok(DiagramMorphism::crossing()),
        "merge" => return Ok(DiagramMorphism::merge()),
        _ => {}
    }
    if let Some(k) = raw.strip_prefix("id:") {
        let k: usize = k
            .parse()
            .map_err(|_| Failure::usage("schema", format!("--{flag}: bad identity size {k:?}"), json!({"flag": flag})))?;
        return Ok(DiagramMorphism::identity(k));
    }
    Ok(DiagramMorphism::from_json(&payload(flag, raw)?)?)
}

fn set_partition_arg(flag: &str, raw: &str) -> Result<SetPartition, Failure> {
    let v = payload(flag, raw)?;
    let bad = |m: &str| Failure::usage("schema", format!("--{flag}: {m}"), json!({"flag": flag}));
    let k = v.get("k").and_then(Value::as_u64).ok_or_else(|| bad("missing k"))? as usize;
    let l = v.get("l").and_then(Value::as_u64).ok_or_else(|| bad("missing l"))? as usize;
    let blocks: Vec<Vec<i64>> =
        serde_json::from_value(v.get("blocks").cloned().ok_or_else(|| bad("missing blocks"))?).map_err(|e| bad(&e.to_string()))?;
    Ok(SetPartition::from_signed_blocks(k, l, &blocks)?)
}

fn matrix_json(m: &Matrix<Rational>) -> Value {
    let rows: Vec<Vec<Value>> = (0..m.rows()).map(|r| m.row(r).iter().map(rational_json).collect()).collect();
    json!({"rows": m.rows(), "cols": m.cols(), "entries": rows})
}

fn cyclotomic_row(values: &[Cyclotomic]) -> Vec<Value> {
    values.iter().map(Cyclotomic::to_json).collect()
}

fn run_diagrams(cmd: DiagramsCmd) -> Outcome {
    match cmd {
        DiagramsCmd::Compose(p) => Ok(compose(&morphism_arg("a", &p.a)?, &morphism_arg("b", &p.b)?)?.to_json()),
        DiagramsCmd::Tensor(p) => Ok(tensor(&morphism_arg("a", &p.a)?, &morphism_arg("b", &p.b)?)?.to_json()),
        DiagramsCmd::Xbasis { partition } => Ok(x_basis(&set_partition_arg("partition", &partition)?).to_json()),
        DiagramsCmd::Eval { morphism, d, x } => {
            let m = if x {
                evaluate_fd_x(&set_partition_arg("morphism", &morphism)?, d)?
            } else {
                evaluate_fd(&morphism_arg("morphism", &morphism)?, d)?
            };
            Ok(matrix_json(&m))
        }
    }
}

fn run_chars(cmd: CharsCmd) -> Outcome {
    match cmd {
        CharsCmd::Sn { n } => {
            let t = character_table(n)?;
            let rows: Vec<Value> = t
                .characters()
                .iter()
                .map(|(lambda, chi)| json!({"irrep": lambda, "values": chi.value_list()}))
                .collect();
            Ok(json!({"group": format!("S_{n}"), "classes": t.classes(), "rows": rows}))
        }
        CharsCmd::Wreath { c, m } => {
            let t = wreath_character_table(c, m)?;
            let classes: Vec<Value> = (0..t.classes().len())
                .map(|i| json!({"label": t.classes()[i], "size": t.class_size(i) as u64}))
                .collect();
            let rows: Vec<Value> = (0..t.irreps().len())
                .map(|i| json!({"irrep": t.irreps()[i], "dim": t.dim(i), "values": cyclotomic_row(t.row(i))}))
                .collect();
            Ok(json!({"group": format!("Z_{c} wr S_{m}"), "order": t.order() as u64, "classes": classes, "rows": rows}))
        }
        CharsCmd::Centralizer { mu } => {
            let mu = partition_arg("mu", &mu)?;
            let desc = centralizer_structure(&mu);
            let classes = centralizer_classes(&desc)?;
            let mut rows = Vec::new();
            for irrep in centralizer_irreps(&desc) {
                let values = classes
                    .iter()
                    .map(|(cls, _)| centralizer_character(&irrep, cls))
                    .collect::<repst_core::Result<Vec<_>>>()?;
                rows.push(json!({"irrep": irrep.to_json(), "dim": irrep.dim()?, "values": cyclotomic_row(&values)}));
            }
            let classes: Vec<Value> =
                classes.iter().map(|(cls, size)| json!({"label": cls.to_json(), "size": *size as u64})).collect();
            Ok(json!({"group": format!("Z({mu})"), "order": desc.order() as u64, "classes": classes, "rows": rows}))
        }
    }
}

fn simple_arg(flag: &str, raw: &str) -> Result<CenterSimple, Failure> {
    Ok(CenterSimple::from_json(&payload(flag, raw)?)?)
}

fn grk0_arg(flag: &str, raw: &str) -> Result<GrK0Basis, Failure> {
    Ok(GrK0Basis::from_json(&payload(flag, raw)?)?)
}

fn run_center(cmd: CenterCmd) -> Outcome {
    match cmd {
        CenterCmd::Simples { n } => {
            let simples: Vec<Value> = center_simples(n)?
                .iter()
                .map(|s| {
                    let mut v = s.to_json();
                    v["dim"] = json!(s.dim().map(|d| d as u64).ok());
                    v["grk0"] = grk0_bijection(s).to_json();
                    v
                })
                .collect();
            Ok(json!({"n": n, "simples": simples}))
        }
        CenterCmd::Odot { a, b } => Ok(odot(&simple_arg("a", &a)?, &simple_arg("b", &b)?)?.to_json()),
        CenterCmd::K0Rank { n } => Ok(json!(k0_rank_center(n)?)),
        CenterCmd::Blocks { g, t } => Ok(block_label(&grk0_arg("g", &g)?, t, &GenericBlocks).to_json()),
    }
}

fn run_grk0(cmd: Grk0Cmd) -> Outcome {
    match cmd {
        Grk0Cmd::Product { a, b } => {
            let terms: Vec<Value> = grk0_center_product(&grk0_arg("a", &a)?, &grk0_arg("b", &b)?)?
                .iter()
                .map(|(g, k)| json!({"basis": g.to_json(), "coeff": k}))
                .collect();
            Ok(json!({"terms": terms}))
        }
        Grk0Cmd::RepstProduct { lambda, mu } => {
            let terms: Vec<Value> = grk0_repst_product(&partition_arg("lambda", &lambda)?, &partition_arg("mu", &mu)?)
                .iter()
                .map(|(nu, k)| json!({"lambda": nu, "coeff": k}))
                .collect();
            Ok(json!({"terms": terms}))
        }
    }
}

fn run_oracle(cmd: OracleCmd) -> Outcome {
    let OracleCmd::Verify { suite } = cmd;
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
    if names.iter().any(|n| !SUITES.contains(n)) {
        return Err(Failure::usage(
            "unknown_suite",
            format!("unknown suite {suite:?}; expected one of {}, all", SUITES.join(", ")),
            json!({"suite": suite}),
        ));
    }
    let mut reports = Vec::new();
    let mut passed = true;
    for name in names {
        let r = verify_suite(name)?;
        passed &= r.passed();
        reports.push(r.to_json());
    }
    let out = json!({"passed": passed, "suites": reports});
    if passed {
        Ok(out)
    } else {
        Err(Failure {
            code: "verification_failed".into(),
            message: "at least one oracle check failed".into(),
            context: out,
            exit: 1,
        })
    }
}

fn run_cache(cmd: CacheCmd, dir: PathBuf) -> Outcome {
    match cmd {
        CacheCmd::Path => Ok(json!(dir.display().to_string())),
        CacheCmd::Clear => {
            let removed = cache::clear(&dir)?;
            Ok(json!({"path": dir.display().to_string(), "removed": removed}))
        }
    }
}

fn dispatch(cli: Cli) -> Outcome {
    let dir = cli.cache_dir.clone().unwrap_or_else(cache::default_cache_dir);
    if !cli.no_cache {
        cache::set_cache_dir(Some(dir.clone()));
    }
    match cli.command {
        Command::Diagrams(c) => run_diagrams(c),
        Command::Chars(c) => run_chars(c),
        Command::Center(c) => run_center(c),
        Command::Grk0(c) => run_grk0(c),
        Command::Pieri { lambda } => {
            let terms: Vec<Value> = pieri_induction(&partition_arg("lambda", &lambda)?)?
                .iter()
                .map(|(mu, k)| json!({"lambda": mu, "multiplicity": k}))
                .collect();
            Ok(json!({"terms": terms}))
        }
        Command::Oracle(c) => run_oracle(c),
        Command::Cache(c) => run_cache(c, dir),
    }
}

fn render_scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(o) if o.contains_key("conductor") => {
            let n = o["conductor"].as_u64().unwrap_or(0);
            let terms: Vec<String> = o["coeffs"]
                .as_array()
                .map(|cs| {
                    cs.iter()
                        .enumerate()
                        .filter(|(_, c)| c.as_i64() != Some(0))
                        .map(|(i, c)| {
                            let c = render_scalar(c);
                            match i {
                                0 => c,
                                1 => format!("{c}·ζ{n}"),
                                _ => format!("{c}·ζ{n}^{i}"),
                            }
                        })
                        .collect()
                })
                .unwrap_or_default();
            terms.join(" + ")
        }
        other => other.to_string(),
    }
}

fn render_label(v: &Value) -> String {
    match v {
        Value::Array(items) => format!("({})", items.iter().map(render_label).collect::<Vec<_>>().join(",")),
        Value::Object(o) if o.contains_key("factors") => {
            let factors: Vec<String> = o["factors"]
                .as_array()
                .into_iter()
                .flatten()
                .map(|f| format!("Z{}:{}", f["c"], render_label(&f["multipartition"])))
                .collect();
            if factors.is_empty() {
                "1".into()
            } else {
                factors.join("⊠")
            }
        }
        Value::Object(o) => o
            .iter()
            .map(|(k, v)| format!("{k}={}", render_label(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => render_scalar(other),
    }
}

/// Aligned text table for character tables; pretty-printed JSON otherwise.
fn render_pretty(v: &Value) -> String {
    let (Some(classes), Some(rows)) = (v.get("classes").and_then(Value::as_array), v.get("rows").and_then(Value::as_array))
    else {
        return serde_json::to_string_pretty(v).expect("serializable");
    };
    let class_label = |c: &Value| render_label(c.get("label").unwrap_or(c));
    let mut grid = vec![std::iter::once(String::new()).chain(classes.iter().map(class_label)).collect::<Vec<_>>()];
    for row in rows {
        let mut line = vec![render_label(&row["irrep"])];
        line.extend(row["values"].as_array().into_iter().flatten().map(render_scalar));
        grid.push(line);
    }
    let width = |col: usize| grid.iter().map(|r| r.get(col).map_or(0, |s| s.chars().count())).max().unwrap_or(0);
    let widths: Vec<usize> = (0..grid[0].len()).map(width).collect();
    let mut out = String::new();
    if let Some(g) = v.get("group").and_then(Value::as_str) {
        out.push_str(g);
        out.push('\n');
    }
    for r in &grid {
        let cells: Vec<String> =
            r.iter().zip(&widths).map(|(s, w)| format!("{s}{}", " ".repeat(w - s.chars().count()))).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out.pop();
    out
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let message = e.kind().to_string();
            let detail = e.to_string();
            let f = Failure::usage("usage", message, json!(detail.lines().next().unwrap_or_default()));
            eprintln!("{}", f.to_json());
            return ExitCode::from(2);
        }
    };
    let format = cli.format;
    match dispatch(cli) {
        Ok(v) => {
            match format {
                Format::Json => println!("{v}"),
                Format::Pretty => println!("{}", render_pretty(&v)),
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", f.to_json());
            ExitCode::from(f.exit)
        }
    }
}
