//! Argument parsing, dispatch and text rendering.
//!
//! Exit codes: 0 success, 1 failed verification, 2 usage error (bad flags,
//! files or weights), 3 engine error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Duration;

use cayley_core::ledger::{builtin_ledger, Identity, IdentityKind};
use cayley_core::verify::{self, Collection};
use cayley_core::*;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::{cache, driver, formats};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ENGINE: i32 = 3;

/// Printed at the top of every ledger report.
pub const LEDGER_LIMITATION: &str = "checks are character-level: an iso passes when both sides have equal Levi \
characters and an exact sequence passes when its alternating sum vanishes; extension classes are not examined";

#[derive(Parser, Debug)]
#[command(
    name = "cayley",
    version,
    about = "Representation theory and Borel-Weil-Bott computations on G/P"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Named root system (see `presets`). Defaults to E6-paper
    #[arg(long, global = true)]
    pub preset: Option<String>,
    /// Cartan matrix file: {"rank": n, "entries": [[...]]}
    #[arg(long, global = true, value_name = "FILE", conflicts_with = "preset")]
    pub cartan: Option<PathBuf>,
    /// Crossed node of the maximal parabolic, 1-based. Defaults to 1
    #[arg(long, global = true, value_name = "K")]
    pub crossed: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for `verify` and `ledger`. Defaults to available cores
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,
    /// Recompute every irreducible character instead of sharing them
    #[arg(long, global = true)]
    pub no_cache: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Comma-separated integers, brackets optional: `0,0,0,0,0,1` or `[-1,0,1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightList(pub Vec<i32>);

impl FromStr for WeightList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        if inner.trim().is_empty() {
            return Err("empty weight".into());
        }
        inner
            .split(',')
            .map(|c| c.trim().parse::<i32>().map_err(|e| format!("`{}`: {e}", c.trim())))
            .collect::<Result<Vec<_>, _>>()
            .map(WeightList)
    }
}

#[derive(Args, Debug, Clone)]
pub struct One {
    /// Weight in fundamental-weight coordinates
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    pub weight: WeightList,
}

#[derive(Args, Debug, Clone)]
pub struct Two {
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    pub weight: WeightList,
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    pub weight2: WeightList,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Dimension of V_λ, or the rank of E_λ with --levi
    Dim {
        #[command(flatten)]
        w: One,
        #[arg(long)]
        levi: bool,
    },
    /// Weight multiplicities of V_λ, or of E_λ with --levi
    Char {
        #[command(flatten)]
        w: One,
        #[arg(long)]
        levi: bool,
    },
    /// Decomposition of V_λ ⊗ V_μ, or of E_λ ⊗ E_μ with --levi
    Tensor {
        #[command(flatten)]
        w: Two,
        #[arg(long)]
        levi: bool,
    },
    /// Restriction of V_λ to the Levi subgroup
    Branch {
        #[command(flatten)]
        w: One,
    },
    /// Cohomology of the homogeneous bundle E_ω on G/P
    Cohomology {
        #[command(flatten)]
        w: One,
    },
    /// Ext^k(E_a, E_b) for all k
    Ext {
        #[command(flatten)]
        w: Two,
    },
    /// Rank and first Chern class of E_ω
    C1 {
        #[command(flatten)]
        w: One,
    },
    /// Check that a collection is strongly exceptional
    Verify {
        /// `cayley27`, `kapranovQ7` or a collection file
        target: String,
    },
    /// Check bundle identities at the character level
    Ledger {
        /// `builtin`, `dump` (print the built-in ledger file) or a ledger file
        #[arg(default_value = "builtin")]
        source: String,
    },
    /// List the named root systems
    Presets,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Dim { .. } => "dim",
            Command::Char { .. } => "char",
            Command::Tensor { .. } => "tensor",
            Command::Branch { .. } => "branch",
            Command::Cohomology { .. } => "cohomology",
            Command::Ext { .. } => "ext",
            Command::C1 { .. } => "c1",
            Command::Verify { .. } => "verify",
            Command::Ledger { .. } => "ledger",
            Command::Presets => "presets",
        }
    }
}

/// What a command produced. `summary` goes first in text mode and to
/// stderr in JSON mode.
struct Outcome {
    text: String,
    json: Value,
    code: i32,
    summary: Option<String>,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome {
            text,
            json,
            code: EXIT_OK,
            summary: None,
        }
    }
}

/// Usage and input errors map to 2, failures inside the engine to 3.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Pair { .. }
        | Error::GuardrailExceeded { .. }
        | Error::Overflow
        | Error::NonIntegralPlethysm { .. }
        | Error::NotGenuine
        | Error::NotDecomposable { .. } => EXIT_ENGINE,
        _ => EXIT_USAGE,
    }
}

pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let name = cli.command.name();
    let format = cli.global.format;
    match execute(&cli, err) {
        Ok(o) => {
            let doc = match format {
                Format::Text => {
                    let mut s = String::new();
                    if let Some(line) = &o.summary {
                        s.push_str(line);
                        s.push('\n');
                    }
                    s.push_str(&o.text);
                    s
                }
                Format::Json => {
                    if let Some(line) = &o.summary {
                        let _ = writeln!(err, "{line}");
                    }
                    let mut s = serde_json::to_string_pretty(&o.json).expect("JSON values serialize");
                    s.push('\n');
                    s
                }
            };
            if out.write_all(doc.as_bytes()).is_err() {
                return EXIT_ENGINE;
            }
            o.code
        }
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            if code == EXIT_USAGE {
                let mut cmd = Cli::command();
                cmd.build();
                if let Some(sub) = cmd.find_subcommand_mut(name) {
                    let _ = writeln!(err, "\n{}", sub.render_usage());
                }
            }
            if format == Format::Json {
                let doc = json!({"command": name, "error": {"exit_code": code, "message": message}});
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("JSON values serialize")
                );
            }
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

struct Ctx<'a> {
    g: &'a GlobalOpts,
    cache: Option<Arc<dyn CharCache>>,
}

impl Ctx<'_> {
    fn root_system(&self) -> Result<RootSystem> {
        let cartan = self.g.cartan.as_deref().map(formats::read_cartan).transpose()?;
        formats::root_system(self.g.preset.as_deref(), cartan, self.cache.clone())
    }

    fn setup(&self) -> Result<ParabolicSetup> {
        formats::setup(self.root_system()?, self.g.crossed.unwrap_or(1))
    }

    fn group_json(&self, rs: &RootSystem) -> Value {
        match rs.name() {
            Some(n) => json!(n),
            None => Value::Null,
        }
    }
}

fn g_weight(rs: &RootSystem, w: &WeightList) -> Result<Weight> {
    let w = rs.weight(&w.0)?;
    if !rs.is_dominant(&rs.full(), &w) {
        return Err(Error::NotDominant(w));
    }
    Ok(w)
}

fn execute(cli: &Cli, err: &mut dyn Write) -> Result<Outcome, Failure> {
    let g = &cli.global;
    let cache: Option<Arc<dyn CharCache>> = if g.no_cache { None } else { Some(cache::global()) };
    let ctx = Ctx { g, cache };
    match &cli.command {
        Command::Dim { w, levi } => dim(&ctx, w, *levi),
        Command::Char { w, levi } => char_cmd(&ctx, w, *levi),
        Command::Tensor { w, levi } => tensor(&ctx, w, *levi),
        Command::Branch { w } => branch(&ctx, w),
        Command::Cohomology { w } => cohomology_cmd(&ctx, w),
        Command::Ext { w } => ext(&ctx, w),
        Command::C1 { w } => c1(&ctx, w),
        Command::Verify { target } => verify_cmd(&ctx, target, err),
        Command::Ledger { source } => ledger(&ctx, source),
        Command::Presets => presets(),
    }
}

fn dim(ctx: &Ctx, w: &One, levi: bool) -> Result<Outcome, Failure> {
    if levi {
        let s = ctx.setup()?;
        let b = s.bundle(&w.weight.0)?;
        let d = s.bundle_rank(&b)?;
        let json = json!({
            "command": "dim", "preset": ctx.group_json(s.root_system()), "crossed": s.crossed() + 1,
            "subsystem": "levi", "weight": formats::weight(b.weight()), "dim": formats::big(&d),
        });
        return Ok(Outcome::ok(format!("{d}\n"), json));
    }
    let rs = ctx.root_system()?;
    let lambda = g_weight(&rs, &w.weight)?;
    let d = weyl_dim(&rs, &rs.full(), &lambda)?;
    let json = json!({
        "command": "dim", "preset": ctx.group_json(&rs), "subsystem": "full",
        "weight": formats::weight(&lambda), "dim": formats::big(&d),
    });
    Ok(Outcome::ok(format!("{d}\n"), json))
}

fn character_text(rs: &RootSystem, chi: &Character) -> String {
    let mut terms: Vec<(&Weight, i64)> = chi.iter().collect();
    terms.sort_by(|(a, _), (b, _)| rs.scaled_height(b).cmp(&rs.scaled_height(a)).then_with(|| b.cmp(a)));
    let mut s = String::new();
    for (w, m) in terms {
        let _ = writeln!(s, "{w} {m}");
    }
    s
}

fn char_cmd(ctx: &Ctx, w: &One, levi: bool) -> Result<Outcome, Failure> {
    let (rs, sub, lambda, dim) = if levi {
        let s = ctx.setup()?;
        let b = s.bundle(&w.weight.0)?;
        let d = s.bundle_rank(&b)?;
        (s.root_system().clone(), s.levi().clone(), b.into_weight(), d)
    } else {
        let rs = ctx.root_system()?;
        let lambda = g_weight(&rs, &w.weight)?;
        let d = weyl_dim(&rs, &rs.full(), &lambda)?;
        let full = rs.full();
        (rs, full, lambda, d)
    };
    let chi = irrep_character(&rs, &sub, &lambda)?;
    let text = format!("# {} weights, dim {dim}\n{}", chi.len(), character_text(&rs, &chi));
    let json = json!({
        "command": "char", "preset": ctx.group_json(&rs), "subsystem": if levi { "levi" } else { "full" },
        "weight": formats::weight(&lambda), "dim": formats::big(&dim), "character": formats::character(&rs, &chi),
    });
    Ok(Outcome::ok(text, json))
}

fn graded_text(rs: &RootSystem, sub: &Subsystem, g: &GradedBundle, label: &str) -> Result<String> {
    let mut s = String::new();
    for (w, m) in &g.terms {
        let _ = writeln!(s, "{label}{w} x{m}  dim {}", weyl_dim(rs, sub, w)?);
    }
    let _ = writeln!(s, "total dim {}", g.total_dim(rs, sub)?);
    Ok(s)
}

fn tensor(ctx: &Ctx, w: &Two, levi: bool) -> Result<Outcome, Failure> {
    let (rs, sub, a, b, g) = if levi {
        let s = ctx.setup()?;
        let a = s.bundle(&w.weight.0)?;
        let b = s.bundle(&w.weight2.0)?;
        let g = s.levi_tensor(&a, &b)?;
        (
            s.root_system().clone(),
            s.levi().clone(),
            a.into_weight(),
            b.into_weight(),
            g,
        )
    } else {
        let rs = ctx.root_system()?;
        let full = rs.full();
        let a = g_weight(&rs, &w.weight)?;
        let b = g_weight(&rs, &w.weight2)?;
        let (ca, cb) = (irrep_character(&rs, &full, &a)?, irrep_character(&rs, &full, &b)?);
        let prod = char_arith(&ca, &cb, CharOp::Mul, rs.limits())?;
        let g = decompose(&rs, &full, &prod)?;
        (rs, full, a, b, g)
    };
    let label = if levi { "E" } else { "V" };
    let json = json!({
        "command": "tensor", "preset": ctx.group_json(&rs), "subsystem": if levi { "levi" } else { "full" },
        "weight": formats::weight(&a), "weight2": formats::weight(&b),
        "terms": formats::graded(&rs, &sub, &g)?, "total_dim": formats::big(&g.total_dim(&rs, &sub)?),
    });
    Ok(Outcome::ok(graded_text(&rs, &sub, &g, label)?, json))
}

fn branch(ctx: &Ctx, w: &One) -> Result<Outcome, Failure> {
    let s = ctx.setup()?;
    let rs = s.root_system();
    let lambda = g_weight(rs, &w.weight)?;
    let g = s.branch(&lambda)?;
    let json = json!({
        "command": "branch", "preset": ctx.group_json(rs), "crossed": s.crossed() + 1,
        "weight": formats::weight(&lambda), "terms": formats::graded(rs, s.levi(), &g)?,
        "total_dim": formats::big(&g.total_dim(rs, s.levi())?),
    });
    Ok(Outcome::ok(graded_text(rs, s.levi(), &g, "E")?, json))
}

/// Nonzero degrees only; the JSON document lists every degree.
fn table_text(rs: &RootSystem, t: &ExtTable, group: &str) -> Result<String> {
    let mut s = String::new();
    let full = rs.full();
    for (k, e) in t.nonzero_degrees() {
        let _ = writeln!(s, "{group}^{k} dim {}", e.dim);
        for (g, m) in &e.weights {
            let _ = writeln!(s, "  V{g}^* x{m}  (V{g}^* = V{})", rs.dual_dominant(&full, g)?);
        }
    }
    if s.is_empty() {
        let _ = writeln!(s, "{group}^* = 0");
    }
    Ok(s)
}

fn cohomology_cmd(ctx: &Ctx, w: &One) -> Result<Outcome, Failure> {
    let s = ctx.setup()?;
    let rs = s.root_system();
    let b = s.bundle(&w.weight.0)?;
    let t = cohomology_graded(&s, &GradedBundle::single(b.weight().clone()))?;
    let rank = s.bundle_rank(&b)?;
    let text = format!("{b}: rank {rank}\n{}", table_text(rs, &t, "H")?);
    let json = json!({
        "command": "cohomology", "preset": ctx.group_json(rs), "crossed": s.crossed() + 1, "dim_x": s.dim_x(),
        "bundle": {"weight": formats::weight(b.weight())}, "rank": formats::big(&rank),
        "table": formats::ext_table(rs, &t)?,
    });
    Ok(Outcome::ok(text, json))
}

fn ext(ctx: &Ctx, w: &Two) -> Result<Outcome, Failure> {
    let s = ctx.setup()?;
    let rs = s.root_system();
    let a = s.bundle(&w.weight.0)?;
    let b = s.bundle(&w.weight2.0)?;
    let t = ext_table(&s, &a, &b)?;
    let text = format!("Ext({a}, {b})\n{}", table_text(rs, &t, "Ext")?);
    let json = json!({
        "command": "ext", "preset": ctx.group_json(rs), "crossed": s.crossed() + 1, "dim_x": s.dim_x(),
        "a": {"weight": formats::weight(a.weight())}, "b": {"weight": formats::weight(b.weight())},
        "table": formats::ext_table(rs, &t)?,
    });
    Ok(Outcome::ok(text, json))
}

fn c1(ctx: &Ctx, w: &One) -> Result<Outcome, Failure> {
    let s = ctx.setup()?;
    let b = s.bundle(&w.weight.0)?;
    let rank = s.bundle_rank(&b)?;
    let c1 = s.bundle_c1(&b)?;
    let json = json!({
        "command": "c1", "preset": ctx.group_json(s.root_system()), "crossed": s.crossed() + 1,
        "bundle": {"weight": formats::weight(b.weight())}, "rank": formats::big(&rank), "c1": c1,
    });
    Ok(Outcome::ok(format!("{b}: rank {rank}, c1 {c1}\n"), json))
}

pub fn summary_line(r: &VerificationReport) -> String {
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    let time = r.elapsed.unwrap_or(Duration::ZERO).as_secs_f64();
    format!(
        "{}: {verdict}, {} pairs checked, {} violations, {time:.2} s",
        r.collection,
        r.tables.len(),
        r.violations.len()
    )
}

/// Hom matrix with a rule between twist blocks.
fn hom_text(c: &Collection, h: &[Vec<BigUint>]) -> String {
    let blocks = c.twist_blocks();
    let starts: Vec<usize> = blocks.iter().skip(1).map(|b| b.start).collect();
    let width = h.iter().flatten().map(|d| d.to_string().len()).max().unwrap_or(1);
    let idx = c.len().to_string().len();
    let mut s = String::new();
    for (i, row) in h.iter().enumerate() {
        if starts.contains(&i) {
            let _ = writeln!(
                s,
                "{}",
                "-".repeat(idx + 2 + row.len() * (width + 1) + starts.len() * 2)
            );
        }
        let _ = write!(s, "{:>idx$} |", i + 1);
        for (j, d) in row.iter().enumerate() {
            if starts.contains(&j) {
                s.push_str(" |");
            }
            let _ = write!(s, " {:>width$}", d.to_string());
        }
        s.push('\n');
    }
    s
}

fn load_collection(ctx: &Ctx, target: &str, err: &mut dyn Write) -> Result<Collection, Failure> {
    if ctx.g.preset.is_some() || ctx.g.cartan.is_some() || ctx.g.crossed.is_some() {
        let _ = writeln!(
            err,
            "warning: verify takes the group from the collection; --preset, --cartan and --crossed are ignored"
        );
    }
    match verify::builtin(target) {
        Some(c) => Ok(match &ctx.cache {
            Some(cache) => formats::with_cache(c, cache.clone())?,
            None => c,
        }),
        None => {
            let path = PathBuf::from(target);
            if !path.exists() {
                return Err(usage(format!(
                    "`{target}` is neither a built-in collection (cayley27, kapranovQ7) nor a file"
                )));
            }
            Ok(formats::read_collection(&path, ctx.cache.clone())?)
        }
    }
}

fn verify_cmd(ctx: &Ctx, target: &str, err: &mut dyn Write) -> Result<Outcome, Failure> {
    let c = load_collection(ctx, target, err)?;
    let r = driver::verify(&c, ctx.g.jobs)?;
    let mut text = String::new();
    let group = c.preset.as_deref().unwrap_or("custom Cartan matrix");
    let _ = writeln!(
        text,
        "{} bundles on {group}, node {} crossed, dim X = {}",
        c.len(),
        c.setup.crossed() + 1,
        c.setup.dim_x()
    );
    for (i, b) in c.bundles.iter().enumerate() {
        let _ = writeln!(text, "{:>4}  {b}", i + 1);
    }
    let _ = writeln!(
        text,
        "\nHom matrix, entry (i, j) = dim Ext^0(E_i, E_j), ruled by twist blocks:"
    );
    text.push_str(&hom_text(&c, &r.hom_matrix()));
    if r.violations.is_empty() {
        let _ = writeln!(text, "\nno violations");
    } else {
        let _ = writeln!(text, "\nviolations:");
        for v in &r.violations {
            let _ = writeln!(
                text,
                "  ({}, {}) degree {} dim {} {}",
                v.pair.0 + 1,
                v.pair.1 + 1,
                v.degree,
                v.dim,
                v.rule.as_str()
            );
        }
    }
    Ok(Outcome {
        text,
        json: formats::verify_report(&c, &r)?,
        code: if r.passed() { EXIT_OK } else { EXIT_FAIL },
        summary: Some(summary_line(&r)),
    })
}

fn ledger(ctx: &Ctx, source: &str) -> Result<Outcome, Failure> {
    let ids: Vec<Identity> = match source {
        "dump" => {
            let text = formats::ledger_json(&builtin_ledger());
            let json: Value = serde_json::from_str(&text).expect("ledger JSON parses");
            return Ok(Outcome::ok(text, json));
        }
        "builtin" => builtin_ledger(),
        path => formats::read_ledger(std::path::Path::new(path))?,
    };
    let s = ctx.setup()?;
    let rs = s.root_system();
    let results = driver::check_ledger(&s, &ids, ctx.g.jobs).map_err(|(name, e)| Failure {
        code: exit_code(&e),
        message: if name.is_empty() {
            e.to_string()
        } else {
            format!("identity `{name}`: {e}")
        },
    })?;
    let passed = results.iter().filter(|r| r.passed).count();
    let failed = results.len() - passed;
    let group = rs.name().unwrap_or("custom Cartan matrix");
    let mut text = String::new();
    let _ = writeln!(
        text,
        "ledger {source} on {group}, node {} crossed: {} identities, {passed} pass, {failed} fail",
        s.crossed() + 1,
        ids.len()
    );
    let _ = writeln!(text, "note: {LEDGER_LIMITATION}");
    for (id, r) in ids.iter().zip(&results) {
        let terms = id.term_strings();
        let body = match id.kind {
            IdentityKind::Iso => terms.join(" == "),
            IdentityKind::ExactSeq => format!("0 -> {} -> 0", terms.join(" -> ")),
        };
        let _ = writeln!(text, "{}  {}  {body}", if r.passed { "PASS" } else { "FAIL" }, id.name);
        if !r.passed {
            let parts: Vec<String> = r.decomposed.iter().map(|(w, m)| format!("E{w} x{m}")).collect();
            let _ = writeln!(text, "      difference: {}", parts.join(" + "));
        }
    }
    let json = json!({
        "command": "ledger",
        "source": source,
        "preset": ctx.group_json(rs),
        "crossed": s.crossed() + 1,
        "limitation": LEDGER_LIMITATION,
        "total": ids.len(),
        "passed": passed,
        "failed": failed,
        "verdict": if failed == 0 { "pass" } else { "fail" },
        "results": ids.iter().zip(&results).map(|(id, r)| formats::check_result(rs, id, r)).collect::<Vec<_>>(),
    });
    Ok(Outcome {
        text,
        json,
        code: if failed == 0 { EXIT_OK } else { EXIT_FAIL },
        summary: None,
    })
}

fn presets() -> Result<Outcome, Failure> {
    let mut text = String::new();
    let mut list = Vec::new();
    for name in PRESETS {
        let rs = RootSystem::preset(name)?;
        let n = rs.rank();
        let roots = rs.positive_roots().len();
        let _ = writeln!(
            text,
            "{name:<12} rank {n}  positive roots {roots}  dim G {}",
            2 * roots + n
        );
        list.push(json!({
            "name": name, "rank": n, "positive_roots": roots, "dim": 2 * roots + n, "entries": rs.cartan().rows(),
        }));
    }
    Ok(Outcome::ok(text, json!({"command": "presets", "presets": list})))
}
