//! The `gtkk` command line tool.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 verification failure,
//! 3 resource guard (rerun with `--force` where it applies).

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use gtkk_core::charpoly::{demazure_character, schur};
use gtkk_core::crystal::{
    demazure_crystal, opposite_demazure_crystal_of, CrystalGraph, PairSpace, TensorConvention,
};
use gtkk_core::gt::{dimension_oracle, enumerate, Inequality};
use gtkk_core::kk::{cartan_component_in, decompose_in, kk_crystal_in};
use gtkk_core::kogan::{bikogan_union_in, kogan_points, dual_kogan_points, reduced_bifaces, reduced_faces};
use gtkk_core::reading::PairReading;
use gtkk_core::verify::{run_verify_with, VerifyReport};
use gtkk_core::{CharPoly, Error, GtPattern, Partition, Permutation, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SizeGuard { .. } | Error::RankTooLarge { .. } => EXIT_GUARD,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            // the reader went away; nothing left to report
            return Self {
                code: EXIT_OK,
                message: String::new(),
            };
        }
        Self::usage(e.to_string())
    }
}

type CliResult<T = ()> = Result<T, CliError>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    #[default]
    Text,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "gtkk", version, about = "Gelfand-Tsetlin crystals and Kostant-Kumar crystals for sl_n")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for parallel filtering (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Skip the pair-count guard.
    #[arg(long, global = true)]
    pub force: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Permutations and words.
    #[command(subcommand)]
    Perm(PermCmd),
    /// Gelfand-Tsetlin patterns.
    #[command(subcommand)]
    Gt(GtCmd),
    /// Crystal graphs and Demazure crystals.
    #[command(subcommand)]
    Crystal(CrystalCmd),
    /// Reading words of a pair of arrays.
    #[command(subcommand)]
    Reading(ReadingCmd),
    /// Kogan, dual Kogan and BiKogan faces.
    #[command(subcommand)]
    Kogan(KoganCmd),
    /// Kostant-Kumar crystals.
    #[command(subcommand)]
    Kk(KkCmd),
    /// Schur and Demazure characters.
    #[command(name = "char", subcommand)]
    Char(CharCmd),
    /// Run the exhaustive cross-check suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum PermCmd {
    DemazureProduct(WordArgs),
    Evaluate(WordArgs),
    /// Is `u <= v` in Bruhat order? Both in one-line notation.
    BruhatLeq {
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Length and a reduced word of a one-line permutation.
    Length {
        #[arg(long)]
        w: String,
    },
}

#[derive(Debug, Args)]
pub struct WordArgs {
    #[arg(long)]
    pub n: usize,
    /// Comma-separated letters; empty for the identity.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub word: String,
}

#[derive(Debug, Subcommand)]
pub enum GtCmd {
    Enumerate {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        count_only: bool,
    },
    /// Weight of a pattern given as JSON or as a path to a JSON file.
    Weight {
        #[arg(long)]
        pattern: String,
    },
    /// Interlacing violations of a pattern.
    Validate {
        #[arg(long)]
        pattern: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum CrystalCmd {
    Graph {
        #[arg(long)]
        shape: String,
    },
    Demazure {
        #[arg(long)]
        shape: String,
        /// Reduced word for `w`.
        #[arg(long, default_value = "")]
        word: String,
        /// Opposite Demazure crystal indexed by `w = evaluate(word)`.
        #[arg(long)]
        opposite: bool,
    },
    Components {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum ReadingCmd {
    /// f(P), i(Q), w(P,Q), its Demazure product and p(P,Q).
    P {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
}

#[derive(Debug, Args)]
pub struct PermArg {
    /// One-line notation; a shorter prefix is padded with fixed points.
    #[arg(long, conflicts_with = "w_word")]
    pub w: Option<String>,
    /// A word in the simple reflections.
    #[arg(long)]
    pub w_word: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum KoganCmd {
    /// Reduced faces with associated permutation `w` and their points.
    Faces {
        #[arg(long)]
        shape: String,
        #[command(flatten)]
        w: PermArg,
        /// Dual Kogan faces (SE equalities).
        #[arg(long)]
        dual: bool,
    },
    /// Reduced BiKogan faces for `w w0` and the union of their points.
    Bikogan {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[command(flatten)]
        w: PermArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum KkCmd {
    Char {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[command(flatten)]
        w: PermArg,
        #[arg(long)]
        decompose: bool,
        /// Also write the JSON result to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// List the pairs of the crystal.
    Members {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[command(flatten)]
        w: PermArg,
    },
    /// Pairs whose reading word contains a reduced word of w0.
    Cartan {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum CharCmd {
    Schur {
        #[arg(long)]
        shape: String,
    },
    Demazure {
        #[arg(long)]
        shape: String,
        #[arg(long, default_value = "")]
        word: String,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub max_weight: i64,
    /// Use the mirrored tensor convention (expected to fail).
    #[arg(long)]
    pub mirrored: bool,
}

/// Parses arguments; help and version requests come back as code 0.
pub fn parse_args<I, T>(argv: I) -> CliResult<Cli>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Cli::try_parse_from(argv).map_err(|e| {
        let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        CliError {
            code,
            message: e.render().to_string(),
        }
    })
}

fn shape(s: &str) -> CliResult<Partition> {
    s.parse().map_err(|e: Error| CliError::usage(format!("--shape {s}: {e}")))
}

fn list(s: &str) -> CliResult<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| CliError::usage(format!("not a list of positive integers: {s}")))
        })
        .collect()
}

fn word(n: usize, s: &str) -> CliResult<Word> {
    Ok(Word::new(n, list(s)?)?)
}

fn one_line(n: usize, s: &str) -> CliResult<Permutation> {
    let mut images = list(s)?;
    if images.len() > n {
        return Err(CliError::usage(format!("permutation {s} longer than rank {n}")));
    }
    images.extend(images.len() + 1..=n);
    Ok(Permutation::from_one_line(&images)?)
}

fn perm_arg(n: usize, arg: &PermArg) -> CliResult<Permutation> {
    match (&arg.w, &arg.w_word) {
        (Some(w), None) => one_line(n, w),
        (None, Some(w)) => Ok(word(n, w)?.evaluate()),
        _ => Err(CliError::usage("give the permutation with --w or --w-word")),
    }
}

fn pattern(arg: &str) -> CliResult<GtPattern> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(Path::new(arg))
            .map_err(|e| CliError::usage(format!("reading {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::usage(format!("pattern {arg}: {e}")))
}

fn pair_space(lambda: &str, mu: &str, force: bool) -> CliResult<PairSpace> {
    let (l, m) = (shape(lambda)?, shape(mu)?);
    if l.rank() != m.rank() {
        return Err(CliError::usage(format!("shapes {l} and {m} have different lengths")));
    }
    Ok(if force {
        PairSpace::new_forced(&l, &m)?
    } else {
        PairSpace::new(&l, &m)?
    })
}

fn face_text(kind: Inequality, pairs: &std::collections::BTreeSet<(usize, usize)>) -> String {
    if pairs.is_empty() {
        return "-".into();
    }
    pairs
        .iter()
        .map(|(i, j)| format!("{}({i},{j})", kind.name()))
        .collect::<Vec<_>>()
        .join(" ")
}

fn pattern_json(p: &GtPattern) -> Value {
    serde_json::to_value(p).expect("patterns serialize")
}

struct Out<'a> {
    w: &'a mut dyn Write,
    format: Format,
}

impl Out<'_> {
    /// Emits `value` as JSON, or `text` otherwise. `dot` falls back to text.
    fn emit<T: Serialize>(&mut self, value: &T, text: impl FnOnce() -> String) -> CliResult {
        match self.format {
            Format::Json => {
                let s = serde_json::to_string(value).expect("serializable output");
                writeln!(self.w, "{s}")?;
            }
            Format::Text | Format::Dot => {
                let s = text();
                write!(self.w, "{s}")?;
                if !s.ends_with('\n') {
                    writeln!(self.w)?;
                }
            }
        }
        Ok(())
    }
}

fn charpoly_text(c: &CharPoly) -> String {
    c.to_string()
}

fn patterns_text<'a>(ps: impl IntoIterator<Item = &'a GtPattern>) -> String {
    ps.into_iter().map(|p| format!("{p}\n")).collect()
}

/// Runs a parsed command, writing results to `w`.
pub fn run(cli: &Cli, w: &mut dyn Write) -> CliResult {
    match cli.threads {
        Some(0) => Err(CliError::usage("--threads must be positive")),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| CliError::usage(e.to_string()))?;
            let mut buf = Vec::new();
            let result = pool.install(|| dispatch(cli, &mut buf));
            w.write_all(&buf)?;
            result
        }
        None => dispatch(cli, w),
    }
}

fn dispatch(cli: &Cli, w: &mut dyn Write) -> CliResult {
    let mut out = Out { w, format: cli.format };
    let force = cli.force;
    match &cli.command {
        Command::Perm(cmd) => run_perm(cmd, &mut out),
        Command::Gt(cmd) => run_gt(cmd, &mut out),
        Command::Crystal(cmd) => run_crystal(cmd, &mut out, force),
        Command::Reading(ReadingCmd::P { left, right }) => {
            let r = PairReading::new(&pattern(left)?, &pattern(right)?)?;
            out.emit(&r, || {
                format!(
                    "f_word: {}\ni_word: {}\npair_word: {}\ndemazure_product: {}\np: {}\n",
                    r.f_word, r.i_word, r.pair_word, r.demazure_product, r.p
                )
            })
        }
        Command::Kogan(cmd) => run_kogan(cmd, &mut out, force),
        Command::Kk(cmd) => run_kk(cmd, &mut out, force),
        Command::Char(cmd) => run_char(cmd, &mut out),
        Command::Verify(args) => run_verify_cmd(args, &mut out),
    }
}

fn run_perm(cmd: &PermCmd, out: &mut Out) -> CliResult {
    match cmd {
        PermCmd::DemazureProduct(a) | PermCmd::Evaluate(a) => {
            let wd = word(a.n, &a.word)?;
            let p = if matches!(cmd, PermCmd::Evaluate(_)) {
                wd.evaluate()
            } else {
                wd.demazure_product()
            };
            out.emit(&p, || format!("{p}  ({})", p.reduced_word()))
        }
        PermCmd::BruhatLeq { u, v } => {
            let n = list(u)?.len().max(list(v)?.len());
            let (u, v) = (one_line(n, u)?, one_line(n, v)?);
            let leq = u.bruhat_leq(&v)?;
            out.emit(&leq, || leq.to_string())
        }
        PermCmd::Length { w } => {
            let n = list(w)?.len();
            let p = one_line(n, w)?;
            let r = p.reduced_word();
            let v = json!({ "length": p.length(), "reduced_word": r });
            out.emit(&v, || format!("length {}: {r}", p.length()))
        }
    }
}

fn run_gt(cmd: &GtCmd, out: &mut Out) -> CliResult {
    match cmd {
        GtCmd::Enumerate { shape: s, count_only } => {
            let mu = shape(s)?;
            if *count_only {
                let count = dimension_oracle(&mu)?;
                return out.emit(&json!({ "shape": mu, "count": count as u64 }), || count.to_string());
            }
            let ps = enumerate(&mu)?;
            out.emit(&ps, || patterns_text(&ps))
        }
        GtCmd::Weight { pattern: p } => {
            let p = pattern(p)?;
            let wt = p.weight();
            out.emit(&wt, || wt.to_string())
        }
        GtCmd::Validate { pattern: p } => {
            let p = pattern(p)?;
            let v: Vec<Value> = p
                .violations()
                .into_iter()
                .map(|(kind, i, j)| json!({ "inequality": kind, "i": i, "j": j }))
                .collect();
            let report = json!({ "valid": v.is_empty(), "violations": v });
            out.emit(&report, || {
                if v.is_empty() {
                    "valid".into()
                } else {
                    p.violations()
                        .iter()
                        .map(|(k, i, j)| format!("{}({i},{j}) < 0\n", k.name()))
                        .collect()
                }
            })
        }
    }
}

fn run_crystal(cmd: &CrystalCmd, out: &mut Out, force: bool) -> CliResult {
    match cmd {
        CrystalCmd::Graph { shape: s } => {
            let g = CrystalGraph::new(&shape(s)?)?;
            match out.format {
                Format::Dot => {
                    write!(out.w, "{}", g.to_dot())?;
                    Ok(())
                }
                Format::Json => {
                    let v = json!({
                        "vertices": g.vertices.iter().map(pattern_json).collect::<Vec<_>>(),
                        "edges": g.edges.iter().map(|&(a, b, i)| json!({ "from": a, "to": b, "i": i })).collect::<Vec<_>>(),
                    });
                    out.emit(&v, String::new)
                }
                Format::Text => {
                    let mut s = String::new();
                    for &(a, b, i) in &g.edges {
                        s.push_str(&format!("{} --{i}--> {}\n", g.vertices[a], g.vertices[b]));
                    }
                    out.emit(&(), || s)
                }
            }
        }
        CrystalCmd::Demazure { shape: s, word: wd, opposite } => {
            let mu = shape(s)?;
            let wd = word(mu.rank(), wd)?;
            let set = if *opposite {
                if !wd.is_reduced() {
                    return Err(Error::NotReduced(wd.letters().to_vec()).into());
                }
                opposite_demazure_crystal_of(&mu, &wd.evaluate())?
            } else {
                demazure_crystal(&mu, &wd)?
            };
            out.emit(&set, || patterns_text(&set))
        }
        CrystalCmd::Components { lambda, mu } => {
            let space = pair_space(lambda, mu, force)?;
            let comps = space.components(TensorConvention::Kashiwara)?;
            let v: Vec<Value> = comps
                .iter()
                .map(|c| json!({ "highest": c.highest, "highest_weight": c.highest_weight(), "size": c.len() }))
                .collect();
            out.emit(&v, || {
                comps
                    .iter()
                    .map(|c| format!("{} size {}: {}\n", c.highest_weight(), c.len(), c.highest))
                    .collect()
            })
        }
    }
}

fn run_kogan(cmd: &KoganCmd, out: &mut Out, force: bool) -> CliResult {
    match cmd {
        KoganCmd::Faces { shape: s, w, dual } => {
            let mu = shape(s)?;
            let w = perm_arg(mu.rank(), w)?;
            let kind = if *dual { Inequality::SouthEast } else { Inequality::NorthEast };
            let faces = reduced_faces(kind, &w)?;
            let points = if *dual { dual_kogan_points(&mu, &w)? } else { kogan_points(&mu, &w)? };
            let v = json!({
                "kind": kind,
                "w": w,
                "faces": faces.iter().map(|f| json!({ "pairs": f.pairs(), "word": f.word() })).collect::<Vec<_>>(),
                "point_count": points.len(),
                "points": points.iter().map(pattern_json).collect::<Vec<_>>(),
            });
            out.emit(&v, || {
                let mut s = format!("{} reduced {} faces, {} points\n", faces.len(), kind.name(), points.len());
                for f in &faces {
                    s.push_str(&format!("{}  word {}\n", face_text(kind, f.pairs()), f.word()));
                }
                s
            })
        }
        KoganCmd::Bikogan { lambda, mu, w } => {
            let space = pair_space(lambda, mu, force)?;
            let w = perm_arg(space.rank(), w)?;
            let v = w.times_longest();
            let faces = reduced_bifaces(&v)?;
            let points = bikogan_union_in(&space, &v)?;
            let report = json!({
                "w": w,
                "v": v,
                "faces": faces.iter().map(|b| json!({
                    "se_part": b.se_part.pairs(),
                    "ne_part": b.ne_part.pairs(),
                    "word": b.word(),
                })).collect::<Vec<_>>(),
                "point_count": points.len(),
            });
            out.emit(&report, || {
                let mut s = format!(
                    "{} reduced BiKogan faces for v = w w0 = {v}, {} points\n",
                    faces.len(),
                    points.len()
                );
                for b in &faces {
                    s.push_str(&format!(
                        "{} | {}  word {}\n",
                        face_text(Inequality::SouthEast, b.se_part.pairs()),
                        face_text(Inequality::NorthEast, b.ne_part.pairs()),
                        b.word()
                    ));
                }
                s
            })
        }
    }
}

fn run_kk(cmd: &KkCmd, out: &mut Out, force: bool) -> CliResult {
    match cmd {
        KkCmd::Char { lambda, mu, w, decompose, json: path } => {
            let space = pair_space(lambda, mu, force)?;
            let w = perm_arg(space.rank(), w)?;
            let kk = kk_crystal_in(&space, &w)?;
            let character = kk.character();
            let dec = if *decompose {
                Some(decompose_in(&space, &w, TensorConvention::Kashiwara)?)
            } else {
                None
            };
            let report = json!({
                "lambda": kk.lambda,
                "mu": kk.mu,
                "w": w,
                "size": kk.len(),
                "character": character,
                "decomposition": dec.as_ref().map(|d| d.iter().map(|(h, m)| json!({ "weight": h, "mult": m })).collect::<Vec<_>>()),
            });
            if let Some(path) = path {
                std::fs::write(path, serde_json::to_string_pretty(&report).expect("serializable"))?;
            }
            out.emit(&report, || {
                let mut s = format!("size {}\n{}\n", kk.len(), charpoly_text(&character));
                if let Some(d) = &dec {
                    for (h, m) in d {
                        s.push_str(&format!("V{h} x {m}\n"));
                    }
                }
                s
            })
        }
        KkCmd::Members { lambda, mu, w } => {
            let space = pair_space(lambda, mu, force)?;
            let w = perm_arg(space.rank(), w)?;
            let kk = kk_crystal_in(&space, &w)?;
            out.emit(&kk, || kk.members.iter().map(|t| format!("{t}\n")).collect())
        }
        KkCmd::Cartan { lambda, mu } => {
            let space = pair_space(lambda, mu, force)?;
            let pairs = cartan_component_in(&space)?;
            out.emit(&pairs, || pairs.iter().map(|t| format!("{t}\n")).collect())
        }
        KkCmd::Verify(args) => run_verify_cmd(args, out),
    }
}

fn run_char(cmd: &CharCmd, out: &mut Out) -> CliResult {
    let c = match cmd {
        CharCmd::Schur { shape: s } => schur(&shape(s)?)?,
        CharCmd::Demazure { shape: s, word: wd } => {
            let mu = shape(s)?;
            demazure_character(&mu, &word(mu.rank(), wd)?)?
        }
    };
    out.emit(&c, || charpoly_text(&c))
}

fn run_verify_cmd(args: &VerifyArgs, out: &mut Out) -> CliResult {
    let conv = if args.mirrored {
        TensorConvention::Mirrored
    } else {
        TensorConvention::Kashiwara
    };
    let report: VerifyReport = run_verify_with(args.n, args.max_weight, conv)?;
    let text = || {
        let mut s = String::new();
        for c in &report.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            s.push_str(&format!("{mark} {} ({} cases)\n", c.name, c.cases));
            if let Some(ce) = &c.counterexample {
                s.push_str(&format!("     counterexample: {ce}\n"));
            }
        }
        s
    };
    // the report is JSON unless text was asked for explicitly
    match out.format {
        Format::Text => out.emit(&report, text)?,
        _ => {
            let mut o = Out { w: out.w, format: Format::Json };
            o.emit(&report, String::new)?;
        }
    }
    if report.passed {
        Ok(())
    } else {
        Err(CliError {
            code: EXIT_VERIFY,
            message: format!(
                "verification failed: {}",
                report.failed().map(|c| c.name.as_str()).collect::<Vec<_>>().join(", ")
            ),
        })
    }
}
