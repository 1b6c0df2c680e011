//! Command-line front end.
//!
//! Exit status: 0 success, 1 usage or input error, 2 oracle budget
//! exceeded, 3 internal inconsistency (including formula/oracle mismatch).

use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::chartable::{compute_character_table, symmetric_group_character, CharacterTable};
use crate::error::{Error, Result};
use crate::group::{build_group, FiniteGroup, GroupSpec};
use crate::oracle::{oracle_count_with_boundary, Budget};
use crate::surface::{count_general, count_surface, oracle_surface_count, HomCount, SurfaceKind, SurfaceSpec};
use crate::symfunc::{
    contents, genfun_coefficients, hook_product, schur_in_p, schur_side, symmetric_degree_of,
    word_power_sum_average, Partition,
};
use crate::verify::{run_suite, Suite};
use crate::words::{parse_word, recognize_shape, Word};

pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "surfhom",
    version,
    about = "Exact homomorphism counts from surface groups into finite groups"
)]
struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    machine: bool,

    /// Worker threads for brute-force enumeration.
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Maximum number of tuples the oracle may enumerate.
    #[arg(long, global = true)]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Conjugacy classes and the character table.
    Table(GroupArg),
    /// Homomorphisms from a surface group, with optional boundary classes.
    Count(CountArgs),
    /// Solutions of γ(g) c_1 ⋯ c_n = 1 for a word γ.
    CountWord(CountWordArgs),
    /// Brute-force count, optionally compared against the formula.
    Oracle(OracleArgs),
    /// Run a named identity suite.
    Verify(VerifyArgs),
    /// Partitions and symmetric functions.
    Symfunc(SymfuncArgs),
}

#[derive(Args, Debug)]
struct GroupArg {
    /// Group spec such as `builtin:sym:4`, `perms:(1 2 3);(1 2)`, or `@file`.
    #[arg(long)]
    group: String,
}

#[derive(Args, Debug)]
struct SurfaceArgs {
    #[arg(long, requires = "genus", conflicts_with = "nonorientable")]
    orientable: bool,
    /// Genus of an orientable surface.
    #[arg(short = 'g', long, requires = "orientable")]
    genus: Option<usize>,
    #[arg(long, requires = "crosscaps")]
    nonorientable: bool,
    /// Number of crosscaps of a nonorientable surface.
    #[arg(short = 'k', long, requires = "nonorientable")]
    crosscaps: Option<usize>,
}

impl SurfaceArgs {
    fn kind(&self) -> Option<SurfaceKind> {
        match (self.genus, self.crosscaps) {
            (Some(g), _) if self.orientable => Some(SurfaceKind::Orientable(g)),
            (_, Some(k)) if self.nonorientable => Some(SurfaceKind::Nonorientable(k)),
            _ => None,
        }
    }
}

#[derive(Args, Debug)]
struct WordArgs {
    /// Rank of the free group the word lives in.
    #[arg(long)]
    rank: Option<usize>,
    /// Word in `x1, x2, ...`, e.g. `[x1,x2] x3^2`.
    #[arg(long, requires = "rank")]
    word: Option<String>,
}

#[derive(Args, Debug)]
struct BoundaryArg {
    /// Comma-separated boundary classes: `#i`, `id`, `trans`, `cycN`, or
    /// `type:a.b...` (cycle type without fixed points).
    #[arg(long, value_delimiter = ',')]
    boundary: Vec<String>,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[command(flatten)]
    group: GroupArg,
    #[command(flatten)]
    surface: SurfaceArgs,
    #[command(flatten)]
    boundary: BoundaryArg,
    /// Also print the per-character summands.
    #[arg(long)]
    terms: bool,
}

#[derive(Args, Debug)]
struct CountWordArgs {
    #[command(flatten)]
    group: GroupArg,
    #[command(flatten)]
    word: WordArgs,
    #[command(flatten)]
    boundary: BoundaryArg,
    #[arg(long)]
    terms: bool,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[command(flatten)]
    group: GroupArg,
    #[command(flatten)]
    surface: SurfaceArgs,
    #[command(flatten)]
    word: WordArgs,
    #[command(flatten)]
    boundary: BoundaryArg,
    /// Compare against the character formula; exit 3 on disagreement.
    #[arg(long)]
    compare: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// One of solomon, tuple-sum, linear-limit, symfunc-theorem,
    /// specialization, genfun, all.
    #[arg(long)]
    suite: String,
}

#[derive(Args, Debug)]
struct SymfuncArgs {
    #[command(subcommand)]
    command: SymfuncCommand,
}

#[derive(Subcommand, Debug)]
enum SymfuncCommand {
    /// Hook product, contents and character degree of a partition.
    Hooks {
        #[arg(long)]
        partition: String,
    },
    /// Schur function in the power-sum basis.
    Schur {
        #[arg(long)]
        partition: String,
    },
    /// Coefficients of Σ_n Σ_λ (n!/H_λ)^e x^n up to x^N.
    Genfun {
        #[arg(long, allow_hyphen_values = true)]
        exponent: i64,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Symmetric-group character value χ^λ(μ).
    Character {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Word power-sum average on S_n and its Schur-side expansion.
    Average {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        word: String,
        #[arg(short = 'n', long)]
        n: usize,
    },
}

/// Output of one command: text lines and the JSON fields.
struct Report {
    command: &'static str,
    group: Option<String>,
    parameters: Map<String, Value>,
    result: Value,
    terms: Option<Vec<String>>,
    text: Vec<String>,
    status: i32,
}

impl Report {
    fn new(command: &'static str) -> Self {
        Report {
            command,
            group: None,
            parameters: Map::new(),
            result: Value::Null,
            terms: None,
            text: Vec::new(),
            status: 0,
        }
    }

    fn param(&mut self, key: &str, v: impl Into<Value>) {
        self.parameters.insert(key.to_string(), v.into());
    }

    fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("command".into(), self.command.into());
        obj.insert(
            "group".into(),
            self.group.clone().map_or(Value::Null, Value::String),
        );
        obj.insert("parameters".into(), Value::Object(self.parameters.clone()));
        obj.insert("result".into(), self.result.clone());
        if let Some(t) = &self.terms {
            obj.insert("terms".into(), t.clone().into());
        }
        Value::Object(obj)
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit status. Output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return 0;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    let machine = cli.machine;
    match dispatch(cli) {
        Ok(report) => {
            let written = if machine {
                writeln!(out, "{}", report.to_json())
            } else {
                report.text.iter().try_for_each(|l| writeln!(out, "{l}"))
            };
            if written.is_err() {
                return EXIT_USAGE;
            }
            report.status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        e if e.is_internal() => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

fn budget(cli: &Cli) -> Result<Budget> {
    let mut b = Budget::from_env()?;
    if let Some(w) = cli.workers {
        if w == 0 {
            return Err(Error::InvalidArgument("--workers must be at least 1".into()));
        }
        b.workers = w;
    }
    if let Some(m) = cli.budget {
        b.max_tuples = m;
    }
    Ok(b)
}

fn load_group(arg: &GroupArg) -> Result<(String, Arc<FiniteGroup>)> {
    let text = match arg.group.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::GroupSpec(format!("cannot read {path}: {e}")))?,
        None => arg.group.clone(),
    };
    let spec: GroupSpec = text.trim().parse()?;
    let g = build_group(&spec)?;
    Ok((spec.to_string(), Arc::new(g)))
}

/// Resolves a boundary class name against the group's classes.
pub fn resolve_class(g: &FiniteGroup, name: &str) -> Result<usize> {
    let classes = g.classes();
    let by_type = |target: Vec<usize>| -> Result<usize> {
        let hits: Vec<usize> = (0..classes.len())
            .filter(|&c| {
                let ct: Vec<usize> = g
                    .element(classes.representative(c))
                    .cycle_type()
                    .into_iter()
                    .filter(|&l| l > 1)
                    .collect();
                ct == target
            })
            .collect();
        match hits.as_slice() {
            [c] => Ok(*c),
            [] => Err(Error::ClassName(format!("{name}: no class has this cycle type"))),
            many => Err(Error::ClassName(format!(
                "{name} is ambiguous: matches {}",
                many.iter().map(|c| format!("#{c}")).collect::<Vec<_>>().join(", ")
            ))),
        }
    };
    let bad = || Error::ClassName(name.to_string());
    let name = name.trim();
    if let Some(i) = name.strip_prefix('#') {
        let i: usize = i.parse().map_err(|_| bad())?;
        return if i < classes.len() { Ok(i) } else { Err(bad()) };
    }
    if name == "id" {
        return Ok(0);
    }
    if name == "trans" {
        return by_type(vec![2]);
    }
    if let Some(n) = name.strip_prefix("cyc") {
        let n: usize = n.parse().map_err(|_| bad())?;
        return if n == 1 { Ok(0) } else { by_type(vec![n]) };
    }
    if let Some(t) = name.strip_prefix("type:") {
        let mut parts: Vec<usize> = t
            .split('.')
            .map(|p| p.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        parts.retain(|&p| p > 1);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        return if parts.is_empty() { Ok(0) } else { by_type(parts) };
    }
    Err(bad())
}

fn resolve_boundary(g: &FiniteGroup, names: &[String]) -> Result<Vec<usize>> {
    names
        .iter()
        .filter(|n| !n.trim().is_empty())
        .map(|n| resolve_class(g, n))
        .collect()
}

fn boundary_json(b: &[usize]) -> Value {
    b.iter().map(|c| format!("#{c}")).collect::<Vec<_>>().into()
}

fn kind_params(r: &mut Report, kind: SurfaceKind) {
    match kind {
        SurfaceKind::Orientable(g) => {
            r.param("orientable", true);
            r.param("genus", g.to_string());
        }
        SurfaceKind::Nonorientable(k) => {
            r.param("orientable", false);
            r.param("crosscaps", k.to_string());
        }
    }
}

fn put_count(r: &mut Report, c: &HomCount, terms: bool) {
    r.result = c.value.to_string().into();
    r.line(c.value.to_string());
    if terms {
        let t: Vec<String> = c.terms.iter().map(ToString::to_string).collect();
        for (i, s) in t.iter().enumerate() {
            r.line(format!("  X{i}: {s}"));
        }
        r.terms = Some(t);
    }
}

fn table_for(g: &Arc<FiniteGroup>) -> Result<CharacterTable> {
    compute_character_table(g.clone())
}

fn dispatch(cli: Cli) -> Result<Report> {
    let budget = budget(&cli)?;
    match cli.command {
        Command::Table(a) => cmd_table(&a),
        Command::Count(a) => cmd_count(&a),
        Command::CountWord(a) => cmd_count_word(&a, &budget),
        Command::Oracle(a) => cmd_oracle(&a, &budget),
        Command::Verify(a) => cmd_verify(&a, &budget),
        Command::Symfunc(a) => cmd_symfunc(a.command, &budget),
    }
}

fn cmd_table(a: &GroupArg) -> Result<Report> {
    let (name, g) = load_group(a)?;
    let t = table_for(&g)?;
    let classes = g.classes();
    let mut r = Report::new("table");
    r.group = Some(name.clone());
    r.line(format!("group {name}"));
    r.line(format!(
        "order {}, exponent {}, {} classes",
        g.order(),
        g.exponent(),
        classes.len()
    ));
    r.line("class  size  order  representative");
    let mut class_json = Vec::new();
    for c in 0..classes.len() {
        let rep = classes.representative(c);
        let perm = g.element(rep).to_string();
        r.line(format!(
            "#{:<5} {:<5} {:<6} {}",
            c,
            classes.size(c),
            g.element_order(rep),
            perm
        ));
        class_json.push(json!({
            "index": c.to_string(),
            "size": classes.size(c).to_string(),
            "order": g.element_order(rep).to_string(),
            "representative": perm,
            "inverse": format!("#{}", classes.inverse_class(c)),
        }));
    }
    r.line("char  degree  indicator  values");
    let mut char_json = Vec::new();
    for chi in 0..t.len() {
        let values: Vec<String> = t.row(chi).iter().map(ToString::to_string).collect();
        r.line(format!(
            "X{:<4} {:<7} {:<10} {}",
            chi,
            t.degree(chi),
            t.indicator(chi),
            values.join(" | ")
        ));
        char_json.push(json!({
            "degree": t.degree(chi).to_string(),
            "indicator": t.indicator(chi).to_string(),
            "values": values,
        }));
    }
    r.result = json!({
        "order": g.order().to_string(),
        "exponent": g.exponent().to_string(),
        "classes": class_json,
        "characters": char_json,
    });
    Ok(r)
}

fn cmd_count(a: &CountArgs) -> Result<Report> {
    let kind = a
        .surface
        .kind()
        .ok_or_else(|| Error::InvalidArgument("give --orientable -g <g> or --nonorientable -k <k>".into()))?;
    let (name, g) = load_group(&a.group)?;
    let boundary = resolve_boundary(&g, &a.boundary.boundary)?;
    let t = table_for(&g)?;
    let mut r = Report::new("count");
    r.group = Some(name);
    kind_params(&mut r, kind);
    r.param("boundary", boundary_json(&boundary));
    let c = count_surface(&t, &SurfaceSpec { kind, boundary })?;
    put_count(&mut r, &c, a.terms);
    Ok(r)
}

fn parse_word_args(w: &WordArgs) -> Result<Option<Word>> {
    match (&w.word, w.rank) {
        (Some(text), Some(rank)) => parse_word(text, rank).map(Some),
        (None, None) => Ok(None),
        _ => Err(Error::InvalidArgument("--word and --rank go together".into())),
    }
}

fn cmd_count_word(a: &CountWordArgs, budget: &Budget) -> Result<Report> {
    let w = parse_word_args(&a.word)?.ok_or_else(|| Error::InvalidArgument("--word is required".into()))?;
    let (name, g) = load_group(&a.group)?;
    let boundary = resolve_boundary(&g, &a.boundary.boundary)?;
    let t = table_for(&g)?;
    let mut r = Report::new("count-word");
    r.group = Some(name);
    r.param("rank", w.rank().to_string());
    r.param("word", w.to_string());
    r.param("shape", format!("{:?}", recognize_shape(&w)));
    r.param("boundary", boundary_json(&boundary));
    let c = count_general(&w, &t, &boundary, budget)?;
    put_count(&mut r, &c, a.terms);
    Ok(r)
}

fn cmd_oracle(a: &OracleArgs, budget: &Budget) -> Result<Report> {
    let word = parse_word_args(&a.word)?;
    let kind = a.surface.kind();
    let (name, g) = load_group(&a.group)?;
    let boundary = resolve_boundary(&g, &a.boundary.boundary)?;
    let mut r = Report::new("oracle");
    r.group = Some(name);
    r.param("boundary", boundary_json(&boundary));
    r.param("compare", a.compare);

    let (brute, formula) = match (word, kind) {
        (Some(w), None) => {
            r.param("rank", w.rank().to_string());
            r.param("word", w.to_string());
            let brute = oracle_count_with_boundary(&w, &g, &boundary, budget)?;
            let formula = if a.compare {
                Some(count_general(&w, &table_for(&g)?, &boundary, budget)?.value)
            } else {
                None
            };
            (brute, formula)
        }
        (None, Some(kind)) => {
            kind_params(&mut r, kind);
            let t = table_for(&g)?;
            let spec = SurfaceSpec { kind, boundary };
            let brute = oracle_surface_count(&t, &spec, budget)?;
            let formula = if a.compare {
                Some(count_surface(&t, &spec)?.value)
            } else {
                None
            };
            (brute, formula)
        }
        _ => {
            return Err(Error::InvalidArgument(
                "give exactly one of a surface (-g / -k) or --rank with --word".into(),
            ))
        }
    };

    match formula {
        None => {
            r.result = brute.to_string().into();
            r.line(brute.to_string());
        }
        Some(f) => {
            let agree = f == brute;
            r.result = json!({
                "oracle": brute.to_string(),
                "formula": f.to_string(),
                "agree": agree,
            });
            r.line(format!("oracle  {brute}"));
            r.line(format!("formula {f}"));
            r.line(if agree { "agree" } else { "MISMATCH" });
            if !agree {
                r.status = EXIT_INTERNAL;
            }
        }
    }
    Ok(r)
}

fn cmd_verify(a: &VerifyArgs, budget: &Budget) -> Result<Report> {
    let suite: Suite = a.suite.parse()?;
    let checks = run_suite(suite, budget)?;
    let mut r = Report::new("verify");
    r.param("suite", suite.name());
    let passed = checks.iter().filter(|c| c.passed()).count();
    let mut rows = Vec::new();
    for c in &checks {
        if c.passed() {
            r.line(format!("PASS {}: {}", c.suite, c.name));
        } else {
            r.line(format!("FAIL {}: {} ({} != {})", c.suite, c.name, c.left, c.right));
        }
        rows.push(json!({
            "suite": c.suite,
            "check": c.name,
            "left": c.left,
            "right": c.right,
            "pass": c.passed(),
        }));
    }
    r.line(format!("{passed}/{} checks passed", checks.len()));
    r.result = json!({
        "checks": rows,
        "passed": passed.to_string(),
        "total": checks.len().to_string(),
    });
    if passed != checks.len() {
        r.status = EXIT_INTERNAL;
    }
    Ok(r)
}

fn partition_arg(s: &str) -> Result<Partition> {
    s.parse()
}

fn cmd_symfunc(cmd: SymfuncCommand, budget: &Budget) -> Result<Report> {
    let mut r = Report::new("symfunc");
    match cmd {
        SymfuncCommand::Hooks { partition } => {
            let lambda = partition_arg(&partition)?;
            r.param("operation", "hooks");
            r.param("partition", lambda.to_string());
            let h = hook_product(&lambda);
            let d = symmetric_degree_of(&lambda);
            let c: Vec<String> = contents(&lambda).iter().map(ToString::to_string).collect();
            r.line(format!("hook product {h}"));
            r.line(format!("degree {d}"));
            r.line(format!("contents {}", c.join(" ")));
            r.result = json!({
                "hook_product": h.to_string(),
                "degree": d.to_string(),
                "contents": c,
            });
        }
        SymfuncCommand::Schur { partition } => {
            let lambda = partition_arg(&partition)?;
            r.param("operation", "schur");
            r.param("partition", lambda.to_string());
            let s = schur_in_p(&lambda);
            r.line(format!("s{lambda} = {s}"));
            r.result = json!({
                "expansion": s.to_string(),
                "coefficients": s.terms().map(|(mu, c)| json!([mu.to_string(), c.to_string()])).collect::<Vec<_>>(),
            });
        }
        SymfuncCommand::Genfun { exponent, max_n } => {
            r.param("operation", "genfun");
            r.param("exponent", exponent.to_string());
            r.param("max_n", max_n.to_string());
            let c: Vec<String> = genfun_coefficients(exponent, max_n)?
                .iter()
                .map(ToString::to_string)
                .collect();
            r.line(c.join(" "));
            r.result = c.into();
        }
        SymfuncCommand::Character { lambda, mu } => {
            let (lambda, mu) = (partition_arg(&lambda)?, partition_arg(&mu)?);
            r.param("operation", "character");
            r.param("lambda", lambda.to_string());
            r.param("mu", mu.to_string());
            let v = symmetric_group_character(&lambda, &mu)?;
            r.line(v.to_string());
            r.result = v.to_string().into();
        }
        SymfuncCommand::Average { rank, word, n } => {
            let w = parse_word(&word, rank)?;
            r.param("operation", "average");
            r.param("word", w.to_string());
            r.param("rank", rank.to_string());
            r.param("n", n.to_string());
            let left = word_power_sum_average(&w, n, budget)?;
            let right = schur_side(&w, n, budget)?;
            let agree = left == right;
            r.line(format!("average {left}"));
            r.line(format!("schur   {right}"));
            r.line(if agree { "agree" } else { "MISMATCH" });
            r.result = json!({
                "average": left.to_string(),
                "schur": right.to_string(),
                "agree": agree,
            });
            if !agree {
                r.status = EXIT_INTERNAL;
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("surfhom").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn count_examples() {
        let (c, out, _) = run_str(&["count", "--group", "builtin:sym:3", "--nonorientable", "-k", "1"]);
        assert_eq!((c, out.as_str()), (0, "4\n"));
        let (c, out, _) = run_str(&["count", "--group", "builtin:sym:3", "--orientable", "-g", "0"]);
        assert_eq!((c, out.as_str()), (0, "1\n"));
        let (c, out, _) = run_str(&[
            "count",
            "--group",
            "builtin:sym:3",
            "--nonorientable",
            "-k",
            "1",
            "--boundary",
            "cyc3",
        ]);
        assert_eq!((c, out.as_str()), (0, "2\n"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["count", "--group", "builtin:sym:3"]).0, EXIT_USAGE);
        assert_eq!(
            run_str(&["count", "--group", "builtin:sym:3", "--orientable", "-g", "1", "--nonorientable", "-k", "1"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_str(&["count", "--group", "builtin:nope:3", "--orientable", "-g", "1"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn class_names() {
        let g = build_group(&"builtin:sym:4".parse().unwrap()).unwrap();
        let t = resolve_class(&g, "trans").unwrap();
        assert_eq!(g.element(g.classes().representative(t)).cycle_type(), vec![2, 1, 1]);
        assert_eq!(resolve_class(&g, "type:2.2").unwrap(), resolve_class(&g, "type:2.2.1.1").unwrap());
        assert_eq!(resolve_class(&g, "id").unwrap(), 0);
        assert_eq!(resolve_class(&g, "cyc1").unwrap(), 0);
        assert!(resolve_class(&g, "cyc5").is_err());
        assert!(resolve_class(&g, "#5").is_err());
        let a4 = build_group(&"builtin:alt:4".parse().unwrap()).unwrap();
        let e = resolve_class(&a4, "cyc3").unwrap_err();
        assert!(e.to_string().contains("ambiguous"), "{e}");
    }

    #[test]
    fn budget_exit_code() {
        let (c, _, err) = run_str(&[
            "--budget",
            "10",
            "oracle",
            "--group",
            "builtin:sym:3",
            "--orientable",
            "-g",
            "1",
        ]);
        assert_eq!(c, EXIT_BUDGET, "{err}");
    }

    #[test]
    fn oracle_compare() {
        let (c, out, _) = run_str(&[
            "oracle", "--group", "builtin:q8", "--nonorientable", "-k", "2", "--boundary", "#2", "--compare",
        ]);
        assert_eq!(c, 0);
        assert!(out.ends_with("agree\n"), "{out}");
        let (c, out, _) = run_str(&["oracle", "--group", "builtin:sym:3", "--rank", "2", "--word", "[x1,x2]"]);
        assert_eq!((c, out.as_str()), (0, "18\n"));
    }

    #[test]
    fn machine_output_is_json_with_string_integers() {
        let (c, out, _) = run_str(&["--machine", "count", "--group", "builtin:sym:3", "--orientable", "-g", "2", "--terms"]);
        assert_eq!(c, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"], "486");
        assert_eq!(v["command"], "count");
        assert_eq!(v["terms"].as_array().unwrap().len(), 3);
        assert_eq!(out.lines().count(), 1);
    }

    #[test]
    fn symfunc_commands() {
        let (_, out, _) = run_str(&["symfunc", "hooks", "--partition", "2,1"]);
        assert!(out.starts_with("hook product 3\ndegree 2\n"), "{out}");
        let (_, out, _) = run_str(&["symfunc", "genfun", "--exponent", "0", "--max-n", "5"]);
        assert_eq!(out, "1 1 2 3 5 7\n");
        let (_, out, _) = run_str(&["symfunc", "genfun", "--exponent", "-1", "--max-n", "3"]);
        assert_eq!(out, "1 1 2 5/2\n");
        let (_, out, _) = run_str(&["symfunc", "character", "--lambda", "2,1", "--mu", "3"]);
        assert_eq!(out, "-1\n");
        let (c, out, _) = run_str(&["symfunc", "average", "--rank", "2", "--word", "[x1,x2]", "-n", "3"]);
        assert_eq!(c, 0);
        assert!(out.ends_with("agree\n"));
    }
}
