//! Command-line front end: argument parsing, input loading and report emission.

pub mod format;
pub mod report;

use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gassmann_core::gassmann::{catalog, catalog_instance, is_gassmann_triple, subgroup_from_images};
use gassmann_core::group::{
    abelianization, conjugacy_classes, FiniteGroup, PermGroup, Permutation, Subgroup,
};
use gassmann_core::tilde::{is_odd_prime, TildeGroup};
use gassmann_core::verify::{
    verify_decomposition, verify_irreducibility, verify_main_distinguish, verify_theorem_group_exhaustive,
    VerificationReport,
};
use gassmann_core::{Error, DEFAULT_ELEMENT_CAP};
use serde_json::{json, Value};

use crate::format::{parse_group_file, serialize_group_file, FormatError, GroupFile};
use crate::report::{document, verification_json, verification_text};

/// Overrides the default element cap when `--cap` is not given.
pub const CAP_ENV: &str = "GASSMANN_ELEMENT_CAP";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Core(Error::CapExceeded { .. }) => "resource",
            CliError::Core(Error::Hypothesis(_)) => "hypothesis",
            CliError::Core(Error::Inconsistent(_)) => "inconsistent",
            _ => "usage",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind() {
            "resource" => EXIT_CAP,
            "hypothesis" | "inconsistent" => EXIT_FAIL,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "gassmann", version, about = "Exact verifier for Gassmann triples and induced characters")]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Odd prime l of the construction C_l^n ⋊ G.
    #[arg(long, global = true, default_value_t = 3)]
    l: u32,
    /// Maximum number of group elements to enumerate.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    cap: Option<u64>,
    /// Worker count. Results do not depend on it.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    threads: u64,
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
}

/// A group file path, or `catalog:<name>:<g|h|h2>`.
#[derive(Args, Debug)]
struct Pair {
    g: String,
    h: String,
}

#[derive(Args, Debug)]
struct Triple {
    g: String,
    h: String,
    h2: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Inspect a permutation group.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Gassmann triple detection.
    #[command(subcommand)]
    Gassmann(GassmannCmd),
    /// The semidirect product C_l^n ⋊ G.
    #[command(subcommand)]
    Tilde(TildeCmd),
    /// Theorem oracles.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Built-in instances.
    #[command(subcommand)]
    Catalog(CatalogCmd),
}

#[derive(Subcommand, Debug)]
enum GroupCmd {
    Info { g: String },
}

#[derive(Subcommand, Debug)]
enum GassmannCmd {
    Check(Triple),
}

#[derive(Subcommand, Debug)]
enum TildeCmd {
    Build(Pair),
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    Irreducible(Pair),
    Decomposition(Pair),
    TheoremGroup(Pair),
    Distinguish(Triple),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Part {
    G,
    H,
    H2,
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    List,
    Show {
        name: String,
        /// Which group of the triple to print.
        #[arg(long, value_enum, default_value_t = Part::G)]
        part: Part,
    },
}

struct Config {
    l: u32,
    cap: usize,
    json: bool,
}

impl Config {
    fn from_opts(opts: &GlobalOpts, env_cap: Option<String>) -> Result<Self, CliError> {
        if !is_odd_prime(opts.l) {
            return Err(Error::InvalidPrime(opts.l).into());
        }
        let cap = match (opts.cap, env_cap) {
            (Some(c), _) => c as usize,
            (None, Some(v)) => match v.trim().parse::<usize>() {
                Ok(c) if c >= 1 => c,
                _ => return Err(CliError::Usage(format!("{CAP_ENV} must be a positive integer, got {v:?}"))),
            },
            (None, None) => DEFAULT_ELEMENT_CAP,
        };
        Ok(Config { l: opts.l, cap, json: opts.json })
    }

    fn to_json(&self) -> Value {
        json!({
            "l": self.l,
            "cap": self.cap,
            "output": if self.json { "json" } else { "human" },
        })
    }
}

/// What a successful command produced.
struct Run {
    passed: bool,
    details: Value,
    text: String,
}

fn load_file(spec: &str) -> Result<GroupFile, CliError> {
    if let Some(rest) = spec.strip_prefix("catalog:") {
        let (name, part) = rest.rsplit_once(':').unwrap_or((rest, "g"));
        let inst = catalog_instance(name)?;
        let generators = match part {
            "g" => inst.g,
            "h" => inst.h,
            "h2" => inst.h_prime,
            other => return Err(CliError::Usage(format!("unknown catalog part {other:?}; use g, h or h2"))),
        };
        return Ok(GroupFile { degree: inst.degree, generators });
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| CliError::Io { path: spec.to_string(), message: e.to_string() })?;
    parse_group_file(&text).map_err(|source| CliError::Format { path: spec.to_string(), source })
}

fn load_group(spec: &str, cap: usize) -> Result<PermGroup, CliError> {
    let file = load_file(spec)?;
    let gens = file.generators.iter().map(|g| Permutation::new(g.clone())).collect::<Result<Vec<_>, _>>()?;
    Ok(PermGroup::generate(file.degree, &gens, cap)?)
}

fn load_subgroup(group: &PermGroup, spec: &str) -> Result<Subgroup, CliError> {
    let file = load_file(spec)?;
    if file.degree != group.degree() {
        return Err(Error::NotSubgroup(format!(
            "{spec} has degree {}, the group has degree {}",
            file.degree,
            group.degree()
        ))
        .into());
    }
    Ok(subgroup_from_images(group, &file.generators)?)
}

fn group_info(spec: &str, cfg: &Config) -> Result<Run, CliError> {
    let g = load_group(spec, cfg.cap)?;
    let whole = Arc::new(Subgroup::whole(&g));
    let classes = conjugacy_classes(&g, whole.clone());
    let ab = abelianization(&g, &whole);
    let gens: Vec<Vec<u32>> = g.generator_permutations().iter().map(|p| p.images().to_vec()).collect();
    let text = format!(
        "degree: {}\norder: {}\ngenerators: {}\nconjugacy classes: {} (sizes {:?})\nabelianization: {:?}\n",
        g.degree(),
        g.order(),
        gens.len(),
        classes.len(),
        classes.sizes(),
        ab.invariants()
    );
    let details = json!({
        "degree": g.degree(),
        "order": g.order(),
        "generators": gens,
        "class_sizes": classes.sizes(),
        "abelian_invariants": ab.invariants(),
    });
    Ok(Run { passed: true, details, text })
}

fn gassmann_check(t: &Triple, cfg: &Config) -> Result<Run, CliError> {
    let g = load_group(&t.g, cfg.cap)?;
    let h = Arc::new(load_subgroup(&g, &t.h)?);
    let h2 = Arc::new(load_subgroup(&g, &t.h2)?);
    let table = Arc::new(conjugacy_classes(&g, Arc::new(Subgroup::whole(&g))));
    let r = is_gassmann_triple(&g, &table, &h, &h2)?;
    let rows: Vec<Value> = r
        .class_intersections
        .iter()
        .zip(&r.class_sizes)
        .zip(table.representatives())
        .map(|(((a, b), size), &rep)| {
            json!({ "representative": g.element(rep).images(), "size": size, "h": a, "h2": b })
        })
        .collect();
    let mut text = format!(
        "|G| = {}, |H| = {}, |H'| = {}\nis_gassmann: {}\nis_trivial: {}\n",
        g.order(),
        h.order(),
        h2.order(),
        r.is_gassmann,
        r.is_trivial
    );
    text.push_str("class size  |c∩H|  |c∩H'|\n");
    for ((a, b), size) in r.class_intersections.iter().zip(&r.class_sizes) {
        text.push_str(&format!("{size:>10}  {a:>5}  {b:>6}\n"));
    }
    let details = json!({
        "is_gassmann": r.is_gassmann,
        "is_trivial": r.is_trivial,
        "criteria_agree": true,
        "witness": r.witness.map(|w| g.element(w).images().to_vec()),
        "class_intersections": rows,
    });
    Ok(Run { passed: true, details, text })
}

fn tilde_build(p: &Pair, cfg: &Config) -> Result<Run, CliError> {
    let g = load_group(&p.g, cfg.cap)?;
    let h = load_subgroup(&g, &p.h)?;
    let t = TildeGroup::new(g, &h, cfg.l, cfg.cap)?;
    let h_tilde = t.h_tilde();
    let u = t.chi_kernel();
    let sigma: Vec<Value> = t
        .base()
        .generators()
        .iter()
        .map(|&s| json!({ "generator": t.base().element(s).images(), "sigma": t.action().sigma(s) }))
        .collect();
    let text = format!(
        "l = {}, n = [G : H] = {}\n|G~| = {}\n|H~| = {}\n|U| = |ker χ| = {}\n",
        t.l(),
        t.n(),
        t.order(),
        h_tilde.order(),
        u.order()
    );
    let details = json!({
        "l": t.l(),
        "n": t.n(),
        "order": t.order(),
        "h_tilde_order": h_tilde.order(),
        "kernel_order": u.order(),
        "coset_representatives": t
            .action()
            .cosets()
            .representatives()
            .iter()
            .map(|&x| t.base().element(x).images().to_vec())
            .collect::<Vec<_>>(),
        "coset_action": sigma,
    });
    Ok(Run { passed: true, details, text })
}

fn verification(r: VerificationReport) -> Run {
    Run { passed: r.passed(), details: verification_json(&r), text: verification_text(&r) }
}

fn verify(cmd: &VerifyCmd, cfg: &Config) -> Result<Run, CliError> {
    let r = match cmd {
        VerifyCmd::Irreducible(p) | VerifyCmd::Decomposition(p) | VerifyCmd::TheoremGroup(p) => {
            let g = load_group(&p.g, cfg.cap)?;
            let h = load_subgroup(&g, &p.h)?;
            match cmd {
                VerifyCmd::Irreducible(_) => verify_irreducibility(&g, &h, cfg.l, cfg.cap)?,
                VerifyCmd::Decomposition(_) => verify_decomposition(&g, &h, cfg.l, cfg.cap)?,
                _ => verify_theorem_group_exhaustive(&g, &h, cfg.l, cfg.cap)?,
            }
        }
        VerifyCmd::Distinguish(t) => {
            let g = load_group(&t.g, cfg.cap)?;
            let h = load_subgroup(&g, &t.h)?;
            let h2 = load_subgroup(&g, &t.h2)?;
            verify_main_distinguish(&g, &h, &h2, cfg.l, cfg.cap)?
        }
    };
    Ok(verification(r))
}

fn catalog_cmd(cmd: &CatalogCmd) -> Result<Run, CliError> {
    match cmd {
        CatalogCmd::List => {
            let entries: Vec<Value> = catalog()
                .iter()
                .map(|c| json!({ "name": c.name, "degree": c.degree, "description": c.description }))
                .collect();
            let text = catalog().iter().map(|c| format!("{:<8} {}\n", c.name, c.description)).collect();
            Ok(Run { passed: true, details: json!({ "instances": entries }), text })
        }
        CatalogCmd::Show { name, part } => {
            let inst = catalog_instance(name)?;
            let (label, generators) = match part {
                Part::G => ("G", inst.g.clone()),
                Part::H => ("H", inst.h.clone()),
                Part::H2 => ("H'", inst.h_prime.clone()),
            };
            let file = GroupFile { degree: inst.degree, generators };
            let text = serialize_group_file(&file, Some(&format!("{}: {label}", inst.name)));
            let details = json!({ "name": inst.name, "part": label, "text": text });
            Ok(Run { passed: true, details, text })
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Group(GroupCmd::Info { .. }) => "group info",
        Command::Gassmann(GassmannCmd::Check(_)) => "gassmann check",
        Command::Tilde(TildeCmd::Build(_)) => "tilde build",
        Command::Verify(VerifyCmd::Irreducible(_)) => "verify irreducible",
        Command::Verify(VerifyCmd::Decomposition(_)) => "verify decomposition",
        Command::Verify(VerifyCmd::TheoremGroup(_)) => "verify theorem-group",
        Command::Verify(VerifyCmd::Distinguish(_)) => "verify distinguish",
        Command::Catalog(CatalogCmd::List) => "catalog list",
        Command::Catalog(CatalogCmd::Show { .. }) => "catalog show",
    }
}

fn inputs_json(c: &Command) -> Value {
    match c {
        Command::Group(GroupCmd::Info { g }) => json!({ "G": g }),
        Command::Tilde(TildeCmd::Build(p))
        | Command::Verify(VerifyCmd::Irreducible(p))
        | Command::Verify(VerifyCmd::Decomposition(p))
        | Command::Verify(VerifyCmd::TheoremGroup(p)) => json!({ "G": p.g, "H": p.h }),
        Command::Gassmann(GassmannCmd::Check(t)) | Command::Verify(VerifyCmd::Distinguish(t)) => {
            json!({ "G": t.g, "H": t.h, "H'": t.h2 })
        }
        Command::Catalog(CatalogCmd::List) => json!({}),
        Command::Catalog(CatalogCmd::Show { name, part }) => {
            json!({ "name": name, "part": format!("{part:?}").to_lowercase() })
        }
    }
}

fn dispatch(c: &Command, cfg: &Config) -> Result<Run, CliError> {
    match c {
        Command::Group(GroupCmd::Info { g }) => group_info(g, cfg),
        Command::Gassmann(GassmannCmd::Check(t)) => gassmann_check(t, cfg),
        Command::Tilde(TildeCmd::Build(p)) => tilde_build(p, cfg),
        Command::Verify(v) => verify(v, cfg),
        Command::Catalog(cat) => catalog_cmd(cat),
    }
}

/// Runs one invocation (`argv[0]` is the program name) and returns the exit code
/// with everything that should be written to standard output.
pub fn run_command<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_command_with_env(argv, std::env::var(CAP_ENV).ok())
}

/// As [`run_command`], with the cap override passed explicitly.
pub fn run_command_with_env<I, S>(argv: I, env_cap: Option<String>) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let wants_json = args.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            if wants_json && code != EXIT_PASS {
                let details = json!({ "kind": "usage", "message": e.to_string().trim_end() });
                let doc = document("", json!({}), json!({}), "error", details, 0);
                return (code, format!("{}\n", serde_json::to_string_pretty(&doc).expect("valid JSON")));
            }
            return (code, e.render().to_string());
        }
    };
    let start = Instant::now();
    let name = command_name(&cli.command);
    let inputs = inputs_json(&cli.command);
    let (code, outcome, details, text, config) = match Config::from_opts(&cli.opts, env_cap) {
        Ok(cfg) => {
            let config = cfg.to_json();
            match dispatch(&cli.command, &cfg) {
                Ok(run) => {
                    let (code, outcome) = if run.passed { (EXIT_PASS, "pass") } else { (EXIT_FAIL, "fail") };
                    (code, outcome, run.details, run.text, config)
                }
                Err(e) => error_parts(&e, config),
            }
        }
        Err(e) => error_parts(&e, json!({})),
    };
    let elapsed = start.elapsed().as_millis();
    if wants_json {
        let doc = document(name, inputs, config, outcome, details, elapsed);
        (code, format!("{}\n", serde_json::to_string_pretty(&doc).expect("valid JSON")))
    } else {
        (code, text)
    }
}

fn error_parts(e: &CliError, config: Value) -> (i32, &'static str, Value, String, Value) {
    let details = json!({ "kind": e.kind(), "message": e.to_string() });
    (e.exit_code(), "error", details, format!("error: {e}\n"), config)
}
