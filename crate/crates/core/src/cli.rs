//! The `conrad` command line.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::io::{self, Congruence, IoError, Structure};
use crate::radical::{
    self, graph_catalog, graph_catalog_rule, topo_catalog, topo_catalog_rule, ClassCatalog, ClassPredicate, Kind,
    LoopGraphs, LooplessGraphs, RadicalAssignment, RadicalError, Spaces, Universe, Verdict,
};
use crate::structures::{named, FiniteGraph, FiniteSpace, LoopPolicy, StructureError};
use crate::theorems::{self, SuiteReport};
use crate::{graph_congruence as gc, loopless_congruence as lc, topo_congruence as tc, CongruenceError, Subdirect};

/// Default bound for universe checks and exhaustive suites.
pub const DEFAULT_MAX_N: usize = 3;
pub const MAX_N_VAR: &str = "CONRAD_MAX_N";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: IoError },
    #[error(transparent)]
    Radical(#[from] RadicalError),
    #[error(transparent)]
    Congruence(#[from] CongruenceError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

#[derive(Parser, Debug)]
#[command(name = "conrad", version, about = "Congruences and radicals of finite graphs and finite spaces")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Lines)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Lines,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Input {
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    space: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct DecomposeInput {
    /// Loopless graph to split into complete factors.
    #[arg(long)]
    birkhoff: Option<PathBuf>,
    /// Space to split into S2 and I2 factors.
    #[arg(long)]
    sierpinski: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CatalogKind {
    Topo,
    Graph,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum UniverseKind {
    Topo,
    Graph,
    Loopless,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Check {
    H1h2,
    Hereditary,
    Ka,
    Complementary,
    Degeneracy,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the congruences of a structure.
    Congruences {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        strong_only: bool,
    },
    /// Quotient of a structure by a congruence file.
    Quotient {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        cong: PathBuf,
    },
    /// Subdirect decomposition with factors and embedding table.
    Decompose {
        #[command(flatten)]
        input: DecomposeInput,
    },
    /// Hoehnke radical of a structure for a built-in class.
    Radical {
        #[arg(long)]
        class: String,
        file: PathBuf,
    },
    /// A catalog radical evaluated on a structure.
    Catalog {
        #[arg(long, value_enum)]
        kind: CatalogKind,
        #[arg(long)]
        id: String,
        file: PathBuf,
    },
    /// Checks quantified over every structure up to a size bound.
    Universe {
        #[arg(long, value_enum)]
        kind: UniverseKind,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum)]
        check: Check,
        /// Class whose Hoehnke radical is checked, or the connectedness of a pair.
        #[arg(long)]
        class: Option<String>,
        /// Catalog entry to check instead of a class.
        #[arg(long, conflicts_with = "class")]
        id: Option<String>,
        /// Disconnectedness paired with --class (default: its S-class).
        #[arg(long)]
        dual: Option<String>,
    },
    /// Isomorphism and correspondence theorem suites.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random instances per theorem and kind.
        #[arg(long, default_value_t = 1000)]
        count: usize,
        /// Bound for the exhaustive suites.
        #[arg(long)]
        max_n: Option<usize>,
        /// Bound for the random suites.
        #[arg(long, default_value_t = 4)]
        random_max_n: usize,
        #[arg(long, value_enum)]
        kind: Option<UniverseKind>,
    },
    /// Write the named structures used by the tests into a directory.
    Fixtures { dir: PathBuf },
}

/// Line report: a command echo, info and check records, and a summary.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    command: String,
    lines: Vec<String>,
    passed: usize,
    failed: usize,
}

impl Report {
    fn new(command: String) -> Self {
        Report { command, ..Report::default() }
    }

    fn info(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn check(&mut self, name: &str, v: Verdict) {
        if v.holds {
            self.passed += 1;
            self.lines.push(format!("PASS {name}"));
        } else {
            self.failed += 1;
            match v.witness {
                Some(w) => self.lines.push(format!("FAIL {name}: {w}")),
                None => self.lines.push(format!("FAIL {name}")),
            }
        }
    }

    fn check_bool(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        self.check(name, if ok { Verdict::pass() } else { Verdict::fail(witness()) });
    }

    pub fn failed(&self) -> usize {
        self.failed
    }

    pub fn passed(&self) -> usize {
        self.passed
    }

    pub fn status(&self) -> i32 {
        i32::from(self.failed > 0)
    }

    pub fn render(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        out.push_str(&format!(
            "summary: checks={} passed={} failed={}\n",
            self.passed + self.failed,
            self.passed,
            self.failed
        ));
        out
    }
}

/// Runs `conrad` with `argv` (without the program name). Returns the text
/// for standard output, or for standard error when the status is 2.
pub fn run_command<S: AsRef<str>>(argv: &[S]) -> (String, i32) {
    let args: Vec<&str> = argv.iter().map(AsRef::as_ref).collect();
    let cli = match Cli::try_parse_from(std::iter::once("conrad").chain(args.iter().copied())) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            return (e.to_string(), status);
        }
    };
    let mut report = Report::new(args.join(" "));
    let format = cli.format;
    match dispatch(cli, &mut report) {
        Ok(()) => match format {
            Format::Lines => (report.render(), report.status()),
        },
        Err(e) => (format!("error: {e}\n"), 2),
    }
}

fn dispatch(cli: Cli, r: &mut Report) -> Result<(), CliError> {
    match cli.command {
        Command::Congruences { input, strong_only } => congruences(r, &input, strong_only),
        Command::Quotient { input, cong } => quotient(r, &input, &cong),
        Command::Decompose { input } => decompose(r, &input),
        Command::Radical { class, file } => radical_cmd(r, &class, &file),
        Command::Catalog { kind, id, file } => catalog(r, kind, &id, &file),
        Command::Universe { kind, max_n, check, class, id, dual } => {
            let n = bound(max_n)?;
            match kind {
                UniverseKind::Topo => {
                    let sigma = id.as_deref().map(topo_catalog_rule).transpose()?;
                    universe::<Spaces>(r, n, check, class.as_deref(), sigma, dual.as_deref())
                }
                UniverseKind::Graph => {
                    let sigma = id.as_deref().map(graph_catalog_rule).transpose()?;
                    universe::<LoopGraphs>(r, n, check, class.as_deref(), sigma, dual.as_deref())
                }
                UniverseKind::Loopless => {
                    if id.is_some() {
                        return Err(CliError::Usage("catalog entries exist for topo and graph only".into()));
                    }
                    if check == Check::Degeneracy {
                        return degeneracy(r, n, class.as_deref());
                    }
                    universe::<LooplessGraphs>(r, n, check, class.as_deref(), None, dual.as_deref())
                }
            }
        }
        Command::Verify { seed, count, max_n, random_max_n, kind } => {
            verify(r, seed, count, bound(max_n)?, random_max_n, kind);
            Ok(())
        }
        Command::Fixtures { dir } => fixtures(r, &dir),
    }
}

/// `--max-n`, else `CONRAD_MAX_N`, else the default.
fn bound(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var(MAX_N_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("{MAX_N_VAR}={v} is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })
}

fn load(path: &Path) -> Result<Structure, CliError> {
    io::parse_structure(&read(path)?).map_err(|source| CliError::Parse { path: path.to_path_buf(), source })
}

fn load_graph(path: &Path) -> Result<FiniteGraph, CliError> {
    match load(path)? {
        Structure::Graph(g) => Ok(g),
        Structure::Space(_) => Err(CliError::Usage(format!("{}: expected a graph, found a space", path.display()))),
    }
}

fn load_space(path: &Path) -> Result<FiniteSpace, CliError> {
    match load(path)? {
        Structure::Space(x) => Ok(x),
        Structure::Graph(_) => Err(CliError::Usage(format!("{}: expected a space, found a graph", path.display()))),
    }
}

fn load_input(input: &Input) -> Result<Structure, CliError> {
    match (&input.graph, &input.space) {
        (Some(p), _) => load_graph(p).map(Structure::Graph),
        (_, Some(p)) => load_space(p).map(Structure::Space),
        _ => unreachable!("clap requires one input"),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list_congruences<K: Kind>(r: &mut Report, x: &K::S, strong_only: bool) {
    let cons = if strong_only { K::strong_congruences(x) } else { K::congruences(x) };
    r.info(format!("structure: {x}"));
    for c in &cons {
        r.info(format!("congruence: {c}"));
    }
    r.info(format!("count: {}", cons.len()));
}

fn congruences(r: &mut Report, input: &Input, strong_only: bool) -> Result<(), CliError> {
    match load_input(input)? {
        Structure::Space(x) => list_congruences::<Spaces>(r, &x, strong_only),
        Structure::Graph(g) if g.policy() == LoopPolicy::NoLoops => {
            list_congruences::<LooplessGraphs>(r, &g, strong_only)
        }
        Structure::Graph(g) => list_congruences::<LoopGraphs>(r, &g, strong_only),
    }
    Ok(())
}

fn quotient(r: &mut Report, input: &Input, cong: &Path) -> Result<(), CliError> {
    let carrier = load_input(input)?;
    let c = io::parse_congruence(&read(cong)?, &carrier)
        .map_err(|source| CliError::Parse { path: cong.to_path_buf(), source })?;
    r.info(format!("structure: {carrier}"));
    let (q, proj) = match (&carrier, &c) {
        (Structure::Space(x), Congruence::Topo(rho)) => {
            r.info(format!("congruence: {rho}"));
            let (q, p) = tc::quotient(x, rho)?;
            (Structure::Space(q), p)
        }
        (Structure::Graph(g), Congruence::Graph(theta)) => {
            r.info(format!("congruence: {theta}"));
            let (q, p) = match g.policy() {
                LoopPolicy::LoopsAllowed => gc::quotient(g, theta)?,
                LoopPolicy::NoLoops => lc::quotient(g, theta)?,
            };
            (Structure::Graph(q), p)
        }
        _ => unreachable!("parse_congruence matches the carrier"),
    };
    r.info(format!("quotient: {q}"));
    r.info(format!("projection: {proj:?}"));
    Ok(())
}

impl std::fmt::Display for Structure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Structure::Space(x) => x.fmt(f),
            Structure::Graph(g) => g.fmt(f),
        }
    }
}

fn embedding_table<S>(r: &mut Report, sd: &Subdirect<S>) {
    r.info("embedding:");
    for (x, row) in sd.embedding.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        r.info(format!("  {x} -> ({})", cells.join(", ")));
    }
}

fn decompose(r: &mut Report, input: &DecomposeInput) -> Result<(), CliError> {
    if let Some(path) = &input.birkhoff {
        let g = load_graph(path)?;
        if g.policy() != LoopPolicy::NoLoops {
            return Err(CliError::Usage("--birkhoff needs a noloops graph".into()));
        }
        r.info(format!("structure: {g}"));
        let list = lc::birkhoff_complete_decomposition(&g)?;
        let sd = lc::check_subdirect(&g, &list)?;
        for (i, (c, q)) in list.iter().zip(&sd.factors).enumerate() {
            r.info(format!("factor {i}: {c} -> {q}"));
        }
        embedding_table(r, &sd);
        let bad = sd.factors.iter().find(|q| !q.is_complete());
        r.check_bool("factors complete", bad.is_none(), || format!("{} is not complete", bad.expect("found")));
        r.check_bool("meet is identity", sd.holds, || "meet of the factors is not the identity".into());
        r.check_bool("embedding injective", sd.is_injective(), || "two vertices share a row".into());
    } else if let Some(path) = &input.sierpinski {
        let x = load_space(path)?;
        r.info(format!("structure: {x}"));
        let list = tc::sierpinski_decomposition(&x)?;
        let sd = tc::check_subdirect(&x, &list)?;
        for (i, (c, q)) in list.iter().zip(&sd.factors).enumerate() {
            r.info(format!("factor {i}: {c} -> {q}"));
        }
        embedding_table(r, &sd);
        let targets = [named::s2(), named::i2()];
        let bad = sd.factors.iter().find(|q| !targets.iter().any(|t| crate::structures::is_homeomorphic(q, t)));
        r.check_bool("factors S2 or I2", bad.is_none(), || format!("{} is neither S2 nor I2", bad.expect("found")));
        r.check_bool("meet is identity", sd.holds, || "meet of the factors is not the identity".into());
        r.check_bool("embedding injective", sd.is_injective(), || "two points share a row".into());
    }
    Ok(())
}

fn radical_of<K: ClassCatalog>(r: &mut Report, class: &str, x: &K::S) -> Result<(), CliError> {
    let m = K::class(class)?;
    let sigma = RadicalAssignment::from_class(&m);
    let c = sigma.eval(x)?;
    r.info(format!("class: {} {}", K::TAG.keyword(), m.name()));
    r.info(format!("structure: {x}"));
    r.info(format!("radical: {c}"));
    r.info(format!("quotient: {}", K::quotient(x, &c)));
    r.info(format!("radical class: {}", yes_no(radical::in_radical_class(&sigma, x)?)));
    r.info(format!("semisimple: {}", yes_no(radical::is_semisimple(&sigma, x)?)));
    Ok(())
}

fn radical_cmd(r: &mut Report, class: &str, file: &Path) -> Result<(), CliError> {
    match load(file)? {
        Structure::Space(x) => radical_of::<Spaces>(r, class, &x),
        Structure::Graph(g) if g.policy() == LoopPolicy::NoLoops => radical_of::<LooplessGraphs>(r, class, &g),
        Structure::Graph(g) => radical_of::<LoopGraphs>(r, class, &g),
    }
}

fn show_catalog<K: Kind>(r: &mut Report, id: &str, x: &K::S, c: &K::C, universal: &K::C) {
    r.info(format!("catalog: {} ({id})", K::TAG.keyword()));
    r.info(format!("structure: {x}"));
    r.info(format!("congruence: {c}"));
    r.info(format!("strong: {}", yes_no(K::is_strong(x, c))));
    r.info(format!("universal: {}", yes_no(c == universal)));
    r.info(format!("identity: {}", yes_no(*c == K::identity(x))));
    r.info(format!("quotient: {}", K::quotient(x, c)));
}

fn catalog(r: &mut Report, kind: CatalogKind, id: &str, file: &Path) -> Result<(), CliError> {
    match kind {
        CatalogKind::Topo => {
            let x = load_space(file)?;
            let c = topo_catalog(&x, id)?;
            show_catalog::<Spaces>(r, id, &x, &c, &tc::TopoCongruence::universal(&x));
        }
        CatalogKind::Graph => {
            let g = load_graph(file)?;
            let c = graph_catalog(&g, id)?;
            show_catalog::<LoopGraphs>(r, id, &g, &c, &gc::GraphCongruence::universal(&g));
        }
    }
    Ok(())
}

/// `k<n>-containing` pairs with `k<n>-free`; anything else with its S-class.
fn default_dual<K: ClassCatalog>(c: &ClassPredicate<K>) -> Result<ClassPredicate<K>, CliError> {
    match c.name().strip_suffix("-containing") {
        Some(stem) => Ok(K::class(&format!("{stem}-free"))?),
        None => Ok(radical::s_class(c)),
    }
}

fn require_class<K: ClassCatalog>(class: Option<&str>, check: &str) -> Result<ClassPredicate<K>, CliError> {
    let name = class.ok_or_else(|| CliError::Usage(format!("--check {check} needs --class")))?;
    Ok(K::class(name)?)
}

fn radical_source<K: ClassCatalog>(
    sigma: Option<RadicalAssignment<K>>,
    class: Option<&str>,
) -> Result<RadicalAssignment<K>, CliError> {
    match (sigma, class) {
        (Some(s), _) => Ok(s),
        (None, Some(name)) => Ok(RadicalAssignment::from_class(&K::class(name)?)),
        (None, None) => Err(CliError::Usage("this check needs --class or --id".into())),
    }
}

fn universe<K: ClassCatalog>(
    r: &mut Report,
    max_n: usize,
    check: Check,
    class: Option<&str>,
    sigma: Option<RadicalAssignment<K>>,
    dual: Option<&str>,
) -> Result<(), CliError> {
    let u = Universe::<K>::new(max_n)?;
    r.info(format!("universe: {} max-n={} members={}", K::TAG.keyword(), max_n, u.len()));
    match check {
        Check::H1h2 => {
            let s = radical_source(sigma, class)?;
            r.info(format!("radical: {}", s.provenance()));
            r.check("h1", radical::h1_holds(&s, &u)?);
            r.check("h2", radical::h2_holds(&s, &u)?);
        }
        Check::Hereditary => {
            let s = radical_source(sigma, class)?;
            r.info(format!("radical: {}", s.provenance()));
            r.check("r-hereditary", radical::r_hereditary(&s, &u)?);
            r.check("s-hereditary", radical::s_hereditary(&s, &u)?);
        }
        Check::Ka => {
            let s = radical_source(sigma, class)?;
            r.info(format!("radical: {}", s.provenance()));
            r.check("complete", radical::is_complete(&s, &u)?);
            r.check("idempotent", radical::is_idempotent(&s, &u)?);
            r.check("strong", radical::is_strong_everywhere(&s, &u)?);
        }
        Check::Complementary => {
            let c = require_class::<K>(class, "complementary")?;
            let d = match dual {
                Some(name) => K::class(name)?,
                None => default_dual(&c)?,
            };
            r.info(format!("pair: {} / {}", c.name(), d.name()));
            r.check("complementary", radical::complementary_pair_check(&c, &d, &u));
            r.check("connectedness", radical::is_connectedness(&c, &u)?);
            r.check("disconnectedness", radical::is_disconnectedness(&d, &u));
        }
        Check::Degeneracy => {
            return Err(CliError::Usage("--check degeneracy applies to --kind loopless".into()));
        }
    }
    Ok(())
}

fn degeneracy(r: &mut Report, max_n: usize, class: Option<&str>) -> Result<(), CliError> {
    let m = require_class::<LooplessGraphs>(class, "degeneracy")?;
    let u = Universe::<LooplessGraphs>::new(max_n)?;
    r.info(format!("universe: loopless max-n={} members={}", max_n, u.len()));
    r.info(format!("class: {}", m.name()));
    match radical::loopless_degeneracy_check(&u, &m) {
        Ok(v) => r.check("degeneracy", v),
        Err(e @ RadicalError::LemmaConditionFailed(_)) => r.check("degeneracy", Verdict::fail(e.to_string())),
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

fn suite_lines(r: &mut Report, label: &str, reports: Vec<SuiteReport>) {
    for rep in reports {
        let name = format!("{label} {} {} checked={}", rep.kind.keyword(), rep.theorem.keyword(), rep.checked);
        r.check(&name, Verdict::first_failure(rep.failures.into_iter().map(Verdict::fail)));
    }
}

fn verify(r: &mut Report, seed: u64, count: usize, max_n: usize, random_max_n: usize, kind: Option<UniverseKind>) {
    r.info(format!("seed: {seed} count: {count} exhaustive-max-n: {max_n} random-max-n: {random_max_n}"));
    let wanted = |k: UniverseKind| kind.is_none_or(|w| w == k);
    let mut run = |ex: Result<Vec<SuiteReport>, StructureError>, rnd: Vec<SuiteReport>| {
        match ex {
            Ok(reps) => suite_lines(r, "exhaustive", reps),
            Err(e) => r.check("exhaustive", Verdict::fail(e.to_string())),
        }
        suite_lines(r, "random", rnd);
    };
    if wanted(UniverseKind::Topo) {
        run(theorems::exhaustive_suite::<Spaces>(max_n), theorems::random_suite::<Spaces>(seed, count, random_max_n));
    }
    if wanted(UniverseKind::Graph) {
        run(
            theorems::exhaustive_suite::<LoopGraphs>(max_n),
            theorems::random_suite::<LoopGraphs>(seed, count, random_max_n),
        );
    }
    if wanted(UniverseKind::Loopless) {
        run(
            theorems::exhaustive_suite::<LooplessGraphs>(max_n),
            theorems::random_suite::<LooplessGraphs>(seed, count, random_max_n),
        );
    }
}

/// Named structures, by file stem.
pub fn fixture_set() -> Vec<(String, Structure)> {
    let mut out: Vec<(String, Structure)> = Vec::new();
    for (i, g) in named::b_set().into_iter().enumerate() {
        out.push((format!("b{}", i + 1), Structure::Graph(g)));
    }
    out.push(("t0".into(), Structure::Graph(named::t0())));
    out.push(("a3".into(), Structure::Graph(named::a3())));
    out.push(("k1".into(), Structure::Graph(named::complete(1))));
    out.push(("k2".into(), Structure::Graph(named::complete(2))));
    out.push(("k3".into(), Structure::Graph(named::complete(3))));
    out.push(("p3".into(), Structure::Graph(named::path(3))));
    out.push(("c4".into(), Structure::Graph(named::cycle(4))));
    out.push(("e2".into(), Structure::Graph(named::edgeless(2, LoopPolicy::NoLoops))));
    out.push(("t".into(), Structure::Space(named::t_space())));
    out.push(("s2".into(), Structure::Space(named::s2())));
    out.push(("i2".into(), Structure::Space(named::i2())));
    out.push(("d2".into(), Structure::Space(named::d2())));
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn fixtures(r: &mut Report, dir: &Path) -> Result<(), CliError> {
    let write_err = |path: PathBuf| move |source| CliError::Read { path, source };
    fs::create_dir_all(dir).map_err(write_err(dir.to_path_buf()))?;
    for (stem, s) in fixture_set() {
        let path = dir.join(format!("{stem}.txt"));
        fs::write(&path, io::write_structure(&s)).map_err(write_err(path.clone()))?;
        r.info(format!("wrote {stem}.txt: {s}"));
    }
    Ok(())
}
