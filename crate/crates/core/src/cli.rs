//! Command-line front end. Data goes to `stdout` as canonical JSON (sorted
//! keys) unless another format is requested; diagnostics go to `stderr`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::classifier::table::{table, Family};
use crate::classifier::{check_peripheral_collection, full_report, parse_collection, ClassificationReport, SCHEMA_VERSION};
use crate::config_space::{build, check_npc, Configuration, CubeComplex};
use crate::diagrams::DiagramGroupoid;
use crate::error::{Error, Result};
use crate::graph::{normalize, parse_graph, subdivide_for, Graph};
use crate::homology::complex_homology;
use crate::hyperplanes::{hyperplanes_by_bfs, hyperplanes_by_components, verify_special_coloring, ColoringGraph};
use crate::limits::Limits;

#[derive(Parser, Debug)]
#[command(name = "braidscope", version, about = "Configuration spaces and braid groups of graphs")]
struct Cli {
    /// Cap on the number of cells of a cube complex (overrides BRAIDSCOPE_MAX_CELLS).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_cells: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classification report for n particles.
    Analyze(AnalyzeArgs),
    /// Build the discrete configuration space and summarise it.
    Build(BuildArgs),
    /// Validate, reduce and compare words in the braid groupoid.
    Word(WordArgs),
    /// Integral homology of the configuration space.
    Homology(HomologyArgs),
    /// Check a collection of subgraphs against the peripheral criterion (two particles).
    RelhypCheck(RelhypArgs),
    /// Classification grid over K_m or K_{p,q}.
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Dot,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(short = 'n', long = "particles")]
    n: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct BuildArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(short = 'n', long = "particles")]
    n: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Use the graph as given instead of subdividing it for n particles.
    #[arg(long)]
    raw: bool,
}

#[derive(Args, Debug)]
struct WordArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Base configuration, e.g. `1,3`.
    #[arg(long)]
    base: String,
    /// Compare every word with this one (same syntax as the words).
    #[arg(long)]
    against: Option<String>,
    /// Read one word per line from a file.
    #[arg(long)]
    words: Option<PathBuf>,
    /// Letters such as `+e1 -e2`.
    #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
    word: Vec<String>,
}

#[derive(Args, Debug)]
struct HomologyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(short = 'n', long = "particles")]
    n: usize,
    #[arg(long)]
    raw: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct RelhypArgs {
    #[arg(long)]
    graph: PathBuf,
    /// One subgraph per line: vertex names (induced) or walks like `a-b-c-a`.
    #[arg(long)]
    collection: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Complete,
    Bipartite,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    max: usize,
    /// A count such as `3` or a range such as `2..5`.
    #[arg(long, value_parser = parse_range, default_value = "1..5")]
    particles: RangeInclusive<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected N or A..B, got {s:?}");
    match s.split_once("..") {
        Some((a, b)) => {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim_start_matches('=').trim().parse().map_err(|_| bad())?;
            if a == 0 || a > b {
                return Err(bad());
            }
            Ok(a..=b)
        }
        None => {
            let a: usize = s.trim().parse().map_err(|_| bad())?;
            if a == 0 {
                return Err(bad());
            }
            Ok(a..=a)
        }
    }
}

/// Runs the command line and returns the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut limits = Limits::from_env();
    if let Some(c) = cli.max_cells {
        limits.max_cells = c as u128;
    }
    match dispatch(cli.command, &limits) {
        Ok(text) => {
            let _ = stdout.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 1,
        Error::Precondition(_) | Error::IllegalMove { .. } | Error::Mismatch(_) | Error::NonSpherical => 2,
        Error::ResourceLimit { .. } => 3,
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::parse(0, format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?)
}

/// Canonical JSON: sorted keys, two-space indent, trailing newline, with a
/// `schema_version` on every top-level object.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut v = serde_json::to_value(value).expect("serializable");
    if let Value::Object(m) = &mut v {
        m.entry("schema_version").or_insert(Value::from(SCHEMA_VERSION));
    }
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn dispatch(cmd: Command, limits: &Limits) -> Result<String> {
    match cmd {
        Command::Analyze(a) => {
            let g = normalize(&load_graph(&a.graph)?);
            let report = full_report(&g, a.n, limits)?;
            Ok(match a.format {
                Format::Table => render_report(&report),
                _ => to_canonical_json(&report),
            })
        }
        Command::Build(a) => cmd_build(a, limits),
        Command::Word(a) => cmd_word(a),
        Command::Homology(a) => {
            let g = load_graph(&a.graph)?;
            let g = if a.raw { g } else { subdivide_for(&g, a.n) };
            let x = build(&g, a.n, None, limits)?;
            let h = complex_homology(&x, limits)?;
            Ok(match a.format {
                Format::Table => {
                    let mut s = String::new();
                    for grp in &h.groups {
                        let _ = writeln!(s, "H{} = {grp}", grp.dim);
                    }
                    let _ = writeln!(s, "euler characteristic = {}", h.euler_characteristic);
                    s
                }
                _ => to_canonical_json(&HomologyOut {
                    particles: a.n,
                    f_vector: x.f_vector(),
                    groups_text: h.groups.iter().map(|g| g.to_string()).collect(),
                    summary: h,
                }),
            })
        }
        Command::RelhypCheck(a) => {
            let g = normalize(&load_graph(&a.graph)?);
            let c = parse_collection(&g, &read(&a.collection)?)?;
            Ok(to_canonical_json(&check_peripheral_collection(&g, &c, limits)?))
        }
        Command::Table(a) => {
            let family = match a.family {
                FamilyArg::Complete => Family::Complete,
                FamilyArg::Bipartite => Family::CompleteBipartite,
            };
            let t = table(family, a.max, a.particles, limits)?;
            Ok(match a.format {
                Format::Table => {
                    let mut s = String::from("graph\tn\ttrivial\tcyclic\thyperbolic\ttoral_rel_hyp\tacyl\n");
                    for r in &t.rows {
                        let _ = writeln!(
                            s,
                            "{}\t{}\t{}\t{}\t{}\t{}\t{:?}",
                            r.graph, r.particles, r.trivial, r.infinite_cyclic, r.hyperbolic, r.toral_rel_hyp, r.acyl_hyp_status
                        );
                    }
                    s
                }
                _ => to_canonical_json(&t),
            })
        }
    }
}

#[derive(Serialize)]
struct HomologyOut {
    particles: usize,
    f_vector: Vec<usize>,
    groups_text: Vec<String>,
    #[serde(flatten)]
    summary: crate::homology::HomologySummary,
}

#[derive(Serialize)]
struct BuildOut {
    particles: usize,
    subdivided: bool,
    graph_vertices: usize,
    graph_edges: usize,
    f_vector: Vec<usize>,
    euler_characteristic: i64,
    components: usize,
    hyperplanes: Option<usize>,
    hyperplanes_by_square_walk: Option<usize>,
    npc: bool,
    special_coloring: Option<bool>,
}

fn cmd_build(a: BuildArgs, limits: &Limits) -> Result<String> {
    let g = load_graph(&a.graph)?;
    let g = if a.raw { g } else { subdivide_for(&g, a.n) };
    let x = build(&g, a.n, None, limits)?;
    if a.format == Format::Dot {
        return Ok(dot(&x));
    }
    let two = a.n >= 2 && x.has_dimension(2);
    let out = BuildOut {
        particles: a.n,
        subdivided: !a.raw,
        graph_vertices: g.vertex_count(),
        graph_edges: g.edge_count(),
        f_vector: x.f_vector(),
        euler_characteristic: x.euler_characteristic(),
        components: x.components().1,
        hyperplanes: if a.n >= 1 { Some(hyperplanes_by_components(&g, a.n, limits)?.len()) } else { None },
        hyperplanes_by_square_walk: if two { Some(hyperplanes_by_bfs(&x)?.len()) } else { None },
        npc: check_npc(&x).passed,
        special_coloring: if two { Some(verify_special_coloring(&x)?.passed) } else { None },
    };
    Ok(match a.format {
        Format::Table => {
            let mut s = String::new();
            let _ = writeln!(s, "f-vector\t{:?}", out.f_vector);
            let _ = writeln!(s, "euler characteristic\t{}", out.euler_characteristic);
            let _ = writeln!(s, "components\t{}", out.components);
            if let Some(h) = out.hyperplanes {
                let _ = writeln!(s, "hyperplanes\t{h}");
            }
            let _ = writeln!(s, "nonpositively curved\t{}", out.npc);
            s
        }
        _ => to_canonical_json(&out),
    })
}

/// The 1-skeleton with edges labelled by Γ-edges, then the coloring graph Δ.
fn dot(x: &CubeComplex) -> String {
    let g = x.graph();
    let mut s = String::from("graph complex {\n");
    for v in 0..x.count(0) {
        let _ = writeln!(s, "  v{v} [label=\"{}\"];", x.vertex(v).display(g));
    }
    for i in 0..x.count(1) {
        if let Some((lo, hi)) = x.edge_endpoints(i) {
            let e = x.cube(1, i).moving[0];
            let _ = writeln!(s, "  v{lo} -- v{hi} [label=\"{}\"];", g.edge(e).name);
        }
    }
    s.push_str("}\ngraph delta {\n");
    for e in g.edges() {
        let _ = writeln!(s, "  \"{}\";", e.name);
    }
    for (e, f) in ColoringGraph::new(g).edges() {
        let _ = writeln!(s, "  \"{}\" -- \"{}\";", g.edge(e).name, g.edge(f).name);
    }
    s.push_str("}\n");
    s
}

#[derive(Serialize)]
struct WordResult {
    input: String,
    base: String,
    terminus: String,
    length: usize,
    normal_form: String,
    reduced_length: usize,
    spherical: bool,
    /// Cyclic reduction, for nonempty spherical words.
    cyclic: Option<crate::diagrams::SupportView>,
    equal_to_against: Option<bool>,
}

#[derive(Serialize)]
struct WordOut {
    results: Vec<WordResult>,
}

fn cmd_word(a: WordArgs) -> Result<String> {
    let g = load_graph(&a.graph)?;
    let base = Configuration::parse(&g, &a.base)?;
    let dg = DiagramGroupoid::new(&g, base.len())?;
    let mut inputs = Vec::new();
    if let Some(p) = &a.words {
        inputs.extend(read(p)?.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(String::from));
    }
    if !a.word.is_empty() || inputs.is_empty() {
        inputs.push(a.word.join(" "));
    }
    let against = match &a.against {
        Some(t) => Some(dg.diagram(&base, &dg.parse_word(t)?)?),
        None => None,
    };
    let mut results = Vec::new();
    for text in inputs {
        let letters = dg.parse_word(&text)?;
        let d = dg.diagram(&base, &letters)?;
        let view = dg.view(&d);
        let cyclic = if d.is_spherical() && !d.is_empty() {
            Some(dg.support_view(&dg.cyclically_reduce(&d)?))
        } else {
            None
        };
        results.push(WordResult {
            input: text,
            base: view.base,
            terminus: view.terminus,
            length: letters.len(),
            normal_form: view.word,
            reduced_length: view.length,
            spherical: d.is_spherical(),
            cyclic,
            equal_to_against: against.as_ref().map(|t| dg.equal(&d, t)),
        });
    }
    Ok(to_canonical_json(&WordOut { results }))
}

fn render_report(r: &ClassificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "graph {} ({} vertices, {} edges, b1 = {}), {} particle(s)",
        r.graph.fingerprint, r.graph.vertices, r.graph.edges, r.graph.first_betti, r.particles
    );
    for a in &r.assignments {
        let _ = writeln!(s, "assignment {:?}", a.counts);
        let row = |name: &str, v: &crate::classifier::Verdict| {
            format!("  {name:<18} {:<5} {}\n", v.holds, v.witness.as_deref().unwrap_or(""))
        };
        s += &row("trivial", &a.trivial);
        s += &row("infinite cyclic", &a.infinite_cyclic);
        s += &row("hyperbolic", &a.hyperbolic);
        s += &row("toral rel. hyp.", &a.toral_rel_hyp);
        s += &row("contains F2", &a.contains_f2);
        s += &row("contains F2 x Z", &a.contains_f2xz);
        let _ = writeln!(s, "  {:<18} {:?}", "acylindrical", a.acyl_hyp_status);
        let _ = writeln!(s, "  {:<18} {:?}", "free", a.free_certificate);
    }
    if let crate::classifier::Section::Computed(h) = &r.homology {
        for grp in &h.groups {
            let _ = writeln!(s, "H{} = {grp}", grp.dim);
        }
    }
    if r.consistency_violations.is_empty() {
        s.push_str("consistent\n");
    } else {
        for v in &r.consistency_violations {
            let _ = writeln!(s, "inconsistent: {v}");
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..5").unwrap(), 2..=5);
        assert_eq!(parse_range("2..=5").unwrap(), 2..=5);
        assert_eq!(parse_range("3").unwrap(), 3..=3);
        assert!(parse_range("0..2").is_err());
        assert!(parse_range("5..2").is_err());
    }
}
