//! Argument parsing and dispatch for the `graphcalc` binary.
//!
//! [`run`] never prints; it returns the exit code with the text for stdout
//! and stderr so tests can drive it in-process. Exit codes: 0 success,
//! 1 domain error (bad file, failed precondition, guard exceeded), 2 usage.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_rational::BigRational;
use serde_json::{json, Value};

use graphcalc::egfcount::{named_sequence, NamedKind};
use graphcalc::graph::{format_edge_list, parse_edge_list, EdgeList};
use graphcalc::matchflow::{self, Bigraph};
use graphcalc::mst::{self, MstAlgorithm};
use graphcalc::polynomials::{chromatic_polynomial, matching_polynomial, spanning_tree_polynomial};
use graphcalc::puzzles::{self, Puzzle};
use graphcalc::ramsey::{self, Color};
use graphcalc::{rado, spancount, surfaces, Pseudograph};

#[derive(Debug, Parser)]
#[command(name = "graphcalc", version, about = "Exact graph computations over edge-list files")]
pub struct Cli {
    /// Emit one JSON object instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TreeMethod {
    Brute,
    Dpc,
    Matrix,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count spanning trees.
    Trees {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = TreeMethod::Matrix)]
        method: TreeMethod,
    },
    /// Chromatic polynomial coefficients `c0 c1 ...`.
    Chromatic { file: PathBuf },
    /// Matching polynomial coefficients `c0 c1 ...`.
    Matchpoly { file: PathBuf },
    /// Spanning-tree polynomial, one `exponents:coefficient` line per term.
    Treepoly { file: PathBuf },
    /// Counts for `n = 1..=N` of a named labeled class.
    Egf { kind: String, n: usize },
    #[command(subcommand)]
    /// Two-colorings of complete graphs and Ramsey bounds.
    Ramsey(RamseyCommand),
    /// Minimum spanning tree of a weighted edge list.
    Mst {
        file: PathBuf,
        #[arg(long, default_value = "kruskal")]
        algo: String,
    },
    /// Nearest-neighbor tour of a weighted complete graph.
    #[command(name = "tsp-nn")]
    TspNn {
        file: PathBuf,
        #[arg(long)]
        start: usize,
    },
    /// Maximum bipartite matching; the first `k` vertices form the left side.
    Matching {
        file: PathBuf,
        #[arg(long)]
        parts: usize,
    },
    /// Minimum vertex cover of a bipartite graph.
    Vcover { file: PathBuf },
    /// Minimum edge cover.
    Ecover { file: PathBuf },
    /// Arc-disjoint paths and a minimum cut; each edge line is an arc.
    Mincut {
        file: PathBuf,
        #[arg(long = "s")]
        s: usize,
        #[arg(long = "t")]
        t: usize,
    },
    /// Faces and genus of a rotation system.
    Faces {
        file: PathBuf,
        #[arg(long)]
        rot: PathBuf,
    },
    /// Chromatic bound for a surface of the given genus.
    Heawood { genus: u64 },
    /// Edge-count conditions necessary for a toroidal embedding.
    Torcheck { file: PathBuf },
    #[command(subcommand)]
    /// Integer labels in the BIT graph, where i < j are adjacent when bit i of j is set.
    Rado(RadoCommand),
    /// Sample G(n, p), `p` written `a/b`, and print its edge list.
    Gnp { n: usize, p: String, seed: u64 },
    #[command(subcommand)]
    /// River-crossing state graphs and their solutions.
    Puzzle(PuzzleCommand),
}

#[derive(Debug, Subcommand)]
pub enum RamseyCommand {
    /// Exhaustive check of every 2-coloring of K6.
    Verify33,
    /// Largest monochromatic cliques of a circulant coloring; chords (red) as `1,2,4`.
    Circulant { n: usize, chords: String },
    /// Upper and probabilistic lower bounds.
    Bounds { m: usize, n: usize },
    /// Exact coin-tail probability and its exponential bounds.
    Cointail { n: usize },
}

#[derive(Debug, Subcommand)]
pub enum RadoCommand {
    /// Adjacency of two labels.
    Adj { i: String, j: String },
    /// Canonical witness for disjoint label sets.
    Witness {
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        v: Vec<String>,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        w: Vec<String>,
    },
    /// Labels spanning an induced copy of a simple graph.
    Embed { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum PuzzleCommand {
    /// Wolf, goat and cabbage.
    Wgc,
    /// Missionaries and cannibals with a boat of the given capacity.
    Mc { m: u32, c: u32, cap: u32 },
}

/// What a finished invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Domain(String),
    Usage(String),
}

impl From<graphcalc::Error> for Failure {
    fn from(e: graphcalc::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Res<T> = std::result::Result<T, Failure>;

struct Report {
    text: String,
    json: Value,
}

impl Report {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Report { text: text.into(), json }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: rendered }
            } else {
                Outcome { code: 0, stdout: rendered, stderr: String::new() }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(report) => {
            let mut stdout = if cli.json {
                serde_json::to_string(&report.json).expect("serializable")
            } else {
                report.text.trim_end().to_string()
            };
            stdout.push('\n');
            Outcome { code: 0, stdout, stderr: String::new() }
        }
        Err(Failure::Domain(msg)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Usage(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

fn read_text(path: &Path) -> Res<String> {
    fs::read_to_string(path).map_err(|e| Failure::Domain(format!("cannot read {}: {e}", path.display())))
}

fn read_list(path: &Path) -> Res<EdgeList> {
    Ok(parse_edge_list(&read_text(path)?)?)
}

fn read_graph(path: &Path) -> Res<Pseudograph> {
    Ok(read_list(path)?.graph()?)
}

fn joined<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(T::to_string).collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn edge_pairs(g: &Pseudograph, edges: &[usize]) -> Vec<String> {
    edges
        .iter()
        .map(|&e| {
            let (a, b) = g.edges()[e];
            format!("{a}-{b}")
        })
        .collect()
}

fn parse_label(s: &str) -> Res<BigUint> {
    BigUint::from_str(s.trim()).map_err(|_| Failure::Usage(format!("{s:?} is not a nonnegative integer")))
}

fn parse_labels(items: &[String]) -> Res<Vec<BigUint>> {
    items.iter().filter(|s| !s.trim().is_empty()).map(|s| parse_label(s)).collect()
}

/// `a/b`, an integer, or a decimal such as `0.25`.
fn parse_probability(s: &str) -> Res<(u64, u64)> {
    let bad = || Failure::Usage(format!("{s:?} is not a probability like 1/2"));
    let r = if let Some((a, b)) = s.split_once('/') {
        let (a, b): (u64, u64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
        if b == 0 {
            return Err(bad());
        }
        BigRational::new(a.into(), b.into())
    } else if let Some((int, frac)) = s.split_once('.') {
        let digits = format!("{int}{frac}");
        let num: u64 = digits.parse().map_err(|_| bad())?;
        let den = 10u64.checked_pow(frac.len() as u32).ok_or_else(bad)?;
        BigRational::new(num.into(), den.into())
    } else {
        BigRational::from_integer(s.trim().parse::<u64>().map_err(|_| bad())?.into())
    };
    let num = u64::try_from(r.numer()).map_err(|_| bad())?;
    let den = u64::try_from(r.denom()).map_err(|_| bad())?;
    Ok((num, den))
}

fn dispatch(cmd: &Command) -> Res<Report> {
    match cmd {
        Command::Trees { file, method } => {
            let g = read_graph(file)?;
            let count = match method {
                TreeMethod::Brute => spancount::count_trees_bruteforce(&g)?,
                TreeMethod::Dpc => spancount::count_trees_dpc(&g),
                TreeMethod::Matrix => spancount::count_trees_matrix(&g),
            };
            Ok(Report::new(count.to_string(), json!({ "trees": count.to_string() })))
        }
        Command::Chromatic { file } => {
            let p = chromatic_polynomial(&read_graph(file)?);
            Ok(Report::new(p.to_string(), json!({ "coefficients": strings(p.coeffs()) })))
        }
        Command::Matchpoly { file } => {
            let p = matching_polynomial(&read_graph(file)?)?;
            Ok(Report::new(p.to_string(), json!({ "coefficients": strings(p.coeffs()) })))
        }
        Command::Treepoly { file } => {
            let p = spanning_tree_polynomial(&read_graph(file)?)?;
            let terms: Vec<Value> = p
                .terms()
                .iter()
                .map(|(e, c)| json!({ "exponents": e, "coefficient": c.to_string() }))
                .collect();
            Ok(Report::new(p.to_string(), json!({ "terms": terms })))
        }
        Command::Egf { kind, n } => {
            let kind = NamedKind::from_str(kind).map_err(|_| {
                let names: Vec<&str> = NamedKind::ALL.iter().map(|k| k.name()).collect();
                Failure::Usage(format!("unknown kind {kind:?}; expected one of {}", names.join(", ")))
            })?;
            let seq = named_sequence(kind, *n)?;
            Ok(Report::new(joined(&seq), json!({ "kind": kind.name(), "values": strings(&seq) })))
        }
        Command::Ramsey(sub) => ramsey_command(sub),
        Command::Mst { file, algo } => {
            let algo = MstAlgorithm::from_str(algo)
                .map_err(|_| Failure::Usage(format!("unknown algorithm {algo:?}; expected kruskal, prim, boruvka or rdelete")))?;
            let g = read_list(file)?.weighted()?;
            let t = mst::minimum_spanning_tree(&g, algo)?;
            let pairs = edge_pairs(g.graph(), &t.edges);
            let text = format!("weight {}\nedges {}\npairs {}", t.weight, joined(&t.edges), pairs.join(" "));
            Ok(Report::new(text, json!({ "weight": t.weight.to_string(), "edges": t.edges, "pairs": pairs })))
        }
        Command::TspNn { file, start } => {
            let g = read_list(file)?.weighted()?;
            let tour = mst::nearest_neighbor_cycle(&g, *start)?;
            let optimum = mst::best_tour_exhaustive(&g).ok().map(|t| t.weight);
            let mut text = format!("tour {}\nweight {}", joined(&tour.vertices), tour.weight);
            if let Some(best) = &optimum {
                write!(text, "\noptimum {best}").unwrap();
            }
            Ok(Report::new(
                text,
                json!({
                    "tour": tour.vertices,
                    "weight": tour.weight.to_string(),
                    "optimum": optimum.map(|w| w.to_string()),
                }),
            ))
        }
        Command::Matching { file, parts } => {
            let bg = Bigraph::from_parts(read_graph(file)?, *parts)?;
            let m = matchflow::max_matching(&bg);
            let pairs = edge_pairs(bg.graph(), &m);
            let mut text = format!("size {}\nedges {}", m.len(), pairs.join(" "));
            let hall = matchflow::hall_check(&bg).ok();
            let mut hall_json = Value::Null;
            if let Some(h) = &hall {
                match &h.violating_set {
                    None => text.push_str("\nhall holds"),
                    Some(w) => write!(text, "\nhall violated by {}", joined(w)).unwrap(),
                }
                hall_json = json!({ "holds": h.holds, "violating_set": h.violating_set });
            }
            Ok(Report::new(text, json!({ "size": m.len(), "edges": m, "pairs": pairs, "hall": hall_json })))
        }
        Command::Vcover { file } => {
            let bg = Bigraph::from_bipartition(read_graph(file)?)?;
            let cover = matchflow::min_vertex_cover(&bg);
            let matched = matchflow::max_matching(&bg).len();
            let text = format!("size {}\nvertices {}\nmatching {matched}", cover.len(), joined(&cover));
            Ok(Report::new(text, json!({ "size": cover.len(), "vertices": cover, "matching": matched })))
        }
        Command::Ecover { file } => {
            let g = read_graph(file)?;
            let cover = matchflow::min_edge_cover(&g)?;
            let pairs = edge_pairs(&g, &cover);
            let text = format!("size {}\nedges {}", cover.len(), pairs.join(" "));
            Ok(Report::new(text, json!({ "size": cover.len(), "edges": cover, "pairs": pairs })))
        }
        Command::Mincut { file, s, t } => {
            let d = read_list(file)?.digraph()?;
            let flow = matchflow::edge_disjoint_paths(&d, *s, *t)?;
            let walks: Vec<Vec<usize>> = flow
                .paths
                .iter()
                .map(|p| {
                    let mut vs = vec![*s];
                    vs.extend(p.iter().map(|&a| d.arcs()[a].1));
                    vs
                })
                .collect();
            let cut: Vec<String> = flow
                .cut
                .iter()
                .map(|&a| {
                    let (x, y) = d.arcs()[a];
                    format!("{x}->{y}")
                })
                .collect();
            let mut text = format!("paths {}", walks.len());
            for w in &walks {
                write!(text, "\npath {}", joined(w)).unwrap();
            }
            write!(text, "\ncut {}", cut.join(" ")).unwrap();
            Ok(Report::new(text, json!({ "paths": walks, "cut": cut })))
        }
        Command::Faces { file, rot } => {
            let g = read_graph(file)?;
            let rs = surfaces::parse_rotation(g, &read_text(rot)?)?;
            let faces = surfaces::trace_faces(&rs)?;
            let rep = surfaces::euler_genus(&rs)?;
            let listed: Vec<String> = faces.faces.iter().map(|f| joined(f)).collect();
            let mut text = format!("faces {}\nchi {}\ngenus {}", rep.r, rep.chi, rep.genus);
            for f in &listed {
                write!(text, "\nface {f}").unwrap();
            }
            Ok(Report::new(
                text,
                json!({ "faces": rep.r, "chi": rep.chi, "genus": rep.genus, "walks": listed }),
            ))
        }
        Command::Heawood { genus } => {
            let h = surfaces::heawood_bound(*genus);
            Ok(Report::new(h.to_string(), json!({ "genus": genus, "bound": h })))
        }
        Command::Torcheck { file } => {
            let c = surfaces::toroidal_necessary(&read_graph(file)?)?;
            let girth = match c.girth4_q_le_2p {
                None => "n/a",
                Some(b) => yes_no(b),
            };
            let text = format!(
                "p {}\nq {}\nq<=3p {}\ngirth4 q<=2p {}\nverdict {}",
                c.p,
                c.q,
                yes_no(c.q_le_3p),
                girth,
                c.verdict()
            );
            Ok(Report::new(
                text,
                json!({
                    "p": c.p,
                    "q": c.q,
                    "q_le_3p": c.q_le_3p,
                    "girth4_q_le_2p": c.girth4_q_le_2p,
                    "verdict": c.verdict(),
                }),
            ))
        }
        Command::Rado(sub) => rado_command(sub),
        Command::Gnp { n, p, seed } => {
            let (num, den) = parse_probability(p)?;
            let sample = rado::gnp_sample(*n, num, den, *seed)?;
            let edges: Vec<[usize; 2]> = sample.graph.edges().iter().map(|&(a, b)| [a, b]).collect();
            Ok(Report::new(
                format_edge_list(&sample.graph, None),
                json!({ "n": n, "p": format!("{num}/{den}"), "seed": seed, "edges": edges }),
            ))
        }
        Command::Puzzle(sub) => {
            let puzzle = match *sub {
                PuzzleCommand::Wgc => Puzzle::Wgc,
                PuzzleCommand::Mc { m, c, cap } => Puzzle::Missionaries { missionaries: m, cannibals: c, capacity: cap },
            };
            let sg = puzzles::build_state_graph(puzzle)?;
            let sol = puzzles::solutions(&sg);
            let mut text = String::new();
            for (i, l) in sg.labels.iter().enumerate() {
                writeln!(text, "state {i} {l}").unwrap();
            }
            for (e, &(a, b)) in sg.graph.edges().iter().enumerate() {
                writeln!(text, "edge {a} {b} {}", sg.edge_labels[e]).unwrap();
            }
            match (&sol.shortest, &sol.shortest_path) {
                (Some(len), Some(path)) => {
                    writeln!(text, "shortest {len}").unwrap();
                    let labels: Vec<&str> = path.iter().map(|&v| sg.labels[v].as_str()).collect();
                    writeln!(text, "path {}", labels.join(" ")).unwrap();
                }
                _ => writeln!(text, "goal unreachable").unwrap(),
            }
            if let Some(k) = sol.simple_paths {
                writeln!(text, "simple solutions {k}").unwrap();
            }
            let edges: Vec<Value> = sg
                .graph
                .edges()
                .iter()
                .zip(&sg.edge_labels)
                .map(|(&(a, b), l)| json!({ "from": a, "to": b, "cargo": l }))
                .collect();
            Ok(Report::new(
                text,
                json!({
                    "states": sg.labels,
                    "edges": edges,
                    "reachable": sg.goal.is_some(),
                    "shortest": sol.shortest,
                    "path": sol.shortest_path,
                    "simple_solutions": sol.simple_paths,
                }),
            ))
        }
    }
}

fn largest_clique(c: &ramsey::EdgeColoring2, color: Color) -> usize {
    (1..=c.n()).take_while(|&k| ramsey::has_mono_clique(c, k, color).is_some()).last().unwrap_or(0)
}

fn ramsey_command(cmd: &RamseyCommand) -> Res<Report> {
    match cmd {
        RamseyCommand::Verify33 => {
            let r = ramsey::verify_r33();
            let text = format!(
                "colorings {}\nevery K6 coloring has a monochromatic triangle {}\npentagon coloring is triangle-free {}\nr(3,3) = 6 {}",
                r.colorings_checked,
                yes_no(r.every_k6_coloring_has_triangle),
                yes_no(r.pentagon_is_triangle_free),
                if r.holds() { "verified" } else { "refuted" },
            );
            Ok(Report::new(
                text,
                json!({
                    "colorings": r.colorings_checked,
                    "every_k6_coloring_has_triangle": r.every_k6_coloring_has_triangle,
                    "pentagon_is_triangle_free": r.pentagon_is_triangle_free,
                    "holds": r.holds(),
                }),
            ))
        }
        RamseyCommand::Circulant { n, chords } => {
            let chords: Vec<usize> = chords
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse().map_err(|_| Failure::Usage(format!("bad chord {s:?}"))))
                .collect::<Res<_>>()?;
            let c = ramsey::circulant_coloring(*n, &chords)?;
            let (red, blue) = (largest_clique(&c, Color::Red), largest_clique(&c, Color::Blue));
            let text = format!("red edges {}\nblue edges {}\nlargest red clique {red}\nlargest blue clique {blue}", c.count(Color::Red), c.count(Color::Blue));
            Ok(Report::new(
                text,
                json!({ "n": n, "chords": chords, "red_edges": c.count(Color::Red), "blue_edges": c.count(Color::Blue), "largest_red_clique": red, "largest_blue_clique": blue }),
            ))
        }
        RamseyCommand::Bounds { m, n } => {
            let b = ramsey::bound_values(*m, *n)?;
            let known = ramsey::known_r(*m, *n);
            let text = format!(
                "s({m},{n}) {}\nknown r({m},{n}) {}\nr({n},{n}) <= {}\nr({n},{n}) > 2^({n}/2)/8 >= {}\nlargest R with 2 C(R,{n}) < 2^C({n},2) {}\nexpected monochromatic K{n} in K_R {}\ncounting M {}\nomega {}\nexpected monochromatic hamiltonian cycles in K{n} {}",
                b.s,
                known.map_or("unknown".to_string(), |k| k.to_string()),
                b.upper_diagonal,
                b.lower_diagonal,
                b.best_r,
                b.expected_mono,
                b.counting_m,
                b.omega,
                b.expected_mono_hamiltonian,
            );
            Ok(Report::new(
                text,
                json!({
                    "m": m,
                    "n": n,
                    "s": b.s.to_string(),
                    "known": known,
                    "upper_diagonal": b.upper_diagonal.to_string(),
                    "lower_diagonal": b.lower_diagonal.to_string(),
                    "best_r": b.best_r,
                    "expected_mono": b.expected_mono.to_string(),
                    "counting_m": b.counting_m.to_string(),
                    "omega": b.omega.to_string(),
                    "expected_mono_hamiltonian": b.expected_mono_hamiltonian.to_string(),
                }),
            ))
        }
        RamseyCommand::Cointail { n } => {
            let p = ramsey::coin_tail(*n);
            let markov = ramsey::coin_tail_proof_bound_holds(*n);
            let below = ramsey::markov_bound_check(*n);
            let text = format!(
                "P {p}\nP^3 <= (27/64)^n 2^n {}\nP < (19/20)^n {}",
                yes_no(markov),
                yes_no(below)
            );
            Ok(Report::new(text, json!({ "n": n, "p": p.to_string(), "cubed_bound": markov, "below_19_20": below })))
        }
    }
}

fn rado_command(cmd: &RadoCommand) -> Res<Report> {
    match cmd {
        RadoCommand::Adj { i, j } => {
            let adj = rado::bit_adjacent(&parse_label(i)?, &parse_label(j)?)?;
            Ok(Report::new(adj.to_string(), json!({ "adjacent": adj })))
        }
        RadoCommand::Witness { v, w } => {
            let (v, w) = (parse_labels(v)?, parse_labels(w)?);
            let z = rado::rado_witness(&v, &w)?;
            debug_assert!(rado::is_witness(&z, &v, &w).unwrap_or(false));
            Ok(Report::new(z.to_string(), json!({ "witness": z.to_string() })))
        }
        RadoCommand::Embed { file } => {
            let g = read_graph(file)?;
            let labels = rado::embed_induced(&g)?;
            let back = rado::induced_bit_graph(&labels)?;
            if back.edge_multiset() != g.edge_multiset() {
                return Err(Failure::Domain("embedding check failed".into()));
            }
            Ok(Report::new(joined(&labels), json!({ "labels": strings(&labels) })))
        }
    }
}
