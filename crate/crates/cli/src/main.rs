//! `coloravoid` command-line interface.
//!
//! Exit status: 0 success or property holds, 1 property fails, 2 input or parameter error,
//! 3 exact-search budget refusal.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use coloravoid::exact::{min_restriction_exact, min_subgraph_exact, DEFAULT_BUDGET};
use coloravoid::format::{parse_instance, to_dot, write_subgraph, Instance};
use coloravoid::matroid::{
    courteous_restriction, min_elements_bound, prune_restriction, IncreaseRankVariant,
};
use coloravoid::sparsify::{min_edges_bound, prune_subgraph, sparsify};
use coloravoid::{ColoredGraph, Error, Family, GraphRef, Notion, Order};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "coloravoid",
    version,
    about = "Color-avoiding connectivity toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Property {
    Eca,
    Vca,
    Ivca,
    Courteous,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundKind {
    Eca,
    Vca,
    Ivca,
    Matroid,
}

#[derive(Subcommand)]
enum Command {
    /// Check a property and report a witness when it fails.
    Check { property: Property, file: PathBuf },
    /// Run the approximation algorithm and print the selected subgraph with a stats line.
    Approx {
        property: Property,
        file: PathBuf,
        /// `asc`, `desc`, `random`, `random:<seed>` or a path to an order file.
        #[arg(long, default_value = "asc")]
        order: String,
        /// Seed used by `--order random`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Delete redundant elements from the output afterwards.
        #[arg(long)]
        prune: bool,
        /// Write the selection here instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Compute an exact optimum by exhaustive search.
    Exact {
        property: Property,
        file: PathBuf,
        /// Largest edge or element count the search accepts.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Generate an extremal construction: `<family> <k> <n>`, or `<family> <n>` for families with fixed k.
    Generate {
        family: String,
        #[arg(num_args = 1..=2, required = true)]
        params: Vec<usize>,
        /// Write the graph here instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Also write `<prefix>.optimum`, `<prefix>.adversarial` and `<prefix>.order` files.
        #[arg(long, value_name = "PREFIX")]
        certificates: Option<PathBuf>,
    },
    /// Print the closed-form lower bound: `<eca|vca|ivca> <k> <n>` or `matroid <k> <r>`.
    Bounds {
        kind: BoundKind,
        k: usize,
        size: usize,
    },
    /// Render an instance in DOT.
    ExportDot {
        file: PathBuf,
        /// Comma-separated edge ids drawn bold.
        #[arg(long, value_delimiter = ',')]
        highlight: Vec<usize>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => 3,
            Error::PreconditionFailed { .. } | Error::NotCourteous { .. } => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type CliResult = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Instance, Failure> {
    parse_instance(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn notion_of(p: Property) -> Option<Notion> {
    match p {
        Property::Eca => Some(Notion::Eca),
        Property::Vca => Some(Notion::Vca),
        Property::Ivca => Some(Notion::Ivca),
        Property::Courteous => None,
    }
}

fn graph_for(inst: &Instance, notion: Notion) -> Result<GraphRef<'_>, Failure> {
    match (inst.graph(), notion) {
        (Some(g @ GraphRef::Edge(_)), Notion::Eca)
        | (Some(g @ GraphRef::Vertex(_)), Notion::Vca | Notion::Ivca) => Ok(g),
        _ => Err(usage(format!(
            "{notion} does not apply to a {} file",
            inst.kind()
        ))),
    }
}

fn matroid_for(inst: &Instance) -> Result<coloravoid::ColoredMatroid, Failure> {
    match inst.matroid() {
        Some(m) => Ok(m?),
        None => Err(usage(
            "courteousness applies to ECG, GRAPHIC or UNIFORM files",
        )),
    }
}

fn parse_order(spec: &str, seed: u64) -> Result<Order, Failure> {
    if spec == "random" {
        return Ok(Order::Random(seed));
    }
    if let Ok(o) = spec.parse::<Order>() {
        return Ok(o);
    }
    let path = Path::new(spec);
    if path.exists() {
        return Order::from_file_str(&read(path)?).map_err(|e| usage(format!("{spec}: {e}")));
    }
    Err(usage(format!(
        "unrecognized order {spec:?}; expected asc, desc, random, random:<seed> or an order file"
    )))
}

fn cmd_check(property: Property, file: &Path) -> CliResult {
    let inst = load(file)?;
    match notion_of(property) {
        Some(notion) => {
            let g = graph_for(&inst, notion)?;
            let all: Vec<usize> = (0..g.m()).collect();
            let verdict = g.check(notion, &all);
            match verdict.witness {
                None => {
                    println!("{notion} connected: yes");
                    Ok(0)
                }
                Some(w) => {
                    println!("{notion} connected: no");
                    println!("witness: {w}");
                    Ok(1)
                }
            }
        }
        None => {
            let m = matroid_for(&inst)?;
            match m.courteous_violation() {
                None => {
                    println!("courteous: yes");
                    Ok(0)
                }
                Some(c) => {
                    println!("courteous: no");
                    println!("witness: deleting color {c} lowers the rank");
                    Ok(1)
                }
            }
        }
    }
}

#[derive(Serialize)]
struct Stats {
    schema: u32,
    property: &'static str,
    n: usize,
    ground_size: usize,
    colors_used: usize,
    edges_selected: usize,
    selected: Vec<usize>,
    phase_counts: BTreeMap<String, usize>,
    lower_bound: Option<usize>,
    upper_bound: Option<usize>,
    ratio_vs_bound: Option<f64>,
    pruned: bool,
}

fn ratio(selected: usize, bound: Option<usize>) -> Option<f64> {
    bound.filter(|&b| b > 0).map(|b| selected as f64 / b as f64)
}

fn emit(text: String, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => write(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_approx(
    property: Property,
    file: &Path,
    order: &Order,
    prune: bool,
    output: Option<&Path>,
) -> CliResult {
    let inst = load(file)?;
    let (body, stats) = match notion_of(property) {
        Some(notion) => {
            let g = graph_for(&inst, notion)?;
            let result = sparsify(g, notion, order)?;
            let mut phase_counts: BTreeMap<String, usize> = result
                .phase_counts()
                .into_iter()
                .map(|(t, c)| (t.to_string(), c))
                .collect();
            let selected = if prune {
                let kept = prune_subgraph(g, &result.selected, notion);
                phase_counts.insert("pruned_away".into(), result.len() - kept.len());
                kept
            } else {
                result.selected.clone()
            };
            let (n, k) = (g.n(), g.colors_used());
            let lower = min_edges_bound(notion, k, n).ok();
            let upper = match notion {
                Notion::Eca => 2 * n.saturating_sub(1),
                _ if k >= 2 && n >= 2 => 2 * n - 3,
                _ => g.m(),
            };
            let stats = Stats {
                schema: 1,
                property: notion.name(),
                n,
                ground_size: g.m(),
                colors_used: k,
                edges_selected: selected.len(),
                ratio_vs_bound: ratio(selected.len(), lower),
                selected: selected.clone(),
                phase_counts,
                lower_bound: lower,
                upper_bound: Some(upper),
                pruned: prune,
            };
            (write_subgraph(g, &selected), stats)
        }
        None => {
            let m = matroid_for(&inst)?;
            let seq = order.edge_sequence(m.ground_size())?;
            let result = courteous_restriction(&m, &seq, IncreaseRankVariant::default())?;
            let mut phase_counts = BTreeMap::new();
            for tag in &result.tags {
                let key = match tag {
                    coloravoid::matroid::SelectionTag::Basis => "basis".to_string(),
                    coloravoid::matroid::SelectionTag::Repair(c) => format!("repair_color_{c}"),
                };
                *phase_counts.entry(key).or_insert(0) += 1;
            }
            let selected = if prune {
                let kept = prune_restriction(&m, &result.selected);
                phase_counts.insert("pruned_away".into(), result.selected.len() - kept.len());
                kept
            } else {
                result.selected.clone()
            };
            phase_counts.insert("oracle_calls".into(), result.oracle_calls as usize);
            let r = m.full_rank();
            let k = m.used_colors().len();
            let lower = min_elements_bound(k, r).ok();
            let body = match &inst {
                Instance::Edge(g) | Instance::Graphic(g) => {
                    write_subgraph(GraphRef::Edge(g), &selected)
                }
                Instance::Uniform { threshold, k, .. } => {
                    let colors: Vec<String> =
                        selected.iter().map(|&s| m.color(s).to_string()).collect();
                    let size = selected.len();
                    format!(
                        "UNIFORM {size} {} {k}\n{}\n",
                        threshold.min(&size),
                        colors.join(" ")
                    )
                }
                Instance::Vertex(_) => unreachable!("rejected by matroid_for"),
            };
            let stats = Stats {
                schema: 1,
                property: "courteous",
                n: m.ground_size(),
                ground_size: m.ground_size(),
                colors_used: k,
                edges_selected: selected.len(),
                ratio_vs_bound: ratio(selected.len(), lower),
                selected,
                phase_counts,
                lower_bound: lower,
                upper_bound: Some(2 * r),
                pruned: prune,
            };
            (body, stats)
        }
    };
    let json = serde_json::to_string(&stats).expect("stats serialize");
    emit(format!("{body}# stats {json}\n"), output)?;
    Ok(0)
}

fn cmd_exact(property: Property, file: &Path, budget: usize) -> CliResult {
    let inst = load(file)?;
    let (body, result) = match notion_of(property) {
        Some(notion) => {
            let g = graph_for(&inst, notion)?;
            let r = min_subgraph_exact(g, notion, budget)?;
            (write_subgraph(g, &r.witness), r)
        }
        None => {
            let m = matroid_for(&inst)?;
            let r = min_restriction_exact(&m, budget)?;
            let ids: Vec<String> = r.witness.iter().map(usize::to_string).collect();
            (format!("# elements {}\n", ids.join(" ")), r)
        }
    };
    println!("# optimum {}", result.optimum_size);
    print!("{body}");
    let json = serde_json::json!({
        "schema": 1,
        "optimum_size": result.optimum_size,
        "witness": result.witness,
        "instances_searched": result.instances_searched,
    });
    println!("# stats {json}");
    Ok(0)
}

fn write_graph(g: &ColoredGraph, ids: Option<&[usize]>) -> String {
    let all: Vec<usize> = (0..g.as_ref().m()).collect();
    write_subgraph(g.as_ref(), ids.unwrap_or(&all))
}

fn cmd_generate(
    family: &str,
    params: &[usize],
    output: Option<&Path>,
    certificates: Option<&Path>,
) -> CliResult {
    let family: Family = family.parse()?;
    let (k, n) = match (family.fixed_k(), params) {
        (Some(k), [n]) => (k, *n),
        (None, [k, n]) => (*k, *n),
        (Some(_), _) => return Err(usage(format!("{family} takes one parameter: <n>"))),
        (None, _) => return Err(usage(format!("{family} takes two parameters: <k> <n>"))),
    };
    let c = family.generate(k, n)?;
    let mut header = format!("# {family} k={k} n={n}");
    if let Some((m, l)) = c.spec.ladder {
        header.push_str(&format!(" m={m} l={l}"));
    }
    emit(format!("{header}\n{}", write_graph(&c.graph, None)), output)?;
    if let Some(prefix) = certificates {
        let ext = match c.graph {
            ColoredGraph::Edge(_) => "ecg",
            ColoredGraph::Vertex(_) => "vcg",
        };
        let path = |tag: &str| PathBuf::from(format!("{}.{tag}", prefix.display()));
        let mut written = Vec::new();
        for (tag, ids) in [("optimum", &c.optimum), ("adversarial", &c.adversarial)] {
            if let Some(ids) = ids {
                let p = path(&format!("{tag}.{ext}"));
                write(&p, &write_graph(&c.graph, Some(ids)))?;
                written.push(p);
            }
        }
        if let Some(order) = &c.adversarial_order {
            let g = c.graph.as_ref();
            let used = match &c.graph {
                ColoredGraph::Edge(h) => h.used_colors(),
                ColoredGraph::Vertex(h) => h.used_colors(),
            };
            let p = path("order");
            write(&p, &order.to_file_string(g.m(), g.n(), &used)?)?;
            written.push(p);
        }
        for p in written {
            eprintln!("wrote {}", p.display());
        }
    }
    Ok(0)
}

fn cmd_bounds(kind: BoundKind, k: usize, size: usize) -> CliResult {
    let value = match kind {
        BoundKind::Eca => min_edges_bound(Notion::Eca, k, size)?,
        BoundKind::Vca => min_edges_bound(Notion::Vca, k, size)?,
        BoundKind::Ivca => min_edges_bound(Notion::Ivca, k, size)?,
        BoundKind::Matroid => min_elements_bound(k, size)?,
    };
    println!("{value}");
    Ok(0)
}

fn cmd_export_dot(file: &Path, highlight: &[usize]) -> CliResult {
    let inst = load(file)?;
    let g = match &inst {
        Instance::Graphic(g) => GraphRef::Edge(g),
        other => other
            .graph()
            .ok_or_else(|| usage("DOT export needs an ECG, VCG or GRAPHIC file"))?,
    };
    if let Some(&bad) = highlight.iter().find(|&&id| id >= g.m()) {
        return Err(usage(format!("edge id {bad} out of range (m = {})", g.m())));
    }
    let hl = (!highlight.is_empty()).then_some(highlight);
    print!("{}", to_dot(g, hl));
    Ok(0)
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Check { property, file } => cmd_check(property, &file),
        Command::Approx {
            property,
            file,
            order,
            seed,
            prune,
            output,
        } => {
            let order = parse_order(&order, seed)?;
            cmd_approx(property, &file, &order, prune, output.as_deref())
        }
        Command::Exact {
            property,
            file,
            budget,
        } => cmd_exact(property, &file, budget),
        Command::Generate {
            family,
            params,
            output,
            certificates,
        } => cmd_generate(&family, &params, output.as_deref(), certificates.as_deref()),
        Command::Bounds { kind, k, size } => cmd_bounds(kind, k, size),
        Command::ExportDot { file, highlight } => cmd_export_dot(&file, &highlight),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
