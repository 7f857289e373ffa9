//! Command-line front end: classify operation tables, recognize complete
//! multipartite graphs, enumerate and count travel-groupoid censuses, and
//! cross-check the enumeration routes against each other.
//!
//! Exit codes: 0 success, 1 input error, 2 semantic negative (not a travel
//! groupoid, not multipartite, oracle mismatch), 3 guard refusal.

use std::collections::HashSet;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde::Serialize;

use tgk::counting::{count_simple_travel_groupoids, count_travel_groupoids, PartSizes};
use tgk::enumeration::{
    enumerate_bruteforce, enumerate_nonconfusing, predicate_by_name, predicted_census_size,
    BRUTE_FORCE_MAX_ORDER, DEFAULT_CENSUS_CEILING,
};
use tgk::graph::{classify_family, MultipartiteOutcome};
use tgk::io::{format_table, format_tree, parse_graph, parse_table};
use tgk::trees::{count_v_trees, enumerate_v_trees};
use tgk::{recognize_multipartite, Graph, Groupoid, PropertyReport};

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_NEGATIVE: u8 = 2;
const EXIT_GUARD: u8 = 3;

#[derive(Parser)]
#[command(
    name = "tgk",
    version,
    about = "Travel groupoids on finite graphs: classification, recognition, enumeration, counting"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every predicate of an operation-table file
    Classify {
        /// Operation table (line 1: n; then n rows of n entries)
        table: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the exact census counting formulas
    Count {
        /// Part sizes n1,n2,... of the complete multipartite graph
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        multipartite: Vec<usize>,
        /// Count only the simple travel groupoids
        #[arg(long)]
        simple: bool,
        #[arg(long)]
        json: bool,
    },
    /// Stream every non-confusing travel groupoid on a connected graph
    Enumerate {
        #[command(flatten)]
        input: GraphInput,
        /// Keep only groupoids satisfying this predicate
        /// (simple | smooth | semi_smooth | tcm | tcb | associative | has_left_unit)
        #[arg(long)]
        filter: Option<String>,
        /// Stop after this many groupoids
        #[arg(long)]
        limit: Option<usize>,
        /// Write the dump to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Ignore the census-size ceiling
        #[arg(long)]
        force: bool,
        #[arg(long)]
        json: bool,
    },
    /// Recognize a complete multipartite graph or report a violating triple
    Recognize {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate or count the v-spanning trees of a connected graph
    Trees {
        graph: PathBuf,
        /// The root vertex v
        #[arg(long)]
        root: usize,
        /// Print only the matrix-tree count
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check tree enumeration, brute force, and the counting formulas
    Oracle {
        #[command(flatten)]
        input: GraphInput,
        /// Ignore the census-size ceiling
        #[arg(long)]
        force: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Graph file (line 1: "n m"; then m lines "u v")
    graph: Option<PathBuf>,
    /// Build K_{n1,n2,...} instead of reading a file
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    multipartite: Option<Vec<usize>>,
}

/// A failure that already knows its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn guard(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_GUARD,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify { table, json } => cmd_classify(&table, json),
        Command::Count {
            multipartite,
            simple,
            json,
        } => cmd_count(&multipartite, simple, json),
        Command::Enumerate {
            input,
            filter,
            limit,
            out,
            force,
            json,
        } => cmd_enumerate(&input, filter.as_deref(), limit, out.as_deref(), force, json),
        Command::Recognize { graph, json } => cmd_recognize(&graph, json),
        Command::Trees {
            graph,
            root,
            count_only,
            json,
        } => cmd_trees(&graph, root, count_only, json),
        Command::Oracle { input, force } => cmd_oracle(&input, force),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_file(path: &std::path::Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_table(path: &std::path::Path) -> Result<Groupoid, Failure> {
    let text = read_file(path)?;
    parse_table(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_graph(input: &GraphInput) -> Result<Graph, Failure> {
    match (&input.graph, &input.multipartite) {
        (Some(path), None) => {
            let text = read_file(path)?;
            parse_graph(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
        }
        (None, Some(sizes)) => Graph::complete_multipartite(sizes)
            .map(|(g, _)| g)
            .map_err(|e| Failure::input(e.to_string())),
        _ => unreachable!("clap group enforces exactly one source"),
    }
}

fn census_ceiling(force: bool) -> Option<u64> {
    if force {
        return None;
    }
    Some(
        std::env::var("TGK_MAX_CENSUS")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_CENSUS_CEILING),
    )
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_classify(path: &std::path::Path, json: bool) -> Result<u8, Failure> {
    let g = load_table(path)?;
    let report = PropertyReport::analyze(&g);
    let graph = g.associated_graph();
    let family = classify_family(&graph);
    let subgroupoids = if report.travel {
        Some(g.maximal_associative_subgroupoids().expect("travel"))
    } else {
        None
    };
    if json {
        #[derive(Serialize)]
        struct Output<'a> {
            report: &'a PropertyReport,
            associated_graph_edges: Vec<(usize, usize)>,
            family: String,
            maximal_associative_subgroupoids: &'a Option<Vec<Vec<usize>>>,
        }
        let out = Output {
            report: &report,
            associated_graph_edges: graph.edges(),
            family: family.to_string(),
            maximal_associative_subgroupoids: &subgroupoids,
        };
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        println!("order: {}", report.order);
        println!("travel: {}", yes_no(report.travel));
        println!("idempotent: {}", yes_no(report.idempotent));
        print_flag("t1", report.t1, report.witnesses.t1.map(|(a, b)| vec![a, b]));
        print_flag("t2", report.t2, report.witnesses.t2.map(|(a, b)| vec![a, b]));
        print_flag(
            "simple",
            report.simple,
            report.witnesses.simple.map(|(a, b)| vec![a, b]),
        );
        print_flag(
            "smooth",
            report.smooth,
            report.witnesses.smooth.map(|(a, b, c)| vec![a, b, c]),
        );
        print_flag(
            "semi_smooth",
            report.semi_smooth,
            report.witnesses.semi_smooth.map(|(a, b, c)| vec![a, b, c]),
        );
        print_flag(
            "tcm",
            report.tcm,
            report.witnesses.tcm.map(|(a, b, c)| vec![a, b, c]),
        );
        print_flag(
            "tcb",
            report.tcb,
            report.witnesses.tcb.map(|(a, b, c)| vec![a, b, c]),
        );
        print_flag(
            "associative",
            report.associative,
            report.witnesses.associative.map(|(a, b, c)| vec![a, b, c]),
        );
        match &report.confusing_pairs {
            Some(pairs) if pairs.is_empty() => {
                println!("non_confusing: yes");
                println!("confusing_pairs: none");
            }
            Some(pairs) => {
                println!("non_confusing: no");
                let items: Vec<String> =
                    pairs.iter().map(|(u, v)| format!("({u},{v})")).collect();
                println!("confusing_pairs: {}", items.join(" "));
            }
            None => {
                println!("non_confusing: n/a (not a travel groupoid)");
                println!("confusing_pairs: n/a");
            }
        }
        if report.left_units.is_empty() {
            println!("left_units: none");
        } else {
            let items: Vec<String> = report.left_units.iter().map(|u| u.to_string()).collect();
            println!("left_units: {}", items.join(" "));
        }
        let edge_strs: Vec<String> = graph
            .edges()
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect();
        println!("associated_graph_edges: {}", edge_strs.join(" "));
        println!("family: {family}");
        match &subgroupoids {
            Some(subs) => {
                let items: Vec<String> = subs.iter().map(|s| format_set(s)).collect();
                println!("maximal_associative_subgroupoids: {}", items.join(" "));
            }
            None => println!("maximal_associative_subgroupoids: n/a"),
        }
    }
    Ok(if report.travel { EXIT_OK } else { EXIT_NEGATIVE })
}

fn print_flag(name: &str, ok: bool, witness: Option<Vec<usize>>) {
    match witness {
        None => println!("{name}: {}", yes_no(ok)),
        Some(w) => {
            let items: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            println!("{name}: {} (witness: {})", yes_no(ok), items.join(","));
        }
    }
}

fn format_set(s: &[usize]) -> String {
    let items: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn cmd_count(sizes: &[usize], simple: bool, json: bool) -> Result<u8, Failure> {
    let sizes = PartSizes::new(sizes.to_vec()).map_err(|e| Failure::input(e.to_string()))?;
    let compute = |simple: bool| {
        if simple {
            count_simple_travel_groupoids(&sizes)
        } else {
            count_travel_groupoids(&sizes)
        }
        .map_err(|e| Failure::input(e.to_string()))
    };
    if json {
        #[derive(Serialize)]
        struct Output<'a> {
            sizes: &'a [usize],
            travel: String,
            simple: String,
        }
        let out = Output {
            sizes: sizes.sizes(),
            travel: compute(false)?.to_string(),
            simple: compute(true)?.to_string(),
        };
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else {
        println!("{}", compute(simple)?);
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct StreamFlags {
    travel: bool,
    non_confusing: bool,
    simple: bool,
    smooth: bool,
    semi_smooth: bool,
    tcm: bool,
    tcb: bool,
    associative: bool,
    has_left_unit: bool,
}

impl StreamFlags {
    fn of(g: &Groupoid) -> Self {
        StreamFlags {
            travel: true,
            non_confusing: true,
            simple: g.is_simple(),
            smooth: g.is_smooth(),
            semi_smooth: g.is_semi_smooth(),
            tcm: g.satisfies_tcm(),
            tcb: g.satisfies_tcb(),
            associative: g.is_associative(),
            has_left_unit: g.has_left_unit(),
        }
    }
}

fn cmd_enumerate(
    input: &GraphInput,
    filter: Option<&str>,
    limit: Option<usize>,
    out: Option<&std::path::Path>,
    force: bool,
    json: bool,
) -> Result<u8, Failure> {
    let graph = load_graph(input)?;
    let predicate = filter
        .map(predicate_by_name)
        .transpose()
        .map_err(|e| Failure::input(e.to_string()))?;
    let census = enumerate_nonconfusing(&graph, census_ceiling(force)).map_err(|e| match e {
        tgk::enumeration::EnumerationError::TooLarge { .. } => Failure::guard(e.to_string()),
        other => Failure::input(other.to_string()),
    })?;
    let mut sink: Box<dyn Write> = match out {
        Some(path) => Box::new(
            fs::File::create(path)
                .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?,
        ),
        None => Box::new(std::io::stdout()),
    };
    let mut streamed = 0usize;
    let write_err = |e: std::io::Error| Failure::input(format!("write failed: {e}"));
    for g in census {
        if let Some(p) = predicate {
            if !p(&g) {
                continue;
            }
        }
        if let Some(k) = limit {
            if streamed >= k {
                break;
            }
        }
        if json {
            #[derive(Serialize)]
            struct Line {
                index: usize,
                table: Vec<Vec<usize>>,
                flags: StreamFlags,
            }
            let line = Line {
                index: streamed,
                table: g.rows(),
                flags: StreamFlags::of(&g),
            };
            writeln!(sink, "{}", serde_json::to_string(&line).expect("serializable"))
                .map_err(write_err)?;
        } else {
            writeln!(sink, "# {streamed}").map_err(write_err)?;
            write!(sink, "{}", format_table(&g)).map_err(write_err)?;
        }
        streamed += 1;
    }
    drop(sink);
    if json {
        println!("{}", serde_json::to_string(&serde_json::json!({ "total": streamed })).unwrap());
    } else {
        println!("# total {streamed}");
    }
    Ok(EXIT_OK)
}

fn cmd_recognize(path: &std::path::Path, json: bool) -> Result<u8, Failure> {
    let text = read_file(path)?;
    let graph =
        parse_graph(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    match recognize_multipartite(&graph) {
        MultipartiteOutcome::Multipartite(p) => {
            if json {
                #[derive(Serialize)]
                struct Output<'a> {
                    multipartite: bool,
                    sizes: Vec<usize>,
                    parts: &'a [Vec<usize>],
                    family: String,
                }
                let out = Output {
                    multipartite: true,
                    sizes: p.sizes(),
                    parts: p.parts(),
                    family: classify_family(&graph).to_string(),
                };
                println!("{}", serde_json::to_string(&out).expect("serializable"));
            } else {
                let sizes: Vec<String> = p.sizes().iter().map(|s| s.to_string()).collect();
                println!("{}", sizes.join(","));
                let parts: Vec<String> = p.parts().iter().map(|s| format_set(s)).collect();
                println!("parts: {}", parts.join(" "));
                println!("family: {}", classify_family(&graph));
            }
            Ok(EXIT_OK)
        }
        MultipartiteOutcome::NotMultipartite { witness: (u, v, w) } => {
            if json {
                println!(
                    "{}",
                    serde_json::json!({ "multipartite": false, "witness": [u, v, w] })
                );
            } else {
                println!("not complete multipartite");
                println!("witness: edge {v}-{w} with {u} adjacent to neither endpoint");
            }
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn cmd_trees(path: &std::path::Path, root: usize, count_only: bool, json: bool) -> Result<u8, Failure> {
    let text = read_file(path)?;
    let graph =
        parse_graph(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    if count_only {
        let count = count_v_trees(&graph, root).map_err(|e| Failure::input(e.to_string()))?;
        if json {
            println!("{}", serde_json::json!({ "root": root, "count": count.to_string() }));
        } else {
            println!("{count}");
        }
        return Ok(EXIT_OK);
    }
    let trees = enumerate_v_trees(&graph, root).map_err(|e| Failure::input(e.to_string()))?;
    if json {
        #[derive(Serialize)]
        struct Output {
            root: usize,
            count: usize,
            parents: Vec<Vec<usize>>,
        }
        let out = Output {
            root,
            count: trees.len(),
            parents: trees.iter().map(|t| t.parent_map().to_vec()).collect(),
        };
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else {
        for (i, t) in trees.iter().enumerate() {
            println!("# {i}");
            print!("{}", format_tree(t));
        }
        println!("# total {}", trees.len());
    }
    Ok(EXIT_OK)
}

fn cmd_oracle(input: &GraphInput, force: bool) -> Result<u8, Failure> {
    let graph = load_graph(input)?;
    if !graph.is_connected() {
        return Err(Failure::input("oracle requires a connected graph"));
    }
    let mut all_pass = true;
    let mut check = |name: &str, ok: bool, detail: String| {
        println!("{} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
        all_pass &= ok;
    };

    // per-vertex: matrix-tree count vs enumeration length
    let mut tree_mismatch = None;
    let mut counts = Vec::new();
    for v in 0..graph.order() {
        let counted = count_v_trees(&graph, v).map_err(|e| Failure::input(e.to_string()))?;
        let listed = enumerate_v_trees(&graph, v).map_err(|e| Failure::input(e.to_string()))?;
        if counted != BigUint::from(listed.len()) {
            tree_mismatch = Some((v, counted.clone(), listed.len()));
        }
        counts.push(counted);
    }
    check(
        "v-trees",
        tree_mismatch.is_none(),
        match &tree_mismatch {
            None => format!(
                "matrix-tree count matches enumeration at every root ({})",
                counts
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            Some((v, c, l)) => format!("root {v}: determinant {c} vs {l} enumerated"),
        },
    );

    let predicted = predicted_census_size(&graph).map_err(|e| Failure::input(e.to_string()))?;
    let ceiling = census_ceiling(force);
    let census_allowed = ceiling.is_none_or(|c| predicted <= BigUint::from(c));
    let recognized = recognize_multipartite(&graph);

    let census: Option<Vec<Groupoid>> = if census_allowed {
        Some(
            enumerate_nonconfusing(&graph, None)
                .map_err(|e| Failure::input(e.to_string()))?
                .collect(),
        )
    } else {
        println!("SKIP census: predicted size {predicted} exceeds ceiling (use --force)");
        None
    };

    if let (Some(census), MultipartiteOutcome::Multipartite(p)) = (&census, &recognized) {
        let sizes = PartSizes::new(p.sizes()).expect("recognized parts are nonempty");
        let formula = count_travel_groupoids(&sizes).map_err(|e| Failure::input(e.to_string()))?;
        check(
            "census-vs-formula",
            BigUint::from(census.len()) == formula,
            format!("{} enumerated, formula {formula}", census.len()),
        );
        let simple_census = census.iter().filter(|g| g.is_simple()).count();
        let simple_formula =
            count_simple_travel_groupoids(&sizes).map_err(|e| Failure::input(e.to_string()))?;
        check(
            "simple-census-vs-formula",
            BigUint::from(simple_census) == simple_formula,
            format!("{simple_census} enumerated simple, formula {simple_formula}"),
        );
        if census.iter().all(|g| g.is_smooth()) {
            println!("NOTE all {} census groupoids are smooth", census.len());
        }
    } else if matches!(recognized, MultipartiteOutcome::NotMultipartite { .. }) {
        println!("SKIP formulas: graph is not complete multipartite");
    }

    if graph.order() <= BRUTE_FORCE_MAX_ORDER {
        if let Some(census) = &census {
            let brute = enumerate_bruteforce(&graph).map_err(|e| Failure::input(e.to_string()))?;
            let brute_set: HashSet<&Groupoid> = brute.iter().collect();
            let census_set: HashSet<&Groupoid> = census.iter().collect();
            if recognized.partition().is_some() {
                check(
                    "bruteforce-vs-census",
                    brute_set == census_set,
                    format!(
                        "{} brute-forced, {} from tree product (must be the same set)",
                        brute_set.len(),
                        census_set.len()
                    ),
                );
            } else {
                check(
                    "census-subset-of-bruteforce",
                    census_set.is_subset(&brute_set),
                    format!(
                        "{} non-confusing among {} travel groupoids",
                        census_set.len(),
                        brute_set.len()
                    ),
                );
            }
        }
    } else {
        println!(
            "SKIP brute force: order {} exceeds limit {BRUTE_FORCE_MAX_ORDER}",
            graph.order()
        );
    }

    Ok(if all_pass { EXIT_OK } else { EXIT_NEGATIVE })
}
