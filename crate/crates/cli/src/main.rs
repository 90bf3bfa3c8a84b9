use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sqchoose::discharging::{apply_rules, initial_charges, verify_bound, Holder};
use sqchoose::embedding::{faces_of, RotationSystem};
use sqchoose::io::{parse_graph, parse_lists, parse_rotation, write_graph};
use sqchoose::listcolor::{color_square, verify_square_coloring, ListAssignment};
use sqchoose::oracle::{choosability_counterexample, verify_reduction, Method, Verdict};
use sqchoose::par::Execution;
use sqchoose::profile::LemmaProfile;
use sqchoose::rational::Frac;
use sqchoose::sparsity::{mad_exact, profile_for};
use sqchoose::structure::{assign_sponsors, find_configs, Sponsorship};
use sqchoose::{Error, Graph};

#[derive(Parser)]
#[command(name = "sqchoose", version, about = "List colouring of squares of maximum-degree-4 graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the square as an edge list.
    Square { graph: PathBuf },
    /// Print the girth, or `inf` for a forest.
    Girth { graph: PathBuf },
    /// Print the maximum average degree and its largest witness.
    Mad { graph: PathBuf },
    /// Print the strongest applicable colouring regime.
    Profile {
        #[arg(long)]
        embedding: Option<PathBuf>,
        graph: PathBuf,
    },
    /// Print every reducible configuration, one per line.
    FindConfig {
        #[arg(long)]
        lemma: u8,
        #[arg(long)]
        embedding: Option<PathBuf>,
        graph: PathBuf,
    },
    /// Run the discharging rules on a configuration-free graph.
    VerifyDischarge {
        #[arg(long)]
        lemma: u8,
        #[arg(long)]
        embedding: Option<PathBuf>,
        graph: PathBuf,
    },
    /// Colour the square from lists.
    Color(ColorArgs),
    /// Print the facial walks of an embedding.
    Faces {
        #[arg(long)]
        embedding: PathBuf,
        graph: PathBuf,
    },
    /// Brute-force checks on small instances.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Args)]
struct ColorArgs {
    #[arg(long)]
    lemma: u8,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, conflicts_with = "random_lists")]
    lists: Option<PathBuf>,
    #[arg(long)]
    random_lists: Option<u64>,
    #[arg(long)]
    embedding: Option<PathBuf>,
    /// Override file with `lemma`, `k`, `mad_num`, `mad_den`, `girth` keys.
    #[arg(long)]
    profile: Option<PathBuf>,
    graph: PathBuf,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Decide k-choosability of the graph itself.
    Choosable {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        universe: Option<usize>,
        #[arg(long)]
        sequential: bool,
        graph: PathBuf,
    },
    /// Certify the first match of a configuration in the graph.
    Reduce {
        #[arg(long)]
        lemma: u8,
        #[arg(long)]
        config: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        embedding: Option<PathBuf>,
        graph: PathBuf,
    },
}

const EXIT_INPUT: u8 = 1;
const EXIT_INTERNAL: u8 = 2;
const EXIT_COUNTEREXAMPLE: u8 = 3;

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidGraph(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Error> {
    parse_graph(&read(path)?)
}

fn load_rotation(path: Option<&PathBuf>, g: &Graph) -> Result<Option<RotationSystem>, Error> {
    path.map(|p| {
        let rot = parse_rotation(&read(p)?, g.vertex_count())?;
        rot.validate(g)?;
        Ok(rot)
    })
    .transpose()
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn run(cmd: Command) -> Result<u8, Error> {
    match cmd {
        Command::Square { graph } => {
            print!("{}", write_graph(&load_graph(&graph)?.square()));
        }
        Command::Girth { graph } => match load_graph(&graph)?.girth() {
            Some(g) => println!("{g}"),
            None => println!("inf"),
        },
        Command::Mad { graph } => {
            let r = mad_exact(&load_graph(&graph)?)?;
            println!("{}", Frac(r.value));
            println!("{}", join(r.witness));
        }
        Command::Profile { embedding, graph } => {
            let g = load_graph(&graph)?;
            let rot = load_rotation(embedding.as_ref(), &g)?;
            let p = match profile_for(&g)? {
                Some(p) => Some(p),
                None if rot.is_some() => Some(LemmaProfile::by_lemma(6)?),
                None => None,
            };
            match p {
                Some(p) => println!("lemma{} k={}", p.lemma, p.k),
                None => println!("none"),
            }
        }
        Command::FindConfig { lemma, embedding, graph } => {
            let g = load_graph(&graph)?;
            let rot = load_rotation(embedding.as_ref(), &g)?;
            for m in find_configs(&g, lemma, rot.as_ref())? {
                println!("{m}");
            }
        }
        Command::VerifyDischarge { lemma, embedding, graph } => {
            let g = load_graph(&graph)?;
            let rot = load_rotation(embedding.as_ref(), &g)?;
            let faces = rot.as_ref().map(|r| faces_of(&g, r)).transpose()?;
            let sponsors = if lemma == 6 { Sponsorship::default() } else { assign_sponsors(&g, lemma)? };
            let s0 = initial_charges(&g, lemma, faces.as_ref())?;
            let s1 = apply_rules(&g, lemma, &s0, &sponsors, faces.as_ref())?;
            let report = verify_bound(&s1, lemma)?;
            for (v, c) in report.vertex_final.iter().enumerate() {
                println!("v {v} {}", Frac(*c));
            }
            for (f, c) in report.face_final.iter().enumerate() {
                println!("f {f} {}", Frac(*c));
            }
            if report.holds() {
                println!("HOLDS");
            } else {
                for (h, c) in &report.violators {
                    match h {
                        Holder::Vertex(v) => println!("violator v {v} {}", Frac(*c)),
                        Holder::Face(f) => println!("violator f {f} {}", Frac(*c)),
                    }
                }
                println!("VIOLATED");
                return Ok(EXIT_INTERNAL);
            }
        }
        Command::Color(a) => return color(a),
        Command::Faces { embedding, graph } => {
            let g = load_graph(&graph)?;
            let rot = load_rotation(Some(&embedding), &g)?.expect("given");
            for f in &faces_of(&g, &rot)?.faces {
                println!("{}: {}", f.len(), join(&f.walk));
            }
        }
        Command::Oracle(o) => return oracle(o),
    }
    Ok(0)
}

fn color(a: ColorArgs) -> Result<u8, Error> {
    let g = load_graph(&a.graph)?;
    let rot = load_rotation(a.embedding.as_ref(), &g)?;
    let mut p = match &a.profile {
        Some(path) => LemmaProfile::parse_override(&read(path)?)?,
        None => LemmaProfile::by_lemma(a.lemma)?,
    };
    if p.lemma != a.lemma {
        return Err(Error::InvalidGraph(format!(
            "profile file is for lemma {}, not {}",
            p.lemma, a.lemma
        )));
    }
    if let Some(k) = a.k {
        p.k = k;
    }
    let lists = match (&a.lists, a.random_lists) {
        (Some(path), _) => parse_lists(&read(path)?, g.vertex_count())?,
        (None, seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(0));
            ListAssignment::random(g.vertex_count(), p.k, 2 * p.k, &mut rng)
        }
    };
    let c = color_square(&g, &lists, &p, rot.as_ref())?;
    if let Err(e) = verify_square_coloring(&g, &lists, &c) {
        eprintln!("invalid colouring: {e}");
        return Ok(EXIT_INTERNAL);
    }
    for (v, col) in c.iter() {
        println!("{v} {}", col.expect("total"));
    }
    Ok(0)
}

fn oracle(o: OracleCommand) -> Result<u8, Error> {
    match o {
        OracleCommand::Choosable { k, universe, sequential, graph } => {
            let g = load_graph(&graph)?;
            let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
            let universe = universe.unwrap_or(2 * k);
            match choosability_counterexample(&g, k, universe, exec)? {
                None => println!("true"),
                Some(lists) => {
                    println!("false");
                    for (v, l) in lists.iter().enumerate() {
                        println!("{v}: {}", join(l));
                    }
                    return Ok(EXIT_COUNTEREXAMPLE);
                }
            }
        }
        OracleCommand::Reduce { lemma, config, k, embedding, graph } => {
            let g = load_graph(&graph)?;
            let rot = load_rotation(embedding.as_ref(), &g)?;
            let k = k.unwrap_or(LemmaProfile::by_lemma(lemma)?.k);
            let m = find_configs(&g, lemma, rot.as_ref())?
                .into_iter()
                .find(|m| m.config == config)
                .ok_or_else(|| Error::InvalidGraph(format!("no match of lemma {lemma} config {config}")))?;
            println!("match {m}");
            match verify_reduction(&g, &m, k)? {
                Verdict::Certified(c) => {
                    let method = match c.method {
                        Method::Greedy(order) => format!("greedy {}", join(order)),
                        Method::DegreeChoosable { prefix } => format!("degree-choosable prefix {}", join(prefix)),
                        Method::Exhaustive { universe } => format!("exhaustive universe {universe}"),
                    };
                    println!("CERTIFIED {method}");
                    for (v, f) in c.floors {
                        println!("floor {v} {f}");
                    }
                }
                Verdict::Counterexample { floors, reason, lists } => {
                    println!("COUNTEREXAMPLE {reason}");
                    for (v, f) in floors {
                        println!("floor {v} {f}");
                    }
                    for (v, l) in lists.unwrap_or_default() {
                        println!("{v}: {}", join(l));
                    }
                    return Ok(EXIT_COUNTEREXAMPLE);
                }
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_internal() { EXIT_INTERNAL } else { EXIT_INPUT })
        }
    }
}
