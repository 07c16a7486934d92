//! Command-line front end: solve, decide, bounds, generate, condense,
//! word operations and the benchmark harness.
//!
//! Exit codes: 0 success (or "yes"), 1 "no", 2 input/usage error,
//! 3 timeout.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use kloc::bench::{bench_csv, parse_bench_config, run_benchmark};
use kloc::classes::{self, ClassInstance};
use kloc::condense::condense;
use kloc::engine::{
    decide_k_local, locality_bounds, naive_search_with, priority_search_with, render_report,
    EngineError, SearchLimits,
};
use kloc::graph::{is_valid_colouring, Colouring, Graph};
use kloc::io::{parse_colouring, parse_graph, write_colouring, write_graph};
use kloc::word::{tilde_transform, word_locality_bruteforce, word_to_path_graph, Word};

const EXIT_NO: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_TIMEOUT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "kloc",
    about = "Exact k-locality solver for coloured graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgoArg {
    Naive,
    Priority,
    #[value(name = "priority-star")]
    PriorityStar,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the minimum locality and the optimal marking sequences.
    Solve {
        graph: PathBuf,
        colours: PathBuf,
        #[arg(long, value_enum, default_value = "priority")]
        algo: AlgoArg,
        /// Report every optimal sequence (upgrades priority-star).
        #[arg(long)]
        all: bool,
        /// Per-run timeout in seconds.
        #[arg(long)]
        timeout: Option<f64>,
        /// Run the naive search even above its palette cap.
        #[arg(long)]
        force_naive: bool,
    },
    /// Decide whether the locality is at most k; prints yes/no.
    Decide {
        graph: PathBuf,
        colours: PathBuf,
        k: usize,
    },
    /// Print the locality bracket from the component count and the
    /// maximum independent set.
    Bounds { graph: PathBuf, colours: PathBuf },
    /// Generate a graph-class instance: graph, colouring and oracle files.
    Gen {
        /// Class name: complete, star, wheel, friendship, cycle, web,
        /// sunflower, helm, bipartite-random, hypercube, crown, gear,
        /// knight, multipartite, petersen, flower-snark, edgeless.
        class: String,
        /// Class parameters (see the class list).
        params: Vec<String>,
        /// Output prefix: writes <prefix>.graph, <prefix>.cols,
        /// <prefix>.oracle.
        #[arg(long)]
        out: PathBuf,
    },
    /// Contract monochromatic edges; writes the condensed instance.
    Condense {
        graph: PathBuf,
        colours: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Word operations; letters are ASCII lowercase characters.
    Word {
        word: String,
        /// Print the word's locality (exhaustive).
        #[arg(long, group = "op")]
        loc: bool,
        /// Write the coloured path graph of the word.
        #[arg(long, group = "op")]
        topath: bool,
        /// Print the parity-separated rewrite (uppercase = tilde copy).
        #[arg(long, group = "op")]
        tilde: bool,
        /// Output prefix for --topath.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the benchmark harness from a config file and write CSV.
    Bench {
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

fn input_error(message: impl Into<String>) -> CliError {
    CliError { code: EXIT_INPUT, message: message.into() }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_instance(graph: &Path, colours: &Path) -> Result<(Graph, Colouring), CliError> {
    let g = parse_graph(&read_file(graph)?)
        .map_err(|e| input_error(format!("{}: {e}", graph.display())))?;
    let c = parse_colouring(&read_file(colours)?, g.n())
        .map_err(|e| input_error(format!("{}: {e}", colours.display())))?;
    Ok((g, c))
}

fn warn_if_invalid(g: &Graph, c: &Colouring) {
    if !is_valid_colouring(g, c) {
        eprintln!(
            "warning: colouring is not valid (some edge joins two equally coloured \
             vertices); `kloc condense` first gives an equivalent valid instance"
        );
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Solve { graph, colours, algo, all, timeout, force_naive } => {
            let (g, c) = load_instance(&graph, &colours)?;
            warn_if_invalid(&g, &c);
            let limits = SearchLimits {
                timeout: timeout.map(Duration::from_secs_f64),
                force_naive,
                ..Default::default()
            };
            let result = match algo {
                AlgoArg::Naive => naive_search_with(&g, &c, &limits),
                AlgoArg::Priority => priority_search_with(&g, &c, true, &limits),
                AlgoArg::PriorityStar => priority_search_with(&g, &c, all, &limits),
            };
            match result {
                Ok(r) => {
                    print!("{}", render_report(&r));
                    Ok(ExitCode::SUCCESS)
                }
                Err(EngineError::Timeout) => {
                    Err(CliError { code: EXIT_TIMEOUT, message: "search timed out".into() })
                }
                Err(e) => Err(input_error(e.to_string())),
            }
        }
        Command::Decide { graph, colours, k } => {
            if k < 1 {
                return Err(input_error("k must be at least 1"));
            }
            let (g, c) = load_instance(&graph, &colours)?;
            warn_if_invalid(&g, &c);
            if decide_k_local(&g, &c, k) {
                println!("yes");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("no");
                Ok(ExitCode::from(EXIT_NO))
            }
        }
        Command::Bounds { graph, colours } => {
            let (g, c) = load_instance(&graph, &colours)?;
            let b = locality_bounds(&g, &c);
            match b.upper {
                Some(u) => println!("{} <= loc <= {}", b.lower, u),
                None => println!("{} <= loc <= unknown", b.lower),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { class, params, out } => {
            let inst = generate(&class, &params)?;
            write_instance(&inst, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Condense { graph, colours, out } => {
            let (g, c) = load_instance(&graph, &colours)?;
            let condensed = condense(&g, &c);
            write_file(&out.with_extension("graph"), &write_graph(&condensed.graph))?;
            write_file(&out.with_extension("cols"), &write_colouring(&condensed.colouring))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Word { word, loc, topath, tilde, out } => {
            let (w, table) = Word::from_ascii(&word);
            if table.iter().any(|ch| !ch.is_ascii_lowercase()) {
                return Err(input_error("words must consist of ASCII lowercase letters"));
            }
            if loc {
                let k = word_locality_bruteforce(&w).map_err(|e| input_error(e.to_string()))?;
                println!("{k}");
                Ok(ExitCode::SUCCESS)
            } else if topath {
                let out = out.ok_or_else(|| input_error("--topath needs --out <prefix>"))?;
                let (g, c) = word_to_path_graph(&w);
                write_file(&out.with_extension("graph"), &write_graph(&g))?;
                write_file(&out.with_extension("cols"), &write_colouring(&c))?;
                Ok(ExitCode::SUCCESS)
            } else if tilde {
                let t = tilde_transform(&w).map_err(|e| input_error(e.to_string()))?;
                let rendered: String = t
                    .word
                    .symbols()
                    .iter()
                    .map(|&s| {
                        let ch = table[t.base_letter(s) as usize];
                        if t.is_tilde(s) {
                            ch.to_ascii_uppercase()
                        } else {
                            ch
                        }
                    })
                    .collect();
                println!("{rendered}");
                Ok(ExitCode::SUCCESS)
            } else {
                Err(input_error("choose one of --loc, --topath, --tilde"))
            }
        }
        Command::Bench { config, out } => {
            let config = parse_bench_config(&read_file(&config)?)
                .map_err(|e| input_error(e.to_string()))?;
            let records = run_benchmark(&config);
            write_file(&out, &bench_csv(&records))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn write_instance(inst: &ClassInstance, prefix: &Path) -> Result<(), CliError> {
    write_file(&prefix.with_extension("graph"), &write_graph(&inst.graph))?;
    write_file(&prefix.with_extension("cols"), &write_colouring(&inst.colouring))?;
    write_file(
        &prefix.with_extension("oracle"),
        &format!("oracle {} {}\n", inst.oracle_value, inst.oracle_kind),
    )?;
    Ok(())
}

fn generate(class: &str, params: &[String]) -> Result<ClassInstance, CliError> {
    let arity_error =
        |want: &str| input_error(format!("class `{class}` expects parameters: {want}"));
    let nums: Result<Vec<usize>, _> = params.iter().map(|p| p.parse::<usize>()).collect();
    let int = |i: usize, want: &str| -> Result<usize, CliError> {
        nums.as_ref()
            .ok()
            .and_then(|v| v.get(i).copied())
            .ok_or_else(|| arity_error(want))
    };
    let result = match class {
        "complete" => classes::gen_complete(int(0, "n")?),
        "star" => classes::gen_star(int(0, "n")?),
        "wheel" => classes::gen_wheel(int(0, "n")?),
        "friendship" => classes::gen_friendship(int(0, "k")?),
        "cycle" => classes::gen_cycle(int(0, "n")?),
        "web" => classes::gen_web(int(0, "l r")?, int(1, "l r")?),
        "sunflower" => classes::gen_sunflower(int(0, "d")?),
        "helm" => classes::gen_helm(int(0, "d")?),
        "hypercube" => classes::gen_hypercube(int(0, "d")?),
        "crown" => classes::gen_crown(int(0, "d")?),
        "gear" => classes::gen_gear(int(0, "d")?),
        "knight" => classes::gen_knight(int(0, "d1 d2")?, int(1, "d1 d2")?),
        "edgeless" => classes::gen_edgeless(int(0, "n")?),
        "flower-snark" => classes::gen_flower_snark(int(0, "d")?),
        "petersen" => Ok(classes::gen_petersen()),
        "multipartite" => {
            let sizes = nums.map_err(|_| arity_error("part sizes"))?;
            if sizes.is_empty() {
                return Err(arity_error("part sizes"));
            }
            classes::gen_complete_multipartite(&sizes)
        }
        "bipartite-random" => {
            if params.len() != 4 {
                return Err(arity_error("n1 n2 edge_prob seed"));
            }
            let n1 = params[0].parse().map_err(|_| arity_error("n1 n2 edge_prob seed"))?;
            let n2 = params[1].parse().map_err(|_| arity_error("n1 n2 edge_prob seed"))?;
            let p = params[2].parse().map_err(|_| arity_error("n1 n2 edge_prob seed"))?;
            let seed = params[3].parse().map_err(|_| arity_error("n1 n2 edge_prob seed"))?;
            classes::gen_bipartite_random(n1, n2, p, seed)
        }
        other => return Err(input_error(format!("unknown class `{other}`"))),
    };
    result.map_err(|e| input_error(e.to_string()))
}
