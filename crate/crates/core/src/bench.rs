//! Scale-free random graphs, random colourings, typed-graph ingestion and
//! the benchmark harness comparing the three searches.

use std::collections::HashMap;
use std::fmt;
use std::io::BufRead;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::engine::{
    naive_search_with, priority_search_with, EngineError, LocalityResult, SearchLimits,
    DEFAULT_NAIVE_CAP,
};
use crate::graph::{Colouring, ColourId, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BenchError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Barabasi-Albert preferential-attachment graph: a complete seed graph on
/// `m_attach + 1` vertices, then each new vertex attaches to `m_attach`
/// distinct existing vertices chosen proportionally to current degree
/// (repeated-endpoint urn, duplicate targets rejected within a round).
/// Connected by construction and byte-for-byte deterministic per seed.
pub fn gen_barabasi_albert(n: usize, m_attach: usize, seed: u64) -> Result<Graph, BenchError> {
    if m_attach < 1 {
        return Err(BenchError::InvalidParameter("m_attach must be >= 1".into()));
    }
    if n <= m_attach {
        return Err(BenchError::InvalidParameter(format!(
            "n must exceed m_attach (got n={n}, m_attach={m_attach})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seed_size = m_attach + 1;
    let mut edges: Vec<(usize, usize)> = (0..seed_size)
        .flat_map(|u| (u + 1..seed_size).map(move |v| (u, v)))
        .collect();
    // Urn of edge endpoints: sampling an element is degree-proportional.
    let mut urn: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    let mut chosen: Vec<usize> = Vec::with_capacity(m_attach);
    for v in seed_size..n {
        chosen.clear();
        while chosen.len() < m_attach {
            let t = urn[rng.gen_range(0..urn.len())];
            if !chosen.contains(&t) {
                chosen.push(t);
            }
        }
        for &t in &chosen {
            edges.push((t, v));
            urn.push(t);
            urn.push(v);
        }
    }
    Ok(Graph::new(n, edges).expect("attachment produces simple edges"))
}

/// Uniform random colouring over `1..=l`; vertices of the same colour may
/// be adjacent (validity is not required by the experiments).
///
/// To keep the colour-count axis honest the whole assignment is resampled
/// until all `l` colours occur (only possible when `l <= n`); if that has
/// not happened after a bounded number of attempts, each missing colour is
/// planted on its own distinct vertex.
pub fn random_colouring(g: &Graph, l: usize, seed: u64) -> Colouring {
    assert!(l >= 1, "need at least one colour");
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut colours: Vec<ColourId> = Vec::new();
    for _attempt in 0..1000 {
        colours = (0..n).map(|_| rng.gen_range(1..=l as u32)).collect();
        if l > n {
            break; // full palette unreachable; accept the draw
        }
        let mut seen = vec![false; l + 1];
        colours.iter().for_each(|&c| seen[c as usize] = true);
        if seen[1..].iter().all(|&s| s) {
            break;
        }
    }
    if l <= n {
        let mut seen = vec![false; l + 1];
        colours.iter().for_each(|&c| seen[c as usize] = true);
        let missing: Vec<u32> = (1..=l as u32).filter(|&c| !seen[c as usize]).collect();
        if !missing.is_empty() {
            let mut slots: Vec<usize> = (0..n).collect();
            for &c in &missing {
                let at = rng.gen_range(0..slots.len());
                colours[slots.swap_remove(at)] = c;
            }
        }
    }
    Colouring::new(colours).expect("colour ids start at 1")
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct TypedLoadError {
    pub line: usize,
    pub kind: TypedLoadErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TypedLoadErrorKind {
    #[error("expected `node <id> <type>` or `edge <id> <id>`, got `{0}`")]
    Malformed(String),
    #[error("duplicate node declaration `{0}`")]
    DuplicateNode(String),
    #[error("edge references undeclared node `{0}`")]
    UnknownNode(String),
    #[error("self-loop on node `{0}`")]
    SelfLoop(String),
    #[error("file declares no nodes")]
    Empty,
}

/// A typed graph: vertex types become colours, string ids become dense
/// vertex ids; both symbol tables are kept.
#[derive(Debug, Clone)]
pub struct TypedGraph {
    pub graph: Graph,
    pub colouring: Colouring,
    /// `type_names[i]` is the type behind colour id `i + 1`.
    pub type_names: Vec<String>,
    /// `vertex_names[v]` is the string id behind vertex `v`.
    pub vertex_names: Vec<String>,
}

impl TypedGraph {
    pub fn colour_of_type(&self, name: &str) -> Option<ColourId> {
        self.type_names
            .iter()
            .position(|t| t == name)
            .map(|i| i as ColourId + 1)
    }
}

/// Loads the typed edge-list format: `node <string_id> <type_name>` lines
/// followed by `edge <string_id> <string_id>` lines, in any order as long
/// as nodes precede the edges that use them. Duplicate edges collapse.
pub fn load_typed_graph(reader: impl BufRead) -> Result<TypedGraph, TypedLoadError> {
    let mut vertex_ids: HashMap<String, usize> = HashMap::new();
    let mut vertex_names: Vec<String> = Vec::new();
    let mut type_ids: HashMap<String, u32> = HashMap::new();
    let mut type_names: Vec<String> = Vec::new();
    let mut colours: Vec<ColourId> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| TypedLoadError {
            line: line_no,
            kind: TypedLoadErrorKind::Malformed(e.to_string()),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match fields.as_slice() {
            ["node", id, ty] => {
                if vertex_ids.contains_key(*id) {
                    return Err(TypedLoadError {
                        line: line_no,
                        kind: TypedLoadErrorKind::DuplicateNode(id.to_string()),
                    });
                }
                let colour = *type_ids.entry(ty.to_string()).or_insert_with(|| {
                    type_names.push(ty.to_string());
                    type_names.len() as u32
                });
                vertex_ids.insert(id.to_string(), vertex_names.len());
                vertex_names.push(id.to_string());
                colours.push(colour);
            }
            ["edge", a, b] => {
                let &u = vertex_ids.get(*a).ok_or_else(|| TypedLoadError {
                    line: line_no,
                    kind: TypedLoadErrorKind::UnknownNode(a.to_string()),
                })?;
                let &v = vertex_ids.get(*b).ok_or_else(|| TypedLoadError {
                    line: line_no,
                    kind: TypedLoadErrorKind::UnknownNode(b.to_string()),
                })?;
                if u == v {
                    return Err(TypedLoadError {
                        line: line_no,
                        kind: TypedLoadErrorKind::SelfLoop(a.to_string()),
                    });
                }
                edges.push((u.min(v), u.max(v)));
            }
            _ => {
                return Err(TypedLoadError {
                    line: line_no,
                    kind: TypedLoadErrorKind::Malformed(trimmed.to_string()),
                })
            }
        }
    }
    if vertex_names.is_empty() {
        return Err(TypedLoadError { line: 1, kind: TypedLoadErrorKind::Empty });
    }
    edges.sort_unstable();
    edges.dedup();
    let graph = Graph::new(vertex_names.len(), edges).expect("validated above");
    let colouring = Colouring::new(colours).expect("type colours start at 1");
    Ok(TypedGraph { graph, colouring, type_names, vertex_names })
}

/// The three search algorithms under comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Algorithm {
    Naive,
    Priority,
    PriorityStar,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] =
        [Algorithm::Naive, Algorithm::Priority, Algorithm::PriorityStar];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Naive => "naive",
            Algorithm::Priority => "priority",
            Algorithm::PriorityStar => "priority-star",
        }
    }

    pub fn run(
        self,
        g: &Graph,
        c: &Colouring,
        limits: &SearchLimits,
    ) -> Result<LocalityResult, EngineError> {
        match self {
            Algorithm::Naive => naive_search_with(g, c, limits),
            Algorithm::Priority => priority_search_with(g, c, true, limits),
            Algorithm::PriorityStar => priority_search_with(g, c, false, limits),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "naive" => Ok(Algorithm::Naive),
            "priority" => Ok(Algorithm::Priority),
            "priority-star" | "priority*" => Ok(Algorithm::PriorityStar),
            other => Err(format!("unknown algorithm `{other}`")),
        }
    }
}

/// One benchmark cell: a (graph size, colour count, seed) instance run by
/// one algorithm for one repetition.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub algorithm: Algorithm,
    pub n: usize,
    pub m_attach: usize,
    pub colours: usize,
    pub seed: u64,
    pub rep: usize,
    pub outcome: BenchOutcome,
}

#[derive(Debug, Clone, PartialEq)]
pub enum BenchOutcome {
    Completed {
        min_k: usize,
        wall_time_s: f64,
        expansions: u64,
        evaluations: u64,
    },
    /// The run was not performed (palette above the naive cap).
    Skipped,
    /// The run hit its per-run timeout.
    TimedOut,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ConfigError {
    pub line: usize,
    pub message: String,
}

/// Benchmark axes. Parsed from a line-oriented `key = values` file.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub ns: Vec<usize>,
    pub m_attach: usize,
    pub colours: Vec<usize>,
    pub seeds: Vec<u64>,
    pub reps: usize,
    pub algorithms: Vec<Algorithm>,
    pub timeout: Option<Duration>,
    pub naive_cap: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            ns: vec![1000],
            m_attach: 10,
            colours: vec![5],
            seeds: vec![1],
            reps: 5,
            algorithms: Algorithm::ALL.to_vec(),
            timeout: None,
            naive_cap: DEFAULT_NAIVE_CAP,
        }
    }
}

/// Parses a benchmark config. Recognised keys: `n`, `m_attach`, `colors`,
/// `seeds`, `reps`, `algos`, `timeout_s`, `naive_cap`; values are
/// comma- or space-separated. `#` starts a comment line.
pub fn parse_bench_config(input: &str) -> Result<BenchConfig, ConfigError> {
    let mut config = BenchConfig::default();
    let fail = |line: usize, message: String| ConfigError { line, message };
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = match line.split_once('=') {
            Some((k, r)) => (k.trim(), r.trim()),
            None => return Err(fail(line_no, format!("expected `key = values`, got `{line}`"))),
        };
        let values: Vec<&str> = rest
            .split(|ch: char| ch == ',' || ch.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect();
        if values.is_empty() {
            return Err(fail(line_no, format!("key `{key}` has no values")));
        }
        let parse_usizes = |vs: &[&str]| -> Result<Vec<usize>, ConfigError> {
            vs.iter()
                .map(|v| {
                    v.parse::<usize>()
                        .map_err(|_| fail(line_no, format!("bad integer `{v}`")))
                })
                .collect()
        };
        match key {
            "n" => config.ns = parse_usizes(&values)?,
            "m_attach" => config.m_attach = parse_usizes(&values)?[0],
            "colors" | "colours" => config.colours = parse_usizes(&values)?,
            "seeds" => {
                config.seeds = values
                    .iter()
                    .map(|v| {
                        v.parse::<u64>()
                            .map_err(|_| fail(line_no, format!("bad integer `{v}`")))
                    })
                    .collect::<Result<_, _>>()?
            }
            "reps" => config.reps = parse_usizes(&values)?[0],
            "algos" => {
                config.algorithms = values
                    .iter()
                    .map(|v| Algorithm::from_str(v).map_err(|e| fail(line_no, e)))
                    .collect::<Result<_, _>>()?
            }
            "timeout_s" => {
                let secs: f64 = values[0]
                    .parse()
                    .map_err(|_| fail(line_no, format!("bad number `{}`", values[0])))?;
                config.timeout = Some(Duration::from_secs_f64(secs));
            }
            "naive_cap" => config.naive_cap = parse_usizes(&values)?[0],
            other => return Err(fail(line_no, format!("unknown key `{other}`"))),
        }
    }
    Ok(config)
}

/// Runs every (n, colours, seed, algorithm, rep) cell. Graph generation
/// and colouring are excluded from the timed section; only the search is
/// timed. Naive runs above the palette cap are emitted as skipped records
/// without being executed; timeouts are recorded, not fatal.
pub fn run_benchmark(config: &BenchConfig) -> Vec<BenchRecord> {
    let mut records = Vec::new();
    for &n in &config.ns {
        for &colours in &config.colours {
            for &seed in &config.seeds {
                let graph = match gen_barabasi_albert(n, config.m_attach, seed) {
                    Ok(g) => g,
                    Err(_) => continue,
                };
                let colouring = random_colouring(&graph, colours, seed);
                for &algorithm in &config.algorithms {
                    for rep in 0..config.reps {
                        let record = BenchRecord {
                            algorithm,
                            n,
                            m_attach: config.m_attach,
                            colours,
                            seed,
                            rep,
                            outcome: run_cell(algorithm, &graph, &colouring, config),
                        };
                        records.push(record);
                    }
                }
            }
        }
    }
    records
}

fn run_cell(
    algorithm: Algorithm,
    graph: &Graph,
    colouring: &Colouring,
    config: &BenchConfig,
) -> BenchOutcome {
    if algorithm == Algorithm::Naive && colouring.palette().len() > config.naive_cap {
        return BenchOutcome::Skipped;
    }
    let limits = SearchLimits {
        timeout: config.timeout,
        naive_cap: config.naive_cap,
        force_naive: false,
    };
    let start = Instant::now();
    match algorithm.run(graph, colouring, &limits) {
        Ok(result) => BenchOutcome::Completed {
            min_k: result.min_k,
            wall_time_s: start.elapsed().as_secs_f64(),
            expansions: result.expansions,
            evaluations: result.evaluations,
        },
        Err(EngineError::Timeout) => BenchOutcome::TimedOut,
        Err(EngineError::PaletteTooLarge { .. }) => BenchOutcome::Skipped,
        Err(e) => unreachable!("benchmark inputs are well-formed: {e}"),
    }
}

/// RFC-4180 CSV with the pinned header, UTF-8, LF endings, rows sorted by
/// (algorithm, n, colors, seed, rep). Skipped and timed-out runs carry the
/// marker in the `min_k` column and empty numeric columns.
pub fn bench_csv(records: &[BenchRecord]) -> String {
    let mut rows: Vec<&BenchRecord> = records.iter().collect();
    rows.sort_by_key(|r| (r.algorithm, r.n, r.colours, r.seed, r.rep));
    let mut out = String::from(
        "algorithm,n,m_attach,colors,seed,rep,min_k,wall_time_s,expansions,evaluations\n",
    );
    for r in rows {
        let prefix = format!(
            "{},{},{},{},{},{}",
            r.algorithm, r.n, r.m_attach, r.colours, r.seed, r.rep
        );
        let tail = match &r.outcome {
            BenchOutcome::Completed { min_k, wall_time_s, expansions, evaluations } => {
                format!("{},{:.6},{},{}", min_k, wall_time_s, expansions, evaluations)
            }
            BenchOutcome::Skipped => "skipped,,,".to_string(),
            BenchOutcome::TimedOut => "timeout,,,".to_string(),
        };
        out.push_str(&prefix);
        out.push(',');
        out.push_str(&tail);
        out.push('\n');
    }
    out
}
