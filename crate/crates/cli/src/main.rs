//! Command-line front end: exact counts, verification sweeps, censuses,
//! uniform tree sampling, and timing comparisons for complete
//! tripartite graphs.
//!
//! Exit codes: 0 on success, 1 when a verification sweep finds a
//! mismatch, 2 on invalid arguments or resource limits. All big values
//! are emitted as decimal strings.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use triforest_core::{
    build_complete_multipartite, enumerate_constructions_for_roots, exhaustive_census,
    forest_count_r_in_part_oracle, forest_count_r_roots_in_part, forest_count_via_sum,
    rooted_tree_count_root_in_part, spanning_tree_count_kirchhoff, total_rooted_forest_count,
    total_rooted_forest_oracle, total_via_sum, tree_count_via_sum, tripartite_tree_count, BigCount,
    LabeledGraph, PartSizes, TreeSampler, DEFAULT_CENSUS_EDGE_LIMIT,
    DEFAULT_CONSTRUCTION_VERTEX_LIMIT,
};

const CENSUS_ENV_VAR: &str = "FOREST_CENSUS_MAX_EDGES";

#[derive(Parser)]
#[command(
    name = "triforest",
    version,
    about = "Exact spanning-tree and rooted-forest counts for complete tripartite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one exact count.
    Count {
        #[arg(value_enum)]
        quantity: Quantity,
        m: u32,
        n: u32,
        p: u32,
        /// Number of third-part roots (forests-r only).
        #[arg(long)]
        r: Option<u32>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Sweep part sizes and cross-check formulas against each other and
    /// the selected oracles; print mismatch rows.
    Verify {
        max_m: u32,
        max_n: u32,
        max_p: u32,
        /// Comma-separated oracle set.
        #[arg(
            long,
            value_enum,
            value_delimiter = ',',
            default_value = "kirchhoff,minors,detLI"
        )]
        oracles: Vec<Oracle>,
        /// Census edge-count limit; beats the environment variable.
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Tabulate every rooted spanning forest by root profile (l, k, r).
    Census {
        m: u32,
        n: u32,
        p: u32,
        /// Census edge-count limit; beats the environment variable.
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Draw uniform random spanning trees, printed as parent maps.
    Sample {
        m: u32,
        n: u32,
        p: u32,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Time the closed form against the determinant oracle on
    /// K_{s,s,s}; emits CSV rows size,method,nanoseconds.
    Bench { max_size: u32, repetitions: u32 },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Quantity {
    Trees,
    RootedTrees,
    ForestsR,
    TotalForests,
}

impl Quantity {
    fn name(self) -> &'static str {
        match self {
            Quantity::Trees => "trees",
            Quantity::RootedTrees => "rooted-trees",
            Quantity::ForestsR => "forests-r",
            Quantity::TotalForests => "total-forests",
        }
    }
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Oracle {
    /// Spanning trees against the Laplacian cofactor.
    Kirchhoff,
    /// r-rooted forests against root-set minor sums.
    Minors,
    /// Total rooted forests against det(L+I).
    #[value(name = "detLI", alias = "detli")]
    DetLi,
    /// Census totals and slices (skipped over the edge limit).
    Census,
    /// Exhaustive plan replay (skipped over the vertex limit).
    Construction,
}

#[derive(Serialize, Deserialize)]
struct OutputRecord {
    quantity: String,
    m: u32,
    n: u32,
    p: u32,
    r: Option<u32>,
    value: String,
    oracle_value: Option<String>,
    #[serde(rename = "match")]
    matches: Option<bool>,
}

impl OutputRecord {
    const CSV_HEADER: &'static str = "quantity,m,n,p,r,value,oracle_value,match";

    fn plain(&self) -> String {
        let mut s = format!("{} m={} n={} p={}", self.quantity, self.m, self.n, self.p);
        if let Some(r) = self.r {
            s.push_str(&format!(" r={r}"));
        }
        s.push_str(&format!(" value={}", self.value));
        if let Some(o) = &self.oracle_value {
            s.push_str(&format!(" oracle={o}"));
        }
        if let Some(mt) = self.matches {
            s.push_str(&format!(" match={mt}"));
        }
        s
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.quantity,
            self.m,
            self.n,
            self.p,
            self.r.map(|r| r.to_string()).unwrap_or_default(),
            self.value,
            self.oracle_value.clone().unwrap_or_default(),
            self.matches.map(|b| b.to_string()).unwrap_or_default(),
        )
    }
}

fn emit_records(format: Format, records: &[OutputRecord]) {
    match format {
        Format::Plain => {
            for r in records {
                println!("{}", r.plain());
            }
        }
        Format::Json => {
            for r in records {
                println!("{}", serde_json::to_string(r).expect("record serializes"));
            }
        }
        Format::Csv => {
            println!("{}", OutputRecord::CSV_HEADER);
            for r in records {
                println!("{}", r.csv_row());
            }
        }
    }
}

fn main() -> ExitCode {
    // Rust ignores SIGPIPE, which turns `triforest ... | head` into a
    // broken-pipe panic; restore the default disposition.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Count {
            quantity,
            m,
            n,
            p,
            r,
            format,
        } => cmd_count(quantity, m, n, p, r, format),
        Command::Verify {
            max_m,
            max_n,
            max_p,
            oracles,
            max_edges,
            format,
        } => cmd_verify(max_m, max_n, max_p, &oracles, max_edges, format),
        Command::Census {
            m,
            n,
            p,
            max_edges,
            format,
        } => cmd_census(m, n, p, max_edges, format),
        Command::Sample {
            m,
            n,
            p,
            count,
            seed,
            format,
        } => cmd_sample(m, n, p, count, seed, format),
        Command::Bench {
            max_size,
            repetitions,
        } => cmd_bench(max_size, repetitions),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn resolve_census_limit(flag: Option<usize>) -> Result<usize, String> {
    if let Some(limit) = flag {
        return Ok(limit);
    }
    match std::env::var(CENSUS_ENV_VAR) {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| format!("invalid {CENSUS_ENV_VAR} value {raw:?}")),
        Err(_) => Ok(DEFAULT_CENSUS_EDGE_LIMIT),
    }
}

fn cmd_count(
    quantity: Quantity,
    m: u32,
    n: u32,
    p: u32,
    r: Option<u32>,
    format: Format,
) -> Result<ExitCode, String> {
    let parts = PartSizes::new(m, n, p);
    if quantity != Quantity::ForestsR && r.is_some() {
        return Err(format!("--r does not apply to {}", quantity.name()));
    }
    let value = match quantity {
        Quantity::Trees => tripartite_tree_count(parts),
        Quantity::RootedTrees => rooted_tree_count_root_in_part(parts),
        Quantity::ForestsR => {
            let r = r.ok_or("forests-r requires --r")?;
            forest_count_r_roots_in_part(parts, r)
        }
        Quantity::TotalForests => total_rooted_forest_count(parts),
    }
    .map_err(|e| e.to_string())?;
    emit_records(
        format,
        &[OutputRecord {
            quantity: quantity.name().into(),
            m,
            n,
            p,
            r,
            value: value.to_string(),
            oracle_value: None,
            matches: None,
        }],
    );
    Ok(ExitCode::SUCCESS)
}

struct Sweep {
    comparisons: usize,
    mismatches: Vec<OutputRecord>,
}

impl Sweep {
    fn compare(
        &mut self,
        quantity: &str,
        parts: PartSizes,
        r: Option<u32>,
        value: &BigCount,
        oracle: &BigCount,
    ) {
        self.comparisons += 1;
        if value != oracle {
            self.mismatches.push(OutputRecord {
                quantity: quantity.into(),
                m: parts.m,
                n: parts.n,
                p: parts.p,
                r,
                value: value.to_string(),
                oracle_value: Some(oracle.to_string()),
                matches: Some(false),
            });
        }
    }
}

fn verify_tuple(
    sweep: &mut Sweep,
    parts: PartSizes,
    graph: &LabeledGraph,
    oracles: &[Oracle],
    census_limit: usize,
) -> Result<(), String> {
    let fail = |e: triforest_core::Error| e.to_string();
    let trees = tripartite_tree_count(parts).map_err(fail)?;
    let total = total_rooted_forest_count(parts).map_err(fail)?;
    let forests: Vec<BigCount> = (1..=parts.p)
        .map(|r| forest_count_r_roots_in_part(parts, r))
        .collect::<Result<_, _>>()
        .map_err(fail)?;

    sweep.compare(
        "trees-vs-sum",
        parts,
        None,
        &trees,
        &tree_count_via_sum(parts).map_err(fail)?,
    );
    sweep.compare(
        "total-vs-sum",
        parts,
        None,
        &total,
        &total_via_sum(parts).map_err(fail)?,
    );
    for r in 1..=parts.p {
        sweep.compare(
            "forests-vs-sum",
            parts,
            Some(r),
            &forests[r as usize - 1],
            &forest_count_via_sum(parts, r).map_err(fail)?,
        );
    }

    if oracles.contains(&Oracle::Kirchhoff) {
        sweep.compare(
            "trees-vs-kirchhoff",
            parts,
            None,
            &trees,
            &spanning_tree_count_kirchhoff(graph),
        );
    }
    if oracles.contains(&Oracle::Minors) {
        for r in 1..=parts.p {
            sweep.compare(
                "forests-vs-minors",
                parts,
                Some(r),
                &forests[r as usize - 1],
                &forest_count_r_in_part_oracle(graph, r).map_err(fail)?,
            );
        }
    }
    if oracles.contains(&Oracle::DetLi) {
        sweep.compare(
            "total-vs-detLI",
            parts,
            None,
            &total,
            &total_rooted_forest_oracle(graph),
        );
    }
    if oracles.contains(&Oracle::Census) {
        if graph.edges().len() <= census_limit {
            let census = exhaustive_census(graph, census_limit).map_err(fail)?;
            sweep.compare("total-vs-census", parts, None, &total, &census.total());
            for r in 1..=parts.p {
                sweep.compare(
                    "forests-vs-census",
                    parts,
                    Some(r),
                    &forests[r as usize - 1],
                    &census.third_part_only(r),
                );
            }
        } else {
            eprintln!(
                "warning: skipping census at {} {} {}: {} edges over limit {census_limit}",
                parts.m,
                parts.n,
                parts.p,
                graph.edges().len()
            );
        }
    }
    if oracles.contains(&Oracle::Construction) {
        if parts.total() <= DEFAULT_CONSTRUCTION_VERTEX_LIMIT {
            let base = (parts.m + parts.n) as usize;
            for r in 1..=parts.p {
                let mut across = BigCount::from(0u32);
                for mask in 0u32..1 << parts.p {
                    if mask.count_ones() != r {
                        continue;
                    }
                    let p_roots: BTreeSet<usize> = (0..parts.p)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| base + i as usize)
                        .collect();
                    across += enumerate_constructions_for_roots(
                        parts,
                        &p_roots,
                        DEFAULT_CONSTRUCTION_VERTEX_LIMIT,
                    )
                    .map_err(fail)?
                    .count();
                }
                sweep.compare(
                    "forests-vs-construction",
                    parts,
                    Some(r),
                    &forests[r as usize - 1],
                    &across,
                );
            }
        } else {
            eprintln!(
                "warning: skipping construction at {} {} {}: {} vertices over limit {}",
                parts.m,
                parts.n,
                parts.p,
                parts.total(),
                DEFAULT_CONSTRUCTION_VERTEX_LIMIT
            );
        }
    }
    Ok(())
}

fn cmd_verify(
    max_m: u32,
    max_n: u32,
    max_p: u32,
    oracles: &[Oracle],
    max_edges: Option<usize>,
    format: Format,
) -> Result<ExitCode, String> {
    if max_m == 0 || max_n == 0 || max_p == 0 {
        return Err("verify bounds must be at least 1".into());
    }
    let census_limit = resolve_census_limit(max_edges)?;
    let mut sweep = Sweep {
        comparisons: 0,
        mismatches: Vec::new(),
    };
    let mut tuples = 0usize;
    for m in 1..=max_m {
        for n in 1..=max_n {
            for p in 1..=max_p {
                let parts = PartSizes::new(m, n, p);
                let graph = build_complete_multipartite(parts).map_err(|e| e.to_string())?;
                verify_tuple(&mut sweep, parts, &graph, oracles, census_limit)?;
                tuples += 1;
            }
        }
    }
    emit_records(format, &sweep.mismatches);
    eprintln!(
        "verified {tuples} tuples, {} comparisons, {} mismatches",
        sweep.comparisons,
        sweep.mismatches.len()
    );
    Ok(if sweep.mismatches.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[derive(Serialize)]
struct CensusRow {
    l: u32,
    k: u32,
    r: u32,
    count: String,
}

#[derive(Serialize)]
struct CensusReport {
    m: u32,
    n: u32,
    p: u32,
    profiles: Vec<CensusRow>,
    total: String,
}

fn cmd_census(
    m: u32,
    n: u32,
    p: u32,
    max_edges: Option<usize>,
    format: Format,
) -> Result<ExitCode, String> {
    let parts = PartSizes::new(m, n, p);
    let graph = build_complete_multipartite(parts).map_err(|e| e.to_string())?;
    let limit = resolve_census_limit(max_edges)?;
    let census = exhaustive_census(&graph, limit).map_err(|e| e.to_string())?;
    let total = census.total().to_string();
    match format {
        Format::Plain => {
            for (profile, count) in census.iter() {
                println!(
                    "l={} k={} r={} count={count}",
                    profile.l, profile.k, profile.r
                );
            }
            println!("total = {total}");
        }
        Format::Json => {
            let report = CensusReport {
                m,
                n,
                p,
                profiles: census
                    .iter()
                    .map(|(profile, count)| CensusRow {
                        l: profile.l,
                        k: profile.k,
                        r: profile.r,
                        count: count.to_string(),
                    })
                    .collect(),
                total,
            };
            println!(
                "{}",
                serde_json::to_string(&report).expect("report serializes")
            );
        }
        Format::Csv => {
            println!("l,k,r,count");
            for (profile, count) in census.iter() {
                println!("{},{},{},{count}", profile.l, profile.k, profile.r);
            }
            println!("total,,,{total}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SampleReport {
    m: u32,
    n: u32,
    p: u32,
    seed: u64,
    trees: Vec<Vec<Option<usize>>>,
}

fn cmd_sample(
    m: u32,
    n: u32,
    p: u32,
    count: usize,
    seed: u64,
    format: Format,
) -> Result<ExitCode, String> {
    let parts = PartSizes::new(m, n, p);
    let graph = build_complete_multipartite(parts).map_err(|e| e.to_string())?;
    let mut sampler = TreeSampler::new(seed);
    let mut trees = Vec::with_capacity(count);
    for _ in 0..count {
        trees.push(sampler.sample(&graph).map_err(|e| e.to_string())?.parent);
    }
    match format {
        Format::Plain => {
            for parent in &trees {
                let cells: Vec<String> = parent
                    .iter()
                    .map(|q| q.map_or_else(|| "-".into(), |q| q.to_string()))
                    .collect();
                println!("{}", cells.join(" "));
            }
        }
        Format::Json => {
            let report = SampleReport {
                m,
                n,
                p,
                seed,
                trees,
            };
            println!(
                "{}",
                serde_json::to_string(&report).expect("report serializes")
            );
        }
        Format::Csv => {
            println!("sample,vertex,parent");
            for (i, parent) in trees.iter().enumerate() {
                for (v, q) in parent.iter().enumerate() {
                    let q = q.map(|q| q.to_string()).unwrap_or_default();
                    println!("{i},{v},{q}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(max_size: u32, repetitions: u32) -> Result<ExitCode, String> {
    if max_size == 0 {
        return Err("max_size must be at least 1".into());
    }
    if repetitions == 0 {
        return Err("repetitions must be at least 1".into());
    }
    let mut sizes = Vec::new();
    let mut s = 1;
    while s < max_size {
        sizes.push(s);
        s *= 2;
    }
    sizes.push(max_size);

    let time_min = |reps: u32, mut f: Box<dyn FnMut()>| -> u128 {
        (0..reps)
            .map(|_| {
                let start = Instant::now();
                f();
                start.elapsed().as_nanos()
            })
            .min()
            .expect("at least one repetition")
    };

    println!("size,method,nanoseconds");
    for size in sizes {
        let parts = PartSizes::new(size, size, size);
        let graph = build_complete_multipartite(parts).map_err(|e| e.to_string())?;
        let closed = time_min(
            repetitions,
            Box::new(move || {
                std::hint::black_box(tripartite_tree_count(parts).expect("valid sizes"));
            }),
        );
        println!("{size},closed-form,{closed}");
        let det = time_min(
            repetitions,
            Box::new(move || {
                std::hint::black_box(spanning_tree_count_kirchhoff(&graph));
            }),
        );
        println!("{size},determinant,{det}");
    }
    Ok(ExitCode::SUCCESS)
}
