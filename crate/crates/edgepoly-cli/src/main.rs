//! Command-line frontend: reads edge-list files, dispatches to the
//! library, and emits one JSON report per invocation on stdout.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use edgepoly::facets::{self, FacetOptions};
use edgepoly::graph::{self, Graph};
use edgepoly::oracle::{self, OracleOptions};
use edgepoly::{neighborly, randexp, skeleton, walks, Error};

use report::Report;

#[derive(Parser)]
#[command(name = "edgepoly", version, about = "Exact edge-polytope analysis")]
struct Cli {
    /// Indented human-readable output instead of one JSON line.
    #[arg(long, global = true)]
    pretty: bool,
    /// Worker thread cap (falls back to EDGEPOLY_THREADS, then all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dimension and skeleton counts of the edge polytope.
    Analyze { file: PathBuf },
    /// Facet certificates, bound checks, optional geometric cross-check.
    Facets {
        file: PathBuf,
        /// Raise the vertex-count cap for the independent-set search.
        #[arg(long)]
        max_n: Option<usize>,
        /// Cross-check against the brute-force geometric enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// k-neighborliness verdict with a forbidden-subgraph witness.
    Neighborly {
        file: PathBuf,
        /// Check this k only; otherwise report the maximum.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Exact geometric face test for a set of edges.
    Oracle {
        file: PathBuf,
        /// Comma-separated edges, e.g. "1-2,3-4".
        #[arg(long)]
        face: String,
    },
    /// Monte-Carlo f1 experiment on G(n,p).
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Non-returning walk statistics, optional path counts and discrepancy.
    Walks {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        /// Count simple k-paths between these two vertices.
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        paths: Option<Vec<usize>>,
        /// Two vertex sets "1,2,3;4,5" for the discrepancy statistic.
        #[arg(long)]
        sets: Option<String>,
    },
    /// Write a fixture graph to a file.
    Generate {
        /// complete | complete-bipartite | cycle | windmill | gnp
        #[arg(long)]
        kind: String,
        /// Numeric parameters of the kind (e.g. `--kind gnp 12 0.5 7`).
        params: Vec<String>,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help/version are not errors
            use clap::error::ErrorKind::*;
            if matches!(e.kind(), DisplayHelp | DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    };
    if let Some(threads) = cli.threads.or_else(|| {
        std::env::var("EDGEPOLY_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    }) {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(&cli.cmd) {
        Ok(report) => {
            println!("{}", report.render(cli.pretty));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Validation(_) => 2,
                Error::Domain(_) => 3,
                Error::Resource(_) => 4,
            };
            ExitCode::from(code)
        }
    }
}

fn load(file: &PathBuf) -> Result<Graph, Error> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::validation(format!("cannot read {}: {e}", file.display())))?;
    graph::parse_edge_list(&text)
}

fn run(cmd: &Cmd) -> Result<Report, Error> {
    match cmd {
        Cmd::Analyze { file } => {
            let g = load(file)?;
            let s = skeleton::summary(&g)?;
            Ok(Report::analyze(file, &s))
        }
        Cmd::Facets {
            file,
            max_n,
            oracle: with_oracle,
        } => {
            let mut warnings = Vec::new();
            let g = load(file)?;
            let defaults = FacetOptions::default();
            let opts = match max_n {
                Some(m) => {
                    if *m > defaults.max_n {
                        warnings.push(format!(
                            "vertex cap raised from {} to {m}",
                            defaults.max_n
                        ));
                    }
                    FacetOptions {
                        max_n: *m,
                        override_cap: true,
                    }
                }
                None => defaults,
            };
            let out = facets::enumerate_facets(&g, &opts)?;
            let bounds = facets::facet_count_bounds_check(&g, &opts)?;
            warnings.extend(out.merge_notes.iter().cloned());
            let oracle_match = if *with_oracle {
                let pts = oracle::polytope_vertices(&g)?;
                let brute = oracle::brute_facets(&pts, &OracleOptions::default())?;
                Some(same_facets(&g, &out.facets, &brute))
            } else {
                None
            };
            Ok(Report::facets(file, *max_n, *with_oracle, &out.facets, &bounds, oracle_match, warnings))
        }
        Cmd::Neighborly { file, k } => {
            let g = load(file)?;
            match k {
                Some(k) => {
                    let verdict = neighborly::is_k_neighborly(&g, *k)?;
                    let witness = neighborly::find_forbidden(&g, *k)?;
                    Ok(Report::neighborly_at_k(file, *k, verdict, witness.as_ref()))
                }
                None => {
                    let v = neighborly::max_neighborliness(&g)?;
                    Ok(Report::neighborly_max(file, v))
                }
            }
        }
        Cmd::Oracle { file, face } => {
            let g = load(file)?;
            let edges = parse_face(face)?;
            let verdict = oracle::is_face(&g, &edges)?;
            Ok(Report::oracle(file, face, verdict))
        }
        Cmd::Random { n, p, trials, seed } => {
            let r = randexp::estimate_f1_mc(*n, *p, *trials, *seed)?;
            Ok(Report::random(&r))
        }
        Cmd::Walks {
            file,
            k,
            paths,
            sets,
        } => {
            let g = load(file)?;
            let stats = walks::non_returning_walks(&g, *k)?;
            let path_count = match paths {
                Some(uv) => Some((uv[0], uv[1], walks::count_k_paths(&g, uv[0], uv[1], *k)?)),
                None => None,
            };
            let disc = match sets {
                Some(spec) => {
                    let (s, t) = parse_sets(spec)?;
                    Some(walks::discrepancy(&g, &s, &t)?)
                }
                None => None,
            };
            Ok(Report::walks(file, &stats, path_count, disc.as_ref()))
        }
        Cmd::Generate { kind, params, out } => {
            let g = build_generated(kind, params)?;
            std::fs::write(out, graph::to_edge_list(&g))
                .map_err(|e| Error::validation(format!("cannot write {}: {e}", out.display())))?;
            Ok(Report::generate(kind, params, out, &g))
        }
    }
}

fn build_generated(kind: &str, params: &[String]) -> Result<Graph, Error> {
    let need = |count: usize| -> Result<Vec<u64>, Error> {
        if params.len() != count {
            return Err(Error::validation(format!(
                "kind '{kind}' takes {count} parameter(s), got {}",
                params.len()
            )));
        }
        params
            .iter()
            .map(|p| {
                p.parse::<u64>()
                    .map_err(|_| Error::validation(format!("bad integer parameter '{p}'")))
            })
            .collect()
    };
    match kind {
        "complete" => graph::complete(need(1)?[0] as usize),
        "complete-bipartite" => {
            let v = need(2)?;
            graph::complete_bipartite(v[0] as usize, v[1] as usize)
        }
        "cycle" => graph::cycle(need(1)?[0] as usize),
        "windmill" => graph::windmill(need(1)?[0] as usize),
        "gnp" => {
            if params.len() != 3 {
                return Err(Error::validation("kind 'gnp' takes n, p, seed"));
            }
            let n: usize = params[0]
                .parse()
                .map_err(|_| Error::validation("bad n"))?;
            let p: f64 = params[1]
                .parse()
                .map_err(|_| Error::validation("bad p"))?;
            let seed: u64 = params[2]
                .parse()
                .map_err(|_| Error::validation("bad seed"))?;
            graph::gnp(n, p, seed)
        }
        other => Err(Error::validation(format!("unknown kind '{other}'"))),
    }
}

/// "1-2,3-4" -> [(1,2), (3,4)]
fn parse_face(spec: &str) -> Result<Vec<(usize, usize)>, Error> {
    spec.split(',')
        .map(|part| {
            let (a, b) = part
                .trim()
                .split_once('-')
                .ok_or_else(|| Error::validation(format!("bad edge '{part}', expected u-v")))?;
            let u = a
                .trim()
                .parse()
                .map_err(|_| Error::validation(format!("bad vertex '{a}'")))?;
            let v = b
                .trim()
                .parse()
                .map_err(|_| Error::validation(format!("bad vertex '{b}'")))?;
            Ok((u, v))
        })
        .collect()
}

/// "1,2,3;4,5" -> ([1,2,3], [4,5])
fn parse_sets(spec: &str) -> Result<(Vec<usize>, Vec<usize>), Error> {
    let (s, t) = spec
        .split_once(';')
        .ok_or_else(|| Error::validation("expected two sets separated by ';'"))?;
    let parse_one = |side: &str| -> Result<Vec<usize>, Error> {
        side.split(',')
            .map(|v| {
                v.trim()
                    .parse()
                    .map_err(|_| Error::validation(format!("bad vertex '{v}'")))
            })
            .collect()
    };
    Ok((parse_one(s)?, parse_one(t)?))
}

/// Do the combinatorial certificates and the geometric hyperplanes cut
/// the same facets? Compared as sets of tight point-index sets.
fn same_facets(
    g: &Graph,
    certs: &[facets::FacetCertificate],
    brute: &[oracle::Hyperplane],
) -> bool {
    let edges: Vec<_> = g.edges().collect();
    let mut fast: Vec<Vec<usize>> = certs
        .iter()
        .map(|f| {
            let mut v: Vec<usize> = f
                .tight_edges
                .iter()
                .filter_map(|e| edges.iter().position(|x| x == e))
                .collect();
            v.sort_unstable();
            v
        })
        .collect();
    let mut slow: Vec<Vec<usize>> = brute
        .iter()
        .map(|h| {
            let mut v = h.tight_set.clone();
            v.sort_unstable();
            v
        })
        .collect();
    fast.sort();
    slow.sort();
    fast == slow
}
