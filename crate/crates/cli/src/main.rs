use std::collections::BTreeSet;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};
use num_bigint::{BigUint, RandBigInt};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use planar_rank::embedding::{EmbeddingJson, PlanarEmbedding};
use planar_rank::graph::Graph;
use planar_rank::oracle::enumerate_disconnected;
use planar_rank::ranking::Ranker;
use planar_rank::Error;

/// Rank, unrank, count, sample and enumerate the planar embeddings of a
/// planar graph on the sphere.
#[derive(Parser)]
#[command(name = "planar-rank", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the rank of an embedding.
    Rank {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        embedding: PathBuf,
        /// Also print the tuple and its bounds as JSON.
        #[arg(long)]
        tuple: bool,
    },
    /// Print the embedding with a given rank.
    Unrank {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        rank: String,
        /// Write the embedding here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the number of embeddings.
    Count {
        #[arg(short, long)]
        graph: PathBuf,
    },
    /// Print uniformly random embeddings, one JSON object per line.
    Sample {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(short, default_value_t = 1)]
        k: usize,
    },
    /// Print consecutive embeddings with their ranks, one per line.
    Enumerate {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(long, default_value = "0")]
        from: String,
        #[arg(long, default_value_t = 100)]
        limit: usize,
    },
    /// Cross-check ranking against brute force.
    Verify {
        #[arg(short, long)]
        graph: PathBuf,
        /// Largest vertex count handed to the brute-force oracle.
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
    /// Dump the block-cut tree and SPQR trees.
    Decompose {
        #[arg(short, long)]
        graph: PathBuf,
    },
}

#[derive(Debug)]
struct Mismatch(String);

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "verification failed: {}", self.0)
    }
}

impl std::error::Error for Mismatch {}

#[derive(Serialize)]
struct TupleJson {
    rank: String,
    bounds: Vec<String>,
    values: Vec<String>,
}

#[derive(Serialize)]
struct Ranked {
    rank: String,
    embedding: EmbeddingJson,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| anyhow!(Error::Malformed(format!("{}: {e}", path.display()))))
}

fn ranker(path: &Path) -> Result<Ranker> {
    let g = Graph::from_json_str(&read(path)?).with_context(|| path.display().to_string())?;
    Ok(Ranker::new(g)?)
}

fn decimal(s: &str) -> Result<BigUint> {
    s.parse::<BigUint>().map_err(|_| anyhow!(Error::Malformed(format!("not a decimal natural: {s:?}"))))
}

fn strings(xs: &[BigUint]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn run(cli: Cli, out: &mut impl Write) -> Result<()> {
    match cli.command {
        Command::Rank { graph, embedding, tuple } => {
            let r = ranker(&graph)?;
            let e = PlanarEmbedding::from_json_str(&read(&embedding)?).with_context(|| embedding.display().to_string())?;
            let t = r.phi(&e)?;
            let rank = r.rank(&e)?;
            writeln!(out, "{rank}")?;
            if tuple {
                let j = TupleJson {
                    rank: rank.to_string(),
                    bounds: strings(r.bounds()),
                    values: strings(&t),
                };
                writeln!(out, "{}", serde_json::to_string(&j)?)?;
            }
        }
        Command::Unrank { graph, rank, output } => {
            let r = ranker(&graph)?;
            let e = r.unrank(&decimal(&rank)?)?;
            let text = e.to_json_string();
            match output {
                Some(p) => fs::write(&p, text + "\n").with_context(|| p.display().to_string())?,
                None => writeln!(out, "{text}")?,
            }
        }
        Command::Count { graph } => writeln!(out, "{}", ranker(&graph)?.count())?,
        Command::Sample { graph, seed, k } => {
            for e in ranker(&graph)?.sample_seeded(seed, k)? {
                writeln!(out, "{}", e.to_json_string())?;
            }
        }
        Command::Enumerate { graph, from, limit } => {
            let r = ranker(&graph)?;
            for item in r.enumerate(&decimal(&from)?, limit)? {
                let (rank, e) = item?;
                let line = Ranked {
                    rank: rank.to_string(),
                    embedding: e.to_json(),
                };
                writeln!(out, "{}", serde_json::to_string(&line)?)?;
            }
        }
        Command::Verify { graph, max_n } => verify(&ranker(&graph)?, max_n, out)?,
        Command::Decompose { graph } => write!(out, "{}", ranker(&graph)?.decompose())?,
    }
    Ok(())
}

/// Round trips on up to 1000 ranks, then set equality with the oracle when
/// the graph is small enough.
fn verify(r: &Ranker, max_n: usize, out: &mut impl Write) -> Result<()> {
    let count = r.count();
    let ranks: Vec<BigUint> = if count <= BigUint::from(1000u32) {
        let mut all = Vec::new();
        let mut x = BigUint::default();
        while x < count {
            all.push(x.clone());
            x += 1u32;
        }
        all
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        (0..1000).map(|_| rng.gen_biguint_below(&count)).collect()
    };
    for x in &ranks {
        let e = r.unrank(x)?;
        if let Err(err) = e.validate_for(r.graph()) {
            return Err(Mismatch(format!("unrank({x}) is invalid: {err}")).into());
        }
        let back = r.rank(&e)?;
        if &back != x {
            return Err(Mismatch(format!("rank(unrank({x})) = {back}")).into());
        }
    }
    writeln!(out, "roundtrip ok: {} of {count} ranks", ranks.len())?;
    if r.graph().n() > max_n {
        writeln!(out, "oracle skipped: n = {} exceeds --max-n {max_n}", r.graph().n())?;
        return Ok(());
    }
    let oracle = match enumerate_disconnected(r.graph()) {
        Ok(set) => set,
        Err(Error::TooLarge(what)) => {
            writeln!(out, "oracle skipped: {what}")?;
            return Ok(());
        }
        Err(e) => return Err(e.into()),
    };
    if BigUint::from(oracle.len()) != count {
        return Err(Mismatch(format!("count {count}, oracle {}", oracle.len())).into());
    }
    let mut ours = BTreeSet::new();
    for item in r.enumerate(&BigUint::default(), usize::MAX)? {
        ours.insert(item?.1.to_json_string());
    }
    if ours != oracle {
        let missing = oracle.difference(&ours).count();
        return Err(Mismatch(format!("{missing} oracle embeddings never produced")).into());
    }
    writeln!(out, "oracle ok: {} embeddings", oracle.len())?;
    Ok(())
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<Mismatch>().is_some() {
        return 4;
    }
    match e.downcast_ref::<Error>() {
        Some(Error::NotPlanar) => 2,
        Some(Error::RankOutOfRange { .. }) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    // usage errors are malformed input; clap's own code 2 means non-planar here
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|()| out.flush().map_err(Into::into));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
