//! `hansen`: count, classify and verify faces of Hansen polytopes of split
//! graphs from the command line.
//!
//! Exit codes: 0 pass, 1 usage or parse error, 2 identity failure,
//! 3 face budget exceeded.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use hansen_core::corpus::{split_graphs_up_to_iso, threshold_sequences};
use hansen_core::io::{parse_graph, GraphJson, GraphSpec};
use hansen_core::*;
use rayon::prelude::*;

use report::{RunReport, SweepSummary};

/// Largest node count for exhaustive sweeps.
const SWEEP_MAX_NODES: usize = 7;

#[derive(Parser, Debug)]
#[command(name = "hansen", version, about = "Faces of Hansen polytopes of split graphs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Emit JSON reports, one per line.
    #[arg(long, global = true)]
    json: bool,
    /// Build facets from cliques even when the graph is not split.
    #[arg(long, global = true)]
    assume_perfect: bool,
    /// Abort face enumeration after this many faces.
    #[arg(long, global = true, default_value_t = DEFAULT_FACE_BUDGET)]
    budget: usize,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Also compute the f-vector.
    #[arg(long, global = true)]
    f_vector: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of nonempty faces s(H(G)).
    Count { file: PathBuf },
    /// Check every counting identity against the partition counts.
    Verify { file: PathBuf },
    /// Face counts by class.
    Classify { file: PathBuf },
    /// The partition invariant p_G and the condition counts.
    Pg { file: PathBuf },
    /// Face count of P4 joined with a random threshold graph on m nodes.
    Series {
        #[arg(long = "p4-ltimes-t", value_name = "M")]
        m: usize,
        /// Seed for T; defaults to --seed.
        #[arg(long)]
        t_seed: Option<u64>,
    },
    /// Verify every split graph up to isomorphism on at most k nodes.
    Sweep {
        #[arg(long, value_name = "K")]
        max_nodes: usize,
        /// Restrict to threshold graphs.
        #[arg(long)]
        threshold: bool,
    },
    /// Compare the Hanner f-vector of a threshold graph with enumeration.
    HannerCheck {
        /// Threshold graph file; omit with --max-len.
        file: Option<PathBuf>,
        /// Check every creation sequence up to this length instead.
        #[arg(long, value_name = "L", conflicts_with = "file")]
        max_len: Option<usize>,
    },
    /// Print a seeded random graph as one line of JSON.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Split graph with clique size k, stable size l, edge probability p.
    Split {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
    },
    /// Threshold graph from m random creation steps.
    Threshold {
        #[arg(long)]
        m: usize,
    },
}

enum Failure {
    Usage(String),
    Identity,
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::FaceBudget(_) => Failure::Budget(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome<T = ()> = std::result::Result<T, Failure>;

struct Ctx {
    global: Global,
    echo: String,
}

impl Ctx {
    fn report(&self) -> RunReport {
        RunReport {
            command: self.echo.clone(),
            ..RunReport::default()
        }
    }

    fn emit(&self, mut r: RunReport, start: Instant) {
        r.wall_time_ms = start.elapsed().as_millis() as u64;
        if self.global.json {
            println!("{}", r.to_json());
        } else {
            print!("{}", r.to_text());
        }
    }

    fn incidence(&self, g: &Graph) -> Outcome<IncidenceStructure> {
        let mode = if self.global.assume_perfect {
            Perfectness::Assume
        } else {
            Perfectness::RequireSplit
        };
        Ok(incidence(g, mode)?)
    }
}

fn load(path: &Path) -> Outcome<GraphSpec> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_graph(&text)?)
}

/// The declared certificate, else the canonical one.
fn split_of(spec: &GraphSpec) -> Outcome<SplitCert> {
    spec.split
        .or_else(|| recognize_split(&spec.graph))
        .ok_or(Failure::Usage(Error::NotSplit.to_string()))
}

fn describe(spec: &GraphSpec, cert: Option<&SplitCert>) -> GraphJson {
    GraphJson::from_parts(&spec.graph, cert.or(spec.split.as_ref()), spec.threshold.as_ref())
}

fn census(ctx: &Ctx, inc: &IncidenceStructure) -> Outcome<FaceCensus> {
    let c = enumerate_faces(inc, ctx.global.budget)?;
    Ok(if ctx.global.f_vector {
        with_f_vector(inc, c)?
    } else {
        c
    })
}

fn cmd_count(ctx: &Ctx, file: &Path) -> Outcome {
    let start = Instant::now();
    let spec = load(file)?;
    let inc = ctx.incidence(&spec.graph)?;
    let c = census(ctx, &inc)?;
    let d = spec.graph.n() + 1;
    let cert = recognize_split(&spec.graph);
    let mut r = ctx.report();
    r.graph = Some(describe(&spec, cert.as_ref()));
    r.d = Some(d);
    r.vertices = Some(inc.num_vertices());
    r.facets = Some(inc.num_facets());
    r.s = Some(c.total);
    r.three_pow_d = Some(three_pow(d));
    r.f_vector = c.fvec;
    r.pass = true;
    ctx.emit(r, start);
    Ok(())
}

fn cmd_classify(ctx: &Ctx, file: &Path) -> Outcome {
    let start = Instant::now();
    let spec = load(file)?;
    let cert = split_of(&spec)?;
    let inc = incidence(&spec.graph, Perfectness::RequireSplit)?;
    let c = classify_faces(&inc, &cert, census(ctx, &inc)?)?;
    let mut r = ctx.report();
    r.graph = Some(describe(&spec, Some(&cert)));
    r.d = Some(spec.graph.n() + 1);
    r.s = Some(c.total);
    r.classes = c.classes;
    r.f_vector = c.fvec;
    r.pass = true;
    ctx.emit(r, start);
    Ok(())
}

fn cmd_pg(ctx: &Ctx, file: &Path) -> Outcome {
    let start = Instant::now();
    let spec = load(file)?;
    let cert = split_of(&spec)?;
    let g = &spec.graph;
    let mut r = ctx.report();
    r.graph = Some(describe(&spec, Some(&cert)));
    r.d = Some(g.n() + 1);
    r.p_g = Some(count_pg(g, &cert));
    r.pi_a = Some(count_pi(g, &cert, Condition::A));
    r.pi_b = Some(count_pi(g, &cert, Condition::B));
    r.pass = true;
    ctx.emit(r, start);
    Ok(())
}

fn verified(ctx: &Ctx, g: &Graph, cert: &SplitCert) -> Outcome<RunReport> {
    let v = verify_main_theorem(g, cert, ctx.global.budget)?;
    let mut r = ctx.report();
    r.d = Some(v.d);
    r.s = Some(v.s);
    r.three_pow_d = Some(v.three_pow_d);
    r.p_g = Some(v.p_g);
    r.pi_a = Some(v.pi_a);
    r.pi_b = Some(v.pi_b);
    r.fp_complement = Some(v.fp_complement);
    r.classes = Some(v.classes);
    r.identities = Some(v.identities);
    r.pass = v.identities.all() && v.s >= v.three_pow_d;
    if ctx.global.f_vector {
        let inc = incidence(g, Perfectness::RequireSplit)?;
        r.f_vector = census_with_fvec(ctx, &inc)?.fvec;
    }
    Ok(r)
}

fn census_with_fvec(ctx: &Ctx, inc: &IncidenceStructure) -> Outcome<FaceCensus> {
    Ok(with_f_vector(inc, enumerate_faces(inc, ctx.global.budget)?)?)
}

fn cmd_verify(ctx: &Ctx, file: &Path) -> Outcome {
    let start = Instant::now();
    let spec = load(file)?;
    let cert = split_of(&spec)?;
    let mut r = verified(ctx, &spec.graph, &cert)?;
    r.graph = Some(describe(&spec, Some(&cert)));
    let pass = r.pass;
    ctx.emit(r, start);
    if pass {
        Ok(())
    } else {
        Err(Failure::Identity)
    }
}

fn cmd_series(ctx: &Ctx, m: usize, t_seed: Option<u64>) -> Outcome {
    let start = Instant::now();
    let seq = random_threshold(m, t_seed.unwrap_or(ctx.global.seed));
    let t = build_threshold(&seq)?;
    let p4 = Graph::path(4)?;
    let p4_cert = recognize_split(&p4).expect("P4 is split");
    let (g, cert) = ltimes(&p4, &p4_cert, &t, &seq)?;
    let inc = incidence(&g, Perfectness::RequireSplit)?;
    let c = census(ctx, &inc)?;
    let predicted = three_pow(m + 5) + 16;
    let mut r = ctx.report();
    r.graph = Some(GraphJson::from_parts(&g, Some(&cert), None));
    r.t_sequence = Some(seq.to_letters());
    r.d = Some(g.n() + 1);
    r.s = Some(c.total);
    r.predicted = Some(predicted);
    r.f_vector = c.fvec;
    r.pass = c.total == predicted;
    let pass = r.pass;
    ctx.emit(r, start);
    if pass {
        Ok(())
    } else {
        Err(Failure::Identity)
    }
}

fn cmd_sweep(ctx: &Ctx, max_nodes: usize, threshold_only: bool) -> Outcome {
    let start = Instant::now();
    if max_nodes > SWEEP_MAX_NODES {
        return Err(Failure::Usage(format!(
            "exhaustive sweeps are limited to {SWEEP_MAX_NODES} nodes"
        )));
    }
    let graphs: Vec<(Graph, SplitCert)> = split_graphs_up_to_iso(max_nodes)?
        .into_iter()
        .filter(|(g, _)| !threshold_only || recognize_threshold(g).is_some())
        .collect();
    // canonical order is kept by the indexed collect
    let reports = graphs
        .par_iter()
        .map(|(g, cert)| {
            let mut r = verified(ctx, g, cert)?;
            r.graph = Some(GraphJson::from_parts(g, Some(cert), None));
            Ok((r, recognize_threshold(g).is_some()))
        })
        .collect::<Outcome<Vec<_>>>()?;

    let mut summary = SweepSummary {
        graphs: reports.len(),
        ..SweepSummary::default()
    };
    for (r, is_threshold) in &reports {
        if r.pass {
            summary.passed += 1;
        } else {
            summary.failed += 1;
        }
        summary.threshold += usize::from(*is_threshold);
        summary.max_d = summary.max_d.max(r.d.unwrap_or(0));
        if ctx.global.json {
            println!("{}", r.to_json());
        } else {
            let g = r.graph.as_ref().expect("set above");
            println!(
                "n={} edges={:?} d={} s={} p_G={} {}",
                g.n,
                g.edges,
                r.d.unwrap_or(0),
                r.s.unwrap_or(0),
                r.p_g.unwrap_or(0),
                if r.pass { "ok" } else { "FAIL" }
            );
        }
    }
    let mut r = ctx.report();
    r.summary = Some(summary);
    r.pass = summary.failed == 0;
    ctx.emit(r, start);
    if summary.failed == 0 {
        Ok(())
    } else {
        Err(Failure::Identity)
    }
}

fn hanner_report(ctx: &Ctx, g: &Graph, seq: &ThresholdSeq) -> Outcome<RunReport> {
    let inc = incidence(g, Perfectness::RequireSplit)?;
    let c = census_with_fvec(ctx, &inc)?;
    let model = hanner_from_threshold(seq);
    let d = g.n() + 1;
    let mut r = ctx.report();
    r.d = Some(d);
    r.s = Some(c.total);
    r.three_pow_d = Some(three_pow(d));
    r.pass = c.fvec.as_ref() == Some(&model) && c.total == three_pow(d);
    r.f_vector = c.fvec;
    r.hanner_f_vector = Some(model);
    Ok(r)
}

fn cmd_hanner_check(ctx: &Ctx, file: Option<&Path>, max_len: Option<usize>) -> Outcome {
    let start = Instant::now();
    if let Some(max_len) = max_len {
        if max_len > SWEEP_MAX_NODES {
            return Err(Failure::Usage(format!(
                "sequence sweeps are limited to length {SWEEP_MAX_NODES}"
            )));
        }
        let seqs: Vec<ThresholdSeq> = (0..=max_len).flat_map(threshold_sequences).collect();
        let passes = seqs
            .par_iter()
            .map(|seq| Ok(hanner_report(ctx, &build_threshold(seq)?, seq)?.pass))
            .collect::<Outcome<Vec<bool>>>()?;
        let passed = passes.iter().filter(|p| **p).count();
        let summary = SweepSummary {
            graphs: seqs.len(),
            passed,
            failed: seqs.len() - passed,
            threshold: seqs.len(),
            max_d: max_len + 1,
        };
        let mut r = ctx.report();
        r.summary = Some(summary);
        r.pass = summary.failed == 0;
        ctx.emit(r, start);
        return if summary.failed == 0 {
            Ok(())
        } else {
            Err(Failure::Identity)
        };
    }
    let file = file.ok_or_else(|| Failure::Usage("give a graph file or --max-len".into()))?;
    let spec = load(file)?;
    let seq = match &spec.threshold {
        Some(s) => s.clone(),
        None => recognize_threshold(&spec.graph)
            .ok_or_else(|| Failure::Usage("graph is not a threshold graph".into()))?,
    };
    let mut r = hanner_report(ctx, &spec.graph, &seq)?;
    r.graph = Some(describe(&spec, None));
    r.t_sequence = Some(seq.to_letters());
    let pass = r.pass;
    ctx.emit(r, start);
    if pass {
        Ok(())
    } else {
        Err(Failure::Identity)
    }
}

fn cmd_gen(ctx: &Ctx, kind: &GenKind) -> Outcome {
    let json = match *kind {
        GenKind::Split { k, l, p } => {
            let (g, cert) = random_split(k, l, p, ctx.global.seed)?;
            GraphJson::from_parts(&g, Some(&cert), None)
        }
        GenKind::Threshold { m } => {
            let seq = random_threshold(m, ctx.global.seed);
            let g = build_threshold(&seq)?;
            let cert = SplitCert {
                clique: seq.clique_nodes(),
                stable: seq.stable_nodes(),
            };
            GraphJson::from_parts(&g, Some(&cert), Some(&seq))
        }
    };
    println!("{}", serde_json::to_string(&json).expect("graph serializes"));
    Ok(())
}

fn run(cli: &Cli, echo: String) -> Outcome {
    let ctx = Ctx {
        global: cli.global.clone(),
        echo,
    };
    match &cli.command {
        Command::Count { file } => cmd_count(&ctx, file),
        Command::Verify { file } => cmd_verify(&ctx, file),
        Command::Classify { file } => cmd_classify(&ctx, file),
        Command::Pg { file } => cmd_pg(&ctx, file),
        Command::Series { m, t_seed } => cmd_series(&ctx, *m, *t_seed),
        Command::Sweep {
            max_nodes,
            threshold,
        } => cmd_sweep(&ctx, *max_nodes, *threshold),
        Command::HannerCheck { file, max_len } => {
            cmd_hanner_check(&ctx, file.as_deref(), *max_len)
        }
        Command::Gen { kind } => cmd_gen(&ctx, kind),
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let echo = args[1..].join(" ");
    match run(&cli, echo) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Identity) => ExitCode::from(2),
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
