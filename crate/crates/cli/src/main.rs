use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use edgeideal::betti::{check_bight_bound, hochster_betti_table_limited};
use edgeideal::indpoly::{
    a_invariant, family_poly, h_polynomial, independence_polynomial, FamilyKind, IntPolynomial,
};
use edgeideal::verify::{verify_theorem, TheoremId, VerifyParams};
use edgeideal::{Error, Field, Graph, VertexSet, DEFAULT_FACE_LIMIT, MAX_VERTICES};

#[derive(Parser)]
#[command(
    name = "edgeideal",
    version,
    about = "Exact invariants of edge ideals: Betti tables, regularity, independence \
             polynomials, suspensions, and discrete Morse checks"
)]
struct Cli {
    /// Worker threads for parallel work (default: all cores)
    #[arg(long, global = true, value_name = "J")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of the (optionally suspended) graph: alpha, bight, reg,
    /// pdim, independence polynomial, multiplicity at -1, a-invariant, h-polynomial
    Invariants(InvariantsArgs),
    /// Graded Betti table of the quotient by the edge ideal
    Betti(BettiArgs),
    /// Independence-polynomial data only; no homology is computed
    Indpoly(IndpolyArgs),
    /// Emit the suspended graph as an edge list
    Suspend(SuspendArgs),
    /// Check one named suspension statement over a window of sizes
    Verify(VerifyArgs),
    /// Invariants across a family range, as CSV
    Sweep(SweepArgs),
}

/// Exactly one graph source per invocation.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Path graph x1 - x2 - ... - xN
    #[arg(long, value_name = "N")]
    path: Option<usize>,
    /// Cycle graph on N vertices
    #[arg(long, value_name = "N")]
    cycle: Option<usize>,
    /// Edge-list file: vertex count on the first line, then `u v` pairs, 1-based
    #[arg(long, value_name = "FILE")]
    edges: Option<PathBuf>,
}

impl GraphSource {
    fn load(&self) -> anyhow::Result<Graph> {
        let g = if let Some(n) = self.path {
            Graph::path(n)?
        } else if let Some(n) = self.cycle {
            Graph::cycle(n)?
        } else if let Some(file) = &self.edges {
            let text = fs::read_to_string(file)
                .with_context(|| format!("reading {}", file.display()))?;
            Graph::parse_edge_list(&text)?
        } else {
            unreachable!("clap enforces one source");
        };
        Ok(g)
    }
}

#[derive(Args)]
struct CommonArgs {
    /// Coefficient field: q (exact rationals) or gf:P with P prime
    #[arg(long, default_value = "q", value_parser = parse_field)]
    field: Field,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Refuse graphs on more than this many vertices
    #[arg(long, value_name = "K", default_value_t = MAX_VERTICES)]
    max_n: usize,
    /// Refuse complexes with more than this many faces
    #[arg(long, value_name = "F", default_value_t = DEFAULT_FACE_LIMIT)]
    max_faces: usize,
}

/// Suspension spec: 1-based vertex list ("1,4"), "full", or
/// "auto-maximal-independent" for the first maximal independent set.
#[derive(Args)]
struct SuspendSpec {
    #[arg(long, value_name = "LIST|full|auto-maximal-independent")]
    suspend: Option<String>,
}

impl SuspendSpec {
    fn apply(&self, g: Graph) -> anyhow::Result<Graph> {
        let Some(spec) = &self.suspend else {
            return Ok(g);
        };
        let c = parse_suspension_set(&g, spec)?;
        Ok(g.suspend(c)?)
    }
}

fn parse_suspension_set(g: &Graph, spec: &str) -> anyhow::Result<VertexSet> {
    match spec {
        "full" => Ok(g.vertices()),
        "auto-maximal-independent" | "auto" => {
            let sets = g.maximal_independent_sets()?;
            Ok(sets[0])
        }
        list => {
            let mut c = VertexSet::EMPTY;
            for tok in list.split(',') {
                let k: usize = tok
                    .trim()
                    .parse()
                    .with_context(|| format!("bad suspension vertex {tok:?}"))?;
                if k == 0 || k > g.n() {
                    return Err(Error::VertexOutOfRange {
                        index: k,
                        n: g.n(),
                    }
                    .into());
                }
                c = c.with(k - 1);
            }
            Ok(c)
        }
    }
}

#[derive(Args)]
struct InvariantsArgs {
    #[command(flatten)]
    source: GraphSource,
    #[command(flatten)]
    suspend: SuspendSpec,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct BettiArgs {
    #[command(flatten)]
    source: GraphSource,
    #[command(flatten)]
    suspend: SuspendSpec,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct IndpolyArgs {
    #[command(flatten)]
    source: GraphSource,
    #[command(flatten)]
    suspend: SuspendSpec,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct SuspendArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Defaults to "full" here: the bare subcommand suspends over every vertex
    #[arg(long, value_name = "LIST|full|auto-maximal-independent", default_value = "full")]
    suspend: String,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: full-suspension, cover-suspension, ainv-cover, wide-spokes,
    /// cycle-suspension, path-suspension, inclusion-injectivity,
    /// critical-homology, colon-identity, ell-bounds, morse-consistency
    #[arg(value_name = "ID", value_parser = parse_theorem)]
    id: TheoremId,
    /// Vertex-count window, inclusive (default: the statement's own window)
    #[arg(long, value_name = "A..B", value_parser = parse_window)]
    n: Option<(usize, usize)>,
    /// Edge-mask samples per size beyond the exhaustive range
    #[arg(long, value_name = "S")]
    samples: Option<usize>,
    /// Seed for the sampled sizes
    #[arg(long, value_name = "SEED", default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct SweepArgs {
    /// Graph family to sweep
    #[arg(long, value_enum, value_name = "FAMILY")]
    family: Family,
    /// Vertex-count window, inclusive
    #[arg(long, value_name = "A..B", value_parser = parse_window)]
    n: (usize, usize),
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
}

fn parse_field(s: &str) -> Result<Field, String> {
    Field::parse(s).map_err(|e| e.to_string())
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    TheoremId::parse(s).map_err(|e| e.to_string())
}

fn parse_window(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let lo = lo.trim().parse().map_err(|_| format!("bad lower bound in {s:?}"))?;
    let hi = hi.trim().parse().map_err(|_| format!("bad upper bound in {s:?}"))?;
    Ok((lo, hi))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // A second initialization (tests call main-ish paths repeatedly) is harmless.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Invariants(args) => cmd_invariants(args),
        Command::Betti(args) => cmd_betti(args),
        Command::Indpoly(args) => cmd_indpoly(args),
        Command::Suspend(args) => cmd_suspend(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep(args) => cmd_sweep(args),
    }
}

fn check_size(g: &Graph, max_n: usize) -> anyhow::Result<()> {
    if g.n() > max_n {
        return Err(Error::TooManyVertices {
            n: g.n(),
            limit: max_n,
        }
        .into());
    }
    Ok(())
}

/// Rows every output format shares. Field order is the CSV column order.
#[derive(Serialize)]
struct InvariantsOut {
    n: usize,
    edges: usize,
    field: String,
    alpha: usize,
    bight: usize,
    reg: usize,
    pdim: usize,
    indpoly: String,
    multiplicity: usize,
    a_invariant: i64,
    h_poly: String,
    h_degree: usize,
}

fn cmd_invariants(args: InvariantsArgs) -> anyhow::Result<ExitCode> {
    let g = args.suspend.apply(args.source.load()?)?;
    check_size(&g, args.common.max_n)?;
    let table = hochster_betti_table_limited(&g, args.common.field, args.common.max_faces)?;
    let ainv = a_invariant(&g)?;
    let out = InvariantsOut {
        n: g.n(),
        edges: g.edge_count(),
        field: args.common.field.to_string(),
        alpha: ainv.alpha,
        bight: g.big_height()?,
        reg: table.reg(),
        pdim: table.pdim(),
        indpoly: poly_string(&independence_polynomial(&g), "x"),
        multiplicity: ainv.multiplicity,
        a_invariant: ainv.a,
        h_poly: poly_string(&h_polynomial(&g), "t"),
        h_degree: ainv.hdeg,
    };
    match args.common.format {
        Format::Json => println!("{}", serde_json::to_string(&out)?),
        Format::Csv => {
            println!(
                "n,edges,field,alpha,bight,reg,pdim,indpoly,multiplicity,a_invariant,h_poly,h_degree"
            );
            println!(
                "{},{},{},{},{},{},{},{},{},{},{},{}",
                out.n,
                out.edges,
                out.field,
                out.alpha,
                out.bight,
                out.reg,
                out.pdim,
                out.indpoly,
                out.multiplicity,
                out.a_invariant,
                out.h_poly,
                out.h_degree
            );
        }
        Format::Text => {
            println!("n            {}", out.n);
            println!("edges        {}", out.edges);
            println!("field        {}", out.field);
            println!("alpha        {}", out.alpha);
            println!("bight        {}", out.bight);
            println!("reg          {}", out.reg);
            println!("pdim         {}", out.pdim);
            println!("indpoly      {}", out.indpoly);
            println!("multiplicity {}", out.multiplicity);
            println!("a-invariant  {}", out.a_invariant);
            println!("h-poly       {}", out.h_poly);
            println!("h-degree     {}", out.h_degree);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_betti(args: BettiArgs) -> anyhow::Result<ExitCode> {
    let g = args.suspend.apply(args.source.load()?)?;
    check_size(&g, args.common.max_n)?;
    let table = hochster_betti_table_limited(&g, args.common.field, args.common.max_faces)?;
    match args.common.format {
        Format::Json => print!("{}", table.to_json_triples()),
        Format::Csv => {
            println!("i,j,beta");
            for (i, j, b) in table.entries() {
                println!("{i},{j},{b}");
            }
        }
        Format::Text => {
            print!("{}", table.to_display_text());
            let bight = check_bight_bound(&g, args.common.field)?;
            println!(
                "reg {}  pdim {}  bight {}",
                table.reg(),
                table.pdim(),
                bight.bight
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct IndpolyOut {
    n: usize,
    edges: usize,
    alpha: usize,
    indpoly: String,
    coefficients: Vec<i128>,
    multiplicity: usize,
    a_invariant: i64,
    h_poly: String,
    h_degree: usize,
}

fn cmd_indpoly(args: IndpolyArgs) -> anyhow::Result<ExitCode> {
    let g = args.suspend.apply(args.source.load()?)?;
    check_size(&g, args.common.max_n)?;
    let ainv = a_invariant(&g)?;
    let p = independence_polynomial(&g);
    let out = IndpolyOut {
        n: g.n(),
        edges: g.edge_count(),
        alpha: ainv.alpha,
        indpoly: poly_string(&p, "x"),
        coefficients: p.coeffs().to_vec(),
        multiplicity: ainv.multiplicity,
        a_invariant: ainv.a,
        h_poly: poly_string(&h_polynomial(&g), "t"),
        h_degree: ainv.hdeg,
    };
    match args.common.format {
        Format::Json => println!("{}", serde_json::to_string(&out)?),
        Format::Csv => {
            println!("n,edges,alpha,indpoly,multiplicity,a_invariant,h_poly,h_degree");
            println!(
                "{},{},{},{},{},{},{},{}",
                out.n,
                out.edges,
                out.alpha,
                out.indpoly,
                out.multiplicity,
                out.a_invariant,
                out.h_poly,
                out.h_degree
            );
        }
        Format::Text => {
            println!("P(x) = {}", out.indpoly);
            println!("alpha        {}", out.alpha);
            println!("multiplicity {}", out.multiplicity);
            println!("a-invariant  {}", out.a_invariant);
            println!("h-poly       {}", out.h_poly);
            println!("h-degree     {}", out.h_degree);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_suspend(args: SuspendArgs) -> anyhow::Result<ExitCode> {
    let base = args.source.load()?;
    let c = parse_suspension_set(&base, &args.suspend)?;
    let g = base.suspend(c)?;
    check_size(&g, args.common.max_n)?;
    match args.common.format {
        Format::Json => {
            #[derive(Serialize)]
            struct SuspendOut {
                n: usize,
                apex: usize,
                edges: Vec<(usize, usize)>,
            }
            let out = SuspendOut {
                n: g.n(),
                apex: g.n(),
                edges: g.edges_one_based(),
            };
            println!("{}", serde_json::to_string(&out)?);
        }
        Format::Csv => {
            println!("u,v");
            for (u, v) in g.edges_one_based() {
                println!("{u},{v}");
            }
        }
        Format::Text => print!("{}", g.to_edge_list()),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    let mut params = VerifyParams::for_theorem(args.id);
    if let Some((lo, hi)) = args.n {
        params = params.with_window(lo, hi);
    }
    if let Some(s) = args.samples {
        params.samples = s;
    }
    params.seed = args.seed;
    params.field = args.common.field;
    params.face_limit = args.common.max_faces;
    let report = verify_theorem(args.id, &params)?;
    match args.common.format {
        Format::Json => print!("{}", report.to_json_lines()?),
        Format::Csv => {
            println!("theorem,n,instance,holds,expected,computed");
            for r in &report.records {
                println!(
                    "{},{},{},{},{},{}",
                    r.theorem,
                    r.n,
                    csv_quote(&r.instance),
                    r.holds,
                    csv_quote(&r.expected),
                    csv_quote(&r.computed)
                );
            }
        }
        Format::Text => {
            // Failing instances become JSON lines so they can be rerun in isolation.
            for r in report.failures() {
                println!("{}", serde_json::to_string(r)?);
            }
            println!("{}", report.summary());
        }
    }
    if report.all_hold() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::FAILURE)
    }
}

fn cmd_sweep(args: SweepArgs) -> anyhow::Result<ExitCode> {
    use rayon::prelude::*;
    let (lo, hi) = args.n;
    if lo > hi {
        return Err(Error::EmptyRange { lo, hi }.into());
    }
    let (kind, name) = match args.family {
        Family::Path => (FamilyKind::Path, "path"),
        Family::Cycle => (FamilyKind::Cycle, "cycle"),
    };
    let sizes: Vec<usize> = (lo..=hi).collect();
    let rows: anyhow::Result<Vec<String>> = sizes
        .par_iter()
        .map(|&n| {
            let g = match kind {
                FamilyKind::Path => Graph::path(n)?,
                FamilyKind::Cycle => Graph::cycle(n)?,
            };
            check_size(&g, args.common.max_n)?;
            let table =
                hochster_betti_table_limited(&g, args.common.field, args.common.max_faces)?;
            let ainv = a_invariant(&g)?;
            let p = family_poly(kind, n)?;
            Ok(format!(
                "{name},{n},{},{},{},{},{},{},{},{}",
                g.edge_count(),
                ainv.alpha,
                g.big_height()?,
                table.reg(),
                table.pdim(),
                ainv.multiplicity,
                ainv.a,
                poly_string(&p, "x")
            ))
        })
        .collect();
    println!("family,n,edges,alpha,bight,reg,pdim,multiplicity,a_invariant,indpoly");
    for row in rows? {
        println!("{row}");
    }
    Ok(ExitCode::SUCCESS)
}

/// Human-readable polynomial, ascending powers: "1+6x+9x^2+2x^3".
fn poly_string(p: &IntPolynomial, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, &c) in p.coeffs().iter().enumerate() {
        if c == 0 {
            continue;
        }
        if !out.is_empty() && c > 0 {
            out.push('+');
        }
        let mono = match k {
            0 => None,
            1 => Some(var.to_string()),
            _ => Some(format!("{var}^{k}")),
        };
        match (c, mono) {
            (c, None) => out.push_str(&c.to_string()),
            (1, Some(m)) => out.push_str(&m),
            (-1, Some(m)) => {
                out.push('-');
                out.push_str(&m);
            }
            (c, Some(m)) => {
                out.push_str(&c.to_string());
                out.push_str(&m);
            }
        }
    }
    out
}

fn csv_quote(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_strings() {
        let p = IntPolynomial::new(vec![1, 6, 9, 2]);
        assert_eq!(poly_string(&p, "x"), "1+6x+9x^2+2x^3");
        let q = IntPolynomial::new(vec![0, -1, 0, 1]);
        assert_eq!(poly_string(&q, "t"), "-t+t^3");
        assert_eq!(poly_string(&IntPolynomial::zero(), "x"), "0");
        assert_eq!(poly_string(&IntPolynomial::one(), "x"), "1");
    }

    #[test]
    fn window_parser() {
        assert_eq!(parse_window("3..9"), Ok((3, 9)));
        assert!(parse_window("9").is_err());
        assert!(parse_window("a..b").is_err());
    }

    #[test]
    fn suspension_specs() {
        let g = Graph::path(4).unwrap();
        assert_eq!(parse_suspension_set(&g, "full").unwrap(), g.vertices());
        assert_eq!(
            parse_suspension_set(&g, "1,4").unwrap(),
            VertexSet::from_indices(&[0, 3])
        );
        let auto = parse_suspension_set(&g, "auto-maximal-independent").unwrap();
        assert!(g.is_maximal_independent(auto));
        assert!(parse_suspension_set(&g, "0,2").is_err());
        assert!(parse_suspension_set(&g, "1,5").is_err());
        assert!(parse_suspension_set(&g, "x").is_err());
    }
}
