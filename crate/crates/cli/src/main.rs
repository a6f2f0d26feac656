//! `mw`: command-line workbench for small triangulated manifolds.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget or cap exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use mw_core::bounds::{bound_report, TopologyHints};
use mw_core::census::{self, CensusOptions};
use mw_core::construct;
use mw_core::flip::{self, Schedule};
use mw_core::homology::{betti, homology, orientability};
use mw_core::io::{self, catalog, realize};
use mw_core::iso;
use mw_core::manifold::{is_combinatorial_manifold, DEFAULT_LINK_BUDGET};
use mw_core::{par, Complex, Error, Face, Verdict};

#[derive(Parser)]
#[command(name = "mw", version, about = "Workbench for small triangulated manifolds")]
struct Cli {
    /// Worker threads for parallel sections.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Kv,
}

#[derive(Args)]
struct Input {
    /// Facet file, or `catalog:<name>` / `fixture:<name>`.
    #[arg(long = "in", value_name = "FILE")]
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension, vertex count, f-vector, homology and neighborliness.
    Info(Input),
    Fvector(Input),
    Homology {
        #[command(flatten)]
        input: Input,
        /// Betti numbers over F_p instead of integral homology (0 for the rationals).
        #[arg(long)]
        prime: Option<u64>,
    },
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
    /// Searches for a smaller triangulation with bistellar flips.
    Reduce {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of consecutive seeds starting at `--seed`.
        #[arg(long, default_value_t = 1)]
        seeds: u64,
        #[arg(long, default_value_t = 200_000)]
        budget: u64,
        /// Stop once f_0 is at most this.
        #[arg(long)]
        target: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    Construct {
        #[command(subcommand)]
        what: ConstructWhat,
    },
    /// Isomorphism test.
    Iso {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Automorphism group.
    Auto(Input),
    /// Altshuler-Steinberg determinants.
    Det {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        links: bool,
    },
    /// Lower and upper bound report.
    Bounds {
        #[command(flatten)]
        input: Input,
        /// `key=value` facts: sphere, simply-connected, connectivity, homology-sphere, manifold.
        #[arg(long = "hint")]
        hints: Vec<String>,
    },
    Census {
        #[command(subcommand)]
        what: CensusWhat,
    },
    /// Straight-line embedding check for a surface.
    Realize {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        coords: PathBuf,
    },
    /// Applies a trace file of moves.
    Replay {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        trace: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifyWhat {
    Pseudomanifold(Input),
    Manifold {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_LINK_BUDGET)]
        budget: u64,
    },
    /// Recomputes every bundled catalog entry.
    Catalog,
}

#[derive(Subcommand)]
enum ConstructWhat {
    Boundary {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Product {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Join {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Sum {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Facet of `a` to remove (space-separated labels); default the first facet.
        #[arg(long)]
        facet_a: Option<String>,
        #[arg(long)]
        facet_b: Option<String>,
        /// Glue with the orientation-reversing parity.
        #[arg(long)]
        reverse: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Stack {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        facet: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sphere bundle over the circle from the product with a 4-vertex path.
    Bundle {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        orientable: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CensusWhat {
    Surfaces {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cap: Option<usize>,
        /// Writes one `.tri` file per class representative.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    Spheres {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

enum Failure {
    Verify(String),
    Input(anyhow::Error),
    Budget(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<Error>() {
            Some(Error::CapExceeded { .. }) | Some(Error::BudgetZero) => Failure::Budget(format!("{e:#}")),
            _ => Failure::Input(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::from(anyhow::Error::new(e))
    }
}

type Outcome = Result<(), Failure>;

fn load(spec: &str) -> anyhow::Result<Complex> {
    if let Some(name) = spec.strip_prefix("catalog:") {
        return Ok(catalog::entry(name)?.complex);
    }
    if let Some(name) = spec.strip_prefix("fixture:") {
        return Ok(catalog::fixture(name)?);
    }
    io::read_file(spec).with_context(|| format!("reading {spec}"))
}

fn emit(c: &Complex, out: &Option<PathBuf>) -> anyhow::Result<()> {
    match out {
        Some(p) => io::write_file(p, c).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{}", io::write(c));
            Ok(())
        }
    }
}

fn parse_face(s: &str) -> anyhow::Result<Face> {
    let labels = s
        .split(|ch: char| ch.is_whitespace() || ch == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|_| anyhow!("bad label `{t}`")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(Face::new(labels)?)
}

fn print_pairs(format: Format, pairs: &[(&str, String)]) {
    for (k, v) in pairs {
        match format {
            Format::Text => println!("{k:<14} {v}"),
            Format::Kv => println!("{k}={v}"),
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Info(input) => {
            let c = load(&input.input)?;
            let f = c.f_vector();
            let h = homology(&c);
            let pm = c.is_pseudomanifold();
            let mut pairs = vec![
                ("dim", c.dim().to_string()),
                ("n", c.n().to_string()),
                ("facets", c.num_facets().to_string()),
                ("f", f.to_string()),
                ("chi", f.euler.to_string()),
                ("homology", h.to_string()),
                ("neighborly", c.neighborliness().to_string()),
                ("pseudomanifold", pm.is_yes().to_string()),
            ];
            if let Ok(o) = orientability(&c) {
                pairs.push(("orientable", (o == mw_core::homology::Orientability::Orientable).to_string()));
            }
            if let Some(e) = catalog::identify(&c) {
                pairs.push(("catalog", e.name().to_string()));
            }
            print_pairs(format, &pairs);
        }
        Command::Fvector(input) => {
            let f = load(&input.input)?.f_vector();
            print_pairs(format, &[("f", f.to_string()), ("chi", f.euler.to_string())]);
        }
        Command::Homology { input, prime } => {
            let c = load(&input.input)?;
            match prime {
                None => print_pairs(format, &[("homology", homology(&c).to_string())]),
                Some(p) => {
                    let b = betti(&c, p);
                    let s: Vec<String> = b.ranks.iter().map(|r| r.to_string()).collect();
                    print_pairs(format, &[("betti", format!("({})", s.join(","))), ("field", match b.coefficients {
                        mw_core::homology::Coefficients::Rationals => "Q".to_string(),
                        mw_core::homology::Coefficients::Prime(p) => format!("F{p}"),
                    })]);
                }
            }
        }
        Command::Verify { what } => return verify(what, format),
        Command::Reduce { input, seed, seeds, budget, target, out, trace } => {
            let c = load(&input.input)?;
            let schedule = match target {
                Some(t) => Schedule::default().stop_at_vertices(t),
                None => Schedule::default(),
            };
            let list: Vec<u64> = (seed..seed + seeds.max(1)).collect();
            let r = par::install(cli.threads, || flip::reduce_seeds(&c, &list, budget, &schedule))?;
            eprintln!(
                "seed {} moves {} best f={} (from {})",
                r.stats.seed, r.stats.moves, r.stats.best, r.stats.initial
            );
            if let Some(p) = &trace {
                std::fs::write(p, flip::format_trace(&r.trace)).with_context(|| format!("writing {}", p.display()))?;
            }
            emit(&r.complex, &out)?;
            if let Some(t) = target {
                if r.complex.n() as u64 > t {
                    return Err(Failure::Budget(format!("target f_0 <= {t} not reached; best {}", r.complex.n())));
                }
            }
        }
        Command::Construct { what } => construct_cmd(what)?,
        Command::Iso { a, b } => {
            let (a, b) = (load(&a)?, load(&b)?);
            let same = iso::are_isomorphic(&a, &b);
            print_pairs(format, &[("isomorphic", same.to_string())]);
        }
        Command::Auto(input) => {
            let c = load(&input.input)?;
            let g = par::install(cli.threads, || iso::automorphism_group(&c));
            let gens: Vec<String> = g.generators.iter().map(|p| iso::cycle_notation(p)).collect();
            print_pairs(format, &[("order", g.order.to_string()), ("generators", gens.join(" "))]);
        }
        Command::Det { input, links } => {
            let c = load(&input.input)?;
            let mut pairs = vec![("det", iso::as_determinant(&c).to_string())];
            if links {
                let dets = par::install(cli.threads, || iso::as_link_determinants(&c));
                let s: Vec<String> = dets.iter().map(|d| d.to_string()).collect();
                pairs.push(("links", s.join(" ")));
            }
            print_pairs(format, &pairs);
        }
        Command::Bounds { input, hints } => {
            let c = load(&input.input)?;
            let mut h = TopologyHints::default();
            for hint in &hints {
                h.apply(hint).map_err(|e| Failure::Input(anyhow!(e)))?;
            }
            if h.manifold.is_none() {
                if let Some(e) = catalog::identify(&c) {
                    eprintln!("manifold={} from catalog entry {}", e.spec.manifold, e.name());
                    h.manifold = Some(e.spec.manifold.to_string());
                }
            }
            let report = bound_report(&c, &h);
            match format {
                Format::Text => print!("{report}"),
                Format::Kv => print!("{}", report.to_kv()),
            }
            let bad = report.violations();
            if !bad.is_empty() {
                let ids: Vec<&str> = bad.iter().map(|e| e.id.as_str()).collect();
                return Err(Failure::Verify(format!("violated: {}", ids.join(", "))));
            }
        }
        Command::Census { what } => {
            let (n, cap, out_dir, spheres) = match what {
                CensusWhat::Surfaces { n, cap, out_dir } => (n, cap, out_dir, false),
                CensusWhat::Spheres { n, cap, out_dir } => (n, cap, out_dir, true),
            };
            let default_cap = if spheres { census::SPHERE_CAP } else { census::SURFACE_CAP };
            if cap.is_some_and(|c| c > default_cap) {
                eprintln!("warning: raising the cap above {default_cap} may take a long time");
            }
            let opts = CensusOptions { cap, keep_representatives: out_dir.is_some() };
            let r = par::install(cli.threads, || {
                if spheres {
                    census::enumerate_spheres_with(n, &opts)
                } else {
                    census::enumerate_surfaces_with(n, &opts)
                }
            })?;
            for line in r.lines() {
                println!("{line}");
            }
            if let (Some(dir), Some(reps)) = (out_dir, &r.representatives) {
                std::fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
                let mut seen = std::collections::BTreeMap::new();
                for (class, c) in reps {
                    let k = seen.entry(class.name()).or_insert(0usize);
                    *k += 1;
                    let path = dir.join(format!("{}-n{}-{:05}.tri", class.name(), n, k));
                    io::write_file(&path, c)?;
                }
            }
        }
        Command::Realize { input, coords } => {
            let c = load(&input.input)?;
            let text = std::fs::read_to_string(&coords).with_context(|| format!("reading {}", coords.display()))?;
            let e = realize::Embedding::parse(&text)?;
            let v = realize::realization_check(&c, &e)?;
            print_pairs(format, &[("valid", v.valid.to_string()), ("exact", v.exact.to_string())]);
            for p in &v.problems {
                eprintln!("{p}");
            }
            if !v.valid {
                return Err(Failure::Verify("embedding is not a realization".into()));
            }
        }
        Command::Replay { input, trace, out } => {
            let c = load(&input.input)?;
            let text = std::fs::read_to_string(&trace).with_context(|| format!("reading {}", trace.display()))?;
            let moves = flip::parse_trace(&text)?;
            let r = flip::replay(&c, &moves).map_err(|e| Failure::Verify(e.to_string()))?;
            eprintln!("replayed {} moves, f={}", moves.len(), r.f_vector());
            emit(&r, &out)?;
        }
    }
    Ok(())
}

fn verify(what: VerifyWhat, format: Format) -> Outcome {
    match what {
        VerifyWhat::Pseudomanifold(input) => {
            let v = load(&input.input)?.is_pseudomanifold();
            report_verdict(format, "pseudomanifold", &v)
        }
        VerifyWhat::Manifold { input, budget } => {
            let c = load(&input.input)?;
            let v = is_combinatorial_manifold(&c, budget);
            report_verdict(format, "manifold", &v)
        }
        VerifyWhat::Catalog => {
            let mut failed = Vec::new();
            for e in catalog::catalog()? {
                for line in catalog::verify_entry(&e) {
                    println!("{:<14} {line}", e.name());
                    if !line.ok() {
                        failed.push(format!("{}: {}", e.name(), line.what));
                    }
                }
            }
            if failed.is_empty() {
                Ok(())
            } else {
                Err(Failure::Verify(failed.join(", ")))
            }
        }
    }
}

fn report_verdict(format: Format, what: &str, v: &mw_core::ManifoldVerdict) -> Outcome {
    let status = match v.status {
        Verdict::Yes => "yes",
        Verdict::No => "no",
        Verdict::Unknown => "unknown",
    };
    let mut pairs = vec![(what, status.to_string())];
    if let Some(w) = &v.witness {
        pairs.push(("witness", w.to_string()));
    }
    print_pairs(format, &pairs);
    match v.status {
        Verdict::Yes => Ok(()),
        Verdict::No => Err(Failure::Verify(format!("not a {what}"))),
        Verdict::Unknown => Err(Failure::Budget("flip budget exhausted on a vertex link".into())),
    }
}

fn construct_cmd(what: ConstructWhat) -> anyhow::Result<()> {
    match what {
        ConstructWhat::Boundary { dim, out } => {
            if dim == 0 {
                bail!("dimension must be positive");
            }
            emit(&construct::boundary_simplex(dim), &out)
        }
        ConstructWhat::Product { a, b, out } => emit(&construct::product(&load(&a)?, &load(&b)?), &out),
        ConstructWhat::Join { a, b, out } => emit(&construct::join(&load(&a)?, &load(&b)?), &out),
        ConstructWhat::Sum { a, b, facet_a, facet_b, reverse, out } => {
            let (ca, cb) = (load(&a)?, load(&b)?);
            let fa = match facet_a {
                Some(s) => parse_face(&s)?,
                None => ca.facets()[0].clone(),
            };
            let fb = match facet_b {
                Some(s) => parse_face(&s)?,
                None => cb.facets()[0].clone(),
            };
            let parity = if reverse { construct::Parity::Reverse } else { construct::Parity::Preserve };
            let map = construct::GluingMap::oriented(&ca, &fa, &cb, &fb, parity);
            emit(&construct::connected_sum(&ca, &fa, &cb, &fb, Some(&map))?, &out)
        }
        ConstructWhat::Stack { input, facet, out } => {
            let c = load(&input.input)?;
            let f = match facet {
                Some(s) => parse_face(&s)?,
                None => c.facets()[0].clone(),
            };
            emit(&construct::stack(&c, &f)?, &out)
        }
        ConstructWhat::Bundle { dim, orientable, out } => {
            let c = if orientable { construct::orientable_bundle(dim)? } else { construct::twisted_bundle(dim)? };
            emit(&c, &out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("limit reached: {msg}");
            ExitCode::from(3)
        }
    }
}
