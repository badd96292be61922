//! The `tca` command line: every decision procedure and verification suite,
//! with JSON on stdout and diagnostics on stderr.
//!
//! Exit codes: 0 when the command ran (answers live in the JSON), 2 for
//! usage and parse errors, 3 when a verification suite finds an
//! inconsistency.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::bounds::eta_bound;
use crate::error::{Error, Result};
use crate::functor::{schur_dim, PolyFunctor, SuperSpace};
use crate::groebner::{Ideal, IdealJson};
use crate::models::{ideal_lambda, rank_locus_ideal, RankBound};
use crate::partition::Partition;
use crate::poly::MonomialOrder;
use crate::spectrum::{gl_contains, gl_radical, is_gl_prime, minimal_gl_primes, GlIdeal, GlPrime, SpectrumPoint};
use crate::verify::{run_suite, Suite, SuiteOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "tca", version, about = "Equivariant commutative algebra for Sym(Sym^2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlArgs {
    /// Partition generating a summand, e.g. `2,1`; repeat for sums, `zero`
    /// for the zero ideal, `0` for the empty partition (the unit ideal).
    #[arg(long = "lambda", value_name = "PARTITION")]
    lambda: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension of S_λ(Q^(r|s)).
    SchurDim {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        space: SuperSpace,
    },
    /// Whether the GL-ideal is a GL-prime.
    GlPrime(GlArgs),
    /// Whether J (from --lambda) is contained in K (from --mu).
    GlContains {
        #[command(flatten)]
        left: GlArgs,
        #[arg(long = "mu", value_name = "PARTITION")]
        mu: Vec<String>,
    },
    /// GL-radical of a GL-ideal.
    GlRadical(GlArgs),
    /// Minimal GL-primes over a GL-ideal.
    MinPrimes(GlArgs),
    /// Radical (and plain) membership of a polynomial in an ideal file.
    RadicalContains {
        #[arg(long, value_name = "PATH")]
        ideal: std::path::PathBuf,
        #[arg(long)]
        poly: String,
    },
    /// Minors and Pfaffians cutting out a rank locus.
    RankIdeal {
        /// Rank bounds `r,s`; either may be `inf`.
        #[arg(long, value_name = "R,S")]
        rank: String,
        #[arg(long)]
        space: SuperSpace,
        #[arg(long, default_value = "degrevlex")]
        order: MonomialOrder,
    },
    /// Generators of I_λ(Q^(r|s)).
    IdealLambda {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        space: SuperSpace,
        #[arg(long, default_value = "degrevlex")]
        order: MonomialOrder,
    },
    /// Recursive nilpotency degree bound.
    Eta {
        /// Functor such as `sym:2`, `wedge:2 + sym:1` or `{(2,1):1}`.
        #[arg(long)]
        functor: PolyFunctor,
        #[arg(long)]
        k: u32,
    },
    /// Run a verification suite: prop5.1, lemma5.4, rankloci, bridge, veronese.
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        maxdeg: usize,
        /// Worker threads for parallel sub-checks.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn gl_ideal(tokens: &[String]) -> Result<GlIdeal> {
    let mut parts = Vec::new();
    for t in tokens {
        if t.trim() != "zero" {
            parts.push(t.parse::<Partition>()?);
        }
    }
    Ok(GlIdeal::sum(parts))
}

fn prime_json(p: &GlPrime) -> Value {
    match p {
        GlPrime::Rect { rows, cols } => json!({"rows": rows, "cols": cols}),
        GlPrime::Zero => json!("zero"),
    }
}

fn point_json(p: SpectrumPoint) -> Value {
    match p {
        SpectrumPoint::Point(r, s) => json!([r, s]),
        SpectrumPoint::Infinity => json!("inf"),
    }
}

fn ideal_json(ideal: &Ideal, order: MonomialOrder) -> Result<Value> {
    let ring = ideal.ring().with_order(order);
    let gens = ideal.generators().iter().map(|g| g.to_ring(ring)).collect::<Result<Vec<_>>>()?;
    Ok(serde_json::to_value(Ideal::new(ring, gens)?.to_json())?)
}

enum Outcome {
    Answer(Value),
    Inconsistent(Value),
}

fn execute(command: Command) -> Result<Outcome> {
    use Outcome::Answer;
    Ok(match command {
        Command::SchurDim { lambda, space } => Answer(json!({"dim": schur_dim(&lambda, space)})),
        Command::GlPrime(args) => Answer(json!({"glPrime": is_gl_prime(&gl_ideal(&args.lambda)?)})),
        Command::GlContains { left, mu } => {
            let j = gl_ideal(&left.lambda)?;
            let k = gl_ideal(&mu)?;
            Answer(json!({"contains": gl_contains(&j, &k)}))
        }
        Command::GlRadical(args) => Answer(json!({"radical": gl_radical(&gl_ideal(&args.lambda)?)})),
        Command::MinPrimes(args) => {
            let primes = minimal_gl_primes(&gl_ideal(&args.lambda)?)?;
            Answer(json!({
                "primes": primes.iter().map(prime_json).collect::<Vec<_>>(),
                "points": primes.iter().map(|p| point_json(p.point())).collect::<Vec<_>>(),
            }))
        }
        Command::RadicalContains { ideal, poly } => {
            let text = std::fs::read_to_string(&ideal)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", ideal.display())))?;
            let parsed: IdealJson = serde_json::from_str(&text)?;
            let ideal = Ideal::from_json(&parsed)?;
            let f = ideal.ring().parse(&poly)?;
            Answer(json!({
                "idealContains": ideal.contains(&f)?,
                "radicalContains": ideal.radical_contains(&f)?,
            }))
        }
        Command::RankIdeal { rank, space, order } => {
            let (r, s) = rank
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected `r,s`, got `{rank}`")))?;
            let ideal = rank_locus_ideal(r.parse::<RankBound>()?, s.parse::<RankBound>()?, space)?;
            Answer(ideal_json(&ideal, order)?)
        }
        Command::IdealLambda { lambda, space, order } => Answer(ideal_json(&ideal_lambda(&lambda, space)?.ideal, order)?),
        Command::Eta { functor, k } => Answer(serde_json::to_value(eta_bound(&functor, k)?)?),
        Command::Verify { suite, n, maxdeg, jobs } => {
            let opts = SuiteOptions { n, maxdeg };
            let report = with_jobs(jobs, || run_suite(suite, opts))?;
            let value = serde_json::to_value(&report)?;
            if report.failures > 0 {
                Outcome::Inconsistent(value)
            } else {
                Answer(value)
            }
        }
    })
}

#[cfg(feature = "parallel")]
fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        None => f(),
    }
}

#[cfg(not(feature = "parallel"))]
fn with_jobs<T: Send>(_jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    f()
}

/// Runs the command line `argv` (program name first) and returns the exit
/// code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{text}");
                EXIT_OK
            } else {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            };
        }
    };
    match execute(cli.command) {
        Ok(Outcome::Answer(v)) => {
            let _ = writeln!(out, "{v}");
            EXIT_OK
        }
        Ok(Outcome::Inconsistent(v)) => {
            let _ = writeln!(out, "{v}");
            let _ = writeln!(err, "verification found inconsistencies");
            EXIT_INCONSISTENT
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
