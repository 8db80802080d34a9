//! Thin command-line front end over the `neighborly` library with bit-exact
//! text I/O. One verb per library operation; streams default to stdin/stdout
//! and `--in`/`--out` override. Exit status: 0 success/verified, 1
//! verification failed or not found, 2 usage or parse error.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use neighborly::chirotope::Chirotope;
use neighborly::config::VectorConfiguration;
use neighborly::constructions::{
    cyclic, default_params, gale_sew, gale_sewn_pipeline, neighborly_completion, openness_probe,
    sew, ConstructionLog, DEFAULT_COMPLETION_BUDGET, DEFAULT_PROBE_SEED,
};
use neighborly::extension::{fiber_polyhedron, lex_extend_geometric, LexProgram};
use neighborly::linalg::{parse_scalar, rational, Scalar};
use neighborly::polytope::{facets, find_universal_flags, neighborliness_witness, Flag};
use neighborly::{Error, Sign};

/// Environment variable overriding the default search budget (universal flag
/// search and neighborly completion). Default 100000.
const BUDGET_ENV: &str = "NEIGHBORLY_SEARCH_BUDGET";

#[derive(Parser)]
#[command(
    name = "neighborly",
    version,
    about = "Construct and verify neighborly polytopes with exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Io {
    /// Input file (defaults to standard input)
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Output file (defaults to standard output)
    #[arg(long = "out", value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the cyclic polytope C(d, n) as a configuration
    Cyclic {
        /// Even polytope dimension
        d: usize,
        /// Number of vertices
        n: usize,
        /// Comma-separated increasing rational parameters (default 0..n)
        #[arg(long)]
        params: Option<String>,
        #[command(flatten)]
        io: Io,
    },
    /// Compute the chirotope of a configuration
    Chirotope {
        #[command(flatten)]
        io: Io,
    },
    /// Dualize a chirotope (canonicalized output)
    Dual {
        #[command(flatten)]
        io: Io,
    },
    /// Extend a configuration by a lexicographic program (certified epsilon
    /// echoed on standard error)
    Extend {
        /// Program, e.g. "4+,1-,6+"
        #[arg(long)]
        prog: String,
        #[command(flatten)]
        io: Io,
    },
    /// Sew a point onto a neighborly polytope through a universal flag
    Sew {
        /// Flag faces, e.g. "1 2;1 2 3 4" (default: first universal flag)
        #[arg(long)]
        flag: Option<String>,
        #[command(flatten)]
        io: Io,
    },
    /// Gale sewing step on a dual chirotope: extension by the program
    /// followed by the derived negative program
    Galesew {
        /// General-position program of dual-rank many elements (default:
        /// smallest labels, all +)
        #[arg(long)]
        prog: Option<String>,
        #[command(flatten)]
        io: Io,
    },
    /// Run a Gale sewing pipeline from a polygon seed
    Pipeline {
        /// Seed polygon size (>= 4)
        #[arg(long)]
        polygon: usize,
        /// Number of sewing steps
        #[arg(long)]
        steps: usize,
        /// Slash-separated per-step programs, e.g. "1+,2+,3+/1+,2-,4+"
        #[arg(long)]
        progs: Option<String>,
        /// Write the construction log here
        #[arg(long, value_name = "FILE")]
        log: Option<PathBuf>,
        #[command(flatten)]
        io: Io,
    },
    /// Complete a uniform rank-3 configuration to the Gale dual of a
    /// neighborly polytope (exit 1 if not found within budget)
    Complete {
        /// Search node budget (default from NEIGHBORLY_SEARCH_BUDGET or 100000)
        #[arg(long)]
        budget: Option<usize>,
        /// Write the construction log here
        #[arg(long, value_name = "FILE")]
        log: Option<PathBuf>,
        #[command(flatten)]
        io: Io,
    },
    /// Verify chirotope properties; exit 1 with a witness on failure
    Verify {
        /// Check neighborliness
        #[arg(long)]
        neighborly: bool,
        /// Check uniformity (no zero basis signs)
        #[arg(long)]
        uniform: bool,
        /// Check the three-term Grassmann-Pluecker relations
        #[arg(long)]
        gp: bool,
        /// Check that every point is a vertex of the hull
        #[arg(long)]
        acyclic: bool,
        #[command(flatten)]
        io: Io,
    },
    /// Describe the fiber of the deletion projection for a program
    Fiber {
        /// Program, e.g. "4+,1-,6+"
        #[arg(long)]
        prog: String,
        #[command(flatten)]
        io: Io,
    },
    /// Perturb a realization and report chirotope stability
    Probe {
        /// Number of perturbation trials
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Perturbation magnitude as a rational (default 1/1000000)
        #[arg(long)]
        delta: Option<String>,
        /// Seed for the deterministic noise stream
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        io: Io,
    },
    /// Replay a construction log and emit the resulting chirotope
    Replay {
        #[command(flatten)]
        io: Io,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match command {
        Command::Cyclic { d, n, params, io } => {
            let params = match params {
                Some(text) => parse_scalar_list(&text)?,
                None => default_params(n),
            };
            let v = cyclic(d, n, &params)?;
            write_output(&io, &v.to_text())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Chirotope { io } => {
            let v = read_configuration(&io)?;
            let c = Chirotope::from_configuration(&v)?;
            write_output(&io, &c.to_text())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Dual { io } => {
            let c = read_chirotope(&io)?;
            write_output(&io, &c.dual().to_text())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Extend { prog, io } => {
            let v = read_configuration(&io)?;
            let prog = LexProgram::parse(&prog)?;
            let (extended, epsilon) = lex_extend_geometric(&v, &prog)?;
            eprintln!("epsilon {epsilon}");
            write_output(&io, &extended.to_text())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sew { flag, io } => {
            let v = read_configuration(&io)?;
            let flag = match flag {
                Some(text) => Flag::parse(&text)?,
                None => {
                    let c = Chirotope::from_configuration(&v)?;
                    let search = find_universal_flags(&c, search_budget(None))?;
                    let Some(first) = search.flags.into_iter().next() else {
                        eprintln!("no universal flag found");
                        return Ok(ExitCode::from(1));
                    };
                    eprintln!("flag {first}");
                    first
                }
            };
            let (sewn, epsilon) = sew(&v, &flag)?;
            eprintln!("epsilon {epsilon}");
            write_output(&io, &sewn.to_text())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Galesew { prog, io } => {
            let c = read_chirotope(&io)?;
            let prog = match prog {
                Some(text) => LexProgram::parse(&text)?,
                None => LexProgram::new((1..=c.rank()).map(|l| (l, Sign::Plus)).collect())?,
            };
            let extended = gale_sew(&c, &prog)?;
            write_output(&io, &extended.to_text())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Pipeline {
            polygon,
            steps,
            progs,
            log,
            io,
        } => {
            let p_choices: Vec<LexProgram> = match progs {
                Some(text) => text
                    .split('/')
                    .map(LexProgram::parse)
                    .collect::<neighborly::Result<_>>()?,
                None => Vec::new(),
            };
            let result = gale_sewn_pipeline(polygon, steps, &p_choices)?;
            if let Some(path) = log {
                std::fs::write(path, result.log.to_text())?;
            }
            write_output(&io, &result.chirotope.to_text())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Complete { budget, log, io } => {
            let v = read_configuration(&io)?;
            let search = neighborly_completion(&v, search_budget(budget))?;
            eprintln!("nodes {}", search.nodes);
            match search.found {
                Some(result) => {
                    if let Some(path) = log {
                        std::fs::write(path, result.log.to_text())?;
                    }
                    write_output(&io, &result.chirotope.to_text())?;
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    eprintln!(
                        "not found within budget (exhausted: {})",
                        search.budget_exhausted
                    );
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Verify {
            neighborly,
            uniform,
            gp,
            acyclic,
            io,
        } => {
            if !(neighborly || uniform || gp || acyclic) {
                return Err(Error::InvalidArgument(
                    "verify needs at least one of --neighborly --uniform --gp --acyclic".into(),
                )
                .into());
            }
            let c = read_chirotope(&io)?;
            if uniform {
                if let Some(basis) = c.first_zero_basis() {
                    println!("not uniform: zero basis {basis:?}");
                    return Ok(ExitCode::from(1));
                }
                println!("uniform");
            }
            if gp {
                if let Some(violation) =
                    c.gp_violation(neighborly::chirotope::DEFAULT_GP_BUDGET)?
                {
                    println!("{violation}");
                    return Ok(ExitCode::from(1));
                }
                println!("gp ok");
            }
            if acyclic {
                match facets(&c) {
                    Ok(_) => println!("acyclic"),
                    Err(Error::NotAPolytope { witness }) => {
                        println!("not a polytope: element {witness} is not a vertex");
                        return Ok(ExitCode::from(1));
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            if neighborly {
                match neighborliness_witness(&c) {
                    Ok(None) => println!("neighborly"),
                    Ok(Some(subset)) => {
                        println!("not neighborly: {subset:?} is not a face");
                        return Ok(ExitCode::from(1));
                    }
                    Err(Error::NotAPolytope { witness }) => {
                        println!("not a polytope: element {witness} is not a vertex");
                        return Ok(ExitCode::from(1));
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Fiber { prog, io } => {
            let v = read_configuration(&io)?;
            let prog = LexProgram::parse(&prog)?;
            let fiber = fiber_polyhedron(&v, &prog)?;
            write_output(&io, &fiber.to_text())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Probe {
            trials,
            delta,
            seed,
            io,
        } => {
            let v = read_configuration(&io)?;
            let delta = match delta {
                Some(text) => parse_scalar(&text).map_err(|m| Error::Parse {
                    line: 1,
                    message: m,
                })?,
                None => rational(1, 1_000_000),
            };
            let report = openness_probe(&v, trials, &delta, seed.unwrap_or(DEFAULT_PROBE_SEED))?;
            write_output(&io, &report.to_text())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Replay { io } => {
            let text = read_input(&io)?;
            let log = ConstructionLog::from_text(&text)?;
            let c = log.replay_chirotope()?;
            write_output(&io, &c.to_text())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_scalar_list(text: &str) -> Result<Vec<Scalar>, Error> {
    text.split(',')
        .map(|t| {
            parse_scalar(t).map_err(|m| Error::Parse {
                line: 1,
                message: m,
            })
        })
        .collect()
}

fn search_budget(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_COMPLETION_BUDGET)
}

fn read_input(io: &Io) -> std::io::Result<String> {
    match &io.input {
        Some(path) => std::fs::read_to_string(path),
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn read_configuration(io: &Io) -> Result<VectorConfiguration, Box<dyn std::error::Error>> {
    Ok(VectorConfiguration::from_text(&read_input(io)?)?)
}

fn read_chirotope(io: &Io) -> Result<Chirotope, Box<dyn std::error::Error>> {
    Ok(Chirotope::from_text(&read_input(io)?)?)
}

/// Writes the full output in one call so partial files never appear.
fn write_output(io: &Io, text: &str) -> std::io::Result<()> {
    use std::io::Write;
    match &io.output {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}
