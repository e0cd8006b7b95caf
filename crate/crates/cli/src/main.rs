//! `susp7`: suspension splittings of 7-manifolds away from 2.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use susp7_core::abelian::localize_away_from_2;
use susp7_core::checker::verify_homology;
use susp7_core::corpus::{self, CorpusEntry};
use susp7_core::decompose::{decompose, stage};
use susp7_core::invariants::{validate, RawDescriptor};
use susp7_core::reduce::canonical_form;
use susp7_core::tables::{maps_from_moore, pi_moore, pi_sphere, smash_moore, PiEntry};
use susp7_core::wedge::parse_atom;
use susp7_core::{Error, ManifoldDescriptor, RawGroup, ReductionVector};

#[derive(Parser)]
#[command(name = "susp7", version, about = "Suspension splittings of simply connected 7-manifolds away from 2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Splitting of the (double) suspension as a canonical wedge.
    Decompose {
        /// Descriptor JSON file, `-` for stdin.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=2))]
        suspensions: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Also print the case and the reasoning steps.
        #[arg(long)]
        trace: bool,
    },
    /// Suspended homology-decomposition stage.
    Stage {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..=5))]
        level: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Compare the homology of a decomposition with that of the manifold.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=2))]
        suspensions: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Canonical form of a mod-3 attaching vector, with a witness.
    ReduceVector {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        entries: Vec<i64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Homotopy tables.
    Tables {
        #[command(subcommand)]
        command: TablesCommand,
    },
    /// Built-in worked cases.
    Corpus {
        #[command(subcommand)]
        command: CorpusCommand,
    },
}

#[derive(Subcommand)]
enum TablesCommand {
    /// A homotopy group of a sphere or a Moore space.
    Pi {
        /// `n,p,e` for P^n(p^e).
        #[arg(long, value_parser = parse_triple, required_unless_present = "sphere", conflicts_with = "sphere")]
        moore: Option<(u32, u64, u32)>,
        #[arg(long)]
        sphere: Option<u32>,
        #[arg(long)]
        degree: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Smash product of two Moore spaces.
    Smash {
        /// `m,p,r` for P^m(p^r).
        #[arg(long, value_parser = parse_triple)]
        left: (u32, u64, u32),
        /// `n,q,s` for P^n(q^s).
        #[arg(long, value_parser = parse_triple)]
        right: (u32, u64, u32),
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Homotopy classes of maps out of a Moore space.
    Maps {
        /// n in P^n(A).
        #[arg(long)]
        degree: u32,
        /// Cyclic orders of A, e.g. `9,5`.
        #[arg(long, value_delimiter = ',')]
        source: Vec<u64>,
        /// Target atom, e.g. `S^4` or `P^5(3)`.
        #[arg(long)]
        target: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// Decompose every entry and compare with the expected wedge.
    Run {
        /// Corpus JSON file instead of the built-in one.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// How a command failed; each maps to its own exit code.
enum Failure {
    Input(anyhow::Error),
    NeedsDoubleSuspension { h: String, t: String },
    Verification(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<Error>() {
            Some(Error::NeedsDoubleSuspension { h, t }) => Failure::NeedsDoubleSuspension { h: h.clone(), t: t.clone() },
            _ => Failure::Input(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::from(anyhow::Error::new(e))
    }
}

fn parse_triple(s: &str) -> Result<(u32, u64, u32), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [a, b, c] = parts[..] else {
        return Err(format!("expected three comma-separated integers, got `{s}`"));
    };
    let bad = |x: &str| format!("`{x}` is not a non-negative integer");
    Ok((a.parse().map_err(|_| bad(a))?, b.parse().map_err(|_| bad(b))?, c.parse().map_err(|_| bad(c))?))
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

/// Parses and validates a descriptor, sending warnings to stderr.
fn load_descriptor(path: &Path) -> anyhow::Result<ManifoldDescriptor> {
    let text = read_input(path)?;
    let raw: RawDescriptor =
        serde_json::from_str(&text).with_context(|| format!("parsing descriptor {}", path.display()))?;
    let validated = validate(&raw)?;
    for w in &validated.warnings {
        eprintln!("warning: {w}");
    }
    Ok(validated.descriptor)
}

fn print_json(value: &impl serde::Serialize) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn print_pi(entry: &PiEntry, format: Format) -> anyhow::Result<()> {
    match format {
        Format::Json => print_json(entry),
        Format::Text => {
            match entry.generator {
                Some(g) => println!("{} generated by {g}", entry.group),
                None => println!("{}", entry.group),
            }
            println!("source: {}", entry.source);
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Decompose { input, suspensions, format, trace } => {
            let desc = load_descriptor(&input)?;
            let result = decompose(&desc, suspensions)?;
            match format {
                Format::Json => print_json(&result)?,
                Format::Text => {
                    println!("{}", result.wedge);
                    if trace {
                        println!("case: {}", result.case);
                        for step in &result.trace {
                            println!("  {step}");
                        }
                    }
                }
            }
        }
        Command::Stage { input, level, format } => {
            let desc = load_descriptor(&input)?;
            let wedge = stage(&desc, level)?;
            match format {
                Format::Json => print_json(&wedge)?,
                Format::Text => println!("{wedge}"),
            }
        }
        Command::Verify { input, suspensions, format } => {
            let desc = load_descriptor(&input)?;
            let result = decompose(&desc, suspensions)?;
            let report = verify_homology(&desc, &result);
            match format {
                Format::Json => print_json(&report)?,
                Format::Text => println!("{report}"),
            }
            if !report.pass {
                let degrees: Vec<String> = report.failures().map(|r| r.degree.to_string()).collect();
                return Err(Failure::Verification(format!("homology differs in degrees {}", degrees.join(", "))));
            }
        }
        Command::ReduceVector { entries, format } => {
            let v = ReductionVector::new(entries);
            let red = canonical_form(&v);
            match format {
                Format::Json => print_json(&json!({
                    "input": v.entries(),
                    "form": red.form.entries(),
                    "witness": red.witness,
                }))?,
                Format::Text => {
                    println!("{}", red.form);
                    let moves: Vec<String> = red.witness.iter().map(ToString::to_string).collect();
                    println!("witness: {}", if moves.is_empty() { "none".to_string() } else { moves.join("; ") });
                }
            }
        }
        Command::Tables { command } => run_tables(command)?,
        Command::Corpus { command: CorpusCommand::Run { file, format } } => {
            let entries = match file {
                Some(path) => corpus::load(&read_input(&path)?)?,
                None => corpus::golden(),
            };
            run_corpus(&entries, format)?;
        }
    }
    Ok(())
}

fn run_tables(command: TablesCommand) -> Result<(), Failure> {
    match command {
        TablesCommand::Pi { moore, sphere, degree, format } => {
            let entry = match (moore, sphere) {
                (Some((n, p, e)), _) => pi_moore(n, p, e, degree)?,
                (None, Some(n)) => pi_sphere(n, degree)?,
                (None, None) => unreachable!("clap requires one of --moore, --sphere"),
            };
            print_pi(&entry, format)?;
        }
        TablesCommand::Smash { left: (m, p, r), right: (n, q, s), format } => {
            let w = smash_moore(m, p, r, n, q, s)?;
            match format {
                Format::Json => print_json(&w)?,
                Format::Text => println!("{w}"),
            }
        }
        TablesCommand::Maps { degree, source, target, format } => {
            let group = localize_away_from_2(&RawGroup::from_orders(0, &source))?.group;
            let atoms = parse_atom(target.trim())?;
            let [atom] = atoms[..] else {
                return Err(Failure::Input(anyhow::anyhow!("target must be a single atom, got `{target}`")));
            };
            let maps = maps_from_moore(degree, &group, &atom)?;
            match format {
                Format::Json => print_json(&maps)?,
                Format::Text => {
                    println!("[P^{degree}({group}), {atom}]");
                    println!("  tensor part: {}", maps.tensor_part);
                    println!("  tor part:    {}", maps.tor_part);
                    match &maps.group {
                        Some(g) => println!("  group:       {g}"),
                        None => println!("  group:       extension undetermined"),
                    }
                    match maps.order() {
                        Some(o) => println!("  order:       {o}"),
                        None => println!("  order:       infinite"),
                    }
                    println!("  null when trivial on homology: {}", maps.null_if_homology_trivial);
                    for s in &maps.sources {
                        println!("  source: {s}");
                    }
                }
            }
        }
    }
    Ok(())
}

fn run_corpus(entries: &[CorpusEntry], format: Format) -> Result<(), Failure> {
    let mut outcomes = Vec::new();
    let mut failed = 0;
    for e in entries {
        match e.run() {
            Ok(o) => {
                failed += usize::from(!o.pass);
                outcomes.push(o);
            }
            Err(err) => {
                failed += 1;
                if let Format::Text = format {
                    println!("FAIL {}: {err}", e.name);
                }
            }
        }
    }
    match format {
        Format::Json => print_json(&json!({
            "passed": entries.len() - failed,
            "total": entries.len(),
            "entries": outcomes,
        }))?,
        Format::Text => {
            for o in &outcomes {
                if o.pass {
                    println!("PASS {}: {}", o.name, o.emitted);
                } else {
                    println!("FAIL {}: got {} [{}], expected {}", o.name, o.emitted, o.case, o.expected);
                }
            }
            println!("{}/{} passed", entries.len() - failed, entries.len());
        }
    }
    if failed > 0 {
        return Err(Failure::Verification(format!("{failed} corpus entries failed")));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Usage errors share the parse/validation exit code.
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::NeedsDoubleSuspension { h, t }) => {
            let reason = json!({
                "error": "needs_double_suspension",
                "H": h,
                "T": t,
                "message": "both H and T are nonzero away from 2; use --suspensions 2",
            });
            eprintln!("{reason}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

#[cfg(test)]
mod tests {
    use anyhow::bail;

    use super::*;

    #[test]
    fn triples() {
        assert_eq!(parse_triple("4, 3,2"), Ok((4, 3, 2)));
        assert!(parse_triple("4,3").is_err());
        assert!(parse_triple("4,x,2").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn bail_is_input_failure() {
        let f: Failure = (|| -> anyhow::Result<()> { bail!("nope") })().unwrap_err().into();
        assert!(matches!(f, Failure::Input(_)));
    }
}
