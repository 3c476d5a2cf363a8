use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use polydouble::{FieldTag, SpaceKind};
use polydouble_cli::checks::{self, Check, Options, Outcome};
use polydouble_cli::spec::{self, Spec};
use polydouble_cli::{describe, parallel, render_vertices};

#[derive(Parser)]
#[command(
    name = "poly",
    version,
    about = "Doubling of simple polytopes, checked exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Facet count, dimension, f- and h-polynomials, minimal non-face count.
    Describe { spec: String },
    /// Checks an identity on a polytope, or on every built-in one with `catalog`.
    Verify {
        /// theorem3, lemma2, operator, dring, productdouble, geomdouble,
        /// lemma6, trc, facetsplit or all.
        which: String,
        spec: String,
        #[arg(long, value_enum, default_value = "Q")]
        field: Field,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Betti table of the moment-angle complex (Z) or its real version (R).
    Betti {
        spec: String,
        #[arg(long, value_enum)]
        space: Space,
        #[arg(long, value_enum, default_value = "Q")]
        field: Field,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Vertices of an H-representation file.
    Vertices { spec: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Field {
    #[value(name = "Q")]
    Q,
    #[value(name = "F2")]
    F2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Space {
    #[value(name = "Z")]
    Z,
    #[value(name = "R")]
    R,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Jsonl,
}

impl From<Field> for FieldTag {
    fn from(f: Field) -> FieldTag {
        match f {
            Field::Q => FieldTag::Rationals,
            Field::F2 => FieldTag::TwoElementField,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` when some verification failed.
fn run(command: Command) -> Result<bool> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Describe { spec } => {
            let p = Spec::parse(&spec)?.dual()?;
            writeln!(out, "{}", describe(&p))?;
            Ok(true)
        }
        Command::Betti {
            spec,
            space,
            field,
            threads,
        } => {
            let p = Spec::parse(&spec)?.dual()?;
            let space = match space {
                Space::Z => SpaceKind::Z,
                Space::R => SpaceKind::R,
            };
            let table = parallel::hochster_betti(p.complex(), space, field.into(), threads)?;
            writeln!(out, "{table}")?;
            Ok(true)
        }
        Command::Vertices { spec } => {
            let Spec::Hrep(path) = Spec::parse(&spec)? else {
                bail!("vertices expects hrep:PATH");
            };
            let system = polydouble_cli::files::read_hrep(&path)?;
            write!(out, "{}", render_vertices(&system))?;
            Ok(true)
        }
        Command::Verify {
            which,
            spec,
            field,
            threads,
            format,
        } => {
            let which = match which.as_str() {
                "all" => None,
                name => Some(name.parse::<Check>()?),
            };
            let specs = if spec == "catalog" {
                spec::catalog()
            } else {
                vec![Spec::parse(&spec)?]
            };
            let opts = Options {
                field: field.into(),
                threads,
            };
            let mut pass = true;
            for spec in &specs {
                let p = spec.dual()?;
                let outcomes: Vec<Outcome> = match which {
                    Some(check) => checks::run(check, spec, &p, opts)?,
                    None => checks::run_all(spec, &p, opts),
                };
                for o in &outcomes {
                    pass &= !o.failed();
                    match format {
                        Format::Text => writeln!(out, "{o}")?,
                        Format::Jsonl => writeln!(out, "{}", o.to_jsonl())?,
                    }
                }
            }
            Ok(pass)
        }
    }
}
