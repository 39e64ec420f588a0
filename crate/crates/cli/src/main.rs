use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use matroid_depth::depth::{verify_certificate, DepthCertificate, Limits, Param};
use matroid_depth::format::{parse_matrix, parse_tree, write_matrix, write_tree};
use matroid_depth::graph::dual_tree_depth;
use matroid_depth::search::{
    enumerate_canonical, find_obstructions, progressive_vectors, run_suite, with_workers,
    EnumerationSpec, Suite,
};
use matroid_depth::{dual, DepthSolver, Error, Field, Matrix, MatrixTree, RepMatroid, SubspaceMatroid};

const EXIT_INPUT: u8 = 1;
const EXIT_VIOLATION: u8 = 2;
const EXIT_GUARD: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "mdepth", version, about = "Depth parameters of matroids over prime fields")]
struct Cli {
    /// Worker threads for suites and searches (0 = one per core).
    #[arg(long, global = true, env = "MDEPTH_WORKERS", default_value_t = 0)]
    workers: usize,
    /// Largest ground set the depth solvers accept (ceiling 20).
    #[arg(long, global = true, default_value_t = 12)]
    max_elements: usize,
    /// Largest number of candidate vectors per step (ceiling 100000).
    #[arg(long, global = true, default_value_t = 10_000)]
    max_candidates: usize,
    /// Largest graph for exact tree-depth (ceiling 18).
    #[arg(long, global = true, default_value_t = 18)]
    max_td_vertices: usize,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    format: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DepthParam {
    Cd,
    Dd,
    Csd,
    Dsd,
    Cbd,
    Dbd,
    Tdd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ObstructionParam {
    Cd,
    Dd,
    Csd,
    Dsd,
}

impl From<ObstructionParam> for Param {
    fn from(p: ObstructionParam) -> Param {
        match p {
            ObstructionParam::Cd => Param::Cd,
            ObstructionParam::Dd => Param::Dd,
            ObstructionParam::Csd => Param::Csd,
            ObstructionParam::Dsd => Param::Dsd,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rank of the represented matroid.
    Rank { matrix: PathBuf },
    /// All circuits, smallest first.
    Circuits { matrix: PathBuf },
    /// Connected components.
    Components { matrix: PathBuf },
    /// A representation of the dual matroid.
    Dual { matrix: PathBuf },
    /// One depth parameter, optionally with a certificate.
    Depth {
        #[arg(long, value_enum)]
        param: DepthParam,
        /// Also print a certificate (cd, dd, csd, dsd only).
        #[arg(long)]
        certificate: bool,
        matrix: PathBuf,
    },
    /// Re-verify a stored certificate.
    Certify {
        #[arg(long, value_enum)]
        param: ObstructionParam,
        matrix: PathBuf,
        certificate: PathBuf,
    },
    /// Encode a matrix as a matrix-tree document.
    EncodeTree { matrix: PathBuf },
    /// Decode a matrix-tree document.
    DecodeTree {
        #[arg(long, default_value_t = 2)]
        field: u16,
        tree: PathBuf,
    },
    /// Progressive vectors and their span property.
    Progressive { matrix: PathBuf },
    /// Deletion- or contraction-minimal matroids of a given depth.
    Obstructions {
        #[arg(long, value_enum)]
        param: ObstructionParam,
        #[arg(long)]
        depth: u32,
        #[arg(long, default_value_t = 2)]
        field: u16,
        #[arg(long, default_value_t = 2)]
        max_rows: usize,
        #[arg(long, default_value_t = 4)]
        max_cols: usize,
    },
    /// Enumerate canonical matroids.
    Enumerate {
        #[arg(long, default_value_t = 2)]
        field: u16,
        #[arg(long, default_value_t = 2)]
        max_rows: usize,
        #[arg(long, default_value_t = 3)]
        max_cols: usize,
    },
    /// Run a named property suite; may be repeated per field.
    Check {
        #[arg(long)]
        suite: String,
        #[arg(long = "field", default_values_t = [2u16])]
        fields: Vec<u16>,
        #[arg(long, default_value_t = 3)]
        max_rows: usize,
        #[arg(long, default_value_t = 4)]
        max_cols: usize,
    },
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<matroid_depth::format::ParseError> for Failure {
    fn from(e: matroid_depth::format::ParseError) -> Self {
        Failure::Lib(e.into())
    }
}

/// Report text plus a flag for a failed check that still produced output.
struct Outcome {
    text: String,
    violation: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            violation: false,
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load_matrix(path: &Path) -> Result<Matrix, Failure> {
    let text = read(path)?;
    parse_matrix(&text).map_err(|e| {
        Failure::Lib(Error::Input(format!("{}: {} [{}]", path.display(), e, e.code())))
    })
}

fn field(p: u16) -> Result<Field, Failure> {
    Field::new(p).map_err(Failure::Lib)
}

fn render(format: Output, text: String, value: Value) -> String {
    match format {
        Output::Text => text,
        Output::Json => format!("{}\n", serde_json::to_string_pretty(&value).expect("json")),
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let limits = Limits {
        max_elements: cli.max_elements,
        max_candidates: cli.max_candidates,
        max_td_vertices: cli.max_td_vertices,
        ..Limits::default()
    }
    .clamped();
    let fmt = cli.format;
    let out = match &cli.command {
        Command::Rank { matrix } => {
            let m = RepMatroid::new(load_matrix(matrix)?);
            let r = m.rank();
            Outcome::ok(render(fmt, format!("rank = {r}\n"), json!({ "rank": r })))
        }
        Command::Circuits { matrix } => {
            let m = RepMatroid::new(load_matrix(matrix)?);
            let cs = m.circuits()?;
            let text: String = cs.iter().map(|c| format!("{c}\n")).collect();
            Outcome::ok(render(fmt, text, json!({ "circuits": cs })))
        }
        Command::Components { matrix } => {
            let m = RepMatroid::new(load_matrix(matrix)?);
            let cs = m.components()?;
            let text: String = cs.iter().map(|c| format!("{c}\n")).collect();
            Outcome::ok(render(fmt, text, json!({ "components": cs })))
        }
        Command::Dual { matrix } => {
            let d = dual(&RepMatroid::new(load_matrix(matrix)?));
            Outcome::ok(write_matrix(d.matrix()))
        }
        Command::Depth {
            param,
            certificate,
            matrix,
        } => {
            let a = load_matrix(matrix)?;
            let m = RepMatroid::new(a.clone());
            let mut s = DepthSolver::new(limits);
            let (name, value, cert) = match param {
                DepthParam::Tdd => {
                    Error::guard("rows for tree-depth", limits.max_td_vertices, a.rows())?;
                    ("tdd", dual_tree_depth(&a)? as u32, None)
                }
                DepthParam::Cbd => ("cbd", s.cbd(&SubspaceMatroid::from_rep(&m))?, None),
                DepthParam::Dbd => ("dbd", s.dbd(&SubspaceMatroid::from_rep(&m))?, None),
                p => {
                    let param = match p {
                        DepthParam::Cd => Param::Cd,
                        DepthParam::Dd => Param::Dd,
                        DepthParam::Csd => Param::Csd,
                        _ => Param::Dsd,
                    };
                    let (v, c) = s.solve(param, &m)?;
                    (param.name(), v, Some(c))
                }
            };
            let cert = if *certificate {
                if cert.is_none() {
                    return Err(Failure::Lib(Error::Input(format!(
                        "no certificates for {name}"
                    ))));
                }
                cert
            } else {
                None
            };
            let mut text = format!("{name} = {value}\n");
            if let Some(c) = &cert {
                text.push_str(&c.to_json());
                text.push('\n');
            }
            let v = json!({ "param": name, "value": value, "certificate": cert });
            Outcome::ok(render(fmt, text, v))
        }
        Command::Certify {
            param,
            matrix,
            certificate,
        } => {
            let m = RepMatroid::new(load_matrix(matrix)?);
            let cert = DepthCertificate::from_json(&read(certificate)?)?;
            let param = Param::from(*param);
            match verify_certificate(&m, param, &cert) {
                Ok(()) => Outcome::ok(format!("valid: {param} <= {}\n", cert.value)),
                Err(e) => Outcome {
                    text: format!("rejected: {e}\n"),
                    violation: true,
                },
            }
        }
        Command::EncodeTree { matrix } => {
            let a = load_matrix(matrix)?;
            Error::guard("rows for tree-depth", limits.max_td_vertices, a.rows())?;
            Outcome::ok(write_tree(&MatrixTree::encode(&a)?))
        }
        Command::DecodeTree { field: p, tree } => {
            let t = parse_tree(&read(tree)?, field(*p)?)?;
            Outcome::ok(write_matrix(&t.decode()?))
        }
        Command::Progressive { matrix } => {
            let m = RepMatroid::new(load_matrix(matrix)?);
            let mut s = DepthSolver::new(limits);
            let r = progressive_vectors(&mut s, &m)?;
            let mut text = format!("csd = {}\n", r.csd);
            for v in &r.vectors {
                text.push_str(&format!("progressive {v}\n"));
            }
            text.push_str(&format!("count = {}\n", r.vectors.len()));
            for x in &r.restrictions {
                text.push_str(&format!(
                    "minimal restriction {} spans all: {}\n",
                    x.elements, x.spans_progressive
                ));
            }
            let violation = !r.span_property_holds() || !r.count_bound_holds(m.field());
            let v = json!({
                "csd": r.csd,
                "vectors": r.vectors.iter().map(|v| v.entries().to_vec()).collect::<Vec<_>>(),
                "restrictions": r.restrictions.iter().map(|x| json!({
                    "elements": x.elements,
                    "spans_progressive": x.spans_progressive,
                })).collect::<Vec<_>>(),
            });
            Outcome {
                text: render(fmt, text, v),
                violation,
            }
        }
        Command::Obstructions {
            param,
            depth,
            field: p,
            max_rows,
            max_cols,
        } => {
            let spec = EnumerationSpec::new(field(*p)?, *max_rows, *max_cols);
            let r = with_workers(cli.workers, || {
                find_obstructions(Param::from(*param), *depth, &spec, limits)
            })??;
            Outcome::ok(r.render())
        }
        Command::Enumerate {
            field: p,
            max_rows,
            max_cols,
        } => {
            let spec = EnumerationSpec::new(field(*p)?, *max_rows, *max_cols);
            let text = with_workers(cli.workers, || -> Result<String, Error> {
                Ok(enumerate_canonical(&spec)?
                    .map(|m| format!("{}\n", m.matrix()))
                    .collect())
            })??;
            Outcome::ok(text)
        }
        Command::Check {
            suite,
            fields,
            max_rows,
            max_cols,
        } => {
            let suite: Suite = suite.parse()?;
            let mut text = String::new();
            let mut violation = false;
            for &p in fields {
                let spec = EnumerationSpec::new(field(p)?, *max_rows, *max_cols);
                let r = run_suite(suite, &spec, limits, cli.workers)?;
                violation |= !r.passed();
                text.push_str(&r.render());
            }
            Outcome { text, violation }
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            if out.violation {
                ExitCode::from(EXIT_VIOLATION)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            let (msg, code) = match f {
                Failure::Lib(e) if e.is_guard() => (e.to_string(), EXIT_GUARD),
                Failure::Lib(e) => (e.to_string(), EXIT_INPUT),
                Failure::Io(m) => (m, EXIT_INPUT),
            };
            eprintln!("mdepth: {msg}");
            ExitCode::from(code)
        }
    }
}
