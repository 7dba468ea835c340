//! `findfa`: generate witnesses, apply operations, measure automata and
//! verify bounds over parameter grids.
//!
//! Exit status: 0 on success, 1 if a bound was violated, 2 on usage,
//! parse, I/O or scale errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use findfa::harness::{self, BoundReport, Op, ParamRange};
use findfa::io::{parse_dfa, serialize_dfa};
use findfa::{measures, ops, witnesses, Dfa};

#[derive(Parser)]
#[command(name = "findfa", version, about = "Incomplete DFA operations on finite languages")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write the witness automata of a family.
    Gen {
        family: Family,
        m: usize,
        n: Option<usize>,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Apply an operation to one or two automata.
    Apply {
        op: ApplyOp,
        #[arg(required = true, num_args = 1..=2)]
        files: Vec<PathBuf>,
        #[arg(long)]
        minimize: bool,
        /// Give operands and result an explicit sink state.
        #[arg(long)]
        complete_inputs: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the measures of an automaton as JSON.
    Measure {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimize an automaton.
    Minimize {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check bounds on witness grids, or on random operands with --seed.
    Verify {
        #[arg(value_parser = parse_op)]
        op: Op,
        #[arg(value_parser = parse_range)]
        m: Option<ParamRange>,
        #[arg(value_parser = parse_range)]
        n: Option<ParamRange>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        seed: Option<u64>,
        /// Random operand pairs to draw with --seed.
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Union,
    Intersection,
    Complement,
    ConcatCase1,
    ConcatCase2,
    Star,
    Reversal,
}

#[derive(Clone, Copy, ValueEnum)]
enum ApplyOp {
    Union,
    Intersection,
    Complement,
    Concat,
    Star,
    Reversal,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Md,
}

fn parse_op(s: &str) -> Result<Op, String> {
    s.parse().map_err(|e: findfa::Error| e.to_string())
}

fn parse_range(s: &str) -> Result<ParamRange, String> {
    s.parse().map_err(|e: findfa::Error| e.to_string())
}

enum Failure {
    Usage(anyhow::Error),
    Violated(usize),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Failure {
        Failure::Usage(e)
    }
}

impl From<findfa::Error> for Failure {
    fn from(e: findfa::Error) -> Failure {
        Failure::Usage(e.into())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violated(n)) => {
            eprintln!("{n} bound violation(s)");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Gen { family, m, n, out_dir } => gen(family, m, n, &out_dir),
        Cmd::Apply {
            op,
            files,
            minimize,
            complete_inputs,
            out,
        } => {
            let inputs = files.iter().map(|p| read_dfa(p)).collect::<anyhow::Result<Vec<_>>>()?;
            let d = apply(op, &inputs, minimize, complete_inputs)?;
            emit(out.as_deref(), &serialize_dfa(&d))
        }
        Cmd::Measure { file, out } => {
            let d = read_dfa(&file)?;
            let report = serde_json::json!({
                "isc": measures::isc(&d),
                "itc": measures::itc(&d),
                "sc": measures::sc(&d),
                "measures": measures::measure(&d),
            });
            let text = serde_json::to_string_pretty(&report).context("encoding measures")?;
            emit(out.as_deref(), &(text + "\n"))
        }
        Cmd::Minimize { file, out } => emit(out.as_deref(), &serialize_dfa(&read_dfa(&file)?.minimize())),
        Cmd::Verify {
            op,
            m,
            n,
            format,
            seed,
            count,
            out,
        } => verify(op, m, n, format, seed, count, out.as_deref()),
    }
}

fn read_dfa(path: &Path) -> anyhow::Result<Dfa> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_dfa(&text).with_context(|| path.display().to_string())
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn gen(family: Family, m: usize, n: Option<usize>, dir: &Path) -> Result<(), Failure> {
    let name = family.to_possible_value().unwrap().get_name().to_owned();
    let binary = matches!(
        family,
        Family::Union | Family::Intersection | Family::ConcatCase1 | Family::ConcatCase2
    );
    let dfas = match (binary, n) {
        (true, None) => return Err(anyhow::anyhow!("{name} needs two parameters, m and n").into()),
        (false, Some(_)) => return Err(anyhow::anyhow!("{name} takes a single parameter m").into()),
        (true, Some(n)) => {
            let (a, b) = match family {
                Family::Union => witnesses::union_witness(m, n),
                Family::Intersection => witnesses::intersection_witness(m, n),
                Family::ConcatCase1 => witnesses::concat_witness_case1(m, n),
                _ => witnesses::concat_witness_case2(m, n),
            }?;
            vec![(format!("{name}_{m}_{n}_A.dfa"), a), (format!("{name}_{m}_{n}_B.dfa"), b)]
        }
        (false, None) => {
            let d = match family {
                Family::Complement => witnesses::complement_witness(m),
                Family::Star => witnesses::star_witness(m),
                _ => witnesses::reversal_witness(m),
            }?;
            vec![(format!("{name}_{m}.dfa"), d)]
        }
    };
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for (file, d) in dfas {
        let path = dir.join(file);
        emit(Some(&path), &serialize_dfa(&d))?;
        println!("{}", path.display());
    }
    Ok(())
}

fn apply(op: ApplyOp, inputs: &[Dfa], minimize: bool, complete: bool) -> anyhow::Result<Dfa> {
    let binary = matches!(op, ApplyOp::Union | ApplyOp::Intersection | ApplyOp::Concat);
    let arity = if binary { 2 } else { 1 };
    if inputs.len() != arity {
        bail!("operation takes {arity} operand(s), got {}", inputs.len());
    }
    let a = &inputs[0];
    let c = match op {
        ApplyOp::Union => ops::union(a, &inputs[1])?,
        ApplyOp::Intersection => ops::intersection(a, &inputs[1])?,
        ApplyOp::Concat if complete => ops::concat_completed(a, &inputs[1])?,
        ApplyOp::Concat => ops::concat(a, &inputs[1])?,
        ApplyOp::Complement => ops::complement(a),
        ApplyOp::Star => ops::star(a)?,
        ApplyOp::Reversal => ops::reversal(a)?,
    };
    let d = if minimize { c.minimized() } else { c.dfa };
    Ok(if complete && !d.is_complete() { d.completed() } else { d })
}

fn verify(
    op: Op,
    m: Option<ParamRange>,
    n: Option<ParamRange>,
    format: Format,
    seed: Option<u64>,
    count: usize,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let reports: Vec<BoundReport> = match seed {
        Some(seed) => harness::random_soundness(seed, count)?
            .into_iter()
            .filter(|r| r.op == op)
            .collect(),
        None => {
            let Some(m) = m else {
                return Err(anyhow::anyhow!("an m range is required without --seed").into());
            };
            harness::verify_grid(op, m, n)?
        }
    };
    let text = match format {
        Format::Csv => harness::to_csv(&reports),
        Format::Md => harness::to_markdown(&reports),
    };
    emit(out, &text)?;
    match reports.iter().filter(|r| r.violated()).count() {
        0 => Ok(()),
        v => Err(Failure::Violated(v)),
    }
}
