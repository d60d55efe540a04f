use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fltl::analysis::{is_satisfiable, run};
use fltl::bench::{bench, parse_corpus, to_csv, EdgeCount};
use fltl::export::{export, Format};
use fltl::gen::corpus;
use fltl::normalform::{anf, anf_relaxed};
use fltl::semantics::{sat, translate_ltlf};
use fltl::tableau::{build_with, merge_edges, prune_dead, BuildOptions};
use fltl::{parse, Error, Formula, PropName, Trace};

#[derive(Parser)]
#[command(name = "fltl", version, about = "Compile Finite LTL formulas to NFAs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FormulaInput {
    /// Formula text
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    formula: Option<String>,
    /// Read the formula from a file instead
    #[arg(long, short)]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Relaxed,
    Strict,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum EdgesArg {
    Merged,
    Clauses,
    Concrete,
}

#[derive(Subcommand)]
enum Command {
    /// Build the automaton for a formula
    Compile {
        #[command(flatten)]
        input: FormulaInput,
        #[arg(long, value_enum, default_value = "relaxed")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "dot")]
        format: FormatArg,
        /// Drop states that cannot reach an accepting state
        #[arg(long)]
        prune: bool,
        /// Keep one edge per clause instead of merging parallel edges
        #[arg(long)]
        raw: bool,
        /// Comma-separated alphabet; defaults to the formula's atoms
        #[arg(long, value_delimiter = ',')]
        ap: Vec<String>,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Run each trace of a file through the automaton
    Check {
        /// FORMULA TRACE_FILE, or just TRACE_FILE with --file
        #[arg(num_args = 1..=2, required = true, value_names = ["FORMULA", "TRACE_FILE"])]
        args: Vec<String>,
        #[arg(long, short)]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "relaxed")]
        mode: ModeArg,
        /// Also print the reference semantics verdict
        #[arg(long)]
        oracle: bool,
    },
    /// Decide satisfiability and print a shortest witness
    Sat {
        #[command(flatten)]
        input: FormulaInput,
    },
    /// Print the Finite LTL encoding of an LTL_f formula
    #[command(name = "translate-ltlf", alias = "translate_ltlf")]
    TranslateLtlf {
        #[command(flatten)]
        input: FormulaInput,
    },
    /// Print the automaton normal form, one clause per line
    Anf {
        #[command(flatten)]
        input: FormulaInput,
        /// Group clauses by successor with arbitrary propositional guards
        #[arg(long)]
        relaxed: bool,
    },
    /// Measure construction over a corpus and write CSV
    #[command(group(clap::ArgGroup::new("source").required(true).args(["corpus", "generate"])))]
    Bench {
        /// One formula per line, `#` starts a comment
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Use the built-in generated corpus with this seed
        #[arg(long)]
        generate: Option<u64>,
        /// Per-formula timeout in seconds
        #[arg(long, default_value_t = 60.0)]
        timeout: f64,
        #[arg(long, value_enum, default_value = "merged")]
        edges: EdgesArg,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn formula_from(text: Option<&str>, file: Option<&PathBuf>) -> Result<Formula, Failure> {
    let text = match (text, file) {
        (_, Some(path)) => read(path)?,
        (Some(t), None) => t.to_owned(),
        (None, None) => return Err(Failure::Usage("no formula given".into())),
    };
    Ok(parse(text.trim())?)
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn options(mode: ModeArg) -> BuildOptions {
    match mode {
        ModeArg::Relaxed => BuildOptions::default(),
        ModeArg::Strict => BuildOptions::strict(),
    }
}

fn execute(command: Command) -> Result<(), Failure> {
    match command {
        Command::Compile { input, mode, format, prune, raw, ap, out } => {
            let f = formula_from(input.formula.as_deref(), input.file.as_ref())?;
            let mut opts = options(mode);
            if !ap.is_empty() {
                let names = ap.iter().map(|a| PropName::new(a.trim())).collect::<Result<_, _>>()?;
                opts = opts.with_alphabet(names);
            }
            let mut nfa = build_with(&f, &opts)?;
            if !raw {
                nfa = merge_edges(&nfa);
            }
            if prune {
                nfa = prune_dead(&nfa);
            }
            let format = match format {
                FormatArg::Dot => Format::Dot,
                FormatArg::Json => Format::Json,
            };
            emit(&export(&nfa, format), out.as_ref())
        }
        Command::Check { args, file, mode, oracle } => {
            let (formula_text, trace_path) = match (&file, args.as_slice()) {
                (Some(_), [traces]) => (None, PathBuf::from(traces)),
                (None, [formula, traces]) => (Some(formula.as_str()), PathBuf::from(traces)),
                _ => return Err(Failure::Usage("expected FORMULA TRACE_FILE or --file F TRACE_FILE".into())),
            };
            let f = formula_from(formula_text, file.as_ref())?;
            let traces = Trace::parse_lines(&read(&trace_path)?)?;
            let alphabet: BTreeSet<PropName> =
                f.atoms().into_iter().chain(traces.iter().flat_map(Trace::atoms)).collect();
            let nfa = build_with(&f, &options(mode).with_alphabet(alphabet))?;
            let verdict = |b: bool| if b { "ACCEPT" } else { "REJECT" };
            let mut mismatch = false;
            for t in &traces {
                let accepted = run(&nfa, t)?;
                if oracle {
                    let expected = sat(t, &f);
                    let flag = if accepted == expected { "" } else { " MISMATCH" };
                    mismatch |= accepted != expected;
                    println!("{} oracle={}{flag}", verdict(accepted), verdict(expected));
                } else {
                    println!("{}", verdict(accepted));
                }
            }
            if mismatch {
                Err(Failure::Mismatch)
            } else {
                Ok(())
            }
        }
        Command::Sat { input } => {
            let f = formula_from(input.formula.as_deref(), input.file.as_ref())?;
            match is_satisfiable(&f) {
                Some(w) => println!("SAT\n{}", w.trace),
                None => println!("UNSAT"),
            }
            Ok(())
        }
        Command::TranslateLtlf { input } => {
            let f = formula_from(input.formula.as_deref(), input.file.as_ref())?;
            println!("{}", translate_ltlf(&f));
            Ok(())
        }
        Command::Anf { input, relaxed } => {
            let f = formula_from(input.formula.as_deref(), input.file.as_ref())?.to_pnf();
            if relaxed {
                for c in anf_relaxed(&f)? {
                    println!("{c}");
                }
            } else {
                for c in anf(&f)?.clauses {
                    println!("{c}");
                }
            }
            Ok(())
        }
        Command::Bench { corpus: file, generate, timeout, edges, out } => {
            let formulas = match (file, generate) {
                (Some(path), _) => parse_corpus(&read(&path)?)?,
                (None, Some(seed)) => corpus(seed),
                (None, None) => unreachable!("clap requires a source"),
            };
            if !(timeout.is_finite() && timeout > 0.0) {
                return Err(Failure::Usage(format!("invalid timeout {timeout}")));
            }
            let edges = match edges {
                EdgesArg::Merged => EdgeCount::Merged,
                EdgesArg::Clauses => EdgeCount::Clauses,
                EdgesArg::Concrete => EdgeCount::Concrete,
            };
            let records = bench(&formulas, Duration::from_secs_f64(timeout), edges);
            emit(&to_csv(&records), out.as_ref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch) => ExitCode::from(2),
    }
}
