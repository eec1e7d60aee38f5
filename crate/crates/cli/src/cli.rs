//! The `patience` command-line tool.
//!
//! Exit codes: 0 on success (and all-PASS verify runs), 1 when a verify
//! suite fails, 2 on usage or input errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use patience_core::enumeration::{
    bell_sequence, convolution_matrix, fibonacci_sequence, inverse_matrix, CountTable,
};
use patience_core::geometry::{exhaustive_iterates, shadow_diagram, ShadowDiagram};
use patience_core::patience::{extended_patience_sort, invert_extended, patience_sort};
use patience_core::patterns::{
    avoids_word, parse_pattern, GenPattern, COUNT_ORACLE_BOUND, SET_ORACLE_BOUND,
};
use patience_core::perm::Permutation;
use patience_core::OracleBoundExceeded;

use crate::formats;
use crate::sweep;
use crate::verify;

#[derive(Parser)]
#[command(
    name = "patience",
    version,
    about = "Patience sorting, its two-pile bijection, barred pattern avoidance, \
             shadow diagrams, and exact enumeration"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DiagramFormat {
    Json,
    Svg,
}

#[derive(Subcommand)]
pub enum Command {
    /// Deal a permutation into its pile configuration
    Sort {
        /// Permutation: "6,4,5,1,8,7,2,3" or "64518723" for n <= 9
        perm: String,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Insertion and recording piles of the extended algorithm, as JSON
    Extended { perm: String },
    /// Reverse patience word of the pile configuration
    Rpw { perm: String },
    /// Rebuild the unique permutation from a stable pair
    Invert {
        /// Inline JSON (starting with '{') or a path to a JSON file
        #[arg(long)]
        pair: String,
    },
    /// Count or list the permutations avoiding the given patterns
    Avoid {
        /// Pattern such as "3-!1-42"; repeat the flag to intersect sets
        #[arg(long = "pattern", required = true)]
        patterns: Vec<String>,
        #[arg(long)]
        n: usize,
        /// Print the cardinality only
        #[arg(long)]
        count: bool,
        /// Print one permutation per line
        #[arg(long)]
        list: bool,
    },
    /// Shadow diagram of a permutation, or one of its iterates
    Shadow {
        perm: String,
        /// Which iterate to render (0 is the diagram of the plot)
        #[arg(long, conflicts_with = "all")]
        iterate: Option<usize>,
        /// Render every nonempty iterate
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Json)]
        format: DiagramFormat,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Number tables: counts, Bell, Fibonacci, and the coefficient matrices
    Enumerate {
        /// Invertibility counts f(0), .., f(N)
        #[arg(long)]
        f: Option<usize>,
        /// Bell numbers B_0, .., B_N
        #[arg(long)]
        bell: Option<usize>,
        /// Fibonacci numbers F_0, .., F_N
        #[arg(long)]
        fib: Option<usize>,
        /// N x N coefficient matrix of convolved Fibonacci numbers
        #[arg(long)]
        matrix: Option<usize>,
        /// N x N resolvent (I - A)^-1
        #[arg(long)]
        inverse: Option<usize>,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Run one of the named verification suites
    Verify {
        /// One of: thm2.2 cor2.4 prop3.1 prop3.2 cor3.4 thm3.5 thm3.6 thm3.7 thm3.9 series
        #[arg(long)]
        suite: String,
        /// Exhaustive bound (group size, or series degree for "series")
        #[arg(long)]
        n: usize,
    },
}

/// Parses `argv` and executes; output goes to `out`, diagnostics to `err`.
/// Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn parse_perm(text: &str) -> Result<Permutation, String> {
    text.parse::<Permutation>()
        .map_err(|e| format!("bad permutation {text:?}: {e}"))
}

fn parse_patterns(texts: &[String]) -> Result<Vec<GenPattern>, String> {
    texts
        .iter()
        .map(|t| parse_pattern(t).map_err(|e| format!("bad pattern {t:?}: {e}")))
        .collect()
}

fn execute(cmd: Command, out: &mut impl Write) -> Result<i32, String> {
    let io_err = |e: std::io::Error| format!("write failed: {e}");
    match cmd {
        Command::Sort { perm, format } => {
            let r = patience_sort(&parse_perm(&perm)?);
            let line = match format {
                TableFormat::Text => formats::pile_config_text(&r),
                TableFormat::Json => formats::pile_config_to_json(&r),
            };
            writeln!(out, "{line}").map_err(io_err)?;
            Ok(0)
        }
        Command::Extended { perm } => {
            let pair = extended_patience_sort(&parse_perm(&perm)?);
            writeln!(out, "{}", formats::stable_pair_to_json(&pair)).map_err(io_err)?;
            Ok(0)
        }
        Command::Rpw { perm } => {
            let r = patience_sort(&parse_perm(&perm)?);
            writeln!(out, "{}", r.reverse_patience_word()).map_err(io_err)?;
            Ok(0)
        }
        Command::Invert { pair } => {
            let text = if pair.trim_start().starts_with('{') {
                pair
            } else {
                fs::read_to_string(&pair).map_err(|e| format!("cannot read {pair:?}: {e}"))?
            };
            let stable = formats::stable_pair_from_json(&text).map_err(|e| e.to_string())?;
            let p = invert_extended(&stable).map_err(|e| format!("malformed pair: {e}"))?;
            writeln!(out, "{p}").map_err(io_err)?;
            Ok(0)
        }
        Command::Avoid {
            patterns,
            n,
            count,
            list,
        } => {
            if count == list {
                return Err("pass exactly one of --count or --list".into());
            }
            let pats = parse_patterns(&patterns)?;
            if count {
                if n > COUNT_ORACLE_BOUND {
                    return Err(OracleBoundExceeded {
                        n,
                        bound: COUNT_ORACLE_BOUND,
                    }
                    .to_string());
                }
                let c = sweep::sweep_count(n, |w| pats.iter().all(|p| avoids_word(w, p)));
                writeln!(out, "{c}").map_err(io_err)?;
            } else {
                if n > SET_ORACLE_BOUND {
                    return Err(OracleBoundExceeded {
                        n,
                        bound: SET_ORACLE_BOUND,
                    }
                    .to_string());
                }
                let mut lines = String::new();
                patience_core::perm::for_each_permutation(n, |w| {
                    if pats.iter().all(|p| avoids_word(w, p)) {
                        lines.push_str(&word_line(w));
                    }
                });
                write!(out, "{lines}").map_err(io_err)?;
            }
            Ok(0)
        }
        Command::Shadow {
            perm,
            iterate,
            all,
            format,
            out: out_path,
        } => {
            let p = parse_perm(&perm)?;
            let payload = if all {
                let diagrams = exhaustive_iterates(&p);
                match format {
                    DiagramFormat::Json => format!("{}\n", formats::diagrams_to_json(&diagrams)),
                    DiagramFormat::Svg => formats::diagrams_to_svg(&diagrams),
                }
            } else {
                let mut d = shadow_diagram(&p);
                for _ in 0..iterate.unwrap_or(0) {
                    d = d.iterate();
                }
                match format {
                    DiagramFormat::Json => format!("{}\n", formats::diagram_to_json(&d)),
                    DiagramFormat::Svg => {
                        formats::diagrams_to_svg(std::slice::from_ref::<ShadowDiagram>(&d))
                    }
                }
            };
            match out_path {
                Some(path) => {
                    fs::write(&path, payload).map_err(|e| format!("cannot write {path:?}: {e}"))?
                }
                None => write!(out, "{payload}").map_err(io_err)?,
            }
            Ok(0)
        }
        Command::Enumerate {
            f,
            bell,
            fib,
            matrix,
            inverse,
            format,
        } => {
            let chosen = [f.is_some(), bell.is_some(), fib.is_some(), matrix.is_some(), inverse.is_some()]
                .iter()
                .filter(|&&b| b)
                .count();
            if chosen != 1 {
                return Err(
                    "pass exactly one of --f, --bell, --fib, --matrix, --inverse".into()
                );
            }
            let text = if let Some(n) = f {
                sequence_output(format, "f", CountTable::build(n).totals())
            } else if let Some(n) = bell {
                sequence_output(format, "bell", &bell_sequence(n))
            } else if let Some(n) = fib {
                sequence_output(format, "fib", &fibonacci_sequence(n))
            } else if let Some(n) = matrix {
                triangle_output(format, "matrix", &convolution_matrix(n))
            } else {
                triangle_output(format, "inverse", &inverse_matrix(inverse.unwrap()))
            };
            write!(out, "{text}").map_err(io_err)?;
            Ok(0)
        }
        Command::Verify { suite, n } => match verify::run_suite(&suite, n) {
            None => Err(format!(
                "unknown suite {suite:?}; expected one of: {}",
                verify::SUITE_NAMES.join(", ")
            )),
            Some(report) => {
                write!(out, "{}", report.render()).map_err(io_err)?;
                Ok(if report.all_pass() { 0 } else { 1 })
            }
        },
    }
}

fn word_line(w: &[u32]) -> String {
    let mut s = w
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",");
    s.push('\n');
    s
}

fn sequence_output(
    format: TableFormat,
    key: &str,
    vals: &[patience_core::enumeration::BigUint],
) -> String {
    match format {
        TableFormat::Text => format!("{}\n", formats::sequence_text(vals)),
        TableFormat::Json => format!("{}\n", formats::sequence_to_json(key, vals)),
    }
}

fn triangle_output(
    format: TableFormat,
    key: &str,
    m: &patience_core::enumeration::LowerTriangular,
) -> String {
    match format {
        TableFormat::Text => formats::triangle_text(m),
        TableFormat::Json => format!("{}\n", formats::triangle_to_json(key, m)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(args.iter().copied(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn sort_text_output() {
        let (code, out, _) = capture(&["patience", "sort", "64518723"]);
        assert_eq!(code, 0);
        assert_eq!(out, "6 4 1 | 5 2 | 8 7 3\n");
    }

    #[test]
    fn extended_and_invert_roundtrip() {
        let (code, out, _) = capture(&["patience", "extended", "64518723"]);
        assert_eq!(code, 0);
        assert_eq!(
            out.trim_end(),
            r#"{"n":8,"R":[[6,4,1],[5,2],[8,7,3]],"S":[[1,2,4],[3,7],[5,6,8]]}"#
        );
        let (code, back, _) = capture(&["patience", "invert", "--pair", out.trim_end()]);
        assert_eq!(code, 0);
        assert_eq!(back, "6,4,5,1,8,7,2,3\n");
    }

    #[test]
    fn rpw_of_the_worked_example() {
        let (code, out, _) = capture(&["patience", "rpw", "64518723"]);
        assert_eq!(code, 0);
        assert_eq!(out, "6,4,1,5,2,8,7,3\n");
    }

    #[test]
    fn avoid_count_and_list() {
        let (code, out, _) = capture(&[
            "patience", "avoid", "--pattern", "3-!1-42", "--n", "5", "--count",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "52\n");
        let (code, out, _) = capture(&[
            "patience", "avoid", "--pattern", "21", "--n", "3", "--list",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "1,2,3\n");
    }

    #[test]
    fn avoid_requires_exactly_one_mode() {
        let (code, _, err) = capture(&[
            "patience", "avoid", "--pattern", "21", "--n", "3",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("exactly one"));
    }

    #[test]
    fn oracle_bounds_are_reported_distinctly() {
        let (code, _, err) = capture(&[
            "patience", "avoid", "--pattern", "21", "--n", "99", "--count",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("oracle bound exceeded"));
    }

    #[test]
    fn usage_errors_exit_2() {
        let (code, _, err) = capture(&["patience", "frobnicate"]);
        assert_eq!(code, 2);
        assert!(!err.is_empty());
        let (code, out, _) = capture(&["patience", "--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("patience"));
    }

    #[test]
    fn enumerate_sequences() {
        let (code, out, _) = capture(&["patience", "enumerate", "--f", "10"]);
        assert_eq!(code, 0);
        assert_eq!(out, "1 1 2 4 9 23 66 209 718 2645 10373\n");
        let (code, out, _) = capture(&[
            "patience", "enumerate", "--bell", "5", "--format", "json",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"bell\":[\"1\",\"1\",\"2\",\"5\",\"15\",\"52\"]}\n");
        let (code, _, err) = capture(&["patience", "enumerate"]);
        assert_eq!(code, 2);
        assert!(err.contains("exactly one"));
    }

    #[test]
    fn verify_suite_exit_codes() {
        let (code, out, _) = capture(&["patience", "verify", "--suite", "thm3.9", "--n", "5"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("suite thm3.9"));
        assert!(out.contains("PASS"));
        let (code, _, err) = capture(&["patience", "verify", "--suite", "nope", "--n", "3"]);
        assert_eq!(code, 2);
        assert!(err.contains("unknown suite"));
    }

    #[test]
    fn shadow_json_default() {
        let (code, out, _) = capture(&["patience", "shadow", "45312"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["iterate"], 0);
        assert_eq!(v["crossings"].as_array().unwrap().len(), 2);
    }
}
