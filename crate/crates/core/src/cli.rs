//! The `braidrep` command line.
//!
//! Exit codes: 0 when a run matches the expected outcome (for `verify`, a
//! homomorphism for A, B and I2 types and a non-homomorphism for D4), 1 when
//! it does not, 2 on bad input or a refused request.

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::coxeter::{CoxeterType, Family};
use crate::garside::{BraidElement, BraidWord};
use crate::realization::type_a_realization;
use crate::render::{render_ascii, render_svg};
use crate::reprmap::{
    apply_map, build_for_type, injectivity_scan_i2_2, is_homomorphism, kernel_scan, verify,
    ScanReport, VerifyOptions, DEFAULT_MAX_WORD_LENGTH, DEFAULT_SAMPLES, DEFAULT_SCAN_CAP,
    DEFAULT_SEED,
};

pub const SEED_ENV: &str = "BRAIDREP_SEED";

#[derive(Debug, Parser)]
#[command(name = "braidrep", version, about = "Check braid-group lifts of Coxeter group embeddings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DiagramFormat {
    Ascii,
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check whether the built-in lift for a type is a homomorphism.
    Verify {
        /// Coxeter type, e.g. A5, B4, D4, I2(6).
        #[arg(value_name = "TYPE")]
        coxeter_type: String,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Random words for the projection check.
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_WORD_LENGTH)]
        max_length: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Print the Garside normal form of a braid word.
    Nf {
        #[arg(long)]
        strands: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Apply the built-in lift to a word in the source generators.
    Map {
        #[arg(value_name = "TYPE")]
        coxeter_type: String,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Draw a braid word.
    Render {
        #[arg(long)]
        strands: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: DiagramFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for kernel elements and image collisions up to a bound.
    Scan {
        #[arg(value_name = "TYPE")]
        coxeter_type: String,
        #[arg(long)]
        bound: usize,
        /// Accepted for symmetry with `verify`; scans are exhaustive.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SCAN_CAP)]
        cap: usize,
    },
}

/// `--seed`, then `BRAIDREP_SEED`, then the built-in default.
pub fn resolve_seed(flag: Option<u64>, env: Option<&str>) -> Result<u64, String> {
    match (flag, env) {
        (Some(s), _) => Ok(s),
        (None, Some(v)) => v
            .trim()
            .parse()
            .map_err(|_| format!("{SEED_ENV}={v:?} is not an unsigned integer")),
        (None, None) => Ok(DEFAULT_SEED),
    }
}

fn parse_type(text: &str) -> Result<CoxeterType, String> {
    text.parse::<CoxeterType>().map_err(|e| e.to_string())
}

fn emit(
    text: &str,
    path: &Option<PathBuf>,
    stdout: &mut dyn Write,
) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn parse_word(text: &str) -> Result<BraidWord, String> {
    text.parse::<BraidWord>().map_err(|e| e.to_string())
}

fn check_strands(strands: usize) -> Result<(), String> {
    if strands < 2 {
        Err(format!("--strands must be at least 2, got {strands}"))
    } else {
        Ok(())
    }
}

/// Runs a parsed command, writing results to `stdout` and diagnostics to
/// `stderr`; returns the process exit code.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let env_seed = std::env::var(SEED_ENV).ok();
    match execute(cli.command, env_seed.as_deref(), stdout, stderr) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

fn execute(
    command: Command,
    env_seed: Option<&str>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, String> {
    match command {
        Command::Verify {
            coxeter_type,
            format,
            out,
            samples,
            max_length,
            seed,
        } => {
            let ctype = parse_type(&coxeter_type)?;
            let map = build_for_type(ctype).map_err(|e| e.to_string())?;
            let opts = VerifyOptions {
                samples,
                max_word_length: max_length,
                seed: resolve_seed(seed, env_seed)?,
            };
            let report = verify(&map, &opts);
            let text = match format {
                ReportFormat::Text => report.to_string(),
                ReportFormat::Json => report.to_json() + "\n",
            };
            emit(&text, &out, stdout)?;
            let expected = ctype.family() != Family::D;
            let sound = report.diagram.failures == 0 && report.diagram.generator_failures == 0;
            Ok(if report.is_homomorphism == expected && sound { 0 } else { 1 })
        }
        Command::Nf { strands, word } => {
            check_strands(strands)?;
            let r = Arc::new(type_a_realization(strands).map_err(|e| e.to_string())?);
            let element = BraidElement::from_word(&r, &parse_word(&word)?).map_err(|e| e.to_string())?;
            writeln!(stdout, "{element}").map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Map { coxeter_type, word } => {
            let ctype = parse_type(&coxeter_type)?;
            let map = build_for_type(ctype).map_err(|e| e.to_string())?;
            if !is_homomorphism(&map) {
                let _ = writeln!(
                    stderr,
                    "warning: the {ctype} lift is not a homomorphism; the image depends on the word"
                );
            }
            let source_word = parse_word(&word)?;
            let image_word = map.image_word(&source_word).map_err(|e| e.to_string())?;
            let image = apply_map(&map, &source_word).map_err(|e| e.to_string())?;
            let text = format!(
                "image word: {image_word}\nnormal form: {image}\npermutation: {}\npure: {}\n",
                image.underlying_permutation().cycle_string(),
                image.is_pure()
            );
            emit(&text, &None, stdout)?;
            Ok(0)
        }
        Command::Render {
            strands,
            word,
            format,
            out,
        } => {
            check_strands(strands)?;
            let w = parse_word(&word)?;
            let text = match format {
                DiagramFormat::Ascii => render_ascii(strands, &w),
                DiagramFormat::Svg => render_svg(strands, &w),
            }
            .map_err(|e| e.to_string())?;
            emit(&text, &out, stdout)?;
            Ok(0)
        }
        Command::Scan {
            coxeter_type,
            bound,
            seed,
            format,
            out,
            cap,
        } => {
            resolve_seed(seed, env_seed)?;
            if bound < 1 {
                return Err("--bound must be at least 1".into());
            }
            let ctype = parse_type(&coxeter_type)?;
            let report: ScanReport = if ctype == CoxeterType::i2(2).expect("valid") {
                injectivity_scan_i2_2(bound)
            } else {
                let map = build_for_type(ctype).map_err(|e| e.to_string())?;
                kernel_scan(&map, bound, cap)
            }
            .map_err(|e| e.to_string())?;
            let text = match format {
                ReportFormat::Text => report.to_string(),
                ReportFormat::Json => report.to_json() + "\n",
            };
            emit(&text, &out, stdout)?;
            Ok(if report.kernel.is_empty() { 0 } else { 1 })
        }
    }
}
