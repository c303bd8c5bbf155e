//! Thin command-line front end over the library. Exit codes: 0 success,
//! 1 validation or input failure, 2 usage error (from the argument parser),
//! 3 internal invariant breach.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use semitile::{
    check_semi_integer_all, find_coalescible, find_minimal_trapped_block, gen_guillotine,
    load_tiling, prove, reduce_step, render_svg, save_tiling, theorem_oracle, tiling_to_string,
    validate_tiling, GenParams, LengthPredicate, ProveError, Rational, ReduceError, RenderOptions,
    StepKind, Tiling,
};

#[derive(Parser)]
#[command(
    name = "semitile",
    version,
    about = "Validate, generate, render, and reduce semi-integer rectangle tilings"
)]
struct Cli {
    /// Length predicate: "integer" or "multiple:<g>" for a positive rational g.
    #[arg(long, global = true, default_value = "integer")]
    predicate: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a tiling document is a perfect, semi-integer tiling.
    Validate { file: PathBuf },
    /// Apply up to N reduction steps and write the resulting tiling.
    Reduce {
        file: PathBuf,
        #[arg(long)]
        steps: usize,
        /// Print block-search details for every step.
        #[arg(long)]
        explain: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduce to a single tile, verifying every intermediate tiling.
    Prove {
        file: PathBuf,
        /// Write the reduction trace as JSON.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Cross-check the conclusion with the checkerboard oracle.
        #[arg(long)]
        check_oracle: bool,
        /// Print one line per step.
        #[arg(long)]
        explain: bool,
    },
    /// Generate a pseudo-random valid semi-integer tiling.
    Generate {
        #[arg(long)]
        seed: u64,
        #[arg(long = "tiles")]
        tiles: usize,
        #[arg(long = "denom", default_value_t = 64)]
        denom: u32,
        /// Pinwheel embedding probability (rational in [0, 1]).
        #[arg(long = "pinwheel", default_value = "0")]
        pinwheel: String,
        #[arg(long, default_value = "12")]
        width: String,
        #[arg(long, default_value = "12")]
        height: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Render a tiling document as SVG.
    Render {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "40")]
        scale: String,
        /// Highlight the minimal trapped block, if one exists.
        #[arg(long)]
        highlight_block: bool,
        #[arg(long)]
        no_labels: bool,
    },
    /// Run the checkerboard oracle and print its report as JSON.
    Oracle { file: PathBuf },
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(1)
}

fn internal(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("internal error: {msg}");
    ExitCode::from(3)
}

fn load(path: &PathBuf) -> Result<Tiling, ExitCode> {
    load_tiling(path).map_err(fail)
}

fn parse_rational(text: &str, what: &str) -> Result<Rational, ExitCode> {
    text.parse().map_err(|e| fail(format_args!("{what}: {e}")))
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    let predicate: LengthPredicate = cli.predicate.parse().map_err(fail)?;

    match cli.command {
        Command::Validate { file } => {
            let t = load(&file)?;
            let report = validate_tiling(&t);
            let bad = check_semi_integer_all(&t, &predicate);
            println!("tiles: {}", t.len());
            println!("valid: {}", report.valid);
            for v in &report.violations {
                println!("violation: {v}");
            }
            println!("semi-integer ({predicate}): {}", bad.is_empty());
            for i in &bad {
                println!("violation: NonSemiInteger({i})");
            }
            if report.valid && bad.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Reduce {
            file,
            steps,
            explain,
            out,
        } => {
            let t = load(&file)?;
            if !validate_tiling(&t).valid {
                return Err(fail(
                    "input tiling is not valid; run `validate` for details",
                ));
            }
            let mut cur = t;
            let mut applied = 0usize;
            while applied < steps && cur.len() > 1 {
                if explain && find_coalescible(&cur).is_none() {
                    match find_minimal_trapped_block(&cur) {
                        Ok(search) => {
                            let levels: Vec<String> =
                                search.descent.iter().map(|l| l.to_string()).collect();
                            eprintln!(
                                "step {}: block roof {} floors {:?} descent [{}]",
                                applied + 1,
                                search.block.roof,
                                search.block.floors,
                                levels.join(", ")
                            );
                        }
                        Err(e) => return Err(internal(e)),
                    }
                }
                let (next, step) = match reduce_step(&cur, &predicate) {
                    Ok(pair) => pair,
                    Err(ReduceError::AlreadySingle) => break,
                    Err(e @ ReduceError::InternalPartitionBroken) => return Err(internal(e)),
                    Err(e) => return Err(fail(e)),
                };
                let line = match &step.kind {
                    StepKind::Coalesce { i, j, merged } => {
                        format!("coalesce {i}+{j} -> {merged}")
                    }
                    StepKind::BlockSurgery {
                        branch,
                        cuts,
                        coalesces,
                        ..
                    } => format!(
                        "block surgery ({branch:?}): {} cuts, {} coalesces",
                        cuts.len(),
                        coalesces.len()
                    ),
                };
                let summary = format!(
                    "step {}: {line}; tiles {} -> {}",
                    applied + 1,
                    step.tiles_before,
                    step.tiles_after
                );
                if out.is_some() {
                    println!("{summary}");
                } else {
                    eprintln!("{summary}");
                }
                cur = next;
                applied += 1;
            }
            match out {
                Some(path) => save_tiling(&cur, path).map_err(fail)?,
                None => print!("{}", tiling_to_string(&cur)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Prove {
            file,
            trace,
            check_oracle,
            explain,
        } => {
            let t = load(&file)?;
            let report = match prove(&t, &predicate, check_oracle) {
                Ok(report) => report,
                Err(ProveError::Inadmissible(violations)) => {
                    for v in violations {
                        eprintln!("violation: {v}");
                    }
                    return Err(fail("input tiling is not admissible"));
                }
                Err(e @ ProveError::StepInvariantBroken { .. }) => return Err(internal(e)),
                Err(ProveError::Reduce(e @ ReduceError::InternalPartitionBroken)) => {
                    return Err(internal(e))
                }
                Err(e) => return Err(fail(e)),
            };
            if explain {
                for (i, step) in report.trace.steps.iter().enumerate() {
                    let what = match &step.kind {
                        StepKind::Coalesce { i, j, .. } => format!("coalesce {i}+{j}"),
                        StepKind::BlockSurgery { branch, .. } => {
                            format!("block surgery ({branch:?})")
                        }
                    };
                    println!(
                        "step {}: {what}; tiles {} -> {}",
                        i + 1,
                        step.tiles_before,
                        step.tiles_after
                    );
                }
            }
            println!("steps: {}", report.trace.steps.len());
            println!("final: {}", report.trace.final_rect);
            println!(
                "width {} good ({predicate}): {}",
                report.trace.final_rect.width(),
                report.width_good
            );
            println!(
                "height {} good ({predicate}): {}",
                report.trace.final_rect.height(),
                report.height_good
            );
            if let Some(oracle) = &report.oracle {
                println!(
                    "oracle: width_integer={} height_integer={} tile_imbalance_sum={}",
                    oracle.width_integer, oracle.height_integer, oracle.tile_imbalance_sum
                );
            }
            if let Some(path) = trace {
                fs::write(&path, report.trace.to_json())
                    .map_err(|e| fail(format_args!("cannot write {}: {e}", path.display())))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate {
            seed,
            tiles,
            denom,
            pinwheel,
            width,
            height,
            out,
        } => {
            let params = GenParams {
                seed,
                max_tiles: tiles,
                max_denominator: denom,
                big_width: parse_rational(&width, "--width")?,
                big_height: parse_rational(&height, "--height")?,
                pinwheel_probability: parse_rational(&pinwheel, "--pinwheel")?,
            };
            let t = gen_guillotine(&params).map_err(fail)?;
            save_tiling(&t, out).map_err(fail)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Render {
            file,
            out,
            scale,
            highlight_block,
            no_labels,
        } => {
            let t = load(&file)?;
            let scale = parse_rational(&scale, "--scale")?;
            if !scale.is_positive() {
                return Err(fail("--scale must be positive"));
            }
            let highlight = if highlight_block {
                find_highlight_block(&t)
            } else {
                None
            };
            let svg = render_svg(
                &t,
                &RenderOptions {
                    scale,
                    label_tiles: !no_labels,
                    highlight,
                },
            );
            fs::write(&out, svg)
                .map_err(|e| fail(format_args!("cannot write {}: {e}", out.display())))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { file } => {
            let t = load(&file)?;
            if !validate_tiling(&t).valid {
                return Err(fail(
                    "input tiling is not valid; run `validate` for details",
                ));
            }
            let scaled;
            let measured = match &predicate {
                LengthPredicate::Integer => &t,
                LengthPredicate::MultipleOf(g) => {
                    scaled = t.scaled(&(Rational::one() / g));
                    &scaled
                }
            };
            let report = theorem_oracle(measured).map_err(fail)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serialization cannot fail")
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn find_highlight_block(t: &Tiling) -> Option<semitile::TrappedBlock> {
    if find_coalescible(t).is_some() {
        return None;
    }
    find_minimal_trapped_block(t).ok().map(|s| s.block)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(code) => code,
    }
}
