use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hagge::figure::{construct_for_figure, render, FigureOptions};
use hagge::fuzz::{fuzz, FuzzConfig};
use hagge::instance::{parse_point, starting_point, triangle, InputError};
use hagge::report::JsonReport;
use hagge_core::construct::{run, run_degenerate_h, run_degenerate_k, StartKind};
use hagge_core::verify::{
    check_all, check_degenerate_h, check_degenerate_k, check_fully_generic, check_reproduction,
    symbolic_triangle,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "hagge",
    version,
    about = "Exact checks of the eight circles through the orthocentre"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TriangleArgs {
    /// Squared side lengths a²,b²,c² as rationals, e.g. 4,5,6
    #[arg(long, allow_hyphen_values = true)]
    triangle: Option<String>,
    /// Integer side lengths a,b,c (squared before use)
    #[arg(long)]
    sides: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check T1–T15 on one instance or symbolically
    Verify {
        #[command(flatten)]
        tri: TriangleArgs,
        /// Starting point: x,y,z or one of g, k, h
        #[arg(long, default_value = "g", allow_hyphen_values = true)]
        point: String,
        /// Accept a starting point outside the triangle
        #[arg(long)]
        allow_exterior: bool,
        /// Generic triangle with symbolic squared sides
        #[arg(long)]
        symbolic: bool,
        /// With --symbolic, also make the starting point symbolic
        #[arg(long, requires = "symbolic")]
        generic_point: bool,
        /// Largest coordinate size, in terms, for --generic-point
        #[arg(long, default_value_t = 20_000)]
        budget: usize,
        /// Also compare against the closed forms for the centroid start
        #[arg(long)]
        reproduce: bool,
        /// Human-readable summary on standard error
        #[arg(long)]
        verbose: bool,
    },
    /// Check T1–T15 on seeded random instances
    Fuzz {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 40)]
        max_coord: i64,
        #[arg(long)]
        verbose: bool,
    },
    /// Degenerate starting points H and K
    Special {
        #[arg(long = "case", value_enum)]
        case: Case,
        #[command(flatten)]
        tri: TriangleArgs,
        #[arg(long)]
        verbose: bool,
    },
    /// Draw the construction as SVG
    Figure {
        #[command(flatten)]
        tri: TriangleArgs,
        #[arg(long, default_value = "g", allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        allow_exterior: bool,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 800)]
        size: u32,
        #[arg(long, value_enum, default_value_t = Toggle::On)]
        labels: Toggle,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Case {
    H,
    K,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Toggle {
    On,
    Off,
}

enum Failure {
    Input(String),
    Checks,
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn emit(report: &JsonReport, verbose: bool) -> Result<(), Failure> {
    println!("{}", report.to_json());
    if verbose {
        eprint!("{}", report.describe());
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

#[allow(clippy::too_many_arguments)]
fn verify(
    tri: TriangleArgs,
    point: String,
    allow_exterior: bool,
    symbolic: bool,
    generic_point: bool,
    budget: usize,
    reproduce: bool,
    verbose: bool,
) -> Result<(), Failure> {
    if symbolic {
        if tri.triangle.is_some() || tri.sides.is_some() {
            return Err(Failure::Input("--symbolic takes no triangle".into()));
        }
        if generic_point {
            if reproduce {
                return Err(Failure::Input(
                    "closed forms describe the centroid start only".into(),
                ));
            }
            return emit(&JsonReport::new(&check_fully_generic(budget), &[]), verbose);
        }
        let t = symbolic_triangle();
        let r = run(&t, hagge_core::construct::StartingPoint::centroid())
            .map_err(|e| Failure::Input(e.to_string()))?;
        let extra = if reproduce {
            check_reproduction(&r)
                .map_err(|e| Failure::Input(e.to_string()))?
                .checks
        } else {
            Vec::new()
        };
        return emit(&JsonReport::new(&check_all(&r), &extra), verbose);
    }

    let t = triangle(tri.triangle.as_deref(), tri.sides.as_deref())?;
    let p = parse_point(&t, &point, allow_exterior)?;
    let start = starting_point(&t, p, allow_exterior)?;
    match start.kind() {
        StartKind::Orthocentre => {
            return Err(Failure::Input(
                "the orthocentre is a degenerate start; use `special --case h`".into(),
            ))
        }
        StartKind::Symmedian => {
            return Err(Failure::Input(
                "the symmedian point is a degenerate start; use `special --case k`".into(),
            ))
        }
        StartKind::Centroid | StartKind::Generic => {}
    }
    if reproduce && start.kind() != StartKind::Centroid {
        return Err(Failure::Input(
            "closed forms describe the centroid start only".into(),
        ));
    }
    let r = run(&t, start).map_err(|e| Failure::Input(format!("construction undefined: {e}")))?;
    let extra = if reproduce {
        check_reproduction(&r)
            .map_err(|e| Failure::Input(e.to_string()))?
            .checks
    } else {
        Vec::new()
    };
    emit(&JsonReport::new(&check_all(&r), &extra), verbose)
}

fn special(case: Case, tri: TriangleArgs, verbose: bool) -> Result<(), Failure> {
    let t = triangle(tri.triangle.as_deref(), tri.sides.as_deref())?;
    let undefined = |e: hagge_core::construct::ConstructError| {
        Failure::Input(format!("construction undefined: {e}"))
    };
    let report = match case {
        Case::H => check_degenerate_h(&run_degenerate_h(&t).map_err(undefined)?),
        Case::K => check_degenerate_k(&run_degenerate_k(&t).map_err(undefined)?),
    };
    emit(&JsonReport::new(&report, &[]), verbose)
}

#[derive(Serialize)]
struct FigureSummary {
    out: String,
    circles: usize,
    lines: usize,
    labels: usize,
    max_residual: f64,
    warnings: Vec<String>,
}

fn figure(
    tri: TriangleArgs,
    point: String,
    allow_exterior: bool,
    out: PathBuf,
    size: u32,
    labels: Toggle,
) -> Result<(), Failure> {
    if size < 100 {
        return Err(Failure::Input("--size must be at least 100".into()));
    }
    let t = triangle(tri.triangle.as_deref(), tri.sides.as_deref())?;
    let p = parse_point(&t, &point, allow_exterior)?;
    let start = starting_point(&t, p, allow_exterior)?;
    let r = construct_for_figure(&t, start).map_err(|e| Failure::Input(e.to_string()))?;
    let options = FigureOptions {
        size,
        labels: labels == Toggle::On,
    };
    let fig = render(&r, &options).map_err(|e| Failure::Input(e.to_string()))?;
    std::fs::write(&out, &fig.svg)
        .map_err(|e| Failure::Input(format!("cannot write {}: {e}", out.display())))?;
    let summary = FigureSummary {
        out: out.display().to_string(),
        circles: fig.circles_drawn,
        lines: fig.lines_drawn,
        labels: if options.labels {
            fig.positions.len()
        } else {
            0
        },
        max_residual: fig.max_residual(),
        warnings: fig.warnings.clone(),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&summary).expect("summary serializes")
    );
    if fig.max_residual() < 1e-6 {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify {
            tri,
            point,
            allow_exterior,
            symbolic,
            generic_point,
            budget,
            reproduce,
            verbose,
        } => verify(
            tri,
            point,
            allow_exterior,
            symbolic,
            generic_point,
            budget,
            reproduce,
            verbose,
        ),
        Command::Fuzz {
            count,
            seed,
            max_coord,
            verbose,
        } => {
            let config = FuzzConfig {
                count,
                seed,
                max_coord,
            };
            match fuzz(&config) {
                Ok(report) => {
                    println!("{}", report.to_json());
                    if verbose {
                        let s = &report.summary;
                        eprintln!("{} instances: {} pass, {} fail", s.count, s.pass, s.fail);
                    }
                    if report.all_passed() {
                        Ok(())
                    } else {
                        Err(Failure::Checks)
                    }
                }
                Err(e) => Err(Failure::Input(e.to_string())),
            }
        }
        Command::Special { case, tri, verbose } => special(case, tri, verbose),
        Command::Figure {
            tri,
            point,
            allow_exterior,
            out,
            size,
            labels,
        } => figure(tri, point, allow_exterior, out, size, labels),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
