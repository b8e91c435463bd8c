use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use netslope_core::exact::Slope;
use netslope_core::halfspace::{ArcFamily, CoverKind};

#[derive(Debug, Parser)]
#[command(name = "netslope", version, about = "Exact slope functions, excluded intervals and obstructions of NET maps")]
pub struct Cli {
    /// Print the full JSON run report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Print trace dumps (eval).
    #[arg(long, global = true)]
    pub debug: bool,

    /// Record wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// μ(s), d(s), c(s) and the multiplier of one slope.
    Eval {
        #[arg(short = 'p', long = "presentation", value_name = "FILE")]
        file: PathBuf,
        #[arg(short = 's', long, value_parser = parse_slope, allow_hyphen_values = true)]
        slope: Slope,
    },
    /// The induced map on postcritical points and the orbifold type.
    Portrait {
        #[arg(short = 'p', long = "presentation", value_name = "FILE")]
        file: PathBuf,
    },
    /// Excluded arcs produced by one probe slope.
    Intervals {
        #[arg(short = 'p', long = "presentation", value_name = "FILE")]
        file: PathBuf,
        #[arg(short = 's', long, value_parser = parse_slope, allow_hyphen_values = true)]
        slope: Slope,
        #[arg(long, value_enum, default_value_t = IntervalKind::All)]
        kind: IntervalKind,
    },
    /// Covers the boundary circle by excluded arcs and reports a verdict.
    Cover {
        #[arg(short = 'p', long = "presentation", value_name = "FILE")]
        file: PathBuf,
        #[arg(short = 'H', long)]
        height: u64,
        #[arg(long, value_parser = parse_cover_kind, default_value = "both")]
        kind: CoverKind,
        /// Write an SVG plot of the coverage.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        /// Mark the cusp of this slope when it has a degree-one self-lift.
        #[arg(long = "omit", value_parser = parse_slope, value_name = "SLOPE", allow_hyphen_values = true)]
        omit: Vec<Slope>,
    },
    /// Every μ-fixed slope up to the given height.
    Fixed {
        #[arg(short = 'p', long = "presentation", value_name = "FILE")]
        file: PathBuf,
        #[arg(short = 'H', long)]
        height: u64,
    },
    /// Degree-one self-lift search and its consequences.
    Omit {
        #[arg(short = 'p', long = "presentation", value_name = "FILE")]
        file: PathBuf,
        #[arg(short = 's', long, value_parser = parse_slope, allow_hyphen_values = true)]
        slope: Slope,
        #[arg(short = 'H', long, default_value_t = netslope_core::halfspace::OMIT_HEIGHT)]
        height: u64,
    },
    /// Equator candidates up to the given height.
    Matings {
        #[arg(short = 'p', long = "presentation", value_name = "FILE")]
        file: PathBuf,
        #[arg(short = 'H', long)]
        height: u64,
    },
    /// Verifies the equators of the family member f_n.
    Family {
        #[arg(long = "n")]
        n: i64,
    },
    /// Writes the presentation of f_n.
    FamilyGen {
        #[arg(long = "n")]
        n: i64,
        #[arg(short = 'o', long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IntervalKind {
    All,
    GeneralFixed,
    Obstruction,
    FixedPoint,
    NetObstruction,
    NetFixedPoint,
}

impl IntervalKind {
    pub fn families(self) -> Vec<ArcFamily> {
        match self {
            IntervalKind::All => vec![
                ArcFamily::GeneralFixed,
                ArcFamily::Obstruction,
                ArcFamily::FixedPoint,
                ArcFamily::NetObstruction,
                ArcFamily::NetFixedPoint,
            ],
            IntervalKind::GeneralFixed => vec![ArcFamily::GeneralFixed],
            IntervalKind::Obstruction => vec![ArcFamily::Obstruction],
            IntervalKind::FixedPoint => vec![ArcFamily::FixedPoint],
            IntervalKind::NetObstruction => vec![ArcFamily::NetObstruction],
            IntervalKind::NetFixedPoint => vec![ArcFamily::NetFixedPoint],
        }
    }
}

fn parse_slope(s: &str) -> Result<Slope, String> {
    s.parse().map_err(|e: netslope_core::Error| e.to_string())
}

fn parse_cover_kind(s: &str) -> Result<CoverKind, String> {
    s.parse().map_err(|e: netslope_core::Error| e.to_string())
}
