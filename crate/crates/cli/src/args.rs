use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Symmetry groups, quadric classification and truss analysis.
#[derive(Debug, Parser)]
#[command(name = "symtruss", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List and verify a dihedral or cyclic group of plane isometries.
    Group(GroupArgs),
    /// Rotate a point about the origin.
    Rotate(RotateArgs),
    /// Classify a quadric surface and report its symmetry elements.
    Quadric(EquationArgs),
    /// Classify a conic section.
    Conic(EquationArgs),
    /// Solve, compare or replicate 2D trusses.
    Truss(TrussArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupKind {
    Dihedral,
    Cyclic,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Group family; ignored with --from-file.
    #[arg(value_enum, required_unless_present = "from_file")]
    pub kind: Option<GroupKind>,
    /// Order parameter n.
    #[arg(required_unless_present = "from_file")]
    pub n: Option<usize>,
    /// Check closure, identity and inverses.
    #[arg(long)]
    pub verify: bool,
    /// Print each element's matrix.
    #[arg(long)]
    pub list: bool,
    /// Read the elements as a JSON list of 2×2 matrices instead.
    #[arg(long, value_name = "PATH", conflicts_with_all = ["kind", "n"])]
    pub from_file: Option<PathBuf>,
    /// Report angles in degrees.
    #[arg(long)]
    pub degrees: bool,
}

#[derive(Debug, Args)]
pub struct RotateArgs {
    /// Rotation angle (radians unless --degrees).
    #[arg(allow_hyphen_values = true)]
    pub angle: f64,
    #[arg(long)]
    pub degrees: bool,
    /// Point as `x,y`.
    #[arg(long, allow_hyphen_values = true)]
    pub point: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct EquationArgs {
    /// Equation such as "x^2 + y^2 = 1".
    #[arg(allow_hyphen_values = true)]
    pub equation: String,
    /// Also list symmetry elements (quadric only).
    #[arg(long)]
    pub symmetry: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TrussArgs {
    #[command(subcommand)]
    pub action: TrussAction,
}

#[derive(Debug, Subcommand)]
pub enum TrussAction {
    /// Solve one model (file path, builtin:d2 or builtin:asym).
    Solve {
        input: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Write an SVG drawing of the deformed shape.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        /// Displacement magnification in the drawing.
        #[arg(long, default_value_t = 500.0)]
        scale: f64,
    },
    /// Solve two models and compare peak force and displacement norm.
    Compare {
        first: String,
        second: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Replicate a module n times about the origin and solve the ring.
    Ring {
        input: String,
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Save the generated ring model as JSON.
        #[arg(long, value_name = "PATH")]
        write_model: Option<PathBuf>,
    },
}
