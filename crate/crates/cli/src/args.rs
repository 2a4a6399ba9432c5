use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "stybe",
    version,
    about = "Verify braces, set-theoretic Yang-Baxter and reflection solutions, and their R-matrix identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Check the axioms of a structure at a level.
    VerifyStructure,
    /// Build the adjoint-group brace of a radical ring.
    FromRadicalRing,
    /// Stream every structure of a level on a set of size --bound.
    EnumerateBraces,
    /// Build the set solution of a structure.
    MakeSolution,
    /// Check the braid relation of a solution.
    VerifyBraid,
    /// Non-degeneracy, involutivity, inverse and inverse-form checks.
    Diagnose,
    /// Recover `+` from a solution and the group `∘`.
    ReconstructAdd,
    /// Stream every solution on a set of size --bound.
    EnumerateSolutions,
    /// Check a reflection map against a solution.
    VerifyReflection,
    /// Stream the reflections of a solution.
    EnumerateReflections,
    /// Linear and Baxterized matrices of a solution.
    Linearize,
    /// Braid relation, unitarity, crossing and transpose symmetry of R(λ).
    CheckR,
    /// Twist matrices F and G and their identities.
    Twist,
    /// Series RTT relations for an L-operator.
    CheckRtt,
    /// Dress a reflection matrix with the fundamental L-operators.
    DressK,
    /// Reflection equation in braid form.
    CheckRe,
    /// Exchange relations of the reflection algebra.
    CheckRa,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::VerifyStructure => "verify-structure",
            Command::FromRadicalRing => "from-radical-ring",
            Command::EnumerateBraces => "enumerate-braces",
            Command::MakeSolution => "make-solution",
            Command::VerifyBraid => "verify-braid",
            Command::Diagnose => "diagnose",
            Command::ReconstructAdd => "reconstruct-add",
            Command::EnumerateSolutions => "enumerate-solutions",
            Command::VerifyReflection => "verify-reflection",
            Command::EnumerateReflections => "enumerate-reflections",
            Command::Linearize => "linearize",
            Command::CheckR => "check-r",
            Command::Twist => "twist",
            Command::CheckRtt => "check-rtt",
            Command::DressK => "dress-k",
            Command::CheckRe => "check-re",
            Command::CheckRa => "check-ra",
        }
    }
}

#[derive(Args, Debug, Clone, Default)]
pub struct Opts {
    /// Primary artifact: a structure, solution or ring (JSON).
    #[arg(long, global = true, value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Write the produced artifact (or the stream) here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// Reflection mode (direct|cc1|dual), reflection filter
    /// (all|tau_equivariant|central) or search mode (exhaustive|brace_generated).
    #[arg(long, global = true)]
    pub mode: Option<String>,
    /// left_brace|skew_brace|near_brace|singular_near_brace
    #[arg(long, global = true)]
    pub level: Option<String>,
    /// rump|gv|near; defaults to the rule natural to the structure's level.
    #[arg(long, global = true)]
    pub rule: Option<String>,
    /// Truncation depth of series operators.
    #[arg(long, global = true, value_name = "D")]
    pub depth: Option<usize>,
    /// Highest order checked in series relations.
    #[arg(long, global = true)]
    pub max_order: Option<usize>,
    /// One representative per isomorphism class.
    #[arg(long, global = true)]
    pub canonical: bool,
    /// Set size for enumerations; the size cap for enumerate-reflections.
    #[arg(long, global = true)]
    pub bound: Option<usize>,
    #[arg(long, global = true)]
    pub involutive: bool,
    #[arg(long, global = true)]
    pub non_degenerate: bool,
    /// Worker threads; falls back to STYBE_JOBS.
    #[arg(long, global = true, env = "STYBE_JOBS")]
    pub jobs: Option<usize>,
    /// Reflection map `{"k": [...]}`.
    #[arg(long, global = true, value_name = "PATH")]
    pub k: Option<PathBuf>,
    /// Group table for `∘`: rows, or a structure whose `mul` is used.
    #[arg(long, global = true, value_name = "PATH")]
    pub mul: Option<PathBuf>,
    /// Structure used by the central reflection filter.
    #[arg(long, global = true, value_name = "PATH")]
    pub structure: Option<PathBuf>,
    /// Polynomial matrix, dressed matrix or series operator.
    #[arg(long, global = true, value_name = "PATH")]
    pub operator: Option<PathBuf>,
    /// Dressing parameters `{"k0": matrix, "theta": poly}`.
    #[arg(long, global = true, value_name = "PATH")]
    pub params: Option<PathBuf>,
    /// Check the coproduct instead of the operator itself.
    #[arg(long, global = true)]
    pub coproduct: bool,
    /// Shift of the second copy in the reflection coproduct: a rational
    /// (`1/2`) or a monomial (`t2`).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub theta2: Option<String>,
}
