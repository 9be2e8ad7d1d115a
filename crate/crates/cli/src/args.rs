use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use slicepd::poly::{Field, MonomialOrder, Shape};
use slicepd::witness::{ColonMode, ColonPlan};

#[derive(Parser, Debug)]
#[command(
    name = "slicepd",
    version,
    about = "Slice ideals of variable arrays: depth-zero certificates and projective dimension"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads for parallel sub-checks; 1 runs sequentially.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the generators of the slice ideal.
    Construct(Ring),
    /// Run the depth-zero certificate and report the implied projective dimension.
    Certify(Certify),
    /// Reduced Gröbner basis of the slice ideal.
    Gb(Ring),
    /// Decide whether a polynomial lies in the slice ideal (exit 1 if not).
    Member(Member),
    /// Colon ideal (I : f) for a monomial f, or (I : m) for the maximal ideal.
    Colon(Colon),
    /// Minimal free resolution of R/I (shapes with at most 6 variables).
    Resolve(Resolve),
    /// Betti table of R/I (shapes with at most 6 variables).
    Betti(Resolve),
    /// Monomial support of the generators.
    Support(ShapeArg),
    /// Every applicable check for one shape.
    ReportAll(ReportAll),
}

#[derive(Args, Debug, Clone)]
pub struct ShapeArg {
    /// Array shape such as 2x2 or 3x4x2.
    #[arg(long)]
    pub shape: ShapeValue,
}

#[derive(Args, Debug, Clone)]
pub struct Ring {
    #[command(flatten)]
    pub shape: ShapeArg,
    /// Coefficient field: q, f2, f3, f5 or fP for a prime P.
    #[arg(long, default_value = "q")]
    pub field: FieldValue,
    #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
    pub order: OrderArg,
}

#[derive(Args, Debug, Clone)]
pub struct Certify {
    #[command(flatten)]
    pub ring: Ring,
    /// Colon-membership route; both run (when feasible) if omitted.
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
}

#[derive(Args, Debug, Clone)]
pub struct Member {
    #[command(flatten)]
    pub ring: Ring,
    /// Polynomial, e.g. "x[1,1]*x[1,2] - x[2,1]*x[2,2]".
    #[arg(long)]
    pub poly: String,
}

#[derive(Args, Debug, Clone)]
pub struct Colon {
    #[command(flatten)]
    pub ring: Ring,
    /// Monomial to divide by; the maximal ideal if omitted.
    #[arg(long)]
    pub by: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct Resolve {
    #[command(flatten)]
    pub ring: Ring,
    /// Stop after this many syzygy steps.
    #[arg(long, default_value_t = 32)]
    pub max_length: usize,
}

#[derive(Args, Debug, Clone)]
pub struct ReportAll {
    #[command(flatten)]
    pub shape: ShapeArg,
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    /// Seed for the randomized contraction spot-check.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Grevlex => MonomialOrder::Grevlex,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeArg {
    Exchange,
    Groebner,
}

pub fn colon_plan(mode: Option<ModeArg>) -> ColonPlan {
    match mode {
        None => ColonPlan::Auto,
        Some(ModeArg::Exchange) => ColonPlan::Only(ColonMode::Exchange),
        Some(ModeArg::Groebner) => ColonPlan::Only(ColonMode::Groebner),
    }
}

#[derive(Debug, Clone)]
pub struct ShapeValue(pub Shape);

impl FromStr for ShapeValue {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<Shape>()
            .map(ShapeValue)
            .map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct FieldValue(pub Field);

impl FromStr for FieldValue {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        if lower == "q" {
            return Ok(FieldValue(Field::Rational));
        }
        let p = lower
            .strip_prefix('f')
            .and_then(|p| p.parse::<u32>().ok())
            .ok_or_else(|| format!("unknown field '{s}': expected q or fP"))?;
        Field::prime(p).map(FieldValue).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fields() {
        assert_eq!("q".parse::<FieldValue>().unwrap().0, Field::Rational);
        assert_eq!("F5".parse::<FieldValue>().unwrap().0, Field::Prime(5));
        assert!("f4".parse::<FieldValue>().is_err());
        assert!("r".parse::<FieldValue>().is_err());
    }

    #[test]
    fn shapes() {
        assert_eq!("3x4x2".parse::<ShapeValue>().unwrap().0.dims(), &[3, 4, 2]);
        assert!("3".parse::<ShapeValue>().is_err());
        assert!("1x2".parse::<ShapeValue>().is_err());
    }

    #[test]
    fn parser_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
