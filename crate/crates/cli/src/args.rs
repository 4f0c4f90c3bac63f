use clap::{Args, Parser, Subcommand, ValueEnum};
use parabolic_catalan::demazure::DEFAULT_BUDGET;
use parabolic_catalan::rtuples::{parse_list, RTuple};
use parabolic_catalan::shapes::{Partition, Tableau};
use parabolic_catalan::Error;

/// Hull-candidate budget for the exact convexity oracle.
const HULL_BUDGET: usize = 200_000;

#[derive(Debug, Parser)]
#[command(name = "parcat", version, about = "Parabolic Catalan combinatorics: counts, keys, scanning and Demazure convexity")]
pub struct Cli {
    /// Emit JSON (one value per line) instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// C_n^R for one R, or for every R ⊆ [n-1] when --r is omitted.
    Count {
        #[arg(long)]
        n: usize,
        /// Comma list of dividers, e.g. "2" or "3,8"; "" is the empty set.
        #[arg(long)]
        r: Option<String>,
    },
    /// C_n^Σ, the sum of C_n^R over all R.
    CountTotal {
        #[arg(long)]
        n: usize,
        /// Use the closed alternating-sum formula instead of summing.
        #[arg(long)]
        formula: bool,
    },
    /// List every member of one counted family.
    List {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<String>,
        /// Pattern for `opart`, e.g. 231 (default 312).
        #[arg(long)]
        pattern: Option<String>,
    },
    /// First terms of an OEIS sequence, computed from scratch.
    Oeis {
        /// a220097 (even dividers) or a226316 (totals).
        #[arg(long)]
        seq: String,
        #[arg(long)]
        terms: usize,
    },
    /// The λ-key Y_λ(π).
    Key {
        /// Partition with trailing zeros, e.g. 2,1,0 (n is its length).
        #[arg(long)]
        lambda: String,
        /// R-permutation such as "3;1;2".
        #[arg(long)]
        perm: String,
    },
    /// The scanning tableau S(T).
    Scan {
        /// JSON tableau, inline or as a file path.
        #[arg(long, conflicts_with_all = ["lambda", "columns"])]
        tableau: Option<String>,
        #[arg(long, requires = "columns")]
        lambda: Option<String>,
        /// Columns west to east separated by ';', e.g. "1,3;2".
        #[arg(long, requires = "lambda")]
        columns: Option<String>,
    },
    /// The row end max tableau M_λ(α).
    Rowendmax {
        #[arg(long)]
        lambda: String,
        /// R-increasing upper tuple such as "2,4,6;4,5,6,7,9;9".
        #[arg(long)]
        tuple: String,
    },
    /// Demazure tableau set D_λ(π) and derived data.
    Demazure {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        perm: String,
        #[command(flatten)]
        view: ViewFlags,
        /// Maximum number of tableaux to enumerate.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Convexity verdict for D_λ(π).
    Convexity {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        perm: String,
        /// Hull candidates examined before falling back to segment tests.
        #[arg(long, default_value_t = HULL_BUDGET)]
        budget: usize,
    },
    /// Non-convexity certificate for a 312-containing π.
    Witness {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        perm: String,
    },
    /// Run the exhaustive invariant suites up to n_max.
    Verify {
        #[arg(long)]
        n_max: usize,
        /// Run a single suite, e.g. key-coincidence or convexity.
        #[arg(long, alias = "theorem")]
        check: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Family {
    R312,
    Gapless,
    Chains,
    Gchains,
    Shapes,
    Opart,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct ViewFlags {
    /// Print every tableau of the set.
    #[arg(long)]
    set: bool,
    /// Print the Demazure polynomial.
    #[arg(long)]
    poly: bool,
    /// Decide convexity (exact oracle).
    #[arg(long)]
    convexity: bool,
    /// Build and verify a non-convexity witness.
    #[arg(long)]
    witness: bool,
}

pub enum DemazureView {
    Summary,
    Set,
    Poly,
    Convexity,
    Witness,
}

impl ViewFlags {
    pub fn resolve(&self) -> DemazureView {
        match (self.set, self.poly, self.convexity, self.witness) {
            (true, ..) => DemazureView::Set,
            (_, true, ..) => DemazureView::Poly,
            (_, _, true, _) => DemazureView::Convexity,
            (.., true) => DemazureView::Witness,
            _ => DemazureView::Summary,
        }
    }
}

pub fn shape(text: &str) -> Result<Partition, Error> {
    text.parse()
}

pub fn tuple(text: &str) -> Result<RTuple, Error> {
    text.parse()
}

/// A tableau from inline JSON, a JSON file, or `--lambda` plus `--columns`.
pub fn tableau(source: Option<&str>, lambda: Option<&str>, columns: Option<&str>) -> Result<Tableau, Error> {
    let t = match (source, lambda, columns) {
        (Some(src), ..) => {
            let text = if src.trim_start().starts_with('{') {
                src.to_string()
            } else {
                std::fs::read_to_string(src).map_err(|e| Error::Parse(format!("cannot read {src}: {e}")))?
            };
            serde_json::from_str(&text).map_err(|e| Error::Parse(format!("bad tableau JSON: {e}")))?
        }
        (None, Some(l), Some(c)) => {
            let cols = if c.trim().is_empty() {
                Vec::new()
            } else {
                c.split(';').map(parse_list).collect::<Result<Vec<_>, _>>()?
            };
            Tableau::new(shape(l)?, cols)?
        }
        _ => return Err(Error::Parse("give --tableau, or --lambda with --columns".into())),
    };
    Ok(t)
}
