use std::path::PathBuf;

use clap::Parser;

/// Mines multilevel fuzzy association rules from an encoded transaction
/// database and a concept-hierarchy taxonomy.
#[derive(Debug, Parser)]
#[command(name = "mlfar", version, about)]
pub struct Args {
    /// Taxonomy file: one `code,name` row per node (internal nodes included)
    #[arg(long, value_name = "FILE")]
    pub taxonomy: Option<PathBuf>,

    /// Transaction file: one `id, code, code, ...` row per transaction
    #[arg(long, value_name = "FILE")]
    pub transactions: Option<PathBuf>,

    /// Maximum items per transaction admitted into mining (gamma)
    #[arg(long, value_name = "N")]
    pub gamma: Option<u32>,

    /// Minimum supports as `level=value` or `level.size=value`, comma
    /// separated (e.g. `1=1.1,1.1=2.0,2=1,3=0.33`); repeatable
    #[arg(long = "min-support", value_name = "SPEC")]
    pub min_support: Vec<String>,

    /// Minimum confidence for emitted rules (decimal or n/d)
    #[arg(long = "min-confidence", value_name = "VALUE")]
    pub min_confidence: Option<String>,

    /// Largest itemset size to mine
    #[arg(long = "max-p", value_name = "P")]
    pub max_p: Option<usize>,

    /// Deepest taxonomy level to mine
    #[arg(long = "max-level", value_name = "K")]
    pub max_level: Option<u8>,

    /// Also admit level-k items whose parent was not frequent at level k-1
    #[arg(long = "no-parent-filter")]
    pub no_parent_filter: bool,

    /// Collapse repeated items within a transaction before qualifying
    #[arg(long = "dedupe-items")]
    pub dedupe_items: bool,

    /// Rule shape: `single-consequent` or `all-partitions`
    #[arg(long = "rule-mode", value_name = "MODE")]
    pub rule_mode: Option<String>,

    /// Output format: `table`, `json` or `csv`
    #[arg(long, value_name = "FORMAT")]
    pub format: Option<String>,

    /// Emit a step-by-step report (qualified set, groupings, every candidate
    /// table with pruned rows, rule confidences) instead of the result document
    #[arg(long)]
    pub trace: bool,

    /// Preset reproducing the bundled example: gamma 5, level supports
    /// 2.0/1.1 (level 1), 1.0 (level 2), 0.33 (level 3), max-p 3, max-level 3,
    /// min confidence 0.5, with the published tables as divergence reference
    #[arg(long = "paper-mode")]
    pub paper_mode: bool,

    /// Write output to FILE instead of stdout
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// `key = value` settings file; command-line flags override it
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
}
