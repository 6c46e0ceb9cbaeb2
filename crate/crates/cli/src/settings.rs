//! Resolves the effective run settings from the paper-mode preset, an
//! optional config file and command-line flags, in that precedence order.

use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};

use mlfar_core::{Fraction, MiningConfig, RuleMode};

use crate::args::Args;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => bail!("unknown format `{other}` (expected table, json or csv)"),
        }
    }
}

/// The fully resolved settings a run executes with.
#[derive(Debug, Clone)]
pub struct RunSpec {
    pub taxonomy_path: PathBuf,
    pub transactions_path: PathBuf,
    pub mining: MiningConfig,
    pub rule_mode: RuleMode,
    pub format: OutputFormat,
    pub trace: bool,
    pub out: Option<PathBuf>,
}

/// Settings read from a `key = value` file; every field optional.
#[derive(Debug, Default)]
struct FileSettings {
    taxonomy: Option<PathBuf>,
    transactions: Option<PathBuf>,
    gamma: Option<u32>,
    min_support: Vec<String>,
    min_confidence: Option<String>,
    max_p: Option<usize>,
    max_level: Option<u8>,
    parent_filter: Option<bool>,
    dedupe_items: Option<bool>,
    rule_mode: Option<String>,
    format: Option<String>,
    trace: Option<bool>,
    paper_mode: Option<bool>,
    out: Option<PathBuf>,
}

fn parse_config_file(path: &PathBuf) -> Result<FileSettings> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading config file `{}`", path.display()))?;
    let mut settings = FileSettings::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| anyhow!("config line {}: expected `key = value`", idx + 1))?;
        let (key, value) = (key.trim(), value.trim());
        let parse_bool = || -> Result<bool> {
            value
                .parse()
                .map_err(|_| anyhow!("config line {}: `{key}` expects true or false", idx + 1))
        };
        match key {
            "taxonomy" => settings.taxonomy = Some(value.into()),
            "transactions" => settings.transactions = Some(value.into()),
            "gamma" => {
                settings.gamma = Some(
                    value
                        .parse()
                        .with_context(|| format!("config line {}: bad gamma `{value}`", idx + 1))?,
                )
            }
            "min-support" => settings.min_support.push(value.to_string()),
            "min-confidence" => settings.min_confidence = Some(value.to_string()),
            "max-p" => {
                settings.max_p = Some(
                    value
                        .parse()
                        .with_context(|| format!("config line {}: bad max-p `{value}`", idx + 1))?,
                )
            }
            "max-level" => {
                settings.max_level =
                    Some(value.parse().with_context(|| {
                        format!("config line {}: bad max-level `{value}`", idx + 1)
                    })?)
            }
            "parent-filter" => settings.parent_filter = Some(parse_bool()?),
            "dedupe-items" => settings.dedupe_items = Some(parse_bool()?),
            "rule-mode" => settings.rule_mode = Some(value.to_string()),
            "format" => settings.format = Some(value.to_string()),
            "trace" => settings.trace = Some(parse_bool()?),
            "paper-mode" => settings.paper_mode = Some(parse_bool()?),
            "out" => settings.out = Some(value.into()),
            other => bail!("config line {}: unknown key `{other}`", idx + 1),
        }
    }
    Ok(settings)
}

impl RunSpec {
    pub fn resolve(args: Args) -> Result<RunSpec> {
        let file = match &args.config {
            Some(path) => parse_config_file(path)?,
            None => FileSettings::default(),
        };
        let paper_mode = args.paper_mode || file.paper_mode.unwrap_or(false);

        let mut mining = if paper_mode {
            MiningConfig::paper_mode()
        } else {
            MiningConfig::new(0) // gamma filled below
        };

        mining.gamma = args
            .gamma
            .or(file.gamma)
            .or(paper_mode.then_some(mining.gamma))
            .ok_or_else(|| anyhow!("gamma is required (pass --gamma or --paper-mode)"))?;

        for spec in file.min_support.iter().chain(&args.min_support) {
            mining
                .min_support
                .parse_entries(spec)
                .with_context(|| format!("parsing min-support `{spec}`"))?;
        }
        if mining.min_support.is_empty() {
            bail!("at least one minimum support is required (pass --min-support or --paper-mode)");
        }

        if let Some(value) = args
            .min_confidence
            .as_deref()
            .or(file.min_confidence.as_deref())
        {
            let parsed: Fraction = value
                .parse()
                .with_context(|| format!("parsing min-confidence `{value}`"))?;
            mining.min_confidence = parsed;
        }
        if let Some(max_p) = args.max_p.or(file.max_p) {
            mining.max_p = Some(max_p);
        }
        if let Some(max_level) = args.max_level.or(file.max_level) {
            mining.max_level = Some(max_level);
        }
        if args.no_parent_filter {
            mining.parent_filter = false;
        } else if let Some(flag) = file.parent_filter {
            mining.parent_filter = flag;
        }
        if args.dedupe_items {
            mining.dedupe_items = true;
        } else if let Some(flag) = file.dedupe_items {
            mining.dedupe_items = flag;
        }
        mining.validate()?;

        let rule_mode = match args.rule_mode.as_deref().or(file.rule_mode.as_deref()) {
            Some(text) => RuleMode::from_str(text).map_err(|e| anyhow!(e))?,
            None => RuleMode::default(),
        };
        let format = match args.format.as_deref().or(file.format.as_deref()) {
            Some(text) => text.parse()?,
            None => OutputFormat::default(),
        };

        let taxonomy_path = args
            .taxonomy
            .or(file.taxonomy)
            .ok_or_else(|| anyhow!("a taxonomy file is required (pass --taxonomy)"))?;
        let transactions_path = args
            .transactions
            .or(file.transactions)
            .ok_or_else(|| anyhow!("a transactions file is required (pass --transactions)"))?;

        Ok(RunSpec {
            taxonomy_path,
            transactions_path,
            mining,
            rule_mode,
            format,
            trace: args.trace || file.trace.unwrap_or(false),
            out: args.out.or(file.out),
        })
    }
}
