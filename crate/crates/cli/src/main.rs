mod args;
mod output;
mod settings;
mod trace;

use std::fs;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::Parser;

use mlfar_core::{generate_rules, mine, Taxonomy, TransactionSet};

use args::Args;
use settings::RunSpec;

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(args: Args) -> Result<()> {
    let spec = RunSpec::resolve(args)?;

    let taxonomy_text = fs::read_to_string(&spec.taxonomy_path)
        .with_context(|| format!("reading taxonomy file `{}`", spec.taxonomy_path.display()))?;
    let taxonomy = Taxonomy::parse(&taxonomy_text)
        .with_context(|| format!("parsing taxonomy `{}`", spec.taxonomy_path.display()))?;

    let transactions_text = fs::read_to_string(&spec.transactions_path).with_context(|| {
        format!(
            "reading transactions file `{}`",
            spec.transactions_path.display()
        )
    })?;
    let raw = TransactionSet::parse(&transactions_text, &taxonomy).with_context(|| {
        format!(
            "parsing transactions `{}`",
            spec.transactions_path.display()
        )
    })?;

    let result = mine(&spec.mining, &taxonomy, &raw)?;
    let qualified = if spec.mining.dedupe_items {
        raw.dedupe_items().qualify(spec.mining.gamma)
    } else {
        raw.qualify(spec.mining.gamma)
    };
    let rules = generate_rules(
        &result,
        &qualified,
        spec.mining.min_confidence,
        spec.rule_mode,
    );

    let document = if spec.trace {
        trace::render(&trace::TraceInput {
            spec: &spec,
            taxonomy: &taxonomy,
            raw: &raw,
            result: &result,
            rules: &rules,
        })?
    } else {
        output::render(&output::ResultDocument {
            spec: &spec,
            transaction_count: raw.len(),
            result: &result,
            rules: &rules,
        })?
    };

    match &spec.out {
        Some(path) => fs::write(path, document)
            .with_context(|| format!("writing output to `{}`", path.display()))?,
        None => print!("{document}"),
    }
    Ok(())
}
