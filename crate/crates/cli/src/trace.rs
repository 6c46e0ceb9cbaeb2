//! The step-by-step report: qualified set, per-level groupings, every
//! candidate table with its pruned rows, rule confidences and divergence
//! notes. Mirrors the mining loop around the finished result so the frequent
//! rows shown are exactly the mined ones.

use std::fmt::Write;

use anyhow::{anyhow, Result};

use mlfar_core::{
    generate_candidates, level_candidates_1, membership, render_rule, AssociationRule,
    FrequentItemsetTable, Itemset, MiningResult, RenderStyle, Taxonomy, TransactionSet,
};

use crate::settings::RunSpec;

pub struct TraceInput<'a> {
    pub spec: &'a RunSpec,
    pub taxonomy: &'a Taxonomy,
    pub raw: &'a TransactionSet,
    pub result: &'a MiningResult,
    pub rules: &'a [AssociationRule],
}

pub fn render(input: &TraceInput) -> Result<String> {
    let cfg = &input.spec.mining;
    let mut out = String::new();

    let deduped;
    let source = if cfg.dedupe_items {
        deduped = input.raw.dedupe_items();
        &deduped
    } else {
        input.raw
    };
    let m = source.qualify(cfg.gamma);

    writeln!(
        out,
        "qualified transactions (gamma = {}): |M| = {} of {}",
        cfg.gamma,
        m.len(),
        input.raw.len()
    )?;
    for t in m.iter() {
        let items: Vec<String> = t.items().iter().map(|c| c.to_string()).collect();
        writeln!(out, "{}\t{}", t.id(), items.join(", "))?;
    }
    if m.is_empty() {
        return Ok(out);
    }

    let max_level = cfg
        .max_level
        .unwrap_or(input.taxonomy.depth())
        .min(input.taxonomy.depth());
    let mut previous_l1: Option<&FrequentItemsetTable> = None;
    for level in 1..=max_level {
        if level > 1 && previous_l1.is_none() {
            break;
        }
        writeln!(out, "\nlevel {level}")?;
        writeln!(out, "grouped transactions")?;
        let grouped = m.group_at_level(level);
        for g in &grouped {
            let cells: Vec<String> = g
                .groups()
                .iter()
                .map(|(code, v)| format!("({code}, {v})"))
                .collect();
            writeln!(out, "{}\t{}", g.id(), cells.join(" "))?;
        }

        let candidates = level_candidates_1(&m, level, previous_l1, cfg)?;
        write_itemset_section(&mut out, cfg, input.result, level, 1, &candidates, &grouped)?;
        if input.result.table(level, 1).is_none() {
            break;
        }

        let mut size = 2;
        while cfg.max_p.is_none_or(|max| size <= max) {
            let Some(previous) = input.result.table(level, size - 1) else {
                break;
            };
            let candidates = generate_candidates(previous);
            if candidates.is_empty() {
                break;
            }
            write_itemset_section(
                &mut out,
                cfg,
                input.result,
                level,
                size,
                &candidates,
                &grouped,
            )?;
            if input.result.table(level, size).is_none() {
                break;
            }
            size += 1;
        }
        previous_l1 = input.result.table(level, 1);
    }

    writeln!(
        out,
        "\nrules ({}, min confidence {})",
        input.spec.rule_mode,
        cfg.min_confidence.to_decimal(2)
    )?;
    if input.rules.is_empty() {
        writeln!(out, "(none)")?;
    }
    for rule in input.rules {
        writeln!(
            out,
            "{}",
            render_rule(rule, input.taxonomy, RenderStyle::Codes)
                .map_err(|e| anyhow!("rendering rule: {e}"))?
        )?;
        let union = rule.antecedent().union(rule.consequent());
        let antecedent_support = membership::support(rule.antecedent(), &m);
        writeln!(
            out,
            "  conf = support({union}) / support({ant}) = {}/{} = {}",
            rule.support().to_decimal(2),
            antecedent_support.to_decimal(2),
            rule.confidence().to_decimal(2),
            union = union,
            ant = rule.antecedent(),
        )?;
    }

    if !input.result.divergence_notes().is_empty() {
        writeln!(out, "\ndivergence notes")?;
        for note in input.result.divergence_notes() {
            writeln!(out, "- {note}")?;
        }
    }
    Ok(out)
}

fn write_itemset_section(
    out: &mut String,
    cfg: &mlfar_core::MiningConfig,
    result: &MiningResult,
    level: u8,
    size: usize,
    candidates: &[Itemset],
    grouped: &[mlfar_core::GroupedTransaction],
) -> Result<()> {
    let alpha = cfg
        .min_support
        .alpha(level, size)
        .ok_or_else(|| anyhow!("no minimum support for level {level} {size}-itemsets"))?;
    writeln!(out, "{size}-itemsets (min support {})", alpha.to_decimal(2))?;
    let table = result.table(level, size);
    for (itemset, support) in table.map(|t| t.rows()).unwrap_or(&[]) {
        writeln!(out, "{itemset}\t{}", support.to_decimal(2))?;
    }
    let pruned: Vec<String> = candidates
        .iter()
        .filter(|c| table.is_none_or(|t| !t.contains(c)))
        .map(|c| {
            let support = membership::support_grouped(c, grouped);
            format!("{c}={}", support.to_decimal(2))
        })
        .collect();
    if !pruned.is_empty() {
        writeln!(
            out,
            "pruned (below {}): {}",
            alpha.to_decimal(2),
            pruned.join(" ")
        )?;
    }
    Ok(())
}
