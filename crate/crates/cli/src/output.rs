//! Result documents: table, JSON and CSV renderings of the frequent-itemset
//! tables and rules. All three carry the same two-decimal values; JSON and
//! the table form also carry the exact fractions.

use anyhow::Result;
use serde_json::json;

use mlfar_core::{AssociationRule, MiningResult, RuleMode};

use crate::settings::{OutputFormat, RunSpec};

pub struct ResultDocument<'a> {
    pub spec: &'a RunSpec,
    pub transaction_count: usize,
    pub result: &'a MiningResult,
    pub rules: &'a [AssociationRule],
}

pub fn render(doc: &ResultDocument) -> Result<String> {
    match doc.spec.format {
        OutputFormat::Table => Ok(render_table(doc)),
        OutputFormat::Json => render_json(doc),
        OutputFormat::Csv => render_csv(doc),
    }
}

fn rule_mode_name(mode: RuleMode) -> String {
    mode.to_string()
}

fn render_table(doc: &ResultDocument) -> String {
    let mut out = String::new();
    let cfg = &doc.spec.mining;
    out.push_str(&format!(
        "qualified transactions: {} of {} (gamma = {})\n",
        doc.result.qualified_count(),
        doc.transaction_count,
        cfg.gamma
    ));

    out.push_str("\nfrequent itemsets\n");
    if doc.result.tables().count() == 0 {
        out.push_str("  (none)\n");
    }
    for table in doc.result.tables() {
        let alpha = cfg
            .min_support
            .alpha(table.level(), table.size())
            .expect("mined tables have a threshold");
        out.push_str(&format!(
            "  level {}, {}-itemsets (min support {})\n",
            table.level(),
            table.size(),
            alpha.to_decimal(2)
        ));
        for (itemset, support) in table.rows() {
            out.push_str(&format!(
                "    {itemset}  {}  {}\n",
                support.to_decimal(2),
                support
            ));
        }
    }

    out.push_str(&format!(
        "\nrules ({}, min confidence {})\n",
        rule_mode_name(doc.spec.rule_mode),
        cfg.min_confidence.to_decimal(2)
    ));
    if doc.rules.is_empty() {
        out.push_str("  (none)\n");
    }
    for rule in doc.rules {
        out.push_str(&format!(
            "  {} => {}  sup={} conf={}  ({}, {})\n",
            rule.antecedent(),
            rule.consequent(),
            rule.support().to_decimal(2),
            rule.confidence().to_decimal(2),
            rule.support(),
            rule.confidence()
        ));
    }

    if !doc.result.divergence_notes().is_empty() {
        out.push_str("\ndivergence notes\n");
        for note in doc.result.divergence_notes() {
            out.push_str(&format!("  - {note}\n"));
        }
    }
    out
}

fn render_json(doc: &ResultDocument) -> Result<String> {
    let cfg = &doc.spec.mining;
    let tables: Vec<serde_json::Value> = doc
        .result
        .tables()
        .map(|table| {
            let alpha = cfg
                .min_support
                .alpha(table.level(), table.size())
                .expect("mined tables have a threshold");
            json!({
                "level": table.level(),
                "size": table.size(),
                "min_support": alpha.to_decimal(2),
                "min_support_exact": alpha.to_string(),
                "itemsets": table.rows().iter().map(|(itemset, support)| {
                    json!({
                        "items": itemset.members().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "support": support.to_decimal(2),
                        "support_exact": support.to_string(),
                    })
                }).collect::<Vec<_>>(),
            })
        })
        .collect();
    let rules: Vec<serde_json::Value> = doc
        .rules
        .iter()
        .map(|rule| serde_json::to_value(rule.record()))
        .collect::<std::result::Result<_, _>>()?;

    let document = json!({
        "gamma": cfg.gamma,
        "transaction_count": doc.transaction_count,
        "qualified_count": doc.result.qualified_count(),
        "rule_mode": rule_mode_name(doc.spec.rule_mode),
        "min_confidence": cfg.min_confidence.to_decimal(2),
        "min_confidence_exact": cfg.min_confidence.to_string(),
        "tables": tables,
        "rules": rules,
        "divergence_notes": doc.result.divergence_notes(),
    });
    let mut text = serde_json::to_string_pretty(&document)?;
    text.push('\n');
    Ok(text)
}

fn render_csv(doc: &ResultDocument) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record([
        "record",
        "level",
        "size",
        "items",
        "antecedent",
        "consequent",
        "support",
        "support_exact",
        "confidence",
        "confidence_exact",
    ])?;
    for table in doc.result.tables() {
        for (itemset, support) in table.rows() {
            let items: Vec<String> = itemset.members().map(|c| c.to_string()).collect();
            writer.write_record([
                "itemset",
                &table.level().to_string(),
                &table.size().to_string(),
                &items.join(" "),
                "",
                "",
                &support.to_decimal(2),
                &support.to_string(),
                "",
                "",
            ])?;
        }
    }
    for rule in doc.rules {
        let record = rule.record();
        writer.write_record([
            "rule",
            &record.level.to_string(),
            &(record.antecedent.len() + record.consequent.len()).to_string(),
            "",
            &record.antecedent.join(" "),
            &record.consequent.join(" "),
            &record.support,
            &record.support_exact,
            &record.confidence,
            &record.confidence_exact,
        ])?;
    }
    Ok(String::from_utf8(writer.into_inner()?)?)
}
