//! Association rule derivation from frequent itemsets: fuzzy confidence,
//! threshold filtering and rendering.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::fraction::Fraction;
use crate::membership::{support, Itemset};
use crate::miner::MiningResult;
use crate::taxonomy::{Taxonomy, TaxonomyError};
use crate::transactions::TransactionSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RuleError {
    #[error("antecedent {0} has zero support")]
    ZeroAntecedentSupport(String),
}

/// How rule consequents are formed from a frequent itemset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RuleMode {
    /// One consequent item per rule: I \ {b} => {b}.
    #[default]
    SingleConsequent,
    /// Every non-empty proper subset as antecedent: A => I \ A.
    AllPartitions,
}

impl FromStr for RuleMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "single-consequent" => Ok(RuleMode::SingleConsequent),
            "all-partitions" => Ok(RuleMode::AllPartitions),
            other => Err(format!(
                "unknown rule mode `{other}` (expected `single-consequent` or `all-partitions`)"
            )),
        }
    }
}

impl fmt::Display for RuleMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleMode::SingleConsequent => "single-consequent",
            RuleMode::AllPartitions => "all-partitions",
        })
    }
}

/// Whether to render rules with raw codes or taxonomy names.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderStyle {
    Codes,
    Names,
}

/// A mined rule A => B with the exact support of A ∪ B and its confidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociationRule {
    antecedent: Itemset,
    consequent: Itemset,
    support: Fraction,
    confidence: Fraction,
    level: u8,
}

impl AssociationRule {
    pub fn antecedent(&self) -> &Itemset {
        &self.antecedent
    }

    pub fn consequent(&self) -> &Itemset {
        &self.consequent
    }

    /// Support of A ∪ B.
    pub fn support(&self) -> Fraction {
        self.support
    }

    pub fn confidence(&self) -> Fraction {
        self.confidence
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    /// Flat serializable form with both two-decimal and exact values.
    pub fn record(&self) -> RuleRecord {
        RuleRecord {
            level: self.level,
            antecedent: self.antecedent.members().map(|c| c.to_string()).collect(),
            consequent: self.consequent.members().map(|c| c.to_string()).collect(),
            support: self.support.to_decimal(2),
            support_exact: self.support.to_string(),
            confidence: self.confidence.to_decimal(2),
            confidence_exact: self.confidence.to_string(),
        }
    }
}

/// JSON shape of one rule: codes plus decimal strings and exact `num/den`.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RuleRecord {
    pub level: u8,
    pub antecedent: Vec<String>,
    pub consequent: Vec<String>,
    pub support: String,
    pub support_exact: String,
    pub confidence: String,
    pub confidence_exact: String,
}

/// Conf(A => B) = support(A ∪ B) / support(A), exact. `a` and `b` must be
/// disjoint itemsets of the same level.
pub fn confidence(a: &Itemset, b: &Itemset, m: &TransactionSet) -> Result<Fraction, RuleError> {
    debug_assert!(
        a.is_disjoint(b),
        "antecedent and consequent must be disjoint"
    );
    debug_assert_eq!(a.level(), b.level(), "rule sides must share a level");
    let support_a = support(a, m);
    if support_a.is_zero() {
        return Err(RuleError::ZeroAntecedentSupport(a.to_string()));
    }
    Ok(support(&a.union(b), m) / support_a)
}

/// Derives rules from every frequent itemset of size >= 2, keeping those with
/// confidence >= `min_conf`. Antecedent supports come from the result tables
/// when present (they always are for tables produced by `mine`) and are
/// recomputed from `m` otherwise. Output is in canonical order: by (level,
/// itemset size, itemset, antecedent).
pub fn generate_rules(
    result: &MiningResult,
    m: &TransactionSet,
    min_conf: Fraction,
    mode: RuleMode,
) -> Vec<AssociationRule> {
    let mut rules = Vec::new();
    for table in result.tables() {
        if table.size() < 2 {
            continue;
        }
        for (itemset, itemset_support) in table.rows() {
            for antecedent in partitions(itemset, mode) {
                let consequent = complement(itemset, &antecedent);
                let support_a = result
                    .support_of(&antecedent)
                    .unwrap_or_else(|| support(&antecedent, m));
                if support_a.is_zero() {
                    continue; // cannot happen for tables produced by mine()
                }
                let conf = *itemset_support / support_a;
                if conf >= min_conf {
                    rules.push(AssociationRule {
                        antecedent,
                        consequent,
                        support: *itemset_support,
                        confidence: conf,
                        level: table.level(),
                    });
                }
            }
        }
    }
    rules.sort_by(|x, y| {
        (x.level, x.antecedent.len() + x.consequent.len())
            .cmp(&(y.level, y.antecedent.len() + y.consequent.len()))
            .then_with(|| {
                x.antecedent
                    .union(&x.consequent)
                    .cmp(&y.antecedent.union(&y.consequent))
            })
            .then_with(|| x.antecedent.cmp(&y.antecedent))
    });
    rules
}

/// Antecedents for one itemset under the chosen mode.
fn partitions(itemset: &Itemset, mode: RuleMode) -> Vec<Itemset> {
    match mode {
        RuleMode::SingleConsequent => itemset
            .members()
            .filter_map(|b| itemset.without(b))
            .collect(),
        RuleMode::AllPartitions => (1..itemset.len())
            .flat_map(|size| {
                itemset
                    .members()
                    .combinations(size)
                    .map(|combo| {
                        Itemset::new(combo.into_iter().cloned())
                            .expect("non-empty same-level subset")
                    })
                    .collect::<Vec<_>>()
            })
            .collect(),
    }
}

fn complement(itemset: &Itemset, antecedent: &Itemset) -> Itemset {
    Itemset::new(
        itemset
            .members()
            .filter(|c| !antecedent.contains(c))
            .cloned(),
    )
    .expect("proper subsets leave a non-empty complement")
}

/// Renders a rule either as codes with support/confidence
/// (`{21*, 22*} => {41*}  sup=1.03 conf=1.00`) or as taxonomy names
/// (`White bread ∧ Wheat bread => Black tea beverage`).
pub fn render_rule(
    rule: &AssociationRule,
    taxonomy: &Taxonomy,
    style: RenderStyle,
) -> Result<String, TaxonomyError> {
    match style {
        RenderStyle::Codes => Ok(format!(
            "{} => {}  sup={} conf={}",
            rule.antecedent,
            rule.consequent,
            rule.support.to_decimal(2),
            rule.confidence.to_decimal(2)
        )),
        RenderStyle::Names => {
            let names = |s: &Itemset| -> Result<String, TaxonomyError> {
                let mut parts = Vec::new();
                for code in s.members() {
                    parts.push(taxonomy.name_of(code)?.to_string());
                }
                Ok(parts.join(" ∧ "))
            };
            Ok(format!(
                "{} => {}",
                names(&rule.antecedent)?,
                names(&rule.consequent)?
            ))
        }
    }
}
