//! Multilevel fuzzy association rule mining over encoded transaction
//! databases.
//!
//! Items live in a concept hierarchy and are encoded as fixed-width codes
//! (`211` is a leaf, `21*` its level-2 group, `2**` its level-1 group).
//! Transactions with more than `gamma` items are filtered out; the survivors
//! form the qualified set M. Mining walks the hierarchy top-down with its own
//! minimum support per level: each transaction's items are grouped by their
//! level-k ancestor, a group occurring v times in a transaction of
//! cardinality c has fuzzy membership v/c there, an itemset's membership is
//! the minimum over its members, and its support is the sum over M. Frequent
//! itemsets feed candidate generation under downward closure, and rules are
//! scored by confidence = support(A ∪ B) / support(A). All arithmetic is
//! exact rational; decimals appear only in rendered output.
//!
//! ```
//! use mlfar_core::{mine, generate_rules, MiningConfig, RuleMode, Taxonomy, TransactionSet};
//!
//! let taxonomy = Taxonomy::parse("1**,Milk\n11*,Chocolate milk\n111,Dairyland\n")?;
//! let data = TransactionSet::parse("T1, 111\nT2, 111, 111\n", &taxonomy)?;
//!
//! let mut config = MiningConfig::new(2);
//! config.min_support.parse_entries("1=1.5,2=1.5,3=1.5")?;
//! let result = mine(&config, &taxonomy, &data)?;
//! assert_eq!(result.qualified_count(), 2);
//! assert_eq!(result.table(1, 1).unwrap().len(), 1);
//!
//! let m = data.qualify(config.gamma);
//! let rules = generate_rules(&result, &m, config.min_confidence, RuleMode::SingleConsequent);
//! assert!(rules.is_empty()); // no itemset reaches size 2
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod fraction;
pub mod membership;
pub mod miner;
mod paper_mode;
pub mod rules;
pub mod taxonomy;
pub mod transactions;

#[cfg(feature = "datagen")]
pub mod datagen;

#[cfg(test)]
pub(crate) mod fixture;

pub use fraction::{Fraction, FractionParseError};
pub use membership::{eta, mu_itemset, mu_single, support, Itemset, ItemsetError};
pub use miner::{
    brute_force_frequent, filter_frequent, generate_candidates, level_candidates_1, mine,
    FrequentItemsetTable, MinimumSupports, MiningConfig, MiningError, MiningResult,
    ReferenceTables,
};
pub use paper_mode::published_reference;
pub use rules::{
    confidence, generate_rules, render_rule, AssociationRule, RenderStyle, RuleError, RuleMode,
    RuleRecord,
};
pub use taxonomy::{CodeErrorKind, ItemCode, Taxonomy, TaxonomyError};
pub use transactions::{
    GroupedTransaction, SetRole, Transaction, TransactionError, TransactionSet,
};
