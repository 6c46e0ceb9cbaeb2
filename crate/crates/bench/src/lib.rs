//! Shared setup for the mining benchmarks.

use mlfar_core::datagen::{random_dataset, DatasetParams};
use mlfar_core::{Fraction, MiningConfig, Taxonomy, TransactionSet};

pub const TAXONOMY_CSV: &str = include_str!("../../../data/grocery-taxonomy.csv");
pub const TRANSACTIONS_CSV: &str = include_str!("../../../data/grocery-transactions.csv");

pub fn bundled_example() -> (Taxonomy, TransactionSet) {
    let tax = Taxonomy::parse(TAXONOMY_CSV).expect("bundled taxonomy parses");
    let set = TransactionSet::parse(TRANSACTIONS_CSV, &tax).expect("bundled transactions parse");
    (tax, set)
}

/// A seeded synthetic workload, a few hundred transactions over a wider
/// taxonomy, with thresholds scaled to the qualified count.
pub fn synthetic_workload(seed: u64) -> (Taxonomy, TransactionSet, MiningConfig) {
    let params = DatasetParams {
        depth: 3,
        max_branch: 4,
        max_leaves: 40,
        max_transactions: 600,
        max_items_per_transaction: 8,
    };
    let (tax, set) = random_dataset(seed, &params);
    let mut cfg = MiningConfig::new(6);
    let qualified = set.qualify(cfg.gamma).len() as i64;
    for level in 1..=tax.depth() {
        // keep roughly the groups seen in a few percent of transactions
        cfg.min_support
            .set_level(level, Fraction::new(qualified.max(1), 40))
            .expect("positive");
    }
    cfg.parent_filter = false;
    (tax, set, cfg)
}
