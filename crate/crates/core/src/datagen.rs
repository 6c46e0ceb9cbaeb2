//! Deterministic synthetic datasets for benchmarks and randomized testing.
//! Everything is derived from the seed, so runs are reproducible.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::taxonomy::{ItemCode, Taxonomy};
use crate::transactions::{Transaction, TransactionSet};

/// Upper bounds for the generated dataset; actual sizes are drawn uniformly.
#[derive(Debug, Clone)]
pub struct DatasetParams {
    pub depth: u8,
    /// Maximum branch digit per position (2 gives up to 2^depth leaves).
    pub max_branch: u8,
    pub max_leaves: usize,
    pub max_transactions: usize,
    pub max_items_per_transaction: usize,
}

impl Default for DatasetParams {
    fn default() -> Self {
        DatasetParams {
            depth: 3,
            max_branch: 3,
            max_leaves: 20,
            max_transactions: 15,
            max_items_per_transaction: 6,
        }
    }
}

/// Builds a random taxonomy and transaction database from a seed.
pub fn random_dataset(seed: u64, params: &DatasetParams) -> (Taxonomy, TransactionSet) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // enumerate all possible leaf codes, keep a random non-empty subset, and
    // list every ancestor so the taxonomy invariants hold
    let mut pool = leaf_codes(params.depth, params.max_branch);
    pool.shuffle(&mut rng);
    let leaf_count = rng.gen_range(1..=params.max_leaves.min(pool.len()));
    pool.truncate(leaf_count);

    let mut rows = std::collections::BTreeSet::new();
    for leaf in &pool {
        for level in 1..=params.depth {
            rows.insert(leaf.ancestor(level).expect("levels within leaf depth"));
        }
    }
    let table: String = rows
        .iter()
        .map(|code| format!("{code},node {code}\n"))
        .collect();
    let taxonomy = Taxonomy::parse(&table).expect("generated taxonomy is valid");

    let transaction_count = rng.gen_range(1..=params.max_transactions);
    let transactions = (1..=transaction_count)
        .map(|i| {
            let item_count = rng.gen_range(1..=params.max_items_per_transaction);
            let items = (0..item_count)
                .map(|_| pool.choose(&mut rng).expect("pool is non-empty").clone())
                .collect();
            Transaction::new(format!("T{i}"), items)
        })
        .collect();
    let set = TransactionSet::new(transactions, &taxonomy).expect("generated items are leaves");
    (taxonomy, set)
}

fn leaf_codes(depth: u8, max_branch: u8) -> Vec<ItemCode> {
    let mut texts = vec![String::new()];
    for _ in 0..depth {
        texts = texts
            .into_iter()
            .flat_map(|prefix| (1..=max_branch.min(9)).map(move |d| format!("{prefix}{d}")))
            .collect();
    }
    texts
        .into_iter()
        .map(|t| ItemCode::parse(&t, depth).expect("digit strings are valid codes"))
        .collect()
}
