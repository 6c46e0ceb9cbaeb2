//! Bundled demo dataset used by unit tests (same content as `data/` at the
//! workspace root).

pub const TAXONOMY_CSV: &str = include_str!("../../../data/grocery-taxonomy.csv");
pub const TRANSACTIONS_CSV: &str = include_str!("../../../data/grocery-transactions.csv");
