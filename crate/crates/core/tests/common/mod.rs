//! Shared helpers for the integration tests.
#![allow(dead_code)]

use mlfar_core::{ItemCode, Itemset, Taxonomy, TransactionSet};

pub const TAXONOMY_CSV: &str = include_str!("../../../../data/grocery-taxonomy.csv");
pub const TRANSACTIONS_CSV: &str = include_str!("../../../../data/grocery-transactions.csv");

pub fn demo() -> (Taxonomy, TransactionSet) {
    let tax = Taxonomy::parse(TAXONOMY_CSV).expect("bundled taxonomy parses");
    let set = TransactionSet::parse(TRANSACTIONS_CSV, &tax).expect("bundled transactions parse");
    (tax, set)
}

pub fn code(text: &str) -> ItemCode {
    ItemCode::parse(text, 3).expect("test codes are valid")
}

pub fn itemset(codes: &[&str]) -> Itemset {
    Itemset::new(codes.iter().map(|c| code(c))).expect("test itemsets are valid")
}
