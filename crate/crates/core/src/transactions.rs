//! Transaction database loading, the cardinality qualification filter and
//! level-k grouping with occurrence counts.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::taxonomy::{ItemCode, Taxonomy};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransactionError {
    #[error("line {line}: unknown item `{item}` (not a leaf of the taxonomy)")]
    UnknownItem { line: usize, item: String },
    #[error("duplicate transaction id `{id}` on line {line}")]
    DuplicateTransactionId { id: String, line: usize },
    #[error("line {line}: transaction `{id}` has no items")]
    EmptyTransaction { id: String, line: usize },
    #[error("line {line}: expected `id, code, code, ...`")]
    MalformedRow { line: usize },
}

/// One transaction: an id and its purchased leaf items, duplicates allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transaction {
    id: String,
    items: Vec<ItemCode>,
}

impl Transaction {
    pub fn new(id: impl Into<String>, items: Vec<ItemCode>) -> Self {
        Transaction {
            id: id.into(),
            items,
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn items(&self) -> &[ItemCode] {
        &self.items
    }

    /// Number of items, counting duplicates.
    pub fn card(&self) -> usize {
        self.items.len()
    }

    /// Groups the items by their level-k ancestor, summing occurrences.
    /// Counts are conserved: the group counts add up to `card()`.
    pub fn group_at_level(&self, k: u8) -> GroupedTransaction {
        let mut groups: BTreeMap<ItemCode, u32> = BTreeMap::new();
        for item in &self.items {
            let ancestor = item
                .ancestor(k)
                .expect("leaf items always reach grouping levels 1..=depth");
            *groups.entry(ancestor).or_insert(0) += 1;
        }
        GroupedTransaction {
            id: self.id.clone(),
            level: k,
            groups: groups.into_iter().collect(),
            card: self.items.len() as u32,
        }
    }

    fn dedupe(&self) -> Transaction {
        let mut seen = Vec::new();
        for item in &self.items {
            if !seen.contains(item) {
                seen.push(item.clone());
            }
        }
        Transaction {
            id: self.id.clone(),
            items: seen,
        }
    }
}

/// Whether a set still holds the raw database or the gamma-qualified subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetRole {
    Raw,
    Qualified,
}

/// An ordered transaction database with unique ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransactionSet {
    transactions: Vec<Transaction>,
    role: SetRole,
}

impl TransactionSet {
    /// Builds a raw set, validating that ids are unique and every item is a
    /// leaf entry of `taxonomy`.
    pub fn new(
        transactions: Vec<Transaction>,
        taxonomy: &Taxonomy,
    ) -> Result<Self, TransactionError> {
        let mut ids = Vec::new();
        for (idx, t) in transactions.iter().enumerate() {
            let line = idx + 1;
            if t.items.is_empty() {
                return Err(TransactionError::EmptyTransaction {
                    id: t.id.clone(),
                    line,
                });
            }
            if ids.contains(&&t.id) {
                return Err(TransactionError::DuplicateTransactionId {
                    id: t.id.clone(),
                    line,
                });
            }
            ids.push(&t.id);
            for item in &t.items {
                if !item.is_leaf() || !taxonomy.contains(item) {
                    return Err(TransactionError::UnknownItem {
                        line,
                        item: item.to_string(),
                    });
                }
            }
        }
        Ok(TransactionSet {
            transactions,
            role: SetRole::Raw,
        })
    }

    /// Parses `id, code, code, ...` lines. Blank lines and `#` comments are
    /// skipped; whitespace around fields is ignored. Items that fail to parse
    /// as codes are reported as unknown items with their line number.
    pub fn parse(source: &str, taxonomy: &Taxonomy) -> Result<Self, TransactionError> {
        let mut transactions = Vec::new();
        let mut ids: Vec<String> = Vec::new();
        for (idx, raw) in source.lines().enumerate() {
            let line = idx + 1;
            let text = raw.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            let mut fields = text.split(',').map(str::trim);
            let id = fields.next().filter(|s| !s.is_empty());
            let id = match id {
                Some(id) => id.to_string(),
                None => return Err(TransactionError::MalformedRow { line }),
            };
            if ids.contains(&id) {
                return Err(TransactionError::DuplicateTransactionId { id, line });
            }
            let mut items = Vec::new();
            for field in fields {
                if field.is_empty() {
                    continue;
                }
                let code = ItemCode::parse(field, taxonomy.depth()).map_err(|_| {
                    TransactionError::UnknownItem {
                        line,
                        item: field.to_string(),
                    }
                })?;
                if !code.is_leaf() || !taxonomy.contains(&code) {
                    return Err(TransactionError::UnknownItem {
                        line,
                        item: field.to_string(),
                    });
                }
                items.push(code);
            }
            if items.is_empty() {
                return Err(TransactionError::EmptyTransaction { id, line });
            }
            ids.push(id.clone());
            transactions.push(Transaction { id, items });
        }
        Ok(TransactionSet {
            transactions,
            role: SetRole::Raw,
        })
    }

    /// Keeps the transactions with `card(T) <= gamma`, preserving order.
    /// The result carries the qualified role; its length is |M|.
    pub fn qualify(&self, gamma: u32) -> TransactionSet {
        TransactionSet {
            transactions: self
                .transactions
                .iter()
                .filter(|t| t.card() as u32 <= gamma)
                .cloned()
                .collect(),
            role: SetRole::Qualified,
        }
    }

    /// Collapses repeated items within each transaction to a single
    /// occurrence, keeping first-seen order. Cardinalities shrink accordingly.
    pub fn dedupe_items(&self) -> TransactionSet {
        TransactionSet {
            transactions: self.transactions.iter().map(Transaction::dedupe).collect(),
            role: self.role,
        }
    }

    pub fn role(&self) -> SetRole {
        self.role
    }

    pub fn is_qualified(&self) -> bool {
        self.role == SetRole::Qualified
    }

    pub fn len(&self) -> usize {
        self.transactions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transactions.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Transaction> {
        self.transactions.iter()
    }

    pub fn get(&self, id: &str) -> Option<&Transaction> {
        self.transactions.iter().find(|t| t.id == id)
    }

    /// Groups every transaction at level k, preserving set order.
    pub fn group_at_level(&self, k: u8) -> Vec<GroupedTransaction> {
        self.transactions
            .iter()
            .map(|t| t.group_at_level(k))
            .collect()
    }
}

/// A transaction's items rolled up to level-k groups with occurrence counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupedTransaction {
    id: String,
    level: u8,
    groups: Vec<(ItemCode, u32)>,
    card: u32,
}

impl GroupedTransaction {
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    /// Distinct level-k groups with their counts, in code order.
    pub fn groups(&self) -> &[(ItemCode, u32)] {
        &self.groups
    }

    /// Cardinality of the original transaction (with duplicates).
    pub fn card(&self) -> u32 {
        self.card
    }

    /// Occurrence count of `group`, zero when absent.
    pub fn count_of(&self, group: &ItemCode) -> u32 {
        self.groups
            .iter()
            .find(|(code, _)| code == group)
            .map(|(_, v)| *v)
            .unwrap_or(0)
    }
}
